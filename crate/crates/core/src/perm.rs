//! Permutations of `{0..n-1}` stored as image sequences.
//!
//! Permutations act on the left of labels: `a.compose(&b)` is `a ∘ b`, which
//! applies `b` first. Every module in the crate uses this convention.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    /// Builds a permutation from its image sequence, rejecting non-bijections.
    pub fn new(images: Vec<usize>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::input(format!("{images:?} is not a permutation of 0..{n}")));
            }
            seen[x] = true;
        }
        Ok(Perm { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Perm {
        debug_assert!(Perm::new(images.clone()).is_ok());
        Perm { images }
    }

    pub fn identity(n: usize) -> Perm {
        Perm { images: (0..n).collect() }
    }

    /// The cyclic shift `i ↦ i + c mod n`.
    pub fn shift(n: usize, c: usize) -> Perm {
        Perm { images: (0..n).map(|i| (i + c) % n).collect() }
    }

    /// Builds a permutation of degree `n` from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Perm> {
        let mut images: Vec<usize> = (0..n).collect();
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                let b = cycle[(i + 1) % cycle.len()];
                if a >= n || b >= n {
                    return Err(Error::input(format!("cycle entry out of range for degree {n}")));
                }
                images[a] = b;
            }
        }
        Perm::new(images)
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Perm {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Perm { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `self ∘ other`: apply `other`, then `self`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "composing permutations of different degree");
        Perm { images: other.images.iter().map(|&i| self.images[i]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// If this permutation is a cyclic shift `i ↦ i + c`, returns `c`.
    pub fn as_shift(&self) -> Option<usize> {
        let n = self.degree();
        if n == 0 {
            return Some(0);
        }
        let c = self.images[0];
        (self.images.iter().enumerate().all(|(i, &x)| x == (i + c) % n)).then_some(c)
    }

    /// Disjoint cycles of length ≥ 2, each starting at its least element, sorted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Sorted multiset of cycle lengths, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        let moved: usize = lens.iter().sum();
        lens.extend(std::iter::repeat_n(1, self.degree() - moved));
        lens.sort_unstable();
        lens
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    /// `h⁻¹ ∘ k⁻¹ ∘ h ∘ k`.
    pub fn commutator(h: &Perm, k: &Perm) -> Perm {
        h.inverse().compose(&k.inverse()).compose(h).compose(k)
    }

    /// Some `c` with `c⁻¹ ∘ self ∘ c = target`, if the two are conjugate.
    pub fn conjugator_to(&self, target: &Perm) -> Option<Perm> {
        if self.degree() != target.degree() || self.cycle_type() != target.cycle_type() {
            return None;
        }
        // c maps each cycle of `target` onto a cycle of `self` of the same length.
        let with_fixed = |p: &Perm| {
            let mut cs = p.cycles();
            let moved: Vec<bool> = {
                let mut m = vec![false; p.degree()];
                cs.iter().flatten().for_each(|&x| m[x] = true);
                m
            };
            cs.extend((0..p.degree()).filter(|&x| !moved[x]).map(|x| vec![x]));
            cs.sort_by_key(|c| std::cmp::Reverse(c.len()));
            cs
        };
        let src = with_fixed(self);
        let dst = with_fixed(target);
        let mut images = vec![0; self.degree()];
        for (a, b) in dst.iter().zip(&src) {
            for (x, y) in a.iter().zip(b) {
                images[*x] = *y;
            }
        }
        let c = Perm::from_images_unchecked(images);
        debug_assert_eq!(c.inverse().compose(self).compose(&c), *target);
        Some(c)
    }

    /// All permutations of degree `n` in lexicographic order of image sequences.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            out.push(Perm { images: cur.clone() });
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.images)
    }
}

/// Comma-separated image sequence, the on-disk form.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for Perm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Perm> {
        let images = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::input(format!("bad permutation entry {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Perm::new(images)
    }
}

/// Closure of a generating set under composition (the generated subgroup), sorted.
/// Returns `None` if the group exceeds `cap` elements.
pub fn generated_group(n: usize, generators: &[Perm], cap: usize) -> Option<Vec<Perm>> {
    use std::collections::BTreeSet;
    let mut elems: BTreeSet<Perm> = BTreeSet::new();
    let id = Perm::identity(n);
    elems.insert(id.clone());
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for g in generators {
            let y = g.compose(&x);
            if elems.insert(y.clone()) {
                if elems.len() > cap {
                    return None;
                }
                frontier.push(y);
            }
        }
    }
    Some(elems.into_iter().collect())
}
