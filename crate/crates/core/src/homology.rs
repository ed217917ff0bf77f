//! Chains and cochains over `Z_k` on a surface complex, and exact
//! localization of (co)homology classes.
//!
//! Conventions: `∂₁(u → v) = u − v`, `(δf)(u → v) = f(u) − f(v)`, and `∂₂`
//! of a face is the signed sum of its walk. A 1-dimensional vector stores the
//! coefficient of each edge in its forward orientation.

use rayon::prelude::*;

use crate::budget::Budget;
use crate::covering::components;
use crate::csp::{Assignment, Max2LinInstance};
use crate::dart::Dart;
use crate::error::{Error, Result};
use crate::surface::{dual_complex, SurfaceComplex};

macro_rules! zk_vector {
    ($(#[$doc:meta])* $name:ident) => {
        $(#[$doc])*
        #[derive(Clone, Debug, PartialEq, Eq, Hash)]
        pub struct $name {
            k: usize,
            values: Vec<usize>,
        }

        impl $name {
            /// Coefficients are reduced mod `k`.
            pub fn new(k: usize, values: Vec<usize>) -> $name {
                assert!(k >= 1, "modulus must be positive");
                $name { k, values: values.into_iter().map(|x| x % k).collect() }
            }

            pub fn zero(k: usize, len: usize) -> $name {
                $name { k, values: vec![0; len] }
            }

            /// From signed integers, reduced mod `k`.
            pub fn from_signed(k: usize, values: &[i64]) -> $name {
                $name { k, values: values.iter().map(|&x| x.rem_euclid(k as i64) as usize).collect() }
            }

            pub fn k(&self) -> usize {
                self.k
            }

            pub fn len(&self) -> usize {
                self.values.len()
            }

            pub fn is_empty(&self) -> bool {
                self.values.is_empty()
            }

            pub fn values(&self) -> &[usize] {
                &self.values
            }

            pub fn get(&self, i: usize) -> usize {
                self.values[i]
            }

            pub fn set(&mut self, i: usize, x: usize) {
                self.values[i] = x % self.k;
            }

            /// Number of nonzero coefficients.
            pub fn support(&self) -> usize {
                self.values.iter().filter(|&&x| x != 0).count()
            }

            pub fn is_zero(&self) -> bool {
                self.values.iter().all(|&x| x == 0)
            }

            pub fn add(&self, other: &$name) -> Result<$name> {
                self.zip(other, |a, b| a + b)
            }

            pub fn sub(&self, other: &$name) -> Result<$name> {
                let k = self.k;
                self.zip(other, |a, b| a + k - b)
            }

            pub fn neg(&self) -> $name {
                $name { k: self.k, values: self.values.iter().map(|&x| (self.k - x) % self.k).collect() }
            }

            fn zip(&self, other: &$name, f: impl Fn(usize, usize) -> usize) -> Result<$name> {
                if self.k != other.k || self.len() != other.len() {
                    return Err(Error::input(format!(
                        "shape mismatch: Z_{}^{} vs Z_{}^{}",
                        self.k,
                        self.len(),
                        other.k,
                        other.len()
                    )));
                }
                let values = self.values.iter().zip(&other.values).map(|(&a, &b)| f(a, b) % self.k).collect();
                Ok($name { k: self.k, values })
            }
        }
    };
}

zk_vector!(
    /// A value per vertex.
    Cochain0
);
zk_vector!(
    /// A value per edge, read on the forward dart.
    Cochain1
);
zk_vector!(
    /// A 0-chain, a coefficient per vertex.
    Chain0
);
zk_vector!(
    /// A coefficient per edge in its forward orientation.
    Chain1
);
zk_vector!(
    /// A coefficient per face, in the complex's face order.
    Chain2
);

impl Cochain1 {
    /// Value on a dart: reversing the orientation negates it.
    pub fn on(&self, d: Dart) -> usize {
        signed(self.k, self.values[d.edge()], d)
    }
}

impl Chain1 {
    pub fn on(&self, d: Dart) -> usize {
        signed(self.k, self.values[d.edge()], d)
    }
}

fn signed(k: usize, x: usize, d: Dart) -> usize {
    if d.is_forward() {
        x
    } else {
        (k - x) % k
    }
}

fn check_len(what: &str, got: usize, want: usize) -> Result<()> {
    if got != want {
        return Err(Error::input(format!("{what} has {got} coordinates, complex needs {want}")));
    }
    Ok(())
}

pub fn boundary2(c: &Chain2, x: &SurfaceComplex) -> Result<Chain1> {
    check_len("2-chain", c.len(), x.face_count())?;
    let k = c.k();
    let mut out = vec![0usize; x.edge_count()];
    for (f, walk) in x.faces().iter().enumerate() {
        let b = c.get(f);
        for &d in walk {
            let e = d.edge();
            out[e] = (out[e] + signed(k, b, d)) % k;
        }
    }
    Ok(Chain1 { k, values: out })
}

pub fn boundary1(c: &Chain1, x: &SurfaceComplex) -> Result<Chain0> {
    check_len("1-chain", c.len(), x.edge_count())?;
    let k = c.k();
    let mut out = vec![0usize; x.vertex_count()];
    for (e, &(u, v)) in x.edges().iter().enumerate() {
        out[u] = (out[u] + c.get(e)) % k;
        out[v] = (out[v] + k - c.get(e)) % k;
    }
    Ok(Chain0 { k, values: out })
}

pub fn coboundary0(f: &Cochain0, x: &SurfaceComplex) -> Result<Cochain1> {
    check_len("0-cochain", f.len(), x.vertex_count())?;
    let k = f.k();
    let values = x.edges().iter().map(|&(u, v)| (f.get(u) + k - f.get(v)) % k).collect();
    Ok(Cochain1 { k, values })
}

/// Signed sum of `a` around each face walk.
pub fn face_sums(a: &Cochain1, x: &SurfaceComplex) -> Result<Vec<usize>> {
    check_len("1-cochain", a.len(), x.edge_count())?;
    let k = a.k();
    Ok(x.faces().iter().map(|walk| walk.iter().fold(0, |s, &d| (s + a.on(d)) % k)).collect())
}

pub fn is_cocycle(a: &Cochain1, x: &SurfaceComplex) -> Result<bool> {
    Ok(face_sums(a, x)?.iter().all(|&s| s == 0))
}

pub fn is_cycle(z: &Chain1, x: &SurfaceComplex) -> Result<bool> {
    Ok(boundary1(z, x)?.is_zero())
}

/// Optimum of a localization search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Localization<W> {
    pub min_support: usize,
    /// Lexicographically least optimal witness.
    pub witness: W,
}

/// Scans `0..k^free` in parallel for the index minimizing `score`, ties to the
/// least index. Digit 0 is the most significant.
pub(crate) fn argmin_odometer(k: usize, free: usize, total: u64, score: impl Fn(&[usize]) -> usize + Sync) -> (usize, Vec<usize>) {
    let low = free.min(8);
    let high_count = total / (k as u64).pow(low as u32);
    let best = (0..high_count)
        .into_par_iter()
        .map(|h| {
            let mut digits = vec![0usize; free];
            let mut rem = h;
            for d in (0..free - low).rev() {
                digits[d] = (rem % k as u64) as usize;
                rem /= k as u64;
            }
            let mut best: Option<(usize, Vec<usize>)> = None;
            loop {
                let s = score(&digits);
                if best.as_ref().is_none_or(|b| s < b.0) {
                    best = Some((s, digits.clone()));
                }
                // odometer over the low digits
                let mut i = free;
                loop {
                    if i == free - low {
                        return best.expect("at least one candidate");
                    }
                    i -= 1;
                    digits[i] += 1;
                    if digits[i] < k {
                        break;
                    }
                    digits[i] = 0;
                }
            }
        })
        .collect::<Vec<_>>();
    best.into_iter().min_by(|a, b| a.0.cmp(&b.0)).expect("nonempty search")
}

/// Least vertex of each component.
pub(crate) fn roots(x: &SurfaceComplex) -> Vec<usize> {
    components(x.vertex_count(), x.edges()).iter().map(|c| c[0]).collect()
}

/// Sparsest cocycle cohomologous to `a`: minimum of `support(a − δα)` with
/// `α = 0` on the least vertex of every component.
pub fn coholoc_brute(x: &SurfaceComplex, a: &Cochain1, budget: Budget) -> Result<Localization<Cochain0>> {
    if !is_cocycle(a, x)? {
        return Err(Error::violation("input 1-cochain is not a cocycle"));
    }
    let k = a.k();
    let roots = roots(x);
    let free: Vec<usize> = (0..x.vertex_count()).filter(|v| !roots.contains(v)).collect();
    let total = budget.check(k, free.len())?;
    let edges = x.edges();
    let (min_support, digits) = argmin_odometer(k, free.len(), total, |digits| {
        let mut alpha = vec![0usize; x.vertex_count()];
        for (i, &v) in free.iter().enumerate() {
            alpha[v] = digits[i];
        }
        edges.iter().enumerate().filter(|&(e, &(u, v))| (alpha[u] + k - alpha[v]) % k != a.get(e)).count()
    });
    let mut alpha = vec![0usize; x.vertex_count()];
    for (i, &v) in free.iter().enumerate() {
        alpha[v] = digits[i];
    }
    Ok(Localization { min_support, witness: Cochain0 { k, values: alpha } })
}

/// Sparsest cycle homologous to `z`: minimum of `support(z − ∂₂b)` over every
/// 2-chain `b`.
pub fn homloc_brute(x: &SurfaceComplex, z: &Chain1, budget: Budget) -> Result<Localization<Chain2>> {
    if !is_cycle(z, x)? {
        return Err(Error::violation("input 1-chain is not a cycle"));
    }
    let k = z.k();
    let faces = x.face_count();
    let total = budget.check(k, faces)?;
    // coefficient of face f on edge e is (f of +e) − (f of −e)
    let plus: Vec<usize> = (0..x.edge_count()).map(|e| x.face_of(Dart::forward(e))).collect();
    let minus: Vec<usize> = (0..x.edge_count()).map(|e| x.face_of(Dart::backward(e))).collect();
    let (min_support, b) = argmin_odometer(k, faces, total, |b| {
        (0..x.edge_count()).filter(|&e| (b[plus[e]] + k - b[minus[e]]) % k != z.get(e)).count()
    });
    Ok(Localization { min_support, witness: Chain2 { k, values: b } })
}

/// The shifts of a Γ-Max-2Lin instance living on the 1-skeleton of `x`, as a
/// 1-cochain. Constraint `i` must join the endpoints of edge `i` (either way
/// round; a reversed constraint contributes its negated shift).
pub fn maxlin_to_cocycle(inst: &Max2LinInstance, x: &SurfaceComplex) -> Result<Cochain1> {
    if inst.vertex_count() != x.vertex_count() || inst.constraints().len() != x.edge_count() {
        return Err(Error::input(format!(
            "instance ({} vertices, {} constraints) does not match complex ({} vertices, {} edges)",
            inst.vertex_count(),
            inst.constraints().len(),
            x.vertex_count(),
            x.edge_count()
        )));
    }
    let k = inst.k();
    let mut values = Vec::with_capacity(x.edge_count());
    for (e, (c, &(u, v))) in inst.constraints().iter().zip(x.edges()).enumerate() {
        if (c.u, c.v) == (u, v) {
            values.push(c.c);
        } else if (c.v, c.u) == (u, v) {
            values.push((k - c.c) % k);
        } else {
            return Err(Error::input(format!("constraint {e} ({}, {}) does not lie on edge {e} ({u}, {v})", c.u, c.v)));
        }
    }
    let a = Cochain1 { k, values };
    if let Some(f) = face_sums(&a, x)?.iter().position(|&s| s != 0) {
        return Err(Error::NotSurface(format!("shifts around face {f} do not sum to zero")));
    }
    Ok(a)
}

/// The cocycle `a − δα` attached to an assignment; its support is the number
/// of constraints `α` leaves unsatisfied.
pub fn assignment_to_representative(a: &Cochain1, alpha: &Assignment, x: &SurfaceComplex) -> Result<Cochain1> {
    let f = Cochain0::new(a.k(), alpha.0.clone());
    if alpha.0.iter().any(|&v| v >= a.k()) {
        return Err(Error::input("assignment label out of range"));
    }
    a.sub(&coboundary0(&f, x)?)
}

/// Inverse of [`assignment_to_representative`] on assignments that vanish at
/// the least vertex of every component. Fails if `r` is not cohomologous to `a`.
pub fn representative_to_assignment(a: &Cochain1, r: &Cochain1, x: &SurfaceComplex) -> Result<Assignment> {
    let diff = a.sub(r)?;
    let k = a.k();
    let mut alpha: Vec<Option<usize>> = vec![None; x.vertex_count()];
    for root in roots(x) {
        alpha[root] = Some(0);
        let mut stack = vec![root];
        while let Some(w) = stack.pop() {
            for &d in &x.rotation()[w] {
                let y = x.head(d);
                // δα(w → y) = α(w) − α(y)
                let want = (alpha[w].expect("visited") + k - diff.on(d)) % k;
                match alpha[y] {
                    None => {
                        alpha[y] = Some(want);
                        stack.push(y);
                    }
                    Some(got) if got != want => {
                        return Err(Error::violation(format!("representative differs from a on edge {} by a non-coboundary", d.edge())));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Ok(Assignment(alpha.into_iter().map(|v| v.expect("every vertex reached")).collect()))
}

/// Poincaré duality on chains: `z(e)` becomes the value of the dual cochain on
/// `e*`. Returns the dual complex together with the transported cocycle.
///
/// With `e* = face(+e) → face(−e)`, `(∂₂b)(e) = (δb)(e*)` when `b` is read as a
/// 0-cochain on dual vertices, so `support(z − ∂₂b) = support(z* − δb)`.
pub fn dual_transport(z: &Chain1, x: &SurfaceComplex) -> Result<(SurfaceComplex, Cochain1)> {
    if !is_cycle(z, x)? {
        return Err(Error::violation("input 1-chain is not a cycle"));
    }
    let dual = dual_complex(x)?;
    Ok((dual, Cochain1 { k: z.k(), values: z.values.clone() }))
}
