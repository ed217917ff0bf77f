//! The KKMO reduction UG(k) → Γ-Max-2Lin(q): squaring, bundling each label set
//! into `Z_q^k`, folding out constant vectors and emitting one linear
//! constraint per (squared constraint, folded tuple).
//!
//! Coordinates are 0-based; the distinguished coordinate is index 0. A
//! permutation acts on tuples by moving coordinates, `(p^π)_b = p_{π⁻¹(b)}`.

use rayon::prelude::*;

use crate::budget::Budget;
use crate::csp::{LinConstraint, Max2LinInstance, UgConstraint, UgInstance};
use crate::error::{Error, Result};
use crate::perm::Perm;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SquareOptions {
    /// Keep the original constraints alongside the two-step ones.
    pub keep_original: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Squared {
    pub instance: UgInstance,
    /// Two-step walks `i → w → i` over parallel constraints; these would be
    /// self-loops and are not emitted.
    pub dropped_loops: usize,
}

/// Squares with default options (original constraints discarded).
pub fn square(inst: &UgInstance) -> UgInstance {
    square_with(inst, SquareOptions::default()).instance
}

/// For every vertex `w` and every unordered pair of distinct constraint
/// occurrences `(i, w)`, `(w, j)` with `i ≠ j`, emits the constraint `i → j`
/// whose permutation is `π_{w→j} ∘ π_{i→w}`. Pairs are oriented from the
/// lower-indexed occurrence to the higher one and emitted by `(w, pair)`.
pub fn square_with(inst: &UgInstance, opts: SquareOptions) -> Squared {
    let n = inst.vertex_count();
    // occurrences at w, oriented to end at w: (other endpoint, π_{other→w})
    let mut incident: Vec<Vec<(usize, Perm)>> = vec![Vec::new(); n];
    for c in inst.constraints() {
        incident[c.v].push((c.u, c.perm.clone()));
        incident[c.u].push((c.v, c.perm.inverse()));
    }
    let mut constraints = if opts.keep_original { inst.constraints().to_vec() } else { Vec::new() };
    let mut dropped_loops = 0;
    for occ in &incident {
        for (a, (i, into_w)) in occ.iter().enumerate() {
            for (j, into_w_from_j) in &occ[a + 1..] {
                if i == j {
                    dropped_loops += 1;
                    continue;
                }
                let perm = into_w_from_j.inverse().compose(into_w);
                constraints.push(UgConstraint { u: *i, v: *j, perm });
            }
        }
    }
    let instance = UgInstance::new(inst.k(), n, constraints).expect("squared constraints are well formed");
    Squared { instance, dropped_loops }
}

/// A `k`-tuple over `Z_q` modulo constant vectors, represented with `coords[0] = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FoldedTuple {
    coords: Vec<usize>,
}

impl FoldedTuple {
    pub fn coords(&self) -> &[usize] {
        &self.coords
    }

    /// `[t]^π`, folded.
    pub fn act(&self, pi: &Perm, q: usize) -> FoldedTuple {
        fold_canonical(&permute_coords(&self.coords, pi), q)
    }

    /// Lexicographic rank among canonical tuples: coordinates `1..k` read as a
    /// base-`q` number, coordinate 1 most significant.
    pub fn rank(&self, q: usize) -> usize {
        self.coords[1..].iter().fold(0, |acc, &x| acc * q + x)
    }

    pub fn from_rank(rank: usize, k: usize, q: usize) -> FoldedTuple {
        let mut coords = vec![0; k];
        let mut r = rank;
        for c in coords[1..].iter_mut().rev() {
            *c = r % q;
            r /= q;
        }
        FoldedTuple { coords }
    }
}

/// `(p^π)_b = p_{π⁻¹(b)}`, i.e. coordinate `a` moves to position `π(a)`.
pub fn permute_coords(p: &[usize], pi: &Perm) -> Vec<usize> {
    let mut out = vec![0; p.len()];
    for (a, &x) in p.iter().enumerate() {
        out[pi.apply(a)] = x;
    }
    out
}

/// Subtracts the first coordinate from every coordinate, mod `q`.
pub fn fold_canonical(raw: &[usize], q: usize) -> FoldedTuple {
    let Some(&first) = raw.first() else { return FoldedTuple { coords: Vec::new() } };
    FoldedTuple { coords: raw.iter().map(|&x| (x % q + q - first % q) % q).collect() }
}

/// `p_0 − p_{π⁻¹(0)} mod q`, independent of the representative of `[p]`.
pub fn constraint_shift(p: &[usize], pi: &Perm, q: usize) -> usize {
    let j = pi.inverse().apply(0);
    (p[0] % q + q - p[j] % q) % q
}

/// Vertex naming of a KKMO output: `(i, t) ↦ i·q^{k−1} + rank(t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KkmoLayout {
    pub n: usize,
    pub k: usize,
    pub q: usize,
}

impl KkmoLayout {
    pub fn tuples_per_vertex(&self) -> usize {
        self.q.pow(self.k.saturating_sub(1) as u32)
    }

    pub fn vertex_count(&self) -> usize {
        self.n * self.tuples_per_vertex()
    }

    pub fn vertex_id(&self, i: usize, t: &FoldedTuple) -> usize {
        i * self.tuples_per_vertex() + t.rank(self.q)
    }

    pub fn vertex_name(&self, id: usize) -> (usize, FoldedTuple) {
        let m = self.tuples_per_vertex();
        (id / m, FoldedTuple::from_rank(id % m, self.k, self.q))
    }
}

/// Squares `inst`, then emits for each squared constraint `(i, j, π)` and each
/// canonical tuple `t` (in rank order) the constraint
/// `x_(i,[t]) − x_(j,[t]^π) = t_0 − t_{π⁻¹(0)}` over `Z_q`.
pub fn kkmo_reduce(inst: &UgInstance, q: usize, budget: Budget) -> Result<(Max2LinInstance, KkmoLayout)> {
    if q < 2 {
        return Err(Error::input("q must be at least 2"));
    }
    let k = inst.k();
    let layout = KkmoLayout { n: inst.vertex_count(), k, q };
    let per_vertex = budget.check(q, k.saturating_sub(1))? as usize;
    if (per_vertex as u128) * (inst.vertex_count() as u128) > budget.0 as u128 {
        return Err(Error::Budget { needed: format!("{}·{q}^{}", inst.vertex_count(), k - 1), budget: budget.0 });
    }
    let squared = square(inst);
    let constraints: Vec<LinConstraint> = squared
        .constraints()
        .par_iter()
        .flat_map_iter(|c| {
            (0..per_vertex).map(move |r| {
                let t = FoldedTuple::from_rank(r, k, q);
                let target = t.act(&c.perm, q);
                LinConstraint {
                    u: layout.vertex_id(c.u, &t),
                    v: layout.vertex_id(c.v, &target),
                    c: constraint_shift(t.coords(), &c.perm, q),
                }
            })
        })
        .collect();
    Ok((Max2LinInstance::new(q, layout.vertex_count(), constraints)?, layout))
}

fn check_witness(inst: &UgInstance, g: &[Perm]) -> Result<()> {
    if g.len() != inst.vertex_count() || g.iter().any(|p| p.degree() != inst.k()) {
        return Err(Error::input("relabeling witness does not match the instance"));
    }
    Ok(())
}

/// Per-vertex shifts `c(i, t) = t[g_i⁻¹(0)] − t[0]` that carry
/// `kkmo_reduce(inst)` onto `kkmo_reduce(relabel(inst, g))`, up to the vertex
/// renaming of [`transport_renaming`].
pub fn transport_iso(inst: &UgInstance, g: &[Perm], q: usize) -> Result<Vec<usize>> {
    check_witness(inst, g)?;
    let layout = KkmoLayout { n: inst.vertex_count(), k: inst.k(), q };
    Ok((0..layout.vertex_count())
        .map(|id| {
            let (i, t) = layout.vertex_name(id);
            let c = t.coords();
            (c[g[i].inverse().apply(0)] + q - c[0]) % q
        })
        .collect())
}

/// The vertex renaming `(i, [t]) ↦ (i, [t]^{g_i})`.
pub fn transport_renaming(inst: &UgInstance, g: &[Perm], q: usize) -> Result<Vec<usize>> {
    check_witness(inst, g)?;
    let layout = KkmoLayout { n: inst.vertex_count(), k: inst.k(), q };
    Ok((0..layout.vertex_count())
        .map(|id| {
            let (i, t) = layout.vertex_name(id);
            layout.vertex_id(i, &t.act(&g[i], q))
        })
        .collect())
}

/// Relabels a UG instance vertex-wise, `π'_uv = g_v ∘ π_uv ∘ g_u⁻¹`.
pub fn relabel_instance(inst: &UgInstance, g: &[Perm]) -> Result<UgInstance> {
    check_witness(inst, g)?;
    let cs = inst
        .constraints()
        .iter()
        .map(|c| UgConstraint { u: c.u, v: c.v, perm: g[c.v].compose(&c.perm).compose(&g[c.u].inverse()) })
        .collect();
    UgInstance::new(inst.k(), inst.vertex_count(), cs)
}
