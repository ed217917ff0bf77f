//! Unique Games and Γ-Max-2Lin instances, assignments and their solvers.
//!
//! Constraints are stored once per undirected edge with a fixed orientation
//! `u → v`; the reverse view is computed on demand (inverse permutation or
//! negated shift), so `value` never double counts.

use std::sync::atomic::{AtomicI64, Ordering};

use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::perm::Perm;

/// Exact rational used for every reported fraction.
pub type Fraction = Ratio<i64>;

/// `label(v) = perm(label(u))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UgConstraint {
    pub u: usize,
    pub v: usize,
    pub perm: Perm,
}

impl UgConstraint {
    pub fn reversed(&self) -> UgConstraint {
        UgConstraint { u: self.v, v: self.u, perm: self.perm.inverse() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UgInstance {
    k: usize,
    vertex_count: usize,
    constraints: Vec<UgConstraint>,
}

impl UgInstance {
    pub fn new(k: usize, vertex_count: usize, constraints: Vec<UgConstraint>) -> Result<UgInstance> {
        if k == 0 {
            return Err(Error::input("domain size k must be at least 1"));
        }
        for (i, c) in constraints.iter().enumerate() {
            check_endpoints(i, c.u, c.v, vertex_count)?;
            if c.perm.degree() != k {
                return Err(Error::input(format!("constraint {i}: permutation has degree {}, expected {k}", c.perm.degree())));
            }
        }
        Ok(UgInstance { k, vertex_count, constraints })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn constraints(&self) -> &[UgConstraint] {
        &self.constraints
    }
}

/// `x_u − x_v ≡ c (mod k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LinConstraint {
    pub u: usize,
    pub v: usize,
    pub c: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Max2LinInstance {
    k: usize,
    vertex_count: usize,
    constraints: Vec<LinConstraint>,
}

impl Max2LinInstance {
    pub fn new(k: usize, vertex_count: usize, constraints: Vec<LinConstraint>) -> Result<Max2LinInstance> {
        if k < 2 {
            return Err(Error::input("modulus k must be at least 2"));
        }
        for (i, c) in constraints.iter().enumerate() {
            check_endpoints(i, c.u, c.v, vertex_count)?;
            if c.c >= k {
                return Err(Error::input(format!("constraint {i}: shift {} not reduced mod {k}", c.c)));
            }
        }
        Ok(Max2LinInstance { k, vertex_count, constraints })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn constraints(&self) -> &[LinConstraint] {
        &self.constraints
    }

    /// The same instance as UG(k): `x_u − x_v = c` means `label(v) = label(u) − c`.
    pub fn to_ug(&self) -> UgInstance {
        let k = self.k;
        let constraints = self
            .constraints
            .iter()
            .map(|c| UgConstraint { u: c.u, v: c.v, perm: Perm::shift(k, (k - c.c) % k) })
            .collect();
        UgInstance { k, vertex_count: self.vertex_count, constraints }
    }
}

fn check_endpoints(i: usize, u: usize, v: usize, n: usize) -> Result<()> {
    if u >= n || v >= n {
        return Err(Error::input(format!("constraint {i}: endpoint out of range ({u}, {v}) with {n} vertices")));
    }
    if u == v {
        return Err(Error::input(format!("constraint {i}: self-loop at vertex {u}")));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Assignment(pub Vec<usize>);

impl Assignment {
    pub fn values(&self) -> &[usize] {
        &self.0
    }
}

/// The common view of UG and Γ-Max-2Lin used by the solvers.
pub trait Csp: Sync {
    fn k(&self) -> usize;
    fn vertex_count(&self) -> usize;
    fn constraint_count(&self) -> usize;
    fn endpoints(&self, i: usize) -> (usize, usize);
    /// The label of `v` that satisfies constraint `i` given `label(u)`.
    fn forward(&self, i: usize, label_u: usize) -> usize;
    /// The label of `u` that satisfies constraint `i` given `label(v)`.
    fn backward(&self, i: usize, label_v: usize) -> usize;

    fn is_satisfied(&self, i: usize, s: &[usize]) -> bool {
        let (u, v) = self.endpoints(i);
        self.forward(i, s[u]) == s[v]
    }
}

impl Csp for UgInstance {
    fn k(&self) -> usize {
        self.k
    }
    fn vertex_count(&self) -> usize {
        self.vertex_count
    }
    fn constraint_count(&self) -> usize {
        self.constraints.len()
    }
    fn endpoints(&self, i: usize) -> (usize, usize) {
        (self.constraints[i].u, self.constraints[i].v)
    }
    fn forward(&self, i: usize, label_u: usize) -> usize {
        self.constraints[i].perm.apply(label_u)
    }
    fn backward(&self, i: usize, label_v: usize) -> usize {
        let p = &self.constraints[i].perm;
        (0..self.k).find(|&x| p.apply(x) == label_v).expect("bijection")
    }
}

impl Csp for Max2LinInstance {
    fn k(&self) -> usize {
        self.k
    }
    fn vertex_count(&self) -> usize {
        self.vertex_count
    }
    fn constraint_count(&self) -> usize {
        self.constraints.len()
    }
    fn endpoints(&self, i: usize) -> (usize, usize) {
        (self.constraints[i].u, self.constraints[i].v)
    }
    fn forward(&self, i: usize, label_u: usize) -> usize {
        (label_u + self.k - self.constraints[i].c) % self.k
    }
    fn backward(&self, i: usize, label_v: usize) -> usize {
        (label_v + self.constraints[i].c) % self.k
    }
}

fn check_assignment<C: Csp + ?Sized>(inst: &C, s: &Assignment) -> Result<()> {
    if s.0.len() != inst.vertex_count() {
        return Err(Error::input(format!(
            "assignment has {} values, instance has {} vertices",
            s.0.len(),
            inst.vertex_count()
        )));
    }
    if let Some((i, x)) = s.0.iter().enumerate().find(|(_, &x)| x >= inst.k()) {
        return Err(Error::input(format!("label {x} at vertex {i} out of range for k = {}", inst.k())));
    }
    Ok(())
}

pub fn satisfied_count<C: Csp + ?Sized>(inst: &C, s: &Assignment) -> Result<usize> {
    check_assignment(inst, s)?;
    Ok((0..inst.constraint_count()).filter(|&i| inst.is_satisfied(i, &s.0)).count())
}

/// Fraction of constraints satisfied by `s`.
pub fn value<C: Csp + ?Sized>(inst: &C, s: &Assignment) -> Result<Fraction> {
    if inst.constraint_count() == 0 {
        return Err(Error::input("instance has no constraints"));
    }
    let sat = satisfied_count(inst, s)?;
    Ok(Fraction::new(sat as i64, inst.constraint_count() as i64))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruteResult {
    pub best_count: usize,
    /// Lexicographically least optimal assignment.
    pub witness: Assignment,
}

impl BruteResult {
    pub fn fraction(&self, constraint_count: usize) -> Fraction {
        Fraction::new(self.best_count as i64, constraint_count.max(1) as i64)
    }
}

/// Exhaustive maximum over all `k^n` assignments.
///
/// Depth-first over vertices `0, 1, …` with labels ascending; a constraint is
/// scored once both endpoints are labelled. The search tree is split on a short
/// prefix and the subtrees run in parallel; the winner is the first optimal leaf
/// in lexicographic order, identical to the sequential result.
pub fn opt_brute<C: Csp + ?Sized>(inst: &C, budget: Budget) -> Result<BruteResult> {
    let n = inst.vertex_count();
    let k = inst.k();
    budget.check(k, n)?;

    // constraints keyed by their later endpoint
    let mut closing: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 0..inst.constraint_count() {
        let (u, v) = inst.endpoints(i);
        closing[u.max(v)].push(i);
    }
    // remaining[d] = constraints closed at depth ≥ d
    let mut remaining = vec![0i64; n + 1];
    for d in (0..n).rev() {
        remaining[d] = remaining[d + 1] + closing[d].len() as i64;
    }

    let mut prefix_len = 0;
    let mut prefixes: u64 = 1;
    while prefix_len < n && prefixes < 256 {
        prefixes *= k as u64;
        prefix_len += 1;
    }

    let global = AtomicI64::new(-1);
    let search = Search { inst, closing: &closing, remaining: &remaining, global: &global };
    let results: Vec<Option<(i64, Vec<usize>)>> = (0..prefixes)
        .into_par_iter()
        .map(|p| {
            let mut labels = vec![0usize; n];
            let mut rem = p;
            for d in (0..prefix_len).rev() {
                labels[d] = (rem % k as u64) as usize;
                rem /= k as u64;
            }
            let mut score = 0i64;
            for d in 0..prefix_len {
                score += search.closed_at(d, &labels);
            }
            let mut best: Option<(i64, Vec<usize>)> = None;
            search.dfs(prefix_len, score, &mut labels, &mut best);
            best
        })
        .collect();

    let mut best: Option<(i64, Vec<usize>)> = None;
    for r in results.into_iter().flatten() {
        if best.as_ref().is_none_or(|b| r.0 > b.0) {
            best = Some(r);
        }
    }
    let (count, witness) = best.ok_or_else(|| Error::Internal("exhaustive search found no assignment".into()))?;
    Ok(BruteResult { best_count: count as usize, witness: Assignment(witness) })
}

struct Search<'a, C: Csp + ?Sized> {
    inst: &'a C,
    closing: &'a [Vec<usize>],
    remaining: &'a [i64],
    global: &'a AtomicI64,
}

impl<C: Csp + ?Sized> Search<'_, C> {
    fn closed_at(&self, d: usize, labels: &[usize]) -> i64 {
        self.closing[d].iter().filter(|&&i| self.inst.is_satisfied(i, labels)).count() as i64
    }

    fn dfs(&self, d: usize, score: i64, labels: &mut Vec<usize>, best: &mut Option<(i64, Vec<usize>)>) {
        let local = best.as_ref().map_or(-1, |b| b.0);
        let bound = score + self.remaining[d];
        if bound <= local || bound < self.global.load(Ordering::Relaxed) {
            return;
        }
        if d == labels.len() {
            *best = Some((score, labels.clone()));
            self.global.fetch_max(score, Ordering::Relaxed);
            return;
        }
        for x in 0..self.inst.k() {
            labels[d] = x;
            let s = score + self.closed_at(d, labels);
            self.dfs(d + 1, s, labels, best);
        }
        labels[d] = 0;
    }
}

/// Greedy labelling that satisfies at least `⌈v⁺/2⌉` constraints, `v⁺` being
/// the number of vertices of degree ≥ 1.
///
/// Vertices are visited in ascending id order. An unused vertex takes its
/// least-id incident constraint: if the neighbour is unused too, the vertex
/// gets label 0 and the neighbour the label satisfying the constraint;
/// otherwise the vertex gets the label that satisfies it against the
/// neighbour's fixed label.
pub fn greedy_half<C: Csp + ?Sized>(inst: &C) -> Assignment {
    let n = inst.vertex_count();
    let mut first_edge: Vec<Option<usize>> = vec![None; n];
    for i in 0..inst.constraint_count() {
        let (u, v) = inst.endpoints(i);
        for w in [u, v] {
            if first_edge[w].is_none() {
                first_edge[w] = Some(i);
            }
        }
    }
    let mut labels: Vec<Option<usize>> = vec![None; n];
    for w in 0..n {
        if labels[w].is_some() {
            continue;
        }
        let Some(i) = first_edge[w] else { continue };
        let (u, v) = inst.endpoints(i);
        if w == u {
            match labels[v] {
                None => {
                    labels[u] = Some(0);
                    labels[v] = Some(inst.forward(i, 0));
                }
                Some(lv) => labels[u] = Some(inst.backward(i, lv)),
            }
        } else {
            match labels[u] {
                None => {
                    labels[v] = Some(0);
                    labels[u] = Some(inst.backward(i, 0));
                }
                Some(lu) => labels[v] = Some(inst.forward(i, lu)),
            }
        }
    }
    Assignment(labels.into_iter().map(|x| x.unwrap_or(0)).collect())
}

/// Number of vertices with at least one incident constraint.
pub fn active_vertex_count<C: Csp + ?Sized>(inst: &C) -> usize {
    let mut active = vec![false; inst.vertex_count()];
    for i in 0..inst.constraint_count() {
        let (u, v) = inst.endpoints(i);
        active[u] = true;
        active[v] = true;
    }
    active.into_iter().filter(|&a| a).count()
}

/// Completeness/soundness bookkeeping for padding an instance with at most
/// `a·v` extra constraints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapParams {
    pub eps: Fraction,
    pub delta: Fraction,
    pub a: Fraction,
    pub big_delta: Fraction,
}

impl GapParams {
    pub fn eps0(&self) -> Fraction {
        self.eps + self.big_delta
    }

    pub fn delta0(&self) -> Fraction {
        self.delta + self.big_delta
    }

    /// `2δa / (1 + 2δa)`, the exclusive lower end of the admissible Δ interval.
    pub fn lower_limit(&self) -> Fraction {
        padding_lower_limit(self.delta, self.a)
    }
}

fn padding_lower_limit(delta: Fraction, a: Fraction) -> Fraction {
    let two = Fraction::from_integer(2);
    let t = two * delta * a;
    t / (Fraction::from_integer(1) + t)
}

/// Picks Δ just above the admissible lower limit: `L·101/100`, or `1/1000`
/// when `L = 0`.
pub fn pad_gap(eps: Fraction, delta: Fraction, a: Fraction) -> Result<GapParams> {
    let zero = Fraction::from_integer(0);
    let one = Fraction::from_integer(1);
    if !(eps > zero && eps < one && delta > zero && delta < one) {
        return Err(Error::input("eps and delta must lie in (0, 1)"));
    }
    if a < zero {
        return Err(Error::input("edge-addition slope a must be non-negative"));
    }
    let lower = padding_lower_limit(delta, a);
    let big_delta = if lower == zero { Fraction::new(1, 1000) } else { lower * Fraction::new(101, 100) };
    if big_delta >= one {
        return Err(Error::GapCollapsed(format!("Δ = {big_delta} is not below 1")));
    }
    let params = GapParams { eps, delta, a, big_delta };
    if params.eps0() >= one {
        return Err(Error::GapCollapsed(format!("ε₀ = ε + Δ = {} is not below 1", params.eps0())));
    }
    Ok(params)
}

/// Planted Γ-Max-2Lin instance on a random `degree`-regular multigraph.
///
/// Stubs are paired by a seeded shuffle (configuration model), reshuffling up
/// to 100 times to avoid self-loops; loops that survive are dropped. Each
/// constraint is set to the value satisfied by a hidden assignment and then,
/// with probability `noise`, shifted by a uniform nonzero offset.
pub fn gen_planted(n: usize, degree: usize, k: usize, noise: f64, seed: u64) -> Result<Max2LinInstance> {
    if !(n * degree).is_multiple_of(2) {
        return Err(Error::input(format!("n·degree = {} must be even", n * degree)));
    }
    if !(0.0..=1.0).contains(&noise) {
        return Err(Error::input("noise must lie in [0, 1]"));
    }
    if k < 2 {
        return Err(Error::input("modulus k must be at least 2"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, degree)).collect();
    for _ in 0..100 {
        stubs.shuffle(&mut rng);
        if stubs.chunks(2).all(|p| p[0] != p[1]) {
            break;
        }
    }
    let hidden: Vec<usize> = (0..n).map(|_| rng.gen_range(0..k)).collect();
    let mut constraints = Vec::with_capacity(stubs.len() / 2);
    for pair in stubs.chunks(2) {
        let (u, v) = (pair[0], pair[1]);
        if u == v {
            continue;
        }
        let mut c = (hidden[u] + k - hidden[v]) % k;
        if rng.gen_bool(noise) {
            c = (c + rng.gen_range(1..k)) % k;
        }
        constraints.push(LinConstraint { u, v, c });
    }
    Max2LinInstance::new(k, n, constraints)
}

/// Uniformly random UG(k) instance with `m` constraints on `n ≥ 2` vertices.
pub fn random_ug(n: usize, m: usize, k: usize, seed: u64) -> Result<UgInstance> {
    if n < 2 && m > 0 {
        return Err(Error::input("need at least two vertices to place a constraint"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut constraints = Vec::with_capacity(m);
    for _ in 0..m {
        let u = rng.gen_range(0..n);
        let mut v = rng.gen_range(0..n - 1);
        if v >= u {
            v += 1;
        }
        let mut images: Vec<usize> = (0..k).collect();
        images.shuffle(&mut rng);
        constraints.push(UgConstraint { u, v, perm: Perm::from_images_unchecked(images) });
    }
    UgInstance::new(k, n, constraints)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lin(k: usize, n: usize, cs: &[(usize, usize, usize)]) -> Max2LinInstance {
        Max2LinInstance::new(k, n, cs.iter().map(|&(u, v, c)| LinConstraint { u, v, c }).collect()).unwrap()
    }

    fn triangle() -> Max2LinInstance {
        lin(2, 3, &[(0, 1, 1), (1, 2, 1), (2, 0, 1)])
    }

    /// Independent oracle: plain odometer over every assignment.
    fn odometer_best<C: Csp>(inst: &C) -> (usize, Vec<usize>) {
        let (n, k) = (inst.vertex_count(), inst.k());
        let mut s = vec![0; n];
        let mut best = (0, s.clone());
        let mut first = true;
        loop {
            let c = (0..inst.constraint_count()).filter(|&i| inst.is_satisfied(i, &s)).count();
            if first || c > best.0 {
                best = (c, s.clone());
                first = false;
            }
            let mut d = n;
            loop {
                if d == 0 {
                    return best;
                }
                d -= 1;
                s[d] += 1;
                if s[d] < k {
                    break;
                }
                s[d] = 0;
            }
        }
    }

    #[test]
    fn value_examples() {
        let single = lin(2, 2, &[(0, 1, 0)]);
        assert_eq!(value(&single, &Assignment(vec![0, 0])).unwrap(), Fraction::from_integer(1));
        assert_eq!(value(&triangle(), &Assignment(vec![0, 0, 0])).unwrap(), Fraction::from_integer(0));
        assert_eq!(value(&triangle(), &Assignment(vec![0, 1, 0])).unwrap(), Fraction::new(2, 3));
    }

    #[test]
    fn value_errors() {
        assert!(value(&triangle(), &Assignment(vec![0, 1])).is_err());
        assert!(value(&triangle(), &Assignment(vec![0, 2, 0])).is_err());
        let empty = lin(2, 2, &[]);
        assert!(value(&empty, &Assignment(vec![0, 0])).is_err());
    }

    #[test]
    fn instance_validation() {
        assert!(Max2LinInstance::new(2, 2, vec![LinConstraint { u: 0, v: 0, c: 0 }]).is_err());
        assert!(Max2LinInstance::new(2, 2, vec![LinConstraint { u: 0, v: 1, c: 2 }]).is_err());
        assert!(Max2LinInstance::new(2, 2, vec![LinConstraint { u: 0, v: 2, c: 0 }]).is_err());
        assert!(UgInstance::new(3, 2, vec![UgConstraint { u: 0, v: 1, perm: Perm::identity(2) }]).is_err());
    }

    #[test]
    fn reversed_views_agree() {
        let inst = lin(5, 2, &[(0, 1, 3)]);
        let ug = inst.to_ug();
        let rev = ug.constraints()[0].reversed();
        for lu in 0..5 {
            let lv = inst.forward(0, lu);
            assert_eq!(ug.forward(0, lu), lv);
            assert_eq!(rev.perm.apply(lv), lu);
            assert_eq!(inst.backward(0, lv), lu);
            // reverse orientation carries shift −c
            assert_eq!((lv + 5 - lu) % 5, 2);
        }
    }

    #[test]
    fn opt_brute_examples() {
        let r = opt_brute(&triangle(), Budget::default()).unwrap();
        assert_eq!(r.best_count, 2);
        assert_eq!(r.witness, Assignment(vec![0, 0, 1]));
        assert_eq!(r.fraction(3), Fraction::new(2, 3));
        assert_eq!(opt_brute(&lin(2, 2, &[(0, 1, 0)]), Budget::default()).unwrap().best_count, 1);
        let four_cycle = lin(2, 4, &[(0, 1, 1), (1, 2, 0), (2, 3, 0), (3, 0, 0)]);
        assert_eq!(opt_brute(&four_cycle, Budget::default()).unwrap().best_count, 3);
    }

    #[test]
    fn opt_brute_refuses_over_budget() {
        let inst = gen_planted(30, 2, 2, 0.0, 1).unwrap();
        assert!(matches!(opt_brute(&inst, Budget::default()), Err(Error::Budget { .. })));
    }

    #[test]
    fn opt_brute_matches_odometer_oracle() {
        for seed in 0..40 {
            let inst = random_ug(5, 8, 3, seed).unwrap();
            let r = opt_brute(&inst, Budget::default()).unwrap();
            let (count, witness) = odometer_best(&inst);
            assert_eq!(r.best_count, count, "seed {seed}");
            assert_eq!(r.witness.0, witness, "seed {seed}");
            assert_eq!(satisfied_count(&inst, &r.witness).unwrap(), r.best_count);
        }
    }

    #[test]
    fn opt_brute_independent_of_thread_count() {
        let inst = gen_planted(10, 3, 3, 0.4, 9).unwrap();
        let run = |t| {
            rayon::ThreadPoolBuilder::new().num_threads(t).build().unwrap().install(|| opt_brute(&inst, Budget::default()))
        };
        assert_eq!(run(1).unwrap(), run(4).unwrap());
    }

    #[test]
    fn greedy_examples() {
        let s = greedy_half(&triangle());
        assert!(satisfied_count(&triangle(), &s).unwrap() >= 2);
        let single = lin(2, 2, &[(0, 1, 1)]);
        assert_eq!(satisfied_count(&single, &greedy_half(&single)).unwrap(), 1);
        let two = lin(2, 4, &[(0, 1, 1), (2, 3, 0)]);
        assert_eq!(satisfied_count(&two, &greedy_half(&two)).unwrap(), 2);
    }

    #[test]
    fn pad_gap_examples() {
        let p = pad_gap(Fraction::new(1, 10), Fraction::new(1, 10), Fraction::new(3, 2)).unwrap();
        assert_eq!(p.lower_limit(), Fraction::new(3, 13));
        assert_eq!(p.big_delta, Fraction::new(303, 1300));
        assert!(p.big_delta > p.lower_limit());
        assert_eq!(p.eps0(), Fraction::new(1, 10) + Fraction::new(303, 1300));
        assert_eq!(p.delta0(), Fraction::new(1, 10) + Fraction::new(303, 1300));
        let p0 = pad_gap(Fraction::new(1, 5), Fraction::new(1, 3), Fraction::from_integer(0)).unwrap();
        assert_eq!(p0.big_delta, Fraction::new(1, 1000));
    }

    #[test]
    fn pad_gap_collapse() {
        let e = pad_gap(Fraction::new(9, 10), Fraction::new(1, 2), Fraction::from_integer(10)).unwrap_err();
        assert!(matches!(e, Error::GapCollapsed(_)));
        assert!(pad_gap(Fraction::from_integer(0), Fraction::new(1, 2), Fraction::from_integer(1)).is_err());
    }

    #[test]
    fn gen_planted_examples() {
        let inst = gen_planted(8, 3, 3, 0.0, 4).unwrap();
        assert_eq!(opt_brute(&inst, Budget::default()).unwrap().best_count, inst.constraints().len());
        let noisy = gen_planted(6, 2, 2, 1.0, 3).unwrap();
        let r = opt_brute(&noisy, Budget::default()).unwrap();
        assert!(r.fraction(noisy.constraints().len()) < Fraction::from_integer(1));
        assert_eq!(gen_planted(4, 2, 3, 0.0, 1).unwrap(), gen_planted(4, 2, 3, 0.0, 1).unwrap());
        assert!(gen_planted(3, 3, 2, 0.0, 1).is_err());
    }

    #[test]
    fn translation_invariance() {
        let inst = gen_planted(8, 3, 5, 0.3, 2).unwrap();
        let s = Assignment(vec![0, 1, 2, 3, 4, 0, 1, 2]);
        let shifted = Assignment(s.0.iter().map(|x| (x + 3) % 5).collect());
        assert_eq!(value(&inst, &s).unwrap(), value(&inst, &shifted).unwrap());
    }
}
