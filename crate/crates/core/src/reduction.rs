//! Reductions from Γ-Max-2Lin on graphs to Γ-Max-2Lin on surfaces: the
//! one-face construction and the triangulation gadget.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::budget::Budget;
use crate::covering::components;
use crate::csp::{opt_brute, Fraction, LinConstraint, Max2LinInstance};
use crate::dart::Dart;
use crate::error::{Error, Result};
use crate::homology::{face_sums, is_cocycle, Cochain1};
use crate::surface::{certificate_for_tree, one_face_embed, SurfaceComplex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeClass {
    Original,
    Connector,
    Leaf,
    Universal,
    /// Hub spokes `u – v_i` of the triangulation gadget.
    Star,
    /// Rim edges `v_i – v_{i+1}`.
    Cycle,
    /// `e_{i,ℓ}` and `e_{i,r}`.
    Link,
    /// Edges of an inserted commutator cell.
    Patch,
    /// Edges from patch vertices to the universal vertex.
    Hub,
}

impl EdgeClass {
    pub const ALL: [EdgeClass; 9] = [
        EdgeClass::Original,
        EdgeClass::Connector,
        EdgeClass::Leaf,
        EdgeClass::Universal,
        EdgeClass::Star,
        EdgeClass::Cycle,
        EdgeClass::Link,
        EdgeClass::Patch,
        EdgeClass::Hub,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EdgeClass::Original => "original",
            EdgeClass::Connector => "connector",
            EdgeClass::Leaf => "leaf",
            EdgeClass::Universal => "universal",
            EdgeClass::Star => "star",
            EdgeClass::Cycle => "cycle",
            EdgeClass::Link => "link",
            EdgeClass::Patch => "patch",
            EdgeClass::Hub => "hub",
        }
    }
}

impl fmt::Display for EdgeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EdgeClass {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<EdgeClass, String> {
        EdgeClass::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| format!("unknown edge class {s:?}"))
    }
}

/// Where the edges of a reduced complex came from.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Provenance {
    pub edge_classes: Vec<EdgeClass>,
    /// Original instance vertex of each complex vertex, if any.
    pub vertex_origin: Vec<Option<usize>>,
    /// Isolated instance vertices left out of the complex.
    pub dropped_vertices: Vec<usize>,
    pub universal: Option<usize>,
    /// Edges present before triangulation (`X'`); the gadget adds the rest.
    pub base_edge_count: Option<usize>,
    /// Hub of the triangulation gadget.
    pub hub: Option<usize>,
}

impl Provenance {
    /// Provenance that knows nothing beyond the edge count.
    pub fn plain(vertex_count: usize, edge_count: usize) -> Provenance {
        Provenance {
            edge_classes: vec![EdgeClass::Original; edge_count],
            vertex_origin: (0..vertex_count).map(Some).collect(),
            ..Provenance::default()
        }
    }

    pub fn class_counts(&self) -> BTreeMap<EdgeClass, usize> {
        let mut out = BTreeMap::new();
        for &c in &self.edge_classes {
            *out.entry(c).or_insert(0) += 1;
        }
        out
    }

    /// `|X'| : |S| : |C| : |L|` after triangulation.
    pub fn gadget_counts(&self) -> Option<[usize; 4]> {
        let base = self.base_edge_count?;
        let count = |c| self.edge_classes[base..].iter().filter(|&&x| x == c).count();
        Some([base, count(EdgeClass::Star), count(EdgeClass::Cycle), count(EdgeClass::Link)])
    }
}

/// A Γ-Max-2Lin instance whose constraint graph is the 1-skeleton of a
/// surface complex and whose shifts form a cocycle on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceInstance {
    pub complex: SurfaceComplex,
    pub cocycle: Cochain1,
    pub provenance: Provenance,
}

impl SurfaceInstance {
    pub fn new(complex: SurfaceComplex, cocycle: Cochain1, provenance: Provenance) -> Result<SurfaceInstance> {
        if cocycle.len() != complex.edge_count() || provenance.edge_classes.len() != complex.edge_count() {
            return Err(Error::input("cocycle and provenance must cover every edge"));
        }
        if let Some(f) = face_sums(&cocycle, &complex)?.iter().position(|&s| s != 0) {
            return Err(Error::NotSurface(format!("shifts around face {f} do not sum to zero")));
        }
        Ok(SurfaceInstance { complex, cocycle, provenance })
    }

    /// One constraint `x_u − x_v = a(e)` per edge `e = (u, v)`, in edge order.
    pub fn to_max2lin(&self) -> Result<Max2LinInstance> {
        let cs = self
            .complex
            .edges()
            .iter()
            .enumerate()
            .map(|(e, &(u, v))| LinConstraint { u, v, c: self.cocycle.get(e) })
            .collect();
        Max2LinInstance::new(self.cocycle.k(), self.complex.vertex_count(), cs)
    }
}

/// The one-face complex built around a constraint graph, before labels.
#[derive(Clone, Debug)]
pub struct Scaffold {
    pub complex: SurfaceComplex,
    pub provenance: Provenance,
    /// Complex edge of each input edge, same orientation.
    pub original_edges: Vec<usize>,
}

/// Drops isolated vertices, chains the components together, adds a leaf if
/// the edge count is odd, then a universal vertex, and embeds the result with
/// one face using the star tree at the universal vertex.
///
/// Edges are numbered: input edges first (in order), then connectors, the
/// leaf, and the universal edges `(w, u)` in vertex order.
pub fn one_face_scaffold(vertex_count: usize, input_edges: &[(usize, usize)]) -> Result<Scaffold> {
    if input_edges.is_empty() {
        return Err(Error::input("instance has no constraints"));
    }
    let mut degree = vec![0usize; vertex_count];
    for &(u, v) in input_edges {
        if u >= vertex_count || v >= vertex_count || u == v {
            return Err(Error::input(format!("edge ({u}, {v}) is out of range or a loop")));
        }
        degree[u] += 1;
        degree[v] += 1;
    }
    let mut renumber = vec![usize::MAX; vertex_count];
    let mut vertex_origin = Vec::new();
    let mut dropped_vertices = Vec::new();
    for w in 0..vertex_count {
        if degree[w] == 0 {
            dropped_vertices.push(w);
        } else {
            renumber[w] = vertex_origin.len();
            vertex_origin.push(Some(w));
        }
    }
    let mut edges: Vec<(usize, usize)> = input_edges.iter().map(|&(u, v)| (renumber[u], renumber[v])).collect();
    let mut classes = vec![EdgeClass::Original; edges.len()];
    let mut n = vertex_origin.len();

    let comps = components(n, &edges);
    for pair in comps.windows(2) {
        edges.push((pair[0][0], pair[1][0]));
        classes.push(EdgeClass::Connector);
    }
    if edges.len() % 2 == 1 {
        edges.push((0, n));
        classes.push(EdgeClass::Leaf);
        vertex_origin.push(None);
        n += 1;
    }
    let u = n;
    let tree: Vec<usize> = (edges.len()..edges.len() + n).collect();
    for w in 0..n {
        edges.push((w, u));
        classes.push(EdgeClass::Universal);
    }
    vertex_origin.push(None);
    n += 1;

    let cert = certificate_for_tree(n, &edges, tree)
        .ok_or_else(|| Error::Internal("star tree left an odd co-tree component".into()))?;
    let complex = one_face_embed(n, &edges, &cert)?;
    let provenance = Provenance {
        edge_classes: classes,
        vertex_origin,
        dropped_vertices,
        universal: Some(u),
        base_edge_count: None,
        hub: None,
    };
    Ok(Scaffold { complex, provenance, original_edges: (0..input_edges.len()).collect() })
}

/// Γ-Max-2Lin on a graph to Γ-Max-2Lin on a one-face surface; added edges
/// carry shift 0. With a single face every 1-cochain is a cocycle.
pub fn graph_to_one_face(inst: &Max2LinInstance) -> Result<SurfaceInstance> {
    let pairs: Vec<(usize, usize)> = inst.constraints().iter().map(|c| (c.u, c.v)).collect();
    let scaffold = one_face_scaffold(inst.vertex_count(), &pairs)?;
    let mut values = vec![0; scaffold.complex.edge_count()];
    for (c, &e) in inst.constraints().iter().zip(&scaffold.original_edges) {
        values[e] = c.c;
    }
    let cocycle = Cochain1::new(inst.k(), values);
    SurfaceInstance::new(scaffold.complex, cocycle, scaffold.provenance)
}

/// Triangulates the single face of `si` with a wheel.
///
/// For the face walk `d_0 … d_{2e−1}` (with `d_i : a_i → b_i`) this adds rim
/// vertices `v_i` and a hub `u`. New edges, in order: `S_i = (v_i, u)`,
/// `C_i = (v_i, v_{i+1})`, then `e_{i,ℓ} = (v_i, a_i)` and `e_{i,r} = (v_i, b_i)`
/// for each `i`. Each position gives the triangles `a_i b_i v_i`,
/// `b_i v_{i+1} v_i` and `v_i v_{i+1} u`.
///
/// Shifts: `e_{i,ℓ} = 0`, `S_0 = 0`, and the rest are forced by the triangles:
/// `e_{i,r} = C_i = a(d_i)` and `S_{i+1} = S_i − a(d_i)`.
pub fn triangulate_face(si: &SurfaceInstance) -> Result<SurfaceInstance> {
    let x = &si.complex;
    if x.face_count() != 1 {
        return Err(Error::input(format!("triangulation needs exactly one face, found {}", x.face_count())));
    }
    let walk = &x.faces()[0];
    let len = walk.len();
    let k = si.cocycle.k();
    let n0 = x.vertex_count();
    let e0 = x.edge_count();
    let rim = |i: usize| n0 + i % len;
    let hub = n0 + len;
    let star = |i: usize| e0 + i % len;
    let cyc = |i: usize| e0 + len + i % len;
    let left = |i: usize| e0 + 2 * len + 2 * i;
    let right = |i: usize| e0 + 2 * len + 2 * i + 1;

    let mut edges = x.edges().to_vec();
    let mut classes = si.provenance.edge_classes.clone();
    let mut values = si.cocycle.values().to_vec();
    for i in 0..len {
        edges.push((rim(i), hub));
        classes.push(EdgeClass::Star);
    }
    for i in 0..len {
        edges.push((rim(i), rim(i + 1)));
        classes.push(EdgeClass::Cycle);
    }
    for (i, &d) in walk.iter().enumerate() {
        edges.push((rim(i), x.tail(d)));
        edges.push((rim(i), x.head(d)));
        classes.extend([EdgeClass::Link, EdgeClass::Link]);
    }

    let shift: Vec<usize> = walk.iter().map(|&d| si.cocycle.on(d)).collect();
    values.resize(edges.len(), 0);
    let mut s = 0usize;
    for i in 0..len {
        values[star(i)] = s;
        values[cyc(i)] = shift[i];
        values[left(i)] = 0;
        values[right(i)] = shift[i];
        s = (s + k - shift[i]) % k;
    }
    if s != 0 {
        return Err(Error::Internal("hub shifts do not close around the wheel".into()));
    }

    let mut rotation: Vec<Vec<Dart>> = x.rotation().to_vec();
    for (i, &d) in walk.iter().enumerate() {
        // corner at b_i between rev(d_i) and d_{i+1}
        let b = x.head(d);
        let at = rotation[b].iter().position(|&y| y == d.reverse()).expect("walk dart in rotation");
        rotation[b].insert(at + 1, Dart::backward(right(i)));
        rotation[b].insert(at + 2, Dart::backward(left((i + 1) % len)));
    }
    for i in 0..len {
        let prev = (i + len - 1) % len;
        rotation.push(vec![
            Dart::forward(right(i)),
            Dart::forward(left(i)),
            Dart::backward(cyc(prev)),
            Dart::forward(star(i)),
            Dart::forward(cyc(i)),
        ]);
    }
    rotation.push((0..len).rev().map(|i| Dart::backward(star(i))).collect());

    let complex = SurfaceComplex::new(hub + 1, edges, rotation)?;
    if complex.face_count() != 3 * len || complex.faces().iter().any(|f| f.len() != 3) {
        return Err(Error::Internal("wheel did not produce triangles".into()));
    }
    let cocycle = Cochain1::new(k, values);
    if !is_cocycle(&cocycle, &complex)? {
        return Err(Error::Internal("gadget shifts are not a cocycle".into()));
    }
    let mut provenance = si.provenance.clone();
    provenance.edge_classes = classes;
    provenance.vertex_origin.extend(std::iter::repeat_n(None, len + 1));
    provenance.base_edge_count = Some(e0);
    provenance.hub = Some(hub);
    SurfaceInstance::new(complex, cocycle, provenance)
}

/// Exact optima on both sides of the triangulation gadget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapReport {
    pub rho_in: Fraction,
    pub rho_out: Fraction,
    /// `(2 + 5ρ) / 9`.
    pub lower: Fraction,
    /// `(2 + ρ) / 3`.
    pub upper: Fraction,
}

impl GapReport {
    pub fn holds(&self) -> bool {
        self.lower <= self.rho_out && self.rho_out <= self.upper
    }
}

/// Bounds on the triangulated optimum implied by the input optimum `ρ`.
pub fn gadget_bounds(rho: Fraction) -> (Fraction, Fraction) {
    let two = Fraction::from_integer(2);
    ((two + Fraction::from_integer(5) * rho) / 9, (two + rho) / 3)
}

pub fn gap_bounds_check(si_in: &SurfaceInstance, si_out: &SurfaceInstance, budget: Budget) -> Result<GapReport> {
    let a = si_in.to_max2lin()?;
    let b = si_out.to_max2lin()?;
    let rho_in = opt_brute(&a, budget)?.fraction(a.constraints().len());
    let rho_out = opt_brute(&b, budget)?.fraction(b.constraints().len());
    let (lower, upper) = gadget_bounds(rho_in);
    Ok(GapReport { rho_in, rho_out, lower, upper })
}

/// Ratio between the completeness and soundness guarantees of the gadget,
/// `(7 − 5ε₀) / (6 + 3δ₀)`.
pub fn gadget_ratio(eps0: Fraction, delta0: Fraction) -> Fraction {
    (Fraction::from_integer(7) - Fraction::from_integer(5) * eps0) / (Fraction::from_integer(6) + Fraction::from_integer(3) * delta0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::csp::{satisfied_count, Assignment};
    use crate::fixtures::{cyclic_triangle, single_edge};
    use crate::homology::{coboundary0, coholoc_brute, Cochain0};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_lin(rng: &mut ChaCha8Rng, n: usize, m: usize, k: usize) -> Max2LinInstance {
        let mut cs = Vec::new();
        while cs.len() < m {
            let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
            if u != v {
                cs.push(LinConstraint { u, v, c: rng.gen_range(0..k) });
            }
        }
        Max2LinInstance::new(k, n, cs).unwrap()
    }

    #[test]
    fn triangle_one_face() {
        let si = graph_to_one_face(&cyclic_triangle()).unwrap();
        let x = &si.complex;
        assert_eq!((x.vertex_count(), x.edge_count(), x.face_count(), x.genus()), (5, 8, 1, 2));
        let counts = si.provenance.class_counts();
        assert_eq!(counts[&EdgeClass::Leaf], 1);
        assert!(2 * (x.edge_count() - 3) <= 3 * 3 + 2);
        assert!(8 - 3 <= 3 * 3 / 2 + 1);
        assert_eq!(si.provenance.universal, Some(4));
    }

    #[test]
    fn single_edge_one_face() {
        let si = graph_to_one_face(&single_edge()).unwrap();
        let x = &si.complex;
        assert_eq!((x.vertex_count(), x.edge_count(), x.face_count()), (4, 5, 1));
    }

    #[test]
    fn isolated_vertices_and_components() {
        // vertices 2 and 5 isolated, two components {0,1} and {3,4}
        let cs = vec![LinConstraint { u: 0, v: 1, c: 1 }, LinConstraint { u: 3, v: 4, c: 2 }];
        let si = graph_to_one_face(&Max2LinInstance::new(3, 6, cs).unwrap()).unwrap();
        assert_eq!(si.provenance.dropped_vertices, vec![2, 5]);
        let counts = si.provenance.class_counts();
        assert_eq!(counts[&EdgeClass::Connector], 1);
        assert_eq!(counts[&EdgeClass::Leaf], 1);
        assert_eq!(si.complex.face_count(), 1);
        assert_eq!(si.provenance.vertex_origin[..4], [Some(0), Some(1), Some(3), Some(4)]);
        assert_eq!(si.cocycle.values()[..3], [1, 2, 0]);
    }

    #[test]
    fn empty_instance_rejected() {
        assert!(graph_to_one_face(&Max2LinInstance::new(2, 3, vec![]).unwrap()).is_err());
    }

    #[test]
    fn added_edge_bound_and_opt_sandwich() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..30 {
            let n = rng.gen_range(2..6);
            let m = rng.gen_range(1..7);
            let inst = random_lin(&mut rng, n, m, 3);
            let si = graph_to_one_face(&inst).unwrap();
            let active = (0..n).filter(|w| inst.constraints().iter().any(|c| c.u == *w || c.v == *w)).count();
            let added = si.complex.edge_count() - m;
            assert!(2 * added <= 3 * active + 2);
            assert_eq!(si.complex.face_count(), 1);
            let before = opt_brute(&inst, Budget::default()).unwrap().best_count;
            let after = opt_brute(&si.to_max2lin().unwrap(), Budget::default()).unwrap().best_count;
            assert!(before <= after && after <= before + added);
        }
    }

    #[test]
    fn every_cochain_on_output_is_a_cocycle() {
        let si = graph_to_one_face(&cyclic_triangle()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..100 {
            let a = Cochain1::new(5, (0..8).map(|_| rng.gen_range(0..5)).collect());
            assert!(is_cocycle(&a, &si.complex).unwrap());
        }
    }

    #[test]
    fn triangulation_shapes() {
        let t = triangulate_face(&graph_to_one_face(&cyclic_triangle()).unwrap()).unwrap();
        let x = &t.complex;
        assert_eq!((x.vertex_count(), x.edge_count(), x.face_count()), (22, 72, 48));
        assert_eq!(x.euler_characteristic(), -2);
        assert_eq!(t.provenance.gadget_counts(), Some([8, 16, 16, 32]));
        let s = triangulate_face(&graph_to_one_face(&single_edge()).unwrap()).unwrap();
        assert_eq!((s.complex.vertex_count(), s.complex.edge_count(), s.complex.face_count()), (15, 45, 30));
        assert!(triangulate_face(&t).is_err());
    }

    #[test]
    fn gadget_shift_structure() {
        let base = graph_to_one_face(&cyclic_triangle()).unwrap();
        let t = triangulate_face(&base).unwrap();
        let walk = &base.complex.faces()[0];
        let len = walk.len();
        let e0 = base.complex.edge_count();
        // each base edge occurs twice; its two right links carry opposite shifts
        for e in 0..e0 {
            let pos: Vec<usize> = (0..len).filter(|&i| walk[i].edge() == e).collect();
            assert_eq!(pos.len(), 2);
            let r = |i: usize| t.cocycle.get(e0 + 2 * len + 2 * i + 1);
            assert_eq!((r(pos[0]) + r(pos[1])) % 2, 0);
        }
        assert_eq!(t.cocycle.get(e0), 0);
        for i in 0..len {
            assert_eq!(t.cocycle.get(e0 + 2 * len + 2 * i), 0);
        }
    }

    #[test]
    fn satisfying_assignment_extends() {
        // the lemma's labelling: v_i copies the tail of walk position i, u copies v_0
        let base = graph_to_one_face(&single_edge()).unwrap();
        for beta in [vec![0, 1, 1, 0], vec![1, 1, 0, 1]] {
            let a = coboundary0(&Cochain0::new(2, beta.clone()), &base.complex).unwrap();
            let si = SurfaceInstance::new(base.complex.clone(), a, base.provenance.clone()).unwrap();
            let t = triangulate_face(&si).unwrap();
            let walk = &si.complex.faces()[0];
            let mut alpha = beta.clone();
            alpha.extend(walk.iter().map(|&d| beta[si.complex.tail(d)]));
            alpha.push(beta[si.complex.tail(walk[0])]);
            let inst = t.to_max2lin().unwrap();
            assert_eq!(satisfied_count(&inst, &Assignment(alpha)).unwrap(), 45);
            assert_eq!(coholoc_brute(&t.complex, &t.cocycle, Budget::default()).unwrap().min_support, 0);
        }
    }

    #[test]
    fn satisfiability_bookkeeping() {
        let t = triangulate_face(&graph_to_one_face(&cyclic_triangle()).unwrap()).unwrap();
        let inst = t.to_max2lin().unwrap();
        let base = t.provenance.base_edge_count.unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for _ in 0..50 {
            let alpha = Assignment((0..22).map(|_| rng.gen_range(0..2)).collect());
            let sat = |e: usize| inst.constraints()[e].c == (alpha.0[inst.constraints()[e].u] + 2 - alpha.0[inst.constraints()[e].v]) % 2;
            let frac = |pred: &dyn Fn(usize) -> bool| {
                let es: Vec<usize> = (0..72).filter(|&e| pred(e)).collect();
                Fraction::new(es.iter().filter(|&&e| sat(e)).count() as i64, es.len() as i64)
            };
            let classes = &t.provenance.edge_classes;
            let sx = frac(&|e| e < base);
            let ss = frac(&|e| e >= base && classes[e] == EdgeClass::Star);
            let sc = frac(&|e| e >= base && classes[e] == EdgeClass::Cycle);
            let sl = frac(&|e| e >= base && classes[e] == EdgeClass::Link);
            let total = Fraction::new(satisfied_count(&inst, &alpha).unwrap() as i64, 72);
            assert_eq!(total, (sx + ss * 2 + sc * 2 + sl * 4) / 9);
        }
    }

    #[test]
    fn gap_sandwich_single_edge() {
        let si = graph_to_one_face(&single_edge()).unwrap();
        let t = triangulate_face(&si).unwrap();
        let r = gap_bounds_check(&si, &t, Budget::default()).unwrap();
        assert_eq!(r.rho_in, Fraction::from_integer(1));
        assert_eq!(r.rho_out, Fraction::from_integer(1));
        assert_eq!(r.lower, Fraction::new(7, 9));
        assert!(r.holds());
    }

    #[test]
    fn gap_sandwich_triangle_pipeline() {
        let si = graph_to_one_face(&cyclic_triangle()).unwrap();
        let t = triangulate_face(&si).unwrap();
        let r = gap_bounds_check(&si, &t, Budget::default()).unwrap();
        assert_eq!(r.rho_in, Fraction::new(3, 4));
        assert_eq!(r.rho_out, Fraction::new(29, 36));
        assert!(r.holds());
    }

    #[test]
    fn gap_sandwich_random_small() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..4 {
            let inst = random_lin(&mut rng, 3, 2, 2);
            let si = graph_to_one_face(&inst).unwrap();
            if si.complex.edge_count() > 6 {
                continue;
            }
            let t = triangulate_face(&si).unwrap();
            assert!(gap_bounds_check(&si, &t, Budget::default()).unwrap().holds());
        }
    }

    #[test]
    fn bounds_at_two_thirds() {
        let (lo, hi) = gadget_bounds(Fraction::new(2, 3));
        assert_eq!((lo, hi), (Fraction::new(16, 27), Fraction::new(8, 9)));
    }

    #[test]
    fn ratio_arithmetic() {
        assert_eq!(gadget_ratio(Fraction::new(1, 4), Fraction::new(11, 16)), Fraction::new(92, 129));
        assert_eq!(gadget_ratio(Fraction::from_integer(0), Fraction::from_integer(1)), Fraction::new(7, 9));
    }

    #[test]
    fn triangulated_coboundary_stays_cocycle() {
        let t = triangulate_face(&graph_to_one_face(&cyclic_triangle()).unwrap()).unwrap();
        let b = coboundary0(&Cochain0::new(2, vec![1; 22]), &t.complex).unwrap();
        assert!(is_cocycle(&t.cocycle.add(&b).unwrap(), &t.complex).unwrap());
    }
}
