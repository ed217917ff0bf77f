//! Cochains with values in a permutation group, the 0-cochain action, the
//! commutator patch that closes up a one-face complex, and the principal
//! cover dictionary.
//!
//! Walk products apply earlier darts first: `f(d_m) ∘ … ∘ f(d_1)`. A cochain
//! `f` is read as the principal cover with transition `σ ↦ f(e) ∘ σ` along
//! `e`; a 0-cochain `c` satisfies `e = x → y` when `c(y) = f(e) ∘ c(x)`.

use crate::budget::Budget;
use crate::covering::MEMBERSHIP_CAP;
use crate::csp::{UgConstraint, UgInstance};
use crate::dart::Dart;
use crate::error::{Error, Result};
use crate::homology::{argmin_odometer, roots, Cochain1, Localization};
use crate::perm::{generated_group, Perm};
use crate::reduction::{one_face_scaffold, EdgeClass, Provenance};
use crate::surface::SurfaceComplex;

/// Largest degree accepted by the brute-force commutator search.
pub const MAX_COMMUTATOR_DEGREE: usize = 8;

/// One permutation per edge, read on the forward dart.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NonAbCochain1 {
    values: Vec<Perm>,
}

/// One permutation per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NonAbCochain0 {
    values: Vec<Perm>,
}

fn common_degree(values: &[Perm]) -> Result<()> {
    if let Some(p) = values.first() {
        if values.iter().any(|q| q.degree() != p.degree()) {
            return Err(Error::input("permutations of different degrees"));
        }
    }
    Ok(())
}

impl NonAbCochain1 {
    pub fn new(values: Vec<Perm>) -> Result<NonAbCochain1> {
        common_degree(&values)?;
        Ok(NonAbCochain1 { values })
    }

    pub fn identity(n: usize, edge_count: usize) -> NonAbCochain1 {
        NonAbCochain1 { values: vec![Perm::identity(n); edge_count] }
    }

    pub fn values(&self) -> &[Perm] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Value on a dart; the reverse dart carries the inverse.
    pub fn on(&self, d: Dart) -> Perm {
        let p = &self.values[d.edge()];
        if d.is_forward() {
            p.clone()
        } else {
            p.inverse()
        }
    }

    /// Number of edges with a non-identity value.
    pub fn support(&self) -> usize {
        self.values.iter().filter(|p| !p.is_identity()).count()
    }

    /// `Z_k` values as cyclic shifts: `a` becomes `i ↦ i − a`, the same
    /// permutation a Γ-Max-2Lin constraint `x_u − x_v = a` carries as UG.
    pub fn from_cyclic(a: &Cochain1) -> NonAbCochain1 {
        let k = a.k();
        NonAbCochain1 { values: a.values().iter().map(|&x| Perm::shift(k, (k - x) % k)).collect() }
    }
}

impl NonAbCochain0 {
    pub fn new(values: Vec<Perm>) -> Result<NonAbCochain0> {
        common_degree(&values)?;
        Ok(NonAbCochain0 { values })
    }

    pub fn identity(n: usize, vertex_count: usize) -> NonAbCochain0 {
        NonAbCochain0 { values: vec![Perm::identity(n); vertex_count] }
    }

    pub fn values(&self) -> &[Perm] {
        &self.values
    }

    /// Pointwise `self ∘ other`.
    pub fn compose(&self, other: &NonAbCochain0) -> Result<NonAbCochain0> {
        if self.values.len() != other.values.len() {
            return Err(Error::input("0-cochains of different lengths"));
        }
        Ok(NonAbCochain0 { values: self.values.iter().zip(&other.values).map(|(a, b)| a.compose(b)).collect() })
    }
}

/// Product of `f` along a dart walk, earlier darts applied first.
pub fn walk_product(f: &NonAbCochain1, walk: &[Dart], n: usize) -> Perm {
    walk.iter().fold(Perm::identity(n), |acc, &d| f.on(d).compose(&acc))
}

fn degree_of(f: &NonAbCochain1) -> usize {
    f.values.first().map_or(1, Perm::degree)
}

fn check_sized(f: &NonAbCochain1, x: &SurfaceComplex) -> Result<()> {
    if f.len() != x.edge_count() {
        return Err(Error::input(format!("1-cochain has {} values, complex has {} edges", f.len(), x.edge_count())));
    }
    Ok(())
}

/// Walk product of every face, starting at the face's least dart.
pub fn face_products(f: &NonAbCochain1, x: &SurfaceComplex) -> Result<Vec<Perm>> {
    check_sized(f, x)?;
    let n = degree_of(f);
    Ok(x.faces().iter().map(|w| walk_product(f, w, n)).collect())
}

pub fn nonab_is_cocycle(f: &NonAbCochain1, x: &SurfaceComplex) -> Result<bool> {
    Ok(face_products(f, x)?.iter().all(Perm::is_identity))
}

/// `(f^c)(x → y) = c(y)⁻¹ ∘ f(e) ∘ c(x)`. Identity exactly on the edges that
/// `c` satisfies, and `(f^c)^d = f^(c∘d)`.
pub fn act0(c: &NonAbCochain0, f: &NonAbCochain1, x: &SurfaceComplex) -> Result<NonAbCochain1> {
    check_sized(f, x)?;
    if c.values.len() != x.vertex_count() {
        return Err(Error::input(format!("0-cochain has {} values, complex has {} vertices", c.values.len(), x.vertex_count())));
    }
    let values = x
        .edges()
        .iter()
        .zip(&f.values)
        .map(|(&(u, v), p)| c.values[v].inverse().compose(p).compose(&c.values[u]))
        .collect();
    Ok(NonAbCochain1 { values })
}

/// Edges `x → y` with `c(y) = f(e) ∘ c(x)`.
pub fn satisfied_edges(c: &NonAbCochain0, f: &NonAbCochain1, x: &SurfaceComplex) -> Vec<usize> {
    x.edges()
        .iter()
        .enumerate()
        .filter(|&(e, &(u, v))| f.values[e].compose(&c.values[u]) == c.values[v])
        .map(|(e, _)| e)
        .collect()
}

/// Where the commutator witnesses `h, k` are searched.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ambient {
    Symmetric(usize),
    Alternating(usize),
    /// A group given by its elements.
    Explicit(Vec<Perm>),
}

impl Ambient {
    fn elements(&self) -> Result<Vec<Perm>> {
        let check = |n: usize| {
            if n > MAX_COMMUTATOR_DEGREE {
                return Err(Error::input(format!("degree {n} exceeds the search limit {MAX_COMMUTATOR_DEGREE}")));
            }
            Ok(())
        };
        match self {
            Ambient::Symmetric(n) => {
                check(*n)?;
                Ok(Perm::all(*n))
            }
            Ambient::Alternating(n) => {
                check(*n)?;
                Ok(Perm::all(*n).into_iter().filter(Perm::is_even).collect())
            }
            Ambient::Explicit(elems) => {
                if let Some(p) = elems.first() {
                    check(p.degree())?;
                }
                let mut v = elems.clone();
                v.sort();
                v.dedup();
                Ok(v)
            }
        }
    }
}

/// First `(h, k)` in lexicographic order with `h⁻¹ ∘ k⁻¹ ∘ h ∘ k = g`.
///
/// For each `h` the condition reads `k⁻¹ ∘ h ∘ k = h ∘ g`, so `h` and `h ∘ g`
/// must share a cycle type before any `k` is tried.
pub fn commutator_decompose(g: &Perm, ambient: &Ambient) -> Result<(Perm, Perm)> {
    let elems = ambient.elements()?;
    if elems.first().is_some_and(|p| p.degree() != g.degree()) {
        return Err(Error::input("element and group have different degrees"));
    }
    if matches!(ambient, Ambient::Symmetric(_) | Ambient::Alternating(_)) && !g.is_even() {
        return Err(Error::NotCommutator(format!("{g} is odd")));
    }
    if elems.binary_search(g).is_err() {
        return Err(Error::NotCommutator(format!("{g} is not in the group")));
    }
    for h in &elems {
        let target = h.compose(g);
        if h.cycle_type() != target.cycle_type() {
            continue;
        }
        for k in &elems {
            if k.inverse().compose(h).compose(k) == target {
                let w = Perm::commutator(h, k);
                if w != *g {
                    return Err(Error::Internal("commutator witness failed verification".into()));
                }
                return Ok((h.clone(), k.clone()));
            }
        }
    }
    Err(Error::NotCommutator(format!("{g} is not a single commutator in the given group")))
}

/// A permutation-labelled instance on a surface complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonAbSurfaceInstance {
    pub complex: SurfaceComplex,
    pub cochain: NonAbCochain1,
    pub provenance: Provenance,
}

/// UG(k) on a graph to a one-face complex labelled by the constraint
/// permutations; added edges carry the identity.
pub fn ug_to_one_face(inst: &UgInstance) -> Result<NonAbSurfaceInstance> {
    let pairs: Vec<(usize, usize)> = inst.constraints().iter().map(|c| (c.u, c.v)).collect();
    let scaffold = one_face_scaffold(inst.vertex_count(), &pairs)?;
    let mut values = vec![Perm::identity(inst.k()); scaffold.complex.edge_count()];
    for (c, &e) in inst.constraints().iter().zip(&scaffold.original_edges) {
        values[e] = c.perm.clone();
    }
    Ok(NonAbSurfaceInstance { complex: scaffold.complex, cochain: NonAbCochain1 { values }, provenance: scaffold.provenance })
}

/// Outgoing darts of `w` as insertion corners ("insert after this dart").
fn corners(rotation: &[Vec<Dart>], w: usize) -> Vec<Dart> {
    rotation[w].clone()
}

fn insert_after(rotation: &mut [Vec<Dart>], w: usize, after: Dart, d: Dart) {
    let i = rotation[w].iter().position(|&y| y == after).expect("corner present");
    rotation[w].insert(i + 1, d);
}

/// Adds edges `(a, u)` and `(b, u)` to a one-face complex so that it keeps
/// one face; the new edges get the next two ids.
fn insert_hub_pair(x: &SurfaceComplex, a: usize, b: usize, u: usize) -> Result<SurfaceComplex> {
    let e1 = x.edge_count();
    let e2 = e1 + 1;
    let mut edges = x.edges().to_vec();
    edges.push((a, u));
    edges.push((b, u));
    let base = x.rotation().to_vec();
    for ca in corners(&base, a) {
        for cu in corners(&base, u) {
            let mut r1 = base.clone();
            insert_after(&mut r1, a, ca, Dart::forward(e1));
            insert_after(&mut r1, u, cu, Dart::backward(e1));
            for cb in corners(&r1, b) {
                for cu2 in corners(&r1, u) {
                    let mut r2 = r1.clone();
                    insert_after(&mut r2, b, cb, Dart::forward(e2));
                    insert_after(&mut r2, u, cu2, Dart::backward(e2));
                    let c = SurfaceComplex::new(x.vertex_count(), edges.clone(), r2)?;
                    if c.face_count() == 1 {
                        return Ok(c);
                    }
                }
            }
        }
    }
    Err(Error::Internal(format!("no one-face placement for hub edges at {a} and {b}")))
}

/// Chooses the label of edge `e` so that the single face of `x` has product
/// identity, all other labels fixed. `e` must occur once in each direction.
fn solve_edge_label(x: &SurfaceComplex, values: &mut [Perm], e: usize) -> Result<()> {
    let walk = &x.faces()[0];
    let n = values[0].degree();
    let i = walk.iter().position(|&d| d == Dart::forward(e)).expect("edge in the face");
    // rotate so the walk ends with +e: [X, −e, Y, +e]
    let rotated: Vec<Dart> = walk[i + 1..].iter().chain(&walk[..=i]).copied().collect();
    let j = rotated.iter().position(|&d| d == Dart::backward(e)).expect("edge twice in the face");
    let f = NonAbCochain1 { values: values.to_vec() };
    let px = walk_product(&f, &rotated[..j], n);
    let py = walk_product(&f, &rotated[j + 1..rotated.len() - 1], n);
    // L ∘ PY ∘ L⁻¹ ∘ PX = id  ⇔  L⁻¹ ∘ PX⁻¹ ∘ L = PY
    let l = px
        .inverse()
        .conjugator_to(&py)
        .ok_or_else(|| Error::Internal(format!("hub edge {e}: face segments are not conjugate")))?;
    values[e] = l;
    Ok(())
}

/// Closes the single face of `si` into a `G`-cocycle by inserting the
/// commutator cell `x → x₁ → x₂ → x → y₁ → y₂ → x → x₂ → x₁ → x → y₂ → y₁ → x`
/// at the corner of `x` (tail of the walk's first dart) before that dart.
///
/// With walk product `g`, the cell contributes `Q⁻¹ ∘ P⁻¹ ∘ Q ∘ P` where
/// `P = f(x₁ → x₂)` and `Q = f(y₁ → y₂)`, so `g⁻¹ = [Q, P]` from
/// [`commutator_decompose`] over the symmetric group closes the face. When
/// the provenance names a universal vertex, `x₁, x₂, y₁, y₂` are joined to it
/// in two interleaved pairs; one edge of each pair is the identity and the
/// other is solved for.
pub fn patch_cell(si: &NonAbSurfaceInstance) -> Result<NonAbSurfaceInstance> {
    let x = &si.complex;
    if x.face_count() != 1 {
        return Err(Error::input(format!("patching needs exactly one face, found {}", x.face_count())));
    }
    check_sized(&si.cochain, x)?;
    let n = degree_of(&si.cochain);
    let walk = &x.faces()[0];
    let g = walk_product(&si.cochain, walk, n);
    let (h, k) = commutator_decompose(&g.inverse(), &Ambient::Symmetric(n))?;

    let base = x.tail(walk[0]);
    let last = *walk.last().expect("nonempty walk");
    let v0 = x.vertex_count();
    let (x1, x2, y1, y2) = (v0, v0 + 1, v0 + 2, v0 + 3);
    let e0 = x.edge_count();
    let mut edges = x.edges().to_vec();
    edges.extend([(base, x1), (x1, x2), (x2, base), (base, y1), (y1, y2), (y2, base)]);
    let mut values = si.cochain.values.clone();
    let id = Perm::identity(n);
    values.extend([id.clone(), k, id.clone(), id.clone(), h, id.clone()]);

    let mut rotation = x.rotation().to_vec();
    let p = Dart::forward;
    let m = Dart::backward;
    let at = rotation[base].iter().position(|&d| d == last.reverse()).expect("closing corner");
    for (i, d) in [p(e0), m(e0 + 5), m(e0 + 2), p(e0 + 3)].into_iter().enumerate() {
        rotation[base].insert(at + 1 + i, d);
    }
    rotation.push(vec![m(e0), p(e0 + 1)]);
    rotation.push(vec![m(e0 + 1), p(e0 + 2)]);
    rotation.push(vec![m(e0 + 3), p(e0 + 4)]);
    rotation.push(vec![m(e0 + 4), p(e0 + 5)]);
    let mut complex = SurfaceComplex::new(v0 + 4, edges, rotation)?;
    if complex.face_count() != 1 || complex.faces()[0].len() != walk.len() + 12 {
        return Err(Error::Internal("commutator cell did not extend the face".into()));
    }

    let mut provenance = si.provenance.clone();
    provenance.edge_classes.extend([EdgeClass::Patch; 6]);
    provenance.vertex_origin.extend([None; 4]);
    if let Some(u) = provenance.universal {
        for (a, b) in [(x1, x2), (y1, y2)] {
            complex = insert_hub_pair(&complex, a, b, u)?;
            let e = complex.edge_count();
            values.extend([id.clone(), id.clone()]);
            solve_edge_label(&complex, &mut values, e - 1)?;
            provenance.edge_classes.extend([EdgeClass::Hub; 2]);
        }
    }

    let cochain = NonAbCochain1 { values };
    if !walk_product(&cochain, &complex.faces()[0], n).is_identity() {
        return Err(Error::Internal("patched face product is not the identity".into()));
    }
    Ok(NonAbSurfaceInstance { complex, cochain, provenance })
}

/// Exact minimum of `support(f^c)`.
///
/// `c` ranges over the subgroup `H` generated by the labels, with `c = id` at
/// the least vertex of each component. This loses nothing: support is
/// invariant under `c ↦ c·g` for constant `g`, and replacing each `c(w)` by
/// `c(w)·r⁻¹`, `r` the representative of its right coset `H·c(w)`, keeps every
/// satisfied edge satisfied.
pub fn coholoc_nonab_brute(x: &SurfaceComplex, f: &NonAbCochain1, budget: Budget) -> Result<Localization<NonAbCochain0>> {
    if !nonab_is_cocycle(f, x)? {
        return Err(Error::violation("input 1-cochain is not a cocycle"));
    }
    let n = degree_of(f);
    let group = generated_group(n, &f.values, MEMBERSHIP_CAP)
        .ok_or_else(|| Error::input(format!("labels generate more than {MEMBERSHIP_CAP} elements")))?;
    let index = |p: &Perm| group.binary_search(p).expect("closed under composition");
    // left multiplication by each label on group indices
    let mult: Vec<Vec<usize>> = f.values.iter().map(|p| group.iter().map(|q| index(&p.compose(q))).collect()).collect();
    let roots = roots(x);
    let free: Vec<usize> = (0..x.vertex_count()).filter(|v| !roots.contains(v)).collect();
    let total = budget.check(group.len(), free.len())?;
    let id_index = index(&Perm::identity(n));
    let edges = x.edges();
    let assign = |digits: &[usize]| {
        let mut c = vec![id_index; x.vertex_count()];
        for (i, &v) in free.iter().enumerate() {
            c[v] = digits[i];
        }
        c
    };
    let (min_support, digits) = argmin_odometer(group.len(), free.len(), total, |digits| {
        let c = assign(digits);
        edges.iter().enumerate().filter(|&(e, &(u, v))| mult[e][c[u]] != c[v]).count()
    });
    let witness = NonAbCochain0 { values: assign(&digits).into_iter().map(|i| group[i].clone()).collect() };
    Ok(Localization { min_support, witness })
}

/// The principal cover of `f` restricted to the subgroup generated by its
/// labels, as UG over group-element labels (indices into the sorted group):
/// edge `x → y` carries `σ ↦ f(e) ∘ σ`.
pub fn principal_cover_instance(f: &NonAbCochain1, x: &SurfaceComplex) -> Result<(UgInstance, Vec<Perm>)> {
    check_sized(f, x)?;
    let n = degree_of(f);
    let group = generated_group(n, &f.values, MEMBERSHIP_CAP)
        .ok_or_else(|| Error::input(format!("labels generate more than {MEMBERSHIP_CAP} elements")))?;
    let index = |p: &Perm| group.binary_search(p).expect("closed under composition");
    let cs = x
        .edges()
        .iter()
        .zip(&f.values)
        .map(|(&(u, v), p)| {
            let images = group.iter().map(|q| index(&p.compose(q))).collect();
            Ok(UgConstraint { u, v, perm: Perm::new(images)? })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((UgInstance::new(group.len(), x.vertex_count(), cs)?, group))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrincipalCheck {
    pub holds: bool,
    /// Faces that were not triangles and got the plain face-product test.
    pub non_triangular_faces: usize,
}

/// Triple-overlap law on every triangle `i → j → k → i`: the transition
/// `i → k` equals the composite through `j`. Other faces fall back to the
/// face-product test.
pub fn principal_cover_check(f: &NonAbCochain1, x: &SurfaceComplex) -> Result<PrincipalCheck> {
    check_sized(f, x)?;
    let n = degree_of(f);
    let mut holds = true;
    let mut non_triangular_faces = 0;
    for walk in x.faces() {
        if let [d1, d2, d3] = walk[..] {
            holds &= f.on(d2).compose(&f.on(d1)) == f.on(d3.reverse());
        } else {
            non_triangular_faces += 1;
            holds &= walk_product(f, walk, n).is_identity();
        }
    }
    Ok(PrincipalCheck { holds, non_triangular_faces })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::csp::{opt_brute, random_ug, satisfied_count, Assignment};
    use crate::fixtures::{tetrahedron, torus};
    use crate::homology::{coboundary0, coholoc_brute, Cochain0};
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn cyc(n: usize, c: &[usize]) -> Perm {
        Perm::from_cycles(n, &[c]).unwrap()
    }

    fn random_perm(rng: &mut ChaCha8Rng, n: usize) -> Perm {
        let mut v: Vec<usize> = (0..n).collect();
        v.shuffle(rng);
        Perm::new(v).unwrap()
    }

    fn triangle_complex() -> SurfaceComplex {
        // a triangle on the sphere: two faces
        let edges = vec![(0, 1), (1, 2), (2, 0)];
        let rotation = vec![vec![Dart::forward(0), Dart::backward(2)], vec![Dart::forward(1), Dart::backward(0)], vec![Dart::forward(2), Dart::backward(1)]];
        SurfaceComplex::new(3, edges, rotation).unwrap()
    }

    #[test]
    fn identity_decomposes_trivially() {
        let (h, k) = commutator_decompose(&Perm::identity(4), &Ambient::Symmetric(4)).unwrap();
        assert!(h.is_identity() && k.is_identity());
    }

    #[test]
    fn three_cycle_in_s3() {
        let g = cyc(3, &[0, 1, 2]);
        let (h, k) = commutator_decompose(&g, &Ambient::Symmetric(3)).unwrap();
        assert_eq!(Perm::commutator(&h, &k), g);
        // the pair (0 1), (0 2) is also a witness; the search finds (1 2), (0 1) first
        assert_eq!(Perm::commutator(&Perm::transposition(3, 0, 1), &Perm::transposition(3, 0, 2)), g);
        assert_eq!((h, k), (Perm::transposition(3, 1, 2), Perm::transposition(3, 0, 1)));
    }

    #[test]
    fn odd_and_non_commutators_rejected() {
        assert!(matches!(commutator_decompose(&Perm::transposition(3, 0, 1), &Ambient::Symmetric(3)), Err(Error::NotCommutator(_))));
        // A_3 is abelian: its 3-cycles are not commutators inside it
        assert!(matches!(commutator_decompose(&cyc(3, &[0, 1, 2]), &Ambient::Alternating(3)), Err(Error::NotCommutator(_))));
        assert!(commutator_decompose(&Perm::identity(9), &Ambient::Symmetric(9)).is_err());
    }

    #[test]
    fn alternating_five_is_perfect() {
        let a5: Vec<Perm> = Perm::all(5).into_iter().filter(Perm::is_even).collect();
        for g in a5.iter().step_by(7) {
            let (h, k) = commutator_decompose(g, &Ambient::Alternating(5)).unwrap();
            assert!(h.is_even() && k.is_even());
            assert_eq!(Perm::commutator(&h, &k), *g);
        }
    }

    #[test]
    fn explicit_group() {
        let s3 = Perm::all(3);
        let g = cyc(3, &[0, 2, 1]);
        let (h, k) = commutator_decompose(&g, &Ambient::Explicit(s3)).unwrap();
        assert_eq!(Perm::commutator(&h, &k), g);
    }

    #[test]
    fn cocycle_examples() {
        let t = torus();
        assert!(nonab_is_cocycle(&NonAbCochain1::identity(3, 2), &t).unwrap());
        let a = Perm::transposition(3, 0, 1);
        let b = Perm::transposition(3, 1, 2);
        let commuting = NonAbCochain1::new(vec![a.clone(), a.clone()]).unwrap();
        assert!(nonab_is_cocycle(&commuting, &t).unwrap());
        let not = NonAbCochain1::new(vec![a, b]).unwrap();
        assert!(!nonab_is_cocycle(&not, &t).unwrap());
        assert!(nonab_is_cocycle(&NonAbCochain1::identity(3, 3), &t).is_err());
    }

    #[test]
    fn act0_laws() {
        let x = tetrahedron();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..30 {
            let base = NonAbCochain0::new((0..4).map(|_| random_perm(&mut rng, 4)).collect()).unwrap();
            let f = act0(&base, &NonAbCochain1::identity(4, 6), &x).unwrap();
            assert!(nonab_is_cocycle(&f, &x).unwrap());
            let c = NonAbCochain0::new((0..4).map(|_| random_perm(&mut rng, 4)).collect()).unwrap();
            let d = NonAbCochain0::new((0..4).map(|_| random_perm(&mut rng, 4)).collect()).unwrap();
            let fc = act0(&c, &f, &x).unwrap();
            assert!(nonab_is_cocycle(&fc, &x).unwrap());
            assert_eq!(act0(&d, &fc, &x).unwrap(), act0(&c.compose(&d).unwrap(), &f, &x).unwrap());
            assert_eq!(act0(&NonAbCochain0::identity(4, 4), &f, &x).unwrap(), f);
            // support identity
            assert_eq!(fc.support() + satisfied_edges(&c, &f, &x).len(), 6);
        }
    }

    #[test]
    fn act0_on_random_torus_labelings() {
        let t = torus();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..50 {
            let a = random_perm(&mut rng, 4);
            let b = a.compose(&a);
            let f = NonAbCochain1::new(vec![a, b]).unwrap();
            let c = NonAbCochain0::new(vec![random_perm(&mut rng, 4)]).unwrap();
            assert!(nonab_is_cocycle(&act0(&c, &f, &t).unwrap(), &t).unwrap());
        }
    }

    #[test]
    fn support_identity_against_ug_oracle() {
        let x = tetrahedron();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let base = NonAbCochain0::new((0..4).map(|_| random_perm(&mut rng, 3)).collect()).unwrap();
        let f = act0(&base, &NonAbCochain1::identity(3, 6), &x).unwrap();
        let (ug, group) = principal_cover_instance(&f, &x).unwrap();
        for _ in 0..40 {
            let idx: Vec<usize> = (0..4).map(|_| rng.gen_range(0..group.len())).collect();
            let c = NonAbCochain0::new(idx.iter().map(|&i| group[i].clone()).collect()).unwrap();
            let sat = satisfied_count(&ug, &Assignment(idx)).unwrap();
            assert_eq!(act0(&c, &f, &x).unwrap().support() + sat, 6);
        }
    }

    #[test]
    fn triangle_s3_localization() {
        let x = triangle_complex();
        let t = Perm::transposition(3, 0, 1);
        let f = NonAbCochain1::new(vec![t.clone(), t, Perm::identity(3)]).unwrap();
        assert!(nonab_is_cocycle(&f, &x).unwrap());
        let r = coholoc_nonab_brute(&x, &f, Budget::default()).unwrap();
        // independent oracle: every c over all of S_3 with c(0) = id
        let s3 = Perm::all(3);
        let mut best = usize::MAX;
        for a in &s3 {
            for b in &s3 {
                let c = NonAbCochain0::new(vec![Perm::identity(3), a.clone(), b.clone()]).unwrap();
                best = best.min(act0(&c, &f, &x).unwrap().support());
            }
        }
        assert_eq!(r.min_support, best);
        assert_eq!(act0(&r.witness, &f, &x).unwrap().support(), r.min_support);
        let (ug, _) = principal_cover_instance(&f, &x).unwrap();
        assert_eq!(r.min_support, 3 - opt_brute(&ug, Budget::default()).unwrap().best_count);
    }

    #[test]
    fn translate_of_identity_localizes_to_zero() {
        let x = tetrahedron();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let c = NonAbCochain0::new((0..4).map(|_| random_perm(&mut rng, 3)).collect()).unwrap();
        let f = act0(&c, &NonAbCochain1::identity(3, 6), &x).unwrap();
        assert_eq!(coholoc_nonab_brute(&x, &f, Budget::default()).unwrap().min_support, 0);
    }

    #[test]
    fn subgroup_search_matches_full_symmetric_search() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for seed in 0..10 {
            let x = crate::fixtures::random_complex(3, 2, false, seed);
            let c = NonAbCochain0::new((0..3).map(|_| random_perm(&mut rng, 3)).collect()).unwrap();
            let mut f = act0(&c, &NonAbCochain1::identity(3, x.edge_count()), &x).unwrap();
            // perturb one edge and keep it only if still a cocycle
            let mut values = f.values().to_vec();
            values[0] = random_perm(&mut rng, 3).compose(&values[0]);
            let g = NonAbCochain1::new(values).unwrap();
            if nonab_is_cocycle(&g, &x).unwrap() {
                f = g;
            }
            let s3 = Perm::all(3);
            let mut best = usize::MAX;
            for a in &s3 {
                for b in &s3 {
                    let c = NonAbCochain0::new(vec![Perm::identity(3), a.clone(), b.clone()]).unwrap();
                    best = best.min(act0(&c, &f, &x).unwrap().support());
                }
            }
            assert_eq!(coholoc_nonab_brute(&x, &f, Budget::default()).unwrap().min_support, best);
        }
    }

    #[test]
    fn cyclic_embedding_matches_abelian() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for seed in 0..15 {
            let x = crate::fixtures::random_complex(4, 3, seed % 2 == 0, seed);
            let k = 3;
            let beta = Cochain0::new(k, (0..4).map(|_| rng.gen_range(0..k)).collect());
            let mut a = coboundary0(&beta, &x).unwrap();
            a.set(0, a.get(0) + 1);
            if !crate::homology::is_cocycle(&a, &x).unwrap() {
                a.set(0, a.get(0) + k - 1);
            }
            let f = NonAbCochain1::from_cyclic(&a);
            let ab = coholoc_brute(&x, &a, Budget::default()).unwrap();
            let nab = coholoc_nonab_brute(&x, &f, Budget::default()).unwrap();
            assert_eq!(ab.min_support, nab.min_support);
            if a.is_zero() {
                continue;
            }
            let shifts: Vec<usize> = nab.witness.values().iter().map(|p| p.as_shift().unwrap()).collect();
            if generated_group(k, f.values(), 100).unwrap().len() == k {
                assert_eq!(shifts, ab.witness.values());
            }
        }
    }

    #[test]
    fn patch_on_identity_product() {
        let si = ug_to_one_face(&UgInstance::new(3, 2, vec![UgConstraint { u: 0, v: 1, perm: Perm::identity(3) }]).unwrap()).unwrap();
        let p = patch_cell(&si).unwrap();
        assert!(nonab_is_cocycle(&p.cochain, &p.complex).unwrap());
        let e0 = si.complex.edge_count();
        assert!(p.cochain.values()[e0 + 1].is_identity() && p.cochain.values()[e0 + 4].is_identity());
    }

    #[test]
    fn patch_without_universal_vertex() {
        let mut si = ug_to_one_face(&crate::fixtures::swap_triangle()).unwrap();
        si.provenance.universal = None;
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        si.cochain = NonAbCochain1::new((0..si.complex.edge_count()).map(|_| random_perm(&mut rng, 3)).collect()).unwrap();
        let len = si.complex.faces()[0].len();
        let p = patch_cell(&si).unwrap();
        assert_eq!(p.complex.vertex_count(), si.complex.vertex_count() + 4);
        assert_eq!(p.complex.edge_count(), si.complex.edge_count() + 6);
        assert_eq!(p.complex.faces()[0].len(), len + 12);
        assert!(nonab_is_cocycle(&p.cochain, &p.complex).unwrap());
        // the two 3-cycles: x → x1 → x2 → x and x → y1 → y2 → x
        let e0 = si.complex.edge_count();
        let ends = &p.complex.edges()[e0..];
        assert_eq!(ends[0].0, ends[2].1);
        assert_eq!(ends[3].0, ends[5].1);
    }

    #[test]
    fn patch_s3_triangle_with_hubs() {
        // first S_3 labelling of the triangle whose one-face walk product is (0 1 2)
        let s3 = Perm::all(3);
        let target = cyc(3, &[0, 1, 2]);
        let mut triples = Vec::new();
        for a in &s3 {
            for b in &s3 {
                for c in &s3 {
                    triples.push([a.clone(), b.clone(), c.clone()]);
                }
            }
        }
        let si = triples
            .into_iter()
            .map(|perms| {
                let cs = [(0, 1), (1, 2), (2, 0)].iter().zip(perms).map(|(&(u, v), perm)| UgConstraint { u, v, perm }).collect();
                ug_to_one_face(&UgInstance::new(3, 3, cs).unwrap()).unwrap()
            })
            .find(|si| walk_product(&si.cochain, &si.complex.faces()[0], 3) == target)
            .expect("some labelling has a 3-cycle product");
        let p = patch_cell(&si).unwrap();
        assert!(nonab_is_cocycle(&p.cochain, &p.complex).unwrap());
        assert_eq!(p.complex.face_count(), 1);
        assert_eq!(p.provenance.class_counts()[&EdgeClass::Hub], 4);
        assert_eq!(p.provenance.edge_classes.len(), p.complex.edge_count());
        // the star tree at u still certifies a one-face embedding
        assert_eq!(p.complex.genus(), (p.complex.edge_count() + 1 - p.complex.vertex_count()) / 2);
    }

    #[test]
    fn patch_random_pipelines() {
        for seed in 0..20 {
            let k = 3 + seed as usize % 2;
            let ug = random_ug(4, 4, k, seed).unwrap();
            let si = ug_to_one_face(&ug).unwrap();
            let p = patch_cell(&si).unwrap();
            assert!(nonab_is_cocycle(&p.cochain, &p.complex).unwrap());
            assert!(principal_cover_check(&p.cochain, &p.complex).unwrap().holds);
        }
    }

    #[test]
    fn patch_rejects_many_faces() {
        let x = tetrahedron();
        let si = NonAbSurfaceInstance { cochain: NonAbCochain1::identity(3, 6), provenance: Provenance::plain(4, 6), complex: x };
        assert!(patch_cell(&si).is_err());
    }

    #[test]
    fn principal_check_examples() {
        let x = tetrahedron();
        let r = principal_cover_check(&NonAbCochain1::identity(3, 6), &x).unwrap();
        assert_eq!(r, PrincipalCheck { holds: true, non_triangular_faces: 0 });
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let c = NonAbCochain0::new((0..4).map(|_| random_perm(&mut rng, 4)).collect()).unwrap();
        let f = act0(&c, &NonAbCochain1::identity(4, 6), &x).unwrap();
        assert!(principal_cover_check(&f, &x).unwrap().holds);
        let mut values = f.values().to_vec();
        values[0] = Perm::transposition(4, 0, 1).compose(&values[0]);
        let g = NonAbCochain1::new(values).unwrap();
        assert!(!principal_cover_check(&g, &x).unwrap().holds);
        assert_eq!(principal_cover_check(&g, &x).unwrap().holds, nonab_is_cocycle(&g, &x).unwrap());
        let t = torus();
        let r = principal_cover_check(&NonAbCochain1::identity(3, 2), &t).unwrap();
        assert_eq!(r, PrincipalCheck { holds: true, non_triangular_faces: 1 });
    }
}
