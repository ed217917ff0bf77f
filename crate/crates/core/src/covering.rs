//! G-covering graphs stored intensionally: a base graph, a fiber size `k` and
//! one transition permutation per oriented base edge.
//!
//! The transition on `u → v` carries a label at `u` to the label at `v` it is
//! glued to. Isomorphisms act per vertex by `g_w`, turning transitions into
//! `g_v ∘ π_uv ∘ g_u⁻¹` and sections `s` into `w ↦ g_w(s_w)`.

use std::collections::{BTreeSet, VecDeque};

use crate::csp::{Assignment, Csp, Max2LinInstance, UgConstraint, UgInstance};
use crate::dart::Dart;
use crate::error::{Error, Result};
use crate::perm::{generated_group, Perm};

/// Largest group whose membership is checked by closure enumeration (`8!`).
pub const MEMBERSHIP_CAP: usize = 40320;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupTag {
    Symmetric,
    Cyclic,
    Generators(Vec<Perm>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GCoveringGraph {
    base_vertex_count: usize,
    base_edges: Vec<(usize, usize)>,
    k: usize,
    transitions: Vec<Perm>,
    group: GroupTag,
    /// Elements of an explicitly generated group, when small enough to list.
    elements: Option<Vec<Perm>>,
}

impl GCoveringGraph {
    pub fn new(
        base_vertex_count: usize,
        base_edges: Vec<(usize, usize)>,
        k: usize,
        transitions: Vec<Perm>,
        group: GroupTag,
    ) -> Result<GCoveringGraph> {
        if base_edges.len() != transitions.len() {
            return Err(Error::input("one transition per base edge required"));
        }
        for (i, (&(u, v), t)) in base_edges.iter().zip(&transitions).enumerate() {
            if u >= base_vertex_count || v >= base_vertex_count {
                return Err(Error::input(format!("base edge {i} has an endpoint out of range")));
            }
            if t.degree() != k {
                return Err(Error::input(format!("transition {i} has degree {}, fiber size is {k}", t.degree())));
            }
        }
        let elements = match &group {
            GroupTag::Generators(gens) => {
                if gens.iter().any(|g| g.degree() != k) {
                    return Err(Error::input("generator degree differs from fiber size"));
                }
                generated_group(k, gens, MEMBERSHIP_CAP)
            }
            _ => None,
        };
        let cover = GCoveringGraph { base_vertex_count, base_edges, k, transitions, group, elements };
        for (i, t) in cover.transitions.iter().enumerate() {
            if !cover.contains(t) {
                return Err(Error::input(format!("transition {i} ({t}) lies outside the declared group")));
            }
        }
        Ok(cover)
    }

    pub fn base_vertex_count(&self) -> usize {
        self.base_vertex_count
    }

    pub fn base_edges(&self) -> &[(usize, usize)] {
        &self.base_edges
    }

    pub fn fiber_size(&self) -> usize {
        self.k
    }

    pub fn transitions(&self) -> &[Perm] {
        &self.transitions
    }

    pub fn group(&self) -> &GroupTag {
        &self.group
    }

    /// True when the declared group is too large for membership to be checked.
    pub fn membership_unchecked(&self) -> bool {
        matches!(self.group, GroupTag::Generators(_)) && self.elements.is_none()
    }

    /// Membership in the declared group; always true for unchecked groups.
    pub fn contains(&self, p: &Perm) -> bool {
        match &self.group {
            GroupTag::Symmetric => true,
            GroupTag::Cyclic => p.as_shift().is_some(),
            GroupTag::Generators(_) => self.elements.as_ref().is_none_or(|els| els.binary_search(p).is_ok()),
        }
    }

    /// Transition along a dart, inverted when the edge is traversed backwards.
    pub fn transition(&self, d: Dart) -> Perm {
        let t = &self.transitions[d.edge()];
        if d.is_forward() {
            t.clone()
        } else {
            t.inverse()
        }
    }

    /// The total space as an explicit graph on `(u, i) ↦ u·k + i`. Debugging view.
    pub fn expand(&self) -> (usize, Vec<(usize, usize)>) {
        let k = self.k;
        let edges = self
            .base_edges
            .iter()
            .zip(&self.transitions)
            .flat_map(|(&(u, v), t)| (0..k).map(move |i| (u * k + i, v * k + t.apply(i))))
            .collect();
        (self.base_vertex_count * k, edges)
    }

    /// Reads the cover back as a UG instance (transitions become constraints).
    pub fn to_ug(&self) -> Result<UgInstance> {
        let cs = self
            .base_edges
            .iter()
            .zip(&self.transitions)
            .map(|(&(u, v), t)| UgConstraint { u, v, perm: t.clone() })
            .collect();
        UgInstance::new(self.k, self.base_vertex_count, cs)
    }

    /// Reads a cyclic cover back as Γ-Max-2Lin (`label_v = label_u − c`).
    pub fn to_max2lin(&self) -> Result<Max2LinInstance> {
        let k = self.k;
        let cs = self
            .base_edges
            .iter()
            .zip(&self.transitions)
            .map(|(&(u, v), t)| {
                let s = t.as_shift().ok_or_else(|| Error::input("transition is not a cyclic shift"))?;
                Ok(crate::csp::LinConstraint { u, v, c: (k - s) % k })
            })
            .collect::<Result<Vec<_>>>()?;
        Max2LinInstance::new(k, self.base_vertex_count, cs)
    }
}

/// Label-extended cover of a UG instance: fiber over a variable is its domain.
pub fn label_extended(inst: &UgInstance) -> GCoveringGraph {
    let edges = inst.constraints().iter().map(|c| (c.u, c.v)).collect();
    let ts = inst.constraints().iter().map(|c| c.perm.clone()).collect();
    GCoveringGraph::new(inst.vertex_count(), edges, inst.k(), ts, GroupTag::Symmetric).expect("valid UG instance")
}

/// Label-extended cover of a Γ-Max-2Lin instance, tagged cyclic.
pub fn label_extended_lin(inst: &Max2LinInstance) -> GCoveringGraph {
    let ug = inst.to_ug();
    let edges = ug.constraints().iter().map(|c| (c.u, c.v)).collect();
    let ts = ug.constraints().iter().map(|c| c.perm.clone()).collect();
    GCoveringGraph::new(inst.vertex_count(), edges, inst.k(), ts, GroupTag::Cyclic).expect("valid Max-2Lin instance")
}

/// A partial section: the assignment plus the base edges over which it lifts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionDomain {
    pub assignment: Assignment,
    pub satisfied_edges: BTreeSet<usize>,
}

fn check_labels(cover: &GCoveringGraph, s: &Assignment) -> Result<()> {
    if s.0.len() != cover.base_vertex_count || s.0.iter().any(|&x| x >= cover.k) {
        return Err(Error::input("assignment does not match the cover's base and fiber size"));
    }
    Ok(())
}

pub fn assignment_to_section(cover: &GCoveringGraph, s: &Assignment) -> Result<SectionDomain> {
    check_labels(cover, s)?;
    let satisfied_edges = cover
        .base_edges
        .iter()
        .zip(&cover.transitions)
        .enumerate()
        .filter(|(_, (&(u, v), t))| t.apply(s.0[u]) == s.0[v])
        .map(|(i, _)| i)
        .collect();
    Ok(SectionDomain { assignment: s.clone(), satisfied_edges })
}

pub fn section_to_assignment(cover: &GCoveringGraph, dom: &SectionDomain) -> Result<Assignment> {
    let expected = assignment_to_section(cover, &dom.assignment)?;
    if expected.satisfied_edges != dom.satisfied_edges {
        return Err(Error::violation("section domain does not match the edges its assignment lifts over"));
    }
    Ok(dom.assignment.clone())
}

fn check_relabeling(cover: &GCoveringGraph, g: &[Perm]) -> Result<()> {
    if g.len() != cover.base_vertex_count {
        return Err(Error::input("one permutation per base vertex required"));
    }
    for (i, p) in g.iter().enumerate() {
        if p.degree() != cover.k {
            return Err(Error::input(format!("relabeling at vertex {i} has the wrong degree")));
        }
        if !cover.contains(p) {
            return Err(Error::input(format!("relabeling at vertex {i} ({p}) lies outside the declared group")));
        }
    }
    Ok(())
}

/// Applies the per-vertex relabeling `g`: `π'_uv = g_v ∘ π_uv ∘ g_u⁻¹`.
pub fn relabel(cover: &GCoveringGraph, g: &[Perm]) -> Result<GCoveringGraph> {
    check_relabeling(cover, g)?;
    let transitions = cover
        .base_edges
        .iter()
        .zip(&cover.transitions)
        .map(|(&(u, v), t)| g[v].compose(t).compose(&g[u].inverse()))
        .collect();
    Ok(GCoveringGraph { transitions, ..cover.clone() })
}

/// Carries an assignment across `relabel`: `s'_w = g_w(s_w)`.
pub fn relabel_assignment(g: &[Perm], s: &Assignment) -> Assignment {
    Assignment(s.0.iter().zip(g).map(|(&x, p)| p.apply(x)).collect())
}

/// Connected components of a graph as sorted vertex lists, ordered by least vertex.
pub fn components(vertex_count: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let adj = adjacency(vertex_count, edges);
    let mut seen = vec![false; vertex_count];
    let mut out = Vec::new();
    for r in 0..vertex_count {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        let mut comp = vec![r];
        let mut queue = VecDeque::from([r]);
        while let Some(x) = queue.pop_front() {
            for &(_, y) in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    comp.push(y);
                    queue.push_back(y);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Outgoing darts per vertex, in dart order: `(dart, other endpoint)`.
pub(crate) fn adjacency(vertex_count: usize, edges: &[(usize, usize)]) -> Vec<Vec<(Dart, usize)>> {
    let mut adj = vec![Vec::new(); vertex_count];
    for (e, &(u, v)) in edges.iter().enumerate() {
        adj[u].push((Dart::forward(e), v));
        adj[v].push((Dart::backward(e), u));
    }
    adj
}

/// Searches for `g` with `relabel(c1, g) = c2`.
///
/// Per base component: every group element is tried at the least vertex,
/// propagated along a BFS tree, and the remaining edges are verified.
pub fn check_isomorphic(c1: &GCoveringGraph, c2: &GCoveringGraph) -> Result<Option<Vec<Perm>>> {
    if c1.base_vertex_count != c2.base_vertex_count || c1.base_edges != c2.base_edges || c1.k != c2.k {
        return Err(Error::input("covers have different base graphs or fiber sizes"));
    }
    if c1.group != c2.group {
        return Err(Error::input("covers declare different groups"));
    }
    let k = c1.k;
    let candidates: Vec<Perm> = match (&c1.group, &c1.elements) {
        (GroupTag::Cyclic, _) => (0..k).map(|c| Perm::shift(k, c)).collect(),
        (GroupTag::Generators(_), Some(els)) => els.clone(),
        _ => Perm::all(k),
    };
    let edges = &c1.base_edges;
    let adj = adjacency(c1.base_vertex_count, edges);
    let mut g: Vec<Perm> = vec![Perm::identity(k); c1.base_vertex_count];

    for comp in components(c1.base_vertex_count, edges) {
        let root = comp[0];
        // BFS order: (vertex, dart reaching it from its parent)
        let mut order: Vec<(usize, Option<Dart>)> = vec![(root, None)];
        let mut seen = vec![false; c1.base_vertex_count];
        seen[root] = true;
        let mut i = 0;
        while i < order.len() {
            let x = order[i].0;
            for &(d, y) in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    order.push((y, Some(d)));
                }
            }
            i += 1;
        }
        let comp_edges: Vec<usize> =
            (0..edges.len()).filter(|&e| comp.binary_search(&edges[e].0).is_ok()).collect();

        let mut found = false;
        for cand in &candidates {
            g[root] = cand.clone();
            for &(y, via) in &order[1..] {
                let d = via.expect("non-root vertex has a parent dart");
                let x = d.tail(edges);
                // g_y = π2(d) ∘ g_x ∘ π1(d)⁻¹
                g[y] = c2.transition(d).compose(&g[x]).compose(&c1.transition(d).inverse());
            }
            let ok = comp_edges.iter().all(|&e| {
                let (u, v) = edges[e];
                g[v].compose(&c1.transitions[e]).compose(&g[u].inverse()) == c2.transitions[e]
            });
            if ok {
                found = true;
                break;
            }
        }
        if !found {
            return Ok(None);
        }
    }
    Ok(Some(g))
}

/// Composite transition along a walk of base darts; earlier darts apply first.
pub fn monodromy(cover: &GCoveringGraph, walk: &[Dart]) -> Result<Perm> {
    let edges = &cover.base_edges;
    if let Some(d) = walk.iter().find(|d| d.edge() >= edges.len()) {
        return Err(Error::input(format!("dart {d} references a missing edge")));
    }
    for (i, pair) in walk.windows(2).enumerate() {
        if pair[0].head(edges) != pair[1].tail(edges) {
            return Err(Error::input(format!("walk is disconnected between positions {i} and {}", i + 1)));
        }
    }
    Ok(walk.iter().fold(Perm::identity(cover.k), |acc, &d| cover.transition(d).compose(&acc)))
}

impl Csp for GCoveringGraph {
    fn k(&self) -> usize {
        self.k
    }
    fn vertex_count(&self) -> usize {
        self.base_vertex_count
    }
    fn constraint_count(&self) -> usize {
        self.base_edges.len()
    }
    fn endpoints(&self, i: usize) -> (usize, usize) {
        self.base_edges[i]
    }
    fn forward(&self, i: usize, label_u: usize) -> usize {
        self.transitions[i].apply(label_u)
    }
    fn backward(&self, i: usize, label_v: usize) -> usize {
        self.transitions[i].inverse().apply(label_v)
    }
}
