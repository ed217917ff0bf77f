//! Xuong certificates and the constructive one-face embedding they drive.
//!
//! A spanning tree `T` whose co-tree components all have an even number of
//! edges lets the co-tree be split into pairs of adjacent edges. Embedding `T`
//! gives one face; inserting each pair so that its first edge splits the face
//! and its second edge rejoins the two halves keeps a single face throughout.

use std::collections::{BTreeSet, VecDeque};

use super::SurfaceComplex;
use crate::covering::{adjacency, components};
use crate::dart::Dart;
use crate::error::{Error, Result};

/// Exhaustive spanning-tree search is used up to this many edges.
pub const EXHAUSTIVE_EDGE_LIMIT: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XuongCertificate {
    /// Spanning-tree edge ids, ascending.
    pub tree: Vec<usize>,
    /// Co-tree edges in adjacent pairs.
    pub pairing: Vec<(usize, usize)>,
}

impl XuongCertificate {
    pub fn validate(&self, vertex_count: usize, edges: &[(usize, usize)]) -> Result<()> {
        if self.tree.len() + 1 != vertex_count.max(1) || !spans(vertex_count, edges, &self.tree) {
            return Err(Error::input("certificate tree is not a spanning tree"));
        }
        let tree: BTreeSet<usize> = self.tree.iter().copied().collect();
        let mut covered = BTreeSet::new();
        for &(a, b) in &self.pairing {
            if a >= edges.len() || b >= edges.len() || tree.contains(&a) || tree.contains(&b) {
                return Err(Error::input(format!("pair ({a}, {b}) is not made of co-tree edges")));
            }
            if !covered.insert(a) || !covered.insert(b) {
                return Err(Error::input(format!("pair ({a}, {b}) reuses an edge")));
            }
            let (x, y) = edges[a];
            let (z, w) = edges[b];
            if !(x == z || x == w || y == z || y == w) {
                return Err(Error::input(format!("edges {a} and {b} share no endpoint")));
            }
        }
        if covered.len() + tree.len() != edges.len() {
            return Err(Error::input("pairing does not cover the co-tree"));
        }
        Ok(())
    }
}

fn spans(vertex_count: usize, edges: &[(usize, usize)], tree: &[usize]) -> bool {
    let sub: Vec<(usize, usize)> = tree.iter().filter_map(|&e| edges.get(e).copied()).collect();
    sub.len() == tree.len() && components(vertex_count, &sub).len() == 1
}

fn bfs_tree(vertex_count: usize, adj: &[Vec<(Dart, usize)>], root: usize) -> Vec<usize> {
    let mut seen = vec![false; vertex_count];
    seen[root] = true;
    let mut tree = Vec::new();
    let mut queue = VecDeque::from([root]);
    while let Some(x) = queue.pop_front() {
        for &(d, y) in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                tree.push(d.edge());
                queue.push_back(y);
            }
        }
    }
    tree.sort_unstable();
    tree
}

/// Union-find over vertices with path halving.
fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Every spanning tree of a connected graph with at most `limit` edges, in
/// lexicographic order of edge sets.
pub fn spanning_trees(vertex_count: usize, edges: &[(usize, usize)], limit: usize) -> Option<Vec<Vec<usize>>> {
    if edges.len() > limit {
        return None;
    }
    let need = vertex_count.saturating_sub(1);
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn rec(
        start: usize,
        need: usize,
        vertex_count: usize,
        edges: &[(usize, usize)],
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if chosen.len() == need {
            let mut parent: Vec<usize> = (0..vertex_count).collect();
            for &e in chosen.iter() {
                let (u, v) = edges[e];
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                if a == b {
                    return;
                }
                parent[a] = b;
            }
            out.push(chosen.clone());
            return;
        }
        for e in start..edges.len() {
            if edges.len() - e < need - chosen.len() {
                break;
            }
            chosen.push(e);
            rec(e + 1, need, vertex_count, edges, chosen, out);
            chosen.pop();
        }
    }
    rec(0, need, vertex_count, edges, &mut chosen, &mut out);
    Some(out)
}

/// Splits the co-tree of `tree` into adjacent pairs, or `None` if some co-tree
/// component has an odd number of edges.
///
/// Within each component: DFS, hand every non-DFS-tree edge to its later
/// discovered endpoint, then sweep vertices bottom-up pairing the edges held
/// at each vertex; an odd leftover is paired with the edge to the parent.
fn pair_cotree(vertex_count: usize, edges: &[(usize, usize)], tree: &[usize]) -> Option<Vec<(usize, usize)>> {
    let in_tree: BTreeSet<usize> = tree.iter().copied().collect();
    let cotree: Vec<usize> = (0..edges.len()).filter(|e| !in_tree.contains(e)).collect();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); vertex_count];
    for &e in &cotree {
        let (u, v) = edges[e];
        adj[u].push((e, v));
        if u != v {
            adj[v].push((e, u));
        }
    }

    let mut disc = vec![usize::MAX; vertex_count];
    let mut parent_edge: Vec<Option<usize>> = vec![None; vertex_count];
    let mut parent: Vec<usize> = (0..vertex_count).collect();
    let mut order = Vec::new();
    let mut pairing = Vec::new();
    for root in 0..vertex_count {
        if disc[root] != usize::MAX || adj[root].is_empty() {
            continue;
        }
        let first = order.len();
        disc[root] = order.len();
        order.push(root);
        let mut stack = vec![(root, 0usize)];
        while let Some(&mut (x, ref mut i)) = stack.last_mut() {
            if *i < adj[x].len() {
                let (e, y) = adj[x][*i];
                *i += 1;
                if disc[y] == usize::MAX {
                    disc[y] = order.len();
                    order.push(y);
                    parent_edge[y] = Some(e);
                    parent[y] = x;
                    stack.push((y, 0));
                }
            } else {
                stack.pop();
            }
        }
        let comp = &order[first..];
        let mut held: Vec<Vec<usize>> = vec![Vec::new(); vertex_count];
        let comp_edges: BTreeSet<usize> = comp.iter().flat_map(|&x| adj[x].iter().map(|&(e, _)| e)).collect();
        if comp_edges.len() % 2 == 1 {
            return None;
        }
        for &e in &comp_edges {
            let (u, v) = edges[e];
            if parent_edge[u] == Some(e) || parent_edge[v] == Some(e) {
                continue;
            }
            let owner = if disc[u] >= disc[v] { u } else { v };
            held[owner].push(e);
        }
        for &x in comp.iter().rev() {
            let mut mine = std::mem::take(&mut held[x]);
            if mine.len() % 2 == 1 {
                let pe = parent_edge[x].expect("root holds an even number of edges");
                mine.push(pe);
            } else if let Some(pe) = parent_edge[x] {
                held[parent[x]].push(pe);
            }
            for pair in mine.chunks(2) {
                pairing.push((pair[0], pair[1]));
            }
        }
    }
    Some(pairing)
}

/// Looks for a spanning tree with all co-tree components even.
///
/// Tries BFS trees from each vertex, highest degree first (a BFS tree from a
/// vertex adjacent to everything is its star), then DFS-free exhaustive search
/// over all spanning trees when the graph has at most 16 edges. `Ok(None)`
/// means no tried tree works, which is exact in the exhaustive range.
pub fn xuong_certificate(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Option<XuongCertificate>> {
    if vertex_count == 0 || components(vertex_count, edges).len() != 1 {
        return Err(Error::input("graph must be connected and non-empty"));
    }
    let adj = adjacency(vertex_count, edges);
    let mut roots: Vec<usize> = (0..vertex_count).collect();
    roots.sort_by_key(|&v| (std::cmp::Reverse(adj[v].len()), v));
    let mut tried = BTreeSet::new();
    for &r in &roots {
        let tree = bfs_tree(vertex_count, &adj, r);
        if !tried.insert(tree.clone()) {
            continue;
        }
        if let Some(pairing) = pair_cotree(vertex_count, edges, &tree) {
            return Ok(Some(XuongCertificate { tree, pairing }));
        }
    }
    if let Some(trees) = spanning_trees(vertex_count, edges, EXHAUSTIVE_EDGE_LIMIT) {
        for tree in trees {
            if tried.contains(&tree) {
                continue;
            }
            if let Some(pairing) = pair_cotree(vertex_count, edges, &tree) {
                return Ok(Some(XuongCertificate { tree, pairing }));
            }
        }
    }
    Ok(None)
}

/// Certificate built on a prescribed spanning tree.
pub(crate) fn certificate_for_tree(vertex_count: usize, edges: &[(usize, usize)], tree: Vec<usize>) -> Option<XuongCertificate> {
    let pairing = pair_cotree(vertex_count, edges, &tree)?;
    Some(XuongCertificate { tree, pairing })
}

/// A rotation system under construction: only inserted edges are present.
struct PartialRotation<'a> {
    edges: &'a [(usize, usize)],
    rot: Vec<Vec<Dart>>,
}

impl PartialRotation<'_> {
    fn next_map(&self) -> Vec<Option<Dart>> {
        let mut next = vec![None; 2 * self.edges.len()];
        for darts in &self.rot {
            for (i, &d) in darts.iter().enumerate() {
                next[d.index()] = Some(darts[(i + 1) % darts.len()]);
            }
        }
        next
    }

    /// Faces as dart walks; a vertex without darts counts as one empty face.
    fn faces(&self) -> Vec<Vec<Dart>> {
        let next = self.next_map();
        let mut seen = vec![false; next.len()];
        let mut faces = Vec::new();
        for i in 0..next.len() {
            if next[i].is_none() || seen[i] {
                continue;
            }
            let mut walk = Vec::new();
            let mut d = Dart::from_index(i);
            while !seen[d.index()] {
                seen[d.index()] = true;
                walk.push(d);
                d = next[d.reverse().index()].expect("reverse of a present dart is present");
            }
            faces.push(walk);
        }
        faces.extend(self.rot.iter().filter(|r| r.is_empty()).map(|_| Vec::new()));
        faces
    }

    /// Corners at `w` as "insert after" positions, ordered by where the face
    /// walks arrive at them; `None` is the corner of a vertex without darts.
    fn corners(&self, w: usize, faces: &[Vec<Dart>]) -> Vec<Option<Dart>> {
        if self.rot[w].is_empty() {
            return vec![None];
        }
        faces
            .iter()
            .flatten()
            .filter(|d| d.head(self.edges) == w)
            .map(|d| Some(d.reverse()))
            .collect()
    }

    fn insert(&mut self, d: Dart, after: Option<Dart>) {
        let w = d.tail(self.edges);
        match after {
            None => self.rot[w].push(d),
            Some(x) => {
                let i = self.rot[w].iter().position(|&y| y == x).expect("corner dart present");
                self.rot[w].insert(i + 1, d);
            }
        }
    }

    fn remove(&mut self, d: Dart) {
        let w = d.tail(self.edges);
        self.rot[w].retain(|&y| y != d);
    }

    fn insert_edge(&mut self, e: usize, at_tail: Option<Dart>, at_head: Option<Dart>) {
        self.insert(Dart::forward(e), at_tail);
        self.insert(Dart::backward(e), at_head);
    }

    fn remove_edge(&mut self, e: usize) {
        self.remove(Dart::forward(e));
        self.remove(Dart::backward(e));
    }
}

/// One-face embedding driven by a certificate.
pub fn one_face_embed(vertex_count: usize, edges: &[(usize, usize)], cert: &XuongCertificate) -> Result<SurfaceComplex> {
    one_face_embed_with(vertex_count, edges, cert, None)
}

/// As [`one_face_embed`], optionally starting from a given rotation of the tree
/// edges instead of dart order.
pub fn one_face_embed_with(
    vertex_count: usize,
    edges: &[(usize, usize)],
    cert: &XuongCertificate,
    tree_rotation: Option<Vec<Vec<Dart>>>,
) -> Result<SurfaceComplex> {
    cert.validate(vertex_count, edges)?;
    let rot = match tree_rotation {
        Some(r) => r,
        None => {
            let mut r = vec![Vec::new(); vertex_count];
            for &e in &cert.tree {
                let (u, v) = edges[e];
                r[u].push(Dart::forward(e));
                r[v].push(Dart::backward(e));
            }
            r.iter_mut().for_each(|darts| darts.sort_unstable());
            r
        }
    };
    let mut pr = PartialRotation { edges, rot };
    if pr.faces().len() != 1 {
        return Err(Error::input("tree rotation does not give a single face"));
    }

    for &(e1, e2) in &cert.pairing {
        // first edge at the first corners of its endpoints
        let faces = pr.faces();
        let (u1, v1) = edges[e1];
        let c_u = pr.corners(u1, &faces)[0];
        let c_v = if u1 == v1 { c_u } else { pr.corners(v1, &faces)[0] };
        pr.insert_edge(e1, c_u, c_v);

        // second edge at the earliest corner pair that merges the two faces
        let faces = pr.faces();
        let (u2, v2) = edges[e2];
        let tails = pr.corners(u2, &faces);
        let heads = pr.corners(v2, &faces);
        let mut placed = false;
        'search: for &a in &tails {
            for &b in &heads {
                pr.insert_edge(e2, a, b);
                if pr.faces().len() == 1 {
                    placed = true;
                    break 'search;
                }
                pr.remove_edge(e2);
            }
        }
        if !placed {
            return Err(Error::Internal(format!("no interleaving corners for pair ({e1}, {e2})")));
        }
    }
    let c = SurfaceComplex::new(vertex_count, edges.to_vec(), pr.rot)?;
    if c.face_count() != 1 {
        return Err(Error::Internal(format!("embedding has {} faces", c.face_count())));
    }
    Ok(c)
}
