//! Cell decompositions of closed orientable surfaces given by rotation systems.
//!
//! A rotation lists the outgoing darts of each vertex in cyclic order. Faces
//! are the orbits of `d ↦ next(reverse(d))`, where `next` is the rotation
//! successor at the head of `d`. Faces are reported sorted by their least dart
//! and each walk starts at that dart.

mod xuong;

pub(crate) use xuong::certificate_for_tree;
pub use xuong::{one_face_embed, one_face_embed_with, spanning_trees, xuong_certificate, XuongCertificate};

use crate::covering::components;
use crate::dart::Dart;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceComplex {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    rotation: Vec<Vec<Dart>>,
    faces: Vec<Vec<Dart>>,
    rot_next: Vec<Dart>,
    face_of: Vec<usize>,
}

impl SurfaceComplex {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>, rotation: Vec<Vec<Dart>>) -> Result<SurfaceComplex> {
        let rot_next = rotation_successors(vertex_count, &edges, &rotation)?;
        if let Some(w) = rotation.iter().position(Vec::is_empty) {
            return Err(Error::input(format!("vertex {w} has no incident edges")));
        }
        let faces = orbits(&rot_next, (0..2 * edges.len()).map(Dart::from_index));
        let mut face_of = vec![0; 2 * edges.len()];
        for (f, walk) in faces.iter().enumerate() {
            for d in walk {
                face_of[d.index()] = f;
            }
        }
        Ok(SurfaceComplex { vertex_count, edges, rotation, faces, rot_next, face_of })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn rotation(&self) -> &[Vec<Dart>] {
        &self.rotation
    }

    pub fn faces(&self) -> &[Vec<Dart>] {
        &self.faces
    }

    pub fn tail(&self, d: Dart) -> usize {
        d.tail(&self.edges)
    }

    pub fn head(&self, d: Dart) -> usize {
        d.head(&self.edges)
    }

    /// Rotation successor of an outgoing dart at its tail.
    pub fn rotation_next(&self, d: Dart) -> Dart {
        self.rot_next[d.index()]
    }

    /// Next dart along the face containing `d`.
    pub fn face_successor(&self, d: Dart) -> Dart {
        self.rot_next[d.reverse().index()]
    }

    pub fn face_of(&self, d: Dart) -> usize {
        self.face_of[d.index()]
    }

    /// `V − E + F`.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }

    pub fn component_count(&self) -> usize {
        components(self.vertex_count, &self.edges).len()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// Total genus, summed over components: `(2c − χ) / 2`.
    pub fn genus(&self) -> usize {
        let twice = 2 * self.component_count() as i64 - self.euler_characteristic();
        debug_assert!(twice >= 0 && twice % 2 == 0, "orientable rotation systems have even χ deficit");
        (twice / 2) as usize
    }

    /// Face walk of face `f` rotated to start at the first dart leaving `start`.
    pub fn walk_from(&self, f: usize, start: usize) -> Option<Vec<Dart>> {
        let walk = &self.faces[f];
        let i = walk.iter().position(|&d| self.tail(d) == start)?;
        Some(walk[i..].iter().chain(&walk[..i]).copied().collect())
    }
}

/// `next[d]` = successor of outgoing dart `d` in the rotation at its tail.
fn rotation_successors(vertex_count: usize, edges: &[(usize, usize)], rotation: &[Vec<Dart>]) -> Result<Vec<Dart>> {
    if rotation.len() != vertex_count {
        return Err(Error::input(format!("rotation lists {} vertices, expected {vertex_count}", rotation.len())));
    }
    if let Some((e, _)) = edges.iter().enumerate().find(|(_, &(u, v))| u >= vertex_count || v >= vertex_count) {
        return Err(Error::input(format!("edge {e} has an endpoint out of range")));
    }
    let mut next: Vec<Option<Dart>> = vec![None; 2 * edges.len()];
    for (w, darts) in rotation.iter().enumerate() {
        for (i, &d) in darts.iter().enumerate() {
            if d.edge() >= edges.len() {
                return Err(Error::input(format!("rotation at {w} references missing edge {}", d.edge())));
            }
            if d.tail(edges) != w {
                return Err(Error::input(format!("dart {d} in rotation at {w} does not leave {w}")));
            }
            if next[d.index()].is_some() {
                return Err(Error::input(format!("dart {d} appears twice in the rotation")));
            }
            next[d.index()] = Some(darts[(i + 1) % darts.len()]);
        }
    }
    next.into_iter()
        .enumerate()
        .map(|(i, n)| n.ok_or_else(|| Error::input(format!("dart {} missing from the rotation", Dart::from_index(i)))))
        .collect()
}

/// Orbits of `d ↦ rot_next[reverse(d)]` over the given darts, sorted by least dart.
fn orbits(rot_next: &[Dart], darts: impl Iterator<Item = Dart>) -> Vec<Vec<Dart>> {
    let mut seen = vec![false; rot_next.len()];
    let mut faces = Vec::new();
    for start in darts {
        if seen[start.index()] {
            continue;
        }
        let mut walk = Vec::new();
        let mut d = start;
        while !seen[d.index()] {
            seen[d.index()] = true;
            walk.push(d);
            d = rot_next[d.reverse().index()];
        }
        faces.push(walk);
    }
    faces
}

/// Faces of a rotation system.
pub fn trace_faces(vertex_count: usize, edges: &[(usize, usize)], rotation: &[Vec<Dart>]) -> Result<Vec<Vec<Dart>>> {
    let next = rotation_successors(vertex_count, edges, rotation)?;
    Ok(orbits(&next, (0..2 * edges.len()).map(Dart::from_index)))
}

/// Poincaré dual: a vertex per face, a face per vertex, and `e*` running from
/// the face of `+e` to the face of `−e`. Dart `±e*` of the dual has the same
/// index as `±e`; the rotation at a dual vertex follows its face walk.
pub fn dual_complex(c: &SurfaceComplex) -> Result<SurfaceComplex> {
    if !c.is_connected() {
        return Err(Error::input("dual of a disconnected complex is not supported"));
    }
    let edges: Vec<(usize, usize)> =
        (0..c.edge_count()).map(|e| (c.face_of(Dart::forward(e)), c.face_of(Dart::backward(e)))).collect();
    let rotation = c.faces.clone();
    SurfaceComplex::new(c.face_count(), edges, rotation)
}

/// For each dual face, the primal vertex it surrounds.
pub fn dual_face_vertices(primal: &SurfaceComplex, dual: &SurfaceComplex) -> Vec<usize> {
    dual.faces().iter().map(|walk| primal.tail(walk[0])).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{tetrahedron, torus};

    #[test]
    fn tetrahedron_is_a_sphere() {
        let t = tetrahedron();
        assert_eq!(t.face_count(), 4);
        assert_eq!(t.euler_characteristic(), 2);
        assert_eq!(t.genus(), 0);
        assert!(t.faces().iter().all(|f| f.len() == 3));
    }

    /// Pins the face-tracing convention on the tetrahedron (counter-clockwise
    /// rotations): the face through `+0` is the outer triangle 0 → 1 → 2.
    #[test]
    fn tracing_convention() {
        let t = tetrahedron();
        assert_eq!(t.faces()[0], vec![Dart::forward(0), Dart::forward(1), Dart::forward(2)]);
        let inner = t.face_of(Dart::backward(0));
        assert_eq!(t.faces()[inner], vec![Dart::backward(0), Dart::forward(3), Dart::backward(4)]);
    }

    #[test]
    fn torus_walk() {
        let t = torus();
        assert_eq!(t.faces(), &[vec![Dart::forward(0), Dart::forward(1), Dart::backward(0), Dart::backward(1)]]);
        assert_eq!(t.genus(), 1);
    }

    #[test]
    fn single_loop_traces_two_faces() {
        let c = SurfaceComplex::new(1, vec![(0, 0)], vec![vec![Dart::forward(0), Dart::backward(0)]]).unwrap();
        assert_eq!(c.face_count(), 2);
        assert_eq!(c.euler_characteristic(), 2);
        assert_eq!(c.genus(), 0);
    }

    #[test]
    fn tree_has_one_face() {
        let edges = vec![(0, 1), (1, 2), (1, 3), (3, 4)];
        let p = Dart::forward;
        let m = Dart::backward;
        for rot1 in [vec![m(0), p(1), p(2)], vec![m(0), p(2), p(1)]] {
            let rotation = vec![vec![p(0)], rot1, vec![m(1)], vec![m(2), p(3)], vec![m(3)]];
            let c = SurfaceComplex::new(5, edges.clone(), rotation).unwrap();
            assert_eq!(c.face_count(), 1);
            assert_eq!(c.faces()[0].len(), 8);
        }
    }

    #[test]
    fn malformed_rotations_rejected() {
        let edges = vec![(0, 1)];
        assert!(SurfaceComplex::new(2, edges.clone(), vec![vec![Dart::forward(0)], vec![]]).is_err());
        assert!(SurfaceComplex::new(2, edges.clone(), vec![vec![Dart::backward(0)], vec![Dart::forward(0)]]).is_err());
        assert!(SurfaceComplex::new(2, edges.clone(), vec![vec![Dart::forward(0), Dart::forward(0)], vec![]]).is_err());
        assert!(SurfaceComplex::new(2, edges, vec![vec![Dart::forward(0)]]).is_err());
    }

    #[test]
    fn dart_coverage() {
        for c in [tetrahedron(), torus()] {
            let mut count = vec![0; 2 * c.edge_count()];
            for f in c.faces() {
                for d in f {
                    count[d.index()] += 1;
                }
            }
            assert!(count.iter().all(|&x| x == 1));
        }
    }

    #[test]
    fn dual_examples() {
        let t = torus();
        let d = dual_complex(&t).unwrap();
        assert_eq!((d.vertex_count(), d.edge_count(), d.face_count()), (1, 2, 1));
        let tet = tetrahedron();
        let d = dual_complex(&tet).unwrap();
        assert_eq!((d.vertex_count(), d.edge_count(), d.face_count()), (4, 6, 4));
        assert_eq!(d.genus(), 0);
    }

    #[test]
    fn double_dual_is_primal() {
        for c in [tetrahedron(), torus()] {
            let dd = dual_complex(&dual_complex(&c).unwrap()).unwrap();
            let d = dual_complex(&c).unwrap();
            let map = dual_face_vertices(&c, &d);
            // dual faces are the double dual's vertices
            assert_eq!(dd.vertex_count(), c.vertex_count());
            for e in 0..c.edge_count() {
                let (a, b) = dd.edges()[e];
                assert_eq!((map[a], map[b]), c.edges()[e]);
            }
            for (v, rot) in dd.rotation().iter().enumerate() {
                let w = map[v];
                let start = c.rotation()[w].iter().position(|&x| x == rot[0]).unwrap();
                let primal: Vec<Dart> = c.rotation()[w].iter().cycle().skip(start).take(rot.len()).copied().collect();
                assert_eq!(&primal, rot);
            }
        }
    }
}
