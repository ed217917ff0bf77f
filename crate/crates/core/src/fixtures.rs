//! Small named instances and complexes shared by tests and the CLI.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::csp::{LinConstraint, Max2LinInstance, UgConstraint, UgInstance};
use crate::dart::Dart;
use crate::perm::Perm;
use crate::surface::SurfaceComplex;

/// Triangle over `k = 2` with the transposition on every edge.
pub fn swap_triangle() -> UgInstance {
    let t = Perm::transposition(2, 0, 1);
    let cs = [(0, 1), (1, 2), (2, 0)].iter().map(|&(u, v)| UgConstraint { u, v, perm: t.clone() }).collect();
    UgInstance::new(2, 3, cs).expect("valid fixture")
}

/// Triangle over `Z_2` with shift 1 on every edge; optimum 2/3.
pub fn cyclic_triangle() -> Max2LinInstance {
    let cs = [(0, 1), (1, 2), (2, 0)].iter().map(|&(u, v)| LinConstraint { u, v, c: 1 }).collect();
    Max2LinInstance::new(2, 3, cs).expect("valid fixture")
}

/// One constraint `x_0 − x_1 = 0` over `Z_2`.
pub fn single_edge() -> Max2LinInstance {
    Max2LinInstance::new(2, 2, vec![LinConstraint { u: 0, v: 1, c: 0 }]).expect("valid fixture")
}

pub fn complete_graph(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
}

/// Two vertices joined by three parallel edges.
pub fn theta_graph() -> Vec<(usize, usize)> {
    vec![(0, 1), (0, 1), (0, 1)]
}

/// Planar K4: vertex 3 sits inside triangle 0-1-2, rotations counter-clockwise.
pub fn tetrahedron() -> SurfaceComplex {
    let edges = vec![(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)];
    let p = Dart::forward;
    let m = Dart::backward;
    let rotation = vec![vec![p(0), p(3), m(2)], vec![p(1), p(4), m(0)], vec![p(2), p(5), m(1)], vec![m(3), m(4), m(5)]];
    SurfaceComplex::new(4, edges, rotation).expect("valid fixture")
}

/// One vertex, loops `a = 0` and `b = 1`, one face `a b a⁻¹ b⁻¹`.
pub fn torus() -> SurfaceComplex {
    let (a, b) = (0, 1);
    let rotation = vec![vec![Dart::forward(a), Dart::backward(b), Dart::backward(a), Dart::forward(b)]];
    SurfaceComplex::new(1, vec![(0, 0), (0, 0)], rotation).expect("valid fixture")
}

/// Torus as a 2×2 grid: 4 vertices, 8 edges, 4 square faces.
pub fn grid_torus() -> SurfaceComplex {
    grid_torus_sized(2, 2)
}

/// `w × h` quadrangulated torus, `w, h ≥ 2`.
pub fn grid_torus_sized(w: usize, h: usize) -> SurfaceComplex {
    let id = |x: usize, y: usize| (y % h) * w + x % w;
    let mut edges = Vec::new();
    for y in 0..h {
        for x in 0..w {
            edges.push((id(x, y), id(x + 1, y)));
            edges.push((id(x, y), id(x, y + 1)));
        }
    }
    let mut rotation = vec![Vec::new(); w * h];
    for y in 0..h {
        for x in 0..w {
            let v = id(x, y);
            let right = 2 * v;
            let up = 2 * v + 1;
            let left = 2 * id(x + w - 1, y);
            let down = 2 * id(x, y + h - 1) + 1;
            rotation[v] = vec![Dart::forward(right), Dart::forward(up), Dart::backward(left), Dart::backward(down)];
        }
    }
    SurfaceComplex::new(w * h, edges, rotation).expect("valid fixture")
}

/// Connected multigraph with a uniformly shuffled rotation at every vertex.
///
/// A random spanning tree is laid first, then `extra` further edges (loops
/// allowed) with random endpoints.
pub fn random_complex(vertex_count: usize, extra: usize, allow_loops: bool, seed: u64) -> SurfaceComplex {
    assert!(vertex_count >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for v in 1..vertex_count {
        edges.push((rng.gen_range(0..v), v));
    }
    while edges.len() < vertex_count - 1 + extra {
        let (u, v) = (rng.gen_range(0..vertex_count), rng.gen_range(0..vertex_count));
        if u != v || allow_loops || vertex_count == 1 {
            edges.push((u, v));
        }
    }
    if edges.is_empty() {
        edges.push((0, 0));
    }
    let mut rotation = vec![Vec::new(); vertex_count];
    for (e, &(u, v)) in edges.iter().enumerate() {
        rotation[u].push(Dart::forward(e));
        rotation[v].push(Dart::backward(e));
    }
    for r in &mut rotation {
        r.shuffle(&mut rng);
    }
    SurfaceComplex::new(vertex_count, edges, rotation).expect("every dart placed once")
}
