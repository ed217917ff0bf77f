//! SCF: a rotation system with optional labels.
//!
//! ```text
//! scf 1
//! vertices 1
//! group Z3
//! edge 0 0 0
//! edge 1 0 0
//! rotation 0: +0 -1 -0 +1
//! face 0: +0 +1 -0 -1
//! label 0 2
//! ```
//!
//! `group` is `Zk` or `Sn`; labels are integers below `k` or comma-separated
//! images, and unlisted edges carry `0` or the identity. `face` lines are
//! optional and checked against the faces traced from the rotation, up to
//! cyclic shift. Provenance travels in structured comments:
//! `# class ID NAME`, `# origin V ORIG`, `# universal V`, `# hub V`,
//! `# base-edges N`, `# dropped V`. Other comments are ignored.

use std::fmt::Write;

use crate::dart::Dart;
use crate::error::{Error, Result};
use crate::homology::Cochain1;
use crate::nonabelian::{NonAbCochain1, NonAbSurfaceInstance};
use crate::perm::Perm;
use crate::reduction::{EdgeClass, Provenance, SurfaceInstance};
use crate::surface::SurfaceComplex;

use super::{arity, number};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Labels {
    None,
    Cyclic(Cochain1),
    Perm { degree: usize, cochain: NonAbCochain1 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScfDoc {
    pub complex: SurfaceComplex,
    pub labels: Labels,
    pub provenance: Provenance,
}

impl ScfDoc {
    pub fn unlabelled(complex: SurfaceComplex) -> ScfDoc {
        let provenance = Provenance::plain(complex.vertex_count(), complex.edge_count());
        ScfDoc { complex, labels: Labels::None, provenance }
    }

    pub fn from_surface(si: &SurfaceInstance) -> ScfDoc {
        ScfDoc { complex: si.complex.clone(), labels: Labels::Cyclic(si.cocycle.clone()), provenance: si.provenance.clone() }
    }

    /// `degree` is only consulted when the complex has no edges.
    pub fn from_nonab(si: &NonAbSurfaceInstance, degree: usize) -> ScfDoc {
        let degree = si.cochain.values().first().map_or(degree, Perm::degree);
        ScfDoc {
            complex: si.complex.clone(),
            labels: Labels::Perm { degree, cochain: si.cochain.clone() },
            provenance: si.provenance.clone(),
        }
    }

    pub fn to_surface(&self) -> Result<SurfaceInstance> {
        match &self.labels {
            Labels::Cyclic(a) => SurfaceInstance::new(self.complex.clone(), a.clone(), self.provenance.clone()),
            _ => Err(Error::input("expected a `group Zk` complex")),
        }
    }

    /// `Zk` labels are read as cyclic shifts.
    pub fn to_nonab(&self) -> Result<NonAbSurfaceInstance> {
        let cochain = match &self.labels {
            Labels::Perm { cochain, .. } => cochain.clone(),
            Labels::Cyclic(a) => NonAbCochain1::from_cyclic(a),
            Labels::None => return Err(Error::input("complex carries no labels")),
        };
        Ok(NonAbSurfaceInstance { complex: self.complex.clone(), cochain, provenance: self.provenance.clone() })
    }
}

#[derive(Clone, Copy)]
enum Group {
    Cyclic(usize),
    Symmetric(usize),
}

fn parse_group(line: usize, s: &str) -> Result<Group> {
    let bad = || Error::parse(line, format!("group must be Zk or Sn with a positive order, got {s:?}"));
    let (ctor, rest): (fn(usize) -> Group, &str) = match s.split_at(s.len().min(1)) {
        ("Z", rest) => (Group::Cyclic, rest),
        ("S", rest) => (Group::Symmetric, rest),
        _ => return Err(bad()),
    };
    match rest.parse::<usize>() {
        Ok(n) if n > 0 => Ok(ctor(n)),
        _ => Err(bad()),
    }
}

/// `V:` or `V :` followed by darts.
fn darts_after_colon(line: usize, toks: &[&str]) -> Result<(usize, Vec<Dart>)> {
    let (id, rest) = match toks.get(1) {
        Some(t) if t.ends_with(':') => (&t[..t.len() - 1], &toks[2..]),
        Some(t) if toks.get(2) == Some(&":") => (*t, &toks[3..]),
        _ => return Err(Error::parse(line, format!("expected `{} ID: darts...`", toks[0]))),
    };
    let id = number(line, toks[0], id)?;
    let darts = rest.iter().map(|t| t.parse::<Dart>().map_err(|e| Error::parse(line, e))).collect::<Result<_>>()?;
    Ok((id, darts))
}

fn is_rotation_of(a: &[Dart], b: &[Dart]) -> bool {
    a.len() == b.len() && (a.is_empty() || (0..a.len()).any(|s| a.iter().cycle().skip(s).zip(b).all(|(x, y)| x == y)))
}

#[derive(Default)]
struct Meta {
    classes: Vec<(usize, usize, EdgeClass)>,
    origins: Vec<(usize, usize, usize)>,
    universal: Option<usize>,
    hub: Option<usize>,
    base_edges: Option<usize>,
    dropped: Vec<usize>,
}

/// Structured comment, if the comment is one.
fn meta_comment(line: usize, body: &str, meta: &mut Meta) -> Result<()> {
    let toks: Vec<&str> = body.split_whitespace().collect();
    let Some(&key) = toks.first() else { return Ok(()) };
    match key {
        "class" => {
            arity(line, &toks, 3)?;
            let class = toks[2].parse::<EdgeClass>().map_err(|e| Error::parse(line, e))?;
            meta.classes.push((line, number(line, "edge id", toks[1])?, class));
        }
        "origin" => {
            arity(line, &toks, 3)?;
            meta.origins.push((line, number(line, "vertex", toks[1])?, number(line, "origin", toks[2])?));
        }
        "universal" => {
            arity(line, &toks, 2)?;
            meta.universal = Some(number(line, "vertex", toks[1])?);
        }
        "hub" => {
            arity(line, &toks, 2)?;
            meta.hub = Some(number(line, "vertex", toks[1])?);
        }
        "base-edges" => {
            arity(line, &toks, 2)?;
            meta.base_edges = Some(number(line, "edge count", toks[1])?);
        }
        "dropped" => {
            arity(line, &toks, 2)?;
            meta.dropped.push(number(line, "vertex", toks[1])?);
        }
        _ => {}
    }
    Ok(())
}

/// A `face` line as written.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ListedFace {
    pub line: usize,
    pub id: usize,
    pub darts: Vec<Dart>,
}

/// First disagreement between listed faces and the traced ones, with its line.
pub fn face_mismatch(complex: &SurfaceComplex, listed: &[ListedFace]) -> Option<(usize, String)> {
    if !listed.is_empty() && listed.len() != complex.face_count() {
        return Some((listed[0].line, format!("{} faces listed, rotation traces {}", listed.len(), complex.face_count())));
    }
    listed.iter().find_map(|f| {
        let ok = f.id < complex.face_count() && is_rotation_of(&complex.faces()[f.id], &f.darts);
        (!ok).then(|| (f.line, format!("face {} does not match the traced face walk", f.id)))
    })
}

pub fn parse(text: &str) -> Result<ScfDoc> {
    let (doc, listed) = parse_unchecked(text)?;
    match face_mismatch(&doc.complex, &listed) {
        Some((line, msg)) => Err(Error::parse(line, msg)),
        None => Ok(doc),
    }
}

/// Parses without comparing `face` lines to the rotation; they are returned.
pub fn parse_unchecked(text: &str) -> Result<(ScfDoc, Vec<ListedFace>)> {
    let mut meta = Meta::default();
    let mut magic = false;
    let mut vertices = None;
    let mut group = None;
    let mut edges = Vec::new();
    let mut rotations: Vec<(usize, usize, Vec<Dart>)> = Vec::new();
    let mut faces = Vec::new();
    let mut labels: Vec<(usize, usize, String)> = Vec::new();
    let mut last_line = 1;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(body) = trimmed.strip_prefix('#') {
            meta_comment(line, body, &mut meta)?;
            continue;
        }
        last_line = line;
        let toks: Vec<&str> = trimmed.split_whitespace().collect();
        if !magic {
            if toks != ["scf", "1"] {
                return Err(Error::parse(line, format!("expected `scf 1`, got `{trimmed}`")));
            }
            magic = true;
            continue;
        }
        match toks[0] {
            "vertices" => {
                arity(line, &toks, 2)?;
                if vertices.is_some() {
                    return Err(Error::parse(line, "duplicate `vertices`"));
                }
                vertices = Some(number(line, "vertices", toks[1])?);
            }
            "group" => {
                arity(line, &toks, 2)?;
                if group.is_some() {
                    return Err(Error::parse(line, "duplicate `group`"));
                }
                group = Some(parse_group(line, toks[1])?);
            }
            "edge" => {
                arity(line, &toks, 4)?;
                let id = number(line, "edge id", toks[1])?;
                if id != edges.len() {
                    return Err(Error::parse(line, format!("edge ids must run in order, expected {}", edges.len())));
                }
                edges.push((number(line, "edge endpoint", toks[2])?, number(line, "edge endpoint", toks[3])?));
            }
            "rotation" => {
                let (v, darts) = darts_after_colon(line, &toks)?;
                rotations.push((line, v, darts));
            }
            "face" => {
                let (id, darts) = darts_after_colon(line, &toks)?;
                faces.push(ListedFace { line, id, darts });
            }
            "label" => {
                arity(line, &toks, 3)?;
                labels.push((line, number(line, "edge id", toks[1])?, toks[2].to_string()));
            }
            other => return Err(Error::parse(line, format!("unknown key {other:?}"))),
        }
    }
    if !magic {
        return Err(Error::parse(1, "empty document, expected `scf 1`"));
    }
    let n = vertices.ok_or_else(|| Error::parse(last_line, "missing `vertices` header"))?;
    let m = edges.len();
    for (e, &(u, v)) in edges.iter().enumerate() {
        if u >= n || v >= n {
            return Err(Error::parse(last_line, format!("edge {e} has an endpoint out of range")));
        }
    }

    let mut rotation: Vec<Option<Vec<Dart>>> = vec![None; n];
    for (line, v, darts) in rotations {
        if v >= n {
            return Err(Error::parse(line, format!("vertex {v} out of range")));
        }
        if let Some(d) = darts.iter().find(|d| d.edge() >= m) {
            return Err(Error::parse(line, format!("dart {d} names a missing edge")));
        }
        if rotation[v].replace(darts).is_some() {
            return Err(Error::parse(line, format!("second rotation for vertex {v}")));
        }
    }
    let rotation = rotation
        .into_iter()
        .enumerate()
        .map(|(v, r)| r.ok_or_else(|| Error::parse(last_line, format!("no rotation for vertex {v}"))))
        .collect::<Result<Vec<_>>>()?;
    let complex = SurfaceComplex::new(n, edges, rotation).map_err(|e| Error::parse(last_line, e.to_string()))?;

    let labels = match group {
        None => {
            if let Some((line, ..)) = labels.first() {
                return Err(Error::parse(*line, "`label` requires a `group` header"));
            }
            Labels::None
        }
        Some(Group::Cyclic(k)) => {
            let mut values = vec![0; m];
            for (line, e, s) in labels {
                if e >= m {
                    return Err(Error::parse(line, format!("edge {e} out of range")));
                }
                match s.parse::<usize>() {
                    Ok(x) if x < k => values[e] = x,
                    _ => return Err(Error::parse(line, format!("label {s:?} is not an element of Z{k}"))),
                }
            }
            Labels::Cyclic(Cochain1::new(k, values))
        }
        Some(Group::Symmetric(d)) => {
            let mut values = vec![Perm::identity(d); m];
            for (line, e, s) in labels {
                if e >= m {
                    return Err(Error::parse(line, format!("edge {e} out of range")));
                }
                let p = s.parse::<Perm>().map_err(|err| Error::parse(line, err.to_string()))?;
                if p.degree() != d {
                    return Err(Error::parse(line, format!("label has degree {}, group is S{d}", p.degree())));
                }
                values[e] = p;
            }
            Labels::Perm { degree: d, cochain: NonAbCochain1::new(values)? }
        }
    };

    let mut provenance = Provenance::plain(n, m);
    for (line, e, class) in meta.classes {
        if e >= m {
            return Err(Error::parse(line, format!("class for missing edge {e}")));
        }
        provenance.edge_classes[e] = class;
    }
    if !meta.origins.is_empty() {
        provenance.vertex_origin = vec![None; n];
        for (line, v, o) in meta.origins {
            if v >= n {
                return Err(Error::parse(line, format!("origin for missing vertex {v}")));
            }
            provenance.vertex_origin[v] = Some(o);
        }
    }
    provenance.universal = meta.universal;
    provenance.hub = meta.hub;
    provenance.base_edge_count = meta.base_edges;
    provenance.dropped_vertices = meta.dropped;
    Ok((ScfDoc { complex, labels, provenance }, faces))
}

fn darts_line(out: &mut String, key: &str, id: usize, darts: &[Dart]) {
    let _ = write!(out, "{key} {id}:");
    for d in darts {
        let _ = write!(out, " {d}");
    }
    out.push('\n');
}

pub fn write(doc: &ScfDoc) -> String {
    let c = &doc.complex;
    let p = &doc.provenance;
    let mut out = String::from("scf 1\n");
    let _ = writeln!(out, "vertices {}", c.vertex_count());
    match &doc.labels {
        Labels::None => {}
        Labels::Cyclic(a) => {
            let _ = writeln!(out, "group Z{}", a.k());
        }
        Labels::Perm { degree, .. } => {
            let _ = writeln!(out, "group S{degree}");
        }
    }
    if let Some(b) = p.base_edge_count {
        let _ = writeln!(out, "# base-edges {b}");
    }
    if let Some(u) = p.universal {
        let _ = writeln!(out, "# universal {u}");
    }
    if let Some(h) = p.hub {
        let _ = writeln!(out, "# hub {h}");
    }
    for v in &p.dropped_vertices {
        let _ = writeln!(out, "# dropped {v}");
    }
    let identity_origin = p.vertex_origin.len() == c.vertex_count()
        && p.vertex_origin.iter().enumerate().all(|(v, o)| *o == Some(v));
    if !identity_origin {
        for (v, o) in p.vertex_origin.iter().enumerate() {
            if let Some(o) = o {
                let _ = writeln!(out, "# origin {v} {o}");
            }
        }
    }
    for (e, &(u, v)) in c.edges().iter().enumerate() {
        let _ = writeln!(out, "edge {e} {u} {v}");
        match p.edge_classes.get(e) {
            Some(EdgeClass::Original) | None => {}
            Some(class) => {
                let _ = writeln!(out, "# class {e} {class}");
            }
        }
    }
    for (v, darts) in c.rotation().iter().enumerate() {
        darts_line(&mut out, "rotation", v, darts);
    }
    for (f, darts) in c.faces().iter().enumerate() {
        darts_line(&mut out, "face", f, darts);
    }
    match &doc.labels {
        Labels::None => {}
        Labels::Cyclic(a) => {
            for (e, &x) in a.values().iter().enumerate() {
                if x != 0 {
                    let _ = writeln!(out, "label {e} {x}");
                }
            }
        }
        Labels::Perm { cochain, .. } => {
            for (e, x) in cochain.values().iter().enumerate() {
                if !x.is_identity() {
                    let _ = writeln!(out, "label {e} {x}");
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{cyclic_triangle, random_complex, swap_triangle, tetrahedron, torus};
    use crate::nonabelian::ug_to_one_face;
    use crate::reduction::{graph_to_one_face, triangulate_face};

    const TORUS: &str = "scf 1
vertices 1
group Z3
# a note that is not provenance
edge 0 0 0
edge 1 0 0
rotation 0: +0 -1 -0 +1
face 0: -0 -1 +0 +1
label 0 2
";

    #[test]
    fn parses_the_torus() {
        let doc = parse(TORUS).unwrap();
        assert_eq!(doc.complex, torus());
        assert_eq!(doc.labels, Labels::Cyclic(Cochain1::new(3, vec![2, 0])));
        assert_eq!(doc.provenance, Provenance::plain(1, 2));
        let si = doc.to_surface().unwrap();
        assert_eq!(parse(&write(&ScfDoc::from_surface(&si))).unwrap(), doc);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            ("scf 2\n", 1),
            ("scf 1\nvertices 1\nedge 1 0 0\n", 3),
            ("scf 1\nvertices 1\nedge 0 0 0\nrotation 0: +0 -3\n", 4),
            ("scf 1\nvertices 1\nedge 0 0 0\nrotation 0: +0 -0\nface 0: +0 +0\n", 5),
            ("scf 1\nvertices 1\nedge 0 0 0\nrotation 0: +0 -0\nlabel 0 1\n", 5),
            ("scf 1\nvertices 1\ngroup Z2\nedge 0 0 0\nrotation 0: +0 -0\nlabel 0 2\n", 6),
            ("scf 1\nvertices 1\ngroup S3\nedge 0 0 0\nrotation 0: +0 -0\nlabel 0 1,0\n", 6),
            ("scf 1\nvertices 1\ngroup Q8\n", 3),
            ("scf 1\nvertices 1\n# class 0 bogus\n", 3),
            ("scf 1\nvertices 1\nedge 0 0 0\nrotation 0: +0 x\n", 4),
            ("scf 1\nvertices 1\ncolour 3\n", 3),
            ("scf 1\nvertices 2\nedge 0 0 1\nrotation 0: +0\n", 4),
        ];
        for (text, line) in cases {
            match parse(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }

    #[test]
    fn unlabelled_round_trip() {
        for c in [tetrahedron(), torus()] {
            let doc = ScfDoc::unlabelled(c);
            let text = write(&doc);
            assert!(!text.contains("group"));
            assert_eq!(parse(&text).unwrap(), doc);
        }
    }

    #[test]
    fn reduction_outputs_round_trip_with_provenance() {
        let one = graph_to_one_face(&cyclic_triangle()).unwrap();
        let tri = triangulate_face(&one).unwrap();
        for si in [one, tri] {
            let doc = ScfDoc::from_surface(&si);
            let text = write(&doc);
            assert_eq!(write(&parse(&text).unwrap()), text);
            assert_eq!(parse(&text).unwrap().to_surface().unwrap(), si);
        }
        let nab = ug_to_one_face(&swap_triangle()).unwrap();
        let doc = ScfDoc::from_nonab(&nab, 2);
        let back = parse(&write(&doc)).unwrap();
        assert_eq!(back.to_nonab().unwrap(), nab);
    }

    #[test]
    fn random_complexes_round_trip() {
        for seed in 0..30 {
            let c = random_complex(1 + seed as usize % 6, 5, seed % 2 == 0, seed);
            let k = 2 + seed as usize % 4;
            let values: Vec<usize> = (0..c.edge_count()).map(|e| (e * 7 + seed as usize) % k).collect();
            let doc = ScfDoc { provenance: Provenance::plain(c.vertex_count(), c.edge_count()), labels: Labels::Cyclic(Cochain1::new(k, values)), complex: c };
            assert_eq!(parse(&write(&doc)).unwrap(), doc);
        }
    }
}
