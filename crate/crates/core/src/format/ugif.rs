//! UGIF: `ugif 1`, `type ug|max2lin`, `k N`, `vertices N`, then one
//! `edge U V perm a0,a1,...` or `edge U V c C` per constraint. An optional
//! `cover symmetric|cyclic|generators` line (with `generator a0,...` lines
//! for the last) declares the group of the associated covering graph.

use std::fmt::Write;

use super::{arity, expect_magic, number, statements};
use crate::covering::{label_extended, label_extended_lin, GCoveringGraph, GroupTag};
use crate::csp::{Csp, LinConstraint, Max2LinInstance, UgConstraint, UgInstance};
use crate::error::{Error, Result};
use crate::perm::Perm;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Ug(UgInstance),
    Max2Lin(Max2LinInstance),
}

impl Instance {
    pub fn as_csp(&self) -> &dyn Csp {
        match self {
            Instance::Ug(i) => i,
            Instance::Max2Lin(i) => i,
        }
    }

    pub fn to_ug(&self) -> UgInstance {
        match self {
            Instance::Ug(i) => i.clone(),
            Instance::Max2Lin(i) => i.to_ug(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UgifDoc {
    pub instance: Instance,
    pub cover: Option<GroupTag>,
}

impl UgifDoc {
    pub fn new(instance: Instance) -> UgifDoc {
        UgifDoc { instance, cover: None }
    }

    /// The covering graph: label-extended, with the declared group if any.
    pub fn covering(&self) -> Result<GCoveringGraph> {
        let base = match &self.instance {
            Instance::Ug(i) => label_extended(i),
            Instance::Max2Lin(i) => label_extended_lin(i),
        };
        match &self.cover {
            None => Ok(base),
            Some(tag) => GCoveringGraph::new(
                base.base_vertex_count(),
                base.base_edges().to_vec(),
                base.fiber_size(),
                base.transitions().to_vec(),
                tag.clone(),
            ),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Ug,
    Max2Lin,
}

pub fn parse(text: &str) -> Result<UgifDoc> {
    let mut it = statements(text);
    expect_magic(&mut it, "ugif")?;
    let mut kind = None;
    let mut k = None;
    let mut vertices = None;
    let mut cover: Option<(usize, String)> = None;
    let mut generators = Vec::new();
    let mut ug = Vec::new();
    let mut lin = Vec::new();
    let mut last_line = 1;
    for (line, toks) in it {
        last_line = line;
        let once = |seen: bool| if seen { Err(Error::parse(line, format!("duplicate `{}`", toks[0]))) } else { Ok(()) };
        match toks[0] {
            "type" => {
                arity(line, &toks, 2)?;
                once(kind.is_some())?;
                kind = Some(match toks[1] {
                    "ug" => Kind::Ug,
                    "max2lin" => Kind::Max2Lin,
                    other => return Err(Error::parse(line, format!("unknown type {other:?}"))),
                });
            }
            "k" => {
                arity(line, &toks, 2)?;
                once(k.is_some())?;
                k = Some(number(line, "k", toks[1])?);
            }
            "vertices" => {
                arity(line, &toks, 2)?;
                once(vertices.is_some())?;
                vertices = Some(number(line, "vertices", toks[1])?);
            }
            "cover" => {
                arity(line, &toks, 2)?;
                once(cover.is_some())?;
                cover = Some((line, toks[1].to_string()));
            }
            "generator" => {
                arity(line, &toks, 2)?;
                generators.push(toks[1].parse::<Perm>().map_err(|e| Error::parse(line, e.to_string()))?);
            }
            "edge" => {
                let kind = kind.ok_or_else(|| Error::parse(line, "`type` must precede the first edge"))?;
                let u = number(line, "edge endpoint", toks.get(1).copied().unwrap_or(""))?;
                let v = number(line, "edge endpoint", toks.get(2).copied().unwrap_or(""))?;
                match (kind, toks.get(3).copied()) {
                    (Kind::Ug, Some("perm")) => {
                        arity(line, &toks, 5)?;
                        let perm = toks[4].parse::<Perm>().map_err(|e| Error::parse(line, e.to_string()))?;
                        ug.push((line, UgConstraint { u, v, perm }));
                    }
                    (Kind::Max2Lin, Some("c")) => {
                        arity(line, &toks, 5)?;
                        lin.push((line, LinConstraint { u, v, c: number(line, "shift", toks[4])? }));
                    }
                    _ => return Err(Error::parse(line, "edge form does not match the declared type")),
                }
            }
            other => return Err(Error::parse(line, format!("unknown key {other:?}"))),
        }
    }
    let missing = |what: &str| Error::parse(last_line, format!("missing `{what}` header"));
    let kind = kind.ok_or_else(|| missing("type"))?;
    let k = k.ok_or_else(|| missing("k"))?;
    let n = vertices.ok_or_else(|| missing("vertices"))?;
    // per-constraint checks, reported at their own line
    let instance = match kind {
        Kind::Ug => {
            for (line, c) in &ug {
                UgInstance::new(k, n, vec![c.clone()]).map_err(|e| Error::parse(*line, e.to_string()))?;
            }
            Instance::Ug(UgInstance::new(k, n, ug.into_iter().map(|(_, c)| c).collect())?)
        }
        Kind::Max2Lin => {
            for (line, c) in &lin {
                Max2LinInstance::new(k, n, vec![*c]).map_err(|e| Error::parse(*line, e.to_string()))?;
            }
            Instance::Max2Lin(Max2LinInstance::new(k, n, lin.into_iter().map(|(_, c)| c).collect())?)
        }
    };
    let cover = match cover {
        None if !generators.is_empty() => return Err(Error::parse(last_line, "`generator` without `cover generators`")),
        None => None,
        Some((line, tag)) => Some(match tag.as_str() {
            "symmetric" => GroupTag::Symmetric,
            "cyclic" => GroupTag::Cyclic,
            "generators" => GroupTag::Generators(generators),
            other => return Err(Error::parse(line, format!("unknown cover group {other:?}"))),
        }),
    };
    let doc = UgifDoc { instance, cover };
    if doc.cover.is_some() {
        doc.covering().map_err(|e| Error::parse(last_line, e.to_string()))?;
    }
    Ok(doc)
}

pub fn write(doc: &UgifDoc) -> String {
    let mut out = String::from("ugif 1\n");
    match &doc.instance {
        Instance::Ug(i) => {
            let _ = write!(out, "type ug\nk {}\nvertices {}\n", i.k(), i.vertex_count());
        }
        Instance::Max2Lin(i) => {
            let _ = write!(out, "type max2lin\nk {}\nvertices {}\n", i.k(), i.vertex_count());
        }
    }
    match &doc.cover {
        None => {}
        Some(GroupTag::Symmetric) => out.push_str("cover symmetric\n"),
        Some(GroupTag::Cyclic) => out.push_str("cover cyclic\n"),
        Some(GroupTag::Generators(gens)) => {
            out.push_str("cover generators\n");
            for g in gens {
                let _ = writeln!(out, "generator {g}");
            }
        }
    }
    match &doc.instance {
        Instance::Ug(i) => {
            for c in i.constraints() {
                let _ = writeln!(out, "edge {} {} perm {}", c.u, c.v, c.perm);
            }
        }
        Instance::Max2Lin(i) => {
            for c in i.constraints() {
                let _ = writeln!(out, "edge {} {} c {}", c.u, c.v, c.c);
            }
        }
    }
    out
}
