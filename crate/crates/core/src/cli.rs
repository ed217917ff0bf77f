//! The `ugsurf` command line.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::budget::Budget;
use crate::covering::check_isomorphic;
use crate::csp::{active_vertex_count, gen_planted, greedy_half, opt_brute, satisfied_count, Fraction};
use crate::error::{Error, Result};
use crate::format::scf::{self, Labels, ScfDoc};
use crate::format::ugif::{self, Instance, UgifDoc};
use crate::homology::{coholoc_brute, dual_transport, face_sums, Chain1};
use crate::kkmo::{kkmo_reduce, square_with, SquareOptions};
use crate::nonabelian::{coholoc_nonab_brute, face_products, patch_cell, ug_to_one_face};
use crate::reduction::{gap_bounds_check, graph_to_one_face, triangulate_face, EdgeClass};
use crate::surface::{xuong_certificate, SurfaceComplex};

#[derive(Parser, Debug)]
#[command(name = "ugsurf", version, about = "Unique Games, covering graphs and surface localization")]
pub struct Cli {
    /// Worker threads for exhaustive solvers; results do not depend on it.
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Largest number of candidates an exhaustive search may evaluate.
    #[arg(long, global = true, default_value_t = Budget::default().0)]
    pub budget: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Planted Γ-Max-2Lin instance on a random regular multigraph (UGIF).
    Gen(GenArgs),
    #[command(subcommand)]
    Reduce(Reduce),
    #[command(subcommand)]
    Solve(Solve),
    #[command(subcommand)]
    Verify(Verify),
    /// Size, genus, edge classes and Xuong certificate of a file.
    Stats { input: PathBuf },
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[arg(long)]
    pub vertices: usize,
    #[arg(long)]
    pub degree: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long, default_value_t = 0.0)]
    pub noise: f64,
    #[arg(long)]
    pub seed: u64,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct InOut {
    pub input: PathBuf,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Reduce {
    /// Two-step walks through every vertex (UGIF to UGIF).
    Square {
        #[command(flatten)]
        io: InOut,
        /// Keep the original constraints as well.
        #[arg(long)]
        keep_original: bool,
    },
    /// Folded KKMO reduction to Γ-Max-2Lin over `Z_q` (UGIF to UGIF).
    Kkmo {
        #[command(flatten)]
        io: InOut,
        #[arg(long)]
        q: usize,
    },
    /// One-face surface complex around the constraint graph (UGIF to SCF).
    Surface(InOut),
    /// Triangulation gadget on a one-face `Zk` complex (SCF to SCF).
    Triangulate(InOut),
    /// Poincaré dual; `Zk` labels are read as a cycle and carried to `e*`.
    Dual(InOut),
    /// Commutator cell closing a one-face permutation complex (SCF to SCF).
    Patch(InOut),
}

#[derive(Subcommand, Debug)]
pub enum Solve {
    /// Exact optimum by exhaustive search.
    Brute { input: PathBuf },
    /// Greedy assignment; satisfies at least half the active vertex count, rounded up.
    Greedy { input: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum Verify {
    /// Labels sum (or multiply) to zero around every face.
    Cocycle { input: PathBuf },
    /// Listed faces match the faces traced from the rotation.
    Faces { input: PathBuf },
    /// Euler characteristic and genus.
    Euler { input: PathBuf },
    /// Two UGIF covers are isomorphic by a per-vertex relabelling.
    Iso { a: PathBuf, b: PathBuf },
    /// Optima of a one-face instance and its triangulation obey the gadget bounds.
    Gap { a: PathBuf, b: PathBuf },
}

/// What a command produced: text for stdout and whether a check failed.
struct Outcome {
    stdout: String,
    violation: bool,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome { stdout, violation: false }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Budget { .. } => 3,
        Error::Violation(_) | Error::Internal(_) => 1,
        _ => 2,
    }
}

/// Runs a parsed command line and returns the process exit status.
pub fn run(cli: Cli) -> i32 {
    let budget = Budget(cli.budget);
    let result = match cli.threads {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(|| dispatch(cli.command, budget)),
            Err(e) => Err(Error::input(format!("thread pool: {e}"))),
        },
        None => dispatch(cli.command, budget),
    };
    match result {
        Ok(out) => {
            print!("{}", out.stdout);
            i32::from(out.violation)
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::input(format!("{}: {e}", path.display())))
}

/// Writes to the file if given, otherwise hands the text back for stdout.
fn emit(output: &Option<PathBuf>, text: String) -> Result<Outcome> {
    match output {
        Some(path) => {
            fs::write(path, text).map_err(|e| Error::input(format!("{}: {e}", path.display())))?;
            Ok(Outcome::ok(String::new()))
        }
        None => Ok(Outcome::ok(text)),
    }
}

enum Doc {
    Ugif(UgifDoc),
    Scf(Box<ScfDoc>),
}

fn load(path: &Path) -> Result<Doc> {
    let text = read(path)?;
    let magic = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
    match magic.and_then(|l| l.split_whitespace().next()) {
        Some("scf") => Ok(Doc::Scf(Box::new(scf::parse(&text)?))),
        _ => Ok(Doc::Ugif(ugif::parse(&text)?)),
    }
}

fn load_ugif(path: &Path) -> Result<UgifDoc> {
    ugif::parse(&read(path)?)
}

fn load_scf(path: &Path) -> Result<ScfDoc> {
    scf::parse(&read(path)?)
}

fn rational(r: Fraction) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn ratio(num: usize, den: usize) -> String {
    rational(Fraction::new(num as i64, den.max(1) as i64))
}

fn joined(values: impl IntoIterator<Item = impl std::fmt::Display>) -> String {
    values.into_iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn dispatch(command: Command, budget: Budget) -> Result<Outcome> {
    match command {
        Command::Gen(a) => {
            let inst = gen_planted(a.vertices, a.degree, a.k, a.noise, a.seed)?;
            emit(&a.output, ugif::write(&UgifDoc::new(Instance::Max2Lin(inst))))
        }
        Command::Reduce(r) => reduce(r, budget),
        Command::Solve(s) => solve(s, budget),
        Command::Verify(v) => verify(v, budget),
        Command::Stats { input } => stats(&input),
    }
}

fn reduce(r: Reduce, budget: Budget) -> Result<Outcome> {
    match r {
        Reduce::Square { io, keep_original } => {
            let doc = load_ugif(&io.input)?;
            let sq = square_with(&doc.instance.to_ug(), SquareOptions { keep_original });
            let mut text = ugif::write(&UgifDoc::new(Instance::Ug(sq.instance)));
            if sq.dropped_loops > 0 {
                text.insert_str(7, &format!("# squared; {} two-step loops dropped\n", sq.dropped_loops));
            }
            emit(&io.output, text)
        }
        Reduce::Kkmo { io, q } => {
            let doc = load_ugif(&io.input)?;
            let ug = doc.instance.to_ug();
            let (out, layout) = kkmo_reduce(&ug, q, budget)?;
            let mut text = ugif::write(&UgifDoc::new(Instance::Max2Lin(out)));
            let header = format!(
                "# kkmo n={} k={} q={}\n# vertex i*q^(k-1) + rank(t): variable i, folded tuple t in Z_q^k with t_0 = 0, rank = base-q digits t_1..t_(k-1)\n",
                layout.n, layout.k, layout.q
            );
            text.insert_str(7, &header);
            emit(&io.output, text)
        }
        Reduce::Surface(io) => {
            let doc = load_ugif(&io.input)?;
            let out = match &doc.instance {
                Instance::Max2Lin(inst) => ScfDoc::from_surface(&graph_to_one_face(inst)?),
                Instance::Ug(inst) => ScfDoc::from_nonab(&ug_to_one_face(inst)?, inst.k()),
            };
            let dropped = &out.provenance.dropped_vertices;
            if !dropped.is_empty() {
                eprintln!("warning: {} isolated vertices left out of the complex: {}", dropped.len(), joined(dropped));
            }
            emit(&io.output, scf::write(&out))
        }
        Reduce::Triangulate(io) => {
            let si = load_scf(&io.input)?.to_surface()?;
            emit(&io.output, scf::write(&ScfDoc::from_surface(&triangulate_face(&si)?)))
        }
        Reduce::Dual(io) => {
            let doc = load_scf(&io.input)?;
            let out = match &doc.labels {
                Labels::None => ScfDoc::unlabelled(crate::surface::dual_complex(&doc.complex)?),
                Labels::Cyclic(a) => {
                    let z = Chain1::new(a.k(), a.values().to_vec());
                    let (dual, b) = dual_transport(&z, &doc.complex)?;
                    let mut d = ScfDoc::unlabelled(dual);
                    d.labels = Labels::Cyclic(b);
                    d
                }
                Labels::Perm { .. } => return Err(Error::input("dual of permutation labels is not defined")),
            };
            emit(&io.output, scf::write(&out))
        }
        Reduce::Patch(io) => {
            let doc = load_scf(&io.input)?;
            let degree = match &doc.labels {
                Labels::Perm { degree, .. } => *degree,
                Labels::Cyclic(a) => a.k(),
                Labels::None => 1,
            };
            let out = patch_cell(&doc.to_nonab()?)?;
            emit(&io.output, scf::write(&ScfDoc::from_nonab(&out, degree)))
        }
    }
}

fn solve(s: Solve, budget: Budget) -> Result<Outcome> {
    let mut out = String::new();
    match s {
        Solve::Brute { input } => match load(&input)? {
            Doc::Ugif(doc) => {
                let csp = doc.instance.as_csp();
                let r = opt_brute(csp, budget)?;
                let m = csp.constraint_count();
                let _ = writeln!(out, "optimum {}\nfraction {}\nwitness {}", r.best_count, ratio(r.best_count, m), joined(&r.witness.0));
            }
            Doc::Scf(doc) => {
                let m = doc.complex.edge_count();
                match &doc.labels {
                    Labels::Cyclic(a) => {
                        let loc = coholoc_brute(&doc.complex, a, budget)?;
                        let best = m - loc.min_support;
                        let _ = writeln!(out, "optimum {best}\nfraction {}\nwitness {}", ratio(best, m), joined(loc.witness.values()));
                    }
                    Labels::Perm { .. } => {
                        let f = doc.to_nonab()?.cochain;
                        let loc = coholoc_nonab_brute(&doc.complex, &f, budget)?;
                        let best = m - loc.min_support;
                        let _ = writeln!(
                            out,
                            "optimum {best}\nfraction {}\nwitness {}",
                            ratio(best, m),
                            loc.witness.values().iter().map(|p| format!("[{p}]")).collect::<Vec<_>>().join(" ")
                        );
                    }
                    Labels::None => return Err(Error::input("complex carries no labels")),
                }
            }
        },
        Solve::Greedy { input } => {
            let inst = match load(&input)? {
                Doc::Ugif(doc) => doc.instance,
                Doc::Scf(doc) => Instance::Max2Lin(doc.to_surface()?.to_max2lin()?),
            };
            let csp = inst.as_csp();
            let s = greedy_half(csp);
            let count = satisfied_count(csp, &s)?;
            let active = active_vertex_count(csp);
            let _ = writeln!(
                out,
                "satisfied {count}\nfraction {}\nactive {active}\nwitness {}",
                ratio(count, csp.constraint_count()),
                joined(&s.0)
            );
        }
    }
    Ok(Outcome::ok(out))
}

fn verify(v: Verify, budget: Budget) -> Result<Outcome> {
    let mut out = String::new();
    let mut violation = false;
    match v {
        Verify::Cocycle { input } => {
            let doc = load_scf(&input)?;
            let bad = match &doc.labels {
                Labels::Cyclic(a) => face_sums(a, &doc.complex)?.iter().position(|&s| s != 0),
                Labels::Perm { .. } => face_products(&doc.to_nonab()?.cochain, &doc.complex)?.iter().position(|p| !p.is_identity()),
                Labels::None => return Err(Error::input("complex carries no labels")),
            };
            match bad {
                Some(f) => {
                    violation = true;
                    let _ = writeln!(out, "not a cocycle: face {f} is not closed");
                }
                None => {
                    let _ = writeln!(out, "cocycle: all {} faces closed", doc.complex.face_count());
                }
            }
        }
        Verify::Faces { input } => {
            let (doc, listed) = scf::parse_unchecked(&read(&input)?)?;
            match scf::face_mismatch(&doc.complex, &listed) {
                Some((line, msg)) => {
                    violation = true;
                    let _ = writeln!(out, "faces: line {line}: {msg}");
                }
                None => {
                    let _ = writeln!(out, "faces: {} traced, {} listed, all match", doc.complex.face_count(), listed.len());
                }
            }
        }
        Verify::Euler { input } => {
            let c = load_scf(&input)?.complex;
            let chi = c.euler_characteristic();
            let twice = 2 * c.component_count() as i64 - chi;
            violation = twice < 0 || twice % 2 != 0;
            let _ = writeln!(
                out,
                "V={} E={} F={} chi={chi} components={} g={}",
                c.vertex_count(),
                c.edge_count(),
                c.face_count(),
                c.component_count(),
                if violation { "undefined".to_string() } else { (twice / 2).to_string() }
            );
        }
        Verify::Iso { a, b } => {
            let (ca, cb) = (load_ugif(&a)?.covering()?, load_ugif(&b)?.covering()?);
            match check_isomorphic(&ca, &cb)? {
                Some(g) => {
                    let _ = writeln!(out, "isomorphic");
                    for (v, p) in g.iter().enumerate() {
                        let _ = writeln!(out, "relabel {v} {p}");
                    }
                }
                None => {
                    violation = true;
                    let _ = writeln!(out, "not isomorphic");
                }
            }
        }
        Verify::Gap { a, b } => {
            let si_in = load_scf(&a)?.to_surface()?;
            let si_out = load_scf(&b)?.to_surface()?;
            let r = gap_bounds_check(&si_in, &si_out, budget)?;
            violation = !r.holds();
            let _ = writeln!(
                out,
                "rho_in {}\nrho_out {}\nlower {}\nupper {}\n{}",
                rational(r.rho_in),
                rational(r.rho_out),
                rational(r.lower),
                rational(r.upper),
                if violation { "gap bounds violated" } else { "gap bounds hold" }
            );
        }
    }
    Ok(Outcome { stdout: out, violation })
}

fn complex_stats(out: &mut String, c: &SurfaceComplex) {
    let _ = writeln!(
        out,
        "vertices {}\nedges {}\nfaces {}\neuler {}\ncomponents {}\ngenus {}",
        c.vertex_count(),
        c.edge_count(),
        c.face_count(),
        c.euler_characteristic(),
        c.component_count(),
        c.genus()
    );
}

fn stats(input: &Path) -> Result<Outcome> {
    let mut out = String::new();
    match load(input)? {
        Doc::Ugif(doc) => {
            let csp = doc.instance.as_csp();
            let kind = match doc.instance {
                Instance::Ug(_) => "ug",
                Instance::Max2Lin(_) => "max2lin",
            };
            let _ = writeln!(
                out,
                "type {kind}\nk {}\nvertices {}\nconstraints {}\nactive {}",
                csp.k(),
                csp.vertex_count(),
                csp.constraint_count(),
                active_vertex_count(csp)
            );
        }
        Doc::Scf(doc) => {
            let c = &doc.complex;
            complex_stats(&mut out, c);
            let counts = doc.provenance.class_counts();
            for class in EdgeClass::ALL {
                if let Some(&n) = counts.get(&class) {
                    let _ = writeln!(out, "class {class} {n} {}", ratio(n, c.edge_count()));
                }
            }
            if let Some(g) = doc.provenance.gadget_counts() {
                let _ = writeln!(out, "gadget X':S:C:L {}", g.map(|x| x.to_string()).join(":"));
            }
            match xuong_certificate(c.vertex_count(), c.edges()) {
                Ok(Some(cert)) => {
                    let _ = writeln!(out, "xuong tree {} pairs {}", cert.tree.len(), cert.pairing.len());
                }
                Ok(None) => {
                    let _ = writeln!(out, "xuong none found");
                }
                Err(e) => {
                    let _ = writeln!(out, "xuong unavailable: {e}");
                }
            }
        }
    }
    Ok(Outcome::ok(out))
}
