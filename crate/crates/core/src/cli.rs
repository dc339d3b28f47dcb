//! The `ppt` command line.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 internal invariant
//! violation. JSON renders every integer as a decimal string.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_traits::One;
use serde_json::{json, Map, Value};

use crate::boxcore::{
    area_perimeter_of, box_from_triple, classify_non_primitive, family_fermat, family_plato, family_pythagoras,
    hats_of_triple, radii_of, FibBox, PptTriple, Radii,
};
use crate::circlegeom::descartes_check;
use crate::egypt::{ef_four_term, ef_three_term, ef_two_term_hypotenuse, rhind_two_term, EgyptianDecomposition};
use crate::error::Error;
use crate::forest::{classify_families, Forest, Letter, PathCode, TreeKind, DEFAULT_MAX_DEPTH};
use crate::verify::{self, VerifyConfig};

#[derive(Parser, Debug)]
#[command(name = "ppt", version, about = "Primitive Pythagorean triples on the Barning–Hall and New trees")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format; `dot` applies to `level` and `navigate` only.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    format: OutputFormat,

    /// Which tree to use.
    #[arg(long, value_enum, default_value_t = TreeArg::New, global = true)]
    tree: TreeArg,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Dot,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum TreeArg {
    Bh,
    New,
}

impl From<TreeArg> for TreeKind {
    fn from(t: TreeArg) -> Self {
        match t {
            TreeArg::Bh => TreeKind::BarningHall,
            TreeArg::New => TreeKind::New,
        }
    }
}

#[derive(Args, Debug)]
struct TripleArgs {
    #[arg(value_parser = parse_big)]
    a: BigUint,
    #[arg(value_parser = parse_big)]
    b: BigUint,
    #[arg(value_parser = parse_big)]
    c: BigUint,
}

impl TripleArgs {
    fn primitive(&self) -> Result<PptTriple, Error> {
        PptTriple::new(self.a.clone(), self.b.clone(), self.c.clone())
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Everything known about one triple.
    Info(TripleArgs),
    /// The three children of a primitive triple.
    Children(TripleArgs),
    /// The parent of a primitive triple and the letter leading back down.
    Parent(TripleArgs),
    /// Follow a path code (letters A, B, C) from the root.
    Navigate {
        #[arg(default_value = "")]
        path: String,
    },
    /// The path code of a primitive triple.
    Locate(TripleArgs),
    /// All 3ⁿ triples on level n, in path order.
    Level {
        depth: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_DEPTH)]
        max_depth: usize,
    },
    /// Named families of triples.
    Family {
        #[command(subcommand)]
        which: FamilyCommand,
    },
    /// Two-term decompositions 2/n = 1/x + 1/y for odd n.
    Rhind { n: u64 },
    /// Run the invariant suites.
    Verify {
        #[arg(long, default_value_t = 3000)]
        max_c: u64,
        #[arg(long = "max-p", default_value_t = 500)]
        max_p_prime: u64,
        #[arg(long = "max-p-geometry", default_value_t = 200)]
        max_p_geometry: u64,
        #[arg(long, default_value_t = 6)]
        depth: usize,
        /// Negate an entry of the first Barning–Hall generator.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

#[derive(Subcommand, Debug)]
enum FamilyCommand {
    /// A(n) = (4n²-1, 4n, 4n²+1).
    Plato { n: u64 },
    /// B(n) = (2n+1, 2n(n+1), 2n(n+1)+1).
    Pythagoras { n: u64 },
    /// The n-th Pell shift of the root box.
    Fermat { n: u64 },
    /// Which families a triple belongs to.
    Classify(TripleArgs),
}

fn parse_big(s: &str) -> Result<BigUint, String> {
    s.parse::<BigUint>().map_err(|_| format!("{s:?} is not a non-negative integer"))
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { code: 0, stdout, stderr: String::new() }
    }

    fn err(code: i32, msg: impl std::fmt::Display) -> Self {
        Self { code, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }
}

impl From<Error> for Outcome {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::Invariant(_)) { 2 } else { 1 };
        Outcome::err(code, e)
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(rendered),
                _ => Outcome { code: 1, stdout: String::new(), stderr: rendered },
            };
        }
    };
    match dispatch(&cli) {
        Ok(o) => o,
        Err(e) => e.into(),
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome, Error> {
    let kind: TreeKind = cli.tree.into();
    let fmt = cli.format;
    let forest = Forest::default();
    let tree_shaped = matches!(cli.command, Command::Level { .. } | Command::Navigate { .. });
    if fmt == OutputFormat::Dot && !tree_shaped {
        return Ok(Outcome::err(1, "--format dot is only available for `level` and `navigate`"));
    }
    match &cli.command {
        Command::Info(t) => info(t, fmt, &forest),
        Command::Children(t) => {
            let parent = t.primitive()?;
            let kids = forest.children(kind, &parent)?;
            Ok(Outcome::ok(match fmt {
                OutputFormat::Json => to_json(json!({
                    "tree": kind.short_name(),
                    "parent": triple_json(&parent),
                    "children": Letter::ALL.iter().zip(&kids).map(|(l, k)| json!({
                        "letter": l.to_string(),
                        "triple": triple_json(k),
                    })).collect::<Vec<_>>(),
                })),
                _ => Letter::ALL.iter().zip(&kids).map(|(l, k)| format!("{l} {k}\n")).collect(),
            }))
        }
        Command::Parent(t) => {
            let child = t.primitive()?;
            let found = forest.parent(kind, &child)?;
            Ok(Outcome::ok(match fmt {
                OutputFormat::Json => to_json(json!({
                    "tree": kind.short_name(),
                    "triple": triple_json(&child),
                    "parent": found.as_ref().map(|(p, l)| json!({
                        "letter": l.to_string(),
                        "triple": triple_json(p),
                    })),
                })),
                _ => match found {
                    Some((p, l)) => format!("{p} {l}\n"),
                    None => "none\n".to_string(),
                },
            }))
        }
        Command::Navigate { path } => {
            let code: PathCode = path.trim().parse()?;
            let trace = forest.trace(kind, &code)?;
            let last = trace.last().expect("trace includes the root");
            let mut out = Outcome::ok(match fmt {
                OutputFormat::Json => to_json(json!({
                    "tree": kind.short_name(),
                    "path": code.to_string(),
                    "triple": triple_json(last),
                })),
                OutputFormat::Dot => {
                    let nodes: Vec<(PathCode, PptTriple)> = (0..=code.len())
                        .map(|i| (PathCode::from(code.letters()[..i].to_vec()), trace[i].clone()))
                        .collect();
                    dot(kind, &nodes)
                }
                OutputFormat::Text => format!("{last}\n"),
            });
            if kind == TreeKind::New && last.to_string() == "15,112,113" {
                out.stderr = "note: 15,112,113 is often quoted with path code CCC; \
                              the successor rules reach it in two steps (CC)\n"
                    .to_string();
            }
            Ok(out)
        }
        Command::Locate(t) => {
            let target = t.primitive()?;
            let code = forest.locate(kind, &target)?;
            Ok(Outcome::ok(match fmt {
                OutputFormat::Json => to_json(json!({
                    "tree": kind.short_name(),
                    "triple": triple_json(&target),
                    "path": code.to_string(),
                    "depth": code.len().to_string(),
                })),
                _ => format!("{}\n", path_text(&code)),
            }))
        }
        Command::Level { depth, max_depth } => {
            let nodes = forest.enumerate_level_with_paths(kind, *depth, *max_depth)?;
            Ok(Outcome::ok(match fmt {
                OutputFormat::Json => to_json(json!({
                    "tree": kind.short_name(),
                    "level": depth.to_string(),
                    "nodes": nodes.iter().map(|(p, t)| json!({
                        "path": p.to_string(),
                        "triple": triple_json(t),
                    })).collect::<Vec<_>>(),
                })),
                OutputFormat::Dot => {
                    let mut all = Vec::new();
                    for d in 0..=*depth {
                        all.extend(forest.enumerate_level_with_paths(kind, d, *max_depth)?);
                    }
                    dot(kind, &all)
                }
                OutputFormat::Text => nodes.iter().map(|(p, t)| format!("{} {t}\n", path_text(p))).collect(),
            }))
        }
        Command::Family { which } => family(which, fmt),
        Command::Rhind { n } => Ok(Outcome::ok(match fmt {
            OutputFormat::Json => to_json(rhind_json(*n)?),
            _ => rhind_two_term(*n)?.iter().map(|d| format!("{d}\n")).collect(),
        })),
        Command::Verify { max_c, max_p_prime, max_p_geometry, depth, inject_fault } => {
            if *max_c == 0 || *max_p_prime == 0 || *max_p_geometry == 0 {
                return Ok(Outcome::err(1, "verify bounds must be positive"));
            }
            let forest = if *inject_fault { faulty_forest() } else { forest };
            let cfg = VerifyConfig {
                max_c: *max_c,
                max_p_prime: *max_p_prime,
                max_p_geometry: *max_p_geometry,
                depth: *depth,
            };
            Ok(match verify::run(&forest, &cfg) {
                Ok(reports) => {
                    let mut s = String::new();
                    for r in &reports {
                        let _ = writeln!(s, "{}: ok: {}", r.suite, r.summary);
                    }
                    s.push_str("all invariants hold\n");
                    Outcome::ok(s)
                }
                Err(f) => Outcome::err(2, format!("invariant violated in {f}")),
            })
        }
    }
}

fn faulty_forest() -> Forest {
    let mut bh = crate::forest::BH_MATRICES;
    bh[0].0[0][1] = -bh[0].0[0][1];
    Forest::with_matrices(bh, crate::forest::NEW_MATRICES)
}

fn family(which: &FamilyCommand, fmt: OutputFormat) -> Result<Outcome, Error> {
    let (name, t) = match which {
        FamilyCommand::Plato { n } => ("plato", family_plato(*n)?),
        FamilyCommand::Pythagoras { n } => ("pythagoras", family_pythagoras(*n)?),
        FamilyCommand::Fermat { n } => ("fermat", family_fermat(*n)),
        FamilyCommand::Classify(args) => {
            let t = args.primitive()?;
            let fams: Vec<String> = classify_families(&t).iter().map(ToString::to_string).collect();
            return Ok(Outcome::ok(match fmt {
                OutputFormat::Json => to_json(json!({ "triple": triple_json(&t), "families": fams })),
                _ if fams.is_empty() => "none\n".to_string(),
                _ => format!("{}\n", fams.join(", ")),
            }));
        }
    };
    Ok(Outcome::ok(match fmt {
        OutputFormat::Json => to_json(json!({ "family": name, "triple": triple_json(&t) })),
        _ => format!("{t}\n"),
    }))
}

fn info(args: &TripleArgs, fmt: OutputFormat, forest: &Forest) -> Result<Outcome, Error> {
    if fmt == OutputFormat::Json {
        return Ok(Outcome::ok(to_json(info_json(&args.a, &args.b, &args.c, forest)?)));
    }
    let report = classify_non_primitive(args.a.clone(), args.b.clone(), args.c.clone())?;
    let core = &report.core;
    let b = box_from_triple(core);
    let (h1, h2) = hats_of_triple(core);
    let radii = radii_of(&b)?;
    let (area, perimeter) = area_perimeter_of(&b)?;
    let families: Vec<String> = classify_families(core).iter().map(ToString::to_string).collect();
    let mut s = String::new();
    let _ = writeln!(s, "triple: {},{},{}", args.a, args.b, args.c);
    if report.divisor.is_one() {
        let _ = writeln!(s, "primitive: yes");
    } else {
        let _ = writeln!(s, "primitive: no");
        let _ = writeln!(s, "divisor: {}", report.divisor);
        let _ = writeln!(s, "core: {core}");
    }
    let _ = writeln!(s, "box: q={} q'={} p={} p'={}", b.q(), b.q_prime(), b.p(), b.p_prime());
    let _ = writeln!(s, "hats: {h1} {h2}");
    let _ = writeln!(s, "radii: {radii}");
    let _ = writeln!(s, "area: {area}");
    let _ = writeln!(s, "perimeter: {perimeter}");
    let shown = if families.is_empty() { "none".to_string() } else { families.join(", ") };
    let _ = writeln!(s, "families: {shown}");
    let _ = writeln!(s, "egyptian-4: {}", ef_four_term(&b)?);
    let _ = writeln!(s, "egyptian-3: {}", ef_three_term(&b)?);
    let _ = writeln!(s, "egyptian-2: {}", ef_two_term_hypotenuse(&b)?);
    let _ = writeln!(s, "descartes: {}", if descartes_check(&radii) { "holds" } else { "fails" });
    let _ = writeln!(s, "path bh: {}", path_text(&forest.locate(TreeKind::BarningHall, core)?));
    let _ = writeln!(s, "path new: {}", path_text(&forest.locate(TreeKind::New, core)?));
    Ok(Outcome::ok(s))
}

/// The `info` report for any Pythagorean triple `(a, b, c)`.
pub fn info_json(a: &BigUint, b: &BigUint, c: &BigUint, forest: &Forest) -> Result<Value, Error> {
    let report = classify_non_primitive(a.clone(), b.clone(), c.clone())?;
    let core = &report.core;
    let bx = box_from_triple(core);
    let (h1, h2) = hats_of_triple(core);
    let radii = radii_of(&bx)?;
    let (area, perimeter) = area_perimeter_of(&bx)?;
    let families: Vec<String> = classify_families(core).iter().map(ToString::to_string).collect();
    Ok(json!({
        "input": { "a": a.to_string(), "b": b.to_string(), "c": c.to_string() },
        "primitive": report.divisor.is_one(),
        "divisor": report.divisor.to_string(),
        "core": triple_json(core),
        "box": box_json(&bx),
        "hats": { "primary": h1.to_string(), "secondary": h2.to_string() },
        "radii": radii_json(&radii),
        "area": area.to_string(),
        "perimeter": perimeter.to_string(),
        "families": families,
        "egyptian": {
            "four_term": ef_json(&ef_four_term(&bx)?),
            "three_term": ef_json(&ef_three_term(&bx)?),
            "two_term_hypotenuse": ef_json(&ef_two_term_hypotenuse(&bx)?),
        },
        "descartes": descartes_check(&radii),
        "paths": {
            "bh": forest.locate(TreeKind::BarningHall, core)?.to_string(),
            "new": forest.locate(TreeKind::New, core)?.to_string(),
        },
    }))
}

pub fn rhind_json(n: u64) -> Result<Value, Error> {
    let decomps = rhind_two_term(n)?;
    Ok(json!({
        "n": n.to_string(),
        "decompositions": decomps.iter().map(ef_json).collect::<Vec<_>>(),
    }))
}

fn path_text(p: &PathCode) -> String {
    if p.is_empty() {
        "(root)".to_string()
    } else {
        p.to_string()
    }
}

pub fn triple_json(t: &PptTriple) -> Value {
    json!({ "a": t.a().to_string(), "b": t.b().to_string(), "c": t.c().to_string() })
}

pub fn box_json(b: &FibBox) -> Value {
    json!({
        "q": b.q().to_string(),
        "q_prime": b.q_prime().to_string(),
        "p": b.p().to_string(),
        "p_prime": b.p_prime().to_string(),
    })
}

pub fn radii_json(r: &Radii) -> Value {
    json!({
        "r1": r.r1.to_string(),
        "r2": r.r2.to_string(),
        "r3": r.r3.to_string(),
        "r4": r.r4.to_string(),
    })
}

fn ef_json(d: &EgyptianDecomposition) -> Value {
    let mut m = Map::new();
    m.insert("target".into(), Value::String(format!("{}/{}", d.target().numer(), d.target().denom())));
    m.insert(
        "denominators".into(),
        Value::Array(d.denominators().iter().map(|x| Value::String(x.to_string())).collect()),
    );
    Value::Object(m)
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn to_json(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("JSON values always serialize");
    s.push('\n');
    s
}

/// A digraph with one node per `(path, triple)` and an edge from each
/// node's parent path, labeled with the last letter.
pub fn dot(kind: TreeKind, nodes: &[(PathCode, PptTriple)]) -> String {
    let id = |p: &PathCode| format!("n{p}");
    let mut s = String::new();
    let _ = writeln!(s, "digraph {} {{", kind.short_name());
    for (p, t) in nodes {
        let _ = writeln!(s, "  {} [label=\"{t}\"];", id(p));
    }
    for (p, _) in nodes {
        if let Some((&last, init)) = p.letters().split_last() {
            let parent = PathCode::from(init.to_vec());
            let _ = writeln!(s, "  {} -> {} [label=\"{last}\"];", id(&parent), id(p));
        }
    }
    s.push_str("}\n");
    s
}
