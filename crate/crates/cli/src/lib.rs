//! Command-line front end. [`run`] parses arguments, dispatches to the core
//! library and renders either a plain-text report or a JSON object with the
//! fields `status`, `kind`, `value`, `items` and `error_code`.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use hecke_core::collapse::{collapse_violation, collapsed_subset, commutativity_obstruction, is_admissible};
use hecke_core::commutative::{moebius_check, HGRAlgebra, Poset};
use hecke_core::coxeter::{classify_component, DEFAULT_CAP};
use hecke_core::grothendieck::{
    antipode_comp, antipode_g0, bialgebra_check, bratteli, comp_coproduct, comp_product, fib_decomposition,
    g0_coproduct, g0_product, pairing, verify_antipode, verify_antipode_g0, CompSum, Composition, TensorSum,
};
use hecke_core::hecke::{
    conjecture_scan, dimension, min_dimension_scan_type_a, verify_relations, Dimension, DihedralZeroModule,
    HeckeModule, SimplyLacedHecke, DEFAULT_SCAN_BOUND,
};
use hecke_core::{CoxeterDiagram, Error, Field, SimpleGraph, VertexSet};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "hecke", version, about = "Hecke algebras of Coxeter systems with independent parameters")]
struct Cli {
    /// Emit a JSON object instead of a text report.
    #[arg(long, global = true)]
    json: bool,
    /// Largest group or basis enumerated explicitly.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generators forced to act as the identity, and what remains.
    Collapse { file: PathBuf },
    /// Collapse-free, commutative and (with --admissible) admissibility tests.
    Check {
        file: PathBuf,
        /// Comma-separated vertex names of a candidate subset R.
        #[arg(long)]
        admissible: Option<String>,
    },
    /// Dimension of H(q), or `inf` / `unknown`.
    Dimension { file: PathBuf },
    /// W(q) for a diagram, or the independent sets for a graph.
    Basis { file: PathBuf },
    /// Diagonal Cartan matrix of H(G,R).
    Cartan { file: PathBuf },
    /// Primitive orthogonal idempotents E_I of H(G,R).
    Idempotents { file: PathBuf },
    /// Basis of the radical of H(G,R).
    Radical { file: PathBuf },
    /// Socle of each projective P_I, or of one with --simple.
    Socle {
        file: PathBuf,
        #[arg(long)]
        simple: Option<String>,
    },
    /// Induction from the subgraph on --sub.
    Induce {
        file: PathBuf,
        #[arg(long)]
        sub: String,
        /// Induce the simple C_I (semisimple case only).
        #[arg(long, conflicts_with = "projective", required_unless_present = "projective")]
        simple: Option<String>,
        /// Induce the projective P_J.
        #[arg(long)]
        projective: Option<String>,
    },
    /// Restriction of the simple C_I to the subgraph on --sub.
    Restrict {
        file: PathBuf,
        #[arg(long)]
        sub: String,
        #[arg(long)]
        simple: String,
    },
    /// Grothendieck-group operations on compositions.
    G0 {
        #[command(subcommand)]
        op: G0Op,
    },
    /// Bratteli diagram of the tower, levels 0..=N.
    Bratteli {
        levels: u32,
        /// Graphviz output.
        #[arg(long)]
        dot: bool,
    },
    /// F_(n+2) as the sum of Cartan entries of H(P_n, R).
    Fibdecomp {
        n: usize,
        /// Comma-separated 1-based positions on the path forming R.
        #[arg(long, default_value = "")]
        nil: String,
    },
    /// Minimum dimension over zero/nonzero patterns on the path A_n.
    ScanMinDim {
        n: usize,
        #[arg(long, default_value_t = DEFAULT_SCAN_BOUND)]
        bound: usize,
    },
    /// Minimum dimension over patterns on a simply-laced diagram against
    /// its number of independent sets.
    ScanConjecture { file: PathBuf },
    /// Consistency checks.
    Verify {
        #[command(subcommand)]
        what: VerifyOp,
    },
}

#[derive(Subcommand, Debug)]
enum G0Op {
    /// Product of two compositions.
    Product {
        a: String,
        b: String,
        /// Use the composition ring of projectives instead of G0.
        #[arg(long)]
        projective: bool,
    },
    /// Coproduct of a composition.
    Coproduct {
        a: String,
        #[arg(long)]
        projective: bool,
    },
    /// Antipode of a composition.
    Antipode {
        a: String,
        #[arg(long)]
        projective: bool,
    },
    /// ⟨x, y⟩ with compositions orthonormal; sums like `2*13-21+4`.
    Pairing { x: String, y: String },
    /// Compares Δ(α·β) with Δ(α)·Δ(β).
    Bialgebra { a: String, b: String },
}

#[derive(Subcommand, Debug)]
enum VerifyOp {
    /// Hecke relations on the regular module of a diagram.
    Relations {
        file: PathBuf,
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// S ⋆ id = u∘ε = id ⋆ S on compositions of size at most N.
    Antipode { n: u32 },
    /// Möbius-algebra identities for a rank-two poset.
    Moebius {
        file: PathBuf,
        /// `rational` or `fp:<p>`.
        #[arg(long, default_value = "rational")]
        field: String,
    },
}

/// A failure with its exit code and machine-readable code.
#[derive(Debug)]
struct Failure {
    exit: i32,
    code: String,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { exit: EXIT_USAGE, code: "usage".into(), message: message.into() }
    }

    fn domain(code: &str, message: impl Into<String>) -> Self {
        Failure { exit: EXIT_DOMAIN, code: code.into(), message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Syntax { .. } => "syntax",
            Error::DuplicateVertex(_) => "duplicate_vertex",
            Error::UnknownVertex(_) => "unknown_vertex",
            Error::SelfLoop(_) => "self_loop",
            Error::InvalidWeight { .. } => "invalid_weight",
            Error::InvalidParameter { .. } => "invalid_parameter",
            Error::TooManyVertices { .. } => "too_many_vertices",
            Error::NotFinite(_) => "not_finite",
            Error::CapExceeded { .. } => "cap_exceeded",
            Error::NotSimplyLaced => "not_simply_laced",
            Error::NotCollapseFree(..) => "not_collapse_free",
            Error::NotCommutative(_) => "not_commutative",
            Error::NotIndependent(_) => "not_independent",
            Error::ImproperComposition(_) => "improper_composition",
            Error::EmptyComposition => "empty_composition",
            Error::OutOfRange { .. } => "out_of_range",
            Error::NilpotentsPresent(_) => "nilpotents_present",
            Error::Characteristic2 => "characteristic_2",
            Error::NotRankTwo(_) => "not_rank_two",
            Error::FieldMismatch(_) => "field_mismatch",
        };
        let exit = match e {
            Error::CapExceeded { .. } | Error::TooManyVertices { .. } | Error::OutOfRange { .. } => EXIT_CAP,
            _ => EXIT_DOMAIN,
        };
        Failure { exit, code: code.into(), message: e.to_string() }
    }
}

/// A successful result: the JSON payload and its text rendering.
struct Report {
    kind: &'static str,
    value: Value,
    items: Vec<Value>,
    text: String,
}

impl Report {
    fn new(kind: &'static str, value: Value, items: Vec<Value>, text: String) -> Self {
        Report { kind, value, items, text }
    }
}

type Outcome = std::result::Result<Report, Failure>;

/// Runs the command line `args` (including the program name) and returns
/// the exit code with everything that should go to standard output.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let wants_json = args.iter().any(|a| a == "--json");
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return (EXIT_OK, e.to_string());
            }
            let f = Failure::usage(e.to_string().trim_end());
            return (f.exit, render_failure(&f, wants_json));
        }
    };
    match dispatch(&cli) {
        Ok(r) => (EXIT_OK, render_report(&r, cli.json)),
        Err(f) => (f.exit, render_failure(&f, cli.json)),
    }
}

fn render_report(r: &Report, json: bool) -> String {
    if json {
        let v = json!({
            "status": "ok",
            "kind": r.kind,
            "value": r.value,
            "items": r.items,
            "error_code": Value::Null,
        });
        format!("{}\n", serde_json::to_string_pretty(&v).expect("serializable"))
    } else if r.text.ends_with('\n') {
        r.text.clone()
    } else {
        format!("{}\n", r.text)
    }
}

fn render_failure(f: &Failure, json: bool) -> String {
    if json {
        let v = json!({
            "status": "error",
            "kind": "error",
            "value": f.message,
            "items": [],
            "error_code": f.code,
        });
        format!("{}\n", serde_json::to_string_pretty(&v).expect("serializable"))
    } else {
        format!("error[{}]: {}\n", f.code, f.message)
    }
}

fn dispatch(cli: &Cli) -> Outcome {
    let cap = cli.cap;
    match &cli.command {
        Command::Collapse { file } => collapse(&load_diagram(file)?),
        Command::Check { file, admissible } => check(&load_diagram(file)?, admissible.as_deref()),
        Command::Dimension { file } => dim(&load_diagram(file)?),
        Command::Basis { file } => match load(file)? {
            Input::Diagram(d) => wq_basis(&d, cap),
            Input::Graph(g, nil) => independent_basis(&HGRAlgebra::new(g, nil)?),
            Input::Poset(_) => Err(Failure::domain("wrong_input", "expected a diagram or graph file")),
        },
        Command::Cartan { file } => cartan(&load_algebra(file)?),
        Command::Idempotents { file } => idempotents(&load_algebra(file)?),
        Command::Radical { file } => radical(&load_algebra(file)?),
        Command::Socle { file, simple } => socle(&load_algebra(file)?, simple.as_deref()),
        Command::Induce { file, sub, simple, projective } => {
            induce(&load_algebra(file)?, sub, simple.as_deref(), projective.as_deref())
        }
        Command::Restrict { file, sub, simple } => restrict(&load_algebra(file)?, sub, simple),
        Command::G0 { op } => g0(op),
        Command::Bratteli { levels, dot } => bratteli_cmd(*levels, *dot),
        Command::Fibdecomp { n, nil } => fibdecomp(*n, nil),
        Command::ScanMinDim { n, bound } => scan_min_dim(*n, *bound),
        Command::ScanConjecture { file } => scan_conjecture(&load_diagram(file)?),
        Command::Verify { what } => match what {
            VerifyOp::Relations { file, samples } => verify_rel(&load_diagram(file)?, *samples, cap),
            VerifyOp::Antipode { n } => verify_anti(*n),
            VerifyOp::Moebius { file, field } => verify_moebius(file, field),
        },
    }
}

enum Input {
    Diagram(CoxeterDiagram),
    Graph(SimpleGraph, VertexSet),
    Poset(Poset),
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))
}

/// The first statement decides the format: `graph`, `poset`, or a diagram.
fn load(path: &Path) -> std::result::Result<Input, Failure> {
    let text = read(path)?;
    let first = text
        .lines()
        .flat_map(|l| l.split('#').next().unwrap_or("").split(';'))
        .map(str::trim)
        .find(|s| !s.is_empty())
        .unwrap_or("");
    Ok(match first {
        "graph" => {
            let (g, nil) = SimpleGraph::parse(&text)?;
            Input::Graph(g, nil)
        }
        "poset" => Input::Poset(Poset::parse(&text)?),
        _ => Input::Diagram(CoxeterDiagram::parse(&text)?),
    })
}

fn load_diagram(path: &Path) -> std::result::Result<CoxeterDiagram, Failure> {
    match load(path)? {
        Input::Diagram(d) => Ok(d),
        _ => Err(Failure::domain("wrong_input", "expected a diagram file")),
    }
}

/// H(G,R) from a graph file, or from a commutative diagram with R = {q = −1}.
fn load_algebra(path: &Path) -> std::result::Result<HGRAlgebra, Failure> {
    match load(path)? {
        Input::Graph(g, nil) => Ok(HGRAlgebra::new(g, nil)?),
        Input::Diagram(d) => Ok(HGRAlgebra::from_hecke(&d)?),
        Input::Poset(_) => Err(Failure::domain("wrong_input", "expected a graph or diagram file")),
    }
}

fn split_names(text: &str) -> Vec<&str> {
    let t = text.trim().trim_start_matches('{').trim_end_matches('}');
    if t == "∅" {
        return Vec::new();
    }
    t.split(',').map(str::trim).filter(|s| !s.is_empty()).collect()
}

fn graph_set(g: &SimpleGraph, text: &str) -> std::result::Result<VertexSet, Failure> {
    Ok(g.set_of(&split_names(text))?)
}

fn names(d: &CoxeterDiagram, set: VertexSet) -> Vec<String> {
    set.iter().map(|v| d.name(v).to_string()).collect()
}

fn graph_names(g: &SimpleGraph, set: VertexSet) -> Vec<String> {
    set.iter().map(|v| g.name(v).to_string()).collect()
}

fn collapse(d: &CoxeterDiagram) -> Outcome {
    let rep = collapsed_subset(d);
    let collapsed = names(d, rep.collapsed);
    let mut text = if collapsed.is_empty() {
        "collapsed: none\n".to_string()
    } else {
        format!("collapsed: {}\n", collapsed.join(" "))
    };
    let comps = rep.reduced.connected_components();
    text.push_str(&format!("components: {}\n", comps.len()));
    let mut items = Vec::new();
    for c in &comps {
        let sub = rep.reduced.induced_subdiagram(*c)?;
        let label = classify_component(&sub).to_string();
        let params: Vec<String> = c.iter().map(|v| format!("{}={}", rep.reduced.name(v), rep.reduced.param(v))).collect();
        text.push_str(&format!("  {} {label}: {}\n", rep.reduced.format_set(*c), params.join(" ")));
        items.push(json!({ "vertices": names(&rep.reduced, *c), "type": label }));
    }
    let value = json!({ "collapsed": collapsed, "components": comps.len() });
    Ok(Report::new("collapse", value, items, text))
}

fn check(d: &CoxeterDiagram, admissible: Option<&str>) -> Outcome {
    let violation = collapse_violation(d).map(|(u, v)| format!("{}-{}", d.name(u), d.name(v)));
    let collapse_free = violation.is_none();
    let mut text = match &violation {
        None => "collapse-free: yes\n".to_string(),
        Some(e) => format!("collapse-free: no (edge {e})\n"),
    };
    let obstruction = if collapse_free { commutativity_obstruction(d) } else { None };
    let commutative = collapse_free.then_some(obstruction.is_none());
    match (&commutative, &obstruction) {
        (None, _) => text.push_str("commutative: n/a\n"),
        (Some(true), _) => text.push_str("commutative: yes\n"),
        (Some(false), Some(why)) => text.push_str(&format!("commutative: no ({why})\n")),
        (Some(false), None) => text.push_str("commutative: no\n"),
    }
    let mut value = json!({
        "collapse_free": collapse_free,
        "violation": violation,
        "commutative": commutative,
        "obstruction": obstruction,
    });
    if let Some(r) = admissible {
        let set = d.set_of(&split_names(r))?;
        let ok = is_admissible(d, set)?;
        text.push_str(&format!("admissible {}: {}\n", d.format_set(set), if ok { "yes" } else { "no" }));
        value["admissible"] = json!(ok);
    }
    Ok(Report::new("check", value, Vec::new(), text))
}

fn dim(d: &CoxeterDiagram) -> Outcome {
    let result = dimension(d)?;
    let token = result.to_string();
    let (text, value) = match &result {
        Dimension::Finite(_) => (token.clone(), json!(token)),
        Dimension::Infinite { component } | Dimension::Unknown { component } => {
            (format!("{token}\ncomponent: {component}"), json!({ "dimension": token, "component": component }))
        }
    };
    Ok(Report::new("dimension", value, Vec::new(), text))
}

fn wq_basis(d: &CoxeterDiagram, cap: usize) -> Outcome {
    if !d.is_simply_laced() {
        let m = DihedralZeroModule::new(d)?;
        let zero = (0..2).find(|&v| d.param(v).is_zero()).expect("one zero endpoint");
        let labels: Vec<String> = (0..m.dim())
            .map(|i| {
                let (starts_zero, len) = m.label(i);
                let first = if starts_zero { zero } else { 1 - zero };
                let word: Vec<&str> = (0..len).map(|k| d.name(if k % 2 == 0 { first } else { 1 - first })).collect();
                if word.is_empty() { "1".to_string() } else { word.join("·") }
            })
            .collect();
        let text = format!("{} basis elements\n{}", labels.len(), labels.join("\n"));
        return Ok(Report::new("basis", json!(labels.len()), labels.iter().map(|l| json!(l)).collect(), text));
    }
    let h = SimplyLacedHecke::new(d, cap)?;
    let labels: Vec<String> = (0..h.dim()).map(|i| h.format_index(i)).collect();
    let text = format!("{} basis elements\n{}", labels.len(), labels.join("\n"));
    Ok(Report::new("basis", json!(labels.len()), labels.iter().map(|l| json!(l)).collect(), text))
}

fn independent_basis(a: &HGRAlgebra) -> Outcome {
    let basis = a.basis()?;
    let labels: Vec<String> = basis.iter().map(|&i| format!("X{}", a.format_set(i))).collect();
    let text = format!("{} basis elements\n{}", labels.len(), labels.join("\n"));
    Ok(Report::new("basis", json!(labels.len()), labels.iter().map(|l| json!(l)).collect(), text))
}

fn cartan(a: &HGRAlgebra) -> Outcome {
    let diag = a.cartan_matrix()?;
    let mut text = String::from("simple\tdim P\n");
    let mut items = Vec::new();
    let mut total = 0u128;
    for (i, c) in &diag {
        total += c;
        text.push_str(&format!("{}\t{c}\n", a.format_set(*i)));
        items.push(json!({ "simple": graph_names(a.graph(), *i), "multiplicity": c.to_string() }));
    }
    text.push_str(&format!("total\t{total}\n"));
    Ok(Report::new("cartan", json!(total.to_string()), items, text))
}

fn idempotents(a: &HGRAlgebra) -> Outcome {
    let all = a.idempotents()?;
    let mut text = String::new();
    let mut items = Vec::new();
    for (i, e) in &all {
        let shown = a.format_element(e);
        text.push_str(&format!("E{} = {shown}\n", a.format_set(*i)));
        items.push(json!({ "simple": graph_names(a.graph(), *i), "element": shown }));
    }
    Ok(Report::new("idempotents", json!(all.len()), items, text))
}

fn radical(a: &HGRAlgebra) -> Outcome {
    let basis = a.radical_basis()?;
    let labels: Vec<String> = basis.iter().map(|&i| format!("X{}", a.format_set(i))).collect();
    let text = format!("radical dimension {}\n{}", labels.len(), labels.join("\n"));
    Ok(Report::new("radical", json!(labels.len()), labels.iter().map(|l| json!(l)).collect(), text))
}

fn socle(a: &HGRAlgebra, simple: Option<&str>) -> Outcome {
    let labels = match simple {
        Some(s) => vec![graph_set(a.graph(), s)?],
        None => a.simple_labels()?,
    };
    let mut text = String::new();
    let mut items = Vec::new();
    for i in labels {
        let soc = a.socle_labels(i)?;
        let shown: Vec<String> = soc.iter().map(|&j| format!("X{}·E{}", a.format_set(i | j), a.format_set(i))).collect();
        text.push_str(&format!("soc P{} = {}\n", a.format_set(i), shown.join(" ⊕ ")));
        items.push(json!({
            "projective": graph_names(a.graph(), i),
            "socle": soc.iter().map(|&j| graph_names(a.graph(), j)).collect::<Vec<_>>(),
        }));
    }
    Ok(Report::new("socle", json!(items.len()), items, text))
}

fn induce(a: &HGRAlgebra, sub: &str, simple: Option<&str>, projective: Option<&str>) -> Outcome {
    let g = a.graph();
    let sub = graph_set(g, sub)?;
    let (letter, out) = match (simple, projective) {
        (Some(i), _) => ("C", a.induce_simple_semisimple(sub, graph_set(g, i)?)?),
        (None, Some(j)) => ("P", a.induce_projective(sub, graph_set(g, j)?)?),
        (None, None) => return Err(Failure::usage("one of --simple or --projective is required")),
    };
    let shown: Vec<String> = out.iter().map(|&k| format!("{letter}{}", a.format_set(k))).collect();
    let text = shown.join(" ⊕ ");
    let items = out.iter().map(|&k| json!(graph_names(g, k))).collect();
    Ok(Report::new("induce", json!(out.len()), items, text))
}

fn restrict(a: &HGRAlgebra, sub: &str, simple: &str) -> Outcome {
    let g = a.graph();
    let sub = graph_set(g, sub)?;
    let i = graph_set(g, simple)?;
    let r = a.restrict_simple(i, sub)?;
    let text = format!("C{}", a.format_set(r));
    Ok(Report::new("restrict", json!(graph_names(g, r)), Vec::new(), text))
}

fn composition(text: &str) -> std::result::Result<Composition, Failure> {
    Ok(Composition::parse(text)?)
}

/// Parses `2*13-21+4` style sums.
fn comp_sum(text: &str) -> std::result::Result<CompSum, Failure> {
    let mut out = CompSum::zero();
    let spaced = text.replace('-', "+-");
    for raw in spaced.split('+').map(str::trim).filter(|t| !t.is_empty()) {
        let (sign, body) = match raw.strip_prefix('-') {
            Some(b) => (-1, b.trim()),
            None => (1, raw),
        };
        let (coeff, comp) = match body.split_once('*') {
            Some((c, a)) => {
                let c: i64 = c.trim().parse().map_err(|_| Failure::usage(format!("bad coefficient in `{raw}`")))?;
                (c, a.trim())
            }
            None => (1, body),
        };
        out.add_term(composition(comp)?, sign * coeff);
    }
    Ok(out)
}

fn sum_report(kind: &'static str, x: &CompSum) -> Report {
    let items = x.terms().map(|(a, c)| json!({ "composition": a.to_string(), "coefficient": c })).collect();
    Report::new(kind, json!(x.to_string()), items, x.to_string())
}

fn tensor_report(kind: &'static str, x: &TensorSum) -> Report {
    let items = x
        .terms()
        .map(|(a, b, c)| json!({ "left": a.to_string(), "right": b.to_string(), "coefficient": c }))
        .collect();
    Report::new(kind, json!(x.to_string()), items, x.to_string())
}

fn g0(op: &G0Op) -> Outcome {
    match op {
        G0Op::Product { a, b, projective } => {
            let (a, b) = (composition(a)?, composition(b)?);
            let p = if *projective { comp_product(&a, &b) } else { g0_product(&a, &b)? };
            Ok(sum_report("product", &p))
        }
        G0Op::Coproduct { a, projective } => {
            let a = composition(a)?;
            let c = if *projective { comp_coproduct(&a) } else { g0_coproduct(&a)? };
            Ok(tensor_report("coproduct", &c))
        }
        G0Op::Antipode { a, projective } => {
            let a = composition(a)?;
            let s = if *projective {
                let (sign, c) = antipode_comp(&a);
                CompSum::signed(c, sign)
            } else {
                antipode_g0(&a)?
            };
            Ok(sum_report("antipode", &s))
        }
        G0Op::Pairing { x, y } => {
            let v = pairing(&comp_sum(x)?, &comp_sum(y)?);
            Ok(Report::new("pairing", json!(v), Vec::new(), v.to_string()))
        }
        G0Op::Bialgebra { a, b } => {
            let w = bialgebra_check(&composition(a)?, &composition(b)?)?;
            let text = format!(
                "Δ(product) = {}\nproduct of Δ = {}\ncompatible: {}",
                w.coproduct_of_product,
                w.product_of_coproducts,
                if w.differs() { "no" } else { "yes" }
            );
            let value = json!({
                "compatible": !w.differs(),
                "coproduct_of_product": w.coproduct_of_product.to_string(),
                "product_of_coproducts": w.product_of_coproducts.to_string(),
            });
            Ok(Report::new("bialgebra", value, Vec::new(), text))
        }
    }
}

fn bratteli_cmd(levels: u32, dot: bool) -> Outcome {
    const MAX_LEVELS: u32 = 20;
    if levels > MAX_LEVELS {
        return Err(Error::OutOfRange { what: "levels".into(), value: levels as usize, max: MAX_LEVELS as usize }.into());
    }
    let b = bratteli(levels);
    let text = if dot { b.to_dot() } else { b.to_text() };
    let items = b
        .levels
        .iter()
        .map(|l| json!(l.iter().map(Composition::to_string).collect::<Vec<_>>()))
        .collect();
    let edges: Vec<Value> = b.edges.iter().map(|(u, l)| json!([u.to_string(), l.to_string()])).collect();
    Ok(Report::new("bratteli", json!({ "levels": levels, "edges": edges }), items, text))
}

fn fibdecomp(n: usize, nil: &str) -> Outcome {
    let mut r = VertexSet::EMPTY;
    for p in split_names(nil) {
        let k: usize = p.parse().map_err(|_| Failure::usage(format!("bad position `{p}`")))?;
        if k == 0 || k > n {
            return Err(Failure::usage(format!("position {k} is outside 1..={n}")));
        }
        r.insert(k - 1);
    }
    let rows = fib_decomposition(n, r)?;
    let one_based = |s: VertexSet| -> Vec<usize> { s.iter().map(|v| v + 1).collect() };
    let total: u128 = rows.iter().map(|(_, c)| c).sum();
    let terms: Vec<String> = rows.iter().map(|(_, c)| c.to_string()).collect();
    let mut text = format!("{total} = {}\n", terms.join(" + "));
    for (i, c) in &rows {
        let shown: Vec<String> = one_based(*i).iter().map(usize::to_string).collect();
        text.push_str(&format!("{{{}}}\t{c}\n", shown.join(",")));
    }
    let items = rows.iter().map(|(i, c)| json!({ "simple": one_based(*i), "multiplicity": c.to_string() })).collect();
    Ok(Report::new("fibdecomp", json!(total.to_string()), items, text))
}

fn scan_min_dim(n: usize, bound: usize) -> Outcome {
    let scan = min_dimension_scan_type_a(n, bound)?;
    let text = format!("minimum {}\nattained at {}", scan.minimum, scan.argmin.join(" "));
    let items = scan.argmin.iter().map(|p| json!(p)).collect();
    Ok(Report::new("scan-min-dim", json!(scan.minimum.to_string()), items, text))
}

fn scan_conjecture(d: &CoxeterDiagram) -> Outcome {
    let rep = conjecture_scan(d)?;
    let minimum = rep.minimum.as_ref().map(ToString::to_string);
    let mut text = format!(
        "bipartite: {}\nindependent sets: {}\npatterns checked: {} ({} skipped with infinite blocks)\n",
        if rep.bipartite { "yes" } else { "no" },
        rep.independent_sets,
        rep.patterns_checked,
        rep.skipped.len()
    );
    match &minimum {
        Some(m) => text.push_str(&format!("minimum {m} at {}\n", rep.argmin.join(" "))),
        None => text.push_str("minimum: none (every pattern has an infinite block)\n"),
    }
    text.push_str(&format!("counterexample: {}\n", if rep.counterexample { "yes" } else { "no" }));
    let value = json!({
        "bipartite": rep.bipartite,
        "independent_sets": rep.independent_sets.to_string(),
        "patterns_checked": rep.patterns_checked,
        "skipped": rep.skipped.len(),
        "minimum": minimum,
        "counterexample": rep.counterexample,
    });
    Ok(Report::new("scan-conjecture", value, rep.argmin.iter().map(|p| json!(p)).collect(), text))
}

/// Checks each component of the collapsed diagram on its explicit module;
/// components with no explicit module are listed as skipped.
fn verify_rel(d: &CoxeterDiagram, samples: usize, cap: usize) -> Outcome {
    let reduced = collapsed_subset(d).reduced;
    let mut text = String::new();
    let mut items = Vec::new();
    let (mut checked, mut skipped) = (0, 0);
    for comp in reduced.connected_components() {
        let c = reduced.induced_subdiagram(comp)?;
        let name = reduced.format_set(comp);
        let rep = if c.is_simply_laced() {
            Some(verify_relations(&SimplyLacedHecke::new(&c, cap)?, samples))
        } else {
            DihedralZeroModule::new(&c).ok().map(|m| verify_relations(&m, samples))
        };
        let Some(rep) = rep else {
            skipped += 1;
            text.push_str(&format!("{name}: skipped, no explicit module\n"));
            items.push(json!({ "component": name, "skipped": true }));
            continue;
        };
        if let Some(why) = &rep.failure {
            return Err(Failure::domain("verification_failed", format!("{name}: {why}")));
        }
        checked += 1;
        text.push_str(&format!(
            "{name}: {} relations hold on {} of {} basis vectors\n",
            rep.relations_checked, rep.vectors_checked, rep.dim
        ));
        items.push(json!({
            "component": name,
            "skipped": false,
            "dim": rep.dim,
            "vectors_checked": rep.vectors_checked,
            "relations_checked": rep.relations_checked,
        }));
    }
    let value = json!({ "checked": checked, "skipped": skipped });
    Ok(Report::new("verify-relations", value, items, text))
}

fn verify_anti(n: u32) -> Outcome {
    const MAX_N: u32 = 12;
    if n > MAX_N {
        return Err(Error::OutOfRange { what: "composition size".into(), value: n as usize, max: MAX_N as usize }.into());
    }
    let comp = verify_antipode(n);
    let g0 = verify_antipode_g0(n);
    let failures: Vec<String> = comp.failures.iter().chain(&g0.failures).cloned().collect();
    if !failures.is_empty() {
        return Err(Failure::domain("verification_failed", format!("antipode fails on {}", failures.join(" "))));
    }
    let text = format!(
        "antipode holds: {} compositions, {} proper compositions, sizes 0..={n}",
        comp.compositions_checked, g0.compositions_checked
    );
    let value = json!({ "compositions": comp.compositions_checked, "proper": g0.compositions_checked });
    Ok(Report::new("verify-antipode", value, Vec::new(), text))
}

fn parse_field(text: &str) -> std::result::Result<Field, Failure> {
    if text == "rational" {
        return Ok(Field::Rational);
    }
    let p = text
        .strip_prefix("fp:")
        .and_then(|p| p.parse::<u64>().ok())
        .ok_or_else(|| Failure::usage(format!("expected `rational` or `fp:<p>`, found `{text}`")))?;
    Ok(Field::prime(p)?)
}

fn verify_moebius(path: &Path, field: &str) -> Outcome {
    let field = parse_field(field)?;
    let Input::Poset(z) = load(path)? else {
        return Err(Failure::domain("wrong_input", "expected a poset file"));
    };
    let rep = moebius_check(&z, field)?;
    if let Some(why) = &rep.failure {
        return Err(Failure::domain("verification_failed", why.clone()));
    }
    let text = format!(
        "Möbius identities hold: {} elements, {} independent sets = {} ideals, {} products checked",
        rep.elements, rep.independent_sets, rep.ideals, rep.pairs_checked
    );
    let value = json!({
        "elements": rep.elements,
        "independent_sets": rep.independent_sets,
        "ideals": rep.ideals,
        "pairs_checked": rep.pairs_checked,
    });
    Ok(Report::new("verify-moebius", value, Vec::new(), text))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> (i32, String) {
        run(std::iter::once("hecke").chain(args.iter().copied()))
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(go(&[]).0, EXIT_USAGE);
        assert_eq!(go(&["frobnicate"]).0, EXIT_USAGE);
        let (code, out) = go(&["--json", "bratteli", "x"]);
        assert_eq!(code, EXIT_USAGE);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["error_code"], "usage");
        assert_eq!(go(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn g0_and_errors() {
        assert_eq!(go(&["g0", "product", "132", "41"]), (0, "13241 + 1361\n".into()));
        let (code, out) = go(&["g0", "product", "112", "3"]);
        assert_eq!(code, EXIT_DOMAIN);
        assert!(out.starts_with("error[improper_composition]"));
        assert_eq!(go(&["g0", "pairing", "2*13-21+4", "13+4"]), (0, "3\n".into()));
        assert_eq!(go(&["g0", "antipode", "--projective", "21"]).1, "-12\n");
    }

    #[test]
    fn caps_exit_3() {
        assert_eq!(go(&["scan-min-dim", "12"]).0, EXIT_CAP);
        assert_eq!(go(&["fibdecomp", "40"]).0, EXIT_CAP);
    }

    #[test]
    fn sums_parse() {
        let s = comp_sum("2*13 - 21 + 10,2").unwrap();
        assert_eq!(s.terms().count(), 3);
        assert!(comp_sum("x*13").is_err());
    }
}
