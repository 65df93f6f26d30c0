//! Command-line front end. `run` does all the work so the commands can be
//! tested without spawning processes.

use bordered::catalog::{Catalog, CatalogEntry, Payload};
use bordered::curve::{
    apply_mapping_class, curve_to_type_d, filling_dimensions, pegboard_summary, type_d_to_curve, Move, PLCurve,
};
use bordered::gluing::{h1_of_gluing, GluingMatrix};
use bordered::grading_group::GradingElement;
use bordered::pairing::{box_tensor, box_tensor_graded, BoxComplex, PairingError};
use bordered::rational::fmt_q;
use bordered::surgery::{d_lens, d_surgery, knot_complement_cfd, v_h};
use bordered::type_a::{PathBound, TypeAStructure};
use bordered::type_d::TypeDStructure;
use bordered::verify::run_checks;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(name = "bordered", version, about = "Exact bordered Heegaard Floer calculator")]
pub struct Cli {
    /// Fixtures directory
    #[arg(long, global = true, default_value = "./fixtures")]
    pub fixtures: PathBuf,
    /// Machine-readable output
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Box tensor product of a type A and a type D structure, with homology.
    Pair {
        /// Type A entry or file (a type D entry is converted first)
        a: String,
        /// Type D entry or file
        d: String,
        #[arg(long)]
        base_a: Option<String>,
        #[arg(long)]
        base_d: Option<String>,
    },
    /// Refined gradings of a type D or type A structure.
    Grade {
        entry: String,
        #[arg(long)]
        base: Option<String>,
        /// Expected number of spin^c classes, used to pick the indeterminacy root
        #[arg(long)]
        classes: Option<usize>,
    },
    /// d-invariants of L(p, q), or of p-surgery on a catalog knot.
    Dinv { p: i64, q_or_knot: String },
    /// First homology of the knot complement glued to N by q,r,p,s.
    #[command(allow_negative_numbers = true)]
    H1 { matrix: String },
    /// Per-spin^c dimensions of a Dehn filling of a knot complement.
    Fill {
        knot: String,
        /// Slope p/q (or an integer)
        #[arg(allow_hyphen_values = true)]
        slope: String,
    },
    /// Apply mapping-class moves (twist:a,b:n, reflect:y=1/2, reflect:y=x, reflect:y=-x).
    Twist {
        entry: String,
        #[arg(required = true)]
        moves: Vec<String>,
    },
    /// Cancel the ∅-labelled edges of a type D structure.
    Reduce { entry: String },
    /// Convert between type D, type A and curve forms.
    Convert {
        entry: String,
        #[arg(long, value_enum)]
        to: Form,
    },
    /// Recompute every check of the reproduction suite.
    VerifyPaper,
    /// Write an entry as JSON, DOT, SVG or fixture text.
    Export {
        entry: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Filling slope p/q drawn in SVG output
        #[arg(long, allow_hyphen_values = true)]
        slope: Option<String>,
    },
    /// Names in the catalog.
    List,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Form {
    TypeA,
    TypeD,
    Curve,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Dot,
    Svg,
    Text,
}

#[derive(Debug)]
pub enum Failure {
    /// Bad input: unparsable, invalid, unknown entry. Exit code 2.
    Input(String),
    /// The computation ran and found a failure, or cannot be done. Exit code 1.
    Math(String),
}

impl Failure {
    pub fn code(&self) -> i32 {
        match self {
            Failure::Input(_) => 2,
            Failure::Math(_) => 1,
        }
    }
}

fn input<E: ToString>(e: E) -> Failure {
    Failure::Input(e.to_string())
}

fn math<E: ToString>(e: E) -> Failure {
    Failure::Math(e.to_string())
}

/// Output of a command: human text and the JSON value.
pub struct Output {
    pub text: String,
    pub json: Value,
    pub code: i32,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output { text, json, code: 0 }
    }
}

/// Parse `args` (including the program name) and run; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(&cli) {
        Ok(o) => {
            let body = if cli.json { format!("{}\n", serde_json::to_string_pretty(&o.json).unwrap()) } else { o.text };
            let _ = out.write_all(body.as_bytes());
            o.code
        }
        Err(f) => {
            let msg = match &f {
                Failure::Input(m) | Failure::Math(m) => m,
            };
            let _ = writeln!(err, "error: {msg}");
            f.code()
        }
    }
}

pub fn execute(cli: &Cli) -> Result<Output, Failure> {
    let cat = Catalog::open(&cli.fixtures);
    match &cli.command {
        Command::Pair { a, d, base_a, base_d } => pair(&cat, a, d, base_a.as_deref(), base_d.as_deref()),
        Command::Grade { entry, base, classes } => grade(&cat, entry, base.as_deref(), *classes),
        Command::Dinv { p, q_or_knot } => dinv(&cat, *p, q_or_knot),
        Command::H1 { matrix } => h1(matrix),
        Command::Fill { knot, slope } => fill(&cat, knot, slope),
        Command::Twist { entry, moves } => twist(&cat, entry, moves),
        Command::Reduce { entry } => reduce(&cat, entry),
        Command::Convert { entry, to } => convert(&cat, entry, *to),
        Command::VerifyPaper => {
            let r = run_checks(&cat);
            let code = if r.all_pass() { 0 } else { 1 };
            Ok(Output { text: r.table(), json: r.to_json(), code })
        }
        Command::Export { entry, format, slope } => export(&cat, entry, *format, slope.as_deref()),
        Command::List => {
            let names = cat.list();
            Ok(Output::ok(names.iter().map(|n| format!("{n}\n")).collect(), json!(names)))
        }
    }
}

fn load(cat: &Catalog, arg: &str) -> Result<CatalogEntry, Failure> {
    cat.resolve(arg).map_err(input)
}

/// Type D structure of an entry: a graph, a curve, or a knot complex at framing 0.
fn as_type_d(entry: &CatalogEntry) -> Result<TypeDStructure, Failure> {
    match &entry.payload {
        Payload::TypeD(d) => Ok(d.clone()),
        Payload::Curve(c) => curve_to_type_d(c).map_err(math),
        Payload::FilteredComplex(c) => knot_complement_cfd(c, 0).map_err(math),
        _ => Err(Failure::Input(format!("{} is not a type D structure", entry.name))),
    }
}

fn as_curve(entry: &CatalogEntry) -> Result<PLCurve, Failure> {
    match &entry.payload {
        Payload::Curve(c) => Ok(c.clone()),
        _ => type_d_to_curve(&as_type_d(entry)?).map_err(math),
    }
}

fn as_type_a(entry: &CatalogEntry) -> Result<TypeAStructure, Failure> {
    match &entry.payload {
        Payload::TypeA(a) => Ok(a.clone()),
        _ => {
            let d = as_type_d(entry)?;
            let bound = if d.is_bounded() { PathBound::NoRepeatedEdge } else { PathBound::MaxLength(2 * d.generators.len()) };
            TypeAStructure::from_type_d_with(&d, bound).map(|(a, _)| a).map_err(math)
        }
    }
}

fn gradings_json(g: &BTreeMap<String, GradingElement>) -> Value {
    Value::Object(g.iter().map(|(k, v)| (k.clone(), json!(v.to_string()))).collect())
}

fn pair(cat: &Catalog, a: &str, d: &str, base_a: Option<&str>, base_d: Option<&str>) -> Result<Output, Failure> {
    let ta = as_type_a(&load(cat, a)?)?;
    let td = as_type_d(&load(cat, d)?)?;
    if !td.is_bounded() {
        return Err(Failure::Math(format!("{d} has a directed cycle; the box tensor product needs a bounded type D structure")));
    }
    let graded = match (ta.generators.first(), td.generators.first()) {
        (Some(x), Some(y)) => {
            let ga = ta.assign_gradings_a(base_a.unwrap_or(&x.name), None);
            let gd = td.assign_gradings(base_d.unwrap_or(&y.name), None);
            match (ga, gd) {
                (Ok(ga), Ok(gd)) => Some(box_tensor_graded(&ga, &gd).map_err(math)?),
                _ => None,
            }
        }
        _ => None,
    };
    let complex = match graded {
        Some(c) => c,
        None => box_tensor(&ta, &td).map_err(math)?,
    };
    let report = match complex.report() {
        Err(PairingError::Grading(_)) => BoxComplex { gradings: None, ..complex }.report(),
        r => r,
    }
    .map_err(math)?;
    let mut text = format!("dimension {}\n", report.dimension());
    text.push_str(&format!("survivors: {}\n", report.surviving.join(" ")));
    if let Some(c) = &report.spinc_classes {
        let parts: Vec<String> = c.iter().map(|x| format!("{{{}}}", x.join(", "))).collect();
        text.push_str(&format!("spin^c classes: {}\n", parts.join(" ")));
    }
    if let Some(g) = &report.relative_gradings {
        for (k, v) in g {
            text.push_str(&format!("  gr_Q({k}) = {}\n", fmt_q(v)));
        }
    }
    Ok(Output::ok(text, report.to_json()))
}

fn grade(cat: &Catalog, entry: &str, base: Option<&str>, classes: Option<usize>) -> Result<Output, Failure> {
    let e = load(cat, entry)?;
    let (base, gradings, ind, violations) = match &e.payload {
        Payload::TypeA(a) => {
            let b = base.map(str::to_string).or_else(|| a.generators.first().map(|g| g.name.clone()));
            let b = b.ok_or_else(|| input("no generators"))?;
            let g = a.assign_gradings_a(&b, classes).map_err(math)?;
            let v = g.relation_violations();
            (b, g.gradings, g.indeterminacy, v)
        }
        _ => {
            let d = as_type_d(&e)?;
            let b = base.map(str::to_string).or_else(|| d.generators.first().map(|g| g.name.clone()));
            let b = b.ok_or_else(|| input("no generators"))?;
            let g = d.assign_gradings(&b, classes).map_err(math)?;
            let v = g.relation_violations();
            (b, g.gradings, g.indeterminacy, v)
        }
    };
    let mut text = String::new();
    for (k, v) in &gradings {
        text.push_str(&format!("gr({k}) = {v}\n"));
    }
    let ind_s = ind.as_ref().map_or("none".to_string(), |h| h.to_string());
    text.push_str(&format!("indeterminacy {ind_s}\n"));
    for v in &violations {
        text.push_str(&format!("relation fails on {v}\n"));
    }
    let json = json!({
        "base": base,
        "gradings": gradings_json(&gradings),
        "indeterminacy": ind.map(|h| h.to_string()),
        "relation_violations": violations,
    });
    let code = if violations.is_empty() { 0 } else { 1 };
    Ok(Output { text, json, code })
}

fn dinv(cat: &Catalog, p: i64, arg: &str) -> Result<Output, Failure> {
    let (values, what): (Vec<(i64, String)>, Value) = match arg.parse::<i64>() {
        Ok(qq) => {
            let v = d_lens(p, qq).map_err(input)?;
            (v.iter().enumerate().map(|(i, d)| (i as i64, fmt_q(d))).collect(), json!({"lens": [p, qq]}))
        }
        Err(_) => {
            let e = load(cat, &knot_entry(cat, arg))?;
            let c = e.complex().cloned().ok_or_else(|| input(format!("{arg} is not a knot complex")))?;
            let data = v_h(&c).map_err(math)?;
            let v = d_surgery(p, &data).map_err(input)?;
            (v.iter().map(|(s, d)| (*s, fmt_q(d))).collect(), json!({"surgery": p, "knot": arg}))
        }
    };
    let text = values.iter().map(|(s, d)| format!("[{s}] {d}\n")).collect();
    let json = json!({
        "manifold": what,
        "values": values.iter().map(|(s, d)| json!({"spinc": s, "d": d})).collect::<Vec<_>>(),
    });
    Ok(Output::ok(text, json))
}

fn h1(matrix: &str) -> Result<Output, Failure> {
    let m: GluingMatrix = matrix.parse().map_err(input)?;
    let g = h1_of_gluing(&m);
    let json = json!({
        "matrix": [m.q, m.r, m.p, m.s],
        "group": g.to_string(),
        "order": g.order().map(|o| o.to_string()),
        "cyclic": g.is_cyclic(),
    });
    Ok(Output::ok(format!("{g}\n"), json))
}

/// Short knot names: `unknot`, `T2-5` and so on map to catalog complexes.
fn knot_entry(cat: &Catalog, name: &str) -> String {
    let candidates = [name.to_string(), format!("cfk.staircase.{name}"), format!("cfk.{name}")];
    candidates
        .iter()
        .find(|c| std::path::Path::new(c.as_str()).is_file() || cat.load(c).is_ok())
        .cloned()
        .unwrap_or_else(|| name.to_string())
}

fn parse_slope(s: &str) -> Result<(i64, i64), Failure> {
    let bad = || Failure::Input(format!("cannot read slope {s:?}; expected p/q"));
    let (p, qq) = match s.split_once('/') {
        Some((p, qq)) => (p.trim().parse().map_err(|_| bad())?, qq.trim().parse().map_err(|_| bad())?),
        None => (s.trim().parse().map_err(|_| bad())?, 1),
    };
    Ok((p, qq))
}

fn fill(cat: &Catalog, knot: &str, slope: &str) -> Result<Output, Failure> {
    let (p, qq) = parse_slope(slope)?;
    let e = load(cat, &knot_entry(cat, knot))?;
    let summary = pegboard_summary(&as_curve(&e)?).map_err(math)?;
    let dims = filling_dimensions(&summary, p, qq).map_err(input)?;
    let text = match (dims.first(), dims.iter().all(|d| Some(d) == dims.first())) {
        (Some(d), true) => format!("{} classes × dim {d}\n", dims.len()),
        _ => format!(
            "{} classes, dimensions {}\n",
            dims.len(),
            dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ")
        ),
    };
    let json = json!({
        "knot": knot,
        "slope": format!("{p}/{qq}"),
        "class_dimensions": dims,
        "total": dims.iter().sum::<u64>(),
        "l_space": dims.iter().all(|&d| d == 1),
        "tau": summary.tau,
        "genus": summary.genus,
    });
    Ok(Output::ok(text, json))
}

fn twist(cat: &Catalog, entry: &str, moves: &[String]) -> Result<Output, Failure> {
    let e = load(cat, entry)?;
    let moves: Vec<Move> = moves.iter().map(|m| m.parse()).collect::<Result<_, _>>().map_err(input)?;
    let c = apply_mapping_class(&as_curve(&e)?, &moves).map_err(math)?;
    let d = curve_to_type_d(&c).map_err(math)?;
    let text = d.to_text();
    Ok(Output::ok(text.clone(), json!({"type_d": type_d_json(&d), "curve": c.to_text()})))
}

fn reduce(cat: &Catalog, entry: &str) -> Result<Output, Failure> {
    let e = load(cat, entry)?;
    let d = e.type_d().ok_or_else(|| input(format!("{entry} is not a type D structure")))?;
    let r = d.edge_reduce();
    let json = json!({
        "generators_before": d.generators.len(),
        "generators_after": r.generators.len(),
        "type_d": type_d_json(&r),
    });
    Ok(Output::ok(r.to_text(), json))
}

fn convert(cat: &Catalog, entry: &str, to: Form) -> Result<Output, Failure> {
    let e = load(cat, entry)?;
    let (text, json) = match to {
        Form::TypeA => {
            let a = as_type_a(&e)?;
            (a.to_text(), type_a_json(&a))
        }
        Form::TypeD => {
            let d = as_type_d(&e)?;
            (d.to_text(), type_d_json(&d))
        }
        Form::Curve => {
            let c = as_curve(&e)?;
            (c.to_text(), curve_json(&c))
        }
    };
    Ok(Output::ok(text, json))
}

fn export(cat: &Catalog, entry: &str, format: Format, slope: Option<&str>) -> Result<Output, Failure> {
    let e = load(cat, entry)?;
    let text = match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&entry_json(&e)).unwrap()),
        Format::Dot => as_type_d(&e)?.to_dot(&e.name),
        Format::Svg => {
            let filling = slope.map(parse_slope).transpose()?;
            as_curve(&e)?.to_svg(filling)
        }
        Format::Text => match &e.payload {
            Payload::TypeD(d) => d.to_text(),
            Payload::TypeA(a) => a.to_text(),
            Payload::Curve(c) => c.to_text(),
            Payload::FilteredComplex(c) => c.to_text(),
            Payload::Gluing(m) => format!("matrix {},{},{},{}\n", m.q, m.r, m.p, m.s),
        },
    };
    Ok(Output::ok(text.clone(), json!({"name": e.name, "format": format!("{format:?}").to_lowercase(), "content": text})))
}

fn type_d_json(d: &TypeDStructure) -> Value {
    json!({
        "generators": d.generators.iter().map(|g| json!({"name": g.name, "idempotent": g.idem})).collect::<Vec<_>>(),
        "edges": d.edges.iter().map(|e| json!({"source": e.source, "target": e.target, "label": e.label.name()})).collect::<Vec<_>>(),
    })
}

fn type_a_json(a: &TypeAStructure) -> Value {
    json!({
        "generators": a.generators.iter().map(|g| json!({"name": g.name, "idempotent": g.idem})).collect::<Vec<_>>(),
        "operations": a.operations.iter().map(|o| json!({
            "input": o.input,
            "chords": o.chords.chords().iter().map(|c| c.name()).collect::<Vec<_>>(),
            "output": o.output,
        })).collect::<Vec<_>>(),
    })
}

fn curve_json(c: &PLCurve) -> Value {
    json!({
        "components": c.components.iter().map(|k| json!({
            "vertices": k.vertices.iter().map(|(x, y)| [fmt_q(x), fmt_q(y)]).collect::<Vec<_>>(),
            "wrap": [k.wrap.0, k.wrap.1],
        })).collect::<Vec<_>>(),
    })
}

fn entry_json(e: &CatalogEntry) -> Value {
    let body = match &e.payload {
        Payload::TypeD(d) => type_d_json(d),
        Payload::TypeA(a) => type_a_json(a),
        Payload::Curve(c) => curve_json(c),
        Payload::FilteredComplex(c) => json!({
            "generators": c.generators.iter().map(|g| json!({"name": g.name, "alexander": g.alexander, "maslov": g.maslov})).collect::<Vec<_>>(),
            "arrows": c.differentials.iter().map(|(s, t)| json!([s, t])).collect::<Vec<_>>(),
        }),
        Payload::Gluing(m) => json!({"matrix": [m.q, m.r, m.p, m.s]}),
    };
    json!({
        "name": e.name,
        "kind": e.kind.dir(),
        "provenance": e.provenance,
        "figure_derived": e.figure_derived,
        "data": body,
    })
}
