//! Command dispatch. Every command builds a serializable value and renders
//! it in the requested format.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;
use silting_core::classify::{verify_bijections, Budget, Classifier, Report};
use silting_core::derived::{DerivedCategory, Stalk, WindowKind, WindowSpec};
use silting_core::exceptional::{is_exceptional_sequence, mu_rev, mutate, MutationDirection, Sign};
use silting_core::orbit::{Ambient, OrbitCategory};
use silting_core::quiver_rep::Quiver;
use silting_core::root_data::{fuss_catalan, make_root_datum, DynkinType, Variant};
use silting_core::{Error, Field, PrimeField, Rationals};

use crate::args::{AmbientArg, Cli, Command, FieldSpec, Format, QuiverArgs};
use crate::model::*;
use crate::runner::RayonRunner;

/// Rendered output and the exit status it should produce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub body: String,
    pub status: u8,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded(_) => EXIT_BUDGET,
            Error::TheoremViolation(_) | Error::Arithmetic(_) | Error::Construction(_) => {
                EXIT_CHECK_FAILED
            }
            _ => EXIT_USAGE,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    if let Command::Count(a) = &cli.command {
        return count(cli.format, &a.ty, a.d);
    }
    match cli.field {
        FieldSpec::Rational => with_field(cli, Rationals),
        FieldSpec::Prime(p) => with_field(cli, PrimeField::new(p)?),
    }
}

fn with_field<F: Field>(cli: &Cli, field: F) -> Result<Outcome, CliError> {
    let fmt = cli.format;
    let runner = || {
        RayonRunner::new(cli.workers)
            .map_err(|e| CliError::usage(format!("cannot start workers: {e}")))
    };
    let budget = Budget::new(cli.budget);
    match &cli.command {
        Command::Count(_) => unreachable!("handled without a field"),
        Command::Enumerate(a) => {
            let der = derived(&a.quiver, &field)?;
            let cl = Classifier::new(&der, a.d)?;
            let sets = cl.enumerate(a.kind, &runner()?, &budget)?;
            let out = EnumerateOut {
                ty: type_label(&der),
                d: a.d,
                kind: a.kind.name().to_string(),
                count: sets.len(),
                sets: sets
                    .iter()
                    .map(|s| s.elements.iter().map(|&x| element(&der, x)).collect())
                    .collect(),
            };
            Ok(Outcome {
                body: render_enumerate(fmt, &out)?,
                status: 0,
            })
        }
        Command::Verify(a) => {
            let der = derived(&a.quiver, &field)?;
            let report = verify_bijections(&der, a.d, &runner()?, &budget)?;
            let status = if report.passed() { 0 } else { EXIT_CHECK_FAILED };
            Ok(Outcome {
                body: render_report(fmt, &report_out(&report))?,
                status,
            })
        }
        Command::Mutate(a) => {
            let text = std::fs::read_to_string(&a.input)
                .map_err(|e| CliError::usage(format!("cannot read {}: {e}", a.input.display())))?;
            let input: MutateIn = serde_json::from_str(&text)
                .map_err(|e| CliError::usage(format!("malformed input: {e}")))?;
            let out = run_mutations(&input, &field)?;
            Ok(Outcome {
                body: render_mutate(fmt, &out)?,
                status: 0,
            })
        }
        Command::ExportAr(a) => {
            let der = derived(&a.quiver, &field)?;
            let out = ar_quiver(&der, a.ambient, a.d)?;
            Ok(Outcome {
                body: render_ar(fmt, &out)?,
                status: 0,
            })
        }
        Command::Catalog(a) => {
            let der = derived(&a.quiver, &field)?;
            Ok(Outcome {
                body: render_catalog(fmt, &catalog(&der))?,
                status: 0,
            })
        }
    }
}

fn parse_type(label: &str) -> Result<DynkinType, CliError> {
    Ok(DynkinType::from_str(label)?)
}

fn parse_orientation(spec: &str) -> Result<Vec<[usize; 2]>, CliError> {
    spec.split(',')
        .map(|arrow| {
            let (a, b) = arrow
                .split_once("->")
                .ok_or_else(|| CliError::usage(format!("arrow `{arrow}` is not of the form i->j")))?;
            let num = |s: &str| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| CliError::usage(format!("`{s}` is not a vertex number")))
            };
            Ok([num(a)?, num(b)?])
        })
        .collect()
}

fn build_quiver(ty: DynkinType, arrows: Option<&[[usize; 2]]>) -> Result<Quiver, CliError> {
    match arrows {
        None => Ok(Quiver::dynkin(ty)?),
        Some(arrows) => {
            let zero_based = arrows
                .iter()
                .map(|&[a, b]| {
                    if a == 0 || b == 0 {
                        Err(CliError::usage("vertices are numbered from 1"))
                    } else {
                        Ok((a - 1, b - 1))
                    }
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Quiver::dynkin_oriented(ty, zero_based)?)
        }
    }
}

fn derived<F: Field>(q: &QuiverArgs, field: &F) -> Result<DerivedCategory<F>, CliError> {
    let ty = parse_type(&q.ty)?;
    let arrows = q.orientation.as_deref().map(parse_orientation).transpose()?;
    let quiver = build_quiver(ty, arrows.as_deref())?;
    Ok(DerivedCategory::new(&quiver, field)?)
}

fn type_label<F: Field>(der: &DerivedCategory<F>) -> String {
    der.quiver()
        .dynkin_type()
        .map(|t| t.to_string())
        .unwrap_or_default()
}

fn element<F: Field>(der: &DerivedCategory<F>, s: Stalk) -> Element {
    Element {
        dims: der.catalog().dim_vector(s.ind).to_vec(),
        shift: s.shift,
    }
}

/// Exact JSON number for an arbitrary-size integer.
fn big_number(v: &impl std::fmt::Display) -> serde_json::Number {
    serde_json::Number::from_str(&v.to_string()).expect("decimal digits")
}

fn count(fmt: Format, label: &str, d: u32) -> Result<Outcome, CliError> {
    let datum = make_root_datum(parse_type(label)?)?;
    let full = fuss_catalan(&datum, d, Variant::Full)?;
    let positive = fuss_catalan(&datum, d, Variant::Positive)?;
    let out = CountOut {
        ty: datum.dynkin.to_string(),
        d,
        fuss_catalan: big_number(&full),
        fuss_catalan_positive: big_number(&positive),
    };
    let body = match fmt {
        Format::Json => json(&out),
        Format::Text => format!(
            "{} d={}: fuss_catalan={} fuss_catalan_positive={}\n",
            out.ty, out.d, out.fuss_catalan, out.fuss_catalan_positive
        ),
        Format::Csv => csv_rows(
            &["type", "d", "fuss_catalan", "fuss_catalan_positive"],
            vec![vec![
                out.ty.clone(),
                d.to_string(),
                out.fuss_catalan.to_string(),
                out.fuss_catalan_positive.to_string(),
            ]],
        )?,
        Format::Dot => return Err(no_dot()),
    };
    Ok(Outcome { body, status: 0 })
}

fn report_out(r: &Report) -> ReportOut {
    let c = &r.counts;
    ReportOut {
        ty: r.type_label.clone(),
        d: r.d,
        counts: CountsOut {
            silting: c.silting,
            smc_minus_window: c.smc_minus_window,
            smc_plain_window: c.smc_plain_window,
            sms: c.sms,
            cluster_tilting: c.cluster_tilting,
            fuss_catalan: c.fuss_catalan,
            fuss_catalan_positive: c.fuss_catalan_positive,
        },
        checks: r
            .checks
            .iter()
            .map(|c| CheckOut {
                name: c.name.clone(),
                pass: c.pass,
                witness: c.witness.clone(),
            })
            .collect(),
    }
}

fn run_mutations<F: Field>(input: &MutateIn, field: &F) -> Result<MutateOut, CliError> {
    let ty = parse_type(&input.ty)?;
    let quiver = build_quiver(ty, input.orientation.as_deref())?;
    let der = DerivedCategory::new(&quiver, field)?;
    let mut seq = Vec::with_capacity(input.sequence.len());
    for e in &input.sequence {
        let id = der.catalog().id_of(&e.dims).ok_or_else(|| {
            CliError::usage(format!("{:?} is not the dimension vector of an indecomposable", e.dims))
        })?;
        seq.push(Stalk::new(id, e.shift));
    }
    if let Err(w) = is_exceptional_sequence(&der, &seq) {
        return Err(CliError::usage(format!(
            "input is not an exceptional sequence: {}",
            w.render(|s| der.stalk_label(*s))
        )));
    }
    let elements = |seq: &[Stalk]| seq.iter().map(|&s| element(&der, s)).collect::<Vec<_>>();
    let start = elements(&seq);
    let mut steps = Vec::new();
    for &op in &input.operations {
        let pair = |position: usize, dir| {
            if position == 0 {
                return Err(CliError::usage("positions are numbered from 1"));
            }
            Ok(mutate(&der, &seq, position - 1, dir)?)
        };
        seq = match op {
            Operation::Left { position } => pair(position, MutationDirection::Left)?,
            Operation::Right { position } => pair(position, MutationDirection::Right)?,
            Operation::MuRev { sign } => {
                let sign = match sign {
                    SignArg::Plus => Sign::Plus,
                    SignArg::Minus => Sign::Minus,
                };
                mu_rev(&der, &seq, sign)?
            }
        };
        steps.push(Step {
            operation: op,
            sequence: elements(&seq),
        });
    }
    Ok(MutateOut {
        ty: ty.to_string(),
        input: start,
        steps,
        result: elements(&seq),
    })
}

fn ar_quiver<F: Field>(der: &DerivedCategory<F>, ambient: AmbientArg, d: u32) -> Result<ArOut, CliError> {
    let (nodes, arrows) = match ambient {
        AmbientArg::Derived => {
            let w = WindowSpec::new(WindowKind::Plain, -(d as i32), 0)?;
            let nodes = der.window_indecomposables(&w);
            let mut arrows = Vec::new();
            for (i, &x) in nodes.iter().enumerate() {
                for (j, &y) in nodes.iter().enumerate() {
                    if der.is_irreducible(x, y) {
                        arrows.push([i, j]);
                    }
                }
            }
            (nodes, arrows)
        }
        AmbientArg::Minus | AmbientArg::Plus => {
            let amb = if ambient == AmbientArg::Minus {
                Ambient::minus(d)
            } else {
                Ambient::plus(d)
            };
            let orbit = OrbitCategory::new(der, amb)?;
            let arrows = orbit.ar_arrows().into_iter().map(|(a, b)| [a, b]).collect();
            (orbit.domain().to_vec(), arrows)
        }
    };
    Ok(ArOut {
        ty: type_label(der),
        ambient: match ambient {
            AmbientArg::Derived => "derived",
            AmbientArg::Minus => "minus",
            AmbientArg::Plus => "plus",
        }
        .to_string(),
        d,
        nodes: nodes
            .iter()
            .enumerate()
            .map(|(id, &s)| Node {
                id,
                dims: der.catalog().dim_vector(s.ind).to_vec(),
                shift: s.shift,
            })
            .collect(),
        arrows,
    })
}

fn catalog<F: Field>(der: &DerivedCategory<F>) -> CatalogOut {
    let cat = der.catalog();
    CatalogOut {
        ty: type_label(der),
        arrows: der.quiver().arrows().iter().map(|&(a, b)| [a + 1, b + 1]).collect(),
        indecomposables: (0..cat.len())
            .map(|id| {
                let (shift, nu) = cat.nu(id);
                Indecomposable {
                    id,
                    dims: cat.dim_vector(id).to_vec(),
                    projective: cat.projective_vertex(id).map(|v| v + 1),
                    injective: cat.injective_vertex(id).map(|v| v + 1),
                    tau: cat.tau(id),
                    nu: Translate { shift, id: nu },
                }
            })
            .collect(),
    }
}

fn no_dot() -> CliError {
    CliError::usage("format dot is only available for export-ar")
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn csv_rows(header: &[&str], rows: Vec<Vec<String>>) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let fail = |e: csv::Error| CliError::usage(format!("csv output failed: {e}"));
    w.write_record(header).map_err(fail)?;
    for r in rows {
        w.write_record(&r).map_err(fail)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::usage(format!("csv output failed: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv writes utf-8"))
}

fn dims_text(dims: &[usize]) -> String {
    dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ")
}

fn label(e: &Element) -> String {
    let dims: Vec<String> = e.dims.iter().map(|d| d.to_string()).collect();
    format!("({})[{}]", dims.join(","), e.shift)
}

fn set_text(set: &[Element]) -> String {
    let parts: Vec<String> = set.iter().map(label).collect();
    format!("{{{}}}", parts.join(", "))
}

fn render_enumerate(fmt: Format, out: &EnumerateOut) -> Result<String, CliError> {
    match fmt {
        Format::Json => Ok(json(out)),
        Format::Csv => {
            let mut rows = Vec::new();
            for (i, set) in out.sets.iter().enumerate() {
                for (j, e) in set.iter().enumerate() {
                    rows.push(vec![i.to_string(), j.to_string(), dims_text(&e.dims), e.shift.to_string()]);
                }
            }
            csv_rows(&["set", "element", "dims", "shift"], rows)
        }
        Format::Text => {
            let mut s = format!("{} {} d={}: {} sets\n", out.ty, out.kind, out.d, out.count);
            for set in &out.sets {
                let _ = writeln!(s, "{}", set_text(set));
            }
            Ok(s)
        }
        Format::Dot => Err(no_dot()),
    }
}

fn render_report(fmt: Format, out: &ReportOut) -> Result<String, CliError> {
    let c = &out.counts;
    let counts = [
        ("silting", c.silting),
        ("smc_minus_window", c.smc_minus_window),
        ("smc_plain_window", c.smc_plain_window),
        ("sms", c.sms),
        ("cluster_tilting", c.cluster_tilting),
        ("fuss_catalan", c.fuss_catalan),
        ("fuss_catalan_positive", c.fuss_catalan_positive),
    ];
    match fmt {
        Format::Json => Ok(json(out)),
        Format::Csv => {
            let mut rows: Vec<Vec<String>> = counts
                .iter()
                .map(|(n, v)| vec!["count".into(), n.to_string(), v.to_string(), String::new()])
                .collect();
            for ch in &out.checks {
                rows.push(vec![
                    "check".into(),
                    ch.name.clone(),
                    if ch.pass { "pass" } else { "fail" }.into(),
                    ch.witness.clone().unwrap_or_default(),
                ]);
            }
            csv_rows(&["section", "name", "value", "witness"], rows)
        }
        Format::Text => {
            let mut s = format!("{} d={}\n", out.ty, out.d);
            for (n, v) in counts {
                let _ = writeln!(s, "  {n:<22} {v}");
            }
            for ch in &out.checks {
                match &ch.witness {
                    None => {
                        let _ = writeln!(s, "PASS {}", ch.name);
                    }
                    Some(w) => {
                        let _ = writeln!(s, "FAIL {}: {w}", ch.name);
                    }
                }
            }
            Ok(s)
        }
        Format::Dot => Err(no_dot()),
    }
}

fn op_text(op: &Operation) -> (String, String) {
    match op {
        Operation::Left { position } => ("left".into(), position.to_string()),
        Operation::Right { position } => ("right".into(), position.to_string()),
        Operation::MuRev { sign: SignArg::Plus } => ("mu_rev_plus".into(), String::new()),
        Operation::MuRev { sign: SignArg::Minus } => ("mu_rev_minus".into(), String::new()),
    }
}

fn render_mutate(fmt: Format, out: &MutateOut) -> Result<String, CliError> {
    match fmt {
        Format::Json => Ok(json(out)),
        Format::Csv => {
            let mut rows = Vec::new();
            let mut push = |step: usize, op: (String, String), seq: &[Element]| {
                for (i, e) in seq.iter().enumerate() {
                    rows.push(vec![
                        step.to_string(),
                        op.0.clone(),
                        op.1.clone(),
                        (i + 1).to_string(),
                        dims_text(&e.dims),
                        e.shift.to_string(),
                    ]);
                }
            };
            push(0, ("input".into(), String::new()), &out.input);
            for (k, st) in out.steps.iter().enumerate() {
                push(k + 1, op_text(&st.operation), &st.sequence);
            }
            csv_rows(&["step", "operation", "position", "entry", "dims", "shift"], rows)
        }
        Format::Text => {
            let mut s = format!("{} input: {}\n", out.ty, seq_text(&out.input));
            for st in &out.steps {
                let (name, pos) = op_text(&st.operation);
                let _ = writeln!(s, "{name} {pos}: {}", seq_text(&st.sequence));
            }
            Ok(s)
        }
        Format::Dot => Err(no_dot()),
    }
}

fn seq_text(seq: &[Element]) -> String {
    let parts: Vec<String> = seq.iter().map(label).collect();
    format!("({})", parts.join(", "))
}

fn render_ar(fmt: Format, out: &ArOut) -> Result<String, CliError> {
    let node_label = |n: &Node| {
        label(&Element {
            dims: n.dims.clone(),
            shift: n.shift,
        })
    };
    match fmt {
        Format::Json => Ok(json(out)),
        Format::Dot => {
            let mut s = String::from("digraph AR {\n  rankdir=LR;\n");
            for n in &out.nodes {
                let _ = writeln!(s, "  n{} [label=\"{}\"];", n.id, node_label(n));
            }
            for [a, b] in &out.arrows {
                let _ = writeln!(s, "  n{a} -> n{b};");
            }
            s.push_str("}\n");
            Ok(s)
        }
        Format::Csv => {
            let mut rows: Vec<Vec<String>> = out
                .nodes
                .iter()
                .map(|n| vec!["node".into(), n.id.to_string(), dims_text(&n.dims), n.shift.to_string(), String::new()])
                .collect();
            for [a, b] in &out.arrows {
                rows.push(vec!["arrow".into(), a.to_string(), String::new(), String::new(), b.to_string()]);
            }
            csv_rows(&["record", "id", "dims", "shift", "target"], rows)
        }
        Format::Text => {
            let mut s = format!("{} {} d={}: {} objects\n", out.ty, out.ambient, out.d, out.nodes.len());
            for [a, b] in &out.arrows {
                let _ = writeln!(s, "{} -> {}", node_label(&out.nodes[*a]), node_label(&out.nodes[*b]));
            }
            Ok(s)
        }
    }
}

fn render_catalog(fmt: Format, out: &CatalogOut) -> Result<String, CliError> {
    let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
    match fmt {
        Format::Json => Ok(json(out)),
        Format::Csv => csv_rows(
            &["id", "dims", "projective", "injective", "tau", "nu_shift", "nu_id"],
            out.indecomposables
                .iter()
                .map(|m| {
                    vec![
                        m.id.to_string(),
                        dims_text(&m.dims),
                        opt(m.projective),
                        opt(m.injective),
                        opt(m.tau),
                        m.nu.shift.to_string(),
                        m.nu.id.to_string(),
                    ]
                })
                .collect(),
        ),
        Format::Text => {
            let mut s = format!("{}: {} indecomposables\n", out.ty, out.indecomposables.len());
            for m in &out.indecomposables {
                let mut line = format!("#{} {:?}", m.id, m.dims);
                if let Some(v) = m.projective {
                    let _ = write!(line, " P({v})");
                }
                if let Some(v) = m.injective {
                    let _ = write!(line, " I({v})");
                }
                match m.tau {
                    Some(t) => {
                        let _ = write!(line, " tau=#{t}");
                    }
                    None => line.push_str(" tau=0"),
                }
                let _ = writeln!(s, "{line} nu=#{}[{}]", m.nu.id, m.nu.shift);
            }
            Ok(s)
        }
        Format::Dot => Err(no_dot()),
    }
}
