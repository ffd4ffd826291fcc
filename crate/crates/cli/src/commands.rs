use std::fmt::Write as _;
use std::path::Path as FsPath;
use std::sync::Arc;

use hochschild_core::checks::{run_all, CheckOutcome};
use hochschild_core::formula::Summand;
use hochschild_core::gerstenhaber::{bracket_class, cup_class, find_bracket_witness, find_cup_witness};
use hochschild_core::quiver::{validate, validate_gentle, validate_string, Violation};
use hochschild_core::{
    hh_dim_formula, parse_quiver, Cochain, CochainComplex, Field, QuiverFile, Scalar, StringAlgebra, Witness,
};
use serde::Serialize;
use serde_json::{json, Value};

use crate::table::Table;
use crate::{CliError, Command, FieldArg, Kind, Mode, Outcome};

const SCHEMA: u32 = 1;

pub fn run(command: &Command, as_json: bool) -> Result<Outcome, CliError> {
    match command {
        Command::Validate { file } => validate_cmd(file, as_json),
        Command::Dims { file, max_degree, field, mode } => dims(file, *max_degree, field, *mode, as_json),
        Command::Cup { file, deg, field } => products(file, Kind::Cup, deg[0], deg[1], field, as_json),
        Command::Bracket { file, deg, field } => products(file, Kind::Bracket, deg[0], deg[1], field, as_json),
        Command::Witness { file, max_degree, kind, field } => witness(file, *max_degree, *kind, field, as_json),
        Command::Selftest { file, max_degree, seed, field } => selftest(file, *max_degree, *seed, field, as_json),
    }
}

fn load(path: &FsPath) -> Result<QuiverFile, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
    parse_quiver(&text).map_err(|source| CliError::Format { path: path.to_path_buf(), source })
}

fn complex(path: &FsPath, arg: &FieldArg) -> Result<CochainComplex, CliError> {
    let file = load(path)?;
    let field = match arg.characteristic {
        Some(p) => Field::from_characteristic(p)?,
        None => file.field(),
    };
    let alg = StringAlgebra::new(file.quiver)?;
    Ok(CochainComplex::new(Arc::new(alg), field))
}

fn emit(value: Value, code: u8) -> Outcome {
    let mut text = serde_json::to_string_pretty(&value).expect("JSON values serialize");
    text.push('\n');
    Outcome { text, code }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn describe(v: &Violation) -> String {
    match v {
        Violation::TooManyOutgoing { vertex, arrows } => {
            format!("vertex {vertex} has {} outgoing arrows ({})", arrows.len(), arrows.join(", "))
        }
        Violation::TooManyIncoming { vertex, arrows } => {
            format!("vertex {vertex} has {} incoming arrows ({})", arrows.len(), arrows.join(", "))
        }
        Violation::FreeSuccessors { arrow, witnesses: [b, c] } => {
            format!("{arrow}{b} and {arrow}{c} both avoid the relations")
        }
        Violation::FreePredecessors { arrow, witnesses: [b, c] } => {
            format!("{b}{arrow} and {c}{arrow} both avoid the relations")
        }
        Violation::RelationSuccessors { arrow, witnesses: [b, c] } => {
            format!("{arrow}{b} and {arrow}{c} are both relations")
        }
        Violation::RelationPredecessors { arrow, witnesses: [b, c] } => {
            format!("{b}{arrow} and {c}{arrow} are both relations")
        }
        Violation::Disconnected { components } => format!("quiver has {components} connected components"),
        Violation::InfiniteDimensional { cycle } => format!("cycle {cycle} avoids every relation"),
    }
}

fn validate_cmd(path: &FsPath, as_json: bool) -> Result<Outcome, CliError> {
    let q = load(path)?.quiver;
    let report = validate(&q);
    let string = validate_string(&q);
    let gentle_report = validate_gentle(&q);
    let connected = !report.violations.iter().any(|v| matches!(v, Violation::Disconnected { .. }));
    let finite = !report.violations.iter().any(|v| matches!(v, Violation::InfiniteDimensional { .. }));
    let valid = report.is_ok();
    let gentle = string.is_ok() && gentle_report.is_ok();
    let code = if valid { 0 } else { 3 };
    let mut violations = report.violations.clone();
    violations.extend(gentle_report.violations.iter().cloned());
    if as_json {
        return Ok(emit(
            json!({
                "schema": SCHEMA,
                "command": "validate",
                "vertices": q.vertex_count(),
                "arrows": q.arrow_count(),
                "relations": q.relations().len(),
                "string": string.is_ok(),
                "gentle": gentle,
                "connected": connected,
                "finite_dimensional": finite,
                "valid": valid,
                "violations": violations,
            }),
            code,
        ));
    }
    let mut t = Table::new(["property", "value"]);
    t.row(["vertices".to_string(), q.vertex_count().to_string()]);
    t.row(["arrows".to_string(), q.arrow_count().to_string()]);
    t.row(["relations".to_string(), q.relations().len().to_string()]);
    t.row(["string", yes(string.is_ok())]);
    t.row(["gentle", yes(gentle)]);
    t.row(["connected", yes(connected)]);
    t.row(["finite dimensional", yes(finite)]);
    t.row(["valid string algebra", yes(valid)]);
    let mut text = t.render();
    for v in &violations {
        let _ = writeln!(text, "  - {}", describe(v));
    }
    Ok(Outcome { text, code })
}

#[derive(Serialize)]
struct OracleRow {
    cochains: usize,
    cocycles: usize,
    coboundaries: usize,
    dim: usize,
}

#[derive(Serialize)]
struct FormulaRow {
    dim: usize,
    case: &'static str,
    summands: Vec<Summand>,
}

#[derive(Serialize)]
struct DimsRow {
    degree: usize,
    oracle: Option<OracleRow>,
    formula: Option<FormulaRow>,
    agree: Option<bool>,
}

fn breakdown(summands: &[Summand]) -> String {
    let mut s = String::new();
    for (i, x) in summands.iter().enumerate() {
        let op = match (i, x.sign < 0) {
            (0, false) => "",
            (0, true) => "-",
            (_, false) => " + ",
            (_, true) => " - ",
        };
        let _ = write!(s, "{op}{}[{}]", x.value, x.name);
    }
    s
}

fn dims(path: &FsPath, max_degree: usize, arg: &FieldArg, mode: Mode, as_json: bool) -> Result<Outcome, CliError> {
    let cx = complex(path, arg)?;
    let (use_oracle, use_formula) = match (mode.oracle, mode.formula) {
        (true, _) => (true, false),
        (_, true) => (false, true),
        _ => (true, true),
    };
    let mode_name = match (use_oracle, use_formula) {
        (true, false) => "oracle",
        (false, true) => "formula",
        _ => "both",
    };
    let rows: Vec<DimsRow> = (0..=max_degree)
        .map(|n| {
            let oracle = use_oracle.then(|| {
                let d = cx.degree_data(n);
                OracleRow { cochains: d.cochains, cocycles: d.cocycles, coboundaries: d.coboundaries, dim: d.hh_dim }
            });
            let formula = use_formula.then(|| {
                let r = hh_dim_formula(cx.algebra(), n, cx.field());
                FormulaRow { dim: r.dim, case: r.char_case.as_str(), summands: r.summands }
            });
            let agree = match (&oracle, &formula) {
                (Some(o), Some(f)) => Some(o.dim == f.dim),
                _ => None,
            };
            DimsRow { degree: n, oracle, formula, agree }
        })
        .collect();
    let all_agree = rows.iter().all(|r| r.agree != Some(false));
    let code = if all_agree { 0 } else { 1 };
    if as_json {
        return Ok(emit(
            json!({
                "schema": SCHEMA,
                "command": "dims",
                "characteristic": cx.field().characteristic(),
                "gentle": cx.algebra().is_gentle(),
                "mode": mode_name,
                "max_degree": max_degree,
                "rows": rows,
                "all_agree": all_agree,
            }),
            code,
        ));
    }
    let mut header = vec!["n"];
    if use_oracle {
        header.extend(["cochains", "cocycles", "coboundaries", "oracle"]);
    }
    if use_formula {
        header.push("formula");
    }
    if use_oracle && use_formula {
        header.push("agree");
    }
    if use_formula {
        header.push("closed form");
    }
    let mut t = Table::new(header);
    for r in &rows {
        let mut cells = vec![r.degree.to_string()];
        if let Some(o) = &r.oracle {
            cells.extend([o.cochains, o.cocycles, o.coboundaries, o.dim].map(|x| x.to_string()));
        }
        if let Some(f) = &r.formula {
            cells.push(f.dim.to_string());
        }
        if let Some(a) = r.agree {
            cells.push(yes(a).to_string());
        }
        if let Some(f) = &r.formula {
            cells.push(breakdown(&f.summands));
        }
        t.row(cells);
    }
    let mut text = format!(
        "characteristic {}, {}\n",
        cx.field().characteristic(),
        if cx.algebra().is_gentle() { "gentle" } else { "not gentle" }
    );
    text.push_str(&t.render());
    if use_oracle && use_formula {
        text.push_str(if all_agree { "all degrees agree\n" } else { "MISMATCH between oracle and closed form\n" });
    }
    Ok(Outcome { text, code })
}

fn coords(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn products(path: &FsPath, kind: Kind, n: usize, m: usize, arg: &FieldArg, as_json: bool) -> Result<Outcome, CliError> {
    let cx = complex(path, arg)?;
    let target = match kind {
        Kind::Cup => n + m,
        Kind::Bracket if n + m == 0 => {
            return Err(CliError::Usage("the bracket of two degree-0 classes has degree -1".into()))
        }
        Kind::Bracket => n + m - 1,
    };
    let q = cx.algebra().quiver();
    let left = cx.cohomology_basis_cochains(n);
    let right = cx.cohomology_basis_cochains(m);
    let out = cx.cohomology_basis_cochains(target);
    let show = |cs: &[Cochain]| cs.iter().map(|c| c.display(q)).collect::<Vec<_>>();
    let mut entries = Vec::new();
    for (i, f) in left.iter().enumerate() {
        for (j, g) in right.iter().enumerate() {
            let rep = match kind {
                Kind::Cup => cup_class(&cx, f, g),
                Kind::Bracket => bracket_class(&cx, f, g),
            }
            .map_err(hochschild_core::GerstenhaberError::from)?;
            let c = cx.class_coordinates(&rep).map_err(hochschild_core::GerstenhaberError::from)?;
            entries.push((i, j, c, rep.display(q)));
        }
    }
    let name = match kind {
        Kind::Cup => "cup",
        Kind::Bracket => "bracket",
    };
    if as_json {
        let products: Vec<Value> = entries
            .iter()
            .map(|(i, j, c, rep)| {
                json!({
                    "left": i,
                    "right": j,
                    "class": c.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                    "representative": rep,
                })
            })
            .collect();
        return Ok(emit(
            json!({
                "schema": SCHEMA,
                "command": name,
                "characteristic": cx.field().characteristic(),
                "degrees": [n, m],
                "target_degree": target,
                "basis": { "left": show(&left), "right": show(&right), "target": show(&out) },
                "products": products,
            }),
            0,
        ));
    }
    let mut text = String::new();
    for (label, deg, basis) in [("left", n, &left), ("right", m, &right), ("target", target, &out)] {
        let _ = writeln!(text, "{label} basis of HH^{deg} ({} classes)", basis.len());
        for (i, c) in basis.iter().enumerate() {
            let _ = writeln!(text, "  [{i}] {}", c.display(q));
        }
    }
    let mut t = Table::new(["left", "right", "class", "representative"]);
    for (i, j, c, rep) in &entries {
        t.row([i.to_string(), j.to_string(), coords(c), rep.clone()]);
    }
    let _ = writeln!(text, "{name} products HH^{n} x HH^{m} -> HH^{target}");
    text.push_str(&t.render());
    Ok(Outcome { text, code: 0 })
}

fn witness_json(w: &Witness, recheck: bool, cx: &CochainComplex) -> Value {
    let q = cx.algebra().quiver();
    json!({
        "kind": w.kind.as_str(),
        "omega": w.omega.display(q),
        "n": w.n,
        "k": w.k,
        "s1": w.s1,
        "s2": w.s2,
        "product_degree": w.product_degree(),
        "left": w.left.display(q),
        "right": w.right.display(q),
        "product": w.product.display(q),
        "expected": w.expected.display(q),
        "coefficient": w.coefficient.to_string(),
        "inputs_are_cocycles": w.inputs_are_cocycles,
        "identity_holds": w.identity_holds,
        "class_nonzero": w.class_nonzero,
        "verified": w.verified(),
        "recheck": recheck,
    })
}

fn witness(path: &FsPath, max_degree: usize, kind: Kind, arg: &FieldArg, as_json: bool) -> Result<Outcome, CliError> {
    let cx = complex(path, arg)?;
    let found = match kind {
        Kind::Cup => find_cup_witness(&cx, max_degree)?,
        Kind::Bracket => find_bracket_witness(&cx, max_degree)?,
    };
    let record = found.map(|w| {
        let recheck = w.recheck(&cx);
        (w, recheck)
    });
    let code = match &record {
        Some((w, recheck)) if !(w.verified() && *recheck) => 1,
        _ => 0,
    };
    if as_json {
        return Ok(emit(
            json!({
                "schema": SCHEMA,
                "command": "witness",
                "characteristic": cx.field().characteristic(),
                "max_degree": max_degree,
                "witness": record.as_ref().map(|(w, r)| witness_json(w, *r, &cx)),
            }),
            code,
        ));
    }
    let Some((w, recheck)) = record else {
        let what = match kind {
            Kind::Cup => "cup",
            Kind::Bracket => "bracket",
        };
        return Ok(Outcome { text: format!("no {what} witness: no gentle pair up to degree {max_degree}\n"), code });
    };
    let Value::Object(fields) = witness_json(&w, recheck, &cx) else { unreachable!() };
    let mut t = Table::new(["field", "value"]);
    for key in [
        "kind",
        "omega",
        "n",
        "k",
        "s1",
        "s2",
        "product_degree",
        "left",
        "right",
        "product",
        "expected",
        "coefficient",
        "inputs_are_cocycles",
        "identity_holds",
        "class_nonzero",
        "verified",
        "recheck",
    ] {
        let v = match &fields[key] {
            Value::String(s) => s.clone(),
            Value::Bool(b) => yes(*b).to_string(),
            other => other.to_string(),
        };
        t.row([key.to_string(), v]);
    }
    Ok(Outcome { text: t.render(), code })
}

fn selftest(path: &FsPath, max_degree: usize, seed: u64, arg: &FieldArg, as_json: bool) -> Result<Outcome, CliError> {
    let cx = complex(path, arg)?;
    let outcomes: Vec<CheckOutcome> = run_all(&cx, max_degree, seed);
    let passed = outcomes.iter().all(|o| o.passed);
    let code = if passed { 0 } else { 1 };
    if as_json {
        return Ok(emit(
            json!({
                "schema": SCHEMA,
                "command": "selftest",
                "characteristic": cx.field().characteristic(),
                "max_degree": max_degree,
                "seed": seed,
                "checks": outcomes,
                "passed": passed,
            }),
            code,
        ));
    }
    let mut t = Table::new(["check", "result", "detail"]);
    for o in &outcomes {
        t.row([o.name.clone(), if o.passed { "PASS" } else { "FAIL" }.to_string(), o.detail.clone()]);
    }
    let mut text = t.render();
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    let _ = writeln!(text, "{} of {} checks passed", outcomes.len() - failed, outcomes.len());
    Ok(Outcome { text, code })
}
