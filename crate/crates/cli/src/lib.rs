//! The `qcgl` command line. Parsing lives in [`args`]; [`execute`] runs a
//! parsed command and returns what to print and the exit code, so tests can
//! drive it without spawning a process.

pub mod args;

use std::fs;

use qcgl::cauchon;
use qcgl::delderiv::{self, LaurentElem};
use qcgl::expr;
use qcgl::ncalg::{is_torsionfree, SpecFile, Torsionfree};
use qcgl::presets;
use qcgl::qmat::{self, MinorIndex};
use qcgl::verify::{self, VerifyConfig};
use qcgl::{Error, NcPoly, OreAlgebraSpec};
use serde_json::{json, Value};

pub use args::Cli;
use args::{AlgebraCmd, CauchonAction, Command, Global, VerifyCmd};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Everything one invocation prints.
#[derive(Debug, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    text: String,
    result: Value,
    failed: bool,
}

impl Report {
    fn ok(text: impl Into<String>, result: Value) -> Self {
        Self {
            text: text.into(),
            result,
            failed: false,
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Algebra(_) => "algebra",
        Command::Nf { .. } => "nf",
        Command::Minor { .. } => "minor",
        Command::Qcommute { .. } => "qcommute",
        Command::Normal { .. } => "normal",
        Command::Weight { .. } => "weight",
        Command::Cauchon { .. } => "cauchon",
        Command::Theta { .. } => "theta",
        Command::Verify(_) => "verify",
        Command::Axioms => "axioms",
    }
}

/// Errors caused by the input get the usage exit code; running out of a
/// budget or bound is a failure of the computation.
fn error_code(e: &Error) -> i32 {
    match e {
        Error::StepBudgetExceeded { .. } | Error::NilpotenceBoundExceeded { .. } => EXIT_FAILED,
        _ => EXIT_USAGE,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::DivisionByZero => "division_by_zero",
        Error::StepBudgetExceeded { .. } => "step_budget_exceeded",
        Error::LevelViolation { .. } => "level_violation",
        Error::NilpotenceBoundExceeded { .. } => "nilpotence_bound_exceeded",
        Error::ZeroElement => "zero_element",
        Error::TopLevelConstantIsOne => "top_level_constant_is_one",
        Error::IndexOutOfRange(_) => "index_out_of_range",
        Error::SizeLimit(_) => "size_limit",
        Error::InvalidSpec(_) => "invalid_spec",
        Error::Parse { .. } => "parse",
        Error::UnknownGenerator(_) => "unknown_generator",
        Error::Eval(_) => "eval",
        Error::Json(_) => "json",
    }
}

pub fn execute(cli: &Cli) -> Outcome {
    let name = command_name(&cli.command);
    match dispatch(cli) {
        Ok((algebra, report)) => {
            let code = if report.failed { EXIT_FAILED } else { EXIT_OK };
            let stdout = if cli.global.json {
                let mut envelope = json!({
                    "command": name,
                    "ok": !report.failed,
                    "result": report.result,
                });
                if let Some(a) = algebra {
                    envelope["algebra"] = Value::String(a);
                }
                format!("{}\n", serde_json::to_string_pretty(&envelope).expect("json"))
            } else {
                format!("{}\n", report.text)
            };
            Outcome {
                code,
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => {
            let stdout = if cli.global.json {
                let mut err = json!({ "kind": error_kind(&e), "message": e.to_string() });
                if let Error::Parse { pos, .. } = e {
                    err["position"] = json!(pos);
                }
                let envelope = json!({ "command": name, "ok": false, "error": err });
                format!("{}\n", serde_json::to_string_pretty(&envelope).expect("json"))
            } else {
                String::new()
            };
            Outcome {
                code: error_code(&e),
                stdout,
                stderr: format!("error: {e}\n"),
            }
        }
    }
}

fn load_algebra(g: &Global) -> qcgl::Result<OreAlgebraSpec> {
    let spec = match &g.spec {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| {
                Error::InvalidSpec(format!("cannot read {}: {e}", path.display()))
            })?;
            OreAlgebraSpec::from_json(&text)?
        }
        None => presets::by_name(&g.algebra)?,
    };
    Ok(spec.with_steps_budget(g.steps_budget))
}

type Dispatched = (Option<String>, Report);

fn dispatch(cli: &Cli) -> qcgl::Result<Dispatched> {
    let g = &cli.global;
    match &cli.command {
        Command::Algebra(cmd) => algebra(g, cmd).map(|r| (None, r)),
        Command::Cauchon { action, m, n } => cauchon_cmd(*action, *m, *n).map(|r| (None, r)),
        Command::Verify(VerifyCmd::Paper { size }) => Ok((None, run_verify(g, *size))),
        cmd => {
            let spec = load_algebra(g)?;
            let report = with_spec(g, &spec, cmd)?;
            Ok((Some(spec.name().to_string()), report))
        }
    }
}

fn with_spec(g: &Global, spec: &OreAlgebraSpec, cmd: &Command) -> qcgl::Result<Report> {
    let bound = g.nilpotence_bound;
    match cmd {
        Command::Nf { expr: text, laurent } => {
            let e = expr::parse(text)?;
            if *laurent || e.mentions_top() {
                Ok(laurent_report(spec, &e.eval_laurent(spec, bound)?, json!({})))
            } else {
                Ok(poly_report(spec, &e.eval(spec)?))
            }
        }
        Command::Minor { rows, cols } => {
            let idx = MinorIndex::new(index_list(rows)?, index_list(cols)?)?;
            let p = qmat::quantum_minor(spec, &idx)?;
            let mut r = poly_report(spec, &p);
            r.result["minor"] = json!(idx.to_string());
            Ok(r)
        }
        Command::Qcommute { a, b } => {
            let a = expr::eval_str(spec, a)?;
            let b = expr::eval_str(spec, b)?;
            let s = spec.qcommute_exponent(&a, &b)?;
            let text = s.map_or_else(|| "none".to_string(), |s| s.to_string());
            Ok(Report::ok(text, json!({ "exponent": s })))
        }
        Command::Normal { expr: text } => {
            let a = expr::eval_str(spec, text)?;
            let report = spec.is_normal(&a)?;
            let normal = report.is_normal();
            let mut lines = vec![if normal { "normal" } else { "not normal" }.to_string()];
            let mut entries = Vec::new();
            for (name, e) in spec.names().iter().zip(&report.exponents) {
                lines.push(format!(
                    "{name}: {}",
                    e.map_or_else(|| "none".to_string(), |s| s.to_string())
                ));
                entries.push(json!({ "generator": name, "exponent": e }));
            }
            Ok(Report::ok(
                lines.join("\n"),
                json!({ "normal": normal, "exponents": entries }),
            ))
        }
        Command::Weight { expr: text } => {
            let a = expr::eval_str(spec, text)?;
            let w = spec.torus_weight(&a)?;
            Ok(match w.as_homogeneous() {
                Some(w) => Report::ok(
                    format!(
                        "({})",
                        w.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
                    ),
                    json!({ "homogeneous": true, "weight": w }),
                ),
                None => Report::ok(
                    "inhomogeneous",
                    json!({ "homogeneous": false, "weight": null }),
                ),
            })
        }
        Command::Theta { expr: text, alt } => {
            let a = expr::eval_str(spec, text)?;
            let t = if *alt {
                delderiv::theta_alt(spec, &a, bound)?
            } else {
                delderiv::theta(spec, &a, bound)?
            };
            let expansion = if *alt { "alt" } else { "standard" };
            Ok(laurent_report(spec, &t, json!({ "expansion": expansion })))
        }
        Command::Axioms => axioms(spec, bound),
        Command::Algebra(_) | Command::Cauchon { .. } | Command::Verify(_) => {
            unreachable!("handled without an active algebra")
        }
    }
}

fn index_list(text: &str) -> qcgl::Result<Vec<usize>> {
    text.split(',')
        .map(|s| {
            s.trim().parse::<usize>().map_err(|_| Error::Parse {
                pos: 0,
                msg: format!("expected a comma-separated index list, got `{text}`"),
            })
        })
        .collect()
}

fn term_json(spec: &OreAlgebraSpec, p: &NcPoly, x_exp: Option<i64>) -> Vec<Value> {
    p.terms()
        .map(|(m, c)| {
            let word: Vec<&str> = m.letters().iter().map(|&g| spec.names()[g].as_str()).collect();
            let mut t = json!({ "coefficient": c.to_string(), "word": word });
            if let Some(k) = x_exp {
                t["x_exponent"] = json!(k);
            }
            t
        })
        .collect()
}

fn poly_report(spec: &OreAlgebraSpec, p: &NcPoly) -> Report {
    let text = spec.render(p);
    let result = json!({ "text": text, "terms": term_json(spec, p, None) });
    Report::ok(text, result)
}

fn laurent_report(spec: &OreAlgebraSpec, u: &LaurentElem, mut extra: Value) -> Report {
    let text = u.render(spec);
    let terms: Vec<Value> = u
        .coeffs()
        .rev()
        .flat_map(|(k, a)| term_json(spec, a, Some(k)))
        .collect();
    extra["text"] = json!(text);
    extra["terms"] = json!(terms);
    extra["top"] = json!(spec.names()[spec.top()]);
    Report::ok(text, extra)
}

fn algebra(g: &Global, cmd: &AlgebraCmd) -> qcgl::Result<Report> {
    let spec = match cmd {
        AlgebraCmd::Qmat { m, n } => qmat::oqm(*m, *n)?,
        AlgebraCmd::Qplane => presets::quantum_plane(),
        AlgebraCmd::Preset { name } => presets::by_name(name)?,
        AlgebraCmd::File { path } => {
            let text = fs::read_to_string(path).map_err(|e| {
                Error::InvalidSpec(format!("cannot read {}: {e}", path.display()))
            })?;
            OreAlgebraSpec::from_json(&text)?
        }
    };
    let report = spec.check_cgl_axioms(g.nilpotence_bound)?;
    let file = SpecFile::from_spec(&spec);
    let text = if report.all_pass() {
        spec.to_json()
    } else {
        let fails: Vec<String> = report
            .failures()
            .map(|(l, c)| format!("level {} ({}): {}", l.level, l.generator, c.axiom))
            .collect();
        format!("{}\n# axiom check failed:\n# {}", spec.to_json(), fails.join("\n# "))
    };
    Ok(Report {
        text,
        result: json!({ "spec": file, "axioms_pass": report.all_pass() }),
        failed: !report.all_pass(),
    })
}

fn axioms(spec: &OreAlgebraSpec, bound: usize) -> qcgl::Result<Report> {
    let report = spec.check_cgl_axioms(bound)?;
    let tf = is_torsionfree(spec);
    let mut lines = Vec::new();
    for level in &report.levels {
        let failed: Vec<_> = level.checks.iter().filter(|c| !c.passed).collect();
        if failed.is_empty() {
            lines.push(format!("level {} ({}): ok", level.level, level.generator));
        }
        for c in failed {
            lines.push(format!(
                "level {} ({}): FAIL {}: {}",
                level.level, level.generator, c.axiom, c.detail
            ));
        }
    }
    let tf_text = match tf {
        Torsionfree::Yes => "yes",
        Torsionfree::No => "no",
        Torsionfree::Undecided => "undecided",
    };
    lines.push(format!("torsionfree: {tf_text}"));
    Ok(Report {
        text: lines.join("\n"),
        result: json!({
            "all_pass": report.all_pass(),
            "levels": report.levels,
            "torsionfree": tf,
        }),
        failed: !report.all_pass(),
    })
}

fn cauchon_cmd(action: CauchonAction, m: usize, n: usize) -> qcgl::Result<Report> {
    Ok(match action {
        CauchonAction::Count => {
            let c = cauchon::count(m, n)?;
            Report::ok(c.to_string(), json!({ "m": m, "n": n, "count": c }))
        }
        CauchonAction::List => {
            let ds = cauchon::enumerate(m, n)?;
            let text = ds
                .iter()
                .map(|d| d.to_text())
                .collect::<Vec<_>>()
                .join("\n\n");
            let cells: Vec<Value> = ds.iter().map(|d| d.to_json_cells()).collect();
            Report::ok(text, json!({ "m": m, "n": n, "diagrams": cells }))
        }
        CauchonAction::Histogram => {
            let h = cauchon::count_by_black(m, n)?;
            let text = h
                .iter()
                .map(|(k, c)| format!("{k}: {c}"))
                .collect::<Vec<_>>()
                .join("\n");
            let rows: Vec<Value> = h
                .iter()
                .map(|(k, c)| json!({ "black": k, "count": c }))
                .collect();
            Report::ok(text, json!({ "m": m, "n": n, "histogram": rows }))
        }
    })
}

fn run_verify(g: &Global, size: Option<(usize, usize)>) -> Report {
    let cfg = VerifyConfig {
        seed: g.seed,
        size,
        nilpotence_bound: g.nilpotence_bound,
        ..VerifyConfig::default()
    };
    let results = verify::run_all(&cfg);
    let passed = results.iter().filter(|r| r.passed).count();
    let mut lines: Vec<String> = results.iter().map(ToString::to_string).collect();
    lines.push(format!("{passed}/{} criteria passed", results.len()));
    Report {
        text: lines.join("\n"),
        result: json!({
            "seed": cfg.seed,
            "size": size.map(|(m, n)| [m, n]),
            "criteria": results,
            "passed": passed == results.len(),
        }),
        failed: passed != results.len(),
    }
}
