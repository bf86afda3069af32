use std::fmt::Write as _;
use std::path::Path;

use anyhow::{Context, Result};
use serde_json::{json, Value};

use arthom::approx::AddClosure;
use arthom::classify::{self, Caps, ClassifierReport, Condition, Verdict};
use arthom::endocat::endo_algebra;
use arthom::golden::{verify_fixture, Fixture, FixtureReport};
use arthom::homology::{
    self, ar_translate, injective_resolution, projective_injective_vertices, projective_resolution, rel_domdim,
    Resolution, ResolutionKind, TauKind,
};
use arthom::pathalg::{parse_algebra_with_cap, AlgebraFile};
use arthom::relhom::{FKind, SubBifunctor};
use arthom::repmod::{resolve_module, Rep};

use super::{Command, FArg, Property, TauArg};

/// Process exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Success = 0,
    False = 1,
    Error = 2,
}

pub struct Outcome {
    pub json: Value,
    pub text: String,
    pub status: Status,
}

impl Outcome {
    fn ok(json: Value, text: String) -> Outcome {
        Outcome { json, text, status: Status::Success }
    }
}

pub fn error_json(e: &anyhow::Error) -> Value {
    let kind = match e.downcast_ref::<arthom::Error>() {
        Some(arthom::Error::Syntax { line, col, .. }) => json!({"kind": "syntax", "line": line, "column": col}),
        Some(arthom::Error::Precondition(p)) => json!({"kind": "precondition", "precondition": p}),
        Some(other) => json!({"kind": "library", "detail": other.to_string()}),
        None => json!({"kind": "io"}),
    };
    json!({"error": format!("{e:#}"), "details": kind})
}

fn load(path: &Path, caps: &Caps) -> Result<AlgebraFile> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(parse_algebra_with_cap(&text, caps.path)?)
}

fn module(file: &AlgebraFile, name: &str) -> Result<Rep> {
    Ok(resolve_module(file, name)?)
}

fn rep_json(x: &Rep) -> Value {
    json!({"dims": x.dims(), "declaration": x.to_decl("X")})
}

/// Vertex labels of the summands of each term, for projective and injective
/// resolutions.
fn vertex_labels(res: &Resolution) -> Option<Vec<Vec<&str>>> {
    let vertices = &res.module.alg().quiver().vertices;
    matches!(res.kind, ResolutionKind::Projective | ResolutionKind::Injective)
        .then(|| res.labels.iter().map(|l| l.iter().map(|&v| vertices[v].as_str()).collect()).collect())
}

fn resolution_json(res: &Resolution) -> Value {
    let labels = vertex_labels(res);
    json!({
        "kind": res.kind,
        "module_dims": res.module.dims(),
        "terms": res.terms.iter().map(|t| t.dims().to_vec()).collect::<Vec<_>>(),
        "labels": labels,
        "length": res.length(),
        "minimal": res.minimal,
    })
}

fn resolution_text(res: &Resolution) -> String {
    let mut s = String::new();
    let letter = if res.is_coresolution() { "I" } else { "P" };
    let labels = vertex_labels(res);
    for (k, t) in res.terms.iter().enumerate() {
        let summands = match labels.as_ref().and_then(|l| l.get(k)) {
            Some(l) if !l.is_empty() => l.iter().map(|v| format!("{letter}({v})")).collect::<Vec<_>>().join(" + "),
            _ => format!("dims {:?}", t.dims()),
        };
        let _ = writeln!(s, "term {k}: {summands}");
    }
    let _ = writeln!(s, "length: {}", res.length());
    s
}

fn report_text(r: &ClassifierReport) -> String {
    let mut s = String::new();
    let verdict = match &r.verdict {
        Verdict::True => "true".to_string(),
        Verdict::False => "false".to_string(),
        Verdict::Unknown(why) => format!("unknown ({why})"),
    };
    let _ = writeln!(s, "verdict: {verdict}");
    for c in &r.conditions {
        let _ = writeln!(s, "  [{}] {}: {}", if c.ok { "ok" } else { "FAIL" }, c.label, c.detail);
    }
    for (k, v) in &r.parameters {
        let _ = writeln!(s, "  {k} = {v}");
    }
    s
}

fn report_outcome(r: ClassifierReport) -> Outcome {
    let status = match r.verdict {
        Verdict::True => Status::Success,
        Verdict::False => Status::False,
        Verdict::Unknown(_) => Status::Error,
    };
    Outcome { text: report_text(&r), json: r.to_json(), status }
}

fn fixture_text(r: &FixtureReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{}: {}", r.fixture, if r.passed() { "pass" } else { "FAIL" });
    for a in &r.assertions {
        if a.ok {
            let _ = writeln!(s, "  [ok] {} = {}", a.label, a.actual);
        } else {
            let _ = writeln!(s, "  [FAIL] {}: expected {}, got {}", a.label, a.expected, a.actual);
        }
    }
    s
}

fn f_kind(f: FArg) -> FKind {
    match f {
        FArg::Upper => FKind::Upper,
        FArg::Lower => FKind::Lower,
    }
}

pub fn run(cmd: &Command, caps: &Caps) -> Result<Outcome> {
    let cap = caps.resolution;
    match cmd {
        Command::Resolve { input, module: name, injective } => {
            let file = load(input, caps)?;
            let x = module(&file, name)?;
            let res = if *injective { injective_resolution(&x, cap) } else { projective_resolution(&x, cap) };
            Ok(Outcome::ok(resolution_json(&res), resolution_text(&res)))
        }
        Command::Ext { input, from, to, max } => {
            let file = load(input, caps)?;
            let table = homology::ext_table(&module(&file, from)?, &module(&file, to)?, *max)?;
            let mut text = String::new();
            for (i, d) in table.iter().enumerate() {
                let _ = writeln!(text, "Ext^{i} = {d}");
            }
            Ok(Outcome::ok(json!({"from": from, "to": to, "ext": table}), text))
        }
        Command::Domdim { input, relative, module: target } => {
            let file = load(input, caps)?;
            let alg = &file.algebra;
            let x = match target {
                Some(t) => module(&file, t)?,
                None => Rep::regular(alg),
            };
            let inj = match relative {
                Some(i) => module(&file, i)?,
                None => {
                    let parts: Vec<Rep> =
                        projective_injective_vertices(alg).into_iter().map(|v| Rep::injective(alg, v)).collect::<arthom::Result<_>>()?;
                    Rep::direct_sum(alg, &parts)?
                }
            };
            let d = rel_domdim(&x, &inj, cap)?;
            let kind = if relative.is_some() { "relative" } else { "classical" };
            Ok(Outcome::ok(json!({"kind": kind, "domdim": d}), format!("{kind} dominant dimension: {d}\n")))
        }
        Command::Coresolve { input, module: name, over } => {
            let file = load(input, caps)?;
            let x = module(&file, name)?;
            let closure = AddClosure::new(&module(&file, over)?)?;
            let res = closure.coresolution(&x, caps.codim)?;
            let mut json = resolution_json(&res);
            json["codim"] = json!(res.length());
            let text = format!("{}M-codim: {}\n", resolution_text(&res), res.length());
            Ok(Outcome::ok(json, text))
        }
        Command::Tau { input, module: name, kind, n } => {
            let file = load(input, caps)?;
            let x = module(&file, name)?;
            let k = match kind {
                TauArg::Tau => TauKind::Tau,
                TauArg::TauInverse => TauKind::TauInverse,
                TauArg::TauN => TauKind::Higher(*n),
                TauArg::TauNInverse => TauKind::HigherInverse(*n),
            };
            let t = ar_translate(&x, k)?;
            let text = format!("dims {:?}\n{}\n", t.dims(), t.to_decl("T"));
            Ok(Outcome::ok(json!({"translate": format!("{kind:?}"), "n": n, "result": rep_json(&t)}), text))
        }
        Command::Endo { input, module: name, out } => {
            let file = load(input, caps)?;
            let pres = endo_algebra(&module(&file, name)?)?;
            let text = pres.to_text();
            let json = json!({
                "vertices": pres.lambda.num_vertices(),
                "dim": pres.lambda.dim(),
                "summands": pres.summands.iter().map(|s| s.dims().to_vec()).collect::<Vec<_>>(),
                "presentation": text,
            });
            match out {
                Some(path) => {
                    std::fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?;
                    Ok(Outcome::ok(json, format!("wrote presentation to {}\n", path.display())))
                }
                None => Ok(Outcome::ok(json, text)),
            }
        }
        Command::Check { input, module: name, property, n, f, m } => {
            let file = load(input, caps)?;
            let x = module(&file, name)?;
            let report = match property {
                Property::AlmostPrecluster => classify::is_almost_precluster(&x, *n, caps)?,
                Property::Precluster => classify::is_precluster(&x, *n, caps)?,
                Property::AlmostCluster => classify::is_almost_cluster(&x, *n, caps)?,
                Property::FCotilting => {
                    let base = match m {
                        Some(name) => module(&file, name)?,
                        None => x.clone(),
                    };
                    let sub = SubBifunctor::new(f_kind(*f), &base)?;
                    let ok = sub.is_cotilting(&x, cap)?;
                    let id = sub.id(&x, cap)?;
                    let mut params = serde_json::Map::new();
                    params.insert("relative_injective_dimension".into(), json!(id));
                    ClassifierReport::from_conditions(
                        vec![Condition::new("f-cotilting", ok, format!("id_F = {id}"))],
                        params,
                    )
                }
            };
            Ok(report_outcome(report))
        }
        Command::Classify { input, n } => {
            let file = load(input, caps)?;
            Ok(report_outcome(classify::classify_algebra(&file.algebra, *n, caps)?))
        }
        Command::Relhom { input, f, m, module: target, to, max, global } => {
            let file = load(input, caps)?;
            let sub = SubBifunctor::new(f_kind(*f), &module(&file, m)?)?;
            let dims = |c: &AddClosure| c.indecomposables.iter().map(|x| x.dims().to_vec()).collect::<Vec<_>>();
            let mut json = json!({
                "kind": format!("{f:?}").to_lowercase(),
                "projectives": dims(&sub.projectives),
                "injectives": dims(&sub.injectives),
            });
            let mut text = String::new();
            let _ = writeln!(text, "relative projectives: {:?}", dims(&sub.projectives));
            let _ = writeln!(text, "relative injectives: {:?}", dims(&sub.injectives));
            if let Some(t) = target {
                let x = module(&file, t)?;
                let (pd, id) = (sub.pd(&x, cap)?, sub.id(&x, cap)?);
                json["pd"] = json!(pd);
                json["id"] = json!(id);
                let _ = writeln!(text, "pd_F = {pd}\nid_F = {id}");
                if let Some(y) = to {
                    let table = sub.ext_table(&x, &module(&file, y)?, *max)?;
                    for (i, d) in table.iter().enumerate() {
                        let _ = writeln!(text, "Ext_F^{i} = {d}");
                    }
                    json["ext"] = json!(table);
                }
            }
            if *global {
                let universe = classify::enumerate_indecomposables(&file.algebra, caps.enumeration)?;
                universe.require_complete()?;
                let g = sub.global_dimension(&universe.items, cap)?;
                json["global_dimension"] = json!(g);
                let _ = writeln!(text, "gld_F = {g}");
            }
            Ok(Outcome::ok(json, text))
        }
        Command::VerifyFixture { name } => {
            let fixtures: Vec<Fixture> = if name == "all" { Fixture::ALL.to_vec() } else { vec![name.parse()?] };
            let reports: Vec<FixtureReport> = fixtures.into_iter().map(verify_fixture).collect::<arthom::Result<_>>()?;
            let passed = reports.iter().all(FixtureReport::passed);
            let text: String = reports.iter().map(fixture_text).collect();
            let json = if reports.len() == 1 { json!(reports[0]) } else { json!(reports) };
            Ok(Outcome { json, text, status: if passed { Status::Success } else { Status::False } })
        }
    }
}
