use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use contrabench::catalog;
use contrabench::comodcontra::{free_contramodule, hom_contra, restrict, Contramodule};
use contrabench::functors::{frobenius_twist, induce, weight_decompose};
use contrabench::hopf::{CoalgebraMorphism, CoalgebraSpec, GroupSchemeDescriptor};
use contrabench::interchange::{contramodule_to_doc, hopf_to_doc, scheme_to_doc, Document, Workspace};
use contrabench::mockproj::{self, Tower};
use contrabench::repthy;
use contrabench::suite::{self, Manifest, Report};
use contrabench::{Error, Result};

#[derive(Parser)]
#[command(name = "contrabench", version, about = "Exact checks for contramodules over finite Hopf algebras")]
struct Cli {
    /// Seed for randomized instances.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Stop starting new checks after this many seconds.
    #[arg(long = "budget-seconds", global = true)]
    budget_seconds: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Run the structural validators on a document or a builtin (`builtin:NAME`).
    Validate { path: String },
    /// Run a single operation and print the result.
    Op(OpArgs),
    /// Run the certification suite.
    Suite {
        /// Manifest file; the default suite when absent.
        manifest: Option<PathBuf>,
        /// Restrict to these check ids.
        #[arg(long = "check")]
        checks: Vec<String>,
        /// Restrict to these builtin instances.
        #[arg(long = "instance")]
        instances: Vec<String>,
        /// Also write the canonical JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// List the check ids and exit.
        #[arg(long)]
        list: bool,
    },
    /// Print a saved report; with `--replay`, rerun it and compare digests.
    Report {
        path: PathBuf,
        #[arg(long)]
        replay: bool,
    },
}

#[derive(clap::Args)]
struct OpArgs {
    /// free, trivial, induce, restrict, twist, witness, is-projective,
    /// mock, weights, simples, hom, describe, builtins, export
    name: String,
    /// Builtin scheme or algebra in `--doc`.
    #[arg(long)]
    coalgebra: Option<String>,
    /// Builtin tower.
    #[arg(long)]
    tower: Option<String>,
    /// Tower map: pi_1, pi_2, ..., pi_H.
    #[arg(long)]
    along: Option<String>,
    /// trivial, free, witness, or a contramodule in `--doc`.
    #[arg(long)]
    module: Option<String>,
    /// Second module for `hom`.
    #[arg(long)]
    target: Option<String>,
    #[arg(long, default_value_t = 1)]
    rank: usize,
    /// Frobenius power for `twist`.
    #[arg(long, default_value_t = 1)]
    r: u64,
    #[arg(long)]
    doc: Option<PathBuf>,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Axiom { .. } | Error::Falsified(_) | Error::Morphism(_) | Error::Unsplit { .. } => 1,
        _ => 2,
    }
}

fn read(path: &Path) -> Result<String> {
    Ok(std::fs::read_to_string(path)?)
}

fn print_value(v: &Value, format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(v).expect("serializable")),
        Format::Text => println!("{}", text_of(v, 0)),
    }
}

fn text_of(v: &Value, indent: usize) -> String {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(map) => map
            .iter()
            .map(|(k, x)| match x {
                Value::Object(_) => format!("{pad}{k}:\n{}", text_of(x, indent + 2)),
                _ => format!("{pad}{k}: {}", x),
            })
            .collect::<Vec<_>>()
            .join("\n"),
        other => format!("{pad}{other}"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn run(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Validate { path } => validate(path, cli.format),
        Command::Op(args) => op(args, cli.format),
        Command::Suite {
            manifest,
            checks,
            instances,
            out,
            list,
        } => {
            if *list {
                for c in suite::CHECKS {
                    println!("{:24} {}", c.id, c.anchor);
                }
                return Ok(0);
            }
            let mut m = match manifest {
                Some(p) => serde_json::from_str::<Manifest>(&read(p)?)?,
                None => Manifest::default_suite(cli.seed),
            };
            if manifest.is_none() || cli.seed != 0 {
                m.seed = cli.seed;
            }
            if !checks.is_empty() {
                m.checks = checks.clone();
            }
            if !instances.is_empty() {
                m.instances = instances.iter().map(|s| Value::from(s.as_str())).collect();
            }
            if cli.budget_seconds.is_some() {
                m.budget = cli.budget_seconds;
            }
            let report = suite::run_suite(&m, cli.jobs)?;
            if let Some(o) = out {
                std::fs::write(o, report.canonical_json())?;
            }
            emit_report(&report, cli.format);
            Ok(if report.all_pass() { 0 } else { 1 })
        }
        Command::Report { path, replay } => {
            let report: Report = serde_json::from_str(&read(path)?)?;
            if !*replay {
                emit_report(&report, cli.format);
                return Ok(if report.all_pass() { 0 } else { 1 });
            }
            let m = Manifest {
                seed: report.seed,
                checks: report.checks.clone(),
                ..Default::default()
            };
            let again = suite::run_suite(&m, cli.jobs)?;
            // Timings are not saved; a filtered report replays as a subset.
            let fresh: std::collections::BTreeMap<(&str, &str), &suite::Record> =
                again.records.iter().map(|r| ((r.check.as_str(), r.instance.as_str()), r)).collect();
            let same = again.instances == report.instances
                && report.records.iter().all(|r| {
                    fresh.get(&(r.check.as_str(), r.instance.as_str())).is_some_and(|f| {
                        f.verdict == r.verdict && f.digest == r.digest && f.detail == r.detail
                    })
                });
            print_value(
                &json!({"replayed": report.records.len(), "identical": same, "all_pass": again.all_pass()}),
                cli.format,
            );
            Ok(if same && again.all_pass() { 0 } else { 1 })
        }
    }
}

fn emit_report(r: &Report, format: Format) {
    match format {
        Format::Json => print!("{}", r.canonical_json()),
        Format::Text => print!("{}", r.text(true)),
    }
}

fn validate(path: &str, format: Format) -> Result<u8> {
    let ws = if let Some(name) = path.strip_prefix("builtin:") {
        let g = catalog::scheme(name)?;
        let doc = Document {
            algebras: vec![scheme_to_doc(&g)],
            ..Default::default()
        };
        doc.load()?
    } else {
        Document::parse(&read(Path::new(path))?)?.load()?
    };
    let cert = ws.validate();
    let failed: Vec<String> = cert.failures().iter().map(|e| e.label.clone()).collect();
    print_value(
        &json!({
            "valid": cert.verdict(),
            "failed_axioms": failed,
            "checks": cert.entries.len(),
            "digest": cert.digest(),
        }),
        format,
    );
    Ok(if cert.verdict() { 0 } else { 1 })
}

struct Context {
    ws: Option<Workspace>,
}

impl Context {
    fn coalgebra(&self, name: &str) -> Result<(Arc<CoalgebraSpec>, Option<GroupSchemeDescriptor>)> {
        if let Some(ws) = &self.ws {
            if let Ok(c) = ws.coalgebra(name) {
                return Ok((c, None));
            }
        }
        let g = catalog::scheme(name)?;
        Ok((g.coalgebra(), Some(g)))
    }

    fn module(&self, spec: &str, c: &Arc<CoalgebraSpec>, rank: usize, unit: Option<&[u64]>) -> Result<Contramodule> {
        match spec {
            "free" => Ok(free_contramodule(c.clone(), rank)),
            "trivial" => {
                let u = unit.ok_or_else(|| Error::Input("trivial needs a Hopf algebra".into()))?;
                Ok(Contramodule::trivial(c.clone(), u, rank))
            }
            name => {
                let b = self
                    .ws
                    .as_ref()
                    .and_then(|ws| ws.contramodules.get(name))
                    .ok_or_else(|| Error::Input(format!("unknown module {name}")))?;
                if *b.over != **c {
                    return Err(Error::CoalgebraMismatch(format!("{name} is over another coalgebra")));
                }
                Ok(b.clone())
            }
        }
    }
}

fn need<'a>(v: &'a Option<String>, what: &str) -> Result<&'a str> {
    v.as_deref().ok_or_else(|| Error::Input(format!("missing --{what}")))
}

fn level(t: &Tower, along: &str) -> Result<mockproj::Level> {
    if along == "pi_H" {
        return Ok(t.finite_subgroup.clone());
    }
    along
        .strip_prefix("pi_")
        .and_then(|s| s.parse::<usize>().ok())
        .and_then(|s| s.checked_sub(1))
        .and_then(|s| t.kernels.get(s).cloned())
        .ok_or_else(|| Error::Input(format!("unknown map {along}")))
}

fn contra_document(name: &str, over: &GroupSchemeDescriptor, b: &Contramodule) -> Value {
    let doc = Document {
        algebras: vec![scheme_to_doc(over)],
        contramodules: vec![contramodule_to_doc(name, &over.name, b)],
        ..Default::default()
    };
    serde_json::to_value(doc).expect("serializable")
}

fn op(a: &OpArgs, format: Format) -> Result<u8> {
    let ctx = Context {
        ws: a.doc.as_deref().map(|p| Document::parse(&read(p)?)?.load()).transpose()?,
    };
    let tower = || -> Result<Tower> { catalog::tower(need(&a.tower, "tower")?) };
    let out: Value = match a.name.as_str() {
        "builtins" => json!({"schemes": catalog::scheme_names(), "towers": catalog::tower_names()}),
        "export" => serde_json::to_value(Document {
            algebras: vec![scheme_to_doc(&catalog::scheme(need(&a.coalgebra, "coalgebra")?)?)],
            ..Default::default()
        })?,
        "free" | "trivial" => {
            let name = need(&a.coalgebra, "coalgebra")?;
            let (c, g) = ctx.coalgebra(name)?;
            let unit = g.as_ref().map(|g| g.ring.unit().to_vec()).or_else(|| {
                ctx.ws.as_ref().and_then(|ws| ws.hopf(name).ok()).map(|h| h.unit().to_vec())
            });
            let b = ctx.module(&a.name, &c, a.rank, unit.as_deref())?;
            match g {
                Some(g) => contra_document(&a.name, &g, &b),
                None => {
                    let h = ctx.ws.as_ref().expect("document").hopf(name)?;
                    serde_json::to_value(Document {
                        algebras: vec![hopf_to_doc(h, None)],
                        contramodules: vec![contramodule_to_doc(&a.name, name, &b)],
                        ..Default::default()
                    })?
                }
            }
        }
        "induce" => {
            let t = tower()?;
            let l = level(&t, need(&a.along, "along")?)?;
            let b = ctx.module(a.module.as_deref().unwrap_or("trivial"), &l.scheme.coalgebra(), a.rank, Some(l.scheme.ring.unit()))?;
            contra_document("induced", &t.ambient, &induce(&l.map, &b)?.result)
        }
        "restrict" => {
            let t = tower()?;
            let l = level(&t, need(&a.along, "along")?)?;
            let b = tower_module(&ctx, &t, a)?;
            contra_document("restricted", &l.scheme, &restrict(&l.map, &b)?)
        }
        "witness" => {
            let t = tower()?;
            contra_document("witness", &t.ambient, &mockproj::build_witness(&t)?.result)
        }
        "twist" => {
            let t = tower()?;
            let b = tower_module(&ctx, &t, a)?;
            contra_document("twisted", &t.ambient, &frobenius_twist(&b, &t.ambient, a.r)?)
        }
        "mock" => {
            let t = tower()?;
            let b = tower_module(&ctx, &t, a)?;
            let v = mockproj::is_mock_projective(&b, &t)?;
            json!({
                "levels": v.levels(),
                "ambient": v.ambient.verdict,
                "obstruction": v.ambient.residual_rank,
                "verdict": serde_json::to_value(v.kind())?,
            })
        }
        "is-projective" => {
            let (b, _) = plain_module(&ctx, a)?;
            let v = b.is_projective();
            json!({
                "verdict": v.verdict,
                "head_dim": v.head_dim,
                "obstruction_rank": v.residual_rank,
                "rechecked": v.recheck(&b.to_dual_module()),
            })
        }
        "weights" => {
            let (b, c) = plain_module(&ctx, a)?;
            let w = weight_decompose(&b, &CoalgebraMorphism::identity(c))?;
            json!({"weights": w.weights, "dims": w.dims(), "defect": w.defect})
        }
        "simples" | "describe" => {
            let (c, _) = ctx.coalgebra(need(&a.coalgebra, "coalgebra")?)?;
            let ring = c.contra_ring();
            let mut d = repthy::describe(&ring);
            if a.name == "simples" {
                if let Ok(covers) = repthy::projective_covers(&ring) {
                    d["cover_dims"] = json!(covers.iter().map(|p| p.dim()).collect::<Vec<_>>());
                }
            }
            d
        }
        "hom" => {
            let (b, c) = plain_module(&ctx, a)?;
            let g = a.coalgebra.as_deref().and_then(|n| catalog::scheme(n).ok());
            let unit = g.as_ref().map(|g| g.ring.unit().to_vec());
            let d = ctx.module(need(&a.target, "target")?, &c, a.rank, unit.as_deref())?;
            json!({"dim": hom_contra(&b, &d)?.dim()})
        }
        other => return Err(Error::Input(format!("unknown op {other}"))),
    };
    print_value(&out, format);
    Ok(0)
}

fn plain_module(ctx: &Context, a: &OpArgs) -> Result<(Contramodule, Arc<CoalgebraSpec>)> {
    let name = need(&a.coalgebra, "coalgebra")?;
    let (c, g) = ctx.coalgebra(name)?;
    let unit = g
        .as_ref()
        .map(|g| g.ring.unit().to_vec())
        .or_else(|| ctx.ws.as_ref().and_then(|ws| ws.hopf(name).ok()).map(|h| h.unit().to_vec()));
    let b = ctx.module(a.module.as_deref().unwrap_or("trivial"), &c, a.rank, unit.as_deref())?;
    Ok((b, c))
}

fn tower_module(ctx: &Context, t: &Tower, a: &OpArgs) -> Result<Contramodule> {
    match a.module.as_deref().unwrap_or("witness") {
        "witness" => Ok(mockproj::build_witness(t)?.result),
        m => ctx.module(m, &t.ambient.coalgebra(), a.rank, Some(t.ambient.ring.unit())),
    }
}
