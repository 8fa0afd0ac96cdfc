//! Command-line front end. [`run`] parses arguments and returns the text to
//! print and the exit code, so the binary is a thin wrapper.

pub mod verify;

use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::catalog::{self, GeneratorFamily};
use crate::contract;
use crate::liecore;
use crate::phspace::{self, GaussianState};

pub use verify::{Report, Status, VariantPolicy, VerifyConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "ccr-lie", version, about = "Exact checks of the Lie algebras generated by bosonic ladder operators")]
pub struct Cli {
    /// Fock-space cutoff per mode
    #[arg(long, global = true, default_value_t = 16)]
    pub fock_n: usize,
    /// Quanta kept away from the cutoff in commutator checks
    #[arg(long, global = true, default_value_t = 4)]
    pub guard: usize,
    /// Tolerance for floating-point checks
    #[arg(long, global = true, default_value_t = 1e-10)]
    pub tolerance: f64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Which catalog variants to check
    #[arg(long, global = true, value_enum, default_value_t = VariantPolicy::Both)]
    pub variant: VariantPolicy,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run every verification suite
    Verify,
    /// Structure constants of a catalog family (or "poincare")
    Table { family: String },
    /// Squeeze one O(3,2) generator and take eps -> 0
    Contract {
        generator: String,
        /// Power of eps multiplying C G C^-1 (default: 2 for Q1..Q3 and S0, else 0)
        #[arg(long, allow_hyphen_values = true)]
        power: Option<i32>,
    },
    /// Gaussian Wigner function on a grid, as CSV
    Wigner {
        #[arg(long, default_value_t = 3.0)]
        extent: f64,
        #[arg(long, default_value_t = 41)]
        steps: usize,
        /// Squeeze parameter eta applied as diag(e^eta, e^-eta)
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        squeeze: f64,
        /// Rotation angle applied after the squeeze
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        angle: f64,
    },
    /// List the generator families, or print one
    Catalog { family: Option<String> },
    /// Residuals of the group flows
    Flows,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, stderr: String::new(), code: 0 }
    }

    fn with_code(stdout: String, code: i32) -> Self {
        Outcome { stdout, stderr: String::new(), code }
    }

    fn usage(msg: String) -> Self {
        Outcome { stdout: String::new(), stderr: msg, code: 2 }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.exit_code() {
                0 => Outcome::ok(text),
                _ => Outcome::usage(text),
            };
        }
    };
    let cfg = VerifyConfig { fock_n: cli.fock_n, guard: cli.guard, tolerance: cli.tolerance, variant: cli.variant };
    if let Err(e) = cfg.validate() {
        return Outcome::usage(format!("error: {e}\n"));
    }
    match &cli.command {
        Command::Verify => verify_cmd(&cfg, cli.format),
        Command::Table { family } => table_cmd(family, cli.format),
        Command::Contract { generator, power } => contract_cmd(generator, *power, cli.format),
        Command::Wigner { extent, steps, squeeze, angle } => wigner_cmd(*extent, *steps, *squeeze, *angle),
        Command::Catalog { family } => catalog_cmd(family.as_deref(), cli.format),
        Command::Flows => flows_cmd(&cfg, cli.format),
    }
}

fn verify_cmd(cfg: &VerifyConfig, format: Format) -> Outcome {
    let report = match verify::run(cfg) {
        Ok(r) => r,
        Err(e) => return Outcome::usage(format!("error: {e}\n")),
    };
    let out = match format {
        Format::Text => report.render_text(),
        Format::Json => pretty(&serde_json::to_value(&report).expect("report serializes")),
    };
    Outcome::with_code(out, report.exit_code())
}

fn lookup(name: &str) -> Result<GeneratorFamily, String> {
    if name == "poincare" {
        return contract::contract_o32().map_err(|e| e.to_string());
    }
    catalog::family(name).map_err(|e| {
        format!("error: {e}\nknown families: {}, poincare\n", catalog::FAMILY_NAMES.join(", "))
    })
}

fn table_cmd(name: &str, format: Format) -> Outcome {
    let fam = match lookup(name) {
        Ok(f) => f,
        Err(msg) => return Outcome::usage(msg),
    };
    let rep = liecore::structure_constants(&fam);
    let Some(t) = &rep.table else {
        let mut reasons: Vec<String> = Vec::new();
        if !rep.dependent.is_empty() {
            reasons.push(format!("linearly dependent at {}", rep.dependent.join(", ")));
        }
        for f in &rep.failures {
            reasons.push(format!("[{}, {}] leaves the span, remainder {}", f.a, f.b, f.residual.to_string().trim_end()));
        }
        let out = match format {
            Format::Text => format!("family: {}\nnot closed\n{}\n", fam.name(), reasons.join("\n")),
            Format::Json => pretty(&json!({
                "schema": 1,
                "family": fam.name(),
                "closed": false,
                "reasons": reasons,
            })),
        };
        return Outcome::with_code(out, 1);
    };
    let out = match format {
        Format::Text => {
            let mut s = format!("family: {}\nlabels: {}\n\n{}", fam.name(), t.labels().join(" "), t.render_text());
            let trip = t.nonzero_triplets();
            s.push_str(&format!("\nnonzero f[a,b]^c: {}\n", trip.len()));
            for (a, b, c, v) in trip {
                let l = t.labels();
                s.push_str(&format!("f[{},{}]^{} = {v}\n", l[a], l[b], l[c]));
            }
            s
        }
        Format::Json => pretty(&t.to_json(fam.name())),
    };
    Outcome::ok(out)
}

fn contract_cmd(generator: &str, power: Option<i32>, format: Format) -> Outcome {
    let o32 = catalog::o32_matrices();
    let Some(g) = o32.get(generator).and_then(|e| e.as_matrix()) else {
        return Outcome::usage(format!(
            "error: unknown generator '{generator}'\nknown generators: {}\n",
            o32.labels().join(", ")
        ));
    };
    let power = power.unwrap_or(if generator.starts_with('Q') || generator == "S0" { 2 } else { 0 });
    let m = contract::conjugate(g, power).expect("o32 generators are 5x5");
    let traj = m.trajectory();
    let limit = m.limit();
    match format {
        Format::Text => {
            let mut s = format!("generator: {generator}\nscaling: eps^{power} C {generator} C^-1\n\nentry   power  coeff\n");
            for (r, c, p, v) in &traj {
                s.push_str(&format!("({},{})  {:>5}  {v}\n", r + 1, c + 1, p));
            }
            match &limit {
                Ok(lim) => {
                    s.push_str("\nlimit eps -> 0:\n");
                    s.push_str(&lim.to_string());
                    Outcome::ok(s)
                }
                Err(contract::ContractError::Divergent(bad)) => {
                    let at: Vec<String> = bad.iter().map(|(r, c, p)| format!("({},{}) eps^{p}", r + 1, c + 1)).collect();
                    s.push_str(&format!("\nlimit diverges at {}\n", at.join(", ")));
                    Outcome::with_code(s, 1)
                }
                Err(e) => Outcome::with_code(format!("{s}\n{e}\n"), 1),
            }
        }
        Format::Json => {
            let rows: Vec<Value> = traj
                .iter()
                .map(|(r, c, p, v)| json!({"row": r + 1, "col": c + 1, "power": p, "coeff": v.to_string()}))
                .collect();
            let (lim, code) = match &limit {
                Ok(l) => (
                    json!(l.nonzeros().iter().map(|(r, c, v)| json!({"row": r + 1, "col": c + 1, "coeff": v.to_string()})).collect::<Vec<_>>()),
                    0,
                ),
                Err(contract::ContractError::Divergent(bad)) => (
                    json!({"divergent": bad.iter().map(|(r, c, p)| json!({"row": r + 1, "col": c + 1, "power": p})).collect::<Vec<_>>()}),
                    1,
                ),
                Err(e) => (json!({"error": e.to_string()}), 1),
            };
            let v = json!({"schema": 1, "generator": generator, "power": power, "trajectory": rows, "limit": lim});
            Outcome::with_code(pretty(&v), code)
        }
    }
}

fn wigner_cmd(extent: f64, steps: usize, squeeze: f64, angle: f64) -> Outcome {
    if !(extent > 0.0 && extent.is_finite()) || steps < 2 {
        return Outcome::usage("error: --extent must be positive and --steps at least 2\n".into());
    }
    let m = phspace::rotation(angle) * phspace::squeeze(squeeze);
    let state = match phspace::apply_sp2(&GaussianState::ground(), &m) {
        Ok(s) => s,
        Err(e) => return Outcome::usage(format!("error: {e}\n")),
    };
    let h = 2.0 * extent / (steps - 1) as f64;
    let mut s = String::from("x,p,W\n");
    for i in 0..steps {
        let x = -extent + i as f64 * h;
        for j in 0..steps {
            let p = -extent + j as f64 * h;
            s.push_str(&format!("{x:.6},{p:.6},{:.12e}\n", phspace::wigner_eval(&state, x, p)));
        }
    }
    Outcome::ok(s)
}

fn catalog_cmd(family: Option<&str>, format: Format) -> Outcome {
    if let Some(name) = family {
        let fam = match lookup(name) {
            Ok(f) => f,
            Err(msg) => return Outcome::usage(msg),
        };
        let out = match format {
            Format::Text => {
                let mut s = describe(&fam);
                for (l, e) in fam.iter() {
                    let body = e.to_string();
                    if body.contains('\n') {
                        s.push_str(&format!("\n{l} =\n{body}"));
                    } else {
                        s.push_str(&format!("\n{l} = {body}\n"));
                    }
                }
                s
            }
            Format::Json => {
                let mut v = family_json(&fam);
                v["elements"] = fam
                    .iter()
                    .map(|(l, e)| {
                        let body = match e {
                            catalog::Element::Operator(o) => json!(o.to_string()),
                            catalog::Element::Matrix(m) => json!(m
                                .nonzeros()
                                .iter()
                                .map(|(r, c, v)| json!({"row": r + 1, "col": c + 1, "coeff": v.to_string()}))
                                .collect::<Vec<_>>()),
                        };
                        json!({"label": l, "value": body})
                    })
                    .collect();
                v["schema"] = json!(1);
                pretty(&v)
            }
        };
        return Outcome::ok(out);
    }
    let fams = catalog::all_families();
    let out = match format {
        Format::Text => fams.iter().map(describe).collect::<Vec<_>>().join("\n"),
        Format::Json => pretty(&json!({"schema": 1, "families": fams.iter().map(family_json).collect::<Vec<_>>()})),
    };
    Outcome::ok(out)
}

fn kind_text(f: &GeneratorFamily) -> String {
    match (f.kind(), f.dim()) {
        (Some(catalog::ElementKind::Operator), Some(d)) => format!("operators on {d} mode(s)"),
        (Some(catalog::ElementKind::Matrix), Some(d)) => format!("{d}x{d} matrices"),
        _ => "empty".into(),
    }
}

fn describe(f: &GeneratorFamily) -> String {
    let mut s = format!(
        "{} [{}]\n  {}: {}\n  {}\n",
        f.name(),
        f.variant(),
        kind_text(f),
        f.labels().join(" "),
        f.provenance()
    );
    for n in f.notes() {
        s.push_str(&format!("  note: {n}\n"));
    }
    s
}

fn family_json(f: &GeneratorFamily) -> Value {
    json!({
        "name": f.name(),
        "variant": f.variant().to_string(),
        "representation": kind_text(f),
        "labels": f.labels(),
        "provenance": f.provenance(),
        "notes": f.notes(),
    })
}

fn flows_cmd(cfg: &VerifyConfig, format: Format) -> Outcome {
    let ts = [-1.0, -0.5, 0.1, 0.5, 1.0];
    let mut rows: Vec<Value> = Vec::new();
    let mut failed = false;
    let mut push = |group: &str, label: &str, t: f64, residual: f64| {
        let pass = residual <= cfg.tolerance;
        failed |= !pass;
        rows.push(json!({"group": group, "generator": label, "t": t, "residual": residual, "pass": pass}));
    };
    for (l, e) in catalog::sp4_matrices().iter() {
        for t in ts {
            let r = e.as_matrix().and_then(|m| phspace::flow(m, t).ok()).map_or(f64::INFINITY, |f| phspace::symplectic_residual(&f));
            push("sp4-symplectic", l, t, r);
        }
    }
    for (l, e) in catalog::o32_matrices().iter() {
        for t in ts {
            let r = e
                .as_matrix()
                .and_then(|m| phspace::flow(m, t).ok())
                .map_or(f64::INFINITY, |f| phspace::o32_residual(&f.map(|v| num_complex::Complex64::new(v, 0.0))));
            push("o32-metric", l, t, r);
        }
    }
    let ms = verify::mass_shell_worst();
    push("mass-shell", "J,K", 2.0, ms);
    let code = i32::from(failed);
    let out = match format {
        Format::Json => pretty(&json!({
            "schema": 1,
            "convention": "flow = exp(t X) with X = -i G",
            "tolerance": cfg.tolerance,
            "rows": rows,
        })),
        Format::Text => {
            let mut s = String::from("flow = exp(t X) with X = -i G\n\ngroup            generator      t  residual\n");
            for r in &rows {
                s.push_str(&format!(
                    "{:<16} {:<9} {:>6.2}  {:.3e}{}\n",
                    r["group"].as_str().unwrap_or(""),
                    r["generator"].as_str().unwrap_or(""),
                    r["t"].as_f64().unwrap_or(0.0),
                    r["residual"].as_f64().unwrap_or(f64::NAN),
                    if r["pass"].as_bool() == Some(true) { "" } else { "  FAIL" }
                ));
            }
            s
        }
    };
    Outcome::with_code(out, code)
}
