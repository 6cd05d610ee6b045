//! Command-line surface. [`dispatch`] parses arguments, runs one command and
//! returns its exit code, stdout payload and stderr diagnostics; `main`
//! only prints them.

use crate::classify::{admissibility_table, reconstruct_example, su3_match, ReconstructedAlgebra};
use crate::curvature::{build_rc, default_family, ricci_of};
use crate::error::{Error, Result};
use crate::exterior::MultiVector;
use crate::golden;
use crate::liealg::{catalog, invariant_forms, invariant_spinors, iso_algebra, killing_form, pretty_name};
use crate::sample::DEFAULT_SEED;
use crate::scalars::Scalar;
use crate::spin7::{family, ricci_solver, RicciOutcome};
use crate::verify::verify_all;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(
    name = "spin7",
    version,
    about = "Exact algebra of Spin(7)-structures with parallel characteristic torsion"
)]
pub struct Cli {
    /// Output format of the payload.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Seed for random identity sampling.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Markdown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SpaceArg {
    Forms3,
    Spinors,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run every identity check and compare against the golden files.
    VerifyAll,
    /// Print a classification table.
    Table {
        #[command(subcommand)]
        which: TableKind,
    },
    /// Invariant 3-forms or spinors of a catalog algebra.
    Invariants {
        #[arg(long)]
        algebra: String,
        #[arg(long, value_enum)]
        space: SpaceArg,
    },
    /// Solve the spinorial Ricci equation for a torsion family member.
    Ricci {
        #[arg(long)]
        family: String,
        /// Parameter assignment, e.g. `a1=1,b1=0,b2=0`.
        #[arg(long)]
        set: String,
        /// Holonomy algebra whose invariant spinors enter the equation.
        #[arg(long)]
        hol: String,
    },
    /// Build and validate an explicit characteristic curvature.
    Curvature {
        #[arg(long)]
        case: String,
        /// Torsion family, if the case admits more than one.
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        set: String,
    },
    /// Reconstruct a Lie algebra from torsion and curvature.
    Reconstruct {
        #[arg(long, value_parser = ["1", "2", "2-", "t2"])]
        example: String,
    },
    /// Isotropy algebra of a form.
    Iso {
        #[arg(long)]
        form: String,
    },
    /// Golden-file maintenance.
    Golden {
        #[command(subcommand)]
        action: GoldenAction,
    },
}

#[derive(Subcommand, Debug)]
pub enum TableKind {
    /// Admissible isotropy/holonomy pairs.
    Admissibility,
}

#[derive(Subcommand, Debug)]
pub enum GoldenAction {
    /// Rewrite the generated golden files.
    Regenerate {
        /// Target directory (default: the golden directory).
        #[arg(long)]
        dir: Option<PathBuf>,
        /// Also overwrite the transcribed admissibility table.
        #[arg(long)]
        include_table: bool,
    },
    /// Compare the engine's output with the committed golden files.
    Check,
}

/// What a command produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandResult {
    pub exit_code: i32,
    pub payload: String,
    pub diagnostics: String,
}

impl CommandResult {
    fn ok(payload: String) -> Self {
        CommandResult {
            exit_code: 0,
            payload,
            diagnostics: String::new(),
        }
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn dispatch<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                CommandResult::ok(text)
            } else {
                CommandResult {
                    exit_code: 2,
                    payload: String::new(),
                    diagnostics: text,
                }
            };
        }
    };
    match run(&cli) {
        Ok(r) => r,
        Err(e) => CommandResult {
            exit_code: match e {
                Error::Io(_) | Error::Undecided(_) => 1,
                _ => 2,
            },
            payload: String::new(),
            diagnostics: format!("error: {e}\n"),
        },
    }
}

fn pretty(v: &Value) -> String {
    golden::to_text(v)
}

/// Parses `name=value,name=value`.
pub fn parse_assignments(s: &str) -> Result<Vec<(String, Scalar)>> {
    let mut offset = 0;
    let mut out = Vec::new();
    for part in s.split(',') {
        let Some((name, value)) = part.split_once('=') else {
            return Err(Error::Parse {
                offset,
                message: format!("expected name=value, found `{part}`"),
            });
        };
        let v: Scalar = value.trim().parse().map_err(|e| match e {
            Error::Parse { offset: o, message } => Error::Parse {
                offset: offset + name.len() + 1 + o,
                message,
            },
            other => other,
        })?;
        out.push((name.trim().to_string(), v));
        offset += part.len() + 1;
    }
    Ok(out)
}

fn scalars(v: &[Scalar]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn run(cli: &Cli) -> Result<CommandResult> {
    let md = cli.format == Format::Markdown;
    match &cli.command {
        Command::VerifyAll => {
            let report = verify_all(cli.seed)?;
            let payload = if md {
                report.to_markdown()
            } else {
                pretty(&serde_json::to_value(&report).expect("report serializes"))
            };
            let failed: Vec<String> = report
                .suites
                .iter()
                .flat_map(|s| {
                    s.checks
                        .iter()
                        .filter(|c| !c.passed)
                        .map(move |c| format!("{}: {}", s.name, c.name))
                })
                .collect();
            Ok(CommandResult {
                exit_code: if report.passed { 0 } else { 1 },
                payload,
                diagnostics: failed.iter().map(|f| format!("FAILED {f}\n")).collect(),
            })
        }
        Command::Table { which: TableKind::Admissibility } => {
            let table = admissibility_table()?;
            let computed = golden::table_json(&table.rows);
            let diffs = golden::diff(&golden::load(golden::TRANSCRIBED)?, &computed);
            let payload = if md {
                table.to_markdown()
            } else {
                pretty(&json!({ "rows": computed, "details": table.details }))
            };
            Ok(CommandResult {
                exit_code: if diffs.is_empty() { 0 } else { 1 },
                payload,
                diagnostics: diffs.iter().map(|d| format!("golden mismatch {d}\n")).collect(),
            })
        }
        Command::Invariants { algebra, space } => {
            let g = catalog(algebra)?;
            let (kind, elems): (&str, Vec<String>) = match space {
                SpaceArg::Forms3 => ("forms3", invariant_forms(&g, 3).iter().map(|f| f.to_string()).collect()),
                SpaceArg::Spinors => ("spinors", invariant_spinors(&g).iter().map(|s| s.to_string()).collect()),
            };
            let payload = if md {
                let mut s = format!(
                    "# Invariant {} of {}\n\ndimension {}\n\n",
                    if kind == "forms3" { "3-forms" } else { "spinors" },
                    pretty_name(algebra),
                    elems.len()
                );
                for e in &elems {
                    s.push_str(&format!("- `{e}`\n"));
                }
                s
            } else {
                pretty(&json!({ "algebra": algebra, "space": kind, "dim": elems.len(), "basis": elems }))
            };
            Ok(CommandResult::ok(payload))
        }
        Command::Ricci { family: fid, set, hol } => {
            let f = family(fid)?;
            let params = f.params_from(&parse_assignments(set)?)?;
            let h = catalog(hol)?;
            let t = f.evaluate(&params);
            let outcome = ricci_solver(&t, &h)?;
            let printed = f.ricci_formula(&params);
            let (value, matches) = match &outcome {
                RicciOutcome::Consistent { ric, unique } => {
                    let m = ric.is_diagonal() && ric.diag() == printed;
                    (
                        json!({
                            "family": fid, "params": scalars(&params), "hol": hol, "torsion": t.to_string(),
                            "consistent": true, "unique": unique, "ricci": ric.to_json(),
                            "ricci_diag": scalars(&ric.diag()), "matches_printed_formula": m,
                        }),
                        m,
                    )
                }
                RicciOutcome::Inconsistent => (
                    json!({
                        "family": fid, "params": scalars(&params), "hol": hol, "torsion": t.to_string(),
                        "consistent": false,
                    }),
                    true,
                ),
            };
            let payload = if md {
                match outcome.ricci() {
                    Some(r) => format!(
                        "# Ric^c for family {fid}, hol = {}\n\nT = `{t}`\n\nRic^c = {r}\n",
                        pretty_name(hol)
                    ),
                    None => format!(
                        "# Ric^c for family {fid}, hol = {}\n\nT = `{t}`\n\nthe Ricci equation is inconsistent\n",
                        pretty_name(hol)
                    ),
                }
            } else {
                pretty(&value)
            };
            Ok(CommandResult {
                exit_code: if matches { 0 } else { 1 },
                payload,
                diagnostics: if matches {
                    String::new()
                } else {
                    format!("Ric^c differs from the printed formula {:?}\n", scalars(&printed))
                },
            })
        }
        Command::Curvature { case, family: fam, set } => {
            let fid = match fam {
                Some(f) => f.clone(),
                None => default_family(case)?.to_string(),
            };
            let f = family(&fid)?;
            let params = f.params_from(&parse_assignments(set)?)?;
            let c = build_rc(case, Some(&fid), &params)?;
            let v = c.validate()?;
            let ric = ricci_of(&c.tensor);
            let payload = if md {
                format!(
                    "# Curvature case {case}\n\nfamily {fid}, hol = {}\n\nRic(R^c) = {ric}\n\nchecks: symmetric {}, Bianchi {}, range {}, invariant {}, Ricci {}\n",
                    pretty_name(&c.hol),
                    v.symmetric,
                    v.bianchi_with_torsion,
                    v.range_in_hol,
                    v.invariant,
                    v.ricci_matches_formula
                )
            } else {
                pretty(&json!({
                    "case": c, "ricci_diag": scalars(&ric.diag()), "validation": v,
                }))
            };
            Ok(CommandResult {
                exit_code: if v.all() { 0 } else { 1 },
                payload,
                diagnostics: if v.all() { String::new() } else { format!("validation failed: {v:?}\n") },
            })
        }
        Command::Reconstruct { example } => {
            let a = reconstruct_example(example)?;
            let mut v = algebra_json(&a);
            let mut ok = a.jacobi_holds;
            if example.starts_with('2') {
                let sign = if example == "2-" { -1 } else { 1 };
                let m = su3_match(sign)?;
                ok &= m.reproduces_alpha;
                v["su3_basis_match"] = json!(m.reproduces_alpha);
            }
            let payload = if md { algebra_markdown(example, &a) } else { pretty(&v) };
            Ok(CommandResult {
                exit_code: if ok { 0 } else { 1 },
                payload,
                diagnostics: a
                    .jacobi_failures
                    .iter()
                    .map(|(i, j, k)| format!("Jacobi fails on ({}, {}, {})\n", a.labels[*i], a.labels[*j], a.labels[*k]))
                    .collect(),
            })
        }
        Command::Iso { form } => {
            let t: MultiVector = form.parse()?;
            let g = iso_algebra(&t)?;
            let k = killing_form(&g)?;
            let basis: Vec<String> = g.basis.iter().map(|b| b.to_string()).collect();
            let payload = if md {
                let mut s = format!(
                    "# iso({form})\n\ndimension {}, identified as {}\n\n",
                    g.dim(),
                    pretty_name(&g.name)
                );
                for b in &basis {
                    s.push_str(&format!("- `{b}`\n"));
                }
                s
            } else {
                pretty(&json!({
                    "form": t.to_string(), "dim": g.dim(), "name": g.name, "basis": basis,
                    "killing_inertia": [k.inertia.0, k.inertia.1, k.inertia.2],
                }))
            };
            Ok(CommandResult::ok(payload))
        }
        Command::Golden { action } => match action {
            GoldenAction::Regenerate { dir, include_table } => {
                let dir = dir.clone().unwrap_or_else(golden::golden_dir);
                let written = golden::regenerate(&dir, *include_table)?;
                let files: Vec<String> = written.iter().map(|p| p.display().to_string()).collect();
                Ok(CommandResult::ok(if md {
                    files.iter().map(|f| format!("- wrote {f}\n")).collect()
                } else {
                    pretty(&json!({ "written": files }))
                }))
            }
            GoldenAction::Check => {
                let results = golden::check_all()?;
                let ok = results.iter().all(|(_, d)| d.is_empty());
                let v: Vec<Value> = results
                    .iter()
                    .map(|(n, d)| json!({ "file": n, "matches": d.is_empty(), "differences": d }))
                    .collect();
                Ok(CommandResult {
                    exit_code: if ok { 0 } else { 1 },
                    payload: if md {
                        results
                            .iter()
                            .map(|(n, d)| format!("- {n}: {}\n", if d.is_empty() { "matches" } else { "DIFFERS" }))
                            .collect()
                    } else {
                        pretty(&json!({ "files": v }))
                    },
                    diagnostics: results
                        .iter()
                        .flat_map(|(n, d)| d.iter().map(move |x| format!("{n}{x}\n")))
                        .collect(),
                })
            }
        },
    }
}

/// Non-zero brackets `[bᵢ, bⱼ] = Σ c bₖ` for `i < j`, as text.
pub fn bracket_table(a: &ReconstructedAlgebra) -> Vec<String> {
    let mut out = Vec::new();
    for i in 0..a.dim {
        for j in i + 1..a.dim {
            let terms: Vec<String> = (0..a.dim)
                .filter(|&k| !a.structure[i][j][k].is_zero())
                .map(|k| format!("({})*{}", a.structure[i][j][k], a.labels[k]))
                .collect();
            if !terms.is_empty() {
                out.push(format!("[{}, {}] = {}", a.labels[i], a.labels[j], terms.join(" + ")));
            }
        }
    }
    out
}

fn algebra_json(a: &ReconstructedAlgebra) -> Value {
    json!({
        "dim": a.dim,
        "labels": a.labels,
        "vector_dim": a.vector_dim,
        "metric": "identity on the vector part",
        "brackets": bracket_table(a),
        "jacobi_holds": a.jacobi_holds,
        "jacobi_failures": a.jacobi_failures,
        "killing_nondegenerate": a.killing.nondegenerate,
        "killing_inertia": [a.killing.inertia.0, a.killing.inertia.1, a.killing.inertia.2],
    })
}

fn algebra_markdown(name: &str, a: &ReconstructedAlgebra) -> String {
    let mut s = format!(
        "# Reconstruction {name}\n\ndimension {}, Jacobi {}, Killing form {} with inertia {:?}\n\n",
        a.dim,
        if a.jacobi_holds { "holds" } else { "FAILS" },
        if a.killing.nondegenerate { "non-degenerate" } else { "degenerate" },
        a.killing.inertia
    );
    for b in bracket_table(a) {
        s.push_str(&format!("- {b}\n"));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{int, q};

    #[test]
    fn assignments() {
        let a = parse_assignments("a1=1,b1=-1/2, b2=0").unwrap();
        assert_eq!(a[1], ("b1".to_string(), q(-1, 2)));
        assert_eq!(a[2].1, int(0));
        assert!(matches!(parse_assignments("a1=1,b1"), Err(Error::Parse { offset: 5, .. })));
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(dispatch(["spin7", "frobnicate"]).exit_code, 2);
        assert_eq!(dispatch(["spin7", "iso", "--bogus"]).exit_code, 2);
        assert_eq!(dispatch(["spin7", "invariants", "--algebra", "e8", "--space", "spinors"]).exit_code, 2);
        assert_eq!(dispatch(["spin7", "--help"]).exit_code, 0);
    }
}
