//! `ties`: command-line front end for the braids-and-ties algebra engine.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use ties_core::algebra::{gram_report, key_expr, moebius_report, parse_word, verify_formulas, verify_relations, BasisKey};
use ties_core::combinatorics::enumerate_labels;
use ties_core::exactmath::{parse_rational, RankMode, RatFunc, Rational};
use ties_core::specht::{algebra_dim, classification_report, specht_module};
use ties_core::tensor::{faithfulness_certificate, verify_tensor_relations, TensorVector};

const DEFAULT_SEED: u64 = 0x5eed;
/// Limit for verbs that touch the whole basis symbolically.
const SYMBOLIC_GUARD: usize = 6;
/// Limit for verbs that work in `V^{⊗n}` or with the Gram matrix.
const MODULE_GUARD: usize = 4;

#[derive(Parser)]
#[command(name = "ties", version, about = "Exact computations in the braids-and-ties algebra E_n(u)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Common {
    #[arg(long)]
    n: usize,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Ignore the size guard.
    #[arg(long)]
    force: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension n!·B_n.
    Dim(Common),
    /// The basis E_A T_w.
    Basis(Common),
    /// Normal form of an expression in T_i, E_i, E{..}, u.
    Eval {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        expr: String,
    },
    /// Defining relations, symbolically and optionally on the tensor space.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        tensor: bool,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Specht module dimensions, or one module by its index in `labels`.
    Specht {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        label: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Rank certificate for the tensor representation.
    Faithful {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 2)]
        points: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Rank of the Gram matrix of the invariant form.
    Gram {
        #[command(flatten)]
        common: Common,
        /// Specialize u to a rational p/q.
        #[arg(long, conflicts_with = "u1")]
        at: Option<String>,
        /// Specialize u to 1.
        #[arg(long)]
        u1: bool,
    },
    /// Coefficients of E_top in the Möbius products.
    Moebius(Common),
    /// The labels of the simple modules.
    Labels(Common),
}

#[derive(Debug)]
enum Failure {
    /// A check ran and did not pass.
    Verification(String),
    /// Bad input.
    Usage(String),
}

type Outcome = Result<(), Failure>;

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn guard(c: &Common, limit: usize) -> Outcome {
    if c.n == 0 {
        return Err(Failure::Usage("n must be at least 1".into()));
    }
    if c.n > limit && !c.force {
        return Err(Failure::Usage(format!("n = {} exceeds the limit {limit} for this verb; pass --force", c.n)));
    }
    Ok(())
}

fn emit<T: Serialize>(json: bool, value: &T, text: impl FnOnce() -> String) {
    let out = if json { serde_json::to_string_pretty(value).expect("serializable") } else { text() };
    // a closed pipe (e.g. `| head`) is not an error
    let _ = writeln!(std::io::stdout().lock(), "{out}");
}

fn vector_text(v: &TensorVector<RatFunc>) -> String {
    if v.is_zero() {
        return "0".into();
    }
    let terms: Vec<String> = v
        .terms()
        .iter()
        .map(|(k, c)| {
            let c = c.to_expr_string();
            match c.as_str() {
                "1" => k.to_string(),
                "-1" => format!("-{k}"),
                _ => format!("({c})*{k}"),
            }
        })
        .collect();
    terms.join(" + ").replace("+ -", "- ")
}

fn verdict(pass: bool, what: &str) -> Outcome {
    if pass {
        Ok(())
    } else {
        Err(Failure::Verification(format!("{what} failed")))
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Dim(c) => {
            guard(&c, SYMBOLIC_GUARD)?;
            let d = algebra_dim(c.n);
            emit(c.json, &json!({ "n": c.n, "dim": d }), || d.to_string());
            Ok(())
        }
        Command::Basis(c) => {
            guard(&c, SYMBOLIC_GUARD)?;
            let keys = BasisKey::all(c.n);
            emit(c.json, &keys, || keys.iter().map(key_expr).collect::<Vec<_>>().join("\n"));
            Ok(())
        }
        Command::Eval { common: c, expr } => {
            guard(&c, SYMBOLIC_GUARD)?;
            let x = parse_word(&expr, c.n).map_err(usage)?;
            emit(c.json, &x, || x.to_expr_string());
            Ok(())
        }
        Command::Verify { common: c, tensor, seed } => {
            guard(&c, SYMBOLIC_GUARD)?;
            let rel = verify_relations(c.n).map_err(usage)?;
            let form = verify_formulas(c.n).map_err(usage)?;
            let tens = if tensor {
                guard(&c, MODULE_GUARD)?;
                let exact = c.n <= 3;
                Some(verify_tensor_relations(c.n, if exact { 0 } else { 3 }, seed, !exact).map_err(usage)?)
            } else {
                None
            };
            let pass = rel.pass && form.pass && tens.as_ref().is_none_or(|t| t.pass);
            let value = json!({ "n": c.n, "relations": rel.summary, "formulas": form.summary,
                "tensor": tens.as_ref().map(|t| json!({ "points": t.points, "probes": t.probes, "pass": t.pass })),
                "pass": pass });
            emit(c.json, &value, || {
                let mut lines: Vec<String> = rel
                    .summary
                    .iter()
                    .chain(form.summary.iter())
                    .map(|(name, (checked, held))| format!("{name:<10} {held}/{checked}"))
                    .collect();
                if let Some(t) = &tens {
                    lines.push(format!(
                        "tensor     {} on {} probes at {}",
                        if t.pass { "pass" } else { "FAIL" },
                        t.probes,
                        t.points.join(", ")
                    ));
                }
                lines.push(if pass { "PASS".into() } else { "FAIL".into() });
                lines.join("\n")
            });
            verdict(pass, "relation check")
        }
        Command::Specht { common: c, label, seed } => {
            guard(&c, MODULE_GUARD)?;
            match label {
                None => {
                    let r = classification_report(c.n, RankMode::Specialized { seed }).map_err(usage)?;
                    emit(c.json, &r, || {
                        let mut lines: Vec<String> = r
                            .labels
                            .iter()
                            .zip(&r.dims)
                            .enumerate()
                            .map(|(i, (l, d))| format!("{:>3}  {d:>3}  {l}", i + 1))
                            .collect();
                        lines.push(format!("sum of squares {} (dim E_{} = {})", r.sum_squares, c.n, r.dim_algebra));
                        lines.join("\n")
                    });
                    verdict(r.sum_squares <= r.dim_algebra, "dimension bound")
                }
                Some(k) => {
                    let labels = enumerate_labels(c.n);
                    let l = k
                        .checked_sub(1)
                        .and_then(|i| labels.get(i))
                        .ok_or_else(|| Failure::Usage(format!("label index {k} not in 1..={}", labels.len())))?;
                    let m = specht_module(l).map_err(usage)?;
                    let basis = m.basis();
                    let wire: Vec<Vec<_>> = basis
                        .iter()
                        .map(|v| v.terms().iter().map(|(k, c)| json!({ "key": k, "coeff": c.to_expr_string() })).collect())
                        .collect();
                    let value = json!({ "label": l, "dim": m.dim(), "basis": wire });
                    emit(c.json, &value, || {
                        let mut lines = vec![format!("{l}: dim {}", m.dim())];
                        lines.extend(basis.iter().map(|v| format!("  {}", vector_text(v))));
                        lines.join("\n")
                    });
                    Ok(())
                }
            }
        }
        Command::Faithful { common: c, points, seed } => {
            guard(&c, MODULE_GUARD)?;
            let r = faithfulness_certificate(c.n, points, seed).map_err(usage)?;
            emit(c.json, &r, || {
                let ranks: Vec<String> = r.witnesses.iter().map(|w| format!("{} at u = {}", w.rank, w.point)).collect();
                format!("rank {} of {} ({}): {}", r.rank, r.expected, r.strategy, ranks.join(", "))
            });
            verdict(r.pass, "faithfulness certificate")
        }
        Command::Gram { common: c, at, u1 } => {
            guard(&c, MODULE_GUARD)?;
            let q: Option<Rational> = match (at, u1) {
                (Some(s), _) => Some(parse_rational(&s).map_err(usage)?),
                (None, true) => Some(Rational::from_integer(1.into())),
                (None, false) => None,
            };
            let r = gram_report(c.n, q.as_ref()).map_err(usage)?;
            emit(c.json, &r, || format!("rank {} of {} at u = {}", r.rank, r.size, r.point));
            Ok(())
        }
        Command::Moebius(c) => {
            guard(&c, MODULE_GUARD)?;
            let r = moebius_report(c.n).map_err(usage)?;
            emit(c.json, &r, || {
                let mut lines: Vec<String> = r
                    .rows
                    .iter()
                    .map(|row| format!("{:<24} k={} expansion {:>4}  lattice {:>4}", row.partition.to_string(), row.blocks, row.brute_force, row.lattice))
                    .collect();
                lines.push(format!(
                    "(-1)^(k-1)(k-1)!: {}   (-1)^(k-1)k!: {}",
                    if r.matches_classical { "matches" } else { "differs" },
                    if r.matches_factorial_k { "matches" } else { "differs" }
                ));
                lines.join("\n")
            });
            verdict(r.brute_force_matches_lattice, "Möbius comparison")
        }
        Command::Labels(c) => {
            guard(&c, SYMBOLIC_GUARD)?;
            let labels = enumerate_labels(c.n);
            emit(c.json, &labels, || {
                labels.iter().enumerate().map(|(i, l)| format!("{:>3}  {l}", i + 1)).collect::<Vec<_>>().join("\n")
            });
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
