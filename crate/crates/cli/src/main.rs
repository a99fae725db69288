//! `a2fusion`: A2 multiplicities, tensor products, fusion rules, and the
//! symbolic check of the closed fusion formula.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use a2_fusion::fusion::{fusion_decomposition_with, FusionMode};
use a2_fusion::symbolic::{certificate, symbolic_kac_walton_with};
use a2_fusion::tensor::CoefficientTable;
use a2_fusion::verify::{sweep, Disagreement};
use a2_fusion::{
    bmw_g, bmw_intermediates, bmw_symbolic, compare_piecewise, fusion_coefficient, mult,
    tensor_coefficient, tensor_decomposition, weight_diagram, FusionQuery, Level, Weight,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "a2fusion",
    version,
    about = "A2 tensor and fusion coefficients"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Multiplicity of weight (X, Y) in V((A, B))
    Mult {
        a: i64,
        b: i64,
        #[arg(allow_negative_numbers = true)]
        x: i64,
        #[arg(allow_negative_numbers = true)]
        y: i64,
    },
    /// Weight diagram of V((A, B))
    Weights {
        a: i64,
        b: i64,
        #[arg(long)]
        json: bool,
    },
    /// Decomposition of V((A, B)) x V((C, D)), or one coefficient with --nu
    Tensor {
        a: i64,
        b: i64,
        c: i64,
        d: i64,
        #[arg(long, num_args = 2, value_names = ["E", "F"])]
        nu: Option<Vec<i64>>,
        #[arg(long)]
        json: bool,
    },
    /// Level-L fusion product of V((A, B)) and V((C, D))
    Fuse {
        a: i64,
        b: i64,
        c: i64,
        d: i64,
        #[arg(long)]
        level: i64,
        #[arg(long, num_args = 2, value_names = ["E", "F"])]
        nu: Option<Vec<i64>>,
        #[arg(long)]
        json: bool,
        #[arg(long, value_enum, default_value_t = Mode::Fold)]
        mode: Mode,
    },
    /// Closed-formula fusion coefficient
    Bmw {
        a: i64,
        b: i64,
        c: i64,
        d: i64,
        e: i64,
        f: i64,
        #[arg(long)]
        level: i64,
        /// Print all intermediate quantities as JSON
        #[arg(long)]
        explain: bool,
    },
    /// Compare Kac-Walton with the closed formula on every triple up to a level
    Verify {
        #[arg(long)]
        max_level: i64,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Derive the fusion rule symbolically and check it against the closed formula
    Prove {
        #[arg(long, value_name = "PATH")]
        emit_cones: Option<PathBuf>,
        #[arg(long, value_name = "PATH")]
        emit_certificate: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Fold,
    Alcoves,
}

/// Failure of the command itself, as opposed to a failed check.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type Outcome = Result<ExitCode, InputError>;

fn dominant(x: i64, y: i64) -> Result<Weight, InputError> {
    let w = Weight::new(x, y);
    if !w.is_dominant() {
        return Err(InputError(format!("weight {w} is not dominant")));
    }
    Ok(w)
}

fn nu_weight(nu: &[i64]) -> Result<Weight, InputError> {
    dominant(nu[0], nu[1])
}

fn print_json(v: &Value) {
    println!(
        "{}",
        serde_json::to_string(v).expect("JSON values serialize")
    );
}

fn print_table(table: &CoefficientTable) {
    if table.is_empty() {
        println!("(empty)");
        return;
    }
    let rows: Vec<(String, String)> = table
        .iter()
        .map(|(nu, n)| (nu.to_string(), n.to_string()))
        .collect();
    let w = rows.iter().map(|r| r.0.len()).max().unwrap_or(0).max(2);
    println!("{:<w$}  N", "nu");
    for (nu, n) in rows {
        println!("{nu:<w$}  {n}");
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Mult { a, b, x, y } => {
            println!("{}", mult(&dominant(a, b)?, &Weight::new(x, y)));
        }
        Command::Weights { a, b, json } => {
            let diagram = weight_diagram(&dominant(a, b)?);
            if json {
                print_json(&Value::Array(
                    diagram
                        .iter()
                        .map(|(w, m)| json!({"weight": w.to_json(), "mult": m}))
                        .collect(),
                ));
            } else {
                let rows: Vec<String> = diagram.keys().map(ToString::to_string).collect();
                let w = rows.iter().map(String::len).max().unwrap_or(0).max(6);
                println!("{:<w$}  mult", "weight");
                for (label, m) in rows.iter().zip(diagram.values()) {
                    println!("{label:<w$}  {m}");
                }
            }
        }
        Command::Tensor {
            a,
            b,
            c,
            d,
            nu,
            json,
        } => {
            let (lambda, mu) = (dominant(a, b)?, dominant(c, d)?);
            match nu {
                Some(nu) => {
                    let nu = nu_weight(&nu)?;
                    let n = tensor_coefficient(&lambda, &mu, &nu);
                    if json {
                        print_json(&json!([{"nu": nu.to_json(), "N": n}]));
                    } else {
                        println!("{n}");
                    }
                }
                None => {
                    let table = tensor_decomposition(&lambda, &mu);
                    if json {
                        print_json(&table.to_json());
                    } else {
                        print_table(&table);
                    }
                }
            }
        }
        Command::Fuse {
            a,
            b,
            c,
            d,
            level,
            nu,
            json,
            mode,
        } => {
            let lv = Level::new(level)?;
            let (lambda, mu) = (dominant(a, b)?, dominant(c, d)?);
            let mode = match mode {
                Mode::Fold => FusionMode::Fold,
                Mode::Alcoves => FusionMode::Alcoves,
            };
            match nu {
                Some(nu) => {
                    let nu = nu_weight(&nu)?;
                    let q = FusionQuery::new(lambda.clone(), mu.clone(), nu.clone(), lv.clone())?;
                    let n = match mode {
                        FusionMode::Alcoves => fusion_coefficient(&q),
                        FusionMode::Fold => {
                            fusion_decomposition_with(mode, &lambda, &mu, &lv)?.get(&nu)
                        }
                    };
                    if json {
                        print_json(&json!({
                            "level": level,
                            "coefficients": [{"nu": nu.to_json(), "N": n}],
                        }));
                    } else {
                        println!("{n}");
                    }
                }
                None => {
                    let table = fusion_decomposition_with(mode, &lambda, &mu, &lv)?;
                    if json {
                        print_json(&json!({"level": level, "coefficients": table.to_json()}));
                    } else {
                        print_table(&table);
                    }
                }
            }
        }
        Command::Bmw {
            a,
            b,
            c,
            d,
            e,
            f,
            level,
            explain,
        } => {
            let lv = Level::new(level)?;
            let (lambda, mu, nu) = (dominant(a, b)?, dominant(c, d)?, dominant(e, f)?);
            let n = a2_fusion::bmw_fusion(&lambda, &mu, &nu, &lv)?;
            debug_assert_eq!(n, bmw_g(&lambda, &mu, &nu, Some(&lv)));
            if explain {
                print_json(&bmw_intermediates(&lambda, &mu, &nu, &lv).to_json(&n));
            } else {
                println!("{n}");
            }
        }
        Command::Verify { max_level, jobs } => {
            Level::new(max_level)?;
            let mut pool = rayon::ThreadPoolBuilder::new();
            if let Some(j) = jobs {
                if j == 0 {
                    return Err(InputError("--jobs must be positive".into()));
                }
                pool = pool.num_threads(j);
            }
            let report = pool.build()?.install(|| sweep(max_level));
            println!("levels 0..={max_level}: {} triples", report.triples);
            println!(
                "folding vs 13 alcoves: {} mismatches",
                report.count(Disagreement::FoldVsAlcoves)
            );
            println!(
                "13 alcoves vs closed formula: {} mismatches",
                report.count(Disagreement::AlcovesVsClosedForm)
            );
            if let Some(m) = report.mismatches.first() {
                println!(
                    "first counterexample: {:?} at level {}, lambda {}, mu {}, nu {}: fold {}, alcoves {}, closed formula {}",
                    m.kind, m.level, m.lambda, m.mu, m.nu, m.fold, m.alcoves, m.closed_form
                );
                return Ok(ExitCode::from(1));
            }
            println!("all agree");
        }
        Command::Prove {
            emit_cones,
            emit_certificate,
        } => {
            let start = Instant::now();
            let kw = symbolic_kac_walton_with::<i128>(|s| {
                eprintln!(
                    "  {:<7} {:>4} pieces after simplification ({:.1?})",
                    s.word.to_string(),
                    s.simplified_pieces,
                    start.elapsed()
                );
            })?;
            let bmw = bmw_symbolic::<i128>()?;
            let cmp = compare_piecewise(&kw.function, &bmw)?;
            println!(
                "Kac-Walton sum: {} nonzero pieces, {} zero pieces",
                kw.nonzero_count, kw.zero_count
            );
            println!(
                "closed formula: {} nonzero pieces, {} zero pieces",
                bmw.nonzero_count(),
                bmw.zero_count()
            );
            let matched = cmp.matching.iter().filter(|(_, m)| m.is_some()).count();
            println!(
                "identical nonzero pieces: {matched} of {}",
                cmp.matching.len()
            );
            if let Some(path) = emit_cones {
                let text = serde_json::to_string_pretty(&polycone::json::to_json(&kw.function))?;
                fs::write(&path, text + "\n")
                    .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
            }
            if let Some(path) = emit_certificate {
                fs::write(&path, certificate(&kw, &bmw, &cmp))
                    .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
            }
            println!("elapsed: {:.1?}", start.elapsed());
            if !cmp.equivalent() {
                println!("NOT EQUIVALENT");
                return Ok(ExitCode::from(1));
            }
            println!("equivalent");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
