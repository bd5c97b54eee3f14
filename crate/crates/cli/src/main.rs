use clap::{Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;
use uniconv_core::experiments::{
    default_n_list, parse_alpha_list, parse_n_list, run_experiment, OutputFormat, RunConfig,
};
use uniconv_core::{
    multiplier_estimate, norm_report, random_trig_poly, run_selftest, salem_g, CoreError, FnSpec,
    Normalization, Result, TrigPoly, WeightSequence,
};

#[derive(Parser)]
#[command(
    name = "uniconv",
    version,
    about = "Norms, kernels and multiplier estimates for trigonometric polynomials"
)]
struct Cli {
    /// Worker threads (0 = one per core). Output never depends on this.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the full norm report for a function
    Norms {
        /// Function spec, e.g. g:8, rand:16:1, sum:(g:4):(scale:2:(e:3))
        fn_spec: String,
        /// Weight for the weighted Wiener norm: const:C or logpow:ALPHA
        #[arg(long)]
        gamma: Option<String>,
        /// Skip the quadratic asymmetric scan above this degree
        #[arg(long, default_value_t = 512)]
        asym_cap: usize,
        #[arg(long, default_value = "json")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Estimate the pointwise-multiplier norm of a function
    Multiplier {
        fn_spec: String,
        /// Seed for the random witnesses
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value = "json")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a named experiment sweep
    Experiment {
        /// One of: salem-lemma2, gn-bounds, mu-en, asym, weight-threshold,
        /// sobolev, convergence
        id: String,
        /// Sweep values; `a,b,...,c` doubles geometrically
        #[arg(long)]
        n_list: Option<String>,
        /// Weight exponents for weight-threshold
        #[arg(long)]
        alpha_list: Option<String>,
        #[arg(long, default_value_t = 8)]
        grid_factor: usize,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Skip measured u_norm columns above this n
        #[arg(long, default_value_t = 1024)]
        u_norm_cap: usize,
        /// Multiplier spec for the convergence experiment
        #[arg(long)]
        m_spec: Option<String>,
        /// Function spec for the convergence experiment
        #[arg(long)]
        f_spec: Option<String>,
        #[arg(long, default_value = "csv")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the quick invariant suite
    Selftest,
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

/// Reports render as JSON directly or as a two-column key,value CSV.
fn render_report<T: serde::Serialize>(value: &T, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("report serialization");
            s.push('\n');
            s
        }
        OutputFormat::Csv => {
            let v = serde_json::to_value(value).expect("report serialization");
            let mut out = String::from("field,value\n");
            if let serde_json::Value::Object(map) = v {
                for (k, val) in map {
                    let cell = match val {
                        serde_json::Value::Null => "".to_string(),
                        serde_json::Value::Number(n) => match n.as_f64() {
                            Some(f) if f == f.trunc() && f.abs() < 9.0e15 => {
                                format!("{}", f as i64)
                            }
                            Some(f) => format!("{f:.16e}"),
                            None => n.to_string(),
                        },
                        serde_json::Value::String(s) => s,
                        other => other.to_string(),
                    };
                    out.push_str(&format!("{k},{cell}\n"));
                }
            }
            out
        }
    }
}

fn witness_set(seed: u64) -> Vec<(String, TrigPoly)> {
    let mut ws = Vec::new();
    let mut n = 2usize;
    while n <= 64 {
        ws.push((format!("g:{n}"), salem_g(n).expect("n >= 1")));
        n *= 2;
    }
    for i in 0..20u64 {
        let s = seed.wrapping_add(i);
        ws.push((
            format!("rand:8:{s}"),
            random_trig_poly(8, s, Normalization::UnitSupNorm),
        ));
    }
    ws
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Norms {
            fn_spec,
            gamma,
            asym_cap,
            format,
            out,
        } => {
            let format: OutputFormat = format.parse()?;
            let spec = FnSpec::parse(&fn_spec)?;
            let p = spec.build()?;
            let gamma = gamma.map(|g| WeightSequence::parse(&g)).transpose()?;
            let report = norm_report(&p, &spec.descriptor(), gamma.as_ref(), asym_cap);
            emit(&render_report(&report, format), out.as_ref())
        }
        Command::Multiplier {
            fn_spec,
            seed,
            format,
            out,
        } => {
            let format: OutputFormat = format.parse()?;
            let spec = FnSpec::parse(&fn_spec)?;
            let m = spec.build()?;
            let est = multiplier_estimate(&m, &spec.descriptor(), &witness_set(seed))?;
            emit(&render_report(&est, format), out.as_ref())
        }
        Command::Experiment {
            id,
            n_list,
            alpha_list,
            grid_factor,
            tol,
            seed,
            u_norm_cap,
            m_spec,
            f_spec,
            format,
            out,
        } => {
            let format: OutputFormat = format.parse()?;
            let cfg = RunConfig {
                n_list: match n_list {
                    Some(s) => parse_n_list(&s)?,
                    None => default_n_list(&id),
                },
                alpha_list: match alpha_list {
                    Some(s) => parse_alpha_list(&s)?,
                    None => RunConfig::default().alpha_list,
                },
                grid_factor,
                tol,
                seed,
                u_norm_cap,
            };
            let table = run_experiment(&id, &cfg, m_spec.as_deref(), f_spec.as_deref())?;
            emit(&table.render(format), out.as_ref())
        }
        Command::Selftest => {
            let results = run_selftest();
            let mut failed = 0;
            for r in &results {
                let status = if r.passed { "pass" } else { "FAIL" };
                println!("{status}  {}: {}", r.name, r.detail);
                if !r.passed {
                    failed += 1;
                }
            }
            if failed > 0 {
                return Err(CoreError::Domain(format!(
                    "selftest: {failed} of {} checks failed",
                    results.len()
                )));
            }
            println!("selftest: all {} checks passed", results.len());
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
        Err(e) => {
            // help or version output
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    if cli.threads > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global()
        {
            eprintln!("uniconv: cannot configure thread pool: {e}");
            return ExitCode::from(1);
        }
    }
    let is_selftest = matches!(cli.command, Command::Selftest);
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("uniconv: {e}");
            // tolerance violations from the invariant suite exit 2
            if is_selftest {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
