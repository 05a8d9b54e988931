mod config;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use luspace_core::acceptance::{run_all, SuiteConfig};
use luspace_core::dimension::{dim_reduced_space, face_lattice};
use luspace_core::fiberlab::{numeric_dim, sample_fiber, OracleConfig};
use luspace_core::polytope::{self, StratumClass};
use luspace_core::qstate::{psi_map, purity_invariants, PureState};
use luspace_core::stability::{four_qubit_family, stable_state, verify_stable};
use luspace_core::wall::{build_wall_operator, eigenspace_basis, torus_transitivity_check, wall_state};
use luspace_core::{Error, ErrorFamily, Result, SpectraPoint};
use serde_json::{json, Value};

use config::Config;

#[derive(Parser, Debug)]
#[command(
    name = "luspace",
    version,
    about = "Local-unitary reduced spaces of multi-qubit pure states"
)]
struct Cli {
    /// JSON file with default tolerances and sampling settings.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,

    /// Write the JSON report here instead of standard output.
    #[arg(long, short, global = true, value_name = "FILE")]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Input {
    /// Comma-separated λ list; decimals or fractions such as 1/6.
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["state", "point"])]
    lambda: Option<String>,

    /// State file `{"L": n, "amplitudes": [[re, im], ...]}`.
    #[arg(long, value_name = "FILE", conflicts_with = "point")]
    state: Option<PathBuf>,

    /// SpectraPoint JSON (for example `psi` output); `-` reads standard input.
    #[arg(long, value_name = "FILE")]
    point: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Shifted spectra Ψ(φ) of a state file.
    Psi {
        #[arg(long, value_name = "FILE")]
        state: PathBuf,
    },
    /// Membership and boundary stratum of a spectra point.
    Classify {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Closed-form dimension of the reduced space and invariant count.
    Dim {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Vertices of the polytope.
    Vertices {
        #[arg(short = 'L', long = "qubits")]
        l: usize,
        /// Cross-check against exact enumeration of the inequality system.
        #[arg(long)]
        oracle: bool,
    },
    /// Face lattice (vertices, edges, facets) annotated with dimensions.
    Facets {
        #[arg(short = 'L', long = "qubits")]
        l: usize,
    },
    /// Spectrum and eigenspaces of the wall operator.
    Xspec {
        #[arg(short = 'L', long = "qubits")]
        l: usize,
        #[arg(long, default_value_t = 1)]
        distinguished: usize,
        /// List the basis kets of the eigenvalue -L+2k.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Torus transitivity certificate; with --lambda also builds a wall state.
    WallCheck {
        #[arg(short = 'L', long = "qubits", required_unless_present = "lambda")]
        l: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        /// Comma-separated phases for the wall state coefficients.
        #[arg(long, allow_hyphen_values = true, requires = "lambda")]
        phases: Option<String>,
    },
    /// Construct a stable state, or verify stability of a given state.
    Stable {
        #[arg(short = 'L', long = "qubits", required_unless_present = "state")]
        l: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<f64>,
        #[arg(long, value_name = "FILE", conflicts_with_all = ["l", "alpha"])]
        state: Option<PathBuf>,
        /// Verify stability for SU(2) acting on the first k1 slots (default: all).
        #[arg(long)]
        k1: Option<usize>,
        #[arg(long)]
        rank_tol: Option<f64>,
    },
    /// Find a state with prescribed spectra.
    SampleFiber {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        max_restarts: Option<usize>,
    },
    /// Numerical dimension estimate from fibre samples.
    OracleDim {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        rank_tol: Option<f64>,
    },
    /// Run the acceptance criteria (reduced sample counts unless --full).
    Selftest {
        #[arg(long)]
        full: bool,
    },
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

fn read_point(input: &Input, cfg: &Config) -> Result<SpectraPoint> {
    match (&input.lambda, &input.state, &input.point) {
        (Some(list), None, None) => SpectraPoint::parse(list),
        (None, Some(path), None) => Ok(psi_map(&load_state(path)?)),
        (None, None, Some(src)) => {
            let text = if src == "-" {
                let mut s = String::new();
                std::io::stdin().read_to_string(&mut s)?;
                s
            } else {
                std::fs::read_to_string(src)?
            };
            let v: Value = serde_json::from_str(&text)?;
            let lambdas: Vec<f64> = match v {
                Value::Array(_) => serde_json::from_value(v)?,
                Value::Object(ref m) if m.contains_key("lambdas") => serde_json::from_value(m["lambdas"].clone())?,
                _ => return Err(bad("point JSON must be a list or an object with \"lambdas\"")),
            };
            SpectraPoint::new(lambdas)
        }
        (None, None, None) => Err(bad("one of --lambda, --state or --point is required")),
        _ => Err(bad("give exactly one of --lambda, --state or --point")),
    }
    .and_then(|p| {
        if p.num_qubits() > cfg.max_qubits() {
            Err(bad(format!("at most {} coordinates supported", cfg.max_qubits())))
        } else {
            Ok(p)
        }
    })
}

fn load_state(path: &PathBuf) -> Result<PureState> {
    PureState::from_json_str(&std::fs::read_to_string(path)?)
}

fn parse_list(list: &str) -> Result<Vec<f64>> {
    list.split(',')
        .map(|s| s.trim().parse::<f64>().map_err(|_| bad(format!("cannot parse {s:?}"))))
        .collect()
}

fn check_l(l: usize, max: usize) -> Result<()> {
    if l == 0 || l > max {
        return Err(bad(format!("L must lie in 1..={max}, got {l}")));
    }
    Ok(())
}

fn classify_report(point: &SpectraPoint, tol: f64) -> Result<StratumClass> {
    let m = polytope::membership_with_tol(point, tol)?;
    if !m.member {
        return Ok(StratumClass::non_member(point.num_qubits(), m.violations));
    }
    polytope::classify(point, tol)
}

fn run(cli: Cli) -> Result<Value> {
    let cfg = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    let value = match cli.command {
        Command::Psi { state } => {
            let s = load_state(&state)?;
            let p = psi_map(&s);
            json!({ "L": s.num_qubits(), "lambdas": p.lambdas, "purities": purity_invariants(&s) })
        }
        Command::Classify { input, tol } => {
            let p = read_point(&input, &cfg)?;
            let class = classify_report(&p, tol.unwrap_or(cfg.tight_tol))?;
            let mut v = serde_json::to_value(class)?;
            v["lambdas"] = json!(p.lambdas);
            v
        }
        Command::Dim { input, tol } => {
            let p = read_point(&input, &cfg)?;
            let class = polytope::classify(&p, tol.unwrap_or(cfg.tight_tol))?;
            let report = dim_reduced_space(&class)?;
            let mut v = serde_json::to_value(&report)?;
            v["lambdas"] = json!(p.lambdas);
            v["classification"] = serde_json::to_value(&class)?;
            v
        }
        Command::Vertices { l, oracle } => {
            check_l(l, polytope::MAX_VERTEX_QUBITS)?;
            let list = polytope::vertices(l)?;
            let mut v = json!({ "L": l, "count": list.vertices.len(), "vertices": list.vertices });
            if oracle {
                if !polytope::ORACLE_QUBITS.contains(&l) {
                    return Err(bad(format!("--oracle supports L in {:?}", polytope::ORACLE_QUBITS)));
                }
                let o = polytope::vertices_oracle(l)?;
                v["oracle_count"] = json!(o.vertices.len());
                v["oracle_agrees"] = json!(o.coordinate_set() == list.coordinate_set());
            }
            v
        }
        Command::Facets { l } => {
            check_l(l, polytope::ORACLE_QUBITS.end().to_owned())?;
            serde_json::to_value(face_lattice(l)?)?
        }
        Command::Xspec { l, distinguished, k } => {
            check_l(l, cfg.max_qubits())?;
            let x = build_wall_operator(l, distinguished)?;
            let spectrum: Vec<Value> = x
                .spectrum()
                .into_iter()
                .map(|(e, m)| json!({ "eigenvalue": e, "multiplicity": m }))
                .collect();
            let mut v = json!({ "L": l, "distinguished": distinguished, "xi": x.xi, "spectrum": spectrum });
            if let Some(k) = k {
                v["eigenspace"] = serde_json::to_value(eigenspace_basis(l, k, distinguished)?)?;
            }
            v
        }
        Command::WallCheck { l, lambda, phases } => {
            let point = lambda.as_deref().map(SpectraPoint::parse).transpose()?;
            let l = match (&point, l) {
                (Some(p), Some(l)) if p.num_qubits() != l => {
                    return Err(bad(format!("--lambda has {} coordinates but L = {l}", p.num_qubits())))
                }
                (Some(p), _) => p.num_qubits(),
                (None, Some(l)) => l,
                (None, None) => return Err(bad("give -L or --lambda")),
            };
            check_l(l, cfg.max_qubits())?;
            let mut v = json!({ "certificate": torus_transitivity_check(l)? });
            if let Some(p) = point {
                let phases = match phases {
                    Some(s) => parse_list(&s)?,
                    None => vec![0.0; l],
                };
                let s = wall_state(&p, &phases)?;
                let got = psi_map(&s);
                let err = got
                    .lambdas
                    .iter()
                    .zip(&p.lambdas)
                    .map(|(a, b)| (a - b).abs())
                    .fold(0.0, f64::max);
                v["wall_state"] = serde_json::to_value(s.to_state_file())?;
                v["reproduced_lambdas"] = json!(got.lambdas);
                v["max_spectra_error"] = json!(err);
            }
            v
        }
        Command::Stable {
            l,
            alpha,
            state,
            k1,
            rank_tol,
        } => {
            let rank_tol = rank_tol.unwrap_or(cfg.rank_tol);
            let s = match (state, l) {
                (Some(path), _) => load_state(&path)?,
                (None, Some(l)) => {
                    check_l(l, cfg.max_qubits())?;
                    match alpha {
                        // Excluded alphas are built unchecked so their rank deficit can be reported.
                        Some(a) if l == 4 => four_qubit_family(a)?,
                        _ => stable_state(l, alpha)?,
                    }
                }
                (None, None) => return Err(bad("give -L or --state")),
            };
            let k1 = k1.unwrap_or(s.num_qubits());
            let verdict = verify_stable(&s, k1, rank_tol)?;
            json!({ "L": s.num_qubits(), "alpha": alpha, "state": s.to_state_file(), "verdict": verdict })
        }
        Command::SampleFiber {
            lambda,
            seed,
            tol,
            max_restarts,
        } => {
            let p = SpectraPoint::parse(&lambda)?;
            let sample = sample_fiber(
                &p,
                seed.unwrap_or(cfg.seed),
                tol.unwrap_or(cfg.fiber_tol),
                max_restarts.unwrap_or(cfg.max_restarts),
            )?;
            let mut v = serde_json::to_value(&sample)?;
            v["state"] = serde_json::to_value(sample.state.to_state_file())?;
            v
        }
        Command::OracleDim {
            lambda,
            samples,
            seed,
            tol,
            rank_tol,
        } => {
            let p = SpectraPoint::parse(&lambda)?;
            let oc = OracleConfig {
                n_samples: samples.unwrap_or(cfg.samples),
                seed: seed.unwrap_or(cfg.seed),
                tol: tol.unwrap_or(cfg.fiber_tol),
                rank_tol: rank_tol.unwrap_or(cfg.rank_tol),
                max_restarts: cfg.max_restarts,
            };
            let estimate = numeric_dim(&p, &oc)?;
            let closed = dim_reduced_space(&polytope::classify(&p, cfg.tight_tol)?)?;
            let mut v = serde_json::to_value(&estimate)?;
            v["lambdas"] = json!(p.lambdas);
            v["closed_form_dim_M"] = json!(closed.dim_m);
            v["agrees"] = json!(estimate.dim_estimate == Some(closed.dim_m as i64));
            v
        }
        Command::Selftest { full } => {
            let suite = if full {
                SuiteConfig::full()
            } else {
                SuiteConfig::reduced()
            };
            let results = run_all(&suite);
            for r in &results {
                eprintln!("{r}");
            }
            let passed = results.iter().all(|r| r.passed);
            let v = json!({ "mode": if full { "full" } else { "reduced" }, "passed": passed, "criteria": results });
            if !passed {
                emit(&cli.output, &v)?;
                return Err(Error::Invariant("selftest criteria failed".into()));
            }
            v
        }
    };
    emit(&cli.output, &value)?;
    Ok(value)
}

fn emit(output: &Option<PathBuf>, value: &Value) -> Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    match output {
        Some(path) => std::fs::write(path, text + "\n")?,
        None => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            match writeln!(out, "{text}") {
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => {}
                r => r?,
            }
        }
    }
    Ok(())
}

fn exit_code(e: &Error) -> u8 {
    match e.family() {
        ErrorFamily::Input => 1,
        ErrorFamily::Numerical => 2,
        ErrorFamily::Internal => 3,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let selftest = matches!(cli.command, Command::Selftest { .. });
    match run(cli) {
        Ok(_) => ExitCode::SUCCESS,
        Err(e) => {
            let code = exit_code(&e);
            eprintln!("error: {e}");
            if !selftest {
                let family = match e.family() {
                    ErrorFamily::Input => "invalid-input",
                    ErrorFamily::Numerical => "numerical",
                    ErrorFamily::Internal => "internal",
                };
                println!(
                    "{}",
                    json!({ "error": { "kind": family, "message": e.to_string(), "exit_code": code } })
                );
            }
            ExitCode::from(code)
        }
    }
}
