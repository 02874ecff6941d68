//! Command-line front end.
//!
//! Subcommands: `analyze`, `generate`, `convert`, `sample`, `bounds`,
//! `geometry`. Exit codes: 0 success, 2 input error, 3 internal numeric
//! failure. `ENTANGLEKIT_SEED` provides a default seed, beaten by
//! `--seed`.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use entanglekit::csvout::{self, BoundPair};
use entanglekit::report;
use entanglekit::statefile::{self, StateFile};
use entanglekit::{IoError, IoResult};
use entanglekit_core::geometry;
use entanglekit_core::locc::{self, SchmidtVector};
use entanglekit_core::measures;
use entanglekit_core::sampling::{self, Ensemble, McMeasure, SampleMetadata};
use entanglekit_core::separability::{aggregate_report, CriterionConfig};
use entanglekit_core::states::{self, BellKind, BipartiteDims, PureState};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Parser)]
#[command(
    name = "entanglekit",
    version,
    about = "Separability criteria, entanglement measures, LOCC conversion and state-space geometry for bipartite states"
)]
struct Cli {
    /// Output format for reports (bulk datasets are always CSV)
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the primary output to this path instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Override the criterion violation threshold (default 1e-9)
    #[arg(long, global = true)]
    tolerance: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the separability criterion battery and all applicable measures
    Analyze {
        /// State file (pure or density)
        #[arg(long)]
        input: PathBuf,
        /// Comma-separated criterion subset
        /// (ppt,reduction,majorisation,entropy,reshuffling,mehta-ball)
        #[arg(long)]
        criteria: Option<String>,
        /// Report entropic measures in bits instead of nats
        #[arg(long)]
        bits: bool,
    },
    /// Construct a named state family and write it as a state file
    Generate {
        /// bell | werner | sigma-h | sigma-b | rho-m | rho-xtheta |
        /// pseudo-pure | tiles | max-entangled
        #[arg(long)]
        family: String,
        /// Bell kind: phi+ | phi- | psi+ | psi-
        #[arg(long)]
        kind: Option<String>,
        /// Subsystem dimension N for N×N families
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        x: Option<f64>,
        #[arg(long)]
        a: Option<f64>,
        #[arg(long)]
        b: Option<f64>,
        #[arg(long)]
        y: Option<f64>,
        #[arg(long)]
        theta: Option<f64>,
        #[arg(long)]
        epsilon: Option<f64>,
        /// Pure-state file used as the pseudo-pure target (default |φ⁺⟩)
        #[arg(long)]
        input: Option<PathBuf>,
        /// Haar seed for max-entangled (identity Γ when absent)
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Classify LOCC convertibility and the optimal conversion probability
    Convert {
        /// Source: pure-state file path or inline JSON Schmidt vector
        #[arg(long)]
        source: String,
        /// Target: pure-state file path or inline JSON Schmidt vector
        #[arg(long)]
        target: String,
    },
    /// Monte Carlo sampling of measures over random-state ensembles
    Sample {
        /// Measure identifier (concurrence, negativity, entropy, tangle,
        /// eof, fidelity)
        #[arg(long, conflicts_with = "scatter")]
        measure: Option<String>,
        /// Pair "x:y" of measures evaluated on the same draws
        #[arg(long)]
        scatter: Option<String>,
        /// Ensemble: pure (Fubini–Study) or mixed (Hilbert–Schmidt)
        #[arg(long, default_value = "pure")]
        ensemble: String,
        /// Dimensions, e.g. 2x2
        #[arg(long, default_value = "2x2")]
        dims: String,
        #[arg(long, default_value_t = 10_000)]
        n: usize,
        /// RNG seed (defaults to ENTANGLEKIT_SEED, then 0)
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Emit a bound-curve table
    Bounds {
        /// concurrence:negativity | concurrence:fidelity |
        /// negativity:fidelity | eof:relative-entropy
        #[arg(long)]
        pair: String,
        #[arg(long, default_value_t = 101)]
        grid: usize,
    },
    /// Octant-chart diagnostics and figure data
    Geometry {
        /// Diagnose a single two-qubit pure state file
        #[arg(long)]
        input: Option<PathBuf>,
        /// Emit the octant entropy cross-section at this grid resolution
        #[arg(long)]
        octant_sweep: Option<usize>,
        /// Emit separable-surface ruling polylines
        #[arg(long)]
        segre_sweep: bool,
        #[arg(long, default_value_t = 12)]
        lines: usize,
        #[arg(long, default_value_t = 40)]
        points: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(IoError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(IoError::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn emit(output: &Option<PathBuf>, text: &str) -> IoResult<()> {
    match output {
        Some(path) => {
            fs::write(path, text)?;
            Ok(())
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn default_seed(explicit: Option<u64>) -> u64 {
    explicit
        .or_else(|| {
            std::env::var("ENTANGLEKIT_SEED")
                .ok()
                .and_then(|s| s.parse().ok())
        })
        .unwrap_or(0)
}

fn parse_dims(spec: &str) -> IoResult<BipartiteDims> {
    let parts: Vec<&str> = spec.split(['x', 'X']).collect();
    if parts.len() != 2 {
        return Err(IoError::Input(format!(
            "dims must look like 2x2, got {spec:?}"
        )));
    }
    let n_a: usize = parts[0]
        .parse()
        .map_err(|_| IoError::Input(format!("bad dimension {:?}", parts[0])))?;
    let n_b: usize = parts[1]
        .parse()
        .map_err(|_| IoError::Input(format!("bad dimension {:?}", parts[1])))?;
    csvout::input_err(BipartiteDims::new(n_a, n_b))
}

fn criterion_config(selection: &Option<String>, tolerance: Option<f64>) -> IoResult<CriterionConfig> {
    let mut config = CriterionConfig::default();
    if let Some(t) = tolerance {
        if t.is_nan() || t <= 0.0 {
            return Err(IoError::Input(format!("tolerance must be positive, got {t}")));
        }
        config.threshold = t;
    }
    if let Some(list) = selection {
        config.ppt = false;
        config.reduction = false;
        config.majorisation = false;
        config.entropy_orders.clear();
        config.reshuffling = false;
        config.mehta_ball = false;
        for item in list.split(',') {
            match item.trim() {
                "ppt" => config.ppt = true,
                "reduction" => config.reduction = true,
                "majorisation" => config.majorisation = true,
                "entropy" => config.entropy_orders = vec![0.5, 1.0, 2.0, f64::INFINITY],
                "reshuffling" => config.reshuffling = true,
                "mehta-ball" => config.mehta_ball = true,
                other => {
                    return Err(IoError::Input(format!("unknown criterion {other:?}")));
                }
            }
        }
    }
    Ok(config)
}

fn run(cli: Cli) -> IoResult<()> {
    match cli.command {
        Command::Analyze {
            input,
            criteria,
            bits,
        } => {
            let state = statefile::read_state(&input)?;
            let config = criterion_config(&criteria, cli.tolerance)?;
            let rho = state.to_density();
            let separability = aggregate_report(&rho, &config);
            let mut measures_report = match &state {
                StateFile::Pure(psi) => measures::measure_report_pure(psi),
                StateFile::Density(rho) => measures::measure_report_density(rho),
            };
            if bits {
                for (id, value) in measures_report.entries.iter_mut() {
                    if matches!(id.as_str(), "entropy" | "renyi2" | "eof" | "e_infinity") {
                        *value /= std::f64::consts::LN_2;
                    }
                }
            }
            let text = match cli.format {
                Format::Json => format!(
                    "{:#}\n",
                    json!({
                        "separability": report::separability_json(&separability),
                        "measures": report::measures_json(&measures_report),
                    })
                ),
                Format::Text => format!(
                    "{}\n{}",
                    report::separability_text(&separability),
                    report::measures_text(&measures_report)
                ),
            };
            emit(&cli.output, &text)
        }

        Command::Generate {
            family,
            kind,
            n,
            x,
            a,
            b,
            y,
            theta,
            epsilon,
            input,
            seed,
        } => {
            let state = build_family(
                &family, &kind, n, x, a, b, y, theta, epsilon, &input, seed,
            )?;
            let rendered = statefile::render_state(&state);
            emit(&cli.output, &rendered)
        }

        Command::Convert { source, target } => {
            let sv_source = load_schmidt(&source)?;
            let sv_target = load_schmidt(&target)?;
            let conversion = locc::classify_vectors(&sv_source, &sv_target);
            let text = match cli.format {
                Format::Json => format!("{:#}\n", report::conversion_json(&conversion)),
                Format::Text => format!(
                    "relation: {}\np_c: {}\n",
                    conversion.relation.name(),
                    conversion.p_c
                ),
            };
            emit(&cli.output, &text)
        }

        Command::Sample {
            measure,
            scatter,
            ensemble,
            dims,
            n,
            seed,
        } => {
            let dims = parse_dims(&dims)?;
            let ensemble = csvout::input_err(Ensemble::parse(&ensemble))?;
            let seed = default_seed(seed);
            let meta = SampleMetadata::new(seed, n, dims);
            match (measure, scatter) {
                (Some(id), None) => {
                    let m = csvout::input_err(McMeasure::parse(&id))?;
                    let samples =
                        csvout::input_err(sampling::mc_samples(m, ensemble, dims, n, seed))?;
                    let estimate = sampling::estimate_from_samples(&samples);
                    if let Some(path) = &cli.output {
                        csvout::write_dataset(path, &csvout::samples_csv(m.id(), &samples), &meta)?;
                    }
                    let summary = match cli.format {
                        Format::Json => {
                            format!("{:#}\n", report::estimate_json(&estimate, &meta, m.id()))
                        }
                        Format::Text => format!(
                            "{} over {} {} samples: {:.6} +- {:.2e} (seed {seed})\n",
                            m.id(),
                            estimate.n,
                            ensemble.id(),
                            estimate.mean,
                            estimate.standard_error,
                        ),
                    };
                    print!("{summary}");
                    Ok(())
                }
                (None, Some(pair)) => {
                    let (id_x, id_y) = pair.split_once(':').ok_or_else(|| {
                        IoError::Input(format!("scatter pair must look like a:b, got {pair:?}"))
                    })?;
                    let mx = csvout::input_err(McMeasure::parse(id_x))?;
                    let my = csvout::input_err(McMeasure::parse(id_y))?;
                    let rows = csvout::input_err(sampling::mc_scatter(
                        mx, my, ensemble, dims, n, seed,
                    ))?;
                    let csv = csvout::scatter_csv(mx.id(), my.id(), &rows);
                    match &cli.output {
                        Some(path) => csvout::write_dataset(path, &csv, &meta)?,
                        None => print!("{csv}"),
                    }
                    Ok(())
                }
                _ => Err(IoError::Input(String::from(
                    "exactly one of --measure or --scatter is required",
                ))),
            }
        }

        Command::Bounds { pair, grid } => {
            let pair = BoundPair::parse(&pair)?;
            let csv = csvout::bounds_csv(pair, grid)?;
            emit(&cli.output, &csv)
        }

        Command::Geometry {
            input,
            octant_sweep,
            segre_sweep,
            lines,
            points,
        } => {
            if let Some(path) = input {
                let state = statefile::read_state(&path)?;
                let psi = match state {
                    StateFile::Pure(psi) => psi,
                    StateFile::Density(_) => {
                        return Err(IoError::Input(String::from(
                            "geometry diagnostics need a pure state file",
                        )))
                    }
                };
                let coords = csvout::input_err(geometry::octant_coords(&psi))?;
                let segre = csvout::input_err(geometry::segre_residuals(&psi))?;
                let residual = csvout::input_err(geometry::max_entangled_residual(&psi))?;
                let doc = json!({
                    "moduli": coords.moduli,
                    "phases": coords.phases,
                    "gnomonic": coords.gnomonic,
                    "segre": {
                        "quadric": segre.quadric,
                        "modulus_eq": segre.modulus_eq,
                        "phase_eq": segre.phase_eq,
                    },
                    "max_entangled_residual": residual,
                });
                let text = match cli.format {
                    Format::Json => format!("{doc:#}\n"),
                    Format::Text => format!(
                        "moduli: {:?}\nphases: {:?}\ngnomonic: {:?}\nsegre quadric: {:.6e}\nmax-entangled residual: {:.6e}\n",
                        coords.moduli, coords.phases, coords.gnomonic, segre.quadric, residual
                    ),
                };
                emit(&cli.output, &text)
            } else if let Some(resolution) = octant_sweep {
                emit(&cli.output, &csvout::octant_csv(resolution))
            } else if segre_sweep {
                emit(&cli.output, &csvout::segre_rulings_csv(lines, points))
            } else {
                Err(IoError::Input(String::from(
                    "geometry needs --input, --octant-sweep or --segre-sweep",
                )))
            }
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn build_family(
    family: &str,
    kind: &Option<String>,
    n: Option<usize>,
    x: Option<f64>,
    a: Option<f64>,
    b: Option<f64>,
    y: Option<f64>,
    theta: Option<f64>,
    epsilon: Option<f64>,
    input: &Option<PathBuf>,
    seed: Option<u64>,
) -> IoResult<StateFile> {
    let need = |opt: Option<f64>, name: &str| {
        opt.ok_or_else(|| IoError::Input(format!("family {family:?} requires --{name}")))
    };
    match family {
        "bell" => {
            let kind = match kind.as_deref() {
                Some("phi+") => BellKind::PhiPlus,
                Some("phi-") => BellKind::PhiMinus,
                Some("psi+") => BellKind::PsiPlus,
                Some("psi-") => BellKind::PsiMinus,
                other => {
                    return Err(IoError::Input(format!(
                        "bell needs --kind phi+|phi-|psi+|psi-, got {other:?}"
                    )))
                }
            };
            Ok(StateFile::Pure(states::bell(kind)))
        }
        "werner" => {
            let n = n.unwrap_or(2);
            Ok(StateFile::Density(csvout::input_err(states::werner(
                n,
                need(x, "x")?,
            ))?))
        }
        "sigma-h" => Ok(StateFile::Density(csvout::input_err(states::sigma_h(
            need(a, "a")?,
        ))?)),
        "sigma-b" => Ok(StateFile::Density(csvout::input_err(states::sigma_b(
            need(b, "b")?,
        ))?)),
        "rho-m" => Ok(StateFile::Density(csvout::input_err(states::rho_m(
            need(y, "y")?,
        ))?)),
        "rho-xtheta" => Ok(StateFile::Density(csvout::input_err(states::rho_xtheta(
            need(x, "x")?,
            need(theta, "theta")?,
        ))?)),
        "pseudo-pure" => {
            let epsilon = need(epsilon, "epsilon")?;
            let phi: PureState = match input {
                Some(path) => match statefile::read_state(path)? {
                    StateFile::Pure(psi) => psi,
                    StateFile::Density(_) => {
                        return Err(IoError::Input(String::from(
                            "pseudo-pure target must be a pure state file",
                        )))
                    }
                },
                None => csvout::input_err(states::max_entangled(n.unwrap_or(2)))?,
            };
            Ok(StateFile::Density(csvout::input_err(states::pseudo_pure(
                phi.dims(),
                &phi,
                epsilon,
            ))?))
        }
        "tiles" => Ok(StateFile::Density(states::tiles_upb_state())),
        "max-entangled" => {
            let n = n.unwrap_or(2);
            match seed {
                None => Ok(StateFile::Pure(csvout::input_err(states::max_entangled(n))?)),
                Some(s) => {
                    let mut rng = sampling::StateRng::new(s);
                    let u = sampling::random_unitary(n, &mut rng);
                    Ok(StateFile::Pure(csvout::input_err(
                        states::max_entangled_from_unitary(&u),
                    )?))
                }
            }
        }
        other => Err(IoError::Input(format!(
            "unknown family {other:?}; expected bell, werner, sigma-h, sigma-b, rho-m, \
             rho-xtheta, pseudo-pure, tiles or max-entangled"
        ))),
    }
}

/// Accepts either an inline JSON array of Schmidt coefficients or a
/// pure-state file path.
fn load_schmidt(spec: &str) -> IoResult<SchmidtVector> {
    if spec.trim_start().starts_with('[') {
        let values: Vec<f64> = serde_json::from_str(spec)
            .map_err(|e| IoError::Input(format!("bad Schmidt vector {spec:?}: {e}")))?;
        csvout::input_err(SchmidtVector::new(values))
    } else {
        match statefile::read_state(Path::new(spec))? {
            StateFile::Pure(psi) => Ok(SchmidtVector::from_pure(&psi)),
            StateFile::Density(_) => Err(IoError::Input(String::from(
                "convert works on pure states or Schmidt vectors; got a density matrix",
            ))),
        }
    }
}
