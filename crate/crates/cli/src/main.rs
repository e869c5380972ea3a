use clap::{Args, Parser, Subcommand, ValueEnum};
use coxlab::config::Limits;
use coxlab::factorization::{
    dihedral_reflection_tower, enumerate_series_formal, finer_formula_bn, finer_formula_gr1n, frobenius_crosscheck_sn,
    gt_crosscheck_sn, reduced_count, specialize, verify_dihedral, verify_main_theorem,
    verify_main_theorem_all_orderings, Exec, Target,
};
use coxlab::groups::{build_group, ReflectionGroup};
use coxlab::laplacian::rrt_check;
use coxlab::laplacian::ArrLaplacian;
use coxlab::lattice::{
    enumerate_flats, verify_coxeter_identity, verify_laplacian_recursion, verify_laplacian_recursion_arrangement,
    verify_matrix_forest, NormChoice,
};
use coxlab::linalg::Matrix;
use coxlab::report::Report;
use coxlab::scalar::{parse_rational, rat, Cyc, Rational};
use coxlab::symfunc::{
    lr_coefficient, mn_character, verify_hook_restriction, verify_quasihook_restriction, CharacterTable, Partition,
};
use coxlab::towers::{
    jm_spectrum_check, parse_ordering, parse_tower_json, standard_tower, tower_spectrum, JmRep, ParabolicTower,
    WeightSystem,
};
use coxlab::zonotope::{verify_volume_theorem_e6, zonotope_summary, RootCatalog};
use coxlab::{CoxError, Result};
use serde_json::{json, Value};
use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "coxlab",
    version,
    about = "Exact computations with reflection-group Laplacians and Coxeter factorizations"
)]
struct Cli {
    #[command(flatten)]
    limits: LimitArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct LimitArgs {
    /// Memory budget for convolution states in MiB [env: COXLAB_BUDGET_MB, default 2048]
    #[arg(long, global = true)]
    budget_mb: Option<u64>,
    /// Largest group order that is enumerated [env: COXLAB_GROUP_CAP, default 50000]
    #[arg(long, global = true)]
    group_cap: Option<usize>,
    /// Largest number of root subsets visited by the Shephard sum [default 10000000]
    #[arg(long, global = true)]
    subset_cap: Option<u64>,
}

impl LimitArgs {
    fn limits(&self) -> Limits {
        let mut l = Limits::from_env();
        if let Some(v) = self.budget_mb {
            l.budget_mb = v;
        }
        if let Some(v) = self.group_cap {
            l.group_cap = v;
        }
        if let Some(v) = self.subset_cap {
            l.subset_cap = v;
        }
        l
    }
}

#[derive(Args, Clone)]
struct GroupArg {
    /// Group descriptor such as A3, B4, D5, I2(8), H3, G(3,1,3)
    #[arg(long)]
    group: String,
}

#[derive(Args, Clone)]
struct TowerArg {
    /// Generator ordering like 1,3,2 or a JSON list of reflection-index sets per level
    #[arg(long)]
    tower: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Norm {
    #[value(name = "1")]
    One,
    #[value(name = "eh-1")]
    EhMinusOne,
    #[value(name = "eh")]
    Eh,
}

#[derive(Clone, Copy, ValueEnum)]
enum Rep {
    Reflection,
    Regular,
}

#[derive(Subcommand)]
enum Command {
    /// Group card: order, Coxeter number, reflections and generator matrices
    Group(GroupArg),
    /// Eigenvalues of the tower Laplacian as linear forms in the tower weights
    TowerSpectrum {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        tower: TowerArg,
    },
    /// Enumerated Coxeter-class factorization series
    FactorSeries {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        tower: TowerArg,
        #[arg(long)]
        length: Option<usize>,
        /// Comma-separated rational values for the weight variables
        #[arg(long)]
        weights: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Verification of an identity
    #[command(subcommand)]
    Verify(Verify),
    /// Intersection lattice of the reflection arrangement
    Lattice {
        #[command(flatten)]
        group: GroupArg,
        /// Write the lattice JSON to this file instead of stdout
        #[arg(long)]
        emit: Option<std::path::PathBuf>,
    },
    /// Root-zonotope volume of a crystallographic type
    Zonotope {
        /// Root system type such as A3, B3, D4, E6
        #[arg(long = "type")]
        kind: String,
        /// Also evaluate the Coxeter-number formula for the volume (E6 only)
        #[arg(long)]
        theorem: bool,
    },
    /// Symmetric-group character value
    Mn {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
    },
    /// Littlewood–Richardson coefficient
    Lr {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
    },
    /// Character table of a symmetric group
    Chartable {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

#[derive(Subcommand)]
enum Verify {
    /// Enumerated series against the tower product formula
    Mainthm {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        tower: TowerArg,
        #[arg(long, conflicts_with = "tower")]
        all_standard_towers: bool,
        /// Series length, default rank + 4
        #[arg(long)]
        length: Option<usize>,
    },
    /// Reduced factorization count against n!/h · det L
    Reduced {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        tower: TowerArg,
    },
    /// Characteristic polynomial against the sum over flats of parabolic factorizations
    MatrixForest {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        tower: TowerArg,
    },
    /// (q+x)^n against the flat sum of component Coxeter numbers
    CoxeterIdentity {
        #[command(flatten)]
        group: GroupArg,
        /// Squared length of the normal vectors: 1, e_H − 1 or e_H
        #[arg(long, value_enum, default_value = "eh")]
        norm: Norm,
    },
    /// det(x + L) against the pseudodeterminants of the localized Laplacians
    Recursion {
        #[arg(long, required_unless_present = "arrangement")]
        group: Option<String>,
        #[command(flatten)]
        tower: TowerArg,
        /// Explicit real arrangement as a JSON list of normal vectors, unit norms
        #[arg(long, conflicts_with = "group")]
        arrangement: Option<String>,
    },
    /// Class-sum character formula for symmetric groups
    Frobenius {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long, default_value_t = 5)]
        length: usize,
    },
    /// Gelfand–Tsetlin evaluation along a Young tower
    Gt {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        tower: TowerArg,
        #[arg(long, default_value_t = 6)]
        length: usize,
    },
    /// Finer formula for B_n with one weight per reflection
    FinerBn {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        weights: Option<String>,
        #[arg(long)]
        length: Option<usize>,
    },
    /// Finer formula for G(r,1,n) with one weight per hyperplane
    FinerGr1n {
        #[command(flatten)]
        group: GroupArg,
        /// One rational per hyperplane
        #[arg(long)]
        weights: Option<String>,
        #[arg(long)]
        length: Option<usize>,
    },
    /// Dihedral closed form, or the product formula for a divisor chain
    Dihedral {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long, conflicts_with = "chain")]
        weights: Option<String>,
        /// Divisor chain such as 2,6,12
        #[arg(long)]
        chain: Option<String>,
        #[arg(long, default_value_t = 8)]
        length: usize,
    },
    /// Restriction of a hook character to a Young subgroup
    HookRestriction {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        a: usize,
    },
    /// Restriction of a quasihook character to a Young subgroup
    QuasihookRestriction {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        a: usize,
    },
    /// Integrality and bounds of Jucys–Murphy spectra
    JmSpectrum {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        tower: TowerArg,
        #[arg(long, value_enum, default_value = "reflection")]
        rep: Rep,
    },
    /// The factorization L = R Ω R^† G of the W-Laplacian
    Rrt {
        #[command(flatten)]
        group: GroupArg,
        /// One rational per reflection
        #[arg(long)]
        weights: Option<String>,
    },
}

/// Payload with a verdict; `None` for plain computations.
struct Outcome {
    passed: Option<bool>,
    payload: Value,
    /// Raw text printed instead of the JSON envelope.
    raw: Option<String>,
}

impl Outcome {
    fn value(payload: Value) -> Self {
        Outcome {
            passed: None,
            payload,
            raw: None,
        }
    }

    fn report(r: Report) -> Self {
        Outcome {
            passed: Some(r.passed),
            payload: r.to_json(),
            raw: None,
        }
    }
}

fn group(arg: &GroupArg, limits: &Limits) -> Result<ReflectionGroup> {
    build_group(&arg.group, limits)
}

fn tower(g: &ReflectionGroup, arg: &TowerArg) -> Result<ParabolicTower> {
    match arg.tower.as_deref().map(str::trim) {
        Some(s) if s.starts_with('[') => parse_tower_json(g, s),
        Some(s) => {
            let ord = parse_ordering(s)?;
            standard_tower(g, &ord)
        }
        None => standard_tower(g, &(0..g.rank).collect::<Vec<_>>()),
    }
}

fn rationals(s: &str) -> Result<Vec<Rational>> {
    s.split(',').map(parse_rational).collect()
}

/// Pairwise distinct default weights `(i+2)/(i+1)`.
fn default_weights(k: usize) -> Vec<Rational> {
    (0..k as i64).map(|i| rat(i + 2, i + 1)).collect()
}

fn weights_or_default(s: Option<&str>, k: usize) -> Result<Vec<Rational>> {
    let w = match s {
        Some(s) => rationals(s)?,
        None => default_weights(k),
    };
    if w.len() != k {
        return Err(CoxError::InvalidArgument(format!(
            "expected {k} weights, got {}",
            w.len()
        )));
    }
    Ok(w)
}

fn partition(s: &str) -> Result<Partition> {
    Partition::parse(s)
}

fn run(cmd: &Command, limits: &Limits) -> Result<Outcome> {
    match cmd {
        Command::Group(g) => Ok(Outcome::value(group(g, limits)?.card())),
        Command::TowerSpectrum { group: ga, tower: ta } => {
            let g = group(ga, limits)?;
            let t = tower(&g, ta)?;
            let spec: Vec<String> = tower_spectrum(&g, &t)?.iter().map(|f| f.to_string()).collect();
            Ok(Outcome::value(json!({ "tower": t.to_json(&g), "spectrum": spec })))
        }
        Command::FactorSeries {
            group: ga,
            tower: ta,
            length,
            weights,
            format,
        } => {
            if matches!(format, Format::Csv) {
                return Err(CoxError::InvalidArgument(
                    "factor-series supports --format json only".into(),
                ));
            }
            let g = group(ga, limits)?;
            let t = tower(&g, ta)?;
            let ws = WeightSystem::from_tower(&g, &t);
            let len = length.unwrap_or(g.rank + 4);
            let cls = g.coxeter_class()?;
            let s = enumerate_series_formal(&g, &ws, &Target::Elements(cls.members), len, limits, Exec::default())?;
            let coefficients = match weights {
                Some(w) => {
                    let vals = rationals(w)?;
                    if vals.len() != ws.num_vars {
                        return Err(CoxError::InvalidArgument(format!(
                            "expected {} weights, got {}",
                            ws.num_vars,
                            vals.len()
                        )));
                    }
                    specialize(&s, &vals).to_json()
                }
                None => s.to_json(),
            };
            Ok(Outcome::value(json!({
                "group": g.label,
                "tower": t.to_json(&g),
                "length": len,
                "coefficients": coefficients,
            })))
        }
        Command::Verify(v) => run_verify(v, limits),
        Command::Lattice { group: ga, emit } => {
            let g = group(ga, limits)?;
            let lat = enumerate_flats(&g)?.to_json();
            match emit {
                Some(path) => {
                    let text = serde_json::to_string_pretty(&lat).expect("lattice serializes");
                    std::fs::write(path, text)
                        .map_err(|e| CoxError::InvalidArgument(format!("cannot write {}: {e}", path.display())))?;
                    Ok(Outcome::value(
                        json!({ "written": path.display().to_string(), "counts": lat["counts"] }),
                    ))
                }
                None => Ok(Outcome::value(lat)),
            }
        }
        Command::Zonotope { kind, theorem } => {
            let cat = RootCatalog::parse(kind)?;
            let summary = serde_json::to_value(zonotope_summary(&cat, limits)?).expect("summary serializes");
            if *theorem {
                if cat.label != "E6" {
                    return Err(CoxError::InvalidArgument(
                        "the volume formula check is available for E6 only".into(),
                    ));
                }
                let r = verify_volume_theorem_e6(limits)?;
                return Ok(Outcome {
                    passed: Some(r.passed),
                    payload: json!({ "summary": summary, "theorem": r.to_json() }),
                    raw: None,
                });
            }
            Ok(Outcome::value(summary))
        }
        Command::Mn { lambda, mu } => {
            let (l, m) = (partition(lambda)?, partition(mu)?);
            if l.size() != m.size() {
                return Err(CoxError::InvalidArgument(format!("|{l}| ≠ |{m}|")));
            }
            Ok(Outcome::value(
                json!({ "lambda": l, "mu": m, "value": mn_character(&l, &m) }),
            ))
        }
        Command::Lr { lambda, alpha, beta } => {
            let (l, a, b) = (partition(lambda)?, partition(alpha)?, partition(beta)?);
            if a.size() + b.size() != l.size() {
                return Err(CoxError::InvalidArgument("|alpha| + |beta| must equal |lambda|".into()));
            }
            Ok(Outcome::value(json!({
                "lambda": l, "alpha": a, "beta": b, "value": lr_coefficient(&l, &a, &b)
            })))
        }
        Command::Chartable { n, format } => {
            if *n == 0 || *n > 12 {
                return Err(CoxError::InvalidArgument("chartable supports 1 ≤ n ≤ 12".into()));
            }
            let t = CharacterTable::new(*n);
            match format {
                Format::Csv => Ok(Outcome {
                    passed: None,
                    payload: Value::Null,
                    raw: Some(t.to_csv()),
                }),
                Format::Json => Ok(Outcome::value(serde_json::to_value(&t).expect("table serializes"))),
            }
        }
    }
}

fn run_verify(v: &Verify, limits: &Limits) -> Result<Outcome> {
    match v {
        Verify::Mainthm {
            group: ga,
            tower: ta,
            all_standard_towers,
            length,
        } => {
            let g = group(ga, limits)?;
            let len = length.unwrap_or(g.rank + 4);
            let r = if *all_standard_towers {
                verify_main_theorem_all_orderings(&g, len, limits)?
            } else {
                verify_main_theorem(&g, &tower(&g, ta)?, len, limits)?
            };
            Ok(Outcome::report(r))
        }
        Verify::Reduced { group: ga, tower: ta } => {
            let g = group(ga, limits)?;
            let ws = match ta.tower {
                Some(_) => WeightSystem::from_tower(&g, &tower(&g, ta)?),
                None => WeightSystem::uniform(&g),
            };
            Ok(Outcome::report(reduced_count(&g, &ws, limits)?.to_report(&g.label)))
        }
        Verify::MatrixForest { group: ga, tower: ta } => {
            let g = group(ga, limits)?;
            let ws = WeightSystem::from_tower(&g, &tower(&g, ta)?);
            Ok(Outcome::report(verify_matrix_forest(&g, &ws, limits)?))
        }
        Verify::CoxeterIdentity { group: ga, norm } => {
            let g = group(ga, limits)?;
            let nc = match norm {
                Norm::One => NormChoice::One,
                Norm::EhMinusOne => NormChoice::EhMinusOne,
                Norm::Eh => NormChoice::Eh,
            };
            Ok(Outcome::report(verify_coxeter_identity(&g, nc)?))
        }
        Verify::Recursion {
            group: gs,
            tower: ta,
            arrangement,
        } => {
            if let Some(a) = arrangement {
                let normals: Vec<Vec<String>> = serde_json::from_str::<Vec<Vec<Value>>>(a)
                    .map_err(|e| CoxError::Parse(format!("arrangement: {e}")))?
                    .into_iter()
                    .map(|v| {
                        v.into_iter()
                            .map(|x| x.to_string().trim_matches('"').to_string())
                            .collect()
                    })
                    .collect();
                let dim = normals.first().map_or(0, |v| v.len());
                let vecs: Vec<Vec<Cyc>> = normals
                    .iter()
                    .map(|v| {
                        v.iter()
                            .map(|x| parse_rational(x).map(Cyc::from_rational))
                            .collect::<Result<_>>()
                    })
                    .collect::<Result<_>>()?;
                let k = vecs.len();
                let arr = ArrLaplacian::with_norms(
                    Matrix::identity(dim),
                    vecs,
                    &vec![Cyc::from_int(1); k],
                    (0..k).collect(),
                )?;
                return Ok(Outcome::report(verify_laplacian_recursion_arrangement(
                    &arr,
                    "arrangement",
                )?));
            }
            let g = build_group(gs.as_deref().expect("clap requires a group"), limits)?;
            let ws = match ta.tower {
                Some(_) => WeightSystem::from_tower(&g, &tower(&g, ta)?),
                None => WeightSystem::per_hyperplane(&g),
            };
            Ok(Outcome::report(verify_laplacian_recursion(&g, &ws)?))
        }
        Verify::Frobenius { group: ga, length } => {
            let g = group(ga, limits)?;
            let ws = WeightSystem::per_reflection(&g);
            Ok(Outcome::report(frobenius_crosscheck_sn(&g, &ws, *length, limits)?))
        }
        Verify::Gt {
            group: ga,
            tower: ta,
            length,
        } => {
            let g = group(ga, limits)?;
            let t = tower(&g, ta)?;
            Ok(Outcome::report(gt_crosscheck_sn(&g, &t, *length, limits)?))
        }
        Verify::FinerBn {
            group: ga,
            weights,
            length,
        } => {
            let g = group(ga, limits)?;
            let w = weights_or_default(weights.as_deref(), g.num_reflections())?;
            Ok(Outcome::report(finer_formula_bn(&g, &w, length.unwrap_or(g.rank + 4))?))
        }
        Verify::FinerGr1n {
            group: ga,
            weights,
            length,
        } => {
            let g = group(ga, limits)?;
            let per_h = weights_or_default(weights.as_deref(), g.num_hyperplanes())?;
            let w: Vec<Rational> = (0..g.num_reflections())
                .map(|r| per_h[g.reflection_hyperplane(r)].clone())
                .collect();
            Ok(Outcome::report(finer_formula_gr1n(
                &g,
                &w,
                length.unwrap_or(g.rank + 4),
            )?))
        }
        Verify::Dihedral {
            group: ga,
            weights,
            chain,
            length,
        } => {
            let g = group(ga, limits)?;
            if let Some(c) = chain {
                let chain: Vec<usize> = c
                    .split(',')
                    .map(|x| {
                        x.trim()
                            .parse()
                            .map_err(|_| CoxError::Parse(format!("malformed chain '{c}'")))
                    })
                    .collect::<Result<_>>()?;
                return Ok(Outcome::report(dihedral_reflection_tower(&g, &chain, *length, limits)?));
            }
            let w = weights_or_default(weights.as_deref(), g.num_reflections())?;
            Ok(Outcome::report(verify_dihedral(&g, &w, *length)?))
        }
        Verify::HookRestriction { n, k, a } => Ok(Outcome::report(verify_hook_restriction(*n, *k, *a)?)),
        Verify::QuasihookRestriction { n, k, a } => Ok(Outcome::report(verify_quasihook_restriction(*n, *k, *a)?)),
        Verify::JmSpectrum {
            group: ga,
            tower: ta,
            rep,
        } => {
            let g = group(ga, limits)?;
            let t = tower(&g, ta)?;
            let jr = match rep {
                Rep::Reflection => JmRep::Reflection,
                Rep::Regular => JmRep::Regular,
            };
            let r = jm_spectrum_check(&g, &t, jr)?;
            Ok(Outcome {
                passed: Some(r.ok()),
                payload: serde_json::to_value(&r).expect("report serializes"),
                raw: None,
            })
        }
        Verify::Rrt { group: ga, weights } => {
            let g = group(ga, limits)?;
            let w = weights_or_default(weights.as_deref(), g.num_reflections())?;
            let mut r = Report::new("rrt", &g.label);
            r.compare(rrt_check(&g, &w), || "L differs from R Ω R^† G".into());
            Ok(Outcome::report(r))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = cli.limits.limits();
    let start = Instant::now();
    match run(&cli.command, &limits) {
        Ok(out) => {
            let status = match out.passed {
                Some(false) => "discrepancy",
                _ => "ok",
            };
            let mut stdout = std::io::stdout().lock();
            if let Some(raw) = out.raw {
                let _ = write!(stdout, "{raw}");
            } else {
                let envelope = json!({
                    "status": status,
                    "payload": out.payload,
                    "elapsed_ms": start.elapsed().as_millis() as u64,
                });
                let _ = writeln!(
                    stdout,
                    "{}",
                    serde_json::to_string_pretty(&envelope).expect("JSON output")
                );
            }
            if out.passed == Some(false) {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            let envelope = json!({ "status": "error", "error": e.to_string() });
            let _ = writeln!(
                std::io::stdout(),
                "{}",
                serde_json::to_string_pretty(&envelope).expect("JSON output")
            );
            ExitCode::from(2)
        }
    }
}
