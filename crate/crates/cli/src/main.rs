//! `unitarity`: command-line front end for the classification engines.

use std::fmt::Write as _;
use std::process::ExitCode;
use std::sync::Mutex;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use unitarity::catalog::{render_table, so32_catalog, su22_catalog};
use unitarity::ehw::{self, ClassificationReport};
use unitarity::jakobsen;
use unitarity::rational::fmt_rational;
use unitarity::verma::{
    extremal_search, gram, parse_vector, GeneratorBasis, GramReport, RealForm, VermaModule,
};
use unitarity::{
    parse_rational, parse_rational_list, AlgebraSpec, Rational, RootSystem, RootVector,
};

#[derive(Parser)]
#[command(
    name = "unitarity",
    version,
    about = "Unitarizable highest weight modules of hermitian Lie algebras"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, env = "UNITARITY_FORMAT", default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a highest weight with both methods.
    Classify(WeightArgs),
    /// Print the diagram of noncompact positive roots.
    Diagram(AlgebraArg),
    /// Split rank and the orthogonal collection γ_1, …, γ_t.
    SplitRank(AlgebraArg),
    /// Gram matrices of the contravariant form up to a degree.
    Gram {
        #[command(flatten)]
        weight: WeightArgs,
        /// Maximal PBW degree.
        #[arg(long, short, default_value_t = 2)]
        degree: u32,
        /// Print the matrices as well as their inertia.
        #[arg(long)]
        matrices: bool,
    },
    /// Extremal vectors of a target weight, or a check of a given vector.
    Extremal {
        #[command(flatten)]
        weight: WeightArgs,
        /// Weight to search at.
        #[arg(
            long,
            allow_hyphen_values = true,
            conflicts_with = "vector",
            required_unless_present = "vector"
        )]
        target: Option<String>,
        /// Vector to check, e.g. "Gb12 Eb2 - 1/2 Eb1".
        #[arg(long, allow_hyphen_values = true)]
        vector: Option<String>,
    },
    /// Tables of the su(2,2) and so(3,2) modules.
    Catalog {
        #[arg(value_enum)]
        table: Table,
        /// Family parameter n of the su(2,2) table.
        #[arg(long, short, required_if_eq("table", "su22"))]
        n: Option<u32>,
        /// Integer parameter m (energy or spin).
        #[arg(long, short)]
        m: Option<u32>,
        /// Point on the continuous range.
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
    },
    /// Compare both methods over every label pattern.
    CrossCheck {
        #[command(flatten)]
        algebra: AlgebraArg,
        /// Largest label value in the sweep.
        #[arg(long, default_value_t = 2)]
        max_label: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Table {
    Su22,
    So32,
}

#[derive(Args)]
struct AlgebraArg {
    /// Algebra, e.g. `su 2 2`, `sp 3`, `sostar 4`, `so-odd 3`, `so-even 4`, `e6`, `e7`.
    #[arg(required = true, num_args = 1..=3)]
    algebra: Vec<String>,
}

#[derive(Args)]
struct WeightArgs {
    #[command(flatten)]
    algebra: AlgebraArg,
    /// Highest weight in orthonormal coordinates, e.g. "0,-2,1,1".
    #[arg(
        long,
        short,
        allow_hyphen_values = true,
        conflicts_with = "labels",
        required_unless_present = "labels"
    )]
    weight: Option<String>,
    /// Compact labels ⟨Λ₀, μ⟩, used with --lambda instead of --weight.
    #[arg(long, allow_hyphen_values = true)]
    labels: Option<String>,
    /// Position λ on the line Λ₀ + λε.
    #[arg(long, allow_hyphen_values = true, requires = "labels")]
    lambda: Option<String>,
}

enum Failure {
    Math(unitarity::Error),
    Mismatch(String),
}

impl From<unitarity::Error> for Failure {
    fn from(e: unitarity::Error) -> Self {
        Failure::Math(e)
    }
}

type Outcome = Result<String, Failure>;

fn algebra(arg: &AlgebraArg) -> Result<RootSystem, unitarity::Error> {
    let spec: AlgebraSpec = arg.algebra.join(" ").parse()?;
    RootSystem::build(spec)
}

fn weight(rs: &RootSystem, w: &WeightArgs) -> Result<RootVector, unitarity::Error> {
    match (&w.weight, &w.labels) {
        (Some(text), _) => {
            let v = parse_rational_list(text)?;
            if v.len() != rs.dim {
                return Err(unitarity::Error::InvalidWeight(format!(
                    "{} takes {} coordinates, got {}",
                    rs.spec,
                    rs.dim,
                    v.len()
                )));
            }
            Ok(RootVector(v))
        }
        (None, Some(labels)) => {
            let lambda = w
                .lambda
                .as_deref()
                .map(parse_rational)
                .transpose()?
                .unwrap_or_default();
            rs.weight_from_labels(&parse_rational_list(labels)?, lambda)
        }
        (None, None) => unreachable!("clap requires one of them"),
    }
}

fn pretty(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize") + "\n"
}

fn list(xs: &[Rational]) -> String {
    let parts: Vec<String> = xs.iter().map(fmt_rational).collect();
    format!("[{}]", parts.join(", "))
}

fn classify_text(r: &ClassificationReport) -> String {
    let w = &r.witnesses;
    let mut s = String::new();
    let _ = writeln!(s, "algebra: {}", r.algebra);
    let _ = writeln!(s, "weight: {}", r.weight);
    let _ = writeln!(s, "unitarizable: {}", r.unitarizable);
    let _ = writeln!(s, "level: {}", r.level);
    let _ = writeln!(s, "lambda0: {}", fmt_rational(&r.lambda0));
    let _ = writeln!(s, "A: {}", fmt_rational(&r.a));
    let _ = writeln!(s, "B: {}", fmt_rational(&r.b));
    let _ = writeln!(s, "C: {}", fmt_rational(&r.c));
    let _ = writeln!(s, "continuous_max: {}", fmt_rational(&r.continuous_max));
    let _ = writeln!(s, "discrete: {}", list(&r.discrete));
    let _ = writeln!(s, "Λ₀: {}", w.lambda0_weight);
    let _ = writeln!(s, "λ: {}", fmt_rational(&w.lambda));
    let _ = writeln!(s, "z: {}", fmt_rational(&w.z));
    let _ = writeln!(s, "α₀: {}", w.alpha0);
    let _ = writeln!(s, "missing weight: {}", w.missing_weight);
    let _ = writeln!(s, "Q: {}, T: {}", w.q_type, w.t_type);
    let _ = writeln!(s, "methods agree: {}", w.methods_agree);
    s
}

fn gram_text(report: &GramReport, matrices: bool) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "highest weight {}, degree ≤ {}",
        report.highest_weight, report.degree
    );
    for b in &report.blocks {
        let i = b.inertia;
        let _ = writeln!(
            s,
            "{}  dim {}  positive {}, zero {}, negative {}",
            b.weight,
            b.basis.len(),
            i.positive,
            i.zero,
            i.negative
        );
        if matrices {
            for (name, row) in b.basis.iter().zip(&b.matrix) {
                let _ = writeln!(s, "    {name}: {}", list(row));
            }
        }
    }
    let i = report.inertia;
    let _ = writeln!(
        s,
        "total: positive {}, zero {}, negative {}; semidefinite: {}",
        i.positive,
        i.zero,
        i.negative,
        report.is_psd()
    );
    s
}

fn run(cli: &Cli) -> Outcome {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Classify(w) => {
            let rs = algebra(&w.algebra)?;
            let r = ehw::classify(&rs, &weight(&rs, w)?)?;
            Ok(if json { pretty(&r) } else { classify_text(&r) })
        }
        Command::Diagram(a) => {
            let rs = algebra(a)?;
            let d = jakobsen::diagram(&rs);
            Ok(if json { pretty(&d) } else { d.render(&rs) })
        }
        Command::SplitRank(a) => {
            let rs = algebra(a)?;
            let sr = jakobsen::split_rank(&rs);
            if json {
                return Ok(pretty(&sr));
            }
            let mut s = format!("{}: split rank {}\n", rs.spec, sr.t);
            for (k, g) in sr.gammas.iter().enumerate() {
                let _ = writeln!(s, "  γ{} = {g}", k + 1);
            }
            Ok(s)
        }
        Command::Gram {
            weight: w,
            degree,
            matrices,
        } => {
            let rs = algebra(&w.algebra)?;
            let lambda = weight(&rs, w)?;
            let gb = GeneratorBasis::for_algebra(rs.spec)?;
            let rf = RealForm::from_root_system(&gb, &rs)?;
            let report = gram(&gb, &rf, lambda.coords(), *degree)?;
            Ok(if json {
                pretty(&report)
            } else {
                gram_text(&report, *matrices)
            })
        }
        Command::Extremal {
            weight: w,
            target,
            vector,
        } => {
            let rs = algebra(&w.algebra)?;
            let lambda = weight(&rs, w)?;
            let gb = GeneratorBasis::for_algebra(rs.spec)?;
            if let Some(text) = vector {
                let module = VermaModule::new(&gb, lambda.coords())?;
                let y = parse_vector(&module, text)?;
                let (ok, wt) = module.extremal_check(&y)?;
                if json {
                    return Ok(pretty(&json!({
                        "vector": y.display(&gb),
                        "element": y,
                        "weight": wt,
                        "extremal": ok,
                    })));
                }
                return Ok(format!(
                    "vector: {}\nweight: {wt}\nextremal: {ok}\n",
                    y.display(&gb)
                ));
            }
            let target = parse_rational_list(target.as_deref().expect("clap requires it"))?;
            let found = extremal_search(&gb, lambda.coords(), &target)?;
            if json {
                let items: Vec<_> = found
                    .iter()
                    .map(|y| json!({ "vector": y.display(&gb), "element": y }))
                    .collect();
                return Ok(pretty(&json!({
                    "highest_weight": lambda,
                    "target": RootVector(target),
                    "vectors": items,
                })));
            }
            let mut s = format!(
                "{} extremal vector(s) of weight {} in M({lambda})\n",
                found.len(),
                RootVector(target)
            );
            for y in &found {
                let _ = writeln!(s, "  {}", y.display(&gb));
            }
            Ok(s)
        }
        Command::Catalog {
            table,
            n,
            m,
            lambda,
        } => {
            let lambda = lambda.as_deref().map(parse_rational).transpose()?;
            let entries = match table {
                Table::Su22 => su22_catalog(n.expect("clap requires it"), *m, lambda)?,
                Table::So32 => so32_catalog(*m, lambda)?,
            };
            Ok(if json {
                pretty(&entries)
            } else {
                render_table(&entries)
            })
        }
        Command::CrossCheck {
            algebra: a,
            max_label,
        } => {
            let rs = algebra(a)?;
            let report = ehw::cross_check(&rs, *max_label)?;
            let out = if json {
                pretty(&report)
            } else {
                let mut s = format!(
                    "{}: {} patterns with labels ≤ {}, {} mismatches\n",
                    rs.spec,
                    report.patterns.len(),
                    max_label,
                    report.mismatches
                );
                for p in report.patterns.iter().filter(|p| !p.agree) {
                    let _ = writeln!(
                        s,
                        "  mismatch {:?}: λ₀ = {}, B = {}",
                        p.labels,
                        fmt_rational(&p.jakobsen_lambda0),
                        fmt_rational(&p.constants.b)
                    );
                }
                s
            };
            if report.mismatches > 0 {
                return Err(Failure::Mismatch(out));
            }
            Ok(out)
        }
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
    // exact arithmetic is i128 based and panics on overflow; inputs that
    // large are reported as invalid rather than as a crash
    static PANIC: Mutex<Option<String>> = Mutex::new(None);
    std::panic::set_hook(Box::new(|info| {
        *PANIC.lock().unwrap_or_else(|e| e.into_inner()) = Some(info.to_string());
    }));
    let result = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| run(&cli)));
    let Ok(result) = result else {
        let msg = PANIC
            .lock()
            .unwrap_or_else(|e| e.into_inner())
            .take()
            .unwrap_or_default();
        if msg.contains("overflow") {
            eprintln!(
                "error: arithmetic overflow: the input is too large for exact i128 arithmetic"
            );
            return ExitCode::from(2);
        }
        eprintln!("internal error: {msg}");
        return ExitCode::from(101);
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Math(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Mismatch(out)) => {
            print!("{out}");
            ExitCode::from(3)
        }
    }
}
