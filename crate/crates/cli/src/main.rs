//! `yk`: checks structural properties of presented algebras and their
//! Yoneda categories, and prints JSON reports.
//!
//! Exit codes: 0 pass, 1 parse error, 2 resource bound, 3 check failed,
//! 4 inconclusive.

mod algfile;
mod checks;
mod commands;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::json;

use yoneda_core::arknit::{StableQuotientSpec, DEFAULT_MAX_COUNT, DEFAULT_MAX_DIM};
use yoneda_core::presalg::Algebra;
use yoneda_core::scalar::{Fp, Rat, Scalar};
use yoneda_core::yoncat::DEFAULT_MAX_CLASSES;

use algfile::{AlgebraFile, FieldSpec};
use checks::{CheckArgs, CheckKind};
use report::{Instance, Outcome, Report, SCHEMA_VERSION};

#[derive(Parser)]
#[command(
    name = "yk",
    version,
    about = "Yoneda categories of finite-dimensional algebras"
)]
struct Cli {
    /// Also write the JSON report to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the canonical form of an algebra file.
    Print { file: PathBuf },
    /// Knit the Auslander-Reiten quiver.
    ArQuiver {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_COUNT)]
        max_count: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_DIM)]
        max_dim: usize,
        /// Write a Graphviz rendering here.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Run a checker on the Yoneda window of the algebra.
    Check {
        kind: CheckKind,
        file: PathBuf,
        /// Degree window `LO..HI`.
        #[arg(long, default_value = "-6..6", allow_hyphen_values = true)]
        window: String,
        /// Random instances for the sampling checks.
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        /// With `cm-enumerate`: also compute Ω-orbits and stable Homs between classes.
        #[arg(long)]
        structure: bool,
        /// Stop the CM enumeration beyond this many classes.
        #[arg(long, default_value_t = DEFAULT_MAX_CLASSES)]
        max_classes: usize,
        /// Expected endomorphism algebra (for `tilting`); any match passes.
        #[arg(long)]
        expect: Vec<PathBuf>,
    },
    /// Compare ν^b(A) with A[a].
    Cy {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long)]
        b: usize,
    },
    /// Veronese subalgebra and its global dimension.
    Veronese {
        file: PathBuf,
        #[arg(long)]
        l: usize,
        #[arg(long, default_value_t = 12)]
        gd_bound: usize,
        #[arg(long)]
        expect: Vec<PathBuf>,
    },
    /// Rigid locus of the degree-zero part of a graded algebra.
    Rigid {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', default_values_t = [1usize, 2])]
        degrees: Vec<usize>,
        #[arg(long)]
        two_sided: bool,
    },
    /// Presentation of the graded Yoneda algebra.
    Yoneda {
        file: PathBuf,
        #[arg(long, default_value = "-3..3", allow_hyphen_values = true)]
        window: String,
        #[arg(long)]
        expect: Vec<PathBuf>,
    },
    /// Stable Auslander algebra.
    StableAuslander {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Modulo::Projectives)]
        modulo: Modulo,
        #[arg(long)]
        expect: Vec<PathBuf>,
    },
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum Modulo {
    Projectives,
    Injectives,
}

impl Cmd {
    fn file(&self) -> &Path {
        match self {
            Cmd::Print { file }
            | Cmd::ArQuiver { file, .. }
            | Cmd::Check { file, .. }
            | Cmd::Cy { file, .. }
            | Cmd::Veronese { file, .. }
            | Cmd::Rigid { file, .. }
            | Cmd::Yoneda { file, .. }
            | Cmd::StableAuslander { file, .. } => file,
        }
    }

    fn expected(&self) -> &[PathBuf] {
        match self {
            Cmd::Check { expect, .. }
            | Cmd::Veronese { expect, .. }
            | Cmd::Yoneda { expect, .. }
            | Cmd::StableAuslander { expect, .. } => expect,
            _ => &[],
        }
    }

    fn name(&self) -> String {
        match self {
            Cmd::Print { .. } => "print".into(),
            Cmd::ArQuiver { .. } => "ar-quiver".into(),
            Cmd::Check { kind, .. } => {
                format!(
                    "check {}",
                    clap::ValueEnum::to_possible_value(kind)
                        .expect("named")
                        .get_name()
                )
            }
            Cmd::Cy { .. } => "cy".into(),
            Cmd::Veronese { .. } => "veronese".into(),
            Cmd::Rigid { .. } => "rigid".into(),
            Cmd::Yoneda { .. } => "yoneda".into(),
            Cmd::StableAuslander { .. } => "stable-auslander".into(),
        }
    }
}

/// A parse or setup failure, reported on stderr with exit code 1.
struct Fatal(String);

fn load(path: &Path) -> Result<AlgebraFile, Fatal> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Fatal(format!("{}: {e}", path.display())))?;
    AlgebraFile::parse(&text).map_err(|d| Fatal(format!("{}:{d}", path.display())))
}

fn parse_window(s: &str) -> Result<(i64, i64), Fatal> {
    let bad = || Fatal(format!("bad window `{s}`, expected LO..HI with LO < HI"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let lo: i64 = a.trim().parse().map_err(|_| bad())?;
    let hi: i64 = b.trim().parse().map_err(|_| bad())?;
    if lo >= hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn build<F: Scalar>(path: &Path, f: &AlgebraFile) -> Result<Arc<Algebra<F>>, Fatal> {
    f.build::<F>()
        .map_err(|e| Fatal(format!("{}: {e}", path.display())))
}

fn run<F: Scalar>(
    cmd: &Cmd,
    file: &AlgebraFile,
    expected: &[(PathBuf, AlgebraFile)],
) -> Result<Report, Fatal> {
    let alg = build::<F>(cmd.file(), file)?;
    let exp: Vec<Arc<Algebra<F>>> = expected
        .iter()
        .map(|(p, f)| build::<F>(p, f))
        .collect::<Result<_, _>>()?;
    let start = Instant::now();
    let result = match cmd {
        Cmd::Print { .. } => unreachable!("handled before dispatch"),
        Cmd::ArQuiver {
            max_count,
            max_dim,
            dot,
            ..
        } => {
            let b = json!({"max_count": max_count, "max_dim": max_dim});
            (
                commands::ar_quiver_cmd(&alg, *max_count, *max_dim, dot.as_deref()),
                b,
            )
        }
        Cmd::Check {
            kind,
            window,
            samples,
            seed,
            structure,
            max_classes,
            ..
        } => {
            let (lo, hi) = parse_window(window)?;
            let args = CheckArgs {
                lo,
                hi,
                samples: *samples,
                seed: *seed,
                structure: *structure,
                max_classes: *max_classes,
            };
            (
                checks::run_check(*kind, &alg, &args, &exp),
                json!({"window": [lo, hi]}),
            )
        }
        Cmd::Cy { a, b, .. } => (commands::cy_cmd(&alg, *a, *b), json!({"a": a, "b": b})),
        Cmd::Veronese { l, gd_bound, .. } => (
            commands::veronese_cmd(&alg, *l, *gd_bound, &exp),
            json!({"l": l, "gd_bound": gd_bound}),
        ),
        Cmd::Rigid {
            degrees, two_sided, ..
        } => (
            commands::rigid_cmd(&alg, degrees, *two_sided),
            json!({"degrees": degrees, "two_sided": two_sided}),
        ),
        Cmd::Yoneda { window, .. } => {
            let (lo, hi) = parse_window(window)?;
            (
                commands::yoneda_cmd(&alg, lo, hi, &exp),
                json!({"window": [lo, hi]}),
            )
        }
        Cmd::StableAuslander { modulo, .. } => {
            let spec = match modulo {
                Modulo::Projectives => StableQuotientSpec::ModuloProjectives,
                Modulo::Injectives => StableQuotientSpec::ModuloInjectives,
            };
            (
                commands::stable_auslander_cmd(&alg, spec, &exp),
                json!({"modulo": spec}),
            )
        }
    };
    let outcome = match result {
        (Ok(o), _) => o,
        (Err(e), bounds) => Outcome::from_error(&e, bounds),
    };
    Ok(Report {
        schema_version: SCHEMA_VERSION,
        check: cmd.name(),
        instance: Instance {
            file: cmd.file().display().to_string(),
            field: commands::field_of::<F>().to_string(),
            vertices: alg.n_vertices(),
            arrows: alg.quiver().arrows().len(),
            dim: alg.dim(),
        },
        verdict: outcome.verdict,
        inconclusive: outcome.inconclusive,
        reason: outcome.reason,
        bounds: outcome.bounds,
        witnesses: outcome.witnesses,
        timing_ms: start.elapsed().as_millis() as u64,
    })
}

fn dispatch(
    field: FieldSpec,
    cmd: &Cmd,
    file: &AlgebraFile,
    expected: &[(PathBuf, AlgebraFile)],
) -> Result<Report, Fatal> {
    match field {
        FieldSpec::Q => run::<Rat>(cmd, file, expected),
        FieldSpec::Fp(2) => run::<Fp<2>>(cmd, file, expected),
        FieldSpec::Fp(3) => run::<Fp<3>>(cmd, file, expected),
        FieldSpec::Fp(5) => run::<Fp<5>>(cmd, file, expected),
        FieldSpec::Fp(7) => run::<Fp<7>>(cmd, file, expected),
        FieldSpec::Fp(32003) => run::<Fp<32003>>(cmd, file, expected),
        FieldSpec::Fp(p) => Err(Fatal(format!("unsupported prime {p}"))),
    }
}

fn main_inner(cli: &Cli) -> Result<i32, Fatal> {
    let file = load(cli.cmd.file())?;
    if let Cmd::Print { .. } = cli.cmd {
        print!("{}", file.to_canonical());
        return Ok(0);
    }
    let expected: Vec<(PathBuf, AlgebraFile)> = cli
        .cmd
        .expected()
        .iter()
        .map(|p| Ok((p.clone(), load(p)?)))
        .collect::<Result<_, Fatal>>()?;
    let field = match std::env::var("YK_FIELD") {
        Ok(s) if !s.is_empty() => {
            FieldSpec::parse(&s).map_err(|m| Fatal(format!("YK_FIELD: {m}")))?
        }
        _ => file.field,
    };
    let report = dispatch(field, &cli.cmd, &file, &expected)?;
    let text = serde_json::to_string_pretty(&report).expect("report serializes") + "\n";
    if let Some(out) = &cli.out {
        std::fs::write(out, &text).map_err(|e| Fatal(format!("{}: {e}", out.display())))?;
    }
    print!("{text}");
    Ok(report.exit_code())
}

fn main() -> ExitCode {
    // Usage errors are parse errors (exit 1); clap's own code 2 is reserved for resource bounds.
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match main_inner(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(Fatal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
