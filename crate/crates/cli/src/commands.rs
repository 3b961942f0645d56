//! Subcommand dispatch. Exit status: 0 when every check passes, 1 when a law
//! or axiom fails (the witness is printed), 2 on any input error.

use std::fmt::Write as _;
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use modset::lattice::check_lattice_laws;
use modset::modern_set::DEFAULT_CRISP_UNIVERSE_CAP;
use modset::{
    check_all_laws, check_gf_ring_conditions, check_wba_axioms, classify_family,
    find_noncommuting_witness, lift_check, verify_crisp_restriction, Algebra, BinaryOp, Law,
    SampleConfig, Verdict,
};

use crate::error::CliError;
use crate::expr::parse_expression;
use crate::format::load_file;
use crate::workspace::{Item, Workspace, BUILTIN_ALGEBRAS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "modset",
    version,
    about = "Law checker for modern sets over weak Boolean algebras"
)]
struct Cli {
    /// Definition file to load before running the command (repeatable).
    #[arg(short, long = "file", global = true)]
    files: Vec<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, clap::Args)]
struct Sampling {
    /// Random samples per law on infinite carriers.
    #[arg(long, default_value_t = modset::checker::DEFAULT_SAMPLES)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl Sampling {
    fn config(&self) -> SampleConfig {
        SampleConfig::new(self.samples, self.seed)
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Op {
    Wedge,
    Vee,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse a definition file and check every algebra and lattice in it.
    Validate { file: String },
    /// Check every law on one algebra.
    Laws {
        algebra: String,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Place a family in the classical / fuzzy / L-fuzzy / modern hierarchy.
    Classify {
        family: String,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Compare a law on a family with the same law at each point.
    Lift {
        family: String,
        law: String,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Check the four generalized-fuzzy ring conditions.
    Gfcheck {
        family: String,
        #[arg(long, default_value_t = DEFAULT_CRISP_UNIVERSE_CAP)]
        max_universe: usize,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Evaluate a set expression and print its membership at each point.
    Eval { family: String, expr: String },
    /// Search for x, y with x op y ≠ y op x.
    Witness {
        algebra: String,
        #[arg(value_enum)]
        op: Op,
        #[arg(long, default_value_t = 10_000)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Compare the family operations on crisp sets with ordinary set algebra.
    Oracle {
        family: String,
        #[arg(long, default_value_t = DEFAULT_CRISP_UNIVERSE_CAP)]
        max_universe: usize,
    },
    /// List built-in algebras and loaded definitions.
    List,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs one command line; `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: EXIT_INPUT,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let mut out = String::new();
    match dispatch(&cli, &mut out) {
        Ok(code) => Outcome {
            code,
            stdout: out,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: EXIT_INPUT,
            stdout: out,
            stderr: format!("error: {e}\n"),
        },
    }
}

macro_rules! line {
    ($out:expr, $($arg:tt)*) => {
        writeln!($out, $($arg)*).expect("writing to a String cannot fail")
    };
}

fn dispatch(cli: &Cli, out: &mut String) -> Result<i32, CliError> {
    let mut ws = Workspace::new();
    for f in &cli.files {
        load_file(&mut ws, f)?;
    }
    match &cli.command {
        Command::Validate { file } => {
            load_file(&mut ws, file)?;
            validate(&ws, out)
        }
        Command::Laws { algebra, sampling } => laws(&ws.algebra(algebra)?, sampling, out),
        Command::Classify { family, sampling } => {
            let fam = ws.family(family)?;
            let c = classify_family(&fam, &sampling.config())?;
            line!(
                out,
                "family {family}: {} (seed {}, samples {})",
                c.level,
                sampling.seed,
                sampling.samples
            );
            for e in &c.per_point_evidence {
                let failing = e.lattice_laws.iter().find(|r| !r.verdict.holds());
                let lattice = match failing {
                    None => "lattice laws hold".to_string(),
                    Some(r) => format!("{} {}", r.law, r.verdict.category()),
                };
                let cha = match &e.cha {
                    Some(v) => format!("frame law {v}"),
                    None => "frame law not checked".to_string(),
                };
                line!(
                    out,
                    "  {} ({}): {}; {lattice}; {cha}",
                    e.point,
                    e.algebra,
                    e.level
                );
            }
            Ok(EXIT_OK)
        }
        Command::Lift {
            family,
            law,
            sampling,
        } => {
            let fam = ws.family(family)?;
            let law = Law::from_str(law)?;
            let r = lift_check(&fam, law, &sampling.config())?;
            line!(
                out,
                "law {law} on family {family} (seed {}, samples {})",
                sampling.seed,
                sampling.samples
            );
            for (point, report) in &r.per_point {
                let alg = fam.algebra_at(point)?.name();
                line!(out, "  {point} ({alg}): {}", report.verdict);
            }
            line!(out, "pointwise: {}", r.pointwise_category());
            line!(out, "family: {}", r.family_verdict);
            line!(
                out,
                "consistent: {}",
                if r.consistent { "yes" } else { "NO" }
            );
            Ok(if r.family_verdict.fails() || !r.consistent {
                EXIT_FAILED
            } else {
                EXIT_OK
            })
        }
        Command::Gfcheck {
            family,
            max_universe,
            sampling,
        } => {
            let fam = ws.family(family)?;
            let r = check_gf_ring_conditions(&fam, *max_universe, &sampling.config())?;
            line!(
                out,
                "family {family} (seed {}, samples {})",
                sampling.seed,
                sampling.samples
            );
            for c in &r.conditions {
                line!(out, "{c}");
            }
            line!(
                out,
                "result: {}",
                if r.passed() { "passes" } else { "FAILS" }
            );
            Ok(if r.passed() { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Eval { family, expr } => {
            let e = parse_expression(expr)?;
            let fam = ws.family(family)?;
            let value = ws.eval(&fam, &e)?;
            line!(out, "{e}");
            for (point, v) in value.iter() {
                line!(out, "  {point}: {v}");
            }
            Ok(EXIT_OK)
        }
        Command::Witness {
            algebra,
            op,
            budget,
            seed,
        } => {
            let alg = ws.algebra(algebra)?;
            let op = match op {
                Op::Wedge => BinaryOp::Wedge,
                Op::Vee => BinaryOp::Vee,
            };
            match find_noncommuting_witness(&alg, op, *budget, *seed)? {
                Some((x, y)) => {
                    line!(out, "{op} does not commute in {} (seed {seed})", alg.name());
                    line!(out, "  x = {x}");
                    line!(out, "  y = {y}");
                    line!(out, "  x {} y = {}", op.symbol(), op.apply(&alg, &x, &y)?);
                    line!(out, "  y {} x = {}", op.symbol(), op.apply(&alg, &y, &x)?);
                    Ok(EXIT_OK)
                }
                None => {
                    let scope = if alg.is_finite() {
                        "exhaustive".to_string()
                    } else {
                        format!("forced values plus {budget} random pairs, seed {seed}")
                    };
                    line!(
                        out,
                        "no noncommuting pair for {op} in {} ({scope})",
                        alg.name()
                    );
                    Ok(EXIT_FAILED)
                }
            }
        }
        Command::Oracle {
            family,
            max_universe,
        } => {
            let fam = ws.family(family)?;
            let r = verify_crisp_restriction(&fam, *max_universe)?;
            line!(
                out,
                "family {family}: {} crisp sets, {} pairs, {} triples, complement {}",
                r.crisp_sets,
                r.pairs_checked,
                r.triples_checked,
                if r.complement_checked {
                    "checked"
                } else {
                    "not declared"
                }
            );
            match &r.mismatch {
                None => {
                    line!(out, "result: matches set algebra");
                    Ok(EXIT_OK)
                }
                Some(m) => {
                    line!(out, "result: MISMATCH: {m}");
                    Ok(EXIT_FAILED)
                }
            }
        }
        Command::List => {
            line!(out, "built-in algebras: {}", BUILTIN_ALGEBRAS.join(" "));
            line!(
                out,
                "also: chain<k>, pow<n>, mat<n>; families: <algebra>^<n> or a,b,c"
            );
            for item in ws.items() {
                let (kind, name) = match item {
                    Item::Algebra(n) => ("algebra", n),
                    Item::Lattice(n) => ("lattice", n),
                    Item::Family(n) => ("family", n),
                    Item::Set(n) => ("set", n),
                };
                line!(out, "{kind} {name}");
            }
            Ok(EXIT_OK)
        }
    }
}

fn laws(
    alg: &std::sync::Arc<Algebra>,
    sampling: &Sampling,
    out: &mut String,
) -> Result<i32, CliError> {
    line!(
        out,
        "laws for {} (seed {}, samples {})",
        alg.name(),
        sampling.seed,
        sampling.samples
    );
    let reports = check_all_laws(alg, &sampling.config())?;
    for r in &reports {
        line!(out, "  {}: {}", r.law, r.verdict);
    }
    let count = |cat: &str| {
        reports
            .iter()
            .filter(|r| r.verdict.category() == cat)
            .count()
    };
    line!(
        out,
        "summary: {} hold, {} fail, {} not applicable",
        count("holds"),
        count("fails"),
        count("n/a")
    );
    Ok(if count("fails") > 0 {
        EXIT_FAILED
    } else {
        EXIT_OK
    })
}

fn verdict_word<W: std::fmt::Display>(v: &Verdict<W>) -> String {
    match v {
        Verdict::Holds => "yes".to_string(),
        Verdict::Fails(w) => format!("no ({w})"),
        Verdict::NotApplicable(why) => format!("n/a ({why})"),
    }
}

fn validate(ws: &Workspace, out: &mut String) -> Result<i32, CliError> {
    let mut failures = 0;
    for item in ws.items() {
        match item {
            Item::Algebra(name) => {
                let alg = ws.defined_algebra(name).expect("listed algebras exist");
                let report = check_wba_axioms(alg)?;
                if report.passed {
                    line!(out, "algebra {name}: weak Boolean axioms hold");
                } else {
                    failures += 1;
                    line!(
                        out,
                        "algebra {name}: FAILS {} identities",
                        report.violations.len()
                    );
                    for v in &report.violations {
                        line!(out, "  {v}");
                    }
                }
            }
            Item::Lattice(name) => {
                let l = ws.defined_lattice(name).expect("listed lattices exist");
                let c = check_lattice_laws(l);
                line!(
                    out,
                    "lattice {name}: {} elements, bottom {}, top {}",
                    l.len(),
                    l.bottom(),
                    l.top()
                );
                line!(out, "  distributive: {}", verdict_word(&c.distributive));
                line!(out, "  boolean: {}", verdict_word(&c.boolean_complemented));
                line!(out, "  complete Heyting: {}", verdict_word(&c.cha));
            }
            Item::Family(name) => {
                let f = ws.defined_family(name).expect("listed families exist");
                let points: Vec<String> = f
                    .points()
                    .map(|(p, a)| format!("{p}: {}", a.name()))
                    .collect();
                line!(out, "family {name}: {}", points.join(", "));
            }
            Item::Set(name) => {
                let s = ws.set(name).expect("listed sets exist");
                line!(out, "set {name} over {}: {}", s.family, s.set);
            }
        }
    }
    line!(out, "summary: {failures} failing algebras");
    Ok(if failures > 0 { EXIT_FAILED } else { EXIT_OK })
}
