//! Command-line front end: constant queries, certified bound reports,
//! extremal sweeps, continuous checks, CSV curve emission, and the
//! verification suites.
//!
//! Exit codes: 0 success, 1 property failure, 2 usage or domain error.

use clap::{Parser, Subcommand, ValueEnum};
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use stechkin::bound::{c_b, AuxSequence};
use stechkin::catalog;
use stechkin::continuous::{strong_transform, weak_reciprocal_value, weak_values, StepFunction};
use stechkin::extremal::{simplex_vertex_search, weak_lower_extremal, weak_upper_extremal};
use stechkin::sampling::{self, Rng};
use stechkin::sparse::{devore_constants, equivalence_check, RMode};
use stechkin::verify::{run_all, run_suite, Suite, SuiteReport, VerifyOptions};
use stechkin::{CertifiedValue, Exponent};

#[derive(Parser)]
#[command(
    name = "stechkin",
    version,
    about = "Optimal constants and certified bounds for the two-sided Stechkin inequalities"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate a catalog constant at an exponent q (a number, or "inf")
    Constant { kind: ConstantKind, q: String },
    /// Certified C_b(q) bound report for the family b_k = (k(k+1))^p
    Bound {
        /// family exponent p in (1/(2q'), 1]
        #[arg(long, default_value_t = 0.88)]
        p: f64,
        /// number of explicit terms
        #[arg(long = "N", default_value_t = 100)]
        n: usize,
        /// inner series truncation point
        #[arg(long = "M", default_value_t = 200_000)]
        m: u64,
        #[arg(long, default_value_t = 2.0)]
        q: f64,
    },
    /// Extremal-sequence computations
    Extremal {
        mode: ExtremalMode,
        #[arg(long, default_value = "2")]
        q: String,
        /// sweep / truncation length
        #[arg(long, default_value_t = 10_000)]
        kmax: u64,
    },
    /// Continuous inequalities on the model function (1/T) on (0, T]
    Continuous {
        mode: ContinuousMode,
        #[arg(long, default_value = "2")]
        q: String,
        #[arg(long = "T", default_value_t = 1.0)]
        t: f64,
    },
    /// Sparse-approximation norm equivalences
    Sparse {
        #[command(subcommand)]
        cmd: SparseCmd,
    },
    /// Emit one of the figure curves as CSV
    Figure {
        tag: FigureTag,
        /// number of 1/q samples in (0, 1)
        #[arg(long, default_value_t = 99)]
        grid: usize,
        /// output path (defaults to `<tag>.csv`)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the randomized verification suites
    Verify {
        suite: SuiteArg,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        /// self-test hook: flip one comparison to exercise the failure path
        #[arg(long, hide = true)]
        inject_failure: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstantKind {
    #[value(name = "c1")]
    C1,
    #[value(name = "C1_best")]
    C1Best,
    #[value(name = "c1_weak")]
    C1Weak,
    #[value(name = "C1_weak")]
    C1WeakUpper,
    #[value(name = "c1_cont")]
    C1Cont,
    #[value(name = "C1_cont")]
    C1ContUpper,
    #[value(name = "c1_weak_cont")]
    C1WeakCont,
    #[value(name = "C1_weak_cont")]
    C1WeakContUpper,
    #[value(name = "copson")]
    Copson,
    #[value(name = "levin_stechkin")]
    LevinStechkin,
    #[value(name = "stechkin_choice")]
    StechkinChoice,
    #[value(name = "improved")]
    Improved,
    #[value(name = "gao_exact")]
    GaoExact,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExtremalMode {
    Strong,
    WeakLower,
    WeakUpper,
}

#[derive(Clone, Copy, ValueEnum)]
enum ContinuousMode {
    Strong,
    Weak,
}

#[derive(Subcommand)]
enum SparseCmd {
    /// Check the quasi-norm equivalence on seeded random vectors
    Check {
        #[arg(long, default_value_t = 0.5)]
        alpha: f64,
        #[arg(long, default_value = "tau")]
        r: RArg,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum RArg {
    Tau,
    Inf,
}

#[derive(Clone, Copy, ValueEnum)]
enum FigureTag {
    #[value(name = "fig1_c1")]
    Fig1C1,
    #[value(name = "fig4_c1weak")]
    Fig4C1Weak,
    #[value(name = "fig5_C1weak")]
    Fig5C1Weak,
    #[value(name = "fig6_cont_pair")]
    Fig6ContPair,
    #[value(name = "fig7_weakcont_pair")]
    Fig7WeakContPair,
    #[value(name = "fig8_bounds_overlay")]
    Fig8BoundsOverlay,
}

impl FigureTag {
    fn name(self) -> &'static str {
        match self {
            FigureTag::Fig1C1 => "fig1_c1",
            FigureTag::Fig4C1Weak => "fig4_c1weak",
            FigureTag::Fig5C1Weak => "fig5_C1weak",
            FigureTag::Fig6ContPair => "fig6_cont_pair",
            FigureTag::Fig7WeakContPair => "fig7_weakcont_pair",
            FigureTag::Fig8BoundsOverlay => "fig8_bounds_overlay",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Strong,
    Weak,
    Continuous,
    Sparse,
    All,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Cmd) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match cmd {
        Cmd::Constant { kind, q } => cmd_constant(kind, &q),
        Cmd::Bound { p, n, m, q } => cmd_bound(p, n, m, q),
        Cmd::Extremal { mode, q, kmax } => cmd_extremal(mode, &q, kmax),
        Cmd::Continuous { mode, q, t } => cmd_continuous(mode, &q, t),
        Cmd::Sparse { cmd } => match cmd {
            SparseCmd::Check {
                alpha,
                r,
                seed,
                trials,
            } => cmd_sparse_check(alpha, r, seed, trials),
        },
        Cmd::Figure { tag, grid, out } => cmd_figure(tag, grid, out),
        Cmd::Verify {
            suite,
            seed,
            trials,
            inject_failure,
        } => cmd_verify(suite, seed, trials, inject_failure),
    }
}

/// Shortest round-trip decimal, capped at 15 significant digits.
fn format_sig15(v: f64) -> String {
    let shortest = format!("{v}");
    let mantissa = shortest.split(['e', 'E']).next().unwrap_or(&shortest);
    let digits: String = mantissa.chars().filter(char::is_ascii_digit).collect();
    let sig = digits.trim_start_matches('0').len().max(1);
    if sig > 15 {
        format!("{v:.14e}")
    } else {
        shortest
    }
}

fn parse_q(s: &str) -> Result<Exponent, stechkin::Error> {
    Exponent::from_str(s)
}

fn err_str(err: f64) -> String {
    if err == 0.0 {
        "0".to_string()
    } else {
        format!("{err:e}")
    }
}

fn cmd_constant(kind: ConstantKind, q_str: &str) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let q = parse_q(q_str)?;
    let (value, origin): (CertifiedValue, &str) = match kind {
        ConstantKind::C1 => (
            catalog::strong_lower(q)?,
            "pi/(q sin(pi/q)), minimal left constant of the strong discrete inequality (Bennett)",
        ),
        ConstantKind::C1Best => (
            catalog::strong_upper(q)?,
            "best known upper bound for the right strong constant (optimized family / de Bruijn / k(k+1) family / Gao)",
        ),
        ConstantKind::C1Weak => (
            catalog::weak_lower(q)?,
            "zeta(q)^(1/q), minimal left constant of the weak discrete inequality",
        ),
        ConstantKind::C1WeakUpper => (
            catalog::weak_upper(q)?,
            "q^(1/q) q'^(1/q'), minimal right constant of the weak discrete inequality",
        ),
        ConstantKind::C1Cont => (
            catalog::continuous(q)?.strong_lower,
            "pi/(q sin(pi/q)), minimal left constant of the strong continuous inequality",
        ),
        ConstantKind::C1ContUpper => (
            catalog::continuous(q)?.strong_upper,
            "(q-1)^(1/q), minimal right constant of the strong continuous inequality (Hardy-Littlewood-Polya)",
        ),
        ConstantKind::C1WeakCont => (
            catalog::continuous(q)?.weak_lower,
            "(q-1)^(-1/q), minimal left constant of the weak continuous inequality",
        ),
        ConstantKind::C1WeakContUpper => (
            catalog::continuous(q)?.weak_upper,
            "q^(1/q) q'^(1/q'), minimal right constant of the weak continuous inequality",
        ),
        ConstantKind::Copson => (catalog::copson(q)?, "Copson's bound q^(1/q)"),
        ConstantKind::LevinStechkin => (
            catalog::levin_stechkin(q)?,
            "Levin-Stechkin three-branch bound",
        ),
        ConstantKind::StechkinChoice => (
            catalog::stechkin_choice(q)?,
            "2(2q'-1)^(-1/q'), the b_k = k(k+1) auxiliary-sequence bound",
        ),
        ConstantKind::Improved => (
            catalog::improved(q)?,
            "(e ln2/sqrt2)^(1/q'), optimized auxiliary-family bound",
        ),
        ConstantKind::GaoExact => (
            catalog::gao_exact(q)?,
            "(q-1)^(1/q), exact right strong constant for q >= q0 (Gao)",
        ),
    };
    println!("{} ± {}", format_sig15(value.value), err_str(value.err));
    println!("origin: {origin}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_bound(p: f64, n: usize, m: u64, q: f64) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let q = Exponent::try_new(q)?;
    let b = AuxSequence::poly(p)?;
    let rep = c_b(q, &b, n, m)?;
    println!("bound report: q={q}, p={p}, N={n}, M={m}");
    println!(
        "supremum = {} ± {}",
        format_sig15(rep.supremum.value),
        err_str(rep.supremum.err)
    );
    match rep.sup_at {
        Some(idx) => println!("attained at term n = {idx}"),
        None => println!("attained at the tail envelope (n > {n})"),
    }
    println!(
        "tail envelope (n > {n}) = {}",
        format_sig15(rep.tail_majorant.value)
    );
    println!("truncation certificate = {:e}", rep.truncation_error);
    Ok(ExitCode::SUCCESS)
}

fn cmd_extremal(
    mode: ExtremalMode,
    q_str: &str,
    kmax: u64,
) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let q = parse_q(q_str)?;
    match mode {
        ExtremalMode::Strong => {
            let (ratio, k0) = simplex_vertex_search(q, kmax)?;
            let c1 = catalog::strong_lower(q)?;
            println!("best vertex: k0 = {k0} of {kmax}");
            println!("ratio = {}", format_sig15(ratio));
            println!(
                "strong lower constant = {} (gap {:e})",
                format_sig15(c1.value),
                c1.value - ratio
            );
        }
        ExtremalMode::WeakLower => {
            let (value, argmax) = weak_lower_extremal(q, kmax as usize)?;
            let c = catalog::weak_lower(q)?;
            println!("harmonic extremal, K = {kmax}");
            println!("value = {} at n = {argmax}", format_sig15(value));
            println!(
                "weak lower constant = {} (gap {:e})",
                format_sig15(c.value),
                c.value - value
            );
        }
        ExtremalMode::WeakUpper => {
            let (value, argmax) = weak_upper_extremal(q, kmax as usize)?;
            let c = catalog::weak_upper(q)?;
            println!("flat extremal, N = {kmax}");
            println!("value = {} at n = {argmax}", format_sig15(value));
            println!(
                "1/value = {} vs weak upper constant {}",
                format_sig15(1.0 / value),
                format_sig15(c.value)
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_continuous(
    mode: ContinuousMode,
    q_str: &str,
    t_end: f64,
) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let q = parse_q(q_str)?;
    let f = StepFunction::model(t_end)?;
    match mode {
        ContinuousMode::Strong => {
            let v = strong_transform(&f, q, 1e-10)?;
            let c = catalog::continuous(q)?.strong_lower;
            println!("strong transform of (1/T) on (0,T], T = {t_end}");
            println!("value = {} ± {}", format_sig15(v.value), err_str(v.err));
            println!(
                "closed form pi/(q sin(pi/q)) = {} (difference {:e})",
                format_sig15(c.value),
                (v.value - c.value).abs()
            );
        }
        ContinuousMode::Weak => {
            let w = weak_values(&f, q)?;
            let qv = q.require_finite("continuous weak")?;
            let closed = (1.0 / qv).powf(1.0 / qv) * (1.0 - 1.0 / qv).powf(1.0 - 1.0 / qv);
            println!("weak transform of (1/T) on (0,T], T = {t_end}");
            println!(
                "sup = {} at t = {} (closed form {})",
                format_sig15(w.weak_lhs),
                format_sig15(w.lhs_at),
                format_sig15(closed)
            );
            println!(
                "reciprocal extremal f(t) = 1/t gives {} at every t",
                format_sig15(weak_reciprocal_value(q)?)
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_sparse_check(
    alpha: f64,
    r: RArg,
    seed: u64,
    trials: usize,
) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let mode = match r {
        RArg::Tau => RMode::Tau,
        RArg::Inf => RMode::Infinity,
    };
    let d = devore_constants(alpha, mode)?;
    println!(
        "equivalence constants at alpha = {alpha}, r = {}: c = {} ± {}, C = {} ± {}{}",
        match r {
            RArg::Tau => "tau",
            RArg::Inf => "inf",
        },
        format_sig15(d.lower.value),
        err_str(d.lower.err),
        format_sig15(d.upper.value),
        err_str(d.upper.err),
        if d.upper_is_bound {
            " (upper value is a bound, not the proven minimal constant)"
        } else {
            ""
        }
    );
    let mut rng = Rng::new(seed);
    let mut pass = 0usize;
    for i in 0..trials {
        let len = 1 + rng.next_usize(60);
        let c = sampling::gaussian_coeffs(&mut rng, len);
        let rep = equivalence_check(&c, alpha, mode)?;
        if rep.holds() {
            pass += 1;
        } else {
            println!(
                "FAIL equivalence: seed={seed} trial={i} lorentz={} approx={}",
                rep.lorentz, rep.approx
            );
        }
    }
    println!("{pass}/{trials} random vectors satisfy the equivalence");
    if pass == trials {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn cmd_figure(
    tag: FigureTag,
    grid: usize,
    out: Option<PathBuf>,
) -> Result<ExitCode, Box<dyn std::error::Error>> {
    if grid < 2 {
        return Err("grid must be at least 2".into());
    }
    let path = out.unwrap_or_else(|| PathBuf::from(format!("{}.csv", tag.name())));

    let header: &str = match tag {
        FigureTag::Fig1C1 => "inv_q,c1",
        FigureTag::Fig4C1Weak => "inv_q,c1_weak",
        FigureTag::Fig5C1Weak => "inv_q,C1_weak",
        FigureTag::Fig6ContPair => "inv_q,c1_cont,C1_cont",
        FigureTag::Fig7WeakContPair => "inv_q,c1_weak_cont,C1_weak_cont",
        FigureTag::Fig8BoundsOverlay => "inv_q,copson,levin_stechkin_gao,stechkin_choice,improved",
    };

    let mut csv = String::new();
    csv.push_str(header);
    csv.push('\n');

    // a curve undefined at this q prints as nan, keeping rows comma-clean
    let cell = |v: Option<f64>| -> String {
        match v {
            Some(v) => format_sig15(v),
            None => "nan".to_string(),
        }
    };

    for i in 1..=grid {
        let inv_q = i as f64 / (grid + 1) as f64;
        let q = Exponent::try_new(1.0 / inv_q)?;
        let mut row = format_sig15(inv_q);
        match tag {
            FigureTag::Fig1C1 => {
                write!(row, ",{}", cell(Some(catalog::strong_lower(q)?.value)))?;
            }
            FigureTag::Fig4C1Weak => {
                let v = catalog::weak_lower(q).ok().map(|c| c.value);
                write!(row, ",{}", cell(v))?;
            }
            FigureTag::Fig5C1Weak => {
                write!(row, ",{}", cell(Some(catalog::weak_upper(q)?.value)))?;
            }
            FigureTag::Fig6ContPair => {
                let c = catalog::continuous(q)?;
                write!(
                    row,
                    ",{},{}",
                    cell(Some(c.strong_lower.value)),
                    cell(Some(c.strong_upper.value))
                )?;
            }
            FigureTag::Fig7WeakContPair => {
                let c = catalog::continuous(q)?;
                write!(
                    row,
                    ",{},{}",
                    cell(Some(c.weak_lower.value)),
                    cell(Some(c.weak_upper.value))
                )?;
            }
            FigureTag::Fig8BoundsOverlay => {
                write!(
                    row,
                    ",{},{},{},{}",
                    cell(Some(catalog::copson(q)?.value)),
                    cell(Some(catalog::levin_stechkin_gao(q)?.value)),
                    cell(Some(catalog::stechkin_choice(q)?.value)),
                    cell(catalog::improved(q).ok().map(|c| c.value)),
                )?;
            }
        }
        csv.push_str(&row);
        csv.push('\n');
    }

    std::fs::write(&path, csv.as_bytes())?;
    println!("wrote {} ({} rows)", path.display(), grid);
    Ok(ExitCode::SUCCESS)
}

fn print_report(report: &SuiteReport) {
    for check in &report.checks {
        if check.passed() {
            println!("ok   {} ({} trials)", check.name, check.trials);
        } else {
            println!("FAIL {}", check.name);
            for f in &check.failures {
                println!("     {f}");
            }
        }
    }
    let total = report.checks.len();
    let passed = report.checks.iter().filter(|c| c.passed()).count();
    println!(
        "suite {}: {passed}/{total} checks passed",
        report.suite.name()
    );
}

fn cmd_verify(
    suite: SuiteArg,
    seed: u64,
    trials: usize,
    inject_failure: bool,
) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let opts = VerifyOptions {
        seed,
        trials,
        inject_failure,
    };
    let reports = match suite {
        SuiteArg::All => run_all(&opts)?,
        SuiteArg::Strong => vec![run_suite(Suite::Strong, &opts)?],
        SuiteArg::Weak => vec![run_suite(Suite::Weak, &opts)?],
        SuiteArg::Continuous => vec![run_suite(Suite::Continuous, &opts)?],
        SuiteArg::Sparse => vec![run_suite(Suite::Sparse, &opts)?],
    };
    let mut all_passed = true;
    for report in &reports {
        print_report(report);
        all_passed &= report.passed();
    }
    if all_passed {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}
