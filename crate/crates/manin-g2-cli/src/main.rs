//! Command-line front end: single-curve verification, degree sequences,
//! point counting, curve sweeps, and the supersingular demo.
//!
//! Exit codes follow the standard tool contract: 0 on success with all
//! checks passing, 1 when a verification check fails, 2 on usage,
//! parse, or validation errors (non-prime characteristic, reducible
//! modulus, non-squarefree f, malformed input).

use clap::{Parser, Subcommand};
use manin_g2::counting::{count_data, sweep, SamplePolicy, SweepOutcome, VerificationReport};
use manin_g2::counting::verify_curve;
use manin_g2::curve::CurveParams;
use manin_g2::field::FieldSpec;
use manin_g2::manin::{DeltaSequence, PsiFamily};
use manin_g2::parse::{parse_curve_spec, parse_n_range};
use manin_g2::report::{DeltaEntryJson, ReportJson};

/// Curve specification syntax, shared by several subcommands.
const SPEC_HELP: &str = "curve specification \"p=<prime>[,k=<deg>][,mod=<poly>];f=[a0,a1,a2,a3,a4]\"";

#[derive(Parser)]
#[command(
    name = "manin-g2",
    version,
    about = "Genus-2 Jacobian arithmetic over the curve's own function field: \
             degree sequences, point counts, and identity verification"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run every identity check on one curve (exit 0 only if all pass)
    Verify {
        #[arg(help = SPEC_HELP)]
        spec: String,
        /// Member window MIN:MAX for the degree sequence
        #[arg(long, default_value = "-6:6", allow_hyphen_values = true)]
        n_range: String,
        /// Emit the report as JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Print degree values: one member, or the whole window
    Delta {
        #[arg(help = SPEC_HELP)]
        spec: String,
        /// Single member index n; omit to print the whole window
        #[arg(allow_negative_numbers = true)]
        n: Option<i64>,
        /// Member window MIN:MAX used when n is omitted
        #[arg(long, default_value = "-6:6", allow_hyphen_values = true)]
        n_range: String,
        #[arg(long)]
        json: bool,
    },
    /// Count points over F_q and F_{q^2}; derive the Jacobian order and trace
    Count {
        #[arg(help = SPEC_HELP)]
        spec: String,
        #[arg(long)]
        json: bool,
    },
    /// Verify monic squarefree quintics over F_{p^k}: exhaustively for
    /// q <= 5, otherwise a seeded random sample
    Sweep {
        /// Field characteristic (an odd prime)
        p: u64,
        /// Extension degree
        #[arg(default_value_t = 1)]
        k: usize,
        /// Sample size; forces sampling even for tiny fields
        #[arg(long)]
        sample: Option<usize>,
        /// Seed for the curve sample
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Refuse fields larger than this
        #[arg(long, default_value_t = 10_000)]
        max_q: u64,
        /// Member window MIN:MAX per curve
        #[arg(long, default_value = "-6:6", allow_hyphen_values = true)]
        n_range: String,
        #[arg(long)]
        json: bool,
    },
    /// Reproduce the supersingular example: over F_49 with f = x^5 + 5x,
    /// the Frobenius class equals -7 times the canonical point class
    DemoSupersingular,
}

fn main() -> std::process::ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => std::process::ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::ExitCode::from(2)
        }
    }
}

fn run(cmd: Cmd) -> Result<u8, manin_g2::Error> {
    match cmd {
        Cmd::Verify { spec, n_range, json } => {
            let curve = parse_curve_spec(&spec)?;
            let window = parse_n_range(&n_range)?;
            let report = verify_curve(&curve, window)?;
            if json {
                println!("{}", ReportJson::from(&report).render());
            } else {
                print_report(&report, window);
            }
            Ok(if report.passed() { 0 } else { 1 })
        }
        Cmd::Delta { spec, n, n_range, json } => {
            let curve = parse_curve_spec(&spec)?;
            let seq = DeltaSequence::new(&curve);
            let values = match n {
                Some(n) => vec![seq.delta(n)?],
                None => {
                    let (lo, hi) = parse_n_range(&n_range)?;
                    seq.delta_range(lo, hi)?
                }
            };
            let entries: Vec<DeltaEntryJson> = values
                .iter()
                .map(|dv| DeltaEntryJson {
                    n: dv.n,
                    value: dv.value,
                    path: dv.path.to_string(),
                })
                .collect();
            if json {
                let text = match n {
                    Some(_) => serde_json::to_string_pretty(&entries[0]),
                    None => serde_json::to_string_pretty(&entries),
                }
                .expect("serialization cannot fail");
                println!("{text}");
            } else {
                for e in &entries {
                    println!("delta_{} = {}  [{}]", e.n, e.value, e.path);
                }
            }
            Ok(0)
        }
        Cmd::Count { spec, json } => {
            let curve = parse_curve_spec(&spec)?;
            let data = count_data(&curve)?;
            if json {
                let obj = serde_json::json!({
                    "n_q": data.n_q,
                    "n_q2": data.n_q2,
                    "n_jac": data.n_jac,
                    "T": data.trace,
                });
                println!("{}", serde_json::to_string_pretty(&obj).expect("serialization"));
            } else {
                println!("curve: {curve}");
                println!("#H(F_q)   = {}", data.n_q);
                println!("#H(F_q^2) = {}", data.n_q2);
                println!("#J(F_q)   = {}", data.n_jac);
                println!("T         = {}", data.trace);
            }
            Ok(0)
        }
        Cmd::Sweep { p, k, sample, seed, max_q, n_range, json } => {
            let field = FieldSpec::new(p, k, None)?;
            if field.order() > max_q {
                return Err(manin_g2::Error::FieldTooLarge(
                    field.order() as u128,
                    max_q as u128,
                ));
            }
            let policy = match sample {
                Some(size) => SamplePolicy::Sample { size, seed },
                None if field.order() <= 5 => SamplePolicy::Exhaustive,
                None => SamplePolicy::Sample { size: 50, seed },
            };
            let window = parse_n_range(&n_range)?;
            let outcome = sweep(&field, &policy, window)?;
            if json {
                print_sweep_json(&outcome);
            } else {
                print_sweep(&outcome);
            }
            Ok(if outcome.failures.is_empty() { 0 } else { 1 })
        }
        Cmd::DemoSupersingular => demo_supersingular(),
    }
}

fn print_report(report: &VerificationReport, window: (i64, i64)) {
    println!("curve: {}", report.curve);
    println!(
        "counts: #H(F_q) = {}, #H(F_q^2) = {}, #J = {}, T = {}",
        report.counts.n_q, report.counts.n_q2, report.counts.n_jac, report.counts.trace
    );
    println!("delta (n in {}:{}):", window.0, window.1);
    for dv in &report.deltas {
        println!("  delta_{} = {}  [{}]", dv.n, dv.value, dv.path);
    }
    let c = &report.checks;
    let named = [
        ("basic_identity", c.basic_identity),
        ("closed_form", c.closed_form),
        ("delta_minus1", c.delta_minus1),
        ("delta_0", c.delta_0),
        ("delta_1", c.delta_1),
        ("gcd_degree", c.gcd_degree),
        ("twist_sum", c.twist_sum),
        ("order_annihilation", c.order_annihilation),
    ];
    let line: Vec<String> = named
        .iter()
        .map(|(name, ok)| format!("{name}={}", if *ok { "ok" } else { "FAIL" }))
        .collect();
    println!("checks: {}", line.join(" "));
    println!(
        "hasse-weil: T^2 - 16q = {} ({})",
        report.hasse_weil.discriminant,
        if report.hasse_weil.holds { "holds" } else { "VIOLATED" }
    );
    match report.special_case {
        Some(sc) => println!("special case: constant member at n = {}", sc.n),
        None => println!("special case: none"),
    }
    for line in &report.failures {
        println!("failure: {line}");
    }
    println!("result: {}", if report.passed() { "PASS" } else { "FAIL" });
}

fn print_sweep(outcome: &SweepOutcome) {
    println!(
        "sweep over F_{}: tested {}, passed {}, special cases {}, failures {}",
        outcome.q,
        outcome.tested,
        outcome.passed,
        outcome.special_cases,
        outcome.failures.len()
    );
    for (curve, lines) in &outcome.failures {
        println!("FAIL {curve}");
        for line in lines {
            println!("  {line}");
        }
    }
}

fn print_sweep_json(outcome: &SweepOutcome) {
    let failures: Vec<serde_json::Value> = outcome
        .failures
        .iter()
        .map(|(curve, lines)| serde_json::json!({"curve": curve, "failures": lines}))
        .collect();
    let obj = serde_json::json!({
        "q": outcome.q,
        "tested": outcome.tested,
        "passed": outcome.passed,
        "special_cases": outcome.special_cases,
        "failures": failures,
    });
    println!("{}", serde_json::to_string_pretty(&obj).expect("serialization"));
}

/// Over F_49 with f = x^5 + 5x the curve is supersingular: the Frobenius
/// class Phi equals -7 times the point class iota, so Phi + 7*iota reduces
/// to the zero class (1, 0).
fn demo_supersingular() -> Result<u8, manin_g2::Error> {
    let f49 = FieldSpec::new(7, 2, None)?;
    let curve = CurveParams::from_ints(&f49, [0, 5, 0, 0, 0])?;
    let fam = PsiFamily::new(&curve);
    let phi = fam.phi();
    let minus7 = fam.jacobian().scalar_mul(-7, fam.iota());
    println!("curve: {curve}   (q = 49 = 7^2)");
    println!();
    println!("Phi      = {phi}");
    println!();
    println!("-7*iota  = {minus7}");
    println!();
    let equal = *phi == minus7;
    println!("Phi == -7*iota: {equal}");
    let sum = fam.psi(7);
    println!("Phi + 7*iota = {sum}");
    let zero = sum.is_zero();
    println!("zero class: {zero}");
    Ok(if equal && zero { 0 } else { 1 })
}
