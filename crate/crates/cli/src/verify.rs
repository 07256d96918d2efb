use std::path::PathBuf;

use anyhow::Result;
use clap::{Args, ValueEnum};
use gabidulin_core::verify::{self, Check, Report};
use gabidulin_core::FieldTower;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::load::{self, tower_from_size};
use crate::{CmdResult, FieldArgs, Format};

const WORKED_EXAMPLES_GOLDEN: &str = include_str!("../goldens/worked_examples.txt");

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Exhaustive code count against the closed formula.
    Counting,
    /// Fast criterion against MRD brute force, exhaustive and random.
    CriteriaEquivalence,
    /// The two worked examples, diffed against the shipped golden file.
    Examples,
    /// Trace, phi_s, dual bases, trace-orthogonal spaces.
    FieldTheory,
    /// Distance and duality of every normalized Gabidulin code.
    Mrd,
    /// Hankel and Toeplitz constructions.
    Structured,
    /// Circulant X never gives an MRD code.
    Circulant,
    /// Parameter and point recovery round trips.
    RoundTrip,
    /// Every suite with default sizes.
    All,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    suite: Suite,
    #[command(flatten)]
    field: FieldArgs,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    s: Option<i64>,
    /// Cap on enumerated items (codewords, T_q(k, n) elements, vectors).
    #[arg(long, default_value_t = 1 << 24)]
    cap: u128,
    #[arg(long, default_value_t = 2024)]
    seed: u64,
    /// Number of random samples (suite-specific default).
    #[arg(long)]
    samples: Option<usize>,
    /// Write the computed worked-example transcript here.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn towers_or(args: &VerifyArgs, defaults: &[(u32, usize, usize)]) -> Result<Vec<FieldTower>> {
    match args.field.try_resolve(None)? {
        Some(t) => Ok(vec![t]),
        None => defaults
            .iter()
            .map(|&(p, e, m)| FieldTower::search(p, e, m).map_err(Into::into))
            .collect(),
    }
}

fn tower_or(args: &VerifyArgs, q: u32, m: usize) -> Result<FieldTower> {
    match args.field.try_resolve(None)? {
        Some(t) => Ok(t),
        None => tower_from_size(q, m),
    }
}

fn s_values(args: &VerifyArgs, tower: &FieldTower) -> Vec<i64> {
    args.s.map(|s| vec![s]).unwrap_or_else(|| verify::admissible_s(tower))
}

fn examples(args: &VerifyArgs) -> Result<Report> {
    let actual = verify::worked_examples()?;
    if let Some(dir) = &args.out {
        load::write(dir, "worked_examples.txt", &actual)?;
    }
    let mut report = Report::new("examples");
    let expected: Vec<&str> = WORKED_EXAMPLES_GOLDEN.lines().collect();
    let got: Vec<&str> = actual.lines().collect();
    let first_diff = expected
        .iter()
        .zip(&got)
        .position(|(a, b)| a != b)
        .or_else(|| (expected.len() != got.len()).then(|| expected.len().min(got.len())));
    let mut check = Check::new("golden_identical", actual == WORKED_EXAMPLES_GOLDEN).field("lines", got.len());
    if let Some(i) = first_diff {
        check = check
            .field("first_diff_line", i + 1)
            .field("expected", format!("{:?}", expected.get(i).unwrap_or(&"<eof>")))
            .field("found", format!("{:?}", got.get(i).unwrap_or(&"<eof>")));
    }
    report.push(check);
    Ok(report)
}

fn run_suite(suite: Suite, args: &VerifyArgs) -> Result<Vec<Report>> {
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let small = [(2, 1, 2), (2, 1, 3), (2, 1, 4), (2, 1, 6), (3, 1, 4), (3, 1, 6), (2, 2, 3), (3, 2, 2)];
    Ok(match suite {
        Suite::Counting => {
            let t = tower_or(args, 2, 3)?;
            let n = args.n.unwrap_or(t.m());
            vec![verify::counting(&t, n, args.k.unwrap_or(1), args.s.unwrap_or(1), args.cap)?]
        }
        Suite::CriteriaEquivalence => {
            let t = tower_or(args, 2, 3)?;
            let n = args.n.unwrap_or(t.m().min(3));
            let ks: Vec<usize> = args.k.map(|k| vec![k]).unwrap_or_else(|| (1..n).collect());
            let mut out = Vec::new();
            for k in ks {
                for s in s_values(args, &t) {
                    out.push(verify::criteria_exhaustive(&t, n, k, s, args.cap)?);
                }
            }
            let random_towers = towers_or(args, &[(2, 1, 4), (2, 1, 6), (3, 1, 4), (3, 1, 6)])?;
            if random_towers.iter().all(|t| t.m() >= 3) {
                out.push(verify::criteria_random(
                    &random_towers,
                    args.samples.unwrap_or(1000),
                    &mut rng,
                    args.cap,
                )?);
            }
            out
        }
        Suite::Examples => vec![examples(args)?],
        Suite::FieldTheory => towers_or(args, &small)?
            .iter()
            .map(|t| verify::field_theory(t, args.samples.unwrap_or(500), &mut rng))
            .collect::<Result<_, _>>()?,
        Suite::Mrd => {
            let t = tower_or(args, 2, 4)?;
            let n = args.n.unwrap_or(t.m());
            let k = args.k.unwrap_or(n / 2);
            s_values(args, &t)
                .into_iter()
                .map(|s| verify::mrd_suite(&t, n, k, s, args.cap))
                .collect::<Result<_, _>>()?
        }
        Suite::Structured => towers_or(args, &[(2, 1, 4), (2, 1, 6), (3, 1, 4), (3, 1, 6)])?
            .iter()
            .map(verify::structured_suite)
            .collect::<Result<_, _>>()?,
        Suite::Circulant => {
            let t = tower_or(args, 2, 4)?;
            let n = args.n.unwrap_or(4);
            vec![verify::circulant_suite(&t, n, args.samples.unwrap_or(100), &mut rng, args.cap)?]
        }
        Suite::RoundTrip => {
            let towers = towers_or(args, &small)?;
            vec![verify::round_trip(&towers, args.samples.unwrap_or(200), &mut rng)?]
        }
        Suite::All => {
            let mut out = Vec::new();
            for s in [
                Suite::Counting,
                Suite::CriteriaEquivalence,
                Suite::Examples,
                Suite::FieldTheory,
                Suite::Mrd,
                Suite::Structured,
                Suite::Circulant,
                Suite::RoundTrip,
            ] {
                out.extend(run_suite(s, args)?);
            }
            out
        }
    })
}

pub fn run(args: &VerifyArgs, format: Format) -> CmdResult {
    if args.suite == Suite::All && (args.field.try_resolve(None)?.is_some() || args.n.is_some() || args.k.is_some()) {
        return Err(anyhow::anyhow!("`verify all` uses default sizes; drop --field/--q/--m/--n/--k").into());
    }
    let reports = run_suite(args.suite, args)?;
    let mut ok = true;
    for report in &reports {
        for check in &report.checks {
            ok &= check.pass;
            match format {
                Format::Records => println!("suite={} {}", report.suite, check.record()),
                Format::Human => {
                    let fields: Vec<String> = check.fields.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    println!(
                        "[{}] {}/{}: {}",
                        if check.pass { "pass" } else { "FAIL" },
                        report.suite,
                        check.name,
                        fields.join(" ")
                    );
                }
            }
        }
    }
    println!("result={}", if ok { "pass" } else { "fail" });
    Ok(ok)
}
