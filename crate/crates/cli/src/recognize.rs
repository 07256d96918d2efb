use std::path::Path;

use gabidulin_core::gabidulin::{self, Recognition};
use gabidulin_core::text;
use gabidulin_core::{Error, FieldTower};

use crate::{load, CmdResult, Failure, FieldArgs, Format};

fn map_error(e: Error) -> Failure {
    match e {
        Error::RankDeficient { rank, rows } => Failure {
            code: 1,
            message: format!("error=rank_deficient rank={rank} rows={rows}"),
        },
        Error::InvalidDimensions(msg) => Failure {
            code: 2,
            message: format!("usage error: {msg}"),
        },
        other => Failure {
            code: 1,
            message: format!("error: {other}"),
        },
    }
}

pub fn record(r: &Recognition) -> String {
    let mut out = format!("verdict={} s={} k={} n={}", r.verdict.as_str(), r.s, r.k, r.n);
    if let Some(c) = &r.criterion {
        out.push_str(&format!(
            " rank_phi={} row_q_rank={} col_q_rank={}",
            c.rank_phi, c.row_q_rank, c.col_q_rank
        ));
    }
    out.push_str(&format!(" ops={}", r.ops));
    out
}

pub fn human(tower: &FieldTower, r: &Recognition) -> String {
    let mut out = format!("s = {}: {}\n", r.s, r.verdict.as_str().replace('_', " "));
    out.push_str(&format!("  k = {}, n = {}\n", r.k, r.n));
    match (&r.criterion, &r.x) {
        (Some(c), Some(x)) => {
            out.push_str(&format!(
                "  rank Phi_s(X) = {}, q-rank of first row = {} (want {}), of first column = {} (want {})\n",
                c.rank_phi,
                c.row_q_rank,
                r.n - r.k,
                c.col_q_rank,
                r.k
            ));
            out.push_str(&format!("  field operations: {}\n", r.ops));
            out.push_str("  X:\n");
            for line in text::render_matrix(tower, x).lines().skip(1) {
                out.push_str(&format!("    {line}\n"));
            }
        }
        _ => out.push_str(&format!(
            "  reduced form is not (I_k | X), so the code is not MRD\n  field operations: {}\n",
            r.ops
        )),
    }
    out
}

pub fn run(field: &FieldArgs, generator: &Path, s: Option<i64>, all_s: bool, format: Format) -> CmdResult {
    let tower = field.resolve(None)?;
    let text_in = load::read(generator)?;
    let g = text::parse_matrix(&tower, &text_in).map_err(|e| Failure {
        code: 1,
        message: format!("error: {}: {e}", generator.display()),
    })?;
    let results = if all_s {
        gabidulin::recognize_all_s(&tower, &g)
    } else {
        gabidulin::recognize(&tower, &g, s.expect("clap requires s or --all-s")).map(|r| vec![r])
    }
    .map_err(map_error)?;
    for r in &results {
        match format {
            Format::Records => println!("{}", record(r)),
            Format::Human => print!("{}", human(&tower, r)),
        }
    }
    Ok(true)
}
