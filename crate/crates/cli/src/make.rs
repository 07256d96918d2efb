use std::path::{Path, PathBuf};

use anyhow::{anyhow, Context};
use clap::Args;
use gabidulin_core::gabidulin::{self, GabidulinSpec, Verdict};
use gabidulin_core::q_cauchy::{self, QCauchyParams};
use gabidulin_core::text::{self, FieldSpec, KeyValues};
use gabidulin_core::verify::Check;
use gabidulin_core::{BaseMatrix, ExtElement, ExtMatrix, FieldTower};

use crate::{load, CmdResult, Failure, FieldArgs, Format, MakeCommand};

#[derive(Args, Debug)]
pub struct StructuredArgs {
    #[command(flatten)]
    field: FieldArgs,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    s: i64,
    /// Matrix file for B (entries in F_q, same structure as X).
    #[arg(long)]
    b: Option<PathBuf>,
    /// Output directory.
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

#[derive(Args, Debug)]
pub struct FromFileArgs {
    #[command(flatten)]
    field: FieldArgs,
    /// Code spec or parameter file.
    input: PathBuf,
    /// Output directory.
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

struct Made {
    tower: FieldTower,
    x: ExtMatrix,
    params: QCauchyParams,
    g: Vec<ExtElement>,
    header: Vec<String>,
    checks: Vec<Check>,
}

fn structured(args: &StructuredArgs, toeplitz: bool) -> anyhow::Result<Made> {
    let tower = args.field.resolve(None)?;
    let b = match &args.b {
        Some(path) => {
            let m = text::parse_matrix(&tower, &load::read(path)?).with_context(|| format!("parsing {}", path.display()))?;
            Some(BaseMatrix::new(&tower, m).map_err(|e| anyhow!("{}: {e}", path.display()))?)
        }
        None => None,
    };
    let out = if toeplitz {
        q_cauchy::build_toeplitz(&tower, args.k, args.n, args.s, b)?
    } else {
        q_cauchy::build_hankel(&tower, args.k, args.n, args.s, b)?
    };
    let g = q_cauchy::recover_points(&tower, &out.params)?;
    let (name, shape) = if toeplitz {
        ("toeplitz", out.x.is_toeplitz())
    } else {
        ("hankel", out.x.is_hankel())
    };
    Ok(Made {
        header: vec![format!(
            "run_start={} primitive={}",
            out.run_start,
            text::render_element(&tower, out.primitive)
        )],
        checks: vec![Check::new(name, shape)],
        x: out.x,
        params: out.params,
        g,
        tower,
    })
}

fn from_points(args: &FromFileArgs) -> anyhow::Result<Made> {
    let kv = KeyValues::parse(&load::read(&args.input)?)?;
    let tower = args.field.resolve(Some((&kv, &load::parent_dir(&args.input))))?;
    let spec = text::parse_code_spec(&tower, &kv).with_context(|| format!("parsing {}", args.input.display()))?;
    let x = q_cauchy::inverse_moore_factor(&tower, spec.g(), spec.k(), spec.s())?;
    let params = q_cauchy::recover_params(&tower, &x, spec.s(), tower.default_gamma())?;
    let code = gabidulin::gabidulin_code(&tower, &spec);
    let recovered = q_cauchy::recover_points(&tower, &params)?;
    let inv = tower.inv(spec.g()[0]).ok_or_else(|| anyhow!("g_1 = 0"))?;
    let normalized: Vec<ExtElement> = spec.g().iter().map(|&v| tower.mul(v, inv)).collect();
    Ok(Made {
        header: Vec::new(),
        checks: vec![
            Check::new("rref_route", code.standard_x() == Some(&x)),
            Check::new("points_recovered_up_to_scalar", recovered == normalized),
        ],
        x,
        params,
        g: spec.g().to_vec(),
        tower,
    })
}

fn from_params(args: &FromFileArgs) -> Result<Made, Failure> {
    let kv = KeyValues::parse(&load::read(&args.input)?).map_err(anyhow::Error::from)?;
    let tower = args.field.resolve(Some((&kv, &load::parent_dir(&args.input))))?;
    let mut params = text::parse_params(&tower, &kv).map_err(anyhow::Error::from)?;
    let mut header = Vec::new();
    if params.beta.first().is_some_and(|&b| b != ExtElement::ONE) {
        params = params.normalized(&tower).map_err(anyhow::Error::from)?;
        header.push("normalized=beta_1".to_string());
    }
    let violations = params.validate(&tower);
    if !violations.is_empty() {
        let lines: Vec<String> = violations.iter().map(|v| format!("violation: {v}")).collect();
        return Err(Failure {
            code: 1,
            message: format!("error=invalid_params\n{}", lines.join("\n")),
        });
    }
    let x = q_cauchy::build(&tower, &params).map_err(anyhow::Error::from)?;
    let g = q_cauchy::recover_points(&tower, &params).map_err(anyhow::Error::from)?;
    Ok(Made {
        header,
        checks: Vec::new(),
        x,
        params,
        g,
        tower,
    })
}

fn finish(made: Made, field_file: Option<&Path>, out: &Path, format: Format) -> CmdResult {
    let Made {
        tower,
        x,
        params,
        g,
        header,
        mut checks,
    } = made;
    let (k, n, s) = (params.k(), params.n(), params.s);
    let generator = ExtMatrix::identity(k).hstack(&x).map_err(anyhow::Error::from)?;
    let verdict = gabidulin::recognize(&tower, &generator, s).map_err(anyhow::Error::from)?.verdict;
    checks.insert(0, Check::new("recognize", verdict == Verdict::Gabidulin).field("verdict", verdict.as_str()));
    checks.push(Check::new(
        "phi_is_outer_product",
        x.phi_s(&tower, s).map_err(anyhow::Error::from)? == params.outer_product(&tower),
    ));
    checks.push(Check::new(
        "recover_params",
        q_cauchy::recover_params(&tower, &x, s, params.gamma).as_ref() == Ok(&params),
    ));
    checks.push(Check::new(
        "inverse_moore",
        q_cauchy::inverse_moore_factor(&tower, &g, k, s).as_ref() == Ok(&x),
    ));

    let field_text = match field_file {
        Some(p) => load::read(p)?,
        None => FieldSpec::from_tower(&tower).render(),
    };
    let spec = GabidulinSpec::new(&tower, g, k, s).map_err(anyhow::Error::from)?;
    let written = [
        load::write(out, "field.txt", &field_text)?,
        load::write(out, "X.txt", &text::render_matrix(&tower, &x))?,
        load::write(out, "params.txt", &text::render_params(&tower, &params, Some("field.txt")))?,
        load::write(out, "g.txt", &text::render_code_spec(&tower, &spec, Some("field.txt")))?,
    ];

    let mut transcript = vec![format!("field={}^{} k={k} n={n} s={s}", tower.q(), tower.m())];
    transcript.extend(header);
    transcript.extend(checks.iter().map(Check::record));
    let ok = checks.iter().all(|c| c.pass);
    transcript.push(format!("result={}", if ok { "pass" } else { "fail" }));
    let mut body = transcript.join("\n");
    body.push('\n');
    let transcript_path = load::write(out, "transcript.txt", &body)?;

    match format {
        Format::Records => print!("{body}"),
        Format::Human => {
            println!("X =");
            print!("{}", text::render_matrix(&tower, &x));
            println!("g = {}", text::render_vector(&tower, spec.g()));
            print!("{body}");
            for p in written.iter().chain(std::iter::once(&transcript_path)) {
                println!("wrote {}", p.display());
            }
        }
    }
    Ok(ok)
}

pub fn run(cmd: MakeCommand, format: Format) -> CmdResult {
    match cmd {
        MakeCommand::Hankel(a) => finish(structured(&a, false)?, a.field.field_path(), &a.out, format),
        MakeCommand::Toeplitz(a) => finish(structured(&a, true)?, a.field.field_path(), &a.out, format),
        MakeCommand::FromPoints(a) => finish(from_points(&a)?, a.field.field_path(), &a.out, format),
        MakeCommand::FromParams(a) => finish(from_params(&a)?, a.field.field_path(), &a.out, format),
    }
}
