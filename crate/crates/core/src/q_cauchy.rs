//! (q,s)-Cauchy matrices: the non-systematic parts of standard-form
//! generators of generalized Gabidulin codes.
//!
//! `X_{ij} = π_s(α_i β_j) + B_{ij}` with `α`, `β` of full q-rank,
//! `Tr(α_i β_j) = 0` and `B` over `F_q`.

use crate::error::{Error, Result, Violation};
use crate::ext_linalg::{self, moore_matrix, q_rank, BaseMatrix, ExtMatrix};
use crate::field_tower::{ExtElement, FieldTower};
use crate::gabidulin::{self, CodeHandle};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QCauchyParams {
    pub alpha: Vec<ExtElement>,
    pub beta: Vec<ExtElement>,
    pub b: BaseMatrix,
    pub s: i64,
    /// Element of nonzero trace fixing the right inverse `π_s` of `φ_s`.
    pub gamma: ExtElement,
}

impl QCauchyParams {
    /// Parameters with `B = 0` and the default `γ`.
    pub fn new(tower: &FieldTower, alpha: Vec<ExtElement>, beta: Vec<ExtElement>, s: i64) -> Self {
        let b = BaseMatrix::zeros(alpha.len(), beta.len());
        QCauchyParams {
            alpha,
            beta,
            b,
            s,
            gamma: tower.default_gamma(),
        }
    }

    pub fn k(&self) -> usize {
        self.alpha.len()
    }

    pub fn n(&self) -> usize {
        self.alpha.len() + self.beta.len()
    }

    /// All violated conditions; empty when the parameters are valid.
    pub fn validate(&self, tower: &FieldTower) -> Vec<Violation> {
        let mut out = Vec::new();
        let (k, r) = (self.alpha.len(), self.beta.len());
        if tower.check_s(self.s).is_err() {
            out.push(Violation::BadParameterS);
        }
        if tower.trace(self.gamma).is_zero() {
            out.push(Violation::BadGamma);
        }
        if k + r > tower.m() {
            out.push(Violation::LengthExceedsDegree { n: k + r, m: tower.m() });
        }
        let ra = q_rank(tower, &self.alpha);
        if ra != k {
            out.push(Violation::AlphaRank { expected: k, found: ra });
        }
        let rb = q_rank(tower, &self.beta);
        if rb != r {
            out.push(Violation::BetaRank { expected: r, found: rb });
        }
        if self.beta.first() != Some(&ExtElement::ONE) {
            out.push(Violation::BetaNotNormalized);
        }
        for (i, &a) in self.alpha.iter().enumerate() {
            for (j, &b) in self.beta.iter().enumerate() {
                if !tower.trace(tower.mul(a, b)).is_zero() {
                    out.push(Violation::NotTraceOrthogonal { i, j });
                }
            }
        }
        let bm = self.b.as_ext();
        if bm.rows() != k || bm.cols() != r {
            out.push(Violation::ShapeMismatch {
                rows: bm.rows(),
                cols: bm.cols(),
            });
        } else {
            for i in 0..k {
                for j in 0..r {
                    if !tower.is_in_base(bm.get(i, j)) {
                        out.push(Violation::BNotOverBase { i, j });
                    }
                }
            }
        }
        out
    }

    pub fn is_valid(&self, tower: &FieldTower) -> bool {
        self.validate(tower).is_empty()
    }

    /// Rescales to `β_1 = 1`; the products `α_i β_j`, and hence `X`, are unchanged.
    pub fn normalized(&self, tower: &FieldTower) -> Result<Self> {
        let b1 = *self.beta.first().ok_or_else(|| Error::InvalidDimensions("empty beta".into()))?;
        let inv = tower.inv(b1).ok_or(Error::ValidationFailed(vec![Violation::BetaRank {
            expected: self.beta.len(),
            found: q_rank(tower, &self.beta),
        }]))?;
        Ok(QCauchyParams {
            alpha: self.alpha.iter().map(|&a| tower.mul(a, b1)).collect(),
            beta: self.beta.iter().map(|&b| tower.mul(b, inv)).collect(),
            ..self.clone()
        })
    }

    /// `α^T β`, which equals `Φ_s(X)`.
    pub fn outer_product(&self, tower: &FieldTower) -> ExtMatrix {
        ExtMatrix::from_fn(self.alpha.len(), self.beta.len(), |i, j| {
            tower.mul(self.alpha[i], self.beta[j])
        })
    }
}

fn ensure_valid(tower: &FieldTower, params: &QCauchyParams) -> Result<()> {
    let v = params.validate(tower);
    if v.is_empty() {
        Ok(())
    } else {
        Err(Error::ValidationFailed(v))
    }
}

fn pi_matrix(tower: &FieldTower, params: &QCauchyParams) -> Result<ExtMatrix> {
    let prod = params.outer_product(tower);
    let entries = prod
        .entries()
        .iter()
        .map(|&x| tower.pi_s(x, params.s, params.gamma))
        .collect::<Result<Vec<_>>>()?;
    Ok(ExtMatrix::from_flat(prod.rows(), prod.cols(), entries))
}

/// `X_{ij} = π_s(α_i β_j) + B_{ij}`.
pub fn build(tower: &FieldTower, params: &QCauchyParams) -> Result<ExtMatrix> {
    ensure_valid(tower, params)?;
    pi_matrix(tower, params)?.add(tower, params.b.as_ext())
}

/// Reads `α`, `β` and `B` back from `X` (normalization `β_1 = 1`).
pub fn recover_params(tower: &FieldTower, x: &ExtMatrix, s: i64, gamma: ExtElement) -> Result<QCauchyParams> {
    tower.check_s(s)?;
    if tower.trace(gamma).is_zero() {
        return Err(Error::BadGamma);
    }
    if x.rows() == 0 || x.cols() == 0 {
        return Err(Error::InvalidDimensions("X must be nonempty".into()));
    }
    let phi = x.phi_s(tower, s)?;
    let alpha = phi.column(0);
    let inv_a1 = tower
        .inv(alpha[0])
        .ok_or_else(|| Error::NotQCauchy("phi_s(x_11) = 0".into()))?;
    let beta: Vec<ExtElement> = phi.row(0).iter().map(|&y| tower.mul(y, inv_a1)).collect();
    let mut params = QCauchyParams {
        alpha,
        beta,
        b: BaseMatrix::zeros(x.rows(), x.cols()),
        s,
        gamma,
    };
    let violations: Vec<Violation> = params
        .validate(tower)
        .into_iter()
        .filter(|v| !matches!(v, Violation::BNotOverBase { .. }))
        .collect();
    if !violations.is_empty() {
        let text = violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ");
        return Err(Error::NotQCauchy(text));
    }
    let b = x.sub(tower, &pi_matrix(tower, &params)?)?;
    params.b = BaseMatrix::new(tower, b).map_err(|_| Error::NotQCauchy("B is not over F_q".into()))?;
    if build(tower, &params)? != *x {
        return Err(Error::NotQCauchy("rebuilt matrix differs".into()));
    }
    Ok(params)
}

/// Evaluation points `g` with `g_1 = 1` such that `(I_k | X)` generates
/// `G_{k,s}(g)`, where `X = build(params)`.
///
/// Solves `Σ_{j≥2} σ^{-ℓ}(α_j) g_j = -σ^{-ℓ}(α_1)` for `ℓ = 1..k-1`, then sets
/// `g_{k+i} = Σ_j g_j X_{j,i}`.
pub fn recover_points(tower: &FieldTower, params: &QCauchyParams) -> Result<Vec<ExtElement>> {
    let x = build(tower, params)?;
    let (k, s) = (params.k(), params.s);
    let mut head = vec![ExtElement::ONE];
    if k > 1 {
        let system = ExtMatrix::from_fn(k - 1, k - 1, |l, j| {
            tower.frobenius(params.alpha[j + 1], -(l as i64 + 1) * s)
        });
        let rhs: Vec<ExtElement> = (0..k - 1)
            .map(|l| tower.neg(tower.frobenius(params.alpha[0], -(l as i64 + 1) * s)))
            .collect();
        head.extend(ext_linalg::solve(tower, &system, &rhs).ok_or(Error::SingularSystem)?);
    }
    let tail = x.left_mul_vec(tower, &head);
    let lhs = moore_matrix(tower, &head, k, s)?.mul(tower, &x)?;
    if lhs != moore_matrix(tower, &tail, k, s)? {
        return Err(Error::VerificationFailed("M(g_head) X != M(g_tail)".into()));
    }
    head.extend(tail);
    Ok(head)
}

/// `M_{k,s}(g_1..g_k)^{-1} M_{k,s}(g_{k+1}..g_n)`.
pub fn inverse_moore_factor(tower: &FieldTower, g: &[ExtElement], k: usize, s: i64) -> Result<ExtMatrix> {
    tower.check_s(s)?;
    if k == 0 || k >= g.len() {
        return Err(Error::InvalidDimensions(format!("need 0 < k < n, got k = {k}, n = {}", g.len())));
    }
    if q_rank(tower, g) != g.len() {
        return Err(Error::DependentPoints);
    }
    let head = moore_matrix(tower, &g[..k], k, s)?;
    let tail = moore_matrix(tower, &g[k..], k, s)?;
    let inv = ext_linalg::inverse(tower, &head).ok_or(Error::DependentPoints)?;
    inv.mul(tower, &tail)
}

/// A structured (q,s)-Cauchy matrix with the parameters that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuredCode {
    pub x: ExtMatrix,
    pub params: QCauchyParams,
    /// Start of the run of `m-1` consecutive powers of the primitive element
    /// with zero trace.
    pub run_start: u64,
    pub primitive: ExtElement,
}

fn structured_b(k: usize, r: usize, b: Option<BaseMatrix>, ok: fn(&ExtMatrix) -> bool, name: &'static str) -> Result<BaseMatrix> {
    match b {
        None => Ok(BaseMatrix::zeros(k, r)),
        Some(b) => {
            let m = b.as_ext();
            if m.rows() != k || m.cols() != r {
                return Err(Error::DimensionMismatch(format!(
                    "B is {}x{}, expected {k}x{r}",
                    m.rows(),
                    m.cols()
                )));
            }
            if !ok(m) {
                return Err(Error::NotStructured(name));
            }
            Ok(b)
        }
    }
}

fn structured(
    tower: &FieldTower,
    k: usize,
    n: usize,
    s: i64,
    b: Option<BaseMatrix>,
    toeplitz: bool,
) -> Result<StructuredCode> {
    tower.check_s(s)?;
    if k == 0 || k >= n || n > tower.m() {
        return Err(Error::InvalidDimensions(format!(
            "need 0 < k < n <= m, got k = {k}, n = {n}, m = {}",
            tower.m()
        )));
    }
    let r = n - k;
    let b = if toeplitz {
        structured_b(k, r, b, ExtMatrix::is_toeplitz, "Toeplitz")?
    } else {
        structured_b(k, r, b, ExtMatrix::is_hankel, "Hankel")?
    };
    let prim = tower.primitive();
    let run_start = tower.consecutive_trace_zero_start(prim)?;
    let power = |e: i64| tower.pow(prim, (e.rem_euclid(tower.size() as i64 - 1)) as u128);
    let l = run_start as i64;
    let (alpha, beta): (Vec<_>, Vec<_>) = if toeplitz {
        (
            (0..k as i64).map(|i| power(l + r as i64 - 1 + i)).collect(),
            (0..r as i64).map(|j| power(-j)).collect(),
        )
    } else {
        (
            (0..k as i64).map(|i| power(l + i)).collect(),
            (0..r as i64).map(power).collect(),
        )
    };
    let params = QCauchyParams {
        alpha,
        beta,
        b,
        s,
        gamma: tower.default_gamma(),
    };
    let x = build(tower, &params)?;
    Ok(StructuredCode {
        x,
        params,
        run_start,
        primitive: prim,
    })
}

/// A Gabidulin code whose `X` is a Hankel matrix; `b` must be Hankel.
pub fn build_hankel(tower: &FieldTower, k: usize, n: usize, s: i64, b: Option<BaseMatrix>) -> Result<StructuredCode> {
    structured(tower, k, n, s, b, false)
}

/// A Gabidulin code whose `X` is a Toeplitz matrix; `b` must be Toeplitz.
pub fn build_toeplitz(tower: &FieldTower, k: usize, n: usize, s: i64, b: Option<BaseMatrix>) -> Result<StructuredCode> {
    structured(tower, k, n, s, b, true)
}

/// Low-weight codeword of a code `(I_k | X)` with `X` circulant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CirculantWitness {
    pub codeword: Vec<ExtElement>,
    pub rank_weight: usize,
    /// `rank_weight < n - k + 1`.
    pub rules_out_mrd: bool,
}

/// Encodes the all-ones message: `(1, …, 1, c, …, c)` with `c` the common
/// column sum of `X`, so the weight is at most 2.
pub fn circulant_demo(tower: &FieldTower, x: &ExtMatrix) -> Result<CirculantWitness> {
    if !x.is_circulant() || x.rows() == 0 {
        return Err(Error::NotCirculant);
    }
    let k = x.rows();
    let code = CodeHandle::from_systematic(x);
    let codeword = code.generator().left_mul_vec(tower, &vec![ExtElement::ONE; k]);
    let rank_weight = gabidulin::rank_weight(tower, &codeword);
    if rank_weight > 2 {
        return Err(Error::VerificationFailed(format!("witness weight {rank_weight} > 2")));
    }
    Ok(CirculantWitness {
        codeword,
        rank_weight,
        rules_out_mrd: rank_weight < k + 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gabidulin::{recognize, GabidulinSpec, Verdict};

    fn f64_example() -> FieldTower {
        FieldTower::prime(2, &[1, 1, 0, 1, 1, 0, 1]).unwrap()
    }

    fn exps(t: &FieldTower, e: &[i64]) -> Vec<ExtElement> {
        e.iter().map(|&k| t.exp(k)).collect()
    }

    fn example_params(t: &FieldTower) -> QCauchyParams {
        let mut p = QCauchyParams::new(t, exps(t, &[14, 15, 16]), exps(t, &[0, 1, 2]), 1);
        p.gamma = t.exp(3);
        p
    }

    #[test]
    fn example_build_matches_printed() {
        let t = f64_example();
        let p = example_params(&t);
        assert!(p.is_valid(&t));
        assert_eq!(t.default_gamma(), t.exp(3));
        let x = build(&t, &p).unwrap();
        let expected = [[57, 7, 13], [7, 13, 37], [13, 37, 36]];
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(x.get(i, j), t.exp(expected[i][j]));
            }
        }
        assert_eq!(x.phi_s(&t, 1).unwrap(), p.outer_product(&t));
    }

    #[test]
    fn example_recovery() {
        let t = f64_example();
        let p = example_params(&t);
        let x = build(&t, &p).unwrap();
        assert_eq!(recover_params(&t, &x, 1, t.exp(3)).unwrap(), p);
        let g = recover_points(&t, &p).unwrap();
        assert_eq!(g[0], t.one());
        assert_eq!(g[1], t.exp(45));
        assert_eq!(&g[3..], &exps(&t, &[46, 14, 28])[..]);
        assert_eq!(inverse_moore_factor(&t, &g, 3, 1).unwrap(), x);
    }

    #[test]
    fn validate_reports_violations() {
        let t = f64_example();
        let mut p = example_params(&t);
        p.alpha[1] = p.alpha[0];
        assert!(p
            .validate(&t)
            .contains(&Violation::AlphaRank { expected: 3, found: 2 }));
        let mut p = example_params(&t);
        // Tr(a^3) = 1, so Tr(a^14 * a^{-11}) != 0
        p.beta[2] = t.exp(-11);
        assert!(p
            .validate(&t)
            .contains(&Violation::NotTraceOrthogonal { i: 0, j: 2 }));
        let mut p = example_params(&t);
        p.s = 2;
        assert!(p.validate(&t).contains(&Violation::BadParameterS));
    }

    #[test]
    fn random_x_is_not_cauchy() {
        let t = f64_example();
        let x = ExtMatrix::from_fn(2, 2, |i, j| t.exp((5 * i + 7 * j + 1) as i64));
        assert!(matches!(
            recover_params(&t, &x, 1, t.default_gamma()),
            Err(Error::NotQCauchy(_))
        ));
    }

    #[test]
    fn k1_points() {
        let t = FieldTower::prime(2, &[1, 1, 0, 1]).unwrap();
        // alpha in ker(Tr), beta = (1, b) with Tr(alpha b) = 0
        let alpha = t.elements().skip(1).find(|&a| t.trace(a).is_zero()).unwrap();
        let beta: Vec<ExtElement> = t
            .elements()
            .filter(|&b| t.trace(t.mul(alpha, b)).is_zero())
            .filter(|&b| !b.is_zero())
            .collect();
        let p = QCauchyParams::new(&t, vec![alpha], vec![t.one(), beta.into_iter().find(|&b| b != t.one()).unwrap()], 1);
        assert!(p.is_valid(&t));
        let g = recover_points(&t, &p).unwrap();
        let x = build(&t, &p).unwrap();
        assert_eq!(&g[1..], x.row(0));
    }

    #[test]
    fn structured_examples() {
        let t = f64_example();
        let h = build_hankel(&t, 3, 6, 1, None).unwrap();
        assert_eq!(h.run_start, 14);
        assert_eq!(h.x, build(&t, &example_params(&t)).unwrap());
        let tp = build_toeplitz(&t, 3, 6, 1, None).unwrap();
        assert!(tp.x.is_toeplitz());
        for (x, s) in [(&h.x, 1), (&tp.x, 1)] {
            let g = ExtMatrix::identity(3).hstack(x).unwrap();
            assert_eq!(recognize(&t, &g, s).unwrap().verdict, Verdict::Gabidulin);
        }
    }

    #[test]
    fn structured_b_must_match() {
        let t = f64_example();
        let b = BaseMatrix::new(&t, ExtMatrix::from_fn(2, 2, |i, _| t.base_element(i as u32))).unwrap();
        assert_eq!(build_hankel(&t, 2, 4, 1, Some(b)), Err(Error::NotStructured("Hankel")));
        let b = BaseMatrix::new(&t, ExtMatrix::from_fn(2, 2, |i, j| t.base_element((i + j == 1) as u32))).unwrap();
        let h = build_hankel(&t, 2, 4, 1, Some(b)).unwrap();
        assert!(h.x.is_hankel());
    }

    #[test]
    fn inverse_moore_matches_rref() {
        let t = FieldTower::prime(2, &[1, 1, 0, 0, 1]).unwrap();
        let g = exps(&t, &[0, 1, 2, 3]);
        for k in 1..4 {
            for s in [1, 3] {
                let spec = GabidulinSpec::new(&t, g.clone(), k, s).unwrap();
                let code = gabidulin::gabidulin_code(&t, &spec);
                let x = inverse_moore_factor(&t, &g, k, s).unwrap();
                assert_eq!(code.standard_x(), Some(&x));
                let p = recover_params(&t, &x, s, t.default_gamma()).unwrap();
                let back = recover_points(&t, &p).unwrap();
                let inv = t.inv(g[0]).unwrap();
                let scaled: Vec<_> = g.iter().map(|&y| t.mul(y, inv)).collect();
                assert_eq!(back, scaled);
            }
        }
    }

    #[test]
    fn circulant_all_equal() {
        let t = FieldTower::prime(2, &[1, 1, 0, 0, 1]).unwrap();
        let x = ExtMatrix::from_fn(2, 2, |_, _| t.exp(3));
        let w = circulant_demo(&t, &x).unwrap();
        assert!(w.rank_weight <= 2);
        assert!(w.rules_out_mrd);
        let not_circ = ExtMatrix::from_fn(2, 2, |i, j| t.exp((i * 2 + j) as i64));
        assert_eq!(circulant_demo(&t, &not_circ), Err(Error::NotCirculant));
    }
}
