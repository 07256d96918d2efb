//! Self-check suites shared by the command-line `verify` command and the
//! acceptance tests. Every suite is deterministic given its tower, sizes
//! and seed.

use std::collections::{BTreeSet, HashSet};
use std::fmt::Write as _;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::ext_linalg::{self, q_rank, rank, BaseMatrix, ExtMatrix};
use crate::field_tower::{ExtElement, FieldTower, SubspaceFq};
use crate::gabidulin::{self, CodeHandle, GabidulinSpec, Verdict};
use crate::q_cauchy::{self, QCauchyParams};
use crate::text;

/// One checked property with its measured values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub fields: Vec<(String, String)>,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool) -> Self {
        Check {
            name: name.into(),
            pass,
            fields: Vec::new(),
        }
    }

    pub fn field(mut self, key: &str, value: impl ToString) -> Self {
        self.fields.push((key.to_string(), value.to_string()));
        self
    }

    /// `key=value … pass|fail`.
    pub fn record(&self) -> String {
        let mut out = format!("check={}", self.name);
        for (k, v) in &self.fields {
            let _ = write!(out, " {k}={v}");
        }
        out.push_str(if self.pass { " pass" } else { " fail" });
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report {
            suite: suite.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }
}

fn field_label(tower: &FieldTower) -> String {
    format!("{}^{}", tower.q(), tower.m())
}

/// `s` in `1..m` coprime to `m` (just `1` when `m = 1`).
pub fn admissible_s(tower: &FieldTower) -> Vec<i64> {
    (1..tower.m().max(2) as i64).filter(|&s| tower.check_s(s).is_ok()).collect()
}

pub fn random_element<R: Rng>(tower: &FieldTower, rng: &mut R) -> ExtElement {
    tower.element(rng.gen_range(0..tower.size() as u32)).expect("in range")
}

pub fn random_base_element<R: Rng>(tower: &FieldTower, rng: &mut R) -> ExtElement {
    tower.base_element(rng.gen_range(0..tower.q()))
}

pub fn random_matrix<R: Rng>(tower: &FieldTower, rows: usize, cols: usize, rng: &mut R) -> ExtMatrix {
    ExtMatrix::from_fn(rows, cols, |_, _| random_element(tower, rng))
}

pub fn random_base_matrix<R: Rng>(tower: &FieldTower, rows: usize, cols: usize, rng: &mut R) -> BaseMatrix {
    BaseMatrix::new(tower, ExtMatrix::from_fn(rows, cols, |_, _| random_base_element(tower, rng)))
        .expect("entries in F_q")
}

/// `count` F_q-independent elements of `space` (rejection sampling).
pub fn random_independent<R: Rng>(tower: &FieldTower, space: &SubspaceFq, count: usize, rng: &mut R) -> Vec<ExtElement> {
    assert!(count <= space.dim());
    let basis = space.basis();
    loop {
        let v: Vec<ExtElement> = (0..count)
            .map(|_| tower.sum(basis.iter().map(|&b| tower.mul(random_base_element(tower, rng), b))))
            .collect();
        if q_rank(tower, &v) == count {
            return v;
        }
    }
}

/// Valid parameters: `β = (1, …)` of full rank, `α` from `supp(β)^×`,
/// random `B` over `F_q` and the default `γ`.
pub fn random_params<R: Rng>(tower: &FieldTower, k: usize, n: usize, s: i64, rng: &mut R) -> QCauchyParams {
    let beta = loop {
        let mut b = vec![ExtElement::ONE];
        b.extend((1..n - k).map(|_| random_element(tower, rng)));
        if q_rank(tower, &b) == n - k {
            break b;
        }
    };
    let orth = tower.trace_orthogonal(&SubspaceFq::span(tower, &beta));
    let alpha = random_independent(tower, &orth, k, rng);
    QCauchyParams {
        alpha,
        beta,
        b: random_base_matrix(tower, k, n - k, rng),
        s,
        gamma: tower.default_gamma(),
    }
}

/// All `count`-tuples over `items`, including the single empty tuple.
fn tuples<'a, I>(items: I, count: usize) -> Box<dyn Iterator<Item = Vec<I::Item>> + 'a>
where
    I: Iterator + Clone + 'a,
    I::Item: Clone + 'a,
{
    if count == 0 {
        Box::new(std::iter::once(Vec::new()))
    } else {
        Box::new((0..count).map(|_| items.clone()).multi_cartesian_product())
    }
}

/// All elements `X` of `F_{q^m}^{rows × cols}`.
fn all_matrices(tower: &FieldTower, rows: usize, cols: usize) -> impl Iterator<Item = ExtMatrix> + '_ {
    tuples(tower.elements(), rows * cols).map(move |v| ExtMatrix::from_flat(rows, cols, v))
}

fn slow_criterion(tower: &FieldTower, x: &ExtMatrix, s: i64, cap: u128) -> Result<bool> {
    let code = CodeHandle::from_systematic(x);
    Ok(gabidulin::is_mrd(tower, &code, cap)? && rank(tower, &x.phi_s(tower, s)?) == 1)
}

/// Exhaustive code count against `∏_{i=1}^{n-1}(q^m - q^i)` and the
/// `q^m - 1` vectors-per-code law.
pub fn counting(tower: &FieldTower, n: usize, k: usize, s: i64, cap: u128) -> Result<Report> {
    let mut report = Report::new("counting");
    let expected = gabidulin::count_gabidulin(tower.q() as u64, tower.m() as u32, n as u32);
    let found = gabidulin::enumerate_and_count(tower, n, k, s, cap)?;
    let per_code = tower.size() - 1;
    report.push(
        Check::new("count", found.codes as u128 == expected)
            .field("field", field_label(tower))
            .field("n", n)
            .field("k", k)
            .field("s", s)
            .field("expected", expected)
            .field("found", found.codes),
    );
    report.push(
        Check::new(
            "vectors_per_code",
            found.min_vectors_per_code == per_code && found.max_vectors_per_code == per_code,
        )
        .field("expected", per_code)
        .field("min", found.min_vectors_per_code)
        .field("max", found.max_vectors_per_code)
        .field("vectors", found.vectors),
    );
    Ok(report)
}

/// Over every `X ∈ F_{q^m}^{k×(n-k)}`: the fast criterion agrees with
/// MRD plus `rk Φ_s(X) = 1`, and the accepted set is exactly the set of
/// built Cauchy matrices.
pub fn criteria_exhaustive(tower: &FieldTower, n: usize, k: usize, s: i64, cap: u128) -> Result<Report> {
    let mut report = Report::new("criteria-equivalence");
    let r = n - k;
    let mut disagreements = 0u64;
    let mut checked = 0u64;
    let mut accepted: HashSet<Vec<u32>> = HashSet::new();
    for x in all_matrices(tower, k, r) {
        checked += 1;
        let fast = gabidulin::is_gabidulin_fast(tower, &x, s)?;
        let fast_ii = gabidulin::is_gabidulin_fast_ii(tower, &x, s)?;
        let slow = slow_criterion(tower, &x, s, cap)?;
        if fast != slow || fast_ii != slow {
            disagreements += 1;
        }
        if fast {
            accepted.insert(x.entries().iter().map(|e| e.code()).collect());
        }
    }
    report.push(
        Check::new("exhaustive_agreement", disagreements == 0)
            .field("field", field_label(tower))
            .field("n", n)
            .field("k", k)
            .field("s", s)
            .field("checked", checked)
            .field("disagreements", disagreements),
    );
    let mut built: HashSet<Vec<u32>> = HashSet::new();
    let alphas = tuples(tower.elements(), k);
    for alpha in alphas {
        if q_rank(tower, &alpha) != k {
            continue;
        }
        for rest in tuples(tower.elements(), r - 1) {
            let mut beta = vec![ExtElement::ONE];
            beta.extend(rest);
            let mut params = QCauchyParams::new(tower, alpha.clone(), beta, s);
            if !params.is_valid(tower) {
                continue;
            }
            for b in tuples(tower.base_elements(), k * r) {
                params.b = BaseMatrix::new(tower, ExtMatrix::from_flat(k, r, b))?;
                let x = q_cauchy::build(tower, &params)?;
                built.insert(x.entries().iter().map(|e| e.code()).collect());
            }
        }
    }
    let expected = gabidulin::count_gabidulin(tower.q() as u64, tower.m() as u32, n as u32);
    report.push(
        Check::new(
            "cauchy_correspondence",
            built == accepted && accepted.len() as u128 == expected,
        )
        .field("accepted", accepted.len())
        .field("built", built.len())
        .field("expected", expected),
    );
    Ok(report)
}

/// Random `X` of three kinds (uniform, built Cauchy, Cauchy with one entry
/// perturbed) checked with both criteria.
pub fn criteria_random<R: Rng>(towers: &[FieldTower], samples: usize, rng: &mut R, cap: u128) -> Result<Report> {
    let mut report = Report::new("criteria-equivalence");
    let mut disagreements = 0u64;
    let mut kinds = [[0u64; 2]; 3];
    let mut built_rejected = 0u64;
    for i in 0..samples {
        let tower = &towers[i % towers.len()];
        let m = tower.m();
        let n = rng.gen_range(3..=m.min(5));
        let k = rng.gen_range(1..n);
        let s = *admissible_s(tower).choose(rng).expect("s = 1 always admissible");
        let kind = i % 3;
        let x = match kind {
            0 => random_matrix(tower, k, n - k, rng),
            _ => {
                let params = random_params(tower, k, n, s, rng);
                let mut x = q_cauchy::build(tower, &params)?;
                if kind == 2 {
                    let (a, b) = (rng.gen_range(0..k), rng.gen_range(0..n - k));
                    let delta = loop {
                        let d = random_element(tower, rng);
                        if !tower.is_in_base(d) {
                            break d;
                        }
                    };
                    x.set(a, b, tower.add(x.get(a, b), delta));
                }
                x
            }
        };
        let fast = gabidulin::is_gabidulin_fast(tower, &x, s)?;
        let fast_ii = gabidulin::is_gabidulin_fast_ii(tower, &x, s)?;
        let slow = slow_criterion(tower, &x, s, cap)?;
        if fast != slow || fast_ii != slow {
            disagreements += 1;
        }
        if kind == 1 && !fast {
            built_rejected += 1;
        }
        kinds[kind][fast as usize] += 1;
    }
    report.push(
        Check::new("random_agreement", disagreements == 0)
            .field("samples", samples)
            .field("disagreements", disagreements)
            .field("uniform_accepted", kinds[0][1])
            .field("cauchy_accepted", kinds[1][1])
            .field("perturbed_accepted", kinds[2][1]),
    );
    report.push(Check::new("built_cauchy_accepted", built_rejected == 0).field("rejected", built_rejected));
    Ok(report)
}

/// Every code `G_{k,s}(g)` with `g_1 = 1`: distinct, distance `n-k+1`,
/// dual recognized with the same `s`.
pub fn mrd_suite(tower: &FieldTower, n: usize, k: usize, s: i64, cap: u128) -> Result<Report> {
    let mut report = Report::new("mrd");
    let mut codes: HashSet<Vec<u32>> = HashSet::new();
    let mut bad_distance = 0u64;
    let mut bad_dual = 0u64;
    let mut total = 0u64;
    for rest in tuples(tower.elements(), n - 1) {
        let mut g = vec![ExtElement::ONE];
        g.extend(rest);
        if q_rank(tower, &g) != n {
            continue;
        }
        total += 1;
        let spec = GabidulinSpec::new(tower, g, k, s)?;
        let code = gabidulin::gabidulin_code(tower, &spec);
        codes.insert(code.reduced().entries().iter().map(|e| e.code()).collect());
        if gabidulin::min_rank_distance(tower, &code, cap)? != n - k + 1 {
            bad_distance += 1;
        }
        let dual = gabidulin::dual_code(tower, &code)?;
        if gabidulin::recognize(tower, dual.generator(), s)?.verdict != Verdict::Gabidulin {
            bad_dual += 1;
        }
    }
    let expected = gabidulin::count_gabidulin(tower.q() as u64, tower.m() as u32, n as u32);
    report.push(
        Check::new("distinct_codes", codes.len() as u128 == expected && total as u128 == expected)
            .field("field", field_label(tower))
            .field("s", s)
            .field("normalized_vectors", total)
            .field("codes", codes.len())
            .field("expected", expected),
    );
    report.push(
        Check::new("min_distance", bad_distance == 0)
            .field("expected", n - k + 1)
            .field("failures", bad_distance),
    );
    report.push(Check::new("dual_recognized", bad_dual == 0).field("failures", bad_dual));
    Ok(report)
}

fn structured_one(tower: &FieldTower, k: usize, n: usize, s: i64, b_ones: bool, toeplitz: bool) -> Result<bool> {
    let b = b_ones.then(|| {
        BaseMatrix::new(tower, ExtMatrix::from_fn(k, n - k, |_, _| ExtElement::ONE)).expect("over F_q")
    });
    let out = if toeplitz {
        q_cauchy::build_toeplitz(tower, k, n, s, b)?
    } else {
        q_cauchy::build_hankel(tower, k, n, s, b)?
    };
    let x = &out.x;
    let shape = if toeplitz {
        (0..k).all(|i| (0..n - k).all(|j| i + 1 >= k || j + 1 >= n - k || x.get(i, j) == x.get(i + 1, j + 1)))
    } else {
        (0..k).all(|i| (0..n - k).all(|j| i == 0 || j + 1 >= n - k || x.get(i, j) == x.get(i - 1, j + 1)))
    };
    // Φ_s(X)_{ij} = γ^{e + i ± j}, recomputed from the primitive element
    let order = tower.size() as i64 - 1;
    let l = out.run_start as i64;
    let phi = x.phi_s(tower, s)?;
    let pattern = (0..k).all(|i| {
        (0..n - k).all(|j| {
            let e = if toeplitz {
                l + (n - k) as i64 - 1 + i as i64 - j as i64
            } else {
                l + (i + j) as i64
            };
            phi.get(i, j) == tower.pow(out.primitive, e.rem_euclid(order) as u128)
        })
    });
    let g = ExtMatrix::identity(k).hstack(x)?;
    let verdict = gabidulin::recognize(tower, &g, s)?.verdict;
    Ok(shape && pattern && verdict == Verdict::Gabidulin)
}

/// Hankel and Toeplitz constructions for every `0 < k < n <= m` and
/// admissible `s`, with `B = 0` and `B` all ones.
pub fn structured_suite(tower: &FieldTower) -> Result<Report> {
    let mut report = Report::new("structured");
    for toeplitz in [false, true] {
        let mut cases = 0u64;
        let mut failures = 0u64;
        for n in 2..=tower.m() {
            for k in 1..n {
                for s in admissible_s(tower) {
                    for b_ones in [false, true] {
                        cases += 1;
                        if !structured_one(tower, k, n, s, b_ones, toeplitz)? {
                            failures += 1;
                        }
                    }
                }
            }
        }
        report.push(
            Check::new(if toeplitz { "toeplitz" } else { "hankel" }, failures == 0)
                .field("field", field_label(tower))
                .field("cases", cases)
                .field("failures", failures),
        );
    }
    Ok(report)
}

/// Random circulant `X` with `k = n/2`: the all-ones message has rank
/// weight at most 2 and the brute-force distance is below `n - k + 1`.
pub fn circulant_suite<R: Rng>(tower: &FieldTower, n: usize, samples: usize, rng: &mut R, cap: u128) -> Result<Report> {
    let mut report = Report::new("circulant");
    if !n.is_multiple_of(2) || n == 0 {
        return Err(Error::InvalidDimensions(format!("n = {n} must be even")));
    }
    let k = n / 2;
    let mut failures = 0u64;
    let mut max_weight = 0;
    let mut max_distance = 0;
    for _ in 0..samples {
        let first: Vec<ExtElement> = (0..k).map(|_| random_element(tower, rng)).collect();
        let x = ExtMatrix::from_fn(k, k, |i, j| first[(j + k - i) % k]);
        let w = q_cauchy::circulant_demo(tower, &x)?;
        let d = gabidulin::min_rank_distance(tower, &CodeHandle::from_systematic(&x), cap)?;
        max_weight = max_weight.max(w.rank_weight);
        max_distance = max_distance.max(d);
        if w.rank_weight > 2 || d > 2 || (n >= 4 && !w.rules_out_mrd) {
            failures += 1;
        }
    }
    report.push(
        Check::new("circulant_not_mrd", failures == 0)
            .field("field", field_label(tower))
            .field("n", n)
            .field("samples", samples)
            .field("max_witness_weight", max_weight)
            .field("max_distance", max_distance)
            .field("failures", failures),
    );
    Ok(report)
}

/// Trace and `φ_s` facts on one tower.
pub fn field_theory<R: Rng>(tower: &FieldTower, samples: usize, rng: &mut R) -> Result<Report> {
    let mut report = Report::new("field-theory");
    let label = field_label(tower);
    let q = tower.q() as u64;
    let m = tower.m();
    let kernel: BTreeSet<u32> = tower
        .elements()
        .filter(|&x| tower.trace(x).is_zero())
        .map(|x| x.code())
        .collect();
    for s in admissible_s(tower) {
        let mut preimages = vec![0u64; tower.size() as usize];
        for x in tower.elements() {
            preimages[tower.phi_s(x, s)?.code() as usize] += 1;
        }
        let image: BTreeSet<u32> = (0..preimages.len() as u32).filter(|&c| preimages[c as usize] > 0).collect();
        report.push(
            Check::new("image_is_trace_kernel", image == kernel)
                .field("field", &label)
                .field("s", s)
                .field("image", image.len())
                .field("kernel", kernel.len()),
        );
        let sizes_ok = preimages
            .iter()
            .enumerate()
            .all(|(c, &cnt)| cnt == if kernel.contains(&(c as u32)) { q } else { 0 });
        report.push(Check::new("preimage_sizes", sizes_ok).field("s", s).field("q", q));
        let gamma = tower.default_gamma();
        let pi_ok = kernel.iter().all(|&c| {
            let a = tower.element(c).expect("in range");
            tower
                .pi_s(a, s, gamma)
                .and_then(|x| tower.phi_s(x, s))
                .map(|y| y == a)
                .unwrap_or(false)
        });
        report.push(Check::new("pi_inverts_phi", pi_ok).field("s", s));
    }

    let whole = SubspaceFq::whole(tower);
    let mut orth_fail = 0u64;
    let mut dual_fail = 0u64;
    for _ in 0..samples {
        let gens: Vec<ExtElement> = (0..rng.gen_range(0..=m)).map(|_| random_element(tower, rng)).collect();
        let space = SubspaceFq::span(tower, &gens);
        let orth = tower.trace_orthogonal(&space);
        let orthogonal = orth
            .basis()
            .iter()
            .all(|&y| gens.iter().all(|&g| tower.trace(tower.mul(g, y)).is_zero()));
        if orth.dim() + space.dim() != m || !orthogonal {
            orth_fail += 1;
        }
        let basis = random_independent(tower, &whole, m, rng);
        let dual = tower.dual_basis(&basis)?;
        let delta = (0..m).all(|i| {
            (0..m).all(|j| {
                let v = tower.trace(tower.mul(basis[i], dual[j]));
                v == if i == j { ExtElement::ONE } else { ExtElement::ZERO }
            })
        });
        if !delta {
            dual_fail += 1;
        }
    }
    report.push(
        Check::new("orthogonal_dimension", orth_fail == 0)
            .field("samples", samples)
            .field("failures", orth_fail),
    );
    report.push(
        Check::new("dual_basis_delta", dual_fail == 0)
            .field("samples", samples)
            .field("failures", dual_fail),
    );

    // rk(α) = k iff rk(1, β) = k + 1 when φ_s(β_i) = α_i
    let mut indep_fail = 0u64;
    let mut dependent_cases = 0u64;
    for i in 0..samples {
        let s = *admissible_s(tower).choose(rng).expect("nonempty");
        let k = rng.gen_range(1..=m.max(2) - 1);
        let mut betas: Vec<ExtElement> = (0..k).map(|_| random_element(tower, rng)).collect();
        if i % 2 == 1 && k >= 1 {
            // force a dependency among 1, β_1, …, β_k
            let c = random_base_element(tower, rng);
            let last = tower.sum(
                betas[..k - 1]
                    .iter()
                    .map(|&b| tower.mul(random_base_element(tower, rng), b))
                    .chain(std::iter::once(c)),
            );
            betas[k - 1] = last;
        }
        let alphas: Vec<ExtElement> = betas.iter().map(|&b| tower.phi_s(b, s)).collect::<Result<_>>()?;
        let mut with_one = vec![ExtElement::ONE];
        with_one.extend(&betas);
        let lhs = q_rank(tower, &alphas) == k;
        let rhs = q_rank(tower, &with_one) == k + 1;
        if !lhs {
            dependent_cases += 1;
        }
        if lhs != rhs {
            indep_fail += 1;
        }
    }
    report.push(
        Check::new("preimage_independence", indep_fail == 0)
            .field("samples", samples)
            .field("dependent", dependent_cases)
            .field("failures", indep_fail),
    );
    Ok(report)
}

/// `build ∘ recover_params = id`, `recover_params ∘ build = id`, and
/// `inverse_moore_factor(recover_points(p))` equal to the RREF route.
pub fn round_trip<R: Rng>(towers: &[FieldTower], samples: usize, rng: &mut R) -> Result<Report> {
    let mut report = Report::new("round-trip");
    let mut fail_params = 0u64;
    let mut fail_x = 0u64;
    let mut fail_moore = 0u64;
    for i in 0..samples {
        let tower = &towers[i % towers.len()];
        let n = rng.gen_range(2..=tower.m());
        let k = rng.gen_range(1..n);
        let s = *admissible_s(tower).choose(rng).expect("nonempty");
        let params = random_params(tower, k, n, s, rng);
        let x = q_cauchy::build(tower, &params)?;
        match q_cauchy::recover_params(tower, &x, s, params.gamma) {
            Ok(p) => {
                if p != params {
                    fail_params += 1;
                }
                if q_cauchy::build(tower, &p)? != x {
                    fail_x += 1;
                }
            }
            Err(_) => {
                fail_params += 1;
                fail_x += 1;
            }
        }
        let g = q_cauchy::recover_points(tower, &params)?;
        let via_moore = q_cauchy::inverse_moore_factor(tower, &g, k, s)?;
        let code = gabidulin::gabidulin_code(tower, &GabidulinSpec::new(tower, g, k, s)?);
        if via_moore != x || code.standard_x() != Some(&x) {
            fail_moore += 1;
        }
    }
    report.push(Check::new("recover_then_build", fail_params == 0).field("samples", samples).field("failures", fail_params));
    report.push(Check::new("build_then_recover", fail_x == 0).field("samples", samples).field("failures", fail_x));
    report.push(Check::new("inverse_moore_vs_rref", fail_moore == 0).field("samples", samples).field("failures", fail_moore));
    Ok(report)
}

/// `F_{3^6}` with modulus `a^6 + 2a^4 + a^2 + 2a + 2`.
pub fn example_tower_gf729() -> FieldTower {
    FieldTower::prime(3, &[2, 2, 1, 0, 2, 0, 1]).expect("irreducible")
}

/// `F_{2^6}` with modulus `a^6 + a^4 + a^3 + a + 1`.
pub fn example_tower_gf64() -> FieldTower {
    FieldTower::prime(2, &[1, 1, 0, 1, 1, 0, 1]).expect("irreducible")
}

/// Generator of the recognition example over `F_{3^6}`, as exponents of `a`.
pub const GF729_GENERATOR_EXPONENTS: [[i64; 6]; 3] = [
    [2, 54, 591, 277, 160, 634],
    [67, 701, 443, 45, 486, 209],
    [320, 199, 650, 361, 701, 562],
];

pub fn exponent_matrix<const C: usize>(tower: &FieldTower, rows: &[[i64; C]]) -> ExtMatrix {
    ExtMatrix::from_fn(rows.len(), C, |i, j| tower.exp(rows[i][j]))
}

/// Transcript of the two worked examples: recognition over `F_{3^6}` and
/// the Hankel construction over `F_{2^6}` with point recovery.
pub fn worked_examples() -> Result<String> {
    let mut out = String::new();
    let t = example_tower_gf729();
    let g = exponent_matrix(&t, &GF729_GENERATOR_EXPONENTS);
    let rec = gabidulin::recognize(&t, &g, 1)?;
    let x = rec.x.clone().ok_or(Error::NoStandardForm)?;
    let c = rec.criterion.clone().expect("standard form present");
    let _ = writeln!(out, "# recognition over F_3^6");
    out.push_str(&text::FieldSpec::from_tower(&t).render());
    let _ = writeln!(out, "G:\n{}", text::render_matrix(&t, &g).trim_end());
    let _ = writeln!(out, "X:\n{}", text::render_matrix(&t, &x).trim_end());
    let _ = writeln!(out, "Phi_1(X):\n{}", text::render_matrix(&t, &x.phi_s(&t, 1)?).trim_end());
    let _ = writeln!(
        out,
        "verdict={} s=1 rank_phi={} row_q_rank={} col_q_rank={}",
        rec.verdict.as_str(),
        c.rank_phi,
        c.row_q_rank,
        c.col_q_rank
    );

    let t = example_tower_gf64();
    let h = q_cauchy::build_hankel(&t, 3, 6, 1, None)?;
    let g = q_cauchy::recover_points(&t, &h.params)?;
    let gen = ext_linalg::moore_matrix(&t, &g, 3, 1)?;
    let rec = gabidulin::recognize(&t, &gen, 1)?;
    let _ = writeln!(out, "\n# Hankel construction over F_2^6");
    out.push_str(&text::FieldSpec::from_tower(&t).render());
    let _ = writeln!(out, "run_start={} primitive={}", h.run_start, text::render_element(&t, h.primitive));
    out.push_str(&text::render_params(&t, &h.params, None));
    let _ = writeln!(out, "X:\n{}", text::render_matrix(&t, &h.x).trim_end());
    let _ = writeln!(out, "hankel={}", h.x.is_hankel());
    let _ = writeln!(out, "g = {}", text::render_vector(&t, &g));
    let _ = writeln!(
        out,
        "verdict={} s=1 standard_form_matches={}",
        rec.verdict.as_str(),
        rec.x.as_ref() == Some(&h.x)
    );
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn small_suites_pass() {
        let t = FieldTower::prime(2, &[1, 1, 0, 1]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!(counting(&t, 3, 1, 1, 1 << 20).unwrap().passed());
        assert!(criteria_exhaustive(&t, 3, 2, 1, 1 << 20).unwrap().passed());
        assert!(field_theory(&t, 20, &mut rng).unwrap().passed());
        assert!(structured_suite(&t).unwrap().passed());
        assert!(round_trip(&[t], 20, &mut rng).unwrap().passed());
    }

    #[test]
    fn record_format() {
        let c = Check::new("count", true).field("expected", 24).field("found", 24);
        assert_eq!(c.record(), "check=count expected=24 found=24 pass");
    }
}
