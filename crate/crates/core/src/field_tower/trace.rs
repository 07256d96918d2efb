//! Trace map, trace form, dual bases, trace-orthogonal spaces and the maps
//! `φ_s` and `π_s`.

use super::{mod_inverse, ExtElement, FieldTower};
use crate::error::{Error, Result};
use crate::ext_linalg::{self, ExtMatrix};

/// An `F_q`-subspace of `F_{q^m}` given by generators and a reduced basis.
///
/// The basis is the set of nonzero rows of the reduced row echelon form of
/// the generators' coordinate matrix, so two subspaces are equal iff their
/// bases are equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceFq {
    generators: Vec<ExtElement>,
    basis: Vec<ExtElement>,
}

impl SubspaceFq {
    pub fn span(tower: &FieldTower, generators: &[ExtElement]) -> SubspaceFq {
        let coords = coordinate_matrix(tower, generators);
        let r = ext_linalg::rref(tower, &coords);
        let basis = (0..r.rank)
            .map(|i| tower.from_coords(r.reduced.row(i)))
            .collect();
        SubspaceFq {
            generators: generators.to_vec(),
            basis,
        }
    }

    pub fn zero() -> SubspaceFq {
        SubspaceFq {
            generators: Vec::new(),
            basis: Vec::new(),
        }
    }

    pub fn whole(tower: &FieldTower) -> SubspaceFq {
        let gens: Vec<_> = (0..tower.m())
            .map(|i| {
                let mut c = vec![ExtElement::ZERO; tower.m()];
                c[i] = ExtElement::ONE;
                tower.from_coords(&c)
            })
            .collect();
        SubspaceFq::span(tower, &gens)
    }

    pub fn generators(&self) -> &[ExtElement] {
        &self.generators
    }

    pub fn basis(&self) -> &[ExtElement] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, tower: &FieldTower, x: ExtElement) -> bool {
        let mut gens = self.basis.clone();
        gens.push(x);
        crate::ext_linalg::q_rank(tower, &gens) == self.dim()
    }

    pub fn is_subspace_of(&self, tower: &FieldTower, other: &SubspaceFq) -> bool {
        self.basis.iter().all(|&b| other.contains(tower, b))
    }

    /// Every element of the subspace (`q^dim` of them), in odometer order of
    /// the coefficients over the reduced basis.
    pub fn elements(&self, tower: &FieldTower) -> Vec<ExtElement> {
        let q = tower.q();
        let d = self.dim();
        let total = (q as u64).pow(d as u32);
        (0..total)
            .map(|mut idx| {
                let mut acc = ExtElement::ZERO;
                for &b in &self.basis {
                    let c = tower.base_element((idx % q as u64) as u32);
                    idx /= q as u64;
                    acc = tower.add(acc, tower.mul(c, b));
                }
                acc
            })
            .collect()
    }
}

/// Rows are the `F_q` coordinates of the given elements.
pub(crate) fn coordinate_matrix(tower: &FieldTower, v: &[ExtElement]) -> ExtMatrix {
    let rows: Vec<Vec<ExtElement>> = v.iter().map(|&x| tower.coords(x)).collect();
    ExtMatrix::from_flat(v.len(), tower.m(), rows.concat())
}

impl FieldTower {
    /// `Tr(x) = Σ_{i<m} θ^i(x)`, an element of `F_q`.
    pub fn trace(&self, x: ExtElement) -> ExtElement {
        let t = self.sum((0..self.m as i64).map(|i| self.frobenius(x, i)));
        debug_assert!(self.is_in_base(t));
        t
    }

    /// `tr(x, y) = Tr(xy)`.
    pub fn trace_form(&self, x: ExtElement, y: ExtElement) -> ExtElement {
        self.trace(self.mul(x, y))
    }

    /// `ker(T_α)` with `T_α(β) = Tr(αβ)`; has dimension `m - 1`.
    pub fn t_alpha_kernel(&self, alpha: ExtElement) -> Result<SubspaceFq> {
        if alpha.is_zero() {
            return Err(Error::ZeroFunctional);
        }
        Ok(self.trace_orthogonal(&SubspaceFq::span(self, &[alpha])))
    }

    /// `S^×`: the common kernel of `T_α` over a basis of `S`.
    pub fn trace_orthogonal(&self, s: &SubspaceFq) -> SubspaceFq {
        if s.dim() == 0 {
            return SubspaceFq::whole(self);
        }
        // Row i, column j: Tr(b_i x^j).
        let m = self.m;
        let power_basis: Vec<ExtElement> = (0..m)
            .map(|j| {
                let mut c = vec![ExtElement::ZERO; m];
                c[j] = ExtElement::ONE;
                self.from_coords(&c)
            })
            .collect();
        let data: Vec<ExtElement> = s
            .basis()
            .iter()
            .flat_map(|&b| power_basis.iter().map(move |&x| (b, x)))
            .map(|(b, x)| self.trace_form(b, x))
            .collect();
        let a = ExtMatrix::from_flat(s.dim(), m, data);
        let kernel: Vec<ExtElement> = ext_linalg::nullspace(self, &a)
            .iter()
            .map(|c| self.from_coords(c))
            .collect();
        SubspaceFq::span(self, &kernel)
    }

    /// The dual basis of `basis` with respect to the trace form.
    pub fn dual_basis(&self, basis: &[ExtElement]) -> Result<Vec<ExtElement>> {
        let m = self.m;
        if basis.len() != m || ext_linalg::q_rank(self, basis) != m {
            return Err(Error::NotABasis);
        }
        let gram = ExtMatrix::from_fn(m, m, |i, j| self.trace_form(basis[i], basis[j]));
        // β_j = Σ_l C_{jl} α_l with C = G^{-1} (G symmetric).
        let c = ext_linalg::inverse(self, &gram).ok_or(Error::NotABasis)?;
        let dual: Vec<ExtElement> = (0..m)
            .map(|j| self.sum((0..m).map(|l| self.mul(c.get(j, l), basis[l]))))
            .collect();
        for (i, &a) in basis.iter().enumerate() {
            for (j, &b) in dual.iter().enumerate() {
                let expected = if i == j { ExtElement::ONE } else { ExtElement::ZERO };
                if self.trace_form(a, b) != expected {
                    return Err(Error::VerificationFailed("dual basis".into()));
                }
            }
        }
        Ok(dual)
    }

    /// `φ_s(x) = θ^s(x) - x`.
    pub fn phi_s(&self, x: ExtElement, s: i64) -> Result<ExtElement> {
        self.check_s(s)?;
        Ok(self.sub(self.frobenius(x, s), x))
    }

    /// The right inverse of `φ_s` on `ker(Tr)` determined by `γ`:
    ///
    /// `π_s(α) = -Tr(γ)^{-1} Σ_{i=0}^{m-2} σ^{i+1}(γ) Σ_{j=0}^{i} σ^j(α)`, `σ = θ^s`.
    pub fn pi_s(&self, alpha: ExtElement, s: i64, gamma: ExtElement) -> Result<ExtElement> {
        self.check_s(s)?;
        let tr_gamma = self.trace(gamma);
        if tr_gamma.is_zero() {
            return Err(Error::BadGamma);
        }
        if !self.trace(alpha).is_zero() {
            return Err(Error::NotInKernel);
        }
        let mut inner = ExtElement::ZERO;
        let mut sigma_alpha = alpha;
        let mut acc = ExtElement::ZERO;
        for i in 0..self.m.saturating_sub(1) as i64 {
            inner = self.add(inner, sigma_alpha);
            sigma_alpha = self.frobenius(sigma_alpha, s);
            acc = self.add(acc, self.mul(self.frobenius(gamma, (i + 1) * s), inner));
        }
        let factor = self.neg(self.inv(tr_gamma).expect("nonzero trace"));
        Ok(self.mul(factor, acc))
    }

    /// The first element `a^i` (ascending `i`) with nonzero trace.
    pub fn default_gamma(&self) -> ExtElement {
        (0..self.size as i64 - 1)
            .map(|k| self.exp(k))
            .find(|&x| !self.trace(x).is_zero())
            .expect("trace is surjective")
    }

    /// Smallest `ℓ >= 0` with `Tr(γ^ℓ) = … = Tr(γ^{ℓ+m-2}) = 0`.
    ///
    /// Built from the functional `L` that vanishes on `1, γ, …, γ^{m-2}` and
    /// sends `γ^{m-1}` to 1: `L = T_β` for `β` the dual of `γ^{m-1}`, and every
    /// run start is `log_γ(λβ)` for some `λ ∈ F_q^*`. Cross-checked against a
    /// linear scan when the field has tables.
    pub fn consecutive_trace_zero_start(&self, gamma: ExtElement) -> Result<u64> {
        if !self.is_primitive(gamma) {
            return Err(Error::NotPrimitive);
        }
        let order = self.size - 1;
        if self.m == 1 {
            return Ok(0);
        }
        let powers: Vec<ExtElement> = (0..self.m).map(|i| self.pow(gamma, i as u128)).collect();
        let dual = self.dual_basis(&powers)?;
        let beta = dual[self.m - 1];
        let gamma_log = self.log(gamma).expect("nonzero");
        let gamma_log_inv = mod_inverse(gamma_log, order).expect("primitive");
        let ell = self
            .base_elements()
            .skip(1)
            .map(|lambda| {
                let l = self.log(self.mul(lambda, beta)).expect("nonzero");
                ((l as u128 * gamma_log_inv as u128) % order as u128) as u64
            })
            .min()
            .expect("F_q^* is nonempty");
        if self.has_tables() {
            let scanned = self.consecutive_trace_zero_start_scan(gamma);
            if scanned != Some(ell) {
                return Err(Error::VerificationFailed(format!(
                    "constructive run start {ell} disagrees with scan {scanned:?}"
                )));
            }
        }
        Ok(ell)
    }

    /// Linear scan for the smallest run start.
    pub fn consecutive_trace_zero_start_scan(&self, gamma: ExtElement) -> Option<u64> {
        let order = self.size - 1;
        let run = self.m - 1;
        let traces: Vec<bool> = (0..order)
            .map(|i| self.trace(self.pow(gamma, i as u128)).is_zero())
            .collect();
        (0..order).find(|&l| (0..run as u64).all(|j| traces[((l + j) % order) as usize]))
    }
}


#[cfg(test)]
mod tests {
    use super::*;

    fn f4() -> FieldTower {
        FieldTower::prime(2, &[1, 1, 1]).unwrap()
    }

    fn f8() -> FieldTower {
        FieldTower::prime(2, &[1, 1, 0, 1]).unwrap()
    }

    #[test]
    fn trace_small_cases() {
        let t = f4();
        assert_eq!(t.trace(t.zero()), t.zero());
        // m = 2 ones
        assert_eq!(t.trace(t.one()), t.zero());
        assert_eq!(t.trace(t.x()), t.one());
        let t = f8();
        assert_eq!(t.trace(t.one()), t.one());
    }

    #[test]
    fn kernel_of_trace_in_f4() {
        let t = f4();
        let ker = t.t_alpha_kernel(t.one()).unwrap();
        let brute: Vec<_> = t.elements().filter(|&x| t.trace(x).is_zero()).collect();
        let mut got = ker.elements(&t);
        got.sort();
        let mut brute = brute;
        brute.sort();
        assert_eq!(got, brute);
        assert_eq!(got, vec![t.zero(), t.one()]);
        assert_eq!(t.t_alpha_kernel(t.zero()), Err(Error::ZeroFunctional));
    }

    #[test]
    fn kernel_dimension_in_f8() {
        let t = f8();
        for a in t.elements().skip(1) {
            assert_eq!(t.t_alpha_kernel(a).unwrap().dim(), 2);
        }
    }

    #[test]
    fn trace_orthogonal_of_span_a_in_f8() {
        let t = f8();
        let a = t.x();
        let s = SubspaceFq::span(&t, &[a]);
        let perp = t.trace_orthogonal(&s);
        assert_eq!(perp.dim(), 2);
        let brute: Vec<_> = t.elements().filter(|&x| t.trace_form(a, x).is_zero()).collect();
        assert_eq!(brute.len(), 4);
        for x in t.elements() {
            assert_eq!(perp.contains(&t, x), brute.contains(&x));
        }
        assert_eq!(t.trace_orthogonal(&SubspaceFq::zero()).dim(), 3);
        assert_eq!(t.trace_orthogonal(&SubspaceFq::whole(&t)).dim(), 0);
    }

    #[test]
    fn dual_of_power_basis_in_f8() {
        let t = f8();
        let a = t.x();
        let basis = [t.one(), a, t.mul(a, a)];
        // Gram matrix of the trace form, solved independently by brute force:
        // find every β with Tr(α_i β) = δ_ij.
        let dual = t.dual_basis(&basis).unwrap();
        for j in 0..3 {
            let brute: Vec<_> = t
                .elements()
                .filter(|&b| {
                    (0..3).all(|i| t.trace_form(basis[i], b) == if i == j { t.one() } else { t.zero() })
                })
                .collect();
            assert_eq!(brute, vec![dual[j]]);
        }
        assert_eq!(t.dual_basis(&dual).unwrap(), basis.to_vec());
        assert_eq!(t.dual_basis(&[t.one(), t.one(), a]), Err(Error::NotABasis));
    }

    #[test]
    fn phi_and_pi_in_f4() {
        let t = f4();
        let a = t.x();
        assert_eq!(t.phi_s(a, 1).unwrap(), t.one());
        assert_eq!(t.phi_s(t.one(), 1).unwrap(), t.zero());
        let a2 = t.mul(a, a);
        assert_eq!(t.pi_s(t.one(), 1, a).unwrap(), a2);
        assert_eq!(t.phi_s(a2, 1).unwrap(), t.one());
        assert_eq!(t.pi_s(a, 1, a), Err(Error::NotInKernel));
        assert_eq!(t.pi_s(t.one(), 1, t.one()), Err(Error::BadGamma));
        assert!(matches!(t.phi_s(a, 2), Err(Error::BadParameterS { .. })));
    }

    #[test]
    fn preimage_sizes_in_f8() {
        let t = f8();
        for s in [1, 2] {
            for alpha in t.elements() {
                let count = t.elements().filter(|&x| t.phi_s(x, s).unwrap() == alpha).count();
                let expected = if t.trace(alpha).is_zero() { 2 } else { 0 };
                assert_eq!(count, expected);
            }
        }
    }

    #[test]
    fn run_start_in_f8_matches_scan() {
        let t = f8();
        let l = t.consecutive_trace_zero_start(t.x()).unwrap();
        let brute = (0..7u64)
            .find(|&l| {
                t.trace(t.exp(l as i64)).is_zero() && t.trace(t.exp(l as i64 + 1)).is_zero()
            })
            .unwrap();
        assert_eq!(l, brute);
        assert_eq!(t.consecutive_trace_zero_start(t.one()), Err(Error::NotPrimitive));
    }

    #[test]
    fn run_start_for_hankel_example_field() {
        let t = FieldTower::prime(2, &[1, 1, 0, 1, 1, 0, 1]).unwrap();
        assert_eq!(t.consecutive_trace_zero_start(t.x()).unwrap(), 14);
        for i in 14..=18 {
            assert!(t.trace(t.exp(i)).is_zero());
        }
    }

    #[test]
    fn run_start_with_nonprime_base_field() {
        let t = FieldTower::search(2, 2, 3).unwrap();
        let g = t.primitive();
        let l = t.consecutive_trace_zero_start(g).unwrap();
        assert_eq!(Some(l), t.consecutive_trace_zero_start_scan(g));
    }
}
