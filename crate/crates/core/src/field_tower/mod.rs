//! Exact arithmetic in the tower `F_p ⊂ F_q ⊂ F_{q^m}`.
//!
//! `F_q = F_p[y]/(b(y))` with `deg b = e`, and `F_{q^m} = F_q[x]/(f(x))` with
//! `deg f = m`. An element of `F_{q^m}` is stored as a single integer code:
//! the little-endian base-`p` digits of its `m·e` coefficients over `F_p`,
//! grouped as `m` base-`q` digits, one per power of `x`. The elements of the
//! subfield `F_q` are exactly the codes below `q`.
//!
//! Multiplication uses exponential/logarithm tables for fields with at most
//! 2^22 elements and schoolbook polynomial arithmetic otherwise; both paths
//! are always available and are cross-checked in tests.

pub(crate) mod poly;
mod trace;

use std::collections::HashMap;
use std::fmt;

pub use trace::SubspaceFq;

use crate::error::{Error, Result};
use poly::{digit_add, digit_sub, BaseField, PrimeField};

/// Largest field for which log tables are precomputed.
pub const TABLE_LIMIT: u64 = 1 << 22;
/// Largest supported field.
pub const MAX_FIELD_SIZE: u64 = 1 << 31;

/// An element of `F_{q^m}`, meaningful only relative to its [`FieldTower`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ExtElement(u32);

impl ExtElement {
    pub const ZERO: ExtElement = ExtElement(0);
    pub const ONE: ExtElement = ExtElement(1);

    pub(crate) const fn from_code(code: u32) -> Self {
        ExtElement(code)
    }

    /// The packed integer code (base-`p` digits of the coefficients).
    pub fn code(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

#[derive(Debug, Clone)]
struct LogTables {
    /// `exp[i] = primitive^i` for `0 <= i < N - 1`.
    exp: Vec<u32>,
    /// `log[code]`, undefined at 0.
    log: Vec<u32>,
}

/// The chain `F_p ⊂ F_q ⊂ F_{q^m}` with a fixed primitive element.
///
/// Immutable after construction.
#[derive(Clone)]
pub struct FieldTower {
    base: BaseField,
    m: usize,
    /// Monic, length `m + 1`, coefficients as `F_q` codes.
    ext_modulus: Vec<u32>,
    size: u64,
    primitive: ExtElement,
    tables: Option<LogTables>,
}

impl fmt::Debug for FieldTower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldTower")
            .field("p", &self.base.p)
            .field("e", &self.base.e)
            .field("m", &self.m)
            .field("base_modulus", &self.base.modulus)
            .field("ext_modulus", &self.ext_modulus)
            .field("primitive", &self.primitive)
            .field("tables", &self.tables.is_some())
            .finish()
    }
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Inverse of `a` modulo `n`, if it exists.
pub(crate) fn mod_inverse(a: u64, n: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128, n as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let quot = old_r / r;
        (old_r, r) = (r, old_r - quot * r);
        (old_s, s) = (s, old_s - quot * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(n as i128) as u64)
}

impl FieldTower {
    /// Builds and validates the tower.
    ///
    /// `base_modulus` is a monic polynomial of degree `e` over `F_p`
    /// (little-endian); `ext_modulus` is a monic polynomial of degree `m`
    /// over `F_q`, each coefficient given as a little-endian list of `F_p`
    /// digits (shorter lists are zero-padded).
    pub fn build(
        p: u32,
        e: usize,
        base_modulus: &[u32],
        m: usize,
        ext_modulus: &[Vec<u32>],
    ) -> Result<FieldTower> {
        if !is_prime(p) {
            return Err(Error::InvalidModulus(format!("p = {p} is not prime")));
        }
        if e == 0 || m == 0 {
            return Err(Error::InvalidModulus("degrees must be positive".into()));
        }
        if base_modulus.len() != e + 1 || base_modulus[e] != 1 {
            return Err(Error::InvalidModulus(format!(
                "base modulus must be monic of degree {e}"
            )));
        }
        if base_modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidModulus("base modulus coefficient >= p".into()));
        }
        if !poly::is_irreducible(&PrimeField(p), base_modulus) {
            return Err(Error::NotIrreducible("base modulus".into()));
        }
        let base = BaseField::new(p, base_modulus.to_vec());
        let size = (base.q as u128).pow(m as u32);
        if size > MAX_FIELD_SIZE as u128 {
            return Err(Error::FieldTooLarge(size));
        }
        if ext_modulus.len() != m + 1 {
            return Err(Error::InvalidModulus(format!(
                "extension modulus must have degree {m}"
            )));
        }
        let mut ext = Vec::with_capacity(m + 1);
        for c in ext_modulus {
            if c.len() > e || c.iter().any(|&d| d >= p) {
                return Err(Error::InvalidModulus(format!(
                    "extension modulus coefficient {c:?} is not an F_q element"
                )));
            }
            let mut d = c.clone();
            d.resize(e, 0);
            ext.push(base.from_digits(&d));
        }
        if ext[m] != 1 {
            return Err(Error::InvalidModulus("extension modulus is not monic".into()));
        }
        if !poly::is_irreducible(&base, &ext) {
            return Err(Error::NotIrreducible("extension modulus".into()));
        }
        Self::assemble(base, ext)
    }

    /// Prime base field (`e = 1`), extension modulus over `F_p`.
    pub fn prime(p: u32, ext_modulus: &[u32]) -> Result<FieldTower> {
        let m = ext_modulus.len().saturating_sub(1);
        let ext: Vec<Vec<u32>> = ext_modulus.iter().map(|&c| vec![c]).collect();
        Self::build(p, 1, &[0, 1], m, &ext)
    }

    /// Tower with the lexicographically first irreducible moduli for which
    /// the class of `x` is primitive.
    pub fn search(p: u32, e: usize, m: usize) -> Result<FieldTower> {
        if !is_prime(p) {
            return Err(Error::InvalidModulus(format!("p = {p} is not prime")));
        }
        let fp = PrimeField(p);
        let base_modulus = if e == 1 {
            vec![0, 1]
        } else {
            poly::monics(&fp, e)
                .find(|f| poly::is_irreducible(&fp, f))
                .ok_or(Error::NoPrimitiveFound)?
        };
        let base = BaseField::new(p, base_modulus);
        let size = (base.q as u128).pow(m as u32);
        if size > MAX_FIELD_SIZE as u128 {
            return Err(Error::FieldTooLarge(size));
        }
        for f in poly::monics(&base, m) {
            if !poly::is_irreducible(&base, &f) {
                continue;
            }
            let tower = Self::assemble(base.clone(), f)?;
            if m == 1 || tower.primitive == tower.x() {
                return Ok(tower);
            }
        }
        Err(Error::NoPrimitiveFound)
    }

    fn assemble(base: BaseField, ext_modulus: Vec<u32>) -> Result<FieldTower> {
        let m = ext_modulus.len() - 1;
        let size = (base.q as u64).pow(m as u32);
        let mut tower = FieldTower {
            base,
            m,
            ext_modulus,
            size,
            primitive: ExtElement::ONE,
            tables: None,
        };
        tower.primitive = tower.find_primitive()?;
        if size <= TABLE_LIMIT {
            tower.tables = Some(tower.compute_tables());
        }
        Ok(tower)
    }

    fn find_primitive(&self) -> Result<ExtElement> {
        let order = self.size - 1;
        if order == 1 {
            return Ok(ExtElement::ONE);
        }
        let factors = prime_factors(order);
        (1..self.size as u32)
            .map(ExtElement)
            .find(|&c| {
                factors
                    .iter()
                    .all(|&r| self.pow_poly(c, (order / r) as u128) != ExtElement::ONE)
            })
            .ok_or(Error::NoPrimitiveFound)
    }

    fn compute_tables(&self) -> LogTables {
        let order = (self.size - 1) as usize;
        let mut exp = Vec::with_capacity(order);
        let mut log = vec![0u32; self.size as usize];
        let mut cur = ExtElement::ONE;
        for i in 0..order {
            exp.push(cur.0);
            log[cur.0 as usize] = i as u32;
            cur = self.mul_poly(cur, self.primitive);
        }
        LogTables { exp, log }
    }

    pub fn p(&self) -> u32 {
        self.base.p
    }

    pub fn e(&self) -> usize {
        self.base.e
    }

    pub fn q(&self) -> u32 {
        self.base.q
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `q^m`.
    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn base_modulus(&self) -> &[u32] {
        &self.base.modulus
    }

    /// Extension modulus coefficients, each as `F_p` digits of an `F_q` element.
    pub fn ext_modulus(&self) -> Vec<Vec<u32>> {
        self.ext_modulus.iter().map(|&c| self.base.digits(c)).collect()
    }

    pub fn primitive(&self) -> ExtElement {
        self.primitive
    }

    pub fn has_tables(&self) -> bool {
        self.tables.is_some()
    }

    /// The class of `x` in `F_q[x]/(f)`.
    pub fn x(&self) -> ExtElement {
        if self.m == 1 {
            // F_q itself; there is no separate generator.
            return self.primitive;
        }
        ExtElement(self.base.q)
    }

    pub fn zero(&self) -> ExtElement {
        ExtElement::ZERO
    }

    pub fn one(&self) -> ExtElement {
        ExtElement::ONE
    }

    /// Element with the given packed code, if in range.
    pub fn element(&self, code: u32) -> Option<ExtElement> {
        ((code as u64) < self.size).then_some(ExtElement(code))
    }

    /// Embeds the `F_q` element with code `c < q`.
    pub fn base_element(&self, c: u32) -> ExtElement {
        assert!(c < self.base.q, "{c} is not an F_q code");
        ExtElement(c)
    }

    pub fn is_in_base(&self, x: ExtElement) -> bool {
        x.0 < self.base.q
    }

    /// The `m` coordinates of `x` over `F_q` in the power basis of `x`.
    pub fn coords(&self, x: ExtElement) -> Vec<ExtElement> {
        let q = self.base.q;
        let mut c = x.0;
        (0..self.m)
            .map(|_| {
                let d = c % q;
                c /= q;
                ExtElement(d)
            })
            .collect()
    }

    pub fn from_coords(&self, coords: &[ExtElement]) -> ExtElement {
        debug_assert!(coords.len() <= self.m);
        let q = self.base.q;
        ExtElement(coords.iter().rev().fold(0, |acc, c| {
            debug_assert!(c.0 < q);
            acc * q + c.0
        }))
    }

    /// Coefficients over `F_q`, each a list of `F_p` digits.
    pub fn coeffs(&self, x: ExtElement) -> Vec<Vec<u32>> {
        self.coords(x).iter().map(|c| self.base.digits(c.0)).collect()
    }

    /// Element from `F_q` coefficients given as `F_p` digit lists.
    pub fn from_coeffs(&self, coeffs: &[Vec<u32>]) -> Result<ExtElement> {
        if coeffs.len() > self.m {
            return Err(Error::Parse(format!("more than {} coefficients", self.m)));
        }
        let mut coords = Vec::with_capacity(coeffs.len());
        for c in coeffs {
            if c.len() > self.base.e || c.iter().any(|&d| d >= self.base.p) {
                return Err(Error::Parse(format!("{c:?} is not an F_q element")));
            }
            let mut d = c.clone();
            d.resize(self.base.e, 0);
            coords.push(ExtElement(self.base.from_digits(&d)));
        }
        Ok(self.from_coords(&coords))
    }

    pub fn add(&self, a: ExtElement, b: ExtElement) -> ExtElement {
        ExtElement(digit_add(a.0, b.0, self.base.p, self.m * self.base.e))
    }

    pub fn sub(&self, a: ExtElement, b: ExtElement) -> ExtElement {
        ExtElement(digit_sub(a.0, b.0, self.base.p, self.m * self.base.e))
    }

    pub fn neg(&self, a: ExtElement) -> ExtElement {
        self.sub(ExtElement::ZERO, a)
    }

    pub fn sum<I: IntoIterator<Item = ExtElement>>(&self, it: I) -> ExtElement {
        it.into_iter().fold(ExtElement::ZERO, |acc, x| self.add(acc, x))
    }

    pub fn mul(&self, a: ExtElement, b: ExtElement) -> ExtElement {
        if a.0 == 0 || b.0 == 0 {
            return ExtElement::ZERO;
        }
        match &self.tables {
            Some(t) => {
                let order = t.exp.len();
                let mut i = t.log[a.0 as usize] as usize + t.log[b.0 as usize] as usize;
                if i >= order {
                    i -= order;
                }
                ExtElement(t.exp[i])
            }
            None => self.mul_poly(a, b),
        }
    }

    /// Multiplication by polynomial arithmetic and reduction, independent of
    /// the log tables.
    pub fn mul_poly(&self, a: ExtElement, b: ExtElement) -> ExtElement {
        if a.0 == 0 || b.0 == 0 {
            return ExtElement::ZERO;
        }
        let fa: Vec<u32> = self.coords(a).iter().map(|c| c.0).collect();
        let fb: Vec<u32> = self.coords(b).iter().map(|c| c.0).collect();
        let prod = poly::poly_mul(&self.base, &fa, &fb);
        let mut r = poly::poly_rem(&self.base, &prod, &self.ext_modulus);
        r.resize(self.m, 0);
        let coords: Vec<ExtElement> = r.into_iter().map(ExtElement).collect();
        self.from_coords(&coords)
    }

    pub fn inv(&self, a: ExtElement) -> Option<ExtElement> {
        if a.0 == 0 {
            return None;
        }
        Some(match &self.tables {
            Some(t) => {
                let order = t.exp.len();
                let l = t.log[a.0 as usize] as usize;
                ExtElement(t.exp[(order - l) % order])
            }
            None => self.pow_poly(a, (self.size - 2) as u128),
        })
    }

    /// `a / b`; panics if `b` is zero.
    pub fn div(&self, a: ExtElement, b: ExtElement) -> ExtElement {
        self.mul(a, self.inv(b).expect("division by zero"))
    }

    pub fn pow(&self, a: ExtElement, e: u128) -> ExtElement {
        if e == 0 {
            return ExtElement::ONE;
        }
        if a.0 == 0 {
            return ExtElement::ZERO;
        }
        match &self.tables {
            Some(t) => {
                let order = t.exp.len() as u128;
                let l = t.log[a.0 as usize] as u128;
                ExtElement(t.exp[((l * (e % order)) % order) as usize])
            }
            None => self.pow_poly(a, e),
        }
    }

    fn pow_poly(&self, a: ExtElement, mut e: u128) -> ExtElement {
        let mut result = ExtElement::ONE;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul_poly(result, base);
            }
            base = self.mul_poly(base, base);
            e >>= 1;
        }
        result
    }

    /// `primitive^k`, with `k` taken modulo `q^m - 1`.
    pub fn exp(&self, k: i64) -> ExtElement {
        let order = (self.size - 1) as i64;
        let k = k.rem_euclid(order) as u128;
        match &self.tables {
            Some(t) => ExtElement(t.exp[k as usize]),
            None => self.pow(self.primitive, k),
        }
    }

    /// Discrete logarithm to the base of the primitive element.
    pub fn log(&self, a: ExtElement) -> Option<u64> {
        if a.0 == 0 {
            return None;
        }
        match &self.tables {
            Some(t) => Some(t.log[a.0 as usize] as u64),
            None => Some(self.bsgs_log(a)),
        }
    }

    fn bsgs_log(&self, a: ExtElement) -> u64 {
        let order = self.size - 1;
        let step = (order as f64).sqrt().ceil() as u64;
        let mut baby = HashMap::with_capacity(step as usize);
        let mut cur = ExtElement::ONE;
        for j in 0..step {
            baby.entry(cur.0).or_insert(j);
            cur = self.mul_poly(cur, self.primitive);
        }
        let giant = self.pow_poly(self.primitive, (order - step % order) as u128);
        let mut gamma = a;
        for i in 0..=step {
            if let Some(&j) = baby.get(&gamma.0) {
                return (i * step + j) % order;
            }
            gamma = self.mul_poly(gamma, giant);
        }
        unreachable!("primitive element generates the multiplicative group")
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: ExtElement) -> Option<u64> {
        let l = self.log(a)?;
        let n = self.size - 1;
        Some(n / gcd(l, n))
    }

    pub fn is_primitive(&self, a: ExtElement) -> bool {
        self.order(a) == Some(self.size - 1)
    }

    /// `θ^s(x) = x^{q^s}`, with `s` reduced modulo `m`.
    pub fn frobenius(&self, x: ExtElement, s: i64) -> ExtElement {
        let s = s.rem_euclid(self.m as i64) as u32;
        if s == 0 || x.0 == 0 {
            return x;
        }
        let order = (self.size - 1) as u128;
        let e = (self.base.q as u128).pow(s) % order;
        self.pow(x, e)
    }

    /// Fails with [`Error::BadParameterS`] unless `gcd(s, m) = 1`.
    pub fn check_s(&self, s: i64) -> Result<()> {
        if gcd(s.unsigned_abs(), self.m as u64) != 1 {
            return Err(Error::BadParameterS { s, m: self.m });
        }
        Ok(())
    }

    /// All elements in the deterministic order: `0`, then `a^0, a^1, …`.
    pub fn elements(&self) -> impl Iterator<Item = ExtElement> + Clone + '_ {
        std::iter::once(ExtElement::ZERO).chain((0..self.size as i64 - 1).map(|k| self.exp(k)))
    }

    /// All elements of `F_q`, by code.
    pub fn base_elements(&self) -> impl Iterator<Item = ExtElement> + Clone {
        (0..self.base.q).map(ExtElement)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f4() -> FieldTower {
        FieldTower::prime(2, &[1, 1, 1]).unwrap()
    }

    #[test]
    fn smallest_nontrivial_field() {
        let t = f4();
        assert_eq!(t.size(), 4);
        assert_eq!(t.primitive(), t.x());
        assert_eq!(t.order(t.x()), Some(3));
    }

    #[test]
    fn example_moduli_have_primitive_root_a() {
        let t = FieldTower::prime(2, &[1, 1, 0, 1, 1, 0, 1]).unwrap();
        assert_eq!(t.primitive(), t.x());
        let t = FieldTower::prime(3, &[2, 2, 1, 0, 2, 0, 1]).unwrap();
        assert_eq!(t.primitive(), t.x());
        assert_eq!(t.size(), 729);
    }

    #[test]
    fn reducible_modulus_rejected() {
        assert!(matches!(
            FieldTower::prime(2, &[1, 0, 1]),
            Err(Error::NotIrreducible(_))
        ));
        assert!(matches!(
            FieldTower::prime(2, &[1, 1, 0]),
            Err(Error::InvalidModulus(_))
        ));
        assert!(FieldTower::prime(4, &[1, 1, 1]).is_err());
    }

    #[test]
    fn frobenius_in_f4() {
        let t = f4();
        let a = t.x();
        // a^2 = a + 1
        assert_eq!(t.frobenius(a, 1), t.add(a, t.one()));
        assert_eq!(t.frobenius(a, 2), a);
    }

    #[test]
    fn tables_agree_with_polynomial_route() {
        for t in [
            FieldTower::prime(3, &[2, 2, 1, 0, 2, 0, 1]).unwrap(),
            FieldTower::search(2, 2, 3).unwrap(),
        ] {
            for a in t.elements() {
                for b in t.elements().step_by(7) {
                    assert_eq!(t.mul(a, b), t.mul_poly(a, b));
                }
            }
        }
    }

    #[test]
    fn tower_with_nonprime_base() {
        // F_4 = F_2[y]/(y^2+y+1), F_16 = F_4[x]/(f)
        let t = FieldTower::search(2, 2, 2).unwrap();
        assert_eq!(t.q(), 4);
        assert_eq!(t.size(), 16);
        for c in t.base_elements() {
            assert_eq!(t.frobenius(c, 1), c);
        }
        for x in t.elements() {
            assert_eq!(t.frobenius(x, 2), x);
        }
    }

    #[test]
    fn discrete_log_without_tables() {
        let mut t = FieldTower::prime(3, &[2, 2, 1, 0, 2, 0, 1]).unwrap();
        let with = t.clone();
        t.tables = None;
        for k in [0, 1, 17, 400, 727] {
            let x = with.exp(k);
            assert_eq!(t.log(x), Some(k as u64));
            assert_eq!(t.inv(x), with.inv(x));
            assert_eq!(t.frobenius(x, 2), with.frobenius(x, 2));
        }
    }

    #[test]
    fn coefficient_round_trip() {
        let t = FieldTower::search(3, 2, 2).unwrap();
        for x in t.elements() {
            assert_eq!(t.from_coeffs(&t.coeffs(x)).unwrap(), x);
        }
    }

    #[test]
    fn mod_inverse_basic() {
        assert_eq!(mod_inverse(3, 7), Some(5));
        assert_eq!(mod_inverse(2, 4), None);
    }
}
