//! Small polynomial helpers over the prime field and the base field, used to
//! validate moduli and to search for default ones.

/// Minimal interface of a small field whose elements are encoded as integers
/// `0..size`.
pub(crate) trait SmallField {
    fn size(&self) -> u32;
    fn add(&self, a: u32, b: u32) -> u32;
    fn sub(&self, a: u32, b: u32) -> u32;
    fn mul(&self, a: u32, b: u32) -> u32;

    fn inv(&self, a: u32) -> u32 {
        debug_assert!(a != 0);
        // a^(size - 2)
        let mut result = 1;
        let mut base = a;
        let mut e = self.size() - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }
}

/// `F_p` with elements `0..p`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct PrimeField(pub u32);

impl SmallField for PrimeField {
    fn size(&self) -> u32 {
        self.0
    }
    fn add(&self, a: u32, b: u32) -> u32 {
        (a + b) % self.0
    }
    fn sub(&self, a: u32, b: u32) -> u32 {
        (a + self.0 - b) % self.0
    }
    fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.0 as u64) as u32
    }
}

/// `F_q = F_p[y]/(base_modulus)`, elements encoded by their base-`p` digits
/// (little-endian coefficients in `y`).
#[derive(Debug, Clone)]
pub(crate) struct BaseField {
    pub p: u32,
    pub e: usize,
    pub q: u32,
    /// Monic, length `e + 1`.
    pub modulus: Vec<u32>,
}

impl BaseField {
    pub fn new(p: u32, modulus: Vec<u32>) -> Self {
        let e = modulus.len() - 1;
        BaseField {
            p,
            e,
            q: p.pow(e as u32),
            modulus,
        }
    }

    pub fn digits(&self, mut a: u32) -> Vec<u32> {
        let mut d = Vec::with_capacity(self.e);
        for _ in 0..self.e {
            d.push(a % self.p);
            a /= self.p;
        }
        d
    }

    pub fn from_digits(&self, d: &[u32]) -> u32 {
        d.iter().rev().fold(0, |acc, &x| acc * self.p + x)
    }
}

impl SmallField for BaseField {
    fn size(&self) -> u32 {
        self.q
    }

    fn add(&self, a: u32, b: u32) -> u32 {
        digit_add(a, b, self.p, self.e)
    }

    fn sub(&self, a: u32, b: u32) -> u32 {
        digit_sub(a, b, self.p, self.e)
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        if self.e == 1 {
            return PrimeField(self.p).mul(a, b);
        }
        let fp = PrimeField(self.p);
        let prod = poly_mul(&fp, &self.digits(a), &self.digits(b));
        let r = poly_rem(&fp, &prod, &self.modulus);
        let mut d = r;
        d.resize(self.e, 0);
        self.from_digits(&d)
    }
}

/// Adds two integers digit-wise in base `p` over `n` digits, modulo `p`.
pub(crate) fn digit_add(a: u32, b: u32, p: u32, n: usize) -> u32 {
    if p == 2 {
        return a ^ b;
    }
    let (mut a, mut b) = (a, b);
    let mut out = 0u32;
    let mut place = 1u32;
    for i in 0..n {
        let d = (a % p + b % p) % p;
        out += d * place;
        a /= p;
        b /= p;
        if i + 1 < n {
            place *= p;
        }
    }
    out
}

pub(crate) fn digit_sub(a: u32, b: u32, p: u32, n: usize) -> u32 {
    if p == 2 {
        return a ^ b;
    }
    let (mut a, mut b) = (a, b);
    let mut out = 0u32;
    let mut place = 1u32;
    for i in 0..n {
        let d = (a % p + p - b % p) % p;
        out += d * place;
        a /= p;
        b /= p;
        if i + 1 < n {
            place *= p;
        }
    }
    out
}

pub(crate) fn trim<F: SmallField>(_f: &F, mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub(crate) fn poly_mul<F: SmallField>(f: &F, a: &[u32], b: &[u32]) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    out
}

/// Remainder of `a` modulo `m` (`m` nonzero, trailing zeros allowed in `a`).
pub(crate) fn poly_rem<F: SmallField>(f: &F, a: &[u32], m: &[u32]) -> Vec<u32> {
    let m = trim(f, m.to_vec());
    let dm = m.len() - 1;
    let lead_inv = f.inv(m[dm]);
    let mut r = trim(f, a.to_vec());
    while r.len() > dm {
        let top = r.len() - 1;
        let c = f.mul(r[top], lead_inv);
        let shift = top - dm;
        for (i, &mi) in m.iter().enumerate() {
            r[shift + i] = f.sub(r[shift + i], f.mul(c, mi));
        }
        r = trim(f, r);
    }
    r
}

/// All monic polynomials of degree `d` over `f`, coefficients little-endian.
pub(crate) fn monics<F: SmallField>(f: &F, d: usize) -> impl Iterator<Item = Vec<u32>> {
    let size = f.size() as u64;
    let total = size.pow(d as u32);
    (0..total).map(move |mut idx| {
        let mut c = Vec::with_capacity(d + 1);
        for _ in 0..d {
            c.push((idx % size) as u32);
            idx /= size;
        }
        c.push(1);
        c
    })
}

/// Irreducibility by root absence and trial division by all monics of degree
/// at most `deg / 2`.
pub(crate) fn is_irreducible<F: SmallField>(f: &F, poly: &[u32]) -> bool {
    let poly = trim(f, poly.to_vec());
    if poly.len() < 2 {
        return false;
    }
    let deg = poly.len() - 1;
    if deg == 1 {
        return true;
    }
    for x in 0..f.size() {
        if eval(f, &poly, x) == 0 {
            return false;
        }
    }
    for d in 2..=deg / 2 {
        for divisor in monics(f, d) {
            if poly_rem(f, &poly, &divisor).is_empty() {
                return false;
            }
        }
    }
    true
}

pub(crate) fn eval<F: SmallField>(f: &F, poly: &[u32], x: u32) -> u32 {
    poly.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn irreducible_over_f2() {
        let f = PrimeField(2);
        assert!(is_irreducible(&f, &[1, 1, 1]));
        assert!(!is_irreducible(&f, &[1, 0, 1]));
        // x^4 + x^2 + 1 = (x^2 + x + 1)^2 has no roots
        assert!(!is_irreducible(&f, &[1, 0, 1, 0, 1]));
        assert!(is_irreducible(&f, &[1, 1, 0, 1, 1, 0, 1]));
    }

    #[test]
    fn irreducible_over_f3() {
        let f = PrimeField(3);
        assert!(is_irreducible(&f, &[2, 2, 1, 0, 2, 0, 1]));
        assert!(is_irreducible(&f, &[1, 0, 1]));
        assert!(!is_irreducible(&f, &[2, 0, 1]));
    }

    #[test]
    fn base_field_f4_multiplication() {
        let f4 = BaseField::new(2, vec![1, 1, 1]);
        // y * y = y + 1
        assert_eq!(f4.mul(2, 2), 3);
        for a in 1..4 {
            assert_eq!(f4.mul(a, f4.inv(a)), 1);
        }
    }

    #[test]
    fn digit_arithmetic_base3() {
        // 5 = (2,1), 7 = (1,2) -> (0,0)
        assert_eq!(digit_add(5, 7, 3, 2), 0);
        assert_eq!(digit_sub(0, 7, 3, 2), 5);
    }
}
