//! Line-oriented text formats for fields, elements, matrices, code specs and
//! Cauchy parameters.
//!
//! Elements: `0`, `1`, `a`, `a^k` (powers of the tower's primitive element,
//! `k` may be negative), a plain integer `c < q` for an element of `F_q` by
//! code, or `[c0, c1, …]` for `Σ c_i x^i` with `F_q` codes `c_i`.
//!
//! Key-value files hold one `key = value` per line; `#` starts a comment.
//! Vectors are `[e1, e2, …]` and matrices `[[…], […]]`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::ext_linalg::{BaseMatrix, ExtMatrix};
use crate::field_tower::{ExtElement, FieldTower};
use crate::gabidulin::GabidulinSpec;
use crate::q_cauchy::QCauchyParams;

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

/// Splits on `sep` outside brackets.
fn split_top_level(s: &str, sep: impl Fn(char) -> bool) -> Result<Vec<&str>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => {
                depth -= 1;
                if depth < 0 {
                    return Err(parse_err(format!("unbalanced ']' in {s:?}")));
                }
            }
            c if depth == 0 && sep(c) => {
                out.push(s[start..i].trim());
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(parse_err(format!("unbalanced '[' in {s:?}")));
    }
    out.push(s[start..].trim());
    Ok(out.into_iter().filter(|t| !t.is_empty()).collect())
}

/// Items of a bracketed, comma-separated list.
fn list_items(s: &str) -> Result<Vec<&str>> {
    let s = s.trim();
    let inner = s
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| parse_err(format!("expected [..], got {s:?}")))?;
    split_top_level(inner, |c| c == ',')
}

fn parse_u32(s: &str) -> Result<u32> {
    s.trim().parse().map_err(|_| parse_err(format!("bad integer {s:?}")))
}

fn parse_u32_list(s: &str) -> Result<Vec<u32>> {
    list_items(s)?.into_iter().map(parse_u32).collect()
}

pub fn parse_element(tower: &FieldTower, s: &str) -> Result<ExtElement> {
    let s = s.trim();
    if s.starts_with('[') {
        let coords = parse_u32_list(s)?
            .into_iter()
            .map(|c| {
                if c < tower.q() {
                    Ok(tower.base_element(c))
                } else {
                    Err(parse_err(format!("coefficient {c} is not an F_q code")))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        if coords.len() > tower.m() {
            return Err(parse_err(format!("more than {} coefficients in {s:?}", tower.m())));
        }
        return Ok(tower.from_coords(&coords));
    }
    if s == "a" {
        return Ok(tower.exp(1));
    }
    if let Some(k) = s.strip_prefix("a^") {
        let k: i64 = k.trim().parse().map_err(|_| parse_err(format!("bad exponent in {s:?}")))?;
        return Ok(tower.exp(k));
    }
    let c = parse_u32(s)?;
    if c >= tower.q() {
        return Err(parse_err(format!("{c} is not an F_q code (q = {})", tower.q())));
    }
    Ok(tower.base_element(c))
}

/// `0`, `1`, `a`, or `a^k` with `1 < k < q^m - 1`.
pub fn render_element(tower: &FieldTower, x: ExtElement) -> String {
    match tower.log(x) {
        None => "0".into(),
        Some(0) => "1".into(),
        Some(1) => "a".into(),
        Some(k) => format!("a^{k}"),
    }
}

pub fn parse_vector(tower: &FieldTower, s: &str) -> Result<Vec<ExtElement>> {
    list_items(s)?.into_iter().map(|t| parse_element(tower, t)).collect()
}

pub fn render_vector(tower: &FieldTower, v: &[ExtElement]) -> String {
    let items: Vec<String> = v.iter().map(|&x| render_element(tower, x)).collect();
    format!("[{}]", items.join(", "))
}

/// `[[…], …]`; every row must have the same length.
pub fn parse_nested_matrix(tower: &FieldTower, s: &str) -> Result<ExtMatrix> {
    let rows = list_items(s)?
        .into_iter()
        .map(|r| parse_vector(tower, r))
        .collect::<Result<Vec<_>>>()?;
    ExtMatrix::from_rows(rows)
}

pub fn render_nested_matrix(tower: &FieldTower, m: &ExtMatrix) -> String {
    let rows: Vec<String> = m.to_rows().iter().map(|r| render_vector(tower, r)).collect();
    format!("[{}]", rows.join(", "))
}

/// Matrix file: a `rows cols` header, then one whitespace-separated row per
/// line.
pub fn parse_matrix(tower: &FieldTower, text: &str) -> Result<ExtMatrix> {
    let mut lines = text.lines().map(strip_comment).filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| parse_err("empty matrix file"))?;
    let dims: Vec<usize> = header
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| parse_err(format!("bad header {header:?}"))))
        .collect::<Result<_>>()?;
    let [rows, cols] = dims[..] else {
        return Err(parse_err(format!("header must be `rows cols`, got {header:?}")));
    };
    let mut data = Vec::with_capacity(rows * cols);
    let mut seen = 0;
    for line in lines {
        let tokens = split_top_level(line, char::is_whitespace)?;
        if tokens.len() != cols {
            return Err(parse_err(format!("row {} has {} entries, expected {cols}", seen + 1, tokens.len())));
        }
        for t in tokens {
            data.push(parse_element(tower, t)?);
        }
        seen += 1;
    }
    if seen != rows {
        return Err(parse_err(format!("found {seen} rows, expected {rows}")));
    }
    Ok(ExtMatrix::from_flat(rows, cols, data))
}

pub fn render_matrix(tower: &FieldTower, m: &ExtMatrix) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    for r in m.to_rows() {
        let items: Vec<String> = r.iter().map(|&x| render_element(tower, x)).collect();
        out.push_str(&items.join(" "));
        out.push('\n');
    }
    out
}

/// Ordered `key = value` pairs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct KeyValues(Vec<(String, String)>);

impl KeyValues {
    pub fn parse(text: &str) -> Result<Self> {
        let mut out: Vec<(String, String)> = Vec::new();
        for (no, raw) in text.lines().enumerate() {
            let line = strip_comment(raw);
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| parse_err(format!("line {}: expected key = value", no + 1)))?;
            let k = k.trim().to_string();
            if out.iter().any(|(x, _)| *x == k) {
                return Err(parse_err(format!("duplicate key {k:?}")));
            }
            out.push((k, v.trim().to_string()));
        }
        Ok(KeyValues(out))
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.0.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn require(&self, key: &str) -> Result<&str> {
        self.get(key).ok_or_else(|| parse_err(format!("missing key {key:?}")))
    }

    fn int<T: std::str::FromStr>(&self, key: &str) -> Result<T> {
        let v = self.require(key)?;
        v.parse().map_err(|_| parse_err(format!("{key}: bad integer {v:?}")))
    }
}

/// Field description; missing moduli are filled in by [`FieldTower::search`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    pub p: u32,
    pub e: usize,
    pub m: usize,
    pub base_modulus: Option<Vec<u32>>,
    /// Coefficients over `F_q` as lists of `F_p` digits.
    pub ext_modulus: Option<Vec<Vec<u32>>>,
}

impl FieldSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let kv = KeyValues::parse(text)?;
        let p = kv.int("p")?;
        let e = if kv.get("e").is_some() { kv.int("e")? } else { 1 };
        let m = kv.int("m")?;
        let base_modulus = kv.get("base_modulus").map(parse_u32_list).transpose()?;
        let ext_modulus = kv
            .get("ext_modulus")
            .map(|v| {
                list_items(v)?
                    .into_iter()
                    .map(|item| {
                        if item.starts_with('[') {
                            parse_u32_list(item)
                        } else {
                            Ok(p_digits(parse_u32(item)?, p, e))
                        }
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .transpose()?;
        Ok(FieldSpec {
            p,
            e,
            m,
            base_modulus,
            ext_modulus,
        })
    }

    pub fn to_tower(&self) -> Result<FieldTower> {
        match (&self.base_modulus, &self.ext_modulus) {
            (_, None) => {
                if self.base_modulus.is_some() {
                    return Err(parse_err("base_modulus without ext_modulus"));
                }
                FieldTower::search(self.p, self.e, self.m)
            }
            (base, Some(ext)) => {
                let base = match base {
                    Some(b) => b.clone(),
                    None if self.e == 1 => vec![0, 1],
                    None => return Err(parse_err("base_modulus required when e > 1")),
                };
                FieldTower::build(self.p, self.e, &base, self.m, ext)
            }
        }
    }

    pub fn from_tower(tower: &FieldTower) -> Self {
        FieldSpec {
            p: tower.p(),
            e: tower.e(),
            m: tower.m(),
            base_modulus: Some(tower.base_modulus().to_vec()),
            ext_modulus: Some(tower.ext_modulus()),
        }
    }

    pub fn render(&self) -> String {
        let mut out = format!("p = {}\ne = {}\nm = {}\n", self.p, self.e, self.m);
        if let Some(b) = &self.base_modulus {
            let _ = writeln!(out, "base_modulus = {}", int_list(b));
        }
        if let Some(ext) = &self.ext_modulus {
            let items: Vec<String> = if self.e == 1 {
                ext.iter().map(|c| c.first().copied().unwrap_or(0).to_string()).collect()
            } else {
                ext.iter().map(|c| int_list(c)).collect()
            };
            let _ = writeln!(out, "ext_modulus = [{}]", items.join(", "));
        }
        out
    }
}

fn int_list(v: &[u32]) -> String {
    format!("[{}]", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))
}

fn p_digits(mut c: u32, p: u32, e: usize) -> Vec<u32> {
    (0..e)
        .map(|_| {
            let d = c % p;
            c /= p;
            d
        })
        .collect()
}

/// Code spec: keys `g`, `k`, `s` (plus `field`, resolved by the caller).
pub fn parse_code_spec(tower: &FieldTower, kv: &KeyValues) -> Result<GabidulinSpec> {
    let g = parse_vector(tower, kv.require("g")?)?;
    GabidulinSpec::new(tower, g, kv.int("k")?, kv.int("s")?)
}

pub fn render_code_spec(tower: &FieldTower, spec: &GabidulinSpec, field_ref: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(f) = field_ref {
        let _ = writeln!(out, "field = {f}");
    }
    let _ = writeln!(out, "g = {}", render_vector(tower, spec.g()));
    let _ = writeln!(out, "k = {}", spec.k());
    let _ = writeln!(out, "s = {}", spec.s());
    out
}

/// Cauchy parameters: keys `alpha`, `beta`, `s`, optional `B` (default 0)
/// and `gamma` (default [`FieldTower::default_gamma`]). Not validated.
pub fn parse_params(tower: &FieldTower, kv: &KeyValues) -> Result<QCauchyParams> {
    let alpha = parse_vector(tower, kv.require("alpha")?)?;
    let beta = parse_vector(tower, kv.require("beta")?)?;
    let s = kv.int("s")?;
    let b = match kv.get("B") {
        Some(v) => BaseMatrix::new(tower, parse_nested_matrix(tower, v)?)?,
        None => BaseMatrix::zeros(alpha.len(), beta.len()),
    };
    let gamma = match kv.get("gamma") {
        Some(v) => parse_element(tower, v)?,
        None => tower.default_gamma(),
    };
    Ok(QCauchyParams {
        alpha,
        beta,
        b,
        s,
        gamma,
    })
}

pub fn render_params(tower: &FieldTower, params: &QCauchyParams, field_ref: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(f) = field_ref {
        let _ = writeln!(out, "field = {f}");
    }
    let _ = writeln!(out, "alpha = {}", render_vector(tower, &params.alpha));
    let _ = writeln!(out, "beta = {}", render_vector(tower, &params.beta));
    let _ = writeln!(out, "B = {}", render_nested_matrix(tower, params.b.as_ext()));
    let _ = writeln!(out, "s = {}", params.s);
    let _ = writeln!(out, "gamma = {}", render_element(tower, params.gamma));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f64_example() -> FieldTower {
        FieldTower::prime(2, &[1, 1, 0, 1, 1, 0, 1]).unwrap()
    }

    #[test]
    fn element_forms() {
        let t = f64_example();
        assert_eq!(parse_element(&t, "0").unwrap(), t.zero());
        assert_eq!(parse_element(&t, "1").unwrap(), t.one());
        assert_eq!(parse_element(&t, "a").unwrap(), t.exp(1));
        assert_eq!(parse_element(&t, "a^-1").unwrap(), t.exp(62));
        assert_eq!(parse_element(&t, "[0, 1, 1]").unwrap(), t.add(t.x(), t.mul(t.x(), t.x())));
        assert!(parse_element(&t, "2").is_err());
        assert!(parse_element(&t, "[0,0,0,0,0,0,1]").is_err());
        for x in t.elements() {
            assert_eq!(parse_element(&t, &render_element(&t, x)).unwrap(), x);
        }
    }

    #[test]
    fn base_field_codes() {
        let t = FieldTower::search(2, 2, 3).unwrap();
        let y = parse_element(&t, "2").unwrap();
        assert!(t.is_in_base(y) && !y.is_zero() && y != t.one());
        assert!(parse_element(&t, "4").is_err());
        assert_eq!(parse_element(&t, "[0, 3]").unwrap(), t.mul(t.base_element(3), t.x()));
    }

    #[test]
    fn matrix_round_trip() {
        let t = f64_example();
        let m = ExtMatrix::from_fn(2, 3, |i, j| t.exp((i * 7 + j * 3) as i64));
        let text = render_matrix(&t, &m);
        assert_eq!(parse_matrix(&t, &text).unwrap(), m);
        let spaced = "# comment\n2 2\n[1, 1] a^3\n0   a  # trailing\n";
        let p = parse_matrix(&t, spaced).unwrap();
        assert_eq!(p.get(0, 0), parse_element(&t, "[1,1]").unwrap());
        assert!(parse_matrix(&t, "2 2\n1 1\n").is_err());
        assert_eq!(parse_nested_matrix(&t, &render_nested_matrix(&t, &m)).unwrap(), m);
    }

    #[test]
    fn field_spec_round_trip() {
        let text = "p = 3\nm = 6\next_modulus = [2, 2, 1, 0, 2, 0, 1]  # a^6+2a^4+a^2+2a+2\n";
        let spec = FieldSpec::parse(text).unwrap();
        let t = spec.to_tower().unwrap();
        assert_eq!(t.size(), 729);
        let again = FieldSpec::parse(&FieldSpec::from_tower(&t).render()).unwrap();
        assert_eq!(again.to_tower().unwrap().ext_modulus(), t.ext_modulus());
        let t2 = FieldTower::search(2, 2, 2).unwrap();
        let rendered = FieldSpec::from_tower(&t2).render();
        assert_eq!(FieldSpec::parse(&rendered).unwrap().to_tower().unwrap().ext_modulus(), t2.ext_modulus());
    }

    #[test]
    fn params_round_trip() {
        let t = f64_example();
        let mut p = QCauchyParams::new(&t, vec![t.exp(14), t.exp(15)], vec![t.one(), t.exp(1)], 1);
        p.b = BaseMatrix::new(&t, ExtMatrix::from_fn(2, 2, |i, j| t.base_element(((i + j) % 2) as u32))).unwrap();
        let kv = KeyValues::parse(&render_params(&t, &p, Some("f.txt"))).unwrap();
        assert_eq!(kv.get("field"), Some("f.txt"));
        assert_eq!(parse_params(&t, &kv).unwrap(), p);
    }

    #[test]
    fn duplicate_keys_rejected() {
        assert!(KeyValues::parse("s = 1\ns = 2\n").is_err());
        assert!(KeyValues::parse("nonsense\n").is_err());
    }
}
