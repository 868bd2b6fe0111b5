//! Sparse Laurent polynomials over arbitrary-precision integers.
//!
//! [`Laurent`] is univariate in `v`; [`BiLaurent`] is bivariate in `v` and a
//! second indeterminate `v'`. Both are kept in canonical form: terms sorted by
//! exponent, no zero coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::Value;

use crate::error::{Error, Result};

/// An element of `Z[v, v^-1]`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Laurent {
    terms: Vec<(i64, BigInt)>,
}

/// Which indeterminate a univariate polynomial is lifted into.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    V,
    VPrime,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c * v^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let c = c.into();
        if c.is_zero() {
            Self::zero()
        } else {
            Laurent { terms: vec![(e, c)] }
        }
    }

    /// `v^e`.
    pub fn v_pow(e: i64) -> Self {
        Self::monomial(1, e)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// Builds from arbitrary (exponent, coefficient) pairs, merging duplicates.
    pub fn from_terms<I, C>(it: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut m: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in it {
            *m.entry(e).or_default() += c.into();
        }
        Laurent {
            terms: m.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// `v^L - v^-L`.
    pub fn v_minus_vinv(l: i64) -> Self {
        Self::from_terms([(l, 1), (-l, -1)])
    }

    /// `v^L + v^-L`.
    pub fn v_plus_vinv(l: i64) -> Self {
        Self::from_terms([(l, 1), (-l, 1)])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    pub fn terms(&self) -> &[(i64, BigInt)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `v^n`.
    pub fn coeff(&self, n: i64) -> BigInt {
        match self.terms.binary_search_by(|(e, _)| e.cmp(&n)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    /// Coefficient of `v^n` as a machine integer; panics on overflow.
    pub fn coeff_i64(&self, n: i64) -> i64 {
        self.coeff(n).to_i64().expect("coefficient exceeds i64")
    }

    /// `(min_exp, max_exp)`, or `None` for the zero polynomial.
    pub fn degree_window(&self) -> Option<(i64, i64)> {
        Some((self.terms.first()?.0, self.terms.last()?.0))
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.last().map(|t| t.0)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.first().map(|t| t.0)
    }

    /// Leading (highest-degree) term.
    pub fn top(&self) -> Option<(i64, &BigInt)> {
        self.terms.last().map(|(e, c)| (*e, c))
    }

    /// Lowest-degree term.
    pub fn bottom(&self) -> Option<(i64, &BigInt)> {
        self.terms.first().map(|(e, c)| (*e, c))
    }

    /// Membership in `A_{<0}`.
    pub fn in_neg(&self) -> bool {
        self.max_exp().is_none_or(|m| m < 0)
    }

    /// Membership in `A_{<=0}`.
    pub fn in_nonpos(&self) -> bool {
        self.max_exp().is_none_or(|m| m <= 0)
    }

    /// Ring involution `v -> v^-1`.
    pub fn bar(&self) -> Self {
        Laurent {
            terms: self.terms.iter().rev().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Multiplication by `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Laurent {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Terms with exponent `>= n`.
    pub fn truncate_below(&self, n: i64) -> Self {
        Laurent {
            terms: self.terms.iter().filter(|(e, _)| *e >= n).cloned().collect(),
        }
    }

    /// Terms with exponent `<= n`.
    pub fn truncate_above(&self, n: i64) -> Self {
        Laurent {
            terms: self.terms.iter().filter(|(e, _)| *e <= n).cloned().collect(),
        }
    }

    /// The unique bar-invariant element agreeing with `self` in degrees `>= 0`.
    pub fn bar_symmetrize_nonneg(&self) -> Self {
        let pos = self.truncate_below(0);
        let mut out = pos.clone();
        for (e, c) in pos.terms.iter() {
            if *e > 0 {
                out += &Laurent::monomial(c.clone(), -e);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Laurent::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluation at an integer `v` (negative exponents require `v = ±1`).
    pub fn eval_unit(&self, v: i64) -> BigInt {
        assert!(v == 1 || v == -1, "only v = ±1 is supported");
        let mut s = BigInt::zero();
        for (e, c) in &self.terms {
            if v == -1 && e.rem_euclid(2) == 1 {
                s -= c;
            } else {
                s += c;
            }
        }
        s
    }

    /// Every coefficient is nonnegative.
    pub fn is_nonneg(&self) -> bool {
        self.terms.iter().all(|(_, c)| !c.is_negative())
    }

    /// Every exponent lies in `parity + 2Z`.
    pub fn has_parity(&self, parity: i64) -> bool {
        self.terms.iter().all(|(e, _)| (e - parity).rem_euclid(2) == 0)
    }

    fn add_into(&mut self, other: &Laurent, sign: bool) {
        if other.is_zero() {
            return;
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut j = 0;
        let a = std::mem::take(&mut self.terms);
        let b = &other.terms;
        let mut a = a.into_iter().peekable();
        while let Some((ea, _)) = a.peek() {
            if j >= b.len() {
                break;
            }
            let (eb, cb) = &b[j];
            match ea.cmp(eb) {
                Ordering::Less => out.push(a.next().unwrap()),
                Ordering::Greater => {
                    out.push((*eb, if sign { cb.clone() } else { -cb }));
                    j += 1;
                }
                Ordering::Equal => {
                    let (e, mut c) = a.next().unwrap();
                    if sign {
                        c += cb;
                    } else {
                        c -= cb;
                    }
                    if !c.is_zero() {
                        out.push((e, c));
                    }
                    j += 1;
                }
            }
        }
        out.extend(a);
        for (eb, cb) in &b[j..] {
            out.push((*eb, if sign { cb.clone() } else { -cb }));
        }
        self.terms = out;
    }

    /// `self += c * v^e * other`.
    pub fn add_scaled(&mut self, other: &Laurent, c: &Laurent) {
        if other.is_zero() || c.is_zero() {
            return;
        }
        *self += &(other * c);
    }

    /// Pretty text form: `v^-3 + 2*v^-1 - v`, `0` for zero.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = match *e {
                0 => String::new(),
                1 => "v".to_string(),
                e => format!("v^{}", e),
            };
            if mono.is_empty() {
                s.push_str(&mag.to_string());
            } else if mag.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&format!("{}*{}", mag, mono));
            }
        }
        s
    }

    /// TeX rendering in `v`.
    pub fn to_tex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push(if neg { '-' } else { '+' });
            }
            let mono = match *e {
                0 => String::new(),
                1 => "v".to_string(),
                e => format!("v^{{{}}}", e),
            };
            if mono.is_empty() {
                s.push_str(&mag.to_string());
            } else if mag.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&format!("{}{}", mag, mono));
            }
        }
        s
    }

    /// JSON form: `[[exp, "coef"], ...]`.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(e, c)| Value::Array(vec![Value::from(*e), Value::from(c.to_string())]))
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let arr = v.as_array().ok_or_else(|| Error::Parse("laurent json: expected array".into()))?;
        let mut terms = Vec::new();
        for t in arr {
            let pair = t.as_array().filter(|p| p.len() == 2).ok_or_else(|| Error::Parse("laurent json: expected [exp, coef]".into()))?;
            let e = pair[0].as_i64().ok_or_else(|| Error::Parse("laurent json: bad exponent".into()))?;
            let c: BigInt = match &pair[1] {
                Value::String(s) => s.parse().map_err(|_| Error::Parse(format!("laurent json: bad coefficient {s}")))?,
                Value::Number(n) => BigInt::from(n.as_i64().ok_or_else(|| Error::Parse("laurent json: bad coefficient".into()))?),
                _ => return Err(Error::Parse("laurent json: bad coefficient".into())),
            };
            terms.push((e, c));
        }
        Ok(Self::from_terms(terms))
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({})", self.to_text())
    }
}

impl FromStr for Laurent {
    type Err = Error;

    /// Accepts the pretty form and the explicit `c1*v^e1 + c2*v^e2` form.
    fn from_str(s: &str) -> Result<Self> {
        let src: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if src.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let bad = || Error::Parse(format!("cannot parse polynomial '{s}'"));
        let bytes = src.as_bytes();
        let mut terms = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            let mut sign = BigInt::one();
            while i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') {
                if bytes[i] == b'-' {
                    sign = -sign;
                }
                i += 1;
            }
            let start = i;
            // a term ends at the next '+' or '-' that is not an exponent sign
            while i < bytes.len() {
                let b = bytes[i];
                if (b == b'+' || b == b'-') && i > start && bytes[i - 1] != b'^' {
                    break;
                }
                i += 1;
            }
            let tok = &src[start..i];
            if tok.is_empty() {
                return Err(bad());
            }
            let (coef, mono) = match tok.find('v') {
                None => (tok, ""),
                Some(p) => {
                    let c = tok[..p].trim_end_matches('*');
                    (c, &tok[p..])
                }
            };
            let c: BigInt = if coef.is_empty() { BigInt::one() } else { coef.parse().map_err(|_| bad())? };
            let e: i64 = if mono.is_empty() {
                0
            } else if mono == "v" {
                1
            } else if let Some(rest) = mono.strip_prefix("v^") {
                rest.trim_matches(|c| c == '{' || c == '}' || c == '(' || c == ')').parse().map_err(|_| bad())?
            } else {
                return Err(bad());
            };
            terms.push((e, sign * c));
        }
        Ok(Laurent::from_terms(terms))
    }
}

impl From<i64> for Laurent {
    fn from(c: i64) -> Self {
        Laurent::constant(c)
    }
}

impl Add<&Laurent> for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        out.add_into(rhs, true);
        out
    }
}

impl Add for Laurent {
    type Output = Laurent;
    fn add(mut self, rhs: Laurent) -> Laurent {
        self.add_into(&rhs, true);
        self
    }
}

impl Sub<&Laurent> for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        out.add_into(rhs, false);
        out
    }
}

impl Sub for Laurent {
    type Output = Laurent;
    fn sub(mut self, rhs: Laurent) -> Laurent {
        self.add_into(&rhs, false);
        self
    }
}

impl AddAssign<&Laurent> for Laurent {
    fn add_assign(&mut self, rhs: &Laurent) {
        self.add_into(rhs, true);
    }
}

impl SubAssign<&Laurent> for Laurent {
    fn sub_assign(&mut self, rhs: &Laurent) {
        self.add_into(rhs, false);
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        -&self
    }
}

impl Mul<&Laurent> for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        if self.is_zero() || rhs.is_zero() {
            return Laurent::zero();
        }
        if rhs.terms.len() == 1 {
            let (e, c) = &rhs.terms[0];
            return Laurent {
                terms: self.terms.iter().map(|(x, d)| (x + e, d * c)).collect(),
            };
        }
        if self.terms.len() == 1 {
            return rhs * self;
        }
        let lo = self.terms[0].0 + rhs.terms[0].0;
        let hi = self.terms.last().unwrap().0 + rhs.terms.last().unwrap().0;
        let width = (hi - lo + 1) as usize;
        if width <= 4 * (self.terms.len() * rhs.terms.len()).max(16) {
            let mut dense = vec![BigInt::zero(); width];
            for (ea, ca) in &self.terms {
                for (eb, cb) in &rhs.terms {
                    dense[(ea + eb - lo) as usize] += ca * cb;
                }
            }
            Laurent {
                terms: dense
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (lo + k as i64, c))
                    .collect(),
            }
        } else {
            Laurent::from_terms(
                self.terms
                    .iter()
                    .flat_map(|(ea, ca)| rhs.terms.iter().map(move |(eb, cb)| (ea + eb, ca * cb))),
            )
        }
    }
}

impl Mul for Laurent {
    type Output = Laurent;
    fn mul(self, rhs: Laurent) -> Laurent {
        &self * &rhs
    }
}

/// An element of `Z[v, v^-1, v', v'^-1]`, keyed by `(exp of v, exp of v')`.
#[derive(Clone, Default, PartialEq, Eq, Hash, Debug)]
pub struct BiLaurent {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl BiLaurent {
    pub fn zero() -> Self {
        BiLaurent::default()
    }

    pub fn monomial(c: impl Into<BigInt>, e: i64, e2: i64) -> Self {
        let mut b = BiLaurent::zero();
        b.add_term((e, e2), c.into());
        b
    }

    fn add_term(&mut self, k: (i64, i64), c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(k).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&k);
        }
    }

    /// Embeds `a` as a polynomial in `v` or in `v'`.
    pub fn lift(a: &Laurent, var: Var) -> Self {
        let mut b = BiLaurent::zero();
        for (e, c) in a.terms() {
            let k = match var {
                Var::V => (*e, 0),
                Var::VPrime => (0, *e),
            };
            b.add_term(k, c.clone());
        }
        b
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: i64, e2: i64) -> BigInt {
        self.terms.get(&(e, e2)).cloned().unwrap_or_default()
    }

    /// The ring map `v' -> v`.
    pub fn specialize(&self) -> Laurent {
        Laurent::from_terms(self.terms.iter().map(|((e, e2), c)| (e + e2, c.clone())))
    }

    /// `π_n` in `v'`: the coefficient of `v'^n`, as a polynomial in `v`.
    pub fn coeff_vprime(&self, n: i64) -> Laurent {
        Laurent::from_terms(self.terms.iter().filter(|((_, e2), _)| *e2 == n).map(|((e, _), c)| (*e, c.clone())))
    }
}

impl Add<&BiLaurent> for &BiLaurent {
    type Output = BiLaurent;
    fn add(self, rhs: &BiLaurent) -> BiLaurent {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c.clone());
        }
        out
    }
}

impl Sub<&BiLaurent> for &BiLaurent {
    type Output = BiLaurent;
    fn sub(self, rhs: &BiLaurent) -> BiLaurent {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, -c);
        }
        out
    }
}

impl AddAssign<&BiLaurent> for BiLaurent {
    fn add_assign(&mut self, rhs: &BiLaurent) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, c.clone());
        }
    }
}

impl Mul<&BiLaurent> for &BiLaurent {
    type Output = BiLaurent;
    fn mul(self, rhs: &BiLaurent) -> BiLaurent {
        let mut out = BiLaurent::zero();
        for ((a, a2), c) in &self.terms {
            for ((b, b2), d) in &rhs.terms {
                out.add_term((a + b, a2 + b2), c * d);
            }
        }
        out
    }
}

/// `bi_mul(lift(a, v), lift(b, v'))`-style product of two lifts.
pub fn bi_mul(a: &BiLaurent, b: &BiLaurent) -> BiLaurent {
    a * b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> Laurent {
        s.parse().unwrap()
    }

    #[test]
    fn cancellation() {
        assert_eq!(&l("v + v^-1") + &l("-v^-1"), l("v"));
    }

    #[test]
    fn difference_of_squares() {
        let a = Laurent::v_minus_vinv(1);
        let b = Laurent::v_plus_vinv(1);
        assert_eq!(&a * &b, l("v^2 - v^-2"));
    }

    #[test]
    fn zeta_squared() {
        let z = Laurent::v_plus_vinv(1);
        assert_eq!(&z * &z, l("v^-2 + 2 + v^2"));
    }

    #[test]
    fn bar_and_coeff() {
        assert_eq!(l("v^3").bar(), l("v^-3"));
        let zeta = Laurent::v_plus_vinv(2 - 1);
        assert_eq!(zeta.bar(), zeta);
        assert_eq!(l("v + 2*v^-1").coeff_i64(-1), 2);
        assert_eq!(Laurent::zero().coeff_i64(5), 0);
        assert_eq!(zeta.coeff_i64(1), 1);
    }

    #[test]
    fn windows() {
        assert_eq!(l("v^2 + v^-3").degree_window(), Some((-3, 2)));
        assert_eq!(Laurent::zero().degree_window(), None);
        assert!(l("v^-1 + 3*v^-4").in_neg());
        assert!(!l("1 + v^-1").in_neg());
        assert!(l("1 + v^-1").in_nonpos());
    }

    #[test]
    fn text_forms() {
        assert_eq!(l("-v^-1 + 2 - 3*v^4").to_text(), "-v^-1 + 2 - 3*v^4");
        assert_eq!(l("1*v^-3 + -2*v^0").to_text(), "v^-3 - 2");
        assert_eq!(Laurent::zero().to_text(), "0");
        assert_eq!(l("0"), Laurent::zero());
        assert_eq!(l("v^-2+v^{3}").to_tex(), "v^{-2}+v^{3}");
    }

    #[test]
    fn json_roundtrip() {
        let a = l("-v^-1 + 12345678901234567890123*v^7");
        assert_eq!(Laurent::from_json(&a.to_json()).unwrap(), a);
        assert_eq!(a.to_json().to_string(), r#"[[-1,"-1"],[7,"12345678901234567890123"]]"#);
    }

    #[test]
    fn bilaurent_basics() {
        let x = BiLaurent::lift(&l("v^2"), Var::VPrime);
        assert_eq!(x, BiLaurent::monomial(1, 0, 2));
        let vv = bi_mul(&BiLaurent::lift(&l("v"), Var::V), &BiLaurent::lift(&l("v"), Var::VPrime));
        assert_eq!(vv, BiLaurent::monomial(1, 1, 1));
        let a = l("v + 2 - v^-3");
        let b = l("v^2 - 1");
        let prod = &BiLaurent::lift(&a, Var::V) * &BiLaurent::lift(&b, Var::V);
        assert_eq!(prod.specialize(), &a * &b);
    }

    #[test]
    fn bar_symmetrize() {
        assert_eq!(l("2*v^3 + 1 + 7*v^-5").bar_symmetrize_nonneg(), l("2*v^3 + 1 + 2*v^-3"));
    }
}
