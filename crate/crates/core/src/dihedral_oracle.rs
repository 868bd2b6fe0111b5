//! Closed formulas for the dihedral groups `I2(m)`, `m` finite or infinite.
//!
//! Every element is an alternating word; `a_k` starts with generator `a ∈ {1, 2}` and has
//! length `k`. Nothing here calls the generic group, Hecke or KL engines: expansions are
//! written down directly so they can serve as ground truth for them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rings::Laurent;

/// `a_k`. Canonical: the identity and (finite `m`) the longest element use `first = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DElt {
    len: u32,
    first: u8,
}

impl DElt {
    pub fn one() -> Self {
        DElt { len: 0, first: 1 }
    }

    pub fn len(self) -> u32 {
        self.len
    }

    pub fn is_one(self) -> bool {
        self.len == 0
    }

    pub fn first(self) -> u8 {
        self.first
    }

    /// Generator at the right end.
    pub fn last(self) -> u8 {
        if self.len % 2 == 1 {
            self.first
        } else {
            other(self.first)
        }
    }

    /// Dot-joined word, `""` for the identity.
    pub fn to_text(self) -> String {
        (0..self.len).map(|i| if i % 2 == 0 { self.first } else { other(self.first) }.to_string()).collect::<Vec<_>>().join(".")
    }
}

impl fmt::Display for DElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.first, self.len)
    }
}

fn other(a: u8) -> u8 {
    3 - a
}

/// Coefficients on the `T` or `c` basis, keyed by element.
pub type DMap = BTreeMap<DElt, Laurent>;

fn add_to(m: &mut DMap, w: DElt, c: &Laurent) {
    if c.is_zero() {
        return;
    }
    let e = m.entry(w).or_default();
    *e += c;
    if e.is_zero() {
        m.remove(&w);
    }
}

fn v(e: i64) -> Laurent {
    Laurent::v_pow(e)
}

fn int(n: i64) -> Laurent {
    Laurent::from(n)
}

/// `1 − v^{2L} + v^{4L} − … + (−1)^s v^{2sL}`.
fn alt_sum(s: i64, l: i64) -> Laurent {
    Laurent::from_terms((0..=s).map(|i| (2 * i * l, if i % 2 == 0 { 1 } else { -1 })))
}

/// How much a closed formula pins down one coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoefForm {
    Exact(Laurent),
    /// An unspecified integer multiple of the given polynomial (possibly zero).
    IntMultiple(Laurent),
    /// No information.
    Free,
}

/// A product `c_x c_y` on the c-basis as far as a formula determines it.
/// Elements not listed have coefficient 0.
#[derive(Clone, Debug)]
pub struct ClosedProduct {
    pub name: &'static str,
    pub terms: BTreeMap<DElt, CoefForm>,
}

impl ClosedProduct {
    fn exact(name: &'static str, m: DMap) -> Self {
        ClosedProduct { name, terms: m.into_iter().map(|(w, c)| (w, CoefForm::Exact(c))).collect() }
    }

    /// Whether an actual expansion is consistent with the formula.
    pub fn matches(&self, actual: &DMap) -> bool {
        for w in actual.keys() {
            if !self.terms.contains_key(w) {
                return false;
            }
        }
        self.terms.iter().all(|(w, form)| {
            let a = actual.get(w).cloned().unwrap_or_default();
            match form {
                CoefForm::Exact(c) => &a == c,
                CoefForm::Free => true,
                CoefForm::IntMultiple(m) => is_int_multiple(&a, m),
            }
        })
    }

    /// The exact part as a map; `None` if some coefficient is not exact.
    pub fn as_exact(&self) -> Option<DMap> {
        let mut out = DMap::new();
        for (w, f) in &self.terms {
            match f {
                CoefForm::Exact(c) => add_to(&mut out, *w, c),
                _ => return None,
            }
        }
        Some(out)
    }
}

fn is_int_multiple(a: &Laurent, m: &Laurent) -> bool {
    if a.is_zero() {
        return true;
    }
    let (Some((ea, ca)), Some((em, cm))) = (a.top(), m.top()) else { return false };
    if ea != em || !(ca % cm).is_zero() {
        return false;
    }
    let n: BigInt = ca / cm;
    &m.scale(&n) == a
}

/// `I2(m)` with weights `L(s1) = L1`, `L(s2) = L2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DihedralSpec {
    m: Option<u32>,
    l1: i64,
    l2: i64,
}

impl DihedralSpec {
    /// `m = None` is the infinite dihedral group.
    pub fn new(m: Option<u32>, l1: i64, l2: i64) -> Result<Self> {
        if let Some(m) = m {
            if m < 2 {
                return Err(Error::InvalidMatrix(format!("dihedral order m = {m} must be at least 2")));
            }
            if m % 2 == 1 && l1 != l2 {
                return Err(Error::OddBondWeightMismatch(0, 1));
            }
        }
        if l1 <= 0 {
            return Err(Error::NonPositiveWeight(0, l1));
        }
        if l2 <= 0 {
            return Err(Error::NonPositiveWeight(1, l2));
        }
        Ok(DihedralSpec { m, l1, l2 })
    }

    pub fn m(&self) -> Option<u32> {
        self.m
    }

    pub fn weights(&self) -> (i64, i64) {
        (self.l1, self.l2)
    }

    /// Preset string for the generic engines, e.g. `i2m:4,1,2` or `i2inf:1,2`.
    pub fn preset(&self) -> String {
        match self.m {
            Some(m) => format!("i2m:{m},{},{}", self.l1, self.l2),
            None => format!("i2inf:{},{}", self.l1, self.l2),
        }
    }

    fn w(&self, a: u8) -> i64 {
        if a == 1 {
            self.l1
        } else {
            self.l2
        }
    }

    /// `a_k`, canonicalised.
    pub fn elem(&self, a: u8, k: u32) -> Result<DElt> {
        if a != 1 && a != 2 {
            return Err(Error::Parse(format!("dihedral generator must be 1 or 2, got {a}")));
        }
        if let Some(m) = self.m {
            if k > m {
                return Err(Error::OutOfCoverage(format!("{a}_{k} is longer than the longest element of I2({m})")));
            }
            if k == m {
                return Ok(DElt { len: k, first: 1 });
            }
        }
        if k == 0 {
            return Ok(DElt::one());
        }
        Ok(DElt { len: k, first: a })
    }

    fn e(&self, a: u8, k: i64) -> DElt {
        self.elem(a, k as u32).expect("index inside the group")
    }

    /// Parses dot-joined text (`"1.2.1"`, `""` for the identity).
    pub fn parse(&self, s: &str) -> Result<DElt> {
        let s = s.trim();
        if s.is_empty() || s == "e" {
            return Ok(DElt::one());
        }
        let word: Vec<u8> = s.split('.').map(|t| t.trim().parse::<u8>().map_err(|_| Error::Parse(format!("bad letter '{t}' in '{s}'")))).collect::<Result<_>>()?;
        if word.windows(2).any(|p| p[0] == p[1]) || word.iter().any(|&a| a != 1 && a != 2) {
            return Err(Error::Parse(format!("'{s}' is not an alternating word in 1, 2")));
        }
        self.elem(word[0], word.len() as u32)
    }

    /// `L(a_k)`.
    pub fn weight(&self, w: DElt) -> i64 {
        let k = w.len as i64;
        let na = (k + 1) / 2;
        na * self.w(w.first) + (k - na) * self.w(other(w.first))
    }

    pub fn inverse(&self, w: DElt) -> DElt {
        if w.len == 0 {
            return w;
        }
        self.e(w.last(), w.len as i64)
    }

    /// All elements of length `≤ max_len` in ShortLex order.
    pub fn elements(&self, max_len: u32) -> Vec<DElt> {
        let top = self.m.map_or(max_len, |m| m.min(max_len));
        let mut out = vec![DElt::one()];
        for k in 1..=top {
            if Some(k) == self.m {
                out.push(self.e(1, k as i64));
            } else {
                out.push(self.e(1, k as i64));
                out.push(self.e(2, k as i64));
            }
        }
        out
    }

    /// `ζ = v^{L1−L2} + v^{L2−L1}`.
    pub fn zeta(&self) -> Laurent {
        Laurent::v_plus_vinv(self.l2 - self.l1)
    }

    /// `f_a = v^{L_a} + v^{−L_a}`.
    pub fn f(&self, a: u8) -> Laurent {
        Laurent::v_plus_vinv(self.w(a))
    }

    fn require_l2_gt_l1(&self) -> Result<()> {
        if self.l2 > self.l1 {
            Ok(())
        } else {
            Err(Error::UnsupportedWeights(format!("needs L2 > L1, got ({}, {})", self.l1, self.l2)))
        }
    }

    fn require_infinite(&self) -> Result<()> {
        match self.m {
            None => Ok(()),
            Some(m) => Err(Error::OutOfCoverage(format!("formula is for the infinite dihedral group, not m = {m}"))),
        }
    }

    /// `Γ_w = Σ_{y≤w} v^{−L(w)+L(y)} T_y`.
    pub fn gamma(&self, w: DElt) -> DMap {
        let lw = self.weight(w);
        let mut out = DMap::new();
        for y in self.elements(w.len) {
            if y.len < w.len || y == w {
                out.insert(y, v(self.weight(y) - lw));
            }
        }
        out
    }

    /// `Γ′_w` for `L2 > L1`, from the explicit expansions.
    pub fn gamma_prime(&self, w: DElt) -> Result<DMap> {
        self.require_l2_gt_l1()?;
        let (l1, l2) = (self.l1, self.l2);
        let k2 = w.len as i64;
        if k2 % 2 == 0 || k2 == 1 && w.first == 1 || Some(w.len) == self.m {
            return Ok(self.gamma(w));
        }
        let k = (k2 - 1) / 2;
        let mut out = DMap::new();
        if w.first == 2 {
            for s in 0..k {
                let a = &alt_sum(s, l1) * &v(-s * (l1 + l2));
                let j = 2 * k - 2 * s;
                add_to(&mut out, self.e(2, j + 1), &a);
                add_to(&mut out, self.e(2, j), &(&a * &v(-l2)));
                add_to(&mut out, self.e(1, j), &(&a * &v(-l2)));
                add_to(&mut out, self.e(1, j - 1), &(&a * &v(-2 * l2)));
            }
            let a = &alt_sum(k, l1) * &v(-k * (l1 + l2));
            add_to(&mut out, self.e(2, 1), &a);
            add_to(&mut out, DElt::one(), &(&a * &v(-l2)));
        } else {
            let lw = self.weight(w);
            add_to(&mut out, w, &int(1));
            add_to(&mut out, self.e(1, 2 * k), &v(-l1));
            add_to(&mut out, self.e(2, 2 * k), &v(-l1));
            add_to(&mut out, self.e(2, 2 * k - 1), &v(-2 * l1));
            let lower = self.e(1, 2 * k - 1);
            let one_plus = Laurent::from_terms([(0, 1), (2 * l1, 1)]);
            for y in self.elements(lower.len) {
                if y.len < lower.len || y == lower {
                    add_to(&mut out, y, &(&v(self.weight(y) - lw) * &one_plus));
                }
            }
        }
        Ok(out)
    }

    /// `Γ′_w` rewritten as a signed sum of `Γ`'s.
    pub fn gamma_prime_via_gamma(&self, w: DElt) -> Result<DMap> {
        self.require_l2_gt_l1()?;
        let k2 = w.len as i64;
        if k2 % 2 == 0 || k2 == 1 && w.first == 1 || Some(w.len) == self.m {
            return Ok(self.gamma(w));
        }
        let k = (k2 - 1) / 2;
        let d = self.l1 - self.l2;
        let mut out = DMap::new();
        if w.first == 2 {
            for s in 0..=k {
                let c = Laurent::monomial(if s % 2 == 0 { 1 } else { -1 }, s * d);
                for (y, a) in self.gamma(self.e(2, 2 * k - 2 * s + 1)) {
                    add_to(&mut out, y, &(&a * &c));
                }
            }
        } else {
            for (y, a) in self.gamma(w) {
                add_to(&mut out, y, &a);
            }
            for (y, a) in self.gamma(self.e(1, 2 * k - 1)) {
                add_to(&mut out, y, &(&a * &v(d)));
            }
        }
        Ok(out)
    }

    /// `c_w` on the T-basis: `Γ_w` for equal weights, `Γ′_w` for `L2 > L1`.
    pub fn c_closed_form(&self, w: DElt) -> Result<DMap> {
        if self.l1 == self.l2 {
            Ok(self.gamma(w))
        } else if self.l2 > self.l1 {
            self.gamma_prime(w)
        } else {
            Err(Error::UnsupportedWeights(format!("L1 = {} > L2 = {}; swap the generators first", self.l1, self.l2)))
        }
    }

    /// `ξ_n`: `v^{L1} − v^{−L1}` for odd `n`, `v^{L2} − v^{−L2}` for even `n`.
    fn xi(&self, n: i64) -> Laurent {
        Laurent::v_minus_vinv(if n % 2 == 1 { self.l1 } else { self.l2 })
    }

    /// `T_x T_y` for the infinite dihedral group.
    pub fn t_mul(&self, x: DElt, y: DElt) -> Result<DMap> {
        self.require_infinite()?;
        let mut out = DMap::new();
        if x.is_one() || y.is_one() {
            let w = if x.is_one() { y } else { x };
            out.insert(w, int(1));
            return Ok(out);
        }
        let (a, k, b, kp) = (x.first, x.len as i64, y.first, y.len as i64);
        if x.last() != b {
            out.insert(self.e(a, k + kp), int(1));
            return Ok(out);
        }
        let prod = match k.cmp(&kp) {
            std::cmp::Ordering::Greater => self.e(a, k - kp),
            std::cmp::Ordering::Less => self.e(if k % 2 == 0 { b } else { other(b) }, kp - k),
            std::cmp::Ordering::Equal => DElt::one(),
        };
        add_to(&mut out, prod, &int(1));
        for u in 1..=k.min(kp) {
            add_to(&mut out, self.e(a, k + kp - 2 * u + 1), &self.xi(b as i64 + u - 1));
        }
        Ok(out)
    }

    /// All closed formulas covering `c_x c_y` (at least one, or `OutOfCoverage`).
    pub fn product_closed_form(&self, x: DElt, y: DElt) -> Result<Vec<ClosedProduct>> {
        if x.is_one() || y.is_one() {
            let w = if x.is_one() { y } else { x };
            return Ok(vec![ClosedProduct::exact("unit", DMap::from([(w, int(1))]))]);
        }
        let mut out = Vec::new();
        match self.m {
            None if self.l1 == self.l2 => {
                if x.len % 2 == 1 && y.len % 2 == 1 && x.first == y.first {
                    out.push(self.odd_equal(x, y));
                }
            }
            None if self.l2 > self.l1 => {
                out.push(self.infinite_product(x, y));
                if x.first == 2 && y.first == 2 && x.len % 2 == 1 && y.len % 2 == 1 {
                    out.push(self.odd_two_family(x, y));
                }
                if x.first == 1 && y.first == 1 && x.len % 2 == 1 && y.len % 2 == 1 && x.len >= 3 && y.len >= 3 {
                    out.push(self.odd_one_shape(x, y));
                }
            }
            Some(m) if m >= 4 && m % 2 == 0 && self.l2 > self.l1 => {
                let t = self.e(2, m as i64 - 1);
                if x == t && y == t {
                    let mut terms = BTreeMap::new();
                    terms.insert(t, CoefForm::Exact(self.top_square_p0()?));
                    terms.insert(self.e(1, m as i64), CoefForm::Free);
                    out.push(ClosedProduct { name: "square of 2_{m-1}", terms });
                }
            }
            _ => {}
        }
        if out.is_empty() {
            return Err(Error::OutOfCoverage(format!("no closed formula for c_{x} c_{y} in {}", self.preset())));
        }
        Ok(out)
    }

    /// `c_{a_{2k+1}} c_{a_{2k′+1}}`, equal weights, `m = ∞`.
    fn odd_equal(&self, x: DElt, y: DElt) -> ClosedProduct {
        let (k, kp) = (x.len as i64 / 2, y.len as i64 / 2);
        let a = x.first;
        let mut m = DMap::new();
        for u in 0..=(2 * k).min(2 * kp) {
            add_to(&mut m, self.e(a, 2 * k + 2 * kp + 1 - 2 * u), &self.f(a));
        }
        ClosedProduct::exact("odd words, equal weights", m)
    }

    /// `c_{2_{2k+1}} c_{2_{2k′+1}}`, `L2 > L1`.
    fn odd_two_family(&self, x: DElt, y: DElt) -> ClosedProduct {
        let (k, kp) = (x.len as i64 / 2, y.len as i64 / 2);
        let mut m = DMap::new();
        for u in 0..=k.min(kp) {
            add_to(&mut m, self.e(2, 2 * k + 2 * kp + 1 - 4 * u), &self.f(2));
        }
        ClosedProduct::exact("odd words starting with 2", m)
    }

    /// `c_{1_{2k+1}} c_{1_{2k′+1}}`, `k, k′ ≥ 1`: support and the `ζ` pattern only.
    /// The index runs over `[0, min(2k, 2k′)]`, as in the exact table for the same products.
    fn odd_one_shape(&self, x: DElt, y: DElt) -> ClosedProduct {
        let (k, kp) = (x.len as i64 / 2, y.len as i64 / 2);
        let f1 = self.f(1);
        let mut terms = BTreeMap::new();
        for u in 0..=(2 * k).min(2 * kp) {
            let w = self.e(1, 2 * k + 2 * kp + 1 - 2 * u);
            let form = if u % 2 == 1 { CoefForm::Exact(&f1 * &self.zeta()) } else { CoefForm::IntMultiple(f1.clone()) };
            terms.insert(w, form);
        }
        ClosedProduct { name: "odd words starting with 1 (shape)", terms }
    }

    /// Coefficients `p_u`, `u ∈ [0, 2k+2]`, of the `m = ∞`, `L2 > L1` product table.
    fn p_coeffs(&self, k: i64, kp: i64) -> Vec<Laurent> {
        let z = self.zeta();
        (0..=2 * k + 2)
            .map(|u| {
                if u == 0 {
                    int(1)
                } else if u == 2 * k + 2 {
                    int((kp > 2 * k + 3) as i64)
                } else if u % 2 == 1 {
                    if kp > u {
                        z.clone()
                    } else {
                        Laurent::zero()
                    }
                } else {
                    int((kp > u - 1) as i64 + (kp > u + 1) as i64)
                }
            })
            .collect()
    }

    /// Full `c_x c_y` for `m = ∞`, `L2 > L1`, `x, y ≠ 1`.
    fn infinite_product(&self, x: DElt, y: DElt) -> ClosedProduct {
        let f1 = self.f(1);
        let f2 = self.f(2);
        let mut m = DMap::new();
        let (lx, kx) = (x.last(), x.len as i64);
        let (fy, ky) = (y.first, y.len as i64);
        match (lx, fy) {
            (2, 2) => {
                // x = 2_{2k+1} or 1_{2k+2}
                let k = (kx - 1) / 2;
                let kp = ky;
                for u in 0..=k {
                    if 2 * u > kp - 1 {
                        break;
                    }
                    let w = if x.first == 2 { self.e(2, 2 * k + kp - 4 * u) } else { self.e(1, 2 * k + kp + 1 - 4 * u) };
                    add_to(&mut m, w, &f2);
                }
            }
            (2, 1) => {
                let k = (kx - 1) / 2;
                let kp = ky;
                for (u, p) in self.p_coeffs(k, kp).iter().enumerate() {
                    let u = u as i64;
                    if p.is_zero() {
                        continue;
                    }
                    let w = if x.first == 2 { self.e(2, kp + 2 * k + 1 - 2 * u) } else { self.e(1, kp + 2 * k + 2 - 2 * u) };
                    add_to(&mut m, w, p);
                }
            }
            (1, 1) => {
                let kp = ky;
                if kx == 1 {
                    add_to(&mut m, y, &f1);
                } else {
                    // x = 2_{2k+2} or 1_{2k+3}
                    let k = (kx - 2) / 2;
                    for (u, p) in self.p_coeffs(k, kp).iter().enumerate() {
                        let u = u as i64;
                        if p.is_zero() {
                            continue;
                        }
                        let w = if x.first == 2 { self.e(2, kp + 2 * k + 1 - 2 * u) } else { self.e(1, kp + 2 * k + 2 - 2 * u) };
                        add_to(&mut m, w, &(&f1 * p));
                    }
                }
            }
            _ => {
                // x ends in 1, y starts with 2: the anti-involution image of the (2, 1) case
                let kp = kx;
                let k = (ky - 1) / 2;
                for (u, p) in self.p_coeffs(k, kp).iter().enumerate() {
                    let u = u as i64;
                    if p.is_zero() {
                        continue;
                    }
                    let w = if ky % 2 == 1 { self.e(2, kp + 2 * k + 1 - 2 * u) } else { self.e(1, kp + 2 * k + 2 - 2 * u) };
                    add_to(&mut m, self.inverse(w), p);
                }
            }
        }
        ClosedProduct::exact("infinite dihedral table", m)
    }

    /// `p_0` in `c_{2_{m−1}}² = p_0 c_{2_{m−1}} + q c_{2_m}`, `m = 2k+2 ≥ 4`, `L2 > L1`.
    pub fn top_square_p0(&self) -> Result<Laurent> {
        self.require_l2_gt_l1()?;
        let m = match self.m {
            Some(m) if m >= 4 && m % 2 == 0 => m as i64,
            _ => return Err(Error::OutOfCoverage(format!("needs even m >= 4, got {}", self.preset()))),
        };
        let k = (m - 2) / 2;
        let d = self.l2 - self.l1;
        let sum = Laurent::from_terms((0..=k).map(|j| ((k - 2 * j) * d, 1)));
        let sign = int(if k % 2 == 0 { 1 } else { -1 });
        Ok(&(&sign * &self.f(2)) * &sum)
    }

    /// The functional `D_{s1}` as a formal sum `Σ a_y T_y` (so `a_y = D_{s1}(T_{y⁻¹})`),
    /// truncated to `l(y) ≤ trunc_len`. Needs `L2 > L1` and `m` even or infinite.
    pub fn d_s1_series(&self, trunc_len: u32) -> Result<DMap> {
        self.require_l2_gt_l1()?;
        let (l1, l2) = (self.l1, self.l2);
        let full = match self.m {
            None => (trunc_len as i64 + 1) / 2,
            Some(m) => (m as i64 - 2) / 2,
        };
        let mut out = DMap::new();
        let put = |out: &mut DMap, a: u8, k: i64, c: &Laurent| {
            if k <= trunc_len as i64 {
                add_to(out, self.e(a, k), c);
            }
        };
        for s in 0..full {
            let a = &alt_sum(s, l1) * &v(-s * (l1 + l2));
            put(&mut out, 1, 2 * s + 1, &a);
            put(&mut out, 2, 2 * s + 2, &-(&a * &v(-l2)));
            put(&mut out, 1, 2 * s + 2, &-(&a * &v(-l2)));
            put(&mut out, 2, 2 * s + 3, &(&a * &v(-2 * l2)));
        }
        if self.m.is_some() {
            let k = full;
            let a = &alt_sum(k, l1) * &v(-k * (l1 + l2));
            put(&mut out, 1, 2 * k + 1, &a);
            put(&mut out, 2, 2 * k + 2, &-(&a * &v(-l2)));
        }
        Ok(out)
    }

    /// The a-function, for `m = ∞` with `L2 ≥ L1` or `4 ≤ m < ∞` with `L2 > L1` or `L1 = L2`.
    pub fn a_value(&self, w: DElt) -> Result<i64> {
        let (l1, l2) = (self.l1, self.l2);
        if l1 > l2 {
            return Err(Error::UnsupportedWeights(format!("L1 = {l1} > L2 = {l2}; swap the generators first")));
        }
        let k = w.len as i64;
        if k == 0 {
            return Ok(0);
        }
        if k == 1 {
            return Ok(if w.first == 1 { l1 } else { l2 });
        }
        match self.m {
            None => Ok(l2),
            Some(m) if m >= 4 => {
                let m = m as i64;
                if k == m {
                    Ok(m * (l1 + l2) / 2)
                } else if k == m - 1 && w.first == 2 {
                    Ok((m * l2 - (m - 2) * l1) / 2)
                } else {
                    Ok(l2)
                }
            }
            Some(m) => Err(Error::OutOfCoverage(format!("a-values need m >= 4, got m = {m}"))),
        }
    }

    /// `Δ(w)` for `m = ∞`, `L2 > L1`.
    pub fn delta(&self, w: DElt) -> Result<i64> {
        self.require_infinite()?;
        self.require_l2_gt_l1()?;
        let (l1, l2) = (self.l1, self.l2);
        let n = w.len as i64;
        let k = n / 2;
        Ok(match (w.first, n % 2) {
            (_, 0) => k * (l1 + l2),
            (2, _) => -k * l1 + (k + 1) * l2,
            _ if n == 1 => l1,
            _ => (k - 1) * l1 + k * l2,
        })
    }

    /// Distinguished involutions for `m = ∞`, `L2 > L1`: `1, 2_1, 1_1, 1_3`.
    pub fn dset(&self) -> Result<Vec<DElt>> {
        self.require_infinite()?;
        self.require_l2_gt_l1()?;
        let mut d = vec![DElt::one(), self.e(2, 1), self.e(1, 1), self.e(1, 3)];
        d.sort();
        Ok(d)
    }

    /// Triples `(x, y, d)`, `d` distinguished, with `γ_{x,y,d} ≠ 0`, for `l(x), l(y) ≤ max_len`.
    pub fn gamma_d_support(&self, max_len: u32) -> Result<BTreeSet<(DElt, DElt, DElt)>> {
        self.dset()?;
        let n = max_len as i64;
        let mut out = BTreeSet::new();
        out.insert((DElt::one(), DElt::one(), DElt::one()));
        out.insert((self.e(1, 1), self.e(1, 1), self.e(1, 1)));
        let (d2, d13) = (self.e(2, 1), self.e(1, 3));
        for k in 0.. {
            if 2 * k + 1 > n {
                break;
            }
            out.insert((self.e(2, 2 * k + 1), self.e(2, 2 * k + 1), d2));
            if 2 * k + 2 <= n {
                out.insert((self.e(1, 2 * k + 2), self.e(2, 2 * k + 2), d13));
                out.insert((self.e(2, 2 * k + 2), self.e(1, 2 * k + 2), d2));
            }
            if 2 * k + 3 <= n {
                out.insert((self.e(1, 2 * k + 3), self.e(1, 2 * k + 3), d13));
            }
        }
        Ok(out)
    }

    /// `t_x t_y` in the ring J, `m = ∞`, `L2 > L1`.
    pub fn j_product(&self, x: DElt, y: DElt) -> Result<BTreeMap<DElt, i64>> {
        self.require_infinite()?;
        self.require_l2_gt_l1()?;
        let mut out = BTreeMap::new();
        if x.is_one() && y.is_one() {
            out.insert(x, 1);
            return Ok(out);
        }
        let one1 = self.e(1, 1);
        if x == one1 && y == one1 {
            out.insert(x, 1);
            return Ok(out);
        }
        // (family of x, k) with x = 2_{2k+1}, 1_{2k+3}, 2_{2k+2}, 1_{2k+2}
        let fam = |w: DElt| -> Option<(u8, i64)> {
            let n = w.len as i64;
            match (w.first, n % 2) {
                _ if n == 0 => None,
                (2, 1) => Some((0, (n - 1) / 2)),
                (1, 1) if n >= 3 => Some((1, (n - 3) / 2)),
                (2, 0) => Some((2, (n - 2) / 2)),
                (1, 0) => Some((3, (n - 2) / 2)),
                _ => None,
            }
        };
        let (Some((fx, k)), Some((fy, kp))) = (fam(x), fam(y)) else { return Ok(out) };
        let kt = k.min(kp);
        // (result generator, offset) so that the terms are a_{2k+2k'+offset-4u}
        let rule: Option<(u8, i64)> = match (fx, fy) {
            (0, 0) => Some((2, 1)),
            (1, 1) => Some((1, 3)),
            (0, 2) => Some((2, 2)),
            (1, 3) => Some((1, 2)),
            (2, 1) => Some((2, 2)),
            (2, 3) => Some((2, 1)),
            (3, 0) => Some((1, 2)),
            (3, 2) => Some((1, 3)),
            _ => None,
        };
        if let Some((a, off)) = rule {
            for u in 0..=kt {
                *out.entry(self.e(a, 2 * k + 2 * kp + off - 4 * u)).or_insert(0) += 1;
            }
        }
        Ok(out)
    }

    /// `j_product` over all pairs of elements of length `≤ max_len`, zero products omitted.
    pub fn j_table_infinite(&self, max_len: u32) -> Result<BTreeMap<(DElt, DElt), BTreeMap<DElt, i64>>> {
        let el = self.elements(max_len);
        let mut out = BTreeMap::new();
        for &x in &el {
            for &y in &el {
                let p = self.j_product(x, y)?;
                if !p.is_empty() {
                    out.insert((x, y), p);
                }
            }
        }
        Ok(out)
    }

    /// `a_value` over all elements of length `≤ max_len`.
    pub fn a_table(&self, max_len: u32) -> Result<BTreeMap<DElt, i64>> {
        self.elements(max_len).into_iter().map(|w| Ok((w, self.a_value(w)?))).collect()
    }
}
