//! Multisets, symbols and bipartitions for type B/C with parameters `(a, b)`: ranks,
//! complements, a-values, Hoefsmit products, admissible involutions and families.
//!
//! `W_n` has `L(s_1) = … = L(s_{n−1}) = a` and `L(s_n) = b`; write `b = a r + b′`, `0 ≤ b′ < a`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::rings::Laurent;

/// A partition as a weakly decreasing list of positive parts.
pub type Partition = Vec<i64>;

/// `(r, b′)` with `b = a r + b′`.
pub fn split_b(a: i64, b: i64) -> Result<(i64, i64)> {
    if a <= 0 || b < 0 {
        return Err(Error::PreconditionViolated(format!("need a > 0 and b >= 0, got a = {a}, b = {b}")));
    }
    Ok((b / a, b % a))
}

fn binom2(x: i64) -> i64 {
    x * (x - 1) / 2
}

/// `aN² + N(b−a) + a·C(r,2) + b′r`: entry sum of the rank-0 multiset.
fn base_sum(a: i64, b: i64, n_big: i64) -> i64 {
    let (r, bp) = (b / a, b % a);
    a * n_big * n_big + n_big * (b - a) + a * binom2(r) + bp * r
}

pub fn conjugate(p: &[i64]) -> Partition {
    let m = p.first().copied().unwrap_or(0);
    (1..=m).map(|j| p.iter().filter(|&&x| x >= j).count() as i64).collect()
}

fn normalize(p: &[i64]) -> Partition {
    let mut v: Vec<i64> = p.iter().copied().filter(|&x| x > 0).collect();
    v.sort_unstable_by(|x, y| y.cmp(x));
    v
}

/// All partitions of `n`, largest first.
pub fn partitions(n: i64) -> Vec<Partition> {
    fn go(n: i64, max: i64, cur: &mut Vec<i64>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            cur.push(k);
            go(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All ordered pairs of partitions of total size `n`.
pub fn bipartitions(n: i64) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for k in (0..=n).rev() {
        for al in partitions(k) {
            for be in partitions(n - k) {
                out.push((al.clone(), be));
            }
        }
    }
    out
}

/// `a_{π_α} = Σ_i a·C(α′_i, 2)` for the symmetric group with `L = a·l`.
pub fn a_partition(alpha: &[i64], a: i64) -> i64 {
    conjugate(&normalize(alpha)).iter().map(|&c| a * binom2(c)).sum()
}

/// Hook-length dimension of the Specht module.
pub fn dim_partition(alpha: &[i64]) -> u128 {
    let al = normalize(alpha);
    let n: i64 = al.iter().sum();
    let conj = conjugate(&al);
    let mut num: u128 = (1..=n as u128).product();
    let mut den: u128 = 1;
    for (i, &ai) in al.iter().enumerate() {
        for j in 0..ai as usize {
            den *= (ai - j as i64 + conj[j] - i as i64 - 1) as u128;
        }
    }
    num /= den;
    num
}

/// `dim E^{α,β} = C(n, |α|) dim π_α dim π_β`.
pub fn dim_bipartition(alpha: &[i64], beta: &[i64]) -> u128 {
    let k: i64 = alpha.iter().sum();
    let l: i64 = beta.iter().sum();
    let mut c: u128 = 1;
    for i in 0..l as u128 {
        c = c * (k as u128 + l as u128 - i) / (i + 1);
    }
    c * dim_partition(alpha) * dim_partition(beta)
}

/// A multiset `Z̃ ∈ ℳ^N_{a,b}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multiset {
    pub a: i64,
    pub b: i64,
    pub n_big: i64,
    /// Weakly increasing, `2N + r` entries.
    pub entries: Vec<i64>,
}

impl Multiset {
    pub fn new(a: i64, b: i64, n_big: i64, mut entries: Vec<i64>) -> Result<Self> {
        let (r, bp) = split_b(a, b)?;
        entries.sort_unstable();
        let bad = |why: &str| Err(Error::PreconditionViolated(format!("{entries:?} is not in M^{n_big}_({a},{b}): {why}")));
        if entries.len() as i64 != 2 * n_big + r {
            return bad("wrong number of entries");
        }
        if entries.iter().any(|&z| z < 0) {
            return bad("negative entry");
        }
        let counts = count(&entries);
        if bp == 0 {
            if (counts.len() as i64) < n_big + r {
                return bad("too few distinct entries");
            }
            if counts.values().any(|&c| c > 2) {
                return bad("entry repeated more than twice");
            }
            if entries.iter().any(|z| z % a != 0) {
                return bad("entry not divisible by a");
            }
        } else {
            if counts.values().any(|&c| c > 1) {
                return bad("repeated entry");
            }
            let zero = entries.iter().filter(|&&z| z % a == 0).count() as i64;
            let res = entries.iter().filter(|&&z| z % a == bp).count() as i64;
            if zero != n_big || res != n_big + r {
                return bad("wrong residues");
            }
        }
        if entries.iter().sum::<i64>() < base_sum(a, b, n_big) {
            return bad("entry sum below the rank-0 value");
        }
        Ok(Multiset { a, b, n_big, entries })
    }

    /// The rank-0 multiset `Z̃⁰`.
    pub fn base(a: i64, b: i64, n_big: i64) -> Result<Self> {
        let (r, bp) = split_b(a, b)?;
        let mut e: Vec<i64> = (0..n_big).map(|k| k * a).collect();
        e.extend((0..n_big + r).map(|k| k * a + bp));
        Self::new(a, b, n_big, e)
    }

    pub fn r(&self) -> i64 {
        self.b / self.a
    }

    pub fn b_prime(&self) -> i64 {
        self.b % self.a
    }

    pub fn rank(&self) -> i64 {
        (self.entries.iter().sum::<i64>() - base_sum(self.a, self.b, self.n_big)) / self.a
    }

    /// `{0, b′, z + a}`: the same class one step further in the limit.
    pub fn shift(&self) -> Multiset {
        let mut e = vec![0, self.b_prime()];
        e.extend(self.entries.iter().map(|z| z + self.a));
        e.sort_unstable();
        Multiset { a: self.a, b: self.b, n_big: self.n_big + 1, entries: e }
    }

    /// Entries occurring once, increasing.
    pub fn singles(&self) -> Vec<i64> {
        count(&self.entries).into_iter().filter(|&(_, c)| c == 1).map(|(z, _)| z).collect()
    }

    pub fn doubles(&self) -> Vec<i64> {
        count(&self.entries).into_iter().filter(|&(_, c)| c == 2).map(|(z, _)| z).collect()
    }

    /// Complement of `{at + b′ − z}` inside `{0, a, …, ta} ∪ {b′, a + b′, …, ta + b′}`.
    pub fn complement(&self, t: i64) -> Result<Multiset> {
        let (a, bp) = (self.a, self.b_prime());
        let mut pool = count(&(0..=t).flat_map(|k| [k * a, k * a + bp]).collect::<Vec<_>>());
        for z in &self.entries {
            let x = a * t + bp - z;
            match pool.get_mut(&x) {
                Some(c) if *c > 0 => *c -= 1,
                _ => return Err(Error::TTooSmall(t)),
            }
        }
        let e: Vec<i64> = pool.into_iter().flat_map(|(x, c)| std::iter::repeat(x).take(c)).collect();
        Multiset::new(a, self.b, t + 1 - self.n_big - self.r(), e)
    }
}

impl fmt::Display for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.entries.iter().map(|z| z.to_string()).collect::<Vec<_>>().join(","))
    }
}

fn count(v: &[i64]) -> BTreeMap<i64, usize> {
    let mut m = BTreeMap::new();
    for &z in v {
        *m.entry(z).or_insert(0) += 1;
    }
    m
}

/// All multisets of rank `n` in `ℳ^N_{a,b}`.
pub fn enumerate_multisets(a: i64, b: i64, n: i64, n_big: i64) -> Result<Vec<Multiset>> {
    let mut out = BTreeSet::new();
    for s in enumerate_symbols(a, b, n, n_big)? {
        out.insert(s.multiset());
    }
    Ok(out.into_iter().collect())
}

/// A symbol: top row `λ₁ < … < λ_{N+r}` (`≡ b′ mod a`), bottom row `μ₁ < … < μ_N` (`≡ 0 mod a`).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol {
    pub a: i64,
    pub b: i64,
    pub top: Vec<i64>,
    pub bottom: Vec<i64>,
}

impl Symbol {
    pub fn new(a: i64, b: i64, top: Vec<i64>, bottom: Vec<i64>) -> Result<Self> {
        let (r, bp) = split_b(a, b)?;
        let s = Symbol { a, b, top, bottom };
        let bad = |why: &str| Err(Error::PreconditionViolated(format!("{s} is not a symbol for (a, b) = ({a}, {b}): {why}")));
        if s.top.len() != s.bottom.len() + r as usize {
            return bad("row lengths must differ by r");
        }
        if s.top.windows(2).any(|w| w[0] >= w[1]) || s.bottom.windows(2).any(|w| w[0] >= w[1]) {
            return bad("rows must be strictly increasing");
        }
        if s.top.iter().chain(&s.bottom).any(|&z| z < 0) {
            return bad("negative entry");
        }
        if s.top.iter().any(|z| z % a != bp) || s.bottom.iter().any(|z| z % a != 0) {
            return bad("wrong residues");
        }
        if s.entry_sum() < base_sum(a, b, s.n_big()) {
            return bad("entry sum below the rank-0 value");
        }
        Ok(s)
    }

    /// Parses `0,2,5/1,3`; an empty row is written as nothing.
    pub fn parse(text: &str, a: i64, b: i64) -> Result<Self> {
        let (t, u) = text.split_once('/').ok_or_else(|| Error::Parse(format!("symbol '{text}' needs a '/' between the rows")))?;
        let row = |s: &str| -> Result<Vec<i64>> {
            s.split(',').map(str::trim).filter(|x| !x.is_empty()).map(|x| x.parse::<i64>().map_err(|_| Error::Parse(format!("bad entry '{x}' in symbol '{text}'")))).collect()
        };
        Self::new(a, b, row(t)?, row(u)?)
    }

    pub fn n_big(&self) -> i64 {
        self.bottom.len() as i64
    }

    pub fn r(&self) -> i64 {
        self.b / self.a
    }

    pub fn b_prime(&self) -> i64 {
        self.b % self.a
    }

    fn entry_sum(&self) -> i64 {
        self.top.iter().chain(&self.bottom).sum()
    }

    pub fn rank(&self) -> i64 {
        (self.entry_sum() - base_sum(self.a, self.b, self.n_big())) / self.a
    }

    /// Both rows as one multiset.
    pub fn multiset(&self) -> Multiset {
        let mut e: Vec<i64> = self.top.iter().chain(&self.bottom).copied().collect();
        e.sort_unstable();
        Multiset { a: self.a, b: self.b, n_big: self.n_big(), entries: e }
    }

    /// The image one step further in the limit: `b′, λ + a / 0, μ + a`.
    pub fn shift(&self) -> Symbol {
        let mut top = vec![self.b_prime()];
        top.extend(self.top.iter().map(|z| z + self.a));
        let mut bottom = vec![0];
        bottom.extend(self.bottom.iter().map(|z| z + self.a));
        Symbol { a: self.a, b: self.b, top, bottom }
    }

    /// `Λ̄` with respect to `t`.
    pub fn complement(&self, t: i64) -> Result<Symbol> {
        let (a, bp) = (self.a, self.b_prime());
        if self.top.iter().any(|&l| l > a * t + bp) || self.bottom.iter().any(|&m| m > a * t) {
            return Err(Error::TTooSmall(t));
        }
        let drop_top: BTreeSet<i64> = self.bottom.iter().map(|m| a * t + bp - m).collect();
        let drop_bot: BTreeSet<i64> = self.top.iter().map(|l| a * t + bp - l).collect();
        let top: Vec<i64> = (0..=t).map(|k| k * a + bp).filter(|x| !drop_top.contains(x)).collect();
        let bottom: Vec<i64> = (0..=t).map(|k| k * a).filter(|x| !drop_bot.contains(x)).collect();
        Symbol::new(a, self.b, top, bottom)
    }

    /// `(α, β)` with `λ_i = a(α_{N+r−i+1} + i − 1) + b′`, `μ_j = a(β_{N−j+1} + j − 1)`.
    pub fn to_bipartition(&self) -> (Partition, Partition) {
        let (a, bp) = (self.a, self.b_prime());
        let alpha: Vec<i64> = self.top.iter().enumerate().map(|(i, l)| (l - bp) / a - i as i64).collect();
        let beta: Vec<i64> = self.bottom.iter().enumerate().map(|(j, m)| m / a - j as i64).collect();
        (normalize(&alpha), normalize(&beta))
    }

    /// Symbol of `E^{α,β}` for a given `N` (needs `α_{N+r+1} = β_{N+1} = 0`).
    pub fn from_bipartition(alpha: &[i64], beta: &[i64], a: i64, b: i64, n_big: i64) -> Result<Self> {
        let (r, bp) = split_b(a, b)?;
        let (al, be) = (normalize(alpha), normalize(beta));
        if al.len() as i64 > n_big + r || be.len() as i64 > n_big {
            return Err(Error::PreconditionViolated(format!("N = {n_big} is too small for ({al:?}, {be:?}) with r = {r}")));
        }
        let part = |p: &[i64], i: i64| p.get(i as usize - 1).copied().unwrap_or(0);
        let top = (1..=n_big + r).map(|i| a * (part(&al, n_big + r - i + 1) + i - 1) + bp).collect();
        let bottom = (1..=n_big).map(|j| a * (part(&be, n_big - j + 1) + j - 1)).collect();
        Symbol::new(a, b, top, bottom)
    }

    /// Symbol of `E^{α,β}` at the least admissible `N`; checks the rank.
    pub fn of_bipartition(alpha: &[i64], beta: &[i64], a: i64, b: i64, n: i64) -> Result<Self> {
        let (r, _) = split_b(a, b)?;
        let (al, be) = (normalize(alpha), normalize(beta));
        let size: i64 = al.iter().sum::<i64>() + be.iter().sum::<i64>();
        if size != n {
            return Err(Error::RankMismatch(format!("({al:?}, {be:?}) has size {size}, expected {n}")));
        }
        let n_big = (al.len() as i64 - r).max(be.len() as i64).max(0);
        let s = Self::from_bipartition(&al, &be, a, b, n_big)?;
        debug_assert_eq!(s.rank(), n);
        Ok(s)
    }

    /// `a_{[Λ]} = A_N − B_N`.
    pub fn a_value(&self) -> i64 {
        let v = a_at(self);
        debug_assert_eq!(v, a_at(&self.shift()), "a-value must not depend on N");
        v
    }

    /// `2^d` with `2d + r` = number of singles when `b′ = 0`; `1` when `b′ > 0`.
    pub fn f_value(&self) -> i64 {
        if self.b_prime() > 0 {
            return 1;
        }
        let singles = self.multiset().singles().len() as i64;
        1 << ((singles - self.r()) / 2)
    }
}

fn a_at(s: &Symbol) -> i64 {
    let (a, bp) = (s.a, s.b_prime());
    let (lam, mu) = (&s.top, &s.bottom);
    let pairs_min = |v: &[i64]| -> i64 {
        let mut t = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                t += v[i].min(v[j]);
            }
        }
        t
    };
    let cross = |x: &[i64], y: &[i64]| -> i64 { x.iter().map(|&l| y.iter().map(|&m| l.min(m)).sum::<i64>()).sum() };
    let lam0: Vec<i64> = (0..lam.len() as i64).map(|i| a * i + bp).collect();
    let mu0: Vec<i64> = (0..mu.len() as i64).map(|j| a * j).collect();
    let big_a = cross(lam, mu) + pairs_min(lam) + pairs_min(mu);
    let big_b = cross(&lam0, &mu0) + pairs_min(&lam0) + pairs_min(&mu0);
    big_a - big_b
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |v: &[i64]| v.iter().map(|z| z.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "{}/{}", row(&self.top), row(&self.bottom))
    }
}

/// All symbols of rank `n` with `N` bottom entries.
pub fn enumerate_symbols(a: i64, b: i64, n: i64, n_big: i64) -> Result<Vec<Symbol>> {
    let (r, _) = split_b(a, b)?;
    let mut out = Vec::new();
    for (al, be) in bipartitions(n) {
        if al.len() as i64 <= n_big + r && be.len() as i64 <= n_big {
            out.push(Symbol::from_bipartition(&al, &be, a, b, n_big)?);
        }
    }
    out.sort();
    Ok(out)
}

/// `a_{[Λ]}` of the symbol attached to `(α, β)`.
pub fn a_symbol(alpha: &[i64], beta: &[i64], a: i64, b: i64) -> Result<i64> {
    let n = alpha.iter().sum::<i64>() + beta.iter().sum::<i64>();
    Ok(Symbol::of_bipartition(alpha, beta, a, b, n)?.a_value())
}

/// `f_{E^{α,β}_v} = H_α(v^{2a}) H_β(v^{2a}) G_{α,β}(v^{2a}, v^{2b}) G_{β,α}(v^{2a}, v^{−2b})`.
///
/// Every factor is already a Laurent polynomial: `(q^h − 1)/(q − 1) = 1 + q + … + q^{h−1}`.
pub fn hoefsmit_f(alpha: &[i64], beta: &[i64], a: i64, b: i64) -> Result<Laurent> {
    if a <= 0 || b <= 0 {
        return Err(Error::PreconditionViolated(format!("needs a, b > 0, got ({a}, {b})")));
    }
    let (al, be) = (normalize(alpha), normalize(beta));
    let mut f = h_factor(&al, a);
    f = &f * &h_factor(&be, a);
    f = &f * &g_factor(&al, &be, a, b);
    f = &f * &g_factor(&be, &al, a, -b);
    Ok(f)
}

/// `H_α(v^{2a})`.
fn h_factor(al: &[i64], a: i64) -> Laurent {
    let conj = conjugate(al);
    let shift: i64 = conj.iter().map(|&c| binom2(c)).sum();
    let mut out = Laurent::v_pow(-2 * a * shift);
    for (i, &ai) in al.iter().enumerate() {
        for j in 0..ai as usize {
            let hook = ai + conj[j] - i as i64 - j as i64 - 1;
            out = &out * &Laurent::from_terms((0..hook).map(|e| (2 * a * e, 1)));
        }
    }
    out
}

/// `G_{α,β}(v^{2a}, v^{2c})`.
fn g_factor(al: &[i64], be: &[i64], a: i64, c: i64) -> Laurent {
    let ca = conjugate(al);
    let cb = conjugate(be);
    let cross: i64 = ca.iter().zip(&cb).map(|(x, y)| x * y).sum();
    // q^{−Σ α′_i β′_i / 2} with q = v^{2a}
    let mut out = Laurent::v_pow(-a * cross);
    for (i, &ai) in al.iter().enumerate() {
        for j in 0..ai as usize {
            let bj = cb.get(j).copied().unwrap_or(0);
            let e = ai + bj - i as i64 - j as i64 - 1;
            out = &out * &Laurent::from_terms([(2 * a * e + 2 * c, 1), (0, 1)]);
        }
    }
    out
}

/// An involution of `{0, …, M−1}` (positions in an ordered set).
pub type Involution = Vec<usize>;

/// All `r`-admissible involutions of an ordered set of size `M`.
pub fn admissible_involutions(m: usize, r: usize) -> Result<Vec<Involution>> {
    if r > m || (m - r) % 2 == 1 {
        return Err(Error::ParityMismatch(m, r));
    }
    fn go(pos: &[usize], r: usize, cur: &mut Vec<usize>, out: &mut BTreeSet<Involution>) {
        if pos.len() == r {
            out.insert(cur.clone());
            return;
        }
        for k in 0..pos.len() - 1 {
            let (z, zp) = (pos[k], pos[k + 1]);
            cur[z] = zp;
            cur[zp] = z;
            let rest: Vec<usize> = pos.iter().copied().filter(|&p| p != z && p != zp).collect();
            go(&rest, r, cur, out);
            cur[z] = z;
            cur[zp] = zp;
        }
    }
    let pos: Vec<usize> = (0..m).collect();
    let mut cur = pos.clone();
    let mut out = BTreeSet::new();
    go(&pos, r, &mut cur, &mut out);
    Ok(out.into_iter().collect())
}

/// Subsets (as sorted position lists) meeting every 2-cycle of `iota` exactly once.
pub fn s_iota(iota: &[usize]) -> Vec<Vec<usize>> {
    let orbits: Vec<(usize, usize)> = (0..iota.len()).filter(|&i| iota[i] > i).map(|i| (i, iota[i])).collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << orbits.len()) {
        let mut y: Vec<usize> = orbits.iter().enumerate().map(|(k, &(p, q))| if mask >> k & 1 == 0 { p } else { q }).collect();
        y.sort_unstable();
        out.push(y);
    }
    out.sort();
    out
}

/// The symbols `Λ_Y`, `Y ∈ 𝒮_ι`, making up one constructible representation (`b′ = 0`).
/// `iota` acts on the positions of the singles of `m`.
pub fn constructible_family(m: &Multiset, iota: &[usize]) -> Result<Vec<Symbol>> {
    if m.b_prime() != 0 {
        return Err(Error::PreconditionViolated("families by involutions need b' = 0; for b' > 0 every symbol is its own family".into()));
    }
    let z = m.singles();
    let r = m.r() as usize;
    if iota.len() != z.len() {
        return Err(Error::PreconditionViolated(format!("involution acts on {} points but there are {} singles", iota.len(), z.len())));
    }
    if !admissible_involutions(z.len(), r)?.iter().any(|i| i == iota) {
        return Err(Error::PreconditionViolated(format!("{iota:?} is not {r}-admissible")));
    }
    let d = m.doubles();
    let mut out = Vec::new();
    for y in s_iota(iota) {
        let mut top: Vec<i64> = (0..z.len()).filter(|p| !y.contains(p)).map(|p| z[p]).chain(d.iter().copied()).collect();
        let mut bottom: Vec<i64> = y.iter().map(|&p| z[p]).chain(d.iter().copied()).collect();
        top.sort_unstable();
        bottom.sort_unstable();
        out.push(Symbol::new(m.a, m.b, top, bottom)?);
    }
    out.sort();
    Ok(out)
}

/// All constructible representations of `W_n`, each as its list of symbols.
pub fn constructible_representations(a: i64, b: i64, n: i64) -> Result<Vec<Vec<Symbol>>> {
    let (r, bp) = split_b(a, b)?;
    // large enough that every bipartition of n fits
    let n_big = n.max(1);
    let mut out = BTreeSet::new();
    if bp > 0 {
        for s in enumerate_symbols(a, b, n, n_big)? {
            out.insert(vec![s]);
        }
    } else {
        for m in enumerate_multisets(a, b, n, n_big)? {
            let singles = m.singles().len();
            for iota in admissible_involutions(singles, r as usize)? {
                out.insert(constructible_family(&m, &iota)?);
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Families: classes of symbols for the relation generated by lying in a common
/// constructible representation.
pub fn families(a: i64, b: i64, n: i64) -> Result<Vec<Vec<Symbol>>> {
    let reps = constructible_representations(a, b, n)?;
    let mut classes: Vec<BTreeSet<Symbol>> = Vec::new();
    for rep in reps {
        let mut merged: BTreeSet<Symbol> = rep.into_iter().collect();
        classes.retain(|c| {
            if c.is_disjoint(&merged) {
                true
            } else {
                merged.extend(c.iter().cloned());
                false
            }
        });
        classes.push(merged);
    }
    let mut out: Vec<Vec<Symbol>> = classes.into_iter().map(|c| c.into_iter().collect()).collect();
    out.sort();
    Ok(out)
}
