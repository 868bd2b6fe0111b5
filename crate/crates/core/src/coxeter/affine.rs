//! Periodic-permutation models: `Ã_{n-1}` as permutations of `Z` commuting with `z ↦ z + n`,
//! and `C̃_p` as the centralizer of `z ↦ 1 - z` inside `Ã_{2p-1}`.

use super::element::{Element, Gen, Side};
use crate::error::{Error, Result};

/// A periodic permutation of `Z` stored by its window `σ(1), …, σ(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PeriodicPerm {
    window: Vec<i64>,
}

impl PeriodicPerm {
    pub fn identity(n: usize) -> Self {
        PeriodicPerm { window: (1..=n as i64).collect() }
    }

    /// Validates bijectivity modulo `n`; `χ` is not checked here.
    pub fn from_window(window: Vec<i64>) -> Result<Self> {
        let n = window.len() as i64;
        if n < 2 {
            return Err(Error::NotPeriodic("window must have length >= 2".into()));
        }
        let mut seen = vec![false; n as usize];
        for &v in &window {
            let r = (v - 1).rem_euclid(n) as usize;
            if seen[r] {
                return Err(Error::NotPeriodic(format!("window {window:?} repeats a residue mod {n}")));
            }
            seen[r] = true;
        }
        Ok(PeriodicPerm { window })
    }

    /// The generator `s_m`, `m ∈ Z/n`.
    pub fn generator(n: usize, m: usize) -> Self {
        let mut p = Self::identity(n);
        p.window = (1..=n as i64).map(|z| apply_s(n as i64, m as i64, z)).collect();
        p
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    pub fn eval(&self, z: i64) -> i64 {
        let n = self.window.len() as i64;
        self.window[(z - 1).rem_euclid(n) as usize] + (z - 1).div_euclid(n) * n
    }

    /// `Σ_{k=1..n} (σ(k) − k)`.
    pub fn chi(&self) -> i64 {
        self.window.iter().zip(1..).map(|(&v, k)| v - k).sum()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &PeriodicPerm) -> PeriodicPerm {
        PeriodicPerm { window: other.window.iter().map(|&z| self.eval(z)).collect() }
    }

    pub fn inverse(&self) -> PeriodicPerm {
        let n = self.window.len() as i64;
        let mut w = vec![0; n as usize];
        for (i, &v) in self.window.iter().enumerate() {
            let r = (v - 1).rem_euclid(n);
            w[r as usize] = (i as i64 + 1) - (v - 1).div_euclid(n) * n;
        }
        PeriodicPerm { window: w }
    }

    /// `#(Y_σ / τ_n)` counted directly: inversions `(i, j)` with `i ∈ [1, n]`, `i < j`.
    pub fn inversion_orbits(&self) -> usize {
        let n = self.window.len() as i64;
        let mut count = 0usize;
        for i in 1..=n {
            for j0 in 1..=n {
                // j = j0 + kn > i with σ(j0) + kn < σ(i)
                let (si, sj) = (self.eval(i), self.eval(j0));
                let kmin = if j0 > i { 0 } else { 1 };
                let kmax = (si - sj - 1).div_euclid(n);
                if kmax >= kmin {
                    count += (kmax - kmin + 1) as usize;
                }
            }
        }
        count
    }

    /// Right descent at `m`: `σ(m) > σ(m + 1)`.
    pub fn right_descent(&self, m: usize) -> bool {
        self.eval(m as i64) > self.eval(m as i64 + 1)
    }

    pub fn left_descent(&self, m: usize) -> bool {
        self.inverse().right_descent(m)
    }
}

fn apply_s(n: i64, m: i64, z: i64) -> i64 {
    let r = z.rem_euclid(n);
    if r == m.rem_euclid(n) {
        z + 1
    } else if r == (m + 1).rem_euclid(n) {
        z - 1
    } else {
        z
    }
}

/// Engine for `Ã_{n-1}`, generator `i` acting as `s_i`.
pub(crate) struct AffineEngine {
    n: usize,
}

impl AffineEngine {
    pub fn new(n: usize) -> Self {
        AffineEngine { n }
    }

    pub fn to_perm(&self, w: &Element) -> PeriodicPerm {
        word_to_perm(self.n, w.word())
    }

    /// ShortLex-least reduced word: repeatedly strip the smallest left descent.
    pub fn from_perm(&self, p: &PeriodicPerm) -> Element {
        let mut p = p.clone();
        let mut word = Vec::new();
        let id = PeriodicPerm::identity(self.n);
        while p != id {
            let inv = p.inverse();
            let m = (0..self.n).find(|&m| inv.right_descent(m)).expect("non-identity without descent");
            word.push(m as Gen);
            p = PeriodicPerm::generator(self.n, m).compose(&p);
        }
        Element::from_canonical(word)
    }

    pub fn descents(&self, w: &Element, side: Side) -> u64 {
        let p = self.to_perm(w);
        let p = match side {
            Side::Left => p.inverse(),
            Side::Right => p,
        };
        (0..self.n).filter(|&m| p.right_descent(m)).fold(0, |acc, m| acc | 1 << m)
    }

    pub fn mul_gen(&self, w: &Element, s: Gen, side: Side) -> (Element, i8) {
        let p = self.to_perm(w);
        let g = PeriodicPerm::generator(self.n, s as usize);
        let q = match side {
            Side::Left => g.compose(&p),
            Side::Right => p.compose(&g),
        };
        let e = self.from_perm(&q);
        let d = if e.length() > w.length() { 1 } else { -1 };
        (e, d)
    }
}

/// Composes `s_{i1} ∘ … ∘ s_{ik}` in `Ã_{n-1}`.
pub fn word_to_perm(n: usize, word: &[Gen]) -> PeriodicPerm {
    word.iter().fold(PeriodicPerm::identity(n), |acc, &s| acc.compose(&PeriodicPerm::generator(n, s as usize)))
}

/// Validates that `σ` lies in `Ã_{n-1}` (the kernel of `χ`).
pub fn check_affine_a(p: &PeriodicPerm) -> Result<()> {
    let c = p.chi();
    if c != 0 {
        return Err(Error::NonzeroChi(c));
    }
    Ok(())
}

/// Converts a permutation of `Ã_{n-1}` to its canonical word and length.
pub fn affine_a_roundtrip(p: &PeriodicPerm) -> Result<(Element, usize)> {
    check_affine_a(p)?;
    let e = AffineEngine::new(p.n()).from_perm(p);
    Ok((e, p.inversion_orbits()))
}

/// Type `C̃_p` inside `Ã_{2p-1}`: generator `j` is `s_0`, `s_j s_{-j}` (`0<j<p`) or `s_p`.
pub struct AffineC {
    p: usize,
}

/// Length data of an element of `C̃_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CLengths {
    pub l0: usize,
    pub l1: usize,
    pub l2: usize,
}

impl CLengths {
    pub fn total(&self) -> usize {
        self.l0 + self.l1 + self.l2
    }
}

impl AffineC {
    pub fn new(p: usize) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidMatrix("C̃_p model needs p >= 2".into()));
        }
        Ok(AffineC { p })
    }

    pub fn n(&self) -> usize {
        2 * self.p
    }

    pub fn generator(&self, j: usize) -> PeriodicPerm {
        let n = self.n();
        if j == 0 || j == self.p {
            PeriodicPerm::generator(n, j)
        } else {
            PeriodicPerm::generator(n, j).compose(&PeriodicPerm::generator(n, n - j))
        }
    }

    pub fn word_to_perm(&self, word: &[Gen]) -> PeriodicPerm {
        word.iter().fold(PeriodicPerm::identity(self.n()), |acc, &s| acc.compose(&self.generator(s as usize)))
    }

    /// Whether `σ` commutes with `z ↦ 1 − z`.
    pub fn contains(&self, s: &PeriodicPerm) -> bool {
        s.n() == self.n() && (1..=self.n() as i64).all(|z| s.eval(1 - z) == 1 - s.eval(z))
    }

    /// `(l⁰, l′, l″)`; `l′` counts `s′_0` and `l″` counts `s′_p` in a reduced word.
    pub fn lengths(&self, s: &PeriodicPerm) -> CLengths {
        let p = self.p as i64;
        let n = 2 * p;
        let in_z1 = |z: i64| (z - 1).rem_euclid(n) < p;
        let (mut l1, mut l2) = (0i64, 0i64);
        for i in 1 - p..=p {
            let si = s.eval(i);
            if i >= si {
                continue;
            }
            // f(i) = #{x ∈ pZ : i ≤ x < σ(i)}
            let f = (si - 1).div_euclid(p) - (i - 1).div_euclid(p);
            let (a, b) = match (i >= 1, in_z1(si)) {
                (false, false) | (true, true) => (f, f),
                (false, true) => (f + 1, f - 1),
                (true, false) => (f - 1, f + 1),
            };
            debug_assert!(a % 2 == 0 && b % 2 == 0);
            l1 += a / 2;
            l2 += b / 2;
        }
        let total = s.inversion_orbits() as i64;
        let l0 = (total - l1 - l2) / 2;
        CLengths { l0: l0 as usize, l1: l1 as usize, l2: l2 as usize }
    }

    /// Canonical word in the `C̃_p` generators plus length, read off by stripping left descents.
    pub fn roundtrip(&self, s: &PeriodicPerm) -> Result<(Vec<Gen>, usize)> {
        if s.n() != self.n() {
            return Err(Error::NotPeriodic(format!("window length {} != {}", s.n(), self.n())));
        }
        if !self.contains(s) {
            return Err(Error::NotPeriodic("permutation does not commute with z -> 1 - z".into()));
        }
        check_affine_a(s)?;
        let len = self.lengths(s).total();
        let mut cur = s.clone();
        let mut word = Vec::with_capacity(len);
        let mut l = len;
        while l > 0 {
            let (j, next) = (0..=self.p)
                .map(|j| (j, self.generator(j).compose(&cur)))
                .find(|(_, q)| self.lengths(q).total() < l)
                .ok_or_else(|| Error::NotPeriodic("no descent found".into()))?;
            word.push(j as Gen);
            cur = next;
            l -= 1;
        }
        Ok((word, len))
    }

    /// Membership in the `B̃_p` subgroup (kernel of `χ′`).
    pub fn in_b_tilde(&self, s: &PeriodicPerm) -> bool {
        self.p >= 3 && self.lengths(s).l1 % 2 == 0
    }

    /// Membership in the `D̃_p` subgroup (kernel of `χ′` and `χ″`).
    pub fn in_d_tilde(&self, s: &PeriodicPerm) -> bool {
        let l = self.lengths(s);
        self.p >= 4 && l.l1 % 2 == 0 && l.l2 % 2 == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_has_length_one() {
        for m in 0..3 {
            let g = PeriodicPerm::generator(3, m);
            assert_eq!(g.chi(), 0);
            assert_eq!(g.inversion_orbits(), 1);
            let (e, l) = affine_a_roundtrip(&g).unwrap();
            assert_eq!((e.word().to_vec(), l), (vec![m as Gen], 1));
        }
    }

    #[test]
    fn nonzero_chi_rejected() {
        let p = PeriodicPerm::from_window(vec![2, 3, 4]).unwrap();
        assert_eq!(affine_a_roundtrip(&p), Err(Error::NonzeroChi(3)));
        assert!(PeriodicPerm::from_window(vec![1, 4, 3]).is_err());
    }

    #[test]
    fn c_generators_lengths() {
        let c = AffineC::new(2).unwrap();
        assert_eq!(c.lengths(&c.generator(0)), CLengths { l0: 0, l1: 1, l2: 0 });
        assert_eq!(c.lengths(&c.generator(1)), CLengths { l0: 1, l1: 0, l2: 0 });
        assert_eq!(c.lengths(&c.generator(2)), CLengths { l0: 0, l1: 0, l2: 1 });
    }
}
