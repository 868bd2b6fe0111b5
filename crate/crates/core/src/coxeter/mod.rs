//! Weighted Coxeter systems and canonical element arithmetic.

mod affine;
mod dihedral;
mod element;
mod fold;
mod matrix;
mod tits;

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, RwLock};

pub use affine::{affine_a_roundtrip, check_affine_a, word_to_perm, AffineC, CLengths, PeriodicPerm};
pub use dihedral::dihedral_element;
pub use element::{parse_word, word_to_text, Element, Gen, Side};
pub use fold::{fold, Folding};
pub use matrix::{Bond, CoxeterMatrix};

use crate::error::{Error, Result};
use crate::rings::Laurent;

/// Which word-problem backend a system uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EngineKind {
    Tits,
    Dihedral,
    AffinePerm,
}

/// Requested backend; `Auto` picks the specialized one when the matrix allows it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum EngineHint {
    #[default]
    Auto,
    Force(EngineKind),
}

enum Engine {
    Tits(tits::TitsEngine),
    Dihedral(dihedral::DihedralEngine),
    Affine(affine::AffineEngine),
}

/// A Coxeter group with a weight function and a normal-form backend.
pub struct CoxeterSystem {
    matrix: CoxeterMatrix,
    weights: Vec<i64>,
    engine: Engine,
    kind: EngineKind,
    name: String,
    bruhat: RwLock<HashMap<(Element, Element), bool>>,
    lower: RwLock<HashMap<Element, Arc<Vec<Element>>>>,
}

impl fmt::Debug for CoxeterSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoxeterSystem").field("name", &self.name).field("weights", &self.weights).field("engine", &self.kind).finish()
    }
}

impl CoxeterSystem {
    pub fn new(matrix: CoxeterMatrix, weights: Vec<i64>, hint: EngineHint) -> Result<Self> {
        let n = matrix.rank();
        if weights.len() != n {
            return Err(Error::InvalidMatrix(format!("{} weights given for {n} generators", weights.len())));
        }
        for (i, &w) in weights.iter().enumerate() {
            if w < 0 {
                return Err(Error::NonPositiveWeight(i + 1, w));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if let Some(m) = matrix.get(i, j) {
                    if m % 2 == 1 && weights[i] != weights[j] {
                        return Err(Error::OddBondWeightMismatch(i + 1, j + 1));
                    }
                }
            }
        }
        let kind = match hint {
            EngineHint::Force(k) => k,
            EngineHint::Auto if n == 2 => EngineKind::Dihedral,
            EngineHint::Auto if matrix.is_affine_a() => EngineKind::AffinePerm,
            EngineHint::Auto => EngineKind::Tits,
        };
        let engine = match kind {
            EngineKind::Tits => Engine::Tits(tits::TitsEngine::new(matrix.clone())),
            EngineKind::Dihedral => {
                if n != 2 {
                    return Err(Error::EngineMismatch(format!("dihedral engine needs rank 2, got {n}")));
                }
                Engine::Dihedral(dihedral::DihedralEngine::new(matrix.get(0, 1)))
            }
            EngineKind::AffinePerm => {
                if !matrix.is_affine_a() {
                    return Err(Error::EngineMismatch("affine-permutation engine needs an affine A matrix".into()));
                }
                Engine::Affine(affine::AffineEngine::new(n))
            }
        };
        let name = format!("W[{}]", matrix.to_config(&weights).split_whitespace().collect::<Vec<_>>().join(" "));
        Ok(CoxeterSystem { matrix, weights, engine, kind, name, bruhat: RwLock::new(HashMap::new()), lower: RwLock::new(HashMap::new()) })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn engine_kind(&self) -> EngineKind {
        self.kind
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn gen_weight(&self, s: Gen) -> i64 {
        self.weights[s as usize]
    }

    pub fn generators(&self) -> impl Iterator<Item = Gen> {
        0..self.rank() as Gen
    }

    /// Errors unless every generator has positive weight.
    pub fn require_positive(&self) -> Result<()> {
        match self.weights.iter().position(|&w| w <= 0) {
            Some(i) => Err(Error::NonPositiveWeight(i + 1, self.weights[i])),
            None => Ok(()),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.matrix.parabolic_is_finite(&(0..self.rank()).collect::<Vec<_>>())
    }

    pub fn parabolic_is_finite(&self, gens: &[Gen]) -> bool {
        self.matrix.parabolic_is_finite(&gens.iter().map(|&g| g as usize).collect::<Vec<_>>())
    }

    pub fn gen(&self, s: Gen) -> Element {
        Element::from_canonical(vec![s])
    }

    pub fn mul_gen(&self, w: &Element, s: Gen, side: Side) -> (Element, i8) {
        match &self.engine {
            Engine::Tits(e) => e.mul_gen(w, s, side),
            Engine::Dihedral(e) => e.mul_gen(w, s, side),
            Engine::Affine(e) => e.mul_gen(w, s, side),
        }
    }

    pub fn lmul(&self, s: Gen, w: &Element) -> Element {
        self.mul_gen(w, s, Side::Left).0
    }

    pub fn rmul(&self, w: &Element, s: Gen) -> Element {
        self.mul_gen(w, s, Side::Right).0
    }

    /// Bitmask of descents.
    pub fn descent_mask(&self, w: &Element, side: Side) -> u64 {
        if w.is_identity() {
            return 0;
        }
        match &self.engine {
            Engine::Tits(e) => e.descents(w, side),
            Engine::Dihedral(e) => e.descents(w, side),
            Engine::Affine(e) => e.descents(w, side),
        }
    }

    pub fn descents(&self, w: &Element, side: Side) -> Vec<Gen> {
        let m = self.descent_mask(w, side);
        self.generators().filter(|&s| m >> s & 1 == 1).collect()
    }

    pub fn is_descent(&self, w: &Element, s: Gen, side: Side) -> bool {
        self.descent_mask(w, side) >> s & 1 == 1
    }

    /// Normalizes an arbitrary (possibly non-reduced) word.
    pub fn element_from_word(&self, word: &[Gen]) -> Result<Element> {
        if let Some(&g) = word.iter().find(|&&g| g as usize >= self.rank()) {
            return Err(Error::Parse(format!("generator {} out of range for rank {}", g + 1, self.rank())));
        }
        Ok(word.iter().fold(Element::identity(), |acc, &s| self.rmul(&acc, s)))
    }

    pub fn parse_element(&self, s: &str) -> Result<Element> {
        self.element_from_word(&parse_word(s)?)
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        if a.length() >= b.length() {
            b.word().iter().fold(a.clone(), |acc, &s| self.rmul(&acc, s))
        } else {
            a.word().iter().rev().fold(b.clone(), |acc, &s| self.lmul(s, &acc))
        }
    }

    pub fn inverse(&self, w: &Element) -> Element {
        w.word().iter().fold(Element::identity(), |acc, &s| self.lmul(s, &acc))
    }

    pub fn length(&self, w: &Element) -> usize {
        w.length()
    }

    /// `L(w)`.
    pub fn weight(&self, w: &Element) -> i64 {
        w.word().iter().map(|&s| self.weights[s as usize]).sum()
    }

    /// `sg(w) = (−1)^{l(w)}`.
    pub fn sign(&self, w: &Element) -> i64 {
        if w.length() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// `v_s = v^{L(s)}`.
    pub fn v_s(&self, s: Gen) -> Laurent {
        Laurent::v_pow(self.gen_weight(s))
    }

    /// Chevalley–Bruhat order by descent recursion on `w`.
    pub fn bruhat_leq(&self, y: &Element, w: &Element) -> bool {
        if y.length() > w.length() {
            return false;
        }
        if y.length() == w.length() {
            return y == w;
        }
        if y.is_identity() {
            return true;
        }
        let key = (y.clone(), w.clone());
        if let Some(&b) = self.bruhat.read().unwrap().get(&key) {
            return b;
        }
        let s = w.word()[0];
        let sw = Element::from_canonical(w.word()[1..].to_vec());
        let (sy, d) = self.mul_gen(y, s, Side::Left);
        let r = if d < 0 { self.bruhat_leq(&sy, &sw) } else { self.bruhat_leq(y, &sw) };
        self.bruhat.write().unwrap().insert(key, r);
        r
    }

    /// All `z ≤ w`, sorted ShortLex.
    pub fn lower_set(&self, w: &Element) -> Arc<Vec<Element>> {
        if let Some(v) = self.lower.read().unwrap().get(w) {
            return v.clone();
        }
        let res = if w.is_identity() {
            vec![Element::identity()]
        } else {
            let s = w.word()[0];
            let sw = Element::from_canonical(w.word()[1..].to_vec());
            let below = self.lower_set(&sw);
            let mut set: BTreeSet<Element> = below.iter().cloned().collect();
            for z in below.iter() {
                set.insert(self.lmul(s, z));
            }
            set.into_iter().collect()
        };
        let res = Arc::new(res);
        self.lower.write().unwrap().insert(w.clone(), res.clone());
        res
    }

    pub fn bruhat_interval(&self, y: &Element, w: &Element) -> Vec<Element> {
        self.lower_set(w).iter().filter(|z| self.bruhat_leq(y, z)).cloned().collect()
    }

    /// All elements of length `≤ max_len`, ShortLex order.
    pub fn enumerate(&self, max_len: usize) -> Vec<Element> {
        let mut out = vec![Element::identity()];
        let mut layer = vec![Element::identity()];
        for _ in 0..max_len {
            let mut next: BTreeSet<Element> = BTreeSet::new();
            for w in &layer {
                for s in self.generators() {
                    let (x, d) = self.mul_gen(w, s, Side::Right);
                    if d > 0 {
                        next.insert(x);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            layer = next.into_iter().collect();
            out.extend(layer.iter().cloned());
        }
        out
    }

    /// The whole group; errors if infinite.
    pub fn all_elements(&self) -> Result<Vec<Element>> {
        if !self.is_finite() {
            return Err(Error::InfiniteParabolic((1..=self.rank()).collect()));
        }
        Ok(self.enumerate(usize::MAX))
    }

    /// `w₀^I`.
    pub fn longest_element(&self, gens: &[Gen]) -> Result<Element> {
        if !self.parabolic_is_finite(gens) {
            return Err(Error::InfiniteParabolic(gens.iter().map(|&g| g as usize + 1).collect()));
        }
        let mut w = Element::identity();
        loop {
            match gens.iter().find(|&&s| !self.is_descent(&w, s, Side::Left)) {
                Some(&s) => w = self.lmul(s, &w),
                None => return Ok(w),
            }
        }
    }

    /// Minimal representative of `W_I·w` (`side = Left`) or `w·W_I` (`side = Right`).
    pub fn min_coset_rep(&self, gens: &[Gen], w: &Element, side: Side) -> Element {
        let mut w = w.clone();
        while let Some(&s) = gens.iter().find(|&&s| self.is_descent(&w, s, side)) {
            w = self.mul_gen(&w, s, side).0;
        }
        w
    }

    /// Elements of the parabolic subgroup `W_I`, as elements of `W`.
    pub fn parabolic_elements(&self, gens: &[Gen], max_len: usize) -> Vec<Element> {
        let mut seen: HashSet<Element> = HashSet::new();
        let mut out = vec![Element::identity()];
        let mut layer = vec![Element::identity()];
        seen.insert(Element::identity());
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &layer {
                for &s in gens {
                    let (x, d) = self.mul_gen(w, s, Side::Right);
                    if d > 0 && seen.insert(x.clone()) {
                        next.push(x);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            next.sort();
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    /// The parabolic subgroup `W_I` as a standalone system on `gens` (relabelled `0..|I|`).
    pub fn parabolic_system(&self, gens: &[Gen]) -> Result<CoxeterSystem> {
        let k = gens.len();
        let m = CoxeterMatrix::from_fn(k, |a, b| self.matrix.get(gens[a] as usize, gens[b] as usize))?;
        let w = gens.iter().map(|&g| self.weights[g as usize]).collect();
        CoxeterSystem::new(m, w, EngineHint::Auto)
    }

    /// Order of an element, if at most `cap`.
    pub fn order(&self, w: &Element, cap: usize) -> Option<usize> {
        let mut x = w.clone();
        for k in 1..=cap {
            if x.is_identity() {
                return Some(k);
            }
            x = self.mul(&x, w);
        }
        None
    }

    /// Plain-text config.
    pub fn to_config(&self) -> String {
        self.matrix.to_config(&self.weights)
    }

    pub fn from_config(text: &str, hint: EngineHint) -> Result<Self> {
        let (m, w) = CoxeterMatrix::parse_config(text)?;
        Self::new(m, w, hint)
    }

    /// Built-in named systems: `a3`, `an:n`, `bn:n[,a,b]`, `b2:L1,L2`, `g2:a,b`,
    /// `i2m:m,L1,L2`, `i2inf:L1,L2`, `affA:n` (type `Ã_n`, `n+1` generators), `affC:p`.
    pub fn preset(spec: &str) -> Result<Self> {
        let (name, args) = spec.split_once(':').unwrap_or((spec, ""));
        let nums: Vec<i64> = if args.is_empty() {
            Vec::new()
        } else {
            args.split(',').map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("preset '{spec}': bad number '{t}'")))).collect::<Result<_>>()?
        };
        let bad = || Error::Parse(format!("preset '{spec}': wrong number of parameters"));
        let need = |k: usize| if nums.len() == k { Ok(()) } else { Err(bad()) };
        let pos = |x: i64| usize::try_from(x).map_err(|_| Error::Parse(format!("preset '{spec}': negative parameter")));
        let (m, w) = match name.to_ascii_lowercase().as_str() {
            "a3" => {
                need(0)?;
                (CoxeterMatrix::type_a(3)?, vec![1; 3])
            }
            "an" => {
                need(1)?;
                let n = pos(nums[0])?;
                (CoxeterMatrix::type_a(n)?, vec![1; n])
            }
            "bn" => {
                let n = pos(*nums.first().ok_or_else(bad)?)?;
                let (a, b) = match nums.len() {
                    1 => (1, 1),
                    3 => (nums[1], nums[2]),
                    _ => return Err(bad()),
                };
                let mut w = vec![a; n];
                w[n - 1] = b;
                (CoxeterMatrix::type_b(n)?, w)
            }
            "b2" => {
                need(2)?;
                (CoxeterMatrix::dihedral(Some(4))?, nums.clone())
            }
            "g2" => {
                need(2)?;
                (CoxeterMatrix::dihedral(Some(6))?, nums.clone())
            }
            "i2m" => {
                need(3)?;
                (CoxeterMatrix::dihedral(Some(nums[0] as u32))?, nums[1..].to_vec())
            }
            "i2inf" => {
                need(2)?;
                (CoxeterMatrix::dihedral(None)?, nums.clone())
            }
            "affa" => {
                need(1)?;
                let n = pos(nums[0])?;
                (CoxeterMatrix::affine_a(n)?, vec![1; n + 1])
            }
            "affc" => {
                need(1)?;
                let p = pos(nums[0])?;
                (CoxeterMatrix::affine_c(p)?, vec![1; p + 1])
            }
            _ => return Err(Error::Parse(format!("unknown preset '{spec}'"))),
        };
        Ok(Self::new(m, w, EngineHint::Auto)?.with_name(spec))
    }
}
