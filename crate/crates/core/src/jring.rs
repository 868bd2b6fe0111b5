//! The asymptotic ring J, its unit, and the homomorphism φ: ℋ → J_A.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::afun::AData;
use crate::cells::{CellKind, CellPartition};
use crate::coxeter::Element;
use crate::error::{Error, Result};
use crate::hecke::{Basis, HeckeElt};
use crate::rings::Laurent;

/// Coefficients of a J-element.
pub trait Coef: Clone + PartialEq + fmt::Display {
    fn zero() -> Self;
    fn from_int(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
}

impl Coef for i64 {
    fn zero() -> Self {
        0
    }
    fn from_int(n: i64) -> Self {
        n
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
}

impl Coef for Laurent {
    fn zero() -> Self {
        Laurent::zero()
    }
    fn from_int(n: i64) -> Self {
        Laurent::constant(n)
    }
    fn is_zero(&self) -> bool {
        Laurent::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
}

/// `Σ c_z t_z`.
#[derive(Clone, Debug, PartialEq)]
pub struct JElt<C> {
    pub terms: BTreeMap<Element, C>,
}

impl<C: Coef> JElt<C> {
    pub fn zero() -> Self {
        JElt { terms: BTreeMap::new() }
    }

    pub fn t(z: Element) -> Self {
        Self::term(z, C::from_int(1))
    }

    pub fn term(z: Element, c: C) -> Self {
        let mut e = Self::zero();
        e.add_term(z, &c);
        e
    }

    pub fn add_term(&mut self, z: Element, c: &C) {
        if c.is_zero() {
            return;
        }
        let v = self.terms.get(&z).map(|a| a.add(c)).unwrap_or_else(|| c.clone());
        if v.is_zero() {
            self.terms.remove(&z);
        } else {
            self.terms.insert(z, v);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (z, c) in &o.terms {
            r.add_term(z.clone(), c);
        }
        r
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut r = Self::zero();
        for (z, a) in &self.terms {
            r.add_term(z.clone(), &a.mul(c));
        }
        r
    }

    pub fn coeff(&self, z: &Element) -> C {
        self.terms.get(z).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.terms.iter().map(|(z, c)| json!([z.to_text(), c.to_string()])).collect())
    }
}

impl<C: Coef> fmt::Display for JElt<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(z, c)| format!("({c}) t_{}", z.label())).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// J-element with integer coefficients.
pub type JInt = JElt<i64>;
/// J_A-element with Laurent coefficients.
pub type JLaurent = JElt<Laurent>;

/// Structure constants of J over the trusted core of an `AData` region.
pub struct JTable<'a> {
    pub data: &'a AData,
    /// `(x, y) ↦ t_x t_y`.
    pub products: BTreeMap<(Element, Element), JInt>,
    /// Pairs whose product may involve elements outside the trusted core.
    pub incomplete: BTreeSet<(Element, Element)>,
    pub dset: Vec<(Element, i64)>,
    pub nhat: HashMap<Element, i64>,
    pub left_cells: CellPartition,
    core: BTreeSet<Element>,
}

impl<'a> JTable<'a> {
    pub fn build(data: &'a AData) -> Result<Self> {
        let el = data.elems();
        let core: BTreeSet<Element> = data.core().into_iter().map(|k| el[k].clone()).collect();
        let dset: Vec<(Element, i64)> = data.dset_idx()?.into_iter().map(|k| (el[k].clone(), data.nz[k])).collect();
        let mut products: BTreeMap<(Element, Element), JInt> = BTreeMap::new();
        for ((x, y, z), g) in data.gamma_table()? {
            let zi = data.inv[z].expect("gamma table only holds invertible slots");
            products.entry((el[x].clone(), el[y].clone())).or_insert_with(JInt::zero).add_term(el[zi].clone(), &g);
        }
        // products might leak outside the core: flag pairs where an outside term could carry γ.
        // a(z) is at least the least weight, and at least its window value when z is in the region.
        let min_w = data.sys().weights().iter().copied().min().unwrap_or(0);
        let floor = |z: &Element| data.region.index_of(z).map_or(min_w, |k| data.a[k].max(min_w));
        let mut incomplete = BTreeSet::new();
        for x in &core {
            for y in &core {
                let h = data.kl.h(x, y);
                let leak = h.terms().iter().any(|(z, c)| !core.contains(z) && c.max_exp().is_some_and(|d| d >= floor(z)));
                if leak {
                    incomplete.insert((x.clone(), y.clone()));
                }
            }
        }
        let left_cells = CellPartition::compute(&data.kl, &data.region, CellKind::Left)?;
        let mut nhat = HashMap::new();
        for z in &core {
            let zi = data.sys().inverse(z);
            let hits: Vec<&(Element, i64)> = dset.iter().filter(|(d, _)| left_cells.equiv(d, &zi) == Some(true)).collect();
            match hits.as_slice() {
                [(_, n)] => {
                    nhat.insert(z.clone(), *n);
                }
                _ => {
                    if left_cells.block_of(&zi).is_some() {
                        return Err(Error::PreconditionViolated(format!("left cell of {} contains {} elements of D", zi.label(), hits.len())));
                    }
                }
            }
        }
        Ok(JTable { data, products, incomplete, dset, nhat, left_cells, core })
    }

    pub fn core(&self) -> &BTreeSet<Element> {
        &self.core
    }

    /// `t_x t_y`.
    pub fn t_mul(&self, x: &Element, y: &Element) -> Result<JInt> {
        if !self.core.contains(x) || !self.core.contains(y) {
            return Err(Error::UncertifiedRegion(format!("t_{} t_{} needs elements outside the trusted core", x.label(), y.label())));
        }
        if self.incomplete.contains(&(x.clone(), y.clone())) {
            return Err(Error::UncertifiedRegion(format!("t_{} t_{} has terms beyond the trusted core", x.label(), y.label())));
        }
        Ok(self.products.get(&(x.clone(), y.clone())).cloned().unwrap_or_else(JInt::zero))
    }

    /// Product of J- or J_A-elements.
    pub fn j_mul<C: Coef>(&self, a: &JElt<C>, b: &JElt<C>) -> Result<JElt<C>> {
        let mut out = JElt::zero();
        for (x, cx) in &a.terms {
            for (y, cy) in &b.terms {
                let c = cx.mul(cy);
                for (z, g) in &self.t_mul(x, y)?.terms {
                    out.add_term(z.clone(), &c.mul(&C::from_int(*g)));
                }
            }
        }
        Ok(out)
    }

    /// `Σ_{d∈𝒟} n_d t_d`.
    pub fn unit<C: Coef>(&self) -> JElt<C> {
        let mut u = JElt::zero();
        for (d, n) in &self.dset {
            u.add_term(d.clone(), &C::from_int(*n));
        }
        u
    }

    pub fn nhat_of(&self, z: &Element) -> Result<i64> {
        self.nhat.get(z).copied().ok_or_else(|| Error::UncertifiedRegion(format!("n-hat of {} is not determined in the window", z.label())))
    }

    /// `φ(c_x^†) = Σ_{z, d∈𝒟, a(d)=a(z)} h_{x,d,z} n̂_z t_z`.
    pub fn phi_cdag(&self, x: &Element) -> Result<JLaurent> {
        let data = self.data;
        let mut out = JLaurent::zero();
        for (d, _) in &self.dset {
            let di = data.idx(d)?;
            let ad = data.a_cert(di)?;
            for (z, c) in data.kl.h(x, d).terms() {
                let zi = data.region.index_of(z);
                match zi {
                    Some(k) if self.core.contains(z) => {
                        if data.a_cert(k)? == ad {
                            out.add_term(z.clone(), &c.scale(&BigInt::from(self.nhat_of(z)?)));
                        }
                    }
                    _ => {
                        // a(z) ≥ a(d) holds for every z in c_x c_d; unknown a(z) blocks an exact answer
                        return Err(Error::UncertifiedRegion(format!("h_{{{},{}}} reaches {} outside the trusted core", x.label(), d.label(), z.label())));
                    }
                }
            }
        }
        Ok(out)
    }

    /// `φ(h)` for `h` in either basis: expand in the `c^†` basis first.
    pub fn phi(&self, h: &HeckeElt) -> Result<JLaurent> {
        let kl = &self.data.kl;
        let ht = if h.basis() == Basis::T { h.clone() } else { kl.to_t(h) };
        let coords = kl.to_c(&kl.hecke().dagger(&ht));
        let mut out = JLaurent::zero();
        for (x, c) in coords.terms() {
            out = out.add(&self.phi_cdag(x)?.scale(c));
        }
        Ok(out)
    }

    /// Two-sided-cell blocks of J with their units; errors if a cross-block product is nonzero.
    pub fn decomposition(&self) -> Result<Vec<JBlock>> {
        let lr = CellPartition::compute(&self.data.kl, &self.data.region, CellKind::TwoSided)?;
        for ((x, y), p) in &self.products {
            if lr.block_of(x) != lr.block_of(y) && !p.is_zero() {
                return Err(Error::PreconditionViolated(format!("t_{} t_{} = {} crosses two-sided cells", x.label(), y.label(), p)));
            }
        }
        Ok(lr
            .blocks
            .iter()
            .map(|b| {
                let set: BTreeSet<Element> = b.iter().cloned().collect();
                let mut unit = JInt::zero();
                for (d, n) in &self.dset {
                    if set.contains(d) {
                        unit.add_term(d.clone(), n);
                    }
                }
                JBlock { members: b.clone(), unit }
            })
            .collect())
    }

    /// Nonzero-determinant test for the matrix of φ on `c^†`-coordinates (sufficient for `ker φ = 0`).
    pub fn phi_injective(&self) -> Result<bool> {
        let xs: Vec<Element> = self.core.iter().cloned().collect();
        let rows: Vec<JLaurent> = xs.iter().map(|x| self.phi_cdag(x)).collect::<Result<_>>()?;
        let shift = rows.iter().flat_map(|r| r.terms.values()).filter_map(|c| c.min_exp()).min().unwrap_or(0);
        for v in [3i64, 5, 7] {
            let m: Vec<Vec<BigInt>> = rows
                .iter()
                .map(|r| xs.iter().map(|z| eval_at(&r.coeff(z).shift(-shift), v)).collect())
                .collect();
            if !bareiss_det(m).is_zero() {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// J table JSON: `{region, unit, products}`.
    pub fn to_json(&self) -> Value {
        let mut prods = serde_json::Map::new();
        for ((x, y), p) in &self.products {
            prods.insert(format!("{}|{}", x.to_text(), y.to_text()), Value::Array(p.terms.iter().map(|(z, c)| json!([z.to_text(), c])).collect()));
        }
        let unit: Vec<Value> = self.dset.iter().map(|(d, n)| json!([d.to_text(), n])).collect();
        json!({"region": self.data.region.describe(), "unit": unit, "products": prods})
    }
}

/// One two-sided-cell summand `J^c`.
#[derive(Clone, Debug)]
pub struct JBlock {
    pub members: Vec<Element>,
    pub unit: JInt,
}

/// Value at integer `v` of a polynomial in `v` (no negative exponents).
fn eval_at(p: &Laurent, v: i64) -> BigInt {
    let mut s = BigInt::zero();
    for (e, c) in p.terms() {
        assert!(*e >= 0);
        s += c * BigInt::from(v).pow(*e as u32);
    }
    s
}

/// Fraction-free Gaussian elimination.
fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let d = if n == 0 { BigInt::one() } else { m[n - 1][n - 1].clone() };
    if sign.is_negative() {
        -d
    } else {
        d
    }
}
