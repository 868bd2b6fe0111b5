//! The Iwahori–Hecke algebra in the standard basis `T_w`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use serde_json::{json, Value};

use crate::coxeter::{CoxeterSystem, Element, Gen, Side};
use crate::error::{Error, Result};
use crate::rings::Laurent;

/// Which basis the coefficients of a [`HeckeElt`] refer to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    T,
    C,
}

/// A finite combination `Σ a_w T_w` (or `Σ a_w c_w`).
#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElt {
    basis: Basis,
    terms: BTreeMap<Element, Laurent>,
}

impl HeckeElt {
    pub fn zero(basis: Basis) -> Self {
        HeckeElt { basis, terms: BTreeMap::new() }
    }

    pub fn basis_elt(basis: Basis, w: Element) -> Self {
        Self::term(basis, w, Laurent::one())
    }

    pub fn t(w: Element) -> Self {
        Self::basis_elt(Basis::T, w)
    }

    pub fn term(basis: Basis, w: Element, c: Laurent) -> Self {
        let mut h = Self::zero(basis);
        h.add_term(w, &c);
        h
    }

    pub fn from_map(basis: Basis, m: impl IntoIterator<Item = (Element, Laurent)>) -> Self {
        let mut h = Self::zero(basis);
        for (w, c) in m {
            h.add_term(w, &c);
        }
        h
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Element, Laurent> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Element, Laurent> {
        self.terms
    }

    pub fn coeff(&self, w: &Element) -> Laurent {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Element, c: &Laurent) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &HeckeElt, c: &Laurent) {
        assert_eq!(self.basis, other.basis, "mixing T and C coordinates");
        if c.is_zero() {
            return;
        }
        for (w, a) in &other.terms {
            self.add_term(w.clone(), &(a * c));
        }
    }

    pub fn scale(&self, c: &Laurent) -> HeckeElt {
        let mut out = HeckeElt::zero(self.basis);
        out.add_scaled(self, c);
        out
    }

    pub fn add(&self, other: &HeckeElt) -> HeckeElt {
        let mut out = self.clone();
        out.add_scaled(other, &Laurent::one());
        out
    }

    pub fn sub(&self, other: &HeckeElt) -> HeckeElt {
        let mut out = self.clone();
        out.add_scaled(other, &Laurent::constant(-1));
        out
    }

    /// The element with the ShortLex-greatest support element, if any.
    pub fn leading(&self) -> Option<(&Element, &Laurent)> {
        self.terms.iter().next_back()
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self.terms.iter().map(|(w, c)| json!([w.to_text(), c.to_json()])).collect();
        json!({"basis": match self.basis { Basis::T => "T", Basis::C => "C" }, "terms": terms})
    }

    pub fn from_json(v: &Value, sys: &CoxeterSystem) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("HeckeElt JSON: {m}"));
        let basis = match v.get("basis").and_then(Value::as_str) {
            Some("T") => Basis::T,
            Some("C") => Basis::C,
            _ => return Err(bad("basis must be \"T\" or \"C\"")),
        };
        let mut h = HeckeElt::zero(basis);
        for t in v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("missing terms"))? {
            let w = t.get(0).and_then(Value::as_str).ok_or_else(|| bad("term element"))?;
            let c = Laurent::from_json(t.get(1).ok_or_else(|| bad("term coefficient"))?)?;
            h.add_term(sys.parse_element(w)?, &c);
        }
        Ok(h)
    }
}

impl fmt::Display for HeckeElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let b = match self.basis {
            Basis::T => "T",
            Basis::C => "c",
        };
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("({c}){b}_{}", w.label())).collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for HeckeElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Hecke algebra of a weighted Coxeter system, with an `r`-polynomial cache.
pub struct Hecke {
    sys: Arc<CoxeterSystem>,
    r: RwLock<HashMap<(Element, Element), Laurent>>,
}

impl Hecke {
    pub fn new(sys: Arc<CoxeterSystem>) -> Self {
        Hecke { sys, r: RwLock::new(HashMap::new()) }
    }

    pub fn system(&self) -> &Arc<CoxeterSystem> {
        &self.sys
    }

    /// `T_s · h` (`side = Left`) or `h · T_s` (`side = Right`).
    pub fn mul_gen(&self, h: &HeckeElt, s: Gen, side: Side) -> HeckeElt {
        assert_eq!(h.basis, Basis::T);
        let q = Laurent::v_minus_vinv(self.sys.gen_weight(s));
        let mut out = HeckeElt::zero(Basis::T);
        for (w, c) in &h.terms {
            let (sw, d) = self.sys.mul_gen(w, s, side);
            out.add_term(sw, c);
            if d < 0 && !q.is_zero() {
                out.add_term(w.clone(), &(c * &q));
            }
        }
        out
    }

    /// Product in the `T`-basis.
    pub fn t_mul(&self, a: &HeckeElt, b: &HeckeElt) -> HeckeElt {
        assert!(a.basis == Basis::T && b.basis == Basis::T, "t_mul needs T coordinates");
        let cost_left: usize = a.terms.keys().map(|x| x.length()).sum::<usize>() * b.len();
        let cost_right: usize = b.terms.keys().map(|y| y.length()).sum::<usize>() * a.len();
        let mut out = HeckeElt::zero(Basis::T);
        if cost_left <= cost_right {
            for (x, c) in &a.terms {
                let mut acc = b.clone();
                for &s in x.word().iter().rev() {
                    acc = self.mul_gen(&acc, s, Side::Left);
                }
                out.add_scaled(&acc, c);
            }
        } else {
            for (y, c) in &b.terms {
                let mut acc = a.clone();
                for &s in y.word() {
                    acc = self.mul_gen(&acc, s, Side::Right);
                }
                out.add_scaled(&acc, c);
            }
        }
        out
    }

    /// `r_{y,w}`, defined by `bar(T_w) = Σ bar(r_{y,w}) T_y`.
    pub fn r_poly(&self, y: &Element, w: &Element) -> Laurent {
        if y.length() > w.length() {
            return Laurent::zero();
        }
        if w.is_identity() {
            return if y.is_identity() { Laurent::one() } else { Laurent::zero() };
        }
        if y == w {
            return Laurent::one();
        }
        let key = (y.clone(), w.clone());
        if let Some(r) = self.r.read().unwrap().get(&key) {
            return r.clone();
        }
        let s = w.word()[0];
        let sw = Element::from_canonical_prefix_drop(w);
        let (sy, d) = self.sys.mul_gen(y, s, Side::Left);
        let r = if d < 0 {
            self.r_poly(&sy, &sw)
        } else {
            let mut r = self.r_poly(&sy, &sw);
            r += &(&Laurent::v_minus_vinv(self.sys.gen_weight(s)) * &self.r_poly(y, &sw));
            r
        };
        self.r.write().unwrap().insert(key, r.clone());
        r
    }

    /// `bar(T_w)` in the `T`-basis.
    pub fn bar_t(&self, w: &Element) -> HeckeElt {
        let mut out = HeckeElt::zero(Basis::T);
        for y in self.sys.lower_set(w).iter() {
            out.add_term(y.clone(), &self.r_poly(y, w).bar());
        }
        out
    }

    /// The bar involution (semilinear).
    pub fn bar(&self, h: &HeckeElt) -> HeckeElt {
        assert_eq!(h.basis, Basis::T);
        let mut out = HeckeElt::zero(Basis::T);
        for (w, c) in &h.terms {
            out.add_scaled(&self.bar_t(w), &c.bar());
        }
        out
    }

    /// `T_w ↦ T_{w⁻¹}`, an `A`-linear antiautomorphism.
    pub fn flat(&self, h: &HeckeElt) -> HeckeElt {
        HeckeElt::from_map(h.basis, h.terms.iter().map(|(w, c)| (self.sys.inverse(w), c.clone())))
    }

    /// `T_w ↦ sg(w) T_{w⁻¹}^{-1}`, an `A`-linear involution.
    pub fn dagger(&self, h: &HeckeElt) -> HeckeElt {
        assert_eq!(h.basis, Basis::T);
        let mut out = HeckeElt::zero(Basis::T);
        for (w, c) in &h.terms {
            let c = if self.sys.sign(w) < 0 { -c } else { c.clone() };
            out.add_scaled(&self.bar_t(w), &c);
        }
        out
    }

    /// `τ(h)`, the coefficient of `T_1`.
    pub fn tau(&self, h: &HeckeElt) -> Laurent {
        assert_eq!(h.basis, Basis::T);
        h.coeff(&Element::identity())
    }
}

impl Element {
    /// `s·w` where `s` is the first letter of the canonical word of `w`.
    pub(crate) fn from_canonical_prefix_drop(w: &Element) -> Element {
        Element::from_canonical(w.word()[1..].to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(spec: &str) -> Hecke {
        Hecke::new(Arc::new(CoxeterSystem::preset(spec).unwrap()))
    }

    #[test]
    fn quadratic_relation() {
        let h = setup("b2:1,2");
        let s = h.system().gen(1);
        let ts = HeckeElt::t(s.clone());
        let sq = h.t_mul(&ts, &ts);
        let mut want = HeckeElt::t(Element::identity());
        want.add_term(s, &Laurent::v_minus_vinv(2));
        assert_eq!(sq, want);
    }

    #[test]
    fn bar_of_generator() {
        let h = setup("a3");
        let s = h.system().gen(0);
        let b = h.bar(&HeckeElt::t(s.clone()));
        let mut want = HeckeElt::t(s);
        want.add_term(Element::identity(), &-Laurent::v_minus_vinv(1));
        assert_eq!(b, want);
        assert_eq!(h.r_poly(&Element::identity(), &h.system().gen(0)), Laurent::v_minus_vinv(1));
    }

    #[test]
    fn dagger_of_generator() {
        let h = setup("b2:1,2");
        let s = h.system().gen(0);
        let d = h.dagger(&HeckeElt::t(s.clone()));
        let mut want = HeckeElt::term(Basis::T, s, Laurent::constant(-1));
        want.add_term(Element::identity(), &Laurent::v_minus_vinv(1));
        assert_eq!(d, want);
    }

    #[test]
    fn lengths_add_in_infinite_dihedral() {
        let h = setup("i2inf:1,1");
        let x = h.system().parse_element("1.2").unwrap();
        let y = h.system().parse_element("1.2").unwrap();
        let p = h.t_mul(&HeckeElt::t(x), &HeckeElt::t(y));
        assert_eq!(p, HeckeElt::t(h.system().parse_element("1.2.1.2").unwrap()));
    }
}
