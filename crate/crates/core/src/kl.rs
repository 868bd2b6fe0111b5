//! The canonical basis `c_w`, the polynomials `p_{y,w}`, `μ^s_{y,w}`, structure constants
//! `h_{x,y,z}`, the inverse matrix `q′` and the functionals `D_z`.

use std::collections::{BTreeMap, HashMap};
use std::hash::{Hash, Hasher};
use std::path::{Path, PathBuf};
use std::sync::{Arc, RwLock};

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::coxeter::{CoxeterSystem, Element, Gen, Side};
use crate::error::{Error, Result};
use crate::hecke::{Basis, Hecke, HeckeElt};
use crate::rings::Laurent;

/// Sparse column `y ↦ value`.
pub type Column = BTreeMap<Element, Laurent>;

type Cache<K> = RwLock<HashMap<K, Arc<Column>>>;

/// Memoized Kazhdan–Lusztig data for one weighted system.
pub struct Kl {
    hecke: Hecke,
    p: Cache<Element>,
    mu: Cache<(Gen, Element)>,
    q: Cache<Element>,
    u: Cache<Element>,
    h: RwLock<HashMap<(Element, Element), Arc<HeckeElt>>>,
}

fn get_or<K: Hash + Eq + Clone, V: Clone>(cache: &RwLock<HashMap<K, V>>, key: &K, f: impl FnOnce() -> V) -> V {
    if let Some(v) = cache.read().unwrap().get(key) {
        return v.clone();
    }
    let v = f();
    cache.write().unwrap().entry(key.clone()).or_insert(v).clone()
}

impl Kl {
    pub fn new(sys: Arc<CoxeterSystem>) -> Self {
        Kl {
            hecke: Hecke::new(sys),
            p: RwLock::default(),
            mu: RwLock::default(),
            q: RwLock::default(),
            u: RwLock::default(),
            h: RwLock::default(),
        }
    }

    pub fn system(&self) -> &Arc<CoxeterSystem> {
        self.hecke.system()
    }

    pub fn hecke(&self) -> &Hecke {
        &self.hecke
    }

    fn sys(&self) -> &CoxeterSystem {
        self.hecke.system()
    }

    /// All nonzero `p_{y,w}` for fixed `w`.
    pub fn p_column(&self, w: &Element) -> Arc<Column> {
        get_or(&self.p, w, || Arc::new(self.compute_column(w)))
    }

    fn compute_column(&self, w: &Element) -> Column {
        let mut col = Column::new();
        if w.is_identity() {
            col.insert(Element::identity(), Laurent::one());
            return col;
        }
        let sys = self.sys();
        let s = w.word()[0];
        let sw = Element::from_canonical_prefix_drop(w);
        let prev = self.p_column(&sw);
        let ls = sys.gen_weight(s);
        let mut acc = HeckeElt::zero(Basis::T);
        if ls == 0 {
            for (y, c) in prev.iter() {
                acc.add_term(sys.lmul(s, y), c);
            }
            return acc.into_terms();
        }
        // (T_s + v_s⁻¹) c_{sw}
        let vinv = Laurent::v_pow(-ls);
        let q = Laurent::v_minus_vinv(ls);
        for (y, c) in prev.iter() {
            let (sy, d) = sys.mul_gen(y, s, Side::Left);
            acc.add_term(sy, c);
            if d < 0 {
                acc.add_term(y.clone(), &(c * &q));
            }
            acc.add_term(y.clone(), &(c * &vinv));
        }
        for (z, m) in self.mu_column(s, &sw).iter() {
            let cz = self.p_column(z);
            for (y, c) in cz.iter() {
                acc.add_term(y.clone(), &-(c * m));
            }
        }
        acc.into_terms()
    }

    pub fn p(&self, y: &Element, w: &Element) -> Laurent {
        if y.length() > w.length() {
            return Laurent::zero();
        }
        self.p_column(w).get(y).cloned().unwrap_or_default()
    }

    /// `c_w` in the `T`-basis.
    pub fn c(&self, w: &Element) -> HeckeElt {
        HeckeElt::from_map(Basis::T, self.p_column(w).iter().map(|(y, c)| (y.clone(), c.clone())))
    }

    /// All nonzero `μ^s_{z,w}` (`sz < z < w < sw`); requires `L(s) > 0` and `w < sw`.
    fn mu_column(&self, s: Gen, w: &Element) -> Arc<Column> {
        get_or(&self.mu, &(s, w.clone()), || Arc::new(self.compute_mu_column(s, w)))
    }

    fn compute_mu_column(&self, s: Gen, w: &Element) -> Column {
        let sys = self.sys();
        let vs = sys.v_s(s);
        let pw = self.p_column(w);
        let lower = sys.lower_set(w);
        let mut out = Column::new();
        for y in lower.iter().rev() {
            if y == w || !sys.is_descent(y, s, Side::Left) {
                continue;
            }
            let mut val = &vs * &pw.get(y).cloned().unwrap_or_default();
            for (z, m) in out.iter() {
                if z.length() <= y.length() {
                    continue;
                }
                if let Some(pyz) = self.p_column(z).get(y) {
                    val -= &(pyz * m);
                }
            }
            let mu = val.bar_symmetrize_nonneg();
            if !mu.is_zero() {
                out.insert(y.clone(), mu);
            }
        }
        out
    }

    /// `μ^s_{y,w}` for `sy < y < w < sw`.
    pub fn mu(&self, s: Gen, y: &Element, w: &Element) -> Result<Laurent> {
        let sys = self.sys();
        if sys.gen_weight(s) <= 0 {
            return Err(Error::PreconditionViolated(format!("mu needs L(s{}) > 0", s + 1)));
        }
        if !sys.is_descent(y, s, Side::Left) || sys.is_descent(w, s, Side::Left) || y == w || !sys.bruhat_leq(y, w) {
            return Err(Error::PreconditionViolated(format!("mu needs s y < y < w < s w for s = {}, y = {}, w = {}", s + 1, y.label(), w.label())));
        }
        Ok(self.mu_column(s, w).get(y).cloned().unwrap_or_default())
    }

    /// `c_s c_w` (`side = Left`) or `c_w c_s` (`side = Right`) in the `c`-basis.
    pub fn cs_mul_c(&self, s: Gen, w: &Element, side: Side) -> HeckeElt {
        let sys = self.sys();
        let ls = sys.gen_weight(s);
        let (sw, d) = sys.mul_gen(w, s, side);
        if ls == 0 {
            return HeckeElt::basis_elt(Basis::C, sw);
        }
        if d < 0 {
            return HeckeElt::term(Basis::C, w.clone(), Laurent::v_plus_vinv(ls));
        }
        let mut out = HeckeElt::basis_elt(Basis::C, sw);
        match side {
            Side::Left => {
                for (z, m) in self.mu_column(s, w).iter() {
                    out.add_term(z.clone(), m);
                }
            }
            Side::Right => {
                for (z, m) in self.mu_column(s, &sys.inverse(w)).iter() {
                    out.add_term(sys.inverse(z), m);
                }
            }
        }
        out
    }

    /// `c_s · h` or `h · c_s` for `h` in the `c`-basis.
    pub fn cs_mul(&self, s: Gen, h: &HeckeElt, side: Side) -> HeckeElt {
        assert_eq!(h.basis(), Basis::C);
        let mut out = HeckeElt::zero(Basis::C);
        for (w, a) in h.terms() {
            out.add_scaled(&self.cs_mul_c(s, w, side), a);
        }
        out
    }

    /// `c_x c_y = Σ_z h_{x,y,z} c_z`, by peeling generators off `x`.
    pub fn h(&self, x: &Element, y: &Element) -> Arc<HeckeElt> {
        let key = (x.clone(), y.clone());
        if let Some(v) = self.h.read().unwrap().get(&key) {
            return v.clone();
        }
        let res = if x.is_identity() {
            HeckeElt::basis_elt(Basis::C, y.clone())
        } else {
            let s = x.word()[0];
            let sx = Element::from_canonical_prefix_drop(x);
            let mut acc = self.cs_mul(s, &self.h(&sx, y), Side::Left);
            if self.sys().gen_weight(s) > 0 {
                for (z, m) in self.mu_column(s, &sx).iter() {
                    acc.add_scaled(&self.h(z, y), &-m);
                }
            }
            acc
        };
        let res = Arc::new(res);
        self.h.write().unwrap().insert(key, res.clone());
        res
    }

    /// `h_{x,y,z}`.
    pub fn h_coeff(&self, x: &Element, y: &Element, z: &Element) -> Laurent {
        self.h(x, y).coeff(z)
    }

    /// `c_x c_y` computed in the `T`-basis and converted back by elimination.
    pub fn h_via_t(&self, x: &Element, y: &Element) -> HeckeElt {
        self.to_c(&self.hecke.t_mul(&self.c(x), &self.c(y)))
    }

    /// `T`-coordinates to `c`-coordinates: subtract `a·c_z` at the ShortLex-greatest support element.
    pub fn to_c(&self, h: &HeckeElt) -> HeckeElt {
        assert_eq!(h.basis(), Basis::T);
        let mut rest = h.clone();
        let mut out = HeckeElt::zero(Basis::C);
        while let Some((z, a)) = rest.leading().map(|(z, a)| (z.clone(), a.clone())) {
            out.add_term(z.clone(), &a);
            rest.add_scaled(&self.c(&z), &-a);
        }
        out
    }

    pub fn to_t(&self, h: &HeckeElt) -> HeckeElt {
        assert_eq!(h.basis(), Basis::C);
        let mut out = HeckeElt::zero(Basis::T);
        for (w, a) in h.terms() {
            out.add_scaled(&self.c(w), a);
        }
        out
    }

    /// Product of two `c`-basis combinations, via `h`.
    pub fn c_mul(&self, a: &HeckeElt, b: &HeckeElt) -> HeckeElt {
        assert!(a.basis() == Basis::C && b.basis() == Basis::C);
        let mut out = HeckeElt::zero(Basis::C);
        for (x, ca) in a.terms() {
            for (y, cb) in b.terms() {
                out.add_scaled(&self.h(x, y), &(ca * cb));
            }
        }
        out
    }

    /// All nonzero `q′_{y,w}` for fixed `w` (the inverse of the `p` matrix).
    pub fn q_column(&self, w: &Element) -> Arc<Column> {
        get_or(&self.q, w, || {
            let lower = self.sys().lower_set(w);
            let mut out = Column::new();
            out.insert(w.clone(), Laurent::one());
            for y in lower.iter().rev().skip(1) {
                let mut acc = Laurent::zero();
                for (z, qz) in out.iter() {
                    if z.length() > y.length() {
                        if let Some(pyz) = self.p_column(z).get(y) {
                            acc -= &(pyz * qz);
                        }
                    }
                }
                if !acc.is_zero() {
                    out.insert(y.clone(), acc);
                }
            }
            Arc::new(out)
        })
    }

    pub fn qprime(&self, y: &Element, w: &Element) -> Laurent {
        if y.length() > w.length() {
            return Laurent::zero();
        }
        self.q_column(w).get(y).cloned().unwrap_or_default()
    }

    /// `q_{y,w} = sg(y) sg(w) q′_{y,w}`.
    pub fn q(&self, y: &Element, w: &Element) -> Laurent {
        let q = self.qprime(y, w);
        if (y.length() + w.length()) % 2 == 1 {
            -q
        } else {
            q
        }
    }

    /// `D_z(h)`, with `D_z(T_y) = q′_{z,y}` and `D_z(c_w) = δ_{z,w}`.
    pub fn d_functional(&self, z: &Element, h: &HeckeElt) -> Laurent {
        match h.basis() {
            Basis::C => h.coeff(z),
            Basis::T => {
                let mut acc = Laurent::zero();
                for (y, a) in h.terms() {
                    let q = self.qprime(z, y);
                    if !q.is_zero() {
                        acc += &(a * &q);
                    }
                }
                acc
            }
        }
    }

    /// Independent construction of `p_{y,w}` from `r`-polynomials and bar-invariance alone.
    pub fn p_via_r(&self, y: &Element, w: &Element) -> Laurent {
        let col = get_or(&self.u, w, || {
            let lower = self.sys().lower_set(w);
            let mut u = Column::new();
            u.insert(w.clone(), Laurent::one());
            for x in lower.iter().rev().skip(1) {
                let mut a = Laurent::zero();
                for (z, uz) in u.iter() {
                    if z.length() > x.length() {
                        a += &(&self.hecke.r_poly(x, z) * uz);
                    }
                }
                // bar(u) − u = a with u ∈ A_{<0} forces u = −(negative part of a).
                let ux = -a.truncate_above(-1);
                if !ux.is_zero() {
                    u.insert(x.clone(), ux);
                }
            }
            Arc::new(u)
        });
        col.get(y).cloned().unwrap_or_default()
    }

    /// `bar(h) = h` and `τ(h h^♭) ∈ 1 + A_{<0}`: the characterization of `±c_w`.
    pub fn is_signed_canonical(&self, h: &HeckeElt) -> bool {
        let hk = &self.hecke;
        if hk.bar(h) != *h {
            return false;
        }
        let t = hk.tau(&hk.t_mul(h, &hk.flat(h)));
        (&t - &Laurent::one()).in_neg()
    }

    /// Fills the `p` cache for `elems` in parallel, shortest first.
    pub fn precompute(&self, elems: &[Element]) {
        let mut by_len: BTreeMap<usize, Vec<&Element>> = BTreeMap::new();
        for e in elems {
            by_len.entry(e.length()).or_default().push(e);
        }
        for layer in by_len.values() {
            layer.par_iter().for_each(|w| {
                self.p_column(w);
            });
        }
    }

    /// Stable identifier of the weighted matrix, used for on-disk caches.
    pub fn system_hash(&self) -> String {
        let mut hs = std::collections::hash_map::DefaultHasher::new();
        self.sys().to_config().hash(&mut hs);
        format!("{:016x}", hs.finish())
    }

    fn cache_dir(&self, root: &Path) -> PathBuf {
        root.join(self.system_hash()).join("p")
    }

    /// Writes one JSON file per cached `p` column.
    pub fn save_columns(&self, root: &Path) -> std::io::Result<usize> {
        let dir = self.cache_dir(root);
        std::fs::create_dir_all(&dir)?;
        let cols = self.p.read().unwrap();
        for (w, col) in cols.iter() {
            let entries: Vec<Value> = col.iter().map(|(y, c)| json!([y.to_text(), c.to_json()])).collect();
            let name = if w.is_identity() { "e".to_string() } else { w.to_text() };
            std::fs::write(dir.join(format!("{name}.json")), json!({"w": w.to_text(), "p": entries}).to_string())?;
        }
        Ok(cols.len())
    }

    /// Loads previously saved `p` columns.
    pub fn load_columns(&self, root: &Path) -> Result<usize> {
        let dir = self.cache_dir(root);
        let Ok(rd) = std::fs::read_dir(&dir) else { return Ok(0) };
        let mut n = 0;
        for entry in rd.flatten() {
            let txt = std::fs::read_to_string(entry.path()).map_err(|e| Error::Parse(e.to_string()))?;
            let v: Value = serde_json::from_str(&txt).map_err(|e| Error::Parse(e.to_string()))?;
            let w = self.sys().parse_element(v["w"].as_str().unwrap_or(""))?;
            let mut col = Column::new();
            for t in v["p"].as_array().ok_or_else(|| Error::Parse("cache column".into()))? {
                col.insert(self.sys().parse_element(t[0].as_str().unwrap_or(""))?, Laurent::from_json(&t[1])?);
            }
            self.p.write().unwrap().insert(w, Arc::new(col));
            n += 1;
        }
        Ok(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kl(spec: &str) -> Kl {
        Kl::new(Arc::new(CoxeterSystem::preset(spec).unwrap()))
    }

    #[test]
    fn generator_column() {
        let k = kl("b2:1,2");
        let s = k.system().gen(1);
        let c = k.c(&s);
        assert_eq!(c.coeff(&Element::identity()), Laurent::v_pow(-2));
        assert_eq!(c.coeff(&s), Laurent::one());
    }

    #[test]
    fn infinite_dihedral_unequal() {
        let k = kl("i2inf:1,2");
        let sys = k.system();
        let y = sys.parse_element("1").unwrap();
        let w = sys.parse_element("1.2.1").unwrap();
        assert_eq!(k.p(&y, &w), "v^-3 + v^-1".parse().unwrap());
        let m = k.mu(1, &sys.parse_element("2").unwrap(), &sys.parse_element("1.2").unwrap()).unwrap();
        assert_eq!(m, "v^-1 + v".parse().unwrap());
    }

    #[test]
    fn oracle_agrees_on_g2() {
        let k = kl("g2:1,2");
        let all = k.system().all_elements().unwrap();
        for w in &all {
            for y in &all {
                assert_eq!(k.p(y, w), k.p_via_r(y, w), "p({y}, {w})");
            }
        }
    }

    #[test]
    fn h_algorithms_agree() {
        let k = kl("b2:1,2");
        let all = k.system().all_elements().unwrap();
        for x in &all {
            for y in &all {
                assert_eq!(*k.h(x, y), k.h_via_t(x, y));
            }
        }
    }

    #[test]
    fn cache_roundtrip() {
        let k = kl("a3");
        let all = k.system().all_elements().unwrap();
        k.precompute(&all);
        let dir = std::env::temp_dir().join(format!("coxhecke-test-{}", std::process::id()));
        assert_eq!(k.save_columns(&dir).unwrap(), 24);
        let k2 = kl("a3");
        assert_eq!(k2.load_columns(&dir).unwrap(), 24);
        for w in &all {
            assert_eq!(k.p_column(w), k2.p_column(w));
        }
        std::fs::remove_dir_all(&dir).ok();
    }
}
