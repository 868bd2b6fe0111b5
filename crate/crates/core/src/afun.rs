//! The a-function, Δ, n_z, the set 𝒟 and the γ-constants, read off an h-table.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt::Write as _;
use std::sync::Arc;

use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::cells::{edges, CellKind, Region};
use crate::coxeter::{CoxeterSystem, Element, Gen};
use crate::error::{Error, Result};
use crate::kl::Kl;
use crate::rings::Laurent;

/// Why an a-value is trusted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// Whole finite group tabulated.
    Finite,
    /// `z = 1`.
    Identity,
    /// The window maximum reaches the bound `N`.
    Bound,
    /// Every `u` with `z ≤_LR u` (seen in the window) lies in the trusted core. Heuristic.
    UpperSet,
    None,
}

impl Certificate {
    pub fn is_certified(self) -> bool {
        self != Certificate::None
    }

    pub fn name(self) -> &'static str {
        match self {
            Certificate::Finite => "finite",
            Certificate::Identity => "identity",
            Certificate::Bound => "bound",
            Certificate::UpperSet => "upper-set",
            Certificate::None => "none",
        }
    }
}

/// `max_I L(w₀^I)` over finite parabolic subgroups; `L(w₀)` when W is finite.
pub fn a_bound(sys: &CoxeterSystem) -> i64 {
    let n = sys.rank();
    let mut best = 0;
    for mask in 0u64..(1u64 << n) {
        let gens: Vec<Gen> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| i as Gen).collect();
        if let Ok(w0) = sys.longest_element(&gens) {
            best = best.max(sys.weight(&w0));
        }
    }
    best
}

/// h-table over a region together with everything derived from it.
pub struct AData {
    pub kl: Arc<Kl>,
    pub region: Region,
    /// `(x, y) ↦ [(z, h_{x,y,z})]`, `z` restricted to the region (indices into `region.elems()`).
    pub h_table: HashMap<(usize, usize), Vec<(usize, Laurent)>>,
    pub a: Vec<i64>,
    pub cert: Vec<Certificate>,
    pub delta: Vec<i64>,
    pub nz: Vec<i64>,
    /// Index of `z⁻¹`, when inside the region.
    pub inv: Vec<Option<usize>>,
    pub bound: i64,
}

impl AData {
    pub fn build(kl: Arc<Kl>, region: Region) -> Result<Self> {
        let sys = kl.system().clone();
        sys.require_positive()?;
        let el = region.elems().to_vec();
        let n = el.len();
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
        let h_table: HashMap<(usize, usize), Vec<(usize, Laurent)>> = pairs
            .par_iter()
            .map(|&(i, j)| {
                let h = kl.h(&el[i], &el[j]);
                let v: Vec<(usize, Laurent)> = h.terms().iter().filter_map(|(z, c)| region.index_of(z).map(|k| (k, c.clone()))).collect();
                ((i, j), v)
            })
            .collect();
        let mut a = vec![0i64; n];
        for v in h_table.values() {
            for (k, c) in v {
                if let Some(d) = c.max_exp() {
                    a[*k] = a[*k].max(d);
                }
            }
        }
        let bound = a_bound(&sys);
        let one = Element::identity();
        let (delta, nz): (Vec<i64>, Vec<i64>) = el
            .par_iter()
            .map(|z| {
                let p = kl.p(&one, z);
                let (e, c) = p.top().expect("p_{1,z} is nonzero");
                (-e, c.to_i64().expect("n_z fits in i64"))
            })
            .unzip();
        let inv = el.iter().map(|z| region.index_of(&sys.inverse(z))).collect();
        let mut cert = vec![Certificate::None; n];
        if region.is_whole() {
            cert.fill(Certificate::Finite);
        } else {
            let mut pending = Vec::new();
            for (k, z) in el.iter().enumerate() {
                if z.is_identity() {
                    cert[k] = Certificate::Identity;
                } else if a[k] == bound {
                    cert[k] = Certificate::Bound;
                } else {
                    pending.push(k);
                }
            }
            if !pending.is_empty() {
                let e = edges(&kl, &region, CellKind::TwoSided)?;
                let mut rev = vec![Vec::new(); n];
                for &(u, w) in &e {
                    rev[w].push(u);
                }
                for k in pending {
                    if upper_set_in_core(&rev, k, &el, &region) {
                        cert[k] = Certificate::UpperSet;
                    }
                }
            }
        }
        Ok(AData { kl, region, h_table, a, cert, delta, nz, inv, bound })
    }

    /// Whole group when finite, otherwise a ball of the given radius and margin.
    pub fn build_auto(kl: Arc<Kl>, radius: usize, margin: usize) -> Result<Self> {
        let region = Region::auto(kl.system(), radius, margin)?;
        Self::build(kl, region)
    }

    pub fn sys(&self) -> &Arc<CoxeterSystem> {
        self.kl.system()
    }

    pub fn elems(&self) -> &[Element] {
        self.region.elems()
    }

    pub fn idx(&self, w: &Element) -> Result<usize> {
        self.region.index_of(w).ok_or_else(|| Error::UncertifiedRegion(format!("{} is outside the region", w.label())))
    }

    /// `h_{x,y,z}` from the table.
    pub fn h(&self, x: usize, y: usize, z: usize) -> Laurent {
        self.h_table[&(x, y)].iter().find(|(k, _)| *k == z).map(|(_, c)| c.clone()).unwrap_or_default()
    }

    /// Windowed a-value and whether it is certified.
    pub fn a_of(&self, z: &Element) -> Result<(i64, bool)> {
        let k = self.idx(z)?;
        Ok((self.a[k], self.cert[k].is_certified()))
    }

    /// Certified a-value.
    pub fn a_cert(&self, k: usize) -> Result<i64> {
        if self.cert[k].is_certified() {
            Ok(self.a[k])
        } else {
            Err(Error::UncertifiedRegion(format!("a({}) = {} is only a window lower bound", self.elems()[k].label(), self.a[k])))
        }
    }

    pub fn delta_of(&self, z: &Element) -> Result<i64> {
        Ok(self.delta[self.idx(z)?])
    }

    pub fn n_of(&self, z: &Element) -> Result<i64> {
        Ok(self.nz[self.idx(z)?])
    }

    /// Trusted indices: whole region, or the core of a ball.
    pub fn core(&self) -> Vec<usize> {
        (0..self.elems().len()).filter(|&k| self.region.in_core(&self.elems()[k])).collect()
    }

    /// `𝒟 = {z : a(z) = Δ(z)}` over the core.
    pub fn dset(&self) -> Result<Vec<Element>> {
        let mut out = Vec::new();
        for k in self.core() {
            if self.a_cert(k)? == self.delta[k] {
                out.push(self.elems()[k].clone());
            }
        }
        Ok(out)
    }

    /// Same as `dset`, by index.
    pub fn dset_idx(&self) -> Result<Vec<usize>> {
        let d = self.dset()?;
        Ok(d.iter().map(|w| self.region.index_of(w).unwrap()).collect())
    }

    /// `γ_{x,y,z}` = coefficient of `v^{a(z⁻¹)}` in `h_{x,y,z⁻¹}`, by index.
    pub fn gamma_idx(&self, x: usize, y: usize, z: usize) -> Result<i64> {
        let zi = self.inv[z].ok_or_else(|| Error::UncertifiedRegion(format!("inverse of {} is outside the region", self.elems()[z].label())))?;
        let a = self.a_cert(zi)?;
        Ok(self.h(x, y, zi).coeff_i64(a))
    }

    pub fn gamma(&self, x: &Element, y: &Element, z: &Element) -> Result<i64> {
        self.gamma_idx(self.idx(x)?, self.idx(y)?, self.idx(z)?)
    }

    /// All nonzero `γ_{x,y,z}` with `x, y, z` in the core.
    pub fn gamma_table(&self) -> Result<BTreeMap<(usize, usize, usize), i64>> {
        let core = self.core();
        let incore: Vec<bool> = (0..self.elems().len()).map(|k| self.region.in_core(&self.elems()[k])).collect();
        let mut out = BTreeMap::new();
        for &x in &core {
            for &y in &core {
                for (zi, c) in &self.h_table[&(x, y)] {
                    let Some(z) = self.inv[*zi] else { continue };
                    if !incore[z] {
                        continue;
                    }
                    let g = c.coeff_i64(self.a_cert(*zi)?);
                    if g != 0 {
                        out.insert((x, y, z), g);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Set of certified a-values on the core.
    pub fn a_values(&self) -> Result<Vec<i64>> {
        let mut v: Vec<i64> = self.core().into_iter().map(|k| self.a_cert(k)).collect::<Result<_>>()?;
        v.sort();
        v.dedup();
        Ok(v)
    }

    /// `z,a,certified,delta,n`.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("z,a,certified,delta,n\n");
        for k in self.core() {
            let _ = writeln!(s, "{},{},{},{},{}", self.elems()[k].to_text(), self.a[k], self.cert[k].name(), self.delta[k], self.nz[k]);
        }
        s
    }

    /// `x,y,z,gamma`.
    pub fn gamma_csv(&self) -> Result<String> {
        let mut s = String::from("x,y,z,gamma\n");
        let el = self.elems();
        for ((x, y, z), g) in self.gamma_table()? {
            let _ = writeln!(s, "{},{},{},{}", el[x].to_text(), el[y].to_text(), el[z].to_text(), g);
        }
        Ok(s)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .core()
            .into_iter()
            .map(|k| serde_json::json!({"z": self.elems()[k].to_text(), "a": self.a[k], "certified": self.cert[k].name(), "delta": self.delta[k], "n": self.nz[k]}))
            .collect();
        serde_json::json!({"region": self.region.describe(), "bound": self.bound, "elements": rows})
    }
}

fn upper_set_in_core(rev: &[Vec<usize>], start: usize, el: &[Element], region: &Region) -> bool {
    let mut seen = vec![false; el.len()];
    let mut q = VecDeque::from([start]);
    seen[start] = true;
    while let Some(w) = q.pop_front() {
        if !region.in_core(&el[w]) {
            return false;
        }
        for &u in &rev[w] {
            if !seen[u] {
                seen[u] = true;
                q.push_back(u);
            }
        }
    }
    true
}
