//! Side-by-side comparison of the generic engines with the dihedral closed formulas.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::afun::AData;
use crate::coxeter::{CoxeterSystem, Element};
use crate::dihedral_oracle::{DElt, DMap, DihedralSpec};
use crate::error::Result;
use crate::hecke::HeckeElt;
use crate::jring::JTable;
use crate::kl::Kl;

/// One disagreement between the generic engine and a closed formula.
#[derive(Clone, Debug)]
pub struct Discrepancy {
    pub area: &'static str,
    pub system: String,
    pub item: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, Default)]
pub struct OracleReport {
    /// Number of comparisons per area.
    pub checked: BTreeMap<&'static str, usize>,
    pub discrepancies: Vec<Discrepancy>,
}

impl OracleReport {
    pub fn is_clean(&self) -> bool {
        self.discrepancies.is_empty()
    }

    fn merge(&mut self, o: OracleReport) {
        for (k, n) in o.checked {
            *self.checked.entry(k).or_default() += n;
        }
        self.discrepancies.extend(o.discrepancies);
    }

    fn tick(&mut self, area: &'static str) {
        *self.checked.entry(area).or_default() += 1;
    }

    fn flag(&mut self, area: &'static str, spec: &DihedralSpec, item: String, expected: String, actual: String) {
        self.discrepancies.push(Discrepancy { area, system: spec.preset(), item, expected, actual });
    }

    pub fn to_json(&self) -> Value {
        let d: Vec<Value> = self
            .discrepancies
            .iter()
            .map(|d| json!({"area": d.area, "system": d.system, "item": d.item, "expected": d.expected, "actual": d.actual}))
            .collect();
        json!({"checked": self.checked, "discrepancies": d})
    }

    pub fn lines(&self) -> Vec<String> {
        let mut out: Vec<String> = self.checked.iter().map(|(a, n)| format!("{a}: {n} checks")).collect();
        for d in &self.discrepancies {
            out.push(format!("MISMATCH {} [{}] {}: expected {} got {}", d.area, d.system, d.item, d.expected, d.actual));
        }
        out.push(format!("{} discrepancies", self.discrepancies.len()));
        out
    }
}

/// What to compare.
#[derive(Clone, Debug)]
pub struct DiffOptions {
    /// Length window for the infinite dihedral group.
    pub window: u32,
    /// Longest factor in the product checks.
    pub product_len: u32,
    /// Radius and margin of the region used for a-values, `Δ`, `𝒟`, `γ` and J.
    pub radius: usize,
    pub margin: usize,
}

impl Default for DiffOptions {
    fn default() -> Self {
        DiffOptions { window: 12, product_len: 7, radius: 18, margin: 3 }
    }
}

struct Ctx {
    spec: DihedralSpec,
    sys: Arc<CoxeterSystem>,
    kl: Arc<Kl>,
}

impl Ctx {
    fn new(m: Option<u32>, l1: i64, l2: i64) -> Result<Self> {
        let spec = DihedralSpec::new(m, l1, l2)?;
        let sys = Arc::new(CoxeterSystem::preset(&spec.preset())?);
        let kl = Arc::new(Kl::new(sys.clone()));
        Ok(Ctx { spec, sys, kl })
    }

    fn el(&self, w: DElt) -> Element {
        self.sys.parse_element(&w.to_text()).expect("alternating words are valid")
    }

    fn d(&self, w: &Element) -> DElt {
        self.spec.parse(&w.to_text()).expect("dihedral elements are alternating words")
    }

    fn to_dmap(&self, h: &HeckeElt) -> DMap {
        h.terms().iter().map(|(w, c)| (self.d(w), c.clone())).collect()
    }
}

fn show(m: &DMap) -> String {
    if m.is_empty() {
        return "0".into();
    }
    m.iter().map(|(w, c)| format!("({c})*{w}")).collect::<Vec<_>>().join(" + ")
}

fn c_basis(cx: &Ctx, max_len: u32) -> OracleReport {
    let mut r = OracleReport::default();
    let items: Vec<(DElt, DMap, DMap)> = cx
        .spec
        .elements(max_len)
        .into_par_iter()
        .map(|w| (w, cx.spec.c_closed_form(w).expect("supported weights"), cx.to_dmap(&cx.kl.c(&cx.el(w)))))
        .collect();
    for (w, want, got) in items {
        r.tick("c-basis");
        if want != got {
            r.flag("c-basis", &cx.spec, format!("c_{w}"), show(&want), show(&got));
        }
    }
    r
}

fn products(cx: &Ctx, max_len: u32) -> OracleReport {
    let mut r = OracleReport::default();
    let el = cx.spec.elements(max_len);
    let pairs: Vec<(DElt, DElt)> = el.iter().flat_map(|&x| el.iter().map(move |&y| (x, y))).collect();
    let res: Vec<_> = pairs
        .into_par_iter()
        .filter_map(|(x, y)| {
            let forms = cx.spec.product_closed_form(x, y).ok()?;
            let got = cx.to_dmap(&cx.kl.h(&cx.el(x), &cx.el(y)));
            Some((x, y, forms, got))
        })
        .collect();
    for (x, y, forms, got) in res {
        for f in forms {
            r.tick("products");
            if !f.matches(&got) {
                let want = f.as_exact().map(|m| show(&m)).unwrap_or_else(|| format!("{:?}", f.terms));
                r.flag("products", &cx.spec, format!("c_{x} c_{y} ({})", f.name), want, show(&got));
            }
        }
    }
    r
}

fn t_products(cx: &Ctx, max_len: u32) -> OracleReport {
    let mut r = OracleReport::default();
    let el = cx.spec.elements(max_len);
    for &x in &el {
        for &y in &el {
            let want = cx.spec.t_mul(x, y).expect("infinite group");
            let got = cx.to_dmap(&cx.kl.hecke().t_mul(&HeckeElt::t(cx.el(x)), &HeckeElt::t(cx.el(y))));
            r.tick("T-products");
            if want != got {
                r.flag("T-products", &cx.spec, format!("T_{x} T_{y}"), show(&want), show(&got));
            }
        }
    }
    r
}

fn d_functional(cx: &Ctx, max_len: u32) -> OracleReport {
    let mut r = OracleReport::default();
    let want = cx.spec.d_s1_series(max_len).expect("L2 > L1");
    let s1 = cx.sys.gen(0);
    for y in cx.spec.elements(max_len) {
        let got = cx.kl.d_functional(&s1, &HeckeElt::t(cx.el(cx.spec.inverse(y))));
        let w = want.get(&y).cloned().unwrap_or_default();
        r.tick("D_s1");
        if w != got {
            r.flag("D_s1", &cx.spec, format!("coefficient of T_{y}"), w.to_string(), got.to_string());
        }
    }
    r
}

fn a_values(cx: &Ctx, data: &AData) -> OracleReport {
    let mut r = OracleReport::default();
    for k in data.core() {
        let z = &data.elems()[k];
        let w = cx.d(z);
        let want = cx.spec.a_value(w).expect("covered weights");
        r.tick("a-values");
        match data.a_cert(k) {
            Ok(a) if a == want => {}
            Ok(a) => r.flag("a-values", &cx.spec, format!("a({w})"), want.to_string(), a.to_string()),
            Err(e) => r.flag("a-values", &cx.spec, format!("a({w})"), want.to_string(), e.to_string()),
        }
    }
    r
}

fn delta_dset_gamma(cx: &Ctx, data: &AData) -> Result<OracleReport> {
    let mut r = OracleReport::default();
    let core = data.core();
    let mut max_core = 0;
    for &k in &core {
        let w = cx.d(&data.elems()[k]);
        max_core = max_core.max(w.len());
        let want = cx.spec.delta(w)?;
        r.tick("Delta");
        if want != data.delta[k] {
            r.flag("Delta", &cx.spec, format!("Delta({w})"), want.to_string(), data.delta[k].to_string());
        }
    }
    let want: Vec<DElt> = cx.spec.dset()?;
    let mut got: Vec<DElt> = data.dset()?.iter().map(|w| cx.d(w)).collect();
    got.sort();
    r.tick("D-set");
    if want != got {
        r.flag("D-set", &cx.spec, "distinguished involutions".into(), format!("{want:?}"), format!("{got:?}"));
    }
    let dset: BTreeSet<DElt> = want.into_iter().collect();
    let want = cx.spec.gamma_d_support(max_core)?;
    let el = data.elems();
    let got: BTreeSet<(DElt, DElt, DElt)> = data
        .gamma_table()?
        .into_keys()
        .map(|(x, y, z)| (cx.d(&el[x]), cx.d(&el[y]), cx.d(&el[z])))
        .filter(|(_, _, z)| dset.contains(z))
        .collect();
    r.tick("gamma");
    if want != got {
        let miss: Vec<_> = want.difference(&got).map(|t| format!("{t:?}")).collect();
        let extra: Vec<_> = got.difference(&want).map(|t| format!("{t:?}")).collect();
        r.flag("gamma", &cx.spec, "triples (x, y, d) with gamma != 0".into(), format!("missing {miss:?}"), format!("extra {extra:?}"));
    }
    Ok(r)
}

fn j_table(cx: &Ctx, data: &AData, max_len: u32) -> Result<OracleReport> {
    let mut r = OracleReport::default();
    let jt = JTable::build(data)?;
    let el: Vec<DElt> = cx.spec.elements(max_len).into_iter().filter(|w| !(w.first() == 2 && w.len() % 2 == 1 && w.len() + 2 > max_len)).collect();
    for &x in &el {
        for &y in &el {
            let want = cx.spec.j_product(x, y)?;
            r.tick("J-table");
            match jt.t_mul(&cx.el(x), &cx.el(y)) {
                Ok(p) => {
                    let got: BTreeMap<DElt, i64> = p.terms.iter().map(|(z, c)| (cx.d(z), *c)).collect();
                    if got != want {
                        r.flag("J-table", &cx.spec, format!("t_{x} t_{y}"), format!("{want:?}"), format!("{got:?}"));
                    }
                }
                Err(e) => r.flag("J-table", &cx.spec, format!("t_{x} t_{y}"), format!("{want:?}"), e.to_string()),
            }
        }
    }
    Ok(r)
}

/// Runs every comparison the closed formulas cover.
pub fn run(opts: &DiffOptions) -> Result<OracleReport> {
    let mut rep = OracleReport::default();
    for m in [3, 4, 5, 6] {
        rep.merge(c_basis(&Ctx::new(Some(m), 1, 1)?, m));
    }
    for (l1, l2) in [(1, 2), (2, 5)] {
        for m in [4, 6, 8] {
            let cx = Ctx::new(Some(m), l1, l2)?;
            rep.merge(c_basis(&cx, m));
            rep.merge(products(&cx, m));
            rep.merge(d_functional(&cx, m));
            if m <= 6 {
                let data = AData::build_auto(cx.kl.clone(), 0, 0)?;
                rep.merge(a_values(&cx, &data));
            }
        }
        let cx = Ctx::new(None, l1, l2)?;
        rep.merge(c_basis(&cx, opts.window));
        rep.merge(products(&cx, opts.product_len));
        rep.merge(t_products(&cx, opts.product_len));
        rep.merge(d_functional(&cx, opts.window));
        let data = AData::build_auto(cx.kl.clone(), opts.radius, opts.margin)?;
        rep.merge(a_values(&cx, &data));
        rep.merge(delta_dset_gamma(&cx, &data)?);
        // k, k' ≤ 3 in every family of the J table
        rep.merge(j_table(&cx, &data, 9)?);
    }
    let cx = Ctx::new(None, 1, 1)?;
    rep.merge(c_basis(&cx, opts.window));
    rep.merge(products(&cx, opts.product_len));
    Ok(rep)
}
