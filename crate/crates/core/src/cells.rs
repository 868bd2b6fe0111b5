//! Left, right and two-sided preorders and cells.

use std::collections::{BTreeSet, HashMap, HashSet};

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::coxeter::{CoxeterSystem, Element, Side};
use crate::error::{Error, Result};
use crate::kl::Kl;

/// Which preorder.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CellKind {
    Left,
    Right,
    TwoSided,
}

impl CellKind {
    pub fn name(self) -> &'static str {
        match self {
            CellKind::Left => "left",
            CellKind::Right => "right",
            CellKind::TwoSided => "two-sided",
        }
    }
}

impl std::str::FromStr for CellKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" | "L" => Ok(CellKind::Left),
            "right" | "R" => Ok(CellKind::Right),
            "two-sided" | "twosided" | "LR" => Ok(CellKind::TwoSided),
            _ => Err(Error::Parse(format!("unknown cell kind '{s}'"))),
        }
    }
}

/// A finite set of elements on which tables are computed.
///
/// For an infinite group this is a length ball; only the `core` (elements at distance at
/// least `margin` from the boundary) is trusted.
#[derive(Clone, Debug)]
pub struct Region {
    elems: Vec<Element>,
    index: HashMap<Element, usize>,
    radius: Option<usize>,
    margin: usize,
}

impl Region {
    /// The whole (finite) group.
    pub fn whole(sys: &CoxeterSystem) -> Result<Self> {
        Ok(Self::from_elems(sys.all_elements()?, None, 0))
    }

    /// All elements of length `≤ radius`; the core is length `≤ radius − margin`.
    pub fn ball(sys: &CoxeterSystem, radius: usize, margin: usize) -> Result<Self> {
        if margin > radius {
            return Err(Error::RegionTooSmall { radius, margin });
        }
        if sys.is_finite() {
            let all = sys.all_elements()?;
            if all.iter().all(|w| w.length() <= radius) {
                return Ok(Self::from_elems(all, None, 0));
            }
        }
        Ok(Self::from_elems(sys.enumerate(radius), Some(radius), margin))
    }

    /// Whole group when finite, otherwise a ball.
    pub fn auto(sys: &CoxeterSystem, radius: usize, margin: usize) -> Result<Self> {
        if sys.is_finite() {
            Self::whole(sys)
        } else {
            Self::ball(sys, radius, margin)
        }
    }

    fn from_elems(mut elems: Vec<Element>, radius: Option<usize>, margin: usize) -> Self {
        elems.sort();
        let index = elems.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        Region { elems, index, radius, margin }
    }

    pub fn elems(&self) -> &[Element] {
        &self.elems
    }

    pub fn contains(&self, w: &Element) -> bool {
        self.index.contains_key(w)
    }

    pub fn index_of(&self, w: &Element) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// `None` when the region is a whole finite group.
    pub fn radius(&self) -> Option<usize> {
        self.radius
    }

    pub fn margin(&self) -> usize {
        self.margin
    }

    pub fn is_whole(&self) -> bool {
        self.radius.is_none()
    }

    pub fn in_core(&self, w: &Element) -> bool {
        match self.radius {
            None => self.contains(w),
            Some(r) => w.length() + self.margin <= r,
        }
    }

    pub fn core(&self) -> Vec<Element> {
        self.elems.iter().filter(|w| self.in_core(w)).cloned().collect()
    }

    pub fn describe(&self) -> String {
        match self.radius {
            None => format!("whole group ({} elements)", self.elems.len()),
            Some(r) => format!("length ball radius {r}, margin {}, {} elements, core length <= {}", self.margin, self.elems.len(), r - self.margin),
        }
    }
}

/// Directed edges `w′ → w` (meaning `w ⊣ w′`) inside the region, as index pairs.
pub fn edges(kl: &Kl, region: &Region, kind: CellKind) -> Result<Vec<(usize, usize)>> {
    let sys = kl.system();
    sys.require_positive()?;
    let sides: &[Side] = match kind {
        CellKind::Left => &[Side::Left],
        CellKind::Right => &[Side::Right],
        CellKind::TwoSided => &[Side::Left, Side::Right],
    };
    let gens: Vec<_> = sys.generators().collect();
    let mut out: Vec<(usize, usize)> = region
        .elems()
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, wp)| {
            let mut v = BTreeSet::new();
            for &side in sides {
                for &s in &gens {
                    for z in kl.cs_mul_c(s, wp, side).terms().keys() {
                        if let Some(j) = region.index_of(z) {
                            v.insert((i, j));
                        }
                    }
                }
            }
            v.into_iter()
        })
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Cells as strongly connected components, restricted to the trusted core.
#[derive(Clone, Debug)]
pub struct CellPartition {
    pub kind: CellKind,
    /// Blocks sorted by their ShortLex-least member; members sorted ShortLex.
    pub blocks: Vec<Vec<Element>>,
    /// `(i, j)` with `i != j` whenever block `i ≤` block `j`.
    pub order: Vec<(usize, usize)>,
    block_of: HashMap<Element, usize>,
    reach: Vec<Vec<bool>>,
    /// True when computed on a truncated ball (membership near the boundary is heuristic).
    pub windowed: bool,
}

impl CellPartition {
    pub fn compute(kl: &Kl, region: &Region, kind: CellKind) -> Result<Self> {
        let e = edges(kl, region, kind)?;
        let n = region.elems().len();
        let mut g: DiGraph<(), ()> = DiGraph::with_capacity(n, e.len());
        let nodes: Vec<_> = (0..n).map(|_| g.add_node(())).collect();
        for &(a, b) in &e {
            g.add_edge(nodes[a], nodes[b], ());
        }
        let sccs = tarjan_scc(&g);
        let mut comp = vec![0usize; n];
        for (ci, c) in sccs.iter().enumerate() {
            for nd in c {
                comp[nd.index()] = ci;
            }
        }
        let k = sccs.len();
        // reachability on the condensation: comp a reaches comp b
        let mut adj = vec![BTreeSet::new(); k];
        for &(a, b) in &e {
            if comp[a] != comp[b] {
                adj[comp[a]].insert(comp[b]);
            }
        }
        let mut reach_c = vec![vec![false; k]; k];
        for (start, row) in reach_c.iter_mut().enumerate() {
            let mut stack = vec![start];
            row[start] = true;
            while let Some(c) = stack.pop() {
                for &d in &adj[c] {
                    if !row[d] {
                        row[d] = true;
                        stack.push(d);
                    }
                }
            }
        }
        // keep trusted members only
        let mut blocks_c: Vec<(usize, Vec<Element>)> = Vec::new();
        for (ci, c) in sccs.iter().enumerate() {
            let mut mem: Vec<Element> = c.iter().map(|nd| region.elems()[nd.index()].clone()).filter(|w| region.in_core(w)).collect();
            if mem.is_empty() {
                continue;
            }
            mem.sort();
            blocks_c.push((ci, mem));
        }
        blocks_c.sort_by(|a, b| a.1[0].cmp(&b.1[0]));
        let m = blocks_c.len();
        let mut reach = vec![vec![false; m]; m];
        let mut order = Vec::new();
        let mut block_of = HashMap::new();
        for (i, (ci, mem)) in blocks_c.iter().enumerate() {
            for w in mem {
                block_of.insert(w.clone(), i);
            }
            for (j, (cj, _)) in blocks_c.iter().enumerate() {
                // block i ≤ block j iff j reaches i
                if reach_c[*cj][*ci] {
                    reach[i][j] = true;
                    if i != j {
                        order.push((i, j));
                    }
                }
            }
        }
        Ok(CellPartition { kind, blocks: blocks_c.into_iter().map(|b| b.1).collect(), order, block_of, reach, windowed: !region.is_whole() })
    }

    pub fn block_of(&self, w: &Element) -> Option<usize> {
        self.block_of.get(w).copied()
    }

    /// `w ≤ w′` in the preorder; `None` if either lies outside the trusted core.
    pub fn leq(&self, w: &Element, wp: &Element) -> Option<bool> {
        Some(self.reach[self.block_of(w)?][self.block_of(wp)?])
    }

    pub fn equiv(&self, w: &Element, wp: &Element) -> Option<bool> {
        Some(self.block_of(w)? == self.block_of(wp)?)
    }

    /// Elements `u` of the core with `w ≤ u`.
    pub fn upper_set(&self, w: &Element) -> Option<Vec<Element>> {
        let b = self.block_of(w)?;
        Some((0..self.blocks.len()).filter(|&j| self.reach[b][j]).flat_map(|j| self.blocks[j].iter().cloned()).collect())
    }

    pub fn block_sets(&self) -> Vec<HashSet<Element>> {
        self.blocks.iter().map(|b| b.iter().cloned().collect()).collect()
    }

    pub fn to_json(&self) -> Value {
        let blocks: Vec<Vec<String>> = self.blocks.iter().map(|b| b.iter().map(|w| w.to_text()).collect()).collect();
        let order: Vec<[usize; 2]> = self.order.iter().map(|&(i, j)| [i, j]).collect();
        json!({"kind": self.kind.name(), "blocks": blocks, "order": order, "windowed": self.windowed})
    }
}

/// `w ≤ w′` in the chosen preorder, computed on `region`.
pub fn leq_cell(kl: &Kl, region: &Region, w: &Element, wp: &Element, kind: CellKind) -> Result<bool> {
    let p = CellPartition::compute(kl, region, kind)?;
    p.leq(w, wp).ok_or_else(|| Error::UncertifiedRegion(format!("{} or {} outside the trusted core", w.label(), wp.label())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    fn labels(p: &CellPartition) -> Vec<Vec<String>> {
        p.blocks.iter().map(|b| b.iter().map(|w| w.to_text()).collect()).collect()
    }

    #[test]
    fn b2_unequal_left_cells() {
        let sys = Arc::new(CoxeterSystem::preset("b2:1,2").unwrap());
        let kl = Kl::new(sys.clone());
        let r = Region::whole(&sys).unwrap();
        let p = CellPartition::compute(&kl, &r, CellKind::Left).unwrap();
        assert_eq!(labels(&p), vec![vec![""], vec!["1"], vec!["2", "1.2"], vec!["2.1", "1.2.1"], vec!["2.1.2"], vec!["1.2.1.2"]]);
    }

    #[test]
    fn infinite_dihedral_window() {
        let sys = Arc::new(CoxeterSystem::preset("i2inf:1,1").unwrap());
        let kl = Kl::new(sys.clone());
        let r = Region::ball(&sys, 8, 3).unwrap();
        let l = CellPartition::compute(&kl, &r, CellKind::Left).unwrap();
        assert_eq!(l.blocks.len(), 3);
        let t = CellPartition::compute(&kl, &r, CellKind::TwoSided).unwrap();
        assert_eq!(t.blocks.len(), 2);
        let e = Element::identity();
        let s = sys.gen(0);
        assert_eq!(t.leq(&s, &e), Some(true));
        assert_eq!(t.leq(&e, &s), Some(false));
    }

    #[test]
    fn margin_too_large() {
        let sys = CoxeterSystem::preset("i2inf:1,2").unwrap();
        assert!(matches!(Region::ball(&sys, 2, 3), Err(Error::RegionTooSmall { .. })));
    }
}
