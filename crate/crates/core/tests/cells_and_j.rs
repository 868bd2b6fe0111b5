use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use coxhecke::afun::AData;
use coxhecke::jring::{JElt, JTable};
use coxhecke::kl::Kl;
use coxhecke::{CellKind, CellPartition, CoxeterSystem, Element, Region, Side};

fn kl(p: &str) -> Arc<Kl> {
    Arc::new(Kl::new(Arc::new(CoxeterSystem::preset(p).unwrap())))
}

fn partition(kl: &Kl, kind: CellKind) -> CellPartition {
    CellPartition::compute(kl, &Region::whole(kl.system()).unwrap(), kind).unwrap()
}

fn canon(blocks: Vec<HashSet<Element>>) -> Vec<Vec<Element>> {
    let mut out: Vec<Vec<Element>> = blocks
        .into_iter()
        .map(|b| {
            let mut v: Vec<Element> = b.into_iter().collect();
            v.sort();
            v
        })
        .collect();
    out.sort();
    out
}

/// Permutation of `0..=n` for a word in the adjacent transpositions.
fn perm(w: &Element, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..=n).collect();
    for &s in w.word() {
        p.swap(s as usize, s as usize + 1);
    }
    p
}

/// Row insertion tableau and recording tableau.
fn rsk(p: &[usize]) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let (mut ins, mut rec): (Vec<Vec<usize>>, Vec<Vec<usize>>) = (vec![], vec![]);
    for (k, &x) in p.iter().enumerate() {
        let mut x = x;
        let mut row = 0;
        loop {
            if row == ins.len() {
                ins.push(vec![x]);
                rec.push(vec![k]);
                break;
            }
            match ins[row].iter().position(|&y| y > x) {
                Some(j) => {
                    std::mem::swap(&mut ins[row][j], &mut x);
                    row += 1;
                }
                None => {
                    ins[row].push(x);
                    rec[row].push(k);
                    break;
                }
            }
        }
    }
    (ins, rec)
}

fn group_by<K: Ord>(all: &[Element], key: impl Fn(&Element) -> K) -> Vec<Vec<Element>> {
    let mut m: BTreeMap<K, HashSet<Element>> = BTreeMap::new();
    for w in all {
        m.entry(key(w)).or_default().insert(w.clone());
    }
    canon(m.into_values().collect())
}

#[test]
fn type_a_cells_follow_robinson_schensted() {
    for n in [3usize, 4] {
        let k = kl(&format!("an:{n}"));
        let all = k.system().all_elements().unwrap();
        let by_ins = group_by(&all, |w| rsk(&perm(w, n)).0);
        let by_rec = group_by(&all, |w| rsk(&perm(w, n)).1);
        let left = canon(partition(&k, CellKind::Left).block_sets());
        let right = canon(partition(&k, CellKind::Right).block_sets());
        assert!((left == by_ins && right == by_rec) || (left == by_rec && right == by_ins), "A{n}");
        let two = canon(partition(&k, CellKind::TwoSided).block_sets());
        let by_shape = group_by(&all, |w| rsk(&perm(w, n)).0.iter().map(Vec::len).collect::<Vec<_>>());
        assert_eq!(two, by_shape, "A{n}");
    }
}

const SYSTEMS: &[&str] = &["a3", "b2:1,2", "b2:2,1", "g2:2,1", "g2:1,1", "i2m:6,1,3", "bn:3", "bn:3,1,2"];

#[test]
fn left_cells_have_constant_right_descents_and_invert_to_right_cells() {
    for p in SYSTEMS {
        let k = kl(p);
        let sys = k.system().clone();
        let left = partition(&k, CellKind::Left);
        let right = partition(&k, CellKind::Right);
        let two = partition(&k, CellKind::TwoSided);
        for b in left.block_sets() {
            let mut it = b.iter();
            let first = sys.descent_mask(it.next().unwrap(), Side::Right);
            assert!(it.all(|w| sys.descent_mask(w, Side::Right) == first), "{p}");
            let inv: HashSet<Element> = b.iter().map(|w| sys.inverse(w)).collect();
            assert!(right.block_sets().contains(&inv), "{p}");
            let t = two.block_of(b.iter().next().unwrap());
            assert!(b.iter().all(|w| two.block_of(w) == t), "{p}");
        }
        // the preorders are compatible: x ≤_L y implies x ≤_LR y
        let all = sys.all_elements().unwrap();
        for x in &all {
            for y in &all {
                if left.leq(x, y) == Some(true) || right.leq(x, y) == Some(true) {
                    assert_eq!(two.leq(x, y), Some(true), "{p}: {x} {y}");
                }
            }
        }
    }
}

#[test]
fn a_function_is_constant_on_two_sided_cells() {
    for p in SYSTEMS {
        let k = kl(p);
        let two = partition(&k, CellKind::TwoSided);
        let d = AData::build_auto(k, 0, 0).unwrap();
        for b in two.block_sets() {
            let vals: HashSet<i64> = b.iter().map(|w| d.a_of(w).unwrap().0).collect();
            assert_eq!(vals.len(), 1, "{p}: {vals:?}");
        }
        let gens: Vec<_> = d.sys().generators().collect();
        let w0 = d.sys().longest_element(&gens).unwrap();
        assert_eq!(d.a_of(&w0).unwrap().0, d.sys().weight(&w0), "{p}");
    }
}

#[test]
fn j_ring_is_associative_with_unit() {
    for p in ["a3", "b2:2,1", "g2:2,1", "g2:1,1", "i2m:6,1,3"] {
        let d = AData::build_auto(kl(p), 0, 0).unwrap();
        let jt = JTable::build(&d).unwrap();
        let all = d.elems().to_vec();
        let unit = jt.unit::<i64>();
        for x in &all {
            let tx = JElt::t(x.clone());
            assert_eq!(jt.j_mul(&unit, &tx).unwrap(), tx, "{p}");
            assert_eq!(jt.j_mul(&tx, &unit).unwrap(), tx, "{p}");
            for y in &all {
                let xy = jt.t_mul(x, y).unwrap();
                for z in &all {
                    let l = jt.j_mul(&xy, &JElt::t(z.clone())).unwrap();
                    let r = jt.j_mul(&tx, &jt.t_mul(y, z).unwrap()).unwrap();
                    assert_eq!(l, r, "{p}: {x} {y} {z}");
                }
            }
        }
        assert!(jt.phi_injective().unwrap(), "{p}");
    }
}

#[test]
fn split_j_ring_has_nonnegative_structure_constants() {
    for p in ["a3", "g2:1,1", "bn:3"] {
        let d = AData::build_auto(kl(p), 0, 0).unwrap();
        let jt = JTable::build(&d).unwrap();
        for x in d.elems() {
            for y in d.elems() {
                assert!(jt.t_mul(x, y).unwrap().terms.values().all(|&c| c >= 0), "{p}: {x} {y}");
            }
        }
    }
}
