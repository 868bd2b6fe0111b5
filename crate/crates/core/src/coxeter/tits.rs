//! Word-problem engine for an arbitrary Coxeter matrix.
//!
//! Every element is normalized by exploring the set of its reduced words under braid
//! moves (Matsumoto–Tits). The canonical word is the lexicographically least one.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::{Arc, RwLock};

use super::element::{Element, Gen, Side};
use super::matrix::CoxeterMatrix;

#[derive(Debug)]
pub(crate) struct Info {
    pub ldesc: u64,
    pub rdesc: u64,
    lstrip: Vec<Option<Element>>,
    rstrip: Vec<Option<Element>>,
}

pub(crate) struct TitsEngine {
    matrix: CoxeterMatrix,
    info: RwLock<HashMap<Element, Arc<Info>>>,
    ascents: RwLock<HashMap<(Element, Gen, Side), Element>>,
}

fn alternating(a: Gen, b: Gen, len: usize) -> impl Iterator<Item = Gen> {
    (0..len).map(move |i| if i % 2 == 0 { a } else { b })
}

impl TitsEngine {
    pub fn new(matrix: CoxeterMatrix) -> Self {
        TitsEngine { matrix, info: RwLock::new(HashMap::new()), ascents: RwLock::new(HashMap::new()) }
    }

    /// All words reachable from a reduced word by braid moves.
    pub fn braid_closure(&self, word: &[Gen]) -> HashSet<Vec<Gen>> {
        let mut seen: HashSet<Vec<Gen>> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(word.to_vec());
        queue.push_back(word.to_vec());
        while let Some(w) = queue.pop_front() {
            for i in 0..w.len().saturating_sub(1) {
                let (a, b) = (w[i], w[i + 1]);
                if a == b {
                    continue;
                }
                let Some(m) = self.matrix.get(a as usize, b as usize) else { continue };
                let m = m as usize;
                if i + m > w.len() || !w[i..i + m].iter().copied().eq(alternating(a, b, m)) {
                    continue;
                }
                let mut nw = w.clone();
                for (slot, g) in nw[i..i + m].iter_mut().zip(alternating(b, a, m)) {
                    *slot = g;
                }
                if seen.insert(nw.clone()) {
                    queue.push_back(nw);
                }
            }
        }
        seen
    }

    fn info_from_closure(&self, closure: &HashSet<Vec<Gen>>) -> (Element, Info) {
        let n = self.matrix.rank();
        let mut canon: Option<&Vec<Gen>> = None;
        let mut lstrip: Vec<Option<&[Gen]>> = vec![None; n];
        let mut rstrip: Vec<Option<&[Gen]>> = vec![None; n];
        let (mut ldesc, mut rdesc) = (0u64, 0u64);
        for w in closure {
            if canon.is_none_or(|c| w < c) {
                canon = Some(w);
            }
            if let (Some(&f), Some(&l)) = (w.first(), w.last()) {
                ldesc |= 1 << f;
                rdesc |= 1 << l;
                let tail = &w[1..];
                if lstrip[f as usize].is_none_or(|c| tail < c) {
                    lstrip[f as usize] = Some(tail);
                }
                let head = &w[..w.len() - 1];
                if rstrip[l as usize].is_none_or(|c| head < c) {
                    rstrip[l as usize] = Some(head);
                }
            }
        }
        let conv = |v: Vec<Option<&[Gen]>>| v.into_iter().map(|o| o.map(|w| Element::from_canonical(w.to_vec()))).collect();
        let canon = Element::from_canonical(canon.cloned().unwrap_or_default());
        (canon, Info { ldesc, rdesc, lstrip: conv(lstrip), rstrip: conv(rstrip) })
    }

    pub fn info(&self, w: &Element) -> Arc<Info> {
        if let Some(i) = self.info.read().unwrap().get(w) {
            return i.clone();
        }
        let (canon, info) = self.info_from_closure(&self.braid_closure(w.word()));
        debug_assert_eq!(&canon, w, "element word is not canonical");
        let info = Arc::new(info);
        self.info.write().unwrap().insert(canon, info.clone());
        info
    }

    pub fn mul_gen(&self, w: &Element, s: Gen, side: Side) -> (Element, i8) {
        let info = self.info(w);
        let (desc, strip) = match side {
            Side::Left => (info.ldesc, &info.lstrip),
            Side::Right => (info.rdesc, &info.rstrip),
        };
        if desc >> s & 1 == 1 {
            return (strip[s as usize].clone().expect("descent without strip"), -1);
        }
        let key = (w.clone(), s, side);
        if let Some(e) = self.ascents.read().unwrap().get(&key) {
            return (e.clone(), 1);
        }
        let word: Vec<Gen> = match side {
            Side::Left => std::iter::once(s).chain(w.word().iter().copied()).collect(),
            Side::Right => w.word().iter().copied().chain(std::iter::once(s)).collect(),
        };
        let (canon, info) = self.info_from_closure(&self.braid_closure(&word));
        self.info.write().unwrap().entry(canon.clone()).or_insert_with(|| Arc::new(info));
        self.ascents.write().unwrap().insert(key, canon.clone());
        (canon, 1)
    }

    pub fn descents(&self, w: &Element, side: Side) -> u64 {
        let i = self.info(w);
        match side {
            Side::Left => i.ldesc,
            Side::Right => i.rdesc,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_longest_has_two_words() {
        let e = TitsEngine::new(CoxeterMatrix::type_a(2).unwrap());
        let c = e.braid_closure(&[0, 1, 0]);
        assert_eq!(c.len(), 2);
        assert!(c.contains(&vec![1, 0, 1]));
    }

    #[test]
    fn a3_longest_has_sixteen_words() {
        let e = TitsEngine::new(CoxeterMatrix::type_a(3).unwrap());
        assert_eq!(e.braid_closure(&[0, 1, 0, 2, 1, 0]).len(), 16);
    }
}
