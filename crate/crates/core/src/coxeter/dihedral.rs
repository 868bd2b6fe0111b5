//! Closed-form engine for rank-2 groups: every element is an alternating word.

use super::element::{Element, Gen, Side};

pub(crate) struct DihedralEngine {
    m: Option<usize>,
}

fn alt(first: Gen, len: usize) -> Element {
    Element::from_canonical((0..len).map(|i| if i % 2 == 0 { first } else { 1 - first }).collect())
}

impl DihedralEngine {
    pub fn new(m: Option<u32>) -> Self {
        DihedralEngine { m: m.map(|m| m as usize) }
    }

    fn is_longest(&self, k: usize) -> bool {
        self.m == Some(k)
    }

    pub fn descents(&self, w: &Element, side: Side) -> u64 {
        let k = w.length();
        if k == 0 {
            return 0;
        }
        if self.is_longest(k) {
            return 0b11;
        }
        let g = match side {
            Side::Left => w.word()[0],
            Side::Right => w.word()[k - 1],
        };
        1 << g
    }

    pub fn mul_gen(&self, w: &Element, s: Gen, side: Side) -> (Element, i8) {
        let k = w.length();
        if k == 0 {
            return (alt(s, 1), 1);
        }
        if self.descents(w, side) >> s & 1 == 1 {
            // The shorter element has a unique reduced word.
            let first = match side {
                Side::Left => 1 - s,
                Side::Right => {
                    // word of length k ending in s starts with s iff k is odd
                    if k % 2 == 1 {
                        s
                    } else {
                        1 - s
                    }
                }
            };
            return (alt(first, k - 1), -1);
        }
        let first = match side {
            Side::Left => s,
            Side::Right => w.word()[0],
        };
        if self.is_longest(k + 1) {
            return (alt(0, k + 1), 1);
        }
        (alt(first, k + 1), 1)
    }
}

/// The element `a_k` of the dihedral group: alternating word of length `k` starting with `a`.
pub fn dihedral_element(first: Gen, k: usize, m: Option<u32>) -> Element {
    if m == Some(k as u32) {
        return alt(0, k);
    }
    alt(first, k)
}
