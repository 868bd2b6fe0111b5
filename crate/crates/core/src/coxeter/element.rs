use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Generator index (0-based).
pub type Gen = u8;

/// Left or right multiplication.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

/// A group element stored as its ShortLex-least reduced word.
///
/// Elements are only meaningful relative to the [`CoxeterSystem`](super::CoxeterSystem)
/// that produced them. Ordering is ShortLex: length first, then lexicographic.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Element {
    word: Box<[Gen]>,
}

impl Element {
    pub fn identity() -> Self {
        Element::default()
    }

    /// Wraps a word that the caller guarantees is canonical.
    pub(crate) fn from_canonical(word: Vec<Gen>) -> Self {
        Element { word: word.into_boxed_slice() }
    }

    pub fn word(&self) -> &[Gen] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// Dot-joined 1-based generator indices; the identity is the empty string.
    pub fn to_text(&self) -> String {
        word_to_text(&self.word)
    }

    /// Human label for display; `e` for the identity.
    pub fn label(&self) -> String {
        if self.word.is_empty() {
            "e".to_string()
        } else {
            self.to_text()
        }
    }
}

pub fn word_to_text(w: &[Gen]) -> String {
    w.iter().map(|s| (s + 1).to_string()).collect::<Vec<_>>().join(".")
}

/// Parses a dot-joined 1-based word (not necessarily reduced). `""` and `"1"`... are
/// read literally: `"1"` is the first generator; use `""` or `"e"` for the identity.
pub fn parse_word(s: &str) -> Result<Vec<Gen>> {
    let t = s.trim();
    if t.is_empty() || t == "e" || t == "id" {
        return Ok(Vec::new());
    }
    t.split('.')
        .map(|tok| {
            let k: usize = tok.trim().parse().map_err(|_| Error::Parse(format!("bad generator '{tok}' in word '{s}'")))?;
            if k == 0 || k > 64 {
                return Err(Error::Parse(format!("generator index {k} out of range in '{s}'")));
            }
            Ok((k - 1) as Gen)
        })
        .collect()
}

impl Ord for Element {
    fn cmp(&self, other: &Self) -> Ordering {
        self.word.len().cmp(&other.word.len()).then_with(|| self.word.cmp(&other.word))
    }
}

impl PartialOrd for Element {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.to_text())
    }
}

impl FromStr for Element {
    type Err = Error;
    /// Parses a word verbatim without normalizing; use
    /// [`CoxeterSystem::parse_element`](super::CoxeterSystem::parse_element) for arbitrary words.
    fn from_str(s: &str) -> Result<Self> {
        Ok(Element::from_canonical(parse_word(s)?))
    }
}
