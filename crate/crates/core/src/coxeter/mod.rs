//! Finite crystallographic Coxeter systems and their root systems.

mod cartan;
mod element;
mod system;

pub use cartan::CartanMatrix;
pub use element::{abs_root, height, is_negative, is_positive, negate, GroupElement, Root};
pub use system::{CoxeterSystem, DEFAULT_ROOT_CAP};

use crate::{Error, Result};

/// Formats 0-based letters in the 1-based shorthand `"1212"`. Ranks above 9
/// use comma-separated letters instead.
pub fn format_word(word: &[usize], rank: usize) -> String {
    if rank <= 9 {
        word.iter().map(|s| char::from(b'1' + *s as u8)).collect()
    } else {
        word.iter()
            .map(|s| (s + 1).to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Parses `"1212"` or `"1,2,1,2"` into 0-based letters. The empty string,
/// `"e"` and `"ε"` denote the empty word.
pub fn parse_word(text: &str, rank: usize) -> Result<Vec<usize>> {
    let text = text.trim();
    if text.is_empty() || text == "e" || text == "ε" {
        return Ok(Vec::new());
    }
    let letters: Vec<&str> = if text.contains(',') {
        text.split(',').map(str::trim).collect()
    } else {
        text.split("").filter(|c| !c.trim().is_empty()).collect()
    };
    letters
        .into_iter()
        .map(|l| {
            let i: usize = l
                .parse()
                .map_err(|_| Error::Parse(format!("invalid letter {l:?} in word {text:?}")))?;
            if i == 0 || i > rank {
                return Err(Error::IndexOutOfRange { index: i, rank });
            }
            Ok(i - 1)
        })
        .collect()
}

impl CoxeterSystem {
    /// Parses `"e"`, `"w0"` or any (not necessarily reduced) word.
    pub fn parse_element(&self, text: &str) -> Result<GroupElement> {
        match text.trim() {
            "w0" | "w∘" => Ok(self.longest_element().clone()),
            t => self.element_from_word(&parse_word(t, self.rank())?),
        }
    }

    /// Canonical word of `w` in shorthand; the identity is `"e"`.
    pub fn format_element(&self, w: &GroupElement) -> String {
        if w.is_identity() {
            "e".to_string()
        } else {
            format_word(&self.canonical_word(w), self.rank())
        }
    }
}
