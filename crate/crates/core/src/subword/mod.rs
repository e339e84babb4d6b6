//! Words, Demazure products and subword complexes.

mod complex;

pub use complex::{Flip, SubwordComplex};

use std::fmt;

use crate::coxeter::{CoxeterSystem, GroupElement};

/// A facet: strictly increasing 0-based positions in the word. The derived
/// order is the lexicographic order on position lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Facet(Vec<usize>);

impl Facet {
    /// Sorts and deduplicates.
    pub fn new(mut positions: Vec<usize>) -> Self {
        positions.sort_unstable();
        positions.dedup();
        Facet(positions)
    }

    /// From 1-based positions.
    pub fn from_one_based(positions: &[usize]) -> Self {
        Facet::new(positions.iter().map(|p| p - 1).collect())
    }

    pub fn positions(&self) -> &[usize] {
        &self.0
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|p| p + 1).collect()
    }

    pub fn contains(&self, k: usize) -> bool {
        self.0.binary_search(&k).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(self ∖ {remove}) ∪ {add}`.
    pub fn exchange(&self, remove: usize, add: usize) -> Facet {
        let mut v: Vec<usize> = self.0.iter().copied().filter(|&p| p != remove).collect();
        v.push(add);
        Facet::new(v)
    }

    pub fn with(&self, add: usize) -> Facet {
        let mut v = self.0.clone();
        v.push(add);
        Facet::new(v)
    }
}

/// Displays 1-based positions as `{1,3,5}`.
impl fmt::Display for Facet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_based().iter().map(usize::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Demazure product: scan left to right, multiplying by `s` only when this
/// increases the length. Letters must be valid generator indices.
pub fn demazure_product(sys: &CoxeterSystem, word: &[usize]) -> GroupElement {
    word.iter().fold(sys.identity().clone(), |w, &s| {
        if sys.is_right_descent(&w, s) {
            w
        } else {
            sys.mul_simple_right(&w, s)
        }
    })
}
