use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use crate::geometry::rational::{QVector, Rational};

/// A vector in the simple-root basis with integer coordinates.
pub type Root = Vec<i64>;

/// Positive roots have all coordinates ≥ 0, negative ones all ≤ 0.
pub fn is_positive(v: &[i64]) -> bool {
    v.iter().all(|&x| x >= 0) && v.iter().any(|&x| x > 0)
}

pub fn is_negative(v: &[i64]) -> bool {
    v.iter().all(|&x| x <= 0) && v.iter().any(|&x| x < 0)
}

pub fn negate(v: &[i64]) -> Root {
    v.iter().map(|x| -x).collect()
}

/// `|β|`: the positive root among `±β`.
pub fn abs_root(v: &[i64]) -> Root {
    if is_negative(v) {
        negate(v)
    } else {
        v.to_vec()
    }
}

pub fn height(v: &[i64]) -> i64 {
    v.iter().sum()
}

/// An element of the reflection group, stored as its integer matrix in
/// the simple-root basis (column `s` is `w(α_s)`). Equality and hashing
/// only look at the matrix.
#[derive(Debug, Clone)]
pub struct GroupElement {
    pub(crate) n: usize,
    pub(crate) matrix: Vec<i64>,
    pub(crate) length: usize,
}

impl GroupElement {
    pub(crate) fn identity(n: usize) -> Self {
        let mut matrix = vec![0; n * n];
        for i in 0..n {
            matrix[i * n + i] = 1;
        }
        GroupElement { n, matrix, length: 0 }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    /// Row-major matrix entries.
    pub fn matrix(&self) -> &[i64] {
        &self.matrix
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.matrix[i * self.n + j]
    }

    /// `w(α_s)`.
    pub fn column(&self, s: usize) -> Root {
        (0..self.n).map(|i| self.entry(i, s)).collect()
    }

    pub fn apply(&self, v: &[i64]) -> Root {
        debug_assert_eq!(v.len(), self.n);
        (0..self.n)
            .map(|i| {
                let row = &self.matrix[i * self.n..(i + 1) * self.n];
                row.iter().zip(v).map(|(a, b)| a * b).sum()
            })
            .collect()
    }

    pub fn apply_rational(&self, v: &[Rational]) -> QVector {
        debug_assert_eq!(v.len(), self.n);
        (0..self.n)
            .map(|i| {
                let mut acc = Rational::default();
                for (j, x) in v.iter().enumerate() {
                    let a = self.entry(i, j);
                    if a != 0 {
                        acc += x * Rational::from_integer(a.into());
                    }
                }
                acc
            })
            .collect()
    }

    /// Plain matrix product `self · other`; the caller fixes the length.
    pub(crate) fn matmul(&self, other: &GroupElement) -> Vec<i64> {
        let n = self.n;
        let mut out = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.matrix[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] += a * other.matrix[k * n + j];
                }
            }
        }
        out
    }
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for GroupElement {}

impl Hash for GroupElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.matrix.hash(state);
    }
}

/// Orders by length first; ties are broken by the matrix entries, which
/// is arbitrary but deterministic.
impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.length
            .cmp(&other.length)
            .then_with(|| self.matrix.cmp(&other.matrix))
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
