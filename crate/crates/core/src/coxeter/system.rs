use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::OnceLock;

use crate::geometry::rational::{inverse, rat, QVector, Rational};
use crate::{Error, Result};

use super::cartan::CartanMatrix;
use super::element::{height, is_negative, is_positive, negate, GroupElement, Root};

/// Orbit closures larger than this are reported as non-finite.
pub const DEFAULT_ROOT_CAP: usize = 10_000;

/// A finite crystallographic Coxeter system together with its root system
/// in the simple-root basis.
///
/// Generators are indexed from 0 internally; words and elements are
/// printed 1-based (see [`super::format_word`]).
#[derive(Debug)]
pub struct CoxeterSystem {
    cartan: CartanMatrix,
    positive_roots: Vec<Root>,
    root_index: HashMap<Root, usize>,
    weights: Vec<QVector>,
    symmetrizer: Vec<i64>,
    gram: Vec<Vec<i64>>,
    generators: Vec<GroupElement>,
    reflections: Vec<GroupElement>,
    identity: GroupElement,
    longest: GroupElement,
    elements: OnceLock<(Vec<GroupElement>, HashMap<GroupElement, usize>)>,
}

impl CoxeterSystem {
    pub fn new(cartan: CartanMatrix) -> Result<Self> {
        Self::with_root_cap(cartan, DEFAULT_ROOT_CAP)
    }

    pub fn from_preset(name: &str) -> Result<Self> {
        Self::new(CartanMatrix::preset(name)?)
    }

    pub fn with_root_cap(cartan: CartanMatrix, cap: usize) -> Result<Self> {
        cartan.check_finite()?;
        let n = cartan.rank();
        let symmetrizer = cartan.symmetrizer()?;
        let gram = cartan.gram()?;

        let mut positive_roots = positive_root_closure(&cartan, cap)?;
        // by height, then lexicographically descending: 100, 010, 001, 110, ...
        positive_roots.sort_by(|a, b| height(a).cmp(&height(b)).then_with(|| b.cmp(a)));
        let root_index = positive_roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();

        let a: Vec<QVector> = cartan
            .entries()
            .iter()
            .map(|row| row.iter().map(|&x| rat(x)).collect())
            .collect();
        let a_inv = inverse(&a)?;
        let weights = (0..n)
            .map(|s| (0..n).map(|i| a_inv[i][s].clone()).collect())
            .collect();

        let identity = GroupElement::identity(n);
        let mut sys = CoxeterSystem {
            cartan,
            positive_roots,
            root_index,
            weights,
            symmetrizer,
            gram,
            generators: Vec::new(),
            reflections: Vec::new(),
            longest: identity.clone(),
            identity,
            elements: OnceLock::new(),
        };
        sys.generators = (0..n).map(|s| sys.mul_simple_right(&sys.identity, s)).collect();
        sys.reflections = sys
            .positive_roots
            .iter()
            .map(|r| sys.reflection_of_root(r))
            .collect::<Result<_>>()?;
        let mut w = sys.identity.clone();
        while let Some(s) = (0..n).find(|&s| !sys.is_right_descent(&w, s)) {
            w = sys.mul_simple_right(&w, s);
        }
        debug_assert_eq!(w.length(), sys.positive_roots.len());
        sys.longest = w;
        Ok(sys)
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    /// Φ+ sorted by height, then lexicographically descending.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// Index of a positive root in [`Self::positive_roots`].
    pub fn root_position(&self, v: &[i64]) -> Option<usize> {
        self.root_index.get(v).copied()
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        self.root_index.contains_key(v) || self.root_index.contains_key(&negate(v))
    }

    pub fn simple_root(&self, s: usize) -> Root {
        let mut v = vec![0; self.rank()];
        v[s] = 1;
        v
    }

    /// Fundamental weights `ω_s` in the simple-root basis.
    pub fn weights(&self) -> &[QVector] {
        &self.weights
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    /// `⟨a, b⟩` for the invariant form normalized by the symmetrizer.
    pub fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        let n = self.rank();
        let mut acc = 0;
        for s in 0..n {
            if a[s] == 0 {
                continue;
            }
            for t in 0..n {
                acc += a[s] * self.gram[s][t] * b[t];
            }
        }
        acc
    }

    pub fn inner_rational(&self, a: &[i64], b: &[Rational]) -> Rational {
        let n = self.rank();
        let mut acc = rat(0);
        for s in 0..n {
            for t in 0..n {
                let c = a[s] * self.gram[s][t];
                if c != 0 {
                    acc += &b[t] * rat(c);
                }
            }
        }
        acc
    }

    pub fn identity(&self) -> &GroupElement {
        &self.identity
    }

    pub fn longest_element(&self) -> &GroupElement {
        &self.longest
    }

    pub fn generator(&self, s: usize) -> &GroupElement {
        &self.generators[s]
    }

    /// `s_β` for the positive root at position `i` of Φ+.
    pub fn reflection(&self, i: usize) -> &GroupElement {
        &self.reflections[i]
    }

    /// Builds an element from a raw matrix, computing its length.
    fn element(&self, matrix: Vec<i64>) -> GroupElement {
        let mut w = GroupElement {
            n: self.rank(),
            matrix,
            length: 0,
        };
        w.length = self
            .positive_roots
            .iter()
            .filter(|r| is_negative(&w.apply(r)))
            .count();
        w
    }

    pub fn mul(&self, x: &GroupElement, y: &GroupElement) -> GroupElement {
        self.element(x.matmul(y))
    }

    /// `w·s`.
    pub fn mul_simple_right(&self, w: &GroupElement, s: usize) -> GroupElement {
        let n = self.rank();
        let mut matrix = w.matrix.clone();
        for t in 0..n {
            let c = self.cartan.get(s, t);
            if c == 0 {
                continue;
            }
            for i in 0..n {
                matrix[i * n + t] -= c * w.matrix[i * n + s];
            }
        }
        let length = if self.is_right_descent(w, s) {
            w.length - 1
        } else {
            w.length + 1
        };
        GroupElement { n, matrix, length }
    }

    /// `s·w`.
    pub fn mul_simple_left(&self, s: usize, w: &GroupElement) -> GroupElement {
        let n = self.rank();
        let mut matrix = w.matrix.clone();
        for k in 0..n {
            let c = self.cartan.get(s, k);
            if c == 0 {
                continue;
            }
            for j in 0..n {
                matrix[s * n + j] -= c * w.matrix[k * n + j];
            }
        }
        let length = if self.is_left_descent(w, s) {
            w.length - 1
        } else {
            w.length + 1
        };
        GroupElement { n, matrix, length }
    }

    /// `ℓ(ws) < ℓ(w)`, i.e. `w(α_s) ∈ Φ−`.
    pub fn is_right_descent(&self, w: &GroupElement, s: usize) -> bool {
        let n = self.rank();
        (0..n).any(|i| w.matrix[i * n + s] < 0)
    }

    /// `ℓ(sw) < ℓ(w)`, i.e. `α_s ∈ Inv(w)`.
    pub fn is_left_descent(&self, w: &GroupElement, s: usize) -> bool {
        let target = negate(&self.simple_root(s));
        self.positive_roots.iter().any(|r| w.apply(r) == target)
    }

    pub fn length(&self, w: &GroupElement) -> usize {
        w.length
    }

    /// Positions in Φ+ of the roots in `Inv(w) = Φ+ ∩ w(Φ−)`.
    pub fn inversion_mask(&self, w: &GroupElement) -> Vec<bool> {
        let mut mask = vec![false; self.positive_roots.len()];
        for r in &self.positive_roots {
            let image = w.apply(r);
            if is_negative(&image) {
                mask[self.root_index[&negate(&image)]] = true;
            }
        }
        mask
    }

    /// `Inv(w)` in the canonical order of Φ+.
    pub fn inversion_set(&self, w: &GroupElement) -> Vec<Root> {
        self.inversion_mask(w)
            .into_iter()
            .zip(&self.positive_roots)
            .filter(|(m, _)| *m)
            .map(|(_, r)| r.clone())
            .collect()
    }

    pub fn in_inversion_set(&self, w: &GroupElement, beta: &[i64]) -> bool {
        is_positive(beta) && is_negative(&self.inverse(w).apply(beta))
    }

    pub fn act(&self, w: &GroupElement, v: &[i64]) -> Root {
        w.apply(v)
    }

    pub fn act_rational(&self, w: &GroupElement, v: &[Rational]) -> QVector {
        w.apply_rational(v)
    }

    /// Some reduced word, found by peeling off right descents.
    fn any_reduced_word(&self, w: &GroupElement) -> Vec<usize> {
        let mut word = Vec::with_capacity(w.length);
        let mut u = w.clone();
        while let Some(s) = (0..self.rank()).find(|&s| self.is_right_descent(&u, s)) {
            word.push(s);
            u = self.mul_simple_right(&u, s);
        }
        word.reverse();
        word
    }

    pub fn inverse(&self, w: &GroupElement) -> GroupElement {
        let mut u = self.identity.clone();
        for s in self.any_reduced_word(w).into_iter().rev() {
            u = self.mul_simple_right(&u, s);
        }
        u
    }

    /// Lexicographically smallest reduced word of `w` (0-based letters).
    pub fn canonical_word(&self, w: &GroupElement) -> Vec<usize> {
        // left descents of w are the right descents of w⁻¹
        let mut u = self.inverse(w);
        let mut word = Vec::with_capacity(w.length);
        while let Some(s) = (0..self.rank()).find(|&s| self.is_right_descent(&u, s)) {
            word.push(s);
            u = self.mul_simple_right(&u, s);
        }
        word
    }

    fn check_letters(&self, word: &[usize]) -> Result<()> {
        match word.iter().find(|&&s| s >= self.rank()) {
            Some(&index) => Err(Error::IndexOutOfRange {
                index,
                rank: self.rank(),
            }),
            None => Ok(()),
        }
    }

    /// Product of simple reflections, left to right.
    pub fn element_from_word(&self, word: &[usize]) -> Result<GroupElement> {
        self.check_letters(word)?;
        Ok(word
            .iter()
            .fold(self.identity.clone(), |w, &s| self.mul_simple_right(&w, s)))
    }

    /// A word is reduced iff each prefix product sends the next simple root
    /// into Φ+.
    pub fn is_reduced(&self, word: &[usize]) -> Result<bool> {
        self.check_letters(word)?;
        let mut w = self.identity.clone();
        for &s in word {
            if self.is_right_descent(&w, s) {
                return Ok(false);
            }
            w = self.mul_simple_right(&w, s);
        }
        Ok(true)
    }

    /// Right weak order: `Inv(x) ⊆ Inv(y)`.
    pub fn weak_leq(&self, x: &GroupElement, y: &GroupElement) -> bool {
        if x.length > y.length {
            return false;
        }
        let (mx, my) = (self.inversion_mask(x), self.inversion_mask(y));
        mx.iter().zip(&my).all(|(a, b)| !a || *b)
    }

    /// The reflection `s_β(v) = v − 2⟨β,v⟩/⟨β,β⟩·β`. Accepts `±β`.
    pub fn reflection_of_root(&self, beta: &[i64]) -> Result<GroupElement> {
        if beta.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: beta.len(),
            });
        }
        if !self.is_root(beta) {
            return Err(Error::NotARoot(beta.to_vec()));
        }
        let n = self.rank();
        let bb = self.inner(beta, beta);
        let mut matrix = self.identity.matrix.clone();
        for t in 0..n {
            let bt = self.inner(beta, &self.simple_root(t));
            let c = 2 * bt / bb;
            debug_assert_eq!(c * bb, 2 * bt, "crystallographic reflection coefficient");
            for i in 0..n {
                matrix[i * n + t] -= c * beta[i];
            }
        }
        Ok(self.element(matrix))
    }

    fn element_table(&self) -> &(Vec<GroupElement>, HashMap<GroupElement, usize>) {
        self.elements.get_or_init(|| {
            let mut seen: HashSet<GroupElement> = HashSet::new();
            let mut queue = VecDeque::from([self.identity.clone()]);
            seen.insert(self.identity.clone());
            while let Some(w) = queue.pop_front() {
                for s in 0..self.rank() {
                    let ws = self.mul_simple_right(&w, s);
                    if seen.insert(ws.clone()) {
                        queue.push_back(ws);
                    }
                }
            }
            let mut keyed: Vec<(usize, Vec<usize>, GroupElement)> = seen
                .into_iter()
                .map(|w| (w.length, self.canonical_word(&w), w))
                .collect();
            keyed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
            let elements: Vec<GroupElement> = keyed.into_iter().map(|(_, _, w)| w).collect();
            let index = elements.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
            (elements, index)
        })
    }

    /// All of W, sorted by length and then canonical word.
    pub fn elements(&self) -> &[GroupElement] {
        &self.element_table().0
    }

    /// Position of `w` in [`Self::elements`].
    pub fn element_index(&self, w: &GroupElement) -> usize {
        self.element_table().1[w]
    }
}

fn positive_root_closure(cartan: &CartanMatrix, cap: usize) -> Result<Vec<Root>> {
    let n = cartan.rank();
    let mut seen: HashSet<Root> = HashSet::new();
    let mut queue: VecDeque<Root> = VecDeque::new();
    for s in 0..n {
        let mut a = vec![0; n];
        a[s] = 1;
        seen.insert(a.clone());
        queue.push_back(a);
    }
    while let Some(beta) = queue.pop_front() {
        for s in 0..n {
            let pairing: i64 = (0..n).map(|t| cartan.get(s, t) * beta[t]).sum();
            if pairing == 0 {
                continue;
            }
            let mut image = beta.clone();
            image[s] -= pairing;
            if !is_positive(&image) {
                // only α_s itself leaves Φ+ under s
                continue;
            }
            if seen.insert(image.clone()) {
                if seen.len() > cap {
                    return Err(Error::NotFinite(format!("more than {cap} positive roots")));
                }
                queue.push_back(image);
            }
        }
    }
    Ok(seen.into_iter().collect())
}
