//! Independent oracles. They only read the Cartan matrix from the library
//! and recompute everything else from scratch with plain integer matrices.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use brickforge::coxeter::CoxeterSystem;

pub type Mat = Vec<Vec<i64>>;

pub fn cartan(sys: &CoxeterSystem) -> Mat {
    sys.cartan().entries().to_vec()
}

fn identity(n: usize) -> Mat {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

fn apply(m: &Mat, v: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

/// Matrix of `s` on root coordinates: `s(α_t) = α_t − a[s][t] α_s`.
pub fn simple_reflection(a: &Mat, s: usize) -> Mat {
    let mut m = identity(a.len());
    for t in 0..a.len() {
        m[s][t] -= a[s][t];
    }
    m
}

/// Matrix of the product of a word, leftmost letter outermost.
pub fn word_matrix(a: &Mat, word: &[usize]) -> Mat {
    word.iter()
        .fold(identity(a.len()), |m, &s| mat_mul(&m, &simple_reflection(a, s)))
}

/// Positive roots as the orbit of the simple roots, restricted to the
/// non-negative vectors.
pub fn positive_roots(a: &Mat) -> BTreeSet<Vec<i64>> {
    let n = a.len();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue: VecDeque<Vec<i64>> = (0..n)
        .map(|s| (0..n).map(|t| i64::from(s == t)).collect())
        .collect();
    while let Some(v) = queue.pop_front() {
        if !seen.insert(v.clone()) {
            continue;
        }
        for s in 0..n {
            let w = apply(&simple_reflection(a, s), &v);
            if !seen.contains(&w) {
                queue.push_back(w);
            }
        }
    }
    seen.into_iter().filter(|v| v.iter().all(|&x| x >= 0)).collect()
}

/// Number of positive roots sent to negative ones.
pub fn length_of(a: &Mat, m: &Mat) -> usize {
    positive_roots(a)
        .iter()
        .filter(|r| apply(m, r).iter().all(|&x| x <= 0))
        .count()
}

pub fn is_reduced(a: &Mat, word: &[usize]) -> bool {
    length_of(a, &word_matrix(a, word)) == word.len()
}

/// Facets of `SC(Q, w)` by scanning every subset of positions: `I` is a
/// facet when the complement word is reduced and multiplies to `w`.
pub fn brute_force_facets(a: &Mat, word: &[usize], target: &Mat) -> Vec<Vec<usize>> {
    let m = word.len();
    let ell = length_of(a, target);
    let mut out = Vec::new();
    for mask in 0u32..(1 << m) {
        if (m - mask.count_ones() as usize) != ell {
            continue;
        }
        let complement: Vec<usize> = (0..m).filter(|p| mask & (1 << p) == 0).map(|p| word[p]).collect();
        if &word_matrix(a, &complement) == target && is_reduced(a, &complement) {
            out.push((0..m).filter(|p| mask & (1 << p) != 0).collect());
        }
    }
    out.sort();
    out
}

/// Every element below `y` in Bruhat order: the products of all subwords
/// of a reduced word for `y`.
pub fn bruhat_below(a: &Mat, reduced_word_of_y: &[usize]) -> HashSet<Mat> {
    let m = reduced_word_of_y.len();
    (0u32..(1 << m))
        .map(|mask| {
            let sub: Vec<usize> = (0..m)
                .filter(|p| mask & (1 << p) != 0)
                .map(|p| reduced_word_of_y[p])
                .collect();
            word_matrix(a, &sub)
        })
        .collect()
}

/// `A·b(I)` computed in the weight basis: `b(I) = −Σ_k w(I,k)` with
/// `w(I,k) = Π_{Q_{[k−1]∖I}}(ω_{s_k})`, where `s(ω_t) = ω_t − δ_{st} α_s`
/// and `α_s = Σ_t a[t][s] ω_t`. Returning `A·b` keeps everything integral.
pub fn brick_vector_weight_coords(a: &Mat, word: &[usize], facet: &[usize]) -> Vec<i64> {
    let n = a.len();
    let reflect = |s: usize, v: &[i64]| -> Vec<i64> { (0..n).map(|t| v[t] - v[s] * a[t][s]).collect() };
    let mut total = vec![0i64; n];
    for k in 0..word.len() {
        let mut v: Vec<i64> = (0..n).map(|t| i64::from(t == word[k])).collect();
        for p in (0..k).rev() {
            if !facet.contains(&p) {
                v = reflect(word[p], &v);
            }
        }
        for t in 0..n {
            total[t] -= v[t];
        }
    }
    total
}

pub fn all_words(rank: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<usize>| {
                (0..rank).map(move |s| {
                    let mut v = w.clone();
                    v.push(s);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}
