use std::collections::{BTreeSet, VecDeque};
use std::sync::OnceLock;

use crate::bruhat::{bruhat_leq, upper_labels_unchecked};
use crate::coxeter::{abs_root, CoxeterSystem, GroupElement, Root};
use crate::geometry::rational::QVector;
use crate::{Error, Result};

use super::{demazure_product, Facet};

/// The subword complex `SC(Q, w)` of a word `Q` and a target element `w`.
///
/// Construction never fails for a valid word; an empty complex
/// (`w ≰ Dem(Q)`) is reported by the operations that need facets.
#[derive(Debug)]
pub struct SubwordComplex<'a> {
    sys: &'a CoxeterSystem,
    word: Vec<usize>,
    target: GroupElement,
    demazure: GroupElement,
    /// `suffix_demazure[k] = Dem(Q[k..])`, for `k = 0..=m`.
    suffix_demazure: Vec<GroupElement>,
    non_empty: bool,
    facets: OnceLock<Vec<Facet>>,
}

/// Result of flipping position `removed` out of a facet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flip {
    pub facet: Facet,
    pub removed: usize,
    pub added: usize,
    /// `r(I, removed)`, the root the flip is along.
    pub root: Root,
}

impl<'a> SubwordComplex<'a> {
    pub fn new(sys: &'a CoxeterSystem, word: Vec<usize>, target: GroupElement) -> Result<Self> {
        if let Some(&index) = word.iter().find(|&&s| s >= sys.rank()) {
            return Err(Error::IndexOutOfRange {
                index,
                rank: sys.rank(),
            });
        }
        let m = word.len();
        let mut suffix_demazure = vec![sys.identity().clone(); m + 1];
        for k in (0..m).rev() {
            // Dem(s·Q') = s·Dem(Q') if that is longer, else Dem(Q')
            let rest = &suffix_demazure[k + 1];
            suffix_demazure[k] = if sys.is_left_descent(rest, word[k]) {
                rest.clone()
            } else {
                sys.mul_simple_left(word[k], rest)
            };
        }
        let demazure = demazure_product(sys, &word);
        debug_assert_eq!(demazure, suffix_demazure[0]);
        let non_empty = bruhat_leq(sys, &target, &demazure);
        Ok(SubwordComplex {
            sys,
            word,
            target,
            demazure,
            suffix_demazure,
            non_empty,
            facets: OnceLock::new(),
        })
    }

    pub fn system(&self) -> &'a CoxeterSystem {
        self.sys
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn target(&self) -> &GroupElement {
        &self.target
    }

    pub fn demazure(&self) -> &GroupElement {
        &self.demazure
    }

    /// `Dem(Q[k..])` for 0-based `k ≤ m`.
    pub fn suffix_demazure(&self, k: usize) -> &GroupElement {
        &self.suffix_demazure[k]
    }

    /// Whether the complex has facets, i.e. `w ≤ Dem(Q)`.
    pub fn is_non_empty(&self) -> bool {
        self.non_empty
    }

    pub fn is_empty(&self) -> bool {
        !self.non_empty
    }

    /// Spherical complexes are exactly those with `w = Dem(Q)`.
    pub fn is_spherical(&self) -> bool {
        self.target == self.demazure
    }

    pub fn facet_size(&self) -> usize {
        self.word.len() - self.target.length()
    }

    fn require_non_empty(&self) -> Result<()> {
        if self.non_empty {
            Ok(())
        } else {
            Err(Error::EmptyComplex)
        }
    }

    fn check_positions(&self, positions: &[usize]) -> Result<()> {
        match positions.iter().find(|&&p| p >= self.word.len()) {
            Some(&index) => Err(Error::IndexOutOfRange {
                index,
                rank: self.word.len(),
            }),
            None => Ok(()),
        }
    }

    /// Complement positions of `I`.
    pub fn complement(&self, facet: &Facet) -> Vec<usize> {
        (0..self.word.len()).filter(|&k| !facet.contains(k)).collect()
    }

    /// Whether the complement of `positions` is a reduced word for `w`.
    pub fn is_facet(&self, positions: &[usize]) -> Result<bool> {
        self.check_positions(positions)?;
        let facet = Facet::new(positions.to_vec());
        if facet.len() != positions.len() || facet.len() != self.facet_size() {
            return Ok(false);
        }
        let mut v = self.sys.identity().clone();
        for k in self.complement(&facet) {
            let s = self.word[k];
            if self.sys.is_right_descent(&v, s) {
                return Ok(false);
            }
            v = self.sys.mul_simple_right(&v, s);
        }
        Ok(v == self.target)
    }

    /// Product of the complement letters before position `k`.
    pub fn prefix(&self, facet: &Facet, k: usize) -> GroupElement {
        (0..k)
            .filter(|&j| !facet.contains(j))
            .fold(self.sys.identity().clone(), |v, j| {
                self.sys.mul_simple_right(&v, self.word[j])
            })
    }

    /// `r(I,k)` for every position `k` of the word.
    pub fn root_function_all(&self, facet: &Facet) -> Vec<Root> {
        let mut v = self.sys.identity().clone();
        let mut out = Vec::with_capacity(self.word.len());
        for (k, &s) in self.word.iter().enumerate() {
            out.push(v.column(s));
            if !facet.contains(k) {
                v = self.sys.mul_simple_right(&v, s);
            }
        }
        out
    }

    /// `r(I,k) = Q_{[0,k)∖I}(α_{s_k})`.
    pub fn root_function(&self, facet: &Facet, k: usize) -> Result<Root> {
        self.check_positions(&[k])?;
        Ok(self.prefix(facet, k).column(self.word[k]))
    }

    /// `Roots(I)`: root function values at the positions of `I`, in order.
    pub fn root_configuration(&self, facet: &Facet) -> Vec<Root> {
        let all = self.root_function_all(facet);
        facet.positions().iter().map(|&i| all[i].clone()).collect()
    }

    /// `w(I,k)` for every position `k`.
    pub fn weight_function_all(&self, facet: &Facet) -> Vec<QVector> {
        let weights = self.sys.weights();
        let mut v = self.sys.identity().clone();
        let mut out = Vec::with_capacity(self.word.len());
        for (k, &s) in self.word.iter().enumerate() {
            out.push(v.apply_rational(&weights[s]));
            if !facet.contains(k) {
                v = self.sys.mul_simple_right(&v, s);
            }
        }
        out
    }

    /// `w(I,k) = Q_{[0,k)∖I}(ω_{s_k})`.
    pub fn weight_function(&self, facet: &Facet, k: usize) -> Result<QVector> {
        self.check_positions(&[k])?;
        Ok(self
            .prefix(facet, k)
            .apply_rational(&self.sys.weights()[self.word[k]]))
    }

    /// `i ∈ I` is flippable iff `|r(I,i)| ∈ Inv(w)`.
    pub fn is_flippable(&self, facet: &Facet, i: usize) -> Result<bool> {
        if !facet.contains(i) {
            return Err(Error::NotInFacet(i));
        }
        let r = abs_root(&self.root_function(facet, i)?);
        Ok(self.sys.in_inversion_set(&self.target, &r))
    }

    /// Flippability of each position of `I`, in order.
    pub fn flippable_positions(&self, facet: &Facet) -> Vec<usize> {
        let roots = self.root_function_all(facet);
        let inv = self.sys.inversion_mask(&self.target);
        facet
            .positions()
            .iter()
            .copied()
            .filter(|&i| {
                let r = abs_root(&roots[i]);
                inv[self
                    .sys
                    .root_position(&r)
                    .expect("root function values are roots")]
            })
            .collect()
    }

    /// Exchanges `i ∈ I` with the unique complement position `j` where
    /// `r(I,j) = |r(I,i)|`.
    pub fn flip(&self, facet: &Facet, i: usize) -> Result<Flip> {
        if !facet.contains(i) {
            return Err(Error::NotInFacet(i));
        }
        let roots = self.root_function_all(facet);
        self.flip_with_roots(facet, i, &roots)
    }

    fn flip_with_roots(&self, facet: &Facet, i: usize, roots: &[Root]) -> Result<Flip> {
        let target = abs_root(&roots[i]);
        let mut candidates = (0..self.word.len()).filter(|&j| !facet.contains(j) && roots[j] == target);
        let Some(j) = candidates.next() else {
            return Err(Error::NotFlippable(i));
        };
        debug_assert!(candidates.next().is_none(), "complement roots are distinct");
        Ok(Flip {
            facet: facet.exchange(i, j),
            removed: i,
            added: j,
            root: roots[i].clone(),
        })
    }

    /// Updates all root-function values across a flip without recomputing
    /// prefix products: `r(J,k) = s_{r(I,i)}(r(I,k))` for `k` strictly after
    /// `min(i,j)` up to `max(i,j)`, unchanged elsewhere.
    pub fn roots_after_flip(&self, roots: &[Root], flip: &Flip) -> Result<Vec<Root>> {
        let beta = abs_root(&flip.root);
        let reflection = self.sys.reflection(
            self.sys
                .root_position(&beta)
                .ok_or(Error::NotARoot(beta.clone()))?,
        );
        let (lo, hi) = if flip.removed < flip.added {
            (flip.removed, flip.added)
        } else {
            (flip.added, flip.removed)
        };
        Ok(roots
            .iter()
            .enumerate()
            .map(|(k, r)| {
                if k > lo && k <= hi {
                    reflection.apply(r)
                } else {
                    r.clone()
                }
            })
            .collect())
    }

    /// Lexicographically first facet: take each position into `I` whenever
    /// the remaining suffix can still produce the rest of `w`.
    pub fn greedy_facet(&self) -> Result<Facet> {
        self.require_non_empty()?;
        let sys = self.sys;
        let mut v = sys.identity().clone();
        let mut rest = self.target.clone(); // v⁻¹w
        let mut positions = Vec::new();
        for (k, &s) in self.word.iter().enumerate() {
            if bruhat_leq(sys, &rest, &self.suffix_demazure[k + 1]) {
                positions.push(k);
            } else {
                v = sys.mul_simple_right(&v, s);
                rest = sys.mul_simple_left(s, &rest);
            }
        }
        let facet = Facet::new(positions);
        debug_assert!(self.is_facet(facet.positions()).unwrap());
        Ok(facet)
    }

    /// Lexicographically last facet: use each letter whenever it extends a
    /// reduced prefix of `w` that the remaining suffix can complete.
    pub fn antigreedy_facet(&self) -> Result<Facet> {
        self.require_non_empty()?;
        let sys = self.sys;
        let mut rest = self.target.clone(); // v⁻¹w for the current prefix v
        let mut positions = Vec::new();
        for (k, &s) in self.word.iter().enumerate() {
            // v·s ≤_R w  ⇔  s is a left descent of v⁻¹w
            let usable = sys.is_left_descent(&rest, s) && {
                let next = sys.mul_simple_left(s, &rest);
                bruhat_leq(sys, &next, &self.suffix_demazure[k + 1])
            };
            if usable {
                rest = sys.mul_simple_left(s, &rest);
            } else {
                positions.push(k);
            }
        }
        let facet = Facet::new(positions);
        debug_assert!(self.is_facet(facet.positions()).unwrap());
        Ok(facet)
    }

    /// All facets, sorted lexicographically, found by traversing the flip
    /// graph from the greedy facet.
    pub fn facets(&self) -> Result<&[Facet]> {
        self.require_non_empty()?;
        Ok(self.facets.get_or_init(|| {
            let start = self.greedy_facet().expect("non-empty");
            let mut seen: BTreeSet<Facet> = BTreeSet::from([start.clone()]);
            let mut queue = VecDeque::from([start]);
            while let Some(facet) = queue.pop_front() {
                let roots = self.root_function_all(&facet);
                for &i in facet.positions() {
                    if let Ok(flip) = self.flip_with_roots(&facet, i, &roots) {
                        if seen.insert(flip.facet.clone()) {
                            queue.push_back(flip.facet);
                        }
                    }
                }
            }
            seen.into_iter().collect()
        }))
    }

    /// `J ↦ J ∪ {k}` from facets of `SC(Q, s_β w)` (this complex is
    /// `SC(Q, w)`, `upper` is `SC(Q, s_β w)` with `w ≺ s_β w ≤ Dem(Q)`),
    /// where `k` is the unique complement position whose deletion leaves a
    /// reduced word for `w`.
    pub fn iota(&self, upper: &SubwordComplex<'_>, facet: &Facet) -> Result<Facet> {
        let sys = self.sys;
        if upper.word != self.word {
            return Err(Error::NoCover("the complexes use different words".into()));
        }
        let w = &self.target;
        let u = &upper.target;
        let quotient = sys.mul(u, &sys.inverse(w));
        let is_reflection = (0..sys.positive_roots().len()).any(|i| sys.reflection(i) == &quotient);
        if u.length() != w.length() + 1 || !is_reflection {
            return Err(Error::NoCover(format!(
                "{} is not a Bruhat cover of {}",
                sys.format_element(u),
                sys.format_element(w)
            )));
        }
        if !upper.non_empty {
            return Err(Error::NoCover(format!(
                "{} is not below the Demazure product",
                sys.format_element(u)
            )));
        }
        if !upper.is_facet(facet.positions())? {
            return Err(Error::NotAFacet(facet.to_string()));
        }
        let complement = upper.complement(facet);
        let mut found = None;
        for &k in &complement {
            let letters: Vec<usize> = complement
                .iter()
                .filter(|&&p| p != k)
                .map(|&p| self.word[p])
                .collect();
            if sys.is_reduced(&letters)? && &sys.element_from_word(&letters)? == w {
                if found.is_some() {
                    return Err(Error::InvariantViolation(format!(
                        "two positions complete {facet} to a facet"
                    )));
                }
                found = Some(k);
            }
        }
        found
            .map(|k| facet.with(k))
            .ok_or_else(|| Error::InvariantViolation(format!("no position completes {facet}")))
    }

    /// Roots `r(I,i)` over all facets `I` and non-flippable `i ∈ I`, in the
    /// canonical order of Φ+. These are exactly the labels `E+(w, Dem(Q))`.
    pub fn nonflippable_roots(&self) -> Result<Vec<Root>> {
        let facets = self.facets()?;
        let inv = self.sys.inversion_mask(&self.target);
        let mut found = vec![false; self.sys.positive_roots().len()];
        for facet in facets {
            let roots = self.root_function_all(facet);
            for &i in facet.positions() {
                let r = abs_root(&roots[i]);
                let idx = self.sys.root_position(&r).expect("root");
                if !inv[idx] {
                    found[idx] = true;
                }
            }
        }
        Ok(self
            .sys
            .positive_roots()
            .iter()
            .zip(found)
            .filter(|(_, f)| *f)
            .map(|(r, _)| r.clone())
            .collect())
    }

    /// `E+(w, Dem(Q))`.
    pub fn upper_labels(&self) -> Result<Vec<Root>> {
        self.require_non_empty()?;
        Ok(upper_labels_unchecked(self.sys, &self.target, &self.demazure))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::parse_word;

    fn complex<'a>(sys: &'a CoxeterSystem, q: &str, w: &str) -> SubwordComplex<'a> {
        SubwordComplex::new(
            sys,
            parse_word(q, sys.rank()).unwrap(),
            sys.parse_element(w).unwrap(),
        )
        .unwrap()
    }

    fn one_based(facets: &[Facet]) -> Vec<Vec<usize>> {
        facets.iter().map(Facet::one_based).collect()
    }

    #[test]
    fn a2_example() {
        let a2 = CoxeterSystem::from_preset("A2").unwrap();
        let sc = complex(&a2, "1212", "12");
        assert_eq!(
            one_based(sc.facets().unwrap()),
            [vec![1, 2], vec![2, 3], vec![3, 4]]
        );
        let i23 = Facet::from_one_based(&[2, 3]);
        assert_eq!(sc.root_configuration(&i23), [vec![1, 1], vec![-1, 0]]);
        let i34 = Facet::from_one_based(&[3, 4]);
        assert_eq!(sc.root_configuration(&i34), [vec![0, 1], vec![-1, -1]]);
        assert_eq!(
            sc.root_configuration(&Facet::from_one_based(&[1, 2])),
            [vec![1, 0], vec![0, 1]]
        );
        assert_eq!(sc.greedy_facet().unwrap().one_based(), [1, 2]);
        assert_eq!(sc.antigreedy_facet().unwrap().one_based(), [3, 4]);
        assert_eq!(sc.nonflippable_roots().unwrap(), [vec![0, 1]]);
        let flip = sc.flip(&Facet::from_one_based(&[1, 2]), 0).unwrap();
        assert_eq!(flip.facet.one_based(), [2, 3]);
        assert_eq!(flip.added, 2);
        let back = sc.flip(&flip.facet, flip.added).unwrap();
        assert_eq!(back.facet.one_based(), [1, 2]);
        assert_eq!(back.added, 0);
        assert!(matches!(
            sc.flip(&Facet::from_one_based(&[1, 2]), 1),
            Err(Error::NotFlippable(1))
        ));
        assert!(matches!(sc.flip(&i23, 0), Err(Error::NotInFacet(0))));
    }

    #[test]
    fn b3_example() {
        let b3 = CoxeterSystem::from_preset("B3").unwrap();
        let sc = complex(&b3, "123123123", "1");
        let facets = sc.facets().unwrap();
        assert_eq!(
            one_based(facets),
            [
                vec![1, 2, 3, 4, 5, 6, 8, 9],
                vec![1, 2, 3, 5, 6, 7, 8, 9],
                vec![2, 3, 4, 5, 6, 7, 8, 9]
            ]
        );
        assert_eq!(
            sc.root_configuration(&facets[0]),
            [
                vec![1, 0, 0],
                vec![0, 1, 0],
                vec![0, 0, 1],
                vec![1, 0, 0],
                vec![0, 1, 0],
                vec![0, 0, 1],
                vec![1, 1, 0],
                vec![0, 0, 1]
            ]
        );
        let flippable: Vec<Vec<usize>> = facets
            .iter()
            .map(|f| sc.flippable_positions(f).iter().map(|p| p + 1).collect())
            .collect();
        assert_eq!(flippable, [vec![1, 4], vec![1, 7], vec![4, 7]]);
        assert_eq!(
            sc.nonflippable_roots().unwrap(),
            [vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, 0]]
        );
        assert_eq!(sc.upper_labels().unwrap(), sc.nonflippable_roots().unwrap());
    }

    #[test]
    fn reduced_word_gives_single_empty_facet() {
        let a3 = CoxeterSystem::from_preset("A3").unwrap();
        let sc = complex(&a3, "123", "123");
        assert_eq!(sc.facets().unwrap(), &[Facet::new(vec![])]);
        assert!(sc.greedy_facet().unwrap().is_empty());
        assert!(sc.antigreedy_facet().unwrap().is_empty());
        assert!(sc.nonflippable_roots().unwrap().is_empty());
    }

    #[test]
    fn empty_complex() {
        let a2 = CoxeterSystem::from_preset("A2").unwrap();
        let sc = complex(&a2, "12", "21");
        assert!(sc.is_empty());
        assert!(matches!(sc.facets(), Err(Error::EmptyComplex)));
        assert!(matches!(sc.greedy_facet(), Err(Error::EmptyComplex)));
    }

    #[test]
    fn iota_on_a1xa1_letters() {
        let b3 = CoxeterSystem::from_preset("B3").unwrap();
        let lower = complex(&b3, "131", "3");
        let upper = complex(&b3, "131", "13");
        assert_eq!(upper.greedy_facet().unwrap().one_based(), [1]);
        assert_eq!(upper.antigreedy_facet().unwrap().one_based(), [3]);
        for f in upper.facets().unwrap() {
            assert_eq!(lower.iota(&upper, f).unwrap().one_based(), [1, 3]);
        }
        assert!(matches!(
            upper.iota(&lower, &Facet::new(vec![0, 2])),
            Err(Error::NoCover(_))
        ));
    }

    #[test]
    fn weight_function_examples() {
        let a2 = CoxeterSystem::from_preset("A2").unwrap();
        let sc = complex(&a2, "1212", "12");
        let f = Facet::from_one_based(&[1, 2]);
        assert_eq!(sc.weight_function(&f, 2).unwrap(), a2.weights()[0]);
        assert_eq!(sc.weight_function(&f, 0).unwrap(), a2.weights()[0]);
        assert_eq!(sc.root_function(&f, 0).unwrap(), vec![1, 0]);
    }

    #[test]
    fn root_update_across_flips_matches_recomputation() {
        let b3 = CoxeterSystem::from_preset("B3").unwrap();
        let sc = complex(&b3, "123123123", "1");
        for facet in sc.facets().unwrap() {
            let roots = sc.root_function_all(facet);
            for i in sc.flippable_positions(facet) {
                let flip = sc.flip(facet, i).unwrap();
                assert_eq!(
                    sc.roots_after_flip(&roots, &flip).unwrap(),
                    sc.root_function_all(&flip.facet)
                );
            }
        }
    }
}
