//! Bruhat order, cover labels, Bruhat cones and weak-order ideals.

use crate::coxeter::{CoxeterSystem, GroupElement, Root};
use crate::geometry::RationalCone;
use crate::{Error, Result};

/// Bruhat comparison `x ≤ y` via the lifting property: take the smallest
/// left descent `s` of `y`; then `x ≤ y` iff `sx ≤ sy` when `sx < x`, and
/// iff `x ≤ sy` otherwise.
pub fn bruhat_leq(sys: &CoxeterSystem, x: &GroupElement, y: &GroupElement) -> bool {
    // Left descents of an element are the right descents of its inverse,
    // which are read off a matrix column.
    let mut u = sys.inverse(x);
    let mut v = sys.inverse(y);
    loop {
        if u.length() > v.length() {
            return false;
        }
        if u.is_identity() {
            return true;
        }
        let s = (0..sys.rank())
            .find(|&s| sys.is_right_descent(&v, s))
            .expect("non-identity element has a descent");
        if sys.is_right_descent(&u, s) {
            u = sys.mul_simple_right(&u, s);
        }
        v = sys.mul_simple_right(&v, s);
    }
}

/// Labels of the atoms and coatoms of a Bruhat interval `[x, y]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruhatEdgeLabels {
    pub base: GroupElement,
    pub top: GroupElement,
    /// `E+(x,y) = {β ∈ Φ+ : x ≺ s_β x ≤ y}`
    pub atoms: Vec<Root>,
    /// `E−(x,y) = {β ∈ Φ+ : x ≤ s_β y ≺ y}`
    pub coatoms: Vec<Root>,
}

fn require_leq(sys: &CoxeterSystem, x: &GroupElement, y: &GroupElement) -> Result<()> {
    if bruhat_leq(sys, x, y) {
        Ok(())
    } else {
        Err(Error::NotComparable)
    }
}

/// `E+(x,y)`, in the canonical order of Φ+.
pub fn upper_labels(sys: &CoxeterSystem, x: &GroupElement, y: &GroupElement) -> Result<Vec<Root>> {
    require_leq(sys, x, y)?;
    Ok(upper_labels_unchecked(sys, x, y))
}

pub(crate) fn upper_labels_unchecked(sys: &CoxeterSystem, x: &GroupElement, y: &GroupElement) -> Vec<Root> {
    sys.positive_roots()
        .iter()
        .enumerate()
        .filter(|(i, _)| {
            let t = sys.mul(sys.reflection(*i), x);
            t.length() == x.length() + 1 && bruhat_leq(sys, &t, y)
        })
        .map(|(_, r)| r.clone())
        .collect()
}

/// `E−(x,y)`, in the canonical order of Φ+.
pub fn lower_labels(sys: &CoxeterSystem, x: &GroupElement, y: &GroupElement) -> Result<Vec<Root>> {
    require_leq(sys, x, y)?;
    Ok(sys
        .positive_roots()
        .iter()
        .enumerate()
        .filter(|(i, _)| {
            let t = sys.mul(sys.reflection(*i), y);
            t.length() + 1 == y.length() && bruhat_leq(sys, x, &t)
        })
        .map(|(_, r)| r.clone())
        .collect())
}

pub fn cover_label_sets(sys: &CoxeterSystem, x: &GroupElement, y: &GroupElement) -> Result<BruhatEdgeLabels> {
    Ok(BruhatEdgeLabels {
        base: x.clone(),
        top: y.clone(),
        atoms: upper_labels(sys, x, y)?,
        coatoms: lower_labels(sys, x, y)?,
    })
}

/// The cone spanned by a set of cover labels. The labels are used as
/// generators unchanged; they are the rays of the cone.
pub fn bruhat_cone(dim: usize, labels: &[Root]) -> Result<RationalCone> {
    RationalCone::from_integer(dim, labels)
}

/// `C+(x,y) = cone(E+(x,y))`.
pub fn upper_cone(sys: &CoxeterSystem, x: &GroupElement, y: &GroupElement) -> Result<RationalCone> {
    bruhat_cone(sys.rank(), &upper_labels(sys, x, y)?)
}

/// `C−(x,y) = cone(E−(x,y))`.
pub fn lower_cone(sys: &CoxeterSystem, x: &GroupElement, y: &GroupElement) -> Result<RationalCone> {
    bruhat_cone(sys.rank(), &lower_labels(sys, x, y)?)
}

/// `I(x,y) = {z ∈ W : Inv(z) ∩ E+(x,y) = ∅}`, a lower ideal in right weak
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakIdeal {
    pub base: GroupElement,
    pub top: GroupElement,
    pub labels: Vec<Root>,
    /// Sorted by length, then canonical word.
    pub members: Vec<GroupElement>,
}

impl WeakIdeal {
    pub fn contains(&self, z: &GroupElement) -> bool {
        self.members.contains(z)
    }
}

pub fn weak_ideal(sys: &CoxeterSystem, x: &GroupElement, y: &GroupElement) -> Result<WeakIdeal> {
    let labels = upper_labels(sys, x, y)?;
    let label_positions: Vec<usize> = labels
        .iter()
        .map(|r| sys.root_position(r).expect("labels are positive roots"))
        .collect();
    let members = sys
        .elements()
        .iter()
        .filter(|z| {
            let inv = sys.inversion_mask(z);
            label_positions.iter().all(|&i| !inv[i])
        })
        .cloned()
        .collect();
    Ok(WeakIdeal {
        base: x.clone(),
        top: y.clone(),
        labels,
        members,
    })
}

/// All `z` with `x ≤ z ≤ y`.
pub fn interval(sys: &CoxeterSystem, x: &GroupElement, y: &GroupElement) -> Vec<GroupElement> {
    sys.elements()
        .iter()
        .filter(|z| bruhat_leq(sys, x, z) && bruhat_leq(sys, z, y))
        .cloned()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(sys: &CoxeterSystem, w: &str) -> GroupElement {
        sys.parse_element(w).unwrap()
    }

    #[test]
    fn a2_comparisons() {
        let a2 = CoxeterSystem::from_preset("A2").unwrap();
        assert!(bruhat_leq(&a2, &el(&a2, "2"), &el(&a2, "12")));
        assert!(!bruhat_leq(&a2, &el(&a2, "12"), &el(&a2, "21")));
        for w in a2.elements() {
            assert!(bruhat_leq(&a2, w, w));
            assert!(bruhat_leq(&a2, a2.identity(), w));
            assert!(bruhat_leq(&a2, w, a2.longest_element()));
        }
    }

    #[test]
    fn weak_order_implies_bruhat_in_b3() {
        let b3 = CoxeterSystem::from_preset("B3").unwrap();
        for x in b3.elements() {
            for y in b3.elements() {
                if b3.weak_leq(x, y) {
                    assert!(bruhat_leq(&b3, x, y));
                }
            }
        }
    }

    #[test]
    fn labels_of_small_intervals() {
        let a2 = CoxeterSystem::from_preset("A2").unwrap();
        assert_eq!(
            upper_labels(&a2, &el(&a2, "12"), &el(&a2, "121")).unwrap(),
            vec![vec![0, 1]]
        );
        let b3 = CoxeterSystem::from_preset("B3").unwrap();
        assert_eq!(
            upper_labels(&b3, &el(&b3, "1"), &el(&b3, "w0")).unwrap(),
            vec![vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, 0]]
        );
        let b2 = CoxeterSystem::from_preset("B2").unwrap();
        assert_eq!(
            upper_labels(&b2, &el(&b2, "2"), &el(&b2, "21")).unwrap(),
            vec![vec![1, 2]]
        );
        let w = el(&b3, "123");
        let labels = cover_label_sets(&b3, &w, &w).unwrap();
        assert!(labels.atoms.is_empty() && labels.coatoms.is_empty());
        assert!(matches!(
            upper_labels(&a2, &el(&a2, "12"), &el(&a2, "21")),
            Err(Error::NotComparable)
        ));
    }

    #[test]
    fn weak_ideals() {
        let a2 = CoxeterSystem::from_preset("A2").unwrap();
        let ideal = weak_ideal(&a2, &el(&a2, "12"), &el(&a2, "121")).unwrap();
        let names: Vec<String> = ideal.members.iter().map(|z| a2.format_element(z)).collect();
        assert_eq!(names, ["e", "1", "12"]);
        let b2 = CoxeterSystem::from_preset("B2").unwrap();
        let ideal = weak_ideal(&b2, &el(&b2, "2"), &el(&b2, "21")).unwrap();
        let names: Vec<String> = ideal.members.iter().map(|z| b2.format_element(z)).collect();
        assert_eq!(names, ["e", "1", "2", "12"]);
        let w0 = a2.longest_element();
        assert_eq!(weak_ideal(&a2, w0, w0).unwrap().members.len(), 6);
    }

    #[test]
    fn cones() {
        let a2 = CoxeterSystem::from_preset("A2").unwrap();
        let c = upper_cone(&a2, &el(&a2, "12"), &el(&a2, "121")).unwrap();
        assert_eq!(c.generators().len(), 1);
        assert!(bruhat_cone(2, &[]).unwrap().generators().is_empty());
    }
}
