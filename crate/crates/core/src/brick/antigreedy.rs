//! The f-antigreedy facet of a subword complex and the subcomplex `SC_f`.

use num_traits::{Signed, Zero};

use crate::bruhat::bruhat_leq;
use crate::coxeter::{is_positive, CoxeterSystem, GroupElement, Root};
use crate::geometry::rational::{dot_int, int_vec, sign, QVector, Rational};
use crate::subword::{Facet, SubwordComplex};
use crate::{Error, Result};

/// A linear functional on the root space, given by its values on the simple
/// roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearFunctional(pub QVector);

impl LinearFunctional {
    pub fn from_integers(values: &[i64]) -> Self {
        LinearFunctional(int_vec(values))
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.0
    }

    pub fn eval(&self, v: &[i64]) -> Rational {
        dot_int(&self.0, v)
    }

    pub fn eval_rational(&self, v: &[Rational]) -> Rational {
        crate::geometry::rational::dot(&self.0, v)
    }

    /// The functional taking the value 1 on every `z(α_s)`; it is positive
    /// on `z(Φ+)` and negative on `z(Φ−)`. Its coefficients are the column
    /// sums of the matrix of `z⁻¹`.
    pub fn chamber(sys: &CoxeterSystem, z: &GroupElement) -> Self {
        let inv = sys.inverse(z);
        let n = sys.rank();
        let values: Vec<i64> = (0..n).map(|i| (0..n).map(|s| inv.entry(s, i)).sum()).collect();
        LinearFunctional::from_integers(&values)
    }

    fn check(&self, sys: &CoxeterSystem) -> Result<()> {
        if self.0.len() != sys.rank() {
            return Err(Error::DimensionMismatch {
                expected: sys.rank(),
                found: self.0.len(),
            });
        }
        Ok(())
    }
}

/// One step of the f-antigreedy scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    /// 0-based position `k − 1`.
    pub position: usize,
    /// `β_k = w_{k−1}(α_{s_k})`
    pub beta: Root,
    /// Sign of `f(β_k)`.
    pub sign: i8,
    /// Which of the six leaves of the decision tree fired. Leaves 1, 2, 3
    /// add the position to the facet; leaves 4, 5, 6 extend the prefix.
    pub condition: u8,
    /// `w_k`
    pub prefix: GroupElement,
    /// `I_k`
    pub facet: Facet,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AntigreedyTrace {
    pub steps: Vec<TraceStep>,
}

impl AntigreedyTrace {
    pub fn conditions(&self) -> Vec<u8> {
        self.steps.iter().map(|s| s.condition).collect()
    }
}

/// Whether `f` is non-negative on `E+(w, Dem(Q))`.
pub fn is_admissible(sc: &SubwordComplex<'_>, f: &LinearFunctional) -> Result<bool> {
    f.check(sc.system())?;
    Ok(sc.upper_labels()?.iter().all(|r| !f.eval(r).is_negative()))
}

fn require_admissible(f: &LinearFunctional, labels: &[Root]) -> Result<()> {
    match labels.iter().find(|r| f.eval(r).is_negative()) {
        Some(r) => Err(Error::FunctionalNotNonnegative(r.clone())),
        None => Ok(()),
    }
}

/// Runs the f-antigreedy scan and returns `I_f` with the full trace.
///
/// At step `k` with `β = w_{k−1}(α_{s_k})` and `u = w_{k−1}s_k`:
/// - `f(β) < 0`: leaf 4.
/// - `f(β) = 0`: leaf 2 if `β ∈ Φ−`, else leaf 5 if `u ≤_R w`, else leaf 1.
/// - `f(β) > 0`: leaf 2 if `β ∈ Φ−`, else leaf 1 unless `u ≤_R w`; then
///   leaf 3 if `w_{k−1}⁻¹w ≤ Dem(s_{k+1}⋯s_m)`, else leaf 6.
pub fn f_antigreedy(sc: &SubwordComplex<'_>, f: &LinearFunctional) -> Result<(Facet, AntigreedyTrace)> {
    let sys = sc.system();
    f.check(sys)?;
    let labels = sc.upper_labels()?;
    require_admissible(f, &labels)?;
    let w = sc.target();
    let mut prefix = sys.identity().clone();
    let mut positions = Vec::new();
    let mut trace = AntigreedyTrace::default();
    for (k, &s) in sc.word().iter().enumerate() {
        let beta = prefix.column(s);
        let value = f.eval(&beta);
        let sgn = sign(&value);
        let extended = sys.mul_simple_right(&prefix, s);
        let condition = if sgn < 0 {
            4
        } else if !is_positive(&beta) {
            2
        } else if !sys.weak_leq(&extended, w) {
            1
        } else if sgn == 0 {
            5
        } else {
            let rest = sys.mul(&sys.inverse(&prefix), w);
            if bruhat_leq(sys, &rest, sc.suffix_demazure(k + 1)) {
                3
            } else {
                6
            }
        };
        if condition <= 3 {
            positions.push(k);
        } else {
            prefix = extended;
        }
        trace.steps.push(TraceStep {
            position: k,
            beta,
            sign: sgn,
            condition,
            prefix: prefix.clone(),
            facet: Facet::new(positions.clone()),
        });
    }
    let facet = Facet::new(positions);
    check_output(sc, f, &facet, &labels)?;
    Ok((facet, trace))
}

fn check_output(sc: &SubwordComplex<'_>, f: &LinearFunctional, facet: &Facet, labels: &[Root]) -> Result<()> {
    if !sc.is_facet(facet.positions())? {
        return Err(Error::InvariantViolation(format!(
            "f-antigreedy output {facet} is not a facet"
        )));
    }
    if !satisfies_sign_conditions(sc, f, facet, labels) {
        return Err(Error::InvariantViolation(format!(
            "f-antigreedy output {facet} violates the sign conditions"
        )));
    }
    Ok(())
}

/// For a facet `I`: `f(r(I,i)) ≥ 0` for all `i ∈ I`, and every `r(I,i)`
/// with `f(r(I,i)) = 0` outside `labels` is a negative root.
pub fn satisfies_sign_conditions(
    sc: &SubwordComplex<'_>,
    f: &LinearFunctional,
    facet: &Facet,
    labels: &[Root],
) -> bool {
    sc.root_configuration(facet).iter().all(|r| {
        let v = f.eval(r);
        if v.is_negative() {
            false
        } else if v.is_zero() {
            !is_positive(r) || labels.contains(r)
        } else {
            true
        }
    })
}

/// Whether `f(r(I,i)) ≥ 0` for every `i ∈ I`.
pub fn in_sc_f(sc: &SubwordComplex<'_>, f: &LinearFunctional, facet: &Facet) -> bool {
    sc.root_configuration(facet)
        .iter()
        .all(|r| !f.eval(r).is_negative())
}

/// `SC_f(Q,w)`: the facets whose root configuration lies in `f ≥ 0`.
pub fn sc_f_facets(sc: &SubwordComplex<'_>, f: &LinearFunctional) -> Result<Vec<Facet>> {
    f.check(sc.system())?;
    Ok(sc
        .facets()?
        .iter()
        .filter(|facet| in_sc_f(sc, f, facet))
        .cloned()
        .collect())
}

/// Positions `i ∈ I` with `f(r(I,i)) > 0`.
pub fn roots_pos(sc: &SubwordComplex<'_>, f: &LinearFunctional, facet: &Facet) -> Vec<usize> {
    let roots = sc.root_function_all(facet);
    facet
        .positions()
        .iter()
        .copied()
        .filter(|&i| f.eval(&roots[i]).is_positive())
        .collect()
}
