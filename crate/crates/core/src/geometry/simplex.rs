//! Dense two-phase simplex over exact rationals with Bland's rule.
//!
//! Problems are in standard form: minimize `c·x` subject to `A x = b`,
//! `x ≥ 0`.

use num_traits::{One, Signed, Zero};

use super::rational::{QVector, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { x: QVector, value: Rational },
}

struct Tableau {
    /// `rows[i]` has one entry per column followed by the right-hand side.
    rows: Vec<QVector>,
    basis: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize, objective: &mut QVector) {
        let inv = self.rows[r][c].recip();
        for x in self.rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *x -= &f * p;
                    }
                }
            }
        }
        if !objective[c].is_zero() {
            let f = objective[c].clone();
            for (x, p) in objective.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Runs simplex iterations on `objective` (reduced costs, last entry is
    /// minus the current value) over columns accepted by `allowed`.
    /// Returns false if the objective is unbounded below.
    fn optimize(&mut self, objective: &mut QVector, allowed: &dyn Fn(usize) -> bool) -> bool {
        loop {
            // Bland: smallest entering index, smallest leaving basis index.
            let Some(c) = (0..self.ncols).find(|&j| allowed(j) && objective[j].is_negative()) else {
                return true;
            };
            let mut best: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if row[c].is_positive() {
                    let ratio = &row[self.ncols] / &row[c];
                    let better = match &best {
                        None => true,
                        Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                    };
                    if better {
                        best = Some((i, ratio));
                    }
                }
            }
            match best {
                Some((r, _)) => self.pivot(r, c, objective),
                None => return false,
            }
        }
    }
}

/// Minimizes `c·x` over `{x ≥ 0 : A x = b}`.
pub fn minimize(c: &[Rational], a: &[QVector], b: &[Rational]) -> LpOutcome {
    let m = a.len();
    let n = c.len();
    debug_assert!(a.iter().all(|row| row.len() == n));
    debug_assert_eq!(b.len(), m);

    // Phase 1: artificial columns n..n+m, right-hand sides made non-negative.
    let ncols = n + m;
    let mut rows = Vec::with_capacity(m);
    for (i, (row, rhs)) in a.iter().zip(b).enumerate() {
        let flip = rhs.is_negative();
        let mut r: QVector = Vec::with_capacity(ncols + 1);
        r.extend(row.iter().map(|x| if flip { -x } else { x.clone() }));
        r.extend((0..m).map(|k| if k == i { Rational::one() } else { Rational::zero() }));
        r.push(if flip { -rhs } else { rhs.clone() });
        rows.push(r);
    }
    let mut t = Tableau {
        rows,
        basis: (n..n + m).collect(),
        ncols,
    };
    let mut phase1 = vec![Rational::zero(); ncols + 1];
    for row in &t.rows {
        for j in 0..n {
            phase1[j] -= &row[j];
        }
        phase1[ncols] -= &row[ncols];
    }
    t.optimize(&mut phase1, &|_| true);
    if !phase1[ncols].is_zero() {
        return LpOutcome::Infeasible;
    }

    // Drive artificial variables out of the basis; drop redundant rows.
    let mut i = 0;
    while i < t.rows.len() {
        if t.basis[i] >= n {
            match (0..n).find(|&j| !t.rows[i][j].is_zero()) {
                Some(j) => {
                    t.pivot(i, j, &mut phase1);
                    i += 1;
                }
                None => {
                    t.rows.remove(i);
                    t.basis.remove(i);
                }
            }
        } else {
            i += 1;
        }
    }

    // Phase 2.
    let mut objective = vec![Rational::zero(); ncols + 1];
    objective[..n].clone_from_slice(c);
    for (row, &bv) in t.rows.iter().zip(&t.basis) {
        if !objective[bv].is_zero() {
            let f = objective[bv].clone();
            for (x, p) in objective.iter_mut().zip(row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
    }
    if !t.optimize(&mut objective, &|j| j < n) {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![Rational::zero(); n];
    for (row, &bv) in t.rows.iter().zip(&t.basis) {
        if bv < n {
            x[bv] = row[ncols].clone();
        }
    }
    let value = -objective[ncols].clone();
    LpOutcome::Optimal { x, value }
}

/// Some `x ≥ 0` with `A x = b`, if one exists.
pub fn feasible_point(a: &[QVector], b: &[Rational]) -> Option<QVector> {
    let n = a.first().map_or(0, Vec::len);
    match minimize(&vec![Rational::zero(); n], a, b) {
        LpOutcome::Optimal { x, .. } => Some(x),
        _ => None,
    }
}
