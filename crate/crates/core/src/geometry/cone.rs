use super::dd::{generators_to_halfspaces, halfspaces_to_generators, ConeGenerators};
use super::rational::{int_vec, is_zero_vec, rank, QVector, Rational};
use super::simplex::feasible_point;
use crate::{Error, Result};

/// A finitely generated cone `cone(generators)` over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalCone {
    dim: usize,
    generators: Vec<QVector>,
}

fn check_len(dim: usize, v: &[impl Sized]) -> Result<()> {
    if v.len() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: v.len(),
        });
    }
    Ok(())
}

impl RationalCone {
    pub fn new(dim: usize, generators: Vec<QVector>) -> Result<Self> {
        for g in &generators {
            check_len(dim, g)?;
        }
        Ok(RationalCone { dim, generators })
    }

    pub fn from_integer(dim: usize, generators: &[Vec<i64>]) -> Result<Self> {
        Self::new(dim, generators.iter().map(|g| int_vec(g)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        RationalCone {
            dim,
            generators: Vec::new(),
        }
    }

    /// The cone `{x : a·x ≥ 0 for a in halfspaces}`.
    pub fn from_halfspaces(dim: usize, halfspaces: &[QVector]) -> Result<Self> {
        let ConeGenerators { lineality, rays } = halfspaces_to_generators(dim, halfspaces)?;
        let mut generators = rays;
        for l in lineality {
            generators.push(l.iter().map(|x| -x).collect());
            generators.push(l);
        }
        Ok(RationalCone { dim, generators })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[QVector] {
        &self.generators
    }

    /// Adds generators, e.g. to form `C + R+·v` or `C + R·v`.
    pub fn extended(&self, extra: impl IntoIterator<Item = QVector>) -> Result<Self> {
        let mut generators = self.generators.clone();
        for g in extra {
            check_len(self.dim, &g)?;
            generators.push(g);
        }
        Ok(RationalCone {
            dim: self.dim,
            generators,
        })
    }

    /// Exact LP feasibility of `v = Σ λ_i g_i`, `λ ≥ 0`.
    pub fn contains(&self, v: &[Rational]) -> Result<bool> {
        check_len(self.dim, v)?;
        if is_zero_vec(v) {
            return Ok(true);
        }
        if self.generators.is_empty() {
            return Ok(false);
        }
        let a: Vec<QVector> = (0..self.dim)
            .map(|i| self.generators.iter().map(|g| g[i].clone()).collect())
            .collect();
        Ok(feasible_point(&a, v).is_some())
    }

    pub fn contains_integer(&self, v: &[i64]) -> Result<bool> {
        self.contains(&int_vec(v))
    }

    /// Whether every generator of `other` lies in `self`.
    pub fn contains_cone(&self, other: &RationalCone) -> Result<bool> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        for g in &other.generators {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality by mutual generator membership.
    pub fn equals(&self, other: &RationalCone) -> Result<bool> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(self.contains_cone(other)? && other.contains_cone(self)?)
    }

    /// Minimal H-representation: primitive covectors `a` with
    /// `cone = {x : a·x ≥ 0}`, equations as `±a` pairs.
    pub fn halfspaces(&self) -> Result<Vec<QVector>> {
        generators_to_halfspaces(self.dim, &self.generators)
    }

    /// Lineality basis and extreme rays.
    pub fn minimal_generators(&self) -> Result<ConeGenerators> {
        halfspaces_to_generators(self.dim, &self.halfspaces()?)
    }

    /// The dual cone `{a : a·g ≥ 0 for all generators g}`.
    pub fn dual(&self) -> Result<RationalCone> {
        RationalCone::new(self.dim, self.halfspaces()?)
    }

    /// A cone contains no line iff its halfspace covectors span the dual.
    pub fn is_pointed(&self) -> Result<bool> {
        Ok(rank(&self.halfspaces()?) == self.dim)
    }

    /// Intersection via the union of H-representations.
    pub fn intersect(dim: usize, cones: &[RationalCone]) -> Result<RationalCone> {
        let mut halfspaces = Vec::new();
        for c in cones {
            if c.dim != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: c.dim,
                });
            }
            halfspaces.extend(c.halfspaces()?);
        }
        RationalCone::from_halfspaces(dim, &halfspaces)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cone(g: &[&[i64]]) -> RationalCone {
        RationalCone::from_integer(
            g.first().map_or(2, |v| v.len()),
            &g.iter().map(|v| v.to_vec()).collect::<Vec<_>>(),
        )
        .unwrap()
    }

    #[test]
    fn membership() {
        let c = cone(&[&[1, 1], &[-1, 0]]);
        assert!(c.contains_integer(&[0, 1]).unwrap());
        assert!(c.contains_integer(&[0, 0]).unwrap());
        assert!(!c.contains_integer(&[1, 0]).unwrap());
        assert!(!cone(&[&[0, 1]]).contains_integer(&[1, 0]).unwrap());
        assert!(!RationalCone::zero(2).contains_integer(&[1, 0]).unwrap());
        assert!(matches!(
            c.contains_integer(&[1]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn pointedness() {
        assert!(!cone(&[&[1, 0], &[-1, 0]]).is_pointed().unwrap());
        assert!(cone(&[&[1, 0], &[0, 1]]).is_pointed().unwrap());
        assert!(RationalCone::zero(3).is_pointed().unwrap());
    }

    #[test]
    fn intersection_of_a2_root_configurations() {
        let cones = [
            cone(&[&[1, 0], &[0, 1]]),
            cone(&[&[1, 1], &[-1, 0]]),
            cone(&[&[0, 1], &[-1, -1]]),
        ];
        let meet = RationalCone::intersect(2, &cones).unwrap();
        assert!(meet.equals(&cone(&[&[0, 1]])).unwrap());
        assert_eq!(meet.generators(), &[int_vec(&[0, 1])]);
    }

    #[test]
    fn dual_of_orthant() {
        let c = cone(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert!(c.dual().unwrap().equals(&c).unwrap());
    }
}
