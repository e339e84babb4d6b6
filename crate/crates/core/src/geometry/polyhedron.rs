use num_traits::{One, Signed, Zero};

use super::cone::RationalCone;
use super::dd::halfspaces_to_generators;
use super::rational::{dot, is_zero_vec, neg, primitive, rank, sub, QVector, Rational};
use super::simplex::{feasible_point, minimize, LpOutcome};
use crate::{Error, Result};

/// The closed halfspace `{x : normal·x + offset ≥ 0}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Halfspace {
    pub normal: QVector,
    pub offset: Rational,
}

impl Halfspace {
    pub fn holds(&self, x: &[Rational]) -> bool {
        !(dot(&self.normal, x) + &self.offset).is_negative()
    }

    pub fn holds_for_ray(&self, r: &[Rational]) -> bool {
        !dot(&self.normal, r).is_negative()
    }
}

/// `conv(points) + cone(rays)`, optionally carrying an H-representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPolyhedron {
    dim: usize,
    points: Vec<QVector>,
    rays: Vec<QVector>,
    halfspaces: Option<Vec<Halfspace>>,
}

fn check_dim(dim: usize, vs: &[QVector]) -> Result<()> {
    match vs.iter().find(|v| v.len() != dim) {
        Some(v) => Err(Error::DimensionMismatch {
            expected: dim,
            found: v.len(),
        }),
        None => Ok(()),
    }
}

impl RationalPolyhedron {
    /// The Minkowski sum `conv(points) + cone(rays)`. At least one point is
    /// required.
    pub fn minkowski_vrep(dim: usize, points: Vec<QVector>, rays: Vec<QVector>) -> Result<Self> {
        check_dim(dim, &points)?;
        check_dim(dim, &rays)?;
        if points.is_empty() {
            return Err(Error::PreconditionFailed(
                "a V-polyhedron needs at least one point".into(),
            ));
        }
        Ok(RationalPolyhedron {
            dim,
            points,
            rays,
            halfspaces: None,
        })
    }

    /// Converts an H-description into a V-description. Returns `None` if the
    /// halfspaces have no common point.
    pub fn from_halfspaces(dim: usize, halfspaces: Vec<Halfspace>) -> Result<Option<Self>> {
        for h in &halfspaces {
            check_dim(dim, std::slice::from_ref(&h.normal))?;
        }
        let mut homogeneous: Vec<QVector> = halfspaces
            .iter()
            .map(|h| {
                let mut v = h.normal.clone();
                v.push(h.offset.clone());
                v
            })
            .collect();
        let mut t = vec![Rational::zero(); dim + 1];
        t[dim] = Rational::one();
        homogeneous.push(t);
        let g = halfspaces_to_generators(dim + 1, &homogeneous)?;
        let mut points = Vec::new();
        let mut rays = Vec::new();
        for r in g.rays {
            let last = r[dim].clone();
            if last.is_zero() {
                rays.push(r[..dim].to_vec());
            } else {
                points.push(r[..dim].iter().map(|x| x / &last).collect());
            }
        }
        for l in g.lineality {
            let l = l[..dim].to_vec();
            rays.push(neg(&l));
            rays.push(l);
        }
        if points.is_empty() {
            return Ok(None);
        }
        Ok(Some(RationalPolyhedron {
            dim,
            points,
            rays,
            halfspaces: Some(halfspaces),
        }))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[QVector] {
        &self.points
    }

    pub fn rays(&self) -> &[QVector] {
        &self.rays
    }

    pub fn recession_cone(&self) -> RationalCone {
        RationalCone::new(self.dim, self.rays.clone()).expect("dimensions checked")
    }

    /// Exact membership in `conv(points) + cone(rays)`.
    pub fn contains(&self, v: &[Rational]) -> Result<bool> {
        check_dim(self.dim, std::slice::from_ref(&v.to_vec()))?;
        let mut a: Vec<QVector> = (0..self.dim)
            .map(|i| {
                self.points
                    .iter()
                    .chain(&self.rays)
                    .map(|g| g[i].clone())
                    .collect()
            })
            .collect();
        a.push(
            (0..self.points.len() + self.rays.len())
                .map(|k| {
                    if k < self.points.len() {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect(),
        );
        let mut b = v.to_vec();
        b.push(Rational::one());
        Ok(feasible_point(&a, &b).is_some())
    }

    /// Whether `other ⊆ self`, comparing V-descriptions.
    pub fn contains_polyhedron(&self, other: &RationalPolyhedron) -> Result<bool> {
        for p in &other.points {
            if !self.contains(p)? {
                return Ok(false);
            }
        }
        let rec = self.recession_cone();
        for r in &other.rays {
            if !rec.contains(r)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Minimal H-representation computed by homogenization, or the stored one.
    pub fn halfspaces(&self) -> Result<Vec<Halfspace>> {
        if let Some(h) = &self.halfspaces {
            return Ok(h.clone());
        }
        let generators: Vec<QVector> = self
            .points
            .iter()
            .map(|p| {
                let mut v = p.clone();
                v.push(Rational::one());
                v
            })
            .chain(self.rays.iter().map(|r| {
                let mut v = r.clone();
                v.push(Rational::zero());
                v
            }))
            .collect();
        let dual = halfspaces_to_generators(self.dim + 1, &generators)?;
        let split = |c: &QVector| Halfspace {
            normal: c[..self.dim].to_vec(),
            offset: c[self.dim].clone(),
        };
        let mut out = Vec::new();
        let equations: Vec<QVector> = dual.lineality.iter().map(|l| primitive(l)).collect();
        let eq_normals: Vec<QVector> = equations.iter().map(|e| e[..self.dim].to_vec()).collect();
        let eq_rank = rank(&eq_normals);
        for e in &equations {
            out.push(split(&neg(e)));
            out.push(split(e));
        }
        // an inequality whose normal is constant on the affine hull is implied
        for c in &dual.rays {
            let mut with = eq_normals.clone();
            with.push(c[..self.dim].to_vec());
            if rank(&with) > eq_rank {
                out.push(split(c));
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }

    /// Caches the H-representation.
    pub fn with_halfspaces(mut self) -> Result<Self> {
        self.halfspaces = Some(self.halfspaces()?);
        Ok(self)
    }

    pub fn satisfies_halfspaces(&self, v: &[Rational]) -> Result<bool> {
        Ok(self.halfspaces()?.iter().all(|h| h.holds(v)))
    }

    /// `cone{q − p : q ∈ points} + cone(rays)`.
    pub fn local_cone(&self, p: &[Rational]) -> Result<RationalCone> {
        let mut generators: Vec<QVector> = self
            .points
            .iter()
            .map(|q| sub(q, p))
            .filter(|v| !is_zero_vec(v))
            .collect();
        generators.extend(self.rays.iter().cloned());
        RationalCone::new(self.dim, generators)
    }

    /// Whether the listed point `p` is a vertex: its local cone is pointed.
    pub fn is_vertex(&self, p: &[Rational]) -> Result<bool> {
        if !self.contains(p)? {
            return Ok(false);
        }
        self.local_cone(p)?.is_pointed()
    }

    /// The distinct listed points that are vertices.
    pub fn vertices(&self) -> Result<Vec<QVector>> {
        let mut distinct = self.points.clone();
        distinct.sort();
        distinct.dedup();
        let mut out = Vec::new();
        for p in distinct {
            if self.local_cone(&p)?.is_pointed()? {
                out.push(p);
            }
        }
        Ok(out)
    }

    /// Minimum of `f` over the H-representation by exact LP, or `None` if
    /// `f` is unbounded below.
    pub fn minimize(&self, f: &[Rational]) -> Result<Option<Rational>> {
        check_dim(self.dim, std::slice::from_ref(&f.to_vec()))?;
        let hs = self.halfspaces()?;
        // x = x⁺ − x⁻, slack s_h ≥ 0 with normal·x − s_h = −offset
        let n = self.dim;
        let m = hs.len();
        let cols = 2 * n + m;
        let a: Vec<QVector> = hs
            .iter()
            .enumerate()
            .map(|(i, h)| {
                let mut row = vec![Rational::zero(); cols];
                for j in 0..n {
                    row[j] = h.normal[j].clone();
                    row[n + j] = -h.normal[j].clone();
                }
                row[2 * n + i] = -Rational::one();
                row
            })
            .collect();
        let b: QVector = hs.iter().map(|h| -h.offset.clone()).collect();
        let mut c = vec![Rational::zero(); cols];
        for j in 0..n {
            c[j] = f[j].clone();
            c[n + j] = -f[j].clone();
        }
        match minimize(&c, &a, &b) {
            LpOutcome::Optimal { value, .. } => Ok(Some(value)),
            LpOutcome::Unbounded => Ok(None),
            LpOutcome::Infeasible => Err(Error::InvariantViolation(
                "H-representation of a non-empty polyhedron is infeasible".into(),
            )),
        }
    }
}
