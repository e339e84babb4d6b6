//! Brick vectors and brick polyhedra.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::coxeter::{is_positive, Root};
use crate::geometry::rational::{dot, int_vec, is_positive_multiple, is_zero_vec, neg, rank, sub, zero_vec};
use crate::geometry::{Halfspace, QVector, Rational, RationalCone, RationalPolyhedron};
use crate::subword::{Facet, SubwordComplex};
use crate::{Error, Result};

use super::antigreedy::LinearFunctional;

/// `b(I) = −Σ_k w(I,k)`, in root coordinates.
pub fn brick_vector(sc: &SubwordComplex<'_>, facet: &Facet) -> QVector {
    let n = sc.system().rank();
    let total = sc
        .weight_function_all(facet)
        .iter()
        .fold(zero_vec(n), |acc, w| crate::geometry::rational::add(&acc, w));
    neg(&total)
}

/// `B(Q,w) = conv{b(I)} + C+(w, Dem(Q))` with both descriptions.
#[derive(Debug, Clone)]
pub struct BrickPolyhedron {
    dim: usize,
    spherical: bool,
    facets: Vec<Facet>,
    brick_vectors: BTreeMap<Facet, QVector>,
    roots: BTreeMap<Facet, Vec<Root>>,
    vertex_facets: Vec<Facet>,
    recession_rays: Vec<Root>,
    vrep: RationalPolyhedron,
    hrep: RationalPolyhedron,
}

/// An edge of a brick polyhedron with the facets whose brick vectors lie on
/// it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub bounded: bool,
    pub facets: Vec<Facet>,
}

impl BrickPolyhedron {
    /// Builds the V-description from the definition and the H-description
    /// as `∩_I (b(I) + cone Roots(I))`, and checks that they agree.
    pub fn new(sc: &SubwordComplex<'_>) -> Result<Self> {
        let n = sc.system().rank();
        let facets = sc.facets()?.to_vec();
        let mut brick_vectors = BTreeMap::new();
        let mut roots = BTreeMap::new();
        let mut vertex_facets = Vec::new();
        let mut halfspaces = Vec::new();
        for facet in &facets {
            let b = brick_vector(sc, facet);
            let config = sc.root_configuration(facet);
            let cone = RationalCone::from_integer(n, &config)?;
            for c in cone.halfspaces()? {
                let offset = -dot(&c, &b);
                halfspaces.push(Halfspace { normal: c, offset });
            }
            if cone.is_pointed()? {
                vertex_facets.push(facet.clone());
            }
            brick_vectors.insert(facet.clone(), b);
            roots.insert(facet.clone(), config);
        }
        let recession_rays = sc.upper_labels()?;
        let mut points: Vec<QVector> = brick_vectors.values().cloned().collect();
        points.sort();
        points.dedup();
        let vrep = RationalPolyhedron::minkowski_vrep(
            n,
            points,
            recession_rays.iter().map(|r| int_vec(r)).collect(),
        )?;
        halfspaces.sort();
        halfspaces.dedup();
        let intersection = RationalPolyhedron::from_halfspaces(n, halfspaces)?.ok_or_else(|| {
            Error::InvariantViolation("the translated root cones have empty intersection".into())
        })?;
        // re-derive a minimal H-description from the vertices and rays of the
        // intersection
        let hrep = RationalPolyhedron::minkowski_vrep(
            n,
            intersection.points().to_vec(),
            intersection.rays().to_vec(),
        )?
        .with_halfspaces()?;
        let bp = BrickPolyhedron {
            dim: n,
            spherical: sc.is_spherical(),
            facets,
            brick_vectors,
            roots,
            vertex_facets,
            recession_rays,
            vrep,
            hrep,
        };
        if !bp.representations_agree()? {
            return Err(Error::InvariantViolation(
                "V- and H-descriptions of the brick polyhedron differ".into(),
            ));
        }
        if bp.hrep.rays().is_empty() != bp.spherical {
            return Err(Error::InvariantViolation(
                "boundedness does not match sphericity".into(),
            ));
        }
        Ok(bp)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_polytope(&self) -> bool {
        self.spherical
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn brick_vectors(&self) -> &BTreeMap<Facet, QVector> {
        &self.brick_vectors
    }

    pub fn brick_vector(&self, facet: &Facet) -> Result<&QVector> {
        self.brick_vectors
            .get(facet)
            .ok_or_else(|| Error::NotAFacet(facet.to_string()))
    }

    pub fn root_configuration(&self, facet: &Facet) -> Result<&[Root]> {
        self.roots
            .get(facet)
            .map(Vec::as_slice)
            .ok_or_else(|| Error::NotAFacet(facet.to_string()))
    }

    /// Facets with pointed root configuration.
    pub fn vertex_facets(&self) -> &[Facet] {
        &self.vertex_facets
    }

    /// `E+(w, Dem(Q))`
    pub fn recession_rays(&self) -> &[Root] {
        &self.recession_rays
    }

    pub fn vrep(&self) -> &RationalPolyhedron {
        &self.vrep
    }

    pub fn hrep(&self) -> &RationalPolyhedron {
        &self.hrep
    }

    pub fn halfspaces(&self) -> Result<Vec<Halfspace>> {
        self.hrep.halfspaces()
    }

    /// Every point and ray of the V-description satisfies the H-description,
    /// and every point and ray of the H-description lies in the
    /// V-description.
    pub fn representations_agree(&self) -> Result<bool> {
        let hs = self.hrep.halfspaces()?;
        for p in self.vrep.points() {
            if !hs.iter().all(|h| h.holds(p)) {
                return Ok(false);
            }
        }
        for r in self.vrep.rays() {
            if !hs.iter().all(|h| h.holds_for_ray(r)) {
                return Ok(false);
            }
        }
        self.vrep.contains_polyhedron(&self.hrep)
    }

    /// Geometric vertices of the V-description.
    pub fn vertices(&self) -> Result<Vec<QVector>> {
        self.vrep.vertices()
    }

    /// `cone(Roots(I))`, checked against the local cone of the V-description
    /// at `b(I)`.
    pub fn local_cone_at(&self, facet: &Facet) -> Result<RationalCone> {
        let cone = RationalCone::from_integer(self.dim, self.root_configuration(facet)?)?;
        let local = self.vrep.local_cone(self.brick_vector(facet)?)?;
        if !cone.equals(&local)? {
            return Err(Error::InvariantViolation(format!(
                "local cone at the brick vector of {facet} differs from its root cone"
            )));
        }
        Ok(cone)
    }

    /// Minimum of `f` over the polyhedron, `None` when unbounded below.
    pub fn minimum(&self, f: &LinearFunctional) -> Result<Option<Rational>> {
        self.hrep.minimize(f.coefficients())
    }

    /// Facets whose brick vector minimizes `f`, i.e. lies on the face `B_f`.
    /// `None` when `f` is unbounded below.
    pub fn face_facets(&self, f: &LinearFunctional) -> Result<Option<Vec<Facet>>> {
        let Some(min) = self.minimum(f)? else {
            return Ok(None);
        };
        Ok(Some(
            self.brick_vectors
                .iter()
                .filter(|(_, b)| f.eval_rational(b) == min)
                .map(|(facet, _)| facet.clone())
                .collect(),
        ))
    }

    fn facets_on(&self, tight: &[&Halfspace]) -> Vec<Facet> {
        self.brick_vectors
            .iter()
            .filter(|(_, b)| tight.iter().all(|h| (dot(&h.normal, b) + &h.offset).is_zero()))
            .map(|(facet, _)| facet.clone())
            .collect()
    }

    /// Bounded edges between pairs of vertices and unbounded edges from a
    /// vertex along an extreme ray, each with the facets lying on it.
    pub fn edges(&self) -> Result<Vec<Edge>> {
        let hs = self.hrep.halfspaces()?;
        let vertices = self.vertices()?;
        let tight_at = |p: &QVector| -> Vec<usize> {
            (0..hs.len())
                .filter(|&i| (dot(&hs[i].normal, p) + &hs[i].offset).is_zero())
                .collect()
        };
        let tight: Vec<Vec<usize>> = vertices.iter().map(tight_at).collect();
        let edge_rank = self.dim - 1;
        let normals = |ids: &[usize]| -> Vec<QVector> { ids.iter().map(|&i| hs[i].normal.clone()).collect() };
        let mut out = Vec::new();
        for a in 0..vertices.len() {
            for b in a + 1..vertices.len() {
                let common: Vec<usize> = tight[a]
                    .iter()
                    .copied()
                    .filter(|i| tight[b].contains(i))
                    .collect();
                if rank(&normals(&common)) == edge_rank {
                    let chosen: Vec<&Halfspace> = common.iter().map(|&i| &hs[i]).collect();
                    out.push(Edge {
                        bounded: true,
                        facets: self.facets_on(&chosen),
                    });
                }
            }
        }
        let rays = self.vrep.recession_cone().minimal_generators()?.rays;
        for a in 0..vertices.len() {
            for r in &rays {
                let common: Vec<usize> = tight[a]
                    .iter()
                    .copied()
                    .filter(|&i| dot(&hs[i].normal, r).is_zero())
                    .collect();
                if rank(&normals(&common)) == edge_rank {
                    let chosen: Vec<&Halfspace> = common.iter().map(|&i| &hs[i]).collect();
                    out.push(Edge {
                        bounded: false,
                        facets: self.facets_on(&chosen),
                    });
                }
            }
        }
        Ok(out)
    }

    /// `b(J) − b(I)` is a positive multiple of `r(I,i)` for every flip.
    pub fn check_flip_differences(&self, sc: &SubwordComplex<'_>) -> Result<Option<String>> {
        for facet in &self.facets {
            for i in sc.flippable_positions(facet) {
                let flip = sc.flip(facet, i)?;
                let diff = sub(self.brick_vector(&flip.facet)?, self.brick_vector(facet)?);
                if !is_positive_multiple(&diff, &int_vec(&flip.root)) {
                    return Ok(Some(format!(
                        "flip of position {} in {facet}: difference is not a positive multiple of the flip root",
                        i + 1
                    )));
                }
            }
        }
        Ok(None)
    }

    /// Geometric vertices are exactly the brick vectors of facets with
    /// pointed root configuration.
    pub fn check_vertices(&self) -> Result<Option<String>> {
        let mut expected: Vec<QVector> = self
            .vertex_facets
            .iter()
            .map(|f| self.brick_vectors[f].clone())
            .collect();
        expected.sort();
        expected.dedup();
        let mut found = self.vertices()?;
        found.sort();
        if found != expected {
            return Ok(Some(format!(
                "{} geometric vertices but {} pointed brick vectors",
                found.len(),
                expected.len()
            )));
        }
        for facet in &self.facets {
            let pointed = self.vertex_facets.contains(facet);
            let b = &self.brick_vectors[facet];
            if pointed != self.vrep.is_vertex(b)? {
                return Ok(Some(format!(
                    "pointedness of {facet} disagrees with vertex status"
                )));
            }
        }
        Ok(None)
    }

    /// Whether `other ⊆ self`: every point of `other` satisfies the
    /// H-description of `self` and every ray of `other` is a recession
    /// direction of `self`.
    pub fn contains(&self, other: &BrickPolyhedron) -> Result<bool> {
        let hs = self.hrep.halfspaces()?;
        Ok(other.vrep.points().iter().all(|p| hs.iter().all(|h| h.holds(p)))
            && other
                .vrep
                .rays()
                .iter()
                .all(|r| hs.iter().all(|h| h.holds_for_ray(r))))
    }
}

/// `B(Q, ws) ⊆ B(Q, w)` for a simple cover `w ≺ ws ≤ Dem(Q)`.
pub fn containment_check(
    lower: &SubwordComplex<'_>,
    lower_bp: &BrickPolyhedron,
    upper: &SubwordComplex<'_>,
    upper_bp: &BrickPolyhedron,
) -> Result<bool> {
    let sys = lower.system();
    let w = lower.target();
    let ws = upper.target();
    let is_simple_cover =
        ws.length() == w.length() + 1 && (0..sys.rank()).any(|s| &sys.mul_simple_right(w, s) == ws);
    if lower.word() != upper.word() || !is_simple_cover || !upper.is_non_empty() {
        return Err(Error::PreconditionFailed(format!(
            "{} is not a right simple cover of {} below the Demazure product of the same word",
            sys.format_element(ws),
            sys.format_element(w)
        )));
    }
    lower_bp.contains(upper_bp)
}

/// `b(I) ∈ b(ι(I)) + R+·β` for every facet `I` of `SC(Q, s_β w)`.
pub fn check_iota_brick_relation(
    lower: &SubwordComplex<'_>,
    lower_bp: &BrickPolyhedron,
    upper: &SubwordComplex<'_>,
    upper_bp: &BrickPolyhedron,
) -> Result<Option<String>> {
    let sys = lower.system();
    let quotient = sys.mul(upper.target(), &sys.inverse(lower.target()));
    let beta = (0..sys.positive_roots().len())
        .find(|&i| sys.reflection(i) == &quotient)
        .map(|i| sys.positive_roots()[i].clone())
        .ok_or_else(|| Error::NoCover("targets do not differ by a reflection".into()))?;
    debug_assert!(is_positive(&beta));
    for facet in upper_bp.facets() {
        let image = lower.iota(upper, facet)?;
        let diff = sub(upper_bp.brick_vector(facet)?, lower_bp.brick_vector(&image)?);
        if !is_zero_vec(&diff) && !is_positive_multiple(&diff, &int_vec(&beta)) {
            return Ok(Some(format!("b({facet}) − b({image}) is not in R+·β")));
        }
    }
    Ok(None)
}
