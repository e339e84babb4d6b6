//! The map κ from a weak-order ideal to facets, and the normal fan of a
//! brick polyhedron.
//!
//! Normal cones live in the dual space: a covector is given by its values
//! on the simple roots. The chamber `z(C)` corresponds to the covectors that
//! are non-negative on `z(Φ+)`; it is generated by the rows of the matrix of
//! `z⁻¹`.

use std::collections::BTreeMap;

use crate::bruhat::{weak_ideal, WeakIdeal};
use crate::coxeter::{is_positive, CoxeterSystem, GroupElement, Root};
use crate::geometry::rational::int_vec;
use crate::geometry::{QVector, RationalCone};
use crate::subword::{Facet, SubwordComplex};
use crate::{Error, Result};

use super::antigreedy::{f_antigreedy, LinearFunctional};
use super::polyhedron::BrickPolyhedron;

#[derive(Debug, Clone)]
pub struct KappaMap {
    pub ideal: WeakIdeal,
    /// In the order of `ideal.members`.
    pub assignment: Vec<(GroupElement, Facet)>,
}

impl KappaMap {
    pub fn get(&self, z: &GroupElement) -> Option<&Facet> {
        self.assignment.iter().find(|(y, _)| y == z).map(|(_, f)| f)
    }

    /// Elements mapped to each facet in the image.
    pub fn fibers(&self) -> BTreeMap<Facet, Vec<GroupElement>> {
        let mut out: BTreeMap<Facet, Vec<GroupElement>> = BTreeMap::new();
        for (z, facet) in &self.assignment {
            out.entry(facet.clone()).or_default().push(z.clone());
        }
        out
    }

    /// For `x ≤_R y` in the same fiber, every element of `[x,y]_R` lies in
    /// that fiber.
    pub fn check_fiber_intervals(&self, sys: &CoxeterSystem) -> Option<String> {
        for (x, fx) in &self.assignment {
            for (y, fy) in &self.assignment {
                if fx != fy || x == y || !sys.weak_leq(x, y) {
                    continue;
                }
                for (z, fz) in &self.assignment {
                    if fz != fx && sys.weak_leq(x, z) && sys.weak_leq(z, y) {
                        return Some(format!(
                            "{} lies weakly between {} and {} but leaves their fiber",
                            sys.format_element(z),
                            sys.format_element(x),
                            sys.format_element(y)
                        ));
                    }
                }
            }
        }
        None
    }
}

/// `Roots(I) ⊆ z(Φ+)`, i.e. `z⁻¹(r)` is positive for every root of `I`.
pub fn roots_in_chamber(sys: &CoxeterSystem, z: &GroupElement, roots: &[Root]) -> bool {
    let inv = sys.inverse(z);
    roots.iter().all(|r| is_positive(&inv.apply(r)))
}

/// κ(z) = I_f for the functional with value 1 on each `z(α_s)`, over the
/// ideal `I(w, Dem(Q))`. Checks `Roots(κ(z)) ⊆ z(Φ+)` and that the image is
/// exactly the set of facets with pointed root configuration.
pub fn kappa(sc: &SubwordComplex<'_>) -> Result<KappaMap> {
    let sys = sc.system();
    if sc.is_empty() {
        return Err(Error::EmptyComplex);
    }
    let ideal = weak_ideal(sys, sc.target(), sc.demazure())?;
    let mut assignment = Vec::with_capacity(ideal.members.len());
    for z in &ideal.members {
        let f = LinearFunctional::chamber(sys, z);
        let (facet, _) = f_antigreedy(sc, &f)?;
        if !roots_in_chamber(sys, z, &sc.root_configuration(&facet)) {
            return Err(Error::InvariantViolation(format!(
                "roots of κ({}) = {facet} leave the chamber",
                sys.format_element(z)
            )));
        }
        assignment.push((z.clone(), facet));
    }
    let map = KappaMap { ideal, assignment };
    let image: Vec<Facet> = map.fibers().into_keys().collect();
    let mut pointed = Vec::new();
    for facet in sc.facets()? {
        if RationalCone::from_integer(sys.rank(), &sc.root_configuration(facet))?.is_pointed()? {
            pointed.push(facet.clone());
        }
    }
    if image != pointed {
        return Err(Error::InvariantViolation(
            "κ is not onto the facets with pointed root configuration".into(),
        ));
    }
    Ok(map)
}

/// The chamber `z(C)` as a cone of covectors.
pub fn chamber_cone(sys: &CoxeterSystem, z: &GroupElement) -> RationalCone {
    let inv = sys.inverse(z);
    let n = sys.rank();
    let rows: Vec<QVector> = (0..n)
        .map(|s| int_vec(&(0..n).map(|i| inv.entry(s, i)).collect::<Vec<i64>>()))
        .collect();
    RationalCone::new(n, rows).expect("square matrix")
}

/// Inner normal cone of a vertex, glued from the chambers of its κ-fiber.
#[derive(Debug, Clone)]
pub struct NormalCone {
    pub facet: Facet,
    pub chambers: Vec<GroupElement>,
    /// Generators of the dual of the local cone at the vertex.
    pub cone: RationalCone,
}

/// The normal fan of `bp`, one cone per vertex facet. For every vertex
/// facet `I` this checks that the dual of the local cone at `b(I)` is the
/// convex union of the chambers of `κ⁻¹(I)`: the chambers lie in the dual,
/// the dual's generators lie in the cone over the chambers, and the
/// chambers contained in the dual are exactly the fiber. Elements outside
/// the ideal contribute no chamber.
pub fn normal_fan(
    sc: &SubwordComplex<'_>,
    bp: &BrickPolyhedron,
    kappa: &KappaMap,
) -> Result<Vec<NormalCone>> {
    let sys = sc.system();
    let fibers = kappa.fibers();
    let mut out = Vec::new();
    for facet in bp.vertex_facets() {
        let chambers = fibers.get(facet).cloned().unwrap_or_default();
        let dual = bp.local_cone_at(facet)?.dual()?;
        let fail = |what: &str| {
            Err(Error::InvariantViolation(format!(
                "normal cone of the brick vector of {facet}: {what}"
            )))
        };
        if chambers.is_empty() {
            return fail("empty κ-fiber");
        }
        let mut glued = Vec::new();
        for z in &chambers {
            let c = chamber_cone(sys, z);
            if !dual.contains_cone(&c)? {
                return fail("a fiber chamber leaves the normal cone");
            }
            glued.extend(c.generators().iter().cloned());
        }
        if !RationalCone::new(sys.rank(), glued)?.contains_cone(&dual)? {
            return fail("the fiber chambers do not cover the normal cone");
        }
        let roots = bp.root_configuration(facet)?;
        let inside: Vec<&GroupElement> = sys
            .elements()
            .iter()
            .filter(|z| roots_in_chamber(sys, z, roots))
            .collect();
        if inside.len() != chambers.len() || inside.iter().any(|z| !chambers.contains(z)) {
            return fail("chambers inside the normal cone differ from the fiber");
        }
        out.push(NormalCone {
            facet: facet.clone(),
            chambers,
            cone: dual,
        });
    }
    let covered: usize = out.iter().map(|c| c.chambers.len()).sum();
    if covered != kappa.ideal.members.len() {
        return Err(Error::InvariantViolation(
            "normal cones do not use exactly the chambers of the ideal".into(),
        ));
    }
    Ok(out)
}
