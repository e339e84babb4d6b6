//! Double description: converts `{x : a_i·x ≥ 0}` into a lineality basis
//! plus extreme rays, with the combinatorial adjacency test.

use num_traits::{Signed, Zero};

use super::rational::{axpy, dot, is_zero_vec, primitive, project_out, scale, unit_vec, QVector};
use crate::{Error, Result};

const DEFAULT_MAX_DIM: usize = 6;

/// Dimension cap for double description; `BRICKFORGE_MAX_DIM` overrides it.
pub fn max_dim() -> usize {
    std::env::var("BRICKFORGE_MAX_DIM")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_DIM)
}

pub(crate) fn check_dim(dim: usize) -> Result<()> {
    let max = max_dim();
    if dim > max {
        return Err(Error::DimensionTooLarge { dim, max });
    }
    Ok(())
}

/// Minimal V-description of a polyhedral cone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeGenerators {
    /// Basis of the lineality space, in reduced echelon form.
    pub lineality: Vec<QVector>,
    /// Extreme rays modulo lineality: primitive, orthogonal to the
    /// lineality space, sorted.
    pub rays: Vec<QVector>,
}

#[derive(Clone)]
struct Ray {
    v: QVector,
    tight: Vec<u64>,
}

fn is_subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

fn intersect(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

/// Extreme rays and lineality of `{x ∈ Q^dim : a·x ≥ 0 for a in halfspaces}`.
pub fn halfspaces_to_generators(dim: usize, halfspaces: &[QVector]) -> Result<ConeGenerators> {
    check_dim(dim)?;
    for h in halfspaces {
        if h.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: h.len(),
            });
        }
    }
    let constraints: Vec<&QVector> = halfspaces.iter().filter(|h| !is_zero_vec(h)).collect();
    let words = constraints.len().div_ceil(64).max(1);

    let mut lineality: Vec<QVector> = (0..dim).map(|i| unit_vec(dim, i)).collect();
    let mut rays: Vec<Ray> = Vec::new();

    for (ci, a) in constraints.iter().enumerate() {
        let set_tight = |r: &mut Ray| r.tight[ci / 64] |= 1 << (ci % 64);

        if let Some(p) = lineality.iter().position(|l| !dot(a, l).is_zero()) {
            let mut lp = lineality.remove(p);
            let mut ap = dot(a, &lp);
            if ap.is_negative() {
                lp = lp.iter().map(|x| -x).collect();
                ap = -ap;
            }
            for l in lineality.iter_mut() {
                let c = dot(a, l) / &ap;
                if !c.is_zero() {
                    *l = axpy(l, &(-c), &lp);
                }
            }
            for r in rays.iter_mut() {
                let c = dot(a, &r.v) / &ap;
                if !c.is_zero() {
                    r.v = axpy(&r.v, &(-c), &lp);
                }
                set_tight(r);
            }
            // lp was in every earlier constraint's kernel
            let mut tight = vec![0u64; words];
            for (k, word) in tight.iter_mut().enumerate() {
                let lo = k * 64;
                let hi = ((k + 1) * 64).min(ci);
                for i in lo..hi {
                    *word |= 1 << (i % 64);
                }
            }
            rays.push(Ray { v: lp, tight });
            continue;
        }

        let values: Vec<_> = rays.iter().map(|r| dot(a, &r.v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();
        if neg.is_empty() {
            for (r, v) in rays.iter_mut().zip(&values) {
                if v.is_zero() {
                    set_tight(r);
                }
            }
            continue;
        }

        let mut next: Vec<Ray> = Vec::new();
        for &p in &pos {
            for &n in &neg {
                let common = intersect(&rays[p].tight, &rays[n].tight);
                let adjacent = (0..rays.len())
                    .filter(|&r| r != p && r != n)
                    .all(|r| !is_subset(&common, &rays[r].tight));
                if !adjacent {
                    continue;
                }
                let v = axpy(&scale(&values[p], &rays[n].v), &(-values[n].clone()), &rays[p].v);
                let mut r = Ray {
                    v: primitive(&v),
                    tight: common,
                };
                set_tight(&mut r);
                next.push(r);
            }
        }
        for (i, mut r) in rays.into_iter().enumerate() {
            if values[i].is_zero() {
                set_tight(&mut r);
                next.push(r);
            } else if values[i].is_positive() {
                next.push(r);
            }
        }
        rays = next;
    }

    let lineality = if lineality.is_empty() {
        lineality
    } else {
        super::rational::rref(&lineality).0
    };
    let mut out: Vec<QVector> = rays
        .into_iter()
        .map(|r| primitive(&project_out(&r.v, &lineality)))
        .filter(|v| !is_zero_vec(v))
        .collect();
    out.sort();
    out.dedup();
    Ok(ConeGenerators { lineality, rays: out })
}

/// Minimal H-description of `cone(generators)` in `Q^dim`: covectors `a`
/// with the cone equal to `{x : a·x ≥ 0}`. Equations appear as a pair
/// `a`, `−a`.
pub fn generators_to_halfspaces(dim: usize, generators: &[QVector]) -> Result<Vec<QVector>> {
    let dual = halfspaces_to_generators(dim, generators)?;
    let mut out = dual.rays;
    for l in &dual.lineality {
        let l = primitive(l);
        out.push(l.iter().map(|x| -x).collect());
        out.push(l);
    }
    out.sort();
    out.dedup();
    Ok(out)
}
