//! Exhaustive checks of the Bruhat-cone properties over all pairs `x ≤ y`
//! of a finite Coxeter group.

use rayon::prelude::*;

use crate::bruhat::bruhat_leq;
use crate::coxeter::{CoxeterSystem, Root};
use crate::geometry::rational::int_vec;
use crate::geometry::RationalCone;
use crate::Result;

use super::sweep::Tally;

/// Names of the individual properties, in report order.
pub const DYER_ITEMS: [&str; 8] = [
    "separation",
    "extreme_rays",
    "line_containment",
    "label_membership",
    "root_intersection",
    "cover_extension",
    "left_descent_transport",
    "right_descent_inclusion",
];

#[derive(Debug, Clone, Default)]
pub struct DyerReport {
    pub items: Vec<(&'static str, Tally)>,
    /// `(x, y, s)` triples examined, over all pairs `x ≤ y`.
    pub simple_triples: usize,
    /// `(x, y, β)` triples examined, over all pairs `x ≤ y`.
    pub reflection_triples: usize,
}

impl DyerReport {
    pub fn triples(&self) -> usize {
        self.simple_triples + self.reflection_triples
    }

    pub fn failures(&self) -> usize {
        self.items.iter().map(|(_, t)| t.failures).sum()
    }
}

/// Precomputed group data indexed by [`CoxeterSystem::element_index`].
struct Table<'a> {
    sys: &'a CoxeterSystem,
    len: Vec<usize>,
    leq: Vec<Vec<bool>>,
    /// `reflect[b][x]` = index of `s_β x` for the `b`-th positive root.
    reflect: Vec<Vec<usize>>,
    /// Index of `s x` and `x s`.
    left: Vec<Vec<usize>>,
    right: Vec<Vec<usize>>,
}

impl<'a> Table<'a> {
    fn new(sys: &'a CoxeterSystem) -> Self {
        let els = sys.elements();
        let len = els.iter().map(|w| w.length()).collect();
        let leq = els
            .par_iter()
            .map(|x| els.iter().map(|y| bruhat_leq(sys, x, y)).collect())
            .collect();
        let reflect = (0..sys.positive_roots().len())
            .map(|b| {
                els.iter()
                    .map(|x| sys.element_index(&sys.mul(sys.reflection(b), x)))
                    .collect()
            })
            .collect();
        let left = (0..sys.rank())
            .map(|s| {
                els.iter()
                    .map(|x| sys.element_index(&sys.mul_simple_left(s, x)))
                    .collect()
            })
            .collect();
        let right = (0..sys.rank())
            .map(|s| {
                els.iter()
                    .map(|x| sys.element_index(&sys.mul_simple_right(x, s)))
                    .collect()
            })
            .collect();
        Table {
            sys,
            len,
            leq,
            reflect,
            left,
            right,
        }
    }

    fn root(&self, b: usize) -> &Root {
        &self.sys.positive_roots()[b]
    }

    /// Root indices of `E+(x,y)`.
    fn upper(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.reflect.len())
            .filter(|&b| {
                let t = self.reflect[b][x];
                self.len[t] == self.len[x] + 1 && self.leq[t][y]
            })
            .collect()
    }

    /// Root indices of `E−(x,y)`.
    fn lower(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.reflect.len())
            .filter(|&b| {
                let t = self.reflect[b][y];
                self.len[t] + 1 == self.len[y] && self.leq[x][t]
            })
            .collect()
    }

    fn cone(&self, roots: &[usize]) -> Result<RationalCone> {
        let gens: Vec<Root> = roots.iter().map(|&b| self.root(b).clone()).collect();
        RationalCone::from_integer(self.sys.rank(), &gens)
    }

    fn name(&self, i: usize) -> String {
        self.sys.format_element(&self.sys.elements()[i])
    }

    fn min(&self, a: usize, b: usize) -> usize {
        if self.leq[a][b] {
            a
        } else {
            b
        }
    }
}

/// Per-pair outcome: one tally per item plus triple counts.
#[derive(Default)]
struct PairResult {
    tallies: Vec<Tally>,
    simple: usize,
    reflections: usize,
}

impl PairResult {
    fn new() -> Self {
        PairResult {
            tallies: vec![Tally::default(); DYER_ITEMS.len()],
            ..Default::default()
        }
    }

    fn record(&mut self, item: usize, ok: Result<bool>, context: impl FnOnce() -> String) {
        let ok = match ok {
            Ok(b) => b,
            Err(e) => {
                self.tallies[item].fail(format!("{}: {e}", context()));
                return;
            }
        };
        if ok {
            self.tallies[item].pass();
        } else {
            self.tallies[item].fail(context());
        }
    }
}

fn check_pair(t: &Table<'_>, x: usize, y: usize) -> Result<PairResult> {
    let sys = t.sys;
    let n = sys.rank();
    let mut out = PairResult::new();
    let ctx = |what: &str| format!("x={} y={}: {what}", t.name(x), t.name(y));
    let up = t.upper(x, y);
    let down = t.lower(x, y);
    let cplus = t.cone(&up)?;
    let cminus = t.cone(&down)?;

    // labels are extreme rays
    for (labels, cone_name) in [(&up, "E+"), (&down, "E−")] {
        for &b in labels.iter() {
            let others: Vec<usize> = labels.iter().copied().filter(|&c| c != b).collect();
            let inside = t.cone(&others)?.contains_integer(t.root(b));
            out.record(1, inside.map(|i| !i), || {
                ctx(&format!("{cone_name} label {:?} is not extreme", t.root(b)))
            });
        }
    }

    // C+(x,y) ⊆ C+(s_β x, y) + Rβ, and dually for E−
    for &b in &up {
        let beta = int_vec(t.root(b));
        let minus: Vec<_> = beta.iter().map(|v| -v.clone()).collect();
        let bigger = t.cone(&t.upper(t.reflect[b][x], y))?.extended([beta, minus])?;
        out.record(2, bigger.contains_cone(&cplus), || {
            ctx(&format!("C+ leaves C+(s_β x, y) + Rβ for β={:?}", t.root(b)))
        });
    }
    for &b in &down {
        let beta = int_vec(t.root(b));
        let minus: Vec<_> = beta.iter().map(|v| -v.clone()).collect();
        let bigger = t.cone(&t.lower(x, t.reflect[b][y]))?.extended([beta, minus])?;
        out.record(2, bigger.contains_cone(&cminus), || {
            ctx(&format!("C− leaves C−(x, s_β y) + Rβ for β={:?}", t.root(b)))
        });
    }

    // β ∈ C+ when x < s_β x ≤ y, β ∈ C− when x ≤ s_β y < y
    for b in 0..t.reflect.len() {
        out.reflections += 1;
        let sx = t.reflect[b][x];
        if t.len[sx] > t.len[x] && t.leq[sx][y] {
            out.record(3, cplus.contains_integer(t.root(b)), || {
                ctx(&format!("{:?} missing from C+", t.root(b)))
            });
        }
        let sy = t.reflect[b][y];
        if t.len[sy] < t.len[y] && t.leq[x][sy] {
            out.record(3, cminus.contains_integer(t.root(b)), || {
                ctx(&format!("{:?} missing from C−", t.root(b)))
            });
        }
    }

    for s in 0..n {
        out.simple += 1;
        let alpha = int_vec(&sys.simple_root(s));
        // y ≺ sy: C+(x, sy) ⊆ C+(x, y) + R+α_s
        let sy = t.left[s][y];
        if t.len[sy] > t.len[y] {
            let bigger = cplus.extended([alpha.clone()])?;
            let target = t.cone(&t.upper(x, sy))?;
            out.record(5, bigger.contains_cone(&target), || {
                ctx(&format!("C+(x, s{} y) leaves C+(x,y) + R+α", s + 1))
            });
        }
        // sx ≺ x: s(C+(x,y)) ⊆ C+(sx, min{sy, y})
        let sx = t.left[s][x];
        if t.len[sx] < t.len[x] {
            let tau = t.min(sy, y);
            let target = t.cone(&t.upper(sx, tau))?;
            let g = sys.generator(s);
            let ok = up.iter().try_fold(true, |acc, &b| {
                Ok::<_, crate::Error>(acc && target.contains_integer(&g.apply(t.root(b)))?)
            });
            out.record(6, ok, || ctx(&format!("s{}(C+(x,y)) leaves C+(sx, τ)", s + 1)));
        }
        // xs ≺ x: C+(x,y) ⊆ C+(xs, min{ys, y})
        let xs = t.right[s][x];
        if t.len[xs] < t.len[x] {
            let tau = t.min(t.right[s][y], y);
            let target = t.cone(&t.upper(xs, tau))?;
            out.record(7, target.contains_cone(&cplus), || {
                ctx(&format!("C+(x,y) leaves C+(x s{}, τ)", s + 1))
            });
        }
    }
    Ok(out)
}

/// Properties of single elements `w`: the cones `C−(e,w)` and `C+(w,w∘)`
/// meet only in 0, cover Φ+, and cut out `Inv(w)` and `Inv(w w∘)`.
fn check_element(t: &Table<'_>, w: usize) -> Result<PairResult> {
    let sys = t.sys;
    let mut out = PairResult::new();
    let e = sys.element_index(sys.identity());
    let top = sys.element_index(sys.longest_element());
    let ctx = |what: &str| format!("w={}: {what}", t.name(w));
    let lower = t.cone(&t.lower(e, w))?;
    let upper = t.cone(&t.upper(w, top))?;

    let meet = RationalCone::intersect(sys.rank(), &[lower.clone(), upper.clone()])?;
    out.record(0, Ok(meet.generators().is_empty()), || {
        ctx("C−(e,w) ∩ C+(w,w∘) ≠ {0}")
    });
    for beta in sys.positive_roots() {
        let covered = Ok::<_, crate::Error>(lower.contains_integer(beta)? || upper.contains_integer(beta)?);
        out.record(0, covered, || ctx(&format!("{beta:?} lies in neither cone")));
    }

    let ww0 = sys.mul(&sys.elements()[w], sys.longest_element());
    for (cone, inv, name) in [
        (
            &lower,
            sys.inversion_mask(&sys.elements()[w]),
            "C−(e,w) ∩ Φ ≠ Inv(w)",
        ),
        (&upper, sys.inversion_mask(&ww0), "C+(w,w∘) ∩ Φ ≠ Inv(w w∘)"),
    ] {
        for (i, beta) in sys.positive_roots().iter().enumerate() {
            let neg: Root = beta.iter().map(|v| -v).collect();
            let ok = Ok::<_, crate::Error>(
                cone.contains_integer(beta)? == inv[i] && !cone.contains_integer(&neg)?,
            );
            out.record(4, ok, || ctx(name));
        }
    }
    Ok(out)
}

/// Runs every property over all pairs `x ≤ y` and all elements.
pub fn run_dyer(sys: &CoxeterSystem) -> Result<DyerReport> {
    let t = Table::new(sys);
    let count = sys.elements().len();
    let pairs: Vec<(usize, usize)> = (0..count)
        .flat_map(|x| (0..count).map(move |y| (x, y)))
        .filter(|&(x, y)| t.leq[x][y])
        .collect();
    let results: Vec<Result<PairResult>> = pairs
        .par_iter()
        .map(|&(x, y)| check_pair(&t, x, y))
        .chain((0..count).into_par_iter().map(|w| check_element(&t, w)))
        .collect();
    let mut report = DyerReport {
        items: DYER_ITEMS.iter().map(|&n| (n, Tally::default())).collect(),
        ..Default::default()
    };
    for r in results {
        let r = r?;
        report.simple_triples += r.simple;
        report.reflection_triples += r.reflections;
        for (slot, tally) in report.items.iter_mut().zip(r.tallies) {
            slot.1.merge(tally);
        }
    }
    Ok(report)
}
