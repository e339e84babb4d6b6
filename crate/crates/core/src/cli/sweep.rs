//! The verification sweep: enumerate words, targets and functionals, and run
//! the named structural checks on every instance.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;
use std::path::PathBuf;

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::brick::{
    check_iota_brick_relation, containment_check, f_antigreedy, is_admissible, kappa, normal_fan, roots_pos,
    satisfies_sign_conditions, sc_f_facets, BrickPolyhedron, LinearFunctional,
};
use crate::bruhat::bruhat_leq;
use crate::coxeter::{abs_root, format_word, negate, CoxeterSystem, GroupElement, Root};
use crate::geometry::rational::{int_vec, neg, QVector};
use crate::geometry::RationalCone;
use crate::subword::{demazure_product, Facet, SubwordComplex};
use crate::{Error, Result};

use super::dyer::{run_dyer, DyerReport};

/// The named checks, in report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    ConeEquality,
    Nonflippable,
    Flips,
    WeightLemmas,
    AntigreedyUniqueness,
    ConnectedComponents,
    BrickVrepHrep,
    VertexPointed,
    BrickFlipDifference,
    Faces,
    EdgesAreFlips,
    NormalFan,
    Containment,
    IotaBrick,
    Dyer,
}

impl Check {
    pub const ALL: [Check; 15] = [
        Check::ConeEquality,
        Check::Nonflippable,
        Check::Flips,
        Check::WeightLemmas,
        Check::AntigreedyUniqueness,
        Check::ConnectedComponents,
        Check::BrickVrepHrep,
        Check::VertexPointed,
        Check::BrickFlipDifference,
        Check::Faces,
        Check::EdgesAreFlips,
        Check::NormalFan,
        Check::Containment,
        Check::IotaBrick,
        Check::Dyer,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::ConeEquality => "cone_equality",
            Check::Nonflippable => "nonflippable",
            Check::Flips => "flips",
            Check::WeightLemmas => "weight_lemmas",
            Check::AntigreedyUniqueness => "antigreedy_uniqueness",
            Check::ConnectedComponents => "connected_components",
            Check::BrickVrepHrep => "brick_vrep_hrep",
            Check::VertexPointed => "vertex_pointed",
            Check::BrickFlipDifference => "brick_flip_difference",
            Check::Faces => "faces",
            Check::EdgesAreFlips => "edges_are_flips",
            Check::NormalFan => "normal_fan",
            Check::Containment => "containment",
            Check::IotaBrick => "iota_brick",
            Check::Dyer => "dyer",
        }
    }

    pub fn from_name(name: &str) -> Result<Check> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == name.trim())
            .ok_or_else(|| {
                let known: Vec<&str> = Check::ALL.iter().map(|c| c.name()).collect();
                Error::Parse(format!(
                    "unknown check {name:?}; known checks: {}",
                    known.join(", ")
                ))
            })
    }

    fn needs_brick(self) -> bool {
        matches!(
            self,
            Check::BrickVrepHrep
                | Check::VertexPointed
                | Check::BrickFlipDifference
                | Check::Faces
                | Check::EdgesAreFlips
                | Check::NormalFan
                | Check::Containment
                | Check::IotaBrick
        )
    }

    fn needs_functionals(self) -> bool {
        matches!(
            self,
            Check::AntigreedyUniqueness | Check::ConnectedComponents | Check::Faces
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Targets {
    All,
    List(Vec<String>),
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    /// Each entry is a preset name, an inline JSON object or a file path.
    pub systems: Vec<String>,
    pub max_word_length: usize,
    pub targets: Targets,
    pub checks: Vec<Check>,
    pub seed: u64,
    /// Random admissible functionals per instance, on top of the structured
    /// ones.
    pub functionals: usize,
    pub output_path: Option<PathBuf>,
}

impl SweepConfig {
    pub fn new(systems: Vec<String>, max_word_length: usize) -> Self {
        SweepConfig {
            systems,
            max_word_length,
            targets: Targets::All,
            checks: Check::ALL.to_vec(),
            seed: 0,
            functionals: 50,
            output_path: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_word_length < 1 {
            return Err(Error::PreconditionFailed(
                "max word length must be at least 1".into(),
            ));
        }
        if self.systems.is_empty() {
            return Err(Error::PreconditionFailed("no Coxeter system given".into()));
        }
        if self.checks.is_empty() {
            return Err(Error::PreconditionFailed("no checks selected".into()));
        }
        Ok(())
    }

    fn enabled(&self, c: Check) -> bool {
        self.checks.contains(&c)
    }
}

/// Pass/fail counts of one check; keeps the first counterexample.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Tally {
    pub checked: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl Tally {
    pub fn pass(&mut self) {
        self.checked += 1;
    }

    pub fn fail(&mut self, message: String) {
        self.checked += 1;
        self.failures += 1;
        if self.first_failure.is_none() {
            self.first_failure = Some(message);
        }
    }

    pub fn merge(&mut self, other: Tally) {
        self.checked += other.checked;
        self.failures += other.failures;
        if self.first_failure.is_none() {
            self.first_failure = other.first_failure;
        }
    }

    fn record(&mut self, label: &str, outcome: Result<Option<String>>) {
        match outcome {
            Ok(None) => self.pass(),
            Ok(Some(msg)) => self.fail(format!("{label}: {msg}")),
            Err(e) => self.fail(format!("{label}: {e}")),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SweepReport {
    pub config: SweepConfig,
    /// Instances `(Q, w)` per system, in the order of `config.systems`.
    pub instances: Vec<(String, usize)>,
    pub checks: Vec<(Check, Tally)>,
    pub dyer: Vec<(String, DyerReport)>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|(_, t)| t.failures == 0)
    }

    pub fn tally(&self, check: Check) -> Option<&Tally> {
        self.checks.iter().find(|(c, _)| *c == check).map(|(_, t)| t)
    }

    pub fn to_json(&self) -> Value {
        let targets = match &self.config.targets {
            Targets::All => json!("all"),
            Targets::List(l) => json!(l),
        };
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|(c, t)| {
                json!({
                    "name": c.name(),
                    "checked": t.checked,
                    "failures": t.failures,
                    "status": if t.failures == 0 { "pass" } else { "fail" },
                    "counterexample": t.first_failure,
                })
            })
            .collect();
        let dyer: Vec<Value> = self
            .dyer
            .iter()
            .map(|(name, d)| {
                let items: Vec<Value> = d
                    .items
                    .iter()
                    .map(|(item, t)| {
                        json!({
                            "name": item,
                            "checked": t.checked,
                            "failures": t.failures,
                            "counterexample": t.first_failure,
                        })
                    })
                    .collect();
                json!({
                    "system": name,
                    "simple_triples": d.simple_triples,
                    "reflection_triples": d.reflection_triples,
                    "items": items,
                })
            })
            .collect();
        let instances: Vec<Value> = self
            .instances
            .iter()
            .map(|(s, n)| json!({ "system": s, "instances": n }))
            .collect();
        json!({
            "config": {
                "systems": self.config.systems,
                "max_word_length": self.config.max_word_length,
                "targets": targets,
                "checks": self.config.checks.iter().map(|c| c.name()).collect::<Vec<_>>(),
                "seed": self.config.seed,
                "functionals": self.config.functionals,
            },
            "instances": instances,
            "checks": checks,
            "dyer": dyer,
            "passed": self.passed(),
        })
    }

    /// Human-readable table, one row per check.
    pub fn table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{:<24} {:>10} {:>9}  status", "check", "checked", "failures");
        for (c, t) in &self.checks {
            let status = if t.failures == 0 { "PASS" } else { "FAIL" };
            let _ = writeln!(
                s,
                "{:<24} {:>10} {:>9}  {status}",
                c.name(),
                t.checked,
                t.failures
            );
            if let Some(msg) = &t.first_failure {
                let _ = writeln!(s, "    counterexample: {msg}");
            }
        }
        for (name, d) in &self.dyer {
            let _ = writeln!(
                s,
                "dyer {name}: {} (x,y,s) and {} (x,y,β) triples",
                d.simple_triples, d.reflection_triples
            );
        }
        s
    }
}

/// All words of length `0..=max_len`, by length and then lexicographically.
pub fn all_words(rank: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<usize>| {
                (0..rank).map(move |s| {
                    let mut v = w.clone();
                    v.push(s);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

pub fn run_sweep(
    config: &SweepConfig,
    resolve: impl Fn(&str) -> Result<CoxeterSystem>,
) -> Result<SweepReport> {
    config.validate()?;
    let mut checks: Vec<(Check, Tally)> = config.checks.iter().map(|&c| (c, Tally::default())).collect();
    checks.sort_by_key(|(c, _)| *c);
    checks.dedup_by_key(|(c, _)| *c);
    let mut instances = Vec::new();
    let mut dyer = Vec::new();
    for name in &config.systems {
        let sys = resolve(name)?;
        let targets = match &config.targets {
            Targets::All => None,
            Targets::List(l) => Some(
                l.iter()
                    .map(|t| sys.parse_element(t))
                    .collect::<Result<Vec<_>>>()?,
            ),
        };
        let words = all_words(sys.rank(), config.max_word_length);
        let results: Vec<WordResult> = words
            .par_iter()
            .map(|word| run_word(config, &sys, name, word, targets.as_deref()))
            .collect();
        let mut count = 0;
        for r in results {
            count += r.instances;
            for (c, t) in r.tallies {
                if let Some(slot) = slot(&mut checks, c) {
                    slot.merge(t);
                }
            }
        }
        instances.push((name.clone(), count));
        if config.enabled(Check::Dyer) {
            let report = run_dyer(&sys)?;
            let total = slot(&mut checks, Check::Dyer).expect("enabled");
            for (item, t) in &report.items {
                let mut t = t.clone();
                t.first_failure = t.first_failure.map(|m| format!("{name} {item}: {m}"));
                total.merge(t);
            }
            dyer.push((name.clone(), report));
        }
    }
    Ok(SweepReport {
        config: config.clone(),
        instances,
        checks,
        dyer,
    })
}

struct WordResult {
    instances: usize,
    tallies: Vec<(Check, Tally)>,
}

/// Data shared by all targets of one word.
struct WordRun<'a> {
    sys: &'a CoxeterSystem,
    system_name: &'a str,
    config: &'a SweepConfig,
    complexes: Vec<SubwordComplex<'a>>,
    index: HashMap<GroupElement, usize>,
    bricks: Vec<Option<Result<BrickPolyhedron>>>,
}

fn run_word(
    config: &SweepConfig,
    sys: &CoxeterSystem,
    system_name: &str,
    word: &[usize],
    targets: Option<&[GroupElement]>,
) -> WordResult {
    let mut checks: Vec<Check> = config
        .checks
        .iter()
        .copied()
        .filter(|&c| c != Check::Dyer)
        .collect();
    checks.sort();
    checks.dedup();
    let mut tallies: Vec<(Check, Tally)> = checks.iter().map(|&c| (c, Tally::default())).collect();
    let dem = demazure_product(sys, word);
    let below: Vec<GroupElement> = sys
        .elements()
        .iter()
        .filter(|z| bruhat_leq(sys, z, &dem))
        .cloned()
        .collect();
    let complexes: Vec<SubwordComplex<'_>> = below
        .iter()
        .map(|z| SubwordComplex::new(sys, word.to_vec(), z.clone()).expect("letters are in range"))
        .collect();
    let index: HashMap<GroupElement, usize> =
        below.iter().cloned().enumerate().map(|(i, z)| (z, i)).collect();
    let selected: Vec<usize> = match targets {
        None => (0..below.len()).collect(),
        Some(list) => {
            let mut v: Vec<usize> = list.iter().filter_map(|t| index.get(t).copied()).collect();
            v.sort_unstable();
            v.dedup();
            v
        }
    };
    let need_brick = checks.iter().any(|c| c.needs_brick());
    let mut bricks: Vec<Option<Result<BrickPolyhedron>>> = (0..below.len()).map(|_| None).collect();
    if need_brick {
        let mut wanted: Vec<usize> = selected.clone();
        if checks.contains(&Check::Containment) || checks.contains(&Check::IotaBrick) {
            wanted = (0..below.len()).collect();
        }
        for i in wanted {
            bricks[i] = Some(BrickPolyhedron::new(&complexes[i]));
        }
    }
    let run = WordRun {
        sys,
        system_name,
        config,
        complexes,
        index,
        bricks,
    };
    for &i in &selected {
        run.check_instance(i, &mut tallies);
    }
    WordResult {
        instances: selected.len(),
        tallies,
    }
}

fn slot(tallies: &mut [(Check, Tally)], c: Check) -> Option<&mut Tally> {
    tallies.iter_mut().find(|(d, _)| *d == c).map(|(_, t)| t)
}

impl<'a> WordRun<'a> {
    fn label(&self, sc: &SubwordComplex<'_>) -> String {
        let q = if sc.word().is_empty() {
            "e".to_string()
        } else {
            format_word(sc.word(), self.sys.rank())
        };
        format!(
            "{} Q={q} w={}",
            self.system_name,
            self.sys.format_element(sc.target())
        )
    }

    fn brick(&self, i: usize) -> Option<&Result<BrickPolyhedron>> {
        self.bricks[i].as_ref()
    }

    fn check_instance(&self, i: usize, tallies: &mut [(Check, Tally)]) {
        let sc = &self.complexes[i];
        let label = self.label(sc);
        let wants_functionals = tallies.iter().any(|(c, _)| c.needs_functionals());

        if let Some(t) = slot(tallies, Check::ConeEquality) {
            t.record(&label, cone_equality(sc));
        }
        if let Some(t) = slot(tallies, Check::Nonflippable) {
            t.record(&label, nonflippable(sc));
        }
        if let Some(t) = slot(tallies, Check::Flips) {
            t.record(&label, flips(sc));
        }
        if let Some(t) = slot(tallies, Check::WeightLemmas) {
            t.record(&label, weight_lemmas(sc));
        }

        let bp = self.brick(i).map(|r| r.as_ref().map_err(Clone::clone));
        if let Some(t) = slot(tallies, Check::BrickVrepHrep) {
            let outcome = match &bp {
                Some(Ok(bp)) => vrep_hrep(sc, bp),
                Some(Err(e)) => Err(e.clone()),
                None => Ok(None),
            };
            t.record(&label, outcome);
        }
        let bp = match bp {
            Some(Ok(bp)) => Some(bp),
            _ => None,
        };
        if let (Some(t), Some(bp)) = (slot(tallies, Check::VertexPointed), bp) {
            t.record(&label, bp.check_vertices());
        }
        if let (Some(t), Some(bp)) = (slot(tallies, Check::BrickFlipDifference), bp) {
            t.record(&label, bp.check_flip_differences(sc));
        }
        if let (Some(t), Some(bp)) = (slot(tallies, Check::EdgesAreFlips), bp) {
            t.record(&label, edges_are_flips(bp));
        }
        if let (Some(t), Some(bp)) = (slot(tallies, Check::NormalFan), bp) {
            t.record(&label, check_normal_fan(sc, bp));
        }
        if let (Some(t), Some(bp)) = (slot(tallies, Check::Containment), bp) {
            for (ws, upper, upper_bp) in self.covers(sc, true) {
                let label = format!("{label} ws={}", self.sys.format_element(&ws));
                let outcome = upper_bp.and_then(|ubp| {
                    containment_check(sc, bp, upper, ubp)
                        .map(|ok| (!ok).then(|| "B(Q,ws) is not inside B(Q,w)".to_string()))
                });
                t.record(&label, outcome);
            }
        }
        if let (Some(t), Some(bp)) = (slot(tallies, Check::IotaBrick), bp) {
            for (u, upper, upper_bp) in self.covers(sc, false) {
                let label = format!("{label} u={}", self.sys.format_element(&u));
                t.record(
                    &label,
                    upper_bp.and_then(|ubp| check_iota_brick_relation(sc, bp, upper, ubp)),
                );
            }
        }

        if !wants_functionals {
            return;
        }
        let functionals = match functionals_for(sc, self.config.seed, self.config.functionals, &label) {
            Ok(f) => f,
            Err(e) => {
                for c in [
                    Check::AntigreedyUniqueness,
                    Check::ConnectedComponents,
                    Check::Faces,
                ] {
                    if let Some(t) = slot(tallies, c) {
                        t.fail(format!("{label}: {e}"));
                    }
                }
                return;
            }
        };
        if let Some(t) = slot(tallies, Check::AntigreedyUniqueness) {
            t.record(&label, greedy_special_cases(sc));
        }
        let mut reduced: HashMap<Vec<usize>, ReducedData<'_>> = HashMap::new();
        for f in &functionals.admissible {
            let flabel = format!("{label} f={}", format_functional(f));
            if let Some(t) = slot(tallies, Check::AntigreedyUniqueness) {
                t.record(&flabel, uniqueness(sc, f));
            }
            if let Some(t) = slot(tallies, Check::ConnectedComponents) {
                t.record(&flabel, components(sc, f, &mut reduced));
            }
            if let (Some(t), Some(bp)) = (slot(tallies, Check::Faces), bp) {
                t.record(&flabel, faces(sc, bp, f, &mut reduced));
            }
        }
        if let Some(t) = slot(tallies, Check::ConnectedComponents) {
            for f in &functionals.inadmissible {
                let flabel = format!("{label} f={}", format_functional(f));
                let outcome = sc_f_facets(sc, f).map(|facets| {
                    (!facets.is_empty())
                        .then(|| "SC_f is non-empty for an inadmissible functional".to_string())
                });
                t.record(&flabel, outcome);
            }
        }
    }

    /// Complexes `SC(Q, u)` for the covers `u` of `w` below `Dem(Q)`: right
    /// simple covers `ws` when `simple`, else all Bruhat covers `s_β w`.
    fn covers(
        &self,
        sc: &SubwordComplex<'_>,
        simple: bool,
    ) -> Vec<(GroupElement, &SubwordComplex<'a>, Result<&BrickPolyhedron>)> {
        let sys = self.sys;
        let w = sc.target();
        let candidates: Vec<GroupElement> = if simple {
            (0..sys.rank()).map(|s| sys.mul_simple_right(w, s)).collect()
        } else {
            (0..sys.positive_roots().len())
                .map(|b| sys.mul(sys.reflection(b), w))
                .collect()
        };
        candidates
            .into_iter()
            .filter(|u| u.length() == w.length() + 1)
            .filter_map(|u| {
                let j = *self.index.get(&u)?;
                let bp = match self.brick(j) {
                    Some(Ok(bp)) => Ok(bp),
                    Some(Err(e)) => Err(e.clone()),
                    None => Err(Error::InvariantViolation("brick polyhedron not built".into())),
                };
                Some((u, &self.complexes[j], bp))
            })
            .collect()
    }
}

pub fn format_functional(f: &LinearFunctional) -> String {
    let parts: Vec<String> = f.coefficients().iter().map(|c| c.to_string()).collect();
    format!("({})", parts.join(","))
}

fn cone_of(n: usize, roots: &[Root]) -> Result<RationalCone> {
    RationalCone::from_integer(n, roots)
}

/// `∩_I cone(Roots(I)) = cone(E+(w, Dem(Q)))`.
fn cone_equality(sc: &SubwordComplex<'_>) -> Result<Option<String>> {
    let n = sc.system().rank();
    let cones = sc
        .facets()?
        .iter()
        .map(|f| cone_of(n, &sc.root_configuration(f)))
        .collect::<Result<Vec<_>>>()?;
    let meet = RationalCone::intersect(n, &cones)?;
    let labels = sc.upper_labels()?;
    if meet.equals(&cone_of(n, &labels)?)? {
        Ok(None)
    } else {
        Ok(Some(format!(
            "intersection of root cones differs from cone{labels:?}"
        )))
    }
}

fn nonflippable(sc: &SubwordComplex<'_>) -> Result<Option<String>> {
    let found = sc.nonflippable_roots()?;
    let labels = sc.upper_labels()?;
    Ok((found != labels).then(|| format!("non-flippable roots {found:?} but E+ = {labels:?}")))
}

/// Complement roots biject onto `Inv(w)`; flippability, flip partners,
/// root updates and involutivity of flips; sphericity.
fn flips(sc: &SubwordComplex<'_>) -> Result<Option<String>> {
    let sys = sc.system();
    let mut inv = sys.inversion_set(sc.target());
    inv.sort();
    let mut all_flippable = true;
    for facet in sc.facets()? {
        let roots = sc.root_function_all(facet);
        let mut comp: Vec<Root> = sc.complement(facet).iter().map(|&k| roots[k].clone()).collect();
        comp.sort();
        if comp != inv {
            return Ok(Some(format!("complement roots of {facet} are not Inv(w)")));
        }
        for &i in facet.positions() {
            let expect = inv.binary_search(&abs_root(&roots[i])).is_ok();
            if sc.is_flippable(facet, i)? != expect {
                return Ok(Some(format!("flippability of {} in {facet}", i + 1)));
            }
            if !expect {
                all_flippable = false;
                continue;
            }
            let flip = sc.flip(facet, i)?;
            let j = flip.added;
            let partner = if i < j {
                roots[i].clone()
            } else {
                negate(&roots[i])
            };
            if roots[j] != partner || !sc.is_facet(flip.facet.positions())? {
                return Ok(Some(format!("flip partner of {} in {facet}", i + 1)));
            }
            if sc.roots_after_flip(&roots, &flip)? != sc.root_function_all(&flip.facet) {
                return Ok(Some(format!(
                    "root update across the flip of {} in {facet}",
                    i + 1
                )));
            }
            if &sc.flip(&flip.facet, j)?.facet != facet {
                return Ok(Some(format!(
                    "flipping {} back does not return to {facet}",
                    j + 1
                )));
            }
        }
    }
    Ok((all_flippable != sc.is_spherical()).then(|| "sphericity disagrees with flippability".into()))
}

fn weight_lemmas(sc: &SubwordComplex<'_>) -> Result<Option<String>> {
    let sys = sc.system();
    let q = sc.word();
    for facet in sc.facets()? {
        let roots = sc.root_function_all(facet);
        let weights = sc.weight_function_all(facet);
        for k in 0..q.len().saturating_sub(1) {
            if q[k] != q[k + 1] {
                continue;
            }
            let expect = if facet.contains(k) {
                weights[k].clone()
            } else {
                crate::geometry::rational::sub(&weights[k], &int_vec(&roots[k]))
            };
            if weights[k + 1] != expect {
                return Ok(Some(format!("repeated letter at {} in {facet}", k + 1)));
            }
        }
        for j in sc.complement(facet) {
            for k in 0..q.len() {
                let p = sys.inner_rational(&roots[j], &weights[k]);
                let ok = if j >= k {
                    !p.is_negative()
                } else {
                    !p.is_positive()
                };
                if !ok {
                    return Ok(Some(format!(
                        "sign of <r({},{}), w(·,{})> in {facet}",
                        facet,
                        j + 1,
                        k + 1
                    )));
                }
            }
        }
        for i in sc.flippable_positions(facet) {
            let flip = sc.flip(facet, i)?;
            let s = sys.reflection_of_root(&abs_root(&flip.root))?;
            let after = sc.weight_function_all(&flip.facet);
            let (lo, hi) = (i.min(flip.added), i.max(flip.added));
            for k in 0..q.len() {
                let expect = if k > lo && k <= hi {
                    s.apply_rational(&weights[k])
                } else {
                    weights[k].clone()
                };
                if after[k] != expect {
                    return Ok(Some(format!(
                        "weight update across the flip of {} in {facet}",
                        i + 1
                    )));
                }
            }
        }
    }
    Ok(None)
}

fn greedy_special_cases(sc: &SubwordComplex<'_>) -> Result<Option<String>> {
    let sys = sc.system();
    let ones = LinearFunctional::from_integers(&vec![1; sys.rank()]);
    if f_antigreedy(sc, &ones)?.0 != sc.greedy_facet()? {
        return Ok(Some("positive on Δ does not give the greedy facet".into()));
    }
    let chamber = LinearFunctional::chamber(sys, sc.target());
    if f_antigreedy(sc, &chamber)?.0 != sc.antigreedy_facet()? {
        return Ok(Some("positive on w(Δ) does not give the antigreedy facet".into()));
    }
    Ok(None)
}

/// The facets satisfying the sign conditions are exactly `{I_f}`, and every
/// trace step keeps `Q_{[k]∖I_k}` a reduced word for `w_k`.
fn uniqueness(sc: &SubwordComplex<'_>, f: &LinearFunctional) -> Result<Option<String>> {
    let sys = sc.system();
    let labels = sc.upper_labels()?;
    let (facet, trace) = f_antigreedy(sc, f)?;
    let found: Vec<&Facet> = sc
        .facets()?
        .iter()
        .filter(|c| satisfies_sign_conditions(sc, f, c, &labels))
        .collect();
    if found != [&facet] {
        let names: Vec<String> = found.iter().map(|c| c.to_string()).collect();
        return Ok(Some(format!(
            "I_f = {facet} but the sign conditions hold for [{}]",
            names.join(", ")
        )));
    }
    for step in &trace.steps {
        let letters: Vec<usize> = (0..=step.position)
            .filter(|&p| !step.facet.contains(p))
            .map(|p| sc.word()[p])
            .collect();
        if !sys.is_reduced(&letters)? || sys.element_from_word(&letters)? != step.prefix {
            return Ok(Some(format!(
                "trace step {} breaks the prefix invariant",
                step.position + 1
            )));
        }
    }
    Ok(None)
}

/// The reduced complex `SC(Q_{[m]∖P}, w)` for a set `P` of positions, with
/// its brick polyhedron when one was needed.
struct ReducedData<'a> {
    complex: SubwordComplex<'a>,
    brick: Option<Result<BrickPolyhedron>>,
}

fn reduced_entry<'a, 'm>(
    sc: &SubwordComplex<'a>,
    cache: &'m mut HashMap<Vec<usize>, ReducedData<'a>>,
    removed: &[usize],
    with_brick: bool,
) -> Result<&'m ReducedData<'a>> {
    if !cache.contains_key(removed) {
        let letters: Vec<usize> = (0..sc.len())
            .filter(|p| !removed.contains(p))
            .map(|p| sc.word()[p])
            .collect();
        let complex = SubwordComplex::new(sc.system(), letters, sc.target().clone())?;
        cache.insert(removed.to_vec(), ReducedData { complex, brick: None });
    }
    let entry = cache.get_mut(removed).expect("inserted");
    if with_brick && entry.brick.is_none() {
        entry.brick = Some(BrickPolyhedron::new(&entry.complex));
    }
    Ok(entry)
}

fn reindex(facet: &Facet, removed: &[usize]) -> Facet {
    Facet::new(
        facet
            .positions()
            .iter()
            .filter(|p| !removed.contains(p))
            .map(|&p| p - removed.iter().filter(|&&r| r < p).count())
            .collect(),
    )
}

/// `SC_f` is non-empty, closed under f-preserving flips and connected by
/// them, has a common `RootsPos`, and deleting those positions is a
/// bijection onto the facets of the reduced complex.
fn components<'a>(
    sc: &SubwordComplex<'a>,
    f: &LinearFunctional,
    cache: &mut HashMap<Vec<usize>, ReducedData<'a>>,
) -> Result<Option<String>> {
    if !is_admissible(sc, f)? {
        return Err(Error::PreconditionFailed("functional is not admissible".into()));
    }
    let scf = sc_f_facets(sc, f)?;
    let Some(first) = scf.first() else {
        return Ok(Some("SC_f is empty".into()));
    };
    let mut seen = vec![false; scf.len()];
    seen[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(a) = queue.pop_front() {
        let facet = &scf[a];
        let roots = sc.root_function_all(facet);
        for i in sc.flippable_positions(facet) {
            if !f.eval(&roots[i]).is_zero() {
                continue;
            }
            let next = sc.flip(facet, i)?.facet;
            let Ok(b) = scf.binary_search(&next) else {
                return Ok(Some(format!("f-preserving flip leaves SC_f: {facet} to {next}")));
            };
            if !seen[b] {
                seen[b] = true;
                queue.push_back(b);
            }
        }
    }
    if let Some(b) = seen.iter().position(|s| !s) {
        return Ok(Some(format!(
            "{} is not reachable from {first} by f-preserving flips",
            scf[b]
        )));
    }
    let p = roots_pos(sc, f, first);
    if let Some(other) = scf.iter().find(|c| roots_pos(sc, f, c) != p) {
        return Ok(Some(format!("RootsPos differs between {first} and {other}")));
    }
    let reduced = reduced_entry(sc, cache, &p, false)?;
    let mut image: Vec<Facet> = scf.iter().map(|c| reindex(c, &p)).collect();
    image.sort();
    image.dedup();
    if image.len() != scf.len() || image.as_slice() != reduced.complex.facets()? {
        return Ok(Some(
            "deleting RootsPos is not a bijection onto the reduced complex".into(),
        ));
    }
    Ok(None)
}

/// `B_f` carries exactly the brick vectors of `SC_f`, and shares its local
/// structure with the brick polyhedron of the reduced complex: same local
/// cones, and polytopal exactly when the reduced complex is spherical.
fn faces<'a>(
    sc: &SubwordComplex<'a>,
    bp: &BrickPolyhedron,
    f: &LinearFunctional,
    cache: &mut HashMap<Vec<usize>, ReducedData<'a>>,
) -> Result<Option<String>> {
    let scf = sc_f_facets(sc, f)?;
    match bp.face_facets(f)? {
        None => return Ok(Some("f is unbounded below on the brick polyhedron".into())),
        Some(on_face) if on_face != scf => {
            return Ok(Some("facets on B_f differ from SC_f".into()));
        }
        Some(_) => {}
    }
    let Some(first) = scf.first() else {
        return Ok(Some("SC_f is empty".into()));
    };
    let p = roots_pos(sc, f, first);
    let reduced = reduced_entry(sc, cache, &p, true)?;
    let rbp = match reduced.brick.as_ref().expect("built") {
        Ok(b) => b,
        Err(e) => return Err(e.clone()),
    };
    let bounded_face = bp.recession_rays().iter().all(|r| !f.eval(r).is_zero());
    if bounded_face != reduced.complex.is_spherical() {
        return Ok(Some(
            "B_f polytopal disagrees with sphericity of the reduced complex".into(),
        ));
    }
    let n = sc.system().rank();
    let coeffs: QVector = f.coefficients().to_vec();
    let hyperplane = RationalCone::from_halfspaces(n, &[coeffs.clone(), neg(&coeffs)])?;
    for facet in &scf {
        let local = bp.vrep().local_cone(bp.brick_vector(facet)?)?;
        let in_face = RationalCone::intersect(n, &[local, hyperplane.clone()])?;
        let image = reindex(facet, &p);
        let other = rbp.vrep().local_cone(rbp.brick_vector(&image)?)?;
        if !in_face.equals(&other)? {
            return Ok(Some(format!(
                "local cone of B_f at {facet} differs from the reduced one at {image}"
            )));
        }
    }
    Ok(None)
}

fn vrep_hrep(sc: &SubwordComplex<'_>, bp: &BrickPolyhedron) -> Result<Option<String>> {
    if !bp.representations_agree()? {
        return Ok(Some("V- and H-descriptions differ".into()));
    }
    if bp.is_polytope() != sc.is_spherical() {
        return Ok(Some("boundedness disagrees with sphericity".into()));
    }
    Ok(None)
}

fn edges_are_flips(bp: &BrickPolyhedron) -> Result<Option<String>> {
    for edge in bp.edges()? {
        for (a, i) in edge.facets.iter().enumerate() {
            for j in &edge.facets[a + 1..] {
                let diff = i.positions().iter().filter(|p| !j.contains(**p)).count();
                if diff != 1 {
                    return Ok(Some(format!("{i} and {j} share an edge but are not adjacent")));
                }
            }
        }
    }
    Ok(None)
}

fn check_normal_fan(sc: &SubwordComplex<'_>, bp: &BrickPolyhedron) -> Result<Option<String>> {
    let map = kappa(sc)?;
    normal_fan(sc, bp, &map)?;
    Ok(map.check_fiber_intervals(sc.system()))
}

pub struct Functionals {
    pub admissible: Vec<LinearFunctional>,
    /// A few rejected samples, used to check that `SC_f` is empty.
    pub inadmissible: Vec<LinearFunctional>,
}

fn stream_id(label: &str) -> u64 {
    // FNV-1a; stable across platforms and toolchains
    label.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| {
        (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3)
    })
}

/// Structured functionals (zero, all ones, the chamber functional of `w`,
/// the facet covectors of `C+` and, for each ray of `C+`, the sum of the
/// facet covectors vanishing on it) followed by `count` seeded random
/// admissible ones.
pub fn functionals_for(sc: &SubwordComplex<'_>, seed: u64, count: usize, label: &str) -> Result<Functionals> {
    let sys = sc.system();
    let n = sys.rank();
    let labels = sc.upper_labels()?;
    let cplus = cone_of(n, &labels)?;
    let normals = cplus.halfspaces()?;
    let mut admissible: Vec<LinearFunctional> = Vec::new();
    let push = |list: &mut Vec<LinearFunctional>, f: LinearFunctional| {
        if !list.contains(&f) {
            list.push(f);
        }
    };
    push(&mut admissible, LinearFunctional::from_integers(&vec![0; n]));
    push(&mut admissible, LinearFunctional::from_integers(&vec![1; n]));
    push(&mut admissible, LinearFunctional::chamber(sys, sc.target()));
    for a in &normals {
        push(&mut admissible, LinearFunctional(a.clone()));
    }
    for beta in &labels {
        let b = int_vec(beta);
        let sum = normals
            .iter()
            .filter(|a| crate::geometry::rational::dot(a, &b).is_zero())
            .fold(vec![num_traits::zero(); n], |acc: QVector, a| {
                crate::geometry::rational::add(&acc, a)
            });
        push(&mut admissible, LinearFunctional(sum));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream_id(label));
    let mut inadmissible = Vec::new();
    let mut random = Vec::new();
    let mut attempts = 0;
    // Distinct samples only. The labels are positive roots, so the
    // admissible functionals form a full-dimensional cone and widening the
    // ranges keeps producing new ones.
    let phase = 64 * count.max(1);
    while random.len() < count {
        attempts += 1;
        let widen = (attempts / phase) as i64;
        let f = if attempts <= phase || normals.is_empty() {
            let r = 5 + widen;
            let v: Vec<i64> = (0..n).map(|_| rng.random_range(-r..=r)).collect();
            LinearFunctional::from_integers(&v)
        } else {
            // non-negative combination of the dual generators of C+
            let mut v: QVector = vec![num_traits::zero(); n];
            for a in &normals {
                let c: i64 = rng.random_range(0..=2 + widen);
                v = crate::geometry::rational::axpy(&v, &crate::geometry::rational::rat(c), a);
            }
            LinearFunctional(v)
        };
        if random.contains(&f) || admissible.contains(&f) || inadmissible.contains(&f) {
            continue;
        }
        if is_admissible(sc, &f)? {
            random.push(f);
        } else if inadmissible.len() < 5 {
            inadmissible.push(f);
        }
    }
    for f in random {
        push(&mut admissible, f);
    }
    Ok(Functionals {
        admissible,
        inadmissible,
    })
}
