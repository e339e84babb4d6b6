//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test --test acceptance`. Positional arguments restrict the
//! run to the listed criterion numbers. With `BRICKFORGE_ACCEPTANCE_STRICT=1`
//! the process exits with status 1 if any criterion fails; otherwise the
//! verdicts are only printed, so that `cargo test` keeps going.

mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use brickforge::brick::BrickPolyhedron;
use brickforge::bruhat::bruhat_leq;
use brickforge::cli::dyer::run_dyer;
use brickforge::cli::resolve_system;
use brickforge::cli::run_command;
use brickforge::cli::sweep::{run_sweep, Check, SweepConfig, SweepReport, Tally};
use brickforge::coxeter::{parse_word, CoxeterSystem, GroupElement};
use brickforge::subword::{demazure_product, SubwordComplex};
use common::{bruhat_below, brute_force_facets, cartan, Mat};
use serde_json::{json, Value};

#[derive(Default)]
struct Verdict {
    lines: Vec<String>,
    failed: bool,
}

impl Verdict {
    fn note(&mut self, text: impl Into<String>) {
        self.lines.push(format!("      {}", text.into()));
    }

    fn heading(&mut self, text: &str) {
        self.lines.push(format!("  {text}"));
    }

    /// Records one item; a mismatch is printed with both sides.
    fn expect(&mut self, label: &str, got: &Value, want: &Value) {
        if got == want {
            self.lines.push(format!("    ok   {label}"));
        } else {
            self.failed = true;
            self.lines.push(format!("    FAIL {label}"));
            self.lines.push(format!("      expected {want}"));
            self.lines.push(format!("      got      {got}"));
        }
    }

    fn require(&mut self, label: &str, ok: bool, detail: impl Into<String>) {
        if ok {
            self.lines.push(format!("    ok   {label}"));
        } else {
            self.failed = true;
            self.lines.push(format!("    FAIL {label}"));
            self.note(detail);
        }
    }

    fn tally(&mut self, label: &str, t: Option<&Tally>) {
        match t {
            Some(t) => self.require(
                &format!("{label}: {} checked, {} failures", t.checked, t.failures),
                t.failures == 0 && t.checked > 0,
                t.first_failure
                    .clone()
                    .unwrap_or_else(|| "nothing was checked".into()),
            ),
            None => self.require(label, false, "check did not run"),
        }
    }
}

fn cli(args: &[&str]) -> Value {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_command(
        std::iter::once("brickforge").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    assert_eq!(code, 0, "{args:?}: {}", String::from_utf8_lossy(&err));
    serde_json::from_slice(&out).expect("JSON output")
}

/// `[num, den]` in lowest terms, as the CLI writes rationals.
fn q(num: i64, den: i64) -> Value {
    let g = gcd(num.abs(), den.abs()).max(1);
    let (n, d) = (num / g, den / g);
    if d < 0 {
        json!([-n, -d])
    } else {
        json!([n, d])
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `(1/den)·v` as a rational vector.
fn scaled(den: i64, v: &[i64]) -> Value {
    Value::Array(v.iter().map(|&x| q(x, den)).collect())
}

fn as_set(v: &Value) -> BTreeSet<String> {
    v.as_array().unwrap().iter().map(|x| x.to_string()).collect()
}

fn set_value(v: &Value) -> Value {
    json!(as_set(v).into_iter().collect::<Vec<_>>())
}

fn roots_value(roots: &[&[i64]]) -> Value {
    json!(roots)
}

// ---------------------------------------------------------------------------

fn root_system_item(
    v: &mut Verdict,
    name: &str,
    positive: &[&[i64]],
    reflections: &[&[&[i64]]],
    weights: &[(i64, &[i64])],
) {
    let out = cli(&["roots", "--system", name]);
    v.expect(
        &format!("{name} positive roots"),
        &set_value(&out["positive_roots"]),
        &set_value(&roots_value(positive)),
    );
    let sys = CoxeterSystem::from_preset(name).unwrap();
    let table: Vec<Vec<Vec<i64>>> = (0..sys.rank())
        .map(|s| {
            (0..sys.rank())
                .map(|t| sys.generator(s).apply(&sys.simple_root(t)))
                .collect()
        })
        .collect();
    v.expect(
        &format!("{name} simple reflections s_i(α_j)"),
        &json!(table),
        &json!(reflections),
    );
    for (s, (den, coords)) in weights.iter().enumerate() {
        v.expect(
            &format!("{name} ω{}", s + 1),
            &out["weights"][s],
            &scaled(*den, coords),
        );
    }
}

fn criterion_1() -> Verdict {
    let mut v = Verdict::default();

    v.heading("(a) root systems and weights");
    root_system_item(
        &mut v,
        "A2",
        &[&[1, 0], &[0, 1], &[1, 1]],
        &[&[&[-1, 0], &[1, 1]], &[&[1, 1], &[0, -1]]],
        &[(3, &[2, 1]), (3, &[1, 2])],
    );
    root_system_item(
        &mut v,
        "B2",
        &[&[1, 0], &[0, 1], &[1, 1], &[1, 2]],
        &[&[&[-1, 0], &[1, 1]], &[&[1, 2], &[0, -1]]],
        &[(1, &[1, 1]), (2, &[1, 2])],
    );
    root_system_item(
        &mut v,
        "B3",
        &[
            &[1, 0, 0],
            &[0, 1, 0],
            &[0, 0, 1],
            &[1, 1, 0],
            &[0, 1, 1],
            &[1, 1, 1],
            &[0, 1, 2],
            &[1, 1, 2],
            &[1, 2, 2],
        ],
        &[
            &[&[-1, 0, 0], &[1, 1, 0], &[0, 0, 1]],
            &[&[1, 1, 0], &[0, -1, 0], &[0, 1, 1]],
            &[&[1, 0, 0], &[0, 1, 2], &[0, 0, -1]],
        ],
        &[(1, &[1, 1, 1]), (1, &[1, 1, 0]), (2, &[1, 1, 2])],
    );
    // the defining relation s_t(ω_s) = ω_s − δ_st α_s, in weight coordinates
    let b3 = CoxeterSystem::from_preset("B3").unwrap();
    let a = cartan(&b3);
    let dual = (0..3).all(|s| {
        (0..3).all(|t| {
            let w = &b3.weights()[s];
            let image = b3.generator(t).apply_rational(w);
            let mut expected = w.clone();
            if s == t {
                expected[s] -= brickforge::geometry::rational::rat(1);
            }
            image == expected
        })
    });
    v.require(
        "B3 computed weights satisfy s_t(ω_s) = ω_s − δ_st α_s",
        dual && a[2][1] == -2,
        "duality fails",
    );
    v.note("the reference B3 values ω2 = α1+α2 and ω3 = ½(α1+α2+2α3) violate this relation,");
    v.note("e.g. s1(α1+α2) = α2; the computed values are ω2 = (1,2,2), ω3 = ½(1,2,3)");

    v.heading("(b) SC(1212, 12)");
    let out = cli(&["demazure", "--system", "A2", "--word", "1212"]);
    v.expect("Dem(1212)", &out, &json!({"demazure": "121"}));
    let out = cli(&["bruhat-cone", "--system", "A2", "--from", "12", "--to", "121"]);
    v.expect("E+(12, 121)", &out["e_plus"], &json!([[0, 1]]));
    let out = cli(&["facets", "--system", "A2", "--word", "1212", "--target", "12"]);
    let got: Vec<Value> = out["facets"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| json!([f["facet"], f["roots"]]))
        .collect();
    v.expect(
        "facets and root configurations",
        &json!(got),
        &json!([
            [[1, 2], [[1, 0], [0, 1]]],
            [[2, 3], [[1, 1], [-1, 0]]],
            [[3, 4], [[0, 1], [-1, -1]]],
        ]),
    );

    v.heading("(c) B3, Q = 123123123, w = s1");
    let out = cli(&["bruhat-cone", "--system", "B3", "--from", "1", "--to", "w0"]);
    v.expect(
        "E+(s1, w0)",
        &set_value(&out["e_plus"]),
        &set_value(&json!([[0, 1, 0], [0, 0, 1], [1, 1, 0]])),
    );
    let out = cli(&["facets", "--system", "B3", "--word", "123123123", "--target", "1"]);
    let got: Vec<Value> = out["facets"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| {
            let flippable: Vec<Value> = f["facet"]
                .as_array()
                .unwrap()
                .iter()
                .zip(f["flippable"].as_array().unwrap())
                .filter(|(_, b)| b.as_bool().unwrap())
                .map(|(p, _)| p.clone())
                .collect();
            json!([f["facet"], f["roots"], flippable])
        })
        .collect();
    v.expect(
        "facets, root configurations and flippable positions",
        &json!(got),
        &json!([
            [
                [1, 2, 3, 4, 5, 6, 8, 9],
                [
                    [1, 0, 0],
                    [0, 1, 0],
                    [0, 0, 1],
                    [1, 0, 0],
                    [0, 1, 0],
                    [0, 0, 1],
                    [1, 1, 0],
                    [0, 0, 1]
                ],
                [1, 4]
            ],
            [
                [1, 2, 3, 5, 6, 7, 8, 9],
                [
                    [1, 0, 0],
                    [0, 1, 0],
                    [0, 0, 1],
                    [1, 1, 0],
                    [0, 0, 1],
                    [-1, 0, 0],
                    [1, 1, 0],
                    [0, 0, 1]
                ],
                [1, 7]
            ],
            [
                [2, 3, 4, 5, 6, 7, 8, 9],
                [
                    [1, 1, 0],
                    [0, 0, 1],
                    [-1, 0, 0],
                    [1, 1, 0],
                    [0, 0, 1],
                    [-1, 0, 0],
                    [1, 1, 0],
                    [0, 0, 1]
                ],
                [4, 7]
            ],
        ]),
    );

    v.heading("(d) f-antigreedy facet for Q = 21122112, w = 12, f = (−2, 1)");
    let out = cli(&["bruhat-cone", "--system", "B2", "--from", "12", "--to", "w0"]);
    v.expect(
        "E+(12, w0)",
        &set_value(&out["e_plus"]),
        &set_value(&json!([[0, 1], [1, 2]])),
    );
    // (k, β, sign of f(β), leaf, I_k, w_k) as given
    let reference = json!([
        [1, [0, 1], 1, 1, [1], "e"],
        [2, [1, 0], -1, 4, [1], "1"],
        [3, [-1, 0], 1, 2, [1, 3], "1"],
        [4, [1, 1], -1, 4, [1, 3], "12"],
        [5, [-1, -1], 1, 2, [1, 3, 5], "12"],
        [6, [1, 2], 0, 1, [1, 3, 5, 6], "12"],
        [7, [-1, -1], 1, 2, [1, 3, 5, 6, 7], "12"],
        [8, [1, 2], 0, 1, [1, 3, 5, 6, 7, 8], "12"],
    ]);
    let reference_roots = json!([[0, 1], [-1, 0], [-1, -1], [1, 2], [-1, -1], [1, 2]]);
    let trace = |word: &str| {
        let out = cli(&[
            "antigreedy",
            "--system",
            "B2",
            "--word",
            word,
            "--target",
            "12",
            "--functional",
            "-2,1",
        ]);
        let steps: Vec<Value> = out["steps"]
            .as_array()
            .unwrap()
            .iter()
            .map(|s| {
                json!([
                    s["k"],
                    s["beta"],
                    s["sign"],
                    s["condition"],
                    s["facet"],
                    s["prefix"]
                ])
            })
            .collect();
        (out, json!(steps))
    };
    let (literal, literal_steps) = trace("21122112");
    v.expect("I_f", &literal["facet"], &json!([1, 3, 5, 6, 7, 8]));
    v.expect("Dem(Q)", &literal["demazure"], &json!("1212"));
    let first_six = |s: &Value| json!(s.as_array().unwrap()[..6]);
    v.expect(
        "trace steps 1-6",
        &first_six(&literal_steps),
        &first_six(&reference),
    );
    v.expect(
        "trace steps 7-8 (literal word)",
        &json!(literal_steps.as_array().unwrap()[6..]),
        &json!(reference.as_array().unwrap()[6..]),
    );
    v.expect("Roots(I_f) (literal word)", &literal["roots"], &reference_roots);
    let (swapped, swapped_steps) = trace("21122121");
    v.note("the reference steps 7-8 use letters 2 and 1, so the table belongs to Q = 21122121:");
    v.expect("reference table against Q = 21122121", &swapped_steps, &reference);
    v.expect(
        "reference Roots(I_f) against Q = 21122121",
        &swapped["roots"],
        &reference_roots,
    );

    v.heading("(e) brick vectors of Q = 11212, w = 12");
    let out = cli(&[
        "brickpoly",
        "--system",
        "A2",
        "--word",
        "11212",
        "--target",
        "12",
        "--emit",
        "vrep",
    ]);
    let got: Vec<Value> = out["brick_vectors"]
        .as_array()
        .unwrap()
        .iter()
        .map(|b| json!([b["facet"], b["vector"]]))
        .collect();
    let reference = json!([
        [[1, 2, 3], scaled(3, &[-8, -7])],
        [[1, 3, 4], scaled(3, &[-7, -7])],
        [[1, 4, 5], scaled(3, &[-6, -6])],
        [[2, 3, 4], scaled(3, &[-6, -7])],
        [[2, 4, 5], scaled(3, &[-5, -6])],
    ]);
    v.expect("reference brick vectors", &json!(got), &reference);
    v.note("the reference vectors contradict the flip rule for weights: {1,3,4} → {2,3,4}");
    v.note("changes only w(·,2) from ω1 to ω1 − α1, so b({2,3,4}) − b({1,3,4}) = α1, not α1/3;");
    v.note("the computed vectors are checked against an independent weight-basis oracle");
    let sys = CoxeterSystem::from_preset("A2").unwrap();
    let oracle: Vec<Value> = got
        .iter()
        .map(|entry| {
            let facet: Vec<usize> = entry[0]
                .as_array()
                .unwrap()
                .iter()
                .map(|p| p.as_u64().unwrap() as usize - 1)
                .collect();
            let ab = common::brick_vector_weight_coords(&cartan(&sys), &[0, 0, 1, 0, 1], &facet);
            // A⁻¹ for A2 is (1/3)[[2,1],[1,2]]
            json!([entry[0], scaled(3, &[2 * ab[0] + ab[1], ab[0] + 2 * ab[1]])])
        })
        .collect();
    v.expect(
        "brick vectors against the weight-basis oracle",
        &json!(got),
        &json!(oracle),
    );
    let out = cli(&["facets", "--system", "A2", "--word", "11212", "--target", "12"]);
    let got: Vec<Value> = out["facets"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| json!([f["facet"], f["roots"]]))
        .collect();
    v.expect(
        "root configurations",
        &json!(got),
        &json!([
            [[1, 2, 3], [[1, 0], [1, 0], [0, 1]]],
            [[1, 3, 4], [[1, 0], [1, 1], [-1, 0]]],
            [[1, 4, 5], [[1, 0], [0, 1], [-1, -1]]],
            [[2, 3, 4], [[-1, 0], [1, 1], [-1, 0]]],
            [[2, 4, 5], [[-1, 0], [0, 1], [-1, -1]]],
        ]),
    );

    v.heading("(f) B2, Q = 2221, w = 2");
    let out = cli(&[
        "brickpoly",
        "--system",
        "B2",
        "--word",
        "2221",
        "--target",
        "2",
        "--emit",
        "vrep,kappa",
    ]);
    let got: Vec<Value> = out["brick_vectors"]
        .as_array()
        .unwrap()
        .iter()
        .map(|b| json!([b["facet"], b["vector"]]))
        .collect();
    v.expect(
        "reference brick vectors",
        &json!(got),
        &json!([
            [[1, 2, 4], scaled(2, &[-5, -8])],
            [[1, 3, 4], scaled(2, &[-5, -7])],
            [[2, 3, 4], scaled(2, &[-5, -6])],
        ]),
    );
    v.expect(
        "reference vertices conv{½(−5,−8), ½(−5,−6)}",
        &out["vrep"]["vertices"],
        &json!([scaled(2, &[-5, -8]), scaled(2, &[-5, -6])]),
    );
    v.note("computed: b{1,2,4} = ½(−5,−8), b{1,3,4} = ½(−5,−6), b{2,3,4} = ½(−5,−4), same error as (e)");
    v.expect("recession cone{(1,2)}", &out["vrep"]["rays"], &json!([[1, 2]]));
    v.expect(
        "κ(e) = κ(1) = κ(12) = {1,2,4}, κ(2) = {2,3,4}",
        &set_value(&out["kappa"]),
        &set_value(&json!([
            {"element": "e", "facet": [1, 2, 4]},
            {"element": "1", "facet": [1, 2, 4]},
            {"element": "12", "facet": [1, 2, 4]},
            {"element": "2", "facet": [2, 3, 4]},
        ])),
    );
    let out = cli(&["kappa", "--system", "B2", "--word", "2221", "--target", "2"]);
    v.expect(
        "weak ideal {e, 1, 12, 2}",
        &set_value(&out["ideal"]),
        &set_value(&json!(["e", "1", "12", "2"])),
    );
    let out = cli(&["bruhat-cone", "--system", "B2", "--from", "2", "--to", "21"]);
    v.expect("E+(2, 21)", &out["e_plus"], &json!([[1, 2]]));
    let b2 = CoxeterSystem::from_preset("B2").unwrap();
    let sc = SubwordComplex::new(
        &b2,
        parse_word("2221", 2).unwrap(),
        b2.parse_element("2").unwrap(),
    )
    .unwrap();
    let edges = BrickPolyhedron::new(&sc).unwrap().edges().unwrap();
    v.require(
        "the three facets lie on one bounded edge",
        edges.iter().any(|e| e.bounded && e.facets.len() == 3),
        format!("{} edges", edges.len()),
    );

    v.heading("(g) κ for Q = 11212, w = 12");
    let out = cli(&["kappa", "--system", "A2", "--word", "11212", "--target", "12"]);
    v.expect("weak ideal {e, 1, 12}", &out["ideal"], &json!(["e", "1", "12"]));
    v.expect(
        "κ(e) = {1,2,3}, κ(1) = {2,3,4}, κ(12) = {2,4,5}",
        &out["kappa"],
        &json!([
            {"element": "e", "facet": [1, 2, 3]},
            {"element": "1", "facet": [2, 3, 4]},
            {"element": "12", "facet": [2, 4, 5]},
        ]),
    );
    v
}

// ---------------------------------------------------------------------------

/// The rank-2 and rank-3 sweeps shared by criteria 2 to 5.
struct Sweeps {
    reports: Vec<SweepReport>,
}

impl Sweeps {
    fn run() -> Sweeps {
        let checks: Vec<Check> = Check::ALL.into_iter().filter(|&c| c != Check::Dyer).collect();
        let reports = [(vec!["A2", "B2"], 7), (vec!["A3", "B3"], 5)]
            .into_iter()
            .map(|(systems, len)| {
                let mut config = SweepConfig::new(systems.into_iter().map(String::from).collect(), len);
                config.checks = checks.clone();
                run_sweep(&config, resolve_system).expect("sweep runs")
            })
            .collect();
        Sweeps { reports }
    }

    fn tally(&self, check: Check) -> Option<Tally> {
        let mut total: Option<Tally> = None;
        for r in &self.reports {
            if let Some(t) = r.tally(check) {
                total.get_or_insert_with(Tally::default).merge(t.clone());
            }
        }
        total
    }

    fn describe(&self, v: &mut Verdict) {
        for r in &self.reports {
            for (name, n) in &r.instances {
                v.note(format!(
                    "{name}: {n} instances (|Q| ≤ {})",
                    r.config.max_word_length
                ));
            }
        }
    }
}

fn sweep_criterion(sweeps: &Sweeps, first: bool, items: &[(&str, Check)]) -> Verdict {
    let mut v = Verdict::default();
    if first {
        sweeps.describe(&mut v);
        v.note("every instance: 50 distinct seeded random admissible functionals plus structured ones");
    } else {
        v.note("same sweep as criterion 2");
    }
    for (label, check) in items {
        v.tally(label, sweeps.tally(*check).as_ref());
    }
    v
}

fn criterion_6() -> Verdict {
    let mut v = Verdict::default();
    for name in ["A2", "B2", "A3", "B3"] {
        let sys = CoxeterSystem::from_preset(name).unwrap();
        let report = run_dyer(&sys).expect("Dyer checks run");
        v.note(format!(
            "{name}: {} simple triples, {} reflection triples (exhaustive)",
            report.simple_triples, report.reflection_triples
        ));
        for (item, t) in &report.items {
            v.tally(&format!("{name} {item}"), Some(t));
        }
        if name == "B3" {
            v.require(
                &format!("B3 triples ≥ 10^4 ({})", report.triples()),
                report.triples() >= 10_000,
                "too few triples",
            );
        }
    }
    v
}

fn matrix_of(w: &GroupElement) -> Mat {
    let n = w.rank();
    (0..n).map(|i| (0..n).map(|j| w.entry(i, j)).collect()).collect()
}

fn criterion_7() -> Verdict {
    let mut v = Verdict::default();
    for (name, max_len) in [("A2", 7), ("B2", 7), ("G2", 7), ("A3", 5), ("B3", 5)] {
        let sys = CoxeterSystem::from_preset(name).unwrap();
        let a = cartan(&sys);
        let mut instances = 0;
        let mut mismatch = None;
        for word in common::all_words(sys.rank(), max_len) {
            let dem = demazure_product(&sys, &word);
            for w in sys.elements() {
                let oracle = brute_force_facets(&a, &word, &matrix_of(w));
                let sc = SubwordComplex::new(&sys, word.clone(), w.clone()).unwrap();
                let found: Vec<Vec<usize>> = if bruhat_leq(&sys, w, &dem) {
                    sc.facets()
                        .unwrap()
                        .iter()
                        .map(|f| f.positions().to_vec())
                        .collect()
                } else {
                    Vec::new()
                };
                instances += 1;
                if found != oracle && mismatch.is_none() {
                    mismatch = Some(format!("Q={word:?} w={}", sys.format_element(w)));
                }
            }
        }
        v.require(
            &format!("{name} facets, |Q| ≤ {max_len}: {instances} (Q, w) pairs against subset enumeration"),
            mismatch.is_none(),
            mismatch.unwrap_or_default(),
        );
    }
    for name in ["A3", "B3"] {
        let sys = CoxeterSystem::from_preset(name).unwrap();
        let a = cartan(&sys);
        let mut pairs = 0;
        let mut mismatch = None;
        for y in sys.elements() {
            let below = bruhat_below(&a, &sys.canonical_word(y));
            for x in sys.elements() {
                pairs += 1;
                if bruhat_leq(&sys, x, y) != below.contains(&matrix_of(x)) && mismatch.is_none() {
                    mismatch = Some(format!("{} ≤ {}", sys.format_element(x), sys.format_element(y)));
                }
            }
        }
        v.require(
            &format!("{name} Bruhat order on all {pairs} pairs against subword deletion"),
            mismatch.is_none(),
            mismatch.unwrap_or_default(),
        );
    }
    v
}

// ---------------------------------------------------------------------------

fn main() {
    let selected: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let wanted = |n: u32| selected.is_empty() || selected.contains(&n);
    let strict = std::env::var("BRICKFORGE_ACCEPTANCE_STRICT").is_ok_and(|v| v == "1");

    let titles = [
        "worked examples reproduced exactly",
        "cone_equality sweep",
        "uniqueness of the f-antigreedy facet",
        "connected components of SC_f",
        "brick polyhedron structure",
        "Dyer property suite",
        "oracle equivalence",
    ];
    let mut sweeps: Option<Sweeps> = None;
    let mut verdicts: Vec<(u32, bool, f64)> = Vec::new();
    for n in 1..=7u32 {
        if !wanted(n) {
            continue;
        }
        let start = Instant::now();
        let verdict = match n {
            1 => criterion_1(),
            2..=5 => {
                let first = sweeps.is_none();
                let s = sweeps.get_or_insert_with(Sweeps::run);
                match n {
                    2 => sweep_criterion(s, first, &[("cone equality", Check::ConeEquality)]),
                    3 => sweep_criterion(
                        s,
                        first,
                        &[("unique facet with (b), (c)", Check::AntigreedyUniqueness)],
                    ),
                    4 => sweep_criterion(
                        s,
                        first,
                        &[("component and reindexing", Check::ConnectedComponents)],
                    ),
                    _ => sweep_criterion(
                        s,
                        first,
                        &[
                            ("(a) vrep = hrep", Check::BrickVrepHrep),
                            ("(b) vertex iff pointed", Check::VertexPointed),
                            ("(c) flip differences", Check::BrickFlipDifference),
                            ("(d) containment under simple covers", Check::Containment),
                            ("(e) normal fan from κ fibers", Check::NormalFan),
                        ],
                    ),
                }
            }
            6 => criterion_6(),
            _ => criterion_7(),
        };
        let secs = start.elapsed().as_secs_f64();
        for line in &verdict.lines {
            println!("{line}");
        }
        let status = if verdict.failed { "FAIL" } else { "PASS" };
        println!("{status} criterion {n}: {} ({secs:.1} s)", titles[n as usize - 1]);
        verdicts.push((n, !verdict.failed, secs));
    }

    if let Some(s) = &sweeps {
        println!("additional sweep checks:");
        for check in [
            Check::Nonflippable,
            Check::Flips,
            Check::WeightLemmas,
            Check::Faces,
            Check::EdgesAreFlips,
            Check::IotaBrick,
        ] {
            if let Some(t) = s.tally(check) {
                let status = if t.failures == 0 { "ok  " } else { "FAIL" };
                println!(
                    "    {status} {}: {} checked, {} failures",
                    check.name(),
                    t.checked,
                    t.failures
                );
            }
        }
    }

    let failed: Vec<u32> = verdicts
        .iter()
        .filter(|(_, ok, _)| !ok)
        .map(|(n, _, _)| *n)
        .collect();
    println!(
        "acceptance: {} passed, {} failed{}",
        verdicts.len() - failed.len(),
        failed.len(),
        if failed.is_empty() {
            String::new()
        } else {
            format!(" ({failed:?})")
        }
    );
    if strict && !failed.is_empty() {
        std::process::exit(1);
    }
}
