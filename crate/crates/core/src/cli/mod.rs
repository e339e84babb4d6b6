//! Command-line interface. [`run_command`] parses arguments, runs one
//! subcommand and returns the process exit code: 0 on success, 1 when a
//! check fails or an internal invariant breaks, 2 on usage and input errors.

pub mod dyer;
pub mod json;
pub mod svg;
pub mod sweep;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::brick::{
    chamber_cone, f_antigreedy, is_admissible, kappa, normal_fan, roots_pos, sc_f_facets, BrickPolyhedron,
    LinearFunctional,
};
use crate::bruhat::{lower_labels, upper_labels};
use crate::coxeter::{format_word, parse_word, CartanMatrix, CoxeterSystem};
use crate::geometry::max_dim;
use crate::geometry::rational::parse_rational;
use crate::subword::{demazure_product, SubwordComplex};
use crate::{Error, Result};

use sweep::{run_sweep, Check, SweepConfig, Targets};

#[derive(Debug, Parser)]
#[command(
    name = "brickforge",
    version,
    about = "Subword complexes, Bruhat cones and brick polyhedra in exact arithmetic"
)]
pub struct Cli {
    /// Write the main output to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Positive roots, simple roots, fundamental weights and group order.
    Roots(SystemArg),
    /// Demazure product of a word.
    Demazure(WordArgs),
    /// Facets with root configurations, flippable positions and the
    /// greedy/antigreedy markers.
    Facets(ComplexArgs),
    /// All flips between facets.
    Flips(ComplexArgs),
    /// The f-antigreedy facet with its full trace.
    Antigreedy(AntigreedyArgs),
    /// Brick vectors, V- and H-descriptions, κ and the normal fan, or an SVG.
    Brickpoly(BrickArgs),
    /// The map κ on the weak-order ideal.
    Kappa(ComplexArgs),
    /// Labels E+ and E− of a Bruhat interval.
    BruhatCone(ConeArgs),
    /// Run the verification sweep.
    Verify(VerifyArgs),
    /// SVG picture of a rank-2 brick polyhedron.
    Plot(ComplexArgs),
}

#[derive(Debug, Args)]
pub struct SystemArg {
    /// Preset name (A2, B3, G2, A1xA1, ...), a JSON object
    /// `{"cartan": [[2,-1],[-1,2]]}`, or a path to a file holding one.
    #[arg(long)]
    pub system: String,
}

#[derive(Debug, Args)]
pub struct WordArgs {
    #[command(flatten)]
    pub system: SystemArg,
    /// Word in shorthand (`1212`) or comma-separated letters.
    #[arg(long, allow_hyphen_values = true)]
    pub word: String,
}

#[derive(Debug, Args)]
pub struct ComplexArgs {
    #[command(flatten)]
    pub word: WordArgs,
    /// Target element as a word, `e` or `w0`.
    #[arg(long)]
    pub target: String,
}

#[derive(Debug, Args)]
pub struct AntigreedyArgs {
    #[command(flatten)]
    pub complex: ComplexArgs,
    /// Values on the simple roots, e.g. `-2,1` or `1/2,3`.
    #[arg(long, allow_hyphen_values = true)]
    pub functional: String,
}

#[derive(Debug, Args)]
pub struct BrickArgs {
    #[command(flatten)]
    pub complex: ComplexArgs,
    /// Comma-separated parts: vrep, hrep, kappa, normalfan, or svg alone.
    #[arg(long, default_value = "vrep,hrep")]
    pub emit: String,
}

#[derive(Debug, Args)]
pub struct ConeArgs {
    #[command(flatten)]
    pub system: SystemArg,
    #[arg(long)]
    pub from: String,
    #[arg(long)]
    pub to: String,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Systems to sweep; repeat the flag or separate presets by commas.
    #[arg(long, required = true)]
    pub system: Vec<String>,
    #[arg(long, default_value_t = 5)]
    pub max_word_length: usize,
    /// Comma-separated check names; all by default.
    #[arg(long)]
    pub checks: Option<String>,
    /// `all` or a comma-separated list of target elements.
    #[arg(long, default_value = "all")]
    pub targets: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Random admissible functionals per instance.
    #[arg(long, default_value_t = 50)]
    pub functionals: usize,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvariantViolation(_) => 1,
        _ => 2,
    }
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run_command<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli, err) {
        Ok((body, code)) => match &cli.output {
            Some(path) => match std::fs::write(path, body) {
                Ok(()) => code,
                Err(e) => {
                    let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
                    2
                }
            },
            None => {
                let _ = out.write_all(body.as_bytes());
                code
            }
        },
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

#[derive(Deserialize)]
struct SystemSpec {
    cartan: Vec<Vec<i64>>,
}

/// A preset name, an inline JSON object, or a path to a JSON file.
pub fn resolve_system(spec: &str) -> Result<CoxeterSystem> {
    let spec = spec.trim();
    let from_json = |text: &str| -> Result<CoxeterSystem> {
        let parsed: SystemSpec =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("system description: {e}")))?;
        CoxeterSystem::new(CartanMatrix::new(parsed.cartan)?)
    };
    let sys = if spec.starts_with('{') {
        from_json(spec)?
    } else if Path::new(spec).is_file() {
        let text = std::fs::read_to_string(spec).map_err(|e| Error::Parse(format!("{spec}: {e}")))?;
        from_json(&text)?
    } else {
        CoxeterSystem::from_preset(spec)?
    };
    let max = max_dim();
    if sys.rank() > max {
        return Err(Error::DimensionTooLarge { dim: sys.rank(), max });
    }
    Ok(sys)
}

fn parse_functional(text: &str, rank: usize) -> Result<LinearFunctional> {
    let values = text
        .split(',')
        .map(|p| parse_rational(p.trim()))
        .collect::<Result<Vec<_>>>()?;
    if values.len() != rank {
        return Err(Error::DimensionMismatch {
            expected: rank,
            found: values.len(),
        });
    }
    Ok(LinearFunctional(values))
}

fn complex<'a>(sys: &'a CoxeterSystem, args: &ComplexArgs) -> Result<SubwordComplex<'a>> {
    let word = parse_word(&args.word.word, sys.rank())?;
    let target = sys.parse_element(&args.target)?;
    let sc = SubwordComplex::new(sys, word, target)?;
    if sc.is_empty() {
        return Err(Error::EmptyComplex);
    }
    Ok(sc)
}

fn header(sc: &SubwordComplex<'_>) -> serde_json::Map<String, Value> {
    let sys = sc.system();
    let mut m = serde_json::Map::new();
    m.insert("word".into(), json!(format_word(sc.word(), sys.rank())));
    m.insert("target".into(), json::element(sys, sc.target()));
    m.insert("demazure".into(), json::element(sys, sc.demazure()));
    m.insert("spherical".into(), json!(sc.is_spherical()));
    m
}

fn execute(cli: &Cli, err: &mut dyn Write) -> Result<(String, i32)> {
    let value = match &cli.command {
        Command::Roots(a) => roots(&resolve_system(&a.system)?),
        Command::Demazure(a) => {
            let sys = resolve_system(&a.system.system)?;
            let word = parse_word(&a.word, sys.rank())?;
            json!({ "demazure": sys.format_element(&demazure_product(&sys, &word)) })
        }
        Command::Facets(a) => {
            let sys = resolve_system(&a.word.system.system)?;
            facets(&complex(&sys, a)?)?
        }
        Command::Flips(a) => {
            let sys = resolve_system(&a.word.system.system)?;
            flips(&complex(&sys, a)?)?
        }
        Command::Antigreedy(a) => {
            let sys = resolve_system(&a.complex.word.system.system)?;
            let sc = complex(&sys, &a.complex)?;
            antigreedy(&sc, &parse_functional(&a.functional, sys.rank())?)?
        }
        Command::Brickpoly(a) => {
            let sys = resolve_system(&a.complex.word.system.system)?;
            let sc = complex(&sys, &a.complex)?;
            let parts: Vec<&str> = a
                .emit
                .split(',')
                .map(str::trim)
                .filter(|p| !p.is_empty())
                .collect();
            if parts.contains(&"svg") {
                if parts.len() != 1 {
                    return Err(Error::Parse(
                        "--emit svg cannot be combined with other parts".into(),
                    ));
                }
                let bp = BrickPolyhedron::new(&sc)?;
                return Ok((svg::render(&sc, &bp)?, 0));
            }
            brickpoly(&sc, &parts)?
        }
        Command::Kappa(a) => {
            let sys = resolve_system(&a.word.system.system)?;
            kappa_json(&complex(&sys, a)?)?
        }
        Command::BruhatCone(a) => {
            let sys = resolve_system(&a.system.system)?;
            let x = sys.parse_element(&a.from)?;
            let y = sys.parse_element(&a.to)?;
            json!({
                "from": json::element(&sys, &x),
                "to": json::element(&sys, &y),
                "e_plus": json::roots(&upper_labels(&sys, &x, &y)?),
                "e_minus": json::roots(&lower_labels(&sys, &x, &y)?),
            })
        }
        Command::Plot(a) => {
            let sys = resolve_system(&a.word.system.system)?;
            let sc = complex(&sys, a)?;
            let bp = BrickPolyhedron::new(&sc)?;
            return Ok((svg::render(&sc, &bp)?, 0));
        }
        Command::Verify(a) => {
            let config = verify_config(a, cli.output.clone())?;
            let report = run_sweep(&config, resolve_system)?;
            let _ = err.write_all(report.table().as_bytes());
            let code = if report.passed() { 0 } else { 1 };
            return Ok((json::render(&report.to_json()), code));
        }
    };
    Ok((json::render(&value), 0))
}

pub fn verify_config(a: &VerifyArgs, output: Option<PathBuf>) -> Result<SweepConfig> {
    let mut systems = Vec::new();
    for s in &a.system {
        if s.trim_start().starts_with('{') {
            systems.push(s.clone());
        } else {
            systems.extend(
                s.split(',')
                    .map(|p| p.trim().to_string())
                    .filter(|p| !p.is_empty()),
            );
        }
    }
    let checks = match &a.checks {
        None => Check::ALL.to_vec(),
        Some(list) => list
            .split(',')
            .filter(|p| !p.trim().is_empty())
            .map(Check::from_name)
            .collect::<Result<Vec<_>>>()?,
    };
    let targets = if a.targets.trim() == "all" {
        Targets::All
    } else {
        Targets::List(a.targets.split(',').map(|t| t.trim().to_string()).collect())
    };
    let config = SweepConfig {
        systems,
        max_word_length: a.max_word_length,
        targets,
        checks,
        seed: a.seed,
        functionals: a.functionals,
        output_path: output,
    };
    config.validate()?;
    Ok(config)
}

fn roots(sys: &CoxeterSystem) -> Value {
    let simple: Vec<_> = (0..sys.rank()).map(|s| sys.simple_root(s)).collect();
    json!({
        "rank": sys.rank(),
        "cartan": sys.cartan().entries(),
        "simple_roots": simple,
        "positive_roots": json::roots(sys.positive_roots()),
        "weights": json::vectors(sys.weights()),
        "longest_element": json::element(sys, sys.longest_element()),
        "order": sys.elements().len(),
    })
}

fn facets(sc: &SubwordComplex<'_>) -> Result<Value> {
    let greedy = sc.greedy_facet()?;
    let antigreedy = sc.antigreedy_facet()?;
    let list: Vec<Value> = sc
        .facets()?
        .iter()
        .map(|f| {
            let flippable = sc.flippable_positions(f);
            json!({
                "facet": json::facet(f),
                "roots": json::roots(&sc.root_configuration(f)),
                "flippable": f.positions().iter().map(|p| flippable.contains(p)).collect::<Vec<_>>(),
                "greedy": f == &greedy,
                "antigreedy": f == &antigreedy,
            })
        })
        .collect();
    let mut m = header(sc);
    m.insert("facets".into(), Value::Array(list));
    Ok(Value::Object(m))
}

fn flips(sc: &SubwordComplex<'_>) -> Result<Value> {
    let mut list = Vec::new();
    for f in sc.facets()? {
        for i in sc.flippable_positions(f) {
            let flip = sc.flip(f, i)?;
            list.push(json!({
                "from": json::facet(f),
                "removed": i + 1,
                "to": json::facet(&flip.facet),
                "added": flip.added + 1,
                "root": flip.root,
            }));
        }
    }
    let mut m = header(sc);
    m.insert("flips".into(), Value::Array(list));
    Ok(Value::Object(m))
}

fn antigreedy(sc: &SubwordComplex<'_>, f: &LinearFunctional) -> Result<Value> {
    let sys = sc.system();
    if !is_admissible(sc, f)? {
        return Err(f_antigreedy(sc, f).expect_err("inadmissible"));
    }
    let (facet, trace) = f_antigreedy(sc, f)?;
    let steps: Vec<Value> = trace
        .steps
        .iter()
        .map(|s| {
            json!({
                "k": s.position + 1,
                "beta": s.beta,
                "sign": s.sign,
                "condition": s.condition,
                "prefix": json::element(sys, &s.prefix),
                "facet": json::facet(&s.facet),
            })
        })
        .collect();
    let scf = sc_f_facets(sc, f)?;
    let mut m = header(sc);
    m.insert("functional".into(), json::vector(f.coefficients()));
    m.insert("facet".into(), json::facet(&facet));
    m.insert("roots".into(), json::roots(&sc.root_configuration(&facet)));
    m.insert("steps".into(), Value::Array(steps));
    m.insert("sc_f".into(), Value::Array(scf.iter().map(json::facet).collect()));
    let pos: Vec<usize> = roots_pos(sc, f, &facet).iter().map(|p| p + 1).collect();
    m.insert("roots_pos".into(), json!(pos));
    Ok(Value::Object(m))
}

fn kappa_json(sc: &SubwordComplex<'_>) -> Result<Value> {
    let sys = sc.system();
    let map = kappa(sc)?;
    let list: Vec<Value> = map
        .assignment
        .iter()
        .map(|(z, f)| json!({ "element": json::element(sys, z), "facet": json::facet(f) }))
        .collect();
    let mut m = header(sc);
    m.insert("ideal".into(), json::elements(sys, &map.ideal.members));
    m.insert("kappa".into(), Value::Array(list));
    Ok(Value::Object(m))
}

fn brickpoly(sc: &SubwordComplex<'_>, parts: &[&str]) -> Result<Value> {
    for p in parts {
        if !["vrep", "hrep", "kappa", "normalfan"].contains(p) {
            return Err(Error::Parse(format!(
                "unknown --emit part {p:?}; expected vrep, hrep, kappa, normalfan or svg"
            )));
        }
    }
    let sys = sc.system();
    let bp = BrickPolyhedron::new(sc)?;
    let vectors: Vec<Value> = bp
        .brick_vectors()
        .iter()
        .map(|(f, b)| {
            json!({
                "facet": json::facet(f),
                "vector": json::vector(b),
                "vertex": bp.vertex_facets().contains(f),
            })
        })
        .collect();
    let mut m = header(sc);
    m.insert("polytope".into(), json!(bp.is_polytope()));
    m.insert("brick_vectors".into(), Value::Array(vectors));
    if parts.contains(&"vrep") {
        m.insert(
            "vrep".into(),
            json!({
                "vertices": json::vectors(&bp.vertices()?),
                "rays": json::roots(bp.recession_rays()),
            }),
        );
    }
    if parts.contains(&"hrep") {
        let hs: Vec<Value> = bp.halfspaces()?.iter().map(json::halfspace).collect();
        m.insert("hrep".into(), Value::Array(hs));
    }
    let needs_kappa = parts.contains(&"kappa") || parts.contains(&"normalfan");
    let map = if needs_kappa { Some(kappa(sc)?) } else { None };
    if let (true, Some(map)) = (parts.contains(&"kappa"), &map) {
        let list: Vec<Value> = map
            .assignment
            .iter()
            .map(|(z, f)| json!({ "element": json::element(sys, z), "facet": json::facet(f) }))
            .collect();
        m.insert("kappa".into(), Value::Array(list));
    }
    if let (true, Some(map)) = (parts.contains(&"normalfan"), &map) {
        let cones: Vec<Value> = normal_fan(sc, &bp, map)?
            .iter()
            .map(|c| {
                let chambers: Vec<Value> = c
                    .chambers
                    .iter()
                    .map(|z| {
                        json!({
                            "element": json::element(sys, z),
                            "generators": json::vectors(chamber_cone(sys, z).generators()),
                        })
                    })
                    .collect();
                json!({
                    "facet": json::facet(&c.facet),
                    "generators": json::vectors(c.cone.generators()),
                    "chambers": chambers,
                })
            })
            .collect();
        m.insert("normalfan".into(), Value::Array(cones));
    }
    Ok(Value::Object(m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["brickforge"];
        full.extend_from_slice(args);
        let code = run_command(full, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn demazure_command() {
        let (code, out, _) = run(&["demazure", "--system", "A2", "--word", "1212"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v, json!({ "demazure": "121" }));
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run(&["nonsense"]).0, 2);
        assert_eq!(run(&["demazure", "--system", "Z9", "--word", "1"]).0, 2);
        assert_eq!(
            run(&["facets", "--system", "A2", "--word", "1", "--target", "12"]).0,
            2
        );
        assert_eq!(run(&["verify", "--system", "A2", "--checks", "bogus"]).0, 2);
    }

    #[test]
    fn inline_cartan_matrix() {
        let (code, out, _) = run(&["roots", "--system", r#"{"cartan": [[2,-1],[-2,2]]}"#]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["order"], json!(8));
    }
}
