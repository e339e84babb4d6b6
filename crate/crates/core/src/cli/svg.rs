//! Self-contained SVG pictures of rank-2 brick polyhedra.
//!
//! Coordinates are drawn in the Euclidean plane spanned by the simple roots,
//! so angles between roots are the true ones. Floating point is used for
//! drawing only.

use std::fmt::Write as _;

use num_traits::ToPrimitive;

use crate::brick::BrickPolyhedron;
use crate::geometry::Rational;
use crate::subword::SubwordComplex;
use crate::{Error, Result};

const SIZE: f64 = 520.0;
const MARGIN: f64 = 50.0;

type P = (f64, f64);

struct Plane {
    a1: P,
    a2: P,
}

impl Plane {
    fn new(gram: &[Vec<i64>]) -> Self {
        let g11 = gram[0][0] as f64;
        let g22 = gram[1][1] as f64;
        let g12 = gram[0][1] as f64;
        let l1 = g11.sqrt();
        let l2 = g22.sqrt();
        let cos = g12 / (l1 * l2);
        let sin = (1.0 - cos * cos).max(0.0).sqrt();
        Plane {
            a1: (l1, 0.0),
            a2: (l2 * cos, l2 * sin),
        }
    }

    fn map(&self, c: (f64, f64)) -> P {
        (
            c.0 * self.a1.0 + c.1 * self.a2.0,
            c.0 * self.a1.1 + c.1 * self.a2.1,
        )
    }

    fn rational(&self, v: &[Rational]) -> P {
        let f = |x: &Rational| x.to_f64().unwrap_or(0.0);
        self.map((f(&v[0]), f(&v[1])))
    }

    fn integer(&self, v: &[i64]) -> P {
        self.map((v[0] as f64, v[1] as f64))
    }
}

fn unit(p: P) -> P {
    let n = (p.0 * p.0 + p.1 * p.1).sqrt();
    if n == 0.0 {
        p
    } else {
        (p.0 / n, p.1 / n)
    }
}

fn cross(o: P, a: P, b: P) -> f64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Andrew's monotone chain.
fn hull(mut pts: Vec<P>) -> Vec<P> {
    pts.sort_by(|a, b| a.partial_cmp(b).expect("finite coordinates"));
    pts.dedup_by(|a, b| (a.0 - b.0).abs() < 1e-9 && (a.1 - b.1).abs() < 1e-9);
    if pts.len() < 3 {
        return pts;
    }
    let mut lower: Vec<P> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0.0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<P> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0.0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Vertices and brick vectors as dots labelled by their facets, rays of the
/// recession cone as arrows, and the root configuration of every facet as
/// short arrows at its brick vector.
pub fn render(sc: &SubwordComplex<'_>, bp: &BrickPolyhedron) -> Result<String> {
    let sys = sc.system();
    if sys.rank() != 2 {
        return Err(Error::PreconditionFailed(format!(
            "SVG output needs rank 2, got rank {}",
            sys.rank()
        )));
    }
    let plane = Plane::new(sys.gram());
    let points: Vec<(String, P)> = bp
        .brick_vectors()
        .iter()
        .map(|(facet, b)| (facet.to_string(), plane.rational(b)))
        .collect();
    let vertices: Vec<P> = bp.vertices()?.iter().map(|v| plane.rational(v)).collect();
    let rays: Vec<P> = bp
        .recession_rays()
        .iter()
        .map(|r| unit(plane.integer(r)))
        .collect();

    let mut span = 1.0f64;
    for (_, p) in &points {
        for (_, q) in &points {
            span = span.max((p.0 - q.0).abs()).max((p.1 - q.1).abs());
        }
    }
    let reach = span * 0.6 + 1.0;
    let mut region: Vec<P> = vertices.clone();
    for v in &vertices {
        for r in &rays {
            region.push((v.0 + reach * r.0, v.1 + reach * r.1));
        }
    }
    let region = hull(region);
    let arrow = reach * 0.18;

    let all: Vec<P> = region
        .iter()
        .copied()
        .chain(points.iter().map(|(_, p)| *p))
        .collect();
    let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for p in &all {
        x0 = x0.min(p.0 - arrow);
        x1 = x1.max(p.0 + arrow);
        y0 = y0.min(p.1 - arrow);
        y1 = y1.max(p.1 + arrow);
    }
    let scale = (SIZE - 2.0 * MARGIN) / (x1 - x0).max(y1 - y0).max(1e-9);
    let tx = |p: P| -> P { (MARGIN + (p.0 - x0) * scale, SIZE - MARGIN - (p.1 - y0) * scale) };

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(
        s,
        r#"<defs><marker id="head" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="6" markerHeight="6" orient="auto-start-reverse"><path d="M0,0 L10,5 L0,10 z" fill="context-stroke"/></marker></defs>"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    if region.len() >= 2 {
        let pts: Vec<String> = region
            .iter()
            .map(|&p| {
                let q = tx(p);
                format!("{:.2},{:.2}", q.0, q.1)
            })
            .collect();
        let _ = writeln!(
            s,
            r##"<polygon points="{}" fill="#dfe8f5" stroke="#33507a" stroke-width="1.5"/>"##,
            pts.join(" ")
        );
    }
    for v in &vertices {
        for r in &rays {
            let a = tx(*v);
            let b = tx((v.0 + reach * r.0, v.1 + reach * r.1));
            let _ = writeln!(
                s,
                r##"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="#33507a" stroke-width="1.5" stroke-dasharray="6 4" marker-end="url(#head)"/>"##,
                a.0, a.1, b.0, b.1
            );
        }
    }
    for (facet, b) in bp.brick_vectors() {
        let at = plane.rational(b);
        for r in bp.root_configuration(facet)? {
            let d = unit(plane.integer(r));
            let a = tx(at);
            let e = tx((at.0 + arrow * d.0, at.1 + arrow * d.1));
            let _ = writeln!(
                s,
                r##"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="#b5462f" stroke-width="1.2" marker-end="url(#head)"/>"##,
                a.0, a.1, e.0, e.1
            );
        }
    }
    for (label, p) in &points {
        let q = tx(*p);
        let is_vertex = vertices
            .iter()
            .any(|v| (v.0 - p.0).abs() < 1e-9 && (v.1 - p.1).abs() < 1e-9);
        let fill = if is_vertex { "#1b2a41" } else { "#8a8a8a" };
        let _ = writeln!(
            s,
            r#"<circle cx="{:.2}" cy="{:.2}" r="4" fill="{fill}"/>"#,
            q.0, q.1
        );
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="11" fill="{fill}">{label}</text>"#,
            q.0 + 6.0,
            q.1 - 6.0
        );
    }
    s.push_str("</svg>\n");
    Ok(s)
}
