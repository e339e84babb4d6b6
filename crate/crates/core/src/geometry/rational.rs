//! Small exact linear-algebra toolkit over `BigRational`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

pub type Rational = BigRational;
pub type QVector = Vec<Rational>;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int_vec(v: &[i64]) -> QVector {
    v.iter().map(|&x| rat(x)).collect()
}

pub fn zero_vec(dim: usize) -> QVector {
    vec![Rational::zero(); dim]
}

pub fn unit_vec(dim: usize, i: usize) -> QVector {
    let mut v = zero_vec(dim);
    v[i] = Rational::one();
    v
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn dot_int(a: &[Rational], b: &[i64]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Rational::zero();
    for (x, &y) in a.iter().zip(b) {
        if y != 0 {
            acc += x * rat(y);
        }
    }
    acc
}

pub fn add(a: &[Rational], b: &[Rational]) -> QVector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Rational], b: &[Rational]) -> QVector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn neg(a: &[Rational]) -> QVector {
    a.iter().map(|x| -x).collect()
}

pub fn scale(c: &Rational, a: &[Rational]) -> QVector {
    a.iter().map(|x| c * x).collect()
}

/// `a + c * b`
pub fn axpy(a: &[Rational], c: &Rational, b: &[Rational]) -> QVector {
    a.iter().zip(b).map(|(x, y)| x + c * y).collect()
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// The positive multiple of `v` with coprime integer entries. Zero stays zero.
pub fn primitive(v: &[Rational]) -> QVector {
    if is_zero_vec(v) {
        return v.to_vec();
    }
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    ints.into_iter()
        .map(|x| Rational::from_integer(x / &gcd))
        .collect()
}

/// Whether `a` is a positive multiple of `b` (both nonzero).
pub fn is_positive_multiple(a: &[Rational], b: &[Rational]) -> bool {
    if is_zero_vec(a) || is_zero_vec(b) {
        return false;
    }
    primitive(a) == primitive(b)
}

/// Reduced row echelon form; returns the nonzero rows and pivot columns.
pub fn rref(rows: &[QVector]) -> (Vec<QVector>, Vec<usize>) {
    let mut m: Vec<QVector> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        m[r] = scale(&inv, &m[r]);
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                m[i] = axpy(&m[i], &(-f), &m[r]);
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(rows: &[QVector]) -> usize {
    rref(rows).1.len()
}

/// Inverse of a square rational matrix given as rows.
pub fn inverse(m: &[QVector]) -> Result<Vec<QVector>> {
    let n = m.len();
    let aug: Vec<QVector> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend(unit_vec(n, i));
            r
        })
        .collect();
    let (red, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return Err(Error::InvariantViolation("singular matrix".into()));
    }
    Ok(red.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn determinant(m: &[QVector]) -> Rational {
    let mut a: Vec<QVector> = m.to_vec();
    let n = a.len();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= &a[c][c];
        for i in c + 1..n {
            if !a[i][c].is_zero() {
                let f = &a[i][c] / &a[c][c];
                a[i] = axpy(&a[i], &(-f), &a[c]);
            }
        }
    }
    det
}

/// Orthogonal (standard inner product) projection of `v` onto the
/// complement of `span(basis)`. `basis` must be linearly independent.
pub fn project_out(v: &[Rational], basis: &[QVector]) -> QVector {
    let ortho = gram_schmidt(basis);
    let mut out = v.to_vec();
    for u in &ortho {
        let c = dot(&out, u) / dot(u, u);
        if !c.is_zero() {
            out = axpy(&out, &(-c), u);
        }
    }
    out
}

fn gram_schmidt(basis: &[QVector]) -> Vec<QVector> {
    let mut out: Vec<QVector> = Vec::new();
    for b in basis {
        let mut v = b.clone();
        for u in &out {
            let c = dot(&v, u) / dot(u, u);
            v = axpy(&v, &(-c), u);
        }
        if !is_zero_vec(&v) {
            out.push(v);
        }
    }
    out
}

/// Parses `"3"`, `"-3/4"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn sign(x: &Rational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}
