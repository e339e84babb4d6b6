use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::geometry::rational::{determinant, rat, ratio, Rational};
use crate::{Error, Result};

/// An integer Cartan matrix `a[s][t]`, with the convention
/// `s(α_t) = α_t − a[s][t]·α_s`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CartanMatrix {
    entries: Vec<Vec<i64>>,
}

impl CartanMatrix {
    /// Validates the crystallographic conditions. Finiteness is checked
    /// separately by [`CartanMatrix::check_finite`].
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::NotCrystallographic("empty Cartan matrix".into()));
        }
        for (s, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotCrystallographic(format!(
                    "row {} has {} entries, expected {n}",
                    s + 1,
                    row.len()
                )));
            }
            if row[s] != 2 {
                return Err(Error::NotCrystallographic(format!(
                    "diagonal entry a[{0}][{0}] = {1}, expected 2",
                    s + 1,
                    row[s]
                )));
            }
        }
        for s in 0..n {
            for t in 0..n {
                if s == t {
                    continue;
                }
                let (a, b) = (entries[s][t], entries[t][s]);
                if a > 0 {
                    return Err(Error::NotCrystallographic(format!(
                        "off-diagonal entry a[{}][{}] = {a} is positive",
                        s + 1,
                        t + 1
                    )));
                }
                if (a == 0) != (b == 0) {
                    return Err(Error::NotCrystallographic(format!(
                        "a[{0}][{1}] and a[{1}][{0}] must vanish together",
                        s + 1,
                        t + 1
                    )));
                }
                if !(0..=3).contains(&(a * b)) {
                    return Err(Error::NotCrystallographic(format!(
                        "a[{0}][{1}]·a[{1}][{0}] = {2} is not in {{0,1,2,3}}",
                        s + 1,
                        t + 1,
                        a * b
                    )));
                }
            }
        }
        Ok(CartanMatrix { entries })
    }

    /// Named presets: `An`, `Bn`, `Cn`, `Dn`, `G2` and `A1xA1`.
    pub fn preset(name: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown Coxeter system preset {name:?}"));
        let name = name.trim();
        if name.eq_ignore_ascii_case("A1xA1") {
            return CartanMatrix::new(vec![vec![2, 0], vec![0, 2]]);
        }
        let mut chars = name.chars();
        let family = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
        let n: usize = chars.as_str().parse().map_err(|_| bad())?;
        let mut a = path_matrix(n);
        match (family, n) {
            ('A', 1..) => {}
            ('B', 2..) => a[n - 1][n - 2] = -2,
            ('C', 2..) => a[n - 2][n - 1] = -2,
            ('D', 4..) => {
                a[n - 2][n - 1] = 0;
                a[n - 1][n - 2] = 0;
                a[n - 3][n - 1] = -1;
                a[n - 1][n - 3] = -1;
            }
            ('G', 2) => a[1][0] = -3,
            _ => return Err(bad()),
        }
        let m = CartanMatrix::new(a)?;
        m.check_finite()?;
        Ok(m)
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, s: usize, t: usize) -> i64 {
        self.entries[s][t]
    }

    /// Minimal positive integer vector `d` with `d_s·a[s][t] = d_t·a[t][s]`,
    /// normalized separately on each connected component of the diagram.
    pub fn symmetrizer(&self) -> Result<Vec<i64>> {
        let n = self.rank();
        let mut d: Vec<Option<Rational>> = vec![None; n];
        for root in 0..n {
            if d[root].is_some() {
                continue;
            }
            d[root] = Some(rat(1));
            let mut component = vec![root];
            let mut stack = vec![root];
            while let Some(s) = stack.pop() {
                let ds = d[s].clone().expect("visited");
                for t in 0..n {
                    if t == s || self.get(s, t) == 0 {
                        continue;
                    }
                    let dt = ds.clone() * ratio(self.get(s, t), self.get(t, s));
                    match &d[t] {
                        Some(existing) if *existing != dt => {
                            return Err(Error::NotCrystallographic(
                                "Cartan matrix is not symmetrizable".into(),
                            ))
                        }
                        Some(_) => {}
                        None => {
                            d[t] = Some(dt);
                            component.push(t);
                            stack.push(t);
                        }
                    }
                }
            }
            let lcm = component.iter().fold(num_bigint::BigInt::from(1), |acc, &s| {
                num_integer::Integer::lcm(&acc, d[s].as_ref().unwrap().denom())
            });
            let scaled: Vec<Rational> = component
                .iter()
                .map(|&s| d[s].clone().unwrap() * Rational::from_integer(lcm.clone()))
                .collect();
            let gcd = scaled.iter().fold(num_bigint::BigInt::zero(), |acc, x| {
                num_integer::Integer::gcd(&acc, x.numer())
            });
            for (&s, v) in component.iter().zip(scaled) {
                d[s] = Some(v / Rational::from_integer(gcd.clone()));
            }
        }
        d.into_iter()
            .map(|x| {
                let x = x.expect("all components visited");
                i64::try_from(x.to_integer())
                    .map_err(|_| Error::NotCrystallographic("symmetrizer overflow".into()))
            })
            .collect()
    }

    /// Symmetric Gram matrix `G[s][t] = d_s·a[s][t]` of the invariant form.
    pub fn gram(&self) -> Result<Vec<Vec<i64>>> {
        let d = self.symmetrizer()?;
        Ok((0..self.rank())
            .map(|s| (0..self.rank()).map(|t| d[s] * self.get(s, t)).collect())
            .collect())
    }

    /// Fails with `NotFinite` unless the symmetrized form is positive definite.
    pub fn check_finite(&self) -> Result<()> {
        let g = self.gram()?;
        for k in 1..=self.rank() {
            let minor: Vec<Vec<Rational>> = g[..k]
                .iter()
                .map(|row| row[..k].iter().map(|&x| rat(x)).collect())
                .collect();
            if !determinant(&minor).is_positive() {
                return Err(Error::NotFinite(format!(
                    "leading principal minor of order {k} is not positive"
                )));
            }
        }
        Ok(())
    }
}

fn path_matrix(n: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0; n]; n];
    for i in 0..n {
        a[i][i] = 2;
        if i + 1 < n {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    }
    a
}
