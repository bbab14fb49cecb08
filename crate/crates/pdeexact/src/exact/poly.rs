//! Sparse multivariate polynomials with arbitrary-precision rational
//! coefficients. Terms are kept in a BTreeMap keyed by exponent vectors, so
//! equality testing and serialization order are canonical.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    BigRational::from(BigInt::from(n))
}

/// Exponent multi-index.
pub type Expo = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPoly {
    pub n_vars: usize,
    /// exponent vector -> nonzero coefficient
    pub terms: BTreeMap<Expo, Rat>,
}

impl RationalPoly {
    pub fn zero(n_vars: usize) -> Self {
        RationalPoly {
            n_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n_vars: usize, c: Rat) -> Self {
        let mut p = Self::zero(n_vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; n_vars], c);
        }
        p
    }

    pub fn one(n_vars: usize) -> Self {
        Self::constant(n_vars, Rat::one())
    }

    /// The monomial c * x^expo.
    pub fn monomial(n_vars: usize, expo: Expo, c: Rat) -> Self {
        assert_eq!(expo.len(), n_vars);
        let mut p = Self::zero(n_vars);
        if !c.is_zero() {
            p.terms.insert(expo, c);
        }
        p
    }

    /// x_i as a polynomial.
    pub fn var(n_vars: usize, i: usize) -> Self {
        let mut e = vec![0; n_vars];
        e[i] = 1;
        Self::monomial(n_vars, e, Rat::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    fn insert_add(&mut self, e: Expo, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let v = o.get().clone() + c;
                if v.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = v;
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n_vars, other.n_vars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_add(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn scale(&self, s: &Rat) -> Self {
        if s.is_zero() {
            return Self::zero(self.n_vars);
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = c.clone() * s;
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n_vars, other.n_vars);
        let mut out = Self::zero(self.n_vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Expo = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.insert_add(e, ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.n_vars);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact partial derivative d^alpha.
    pub fn diff(&self, alpha: &[u32]) -> Self {
        assert_eq!(alpha.len(), self.n_vars);
        let mut out = Self::zero(self.n_vars);
        'terms: for (e, c) in &self.terms {
            let mut coef = c.clone();
            let mut ne = e.clone();
            for (v, &a) in alpha.iter().enumerate() {
                if e[v] < a {
                    continue 'terms;
                }
                for k in 0..a {
                    coef *= rat_int((e[v] - k) as i64);
                }
                ne[v] = e[v] - a;
            }
            out.insert_add(ne, coef);
        }
        out
    }

    pub fn diff_var(&self, var: usize) -> Self {
        let mut a = vec![0; self.n_vars];
        a[var] = 1;
        self.diff(&a)
    }

    /// The right inverse of d/dx_var: x^alpha -> x^(alpha + e_var)/(alpha_var + 1).
    pub fn integrate(&self, var: usize) -> Self {
        let mut out = Self::zero(self.n_vars);
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            ne[var] += 1;
            let denom = rat_int(ne[var] as i64);
            out.insert_add(ne, c.clone() / denom);
        }
        out
    }

    /// Substitute x_var -> replacement (a polynomial in the same variables).
    pub fn substitute(&self, var: usize, replacement: &Self) -> Self {
        let mut out = Self::zero(self.n_vars);
        // group by the exponent of var
        for (e, c) in &self.terms {
            let k = e[var];
            let mut base = e.clone();
            base[var] = 0;
            let term = Self::monomial(self.n_vars, base, c.clone());
            out = out.add(&term.mul(&replacement.pow(k)));
        }
        out
    }

    /// Evaluate at a rational point.
    pub fn eval_rat(&self, point: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (v, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    term *= point[v].clone();
                }
            }
            acc += term;
        }
        acc
    }

    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        let mut acc = 0.0;
        for (e, c) in &self.terms {
            let mut term = rat_to_f64(c);
            for (v, &k) in e.iter().enumerate() {
                term *= point[v].powi(k as i32);
            }
            acc += term;
        }
        acc
    }

    /// Map into a polynomial with more variables, sending variable i to
    /// `var_map[i]`.
    pub fn embed(&self, n_vars: usize, var_map: &[usize]) -> Self {
        let mut out = Self::zero(n_vars);
        for (e, c) in &self.terms {
            let mut ne = vec![0u32; n_vars];
            for (v, &k) in e.iter().enumerate() {
                ne[var_map[v]] += k;
            }
            out.insert_add(ne, c.clone());
        }
        out
    }
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    // exact conversion through string would lose; use numerator/denominator
    // with scaling to stay in range
    let n = r.numer();
    let d = r.denom();
    big_to_f64(n) / big_to_f64(d)
}

fn big_to_f64(b: &BigInt) -> f64 {
    // f64 mantissa overflow is fine for our magnitudes; fall back to string
    let s = b.to_string();
    s.parse::<f64>().unwrap_or(if b.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    })
}

/// Canonical JSON form: {vars: n, terms: [{exp, num, den}]}, stable order.
#[derive(Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub num: String,
    pub den: String,
}

impl RationalPoly {
    pub fn to_json(&self, var_names: &[&str]) -> PolyJson {
        PolyJson {
            vars: var_names.iter().map(|s| s.to_string()).collect(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermJson {
                    exp: e.clone(),
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &PolyJson) -> crate::error::Result<Self> {
        let n_vars = j.vars.len();
        let mut p = Self::zero(n_vars);
        for t in &j.terms {
            let num: BigInt = t.num.parse().map_err(|_| {
                crate::error::Error::Parse {
                    offset: 0,
                    msg: format!("bad numerator {}", t.num),
                }
            })?;
            let den: BigInt = t.den.parse().map_err(|_| {
                crate::error::Error::Parse {
                    offset: 0,
                    msg: format!("bad denominator {}", t.den),
                }
            })?;
            p.insert_add(t.exp.clone(), BigRational::new(num, den));
        }
        Ok(p)
    }
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names = ["x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8"];
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (v, &k) in e.iter().enumerate() {
                if k > 0 {
                    write!(f, "*{}^{}", names.get(v).unwrap_or(&"x?"), k)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diff_examples() {
        // d/dx (x^3 y) = 3 x^2 y
        let p = RationalPoly::monomial(2, vec![3, 1], Rat::one());
        let d = p.diff(&[1, 0]);
        assert_eq!(d, RationalPoly::monomial(2, vec![2, 1], rat_int(3)));
        // d2/dx2 (x) = 0
        let x = RationalPoly::var(2, 0);
        assert!(x.diff(&[2, 0]).is_zero());
        // dx dy (x^2 y^2) = 4 x y
        let p = RationalPoly::monomial(2, vec![2, 2], Rat::one());
        assert_eq!(
            p.diff(&[1, 1]),
            RationalPoly::monomial(2, vec![1, 1], rat_int(4))
        );
    }

    #[test]
    fn integrate_examples() {
        let p = RationalPoly::monomial(1, vec![2], Rat::one());
        assert_eq!(
            p.integrate(0),
            RationalPoly::monomial(1, vec![3], rat(1, 3))
        );
        let one = RationalPoly::one(1);
        assert_eq!(one.integrate(0), RationalPoly::var(1, 0));
    }

    #[test]
    fn diff_after_integrate_is_identity() {
        // exercised more broadly by the property test in the flag module
        let p = RationalPoly::var(2, 0)
            .mul(&RationalPoly::var(2, 1))
            .add(&RationalPoly::constant(2, rat(7, 3)));
        let back = p.integrate(1).diff(&[0, 1]);
        assert_eq!(back, p);
    }

    #[test]
    fn json_roundtrip_is_exact() {
        let p = RationalPoly::monomial(2, vec![2, 1], rat(22, 7))
            .add(&RationalPoly::constant(2, rat(-1, 3)));
        let j = p.to_json(&["x", "y"]);
        let s = serde_json::to_string(&j).unwrap();
        let j2: PolyJson = serde_json::from_str(&s).unwrap();
        assert_eq!(RationalPoly::from_json(&j2).unwrap(), p);
    }
}
