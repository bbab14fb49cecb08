use once_cell::sync::Lazy;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::Jet1;

pub const ORDER: usize = 4;
/// Number of multi-indices alpha in N^4 with |alpha| <= 4.
pub const JET4_LEN: usize = 70;

/// Jet variables, in storage order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    T = 0,
    X = 1,
    Y = 2,
    Z = 3,
}

/// All multi-indices with |alpha| <= ORDER, graded lexicographic.
static INDICES: Lazy<Vec<[u8; 4]>> = Lazy::new(|| {
    let mut v = Vec::with_capacity(JET4_LEN);
    for total in 0..=ORDER as u8 {
        for a0 in 0..=total {
            for a1 in 0..=total - a0 {
                for a2 in 0..=total - a0 - a1 {
                    let a3 = total - a0 - a1 - a2;
                    v.push([a0, a1, a2, a3]);
                }
            }
        }
    }
    assert_eq!(v.len(), JET4_LEN);
    v
});

static POSITION: Lazy<std::collections::HashMap<[u8; 4], usize>> = Lazy::new(|| {
    INDICES
        .iter()
        .enumerate()
        .map(|(i, &a)| (a, i))
        .collect()
});

/// Product table: (i, j, k) with alpha_i + alpha_j = alpha_k, |alpha_k| <= ORDER.
static PRODUCTS: Lazy<Vec<(u16, u16, u16)>> = Lazy::new(|| {
    let mut v = Vec::new();
    for (i, a) in INDICES.iter().enumerate() {
        for (j, b) in INDICES.iter().enumerate() {
            let total: u8 = a.iter().sum::<u8>() + b.iter().sum::<u8>();
            if total > ORDER as u8 {
                continue;
            }
            let sum = [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]];
            let k = POSITION[&sum];
            v.push((i as u16, j as u16, k as u16));
        }
    }
    v
});

fn factorial(n: u8) -> f64 {
    [1.0, 1.0, 2.0, 6.0, 24.0][n as usize]
}

/// Truncated Taylor expansion in (t, x, y, z) to order 4.
///
/// `c[i]` is the Taylor coefficient for multi-index `INDICES[i]`, i.e.
/// `d^alpha f / alpha!` at the (implicit) base point.
#[derive(Debug, Clone, Copy)]
pub struct Jet4 {
    pub c: [f64; JET4_LEN],
}

impl Jet4 {
    pub fn zero() -> Self {
        Jet4 {
            c: [0.0; JET4_LEN],
        }
    }

    pub fn constant(v: f64) -> Self {
        let mut j = Self::zero();
        j.c[0] = v;
        j
    }

    /// Seed for one of the four coordinates, at base value `v0`.
    pub fn variable(var: Var, v0: f64) -> Self {
        let mut j = Self::constant(v0);
        let mut idx = [0u8; 4];
        idx[var as usize] = 1;
        j.c[POSITION[&idx]] = 1.0;
        j
    }

    pub fn value(&self) -> f64 {
        self.c[0]
    }

    /// Partial derivative d^alpha f for a multi-index (orders of t, x, y, z).
    pub fn deriv(&self, alpha: [u8; 4]) -> f64 {
        let pos = match POSITION.get(&alpha) {
            Some(&p) => p,
            None => panic!("derivative order beyond jet order 4"),
        };
        let scale: f64 = alpha.iter().map(|&a| factorial(a)).product();
        self.c[pos] * scale
    }

    /// First partial in a single variable.
    pub fn d1(&self, v: Var) -> f64 {
        let mut a = [0u8; 4];
        a[v as usize] = 1;
        self.deriv(a)
    }

    /// Second partial d^2/dv dw.
    pub fn d2(&self, v: Var, w: Var) -> f64 {
        let mut a = [0u8; 4];
        a[v as usize] += 1;
        a[w as usize] += 1;
        self.deriv(a)
    }

    pub fn d3(&self, v: Var, w: Var, u: Var) -> f64 {
        let mut a = [0u8; 4];
        a[v as usize] += 1;
        a[w as usize] += 1;
        a[u as usize] += 1;
        self.deriv(a)
    }

    pub fn d4(&self, v: Var, w: Var, u: Var, s: Var) -> f64 {
        let mut a = [0u8; 4];
        a[v as usize] += 1;
        a[w as usize] += 1;
        a[u as usize] += 1;
        a[s as usize] += 1;
        self.deriv(a)
    }

    /// The jet of df/dv as a jet of order 3 (top-order coefficients are
    /// dropped; they read as zero).
    pub fn diff(&self, v: Var) -> Jet4 {
        let vi = v as usize;
        let mut out = Jet4::zero();
        for (i, a) in INDICES.iter().enumerate() {
            if a[vi] == 0 {
                continue;
            }
            let mut b = *a;
            b[vi] -= 1;
            let k = POSITION[&b];
            // d/dv maps c_a x^a -> a_v c_a x^(a - e_v); Taylor scaling gives a_v.
            out.c[k] = self.c[i] * a[vi] as f64;
        }
        out
    }

    pub fn recip(&self) -> Jet4 {
        let f0 = self.c[0];
        let g = *self - Jet4::constant(f0);
        // 1/(f0 + g) = (1/f0) sum (-g/f0)^k, g has no constant term.
        let r = -1.0 / f0;
        let mut acc = Jet4::constant(1.0 / f0);
        let mut pw = Jet4::constant(1.0 / f0);
        for _ in 0..ORDER {
            pw = pw * g * r;
            acc = acc + pw;
        }
        acc
    }

    pub fn powi(&self, n: i32) -> Jet4 {
        if n < 0 {
            return self.recip().powi(-n);
        }
        let mut acc = Jet4::constant(1.0);
        let mut base = *self;
        let mut e = n as u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Compose a univariate function (given by its order-4 Taylor data at
    /// `self.value()`) with this jet.
    pub fn compose1(&self, f: Jet1) -> Jet4 {
        let g = *self - Jet4::constant(self.c[0]);
        let mut acc = Jet4::constant(f.c[0]);
        let mut pw = Jet4::constant(1.0);
        for k in 1..=ORDER {
            pw = pw * g;
            if f.c[k] != 0.0 {
                acc = acc + pw * f.c[k];
            }
        }
        acc
    }

    pub fn is_finite(&self) -> bool {
        self.c.iter().all(|v| v.is_finite())
    }
}

impl Add for Jet4 {
    type Output = Jet4;
    fn add(self, o: Jet4) -> Jet4 {
        let mut c = self.c;
        for k in 0..JET4_LEN {
            c[k] += o.c[k];
        }
        Jet4 { c }
    }
}

impl Sub for Jet4 {
    type Output = Jet4;
    fn sub(self, o: Jet4) -> Jet4 {
        let mut c = self.c;
        for k in 0..JET4_LEN {
            c[k] -= o.c[k];
        }
        Jet4 { c }
    }
}

impl Mul for Jet4 {
    type Output = Jet4;
    fn mul(self, o: Jet4) -> Jet4 {
        let mut c = [0.0; JET4_LEN];
        for &(i, j, k) in PRODUCTS.iter() {
            c[k as usize] += self.c[i as usize] * o.c[j as usize];
        }
        Jet4 { c }
    }
}

impl Div for Jet4 {
    type Output = Jet4;
    fn div(self, o: Jet4) -> Jet4 {
        self * o.recip()
    }
}

impl Neg for Jet4 {
    type Output = Jet4;
    fn neg(self) -> Jet4 {
        let mut c = self.c;
        for v in &mut c {
            *v = -*v;
        }
        Jet4 { c }
    }
}

impl Mul<f64> for Jet4 {
    type Output = Jet4;
    fn mul(self, s: f64) -> Jet4 {
        let mut c = self.c;
        for v in &mut c {
            *v *= s;
        }
        Jet4 { c }
    }
}

impl Add<f64> for Jet4 {
    type Output = Jet4;
    fn add(self, s: f64) -> Jet4 {
        let mut c = self.c;
        c[0] += s;
        Jet4 { c }
    }
}

impl Sub<f64> for Jet4 {
    type Output = Jet4;
    fn sub(self, s: f64) -> Jet4 {
        let mut c = self.c;
        c[0] -= s;
        Jet4 { c }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_matches_hand_expansion() {
        // (t + x)^2 = t^2 + 2tx + x^2
        let t = Jet4::variable(Var::T, 0.0);
        let x = Jet4::variable(Var::X, 0.0);
        let p = (t + x) * (t + x);
        assert_eq!(p.deriv([2, 0, 0, 0]), 2.0);
        assert_eq!(p.deriv([1, 1, 0, 0]), 2.0);
        assert_eq!(p.deriv([0, 2, 0, 0]), 2.0);
        assert_eq!(p.deriv([1, 0, 0, 0]), 0.0);
    }

    #[test]
    fn recip_roundtrip() {
        let x = Jet4::variable(Var::X, 2.0) + Jet4::variable(Var::Y, 0.5) * 3.0;
        let r = x.recip() * x;
        assert!((r.value() - 1.0).abs() < 1e-13);
        assert!(r.d1(Var::X).abs() < 1e-13);
        assert!(r.d2(Var::X, Var::Y).abs() < 1e-12);
    }

    #[test]
    fn mixed_partial_exp_t_times_x() {
        // f = exp(t) * x, d^2 f/dt dx at (0, 1) -> 1 (on the value grid x=1)
        let t = Jet4::variable(Var::T, 0.0);
        let x = Jet4::variable(Var::X, 1.0);
        let f = super::super::exp(t) * x;
        assert!((f.d2(Var::T, Var::X) - 1.0).abs() < 1e-14);
    }
}
