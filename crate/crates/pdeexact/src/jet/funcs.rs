//! Elementary functions lifted to jets.

use super::{Jet1, Jet4};

/// Lift a univariate function, described by its value and first four
/// derivatives at a point, onto a [`Jet4`] argument.
pub fn lift(u: &Jet4, derivs: impl Fn(f64) -> [f64; 5]) -> Jet4 {
    u.compose1(Jet1::from_derivs(derivs(u.value())))
}

pub fn lift1(u: &Jet1, derivs: impl Fn(f64) -> [f64; 5]) -> Jet1 {
    let d = Jet1::from_derivs(derivs(u.value()));
    // compose: f(u) with (u - u0) nilpotent to order 4
    let g = *u - Jet1::constant(u.value());
    let mut acc = Jet1::constant(d.c[0]);
    let mut pw = Jet1::constant(1.0);
    for k in 1..5 {
        pw = pw * g;
        acc = acc + pw * d.c[k];
    }
    acc
}

fn exp_d(x: f64) -> [f64; 5] {
    let e = x.exp();
    [e, e, e, e, e]
}

fn sin_d(x: f64) -> [f64; 5] {
    let (s, c) = x.sin_cos();
    [s, c, -s, -c, s]
}

fn cos_d(x: f64) -> [f64; 5] {
    let (s, c) = x.sin_cos();
    [c, -s, -c, s, c]
}

fn sinh_d(x: f64) -> [f64; 5] {
    let (s, c) = (x.sinh(), x.cosh());
    [s, c, s, c, s]
}

fn cosh_d(x: f64) -> [f64; 5] {
    let (s, c) = (x.sinh(), x.cosh());
    [c, s, c, s, c]
}

fn ln_d(x: f64) -> [f64; 5] {
    let i = 1.0 / x;
    [x.ln(), i, -i * i, 2.0 * i * i * i, -6.0 * i * i * i * i]
}

fn sqrt_d(x: f64) -> [f64; 5] {
    let s = x.sqrt();
    [
        s,
        0.5 / s,
        -0.25 / (s * x),
        0.375 / (s * x * x),
        -0.9375 / (s * x * x * x),
    ]
}

fn atan_d(x: f64) -> [f64; 5] {
    let d = 1.0 + x * x;
    let d2 = d * d;
    let d3 = d2 * d;
    let d4 = d3 * d;
    [
        x.atan(),
        1.0 / d,
        -2.0 * x / d2,
        (6.0 * x * x - 2.0) / d3,
        (24.0 * x - 24.0 * x * x * x) / d4,
    ]
}

/// tan via tan' = 1 + tan^2 (derivatives generated by the chain rule).
fn tan_d(x: f64) -> [f64; 5] {
    let t = x.tan();
    let d1 = 1.0 + t * t;
    let d2 = 2.0 * t * d1;
    let d3 = 2.0 * d1 * d1 + 2.0 * t * d2;
    let d4 = 6.0 * d1 * d2 + 2.0 * t * d3;
    [t, d1, d2, d3, d4]
}

/// tanh' = 1 - tanh^2.
fn tanh_d(x: f64) -> [f64; 5] {
    let t = x.tanh();
    let d1 = 1.0 - t * t;
    let d2 = -2.0 * t * d1;
    let d3 = -2.0 * d1 * d1 - 2.0 * t * d2;
    let d4 = -6.0 * d1 * d2 - 2.0 * t * d3;
    [t, d1, d2, d3, d4]
}

/// coth' = 1 - coth^2.
fn coth_d(x: f64) -> [f64; 5] {
    let t = x.cosh() / x.sinh();
    let d1 = 1.0 - t * t;
    let d2 = -2.0 * t * d1;
    let d3 = -2.0 * d1 * d1 - 2.0 * t * d2;
    let d4 = -6.0 * d1 * d2 - 2.0 * t * d3;
    [t, d1, d2, d3, d4]
}

/// sech'' = 2 sech^3 - sech.
fn sech_d(x: f64) -> [f64; 5] {
    let s = 1.0 / x.cosh();
    let t = x.tanh();
    let d1 = -s * t;
    let d2 = 2.0 * s * s * s - s;
    let d3 = (6.0 * s * s - 1.0) * d1;
    let d4 = 12.0 * s * d1 * d1 + (6.0 * s * s - 1.0) * d2;
    [s, d1, d2, d3, d4]
}

/// csch'' = 2 csch^3 + csch.
fn csch_d(x: f64) -> [f64; 5] {
    let s = 1.0 / x.sinh();
    let c = x.cosh() / x.sinh();
    let d1 = -s * c;
    let d2 = 2.0 * s * s * s + s;
    let d3 = (6.0 * s * s + 1.0) * d1;
    let d4 = 12.0 * s * d1 * d1 + (6.0 * s * s + 1.0) * d2;
    [s, d1, d2, d3, d4]
}

/// sec'' = 2 sec^3 - sec.
fn sec_d(x: f64) -> [f64; 5] {
    let s = 1.0 / x.cos();
    let t = x.tan();
    let d1 = s * t;
    let d2 = 2.0 * s * s * s - s;
    let d3 = (6.0 * s * s - 1.0) * d1;
    let d4 = 12.0 * s * d1 * d1 + (6.0 * s * s - 1.0) * d2;
    [s, d1, d2, d3, d4]
}

/// csc'' = 2 csc^3 - csc.
fn csc_d(x: f64) -> [f64; 5] {
    let s = 1.0 / x.sin();
    let c = x.cos() / x.sin();
    let d1 = -s * c;
    let d2 = 2.0 * s * s * s - s;
    let d3 = (6.0 * s * s - 1.0) * d1;
    let d4 = 12.0 * s * d1 * d1 + (6.0 * s * s - 1.0) * d2;
    [s, d1, d2, d3, d4]
}

macro_rules! jet_fn {
    ($name:ident, $dfn:ident) => {
        pub fn $name(u: Jet4) -> Jet4 {
            lift(&u, $dfn)
        }
    };
}

jet_fn!(exp, exp_d);
jet_fn!(sin, sin_d);
jet_fn!(cos, cos_d);
jet_fn!(sinh, sinh_d);
jet_fn!(cosh, cosh_d);
jet_fn!(ln, ln_d);
jet_fn!(sqrt, sqrt_d);
jet_fn!(atan, atan_d);
jet_fn!(tan, tan_d);
jet_fn!(tanh, tanh_d);
jet_fn!(coth, coth_d);
jet_fn!(sech, sech_d);
jet_fn!(csch, csch_d);
jet_fn!(sec, sec_d);
jet_fn!(csc, csc_d);

/// Real power u^p for u > 0.
pub fn powf(u: Jet4, p: f64) -> Jet4 {
    lift(&u, |x| {
        let v = x.powf(p);
        [
            v,
            p * x.powf(p - 1.0),
            p * (p - 1.0) * x.powf(p - 2.0),
            p * (p - 1.0) * (p - 2.0) * x.powf(p - 3.0),
            p * (p - 1.0) * (p - 2.0) * (p - 3.0) * x.powf(p - 4.0),
        ]
    })
}

/// atan2(y, x) as a jet (branch chosen from the values).
pub fn atan2(y: Jet4, x: Jet4) -> Jet4 {
    // d/ds atan2(y, x) = (x y' - y x') / (x^2 + y^2); build from atan of y/x
    // shifted by the right constant so the value matches atan2.
    let base = y.value().atan2(x.value());
    let raw = atan(y / x);
    raw - raw.value() + base
}

macro_rules! jet1_fn {
    ($name:ident, $dfn:ident) => {
        pub fn $name(u: Jet1) -> Jet1 {
            lift1(&u, $dfn)
        }
    };
}

jet1_fn!(exp1, exp_d);
jet1_fn!(sin1, sin_d);
jet1_fn!(cos1, cos_d);
jet1_fn!(sqrt1, sqrt_d);
jet1_fn!(ln1, ln_d);
jet1_fn!(sinh1, sinh_d);
jet1_fn!(cosh1, cosh_d);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jet::Var;

    fn fd4(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
        // fourth central difference for the 4th derivative
        (f(x + 2.0 * h) - 4.0 * f(x + h) + 6.0 * f(x) - 4.0 * f(x - h) + f(x - 2.0 * h))
            / h.powi(4)
    }

    #[test]
    fn tan_derivs_match_finite_differences() {
        let x0 = 0.3;
        let j = tan(Jet4::variable(Var::X, x0));
        let d4 = fd4(f64::tan, x0, 1e-2);
        assert!((j.deriv([0, 4, 0, 0]) - d4).abs() < 3e-3 * d4.abs().max(1.0));
    }

    #[test]
    fn sech_second_derivative_identity() {
        let x0 = 0.7;
        let j = sech(Jet4::variable(Var::X, x0));
        let s = 1.0 / x0.cosh();
        assert!((j.deriv([0, 2, 0, 0]) - (2.0 * s * s * s - s)).abs() < 1e-12);
    }

    #[test]
    fn sin_jet_coefficients() {
        let j = sin(Jet4::variable(Var::T, 0.0));
        assert!((j.c[0] - 0.0).abs() < 1e-15);
        assert!((j.deriv([1, 0, 0, 0]) - 1.0).abs() < 1e-15);
        assert!((j.deriv([3, 0, 0, 0]) + 1.0).abs() < 1e-15);
    }
}
