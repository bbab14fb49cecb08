//! The multi-variable entire functions Y_l underlying constant-coefficient
//! fundamental systems: Y_l(y_1..y_m) sums multinomial(iota) * y^iota over
//! all iota in N^m, each term divided by (l + sum_s s*iota_s)!.

use crate::error::{Error, Result};
use crate::series::SeriesControl;

fn factorial(n: usize) -> f64 {
    let mut v = 1.0;
    for k in 2..=n {
        v *= k as f64;
    }
    v
}

/// Enumerate all iota in N^m with sum_s s*iota_s = w, calling `f` with
/// (iota, multinomial(iota)).
fn for_each_weighted(m: usize, w: usize, f: &mut impl FnMut(&[usize], f64)) {
    fn rec(
        s: usize,
        m: usize,
        remaining: usize,
        iota: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize], f64),
    ) {
        if s == m {
            if remaining == 0 {
                let total: usize = iota.iter().sum();
                let mut multi = factorial(total);
                for &i in iota.iter() {
                    multi /= factorial(i);
                }
                f(iota, multi);
            }
            return;
        }
        let part = s + 1; // parts are 1-indexed weights
        let max_count = remaining / part;
        for count in 0..=max_count {
            iota.push(count);
            rec(s + 1, m, remaining - part * count, iota, f);
            iota.pop();
        }
    }
    let mut iota = Vec::with_capacity(m);
    rec(0, m, w, &mut iota, f);
}

/// Y_l(y_1, ..., y_m), summed over total-weight shells.
pub fn ybig(ell: usize, ys: &[f64], ctrl: &SeriesControl) -> Result<f64> {
    let m = ys.len();
    let mut sum = 0.0f64;
    let mut small_run = 0usize;
    for w in 0..ctrl.max_terms {
        let mut shell = 0.0f64;
        for_each_weighted(m, w, &mut |iota, multi| {
            let mut prod = multi;
            for (s, &i) in iota.iter().enumerate() {
                prod *= ys[s].powi(i as i32);
            }
            shell += prod / factorial(ell + w);
        });
        sum += shell;
        // a single small shell can be an accident of sign structure; require
        // m consecutive ones before trusting it
        if shell.abs() < ctrl.rel_tol * sum.abs().max(1e-300) {
            small_run += 1;
            if small_run > m && w > 2 {
                return Ok(sum);
            }
        } else {
            small_run = 0;
        }
    }
    Err(Error::NoConverge("Y series hit max_terms".into()))
}

/// phi_r(x) = x^r Y_r(b_1 x, ..., b_m x^m) and its first four derivatives,
/// by term-wise differentiation of the series.
pub fn ode_fundamental_derivs(
    r: usize,
    bs: &[f64],
    x: f64,
    ctrl: &SeriesControl,
) -> Result<[f64; 5]> {
    let m = bs.len();
    let mut out = [0.0f64; 5];
    let mut small_run = 0usize;
    for w in 0..ctrl.max_terms {
        let mut shell = [0.0f64; 5];
        for_each_weighted(m, w, &mut |iota, multi| {
            let mut coef = multi / factorial(r + w);
            for (s, &i) in iota.iter().enumerate() {
                coef *= bs[s].powi(i as i32);
            }
            let pow = (r + w) as i32;
            for d in 0..5usize {
                if pow < d as i32 {
                    continue;
                }
                let mut fall = 1.0;
                for j in 0..d as i32 {
                    fall *= (pow - j) as f64;
                }
                shell[d] += coef * fall * x.powi(pow - d as i32);
            }
        });
        for d in 0..5 {
            out[d] += shell[d];
        }
        let scale: f64 = out.iter().map(|v| v.abs()).fold(1e-300, f64::max);
        if shell.iter().map(|v| v.abs()).fold(0.0, f64::max) < ctrl.rel_tol * scale {
            small_run += 1;
            if small_run > m && w > 4 + r {
                return Ok(out);
            }
        } else {
            small_run = 0;
        }
    }
    Err(Error::NoConverge("fundamental series hit max_terms".into()))
}

/// phi_r(x): element r of the fundamental system of
/// y^(m) = b_1 y^(m-1) + ... + b_m y.
pub fn ode_fundamental(r: usize, bs: &[f64], x: f64, ctrl: &SeriesControl) -> Result<f64> {
    Ok(ode_fundamental_derivs(r, bs, x, ctrl)?[0])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctrl() -> SeriesControl {
        SeriesControl::default()
    }

    #[test]
    fn y0_single_variable_is_exp() {
        let v = ybig(0, &[1.0], &ctrl()).unwrap();
        assert!((v - std::f64::consts::E).abs() < 1e-12);
    }

    #[test]
    fn y0_two_vars_gives_cos() {
        let x = std::f64::consts::FRAC_PI_3;
        let v = ybig(0, &[0.0, -x * x], &ctrl()).unwrap();
        assert!((v - 0.5).abs() < 1e-12);
    }

    #[test]
    fn y1_two_vars_gives_sinc() {
        let x = std::f64::consts::FRAC_PI_2;
        let v = ybig(1, &[0.0, -x * x], &ctrl()).unwrap();
        assert!((v - x.sin() / x).abs() < 1e-12);
    }

    #[test]
    fn y_at_zero_is_reciprocal_factorial() {
        for ell in 0..6 {
            let v = ybig(ell, &[0.0, 0.0, 0.0], &ctrl()).unwrap();
            assert!((v - 1.0 / factorial(ell)).abs() < 1e-14);
        }
    }

    #[test]
    fn fundamental_exponential() {
        // m = 1, b_1 = 1: phi_0(x) = e^x
        let v = ode_fundamental(0, &[1.0], 0.7, &ctrl()).unwrap();
        assert!((v - 0.7f64.exp()).abs() < 1e-12);
    }

    #[test]
    fn fundamental_trig_pair() {
        // m = 2, (b1, b2) = (0, -1): phi_0 = cos, phi_1 = sin
        let x = 1.1;
        let c = ode_fundamental(0, &[0.0, -1.0], x, &ctrl()).unwrap();
        let s = ode_fundamental(1, &[0.0, -1.0], x, &ctrl()).unwrap();
        assert!((c - x.cos()).abs() < 1e-12);
        assert!((s - x.sin()).abs() < 1e-12);
    }

    #[test]
    fn fundamental_residual_by_termwise_derivatives() {
        // y'' - y' - 6y = 0; phi_0 has phi(0) = 1, phi'(0) = 1
        let bs = [1.0, 6.0];
        let d = ode_fundamental_derivs(0, &bs, 0.4, &ctrl()).unwrap();
        let res = d[2] - d[1] - 6.0 * d[0];
        assert!(res.abs() < 1e-8 * d[2].abs().max(1.0), "res = {res}");
        // cross-check against c1 e^(3x) + c2 e^(-2x) fitted to the actual
        // data phi(0) = 1, phi'(0) = 1: c1 = 3/5, c2 = 2/5
        let x = 0.4f64;
        let exact = (3.0 * (3.0 * x).exp() + 2.0 * (-2.0 * x).exp()) / 5.0;
        assert!((d[0] - exact).abs() < 1e-10, "{} vs {exact}", d[0]);
    }

    #[test]
    fn initial_values_lower_triangular() {
        // d^s phi_r (0) = delta_{r,s} holds for s <= r
        let bs = [0.3, -0.9, 0.2];
        for r in 0..3 {
            let d = ode_fundamental_derivs(r, &bs, 0.0, &ctrl()).unwrap();
            for s in 0..=r {
                let expect = if s == r { 1.0 } else { 0.0 };
                assert!((d[s] - expect).abs() < 1e-13, "r={r} s={s}");
            }
        }
    }
}
