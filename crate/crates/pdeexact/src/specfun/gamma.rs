//! Gamma and beta functions.
//!
//! Two independent evaluation routes are kept deliberately: the reciprocal
//! Weierstrass product (with analytically resummed tail) as the reference,
//! and the limit quotient accelerated by Richardson extrapolation. Both are
//! cross-checked in tests to 1e-10.

use crate::error::{Error, Result};
use crate::series::SeriesControl;

/// Euler-Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Pochhammer symbol (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1.
pub fn pochhammer(a: f64, n: u32) -> f64 {
    let mut p = 1.0;
    for k in 0..n {
        p *= a + k as f64;
    }
    p
}

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && (x - x.round()).abs() < 1e-12
}

/// Hurwitz-style tail sum zeta(k, a) = sum_{n>=0} (n+a)^-k via Euler-Maclaurin.
fn hurwitz_tail(k: u32, a: f64) -> f64 {
    // sum_{n >= 0} (n+a)^{-k} with a moderately large; direct head + E-M tail.
    let m = 8usize;
    let mut s = 0.0;
    for n in 0..m {
        s += (a + n as f64).powi(-(k as i32));
    }
    let b = a + m as f64;
    let k = k as f64;
    // integral + half-term + Bernoulli corrections
    s += b.powf(1.0 - k) / (k - 1.0) + 0.5 * b.powf(-k) + (k / 12.0) * b.powf(-k - 1.0)
        - k * (k + 1.0) * (k + 2.0) / 720.0 * b.powf(-k - 3.0);
    s
}

/// ln Gamma for x in (1, 2], by the reciprocal product with resummed tail.
fn ln_gamma_core_product(x: f64, n_terms: usize) -> f64 {
    // -ln G(x) = gamma x + ln x + sum_{n=1..N} [ln(1+x/n) - x/n] + tail
    let mut s = EULER_GAMMA * x + x.ln();
    for n in 1..=n_terms {
        let r = x / n as f64;
        s += r.ln_1p() - r;
    }
    // tail: sum_{n>N} [ln(1+x/n) - x/n] = sum_{k>=2} (-1)^(k+1) x^k/k * zeta(k, N+1)
    let a = (n_terms + 1) as f64;
    let mut k = 2u32;
    loop {
        let term = (-1.0f64).powi(k as i32 + 1) * x.powi(k as i32) / k as f64
            * hurwitz_tail(k, a);
        s += term;
        if term.abs() < 1e-17 || k > 60 {
            break;
        }
        k += 1;
    }
    -s
}

/// Reference gamma: reciprocal product route, shifted into (1, 2] by the
/// recurrence G(x+1) = x G(x).
pub fn gamma_product(x: f64, ctrl: &SeriesControl) -> Result<f64> {
    if is_nonpositive_integer(x) {
        return Err(Error::Singular(format!("gamma pole at {x}")));
    }
    let n_terms = ctrl.max_terms.min(96).max(32);
    // shift x into (1, 2]
    let mut shift = 1.0f64; // G(x) = G(x + m) / prod
    let mut y = x;
    while y <= 1.0 {
        shift *= y;
        y += 1.0;
    }
    while y > 2.0 {
        y -= 1.0;
        shift /= y;
    }
    let lg = ln_gamma_core_product(y, n_terms);
    Ok(lg.exp() / shift)
}

/// Limit-quotient gamma with Richardson acceleration; n grows until the
/// extrapolated sequence settles within `ctrl.rel_tol`.
pub fn gamma_limit(x: f64, ctrl: &SeriesControl) -> Result<f64> {
    if is_nonpositive_integer(x) {
        return Err(Error::Singular(format!("gamma pole at {x}")));
    }
    let mut shift = 1.0f64;
    let mut y = x;
    while y <= 1.0 {
        shift *= y;
        y += 1.0;
    }
    while y > 2.0 {
        y -= 1.0;
        shift /= y;
    }
    // G_n(y) = n! n^(y-1) / (y)_n computed in log space; successive column
    // Richardson in 1/n (error expansion in integer powers of 1/n).
    let levels = 7usize;
    let mut vals = Vec::with_capacity(levels);
    let mut n = 64usize;
    for _ in 0..levels {
        let mut lg = 0.0f64;
        for k in 1..=n {
            lg += (k as f64).ln() - (y + (k - 1) as f64).ln();
        }
        lg += (y - 1.0) * (n as f64).ln();
        vals.push(lg.exp());
        n *= 2;
    }
    // Neville-style table: remove 1/n, 1/n^2, ...
    let mut t = vals.clone();
    for j in 1..levels {
        for i in (j..levels).rev() {
            let f = 2f64.powi(j as i32);
            t[i] = (f * t[i] - t[i - 1]) / (f - 1.0);
        }
    }
    let est = t[levels - 1];
    let prev = t[levels - 2];
    if (est - prev).abs() > ctrl.rel_tol.max(1e-12) * est.abs() {
        return Err(Error::NoConverge(format!(
            "gamma limit form stalled at {est} vs {prev}"
        )));
    }
    Ok(est / shift)
}

/// Gamma(x), via the reference product route.
pub fn gamma(x: f64, ctrl: &SeriesControl) -> Result<f64> {
    gamma_product(x, ctrl)
}

/// B(x, y) = Gamma(x) Gamma(y) / Gamma(x+y), for x, y > 0.
pub fn beta(x: f64, y: f64, ctrl: &SeriesControl) -> Result<f64> {
    if x <= 0.0 || y <= 0.0 {
        return Err(Error::Domain(format!("beta needs positive arguments ({x}, {y})")));
    }
    Ok(gamma(x, ctrl)? * gamma(y, ctrl)? / gamma(x + y, ctrl)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctrl() -> SeriesControl {
        SeriesControl::default()
    }

    #[test]
    fn gamma_half_is_sqrt_pi() {
        let g = gamma(0.5, &ctrl()).unwrap();
        assert!((g - std::f64::consts::PI.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn gamma_of_five_is_24() {
        assert!((gamma(5.0, &ctrl()).unwrap() - 24.0).abs() < 1e-11);
    }

    #[test]
    fn recurrence_at_3_5() {
        let c = ctrl();
        let lhs = gamma(3.5, &c).unwrap();
        let rhs = 2.5 * gamma(2.5, &c).unwrap();
        assert!((lhs - rhs).abs() < 1e-10 * lhs.abs());
    }

    #[test]
    fn product_and_limit_routes_agree() {
        let c = ctrl();
        for &x in &[0.3, 0.5, 1.7, 3.25, 6.5, 9.9] {
            let a = gamma_product(x, &c).unwrap();
            let b = gamma_limit(x, &c).unwrap();
            assert!(
                (a - b).abs() < 1e-10 * a.abs(),
                "routes disagree at {x}: {a} vs {b}"
            );
        }
    }

    #[test]
    fn pole_is_an_error() {
        assert!(gamma(-3.0, &ctrl()).is_err());
        assert!(gamma(0.0, &ctrl()).is_err());
    }

    #[test]
    fn beta_identities() {
        let c = ctrl();
        assert!((beta(1.0, 1.0, &c).unwrap() - 1.0).abs() < 1e-12);
        assert!((beta(4.0, 1.0, &c).unwrap() - 0.25).abs() < 1e-12);
        // B(2,3) against direct quadrature of the defining integral
        let n = 20_000;
        let mut q = 0.0;
        for i in 0..n {
            let t = (i as f64 + 0.5) / n as f64;
            q += t * (1.0 - t) * (1.0 - t);
        }
        q /= n as f64;
        assert!((beta(2.0, 3.0, &c).unwrap() - q).abs() < 1e-8);
        assert!((beta(2.0, 3.0, &c).unwrap() - 1.0 / 12.0).abs() < 1e-12);
    }

    #[test]
    fn pochhammer_basics() {
        assert_eq!(pochhammer(7.5, 0), 1.0);
        assert_eq!(pochhammer(1.0, 5), 120.0);
        assert_eq!(pochhammer(3.0, 4), 360.0);
    }
}
