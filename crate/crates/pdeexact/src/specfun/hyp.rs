//! Gauss hypergeometric function 2F1 on the real interval |z| < 1, plus the
//! Gauss summation at z = 1.

use crate::error::{Error, Result};
use crate::series::SeriesControl;

use super::gamma::{gamma, pochhammer};

fn neg_int_order(a: f64) -> Option<u32> {
    if a <= 0.0 && (a - a.round()).abs() < 1e-12 {
        Some((-a.round()) as u32)
    } else {
        None
    }
}

/// 2F1(alpha, beta; gamma; z).
///
/// Terminating cases (alpha or beta a nonpositive integer) are summed exactly
/// for any z. Otherwise |z| < 1 sums the defining series, and z = 1 with
/// gamma - alpha - beta > 0 routes to the Gauss closed form. Anything else is
/// a domain error: no analytic continuation is provided.
pub fn hyp2f1(alpha: f64, beta: f64, gam: f64, z: f64, ctrl: &SeriesControl) -> Result<f64> {
    let terminates = neg_int_order(alpha).or_else(|| neg_int_order(beta));
    if let Some(g) = neg_int_order(gam) {
        // Allowed only if the numerator terminates first.
        let ok = terminates.map(|n| n <= g).unwrap_or(false);
        if !ok {
            return Err(Error::Param(format!(
                "2F1 lower parameter {gam} is a nonpositive integer"
            )));
        }
    }

    if let Some(n) = terminates {
        let mut sum = 0.0;
        let mut term = 1.0;
        for k in 0..=n {
            if k > 0 {
                let kf = (k - 1) as f64;
                term *= (alpha + kf) * (beta + kf) / ((kf + 1.0) * (gam + kf)) * z;
            }
            sum += term;
        }
        return Ok(sum);
    }

    if (z - 1.0).abs() < 1e-14 {
        if gam - alpha - beta <= 0.0 {
            return Err(Error::Domain(
                "2F1 at z = 1 requires gamma - alpha - beta > 0".into(),
            ));
        }
        let num = gamma(gam, ctrl)? * gamma(gam - alpha - beta, ctrl)?;
        let den = gamma(gam - alpha, ctrl)? * gamma(gam - beta, ctrl)?;
        return Ok(num / den);
    }

    if z.abs() >= 1.0 {
        return Err(Error::Domain(format!(
            "2F1 series domain is |z| < 1 (got z = {z})"
        )));
    }

    let mut sum = 1.0f64;
    let mut term = 1.0f64;
    for k in 0..ctrl.max_terms {
        let kf = k as f64;
        term *= (alpha + kf) * (beta + kf) / ((kf + 1.0) * (gam + kf)) * z;
        sum += term;
        if term.abs() <= ctrl.rel_tol * sum.abs().max(1e-300) && k > 4 {
            return Ok(sum);
        }
    }
    Err(Error::NoConverge("2F1 series hit max_terms".into()))
}

/// Chu-Vandermonde: 2F1(-n, beta; gamma; 1) = (gamma-beta)_n / (gamma)_n.
pub fn chu_vandermonde(n: u32, beta: f64, gam: f64) -> f64 {
    pochhammer(gam - beta, n) / pochhammer(gam, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctrl() -> SeriesControl {
        SeriesControl::default()
    }

    #[test]
    fn binomial_case() {
        // 2F1(-alpha, beta; beta; -z) = (1+z)^alpha with alpha = 3, z = 0.4
        let v = hyp2f1(-3.0, 2.5, 2.5, -0.4, &ctrl()).unwrap();
        assert!((v - 1.4f64.powi(3)).abs() < 1e-12);
    }

    #[test]
    fn value_at_zero_is_one() {
        let v = hyp2f1(1.3, 0.7, 2.2, 0.0, &ctrl()).unwrap();
        assert!((v - 1.0).abs() < 1e-15);
    }

    #[test]
    fn chu_vandermonde_example() {
        // n = 3, beta = 1, gamma = 5 -> (4)_3/(5)_3 = 120/210 = 4/7
        let v = hyp2f1(-3.0, 1.0, 5.0, 1.0, &ctrl()).unwrap();
        assert!((v - 4.0 / 7.0).abs() < 1e-13);
        assert!((chu_vandermonde(3, 1.0, 5.0) - 4.0 / 7.0).abs() < 1e-15);
    }

    #[test]
    fn log_case() {
        // z * 2F1(1,1;2;-z) = ln(1+z) at z = 0.5
        let v = 0.5 * hyp2f1(1.0, 1.0, 2.0, -0.5, &ctrl()).unwrap();
        assert!((v - 1.5f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn outside_domain_errors() {
        assert!(hyp2f1(0.5, 0.5, 1.5, 1.2, &ctrl()).is_err());
        assert!(hyp2f1(0.5, 0.5, -2.0, 0.3, &ctrl()).is_err());
    }
}
