//! Calogero-Sutherland eigenfunctions: the two-parameter power of the
//! Vandermonde times the symmetric power factor.

use crate::error::{Error, Result};
use crate::jet::{powf, Jet4, Var};

/// Particle count and the two exponents.
#[derive(Debug, Clone, Copy)]
pub struct CsConfig {
    pub n: usize,
    pub mu1: f64,
    pub mu2: f64,
}

impl CsConfig {
    pub fn new(n: usize, mu1: f64, mu2: f64) -> Result<Self> {
        if n < 2 {
            return Err(Error::Domain("need at least two particles".into()));
        }
        Ok(CsConfig { n, mu1, mu2 })
    }

    /// Coupling constant K = 2 mu2 (1 - mu2).
    pub fn coupling(&self) -> f64 {
        2.0 * self.mu2 * (1.0 - self.mu2)
    }

    /// Eigenvalue in the z-form convention:
    /// sum (z d/dz)^2 phi + K sum z_p z_q/(z_p - z_q)^2 phi = nu phi.
    ///
    /// The x-space operator carries an extra factor 4, so its eigenvalue is
    /// `4.0 * self.eigenvalue()`.
    pub fn eigenvalue(&self) -> f64 {
        let n = self.n as f64;
        let (m1, m2) = (self.mu1, self.mu2);
        let choose3 = n * (n - 1.0) * (n - 2.0) / 6.0;
        n * m1 * m1 + n * (n - 1.0) * (m1 + m2 / 2.0) * m2 + 2.0 * choose3 * m2 * m2
    }
}

/// phi(z) = (prod z_i)^mu1 * prod_{p<q} (z_p - z_q)^mu2 and the z-form
/// eigenvalue.
pub fn cs_eigenpair(cfg: &CsConfig, zs: &[f64]) -> Result<(f64, f64)> {
    if zs.len() != cfg.n {
        return Err(Error::Domain(format!(
            "expected {} coordinates, got {}",
            cfg.n,
            zs.len()
        )));
    }
    for (i, &z) in zs.iter().enumerate() {
        if z <= 0.0 {
            return Err(Error::Domain(format!("coordinate {i} must be positive")));
        }
        for &w in &zs[i + 1..] {
            if (z - w).abs() < 1e-12 * z.abs().max(1.0) {
                return Err(Error::Domain("coincident coordinates".into()));
            }
        }
    }
    let mut phi = zs.iter().product::<f64>().powf(cfg.mu1);
    for p in 0..cfg.n {
        for q in p + 1..cfg.n {
            let diff = zs[p] - zs[q];
            // real powers need a positive base; fold the sign out for
            // integer mu2, otherwise require sorted-positive differences
            if diff < 0.0 && cfg.mu2.fract() != 0.0 {
                return Err(Error::Domain(
                    "fractional mu2 requires decreasing coordinates".into(),
                ));
            }
            phi *= if diff < 0.0 {
                let s = if (cfg.mu2 as i64) % 2 == 0 { 1.0 } else { -1.0 };
                s * (-diff).powf(cfg.mu2)
            } else {
                diff.powf(cfg.mu2)
            };
        }
    }
    Ok((phi, cfg.eigenvalue()))
}

/// x-space wrapper: coordinates x_i enter through z_i = exp(2 x_i); the
/// corresponding eigenvalue is 4 nu.
pub fn cs_eigenpair_x(cfg: &CsConfig, xs: &[f64]) -> Result<(f64, f64)> {
    let zs: Vec<f64> = xs.iter().map(|x| (2.0 * x).exp()).collect();
    let (phi, nu) = cs_eigenpair(cfg, &zs)?;
    Ok((phi, 4.0 * nu))
}

/// phi as a jet in up to four coordinates (n <= 4), for residual checks.
pub fn cs_phi_jet(cfg: &CsConfig, zs: &[f64]) -> Result<Jet4> {
    if cfg.n > 4 {
        return Err(Error::Domain("jet residual check supports n <= 4".into()));
    }
    let vars = [Var::T, Var::X, Var::Y, Var::Z];
    let zj: Vec<Jet4> = zs
        .iter()
        .zip(vars.iter())
        .map(|(&z, &v)| Jet4::variable(v, z))
        .collect();
    let mut prod = Jet4::constant(1.0);
    for j in &zj {
        prod = prod * *j;
    }
    let mut phi = powf(prod, cfg.mu1);
    for p in 0..cfg.n {
        for q in p + 1..cfg.n {
            let diff = zj[p] - zj[q];
            if diff.value() <= 0.0 {
                return Err(Error::Domain(
                    "jet check expects decreasing coordinates".into(),
                ));
            }
            phi = phi * powf(diff, cfg.mu2);
        }
    }
    Ok(phi)
}

/// Relative residual of the z-form eigen-equation at the given point.
pub fn cs_residual(cfg: &CsConfig, zs: &[f64]) -> Result<f64> {
    let phi = cs_phi_jet(cfg, zs)?;
    let vars = [Var::T, Var::X, Var::Y, Var::Z];
    let mut h = 0.0f64;
    // sum (z d/dz)^2 = sum z^2 d2 + z d1
    for i in 0..cfg.n {
        let v = vars[i];
        h += zs[i] * zs[i] * phi.d2(v, v) + zs[i] * phi.d1(v);
    }
    let k = cfg.coupling();
    for p in 0..cfg.n {
        for q in p + 1..cfg.n {
            let d = zs[p] - zs[q];
            h += k * zs[p] * zs[q] / (d * d) * phi.value();
        }
    }
    let nu = cfg.eigenvalue();
    let denom = (nu * phi.value()).abs().max(1e-300);
    Ok((h - nu * phi.value()).abs() / denom)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn collapse_when_mu2_zero() {
        let cfg = CsConfig::new(3, 0.7, 0.0).unwrap();
        let (phi, nu) = cs_eigenpair(&cfg, &[3.0, 2.0, 1.0]).unwrap();
        assert!((phi - 6.0f64.powf(0.7)).abs() < 1e-12);
        assert!((nu - 3.0 * 0.49).abs() < 1e-12);
        // x-form eigenvalue is 4 n mu1^2
        let (_, nux) = cs_eigenpair_x(&cfg, &[0.3, 0.1, -0.2]).unwrap();
        assert!((nux - 4.0 * 3.0 * 0.49).abs() < 1e-12);
    }

    #[test]
    fn n2_eigenvalue_matches_reduction() {
        let cfg = CsConfig::new(2, 0.4, 0.3).unwrap();
        let nu = cfg.eigenvalue();
        let (m1, m2) = (0.4, 0.3);
        assert!((nu - (2.0 * m1 * m1 + 2.0 * m1 * m2 + m2 * m2)).abs() < 1e-14);
    }

    #[test]
    fn jet_residual_small() {
        let cfg = CsConfig::new(3, 0.3, 0.7).unwrap();
        let r = cs_residual(&cfg, &[3.0, 2.0, 1.0]).unwrap();
        assert!(r < 1e-9, "residual {r}");
    }

    #[test]
    fn coincident_coordinates_error() {
        let cfg = CsConfig::new(2, 0.5, 0.5).unwrap();
        assert!(cs_eigenpair(&cfg, &[1.0, 1.0]).is_err());
    }
}
