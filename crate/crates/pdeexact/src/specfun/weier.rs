//! Weierstrass elliptic functions on conjugate-pair lattices.
//!
//! The lattice is spanned by omega1 and omega2 = conj(omega1), which keeps
//! p, g2, g3 real on the real line. Invariants come from ring-ordered lattice
//! sums with Richardson refinement; point values come from the Laurent
//! coefficients generated by the differential equation, after reduction by
//! the real period.

use num::complex::Complex64;
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::sync::Mutex;

use crate::error::{Error, Result};
use crate::jet::{lift, Jet4};
use crate::series::SeriesControl;

/// Half-period pair (omega2 is implicitly the conjugate of omega1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LatticeSpec {
    pub omega1: Complex64,
}

impl LatticeSpec {
    pub fn new(omega1: Complex64) -> Result<Self> {
        if omega1.re == 0.0 || omega1.im == 0.0 {
            return Err(Error::Domain(
                "lattice requires Re(omega1) != 0 and Im(omega1) != 0".into(),
            ));
        }
        Ok(LatticeSpec { omega1 })
    }

    pub fn omega2(&self) -> Complex64 {
        self.omega1.conj()
    }

    /// Real period of the restriction to the real line.
    pub fn real_period(&self) -> f64 {
        2.0 * self.omega1.re.abs()
    }

    /// Distance from the origin to the nearest nonzero lattice point.
    pub fn injectivity_radius(&self) -> f64 {
        let w1 = self.omega1;
        let w2 = self.omega2();
        let candidates = [w1, w2, w1 + w2, w1 - w2, w1 * 2.0, w2 * 2.0];
        candidates
            .iter()
            .map(|c| c.norm())
            .fold(f64::INFINITY, f64::min)
    }
}

/// Ring P_k of the lattice: points on the parallelogram with vertices
/// +-k w1 +- k w2.
fn ring_points(lat: &LatticeSpec, k: i64) -> Vec<Complex64> {
    let w1 = lat.omega1;
    let w2 = lat.omega2();
    let mut pts = Vec::with_capacity(8 * k as usize);
    for r in -k..=k {
        let rf = r as f64;
        let kf = k as f64;
        pts.push(w1 * kf + w2 * rf);
        pts.push(w1 * -kf + w2 * rf);
        if r.abs() != k {
            pts.push(w1 * rf + w2 * kf);
            pts.push(w1 * rf + w2 * -kf);
        }
    }
    pts
}

fn ring_sum_inv_pow(lat: &LatticeSpec, rings: usize, p: i32) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 1..=rings {
        for w in ring_points(lat, k as i64) {
            acc += w.powi(-p);
        }
    }
    acc
}

/// Richardson refinement of the ring-truncated sums (error ~ 1/K^2).
fn extrapolated_sum(lat: &LatticeSpec, base: usize, p: i32) -> Complex64 {
    let s1 = ring_sum_inv_pow(lat, base, p);
    let s2 = ring_sum_inv_pow(lat, 2 * base, p);
    let s4 = ring_sum_inv_pow(lat, 4 * base, p);
    // remove 1/K^2, then 1/K^3
    let t1 = (s2 * 4.0 - s1) / 3.0;
    let t2 = (s4 * 4.0 - s2) / 3.0;
    (t2 * 8.0 - t1) / 7.0
}

#[derive(Debug, Clone)]
pub struct LatticeData {
    pub g2: f64,
    pub g3: f64,
    /// Laurent coefficients c_k for k = 2.., such that
    /// wp(z) = z^-2 + sum_{k>=2} c_k z^(2k-2).
    pub coeffs: Vec<f64>,
}

static CACHE: Lazy<Mutex<HashMap<(u64, u64), LatticeData>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

fn lattice_key(lat: &LatticeSpec) -> (u64, u64) {
    (lat.omega1.re.to_bits(), lat.omega1.im.to_bits())
}

const N_COEFFS: usize = 48;

/// g2 = 60 sum' w^-4 and g3 = 140 sum' w^-6, with the imaginary residue
/// checked small (the conjugate-pair lattice makes them real).
pub fn weierstrass_invariants(lat: &LatticeSpec, ctrl: &SeriesControl) -> Result<(f64, f64)> {
    let data = lattice_data(lat, ctrl)?;
    Ok((data.g2, data.g3))
}

pub fn lattice_data(lat: &LatticeSpec, _ctrl: &SeriesControl) -> Result<LatticeData> {
    if let Some(d) = CACHE.lock().unwrap().get(&lattice_key(lat)) {
        return Ok(d.clone());
    }
    let s4 = extrapolated_sum(lat, 48, 4);
    let s6 = extrapolated_sum(lat, 32, 6);
    let g2c = s4 * 60.0;
    let g3c = s6 * 140.0;
    let scale2 = g2c.norm().max(1.0);
    let scale3 = g3c.norm().max(1.0);
    if g2c.im.abs() > 1e-8 * scale2 || g3c.im.abs() > 1e-8 * scale3 {
        return Err(Error::NoConverge(format!(
            "invariant sums kept imaginary residue: {} {}",
            g2c.im, g3c.im
        )));
    }
    let (g2, g3) = (g2c.re, g3c.re);

    // c_2 = g2/20, c_3 = g3/28, then the quadratic recurrence from the
    // differential equation.
    let mut c = vec![0.0f64; N_COEFFS + 1];
    c[2] = g2 / 20.0;
    c[3] = g3 / 28.0;
    for k in 4..=N_COEFFS {
        let mut s = 0.0;
        for m in 2..=k - 2 {
            s += c[m] * c[k - m];
        }
        c[k] = 3.0 * s / ((2 * k + 1) as f64 * (k - 3) as f64);
    }
    let data = LatticeData {
        g2,
        g3,
        coeffs: c,
    };
    CACHE
        .lock()
        .unwrap()
        .insert(lattice_key(lat), data.clone());
    Ok(data)
}

/// Reduce a real argument into [-p/2, p/2] by the real period.
fn reduce_real(lat: &LatticeSpec, z: f64) -> f64 {
    let p = lat.real_period();
    let mut r = z % p;
    if r > p / 2.0 {
        r -= p;
    }
    if r < -p / 2.0 {
        r += p;
    }
    r
}

fn check_radius(lat: &LatticeSpec, z: Complex64, excl: f64) -> Result<()> {
    let r = z.norm();
    if r < excl * lat.omega1.norm() {
        return Err(Error::Singular(format!("argument within {excl} of a pole")));
    }
    let radius = lat.injectivity_radius();
    if r > 0.97 * radius {
        return Err(Error::Domain(format!(
            "argument {r:.3} outside the series disk (radius {radius:.3}); \
             use a more balanced lattice"
        )));
    }
    Ok(())
}

/// Default pole exclusion radius, in units of |omega1|.
pub const POLE_EXCLUSION: f64 = 1e-3;

/// wp at a complex argument inside the fundamental disk.
pub fn wp_complex(z: Complex64, lat: &LatticeSpec, ctrl: &SeriesControl) -> Result<Complex64> {
    let data = lattice_data(lat, ctrl)?;
    check_radius(lat, z, POLE_EXCLUSION)?;
    let z2 = z * z;
    let mut acc = Complex64::new(0.0, 0.0);
    let mut pw = Complex64::new(1.0, 0.0); // z^(2k-2) starting at k=2 -> z^2
    for k in 2..=N_COEFFS {
        pw *= z2;
        acc += pw * data.coeffs[k];
    }
    Ok(1.0 / z2 + acc)
}

pub fn wp_prime_complex(
    z: Complex64,
    lat: &LatticeSpec,
    ctrl: &SeriesControl,
) -> Result<Complex64> {
    let data = lattice_data(lat, ctrl)?;
    check_radius(lat, z, POLE_EXCLUSION)?;
    let z2 = z * z;
    let mut acc = Complex64::new(0.0, 0.0);
    let mut pw = z; // z^(2k-3) at k = 2 -> z
    for k in 2..=N_COEFFS {
        acc += pw * (data.coeffs[k] * (2 * k - 2) as f64);
        pw *= z2;
    }
    Ok(-2.0 / (z2 * z) + acc)
}

pub fn zeta_complex(z: Complex64, lat: &LatticeSpec, ctrl: &SeriesControl) -> Result<Complex64> {
    let data = lattice_data(lat, ctrl)?;
    check_radius(lat, z, POLE_EXCLUSION)?;
    let z2 = z * z;
    let mut acc = Complex64::new(0.0, 0.0);
    let mut pw = z; // z^(2k-1) at k=2 -> z^3; start from z and multiply first
    for k in 2..=N_COEFFS {
        pw *= z2;
        acc += pw * (data.coeffs[k] / (2 * k - 1) as f64);
    }
    Ok(1.0 / z - acc)
}

pub fn sigma_complex(z: Complex64, lat: &LatticeSpec, ctrl: &SeriesControl) -> Result<Complex64> {
    let data = lattice_data(lat, ctrl)?;
    check_radius(lat, z, 0.0)?;
    let z2 = z * z;
    // ln(sigma/z) = -sum_{k>=2} c_k z^(2k) / (2k (2k-1))
    let mut acc = Complex64::new(0.0, 0.0);
    let mut p = z2 * z2;
    for k in 2..=N_COEFFS {
        acc += p * (data.coeffs[k] / ((2 * k) as f64 * (2 * k - 1) as f64));
        p *= z2;
    }
    Ok(z * (-acc).exp())
}

/// Real-line wp with period reduction.
pub fn wp(z: f64, lat: &LatticeSpec, ctrl: &SeriesControl) -> Result<f64> {
    let zr = reduce_real(lat, z);
    Ok(wp_complex(Complex64::new(zr, 0.0), lat, ctrl)?.re)
}

pub fn wp_prime(z: f64, lat: &LatticeSpec, ctrl: &SeriesControl) -> Result<f64> {
    let zr = reduce_real(lat, z);
    Ok(wp_prime_complex(Complex64::new(zr, 0.0), lat, ctrl)?.re)
}

pub fn zeta_w(z: f64, lat: &LatticeSpec, ctrl: &SeriesControl) -> Result<f64> {
    // zeta is only quasi-periodic; no reduction.
    Ok(zeta_complex(Complex64::new(z, 0.0), lat, ctrl)?.re)
}

pub fn sigma_w(z: f64, lat: &LatticeSpec, ctrl: &SeriesControl) -> Result<f64> {
    Ok(sigma_complex(Complex64::new(z, 0.0), lat, ctrl)?.re)
}

/// Jet of wp(u) through a jet-valued argument.
pub fn wp_jet(u: Jet4, lat: &LatticeSpec, ctrl: &SeriesControl) -> Result<Jet4> {
    let data = lattice_data(lat, ctrl)?;
    let g2 = data.g2;
    let z0 = reduce_real(lat, u.value());
    check_radius(lat, Complex64::new(z0, 0.0), POLE_EXCLUSION)?;
    let p = wp(z0, lat, ctrl)?;
    let dp = wp_prime(z0, lat, ctrl)?;
    let d2 = 6.0 * p * p - g2 / 2.0;
    let d3 = 12.0 * p * dp;
    let d4 = 12.0 * dp * dp + 12.0 * p * d2;
    Ok(lift(&u, |_| [p, dp, d2, d3, d4]))
}

/// The conjugate-pair lattice direction with g2 = 0 at unit |omega1|,
/// found by bisection in arg(omega1) and cached.
pub fn g2_zero_lattice(scale: f64) -> LatticeSpec {
    static ANGLE: Lazy<f64> = Lazy::new(|| {
        let ctrl = SeriesControl::default();
        let g2_at = |theta: f64| {
            let lat = LatticeSpec {
                omega1: Complex64::from_polar(1.0, theta),
            };
            lattice_data(&lat, &ctrl).map(|d| d.g2).unwrap_or(f64::NAN)
        };
        let (mut lo, mut hi) = (0.9, 1.2); // bracket around pi/3
        let (mut flo, _fhi) = (g2_at(lo), g2_at(hi));
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi);
            let fm = g2_at(mid);
            if (fm > 0.0) == (flo > 0.0) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    });
    LatticeSpec {
        omega1: Complex64::from_polar(scale, *ANGLE),
    }
}

/// eta1 w2 - eta2 w1 with eta_r = zeta(w_r / 2), on the basis oriented so
/// that Im(w2/w1) > 0; equals pi*i for any lattice.
pub fn legendre_relation_value(lat: &LatticeSpec, ctrl: &SeriesControl) -> Result<Complex64> {
    let (w1, w2) = {
        let a = lat.omega1;
        let b = lat.omega2();
        if (b / a).im > 0.0 {
            (a, b)
        } else {
            (b, a)
        }
    };
    let eta1 = zeta_complex(w1 / 2.0, lat, ctrl)?;
    let eta2 = zeta_complex(w2 / 2.0, lat, ctrl)?;
    Ok(eta1 * w2 - eta2 * w1)
}

/// Test oracle: the raw symmetric lattice sum for wp, ring-ordered with
/// Richardson refinement. Slow; used to cross-check the series route.
pub fn wp_lattice_sum_oracle(z: f64, lat: &LatticeSpec, rings: usize) -> f64 {
    let zc = Complex64::new(z, 0.0);
    let partial = |kmax: usize| {
        let mut acc = 1.0 / (zc * zc);
        for k in 1..=kmax {
            for w in ring_points(lat, k as i64) {
                acc += 1.0 / ((zc - w) * (zc - w)) - 1.0 / (w * w);
            }
        }
        acc
    };
    let s1 = partial(rings);
    let s2 = partial(2 * rings);
    let s4 = partial(4 * rings);
    let t1 = (s2 * 4.0 - s1) / 3.0;
    let t2 = (s4 * 4.0 - s2) / 3.0;
    ((t2 * 8.0 - t1) / 7.0).re
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lat() -> LatticeSpec {
        LatticeSpec::new(Complex64::new(1.0, 1.0)).unwrap()
    }

    #[test]
    fn invariants_are_real_and_scale() {
        let ctrl = SeriesControl::default();
        let (g2, g3) = weierstrass_invariants(&lat(), &ctrl).unwrap();
        // homogeneity: g2(c w) = c^-4 g2(w) at c = 2
        let lat2 = LatticeSpec::new(Complex64::new(2.0, 2.0)).unwrap();
        let (g2b, g3b) = weierstrass_invariants(&lat2, &ctrl).unwrap();
        assert!((g2b - g2 / 16.0).abs() < 1e-9 * g2.abs().max(1.0));
        assert!((g3b - g3 / 64.0).abs() < 1e-9 * g3.abs().max(1.0));
    }

    #[test]
    fn wp_is_even_and_satisfies_ode() {
        let ctrl = SeriesControl::default();
        let l = lat();
        let (g2, g3) = weierstrass_invariants(&l, &ctrl).unwrap();
        let z = 0.37;
        assert!((wp(z, &l, &ctrl).unwrap() - wp(-z, &l, &ctrl).unwrap()).abs() < 1e-12);
        let z = 0.5;
        let p = wp(z, &l, &ctrl).unwrap();
        let dp = wp_prime(z, &l, &ctrl).unwrap();
        let lhs = dp * dp;
        let rhs = 4.0 * p * p * p - g2 * p - g3;
        assert!((lhs - rhs).abs() < 1e-8 * lhs.abs().max(1.0), "{lhs} vs {rhs}");
    }

    #[test]
    fn series_matches_lattice_sum_oracle() {
        let ctrl = SeriesControl::default();
        let l = lat();
        for &z in &[0.3, 0.5, 0.9] {
            let a = wp(z, &l, &ctrl).unwrap();
            let b = wp_lattice_sum_oracle(z, &l, 40);
            assert!((a - b).abs() < 2e-6 * a.abs().max(1.0), "z={z}: {a} vs {b}");
        }
    }

    #[test]
    fn legendre_relation() {
        let ctrl = SeriesControl::default();
        let val = legendre_relation_value(&lat(), &ctrl).unwrap();
        assert!((val.re).abs() < 1e-8, "re = {}", val.re);
        assert!((val.im - std::f64::consts::PI).abs() < 1e-8, "im = {}", val.im);
    }

    #[test]
    fn sigma_log_derivative_is_zeta() {
        let ctrl = SeriesControl::default();
        let l = lat();
        let z = 0.4;
        let h = 1e-5;
        let num =
            (sigma_w(z + h, &l, &ctrl).unwrap().ln() - sigma_w(z - h, &l, &ctrl).unwrap().ln())
                / (2.0 * h);
        assert!((num - zeta_w(z, &l, &ctrl).unwrap()).abs() < 1e-7);
    }

    #[test]
    fn g2_zero_lattice_is_equianharmonic() {
        let ctrl = SeriesControl::default();
        let l = g2_zero_lattice(1.0);
        let (g2, g3) = weierstrass_invariants(&l, &ctrl).unwrap();
        assert!(g2.abs() < 1e-8, "g2 = {g2}");
        assert!(g3.abs() > 1.0);
        // angle should be pi/3 for the conjugate-pair equianharmonic lattice
        let theta = l.omega1.arg();
        assert!((theta - std::f64::consts::FRAC_PI_3).abs() < 1e-6);
    }
}
