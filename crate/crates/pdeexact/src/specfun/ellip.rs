//! Jacobi elliptic functions sn, cn, dn with modulus m in (0, 1).
//!
//! Here `m` multiplies the quartic as (1 - t^2)(1 - m^2 t^2), i.e. it is the
//! modulus k of the classical notation; the AGM parameter is m^2.

use crate::error::{Error, Result};
use crate::jet::{lift, Jet4};

/// Elliptic modulus, strictly inside (0, 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipticModulus {
    pub m: f64,
}

impl EllipticModulus {
    pub fn new(m: f64) -> Result<Self> {
        if !(m > 0.0 && m < 1.0) {
            return Err(Error::Domain(format!("modulus must lie in (0,1), got {m}")));
        }
        Ok(EllipticModulus { m })
    }
}

/// sn, cn, dn by the descending Landen (AGM) iteration.
pub fn jacobi_elliptic(z: f64, md: EllipticModulus) -> (f64, f64, f64) {
    sncndn(z, 1.0 - md.m * md.m)
}

/// Numerical-Recipes style sncndn; `emmc` is the complementary parameter
/// 1 - m^2.
fn sncndn(uu: f64, emmc: f64) -> (f64, f64, f64) {
    const CA: f64 = 1e-9;
    let mut emc = emmc;
    let mut u = uu;
    if emc == 0.0 {
        let c = 1.0 / u.cosh();
        return (u.tanh(), c, c);
    }
    let mut a = 1.0f64;
    let mut dn = 1.0f64;
    let mut em = [0.0f64; 16];
    let mut en = [0.0f64; 16];
    let mut l = 0usize;
    let mut c = 0.0f64;
    for i in 0..14 {
        l = i;
        em[i] = a;
        emc = emc.sqrt();
        en[i] = emc;
        c = 0.5 * (a + emc);
        if (a - emc).abs() <= CA * a {
            break;
        }
        emc *= a;
        a = c;
    }
    u *= c;
    let mut sn = u.sin();
    let mut cn = u.cos();
    if sn.abs() > 0.0 {
        let mut aa = cn / sn;
        c *= aa;
        for i in (0..=l).rev() {
            let b = em[i];
            aa *= c;
            c *= dn;
            dn = (en[i] + aa) / (b + aa);
            aa = c / b;
        }
        let a2 = 1.0 / (c * c + 1.0).sqrt();
        sn = if sn >= 0.0 { a2 } else { -a2 };
        cn = c * sn;
    }
    (sn, cn, dn)
}

/// Jets of (sn, cn, dn) through a jet-valued argument; the derivative arrays
/// come from the first-order system and the second-derivative identities.
pub fn sn_cn_dn_jet(u: Jet4, md: EllipticModulus) -> (Jet4, Jet4, Jet4) {
    let m2 = md.m * md.m;
    let (s, c, d) = jacobi_elliptic(u.value(), md);
    let sd = [
        s,
        c * d,
        2.0 * m2 * s * s * s - (m2 + 1.0) * s,
        (6.0 * m2 * s * s - (m2 + 1.0)) * c * d,
        12.0 * m2 * s * (c * d) * (c * d)
            + (6.0 * m2 * s * s - (m2 + 1.0)) * (2.0 * m2 * s * s * s - (m2 + 1.0) * s),
    ];
    let cd = [
        c,
        -s * d,
        -2.0 * m2 * c * c * c + (2.0 * m2 - 1.0) * c,
        (-6.0 * m2 * c * c + (2.0 * m2 - 1.0)) * (-s * d),
        -12.0 * m2 * c * (s * d) * (s * d)
            + (-6.0 * m2 * c * c + (2.0 * m2 - 1.0))
                * (-2.0 * m2 * c * c * c + (2.0 * m2 - 1.0) * c),
    ];
    let dd = [
        d,
        -m2 * s * c,
        -2.0 * d * d * d + (2.0 - m2) * d,
        (-6.0 * d * d + (2.0 - m2)) * (-m2 * s * c),
        -12.0 * d * (m2 * s * c) * (m2 * s * c)
            + (-6.0 * d * d + (2.0 - m2)) * (-2.0 * d * d * d + (2.0 - m2) * d),
    ];
    (
        lift(&u, |_| sd),
        lift(&u, |_| cd),
        lift(&u, |_| dd),
    )
}

/// Test oracle: invert the first-kind integral z(x) by bisection in x, where
/// z(x) is evaluated by Gauss-Legendre quadrature.
pub fn sn_by_integral_inversion(z: f64, md: EllipticModulus) -> f64 {
    let m2 = md.m * md.m;
    let integrand = |t: f64| 1.0 / (((1.0 - t * t) * (1.0 - m2 * t * t)).sqrt());
    let z_of = |x: f64| gauss64(0.0, x, integrand);
    // quarter period limits the inversion range
    let quarter = gauss_endpoint(m2);
    let zr = z.rem_euclid(4.0 * quarter);
    // map into [0, K] with sign bookkeeping via symmetry of sn
    let (zz, sign) = if zr <= quarter {
        (zr, 1.0)
    } else if zr <= 2.0 * quarter {
        (2.0 * quarter - zr, 1.0)
    } else if zr <= 3.0 * quarter {
        (zr - 2.0 * quarter, -1.0)
    } else {
        (4.0 * quarter - zr, -1.0)
    };
    let (mut lo, mut hi) = (0.0f64, 1.0 - 1e-15);
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        if z_of(mid) < zz {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    sign * 0.5 * (lo + hi)
}

/// Complete elliptic integral K(m^2) for the oracle, with an endpoint
/// substitution t = sin(theta).
fn gauss_endpoint(m2: f64) -> f64 {
    let f = |theta: f64| 1.0 / (1.0 - m2 * theta.sin().powi(2)).sqrt();
    gauss64(0.0, std::f64::consts::FRAC_PI_2, f)
}

const GL32_X: [f64; 16] = [
    0.048307665687738316,
    0.144471961582796493,
    0.239287362252137075,
    0.331868602282127650,
    0.421351276130635345,
    0.506899908932229390,
    0.587715757240762329,
    0.663044266930215201,
    0.732182118740289680,
    0.794483795967942407,
    0.849367613732569970,
    0.896321155766052124,
    0.934906075937739689,
    0.964762255587506430,
    0.985611511545268335,
    0.997263861849481564,
];
const GL32_W: [f64; 16] = [
    0.096540088514727801,
    0.095638720079274859,
    0.093844399080804566,
    0.091173878695763885,
    0.087652093004403811,
    0.083311924226946755,
    0.078193895787070306,
    0.072345794108848506,
    0.065822222776361847,
    0.058684093478535547,
    0.050998059262376176,
    0.042835898022226681,
    0.034273862913021433,
    0.025392065309262059,
    0.016274394730905671,
    0.007018610009470097,
];

/// 32-point Gauss-Legendre over [a, b], split into two panels for accuracy.
pub fn gauss64(a: f64, b: f64, f: impl Fn(f64) -> f64) -> f64 {
    let panel = |lo: f64, hi: f64| {
        let c = 0.5 * (lo + hi);
        let h = 0.5 * (hi - lo);
        let mut s = 0.0;
        for i in 0..16 {
            s += GL32_W[i] * (f(c + h * GL32_X[i]) + f(c - h * GL32_X[i]));
        }
        s * h
    };
    let mid = 0.5 * (a + b);
    panel(a, mid) + panel(mid, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jet::Var;

    #[test]
    fn zero_argument() {
        let md = EllipticModulus::new(0.5).unwrap();
        let (s, c, d) = jacobi_elliptic(0.0, md);
        assert!(s.abs() < 1e-14 && (c - 1.0).abs() < 1e-14 && (d - 1.0).abs() < 1e-14);
    }

    #[test]
    fn small_modulus_limit_is_sine() {
        let md = EllipticModulus::new(1e-5).unwrap();
        let (s, c, d) = jacobi_elliptic(1.2, md);
        assert!((s - 1.2f64.sin()).abs() < 1e-7);
        assert!((c - 1.2f64.cos()).abs() < 1e-7);
        assert!((d - 1.0).abs() < 1e-7);
    }

    #[test]
    fn large_modulus_limit_is_tanh() {
        let md = EllipticModulus::new(1.0 - 1e-9).unwrap();
        let (s, _c, _d) = jacobi_elliptic(1.2, md);
        assert!((s - 1.2f64.tanh()).abs() < 1e-6);
    }

    #[test]
    fn pythagorean_identities() {
        let md = EllipticModulus::new(0.7).unwrap();
        for &z in &[0.1, 0.9, 2.3, -1.7] {
            let (s, c, d) = jacobi_elliptic(z, md);
            assert!((s * s + c * c - 1.0).abs() < 1e-12);
            assert!((d * d + md.m * md.m * s * s - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn inversion_oracle_agrees() {
        let md = EllipticModulus::new(0.6).unwrap();
        for &z in &[0.3, 0.9, 1.4] {
            let (s, _, _) = jacobi_elliptic(z, md);
            let s2 = sn_by_integral_inversion(z, md);
            assert!((s - s2).abs() < 1e-8, "z={z}: {s} vs {s2}");
        }
    }

    #[test]
    fn sn_second_derivative_identity() {
        let md = EllipticModulus::new(0.8).unwrap();
        let m2 = md.m * md.m;
        let u = Jet4::variable(Var::X, 0.9);
        let (s, _, _) = sn_cn_dn_jet(u, md);
        let v = s.value();
        let d2 = s.deriv([0, 2, 0, 0]);
        assert!((d2 - (2.0 * m2 * v * v * v - (m2 + 1.0) * v)).abs() < 1e-10);
    }

    #[test]
    fn sn_derivative_is_cn_dn() {
        let md = EllipticModulus::new(0.4).unwrap();
        let u = Jet4::variable(Var::X, 0.7);
        let (s, c, d) = sn_cn_dn_jet(u, md);
        assert!((s.d1(Var::X) - c.value() * d.value()).abs() < 1e-12);
    }
}
