//! Legendre, Jacobi and Chebyshev polynomials via the Rodrigues forms.

/// Legendre polynomial P_n(z), from the coefficients of the Rodrigues form.
pub fn legendre_p(n: u32, z: f64) -> f64 {
    // (z^2-1)^n = sum_r C(n,r) (-1)^r z^(2n-2r); differentiate n times,
    // divide by 2^n n!.
    let n = n as i64;
    let mut acc = 0.0f64;
    for r in 0..=n {
        let pow = 2 * n - 2 * r; // degree before differentiation
        if pow < n {
            continue;
        }
        // d^n/dz^n z^pow = pow!/(pow-n)! z^(pow-n)
        let mut coef = binom(n, r) * if r % 2 == 0 { 1.0 } else { -1.0 };
        for k in 0..n {
            coef *= (pow - k) as f64;
        }
        acc += coef * z.powi((pow - n) as i32);
    }
    let mut denom = 1.0f64;
    for k in 1..=n {
        denom *= 2.0 * k as f64;
    }
    acc / denom
}

fn binom(n: i64, k: i64) -> f64 {
    let mut v = 1.0f64;
    for j in 0..k {
        v *= (n - j) as f64 / (j + 1) as f64;
    }
    v
}

fn falling(a: f64, j: u32) -> f64 {
    let mut v = 1.0;
    for k in 0..j {
        v *= a - k as f64;
    }
    v
}

/// Jacobi polynomial P_k^(alpha,beta)(z) by expanding the Rodrigues form;
/// the expansion is polynomial in z, so the weight factors cancel exactly and
/// the endpoints z = +-1 are fine.
pub fn jacobi_p(alpha: f64, beta: f64, k: u32, z: f64) -> f64 {
    // P = (-2)^(-k)/k! * sum_j C(k,j) (-1)^j fall(alpha+k, j) fall(beta+k, k-j)
    //     (1-z)^(k-j) (1+z)^j
    let mut acc = 0.0f64;
    for j in 0..=k {
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        acc += binom(k as i64, j as i64)
            * sign
            * falling(alpha + k as f64, j)
            * falling(beta + k as f64, k - j)
            * (1.0 - z).powi((k - j) as i32)
            * (1.0 + z).powi(j as i32);
    }
    let mut scale = 1.0f64;
    for i in 1..=k {
        scale *= -2.0 * i as f64;
    }
    acc / scale
}

/// Chebyshev polynomial of the first kind, as the rescaled Jacobi
/// P_k^(-1/2,-1/2).
pub fn chebyshev_t(k: u32, z: f64) -> f64 {
    jacobi_p(-0.5, -0.5, k, z) / binom_real(k as f64 - 0.5, k)
}

/// Chebyshev polynomial of the second kind from P_k^(1/2,1/2).
pub fn chebyshev_u(k: u32, z: f64) -> f64 {
    let mut kfac = 1.0f64;
    for i in 2..=(k + 1) {
        kfac *= i as f64;
    }
    kfac * jacobi_p(0.5, 0.5, k, z) / (binom_real(k as f64 + 0.5, k) * fact(k))
}

fn fact(k: u32) -> f64 {
    (1..=k).map(|i| i as f64).product()
}

fn binom_real(a: f64, k: u32) -> f64 {
    falling(a, k) / fact(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_low_orders() {
        assert_eq!(legendre_p(0, 0.37), 1.0);
        assert!((legendre_p(2, 1.0) - 1.0).abs() < 1e-14);
        let z = 0.3;
        assert!((legendre_p(2, z) - (1.5 * z * z - 0.5)).abs() < 1e-14);
        assert!((legendre_p(3, z) - (2.5 * z * z * z - 1.5 * z)).abs() < 1e-14);
    }

    #[test]
    fn legendre_norm_integral() {
        // int_{-1}^{1} P_3^2 = 2/7 by quadrature
        let n = 40_000;
        let mut s = 0.0;
        for i in 0..n {
            let z = -1.0 + 2.0 * (i as f64 + 0.5) / n as f64;
            let p = legendre_p(3, z);
            s += p * p;
        }
        s *= 2.0 / n as f64;
        assert!((s - 2.0 / 7.0).abs() < 1e-6);
    }

    #[test]
    fn jacobi_degree_zero_is_one() {
        assert_eq!(jacobi_p(0.7, -0.2, 0, 0.4), 1.0);
    }

    #[test]
    fn chebyshev_matches_cosine() {
        let z = 0.3f64;
        assert!((chebyshev_t(2, z) - (2.0 * z * z - 1.0)).abs() < 1e-13);
        assert!((chebyshev_t(2, z) - (2.0 * z.acos()).cos()).abs() < 1e-13);
        assert!((chebyshev_t(5, z) - (5.0 * z.acos()).cos()).abs() < 1e-12);
        // U_2 = 4z^2 - 1
        assert!((chebyshev_u(2, z) - (4.0 * z * z - 1.0)).abs() < 1e-12);
    }

    #[test]
    fn jacobi_orthogonality_by_quadrature() {
        let (alpha, beta) = (0.5, 1.5);
        let n = 60_000;
        let mut s = 0.0;
        for i in 0..n {
            let z = -1.0 + 2.0 * (i as f64 + 0.5) / n as f64;
            s += jacobi_p(alpha, beta, 1, z)
                * jacobi_p(alpha, beta, 2, z)
                * (1.0 - z).powf(alpha)
                * (1.0 + z).powf(beta);
        }
        s *= 2.0 / n as f64;
        assert!(s.abs() < 1e-5, "got {s}");
    }
}
