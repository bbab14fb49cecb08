//! Exact polynomial solution bases beyond the plain flag generator: the
//! dissipative wave equation, the Klein-Gordon equation on the
//! trig-polynomial algebra, and the axisymmetric (Euler-Poisson-Darboux
//! type) equation on the t^rho-graded algebra.

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::flag::GradedBound;
use crate::exact::poly::{rat_int, Rat, RationalPoly};

fn fact_rat(n: u32) -> Rat {
    let mut v = Rat::one();
    for k in 2..=n {
        v *= rat_int(k as i64);
    }
    v
}

fn binom_rat(n: u32, k: u32) -> Rat {
    if k > n {
        return Rat::zero();
    }
    fact_rat(n) / (fact_rat(k) * fact_rat(n - k))
}

/// Solve (a d/dt + d^2/dt^2)(f) = g exactly for the unique f in R[t] t.
fn solve_dissipative_step(a: &Rat, g: &[Rat]) -> Vec<Rat> {
    // g[j] is the coefficient of t^j; result b[i] for i = 1..=deg+1 with
    // i (a b_i + (i+1) b_{i+1}) = g_{i-1}.
    let deg = g.len(); // highest power + 1
    let mut b = vec![Rat::zero(); deg + 2];
    for i in (1..=deg).rev() {
        let gi = g[i - 1].clone();
        let next = b[i + 1].clone() * rat_int((i + 1) as i64);
        b[i] = (gi / rat_int(i as i64) - next) / a.clone();
    }
    b.truncate(deg + 1);
    b
}

/// xi_{a, iota}(t): iterated right inverse of a d_t + d_t^2 applied to 1,
/// as coefficients of t^0..t^iota.
pub fn xi_poly(a: &Rat, iota: usize) -> Vec<Rat> {
    let mut cur = vec![Rat::one()]; // xi_0 = 1
    for _ in 0..iota {
        cur = solve_dissipative_step(a, &cur);
    }
    cur
}

/// Check (a d_t + d_t^2)(xi_{a,i}) = xi_{a,i-1} exactly for all i <= iota_max.
pub fn xi_recurrence_check(a: &Rat, iota_max: usize) -> bool {
    if a.is_zero() {
        return false;
    }
    let mut prev = vec![Rat::one()];
    for _ in 1..=iota_max {
        let cur = solve_dissipative_step(a, &prev);
        // apply d = a d_t + d_t^2
        let mut img = vec![Rat::zero(); cur.len()];
        for (j, c) in cur.iter().enumerate() {
            if j >= 1 {
                img[j - 1] = img[j - 1].clone() + a.clone() * c.clone() * rat_int(j as i64);
            }
            if j >= 2 {
                img[j - 2] =
                    img[j - 2].clone() + c.clone() * rat_int((j * (j - 1)) as i64);
            }
        }
        img.truncate(prev.len().max(1));
        let mut want = prev.clone();
        want.resize(img.len(), Rat::zero());
        if img != want {
            return false;
        }
        prev = cur;
    }
    true
}

/// Basis elements of the dissipative wave equation
/// u_tt + u_t - Delta u = 0 in variables (t, x_1..x_n).
pub fn dissipative_basis(n_vars: usize, bound: &GradedBound) -> Result<Vec<RationalPoly>> {
    if bound.caps.len() != n_vars {
        return Err(Error::Shape("bound arity mismatch".into()));
    }
    let nv = n_vars + 1; // variable 0 is t
    let a = Rat::one();
    let mut out = Vec::new();
    let mut tuple = vec![0u32; n_vars];
    enumerate(&bound.caps, &mut tuple, 0, &mut |ell| {
        out.push(dissipative_element(&a, ell, nv));
    });
    let op = dissipative_operator(nv);
    for b in &out {
        let r = apply_linop(&op, b);
        if !r.is_zero() {
            return Err(Error::Shape(format!("dissipative element residual {r}")));
        }
    }
    Ok(out)
}

fn enumerate(caps: &[u32], tuple: &mut Vec<u32>, pos: usize, f: &mut impl FnMut(&[u32])) {
    if pos == caps.len() {
        f(tuple);
        return;
    }
    for v in 0..=caps[pos] {
        tuple[pos] = v;
        enumerate(caps, tuple, pos + 1, f);
    }
}

fn dissipative_element(a: &Rat, ell: &[u32], nv: usize) -> RationalPoly {
    // sum over r_1..r_n of multinom(r) prod (2 r_i)! C(l_i, 2 r_i)
    //   xi_{a, sum r}(t) x^(l - 2r)
    let n = ell.len();
    let mut acc = RationalPoly::zero(nv);
    let mut r = vec![0u32; n];
    let caps: Vec<u32> = ell.iter().map(|&l| l / 2).collect();
    enumerate(&caps, &mut r, 0, &mut |rr| {
        let total: u32 = rr.iter().sum();
        let mut coef = fact_rat(total);
        for &ri in rr.iter() {
            coef /= fact_rat(ri);
        }
        for (i, &ri) in rr.iter().enumerate() {
            coef *= fact_rat(2 * ri) * binom_rat(ell[i], 2 * ri);
        }
        let xi = xi_poly(a, total as usize);
        for (j, c) in xi.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut e = vec![0u32; nv];
            e[0] = j as u32;
            for (i, &ri) in rr.iter().enumerate() {
                e[i + 1] = ell[i] - 2 * ri;
            }
            acc = acc.add(&RationalPoly::monomial(nv, e, coef.clone() * c.clone()));
        }
    });
    acc
}

/// A generic linear constant-coefficient operator: list of (coefficient,
/// derivative multi-index).
type LinOp = Vec<(Rat, Vec<u32>)>;

fn dissipative_operator(nv: usize) -> LinOp {
    let mut op = Vec::new();
    let mut e = vec![0u32; nv];
    e[0] = 2;
    op.push((Rat::one(), e.clone()));
    e[0] = 1;
    op.push((Rat::one(), e.clone()));
    for i in 1..nv {
        let mut e = vec![0u32; nv];
        e[i] = 2;
        op.push((-Rat::one(), e));
    }
    op
}

fn apply_linop(op: &LinOp, p: &RationalPoly) -> RationalPoly {
    let mut out = RationalPoly::zero(p.n_vars);
    for (c, e) in op {
        out = out.add(&p.diff(e).scale(c));
    }
    out
}

// ---------------------------------------------------------------------------
// Klein-Gordon: trig-polynomial algebra
// ---------------------------------------------------------------------------

/// p cos(a t) + q sin(a t) with polynomial p, q in (t, x, y, z).
#[derive(Debug, Clone, PartialEq)]
pub struct TrigPoly {
    pub a: Rat,
    pub cos_part: RationalPoly,
    pub sin_part: RationalPoly,
}

impl TrigPoly {
    pub fn diff_t(&self) -> TrigPoly {
        // d/dt (p cos + q sin) = (p_t + a q) cos + (q_t - a p) sin
        let dt = {
            let mut e = vec![0u32; self.cos_part.n_vars];
            e[0] = 1;
            e
        };
        TrigPoly {
            a: self.a.clone(),
            cos_part: self
                .cos_part
                .diff(&dt)
                .add(&self.sin_part.scale(&self.a)),
            sin_part: self
                .sin_part
                .diff(&dt)
                .sub(&self.cos_part.scale(&self.a)),
        }
    }

    pub fn diff_space(&self, alpha: &[u32]) -> TrigPoly {
        TrigPoly {
            a: self.a.clone(),
            cos_part: self.cos_part.diff(alpha),
            sin_part: self.sin_part.diff(alpha),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.cos_part.is_zero() && self.sin_part.is_zero()
    }

    /// Residual of u_tt - Delta u + a^2 u, exactly on the algebra.
    pub fn klein_gordon_residual(&self) -> TrigPoly {
        let nv = self.cos_part.n_vars;
        let utt = self.diff_t().diff_t();
        let mut lap_cos = RationalPoly::zero(nv);
        let mut lap_sin = RationalPoly::zero(nv);
        for i in 1..nv {
            let mut e = vec![0u32; nv];
            e[i] = 2;
            lap_cos = lap_cos.add(&self.cos_part.diff(&e));
            lap_sin = lap_sin.add(&self.sin_part.diff(&e));
        }
        let a2 = self.a.clone() * self.a.clone();
        TrigPoly {
            a: self.a.clone(),
            cos_part: utt.cos_part.sub(&lap_cos).add(&self.cos_part.scale(&a2)),
            sin_part: utt.sin_part.sub(&lap_sin).add(&self.sin_part.scale(&a2)),
        }
    }

    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        let av = crate::exact::poly::rat_to_f64(&self.a);
        self.cos_part.eval_f64(point) * (av * point[0]).cos()
            + self.sin_part.eval_f64(point) * (av * point[0]).sin()
    }
}

/// Gaussian-rational polynomial in t: re + i im.
#[derive(Debug, Clone)]
struct CxPoly {
    re: Vec<Rat>,
    im: Vec<Rat>,
}

/// Solve (c d_t + d_t^2)(f) = g for complex c = 2 a i, f in C[t] t.
fn solve_complex_step(a2i_im: &Rat, g: &CxPoly) -> CxPoly {
    // c = i * a2 where a2 = 2a (purely imaginary); division by c multiplies
    // by -i / a2.
    let deg = g.re.len().max(g.im.len());
    let mut gre = g.re.clone();
    let mut gim = g.im.clone();
    gre.resize(deg, Rat::zero());
    gim.resize(deg, Rat::zero());
    let mut bre = vec![Rat::zero(); deg + 2];
    let mut bim = vec![Rat::zero(); deg + 2];
    for i in (1..=deg).rev() {
        // i (c b_i + (i+1) b_{i+1}) = g_{i-1}
        // => b_i = (g_{i-1}/i - (i+1) b_{i+1}) / c, with 1/c = -i/a2
        let ii = rat_int(i as i64);
        let nre = gre[i - 1].clone() / ii.clone()
            - bre[i + 1].clone() * rat_int((i + 1) as i64);
        let nim = gim[i - 1].clone() / ii
            - bim[i + 1].clone() * rat_int((i + 1) as i64);
        // (nre + i nim) * (-i / a2) = (nim - i nre)/a2
        bre[i] = nim / a2i_im.clone();
        bim[i] = -nre / a2i_im.clone();
    }
    bre.truncate(deg + 1);
    bim.truncate(deg + 1);
    CxPoly { re: bre, im: bim }
}

/// Trig-polynomial solution pair of the Klein-Gordon equation
/// u_tt - Delta u + a^2 u = 0 for the spatial index tuple ell.
pub fn klein_gordon_pair(a: &Rat, ell: &[u32; 3]) -> Result<(TrigPoly, TrigPoly)> {
    if a.is_zero() {
        return Err(Error::Domain("oscillation constant must be nonzero".into()));
    }
    let nv = 4; // t, x, y, z
    let a2 = a.clone() * rat_int(2);
    // xi_{2ai, r} by the complex recurrence
    let rmax: u32 = ell.iter().map(|&l| l / 2).sum();
    let mut xis: Vec<CxPoly> = vec![CxPoly {
        re: vec![Rat::one()],
        im: vec![Rat::zero()],
    }];
    for r in 1..=rmax {
        let next = solve_complex_step(&a2, &xis[(r - 1) as usize]);
        xis.push(next);
    }
    // A + i B = sum_r multinom (2r_s)! C(l_s, 2r_s) xi_{2ai, sum r} x^(l-2r)
    let mut a_part = RationalPoly::zero(nv);
    let mut b_part = RationalPoly::zero(nv);
    let caps: Vec<u32> = ell.iter().map(|&l| l / 2).collect();
    let mut r = vec![0u32; 3];
    enumerate(&caps, &mut r, 0, &mut |rr| {
        let total: u32 = rr.iter().sum();
        let mut coef = fact_rat(total);
        for &ri in rr.iter() {
            coef /= fact_rat(ri);
        }
        for (i, &ri) in rr.iter().enumerate() {
            coef *= fact_rat(2 * ri) * binom_rat(ell[i], 2 * ri);
        }
        let xi = &xis[total as usize];
        for (j, (cr, ci)) in xi.re.iter().zip(xi.im.iter()).enumerate() {
            if cr.is_zero() && ci.is_zero() {
                continue;
            }
            let mut e = vec![0u32; nv];
            e[0] = j as u32;
            for (i, &ri) in rr.iter().enumerate() {
                e[i + 1] = ell[i] - 2 * ri;
            }
            if !cr.is_zero() {
                a_part = a_part.add(&RationalPoly::monomial(
                    nv,
                    e.clone(),
                    coef.clone() * cr.clone(),
                ));
            }
            if !ci.is_zero() {
                b_part =
                    b_part.add(&RationalPoly::monomial(nv, e, coef.clone() * ci.clone()));
            }
        }
    });
    // e^{iat}(A + iB): real part A cos - B sin, imaginary part A sin + B cos
    let sol1 = TrigPoly {
        a: a.clone(),
        cos_part: a_part.clone(),
        sin_part: b_part.neg(),
    };
    let sol2 = TrigPoly {
        a: a.clone(),
        cos_part: b_part,
        sin_part: a_part,
    };
    for s in [&sol1, &sol2] {
        let r = s.klein_gordon_residual();
        if !r.is_zero() {
            return Err(Error::Shape(format!(
                "klein-gordon element residual: cos {} sin {}",
                r.cos_part, r.sin_part
            )));
        }
    }
    Ok((sol1, sol2))
}

/// All Klein-Gordon pairs within the bound (three spatial caps).
pub fn klein_gordon_basis(a: &Rat, bound: &GradedBound) -> Result<Vec<(TrigPoly, TrigPoly)>> {
    if bound.caps.len() != 3 {
        return Err(Error::Shape("klein-gordon bound needs three caps".into()));
    }
    let mut out = Vec::new();
    let mut t = vec![0u32; 3];
    let mut err = None;
    enumerate(&bound.caps.clone(), &mut t, 0, &mut |ell| {
        if err.is_some() {
            return;
        }
        match klein_gordon_pair(a, &[ell[0], ell[1], ell[2]]) {
            Ok(p) => out.push(p),
            Err(e) => err = Some(e),
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Euler-Poisson-Darboux: t^rho-graded polynomial algebra
// ---------------------------------------------------------------------------

/// sum_k t^(a_k) p_k(x), a_k rational, p_k polynomial in the space
/// variables only.
#[derive(Debug, Clone, PartialEq)]
pub struct TPowPoly {
    /// sorted association exponent -> spatial polynomial
    pub terms: Vec<(Rat, RationalPoly)>,
}

impl TPowPoly {
    pub fn zero() -> Self {
        TPowPoly { terms: Vec::new() }
    }

    fn push(&mut self, a: Rat, p: RationalPoly) {
        if p.is_zero() {
            return;
        }
        for (e, q) in self.terms.iter_mut() {
            if *e == a {
                *q = q.add(&p);
                return;
            }
        }
        self.terms.push((a, p));
    }

    fn normalize(&mut self) {
        self.terms.retain(|(_, p)| !p.is_zero());
        self.terms.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(|(_, p)| p.is_zero())
    }

    /// Residual of t u_tt + lambda u_t - eps t Delta u, exact.
    pub fn epd_residual(&self, lambda: &Rat, eps: i64) -> TPowPoly {
        let mut out = TPowPoly::zero();
        for (a, p) in &self.terms {
            // t d_t^2 + lambda d_t : t^a -> a (a - 1 + lambda) t^(a-1)
            let c = a.clone() * (a.clone() - Rat::one() + lambda.clone());
            if !c.is_zero() {
                out.push(a.clone() - Rat::one(), p.scale(&c));
            }
            // -eps t Delta
            let lap = laplace_space(p);
            out.push(a.clone() + Rat::one(), lap.scale(&rat_int(-eps)));
        }
        out.normalize();
        out
    }

    pub fn eval_f64(&self, t: f64, xs: &[f64]) -> f64 {
        let mut acc = 0.0;
        for (a, p) in &self.terms {
            acc += t.powf(crate::exact::poly::rat_to_f64(a)) * p.eval_f64(xs);
        }
        acc
    }
}

fn laplace_space(p: &RationalPoly) -> RationalPoly {
    let mut out = RationalPoly::zero(p.n_vars);
    for i in 0..p.n_vars {
        let mut e = vec![0u32; p.n_vars];
        e[i] = 2;
        out = out.add(&p.diff(&e));
    }
    out
}

fn laplace_tail(p: &RationalPoly) -> RationalPoly {
    // Delta over variables 2..n (0-indexed: skip variable 0)
    let mut out = RationalPoly::zero(p.n_vars);
    for i in 1..p.n_vars {
        let mut e = vec![0u32; p.n_vars];
        e[i] = 2;
        out = out.add(&p.diff(&e));
    }
    out
}

fn is_negative_integer(r: &Rat) -> Option<i64> {
    if r.denom() == &num::BigInt::from(1) && r.is_negative() {
        use num::ToPrimitive;
        r.numer().to_i64()
    } else {
        None
    }
}

/// phi_m(t) factors (as scalars multiplying t^(2m)).
fn epd_phi(lambda: &Rat, eps: i64, m: u32) -> Rat {
    // eps^m / (m! 2^m prod_{r=0}^{m-1} (lambda + 2r + 1))
    let mut denom = fact_rat(m) * rat_int(2).pow(m as i32);
    for r in 0..m {
        denom *= lambda.clone() + rat_int(2 * r as i64 + 1);
    }
    rat_int(eps).pow(m as i32) / denom
}

fn epd_psi(lambda: &Rat, eps: i64, m: u32) -> Rat {
    // eps^m / (2^m m! prod_{r=1}^m (2r + 1 - lambda)); psi_m multiplies
    // t^(2m + 1 - lambda)
    let mut denom = fact_rat(m) * rat_int(2).pow(m as i32);
    for r in 1..=m {
        denom *= rat_int(2 * r as i64 + 1) - lambda.clone();
    }
    rat_int(eps).pow(m as i32) / denom
}

/// Basis of polynomial-type solutions of t u_tt + lambda u_t - eps t Delta u
/// = 0, dispatched over the three lambda regimes. Residuals are asserted
/// exactly.
pub fn epd_basis(
    lambda: &Rat,
    eps: i64,
    n_vars: usize,
    bound: &GradedBound,
) -> Result<Vec<TPowPoly>> {
    if eps != 1 && eps != -1 {
        return Err(Error::Domain("eps must be +-1".into()));
    }
    if bound.caps.len() != n_vars {
        return Err(Error::Shape("bound arity mismatch".into()));
    }
    let nv = n_vars; // spatial polynomial variables
    let mut out = Vec::new();

    let neg_int = is_negative_integer(lambda);
    let odd_case = neg_int.filter(|k| k % 2 != 0); // lambda = -(2k+1)

    let mut tuple = vec![0u32; n_vars];
    let caps = bound.caps.clone();
    enumerate(&caps, &mut tuple, 0, &mut |ell| {
        if odd_case.is_none() {
            // phi-family: sum_r phi_r(t) Delta^r (x^ell), finite
            let mut u = TPowPoly::zero();
            let mut mono = vec![0u32; nv];
            mono.copy_from_slice(ell);
            let mut cur = RationalPoly::monomial(nv, mono, Rat::one());
            let mut r = 0u32;
            while !cur.is_zero() {
                u.push(rat_int(2 * r as i64), cur.scale(&epd_phi(lambda, eps, r)));
                cur = laplace_space(&cur);
                r += 1;
            }
            u.normalize();
            out.push(u);
        }
        if neg_int.is_some() {
            // psi-family: sum_r psi_r(t) Delta^r (x^ell)
            let mut u = TPowPoly::zero();
            let mut mono = vec![0u32; nv];
            mono.copy_from_slice(ell);
            let mut cur = RationalPoly::monomial(nv, mono, Rat::one());
            let mut r = 0u32;
            let one_minus_lambda = Rat::one() - lambda.clone();
            while !cur.is_zero() {
                u.push(
                    rat_int(2 * r as i64) + one_minus_lambda.clone(),
                    cur.scale(&epd_psi(lambda, eps, r)),
                );
                cur = laplace_space(&cur);
                r += 1;
            }
            u.normalize();
            out.push(u);
        }
        if let Some(neg) = odd_case {
            // lambda = -(2k+1): the truncated phi-family on the x1-corrected
            // monomials, for l1 <= 2k+1
            let k = ((-neg - 1) / 2) as u32;
            if ell[0] <= 2 * k + 1 {
                // inner = sum_r (-1)^r C(k+r, r) x1^(l1+2r)/(l1+2r)! *
                //         Delta_tail^r (x2^l2 ...)
                let mut inner = RationalPoly::zero(nv);
                let mut tailpart = {
                    let mut e = vec![0u32; nv];
                    e[1..].copy_from_slice(&ell[1..]);
                    RationalPoly::monomial(nv, e, Rat::one())
                };
                let mut r = 0u32;
                while !tailpart.is_zero() {
                    let sign = if r % 2 == 0 { Rat::one() } else { -Rat::one() };
                    let mut c = sign * binom_rat(k + r, r);
                    c /= fact_rat(ell[0] + 2 * r);
                    let mut xe = vec![0u32; nv];
                    xe[0] = ell[0] + 2 * r;
                    let x1pow = RationalPoly::monomial(nv, xe, c);
                    inner = inner.add(&x1pow.mul(&tailpart));
                    tailpart = laplace_tail(&tailpart);
                    r += 1;
                }
                let mut u = TPowPoly::zero();
                let mut cur = inner;
                let mut s = 0u32;
                while !cur.is_zero() && s <= k {
                    u.push(rat_int(2 * s as i64), cur.scale(&epd_phi(lambda, eps, s)));
                    cur = laplace_space(&cur);
                    s += 1;
                }
                u.normalize();
                out.push(u);
            }
        }
    });

    for u in &out {
        let r = u.epd_residual(lambda, eps);
        if !r.is_zero() {
            return Err(Error::Shape(format!(
                "epd element residual nonzero: {} terms",
                r.terms.len()
            )));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::rat;

    #[test]
    fn xi_small_cases() {
        let a = rat_int(1);
        assert_eq!(xi_poly(&a, 0), vec![Rat::one()]);
        assert_eq!(xi_poly(&a, 1), vec![Rat::zero(), Rat::one()]);
        // xi_2 = t^2/2 - t for a = 1
        assert_eq!(
            xi_poly(&a, 2),
            vec![Rat::zero(), rat_int(-1), rat(1, 2)]
        );
        // general a: xi_1 = t/a, xi_2 = t^2/(2a^2) - t/a^3
        let a = rat_int(2);
        assert_eq!(xi_poly(&a, 1), vec![Rat::zero(), rat(1, 2)]);
        assert_eq!(xi_poly(&a, 2), vec![Rat::zero(), rat(-1, 8), rat(1, 8)]);
    }

    #[test]
    fn xi_recurrence_holds() {
        assert!(xi_recurrence_check(&rat_int(1), 6));
        assert!(xi_recurrence_check(&rat_int(2), 1));
        assert!(xi_recurrence_check(&rat_int(-3), 5));
    }

    #[test]
    fn dissipative_low_elements() {
        let b = GradedBound { caps: vec![2] };
        let basis = dissipative_basis(1, &b).unwrap();
        // l = 1 -> x1; l = 2 -> x1^2 + 2 xi_{1,1} = x1^2 + 2t
        let x1 = RationalPoly::var(2, 1);
        assert!(basis.contains(&x1));
        let quad = RationalPoly::monomial(2, vec![0, 2], Rat::one())
            .add(&RationalPoly::monomial(2, vec![1, 0], rat_int(2)));
        assert!(basis.contains(&quad), "basis: {basis:?}");
    }

    #[test]
    fn klein_gordon_low_modes() {
        let a = rat_int(3);
        let (c0, s0) = klein_gordon_pair(&a, &[0, 0, 0]).unwrap();
        assert_eq!(c0.cos_part, RationalPoly::one(4));
        assert!(c0.sin_part.is_zero());
        assert!(s0.cos_part.is_zero());
        let (c1, _s1) = klein_gordon_pair(&a, &[1, 0, 0]).unwrap();
        assert_eq!(c1.cos_part, RationalPoly::var(4, 1));
        // l = (2,0,0): residual handled inside the constructor
        klein_gordon_pair(&a, &[2, 0, 0]).unwrap();
    }

    #[test]
    fn epd_simple_cases() {
        // lambda = 1, eps = 1, l = (2,): u = x^2 + t^2/2
        let basis = epd_basis(&rat_int(1), 1, 1, &GradedBound { caps: vec![2] }).unwrap();
        let mut found = false;
        for u in &basis {
            if u.terms.len() == 2 {
                let v = u.eval_f64(0.5, &[2.0]);
                if (v - (4.0 + 0.125)).abs() < 1e-12 {
                    found = true;
                }
            }
        }
        assert!(found);
        // lambda = -2 branch includes psi_0 = t^3
        let basis = epd_basis(&rat_int(-2), 1, 1, &GradedBound { caps: vec![0] }).unwrap();
        let psi0 = basis
            .iter()
            .find(|u| u.terms.len() == 1 && u.terms[0].0 == rat_int(3));
        assert!(psi0.is_some());
    }

    #[test]
    fn epd_odd_lambda_branch() {
        let basis = epd_basis(&rat_int(-3), 1, 2, &GradedBound { caps: vec![2, 2] }).unwrap();
        assert!(!basis.is_empty());
    }
}
