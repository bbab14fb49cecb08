//! Flag differential operators, the right-inverse series, the triangular
//! basis generator, and the exact brute-force kernel oracle.

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::poly::{rat_int, Expo, Rat, RationalPoly};

/// d_1 + f_1 d_2 + ... + f_{n-1} d_n with a designated invertible leading
/// derivative part.
#[derive(Debug, Clone)]
pub struct FlagOperator {
    pub n_vars: usize,
    /// Leading pure-derivative multi-index (the part with declared right
    /// inverse).
    pub leading: Expo,
    /// Tail terms (coefficient, derivative multi-index), in flag order.
    pub tail: Vec<(RationalPoly, Expo)>,
}

impl FlagOperator {
    /// Construct and check triangularity: every later derivative part must
    /// annihilate every earlier tail coefficient.
    pub fn new(n_vars: usize, leading: Expo, tail: Vec<(RationalPoly, Expo)>) -> Result<Self> {
        if leading.len() != n_vars {
            return Err(Error::Shape("leading index arity mismatch".into()));
        }
        for (f, e) in &tail {
            if f.n_vars != n_vars || e.len() != n_vars {
                return Err(Error::Shape("tail arity mismatch".into()));
            }
        }
        for j in 0..tail.len() {
            for (_, e_l) in tail.iter().skip(j + 1) {
                if !tail[j].0.diff(e_l).is_zero() {
                    return Err(Error::Shape(format!(
                        "triangularity violated: tail coefficient {j} not annihilated \
                         by a later derivative part"
                    )));
                }
            }
        }
        Ok(FlagOperator {
            n_vars,
            leading,
            tail,
        })
    }

    /// Apply the operator to a polynomial.
    pub fn apply(&self, p: &RationalPoly) -> RationalPoly {
        let mut out = p.diff(&self.leading);
        for (f, e) in &self.tail {
            out = out.add(&f.mul(&p.diff(e)));
        }
        out
    }

    /// The heat operator d/dt - laplace in the given spatial variables;
    /// variable 0 is t.
    pub fn heat(n_space: usize) -> Self {
        let n = n_space + 1;
        let mut leading = vec![0; n];
        leading[0] = 1;
        let mut tail = Vec::new();
        for i in 1..n {
            let mut e = vec![0; n];
            e[i] = 2;
            tail.push((RationalPoly::constant(n, -Rat::one()), e));
        }
        FlagOperator::new(n, leading, tail).expect("heat operator is triangular")
    }

    /// The Laplace operator in n variables.
    pub fn laplace(n: usize) -> Self {
        let mut leading = vec![0; n];
        leading[0] = 2;
        let mut tail = Vec::new();
        for i in 1..n {
            let mut e = vec![0; n];
            e[i] = 2;
            tail.push((RationalPoly::one(n), e));
        }
        FlagOperator::new(n, leading, tail).expect("laplace operator is triangular")
    }
}

/// Repeated right inverse of the leading pure derivative.
fn integrate_multi(p: &RationalPoly, alpha: &[u32]) -> RationalPoly {
    let mut out = p.clone();
    for (v, &k) in alpha.iter().enumerate() {
        for _ in 0..k {
            out = out.integrate(v);
        }
    }
    out
}

/// Series sum u = sum_i (-T1inv T2)^i (seed) with T1 the leading part and T2
/// the tail; terminates under the weighted grading and is checked exactly.
pub fn right_inverse_series(op: &FlagOperator, seed: &RationalPoly) -> Result<RationalPoly> {
    let mut acc = seed.clone();
    let mut cur = seed.clone();
    let cap = 4 * (seed.total_degree() as usize + 4) * (op.n_vars + 1) + 64;
    for _ in 0..cap {
        // T2 cur
        let mut t2 = RationalPoly::zero(op.n_vars);
        for (f, e) in &op.tail {
            t2 = t2.add(&f.mul(&cur.diff(e)));
        }
        if t2.is_zero() {
            // verify the kernel property exactly
            let resid = op.apply(&acc);
            if resid.is_zero() {
                return Ok(acc);
            }
            return Err(Error::Shape(format!(
                "seed is not in the leading kernel: residual {resid}"
            )));
        }
        cur = integrate_multi(&t2, &op.leading).neg();
        acc = acc.add(&cur);
    }
    Err(Error::NoConverge(
        "right-inverse series did not terminate (grading does not decrease)".into(),
    ))
}

/// Per-variable degree caps for basis enumeration.
#[derive(Debug, Clone)]
pub struct GradedBound {
    pub caps: Vec<u32>,
}

impl GradedBound {
    pub fn uniform(n: usize, cap: u32) -> Self {
        GradedBound {
            caps: vec![cap; n],
        }
    }
}

/// The shape required by the triangular basis generator:
/// d_x1^m1 + f_1 d_x2^m2 + ... + f_{n-1} d_xn^mn with f_j in R[x_1..x_j].
struct FlagShape {
    ms: Vec<u32>,
    fs: Vec<RationalPoly>,
}

fn check_shape(op: &FlagOperator) -> Result<FlagShape> {
    let n = op.n_vars;
    if op.tail.len() + 1 != n {
        return Err(Error::Shape(format!(
            "expected {} tail terms for {} variables",
            n - 1,
            n
        )));
    }
    let mut ms = Vec::with_capacity(n);
    if op.leading.iter().skip(1).any(|&k| k != 0) || op.leading[0] == 0 {
        return Err(Error::Shape("leading part must be a pure power of x1".into()));
    }
    ms.push(op.leading[0]);
    let mut fs = Vec::new();
    for (j, (f, e)) in op.tail.iter().enumerate() {
        let var = j + 1;
        if e.iter().enumerate().any(|(v, &k)| (v == var) == (k == 0)) {
            return Err(Error::Shape(format!(
                "tail {j} must be a pure power of variable {var}"
            )));
        }
        if f.terms.keys().any(|ex| ex[var..].iter().any(|&k| k != 0)) {
            return Err(Error::Shape(format!(
                "tail coefficient {j} must involve only earlier variables"
            )));
        }
        ms.push(e[var]);
        fs.push(f.clone());
    }
    Ok(FlagShape { ms, fs })
}

/// Right inverse d_s^- of the partial operator d_s (1-indexed), built by the
/// recursive series; applied directly to polynomials.
fn d_minus(shape: &FlagShape, s: usize, p: &RationalPoly) -> RationalPoly {
    let n = p.n_vars;
    if s == 1 {
        let mut alpha = vec![0u32; n];
        alpha[0] = shape.ms[0];
        return integrate_multi(p, &alpha);
    }
    // d_s^- = sum_i (-d_{s-1}^- f_{s-1})^i d_{s-1}^- d_{x_s}^(i m_s)
    let m = shape.ms[s - 1];
    let f = &shape.fs[s - 2];
    let mut acc = RationalPoly::zero(n);
    let mut i = 0u32;
    loop {
        let mut alpha = vec![0u32; n];
        alpha[s - 1] = i * m;
        let d = p.diff(&alpha);
        if d.is_zero() && i > 0 {
            break;
        }
        let mut term = d_minus(shape, s - 1, &d);
        for _ in 0..i {
            term = d_minus(shape, s - 1, &f.mul(&term)).neg();
        }
        acc = acc.add(&term);
        i += 1;
        if i > 512 {
            break;
        }
    }
    acc
}

/// sigma_{r+1, l}(h) = sum_s (-d_r^- f_r)^s (h) * d^(s m_{r+1})(x_{r+1}^l).
fn sigma(shape: &FlagShape, r1: usize, ell: u32, h: &RationalPoly) -> RationalPoly {
    // r1 is the paper's r+1 (the variable being introduced), 2-indexed.
    let n = h.n_vars;
    let var = r1 - 1;
    let m = shape.ms[r1 - 1];
    let f = &shape.fs[r1 - 2];
    let mut acc = RationalPoly::zero(n);
    let mut hpart = h.clone();
    let mut s = 0u32;
    loop {
        // d^(s m) (x_var^ell)
        if s * m > ell {
            break;
        }
        let mut c = Rat::one();
        for k in 0..(s * m) {
            c *= rat_int((ell - k) as i64);
        }
        let mut e = vec![0u32; n];
        e[var] = ell - s * m;
        let xpow = RationalPoly::monomial(n, e, c);
        acc = acc.add(&hpart.mul(&xpow));
        // next (-d_r^- f_r) application
        hpart = d_minus(shape, r1 - 1, &f.mul(&hpart)).neg();
        if hpart.is_zero() {
            // remaining terms vanish only if the derivative also dies; the
            // loop cap on s*m > ell already bounds us
        }
        s += 1;
    }
    acc
}

/// Basis elements sigma_{n, l_n} ... sigma_{2, l_2}(x_1^{l_1}) for all index
/// tuples within the bound. Every element is checked to be annihilated
/// exactly.
pub fn flag_basis(op: &FlagOperator, bound: &GradedBound) -> Result<Vec<RationalPoly>> {
    let shape = check_shape(op)?;
    let n = op.n_vars;
    if bound.caps.len() != n {
        return Err(Error::Shape("bound arity mismatch".into()));
    }
    let l1_max = bound.caps[0].min(shape.ms[0] - 1);
    let mut out = Vec::new();
    let mut tuple = vec![0u32; n];
    enumerate_tuples(&bound.caps, l1_max, &mut tuple, 0, &mut |tup| {
        let mut e = vec![0u32; n];
        e[0] = tup[0];
        let mut elem = RationalPoly::monomial(n, e, Rat::one());
        for r1 in 2..=n {
            elem = sigma(&shape, r1, tup[r1 - 1], &elem);
        }
        out.push(elem);
    });
    for b in &out {
        let r = op.apply(b);
        if !r.is_zero() {
            return Err(Error::Shape(format!(
                "basis element not annihilated: residual {r}"
            )));
        }
    }
    Ok(out)
}

fn enumerate_tuples(
    caps: &[u32],
    l1_max: u32,
    tuple: &mut Vec<u32>,
    pos: usize,
    f: &mut impl FnMut(&[u32]),
) {
    if pos == caps.len() {
        f(tuple);
        return;
    }
    let hi = if pos == 0 { l1_max } else { caps[pos] };
    for v in 0..=hi {
        tuple[pos] = v;
        enumerate_tuples(caps, l1_max, tuple, pos + 1, f);
    }
}

/// All monomials in n variables with total degree <= d, in BTreeMap order.
pub fn monomials_up_to(n: usize, d: u32) -> Vec<Expo> {
    let mut out = Vec::new();
    let mut e = vec![0u32; n];
    fn rec(n: usize, d: u32, pos: usize, e: &mut Vec<u32>, out: &mut Vec<Expo>) {
        if pos == n {
            out.push(e.clone());
            return;
        }
        let used: u32 = e[..pos].iter().sum();
        for k in 0..=(d - used) {
            e[pos] = k;
            rec(n, d, pos + 1, e, out);
            e[pos] = 0;
        }
    }
    rec(n, d, 0, &mut e, &mut out);
    out.sort();
    out
}

/// Exact kernel of the operator on polynomials of total degree <= d, by
/// fraction-free elimination over the rationals. Independent of the basis
/// generator: used as its oracle.
pub fn brute_force_kernel(op: &FlagOperator, total_degree: u32) -> Vec<RationalPoly> {
    let n = op.n_vars;
    let monos = monomials_up_to(n, total_degree);
    // image degree can exceed total_degree when tail coefficients raise it
    let extra = op
        .tail
        .iter()
        .map(|(f, _)| f.total_degree())
        .max()
        .unwrap_or(0);
    let out_monos = monomials_up_to(n, total_degree + extra);
    let col_of: std::collections::HashMap<&Expo, usize> =
        out_monos.iter().enumerate().map(|(i, e)| (e, i)).collect();

    // rows: output monomials, columns: input monomials
    let mut a = vec![vec![Rat::zero(); monos.len()]; out_monos.len()];
    for (j, m) in monos.iter().enumerate() {
        let img = op.apply(&RationalPoly::monomial(n, m.clone(), Rat::one()));
        for (e, c) in &img.terms {
            a[col_of[e]][j] = c.clone();
        }
    }
    let null = nullspace(&mut a, monos.len());
    null.into_iter()
        .map(|v| {
            let mut p = RationalPoly::zero(n);
            for (j, c) in v.into_iter().enumerate() {
                if !c.is_zero() {
                    p = p.add(&RationalPoly::monomial(n, monos[j].clone(), c));
                }
            }
            p
        })
        .collect()
}

/// Nullspace of a, returned as coefficient vectors.
fn nullspace(a: &mut [Vec<Rat>], ncols: usize) -> Vec<Vec<Rat>> {
    let nrows = a.len();
    let mut pivot_col_of_row = Vec::new();
    let mut row = 0usize;
    for col in 0..ncols {
        let mut piv = None;
        for r in row..nrows {
            if !a[r][col].is_zero() {
                piv = Some(r);
                break;
            }
        }
        let Some(p) = piv else { continue };
        a.swap(row, p);
        let inv = a[row][col].clone();
        for c in col..ncols {
            a[row][c] = a[row][c].clone() / inv.clone();
        }
        for r in 0..nrows {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..ncols {
                    let sub = f.clone() * a[row][c].clone();
                    a[r][c] = a[r][c].clone() - sub;
                }
            }
        }
        pivot_col_of_row.push(col);
        row += 1;
        if row == nrows {
            break;
        }
    }
    let pivots: std::collections::HashSet<usize> = pivot_col_of_row.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![Rat::zero(); ncols];
        v[free] = Rat::one();
        for (r, &pc) in pivot_col_of_row.iter().enumerate() {
            v[pc] = -a[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Do two polynomial sets span the same subspace? Compared through the
/// reduced row echelon form of their coefficient matrices.
pub fn same_span(a: &[RationalPoly], b: &[RationalPoly], n_vars: usize, max_deg: u32) -> bool {
    let monos = monomials_up_to(n_vars, max_deg);
    let idx: std::collections::HashMap<&Expo, usize> =
        monos.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let to_rows = |set: &[RationalPoly]| -> Option<Vec<Vec<Rat>>> {
        let mut rows = Vec::new();
        for p in set {
            let mut row = vec![Rat::zero(); monos.len()];
            for (e, c) in &p.terms {
                let &i = idx.get(e)?;
                row[i] = c.clone();
            }
            rows.push(row);
        }
        Some(rows)
    };
    let (Some(mut ra), Some(mut rb)) = (to_rows(a), to_rows(b)) else {
        return false;
    };
    rref(&mut ra);
    rref(&mut rb);
    ra == rb
}

fn rref(rows: &mut Vec<Vec<Rat>>) {
    if rows.is_empty() {
        return;
    }
    let ncols = rows[0].len();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = x.clone() / inv.clone();
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for cc in 0..ncols {
                    let sub = f.clone() * rows[r][cc].clone();
                    rows[i][cc] = rows[i][cc].clone() - sub;
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.retain(|row| row.iter().any(|x| !x.is_zero()));
    rows.sort();
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::rat;

    #[test]
    fn heat_seed_x2() {
        // heat d_t - d_x^2, seed x^2 -> x^2 + 2t  (vars: t, x)
        let op = FlagOperator::heat(1);
        let seed = RationalPoly::monomial(2, vec![0, 2], Rat::one());
        let u = right_inverse_series(&op, &seed).unwrap();
        let expect = seed.add(&RationalPoly::monomial(2, vec![1, 0], rat_int(2)));
        assert_eq!(u, expect);
    }

    #[test]
    fn laplace_seed_y2() {
        // d_x^2 + d_y^2, seed y^2 -> y^2 - x^2 (vars: x, y)
        let op = FlagOperator::laplace(2);
        let seed = RationalPoly::monomial(2, vec![0, 2], Rat::one());
        let u = right_inverse_series(&op, &seed).unwrap();
        let expect = seed.add(&RationalPoly::monomial(2, vec![2, 0], rat_int(-1)));
        assert_eq!(u, expect);
    }

    #[test]
    fn constant_seed_is_fixed() {
        let op = FlagOperator::heat(2);
        let one = RationalPoly::one(3);
        assert_eq!(right_inverse_series(&op, &one).unwrap(), one);
    }

    #[test]
    fn seed_not_in_kernel_is_reported() {
        // seed t is not killed by d_t for the heat operator
        let op = FlagOperator::heat(1);
        let seed = RationalPoly::var(2, 0);
        assert!(right_inverse_series(&op, &seed).is_err());
    }

    #[test]
    fn heat_flag_basis_k4() {
        // heat as a 1-step flag: x^4 + 12 t x^2 + 12 t^2
        let op = FlagOperator::heat(1);
        let basis = flag_basis(&op, &GradedBound { caps: vec![0, 4] }).unwrap();
        let target = RationalPoly::monomial(2, vec![0, 4], Rat::one())
            .add(&RationalPoly::monomial(2, vec![1, 2], rat_int(12)))
            .add(&RationalPoly::monomial(2, vec![2, 0], rat_int(12)));
        assert!(basis.contains(&target), "basis: {basis:?}");
    }

    #[test]
    fn example_433_operator() {
        // d_x^2 + x d_y^2, (l1, l2) = (0, 2) -> y^2 - x^3/3
        let n = 2;
        let mut e = vec![0; n];
        e[1] = 2;
        let op = FlagOperator::new(
            n,
            vec![2, 0],
            vec![(RationalPoly::var(n, 0), e)],
        )
        .unwrap();
        let basis = flag_basis(&op, &GradedBound { caps: vec![0, 2] }).unwrap();
        let target = RationalPoly::monomial(2, vec![0, 2], Rat::one())
            .add(&RationalPoly::monomial(2, vec![3, 0], rat(-1, 3)));
        assert!(basis.contains(&target), "basis: {basis:?}");
    }

    #[test]
    fn brute_force_heat_degree2() {
        let op = FlagOperator::heat(1);
        let kern = brute_force_kernel(&op, 2);
        assert_eq!(kern.len(), 3); // 1, x, t + x^2/2 direction
    }

    #[test]
    fn brute_force_laplace_degree3() {
        let op = FlagOperator::laplace(2);
        let kern = brute_force_kernel(&op, 3);
        assert_eq!(kern.len(), 7);
    }

    #[test]
    fn dx_on_univariate() {
        let op = FlagOperator::new(1, vec![1], vec![]).unwrap();
        let kern = brute_force_kernel(&op, 3);
        assert_eq!(kern.len(), 1);
        assert_eq!(kern[0], RationalPoly::one(1));
    }

    #[test]
    fn flag_vs_brute_force_span() {
        let op = FlagOperator::heat(1);
        let d = 6u32;
        let brute = brute_force_kernel(&op, d);
        let flag = flag_basis(&op, &GradedBound { caps: vec![0, d] }).unwrap();
        let flag_d: Vec<_> = flag
            .into_iter()
            .filter(|p| p.total_degree() <= d)
            .collect();
        assert!(same_span(&brute, &flag_d, 2, d));
    }
}
