use std::ops::{Add, Div, Mul, Neg, Sub};

/// Univariate Taylor jet to order 4.
///
/// `c[k]` is the Taylor coefficient `f^(k)(x0)/k!`; the expansion point is
/// implicit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet1 {
    pub c: [f64; 5],
}

impl Jet1 {
    pub fn constant(v: f64) -> Self {
        Jet1 {
            c: [v, 0.0, 0.0, 0.0, 0.0],
        }
    }

    /// The identity seed at `x0`: value `x0`, first derivative 1.
    pub fn variable(x0: f64) -> Self {
        Jet1 {
            c: [x0, 1.0, 0.0, 0.0, 0.0],
        }
    }

    /// Build from raw derivatives `f, f', f'', f''', f''''`.
    pub fn from_derivs(d: [f64; 5]) -> Self {
        Jet1 {
            c: [d[0], d[1], d[2] / 2.0, d[3] / 6.0, d[4] / 24.0],
        }
    }

    pub fn value(&self) -> f64 {
        self.c[0]
    }

    /// k-th derivative (k <= 4).
    pub fn deriv(&self, k: usize) -> f64 {
        const FACT: [f64; 5] = [1.0, 1.0, 2.0, 6.0, 24.0];
        self.c[k] * FACT[k]
    }

    pub fn recip(&self) -> Jet1 {
        // 1/f by the recursive quotient rule on Taylor coefficients.
        let f0 = self.c[0];
        let mut q = [0.0; 5];
        q[0] = 1.0 / f0;
        for k in 1..5 {
            let mut s = 0.0;
            for j in 0..k {
                s += q[j] * self.c[k - j];
            }
            q[k] = -s / f0;
        }
        Jet1 { c: q }
    }
}

impl Add for Jet1 {
    type Output = Jet1;
    fn add(self, o: Jet1) -> Jet1 {
        let mut c = self.c;
        for k in 0..5 {
            c[k] += o.c[k];
        }
        Jet1 { c }
    }
}

impl Sub for Jet1 {
    type Output = Jet1;
    fn sub(self, o: Jet1) -> Jet1 {
        let mut c = self.c;
        for k in 0..5 {
            c[k] -= o.c[k];
        }
        Jet1 { c }
    }
}

impl Mul for Jet1 {
    type Output = Jet1;
    fn mul(self, o: Jet1) -> Jet1 {
        let mut c = [0.0; 5];
        for i in 0..5 {
            if self.c[i] == 0.0 {
                continue;
            }
            for j in 0..5 - i {
                c[i + j] += self.c[i] * o.c[j];
            }
        }
        Jet1 { c }
    }
}

impl Div for Jet1 {
    type Output = Jet1;
    fn div(self, o: Jet1) -> Jet1 {
        self * o.recip()
    }
}

impl Neg for Jet1 {
    type Output = Jet1;
    fn neg(self) -> Jet1 {
        let mut c = self.c;
        for v in &mut c {
            *v = -*v;
        }
        Jet1 { c }
    }
}

impl Mul<f64> for Jet1 {
    type Output = Jet1;
    fn mul(self, s: f64) -> Jet1 {
        let mut c = self.c;
        for v in &mut c {
            *v *= s;
        }
        Jet1 { c }
    }
}

impl Add<f64> for Jet1 {
    type Output = Jet1;
    fn add(self, s: f64) -> Jet1 {
        let mut c = self.c;
        c[0] += s;
        Jet1 { c }
    }
}
