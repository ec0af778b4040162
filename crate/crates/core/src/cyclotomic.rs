//! Exact arithmetic in cyclotomic fields `Q(ζ_n)`.

use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::rational::{qi, Q};

/// Integer coefficients of `Φ_n`, lowest degree first.
pub fn cyclotomic_poly(n: u32) -> Vec<i64> {
    assert!(n >= 1);
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            p = divide_monic(&p, &cyclotomic_poly(d));
        }
    }
    p
}

fn divide_monic(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let da = a.len() - 1;
    let mut quo = vec![0i64; da - db + 1];
    for k in (0..=da - db).rev() {
        let c = r[k + db];
        quo[k] = c;
        for (j, bj) in b.iter().enumerate() {
            r[k + j] -= c * bj;
        }
    }
    debug_assert!(r.iter().all(|&x| x == 0));
    quo
}

/// Element of `Q(ζ_n)` in the power basis `1, ζ, …, ζ^{φ(n)-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cyclotomic {
    n: u32,
    coeffs: Vec<Q>,
}

/// The eighth cyclotomic field, basis `1, ζ₈, ζ₈², ζ₈³`.
pub type Cyclotomic8 = Cyclotomic;

impl Cyclotomic {
    pub fn zero(n: u32) -> Self {
        let deg = cyclotomic_poly(n).len() - 1;
        Cyclotomic { n, coeffs: vec![Q::zero(); deg] }
    }

    pub fn from_q(n: u32, x: Q) -> Self {
        let mut z = Self::zero(n);
        z.coeffs[0] = x;
        z
    }

    /// `ζ_n^k`.
    pub fn zeta(n: u32, k: i64) -> Self {
        let e = k.rem_euclid(n as i64) as usize;
        let mut raw = vec![Q::zero(); e + 1];
        raw[e] = Q::one();
        Self::reduce(n, raw)
    }

    fn reduce(n: u32, mut raw: Vec<Q>) -> Self {
        let phi = cyclotomic_poly(n);
        let deg = phi.len() - 1;
        while raw.len() > deg {
            let top = raw.pop().expect("nonempty");
            if top.is_zero() {
                continue;
            }
            let shift = raw.len() - deg;
            for (j, c) in phi[..deg].iter().enumerate() {
                raw[shift + j] -= &top * qi(*c);
            }
        }
        raw.resize(deg, Q::zero());
        Cyclotomic { n, coeffs: raw }
    }

    pub fn order(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    /// Same element viewed in `Q(ζ_m)`, `n | m`.
    pub fn lift(&self, m: u32) -> Self {
        assert!(m % self.n == 0, "lift to a multiple order");
        let s = (m / self.n) as usize;
        let mut raw = vec![Q::zero(); s * self.coeffs.len().max(1)];
        for (i, c) in self.coeffs.iter().enumerate() {
            raw[i * s] = c.clone();
        }
        Self::reduce(m, raw)
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        if a.n == b.n {
            return (a.clone(), b.clone());
        }
        let m = num_integer::lcm(a.n, b.n);
        (a.lift(m), b.lift(m))
    }

    /// Complex conjugate, `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Self {
        let mut acc = Self::zero(self.n);
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = acc + Self::zeta(self.n, -(i as i64)).scale(c);
            }
        }
        acc
    }

    pub fn scale(&self, c: &Q) -> Self {
        Cyclotomic { n: self.n, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// `(z + z̄) / 2`.
    pub fn real_part(&self) -> Self {
        (self.clone() + self.conj()).scale(&(qi(1) / qi(2)))
    }

    pub fn to_rational(&self) -> Option<Q> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Real part as `a + b√2`, for elements of `Q(ζ₈)`.
    pub fn real_part_sqrt2(&self) -> (Q, Q) {
        let z = if self.n == 8 { self.clone() } else { self.lift(8) };
        let c = &z.coeffs;
        (c[0].clone(), (&c[1] - &c[3]) / qi(2))
    }

    /// `√3 = ζ₁₂ + ζ₁₂^{-1}`.
    pub fn sqrt3() -> Self {
        Self::zeta(12, 1) + Self::zeta(12, -1)
    }

    /// `e(t) = exp(2πi t)` for rational `t`.
    pub fn e(t: &Q) -> Self {
        let den = t.denom().clone();
        let num = t.numer().clone();
        let n: u32 = num_traits::ToPrimitive::to_u32(&den).expect("small denominator");
        let k: i64 = num_traits::ToPrimitive::to_i64(&num.mod_floor(&n.into())).expect("residue");
        Self::zeta(n, k)
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, o: Cyclotomic) -> Cyclotomic {
        let (a, b) = Cyclotomic::common(&self, &o);
        Cyclotomic { n: a.n, coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect() }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        self.scale(&qi(-1))
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, o: Cyclotomic) -> Cyclotomic {
        self + (-o)
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, o: Cyclotomic) -> Cyclotomic {
        let (a, b) = Cyclotomic::common(&self, &o);
        let mut raw = vec![Q::zero(); a.coeffs.len() + b.coeffs.len()];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                raw[i + j] += x * y;
            }
        }
        Cyclotomic::reduce(a.n, raw)
    }
}
