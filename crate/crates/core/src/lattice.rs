//! Even lattices given by integer Gram matrices.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{self, IMat};
use crate::rational::{gcd_all, Q};

/// Coordinates of a lattice vector in the basis of its lattice.
pub type LatticeVector = Vec<BigInt>;

pub fn vector(xs: &[i64]) -> LatticeVector {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

#[derive(Clone, PartialEq, Eq)]
pub struct Lattice {
    name: Option<String>,
    gram: IMat,
}

impl fmt::Debug for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Lattice({}, rank {})", self.name.as_deref().unwrap_or("?"), self.rank())
    }
}

impl Lattice {
    /// Checks that `gram` is square, symmetric, even and nondegenerate.
    pub fn new(gram: IMat, name: Option<String>) -> Result<Self> {
        let n = gram.len();
        for row in &gram {
            if row.len() != n {
                return Err(Error::NotSquare { rows: n, cols: row.len() });
            }
        }
        for i in 0..n {
            if gram[i][i].is_odd() {
                return Err(Error::NotEven(i));
            }
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::NotSymmetric);
                }
            }
        }
        if matrix::det(&gram).is_zero() {
            return Err(Error::DegenerateLattice);
        }
        Ok(Lattice { name, gram })
    }

    pub fn from_rows(rows: &[Vec<i64>], name: &str) -> Result<Self> {
        Self::new(matrix::big(rows), Some(name.to_string()))
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn gram(&self) -> &IMat {
        &self.gram
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn det(&self) -> BigInt {
        matrix::det(&self.gram)
    }

    pub fn inner(&self, u: &[BigInt], v: &[BigInt]) -> BigInt {
        let mut s = BigInt::zero();
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if !vj.is_zero() && !self.gram[i][j].is_zero() {
                    s += ui * vj * &self.gram[i][j];
                }
            }
        }
        s
    }

    pub fn norm(&self, v: &[BigInt]) -> BigInt {
        self.inner(v, v)
    }

    /// Rational pairing of rational coordinate vectors.
    pub fn inner_q(&self, u: &[Q], v: &[Q]) -> Q {
        let mut s = Q::zero();
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if !vj.is_zero() && !self.gram[i][j].is_zero() {
                    s += ui * vj * Q::from_integer(self.gram[i][j].clone());
                }
            }
        }
        s
    }

    pub fn check_len(&self, v: &[BigInt]) -> Result<()> {
        if v.len() != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), got: v.len() });
        }
        Ok(())
    }

    /// Positive generator of `(v, L)`.
    pub fn divisibility(&self, v: &[BigInt]) -> Result<BigInt> {
        self.check_len(v)?;
        if v.iter().all(|x| x.is_zero()) {
            return Err(Error::ZeroVector);
        }
        let gv = matrix::mul_vec(&self.gram, v);
        Ok(gcd_all(gv.iter()))
    }

    /// `(positive, negative)` index of inertia.
    pub fn signature(&self) -> (usize, usize) {
        signature(&self.gram)
    }

    pub fn is_negative_definite(&self) -> bool {
        self.signature() == (0, self.rank())
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().abs().is_one()
    }

    pub fn direct_sum(&self, other: &Lattice) -> Lattice {
        let (a, b) = (self.rank(), other.rank());
        let mut g = vec![vec![BigInt::zero(); a + b]; a + b];
        for i in 0..a {
            for j in 0..a {
                g[i][j] = self.gram[i][j].clone();
            }
        }
        for i in 0..b {
            for j in 0..b {
                g[a + i][a + j] = other.gram[i][j].clone();
            }
        }
        let name = match (&self.name, &other.name) {
            (Some(x), Some(y)) => Some(format!("{x}+{y}")),
            _ => None,
        };
        Lattice { name, gram: g }
    }

    pub fn rescale(&self, m: i64) -> Result<Lattice> {
        if m == 0 {
            return Err(Error::DegenerateLattice);
        }
        let g = self.gram.iter().map(|r| r.iter().map(|x| x * m).collect()).collect();
        let name = self.name.as_ref().map(|n| format!("{n}({m})"));
        Lattice::new(g, name)
    }

    /// Gram matrix of the sublattice spanned by `rows`.
    pub fn restrict(&self, rows: &IMat) -> IMat {
        matrix::congruence(&self.gram, rows)
    }

    pub fn to_json(&self) -> Result<String> {
        let gram = self
            .gram
            .iter()
            .map(|r| r.iter().map(|x| x.to_i64().ok_or(Error::Overflow("json gram"))).collect())
            .collect::<Result<Vec<Vec<i64>>>>()?;
        serde_json::to_string(&LatticeJson { name: self.name.clone(), gram }).map_err(|e| Error::Json(e.to_string()))
    }

    pub fn from_json(s: &str) -> Result<Lattice> {
        let j: LatticeJson = serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))?;
        if j.gram.len() > 64 {
            return Err(Error::Json("gram too large".into()));
        }
        Lattice::new(matrix::big(&j.gram), j.name)
    }
}

#[derive(Serialize, Deserialize)]
struct LatticeJson {
    name: Option<String>,
    gram: Vec<Vec<i64>>,
}

/// Inertia of a symmetric integer matrix by rational congruence diagonalisation.
pub fn signature(g: &IMat) -> (usize, usize) {
    let n = g.len();
    let mut m = matrix::to_q(g);
    let (mut pos, mut neg) = (0, 0);
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        let piv = active.iter().copied().find(|&i| !m[i][i].is_zero());
        let p = match piv {
            Some(p) => p,
            None => {
                // All remaining diagonal entries vanish; mix in an off-diagonal partner.
                let found = active
                    .iter()
                    .flat_map(|&i| active.iter().map(move |&j| (i, j)))
                    .find(|&(i, j)| i != j && !m[i][j].is_zero());
                let Some((i, j)) = found else { break };
                // e_i <- e_i + e_j makes the (i,i) entry 2 m_ij.
                let rj = m[j].clone();
                for (x, y) in m[i].iter_mut().zip(rj.iter()) {
                    *x += y;
                }
                for row in m.iter_mut() {
                    let v = row[j].clone();
                    row[i] += v;
                }
                i
            }
        };
        let d = m[p][p].clone();
        if d.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        active.retain(|&x| x != p);
        for &i in &active {
            if m[i][p].is_zero() {
                continue;
            }
            let f = &m[i][p] / &d;
            let rp = m[p].clone();
            for (x, y) in m[i].iter_mut().zip(rp.iter()) {
                *x -= &f * y;
            }
            for row in m.iter_mut() {
                let v = &f * &row[p];
                row[i] -= v;
            }
        }
    }
    (pos, neg)
}

pub fn hyperbolic() -> Lattice {
    Lattice::from_rows(&[vec![0, 1], vec![1, 0]], "U").expect("U")
}

pub fn hyperbolic_scaled(m: i64) -> Result<Lattice> {
    Ok(hyperbolic().rescale(m)?.with_name(format!("U({m})")))
}

/// `A_n`, negative definite, simple-root basis.
pub fn a_n(n: usize) -> Result<Lattice> {
    if n == 0 {
        return Err(Error::UnknownLattice("A_0".into()));
    }
    let g = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match (i as i64 - j as i64).abs() {
                    0 => -2,
                    1 => 1,
                    _ => 0,
                })
                .collect()
        })
        .collect::<Vec<Vec<i64>>>();
    Lattice::from_rows(&g, &format!("A_{n}"))
}

/// Euclidean coordinates of the `D_n` basis: `e_i - e_{i+1}` for `i < n`, then `e_{n-1} + e_n`;
/// `D_1` is spanned by `2 e_1`.
pub fn d_n_basis(n: usize) -> Vec<Vec<i64>> {
    if n == 1 {
        return vec![vec![2]];
    }
    let mut b = vec![];
    for i in 0..n - 1 {
        let mut v = vec![0; n];
        v[i] = 1;
        v[i + 1] = -1;
        b.push(v);
    }
    let mut v = vec![0; n];
    v[n - 2] = 1;
    v[n - 1] = 1;
    b.push(v);
    b
}

/// `D_n` with the negated Euclidean form.
pub fn d_n(n: usize) -> Result<Lattice> {
    if n == 0 {
        return Err(Error::UnknownLattice("D_0".into()));
    }
    let b = d_n_basis(n);
    let g = euclid_gram(&b, -1);
    Lattice::from_rows(&g, &format!("D_{n}"))
}

fn euclid_gram(b: &[Vec<i64>], sign: i64) -> Vec<Vec<i64>> {
    b.iter()
        .map(|u| b.iter().map(|v| sign * u.iter().zip(v).map(|(x, y)| x * y).sum::<i64>()).collect())
        .collect()
}

/// Lattice coordinates in `D_n` of a rational Euclidean vector.
pub fn d_n_from_euclidean(n: usize, x: &[Q]) -> Result<Vec<Q>> {
    if x.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: x.len() });
    }
    let rows: Vec<Vec<Q>> = d_n_basis(n).iter().map(|r| r.iter().map(|&v| Q::from_integer(v.into())).collect()).collect();
    matrix::solve_left(&rows, x)
}

pub fn d_n_to_euclidean(n: usize, c: &[Q]) -> Vec<Q> {
    let b = d_n_basis(n);
    (0..n).map(|j| c.iter().zip(&b).map(|(ci, r)| ci * Q::from_integer(r[j].into())).sum()).collect()
}

/// Basis of `E_r` inside `I_{1,r}` (first coordinate positive), orthogonal to `(3,1,…,1)`.
pub fn e_r_basis(r: usize) -> Vec<Vec<i64>> {
    let mut b = vec![];
    if r == 2 {
        b.push(vec![1, 1, 2]);
        b.push(vec![0, 1, -1]);
        return b;
    }
    let mut v = vec![0; r + 1];
    v[0] = 1;
    v[1] = -1;
    v[2] = -1;
    v[3] = -1;
    b.push(v);
    for i in 1..r {
        let mut v = vec![0; r + 1];
        v[i] = 1;
        v[i + 1] = -1;
        b.push(v);
    }
    b
}

pub fn e_r(r: usize) -> Result<Lattice> {
    if !(2..=8).contains(&r) {
        return Err(Error::UnknownLattice(format!("E_{r}")));
    }
    let b = e_r_basis(r);
    let g: Vec<Vec<i64>> = b
        .iter()
        .map(|u| b.iter().map(|v| u[0] * v[0] - u[1..].iter().zip(&v[1..]).map(|(x, y)| x * y).sum::<i64>()).collect())
        .collect();
    Lattice::from_rows(&g, &format!("E_{r}"))
}

/// Even unimodular lattice of signature `(p, q)`: `U^min ⊕ E_8(±1)^k`.
pub fn ii(p: usize, q: usize) -> Result<Lattice> {
    if (p as i64 - q as i64).rem_euclid(8) != 0 || (p == 0 && q == 0) {
        return Err(Error::InvalidSignature(p, q));
    }
    let m = p.min(q);
    let k = (p.max(q) - m) / 8;
    let e8 = if q >= p { e_r(8)? } else { e_r(8)?.rescale(-1)? };
    let mut parts = vec![];
    for _ in 0..m {
        parts.push(hyperbolic());
    }
    for _ in 0..k {
        parts.push(e8.clone());
    }
    let mut l = parts[0].clone();
    for x in &parts[1..] {
        l = l.direct_sum(x);
    }
    Ok(l.with_name(format!("II_{{{p},{q}}}")))
}

/// Looks up `U`, `U(m)`, `A_n`, `D_n`, `E_r`, `II_{p,q}` (also `II_p,q`).
pub fn standard(name: &str) -> Result<Lattice> {
    let unknown = || Error::UnknownLattice(name.to_string());
    let s = name.trim();
    if s == "U" {
        return Ok(hyperbolic());
    }
    if let Some(rest) = s.strip_prefix("U(").and_then(|r| r.strip_suffix(')')) {
        let m: i64 = rest.parse().map_err(|_| unknown())?;
        return hyperbolic_scaled(m);
    }
    if let Some(rest) = s.strip_prefix("II_") {
        let rest = rest.trim_start_matches('{').trim_end_matches('}');
        let (a, b) = rest.split_once(',').ok_or_else(unknown)?;
        let p: usize = a.trim().parse().map_err(|_| unknown())?;
        let q: usize = b.trim().parse().map_err(|_| unknown())?;
        if p + q > 256 {
            return Err(unknown());
        }
        return ii(p, q);
    }
    let cut = s.chars().next().map_or(0, char::len_utf8);
    let (head, tail) = s.split_at(cut);
    let tail = tail.strip_prefix('_').unwrap_or(tail);
    let n: usize = tail.parse().map_err(|_| unknown())?;
    if n > 256 {
        return Err(unknown());
    }
    match head {
        "A" => a_n(n),
        "D" => d_n(n),
        "E" => e_r(n),
        _ => Err(unknown()),
    }
}

/// `U ⊕ U ⊕ D_{N-2}`.
pub fn lambda_n(n: usize) -> Result<Lattice> {
    if n < 3 {
        return Err(Error::OutOfRange(n as i64));
    }
    Ok(hyperbolic().direct_sum(&hyperbolic()).direct_sum(&d_n(n - 2)?).with_name(format!("Lambda_{n}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e2_gram() {
        let e2 = e_r(2).unwrap();
        assert_eq!(e2.gram(), &matrix::big(&[vec![-4, 1], vec![1, -2]]));
    }

    #[test]
    fn dets() {
        for r in 2..=8 {
            assert_eq!(e_r(r).unwrap().det().abs(), BigInt::from(9 - r as i64));
        }
        assert_eq!(d_n(1).unwrap().det(), BigInt::from(-4));
        for n in 2..=9 {
            assert_eq!(d_n(n).unwrap().det().abs(), BigInt::from(4));
        }
        assert_eq!(hyperbolic().rescale(2).unwrap().det(), BigInt::from(-4));
        assert_eq!(lambda_n(5).unwrap().det().abs(), BigInt::from(4));
    }

    #[test]
    fn signatures() {
        assert_eq!(ii(2, 26).unwrap().signature(), (2, 26));
        assert_eq!(hyperbolic().signature(), (1, 1));
        assert!(d_n(5).unwrap().is_negative_definite());
    }

    #[test]
    fn divisibility_examples() {
        let d5 = d_n(5).unwrap();
        let c = d_n_from_euclidean(5, &[2, 0, 0, 0, 0].map(|x| Q::from_integer(x.into()))).unwrap();
        let v: LatticeVector = c.iter().map(|x| x.to_integer()).collect();
        assert_eq!(d5.divisibility(&v).unwrap(), BigInt::from(2));
        assert!(d5.divisibility(&vector(&[0, 0, 0, 0, 0])).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let l = e_r(8).unwrap();
        let s = l.to_json().unwrap();
        assert_eq!(Lattice::from_json(&s).unwrap(), l);
        assert!(Lattice::from_json(r#"{"name":"x","gram":[[1]]}"#).is_err());
        assert!(Lattice::from_json(r#"{"name":"x","gram":[[0]]}"#).is_err());
    }

    #[test]
    fn names() {
        assert_eq!(standard("E_2").unwrap().rank(), 2);
        assert_eq!(standard("II_{2,26}").unwrap().rank(), 28);
        assert_eq!(standard("U(3)").unwrap().det(), BigInt::from(-9));
        assert!(standard("F_4").is_err());
        assert!(standard("II_{2,3}").is_err());
    }
}
