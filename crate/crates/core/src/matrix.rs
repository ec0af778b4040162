//! Dense integer and rational matrices: Smith form, kernels, solves, Gram LLL.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Q;

pub type IMat = Vec<Vec<BigInt>>;
pub type QMat = Vec<Vec<Q>>;

pub fn big(m: &[Vec<i64>]) -> IMat {
    m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

pub fn identity(n: usize) -> IMat {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

pub fn transpose<T: Clone>(a: &[Vec<T>]) -> Vec<Vec<T>> {
    if a.is_empty() {
        return vec![];
    }
    (0..a[0].len()).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn mul(a: &IMat, b: &IMat) -> IMat {
    let k = b.len();
    let c = if k == 0 { 0 } else { b[0].len() };
    a.iter()
        .map(|r| {
            (0..c)
                .map(|j| {
                    let mut s = BigInt::zero();
                    for t in 0..k {
                        if !r[t].is_zero() && !b[t][j].is_zero() {
                            s += &r[t] * &b[t][j];
                        }
                    }
                    s
                })
                .collect()
        })
        .collect()
}

pub fn mul_vec(a: &IMat, v: &[BigInt]) -> Vec<BigInt> {
    a.iter().map(|r| r.iter().zip(v).map(|(x, y)| x * y).sum()).collect()
}

/// `v^T a`.
pub fn vec_mul(v: &[BigInt], a: &IMat) -> Vec<BigInt> {
    let c = if a.is_empty() { 0 } else { a[0].len() };
    (0..c).map(|j| v.iter().zip(a).map(|(x, r)| x * &r[j]).sum()).collect()
}

/// `b a b^T`.
pub fn congruence(a: &IMat, b: &IMat) -> IMat {
    mul(&mul(b, a), &transpose(b))
}

pub fn to_q(a: &IMat) -> QMat {
    a.iter().map(|r| r.iter().map(|x| Q::from_integer(x.clone())).collect()).collect()
}

/// Fraction-free determinant.
pub fn det(a: &IMat) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m = a.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = t / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Smith normal form `p * a * q = d`, with inverses of both transforms.
#[derive(Debug, Clone)]
pub struct Smith {
    pub diag: Vec<BigInt>,
    pub rank: usize,
    pub p: IMat,
    pub pinv: IMat,
    pub q: IMat,
    pub qinv: IMat,
}

pub fn smith(a: &IMat) -> Smith {
    let r = a.len();
    let c = if r == 0 { 0 } else { a[0].len() };
    let mut m = a.clone();
    let mut p = identity(r);
    let mut pinv = identity(r);
    let mut q = identity(c);
    let mut qinv = identity(c);
    let mut t = 0;
    while t < r.min(c) {
        let mut best: Option<(usize, usize)> = None;
        for i in t..r {
            for j in t..c {
                if !m[i][j].is_zero() && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        if bi != t {
            m.swap(bi, t);
            p.swap(bi, t);
            for row in pinv.iter_mut() {
                row.swap(bi, t);
            }
        }
        if bj != t {
            for row in m.iter_mut() {
                row.swap(bj, t);
            }
            for row in q.iter_mut() {
                row.swap(bj, t);
            }
            qinv.swap(bj, t);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..r {
                if m[i][t].is_zero() {
                    continue;
                }
                let f = m[i][t].div_floor(&m[t][t]);
                row_axpy(&mut m, i, t, &f);
                row_axpy(&mut p, i, t, &f);
                for row in pinv.iter_mut() {
                    let v = &row[i] * &f;
                    row[t] += v;
                }
                if !m[i][t].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..c {
                if m[t][j].is_zero() {
                    continue;
                }
                let f = m[t][j].div_floor(&m[t][t]);
                col_axpy(&mut m, j, t, &f);
                col_axpy(&mut q, j, t, &f);
                let rj = qinv[j].clone();
                for (x, y) in qinv[t].iter_mut().zip(rj.iter()) {
                    *x += y * &f;
                }
                if !m[t][j].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                let mut best = (t, t);
                for i in t..r {
                    if !m[i][t].is_zero() && m[i][t].abs() < m[best.0][best.1].abs() {
                        best = (i, t);
                    }
                }
                for j in t..c {
                    if !m[t][j].is_zero() && m[t][j].abs() < m[best.0][best.1].abs() {
                        best = (t, j);
                    }
                }
                let (bi, bj) = best;
                if bi != t {
                    m.swap(bi, t);
                    p.swap(bi, t);
                    for row in pinv.iter_mut() {
                        row.swap(bi, t);
                    }
                }
                if bj != t {
                    for row in m.iter_mut() {
                        row.swap(bj, t);
                    }
                    for row in q.iter_mut() {
                        row.swap(bj, t);
                    }
                    qinv.swap(bj, t);
                }
                continue;
            }
            let mut bad = None;
            'outer: for i in t + 1..r {
                for j in t + 1..c {
                    if !m[i][j].is_multiple_of(&m[t][t]) {
                        bad = Some(i);
                        break 'outer;
                    }
                }
            }
            match bad {
                Some(i) => {
                    let one = -BigInt::one();
                    row_axpy(&mut m, t, i, &one);
                    row_axpy(&mut p, t, i, &one);
                    for row in pinv.iter_mut() {
                        let v = row[t].clone();
                        row[i] -= v;
                    }
                }
                None => break,
            }
        }
        if m[t][t].is_negative() {
            for x in m[t].iter_mut() {
                *x = -&*x;
            }
            for x in p[t].iter_mut() {
                *x = -&*x;
            }
            for row in pinv.iter_mut() {
                row[t] = -&row[t];
            }
        }
        t += 1;
    }
    let diag: Vec<BigInt> = (0..r.min(c)).map(|i| m[i][i].clone()).collect();
    let rank = diag.iter().filter(|x| !x.is_zero()).count();
    Smith { diag, rank, p, pinv, q, qinv }
}

/// `row_i -= f * row_t`.
fn row_axpy(m: &mut IMat, i: usize, t: usize, f: &BigInt) {
    let rt = m[t].clone();
    for (x, y) in m[i].iter_mut().zip(rt.iter()) {
        if !y.is_zero() {
            *x -= y * f;
        }
    }
}

/// `col_j -= f * col_t`.
fn col_axpy(m: &mut IMat, j: usize, t: usize, f: &BigInt) {
    for row in m.iter_mut() {
        if !row[t].is_zero() {
            let v = &row[t] * f;
            row[j] -= v;
        }
    }
}

/// Z-basis of the row lattice spanned by the rows of `a`.
pub fn row_basis(a: &IMat) -> IMat {
    let s = smith(a);
    (0..s.rank)
        .map(|i| s.qinv[i].iter().map(|x| x * &s.diag[i]).collect())
        .collect()
}

/// Z-basis of `(Q-span of rows) ∩ Z^n`.
pub fn row_saturation(a: &IMat) -> IMat {
    let s = smith(a);
    s.qinv[..s.rank].to_vec()
}

/// Z-basis (as rows) of `{x : a x = 0}`.
pub fn kernel(a: &IMat, ncols: usize) -> IMat {
    if a.is_empty() {
        return identity(ncols);
    }
    let s = smith(a);
    let qt = transpose(&s.q);
    qt[s.rank..].to_vec()
}

pub fn rank(a: &IMat) -> usize {
    if a.is_empty() {
        0
    } else {
        smith(a).rank
    }
}

/// Inverse of a square rational matrix.
pub fn inverse(a: &QMat) -> Result<QMat> {
    let n = a.len();
    let mut m: QMat = a.to_vec();
    let mut inv: QMat = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&i| !m[i][col].is_zero()).ok_or(Error::DegenerateLattice)?;
        m.swap(piv, col);
        inv.swap(piv, col);
        let d = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x /= &d;
        }
        for x in inv[col].iter_mut() {
            *x /= &d;
        }
        for i in 0..n {
            if i != col && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                let (rc, ic) = (m[col].clone(), inv[col].clone());
                for (x, y) in m[i].iter_mut().zip(rc.iter()) {
                    *x -= &f * y;
                }
                for (x, y) in inv[i].iter_mut().zip(ic.iter()) {
                    *x -= &f * y;
                }
            }
        }
    }
    Ok(inv)
}

/// Solves `y * rows = x` for `y`, where `rows` has full row rank.
pub fn solve_left(rows: &QMat, x: &[Q]) -> Result<Vec<Q>> {
    let r = rows.len();
    let n = x.len();
    // Augmented system rows^T y = x.
    let mut m: QMat = (0..n)
        .map(|j| {
            let mut row: Vec<Q> = (0..r).map(|i| rows[i][j].clone()).collect();
            row.push(x[j].clone());
            row
        })
        .collect();
    let mut pivots = vec![];
    let mut row = 0;
    for col in 0..r {
        let Some(piv) = (row..n).find(|&i| !m[i][col].is_zero()) else {
            return Err(Error::Dependent);
        };
        m.swap(piv, row);
        let d = m[row][col].clone();
        for x in m[row].iter_mut() {
            *x /= &d;
        }
        for i in 0..n {
            if i != row && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                let rr = m[row].clone();
                for (x, y) in m[i].iter_mut().zip(rr.iter()) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if m[row..].iter().any(|r_| !r_[r].is_zero()) {
        return Err(Error::Inconsistent("vector not in span".into()));
    }
    Ok((0..r).map(|i| m[i][r].clone()).collect())
}

/// LLL reduction (δ = 3/4) of a positive definite integer Gram matrix.
/// Returns `(t, g')` with `g' = t g t^T` and `t` unimodular.
pub fn lll_gram(g: &IMat) -> Result<(IMat, IMat)> {
    let n = g.len();
    if n == 0 {
        return Ok((vec![], vec![]));
    }
    let mut g = g.clone();
    let mut h = identity(n);
    // One-based bookkeeping as in the integral LLL recurrence.
    let mut d = vec![BigInt::zero(); n + 1];
    let mut lam = vec![vec![BigInt::zero(); n + 1]; n + 1];
    d[0] = BigInt::one();
    d[1] = g[0][0].clone();
    if !d[1].is_positive() {
        return Err(Error::NotDefinite);
    }
    let mut k = 2usize;
    let mut kmax = 1usize;
    while k <= n {
        if k > kmax {
            kmax = k;
            for j in 1..=k {
                let mut u = g[k - 1][j - 1].clone();
                for i in 1..j {
                    u = (&d[i] * &u - &lam[k][i] * &lam[j][i]) / &d[i - 1];
                }
                if j < k {
                    lam[k][j] = u;
                } else {
                    if !u.is_positive() {
                        return Err(Error::NotDefinite);
                    }
                    d[k] = u;
                }
            }
        }
        loop {
            red(&mut g, &mut h, &mut lam, &d, k, k - 1);
            let lhs = BigInt::from(4) * &d[k] * &d[k - 2];
            let rhs = BigInt::from(3) * &d[k - 1] * &d[k - 1] - BigInt::from(4) * &lam[k][k - 1] * &lam[k][k - 1];
            if lhs < rhs {
                swap(&mut g, &mut h, &mut lam, &mut d, k, kmax);
                k = (k - 1).max(2);
            } else {
                for l in (1..k - 1).rev() {
                    red(&mut g, &mut h, &mut lam, &d, k, l);
                }
                k += 1;
                break;
            }
        }
    }
    Ok((h, g))
}

fn red(g: &mut IMat, h: &mut IMat, lam: &mut [Vec<BigInt>], d: &[BigInt], k: usize, l: usize) {
    let two_l = BigInt::from(2) * &lam[k][l];
    if two_l.abs() <= d[l] {
        return;
    }
    // Nearest integer to lam/d.
    let qv = (BigInt::from(2) * &lam[k][l] + &d[l]).div_floor(&(BigInt::from(2) * &d[l]));
    row_axpy(h, k - 1, l - 1, &qv);
    row_axpy(g, k - 1, l - 1, &qv);
    col_axpy(g, k - 1, l - 1, &qv);
    lam[k][l] -= &qv * &d[l];
    for i in 1..l {
        let v = &qv * &lam[l][i];
        lam[k][i] -= v;
    }
}

fn swap(g: &mut IMat, h: &mut IMat, lam: &mut [Vec<BigInt>], d: &mut [BigInt], k: usize, kmax: usize) {
    h.swap(k - 1, k - 2);
    g.swap(k - 1, k - 2);
    for row in g.iter_mut() {
        row.swap(k - 1, k - 2);
    }
    for j in 1..k - 1 {
        let t = lam[k][j].clone();
        lam[k][j] = lam[k - 1][j].clone();
        lam[k - 1][j] = t;
    }
    let l = lam[k][k - 1].clone();
    let b = (&d[k - 2] * &d[k] + &l * &l) / &d[k - 1];
    for i in k + 1..=kmax {
        let t = lam[i][k].clone();
        lam[i][k] = (&d[k] * &lam[i][k - 1] - &l * &t) / &d[k - 1];
        lam[i][k - 1] = (&b * &t + &l * &lam[i][k]) / &d[k];
    }
    d[k - 1] = b;
}
