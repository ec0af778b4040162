//! Vectors of given norm in negative definite lattices.
//!
//! Fincke-Pohst on an LLL-reduced basis of `-G`, completing the square over Q
//! with exact integer bounds.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::lattice::{Lattice, LatticeVector};
use crate::matrix;
use crate::rational::{ceil, floor, floor_sqrt, qi, Q};

/// All `v` with `v² = norm`, sorted lexicographically in the lattice basis.
pub fn short_vectors(l: &Lattice, norm: i64) -> Result<Vec<LatticeVector>> {
    if norm >= 0 {
        return Err(Error::BadNorm(norm));
    }
    if !l.is_negative_definite() {
        return Err(Error::NotDefinite);
    }
    let n = l.rank();
    let pos: matrix::IMat = l.gram().iter().map(|r| r.iter().map(|x| -x).collect()).collect();
    let (t, r) = matrix::lll_gram(&pos)?;
    let ri: Vec<Vec<i64>> = r
        .iter()
        .map(|row| row.iter().map(|x| x.to_i64().ok_or(Error::Overflow("reduced gram"))).collect())
        .collect::<Result<_>>()?;
    let target = -norm;

    // q[i][i] on the diagonal, q[i][j] (j > i) the multipliers.
    let mut q: Vec<Vec<Q>> = matrix::to_q(&r);
    for i in 0..n {
        for j in i + 1..n {
            q[j][i] = q[i][j].clone();
            q[i][j] = &q[i][j] / &q[i][i];
        }
        for k in i + 1..n {
            for l_ in k..n {
                let v = &q[k][i] * &q[i][l_];
                q[k][l_] -= v;
            }
        }
    }

    let mut out = vec![];
    let mut x = vec![BigInt::zero(); n];
    let mut tt = vec![Q::zero(); n];
    let mut uu = vec![Q::zero(); n];
    let mut ub = vec![BigInt::zero(); n];
    let mut i = n - 1;
    tt[i] = qi(target);
    let (_, hi) = bounds(&tt[i], &uu[i], &q[i][i]);
    // Highest nonzero coordinate positive; negatives are added afterwards.
    x[i] = BigInt::from(-1);
    ub[i] = hi;
    loop {
        x[i] += 1;
        if x[i] > ub[i] {
            if i == n - 1 {
                break;
            }
            i += 1;
            continue;
        }
        let s = Q::from_integer(x[i].clone()) + &uu[i];
        let rest = &tt[i] - &q[i][i] * &s * &s;
        if i > 0 {
            tt[i - 1] = rest;
            i -= 1;
            uu[i] = (i + 1..n).filter(|&j| !x[j].is_zero()).map(|j| &q[i][j] * Q::from_integer(x[j].clone())).sum();
            let (mut lo, hi) = bounds(&tt[i], &uu[i], &q[i][i]);
            if x[i + 1..].iter().all(|c| c.is_zero()) && lo.is_negative() {
                lo = BigInt::zero();
            }
            x[i] = lo - 1;
            ub[i] = hi;
        } else if rest.is_zero() {
            let y: Vec<i64> = x.iter().map(|c| c.to_i64().expect("bounded coordinate")).collect();
            debug_assert_eq!(exact_norm(&ri, &y), target as i128);
            if y.iter().any(|&c| c != 0) {
                out.push(y.iter().map(|c| -c).collect());
                out.push(y);
            }
        }
    }

    let mut vs: Vec<LatticeVector> = out
        .iter()
        .map(|y| {
            (0..n)
                .map(|j| y.iter().zip(&t).map(|(&yi, row)| BigInt::from(yi) * &row[j]).sum::<BigInt>())
                .collect()
        })
        .collect();
    vs.retain(|v: &LatticeVector| v.iter().any(|c| !c.is_zero()));
    vs.sort();
    Ok(vs)
}

/// Integer range of `x` with `qii (x + u)² <= t`.
fn bounds(t: &Q, u: &Q, qii: &Q) -> (BigInt, BigInt) {
    if t.is_negative() {
        return (BigInt::from(1), BigInt::zero());
    }
    let r = t / qii;
    let c = -u;
    let s = floor_sqrt(&r);
    let fits = |x: &BigInt| {
        let d = Q::from_integer(x.clone()) - &c;
        &d * &d <= r
    };
    let mut hi = floor(&c) + &s + 1;
    while !fits(&hi) && Q::from_integer(hi.clone()) > c {
        hi -= 1;
    }
    let mut lo = ceil(&c) - &s - 1;
    while !fits(&lo) && Q::from_integer(lo.clone()) < c {
        lo += 1;
    }
    (lo, hi)
}

fn exact_norm(g: &[Vec<i64>], x: &[i64]) -> i128 {
    let mut s = 0i128;
    for (i, &xi) in x.iter().enumerate() {
        if xi == 0 {
            continue;
        }
        for (j, &xj) in x.iter().enumerate() {
            s += xi as i128 * xj as i128 * g[i][j] as i128;
        }
    }
    s
}

/// Number of vectors of square `-2`.
pub fn count_roots(l: &Lattice) -> Result<usize> {
    Ok(short_vectors(l, -2)?.len())
}
