//! Independent brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_integer::Integer;
use num_rational::Ratio;

pub type R = Ratio<i128>;

pub fn det_i128(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    // Bareiss fraction-free elimination.
    let mut a = m.to_vec();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

pub fn adjugate(g: &[Vec<i64>]) -> Vec<Vec<i128>> {
    let n = g.len();
    let mut adj = vec![vec![0i128; n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Vec<Vec<i128>> = (0..n)
                .filter(|&r| r != j)
                .map(|r| (0..n).filter(|&c| c != i).map(|c| g[r][c] as i128).collect())
                .collect();
            let s = if (i + j) % 2 == 0 { 1 } else { -1 };
            adj[i][j] = s * det_i128(&minor);
        }
    }
    adj
}

pub fn det(g: &[Vec<i64>]) -> i128 {
    det_i128(&g.iter().map(|r| r.iter().map(|&x| x as i128).collect::<Vec<_>>()).collect::<Vec<_>>())
}

/// All `x` in `Z^n` with `xᵀGx = norm`, `G` negative definite, by scanning the
/// box `|x_i| <= sqrt(|norm| · (-G)^{-1}_{ii})`.
pub fn box_vectors(g: &[Vec<i64>], norm: i64) -> Vec<Vec<i64>> {
    let n = g.len();
    let d = det(g);
    let adj = adjugate(g);
    let bounds: Vec<i64> = (0..n)
        .map(|i| {
            // (-G)^{-1}_{ii} = -adj_ii / det
            let num = -(norm as i128) * -adj[i][i];
            let den = d;
            let r = R::new(num, den);
            let mut b = 0i64;
            while R::from_integer((b as i128 + 1) * (b as i128 + 1)) <= r {
                b += 1;
            }
            b
        })
        .collect();
    let mut out = vec![];
    let mut x: Vec<i64> = bounds.iter().map(|b| -b).collect();
    loop {
        let mut s = 0i64;
        for i in 0..n {
            for j in 0..n {
                s += x[i] * g[i][j] * x[j];
            }
        }
        if s == norm {
            out.push(x.clone());
        }
        let mut i = 0;
        loop {
            if i == n {
                out.sort();
                return out;
            }
            if x[i] < bounds[i] {
                x[i] += 1;
                break;
            }
            x[i] = -bounds[i];
            i += 1;
        }
    }
}

/// Discriminant form by brute force: `A = G^{-1}Z^n / Z^n`, elements stored as
/// `adj·x mod |det|`. Returns the multiset of `(order, q mod 2)`.
pub fn discriminant_profile(g: &[Vec<i64>]) -> BTreeMap<(u64, R), usize> {
    let n = g.len();
    let d = det(g);
    let m = d.abs();
    let adj = adjugate(g);
    let mut seen = std::collections::BTreeSet::new();
    let mut x = vec![0i128; n];
    loop {
        let y: Vec<i128> = (0..n).map(|i| (0..n).map(|j| adj[i][j] * x[j]).sum::<i128>().mod_floor(&m)).collect();
        seen.insert(y);
        let mut i = 0;
        loop {
            if i == n {
                break;
            }
            if x[i] + 1 < m {
                x[i] += 1;
                break;
            }
            x[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
    }
    let mut prof = BTreeMap::new();
    for y in &seen {
        // element v = y / det (sign of det absorbed into the representative)
        let v: Vec<R> = y.iter().map(|&c| R::new(c, d)).collect();
        let mut q = R::from_integer(0);
        for i in 0..n {
            for j in 0..n {
                q += v[i] * R::from_integer(g[i][j] as i128) * v[j];
            }
        }
        let two = R::from_integer(2);
        let q = q - two * (q / two).floor();
        let mut ord = 1u64;
        while !v.iter().all(|c| (*c * R::from_integer(ord as i128)).is_integer()) {
            ord += 1;
        }
        *prof.entry((ord, q)).or_insert(0) += 1;
    }
    prof
}

/// `q` values of `0, ξ, ζ, ζ'` for `D_m` with the negated Euclidean form, read off
/// from the Euclidean model: `-|x|²` mod 2.
pub fn d_tower_q(m: u32) -> [R; 4] {
    let two = R::from_integer(2);
    let md = |x: R| x - two * (x / two).floor();
    let m = m as i128;
    [R::from_integer(0), md(R::from_integer(-1)), md(R::new(-m, 4)), md(R::new(-m, 4))]
}

/// Number of roots of `D_m` and `E_r` by the classical formulas.
pub fn roots_d(m: usize) -> usize {
    2 * m * (m.saturating_sub(1))
}

pub fn roots_e(r: usize) -> usize {
    [2, 8, 20, 40, 72, 126, 240][r - 2]
}
