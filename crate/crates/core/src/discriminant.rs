//! Discriminant forms `A_L = L*/L` with their finite quadratic form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::matrix::{self, IMat, QMat};
use crate::rational::{modq, qi, Q};

/// Group element, one residue per cyclic factor.
pub type Elem = Vec<u64>;

#[derive(Debug, Clone)]
pub struct FiniteQuadraticForm {
    orders: Vec<u64>,
    gens: QMat,
    gen_gram: QMat,
    p: IMat,
    gram: IMat,
}

const MAX_ORDER: u64 = 1 << 20;

impl FiniteQuadraticForm {
    pub fn of(l: &Lattice) -> Result<Self> {
        let g = l.gram().clone();
        let s = matrix::smith(&g);
        let ginv = matrix::inverse(&matrix::to_q(&g))?;
        let mut orders = vec![];
        let mut gens = vec![];
        let mut prow = vec![];
        let mut total: u64 = 1;
        for (i, d) in s.diag.iter().enumerate() {
            if d.is_one() {
                continue;
            }
            let d = d.to_u64().ok_or(Error::Overflow("discriminant order"))?;
            total = total.checked_mul(d).filter(|&t| t <= MAX_ORDER).ok_or(Error::Overflow("discriminant order"))?;
            orders.push(d);
            let col: Vec<Q> = s.pinv.iter().map(|r| Q::from_integer(r[i].clone())).collect();
            gens.push(ginv.iter().map(|r| r.iter().zip(&col).map(|(a, b)| a * b).sum()).collect::<Vec<Q>>());
            prow.push(s.p[i].clone());
        }
        let gen_gram = gens.iter().map(|u| gens.iter().map(|v| l.inner_q(u, v)).collect()).collect();
        Ok(FiniteQuadraticForm { orders, gens, gen_gram, p: prow, gram: g })
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn order(&self) -> u64 {
        self.orders.iter().product()
    }

    /// Dual-lattice representative of each cyclic generator.
    pub fn generators(&self) -> &QMat {
        &self.gens
    }

    pub fn zero(&self) -> Elem {
        vec![0; self.orders.len()]
    }

    pub fn elements(&self) -> Vec<Elem> {
        let mut out = vec![self.zero()];
        for (i, &d) in self.orders.iter().enumerate() {
            let mut next = Vec::with_capacity(out.len() * d as usize);
            for e in &out {
                for k in 0..d {
                    let mut x = e.clone();
                    x[i] = k;
                    next.push(x);
                }
            }
            out = next;
        }
        out
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        a.iter().zip(b).zip(&self.orders).map(|((x, y), d)| (x + y) % d).collect()
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        a.iter().zip(&self.orders).map(|(x, d)| (d - x) % d).collect()
    }

    pub fn scale(&self, k: i64, a: &Elem) -> Elem {
        a.iter()
            .zip(&self.orders)
            .map(|(x, &d)| ((k as i128 * *x as i128).rem_euclid(d as i128)) as u64)
            .collect()
    }

    pub fn elem_order(&self, a: &Elem) -> u64 {
        a.iter().zip(&self.orders).map(|(&x, &d)| d / x.gcd(&d)).fold(1, |acc, o| acc.lcm(&o))
    }

    fn pair_raw(&self, a: &Elem, b: &Elem) -> Q {
        let mut s = Q::zero();
        for (i, x) in a.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if *y != 0 {
                    s += &self.gen_gram[i][j] * Q::from_integer(BigInt::from(x * y));
                }
            }
        }
        s
    }

    /// `q(a) ∈ [0, 2)`.
    pub fn q(&self, a: &Elem) -> Q {
        modq(&self.pair_raw(a, a), &qi(2))
    }

    /// `b(a, c) ∈ [0, 1)`.
    pub fn b(&self, a: &Elem, c: &Elem) -> Q {
        modq(&self.pair_raw(a, c), &qi(1))
    }

    pub fn q_values(&self) -> Vec<(Elem, Q)> {
        self.elements().into_iter().map(|e| {
            let q = self.q(&e);
            (e, q)
        }).collect()
    }

    /// Class of a vector of `L*` given in lattice coordinates.
    pub fn class_of(&self, x: &[Q]) -> Result<Elem> {
        if x.len() != self.gram.len() {
            return Err(Error::DimensionMismatch { expected: self.gram.len(), got: x.len() });
        }
        let mut y = vec![];
        for row in &self.gram {
            let v: Q = row.iter().zip(x).map(|(g, xi)| Q::from_integer(g.clone()) * xi).sum();
            if !v.is_integer() {
                return Err(Error::Inconsistent("vector not in dual lattice".into()));
            }
            y.push(v.to_integer());
        }
        Ok(self
            .p
            .iter()
            .zip(&self.orders)
            .map(|(row, &d)| {
                let s: BigInt = row.iter().zip(&y).map(|(a, b)| a * b).sum();
                s.mod_floor(&BigInt::from(d)).to_u64().expect("residue")
            })
            .collect())
    }

    /// A dual-lattice representative of `a`.
    pub fn lift(&self, a: &Elem) -> Vec<Q> {
        let n = self.gram.len();
        let mut out = vec![Q::zero(); n];
        for (k, g) in a.iter().zip(&self.gens) {
            for (o, gi) in out.iter_mut().zip(g) {
                *o += gi * Q::from_integer(BigInt::from(*k));
            }
        }
        out
    }

    /// Orbits of `A` under `±1`, as representatives.
    pub fn orbits_pm(&self) -> Vec<Elem> {
        let mut seen = std::collections::BTreeSet::new();
        let mut reps = vec![];
        for e in self.elements() {
            if seen.contains(&e) {
                continue;
            }
            seen.insert(self.neg(&e));
            seen.insert(e.clone());
            reps.push(e);
        }
        reps
    }

    /// Isometry test by search over generator images.
    pub fn is_isometric(&self, other: &FiniteQuadraticForm) -> bool {
        if self.order() != other.order() {
            return false;
        }
        let mut sig_a: Vec<(u64, Q)> = self.elements().iter().map(|e| (self.elem_order(e), self.q(e))).collect();
        let mut sig_b: Vec<(u64, Q)> = other.elements().iter().map(|e| (other.elem_order(e), other.q(e))).collect();
        sig_a.sort();
        sig_b.sort();
        if sig_a != sig_b {
            return false;
        }
        if self.order() > 4096 {
            return true;
        }
        let targets = other.elements();
        let mut images: Vec<Elem> = vec![];
        self.search(other, &targets, &mut images)
    }

    fn search(&self, other: &FiniteQuadraticForm, targets: &[Elem], images: &mut Vec<Elem>) -> bool {
        let i = images.len();
        if i == self.orders.len() {
            let mut hit = std::collections::BTreeSet::new();
            for e in self.elements() {
                let mut img = other.zero();
                for (k, im) in e.iter().zip(images.iter()) {
                    img = other.add(&img, &other.scale(*k as i64, im));
                }
                hit.insert(img);
            }
            return hit.len() as u64 == self.order();
        }
        let d = self.orders[i];
        let mut unit = self.zero();
        unit[i] = 1;
        for t in targets {
            if other.scale(d as i64, t) != other.zero() || other.q(t) != self.q(&unit) {
                continue;
            }
            let ok = images.iter().enumerate().all(|(j, im)| {
                let mut uj = self.zero();
                uj[j] = 1;
                other.b(im, t) == self.b(&uj, &unit)
            });
            if !ok {
                continue;
            }
            images.push(t.clone());
            if self.search(other, targets, images) {
                return true;
            }
            images.pop();
        }
        false
    }
}
