//! Sublattices, saturation, orthogonal complements and overlattices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::{Lattice, LatticeVector};
use crate::matrix::{self, IMat, QMat};
use crate::rational::{lcm_denoms, Q};

/// A sublattice of `ambient` spanned by independent rows of `basis`.
#[derive(Debug, Clone)]
pub struct Sublattice<'a> {
    pub ambient: &'a Lattice,
    basis: IMat,
}

impl<'a> Sublattice<'a> {
    pub fn new(ambient: &'a Lattice, basis: IMat) -> Result<Self> {
        for v in &basis {
            ambient.check_len(v)?;
        }
        if matrix::rank(&basis) != basis.len() {
            return Err(Error::Dependent);
        }
        Ok(Sublattice { ambient, basis })
    }

    /// The span of arbitrary (possibly dependent) generators.
    pub fn spanned(ambient: &'a Lattice, gens: &[LatticeVector]) -> Result<Self> {
        for v in gens {
            ambient.check_len(v)?;
        }
        let b = matrix::row_basis(&gens.to_vec());
        Ok(Sublattice { ambient, basis: b })
    }

    pub fn basis(&self) -> &IMat {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn gram(&self) -> IMat {
        self.ambient.restrict(&self.basis)
    }

    pub fn as_lattice(&self) -> Result<Lattice> {
        Lattice::new(self.gram(), None)
    }

    /// `(Q ⊗ S) ∩ L`.
    pub fn saturation(&self) -> Sublattice<'a> {
        if self.basis.is_empty() {
            return self.clone();
        }
        Sublattice { ambient: self.ambient, basis: matrix::row_saturation(&self.basis) }
    }

    /// Index of `S` in its saturation.
    pub fn saturation_index(&self) -> BigInt {
        if self.basis.is_empty() {
            return BigInt::one();
        }
        matrix::smith(&self.basis).diag.iter().filter(|d| !d.is_zero()).product()
    }

    pub fn is_primitive(&self) -> bool {
        self.saturation_index().is_one()
    }

    /// Coordinates of `v` in the basis, if `v ∈ S`.
    pub fn coords(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let rows = matrix::to_q(&self.basis);
        let x: Vec<Q> = v.iter().map(|a| Q::from_integer(a.clone())).collect();
        let y = matrix::solve_left(&rows, &x).ok()?;
        if y.iter().all(|c| c.is_integer()) {
            Some(y.iter().map(|c| c.to_integer()).collect())
        } else {
            None
        }
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.coords(v).is_some()
    }

    /// `S^⊥` in the ambient lattice.
    pub fn orthogonal_complement(&self) -> Sublattice<'a> {
        let n = self.ambient.rank();
        if self.basis.is_empty() {
            return Sublattice { ambient: self.ambient, basis: matrix::identity(n) };
        }
        let sg = matrix::mul(&self.basis, self.ambient.gram());
        Sublattice { ambient: self.ambient, basis: matrix::kernel(&sg, n) }
    }

    /// Lattice spanned by `S` together with more vectors.
    pub fn extend(&self, extra: &[LatticeVector]) -> Result<Sublattice<'a>> {
        let mut g = self.basis.clone();
        g.extend(extra.iter().cloned());
        Sublattice::spanned(self.ambient, &g)
    }
}

/// An overlattice `M ⊇ L` with `basis` giving the new basis in `L ⊗ Q` coordinates.
#[derive(Debug, Clone)]
pub struct Overlattice {
    pub lattice: Lattice,
    pub basis: QMat,
}

impl Overlattice {
    /// Coordinates in `M` of a rational vector given in `L` coordinates.
    pub fn coords(&self, x: &[Q]) -> Result<Vec<Q>> {
        matrix::solve_left(&self.basis, x)
    }

    /// Coordinates in `M` of a vector that must lie in `M`.
    pub fn integral_coords(&self, x: &[Q]) -> Result<LatticeVector> {
        let y = self.coords(x)?;
        if y.iter().any(|c| !c.is_integer()) {
            return Err(Error::Inconsistent("vector not in overlattice".into()));
        }
        Ok(y.iter().map(|c| c.to_integer()).collect())
    }
}

/// Adjoins rational glue vectors to `l` and checks the result is even.
pub fn glue(l: &Lattice, glue_vectors: &[Vec<Q>]) -> Result<Overlattice> {
    let n = l.rank();
    for g in glue_vectors {
        if g.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: g.len() });
        }
    }
    let den = lcm_denoms(glue_vectors.iter().flatten());
    let mut gens: IMat = (0..n)
        .map(|i| (0..n).map(|j| if i == j { den.clone() } else { BigInt::zero() }).collect())
        .collect();
    for g in glue_vectors {
        gens.push(g.iter().map(|x| (x * Q::from_integer(den.clone())).to_integer()).collect());
    }
    let b = matrix::row_basis(&gens);
    let basis: QMat = b.iter().map(|r| r.iter().map(|x| Q::new(x.clone(), den.clone())).collect()).collect();
    let gq = matrix::to_q(l.gram());
    let mut gram: IMat = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let v: Q = (0..n)
                .flat_map(|a| (0..n).map(move |c| (a, c)))
                .filter(|&(a, c)| !gq[a][c].is_zero() && !basis[i][a].is_zero() && !basis[j][c].is_zero())
                .map(|(a, c)| &basis[i][a] * &gq[a][c] * &basis[j][c])
                .sum();
            if !v.is_integer() {
                return Err(Error::GlueNotIntegral);
            }
            gram[i][j] = v.to_integer();
        }
        if gram[i][i].is_odd() {
            return Err(Error::GlueNotEven);
        }
    }
    let lattice = Lattice::new(gram, None)?;
    Ok(Overlattice { lattice, basis })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{d_n, e_r, ii, vector};
    use crate::rational::{q, qi};
    use num_traits::Signed;

    #[test]
    fn complement_of_root() {
        let e8 = e_r(8).unwrap();
        let s = Sublattice::new(&e8, vec![vector(&[1, 0, 0, 0, 0, 0, 0, 0])]).unwrap();
        let c = s.orthogonal_complement();
        assert_eq!(c.rank(), 7);
        assert_eq!(c.as_lattice().unwrap().det().abs(), BigInt::from(2));
    }

    #[test]
    fn saturation_index() {
        let l = ii(1, 1).unwrap();
        let s = Sublattice::new(&l, vec![vector(&[2, 4])]).unwrap();
        assert_eq!(s.saturation_index(), BigInt::from(2));
        assert!(s.saturation().is_primitive());
    }

    #[test]
    fn d8_to_e8() {
        // D_8 plus the half-spin vector is E_8.
        let d8 = d_n(8).unwrap();
        let half = vec![qi(1) / qi(2); 8];
        let c = crate::lattice::d_n_from_euclidean(8, &half).unwrap();
        let m = glue(&d8, &[c]).unwrap();
        assert!(m.lattice.is_unimodular());
        assert_eq!(crate::enumerate::count_roots(&m.lattice).unwrap(), 240);
    }

    #[test]
    fn glue_rejects() {
        let d4 = d_n(4).unwrap();
        let x = crate::lattice::d_n_from_euclidean(4, &[q(1, 2), qi(0), qi(0), qi(0)]).unwrap();
        assert!(glue(&d4, &[x]).is_err());
    }
}
