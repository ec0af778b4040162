//! Decorated D-lattices `Λ_N = U ⊕ U ⊕ D_{N-2}`.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::discriminant::{Elem, FiniteQuadraticForm};
use crate::error::{Error, Result};
use crate::lattice::{self, Lattice, LatticeVector};
use crate::rational::{gcd_all, modq, q, qi, Q};

pub use crate::divisor::{boundary_divisor, tau};

/// Names of the four discriminant elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Label {
    Zero,
    Xi,
    Zeta,
    ZetaPrime,
}

/// Which element of square 1 is used as decoration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Decoration {
    /// Class of `(1,0,…,0)` in the `D` factor.
    #[default]
    Standard,
    /// Class of `(½,…,½)`; square 1 only when `N ≡ 6 mod 8`.
    Zeta,
    /// Class of `(-½,½,…,½)`; square 1 only when `N ≡ 6 mod 8`.
    ZetaPrime,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VectorKind {
    Nodal,
    Hyperelliptic,
    Unigonal,
    Other,
}

#[derive(Debug, Clone)]
pub struct DecoratedDLattice {
    n: u32,
    lattice: Lattice,
    disc: FiniteQuadraticForm,
    decoration: Decoration,
    labels: [(Label, Elem); 4],
}

/// `(N - 2) mod 8`.
pub fn residue_a(n: u32) -> u32 {
    (n - 2) % 8
}

/// Lattice coordinates in `Λ_N` of `u1 ⊕ u2 ⊕ x` with `x` Euclidean in `D_{N-2}`.
pub fn assemble(n: u32, u: [i64; 4], x: &[Q]) -> Result<Vec<Q>> {
    let mut c: Vec<Q> = u.iter().map(|&a| qi(a)).collect();
    c.extend(lattice::d_n_from_euclidean(n as usize - 2, x)?);
    Ok(c)
}

fn integral(c: &[Q]) -> LatticeVector {
    c.iter().map(|x| x.to_integer()).collect()
}

impl DecoratedDLattice {
    pub fn new(n: u32) -> Result<Self> {
        Self::with_decoration(n, Decoration::Standard)
    }

    pub fn with_decoration(n: u32, decoration: Decoration) -> Result<Self> {
        if n < 3 {
            return Err(Error::OutOfRange(n as i64));
        }
        let lat = lattice::lambda_n(n as usize)?;
        let disc = FiniteQuadraticForm::of(&lat)?;
        let d = n as usize - 2;
        let half = q(1, 2);
        let mut e1 = vec![qi(0); d];
        e1[0] = qi(1);
        let zeta = vec![half.clone(); d];
        let mut zeta_p = zeta.clone();
        zeta_p[0] = -half;
        let cls = |x: &[Q]| -> Result<Elem> { disc.class_of(&assemble(n, [0; 4], x)?) };
        let (x, z, zp) = (cls(&e1)?, cls(&zeta)?, cls(&zeta_p)?);
        let labels = match decoration {
            Decoration::Standard => [(Label::Zero, disc.zero()), (Label::Xi, x), (Label::Zeta, z), (Label::ZetaPrime, zp)],
            Decoration::Zeta => [(Label::Zero, disc.zero()), (Label::Xi, z), (Label::Zeta, x), (Label::ZetaPrime, zp)],
            Decoration::ZetaPrime => [(Label::Zero, disc.zero()), (Label::Xi, zp), (Label::Zeta, x), (Label::ZetaPrime, z)],
        };
        let out = DecoratedDLattice { n, lattice: lat, disc, decoration, labels };
        out.check_invariants()?;
        Ok(out)
    }

    fn check_invariants(&self) -> Result<()> {
        let d = &self.disc;
        let xi = self.elem(Label::Xi);
        if d.q(xi) != qi(1) {
            return Err(Error::Inconsistent(format!("decoration of N={} has square {}", self.n, d.q(xi))));
        }
        if self.decoration == Decoration::Standard {
            let want = modq(&q(-(self.n as i64 - 2), 4), &qi(2));
            for l in [Label::Zeta, Label::ZetaPrime] {
                if d.q(self.elem(l)) != want {
                    return Err(Error::Inconsistent("q(zeta)".into()));
                }
            }
            let two = |e: &Elem| d.scale(2, e);
            let (z, zp) = (self.elem(Label::Zeta), self.elem(Label::ZetaPrime));
            let ok = if self.n % 2 == 0 {
                two(z) == d.zero() && two(zp) == d.zero() && two(xi) == d.zero()
            } else {
                two(z) == *xi && two(zp) == *xi
            };
            if !ok {
                return Err(Error::Inconsistent("discriminant group structure".into()));
            }
        }
        Ok(())
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn disc(&self) -> &FiniteQuadraticForm {
        &self.disc
    }

    pub fn decoration(&self) -> Decoration {
        self.decoration
    }

    pub fn elem(&self, l: Label) -> &Elem {
        &self.labels.iter().find(|(k, _)| *k == l).expect("all labels present").1
    }

    pub fn label_of(&self, e: &Elem) -> Option<Label> {
        self.labels.iter().find(|(_, v)| v == e).map(|(k, _)| *k)
    }

    fn check_primitive(&self, v: &[BigInt]) -> Result<()> {
        self.lattice.check_len(v)?;
        if v.iter().all(|x| x.is_zero()) {
            return Err(Error::ZeroVector);
        }
        if !gcd_all(v.iter()).is_one() {
            return Err(Error::NotPrimitive);
        }
        Ok(())
    }

    /// `v* = [v / div(v)]`.
    pub fn dual_class(&self, v: &[BigInt]) -> Result<Elem> {
        let div = self.lattice.divisibility(v)?;
        let x: Vec<Q> = v.iter().map(|c| Q::new(c.clone(), div.clone())).collect();
        self.disc.class_of(&x)
    }

    pub fn classify_vector(&self, v: &[BigInt]) -> Result<VectorKind> {
        self.check_primitive(v)?;
        let sq = self.lattice.norm(v);
        let div = self.lattice.divisibility(v)?;
        let star = self.label_of(&self.dual_class(v)?);
        let a = residue_a(self.n) as i64;
        let (sq, div) = (sq.to_i64(), div.to_i64());
        Ok(match (sq, div, star) {
            (Some(-2), Some(1), _) => VectorKind::Nodal,
            (Some(-4), Some(2), Some(Label::Xi)) => VectorKind::Hyperelliptic,
            (Some(s), Some(4), _) if self.n % 2 == 1 && a != 0 && s == -4 * a => VectorKind::Unigonal,
            (Some(s), Some(2), Some(Label::Zeta | Label::ZetaPrime)) if self.n % 2 == 0 && a != 0 && s == -a => {
                VectorKind::Unigonal
            }
            _ => VectorKind::Other,
        })
    }

    pub fn is_reflective(&self, v: &[BigInt]) -> Result<bool> {
        Ok(match self.classify_vector(v)? {
            VectorKind::Nodal | VectorKind::Hyperelliptic => true,
            VectorKind::Unigonal => matches!(self.n % 8, 3 | 4),
            VectorKind::Other => false,
        })
    }

    /// `ρ_v(Λ) = Λ` and `ρ_v` fixes the decoration in `A_Λ`.
    pub fn reflection_preserves(&self, v: &[BigInt]) -> Result<bool> {
        self.check_primitive(v)?;
        let sq = self.lattice.norm(v);
        if !sq.is_negative() {
            return Ok(false);
        }
        let div = self.lattice.divisibility(v)?;
        if !(BigInt::from(2) * &div % &sq).is_zero() {
            return Ok(false);
        }
        let x = self.disc.lift(self.elem(Label::Xi));
        let vq: Vec<Q> = v.iter().map(|c| Q::from_integer(c.clone())).collect();
        let f = qi(2) * self.lattice.inner_q(&x, &vq) / Q::from_integer(sq);
        let img: Vec<Q> = x.iter().zip(&vq).map(|(a, b)| a - &f * b).collect();
        Ok(self.disc.class_of(&img)? == *self.elem(Label::Xi))
    }

    pub fn eichler_equivalent(&self, v: &[BigInt], w: &[BigInt]) -> Result<bool> {
        self.check_primitive(v)?;
        self.check_primitive(w)?;
        if self.lattice.norm(v) != self.lattice.norm(w) {
            return Ok(false);
        }
        let (a, b) = (self.dual_class(v)?, self.dual_class(w)?);
        if a == b {
            return Ok(true);
        }
        let pair = [self.label_of(&a), self.label_of(&b)];
        Ok(matches!(
            pair,
            [Some(Label::Zeta), Some(Label::ZetaPrime)] | [Some(Label::ZetaPrime), Some(Label::Zeta)]
        ))
    }

    /// `e - f` in the first hyperbolic plane.
    pub fn nodal_vector(&self) -> LatticeVector {
        let mut v = vec![BigInt::zero(); self.lattice.rank()];
        v[0] = BigInt::one();
        v[1] = -BigInt::one();
        v
    }

    /// `(2,0,…,0)` in the `D` factor, or `2e + g` when the factor is `D_1`.
    pub fn hyperelliptic_vector(&self) -> Result<LatticeVector> {
        let d = self.n as usize - 2;
        let mut x = vec![qi(0); d];
        if d == 1 {
            x[0] = qi(2);
            return Ok(integral(&assemble(self.n, [2, 0, 0, 0], &x)?));
        }
        x[0] = qi(2);
        Ok(integral(&assemble(self.n, [0; 4], &x)?))
    }

    /// `4e + 4kf + (2,…,2)` for `N` odd, `2e + 2kf + (1,…,1)` for `N` even, `N-2 = 8k+a`.
    pub fn unigonal_vector(&self) -> Result<Option<LatticeVector>> {
        let a = residue_a(self.n);
        if a == 0 {
            return Ok(None);
        }
        let d = self.n as usize - 2;
        let k = ((self.n - 2) / 8) as i64;
        let (s, x) = if self.n % 2 == 1 { (4, qi(2)) } else { (2, qi(1)) };
        Ok(Some(integral(&assemble(self.n, [s, s * k, 0, 0], &vec![x; d])?)))
    }
}
