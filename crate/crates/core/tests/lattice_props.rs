mod common;

use hkl_core::discriminant::FiniteQuadraticForm;
use hkl_core::lattice::{self, Lattice};
use hkl_core::matrix::{self, big};
use hkl_core::sublattice::Sublattice;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use proptest::prelude::*;

fn small_lattice() -> impl Strategy<Value = Lattice> {
    prop_oneof![
        (1usize..=5).prop_map(|n| lattice::a_n(n).unwrap()),
        (1usize..=5).prop_map(|n| lattice::d_n(n).unwrap()),
        (2usize..=6).prop_map(|r| lattice::e_r(r).unwrap()),
        (1i64..=3).prop_map(|m| lattice::hyperbolic_scaled(m).unwrap()),
    ]
}

fn to_i64(g: &[Vec<BigInt>]) -> Vec<Vec<i64>> {
    g.iter().map(|r| r.iter().map(|x| x.to_i64().unwrap()).collect()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn direct_sum_is_additive(a in small_lattice(), b in small_lattice()) {
        let s = a.direct_sum(&b);
        prop_assert_eq!(s.rank(), a.rank() + b.rank());
        prop_assert_eq!(s.det(), a.det() * b.det());
        let (p1, n1) = a.signature();
        let (p2, n2) = b.signature();
        prop_assert_eq!(s.signature(), (p1 + p2, n1 + n2));
        prop_assert_eq!(s.det().to_i128().unwrap(), common::det(&to_i64(s.gram())));
    }

    #[test]
    fn json_round_trip(a in small_lattice(), b in small_lattice()) {
        let s = a.direct_sum(&b);
        let back = Lattice::from_json(&s.to_json().unwrap()).unwrap();
        prop_assert_eq!(back.gram(), s.gram());
    }

    #[test]
    fn rescale_scales_discriminant(a in small_lattice(), m in 2i64..=3) {
        let r = a.rescale(m).unwrap();
        let want = a.det() * BigInt::from(m).pow(a.rank() as u32);
        prop_assert_eq!(r.det(), want);
    }

    #[test]
    fn saturation_index_brute_force(
        gens in prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 1..=3),
    ) {
        let amb = lattice::d_n(4).unwrap();
        let gens: Vec<Vec<BigInt>> = gens.iter().map(|g| g.iter().map(|&x| BigInt::from(x)).collect()).collect();
        let s = Sublattice::spanned(&amb, &gens).unwrap();
        prop_assume!(s.rank() > 0);
        let sat = s.saturation();
        let again = sat.saturation();
        prop_assert_eq!(again.rank(), sat.rank());
        prop_assert!(again.basis().iter().all(|v| sat.contains(v)));
        prop_assert!(sat.basis().iter().all(|v| again.contains(v)));
        prop_assert!(sat.is_primitive());
        let idx = s.saturation_index().to_i64().unwrap();
        // x is in the saturation iff some multiple kx with k <= index lies in S.
        let r = 2i64;
        for a in -r..=r {
            for b in -r..=r {
                for c in -r..=r {
                    for d in [-1i64, 0, 1] {
                        let x: Vec<BigInt> = [a, b, c, d].iter().map(|&t| BigInt::from(t)).collect();
                        let brute = (1..=idx).any(|k| {
                            let kx: Vec<BigInt> = x.iter().map(|t| t * k).collect();
                            s.contains(&kx)
                        });
                        prop_assert_eq!(sat.contains(&x), brute);
                    }
                }
            }
        }
        // |det| of the Gram of S = idx² · |det| of the Gram of Sat.
        let ds = matrix::det(&s.gram()).abs();
        let dt = matrix::det(&sat.gram()).abs();
        prop_assert_eq!(ds, dt * BigInt::from(idx * idx));
    }

    #[test]
    fn complement_is_orthogonal(v in prop::collection::vec(-3i64..=3, 8)) {
        prop_assume!(v.iter().any(|&x| x != 0));
        let amb = lattice::e_r(8).unwrap();
        let s = Sublattice::new(&amb, vec![v.iter().map(|&x| BigInt::from(x)).collect()]).unwrap();
        let c = s.orthogonal_complement();
        prop_assert_eq!(c.rank(), 7);
        for w in c.basis() {
            prop_assert!(amb.inner(&s.basis()[0], w).is_zero());
        }
        prop_assert!(c.is_primitive());
    }

    #[test]
    fn lll_preserves_lattice(a in small_lattice(), b in small_lattice()) {
        let s = a.direct_sum(&b);
        prop_assume!(s.is_negative_definite());
        let neg: Vec<Vec<BigInt>> = s.gram().iter().map(|r| r.iter().map(|x| -x).collect()).collect();
        let (t, red) = matrix::lll_gram(&neg).unwrap();
        prop_assert_eq!(matrix::det(&t).abs(), BigInt::one());
        prop_assert_eq!(matrix::congruence(&neg, &t), red);
    }
}

#[test]
fn standard_names() {
    assert_eq!(lattice::standard("U").unwrap().gram(), &big(&[vec![0, 1], vec![1, 0]]));
    assert_eq!(lattice::standard("E8").unwrap().det(), BigInt::one());
    assert_eq!(lattice::standard("D4").unwrap().det(), BigInt::from(4));
    assert!(lattice::standard("Z9").is_err());
}

#[test]
fn unimodular_even() {
    for (p, q) in [(1, 1), (1, 9), (2, 10), (2, 18), (2, 26)] {
        let l = lattice::ii(p, q).unwrap();
        assert!(l.is_unimodular());
        assert_eq!(l.signature(), (p, q));
    }
    assert!(lattice::ii(2, 3).is_err());
}

#[test]
fn lambda_discriminant_is_d_factor() {
    for n in 3..=25usize {
        let l = lattice::lambda_n(n).unwrap();
        assert_eq!(l.signature(), (2, n));
        let a = FiniteQuadraticForm::of(&l).unwrap();
        let d = FiniteQuadraticForm::of(&lattice::d_n(n - 2).unwrap()).unwrap();
        assert!(a.is_isometric(&d), "N={n}");
        assert_eq!(a.order(), 4);
    }
}

#[test]
fn rejects_bad_input() {
    assert!(Lattice::from_rows(&[vec![-2, 1], vec![0, -2]], "asym").is_err());
    assert!(Lattice::from_rows(&[vec![-1]], "odd").is_err());
    assert!(Lattice::from_rows(&[vec![-2, 2], vec![2, -2]], "degenerate").is_err());
    assert!(Lattice::from_json("{\"gram\":[[0]]}").is_err());
    assert!(Lattice::from_json("not json").is_err());
}
