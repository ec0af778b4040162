mod common;

use hkl_core::cyclotomic::Cyclotomic;
use hkl_core::dtower::DecoratedDLattice;
use hkl_core::picard::{closed_form_dim, cusp_form_dim, gauss_sum, picard_rank, report};
use hkl_core::rational::qi;
use num_traits::ToPrimitive;
use proptest::prelude::*;

const RANKS: [(u32, u32); 18] = [
    (3, 1),
    (4, 2),
    (5, 1),
    (6, 1),
    (7, 1),
    (8, 1),
    (9, 1),
    (10, 1),
    (11, 2),
    (12, 3),
    (13, 2),
    (14, 2),
    (15, 2),
    (16, 3),
    (17, 2),
    (18, 2),
    (19, 3),
    (20, 4),
];

#[test]
fn rank_table() {
    for (n, want) in RANKS {
        assert_eq!(picard_rank(n).unwrap(), want, "N={n}");
    }
}

#[test]
fn closed_form_agrees_up_to_40() {
    for n in 3..=40u32 {
        assert_eq!(cusp_form_dim(n).unwrap(), closed_form_dim(n), "N={n}");
    }
}

#[test]
fn independent_closed_form() {
    // Odd: floor((N-2)/8). Even: floor((N-4)/6) corrected by -1, 0, +1 for N = 2, 0|6, 4 mod 8.
    for n in 3..=40i64 {
        let want = if n % 2 == 1 {
            (n - 2) / 8
        } else {
            let c = match n % 8 {
                2 => -1,
                4 => 1,
                _ => 0,
            };
            ((n - 4) / 6 + c).max(0)
        };
        assert_eq!(closed_form_dim(n as u32) as i64, want, "N={n}");
    }
}

#[test]
fn gauss_milgram() {
    for n in 3..=25u32 {
        let d = DecoratedDLattice::new(n).unwrap();
        // Oracle: Σ exp(πi q) over the four q-values of the Euclidean model.
        let mut want = Cyclotomic::zero(8);
        for qv in common::d_tower_q(n - 2) {
            let e = (qv * common::R::from_integer(4)).to_integer();
            assert!((qv * common::R::from_integer(4)).is_integer());
            want = want + Cyclotomic::zeta(8, e.to_i64().unwrap());
        }
        let got = gauss_sum(&d, 1);
        assert_eq!(got, want, "N={n}");
        let milgram = Cyclotomic::zeta(8, 2 - n as i64).scale(&qi(2));
        assert_eq!(got, milgram, "N={n}");
    }
}

#[test]
fn report_is_consistent() {
    for n in 3..=30u32 {
        let r = report(n).unwrap();
        assert_eq!(r.rank, r.dim_cusp + 1);
        assert_eq!(r.rank, r.closed_form_rank);
        assert!(r.d == 3 || r.d == 4, "N={n}: d={}", r.d);
    }
    assert!(report(2).is_err());
    assert!(picard_rank(26).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gauss_sum_conjugation(n in 3u32..=25, k in -12i64..=12) {
        let d = DecoratedDLattice::new(n).unwrap();
        prop_assert_eq!(gauss_sum(&d, -k), gauss_sum(&d, k).conj());
    }

    #[test]
    fn gauss_sum_period_eight(n in 3u32..=25, k in -12i64..=12) {
        let d = DecoratedDLattice::new(n).unwrap();
        prop_assert_eq!(gauss_sum(&d, k + 8), gauss_sum(&d, k));
    }
}
