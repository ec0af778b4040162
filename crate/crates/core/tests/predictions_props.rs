use std::collections::BTreeSet;

use hkl_core::predictions::{
    audit_open_interval, centers, positivity_audit, predicted_center, shift_by_one, t_value, tower, walls, Stratum,
    StratumKind,
};
use hkl_core::rational::{q, qi, Q};
use num_traits::Zero;

use StratumKind::*;

fn has(tw: &[Stratum], kind: StratumKind, m: u32) -> bool {
    tw.iter().any(|s| s.kind == kind && s.m == m)
}

#[test]
fn tower_examples() {
    let t19 = tower(19).unwrap();
    for m in 11..=19 {
        assert!(has(&t19, FPath, m));
    }
    let ls: BTreeSet<u32> = t19.iter().filter(|s| s.kind == FThenL).map(|s| s.m).collect();
    assert_eq!(ls, BTreeSet::from([11, 19]));
    assert!(has(&t19, FThenM, 12) && has(&t19, FThenQ, 13));
    let t15 = tower(15).unwrap();
    let ls: Vec<u32> = t15.iter().filter(|s| s.kind == FThenL).map(|s| s.m).collect();
    assert_eq!(ls, vec![11]);
    let t20 = tower(20).unwrap();
    let ms: BTreeSet<u32> = t20.iter().filter(|s| s.kind == FThenM).map(|s| s.m).collect();
    assert_eq!(ms, BTreeSet::from([12, 20]));
    assert!(tower(14).is_err());
}

#[test]
fn tower_enumeration_is_complete() {
    for n in 15..=40u32 {
        let tw = tower(n).unwrap();
        let mut want = 0;
        for m in 11..=n {
            want += 1;
            want += (m % 8 == 3) as usize;
            want += (m % 8 == 4 && m >= 12) as usize;
            want += (m % 8 == 5 && m >= 13) as usize;
        }
        assert_eq!(tw.len(), want, "N={n}");
        for s in &tw {
            let dim = if s.kind == FPath { s.m } else { s.m - 1 };
            assert_eq!(s.dim, dim);
        }
    }
}

#[test]
fn t_value_examples() {
    let t = |k, m| t_value(19, &Stratum::new(k, m, 19).unwrap()).unwrap();
    assert_eq!(t(FPath, 14), Some(5));
    assert_eq!(t(FThenL, 11), Some(9));
    assert_eq!(t(FPath, 12), Some(5));
    assert_eq!(t(FPath, 18), Some(1));
    assert_eq!(t(FPath, 19), None);
    assert_eq!(t(FThenL, 19), Some(1));
    let t20 = |k, m| t_value(20, &Stratum::new(k, m, 20).unwrap()).unwrap();
    assert_eq!(t20(FThenM, 20), Some(1));
    assert_eq!(t20(FThenL, 19), Some(4));
    assert!(Stratum::new(FThenL, 12, 19).is_err());
    assert!(t_value(18, &Stratum::new(FPath, 12, 19).unwrap()).is_err());
}

/// Non-centers: item (3) strata, the two composite images sharing `t` with their
/// f-superset, and strata with no `t`.
fn is_center_oracle(s: &Stratum) -> bool {
    if s.t_value.is_none() {
        return false;
    }
    match s.kind {
        FPath => s.m >= 14,
        FThenM => s.m == 12 || s.m == s.n,
        FThenQ => s.m == 13 || s.m == s.n,
        FThenL => true,
    }
}

#[test]
fn centers_match_oracle() {
    for n in 15..=40u32 {
        let tw = tower(n).unwrap();
        let cs = centers(n).unwrap();
        for s in &tw {
            assert_eq!(cs.contains(s), is_center_oracle(s), "N={n} {s}");
        }
        for x in &cs {
            for y in tw.iter().filter(|y| x.properly_contained_in(y)) {
                assert!(y.t_value.is_none_or(|u| x.t_value.unwrap() > u), "N={n} {x} ⊂ {y}");
            }
        }
    }
    let c19 = centers(19).unwrap();
    assert!(!c19.iter().any(|s| s.kind == FPath && s.m <= 13));
    assert!(c19.iter().any(|s| s.kind == FThenL && s.m == 11 && s.t_value == Some(9)));
    assert!(c19.iter().any(|s| s.kind == FPath && s.m == 18 && s.t_value == Some(1)));
}

#[test]
fn wall_sets() {
    for n in 15..=40u32 {
        let r = walls(n).unwrap();
        let got: Vec<Q> = r.walls.iter().map(|w| w.beta.clone()).collect();
        let want: Vec<Q> = (1..=n - 10).filter(|&k| k != n - 11).map(|k| q(1, k as i64)).collect();
        assert_eq!(got, want, "N={n}");
        assert!(got.windows(2).all(|w| w[0] > w[1]));
        assert!(r.note.is_none());
    }
    let w19: Vec<Q> = walls(19).unwrap().walls.iter().map(|w| w.beta.clone()).collect();
    assert_eq!(w19, [1, 2, 3, 4, 5, 6, 7, 9].map(|k| q(1, k)).to_vec());
    let w18: Vec<Q> = walls(18).unwrap().walls.iter().map(|w| w.beta.clone()).collect();
    assert_eq!(w18, [1, 2, 3, 4, 5, 6, 8].map(|k| q(1, k)).to_vec());
    for n in 11..=14 {
        let r = walls(n).unwrap();
        assert!(r.walls.is_empty() && r.note.is_some());
    }
}

#[test]
fn prediction_cases_at_19() {
    let r = walls(19).unwrap();
    let cases: Vec<(u32, u8)> = r.walls.iter().map(|w| (w.k, w.case)).collect();
    assert_eq!(cases, vec![(1, 0), (2, 1), (3, 1), (4, 1), (5, 1), (6, 4), (7, 5), (9, 3)]);
    let last = r.walls.last().unwrap();
    assert!(last.centers.iter().any(|s| s.to_string() == "Im(f_{11,19}∘l_{11})"));
    let (case, comps) = predicted_center(19, 9).unwrap();
    assert_eq!(case, 3);
    assert!(comps.iter().any(|c| c.kind == FPath && c.m == 10 && !c.in_tower));
    assert!(predicted_center(19, 8).is_err());
    assert!(predicted_center(19, 10).is_err());
}

#[test]
fn positivity_below_first_wall() {
    for n in 15..=25u32 {
        let w = (n - 10) as i64;
        // Mediants 1/(w+1) and 2/(2w+1) lie strictly below 1/w.
        for beta in [q(1, w + 1), q(2, 2 * w + 1)] {
            let r = positivity_audit(n, &beta).unwrap();
            assert!(r.passed(), "N={n} β={beta}");
        }
        assert!(audit_open_interval(n).unwrap(), "N={n}");
        let at = positivity_audit(n, &q(1, w)).unwrap();
        assert!(at.entries.iter().any(|e| e.lambda_coeff.is_zero()), "N={n}");
    }
}

#[test]
fn positivity_examples_19() {
    let r = positivity_audit(19, &q(1, 10)).unwrap();
    assert!(r.passed());
    let r = positivity_audit(19, &q(1, 9)).unwrap();
    let fl = r.entries.iter().find(|e| e.stratum.kind == FThenL && e.stratum.m == 11).unwrap();
    assert_eq!(fl.lambda_coeff, qi(0));
    let r = positivity_audit(19, &q(1, 2)).unwrap();
    let hh = r.entries.iter().find(|e| e.stratum.kind == FPath && e.stratum.m == 18).unwrap();
    assert_eq!(hh.lambda_coeff, q(1, 2));
    let f17 = r.entries.iter().find(|e| e.stratum.kind == FPath && e.stratum.m == 17).unwrap();
    assert_eq!(f17.lambda_coeff, qi(0));
    assert!(positivity_audit(19, &qi(2)).is_err());
}

#[test]
fn shift_by_one_sets() {
    for n in 16..=40u32 {
        assert!(shift_by_one(n).unwrap(), "N={n}");
    }
}
