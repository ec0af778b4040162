//! Self-check suites run by `hkl check --all`.

use num_traits::Zero;

use crate::borcherds::{first_relation, gritsenko_relation, mu_table, Embedding, Variant};
use crate::cyclotomic::Cyclotomic;
use crate::divisor::{curve_pairing, git_polarization, paths, pullback, restrict_polarization, MapLabel, CURVES_19};
use crate::dtower::{DecoratedDLattice, Label};
use crate::enumerate::count_roots;
use crate::error::{Error, Result};
use crate::lattice::{d_n, e_r};
use crate::picard::{gauss_sum, picard_rank};
use crate::predictions::{audit_open_interval, positivity_audit, shift_by_one, walls};
use crate::rational::{q, qi, Q};

pub const PICARD_TABLE: [u32; 18] = [1, 2, 1, 1, 1, 1, 1, 1, 2, 3, 2, 2, 2, 3, 2, 2, 3, 4];
pub const MU_TABLE: [u64; 23] = [46, 1, 0, 0, 0, 0, 0, 0, 30, 1, 0, 0, 0, 0, 0, 0, 78, 33, 16, 8, 4, 2, 1];
pub const RESTRICTION_BETAS: [(i64, i64); 9] = [(0, 1), (1, 9), (1, 7), (1, 6), (1, 5), (1, 4), (1, 3), (1, 2), (1, 1)];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn fail(msg: impl Into<String>) -> Error {
    Error::SelfCheck(msg.into())
}

pub fn picard_table() -> Result<String> {
    for (n, want) in (3..=20).zip(PICARD_TABLE) {
        let got = picard_rank(n)?;
        if got != want {
            return Err(fail(format!("N={n}: {got} != {want}")));
        }
    }
    for n in 21..=25 {
        picard_rank(n)?;
    }
    Ok("rank(3..20) matches; 21..25 agree with closed form".into())
}

pub fn mu() -> Result<String> {
    let t = mu_table(3..=25)?;
    for ((n, got), want) in t.iter().zip(MU_TABLE) {
        if *got != want {
            return Err(fail(format!("mu({n}) = {got}, expected {want}")));
        }
    }
    for n in 3..=17 {
        let e = Embedding::new(n, Variant::E8D)?.heegner_coefficients()?;
        if e.coeffs[&Label::Zeta] != t[(n + 5) as usize].1 {
            return Err(fail(format!("E8 variant at N={n} disagrees with mu({})", n + 8)));
        }
    }
    Ok("23 values match; E8 variant gives mu(N+8)".into())
}

pub fn relation_19() -> Result<String> {
    let r = first_relation(19)?;
    if (r.lambda.clone(), r.hn.clone(), r.hh.clone(), r.hu.clone()) != (qi(108), qi(1), qi(14), qi(78)) {
        return Err(fail(format!("got {r}")));
    }
    Ok(r.to_string())
}

pub fn gritsenko() -> Result<String> {
    for n in 4..=10u32 {
        let (x, y) = gritsenko_relation(n)?.solved_for_hh()?;
        if x != qi(2 * (14 - n as i64)) || !y.is_zero() {
            return Err(fail(format!("N={n}: Hh = {x} λ + {y} Hu")));
        }
    }
    let (x, y) = gritsenko_relation(14)?.solved_for_hh()?;
    if !x.is_zero() || y != qi(1) {
        return Err(fail("N=14: expected Hh = Hu"));
    }
    Ok("Hh = 2(14-N)λ for N=4..10; Hh = Hu at N=14".into())
}

pub fn root_counts() -> Result<String> {
    for m in 1..=12usize {
        let c = count_roots(&d_n(m)?)?;
        if c != 2 * m * (m - 1) {
            return Err(fail(format!("|R(D_{m})| = {c}")));
        }
    }
    for (r, want) in (2..=8).zip([2usize, 8, 20, 40, 72, 126, 240]) {
        let c = count_roots(&e_r(r)?)?;
        if c != want {
            return Err(fail(format!("|R(E_{r})| = {c}")));
        }
    }
    Ok("D_1..D_12 and E_2..E_8".into())
}

/// `G(1) = √|A| · ζ_8^{2-N}` with `|A| = 4`.
pub fn gauss_milgram() -> Result<String> {
    for n in 3..=25u32 {
        let d = DecoratedDLattice::new(n)?;
        if d.disc().order() != 4 {
            return Err(fail(format!("N={n}: |A| = {}", d.disc().order())));
        }
        let want = Cyclotomic::zeta(8, 2 - n as i64).scale(&qi(2));
        if gauss_sum(&d, 1) != want {
            return Err(fail(format!("N={n}")));
        }
    }
    Ok("N=3..25".into())
}

pub fn curves() -> Result<String> {
    let rel = first_relation(19)?.as_class()?;
    let pol = git_polarization(19)?;
    let mut pairings = vec![];
    for c in &CURVES_19 {
        if !curve_pairing(c, &rel)?.is_zero() {
            return Err(fail(format!("{} does not annihilate the relation", c.name)));
        }
        pairings.push(curve_pairing(c, &pol)?);
    }
    let want: Vec<Q> = [1, 0, 0, 2].iter().map(|&x| qi(x)).collect();
    if pairings != want {
        return Err(fail(format!("pairings {pairings:?}")));
    }
    Ok("4 curves annihilate the relation; pairings (1, 0, 0, 2)".into())
}

/// `f_N^*` of the relation at `N` against the relation at `N-1`.
pub fn compatible(n: u32) -> Result<bool> {
    let pulled = pullback(MapLabel::F(n), &first_relation(n)?.as_class()?)?;
    Ok(pulled == first_relation(n - 1)?.as_class()?)
}

pub fn compatibility() -> Result<String> {
    let mut others = vec![];
    for n in 5..=25u32 {
        let ok = compatible(n)?;
        if matches!(n % 8, 3..=5) {
            if !ok {
                return Err(fail(format!("N={n}")));
            }
        } else if ok {
            others.push(n);
        }
    }
    Ok(format!("N≡3,4,5 mod 8 compatible; other residues compatible at {others:?}"))
}

pub fn restrictions() -> Result<String> {
    let mut count = 0;
    for n in 11..=25 {
        for p in paths(n, 3) {
            for (a, b) in RESTRICTION_BETAS {
                restrict_polarization(n, &p, &q(a, b))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} restrictions agree with closed forms"))
}

pub fn wall_lists() -> Result<String> {
    let ks = |n| -> Result<Vec<u32>> { Ok(walls(n)?.walls.iter().map(|w| w.k).collect()) };
    if ks(19)? != [1, 2, 3, 4, 5, 6, 7, 9] || ks(18)? != [1, 2, 3, 4, 5, 6, 8] {
        return Err(fail("wall sets"));
    }
    let w = walls(19)?;
    let last = w.walls.last().ok_or_else(|| fail("no walls"))?;
    if last.centers.len() != 1 || last.centers[0].to_string() != "Im(f_{11,19}∘l_{11})" {
        return Err(fail("β=1/9 center"));
    }
    for n in 15..=25 {
        walls(n)?;
    }
    Ok("walls(19), walls(18) match; N=15..25 agree with predicted cases".into())
}

pub fn positivity() -> Result<String> {
    for n in 15..=25u32 {
        if !audit_open_interval(n)? {
            return Err(fail(format!("N={n}")));
        }
        // Mediants of 0/1 and 1/(N-10), one level deeper.
        let m = n as i64;
        for beta in [q(1, m - 9), q(2, 2 * m - 19)] {
            if !positivity_audit(n, &beta)?.passed() {
                return Err(fail(format!("N={n} β={beta}")));
            }
        }
    }
    Ok("N=15..25 positive on (0, 1/(N-10))".into())
}

pub fn shift() -> Result<String> {
    for n in 16..=25 {
        if !shift_by_one(n)? {
            return Err(fail(format!("N={n}")));
        }
    }
    Ok("N=16..25".into())
}

pub fn decorations() -> Result<String> {
    for n in [6, 14] {
        if Embedding::new(n, Variant::D)?.admissible_decorations()?.len() != 1 {
            return Err(fail(format!("N={n}")));
        }
    }
    if Embedding::new(22, Variant::D)?.admissible_decorations()?.len() != 3 {
        return Err(fail("N=22"));
    }
    Ok("one admissible decoration at N=6,14; three at N=22".into())
}

type Suite = (&'static str, fn() -> Result<String>);

pub const SUITES: [Suite; 13] = [
    ("picard-rank", picard_table),
    ("mu-table", mu),
    ("first-relation-19", relation_19),
    ("gritsenko", gritsenko),
    ("root-counts", root_counts),
    ("gauss-milgram", gauss_milgram),
    ("curves-19", curves),
    ("pullback-compatibility", compatibility),
    ("restrictions", restrictions),
    ("walls", wall_lists),
    ("positivity", positivity),
    ("shift-by-one", shift),
    ("decorations", decorations),
];

pub fn run_all() -> Vec<SuiteResult> {
    SUITES
        .iter()
        .map(|(name, f)| match f() {
            Ok(detail) => SuiteResult { name, passed: true, detail },
            Err(e) => SuiteResult { name, passed: false, detail: e.to_string() },
        })
        .collect()
}

