//! Wall predictions for `λ(N) + βΔ(N)` on `F(N)`, `N ≥ 15`.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::borcherds::gritsenko_relation;
use crate::divisor::{restrict_polarization, DivisorClass, MapLabel, HH, HU, LAMBDA};
use crate::error::{Error, Result};
use crate::rational::{fmt_q, q, qi, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StratumKind {
    FPath,
    FThenL,
    FThenM,
    FThenQ,
}

impl StratumKind {
    fn residue(self) -> Option<u32> {
        match self {
            StratumKind::FPath => None,
            StratumKind::FThenL => Some(3),
            StratumKind::FThenM => Some(4),
            StratumKind::FThenQ => Some(5),
        }
    }

    fn letter(self) -> &'static str {
        match self {
            StratumKind::FPath => "f",
            StratumKind::FThenL => "l",
            StratumKind::FThenM => "m",
            StratumKind::FThenQ => "q",
        }
    }
}

/// An element of `Tower(N)`: `Im f_{M,N}` or `Im(f_{M,N} ∘ x_M)` with `x ∈ {l, m, q}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Stratum {
    pub kind: StratumKind,
    #[serde(rename = "M")]
    pub m: u32,
    #[serde(rename = "N")]
    pub n: u32,
    pub dim: u32,
    pub t_value: Option<u32>,
}

impl Stratum {
    pub fn new(kind: StratumKind, m: u32, n: u32) -> Result<Self> {
        if n < 15 {
            return Err(Error::OutOfRange(n.into()));
        }
        let lo = match kind {
            StratumKind::FPath | StratumKind::FThenL => 11,
            StratumKind::FThenM => 12,
            StratumKind::FThenQ => 13,
        };
        if m < lo || m > n || kind.residue().is_some_and(|r| m % 8 != r) {
            return Err(Error::NotInTower);
        }
        let dim = match kind {
            StratumKind::FPath => m,
            _ => m - 1,
        };
        Ok(Stratum { kind, m, n, dim, t_value: t_of(kind, m, n) })
    }

    /// The composite `f_N, f_{N-1}, …, f_{M+1}`, then `l_M`, `m_M` or `q_M`.
    pub fn path(&self) -> Vec<MapLabel> {
        let mut p: Vec<MapLabel> = (self.m + 1..=self.n).rev().map(MapLabel::F).collect();
        match self.kind {
            StratumKind::FPath => {}
            StratumKind::FThenL => p.push(MapLabel::L(self.m)),
            StratumKind::FThenM => p.push(MapLabel::M(self.m)),
            StratumKind::FThenQ => p.push(MapLabel::Q(self.m)),
        }
        p
    }

    /// Proper containment `self ⊊ other`, read off from composition paths.
    pub fn properly_contained_in(&self, other: &Stratum) -> bool {
        if self.n != other.n || self == other {
            return false;
        }
        use StratumKind::*;
        match other.kind {
            FPath => self.m <= other.m,
            FThenL => false,
            FThenM => self.kind == FThenL && self.m + 1 == other.m,
            FThenQ => (self.kind == FThenL && self.m + 2 == other.m) || (self.kind == FThenM && self.m + 1 == other.m),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "kind": self.kind,
            "M": self.m,
            "N": self.n,
            "dim": self.dim,
            "t_value": self.t_value,
            "label": self.to_string(),
        })
    }
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (m, n) = (self.m, self.n);
        match (self.kind, m == n) {
            (StratumKind::FPath, true) => write!(f, "F({n})"),
            (StratumKind::FPath, false) => write!(f, "Im f_{{{m},{n}}}"),
            (k, true) => write!(f, "Im {}_{{{m}}}", k.letter()),
            (k, false) => write!(f, "Im(f_{{{m},{n}}}∘{}_{{{m}}})", k.letter()),
        }
    }
}

fn t_of(kind: StratumKind, m: u32, n: u32) -> Option<u32> {
    let t = match kind {
        StratumKind::FPath if m >= 14 => n - m,
        StratumKind::FPath => n - 14,
        StratumKind::FThenL if m + 1 == n => 4,
        StratumKind::FThenL => n - m + 1,
        StratumKind::FThenM if m == n => 1,
        StratumKind::FThenM | StratumKind::FThenQ => n - m,
    };
    (t > 0).then_some(t)
}

pub fn t_value(n: u32, s: &Stratum) -> Result<Option<u32>> {
    if s.n != n || Stratum::new(s.kind, s.m, n).ok().as_ref() != Some(s) {
        return Err(Error::NotInTower);
    }
    Ok(s.t_value)
}

fn order(a: &Stratum, b: &Stratum) -> std::cmp::Ordering {
    let key = |s: &Stratum| (s.t_value.is_none(), std::cmp::Reverse(s.t_value), s.dim, s.kind, s.m);
    key(a).cmp(&key(b))
}

pub fn tower(n: u32) -> Result<Vec<Stratum>> {
    if n < 15 {
        return Err(Error::OutOfRange(n.into()));
    }
    let mut out = vec![];
    for m in 11..=n {
        for kind in [StratumKind::FPath, StratumKind::FThenL, StratumKind::FThenM, StratumKind::FThenQ] {
            if let Ok(s) = Stratum::new(kind, m, n) {
                out.push(s);
            }
        }
    }
    out.sort_by(order);
    Ok(out)
}

/// Tower elements with `t > 0` and `t` strictly above every proper superset.
pub fn centers(n: u32) -> Result<Vec<Stratum>> {
    let tw = tower(n)?;
    Ok(tw
        .iter()
        .filter(|x| {
            x.t_value.is_some_and(|t| {
                tw.iter().filter(|y| x.properly_contained_in(y)).all(|y| y.t_value.is_none_or(|u| t > u))
            })
        })
        .copied()
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PredictedComponent {
    pub kind: StratumKind,
    #[serde(rename = "M")]
    pub m: u32,
    pub in_tower: bool,
}

/// Case number and flip center components for `λ + Δ/k` as stated by the prediction.
pub fn predicted_center(n: u32, k: u32) -> Result<(u8, Vec<PredictedComponent>)> {
    if n < 15 || k == 0 || k > n - 10 || k == n - 11 {
        return Err(Error::OutOfRange(k.into()));
    }
    let comp = |kind, m: u32| PredictedComponent { kind, m, in_tower: Stratum::new(kind, m, n).is_ok() };
    let nk = n - k;
    if k == 1 {
        return Ok((0, vec![]));
    }
    if k <= n - 14 && ((k + 2) % 8 != n % 8 || k == 2) && !(k == 4 && n % 8 == 4) {
        return Ok((1, vec![comp(StratumKind::FPath, nk)]));
    }
    if k == 4 && n % 8 == 4 {
        return Ok((2, vec![comp(StratumKind::FPath, n - 4), comp(StratumKind::FThenL, n - 1)]));
    }
    if k >= 3 && (k + 2) % 8 == n % 8 {
        return Ok((3, vec![comp(StratumKind::FPath, nk), comp(StratumKind::FThenL, nk + 1)]));
    }
    if k == n - 13 {
        return Ok((4, vec![comp(StratumKind::FThenQ, 13)]));
    }
    if k == n - 12 {
        return Ok((5, vec![comp(StratumKind::FThenM, 12)]));
    }
    Err(Error::Inconsistent(format!("no prediction case for N={n}, k={k}")))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Wall {
    pub k: u32,
    pub beta: Q,
    pub case: u8,
    pub centers: Vec<Stratum>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WallReport {
    pub n: u32,
    /// Decreasing in `β`.
    pub walls: Vec<Wall>,
    pub terminal_contraction: String,
    pub note: Option<String>,
}

/// Walls `β = 1/t` over the `t`-values of `Center(N)`, checked against the predicted list.
pub fn walls(n: u32) -> Result<WallReport> {
    if (11..15).contains(&n) {
        let bound = if n == 12 { "1/4".to_string() } else { format!("1/{}", n - 10) };
        return Ok(WallReport {
            n,
            walls: vec![],
            terminal_contraction: String::new(),
            note: Some(format!(
                "no wall list for N={n}: H_h({n}) moves in a positive-dimensional linear system; λ+βΔ is positive on complete curves for β < {bound}"
            )),
        });
    }
    let cs = centers(n)?;
    let ts: BTreeSet<u32> = cs.iter().filter_map(|s| s.t_value).collect();
    let expected: BTreeSet<u32> = (1..=n - 10).filter(|&k| k != n - 11).collect();
    if ts != expected {
        return Err(Error::SelfCheck(format!("center t-values {ts:?} differ from {expected:?}")));
    }
    let mut out = vec![];
    for &k in &ts {
        let centers: Vec<Stratum> = cs.iter().filter(|s| s.t_value == Some(k)).copied().collect();
        let (case, predicted) = predicted_center(n, k)?;
        if case != 0 {
            let got: BTreeSet<(StratumKind, u32)> = centers.iter().map(|s| (s.kind, s.m)).collect();
            let want: BTreeSet<(StratumKind, u32)> = predicted.iter().filter(|c| c.in_tower).map(|c| (c.kind, c.m)).collect();
            if got != want {
                return Err(Error::SelfCheck(format!("N={n}, k={k}: centers {got:?} vs predicted {want:?}")));
            }
        }
        out.push(Wall { k, beta: q(1, k as i64), case, centers });
    }
    Ok(WallReport { n, walls: out, terminal_contraction: format!("contraction of Δ^(1)({n})"), note: None })
}

impl Wall {
    pub fn description(&self) -> String {
        let names: Vec<String> = self.centers.iter().map(|s| s.to_string()).collect();
        if self.k == 1 {
            format!("contract strict transforms of {}", names.join(", "))
        } else {
            format!("flip {}", names.join(" ∪ "))
        }
    }
}

impl WallReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "N": self.n,
            "walls": self.walls.iter().map(|w| serde_json::json!({
                "beta": fmt_q(&w.beta),
                "k": w.k,
                "case": w.case,
                "centers": w.centers.iter().map(Stratum::to_json).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "terminal_contraction": self.terminal_contraction,
            "note": self.note,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditEntry {
    pub stratum: Stratum,
    /// Restriction of `λ + βΔ(N)`, after the Gritsenko rewrite when `M ≤ 13`.
    pub class: DivisorClass,
    pub gritsenko: bool,
    pub lambda_coeff: Q,
    pub positive: bool,
    pub effective: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    pub n: u32,
    pub beta: Q,
    pub entries: Vec<AuditEntry>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.positive && e.effective)
    }
}

/// `H_h(M) = x λ + y H_u(M)`.
fn gritsenko_hh(m: u32) -> Result<(Q, Q)> {
    gritsenko_relation(m)?.solved_for_hh()
}

fn restrict(s: &Stratum, beta: &Q) -> Result<(DivisorClass, bool)> {
    let c = restrict_polarization(s.n, &s.path(), beta)?;
    if s.kind != StratumKind::FPath || s.m > 13 {
        return Ok((c, false));
    }
    let (x, y) = gritsenko_hh(s.m)?;
    let h = c.get(HH);
    let sp = c.space;
    let rewrite = DivisorClass::from_terms(sp, &[(LAMBDA, &h * &x), (HH, -&h), (HU, &h * &y)])?;
    Ok((c.add(&rewrite)?, true))
}

pub fn positivity_audit(n: u32, beta: &Q) -> Result<AuditReport> {
    if beta.is_negative() || *beta > Q::one() {
        return Err(Error::OutOfRange(0));
    }
    let mut entries = vec![];
    for s in tower(n)? {
        let (class, gritsenko) = restrict(&s, beta)?;
        let lambda_coeff = class.get(LAMBDA);
        let t = s.t_value.unwrap_or(0);
        if lambda_coeff != qi(1) - qi(t as i64) * beta {
            return Err(Error::SelfCheck(format!("{s}: λ-coefficient {lambda_coeff} vs t={t}")));
        }
        let space = class.space;
        let effective = space.basis().iter().filter(|&&b| b != LAMBDA).all(|b| !class.get(b).is_negative());
        entries.push(AuditEntry { stratum: s, positive: lambda_coeff.is_positive(), effective, class, gritsenko, lambda_coeff });
    }
    Ok(AuditReport { n, beta: beta.clone(), entries })
}

/// Exact check over the open interval `0 < β < 1/(N-10)`: coefficients are affine
/// in `β`, so the endpoints decide.
pub fn audit_open_interval(n: u32) -> Result<bool> {
    let lo = positivity_audit(n, &Q::zero())?;
    let hi = positivity_audit(n, &q(1, n as i64 - 10))?;
    Ok(lo.entries.iter().zip(&hi.entries).all(|(a, b)| {
        let lam_ok = !a.lambda_coeff.is_negative() && !b.lambda_coeff.is_negative() && !(a.lambda_coeff.is_zero() && b.lambda_coeff.is_zero());
        lam_ok && a.effective && b.effective
    }))
}

/// `{t : Center(N)} = {t + 1 : Center(N-1)} ∪ {1}` as sets.
pub fn shift_by_one(n: u32) -> Result<bool> {
    if n < 16 {
        return Err(Error::OutOfRange(n.into()));
    }
    let t = |m| -> Result<BTreeSet<u32>> { Ok(centers(m)?.iter().filter_map(|s| s.t_value).collect()) };
    let mut prev: BTreeSet<u32> = t(n - 1)?.into_iter().map(|x| x + 1).collect();
    prev.insert(1);
    Ok(prev == t(n)?)
}
