//! Divisor classes on the spaces of the tower and the linear maps between them.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{fmt_q, q, qi, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Space {
    /// `F(N)`, the decorated D-tower space of dimension `N`.
    F(u32),
    /// `F(II_{2,2+8k})`.
    FII(u32),
    /// `F(II_{2,2+8k} ⊕ A_1)`.
    FIIA1(u32),
    /// `F(II_{2,2+8k} ⊕ A_2)`.
    FIIA2(u32),
    /// Quotient by the stable group, `N` even.
    FStable(u32),
}

pub const LAMBDA: &str = "lambda";
pub const HN: &str = "Hn";
pub const HH: &str = "Hh";
pub const HU: &str = "Hu";
pub const H0: &str = "H0";
pub const HXI: &str = "Hxi";
pub const HZETA: &str = "Hzeta";
pub const HZETA_P: &str = "Hzeta'";

impl Space {
    pub fn validate(self) -> Result<Self> {
        match self {
            Space::F(n) if n < 3 => Err(Error::OutOfRange(n as i64)),
            Space::FStable(n) if n < 3 || n % 2 == 1 => Err(Error::OutOfRange(n as i64)),
            _ => Ok(self),
        }
    }

    pub fn basis(self) -> &'static [&'static str] {
        match self {
            Space::F(n) if n % 8 == 2 => &[LAMBDA, HN, HH],
            Space::F(_) => &[LAMBDA, HN, HH, HU],
            Space::FII(_) => &[LAMBDA, HN],
            Space::FIIA1(_) | Space::FIIA2(_) => &[LAMBDA, HN, HU],
            Space::FStable(_) => &[LAMBDA, H0, HXI, HZETA, HZETA_P],
        }
    }

    pub fn index(self, sym: &str) -> Option<usize> {
        self.basis().iter().position(|s| *s == sym)
    }

    pub fn has_unigonal(self) -> bool {
        self.index(HU).is_some()
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Space::F(n) => write!(f, "F({n})"),
            Space::FII(k) => write!(f, "FII({k})"),
            Space::FIIA1(k) => write!(f, "FIIA1({k})"),
            Space::FIIA2(k) => write!(f, "FIIA2({k})"),
            Space::FStable(n) => write!(f, "FStable({n})"),
        }
    }
}

/// Parses labels such as `F(19)`, `FII(2)`, `FIIA1(1)`, `FStable(18)`.
impl FromStr for Space {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Parse { pos: 0, msg: msg.to_string() };
        let s = s.trim();
        let open = s.find('(').ok_or_else(|| bad("expected '('"))?;
        let inner = s[open + 1..].strip_suffix(')').ok_or_else(|| bad("expected ')'"))?;
        if inner.is_empty() || inner.len() > 9 || !inner.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse { pos: open + 1, msg: "expected index".into() });
        }
        let n: u32 = inner.parse().map_err(|_| bad("index"))?;
        let sp = match &s[..open] {
            "F" => Space::F(n),
            "FII" => Space::FII(n),
            "FIIA1" => Space::FIIA1(n),
            "FIIA2" => Space::FIIA2(n),
            "FStable" => Space::FStable(n),
            _ => return Err(bad("unknown space")),
        };
        sp.validate()
    }
}

fn pretty(sym: &str) -> &str {
    match sym {
        LAMBDA => "λ",
        HXI => "Hξ",
        HZETA => "Hζ",
        HZETA_P => "Hζ′",
        s => s,
    }
}

/// Normalises user-facing spellings of basis symbols.
pub fn canonical_symbol(s: &str) -> Option<&'static str> {
    Some(match s {
        "lambda" | "λ" | "L" => LAMBDA,
        "Hn" | "H_n" => HN,
        "Hh" | "H_h" => HH,
        "Hu" | "H_u" => HU,
        "H0" | "H_0" => H0,
        "Hxi" | "Hξ" => HXI,
        "Hzeta" | "Hζ" => HZETA,
        "Hzeta'" | "Hζ′" | "Hζ'" => HZETA_P,
        _ => return None,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorClass {
    pub space: Space,
    coeffs: Vec<Q>,
}

impl DivisorClass {
    pub fn zero(space: Space) -> Self {
        DivisorClass { space, coeffs: vec![Q::zero(); space.basis().len()] }
    }

    pub fn new(space: Space, coeffs: Vec<Q>) -> Result<Self> {
        if coeffs.len() != space.basis().len() {
            return Err(Error::DimensionMismatch { expected: space.basis().len(), got: coeffs.len() });
        }
        Ok(DivisorClass { space, coeffs })
    }

    /// Builds a class from `(symbol, coefficient)` pairs; repeated symbols add up.
    pub fn from_terms(space: Space, terms: &[(&str, Q)]) -> Result<Self> {
        let mut c = Self::zero(space);
        for (sym, v) in terms {
            let i = space
                .index(sym)
                .ok_or_else(|| Error::Parse { pos: 0, msg: format!("{sym} not in basis of {space}") })?;
            c.coeffs[i] += v;
        }
        Ok(c)
    }

    pub fn basis(space: Space, sym: &str) -> Result<Self> {
        Self::from_terms(space, &[(sym, Q::one())])
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    /// Coefficient of `sym`, zero when the basis lacks it.
    pub fn get(&self, sym: &str) -> Q {
        self.space.index(sym).map(|i| self.coeffs[i].clone()).unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, o: &DivisorClass) -> Result<Self> {
        self.same_space(o)?;
        Ok(DivisorClass { space: self.space, coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect() })
    }

    pub fn sub(&self, o: &DivisorClass) -> Result<Self> {
        self.add(&o.scale(&qi(-1)))
    }

    pub fn scale(&self, c: &Q) -> Self {
        DivisorClass { space: self.space, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    fn same_space(&self, o: &DivisorClass) -> Result<()> {
        if self.space != o.space {
            return Err(Error::SpaceMismatch { expected: self.space.to_string(), got: o.space.to_string() });
        }
        Ok(())
    }

    /// `Some(c)` with `self = c * other`, if proportional and `other` nonzero.
    pub fn ratio_to(&self, other: &DivisorClass) -> Option<Q> {
        if self.space != other.space || other.is_zero() {
            return None;
        }
        let i = other.coeffs.iter().position(|c| !c.is_zero())?;
        let r = &self.coeffs[i] / &other.coeffs[i];
        (other.scale(&r) == *self).then_some(r)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let coeffs: serde_json::Map<String, serde_json::Value> = self
            .space
            .basis()
            .iter()
            .zip(&self.coeffs)
            .map(|(s, c)| (s.to_string(), serde_json::Value::String(fmt_q(c))))
            .collect();
        serde_json::json!({ "space": self.space.to_string(), "coeffs": coeffs })
    }
}

/// Renders `c₁ X₁ + c₂ X₂ ...`, skipping zero terms.
pub fn render_terms(terms: &[(&str, Q)]) -> String {
    let mut out = String::new();
    for (sym, c) in terms.iter().filter(|(_, c)| !c.is_zero()) {
        if out.is_empty() {
            out.push_str(&format!("{} {}", fmt_q(c), pretty(sym)));
        } else if c.is_negative() {
            out.push_str(&format!(" - {} {}", fmt_q(&-c), pretty(sym)));
        } else {
            out.push_str(&format!(" + {} {}", fmt_q(c), pretty(sym)));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(&str, Q)> = self.space.basis().iter().copied().zip(self.coeffs.iter().cloned()).collect();
        write!(f, "{}", render_terms(&terms))
    }
}

/// Maps of the tower, indexed by the dimension of the target's period space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MapLabel {
    /// `F(N-1) → F(N)`.
    F(u32),
    /// `FII(k) → F(8k+3)`.
    L(u32),
    /// `FIIA1(k) → F(8k+4)`.
    M(u32),
    /// `FII(k) → FIIA1(k)`, `N = 8k+3`.
    P(u32),
    /// `FIIA2(k) → F(8k+5)`.
    Q(u32),
    /// `FIIA1(k) → FIIA2(k)`, `N = 8k+4`.
    R(u32),
    /// Double cover `FStable(N) → F(N)`, `N` even.
    Rho(u32),
}

impl MapLabel {
    pub fn n(self) -> u32 {
        match self {
            MapLabel::F(n) | MapLabel::L(n) | MapLabel::M(n) | MapLabel::P(n) | MapLabel::Q(n) | MapLabel::R(n) | MapLabel::Rho(n) => n,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MapLabel::F(_) => "f",
            MapLabel::L(_) => "l",
            MapLabel::M(_) => "m",
            MapLabel::P(_) => "p",
            MapLabel::Q(_) => "q",
            MapLabel::R(_) => "r",
            MapLabel::Rho(_) => "rho",
        }
    }

    pub fn from_parts(name: &str, n: u32) -> Result<Self> {
        let m = match name {
            "f" => MapLabel::F(n),
            "l" => MapLabel::L(n),
            "m" => MapLabel::M(n),
            "p" => MapLabel::P(n),
            "q" => MapLabel::Q(n),
            "r" => MapLabel::R(n),
            "rho" | "ρ" => MapLabel::Rho(n),
            _ => return Err(Error::Parse { pos: 0, msg: format!("unknown map {name}") }),
        };
        m.domain()?;
        Ok(m)
    }

    fn invalid(self) -> Error {
        Error::InvalidMap { map: self.name().to_string(), n: self.n().into() }
    }

    pub fn domain(self) -> Result<Space> {
        let n = self.n();
        let k = n / 8;
        let ok = match self {
            MapLabel::F(_) => n >= 4,
            MapLabel::L(_) | MapLabel::P(_) => n % 8 == 3,
            MapLabel::M(_) | MapLabel::R(_) => n % 8 == 4,
            MapLabel::Q(_) => n % 8 == 5,
            MapLabel::Rho(_) => n >= 4 && n % 2 == 0,
        };
        if !ok {
            return Err(self.invalid());
        }
        Ok(match self {
            MapLabel::F(_) => Space::F(n - 1),
            MapLabel::L(_) | MapLabel::P(_) => Space::FII(k),
            MapLabel::M(_) | MapLabel::R(_) => Space::FIIA1(k),
            MapLabel::Q(_) => Space::FIIA2(k),
            MapLabel::Rho(_) => Space::FStable(n),
        })
    }

    pub fn codomain(self) -> Result<Space> {
        self.domain()?;
        let n = self.n();
        Ok(match self {
            MapLabel::F(_) | MapLabel::L(_) | MapLabel::M(_) | MapLabel::Q(_) | MapLabel::Rho(_) => Space::F(n),
            MapLabel::P(_) => Space::FIIA1(n / 8),
            MapLabel::R(_) => Space::FIIA2(n / 8),
        })
    }

    /// Pullback of one basis element of the codomain.
    fn pull_basis(self, sym: &str) -> Result<DivisorClass> {
        let dom = self.domain()?;
        let n = self.n();
        let t = |terms: &[(&str, Q)]| DivisorClass::from_terms(dom, terms);
        if sym == LAMBDA {
            return t(&[(LAMBDA, qi(1))]);
        }
        let one = qi(1);
        let two = qi(2);
        match self {
            MapLabel::F(_) => {
                let r = n % 8;
                match sym {
                    HN => {
                        let mut v = vec![(HN, one.clone()), (HH, two)];
                        if r == 5 {
                            v.push((HU, one));
                        }
                        t(&v)
                    }
                    HH => {
                        let mut v = vec![(LAMBDA, qi(-2)), (HH, one.clone())];
                        if r == 4 {
                            v.push((HU, one));
                        }
                        t(&v)
                    }
                    HU => match r {
                        3 => Ok(DivisorClass::zero(dom)),
                        5 => t(&[(HU, one)]),
                        _ => t(&[(HU, two)]),
                    },
                    _ => Err(self.invalid()),
                }
            }
            MapLabel::L(_) => match sym {
                HN => t(&[(HN, one)]),
                HH => Ok(DivisorClass::zero(dom)),
                HU => t(&[(LAMBDA, qi(-2))]),
                _ => Err(self.invalid()),
            },
            MapLabel::M(_) => match sym {
                HN => t(&[(HN, one)]),
                HH => t(&[(HU, two)]),
                HU => t(&[(LAMBDA, qi(-2)), (HU, one)]),
                _ => Err(self.invalid()),
            },
            MapLabel::Q(_) => match sym {
                HN => t(&[(HN, one), (HU, two)]),
                HH => t(&[(HU, two)]),
                HU => t(&[(LAMBDA, qi(-1)), (HU, q(3, 2))]),
                _ => Err(self.invalid()),
            },
            MapLabel::P(_) => match sym {
                HN => t(&[(HN, one)]),
                HU => t(&[(LAMBDA, qi(-2))]),
                _ => Err(self.invalid()),
            },
            MapLabel::R(_) => match sym {
                HU => t(&[(LAMBDA, qi(-1)), (HU, one)]),
                HN => Err(Error::Undetermined { map: "r".into(), basis: HN.into() }),
                _ => Err(self.invalid()),
            },
            MapLabel::Rho(_) => match sym {
                HN => t(&[(H0, one)]),
                HH => t(&[(HXI, two)]),
                HU => t(&[(HZETA, one.clone()), (HZETA_P, one)]),
                _ => Err(self.invalid()),
            },
        }
    }
}

impl fmt::Display for MapLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.name(), self.n())
    }
}

/// Parses `f(19)`, `l(11)`, `rho(18)`.
impl FromStr for MapLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let open = s.find('(').ok_or(Error::Parse { pos: 0, msg: "expected '('".into() })?;
        let inner = s[open + 1..].strip_suffix(')').ok_or(Error::Parse { pos: s.len(), msg: "expected ')'".into() })?;
        if inner.is_empty() || inner.len() > 9 || !inner.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse { pos: open + 1, msg: "expected index".into() });
        }
        let n: u32 = inner.parse().map_err(|_| Error::Parse { pos: open + 1, msg: "index".into() })?;
        MapLabel::from_parts(&s[..open], n)
    }
}

/// Linear pullback along `map`.
pub fn pullback(map: MapLabel, c: &DivisorClass) -> Result<DivisorClass> {
    let cod = map.codomain()?;
    if c.space != cod {
        return Err(Error::SpaceMismatch { expected: cod.to_string(), got: c.space.to_string() });
    }
    let mut acc = DivisorClass::zero(map.domain()?);
    for (sym, v) in cod.basis().iter().zip(c.coeffs()) {
        if v.is_zero() {
            continue;
        }
        acc = acc.add(&map.pull_basis(sym)?.scale(v))?;
    }
    Ok(acc)
}

/// Pullback along a path listed from the target `F(N)` backwards.
pub fn pullback_path(path: &[MapLabel], c: &DivisorClass) -> Result<DivisorClass> {
    path.iter().try_fold(c.clone(), |acc, m| pullback(*m, &acc))
}

/// Push-forward along the stable double cover.
pub fn pushforward_rho(n: u32, c: &DivisorClass) -> Result<DivisorClass> {
    if n % 2 == 1 {
        return Err(Error::InvalidMap { map: "rho".into(), n: n.into() });
    }
    if c.space != Space::FStable(n) {
        return Err(Error::SpaceMismatch { expected: Space::FStable(n).to_string(), got: c.space.to_string() });
    }
    let g = |s| c.get(s);
    let mut terms = vec![(LAMBDA, g(LAMBDA) * qi(2)), (HN, g(H0) * qi(2)), (HH, g(HXI))];
    let hu = g(HZETA) + g(HZETA_P);
    if Space::F(n).has_unigonal() {
        terms.push((HU, hu));
    } else if !hu.is_zero() {
        return Err(Error::Inconsistent("unigonal image on a space without H_u".into()));
    }
    DivisorClass::from_terms(Space::F(n), &terms)
}

pub fn tau(n: u32) -> u32 {
    if matches!(n % 8, 3 | 4) {
        1
    } else {
        2
    }
}

/// `Δ(N) = ½H_h`, plus `½H_u` when `τ(N) = 1`.
pub fn boundary_divisor(n: u32) -> Result<DivisorClass> {
    let sp = Space::F(n).validate()?;
    let mut terms = vec![(HH, q(1, 2))];
    if tau(n) == 1 {
        terms.push((HU, q(1, 2)));
    }
    DivisorClass::from_terms(sp, &terms)
}

/// `λ + βΔ(N)`.
pub fn polarization(n: u32, beta: &Q) -> Result<DivisorClass> {
    DivisorClass::basis(Space::F(n).validate()?, LAMBDA)?.add(&boundary_divisor(n)?.scale(beta))
}

pub fn canonical_class(space: Space) -> Result<DivisorClass> {
    let h = q(-1, 2);
    match space.validate()? {
        Space::F(n) => {
            // K = Nλ - ½(H_n + 2Δ).
            let b = DivisorClass::basis(Space::F(n), HN)?.add(&boundary_divisor(n)?.scale(&qi(2)))?;
            DivisorClass::basis(Space::F(n), LAMBDA)?.scale(&qi(n as i64)).add(&b.scale(&h))
        }
        Space::FII(k) => DivisorClass::from_terms(space, &[(LAMBDA, qi(8 * k as i64 + 2)), (HN, h)]),
        Space::FIIA1(k) => DivisorClass::from_terms(space, &[(LAMBDA, qi(8 * k as i64 + 3)), (HN, h.clone()), (HU, h)]),
        Space::FIIA2(k) => DivisorClass::from_terms(space, &[(LAMBDA, qi(8 * k as i64 + 4)), (HN, h.clone()), (HU, h)]),
        Space::FStable(_) => Err(Error::Undetermined { map: "canonical".into(), basis: space.to_string() }),
    }
}

/// Closed form of `path^*(λ + βΔ(N))`, for paths `f^k`, `f^k l`, `f^k m`, `f^k m p`,
/// `f^k q`, `f^k q r`, `f^k q r p`.
pub fn restriction_closed_form(n: u32, path: &[MapLabel], beta: &Q) -> Result<DivisorClass> {
    let k = path.iter().take_while(|m| matches!(m, MapLabel::F(_))).count() as u32;
    for (i, m) in path[..k as usize].iter().enumerate() {
        if m.n() != n - i as u32 {
            return Err(Error::NotInTower);
        }
    }
    let tail: Vec<&str> = path[k as usize..].iter().map(|m| m.name()).collect();
    let nk = n.checked_sub(k).filter(|&x| x >= 3).ok_or(Error::NotInTower)?;
    for (i, m) in path[k as usize..].iter().enumerate() {
        let want = match i {
            0 => nk,
            1 => nk - 1,
            _ => nk - 2,
        };
        if m.n() != want {
            return Err(Error::NotInTower);
        }
    }
    let kk = qi(k as i64);
    let b = beta.clone();
    let lam = |c: Q| (LAMBDA, qi(1) - c * &b);
    match tail.as_slice() {
        [] => {
            if k == 0 {
                return polarization(n, beta);
            }
            let sp = Space::F(nk);
            let base = DivisorClass::from_terms(sp, &[lam(kk.clone())])?;
            if nk % 8 == 4 {
                base.add(&DivisorClass::from_terms(sp, &[(HH, &b / qi(2))])?)
            } else if k == 1 && nk % 8 == 3 {
                base.add(&boundary_divisor(nk)?.scale(&b))?.add(&DivisorClass::from_terms(sp, &[(HU, b.clone())])?)
            } else {
                base.add(&boundary_divisor(nk)?.scale(&b))
            }
        }
        ["l"] => {
            let c = if k == 1 { qi(4) } else { qi(k as i64 + 1) };
            DivisorClass::from_terms(Space::FII(nk / 8), &[lam(c)])
        }
        ["m"] => {
            let sp = Space::FIIA1(nk / 8);
            if k == 0 {
                DivisorClass::from_terms(sp, &[lam(qi(1)), (HU, q(3, 2) * &b)])
            } else {
                DivisorClass::from_terms(sp, &[lam(kk), (HU, b.clone())])
            }
        }
        ["m", "p"] => {
            let c = if k == 0 { qi(4) } else { qi(k as i64 + 2) };
            DivisorClass::from_terms(Space::FII(nk / 8), &[lam(c)])
        }
        ["q"] => DivisorClass::from_terms(Space::FIIA2(nk / 8), &[lam(kk), (HU, b.clone())]),
        ["q", "r"] => DivisorClass::from_terms(Space::FIIA1(nk / 8), &[lam(qi(k as i64 + 1)), (HU, b.clone())]),
        ["q", "r", "p"] => DivisorClass::from_terms(Space::FII(nk / 8), &[lam(qi(k as i64 + 3))]),
        _ => Err(Error::NotInTower),
    }
}

/// Pullback of `λ + βΔ(N)` along `path`, checked against the closed form.
pub fn restrict_polarization(n: u32, path: &[MapLabel], beta: &Q) -> Result<DivisorClass> {
    if path.first().is_some_and(|m| m.codomain().ok() != Some(Space::F(n))) {
        return Err(Error::NotInTower);
    }
    let a = pullback_path(path, &polarization(n, beta)?)?;
    let b = restriction_closed_form(n, path, beta)?;
    if a != b {
        return Err(Error::Inconsistent(format!("restriction along {path:?}: {a} vs {b}")));
    }
    Ok(a)
}

/// All composable paths of length at most `max_len` ending in `F(N)`, with
/// the maps `p` and `r` only after `m` or `q`.
pub fn paths(n: u32, max_len: usize) -> Vec<Vec<MapLabel>> {
    let mut out = vec![vec![]];
    let mut frontier: Vec<Vec<MapLabel>> = vec![vec![]];
    for _ in 0..max_len {
        let mut next = vec![];
        for p in &frontier {
            let target = match p.last() {
                None => Space::F(n),
                Some(m) => m.domain().expect("valid"),
            };
            for cand in candidates(target, p.last().copied()) {
                let mut q = p.clone();
                q.push(cand);
                next.push(q);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

fn candidates(target: Space, last: Option<MapLabel>) -> Vec<MapLabel> {
    let mut v = vec![];
    match target {
        Space::F(m) => {
            if m >= 4 {
                v.push(MapLabel::F(m));
            }
            for c in [MapLabel::L(m), MapLabel::M(m), MapLabel::Q(m)] {
                if c.domain().is_ok() {
                    v.push(c);
                }
            }
        }
        Space::FIIA1(k) if matches!(last, Some(MapLabel::M(_)) | Some(MapLabel::R(_))) => v.push(MapLabel::P(8 * k + 3)),
        Space::FIIA2(k) if matches!(last, Some(MapLabel::Q(_))) => v.push(MapLabel::R(8 * k + 4)),
        _ => {}
    }
    v
}

/// A test curve of the intersection table, as pairings with `(λ, H_n, H_h, H_u)` on `F(19)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Curve {
    pub name: &'static str,
    pub row: [i64; 4],
}

pub const CURVES_19: [Curve; 4] = [
    Curve { name: "Gamma1", row: [1, 108, 0, 0] },
    Curve { name: "Gamma2", row: [1, 136, -2, 0] },
    Curve { name: "Gamma3", row: [1, 264, 0, -2] },
    Curve { name: "Gamma4", row: [1, 80, 2, 0] },
];

pub fn curve_pairing(curve: &Curve, c: &DivisorClass) -> Result<Q> {
    if c.space != Space::F(19) {
        return Err(Error::SpaceMismatch { expected: "F(19)".into(), got: c.space.to_string() });
    }
    Ok([LAMBDA, HN, HH, HU].iter().zip(curve.row).map(|(s, r)| c.get(s) * qi(r)).sum())
}

/// Pullbacks of the GIT polarisations: `λ + Δ(19)` and `2(λ + Δ(18))`.
pub fn git_polarization(n: u32) -> Result<DivisorClass> {
    match n {
        19 => polarization(19, &qi(1)),
        18 => Ok(polarization(18, &qi(1))?.scale(&qi(2))),
        _ => Err(Error::OutOfRange(n as i64)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_hyper_19() {
        let c = pullback(MapLabel::F(19), &DivisorClass::basis(Space::F(19), HH).unwrap()).unwrap();
        assert_eq!(c.space, Space::F(18));
        assert_eq!(c.to_string(), "-2 λ + 1 Hh");
        let u = pullback(MapLabel::F(19), &DivisorClass::basis(Space::F(19), HU).unwrap()).unwrap();
        assert!(u.is_zero());
    }

    #[test]
    fn q13_hyper() {
        let c = pullback(MapLabel::Q(13), &DivisorClass::basis(Space::F(13), HH).unwrap()).unwrap();
        assert_eq!(c.space, Space::FIIA2(1));
        assert_eq!(c.to_string(), "2 Hu");
    }

    #[test]
    fn space_mismatch() {
        let c = DivisorClass::basis(Space::F(18), HH).unwrap();
        assert!(matches!(pullback(MapLabel::F(19), &c), Err(Error::SpaceMismatch { .. })));
        assert!(MapLabel::from_parts("l", 12).is_err());
        assert!(matches!(
            pullback(MapLabel::R(12), &DivisorClass::basis(Space::FIIA2(1), HN).unwrap()),
            Err(Error::Undetermined { .. })
        ));
    }

    #[test]
    fn canonical() {
        assert_eq!(canonical_class(Space::F(19)).unwrap().to_string(), "19 λ - 1/2 Hn - 1/2 Hh - 1/2 Hu");
        assert_eq!(canonical_class(Space::F(18)).unwrap().to_string(), "18 λ - 1/2 Hn - 1/2 Hh");
        assert_eq!(canonical_class(Space::FII(2)).unwrap().to_string(), "18 λ - 1/2 Hn");
    }

    #[test]
    fn rho_push_pull() {
        for n in [18u32, 20] {
            let c = DivisorClass::new(Space::F(n), Space::F(n).basis().iter().enumerate().map(|(i, _)| qi(i as i64 + 1)).collect()).unwrap();
            let up = pullback(MapLabel::Rho(n), &c).unwrap();
            assert_eq!(pushforward_rho(n, &up).unwrap(), c.scale(&qi(2)));
        }
        assert!(pushforward_rho(19, &DivisorClass::zero(Space::F(19))).is_err());
    }

    #[test]
    fn labels_roundtrip() {
        for s in ["F(19)", "FII(2)", "FIIA1(1)", "FIIA2(0)", "FStable(18)"] {
            assert_eq!(s.parse::<Space>().unwrap().to_string(), s);
        }
        assert!("FStable(19)".parse::<Space>().is_err());
        assert!("G(3)".parse::<Space>().is_err());
        assert_eq!("f(19)".parse::<MapLabel>().unwrap(), MapLabel::F(19));
        assert!("q(12)".parse::<MapLabel>().is_err());
    }

    #[test]
    fn restriction_examples() {
        let b = q(1, 3);
        let r = restrict_polarization(19, &[MapLabel::F(19)], &b).unwrap();
        assert_eq!(r, DivisorClass::basis(Space::F(18), LAMBDA).unwrap().scale(&(qi(1) - &b)).add(&boundary_divisor(18).unwrap().scale(&b)).unwrap());
        let r = restrict_polarization(19, &[MapLabel::L(19)], &b).unwrap();
        assert_eq!(r.to_string(), "2/3 λ");
        let r = restrict_polarization(12, &[MapLabel::M(12)], &b).unwrap();
        assert_eq!(r.to_string(), "2/3 λ + 1/2 Hu");
    }
}

#[cfg(test)]
mod sweep {
    use super::*;

    #[test]
    fn all_short_paths() {
        let betas = [q(0, 1), q(1, 9), q(1, 7), q(1, 6), q(1, 5), q(1, 4), q(1, 3), q(1, 2), q(1, 1)];
        let mut count = 0;
        for n in 11..=25 {
            for p in paths(n, 3) {
                for b in &betas {
                    restrict_polarization(n, &p, b).unwrap_or_else(|e| panic!("N={n} {p:?}: {e}"));
                    count += 1;
                }
            }
        }
        assert!(count > 500);
    }
}
