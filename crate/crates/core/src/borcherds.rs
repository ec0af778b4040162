//! Saturated embeddings `Λ_N ⊂ II_{2,26}` and the relations coming from
//! quasi-pullbacks of `Φ_12`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::discriminant::{Elem, FiniteQuadraticForm};
use crate::divisor::{self, render_terms, DivisorClass, Space, H0, HH, HN, HU, HXI, HZETA, HZETA_P, LAMBDA};
use crate::dtower::{Decoration, Label};
use crate::enumerate::{count_roots, short_vectors};
use crate::error::{Error, Result};
use crate::lattice::{self, Lattice, LatticeVector};
use crate::rational::{fmt_q, parse_q, q, qi, Q};
use crate::sublattice::{glue, Overlattice, Sublattice};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Variant {
    /// Complement `D_{26-N}`.
    D,
    /// Complement `E_8 ⊕ D_{18-N}`.
    E8D,
}

impl Variant {
    pub fn range(self) -> std::ops::RangeInclusive<u32> {
        match self {
            Variant::D => 3..=25,
            Variant::E8D => 3..=17,
        }
    }

    /// Rank of the `D` summand of the complement.
    pub fn b(self, n: u32) -> u32 {
        match self {
            Variant::D => 26 - n,
            Variant::E8D => 18 - n,
        }
    }
}

/// `N - 2 = 8k + a` with `a ∈ 1..=8`.
pub fn split(n: u32) -> (u32, u32) {
    let k = (n - 3) / 8;
    (k, n - 2 - 8 * k)
}

#[derive(Debug, Clone)]
pub struct Embedding {
    pub n: u32,
    pub variant: Variant,
    /// `II_{2,2+8k} ⊕ D_a ⊕ complement`, before gluing.
    pub base: Lattice,
    /// Even unimodular overlattice of signature `(2,26)`.
    pub ambient: Overlattice,
    /// Image of `Λ_N ≅ II_{2,2+8k} ⊕ D_a`, in ambient coordinates.
    pub image_basis: Vec<LatticeVector>,
    pub complement_basis: Vec<LatticeVector>,
    /// Rank of `II_{2,2+8k}`.
    pub ii_rank: usize,
    pub a: u32,
}

fn half_vector(len: u32, first_negative: bool) -> Vec<Q> {
    let mut v = vec![q(1, 2); len as usize];
    if first_negative {
        v[0] = q(-1, 2);
    }
    v
}

fn unit_vector(len: u32, x: Q) -> Vec<Q> {
    let mut v = vec![qi(0); len as usize];
    v[0] = x;
    v
}

impl Embedding {
    pub fn new(n: u32, variant: Variant) -> Result<Self> {
        if !variant.range().contains(&n) {
            return Err(Error::OutOfRange(n as i64));
        }
        let (k, a) = split(n);
        let b = variant.b(n);
        let ii = lattice::ii(2, 2 + 8 * k as usize)?;
        let da = lattice::d_n(a as usize)?;
        let db = lattice::d_n(b as usize)?;
        let mut base = ii.direct_sum(&da).direct_sum(&db);
        if variant == Variant::E8D {
            base = base.direct_sum(&lattice::e_r(8)?);
        }
        let ii_rank = ii.rank();
        let total = base.rank();
        let glue_vec = |xa: Vec<Q>, xb: Vec<Q>| -> Result<Vec<Q>> {
            let mut v = vec![qi(0); ii_rank];
            v.extend(lattice::d_n_from_euclidean(a as usize, &xa)?);
            v.extend(lattice::d_n_from_euclidean(b as usize, &xb)?);
            v.resize(total, qi(0));
            Ok(v)
        };
        let u1 = glue_vec(half_vector(a, false), half_vector(b, false))?;
        let u2 = glue_vec(half_vector(a, true), half_vector(b, true))?;
        let u3 = glue_vec(unit_vector(a, qi(1)), unit_vector(b, qi(1)))?;
        let ambient = glue(&base, &[u1, u2, u3])?;
        let m = &ambient.lattice;
        if !m.is_unimodular() || m.signature() != (2, 26) {
            return Err(Error::Inconsistent(format!("ambient for N={n} is not II_{{2,26}}")));
        }
        let lam_rank = ii_rank + a as usize;
        let unit = |i: usize| -> Vec<Q> { (0..total).map(|j| if i == j { qi(1) } else { qi(0) }).collect() };
        let image_basis = (0..lam_rank).map(|i| ambient.integral_coords(&unit(i))).collect::<Result<Vec<_>>>()?;
        let complement_basis = (lam_rank..total).map(|i| ambient.integral_coords(&unit(i))).collect::<Result<Vec<_>>>()?;
        let e = Embedding { n, variant, base, ambient, image_basis, complement_basis, ii_rank, a };
        e.validate()?;
        Ok(e)
    }

    fn validate(&self) -> Result<()> {
        let m = &self.ambient.lattice;
        let img = Sublattice::new(m, self.image_basis.clone())?;
        if !img.is_primitive() {
            return Err(Error::Inconsistent("image not saturated".into()));
        }
        let perp = img.orthogonal_complement();
        if perp.rank() != self.complement_basis.len() || !self.complement_basis.iter().all(|v| perp.contains(v)) {
            return Err(Error::Inconsistent("complement mismatch".into()));
        }
        let c = Sublattice::new(m, self.complement_basis.clone())?;
        let det = c.as_lattice()?.det();
        let sp = Sublattice::spanned(m, &perp.basis().clone())?;
        if sp.as_lattice()?.det() != det {
            return Err(Error::Inconsistent("complement not primitive".into()));
        }
        Ok(())
    }

    pub fn complement(&self) -> Result<Lattice> {
        Sublattice::new(&self.ambient.lattice, self.complement_basis.clone())?.as_lattice()
    }

    /// Ambient coordinates of `x` given in base coordinates on `II ⊕ D_a` and
    /// Euclidean coordinates on `D_a`.
    fn vector_in_lambda(&self, ii_part: &[i64], da: &[Q]) -> Result<LatticeVector> {
        let total = self.base.rank();
        let mut v: Vec<Q> = (0..self.ii_rank).map(|i| qi(*ii_part.get(i).unwrap_or(&0))).collect();
        v.extend(lattice::d_n_from_euclidean(self.a as usize, da)?);
        v.resize(total, qi(0));
        self.ambient.integral_coords(&v)
    }

    /// Minimal norm representatives `v_0, v_ξ, v_ζ, v_ζ'`.
    pub fn minimal_vectors(&self) -> Result<[(Label, LatticeVector); 4]> {
        let a = self.a;
        let zero = vec![qi(0); a as usize];
        let v0 = self.vector_in_lambda(&[1, -1], &zero)?;
        let vxi = if a == 1 {
            self.vector_in_lambda(&[2, 0], &unit_vector(1, qi(2)))?
        } else {
            self.vector_in_lambda(&[], &unit_vector(a, qi(2)))?
        };
        let s = if self.n % 2 == 0 { qi(1) } else { qi(2) };
        let mut z = vec![s.clone(); a as usize];
        let vz = self.vector_in_lambda(&[], &z)?;
        z[0] = -s;
        let vzp = self.vector_in_lambda(&[], &z)?;
        Ok([(Label::Zero, v0), (Label::Xi, vxi), (Label::Zeta, vz), (Label::ZetaPrime, vzp)])
    }

    /// `12 + |R(Λ^⊥)| / 2`.
    pub fn quasi_pullback_weight(&self) -> Result<u64> {
        Ok(12 + count_roots(&self.complement()?)? as u64 / 2)
    }

    pub fn closed_form_weight(&self) -> u64 {
        let n = self.n as u64;
        match self.variant {
            Variant::D => 12 + (26 - n) * (25 - n),
            Variant::E8D => 132 + (18 - n) * (17 - n),
        }
    }

    /// Root count of `Sat⟨v, Λ^⊥⟩`.
    pub fn saturated_roots(&self, v: &LatticeVector) -> Result<usize> {
        let m = &self.ambient.lattice;
        let mut gens = self.complement_basis.clone();
        gens.push(v.clone());
        let sat = Sublattice::spanned(m, &gens)?.saturation();
        count_roots(&sat.as_lattice()?)
    }

    /// `a_η = ½(|R(Sat⟨v_η, Λ^⊥⟩)| - |R(Λ^⊥)|)` and reflection data for each `η`.
    pub fn heegner_coefficients(&self) -> Result<HeegnerData> {
        let base_roots = count_roots(&self.complement()?)?;
        let weight = 12 + base_roots as u64 / 2;
        if weight != self.closed_form_weight() {
            return Err(Error::SelfCheck(format!("weight {weight} vs {}", self.closed_form_weight())));
        }
        let lam = self.lambda_lattice()?;
        let disc = FiniteQuadraticForm::of(&lam)?;
        let mut coeffs = BTreeMap::new();
        let mut factors = BTreeMap::new();
        for (label, v) in self.minimal_vectors()? {
            let r = self.saturated_roots(&v)?;
            let diff = r.checked_sub(base_roots).ok_or_else(|| Error::Inconsistent("saturation lost roots".into()))?;
            coeffs.insert(label, (diff / 2) as u64);
            let local = self.lambda_coords(&v)?;
            factors.insert(label, reflection_factor(&lam, &disc, &local)?);
        }
        let want_xi = 2 * self.variant.b(self.n) as u64;
        if coeffs[&Label::Zero] != 1 || coeffs[&Label::Xi] != want_xi {
            return Err(Error::SelfCheck(format!(
                "N={} {:?}: a_0={} a_xi={} (expected 1, {want_xi})",
                self.n, self.variant, coeffs[&Label::Zero], coeffs[&Label::Xi]
            )));
        }
        if coeffs[&Label::Zeta] != coeffs[&Label::ZetaPrime] {
            return Err(Error::SelfCheck("a_zeta differs from a_zeta'".into()));
        }
        Ok(HeegnerData { n: self.n, variant: self.variant, weight, coeffs, factors })
    }

    /// `II_{2,2+8k} ⊕ D_a` with its own basis.
    pub fn lambda_lattice(&self) -> Result<Lattice> {
        let r = self.ii_rank + self.a as usize;
        let g = self.base.gram()[..r].iter().map(|row| row[..r].to_vec()).collect();
        Lattice::new(g, Some(format!("Lambda_{}", self.n)))
    }

    /// Coordinates in `II ⊕ D_a` of an ambient vector lying in the image.
    fn lambda_coords(&self, v: &LatticeVector) -> Result<LatticeVector> {
        Sublattice::new(&self.ambient.lattice, self.image_basis.clone())?
            .coords(v)
            .ok_or_else(|| Error::Inconsistent("vector outside image".into()))
    }

    /// Decorations `g([v/2])` over `v ∈ Λ^⊥` of square `-4` and even divisibility in `Λ^⊥`.
    pub fn admissible_decorations(&self) -> Result<BTreeSet<Label>> {
        let comp = self.complement()?;
        let cdisc = FiniteQuadraticForm::of(&comp)?;
        let lam = self.lambda_lattice()?;
        let ldisc = FiniteQuadraticForm::of(&lam)?;
        let iso = self.glue_map(&cdisc, &ldisc)?;
        let labels = self.labels(&ldisc)?;
        let mut classes = BTreeSet::new();
        for v in short_vectors(&comp, -4)? {
            let div = comp.divisibility(&v)?;
            if (&div % 2u32).is_zero() {
                let x: Vec<Q> = v.iter().map(|c| Q::new(c.clone(), BigInt::from(2))).collect();
                classes.insert(cdisc.class_of(&x)?);
            }
        }
        let mut out = BTreeSet::new();
        for c in classes {
            let img = iso.get(&c).ok_or_else(|| Error::Inconsistent("class outside glue".into()))?;
            let l = labels.get(img).copied().ok_or_else(|| Error::Inconsistent("unlabelled class".into()))?;
            out.insert(l);
        }
        Ok(out)
    }

    /// `A_{Λ^⊥} → A_Λ` read off from the glue group `M / (Λ ⊕ Λ^⊥)`.
    fn glue_map(&self, cdisc: &FiniteQuadraticForm, ldisc: &FiniteQuadraticForm) -> Result<BTreeMap<Elem, Elem>> {
        let r = self.ii_rank + self.a as usize;
        let gens: Vec<&Vec<Q>> = self.ambient.basis.iter().collect();
        let mut map = BTreeMap::new();
        for g in gens {
            let (lp, cp) = g.split_at(r);
            map.insert(cdisc.class_of(cp)?, ldisc.class_of(lp)?);
        }
        // Close under addition.
        loop {
            let items: Vec<(Elem, Elem)> = map.iter().map(|(a, b)| (a.clone(), b.clone())).collect();
            let mut grew = false;
            for (a1, b1) in &items {
                for (a2, b2) in &items {
                    let key = cdisc.add(a1, a2);
                    let val = ldisc.add(b1, b2);
                    match map.get(&key) {
                        Some(old) if *old != val => return Err(Error::Inconsistent("glue is not a graph".into())),
                        Some(_) => {}
                        None => {
                            map.insert(key, val);
                            grew = true;
                        }
                    }
                }
            }
            if !grew {
                break;
            }
        }
        if map.len() as u64 != cdisc.order() {
            return Err(Error::Inconsistent("glue map not surjective".into()));
        }
        Ok(map)
    }

    fn labels(&self, ldisc: &FiniteQuadraticForm) -> Result<BTreeMap<Elem, Label>> {
        let a = self.a;
        let r = self.ii_rank;
        let mk = |x: Vec<Q>| -> Result<Elem> {
            let mut v = vec![qi(0); r];
            v.extend(lattice::d_n_from_euclidean(a as usize, &x)?);
            ldisc.class_of(&v)
        };
        let mut m = BTreeMap::new();
        m.insert(ldisc.zero(), Label::Zero);
        m.insert(mk(unit_vector(a, qi(1)))?, Label::Xi);
        m.insert(mk(half_vector(a, false))?, Label::Zeta);
        m.insert(mk(half_vector(a, true))?, Label::ZetaPrime);
        Ok(m)
    }
}

/// 1 when `ρ_v` is integral and acts as `±1` on the discriminant group, else 2.
pub fn reflection_factor(l: &Lattice, disc: &FiniteQuadraticForm, v: &LatticeVector) -> Result<u64> {
    let sq = l.norm(v);
    let div = l.divisibility(v)?;
    if !(BigInt::from(2) * &div % &sq).is_zero() {
        return Ok(2);
    }
    let vq: Vec<Q> = v.iter().map(|c| Q::from_integer(c.clone())).collect();
    let sqq = Q::from_integer(sq);
    let mut plus = true;
    let mut minus = true;
    for e in disc.elements() {
        let x = disc.lift(&e);
        let f = qi(2) * l.inner_q(&x, &vq) / &sqq;
        let img: Vec<Q> = x.iter().zip(&vq).map(|(a, b)| a - &f * b).collect();
        let c = disc.class_of(&img)?;
        plus &= c == e;
        minus &= c == disc.neg(&e);
    }
    Ok(if plus || minus { 1 } else { 2 })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeegnerData {
    pub n: u32,
    pub variant: Variant,
    pub weight: u64,
    pub coeffs: BTreeMap<Label, u64>,
    pub factors: BTreeMap<Label, u64>,
}

impl HeegnerData {
    pub fn compute(n: u32, variant: Variant) -> Result<Self> {
        Embedding::new(n, variant)?.heegner_coefficients()
    }

    /// Coefficient of `H_η` in the stable-group relation.
    pub fn stable(&self, l: Label) -> u64 {
        self.coeffs[&l] * self.factors[&l]
    }

    /// `2w λ = Σ c_η H_η` on the stable quotient (odd `N`: the decorated space).
    pub fn stable_relation(&self, provenance: Provenance) -> Result<Relation> {
        let (z, zp) = (self.stable(Label::Zeta), self.stable(Label::ZetaPrime));
        if z != zp {
            return Err(Error::Inconsistent("stable unigonal coefficients differ".into()));
        }
        let space = if self.n % 2 == 0 { Space::FStable(self.n) } else { Space::F(self.n) };
        Ok(Relation {
            n: self.n,
            space,
            group: Group::Stable,
            provenance,
            lambda: qi(2 * self.weight as i64),
            hn: qi(self.stable(Label::Zero) as i64),
            hh: qi(self.stable(Label::Xi) as i64),
            hu: qi(z as i64),
        })
    }

    /// Relation on `F(N)` for the given decoration.
    pub fn decorated_relation(&self, provenance: Provenance, decoration: Decoration) -> Result<Relation> {
        let n = self.n;
        let (dec, others) = match decoration {
            Decoration::Standard => (Label::Xi, [Label::Zeta, Label::ZetaPrime]),
            Decoration::Zeta => (Label::Zeta, [Label::Xi, Label::ZetaPrime]),
            Decoration::ZetaPrime => (Label::ZetaPrime, [Label::Xi, Label::Zeta]),
        };
        if decoration != Decoration::Standard && n % 8 != 6 {
            return Err(Error::InvalidMap { map: "decoration".into(), n: n.into() });
        }
        let c = |l: Label| qi(self.stable(l) as i64);
        let w2 = qi(2 * self.weight as i64);
        if n % 2 == 1 {
            let (z, zp) = (c(others[0]), c(others[1]));
            if z != zp {
                return Err(Error::Inconsistent("unigonal coefficients differ".into()));
            }
            return Ok(Relation { n, space: Space::F(n), group: Group::Decorated, provenance, lambda: w2, hn: c(Label::Zero), hh: c(dec), hu: z });
        }
        let zero_class = DivisorClass::from_terms(
            Space::FStable(n),
            &[(LAMBDA, w2), (H0, -c(Label::Zero)), (HXI, -c(dec)), (HZETA, -c(others[0])), (HZETA_P, -c(others[1]))],
        )?;
        let pushed = divisor::pushforward_rho(n, &zero_class)?.scale(&q(1, 2));
        Ok(Relation {
            n,
            space: Space::F(n),
            group: Group::Decorated,
            provenance,
            lambda: pushed.get(LAMBDA),
            hn: -pushed.get(HN),
            hh: -pushed.get(HH),
            hu: -pushed.get(HU),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    First,
    Second,
    Gritsenko,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Group {
    Decorated,
    Stable,
}

/// `λ·lambda = hn·H_n + hh·H_h + hu·H_u` (stable group: `H_0, H_ξ`, common `H_ζ = H_ζ'`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub n: u32,
    pub space: Space,
    pub group: Group,
    pub provenance: Provenance,
    pub lambda: Q,
    pub hn: Q,
    pub hh: Q,
    pub hu: Q,
}

impl Relation {
    /// The relation as the class `lambda·λ - hn·H_n - hh·H_h - hu·H_u`, which is zero.
    pub fn as_class(&self) -> Result<DivisorClass> {
        if self.space != Space::F(self.n) {
            return Err(Error::SpaceMismatch { expected: Space::F(self.n).to_string(), got: self.space.to_string() });
        }
        let mut terms = vec![(LAMBDA, self.lambda.clone()), (HN, -&self.hn), (HH, -&self.hh)];
        if self.space.has_unigonal() {
            terms.push((HU, -&self.hu));
        } else if !self.hu.is_zero() {
            return Err(Error::Inconsistent("H_u coefficient on a space without H_u".into()));
        }
        DivisorClass::from_terms(self.space, &terms)
    }

    /// `H_h = x λ + y H_u`, for relations with vanishing `H_n` term.
    pub fn solved_for_hh(&self) -> Result<(Q, Q)> {
        if !self.hn.is_zero() || self.hh.is_zero() {
            return Err(Error::Inconsistent("relation cannot be solved for H_h".into()));
        }
        Ok((&self.lambda / &self.hh, -&self.hu / &self.hh))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "N": self.n,
            "group": self.group,
            "provenance": self.provenance,
            "lambda_coeff": fmt_q(&self.lambda),
            "Hn": fmt_q(&self.hn),
            "Hh": fmt_q(&self.hh),
            "Hu": fmt_q(&self.hu),
        })
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RelationJson {
    #[serde(rename = "N")]
    n: u32,
    group: Group,
    provenance: Provenance,
    lambda_coeff: String,
    #[serde(rename = "Hn")]
    hn: String,
    #[serde(rename = "Hh")]
    hh: String,
    #[serde(rename = "Hu")]
    hu: String,
}

impl Relation {
    pub fn from_json(s: &str) -> Result<Relation> {
        let j: RelationJson = serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))?;
        if !(3..=25).contains(&j.n) {
            return Err(Error::OutOfRange(j.n.into()));
        }
        let space = match j.group {
            Group::Stable if j.n % 2 == 0 => Space::FStable(j.n),
            _ => Space::F(j.n),
        };
        let r = Relation {
            n: j.n,
            space,
            group: j.group,
            provenance: j.provenance,
            lambda: parse_q(&j.lambda_coeff)?,
            hn: parse_q(&j.hn)?,
            hh: parse_q(&j.hh)?,
            hu: parse_q(&j.hu)?,
        };
        if space == Space::F(r.n) && !space.has_unigonal() && !r.hu.is_zero() {
            return Err(Error::Inconsistent("H_u coefficient on a space without H_u".into()));
        }
        Ok(r)
    }
}

impl Relation {
    /// Unigonal terms: `H_u`, or `H_ζ + H_ζ'` on the stable quotient of even `N`.
    fn unigonal_terms(&self, c: Q) -> Vec<(&'static str, Q)> {
        if self.space == Space::FStable(self.n) {
            vec![(HZETA, c.clone()), (HZETA_P, c)]
        } else {
            vec![(HU, c)]
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (h0, hh) = if self.space == Space::FStable(self.n) { (H0, HXI) } else { (HN, HH) };
        if self.provenance == Provenance::Gritsenko {
            if let Ok((x, y)) = self.solved_for_hh() {
                let mut terms = vec![(LAMBDA, x)];
                terms.extend(self.unigonal_terms(y));
                let lhs = render_terms(&[(hh, qi(1))]);
                return write!(f, "{} = {}", lhs.trim_start_matches("1 "), render_terms(&terms));
            }
        }
        let mut terms = vec![(h0, self.hn.clone()), (hh, self.hh.clone())];
        terms.extend(self.unigonal_terms(self.hu.clone()));
        write!(f, "{} = {}", render_terms(&[(LAMBDA, self.lambda.clone())]), render_terms(&terms))
    }
}

fn first_data(n: u32) -> Result<HeegnerData> {
    HeegnerData::compute(n, Variant::D)
}

pub fn first_relation(n: u32) -> Result<Relation> {
    first_data(n)?.decorated_relation(Provenance::First, Decoration::Standard)
}

pub fn second_relation(n: u32) -> Result<Relation> {
    HeegnerData::compute(n, Variant::E8D)?.decorated_relation(Provenance::Second, Decoration::Standard)
}

/// First minus second relation.
pub fn gritsenko_from(first: &Relation, second: &Relation) -> Result<Relation> {
    if first.n != second.n || first.space != second.space {
        return Err(Error::SpaceMismatch { expected: first.space.to_string(), got: second.space.to_string() });
    }
    if first.hn != second.hn {
        return Err(Error::Inconsistent("nodal coefficients do not cancel".into()));
    }
    Ok(Relation {
        n: first.n,
        space: first.space,
        group: first.group,
        provenance: Provenance::Gritsenko,
        lambda: &first.lambda - &second.lambda,
        hn: qi(0),
        hh: &first.hh - &second.hh,
        hu: &first.hu - &second.hu,
    })
}

pub fn gritsenko_relation(n: u32) -> Result<Relation> {
    if !Variant::E8D.range().contains(&n) {
        return Err(Error::OutOfRange(n as i64));
    }
    gritsenko_from(&first_relation(n)?, &second_relation(n)?)
}

/// `μ(N) = a_ζ(N)` for the `D_{26-N}` embedding.
pub fn mu(n: u32) -> Result<u64> {
    Ok(first_data(n)?.coeffs[&Label::Zeta])
}

pub fn mu_table(range: std::ops::RangeInclusive<u32>) -> Result<Vec<(u32, u64)>> {
    if *range.start() < 3 || *range.end() > 25 {
        return Err(Error::OutOfRange(if *range.start() < 3 { *range.start() } else { *range.end() } as i64));
    }
    range.map(|n| Ok((n, mu(n)?))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relation_19() {
        let r = first_relation(19).unwrap();
        assert_eq!(r.to_string(), "108 λ = 1 Hn + 14 Hh + 78 Hu");
    }

    #[test]
    fn json_round_trip() {
        let r = first_relation(19).unwrap();
        assert_eq!(Relation::from_json(&r.to_json().to_string()).unwrap(), r);
        assert!(Relation::from_json("{}").is_err());
    }

    #[test]
    fn weights() {
        let e = Embedding::new(19, Variant::D).unwrap();
        assert_eq!(e.quasi_pullback_weight().unwrap(), 54);
        let e = Embedding::new(17, Variant::E8D).unwrap();
        assert_eq!(e.quasi_pullback_weight().unwrap(), 132);
        assert!(Embedding::new(26, Variant::D).is_err());
        assert!(Embedding::new(18, Variant::E8D).is_err());
    }
}

