//! The Verma module `M_Λ = Ω_−·v`, its contravariant form and extremal vectors.

use std::cell::RefCell;
use std::cmp::Reverse;
use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::basis::{GeneratorBasis, Kind, RealForm};
use super::uea::{normal_order, WordElement};
use crate::linalg::{self, Inertia};
use crate::rational::{fmt_rational, int, serde_rational, Rational};
use crate::rootsys::RootVector;
use crate::{Error, Result};

/// Upper bound on the number of monomials enumerated for one request.
pub const MAX_MONOMIALS: usize = 20_000;

/// Exponents over the lowering generators, in PBW order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PbwMonomial(pub Vec<u32>);

impl PbwMonomial {
    pub fn one(gb: &GeneratorBasis) -> Self {
        PbwMonomial(vec![0; gb.lowering.len()])
    }

    /// `g^e` for a lowering generator `g`.
    pub fn power(gb: &GeneratorBasis, g: usize, e: u32) -> Self {
        let mut m = Self::one(gb);
        m.0[gb.slot[g]] = e;
        m
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Weight shift relative to the highest weight (a negative combination of roots).
    pub fn weight(&self, gb: &GeneratorBasis) -> Vec<i64> {
        let mut w = vec![0i64; gb.n];
        for (k, &e) in self.0.iter().enumerate() {
            for (x, y) in w.iter_mut().zip(gb.weight(gb.lowering[k])) {
                *x += e as i64 * y;
            }
        }
        w
    }

    /// The monomial as a word of generator indices, left to right.
    pub fn word(&self, gb: &GeneratorBasis) -> Vec<usize> {
        let mut w = Vec::new();
        for (k, &e) in self.0.iter().enumerate() {
            w.extend(std::iter::repeat_n(gb.lowering[k], e as usize));
        }
        w
    }

    pub fn display(&self, gb: &GeneratorBasis) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, &e)| {
                let l = gb.label(gb.lowering[k]);
                if e == 1 {
                    l.to_string()
                } else {
                    format!("{l}^{e}")
                }
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }
}

/// A vector of `M_Λ` written as `Σ c·X̄·v` over PBW monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct UeaElement {
    #[serde(with = "terms_serde")]
    pub terms: BTreeMap<PbwMonomial, Rational>,
}

mod terms_serde {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        t: &BTreeMap<PbwMonomial, Rational>,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<(Vec<u32>, String)> = t
            .iter()
            .map(|(m, c)| (m.0.clone(), fmt_rational(c)))
            .collect();
        v.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<BTreeMap<PbwMonomial, Rational>, D::Error> {
        let v = Vec::<(Vec<u32>, String)>::deserialize(d)?;
        let mut out = BTreeMap::new();
        for (m, c) in v {
            let c = crate::rational::parse_rational(&c).map_err(serde::de::Error::custom)?;
            if !c.is_zero() {
                out.insert(PbwMonomial(m), c);
            }
        }
        Ok(out)
    }
}

impl UeaElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one(gb: &GeneratorBasis) -> Self {
        Self::monomial(PbwMonomial::one(gb), Rational::one())
    }

    pub fn monomial(m: PbwMonomial, c: Rational) -> Self {
        let mut e = Self::zero();
        e.add_term(m, c);
        e
    }

    pub fn add_term(&mut self, m: PbwMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let v = self.terms.entry(m.clone()).or_insert_with(Rational::zero);
        *v += c;
        if v.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add_scaled(&mut self, other: &UeaElement, c: Rational) {
        if c.is_zero() {
            return;
        }
        for (m, x) in &other.terms {
            self.add_term(m.clone(), x * c);
        }
    }

    pub fn scale(&self, c: Rational) -> UeaElement {
        let mut out = UeaElement::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the highest-weight vector itself.
    pub fn constant_term(&self) -> Rational {
        self.terms
            .iter()
            .find(|(m, _)| m.degree() == 0)
            .map_or_else(Rational::zero, |(_, c)| *c)
    }

    /// The common weight shift of all terms, `None` for zero or mixed weights.
    pub fn weight(&self, gb: &GeneratorBasis) -> Option<Vec<i64>> {
        let mut it = self.terms.keys().map(|m| m.weight(gb));
        let first = it.next()?;
        it.all(|w| w == first).then_some(first)
    }

    /// `self = c·other` for some nonzero `c`.
    pub fn proportional(&self, other: &UeaElement) -> bool {
        if self.is_zero() || other.is_zero() || self.terms.len() != other.terms.len() {
            return false;
        }
        let (m, a) = self.terms.iter().next().unwrap();
        let Some(b) = other.terms.get(m) else {
            return false;
        };
        let c = a / b;
        self.terms
            .iter()
            .all(|(m, x)| other.terms.get(m).is_some_and(|y| *x == c * y))
    }

    /// Rescales so the term of highest degree (first in display order) has coefficient 1.
    pub fn normalized(&self) -> UeaElement {
        match self.ordered_terms().first() {
            Some((_, c)) => self.scale(c.recip()),
            None => self.clone(),
        }
    }

    fn ordered_terms(&self) -> Vec<(&PbwMonomial, Rational)> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, c)| (m, *c)).collect();
        v.sort_by_key(|(m, _)| (Reverse(m.degree()), Reverse((*m).clone())));
        v
    }

    pub fn to_words(&self, gb: &GeneratorBasis) -> WordElement {
        let mut out = WordElement::zero();
        for (m, c) in &self.terms {
            out.add_term(m.word(gb), *c);
        }
        out
    }

    pub fn display(&self, gb: &GeneratorBasis) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (m, c)) in self.ordered_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (i, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            let mono = m.display(gb);
            if m.degree() == 0 {
                s.push_str(&fmt_rational(&a));
            } else if a.is_one() {
                s.push_str(&mono);
            } else {
                let _ = write!(s, "{} {}", fmt_rational(&a), mono);
            }
        }
        s
    }
}

/// `M_Λ` for one highest weight, with a memo of single-generator actions.
/// Not `Sync`: concurrent callers build one module each over the shared basis.
pub struct VermaModule<'a> {
    pub gb: &'a GeneratorBasis,
    pub lambda: Vec<Rational>,
    cache: RefCell<HashMap<(usize, PbwMonomial), UeaElement>>,
}

impl<'a> VermaModule<'a> {
    pub fn new(gb: &'a GeneratorBasis, lambda: &[Rational]) -> Result<Self> {
        if lambda.len() != gb.n {
            return Err(Error::InvalidWeight(format!(
                "highest weight has {} coordinates, expected {}",
                lambda.len(),
                gb.n
            )));
        }
        Ok(VermaModule {
            gb,
            lambda: lambda.to_vec(),
            cache: RefCell::new(HashMap::new()),
        })
    }

    /// `ρ(g)·x`.
    pub fn act(&self, g: usize, x: &UeaElement) -> UeaElement {
        let mut out = UeaElement::zero();
        for (m, c) in &x.terms {
            out.add_scaled(&self.act_mono(g, m), *c);
        }
        out
    }

    /// Applies a word right to left: the last generator acts first.
    pub fn act_word(&self, word: &[usize], x: &UeaElement) -> UeaElement {
        word.iter()
            .rev()
            .fold(x.clone(), |acc, &g| self.act(g, &acc))
    }

    fn act_mono(&self, g: usize, m: &PbwMonomial) -> UeaElement {
        let key = (g, m.clone());
        if let Some(hit) = self.cache.borrow().get(&key) {
            return hit.clone();
        }
        let gb = self.gb;
        let first = m.0.iter().position(|&e| e > 0);
        let out = match gb.kind(g) {
            Kind::Cartan => {
                let c = gb.slot[g];
                let shift: i64 = m.weight(gb)[c];
                UeaElement::monomial(m.clone(), self.lambda[c] + int(shift as i128))
            }
            Kind::Lowering if first.is_none_or(|k| gb.slot[g] <= k) => {
                let mut next = m.clone();
                next.0[gb.slot[g]] += 1;
                UeaElement::monomial(next, Rational::one())
            }
            Kind::Raising if first.is_none() => UeaElement::zero(),
            _ => {
                // g·y·rest = y·(g·rest) + [g,y]·rest with y the leftmost factor
                let k = first.unwrap();
                let y = gb.lowering[k];
                let mut rest = m.clone();
                rest.0[k] -= 1;
                let mut out = self.act(y, &self.act_mono(g, &rest));
                for &(h, c) in gb.bracket(g, y) {
                    out.add_scaled(&self.act_mono(h, &rest), c);
                }
                out
            }
        };
        self.cache.borrow_mut().insert(key, out.clone());
        out
    }

    /// The same action computed by normal ordering the word `g·X̄` in the
    /// enveloping algebra, then letting `Ω_0` act by `Λ` and `Ω_+` by zero.
    pub fn act_via_normal_order(&self, g: usize, x: &UeaElement) -> Result<UeaElement> {
        let mut word = WordElement::word(vec![g], Rational::one()).mul(&x.to_words(self.gb));
        word = normal_order(self.gb, &word, 1_000_000)?;
        Ok(self.project(&word))
    }

    /// `X·v` for an ordered element `X`: drop terms ending in a raising
    /// generator, evaluate Cartan factors at `Λ`.
    pub fn project(&self, ordered: &WordElement) -> UeaElement {
        let gb = self.gb;
        let mut out = UeaElement::zero();
        for (w, c) in &ordered.terms {
            if w.last().is_some_and(|&g| gb.kind(g) == Kind::Raising) {
                continue;
            }
            let mut m = PbwMonomial::one(gb);
            let mut scalar = *c;
            for &g in w {
                match gb.kind(g) {
                    Kind::Lowering => m.0[gb.slot[g]] += 1,
                    Kind::Cartan => scalar *= self.lambda[gb.slot[g]],
                    Kind::Raising => unreachable!(),
                }
            }
            out.add_term(m, scalar);
        }
        out
    }

    /// `η(X̄)·y` for a monomial `X̄`.
    fn eta_apply(&self, rf: &RealForm, x: &PbwMonomial, y: &UeaElement) -> UeaElement {
        let gb = self.gb;
        let mut w = y.clone();
        for (k, &e) in x.0.iter().enumerate() {
            let sign = int(rf.signs[k] as i128);
            for _ in 0..e {
                w = self.act(gb.raising[k], &w).scale(sign);
                if w.is_zero() {
                    return w;
                }
            }
        }
        w
    }

    /// `S(x, y) = ξ_Λ(η(x)·y)`.
    pub fn shapovalov(&self, rf: &RealForm, x: &UeaElement, y: &UeaElement) -> Rational {
        let mut total = Rational::zero();
        for (m, c) in &x.terms {
            total += c * self.eta_apply(rf, m, y).constant_term();
        }
        total
    }

    /// `(is_extremal, weight)`: every raising generator annihilates `y`.
    pub fn extremal_check(&self, y: &UeaElement) -> Result<(bool, RootVector)> {
        if y.is_zero() {
            return Err(Error::Misuse("the zero vector is never extremal".into()));
        }
        let shift = y
            .weight(self.gb)
            .ok_or_else(|| Error::Misuse("vector is not a weight vector".into()))?;
        let ok = self.gb.raising.iter().all(|&g| self.act(g, y).is_zero());
        let m = self
            .lambda
            .iter()
            .zip(&shift)
            .map(|(l, s)| l + int(*s as i128))
            .collect();
        Ok((ok, RootVector(m)))
    }
}

/// Positive height of a lowering weight, used to bound enumeration.
fn depth(gb: &GeneratorBasis, w: &[i64]) -> i64 {
    let n = gb.n as i64;
    -w.iter()
        .enumerate()
        .map(|(i, x)| (n - i as i64) * x)
        .sum::<i64>()
}

/// All PBW monomials with the given weight shift.
pub fn monomials_of_weight(gb: &GeneratorBasis, shift: &[i64]) -> Result<Vec<PbwMonomial>> {
    fn go(
        gb: &GeneratorBasis,
        k: usize,
        rest: &mut Vec<i64>,
        cur: &mut Vec<u32>,
        out: &mut Vec<PbwMonomial>,
    ) -> Result<()> {
        if rest.iter().all(|&x| x == 0) {
            let mut m = cur.clone();
            m.resize(gb.lowering.len(), 0);
            out.push(PbwMonomial(m));
            if out.len() > MAX_MONOMIALS {
                return Err(Error::Overflow(format!(
                    "more than {MAX_MONOMIALS} monomials"
                )));
            }
            return Ok(());
        }
        if k == gb.lowering.len() {
            return Ok(());
        }
        let w = gb.weight(gb.lowering[k]).to_vec();
        let mut e = 0u32;
        loop {
            cur.push(e);
            go(gb, k + 1, rest, cur, out)?;
            cur.pop();
            for (r, x) in rest.iter_mut().zip(&w) {
                *r -= x;
            }
            e += 1;
            if depth(gb, rest) < 0 {
                break;
            }
        }
        for (r, x) in rest.iter_mut().zip(&w) {
            *r += x * e as i64;
        }
        Ok(())
    }
    if depth(gb, shift) < 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    go(gb, 0, &mut shift.to_vec(), &mut Vec::new(), &mut out)?;
    Ok(out)
}

/// All PBW monomials of total degree at most `d`.
pub fn monomials_up_to(gb: &GeneratorBasis, d: u32) -> Result<Vec<PbwMonomial>> {
    fn go(
        gb: &GeneratorBasis,
        k: usize,
        left: u32,
        cur: &mut Vec<u32>,
        out: &mut Vec<PbwMonomial>,
    ) -> Result<()> {
        if k == gb.lowering.len() {
            out.push(PbwMonomial(cur.clone()));
            if out.len() > MAX_MONOMIALS {
                return Err(Error::Overflow(format!(
                    "more than {MAX_MONOMIALS} monomials"
                )));
            }
            return Ok(());
        }
        for e in 0..=left {
            cur.push(e);
            go(gb, k + 1, left - e, cur, out)?;
            cur.pop();
        }
        Ok(())
    }
    let mut out = Vec::new();
    go(gb, 0, d, &mut Vec::new(), &mut out)?;
    Ok(out)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GramBlock {
    /// Weight of the block, `Λ` plus the common shift.
    pub weight: RootVector,
    pub basis: Vec<String>,
    #[serde(skip)]
    pub monomials: Vec<PbwMonomial>,
    #[serde(with = "serde_rational::matrix")]
    pub matrix: Vec<Vec<Rational>>,
    pub inertia: Inertia,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GramReport {
    pub highest_weight: RootVector,
    pub degree: u32,
    pub blocks: Vec<GramBlock>,
    pub inertia: Inertia,
}

impl GramReport {
    pub fn is_psd(&self) -> bool {
        self.inertia.is_psd()
    }

    pub fn block(&self, weight: &RootVector) -> Option<&GramBlock> {
        self.blocks.iter().find(|b| &b.weight == weight)
    }
}

/// Gram matrices of the contravariant form on every weight space spanned by
/// monomials of degree `≤ max_degree`. The number of monomials grows like
/// `C(N + d, d)` with `N` lowering generators, so `d` is capped through
/// [`MAX_MONOMIALS`]. Blocks are evaluated in parallel.
pub fn gram(
    gb: &GeneratorBasis,
    rf: &RealForm,
    lambda: &[Rational],
    max_degree: u32,
) -> Result<GramReport> {
    if max_degree == 0 {
        return Err(Error::Misuse("degree must be positive".into()));
    }
    VermaModule::new(gb, lambda)?;
    let mut groups: BTreeMap<Vec<i64>, Vec<PbwMonomial>> = BTreeMap::new();
    for m in monomials_up_to(gb, max_degree)? {
        groups.entry(m.weight(gb)).or_default().push(m);
    }
    // deepest weights last, so the report reads from the top of the module down
    let mut keyed: Vec<(Vec<i64>, Vec<PbwMonomial>)> = groups.into_iter().collect();
    keyed.sort_by(|a, b| {
        depth(gb, &a.0)
            .cmp(&depth(gb, &b.0))
            .then_with(|| b.0.cmp(&a.0))
    });
    let blocks: Vec<GramBlock> = keyed
        .into_par_iter()
        .map(|(shift, basis)| {
            let module = VermaModule::new(gb, lambda).expect("checked above");
            let vecs: Vec<UeaElement> = basis
                .iter()
                .map(|m| UeaElement::monomial(m.clone(), Rational::one()))
                .collect();
            let mut matrix = vec![vec![Rational::zero(); basis.len()]; basis.len()];
            for (i, a) in basis.iter().enumerate() {
                for (j, y) in vecs.iter().enumerate() {
                    matrix[i][j] = module.eta_apply(rf, a, y).constant_term();
                }
            }
            let inertia = linalg::inertia(&matrix);
            let weight = RootVector(
                lambda
                    .iter()
                    .zip(&shift)
                    .map(|(l, s)| l + int(*s as i128))
                    .collect(),
            );
            GramBlock {
                weight,
                basis: basis.iter().map(|m| m.display(gb)).collect(),
                monomials: basis,
                matrix,
                inertia,
            }
        })
        .collect();
    let mut inertia = Inertia::default();
    for b in &blocks {
        inertia.add(b.inertia);
    }
    Ok(GramReport {
        highest_weight: RootVector(lambda.to_vec()),
        degree: max_degree,
        blocks,
        inertia,
    })
}

/// A basis of the extremal vectors of weight `target` in `M_Λ`.
pub fn extremal_search(
    gb: &GeneratorBasis,
    lambda: &[Rational],
    target: &[Rational],
) -> Result<Vec<UeaElement>> {
    let module = VermaModule::new(gb, lambda)?;
    if target.len() != gb.n {
        return Err(Error::InvalidWeight(format!(
            "target has {} coordinates, expected {}",
            target.len(),
            gb.n
        )));
    }
    let mut shift = Vec::new();
    for (t, l) in target.iter().zip(lambda) {
        let d = t - l;
        if !d.is_integer() {
            return Err(Error::InvalidWeight(
                "target differs from Λ by a non-integral weight".into(),
            ));
        }
        shift.push(
            i64::try_from(d.to_integer())
                .map_err(|_| Error::Overflow("weight too large".into()))?,
        );
    }
    if shift.iter().all(|&s| s == 0) {
        return Ok(vec![UeaElement::one(gb)]);
    }
    let basis = monomials_of_weight(gb, &shift)?;
    if basis.is_empty() {
        return Err(Error::InvalidWeight("the weight space is empty".into()));
    }
    // rows: (raising generator, image monomial); columns: basis monomials
    let mut rows: BTreeMap<(usize, PbwMonomial), Vec<Rational>> = BTreeMap::new();
    for (j, m) in basis.iter().enumerate() {
        let v = UeaElement::monomial(m.clone(), Rational::one());
        for &g in &gb.raising {
            for (img, c) in module.act(g, &v).terms {
                rows.entry((g, img))
                    .or_insert_with(|| vec![Rational::zero(); basis.len()])[j] = c;
            }
        }
    }
    let a: linalg::Matrix = rows.into_values().collect();
    let null = if a.is_empty() {
        (0..basis.len())
            .map(|i| {
                let mut v = vec![Rational::zero(); basis.len()];
                v[i] = Rational::one();
                v
            })
            .collect()
    } else {
        linalg::nullspace(&a, basis.len())
    };
    Ok(null
        .into_iter()
        .map(|v| {
            let mut y = UeaElement::zero();
            for (m, c) in basis.iter().zip(v) {
                y.add_term(m.clone(), c);
            }
            y.normalized()
        })
        .collect())
}
