//! Words in the enveloping algebra and their PBW normal order
//! `Ω_− · Ω_0 · Ω_+` (lowering, then Cartan, then raising).

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::basis::{GeneratorBasis, Kind};
use crate::rational::Rational;
use crate::{Error, Result};

/// A linear combination of words; each word lists generator indices left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WordElement {
    pub terms: BTreeMap<Vec<usize>, Rational>,
}

impl WordElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::word(Vec::new(), Rational::one())
    }

    pub fn word(w: Vec<usize>, c: Rational) -> Self {
        let mut e = Self::zero();
        e.add_term(w, c);
        e
    }

    pub fn add_term(&mut self, w: Vec<usize>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&mut self, other: &WordElement) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), *c);
        }
    }

    pub fn mul(&self, other: &WordElement) -> WordElement {
        let mut out = WordElement::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_term(w, x * y);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

fn order_key(gb: &GeneratorBasis, g: usize) -> usize {
    let l = gb.lowering.len();
    match gb.kind(g) {
        Kind::Lowering => gb.slot[g],
        Kind::Cartan => l + gb.slot[g],
        Kind::Raising => l + gb.n + gb.slot[g],
    }
}

/// Rewrites every word into PBW order using `ab = ba + [a,b]`.
/// Fails with `Overflow` beyond `budget` rewriting steps.
pub fn normal_order(gb: &GeneratorBasis, x: &WordElement, budget: usize) -> Result<WordElement> {
    let mut out = WordElement::zero();
    let mut work: Vec<(Vec<usize>, Rational)> =
        x.terms.iter().map(|(w, c)| (w.clone(), *c)).collect();
    let mut steps = 0usize;
    while let Some((w, c)) = work.pop() {
        steps += 1;
        if steps > budget {
            return Err(Error::Overflow(
                "normal ordering exceeded its step budget".into(),
            ));
        }
        let bad =
            (0..w.len().saturating_sub(1)).find(|&i| order_key(gb, w[i]) > order_key(gb, w[i + 1]));
        let Some(i) = bad else {
            out.add_term(w, c);
            continue;
        };
        let (a, b) = (w[i], w[i + 1]);
        let mut swapped = w.clone();
        swapped.swap(i, i + 1);
        work.push((swapped, c));
        for &(g, k) in gb.bracket(a, b) {
            let mut nw = w[..i].to_vec();
            nw.push(g);
            nw.extend_from_slice(&w[i + 2..]);
            work.push((nw, c * k));
        }
    }
    Ok(out)
}

/// Harish-Chandra projection: keep the pure-Cartan words of a normally
/// ordered element and evaluate them at `Λ`.
pub fn xi(gb: &GeneratorBasis, ordered: &WordElement, lambda: &[Rational]) -> Rational {
    let mut total = Rational::zero();
    for (w, c) in &ordered.terms {
        if w.iter().all(|&g| gb.kind(g) == Kind::Cartan) {
            let v: Rational = w.iter().map(|&g| lambda[gb.slot[g]]).product();
            total += c * v;
        }
    }
    total
}
