//! Text form of enveloping-algebra elements.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := [coef ['*']] factor (['*'] factor)*  |  coef
//! coef   := integer | integer '/' integer | '(' rational ')'
//! factor := letter ['b' | U+0304] index ['^' integer]
//! ```
//!
//! Letters are `E F G H`; `Gb12` and `Ḡ12` both denote the lowering `Ḡ₁₂`.
//! Two-index labels take two digits (`G12`) or a separator (`G1,10`, `G1_10`).
//! Words act on the highest-weight vector right to left.

use num_traits::{CheckedAdd, One, Zero};

use super::basis::{GenLabel, GeneratorBasis};
use super::module::{UeaElement, VermaModule};
use super::uea::WordElement;
use crate::rational::{parse_rational, Rational};
use crate::{Error, Result};

/// One term: a coefficient and a word of labels, left to right.
pub type LabelTerm = (Rational, Vec<(GenLabel, u32)>);

/// Parses the expression without reference to any algebra.
pub fn parse_expression(text: &str) -> Result<Vec<LabelTerm>> {
    let chars: Vec<char> = text
        .chars()
        .map(|c| if c == '\u{2212}' { '-' } else { c })
        .collect();
    let mut p = Parser { s: chars, i: 0 };
    let out = p.expr()?;
    p.ws();
    if p.i != p.s.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(out)
}

struct Parser {
    s: Vec<char>,
    i: usize,
}

impl Parser {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at position {}", self.i))
    }

    fn ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.ws();
        self.s.get(self.i).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.i;
        while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
            self.i += 1;
        }
        (self.i > start).then(|| self.s[start..self.i].iter().collect())
    }

    fn expr(&mut self) -> Result<Vec<LabelTerm>> {
        let mut out = Vec::new();
        let mut sign = if self.eat('-') {
            -Rational::one()
        } else {
            Rational::one()
        };
        if self.peek().is_none() {
            return Err(self.err("empty expression"));
        }
        loop {
            let (c, word) = self.term()?;
            out.push((sign * c, word));
            sign = match self.peek() {
                Some('+') => Rational::one(),
                Some('-') => -Rational::one(),
                None => break,
                Some(_) => return Err(self.err("expected '+' or '-'")),
            };
            self.i += 1;
        }
        Ok(out)
    }

    fn coef(&mut self) -> Result<Option<Rational>> {
        match self.peek() {
            Some('(') => {
                self.i += 1;
                let start = self.i;
                let end = self.s[start..]
                    .iter()
                    .position(|&c| c == ')')
                    .ok_or_else(|| self.err("unclosed '('"))?;
                let text: String = self.s[start..start + end].iter().collect();
                self.i = start + end + 1;
                Ok(Some(parse_rational(text.trim())?))
            }
            Some(c) if c.is_ascii_digit() => {
                let mut text = self.digits().unwrap();
                if self.peek() == Some('/') {
                    self.i += 1;
                    self.ws();
                    let d = self
                        .digits()
                        .ok_or_else(|| self.err("expected denominator"))?;
                    text = format!("{text}/{d}");
                }
                Ok(Some(parse_rational(&text)?))
            }
            _ => Ok(None),
        }
    }

    fn term(&mut self) -> Result<LabelTerm> {
        let coef = self.coef()?;
        let mut word = Vec::new();
        loop {
            let had_star = self.eat('*');
            match self.peek() {
                Some(c) if "EFGH".contains(c) => word.push(self.factor()?),
                _ if had_star => return Err(self.err("expected a generator after '*'")),
                _ => break,
            }
        }
        if coef.is_none() && word.is_empty() {
            return Err(self.err("expected a coefficient or generator"));
        }
        Ok((coef.unwrap_or_else(Rational::one), word))
    }

    fn factor(&mut self) -> Result<(GenLabel, u32)> {
        let letter = self.s[self.i];
        self.i += 1;
        let mut bar = false;
        if matches!(self.s.get(self.i), Some('b') | Some('\u{304}')) {
            bar = true;
            self.i += 1;
        }
        let first = self
            .digits()
            .ok_or_else(|| self.err("expected generator index"))?;
        let two = matches!(letter, 'F' | 'G');
        let (i, j) = if matches!(self.s.get(self.i), Some(',') | Some('_')) {
            self.i += 1;
            let second = self
                .digits()
                .ok_or_else(|| self.err("expected second index"))?;
            (num(&first, self)?, Some(num(&second, self)?))
        } else if two {
            if first.len() != 2 {
                return Err(self.err("two-index label needs two digits or a separator"));
            }
            (num(&first[..1], self)?, Some(num(&first[1..], self)?))
        } else {
            (num(&first, self)?, None)
        };
        if two != j.is_some() {
            return Err(self.err("wrong number of indices"));
        }
        if bar && letter == 'H' {
            return Err(self.err("Cartan generators carry no bar"));
        }
        let mut exp = 1;
        if self.s.get(self.i) == Some(&'^') {
            self.i += 1;
            let d = self.digits().ok_or_else(|| self.err("expected exponent"))?;
            exp = d
                .parse::<u32>()
                .map_err(|_| self.err("exponent too large"))?;
            if exp > 64 {
                return Err(self.err("exponent too large"));
            }
        }
        Ok((GenLabel::new(letter, bar, i, j), exp))
    }
}

fn num(t: &str, p: &Parser) -> Result<usize> {
    let v: usize = t.parse().map_err(|_| p.err("index too large"))?;
    if v == 0 || v > 64 {
        return Err(p.err("index out of range"));
    }
    Ok(v)
}

/// Longest word accepted from text. Coefficients grow factorially with the
/// word length and are held in `i128`.
pub const MAX_WORD_LENGTH: usize = 12;

/// Resolves labels against a basis, producing a word element.
pub fn resolve(gb: &GeneratorBasis, terms: &[LabelTerm]) -> Result<WordElement> {
    let mut out = WordElement::zero();
    for (c, word) in terms {
        let mut w = Vec::new();
        for (label, e) in word {
            let g = gb.lookup(label).ok_or_else(|| {
                Error::Parse(format!(
                    "unknown generator {} for series {}",
                    label.ascii(),
                    gb.series
                ))
            })?;
            if w.len() + *e as usize > MAX_WORD_LENGTH {
                return Err(Error::Overflow(format!(
                    "words longer than {MAX_WORD_LENGTH} generators"
                )));
            }
            w.extend(std::iter::repeat_n(g, *e as usize));
        }
        // like terms are merged with checked arithmetic, since the
        // coefficients come straight from user text
        let merged = match out.terms.get(&w) {
            Some(prev) => prev
                .checked_add(c)
                .ok_or_else(|| Error::Overflow("coefficient sum exceeds i128".into()))?,
            None => *c,
        };
        out.terms.remove(&w);
        out.add_term(w, merged);
    }
    Ok(out)
}

/// Parses an expression and applies it to the highest-weight vector.
pub fn parse_vector(module: &VermaModule<'_>, text: &str) -> Result<UeaElement> {
    let words = resolve(module.gb, &parse_expression(text)?)?;
    let one = UeaElement::one(module.gb);
    let mut out = UeaElement::zero();
    for (w, c) in &words.terms {
        if !c.is_zero() {
            out.add_scaled(&module.act_word(w, &one), *c);
        }
    }
    Ok(out)
}
