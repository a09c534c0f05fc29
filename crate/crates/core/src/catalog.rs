//! Unitary highest-weight modules of the conformal algebra `su(2,2)` and the
//! de Sitter algebra `so(3,2)`, generated from the classification engines.
//!
//! Nothing here is a stored table: highest weights come from the compact
//! labels and `λ`, the last place and missing weight from the diagram method,
//! unitarity from the reduction points, and each extremal vector is checked
//! in the Verma module before it is reported.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::ehw;
use crate::jakobsen;
use crate::rational::{fmt_rational, half, int, serde_rational, Rational};
use crate::rootsys::{AlgebraSpec, RootSystem, RootVector};
use crate::verma::{parse_vector, GeneratorBasis, UeaElement, VermaModule};
use crate::{Error, Result};

/// Particle content of an `su(2,2)` module restricted to the Poincaré group.
/// Copied as descriptive metadata, not derived.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Poincare {
    Massless {
        #[serde(with = "serde_rational")]
        helicity: Rational,
    },
    Massive {
        #[serde(with = "serde_rational")]
        spin: Rational,
    },
    MassiveRange {
        #[serde(with = "serde_rational")]
        low: Rational,
        #[serde(with = "serde_rational")]
        high: Rational,
    },
}

impl fmt::Display for Poincare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Poincare::Massless { helicity } => {
                write!(f, "mass = 0, helicity {}", fmt_rational(helicity))
            }
            Poincare::Massive { spin } => write!(f, "mass > 0, spin {}", fmt_rational(spin)),
            Poincare::MassiveRange { low, high } => {
                write!(
                    f,
                    "mass > 0, spin {} .. {}",
                    fmt_rational(low),
                    fmt_rational(high)
                )
            }
        }
    }
}

/// `(j₁, j₂; d)`: eigenvalues of `½(H₁−H₂)`, `½(H₃−H₄)` and `½(H₁+H₂−H₃−H₄)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhysicalLabel {
    #[serde(with = "serde_rational")]
    pub j1: Rational,
    #[serde(with = "serde_rational")]
    pub j2: Rational,
    #[serde(with = "serde_rational")]
    pub d: Rational,
}

impl PhysicalLabel {
    pub fn of(weight: &RootVector) -> Result<PhysicalLabel> {
        let l = weight.coords();
        if l.len() != 4 {
            return Err(Error::InvalidWeight(
                "su(2,2) weights have four coordinates".into(),
            ));
        }
        Ok(PhysicalLabel {
            j1: half() * (l[0] - l[1]),
            j2: half() * (l[2] - l[3]),
            d: half() * (l[0] + l[1] - l[2] - l[3]),
        })
    }

    /// The traceless weight with these labels.
    pub fn to_weight(&self) -> RootVector {
        // Λ1 − Λ2 = 2j1, Λ3 − Λ4 = 2j2, Λ1 + Λ2 − Λ3 − Λ4 = 2d, ΣΛ = 0
        let s = self.d; // Λ1 + Λ2 = d, Λ3 + Λ4 = −d
        RootVector(vec![
            half() * (s + int(2) * self.j1),
            half() * (s - int(2) * self.j1),
            half() * (-s + int(2) * self.j2),
            half() * (-s - int(2) * self.j2),
        ])
    }
}

impl fmt::Display for PhysicalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}; {})",
            fmt_rational(&self.j1),
            fmt_rational(&self.j2),
            fmt_rational(&self.d)
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "algebra", rename_all = "snake_case")]
#[allow(clippy::large_enum_variant)]
pub enum EntryLabel {
    Su22 {
        label: PhysicalLabel,
        missing: Option<PhysicalLabel>,
        poincare: Poincare,
    },
    /// Energy `E₀ = −Λ₁` and spin `j = Λ₂`.
    So32 {
        #[serde(with = "serde_rational")]
        e0: Rational,
        #[serde(with = "serde_rational")]
        j: Rational,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalVector {
    /// Written with root vectors, e.g. `E(-β) E(-μ2) + 2 E(-α2)`.
    pub roots: String,
    /// The same vector in the PBW basis of the matrix realization.
    pub pbw: String,
    pub element: UeaElement,
    pub weight: RootVector,
    pub verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub family: char,
    pub highest_weight: RootVector,
    #[serde(with = "serde_rational")]
    pub lambda: Rational,
    pub label: EntryLabel,
    /// Last place of unitarity on the line through this weight.
    #[serde(with = "serde_rational")]
    pub lambda0: Rational,
    pub missing_weight: Option<RootVector>,
    pub extremal_vector: Option<ExtremalVector>,
    pub parameter_range: String,
    pub unitarizable: bool,
}

/// Compact labels of `rs` given as `(compact simple root, value)` pairs.
fn labels(rs: &RootSystem, given: &[(RootVector, Rational)]) -> Result<Vec<Rational>> {
    rs.compact_simples
        .iter()
        .map(|mu| {
            given
                .iter()
                .find(|(r, _)| r == mu)
                .map(|(_, v)| *v)
                .ok_or_else(|| Error::Misuse(format!("no label for {mu}")))
        })
        .collect()
}

/// A vector written as `(coefficient, [(root name, power)])`.
type RootWord<'a> = (Rational, Vec<(&'a str, usize)>);

struct Dictionary<'a> {
    /// Root name, generator in parser syntax, sign of the root vector.
    entries: &'a [(&'a str, &'a str, i128)],
}

impl Dictionary<'_> {
    fn lookup(&self, name: &str) -> (&str, i128) {
        let (_, g, s) = self
            .entries
            .iter()
            .find(|(n, _, _)| *n == name)
            .expect("known root");
        (g, *s)
    }

    fn expression(&self, words: &[RootWord<'_>]) -> String {
        let mut parts = Vec::new();
        for (c, word) in words {
            let mut coef = *c;
            let mut gens = Vec::new();
            for (name, p) in word {
                let (g, s) = self.lookup(name);
                if *p % 2 == 1 {
                    coef *= int(s);
                }
                gens.push(if *p == 1 {
                    g.to_string()
                } else {
                    format!("{g}^{p}")
                });
            }
            parts.push(format!("({}) {}", fmt_rational(&coef), gens.join(" ")));
        }
        parts.join(" + ")
    }

    fn roots_text(words: &[RootWord<'_>]) -> String {
        let mut s = String::new();
        for (i, (c, word)) in words.iter().enumerate() {
            let a = c.abs();
            match (i, c.is_negative()) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            if !a.is_one() {
                s.push_str(&fmt_rational(&a));
                s.push(' ');
            }
            let w: Vec<String> = word
                .iter()
                .map(|(n, p)| {
                    if *p == 1 {
                        format!("E(-{n})")
                    } else {
                        format!("E(-{n})^{p}")
                    }
                })
                .collect();
            s.push_str(&w.join(" "));
        }
        s
    }
}

/// `su(2,2)` inside `gl_4`: the root `e_i − e_j` is carried by `Ḡ_ij`.
const SU22_ROOTS: [(&str, &str, i128); 6] = [
    ("β", "Gb23", 1),
    ("μ1", "Gb34", 1),
    ("μ2", "Gb12", 1),
    ("α1", "Gb24", 1),
    ("α2", "Gb13", 1),
    ("γr", "Gb14", 1),
];

/// `so(3,2)` inside `B_2`. `E(−γr)` is `−F̄12` in the normalization where
/// `E(−α) = Ē1`.
const SO32_ROOTS: [(&str, &str, i128); 4] = [
    ("β", "Gb12", 1),
    ("μ", "Eb2", 1),
    ("α", "Eb1", 1),
    ("γr", "Fb12", -1),
];

fn extremal(
    rs: &RootSystem,
    dict: &Dictionary<'_>,
    weight: &RootVector,
    words: &[RootWord<'_>],
) -> Result<ExtremalVector> {
    let gb = GeneratorBasis::for_algebra(rs.spec)?;
    let module = VermaModule::new(&gb, weight.coords())?;
    let y = parse_vector(&module, &dict.expression(words))?;
    let (verified, m) = module.extremal_check(&y)?;
    Ok(ExtremalVector {
        roots: Dictionary::roots_text(words),
        pbw: y.display(&gb),
        element: y,
        weight: m,
        verified,
    })
}

struct Built {
    weight: RootVector,
    lambda0: Rational,
    missing: RootVector,
    unitarizable: bool,
}

fn build(
    rs: &RootSystem,
    given: &[(RootVector, Rational)],
    lambda: Option<Rational>,
) -> Result<Built> {
    let ls = labels(rs, given)?;
    let l0 = rs.weight_from_labels(&ls, Rational::zero())?;
    let w = jakobsen::last_place(rs, &l0)?;
    let lam = lambda.unwrap_or(w.lambda0);
    let weight = &l0 + &rs.epsilon.scale(lam);
    let missing = &weight - &w.alpha0;
    Ok(Built {
        unitarizable: ehw::is_unitarizable(rs, &weight)?,
        weight,
        lambda0: w.lambda0,
        missing,
    })
}

fn range_error(case: char, what: &str) -> Error {
    Error::InvalidWeight(format!("case {case}: {what}"))
}

/// The `su(2,2)` families a) to f).
///
/// `n` labels `e1 − e2` for a), b) and `e3 − e4` for c), d); e) and f) need
/// `m` as well (on `e1 − e2`, with `n` on `e3 − e4`). b), d) require `λ < −1`
/// and f) requires `λ < −2`; they are listed only when `lambda` is given.
pub fn su22_catalog(n: u32, m: Option<u32>, lambda: Option<Rational>) -> Result<Vec<CatalogEntry>> {
    if n == 0 || m == Some(0) {
        return Err(Error::InvalidWeight("n and m must be positive".into()));
    }
    let rs = RootSystem::build(AlgebraSpec::Su(2, 2))?;
    let dict = Dictionary {
        entries: &SU22_ROOTS,
    };
    let mu1 = RootVector::from_ints(&[0, 0, 1, -1]);
    let mu2 = RootVector::from_ints(&[1, -1, 0, 0]);
    let nq = int(n as i128);
    let mut out = Vec::new();

    let mut push = |family: char,
                    given: Vec<(RootVector, Rational)>,
                    lambda: Option<Rational>,
                    words: Option<Vec<RootWord<'_>>>,
                    poincare: Poincare,
                    range: String|
     -> Result<()> {
        let b = build(&rs, &given, lambda)?;
        let extremal_vector = words
            .map(|w| extremal(&rs, &dict, &b.weight, &w))
            .transpose()?;
        let missing = lambda.is_none().then(|| b.missing.clone());
        let label = EntryLabel::Su22 {
            label: PhysicalLabel::of(&b.weight)?,
            missing: missing.as_ref().map(PhysicalLabel::of).transpose()?,
            poincare,
        };
        out.push(CatalogEntry {
            family,
            lambda: lambda.unwrap_or(b.lambda0),
            highest_weight: b.weight,
            label,
            lambda0: b.lambda0,
            missing_weight: missing,
            extremal_vector,
            parameter_range: range,
            unitarizable: b.unitarizable,
        });
        Ok(())
    };

    let zero = Rational::zero();
    let a_words = vec![(int(1), vec![("β", 1), ("μ2", 1)]), (nq, vec![("α2", 1)])];
    push(
        'a',
        vec![(mu1.clone(), zero), (mu2.clone(), nq)],
        None,
        Some(a_words),
        Poincare::Massless {
            helicity: half() * nq,
        },
        format!("n = {n} > 0"),
    )?;
    if let Some(l) = lambda {
        if l >= int(-1) {
            return Err(range_error('b', "λ must be < −1"));
        }
        push(
            'b',
            vec![(mu1.clone(), zero), (mu2.clone(), nq)],
            Some(l),
            None,
            Poincare::Massive { spin: half() * nq },
            format!("n = {n} > 0, λ = {} < −1", fmt_rational(&l)),
        )?;
    }
    let c_words = vec![(int(1), vec![("β", 1), ("μ1", 1)]), (-nq, vec![("α1", 1)])];
    push(
        'c',
        vec![(mu1.clone(), nq), (mu2.clone(), zero)],
        None,
        Some(c_words),
        Poincare::Massless {
            helicity: half() * nq,
        },
        format!("n = {n} > 0"),
    )?;
    if let Some(l) = lambda {
        push(
            'd',
            vec![(mu1.clone(), nq), (mu2.clone(), zero)],
            Some(l),
            None,
            Poincare::Massive { spin: half() * nq },
            format!("n = {n} > 0, λ = {} < −1", fmt_rational(&l)),
        )?;
    }
    if let Some(m) = m {
        let mq = int(m as i128);
        let e_words = vec![
            (int(1), vec![("β", 1), ("μ1", 1), ("μ2", 1)]),
            (-nq, vec![("α1", 1), ("μ2", 1)]),
            (mq, vec![("α2", 1), ("μ1", 1)]),
            (-(nq * mq), vec![("γr", 1)]),
        ];
        push(
            'e',
            vec![(mu1.clone(), nq), (mu2.clone(), mq)],
            None,
            Some(e_words),
            Poincare::Massive {
                spin: half() * (mq + nq),
            },
            format!("m = {m}, n = {n} > 0"),
        )?;
        if let Some(l) = lambda {
            if l >= int(-2) {
                return Err(range_error('f', "λ must be < −2"));
            }
            push(
                'f',
                vec![(mu1.clone(), nq), (mu2.clone(), mq)],
                Some(l),
                None,
                Poincare::MassiveRange {
                    low: half() * (nq - mq).abs(),
                    high: half() * (nq + mq),
                },
                format!("m = {m}, n = {n} > 0, λ = {} < −2", fmt_rational(&l)),
            )?;
        }
    }
    Ok(out)
}

/// The `so(3,2)` families a) to e).
///
/// a), b) need `m ≥ 2` (the label on `e2`); b) needs `λ < −1` and d) needs
/// `λ < −½`. c) and e) are single weights and always listed.
pub fn so32_catalog(m: Option<u32>, lambda: Option<Rational>) -> Result<Vec<CatalogEntry>> {
    if let Some(m) = m {
        if m < 2 {
            return Err(range_error('a', "m must be ≥ 2"));
        }
    }
    let rs = RootSystem::build(AlgebraSpec::SoOdd(2))?;
    let dict = Dictionary {
        entries: &SO32_ROOTS,
    };
    let mu = RootVector::from_ints(&[0, 1]);
    let mut out = Vec::new();
    let mut push = |family: char,
                    label: Rational,
                    lambda: Option<Rational>,
                    words: Option<Vec<RootWord<'_>>>,
                    range: String|
     -> Result<()> {
        let b = build(&rs, &[(mu.clone(), label)], lambda)?;
        let extremal_vector = words
            .map(|w| extremal(&rs, &dict, &b.weight, &w))
            .transpose()?;
        let c = b.weight.coords();
        out.push(CatalogEntry {
            family,
            lambda: lambda.unwrap_or(b.lambda0),
            label: EntryLabel::So32 { e0: -c[0], j: c[1] },
            highest_weight: b.weight.clone(),
            lambda0: b.lambda0,
            missing_weight: lambda.is_none().then_some(b.missing),
            extremal_vector,
            parameter_range: range,
            unitarizable: b.unitarizable,
        });
        Ok(())
    };
    if let Some(m) = m {
        let mq = int(m as i128);
        let words = vec![
            (int(1), vec![("β", 1), ("μ", 2)]),
            (-(mq - int(1)), vec![("α", 1), ("μ", 1)]),
            (mq * (mq - int(1)) / int(2), vec![("γr", 1)]),
        ];
        push('a', mq, None, Some(words), format!("m = {m} ≥ 2"))?;
        if let Some(l) = lambda {
            if l >= int(-1) {
                return Err(range_error('b', "λ must be < −1"));
            }
            push(
                'b',
                mq,
                Some(l),
                None,
                format!("m = {m} ≥ 2, λ = {} < −1", fmt_rational(&l)),
            )?;
        }
    }
    let c_words = vec![
        (int(1), vec![("β", 1), ("μ", 1)]),
        (-half(), vec![("α", 1)]),
    ];
    push('c', int(1), None, Some(c_words), "single weight".into())?;
    if let Some(l) = lambda {
        if l >= -half() {
            return Err(range_error('d', "λ must be < −1/2"));
        }
        push(
            'd',
            int(1),
            Some(l),
            None,
            format!("λ = {} < −1/2", fmt_rational(&l)),
        )?;
    }
    // the most singular nontrivial unitary module, Λ₀ = 0
    let lam = -half();
    let weight = rs.epsilon.scale(lam);
    out.push(CatalogEntry {
        family: 'e',
        lambda: lam,
        label: EntryLabel::So32 {
            e0: -weight.coords()[0],
            j: weight.coords()[1],
        },
        unitarizable: ehw::is_unitarizable(&rs, &weight)?,
        highest_weight: weight,
        lambda0: jakobsen::last_place(&rs, &RootVector::zeros(2))?.lambda0,
        missing_weight: None,
        extremal_vector: None,
        parameter_range: "single weight".into(),
    });
    Ok(out)
}

/// Aligned text table.
pub fn render_table(entries: &[CatalogEntry]) -> String {
    let mut rows = vec![[
        "case".to_string(),
        "highest weight".into(),
        "label".into(),
        "missing weight".into(),
        "unitarizable".into(),
        "parameters".into(),
    ]];
    for e in entries {
        let label = match &e.label {
            EntryLabel::Su22 {
                label, poincare, ..
            } => format!("{label} {poincare}"),
            EntryLabel::So32 { e0, j } => {
                format!("E0 = {}, j = {}", fmt_rational(e0), fmt_rational(j))
            }
        };
        rows.push([
            format!("{})", e.family),
            e.highest_weight.to_string(),
            label,
            e.missing_weight
                .as_ref()
                .map_or_else(|| "-".into(), ToString::to_string),
            e.unitarizable.to_string(),
            e.parameter_range.clone(),
        ]);
    }
    let widths: Vec<usize> = (0..6)
        .map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut s = String::new();
    for r in &rows {
        let line: Vec<String> = r
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell}{}", " ".repeat(w - cell.chars().count())))
            .collect();
        s.push_str(line.join("  ").trim_end());
        s.push('\n');
    }
    for e in entries {
        if let Some(x) = &e.extremal_vector {
            s.push_str(&format!(
                "{}) extremal vector: {}   [{}]\n",
                e.family, x.roots, x.pbw
            ));
        }
    }
    s
}
