//! Reduction points `A ≤ B` and spacing `C` on the line `Π₀ + zε`.
//!
//! For a weight `Λ = Π₀ + zε` with `⟨Π₀ + R, γ_r⟩ = 0` the unitarizable values
//! of `z` form the half line `z ≤ A` together with the points
//! `A + C, A + 2C, …, B`. `Q(Π₀)` is the simple component through `γ_r` of
//! the root system generated by `±γ_r` and the compact roots orthogonal to
//! `Π₀`; `T(Π₀)` enlarges it by short compact roots on which `Π₀` is 1.

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::jakobsen::{self, split_rank};
use crate::rational::{int, serde_rational, Rational};
use crate::rootsys::{pair, AlgebraSpec, RootSystem, RootVector, Subsystem};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EhwConstants {
    #[serde(rename = "A", with = "serde_rational")]
    pub a: Rational,
    #[serde(rename = "B", with = "serde_rational")]
    pub b: Rational,
    #[serde(rename = "C", with = "serde_rational")]
    pub c: Rational,
    pub q_type: AlgebraSpec,
    pub t_type: AlgebraSpec,
    pub q_split_rank: usize,
}

impl EhwConstants {
    /// Number of unitarizable points from `A` to `B` inclusive.
    pub fn level(&self) -> usize {
        let steps = (self.b - self.a) / self.c;
        debug_assert!(steps.is_integer());
        steps.to_integer() as usize + 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitaritySet {
    #[serde(with = "serde_rational")]
    pub continuous_max: Rational,
    #[serde(with = "serde_rational::vec")]
    pub discrete: Vec<Rational>,
}

impl UnitaritySet {
    pub fn from_constants(k: &EhwConstants) -> UnitaritySet {
        let steps = ((k.b - k.a) / k.c).to_integer();
        let discrete = (1..=steps).map(|s| k.a + k.c * int(s)).collect();
        UnitaritySet {
            continuous_max: k.a,
            discrete,
        }
    }

    pub fn contains(&self, z: &Rational) -> bool {
        *z <= self.continuous_max || self.discrete.contains(z)
    }

    pub fn level(&self) -> usize {
        self.discrete.len() + 1
    }

    /// The last unitarizable point.
    pub fn last(&self) -> Rational {
        self.discrete.last().copied().unwrap_or(self.continuous_max)
    }

    /// Open intervals of non-unitarizable `z`: between consecutive points,
    /// and everything above the last one (`None` as upper end).
    pub fn gaps(&self) -> Vec<(Rational, Option<Rational>)> {
        let mut pts = vec![self.continuous_max];
        pts.extend(self.discrete.iter().copied());
        let mut out: Vec<_> = pts.windows(2).map(|w| (w[0], Some(w[1]))).collect();
        out.push((*pts.last().unwrap(), None));
        out
    }
}

fn check_pi0(rs: &RootSystem, pi0: &RootVector) -> Result<()> {
    if pi0.dim() != rs.dim {
        return Err(Error::InvalidWeight(format!(
            "expected {} coordinates",
            rs.dim
        )));
    }
    if !pair(&(pi0 + &rs.half_sum), &rs.highest_root).is_zero() {
        return Err(Error::InvalidWeight(
            "Π₀ must satisfy ⟨Π₀ + R, γ_r⟩ = 0".into(),
        ));
    }
    for mu in &rs.compact_simples {
        let v = pair(pi0, mu);
        if !(v.is_integer() && !v.is_negative()) {
            return Err(Error::InvalidWeight(format!(
                "Π₀ is not dominant integral on the compact roots: ⟨Π₀,{mu}⟩ = {v}"
            )));
        }
    }
    Ok(())
}

/// Compact roots (both signs) orthogonal to `Π₀`.
fn vanishing_compact(rs: &RootSystem, pi0: &RootVector) -> Vec<RootVector> {
    rs.compact_roots()
        .into_iter()
        .filter(|mu| pi0.dot(mu).is_zero())
        .collect()
}

pub fn q_system(rs: &RootSystem, pi0: &RootVector) -> Result<Subsystem> {
    check_pi0(rs, pi0)?;
    let mut gens = vec![rs.highest_root.clone()];
    gens.extend(vanishing_compact(rs, pi0));
    rs.subsystem(&gens)
}

/// `T(Π₀)`; equal to `Q` unless the algebra has two root lengths and a short
/// compact root with `⟨Π₀, μ⟩ = 1` meets `Q`.
pub fn t_system(rs: &RootSystem, pi0: &RootVector, q: &Subsystem) -> Result<Subsystem> {
    check_pi0(rs, pi0)?;
    if !rs.spec.two_lengths() {
        return Ok(q.clone());
    }
    let long = rs
        .positive_roots
        .iter()
        .map(RootVector::norm2)
        .max()
        .unwrap();
    let extra: Vec<RootVector> = rs
        .compact_roots()
        .into_iter()
        .filter(|mu| mu.norm2() < long)
        .filter(|mu| pair(pi0, mu) == int(1))
        .filter(|mu| q.roots.iter().any(|a| !a.dot(mu).is_zero()))
        .collect();
    if extra.is_empty() {
        return Ok(q.clone());
    }
    let mut gens = vec![rs.highest_root.clone()];
    gens.extend(vanishing_compact(rs, pi0));
    gens.extend(extra);
    rs.subsystem(&gens)
}

fn compact_half_sum(rs: &RootSystem, sub: &Subsystem) -> RootVector {
    let mut v = RootVector::zeros(rs.dim);
    for a in rs.compact_positive.iter().filter(|a| sub.contains(a)) {
        v = &v + a;
    }
    v.scale(crate::rational::half())
}

pub fn constants(rs: &RootSystem, pi0: &RootVector) -> Result<EhwConstants> {
    let q = q_system(rs, pi0)?;
    let t = t_system(rs, pi0, &q)?;
    let rc1 = compact_half_sum(rs, &q);
    let rc2 = compact_half_sum(rs, &t);
    let same = q.roots == t.roots;
    let b = if matches!(rs.spec, AlgebraSpec::SoOdd(_)) && !same {
        int(1) + pair(&rc2, &rs.highest_root)
    } else {
        int(1) + pair(&(&rc1 + &rc2), &rs.highest_root)
    };
    let c = -rs.spec.lambda_s();
    let tq = split_rank(&q.system).t;
    let a = b - int(tq as i128 - 1) * c;
    Ok(EhwConstants {
        a,
        b,
        c,
        q_type: q.spec(),
        t_type: t.spec(),
        q_split_rank: tq,
    })
}

pub fn unitarizable_set(rs: &RootSystem, pi0: &RootVector) -> Result<UnitaritySet> {
    Ok(UnitaritySet::from_constants(&constants(rs, pi0)?))
}

/// Everything known about one highest weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub algebra: AlgebraSpec,
    pub weight: RootVector,
    /// Last place of unitarity on the `λ` axis, `B − ⟨R, γ_r⟩`.
    #[serde(with = "serde_rational")]
    pub lambda0: Rational,
    #[serde(rename = "A", with = "serde_rational")]
    pub a: Rational,
    #[serde(rename = "B", with = "serde_rational")]
    pub b: Rational,
    #[serde(rename = "C", with = "serde_rational")]
    pub c: Rational,
    pub level: usize,
    #[serde(with = "serde_rational")]
    pub continuous_max: Rational,
    #[serde(with = "serde_rational::vec")]
    pub discrete: Vec<Rational>,
    pub unitarizable: bool,
    pub witnesses: Witnesses,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witnesses {
    pub lambda0_weight: RootVector,
    pub alpha0: RootVector,
    #[serde(with = "serde_rational")]
    pub jakobsen_lambda0: Rational,
    #[serde(with = "serde_rational")]
    pub lambda: Rational,
    #[serde(with = "serde_rational")]
    pub z: Rational,
    pub missing_weight: RootVector,
    pub q_type: AlgebraSpec,
    pub t_type: AlgebraSpec,
    pub methods: Vec<String>,
    /// Both methods put the last point at the same place.
    pub methods_agree: bool,
}

/// Classifies `Λ` with both methods.
pub fn classify(rs: &RootSystem, weight: &RootVector) -> Result<ClassificationReport> {
    let d = rs.decompose(weight)?;
    if !d.dominant_integral {
        return Err(Error::InvalidWeight(format!(
            "compact part of {weight} is not dominant integral (labels {:?})",
            d.labels.iter().map(ToString::to_string).collect::<Vec<_>>()
        )));
    }
    let k = constants(rs, &d.pi0)?;
    let set = UnitaritySet::from_constants(&k);
    let w = jakobsen::last_place(rs, &d.lambda0)?;
    let missing = jakobsen::missing_weight(rs, &d.lambda0, &w);
    let rg = rs.rho_gamma();
    let agree = k.b == w.lambda0 + rg;
    Ok(ClassificationReport {
        algebra: rs.spec,
        weight: weight.clone(),
        lambda0: k.b - rg,
        a: k.a,
        b: k.b,
        c: k.c,
        level: set.level(),
        continuous_max: set.continuous_max,
        discrete: set.discrete.clone(),
        unitarizable: set.contains(&d.z),
        witnesses: Witnesses {
            lambda0_weight: d.lambda0,
            alpha0: w.alpha0,
            jakobsen_lambda0: w.lambda0,
            lambda: d.lambda,
            z: d.z,
            missing_weight: missing,
            q_type: k.q_type,
            t_type: k.t_type,
            methods: vec!["jakobsen".into(), "ehw".into()],
            methods_agree: agree,
        },
    })
}

pub fn is_unitarizable(rs: &RootSystem, weight: &RootVector) -> Result<bool> {
    Ok(classify(rs, weight)?.unitarizable)
}

/// One label pattern of a sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternResult {
    pub labels: Vec<u32>,
    #[serde(with = "serde_rational")]
    pub jakobsen_lambda0: Rational,
    pub alpha0: RootVector,
    pub constants: EhwConstants,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheck {
    pub algebra: AlgebraSpec,
    pub max_label: u32,
    pub patterns: Vec<PatternResult>,
    pub mismatches: usize,
}

/// All label vectors with entries in `0..=max_label`, in lexicographic order.
pub fn label_patterns(slots: usize, max_label: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..slots {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=max_label).map(move |v| {
                    let mut p = p.clone();
                    p.push(v);
                    p
                })
            })
            .collect();
    }
    out
}

/// Runs both methods on one set of compact labels.
pub fn check_pattern(rs: &RootSystem, labels: &[u32]) -> Result<PatternResult> {
    let labs: Vec<Rational> = labels.iter().map(|&l| int(l as i128)).collect();
    let lambda0 = rs.weight_from_labels(&labs, Rational::zero())?;
    let w = jakobsen::last_place(rs, &lambda0)?;
    let pi0 = &lambda0 - &rs.epsilon.scale(rs.rho_gamma());
    let k = constants(rs, &pi0)?;
    let agree = k.b == w.lambda0 + rs.rho_gamma();
    Ok(PatternResult {
        labels: labels.to_vec(),
        jakobsen_lambda0: w.lambda0,
        alpha0: w.alpha0,
        constants: k,
        agree,
    })
}

/// Compares the Jakobsen last place with `B − ⟨R, γ_r⟩` over every label
/// pattern with entries up to `max_label`. Patterns run in parallel; the
/// result keeps the lexicographic order.
pub fn cross_check(rs: &RootSystem, max_label: u32) -> Result<CrossCheck> {
    let patterns = label_patterns(rs.compact_simples.len(), max_label);
    let results: Result<Vec<PatternResult>> =
        patterns.par_iter().map(|p| check_pattern(rs, p)).collect();
    let patterns = results?;
    let mismatches = patterns.iter().filter(|p| !p.agree).count();
    Ok(CrossCheck {
        algebra: rs.spec,
        max_label,
        patterns,
        mismatches,
    })
}
