//! Root data of the hermitian simple Lie algebras in orthonormal coordinates.
//!
//! Each family is realized by its simple roots; the positive roots are then
//! produced by root-string closure, so one code path serves every rank. The
//! distinguished elements `β` (noncompact simple root), `γ_r` (highest root),
//! `ε` (central direction) and `R` (half sum of positive roots) are all
//! computed, never transcribed.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::linalg::{self, Matrix};
use crate::rational::{int, is_nonneg_integer, q, serde_rational, Coords, Rational};
use crate::{Error, Result};

// ---------------------------------------------------------------------------
// Vectors

/// A coordinate vector in the orthonormal basis `e_1, …, e_d`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize)]
pub struct RootVector(#[serde(with = "serde_rational::vec")] pub Vec<Rational>);

impl RootVector {
    pub fn zeros(dim: usize) -> Self {
        RootVector(vec![Rational::zero(); dim])
    }

    /// The basis vector `e_{i+1}` (zero-based index).
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[i] = int(1);
        v
    }

    pub fn from_ints(xs: &[i128]) -> Self {
        RootVector(xs.iter().map(|&x| int(x)).collect())
    }

    /// Coordinates given as numerators over a common denominator.
    pub fn from_fracs(den: i128, xs: &[i128]) -> Self {
        RootVector(xs.iter().map(|&x| q(x, den)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    /// Euclidean inner product `(a, b)`.
    pub fn dot(&self, other: &RootVector) -> Rational {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn norm2(&self) -> Rational {
        self.dot(self)
    }

    pub fn scale(&self, r: Rational) -> RootVector {
        RootVector(self.0.iter().map(|x| x * r).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Projection onto the line through `b`.
    pub fn project_on(&self, b: &RootVector) -> RootVector {
        b.scale(self.dot(b) / b.norm2())
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Coords(&self.0).fmt(f)
    }
}

impl Add for &RootVector {
    type Output = RootVector;
    fn add(self, rhs: &RootVector) -> RootVector {
        RootVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RootVector {
    type Output = RootVector;
    fn sub(self, rhs: &RootVector) -> RootVector {
        RootVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &RootVector {
    type Output = RootVector;
    fn neg(self) -> RootVector {
        RootVector(self.0.iter().map(|a| -a).collect())
    }
}

impl Add for RootVector {
    type Output = RootVector;
    fn add(self, rhs: RootVector) -> RootVector {
        &self + &rhs
    }
}

impl Sub for RootVector {
    type Output = RootVector;
    fn sub(self, rhs: RootVector) -> RootVector {
        &self - &rhs
    }
}

impl Neg for RootVector {
    type Output = RootVector;
    fn neg(self) -> RootVector {
        -&self
    }
}

/// `⟨a, b⟩ = 2(a,b)/(b,b)`.
pub fn pairing(a: &RootVector, b: &RootVector) -> Result<Rational> {
    let n = b.norm2();
    if n.is_zero() {
        return Err(Error::DivisionByZero(
            "pairing against the zero vector".into(),
        ));
    }
    Ok(int(2) * a.dot(b) / n)
}

/// Pairing for arguments already known to be nonzero roots.
pub(crate) fn pair(a: &RootVector, b: &RootVector) -> Rational {
    int(2) * a.dot(b) / b.norm2()
}

// ---------------------------------------------------------------------------
// Algebra specifications

/// One of the hermitian families together with its parameters.
///
/// `SoStar(n)` is `so*(2n)`, `SoOdd(n)` is `so(2n-1,2)` and `SoEven(n)` is
/// `so(2n-2,2)`; in every case `n` is the rank.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum AlgebraSpec {
    Su(u32, u32),
    Sp(u32),
    SoStar(u32),
    SoOdd(u32),
    SoEven(u32),
    E6,
    E7,
}

impl AlgebraSpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidSpec(format!("{self}: {m}")));
        match *self {
            AlgebraSpec::Su(p, q) if p < 1 || q < 1 => bad("need p ≥ 1 and q ≥ 1"),
            AlgebraSpec::Sp(n) if n < 2 => bad("need n ≥ 2"),
            AlgebraSpec::SoStar(n) if n < 3 => bad("need n ≥ 3"),
            AlgebraSpec::SoOdd(n) if n < 2 => bad("need n ≥ 2"),
            // so(2,2) splits into two copies of su(1,1).
            AlgebraSpec::SoEven(n) if n < 3 => bad("need n ≥ 3"),
            s => {
                if s.rank() > 24 {
                    return bad("rank above 24 is not supported");
                }
                Ok(())
            }
        }
    }

    pub fn rank(&self) -> usize {
        match *self {
            AlgebraSpec::Su(p, q) => (p as usize + q as usize).saturating_sub(1),
            AlgebraSpec::Sp(n)
            | AlgebraSpec::SoStar(n)
            | AlgebraSpec::SoOdd(n)
            | AlgebraSpec::SoEven(n) => n as usize,
            AlgebraSpec::E6 => 6,
            AlgebraSpec::E7 => 7,
        }
    }

    /// Dimension of the ambient coordinate space.
    pub fn ambient_dim(&self) -> usize {
        match *self {
            AlgebraSpec::Su(p, q) => p as usize + q as usize,
            AlgebraSpec::E6 | AlgebraSpec::E7 => 8,
            _ => self.rank(),
        }
    }

    /// `λ_s`, the spacing of the discrete series ladder.
    pub fn lambda_s(&self) -> Rational {
        match *self {
            AlgebraSpec::Su(..) => int(-1),
            AlgebraSpec::Sp(_) => q(-1, 2),
            AlgebraSpec::SoStar(_) => int(-2),
            AlgebraSpec::E6 => int(-3),
            AlgebraSpec::E7 => int(-4),
            AlgebraSpec::SoEven(n) => int(2 - n as i128),
            AlgebraSpec::SoOdd(n) => q(3 - 2 * n as i128, 2),
        }
    }

    /// Whether the root system has two root lengths.
    pub fn two_lengths(&self) -> bool {
        matches!(self, AlgebraSpec::Sp(_) | AlgebraSpec::SoOdd(_))
    }

    /// Representative under the low-rank isomorphisms, so that equal
    /// algebras compare equal.
    pub fn canonical(&self) -> AlgebraSpec {
        match *self {
            AlgebraSpec::Su(p, q) => AlgebraSpec::Su(p.min(q), p.max(q)),
            AlgebraSpec::Sp(1) | AlgebraSpec::SoOdd(1) => AlgebraSpec::Su(1, 1),
            AlgebraSpec::SoOdd(2) => AlgebraSpec::Sp(2),
            AlgebraSpec::SoStar(2) => AlgebraSpec::Su(1, 1),
            AlgebraSpec::SoStar(3) => AlgebraSpec::Su(1, 3),
            AlgebraSpec::SoEven(3) => AlgebraSpec::Su(2, 2),
            AlgebraSpec::SoStar(4) => AlgebraSpec::SoEven(4),
            s => s,
        }
    }

    /// Short machine-friendly tag, e.g. `su 2 2` or `e6`.
    pub fn tokens(&self) -> String {
        match *self {
            AlgebraSpec::Su(p, q) => format!("su {p} {q}"),
            AlgebraSpec::Sp(n) => format!("sp {n}"),
            AlgebraSpec::SoStar(n) => format!("sostar {n}"),
            AlgebraSpec::SoOdd(n) => format!("so-odd {n}"),
            AlgebraSpec::SoEven(n) => format!("so-even {n}"),
            AlgebraSpec::E6 => "e6".into(),
            AlgebraSpec::E7 => "e7".into(),
        }
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            AlgebraSpec::Su(p, q) => write!(f, "su({p},{q})"),
            AlgebraSpec::Sp(n) => write!(f, "sp({n},R)"),
            AlgebraSpec::SoStar(n) => write!(f, "so*({})", 2 * n as u64),
            AlgebraSpec::SoOdd(n) => write!(f, "so({},2)", 2 * n as i64 - 1),
            AlgebraSpec::SoEven(n) => write!(f, "so({},2)", 2 * n as i64 - 2),
            AlgebraSpec::E6 => write!(f, "e6"),
            AlgebraSpec::E7 => write!(f, "e7"),
        }
    }
}

impl FromStr for AlgebraSpec {
    type Err = Error;

    /// Accepts token form (`su 2 2`, `sp 3`, `sostar 4`, `so-odd 3`,
    /// `so-even 4`, `e6`) and display form (`su(2,2)`, `sp(3,R)`, `so*(8)`,
    /// `so(5,2)`, `e7`). Parameters are range-checked.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unrecognized algebra {s:?}"));
        let norm = s.trim().to_ascii_lowercase();
        let mut name = String::new();
        let mut nums: Vec<u32> = Vec::new();
        let mut cur = String::new();
        let mut seen_num = false;
        for c in norm.chars() {
            if c.is_ascii_digit() {
                // "e6"/"e7" keep their digit in the name
                if !seen_num && (name == "e") {
                    name.push(c);
                    continue;
                }
                cur.push(c);
                seen_num = true;
            } else {
                if !cur.is_empty() {
                    nums.push(cur.parse().map_err(|_| bad())?);
                    cur.clear();
                }
                if c.is_alphabetic() || c == '*' || c == '-' || c == '_' {
                    if seen_num && c != 'r' {
                        return Err(bad());
                    }
                    if !seen_num {
                        name.push(c);
                    }
                } else if !(c.is_whitespace() || c == '(' || c == ')' || c == ',') {
                    return Err(bad());
                }
            }
        }
        if !cur.is_empty() {
            nums.push(cur.parse().map_err(|_| bad())?);
        }
        let name = name.trim_end_matches(['-', '_']).replace('_', "-");
        let paren = norm.contains('(');
        let spec = match (name.as_str(), nums.as_slice()) {
            ("su", [p, q]) => AlgebraSpec::Su(*p, *q),
            ("sp", [n]) => AlgebraSpec::Sp(*n),
            ("sostar" | "so-star", [n]) => AlgebraSpec::SoStar(*n),
            ("so*", [m]) if paren => {
                if m % 2 != 0 {
                    return Err(Error::InvalidSpec(format!(
                        "so*({m}) needs an even argument"
                    )));
                }
                AlgebraSpec::SoStar(m / 2)
            }
            ("so*", [n]) => AlgebraSpec::SoStar(*n),
            ("so-odd" | "soodd", [n]) => AlgebraSpec::SoOdd(*n),
            ("so-even" | "soeven", [n]) => AlgebraSpec::SoEven(*n),
            ("so", [m, 2]) if paren => {
                // so(2n−1,2) and so(2n−2,2) both have n = ⌊m/2⌋ + 1
                if m % 2 == 1 {
                    AlgebraSpec::SoOdd(m / 2 + 1)
                } else {
                    AlgebraSpec::SoEven(m / 2 + 1)
                }
            }
            ("e6", []) => AlgebraSpec::E6,
            ("e7", []) => AlgebraSpec::E7,
            _ => return Err(bad()),
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl Serialize for AlgebraSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for AlgebraSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

// ---------------------------------------------------------------------------
// Root systems

/// Root data of a hermitian simple algebra (or of a hermitian subsystem).
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub spec: AlgebraSpec,
    pub dim: usize,
    pub simple_roots: Vec<RootVector>,
    /// Index of `β` in `simple_roots`.
    pub beta_index: usize,
    pub noncompact_simple: RootVector,
    pub compact_simples: Vec<RootVector>,
    /// Sorted by height, then coordinates.
    pub positive_roots: Vec<RootVector>,
    pub compact_positive: Vec<RootVector>,
    pub noncompact_positive: Vec<RootVector>,
    pub highest_root: RootVector,
    pub half_sum: RootVector,
    pub epsilon: RootVector,
    coeffs: HashMap<RootVector, Vec<i64>>,
}

/// Both normalizations of a weight on its central line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightDecomposition {
    /// `Λ₀` with `⟨Λ₀, γ_r⟩ = 0`.
    pub lambda0: RootVector,
    #[serde(with = "serde_rational")]
    pub lambda: Rational,
    /// `Π₀` with `⟨Π₀ + R, γ_r⟩ = 0`.
    pub pi0: RootVector,
    #[serde(with = "serde_rational")]
    pub z: Rational,
    /// `⟨Λ₀, μ⟩` for the compact simple roots, in order.
    #[serde(with = "serde_rational::vec")]
    pub labels: Vec<Rational>,
    /// Every label is a nonnegative integer.
    pub dominant_integral: bool,
}

fn simple_roots_of(spec: AlgebraSpec) -> (Vec<RootVector>, usize) {
    let d = spec.ambient_dim();
    let e = |i: usize| RootVector::unit(d, i);
    let diff = |i: usize, j: usize| &e(i) - &e(j);
    let sum = |i: usize, j: usize| &e(i) + &e(j);
    match spec {
        AlgebraSpec::Su(p, _) => ((0..d - 1).map(|i| diff(i, i + 1)).collect(), p as usize - 1),
        AlgebraSpec::Sp(n) => {
            let n = n as usize;
            let mut s: Vec<_> = (0..n - 1).map(|i| diff(i, i + 1)).collect();
            s.push(e(n - 1).scale(int(2)));
            (s, n - 1)
        }
        AlgebraSpec::SoStar(n) => {
            let n = n as usize;
            let mut s: Vec<_> = (0..n - 1).map(|i| diff(i, i + 1)).collect();
            s.push(sum(n - 2, n - 1));
            (s, n - 1)
        }
        AlgebraSpec::SoOdd(n) => {
            let n = n as usize;
            let mut s: Vec<_> = (0..n - 1).map(|i| diff(i, i + 1)).collect();
            s.push(e(n - 1));
            (s, 0)
        }
        AlgebraSpec::SoEven(n) => {
            let n = n as usize;
            let mut s: Vec<_> = (0..n - 1).map(|i| diff(i, i + 1)).collect();
            s.push(sum(n - 2, n - 1));
            (s, 0)
        }
        AlgebraSpec::E6 | AlgebraSpec::E7 => {
            let a1 = RootVector::from_fracs(2, &[1, -1, -1, -1, -1, -1, -1, 1]);
            let mut s = vec![
                a1,
                sum(0, 1),
                diff(1, 0),
                diff(2, 1),
                diff(3, 2),
                diff(4, 3),
            ];
            if spec == AlgebraSpec::E6 {
                (s, 0)
            } else {
                s.push(diff(5, 4));
                (s, 6)
            }
        }
    }
}

/// The highest root each family is expected to produce.
fn expected_highest(spec: AlgebraSpec) -> RootVector {
    let d = spec.ambient_dim();
    let e = |i: usize| RootVector::unit(d, i);
    match spec {
        AlgebraSpec::Su(..) => &e(0) - &e(d - 1),
        AlgebraSpec::Sp(_) => e(0).scale(int(2)),
        AlgebraSpec::SoStar(_) | AlgebraSpec::SoOdd(_) | AlgebraSpec::SoEven(_) => &e(0) + &e(1),
        AlgebraSpec::E6 => RootVector::from_fracs(2, &[1, 1, 1, 1, 1, -1, -1, 1]),
        AlgebraSpec::E7 => &e(7) - &e(6),
    }
}

impl RootSystem {
    /// Root data of a family in its standard coordinates.
    pub fn build(spec: AlgebraSpec) -> Result<RootSystem> {
        spec.validate()?;
        let (simples, beta) = simple_roots_of(spec);
        let rs = RootSystem::from_simple_roots(spec, simples, beta)?;
        let expected = expected_highest(spec);
        if rs.highest_root != expected {
            return Err(Error::Misuse(format!(
                "{spec}: highest root {} differs from {}",
                rs.highest_root, expected
            )));
        }
        Ok(rs)
    }

    /// Root data generated by an arbitrary simple system with one marked
    /// noncompact simple root.
    pub fn from_simple_roots(
        spec: AlgebraSpec,
        simple_roots: Vec<RootVector>,
        beta_index: usize,
    ) -> Result<RootSystem> {
        let r = simple_roots.len();
        if r == 0 || beta_index >= r {
            return Err(Error::Misuse("empty simple system or bad β index".into()));
        }
        let dim = simple_roots[0].dim();
        let (positive, coeffs) = close_positive(&simple_roots);
        let height = |v: &RootVector| coeffs[v].iter().sum::<i64>();
        let noncompact: Vec<RootVector> = positive
            .iter()
            .filter(|a| coeffs[*a][beta_index] > 0)
            .cloned()
            .collect();
        let compact: Vec<RootVector> = positive
            .iter()
            .filter(|a| coeffs[*a][beta_index] == 0)
            .cloned()
            .collect();
        let max_h = positive.iter().map(height).max().unwrap_or(0);
        let tops: Vec<&RootVector> = positive.iter().filter(|a| height(a) == max_h).collect();
        if tops.len() != 1 {
            return Err(Error::Misuse("simple system is not irreducible".into()));
        }
        let highest = tops[0].clone();
        if coeffs[&highest][beta_index] != 1 {
            return Err(Error::Misuse("marked root is not a hermitian node".into()));
        }
        let mut half_sum = RootVector::zeros(dim);
        for a in &positive {
            half_sum = &half_sum + a;
        }
        let half_sum = half_sum.scale(q(1, 2));
        let compact_simples: Vec<RootVector> = simple_roots
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != beta_index)
            .map(|(_, a)| a.clone())
            .collect();
        let epsilon = solve_in_span(&simple_roots, &compact_simples, &highest, int(1))?;
        Ok(RootSystem {
            spec,
            dim,
            noncompact_simple: simple_roots[beta_index].clone(),
            simple_roots,
            beta_index,
            compact_simples,
            positive_roots: positive,
            compact_positive: compact,
            noncompact_positive: noncompact,
            highest_root: highest,
            half_sum,
            epsilon,
            coeffs,
        })
    }

    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    /// Coefficients of a positive root in the simple-root basis.
    pub fn coefficients(&self, alpha: &RootVector) -> Option<&[i64]> {
        self.coeffs.get(alpha).map(Vec::as_slice)
    }

    pub fn height(&self, alpha: &RootVector) -> Option<i64> {
        self.coefficients(alpha).map(|c| c.iter().sum())
    }

    pub fn is_positive_root(&self, v: &RootVector) -> bool {
        self.coeffs.contains_key(v)
    }

    pub fn is_root(&self, v: &RootVector) -> bool {
        self.is_positive_root(v) || self.is_positive_root(&-v)
    }

    pub fn is_noncompact(&self, v: &RootVector) -> bool {
        let pos = if self.is_positive_root(v) {
            v.clone()
        } else {
            -v
        };
        self.coeffs
            .get(&pos)
            .is_some_and(|c| c[self.beta_index] != 0)
    }

    pub fn is_compact_root(&self, v: &RootVector) -> bool {
        self.is_root(v) && !self.is_noncompact(v)
    }

    /// All roots, positive then negative.
    pub fn all_roots(&self) -> Vec<RootVector> {
        let mut out = self.positive_roots.clone();
        out.extend(self.positive_roots.iter().map(|a| -a));
        out
    }

    /// All compact roots, positive then negative.
    pub fn compact_roots(&self) -> Vec<RootVector> {
        let mut out = self.compact_positive.clone();
        out.extend(self.compact_positive.iter().map(|a| -a));
        out
    }

    /// `⟨R, γ_r⟩`.
    pub fn rho_gamma(&self) -> Rational {
        pair(&self.half_sum, &self.highest_root)
    }

    /// Decomposes `Λ = Λ₀ + λε = Π₀ + zε`.
    pub fn decompose(&self, weight: &RootVector) -> Result<WeightDecomposition> {
        if weight.dim() != self.dim {
            return Err(Error::InvalidWeight(format!(
                "weight has {} coordinates, {} expects {}",
                weight.dim(),
                self.spec,
                self.dim
            )));
        }
        let lambda = pair(weight, &self.highest_root);
        let lambda0 = weight - &self.epsilon.scale(lambda);
        let z = lambda + self.rho_gamma();
        let pi0 = weight - &self.epsilon.scale(z);
        let labels: Vec<Rational> = self
            .compact_simples
            .iter()
            .map(|mu| pair(&lambda0, mu))
            .collect();
        let dominant_integral = labels.iter().all(is_nonneg_integer);
        Ok(WeightDecomposition {
            lambda0,
            lambda,
            pi0,
            z,
            labels,
            dominant_integral,
        })
    }

    /// The weight `Λ₀ + λε` where `Λ₀` lies in the root span, has the given
    /// pairings with the compact simple roots and is orthogonal to `γ_r`.
    pub fn weight_from_labels(&self, labels: &[Rational], lambda: Rational) -> Result<RootVector> {
        if labels.len() != self.compact_simples.len() {
            return Err(Error::InvalidWeight(format!(
                "{} takes {} compact labels, got {}",
                self.spec,
                self.compact_simples.len(),
                labels.len()
            )));
        }
        let mut constraints = self.compact_simples.clone();
        constraints.push(self.highest_root.clone());
        let mut rhs = labels.to_vec();
        rhs.push(Rational::zero());
        let lambda0 = solve_pairings(&self.simple_roots, &constraints, &rhs)?;
        Ok(&lambda0 + &self.epsilon.scale(lambda))
    }

    /// Closes `generators ∪ −generators` under reflections and returns the
    /// simple component containing `γ_r` as a hermitian root system of its own.
    pub fn subsystem(&self, generators: &[RootVector]) -> Result<Subsystem> {
        for g in generators {
            if !self.is_root(g) {
                return Err(Error::Misuse(format!("{g} is not a root of {}", self.spec)));
            }
        }
        let mut set: BTreeSet<RootVector> = BTreeSet::new();
        for g in generators {
            set.insert(g.clone());
            set.insert(-g);
        }
        let mut queue: VecDeque<RootVector> = set.iter().cloned().collect();
        while let Some(a) = queue.pop_front() {
            let current: Vec<RootVector> = set.iter().cloned().collect();
            for b in current {
                for (x, y) in [(&a, &b), (&b, &a)] {
                    let refl = x - &y.scale(pair(x, y));
                    if !set.contains(&refl) {
                        set.insert(refl.clone());
                        queue.push_back(refl);
                    }
                }
            }
        }
        if !set.contains(&self.highest_root) {
            return Err(Error::Misuse("γ_r is not in the generated system".into()));
        }
        // connected component of γ_r under non-orthogonality
        let mut comp: BTreeSet<RootVector> = BTreeSet::new();
        let mut queue = VecDeque::from([self.highest_root.clone()]);
        comp.insert(self.highest_root.clone());
        while let Some(a) = queue.pop_front() {
            for b in &set {
                if !comp.contains(b) && !a.dot(b).is_zero() {
                    comp.insert(b.clone());
                    queue.push_back(b.clone());
                }
            }
        }
        let positive: Vec<RootVector> = comp
            .iter()
            .filter(|a| self.is_positive_root(a))
            .cloned()
            .collect();
        let pos_set: HashSet<&RootVector> = positive.iter().collect();
        let simples: Vec<RootVector> = positive
            .iter()
            .filter(|a| {
                !positive.iter().any(|b| {
                    let c = *a - b;
                    pos_set.contains(&c)
                })
            })
            .cloned()
            .collect();
        let beta_index = simples
            .iter()
            .position(|a| self.is_noncompact(a))
            .ok_or_else(|| Error::Misuse("component has no noncompact simple root".into()))?;
        let spec = classify(&simples, beta_index)?;
        let system = RootSystem::from_simple_roots(spec, simples, beta_index)?;
        if system.positive_roots.len() != positive.len() {
            return Err(Error::Misuse("subsystem closure mismatch".into()));
        }
        let dynkin = dynkin_label(&system.simple_roots)?;
        Ok(Subsystem {
            roots: comp.into_iter().collect(),
            system,
            dynkin,
        })
    }
}

/// A simple component of a reflection-closed set of roots.
#[derive(Clone, Debug)]
pub struct Subsystem {
    /// Every root of the component, positive and negative.
    pub roots: Vec<RootVector>,
    /// Its own hermitian root data (positivity inherited from the ambient).
    pub system: RootSystem,
    /// Cartan type such as `A3` or `C2`.
    pub dynkin: String,
}

impl Subsystem {
    pub fn spec(&self) -> AlgebraSpec {
        self.system.spec
    }

    pub fn contains(&self, a: &RootVector) -> bool {
        self.roots.binary_search(a).is_ok()
    }
}

/// Breadth-first closure of the positive roots from a simple system.
fn close_positive(simples: &[RootVector]) -> (Vec<RootVector>, HashMap<RootVector, Vec<i64>>) {
    let r = simples.len();
    let mut coeffs: HashMap<RootVector, Vec<i64>> = HashMap::new();
    let mut by_coeff: HashSet<Vec<i64>> = HashSet::new();
    let mut frontier: Vec<(RootVector, Vec<i64>)> = Vec::new();
    for (i, s) in simples.iter().enumerate() {
        let mut c = vec![0i64; r];
        c[i] = 1;
        coeffs.insert(s.clone(), c.clone());
        by_coeff.insert(c.clone());
        frontier.push((s.clone(), c));
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (v, c) in &frontier {
            for (i, s) in simples.iter().enumerate() {
                let mut p = 0i64;
                loop {
                    let mut down = c.clone();
                    down[i] -= p + 1;
                    if down[i] < 0 || !by_coeff.contains(&down) {
                        break;
                    }
                    p += 1;
                }
                let qv = int(p as i128) - pair(v, s);
                if qv.is_positive() {
                    let mut up = c.clone();
                    up[i] += 1;
                    if by_coeff.insert(up.clone()) {
                        let w = v + s;
                        coeffs.insert(w.clone(), up.clone());
                        next.push((w, up));
                    }
                }
            }
        }
        frontier = next;
    }
    let mut positive: Vec<RootVector> = coeffs.keys().cloned().collect();
    positive.sort_by(|a, b| {
        let ha: i64 = coeffs[a].iter().sum();
        let hb: i64 = coeffs[b].iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    (positive, coeffs)
}

/// Finds `x` in the span of `basis` with `⟨x, c_k⟩ = rhs_k`.
fn solve_pairings(
    basis: &[RootVector],
    constraints: &[RootVector],
    rhs: &[Rational],
) -> Result<RootVector> {
    let a: Matrix = constraints
        .iter()
        .map(|c| {
            basis
                .iter()
                .map(|b| int(2) * b.dot(c) / c.norm2())
                .collect()
        })
        .collect();
    let x = linalg::solve(&a, rhs)
        .ok_or_else(|| Error::Misuse("inconsistent pairing constraints".into()))?;
    let mut v = RootVector::zeros(basis[0].dim());
    for (coef, b) in x.iter().zip(basis) {
        v = &v + &b.scale(*coef);
    }
    Ok(v)
}

fn solve_in_span(
    basis: &[RootVector],
    compact: &[RootVector],
    top: &RootVector,
    top_value: Rational,
) -> Result<RootVector> {
    let mut constraints = compact.to_vec();
    constraints.push(top.clone());
    let mut rhs = vec![Rational::zero(); compact.len()];
    rhs.push(top_value);
    solve_pairings(basis, &constraints, &rhs)
}

// ---------------------------------------------------------------------------
// Classification of simple systems

struct Dynkin {
    adj: Vec<Vec<usize>>,
    long: Vec<bool>,
    double: Option<(usize, usize)>,
}

fn dynkin(simples: &[RootVector]) -> Result<Dynkin> {
    let r = simples.len();
    let mut adj = vec![Vec::new(); r];
    let mut double = None;
    let max_len = simples.iter().map(RootVector::norm2).max().unwrap();
    for i in 0..r {
        for j in i + 1..r {
            let a = pair(&simples[i], &simples[j]);
            let b = pair(&simples[j], &simples[i]);
            let bonds = a * b;
            if bonds.is_zero() {
                continue;
            }
            adj[i].push(j);
            adj[j].push(i);
            if bonds == int(2) {
                if double.is_some() {
                    return Err(Error::Misuse("more than one double bond".into()));
                }
                double = Some((i, j));
            } else if bonds != int(1) {
                return Err(Error::Misuse("not a hermitian Dynkin diagram".into()));
            }
        }
    }
    let edges: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
    let mut seen = vec![false; r];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for &j in &adj[i] {
            if !seen[j] {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    if edges + 1 != r || seen.iter().any(|s| !s) {
        return Err(Error::Misuse(
            "Dynkin diagram is not a connected tree".into(),
        ));
    }
    let long = simples.iter().map(|s| s.norm2() == max_len).collect();
    Ok(Dynkin { adj, long, double })
}

/// Walks a path diagram from an end, returning node order.
fn path_order(adj: &[Vec<usize>]) -> Vec<usize> {
    let start = (0..adj.len()).find(|&i| adj[i].len() <= 1).unwrap_or(0);
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = adj[cur].iter().find(|&&n| n != prev) {
        order.push(next);
        prev = cur;
        cur = next;
    }
    order
}

/// Arms hanging off a branch node: for each neighbour, the nodes in order
/// moving away from the branch.
fn arms(adj: &[Vec<usize>], branch: usize) -> Vec<Vec<usize>> {
    adj[branch]
        .iter()
        .map(|&first| {
            let mut arm = vec![first];
            let mut prev = branch;
            let mut cur = first;
            while let Some(&next) = adj[cur].iter().find(|&&n| n != prev) {
                arm.push(next);
                prev = cur;
                cur = next;
            }
            arm
        })
        .collect()
}

/// Cartan type label of a simple system, e.g. `B3`.
pub fn dynkin_label(simples: &[RootVector]) -> Result<String> {
    let r = simples.len();
    let d = dynkin(simples)?;
    if d.double.is_some() {
        let shorts = d.long.iter().filter(|l| !**l).count();
        return Ok(if r == 2 || shorts != 1 {
            format!("C{r}")
        } else {
            format!("B{r}")
        });
    }
    match d.adj.iter().position(|a| a.len() == 3) {
        None => Ok(format!("A{r}")),
        Some(b) => {
            let mut lens: Vec<usize> = arms(&d.adj, b).iter().map(Vec::len).collect();
            lens.sort_unstable();
            Ok(match lens.as_slice() {
                [1, 1, _] => format!("D{r}"),
                [1, 2, 2] => "E6".into(),
                [1, 2, 3] => "E7".into(),
                _ => format!("E{r}"),
            })
        }
    }
}

/// Hermitian real form determined by a simple system and its noncompact
/// node, in canonical form.
pub fn classify(simples: &[RootVector], beta: usize) -> Result<AlgebraSpec> {
    let r = simples.len();
    let not_hermitian = || Error::Misuse("marked node does not give a hermitian real form".into());
    if r == 1 {
        return Ok(AlgebraSpec::Su(1, 1));
    }
    let d = dynkin(simples)?;
    let r32 = r as u32;
    if d.double.is_some() {
        let order = path_order(&d.adj);
        let ends = [order[0], order[r - 1]];
        if !ends.contains(&beta) || !d.long[beta] {
            return Err(not_hermitian());
        }
        let shorts = d.long.iter().filter(|l| !**l).count();
        let spec = if r == 2 || shorts != 1 {
            AlgebraSpec::Sp(r32)
        } else {
            AlgebraSpec::SoOdd(r32)
        };
        return Ok(spec.canonical());
    }
    match d.adj.iter().position(|a| a.len() == 3) {
        None => {
            let order = path_order(&d.adj);
            let k = order.iter().position(|&i| i == beta).unwrap() as u32 + 1;
            Ok(AlgebraSpec::Su(k, r32 + 1 - k).canonical())
        }
        Some(b) => {
            let arms = arms(&d.adj, b);
            let mut lens: Vec<usize> = arms.iter().map(Vec::len).collect();
            lens.sort_unstable();
            let arm_of = arms.iter().find(|a| a.last() == Some(&beta));
            let Some(arm) = arm_of else {
                return Err(not_hermitian());
            };
            match lens.as_slice() {
                [1, 1, _] => {
                    if r == 4 || arm.len() > 1 {
                        Ok(AlgebraSpec::SoEven(r32).canonical())
                    } else {
                        Ok(AlgebraSpec::SoStar(r32).canonical())
                    }
                }
                [1, 2, 2] if arm.len() == 2 => Ok(AlgebraSpec::E6),
                [1, 2, 3] if arm.len() == 3 => Ok(AlgebraSpec::E7),
                _ => Err(not_hermitian()),
            }
        }
    }
}
