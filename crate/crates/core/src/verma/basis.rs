//! Generators of the classical series from explicit matrix realizations.
//!
//! `A` is realized as `gl_n` with `H_i = |i⟩⟨i|`, `B_n` in dimension `2n+1`,
//! `C_n` and `D_n` in dimension `2n`. Every bracket is computed as a matrix
//! commutator and re-expressed in the generator basis, so the structure
//! constants never depend on hand-copied tables.

use std::collections::HashMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::linalg;
use crate::rational::{int, Rational};
use crate::rootsys::{AlgebraSpec, RootSystem, RootVector};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Series::A => "A",
            Series::B => "B",
            Series::C => "C",
            Series::D => "D",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Kind {
    Lowering,
    Cartan,
    Raising,
}

/// A generator name: letter `E`, `F`, `G` or `H`, a bar for lowering
/// generators, and one or two one-based indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GenLabel {
    pub letter: char,
    pub bar: bool,
    pub i: usize,
    pub j: Option<usize>,
}

impl GenLabel {
    pub fn new(letter: char, bar: bool, i: usize, j: Option<usize>) -> Self {
        GenLabel { letter, bar, i, j }
    }

    fn indices(&self) -> String {
        match self.j {
            Some(j) if self.i < 10 && j < 10 => format!("{}{}", self.i, j),
            Some(j) => format!("{},{}", self.i, j),
            None => self.i.to_string(),
        }
    }

    /// ASCII form, `Gb12` for the lowering `Ḡ₁₂`.
    pub fn ascii(&self) -> String {
        format!(
            "{}{}{}",
            self.letter,
            if self.bar { "b" } else { "" },
            self.indices()
        )
    }
}

impl fmt::Display for GenLabel {
    /// Written with a combining macron, e.g. `Ḡ12`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}{}",
            self.letter,
            if self.bar { "\u{304}" } else { "" },
            self.indices()
        )
    }
}

type Dense = Vec<Vec<i64>>;

#[derive(Clone, Debug)]
pub struct Generator {
    pub label: GenLabel,
    pub kind: Kind,
    /// Eigenvalues of `ad H_1, …, ad H_n`.
    pub weight: Vec<i64>,
    pub matrix: Dense,
}

/// `[a, b]` as a sparse combination of generators, for every pair `(a, b)`.
pub type BracketTable = Vec<Vec<Vec<(usize, Rational)>>>;

/// Generators, PBW order and bracket table of one classical algebra.
#[derive(Clone, Debug)]
pub struct GeneratorBasis {
    pub series: Series,
    /// Number of Cartan generators `H_i` (the length of a weight).
    pub n: usize,
    pub gens: Vec<Generator>,
    /// Lowering generators in PBW order.
    pub lowering: Vec<usize>,
    /// `raising[k]` is the transpose of `lowering[k]`.
    pub raising: Vec<usize>,
    pub cartan: Vec<usize>,
    /// `bracket[a][b]` expresses `[X_a, X_b]` in the generator basis.
    pub bracket: BracketTable,
    /// Position of a generator in `lowering`, `cartan` or `raising`.
    pub slot: Vec<usize>,
    by_label: HashMap<GenLabel, usize>,
}

fn zero(dim: usize) -> Dense {
    vec![vec![0; dim]; dim]
}

/// `Σ c·|r⟩⟨c|` with one-based indices.
fn ket_bra(dim: usize, terms: &[(i64, usize, usize)]) -> Dense {
    let mut m = zero(dim);
    for &(c, r, col) in terms {
        m[r - 1][col - 1] += c;
    }
    m
}

fn mul(a: &Dense, b: &Dense) -> Dense {
    let n = a.len();
    let mut out = zero(n);
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

fn commutator(a: &Dense, b: &Dense) -> Dense {
    let ab = mul(a, b);
    let ba = mul(b, a);
    ab.iter()
        .zip(&ba)
        .map(|(x, y)| x.iter().zip(y).map(|(p, q)| p - q).collect())
        .collect()
}

fn transpose(a: &Dense) -> Dense {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| a[j][i]).collect()).collect()
}

fn is_zero(a: &Dense) -> bool {
    a.iter().all(|r| r.iter().all(|&x| x == 0))
}

/// Raw (label, kind, matrix) lists for each series, lowering in PBW order.
fn realization(series: Series, n: usize) -> (usize, Vec<(GenLabel, Kind, Dense)>) {
    let mut out = Vec::new();
    let lab = |l: char, bar: bool, i: usize, j: Option<usize>| GenLabel::new(l, bar, i, j);
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();
    match series {
        Series::A => {
            let dim = n;
            for &(i, j) in &pairs {
                out.push((
                    lab('G', true, i, Some(j)),
                    Kind::Lowering,
                    ket_bra(dim, &[(1, j, i)]),
                ));
            }
            for i in 1..=n {
                out.push((
                    lab('H', false, i, None),
                    Kind::Cartan,
                    ket_bra(dim, &[(1, i, i)]),
                ));
            }
            (dim, out)
        }
        Series::B | Series::D => {
            let dim = if series == Series::B {
                2 * n + 1
            } else {
                2 * n
            };
            let z = 2 * n + 1;
            if series == Series::B {
                for i in 1..=n {
                    let m = ket_bra(dim, &[(1, z, 2 * i - 1), (-1, 2 * i, z)]);
                    out.push((lab('E', true, i, None), Kind::Lowering, m));
                }
            }
            for &(i, j) in &pairs {
                let m = ket_bra(dim, &[(1, 2 * j, 2 * i - 1), (-1, 2 * i, 2 * j - 1)]);
                out.push((lab('F', true, i, Some(j)), Kind::Lowering, m));
            }
            for &(i, j) in &pairs {
                let m = ket_bra(dim, &[(1, 2 * j - 1, 2 * i - 1), (-1, 2 * i, 2 * j)]);
                out.push((lab('G', true, i, Some(j)), Kind::Lowering, m));
            }
            for i in 1..=n {
                let m = ket_bra(dim, &[(1, 2 * i - 1, 2 * i - 1), (-1, 2 * i, 2 * i)]);
                out.push((lab('H', false, i, None), Kind::Cartan, m));
            }
            (dim, out)
        }
        Series::C => {
            let dim = 2 * n;
            // blocks: upper-left rows/cols 1..n, lower-right n+1..2n
            for i in 1..=n {
                out.push((
                    lab('E', true, i, None),
                    Kind::Lowering,
                    ket_bra(dim, &[(1, n + i, i)]),
                ));
            }
            for &(i, k) in &pairs {
                let m = ket_bra(dim, &[(1, n + i, k), (1, n + k, i)]);
                out.push((lab('F', true, i, Some(k)), Kind::Lowering, m));
            }
            for &(i, k) in &pairs {
                let m = ket_bra(dim, &[(1, k, i), (-1, n + i, n + k)]);
                out.push((lab('G', true, i, Some(k)), Kind::Lowering, m));
            }
            for i in 1..=n {
                let m = ket_bra(dim, &[(1, i, i), (-1, n + i, n + i)]);
                out.push((lab('H', false, i, None), Kind::Cartan, m));
            }
            (dim, out)
        }
    }
}

impl GeneratorBasis {
    /// Generators of `A` (as `gl_n`), `B_n`, `C_n` or `D_n`. For `A` the
    /// parameter is the matrix size, so `A` with `n = 4` is `A_3`.
    pub fn new(series: Series, n: usize) -> Result<GeneratorBasis> {
        let min = match series {
            Series::A | Series::D => 2,
            Series::B | Series::C => 1,
        };
        if n < min || n > 12 {
            return Err(Error::InvalidSpec(format!(
                "series {series} with n = {n} is not supported"
            )));
        }
        let (_, raw) = realization(series, n);
        let mut gens: Vec<Generator> = Vec::new();
        let mut lowering = Vec::new();
        let mut cartan = Vec::new();
        for (label, kind, matrix) in raw {
            let idx = gens.len();
            match kind {
                Kind::Lowering => lowering.push(idx),
                Kind::Cartan => cartan.push(idx),
                Kind::Raising => unreachable!(),
            }
            gens.push(Generator {
                label,
                kind,
                weight: Vec::new(),
                matrix,
            });
        }
        let mut raising = Vec::new();
        for &l in &lowering {
            let g = &gens[l];
            let label = GenLabel {
                bar: false,
                ..g.label
            };
            let matrix = transpose(&g.matrix);
            raising.push(gens.len());
            gens.push(Generator {
                label,
                kind: Kind::Raising,
                weight: Vec::new(),
                matrix,
            });
        }
        // weights from the diagonal Cartan matrices
        let diag: Vec<Vec<i64>> = cartan
            .iter()
            .map(|&h| {
                (0..gens[h].matrix.len())
                    .map(|i| gens[h].matrix[i][i])
                    .collect()
            })
            .collect();
        for g in gens.iter_mut() {
            if g.kind == Kind::Cartan {
                g.weight = vec![0; n];
                continue;
            }
            let (r, c) = (0..g.matrix.len())
                .flat_map(|r| (0..g.matrix.len()).map(move |c| (r, c)))
                .find(|&(r, c)| g.matrix[r][c] != 0)
                .expect("nonzero generator");
            g.weight = diag.iter().map(|d| d[r] - d[c]).collect();
        }
        let mut slot = vec![0; gens.len()];
        for (p, &g) in lowering.iter().enumerate() {
            slot[g] = p;
        }
        for (p, &g) in cartan.iter().enumerate() {
            slot[g] = p;
        }
        for (p, &g) in raising.iter().enumerate() {
            slot[g] = p;
        }
        let by_label = gens.iter().enumerate().map(|(i, g)| (g.label, i)).collect();
        let mut gb = GeneratorBasis {
            series,
            n,
            gens,
            lowering,
            raising,
            cartan,
            bracket: Vec::new(),
            slot,
            by_label,
        };
        gb.bracket = gb.compute_brackets()?;
        Ok(gb)
    }

    /// The complexification carrying a hermitian real form, in the same
    /// coordinates as its `RootSystem`.
    pub fn for_algebra(spec: AlgebraSpec) -> Result<GeneratorBasis> {
        match spec {
            AlgebraSpec::Su(p, q) => GeneratorBasis::new(Series::A, (p + q) as usize),
            AlgebraSpec::Sp(n) => GeneratorBasis::new(Series::C, n as usize),
            AlgebraSpec::SoOdd(n) => GeneratorBasis::new(Series::B, n as usize),
            AlgebraSpec::SoStar(n) | AlgebraSpec::SoEven(n) => {
                GeneratorBasis::new(Series::D, n as usize)
            }
            AlgebraSpec::E6 | AlgebraSpec::E7 => Err(Error::InvalidSpec(format!(
                "no matrix realization for {spec}"
            ))),
        }
    }

    pub fn lookup(&self, label: &GenLabel) -> Option<usize> {
        self.by_label.get(label).copied()
    }

    pub fn label(&self, g: usize) -> GenLabel {
        self.gens[g].label
    }

    pub fn kind(&self, g: usize) -> Kind {
        self.gens[g].kind
    }

    pub fn weight(&self, g: usize) -> &[i64] {
        &self.gens[g].weight
    }

    /// Weight as a root vector; for `C` the coordinates are those of the
    /// root system (`Ē_i` has weight `−2e_i`).
    pub fn weight_vector(&self, g: usize) -> RootVector {
        RootVector(
            self.gens[g]
                .weight
                .iter()
                .map(|&w| int(w as i128))
                .collect(),
        )
    }

    /// The raising partner of a lowering generator and vice versa.
    pub fn partner(&self, g: usize) -> Option<usize> {
        match self.kind(g) {
            Kind::Lowering => Some(self.raising[self.slot[g]]),
            Kind::Raising => Some(self.lowering[self.slot[g]]),
            Kind::Cartan => None,
        }
    }

    pub fn bracket(&self, a: usize, b: usize) -> &[(usize, Rational)] {
        &self.bracket[a][b]
    }

    /// Re-expresses a matrix in the generator basis.
    fn decompose(&self, m: &Dense, weight: &[i64]) -> Result<Vec<(usize, Rational)>> {
        if is_zero(m) {
            return Ok(Vec::new());
        }
        let fail = || {
            Error::Misuse(format!(
                "{} realization is not closed under brackets",
                self.series
            ))
        };
        if weight.iter().all(|&w| w == 0) {
            let dim = m.len();
            let mut a: linalg::Matrix = Vec::new();
            let mut b = Vec::new();
            for r in 0..dim {
                for c in 0..dim {
                    a.push(
                        self.cartan
                            .iter()
                            .map(|&h| int(self.gens[h].matrix[r][c] as i128))
                            .collect(),
                    );
                    b.push(int(m[r][c] as i128));
                }
            }
            let x = linalg::solve(&a, &b).ok_or_else(fail)?;
            let check = linalg::mat_vec(&a, &x);
            if check != b {
                return Err(fail());
            }
            return Ok(self
                .cartan
                .iter()
                .zip(x)
                .filter(|(_, c)| !c.is_zero())
                .map(|(&h, c)| (h, c))
                .collect());
        }
        let g = self
            .gens
            .iter()
            .position(|g| g.kind != Kind::Cartan && g.weight == weight)
            .ok_or_else(fail)?;
        let gm = &self.gens[g].matrix;
        let (r, c) = (0..gm.len())
            .flat_map(|r| (0..gm.len()).map(move |c| (r, c)))
            .find(|&(r, c)| gm[r][c] != 0)
            .unwrap();
        let coef = Rational::new(m[r][c] as i128, gm[r][c] as i128);
        for r in 0..gm.len() {
            for c in 0..gm.len() {
                if Rational::from_integer(m[r][c] as i128) != coef * int(gm[r][c] as i128) {
                    return Err(fail());
                }
            }
        }
        Ok(vec![(g, coef)])
    }

    fn compute_brackets(&self) -> Result<BracketTable> {
        let k = self.gens.len();
        let mut table = vec![vec![Vec::new(); k]; k];
        for a in 0..k {
            for b in 0..k {
                let m = commutator(&self.gens[a].matrix, &self.gens[b].matrix);
                let w: Vec<i64> = self.gens[a]
                    .weight
                    .iter()
                    .zip(&self.gens[b].weight)
                    .map(|(x, y)| x + y)
                    .collect();
                table[a][b] = self.decompose(&m, &w)?;
            }
        }
        Ok(table)
    }

    /// Raising generator attached to a simple root (used by the extremal
    /// checks): those whose weight is not a sum of two positive weights.
    pub fn simple_raising(&self) -> Vec<usize> {
        let weights: Vec<&[i64]> = self.raising.iter().map(|&g| self.weight(g)).collect();
        self.raising
            .iter()
            .copied()
            .filter(|&g| {
                let w = self.weight(g);
                !weights.iter().any(|a| {
                    let rest: Vec<i64> = w.iter().zip(a.iter()).map(|(x, y)| x - y).collect();
                    weights.iter().any(|b| **b == rest[..])
                })
            })
            .collect()
    }
}

/// Signs of the antiautomorphism `η` on the lowering generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealForm {
    /// `+1` for compact, `−1` for noncompact, indexed like `lowering`.
    pub signs: Vec<i8>,
}

impl RealForm {
    /// Every generator compact (`η(E_{−α}) = E_α`): the compact real form.
    pub fn compact(gb: &GeneratorBasis) -> RealForm {
        RealForm {
            signs: vec![1; gb.lowering.len()],
        }
    }

    /// Signs read off a hermitian root system in the same coordinates.
    pub fn from_root_system(gb: &GeneratorBasis, rs: &RootSystem) -> Result<RealForm> {
        if rs.dim != gb.n {
            return Err(Error::Misuse(
                "root system and realization use different coordinates".into(),
            ));
        }
        let mut signs = Vec::new();
        for &l in &gb.lowering {
            let alpha = -gb.weight_vector(l);
            if !rs.is_positive_root(&alpha) {
                return Err(Error::Misuse(format!(
                    "{} has weight {} which is not a root",
                    gb.label(l),
                    -alpha
                )));
            }
            signs.push(if rs.is_noncompact(&alpha) { -1 } else { 1 });
        }
        Ok(RealForm { signs })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn jacobi(gb: &GeneratorBasis) {
        let k = gb.gens.len();
        let apply = |a: usize, v: &[(usize, Rational)]| -> HashMap<usize, Rational> {
            let mut out = HashMap::new();
            for &(b, c) in v {
                for &(d, e) in gb.bracket(a, b) {
                    *out.entry(d).or_insert_with(Rational::zero) += c * e;
                }
            }
            out
        };
        for x in 0..k {
            for y in 0..k {
                for z in 0..k {
                    let mut total: HashMap<usize, Rational> = HashMap::new();
                    for (a, b, c) in [(x, y, z), (y, z, x), (z, x, y)] {
                        for (g, v) in apply(a, gb.bracket(b, c)) {
                            *total.entry(g).or_insert_with(Rational::zero) += v;
                        }
                    }
                    assert!(total.values().all(Zero::is_zero), "Jacobi fails");
                }
            }
        }
    }

    #[test]
    fn brackets_antisymmetric_and_jacobi() {
        for (s, n) in [
            (Series::A, 3),
            (Series::B, 2),
            (Series::C, 2),
            (Series::D, 3),
        ] {
            let gb = GeneratorBasis::new(s, n).unwrap();
            for a in 0..gb.gens.len() {
                for b in 0..gb.gens.len() {
                    let ab: HashMap<_, _> = gb.bracket(a, b).iter().copied().collect();
                    let ba: HashMap<_, _> =
                        gb.bracket(b, a).iter().map(|&(g, c)| (g, -c)).collect();
                    assert_eq!(ab, ba);
                }
            }
            jacobi(&gb);
        }
    }

    #[test]
    fn weights_match_roots() {
        let c = GeneratorBasis::new(Series::C, 3).unwrap();
        let e3 = c.lookup(&GenLabel::new('E', true, 3, None)).unwrap();
        assert_eq!(c.weight(e3), &[0, 0, -2]);
        let b = GeneratorBasis::new(Series::B, 2).unwrap();
        let e1 = b.lookup(&GenLabel::new('E', true, 1, None)).unwrap();
        assert_eq!(b.weight(e1), &[-1, 0]);
        let f = b.lookup(&GenLabel::new('F', true, 1, Some(2))).unwrap();
        assert_eq!(b.weight(f), &[-1, -1]);
        let a = GeneratorBasis::new(Series::A, 3).unwrap();
        let g = a.lookup(&GenLabel::new('G', true, 1, Some(3))).unwrap();
        assert_eq!(a.weight(g), &[-1, 0, 1]);
    }

    #[test]
    fn real_forms() {
        let rs = RootSystem::build(AlgebraSpec::Su(2, 2)).unwrap();
        let gb = GeneratorBasis::for_algebra(rs.spec).unwrap();
        let rf = RealForm::from_root_system(&gb, &rs).unwrap();
        let nc = rf.signs.iter().filter(|&&s| s < 0).count();
        assert_eq!(nc, 4);
        let rs = RootSystem::build(AlgebraSpec::SoOdd(2)).unwrap();
        let gb = GeneratorBasis::for_algebra(rs.spec).unwrap();
        let rf = RealForm::from_root_system(&gb, &rs).unwrap();
        assert_eq!(rf.signs.iter().filter(|&&s| s < 0).count(), 3);
        assert!(GeneratorBasis::for_algebra(AlgebraSpec::E6).is_err());
    }

    #[test]
    fn simple_raising_counts() {
        for (s, n, want) in [
            (Series::A, 4, 3),
            (Series::B, 3, 3),
            (Series::C, 3, 3),
            (Series::D, 4, 4),
        ] {
            let gb = GeneratorBasis::new(s, n).unwrap();
            assert_eq!(gb.simple_raising().len(), want, "{s}{n}");
        }
    }
}
