//! The diagram of noncompact positive roots and the last place of unitarity.
//!
//! Nodes are the noncompact positive roots; an arrow `α → α + μ` is drawn for
//! every compact simple root `μ` keeping the sum noncompact positive. Starting
//! at `β` this reaches every node, and the height `H_α` counts how many
//! compact simple roots were added plus one.

use std::collections::{BTreeSet, HashMap, VecDeque};

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::rational::{int, q, serde_rational, Rational};
use crate::rootsys::{pair, RootSystem, RootVector};
use crate::{Error, Result};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    /// Index into `RootSystem::compact_simples`.
    pub label: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct JakobsenDiagram {
    /// Noncompact positive roots in breadth-first order from `β`.
    pub nodes: Vec<RootVector>,
    pub edges: Vec<Edge>,
    pub heights: Vec<u32>,
    #[serde(skip)]
    above: Vec<Vec<bool>>,
}

impl JakobsenDiagram {
    pub fn index_of(&self, a: &RootVector) -> Option<usize> {
        self.nodes.iter().position(|n| n == a)
    }

    pub fn height(&self, a: &RootVector) -> Option<u32> {
        self.index_of(a).map(|i| self.heights[i])
    }

    /// `a ≤ b` in the diagram order.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.above[a][b]
    }

    pub fn out_edges(&self, i: usize) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(move |e| e.from == i)
    }

    pub fn in_edges(&self, i: usize) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(move |e| e.to == i)
    }

    /// Nodes grouped by height, lowest first.
    pub fn layers(&self) -> Vec<Vec<usize>> {
        let top = self.heights.iter().copied().max().unwrap_or(0) as usize;
        let mut out = vec![Vec::new(); top];
        for (i, &h) in self.heights.iter().enumerate() {
            out[h as usize - 1].push(i);
        }
        out
    }

    /// Nodes layer by layer, then the edges labeled by compact simple root.
    pub fn render(&self, rs: &RootSystem) -> String {
        let mut s = format!("{} diagram, {} nodes\n", rs.spec, self.nodes.len());
        for (k, mu) in rs.compact_simples.iter().enumerate() {
            s.push_str(&format!("  μ{} = {mu}\n", k + 1));
        }
        for (h, layer) in self.layers().iter().enumerate() {
            let names: Vec<String> = layer.iter().map(|&i| self.nodes[i].to_string()).collect();
            s.push_str(&format!("height {}: {}\n", h + 1, names.join("  ")));
        }
        s.push_str("edges:\n");
        for e in &self.edges {
            s.push_str(&format!(
                "  {} --μ{}--> {}\n",
                self.nodes[e.from],
                e.label + 1,
                self.nodes[e.to]
            ));
        }
        s
    }

    /// Forward cone `{α ≥ α0}` and backward cone `{α ≤ α0}`.
    pub fn cones(&self, alpha0: &RootVector) -> Result<(Vec<RootVector>, Vec<RootVector>)> {
        let i = self
            .index_of(alpha0)
            .ok_or_else(|| Error::Misuse(format!("{alpha0} is not a diagram node")))?;
        let fwd = (0..self.nodes.len())
            .filter(|&j| self.leq(i, j))
            .map(|j| self.nodes[j].clone());
        let bwd = (0..self.nodes.len())
            .filter(|&j| self.leq(j, i))
            .map(|j| self.nodes[j].clone());
        Ok((fwd.collect(), bwd.collect()))
    }
}

pub fn diagram(rs: &RootSystem) -> JakobsenDiagram {
    let mut nodes = vec![rs.noncompact_simple.clone()];
    let mut index: HashMap<RootVector, usize> = HashMap::from([(nodes[0].clone(), 0)]);
    let mut heights = vec![1u32];
    let mut edges = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for (label, mu) in rs.compact_simples.iter().enumerate() {
            let next = &nodes[i] + mu;
            if !rs.is_positive_root(&next) {
                continue;
            }
            let j = match index.get(&next) {
                Some(&j) => j,
                None => {
                    let j = nodes.len();
                    index.insert(next.clone(), j);
                    nodes.push(next);
                    heights.push(heights[i] + 1);
                    queue.push_back(j);
                    j
                }
            };
            edges.push(Edge {
                from: i,
                to: j,
                label,
            });
        }
    }
    let n = nodes.len();
    let mut above = vec![vec![false; n]; n];
    // nodes are in BFS order so edges always point to later indices
    for i in (0..n).rev() {
        above[i][i] = true;
        for e in edges.iter().filter(|e| e.from == i) {
            let row = above[e.to].clone();
            for (k, r) in row.into_iter().enumerate() {
                above[i][k] |= r;
            }
        }
    }
    JakobsenDiagram {
        nodes,
        edges,
        heights,
        above,
    }
}

/// Harish-Chandra's maximal collection of mutually orthogonal noncompact roots.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SplitRank {
    pub t: usize,
    pub gammas: Vec<RootVector>,
}

/// `γ_1 = β`, then repeatedly the lowest noncompact positive root orthogonal
/// to all previous ones. Among roots of equal height the lexicographically
/// smallest coordinate vector wins.
pub fn split_rank(rs: &RootSystem) -> SplitRank {
    let mut gammas = vec![rs.noncompact_simple.clone()];
    loop {
        let next = rs
            .noncompact_positive
            .iter()
            .filter(|a| gammas.iter().all(|g| a.dot(g).is_zero()))
            .min_by(|a, b| rs.height(a).cmp(&rs.height(b)).then_with(|| a.cmp(b)));
        match next {
            Some(a) => gammas.push(a.clone()),
            None => break,
        }
    }
    SplitRank {
        t: gammas.len(),
        gammas,
    }
}

/// `λ_s = −½·c₂`, where `c₂` counts compact positive roots projecting onto
/// the span of the orthogonal collection as `½(γ₂ − γ₁)`.
pub fn lambda_s_derived(rs: &RootSystem) -> Result<Rational> {
    let sr = split_rank(rs);
    if sr.t < 2 {
        return Err(Error::Misuse(format!(
            "{}: split rank 1 leaves λ_s undefined",
            rs.spec
        )));
    }
    let target = (&sr.gammas[1] - &sr.gammas[0]).scale(q(1, 2));
    let c2 = rs
        .compact_positive
        .iter()
        .filter(|mu| {
            let mut proj = RootVector::zeros(rs.dim);
            for g in &sr.gammas {
                proj = &proj + &mu.project_on(g);
            }
            proj == target
        })
        .count();
    Ok(q(-(c2 as i128), 2))
}

/// Outcome of the last-place search on `Λ₀ + λε`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionWitness {
    pub alpha0: RootVector,
    #[serde(with = "serde_rational")]
    pub lambda0: Rational,
    pub candidates: Vec<Candidate>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidate {
    pub alpha: RootVector,
    #[serde(with = "serde_rational")]
    pub lambda: Rational,
}

fn check_lambda0(rs: &RootSystem, lambda0: &RootVector) -> Result<()> {
    if lambda0.dim() != rs.dim {
        return Err(Error::InvalidWeight(format!(
            "expected {} coordinates",
            rs.dim
        )));
    }
    if !pair(lambda0, &rs.highest_root).is_zero() {
        return Err(Error::InvalidWeight("Λ₀ must be orthogonal to γ_r".into()));
    }
    for mu in &rs.compact_simples {
        let v = pair(lambda0, mu);
        if !(v.is_integer() && !v.is_negative()) {
            return Err(Error::InvalidWeight(format!(
                "Λ₀ is not dominant integral on the compact roots: ⟨Λ₀,{mu}⟩ = {v}"
            )));
        }
    }
    Ok(())
}

/// The last place of unitarity `λ₀` and its witness `α₀`.
///
/// A noncompact root `α` is a candidate when, for every compact simple `μ`
/// with `α − μ` noncompact positive, `⟨Λ₀, μ⟩ ≥ max(1, ⟨α, μ⟩)`; that is when
/// `Λ₀ − α` can still be a highest weight for the compact part. Each
/// candidate yields the `λ_α` solving `⟨Λ₀ + λ_α ε + R, α⟩ = 1`.
pub fn last_place(rs: &RootSystem, lambda0: &RootVector) -> Result<ReductionWitness> {
    check_lambda0(rs, lambda0)?;
    let mut candidates = Vec::new();
    for alpha in &rs.noncompact_positive {
        let ok = rs.compact_simples.iter().all(|mu| {
            let below = alpha - mu;
            if !rs.is_positive_root(&below) || !rs.is_noncompact(&below) {
                return true;
            }
            let need = pair(alpha, mu).max(int(1));
            pair(lambda0, mu) >= need
        });
        if !ok {
            continue;
        }
        let lam = (int(1) - pair(&(lambda0 + &rs.half_sum), alpha)) / pair(&rs.epsilon, alpha);
        candidates.push(Candidate {
            alpha: alpha.clone(),
            lambda: lam,
        });
    }
    let best = candidates
        .iter()
        .min_by(|a, b| a.lambda.cmp(&b.lambda))
        .cloned()
        .ok_or_else(|| Error::Misuse("no candidate roots".into()))?;
    Ok(ReductionWitness {
        alpha0: best.alpha,
        lambda0: best.lambda,
        candidates,
    })
}

/// Highest weight `Λ − α₀` of the first-order submodule at `λ = λ₀`.
pub fn missing_weight(rs: &RootSystem, lambda0: &RootVector, w: &ReductionWitness) -> RootVector {
    &(lambda0 + &rs.epsilon.scale(w.lambda0)) - &w.alpha0
}

/// The node set as an ordered set, for comparisons.
pub fn node_set(d: &JakobsenDiagram) -> BTreeSet<RootVector> {
    d.nodes.iter().cloned().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::AlgebraSpec;

    #[test]
    fn su22_diagram() {
        let rs = RootSystem::build(AlgebraSpec::Su(2, 2)).unwrap();
        let d = diagram(&rs);
        let h = |v: &[i128]| d.height(&RootVector::from_ints(v)).unwrap();
        assert_eq!(h(&[0, 1, -1, 0]), 1);
        assert_eq!(h(&[0, 1, 0, -1]), 2);
        assert_eq!(h(&[1, 0, -1, 0]), 2);
        assert_eq!(h(&[1, 0, 0, -1]), 3);
        let (fwd, _) = d.cones(&RootVector::from_ints(&[0, 1, 0, -1])).unwrap();
        assert_eq!(fwd.len(), 2);
        let text = d.render(&rs);
        assert!(text.contains("height 2: "));
        assert_eq!(text.matches("--μ").count(), d.edges.len());
    }

    #[test]
    fn so32_chain() {
        let rs = RootSystem::build(AlgebraSpec::SoOdd(2)).unwrap();
        let d = diagram(&rs);
        assert_eq!(
            d.nodes,
            vec![
                RootVector::from_ints(&[1, -1]),
                RootVector::from_ints(&[1, 0]),
                RootVector::from_ints(&[1, 1])
            ]
        );
        assert_eq!(d.heights, vec![1, 2, 3]);
    }

    #[test]
    fn su22_case_three() {
        let rs = RootSystem::build(AlgebraSpec::Su(2, 2)).unwrap();
        let l0 = rs.weight_from_labels(&[int(2), int(1)], int(0)).unwrap();
        let w = last_place(&rs, &l0).unwrap();
        assert_eq!(w.lambda0, int(-2));
        assert_eq!(w.alpha0, rs.highest_root);
    }

    #[test]
    fn rejects_non_dominant() {
        let rs = RootSystem::build(AlgebraSpec::Su(2, 2)).unwrap();
        let l0 = rs.weight_from_labels(&[int(-1), int(0)], int(0)).unwrap();
        assert!(last_place(&rs, &l0).is_err());
        let l0 = rs.weight_from_labels(&[q(1, 2), int(0)], int(0)).unwrap();
        assert!(last_place(&rs, &l0).is_err());
    }

    #[test]
    fn split_rank_small() {
        let rs = RootSystem::build(AlgebraSpec::Sp(3)).unwrap();
        let sr = split_rank(&rs);
        assert_eq!(
            sr.gammas,
            vec![
                RootVector::from_ints(&[0, 0, 2]),
                RootVector::from_ints(&[0, 2, 0]),
                RootVector::from_ints(&[2, 0, 0])
            ]
        );
    }
}
