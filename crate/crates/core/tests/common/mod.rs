//! Closed-form expectations used as independent oracles by the integration
//! tests. Nothing here calls the classification engines.
#![allow(dead_code)]
pub mod appendix;

use unitarity::rational::{int, q};
use unitarity::{AlgebraSpec, Rational};

/// Expected reduction data for one compact label vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expected {
    pub b: Rational,
    pub a: Rational,
    pub level: usize,
    /// Which closed form produced it, for failure messages.
    pub rule: &'static str,
}

/// `⟨R, γ_r⟩` per family.
pub fn rho_gamma(spec: AlgebraSpec) -> Rational {
    match spec {
        AlgebraSpec::Su(p, q) => int((p + q) as i128 - 1),
        AlgebraSpec::Sp(n) => int(n as i128),
        AlgebraSpec::SoStar(n) => int(2 * n as i128 - 3),
        AlgebraSpec::SoOdd(n) => int(2 * n as i128 - 2),
        AlgebraSpec::SoEven(n) => int(2 * n as i128 - 3),
        AlgebraSpec::E6 => int(11),
        AlgebraSpec::E7 => int(17),
    }
}

/// Split rank per family.
pub fn split_rank(spec: AlgebraSpec) -> usize {
    match spec {
        AlgebraSpec::Su(p, q) => p.min(q) as usize,
        AlgebraSpec::Sp(n) => n as usize,
        AlgebraSpec::SoStar(n) => (n / 2) as usize,
        AlgebraSpec::SoOdd(_) | AlgebraSpec::SoEven(_) | AlgebraSpec::E6 => 2,
        AlgebraSpec::E7 => 3,
    }
}

/// The printed `λ_s` column.
pub fn lambda_s_table(spec: AlgebraSpec) -> Rational {
    match spec {
        AlgebraSpec::Su(..) => int(-1),
        AlgebraSpec::Sp(_) => q(-1, 2),
        AlgebraSpec::SoStar(_) => int(-2),
        AlgebraSpec::SoOdd(n) => q(3 - 2 * n as i128, 2),
        AlgebraSpec::SoEven(n) => int(2 - n as i128),
        AlgebraSpec::E6 => int(-3),
        AlgebraSpec::E7 => int(-4),
    }
}

fn leading_zeros(ls: &[u32]) -> usize {
    ls.iter().take_while(|&&x| x == 0).count()
}

fn trailing_zeros(ls: &[u32]) -> usize {
    ls.iter().rev().take_while(|&&x| x == 0).count()
}

fn one_point(b: Rational, rule: &'static str) -> Expected {
    Expected {
        b,
        a: b,
        level: 1,
        rule,
    }
}

/// Labels are listed in the order of the compact simple roots: for `su(p,q)`
/// the `p−1` roots `e_k − e_{k+1}` of the first block then the `q−1` of the
/// second; for the orthogonal families `μ_2, …, μ_n`; for `e6` the Bourbaki
/// roots `α2..α6`; for `e7` `α1..α6`.
pub fn expected(spec: AlgebraSpec, ls: &[u32]) -> Expected {
    let c = -lambda_s_table(spec);
    if ls.iter().all(|&x| x == 0) {
        let b = rho_gamma(spec);
        let t = split_rank(spec);
        return Expected {
            b,
            a: b - int(t as i128 - 1) * c,
            level: t,
            rule: "Λ₀ = 0",
        };
    }
    match spec {
        AlgebraSpec::Su(p, _) => {
            let (first, second) = ls.split_at(p as usize - 1);
            let i = 1 + leading_zeros(first).min(first.len());
            let j = 1 + trailing_zeros(second).min(second.len());
            let (i, j) = (i as i128, j as i128);
            Expected {
                b: int(i + j - 1),
                a: int(i.max(j)),
                level: i.min(j) as usize,
                rule: "su: B = i+j−1",
            }
        }
        AlgebraSpec::Sp(n) => {
            let n = n as usize;
            let z = leading_zeros(ls);
            let i = z + 1;
            if i == n || ls[z] >= 2 {
                let i = i as i128;
                Expected {
                    b: int(i),
                    a: q(i + 1, 2),
                    level: i as usize,
                    rule: "sp case I",
                }
            } else {
                let j = 1 + leading_zeros(&ls[z + 1..]);
                let (i, j) = (i as i128, j as i128);
                Expected {
                    b: q(2 * i + j, 2),
                    a: q(i + j + 1, 2),
                    level: i as usize,
                    rule: "sp case II",
                }
            }
        }
        AlgebraSpec::SoStar(_) => {
            let i = leading_zeros(ls) + 1;
            if i == 1 {
                let j = 1 + leading_zeros(&ls[1..]) as i128;
                return one_point(int(j), "so*: first label nonzero");
            }
            let i = i as i128;
            let a = if i % 2 == 0 { i - 1 } else { i };
            Expected {
                b: int(2 * i - 3),
                a: int(a),
                level: (i / 2) as usize,
                rule: "so*: B = 2i−3",
            }
        }
        AlgebraSpec::SoOdd(n) => {
            let n = n as usize;
            let z = leading_zeros(ls);
            // ls[k] is the label on μ_{k+2}
            let i = z + 2;
            if i < n {
                one_point(int(i as i128 - 1), "so-odd case I")
            } else if ls[z] >= 2 {
                one_point(int(n as i128 - 1), "so-odd case I, last label")
            } else {
                one_point(q(2 * n as i128 - 1, 2), "so-odd case II")
            }
        }
        AlgebraSpec::SoEven(n) => {
            let n = n as i128;
            let z = leading_zeros(ls);
            let i = z as i128 + 2;
            if i <= n - 2 {
                one_point(int(i - 1), "so-even: B = i−1")
            } else if ls[ls.len() - 2] > 0 && ls[ls.len() - 1] > 0 {
                one_point(int(n - 2), "so-even: both spin labels")
            } else {
                one_point(int(n - 1), "so-even: B = n−1")
            }
        }
        AlgebraSpec::E6 => {
            let l = |k: usize| ls[k - 2];
            if l(2) > 0 {
                one_point(int(1), "e6 case I")
            } else if l(4) > 0 {
                one_point(int(2), "e6 case I")
            } else if l(3) > 0 && l(5) > 0 {
                one_point(int(3), "e6 case I")
            } else if l(5) > 0 {
                one_point(int(4), "e6 case I")
            } else if l(3) > 0 {
                one_point(int(if l(6) > 0 { 4 } else { 5 }), "e6 case I")
            } else {
                Expected {
                    b: int(7),
                    a: int(4),
                    level: 2,
                    rule: "e6 case II",
                }
            }
        }
        AlgebraSpec::E7 => {
            let l = |k: usize| ls[k - 1];
            if l(1) > 0 {
                one_point(int(1), "e7 case I")
            } else if l(3) > 0 {
                one_point(int(2), "e7 case I")
            } else if l(4) > 0 {
                one_point(int(3), "e7 case I")
            } else if l(2) > 0 && l(5) > 0 {
                one_point(int(4), "e7 case I")
            } else if l(5) > 0 {
                one_point(int(5), "e7 case I")
            } else if l(2) > 0 {
                one_point(int(if l(6) > 0 { 5 } else { 6 }), "e7 case I")
            } else {
                Expected {
                    b: int(9),
                    a: int(5),
                    level: 2,
                    rule: "e7 case II",
                }
            }
        }
    }
}

/// Families and ranks swept by the acceptance checks.
pub fn sweep_specs() -> Vec<AlgebraSpec> {
    let mut v = Vec::new();
    for total in 2..=7u32 {
        for p in 1..total {
            v.push(AlgebraSpec::Su(p, total - p));
        }
    }
    v.extend((2..=5).map(AlgebraSpec::Sp));
    v.extend((3..=6).map(AlgebraSpec::SoStar));
    v.extend((2..=5).map(AlgebraSpec::SoOdd));
    v.extend((3..=5).map(AlgebraSpec::SoEven));
    v.push(AlgebraSpec::E6);
    v.push(AlgebraSpec::E7);
    v
}

/// Every label vector with entries in `{0, 1, 2}`.
pub fn patterns(slots: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..slots {
        out = out
            .into_iter()
            .flat_map(|p: Vec<u32>| {
                (0..=2).map(move |v| {
                    let mut p = p.clone();
                    p.push(v);
                    p
                })
            })
            .collect();
    }
    out
}
