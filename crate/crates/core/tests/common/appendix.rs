//! Hand transcriptions of the closed-form action of single generators on PBW
//! monomials `X̄ v`, one function per printed formula. A monomial is written
//! through its exponents `e_i`, `f_ij`, `g_ij` and `X̄(g_ij + 1, …)` is the
//! monomial with the listed exponents shifted.
#![allow(dead_code)]

use num_traits::Zero;
use unitarity::rational::{int, q};
use unitarity::verma::{GenLabel, GeneratorBasis, PbwMonomial, Series, UeaElement};
use unitarity::Rational;

pub type Shift = (char, usize, usize, i64);

/// Read-only view of one monomial and highest weight.
pub struct X<'a> {
    pub gb: &'a GeneratorBasis,
    pub lambda: &'a [Rational],
    pub m: &'a PbwMonomial,
}

fn lowering_slot(gb: &GeneratorBasis, letter: char, i: usize, j: usize) -> usize {
    let label = GenLabel::new(letter, true, i, if letter == 'E' { None } else { Some(j) });
    let g = gb
        .lookup(&label)
        .unwrap_or_else(|| panic!("no generator {}", label.ascii()));
    gb.slot[g]
}

impl X<'_> {
    pub fn n(&self) -> usize {
        self.gb.n
    }
    fn exp(&self, letter: char, i: usize, j: usize) -> Rational {
        int(self.m.0[lowering_slot(self.gb, letter, i, j)] as i128)
    }
    pub fn e(&self, i: usize) -> Rational {
        self.exp('E', i, 0)
    }
    pub fn f(&self, i: usize, j: usize) -> Rational {
        self.exp('F', i, j)
    }
    pub fn g(&self, i: usize, j: usize) -> Rational {
        self.exp('G', i, j)
    }
    pub fn l(&self, i: usize) -> Rational {
        self.lambda[i - 1]
    }
}

/// Accumulates the terms of one formula.
pub struct Out<'a> {
    x: &'a X<'a>,
    pub value: UeaElement,
    /// Terms that would need a negative exponent with a nonzero coefficient.
    pub invalid: usize,
}

impl<'a> Out<'a> {
    pub fn new(x: &'a X<'a>) -> Self {
        Out {
            x,
            value: UeaElement::zero(),
            invalid: 0,
        }
    }

    pub fn add(&mut self, c: Rational, shifts: &[Shift]) {
        if c.is_zero() {
            return;
        }
        let mut m = self.x.m.clone();
        for &(letter, i, j, d) in shifts {
            let s = lowering_slot(self.x.gb, letter, i, j);
            let v = m.0[s] as i64 + d;
            if v < 0 {
                self.invalid += 1;
                return;
            }
            m.0[s] = v as u32;
        }
        self.value.add_term(m, c);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reading {
    /// Transcribed as printed; expected to agree.
    Printed,
    /// Transcribed as printed; known to disagree.
    Misprinted,
    /// A repaired reading of a misprinted formula.
    Corrected,
}

/// One printed formula: which generator acts and how.
pub struct Formula {
    pub name: &'static str,
    pub reading: Reading,
    pub series: Series,
    /// The acting generators at a given rank; empty when the formula does
    /// not apply there.
    pub generator: fn(usize) -> Vec<GenLabel>,
    pub eval: fn(&X, &GenLabel, &mut Out),
}

fn h(i: usize) -> GenLabel {
    GenLabel::new('H', false, i, None)
}

fn raise(letter: char, i: usize, j: Option<usize>) -> GenLabel {
    GenLabel::new(letter, false, i, j)
}

fn lower(letter: char, i: usize, j: Option<usize>) -> GenLabel {
    GenLabel::new(letter, true, i, j)
}

fn all_h(n: usize) -> Vec<GenLabel> {
    (1..=n).map(h).collect()
}

fn simple_g(n: usize, bar: bool) -> Vec<GenLabel> {
    (1..n)
        .map(|l| GenLabel::new('G', bar, l, Some(l + 1)))
        .collect()
}

fn half() -> Rational {
    q(1, 2)
}

// ---- A (gl_n) ----

fn a_h(x: &X, gen: &GenLabel, o: &mut Out) {
    let i = gen.i;
    let mut c = x.l(i);
    for k in 1..i {
        c += x.g(k, i);
    }
    for k in i + 1..=x.n() {
        c -= x.g(i, k);
    }
    o.add(c, &[]);
}

fn a_gbar(x: &X, gen: &GenLabel, o: &mut Out) {
    let (i, j) = (gen.i, gen.j.unwrap());
    o.add(int(1), &[('G', i, j, 1)]);
    for k in 1..i {
        o.add(x.g(k, i), &[('G', k, i, -1), ('G', k, j, 1)]);
    }
}

fn a_g(x: &X, gen: &GenLabel, o: &mut Out) {
    let (i, j) = (gen.i, gen.j.unwrap());
    let n = x.n();
    for k in 1..i {
        o.add(x.g(k, j), &[('G', k, i, 1), ('G', k, j, -1)]);
    }
    let mut c = x.l(i) - x.l(j) + int(1);
    for k in j + 1..=n {
        c += x.g(j, k);
    }
    for k in i + 1..=n {
        c -= x.g(i, k);
    }
    o.add(x.g(i, j) * c, &[('G', i, j, -1)]);
    for k in j + 1..=n {
        o.add(-x.g(i, k), &[('G', i, k, -1), ('G', j, k, 1)]);
    }
}

// ---- B_n ----

fn b_h(x: &X, gen: &GenLabel, o: &mut Out) {
    let i = gen.i;
    let n = x.n();
    let mut c = x.l(i) - x.e(i);
    for k in i + 1..=n {
        c -= x.f(i, k) + x.g(i, k);
    }
    for l in 1..i {
        c -= x.f(l, i) - x.g(l, i);
    }
    o.add(c, &[]);
}

fn b_e(x: &X, _: &GenLabel, o: &mut Out) {
    let n = x.n();
    let en = x.e(n);
    let mut c = -x.l(n) + (en - int(1)) * half();
    for i in 1..n {
        c += x.e(i) - x.g(i, n);
    }
    o.add(-en * c, &[('E', n, 0, -1)]);
    for i in 1..n {
        o.add(
            en * (en - int(1)) * half() * x.e(i),
            &[('E', i, 0, -1), ('E', n, 0, -2), ('F', i, n, 1)],
        );
    }
    for i in 1..n.saturating_sub(1) {
        for j in i + 1..n {
            o.add(
                en * x.e(i) * x.e(j),
                &[
                    ('E', i, 0, -1),
                    ('E', j, 0, -1),
                    ('E', n, 0, -1),
                    ('F', i, j, 1),
                ],
            );
        }
    }
    for i in 2..n {
        for j in 1..i {
            o.add(
                -x.e(i) * x.f(j, n),
                &[('E', i, 0, -1), ('F', j, i, 1), ('F', j, n, -1)],
            );
        }
    }
    for i in 1..n.saturating_sub(1) {
        for j in i + 1..n {
            o.add(
                x.e(i) * x.f(j, n),
                &[('E', i, 0, -1), ('F', i, j, 1), ('F', j, n, -1)],
            );
        }
    }
    for i in 2..n {
        for l in 1..i {
            o.add(
                x.e(i) * x.g(l, i),
                &[('E', i, 0, -1), ('G', l, i, -1), ('G', l, n, 1)],
            );
        }
    }
    for j in 1..n {
        o.add(-x.f(j, n), &[('E', j, 0, 1), ('F', j, n, -1)]);
    }
    for i in 1..n {
        o.add(x.e(i), &[('E', i, 0, -1), ('G', i, n, 1)]);
    }
    for j in 1..n.saturating_sub(1) {
        for k in j + 1..n {
            o.add(
                x.f(j, n) * x.e(k),
                &[('E', k, 0, -1), ('F', j, k, 1), ('F', j, n, -1)],
            );
        }
    }
}

fn b_g(x: &X, gen: &GenLabel, o: &mut Out) {
    let (l, m) = (gen.i, gen.j.unwrap());
    let n = x.n();
    let mut c = x.l(l) - x.l(m) - (x.g(l, m) - int(1));
    for j in m + 1..=n {
        c += x.g(m, j) - x.g(l, j);
    }
    o.add(x.g(l, m) * c, &[('G', l, m, -1)]);
    o.add(-x.e(l), &[('E', l, 0, -1), ('E', m, 0, 1)]);
    o.add(
        x.e(l) * (x.e(l) - int(1)) * half(),
        &[('E', l, 0, -2), ('F', l, m, 1)],
    );
    for j in 1..l {
        o.add(-x.f(j, l), &[('F', j, l, -1), ('F', j, m, 1)]);
    }
    for k in m + 1..=n {
        o.add(-x.f(l, k), &[('F', l, k, -1), ('F', m, k, 1)]);
    }
    for j in m + 1..=n {
        o.add(-x.g(l, j), &[('G', l, j, -1), ('G', m, j, 1)]);
    }
    for i in 1..l {
        o.add(x.g(i, m), &[('G', i, l, 1), ('G', i, m, -1)]);
    }
}

fn b_ebar(x: &X, _: &GenLabel, o: &mut Out) {
    let n = x.n();
    o.add(int(1), &[('E', n, 0, 1)]);
    for j in 1..n {
        o.add(-x.e(j), &[('E', j, 0, -1), ('F', j, n, 1)]);
    }
}

fn b_gbar(x: &X, gen: &GenLabel, o: &mut Out) {
    let (l, m) = (gen.i, gen.j.unwrap());
    let n = x.n();
    o.add(-x.e(m), &[('E', l, 0, 1), ('E', m, 0, -1)]);
    o.add(
        x.e(m) * (x.e(m) - int(1)) * half(),
        &[('E', m, 0, -2), ('F', l, m, 1)],
    );
    for j in 1..l {
        o.add(-x.f(j, m), &[('F', j, l, 1), ('F', j, m, -1)]);
    }
    for k in m + 1..=n {
        o.add(-x.f(m, k), &[('F', l, k, 1), ('F', m, k, -1)]);
    }
    for i in 1..l {
        o.add(x.g(i, l), &[('G', i, l, -1), ('G', i, m, 1)]);
    }
    o.add(int(1), &[('G', l, m, 1)]);
}

// ---- C_n ----

fn c_h(x: &X, gen: &GenLabel, o: &mut Out) {
    let i = gen.i;
    let n = x.n();
    let mut c = x.l(i) - int(2) * x.e(i);
    for j in 1..i {
        c -= x.f(j, i) - x.g(j, i);
    }
    for j in i + 1..=n {
        c -= x.f(i, j) + x.g(i, j);
    }
    o.add(c, &[]);
}

fn c_e(x: &X, _: &GenLabel, o: &mut Out) {
    let n = x.n();
    let en = x.e(n);
    let mut c = -x.l(n) + (en - int(1));
    for j in 1..n {
        c += x.f(j, n) - x.g(j, n);
    }
    o.add(-en * c, &[('E', n, 0, -1)]);
    for i in 1..n {
        o.add(
            -x.f(i, n) * (x.f(i, n) - int(1)),
            &[('E', i, 0, 1), ('F', i, n, -2)],
        );
    }
    for i in 1..n.saturating_sub(1) {
        for k in i + 1..n {
            o.add(
                -x.f(i, n) * x.f(k, n),
                &[('F', i, k, 1), ('F', i, n, -1), ('F', k, n, -1)],
            );
        }
    }
    for i in 2..n {
        for k in 1..i {
            o.add(
                x.f(i, n) * x.g(k, i),
                &[('F', i, n, -1), ('G', k, i, -1), ('G', k, n, 1)],
            );
        }
    }
    for i in 1..n {
        o.add(x.f(i, n), &[('F', i, n, -1), ('G', i, n, 1)]);
    }
}

fn c_g(x: &X, gen: &GenLabel, o: &mut Out) {
    let (i, j) = (gen.i, gen.j.unwrap());
    let n = x.n();
    o.add(-x.e(i), &[('E', i, 0, -1), ('F', i, j, 1)]);
    o.add(int(-2) * x.f(i, j), &[('E', j, 0, 1), ('F', i, j, -1)]);
    for m in j + 1..=n {
        o.add(-x.f(i, m), &[('F', i, m, -1), ('F', j, m, 1)]);
    }
    for l in 1..i {
        o.add(-x.f(l, i), &[('F', l, i, -1), ('F', l, j, 1)]);
    }
    for m in j + 1..=n {
        o.add(-x.g(i, m), &[('G', i, m, -1), ('G', j, m, 1)]);
    }
    for l in 1..i {
        o.add(x.g(l, j), &[('G', l, i, 1), ('G', l, j, -1)]);
    }
    let mut c = x.l(i) - x.l(j) - (x.g(i, j) - int(1));
    for l in j + 1..=n {
        c += x.g(j, l) - x.g(i, l);
    }
    o.add(x.g(i, j) * c, &[('G', i, j, -1)]);
}

fn c_ebar(x: &X, _: &GenLabel, o: &mut Out) {
    o.add(int(1), &[('E', x.n(), 0, 1)]);
}

fn c_gbar(x: &X, gen: &GenLabel, o: &mut Out) {
    let (i, j) = (gen.i, gen.j.unwrap());
    let n = x.n();
    o.add(-x.e(j), &[('E', j, 0, -1), ('F', i, j, 1)]);
    for l in 1..i {
        o.add(-x.f(l, j), &[('F', l, i, 1), ('F', l, j, -1)]);
    }
    o.add(int(-2) * x.f(i, j), &[('E', i, 0, 1), ('F', i, j, -1)]);
    for m in j + 1..=n {
        o.add(-x.f(j, m), &[('F', i, m, 1), ('F', j, m, -1)]);
    }
    o.add(int(1), &[('G', i, j, 1)]);
    for k in 1..i {
        o.add(x.g(k, i), &[('G', k, i, -1), ('G', k, j, 1)]);
    }
}

/// The last printed term of `ρ(Ḡ_ij)`; `Ḡ_jl` already sits after `Ḡ_ij` in
/// PBW order, so no such term can arise.
fn c_gbar_printed(x: &X, gen: &GenLabel, o: &mut Out) {
    c_gbar(x, gen, o);
    let (i, j) = (gen.i, gen.j.unwrap());
    for l in j + 1..=x.n() {
        o.add(-x.g(j, l), &[('G', i, l, 1), ('G', j, l, -1)]);
    }
}

// ---- D_n ----

fn d_h(x: &X, gen: &GenLabel, o: &mut Out) {
    let i = gen.i;
    let n = x.n();
    let mut c = x.l(i);
    for k in i + 1..=n {
        c -= x.f(i, k) + x.g(i, k);
    }
    for l in 1..i {
        c -= x.f(l, i) - x.g(l, i);
    }
    o.add(c, &[]);
}

/// `ρ(F_{m,n})` with `m = n − 1`, as printed.
fn d_f_printed(x: &X, _: &GenLabel, o: &mut Out) {
    d_f_terms(x, o, false);
}

/// The same with repairs: the second term is dropped (its weight is
/// `e_k + e_n`, not `e_m + e_n`); the fourth term runs over every
/// `i < k < m` instead of only `k = m − 1` and gains its mirror image
/// `f_in f_km X̄(f_ik + 1, f_in − 1, f_km − 1)`; `g_im` is read as `f_im` in
/// the sixth term.
fn d_f(x: &X, _: &GenLabel, o: &mut Out) {
    d_f_terms(x, o, true);
}

fn d_f_terms(x: &X, o: &mut Out, corrected: bool) {
    let n = x.n();
    let m = n - 1;
    for i in 1..m {
        o.add(x.f(i, n), &[('F', i, n, -1), ('G', i, m, 1)]);
    }
    if !corrected {
        for i in 2..m {
            for k in 1..i {
                o.add(
                    x.f(i, n) * x.g(k, i) * (x.g(k, i) - int(1)),
                    &[('F', i, n, -1), ('G', k, i, -1)],
                );
            }
        }
    }
    for i in 2..m {
        for k in 1..i {
            o.add(
                x.f(i, n) * x.g(k, i),
                &[('F', i, n, -1), ('G', k, i, -1), ('G', k, m, 1)],
            );
        }
    }
    for i in 1..m.saturating_sub(1) {
        if !corrected {
            o.add(
                -x.f(i, m) * x.f(m - 1, n),
                &[('F', i, m - 1, 1), ('F', i, m, -1), ('F', m - 1, n, -1)],
            );
            continue;
        }
        for k in i + 1..m {
            o.add(
                -x.f(i, m) * x.f(k, n),
                &[('F', i, k, 1), ('F', i, m, -1), ('F', k, n, -1)],
            );
            o.add(
                x.f(i, n) * x.f(k, m),
                &[('F', i, k, 1), ('F', i, n, -1), ('F', k, m, -1)],
            );
        }
    }
    for i in 1..m {
        o.add(-x.f(i, m), &[('F', i, m, -1), ('G', i, n, 1)]);
    }
    for i in 2..m {
        for k in 1..i {
            let lead = if corrected { x.f(i, m) } else { x.g(i, m) };
            o.add(
                -lead * x.g(k, i),
                &[('F', i, m, -1), ('G', k, i, -1), ('G', k, n, 1)],
            );
        }
    }
    let fmn = x.f(m, n);
    let mut c = -x.l(m) - x.l(n) + (fmn - int(1));
    for k in 1..m {
        c -= x.g(k, m) + x.g(k, n);
    }
    o.add(-fmn * c, &[('F', m, n, -1)]);
    for i in 1..m {
        o.add(-x.f(i, m) * fmn, &[('F', m, n, -1)]);
        o.add(-x.f(i, n) * fmn, &[('F', m, n, -1)]);
    }
}

fn d_g(x: &X, gen: &GenLabel, o: &mut Out) {
    let (l, m) = (gen.i, gen.j.unwrap());
    let n = x.n();
    let mut c = x.l(l) - x.l(m) - (x.g(l, m) - int(1));
    for j in m + 1..=n {
        c += x.g(m, j) - x.g(l, j);
    }
    o.add(x.g(l, m) * c, &[('G', l, m, -1)]);
    for j in 1..l {
        o.add(-x.f(j, l), &[('F', j, l, -1), ('F', j, m, 1)]);
    }
    for k in m + 1..=n {
        o.add(-x.f(l, k), &[('F', l, k, -1), ('F', m, k, 1)]);
    }
    for j in m + 1..=n {
        o.add(-x.g(l, j), &[('G', l, j, -1), ('G', m, j, 1)]);
    }
    for i in 1..l {
        o.add(x.g(i, m), &[('G', i, l, 1), ('G', i, m, -1)]);
    }
}

fn d_fbar(x: &X, _: &GenLabel, o: &mut Out) {
    let n = x.n();
    o.add(int(1), &[('F', n - 1, n, 1)]);
}

fn d_gbar(x: &X, gen: &GenLabel, o: &mut Out) {
    let (l, m) = (gen.i, gen.j.unwrap());
    let n = x.n();
    for j in 1..l {
        o.add(-x.f(j, m), &[('F', j, l, 1), ('F', j, m, -1)]);
    }
    for k in m + 1..=n {
        o.add(-x.f(m, k), &[('F', l, k, 1), ('F', m, k, -1)]);
    }
    for i in 1..l {
        o.add(x.g(i, l), &[('G', i, l, -1), ('G', i, m, 1)]);
    }
    o.add(int(1), &[('G', l, m, 1)]);
}

pub fn formulas() -> Vec<Formula> {
    use Series::*;
    vec![
        Formula {
            name: "A ρ(H_i)",
            reading: Reading::Printed,
            series: A,
            generator: all_h,
            eval: a_h,
        },
        Formula {
            name: "A ρ(Ḡ_ij)",
            reading: Reading::Printed,
            series: A,
            generator: |n| {
                (1..n)
                    .flat_map(|i| (i + 1..=n).map(move |j| lower('G', i, Some(j))))
                    .collect()
            },
            eval: a_gbar,
        },
        Formula {
            name: "A ρ(G_i,i+1)",
            reading: Reading::Printed,
            series: A,
            generator: |n| simple_g(n, false),
            eval: a_g,
        },
        Formula {
            name: "A ρ(G_ij), j > i+1",
            reading: Reading::Misprinted,
            series: A,
            generator: |n| {
                (1..n)
                    .flat_map(|i| (i + 2..=n).map(move |j| raise('G', i, Some(j))))
                    .collect()
            },
            eval: a_g,
        },
        Formula {
            name: "B ρ(H_i)",
            reading: Reading::Printed,
            series: B,
            generator: all_h,
            eval: b_h,
        },
        Formula {
            name: "B ρ(E_n)",
            reading: Reading::Printed,
            series: B,
            generator: |n| vec![raise('E', n, None)],
            eval: b_e,
        },
        Formula {
            name: "B ρ(G_l,l+1)",
            reading: Reading::Printed,
            series: B,
            generator: |n| simple_g(n, false),
            eval: b_g,
        },
        Formula {
            name: "B ρ(Ē_n)",
            reading: Reading::Printed,
            series: B,
            generator: |n| vec![lower('E', n, None)],
            eval: b_ebar,
        },
        Formula {
            name: "B ρ(Ḡ_l,l+1)",
            reading: Reading::Printed,
            series: B,
            generator: |n| simple_g(n, true),
            eval: b_gbar,
        },
        Formula {
            name: "C ρ(H_i)",
            reading: Reading::Printed,
            series: C,
            generator: all_h,
            eval: c_h,
        },
        Formula {
            name: "C ρ(E_n)",
            reading: Reading::Printed,
            series: C,
            generator: |n| vec![raise('E', n, None)],
            eval: c_e,
        },
        Formula {
            name: "C ρ(G_i,i+1)",
            reading: Reading::Printed,
            series: C,
            generator: |n| simple_g(n, false),
            eval: c_g,
        },
        Formula {
            name: "C ρ(Ē_n)",
            reading: Reading::Printed,
            series: C,
            generator: |n| vec![lower('E', n, None)],
            eval: c_ebar,
        },
        Formula {
            name: "C ρ(Ḡ_i,i+1) as printed",
            reading: Reading::Misprinted,
            series: C,
            generator: |n| simple_g(n, true),
            eval: c_gbar_printed,
        },
        Formula {
            name: "C ρ(Ḡ_i,i+1)",
            reading: Reading::Corrected,
            series: C,
            generator: |n| simple_g(n, true),
            eval: c_gbar,
        },
        Formula {
            name: "D ρ(H_i)",
            reading: Reading::Printed,
            series: D,
            generator: all_h,
            eval: d_h,
        },
        Formula {
            name: "D ρ(F_n-1,n) as printed",
            reading: Reading::Misprinted,
            series: D,
            generator: |n| vec![raise('F', n - 1, Some(n))],
            eval: d_f_printed,
        },
        Formula {
            name: "D ρ(F_n-1,n)",
            reading: Reading::Corrected,
            series: D,
            generator: |n| vec![raise('F', n - 1, Some(n))],
            eval: d_f,
        },
        Formula {
            name: "D ρ(G_l,l+1)",
            reading: Reading::Printed,
            series: D,
            generator: |n| simple_g(n, false),
            eval: d_g,
        },
        Formula {
            name: "D ρ(F̄_n-1,n)",
            reading: Reading::Printed,
            series: D,
            generator: |n| vec![lower('F', n - 1, Some(n))],
            eval: d_fbar,
        },
        Formula {
            name: "D ρ(Ḡ_l,l+1)",
            reading: Reading::Printed,
            series: D,
            generator: |n| simple_g(n, true),
            eval: d_gbar,
        },
    ]
}
