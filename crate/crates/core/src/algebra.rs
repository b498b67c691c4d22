//! The positive part of the double of the Nichols algebra of type ufo(7).
//!
//! Elements are kept in the PBW normal form
//! `E2^a E12^b E11212^c E112^d E1^e` and products are reduced by a table of
//! left multiplications by root letters, filled once per braiding.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::cyclotomic::CycNum;
use crate::linalg::SparseVec;

/// Number of PBW monomials.
pub const PBW_DIM: usize = 144;

/// A `Z^2`-degree `b1 α1 + b2 α2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Degree {
    pub b1: i32,
    pub b2: i32,
}

impl Degree {
    pub const ZERO: Degree = Degree { b1: 0, b2: 0 };
    pub const ALPHA1: Degree = Degree { b1: 1, b2: 0 };
    pub const ALPHA2: Degree = Degree { b1: 0, b2: 1 };
    /// Degree of the top PBW monomial.
    pub const TOP: Degree = Degree { b1: 12, b2: 8 };

    pub const fn new(b1: i32, b2: i32) -> Self {
        Degree { b1, b2 }
    }

    pub fn alpha(i: usize) -> Self {
        match i {
            1 => Self::ALPHA1,
            2 => Self::ALPHA2,
            _ => panic!("simple roots are indexed by 1 and 2"),
        }
    }

    pub fn in_grid(self) -> bool {
        (0..=Self::TOP.b1).contains(&self.b1) && (0..=Self::TOP.b2).contains(&self.b2)
    }

    pub fn total(self) -> i32 {
        self.b1 + self.b2
    }

    pub fn scale(self, k: i32) -> Self {
        Degree::new(self.b1 * k, self.b2 * k)
    }
}

impl Add for Degree {
    type Output = Degree;
    fn add(self, o: Degree) -> Degree {
        Degree::new(self.b1 + o.b1, self.b2 + o.b2)
    }
}

impl Sub for Degree {
    type Output = Degree;
    fn sub(self, o: Degree) -> Degree {
        Degree::new(self.b1 - o.b1, self.b2 - o.b2)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.b1, self.b2)
    }
}

/// The braiding matrix `(q_ij)`; only `q12` is free.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidingData {
    pub q11: CycNum,
    pub q12: CycNum,
    pub q21: CycNum,
    pub q22: CycNum,
}

impl BraidingData {
    /// `None` when `q12 = 0`.
    pub fn new(q12: CycNum) -> Option<Self> {
        let inv = q12.inv().ok()?;
        Some(BraidingData {
            q11: CycNum::zeta_pow(4),
            q21: CycNum::zeta_pow(11) * inv,
            q22: CycNum::from_int(-1),
            q12,
        })
    }

    /// `q12 = 1`.
    pub fn standard() -> Self {
        Self::new(CycNum::one()).expect("1 is invertible")
    }

    /// `q_ij` for `i, j` in `{1, 2}`.
    pub fn entry(&self, i: usize, j: usize) -> &CycNum {
        match (i, j) {
            (1, 1) => &self.q11,
            (1, 2) => &self.q12,
            (2, 1) => &self.q21,
            (2, 2) => &self.q22,
            _ => panic!("braiding indices are 1 and 2"),
        }
    }
}

impl Default for BraidingData {
    fn default() -> Self {
        Self::standard()
    }
}

/// A PBW generator. The derived order is the normal order of monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum RootLetter {
    E2,
    E12,
    E11212,
    E112,
    E1,
}

impl RootLetter {
    pub const ALL: [RootLetter; 5] = [
        RootLetter::E2,
        RootLetter::E12,
        RootLetter::E11212,
        RootLetter::E112,
        RootLetter::E1,
    ];

    pub fn position(self) -> usize {
        self as usize
    }

    pub fn degree(self) -> Degree {
        match self {
            RootLetter::E2 => Degree::new(0, 1),
            RootLetter::E12 => Degree::new(1, 1),
            RootLetter::E11212 => Degree::new(3, 2),
            RootLetter::E112 => Degree::new(2, 1),
            RootLetter::E1 => Degree::new(1, 0),
        }
    }

    /// Smallest power that vanishes.
    pub fn height(self) -> u8 {
        HEIGHTS[self.position()]
    }

    pub fn name(self) -> &'static str {
        match self {
            RootLetter::E2 => "E2",
            RootLetter::E12 => "E12",
            RootLetter::E11212 => "E11212",
            RootLetter::E112 => "E112",
            RootLetter::E1 => "E1",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|l| l.name() == s)
    }

    fn unit_index(self) -> usize {
        STRIDES[self.position()]
    }

    pub fn is_simple(self) -> bool {
        matches!(self, RootLetter::E1 | RootLetter::E2)
    }

    /// The root vector as a combination of words in `E1`, `E2`.
    pub fn expansion(self, q: &BraidingData) -> Vec<(Vec<RootLetter>, CycNum)> {
        use RootLetter::*;
        // X = A B - c B A
        let bracket = |a: RootLetter, b: RootLetter, c: CycNum| {
            let mut out = Vec::new();
            for (wa, ca) in a.expansion(q) {
                for (wb, cb) in b.expansion(q) {
                    let mut ab = wa.clone();
                    ab.extend(&wb);
                    out.push((ab, &ca * &cb));
                    let mut ba = wb.clone();
                    ba.extend(&wa);
                    out.push((ba, -(&ca * &cb * &c)));
                }
            }
            collect_words(out)
        };
        match self {
            E1 | E2 => vec![(vec![self], CycNum::one())],
            E12 => bracket(E1, E2, q.q12.clone()),
            E112 => bracket(E1, E12, &q.q12 * &CycNum::zeta_pow(4)),
            E11212 => bracket(E112, E12, &q.q12 * &CycNum::zeta()),
        }
    }
}

impl fmt::Display for RootLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

const HEIGHTS: [u8; 5] = [2, 4, 2, 3, 3];
const STRIDES: [usize; 5] = [72, 18, 9, 3, 1];

fn collect_words(terms: Vec<(Vec<RootLetter>, CycNum)>) -> Vec<(Vec<RootLetter>, CycNum)> {
    let mut acc: BTreeMap<Vec<RootLetter>, CycNum> = BTreeMap::new();
    for (w, c) in terms {
        let e = acc.entry(w).or_insert_with(CycNum::zero);
        *e += c;
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// Exponents `(a2, a12, a11212, a112, a1)` of a PBW monomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PbwExponents([u8; 5]);

impl PbwExponents {
    pub const ONE: PbwExponents = PbwExponents([0; 5]);

    /// `None` unless every exponent is below its height.
    pub fn new(a2: u32, a12: u32, a11212: u32, a112: u32, a1: u32) -> Option<Self> {
        let e = [a2, a12, a11212, a112, a1];
        if e.iter().zip(HEIGHTS).all(|(&x, h)| x < h as u32) {
            Some(PbwExponents(e.map(|x| x as u8)))
        } else {
            None
        }
    }

    pub fn exponents(self) -> [u8; 5] {
        self.0
    }

    pub fn get(self, l: RootLetter) -> u8 {
        self.0[l.position()]
    }

    /// Position in the fixed enumeration `0..144`.
    pub fn index(self) -> usize {
        self.0.iter().zip(STRIDES).map(|(&x, s)| x as usize * s).sum()
    }

    pub fn from_index(i: usize) -> Self {
        assert!(i < PBW_DIM, "PBW index out of range");
        let mut e = [0u8; 5];
        let mut r = i;
        for (k, s) in STRIDES.iter().enumerate() {
            e[k] = (r / s) as u8;
            r %= s;
        }
        PbwExponents(e)
    }

    pub fn all() -> impl Iterator<Item = PbwExponents> {
        (0..PBW_DIM).map(Self::from_index)
    }

    pub fn degree(self) -> Degree {
        RootLetter::ALL
            .iter()
            .fold(Degree::ZERO, |d, &l| d + l.degree().scale(self.get(l) as i32))
    }

    pub fn total_length(self) -> u32 {
        self.0.iter().map(|&x| x as u32).sum()
    }

    /// The monomial as a word in root letters, in normal order.
    pub fn word(self) -> Vec<RootLetter> {
        RootLetter::ALL
            .iter()
            .flat_map(|&l| std::iter::repeat_n(l, self.get(l) as usize))
            .collect()
    }

    fn first_letter(self) -> Option<RootLetter> {
        RootLetter::ALL.into_iter().find(|&l| self.get(l) > 0)
    }

    fn with(self, l: RootLetter, delta: i32) -> Option<Self> {
        let mut e = self.0;
        let v = e[l.position()] as i32 + delta;
        if v < 0 || v >= l.height() as i32 {
            return None;
        }
        e[l.position()] = v as u8;
        Some(PbwExponents(e))
    }
}

impl fmt::Display for PbwExponents {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = self.0;
        write!(f, "m{}{}{}{}{}", e[0], e[1], e[2], e[3], e[4])
    }
}

/// An element of the positive part, in PBW coordinates.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct AlgebraElement {
    coeffs: SparseVec<CycNum>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement {
            coeffs: SparseVec::zero(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(PbwExponents::ONE)
    }

    pub fn monomial(e: PbwExponents) -> Self {
        AlgebraElement {
            coeffs: SparseVec::unit(e.index()),
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (PbwExponents, CycNum)>) -> Self {
        AlgebraElement {
            coeffs: SparseVec::from_pairs(terms.into_iter().map(|(e, c)| (e.index(), c))),
        }
    }

    pub fn from_vec(coeffs: SparseVec<CycNum>) -> Self {
        AlgebraElement { coeffs }
    }

    pub fn as_vec(&self) -> &SparseVec<CycNum> {
        &self.coeffs
    }

    pub fn into_vec(self) -> SparseVec<CycNum> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    pub fn coeff(&self, e: PbwExponents) -> CycNum {
        self.coeffs.get(e.index()).cloned().unwrap_or_else(CycNum::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (PbwExponents, &CycNum)> {
        self.coeffs.iter().map(|(i, c)| (PbwExponents::from_index(i), c))
    }

    /// The common degree of all terms, if homogeneous and nonzero.
    pub fn degree(&self) -> Option<Degree> {
        let mut it = self.terms().map(|(e, _)| e.degree());
        let d = it.next()?;
        it.all(|x| x == d).then_some(d)
    }

    pub fn scaled(&self, c: &CycNum) -> Self {
        AlgebraElement {
            coeffs: self.coeffs.scaled(c),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut c = self.coeffs.clone();
        c.add_vec(&other.coeffs);
        AlgebraElement { coeffs: c }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut c = self.coeffs.clone();
        c.sub_vec(&other.coeffs);
        AlgebraElement { coeffs: c }
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*{e}")?;
        }
        Ok(())
    }
}

/// `X Y` rewritten for root letters `X > Y`, as words in root letters.
pub fn swap_rule(x: RootLetter, y: RootLetter, q: &BraidingData) -> Vec<(CycNum, Vec<RootLetter>)> {
    use RootLetter::*;
    assert!(x > y, "swap rules apply to out-of-order pairs");
    let z = CycNum::zeta_pow;
    let p = &q.q12;
    let p2 = p * p;
    let p3 = &p2 * p;
    let one_z = CycNum::one() + z(1);
    match (x, y) {
        (E1, E2) => vec![(CycNum::one(), vec![E12]), (p.clone(), vec![E2, E1])],
        (E1, E12) => vec![(CycNum::one(), vec![E112]), (p * &z(4), vec![E12, E1])],
        (E1, E11212) => vec![
            (p2, vec![E11212, E1]),
            (p * &z(7) * &one_z, vec![E112, E112]),
        ],
        (E1, E112) => vec![(p * &z(8), vec![E112, E1])],
        (E112, E2) => vec![(-p2, vec![E2, E112]), (p * &z(8), vec![E12, E12])],
        (E112, E12) => vec![(CycNum::one(), vec![E11212]), (p * &z(1), vec![E12, E112])],
        (E112, E11212) => vec![(p * &z(9), vec![E11212, E112])],
        (E11212, E2) => vec![
            (p3, vec![E2, E11212]),
            (p2 * z(2) * one_z, vec![E12, E12, E12]),
        ],
        (E11212, E12) => vec![(p * &z(10), vec![E12, E11212])],
        (E12, E2) => vec![(-p.clone(), vec![E2, E12])],
        _ => unreachable!("pairs are exhausted above"),
    }
}

/// The positive part for a fixed braiding, with its left-multiplication table.
#[derive(Clone, Debug)]
pub struct PbwAlgebra {
    q: BraidingData,
    table: Vec<SparseVec<CycNum>>,
}

impl PbwAlgebra {
    pub fn new(q: BraidingData) -> Self {
        let mut memo: Vec<Option<SparseVec<CycNum>>> = vec![None; 5 * PBW_DIM];
        let mut busy = vec![false; 5 * PBW_DIM];
        for l in RootLetter::ALL {
            for m in 0..PBW_DIM {
                fill(&q, &mut memo, &mut busy, l, m);
            }
        }
        PbwAlgebra {
            q,
            table: memo.into_iter().map(|x| x.expect("filled")).collect(),
        }
    }

    pub fn braiding(&self) -> &BraidingData {
        &self.q
    }

    /// `X * m` for a PBW monomial index `m`.
    pub fn left_mul(&self, x: RootLetter, m: usize) -> &SparseVec<CycNum> {
        &self.table[x.position() * PBW_DIM + m]
    }

    pub fn left_mul_vec(&self, x: RootLetter, v: &SparseVec<CycNum>) -> SparseVec<CycNum> {
        let mut out = SparseVec::zero();
        for (m, c) in v.iter() {
            out.add_scaled(self.left_mul(x, m), c);
        }
        out
    }

    /// `word * v`, the rightmost letter acting first.
    pub fn word_mul_vec(&self, word: &[RootLetter], v: &SparseVec<CycNum>) -> SparseVec<CycNum> {
        word.iter()
            .rev()
            .fold(v.clone(), |acc, &l| self.left_mul_vec(l, &acc))
    }

    /// Normal form of a product of root letters.
    pub fn straighten(&self, word: &[RootLetter]) -> AlgebraElement {
        AlgebraElement::from_vec(self.word_mul_vec(word, &SparseVec::unit(0)))
    }

    pub fn multiply(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let mut out = SparseVec::zero();
        for (e, c) in x.terms() {
            out.add_scaled(&self.word_mul_vec(&e.word(), y.as_vec()), c);
        }
        AlgebraElement::from_vec(out)
    }

    /// A monomial as a combination of words in `E1`, `E2`.
    pub fn expand_root_word(&self, e: PbwExponents) -> Vec<(Vec<RootLetter>, CycNum)> {
        expand_word(&e.word(), &self.q)
    }
}

/// A word in root letters rewritten as a combination of words in `E1`, `E2`.
pub fn expand_word(word: &[RootLetter], q: &BraidingData) -> Vec<(Vec<RootLetter>, CycNum)> {
    let mut acc = vec![(Vec::new(), CycNum::one())];
    for &l in word {
        let ex = l.expansion(q);
        let mut next = Vec::with_capacity(acc.len() * ex.len());
        for (w, c) in &acc {
            for (wl, cl) in &ex {
                let mut ww = w.clone();
                ww.extend(wl);
                next.push((ww, c * cl));
            }
        }
        acc = collect_words(next);
    }
    acc
}

fn fill(
    q: &BraidingData,
    memo: &mut Vec<Option<SparseVec<CycNum>>>,
    busy: &mut Vec<bool>,
    x: RootLetter,
    m: usize,
) -> SparseVec<CycNum> {
    let slot = x.position() * PBW_DIM + m;
    if let Some(v) = &memo[slot] {
        return v.clone();
    }
    assert!(!busy[slot], "straightening does not terminate at {x} * {}", PbwExponents::from_index(m));
    busy[slot] = true;
    let e = PbwExponents::from_index(m);
    let out = match e.first_letter() {
        None => SparseVec::unit(x.unit_index()),
        Some(y) if x <= y => match e.with(x, 1) {
            Some(f) => SparseVec::unit(f.index()),
            None => SparseVec::zero(),
        },
        Some(y) => {
            let rest = e.with(y, -1).expect("first letter present").index();
            let mut acc = SparseVec::zero();
            for (c, w) in swap_rule(x, y, q) {
                let mut v = SparseVec::unit(rest);
                for &l in w.iter().rev() {
                    let mut next = SparseVec::zero();
                    for (i, ci) in v.iter() {
                        let prod = fill(q, memo, busy, l, i);
                        next.add_scaled(&prod, ci);
                    }
                    v = next;
                }
                acc.add_scaled(&v, &c);
            }
            acc
        }
    };
    busy[slot] = false;
    memo[slot] = Some(out.clone());
    out
}

/// Which redex a rewriting step picks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// Rewrites a word to normal form by single rule applications on whole words,
/// independently of the multiplication table.
pub fn rewrite_word(word: &[RootLetter], q: &BraidingData, strategy: Strategy) -> AlgebraElement {
    let mut pending: BTreeMap<Vec<RootLetter>, CycNum> = BTreeMap::new();
    pending.insert(word.to_vec(), CycNum::one());
    let mut done = SparseVec::zero();
    while let Some((w, c)) = pending.pop_first() {
        match find_redex(&w, strategy) {
            None => {
                let mut e = PbwExponents::ONE;
                for &l in &w {
                    e = e.with(l, 1).expect("normal words are legal");
                }
                done.add_term(e.index(), &c);
            }
            Some(Redex::Nil) => {}
            Some(Redex::Swap(i)) => {
                for (rc, rw) in swap_rule(w[i], w[i + 1], q) {
                    let mut nw = w[..i].to_vec();
                    nw.extend(rw);
                    nw.extend(&w[i + 2..]);
                    let e = pending.entry(nw).or_insert_with(CycNum::zero);
                    *e += &c * &rc;
                }
                pending.retain(|_, v| !v.is_zero());
            }
        }
    }
    AlgebraElement::from_vec(done)
}

enum Redex {
    Swap(usize),
    Nil,
}

fn find_redex(w: &[RootLetter], strategy: Strategy) -> Option<Redex> {
    let at = |i: usize| -> Option<Redex> {
        if i + 1 < w.len() && w[i] > w[i + 1] {
            return Some(Redex::Swap(i));
        }
        let h = w[i].height() as usize;
        if i + h <= w.len() && w[i..i + h].iter().all(|&l| l == w[i]) {
            return Some(Redex::Nil);
        }
        None
    };
    match strategy {
        Strategy::Leftmost => (0..w.len()).find_map(at),
        Strategy::Rightmost => (0..w.len()).rev().find_map(at),
    }
}

/// One disagreement found by [`check_confluence`].
#[derive(Clone, Debug)]
pub struct ConfluenceMismatch {
    pub word: Vec<RootLetter>,
    pub leftmost: AlgebraElement,
    pub rightmost: AlgebraElement,
    pub table: AlgebraElement,
}

#[derive(Clone, Debug, Default)]
pub struct ConfluenceReport {
    pub words_checked: usize,
    pub mismatches: Vec<ConfluenceMismatch>,
}

impl ConfluenceReport {
    pub fn is_confluent(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares leftmost and rightmost rewriting, and the multiplication table,
/// on every sample word.
pub fn check_confluence<'a>(
    words: impl IntoIterator<Item = &'a [RootLetter]>,
    alg: &PbwAlgebra,
) -> ConfluenceReport {
    let mut report = ConfluenceReport::default();
    for w in words {
        report.words_checked += 1;
        let l = rewrite_word(w, alg.braiding(), Strategy::Leftmost);
        let r = rewrite_word(w, alg.braiding(), Strategy::Rightmost);
        let t = alg.straighten(w);
        if l != r || l != t {
            report.mismatches.push(ConfluenceMismatch {
                word: w.to_vec(),
                leftmost: l,
                rightmost: r,
                table: t,
            });
        }
    }
    report
}

/// All words of length `0..=max_len` over the given letters.
pub fn all_words(letters: &[RootLetter], max_len: usize) -> Vec<Vec<RootLetter>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for &l in letters {
                let mut x: Vec<RootLetter> = w.clone();
                x.push(l);
                next.push(x);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use RootLetter::*;

    fn m(a2: u32, a12: u32, a11212: u32, a112: u32, a1: u32) -> PbwExponents {
        PbwExponents::new(a2, a12, a11212, a112, a1).unwrap()
    }

    #[test]
    fn enumeration() {
        assert_eq!(PbwExponents::all().count(), 144);
        for (i, e) in PbwExponents::all().enumerate() {
            assert_eq!(e.index(), i);
        }
        assert_eq!(m(1, 3, 1, 2, 2).degree(), Degree::TOP);
        assert_eq!(HEIGHTS.iter().map(|&h| h as usize).product::<usize>(), 144);
        assert!(PbwExponents::new(0, 0, 0, 0, 3).is_none());
    }

    #[test]
    fn basic_products() {
        let q = BraidingData::new(CycNum::zeta()).unwrap();
        let alg = PbwAlgebra::new(q.clone());
        assert_eq!(alg.straighten(&[E1]), AlgebraElement::monomial(m(0, 0, 0, 0, 1)));
        assert_eq!(
            alg.straighten(&[E1, E2]),
            AlgebraElement::from_terms([(m(0, 1, 0, 0, 0), CycNum::one()), (m(1, 0, 0, 0, 1), q.q12.clone())])
        );
        assert_eq!(
            alg.straighten(&[E12, E2]),
            AlgebraElement::from_terms([(m(1, 1, 0, 0, 0), -q.q12.clone())])
        );
        assert!(alg.straighten(&[E1, E1, E1]).is_zero());
        assert!(!alg.straighten(&[E1, E1]).is_zero());
        let x = AlgebraElement::monomial(m(0, 0, 0, 1, 0));
        let y = AlgebraElement::monomial(m(0, 0, 1, 0, 0));
        assert_eq!(
            alg.multiply(&x, &y),
            AlgebraElement::from_terms([(m(0, 0, 1, 1, 0), &q.q12 * &CycNum::zeta_pow(9))])
        );
    }

    #[test]
    fn expansion_sizes() {
        let q = BraidingData::standard();
        assert_eq!(E12.expansion(&q).len(), 2);
        // E1 E2 E1 arises twice and the two terms merge
        let e112 = E112.expansion(&q);
        assert_eq!(e112.len(), 3);
        assert!(e112.contains(&(vec![E1, E2, E1], -(CycNum::one() + CycNum::zeta_pow(4)))));
        assert_eq!(
            PbwAlgebra::new(q).expand_root_word(m(0, 0, 0, 0, 2)),
            vec![(vec![E1, E1], CycNum::one())]
        );
    }

    #[test]
    fn expansion_restraightens() {
        let alg = PbwAlgebra::new(BraidingData::new(CycNum::zeta_pow(5)).unwrap());
        for e in PbwExponents::all().step_by(7) {
            let mut acc = AlgebraElement::zero();
            for (w, c) in alg.expand_root_word(e) {
                acc = acc.add(&alg.straighten(&w).scaled(&c));
            }
            assert_eq!(acc, AlgebraElement::monomial(e), "{e}");
        }
    }

    #[test]
    fn small_words_are_confluent() {
        let alg = PbwAlgebra::new(BraidingData::new(CycNum::zeta()).unwrap());
        let words = all_words(&[E1, E2], 4);
        let report = check_confluence(words.iter().map(Vec::as_slice), &alg);
        assert_eq!(report.words_checked, 31);
        assert!(report.is_confluent(), "{:?}", report.mismatches.first());
        assert!(check_confluence([&[][..]], &alg).is_confluent());
    }
}
