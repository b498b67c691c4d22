//! Weights: the five vanishing conditions, the 47 families, the Shapovalov
//! determinant and the characters `χ1`, `χ2`.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{BraidingData, Degree};
use crate::cyclotomic::CycNum;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error("character values must be nonzero")]
    ZeroValue,
    #[error("no family matches ({l1}, {l2})")]
    NoFamily { l1: Box<CycNum>, l2: Box<CycNum> },
    #[error("family index {0} is outside 1..=47")]
    BadFamily(u32),
}

/// The values `λ(g1), λ(g2), λ(σ1), λ(σ2)` together with the braiding.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightParams {
    pub lg1: CycNum,
    pub lg2: CycNum,
    pub ls1: CycNum,
    pub ls2: CycNum,
    pub q: BraidingData,
}

impl WeightParams {
    pub fn new(
        lg1: CycNum,
        lg2: CycNum,
        ls1: CycNum,
        ls2: CycNum,
        q: BraidingData,
    ) -> Result<Self, WeightError> {
        if [&lg1, &lg2, &ls1, &ls2].iter().any(|x| x.is_zero()) {
            return Err(WeightError::ZeroValue);
        }
        Ok(WeightParams { lg1, lg2, ls1, ls2, q })
    }

    /// `λ(g_i) = λ_i`, `λ(σ_i) = 1`, `q12 = 1`.
    pub fn from_lambdas(l1: CycNum, l2: CycNum) -> Result<Self, WeightError> {
        Self::new(l1, l2, CycNum::one(), CycNum::one(), BraidingData::standard())
    }

    /// The weight with the given `λ_i` whose `σ`-values are `ls1`, `ls2`.
    pub fn split(
        l1: &CycNum,
        l2: &CycNum,
        ls1: CycNum,
        ls2: CycNum,
        q: BraidingData,
    ) -> Result<Self, WeightError> {
        let i1 = ls1.inv().map_err(|_| WeightError::ZeroValue)?;
        let i2 = ls2.inv().map_err(|_| WeightError::ZeroValue)?;
        Self::new(l1 * &i1, l2 * &i2, ls1, ls2, q)
    }

    /// `λ(g1 σ1)`
    pub fn lambda1(&self) -> CycNum {
        &self.lg1 * &self.ls1
    }

    /// `λ(g2 σ2)`
    pub fn lambda2(&self) -> CycNum {
        &self.lg2 * &self.ls2
    }
}

/// One of the 47 families `𝕀_j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct FamilyId(u8);

impl FamilyId {
    pub fn new(index: u32) -> Result<Self, WeightError> {
        if (1..=47).contains(&index) {
            Ok(FamilyId(index as u8))
        } else {
            Err(WeightError::BadFamily(index))
        }
    }

    pub fn index(self) -> u32 {
        self.0 as u32
    }

    /// Number of conditions satisfied on the family.
    pub fn class(self) -> u32 {
        match self.0 {
            1 => 0,
            2..=10 => 1,
            _ => 2,
        }
    }

    pub fn all() -> impl Iterator<Item = FamilyId> {
        (1..=47).map(FamilyId)
    }
}

impl TryFrom<u32> for FamilyId {
    type Error = WeightError;
    fn try_from(v: u32) -> Result<Self, WeightError> {
        FamilyId::new(v)
    }
}

impl From<FamilyId> for u32 {
    fn from(f: FamilyId) -> u32 {
        f.index()
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "I{}", self.0)
    }
}

/// A row of the classification table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Row {
    pub family: FamilyId,
    pub dim: usize,
    pub max_degree: Degree,
    pub phi_family: FamilyId,
}

// (family, dim L, max degree, family of the φ-twist)
const TABLE1: [(u8, usize, (i32, i32), u8); 47] = [
    (1, 144, (12, 8), 1),
    (2, 48, (10, 8), 2),
    (3, 96, (11, 8), 3),
    (4, 48, (8, 6), 4),
    (5, 96, (10, 7), 5),
    (6, 72, (9, 6), 6),
    (7, 36, (9, 5), 7),
    (8, 72, (10, 6), 8),
    (9, 108, (11, 7), 9),
    (10, 72, (12, 7), 10),
    (11, 11, (5, 4), 12),
    (12, 11, (5, 4), 11),
    (13, 23, (7, 5), 44),
    (14, 25, (7, 5), 28),
    (15, 37, (9, 6), 41),
    (16, 37, (8, 6), 30),
    (17, 47, (10, 7), 46),
    (18, 11, (5, 3), 38),
    (19, 35, (8, 5), 40),
    (20, 71, (11, 7), 42),
    (21, 61, (9, 6), 32),
    (22, 49, (9, 6), 45),
    (23, 47, (8, 6), 29),
    (24, 85, (10, 7), 35),
    (25, 37, (8, 5), 37),
    (26, 25, (8, 5), 43),
    (27, 35, (9, 5), 36),
    (28, 25, (7, 5), 14),
    (29, 47, (8, 6), 23),
    (30, 37, (8, 6), 16),
    (31, 61, (10, 6), 39),
    (32, 61, (9, 6), 21),
    (33, 71, (9, 6), 34),
    (34, 71, (9, 6), 33),
    (35, 85, (10, 7), 24),
    (36, 35, (9, 5), 27),
    (37, 37, (8, 5), 25),
    (38, 11, (5, 3), 18),
    (39, 61, (10, 6), 31),
    (40, 35, (8, 5), 19),
    (41, 37, (9, 6), 15),
    (42, 71, (11, 7), 20),
    (43, 25, (8, 5), 26),
    (44, 23, (7, 5), 13),
    (45, 49, (9, 6), 22),
    (46, 47, (10, 7), 17),
    (47, 1, (0, 0), 47),
];

pub fn table1() -> Vec<Table1Row> {
    TABLE1
        .iter()
        .map(|&(f, dim, (b1, b2), phi)| Table1Row {
            family: FamilyId(f),
            dim,
            max_degree: Degree::new(b1, b2),
            phi_family: FamilyId(phi),
        })
        .collect()
}

pub fn table1_row(f: FamilyId) -> Table1Row {
    table1()[f.0 as usize - 1]
}

// (λ1, λ2) as powers of z for the 37 families with two conditions.
const POINTS: [(u8, u8, u8); 37] = [
    (11, 0, 1),
    (12, 0, 4),
    (13, 0, 7),
    (14, 0, 3),
    (15, 0, 9),
    (16, 0, 6),
    (17, 0, 10),
    (18, 8, 5),
    (19, 8, 8),
    (20, 8, 11),
    (21, 8, 3),
    (22, 8, 9),
    (23, 8, 2),
    (24, 8, 6),
    (25, 11, 8),
    (26, 5, 8),
    (27, 4, 9),
    (28, 9, 4),
    (29, 6, 6),
    (30, 2, 2),
    (31, 6, 10),
    (32, 10, 6),
    (33, 2, 6),
    (34, 4, 3),
    (35, 3, 4),
    (36, 1, 0),
    (37, 2, 0),
    (38, 3, 0),
    (39, 4, 0),
    (40, 5, 0),
    (41, 6, 0),
    (42, 7, 0),
    (43, 8, 0),
    (44, 9, 0),
    (45, 10, 0),
    (46, 11, 0),
    (47, 0, 0),
];

fn z(k: i64) -> CycNum {
    CycNum::zeta_pow(k)
}

fn in_powers(x: &CycNum, ks: &[i64]) -> bool {
    ks.iter().any(|&k| *x == z(k))
}

/// `(λ1 ∈ {1, z^8}, λ1²λ2 ∈ {-1, z^10}, λ1³λ2² = -1, λ1λ2 ∈ {z, z^4, z^7}, λ2 = 1)`
pub fn conditions(l1: &CycNum, l2: &CycNum) -> [bool; 5] {
    let l11 = l1 * l1;
    let c2 = &l11 * l2;
    let c3 = &(&l11 * l1) * &(l2 * l2);
    let c4 = l1 * l2;
    [
        in_powers(l1, &[0, 8]),
        in_powers(&c2, &[6, 10]),
        c3 == z(6),
        in_powers(&c4, &[1, 4, 7]),
        l2.is_one(),
    ]
}

/// The family containing `(λ1, λ2)`.
pub fn classify(l1: &CycNum, l2: &CycNum) -> Result<FamilyId, WeightError> {
    if l1.is_zero() || l2.is_zero() {
        return Err(WeightError::ZeroValue);
    }
    let c = conditions(l1, l2);
    let no_family = || WeightError::NoFamily {
        l1: Box::new(l1.clone()),
        l2: Box::new(l2.clone()),
    };
    match c.iter().filter(|&&b| b).count() {
        0 => Ok(FamilyId(1)),
        1 => {
            let f = if c[0] {
                if l1.is_one() { 2 } else { 3 }
            } else if c[1] {
                if (l1 * l1) * l2 == z(6) { 4 } else { 5 }
            } else if c[2] {
                6
            } else if c[3] {
                match (l1 * l2).zeta_log() {
                    Some(1) => 7,
                    Some(4) => 8,
                    _ => 9,
                }
            } else {
                10
            };
            Ok(FamilyId(f))
        }
        _ => {
            let (a, b) = (l1.zeta_log().ok_or_else(no_family)?, l2.zeta_log().ok_or_else(no_family)?);
            POINTS
                .iter()
                .find(|p| p.1 == a && p.2 == b)
                .map(|p| FamilyId(p.0))
                .ok_or_else(no_family)
        }
    }
}

/// The families whose one-line descriptions (a single equation plus an
/// exclusion list, or a point) contain `(λ1, λ2)`. Used to audit
/// [`classify`]; the exclusion lists are transcribed verbatim.
pub fn simplified_families(l1: &CycNum, l2: &CycNum) -> Vec<FamilyId> {
    let mut out = Vec::new();
    let not_in = |x: &CycNum, ks: &[i64]| !in_powers(x, ks);
    let l11 = l1 * l1;
    let all: Vec<i64> = (0..12).collect();
    let conds: [(u8, bool); 9] = [
        (2, l1.is_one() && not_in(l2, &[0, 1, 4, 7, 3, 9, 6, 10])),
        (3, *l1 == z(8) && not_in(l2, &[0, 6, 2, 3, 5, 8, 9, 11])),
        (4, &l11 * l2 == z(6) && not_in(l1, &[0, 6, 8, 10, 4, 2])),
        (5, &l11 * l2 == z(10) && not_in(l1, &[0, 6, 8, 10, 4, 2])),
        (
            6,
            &(&l11 * l1) * &(l2 * l2) == z(6) && not_in(l1, &[0, 6, 8, 10, 4, 2]),
        ),
        (7, l1 * l2 == z(1) && not_in(l1, &[0, 8, 1, 4, 9])),
        (8, l1 * l2 == z(4) && not_in(l1, &[0, 8, 4, 2, 6, 10])),
        (9, l1 * l2 == z(7) && not_in(l1, &[0, 8, 7, 4, 11])),
        (10, not_in(l1, &all) && l2.is_one()),
    ];
    out.extend(conds.iter().filter(|c| c.1).map(|c| FamilyId(c.0)));
    if let (Some(a), Some(b)) = (l1.zeta_log(), l2.zeta_log()) {
        out.extend(POINTS.iter().filter(|p| p.1 == a && p.2 == b).map(|p| FamilyId(p.0)));
    }
    if out.is_empty() && conditions(l1, l2).iter().all(|&b| !b) {
        out.push(FamilyId(1));
    }
    out
}

/// The nine-factor Shapovalov determinant.
pub fn shapovalov(l1: &CycNum, l2: &CycNum) -> Result<CycNum, WeightError> {
    let i1 = l1.inv().map_err(|_| WeightError::ZeroValue)?;
    let i2 = l2.inv().map_err(|_| WeightError::ZeroValue)?;
    let a = &z(4) * &i1;
    let b = &(&z(2) * &i1) * &(&i1 * &i2);
    let c = &(&i1 * &i1) * &(&i1 * &(&i2 * &i2));
    let d = &(&z(10) * &i1) * &i2;
    let one = CycNum::one();
    let factors = [
        &a - &z(4),
        &a - &z(8),
        &b - &z(8),
        &b - &z(4),
        &c + &one,
        &d - &z(9),
        &d + &one,
        &d - &z(3),
        &i2 - &one,
    ];
    Ok(factors.iter().fold(CycNum::one(), |acc, f| &acc * f))
}

/// `(λ1, λ2)` of a weight in the family. Free parameters take the value 2.
pub fn representative_lambdas(f: FamilyId) -> (CycNum, CycNum) {
    let two = CycNum::from_int(2);
    let half = CycNum::frac(1, 2);
    let quarter = CycNum::frac(1, 4);
    match f.0 {
        1 => (two, CycNum::from_int(3)),
        2 => (CycNum::one(), two),
        3 => (z(8), two),
        4 => (two, -quarter),
        5 => (two, z(10) * quarter),
        6 => (CycNum::from_int(4), z(3) * CycNum::frac(1, 8)),
        7 => (two, z(1) * half),
        8 => (two, z(4) * half),
        9 => (two, z(7) * half),
        10 => (two, CycNum::one()),
        k => {
            let p = POINTS.iter().find(|p| p.0 == k).expect("point family");
            (z(p.1 as i64), z(p.2 as i64))
        }
    }
}

/// The representative weight with `λ(σ_i) = 1` and `q12 = 1`.
pub fn representative(f: FamilyId) -> WeightParams {
    let (l1, l2) = representative_lambdas(f);
    WeightParams::from_lambdas(l1, l2).expect("representatives are nonzero")
}

/// `(λ1, λ2)` of `χ1^a χ2^b λ`.
pub fn shift(l1: &CycNum, l2: &CycNum, a: i64, b: i64) -> (CycNum, CycNum) {
    (l1 * &z(8 * a + 11 * b), l2 * &z(11 * a))
}

/// The 144 characters of `Z12 × Z12^`, with `g1 = g2^8`, `σ1 = χ^11`,
/// `σ2 = χ^6` where `χ(g2) = z`. The character `(a, b)` sends `g2 ↦ z^a`
/// and `χ ↦ z^b`.
pub fn z12_characters() -> Vec<WeightParams> {
    let mut out = Vec::with_capacity(144);
    for a in 0..12 {
        for b in 0..12 {
            out.push(
                WeightParams::new(z(8 * a), z(a), z(11 * b), z(6 * b), BraidingData::standard())
                    .expect("roots of unity"),
            );
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(i: u32) -> FamilyId {
        FamilyId::new(i).unwrap()
    }

    #[test]
    fn condition_examples() {
        let one = CycNum::one();
        assert_eq!(conditions(&one, &one), [true, false, false, false, true]);
        assert_eq!(conditions(&z(8), &z(5)), [true, false, false, true, false]);
        let (two, three) = (CycNum::from_int(2), CycNum::from_int(3));
        assert_eq!(conditions(&two, &three), [false; 5]);
    }

    #[test]
    fn classify_examples() {
        let one = CycNum::one();
        assert_eq!(classify(&one, &one).unwrap(), f(47));
        assert_eq!(classify(&one, &z(1)).unwrap(), f(11));
        assert_eq!(classify(&CycNum::from_int(2), &CycNum::from_int(3)).unwrap(), f(1));
        assert_eq!(classify(&z(8), &CycNum::from_int(2)).unwrap(), f(3));
        assert!(classify(&CycNum::zero(), &one).is_err());
    }

    #[test]
    fn representatives_classify_home() {
        for fam in FamilyId::all() {
            let p = representative(fam);
            assert_eq!(classify(&p.lambda1(), &p.lambda2()).unwrap(), fam);
        }
        let (l1, l2) = representative_lambdas(f(6));
        assert_eq!(&(&l1 * &l1) * &(&l1 * &(&l2 * &l2)), -CycNum::one());
    }

    #[test]
    fn shapovalov_vanishing() {
        let sh = |a: &CycNum, b: &CycNum| shapovalov(a, b).unwrap();
        assert!(sh(&CycNum::from_int(2), &CycNum::one()).is_zero());
        assert!(sh(&z(8), &CycNum::from_int(5)).is_zero());
        assert!(!sh(&CycNum::from_int(2), &CycNum::from_int(3)).is_zero());
    }

    #[test]
    fn roots_of_unity_partition() {
        for a in 0..12 {
            for b in 0..12 {
                let (l1, l2) = (z(a), z(b));
                let fam = classify(&l1, &l2).unwrap();
                let n = conditions(&l1, &l2).iter().filter(|&&x| x).count() as u32;
                assert_eq!(fam.class(), n);
                assert_eq!(shapovalov(&l1, &l2).unwrap().is_zero(), fam != f(1));
            }
        }
    }

    #[test]
    fn shift_examples() {
        let (l1, l2) = shift(&CycNum::one(), &CycNum::from_int(2), 1, 0);
        assert_eq!((l1.clone(), l2.clone()), (z(8), z(11) * CycNum::from_int(2)));
        assert_eq!(classify(&l1, &l2).unwrap(), f(3));
        let (l1, l2) = shift(&CycNum::from_int(2), &CycNum::one(), 0, 1);
        assert_eq!(classify(&l1, &l2).unwrap(), f(10));
        let x = CycNum::from_int(7);
        assert_eq!(shift(&x, &x, 0, 0), (x.clone(), x));
    }

    #[test]
    fn table_is_consistent() {
        let rows = table1();
        assert_eq!(rows.len(), 47);
        for r in &rows {
            let back = table1_row(r.phi_family);
            assert_eq!(back.phi_family, r.family);
            assert_eq!(back.dim, r.dim);
        }
    }

    #[test]
    fn family_id_serde() {
        let v = serde_json::to_string(&f(18)).unwrap();
        assert_eq!(v, "18");
        assert!(serde_json::from_str::<FamilyId>("48").is_err());
    }

    #[test]
    fn z12_characters_hit_every_root_pair() {
        let pairs: std::collections::BTreeSet<(u8, u8)> = z12_characters()
            .iter()
            .map(|p| (p.lambda1().zeta_log().unwrap(), p.lambda2().zeta_log().unwrap()))
            .collect();
        assert_eq!(pairs.len(), 144);
    }
}
