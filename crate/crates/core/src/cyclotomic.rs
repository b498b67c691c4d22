//! Exact arithmetic in the cyclotomic field of 12th roots of unity.
//!
//! An element is stored in the power basis `1, z, z^2, z^3` where `z` is a
//! fixed primitive 12th root of unity. The minimal polynomial of `z` is
//! `x^4 - x^2 + 1`, so `z^4 = z^2 - 1` and `z^6 = -1`.
//!
//! The text format is
//!
//! ```text
//! expr  := term (("+" | "-") term)*
//! term  := rat ("*"? zpart)? | zpart
//! zpart := "z" ("^" uint)?
//! rat   := ["-"] uint ("/" uint)?
//! ```
//!
//! with optional whitespace between tokens. A bare `zpart` may also carry a
//! leading `-` so that canonical output such as `-z^2` parses back.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::field::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycError {
    #[error("division by zero in Q(z12)")]
    DivisionByZero,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// An element `c0 + c1 z + c2 z^2 + c3 z^3` of `Q(z)`, `z` a primitive 12th
/// root of unity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycNum {
    c: [BigRational; 4],
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl CycNum {
    pub fn from_coords(c: [BigRational; 4]) -> Self {
        CycNum { c }
    }

    pub fn from_i64_coords(c: [i64; 4]) -> Self {
        CycNum {
            c: [rat(c[0]), rat(c[1]), rat(c[2]), rat(c[3])],
        }
    }

    pub fn from_rational(r: BigRational) -> Self {
        CycNum {
            c: [r, BigRational::zero(), BigRational::zero(), BigRational::zero()],
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n))
    }

    /// `n / d` as a rational element.
    pub fn frac(n: i64, d: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn coords(&self) -> &[BigRational; 4] {
        &self.c
    }

    /// `z^k` for any integer `k` (negative exponents allowed).
    pub fn zeta_pow(k: i64) -> Self {
        zeta_powers()[k.rem_euclid(12) as usize].clone()
    }

    pub fn zeta() -> Self {
        Self::zeta_pow(1)
    }

    pub fn is_rational(&self) -> bool {
        self.c[1..].iter().all(Zero::is_zero)
    }

    pub fn inv(&self) -> Result<Self, CycError> {
        if self.is_zero() {
            return Err(CycError::DivisionByZero);
        }
        // The other three embeddings z -> z^5, z^7, z^11 multiply to the
        // adjugate; a times the adjugate is the (rational) norm.
        let adj = self.galois(5) * self.galois(7) * self.galois(11);
        let norm = self * &adj;
        debug_assert!(norm.is_rational());
        let n = norm.c[0].recip();
        Ok(adj.scale(&n))
    }

    /// Image under the automorphism `z -> z^k`, `k` coprime to 12.
    pub fn galois(&self, k: i64) -> Self {
        let mut out = CycNum::zero();
        for (i, ci) in self.c.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            out += Self::zeta_pow(k * i as i64).scale(ci);
        }
        out
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        CycNum {
            c: [&self.c[0] * r, &self.c[1] * r, &self.c[2] * r, &self.c[3] * r],
        }
    }

    /// Integer power; negative exponents invert (and fail on zero).
    pub fn pow(&self, e: i64) -> Result<Self, CycError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = CycNum::one();
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &sq;
            }
            sq = &sq * &sq;
            k >>= 1;
        }
        Ok(acc)
    }

    /// Multiplicative order if `self` is a 12th root of unity.
    pub fn root_of_unity_order(&self) -> Option<u32> {
        let k = self.zeta_log()?;
        Some(12 / (k as u32).gcd(&12))
    }

    /// The `k` in `0..12` with `self == z^k`, if any.
    pub fn zeta_log(&self) -> Option<u8> {
        zeta_powers().iter().position(|p| p == self).map(|k| k as u8)
    }

    /// `1 + q + ... + q^(n-1)`.
    pub fn q_integer(q: &CycNum, n: u32) -> CycNum {
        let mut acc = CycNum::zero();
        let mut p = CycNum::one();
        for _ in 0..n {
            acc += &p;
            p = &p * q;
        }
        acc
    }
}

fn zeta_powers() -> &'static [CycNum; 12] {
    static POWERS: OnceLock<[CycNum; 12]> = OnceLock::new();
    POWERS.get_or_init(|| {
        let z = CycNum::from_i64_coords([0, 1, 0, 0]);
        let mut v: Vec<CycNum> = Vec::with_capacity(12);
        let mut p = CycNum::one();
        for _ in 0..12 {
            v.push(p.clone());
            p = &p * &z;
        }
        v.try_into().expect("twelve powers")
    })
}

impl Zero for CycNum {
    fn zero() -> Self {
        CycNum {
            c: [BigRational::zero(), BigRational::zero(), BigRational::zero(), BigRational::zero()],
        }
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }
}

impl One for CycNum {
    fn one() -> Self {
        Self::from_int(1)
    }
}

impl<'a> Add<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn add(self, o: &'a CycNum) -> CycNum {
        CycNum {
            c: [&self.c[0] + &o.c[0], &self.c[1] + &o.c[1], &self.c[2] + &o.c[2], &self.c[3] + &o.c[3]],
        }
    }
}

impl<'a> Sub<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn sub(self, o: &'a CycNum) -> CycNum {
        CycNum {
            c: [&self.c[0] - &o.c[0], &self.c[1] - &o.c[1], &self.c[2] - &o.c[2], &self.c[3] - &o.c[3]],
        }
    }
}

impl<'a> Mul<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn mul(self, o: &'a CycNum) -> CycNum {
        let mut p: [BigRational; 7] = Default::default();
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                p[i + j] += a * b;
            }
        }
        // z^d = z^(d-2) - z^(d-4) for d >= 4
        for d in (4..7).rev() {
            if p[d].is_zero() {
                continue;
            }
            let t = std::mem::take(&mut p[d]);
            p[d - 2] += &t;
            p[d - 4] -= t;
        }
        let [c0, c1, c2, c3, ..] = p;
        CycNum { c: [c0, c1, c2, c3] }
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            c: [-&self.c[0], -&self.c[1], -&self.c[2], -&self.c[3]],
        }
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        let [a, b, c, d] = self.c;
        CycNum { c: [-a, -b, -c, -d] }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident, $atr:ident, $am:ident) => {
        impl $tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, o: CycNum) -> CycNum {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, o: &'a CycNum) -> CycNum {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<CycNum> for &'a CycNum {
            type Output = CycNum;
            fn $m(self, o: CycNum) -> CycNum {
                self.$m(&o)
            }
        }
        impl $atr<CycNum> for CycNum {
            fn $am(&mut self, o: CycNum) {
                *self = (&*self).$m(&o);
            }
        }
        impl<'a> $atr<&'a CycNum> for CycNum {
            fn $am(&mut self, o: &'a CycNum) {
                *self = (&*self).$m(o);
            }
        }
    };
}

forward_owned!(Add, add, AddAssign, add_assign);
forward_owned!(Sub, sub, SubAssign, sub_assign);
forward_owned!(Mul, mul, MulAssign, mul_assign);

impl Field for CycNum {
    fn try_inv(&self) -> Option<Self> {
        self.inv().ok()
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }

    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        let p = a * b;
        for (x, y) in self.c.iter_mut().zip(p.c) {
            *x += y;
        }
    }

    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        let p = a * b;
        for (x, y) in self.c.iter_mut().zip(p.c) {
            *x -= y;
        }
    }
}

fn fmt_rat(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            let body = match (k, mag.is_one()) {
                (0, _) => fmt_rat(&mag),
                (1, true) => "z".to_string(),
                (1, false) => format!("{}*z", fmt_rat(&mag)),
                (_, true) => format!("z^{k}"),
                (_, false) => format!("{}*z^{k}", fmt_rat(&mag)),
            };
            if first {
                if neg {
                    f.write_str("-")?;
                }
                f.write_str(&body)?;
                first = false;
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
                f.write_str(&body)?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNum({self})")
    }
}

struct Parser<'s> {
    src: &'s [u8],
    pos: usize,
}

impl<'s> Parser<'s> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, CycError> {
        Err(CycError::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn uint(&mut self) -> Result<BigInt, CycError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse as BigInt"))
    }

    fn zpart(&mut self) -> Result<CycNum, CycError> {
        // caller has seen 'z'
        self.pos += 1;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.uint()?;
            let k: BigInt = e.mod_floor(&BigInt::from(12));
            let k: i64 = k.try_into().expect("value below 12");
            Ok(CycNum::zeta_pow(k))
        } else {
            Ok(CycNum::zeta())
        }
    }

    fn term(&mut self) -> Result<CycNum, CycError> {
        let mut negative = false;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            negative = true;
        }
        let value = match self.peek() {
            Some(b'z') => self.zpart()?,
            Some(c) if c.is_ascii_digit() => {
                let num = self.uint()?;
                let mut r = BigRational::from_integer(num);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let den = self.uint()?;
                    if den.is_zero() {
                        return self.err("zero denominator");
                    }
                    r /= BigRational::from_integer(den);
                }
                let coeff = CycNum::from_rational(r);
                match self.peek() {
                    Some(b'*') => {
                        self.pos += 1;
                        if self.peek() != Some(b'z') {
                            return self.err("expected 'z' after '*'");
                        }
                        &coeff * &self.zpart()?
                    }
                    Some(b'z') => &coeff * &self.zpart()?,
                    _ => coeff,
                }
            }
            Some(_) => return self.err("expected a number or 'z'"),
            None => return self.err("unexpected end of input"),
        };
        Ok(if negative { -value } else { value })
    }

    fn expr(&mut self) -> Result<CycNum, CycError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                None => return Ok(acc),
                Some(b'+') => {
                    self.pos += 1;
                    acc += self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc -= self.term()?;
                }
                Some(_) => return self.err("expected '+' or '-'"),
            }
        }
    }
}

impl FromStr for CycNum {
    type Err = CycError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Parser {
            src: s.as_bytes(),
            pos: 0,
        }
        .expr()
    }
}

impl serde::Serialize for CycNum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for CycNum {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
