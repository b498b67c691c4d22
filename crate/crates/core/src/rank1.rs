//! Simple modules of the rank-one double (`u_q(sl2)`-like) at a root of
//! unity `q` of order `N` inside `Q(ζ12)`.
//!
//! `M(λ)` has basis `E^k v`, `0 ≤ k < N`, with `F v = 0` and
//! `F E^j v = (j)_q (q^{1-j} λ(σ)^{-1} - λ(g)) E^{j-1} v`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cyclotomic::CycNum;
use crate::linalg::{EchelonBasis, Operator, SparseVec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Rank1Error {
    #[error("N must be one of 2, 3, 4, 6, 12, got {0}")]
    BadOrder(u32),
    #[error("q = {q} is not a primitive root of unity of order {n}")]
    NotPrimitive { q: Box<CycNum>, n: u32 },
    #[error("λ must be nonzero")]
    ZeroLambda,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rank1Params {
    pub n: u32,
    pub q: CycNum,
    /// `λ(gσ)`
    pub lam: CycNum,
}

pub const ORDERS: [u32; 5] = [2, 3, 4, 6, 12];

impl Rank1Params {
    pub fn new(n: u32, q: CycNum, lam: CycNum) -> Result<Self, Rank1Error> {
        if !ORDERS.contains(&n) {
            return Err(Rank1Error::BadOrder(n));
        }
        if q.root_of_unity_order() != Some(n) {
            return Err(Rank1Error::NotPrimitive { q: Box::new(q), n });
        }
        if lam.is_zero() {
            return Err(Rank1Error::ZeroLambda);
        }
        Ok(Rank1Params { n, q, lam })
    }

    fn q_pow(&self, k: i64) -> CycNum {
        self.q.pow(k).expect("q is a unit")
    }
}

/// The primitive roots of unity of order `n` in `Q(ζ12)`.
pub fn primitive_roots(n: u32) -> Vec<CycNum> {
    (0..12)
        .map(CycNum::zeta_pow)
        .filter(|z| z.root_of_unity_order() == Some(n))
        .collect()
}

/// The least `j ≥ 1` with `λ = q^{1-j}`, capped at `N`.
pub fn rank1_dim(p: &Rank1Params) -> usize {
    (1..p.n as i64)
        .find(|&j| p.lam == p.q_pow(1 - j))
        .map_or(p.n as usize, |j| j as usize)
}

/// `E` and `F` on the Verma module for the split `λ(g) = lg`, `λ(σ) = ls`.
pub fn rank1_verma(p: &Rank1Params, lg: &CycNum, ls: &CycNum) -> (Operator<CycNum>, Operator<CycNum>) {
    let n = p.n as usize;
    let ls_inv = ls.inv().expect("λ(σ) ≠ 0");
    let e = Operator::from_columns(
        (0..n)
            .map(|k| if k + 1 < n { SparseVec::unit(k + 1) } else { SparseVec::zero() })
            .collect(),
    );
    let f = Operator::from_columns(
        (0..n)
            .map(|j| {
                if j == 0 {
                    return SparseVec::zero();
                }
                let c = CycNum::q_integer(&p.q, j as u32)
                    * (p.q_pow(1 - j as i64) * ls_inv.clone() - lg.clone());
                SparseVec::from_pairs([(j - 1, c)])
            })
            .collect(),
    );
    (e, f)
}

/// The radical of the Verma module: degree by degree, the vectors sent by `F`
/// into the radical one step down.
pub fn rank1_radical(f: &Operator<CycNum>) -> EchelonBasis<CycNum> {
    let mut rad = EchelonBasis::new();
    for j in 1..f.dim() {
        let img = rad.reduce(&f.apply(&SparseVec::unit(j)));
        if img.is_zero() {
            rad.insert(&SparseVec::unit(j));
        }
    }
    rad
}

/// Dimension of the simple quotient, computed from the module itself.
pub fn rank1_oracle(p: &Rank1Params) -> usize {
    let (_, f) = rank1_verma(p, &p.lam, &CycNum::one());
    p.n as usize - rank1_radical(&f).dim()
}

/// The action on `v_i = E^i v` in `L(λ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rank1Action {
    pub dim: usize,
    /// `F v_i = f[i] v_{i-1}`, with `f[0] = 0`
    pub f: Vec<CycNum>,
    /// `g v_i = g[i] v_i`
    pub g: Vec<CycNum>,
    /// `σ v_i = s[i] v_i`
    pub s: Vec<CycNum>,
}

pub fn rank1_basis_action(p: &Rank1Params, lg: &CycNum, ls: &CycNum) -> Rank1Action {
    let dim = rank1_dim(p);
    let ls_inv = ls.inv().expect("λ(σ) ≠ 0");
    let f = (0..dim)
        .map(|i| {
            let i = i as i64;
            CycNum::q_integer(&p.q, i as u32) * (p.q_pow(1 - i) * ls_inv.clone() - lg.clone())
        })
        .collect();
    let g = (0..dim).map(|i| lg * &p.q_pow(i as i64)).collect();
    let s = (0..dim).map(|i| ls * &p.q_pow(i as i64)).collect();
    Rank1Action { dim, f, g, s }
}

/// Compares the closed-form action with the quotient of the Verma module,
/// and checks that `E v_{d-1}` lies in the radical.
pub fn check_basis_action(p: &Rank1Params, lg: &CycNum, ls: &CycNum) -> bool {
    let act = rank1_basis_action(p, lg, ls);
    let (e, f) = rank1_verma(p, lg, ls);
    let rad = rank1_radical(&f);
    if p.n as usize - rad.dim() != act.dim {
        return false;
    }
    let f_ok = (0..act.dim).all(|i| {
        let img = rad.reduce(&f.apply(&SparseVec::unit(i)));
        let want = if i == 0 {
            SparseVec::zero()
        } else {
            SparseVec::from_pairs([(i - 1, act.f[i].clone())])
        };
        img == want
    });
    let top = e.apply(&SparseVec::unit(act.dim - 1));
    f_ok && rad.contains(&top)
}

/// `v, Ev, ..., E^{n-1}v` stay independent in `L(λ)` for `n = dim L(λ)`.
pub fn lowest_weight_independent(p: &Rank1Params) -> bool {
    let (e, f) = rank1_verma(p, &p.lam, &CycNum::one());
    let rad = rank1_radical(&f);
    let n = rank1_dim(p);
    let mut v = SparseVec::unit(0);
    let mut span = rad.clone();
    for _ in 0..n {
        if !span.insert(&v) {
            return false;
        }
        v = e.apply(&v);
    }
    true
}

/// `λ` values for the exhaustive check: all powers of `q`, then a few others.
pub fn test_lambdas(p_q: &CycNum, n: u32) -> Vec<CycNum> {
    let mut out: Vec<CycNum> = (0..n as i64).map(|k| p_q.pow(k).expect("unit")).collect();
    out.push(CycNum::from_int(2));
    out.push(CycNum::from_int(-2));
    out.push(CycNum::zeta() + CycNum::one());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: u32, q: CycNum, lam: CycNum) -> Rank1Params {
        Rank1Params::new(n, q, lam).unwrap()
    }

    #[test]
    fn examples() {
        let m1 = CycNum::from_int(-1);
        assert_eq!(rank1_dim(&params(2, m1.clone(), CycNum::one())), 1);
        assert_eq!(rank1_dim(&params(3, CycNum::zeta_pow(4), CycNum::from_int(5))), 3);
        assert_eq!(rank1_dim(&params(4, CycNum::zeta_pow(3), CycNum::zeta_pow(9))), 2);
        assert_eq!(rank1_dim(&params(2, m1.clone(), m1.clone())), 2);
        assert_eq!(rank1_dim(&params(6, CycNum::zeta_pow(2), CycNum::zeta_pow(2))), 6);
    }

    #[test]
    fn invalid_params() {
        assert_eq!(Rank1Params::new(5, CycNum::one(), CycNum::one()), Err(Rank1Error::BadOrder(5)));
        assert!(matches!(
            Rank1Params::new(4, CycNum::zeta(), CycNum::one()),
            Err(Rank1Error::NotPrimitive { .. })
        ));
        assert_eq!(
            Rank1Params::new(4, CycNum::zeta_pow(3), CycNum::zero()),
            Err(Rank1Error::ZeroLambda)
        );
    }

    #[test]
    fn primitive_root_counts() {
        let counts: Vec<usize> = ORDERS.iter().map(|&n| primitive_roots(n).len()).collect();
        assert_eq!(counts, [1, 2, 2, 2, 4]);
    }

    #[test]
    fn formula_agrees_with_oracle() {
        for n in ORDERS {
            for q in primitive_roots(n) {
                for lam in test_lambdas(&q, n) {
                    let p = params(n, q.clone(), lam);
                    let d = rank1_dim(&p);
                    assert_eq!(d, rank1_oracle(&p), "{p:?}");
                    assert!((1..=n as usize).contains(&d));
                    assert!(lowest_weight_independent(&p));
                }
            }
        }
    }

    #[test]
    fn basis_action() {
        let q = CycNum::zeta_pow(3);
        for lam in test_lambdas(&q, 4) {
            let p = params(4, q.clone(), lam.clone());
            let ls = CycNum::from_int(3);
            let lg = &lam * &ls.inv().unwrap();
            assert!(check_basis_action(&p, &lg, &ls));
            let act = rank1_basis_action(&p, &lg, &ls);
            assert!(act.f[0].is_zero());
            if act.dim > 1 {
                assert_eq!(act.f[1], ls.inv().unwrap() * (CycNum::one() - lam.clone()));
            }
        }
    }
}
