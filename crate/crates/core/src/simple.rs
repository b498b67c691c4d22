//! The maximal submodule `N(λ)` and the simple head `L(λ) = M(λ)/N(λ)`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{BraidingData, Degree, RootLetter, PBW_DIM};
use crate::cyclotomic::CycNum;
use crate::linalg::{kernel, EchelonBasis, SparseVec};
use crate::verma::{build_verma, group_scalar, GroupGen, ModuleVector, VermaModule};
use crate::weights::{classify, representative, shapovalov, FamilyId, Table1Row, WeightError, WeightParams};

/// A graded subspace of `M(λ)`, one echelon basis per degree.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct GradedSubspace {
    parts: BTreeMap<Degree, EchelonBasis<CycNum>>,
}

impl GradedSubspace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.parts.values().map(EchelonBasis::dim).sum()
    }

    pub fn dim_at(&self, d: Degree) -> usize {
        self.parts.get(&d).map_or(0, EchelonBasis::dim)
    }

    pub fn part(&self, d: Degree) -> Option<&EchelonBasis<CycNum>> {
        self.parts.get(&d)
    }

    pub fn parts(&self) -> impl Iterator<Item = (Degree, &EchelonBasis<CycNum>)> {
        self.parts.iter().map(|(d, b)| (*d, b))
    }

    fn set(&mut self, d: Degree, b: EchelonBasis<CycNum>) {
        if b.dim() > 0 {
            self.parts.insert(d, b);
        }
    }

    /// Reduction modulo the subspace, degree by degree.
    pub fn reduce(&self, m: &VermaModule, v: &ModuleVector) -> ModuleVector {
        let mut out = SparseVec::zero();
        for (d, piece) in split_by_degree(m, v) {
            let r = match self.parts.get(&d) {
                Some(b) => b.reduce(&piece),
                None => piece,
            };
            out.add_vec(&r);
        }
        out
    }

    pub fn contains(&self, m: &VermaModule, v: &ModuleVector) -> bool {
        self.reduce(m, v).is_zero()
    }
}

/// Splits a vector into homogeneous components.
pub fn split_by_degree(m: &VermaModule, v: &ModuleVector) -> BTreeMap<Degree, ModuleVector> {
    let mut out: BTreeMap<Degree, ModuleVector> = BTreeMap::new();
    for (i, c) in v.iter() {
        out.entry(m.degree(i)).or_default().add_term(i, c);
    }
    out
}

/// The largest graded submodule not containing `v_λ`.
///
/// Degree by degree, `N_β` is the set of `v ∈ M_β` with `F_i v ∈ N_{β-α_i}`.
pub fn maximal_submodule(m: &VermaModule) -> GradedSubspace {
    let mut degs: Vec<Degree> = m.degrees().collect();
    degs.sort_by_key(|d| (d.total(), *d));
    let mut n = GradedSubspace::new();
    for d in degs {
        if d == Degree::ZERO {
            continue;
        }
        let idx = m.degree_index(d);
        let cols: Vec<ModuleVector> = idx
            .iter()
            .map(|&j| {
                let e = SparseVec::unit(j);
                let mut col = SparseVec::zero();
                for i in 1..=2 {
                    let img = m.f(i).apply(&e);
                    if img.is_zero() {
                        continue;
                    }
                    let below = d - Degree::alpha(i);
                    let r = match n.part(below) {
                        Some(b) => b.reduce(&img),
                        None => img,
                    };
                    col.add_vec(&r);
                }
                col
            })
            .collect();
        let mut basis = EchelonBasis::new();
        for combo in kernel(&cols) {
            let v = SparseVec::from_pairs(combo.iter().map(|(k, c)| (idx[k], c.clone())));
            basis.insert(&v);
        }
        n.set(d, basis);
    }
    n
}

/// Whether `N` is stable under `E1, E2, F1, F2` and misses `v_λ`.
pub fn is_submodule(m: &VermaModule, n: &GradedSubspace) -> bool {
    if n.dim_at(Degree::ZERO) != 0 {
        return false;
    }
    let ops = [
        m.e(RootLetter::E1),
        m.e(RootLetter::E2),
        m.f(1),
        m.f(2),
    ];
    n.parts()
        .flat_map(|(_, b)| b.rows())
        .all(|v| ops.iter().all(|op| n.contains(m, &op.apply(v))))
}

/// The complement of `N_β` spanned by non-pivot basis monomials.
pub fn quotient_basis(m: &VermaModule, n: &GradedSubspace, d: Degree) -> Vec<usize> {
    let idx = m.degree_index(d);
    match n.part(d) {
        Some(b) => idx.iter().copied().filter(|&i| !b.is_pivot(i)).collect(),
        None => idx.to_vec(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleReport {
    pub family: FamilyId,
    pub lambda1: CycNum,
    pub lambda2: CycNum,
    pub dim: usize,
    pub graded_dims: BTreeMap<Degree, usize>,
    pub max_degree: Degree,
    /// `(μ1, μ2)`, the values of `g_iσ_i` on the top degree of `L(λ)`
    pub hw_weight: (CycNum, CycNum),
    pub phi_family: FamilyId,
}

/// Graded dimensions of `M(λ)/N`.
pub fn graded_dims(m: &VermaModule, n: &GradedSubspace) -> BTreeMap<Degree, usize> {
    m.degrees()
        .filter_map(|d| {
            let k = m.degree_index(d).len() - n.dim_at(d);
            (k > 0).then_some((d, k))
        })
        .collect()
}

/// The largest degree of `L`, in the order of the total degree and then `b1`.
pub fn top_degree(dims: &BTreeMap<Degree, usize>) -> Degree {
    *dims
        .keys()
        .max_by_key(|d| (d.total(), d.b1))
        .expect("L(λ) is nonzero")
}

pub fn simple_report(p: &WeightParams) -> Result<SimpleReport, WeightError> {
    let m = build_verma(p);
    let n = maximal_submodule(&m);
    report_from(&m, &n)
}

pub fn report_from(m: &VermaModule, n: &GradedSubspace) -> Result<SimpleReport, WeightError> {
    let p = m.params();
    let (l1, l2) = (p.lambda1(), p.lambda2());
    let family = classify(&l1, &l2)?;
    let dims = graded_dims(m, n);
    let top = top_degree(&dims);
    let mu = |g, s| group_scalar(g, top, p) * group_scalar(s, top, p);
    let mu1 = mu(GroupGen::G1, GroupGen::S1);
    let mu2 = mu(GroupGen::G2, GroupGen::S2);
    let phi_family = classify(
        &mu1.inv().map_err(|_| WeightError::ZeroValue)?,
        &mu2.inv().map_err(|_| WeightError::ZeroValue)?,
    )?;
    Ok(SimpleReport {
        family,
        lambda1: l1,
        lambda2: l2,
        dim: dims.values().sum(),
        graded_dims: dims,
        max_degree: top,
        hw_weight: (mu1, mu2),
        phi_family,
    })
}

/// Whether the top degree of `L` is one-dimensional and killed by `E1`, `E2`.
pub fn check_top_is_simple(m: &VermaModule, n: &GradedSubspace) -> bool {
    let dims = graded_dims(m, n);
    let top = top_degree(&dims);
    if dims[&top] != 1 {
        return false;
    }
    let dominated = dims.keys().all(|d| d.b1 <= top.b1 && d.b2 <= top.b2);
    let v = SparseVec::unit(quotient_basis(m, n, top)[0]);
    dominated
        && [RootLetter::E1, RootLetter::E2]
            .iter()
            .all(|&l| n.contains(m, &m.e(l).apply(&v)))
}

/// The `σ`-values used for the splitting checks.
pub fn splittings() -> [(CycNum, CycNum); 3] {
    [
        (CycNum::one(), CycNum::one()),
        (CycNum::from_int(3), CycNum::frac(-1, 2)),
        (CycNum::zeta(), CycNum::frac(2, 5)),
    ]
}

/// The `q12` values used for the braiding checks.
pub fn braidings() -> [BraidingData; 3] {
    [CycNum::one(), CycNum::zeta(), CycNum::zeta_pow(5)]
        .map(|q| BraidingData::new(q).expect("unit"))
}

/// Reports for every splitting of `(λ1, λ2)` and every braiding.
pub fn split_reports(l1: &CycNum, l2: &CycNum) -> Result<Vec<SimpleReport>, WeightError> {
    let mut out = Vec::new();
    for q in braidings() {
        for (s1, s2) in splittings() {
            out.push(simple_report(&WeightParams::split(l1, l2, s1, s2, q.clone())?)?);
        }
    }
    Ok(out)
}

pub fn is_split_invariant(l1: &CycNum, l2: &CycNum) -> Result<bool, WeightError> {
    let r = split_reports(l1, l2)?;
    Ok(r.windows(2).all(|w| w[0] == w[1]))
}

/// `Sh(λ) ≠ 0` against `dim L(λ) = 144`.
pub fn shapovalov_agrees(l1: &CycNum, l2: &CycNum) -> Result<bool, WeightError> {
    let sh = shapovalov(l1, l2)?;
    let dim = simple_report(&WeightParams::from_lambdas(l1.clone(), l2.clone())?)?.dim;
    Ok(!sh.is_zero() == (dim == PBW_DIM))
}

/// `φ` on the rows: an involution preserving dimensions.
pub fn phi_is_involution(rows: &[Table1Row]) -> bool {
    let find = |f: FamilyId| rows.iter().find(|r| r.family == f);
    rows.iter().all(|r| match find(r.phi_family) {
        Some(t) => t.phi_family == r.family && t.dim == r.dim,
        None => false,
    })
}

/// The row computed from the representative weight.
pub fn computed_row(f: FamilyId) -> Table1Row {
    let r = simple_report(&representative(f)).expect("representatives classify");
    Table1Row {
        family: r.family,
        dim: r.dim,
        max_degree: r.max_degree,
        phi_family: r.phi_family,
    }
}
