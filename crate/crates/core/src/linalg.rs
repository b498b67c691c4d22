//! Sparse exact linear algebra over any [`Field`].
//!
//! Vectors are finitely supported maps `index -> scalar`; operators store the
//! image of every basis vector. Echelon bases are kept fully reduced with the
//! pivot of each row at its lowest nonzero index, so two equal subspaces
//! always produce identical bases.

use std::collections::BTreeMap;

use crate::field::Field;

/// A finitely supported vector. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseVec<F> {
    entries: BTreeMap<usize, F>,
}

impl<F: Field> Default for SparseVec<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<F: Field> SparseVec<F> {
    pub fn zero() -> Self {
        SparseVec {
            entries: BTreeMap::new(),
        }
    }

    pub fn unit(i: usize) -> Self {
        let mut v = Self::zero();
        v.entries.insert(i, F::one());
        v
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, F)>) -> Self {
        let mut v = Self::zero();
        for (i, c) in pairs {
            v.add_term(i, &c);
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<&F> {
        self.entries.get(&i)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &F)> {
        self.entries.iter().map(|(&i, c)| (i, c))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.keys().copied()
    }

    /// Lowest index with a nonzero coefficient.
    pub fn leading(&self) -> Option<(usize, &F)> {
        self.entries.iter().next().map(|(&i, c)| (i, c))
    }

    pub fn add_term(&mut self, i: usize, c: &F) {
        if c.is_zero() {
            return;
        }
        match self.entries.get_mut(&i) {
            Some(x) => {
                *x = x.add_ref(c);
                if x.is_zero() {
                    self.entries.remove(&i);
                }
            }
            None => {
                self.entries.insert(i, c.clone());
            }
        }
    }

    /// `self += s * other`
    pub fn add_scaled(&mut self, other: &Self, s: &F) {
        if s.is_zero() {
            return;
        }
        for (&i, c) in &other.entries {
            match self.entries.get_mut(&i) {
                Some(x) => {
                    x.add_mul_assign(c, s);
                    if x.is_zero() {
                        self.entries.remove(&i);
                    }
                }
                None => {
                    self.entries.insert(i, c.mul_ref(s));
                }
            }
        }
    }

    pub fn add_vec(&mut self, other: &Self) {
        self.add_scaled(other, &F::one());
    }

    pub fn sub_vec(&mut self, other: &Self) {
        self.add_scaled(other, &-F::one());
    }

    pub fn scaled(&self, s: &F) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        SparseVec {
            entries: self.entries.iter().map(|(&i, c)| (i, c.mul_ref(s))).collect(),
        }
    }

    /// Applies `f(i)` as a diagonal scaling.
    pub fn scaled_by(&self, mut f: impl FnMut(usize) -> F) -> Self {
        Self::from_pairs(self.entries.iter().map(|(&i, c)| (i, c.mul_ref(&f(i)))))
    }
}

/// A linear endomorphism of `F^n`, stored column by column.
#[derive(Clone, Debug, PartialEq)]
pub struct Operator<F> {
    cols: Vec<SparseVec<F>>,
}

impl<F: Field> Operator<F> {
    pub fn zero(n: usize) -> Self {
        Operator {
            cols: vec![SparseVec::zero(); n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Operator {
            cols: (0..n).map(SparseVec::unit).collect(),
        }
    }

    pub fn from_columns(cols: Vec<SparseVec<F>>) -> Self {
        Operator { cols }
    }

    pub fn diagonal(n: usize, mut f: impl FnMut(usize) -> F) -> Self {
        Operator {
            cols: (0..n)
                .map(|i| SparseVec::from_pairs([(i, f(i))]))
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &SparseVec<F> {
        &self.cols[j]
    }

    pub fn apply(&self, v: &SparseVec<F>) -> SparseVec<F> {
        let mut out = SparseVec::zero();
        for (j, c) in v.iter() {
            out.add_scaled(&self.cols[j], c);
        }
        out
    }

    /// `self ∘ rhs`
    pub fn compose(&self, rhs: &Self) -> Self {
        Operator {
            cols: rhs.cols.iter().map(|c| self.apply(c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::identity(self.dim());
        for _ in 0..k {
            acc = self.compose(&acc);
        }
        acc
    }

    pub fn add_op(&self, rhs: &Self) -> Self {
        self.lin_comb(&F::one(), rhs, &F::one())
    }

    pub fn sub_op(&self, rhs: &Self) -> Self {
        self.lin_comb(&F::one(), rhs, &-F::one())
    }

    pub fn scaled(&self, s: &F) -> Self {
        Operator {
            cols: self.cols.iter().map(|c| c.scaled(s)).collect(),
        }
    }

    /// `a * self + b * rhs`
    pub fn lin_comb(&self, a: &F, rhs: &Self, b: &F) -> Self {
        Operator {
            cols: self
                .cols
                .iter()
                .zip(&rhs.cols)
                .map(|(x, y)| {
                    let mut c = x.scaled(a);
                    c.add_scaled(y, b);
                    c
                })
                .collect(),
        }
    }

    /// Number of nonzero matrix entries.
    pub fn nnz(&self) -> usize {
        self.cols.iter().map(SparseVec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(SparseVec::is_zero)
    }
}

/// A subspace kept as a fully reduced row-echelon basis.
#[derive(Clone, Debug, PartialEq)]
pub struct EchelonBasis<F> {
    /// pivot index -> row with coefficient one at the pivot and zero at every
    /// other pivot
    rows: BTreeMap<usize, SparseVec<F>>,
}

impl<F: Field> Default for EchelonBasis<F> {
    fn default() -> Self {
        Self::new()
    }
}

impl<F: Field> EchelonBasis<F> {
    pub fn new() -> Self {
        EchelonBasis {
            rows: BTreeMap::new(),
        }
    }

    pub fn spanned_by<'a>(vs: impl IntoIterator<Item = &'a SparseVec<F>>) -> Self
    where
        F: 'a,
    {
        let mut b = Self::new();
        for v in vs {
            b.insert(v);
        }
        b
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn is_pivot(&self, i: usize) -> bool {
        self.rows.contains_key(&i)
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseVec<F>> {
        self.rows.values()
    }

    /// The canonical representative of `v` modulo the subspace: all pivot
    /// coordinates cleared.
    pub fn reduce(&self, v: &SparseVec<F>) -> SparseVec<F> {
        let mut r = v.clone();
        for (&p, row) in &self.rows {
            if let Some(c) = r.get(p).cloned() {
                r.add_scaled(row, &-c);
            }
        }
        r
    }

    pub fn contains(&self, v: &SparseVec<F>) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &SparseVec<F>) -> bool {
        let r = self.reduce(v);
        let Some((p, lead)) = r.leading() else {
            return false;
        };
        let inv = lead.try_inv().expect("leading coefficient is nonzero");
        let r = r.scaled(&inv);
        for row in self.rows.values_mut() {
            if let Some(c) = row.get(p).cloned() {
                row.add_scaled(&r, &-c);
            }
        }
        self.rows.insert(p, r);
        true
    }

    pub fn contains_space(&self, other: &Self) -> bool {
        other.rows().all(|v| self.contains(v))
    }
}

/// A basis of the null space of the map `e_j -> columns[j]`, as coefficient
/// vectors indexed by column position.
pub fn kernel<F: Field>(columns: &[SparseVec<F>]) -> Vec<SparseVec<F>> {
    // pivot index -> (reduced image, combination producing it)
    let mut pivots: BTreeMap<usize, (SparseVec<F>, SparseVec<F>)> = BTreeMap::new();
    let mut out = Vec::new();
    for (j, col) in columns.iter().enumerate() {
        let mut img = col.clone();
        let mut combo = SparseVec::unit(j);
        loop {
            let next = img
                .support()
                .find(|i| pivots.contains_key(i));
            let Some(p) = next else { break };
            let (pimg, pcombo) = &pivots[&p];
            let c = img.get(p).cloned().expect("pivot present");
            let s = -(c.mul_ref(&pimg.get(p).expect("pivot").try_inv().expect("nonzero")));
            img.add_scaled(pimg, &s);
            combo.add_scaled(pcombo, &s);
        }
        match img.leading() {
            None => out.push(combo),
            Some((p, _)) => {
                pivots.insert(p, (img, combo));
            }
        }
    }
    out
}

/// Rank of a family of vectors.
pub fn rank<'a, F: Field + 'a>(vs: impl IntoIterator<Item = &'a SparseVec<F>>) -> usize {
    EchelonBasis::spanned_by(vs).dim()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn v(xs: &[i64]) -> SparseVec<BigRational> {
        SparseVec::from_pairs(xs.iter().enumerate().map(|(i, &x)| (i, q(x))))
    }

    #[test]
    fn echelon_is_canonical() {
        let a = EchelonBasis::spanned_by([&v(&[1, 2, 3]), &v(&[0, 1, 1])]);
        let b = EchelonBasis::spanned_by([&v(&[1, 3, 4]), &v(&[2, 4, 6]), &v(&[1, 1, 2])]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
        assert!(a.contains(&v(&[1, 0, 1])));
        assert!(!a.contains(&v(&[0, 0, 1])));
        assert_eq!(a.pivots().collect::<Vec<_>>(), vec![0, 1]);
    }

    #[test]
    fn kernel_of_rank_one_map() {
        let cols = vec![v(&[1, 2]), v(&[2, 4]), v(&[0, 0])];
        let k = kernel(&cols);
        assert_eq!(k.len(), 2);
        for combo in &k {
            let mut img = SparseVec::zero();
            for (j, c) in combo.iter() {
                img.add_scaled(&cols[j], c);
            }
            assert!(img.is_zero());
        }
        assert_eq!(rank(&k), 2);
    }

    #[test]
    fn operator_algebra() {
        // shift e0 -> e1 -> e2 -> 0
        let s = Operator::from_columns(vec![v(&[0, 1, 0]), v(&[0, 0, 1]), v(&[0, 0, 0])]);
        assert!(!s.pow(2).is_zero());
        assert!(s.pow(3).is_zero());
        assert_eq!(s.compose(&Operator::identity(3)), s);
        assert!(s.sub_op(&s).is_zero());
        assert_eq!(s.nnz(), 2);
    }
}
