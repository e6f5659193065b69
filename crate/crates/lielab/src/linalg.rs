//! Sparse exact linear algebra: row reduction, ranks, kernels, span queries.
//!
//! Vectors are sorted coordinate lists ([`SparseVec`]); matrices appear either
//! as a list of columns (the natural shape for coboundary operators, where a
//! column is the image of one basis cochain) or as rows fed into a
//! [`RowReducer`].
//!
//! Determinism contract: every basis returned by this module (row-space bases,
//! kernel bases, intersections) is the *reduced* echelon basis of the subspace
//! in question. Since the reduced echelon basis of a subspace is unique, the
//! output is independent of the order in which rows were supplied, and callers
//! are free to reorder for speed.

use crate::scalar::Scalar;
use std::collections::BTreeMap;

/// Sparse vector: `(index, coefficient)` pairs, sorted by index, no zeros.
pub type SparseVec<S> = Vec<(usize, S)>;

/// Builds a [`SparseVec`] from unordered entries, merging duplicate indices
/// and dropping entries that cancel to zero.
pub fn collect_sparse<S: Scalar>(entries: impl IntoIterator<Item = (usize, S)>) -> SparseVec<S> {
    let mut map: BTreeMap<usize, S> = BTreeMap::new();
    for (i, c) in entries {
        let slot = map.entry(i).or_insert_with(S::zero);
        *slot = slot.clone() + c;
    }
    map.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// Returns `a + f·b` (merge of two sorted sparse vectors).
pub fn add_scaled<S: Scalar>(a: &SparseVec<S>, b: &SparseVec<S>, f: &S) -> SparseVec<S> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i >= a.len() || b[j].0 < a[i].0 {
            let c = f.clone() * b[j].1.clone();
            if !c.is_zero() {
                out.push((b[j].0, c));
            }
            j += 1;
        } else {
            let c = a[i].1.clone() + f.clone() * b[j].1.clone();
            if !c.is_zero() {
                out.push((a[i].0, c));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Multiplies a sparse vector by a nonzero scalar.
pub fn scaled<S: Scalar>(v: &SparseVec<S>, f: &S) -> SparseVec<S> {
    v.iter().map(|(i, c)| (*i, f.clone() * c.clone())).collect()
}

/// Incremental Gaussian elimination over sparse rows.
///
/// Pivot rows are normalized to leading coefficient 1 and stored by leading
/// index. Inserting a row reduces it against existing pivots first, so the
/// reducer's rank is the rank of everything inserted so far.
#[derive(Clone, Debug, Default)]
pub struct RowReducer<S: Scalar> {
    pivots: BTreeMap<usize, SparseVec<S>>,
}

impl<S: Scalar> RowReducer<S> {
    pub fn new() -> Self {
        RowReducer { pivots: BTreeMap::new() }
    }

    /// Reduces `v` against the stored pivots until its leading index (if any)
    /// is pivot-free. The result is zero iff `v` lies in the row space.
    pub fn reduce(&self, mut v: SparseVec<S>) -> SparseVec<S> {
        while let Some((lead, coeff)) = v.first().cloned() {
            match self.pivots.get(&lead) {
                Some(p) => v = add_scaled(&v, p, &-coeff),
                None => break,
            }
        }
        v
    }

    /// Inserts a row; returns its pivot index if it increased the rank.
    pub fn insert(&mut self, v: SparseVec<S>) -> Option<usize> {
        let v = self.reduce(v);
        let (lead, coeff) = v.first().cloned()?;
        let inv = S::one() / coeff;
        self.pivots.insert(lead, scaled(&v, &inv));
        Some(lead)
    }

    /// True iff `v` lies in the span of the inserted rows.
    pub fn contains(&self, v: &SparseVec<S>) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Pivot (leading) indices in increasing order.
    pub fn pivot_columns(&self) -> Vec<usize> {
        self.pivots.keys().copied().collect()
    }

    /// Back-substitutes to the unique reduced echelon basis of the row space,
    /// returned in increasing leading-index order.
    pub fn into_rref(mut self) -> Vec<SparseVec<S>> {
        let leads: Vec<usize> = self.pivots.keys().copied().collect();
        for i in (0..leads.len()).rev() {
            let pivot_row = self.pivots[&leads[i]].clone();
            for lj in leads[..i].iter() {
                let row = self.pivots.get_mut(lj).unwrap();
                if let Ok(pos) = row.binary_search_by_key(&leads[i], |e| e.0) {
                    let c = row[pos].1.clone();
                    *row = add_scaled(row, &pivot_row, &-c);
                }
            }
        }
        self.pivots.into_values().collect()
    }
}

/// Reduced echelon basis of the span of the given vectors.
pub fn span_basis<S: Scalar>(vectors: &[SparseVec<S>]) -> Vec<SparseVec<S>> {
    let mut red = RowReducer::new();
    for v in vectors {
        red.insert(v.clone());
    }
    red.into_rref()
}

/// Transposes a column list into rows, keyed by original row index.
fn transpose<S: Scalar>(cols: &[SparseVec<S>]) -> BTreeMap<usize, SparseVec<S>> {
    let mut rows: BTreeMap<usize, SparseVec<S>> = BTreeMap::new();
    for (j, col) in cols.iter().enumerate() {
        for (i, c) in col {
            rows.entry(*i).or_default().push((j, c.clone()));
        }
    }
    rows
}

/// Rank of the matrix whose columns are given.
///
/// Works on the transposed rows (row rank = column rank), inserting short rows
/// first — on the very sparse coboundary matrices this keeps fill-in low.
pub fn rank_of_columns<S: Scalar>(cols: &[SparseVec<S>]) -> usize {
    let mut rows: Vec<SparseVec<S>> = transpose(cols).into_values().collect();
    rows.sort_by_key(|r| r.len());
    let mut red = RowReducer::new();
    for r in rows {
        red.insert(r);
    }
    red.rank()
}

/// Reduced echelon basis of `{x ∈ S^ncols : row·x = 0 for every row}`.
pub fn kernel_of_rows<S: Scalar>(rows: impl IntoIterator<Item = SparseVec<S>>, ncols: usize) -> Vec<SparseVec<S>> {
    let mut red = RowReducer::new();
    for row in rows {
        red.insert(row);
    }
    let pivot_cols = red.pivot_columns();
    let rref = red.into_rref();
    let is_pivot = {
        let mut flags = vec![false; ncols];
        for &c in &pivot_cols {
            flags[c] = true;
        }
        flags
    };
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v: Vec<(usize, S)> = vec![(free, S::one())];
        for (lead, row) in pivot_cols.iter().zip(&rref) {
            if let Ok(pos) = row.binary_search_by_key(&free, |e| e.0) {
                v.push((*lead, -row[pos].1.clone()));
            }
        }
        v.sort_by_key(|e| e.0);
        basis.push(v);
    }
    span_basis(&basis)
}

/// Reduced echelon basis of the kernel `{x : Σ x_j col_j = 0}` of the matrix
/// with the given columns, as vectors over `0..cols.len()`.
pub fn kernel_of_columns<S: Scalar>(cols: &[SparseVec<S>]) -> Vec<SparseVec<S>> {
    kernel_of_rows(transpose(cols).into_values(), cols.len())
}

/// Expresses `target` as a combination of the given columns, if possible.
///
/// Returns the coefficient vector of the unique representation supported on
/// the leftmost independent columns (all other coefficients zero) — the same
/// particular solution one gets by back-substituting with free variables set
/// to zero. `None` if `target` is outside the column span.
pub fn express_in_span<S: Scalar>(cols: &[SparseVec<S>], target: &SparseVec<S>) -> Option<Vec<S>> {
    let value_bound = cols
        .iter()
        .chain(std::iter::once(target))
        .flat_map(|v| v.iter().map(|e| e.0 + 1))
        .max()
        .unwrap_or(0);
    let mut red: RowReducer<S> = RowReducer::new();
    for (j, col) in cols.iter().enumerate() {
        let mut row = col.clone();
        row.push((value_bound + j, S::one()));
        red.insert(row);
    }
    // Reduce the target only while its leading index is a value coordinate;
    // tag-led pivots (dependency rows) must not be applied.
    let mut v = target.clone();
    while let Some((lead, coeff)) = v.first().cloned() {
        if lead >= value_bound {
            break;
        }
        match red.pivots.get(&lead) {
            Some(p) => v = add_scaled(&v, p, &-coeff),
            None => return None,
        }
    }
    let mut x = vec![S::zero(); cols.len()];
    for (i, c) in v {
        debug_assert!(i >= value_bound, "value residue should be zero");
        x[i - value_bound] = -c;
    }
    Some(x)
}

/// Reduced echelon basis of `span(a) ∩ span(b)`.
pub fn intersect_spans<S: Scalar>(a: &[SparseVec<S>], b: &[SparseVec<S>]) -> Vec<SparseVec<S>> {
    let mut cols: Vec<SparseVec<S>> = a.to_vec();
    cols.extend(b.iter().cloned());
    let mut vectors = Vec::new();
    for w in kernel_of_columns(&cols) {
        // For (x | y) in the kernel, Σ x_i a_i = -Σ y_j b_j lies in both spans.
        let mut v: SparseVec<S> = Vec::new();
        for (idx, c) in &w {
            if *idx < a.len() {
                v = add_scaled(&v, &a[*idx], c);
            }
        }
        if !v.is_empty() {
            vectors.push(v);
        }
    }
    span_basis(&vectors)
}

/// Exact determinant of a dense square matrix by Gaussian elimination.
pub fn det_dense<S: Scalar>(mut m: Vec<Vec<S>>) -> S {
    let n = m.len();
    let mut det = S::one();
    for i in 0..n {
        let Some(p) = (i..n).find(|&r| !m[r][i].is_zero()) else {
            return S::zero();
        };
        if p != i {
            m.swap(p, i);
            det = -det;
        }
        det = det * m[i][i].clone();
        let inv = S::one() / m[i][i].clone();
        for r in i + 1..n {
            if !m[r][i].is_zero() {
                let f = m[r][i].clone() * inv.clone();
                for c in i..n {
                    let sub = f.clone() * m[i][c].clone();
                    m[r][c] = m[r][c].clone() - sub;
                }
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{q, Q};

    fn sv(entries: &[(usize, i64)]) -> SparseVec<Q> {
        entries.iter().map(|&(i, c)| (i, q(c))).collect()
    }

    #[test]
    fn add_scaled_merges_and_cancels() {
        let a = sv(&[(0, 1), (2, 3)]);
        let b = sv(&[(0, 1), (1, 2), (2, -3)]);
        assert_eq!(add_scaled(&a, &b, &q(1)), sv(&[(0, 2), (1, 2)]));
        assert_eq!(add_scaled(&a, &a, &q(-1)), sv(&[]));
    }

    #[test]
    fn rank_and_kernel_of_small_matrix() {
        // Columns of [[1,1,0],[0,1,1]] over rows {0,1}.
        let cols = vec![sv(&[(0, 1)]), sv(&[(0, 1), (1, 1)]), sv(&[(1, 1)])];
        assert_eq!(rank_of_columns(&cols), 2);
        let kern = kernel_of_columns(&cols);
        assert_eq!(kern, vec![sv(&[(0, 1), (1, -1), (2, 1)])], "canonical kernel basis");
    }

    #[test]
    fn kernel_basis_is_reduced_echelon() {
        // Zero matrix: kernel is everything, basis must be the identity vectors.
        let cols = vec![sv(&[]), sv(&[]), sv(&[])];
        assert_eq!(
            kernel_of_columns(&cols),
            vec![sv(&[(0, 1)]), sv(&[(1, 1)]), sv(&[(2, 1)])]
        );
    }

    #[test]
    fn express_in_span_prefers_leftmost_columns() {
        let cols = vec![sv(&[(0, 1)]), sv(&[(0, 2)]), sv(&[(1, 1)])];
        let x = express_in_span(&cols, &sv(&[(0, 4), (1, 5)])).unwrap();
        assert_eq!(x, vec![q(4), q(0), q(5)], "free variables stay zero");
        assert!(express_in_span(&cols[..2].to_vec(), &sv(&[(1, 1)])).is_none());
    }

    #[test]
    fn intersection_of_planes() {
        // span{e0,e1} ∩ span{e1,e2} = span{e1}.
        let a = vec![sv(&[(0, 1)]), sv(&[(1, 1)])];
        let b = vec![sv(&[(1, 1)]), sv(&[(2, 1)])];
        assert_eq!(intersect_spans(&a, &b), vec![sv(&[(1, 1)])]);
    }

    #[test]
    fn rref_is_canonical_under_row_order() {
        let rows1 = vec![sv(&[(0, 2), (1, 4)]), sv(&[(1, 3), (2, 1)])];
        let rows2 = vec![sv(&[(1, 3), (2, 1)]), sv(&[(0, 1), (1, 2), (2, 7)])];
        // rows2[1] = rows1[0]/2 + 7·e2-ish combination; both sets span the same space.
        let s1 = span_basis(&rows1);
        let combo = add_scaled(&scaled(&rows1[0], &q_half()), &rows1[1], &q(7));
        let rows2 = vec![rows2[0].clone(), combo];
        let s2 = span_basis(&rows2);
        assert_eq!(s1, s2, "reduced echelon basis is unique per subspace");
    }

    fn q_half() -> Q {
        crate::q_ratio(1, 2)
    }

    #[test]
    fn det_dense_matches_cofactor_values() {
        let m = vec![vec![q(1), q(2)], vec![q(3), q(4)]];
        assert_eq!(det_dense(m), q(-2));
        let sing = vec![vec![q(1), q(2)], vec![q(2), q(4)]];
        assert_eq!(det_dense(sing), q(0));
    }
}
