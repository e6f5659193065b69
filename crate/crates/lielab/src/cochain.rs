//! Cochain complexes and coboundary operators.
//!
//! Two complexes are built over a [`LieAlgebra`]:
//!
//! * the alternating complex `C^k = V ⊗ Λ^k g*` with the standard coboundary
//!   `d` in every degree, and
//! * the tensor complex `CL^k = V ⊗ (g*)^{⊗k}` in degrees 1–3 with the
//!   Leibniz coboundary `δ` (degree-3 cochains appear only as the target of
//!   `δ₂`).
//!
//! Coefficients `V` are either the scalars (trivial action) or the algebra
//! itself (adjoint action). On alternating cochains `δ` restricts to `d`; the
//! inclusion maps that express this are also provided and are checked
//! column-by-column in the tests.
//!
//! Basis ordering contract: a cochain basis element is a pair (index tuple,
//! value index); elements are ordered lexicographically by tuple first, then
//! by value index. This fixes the row/column numbering of every matrix.

use crate::algebra::LieAlgebra;
use crate::linalg::{self, collect_sparse, SparseVec};
use crate::Q;
use serde::Serialize;

/// Coefficient module for a complex: scalars or the adjoint module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Coefficients {
    Trivial,
    Adjoint,
}

/// Which complex a basis belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComplexKind {
    /// Alternating cochains: strictly increasing index tuples.
    Alternating,
    /// Tensor cochains: arbitrary index tuples.
    Tensor,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CochainError {
    #[error("degree {degree} out of range (accepted: {accepted})")]
    DegreeOutOfRange { degree: usize, accepted: String },
}

/// An indexed basis of `C^k` or `CL^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CochainBasis {
    pub kind: ComplexKind,
    pub coefficients: Coefficients,
    pub degree: usize,
    /// Dimension of the underlying algebra.
    pub n: usize,
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

impl CochainBasis {
    pub fn value_dim(&self) -> usize {
        match self.coefficients {
            Coefficients::Trivial => 1,
            Coefficients::Adjoint => self.n,
        }
    }

    /// Number of index tuples (not counting the value factor).
    pub fn tuple_count(&self) -> usize {
        match self.kind {
            ComplexKind::Alternating => binomial(self.n, self.degree),
            ComplexKind::Tensor => self.n.pow(self.degree as u32),
        }
    }

    /// Total basis size.
    pub fn dim(&self) -> usize {
        self.tuple_count() * self.value_dim()
    }

    /// Lexicographic rank of a sorted subset (alternating) or a tuple (tensor).
    pub fn tuple_index(&self, tuple: &[usize]) -> usize {
        debug_assert_eq!(tuple.len(), self.degree);
        match self.kind {
            ComplexKind::Tensor => tuple.iter().fold(0, |acc, &t| acc * self.n + t),
            ComplexKind::Alternating => {
                // Count subsets lexicographically smaller.
                let mut rank = 0;
                let mut prev: isize = -1;
                for (pos, &s) in tuple.iter().enumerate() {
                    for v in (prev + 1) as usize..s {
                        rank += binomial(self.n - v - 1, self.degree - pos - 1);
                    }
                    prev = s as isize;
                }
                rank
            }
        }
    }

    /// Combined basis index of (tuple, value).
    pub fn index_of(&self, tuple: &[usize], value: usize) -> usize {
        self.tuple_index(tuple) * self.value_dim() + value
    }

    /// Inverse of [`CochainBasis::index_of`].
    pub fn element_at(&self, index: usize) -> (Vec<usize>, usize) {
        let m = self.value_dim();
        let (mut t, value) = (index / m, index % m);
        match self.kind {
            ComplexKind::Tensor => {
                let mut tuple = vec![0; self.degree];
                for slot in (0..self.degree).rev() {
                    tuple[slot] = t % self.n;
                    t /= self.n;
                }
                (tuple, value)
            }
            ComplexKind::Alternating => {
                let mut tuple = Vec::with_capacity(self.degree);
                let mut next = 0;
                for pos in 0..self.degree {
                    loop {
                        let block = binomial(self.n - next - 1, self.degree - pos - 1);
                        if t < block {
                            tuple.push(next);
                            next += 1;
                            break;
                        }
                        t -= block;
                        next += 1;
                    }
                }
                (tuple, value)
            }
        }
    }
}

/// A coboundary operator as a sparse column list (column `j` is the image of
/// source basis element `j` in target coordinates).
#[derive(Debug, Clone)]
pub struct CoboundaryMatrix {
    pub source: CochainBasis,
    pub target: CochainBasis,
    pub columns: Vec<SparseVec<Q>>,
}

impl CoboundaryMatrix {
    pub fn rank(&self) -> usize {
        linalg::rank_of_columns(&self.columns)
    }

    /// Image of a source-coordinate vector.
    pub fn apply(&self, v: &SparseVec<Q>) -> SparseVec<Q> {
        let mut entries = Vec::new();
        for (j, c) in v {
            for (i, a) in &self.columns[*j] {
                entries.push((*i, c.clone() * a.clone()));
            }
        }
        collect_sparse(entries)
    }

    /// Canonical basis of the kernel, as source-coordinate vectors.
    pub fn kernel_basis(&self) -> Vec<SparseVec<Q>> {
        linalg::kernel_of_columns(&self.columns)
    }

    /// True iff `next ∘ self` is the zero map (exact check, column by column).
    pub fn composes_to_zero(&self, next: &CoboundaryMatrix) -> bool {
        self.columns.iter().all(|col| next.apply(col).is_empty())
    }
}

/// Ordered bracket pairs hitting each target: `by_target[u]` lists `(p, q, c)`
/// with `[x_p, x_q] ∋ c·x_u`, both orientations included.
fn pairs_by_target(g: &LieAlgebra) -> Vec<Vec<(usize, usize, Q)>> {
    let mut by_target: Vec<Vec<(usize, usize, Q)>> = vec![Vec::new(); g.dim()];
    for ((i, j), targets) in g.brackets() {
        for (u, c) in targets {
            by_target[*u].push((*i, *j, c.clone()));
            by_target[*u].push((*j, *i, -c.clone()));
        }
    }
    by_target
}

/// The coboundary `d : C^k → C^{k+1}` of the alternating complex.
///
/// On a basis cochain `x_a ⊗ ω^S` the image is assembled from
/// `(dψ)(X_0..X_k) = Σ_i (−1)^i [X_i, ψ(..î..)] + Σ_{i<j} (−1)^{i+j}
/// ψ([X_i,X_j], ..î..ĵ..)`; trivial coefficients drop the first sum.
///
/// The alternating complex vanishes above the dimension, so degrees `k > n`
/// yield the zero map on the zero space rather than an error.
pub fn ce_coboundary(
    g: &LieAlgebra,
    coefficients: Coefficients,
    k: usize,
) -> Result<CoboundaryMatrix, CochainError> {
    let n = g.dim();
    let source = CochainBasis { kind: ComplexKind::Alternating, coefficients, degree: k, n };
    let target = CochainBasis { kind: ComplexKind::Alternating, coefficients, degree: k + 1, n };
    let by_target = pairs_by_target(g);
    let mut columns = Vec::with_capacity(source.dim());
    for col_idx in 0..source.dim() {
        let (subset, a) = source.element_at(col_idx);
        let mut entries: Vec<(usize, Q)> = Vec::new();
        if coefficients == Coefficients::Adjoint {
            // (−1)^pos [x_p, x_a] ⊗ ω^(S ∪ {p})
            for p in 0..n {
                if subset.binary_search(&p).is_ok() {
                    continue;
                }
                let pos = subset.partition_point(|&s| s < p);
                let mut bigger = subset.clone();
                bigger.insert(pos, p);
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                for (b, c) in g.bracket(p, a) {
                    entries.push((target.index_of(&bigger, b), c * crate::q(sign)));
                }
            }
        }
        // Replace u ∈ S by a bracket pair (e, f) producing x_u.
        for (pos_u, &u) in subset.iter().enumerate() {
            let rest: Vec<usize> = subset.iter().copied().filter(|&s| s != u).collect();
            for (e, f, c) in &by_target[u] {
                if *e > *f {
                    continue; // each unordered pair once, in stored orientation
                }
                if rest.binary_search(e).is_ok() || rest.binary_search(f).is_ok() {
                    continue;
                }
                let mut big = rest.clone();
                let pe = big.partition_point(|&s| s < *e);
                big.insert(pe, *e);
                let pf = big.partition_point(|&s| s < *f);
                big.insert(pf, *f);
                let i = big.binary_search(e).unwrap();
                let j = big.binary_search(f).unwrap();
                let sign = if (i + j + pos_u) % 2 == 0 { 1 } else { -1 };
                entries.push((target.index_of(&big, a), c.clone() * crate::q(sign)));
            }
        }
        columns.push(collect_sparse(entries));
    }
    Ok(CoboundaryMatrix { source, target, columns })
}

/// The Leibniz coboundary `δ : CL^k → CL^{k+1}` for `k ∈ {1, 2}`.
///
/// Degree 1: `(δψ)(X,Y) = [X,ψ(Y)] + [ψ(X),Y] − ψ([X,Y])`.
/// Degree 2: `(δψ)(X,Y,Z) = [X,ψ(Y,Z)] + [ψ(X,Z),Y] − [ψ(X,Y),Z]
///            − ψ([X,Y],Z) + ψ(X,[Y,Z]) + ψ([X,Z],Y)`.
/// Trivial coefficients keep only the `ψ(bracket, ...)` terms.
pub fn leibniz_coboundary(
    g: &LieAlgebra,
    coefficients: Coefficients,
    k: usize,
) -> Result<CoboundaryMatrix, CochainError> {
    if !(k == 1 || k == 2) {
        return Err(CochainError::DegreeOutOfRange { degree: k, accepted: "1..=2".into() });
    }
    let n = g.dim();
    let source = CochainBasis { kind: ComplexKind::Tensor, coefficients, degree: k, n };
    let target = CochainBasis { kind: ComplexKind::Tensor, coefficients, degree: k + 1, n };
    let by_target = pairs_by_target(g);
    let adjoint = coefficients == Coefficients::Adjoint;
    let mut columns = Vec::with_capacity(source.dim());
    for col_idx in 0..source.dim() {
        let (tuple, a) = source.element_at(col_idx);
        let mut entries: Vec<(usize, Q)> = Vec::new();
        match k {
            1 => {
                let u = tuple[0];
                if adjoint {
                    for p in 0..n {
                        for (b, c) in g.bracket(p, a) {
                            entries.push((target.index_of(&[p, u], b), c)); // [X, ψ(Y)]
                        }
                    }
                    for qq in 0..n {
                        for (b, c) in g.bracket(a, qq) {
                            entries.push((target.index_of(&[u, qq], b), c)); // [ψ(X), Y]
                        }
                    }
                }
                for (p, qq, c) in &by_target[u] {
                    entries.push((target.index_of(&[*p, *qq], a), -c.clone())); // −ψ([X,Y])
                }
            }
            2 => {
                let (u, v) = (tuple[0], tuple[1]);
                if adjoint {
                    for p in 0..n {
                        for (b, c) in g.bracket(p, a) {
                            entries.push((target.index_of(&[p, u, v], b), c)); // [X, ψ(Y,Z)]
                        }
                    }
                    for qq in 0..n {
                        for (b, c) in g.bracket(a, qq) {
                            entries.push((target.index_of(&[u, qq, v], b), c)); // [ψ(X,Z), Y]
                        }
                    }
                    for r in 0..n {
                        for (b, c) in g.bracket(a, r) {
                            entries.push((target.index_of(&[u, v, r], b), -c)); // −[ψ(X,Y), Z]
                        }
                    }
                }
                for (p, qq, c) in &by_target[u] {
                    entries.push((target.index_of(&[*p, *qq, v], a), -c.clone())); // −ψ([X,Y],Z)
                }
                for (qq, r, c) in &by_target[v] {
                    entries.push((target.index_of(&[u, *qq, *r], a), c.clone())); // +ψ(X,[Y,Z])
                }
                for (p, r, c) in &by_target[u] {
                    entries.push((target.index_of(&[*p, v, *r], a), c.clone())); // +ψ([X,Z],Y)
                }
            }
            _ => unreachable!(),
        }
        columns.push(collect_sparse(entries));
    }
    Ok(CoboundaryMatrix { source, target, columns })
}

/// Columns of the inclusion `Λ^2 ⊗ V ↪ (g*)^{⊗2} ⊗ V`:
/// `ω^{i,j} ↦ ω^i⊗ω^j − ω^j⊗ω^i`.
pub fn alt2_inclusion(n: usize, coefficients: Coefficients) -> CoboundaryMatrix {
    let source = CochainBasis { kind: ComplexKind::Alternating, coefficients, degree: 2, n };
    let target = CochainBasis { kind: ComplexKind::Tensor, coefficients, degree: 2, n };
    let mut columns = Vec::with_capacity(source.dim());
    for idx in 0..source.dim() {
        let (s, a) = source.element_at(idx);
        columns.push(collect_sparse([
            (target.index_of(&[s[0], s[1]], a), crate::q(1)),
            (target.index_of(&[s[1], s[0]], a), crate::q(-1)),
        ]));
    }
    CoboundaryMatrix { source, target, columns }
}

/// Columns of the inclusion `Λ^3 ⊗ V ↪ (g*)^{⊗3} ⊗ V` (signed sum over all
/// six orderings).
pub fn alt3_inclusion(n: usize, coefficients: Coefficients) -> CoboundaryMatrix {
    let source = CochainBasis { kind: ComplexKind::Alternating, coefficients, degree: 3, n };
    let target = CochainBasis { kind: ComplexKind::Tensor, coefficients, degree: 3, n };
    const PERMS: [([usize; 3], i64); 6] = [
        ([0, 1, 2], 1),
        ([0, 2, 1], -1),
        ([1, 0, 2], -1),
        ([1, 2, 0], 1),
        ([2, 0, 1], 1),
        ([2, 1, 0], -1),
    ];
    let mut columns = Vec::with_capacity(source.dim());
    for idx in 0..source.dim() {
        let (s, a) = source.element_at(idx);
        let entries = PERMS.iter().map(|(perm, sign)| {
            (target.index_of(&[s[perm[0]], s[perm[1]], s[perm[2]]], a), crate::q(*sign))
        });
        columns.push(collect_sparse(entries));
    }
    CoboundaryMatrix { source, target, columns }
}

/// Basis tuples `(i ≤ j)` of the symmetric square, lexicographic.
pub fn sym2_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect()
}

/// Lexicographic rank of an unordered pair within [`sym2_pairs`].
pub fn sym2_index(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = (i.min(j), i.max(j));
    i * (2 * n - i + 1) / 2 + (j - i)
}

/// Columns of the inclusion `S^2 ⊗ V ↪ (g*)^{⊗2} ⊗ V`:
/// `ω^i∘ω^j ↦ ω^i⊗ω^j + ω^j⊗ω^i` (`i < j`), `ω^i⊗ω^i ↦ ω^i⊗ω^i`.
///
/// Column order: pairs lexicographic, then value index — consistent with
/// [`CochainBasis`] ordering.
pub fn sym2_inclusion(n: usize, coefficients: Coefficients) -> Vec<SparseVec<Q>> {
    let target = CochainBasis { kind: ComplexKind::Tensor, coefficients, degree: 2, n };
    let m = target.value_dim();
    let mut columns = Vec::new();
    for (i, j) in sym2_pairs(n) {
        for a in 0..m {
            let mut entries = vec![(target.index_of(&[i, j], a), crate::q(1))];
            if i != j {
                entries.push((target.index_of(&[j, i], a), crate::q(1)));
            }
            columns.push(collect_sparse(entries));
        }
    }
    columns
}

/// A cohomology computation in one degree.
#[derive(Debug, Clone, Serialize)]
pub struct CohomologyReport {
    pub degree: usize,
    pub coefficients: Coefficients,
    #[serde(rename = "dimC")]
    pub dim_c: usize,
    #[serde(rename = "dimZ")]
    pub dim_z: usize,
    #[serde(rename = "dimB")]
    pub dim_b: usize,
    #[serde(rename = "dimH")]
    pub dim_h: usize,
    /// Canonical cocycle basis, only when requested.
    #[serde(skip_serializing)]
    pub kernel: Option<Vec<SparseVec<Q>>>,
}

/// Alternating-complex cohomology in degree `k`.
///
/// Unlike [`ce_coboundary`], degrees above `dim g` are accepted: the cochain
/// space is zero there and the report contains all zeros.
pub fn cohomology(
    g: &LieAlgebra,
    coefficients: Coefficients,
    k: usize,
    with_kernel: bool,
) -> Result<CohomologyReport, CochainError> {
    if k > g.dim() {
        return Ok(CohomologyReport {
            degree: k,
            coefficients,
            dim_c: 0,
            dim_z: 0,
            dim_b: 0,
            dim_h: 0,
            kernel: with_kernel.then(Vec::new),
        });
    }
    let d_k = ce_coboundary(g, coefficients, k)?;
    let dim_c = d_k.source.dim();
    let dim_z = dim_c - d_k.rank();
    let dim_b = if k == 0 { 0 } else { ce_coboundary(g, coefficients, k - 1)?.rank() };
    Ok(CohomologyReport {
        degree: k,
        coefficients,
        dim_c,
        dim_z,
        dim_b,
        dim_h: dim_z - dim_b,
        kernel: with_kernel.then(|| d_k.kernel_basis()),
    })
}

/// Leibniz cocycles and cohomology in degree 2.
///
/// `dim_b` is the rank of the *alternating* degree-1 coboundary: the image of
/// `δ₁` equals the image of `d₁` under the inclusion, so the second Leibniz
/// cohomology is `dim ker δ₂ − rank d₁`.
pub fn leibniz_cocycles(
    g: &LieAlgebra,
    coefficients: Coefficients,
    k: usize,
    with_kernel: bool,
) -> Result<CohomologyReport, CochainError> {
    if k != 2 {
        return Err(CochainError::DegreeOutOfRange { degree: k, accepted: "2".into() });
    }
    let delta2 = leibniz_coboundary(g, coefficients, 2)?;
    let dim_c = delta2.source.dim();
    let dim_z = dim_c - delta2.rank();
    let dim_b = ce_coboundary(g, coefficients, 1)?.rank();
    Ok(CohomologyReport {
        degree: 2,
        coefficients,
        dim_c,
        dim_z,
        dim_b,
        dim_h: dim_z - dim_b,
        kernel: with_kernel.then(|| delta2.kernel_basis()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::validate;
    use crate::q;

    fn g5_4() -> LieAlgebra {
        validate(
            &[
                ((1, 2), vec![(3, q(1))]),
                ((1, 3), vec![(4, q(1))]),
                ((2, 3), vec![(5, q(1))]),
            ],
            5,
            "g5_4",
        )
        .unwrap()
    }

    fn heisenberg(big_n: usize) -> LieAlgebra {
        let raw: Vec<_> = (1..=big_n)
            .map(|i| ((i, big_n + i), vec![(2 * big_n + 1, q(1))]))
            .collect();
        validate(&raw, 2 * big_n + 1, &format!("heisenberg_{big_n}")).unwrap()
    }

    #[test]
    fn subset_indexing_roundtrips() {
        let basis = CochainBasis {
            kind: ComplexKind::Alternating,
            coefficients: Coefficients::Adjoint,
            degree: 3,
            n: 7,
        };
        for idx in 0..basis.dim() {
            let (tuple, a) = basis.element_at(idx);
            assert!(tuple.windows(2).all(|w| w[0] < w[1]));
            assert_eq!(basis.index_of(&tuple, a), idx);
        }
        let tensor = CochainBasis { kind: ComplexKind::Tensor, ..basis };
        for idx in 0..tensor.dim() {
            let (tuple, a) = tensor.element_at(idx);
            assert_eq!(tensor.index_of(&tuple, a), idx);
        }
        for n in 1..=7 {
            for (rank, (i, j)) in sym2_pairs(n).into_iter().enumerate() {
                assert_eq!(sym2_index(n, i, j), rank);
                assert_eq!(sym2_index(n, j, i), rank);
            }
        }
    }

    // ==== sign anchors on the 1-based displayed formulas ====

    #[test]
    fn trivial_degree_one_anchor() {
        // d ω³ = −ω^{1,2}, d ω⁴ = −ω^{1,3}, d ω⁵ = −ω^{2,3}; d ω¹ = d ω² = 0.
        let d1 = ce_coboundary(&g5_4(), Coefficients::Trivial, 1).unwrap();
        let c2 = d1.target;
        assert!(d1.columns[0].is_empty());
        assert!(d1.columns[1].is_empty());
        assert_eq!(d1.columns[2], vec![(c2.index_of(&[0, 1], 0), q(-1))]);
        assert_eq!(d1.columns[3], vec![(c2.index_of(&[0, 2], 0), q(-1))]);
        assert_eq!(d1.columns[4], vec![(c2.index_of(&[1, 2], 0), q(-1))]);
    }

    #[test]
    fn trivial_degree_two_anchor() {
        // d ω^{1,5} = ω^{1,2,3}.
        let d2 = ce_coboundary(&g5_4(), Coefficients::Trivial, 2).unwrap();
        let col = &d2.columns[d2.source.index_of(&[0, 4], 0)];
        assert_eq!(col, &vec![(d2.target.index_of(&[0, 1, 2], 0), q(1))]);
    }

    #[test]
    fn ce_dims_of_g5_4_match_frozen_values() {
        let triv = cohomology(&g5_4(), Coefficients::Trivial, 2, false).unwrap();
        assert_eq!((triv.dim_c, triv.dim_z, triv.dim_b, triv.dim_h), (10, 6, 3, 3));
        let adj = cohomology(&g5_4(), Coefficients::Adjoint, 2, false).unwrap();
        assert_eq!((adj.dim_c, adj.dim_z, adj.dim_b, adj.dim_h), (50, 24, 15, 9));
    }

    #[test]
    fn leibniz_dims_of_g5_4_match_frozen_values() {
        let triv = leibniz_cocycles(&g5_4(), Coefficients::Trivial, 2, false).unwrap();
        assert_eq!((triv.dim_c, triv.dim_z, triv.dim_b, triv.dim_h), (25, 10, 3, 7));
        let adj = leibniz_cocycles(&g5_4(), Coefficients::Adjoint, 2, false).unwrap();
        assert_eq!((adj.dim_c, adj.dim_z, adj.dim_b, adj.dim_h), (125, 32, 15, 17));
    }

    #[test]
    fn differentials_compose_to_zero() {
        let g = g5_4();
        for coeff in [Coefficients::Trivial, Coefficients::Adjoint] {
            for k in 0..=4 {
                let dk = ce_coboundary(&g, coeff, k).unwrap();
                let dk1 = ce_coboundary(&g, coeff, k + 1).unwrap();
                assert!(dk.composes_to_zero(&dk1), "d∘d ≠ 0 at degree {k} ({coeff:?})");
            }
            let delta1 = leibniz_coboundary(&g, coeff, 1).unwrap();
            let delta2 = leibniz_coboundary(&g, coeff, 2).unwrap();
            assert!(delta1.composes_to_zero(&delta2), "δ∘δ ≠ 0 ({coeff:?})");
        }
    }

    #[test]
    fn leibniz_restricts_to_alternating_coboundary() {
        // δ₂ ∘ ι₂ = ι₃ ∘ d₂, column by column.
        let g = g5_4();
        for coeff in [Coefficients::Trivial, Coefficients::Adjoint] {
            let d2 = ce_coboundary(&g, coeff, 2).unwrap();
            let delta2 = leibniz_coboundary(&g, coeff, 2).unwrap();
            let i2 = alt2_inclusion(g.dim(), coeff);
            let i3 = alt3_inclusion(g.dim(), coeff);
            for idx in 0..d2.source.dim() {
                let via_tensor = delta2.apply(&i2.columns[idx]);
                let via_alt = i3.apply(&d2.columns[idx]);
                assert_eq!(via_tensor, via_alt, "column {idx} mismatch ({coeff:?})");
            }
        }
    }

    #[test]
    fn rank_nullity_on_heisenberg() {
        let g = heisenberg(2);
        for coeff in [Coefficients::Trivial, Coefficients::Adjoint] {
            for k in 1..=3 {
                let d = ce_coboundary(&g, coeff, k).unwrap();
                let report = cohomology(&g, coeff, k, true).unwrap();
                assert_eq!(report.dim_z + d.rank(), report.dim_c, "rank–nullity");
                assert_eq!(report.kernel.unwrap().len(), report.dim_z);
            }
        }
    }

    #[test]
    fn heisenberg_adjoint_frozen_dims() {
        // N = 1: ZL² = 11, B² = 3, HL² = 8.
        let r = leibniz_cocycles(&heisenberg(1), Coefficients::Adjoint, 2, false).unwrap();
        assert_eq!((r.dim_z, r.dim_b, r.dim_h), (11, 3, 8));
    }

    #[test]
    fn degree_guards() {
        let g = g5_4();
        let above_top = ce_coboundary(&g, Coefficients::Trivial, 6).unwrap();
        assert_eq!(above_top.source.dim(), 0, "the complex vanishes above the dimension");
        assert!(above_top.columns.is_empty());
        assert!(matches!(
            leibniz_coboundary(&g, Coefficients::Trivial, 3),
            Err(CochainError::DegreeOutOfRange { .. })
        ));
        assert!(ce_coboundary(&g, Coefficients::Trivial, 5).is_ok(), "top degree maps to zero space");
    }

    #[test]
    fn report_serializes_with_stable_keys() {
        let r = cohomology(&g5_4(), Coefficients::Trivial, 2, false).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"degree":2,"coefficients":"trivial","dimC":10,"dimZ":6,"dimB":3,"dimH":3}"#
        );
    }
}
