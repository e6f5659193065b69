//! Lie algebras as exact structure-constant tables, with the elementary
//! constructions: center, derived subalgebra, quotient, direct product, and
//! adjoined derivations.
//!
//! Indexing convention: the public *labels* are 1-based (`x1..xN`, as in
//! `.lie` files, error messages, and rendered output); in-memory basis
//! positions and coordinate vectors are 0-based. Functions taking raw
//! user-facing data (bracket tables, file input) accept 1-based labels and
//! say so; everything else works on positions.

use crate::linalg::{self, add_scaled, collect_sparse, span_basis, RowReducer, SparseVec};
use crate::{q, Q};
use num_traits::Zero;
use std::collections::BTreeMap;

/// Errors from algebra validation and constructions. Indices in messages are
/// 1-based basis labels.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum AlgebraError {
    /// The Jacobi identity fails on a basis triple; `residual` holds the
    /// nonzero components of the cyclic sum, as 1-based `(label, coefficient)`.
    #[error("Jacobi identity fails on (x{i}, x{j}, x{k}): {} nonzero residual component(s)", residual.len())]
    JacobiViolation {
        i: usize,
        j: usize,
        k: usize,
        residual: Vec<(usize, Q)>,
    },
    #[error("basis index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("bracket pair ({i},{j}) invalid: pairs must satisfy i < j")]
    InvalidBracketPair { i: usize, j: usize },
    #[error("not an ideal: [x{i}, x{j}] leaves the subspace")]
    NotAnIdeal { i: usize, j: usize },
    #[error("not a derivation: identity fails on (x{i}, x{j})")]
    NotADerivation { i: usize, j: usize },
}

/// A finite-dimensional Lie algebra given by rational structure constants.
///
/// Only pairs `i < j` are stored; `[x_j, x_i] = -[x_i, x_j]` is implied.
/// Construction goes through [`validate`], which checks the Jacobi identity on
/// every basis triple, so every value of this type is an actual Lie algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct LieAlgebra {
    dim: usize,
    name: String,
    /// `(i, j)` with `i < j` (0-based positions) → sorted `(k, c)` meaning
    /// `[x_{i+1}, x_{j+1}] = Σ c · x_{k+1}`.
    brackets: BTreeMap<(usize, usize), SparseVec<Q>>,
}

/// Builds a [`LieAlgebra`] from a 1-based raw bracket table, checking index
/// ranges and the Jacobi identity on all basis triples.
///
/// `raw` lists `((i, j), [(k, c), ...])` with 1-based labels and `i < j`.
/// Repeated `(i, j)` entries and repeated `k` within an entry are summed.
pub fn validate(
    raw: &[((usize, usize), Vec<(usize, Q)>)],
    dim: usize,
    name: &str,
) -> Result<LieAlgebra, AlgebraError> {
    let check = |index: usize| {
        if index < 1 || index > dim {
            Err(AlgebraError::IndexOutOfRange { index, dim })
        } else {
            Ok(index - 1)
        }
    };
    let mut merged: BTreeMap<(usize, usize), Vec<(usize, Q)>> = BTreeMap::new();
    for ((i, j), targets) in raw {
        if i >= j {
            // Range-check first so a bad index reports as such even when i >= j.
            check(*i)?;
            check(*j)?;
            return Err(AlgebraError::InvalidBracketPair { i: *i, j: *j });
        }
        let (pi, pj) = (check(*i)?, check(*j)?);
        let entry = merged.entry((pi, pj)).or_default();
        for (k, c) in targets {
            entry.push((check(*k)?, c.clone()));
        }
    }
    let brackets: BTreeMap<(usize, usize), SparseVec<Q>> = merged
        .into_iter()
        .map(|(key, entries)| (key, collect_sparse(entries)))
        .filter(|(_, v)| !v.is_empty())
        .collect();
    let g = LieAlgebra { dim, name: name.to_string(), brackets };
    g.check_jacobi()?;
    Ok(g)
}

impl LieAlgebra {
    /// The abelian algebra of the given dimension (empty bracket table).
    pub fn abelian(dim: usize, name: &str) -> LieAlgebra {
        LieAlgebra { dim, name: name.to_string(), brackets: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: &str) -> LieAlgebra {
        self.name = name.to_string();
        self
    }

    /// Iterates stored brackets as `((i, j), targets)` with 0-based positions,
    /// `i < j`, in lexicographic pair order.
    pub fn brackets(&self) -> impl Iterator<Item = (&(usize, usize), &SparseVec<Q>)> {
        self.brackets.iter()
    }

    /// `[x_{i+1}, x_{j+1}]` for 0-based positions, any order; empty when `i = j`.
    pub fn bracket(&self, i: usize, j: usize) -> SparseVec<Q> {
        if i == j {
            return Vec::new();
        }
        if i < j {
            self.brackets.get(&(i, j)).cloned().unwrap_or_default()
        } else {
            self.brackets
                .get(&(j, i))
                .map(|v| v.iter().map(|(k, c)| (*k, -c.clone())).collect())
                .unwrap_or_default()
        }
    }

    /// The coefficient of `x_{k+1}` in `[x_{i+1}, x_{j+1}]` (0-based positions).
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Q {
        self.bracket(i, j)
            .iter()
            .find(|(t, _)| *t == k)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Q::zero)
    }

    /// Bracket of two coordinate vectors (0-based sparse coordinates).
    pub fn bracket_vectors(&self, u: &SparseVec<Q>, v: &SparseVec<Q>) -> SparseVec<Q> {
        let mut entries = Vec::new();
        for (i, ci) in u {
            for (j, cj) in v {
                for (k, c) in self.bracket(*i, *j) {
                    entries.push((k, ci.clone() * cj.clone() * c));
                }
            }
        }
        collect_sparse(entries)
    }

    fn check_jacobi(&self) -> Result<(), AlgebraError> {
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in j + 1..self.dim {
                    let mut entries = Vec::new();
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        for (t, ct) in self.bracket(a, b) {
                            for (s, cs) in self.bracket(t, c) {
                                entries.push((s, ct.clone() * cs));
                            }
                        }
                    }
                    let residual = collect_sparse(entries);
                    if !residual.is_empty() {
                        return Err(AlgebraError::JacobiViolation {
                            i: i + 1,
                            j: j + 1,
                            k: k + 1,
                            residual: residual.into_iter().map(|(s, c)| (s + 1, c)).collect(),
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

/// A linear subspace of the coordinate space of an algebra, stored as the
/// unique reduced echelon basis — equal subspaces compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Q>>,
}

impl Subspace {
    /// Canonicalizes a spanning set (0-based sparse coordinates).
    pub fn from_sparse_span(ambient_dim: usize, vectors: &[SparseVec<Q>]) -> Subspace {
        let basis = span_basis(vectors)
            .into_iter()
            .map(|v| densify(&v, ambient_dim))
            .collect();
        Subspace { ambient_dim, basis }
    }

    pub fn zero(ambient_dim: usize) -> Subspace {
        Subspace { ambient_dim, basis: Vec::new() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Reduced echelon basis vectors, dense, length `ambient_dim`.
    pub fn basis(&self) -> &[Vec<Q>] {
        &self.basis
    }

    pub fn sparse_basis(&self) -> Vec<SparseVec<Q>> {
        self.basis.iter().map(|row| sparsify(row)).collect()
    }

    /// Leading (pivot) positions of the echelon basis, increasing.
    pub fn pivot_positions(&self) -> Vec<usize> {
        self.basis
            .iter()
            .filter_map(|row| row.iter().position(|c| !c.is_zero()))
            .collect()
    }

    /// Positions not occupied by pivots — the canonical complement used by
    /// quotient constructions.
    pub fn complement_positions(&self) -> Vec<usize> {
        let pivots = self.pivot_positions();
        (0..self.ambient_dim).filter(|p| !pivots.contains(p)).collect()
    }

    pub fn contains_sparse(&self, v: &SparseVec<Q>) -> bool {
        self.reduce_sparse(v).is_empty()
    }

    /// Reduces `v` modulo the subspace (eliminating pivot coordinates).
    pub fn reduce_sparse(&self, v: &SparseVec<Q>) -> SparseVec<Q> {
        let mut red = RowReducer::new();
        for row in self.sparse_basis() {
            red.insert(row);
        }
        red.reduce(v.clone())
    }
}

fn densify(v: &SparseVec<Q>, len: usize) -> Vec<Q> {
    let mut out = vec![Q::zero(); len];
    for (i, c) in v {
        out[*i] = c.clone();
    }
    out
}

fn sparsify(row: &[Q]) -> SparseVec<Q> {
    row.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

/// A linear map on coordinate space; `matrix[a][b]` is the coefficient of
/// `x_{a+1}` in the image of `x_{b+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    matrix: Vec<Vec<Q>>,
}

impl LinearMap {
    pub fn new(matrix: Vec<Vec<Q>>) -> LinearMap {
        let n = matrix.len();
        assert!(matrix.iter().all(|row| row.len() == n), "matrix must be square");
        LinearMap { matrix }
    }

    pub fn zero(dim: usize) -> LinearMap {
        LinearMap { matrix: vec![vec![Q::zero(); dim]; dim] }
    }

    pub fn identity(dim: usize) -> LinearMap {
        let mut m = LinearMap::zero(dim);
        for i in 0..dim {
            m.matrix[i][i] = q(1);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &Vec<Vec<Q>> {
        &self.matrix
    }

    pub fn entry(&self, row: usize, col: usize) -> &Q {
        &self.matrix[row][col]
    }

    pub fn set_entry(&mut self, row: usize, col: usize, value: Q) {
        self.matrix[row][col] = value;
    }

    /// Image of basis position `b` as a sparse coordinate vector.
    pub fn column(&self, b: usize) -> SparseVec<Q> {
        (0..self.matrix.len())
            .filter(|&a| !self.matrix[a][b].is_zero())
            .map(|a| (a, self.matrix[a][b].clone()))
            .collect()
    }

    pub fn apply(&self, v: &SparseVec<Q>) -> SparseVec<Q> {
        let mut out: SparseVec<Q> = Vec::new();
        for (b, c) in v {
            out = add_scaled(&out, &self.column(*b), c);
        }
        out
    }
}

/// The center `{y : [x, y] = 0 for all x}` as a canonical subspace.
pub fn center(g: &LieAlgebra) -> Subspace {
    let n = g.dim();
    // Unknown y = Σ y_i x_{i+1}; for each probe j and target k:
    // Σ_i y_i · c_{ij}^k = 0.
    let mut rows: Vec<SparseVec<Q>> = Vec::new();
    for j in 0..n {
        let mut per_target: BTreeMap<usize, Vec<(usize, Q)>> = BTreeMap::new();
        for i in 0..n {
            for (k, c) in g.bracket(i, j) {
                per_target.entry(k).or_default().push((i, c));
            }
        }
        for (_, entries) in per_target {
            let row = collect_sparse(entries);
            if !row.is_empty() {
                rows.push(row);
            }
        }
    }
    let kernel = linalg::kernel_of_rows(rows, n);
    Subspace::from_sparse_span(n, &kernel)
}

/// The derived subalgebra `[g, g]` (span of all bracket values).
pub fn derived_subalgebra(g: &LieAlgebra) -> Subspace {
    let vectors: Vec<SparseVec<Q>> = g.brackets().map(|(_, v)| v.clone()).collect();
    Subspace::from_sparse_span(g.dim(), &vectors)
}

/// `dim g − dim [g, g]`, the number of independent functionals killing the
/// derived subalgebra (also `dim H¹(g, ℚ)`).
pub fn codim_derived(g: &LieAlgebra) -> usize {
    g.dim() - derived_subalgebra(g).dim()
}

/// Block-diagonal direct product; the second factor's basis is reindexed
/// after the first's.
pub fn direct_product(g1: &LieAlgebra, g2: &LieAlgebra) -> LieAlgebra {
    let shift = g1.dim();
    let mut brackets = g1.brackets.clone();
    for ((i, j), targets) in g2.brackets() {
        brackets.insert(
            (i + shift, j + shift),
            targets.iter().map(|(k, c)| (k + shift, c.clone())).collect(),
        );
    }
    LieAlgebra {
        dim: g1.dim() + g2.dim(),
        name: format!("{} x {}", g1.name(), g2.name()),
        brackets,
    }
}

/// The quotient algebra `g / ideal` on the canonical complement basis (the
/// standard basis vectors at non-pivot positions of the ideal).
pub fn quotient(g: &LieAlgebra, ideal: &Subspace) -> Result<LieAlgebra, AlgebraError> {
    assert_eq!(ideal.ambient_dim(), g.dim(), "ideal must live in g");
    // Ideal check: [x_i, v] ∈ ideal for all basis x_i and ideal basis v.
    for v in ideal.sparse_basis() {
        for i in 0..g.dim() {
            let w = g.bracket_vectors(&[(i, q(1))].to_vec(), &v);
            if !ideal.contains_sparse(&w) {
                let j = v.first().map(|(p, _)| p + 1).unwrap_or(0);
                return Err(AlgebraError::NotAnIdeal { i: i + 1, j });
            }
        }
    }
    let positions = ideal.complement_positions();
    let new_index: BTreeMap<usize, usize> =
        positions.iter().enumerate().map(|(new, old)| (*old, new)).collect();
    let mut raw: Vec<((usize, usize), Vec<(usize, Q)>)> = Vec::new();
    for (a, &pa) in positions.iter().enumerate() {
        for (b, &pb) in positions.iter().enumerate().skip(a + 1) {
            let reduced = ideal.reduce_sparse(&g.bracket(pa, pb));
            let targets: Vec<(usize, Q)> = reduced
                .into_iter()
                .map(|(k, c)| (new_index[&k] + 1, c))
                .collect();
            if !targets.is_empty() {
                raw.push(((a + 1, b + 1), targets));
            }
        }
    }
    validate(&raw, positions.len(), &format!("{} / ideal", g.name()))
}

/// Whether `t` satisfies `t[x,y] = [t x, y] + [x, t y]` on all basis pairs.
pub fn is_derivation(g: &LieAlgebra, t: &LinearMap) -> bool {
    derivation_defect(g, t).is_none()
}

/// First basis pair (1-based) on which the derivation identity fails.
fn derivation_defect(g: &LieAlgebra, t: &LinearMap) -> Option<(usize, usize)> {
    for i in 0..g.dim() {
        for j in i + 1..g.dim() {
            let lhs = t.apply(&g.bracket(i, j));
            let rhs_entries = [
                g.bracket_vectors(&t.column(i), &[(j, q(1))].to_vec()),
                g.bracket_vectors(&[(i, q(1))].to_vec(), &t.column(j)),
            ];
            let rhs = add_scaled(&rhs_entries[0], &rhs_entries[1], &q(1));
            if add_scaled(&lhs, &rhs, &q(-1)) != Vec::new() {
                return Some((i + 1, j + 1));
            }
        }
    }
    None
}

/// Echelon basis of the full derivation algebra `Der g` (all solutions of the
/// derivation identity; equivalently the adjoint 1-cocycles).
pub fn derivation_space(g: &LieAlgebra) -> Vec<LinearMap> {
    let n = g.dim();
    // Unknowns t_{a,b} (entry (a,b) of the matrix), flattened as a·n + b.
    let flat = |a: usize, b: usize| a * n + b;
    let mut rows: Vec<SparseVec<Q>> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            // Component k of t[x_i,x_j] − [t x_i, x_j] − [x_i, t x_j] = 0.
            let mut per_target: BTreeMap<usize, Vec<(usize, Q)>> = BTreeMap::new();
            for (u, c) in g.bracket(i, j) {
                for k in 0..n {
                    per_target.entry(k).or_default().push((flat(k, u), c.clone()));
                }
            }
            for a in 0..n {
                for (k, c) in g.bracket(a, j) {
                    per_target.entry(k).or_default().push((flat(a, i), -c));
                }
            }
            for b in 0..n {
                for (k, c) in g.bracket(i, b) {
                    per_target.entry(k).or_default().push((flat(b, j), -c));
                }
            }
            for (_, entries) in per_target {
                let row = collect_sparse(entries);
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
    }
    linalg::kernel_of_rows(rows, n * n)
        .into_iter()
        .map(|v| {
            let mut m = LinearMap::zero(n);
            for (idx, c) in v {
                m.set_entry(idx / n, idx % n, c);
            }
            m
        })
        .collect()
}

/// Adjoins a derivation `t` as a new basis vector `x1` acting by `[x1, x_i] =
/// t(x_i)`; the original basis shifts to `x2..x_{n+1}`.
pub fn adjoin_derivation(g: &LieAlgebra, t: &LinearMap) -> Result<LieAlgebra, AlgebraError> {
    assert_eq!(t.dim(), g.dim(), "derivation must act on g");
    if let Some((i, j)) = derivation_defect(g, t) {
        return Err(AlgebraError::NotADerivation { i, j });
    }
    let mut raw: Vec<((usize, usize), Vec<(usize, Q)>)> = Vec::new();
    for b in 0..g.dim() {
        let col = t.column(b);
        if !col.is_empty() {
            raw.push(((1, b + 2), col.into_iter().map(|(a, c)| (a + 2, c)).collect()));
        }
    }
    for ((i, j), targets) in g.brackets() {
        raw.push(((i + 2, j + 2), targets.iter().map(|(k, c)| (k + 2, c.clone())).collect()));
    }
    validate(&raw, g.dim() + 1, &format!("adjoin(tau, {})", g.name()))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `[x1,x2]=x3, [x1,x3]=x4, [x2,x3]=x5` — 5-dimensional, nilpotent.
    pub fn g5_4() -> LieAlgebra {
        validate(
            &[
                ((1, 2), vec![(3, q(1))]),
                ((1, 3), vec![(4, q(1))]),
                ((2, 3), vec![(5, q(1))]),
            ],
            5,
            "g5_4",
        )
        .expect("g5_4 satisfies Jacobi")
    }

    #[test]
    fn validate_accepts_g5_4_and_abelian() {
        assert_eq!(g5_4().dim(), 5);
        assert!(validate(&[], 4, "abelian").is_ok());
    }

    #[test]
    fn validate_rejects_jacobi_violation() {
        // [x1,x2]=x3, [x1,x3]=x1: the cyclic sum on (1,2,3) is
        // [[x3,x1],x2] = [-x1,x2] = -x3 ≠ 0.
        let err = validate(
            &[((1, 2), vec![(3, q(1))]), ((1, 3), vec![(1, q(1))])],
            3,
            "broken",
        )
        .unwrap_err();
        match err {
            AlgebraError::JacobiViolation { i, j, k, residual } => {
                assert_eq!((i, j, k), (1, 2, 3));
                assert_eq!(residual, vec![(3, q(-1))]);
            }
            other => panic!("expected JacobiViolation, got {other:?}"),
        }
    }

    #[test]
    fn validate_rejects_bad_indices() {
        let err = validate(&[((1, 6), vec![(3, q(1))])], 5, "bad").unwrap_err();
        assert_eq!(err, AlgebraError::IndexOutOfRange { index: 6, dim: 5 });
        let err = validate(&[((2, 2), vec![(1, q(1))])], 3, "bad").unwrap_err();
        assert_eq!(err, AlgebraError::InvalidBracketPair { i: 2, j: 2 });
    }

    #[test]
    fn center_of_g5_4_is_x4_x5() {
        let z = center(&g5_4());
        assert_eq!(z.dim(), 2);
        assert_eq!(z.pivot_positions(), vec![3, 4], "center = span of x4, x5");
    }

    #[test]
    fn center_of_abelian_is_everything() {
        let g = LieAlgebra::abelian(4, "ab4");
        assert_eq!(center(&g).dim(), 4);
    }

    #[test]
    fn derived_subalgebra_of_g5_4() {
        let d = derived_subalgebra(&g5_4());
        assert_eq!(d.dim(), 3);
        assert_eq!(d.pivot_positions(), vec![2, 3, 4], "derived = span of x3, x4, x5");
        assert_eq!(codim_derived(&g5_4()), 2);
    }

    #[test]
    fn direct_product_blocks_and_center() {
        let p = direct_product(&g5_4(), &g5_4());
        assert_eq!(p.dim(), 10);
        assert_eq!(p.brackets().count(), 6);
        let z = center(&p);
        assert_eq!(z.pivot_positions(), vec![3, 4, 8, 9], "center of product = product of centers");
    }

    #[test]
    fn quotient_by_top_of_lower_central_series() {
        let g = g5_4();
        let ideal = Subspace::from_sparse_span(5, &[vec![(4, q(1))]]);
        let quot = quotient(&g, &ideal).expect("span{x5} is an ideal");
        assert_eq!(quot.dim(), 4);
        // The quotient is the standard filiform algebra [x1,x2]=x3, [x1,x3]=x4.
        assert_eq!(quot.bracket(0, 1), vec![(2, q(1))]);
        assert_eq!(quot.bracket(0, 2), vec![(3, q(1))]);
        assert_eq!(quot.bracket(1, 2), vec![]);
    }

    #[test]
    fn quotient_rejects_non_ideal() {
        let g = g5_4();
        let not_ideal = Subspace::from_sparse_span(5, &[vec![(0, q(1))]]);
        assert!(matches!(quotient(&g, &not_ideal), Err(AlgebraError::NotAnIdeal { .. })));
    }

    #[test]
    fn quotient_by_zero_is_identity_indexed() {
        let g = g5_4();
        let quot = quotient(&g, &Subspace::zero(5)).unwrap();
        assert_eq!(quot.dim(), 5);
        for ((i, j), targets) in g.brackets() {
            assert_eq!(&quot.bracket(*i, *j), targets);
        }
    }

    #[test]
    fn inner_maps_are_derivations() {
        let g = g5_4();
        // ad(x1): columns are [x1, x_b].
        let mut ad1 = LinearMap::zero(5);
        for b in 0..5 {
            for (k, c) in g.bracket(0, b) {
                ad1.set_entry(k, b, c);
            }
        }
        assert!(is_derivation(&g, &ad1));
        assert!(is_derivation(&g, &LinearMap::zero(5)));
        // A diagonal map that ignores the grading is not a derivation.
        let mut bad = LinearMap::identity(5);
        bad.set_entry(2, 2, q(7));
        assert!(!is_derivation(&g, &bad));
    }

    #[test]
    fn derivation_space_dimension_of_g5_4() {
        // Independently frozen: dim Der(g5_4) = 10.
        assert_eq!(derivation_space(&g5_4()).len(), 10);
        for t in derivation_space(&g5_4()) {
            assert!(is_derivation(&g5_4(), &t));
        }
    }

    #[test]
    fn adjoin_identity_to_abelian_plane() {
        let g = LieAlgebra::abelian(2, "ab2");
        let adj = adjoin_derivation(&g, &LinearMap::identity(2)).unwrap();
        assert_eq!(adj.dim(), 3);
        assert_eq!(adj.bracket(0, 1), vec![(1, q(1))], "[x1,x2] = x2");
        assert_eq!(adj.bracket(0, 2), vec![(2, q(1))], "[x1,x3] = x3");
    }

    #[test]
    fn adjoin_rejects_non_derivation() {
        let g = g5_4();
        let mut bad = LinearMap::identity(5);
        bad.set_entry(2, 2, q(7));
        assert!(matches!(
            adjoin_derivation(&g, &bad),
            Err(AlgebraError::NotADerivation { .. })
        ));
    }

    #[test]
    fn adjoin_zero_map_is_direct_product_with_line() {
        let g = g5_4();
        let adj = adjoin_derivation(&g, &LinearMap::zero(5)).unwrap();
        assert_eq!(adj.dim(), 6);
        assert!(adj.bracket(0, 1).is_empty(), "tau commutes with everything");
        assert_eq!(adj.bracket(1, 2), vec![(3, q(1))], "old brackets shifted by one");
    }
}
