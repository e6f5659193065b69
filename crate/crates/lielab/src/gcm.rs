//! Generalized Cartan matrices and their classification into finite, affine,
//! and indefinite (hyperbolic or not) types.
//!
//! A generalized Cartan matrix (GCM) is a square integer matrix with `2` on
//! the diagonal, non-positive entries off it, and a symmetric zero pattern.
//! Each indecomposable GCM is of exactly one of three types, decided here by
//! the principal-minor criterion: *finite* iff all principal minors are
//! positive, *affine* iff the determinant vanishes and all proper principal
//! minors are positive, *indefinite* otherwise. An indefinite GCM is
//! *hyperbolic* when every connected proper subdiagram is of finite or affine
//! type.
//!
//! Decomposable matrices are split into connected components of the Dynkin
//! diagram; the reported overall bucket is the worst (most indefinite) of the
//! component buckets, which is how classification columns for products like
//! `A₂ × A₂` are filled. Small finite/affine components additionally get a
//! best-effort standard name via permutation isomorphism against a built-in
//! table; the bucket is the contract, names are annotations.

use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GcmError {
    #[error("not a generalized Cartan matrix: {constraint}")]
    NotAGCM { constraint: String },
}

/// A validated generalized Cartan matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gcm {
    matrix: Vec<Vec<i64>>,
}

impl Gcm {
    pub fn new(matrix: Vec<Vec<i64>>) -> Result<Gcm, GcmError> {
        let n = matrix.len();
        if n == 0 {
            return Err(GcmError::NotAGCM { constraint: "matrix must be non-empty".into() });
        }
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != n {
                return Err(GcmError::NotAGCM {
                    constraint: format!(
                        "matrix must be square (row {} has {} entries, expected {n})",
                        i + 1,
                        row.len()
                    ),
                });
            }
        }
        for i in 0..n {
            if matrix[i][i] != 2 {
                return Err(GcmError::NotAGCM {
                    constraint: format!(
                        "diagonal entry A[{0}][{0}] = {1} must equal 2",
                        i + 1,
                        matrix[i][i]
                    ),
                });
            }
            for j in 0..n {
                if i != j {
                    if matrix[i][j] > 0 {
                        return Err(GcmError::NotAGCM {
                            constraint: format!(
                                "off-diagonal entry A[{}][{}] = {} must be ≤ 0",
                                i + 1,
                                j + 1,
                                matrix[i][j]
                            ),
                        });
                    }
                    if (matrix[i][j] == 0) != (matrix[j][i] == 0) {
                        return Err(GcmError::NotAGCM {
                            constraint: format!(
                                "A[{0}][{1}] = {2} but A[{1}][{0}] = {3} (zeros must be symmetric)",
                                i + 1,
                                j + 1,
                                matrix[i][j],
                                matrix[j][i]
                            ),
                        });
                    }
                }
            }
        }
        Ok(Gcm { matrix })
    }

    pub fn n(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    fn submatrix(&self, indices: &[usize]) -> Vec<Vec<i64>> {
        indices
            .iter()
            .map(|&i| indices.iter().map(|&j| self.matrix[i][j]).collect())
            .collect()
    }
}

/// The classification bucket of one (component of a) GCM.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Bucket {
    Finite,
    Affine,
    IndefiniteHyperbolic,
    IndefiniteNonHyperbolic,
}

impl fmt::Display for Bucket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Bucket::Finite => "FINITE",
            Bucket::Affine => "AFFINE",
            Bucket::IndefiniteHyperbolic => "INDEFINITE_HYPERBOLIC",
            Bucket::IndefiniteNonHyperbolic => "INDEFINITE_NON_HYPERBOLIC",
        })
    }
}

/// Classification of one connected component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentVerdict {
    /// 1-based indices of the component in the original matrix, ascending.
    pub indices: Vec<usize>,
    pub bucket: Bucket,
    /// Standard name for small finite/affine types, when recognized.
    pub name: Option<String>,
}

/// Classification of a whole GCM: per-component verdicts plus the worst
/// bucket across components.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GcmVerdict {
    pub bucket: Bucket,
    pub components: Vec<ComponentVerdict>,
}

/// Exact integer determinant by Laplace expansion (the matrices here are
/// tiny; no pivoting needed).
fn int_det(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0];
    }
    let mut det = 0;
    for (j, entry) in m[0].iter().enumerate() {
        if *entry == 0 {
            continue;
        }
        let minor: Vec<Vec<i64>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, v)| *v)
                    .collect()
            })
            .collect();
        let term = entry * int_det(&minor);
        if j % 2 == 0 {
            det += term;
        } else {
            det -= term;
        }
    }
    det
}

/// All non-empty index subsets of `{0..n}`, as bitmasks.
fn subsets(n: usize) -> impl Iterator<Item = u32> {
    (1u32..(1 << n)).map(|m| m as u32)
}

fn mask_indices(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask & (1 << i) != 0).collect()
}

fn is_connected(m: &[Vec<i64>], indices: &[usize]) -> bool {
    let k = indices.len();
    if k == 0 {
        return false;
    }
    let mut seen = vec![false; k];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(p) = stack.pop() {
        for (r, seen_r) in seen.iter_mut().enumerate() {
            if !*seen_r && m[indices[p]][indices[r]] != 0 {
                *seen_r = true;
                stack.push(r);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Classifies one indecomposable matrix by the principal-minor criterion.
fn bucket_of_indecomposable(m: &[Vec<i64>]) -> Bucket {
    let n = m.len();
    let det = int_det(m);
    let sub = |mask: u32| -> Vec<Vec<i64>> {
        let idx = mask_indices(mask);
        idx.iter().map(|&i| idx.iter().map(|&j| m[i][j]).collect()).collect()
    };
    let proper_minors_positive =
        subsets(n).filter(|mask| mask.count_ones() < n as u32).all(|mask| int_det(&sub(mask)) > 0);
    if proper_minors_positive && det > 0 {
        return Bucket::Finite;
    }
    if proper_minors_positive && det == 0 {
        return Bucket::Affine;
    }
    // Indefinite: hyperbolic iff every connected proper subdiagram is of
    // finite or affine type.
    let hyperbolic = subsets(n).filter(|mask| mask.count_ones() < n as u32).all(|mask| {
        let idx = mask_indices(mask);
        if !is_connected(m, &idx) {
            return true;
        }
        matches!(bucket_of_indecomposable(&sub(mask)), Bucket::Finite | Bucket::Affine)
    });
    if hyperbolic {
        Bucket::IndefiniteHyperbolic
    } else {
        Bucket::IndefiniteNonHyperbolic
    }
}

/// Connected components of the Dynkin diagram, in ascending smallest-index
/// order, as induced principal submatrices.
pub fn components(gcm: &Gcm) -> Vec<Gcm> {
    component_indices(gcm)
        .into_iter()
        .map(|idx| Gcm { matrix: gcm.submatrix(&idx) })
        .collect()
}

fn component_indices(gcm: &Gcm) -> Vec<Vec<usize>> {
    let n = gcm.n();
    let mut assigned = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if assigned[start] {
            continue;
        }
        let mut comp = vec![start];
        assigned[start] = true;
        let mut stack = vec![start];
        while let Some(p) = stack.pop() {
            for r in 0..n {
                if !assigned[r] && gcm.matrix[p][r] != 0 {
                    assigned[r] = true;
                    comp.push(r);
                    stack.push(r);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Reference matrices for named finite and affine types of size ≤ 4. `B2` and
/// `C2` (and likewise `G2`'s two orientations) are permutation-isomorphic, so
/// each class appears once under one conventional name.
fn named_references() -> Vec<(&'static str, Vec<Vec<i64>>)> {
    vec![
        ("A1", vec![vec![2]]),
        ("A2", vec![vec![2, -1], vec![-1, 2]]),
        ("B2", vec![vec![2, -1], vec![-2, 2]]),
        ("G2", vec![vec![2, -1], vec![-3, 2]]),
        ("A1^(1)", vec![vec![2, -2], vec![-2, 2]]),
        ("A2^(2)", vec![vec![2, -4], vec![-1, 2]]),
        ("A3", vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]),
        ("B3", vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]]),
        ("C3", vec![vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]]),
        ("A2^(1)", vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]),
        ("C2^(1)", vec![vec![2, -1, 0], vec![-2, 2, -2], vec![0, -1, 2]]),
        ("D3^(2)", vec![vec![2, -2, 0], vec![-1, 2, -1], vec![0, -2, 2]]),
        ("A4^(2)", vec![vec![2, -1, 0], vec![-2, 2, -1], vec![0, -2, 2]]),
        ("G2^(1)", vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -3, 2]]),
        ("D4^(3)", vec![vec![2, -1, 0], vec![-1, 2, -3], vec![0, -1, 2]]),
        (
            "A4",
            vec![
                vec![2, -1, 0, 0],
                vec![-1, 2, -1, 0],
                vec![0, -1, 2, -1],
                vec![0, 0, -1, 2],
            ],
        ),
        (
            "B4",
            vec![
                vec![2, -1, 0, 0],
                vec![-1, 2, -1, 0],
                vec![0, -1, 2, -1],
                vec![0, 0, -2, 2],
            ],
        ),
        (
            "C4",
            vec![
                vec![2, -1, 0, 0],
                vec![-1, 2, -1, 0],
                vec![0, -1, 2, -2],
                vec![0, 0, -1, 2],
            ],
        ),
        (
            "D4",
            vec![
                vec![2, -1, 0, 0],
                vec![-1, 2, -1, -1],
                vec![0, -1, 2, 0],
                vec![0, -1, 0, 2],
            ],
        ),
        (
            "F4",
            vec![
                vec![2, -1, 0, 0],
                vec![-1, 2, -1, 0],
                vec![0, -2, 2, -1],
                vec![0, 0, -1, 2],
            ],
        ),
        (
            "A3^(1)",
            vec![
                vec![2, -1, 0, -1],
                vec![-1, 2, -1, 0],
                vec![0, -1, 2, -1],
                vec![-1, 0, -1, 2],
            ],
        ),
        (
            "D4^(2)",
            vec![
                vec![2, -2, 0, 0],
                vec![-1, 2, -1, 0],
                vec![0, -1, 2, -1],
                vec![0, 0, -2, 2],
            ],
        ),
    ]
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 1 {
        return vec![vec![0]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q: Vec<usize> = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn isomorphic(a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
    let n = a.len();
    if b.len() != n {
        return false;
    }
    permutations(n).iter().any(|perm| {
        (0..n).all(|i| (0..n).all(|j| a[perm[i]][perm[j]] == b[i][j]))
    })
}

fn name_of(m: &[Vec<i64>]) -> Option<String> {
    if m.len() > 4 {
        return None;
    }
    named_references()
        .iter()
        .find(|(_, reference)| isomorphic(m, reference))
        .map(|(name, _)| (*name).to_string())
}

/// Classifies a GCM: per-component buckets (with best-effort names) and the
/// worst bucket overall.
pub fn classify(gcm: &Gcm) -> GcmVerdict {
    let comps: Vec<ComponentVerdict> = component_indices(gcm)
        .into_iter()
        .map(|idx| {
            let m = gcm.submatrix(&idx);
            let bucket = bucket_of_indecomposable(&m);
            let name = if matches!(bucket, Bucket::Finite | Bucket::Affine) {
                name_of(&m)
            } else {
                None
            };
            ComponentVerdict { indices: idx.iter().map(|i| i + 1).collect(), bucket, name }
        })
        .collect();
    let bucket = comps.iter().map(|c| c.bucket).max().expect("a GCM has at least one component");
    GcmVerdict { bucket, components: comps }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rank_of_columns;
    use crate::q;
    use proptest::prelude::*;

    fn gcm(m: Vec<Vec<i64>>) -> Gcm {
        Gcm::new(m).unwrap()
    }

    #[test]
    fn constructor_rejects_malformed_matrices() {
        let err = |m: Vec<Vec<i64>>| match Gcm::new(m) {
            Err(GcmError::NotAGCM { constraint }) => constraint,
            Ok(_) => panic!("expected rejection"),
        };
        assert!(err(vec![vec![2, -1]]).contains("square"));
        assert!(err(vec![vec![3]]).contains("must equal 2"));
        assert!(err(vec![vec![2, 1], vec![-1, 2]]).contains("must be ≤ 0"));
        assert!(err(vec![vec![2, 0], vec![-1, 2]]).contains("zeros must be symmetric"));
        assert!(err(vec![]).contains("non-empty"));
    }

    #[test]
    fn bucket_examples() {
        assert_eq!(classify(&gcm(vec![vec![2]])).bucket, Bucket::Finite);
        assert_eq!(classify(&gcm(vec![vec![2, -2], vec![-2, 2]])).bucket, Bucket::Affine);
        assert_eq!(classify(&gcm(vec![vec![2, -3], vec![-1, 2]])).bucket, Bucket::Finite);
        assert_eq!(
            classify(&gcm(vec![vec![2, -3], vec![-2, 2]])).bucket,
            Bucket::IndefiniteHyperbolic
        );
        assert_eq!(
            classify(&gcm(vec![
                vec![2, -3, -3],
                vec![-3, 2, -3],
                vec![-3, -3, 2]
            ]))
            .bucket,
            Bucket::IndefiniteNonHyperbolic
        );
    }

    #[test]
    fn component_splitting() {
        // Block-diagonal A2 ⊕ A2 with interleaved indices {1,3} and {2,4}.
        let a = gcm(vec![
            vec![2, 0, -1, 0],
            vec![0, 2, 0, -1],
            vec![-1, 0, 2, 0],
            vec![0, -1, 0, 2],
        ]);
        let verdict = classify(&a);
        assert_eq!(verdict.bucket, Bucket::Finite);
        assert_eq!(verdict.components.len(), 2);
        assert_eq!(verdict.components[0].indices, vec![1, 3]);
        assert_eq!(verdict.components[1].indices, vec![2, 4]);
        for c in &verdict.components {
            assert_eq!(c.bucket, Bucket::Finite);
            assert_eq!(c.name.as_deref(), Some("A2"));
        }
        assert_eq!(components(&a).len(), 2);
        assert_eq!(components(&gcm(vec![vec![2, -1], vec![-1, 2]])).len(), 1);

        // A1^(1) ⊕ A1: worst bucket wins.
        let mixed = gcm(vec![
            vec![2, -2, 0],
            vec![-2, 2, 0],
            vec![0, 0, 2],
        ]);
        let v = classify(&mixed);
        assert_eq!(v.bucket, Bucket::Affine);
        assert_eq!(
            v.components.iter().map(|c| c.bucket).collect::<Vec<_>>(),
            vec![Bucket::Affine, Bucket::Finite]
        );
        assert_eq!(v.components[0].name.as_deref(), Some("A1^(1)"));
    }

    #[test]
    fn named_references_classify_into_their_buckets() {
        for (name, m) in named_references() {
            let expected = if name.contains('(') { Bucket::Affine } else { Bucket::Finite };
            let verdict = classify(&gcm(m.clone()));
            assert_eq!(verdict.bucket, expected, "{name}");
            assert_eq!(verdict.components[0].name.as_deref(), Some(name), "{name}");
            let det = int_det(&m);
            match expected {
                Bucket::Finite => assert!(det > 0, "{name} must have positive determinant"),
                Bucket::Affine => {
                    assert_eq!(det, 0, "{name} must be singular");
                    let cols: Vec<Vec<(usize, crate::Q)>> = (0..m.len())
                        .map(|j| (0..m.len()).map(|i| (i, q(m[i][j]))).collect())
                        .collect();
                    assert_eq!(rank_of_columns(&cols), m.len() - 1, "{name} must have corank 1");
                }
                _ => unreachable!(),
            }
        }
    }

    #[test]
    fn names_are_permutation_invariant_and_distinguish_orientations() {
        // C2 is B2 with the labels swapped.
        let c2 = classify(&gcm(vec![vec![2, -2], vec![-1, 2]]));
        assert_eq!(c2.components[0].name.as_deref(), Some("B2"));
        // The two triple-arrow affine diagrams are genuinely different types.
        let g21 = classify(&gcm(vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -3, 2]]));
        assert_eq!(g21.components[0].name.as_deref(), Some("G2^(1)"));
        let d43 = classify(&gcm(vec![vec![2, -1, 0], vec![-1, 2, -3], vec![0, -1, 2]]));
        assert_eq!(d43.components[0].name.as_deref(), Some("D4^(3)"));
        // Reversed G2^(1) is still G2^(1).
        let rev = classify(&gcm(vec![vec![2, -3, 0], vec![-1, 2, -1], vec![0, -1, 2]]));
        assert_eq!(rev.components[0].name.as_deref(), Some("G2^(1)"));
    }

    #[test]
    fn hyperbolic_components_have_tame_subdiagrams() {
        let v = classify(&gcm(vec![vec![2, -3], vec![-2, 2]]));
        assert_eq!(v.bucket, Bucket::IndefiniteHyperbolic);
        // Adding a third node with strong bonds everywhere breaks hyperbolicity
        // because the 2-node subdiagrams themselves go indefinite.
        let v3 = classify(&gcm(vec![
            vec![2, -3, -3],
            vec![-2, 2, -3],
            vec![-2, -2, 2],
        ]));
        assert_eq!(v3.bucket, Bucket::IndefiniteNonHyperbolic);
    }

    fn arbitrary_gcm(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec((0i64..=3, 0i64..=3), pairs).prop_map(move |entries| {
            let mut m = vec![vec![0i64; n]; n];
            let mut it = entries.into_iter();
            for i in 0..n {
                m[i][i] = 2;
                for j in i + 1..n {
                    let (a, b) = it.next().unwrap();
                    // Zero must be mutual: drop the bond unless both sides are set.
                    if a > 0 && b > 0 {
                        m[i][j] = -a;
                        m[j][i] = -b;
                    }
                }
            }
            m
        })
    }

    proptest! {
        #[test]
        fn classification_is_permutation_invariant(
            m in arbitrary_gcm(4),
            perm_seed in 0usize..24
        ) {
            let a = gcm(m.clone());
            let perm = &permutations(4)[perm_seed];
            let permuted: Vec<Vec<i64>> =
                (0..4).map(|i| (0..4).map(|j| m[perm[i]][perm[j]]).collect()).collect();
            let b = gcm(permuted);
            prop_assert_eq!(classify(&a).bucket, classify(&b).bucket);
        }
    }
}
