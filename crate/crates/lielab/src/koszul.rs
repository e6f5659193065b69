//! Invariant bilinear forms, the Koszul map, and the structural splitting of
//! the second Leibniz cohomology.
//!
//! The central object is the map `𝓘` sending an invariant symmetric bilinear
//! form `B` to the alternating 3-form `I_B(X,Y,Z) = B([X,Y],Z)`. Its kernel
//! and image control:
//!
//! * the predicates *𝓘-null* (image zero), *𝓘-exact* (image consists of
//!   coboundaries) and *quadratic* (some invariant form is nondegenerate);
//! * the coupled 2-cocycles `B + ω` with `I_B = dω`, which are Leibniz
//!   cocycles although neither part is one on its own;
//! * the splitting `HL² ≅ H² ⊕ ZL²₀ ⊕ (coupled part)`, where the coupled part
//!   is `Im 𝓘 ∩ B³(𝔤,ℂ)` for trivial coefficients and `(𝔠⊗Im 𝓘) ∩ B³(𝔤,𝔤)`
//!   for adjoint ones.
//!
//! [`hl2_decomposition`] computes both sides of that splitting — the
//! structural sum and the direct kernel/rank computation — and returns an
//! error on any disagreement rather than silently reporting either side.

use crate::algebra::{self, LieAlgebra};
use crate::cochain::{self, CochainBasis, Coefficients, ComplexKind};
use crate::linalg::{self, add_scaled, collect_sparse, RowReducer, SparseVec};
use crate::notation;
use crate::{q, Q};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum KoszulError {
    /// The form fails `B([Z,X],Y) + B(X,[Z,Y]) = 0`; labels are 1-based.
    #[error("form is not invariant: fails on basis triple (x{z}, x{x}, x{y})")]
    NotInvariant { z: usize, x: usize, y: usize },
    /// The span of the basis vectors other than the given one is not an ideal.
    #[error("the span of the basis vectors other than x{label} is not an ideal")]
    NotAnIdeal { label: usize },
    /// Two independent computations of the same quantity disagree. This always
    /// indicates an implementation bug and is surfaced, never swallowed.
    #[error("cross-check mismatch: {context}")]
    CrossCheckMismatch { context: String },
}

/// An alternating 2-form, stored on the lexicographic `ω^{i,j}` basis.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoForm {
    n: usize,
    coeffs: SparseVec<Q>,
}

/// An alternating 3-form, stored on the lexicographic `ω^{i,j,k}` basis.
#[derive(Debug, Clone, PartialEq)]
pub struct ThreeForm {
    n: usize,
    coeffs: SparseVec<Q>,
}

fn alt_basis(n: usize, degree: usize) -> CochainBasis {
    CochainBasis { kind: ComplexKind::Alternating, coefficients: Coefficients::Trivial, degree, n }
}

impl TwoForm {
    pub fn new(n: usize, coeffs: impl IntoIterator<Item = (usize, Q)>) -> TwoForm {
        TwoForm { n, coeffs: collect_sparse(coeffs) }
    }

    pub fn zero(n: usize) -> TwoForm {
        TwoForm { n, coeffs: Vec::new() }
    }

    /// Builds from 0-based index pairs `i < j` with their coefficients.
    pub fn from_terms(n: usize, terms: &[((usize, usize), Q)]) -> TwoForm {
        let basis = alt_basis(n, 2);
        TwoForm::new(
            n,
            terms.iter().map(|((i, j), c)| {
                assert!(i < j && *j < n, "wedge indices must satisfy i < j < n");
                (basis.tuple_index(&[*i, *j]), c.clone())
            }),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &SparseVec<Q> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Value on the (0-based) basis pair, antisymmetric in its arguments.
    pub fn evaluate(&self, a: usize, b: usize) -> Q {
        if a == b {
            return Q::zero();
        }
        let idx = alt_basis(self.n, 2).tuple_index(&[a.min(b), a.max(b)]);
        let c = match self.coeffs.binary_search_by_key(&idx, |e| e.0) {
            Ok(pos) => self.coeffs[pos].1.clone(),
            Err(_) => Q::zero(),
        };
        if a < b {
            c
        } else {
            -c
        }
    }

    pub fn render(&self) -> String {
        let basis = alt_basis(self.n, 2);
        notation::signed_sum(self.coeffs.iter().map(|(idx, c)| {
            let (tuple, _) = basis.element_at(*idx);
            (notation::wedge(&tuple), c.clone())
        }))
    }
}

impl ThreeForm {
    pub fn new(n: usize, coeffs: impl IntoIterator<Item = (usize, Q)>) -> ThreeForm {
        ThreeForm { n, coeffs: collect_sparse(coeffs) }
    }

    pub fn zero(n: usize) -> ThreeForm {
        ThreeForm { n, coeffs: Vec::new() }
    }

    /// Builds from 0-based index triples `i < j < k` with their coefficients.
    pub fn from_terms(n: usize, terms: &[((usize, usize, usize), Q)]) -> ThreeForm {
        let basis = alt_basis(n, 3);
        ThreeForm::new(
            n,
            terms.iter().map(|((i, j, k), c)| {
                assert!(i < j && j < k && *k < n, "wedge indices must satisfy i < j < k < n");
                (basis.tuple_index(&[*i, *j, *k]), c.clone())
            }),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &SparseVec<Q> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn render(&self) -> String {
        let basis = alt_basis(self.n, 3);
        notation::signed_sum(self.coeffs.iter().map(|(idx, c)| {
            let (tuple, _) = basis.element_at(*idx);
            (notation::wedge(&tuple), c.clone())
        }))
    }
}

/// A symmetric bilinear form as a dense symmetric rational matrix,
/// `B(x_i, x_j) = matrix[i][j]`.
#[derive(Debug, Clone, PartialEq)]
pub struct BilinearForm {
    matrix: Vec<Vec<Q>>,
}

impl BilinearForm {
    pub fn new(matrix: Vec<Vec<Q>>) -> BilinearForm {
        let n = matrix.len();
        assert!(matrix.iter().all(|row| row.len() == n), "matrix must be square");
        for i in 0..n {
            for j in i + 1..n {
                assert!(matrix[i][j] == matrix[j][i], "matrix must be symmetric");
            }
        }
        BilinearForm { matrix }
    }

    pub fn zero(n: usize) -> BilinearForm {
        BilinearForm { matrix: vec![vec![Q::zero(); n]; n] }
    }

    /// Builds from coordinates on the symmetric-pair basis (lexicographic
    /// `i ≤ j`, see [`cochain::sym2_pairs`]): the coefficient at `(i, j)` with
    /// `i < j` is the `ω^i∘ω^j` coordinate, the diagonal one is `ω^i⊗ω^i`.
    pub fn from_sym_coords(n: usize, coords: &SparseVec<Q>) -> BilinearForm {
        let pairs = cochain::sym2_pairs(n);
        let mut matrix = vec![vec![Q::zero(); n]; n];
        for (idx, c) in coords {
            let (i, j) = pairs[*idx];
            matrix[i][j] = c.clone();
            matrix[j][i] = c.clone();
        }
        BilinearForm { matrix }
    }

    /// Builds from 0-based unordered index pairs with their coefficients.
    pub fn from_terms(n: usize, terms: &[((usize, usize), Q)]) -> BilinearForm {
        BilinearForm::from_sym_coords(
            n,
            &collect_sparse(
                terms.iter().map(|((i, j), c)| (cochain::sym2_index(n, *i, *j), c.clone())),
            ),
        )
    }

    pub fn n(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<Q>] {
        &self.matrix
    }

    pub fn entry(&self, i: usize, j: usize) -> &Q {
        &self.matrix[i][j]
    }

    /// Coordinates on the symmetric-pair basis (inverse of
    /// [`BilinearForm::from_sym_coords`]).
    pub fn sym_coords(&self) -> SparseVec<Q> {
        let n = self.n();
        collect_sparse((0..n).flat_map(|i| {
            let row = &self.matrix[i];
            (i..n).map(move |j| (cochain::sym2_index(n, i, j), row[j].clone()))
        }))
    }

    /// The form as a degree-2 tensor cochain with trivial coefficients
    /// (coordinates on the `ω^i⊗ω^j` basis).
    pub fn tensor_cochain(&self) -> SparseVec<Q> {
        let n = self.n();
        collect_sparse(
            (0..n).flat_map(|i| (0..n).map(move |j| (i * n + j, self.matrix[i][j].clone()))),
        )
    }

    /// First basis triple `(z, x, y)` (1-based) violating
    /// `B([Z,X],Y) + B(X,[Z,Y]) = 0`, if any.
    pub fn invariance_defect(&self, g: &LieAlgebra) -> Option<(usize, usize, usize)> {
        let n = self.n();
        for z in 0..n {
            for x in 0..n {
                for y in x..n {
                    let mut acc = Q::zero();
                    for (t, c) in g.bracket(z, x) {
                        acc += c * self.matrix[t][y].clone();
                    }
                    for (t, c) in g.bracket(z, y) {
                        acc += c * self.matrix[x][t].clone();
                    }
                    if !acc.is_zero() {
                        return Some((z + 1, x + 1, y + 1));
                    }
                }
            }
        }
        None
    }

    pub fn is_invariant(&self, g: &LieAlgebra) -> bool {
        self.invariance_defect(g).is_none()
    }

    pub fn is_nondegenerate(&self) -> bool {
        !linalg::det_dense(self.matrix.clone()).is_zero()
    }

    pub fn render(&self) -> String {
        let n = self.n();
        notation::signed_sum((0..n).flat_map(|i| {
            let row = &self.matrix[i];
            (i..n)
                .filter(|j| !row[*j].is_zero())
                .map(move |j| (notation::symmetric_product(i, j), row[j].clone()))
        }))
    }
}

/// Echelon basis of the space of invariant symmetric bilinear forms.
pub fn invariant_symmetric_forms(g: &LieAlgebra) -> Vec<BilinearForm> {
    let n = g.dim();
    let mut rows = Vec::new();
    for z in 0..n {
        for x in 0..n {
            for y in x..n {
                let mut entries = Vec::new();
                for (t, c) in g.bracket(z, x) {
                    entries.push((cochain::sym2_index(n, t, y), c));
                }
                for (t, c) in g.bracket(z, y) {
                    entries.push((cochain::sym2_index(n, x, t), c));
                }
                let row = collect_sparse(entries);
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
    }
    linalg::kernel_of_rows(rows, n * (n + 1) / 2)
        .iter()
        .map(|v| BilinearForm::from_sym_coords(n, v))
        .collect()
}

/// The Koszul map: `B ↦ I_B` with `I_B(X,Y,Z) = B([X,Y],Z)`.
pub fn koszul_map(g: &LieAlgebra, form: &BilinearForm) -> Result<ThreeForm, KoszulError> {
    if let Some((z, x, y)) = form.invariance_defect(g) {
        return Err(KoszulError::NotInvariant { z, x, y });
    }
    let n = g.dim();
    let basis = alt_basis(n, 3);
    let mut entries = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let targets = g.bracket(i, j);
            if targets.is_empty() {
                continue;
            }
            for k in j + 1..n {
                let mut acc = Q::zero();
                for (t, c) in &targets {
                    acc += c.clone() * form.matrix[*t][k].clone();
                }
                if !acc.is_zero() {
                    entries.push((basis.tuple_index(&[i, j, k]), acc));
                }
            }
        }
    }
    Ok(ThreeForm::new(n, entries))
}

/// The invariant-form space together with the per-basis-form Koszul images.
struct FormSpace {
    forms: Vec<BilinearForm>,
    /// `images[i]` is the Koszul image of `forms[i]`.
    images: Vec<ThreeForm>,
}

fn form_space(g: &LieAlgebra) -> FormSpace {
    let forms = invariant_symmetric_forms(g);
    let images = forms
        .iter()
        .map(|b| koszul_map(g, b).expect("basis forms are invariant by construction"))
        .collect();
    FormSpace { forms, images }
}

fn combine_forms(forms: &[BilinearForm], coords: &SparseVec<Q>, n: usize) -> BilinearForm {
    let mut acc: SparseVec<Q> = Vec::new();
    for (idx, c) in coords {
        acc = add_scaled(&acc, &forms[*idx].sym_coords(), c);
    }
    BilinearForm::from_sym_coords(n, &acc)
}

/// Summary of the Koszul map on one algebra.
#[derive(Debug, Clone, Serialize)]
pub struct KoszulAnalysis {
    pub invariant_dim: usize,
    /// Codimension of the derived subalgebra (= dim H¹ with trivial
    /// coefficients).
    pub p: usize,
    /// Dimension of the center.
    pub c: usize,
    pub ker_dim: usize,
    pub im_dim: usize,
    pub i_null: bool,
    pub i_exact: bool,
    pub quadratic: bool,
    #[serde(skip)]
    pub invariant_basis: Vec<BilinearForm>,
    #[serde(skip)]
    pub ker_basis: Vec<BilinearForm>,
    #[serde(skip)]
    pub image_basis: Vec<ThreeForm>,
}

/// Computes the full Koszul summary: invariant forms, kernel and image of
/// `𝓘`, and the three predicates.
pub fn koszul_analysis(g: &LieAlgebra) -> KoszulAnalysis {
    let n = g.dim();
    let fs = form_space(g);
    let image_cols: Vec<SparseVec<Q>> = fs.images.iter().map(|t| t.coeffs().clone()).collect();
    let ker_coords = linalg::kernel_of_columns(&image_cols);
    let ker_basis: Vec<BilinearForm> =
        ker_coords.iter().map(|v| combine_forms(&fs.forms, v, n)).collect();
    let image_basis: Vec<ThreeForm> = linalg::span_basis(&image_cols)
        .into_iter()
        .map(|v| ThreeForm::new(n, v))
        .collect();
    let d2 = cochain::ce_coboundary(g, Coefficients::Trivial, 2)
        .expect("degree 2 is valid for any algebra of dimension ≥ 2; smaller ones have no forms to map");
    let mut boundary_span = RowReducer::new();
    for col in &d2.columns {
        boundary_span.insert(col.clone());
    }
    let i_exact = image_basis.iter().all(|t| boundary_span.contains(t.coeffs()));
    let quadratic = quadratic_decision(g, &fs.forms);
    KoszulAnalysis {
        invariant_dim: fs.forms.len(),
        p: n - algebra::derived_subalgebra(g).dim(),
        c: algebra::center(g).dim(),
        ker_dim: ker_basis.len(),
        im_dim: image_basis.len(),
        i_null: image_basis.is_empty(),
        i_exact,
        quadratic,
        invariant_basis: fs.forms,
        ker_basis,
        image_basis,
    }
}

/// Verifies that the kernel of `𝓘` has the dimension `p(p+1)/2` forced by the
/// isomorphism `ker 𝓘 ≅ S²(𝔤/[𝔤,𝔤])*`.
pub fn ker_koszul_isomorphism_check(g: &LieAlgebra) -> bool {
    let a = koszul_analysis(g);
    a.ker_dim == a.p * (a.p + 1) / 2
}

/// Decides whether some invariant form is nondegenerate.
///
/// Two sound "no" certificates are tried first: an isotropic subspace
/// `𝔠 ∩ [𝔤,𝔤]` of more than half the dimension, and a common kernel vector of
/// all invariant forms. Then a fixed-seed randomized search over integer
/// combinations (growing range) looks for a nondegenerate witness; an exact
/// symbolic determinant decides the remaining cases when the form space has
/// dimension ≤ 8 and the algebra dimension ≤ 12. Outside that range an
/// undecided search reports `false`.
fn quadratic_decision(g: &LieAlgebra, forms: &[BilinearForm]) -> bool {
    if forms.is_empty() {
        return false;
    }
    let n = g.dim();
    // Certificate 1: a too-large isotropic subspace. Central vectors pair to
    // zero with the derived subalgebra under any invariant form, so
    // 𝔠 ∩ [𝔤,𝔤] is isotropic for all of them at once.
    let center = algebra::center(g);
    let derived = algebra::derived_subalgebra(g);
    let isotropic = linalg::intersect_spans(&center.sparse_basis(), &derived.sparse_basis());
    if 2 * isotropic.len() > n {
        return false;
    }
    // Certificate 2: a vector annihilated by every invariant form.
    let rows = forms.iter().flat_map(|b| {
        b.matrix().iter().map(|row| {
            collect_sparse(row.iter().enumerate().map(|(j, c)| (j, c.clone())))
        })
    });
    if !linalg::kernel_of_rows(rows, n).is_empty() {
        return false;
    }
    // Randomized witness search, deterministic under the fixed seed.
    let mut rng = ChaCha8Rng::seed_from_u64(0x4b6f_737a_756c);
    for round in 0..64u32 {
        let range = 2 + 3 * (round as i64 / 8);
        let coeffs: Vec<i64> = (0..forms.len()).map(|_| rng.gen_range(-range..=range)).collect();
        if coeffs.iter().all(|c| *c == 0) {
            continue;
        }
        let mut m = vec![vec![Q::zero(); n]; n];
        for (b, c) in forms.iter().zip(&coeffs) {
            if *c != 0 {
                for i in 0..n {
                    for j in 0..n {
                        m[i][j] += q(*c) * b.matrix[i][j].clone();
                    }
                }
            }
        }
        if !linalg::det_dense(m).is_zero() {
            return true;
        }
    }
    if forms.len() <= 8 && n <= 12 {
        return symbolic_combination_nondegenerate(forms);
    }
    false
}

/// Multivariate polynomial over `Q`, keyed by exponent vectors.
type Poly = BTreeMap<Vec<u8>, Q>;

fn poly_add_scaled(acc: &mut Poly, p: &Poly, factor: &Q) {
    for (e, c) in p {
        let entry = acc.entry(e.clone()).or_insert_with(Q::zero);
        *entry += factor.clone() * c.clone();
        if entry.is_zero() {
            acc.remove(e);
        }
    }
}

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u8> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let entry = out.entry(e.clone()).or_insert_with(Q::zero);
            *entry += ca.clone() * cb.clone();
            if entry.is_zero() {
                out.remove(&e);
            }
        }
    }
    out
}

/// True iff `det(Σ tᵢ·Bᵢ)` is not the zero polynomial — i.e. some combination
/// of the forms is nondegenerate.
fn symbolic_combination_nondegenerate(forms: &[BilinearForm]) -> bool {
    let n = forms[0].n();
    let m = forms.len();
    let entries: Vec<Vec<Poly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut p = Poly::new();
                    for (k, b) in forms.iter().enumerate() {
                        if !b.matrix[i][j].is_zero() {
                            let mut e = vec![0u8; m];
                            e[k] = 1;
                            p.insert(e, b.matrix[i][j].clone());
                        }
                    }
                    p
                })
                .collect()
        })
        .collect();
    struct Expander<'a> {
        n: usize,
        m: usize,
        entries: &'a [Vec<Poly>],
        memo: HashMap<u32, Poly>,
    }
    impl Expander<'_> {
        fn minor(&mut self, mask: u32) -> Poly {
            if mask == 0 {
                return Poly::from([(vec![0u8; self.m], q(1))]);
            }
            if let Some(p) = self.memo.get(&mask) {
                return p.clone();
            }
            let row = self.n - mask.count_ones() as usize;
            let mut acc = Poly::new();
            let mut pos = 0u32;
            for col in 0..self.n {
                if mask & (1 << col) == 0 {
                    continue;
                }
                if !self.entries[row][col].is_empty() {
                    let sub = self.minor(mask & !(1 << col));
                    let term = poly_mul(&self.entries[row][col], &sub);
                    let sign = if pos % 2 == 0 { q(1) } else { q(-1) };
                    poly_add_scaled(&mut acc, &term, &sign);
                }
                pos += 1;
            }
            self.memo.insert(mask, acc.clone());
            acc
        }
    }
    let mut expander = Expander { n, m, entries: &entries, memo: HashMap::new() };
    let det = expander.minor((1u32 << n) - 1);
    !det.is_empty()
}

/// A Leibniz 2-cocycle `B + ω` (`I_B = dω`) whose symmetric and antisymmetric
/// parts are not cocycles on their own; adjoint elements carry a central
/// vector `z` and represent `z ⊗ (B + ω)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoupledCocycle {
    /// `None` for trivial coefficients, the (dense) central vector otherwise.
    pub center_vector: Option<Vec<Q>>,
    pub symmetric: BilinearForm,
    pub antisymmetric: TwoForm,
}

impl CoupledCocycle {
    /// The cocycle as a vector in the degree-2 tensor cochain space (trivial
    /// or adjoint according to `center_vector`).
    pub fn tensor_cochain(&self) -> SparseVec<Q> {
        let n = self.symmetric.n();
        let mut base = self.symmetric.tensor_cochain();
        let basis = alt_basis(n, 2);
        for (idx, c) in self.antisymmetric.coeffs() {
            let (t, _) = basis.element_at(*idx);
            base = add_scaled(&base, &vec![(t[0] * n + t[1], q(1)), (t[1] * n + t[0], q(-1))], c);
        }
        match &self.center_vector {
            None => base,
            Some(z) => collect_sparse(base.iter().flat_map(|(t, c)| {
                z.iter()
                    .enumerate()
                    .filter(|(_, zc)| !zc.is_zero())
                    .map(move |(b, zc)| (t * n + b, c.clone() * zc.clone()))
            })),
        }
    }

    fn wrap_center(&self, inner: String) -> String {
        match &self.center_vector {
            None => inner,
            Some(z) => {
                let rendered = notation::signed_sum(
                    z.iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(i, c)| (notation::basis_vector(i), c.clone())),
                );
                let terms = z.iter().filter(|c| !c.is_zero()).count();
                if terms > 1 {
                    format!("({rendered})⊗({inner})")
                } else {
                    format!("{rendered}⊗({inner})")
                }
            }
        }
    }

    /// Full rendering with the symmetric part written out, e.g.
    /// `x₅⊗((ω¹∘ω⁵ − ω²∘ω⁴ + ω³⊗ω³) + ω^{1,5})`.
    pub fn render(&self) -> String {
        self.wrap_center(format!("({}) + {}", self.symmetric.render(), self.antisymmetric.render()))
    }

    /// Compact rendering with the symmetric part abbreviated to `B`, e.g.
    /// `x₅⊗(B + ω^{1,5})`.
    pub fn render_abbreviated(&self) -> String {
        self.wrap_center(format!("B + {}", self.antisymmetric.render()))
    }
}

/// Columns `z ⊗ T` in adjoint degree-3 coordinates, for central vectors `z`
/// and 3-form columns `T`.
fn center_tensor_columns(
    n: usize,
    center: &[SparseVec<Q>],
    three_cols: &[SparseVec<Q>],
) -> Vec<SparseVec<Q>> {
    let mut out = Vec::with_capacity(center.len() * three_cols.len());
    for z in center {
        for t in three_cols {
            out.push(collect_sparse(t.iter().flat_map(|(idx, c)| {
                z.iter().map(move |(b, zc)| (idx * n + b, c.clone() * zc.clone()))
            })));
        }
    }
    out
}

/// Deterministic basis of the coupled complement of `Z² ⊕ ZL²₀` inside `ZL²`.
///
/// The symmetric parts run over `W ∩ 𝓘⁻¹(B³(𝔤,ℂ))`, where `W` is the
/// complement of `ker 𝓘` spanned by the invariant basis forms at the
/// non-pivot coordinates of the kernel; each antisymmetric part is the
/// leftmost-preimage solution of `I_B = dω`. Adjoint elements are
/// `z ⊗ (B + ω)` over the echelon center basis.
pub fn coupled_basis(g: &LieAlgebra, coefficients: Coefficients) -> Vec<CoupledCocycle> {
    let n = g.dim();
    let fs = form_space(g);
    let image_cols: Vec<SparseVec<Q>> = fs.images.iter().map(|t| t.coeffs().clone()).collect();
    let kernel = linalg::kernel_of_columns(&image_cols);
    let pivots: Vec<usize> = kernel.iter().filter_map(|v| v.first().map(|e| e.0)).collect();
    let w_indices: Vec<usize> =
        (0..fs.forms.len()).filter(|i| !pivots.contains(i)).collect();
    let d2 = cochain::ce_coboundary(g, Coefficients::Trivial, 2)
        .expect("degree 2 is within range whenever forms exist");
    // Coordinates (relative to W) whose image lands in the coboundary space.
    let t_cols: Vec<SparseVec<Q>> = w_indices.iter().map(|i| image_cols[*i].clone()).collect();
    let mut stacked = t_cols.clone();
    stacked.extend(d2.columns.iter().cloned());
    let a_parts: Vec<SparseVec<Q>> = linalg::kernel_of_columns(&stacked)
        .into_iter()
        .map(|v| v.into_iter().filter(|(i, _)| *i < t_cols.len()).collect())
        .collect();
    let mut elements = Vec::new();
    for a in linalg::span_basis(&a_parts) {
        let w_coords: SparseVec<Q> =
            a.iter().map(|(i, c)| (w_indices[*i], c.clone())).collect();
        let symmetric = combine_forms(&fs.forms, &w_coords, n);
        let mut i_b: SparseVec<Q> = Vec::new();
        for (i, c) in &a {
            i_b = add_scaled(&i_b, &t_cols[*i], c);
        }
        let omega_coords = linalg::express_in_span(&d2.columns, &i_b)
            .expect("the image lies in the coboundary space by construction");
        let antisymmetric = TwoForm::new(
            n,
            omega_coords.into_iter().enumerate().filter(|(_, c)| !c.is_zero()),
        );
        elements.push(CoupledCocycle { center_vector: None, symmetric, antisymmetric });
    }
    if coefficients == Coefficients::Trivial {
        return elements;
    }
    let center = algebra::center(g);
    let mut out = Vec::new();
    for z in center.basis() {
        for e in &elements {
            out.push(CoupledCocycle {
                center_vector: Some(z.clone()),
                symmetric: e.symmetric.clone(),
                antisymmetric: e.antisymmetric.clone(),
            });
        }
    }
    out
}

/// Both sides of the structural splitting of `HL²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    /// Second cohomology of the alternating complex.
    pub h2: usize,
    /// Symmetric Leibniz 2-cocycles.
    pub zl20: usize,
    /// Coupled complement (intersection dimension, see [`coupled_basis`]).
    pub coupled: usize,
    /// Structural sum `h2 + zl20 + coupled`.
    pub hl2: usize,
    /// Independent direct computation `dim ZL² − dim B²`.
    pub hl2_direct: usize,
}

/// Computes `HL²` twice — as the structural sum and directly — and returns
/// the report only when all cross-checks agree.
pub fn hl2_decomposition(
    g: &LieAlgebra,
    coefficients: Coefficients,
) -> Result<DecompositionReport, KoszulError> {
    let n = g.dim();
    let h2 = cochain::cohomology(g, coefficients, 2, false)
        .expect("degree 2 is never out of range for cohomology")
        .dim_h;
    let delta2 = cochain::leibniz_coboundary(g, coefficients, 2)
        .expect("degree 2 is a valid Leibniz degree");
    let sym_cols = cochain::sym2_inclusion(n, coefficients);
    let sym_images: Vec<SparseVec<Q>> = sym_cols.iter().map(|c| delta2.apply(c)).collect();
    let zl20 = sym_cols.len() - linalg::rank_of_columns(&sym_images);
    let fs = form_space(g);
    let image_cols: Vec<SparseVec<Q>> = fs.images.iter().map(|t| t.coeffs().clone()).collect();
    let im_basis = linalg::span_basis(&image_cols);
    let coupled = if im_basis.is_empty() {
        0
    } else {
        match coefficients {
            Coefficients::Trivial => {
                let d2 = cochain::ce_coboundary(g, Coefficients::Trivial, 2).unwrap();
                linalg::intersect_spans(&im_basis, &d2.columns).len()
            }
            Coefficients::Adjoint => {
                let center = algebra::center(g).sparse_basis();
                if center.is_empty() {
                    0
                } else {
                    let a_cols = center_tensor_columns(n, &center, &im_basis);
                    let d2 = cochain::ce_coboundary(g, Coefficients::Adjoint, 2).unwrap();
                    linalg::intersect_spans(&a_cols, &d2.columns).len()
                }
            }
        }
    };
    let hl2 = h2 + zl20 + coupled;
    let zl2 = delta2.source.dim() - delta2.rank();
    let bl2 = cochain::ce_coboundary(g, coefficients, 1).unwrap().rank();
    let hl2_direct = zl2 - bl2;
    let basis_len = coupled_basis(g, coefficients).len();
    if basis_len != coupled {
        return Err(KoszulError::CrossCheckMismatch {
            context: format!(
                "coupled basis has {basis_len} element(s) but the intersection dimension is {coupled}"
            ),
        });
    }
    if hl2 != hl2_direct {
        return Err(KoszulError::CrossCheckMismatch {
            context: format!(
                "structural sum {hl2} (H²={h2} + ZL²₀={zl20} + coupled={coupled}) disagrees with \
                 the direct computation {hl2_direct}"
            ),
        });
    }
    Ok(DecompositionReport { h2, zl20, coupled, hl2, hl2_direct })
}

/// `(adjoint, trivial)` uncoupling flags: whether the respective coupled
/// space is zero. Panics if the computation ever contradicts the theorem that
/// adjoint uncoupling implies trivial uncoupling.
pub fn uncoupling_flags(g: &LieAlgebra) -> (bool, bool) {
    let n = g.dim();
    let fs = form_space(g);
    let image_cols: Vec<SparseVec<Q>> = fs.images.iter().map(|t| t.coeffs().clone()).collect();
    let im_basis = linalg::span_basis(&image_cols);
    if im_basis.is_empty() {
        return (true, true);
    }
    let d2t = cochain::ce_coboundary(g, Coefficients::Trivial, 2).unwrap();
    let trivial_dim = linalg::intersect_spans(&im_basis, &d2t.columns).len();
    let center = algebra::center(g).sparse_basis();
    let adjoint_dim = if center.is_empty() {
        0
    } else {
        let a_cols = center_tensor_columns(n, &center, &im_basis);
        let d2a = cochain::ce_coboundary(g, Coefficients::Adjoint, 2).unwrap();
        linalg::intersect_spans(&a_cols, &d2a.columns).len()
    };
    assert!(
        !(adjoint_dim == 0 && trivial_dim != 0),
        "adjoint ZL²-uncoupling must imply trivial ZL²-uncoupling"
    );
    (adjoint_dim == 0, trivial_dim == 0)
}

/// The coadjoint action `(θ_X γ)(U,V) = −γ([X,U],V) − γ(U,[X,V])` of the
/// basis vector with the given 1-based label on an alternating 2-form.
pub fn coadjoint_action(g: &LieAlgebra, x_label: usize, gamma: &TwoForm) -> TwoForm {
    let n = g.dim();
    assert!(
        (1..=n).contains(&x_label),
        "basis label {x_label} out of range 1..={n}"
    );
    assert_eq!(gamma.n(), n, "form dimension must match the algebra");
    let x = x_label - 1;
    let basis = alt_basis(n, 2);
    let mut entries = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let mut acc = Q::zero();
            for (t, c) in g.bracket(x, u) {
                acc -= c * gamma.evaluate(t, v);
            }
            for (t, c) in g.bracket(x, v) {
                acc -= c * gamma.evaluate(u, t);
            }
            if !acc.is_zero() {
                entries.push((basis.tuple_index(&[u, v]), acc));
            }
        }
    }
    TwoForm::new(n, entries)
}

/// Wedge `ω^t ∧ β` of a dual basis vector with an alternating 2-form, as a
/// 3-form (components of `β` involving `t` are annihilated).
fn wedge_dual_with(n: usize, t: usize, beta: &TwoForm) -> ThreeForm {
    let b2 = alt_basis(n, 2);
    let b3 = alt_basis(n, 3);
    let mut entries = Vec::new();
    for (idx, c) in beta.coeffs() {
        let (pair, _) = b2.element_at(*idx);
        let (u, v) = (pair[0], pair[1]);
        if u == t || v == t {
            continue;
        }
        let (triple, sign) = if t < u {
            ([t, u, v], q(1))
        } else if t < v {
            ([u, t, v], q(-1))
        } else {
            ([u, v, t], q(1))
        };
        entries.push((b3.tuple_index(&triple), c.clone() * sign));
    }
    ThreeForm::new(n, entries)
}

/// Checks the codimension-one splitting identities for the ideal spanned by
/// the basis vectors other than `x1_label` (1-based):
///
/// * `I_B = d(ω¹∧f) + I_{B₂}` with `f = B(·, x₁)` and `B₂` the restriction of
///   `B` to the ideal (the second summand pulled back along the projection);
/// * `dγ = ω¹∧θ_{x₁}(γ) + d₂γ` for every basis 2-form `γ` of the ideal.
pub fn codim1_split_check(
    g: &LieAlgebra,
    x1_label: usize,
    form: &BilinearForm,
) -> Result<bool, KoszulError> {
    let n = g.dim();
    assert!(
        (1..=n).contains(&x1_label),
        "basis label {x1_label} out of range 1..={n}"
    );
    let t = x1_label - 1;
    if let Some((z, x, y)) = form.invariance_defect(g) {
        return Err(KoszulError::NotInvariant { z, x, y });
    }
    for (_, targets) in g.brackets() {
        if targets.iter().any(|(u, _)| *u == t) {
            return Err(KoszulError::NotAnIdeal { label: x1_label });
        }
    }
    let others: Vec<usize> = (0..n).filter(|i| *i != t).collect();
    let pos_of: HashMap<usize, usize> = others.iter().enumerate().map(|(p, i)| (*i, p)).collect();
    let sub_raw: Vec<((usize, usize), Vec<(usize, Q)>)> = g
        .brackets()
        .filter(|((i, j), _)| *i != t && *j != t)
        .map(|((i, j), targets)| {
            (
                (pos_of[i] + 1, pos_of[j] + 1),
                targets.iter().map(|(u, c)| (pos_of[u] + 1, c.clone())).collect(),
            )
        })
        .collect();
    let sub = algebra::validate(&sub_raw, n - 1, "ideal")
        .expect("an ideal of a Lie algebra is a Lie algebra");
    let sub3 = alt_basis(n - 1, 3);
    let g3 = alt_basis(n, 3);
    let pull3 = |tf: &ThreeForm| -> SparseVec<Q> {
        collect_sparse(tf.coeffs().iter().map(|(idx, c)| {
            let (tr, _) = sub3.element_at(*idx);
            (g3.tuple_index(&[others[tr[0]], others[tr[1]], others[tr[2]]]), c.clone())
        }))
    };
    let d2 = cochain::ce_coboundary(g, Coefficients::Trivial, 2).unwrap();
    // First identity.
    let lhs = koszul_map(g, form)?;
    let f_wedge = TwoForm::new(
        n,
        others.iter().filter(|v| !form.matrix[**v][t].is_zero()).map(|v| {
            let c = form.matrix[*v][t].clone();
            let b2 = alt_basis(n, 2);
            if t < *v {
                (b2.tuple_index(&[t, *v]), c)
            } else {
                (b2.tuple_index(&[*v, t]), -c)
            }
        }),
    );
    let sub_form = BilinearForm::new(
        others
            .iter()
            .map(|i| others.iter().map(|j| form.matrix[*i][*j].clone()).collect())
            .collect(),
    );
    let sub_image = koszul_map(&sub, &sub_form)
        .expect("the restriction of an invariant form to an ideal is invariant");
    let mut rhs = d2.apply(f_wedge.coeffs());
    rhs = add_scaled(&rhs, &pull3(&sub_image), &q(1));
    if *lhs.coeffs() != rhs {
        return Ok(false);
    }
    // Second identity, on every basis 2-form of the ideal.
    let d2_sub = cochain::ce_coboundary(&sub, Coefficients::Trivial, 2).unwrap();
    let sub2 = alt_basis(n - 1, 2);
    let g2 = alt_basis(n, 2);
    for idx in 0..sub2.tuple_count() {
        let (pair, _) = sub2.element_at(idx);
        let gamma = TwoForm::new(
            n,
            [(g2.tuple_index(&[others[pair[0]], others[pair[1]]]), q(1))],
        );
        let lhs_gamma = d2.apply(gamma.coeffs());
        let theta = coadjoint_action(g, x1_label, &gamma);
        let mut rhs_gamma = wedge_dual_with(n, t, &theta).coeffs().clone();
        let sub_d = ThreeForm::new(n - 1, d2_sub.columns[idx].clone());
        rhs_gamma = add_scaled(&rhs_gamma, &pull3(&sub_d), &q(1));
        if lhs_gamma != rhs_gamma {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{direct_product, quotient, validate, Subspace};
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

    fn g7_2_4() -> LieAlgebra {
        validate(
            &[
                ((1, 2), vec![(3, q(1))]),
                ((1, 3), vec![(4, q(1))]),
                ((1, 4), vec![(5, q(1))]),
                ((1, 5), vec![(6, q(1))]),
                ((2, 5), vec![(7, q(-1))]),
                ((3, 4), vec![(7, q(1))]),
            ],
            7,
            "g7_2.4",
        )
        .unwrap()
    }

    fn diamond() -> LieAlgebra {
        validate(
            &[
                ((1, 2), vec![(3, q(1))]),
                ((1, 3), vec![(2, q(-1))]),
                ((2, 3), vec![(4, q(1))]),
            ],
            4,
            "diamond",
        )
        .unwrap()
    }

    fn heisenberg(big_n: usize) -> LieAlgebra {
        let raw: Vec<_> = (1..=big_n)
            .map(|i| ((i, big_n + i), vec![(2 * big_n + 1, q(1))]))
            .collect();
        validate(&raw, 2 * big_n + 1, &format!("heisenberg_{big_n}")).unwrap()
    }

    fn sl2() -> LieAlgebra {
        // x1 = E12, x2 = E21, x3 = H.
        validate(
            &[
                ((1, 2), vec![(3, q(1))]),
                ((1, 3), vec![(1, q(-2))]),
                ((2, 3), vec![(2, q(2))]),
            ],
            3,
            "sl2",
        )
        .unwrap()
    }

    fn abelian(n: usize) -> LieAlgebra {
        validate(&[], n, &format!("C{n}")).unwrap()
    }

    fn free2step4() -> LieAlgebra {
        let mut raw = Vec::new();
        let mut next = 5;
        for i in 1..=4 {
            for j in i + 1..=4 {
                raw.push(((i, j), vec![(next, q(1))]));
                next += 1;
            }
        }
        validate(&raw, 10, "free2step_4gen").unwrap()
    }

    fn table1_form_g5_4() -> BilinearForm {
        BilinearForm::from_terms(
            5,
            &[((0, 4), q(1)), ((1, 3), q(-1)), ((2, 2), q(1))],
        )
    }

    // ==== invariant forms and the Koszul map ====

    #[test]
    fn invariant_form_dimensions() {
        assert_eq!(invariant_symmetric_forms(&g5_4()).len(), 4);
        assert_eq!(invariant_symmetric_forms(&abelian(4)).len(), 10);
        let a = koszul_analysis(&free2step4());
        assert_eq!((a.invariant_dim, a.im_dim), (14, 4), "free 2-step on 4 generators");
    }

    #[test]
    fn koszul_map_matches_tabulated_identities() {
        let i_b = koszul_map(&g5_4(), &table1_form_g5_4()).unwrap();
        assert_eq!(i_b, ThreeForm::from_terms(5, &[((0, 1, 2), q(1))]), "I_B = ω^{{1,2,3}}");

        let b7 = BilinearForm::from_terms(
            7,
            &[((0, 6), q(1)), ((1, 5), q(1)), ((2, 4), q(-1)), ((3, 3), q(1))],
        );
        let i_b7 = koszul_map(&g7_2_4(), &b7).unwrap();
        assert_eq!(
            i_b7,
            ThreeForm::from_terms(7, &[((0, 2, 3), q(1)), ((0, 1, 4), q(-1))]),
            "I_B = ω^{{1,3,4}} − ω^{{1,2,5}}"
        );
    }

    #[test]
    fn koszul_map_rejects_non_invariant_forms() {
        let bad = BilinearForm::from_terms(5, &[((2, 2), q(1))]);
        assert_eq!(
            koszul_map(&g5_4(), &bad),
            Err(KoszulError::NotInvariant { z: 1, x: 2, y: 3 })
        );
    }

    #[test]
    fn analysis_of_g5_4() {
        let a = koszul_analysis(&g5_4());
        assert_eq!(
            (a.invariant_dim, a.p, a.c, a.ker_dim, a.im_dim),
            (4, 2, 2, 3, 1)
        );
        assert!(!a.i_null && a.i_exact && a.quadratic);
    }

    #[test]
    fn analysis_flags_across_fixtures() {
        for big_n in 1..=2 {
            let a = koszul_analysis(&heisenberg(big_n));
            assert!(a.i_null && a.i_exact && !a.quadratic, "Heisenberg N={big_n}");
        }
        let d = koszul_analysis(&diamond());
        assert_eq!((d.invariant_dim, d.ker_dim, d.im_dim), (2, 1, 1));
        assert!(d.i_exact && d.quadratic && !d.i_null);
        let s = koszul_analysis(&sl2());
        assert_eq!((s.invariant_dim, s.p, s.c, s.ker_dim, s.im_dim), (1, 0, 0, 0, 1));
        assert!(!s.i_null && !s.i_exact && s.quadratic, "the Killing form is nondegenerate");
        let f = koszul_analysis(&free2step4());
        assert!(!f.quadratic, "large isotropic center rules out nondegeneracy");
    }

    #[test]
    fn dimension_identity_holds() {
        for g in [g5_4(), g7_2_4(), diamond(), heisenberg(2), sl2(), free2step4(), abelian(3)] {
            let a = koszul_analysis(&g);
            assert_eq!(
                a.invariant_dim,
                a.p * (a.p + 1) / 2 + a.im_dim,
                "dimension identity fails for {}",
                g.name()
            );
            assert!(!a.i_null || a.i_exact, "𝓘-null must imply 𝓘-exact for {}", g.name());
        }
    }

    #[test]
    fn restriction_of_trivial_leibniz_coboundary_is_minus_koszul() {
        for g in [g5_4(), diamond(), sl2()] {
            let delta2 = cochain::leibniz_coboundary(&g, Coefficients::Trivial, 2).unwrap();
            let alt3 = cochain::alt3_inclusion(g.dim(), Coefficients::Trivial);
            for b in invariant_symmetric_forms(&g) {
                let lhs = delta2.apply(&b.tensor_cochain());
                let i_b = koszul_map(&g, &b).unwrap();
                let rhs = alt3.apply(&linalg::scaled(i_b.coeffs(), &q(-1)));
                assert_eq!(lhs, rhs, "δ_ℂ(B) ≠ −I_B on {}", g.name());
            }
        }
    }

    #[test]
    fn kernel_dimension_matches_the_abelianization() {
        assert!(ker_koszul_isomorphism_check(&g5_4()));
        assert!(ker_koszul_isomorphism_check(&abelian(3)));
        assert_eq!(koszul_analysis(&abelian(3)).ker_dim, 6);
        assert!(ker_koszul_isomorphism_check(&sl2()));
    }

    #[test]
    fn i_null_is_preserved_by_products_and_quotients() {
        let h1 = heisenberg(1);
        let prod = direct_product(&h1, &h1);
        assert!(koszul_analysis(&prod).i_null);
        let h2 = heisenberg(2);
        let center_line = Subspace::from_sparse_span(5, &[vec![(4, q(1))]]);
        let quot = quotient(&h2, &center_line).unwrap();
        assert!(koszul_analysis(&quot).i_null);
    }

    // ==== coupled cocycles ====

    #[test]
    fn trivial_coupled_basis_of_g5_4_is_the_tabulated_cocycle() {
        let basis = coupled_basis(&g5_4(), Coefficients::Trivial);
        assert_eq!(basis.len(), 1);
        let c = &basis[0];
        assert_eq!(c.symmetric, table1_form_g5_4(), "deterministic complement picks the tabulated form");
        assert_eq!(c.antisymmetric, TwoForm::from_terms(5, &[((0, 4), q(1))]));
        assert_eq!(c.render_abbreviated(), "B + ω^{1,5}");
        assert_eq!(c.symmetric.render(), "ω¹∘ω⁵ − ω²∘ω⁴ + ω³⊗ω³");
    }

    #[test]
    fn coupled_cocycles_are_cocycles_with_non_cocycle_parts() {
        let g = g5_4();
        for coeff in [Coefficients::Trivial, Coefficients::Adjoint] {
            let delta2 = cochain::leibniz_coboundary(&g, coeff, 2).unwrap();
            for c in coupled_basis(&g, coeff) {
                assert!(delta2.apply(&c.tensor_cochain()).is_empty(), "δ(B+ω) must vanish");
                let sym_only = CoupledCocycle {
                    center_vector: c.center_vector.clone(),
                    symmetric: c.symmetric.clone(),
                    antisymmetric: TwoForm::zero(g.dim()),
                };
                assert!(
                    !delta2.apply(&sym_only.tensor_cochain()).is_empty(),
                    "the symmetric part alone must not be a cocycle"
                );
            }
        }
    }

    #[test]
    fn adjoint_coupled_basis_of_g5_4() {
        let basis = coupled_basis(&g5_4(), Coefficients::Adjoint);
        let rendered: Vec<String> = basis.iter().map(|c| c.render_abbreviated()).collect();
        assert_eq!(rendered.len(), 2);
        assert!(rendered.contains(&"x₄⊗(B + ω^{1,5})".to_string()), "got {rendered:?}");
        assert!(rendered.contains(&"x₅⊗(B + ω^{1,5})".to_string()), "got {rendered:?}");
    }

    #[test]
    fn i_null_algebras_have_empty_coupled_bases() {
        for coeff in [Coefficients::Trivial, Coefficients::Adjoint] {
            assert!(coupled_basis(&heisenberg(2), coeff).is_empty());
        }
    }

    // ==== the decomposition and its cross-checks ====

    #[test]
    fn decomposition_of_g5_4() {
        let triv = hl2_decomposition(&g5_4(), Coefficients::Trivial).unwrap();
        assert_eq!(
            triv,
            DecompositionReport { h2: 3, zl20: 3, coupled: 1, hl2: 7, hl2_direct: 7 }
        );
        let adj = hl2_decomposition(&g5_4(), Coefficients::Adjoint).unwrap();
        assert_eq!(
            adj,
            DecompositionReport { h2: 9, zl20: 6, coupled: 2, hl2: 17, hl2_direct: 17 }
        );
    }

    #[test]
    fn decomposition_across_fixtures() {
        let d = hl2_decomposition(&diamond(), Coefficients::Trivial).unwrap();
        assert_eq!((d.h2, d.zl20, d.coupled, d.hl2), (0, 1, 1, 2));
        let da = hl2_decomposition(&diamond(), Coefficients::Adjoint).unwrap();
        assert_eq!((da.h2, da.zl20, da.coupled, da.hl2), (2, 1, 1, 4));
        let h = hl2_decomposition(&heisenberg(2), Coefficients::Adjoint).unwrap();
        assert_eq!((h.h2, h.zl20, h.coupled, h.hl2), (20, 10, 0, 30));
        let s = hl2_decomposition(&sl2(), Coefficients::Adjoint).unwrap();
        assert_eq!(s.hl2, 0, "semisimple algebras have no Leibniz deformations");
    }

    #[test]
    fn zl20_dimension_formula() {
        // dim ZL²₀(𝔤,𝔤) = c·p(p+1)/2 and dim ZL²₀(𝔤,ℂ) = dim ker 𝓘.
        for g in [g5_4(), g7_2_4(), diamond(), heisenberg(2), free2step4()] {
            let a = koszul_analysis(&g);
            let adj = hl2_decomposition(&g, Coefficients::Adjoint).unwrap();
            assert_eq!(adj.zl20, a.c * a.p * (a.p + 1) / 2, "adjoint ZL²₀ on {}", g.name());
            let triv = hl2_decomposition(&g, Coefficients::Trivial).unwrap();
            assert_eq!(triv.zl20, a.ker_dim, "trivial ZL²₀ on {}", g.name());
        }
    }

    #[test]
    fn uncoupling_flags_match_expectations() {
        assert_eq!(uncoupling_flags(&g5_4()), (false, false));
        assert_eq!(uncoupling_flags(&sl2()), (true, true));
        assert_eq!(uncoupling_flags(&heisenberg(3)), (true, true));
    }

    // ==== coadjoint action and the codimension-one split ====

    #[test]
    fn coadjoint_action_on_g5_4() {
        let gamma = TwoForm::from_terms(5, &[((2, 3), q(1))]);
        let theta = coadjoint_action(&g5_4(), 1, &gamma);
        assert_eq!(theta, TwoForm::from_terms(5, &[((1, 3), q(-1))]), "θ_{{x₁}}ω^{{3,4}} = −ω^{{2,4}}");
    }

    #[test]
    fn codim1_split_on_g5_4() {
        assert_eq!(codim1_split_check(&g5_4(), 1, &table1_form_g5_4()), Ok(true));
    }

    #[test]
    fn codim1_split_trivial_cases() {
        let zero4 = BilinearForm::from_terms(4, &[((0, 0), q(1)), ((3, 3), q(1))]);
        assert_eq!(codim1_split_check(&abelian(4), 2, &zero4), Ok(true));
        let b = BilinearForm::from_terms(3, &[((1, 1), q(1))]);
        assert_eq!(codim1_split_check(&heisenberg(1), 1, &b), Ok(true));
    }

    #[test]
    fn codim1_split_rejects_bad_inputs() {
        // x3 appears as a bracket target, so the complement of x3 is no ideal.
        assert_eq!(
            codim1_split_check(&g5_4(), 3, &table1_form_g5_4()),
            Err(KoszulError::NotAnIdeal { label: 3 })
        );
        let bad = BilinearForm::from_terms(5, &[((2, 2), q(1))]);
        assert!(matches!(
            codim1_split_check(&g5_4(), 1, &bad),
            Err(KoszulError::NotInvariant { .. })
        ));
    }

    // ==== serialization ====

    #[test]
    fn reports_serialize_with_stable_keys() {
        let a = koszul_analysis(&g5_4());
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            r#"{"invariant_dim":4,"p":2,"c":2,"ker_dim":3,"im_dim":1,"i_null":false,"i_exact":true,"quadratic":true}"#
        );
        let d = hl2_decomposition(&g5_4(), Coefficients::Trivial).unwrap();
        assert_eq!(
            serde_json::to_string(&d).unwrap(),
            r#"{"h2":3,"zl20":3,"coupled":1,"hl2":7,"hl2_direct":7}"#
        );
    }
}
