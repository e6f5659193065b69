//! Positive-root systems of the finite types, the triple-sum property on
//! positive roots, and explicit nilradicals of Borel subalgebras.
//!
//! Roots are stored as exact coordinate vectors: each coordinate is a pair
//! `a + b·√d` of rationals, where the radicand `d` is fixed per system (3 for
//! `E₆`, 2 for `E₇`, absent elsewhere). Sums and membership queries are exact
//! pair comparisons, so the triple-sum check involves no rounding anywhere.
//!
//! Nilradicals come in two flavours: matrix models for the classical types
//! (strictly upper-triangular `E_{i,j}` for `Aₙ`, the block models `Ẽ/F̃`,
//! `ṽ/Ẽ/F̃` and `Ẽ/F̂` for `Dₙ`, `Bₙ` and `Cₙ`), and fixed commutation tables
//! for `G₂⁺` and `F₄⁺`. Every model passes the Jacobi validation on
//! construction, which doubles as an independent check of the transcribed
//! `F₄⁺` table.

use crate::algebra::{self, LieAlgebra};
use crate::lie_file;
use crate::notation;
use crate::{q, q_ratio, Q};
use num_traits::{One, Zero};
use std::fmt;
use std::str::FromStr;

/// The seven families of finite root systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RootType::A => "A",
            RootType::B => "B",
            RootType::C => "C",
            RootType::D => "D",
            RootType::E => "E",
            RootType::F => "F",
            RootType::G => "G",
        })
    }
}

impl FromStr for RootType {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "A" | "a" => Ok(RootType::A),
            "B" | "b" => Ok(RootType::B),
            "C" | "c" => Ok(RootType::C),
            "D" | "d" => Ok(RootType::D),
            "E" | "e" => Ok(RootType::E),
            "F" | "f" => Ok(RootType::F),
            "G" | "g" => Ok(RootType::G),
            other => Err(format!("unknown root-system type {other:?} (expected A–G)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RootError {
    #[error("no construction for {root_type}{rank} (supported: A≥1, B/C/D≥2, E6–E8 roots only, F4, G2)")]
    UnsupportedType { root_type: RootType, rank: usize },
}

/// One exact coordinate `a + b·√d`; the radicand `d` is carried by the
/// surrounding [`RootSystem`] and `b = 0` whenever the system has none.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coord {
    pub a: Q,
    pub b: Q,
}

impl Coord {
    pub fn rational(a: Q) -> Coord {
        Coord { a, b: Q::zero() }
    }

    pub fn surd(b: Q) -> Coord {
        Coord { a: Q::zero(), b }
    }

    pub fn zero() -> Coord {
        Coord { a: Q::zero(), b: Q::zero() }
    }

    fn add(&self, other: &Coord) -> Coord {
        Coord { a: self.a.clone() + other.a.clone(), b: self.b.clone() + other.b.clone() }
    }
}

/// A root as an exact coordinate vector.
pub type Root = Vec<Coord>;

/// Coordinate-wise sum of two roots.
pub fn root_sum(x: &Root, y: &Root) -> Root {
    assert_eq!(x.len(), y.len(), "roots must live in the same coordinate space");
    x.iter().zip(y).map(|(c, d)| c.add(d)).collect()
}

/// The positive roots of one finite system, sorted lexicographically on the
/// coordinate vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSystem {
    pub root_type: RootType,
    pub rank: usize,
    /// Radicand of the irrational scale (`Some(3)` for `E₆`, `Some(2)` for
    /// `E₇`, `None` otherwise).
    pub surd: Option<u32>,
    pub positive_roots: Vec<Root>,
}

impl RootSystem {
    fn new(root_type: RootType, rank: usize, surd: Option<u32>, mut roots: Vec<Root>) -> RootSystem {
        roots.sort();
        for w in roots.windows(2) {
            assert!(w[0] != w[1], "positive roots must be pairwise distinct");
        }
        RootSystem { root_type, rank, surd, positive_roots: roots }
    }

    /// Exact membership query.
    pub fn contains(&self, root: &Root) -> bool {
        self.positive_roots.binary_search(root).is_ok()
    }

    /// Renders one root as a coordinate tuple, e.g. `(1/2, -1/2, √3/2)`.
    pub fn render_root(&self, root: &Root) -> String {
        let coords: Vec<String> = root
            .iter()
            .map(|c| {
                if c.b.is_zero() {
                    notation::rational(&c.a)
                } else {
                    let d = self.surd.expect("surd coordinates require a radicand");
                    let mut s = String::new();
                    if !c.a.is_zero() {
                        s.push_str(&notation::rational(&c.a));
                        s.push('+');
                    }
                    let num = c.b.numer().clone();
                    let den = c.b.denom().clone();
                    if num == (-1).into() {
                        s.push('-');
                    } else if num != 1.into() {
                        s.push_str(&num.to_string());
                    }
                    s.push_str(&format!("√{d}"));
                    if !den.is_one() {
                        s.push_str(&format!("/{den}"));
                    }
                    s
                }
            })
            .collect();
        format!("({})", coords.join(", "))
    }
}

/// Outcome of the triple-sum check: for `α, β, γ ∈ Δ₊`, if `α+β ∈ Δ₊` and
/// `α+γ ∈ Δ₊` then `β+γ ∉ Δ₊`.
#[derive(Debug, Clone, PartialEq)]
pub enum PropertyVerdict {
    Pass,
    Fail { alpha: Root, beta: Root, gamma: Root },
}

impl PropertyVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, PropertyVerdict::Pass)
    }
}

/// Exhaustively checks the triple-sum property; on failure returns the
/// lexicographically first witness `(α, β, γ)`.
pub fn property_p(rs: &RootSystem) -> PropertyVerdict {
    let roots = &rs.positive_roots;
    for alpha in roots {
        // Only β with α+β ∈ Δ₊ can participate, which prunes the cubic scan.
        let partners: Vec<&Root> =
            roots.iter().filter(|b| rs.contains(&root_sum(alpha, b))).collect();
        for beta in &partners {
            for gamma in &partners {
                if rs.contains(&root_sum(beta, gamma)) {
                    return PropertyVerdict::Fail {
                        alpha: alpha.clone(),
                        beta: (*beta).clone(),
                        gamma: (*gamma).clone(),
                    };
                }
            }
        }
    }
    PropertyVerdict::Pass
}

fn unit(dim: usize, i: usize, sign: i64) -> Root {
    let mut r = vec![Coord::zero(); dim];
    r[i] = Coord::rational(q(sign));
    r
}

fn sum_pair(dim: usize, i: usize, j: usize, si: i64, sj: i64) -> Root {
    let mut r = vec![Coord::zero(); dim];
    r[i] = Coord::rational(q(si));
    r[j] = Coord::rational(q(sj));
    r
}

/// Half-sum roots `½(±ε₁ ± ⋯ ± ε_k) + last`, filtered by the parity of the
/// number of minus signs among the first `k` coordinates.
fn half_sum_family(dim: usize, k: usize, last: Coord, minus_parity: u32) -> Vec<Root> {
    let mut out = Vec::new();
    for mask in 0..(1u32 << k) {
        if mask.count_ones() % 2 != minus_parity {
            continue;
        }
        let mut r = vec![Coord::zero(); dim];
        for (i, coord) in r.iter_mut().enumerate().take(k) {
            let sign = if mask & (1 << i) != 0 { -1 } else { 1 };
            *coord = Coord::rational(q_ratio(sign, 2));
        }
        r[dim - 1] = last.clone();
        out.push(r);
    }
    out
}

/// Builds the positive-root set of the given finite type.
pub fn positive_roots(root_type: RootType, rank: usize) -> Result<RootSystem, RootError> {
    let unsupported = Err(RootError::UnsupportedType { root_type, rank });
    match (root_type, rank) {
        (RootType::A, n) if n >= 1 => {
            let dim = n + 1;
            let mut roots = Vec::new();
            for i in 0..dim {
                for j in i + 1..dim {
                    roots.push(sum_pair(dim, i, j, 1, -1));
                }
            }
            Ok(RootSystem::new(root_type, rank, None, roots))
        }
        (RootType::B, n) if n >= 2 => {
            let mut roots = Vec::new();
            for i in 0..n {
                roots.push(unit(n, i, 1));
                for j in i + 1..n {
                    roots.push(sum_pair(n, i, j, 1, -1));
                    roots.push(sum_pair(n, i, j, 1, 1));
                }
            }
            Ok(RootSystem::new(root_type, rank, None, roots))
        }
        (RootType::C, n) if n >= 2 => {
            let mut roots = Vec::new();
            for i in 0..n {
                roots.push(unit(n, i, 2));
                for j in i + 1..n {
                    roots.push(sum_pair(n, i, j, 1, -1));
                    roots.push(sum_pair(n, i, j, 1, 1));
                }
            }
            Ok(RootSystem::new(root_type, rank, None, roots))
        }
        (RootType::D, n) if n >= 2 => {
            let mut roots = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    roots.push(sum_pair(n, i, j, 1, -1));
                    roots.push(sum_pair(n, i, j, 1, 1));
                }
            }
            Ok(RootSystem::new(root_type, rank, None, roots))
        }
        (RootType::G, 2) => {
            // Sum-zero coordinates in ℝ³: short roots of squared length 2,
            // long ones of squared length 6.
            let raw: [[i64; 3]; 6] = [
                [1, -1, 0],
                [-2, 1, 1],
                [-1, 0, 1],
                [0, -1, 1],
                [1, -2, 1],
                [-1, -1, 2],
            ];
            let roots = raw
                .iter()
                .map(|v| v.iter().map(|x| Coord::rational(q(*x))).collect())
                .collect();
            Ok(RootSystem::new(root_type, rank, None, roots))
        }
        (RootType::F, 4) => {
            let mut roots = Vec::new();
            for i in 0..4 {
                roots.push(unit(4, i, 1));
                for j in i + 1..4 {
                    roots.push(sum_pair(4, i, j, 1, -1));
                    roots.push(sum_pair(4, i, j, 1, 1));
                }
            }
            for mask in 0..(1u32 << 3) {
                let mut r = vec![Coord::zero(); 4];
                r[0] = Coord::rational(q_ratio(1, 2));
                for i in 0..3 {
                    let sign = if mask & (1 << i) != 0 { -1 } else { 1 };
                    r[i + 1] = Coord::rational(q_ratio(sign, 2));
                }
                roots.push(r);
            }
            Ok(RootSystem::new(root_type, rank, None, roots))
        }
        (RootType::E, 6) => {
            let mut roots = Vec::new();
            for i in 0..5 {
                for j in i + 1..5 {
                    roots.push(sum_pair(6, i, j, 1, 1));
                    // ε_i − ε_j with j < i, i.e. the larger index positive.
                    roots.push(sum_pair(6, i, j, -1, 1));
                }
            }
            roots.extend(half_sum_family(6, 5, Coord::surd(q_ratio(1, 2)), 0));
            Ok(RootSystem::new(root_type, rank, Some(3), roots))
        }
        (RootType::E, 7) => {
            let mut roots = Vec::new();
            for i in 0..6 {
                for j in i + 1..6 {
                    roots.push(sum_pair(7, i, j, 1, 1));
                    roots.push(sum_pair(7, i, j, -1, 1));
                }
            }
            let mut top = vec![Coord::zero(); 7];
            top[6] = Coord::surd(q(1));
            roots.push(top);
            roots.extend(half_sum_family(7, 6, Coord::surd(q_ratio(1, 2)), 1));
            Ok(RootSystem::new(root_type, rank, Some(2), roots))
        }
        (RootType::E, 8) => {
            let mut roots = Vec::new();
            for i in 0..8 {
                for j in i + 1..8 {
                    roots.push(sum_pair(8, i, j, 1, 1));
                    roots.push(sum_pair(8, i, j, -1, 1));
                }
            }
            roots.extend(half_sum_family(8, 7, Coord::rational(q_ratio(1, 2)), 0));
            Ok(RootSystem::new(root_type, rank, None, roots))
        }
        _ => unsupported,
    }
}

/// A nilradical of a Borel subalgebra, with each basis vector labeled by its
/// matrix-model generator (or `xᵢ` for the fixed `G₂⁺`/`F₄⁺` tables).
#[derive(Debug, Clone)]
pub struct NilradicalModel {
    pub algebra: LieAlgebra,
    pub labels: Vec<String>,
}

type Raw = Vec<((usize, usize), Vec<(usize, Q)>)>;

fn push_bracket(raw: &mut Raw, a: usize, b: usize, targets: Vec<(usize, Q)>) {
    let mut merged: Vec<(usize, Q)> = Vec::new();
    for (t, c) in targets {
        if let Some(e) = merged.iter_mut().find(|(u, _)| *u == t) {
            e.1 += c;
        } else {
            merged.push((t, c));
        }
    }
    merged.retain(|(_, c)| !c.is_zero());
    if !merged.is_empty() {
        raw.push(((a + 1, b + 1), merged.into_iter().map(|(t, c)| (t + 1, c)).collect()));
    }
}

fn upper_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            out.push((i, j));
        }
    }
    out
}

fn pair_index(pairs: &[(usize, usize)], i: usize, j: usize) -> usize {
    pairs
        .iter()
        .position(|p| *p == (i, j))
        .expect("pair must belong to the basis")
}

/// `Aₙ⁺`: strictly upper-triangular matrices, basis `E_{i,j}` (`i<j≤n+1`)
/// in lexicographic order.
fn nilradical_a(n: usize) -> NilradicalModel {
    let pairs = upper_pairs(n + 1);
    let labels = pairs.iter().map(|(i, j)| format!("E_{{{i},{j}}}")).collect();
    let mut raw: Raw = Vec::new();
    for (a, (i, j)) in pairs.iter().enumerate() {
        for (b, (k, l)) in pairs.iter().enumerate().skip(a + 1) {
            let mut targets = Vec::new();
            if j == k {
                targets.push((pair_index(&pairs, *i, *l), q(1)));
            }
            if l == i {
                targets.push((pair_index(&pairs, *k, *j), q(-1)));
            }
            push_bracket(&mut raw, a, b, targets);
        }
    }
    let algebra = algebra::validate(&raw, pairs.len(), &format!("A{n}+"))
        .expect("the matrix model satisfies Jacobi");
    NilradicalModel { algebra, labels }
}

/// Shared `Ẽ/F̃`-block bracket table of `Dₙ⁺`, reused inside `Bₙ⁺` at a basis
/// offset. `F̃` is antisymmetric: `F̃_{j,i} = −F̃_{i,j}`, `F̃_{i,i} = 0`.
fn d_block_brackets(n: usize, offset: usize, raw: &mut Raw) -> (Vec<(usize, usize)>, Vec<String>) {
    let pairs = upper_pairs(n);
    let m = pairs.len();
    let e_at = |i: usize, j: usize| offset + pair_index(&pairs, i, j);
    let f_signed = |i: usize, j: usize| -> Option<(usize, Q)> {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => None,
            Less => Some((offset + m + pair_index(&pairs, i, j), q(1))),
            Greater => Some((offset + m + pair_index(&pairs, j, i), q(-1))),
        }
    };
    for (a, (i, j)) in pairs.iter().enumerate() {
        // [Ẽ_{i,j}, Ẽ_{k,l}] = δ_{j,k} Ẽ_{i,l} − δ_{l,i} Ẽ_{k,j}
        for (b, (k, l)) in pairs.iter().enumerate().skip(a + 1) {
            let mut targets = Vec::new();
            if j == k {
                targets.push((e_at(*i, *l), q(1)));
            }
            if l == i {
                targets.push((e_at(*k, *j), q(-1)));
            }
            push_bracket(raw, offset + a, offset + b, targets);
        }
        // [Ẽ_{i,j}, F̃_{k,l}] = δ_{j,k} F̃_{i,l} − δ_{j,l} F̃_{i,k}
        for (b, (k, l)) in pairs.iter().enumerate() {
            let mut targets = Vec::new();
            if j == k {
                if let Some((t, s)) = f_signed(*i, *l) {
                    targets.push((t, s));
                }
            }
            if j == l {
                if let Some((t, s)) = f_signed(*i, *k) {
                    targets.push((t, s * q(-1)));
                }
            }
            push_bracket(raw, offset + a, offset + m + b, targets);
        }
    }
    let mut labels: Vec<String> = pairs.iter().map(|(i, j)| format!("Ẽ_{{{i},{j}}}")).collect();
    labels.extend(pairs.iter().map(|(i, j)| format!("F̃_{{{i},{j}}}")));
    (pairs, labels)
}

/// `Dₙ⁺`: basis `Ẽ_{i,j}` then `F̃_{i,j}` (`i<j≤n`, lexicographic).
fn nilradical_d(n: usize) -> NilradicalModel {
    let mut raw: Raw = Vec::new();
    let (pairs, labels) = d_block_brackets(n, 0, &mut raw);
    let algebra = algebra::validate(&raw, 2 * pairs.len(), &format!("D{n}+"))
        .expect("the matrix model satisfies Jacobi");
    NilradicalModel { algebra, labels }
}

/// `Bₙ⁺ = (⊕ ℂṽ_q) ⊕ Dₙ⁺`: basis `ṽ_1..ṽ_n`, then the `Dₙ⁺` block.
fn nilradical_b(n: usize) -> NilradicalModel {
    let mut raw: Raw = Vec::new();
    let (pairs, d_labels) = d_block_brackets(n, n, &mut raw);
    let m = pairs.len();
    // [ṽ_q, ṽ_s] = F̃_{s,q} for s < q, i.e. −F̃_{q,s} in basis order q < s.
    for qi in 1..=n {
        for s in qi + 1..=n {
            push_bracket(&mut raw, qi - 1, s - 1, vec![(n + m + pair_index(&pairs, qi, s), q(-1))]);
        }
        // [ṽ_q, Ẽ_{i,j}] = −δ_{q,j} ṽ_i
        for (b, (i, j)) in pairs.iter().enumerate() {
            if *j == qi {
                push_bracket(&mut raw, qi - 1, n + b, vec![(i - 1, q(-1))]);
            }
        }
        // [ṽ_q, F̃_{i,j}] = 0
    }
    let mut labels: Vec<String> = (1..=n).map(|qi| format!("ṽ_{qi}")).collect();
    labels.extend(d_labels);
    let algebra = algebra::validate(&raw, n + 2 * m, &format!("B{n}+"))
        .expect("the matrix model satisfies Jacobi");
    NilradicalModel { algebra, labels }
}

/// `Cₙ⁺`: basis `Ẽ_{i,j}` (`i<j`) then `F̂_{k,l}` (`k≤l`), lexicographic;
/// `F̂` is symmetric and includes the diagonal.
fn nilradical_c(n: usize) -> NilradicalModel {
    let e_pairs = upper_pairs(n);
    let mut f_pairs = Vec::new();
    for k in 1..=n {
        for l in k..=n {
            f_pairs.push((k, l));
        }
    }
    let m = e_pairs.len();
    let f_at = |i: usize, j: usize| m + pair_index(&f_pairs, i.min(j), i.max(j));
    let mut raw: Raw = Vec::new();
    for (a, (i, j)) in e_pairs.iter().enumerate() {
        // [Ẽ_{i,j}, Ẽ_{k,l}] as in the D-block.
        for (b, (k, l)) in e_pairs.iter().enumerate().skip(a + 1) {
            let mut targets = Vec::new();
            if j == k {
                targets.push((pair_index(&e_pairs, *i, *l), q(1)));
            }
            if l == i {
                targets.push((pair_index(&e_pairs, *k, *j), q(-1)));
            }
            push_bracket(&mut raw, a, b, targets);
        }
        // [Ẽ_{i,j}, F̂_{k,l}] = δ_{j,k} F̂_{i,l} + δ_{j,l} F̂_{i,k}
        for (b, (k, l)) in f_pairs.iter().enumerate() {
            let mut targets = Vec::new();
            if j == k {
                targets.push((f_at(*i, *l), q(1)));
            }
            if j == l {
                targets.push((f_at(*i, *k), q(1)));
            }
            push_bracket(&mut raw, a, m + b, targets);
        }
    }
    let mut labels: Vec<String> = e_pairs.iter().map(|(i, j)| format!("Ẽ_{{{i},{j}}}")).collect();
    labels.extend(f_pairs.iter().map(|(k, l)| format!("F̂_{{{k},{l}}}")));
    let algebra = algebra::validate(&raw, m + f_pairs.len(), &format!("C{n}+"))
        .expect("the matrix model satisfies Jacobi");
    NilradicalModel { algebra, labels }
}

fn nilradical_from_table(text: &str) -> NilradicalModel {
    let algebra = lie_file::parse(text).expect("the embedded commutation table is valid");
    let labels = (0..algebra.dim()).map(notation::basis_vector).collect();
    NilradicalModel { algebra, labels }
}

/// Builds the nilradical of the Borel subalgebra of the given type as an
/// explicit Lie algebra (dimension = number of positive roots).
pub fn nilradical(root_type: RootType, rank: usize) -> Result<NilradicalModel, RootError> {
    let model = match (root_type, rank) {
        (RootType::A, n) if n >= 1 => nilradical_a(n),
        (RootType::B, n) if n >= 2 => nilradical_b(n),
        (RootType::C, n) if n >= 2 => nilradical_c(n),
        (RootType::D, n) if n >= 2 => nilradical_d(n),
        (RootType::G, 2) => nilradical_from_table(include_str!("../data/g2_plus.lie")),
        (RootType::F, 4) => nilradical_from_table(include_str!("../data/f4_plus.lie")),
        _ => return Err(RootError::UnsupportedType { root_type, rank }),
    };
    if let Ok(rs) = positive_roots(root_type, rank) {
        assert_eq!(
            model.algebra.dim(),
            rs.positive_roots.len(),
            "nilradical dimension must equal the positive-root count"
        );
    }
    assert_eq!(model.labels.len(), model.algebra.dim());
    Ok(model)
}
