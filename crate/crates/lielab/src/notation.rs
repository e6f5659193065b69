//! Rendering of vectors and forms in classical dual-basis notation.
//!
//! Basis vectors print as `x₁, x₂, …` (subscript digits), dual vectors as
//! `ω¹, ω², …` (superscript digits), wedge monomials as `ω^{1,5}` with 1-based
//! comma-separated indices, and symmetric products as `ω¹∘ω⁵` with the
//! convention `ω∘π = ω⊗π + π⊗ω` (diagonal squares print as `ω³⊗ω³`).
//!
//! All public entry points take 0-based internal indices and render 1-based
//! labels; signed sums use the minus sign `−` (U+2212).

use crate::Q;
use num_traits::{One, Signed};

const SUPERSCRIPTS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
const SUBSCRIPTS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];

fn digits(label: usize, table: &[char; 10]) -> String {
    label.to_string().chars().map(|c| table[c.to_digit(10).unwrap() as usize]).collect()
}

/// `x₅`-style basis vector for 0-based index 4.
pub fn basis_vector(index: usize) -> String {
    format!("x{}", digits(index + 1, &SUBSCRIPTS))
}

/// `ω⁵`-style dual vector for 0-based index 4.
pub fn dual_vector(index: usize) -> String {
    format!("ω{}", digits(index + 1, &SUPERSCRIPTS))
}

/// `ω^{1,5}`-style wedge monomial for a 0-based increasing index tuple.
pub fn wedge(indices: &[usize]) -> String {
    let labels: Vec<String> = indices.iter().map(|i| (i + 1).to_string()).collect();
    format!("ω^{{{}}}", labels.join(","))
}

/// `ω¹∘ω⁵` off the diagonal, `ω³⊗ω³` on it.
pub fn symmetric_product(i: usize, j: usize) -> String {
    let (i, j) = (i.min(j), i.max(j));
    if i == j {
        format!("{}⊗{}", dual_vector(i), dual_vector(i))
    } else {
        format!("{}∘{}", dual_vector(i), dual_vector(j))
    }
}

/// A rational coefficient as `3`, `-1/2`, etc.
pub fn rational(c: &Q) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Renders `Σ cᵢ·termᵢ` as a signed sum: unit coefficients are dropped,
/// negative terms join with ` − `, and the empty sum is `0`.
pub fn signed_sum<I: IntoIterator<Item = (String, Q)>>(terms: I) -> String {
    let mut out = String::new();
    for (term, coeff) in terms {
        let negative = coeff.is_negative();
        let magnitude = coeff.abs();
        if out.is_empty() {
            if negative {
                out.push('−');
            }
        } else {
            out.push_str(if negative { " − " } else { " + " });
        }
        if !magnitude.is_one() {
            out.push_str(&rational(&magnitude));
            out.push('·');
        }
        out.push_str(&term);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{q, q_ratio};

    #[test]
    fn vectors_and_wedges_render_one_based() {
        assert_eq!(basis_vector(4), "x₅");
        assert_eq!(basis_vector(11), "x₁₂");
        assert_eq!(dual_vector(0), "ω¹");
        assert_eq!(dual_vector(23), "ω²⁴");
        assert_eq!(wedge(&[0, 4]), "ω^{1,5}");
        assert_eq!(wedge(&[0, 1, 2]), "ω^{1,2,3}");
    }

    #[test]
    fn symmetric_products_follow_table_convention() {
        assert_eq!(symmetric_product(0, 4), "ω¹∘ω⁵");
        assert_eq!(symmetric_product(4, 0), "ω¹∘ω⁵");
        assert_eq!(symmetric_product(2, 2), "ω³⊗ω³");
    }

    #[test]
    fn signed_sums_render_like_the_tables() {
        let b = signed_sum([
            (symmetric_product(0, 4), q(1)),
            (symmetric_product(1, 3), q(-1)),
            (symmetric_product(2, 2), q(1)),
        ]);
        assert_eq!(b, "ω¹∘ω⁵ − ω²∘ω⁴ + ω³⊗ω³");
        let three = signed_sum([(wedge(&[0, 1, 4]), q(-1)), (wedge(&[0, 2, 3]), q(1))]);
        assert_eq!(three, "−ω^{1,2,5} + ω^{1,3,4}");
        assert_eq!(signed_sum([]), "0");
        assert_eq!(signed_sum([(wedge(&[0, 1]), q_ratio(-3, 2))]), "−3/2·ω^{1,2}");
    }
}
