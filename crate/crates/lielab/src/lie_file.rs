//! The `.lie` text format: a minimal, line-oriented serialization of a
//! structure-constant table.
//!
//! ```text
//! # comment
//! dim 5
//! name g5_4
//! 1 2 3 1
//! 1 3 4 1
//! 2 3 5 1
//! ```
//!
//! * first significant line: `dim N`;
//! * optional next line: `name <string>` (rest of line, trimmed);
//! * bracket lines `i j k c` with 1-based labels, `i < j`, and `c` an integer
//!   or fraction `p/q`: the coefficient of `x_k` in `[x_i, x_j]`;
//! * `#` starts a comment (whole line or trailing); blank lines are ignored;
//! * repeating a `(i, j, k)` triple is an error.

use crate::algebra::{validate, AlgebraError, LieAlgebra};
use crate::Q;
use num_bigint::BigInt;
use std::collections::BTreeMap;
use std::str::FromStr;

/// Errors from reading a `.lie` document (the Jacobi check runs after parsing
/// and reports through [`AlgebraError`]).
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: expected `dim N` as the first significant line")]
    MissingDim { line: usize },
    #[error("line {line}: malformed entry `{content}` (expected `i j k coefficient`)")]
    MalformedLine { line: usize, content: String },
    #[error("line {line}: invalid coefficient `{content}`")]
    BadCoefficient { line: usize, content: String },
    #[error("line {line}: duplicate bracket component ({i},{j},{k})")]
    DuplicateEntry { line: usize, i: usize, j: usize, k: usize },
    #[error("algebra invalid: {0}")]
    Algebra(#[from] AlgebraError),
}

fn parse_rational(text: &str) -> Option<Q> {
    match text.split_once('/') {
        Some((num, den)) => {
            let num = BigInt::from_str(num).ok()?;
            let den = BigInt::from_str(den).ok()?;
            if den == BigInt::from(0) {
                return None;
            }
            Some(Q::new(num, den))
        }
        None => Some(Q::from_integer(BigInt::from_str(text).ok()?)),
    }
}

/// Parses a `.lie` document into a validated [`LieAlgebra`].
pub fn parse(text: &str) -> Result<LieAlgebra, ParseError> {
    let mut dim: Option<usize> = None;
    let mut name: Option<String> = None;
    let mut seen: BTreeMap<(usize, usize, usize), usize> = BTreeMap::new();
    let mut raw: Vec<((usize, usize), Vec<(usize, Q)>)> = Vec::new();
    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw_line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if dim.is_none() {
            match line.strip_prefix("dim ").map(str::trim).and_then(|s| s.parse::<usize>().ok()) {
                Some(n) => {
                    dim = Some(n);
                    continue;
                }
                None => return Err(ParseError::MissingDim { line: line_no }),
            }
        }
        if name.is_none() && raw.is_empty() {
            if let Some(rest) = line.strip_prefix("name ") {
                name = Some(rest.trim().to_string());
                continue;
            }
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 4 {
            return Err(ParseError::MalformedLine { line: line_no, content: line.to_string() });
        }
        let parse_idx = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| ParseError::MalformedLine { line: line_no, content: line.to_string() })
        };
        let (i, j, k) = (parse_idx(fields[0])?, parse_idx(fields[1])?, parse_idx(fields[2])?);
        let coeff = parse_rational(fields[3])
            .ok_or_else(|| ParseError::BadCoefficient { line: line_no, content: fields[3].to_string() })?;
        if let Some(prev) = seen.insert((i, j, k), line_no) {
            let _ = prev;
            return Err(ParseError::DuplicateEntry { line: line_no, i, j, k });
        }
        raw.push(((i, j), vec![(k, coeff)]));
    }
    let dim = dim.ok_or(ParseError::MissingDim { line: text.lines().count() + 1 })?;
    Ok(validate(&raw, dim, name.as_deref().unwrap_or("unnamed"))?)
}

/// Serializes an algebra back to the `.lie` format (1-based labels).
pub fn serialize(g: &LieAlgebra) -> String {
    let mut out = String::new();
    out.push_str(&format!("dim {}\n", g.dim()));
    out.push_str(&format!("name {}\n", g.name()));
    for ((i, j), targets) in g.brackets() {
        for (k, c) in targets {
            out.push_str(&format!("{} {} {} {}\n", i + 1, j + 1, k + 1, c));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::q;

    const G5_4: &str = "\
# three brackets
dim 5
name g5_4
1 2 3 1
1 3 4 1
2 3 5 1   # trailing comment
";

    #[test]
    fn parses_document_with_comments() {
        let g = parse(G5_4).unwrap();
        assert_eq!(g.dim(), 5);
        assert_eq!(g.name(), "g5_4");
        assert_eq!(g.bracket(0, 1), vec![(2, q(1))]);
    }

    #[test]
    fn roundtrips_through_serialize() {
        let g = parse(G5_4).unwrap();
        let again = parse(&serialize(&g)).unwrap();
        assert_eq!(g, again);
    }

    #[test]
    fn parses_fractional_coefficients() {
        let g = parse("dim 3\n1 2 3 -1/2\n").unwrap();
        assert_eq!(g.bracket(0, 1), vec![(2, crate::q_ratio(-1, 2))]);
        assert_eq!(g.name(), "unnamed");
    }

    #[test]
    fn rejects_missing_dim_and_malformed_lines() {
        assert!(matches!(parse("1 2 3 1\n"), Err(ParseError::MissingDim { .. })));
        assert!(matches!(parse("dim 3\n1 2 3\n"), Err(ParseError::MalformedLine { .. })));
        assert!(matches!(parse("dim 3\n1 2 3 x\n"), Err(ParseError::BadCoefficient { .. })));
    }

    #[test]
    fn rejects_duplicate_triples() {
        let doc = "dim 3\n1 2 3 1\n1 2 3 2\n";
        assert!(matches!(parse(doc), Err(ParseError::DuplicateEntry { i: 1, j: 2, k: 3, .. })));
    }

    #[test]
    fn surfaces_jacobi_violations() {
        let doc = "dim 3\n1 2 3 1\n1 3 1 1\n";
        assert!(matches!(parse(doc), Err(ParseError::Algebra(AlgebraError::JacobiViolation { .. }))));
    }

    #[test]
    fn surfaces_bad_indices_from_validation() {
        let doc = "dim 3\n2 1 3 1\n";
        assert!(matches!(
            parse(doc),
            Err(ParseError::Algebra(AlgebraError::InvalidBracketPair { .. }))
        ));
    }
}
