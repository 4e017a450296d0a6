//! Text formats: matrix literals, polynomials and triangulation documents.

mod matrix;
mod poly;
mod tri;

pub use matrix::{format_matrix, parse_matrix};
pub use poly::parse_poly;
pub use tri::{delta_s_document, load_triangulation, parse_triangulation, Coord, LoadError, TriangulationDoc};

use std::fmt;

use splinekit_core::exactla::Rational;

/// A parse failure with a 1-based position in the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

/// `p/q` or an integer, with optional sign.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty number".into());
    }
    let q: Rational = s.parse().map_err(|_| format!("not a rational number: {s:?}"))?;
    Ok(q)
}
