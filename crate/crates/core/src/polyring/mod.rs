//! Graded pieces of homogeneous ideals in `Q[x, y, z]` and its subrings,
//! computed one degree at a time with exact linear algebra.
//!
//! An ideal never appears as a global object here: every question is asked
//! of a single degree piece `I_d`, represented as a [`GradedSubspace`] of the
//! degree-`d` polynomials. Colon ideals, intersections and generator counts
//! all reduce to kernels and spans of coefficient matrices in the fixed
//! grevlex basis (`x > y > z`).

mod hpoly;
mod monomial;
mod subspace;

pub use hpoly::HPoly;
pub use monomial::{grevlex_cmp, Exponent, MonomialBasis, Var, VarSet};
pub use subspace::GradedSubspace;

use alloc::vec::Vec;
use num_traits::Zero;
use thiserror::Error;

use crate::exactla::{QMatrix, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("degrees do not match")]
    DegreeMismatch,
    #[error("subspaces live in different rings")]
    RingMismatch,
    #[error("monomial uses a variable outside the ring")]
    VariableOutsideRing,
    #[error("expected {expected} coefficients, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("substitution matrix must be 3x3")]
    SubstitutionShape,
    #[error("substitution matrix is singular")]
    SingularSubstitution,
}

/// Matrix of `g -> f * g` from degree `d` to degree `d + deg f`, in the ring
/// of `f`. Column `j` holds the coefficients of `f` times the `j`-th basis
/// monomial.
pub fn mult_map(f: &HPoly, d: u32) -> QMatrix {
    let vars = f.vars();
    let domain = MonomialBasis::new(vars, d);
    let target = MonomialBasis::new(vars, d + f.degree());
    let mut cols = Vec::with_capacity(domain.len());
    let terms = f.terms();
    for m in domain.monomials() {
        let mut col = alloc::vec![Rational::zero(); target.len()];
        for (e, c) in &terms {
            let p = [e[0] + m[0], e[1] + m[1], e[2] + m[2]];
            col[target.index_of(&p).expect("product monomial")] += c;
        }
        cols.push(col);
    }
    QMatrix::from_columns(target.len(), &cols)
}

/// `I_d` for the ideal of `ring` generated by `gens`. Generators of degree
/// above `d` contribute nothing.
pub fn ideal_piece(ring: VarSet, gens: &[HPoly], d: u32) -> Result<GradedSubspace, PolyError> {
    let mut vectors = Vec::new();
    for g in gens {
        if g.degree() > d {
            continue;
        }
        let g = g.embed(ring)?;
        vectors.extend(mult_map(&g, d - g.degree()).columns());
    }
    Ok(GradedSubspace::from_vectors(ring, d, vectors))
}

/// `{ g of degree d : f * g ∈ target }` for a subspace `target` of degree
/// `d + deg f`: the `g`-block of the kernel of `[mult(f) | -basis(target)]`.
pub fn colon_subspace(f: &HPoly, target: &GradedSubspace, d: u32) -> Result<GradedSubspace, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if target.degree() != d + f.degree() {
        return Err(PolyError::DegreeMismatch);
    }
    let ring = target.vars();
    let f = f.embed(ring)?;
    let m = mult_map(&f, d);
    let domain = m.cols();
    if target.dim() == 0 {
        return Ok(GradedSubspace::zero(ring, d));
    }
    let block = QMatrix::hstack(&[&m, &-target.basis_matrix()]).expect("same target basis");
    let (_, kernel) = block.rref_rank_nullspace();
    let g_rows: Vec<usize> = (0..domain).collect();
    let all: Vec<usize> = (0..kernel.cols()).collect();
    Ok(GradedSubspace::from_vectors(
        ring,
        d,
        kernel.submatrix(&g_rows, &all).columns(),
    ))
}

/// `(⟨gens⟩ : f)_d`.
pub fn colon_piece(ring: VarSet, gens: &[HPoly], f: &HPoly, d: u32) -> Result<GradedSubspace, PolyError> {
    let target = ideal_piece(ring, gens, d + f.degree())?;
    colon_subspace(f, &target, d)
}

/// `R_1 · S`: the span of every ring variable times every element of `S`.
pub fn times_linear_forms(s: &GradedSubspace) -> GradedSubspace {
    let ring = s.vars();
    let mut vectors = Vec::new();
    for v in ring.vars() {
        let m = mult_map(&HPoly::var(ring, v).expect("variable of ring"), s.degree());
        vectors.extend((&m * s.basis_matrix()).columns());
    }
    GradedSubspace::from_vectors(ring, s.degree() + 1, vectors)
}

/// Polynomials of `piece` not accounted for by `R_1 · lower`, picked from
/// the echelon basis of `piece` in order. `lower` is the previous degree of
/// the same ideal (`None` in degree zero).
pub fn new_generators(lower: Option<&GradedSubspace>, piece: &GradedSubspace) -> Result<Vec<HPoly>, PolyError> {
    let mut acc = match lower {
        Some(l) => {
            let up = times_linear_forms(l);
            if up.degree() != piece.degree() || up.vars() != piece.vars() {
                return Err(PolyError::DegreeMismatch);
            }
            up
        }
        None => GradedSubspace::zero(piece.vars(), piece.degree()),
    };
    let mut out = Vec::new();
    for p in piece.basis_polys() {
        if !acc.contains(&p)? {
            acc = acc.sum(&GradedSubspace::span(piece.vars(), piece.degree(), core::slice::from_ref(&p))?)?;
            out.push(p);
        }
    }
    Ok(out)
}

/// `dim I_d - dim (R_1 · I_{d-1})`, given the two pieces.
pub fn generators_in_degree(lower: Option<&GradedSubspace>, piece: &GradedSubspace) -> usize {
    let below = lower.map_or(0, |l| times_linear_forms(l).dim());
    piece.dim() - below
}

/// Number of minimal generators of `⟨gens⟩` in degree `d`.
pub fn min_gens_count(ring: VarSet, gens: &[HPoly], d: u32) -> Result<usize, PolyError> {
    let piece = ideal_piece(ring, gens, d)?;
    if d == 0 {
        return Ok(piece.dim());
    }
    let lower = ideal_piece(ring, gens, d - 1)?;
    Ok(generators_in_degree(Some(&lower), &piece))
}

/// Minimal generator counts in degrees `0..=max_degree` of the ideal whose
/// pieces `piece(d)` returns.
pub fn generator_degrees<F>(max_degree: u32, mut piece: F) -> Result<Vec<usize>, PolyError>
where
    F: FnMut(u32) -> Result<GradedSubspace, PolyError>,
{
    let mut counts = Vec::new();
    let mut prev: Option<GradedSubspace> = None;
    for d in 0..=max_degree {
        let cur = piece(d)?;
        counts.push(generators_in_degree(prev.as_ref(), &cur));
        prev = Some(cur);
    }
    Ok(counts)
}
