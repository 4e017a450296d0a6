use alloc::vec::Vec;

use super::hpoly::HPoly;
use super::monomial::{MonomialBasis, VarSet};
use super::PolyError;
use crate::exactla::column_echelon;
use crate::exactla::{QMatrix, Rational};

/// A linear subspace of the degree-`degree` polynomials of a ring, kept as
/// the columns of a matrix in reduced column echelon form. Two subspaces are
/// equal exactly when their basis matrices are.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedSubspace {
    vars: VarSet,
    degree: u32,
    basis: QMatrix,
}

impl GradedSubspace {
    pub fn from_vectors(vars: VarSet, degree: u32, vectors: Vec<Vec<Rational>>) -> Self {
        let len = MonomialBasis::count(vars, degree);
        debug_assert!(vectors.iter().all(|v| v.len() == len));
        GradedSubspace {
            vars,
            degree,
            basis: column_echelon(len, vectors),
        }
    }

    /// Span of polynomials, all of which must be of `degree` in a subring of `vars`.
    pub fn span(vars: VarSet, degree: u32, polys: &[HPoly]) -> Result<Self, PolyError> {
        let mut vectors = Vec::with_capacity(polys.len());
        for p in polys {
            if p.degree() != degree {
                return Err(PolyError::DegreeMismatch);
            }
            vectors.push(p.embed(vars)?.into_coeffs());
        }
        Ok(Self::from_vectors(vars, degree, vectors))
    }

    pub fn zero(vars: VarSet, degree: u32) -> Self {
        Self::from_vectors(vars, degree, Vec::new())
    }

    pub fn full(vars: VarSet, degree: u32) -> Self {
        GradedSubspace {
            vars,
            degree,
            basis: QMatrix::identity(MonomialBasis::count(vars, degree)),
        }
    }

    pub fn vars(&self) -> VarSet {
        self.vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.rows()
    }

    /// Dimension of the quotient of the ambient degree piece by this subspace.
    pub fn codim(&self) -> usize {
        self.ambient_dim() - self.dim()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim()
    }

    pub fn basis_matrix(&self) -> &QMatrix {
        &self.basis
    }

    pub fn basis_polys(&self) -> Vec<HPoly> {
        (0..self.dim())
            .map(|j| {
                HPoly::from_coeffs(self.vars, self.degree, self.basis.column(j))
                    .expect("basis column length")
            })
            .collect()
    }

    fn check_compatible(&self, other: &GradedSubspace) -> Result<(), PolyError> {
        if self.degree != other.degree {
            return Err(PolyError::DegreeMismatch);
        }
        if self.vars != other.vars {
            return Err(PolyError::RingMismatch);
        }
        Ok(())
    }

    pub fn contains(&self, p: &HPoly) -> Result<bool, PolyError> {
        if p.degree() != self.degree {
            return Err(PolyError::DegreeMismatch);
        }
        let v = p.embed(self.vars)?;
        if v.is_zero() {
            return Ok(true);
        }
        let rhs = QMatrix::from_columns(self.ambient_dim(), &[v.into_coeffs()]);
        Ok(self
            .basis
            .solve(&rhs)
            .expect("row counts agree")
            .is_some())
    }

    pub fn is_subspace_of(&self, other: &GradedSubspace) -> Result<bool, PolyError> {
        self.check_compatible(other)?;
        Ok(self.sum(other)?.dim() == other.dim())
    }

    pub fn sum(&self, other: &GradedSubspace) -> Result<GradedSubspace, PolyError> {
        self.check_compatible(other)?;
        let mut vectors = self.basis.columns();
        vectors.extend(other.basis.columns());
        Ok(Self::from_vectors(self.vars, self.degree, vectors))
    }

    /// `S1 ∩ S2` from the kernel of `[B1 | -B2]`, read off in the `B1`
    /// coordinates.
    pub fn intersect(&self, other: &GradedSubspace) -> Result<GradedSubspace, PolyError> {
        self.check_compatible(other)?;
        if self.dim() == 0 || other.dim() == 0 {
            return Ok(Self::zero(self.vars, self.degree));
        }
        let block = QMatrix::hstack(&[&self.basis, &-&other.basis]).expect("same ambient");
        let (_, kernel) = block.rref_rank_nullspace();
        let k1: Vec<usize> = (0..self.dim()).collect();
        let all: Vec<usize> = (0..kernel.cols()).collect();
        let coords = kernel.submatrix(&k1, &all);
        let span = &self.basis * &coords;
        Ok(Self::from_vectors(self.vars, self.degree, span.columns()))
    }
}
