use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use super::monomial::{Exponent, MonomialBasis, Var, VarSet};
use super::PolyError;
use crate::exactla::{QMatrix, Rational};

/// Homogeneous polynomial: a coefficient vector over the grevlex monomial
/// basis of one degree in one variable subset.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HPoly {
    vars: VarSet,
    degree: u32,
    coeffs: Vec<Rational>,
}

impl HPoly {
    pub fn zero(vars: VarSet, degree: u32) -> Self {
        HPoly {
            vars,
            degree,
            coeffs: vec![Rational::zero(); MonomialBasis::count(vars, degree)],
        }
    }

    pub fn from_coeffs(vars: VarSet, degree: u32, coeffs: Vec<Rational>) -> Result<Self, PolyError> {
        let expected = MonomialBasis::count(vars, degree);
        if coeffs.len() != expected {
            return Err(PolyError::LengthMismatch {
                expected,
                got: coeffs.len(),
            });
        }
        Ok(HPoly {
            vars,
            degree,
            coeffs,
        })
    }

    /// Sum of terms, which must all have the same total degree and only use
    /// variables of `vars`. Repeated monomials accumulate.
    pub fn from_terms(vars: VarSet, terms: &[(Exponent, Rational)]) -> Result<Self, PolyError> {
        let Some((first, _)) = terms.first() else {
            return Ok(HPoly::zero(vars, 0));
        };
        let degree: u32 = first.iter().sum();
        let basis = MonomialBasis::new(vars, degree);
        let mut coeffs = vec![Rational::zero(); basis.len()];
        for (e, c) in terms {
            if e.iter().sum::<u32>() != degree {
                return Err(PolyError::NotHomogeneous);
            }
            let i = basis.index_of(e).ok_or(PolyError::VariableOutsideRing)?;
            coeffs[i] += c;
        }
        Ok(HPoly {
            vars,
            degree,
            coeffs,
        })
    }

    pub fn monomial(vars: VarSet, e: Exponent, c: Rational) -> Result<Self, PolyError> {
        Self::from_terms(vars, &[(e, c)])
    }

    pub fn one(vars: VarSet) -> Self {
        HPoly {
            vars,
            degree: 0,
            coeffs: vec![Rational::one()],
        }
    }

    /// The variable `v` as a degree-one polynomial of `vars`.
    pub fn var(vars: VarSet, v: Var) -> Result<Self, PolyError> {
        let mut e = [0; 3];
        e[v.index()] = 1;
        Self::monomial(vars, e, Rational::one())
    }

    /// `a x + b y + c z` in `Q[x, y, z]`.
    pub fn linear_form(a: Rational, b: Rational, c: Rational) -> Self {
        Self::from_terms(VarSet::XYZ, &[([1, 0, 0], a), ([0, 1, 0], b), ([0, 0, 1], c)])
            .expect("linear form is homogeneous")
    }

    pub fn vars(&self) -> VarSet {
        self.vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn basis(&self) -> MonomialBasis {
        MonomialBasis::new(self.vars, self.degree)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn coeff(&self, e: &Exponent) -> Rational {
        self.basis()
            .index_of(e)
            .map_or_else(Rational::zero, |i| self.coeffs[i].clone())
    }

    /// Nonzero terms in grevlex order, largest monomial first.
    pub fn terms(&self) -> Vec<(Exponent, Rational)> {
        self.basis()
            .monomials()
            .iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (*e, c.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The same polynomial viewed in a larger ring.
    pub fn embed(&self, vars: VarSet) -> Result<Self, PolyError> {
        if vars == self.vars {
            return Ok(self.clone());
        }
        if !self.vars.is_subset(vars) {
            return Err(PolyError::VariableOutsideRing);
        }
        let target = MonomialBasis::new(vars, self.degree);
        let mut coeffs = vec![Rational::zero(); target.len()];
        for (e, c) in self.terms() {
            coeffs[target.index_of(&e).expect("subset basis")] = c;
        }
        Ok(HPoly {
            vars,
            degree: self.degree,
            coeffs,
        })
    }

    /// Brings `self` and `other` into their common ring.
    fn aligned(&self, other: &HPoly) -> (HPoly, HPoly) {
        let vars = self.vars.union(other.vars);
        (
            self.embed(vars).expect("union contains both"),
            other.embed(vars).expect("union contains both"),
        )
    }

    pub fn checked_add(&self, other: &HPoly) -> Result<HPoly, PolyError> {
        if self.degree != other.degree {
            return Err(PolyError::DegreeMismatch);
        }
        let (a, b) = self.aligned(other);
        Ok(HPoly {
            vars: a.vars,
            degree: a.degree,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(p, q)| p + q).collect(),
        })
    }

    pub fn checked_sub(&self, other: &HPoly) -> Result<HPoly, PolyError> {
        self.checked_add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> HPoly {
        HPoly {
            vars: self.vars,
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn mul(&self, other: &HPoly) -> HPoly {
        let vars = self.vars.union(other.vars);
        let degree = self.degree + other.degree;
        let target = MonomialBasis::new(vars, degree);
        let mut coeffs = vec![Rational::zero(); target.len()];
        let rhs = other.terms();
        for (e, c) in self.terms() {
            for (f, d) in &rhs {
                let m = [e[0] + f[0], e[1] + f[1], e[2] + f[2]];
                coeffs[target.index_of(&m).expect("product monomial")] += &c * d;
            }
        }
        HPoly {
            vars,
            degree,
            coeffs,
        }
    }

    pub fn pow(&self, k: u32) -> HPoly {
        let mut acc = HPoly::one(self.vars);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Formal partial derivative. A constant differentiates to the zero
    /// constant.
    pub fn partial_derivative(&self, v: Var) -> HPoly {
        if self.degree == 0 {
            return HPoly::zero(self.vars, 0);
        }
        let target = MonomialBasis::new(self.vars, self.degree - 1);
        let mut coeffs = vec![Rational::zero(); target.len()];
        let i = v.index();
        for (mut e, c) in self.terms() {
            if e[i] == 0 {
                continue;
            }
            let k = Rational::from_integer(e[i].into());
            e[i] -= 1;
            coeffs[target.index_of(&e).expect("derivative monomial")] += c * k;
        }
        HPoly {
            vars: self.vars,
            degree: self.degree - 1,
            coeffs,
        }
    }

    /// `f(A (x, y, z))`: variable `i` is replaced by the linear form whose
    /// coefficients are row `i` of `a`. The result lives in `Q[x, y, z]`.
    pub fn linear_substitute(&self, a: &QMatrix) -> Result<HPoly, PolyError> {
        if a.rows() != 3 || a.cols() != 3 {
            return Err(PolyError::SubstitutionShape);
        }
        if a.det().map_err(|_| PolyError::SubstitutionShape)?.is_zero() {
            return Err(PolyError::SingularSubstitution);
        }
        let images: Vec<HPoly> = (0..3)
            .map(|i| HPoly::linear_form(a.get(i, 0).clone(), a.get(i, 1).clone(), a.get(i, 2).clone()))
            .collect();
        // powers[i][k] = images[i]^k
        let powers: Vec<Vec<HPoly>> = images
            .iter()
            .map(|l| {
                let mut ps = vec![HPoly::one(VarSet::XYZ)];
                for k in 1..=self.degree as usize {
                    let next = ps[k - 1].mul(l);
                    ps.push(next);
                }
                ps
            })
            .collect();
        let mut out = HPoly::zero(VarSet::XYZ, self.degree);
        for (e, c) in self.terms() {
            let term = powers[0][e[0] as usize]
                .mul(&powers[1][e[1] as usize])
                .mul(&powers[2][e[2] as usize])
                .scale(&c);
            out = out.checked_add(&term)?;
        }
        Ok(out)
    }

    /// `f(x, y, z) -> f(z, y, x)`; the ring is mapped accordingly, so a
    /// polynomial of `Q[x, y]` lands in `Q[y, z]`.
    pub fn swap_xz(&self) -> HPoly {
        let vars = self.vars.swap_xz();
        let terms: Vec<(Exponent, Rational)> = self
            .terms()
            .into_iter()
            .map(|(e, c)| ([e[2], e[1], e[0]], c))
            .collect();
        if terms.is_empty() {
            return HPoly::zero(vars, self.degree);
        }
        HPoly::from_terms(vars, &terms).expect("swap preserves homogeneity")
    }

    /// Coefficient of `v^(degree - i)` as a polynomial of degree `i` in the
    /// remaining variables of the ring.
    pub fn slice(&self, v: Var, i: u32) -> HPoly {
        let rest = VarSet::of(
            &self
                .vars
                .vars()
                .into_iter()
                .filter(|&w| w != v)
                .collect::<Vec<_>>(),
        );
        let power = self.degree - i;
        let terms: Vec<(Exponent, Rational)> = self
            .terms()
            .into_iter()
            .filter(|(e, _)| e[v.index()] == power)
            .map(|(mut e, c)| {
                e[v.index()] = 0;
                (e, c)
            })
            .collect();
        if terms.is_empty() {
            return HPoly::zero(rest, i);
        }
        HPoly::from_terms(rest, &terms).expect("slice is homogeneous")
    }
}

impl fmt::Debug for HPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HPoly{:?}({})", self.vars, self)
    }
}

/// Text form `c*x^a*y^b*z^c + ...`, monomials in grevlex order.
impl fmt::Display for HPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let abs = c.abs();
            let is_const = e.iter().all(|&p| p == 0);
            if !abs.is_one() || is_const {
                write!(f, "{}", abs)?;
            }
            let mut first = abs.is_one() && !is_const;
            for v in Var::ALL {
                let p = e[v.index()];
                if p == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                f.write_str(v.name())?;
                if p > 1 {
                    write!(f, "^{}", p)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{rat, ratio};
    use alloc::format;

    fn x() -> HPoly {
        HPoly::var(VarSet::XYZ, Var::X).unwrap()
    }
    fn y() -> HPoly {
        HPoly::var(VarSet::XYZ, Var::Y).unwrap()
    }
    fn z() -> HPoly {
        HPoly::var(VarSet::XYZ, Var::Z).unwrap()
    }

    #[test]
    fn derivatives() {
        let f = x().pow(2).mul(&y());
        let fx = f.partial_derivative(Var::X);
        assert_eq!(fx, x().mul(&y()).scale(&rat(2)));
        let g = y().pow(3);
        assert!(g.partial_derivative(Var::X).partial_derivative(Var::Z).is_zero());
        // y * d/dx d/dz (x z) = y
        let h = x().mul(&z());
        let out = y().mul(&h.partial_derivative(Var::X).partial_derivative(Var::Z));
        assert_eq!(out, y());
        let c = HPoly::one(VarSet::XYZ);
        assert!(c.partial_derivative(Var::Y).is_zero());
    }

    #[test]
    fn substitution() {
        let f = x().pow(2).mul(&z());
        assert_eq!(f.linear_substitute(&QMatrix::identity(3)).unwrap(), f);
        let swap = QMatrix::from_i64(&[[0, 0, 1], [0, 1, 0], [1, 0, 0]]);
        assert_eq!(f.linear_substitute(&swap).unwrap(), x().mul(&z().pow(2)));
        assert_eq!(f.swap_xz(), x().mul(&z().pow(2)));
        let singular = QMatrix::from_i64(&[[1, 0, 0], [1, 0, 0], [0, 0, 1]]);
        assert_eq!(f.linear_substitute(&singular), Err(PolyError::SingularSubstitution));
    }

    #[test]
    fn substitution_moves_nonpseudoedge_form() {
        // old coordinates expressed in the new ones
        let a = QMatrix::from_rows(vec![
            vec![ratio(3, 2), ratio(1, 2), ratio(-1, 2)],
            vec![ratio(1, 2), ratio(1, 2), ratio(-1, 2)],
            vec![ratio(1, 2), rat(0), ratio(-1, 2)],
        ])
        .unwrap();
        let l26 = HPoly::linear_form(rat(0), rat(1), rat(-1));
        assert_eq!(l26.linear_substitute(&a).unwrap(), y().scale(&ratio(1, 2)));
    }

    #[test]
    fn embedding_and_slices() {
        let a_y = HPoly::var(VarSet::XY, Var::Y).unwrap();
        assert_eq!(a_y.embed(VarSet::XYZ).unwrap(), y());
        assert_eq!(
            HPoly::var(VarSet::XY, Var::X).unwrap().embed(VarSet::YZ),
            Err(PolyError::VariableOutsideRing)
        );
        // F = z^2 x + z x y + y^3 - not homogeneous, build degree 3 instead
        let f = z().pow(2).mul(&x())
            .checked_add(&z().mul(&x()).mul(&y())).unwrap()
            .checked_add(&y().pow(3)).unwrap();
        assert_eq!(f.slice(Var::Z, 1), HPoly::var(VarSet::XY, Var::X).unwrap());
        assert_eq!(f.slice(Var::Z, 0), HPoly::zero(VarSet::XY, 0));
        assert_eq!(format!("{}", f.slice(Var::Z, 3)), "y^3");
        assert_eq!(format!("{}", f.slice(Var::Z, 2)), "x*y");
    }

    #[test]
    fn display() {
        let f = x().pow(2).scale(&rat(3)).checked_sub(&y().mul(&z()).scale(&ratio(1, 2))).unwrap();
        assert_eq!(format!("{}", f), "3*x^2 - 1/2*y*z");
        assert_eq!(format!("{}", HPoly::zero(VarSet::XY, 2)), "0");
        assert_eq!(format!("{}", HPoly::one(VarSet::XY).scale(&rat(-2))), "-2");
        assert!(HPoly::from_terms(VarSet::XY, &[([1, 0, 0], rat(1)), ([0, 2, 0], rat(1))]).is_err());
    }
}
