use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// One of the three ring variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    Y,
    Z,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::X, Var::Y, Var::Z];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::Z => "z",
        }
    }
}

/// A subset of `{x, y, z}`, naming the polynomial ring a value lives in.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VarSet(u8);

impl VarSet {
    /// `R = Q[x, y, z]`.
    pub const XYZ: VarSet = VarSet(0b111);
    /// `A = Q[x, y]`.
    pub const XY: VarSet = VarSet(0b011);
    /// `B = Q[y, z]`.
    pub const YZ: VarSet = VarSet(0b110);

    pub fn of(vars: &[Var]) -> VarSet {
        VarSet(vars.iter().fold(0, |acc, v| acc | (1 << v.index())))
    }

    pub fn contains(self, v: Var) -> bool {
        self.0 & (1 << v.index()) != 0
    }

    pub fn vars(self) -> Vec<Var> {
        Var::ALL.iter().copied().filter(|&v| self.contains(v)).collect()
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VarSet) -> VarSet {
        VarSet(self.0 | other.0)
    }

    /// Image under the exchange `x <-> z`.
    pub fn swap_xz(self) -> VarSet {
        let x = self.0 & 1;
        let z = (self.0 >> 2) & 1;
        VarSet((self.0 & 0b010) | (x << 2) | z)
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.vars().into_iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(v.name())?;
        }
        f.write_str("}")
    }
}

/// Exponents of `x`, `y`, `z` (absent variables have exponent zero).
pub type Exponent = [u32; 3];

/// Graded reverse lexicographic comparison with `x > y > z`.
pub fn grevlex_cmp(a: &Exponent, b: &Exponent) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db)
        .then_with(|| b[2].cmp(&a[2]))
        .then_with(|| b[1].cmp(&a[1]))
        .then_with(|| b[0].cmp(&a[0]))
}

/// The monomials of one degree in a variable subset, largest first in grevlex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialBasis {
    vars: VarSet,
    degree: u32,
    monomials: Vec<Exponent>,
}

impl MonomialBasis {
    pub fn new(vars: VarSet, degree: u32) -> Self {
        let mut monomials = Vec::new();
        let cap = |v: Var| if vars.contains(v) { degree } else { 0 };
        for a in 0..=cap(Var::X) {
            for b in 0..=cap(Var::Y).min(degree - a) {
                let c = degree - a - b;
                if c > cap(Var::Z) {
                    continue;
                }
                monomials.push([a, b, c]);
            }
        }
        // vars = {} only has a monomial in degree 0
        monomials.sort_by(|p, q| grevlex_cmp(q, p));
        MonomialBasis {
            vars,
            degree,
            monomials,
        }
    }

    /// Number of monomials of degree `d` in `k` variables, `C(d + k - 1, k - 1)`.
    pub fn count(vars: VarSet, degree: u32) -> usize {
        let k = vars.len() as u64;
        if k == 0 {
            return usize::from(degree == 0);
        }
        let d = degree as u64;
        let mut acc: u64 = 1;
        for i in 0..k - 1 {
            acc = acc * (d + 1 + i) / (i + 1);
        }
        acc as usize
    }

    pub fn vars(&self) -> VarSet {
        self.vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Exponent] {
        &self.monomials
    }

    pub fn index_of(&self, e: &Exponent) -> Option<usize> {
        self.monomials.binary_search_by(|m| grevlex_cmp(e, m)).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn degree_two_order() {
        let b = MonomialBasis::new(VarSet::XYZ, 2);
        assert_eq!(
            b.monomials(),
            &[[2, 0, 0], [1, 1, 0], [0, 2, 0], [1, 0, 1], [0, 1, 1], [0, 0, 2]]
        );
        assert_eq!(b.index_of(&[0, 1, 1]), Some(4));
        assert_eq!(b.index_of(&[0, 0, 3]), None);
    }

    #[test]
    fn subring_bases() {
        let a = MonomialBasis::new(VarSet::XY, 3);
        assert_eq!(a.monomials(), &[[3, 0, 0], [2, 1, 0], [1, 2, 0], [0, 3, 0]]);
        let b = MonomialBasis::new(VarSet::YZ, 2);
        assert_eq!(b.monomials(), &[[0, 2, 0], [0, 1, 1], [0, 0, 2]]);
    }

    #[test]
    fn sizes_match_binomial_count() {
        for vars in [VarSet::XYZ, VarSet::XY, VarSet::YZ, VarSet::of(&[Var::Z])] {
            for d in 0..12 {
                let b = MonomialBasis::new(vars, d);
                assert_eq!(b.len(), MonomialBasis::count(vars, d));
                for (i, m) in b.monomials().iter().enumerate() {
                    assert_eq!(b.index_of(m), Some(i));
                }
            }
        }
        assert_eq!(MonomialBasis::count(VarSet::XYZ, 9), 55);
    }

    #[test]
    fn varset_ops() {
        assert_eq!(VarSet::XY.swap_xz(), VarSet::YZ);
        assert_eq!(VarSet::XYZ.swap_xz(), VarSet::XYZ);
        assert!(VarSet::XY.is_subset(VarSet::XYZ));
        assert!(!VarSet::XY.is_subset(VarSet::YZ));
        assert_eq!(VarSet::XY.union(VarSet::YZ), VarSet::XYZ);
        assert_eq!(VarSet::YZ.vars(), vec![Var::Y, Var::Z]);
    }
}
