//! Static table of every claim a report row can carry.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Claim {
    pub id: &'static str,
    pub locator: &'static str,
    pub expected: &'static str,
}

const fn c(id: &'static str, locator: &'static str, expected: &'static str) -> Claim {
    Claim { id, locator, expected }
}

pub const CLAIMS: &[Claim] = &[
    c("k-dim", "deltastar/k-dimension", "n for r = 2n-1, n+1 for r = 2n"),
    c("epsilon", "deltastar/epsilon-original-coordinates", "dim K(r)"),
    c("epsilon-coordinates", "deltastar/epsilon-change-of-variables", "image of the epsilon space equals K(r)"),
    c("generator-degrees", "deltastar/colon-generator-degrees", "(n, n) for r = 2n-1, (n, n+1) for r = 2n"),
    c("hf-quotient-a", "deltastar/colon-generators-fill-A_r", "HF(A/<C1,F1>, r) = 0"),
    c("hf-quotient-r", "deltastar/colon-generators-quotient-in-R", "HF(R/<C1,F1>, r) = n^2 or n(n+1)"),
    c("hf-all-four", "deltastar/four-generators-fill-R_r", "HF(R/<C1,F1,C2,F2>, r) = 0"),
    c("k-lower-bound", "deltastar/k-lower-bound", "HF(R, r) - 2 HF(R/<C1,F1>, r) <= dim K(r)"),
    c("y-power-in-k", "deltastar/y-power-membership", "y^r in K(r)"),
    c("y-powers-excluded", "deltastar/y-powers-outside-colon", "y^j outside both colons for j < r"),
    c("slicing", "deltastar/coefficient-slicing", "every slice of every basis element lies in the colon ideal"),
    c("symmetry", "deltastar/xz-symmetry", "symmetric part = dim K(r), antisymmetric part = 0"),
    c("derivative-map", "deltastar/derivative-map", "y F_xz in K(r-1) for every basis element"),
    c("min-degree", "deltastar/minimal-generation-degree", "dim I(r)_{r-1} = 0 and dim K(r) generators in degree r"),
    c("support-bound", "deltastar/monomial-support-bound", "exponents of x and z at most r - n"),
    c("complex-counts", "deltastar/reference-complex", "(f2, interior edges, interior vertices) = (8, 9, 2)"),
    c("edge-forms", "deltastar/reference-edge-forms", "geometry reproduces the nine listed edge forms"),
    c("totally-interior", "deltastar/single-totally-interior-edge", "exactly the edge between T2 and T6"),
    c("decomposition", "splinecore/epsilon-decomposition", "C(2r+3,2) + 4 C(r+2,2) + epsilon"),
    c("conjecture", "splinecore/formula-at-2r+1", "dim C^r_{2r+1} = L(r, 2r+1)"),
    c("sharpness", "splinecore/formula-fails-at-2r", "dim C^r_{2r} != L(r, 2r)"),
    c("alfeld-schumaker", "splinecore/formula-at-3r+1", "dim C^r_{3r+1} = L(r, 3r+1)"),
    c("sigma-closed-form", "splinecore/sigma-closed-form", "sigma = 2 r alpha - 2 alpha^2, alpha = floor((r+1)/2)"),
    c("formula-in-range", "splinecore/formula-for-d-at-least-2r+1", "dim C^r_d = L(r, d)"),
    c("formula-below-range", "splinecore/formula-below-2r+1", "unconstrained"),
    c("kernel-total", "structmat/kernel-dimension-total", "n(n+1)/2 for r = 2n-1, (n+1)(n+2)/2 for r = 2n"),
    c("block-rank", "structmat/block-rank", "rank M(k) = n for every k"),
    c("schur-oracle", "structmat/schur-determinant-vs-weyl", "determinant = Weyl product"),
    c("schur-rectangular", "structmat/n-determinant-is-schur-dimension", "det N = dim of the rectangular Schur module"),
    c("positivity", "structmat/toeplitz-positivity", "every tested minor strictly positive"),
    c("u-symmetric", "structmat/u-symmetric", "U = U^T"),
    c("u-lu", "structmat/jUj-has-lu", "leading principal minors of JUJ nonzero"),
    c("roth-upper", "structmat/roth-upper-triangular", "upper triangular X, Y with zero residual"),
    c("roth-lower", "structmat/roth-lower-triangular", "lower triangular X, Y with zero residual"),
    c("roth-operator", "structmat/triangular-roth-operator", "onto and kernel dimension p(p+1) - rank = dim K(r)"),
    c("param-relations", "structmat/parameter-relations", "all parameter relations hold for every basis element"),
    c("param-element", "structmat/parameter-relations-single", "all parameter relations hold"),
];

pub fn claim(id: &str) -> Option<&'static Claim> {
    CLAIMS.iter().find(|c| c.id == id)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_and_locators_unique() {
        for (i, a) in CLAIMS.iter().enumerate() {
            for b in &CLAIMS[i + 1..] {
                assert_ne!(a.id, b.id);
                assert_ne!(a.locator, b.locator);
            }
        }
    }
}
