//! The eight-triangle complex `Δ_S` with one totally interior edge, and
//! the ideals `K(r)`, `ε(r)`, `⟨C_i, F_i⟩` attached to it.
//!
//! Primary computations use the changed coordinates in which `ℓ_26 = y`,
//! `ℓ_12 = x`, `ℓ_67 = x + y`, `ℓ_34 = z`, `ℓ_23 = y + z`; `ε` is computed
//! independently from the original edge forms.

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::exactla::{choose2, ratio, QMatrix};
use crate::polyring::{
    colon_piece, ideal_piece, new_generators, GradedSubspace, HPoly, MonomialBasis, PolyError, Var,
    VarSet,
};
use crate::splinecore::{EdgeForm, Point, Triangulation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeltaError {
    #[error("polynomial is not in K({0})")]
    NotInK(u32),
    #[error("r must be at least {0}")]
    RTooSmall(u32),
    #[error("colon ideal has {0} minimal generators, expected 2")]
    GeneratorCount(usize),
    #[error("edge form of l{0}{1} does not match the reference list")]
    FormMismatch(usize, usize),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// `n` with `r = 2n - 1` or `r = 2n`.
pub fn half(r: u32) -> u32 {
    r.div_ceil(2)
}

/// `n` for odd `r`, `n + 1` for even `r`: the expected `dim K(r)`.
pub fn expected_k_dim(r: u32) -> usize {
    let n = half(r) as usize;
    if r % 2 == 1 {
        n
    } else {
        n + 1
    }
}

pub const VERTICES: [(i64, i64); 8] = [(0, 0), (0, 2), (2, 2), (4, 2), (4, 0), (2, 0), (1, 1), (3, 1)];

/// `T_1, ..., T_8`, clockwise from the upper left.
pub const TRIANGLES: [[usize; 3]; 8] = [
    [1, 2, 6],
    [2, 6, 7],
    [2, 7, 3],
    [3, 7, 4],
    [4, 7, 5],
    [5, 7, 6],
    [5, 6, 0],
    [0, 6, 1],
];

/// Reference forms `ℓ_ij` on the edge between `T_i` and `T_j` as
/// `(i, j, [a, b, c])` for `a x + b y + c z`.
pub const REFERENCE_FORMS: [(usize, usize, [i64; 3]); 9] = [
    (1, 2, [1, -1, 0]),
    (7, 8, [1, -1, 0]),
    (2, 3, [1, 1, -4]),
    (4, 5, [1, 1, -4]),
    (3, 4, [1, -1, -2]),
    (5, 6, [1, -1, -2]),
    (6, 7, [1, 1, -2]),
    (1, 8, [1, 1, -2]),
    (2, 6, [0, 1, -1]),
];

/// `Δ_S` with its interior edge forms, checked against [`REFERENCE_FORMS`].
#[derive(Debug, Clone)]
pub struct DeltaS {
    pub triangulation: Triangulation,
    /// `(i, j, ℓ_ij)` with 1-based triangle labels.
    pub edge_forms: Vec<(usize, usize, HPoly)>,
}

impl DeltaS {
    pub fn new() -> Result<Self, DeltaError> {
        let pts: Vec<Point> = VERTICES
            .iter()
            .map(|&(a, b)| (ratio(a, 1), ratio(b, 1)))
            .collect();
        let t = Triangulation::new(pts, TRIANGLES.to_vec()).expect("reference complex is a disk");
        let mut edge_forms = Vec::new();
        for &(i, j, abc) in &REFERENCE_FORMS {
            let e = shared_edge(&t, i - 1, j - 1).ok_or(DeltaError::FormMismatch(i, j))?;
            let form = EdgeForm::new(&t, e).form;
            if form != linear(abc) {
                return Err(DeltaError::FormMismatch(i, j));
            }
            edge_forms.push((i, j, form));
        }
        Ok(DeltaS {
            triangulation: t,
            edge_forms,
        })
    }

    pub fn form(&self, i: usize, j: usize) -> &HPoly {
        &self
            .edge_forms
            .iter()
            .find(|(a, b, _)| (*a, *b) == (i, j) || (*a, *b) == (j, i))
            .expect("labelled interior edge")
            .2
    }

    /// Interior edges with both endpoints interior, as triangle label pairs.
    pub fn totally_interior_edges(&self) -> Vec<(usize, usize)> {
        let t = &self.triangulation;
        let inner = t.interior_vertices();
        t.interior_edges()
            .iter()
            .map(|&e| &t.edges()[e])
            .filter(|e| inner.contains(&e.a) && inner.contains(&e.b))
            .map(|e| (e.triangles[0] + 1, e.triangles[1] + 1))
            .collect()
    }
}

fn shared_edge(t: &Triangulation, a: usize, b: usize) -> Option<usize> {
    t.interior_edges()
        .iter()
        .copied()
        .find(|&e| t.edges()[e].triangles.contains(&a) && t.edges()[e].triangles.contains(&b))
}

fn linear(abc: [i64; 3]) -> HPoly {
    HPoly::linear_form(ratio(abc[0], 1), ratio(abc[1], 1), ratio(abc[2], 1))
}

/// Substitution expressing original `x, y, z` in the changed coordinates
/// `x' = x - y`, `y' = 2(y - z)`, `z' = x - y - 2z`; row `i` is the image of
/// variable `i`.
pub fn change_of_variables() -> QMatrix {
    QMatrix::from_rows(vec![
        vec![ratio(3, 2), ratio(1, 2), ratio(-1, 2)],
        vec![ratio(1, 2), ratio(1, 2), ratio(-1, 2)],
        vec![ratio(1, 2), ratio(0, 1), ratio(-1, 2)],
    ])
    .expect("3x3")
}

fn var(ring: VarSet, v: Var) -> HPoly {
    HPoly::var(ring, v).expect("variable of ring")
}

fn sum(a: &HPoly, b: &HPoly) -> HPoly {
    a.checked_add(b).expect("same degree")
}

/// `[x^{r+1}, (x+y)^{r+1}]` in `ring`.
pub fn gens_x(ring: VarSet, r: u32) -> [HPoly; 2] {
    let x = var(ring, Var::X);
    let y = var(ring, Var::Y);
    [x.pow(r + 1), sum(&x, &y).pow(r + 1)]
}

/// `[z^{r+1}, (z+y)^{r+1}]` in `ring`.
pub fn gens_z(ring: VarSet, r: u32) -> [HPoly; 2] {
    let z = var(ring, Var::Z);
    let y = var(ring, Var::Y);
    [z.pow(r + 1), sum(&z, &y).pow(r + 1)]
}

fn y_power(ring: VarSet, k: u32) -> HPoly {
    var(ring, Var::Y).pow(k)
}

/// `(⟨x^{r+1}, (x+y)^{r+1}⟩ : y^{r+1})_d` in `ring` (which must contain x, y).
pub fn colon_x(ring: VarSet, r: u32, d: u32) -> GradedSubspace {
    colon_piece(ring, &gens_x(ring, r), &y_power(ring, r + 1), d).expect("valid colon")
}

/// `(⟨z^{r+1}, (z+y)^{r+1}⟩ : y^{r+1})_d` in `ring` (which must contain y, z).
pub fn colon_z(ring: VarSet, r: u32, d: u32) -> GradedSubspace {
    colon_piece(ring, &gens_z(ring, r), &y_power(ring, r + 1), d).expect("valid colon")
}

/// `𝓘(r)_d`, the degree-`d` piece of the intersection of both colons in `R`.
pub fn intersection_piece(r: u32, d: u32) -> GradedSubspace {
    colon_x(VarSet::XYZ, r, d)
        .intersect(&colon_z(VarSet::XYZ, r, d))
        .expect("same ring and degree")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KSpace {
    pub r: u32,
    pub basis: GradedSubspace,
}

impl KSpace {
    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn contains(&self, f: &HPoly) -> bool {
        f.degree() == self.r && self.basis.contains(f).unwrap_or(false)
    }
}

pub fn k_space(r: u32) -> KSpace {
    KSpace {
        r,
        basis: intersection_piece(r, r),
    }
}

/// `dim I_r` for `I = ⟨ℓ12^{r+1}, ℓ67^{r+1}⟩ : ℓ26^{r+1} ∩ ⟨ℓ23^{r+1}, ℓ34^{r+1}⟩ : ℓ26^{r+1}`
/// in the original coordinates.
pub fn epsilon_space(ds: &DeltaS, r: u32) -> GradedSubspace {
    let p = |i, j| ds.form(i, j).pow(r + 1);
    let f = p(2, 6);
    let left = colon_piece(VarSet::XYZ, &[p(1, 2), p(6, 7)], &f, r).expect("valid colon");
    let right = colon_piece(VarSet::XYZ, &[p(2, 3), p(3, 4)], &f, r).expect("valid colon");
    left.intersect(&right).expect("same ring and degree")
}

pub fn epsilon(ds: &DeltaS, r: u32) -> usize {
    epsilon_space(ds, r).dim()
}

/// Image of the ε space under [`change_of_variables`].
pub fn epsilon_in_changed_coordinates(ds: &DeltaS, r: u32) -> GradedSubspace {
    let a = change_of_variables();
    let polys: Vec<HPoly> = epsilon_space(ds, r)
        .basis_polys()
        .iter()
        .map(|p| p.linear_substitute(&a).expect("invertible substitution"))
        .collect();
    GradedSubspace::span(VarSet::XYZ, r, &polys).expect("degree r")
}

/// `C(2r+3, 2) + 4 C(r+2, 2) + ε`.
pub fn decomposition_dim(r: u32, eps: usize) -> usize {
    (choose2(2 * r as i64 + 3) + 4 * choose2(r as i64 + 2)) as usize + eps
}

/// Minimal generators of `⟨x^{r+1}, (x+y)^{r+1}⟩ : y^{r+1}` in `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CfGenerators {
    pub c: HPoly,
    pub f: HPoly,
    pub degrees: (u32, u32),
}

impl CfGenerators {
    /// `C_2, F_2`, the image under `x <-> z` in `B`.
    pub fn swapped(&self) -> CfGenerators {
        CfGenerators {
            c: self.c.swap_xz(),
            f: self.f.swap_xz(),
            degrees: self.degrees,
        }
    }

    pub fn as_slice(&self) -> [HPoly; 2] {
        [self.c.clone(), self.f.clone()]
    }
}

pub fn cf_generators(r: u32) -> Result<CfGenerators, DeltaError> {
    if r == 0 {
        return Err(DeltaError::RTooSmall(1));
    }
    let mut found = Vec::new();
    let mut prev: Option<GradedSubspace> = None;
    for d in 0..=r {
        let piece = colon_x(VarSet::XY, r, d);
        for g in new_generators(prev.as_ref(), &piece)? {
            found.push((d, g));
        }
        prev = Some(piece);
    }
    if found.len() != 2 {
        return Err(DeltaError::GeneratorCount(found.len()));
    }
    let (d1, f) = found.pop().expect("two");
    let (d0, c) = found.pop().expect("two");
    Ok(CfGenerators {
        c,
        f,
        degrees: (d0, d1),
    })
}

/// Generator degrees expected from the complete-intersection structure.
pub fn expected_generator_degrees(r: u32) -> (u32, u32) {
    let n = half(r);
    if r % 2 == 1 {
        (n, n)
    } else {
        (n, n + 1)
    }
}

/// `HF(A/⟨C_1, F_1⟩, r)`.
pub fn hf_a_quotient(cf: &CfGenerators, r: u32) -> usize {
    ideal_piece(VarSet::XY, &cf.as_slice(), r).expect("A gens").codim()
}

/// `HF(R/⟨C_1, F_1⟩, r)`.
pub fn hf_r_quotient(cf: &CfGenerators, r: u32) -> usize {
    ideal_piece(VarSet::XYZ, &cf.as_slice(), r).expect("A gens").codim()
}

/// `n²` for odd `r`, `n(n+1)` for even `r`.
pub fn expected_hf_r_quotient(r: u32) -> usize {
    let n = half(r) as usize;
    if r % 2 == 1 {
        n * n
    } else {
        n * (n + 1)
    }
}

/// `HF(R/⟨C_1, F_1, C_2, F_2⟩, r)`.
pub fn hf_all_four(cf: &CfGenerators, r: u32) -> usize {
    let mut gens = cf.as_slice().to_vec();
    gens.extend(cf.swapped().as_slice());
    ideal_piece(VarSet::XYZ, &gens, r).expect("R gens").codim()
}

/// Lower bound `HF(R, r) - 2 HF(R/⟨C_1,F_1⟩, r)` on `dim K(r)`.
pub fn k_lower_bound(cf: &CfGenerators, r: u32) -> i64 {
    MonomialBasis::count(VarSet::XYZ, r) as i64 - 2 * hf_r_quotient(cf, r) as i64
}

/// Slice membership for `F ∈ K(r)`: every `f_k` (coefficient of `z^{r-k}`)
/// lies in `⟨C_1, F_1⟩A`, every `g_k` (coefficient of `x^{r-k}`) lies in
/// `⟨C_2, F_2⟩B`, and the slices below degree `n` vanish.
pub fn verify_slicing(k: &KSpace, cf: &CfGenerators, f: &HPoly) -> Result<bool, DeltaError> {
    let r = k.r;
    if !k.contains(f) {
        return Err(DeltaError::NotInK(r));
    }
    let cf2 = cf.swapped();
    let n = half(r);
    for i in 0..=r {
        let fi = f.slice(Var::Z, i);
        let gi = f.slice(Var::X, i);
        if i < n && !(fi.is_zero() && gi.is_zero()) {
            return Ok(false);
        }
        let in_a = ideal_piece(VarSet::XY, &cf.as_slice(), i)?.contains(&fi)?;
        let in_b = ideal_piece(VarSet::YZ, &cf2.as_slice(), i)?.contains(&gi)?;
        if !(in_a && in_b) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Matrix of `F -> F(z, y, x)` on the degree-`d` polynomials of `R`.
fn swap_matrix(d: u32) -> QMatrix {
    let basis = MonomialBasis::new(VarSet::XYZ, d);
    let n = basis.len();
    let mut cols = Vec::with_capacity(n);
    for m in basis.monomials() {
        let mut col = vec![ratio(0, 1); n];
        col[basis.index_of(&[m[2], m[1], m[0]]).expect("swapped monomial")] = ratio(1, 1);
        cols.push(col);
    }
    QMatrix::from_columns(n, &cols)
}

/// `(dim {F ∈ K : F = F̄}, dim {F ∈ K : F = -F̄})` with `F̄(x,y,z) = F(z,y,x)`.
pub fn symmetric_parts(k: &KSpace) -> (usize, usize) {
    let b = k.basis.basis_matrix();
    if b.cols() == 0 {
        return (0, 0);
    }
    let s = swap_matrix(k.r);
    let id = QMatrix::identity(s.rows());
    let sym = (&(&s - &id) * b).nullity();
    let anti = (&(&s + &id) * b).nullity();
    (sym, anti)
}

pub fn verify_symmetry(k: &KSpace) -> bool {
    let (sym, anti) = symmetric_parts(k);
    sym == k.dim() && anti == 0
}

/// `y ∂x∂z F` for each basis element of `K(r)`; returns whether all land in
/// `K(r-1)` and the dimension of their span.
pub fn verify_derivative_map(k: &KSpace, lower: &KSpace) -> Result<(bool, usize), DeltaError> {
    if k.r < 2 || lower.r + 1 != k.r {
        return Err(DeltaError::RTooSmall(2));
    }
    let y = var(VarSet::XYZ, Var::Y);
    let mut images = Vec::new();
    for f in k.basis.basis_polys() {
        let img = y.mul(&f.partial_derivative(Var::X).partial_derivative(Var::Z));
        if !lower.basis.contains(&img)? {
            return Ok((false, 0));
        }
        images.push(img);
    }
    let span = GradedSubspace::span(VarSet::XYZ, lower.r, &images)?;
    Ok((true, span.dim()))
}

/// `(dim 𝓘(r)_{r-1}, minimal generator count of 𝓘(r) in degree r)`.
pub fn min_degree_data(r: u32) -> Result<(usize, usize), DeltaError> {
    if r < 1 {
        return Err(DeltaError::RTooSmall(1));
    }
    let below = intersection_piece(r, r - 1);
    let at = intersection_piece(r, r);
    let fresh = crate::polyring::generators_in_degree(Some(&below), &at);
    Ok((below.dim(), fresh))
}

pub fn verify_min_degree(k: &KSpace) -> Result<bool, DeltaError> {
    let (below, fresh) = min_degree_data(k.r)?;
    Ok(below == 0 && fresh == k.dim())
}

/// Whether `y^j` lies outside both colons for every `j ≤ r - 1`.
pub fn verify_y_powers_excluded(r: u32) -> bool {
    (0..r).all(|j| {
        let ya = y_power(VarSet::XY, j);
        let yb = y_power(VarSet::YZ, j);
        !colon_x(VarSet::XY, r, j).contains(&ya).unwrap_or(true)
            && !colon_z(VarSet::YZ, r, j).contains(&yb).unwrap_or(true)
    })
}

/// Every monomial `x^a y^b z^c` in the basis of `K(r)` has `a, c ≤ r - n`.
pub fn verify_support_bound(k: &KSpace) -> bool {
    let cap = k.r - half(k.r);
    k.basis
        .basis_polys()
        .iter()
        .all(|p| p.terms().iter().all(|(e, _)| e[0] <= cap && e[2] <= cap))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat;

    #[test]
    fn reference_complex() {
        let ds = DeltaS::new().unwrap();
        let t = &ds.triangulation;
        assert_eq!((t.f2(), t.f1_interior(), t.f0_interior()), (8, 9, 2));
        assert_eq!(t.edges().len(), 15);
        assert_eq!(ds.totally_interior_edges(), vec![(2, 6)]);
        assert_eq!(t.interior_vertices(), &[6, 7]);
        assert_eq!(t.slope_count(6), Ok(3));
        assert_eq!(t.slope_count(7), Ok(3));
    }

    #[test]
    fn substitution_images() {
        let ds = DeltaS::new().unwrap();
        let a = change_of_variables();
        let img = |i, j| ds.form(i, j).linear_substitute(&a).unwrap();
        assert_eq!(img(2, 6), HPoly::linear_form(rat(0), ratio(1, 2), rat(0)));
        assert_eq!(img(1, 2), HPoly::linear_form(rat(1), rat(0), rat(0)));
        assert_eq!(img(6, 7), HPoly::linear_form(rat(1), rat(1), rat(0)));
        assert_eq!(img(3, 4), HPoly::linear_form(rat(0), rat(0), rat(1)));
        assert_eq!(img(2, 3), HPoly::linear_form(rat(0), rat(1), rat(1)));
    }

    #[test]
    fn small_k_spaces() {
        let k1 = k_space(1);
        assert_eq!(k1.dim(), 1);
        assert!(k1.contains(&var(VarSet::XYZ, Var::Y)));
        for r in 1..=4 {
            assert_eq!(k_space(r).dim(), expected_k_dim(r), "r={r}");
        }
        let ds = DeltaS::new().unwrap();
        for r in 1..=3 {
            assert_eq!(epsilon_in_changed_coordinates(&ds, r), k_space(r).basis);
        }
    }

    #[test]
    fn generator_degrees() {
        for r in 1..=5 {
            let cf = cf_generators(r).unwrap();
            assert_eq!(cf.degrees, expected_generator_degrees(r), "r={r}");
            assert_eq!(hf_a_quotient(&cf, r), 0);
            assert_eq!(hf_r_quotient(&cf, r), expected_hf_r_quotient(r));
            assert_eq!(hf_all_four(&cf, r), 0);
        }
    }

    #[test]
    fn verifiers_on_small_r() {
        for r in 2..=4 {
            let k = k_space(r);
            let cf = cf_generators(r).unwrap();
            let y_r = var(VarSet::XYZ, Var::Y).pow(r);
            assert!(verify_slicing(&k, &cf, &y_r).unwrap());
            for f in k.basis.basis_polys() {
                assert!(verify_slicing(&k, &cf, &f).unwrap());
            }
            let x_r = var(VarSet::XYZ, Var::X).pow(r);
            assert_eq!(verify_slicing(&k, &cf, &x_r), Err(DeltaError::NotInK(r)));
            assert!(verify_symmetry(&k));
            assert!(verify_derivative_map(&k, &k_space(r - 1)).unwrap().0);
            assert!(verify_min_degree(&k).unwrap());
            assert!(verify_y_powers_excluded(r));
            assert!(verify_support_bound(&k));
        }
    }
}
