//! Planar triangulations, the Billera–Rose presentation of the spline
//! module in a fixed degree, and the Alfeld–Schumaker count.

mod triangulation;

pub use triangulation::{line_coefficients, signed_area2, Edge, Point, TriError, Triangulation};

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;
use thiserror::Error;

use crate::exactla::{choose2, QMatrix, Rational};
use crate::polyring::{mult_map, HPoly, MonomialBasis, VarSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SplineError {
    #[error(transparent)]
    Triangulation(#[from] TriError),
    #[error("interior vertex {0} carries a single edge line")]
    SingleSlope(usize),
}

/// The homogenized line of an edge, vanishing at `(v_x, v_y, 1)` for both
/// endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeForm {
    pub edge: (usize, usize),
    pub form: HPoly,
}

impl EdgeForm {
    pub fn new(t: &Triangulation, edge: usize) -> Self {
        let e = &t.edges()[edge];
        let [a, b, c] = line_coefficients(&t.vertices()[e.a], &t.vertices()[e.b]);
        EdgeForm {
            edge: (e.a, e.b),
            form: HPoly::linear_form(
                Rational::from_integer(a),
                Rational::from_integer(b),
                Rational::from_integer(c),
            ),
        }
    }
}

/// Edge forms of the interior edges, in the order of [`Triangulation::interior_edges`].
pub fn interior_edge_forms(t: &Triangulation) -> Vec<EdgeForm> {
    t.interior_edges().iter().map(|&e| EdgeForm::new(t, e)).collect()
}

/// Degree-`d` piece of `[∂₂ | diag(ℓ_e^{r+1})]`, with triangle orientation
/// multipliers `flip[t] ∈ {1, -1}` applied to the boundary block.
pub fn billera_rose_matrix_oriented(t: &Triangulation, r: u32, d: u32, flip: &[i64]) -> QMatrix {
    let vars = VarSet::XYZ;
    let nd = MonomialBasis::count(vars, d);
    let interior = t.interior_edges();
    let ml = if d > r { MonomialBasis::count(vars, d - r - 1) } else { 0 };
    let rows = interior.len() * nd;
    let cols = t.f2() * nd + interior.len() * ml;
    let mut entries = vec![Rational::zero(); rows * cols];
    for (k, &e) in interior.iter().enumerate() {
        for &tri in &t.edges()[e].triangles {
            let s = t.incidence_sign(e, tri) * flip.get(tri).copied().unwrap_or(1);
            let s = Rational::from_integer(s.into());
            for i in 0..nd {
                entries[(k * nd + i) * cols + tri * nd + i] = s.clone();
            }
        }
        if ml > 0 {
            let form = EdgeForm::new(t, e).form.pow(r + 1);
            let m = mult_map(&form, d - r - 1);
            let c0 = t.f2() * nd + k * ml;
            for i in 0..nd {
                for j in 0..ml {
                    let v = m.get(i, j);
                    if !v.is_zero() {
                        entries[(k * nd + i) * cols + c0 + j] = v.clone();
                    }
                }
            }
        }
    }
    QMatrix::new(rows, cols, entries).expect("entry count")
}

/// Degree-`d` piece of the Billera–Rose map with the canonical orientation.
pub fn billera_rose_matrix(t: &Triangulation, r: u32, d: u32) -> QMatrix {
    billera_rose_matrix_oriented(t, r, d, &[])
}

/// Spline dimension and the matching Hilbert function value of the
/// cokernel `N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplineDim {
    pub dim: usize,
    pub hf_n: usize,
    pub rank: usize,
}

pub fn spline_dim(t: &Triangulation, r: u32, d: u32) -> SplineDim {
    let m = billera_rose_matrix(t, r, d);
    let rank = m.rank();
    SplineDim {
        dim: m.cols() - rank,
        hf_n: m.rows() - rank,
        rank,
    }
}

/// `σ_i = Σ_{j≥1} max(r + 1 + j(1 - n_i), 0)`.
pub fn sigma_vertex(r: u32, slopes: usize) -> Option<i64> {
    if slopes < 2 {
        return None;
    }
    let step = slopes as i64 - 1;
    let mut s = 0;
    let mut j = 1;
    loop {
        let term = r as i64 + 1 - j * step;
        if term <= 0 {
            return Some(s);
        }
        s += term;
        j += 1;
    }
}

/// `(L(Δ, r, d), σ)`.
pub fn alfeld_schumaker(t: &Triangulation, r: u32, d: u32) -> Result<(i64, i64), SplineError> {
    let mut sigma = 0;
    for &v in t.interior_vertices() {
        sigma += sigma_vertex(r, t.slope_count(v)?).ok_or(SplineError::SingleSlope(v))?;
    }
    let (r, d) = (r as i64, d as i64);
    let f1 = t.f1_interior() as i64;
    let f0 = t.f0_interior() as i64;
    let l = choose2(d + 2) + choose2(d - r + 1) * f1 - (choose2(d + 2) - choose2(r + 2)) * f0 + sigma;
    Ok((l, sigma))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimReport {
    pub r: u32,
    pub d: u32,
    pub dim_spline: usize,
    pub l_value: i64,
    pub sigma: i64,
    pub hf_n: usize,
    pub equal: bool,
}

pub fn dim_report(t: &Triangulation, r: u32, d: u32) -> Result<DimReport, SplineError> {
    let sd = spline_dim(t, r, d);
    let (l, sigma) = alfeld_schumaker(t, r, d)?;
    Ok(DimReport {
        r,
        d,
        dim_spline: sd.dim,
        l_value: l,
        sigma,
        hf_n: sd.hf_n,
        equal: sd.dim as i64 == l,
    })
}

/// The degrees sampled by [`conjecture_report`] for smoothness `r`.
pub fn sampled_degrees(r: u32) -> [u32; 3] {
    [2 * r, 2 * r + 1, 3 * r + 1]
}

pub fn conjecture_report(t: &Triangulation, r_max: u32) -> Result<Vec<DimReport>, SplineError> {
    let mut out = Vec::new();
    for r in 1..=r_max {
        for d in sampled_degrees(r) {
            out.push(dim_report(t, r, d)?);
        }
    }
    Ok(out)
}

/// `f₂·C(d+2,2) + f₁⁰·C(d−r+1,2)`, the number of columns of the degree-`d` map.
pub fn domain_dim(t: &Triangulation, r: u32, d: u32) -> usize {
    let nd = choose2(d as i64 + 2) as usize;
    t.f2() * nd + t.f1_interior() * choose2(d as i64 - r as i64 + 1) as usize
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat;

    fn pt(x: i64, y: i64) -> Point {
        (rat(x), rat(y))
    }

    fn single() -> Triangulation {
        Triangulation::new(vec![pt(0, 0), pt(1, 0), pt(0, 1)], vec![[0, 1, 2]]).unwrap()
    }

    fn square() -> Triangulation {
        Triangulation::new(
            vec![pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)],
            vec![[0, 1, 2], [0, 2, 3]],
        )
        .unwrap()
    }

    #[test]
    fn counts() {
        let t = single();
        assert_eq!((t.f2(), t.f1_interior(), t.f0_interior()), (1, 0, 0));
        let t = square();
        assert_eq!((t.f2(), t.f1_interior(), t.f0_interior()), (2, 1, 0));
    }

    #[test]
    fn rejects_bad_input() {
        let bow = Triangulation::new(
            vec![pt(0, 0), pt(1, 0), pt(0, 1), pt(-1, 0), pt(0, -1)],
            vec![[0, 1, 2], [0, 3, 4]],
        );
        assert!(matches!(bow, Err(TriError::NotADisk(_))));
        let flat = Triangulation::new(vec![pt(0, 0), pt(1, 1), pt(2, 2)], vec![[0, 1, 2]]);
        assert_eq!(flat, Err(TriError::DegenerateTriangle { index: 0 }));
        let fin = Triangulation::new(
            vec![pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1), pt(0, -1)],
            vec![[0, 1, 2], [0, 1, 3], [0, 1, 4]],
        );
        assert_eq!(fin, Err(TriError::DanglingEdge(0, 1)));
        let missing = Triangulation::new(vec![pt(0, 0)], vec![[0, 1, 2]]);
        assert!(matches!(missing, Err(TriError::InvalidIndex { .. })));
    }

    #[test]
    fn pinwheel_slopes() {
        // center with 4 spokes on 4 distinct lines
        let t = Triangulation::new(
            vec![pt(0, 0), pt(2, 0), pt(1, 2), pt(-2, 1), pt(1, -2)],
            vec![[0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 1]],
        )
        .unwrap();
        assert_eq!(t.interior_vertices(), &[0]);
        assert_eq!(t.slope_count(0), Ok(4));
        assert_eq!(t.slope_count(1), Err(TriError::NotInterior(1)));
    }

    #[test]
    fn edge_form_canonical() {
        let t = square();
        let e = t.edge_index(0, 2).unwrap();
        let f = EdgeForm::new(&t, e).form;
        assert_eq!(f, HPoly::linear_form(rat(1), rat(-1), rat(0)));
    }

    #[test]
    fn single_triangle_dimension() {
        let t = single();
        for r in 0..3 {
            for d in 0..5 {
                let m = billera_rose_matrix(&t, r, d);
                assert_eq!(m.rows(), 0);
                assert_eq!(spline_dim(&t, r, d).dim, choose2(d as i64 + 2) as usize);
                assert_eq!(alfeld_schumaker(&t, r, d).unwrap().0, choose2(d as i64 + 2));
            }
        }
    }

    #[test]
    fn square_is_quasi_cross_cut() {
        let t = square();
        for r in 0..3 {
            for d in 0..8 {
                let sd = spline_dim(&t, r, d);
                assert_eq!(sd.dim, domain_dim(&t, r, d) - sd.rank);
                assert_eq!(sd.dim as i64, alfeld_schumaker(&t, r, d).unwrap().0, "r={r} d={d}");
            }
        }
        // continuous piecewise linear: one hat per vertex
        assert_eq!(spline_dim(&t, 0, 1).dim, 4);
    }

    #[test]
    fn sigma_terms() {
        assert_eq!(sigma_vertex(1, 3), Some(0));
        assert_eq!(sigma_vertex(2, 3), Some(1));
        assert_eq!(sigma_vertex(3, 2), Some(6));
        assert_eq!(sigma_vertex(3, 1), None);
    }
}
