use splinekit_core::deltastar::{
    cf_generators, change_of_variables, colon_x, epsilon, epsilon_in_changed_coordinates, expected_generator_degrees,
    expected_hf_r_quotient, expected_k_dim, half, hf_a_quotient, hf_all_four, hf_r_quotient, intersection_piece,
    k_lower_bound, k_space, min_degree_data, symmetric_parts, verify_derivative_map, verify_min_degree,
    verify_slicing, verify_support_bound, verify_y_powers_excluded, DeltaS,
};
use splinekit_core::exactla::rat;
use splinekit_core::polyring::{ideal_piece, HPoly, Var, VarSet};

fn y(ring: VarSet) -> HPoly {
    HPoly::var(ring, Var::Y).unwrap()
}

/// Direct membership oracle: `y^{r+1} F` in both two-generator ideals of `R`.
fn in_k_directly(r: u32, f: &HPoly) -> bool {
    let ring = VarSet::XYZ;
    let x = HPoly::var(ring, Var::X).unwrap();
    let z = HPoly::var(ring, Var::Z).unwrap();
    let yy = y(ring);
    let lhs = yy.pow(r + 1).mul(f);
    let i1 = [x.pow(r + 1), x.checked_add(&yy).unwrap().pow(r + 1)];
    let i2 = [z.pow(r + 1), z.checked_add(&yy).unwrap().pow(r + 1)];
    ideal_piece(ring, &i1, 2 * r + 1).unwrap().contains(&lhs).unwrap()
        && ideal_piece(ring, &i2, 2 * r + 1).unwrap().contains(&lhs).unwrap()
}

#[test]
fn k_dimensions() {
    for r in 1..=8 {
        let k = k_space(r);
        assert_eq!(k.dim(), expected_k_dim(r), "r={r}");
        assert!(k.contains(&y(VarSet::XYZ).pow(r)));
        for f in k.basis.basis_polys() {
            assert!(in_k_directly(r, &f), "r={r}");
        }
        assert!(!k.contains(&HPoly::var(VarSet::XYZ, Var::X).unwrap().pow(r)));
    }
    assert_eq!(expected_k_dim(5), 3);
    assert_eq!(expected_k_dim(6), 4);
    assert_eq!(half(7), 4);
}

#[test]
fn epsilon_matches_k() {
    let ds = DeltaS::new().unwrap();
    for r in 1..=8 {
        assert_eq!(epsilon(&ds, r), expected_k_dim(r), "r={r}");
        assert_eq!(epsilon_in_changed_coordinates(&ds, r), k_space(r).basis, "r={r}");
    }
}

#[test]
fn change_of_variables_is_invertible() {
    let a = change_of_variables();
    let inv = a.inverse().unwrap();
    // x̄ = x - y, ȳ = 2y - 2z, z̄ = x - y - 2z
    let want = splinekit_core::exactla::QMatrix::from_i64(&[[1, -1, 0], [0, 2, -2], [1, -1, -2]]);
    assert_eq!(inv, want);
}

#[test]
fn generator_structure() {
    for r in 1..=8 {
        let cf = cf_generators(r).unwrap();
        assert_eq!(cf.degrees, expected_generator_degrees(r), "r={r}");
        assert_eq!(hf_a_quotient(&cf, r), 0);
        assert_eq!(hf_r_quotient(&cf, r), expected_hf_r_quotient(r));
        assert_eq!(hf_all_four(&cf, r), 0);
        let bound = k_lower_bound(&cf, r);
        assert!(bound <= expected_k_dim(r) as i64, "r={r}");
        // each generator really is in the colon
        for g in cf.as_slice() {
            assert!(colon_x(VarSet::XY, r, g.degree()).contains(&g).unwrap());
        }
    }
    assert_eq!(cf_generators(1).unwrap().degrees, (1, 1));
    assert_eq!(cf_generators(2).unwrap().degrees, (1, 2));
    assert!(cf_generators(0).is_err());
}

#[test]
fn colon_certificate_r1() {
    // y³ = (x+y)²(y−2x) + x²(2x+3y)
    let a = VarSet::XY;
    let x = HPoly::var(a, Var::X).unwrap();
    let yy = y(a);
    let lhs = yy.pow(3);
    let xy = x.checked_add(&yy).unwrap();
    let rhs = xy
        .pow(2)
        .mul(&yy.checked_sub(&x.scale(&rat(2))).unwrap())
        .checked_add(&x.pow(2).mul(&x.scale(&rat(2)).checked_add(&yy.scale(&rat(3))).unwrap()))
        .unwrap();
    assert_eq!(lhs, rhs);
    assert!(colon_x(a, 1, 1).contains(&yy).unwrap());
}

#[test]
fn verifier_suite() {
    let mut lower = k_space(1);
    assert!(verify_min_degree(&lower).unwrap());
    assert!(verify_support_bound(&lower));
    for r in 2..=8 {
        let k = k_space(r);
        let cf = cf_generators(r).unwrap();
        for f in k.basis.basis_polys() {
            assert!(verify_slicing(&k, &cf, &f).unwrap(), "r={r}");
        }
        assert!(verify_slicing(&k, &cf, &y(VarSet::XYZ).pow(r)).unwrap());
        assert_eq!(symmetric_parts(&k), (k.dim(), 0), "r={r}");
        let (ok, span) = verify_derivative_map(&k, &lower).unwrap();
        assert!(ok && span <= lower.dim(), "r={r}");
        assert!(verify_min_degree(&k).unwrap(), "r={r}");
        assert!(verify_y_powers_excluded(r), "r={r}");
        assert!(verify_support_bound(&k), "r={r}");
        lower = k;
    }
    assert_eq!(min_degree_data(2).unwrap(), (0, 2));
    assert_eq!(min_degree_data(4).unwrap(), (0, 3));
    assert_eq!(intersection_piece(5, 4).dim(), 0);
}
