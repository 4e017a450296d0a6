use proptest::prelude::*;
use splinekit::formats::{format_matrix, parse_matrix, parse_poly, parse_triangulation, delta_s_document};
use splinekit_core::exactla::{ratio, QMatrix, Rational};
use splinekit_core::polyring::{HPoly, MonomialBasis, VarSet};

fn coeff() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(a, b)| ratio(a, b))
}

proptest! {
    #[test]
    fn matrix_roundtrip(rows in 1usize..5, cols in 1usize..5, e in proptest::collection::vec(coeff(), 16)) {
        let m = QMatrix::from_fn(rows, cols, |i, j| e[i * 4 + j].clone());
        prop_assert_eq!(parse_matrix(&format_matrix(&m)).unwrap(), m);
    }

    #[test]
    fn poly_roundtrip(d in 0u32..5, e in proptest::collection::vec(coeff(), 15)) {
        let n = MonomialBasis::count(VarSet::XYZ, d);
        let f = HPoly::from_coeffs(VarSet::XYZ, d, e[..n].to_vec()).unwrap();
        prop_assume!(!f.is_zero());
        prop_assert_eq!(parse_poly(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn parsers_never_panic(s in "[-+*/^0-9xyz ,;\\n]{0,24}") {
        let _ = parse_poly(&s);
        let _ = parse_matrix(&s);
        let _ = parse_triangulation(&s);
    }
}

#[test]
fn document_roundtrip() {
    let doc = delta_s_document();
    let t = parse_triangulation(&doc.to_json()).unwrap();
    assert_eq!(t.triangles().len(), 8);
}
