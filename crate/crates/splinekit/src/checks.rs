//! Verification sweeps producing report rows. Sweeps over `r` run in
//! parallel; rows come back in `(claim family, r, d)` order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use splinekit_core::deltastar::{
    self, cf_generators, epsilon, epsilon_in_changed_coordinates, expected_generator_degrees, expected_hf_r_quotient,
    expected_k_dim, hf_a_quotient, hf_all_four, hf_r_quotient, k_lower_bound, k_space, min_degree_data,
    symmetric_parts, verify_derivative_map, verify_slicing, verify_support_bound, verify_y_powers_excluded, DeltaS,
    KSpace,
};
use splinekit_core::exactla::{exchange_matrix, MinorMode, QMatrix, Rational};
use splinekit_core::polyring::{HPoly, Var, VarSet};
use splinekit_core::splinecore::{alfeld_schumaker, spline_dim, SplineError, Triangulation};
use splinekit_core::structmat::{
    expected_kernel_dim_total, kernel_dim_total, n_block, param_extract, rectangular_partition, roth_lower_solve,
    roth_triangular_solve, schur_dim_det, toeplitz_positivity, triangular_roth_operator_rank, u_matrix,
    lower_residual, upper_residual, BlockSpec, ParamMatrices, StructError,
};

use crate::report::Row;

/// Random `C` per case in the Roth sweeps.
pub const ROTH_SAMPLES: usize = 10;

fn par_rows<F>(rs: impl IntoIterator<Item = u32>, f: F) -> Vec<Row>
where
    F: Fn(u32) -> Vec<Row> + Sync + Send,
{
    let rs: Vec<u32> = rs.into_iter().collect();
    rs.into_par_iter().map(f).collect::<Vec<_>>().concat()
}

pub fn k_dim_row(r: u32) -> Row {
    Row::eq("k-dim", Some(r), None, k_space(r).dim(), expected_k_dim(r))
}

pub fn epsilon_rows(ds: &DeltaS, r: u32) -> Vec<Row> {
    let k = k_space(r);
    vec![
        Row::eq("epsilon", Some(r), None, epsilon(ds, r), k.dim()),
        Row::eq(
            "epsilon-coordinates",
            Some(r),
            None,
            epsilon_in_changed_coordinates(ds, r) == k.basis,
            true,
        ),
    ]
}

fn y_power(r: u32) -> HPoly {
    HPoly::var(VarSet::XYZ, Var::Y).expect("ring variable").pow(r)
}

fn pair(p: (impl std::fmt::Display, impl std::fmt::Display)) -> String {
    format!("({}, {})", p.0, p.1)
}

/// Generator data and every structural verifier at one `r`.
pub fn deltastar_rows(r: u32) -> Vec<Row> {
    let k = k_space(r);
    let dim = k.dim();
    let mut rows = vec![Row::eq("k-dim", Some(r), None, dim, expected_k_dim(r))];
    let some = Some(r);
    let cf = match cf_generators(r) {
        Ok(cf) => cf,
        Err(e) => {
            rows.push(Row::with("generator-degrees", some, None, e, pair(expected_generator_degrees(r)), false));
            return rows;
        }
    };
    rows.push(Row::eq("generator-degrees", some, None, pair(cf.degrees), pair(expected_generator_degrees(r))));
    rows.push(Row::eq("hf-quotient-a", some, None, hf_a_quotient(&cf, r), 0));
    rows.push(Row::eq("hf-quotient-r", some, None, hf_r_quotient(&cf, r), expected_hf_r_quotient(r)));
    rows.push(Row::eq("hf-all-four", some, None, hf_all_four(&cf, r), 0));
    let bound = k_lower_bound(&cf, r);
    rows.push(Row::with("k-lower-bound", some, None, bound, format!("<= {dim}"), bound <= dim as i64));
    rows.push(Row::eq("y-power-in-k", some, None, k.contains(&y_power(r)), true));
    rows.push(Row::eq("y-powers-excluded", some, None, verify_y_powers_excluded(r), true));
    let mut elements = k.basis.basis_polys();
    elements.push(y_power(r));
    let sliced = elements
        .iter()
        .filter(|f| verify_slicing(&k, &cf, f).unwrap_or(false))
        .count();
    rows.push(Row::eq(
        "slicing",
        some,
        None,
        format!("{sliced}/{}", elements.len()),
        format!("{0}/{0}", elements.len()),
    ));
    rows.push(Row::eq("symmetry", some, None, pair(symmetric_parts(&k)), pair((dim, 0))));
    if r >= 2 {
        let lower = k_space(r - 1);
        let computed = match verify_derivative_map(&k, &lower) {
            Ok((ok, span)) => format!("{ok} (image dim {span})"),
            Err(e) => e.to_string(),
        };
        let pass = computed.starts_with("true");
        rows.push(Row::with("derivative-map", some, None, computed, "true", pass));
    }
    match min_degree_data(r) {
        Ok(data) => rows.push(Row::eq("min-degree", some, None, pair(data), pair((0, dim)))),
        Err(e) => rows.push(Row::with("min-degree", some, None, e, pair((0, dim)), false)),
    }
    rows.push(Row::eq("support-bound", some, None, verify_support_bound(&k), true));
    rows
}

pub fn deltastar_sweep(r_max: u32) -> Vec<Row> {
    par_rows(1..=r_max, deltastar_rows)
}

pub fn epsilon_sweep(ds: &DeltaS, r_max: u32) -> Vec<Row> {
    par_rows(1..=r_max, |r| epsilon_rows(ds, r))
}

/// Rows describing the built-in complex itself.
pub fn complex_rows() -> Vec<Row> {
    match DeltaS::new() {
        Ok(ds) => {
            let t = &ds.triangulation;
            let inner: Vec<String> = ds
                .totally_interior_edges()
                .iter()
                .map(|&(i, j)| format!("T{i}-T{j}"))
                .collect();
            vec![
                Row::eq("complex-counts", None, None, format!("({}, {}, {})", t.f2(), t.f1_interior(), t.f0_interior()), "(8, 9, 2)"),
                Row::eq("edge-forms", None, None, format!("{} matched", ds.edge_forms.len()), "9 matched"),
                Row::eq("totally-interior", None, None, inner.join(","), "T2-T6"),
            ]
        }
        Err(e) => vec![Row::with("edge-forms", None, None, e, "9 matched", false)],
    }
}

#[derive(Clone, Copy)]
enum SplineClaim {
    Decomposition,
    Conjecture,
    Sharpness,
    Regime,
}

/// Spline-dimension claims on the built-in complex for `r = 1..=r_max`.
/// Sharpness is only claimed for `r <= 3`.
pub fn delta_s_spline_sweep(ds: &DeltaS, r_max: u32) -> Vec<Row> {
    let mut tasks = Vec::new();
    for r in 1..=r_max {
        tasks.push((SplineClaim::Decomposition, r, 2 * r + 1));
        tasks.push((SplineClaim::Conjecture, r, 2 * r + 1));
        if r <= 3 {
            tasks.push((SplineClaim::Sharpness, r, 2 * r));
        }
        tasks.push((SplineClaim::Regime, r, 3 * r + 1));
    }
    let t = &ds.triangulation;
    let mut dims: Vec<((u32, u32), usize)> = tasks
        .iter()
        .map(|&(_, r, d)| (r, d))
        .collect::<std::collections::BTreeSet<_>>()
        .into_par_iter()
        .map(|(r, d)| ((r, d), spline_dim(t, r, d).dim))
        .collect();
    dims.sort();
    let dim_of = |r, d| dims[dims.binary_search_by_key(&(r, d), |x| x.0).expect("computed")].1;
    tasks
        .iter()
        .map(|&(kind, r, d)| {
            let dim = dim_of(r, d);
            let (l, _) = alfeld_schumaker(t, r, d).expect("three slopes at each interior vertex");
            match kind {
                SplineClaim::Decomposition => {
                    Row::eq("decomposition", Some(r), Some(d), dim, deltastar::decomposition_dim(r, epsilon(ds, r)))
                }
                SplineClaim::Conjecture => Row::eq("conjecture", Some(r), Some(d), dim, l),
                SplineClaim::Sharpness => {
                    Row::with("sharpness", Some(r), Some(d), dim, format!("!= {l}"), dim as i64 != l)
                }
                SplineClaim::Regime => Row::eq("alfeld-schumaker", Some(r), Some(d), dim, l),
            }
        })
        .collect()
}

pub fn sigma_rows(ds: &DeltaS, r_max: u32) -> Vec<Row> {
    (1..=r_max)
        .map(|r| {
            let (_, sigma) = alfeld_schumaker(&ds.triangulation, r, 0).expect("three slopes");
            let alpha = r.div_ceil(2) as i64;
            Row::eq("sigma-closed-form", Some(r), None, sigma, 2 * r as i64 * alpha - 2 * alpha * alpha)
        })
        .collect()
}

/// Dimension against the formula for each sampled degree of a general
/// triangulation.
pub fn conjecture_rows(t: &Triangulation, r_max: u32) -> Result<Vec<Row>, SplineError> {
    let mut tasks = Vec::new();
    for r in 1..=r_max {
        for d in splinekit_core::splinecore::sampled_degrees(r) {
            tasks.push((r, d));
        }
    }
    tasks
        .into_par_iter()
        .map(|(r, d)| {
            let (l, _) = alfeld_schumaker(t, r, d)?;
            let dim = spline_dim(t, r, d).dim;
            Ok(if d > 2 * r {
                Row::eq("formula-in-range", Some(r), Some(d), dim, l)
            } else {
                Row::with("formula-below-range", Some(r), Some(d), format!("{dim} (L = {l})"), "unconstrained", true)
            })
        })
        .collect()
}

fn conj(m: &QMatrix) -> QMatrix {
    let j = exchange_matrix(m.rows());
    &(&j * m) * &j
}

/// Random integer matrix with entries in `[-9, 9]`.
pub fn random_c(rng: &mut ChaCha8Rng, p: usize) -> QMatrix {
    QMatrix::from_fn(p, p, |_, _| Rational::from_integer(rng.gen_range(-9i64..=9).into()))
}

/// Per-case generator: master seed, stream `r`.
pub fn case_rng(seed: u64, r: u32) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(r as u64);
    rng
}

/// `(upper exact, lower exact)` counts over `samples` random `C`.
pub fn roth_counts(r: u32, seed: u64, samples: usize) -> Result<(usize, usize), StructError> {
    let u = u_matrix(r)?;
    let w = conj(&u);
    let mut rng = case_rng(seed, r);
    let (mut up, mut low) = (0, 0);
    for _ in 0..samples {
        let c = random_c(&mut rng, u.rows());
        let (x, y) = roth_triangular_solve(&w, &c)?;
        if x.is_upper_triangular() && y.is_upper_triangular() && upper_residual(&w, &x, &y, &c).is_zero() {
            up += 1;
        }
        let (x, y) = roth_lower_solve(&u, &c)?;
        if x.is_lower_triangular() && y.is_lower_triangular() && lower_residual(&u, &x, &y, &c).is_zero() {
            low += 1;
        }
    }
    Ok((up, low))
}

pub fn kernel_rows(r: u32) -> Vec<Row> {
    let n = r.div_ceil(2);
    match kernel_dim_total(r) {
        Ok((total, ranks)) => vec![
            Row::eq("kernel-total", Some(r), None, total, expected_kernel_dim_total(r)),
            Row::with(
                "block-rank",
                Some(r),
                None,
                format!("{ranks:?}"),
                format!("all {n}"),
                ranks.iter().all(|&k| k == n as usize),
            ),
        ],
        Err(e) => vec![Row::with("kernel-total", Some(r), None, e, expected_kernel_dim_total(r), false)],
    }
}

pub fn operator_row(r: u32) -> Row {
    match (triangular_roth_operator_rank(r), BlockSpec::new(r)) {
        (Ok((rank, onto)), Ok(spec)) => {
            let p = spec.p();
            let kernel = p * (p + 1) - rank;
            let k = k_space(r).dim();
            Row::with(
                "roth-operator",
                Some(r),
                None,
                format!("onto={onto} kernel={kernel}"),
                format!("onto=true kernel={k}"),
                onto && kernel == k,
            )
        }
        (Err(e), _) | (_, Err(e)) => Row::with("roth-operator", Some(r), None, e, "onto", false),
    }
}

pub fn positivity_row(r: u32, max_order: usize) -> Row {
    match toeplitz_positivity(r, max_order) {
        Ok(p) => Row::with(
            "positivity",
            Some(r),
            None,
            format!("{} minors of N, {} windows, all positive = {}", p.n_minors, p.window_minors, p.all_positive),
            "all positive = true",
            p.all_positive,
        ),
        Err(e) => Row::with("positivity", Some(r), None, e, "all positive = true", false),
    }
}

fn param_ok(k: &KSpace, f: &HPoly) -> bool {
    param_extract(k, f)
        .and_then(|pm: ParamMatrices| pm.verify())
        .map(|c| c.all())
        .unwrap_or(false)
}

/// Every structured-matrix claim at one `r`.
pub fn structmat_rows(r: u32, seed: u64) -> Vec<Row> {
    let some = Some(r);
    let mut rows = kernel_rows(r);
    if let Ok(n) = n_block(r) {
        let det = n.det().expect("square").to_integer();
        let (lambda, t) = rectangular_partition(r);
        match schur_dim_det(&lambda, t) {
            Ok(s) => rows.push(Row::eq("schur-rectangular", some, None, &det, s)),
            Err(e) => rows.push(Row::with("schur-rectangular", some, None, det, e, false)),
        }
    }
    if r.div_ceil(2) <= 4 {
        rows.push(positivity_row(r, 4));
    }
    match u_matrix(r) {
        Ok(u) => {
            rows.push(Row::eq("u-symmetric", some, None, u.is_symmetric(), true));
            let minors = conj(&u).minors(MinorMode::LeadingPrincipal).expect("square");
            let zeros = minors.iter().filter(|m| num_traits::Zero::is_zero(*m)).count();
            rows.push(Row::eq("u-lu", some, None, format!("{zeros} zero minors"), "0 zero minors"));
        }
        Err(e) => rows.push(Row::with("u-symmetric", some, None, e, true, false)),
    }
    let want = format!("{ROTH_SAMPLES}/{ROTH_SAMPLES}");
    match roth_counts(r, seed, ROTH_SAMPLES) {
        Ok((up, low)) => {
            rows.push(Row::eq("roth-upper", some, None, format!("{up}/{ROTH_SAMPLES}"), &want));
            rows.push(Row::eq("roth-lower", some, None, format!("{low}/{ROTH_SAMPLES}"), &want));
        }
        Err(e) => rows.push(Row::with("roth-upper", some, None, e, &want, false)),
    }
    rows.push(operator_row(r));
    let k = k_space(r);
    let basis = k.basis.basis_polys();
    let good = basis.iter().filter(|f| param_ok(&k, f)).count();
    rows.push(Row::eq("param-relations", some, None, format!("{good}/{}", basis.len()), format!("{0}/{0}", basis.len())));
    rows
}

pub fn structmat_sweep(r_max: u32, seed: u64) -> Vec<Row> {
    par_rows(1..=r_max, |r| structmat_rows(r, seed))
}

/// Parameter relations for a single user polynomial.
pub fn param_element_row(k: &KSpace, f: &HPoly) -> Row {
    let r = k.r;
    match param_extract(k, f).and_then(|pm| pm.verify()) {
        Ok(c) => Row::with("param-element", Some(r), None, format!("{c:?}"), "all true", c.all()),
        Err(e) => Row::with("param-element", Some(r), None, e, "all true", false),
    }
}
