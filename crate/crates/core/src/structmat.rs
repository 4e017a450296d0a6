//! Binomial Toeplitz blocks, Schur dimension determinants, and Roth's
//! equation with triangular solutions.
//!
//! Throughout, `n = ⌊(r+1)/2⌋`, `p = r - n + 1` and `m_ℓ = C(r+1, ℓ)`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::deltastar::KSpace;
use crate::exactla::{all_positive, binomial, binomial_q, combinations, exchange_matrix, LinAlgError, QMatrix, Rational};
use crate::polyring::{mult_map, HPoly, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructError {
    #[error("k = {k} outside {lo}..={hi}")]
    KOutOfRange { k: u32, lo: u32, hi: u32 },
    #[error("r must be positive")]
    ZeroR,
    #[error("partition must be nonincreasing and positive")]
    BadPartition,
    #[error("dimension t = {t} must exceed the largest part {d1}")]
    TooSmallDimension { t: u32, d1: u32 },
    #[error("matrix must be symmetric")]
    NotSymmetric,
    #[error("polynomial is not in K({0})")]
    NotInK(u32),
    #[error("internal error: inconsistent coefficient system at k = {0}")]
    Inconsistent(u32),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}

/// `r`, `n` and the binomials `m_ℓ = C(r+1, ℓ)`, `ℓ = 0..=r+1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockSpec {
    pub r: u32,
    pub n: u32,
    pub m_coeffs: Vec<BigInt>,
}

impl BlockSpec {
    pub fn new(r: u32) -> Result<Self, StructError> {
        if r == 0 {
            return Err(StructError::ZeroR);
        }
        Ok(BlockSpec {
            r,
            n: r.div_ceil(2),
            m_coeffs: (0..=r as i64 + 1).map(|l| binomial(r as i64 + 1, l)).collect(),
        })
    }

    /// `m_ℓ`, zero outside `0..=r+1`.
    pub fn m(&self, l: i64) -> Rational {
        binomial_q(self.r as i64 + 1, l)
    }

    /// `r - n + 1`: the side of `𝒬`, `𝒮`, `𝒟`, `𝒰`.
    pub fn p(&self) -> usize {
        (self.r - self.n + 1) as usize
    }

    /// Index of `m` in the top-left corner of `𝓜(k)`: `n` for odd `r`, `n+1` for even.
    fn top(&self) -> i64 {
        self.p() as i64
    }
}

/// `𝓜(k)`, `n × (k+1)` with entry `(i, j) = m_{top + i - j}`.
pub fn m_block(r: u32, k: u32) -> Result<QMatrix, StructError> {
    let spec = BlockSpec::new(r)?;
    if k < spec.n || k > r {
        return Err(StructError::KOutOfRange { k, lo: spec.n, hi: r });
    }
    let top = spec.top();
    Ok(QMatrix::from_fn(spec.n as usize, k as usize + 1, |i, j| {
        spec.m(top + i as i64 - j as i64)
    }))
}

/// `(Σ_k nullity 𝓜(k), ranks of 𝓜(n), ..., 𝓜(r))`.
pub fn kernel_dim_total(r: u32) -> Result<(usize, Vec<usize>), StructError> {
    let spec = BlockSpec::new(r)?;
    let mut total = 0;
    let mut ranks = Vec::new();
    for k in spec.n..=r {
        let m = m_block(r, k)?;
        let rank = m.rank();
        total += m.cols() - rank;
        ranks.push(rank);
    }
    Ok((total, ranks))
}

/// `n(n+1)/2` for `r = 2n-1`, `(n+1)(n+2)/2` for `r = 2n`.
pub fn expected_kernel_dim_total(r: u32) -> usize {
    let n = r.div_ceil(2) as usize;
    if r % 2 == 1 {
        n * (n + 1) / 2
    } else {
        (n + 1) * (n + 2) / 2
    }
}

/// `𝒩`, the left `n × n` block of `𝓜(k)`.
pub fn n_block(r: u32) -> Result<QMatrix, StructError> {
    let spec = BlockSpec::new(r)?;
    let top = spec.top();
    let n = spec.n as usize;
    Ok(QMatrix::from_fn(n, n, |i, j| spec.m(top + i as i64 - j as i64)))
}

/// `𝒩' = [[0 | 𝒩⁻¹], [-1 | 0]]`, `(n+1) × (n+1)`, for even `r`.
pub fn n_prime(r: u32) -> Result<QMatrix, StructError> {
    let inv = n_block(r)?.inverse()?;
    let n = inv.rows();
    Ok(QMatrix::from_fn(n + 1, n + 1, |i, j| {
        if i < n && j >= 1 {
            inv.get(i, j - 1).clone()
        } else if i == n && j == 0 {
            -Rational::one()
        } else {
            Rational::zero()
        }
    }))
}

/// `𝒩̄`: `𝒩⁻¹` for odd `r`, `𝒩'` for even `r`.
pub fn n_bar(r: u32) -> Result<QMatrix, StructError> {
    if r % 2 == 1 {
        Ok(n_block(r)?.inverse()?)
    } else {
        n_prime(r)
    }
}

/// `𝒟`, `p × p` lower triangular with entries `C(r+1, i-j)`.
pub fn d_matrix(r: u32) -> Result<QMatrix, StructError> {
    let spec = BlockSpec::new(r)?;
    let p = spec.p();
    Ok(QMatrix::from_fn(p, p, |i, j| spec.m(i as i64 - j as i64)))
}

/// `𝒰 = 𝒥 𝒟 𝒩̄ 𝒟`.
pub fn u_matrix(r: u32) -> Result<QMatrix, StructError> {
    let d = d_matrix(r)?;
    let j = exchange_matrix(d.rows());
    Ok(&(&(&j * &d) * &n_bar(r)?) * &d)
}

fn check_partition(lambda: &[u32], t: u32) -> Result<(), StructError> {
    if lambda.is_empty() || lambda.contains(&0) || lambda.windows(2).any(|w| w[0] < w[1]) {
        return Err(StructError::BadPartition);
    }
    if t <= lambda[0] {
        return Err(StructError::TooSmallDimension { t, d1: lambda[0] });
    }
    Ok(())
}

/// `det [C(t, d_j + i - j)]`, the dimension of the Schur module of `λ` on a
/// `t`-dimensional space.
pub fn schur_dim_det(lambda: &[u32], t: u32) -> Result<BigInt, StructError> {
    check_partition(lambda, t)?;
    let s = lambda.len();
    let m = QMatrix::from_fn(s, s, |i, j| binomial_q(t as i64, lambda[j] as i64 + i as i64 - j as i64));
    Ok(m.det()?.to_integer())
}

/// Conjugate partition.
pub fn conjugate(lambda: &[u32]) -> Vec<u32> {
    let d1 = lambda.first().copied().unwrap_or(0);
    (1..=d1)
        .map(|c| lambda.iter().filter(|&&d| d >= c).count() as u32)
        .collect()
}

/// Weyl's product `Π_{i<j} (μ_i - μ_j + j - i) / (j - i)` for `μ` the
/// conjugate of `λ` padded to length `t`. The determinant convention
/// builds modules from the rows of `λ` by exterior powers, hence the
/// conjugate.
pub fn schur_dim_weyl(lambda: &[u32], t: u32) -> Result<BigInt, StructError> {
    check_partition(lambda, t)?;
    let mut mu: Vec<i64> = conjugate(lambda).into_iter().map(i64::from).collect();
    mu.resize(t as usize, 0);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..mu.len() {
        for j in i + 1..mu.len() {
            num *= BigInt::from(mu[i] - mu[j] + (j - i) as i64);
            den *= BigInt::from((j - i) as i64);
        }
    }
    Ok(num / den)
}

/// Rectangular partition whose Schur dimension equals `det 𝒩`:
/// `(n, ..., n)` with `t = 2n` for odd `r`, `(n+1, ..., n+1)` with `t = 2n+1`
/// for even `r`.
pub fn rectangular_partition(r: u32) -> (Vec<u32>, u32) {
    let n = r.div_ceil(2);
    if r % 2 == 1 {
        (vec![n; n as usize], 2 * n)
    } else {
        (vec![n + 1; n as usize], 2 * n + 1)
    }
}

/// Outcome of [`toeplitz_positivity`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Positivity {
    pub n_minors: usize,
    pub window_minors: usize,
    pub all_positive: bool,
}

/// Every minor of `𝒩` and every contiguous `k × k` window
/// `(a_{c+j-i})` of the Toeplitz matrix of `(1+x)^{r+1}` with
/// `0 ≤ c ≤ r+1`, `k ≤ max_order`, checked for strict positivity.
pub fn toeplitz_positivity(r: u32, max_order: usize) -> Result<Positivity, StructError> {
    let spec = BlockSpec::new(r)?;
    let n = n_block(r)?;
    let n_minors = n.minors(crate::exactla::MinorMode::AllUpTo(n.rows()))?;
    let mut windows = Vec::new();
    for k in 1..=max_order {
        for c in 0..=spec.r as i64 + 1 {
            let w = QMatrix::from_fn(k, k, |i, j| spec.m(c + j as i64 - i as i64));
            windows.push(w.det()?);
        }
    }
    Ok(Positivity {
        n_minors: n_minors.len(),
        window_minors: windows.len(),
        all_positive: all_positive(&n_minors) && all_positive(&windows),
    })
}

/// Number of minors of a `p × p` matrix of all orders, `Σ_k C(p,k)²`.
pub fn full_minor_count(p: usize) -> usize {
    (1..=p).map(|k| combinations(p, k).len().pow(2)).sum()
}

/// Whether `AX - YB = C` has a solution: `rank [[A,0],[0,B]] = rank [[A,C],[0,B]]`.
pub fn roth_solvable(a: &QMatrix, b: &QMatrix, c: &QMatrix) -> Result<bool, StructError> {
    if a.rows() != c.rows() || b.cols() != c.cols() {
        return Err(LinAlgError::ShapeMismatch("Roth blocks").into());
    }
    let za = QMatrix::zeros(a.rows(), b.cols());
    let zb = QMatrix::zeros(b.rows(), a.cols());
    let left = QMatrix::vstack(&[&QMatrix::hstack(&[a, &za])?, &QMatrix::hstack(&[&zb, b])?])?;
    let right = QMatrix::vstack(&[&QMatrix::hstack(&[a, c])?, &QMatrix::hstack(&[&zb, b])?])?;
    Ok(left.rank() == right.rank())
}

/// Upper triangular `X, Y` with `W X - Yᵀ Wᵀ = C`, from `W = V U`:
/// `C' = V⁻¹ C V⁻ᵀ = C'_u - C'_l` with the diagonal in `C'_u`, then
/// `X = U⁻¹ C'_u Vᵀ`, `Y = U⁻¹ C'_lᵀ Vᵀ`.
pub fn roth_triangular_solve(w: &QMatrix, c: &QMatrix) -> Result<(QMatrix, QMatrix), StructError> {
    if c.rows() != w.rows() || c.cols() != w.cols() {
        return Err(LinAlgError::ShapeMismatch("C must match W").into());
    }
    let (v, u) = w.lu_decompose()?;
    let vi = v.inverse()?;
    let ui = u.inverse()?;
    let cp = &(&vi * c) * &vi.transpose();
    let cu = cp.upper_part();
    let cl = -&cp.strict_lower_part();
    let vt = v.transpose();
    let x = &(&ui * &cu) * &vt;
    let y = &(&ui * &cl.transpose()) * &vt;
    Ok((x, y))
}

/// Lower triangular `X, Y` with `U X - Yᵀ U = C` for symmetric `U`, by
/// solving the upper problem for `𝒥U𝒥` and `𝒥C𝒥` and conjugating back.
pub fn roth_lower_solve(u: &QMatrix, c: &QMatrix) -> Result<(QMatrix, QMatrix), StructError> {
    if !u.is_square() {
        return Err(LinAlgError::NotSquare { rows: u.rows(), cols: u.cols() }.into());
    }
    if !u.is_symmetric() {
        return Err(StructError::NotSymmetric);
    }
    let j = exchange_matrix(u.rows());
    let conj = |m: &QMatrix| &(&j * m) * &j;
    let (xp, yp) = roth_triangular_solve(&conj(u), &conj(c))?;
    Ok((conj(&xp), conj(&yp)))
}

/// Residual `W X - Yᵀ Wᵀ - C`.
pub fn upper_residual(w: &QMatrix, x: &QMatrix, y: &QMatrix, c: &QMatrix) -> QMatrix {
    &(&(w * x) - &(&y.transpose() * &w.transpose())) - c
}

/// Residual `U X - Yᵀ U - C`.
pub fn lower_residual(u: &QMatrix, x: &QMatrix, y: &QMatrix, c: &QMatrix) -> QMatrix {
    &(&(u * x) - &(&y.transpose() * u)) - c
}

/// Matrix of `(S̃, Q̃) -> U S̃ - Q̃ᵀ Uᵀ` on pairs of upper triangular
/// matrices, `p² × p(p+1)`; its rank and whether it is onto.
pub fn triangular_roth_operator(r: u32) -> Result<(QMatrix, usize, bool), StructError> {
    let u = u_matrix(r)?;
    let p = u.rows();
    let positions: Vec<(usize, usize)> = (0..p).flat_map(|a| (a..p).map(move |b| (a, b))).collect();
    let unit = |a: usize, b: usize| QMatrix::from_fn(p, p, |i, j| if (i, j) == (a, b) { Rational::one() } else { Rational::zero() });
    let ut = u.transpose();
    let mut cols = Vec::with_capacity(2 * positions.len());
    for &(a, b) in &positions {
        cols.push((&u * &unit(a, b)).entries().to_vec());
    }
    for &(a, b) in &positions {
        cols.push((-&(&unit(a, b).transpose() * &ut)).entries().to_vec());
    }
    let m = QMatrix::from_columns(p * p, &cols);
    let rank = m.rank();
    Ok((m, rank, rank == p * p))
}

/// `(rank, surjective)` of [`triangular_roth_operator`].
pub fn triangular_roth_operator_rank(r: u32) -> Result<(usize, bool), StructError> {
    let (_, rank, onto) = triangular_roth_operator(r)?;
    Ok((rank, onto))
}

/// Coefficient data of `F ∈ K(r)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamMatrices {
    pub r: u32,
    /// `(P_k, Q_k)` for `k = n..=r` with `y^{r+1} f_k = P_k x^{r+1} + Q_k (x+y)^{r+1}`.
    pub pq: Vec<(HPoly, HPoly)>,
    /// `(R_i, S_i)` for `i = n..=r` with `y^{r+1} g_i = R_i z^{r+1} + S_i (z+y)^{r+1}`.
    pub rs: Vec<(HPoly, HPoly)>,
    pub q: QMatrix,
    pub s: QMatrix,
    pub q_tilde: QMatrix,
    pub s_tilde: QMatrix,
    pub a: QMatrix,
    pub b: QMatrix,
}

/// Unique `(P, Q)` of degree `k` with `y^{r+1} f = P u^{r+1} + Q (u+y)^{r+1}`
/// in the two-variable ring of `f`, where `u` is the variable other than `y`.
fn split_colon(f: &HPoly, u: Var, r: u32, k: u32) -> Result<(HPoly, HPoly), StructError> {
    let ring = f.vars();
    let uu = HPoly::var(ring, u).expect("ring variable");
    let y = HPoly::var(ring, Var::Y).expect("ring variable");
    let g1 = uu.pow(r + 1);
    let g2 = uu.checked_add(&y).expect("same degree").pow(r + 1);
    let m = QMatrix::hstack(&[&mult_map(&g1, k), &mult_map(&g2, k)])?;
    let lhs = y.pow(r + 1).mul(f);
    let rhs = QMatrix::from_columns(m.rows(), &[lhs.into_coeffs()]);
    let sol = m.solve(&rhs)?.ok_or(StructError::Inconsistent(k))?;
    if m.rank() != m.cols() {
        return Err(StructError::Inconsistent(k));
    }
    let w = (k + 1) as usize;
    let col = sol.column(0);
    let p = HPoly::from_coeffs(ring, k, col[..w].to_vec()).expect("length");
    let q = HPoly::from_coeffs(ring, k, col[w..].to_vec()).expect("length");
    Ok((p, q))
}

fn exp_x(a: u32, b: u32) -> [u32; 3] {
    [a, b, 0]
}

fn exp_z(a: u32, b: u32) -> [u32; 3] {
    [0, b, a]
}

pub fn param_extract(k: &KSpace, f: &HPoly) -> Result<ParamMatrices, StructError> {
    let r = k.r;
    if !k.contains(f) {
        return Err(StructError::NotInK(r));
    }
    let spec = BlockSpec::new(r)?;
    let n = spec.n;
    let p = spec.p();
    let mut pq = Vec::new();
    let mut rs = Vec::new();
    for kk in n..=r {
        pq.push(split_colon(&f.slice(Var::Z, kk), Var::X, r, kk)?);
        rs.push(split_colon(&f.slice(Var::X, kk), Var::Z, r, kk)?);
    }
    let coeff = |e: [u32; 3]| f.coeff(&e);
    // columns indexed by c = k - n
    let q = QMatrix::from_fn(p, p, |a, c| pq[c].1.coeff(&exp_x(a as u32, n + c as u32 - a as u32)));
    let s = QMatrix::from_fn(p, p, |row, c| rs[c].1.coeff(&exp_z(row as u32, n + c as u32 - row as u32)));
    let a = QMatrix::from_fn(p, p, |a, c| {
        let kk = n + c as u32;
        coeff([a as u32, kk - a as u32, r - kk])
    });
    let b = QMatrix::from_fn(p, p, |row, c| {
        let i = n + c as u32;
        coeff([r - i, i - row as u32, row as u32])
    });
    let tilde = |polys: &[(HPoly, HPoly)], e: fn(u32, u32) -> [u32; 3]| {
        QMatrix::from_fn(p, p, |a, b| {
            if a > b {
                Rational::zero()
            } else {
                polys[b].1.coeff(&e(n + a as u32, (b - a) as u32))
            }
        })
    };
    let q_tilde = tilde(&pq, exp_x);
    let s_tilde = tilde(&rs, exp_z);
    Ok(ParamMatrices {
        r,
        pq,
        rs,
        q,
        s,
        q_tilde,
        s_tilde,
        a,
        b,
    })
}

/// Which of the relations among the parameter matrices hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ParamCheck {
    pub kernel_q: bool,
    pub kernel_s: bool,
    pub p_from_q: bool,
    pub a_eq_dq: bool,
    pub b_eq_ds: bool,
    pub jatj_eq_b: bool,
    pub ds_eq_jqtdtj: bool,
    pub q_from_tilde: bool,
    pub s_from_tilde: bool,
    pub u_tilde: bool,
}

impl ParamCheck {
    pub fn all(&self) -> bool {
        self.kernel_q
            && self.kernel_s
            && self.p_from_q
            && self.a_eq_dq
            && self.b_eq_ds
            && self.jatj_eq_b
            && self.ds_eq_jqtdtj
            && self.q_from_tilde
            && self.s_from_tilde
            && self.u_tilde
    }
}

/// Coefficient vector `(c_0, ..., c_k)` of `h` with `c_i` the coefficient of
/// `u^i y^{k-i}`.
fn by_power(h: &HPoly, e: fn(u32, u32) -> [u32; 3]) -> Vec<Rational> {
    let k = h.degree();
    (0..=k).map(|i| h.coeff(&e(i, k - i))).collect()
}

impl ParamMatrices {
    pub fn verify(&self) -> Result<ParamCheck, StructError> {
        let r = self.r;
        let spec = BlockSpec::new(r)?;
        let n = spec.n;
        let d = d_matrix(r)?;
        let nb = n_bar(r)?;
        let u = u_matrix(r)?;
        let j = exchange_matrix(d.rows());
        let mut out = ParamCheck {
            kernel_q: true,
            kernel_s: true,
            p_from_q: true,
            ..ParamCheck::default()
        };
        for (c, kk) in (n..=r).enumerate() {
            let m = m_block(r, kk)?;
            let qv = by_power(&self.pq[c].1, exp_x);
            let sv = by_power(&self.rs[c].1, exp_z);
            out.kernel_q &= m.apply(&qv).iter().all(Zero::is_zero);
            out.kernel_s &= m.apply(&sv).iter().all(Zero::is_zero);
            for (poly, vec_q, e) in [(&self.pq[c].0, &qv, exp_x as fn(u32, u32) -> [u32; 3]), (&self.rs[c].0, &sv, exp_z)] {
                let pv = by_power(poly, e);
                for (t, pt) in pv.iter().enumerate() {
                    let expect: Rational = (t..vec_q.len())
                        .map(|jj| spec.m(r as i64 + 1 + t as i64 - jj as i64) * &vec_q[jj])
                        .fold(Rational::zero(), |acc, v| acc + v);
                    out.p_from_q &= *pt == -expect;
                }
            }
        }
        out.a_eq_dq = self.a == &d * &self.q;
        out.b_eq_ds = self.b == &d * &self.s;
        out.jatj_eq_b = &(&j * &self.a.transpose()) * &j == self.b;
        out.ds_eq_jqtdtj = &d * &self.s == &(&(&j * &self.q.transpose()) * &d.transpose()) * &j;
        let nd = &nb * &d;
        out.q_from_tilde = self.q == -&(&nd * &self.q_tilde);
        out.s_from_tilde = self.s == -&(&nd * &self.s_tilde);
        out.u_tilde = &u * &self.s_tilde == (&u * &self.q_tilde).transpose();
        Ok(out)
    }

    /// The matrices as one flat vector, for linearity checks.
    pub fn flatten(&self) -> Vec<Rational> {
        let mut v = Vec::new();
        for m in [&self.q, &self.s, &self.q_tilde, &self.s_tilde, &self.a, &self.b] {
            v.extend(m.entries().iter().cloned());
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{rat, ratio};

    #[test]
    fn m_blocks() {
        assert_eq!(m_block(3, 2).unwrap(), QMatrix::from_i64(&[[6, 4, 1], [4, 6, 4]]));
        assert_eq!(m_block(3, 3).unwrap(), QMatrix::from_i64(&[[6, 4, 1, 0], [4, 6, 4, 1]]));
        assert_eq!(m_block(2, 1).unwrap(), QMatrix::from_i64(&[[3, 3]]));
        assert!(matches!(m_block(3, 1), Err(StructError::KOutOfRange { .. })));
        assert!(matches!(m_block(3, 4), Err(StructError::KOutOfRange { .. })));
    }

    #[test]
    fn kernel_totals() {
        assert_eq!(kernel_dim_total(3).unwrap(), (3, vec![2, 2]));
        assert_eq!(kernel_dim_total(4).unwrap().0, 6);
        assert_eq!(kernel_dim_total(1).unwrap().0, 1);
    }

    #[test]
    fn n_blocks() {
        let n = n_block(3).unwrap();
        assert_eq!(n, QMatrix::from_i64(&[[6, 4], [4, 6]]));
        assert_eq!(n.det().unwrap(), rat(20));
        assert_eq!(n_block(2).unwrap(), QMatrix::from_i64(&[[3]]));
        let np = n_prime(2).unwrap();
        assert_eq!(
            np,
            QMatrix::from_rows(vec![vec![rat(0), ratio(1, 3)], vec![rat(-1), rat(0)]]).unwrap()
        );
    }

    #[test]
    fn u_for_r3() {
        assert_eq!(d_matrix(3).unwrap(), QMatrix::from_i64(&[[1, 0], [4, 1]]));
        let u = u_matrix(3).unwrap();
        let want = QMatrix::from_rows(vec![
            vec![rat(-1), ratio(-1, 2)],
            vec![ratio(-1, 2), ratio(-1, 5)],
        ])
        .unwrap();
        assert_eq!(u, want);
    }

    #[test]
    fn schur_examples() {
        for t in 2..7 {
            assert_eq!(schur_dim_det(&[1], t).unwrap(), BigInt::from(t));
        }
        assert_eq!(schur_dim_det(&[2, 1], 3).unwrap(), BigInt::from(8));
        assert_eq!(schur_dim_weyl(&[2, 1], 3).unwrap(), BigInt::from(8));
        assert_eq!(schur_dim_det(&[2, 2], 4).unwrap(), BigInt::from(20));
        assert_eq!(schur_dim_weyl(&[2, 2], 4).unwrap(), BigInt::from(20));
        assert_eq!(schur_dim_weyl(&[1], 5).unwrap(), BigInt::from(5));
        assert_eq!(schur_dim_det(&[3], 3), Err(StructError::TooSmallDimension { t: 3, d1: 3 }));
        assert_eq!(schur_dim_det(&[1, 2], 5), Err(StructError::BadPartition));
        assert_eq!(conjugate(&[3, 1]), vec![2, 1, 1]);
    }

    #[test]
    fn positivity_r3() {
        let p = toeplitz_positivity(3, 3).unwrap();
        assert!(p.all_positive);
        assert_eq!(p.n_minors, full_minor_count(2));
        let minors = n_block(3).unwrap().minors(crate::exactla::MinorMode::AllUpTo(2)).unwrap();
        let mut got: Vec<i64> = minors.iter().map(|q| i64::try_from(q.to_integer()).unwrap()).collect();
        got.sort_unstable();
        assert_eq!(got, vec![4, 4, 6, 6, 20]);
    }

    #[test]
    fn roth_criteria() {
        let i2 = QMatrix::identity(2);
        let c = QMatrix::from_i64(&[[1, 2], [3, 4]]);
        assert!(roth_solvable(&i2, &i2, &c).unwrap());
        let z = QMatrix::zeros(2, 2);
        assert!(!roth_solvable(&z, &z, &c).unwrap());
        assert!(roth_solvable(&z, &z, &z).unwrap());
    }

    #[test]
    fn triangular_solve_hand_example() {
        let w = QMatrix::from_i64(&[[1, 0], [1, 1]]);
        let c = QMatrix::from_i64(&[[0, 0], [1, 0]]);
        let (x, y) = roth_triangular_solve(&w, &c).unwrap();
        assert_eq!(x, QMatrix::from_i64(&[[0, 0], [0, -1]]));
        assert_eq!(y, QMatrix::from_i64(&[[0, -1], [0, 0]]));
        assert!(upper_residual(&w, &x, &y, &c).is_zero());

        let up = QMatrix::from_i64(&[[1, 2], [0, 3]]);
        let (x, y) = roth_triangular_solve(&QMatrix::identity(2), &up).unwrap();
        assert_eq!((x, y.is_zero()), (up, true));

        let anti = QMatrix::from_i64(&[[0, 1], [1, 0]]);
        assert!(matches!(roth_triangular_solve(&anti, &c), Err(StructError::LinAlg(LinAlgError::NoLu { .. }))));
    }

    #[test]
    fn lower_solve() {
        let lo = QMatrix::from_i64(&[[1, 0], [2, 3]]);
        let (x, y) = roth_lower_solve(&QMatrix::identity(2), &lo).unwrap();
        assert_eq!((x, y.is_zero()), (lo, true));
        let u = u_matrix(3).unwrap();
        let c = QMatrix::from_i64(&[[1, -2], [5, 7]]);
        let (x, y) = roth_lower_solve(&u, &c).unwrap();
        assert!(x.is_lower_triangular() && y.is_lower_triangular());
        assert!(lower_residual(&u, &x, &y, &c).is_zero());
        let z = QMatrix::zeros(2, 2);
        let (x, y) = roth_lower_solve(&u, &z).unwrap();
        assert!(x.is_zero() && y.is_zero());
        assert_eq!(roth_lower_solve(&QMatrix::from_i64(&[[1, 2], [0, 1]]), &c), Err(StructError::NotSymmetric));
    }

    #[test]
    fn roth_operator_small() {
        assert_eq!(triangular_roth_operator_rank(1).unwrap(), (1, true));
        assert_eq!(triangular_roth_operator_rank(3).unwrap(), (4, true));
    }

    #[test]
    fn params_r3() {
        let k = crate::deltastar::k_space(3);
        for f in k.basis.basis_polys() {
            let pm = param_extract(&k, &f).unwrap();
            let check = pm.verify().unwrap();
            assert!(check.all(), "{check:?}");
        }
        let y3 = HPoly::var(crate::polyring::VarSet::XYZ, Var::Y).unwrap().pow(3);
        assert!(param_extract(&k, &y3).unwrap().verify().unwrap().all());
        let x3 = HPoly::var(crate::polyring::VarSet::XYZ, Var::X).unwrap().pow(3);
        assert_eq!(param_extract(&k, &x3), Err(StructError::NotInK(3)));
    }
}
