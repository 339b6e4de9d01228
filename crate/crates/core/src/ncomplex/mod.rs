//! Modules with an endomorphism `d` such that `d^N = 0`, and their generalized homology
//! `H_(n) = ker d^n / im d^(N-n)`.

mod exact;
mod graded;

pub use exact::{GradedSes, ShortExactSequence};
pub use graded::{
    corollary2_check, delta_map, extract_contracted_complex, lemma7_check, tensor_ncomplex, ComplexMap,
    ContractedComplex, Corollary2Report, HomologyCell, HomologyTable, Lemma7Report, NComplex,
};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Quotient, Subspace};
use crate::rings::QContext;

#[derive(Clone, Debug)]
pub struct NDiffModule {
    ctx: QContext,
    d: Matrix,
}

fn nilpotency_witness(power: &Matrix) -> Option<String> {
    (0..power.cols()).find(|&j| power.column(j).iter().any(|x| !power.field().is_zero(x))).map(|j| {
        let image: Vec<String> = power.column(j).iter().map(|x| power.field().format(x)).collect();
        format!("basis vector e{j} maps to [{}]", image.join(", "))
    })
}

impl NDiffModule {
    /// Checks that `d` is square over the context field and that `d^N = 0`.
    pub fn new(ctx: &QContext, d: Matrix) -> Result<NDiffModule> {
        if d.rows() != d.cols() {
            return Err(Error::DimensionMismatch(format!("differential is {}x{}", d.rows(), d.cols())));
        }
        if d.field() != ctx.field() {
            return Err(Error::InvalidField("differential entries are not in the context field".into()));
        }
        if let Some(witness) = nilpotency_witness(&d.pow(ctx.order())) {
            return Err(Error::NotNilpotent { order: ctx.order(), witness });
        }
        Ok(NDiffModule { ctx: ctx.clone(), d })
    }

    pub fn zero(ctx: &QContext, dim: usize) -> NDiffModule {
        NDiffModule { ctx: ctx.clone(), d: Matrix::zeros(ctx.field(), dim, dim) }
    }

    /// The module `k^len` with `d = D_len`, the matrix with ones on the superdiagonal.
    pub fn shift(ctx: &QContext, len: usize) -> Result<NDiffModule> {
        NDiffModule::new(ctx, shift_matrix(ctx, len))
    }

    pub fn ctx(&self) -> &QContext {
        &self.ctx
    }
    pub fn order(&self) -> usize {
        self.ctx.order()
    }
    pub fn dim(&self) -> usize {
        self.d.rows()
    }
    pub fn d(&self) -> &Matrix {
        &self.d
    }

    pub fn d_pow(&self, k: usize) -> Matrix {
        if k >= self.order() {
            return Matrix::zeros(self.ctx.field(), self.dim(), self.dim());
        }
        self.d.pow(k)
    }

    /// `Z_(n) = ker d^n`
    pub fn cycles(&self, n: usize) -> Subspace {
        self.d_pow(n).kernel()
    }

    /// `B_(n) = im d^(N-n)`
    pub fn boundaries(&self, n: usize) -> Subspace {
        self.d_pow(self.order() - n).image()
    }

    /// `H_(n)` for `0 <= n <= N`, with a fixed basis of representatives.
    pub fn homology(&self, n: usize) -> Result<Quotient> {
        if n > self.order() {
            return Err(Error::OutOfRange(format!("homology level {n} with N = {}", self.order())));
        }
        Quotient::new(self.cycles(n), self.boundaries(n))
    }

    /// `dim H_(n)` for `n = 1 .. N-1`.
    pub fn homology_dims(&self) -> Result<Vec<usize>> {
        (1..self.order()).map(|n| Ok(self.homology(n)?.dim())).collect()
    }

    pub fn direct_sum(&self, other: &NDiffModule) -> NDiffModule {
        NDiffModule { ctx: self.ctx.clone(), d: self.d.block_diag(&other.d) }
    }

    /// The module `(E, P d P^-1)`.
    pub fn conjugate(&self, p: &Matrix) -> Result<NDiffModule> {
        let inv = p.inverse().ok_or_else(|| Error::PremiseNotMet("conjugating matrix is singular".into()))?;
        Ok(NDiffModule { ctx: self.ctx.clone(), d: p.mul(&self.d).mul(&inv) })
    }

    pub fn is_module_map(&self, target: &NDiffModule, phi: &Matrix) -> bool {
        phi.shape() == (target.dim(), self.dim()) && phi.mul(&self.d) == target.d.mul(phi)
    }
}

/// `D_n`: ones on the superdiagonal.
pub fn shift_matrix(ctx: &QContext, n: usize) -> Matrix {
    let f = ctx.field();
    let mut m = Matrix::zeros(f, n, n);
    for i in 0..n.saturating_sub(1) {
        m.set(i, i + 1, f.one());
    }
    m
}

/// `H_N`: subdiagonal entries `[N-1]_q, ..., [1]_q`, so that `H_N D_N - q D_N H_N = Id`.
pub fn contraction_matrix(ctx: &QContext, n: usize) -> Matrix {
    let mut m = Matrix::zeros(ctx.field(), n, n);
    for i in 0..n.saturating_sub(1) {
        m.set(i + 1, i, ctx.q_number(n - 1 - i));
    }
    m
}

/// `[i]^a : H_(n) -> H_(n+a)`, induced by the identity.
pub fn inclusion_map(e: &NDiffModule, n: usize, a: usize) -> Result<Matrix> {
    let id = Matrix::identity(e.ctx.field(), e.dim());
    e.homology(n)?.induced(&e.homology(n + a)?, &id)
}

/// `[d]^b : H_(n) -> H_(n-b)`, induced by `d^b`.
pub fn differential_map(e: &NDiffModule, n: usize, b: usize) -> Result<Matrix> {
    e.homology(n)?.induced(&e.homology(n - b)?, &e.d_pow(b))
}

fn is_iso(m: &Matrix) -> bool {
    m.rows() == m.cols() && m.rank() == m.rows()
}

/// Dimensions at one node of an exact sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeReport {
    pub label: String,
    pub dim: usize,
    pub ker_out: usize,
    pub im_in: usize,
}

/// Exactness of a cyclic sequence of maps `maps[k] : X_k -> X_{k+1}`.
pub(crate) fn cyclic_exactness(labels: &[String], maps: &[Matrix]) -> Result<Vec<NodeReport>> {
    let n = maps.len();
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let incoming = &maps[(k + n - 1) % n];
        let outgoing = &maps[k];
        let dim = outgoing.cols();
        let report = NodeReport {
            label: labels[k].clone(),
            dim,
            ker_out: dim - outgoing.rank(),
            im_in: incoming.rank(),
        };
        if !crate::linalg::exact_at(incoming, outgoing) {
            return Err(Error::ExactnessFailure(labels[k].clone()));
        }
        out.push(report);
    }
    Ok(out)
}

/// The hexagon
/// `H_(m) -> H_(l+m) -> H_(l) -> H_(N-m) -> H_(N-l-m) -> H_(N-l) -> H_(m)`
/// with maps `[i]^l, [d]^m, [i]^(N-l-m), [d]^l, [i]^m, [d]^(N-l-m)`; fails at the first
/// non-exact node.
pub fn hexagon_check(e: &NDiffModule, l: usize, m: usize) -> Result<Vec<NodeReport>> {
    let n = e.order();
    if l == 0 || m == 0 || l + m >= n {
        return Err(Error::OutOfRange(format!("hexagon (l, m) = ({l}, {m}) with N = {n}")));
    }
    let levels = [m, l + m, l, n - m, n - l - m, n - l];
    let maps = vec![
        inclusion_map(e, m, l)?,
        differential_map(e, l + m, m)?,
        inclusion_map(e, l, n - l - m)?,
        differential_map(e, n - m, l)?,
        inclusion_map(e, n - l - m, m)?,
        differential_map(e, n - l, n - l - m)?,
    ];
    let labels: Vec<String> = levels.iter().map(|k| format!("H_({k})")).collect();
    cyclic_exactness(&labels, &maps)
}

/// `phi_* : H_(n)(E) -> H_(n)(F)`, checked to be independent of representatives.
pub fn induced_map(e: &NDiffModule, f: &NDiffModule, phi: &Matrix, n: usize) -> Result<Matrix> {
    if !e.is_module_map(f, phi) {
        return Err(Error::NotAHomomorphism("map does not commute with the differentials".into()));
    }
    e.homology(n)?.induced_checked(&f.homology(n)?, phi)
}

/// Whether `phi_*` is bijective on every `H_(n)`, given that it is on `H_(1)` and `H_(N-1)`.
pub fn five_lemma_check(e: &NDiffModule, f: &NDiffModule, phi: &Matrix) -> Result<bool> {
    let n = e.order();
    for k in [1, n - 1] {
        if !is_iso(&induced_map(e, f, phi, k)?) {
            return Err(Error::PremiseNotMet(format!("phi_* is not bijective on H_({k})")));
        }
    }
    for k in 1..n {
        if !is_iso(&induced_map(e, f, phi, k)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Ordinary homology of `E ⊕ E` with `δ(x, y) = (d^(N-1) y, d x)`, compared per component
/// with `H_(1)` and `H_(N-1)`.
pub fn remark1_check(e: &NDiffModule) -> Result<bool> {
    let n = e.dim();
    let fld = e.ctx.field();
    let mut delta = Matrix::zeros(fld, 2 * n, 2 * n);
    delta.set_block(0, n, &e.d_pow(e.order() - 1));
    delta.set_block(n, 0, e.d());
    if !delta.mul(&delta).is_zero() {
        return Ok(false);
    }
    let kernel = delta.kernel();
    let image = delta.image();
    // δ is block anti-diagonal, so kernel and image split along the two summands.
    let component = |first: bool| -> (usize, usize) {
        let offset = if first { 0 } else { n };
        let proj = |s: &Subspace| Subspace::span(fld, n, s.basis().iter().map(|v| v[offset..offset + n].to_vec()).collect());
        (proj(&kernel).dim(), proj(&image).dim())
    };
    let (z0, b0) = component(true);
    let (z1, b1) = component(false);
    let total = kernel.dim() - image.dim();
    Ok(z0 - b0 == e.homology(1)?.dim() && z1 - b1 == e.homology(e.order() - 1)?.dim() && total == z0 - b0 + z1 - b1)
}

/// If one `H_(k)` vanishes then all do.
pub fn vanishing_propagation_check(e: &NDiffModule) -> Result<bool> {
    let dims = e.homology_dims()?;
    Ok(!dims.contains(&0) || dims.iter().all(|&x| x == 0))
}

/// Given `λ - μ = Σ_k d^(N-1-k) h_k d^k`, checks `λ_* = μ_*` on every `H_(n)`.
pub fn homotopy_check(e: &NDiffModule, f: &NDiffModule, lambda: &Matrix, mu: &Matrix, h: &[Matrix]) -> Result<bool> {
    let n = e.order();
    if h.len() != n {
        return Err(Error::DimensionMismatch(format!("expected {n} homotopy maps, got {}", h.len())));
    }
    let mut sum = Matrix::zeros(e.ctx.field(), f.dim(), e.dim());
    for (k, hk) in h.iter().enumerate() {
        sum = sum.add(&f.d_pow(n - 1 - k).mul(hk).mul(&e.d_pow(k)));
    }
    if lambda.sub(mu) != sum {
        return Err(Error::PremiseNotMet("λ - μ differs from Σ d^(N-1-k) h_k d^k".into()));
    }
    for k in 1..n {
        if induced_map(e, f, lambda, k)? != induced_map(e, f, mu, k)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Given `h d - q d h = Id` (with q taken from `ctx`), checks that every `H_(n)` vanishes and
/// that `Σ_k d^(N-1-k) h^(N-1) d^k = [N-1]_q! Id`.
pub fn contraction_check(e: &NDiffModule, h: &Matrix, ctx: &QContext) -> Result<bool> {
    let ctx = ctx.with_order(e.order())?;
    ctx.require_a1()?;
    let fld = ctx.field();
    let n = e.dim();
    let id = Matrix::identity(fld, n);
    if h.mul(e.d()).sub(&e.d().mul(h).scale(ctx.q())) != id {
        return Err(Error::PremiseNotMet("h d - q d h is not the identity".into()));
    }
    if e.homology_dims()?.iter().any(|&x| x != 0) {
        return Ok(false);
    }
    let order = e.order();
    let hp = h.pow(order - 1);
    let mut sum = Matrix::zeros(fld, n, n);
    for k in 0..order {
        sum = sum.add(&e.d_pow(order - 1 - k).mul(&hp).mul(&e.d_pow(k)));
    }
    Ok(sum == Matrix::scalar(fld, n, &ctx.q_factorial(order - 1)))
}

/// Jordan multiplicities `(m_1, ..., m_N)` of `d`.
pub fn multiplicities(e: &NDiffModule) -> Vec<usize> {
    let n = e.order();
    let ranks: Vec<i64> = (0..=n + 1).map(|k| if k == 0 { e.dim() as i64 } else { e.d_pow(k).rank() as i64 }).collect();
    let m: Vec<usize> = (1..=n)
        .map(|k| {
            let v = ranks[k - 1] - 2 * ranks[k] + ranks[k + 1];
            assert!(v >= 0, "negative multiplicity");
            v as usize
        })
        .collect();
    assert_eq!(m.iter().enumerate().map(|(i, x)| (i + 1) * x).sum::<usize>(), e.dim());
    m
}

/// `dim H_(k)` predicted from the multiplicities, for `1 <= k <= N/2`.
pub fn homology_dim_from_multiplicities(mult: &[usize], k: usize) -> usize {
    let n = mult.len();
    let m = |i: usize| mult[i - 1];
    let first: usize = (1..k).map(|r| r * (m(r) + m(n - r))).sum();
    let second: usize = (k..=n - k).map(m).sum();
    first + k * second
}

/// Checks the multiplicity formula against rank-count homology, together with
/// `dim H_(n) = dim H_(N-n)`.
pub fn proposition2_check(e: &NDiffModule) -> Result<bool> {
    let n = e.order();
    let dims = e.homology_dims()?;
    let h = |k: usize| dims[k - 1];
    let mult = multiplicities(e);
    let formula_ok = (1..=n / 2).all(|k| h(k) == homology_dim_from_multiplicities(&mult, k) && h(k) == h(n - k));
    let symmetric = (1..n).all(|k| h(k) == h(n - k));
    Ok(formula_ok && symmetric)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KapranovReport {
    pub total_dim: usize,
    pub i_nilpotent: bool,
    pub d_nilpotent: bool,
    pub sum_nilpotent: bool,
    /// For N = 3, whether `[i] + [d]` has kernel equal to image.
    pub acyclic: Option<bool>,
}

impl KapranovReport {
    pub fn holds(&self) -> bool {
        self.i_nilpotent && self.d_nilpotent && self.sum_nilpotent && self.acyclic != Some(false)
    }
}

/// Assembles `H_(•) = ⊕ H_(m)` with `[i]` and `[d]` and checks their nilpotency.
pub fn kapranov_check(e: &NDiffModule) -> Result<KapranovReport> {
    let n = e.order();
    let fld = e.ctx.field();
    let dims = e.homology_dims()?;
    let offsets: Vec<usize> = dims.iter().scan(0, |acc, &d| Some(std::mem::replace(acc, *acc + d))).collect();
    let total: usize = dims.iter().sum();
    let mut i_map = Matrix::zeros(fld, total, total);
    let mut d_map = Matrix::zeros(fld, total, total);
    for m in 1..n - 1 {
        i_map.set_block(offsets[m], offsets[m - 1], &inclusion_map(e, m, 1)?);
        d_map.set_block(offsets[m - 1], offsets[m], &differential_map(e, m + 1, 1)?);
    }
    let sum = i_map.add(&d_map);
    let s = sum.pow(n - 1);
    let acyclic = (n == 3).then(|| 2 * sum.rank() == total);
    Ok(KapranovReport {
        total_dim: total,
        i_nilpotent: i_map.pow(n - 1).is_zero(),
        d_nilpotent: d_map.pow(n - 1).is_zero(),
        sum_nilpotent: s.is_zero(),
        acyclic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z7() -> QContext {
        QContext::prime(7, 2, 3).unwrap()
    }

    #[test]
    fn rejects_non_nilpotent() {
        let ctx = z7();
        let d = Matrix::identity(ctx.field(), 2);
        assert!(matches!(NDiffModule::new(&ctx, d), Err(Error::NotNilpotent { order: 3, .. })));
        let d4 = shift_matrix(&ctx, 4);
        assert!(matches!(NDiffModule::new(&ctx, d4), Err(Error::NotNilpotent { .. })));
    }

    #[test]
    fn homology_of_shift_blocks() {
        let ctx = z7();
        assert_eq!(NDiffModule::zero(&ctx, 0).homology_dims().unwrap(), vec![0, 0]);
        assert_eq!(NDiffModule::shift(&ctx, 3).unwrap().homology_dims().unwrap(), vec![0, 0]);
        assert_eq!(NDiffModule::shift(&ctx, 2).unwrap().homology_dims().unwrap(), vec![1, 1]);
    }

    #[test]
    fn hexagon_on_two_block_has_one_dimensional_nodes() {
        let e = NDiffModule::shift(&z7(), 2).unwrap();
        let nodes = hexagon_check(&e, 1, 1).unwrap();
        assert_eq!(nodes.len(), 6);
        assert!(nodes.iter().all(|n| n.dim == 1));
        assert!(hexagon_check(&NDiffModule::zero(&z7(), 0), 1, 1).is_ok());
    }

    #[test]
    fn d_induces_the_bracket_map() {
        let e = NDiffModule::shift(&z7(), 2).unwrap();
        let id = Matrix::identity(e.ctx().field(), 2);
        assert!(induced_map(&e, &e, &id, 1).unwrap().is_identity());
        let zero = Matrix::zeros(e.ctx().field(), 2, 2);
        assert!(induced_map(&e, &e, &zero, 2).unwrap().is_zero());
        // d : H_(2) -> H_(1) agrees with [d]
        let via_d = e.homology(2).unwrap().induced(&e.homology(1).unwrap(), e.d()).unwrap();
        assert_eq!(via_d, differential_map(&e, 2, 1).unwrap());
    }

    #[test]
    fn lemma5_matrices_mod_seven() {
        let ctx = z7();
        let d = shift_matrix(&ctx, 3);
        let h = contraction_matrix(&ctx, 3);
        let f = ctx.field();
        assert_eq!(h.get(1, 0), &f.from_i64(3));
        assert_eq!(h.get(2, 1), &f.from_i64(1));
        assert!(h.mul(&d).sub(&d.mul(&h).scale(ctx.q())).is_identity());
        let mut sum = Matrix::zeros(f, 3, 3);
        for k in 0..3 {
            sum = sum.add(&d.pow(2 - k).mul(&h.pow(2)).mul(&d.pow(k)));
        }
        assert_eq!(sum, Matrix::scalar(f, 3, &f.from_i64(3)));
        let e = NDiffModule::new(&ctx, d).unwrap();
        assert!(contraction_check(&e, &h, &ctx).unwrap());
        let zero = NDiffModule::zero(&ctx, 0);
        assert!(contraction_check(&zero, &Matrix::zeros(f, 0, 0), &ctx).unwrap());
        let one = NDiffModule::zero(&ctx, 1);
        assert!(matches!(contraction_check(&one, &Matrix::zeros(f, 1, 1), &ctx), Err(Error::PremiseNotMet(_))));
    }

    #[test]
    fn multiplicity_examples() {
        let ctx = z7();
        assert_eq!(multiplicities(&NDiffModule::zero(&ctx, 5)), vec![5, 0, 0]);
        assert_eq!(multiplicities(&NDiffModule::shift(&ctx, 3).unwrap()), vec![0, 0, 1]);
        let e = NDiffModule::shift(&ctx, 2).unwrap().direct_sum(&NDiffModule::zero(&ctx, 1));
        assert_eq!(multiplicities(&e), vec![1, 1, 0]);
        assert!(proposition2_check(&e).unwrap());
        let ctx4 = QContext::prime(5, 2, 4).unwrap();
        let full = NDiffModule::shift(&ctx4, 4).unwrap();
        assert_eq!(homology_dim_from_multiplicities(&multiplicities(&full), 1), 0);
        assert_eq!(homology_dim_from_multiplicities(&multiplicities(&full), 2), 0);
        assert!(proposition2_check(&full).unwrap());
    }

    #[test]
    fn remark1_and_kapranov_on_two_block() {
        let e = NDiffModule::shift(&z7(), 2).unwrap();
        assert!(remark1_check(&e).unwrap());
        let k = kapranov_check(&e).unwrap();
        assert_eq!(k.total_dim, 2);
        assert!(k.holds());
        assert_eq!(k.acyclic, Some(true));
    }

    #[test]
    fn vanishing_examples() {
        let ctx = z7();
        assert!(vanishing_propagation_check(&NDiffModule::shift(&ctx, 3).unwrap()).unwrap());
        assert!(vanishing_propagation_check(&NDiffModule::zero(&ctx, 1)).unwrap());
    }

    #[test]
    fn homotopy_with_contractible_module() {
        let ctx = z7();
        let f = ctx.field();
        let e = NDiffModule::shift(&ctx, 3).unwrap();
        let h = contraction_matrix(&ctx, 3);
        // Id = Σ d^(2-k) h_k d^k with h_k = c h^2 for the scalar c = 1/[2]_q!
        let c = f.inv(&ctx.q_factorial(2)).unwrap();
        let hk = h.pow(2).scale(&c);
        let hs = vec![hk.clone(), hk.clone(), hk];
        let id = Matrix::identity(f, 3);
        assert!(homotopy_check(&e, &e, &id, &Matrix::zeros(f, 3, 3), &hs).unwrap());
    }
}
