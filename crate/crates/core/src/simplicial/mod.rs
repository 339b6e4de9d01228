//! Cosimplicial and simplicial modules, the N-differentials `d_m`, `δ_m` built from
//! q-weighted coface sums, and the comparison with ordinary cohomology.

mod builders;
mod theorems;

pub(crate) use builders::digits;

pub use builders::{
    build_hochschild, build_simplicial_forms, build_simplicial_set_module, build_tensor_cosimplicial, max_dim,
    size_guard, Bimodule, SimplicialComplexK,
};
pub use theorems::{
    lemma10_witness, lemma9_contraction, psi_bar_maps, theorem1_diagram, theorem234_check, theorem234_check_acyclic, theorem3_dictionary, theorem4_dictionary,
    theorem4_simplicial_check, Dictionary,
    PsiBarReport, Theorem1Report, Theorem234Report, Theorem4Report,
};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::ncomplex::NComplex;
use crate::rings::QContext;

/// A pre-cosimplicial module `E^0, ..., E^D` with cofaces `f_i : E^n -> E^(n+1)` and,
/// optionally, codegeneracies `s_i : E^(n+1) -> E^n`.
#[derive(Clone, Debug)]
pub struct CosimplicialModule {
    ctx: QContext,
    dims: Vec<usize>,
    cofaces: Vec<Vec<Matrix>>,
    codegeneracies: Option<Vec<Vec<Matrix>>>,
}

fn violation(relation: String, degree: usize) -> Error {
    Error::RelationViolation { relation, degree: degree as i64 }
}

impl CosimplicialModule {
    /// `cofaces[n][i]` for `n < D`, `i <= n+1`; `codegeneracies[n][i]` for `n < D`, `i <= n`.
    /// All relations are verified.
    pub fn new(
        ctx: &QContext,
        dims: Vec<usize>,
        cofaces: Vec<Vec<Matrix>>,
        codegeneracies: Option<Vec<Vec<Matrix>>>,
    ) -> Result<CosimplicialModule> {
        if dims.is_empty() {
            return Err(Error::DimensionMismatch("a cosimplicial module needs degree 0".into()));
        }
        let top = dims.len() - 1;
        if cofaces.len() != top {
            return Err(Error::DimensionMismatch(format!("expected cofaces for {top} degrees, got {}", cofaces.len())));
        }
        for (n, fs) in cofaces.iter().enumerate() {
            if fs.len() != n + 2 {
                return Err(Error::DimensionMismatch(format!("degree {n} needs {} cofaces, got {}", n + 2, fs.len())));
            }
            for f in fs {
                if f.shape() != (dims[n + 1], dims[n]) {
                    return Err(Error::DimensionMismatch(format!("coface on degree {n} has shape {:?}", f.shape())));
                }
            }
        }
        if let Some(ss) = &codegeneracies {
            if ss.len() != top {
                return Err(Error::DimensionMismatch(format!("expected codegeneracies for {top} degrees, got {}", ss.len())));
            }
            for (n, s) in ss.iter().enumerate() {
                if s.len() != n + 1 || s.iter().any(|m| m.shape() != (dims[n], dims[n + 1])) {
                    return Err(Error::DimensionMismatch(format!("codegeneracies into degree {n} are malformed")));
                }
            }
        }
        let e = CosimplicialModule { ctx: ctx.clone(), dims, cofaces, codegeneracies };
        e.check_relations()?;
        Ok(e)
    }

    fn check_relations(&self) -> Result<()> {
        let top = self.max_degree();
        let f = |n: usize, i: usize| &self.cofaces[n][i];
        for n in 0..top.saturating_sub(1) {
            for j in 1..=n + 2 {
                for i in 0..j {
                    if f(n + 1, j).mul(f(n, i)) != f(n + 1, i).mul(f(n, j - 1)) {
                        return Err(violation(format!("f_{j} f_{i} = f_{i} f_{}", j - 1), n));
                    }
                }
            }
        }
        let Some(ss) = &self.codegeneracies else { return Ok(()) };
        let s = |n: usize, i: usize| &ss[n][i];
        for n in 0..top.saturating_sub(1) {
            for j in 0..=n {
                for i in 0..=j {
                    if s(n, j).mul(s(n + 1, i)) != s(n, i).mul(s(n + 1, j + 1)) {
                        return Err(violation(format!("s_{j} s_{i} = s_{i} s_{}", j + 1), n + 2));
                    }
                }
            }
        }
        for n in 0..top {
            let id = Matrix::identity(self.ctx.field(), self.dims[n]);
            for j in 0..=n {
                for i in 0..=n + 1 {
                    let left = s(n, j).mul(f(n, i));
                    let right = if i == j || i == j + 1 {
                        id.clone()
                    } else if i < j {
                        f(n - 1, i).mul(s(n - 1, j - 1))
                    } else {
                        f(n - 1, i - 1).mul(s(n - 1, j))
                    };
                    if left != right {
                        return Err(violation(format!("s_{j} f_{i}"), n));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn ctx(&self) -> &QContext {
        &self.ctx
    }
    pub fn order(&self) -> usize {
        self.ctx.order()
    }
    /// Top degree `D` of the window.
    pub fn max_degree(&self) -> usize {
        self.dims.len() - 1
    }
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }
    pub fn dim(&self, n: usize) -> usize {
        self.dims.get(n).copied().unwrap_or(0)
    }
    pub fn has_codegeneracies(&self) -> bool {
        self.codegeneracies.is_some()
    }

    /// `f_i : E^n -> E^(n+1)`.
    pub fn coface(&self, n: usize, i: usize) -> &Matrix {
        &self.cofaces[n][i]
    }

    /// `s_i : E^(n+1) -> E^n`.
    pub fn codegeneracy(&self, n: usize, i: usize) -> Option<&Matrix> {
        self.codegeneracies.as_ref().map(|s| &s[n][i])
    }

    /// The same cofaces with the codegeneracies forgotten.
    pub fn without_codegeneracies(&self) -> CosimplicialModule {
        CosimplicialModule { codegeneracies: None, ..self.clone() }
    }

    /// Same data over another `q` or `N` on the same field.
    pub fn with_ctx(&self, ctx: &QContext) -> Result<CosimplicialModule> {
        if ctx.field() != self.ctx.field() {
            return Err(Error::InvalidField("context field differs from the module's".into()));
        }
        Ok(CosimplicialModule { ctx: ctx.clone(), ..self.clone() })
    }

    /// The dual simplicial module, by transposition.
    pub fn dual(&self) -> SimplicialModule {
        SimplicialModule {
            ctx: self.ctx.clone(),
            dims: self.dims.clone(),
            faces: self.cofaces.iter().map(|fs| fs.iter().map(Matrix::transpose).collect()).collect(),
            degeneracies: self.codegeneracies.as_ref().map(|ss| ss.iter().map(|s| s.iter().map(Matrix::transpose).collect()).collect()),
        }
    }

    fn weighted(&self, n: usize, terms: impl IntoIterator<Item = (usize, crate::rings::Elem)>) -> Matrix {
        let fld = self.ctx.field();
        let mut acc = Matrix::zeros(fld, self.dim(n + 1), self.dim(n));
        for (i, c) in terms {
            if !fld.is_zero(&c) {
                acc = acc.add(&self.cofaces[n][i].scale(&c));
            }
        }
        acc
    }

    /// `d = Σ (-1)^i f_i : E^n -> E^(n+1)`.
    pub fn alternating(&self, n: usize) -> Matrix {
        let fld = self.ctx.field();
        self.weighted(n, (0..=n + 1).map(|i| (i, fld.from_i64(if i % 2 == 0 { 1 } else { -1 }))))
    }

    /// `(E, d)` as an ordinary complex, open above degree `D`.
    pub fn standard_differential(&self) -> Result<NComplex> {
        let ordinary = QContext::ordinary(self.ctx.field());
        let maps = (0..self.max_degree()).map(|n| self.alternating(n)).collect();
        Ok(NComplex::new(&ordinary, 0, self.dims.clone(), maps)?.with_open_ends(false, true))
    }

    /// `δ_m = Σ_{i <= n-m+1} q^i f_i` on `E^n`, zero for `n < m-1`.
    pub fn delta(&self, m: usize, n: usize) -> Matrix {
        if n + 1 < m {
            return Matrix::zeros(self.ctx.field(), self.dim(n + 1), self.dim(n));
        }
        self.weighted(n, (0..=n + 1 - m).map(|i| (i, self.ctx.q_pow_nat(i))))
    }

    /// `d_m = δ_(m+1) + q^(n-m+1) Σ_{r=0}^{m} (-1)^r f_(n-m+r+1)` on `E^n` for `n >= m-1`,
    /// `d` below, and `d_0 = δ_0`.
    pub fn d_m(&self, m: usize, n: usize) -> Matrix {
        if m == 0 {
            return self.delta(0, n);
        }
        if n + 1 < m {
            return self.alternating(n);
        }
        let fld = self.ctx.field();
        let c = self.ctx.q_pow_nat(n + 1 - m);
        let tail = (0..=m).map(|r| (n + r + 1 - m, if r % 2 == 0 { c.clone() } else { fld.neg(&c) }));
        self.delta(m + 1, n).add(&self.weighted(n, tail))
    }

    /// `d_(p,m) = δ_(p+1) + [m]_q q^(n-p+1) Σ_{r=0}^{p} (-1)^r f_(n-p+r+1)` on `E^n`, `n >= p-1`.
    pub fn d_pm(&self, p: usize, m: usize, n: usize) -> Matrix {
        if n + 1 < p {
            return self.alternating(n);
        }
        let fld = self.ctx.field();
        let c = fld.mul(&self.ctx.q_number(m), &self.ctx.q_pow_nat(n + 1 - p));
        let tail = (0..=p).map(|r| (n + r + 1 - p, if r % 2 == 0 { c.clone() } else { fld.neg(&c) }));
        self.delta(p + 1, n).add(&self.weighted(n, tail))
    }

    /// `g(n+k-1) ... g(n) : E^n -> E^(n+k)`, or `None` past the window.
    pub fn power(&self, g: impl Fn(usize) -> Matrix, n: usize, k: usize) -> Option<Matrix> {
        if n + k > self.max_degree() {
            return None;
        }
        let mut acc = Matrix::identity(self.ctx.field(), self.dim(n));
        for j in n..n + k {
            acc = g(j).mul(&acc);
        }
        Some(acc)
    }

    /// A degree-one family restricted to degrees `lo..=D`, open above.
    pub fn complex_of(&self, lo: usize, g: impl Fn(usize) -> Matrix) -> Result<NComplex> {
        let top = self.max_degree();
        let lo = lo.min(top);
        let maps = (lo..top).map(&g).collect();
        Ok(NComplex::new(&self.ctx, lo as i64, self.dims[lo..].to_vec(), maps)?.with_open_ends(false, true))
    }

    /// `(E_p, d_p)` with `E_p = ⊕_{n >= p-1} E^n`.
    pub fn truncate(&self, p: usize) -> Result<NComplex> {
        self.complex_of(p.saturating_sub(1), |n| self.d_m(p, n))
    }

    /// `(E_p, d)`, the ordinary complex truncated the same way.
    pub fn truncate_ordinary(&self, p: usize) -> Result<NComplex> {
        let ordinary = QContext::ordinary(self.ctx.field());
        let lo = p.saturating_sub(1).min(self.max_degree());
        let maps = (lo..self.max_degree()).map(|n| self.alternating(n)).collect();
        Ok(NComplex::new(&ordinary, lo as i64, self.dims[lo..].to_vec(), maps)?.with_open_ends(false, true))
    }

    /// Identities relating `d_m^(p+1)`, `δ_m^(p+1)` and `δ_(m+1)`, for every `n >= m`
    /// and every `p` that fits in the window, and `d_(m+1) d_m = δ_(m+1)^2` everywhere.
    pub fn lemma8_check(&self, m: usize) -> Result<()> {
        let fld = self.ctx.field();
        let top = self.max_degree();
        for n in m..top {
            let c = self.ctx.q_pow_nat(n + 1 - m);
            let alt = self.weighted(n, (0..=m).map(|r| (n + r + 1 - m, if r % 2 == 0 { fld.one() } else { fld.from_i64(-1) })));
            let f_single = self.coface(n, n + 1 - m);
            for p in 0..top - n {
                let scale = fld.mul(&self.ctx.q_number(p + 1), &c);
                let head = |x: &Matrix| self.power(|j| self.delta(m + 1, j), n + 1, p).unwrap().mul(x);
                let lhs = self.power(|j| self.d_m(m, j), n, p + 1).unwrap();
                let rhs = head(&self.delta(m + 1, n).add(&alt.scale(&scale)));
                if lhs != rhs {
                    return Err(violation(format!("d_{m}^{} expansion", p + 1), n));
                }
                let lhs = self.power(|j| self.delta(m, j), n, p + 1).unwrap();
                let rhs = head(&self.delta(m + 1, n).add(&f_single.scale(&scale)));
                if lhs != rhs {
                    return Err(violation(format!("δ_{m}^{} expansion", p + 1), n));
                }
            }
        }
        for n in 0..top.saturating_sub(1) {
            if self.d_m(m + 1, n + 1).mul(&self.d_m(m, n)) != self.delta(m + 1, n + 1).mul(&self.delta(m + 1, n)) {
                return Err(violation(format!("d_{} d_{m} = δ_{}^2", m + 1, m + 1), n));
            }
        }
        Ok(())
    }

    /// `d_m^(N-1) = δ_(m+1)^(N-2) d_(m+1)` and `d_(m-1) δ_m^(N-2) = δ_(m+1)^(N-2) d_(m+1)` on
    /// `E^n`, `n >= m`, followed by `d_m^N = 0` and `δ_m^N = 0` on the whole window.
    pub fn corollary34_check(&self) -> Result<()> {
        self.ctx.require_a0()?;
        let big_n = self.order();
        let top = self.max_degree();
        for m in 0..=top {
            for n in m..=top {
                let Some(lhs) = self.power(|j| self.d_m(m, j), n, big_n - 1) else { break };
                let rhs = self.power(|j| self.delta(m + 1, j), n + 1, big_n - 2).unwrap().mul(&self.d_m(m + 1, n));
                if lhs != rhs {
                    return Err(violation(format!("d_{m}^(N-1) = δ_{}^(N-2) d_{}", m + 1, m + 1), n));
                }
                if m >= 1 {
                    let left = self.d_m(m - 1, n + big_n - 2).mul(&self.power(|j| self.delta(m, j), n, big_n - 2).unwrap());
                    if left != rhs {
                        return Err(violation(format!("d_{} δ_{m}^(N-2) = δ_{}^(N-2) d_{}", m - 1, m + 1, m + 1), n));
                    }
                }
            }
            for n in 0..=top {
                let Some(dn) = self.power(|j| self.d_m(m, j), n, big_n) else { break };
                if !dn.is_zero() {
                    return Err(violation(format!("d_{m}^N = 0"), n));
                }
                if !self.power(|j| self.delta(m, j), n, big_n).unwrap().is_zero() {
                    return Err(violation(format!("δ_{m}^N = 0"), n));
                }
            }
        }
        Ok(())
    }

    /// `δ_m^p = [p]_q! Σ_{n-m+p >= i_1 > ... > i_p >= 0} q^(Σ i - p(p-1)/2) f_(i_1) ... f_(i_p)`
    /// on `E^n` for `n >= m-1`.
    pub fn delta_power_expansion_check(&self, m: usize, p: usize) -> Result<()> {
        let fld = self.ctx.field();
        let top = self.max_degree();
        for n in m.saturating_sub(1)..=top {
            let Some(lhs) = self.power(|j| self.delta(m, j), n, p) else { break };
            let mut rhs = Matrix::zeros(fld, self.dim(n + p), self.dim(n));
            let hi = (n + p) as i64 - m as i64;
            if hi >= 0 {
                // Indices listed from the first coface applied (i_p) to the last (i_1).
                let mut stack: Vec<Vec<usize>> = vec![vec![]];
                while let Some(seq) = stack.pop() {
                    if seq.len() == p {
                        let sum: usize = seq.iter().sum();
                        let mut mat = Matrix::identity(fld, self.dim(n));
                        for (k, &i) in seq.iter().enumerate() {
                            mat = self.coface(n + k, i).mul(&mat);
                        }
                        let coeff = fld.mul(&self.ctx.q_factorial(p), &self.ctx.q_pow(sum as i64 - (p * (p - 1) / 2) as i64)?);
                        rhs = rhs.add(&mat.scale(&coeff));
                        continue;
                    }
                    let start = seq.last().map_or(0, |&x| x + 1);
                    let limit = (hi - (p - seq.len()) as i64 + 1).max(-1);
                    for i in start as i64..=limit {
                        let mut next = seq.clone();
                        next.push(i as usize);
                        stack.push(next);
                    }
                }
            }
            if lhs != rhs {
                return Err(violation(format!("δ_{m}^{p} coface expansion"), n));
            }
        }
        Ok(())
    }

    /// `d_(p,1) = d_p` on `n >= p-1`, `d_(p,N-1) = d_(p+1)` on `n >= p`, and
    /// `d_(p,m)^N = 0` on `E_p`.
    pub fn remark3_check(&self, p: usize) -> Result<()> {
        self.ctx.require_a0()?;
        let big_n = self.order();
        let top = self.max_degree();
        for n in p.saturating_sub(1)..top {
            if self.d_pm(p, 1, n) != self.d_m(p, n) {
                return Err(violation(format!("d_({p},1) = d_{p}"), n));
            }
            if n >= p && self.d_pm(p, big_n - 1, n) != self.d_m(p + 1, n) {
                return Err(violation(format!("d_({p},N-1) = d_{}", p + 1), n));
            }
            for m in 1..big_n {
                if let Some(pw) = self.power(|j| self.d_pm(p, m, j), n, big_n) {
                    if !pw.is_zero() {
                        return Err(violation(format!("d_({p},{m})^N = 0"), n));
                    }
                }
            }
        }
        Ok(())
    }
}

/// A simplicial module `E'_0, ..., E'_D` with faces `f'_i : E'_(n+1) -> E'_n` and optional
/// degeneracies `s'_i : E'_n -> E'_(n+1)`.
#[derive(Clone, Debug)]
pub struct SimplicialModule {
    ctx: QContext,
    dims: Vec<usize>,
    faces: Vec<Vec<Matrix>>,
    degeneracies: Option<Vec<Vec<Matrix>>>,
}

impl SimplicialModule {
    /// `faces[n][i] : E'_(n+1) -> E'_n` for `i <= n+1`; `degeneracies[n][i] : E'_n -> E'_(n+1)`
    /// for `i <= n`. Relations are checked on the transposed data.
    pub fn new(ctx: &QContext, dims: Vec<usize>, faces: Vec<Vec<Matrix>>, degeneracies: Option<Vec<Vec<Matrix>>>) -> Result<SimplicialModule> {
        let s = SimplicialModule { ctx: ctx.clone(), dims, faces, degeneracies };
        s.dual_checked()?;
        Ok(s)
    }

    fn dual_checked(&self) -> Result<CosimplicialModule> {
        CosimplicialModule::new(
            &self.ctx,
            self.dims.clone(),
            self.faces.iter().map(|fs| fs.iter().map(Matrix::transpose).collect()).collect(),
            self.degeneracies.as_ref().map(|ss| ss.iter().map(|s| s.iter().map(Matrix::transpose).collect()).collect()),
        )
    }

    /// The dual cosimplicial module.
    pub fn dual(&self) -> CosimplicialModule {
        self.dual_checked().expect("relations were checked at construction")
    }

    pub fn ctx(&self) -> &QContext {
        &self.ctx
    }
    pub fn max_degree(&self) -> usize {
        self.dims.len() - 1
    }
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }
    pub fn face(&self, n: usize, i: usize) -> &Matrix {
        &self.faces[n][i]
    }
    pub fn degeneracy(&self, n: usize, i: usize) -> Option<&Matrix> {
        self.degeneracies.as_ref().map(|s| &s[n][i])
    }
    pub fn has_degeneracies(&self) -> bool {
        self.degeneracies.is_some()
    }

    pub fn with_ctx(&self, ctx: &QContext) -> Result<SimplicialModule> {
        if ctx.field() != self.ctx.field() {
            return Err(Error::InvalidField("context field differs from the module's".into()));
        }
        Ok(SimplicialModule { ctx: ctx.clone(), ..self.clone() })
    }

    /// The chain complex of a degree `-1` family, with `E'_n` placed in degree `-n`.
    /// The top of the window becomes an open lower end.
    fn chain_complex(&self, ctx: &QContext, g: impl Fn(usize) -> Matrix) -> Result<NComplex> {
        let top = self.max_degree();
        let dims: Vec<usize> = self.dims.iter().rev().copied().collect();
        // Degree -(n+1) -> -n is the map E'_(n+1) -> E'_n.
        let maps = (0..top).rev().map(g).collect();
        Ok(NComplex::new(ctx, -(top as i64), dims, maps)?.with_open_ends(true, false))
    }

    /// `d' = Σ (-1)^i f'_i` as an ordinary complex in negated degrees.
    pub fn ordinary_chains(&self) -> Result<NComplex> {
        let dual = self.dual();
        self.chain_complex(&QContext::ordinary(self.ctx.field()), |n| dual.alternating(n).transpose())
    }

    /// `d'_p`, the transpose of `d_p` on the dual, in negated degrees.
    pub fn chains_d(&self, p: usize) -> Result<NComplex> {
        let dual = self.dual();
        self.chain_complex(&self.ctx, |n| dual.d_m(p, n).transpose())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn constant(ctx: &QContext, top: usize) -> CosimplicialModule {
        let one = |_| Matrix::identity(ctx.field(), 1);
        CosimplicialModule::new(
            ctx,
            vec![1; top + 1],
            (0..top).map(|n| (0..n + 2).map(one).collect()).collect(),
            Some((0..top).map(|n| (0..n + 1).map(one).collect()).collect()),
        )
        .unwrap()
    }

    #[test]
    fn constant_module_alternates() {
        let ctx = QContext::prime(7, 2, 3).unwrap();
        let e = constant(&ctx, 5);
        for n in 0..5 {
            let expect = if n % 2 == 0 { 0 } else { 1 };
            assert_eq!(e.alternating(n), Matrix::from_i64(ctx.field(), 1, 1, &[expect]));
        }
        let c = e.standard_differential().unwrap();
        assert_eq!(c.homology_graded(1, 0).unwrap().dim(), 1);
        for n in 1..5 {
            assert_eq!(c.homology_graded(1, n).unwrap().dim(), 0);
        }
    }

    #[test]
    fn delta_zero_counts_cofaces_when_q_is_one() {
        let ctx = QContext::prime(3, 1, 3).unwrap();
        let e = constant(&ctx, 5);
        for n in 0..5 {
            assert_eq!(e.delta(0, n), Matrix::from_i64(ctx.field(), 1, 1, &[(n as i64 + 2) % 3]));
            assert_eq!(e.d_m(0, n), e.delta(0, n));
        }
    }

    #[test]
    fn low_degree_conventions() {
        let ctx = QContext::prime(7, 2, 3).unwrap();
        let e = constant(&ctx, 6);
        for m in 1..5 {
            for n in 0..m {
                assert_eq!(e.d_m(m, n), e.alternating(n), "d_{m} on E^{n}");
            }
        }
        assert_eq!(e.d_m(4, 3), e.alternating(3));
    }

    #[test]
    fn identities_on_constant_module() {
        for (p, q, n) in [(7, 2, 3), (5, 2, 4), (3, 1, 3)] {
            let ctx = QContext::prime(p, q, n).unwrap();
            let e = constant(&ctx, 7);
            for m in 0..4 {
                e.lemma8_check(m).unwrap();
                for k in 1..=n as usize {
                    e.delta_power_expansion_check(m, k).unwrap();
                }
            }
            e.corollary34_check().unwrap();
            for pp in 0..4 {
                e.remark3_check(pp).unwrap();
            }
        }
    }

    #[test]
    fn rejects_broken_cofaces() {
        let ctx = QContext::prime(7, 2, 3).unwrap();
        let fld = ctx.field();
        let one = Matrix::identity(fld, 1);
        let two = Matrix::from_i64(fld, 1, 1, &[2]);
        let err = CosimplicialModule::new(
            &ctx,
            vec![1, 1, 1],
            vec![vec![one.clone(), one.clone()], vec![one.clone(), two, one.clone()]],
            None,
        )
        .unwrap_err();
        assert!(matches!(err, Error::RelationViolation { .. }));
    }
}
