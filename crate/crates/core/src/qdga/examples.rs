use std::sync::Arc;

use super::{
    ad_q, in_span, nilpotency_check, q_leibniz_check, CosimplicialAlgebra, FiniteAlgebra, GradedAlgebra, GradedMap, Grading,
};
use crate::error::{Error, Result};
use crate::linalg::{vec_sub, Matrix, Subspace, Vector};
use crate::ncomplex::{HomologyTable, NComplex};
use crate::rings::{Elem, Field, QContext};
use crate::simplicial::{build_hochschild, build_tensor_cosimplicial, Bimodule};

/// `M_N(k)` graded by `deg E^k_l = k - l mod N`, with `d = ad_q(e)`.
///
/// Degree `g` has basis `E^((l+g) mod N)_l` indexed by `l`.
#[derive(Clone, Debug)]
pub struct MatrixExample {
    pub algebra: GradedAlgebra,
    pub e: Vector,
    pub d: GradedMap,
}

pub fn matrix_example(ctx: &QContext, lambdas: &[Elem]) -> Result<MatrixExample> {
    ctx.require_a1()?;
    let n = ctx.order();
    if lambdas.len() != n {
        return Err(Error::DimensionMismatch(format!("need {n} scalars λ, got {}", lambdas.len())));
    }
    let f = ctx.field().clone();
    let one = f.one();
    // E^k_l E^r_s = δ^k_s E^r_l
    let table = move |g: usize, l: usize, _h: usize, s: usize| -> Vec<(usize, Elem)> {
        if (l + g) % n == s {
            vec![(l, one.clone())]
        } else {
            vec![]
        }
    };
    let algebra = GradedAlgebra::new(ctx, Grading::Cyclic, vec![n; n], vec![f.one(); n], Arc::new(table))?;
    let e = lambdas.to_vec();
    let (deg, en) = algebra.power(1, &e, n).unwrap();
    let prod = lambdas.iter().fold(f.one(), |acc, l| f.mul(&acc, l));
    if deg != 0 || en != vec![prod; n] {
        return Err(Error::RelationViolation { relation: "e^N = λ_1...λ_N 1".into(), degree: 0 });
    }
    let d = ad_q(&algebra, &e, 1)?;
    q_leibniz_check(&algebra, &d)?;
    nilpotency_check(&algebra, &d)?;
    Ok(MatrixExample { algebra, e, d })
}

/// The ℕ-graded algebra with a copy of `A^(n mod N)` in degree `n`, and the lifted
/// differential. The projection to `A` is the identity on each component.
#[derive(Clone, Debug)]
pub struct PStarLift {
    pub algebra: GradedAlgebra,
    pub d: GradedMap,
    pub period: usize,
}

impl PStarLift {
    /// Degree of `π(n, α) = α` in the cyclic grading.
    pub fn project(&self, n: usize) -> usize {
        n % self.period
    }

    pub fn complex(&self) -> Result<NComplex> {
        let dims = self.algebra.dims().to_vec();
        Ok(NComplex::new(self.algebra.ctx(), 0, dims, self.d.maps.clone())?.with_open_ends(false, true))
    }
}

pub fn pstar_lift(alg: &GradedAlgebra, d: &GradedMap, top: usize) -> Result<PStarLift> {
    if alg.grading() != Grading::Cyclic {
        return Err(Error::PremiseNotMet("the lift starts from a cyclically graded algebra".into()));
    }
    let period = alg.dims().len();
    let inner = alg.table.clone();
    let table = move |a: usize, i: usize, b: usize, j: usize| inner(a % period, i, b % period, j);
    let dims = (0..=top).map(|k| alg.dim(k % period)).collect();
    let algebra = GradedAlgebra::new(alg.ctx(), Grading::Natural, dims, alg.unit().clone(), Arc::new(table))?;
    let d = GradedMap { shift: d.shift, maps: (0..top).map(|k| d.maps[k % period].clone()).collect() };
    q_leibniz_check(&algebra, &d)?;
    nilpotency_check(&algebra, &d)?;
    Ok(PStarLift { algebra, d, period })
}

fn tensor(f: &Field, x: &[Elem], y: &[Elem]) -> Vector {
    x.iter().flat_map(|a| y.iter().map(move |b| f.mul(a, b))).collect()
}

/// `𝔗(A)` with `𝔗^n = A^(⊗(n+1))` and the q-differential `d_1`.
#[derive(Clone, Debug)]
pub struct TensorAlgebra {
    base: FiniteAlgebra,
    cos: CosimplicialAlgebra,
    d1: GradedMap,
}

pub fn tensor_algebra(a: &FiniteAlgebra, ctx: &QContext, top: usize) -> Result<TensorAlgebra> {
    let cos = build_tensor_cosimplicial(a, ctx, top)?;
    let d1 = cos.d1();
    q_leibniz_check(cos.algebra(), &d1)?;
    if ctx.assumptions().a0 {
        nilpotency_check(cos.algebra(), &d1)?;
    }
    let t = TensorAlgebra { base: a.clone(), cos, d1 };
    t.closed_forms_check()?;
    Ok(t)
}

impl TensorAlgebra {
    pub fn base(&self) -> &FiniteAlgebra {
        &self.base
    }
    pub fn cosimplicial(&self) -> &CosimplicialAlgebra {
        &self.cos
    }
    pub fn algebra(&self) -> &GradedAlgebra {
        self.cos.algebra()
    }
    pub fn d1(&self) -> &GradedMap {
        &self.d1
    }
    pub fn top(&self) -> usize {
        self.cos.top()
    }
    fn field(&self) -> &Field {
        self.base.field()
    }

    /// `1^(⊗n)`, an element of degree `n - 1`.
    pub fn ones(&self, n: usize) -> Vector {
        let f = self.field();
        (1..n).fold(self.base.unit().clone(), |acc, _| tensor(f, &acc, self.base.unit()))
    }

    /// `(𝔗, d_1)` as an N-complex starting in degree 0.
    pub fn complex(&self) -> Result<NComplex> {
        let alg = self.algebra();
        Ok(NComplex::new(alg.ctx(), 0, alg.dims().to_vec(), self.d1.maps.clone())?.with_open_ends(false, true))
    }

    /// `d_1(x) = 1⊗x - x⊗1`, `d_1(1⊗1) = 1⊗1⊗1`, `d_1^n(1⊗1) = [n]_q! 1^(⊗(n+2))` and
    /// `d_1^n(x) = [n]_q! 1^(⊗n) d_1(x)` inside the window.
    pub fn closed_forms_check(&self) -> Result<()> {
        let f = self.field().clone();
        let ctx = self.algebra().ctx().clone();
        let alg = self.algebra();
        let top = self.top();
        if top == 0 {
            return Ok(());
        }
        let unit = self.base.unit();
        let fail = |what: String, degree: usize| Err(Error::RelationViolation { relation: what, degree: degree as i64 });
        for i in 0..self.base.dim() {
            let x = crate::linalg::unit_vector(&f, self.base.dim(), i);
            let dx = self.d1.apply(0, &x).unwrap();
            if dx != vec_sub(&f, &tensor(&f, unit, &x), &tensor(&f, &x, unit)) {
                return fail(format!("d_1(e_{i}) = 1⊗e_{i} - e_{i}⊗1"), 0);
            }
            let mut acc = x.clone();
            for n in 1..=top {
                acc = self.d1.apply(n - 1, &acc).unwrap();
                let expected = alg.mul(n - 1, &self.ones(n), 1, &dx).unwrap();
                if acc != crate::linalg::vec_scale(&f, &ctx.q_factorial(n), &expected) {
                    return fail(format!("d_1^{n}(e_{i}) = [{n}]! 1^(⊗{n}) d(e_{i})"), n);
                }
            }
        }
        let mut acc = self.ones(2);
        for n in 1..top {
            acc = self.d1.apply(n, &acc).unwrap();
            if acc != crate::linalg::vec_scale(&f, &ctx.q_factorial(n), &self.ones(n + 2)) {
                return fail(format!("d_1^{n}(1⊗1) = [{n}]! 1^(⊗{})", n + 2), n + 1);
            }
        }
        Ok(())
    }
}

/// `𝔗_(φ,α)(x_0⊗...⊗x_n) = φ(x_0) α φ(x_1) ... α φ(x_n)` as one matrix per degree.
/// Checks that `φ` is a unital homomorphism into degree 0, that `𝔗` is generated by
/// `A` and `τ = 1⊗1` (so the extension is unique) and that the result is multiplicative.
pub fn universal_extension(t: &TensorAlgebra, target: &GradedAlgebra, phi: &Matrix, alpha: &[Elem]) -> Result<Vec<Matrix>> {
    let a = t.base();
    let f = a.field();
    if phi.shape() != (target.dim(0), a.dim()) || alpha.len() != target.dim(1) {
        return Err(Error::DimensionMismatch("φ must map A to degree 0 and α must lie in degree 1".into()));
    }
    if &phi.apply(a.unit()) != target.unit() {
        return Err(Error::NotAHomomorphism("φ(1) ≠ 1".into()));
    }
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let lhs = phi.apply(a.product_basis(i, j));
            let rhs = target.mul(0, &phi.column(i), 0, &phi.column(j)).unwrap();
            if lhs != rhs {
                return Err(Error::NotAHomomorphism(format!("φ(e_{i} e_{j}) ≠ φ(e_{i}) φ(e_{j})")));
            }
        }
    }
    let talg = t.algebra();
    let top = t.top().min(target.top());
    let da = a.dim();
    let tau = t.ones(2);
    let mut maps = Vec::new();
    for n in 0..=top {
        let mut cols = Vec::new();
        for idx in 0..talg.dim(n) {
            let x = crate::simplicial::digits(idx, da, n + 1);
            let mut img = phi.column(x[0]);
            let mut gen = crate::linalg::unit_vector(f, da, x[0]);
            for (k, &xi) in x.iter().enumerate().skip(1) {
                img = target.mul(k - 1, &img, 1, alpha).unwrap();
                img = target.mul(k, &img, 0, &phi.column(xi)).unwrap();
                gen = talg.mul(k - 1, &gen, 1, &tau).unwrap();
                gen = talg.mul(k, &gen, 0, &crate::linalg::unit_vector(f, da, xi)).unwrap();
            }
            if gen != talg.basis(n, idx) {
                return Err(Error::NotAHomomorphism(format!("basis element {idx} of degree {n} is not x_0 τ x_1 ... τ x_n")));
            }
            cols.push(img);
        }
        maps.push(Matrix::from_columns(f, target.dim(n), &cols));
    }
    for p in 0..=top {
        for r in 0..=top - p {
            for i in 0..talg.dim(p) {
                for j in 0..talg.dim(r) {
                    let lhs = maps[p + r].apply(&talg.mul_basis(p, i, r, j).unwrap());
                    let rhs = target.mul(p, &maps[p].column(i), r, &maps[r].column(j)).unwrap();
                    if lhs != rhs {
                        return Err(Error::NotAHomomorphism(format!("basis pair ({i}, {j}) of degrees ({p}, {r})")));
                    }
                }
            }
        }
    }
    Ok(maps)
}

/// `C(A, A)` with the cup product `(αβ)(x_1..x_(a+b)) = α(x_1..x_a) β(x_(a+1)..x_(a+b))`.
pub fn hochschild_algebra(a: &FiniteAlgebra, ctx: &QContext, top: usize) -> Result<CosimplicialAlgebra> {
    let module = build_hochschild(a, &Bimodule::regular(a), ctx, top)?;
    let da = a.dim();
    let alg = a.clone();
    let table = move |_: usize, i: usize, r: usize, j: usize| -> Vec<(usize, Elem)> {
        let (t, k) = (i / da, i % da);
        let (u, l) = (j / da, j % da);
        let w = t * da.pow(r as u32) + u;
        alg.product_basis(k, l)
            .iter()
            .enumerate()
            .filter(|(_, c)| !alg.field().is_zero(c))
            .map(|(c, v)| (w * da + c, v.clone()))
            .collect()
    };
    let algebra = GradedAlgebra::new(ctx, Grading::Natural, module.dims().to_vec(), a.unit().clone(), Arc::new(table))?;
    CosimplicialAlgebra::new(module, algebra)
}

#[derive(Clone, Debug)]
pub struct PsiReport {
    pub maps: Vec<Matrix>,
    pub formula_matches: bool,
    pub cofaces_commute: bool,
    pub codegeneracies_commute: bool,
}

impl PsiReport {
    pub fn holds(&self) -> bool {
        self.formula_matches && self.cofaces_commute && self.codegeneracies_commute
    }
}

/// `Ψ : 𝔗(A) -> C(A, A)`, the extension of `id : A -> C^0` with `τ -> id_A ∈ C^1`,
/// compared against `Ψ(x_0⊗...⊗x_n)(y_1..y_n) = x_0 y_1 x_1 ... y_n x_n` and tested for
/// compatibility with cofaces and codegeneracies.
pub fn psi_map(t: &TensorAlgebra, c: &CosimplicialAlgebra) -> Result<PsiReport> {
    let a = t.base();
    let f = a.field();
    let da = a.dim();
    let mut alpha = vec![f.zero(); da * da];
    for j in 0..da {
        alpha[j * da + j] = f.one();
    }
    let maps = universal_extension(t, c.algebra(), &Matrix::identity(f, da), &alpha)?;
    let top = maps.len() - 1;

    let mut formula_matches = true;
    for (n, m) in maps.iter().enumerate() {
        for idx in 0..t.algebra().dim(n) {
            let x = crate::simplicial::digits(idx, da, n + 1);
            let col = m.column(idx);
            for yi in 0..da.pow(n as u32) {
                let y = crate::simplicial::digits(yi, da, n);
                let mut v = crate::linalg::unit_vector(f, da, x[0]);
                for k in 0..n {
                    v = a.mul(&v, &crate::linalg::unit_vector(f, da, y[k]));
                    v = a.mul(&v, &crate::linalg::unit_vector(f, da, x[k + 1]));
                }
                if col[yi * da..(yi + 1) * da] != v[..] {
                    formula_matches = false;
                }
            }
        }
    }

    let (tm, cm) = (t.cosimplicial().module(), c.module());
    let mut cofaces_commute = true;
    let mut codegeneracies_commute = true;
    for n in 0..top {
        for i in 0..=n + 1 {
            if maps[n + 1].mul(tm.coface(n, i)) != cm.coface(n, i).mul(&maps[n]) {
                cofaces_commute = false;
            }
        }
        for i in 0..=n {
            match (tm.codegeneracy(n, i), cm.codegeneracy(n, i)) {
                (Some(s), Some(s2)) => {
                    if maps[n].mul(s) != s2.mul(&maps[n + 1]) {
                        codegeneracies_commute = false;
                    }
                }
                _ => codegeneracies_commute = false,
            }
        }
    }
    Ok(PsiReport { maps, formula_matches, cofaces_commute, codegeneracies_commute })
}

/// The q-differential subalgebra of `(𝔗(A), d_1)` generated by `A`, degree by degree.
#[derive(Clone, Debug)]
pub struct Envelope {
    pub spaces: Vec<Subspace>,
}

impl Envelope {
    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(Subspace::dim).collect()
    }

    fn coords(&self, n: usize, v: &[Elem]) -> Vector {
        let s = &self.spaces[n];
        let b = Matrix::from_columns(s.field(), s.ambient_dim(), s.basis());
        b.solve(v).expect("vector lies in the subspace")
    }

    /// `d_1` restricted to the envelope, in the canonical bases of each degree.
    pub fn complex(&self, t: &TensorAlgebra) -> Result<NComplex> {
        let f = t.base().field();
        let maps = (0..self.spaces.len() - 1)
            .map(|n| {
                let cols: Vec<Vector> =
                    self.spaces[n].basis().iter().map(|b| self.coords(n + 1, &t.d1().apply(n, b).unwrap())).collect();
                Matrix::from_columns(f, self.spaces[n + 1].dim(), &cols)
            })
            .collect();
        Ok(NComplex::new(t.algebra().ctx(), 0, self.dims(), maps)?.with_open_ends(false, true))
    }
}

/// Spans `x_0 d^(n_1)(x_1) ... d^(n_p)(x_p)` with `1 <= n_i <= N-1`, then checks closure
/// under `d_1` and products and that each `d^ℓ(A)` has dimension `dim A - 1`.
pub fn universal_envelope(t: &TensorAlgebra) -> Result<Envelope> {
    let a = t.base();
    let f = a.field();
    let alg = t.algebra();
    let top = t.top();
    let n_ord = alg.ctx().order();
    let da = a.dim();
    // d^j(e_i) for 1 <= j <= N-1
    let mut gens: Vec<Vec<Vector>> = vec![Vec::new(); top + 1];
    for i in 0..da {
        let mut v = crate::linalg::unit_vector(f, da, i);
        for j in 1..n_ord.min(top + 1) {
            v = t.d1().apply(j - 1, &v).unwrap();
            gens[j].push(v.clone());
        }
    }
    let mut spaces = vec![Subspace::full(f, da)];
    for n in 1..=top {
        let mut vs = Vec::new();
        for j in 1..n_ord.min(n + 1) {
            for w in spaces[n - j].basis() {
                for g in &gens[j] {
                    vs.push(alg.mul(n - j, w, j, g).unwrap());
                }
            }
        }
        spaces.push(Subspace::span(f, alg.dim(n), vs));
    }
    for n in 0..top {
        for b in spaces[n].basis() {
            if !in_span(f, &spaces[n + 1], &t.d1().apply(n, b).unwrap()) {
                return Err(Error::RelationViolation { relation: "d_1(Ω^n) ⊆ Ω^(n+1)".into(), degree: n as i64 });
            }
        }
    }
    for p in 0..=top {
        for r in 0..=top - p {
            for x in spaces[p].basis() {
                for y in spaces[r].basis() {
                    if !in_span(f, &spaces[p + r], &alg.mul(p, x, r, y).unwrap()) {
                        return Err(Error::RelationViolation { relation: "Ω^p Ω^r ⊆ Ω^(p+r)".into(), degree: (p + r) as i64 });
                    }
                }
            }
        }
    }
    for (l, g) in gens.iter().enumerate().skip(1) {
        if g.is_empty() {
            continue;
        }
        let d = Subspace::span(f, alg.dim(l), g.clone()).dim();
        if d + 1 != da {
            return Err(Error::RelationViolation { relation: format!("dim d^{l}(A) = dim A - 1 (got {d})"), degree: l as i64 });
        }
    }
    Ok(Envelope { spaces })
}

#[derive(Clone, Debug)]
pub struct TrivialityReport {
    pub omega: Vector,
    pub augmented: HomologyTable,
    pub tensor: HomologyTable,
    pub envelope: HomologyTable,
}

/// Builds `k e_-(N-1) ⊕ ... ⊕ k e_-1 ⊕ 𝔗(A)` with the extended `d_1` and the homotopy
/// `h`, checks `h d - q d h = Id` and that `F = k e_* ⊕ Ω_q(A)` is stable under `h`, then
/// compares homology: zero on the augmented complex, `k` in degree 0 and nothing above
/// for both `𝔗(A)` and `Ω_q(A)`.
pub fn triviality_check(t: &TensorAlgebra, omega: Option<&[Elem]>) -> Result<TrivialityReport> {
    let alg = t.algebra();
    let ctx = alg.ctx();
    ctx.require_a1()?;
    let a = t.base();
    let f = a.field();
    let n_ord = ctx.order();
    let da = a.dim();
    let omega = match omega {
        Some(w) => w.to_vec(),
        None => a.default_omega()?,
    };
    if omega.len() != da || !f.is_one(&a.pairing(&omega, a.unit())) {
        return Err(Error::PremiseNotMet("ω(1) ≠ 1".into()));
    }
    let top = t.top();
    let lo = -(n_ord as i64 - 1);
    let mut dims = vec![1; n_ord - 1];
    dims.extend_from_slice(alg.dims());
    let mut maps: Vec<Matrix> = (0..n_ord - 2).map(|_| Matrix::identity(f, 1)).collect();
    maps.push(Matrix::from_columns(f, da, &[a.unit().clone()]));
    maps.extend(t.d1().maps.iter().cloned());
    let aug = NComplex::new(ctx, lo, dims, maps)?.with_open_ends(false, true);

    let q_inv = ctx.q_pow(-1)?;
    let h = |n: i64| -> Matrix {
        if n <= lo || n > top as i64 {
            return Matrix::zeros(f, aug.dim(n - 1), aug.dim(n));
        }
        if n < 0 {
            let i = (-n) as usize;
            let c = f.neg(&f.mul(&ctx.q_pow(-(i as i64 + 1)).unwrap(), &ctx.q_number(i + 1)));
            return Matrix::scalar(f, 1, &c);
        }
        if n == 0 {
            let row: Vector = omega.iter().map(|w| f.neg(&f.mul(&q_inv, w))).collect();
            return Matrix::from_rows(f, 1, da, vec![row]);
        }
        let n = n as usize;
        let rest = da.pow(n as u32);
        let mut m = Matrix::zeros(f, rest, da * rest);
        for c in 0..da * rest {
            m.set(c % rest, c, omega[c / rest].clone());
        }
        m
    };
    let q = ctx.q().clone();
    for n in lo..top as i64 {
        let lhs = h(n + 1).mul(&aug.map(n)).sub(&aug.map(n - 1).mul(&h(n)).scale(&q));
        if !lhs.is_identity() {
            return Err(Error::PremiseNotMet(format!("h d - q d h ≠ Id in degree {n}")));
        }
    }

    let env = universal_envelope(t)?;
    for n in 1..=top {
        let hn = h(n as i64);
        for b in env.spaces[n].basis() {
            if !in_span(f, &env.spaces[n - 1], &hn.apply(b)) {
                return Err(Error::RelationViolation { relation: "h(Ω^n) ⊆ Ω^(n-1)".into(), degree: n as i64 });
            }
        }
    }

    let augmented = aug.homology_table()?;
    let tensor = t.complex()?.homology_table()?;
    let envelope = env.complex(t)?.homology_table()?;
    let mut bad = Vec::new();
    for c in augmented.cells.iter().filter(|c| c.valid && c.dim != 0) {
        bad.push(format!("augmented H^{}_({}) = {}", c.degree, c.level, c.dim));
    }
    for (name, table) in [("𝔗(A)", &tensor), ("Ω_q(A)", &envelope)] {
        for c in table.cells.iter().filter(|c| c.valid) {
            let expected = usize::from(c.degree == 0);
            if c.dim != expected {
                bad.push(format!("{name}: H^{}_({}) = {}, expected {expected}", c.degree, c.level, c.dim));
            }
        }
    }
    if !bad.is_empty() {
        return Err(Error::Mismatch(bad));
    }
    Ok(TrivialityReport { omega, augmented, tensor, envelope })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qdga::{ad_q_power_formula_check, cycles_ideal_check, d_power_product_check};

    fn ctx() -> QContext {
        QContext::prime(7, 2, 3).unwrap()
    }

    /// Product of the 3x3 matrices E^k_l (entry (i, j) is δ^k_j δ^i_l) by plain
    /// matrix multiplication, used to cross-check the graded table.
    #[test]
    fn matrix_example_agrees_with_matrix_product() {
        let c = ctx();
        let f = c.field();
        let n = 3;
        let ex = matrix_example(&c, &[f.one(), f.one(), f.one()]).unwrap();
        let mat = |k: usize, l: usize| {
            let mut m = Matrix::zeros(f, n, n);
            m.set(l, k, f.one());
            m
        };
        for g in 0..n {
            for l in 0..n {
                for h in 0..n {
                    for s in 0..n {
                        let prod = mat((l + g) % n, l).mul(&mat((s + h) % n, s));
                        let v = ex.algebra.mul_basis(g, l, h, s).unwrap();
                        let mut expect = Matrix::zeros(f, n, n);
                        for (idx, x) in v.iter().enumerate() {
                            if !f.is_zero(x) {
                                expect = expect.add(&mat((idx + (g + h)) % n, idx).scale(x));
                            }
                        }
                        assert_eq!(prod, expect);
                    }
                }
            }
        }
        ad_q_power_formula_check(&ex.algebra, &ex.e, 3).unwrap();
        d_power_product_check(&ex.algebra, &ex.d, 3).unwrap();
        cycles_ideal_check(&ex.algebra, &ex.d).unwrap();
    }

    #[test]
    fn matrix_example_lift() {
        let c = ctx();
        let f = c.field();
        let ex = matrix_example(&c, &[f.one(), f.from_i64(2), f.from_i64(3)]).unwrap();
        let lift = pstar_lift(&ex.algebra, &ex.d, 7).unwrap();
        assert_eq!(lift.project(5), 2);
        let table = lift.complex().unwrap().homology_table().unwrap();
        assert!(table.cells.iter().all(|cell| cell.dim <= 3));
    }

    #[test]
    fn tensor_algebra_of_dual_numbers() {
        let c = ctx();
        let a = FiniteAlgebra::dual_numbers(c.field());
        let t = tensor_algebra(&a, &c, 4).unwrap();
        assert_eq!(t.algebra().dims(), &[2, 4, 8, 16, 32]);
        let d_eps = t.d1().apply(0, &[c.field().zero(), c.field().one()]).unwrap();
        assert!(d_eps.iter().any(|x| !c.field().is_zero(x)));
        d_power_product_check(t.algebra(), t.d1(), 2).unwrap();
    }

    #[test]
    fn ground_algebra_is_trivial() {
        let c = ctx();
        let t = tensor_algebra(&FiniteAlgebra::ground(c.field()), &c, 4).unwrap();
        assert!(t.d1().apply(0, &[c.field().one()]).unwrap().iter().all(|x| c.field().is_zero(x)));
        let env = universal_envelope(&t).unwrap();
        assert_eq!(env.dims(), vec![1, 0, 0, 0, 0]);
        triviality_check(&t, None).unwrap();
    }

    #[test]
    fn triviality_for_small_algebras() {
        let c = ctx();
        for a in [FiniteAlgebra::dual_numbers(c.field()), FiniteAlgebra::k_x_k(c.field())] {
            let t = tensor_algebra(&a, &c, 4).unwrap();
            triviality_check(&t, None).unwrap();
        }
    }

    #[test]
    fn psi_is_cosimplicial() {
        let c = ctx();
        let a = FiniteAlgebra::dual_numbers(c.field());
        let t = tensor_algebra(&a, &c, 3).unwrap();
        let h = hochschild_algebra(&a, &c, 3).unwrap();
        assert!(psi_map(&t, &h).unwrap().holds());
    }

    #[test]
    fn identity_extension() {
        let c = ctx();
        let a = FiniteAlgebra::k_x_k(c.field());
        let t = tensor_algebra(&a, &c, 3).unwrap();
        let maps = universal_extension(&t, t.algebra(), &Matrix::identity(c.field(), 2), &t.ones(2)).unwrap();
        assert!(maps.iter().all(Matrix::is_identity));
    }

    #[test]
    fn rejects_bad_omega() {
        let c = ctx();
        let t = tensor_algebra(&FiniteAlgebra::dual_numbers(c.field()), &c, 3).unwrap();
        let w = vec![c.field().from_i64(2), c.field().zero()];
        assert!(matches!(triviality_check(&t, Some(&w)), Err(Error::PremiseNotMet(_))));
    }
}
