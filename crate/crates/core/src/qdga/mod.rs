//! Graded q-differential algebras: finite algebras, graded products given by
//! structure constants, q-derivations and the q-Leibniz rule, cosimplicial algebras.

mod examples;

pub use examples::{
    hochschild_algebra, matrix_example, psi_map, pstar_lift, tensor_algebra, triviality_check, universal_envelope,
    universal_extension, Envelope, MatrixExample, PsiReport, PStarLift, TensorAlgebra, TrivialityReport,
};

use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::{is_zero_vec, vec_add, vec_scale, vec_sub, Matrix, Subspace, Vector};
use crate::rings::{Elem, Field, QContext};
use crate::simplicial::CosimplicialModule;

/// A finite-dimensional associative unital algebra given by structure constants:
/// `mult[i][j]` is the coordinate vector of `e_i e_j`.
#[derive(Clone, Debug)]
pub struct FiniteAlgebra {
    field: Field,
    dim: usize,
    mult: Vec<Vec<Vector>>,
    unit: Vector,
}

impl FiniteAlgebra {
    /// Checks shapes, associativity and the unit law.
    pub fn new(field: &Field, mult: Vec<Vec<Vector>>, unit: Vector) -> Result<FiniteAlgebra> {
        let dim = unit.len();
        if mult.len() != dim || mult.iter().any(|r| r.len() != dim || r.iter().any(|v| v.len() != dim)) {
            return Err(Error::DimensionMismatch(format!("structure constants do not form a {dim}x{dim}x{dim} table")));
        }
        let a = FiniteAlgebra { field: field.clone(), dim, mult, unit };
        for i in 0..dim {
            let e = crate::linalg::unit_vector(field, dim, i);
            if a.mul(&a.unit, &e) != e || a.mul(&e, &a.unit) != e {
                return Err(Error::RelationViolation { relation: format!("unit law on e_{i}"), degree: 0 });
            }
            for j in 0..dim {
                for k in 0..dim {
                    let left = a.mul(&a.mult[i][j], &crate::linalg::unit_vector(field, dim, k));
                    let right = a.mul(&e, &a.mult[j][k]);
                    if left != right {
                        return Err(Error::RelationViolation { relation: format!("associativity on (e_{i}, e_{j}, e_{k})"), degree: 0 });
                    }
                }
            }
        }
        Ok(a)
    }

    fn from_i64(field: &Field, dim: usize, products: &[(usize, usize, usize, i64)], unit: &[i64]) -> Result<FiniteAlgebra> {
        let mut mult = vec![vec![vec![field.zero(); dim]; dim]; dim];
        for &(i, j, k, c) in products {
            mult[i][j][k] = field.add(&mult[i][j][k], &field.from_i64(c));
        }
        FiniteAlgebra::new(field, mult, unit.iter().map(|&c| field.from_i64(c)).collect())
    }

    /// The field itself.
    pub fn ground(field: &Field) -> FiniteAlgebra {
        FiniteAlgebra::from_i64(field, 1, &[(0, 0, 0, 1)], &[1]).unwrap()
    }

    /// `k[ε]/(ε²)` in the basis `1, ε`.
    pub fn dual_numbers(field: &Field) -> FiniteAlgebra {
        FiniteAlgebra::from_i64(field, 2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)], &[1, 0]).unwrap()
    }

    /// `k × k` in the basis of the two idempotents; the unit is `e_1 + e_2`.
    pub fn k_x_k(field: &Field) -> FiniteAlgebra {
        FiniteAlgebra::from_i64(field, 2, &[(0, 0, 0, 1), (1, 1, 1, 1)], &[1, 1]).unwrap()
    }

    /// 2x2 matrices in the basis `E11, E12, E21, E22`.
    pub fn matrix2(field: &Field) -> FiniteAlgebra {
        let mut products = Vec::new();
        for (a, b) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            for (c, d) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
                if b == c {
                    products.push((2 * a + b, 2 * c + d, 2 * a + d, 1));
                }
            }
        }
        FiniteAlgebra::from_i64(field, 4, &products, &[1, 0, 0, 1]).unwrap()
    }

    pub fn preset(name: &str, field: &Field) -> Result<FiniteAlgebra> {
        match name {
            "ground" | "k" => Ok(Self::ground(field)),
            "dual_numbers" => Ok(Self::dual_numbers(field)),
            "k_x_k" => Ok(Self::k_x_k(field)),
            "matrix2" => Ok(Self::matrix2(field)),
            _ => Err(Error::Parse(format!("unknown algebra preset `{name}` (ground, dual_numbers, k_x_k, matrix2)"))),
        }
    }

    /// `{"dim": n, "unit": index or coefficient list, "mult": [[[c_ij^k, ...], ...], ...]}`
    pub fn from_json(field: &Field, v: &Value) -> Result<FiniteAlgebra> {
        let dim = v.get("dim").and_then(Value::as_u64).ok_or_else(|| Error::Parse("algebra: missing `dim`".into()))? as usize;
        let unit = match v.get("unit") {
            Some(Value::Number(n)) => {
                let i = n.as_u64().ok_or_else(|| Error::Parse("algebra: bad unit index".into()))? as usize;
                if i >= dim {
                    return Err(Error::OutOfRange(format!("unit index {i} with dim {dim}")));
                }
                crate::linalg::unit_vector(field, dim, i)
            }
            Some(Value::Array(cs)) => cs.iter().map(|c| field.parse_json(c)).collect::<Result<_>>()?,
            _ => return Err(Error::Parse("algebra: missing `unit`".into())),
        };
        let rows = v.get("mult").and_then(Value::as_array).ok_or_else(|| Error::Parse("algebra: missing `mult`".into()))?;
        let mult = rows
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| Error::Parse("algebra: `mult` rows must be arrays".into()))?
                    .iter()
                    .map(|cell| {
                        cell.as_array()
                            .ok_or_else(|| Error::Parse("algebra: products must be coefficient arrays".into()))?
                            .iter()
                            .map(|c| field.parse_json(c))
                            .collect::<Result<Vector>>()
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        if unit.len() != dim {
            return Err(Error::DimensionMismatch(format!("unit has {} coefficients, dim is {dim}", unit.len())));
        }
        FiniteAlgebra::new(field, mult, unit)
    }

    pub fn to_json(&self) -> Value {
        let f = &self.field;
        json!({
            "dim": self.dim,
            "unit": self.unit.iter().map(|x| f.to_json(x)).collect::<Vec<_>>(),
            "mult": self.mult.iter().map(|r| r.iter().map(|v| v.iter().map(|x| f.to_json(x)).collect::<Vec<_>>()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn unit(&self) -> &Vector {
        &self.unit
    }
    pub fn product_basis(&self, i: usize, j: usize) -> &Vector {
        &self.mult[i][j]
    }

    pub fn mul(&self, x: &[Elem], y: &[Elem]) -> Vector {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim];
        for (i, a) in x.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if f.is_zero(b) {
                    continue;
                }
                let ab = f.mul(a, b);
                for (o, c) in out.iter_mut().zip(&self.mult[i][j]) {
                    f.add_mul(o, &ab, c);
                }
            }
        }
        out
    }

    /// Matrix of `x -> e_i x`.
    pub fn left_matrix(&self, i: usize) -> Matrix {
        Matrix::from_columns(&self.field, self.dim, &(0..self.dim).map(|j| self.mult[i][j].clone()).collect::<Vec<_>>())
    }

    /// Matrix of `x -> x e_i`.
    pub fn right_matrix(&self, i: usize) -> Matrix {
        Matrix::from_columns(&self.field, self.dim, &(0..self.dim).map(|j| self.mult[j][i].clone()).collect::<Vec<_>>())
    }

    /// A linear form with `ω(1) = 1`: the coordinate of the unit when the unit is a
    /// basis vector, otherwise the first coordinate on which the unit has coefficient 1,
    /// otherwise the first nonzero coordinate rescaled.
    pub fn default_omega(&self) -> Result<Vector> {
        let f = &self.field;
        let pick = self
            .unit
            .iter()
            .position(|c| f.is_one(c))
            .map(|i| (i, f.one()))
            .or_else(|| self.unit.iter().position(|c| !f.is_zero(c)).map(|i| (i, f.inv(&self.unit[i]).unwrap())));
        let (i, c) = pick.ok_or_else(|| Error::PremiseNotMet("the unit is zero".into()))?;
        let mut w = vec![f.zero(); self.dim];
        w[i] = c;
        Ok(w)
    }

    pub fn pairing(&self, omega: &[Elem], x: &[Elem]) -> Elem {
        let f = &self.field;
        let mut acc = f.zero();
        for (a, b) in omega.iter().zip(x) {
            f.add_mul(&mut acc, a, b);
        }
        acc
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Grading {
    /// Degrees `0..=D`; products landing above `D` are outside the window.
    Natural,
    /// Degrees modulo the number of components.
    Cyclic,
}

/// `(a, i, b, j) -> e^a_i e^b_j` as sparse coordinates in the product degree.
pub type ProductTable = Arc<dyn Fn(usize, usize, usize, usize) -> Vec<(usize, Elem)> + Send + Sync>;

/// A graded unital algebra, finite-dimensional in each degree, given by its product on
/// basis elements.
#[derive(Clone)]
pub struct GradedAlgebra {
    ctx: QContext,
    grading: Grading,
    dims: Vec<usize>,
    unit: Vector,
    table: ProductTable,
}

impl fmt::Debug for GradedAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GradedAlgebra").field("grading", &self.grading).field("dims", &self.dims).finish()
    }
}

impl GradedAlgebra {
    /// Checks shapes and the unit law on every basis element.
    pub fn new(ctx: &QContext, grading: Grading, dims: Vec<usize>, unit: Vector, table: ProductTable) -> Result<GradedAlgebra> {
        if dims.is_empty() || unit.len() != dims[0] {
            return Err(Error::DimensionMismatch("unit must live in degree 0".into()));
        }
        let alg = GradedAlgebra { ctx: ctx.clone(), grading, dims, unit, table };
        alg.check_unit()?;
        Ok(alg)
    }

    /// `A` concentrated in degree 0.
    pub fn from_finite(ctx: &QContext, a: &FiniteAlgebra) -> Result<GradedAlgebra> {
        let alg = a.clone();
        let table = move |_: usize, i: usize, _: usize, j: usize| sparse(alg.field(), alg.product_basis(i, j));
        GradedAlgebra::new(ctx, Grading::Natural, vec![a.dim()], a.unit().clone(), Arc::new(table))
    }

    pub fn ctx(&self) -> &QContext {
        &self.ctx
    }
    pub fn field(&self) -> &Field {
        self.ctx.field()
    }
    pub fn grading(&self) -> Grading {
        self.grading
    }
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }
    pub fn dim(&self, n: usize) -> usize {
        self.dims.get(n).copied().unwrap_or(0)
    }
    /// Highest degree of the window (or `N-1` for cyclic gradings).
    pub fn top(&self) -> usize {
        self.dims.len() - 1
    }
    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    /// Degree of a product, or `None` when it leaves the window.
    pub fn product_degree(&self, a: usize, b: usize) -> Option<usize> {
        match self.grading {
            Grading::Natural => (a + b <= self.top()).then_some(a + b),
            Grading::Cyclic => Some((a + b) % self.dims.len()),
        }
    }

    /// Degree `a + shift`, wrapped or clipped.
    pub fn shifted(&self, a: usize, shift: usize) -> Option<usize> {
        self.product_degree(a, shift)
    }

    pub fn zero(&self, n: usize) -> Vector {
        vec![self.field().zero(); self.dim(n)]
    }

    pub fn basis(&self, n: usize, i: usize) -> Vector {
        crate::linalg::unit_vector(self.field(), self.dim(n), i)
    }

    /// `x y` for `x` of degree `a` and `y` of degree `b`.
    pub fn mul(&self, a: usize, x: &[Elem], b: usize, y: &[Elem]) -> Option<Vector> {
        let c = self.product_degree(a, b)?;
        let f = self.field();
        let mut out = vec![f.zero(); self.dim(c)];
        for (i, s) in x.iter().enumerate() {
            if f.is_zero(s) {
                continue;
            }
            for (j, t) in y.iter().enumerate() {
                if f.is_zero(t) {
                    continue;
                }
                let st = f.mul(s, t);
                for (k, v) in (self.table)(a, i, b, j) {
                    f.add_mul(&mut out[k], &st, &v);
                }
            }
        }
        Some(out)
    }

    pub fn mul_basis(&self, a: usize, i: usize, b: usize, j: usize) -> Option<Vector> {
        let c = self.product_degree(a, b)?;
        let f = self.field();
        let mut out = vec![f.zero(); self.dim(c)];
        for (k, v) in (self.table)(a, i, b, j) {
            out[k] = f.add(&out[k], &v);
        }
        Some(out)
    }

    /// `x^k` for `x` of degree `a`.
    pub fn power(&self, a: usize, x: &[Elem], k: usize) -> Option<(usize, Vector)> {
        let mut acc = (0, self.unit.clone());
        for _ in 0..k {
            let v = self.mul(acc.0, &acc.1, a, x)?;
            acc = (self.product_degree(acc.0, a)?, v);
        }
        Some(acc)
    }

    pub fn check_unit(&self) -> Result<()> {
        for n in 0..self.dims.len() {
            for i in 0..self.dim(n) {
                let e = self.basis(n, i);
                if self.mul(0, &self.unit, n, &e).as_ref() != Some(&e) || self.mul(n, &e, 0, &self.unit).as_ref() != Some(&e) {
                    return Err(Error::RelationViolation { relation: format!("unit law on basis element {i}"), degree: n as i64 });
                }
            }
        }
        Ok(())
    }

    /// `(xy)z = x(yz)` on all basis triples whose product stays in the window.
    pub fn check_associativity(&self) -> Result<()> {
        let degrees = self.dims.len();
        for a in 0..degrees {
            for b in 0..degrees {
                let Some(ab) = self.product_degree(a, b) else { continue };
                for c in 0..degrees {
                    let Some(bc) = self.product_degree(b, c) else { continue };
                    if self.product_degree(ab, c).is_none() {
                        continue;
                    }
                    for i in 0..self.dim(a) {
                        for j in 0..self.dim(b) {
                            let xy = self.mul_basis(a, i, b, j).unwrap();
                            for k in 0..self.dim(c) {
                                let left = self.mul(ab, &xy, c, &self.basis(c, k)).unwrap();
                                let yz = self.mul_basis(b, j, c, k).unwrap();
                                let right = self.mul(a, &self.basis(a, i), bc, &yz).unwrap();
                                if left != right {
                                    return Err(Error::RelationViolation {
                                        relation: format!("associativity on basis triple ({i}, {j}, {k}) of degrees ({a}, {b}, {c})"),
                                        degree: (a + b + c) as i64,
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

fn sparse(f: &Field, v: &[Elem]) -> Vec<(usize, Elem)> {
    v.iter().enumerate().filter(|(_, x)| !f.is_zero(x)).map(|(i, x)| (i, x.clone())).collect()
}

/// A homogeneous linear map of degree `shift`; `maps[a]` sends degree `a` to degree
/// `a + shift` (wrapped for cyclic gradings, absent when it leaves a natural window).
#[derive(Clone, Debug)]
pub struct GradedMap {
    pub shift: usize,
    pub maps: Vec<Matrix>,
}

impl GradedMap {
    pub fn apply(&self, a: usize, x: &[Elem]) -> Option<Vector> {
        self.maps.get(a).map(|m| m.apply(x))
    }

    /// `self ∘ other`.
    pub fn after(&self, alg: &GradedAlgebra, other: &GradedMap) -> GradedMap {
        let mut maps = Vec::new();
        for (a, m) in other.maps.iter().enumerate() {
            let Some(mid) = alg.shifted(a, other.shift) else { break };
            match self.maps.get(mid) {
                Some(s) => maps.push(s.mul(m)),
                None => break,
            }
        }
        let shift = match alg.grading() {
            Grading::Natural => self.shift + other.shift,
            Grading::Cyclic => (self.shift + other.shift) % alg.dims().len(),
        };
        GradedMap { shift, maps }
    }

    pub fn power(&self, alg: &GradedAlgebra, k: usize) -> GradedMap {
        let n = alg.dims().len();
        let mut acc = GradedMap { shift: 0, maps: (0..n).map(|a| Matrix::identity(alg.field(), alg.dim(a))).collect() };
        for _ in 0..k {
            acc = self.after(alg, &acc);
        }
        acc
    }

    pub fn add(&self, other: &GradedMap) -> GradedMap {
        GradedMap { shift: self.shift, maps: self.maps.iter().zip(&other.maps).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Matrix::is_zero)
    }
}

/// Degree-1 map assembled from per-degree matrices.
pub fn graded_map(shift: usize, maps: Vec<Matrix>) -> GradedMap {
    GradedMap { shift, maps }
}

fn twist(ctx: &QContext, l: usize, a: usize) -> Elem {
    ctx.q_pow_nat(l * a)
}

/// `L(αβ) = L(α)β + q^(ℓa) α L(β)` on every basis pair that stays in the window.
pub fn q_derivation_check(alg: &GradedAlgebra, l: &GradedMap) -> Result<()> {
    let f = alg.field();
    let degrees = alg.dims().len();
    for a in 0..degrees {
        for b in 0..degrees {
            let Some(ab) = alg.product_degree(a, b) else { continue };
            let (Some(la), Some(lb)) = (alg.shifted(a, l.shift), alg.shifted(b, l.shift)) else { continue };
            let Some(lab) = l.maps.get(ab) else { continue };
            if l.maps.get(a).is_none() || l.maps.get(b).is_none() {
                continue;
            }
            let c = twist(alg.ctx(), l.shift, a);
            for i in 0..alg.dim(a) {
                let x = alg.basis(a, i);
                let lx = l.apply(a, &x).unwrap();
                for j in 0..alg.dim(b) {
                    let y = alg.basis(b, j);
                    let lhs = lab.apply(&alg.mul_basis(a, i, b, j).unwrap());
                    let first = alg.mul(la, &lx, b, &y);
                    let second = alg.mul(a, &x, lb, &l.apply(b, &y).unwrap());
                    let (Some(first), Some(second)) = (first, second) else { continue };
                    let rhs = vec_add(f, &first, &vec_scale(f, &c, &second));
                    if lhs != rhs {
                        return Err(Error::LeibnizFailure(format!("basis pair ({i} in degree {a}, {j} in degree {b})")));
                    }
                }
            }
        }
    }
    Ok(())
}

/// The graded q-Leibniz rule for a degree-1 map.
pub fn q_leibniz_check(alg: &GradedAlgebra, d: &GradedMap) -> Result<()> {
    if d.shift != 1 {
        return Err(Error::PremiseNotMet(format!("a q-differential has degree 1, got {}", d.shift)));
    }
    q_derivation_check(alg, d)
}

/// `d^N = 0` on every degree where it is defined.
pub fn nilpotency_check(alg: &GradedAlgebra, d: &GradedMap) -> Result<()> {
    let n = alg.ctx().order();
    let p = d.power(alg, n);
    for (a, m) in p.maps.iter().enumerate() {
        if !m.is_zero() {
            return Err(Error::NotNilpotent { order: n, witness: format!("from degree {a}") });
        }
    }
    Ok(())
}

/// `d^n(αβ) = Σ_m q^(a(n-m)) [n m]_q d^m(α) d^(n-m)(β)` on basis pairs; for `n = N` also
/// checks that `d^N` is an untwisted derivation.
pub fn d_power_product_check(alg: &GradedAlgebra, d: &GradedMap, n: usize) -> Result<()> {
    let f = alg.field();
    let ctx = alg.ctx();
    let powers: Vec<GradedMap> = (0..=n).map(|k| d.power(alg, k)).collect();
    let degrees = alg.dims().len();
    for a in 0..degrees {
        for b in 0..degrees {
            let Some(ab) = alg.product_degree(a, b) else { continue };
            let Some(dn) = powers[n].maps.get(ab) else { continue };
            if alg.grading() == Grading::Natural && ab + n > alg.top() {
                continue;
            }
            for i in 0..alg.dim(a) {
                let x = alg.basis(a, i);
                for j in 0..alg.dim(b) {
                    let y = alg.basis(b, j);
                    let lhs = dn.apply(&alg.mul_basis(a, i, b, j).unwrap());
                    let mut rhs = alg.zero(alg.shifted(ab, n).unwrap());
                    for m in 0..=n {
                        let dmx = powers[m].apply(a, &x).unwrap();
                        let dy = powers[n - m].apply(b, &y).unwrap();
                        let term = alg.mul(alg.shifted(a, m).unwrap(), &dmx, alg.shifted(b, n - m).unwrap(), &dy).unwrap();
                        let c = f.mul(&ctx.q_pow_nat(a * (n - m)), &ctx.q_binomial(n, m)?);
                        rhs = vec_add(f, &rhs, &vec_scale(f, &c, &term));
                    }
                    if lhs != rhs {
                        return Err(Error::LeibnizFailure(format!("d^{n} expansion on basis pair ({i} in degree {a}, {j} in degree {b})")));
                    }
                    if n == ctx.order() {
                        let t1 = alg.mul(alg.shifted(a, n).unwrap(), &powers[n].apply(a, &x).unwrap(), b, &y).unwrap();
                        let t2 = alg.mul(a, &x, alg.shifted(b, n).unwrap(), &powers[n].apply(b, &y).unwrap()).unwrap();
                        if lhs != vec_add(f, &t1, &t2) {
                            return Err(Error::LeibnizFailure(format!("d^N is not a derivation on ({i} in degree {a}, {j} in degree {b})")));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// `ad_q(λ)(α) = λα - q^(ℓa) αλ` for `λ` homogeneous of degree `ℓ`.
pub fn ad_q(alg: &GradedAlgebra, lambda: &[Elem], l: usize) -> Result<GradedMap> {
    if lambda.len() != alg.dim(l) {
        return Err(Error::DimensionMismatch(format!("λ has {} coordinates, degree {l} has dim {}", lambda.len(), alg.dim(l))));
    }
    let f = alg.field();
    let mut maps = Vec::new();
    for a in 0..alg.dims().len() {
        let Some(t) = alg.shifted(a, l) else { break };
        let c = twist(alg.ctx(), l, a);
        let cols: Vec<Vector> = (0..alg.dim(a))
            .map(|i| {
                let x = alg.basis(a, i);
                let left = alg.mul(l, lambda, a, &x).unwrap();
                let right = alg.mul(a, &x, l, lambda).unwrap();
                vec_sub(f, &left, &vec_scale(f, &c, &right))
            })
            .collect();
        maps.push(Matrix::from_columns(f, alg.dim(t), &cols));
    }
    Ok(GradedMap { shift: l, maps })
}

/// `(ad_q e)^n(α) = Σ_m (-1)^m q^(ma + m(m-1)/2) [n m]_q e^(n-m) α e^m` for `e` of degree 1.
pub fn ad_q_power_formula_check(alg: &GradedAlgebra, e: &[Elem], n: usize) -> Result<()> {
    let f = alg.field();
    let ctx = alg.ctx();
    let adn = ad_q(alg, e, 1)?.power(alg, n);
    for a in 0..alg.dims().len() {
        let Some(m_a) = adn.maps.get(a) else { continue };
        for i in 0..alg.dim(a) {
            let x = alg.basis(a, i);
            let lhs = m_a.apply(&x);
            let mut rhs = alg.zero(alg.shifted(a, n).unwrap());
            for m in 0..=n {
                let (dl, left) = alg.power(1, e, n - m).unwrap();
                let (dr, right) = alg.power(1, e, m).unwrap();
                let mid = alg.mul(dl, &left, a, &x).unwrap();
                let term = alg.mul(alg.product_degree(dl, a).unwrap(), &mid, dr, &right).unwrap();
                let mut c = f.mul(&ctx.q_pow_nat(m * a + m * m.saturating_sub(1) / 2), &ctx.q_binomial(n, m)?);
                if m % 2 == 1 {
                    c = f.neg(&c);
                }
                rhs = vec_add(f, &rhs, &vec_scale(f, &c, &term));
            }
            if lhs != rhs {
                return Err(Error::LeibnizFailure(format!("(ad_q e)^{n} expansion on basis element {i} of degree {a}")));
            }
        }
    }
    Ok(())
}

/// `(-1)^N q^(N(N-1)/2) = -1`, which holds under (A₁).
pub fn sign_identity_check(ctx: &QContext) -> Result<()> {
    ctx.require_a1()?;
    let n = ctx.order();
    let f = ctx.field();
    let mut v = ctx.q_pow_nat(n * (n - 1) / 2);
    if n % 2 == 1 {
        v = f.neg(&v);
    }
    if v != f.neg(&f.one()) {
        return Err(Error::RelationViolation { relation: "(-1)^N q^(N(N-1)/2) = -1".into(), degree: 0 });
    }
    Ok(())
}

/// `Z_(1) = ker d` is a unital subalgebra and `B_(1) = im d^(N-1)` a two-sided ideal in it.
pub fn cycles_ideal_check(alg: &GradedAlgebra, d: &GradedMap) -> Result<()> {
    let n = alg.ctx().order();
    let f = alg.field();
    let degrees = alg.dims().len();
    let dn1 = d.power(alg, n - 1);
    let z: Vec<Option<Subspace>> = (0..degrees).map(|a| d.maps.get(a).map(Matrix::kernel)).collect();
    let b: Vec<Subspace> = (0..degrees)
        .map(|a| {
            let mut s = Subspace::zero(f, alg.dim(a));
            for (src, m) in dn1.maps.iter().enumerate() {
                if alg.shifted(src, dn1.shift) == Some(a) {
                    s = s.sum(&m.image());
                }
            }
            s
        })
        .collect();
    if let Some(z0) = &z[0] {
        if !z0.contains(alg.unit()) {
            return Err(Error::RelationViolation { relation: "d(1) = 0".into(), degree: 0 });
        }
    }
    for a in 0..degrees {
        for c in 0..degrees {
            let Some(ac) = alg.product_degree(a, c) else { continue };
            let (Some(za), Some(zc), Some(zac)) = (&z[a], &z[c], &z[ac]) else { continue };
            for x in za.basis() {
                for y in zc.basis() {
                    if !zac.contains(&alg.mul(a, x, c, y).unwrap()) {
                        return Err(Error::RelationViolation { relation: "Z_(1) closed under products".into(), degree: ac as i64 });
                    }
                }
                for y in b[c].basis() {
                    if !b[ac].contains(&alg.mul(a, x, c, y).unwrap()) {
                        return Err(Error::RelationViolation { relation: "Z_(1) B_(1) ⊆ B_(1)".into(), degree: ac as i64 });
                    }
                }
            }
            for x in b[a].basis() {
                for y in zc.basis() {
                    if !b[ac].contains(&alg.mul(a, x, c, y).unwrap()) {
                        return Err(Error::RelationViolation { relation: "B_(1) Z_(1) ⊆ B_(1)".into(), degree: ac as i64 });
                    }
                }
            }
        }
    }
    Ok(())
}

/// Sum over all orderings of the composites `L_σ(1) ∘ ... ∘ L_σ(k)`.
pub fn symmetrized_composition(alg: &GradedAlgebra, ls: &[GradedMap]) -> GradedMap {
    fn perms(k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        perms(k - 1)
            .into_iter()
            .flat_map(|p| (0..k).map(move |pos| { let mut q = p.clone(); q.insert(pos, k - 1); q }))
            .collect()
    }
    let mut acc: Option<GradedMap> = None;
    for p in perms(ls.len()) {
        let mut comp = ls[p[p.len() - 1]].clone();
        for &i in p.iter().rev().skip(1) {
            comp = ls[i].after(alg, &comp);
        }
        acc = Some(match acc {
            None => comp,
            Some(a) => a.add(&comp),
        });
    }
    acc.expect("at least one map")
}

/// Exploratory: whether the symmetrized composite of `N` degree-1 q-derivations is a
/// q-derivation of degree `N` on this algebra.
pub fn symmetrized_composition_check(alg: &GradedAlgebra, ls: &[GradedMap]) -> Result<bool> {
    if ls.iter().any(|l| l.shift != 1) {
        return Err(Error::PremiseNotMet("all maps must have degree 1".into()));
    }
    for l in ls {
        q_derivation_check(alg, l)?;
    }
    let s = symmetrized_composition(alg, ls);
    Ok(q_derivation_check(alg, &s).is_ok())
}

/// A cosimplicial module whose graded sum carries a compatible product.
#[derive(Clone, Debug)]
pub struct CosimplicialAlgebra {
    module: CosimplicialModule,
    algebra: GradedAlgebra,
}

impl CosimplicialAlgebra {
    /// Checks that the degrees agree and that cofaces (and codegeneracies, if present)
    /// are compatible with the product on all basis pairs in the window.
    pub fn new(module: CosimplicialModule, algebra: GradedAlgebra) -> Result<CosimplicialAlgebra> {
        if module.dims() != algebra.dims() || algebra.grading() != Grading::Natural {
            return Err(Error::DimensionMismatch("module and algebra degrees differ".into()));
        }
        let c = CosimplicialAlgebra { module, algebra };
        c.check_compatibility()?;
        Ok(c)
    }

    pub fn module(&self) -> &CosimplicialModule {
        &self.module
    }
    pub fn algebra(&self) -> &GradedAlgebra {
        &self.algebra
    }
    pub fn top(&self) -> usize {
        self.algebra.top()
    }

    /// `d_1 = Σ_(i<=n) q^i f_i - q^n f_(n+1)`.
    pub fn d1(&self) -> GradedMap {
        GradedMap { shift: 1, maps: (0..self.top()).map(|n| self.module.d_m(1, n)).collect() }
    }

    fn check_compatibility(&self) -> Result<()> {
        let alg = &self.algebra;
        let e = &self.module;
        let top = self.top();
        for a in 0..=top {
            for b in 0..=top - a {
                let ab = a + b;
                for i in 0..alg.dim(a) {
                    let x = alg.basis(a, i);
                    for j in 0..alg.dim(b) {
                        let y = alg.basis(b, j);
                        let xy = alg.mul_basis(a, i, b, j).unwrap();
                        if ab < top {
                            for k in 0..=ab + 1 {
                                let lhs = e.coface(ab, k).apply(&xy);
                                let rhs = if k <= a {
                                    alg.mul(a + 1, &e.coface(a, k).column(i), b, &y).unwrap()
                                } else {
                                    alg.mul(a, &x, b + 1, &e.coface(b, k - a).column(j)).unwrap()
                                };
                                if lhs != rhs {
                                    return Err(Error::RelationViolation {
                                        relation: format!("f_{k}(αβ) on basis pair ({i}, {j}) of degrees ({a}, {b})"),
                                        degree: ab as i64,
                                    });
                                }
                            }
                            let l = alg.mul(a + 1, &e.coface(a, a + 1).column(i), b, &y).unwrap();
                            let r = alg.mul(a, &x, b + 1, &e.coface(b, 0).column(j)).unwrap();
                            if l != r {
                                return Err(Error::RelationViolation {
                                    relation: format!("f_(a+1)(α)β = α f_0(β) on basis pair ({i}, {j}) of degrees ({a}, {b})"),
                                    degree: ab as i64,
                                });
                            }
                        }
                        if e.has_codegeneracies() && ab >= 1 {
                            for k in 0..ab {
                                let lhs = e.codegeneracy(ab - 1, k).unwrap().apply(&xy);
                                let rhs = if k < a {
                                    alg.mul(a - 1, &e.codegeneracy(a - 1, k).unwrap().column(i), b, &y).unwrap()
                                } else {
                                    alg.mul(a, &x, b - 1, &e.codegeneracy(b - 1, k - a).unwrap().column(j)).unwrap()
                                };
                                if lhs != rhs {
                                    return Err(Error::RelationViolation {
                                        relation: format!("s_{k}(αβ) on basis pair ({i}, {j}) of degrees ({a}, {b})"),
                                        degree: ab as i64,
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

pub(crate) fn in_span(f: &Field, s: &Subspace, v: &[Elem]) -> bool {
    is_zero_vec(f, v) || s.contains(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> QContext {
        QContext::prime(7, 2, 3).unwrap()
    }

    #[test]
    fn presets_are_algebras() {
        let f = Field::prime(7).unwrap();
        for name in ["ground", "dual_numbers", "k_x_k", "matrix2"] {
            FiniteAlgebra::preset(name, &f).unwrap();
        }
        let m = FiniteAlgebra::matrix2(&f);
        // E12 E21 = E11
        assert_eq!(m.product_basis(1, 2), &crate::linalg::unit_vector(&f, 4, 0));
    }

    #[test]
    fn rejects_non_associative_table() {
        let f = Field::prime(5).unwrap();
        let mut mult = vec![vec![vec![f.zero(); 2]; 2]; 2];
        mult[0][0][0] = f.one();
        mult[0][1][1] = f.one();
        mult[1][0][1] = f.one();
        mult[1][1][0] = f.one();
        mult[1][1][1] = f.one();
        assert!(FiniteAlgebra::new(&f, mult.clone(), vec![f.one(), f.zero()]).is_ok());
        mult[1][1][0] = f.from_i64(2);
        mult[1][0][0] = f.one();
        assert!(FiniteAlgebra::new(&f, mult, vec![f.one(), f.zero()]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let f = Field::prime(7).unwrap();
        let a = FiniteAlgebra::k_x_k(&f);
        let b = FiniteAlgebra::from_json(&f, &a.to_json()).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        let c = FiniteAlgebra::from_json(&f, &serde_json::json!({"dim": 1, "unit": 0, "mult": [[[1]]]})).unwrap();
        assert_eq!(c.dim(), 1);
    }

    #[test]
    fn default_omega_takes_value_one_on_unit() {
        let f = Field::prime(7).unwrap();
        for a in [FiniteAlgebra::dual_numbers(&f), FiniteAlgebra::k_x_k(&f), FiniteAlgebra::matrix2(&f)] {
            let w = a.default_omega().unwrap();
            assert!(f.is_one(&a.pairing(&w, a.unit())));
        }
    }

    #[test]
    fn zero_map_is_a_q_derivation() {
        let c = ctx();
        let alg = GradedAlgebra::from_finite(&c, &FiniteAlgebra::dual_numbers(c.field())).unwrap();
        let d = GradedMap { shift: 1, maps: vec![] };
        q_leibniz_check(&alg, &d).unwrap();
        let ad1 = ad_q(&alg, alg.unit(), 0).unwrap();
        assert!(ad1.is_zero());
    }

    #[test]
    fn sign_identity() {
        sign_identity_check(&QContext::prime(7, 2, 3).unwrap()).unwrap();
        sign_identity_check(&QContext::prime(5, 4, 2).unwrap()).unwrap();
        sign_identity_check(&QContext::prime(13, 5, 4).unwrap()).unwrap();
    }
}
