//! Dense exact linear algebra: matrices, canonical subspaces and subquotients.

use serde_json::Value;

use crate::error::{Error, Result};
use crate::rings::{Elem, Field};

pub type Vector = Vec<Elem>;

#[derive(Clone, Debug)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

/// Reduced row echelon form of a list of rows.
struct Echelon {
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

fn echelon(field: &Field, mut rows: Vec<Vector>, cols: usize) -> Echelon {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !field.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, p);
        let inv = field.inv(&rows[r][c]).unwrap();
        if !field.is_one(&inv) {
            for x in rows[r][c..].iter_mut() {
                *x = field.mul(x, &inv);
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || field.is_zero(&row[c]) {
                continue;
            }
            let factor = field.neg(&row[c]);
            for (x, y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                field.add_mul(x, &factor, y);
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    Echelon { rows, pivots }
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn scalar(field: &Field, n: usize, c: &Elem) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = c.clone();
        }
        m
    }

    pub fn from_rows(field: &Field, rows: usize, cols: usize, rows_data: Vec<Vector>) -> Matrix {
        assert_eq!(rows_data.len(), rows);
        let data: Vec<Elem> = rows_data.into_iter().inspect(|r| assert_eq!(r.len(), cols)).flatten().collect();
        Matrix { field: field.clone(), rows, cols, data }
    }

    /// Matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(field: &Field, rows: usize, columns: &[Vector]) -> Matrix {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, x) in c.iter().enumerate() {
                m.data[i * columns.len() + j] = x.clone();
            }
        }
        m
    }

    pub fn from_i64(field: &Field, rows: usize, cols: usize, entries: &[i64]) -> Matrix {
        assert_eq!(entries.len(), rows * cols);
        Matrix { field: field.clone(), rows, cols, data: entries.iter().map(|&x| field.from_i64(x)).collect() }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.data[i * self.cols + j] = v;
    }

    /// `self[i][j] += v`
    pub fn add_at(&mut self, i: usize, j: usize, v: &Elem) {
        let k = i * self.cols + j;
        self.data[k] = self.field.add(&self.data[k], v);
    }

    pub fn row(&self, i: usize) -> Vector {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Matrix::identity(&self.field, self.rows)
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape(), "matrix sum shape mismatch");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| self.field.add(a, b)).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape(), "matrix difference shape mismatch");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| self.field.sub(a, b)).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Matrix {
        let data = self.data.iter().map(|a| self.field.neg(a)).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &Elem) -> Matrix {
        let data = self.data.iter().map(|a| self.field.mul(a, c)).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    /// Matrix product `self * other`. Zero entries are skipped, which keeps the
    /// sparse coface matrices cheap.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch {:?} * {:?}", self.shape(), other.shape());
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                let brow = &other.data[k * other.cols..(k + 1) * other.cols];
                let orow = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (o, b) in orow.iter_mut().zip(brow) {
                    f.add_mul(o, a, b);
                }
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut acc = Matrix::identity(&self.field, self.rows);
        for _ in 0..k {
            acc = self.mul(&acc);
        }
        acc
    }

    pub fn apply(&self, v: &[Elem]) -> Vector {
        assert_eq!(v.len(), self.cols);
        let f = &self.field;
        (0..self.rows)
            .map(|i| {
                let mut acc = f.zero();
                for (a, b) in self.data[i * self.cols..(i + 1) * self.cols].iter().zip(v) {
                    f.add_mul(&mut acc, a, b);
                }
                acc
            })
            .collect()
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let rows = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i);
                r.extend(other.row(i));
                r
            })
            .collect();
        Matrix::from_rows(&self.field, self.rows, self.cols + other.cols, rows)
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn block_diag(&self, other: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(&self.field, self.rows + other.rows, self.cols + other.cols);
        m.set_block(0, 0, self);
        m.set_block(self.rows, self.cols, other);
        m
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r0 + i, c0 + j, block.get(i, j).clone());
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        let data = (0..rows).flat_map(|i| (0..cols).map(move |j| (i, j))).map(|(i, j)| self.get(r0 + i, c0 + j).clone()).collect();
        Matrix { field: self.field.clone(), rows, cols, data }
    }

    /// Kronecker product; basis `(i, j)` of the result is index `i * other_dim + j`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let f = &self.field;
        let mut m = Matrix::zeros(f, self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if f.is_zero(a) {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        m.set(i * other.rows + k, j * other.cols + l, f.mul(a, other.get(k, l)));
                    }
                }
            }
        }
        m
    }

    pub fn rank(&self) -> usize {
        echelon(&self.field, self.row_vectors(), self.cols).pivots.len()
    }

    pub fn kernel(&self) -> Subspace {
        let e = echelon(&self.field, self.row_vectors(), self.cols);
        let f = &self.field;
        let mut basis = Vec::new();
        let mut pivot_of = vec![None; self.cols];
        for (r, &c) in e.pivots.iter().enumerate() {
            pivot_of[c] = Some(r);
        }
        for free in (0..self.cols).filter(|&c| pivot_of[c].is_none()) {
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (r, &c) in e.pivots.iter().enumerate() {
                v[c] = f.neg(&e.rows[r][free]);
            }
            basis.push(v);
        }
        Subspace::span(f, self.cols, basis)
    }

    pub fn image(&self) -> Subspace {
        Subspace::span(&self.field, self.rows, self.columns())
    }

    /// Some `x` with `self * x = b`, free variables set to zero; `None` if inconsistent.
    pub fn solve(&self, b: &[Elem]) -> Option<Vector> {
        assert_eq!(b.len(), self.rows);
        let rows = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i);
                r.push(b[i].clone());
                r
            })
            .collect();
        let e = echelon(&self.field, rows, self.cols + 1);
        if e.pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (r, &c) in e.pivots.iter().enumerate() {
            x[c] = e.rows[r][self.cols].clone();
        }
        Some(x)
    }

    /// Solves `self * X = rhs` column by column.
    pub fn solve_matrix(&self, rhs: &Matrix) -> Option<Matrix> {
        let cols = rhs.columns().iter().map(|b| self.solve(b)).collect::<Option<Vec<_>>>()?;
        Some(Matrix::from_columns(&self.field, self.cols, &cols))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(&self.field, n));
        let e = echelon(&self.field, aug.row_vectors(), n);
        if e.pivots.len() < n {
            return None;
        }
        let rows = e.rows.into_iter().map(|r| r[n..].to_vec()).collect();
        Some(Matrix::from_rows(&self.field, n, n, rows))
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn to_json(&self) -> Value {
        Value::Array((0..self.rows).map(|i| Value::Array(self.row(i).iter().map(|x| self.field.to_json(x)).collect())).collect())
    }

    /// Parses a JSON array of rows with the given shape.
    pub fn from_json(field: &Field, rows: usize, cols: usize, v: &Value) -> Result<Matrix> {
        let bad = |msg: &str| Error::Parse(format!("matrix: {msg}"));
        let arr = v.as_array().ok_or_else(|| bad("expected an array of rows"))?;
        if arr.len() != rows && !(rows == 0 && arr.is_empty()) {
            return Err(Error::DimensionMismatch(format!("expected {rows} rows, found {}", arr.len())));
        }
        let mut data = Vec::with_capacity(rows * cols);
        for r in arr {
            let r = r.as_array().ok_or_else(|| bad("row is not an array"))?;
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!("expected {cols} columns, found {}", r.len())));
            }
            for x in r {
                data.push(field.parse_json(x)?);
            }
        }
        Ok(Matrix { field: field.clone(), rows, cols, data })
    }
}

/// A linear subspace stored by its reduced row echelon basis, so equal subspaces
/// have identical bases.
#[derive(Clone, Debug)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.basis == other.basis
    }
}

impl Subspace {
    pub fn span(field: &Field, ambient: usize, vectors: Vec<Vector>) -> Subspace {
        let e = echelon(field, vectors, ambient);
        Subspace { field: field.clone(), ambient, basis: e.rows, pivots: e.pivots }
    }

    pub fn zero(field: &Field, ambient: usize) -> Subspace {
        Subspace { field: field.clone(), ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: &Field, ambient: usize) -> Subspace {
        Matrix::identity(field, ambient).image()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }
    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// The residue of `v` after eliminating the pivot coordinates.
    pub fn reduce(&self, v: &[Elem]) -> Vector {
        let f = &self.field;
        let mut v = v.to_vec();
        for (row, &c) in self.basis.iter().zip(&self.pivots) {
            if f.is_zero(&v[c]) {
                continue;
            }
            let factor = f.neg(&v[c]);
            for (x, y) in v.iter_mut().zip(row) {
                f.add_mul(x, &factor, y);
            }
        }
        v
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        assert_eq!(v.len(), self.ambient);
        self.reduce(v).iter().all(|x| self.field.is_zero(x))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut v = self.basis.clone();
        v.extend(other.basis.iter().cloned());
        Subspace::span(&self.field, self.ambient, v)
    }

    /// Basis vectors as the columns of a matrix.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_columns(&self.field, self.ambient, &self.basis)
    }
}

/// `dim Z - dim B`, after checking `B ⊆ Z`.
pub fn subquotient_dim(z: &Subspace, b: &Subspace) -> Result<usize> {
    if !b.is_subspace_of(z) {
        return Err(Error::ContainmentViolation);
    }
    Ok(z.dim() - b.dim())
}

/// A subquotient `Z / B` with a fixed basis of representatives and a coordinate map.
#[derive(Clone, Debug)]
pub struct Quotient {
    field: Field,
    cycles: Subspace,
    boundaries: Subspace,
    reps: Vec<Vector>,
    /// Left inverse data of the matrix `[B basis | reps]`: `transform * v` gives
    /// the coordinates in the first columns and zeros below iff `v` lies in `Z`.
    transform: Matrix,
}

impl Quotient {
    pub fn new(cycles: Subspace, boundaries: Subspace) -> Result<Quotient> {
        if !boundaries.is_subspace_of(&cycles) {
            return Err(Error::ContainmentViolation);
        }
        let field = cycles.field().clone();
        let n = cycles.ambient_dim();
        let mut current = boundaries.clone();
        let mut reps = Vec::new();
        for z in cycles.basis() {
            if !current.contains(z) {
                reps.push(z.clone());
                current = current.sum(&Subspace::span(&field, n, vec![z.clone()]));
            }
        }
        let mut cols: Vec<Vector> = boundaries.basis().to_vec();
        cols.extend(reps.iter().cloned());
        let m = Matrix::from_columns(&field, n, &cols);
        let k = cols.len();
        let aug = m.hstack(&Matrix::identity(&field, n));
        let e = echelon(&field, aug.row_vectors(), k + n);
        debug_assert!(e.pivots.iter().take(k).copied().eq(0..k));
        // Complete to an n x n transform: rows past the echelon rows are never needed
        // because the echelon form of an invertible augmented system has n rows.
        let rows: Vec<Vector> = e.rows.into_iter().map(|r| r[k..].to_vec()).collect();
        let transform = Matrix::from_rows(&field, n, n, rows);
        Ok(Quotient { field, cycles, boundaries, reps, transform })
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }
    pub fn ambient_dim(&self) -> usize {
        self.cycles.ambient_dim()
    }
    pub fn cycles(&self) -> &Subspace {
        &self.cycles
    }
    pub fn boundaries(&self) -> &Subspace {
        &self.boundaries
    }
    pub fn representatives(&self) -> &[Vector] {
        &self.reps
    }

    /// Coordinates of the class of `v` on the representative basis; fails unless `v ∈ Z`.
    pub fn coords(&self, v: &[Elem]) -> Result<Vector> {
        let t = self.transform.apply(v);
        let b = self.boundaries.dim();
        let k = b + self.reps.len();
        if t[k..].iter().any(|x| !self.field.is_zero(x)) {
            return Err(Error::ContainmentViolation);
        }
        Ok(t[b..k].to_vec())
    }

    pub fn is_zero_class(&self, v: &[Elem]) -> Result<bool> {
        Ok(self.coords(v)?.iter().all(|x| self.field.is_zero(x)))
    }

    /// Matrix of the map `self -> target` induced by `f`.
    pub fn induced(&self, target: &Quotient, f: &Matrix) -> Result<Matrix> {
        self.induced_on(target, f, &self.reps)
    }

    fn induced_on(&self, target: &Quotient, f: &Matrix, reps: &[Vector]) -> Result<Matrix> {
        assert_eq!(f.cols(), self.ambient_dim());
        assert_eq!(f.rows(), target.ambient_dim());
        let cols = reps.iter().map(|r| target.coords(&f.apply(r))).collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(&self.field, target.dim(), &cols))
    }

    /// As [`Quotient::induced`], re-derived with every representative shifted by a
    /// boundary; fails if the two matrices differ.
    pub fn induced_checked(&self, target: &Quotient, f: &Matrix) -> Result<Matrix> {
        let m = self.induced(target, f)?;
        let fld = &self.field;
        let shift = self.boundaries.basis().iter().fold(vec![fld.zero(); self.ambient_dim()], |acc, b| {
            acc.iter().zip(b).map(|(x, y)| fld.add(x, y)).collect()
        });
        let shifted: Vec<Vector> = self.reps.iter().map(|r| r.iter().zip(&shift).map(|(x, y)| fld.add(x, y)).collect()).collect();
        let m2 = self.induced_on(target, f, &shifted)?;
        if m != m2 {
            return Err(Error::PremiseNotMet("induced map depends on the choice of representatives".into()));
        }
        Ok(m)
    }
}

/// Exactness of `A --f--> X --g--> B` at `X`, on matrices.
pub fn exact_at(f: &Matrix, g: &Matrix) -> bool {
    assert_eq!(f.rows(), g.cols());
    g.mul(f).is_zero() && f.rank() == g.cols() - g.rank()
}

pub fn vec_add(field: &Field, a: &[Elem], b: &[Elem]) -> Vector {
    a.iter().zip(b).map(|(x, y)| field.add(x, y)).collect()
}

pub fn vec_sub(field: &Field, a: &[Elem], b: &[Elem]) -> Vector {
    a.iter().zip(b).map(|(x, y)| field.sub(x, y)).collect()
}

pub fn vec_scale(field: &Field, c: &Elem, a: &[Elem]) -> Vector {
    a.iter().map(|x| field.mul(c, x)).collect()
}

pub fn is_zero_vec(field: &Field, a: &[Elem]) -> bool {
    a.iter().all(|x| field.is_zero(x))
}

pub fn unit_vector(field: &Field, n: usize, i: usize) -> Vector {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7() -> Field {
        Field::prime(7).unwrap()
    }

    fn shift3() -> Matrix {
        Matrix::from_i64(&f7(), 3, 3, &[0, 1, 0, 0, 0, 1, 0, 0, 0])
    }

    #[test]
    fn rank_examples() {
        let f = f7();
        assert_eq!(Matrix::zeros(&f, 3, 3).rank(), 0);
        assert_eq!(Matrix::identity(&f, 4).rank(), 4);
        assert_eq!(shift3().rank(), 2);
    }

    #[test]
    fn kernel_and_image_of_shift() {
        let f = f7();
        assert_eq!(Matrix::identity(&f, 3).kernel().dim(), 0);
        let k = shift3().kernel();
        assert_eq!(k.basis(), &[unit_vector(&f, 3, 0)]);
        let im = shift3().image();
        assert_eq!(im, Subspace::span(&f, 3, vec![unit_vector(&f, 3, 0), unit_vector(&f, 3, 1)]));
    }

    #[test]
    fn subquotient_examples() {
        let f = f7();
        let e = |i| unit_vector(&f, 3, i);
        let z = Subspace::span(&f, 3, vec![e(0), e(1)]);
        assert_eq!(subquotient_dim(&z, &z).unwrap(), 0);
        assert_eq!(subquotient_dim(&Subspace::full(&f, 3), &Subspace::zero(&f, 3)).unwrap(), 3);
        assert_eq!(subquotient_dim(&z, &Subspace::span(&f, 3, vec![e(0)])).unwrap(), 1);
        assert_eq!(subquotient_dim(&Subspace::span(&f, 3, vec![e(0)]), &z), Err(Error::ContainmentViolation));
    }

    #[test]
    fn solve_examples() {
        let f = f7();
        let b = vec![f.from_i64(3), f.from_i64(5)];
        assert_eq!(Matrix::identity(&f, 2).solve(&b), Some(b.clone()));
        assert_eq!(Matrix::zeros(&f, 2, 2).solve(&b), None);
        assert_eq!(shift3().solve(&unit_vector(&f, 3, 0)), Some(unit_vector(&f, 3, 1)));
    }

    #[test]
    fn inverse_roundtrip() {
        let f = f7();
        let m = Matrix::from_i64(&f, 3, 3, &[1, 2, 3, 0, 1, 4, 5, 6, 0]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(shift3().inverse().is_none());
    }

    #[test]
    fn quotient_coordinates() {
        let f = f7();
        let e = |i| unit_vector(&f, 3, i);
        let z = Subspace::span(&f, 3, vec![e(0), e(1)]);
        let b = Subspace::span(&f, 3, vec![e(0)]);
        let q = Quotient::new(z, b).unwrap();
        assert_eq!(q.dim(), 1);
        let v = vec![f.from_i64(4), f.from_i64(2), f.zero()];
        assert_eq!(q.coords(&v).unwrap(), vec![f.from_i64(2)]);
        assert!(q.coords(&e(2)).is_err());
    }
}
