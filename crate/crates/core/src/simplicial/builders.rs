use std::collections::HashMap;
use std::sync::Arc;

use serde_json::Value;

use super::{CosimplicialModule, SimplicialModule};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::qdga::{CosimplicialAlgebra, FiniteAlgebra, GradedAlgebra, Grading};
use crate::rings::{Elem, QContext};

const DEFAULT_MAX_DIM: usize = 4096;

/// Largest dimension a builder may create in one degree; `NCOMPLEX_MAX_DIM` overrides it.
pub fn max_dim() -> usize {
    std::env::var("NCOMPLEX_MAX_DIM").ok().and_then(|v| v.parse().ok()).unwrap_or(DEFAULT_MAX_DIM)
}

pub fn size_guard(what: &str, dim: usize) -> Result<()> {
    let limit = max_dim();
    if dim > limit {
        return Err(Error::SizeGuard(format!("{what} needs dimension {dim}, limit is {limit} (set NCOMPLEX_MAX_DIM)")));
    }
    Ok(())
}

/// A finite simplicial complex given by its facets; a nonempty set is a simplex iff it
/// is a singleton or lies in some facet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplexK {
    vertices: usize,
    facets: Vec<Vec<usize>>,
}

impl SimplicialComplexK {
    pub fn new(vertices: usize, facets: Vec<Vec<usize>>) -> Result<SimplicialComplexK> {
        let mut clean = Vec::new();
        for f in facets {
            if f.is_empty() {
                return Err(Error::Parse("empty facet".into()));
            }
            if let Some(&v) = f.iter().find(|&&v| v >= vertices) {
                return Err(Error::OutOfRange(format!("vertex {v} with {vertices} vertices")));
            }
            let mut f = f;
            f.sort_unstable();
            f.dedup();
            clean.push(f);
        }
        Ok(SimplicialComplexK { vertices, facets: clean })
    }

    pub fn point() -> SimplicialComplexK {
        SimplicialComplexK { vertices: 1, facets: vec![vec![0]] }
    }
    pub fn edge() -> SimplicialComplexK {
        SimplicialComplexK { vertices: 2, facets: vec![vec![0, 1]] }
    }
    pub fn triangle_boundary() -> SimplicialComplexK {
        SimplicialComplexK { vertices: 3, facets: vec![vec![0, 1], vec![1, 2], vec![0, 2]] }
    }
    pub fn tetrahedron_boundary() -> SimplicialComplexK {
        SimplicialComplexK { vertices: 4, facets: vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]] }
    }

    pub fn preset(name: &str) -> Option<SimplicialComplexK> {
        match name {
            "point" => Some(Self::point()),
            "edge" => Some(Self::edge()),
            "triangle" | "circle" => Some(Self::triangle_boundary()),
            "tetrahedron" | "sphere" => Some(Self::tetrahedron_boundary()),
            _ => None,
        }
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }
    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    /// `{"vertices": n, "facets": [[0, 1], ...]}`
    pub fn from_json(v: &Value) -> Result<SimplicialComplexK> {
        let n = v.get("vertices").and_then(Value::as_u64).ok_or_else(|| Error::Parse("complex: missing `vertices`".into()))?;
        let facets = v
            .get("facets")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("complex: missing `facets`".into()))?
            .iter()
            .map(|f| {
                f.as_array()
                    .ok_or_else(|| Error::Parse("facet is not an array".into()))?
                    .iter()
                    .map(|x| x.as_u64().map(|x| x as usize).ok_or_else(|| Error::Parse("bad vertex index".into())))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        SimplicialComplexK::new(n as usize, facets)
    }

    /// One facet per line, vertices separated by whitespace; `#` starts a comment.
    pub fn parse_text(s: &str) -> Result<SimplicialComplexK> {
        let mut facets = Vec::new();
        for line in s.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let f = line
                .split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad vertex `{t}`"))))
                .collect::<Result<Vec<_>>>()?;
            facets.push(f);
        }
        let vertices = facets.iter().flatten().max().map_or(0, |&v| v + 1);
        SimplicialComplexK::new(vertices, facets)
    }

    pub fn parse(s: &str) -> Result<SimplicialComplexK> {
        match serde_json::from_str::<Value>(s) {
            Ok(v) if v.is_object() => Self::from_json(&v),
            _ => Self::parse_text(s),
        }
    }

    pub fn is_face(&self, support: &[usize]) -> bool {
        let mut s = support.to_vec();
        s.sort_unstable();
        s.dedup();
        match s.len() {
            0 => false,
            1 => s[0] < self.vertices,
            _ => self.facets.iter().any(|f| s.iter().all(|v| f.contains(v))),
        }
    }

    /// Strictly increasing vertex lists of the `n`-simplices.
    pub fn simplices(&self, n: usize) -> Vec<Vec<usize>> {
        tuples(self.vertices, n + 1).into_iter().filter(|t| t.windows(2).all(|w| w[0] < w[1]) && self.is_face(t)).collect()
    }

    /// Dimensions of `H_n(K; field)` for `n <= top` from the boundary matrices of
    /// nondegenerate simplices.
    pub fn classical_homology(&self, field: &crate::rings::Field, top: usize) -> Vec<usize> {
        let simplices: Vec<Vec<Vec<usize>>> = (0..=top + 1).map(|n| self.simplices(n)).collect();
        let boundary = |n: usize| -> Matrix {
            // C_n -> C_(n-1)
            let rows = &simplices[n - 1];
            let index: HashMap<&Vec<usize>, usize> = rows.iter().enumerate().map(|(i, s)| (s, i)).collect();
            let mut m = Matrix::zeros(field, rows.len(), simplices[n].len());
            for (j, s) in simplices[n].iter().enumerate() {
                for i in 0..s.len() {
                    let mut face = s.clone();
                    face.remove(i);
                    m.add_at(index[&face], j, &field.from_i64(if i % 2 == 0 { 1 } else { -1 }));
                }
            }
            m
        };
        (0..=top)
            .map(|n| {
                let dim = simplices[n].len();
                let rank_out = if n == 0 { 0 } else { boundary(n).rank() };
                let rank_in = boundary(n + 1).rank();
                dim - rank_out - rank_in
            })
            .collect()
    }
}

/// All tuples in `0..base` of the given length, lexicographically.
fn tuples(base: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out.into_iter().flat_map(|t| (0..base).map(move |v| { let mut u = t.clone(); u.push(v); u })).collect();
    }
    out
}

fn lex_index(t: &[usize], base: usize) -> usize {
    t.iter().fold(0, |acc, &x| acc * base + x)
}

struct Basis {
    tuples: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl Basis {
    fn new(tuples: Vec<Vec<usize>>) -> Basis {
        let index = tuples.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
        Basis { tuples, index }
    }
    fn len(&self) -> usize {
        self.tuples.len()
    }
}

fn removed(t: &[usize], i: usize) -> Vec<usize> {
    let mut u = t.to_vec();
    u.remove(i);
    u
}

fn repeated(t: &[usize], i: usize) -> Vec<usize> {
    let mut u = t.to_vec();
    u.insert(i, t[i]);
    u
}

/// Simplicial module of a simplicial complex: in degree `n`, weakly increasing
/// `(n+1)`-tuples of vertices whose support is a simplex. Faces delete an entry,
/// degeneracies repeat one.
pub fn build_simplicial_set_module(k: &SimplicialComplexK, ctx: &QContext, top: usize) -> Result<SimplicialModule> {
    let fld = ctx.field();
    let bases: Vec<Basis> = (0..=top)
        .map(|n| {
            let ts: Vec<Vec<usize>> =
                tuples(k.vertices, n + 1).into_iter().filter(|t| t.windows(2).all(|w| w[0] <= w[1]) && k.is_face(t)).collect();
            size_guard(&format!("degree {n} of the simplicial module"), ts.len())?;
            Ok(Basis::new(ts))
        })
        .collect::<Result<_>>()?;
    let dims: Vec<usize> = bases.iter().map(Basis::len).collect();
    let mut faces = Vec::new();
    let mut degeneracies = Vec::new();
    for n in 0..top {
        let fs = (0..=n + 1)
            .map(|i| {
                let mut m = Matrix::zeros(fld, dims[n], dims[n + 1]);
                for (j, t) in bases[n + 1].tuples.iter().enumerate() {
                    m.set(bases[n].index[&removed(t, i)], j, fld.one());
                }
                m
            })
            .collect();
        let ss = (0..=n)
            .map(|i| {
                let mut m = Matrix::zeros(fld, dims[n + 1], dims[n]);
                for (j, t) in bases[n].tuples.iter().enumerate() {
                    m.set(bases[n + 1].index[&repeated(t, i)], j, fld.one());
                }
                m
            })
            .collect();
        faces.push(fs);
        degeneracies.push(ss);
    }
    SimplicialModule::new(ctx, dims, faces, Some(degeneracies))
}

/// Cosimplicial algebra of `k`-valued functions on ordered simplices (tuples with
/// repetitions whose support is a simplex), in the basis of indicator functions.
pub fn build_simplicial_forms(k: &SimplicialComplexK, ctx: &QContext, top: usize) -> Result<CosimplicialAlgebra> {
    let fld = ctx.field().clone();
    let bases: Vec<Basis> = (0..=top)
        .map(|n| {
            let ts: Vec<Vec<usize>> = tuples(k.vertices, n + 1).into_iter().filter(|t| k.is_face(t)).collect();
            size_guard(&format!("degree {n} of the simplicial forms"), ts.len())?;
            Ok(Basis::new(ts))
        })
        .collect::<Result<_>>()?;
    let dims: Vec<usize> = bases.iter().map(Basis::len).collect();
    let mut cofaces = Vec::new();
    let mut codegeneracies = Vec::new();
    for n in 0..top {
        // f_i(ω)(x) = ω(x without x_i): the indicator of t pulls back to all u with u \ u_i = t.
        let fs = (0..=n + 1)
            .map(|i| {
                let mut m = Matrix::zeros(&fld, dims[n + 1], dims[n]);
                for (r, u) in bases[n + 1].tuples.iter().enumerate() {
                    m.set(r, bases[n].index[&removed(u, i)], fld.one());
                }
                m
            })
            .collect();
        // s_i(ω)(x) = ω(x with x_i repeated).
        let ss = (0..=n)
            .map(|i| {
                let mut m = Matrix::zeros(&fld, dims[n], dims[n + 1]);
                for (r, t) in bases[n].tuples.iter().enumerate() {
                    m.set(r, bases[n + 1].index[&repeated(t, i)], fld.one());
                }
                m
            })
            .collect();
        cofaces.push(fs);
        codegeneracies.push(ss);
    }
    let module = CosimplicialModule::new(ctx, dims.clone(), cofaces, Some(codegeneracies))?;
    let bases = Arc::new(bases);
    let one = fld.one();
    let table = {
        let bases = bases.clone();
        move |a: usize, i: usize, b: usize, j: usize| -> Vec<(usize, Elem)> {
            let t = &bases[a].tuples[i];
            let u = &bases[b].tuples[j];
            if t[a] != u[0] {
                return vec![];
            }
            let mut w = t.clone();
            w.extend_from_slice(&u[1..]);
            bases[a + b].index.get(&w).map(|&r| vec![(r, one.clone())]).unwrap_or_default()
        }
    };
    // The unit is the constant function 1 on vertices.
    let unit: Vector = vec![fld.one(); dims[0]];
    let algebra = GradedAlgebra::new(ctx, Grading::Natural, dims, unit, Arc::new(table))?;
    CosimplicialAlgebra::new(module, algebra)
}

/// An `A`-bimodule given by the matrices of left and right multiplication by basis
/// elements of `A`.
#[derive(Clone, Debug)]
pub struct Bimodule {
    pub dim: usize,
    pub left: Vec<Matrix>,
    pub right: Vec<Matrix>,
}

impl Bimodule {
    /// `M = A` with multiplication on both sides.
    pub fn regular(a: &FiniteAlgebra) -> Bimodule {
        Bimodule {
            dim: a.dim(),
            left: (0..a.dim()).map(|i| a.left_matrix(i)).collect(),
            right: (0..a.dim()).map(|i| a.right_matrix(i)).collect(),
        }
    }
}

/// `M`-valued Hochschild cochains. `C^n` has basis `(t, k)` for `t` an `n`-tuple of basis
/// indices of `A` and `k` a basis index of `M`, in position `lex(t) * dim M + k`.
pub fn build_hochschild(a: &FiniteAlgebra, m: &Bimodule, ctx: &QContext, top: usize) -> Result<CosimplicialModule> {
    let fld = ctx.field();
    if a.field() != fld {
        return Err(Error::InvalidField("algebra and context fields differ".into()));
    }
    let da = a.dim();
    let dm = m.dim;
    let dims: Vec<usize> = (0..=top)
        .map(|n| {
            let d = da.checked_pow(n as u32).and_then(|x| x.checked_mul(dm)).unwrap_or(usize::MAX);
            size_guard(&format!("degree {n} of the Hochschild cochains"), d)?;
            Ok(d)
        })
        .collect::<Result<_>>()?;
    let unit = a.unit();
    let mut cofaces = Vec::new();
    let mut codegeneracies = Vec::new();
    for n in 0..top {
        let targets = tuples(da, n + 1);
        let mut fs = Vec::new();
        for i in 0..=n + 1 {
            let mut mat = Matrix::zeros(fld, dims[n + 1], dims[n]);
            for x in &targets {
                let row0 = lex_index(x, da) * dm;
                if i == 0 {
                    // x_0 ω(x_1, ..., x_n)
                    let col0 = lex_index(&x[1..], da) * dm;
                    let l = &m.left[x[0]];
                    for r in 0..dm {
                        for c in 0..dm {
                            mat.add_at(row0 + r, col0 + c, l.get(r, c));
                        }
                    }
                } else if i == n + 1 {
                    // ω(x_0, ..., x_(n-1)) x_n
                    let col0 = lex_index(&x[..n], da) * dm;
                    let rm = &m.right[x[n]];
                    for r in 0..dm {
                        for c in 0..dm {
                            mat.add_at(row0 + r, col0 + c, rm.get(r, c));
                        }
                    }
                } else {
                    // ω(x_0, ..., x_(i-1) x_i, ..., x_n)
                    let prod = a.product_basis(x[i - 1], x[i]);
                    for (c, coeff) in prod.iter().enumerate() {
                        if fld.is_zero(coeff) {
                            continue;
                        }
                        let mut y = x[..i - 1].to_vec();
                        y.push(c);
                        y.extend_from_slice(&x[i + 1..]);
                        let col0 = lex_index(&y, da) * dm;
                        for k in 0..dm {
                            mat.add_at(row0 + k, col0 + k, coeff);
                        }
                    }
                }
            }
            fs.push(mat);
        }
        cofaces.push(fs);
        // s_i : C^(n+1) -> C^n inserts the unit after the first i arguments.
        let sources = tuples(da, n);
        let ss = (0..=n)
            .map(|i| {
                let mut mat = Matrix::zeros(fld, dims[n], dims[n + 1]);
                for x in &sources {
                    let row0 = lex_index(x, da) * dm;
                    for (c, coeff) in unit.iter().enumerate() {
                        if fld.is_zero(coeff) {
                            continue;
                        }
                        let mut y = x[..i].to_vec();
                        y.push(c);
                        y.extend_from_slice(&x[i..]);
                        let col0 = lex_index(&y, da) * dm;
                        for k in 0..dm {
                            mat.add_at(row0 + k, col0 + k, coeff);
                        }
                    }
                }
                mat
            })
            .collect();
        codegeneracies.push(ss);
    }
    CosimplicialModule::new(ctx, dims, cofaces, Some(codegeneracies))
}

/// `T^n = A^(⊗(n+1))` with cofaces inserting the unit and codegeneracies multiplying
/// adjacent factors; the product multiplies the last factor of the left argument
/// with the first factor of the right one.
pub fn build_tensor_cosimplicial(a: &FiniteAlgebra, ctx: &QContext, top: usize) -> Result<CosimplicialAlgebra> {
    let fld = ctx.field().clone();
    if a.field() != &fld {
        return Err(Error::InvalidField("algebra and context fields differ".into()));
    }
    let da = a.dim();
    let dims: Vec<usize> = (0..=top)
        .map(|n| {
            let d = da.checked_pow(n as u32 + 1).unwrap_or(usize::MAX);
            size_guard(&format!("degree {n} of the tensor algebra"), d)?;
            Ok(d)
        })
        .collect::<Result<_>>()?;
    let unit = a.unit();
    let mut cofaces = Vec::new();
    let mut codegeneracies = Vec::new();
    for n in 0..top {
        let sources = tuples(da, n + 1);
        let fs = (0..=n + 1)
            .map(|i| {
                let mut mat = Matrix::zeros(&fld, dims[n + 1], dims[n]);
                for (col, x) in sources.iter().enumerate() {
                    for (c, coeff) in unit.iter().enumerate() {
                        if fld.is_zero(coeff) {
                            continue;
                        }
                        let mut y = x[..i].to_vec();
                        y.push(c);
                        y.extend_from_slice(&x[i..]);
                        mat.add_at(lex_index(&y, da), col, coeff);
                    }
                }
                mat
            })
            .collect();
        cofaces.push(fs);
        let longer = tuples(da, n + 2);
        let ss = (0..=n)
            .map(|i| {
                let mut mat = Matrix::zeros(&fld, dims[n], dims[n + 1]);
                for (col, x) in longer.iter().enumerate() {
                    for (c, coeff) in a.product_basis(x[i], x[i + 1]).iter().enumerate() {
                        if fld.is_zero(coeff) {
                            continue;
                        }
                        let mut y = x[..i].to_vec();
                        y.push(c);
                        y.extend_from_slice(&x[i + 2..]);
                        mat.add_at(lex_index(&y, da), col, coeff);
                    }
                }
                mat
            })
            .collect();
        codegeneracies.push(ss);
    }
    let module = CosimplicialModule::new(ctx, dims.clone(), cofaces, Some(codegeneracies))?;
    let alg = a.clone();
    let table = move |p: usize, i: usize, q: usize, j: usize| -> Vec<(usize, Elem)> {
        let mut x = digits(i, da, p + 1);
        let y = digits(j, da, q + 1);
        let last = x.pop().unwrap();
        let mut out = Vec::new();
        for (c, coeff) in alg.product_basis(last, y[0]).iter().enumerate() {
            if alg.field().is_zero(coeff) {
                continue;
            }
            let mut w = x.clone();
            w.push(c);
            w.extend_from_slice(&y[1..]);
            out.push((lex_index(&w, da), coeff.clone()));
        }
        out
    };
    let algebra = GradedAlgebra::new(ctx, Grading::Natural, dims, unit.clone(), Arc::new(table))?;
    CosimplicialAlgebra::new(module, algebra)
}

/// Base-`base` digits of `index`, most significant first, padded to `len`.
pub(crate) fn digits(mut index: usize, base: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for k in (0..len).rev() {
        out[k] = index % base;
        index /= base;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplicial_set_dims() {
        let ctx = QContext::prime(3, 1, 3).unwrap();
        let s = build_simplicial_set_module(&SimplicialComplexK::triangle_boundary(), &ctx, 3).unwrap();
        assert_eq!(s.dims(), &[3, 6, 9, 12]);
        let p = build_simplicial_set_module(&SimplicialComplexK::point(), &ctx, 3).unwrap();
        assert_eq!(p.dims(), &[1, 1, 1, 1]);
    }

    #[test]
    fn forms_dims() {
        let ctx = QContext::prime(3, 1, 3).unwrap();
        let e = build_simplicial_forms(&SimplicialComplexK::edge(), &ctx, 2).unwrap();
        assert_eq!(e.module().dims(), &[2, 4, 8]);
        let p = build_simplicial_forms(&SimplicialComplexK::point(), &ctx, 3).unwrap();
        assert_eq!(p.module().dims(), &[1, 1, 1, 1]);
    }

    #[test]
    fn classical_homology_of_spheres() {
        let f = crate::rings::Field::prime(5).unwrap();
        assert_eq!(SimplicialComplexK::triangle_boundary().classical_homology(&f, 2), vec![1, 1, 0]);
        assert_eq!(SimplicialComplexK::tetrahedron_boundary().classical_homology(&f, 3), vec![1, 0, 1, 0]);
    }

    #[test]
    fn parses_both_formats() {
        let a = SimplicialComplexK::parse(r#"{"vertices": 3, "facets": [[0,1],[1,2],[0,2]]}"#).unwrap();
        let b = SimplicialComplexK::parse("0 1\n1 2\n# closing edge\n0 2\n").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn size_guard_trips() {
        let ctx = QContext::prime(7, 2, 3).unwrap();
        let a = FiniteAlgebra::preset("matrix2", ctx.field()).unwrap();
        assert!(matches!(build_hochschild(&a, &Bimodule::regular(&a), &ctx, 7), Err(Error::SizeGuard(_))));
    }
}
