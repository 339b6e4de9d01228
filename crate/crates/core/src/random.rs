//! Seeded random instances for property checks.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::linalg::Matrix;
use crate::ncomplex::{GradedSes, NComplex, NDiffModule, ShortExactSequence};
use crate::rings::{Elem, Field, QContext};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_elem(field: &Field, rng: &mut impl Rng) -> Elem {
    match field.modulus() {
        Some(p) => field.from_i64(rng.gen_range(0..p) as i64),
        None => {
            let degree = field.cyclotomic_polynomial().map_or(1, |c| c.len() - 1);
            let coeffs = (0..degree).map(|_| num::BigRational::from_integer(rng.gen_range(-2i64..=2).into())).collect();
            field.from_poly(coeffs)
        }
    }
}

pub fn random_matrix(field: &Field, rows: usize, cols: usize, rng: &mut impl Rng) -> Matrix {
    let mut m = Matrix::zeros(field, rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m.set(i, j, random_elem(field, rng));
        }
    }
    m
}

/// Product of a random unit lower and a random unit upper triangular matrix.
pub fn random_invertible(field: &Field, n: usize, rng: &mut impl Rng) -> Matrix {
    let mut l = Matrix::identity(field, n);
    let mut u = Matrix::identity(field, n);
    for i in 0..n {
        for j in 0..i {
            l.set(i, j, random_elem(field, rng));
            u.set(j, i, random_elem(field, rng));
        }
    }
    l.mul(&u)
}

/// Random lengths in `1..=N` summing to `dim`.
pub fn random_partition(dim: usize, order: usize, rng: &mut impl Rng) -> Vec<usize> {
    let mut left = dim;
    let mut out = Vec::new();
    while left > 0 {
        let k = rng.gen_range(1..=order.min(left));
        out.push(k);
        left -= k;
    }
    out
}

/// `d` with Jordan strings of the given lengths, `d v_j = v_(j+1)` inside each string.
pub fn jordan_matrix(field: &Field, lengths: &[usize]) -> Matrix {
    let dim = lengths.iter().sum();
    let mut d = Matrix::zeros(field, dim, dim);
    let mut off = 0;
    for &len in lengths {
        for j in 0..len.saturating_sub(1) {
            d.set(off + j + 1, off + j, field.one());
        }
        off += len;
    }
    d
}

/// A random module with `d^N = 0`: random Jordan strings conjugated by a random
/// change of basis.
pub fn random_module(ctx: &QContext, dim: usize, rng: &mut impl Rng) -> NDiffModule {
    let lengths = random_partition(dim, ctx.order(), rng);
    let d = jordan_matrix(ctx.field(), &lengths);
    let p = random_invertible(ctx.field(), dim, rng);
    let p_inv = p.inverse().expect("unit triangular product is invertible");
    NDiffModule::new(ctx, p.mul(&d).mul(&p_inv)).expect("conjugate of a nilpotent Jordan matrix")
}

/// A random strictly upper triangular matrix, resampled until its N-th power vanishes.
/// Returns `None` if `tries` samples all fail.
pub fn random_upper_module(ctx: &QContext, dim: usize, tries: usize, rng: &mut impl Rng) -> Option<NDiffModule> {
    for _ in 0..tries {
        let mut d = Matrix::zeros(ctx.field(), dim, dim);
        for i in 0..dim {
            for j in i + 1..dim {
                d.set(i, j, random_elem(ctx.field(), rng));
            }
        }
        if let Ok(m) = NDiffModule::new(ctx, d) {
            return Some(m);
        }
    }
    None
}

/// A random module map `E -> F`: a random element of the solution space of
/// `X d_E = d_F X`.
pub fn random_module_map(e: &NDiffModule, f: &NDiffModule, rng: &mut impl Rng) -> Matrix {
    let fld = e.ctx().field();
    let (r, c) = (f.dim(), e.dim());
    let mut system = Matrix::zeros(fld, r * c, r * c);
    for i in 0..r {
        for j in 0..c {
            let mut x = Matrix::zeros(fld, r, c);
            x.set(i, j, fld.one());
            let l = f.d().mul(&x).sub(&x.mul(e.d()));
            for a in 0..r {
                for b in 0..c {
                    system.set(a * c + b, i * c + j, l.get(a, b).clone());
                }
            }
        }
    }
    let kernel = system.kernel();
    let mut x = Matrix::zeros(fld, r, c);
    for v in kernel.basis() {
        let s = random_elem(fld, rng);
        for a in 0..r {
            for b in 0..c {
                x.add_at(a, b, &fld.mul(&s, &v[a * c + b]));
            }
        }
    }
    x
}

fn restrict(d: &Matrix, rows: &[usize], cols: &[usize]) -> Matrix {
    let mut m = Matrix::zeros(d.field(), rows.len(), cols.len());
    for (a, &i) in rows.iter().enumerate() {
        for (b, &j) in cols.iter().enumerate() {
            m.set(a, b, d.get(i, j).clone());
        }
    }
    m
}

fn selection(field: &Field, picked: &[usize], dim: usize) -> Matrix {
    let mut m = Matrix::zeros(field, dim, picked.len());
    for (b, &i) in picked.iter().enumerate() {
        m.set(i, b, field.one());
    }
    m
}

/// A random short exact sequence `0 -> E -> F -> G -> 0` with `dim F = dim`.
///
/// `E` is spanned by tails of the Jordan strings of `F`, which are `d`-stable; all three
/// modules are then put in random bases.
pub fn random_ses(ctx: &QContext, dim: usize, rng: &mut impl Rng) -> ShortExactSequence {
    let fld = ctx.field();
    let lengths = random_partition(dim, ctx.order(), rng);
    let d = jordan_matrix(fld, &lengths);
    let (mut sub, mut quo) = (Vec::new(), Vec::new());
    let mut off = 0;
    for &len in &lengths {
        let cut = rng.gen_range(0..=len);
        quo.extend(off..off + cut);
        sub.extend(off + cut..off + len);
        off += len;
    }
    let d_e = restrict(&d, &sub, &sub);
    let d_g = restrict(&d, &quo, &quo);
    let alpha = selection(fld, &sub, dim);
    let beta = selection(fld, &quo, dim).transpose();
    let p = random_invertible(fld, dim, rng);
    let a = random_invertible(fld, sub.len(), rng);
    let b = random_invertible(fld, quo.len(), rng);
    let (p_inv, a_inv, b_inv) = (p.inverse().unwrap(), a.inverse().unwrap(), b.inverse().unwrap());
    let e = NDiffModule::new(ctx, a.mul(&d_e).mul(&a_inv)).unwrap();
    let f = NDiffModule::new(ctx, p.mul(&d).mul(&p_inv)).unwrap();
    let g = NDiffModule::new(ctx, b.mul(&d_g).mul(&b_inv)).unwrap();
    ShortExactSequence::new(e, f, g, p.mul(&alpha).mul(&a_inv), b.mul(&beta).mul(&p_inv)).expect("generated sequence is exact")
}

/// Strings `(start degree, length)` with lengths in `1..=N`, clipped to the window.
fn random_strings(lo: i64, hi: i64, order: usize, count: usize, rng: &mut impl Rng) -> Vec<(i64, usize)> {
    (0..count)
        .map(|_| {
            let start = rng.gen_range(lo..=hi);
            let len = rng.gen_range(1..=order).min((hi - start + 1) as usize);
            (start, len)
        })
        .collect()
}

/// Basis layout of a string complex: for each string and position, its degree and index.
fn layout(lo: i64, hi: i64, strings: &[(i64, usize)]) -> (Vec<usize>, Vec<Vec<usize>>) {
    let mut dims = vec![0; (hi - lo + 1) as usize];
    let mut index = Vec::new();
    for &(s, len) in strings {
        let mut idx = Vec::new();
        for j in 0..len {
            let k = (s + j as i64 - lo) as usize;
            idx.push(dims[k]);
            dims[k] += 1;
        }
        index.push(idx);
    }
    (dims, index)
}

fn string_maps(field: &Field, lo: i64, dims: &[usize], strings: &[(i64, usize)], index: &[Vec<usize>]) -> Vec<Matrix> {
    let mut maps: Vec<Matrix> = (0..dims.len().saturating_sub(1)).map(|k| Matrix::zeros(field, dims[k + 1], dims[k])).collect();
    for (t, &(s, len)) in strings.iter().enumerate() {
        for j in 0..len.saturating_sub(1) {
            let k = (s + j as i64 - lo) as usize;
            maps[k].set(index[t][j + 1], index[t][j], field.one());
        }
    }
    maps
}

fn conjugate_degreewise(maps: &[Matrix], bases: &[Matrix]) -> Vec<Matrix> {
    maps.iter().enumerate().map(|(k, m)| bases[k + 1].mul(m).mul(&bases[k].inverse().unwrap())).collect()
}

/// A random graded complex on `[lo, hi]` made of `strings` Jordan strings, each in a
/// random basis per degree.
pub fn random_complex(ctx: &QContext, lo: i64, hi: i64, strings: usize, rng: &mut impl Rng) -> NComplex {
    let fld = ctx.field();
    let s = random_strings(lo, hi, ctx.order(), strings, rng);
    let (dims, index) = layout(lo, hi, &s);
    let maps = string_maps(fld, lo, &dims, &s, &index);
    let bases: Vec<Matrix> = dims.iter().map(|&n| random_invertible(fld, n, rng)).collect();
    NComplex::new(ctx, lo, dims, conjugate_degreewise(&maps, &bases)).expect("string complexes are nilpotent")
}

/// A random degreewise short exact sequence of graded complexes on `[lo, hi]`.
pub fn random_graded_ses(ctx: &QContext, lo: i64, hi: i64, strings: usize, rng: &mut impl Rng) -> Result<GradedSes> {
    let fld = ctx.field();
    let s = random_strings(lo, hi, ctx.order(), strings, rng);
    let cuts: Vec<usize> = s.iter().map(|&(_, len)| rng.gen_range(0..=len)).collect();
    let tails: Vec<(i64, usize)> = s.iter().zip(&cuts).map(|(&(st, len), &c)| (st + c as i64, len - c)).collect();
    let heads: Vec<(i64, usize)> = s.iter().zip(&cuts).map(|(&(st, _), &c)| (st, c)).collect();
    let (dims_f, idx_f) = layout(lo, hi, &s);
    let (dims_e, idx_e) = layout(lo, hi, &tails);
    let (dims_g, idx_g) = layout(lo, hi, &heads);
    let maps_f = string_maps(fld, lo, &dims_f, &s, &idx_f);
    let maps_e = string_maps(fld, lo, &dims_e, &tails, &idx_e);
    let maps_g = string_maps(fld, lo, &dims_g, &heads, &idx_g);
    let width = (hi - lo + 1) as usize;
    let mut alpha: Vec<Matrix> = (0..width).map(|k| Matrix::zeros(fld, dims_f[k], dims_e[k])).collect();
    let mut beta: Vec<Matrix> = (0..width).map(|k| Matrix::zeros(fld, dims_g[k], dims_f[k])).collect();
    for (t, &(st, len)) in s.iter().enumerate() {
        for j in 0..len {
            let k = (st + j as i64 - lo) as usize;
            if j < cuts[t] {
                beta[k].set(idx_g[t][j], idx_f[t][j], fld.one());
            } else {
                alpha[k].set(idx_f[t][j], idx_e[t][j - cuts[t]], fld.one());
            }
        }
    }
    let pf: Vec<Matrix> = dims_f.iter().map(|&n| random_invertible(fld, n, rng)).collect();
    let pe: Vec<Matrix> = dims_e.iter().map(|&n| random_invertible(fld, n, rng)).collect();
    let pg: Vec<Matrix> = dims_g.iter().map(|&n| random_invertible(fld, n, rng)).collect();
    let e = NComplex::new(ctx, lo, dims_e, conjugate_degreewise(&maps_e, &pe))?;
    let f = NComplex::new(ctx, lo, dims_f, conjugate_degreewise(&maps_f, &pf))?;
    let g = NComplex::new(ctx, lo, dims_g, conjugate_degreewise(&maps_g, &pg))?;
    let alpha: Vec<Matrix> = (0..width).map(|k| pf[k].mul(&alpha[k]).mul(&pe[k].inverse().unwrap())).collect();
    let beta: Vec<Matrix> = (0..width).map(|k| pg[k].mul(&beta[k]).mul(&pf[k].inverse().unwrap())).collect();
    let (e2, f2, g2) = (e.clone(), f.clone(), g.clone());
    GradedSes::new(
        e,
        f,
        g,
        |k| if k < lo || k > hi { Matrix::zeros(fld, f2.dim(k), e2.dim(k)) } else { alpha[(k - lo) as usize].clone() },
        |k| if k < lo || k > hi { Matrix::zeros(fld, g2.dim(k), f2.dim(k)) } else { beta[(k - lo) as usize].clone() },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_deterministic() {
        let ctx = QContext::prime(7, 2, 3).unwrap();
        let a = random_module(&ctx, 5, &mut rng(3));
        let b = random_module(&ctx, 5, &mut rng(3));
        assert_eq!(a.d(), b.d());
    }

    #[test]
    fn generated_objects_are_valid() {
        let ctx = QContext::prime(5, 2, 4).unwrap();
        let mut r = rng(11);
        for _ in 0..5 {
            let e = random_module(&ctx, 4, &mut r);
            let f = random_module(&ctx, 3, &mut r);
            assert!(e.is_module_map(&f, &random_module_map(&e, &f, &mut r)));
            random_ses(&ctx, 6, &mut r);
            random_graded_ses(&ctx, 0, 6, 4, &mut r).unwrap();
        }
        assert!(random_upper_module(&ctx, 3, 10, &mut r).is_some());
    }
}
