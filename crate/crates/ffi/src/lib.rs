//! C interface. Every function returns an [`NcStatus`]; on failure the message is kept in a
//! thread-local slot readable through [`nc_last_error`]. Objects are opaque handles released
//! with their matching `_free` function, strings returned to C with [`nc_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use nilcomplex::ncomplex::{HomologyTable, NComplex, NDiffModule};
use nilcomplex::qdga::FiniteAlgebra;
use nilcomplex::simplicial::{build_hochschild, build_simplicial_set_module, theorem234_check, theorem4_dictionary, Bimodule, SimplicialComplexK};
use nilcomplex::{Error, Field, Matrix, QContext};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    NotNilpotent = 4,
    AssumptionViolation = 5,
    DimensionMismatch = 6,
    Mismatch = 7,
    Failure = 8,
    Panic = 9,
}

/// `(field, q, N)` with its assumption flags.
pub struct NcContext(QContext);
/// A graded complex with `d^N = 0`.
pub struct NcComplex(NComplex);
/// An ungraded module with `d^N = 0`.
pub struct NcModule(NDiffModule);
/// A table of `dim H^n_(m)` with validity flags.
pub struct NcTable {
    table: HomologyTable,
    field: Field,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> NcStatus {
    match e {
        Error::Parse(_) | Error::InvalidField(_) | Error::NotPrime(_) => NcStatus::ParseError,
        Error::NotNilpotent { .. } => NcStatus::NotNilpotent,
        Error::AssumptionViolation(_) => NcStatus::AssumptionViolation,
        Error::DimensionMismatch(_) | Error::OutOfRange(_) => NcStatus::DimensionMismatch,
        Error::Mismatch(_) => NcStatus::Mismatch,
        _ => NcStatus::Failure,
    }
}

fn guard(f: impl FnOnce() -> Result<(), (NcStatus, String)>) -> NcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => NcStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            NcStatus::Panic
        }
    }
}

trait Lift<T> {
    fn lift(self) -> Result<T, (NcStatus, String)>;
}

impl<T> Lift<T> for nilcomplex::Result<T> {
    fn lift(self) -> Result<T, (NcStatus, String)> {
        self.map_err(|e| (status_of(&e), e.to_string()))
    }
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, (NcStatus, String)> {
    if p.is_null() {
        return Err((NcStatus::NullPointer, "null string".into()));
    }
    CStr::from_ptr(p).to_str().map_err(|_| (NcStatus::InvalidUtf8, "string is not UTF-8".into()))
}

unsafe fn object<'a, T>(p: *const T) -> Result<&'a T, (NcStatus, String)> {
    p.as_ref().ok_or((NcStatus::NullPointer, "null handle".into()))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), (NcStatus, String)> {
    if out.is_null() {
        return Err((NcStatus::NullPointer, "null output pointer".into()));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), (NcStatus, String)> {
    if out.is_null() {
        return Err((NcStatus::NullPointer, "null output pointer".into()));
    }
    *out = CString::new(s).map_err(|_| (NcStatus::Failure, "interior NUL".into()))?.into_raw();
    Ok(())
}

/// Message of the last failed call on this thread, or NULL. Valid until the next failing call.
#[no_mangle]
pub extern "C" fn nc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must come from this library or be NULL.
#[no_mangle]
pub unsafe extern "C" fn nc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// `field` is `zmod:p` or `cyclotomic:n`; `q` an integer, `a/b` or `zeta^k`.
///
/// # Safety
/// Strings must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nc_context_new(field: *const c_char, q: *const c_char, order: usize, out: *mut *mut NcContext) -> NcStatus {
    guard(|| {
        let f = Field::parse(text(field)?).lift()?;
        let q = f.parse_scalar(text(q)?).lift()?;
        put(out, NcContext(QContext::new(f, q, order).lift()?))
    })
}

/// # Safety
/// `ctx` must be a live handle; `a0`, `a1` writable or NULL.
#[no_mangle]
pub unsafe extern "C" fn nc_context_assumptions(ctx: *const NcContext, a0: *mut bool, a1: *mut bool) -> NcStatus {
    guard(|| {
        let a = object(ctx)?.0.assumptions();
        if !a0.is_null() {
            *a0 = a.a0;
        }
        if !a1.is_null() {
            *a1 = a.a1;
        }
        Ok(())
    })
}

/// # Safety
/// `ctx` must come from [`nc_context_new`] or be NULL.
#[no_mangle]
pub unsafe extern "C" fn nc_context_free(ctx: *mut NcContext) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

/// Module `k^dim` with `d` given row-major by integer entries (reduced into the field).
/// Fails with `NC_STATUS_NOT_NILPOTENT` when `d^N != 0`.
///
/// # Safety
/// `entries` must point to `dim * dim` integers.
#[no_mangle]
pub unsafe extern "C" fn nc_module_new(ctx: *const NcContext, dim: usize, entries: *const i64, out: *mut *mut NcModule) -> NcStatus {
    guard(|| {
        let ctx = &object(ctx)?.0;
        if entries.is_null() && dim > 0 {
            return Err((NcStatus::NullPointer, "null matrix".into()));
        }
        let f = ctx.field();
        let mut d = Matrix::zeros(f, dim, dim);
        if dim > 0 {
            let data = std::slice::from_raw_parts(entries, dim * dim);
            for i in 0..dim {
                for j in 0..dim {
                    d.set(i, j, f.from_i64(data[i * dim + j]));
                }
            }
        }
        put(out, NcModule(NDiffModule::new(ctx, d).lift()?))
    })
}

/// Writes `dim H_(1), ..., dim H_(N-1)` into `dims`, which holds `len` entries.
///
/// # Safety
/// `dims` must be writable for `len` entries.
#[no_mangle]
pub unsafe extern "C" fn nc_module_homology_dims(module: *const NcModule, dims: *mut usize, len: usize) -> NcStatus {
    guard(|| {
        let h = object(module)?.0.homology_dims().lift()?;
        if len < h.len() {
            return Err((NcStatus::DimensionMismatch, format!("need {} entries", h.len())));
        }
        if dims.is_null() {
            return Err((NcStatus::NullPointer, "null output".into()));
        }
        ptr::copy_nonoverlapping(h.as_ptr(), dims, h.len());
        Ok(())
    })
}

/// # Safety
/// `module` must come from [`nc_module_new`] or be NULL.
#[no_mangle]
pub unsafe extern "C" fn nc_module_free(module: *mut NcModule) {
    if !module.is_null() {
        drop(Box::from_raw(module));
    }
}

/// Parses `{"ctx": ..., "lo", "hi", "dims", "d"}`.
///
/// # Safety
/// `json` must be NUL-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn nc_complex_from_json(json: *const c_char, out: *mut *mut NcComplex) -> NcStatus {
    guard(|| {
        let v: serde_json::Value = serde_json::from_str(text(json)?).map_err(|e| (NcStatus::ParseError, e.to_string()))?;
        put(out, NcComplex(NComplex::from_json(&v).lift()?))
    })
}

/// # Safety
/// `complex` must come from [`nc_complex_from_json`] or be NULL.
#[no_mangle]
pub unsafe extern "C" fn nc_complex_free(complex: *mut NcComplex) {
    if !complex.is_null() {
        drop(Box::from_raw(complex));
    }
}

/// # Safety
/// `complex` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn nc_complex_homology(complex: *const NcComplex, out: *mut *mut NcTable) -> NcStatus {
    guard(|| {
        let c = &object(complex)?.0;
        put(out, NcTable { table: c.homology_table().lift()?, field: c.ctx().field().clone() })
    })
}

/// Chain homology of `d'_variant` on the simplicial set of a preset complex
/// (`point`, `edge`, `triangle`, `tetrahedron`) up to degree `top`. Cell degrees are `-n`.
///
/// # Safety
/// `ctx` must be a live handle, `preset` NUL-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn nc_simplicial_homology(
    ctx: *const NcContext,
    preset: *const c_char,
    variant: usize,
    top: usize,
    out: *mut *mut NcTable,
) -> NcStatus {
    guard(|| {
        let ctx = &object(ctx)?.0;
        let name = text(preset)?;
        let k = SimplicialComplexK::preset(name).ok_or((NcStatus::ParseError, format!("unknown preset `{name}`")))?;
        let s = build_simplicial_set_module(&k, ctx, top).lift()?;
        put(out, NcTable { table: theorem4_dictionary(&s, variant).lift()?.generalized, field: ctx.field().clone() })
    })
}

/// Runs the Hochschild comparison for a preset algebra at index `p`: diagram commutativity,
/// bijectivity of the comparison maps and the dictionary. `NC_STATUS_MISMATCH` lists failures.
///
/// # Safety
/// `ctx` must be a live handle, `preset` NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn nc_hochschild_check(ctx: *const NcContext, preset: *const c_char, p: usize, top: usize) -> NcStatus {
    guard(|| {
        let ctx = &object(ctx)?.0;
        let a = FiniteAlgebra::preset(text(preset)?, ctx.field()).lift()?;
        let e = build_hochschild(&a, &Bimodule::regular(&a), ctx, top).lift()?;
        theorem234_check(&e, p).lift().map(|_| ())
    })
}

/// # Safety
/// `table` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn nc_table_len(table: *const NcTable) -> usize {
    table.as_ref().map_or(0, |t| t.table.cells.len())
}

/// Cell `index` as `(level, degree, dim, valid)`.
///
/// # Safety
/// `table` must be a live handle; outputs writable.
#[no_mangle]
pub unsafe extern "C" fn nc_table_cell(
    table: *const NcTable,
    index: usize,
    level: *mut usize,
    degree: *mut i64,
    dim: *mut usize,
    valid: *mut bool,
) -> NcStatus {
    guard(|| {
        let t = object(table)?;
        let c = t.table.cells.get(index).ok_or((NcStatus::DimensionMismatch, format!("cell {index} out of range")))?;
        if level.is_null() || degree.is_null() || dim.is_null() || valid.is_null() {
            return Err((NcStatus::NullPointer, "null output".into()));
        }
        *level = c.level;
        *degree = c.degree;
        *dim = c.dim;
        *valid = c.valid;
        Ok(())
    })
}

/// The table as JSON; release with [`nc_string_free`].
///
/// # Safety
/// `table` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn nc_table_to_json(table: *const NcTable, out: *mut *mut c_char) -> NcStatus {
    guard(|| {
        let t = object(table)?;
        put_string(out, t.table.to_json(&t.field).to_string())
    })
}

/// # Safety
/// `table` must come from this library or be NULL.
#[no_mangle]
pub unsafe extern "C" fn nc_table_free(table: *mut NcTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}
