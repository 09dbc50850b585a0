//! C ABI for `rankcodes`.
//!
//! Objects are opaque heap handles created by `rc_*_new`/producer calls and
//! released with the matching `rc_*_free`. Every fallible call returns an
//! [`RcStatus`]; on failure `rc_last_error` describes the cause for the
//! calling thread. Field elements cross the boundary as `uint32_t` indices
//! (the polynomial-basis coordinates read as base-`q` digits). Strings
//! returned by the library must be released with `rc_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rankcodes::channel::{operator_channel, rank_error_channel};
use rankcodes::folded::{FoldedCodeword, FoldedGabidulin};
use rankcodes::galois::FieldDescriptor;
use rankcodes::subspace::SubspaceJson;
use rankcodes::{AffineSolutionSpace, Error, Field, FieldElement, Message, Subspace, SubspaceCode};
use serde::Serialize;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Format = 3,
    DecodeFailure = 4,
    BufferTooSmall = 5,
    Panic = 6,
}

pub struct RcField(Field);
pub struct RcSubspaceCode(SubspaceCode);
pub struct RcFoldedCode(FoldedGabidulin);
pub struct RcSubspace(Subspace);
pub struct RcSolutionSpace(AffineSolutionSpace);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(RcStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Format(_) => RcStatus::Format,
            Error::DegenerateReceivedSpace { .. }
            | Error::ZeroInterpolation
            | Error::RecoveryCheckFailed
            | Error::ListCapExceeded { .. }
            | Error::RetryLimit(_) => RcStatus::DecodeFailure,
            _ => RcStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(RcStatus::NullPointer, format!("{what} is null"))
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> RcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => RcStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            RcStatus::Panic
        }
    }
}

unsafe fn get<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn slice<'a>(p: *const u32, len: usize, what: &str) -> Result<&'a [u32], Failure> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn out_slice<'a>(p: *mut u32, len: usize, need: usize) -> Result<&'a mut [u32], Failure> {
    if len < need {
        return Err(Failure(RcStatus::BufferTooSmall, format!("buffer holds {len}, need {need}")));
    }
    if need == 0 {
        return Ok(&mut []);
    }
    if p.is_null() {
        return Err(null("output buffer"));
    }
    Ok(std::slice::from_raw_parts_mut(p, len))
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null("string"));
    }
    CStr::from_ptr(p).to_str().map_err(|e| Failure(RcStatus::Format, e.to_string()))
}

unsafe fn write_json<T: Serialize>(value: &T, out: *mut *mut c_char) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    let text = serde_json::to_string(value).map_err(|e| Failure(RcStatus::Format, e.to_string()))?;
    *out = CString::new(text).map_err(|e| Failure(RcStatus::Format, e.to_string()))?.into_raw();
    Ok(())
}

fn parse_json<'a, T: serde::Deserialize<'a>>(text: &'a str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure(RcStatus::Format, e.to_string()))
}

fn message(field: &Field, symbols: &[u32]) -> Result<Message, Failure> {
    symbols
        .iter()
        .map(|&i| field.element(u64::from(i)))
        .collect::<rankcodes::Result<Vec<_>>>()
        .map(Message::new)
        .map_err(Failure::from)
}

fn indices(symbols: &[FieldElement]) -> Vec<u32> {
    symbols.iter().map(|e| e.index()).collect()
}

/// Message of the calling thread's last failure, or null. Valid until the
/// next failing call on this thread.
#[no_mangle]
pub extern "C" fn rc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn rc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

unsafe fn release<T>(p: *mut T) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `p` must be null or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn rc_field_free(p: *mut RcField) {
    release(p)
}

/// # Safety
/// `p` must be null or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn rc_subspace_code_free(p: *mut RcSubspaceCode) {
    release(p)
}

/// # Safety
/// `p` must be null or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn rc_folded_code_free(p: *mut RcFoldedCode) {
    release(p)
}

/// # Safety
/// `p` must be null or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn rc_subspace_free(p: *mut RcSubspace) {
    release(p)
}

/// # Safety
/// `p` must be null or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn rc_solution_free(p: *mut RcSolutionSpace) {
    release(p)
}

/// GF((p^e)^m) with the default (lex-first irreducible) moduli.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rc_field_new(p: u64, e: usize, m: usize, out: *mut *mut RcField) -> RcStatus {
    guard(|| put(out, RcField(Field::new(p, e, m, None)?)))
}

/// Field from its JSON descriptor `{p, e, m, modulus}`.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rc_field_from_json(json: *const c_char, out: *mut *mut RcField) -> RcStatus {
    guard(|| {
        let d: FieldDescriptor = parse_json(read_str(json)?)?;
        put(out, RcField(Field::from_descriptor(&d)?))
    })
}

/// # Safety
/// `field` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rc_field_to_json(field: *const RcField, out: *mut *mut c_char) -> RcStatus {
    guard(|| write_json(&get(field, "field")?.0.descriptor(), out))
}

/// Number of elements `q^m`; 0 for a null handle.
///
/// # Safety
/// `field` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rc_field_size(field: *const RcField) -> u64 {
    field.as_ref().map_or(0, |f| f.0.size())
}

/// # Safety
/// `field` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rc_field_mul(field: *const RcField, a: u32, b: u32, out: *mut u32) -> RcStatus {
    guard(|| {
        let f = &get(field, "field")?.0;
        let x = f.element(a.into())?;
        let y = f.element(b.into())?;
        let out = out.as_mut().ok_or_else(|| null("output pointer"))?;
        *out = rankcodes::galois::FieldArith::mul(f, x, y).index();
        Ok(())
    })
}

/// Subspace code with default evaluation points and `γ`.
///
/// # Safety
/// `field` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rc_subspace_code_new(
    field: *const RcField,
    n: usize,
    k: usize,
    s: usize,
    out: *mut *mut RcSubspaceCode,
) -> RcStatus {
    guard(|| put(out, RcSubspaceCode(SubspaceCode::new(&get(field, "field")?.0, n, k, s)?)))
}

/// Ambient dimension `n + sm`; 0 for a null handle.
///
/// # Safety
/// `code` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rc_subspace_code_ambient_dim(code: *const RcSubspaceCode) -> usize {
    code.as_ref().map_or(0, |c| c.0.ambient_dim())
}

/// # Safety
/// `msg` must point to `k` indices; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rc_subspace_code_encode(
    code: *const RcSubspaceCode,
    msg: *const u32,
    k: usize,
    out: *mut *mut RcSubspace,
) -> RcStatus {
    guard(|| {
        let c = &get(code, "code")?.0;
        let u = message(c.field(), slice(msg, k, "message")?)?;
        put(out, RcSubspace(c.encode(&u)?))
    })
}

/// # Safety
/// Handles must be live; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rc_subspace_code_list_decode(
    code: *const RcSubspaceCode,
    received: *const RcSubspace,
    out: *mut *mut RcSolutionSpace,
) -> RcStatus {
    guard(|| {
        let c = &get(code, "code")?.0;
        let u = &get(received, "received subspace")?.0;
        put(out, RcSolutionSpace(c.list_decode(u)?))
    })
}

/// Keeps `dim V - rho` dimensions of `v` and adds `t` error dimensions,
/// seeded by `seed`.
///
/// # Safety
/// `v` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rc_operator_channel(
    v: *const RcSubspace,
    rho: usize,
    t: usize,
    seed: u64,
    out: *mut *mut RcSubspace,
) -> RcStatus {
    guard(|| {
        let v = &get(v, "subspace")?.0;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        put(out, RcSubspace(operator_channel(v, rho, t, &mut rng)?))
    })
}

/// # Safety
/// `v` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rc_subspace_dim(v: *const RcSubspace) -> usize {
    v.as_ref().map_or(0, |v| v.0.dim())
}

/// `{"ambient_dim": N, "basis": [[..], ..]}` with RREF rows.
///
/// # Safety
/// `v` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rc_subspace_to_json(v: *const RcSubspace, out: *mut *mut c_char) -> RcStatus {
    guard(|| write_json(&get(v, "subspace")?.0.to_json(), out))
}

/// Parses a subspace over the base field of `field`.
///
/// # Safety
/// `json` must be a NUL-terminated string; other pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn rc_subspace_from_json(
    field: *const RcField,
    json: *const c_char,
    out: *mut *mut RcSubspace,
) -> RcStatus {
    guard(|| {
        let f = &get(field, "field")?.0;
        let j: SubspaceJson = parse_json(read_str(json)?)?;
        put(out, RcSubspace(Subspace::from_json(f.base(), &j)?))
    })
}

/// # Safety
/// `field` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rc_folded_code_new(
    field: *const RcField,
    n: usize,
    k: usize,
    h: usize,
    s: usize,
    out: *mut *mut RcFoldedCode,
) -> RcStatus {
    guard(|| put(out, RcFoldedCode(FoldedGabidulin::new(&get(field, "field")?.0, n, k, h, s)?)))
}

/// Largest guaranteed error rank, or -1. Returns -1 for a null handle.
///
/// # Safety
/// `code` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rc_folded_code_max_errors(code: *const RcFoldedCode) -> i64 {
    code.as_ref().map_or(-1, |c| c.0.max_errors())
}

/// Writes the `g*h` codeword entries row-major into `out`.
///
/// # Safety
/// `msg` must point to `k` indices and `out` to `out_len` writable slots.
#[no_mangle]
pub unsafe extern "C" fn rc_folded_code_encode(
    code: *const RcFoldedCode,
    msg: *const u32,
    k: usize,
    out: *mut u32,
    out_len: usize,
) -> RcStatus {
    guard(|| {
        let c = &get(code, "code")?.0;
        let u = message(c.field(), slice(msg, k, "message")?)?;
        let x = c.encode(&u)?;
        out_slice(out, out_len, c.n())?[..c.n()].copy_from_slice(&indices(x.entries()));
        Ok(())
    })
}

unsafe fn codeword(c: &FoldedGabidulin, entries: *const u32, len: usize) -> Result<FoldedCodeword, Failure> {
    let f = c.field();
    let symbols =
        slice(entries, len, "codeword")?.iter().map(|&i| f.element(i.into())).collect::<rankcodes::Result<Vec<_>>>()?;
    Ok(FoldedCodeword::new(c.g(), c.h(), symbols)?)
}

/// Adds a uniformly drawn rank-`t` error to the `g*h` entries of `x`.
///
/// # Safety
/// `x` must point to `len` indices and `out` to `out_len` writable slots.
#[no_mangle]
pub unsafe extern "C" fn rc_rank_error_channel(
    code: *const RcFoldedCode,
    x: *const u32,
    len: usize,
    t: usize,
    seed: u64,
    out: *mut u32,
    out_len: usize,
) -> RcStatus {
    guard(|| {
        let c = &get(code, "code")?.0;
        let x = codeword(c, x, len)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let y = rank_error_channel(c.field(), &x, t, &mut rng)?;
        out_slice(out, out_len, c.n())?[..c.n()].copy_from_slice(&indices(y.entries()));
        Ok(())
    })
}

/// # Safety
/// `received` must point to `len` indices; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rc_folded_code_list_decode(
    code: *const RcFoldedCode,
    received: *const u32,
    len: usize,
    out: *mut *mut RcSolutionSpace,
) -> RcStatus {
    guard(|| {
        let c = &get(code, "code")?.0;
        let y = codeword(c, received, len)?;
        put(out, RcSolutionSpace(c.list_decode(&y)?))
    })
}

/// Affine dimension of the list, or -1 when it is empty.
///
/// # Safety
/// `sol` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rc_solution_dim(sol: *const RcSolutionSpace) -> i64 {
    sol.as_ref().and_then(|s| s.0.dim()).map_or(-1, |d| d as i64)
}

/// Sets `*out` to whether the `k`-symbol message lies in the list.
///
/// # Safety
/// `msg` must point to `k` indices; other pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn rc_solution_contains(
    sol: *const RcSolutionSpace,
    msg: *const u32,
    k: usize,
    out: *mut bool,
) -> RcStatus {
    guard(|| {
        let s = &get(sol, "solution space")?.0;
        let u = message(s.field(), slice(msg, k, "message")?)?;
        let out = out.as_mut().ok_or_else(|| null("output pointer"))?;
        *out = u.len() == s.k() && s.contains(&u);
        Ok(())
    })
}

#[derive(Serialize)]
struct SolutionJson {
    k: usize,
    particular: Option<Vec<u32>>,
    basis: Vec<Vec<u32>>,
}

/// `{"k": k, "particular": [..] | null, "basis": [[..], ..]}` with symbols
/// as indices; `particular` is null when the list is empty.
///
/// # Safety
/// `sol` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rc_solution_to_json(sol: *const RcSolutionSpace, out: *mut *mut c_char) -> RcStatus {
    guard(|| {
        let s = &get(sol, "solution space")?.0;
        let json = SolutionJson {
            k: s.k(),
            particular: s.particular().map(|p| indices(p.symbols())),
            basis: s.basis().iter().map(|b| indices(b.symbols())).collect(),
        };
        write_json(&json, out)
    })
}
