//! C interface to `bsk-core`.
//!
//! Every function returns a [`BskStatus`]; results go through out-pointers.
//! Objects are opaque handles released with their `_free` function. Strings
//! returned by the library are owned by the caller and released with
//! [`bsk_string_free`]. After a failure, [`bsk_last_error`] describes it.

use bsk_core::classifier::{classify, evidence, EvidenceOptions};
use bsk_core::posetrep::{gamma_m, nazarova_wild, width, Poset};
use bsk_core::schur::{build_algebra, BasisKind, ScaleCap, StructureAlgebra};
use bsk_core::symcomb::PairOrbit;
use bsk_core::{Error, RepType};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BskStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ScaleCap = 3,
    CheckFailed = 4,
    Internal = 5,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BskRepType {
    Finite = 0,
    Tame = 1,
    Wild = 2,
}

/// A structure-constant algebra.
pub struct BskAlgebra {
    inner: StructureAlgebra,
}

/// A finite poset.
pub struct BskPoset {
    inner: Poset,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> BskStatus {
    match e {
        Error::ScaleCap { .. } => BskStatus::ScaleCap,
        e if e.is_input_error() => BskStatus::InvalidArgument,
        _ => BskStatus::CheckFailed,
    }
}

enum Fail {
    Null,
    Core(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Core(e)
    }
}

/// Runs `f`, recording any failure (including a panic) as the last error.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> BskStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => BskStatus::Ok,
        Ok(Err(Fail::Null)) => {
            set_error("null pointer argument");
            BskStatus::NullPointer
        }
        Ok(Err(Fail::Core(e))) => {
            set_error(&e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal error");
            BskStatus::Internal
        }
    }
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref().ok_or(Fail::Null)
}

unsafe fn out<'a, T>(p: *mut T) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or(Fail::Null)
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail::Null);
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail::Core(Error::invalid("string is not UTF-8")))
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("no interior nul").into_raw()
}

/// Message of the last failure on this thread; valid until the next call
/// that fails. Never null.
#[no_mangle]
pub extern "C" fn bsk_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn bsk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds `S⁺(n,r)` (or `S(n,r)` when `full` is true) in characteristic `p`,
/// under the default scale cap.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bsk_algebra_new(
    n: usize,
    r: usize,
    p: u64,
    full: bool,
    out_alg: *mut *mut BskAlgebra,
) -> BskStatus {
    guard(|| {
        let slot = out(out_alg)?;
        let kind = if full { BasisKind::Full } else { BasisKind::Borel };
        let a = build_algebra(n, r, p, kind, &ScaleCap::from_env()?)?;
        *slot = Box::into_raw(Box::new(BskAlgebra { inner: a }));
        Ok(())
    })
}

/// # Safety
/// `alg` must be null or a handle from [`bsk_algebra_new`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bsk_algebra_free(alg: *mut BskAlgebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn bsk_algebra_dim(alg: *const BskAlgebra, dim: *mut usize) -> BskStatus {
    guard(|| {
        *out(dim)? = deref(alg)?.inner.dim();
        Ok(())
    })
}

/// Basis index of `ξ_{i,j}`, with multi-indices written as digit strings.
///
/// # Safety
/// Pointers must be valid; `i` and `j` must be nul-terminated.
#[no_mangle]
pub unsafe extern "C" fn bsk_algebra_index_of(
    alg: *const BskAlgebra,
    i: *const c_char,
    j: *const c_char,
    index: *mut usize,
) -> BskStatus {
    guard(|| {
        let a = &deref(alg)?.inner;
        let n = a.shape().map_or(0, |s| s.0);
        let o = PairOrbit::parse(n, text(i)?, text(j)?)?;
        let k = a.index_of_orbit(&o).ok_or_else(|| Error::invalid(format!("{o} is not a basis element")))?;
        *out(index)? = k;
        Ok(())
    })
}

/// Label of basis element `k` as a new string.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn bsk_algebra_label(alg: *const BskAlgebra, k: usize, label: *mut *mut c_char) -> BskStatus {
    guard(|| {
        let a = &deref(alg)?.inner;
        let slot = out(label)?;
        if k >= a.dim() {
            return Err(Error::invalid(format!("index {k} out of range")).into());
        }
        *slot = owned_string(a.label(k).to_string());
        Ok(())
    })
}

/// Writes the coordinates of `b_h · b_l` into `coefs[0..dim]`, reduced to
/// `0 ≤ c < p` when `p > 0`.
///
/// # Safety
/// `coefs` must point to at least `len` writable values.
#[no_mangle]
pub unsafe extern "C" fn bsk_algebra_product(
    alg: *const BskAlgebra,
    h: usize,
    l: usize,
    coefs: *mut i64,
    len: usize,
) -> BskStatus {
    guard(|| {
        let a = &deref(alg)?.inner;
        if coefs.is_null() {
            return Err(Fail::Null);
        }
        if h >= a.dim() || l >= a.dim() || len < a.dim() {
            return Err(Error::invalid("index out of range or buffer shorter than the dimension").into());
        }
        let dst = std::slice::from_raw_parts_mut(coefs, a.dim());
        dst.fill(0);
        for (k, c) in a.product(h, l).terms() {
            dst[k] = c;
        }
        Ok(())
    })
}

/// Checks associativity on all composable basis triples.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn bsk_algebra_check_associativity(alg: *const BskAlgebra, triples: *mut usize) -> BskStatus {
    guard(|| {
        let a = &deref(alg)?.inner;
        let slot = out(triples)?;
        *slot = a.check_associativity()?;
        Ok(())
    })
}

/// Ext-quiver and relations as a JSON string.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn bsk_algebra_quiver_json(alg: *const BskAlgebra, json: *mut *mut c_char) -> BskStatus {
    guard(|| {
        let a = &deref(alg)?.inner;
        let slot = out(json)?;
        let pres = bsk_core::basicalg::presentation(a, 200_000)?;
        *slot = owned_string(pres.quiver.to_json());
        Ok(())
    })
}

/// # Safety
/// `rep_type` must be valid.
#[no_mangle]
pub unsafe extern "C" fn bsk_classify(n: usize, r: usize, p: u64, rep_type: *mut BskRepType) -> BskStatus {
    guard(|| {
        let slot = out(rep_type)?;
        *slot = match classify(n, r, p)? {
            RepType::Finite => BskRepType::Finite,
            RepType::Tame => BskRepType::Tame,
            RepType::Wild => BskRepType::Wild,
        };
        Ok(())
    })
}

/// Verdict with its evidence trail as a JSON string.
///
/// # Safety
/// `json` must be valid.
#[no_mangle]
pub unsafe extern "C" fn bsk_evidence_json(n: usize, r: usize, p: u64, json: *mut *mut c_char) -> BskStatus {
    guard(|| {
        let slot = out(json)?;
        let opts = EvidenceOptions { cap: ScaleCap::from_env()?, ..EvidenceOptions::default() };
        *slot = owned_string(evidence(n, r, p, &opts)?.to_json());
        Ok(())
    })
}

/// Parses `{"elements": [...], "covers": [[lo, hi], ...]}`.
///
/// # Safety
/// `json` must be nul-terminated and `out_poset` valid.
#[no_mangle]
pub unsafe extern "C" fn bsk_poset_from_json(json: *const c_char, out_poset: *mut *mut BskPoset) -> BskStatus {
    guard(|| {
        let slot = out(out_poset)?;
        let p = Poset::from_json(text(json)?)?;
        *slot = Box::into_raw(Box::new(BskPoset { inner: p }));
        Ok(())
    })
}

/// The bundled poset `Γ_M`.
///
/// # Safety
/// `out_poset` must be valid.
#[no_mangle]
pub unsafe extern "C" fn bsk_poset_gamma_m(out_poset: *mut *mut BskPoset) -> BskStatus {
    guard(|| {
        *out(out_poset)? = Box::into_raw(Box::new(BskPoset { inner: gamma_m() }));
        Ok(())
    })
}

/// # Safety
/// `poset` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bsk_poset_free(poset: *mut BskPoset) {
    if !poset.is_null() {
        drop(Box::from_raw(poset));
    }
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn bsk_poset_len(poset: *const BskPoset, len: *mut usize) -> BskStatus {
    guard(|| {
        *out(len)? = deref(poset)?.inner.len();
        Ok(())
    })
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn bsk_poset_width(poset: *const BskPoset, w: *mut usize) -> BskStatus {
    guard(|| {
        *out(w)? = width(&deref(poset)?.inner).0;
        Ok(())
    })
}

/// Whether the poset contains one of Nazarova's six minimal wild posets.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn bsk_poset_nazarova_wild(poset: *const BskPoset, wild: *mut bool) -> BskStatus {
    guard(|| {
        *out(wild)? = nazarova_wild(&deref(poset)?.inner).wild;
        Ok(())
    })
}
