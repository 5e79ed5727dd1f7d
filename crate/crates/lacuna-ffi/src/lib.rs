//! C ABI for the lacuna exact-arithmetic library.
//!
//! Conventions:
//! - every function returns a [`LacunaStatus`]; computed values come back
//!   through out-pointers;
//! - numeric results that can exceed machine integers are returned as
//!   NUL-terminated decimal / "num/den" strings allocated by the library and
//!   released with [`lacuna_string_free`];
//! - the Stirling table is an opaque handle, released with
//!   [`lacuna_stirling_table_free`]; a handle is not thread-safe.
//!
//! The header `include/lacuna.h` is generated by cbindgen at build time.

use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use lacuna::adelberg::{a_poly, a_value, b_poly, b_value};
use lacuna::congruence::{cong1_report, cong2_report, cong3_report, CongruenceParams};
use lacuna::exactnum::{binom_int, rat_string};
use lacuna::stirling::{stirling1, stirling1_mod_p, stirling2, StirlingKind, StirlingTable};

/// Status codes returned by every entry point.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LacunaStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    NotPrime = 3,
    OutOfRange = 4,
    InternalError = 5,
}

/// Polynomial family selector for the Adelberg entry points.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LacunaFamily {
    A = 0,
    B = 1,
}

/// Opaque grow-on-demand table of Stirling numbers.
pub struct LacunaStirlingTable {
    inner: StirlingTable,
}

fn status_of(e: &lacuna::Error) -> LacunaStatus {
    match e {
        lacuna::Error::NotPrime { .. } => LacunaStatus::NotPrime,
        lacuna::Error::OutOfRange { .. } => LacunaStatus::OutOfRange,
        lacuna::Error::Negative { .. } | lacuna::Error::MultinomialParts => {
            LacunaStatus::InvalidArgument
        }
    }
}

/// Writes `s` through the out-pointer as a freshly allocated C string.
///
/// # Safety
/// `out` must be a valid, writable pointer.
unsafe fn write_string(out: *mut *mut c_char, s: String) -> LacunaStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            LacunaStatus::Ok
        }
        Err(_) => LacunaStatus::InternalError,
    }
}

fn guarded(f: impl FnOnce() -> LacunaStatus) -> LacunaStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(LacunaStatus::InternalError)
}

/// Binomial coefficient C(n, k) for any signed n (coefficient of x^k in
/// (1+x)^n), as a decimal string.
///
/// # Safety
/// `out` must be a valid, writable pointer.
#[no_mangle]
pub unsafe extern "C" fn lacuna_binomial(n: i64, k: i64, out: *mut *mut c_char) -> LacunaStatus {
    if out.is_null() {
        return LacunaStatus::NullPointer;
    }
    guarded(|| write_string(out, binom_int(n, k).to_string()))
}

/// Stirling number of the given kind (1 = cycle, 2 = partition) as a
/// decimal string.
///
/// # Safety
/// `out` must be a valid, writable pointer.
#[no_mangle]
pub unsafe extern "C" fn lacuna_stirling(
    kind: u32,
    n: i64,
    k: i64,
    out: *mut *mut c_char,
) -> LacunaStatus {
    if out.is_null() {
        return LacunaStatus::NullPointer;
    }
    guarded(|| {
        let value = match kind {
            1 => stirling1(n, k),
            2 => stirling2(n, k),
            _ => return LacunaStatus::InvalidArgument,
        };
        match value {
            Ok(v) => write_string(out, v.to_string()),
            Err(e) => status_of(&e),
        }
    })
}

/// Residue in [0, p) of the first-kind Stirling number (n, k) modulo a
/// prime p, via the closed form (never touches the exact value).
///
/// # Safety
/// `out` must be a valid, writable pointer.
#[no_mangle]
pub unsafe extern "C" fn lacuna_stirling1_mod_p(
    n: i64,
    k: i64,
    p: i64,
    out: *mut i64,
) -> LacunaStatus {
    if out.is_null() {
        return LacunaStatus::NullPointer;
    }
    guarded(|| match stirling1_mod_p(n, k, p) {
        Ok(v) => {
            // the residue is in [0, p), so it always fits
            *out = i64::try_from(&v).expect("residue fits in i64");
            LacunaStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

/// Canonical expanded string of the Adelberg polynomial A_u or B_u.
///
/// # Safety
/// `out` must be a valid, writable pointer.
#[no_mangle]
pub unsafe extern "C" fn lacuna_adelberg_poly(
    family: LacunaFamily,
    u: i64,
    out: *mut *mut c_char,
) -> LacunaStatus {
    if out.is_null() {
        return LacunaStatus::NullPointer;
    }
    guarded(|| {
        let poly = match family {
            LacunaFamily::A => a_poly(u),
            LacunaFamily::B => b_poly(u),
        };
        match poly {
            Ok(p) => write_string(out, p.canonical_string()),
            Err(e) => status_of(&e),
        }
    })
}

/// Exact value of A_u(x, y, m) or B_u(y, m) at integer arguments (x is
/// ignored for the B family), as a "num/den" string with the denominator
/// omitted when 1.
///
/// # Safety
/// `out` must be a valid, writable pointer.
#[no_mangle]
pub unsafe extern "C" fn lacuna_adelberg_eval(
    family: LacunaFamily,
    u: i64,
    x: i64,
    y: i64,
    m: i64,
    out: *mut *mut c_char,
) -> LacunaStatus {
    if out.is_null() {
        return LacunaStatus::NullPointer;
    }
    guarded(|| {
        let value = match family {
            LacunaFamily::A => a_value(u, x, y, m),
            LacunaFamily::B => b_value(u, y, m),
        };
        match value {
            Ok(v) => write_string(out, rat_string(&v)),
            Err(e) => status_of(&e),
        }
    })
}

/// Runs one congruence verification (which = 1, 2 or 3) and returns the
/// report as a single JSON object string.
///
/// # Safety
/// `out_json` must be a valid, writable pointer.
#[no_mangle]
pub unsafe extern "C" fn lacuna_verify_congruence(
    which: u32,
    p: i64,
    m: i64,
    l: i64,
    s: i64,
    out_json: *mut *mut c_char,
) -> LacunaStatus {
    if out_json.is_null() {
        return LacunaStatus::NullPointer;
    }
    guarded(|| {
        let params = CongruenceParams { p, m, l, s };
        let report = match which {
            1 => cong1_report(&params),
            2 => cong2_report(&params),
            3 => cong3_report(&params),
            _ => return LacunaStatus::InvalidArgument,
        };
        match report {
            Ok(r) => write_string(out_json, r.json_row()),
            Err(e) => status_of(&e),
        }
    })
}

/// Releases a string allocated by this library. Passing NULL is a no-op.
///
/// # Safety
/// `s` must have been returned by this library and not freed before.
#[no_mangle]
pub unsafe extern "C" fn lacuna_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Creates a Stirling table handle (kind 1 = cycle, 2 = partition).
/// Returns NULL for an unknown kind.
#[no_mangle]
pub extern "C" fn lacuna_stirling_table_new(kind: u32) -> *mut LacunaStirlingTable {
    let kind = match kind {
        1 => StirlingKind::Cycle,
        2 => StirlingKind::Partition,
        _ => return std::ptr::null_mut(),
    };
    Box::into_raw(Box::new(LacunaStirlingTable {
        inner: StirlingTable::new(kind),
    }))
}

/// Entry (n, k) of the table as a decimal string; the table grows as needed.
///
/// # Safety
/// `table` must be a live handle from [`lacuna_stirling_table_new`] and
/// `out` a valid, writable pointer.
#[no_mangle]
pub unsafe extern "C" fn lacuna_stirling_table_entry(
    table: *mut LacunaStirlingTable,
    n: i64,
    k: i64,
    out: *mut *mut c_char,
) -> LacunaStatus {
    if table.is_null() || out.is_null() {
        return LacunaStatus::NullPointer;
    }
    guarded(|| match (*table).inner.entry(n, k) {
        Ok(v) => write_string(out, v.to_string()),
        Err(e) => status_of(&e),
    })
}

/// Releases a table handle. Passing NULL is a no-op.
///
/// # Safety
/// `table` must have come from [`lacuna_stirling_table_new`] and not have
/// been freed before.
#[no_mangle]
pub unsafe extern "C" fn lacuna_stirling_table_free(table: *mut LacunaStirlingTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}
