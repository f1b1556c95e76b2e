//! C ABI for `bnmono`.
//!
//! Networks cross the boundary as opaque `BnmNetwork` handles created by the
//! `bnm_*` constructors and released with [`bnm_network_free`]. Configurations
//! are passed as their little-endian integer encoding (component 1 at bit 0).
//! Every fallible call returns a [`BnmStatus`]; on anything other than
//! `BNM_STATUS_OK` a message is available from [`bnm_last_error_message`] on
//! the same thread. Strings returned by the library are freed with
//! [`bnm_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use bnmono::asyncdyn;
use bnmono::constructions::gray_code_network;
use bnmono::embed::{embed_with, EmbedOptions};
use bnmono::format::{network_from_json, network_to_json};
use bnmono::theorems::SuiteSelection;
use bnmono::{BooleanNetwork, Configuration, Distance, Error};

#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BnmStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    DimensionMismatch = 3,
    SizeLimit = 4,
    NegativeLoop = 5,
    Parse = 6,
    Panic = 7,
}

/// Opaque network handle.
pub struct BnmNetwork {
    inner: BooleanNetwork,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(message: String) {
    let message = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = message);
}

fn fail(status: BnmStatus, message: impl Into<String>) -> BnmStatus {
    set_last_error(message.into());
    status
}

impl From<Error> for BnmStatus {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::DimensionMismatch { .. } => BnmStatus::DimensionMismatch,
            Error::SizeLimit { .. } => BnmStatus::SizeLimit,
            Error::NegativeLoop { .. } => BnmStatus::NegativeLoop,
            Error::Json(_) | Error::InvalidLiteral { .. } => BnmStatus::Parse,
            _ => BnmStatus::InvalidArgument,
        };
        fail(status, e.to_string())
    }
}

fn guard(body: impl FnOnce() -> Result<(), BnmStatus>) -> BnmStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => BnmStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => fail(BnmStatus::Panic, "internal panic"),
    }
}

unsafe fn network<'a>(handle: *const BnmNetwork) -> Result<&'a BooleanNetwork, BnmStatus> {
    handle
        .as_ref()
        .map(|h| &h.inner)
        .ok_or_else(|| fail(BnmStatus::NullPointer, "null network handle"))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), BnmStatus> {
    if out.is_null() {
        return Err(fail(BnmStatus::NullPointer, "null output pointer"));
    }
    out.write(value);
    Ok(())
}

fn state(f: &BooleanNetwork, bits: u32) -> Result<Configuration, BnmStatus> {
    Configuration::new(f.n(), bits).map_err(|_| {
        fail(
            BnmStatus::InvalidArgument,
            format!("state {bits} out of range for {} components", f.n()),
        )
    })
}

fn into_handle(f: BooleanNetwork) -> *mut BnmNetwork {
    Box::into_raw(Box::new(BnmNetwork { inner: f }))
}

fn into_c_string(s: String) -> Result<*mut c_char, BnmStatus> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| fail(BnmStatus::InvalidArgument, "string contains NUL"))
}

/// Message for the last failed call on this thread. Valid until the next
/// failing call on the same thread; never NULL.
#[no_mangle]
pub extern "C" fn bnm_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bnm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `network` must be NULL or a handle returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bnm_network_free(network: *mut BnmNetwork) {
    if !network.is_null() {
        drop(Box::from_raw(network));
    }
}

/// Parses a network file (`{"n": .., "tables": [..]}`).
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bnm_network_from_json(
    json: *const c_char,
    out: *mut *mut BnmNetwork,
) -> BnmStatus {
    guard(|| {
        if json.is_null() {
            return Err(fail(BnmStatus::NullPointer, "null json"));
        }
        let text = CStr::from_ptr(json)
            .to_str()
            .map_err(|_| fail(BnmStatus::Parse, "json is not UTF-8"))?;
        let f = network_from_json(text)?;
        write(out, into_handle(f))
    })
}

/// Builds a network from its image table: `images[x]` encodes `f(x)`, and
/// `len` must be `2^n`.
///
/// # Safety
/// `images` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bnm_network_from_images(
    n: u32,
    images: *const u32,
    len: usize,
    out: *mut *mut BnmNetwork,
) -> BnmStatus {
    guard(|| {
        if images.is_null() {
            return Err(fail(BnmStatus::NullPointer, "null images"));
        }
        let table = std::slice::from_raw_parts(images, len).to_vec();
        let f = BooleanNetwork::from_images(n as usize, table)?;
        write(out, into_handle(f))
    })
}

/// Serializes a network to the JSON file format. Free with
/// [`bnm_string_free`].
///
/// # Safety
/// `network` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bnm_network_to_json(
    network: *const BnmNetwork,
    out: *mut *mut c_char,
) -> BnmStatus {
    guard(|| {
        let f = self::network(network)?;
        write(out, into_c_string(network_to_json(f))?)
    })
}

/// Component count, or 0 for a NULL handle.
///
/// # Safety
/// `network` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bnm_network_components(network: *const BnmNetwork) -> u32 {
    network.as_ref().map_or(0, |h| h.inner.n() as u32)
}

/// # Safety
/// `network` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bnm_network_evaluate(
    network: *const BnmNetwork,
    x: u32,
    out: *mut u32,
) -> BnmStatus {
    guard(|| {
        let f = self::network(network)?;
        let x = state(f, x)?;
        write(out, f.evaluate(&x)?.bits())
    })
}

/// The Gray-code path network on `n` components.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bnm_gray_code_network(n: u32, out: *mut *mut BnmNetwork) -> BnmStatus {
    guard(|| {
        let w = gray_code_network(n as usize)?;
        write(out, into_handle(w.network))
    })
}

/// The `2n`-component monotone embedding. Fails with
/// `BNM_STATUS_NEGATIVE_LOOP` unless `force` is set.
///
/// # Safety
/// `network` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bnm_embed(
    network: *const BnmNetwork,
    force: bool,
    out: *mut *mut BnmNetwork,
) -> BnmStatus {
    guard(|| {
        let f = self::network(network)?;
        let host = embed_with(f, EmbedOptions { force })?;
        write(out, into_handle(host))
    })
}

/// # Safety
/// `network` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bnm_is_monotone(network: *const BnmNetwork, out: *mut bool) -> BnmStatus {
    guard(|| write(out, self::network(network)?.is_monotone()))
}

/// # Safety
/// `network` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bnm_has_negative_loop(
    network: *const BnmNetwork,
    out: *mut bool,
) -> BnmStatus {
    guard(|| write(out, self::network(network)?.has_negative_loop()))
}

/// # Safety
/// `network` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bnm_has_two_cycle(
    network: *const BnmNetwork,
    out: *mut bool,
) -> BnmStatus {
    guard(|| write(out, asyncdyn::has_two_cycle(self::network(network)?)))
}

/// Asynchronous distance from `from` to `to`. `*reachable` is false when no
/// path exists, in which case `*distance` is left untouched.
///
/// # Safety
/// `network` must be a live handle; both outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn bnm_distance(
    network: *const BnmNetwork,
    from: u32,
    to: u32,
    reachable: *mut bool,
    distance: *mut u64,
) -> BnmStatus {
    guard(|| {
        let f = self::network(network)?;
        let (x, y) = (state(f, from)?, state(f, to)?);
        if distance.is_null() {
            return Err(fail(BnmStatus::NullPointer, "null output pointer"));
        }
        match asyncdyn::distance(f, &x, &y)? {
            Distance::Finite(d) => {
                write(reachable, true)?;
                distance.write(d);
            }
            Distance::Unreachable => write(reachable, false)?,
        }
        Ok(())
    })
}

/// # Safety
/// `network` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bnm_diameter(network: *const BnmNetwork, out: *mut u64) -> BnmStatus {
    guard(|| write(out, asyncdyn::diameter(self::network(network)?)?))
}

/// Writes up to `capacity` fixed points into `buffer` in increasing order and
/// the total count into `*count`. Call with `capacity = 0` to size the buffer.
///
/// # Safety
/// `network` must be a live handle; `buffer` must hold `capacity` values
/// (may be NULL when `capacity` is 0); `count` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bnm_fixed_points(
    network: *const BnmNetwork,
    buffer: *mut u32,
    capacity: usize,
    count: *mut usize,
) -> BnmStatus {
    guard(|| {
        let f = self::network(network)?;
        let fixed = asyncdyn::fixed_points(f);
        if capacity > 0 && buffer.is_null() {
            return Err(fail(BnmStatus::NullPointer, "null buffer"));
        }
        for (k, x) in fixed.iter().take(capacity).enumerate() {
            buffer.add(k).write(x.bits());
        }
        write(count, fixed.len())
    })
}

/// Runs a verification suite (`robert`, `monotone-reach`, `embedding`,
/// `fixed-point-counts` or `all`). `*passed` is false iff some check failed.
/// When `report_json` is not NULL it receives the JSON report array, to be
/// freed with [`bnm_string_free`].
///
/// # Safety
/// `network` must be a live handle; `suite` a NUL-terminated string;
/// `passed` writable; `report_json` NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn bnm_verify(
    network: *const BnmNetwork,
    suite: *const c_char,
    passed: *mut bool,
    report_json: *mut *mut c_char,
) -> BnmStatus {
    guard(|| {
        let f = self::network(network)?;
        if suite.is_null() {
            return Err(fail(BnmStatus::NullPointer, "null suite name"));
        }
        let name = CStr::from_ptr(suite)
            .to_str()
            .map_err(|_| fail(BnmStatus::Parse, "suite name is not UTF-8"))?;
        let selection: SuiteSelection = name.parse()?;
        let reports = selection
            .suites()
            .into_iter()
            .map(|s| s.run(f))
            .collect::<Result<Vec<_>, _>>()?;
        write(passed, reports.iter().all(|r| r.passed()))?;
        if !report_json.is_null() {
            let json = bnmono::theorems::reports_to_json(&reports)?;
            report_json.write(into_c_string(json)?);
        }
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    #[test]
    fn null_handles_are_reported() {
        let mut out = false;
        let status = unsafe { bnm_is_monotone(ptr::null(), &mut out) };
        assert_eq!(status, BnmStatus::NullPointer);
        let message = unsafe { CStr::from_ptr(bnm_last_error_message()) };
        assert_eq!(message.to_str().unwrap(), "null network handle");
        assert_eq!(unsafe { bnm_network_components(ptr::null()) }, 0);
    }
}
