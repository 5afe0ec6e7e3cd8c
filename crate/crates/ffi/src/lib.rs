//! C ABI for the nashdeg toolkit.
//!
//! Games, polynomials, and reports cross the boundary as JSON strings in the
//! same layout the CLI uses; synthesized bundles travel as opaque handles.
//! Every fallible call returns a status code and records a message readable
//! through `nashdeg_last_error`. Strings returned through out-parameters are
//! owned by the caller and must be released with `nashdeg_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use nashdeg::certifier::{
    certify_full_symmetric, certify_irreducible, check_dense, derangement, mixed_volume_full,
};
use nashdeg::jsonio;
use nashdeg::pipeline::{synthesize, verify_coeffs, InstanceBundle, SynthesisConfig};
use nashdeg::rat::parse_rat;
use nashdeg::solver::enumerate_ne;
use nashdeg::Error;

#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NashdegStatus {
    Ok = 0,
    NullArgument = 1,
    Utf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    Degenerate = 5,
    BudgetExhausted = 6,
    Internal = 7,
    Panic = 8,
}

/// Synthesis parameters. `magnitude` is a rational string such as "1/8";
/// a null pointer selects the default.
#[repr(C)]
pub struct NashdegConfig {
    pub n: u32,
    pub seed: u64,
    pub magnitude: *const c_char,
    pub denom_bound: u64,
    pub max_resamples: u32,
    pub tol_bits: u32,
    pub prime_budget: u32,
    pub density_repair: bool,
    pub allow_large: bool,
}

/// Opaque synthesized-instance handle; release with `nashdeg_bundle_free`.
pub struct NashdegBundle(InstanceBundle);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg).unwrap_or_else(|_| CString::new("invalid error text").unwrap());
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(e: Error) -> NashdegStatus {
    let status = match &e {
        Error::Parse(_) | Error::Json(_) => NashdegStatus::Parse,
        Error::InvalidArg(_)
        | Error::NotPrime(_)
        | Error::NonSquarefree
        | Error::NoBracket
        | Error::UndefinedResultant => NashdegStatus::InvalidArgument,
        Error::Degenerate(_) => NashdegStatus::Degenerate,
        Error::BudgetExhausted(_) => NashdegStatus::BudgetExhausted,
        Error::Io(_) | Error::Other(_) => NashdegStatus::Internal,
    };
    set_error(e.to_string());
    status
}

fn null_arg(name: &str) -> NashdegStatus {
    set_error(format!("{name} must not be null"));
    NashdegStatus::NullArgument
}

/// # Safety
/// `p` must be null or a valid NUL-terminated string.
unsafe fn read_str<'a>(p: *const c_char, name: &str) -> Result<&'a str, NashdegStatus> {
    if p.is_null() {
        return Err(null_arg(name));
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error(format!("{name} is not valid UTF-8"));
        NashdegStatus::Utf8
    })
}

fn emit_string(s: String, out: *mut *mut c_char) -> NashdegStatus {
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            NashdegStatus::Ok
        }
        Err(_) => {
            set_error("output contained an interior NUL byte".into());
            NashdegStatus::Internal
        }
    }
}

fn guard(f: impl FnOnce() -> NashdegStatus) -> NashdegStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => {
            set_error("internal panic".into());
            NashdegStatus::Panic
        }
    }
}

/// Message for the most recent failing call on this thread, or null. The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn nashdeg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| match &*e.borrow() {
        Some(s) => s.as_ptr(),
        None => ptr::null(),
    })
}

#[no_mangle]
pub extern "C" fn nashdeg_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// # Safety
/// `s` must be null or a string previously returned by this library through
/// an out-parameter, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn nashdeg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[no_mangle]
pub extern "C" fn nashdeg_config_default(n: u32, seed: u64) -> NashdegConfig {
    NashdegConfig {
        n,
        seed,
        magnitude: ptr::null(),
        denom_bound: 64,
        max_resamples: 50,
        tol_bits: 64,
        prime_budget: 2000,
        density_repair: true,
        allow_large: false,
    }
}

/// # Safety
/// `cfg` must point to a valid config whose `magnitude` is null or a valid
/// NUL-terminated string; `out` must point to writable pointer storage.
#[no_mangle]
pub unsafe extern "C" fn nashdeg_synthesize(
    cfg: *const NashdegConfig,
    out: *mut *mut NashdegBundle,
) -> NashdegStatus {
    guard(|| {
        if cfg.is_null() {
            return null_arg("cfg");
        }
        if out.is_null() {
            return null_arg("out");
        }
        let cfg = &*cfg;
        let mut sc = SynthesisConfig::new(cfg.n as usize, cfg.seed);
        if !cfg.magnitude.is_null() {
            let text = match read_str(cfg.magnitude, "magnitude") {
                Ok(t) => t,
                Err(s) => return s,
            };
            sc.magnitude = match parse_rat(text) {
                Ok(r) => r,
                Err(e) => return fail(e),
            };
        }
        sc.denom_bound = cfg.denom_bound;
        sc.max_resamples = cfg.max_resamples as usize;
        sc.tol_bits = cfg.tol_bits;
        sc.prime_budget = cfg.prime_budget as usize;
        sc.density_repair = cfg.density_repair;
        sc.allow_large = cfg.allow_large;
        match synthesize(&sc) {
            Ok(b) => {
                *out = Box::into_raw(Box::new(NashdegBundle(b)));
                NashdegStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// # Safety
/// `b` must be null or a bundle returned by `nashdeg_synthesize`, not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn nashdeg_bundle_free(b: *mut NashdegBundle) {
    if !b.is_null() {
        drop(Box::from_raw(b));
    }
}

/// # Safety
/// `b` must be a live bundle handle.
#[no_mangle]
pub unsafe extern "C" fn nashdeg_bundle_passes(b: *const NashdegBundle) -> bool {
    if b.is_null() {
        return false;
    }
    (*b).0.certificate.passes()
}

/// Eliminant degree of one player's equilibrium coordinate, 0-based player.
///
/// # Safety
/// `b` must be a live bundle handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn nashdeg_bundle_eliminant_degree(
    b: *const NashdegBundle,
    player: u32,
    out: *mut u64,
) -> NashdegStatus {
    guard(|| {
        if b.is_null() {
            return null_arg("b");
        }
        if out.is_null() {
            return null_arg("out");
        }
        let bundle = &(*b).0;
        match bundle.eliminants.get(player as usize) {
            Some(e) => {
                *out = e.poly.deg().unwrap_or(0) as u64;
                NashdegStatus::Ok
            }
            None => fail(Error::InvalidArg(format!(
                "player {player} out of range for n = {}",
                bundle.eliminants.len()
            ))),
        }
    })
}

/// Serializes a bundle to compact JSON.
///
/// # Safety
/// `b` must be a live bundle handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn nashdeg_bundle_to_json(
    b: *const NashdegBundle,
    out: *mut *mut c_char,
) -> NashdegStatus {
    guard(|| {
        if b.is_null() {
            return null_arg("b");
        }
        if out.is_null() {
            return null_arg("out");
        }
        emit_string(jsonio::bundle_to_json(&(*b).0).to_string(), out)
    })
}

/// Verifies a game given as JSON text (game, tensor, or bundle layout).
/// `passed` reports whether the certificate holds; `report_json` may be null
/// when the report is not wanted.
///
/// # Safety
/// `game_json` must be a valid NUL-terminated string; `passed` must be
/// writable; `report_json` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn nashdeg_verify(
    game_json: *const c_char,
    tol_bits: u32,
    prime_budget: u32,
    passed: *mut bool,
    report_json: *mut *mut c_char,
) -> NashdegStatus {
    guard(|| {
        let text = match read_str(game_json, "game_json") {
            Ok(t) => t,
            Err(s) => return s,
        };
        if passed.is_null() {
            return null_arg("passed");
        }
        let c = match jsonio::game_from_str(text) {
            Ok(c) => c,
            Err(e) => return fail(e),
        };
        match verify_coeffs(&c, tol_bits, prime_budget as usize) {
            Ok(rep) => {
                *passed = rep.certificate.passes();
                if report_json.is_null() {
                    NashdegStatus::Ok
                } else {
                    emit_string(jsonio::verify_report_to_json(&rep).to_string(), report_json)
                }
            }
            Err(e) => fail(e),
        }
    })
}

/// Enumerates Nash equilibria of a game given as JSON text; the report is
/// returned as JSON.
///
/// # Safety
/// `game_json` must be a valid NUL-terminated string and `report_json`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn nashdeg_enumerate(
    game_json: *const c_char,
    tol_bits: u32,
    report_json: *mut *mut c_char,
) -> NashdegStatus {
    guard(|| {
        let text = match read_str(game_json, "game_json") {
            Ok(t) => t,
            Err(s) => return s,
        };
        if report_json.is_null() {
            return null_arg("report_json");
        }
        let c = match jsonio::game_from_str(text) {
            Ok(c) => c,
            Err(e) => return fail(e),
        };
        match enumerate_ne(&c, tol_bits) {
            Ok(rep) => emit_string(jsonio::ne_report_to_json(&rep).to_string(), report_json),
            Err(e) => fail(e),
        }
    })
}

/// Density, irreducibility, and Galois certification of one integer
/// polynomial given as a JSON coefficient array. `passed` means dense,
/// irreducible, and certified full symmetric at once.
///
/// # Safety
/// `poly_json` must be a valid NUL-terminated string; `passed` must be
/// writable; `report_json` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn nashdeg_galois(
    poly_json: *const c_char,
    prime_budget: u32,
    passed: *mut bool,
    report_json: *mut *mut c_char,
) -> NashdegStatus {
    guard(|| {
        let text = match read_str(poly_json, "poly_json") {
            Ok(t) => t,
            Err(s) => return s,
        };
        if passed.is_null() {
            return null_arg("passed");
        }
        let p = match jsonio::any_poly_from_str(text) {
            Ok(p) => p,
            Err(e) => return fail(e),
        };
        let density = match check_dense(&p) {
            Ok(d) => d,
            Err(e) => return fail(e),
        };
        let irr = match certify_irreducible(&p, prime_budget as usize) {
            Ok(v) => v,
            Err(e) => return fail(e),
        };
        let gal = match certify_full_symmetric(&p, prime_budget as usize) {
            Ok(g) => g,
            Err(e) => return fail(e),
        };
        let report = jsonio::galois_report_to_json(&density, &irr, &gal);
        *passed = report["pass"].as_bool().unwrap_or(false);
        if report_json.is_null() {
            NashdegStatus::Ok
        } else {
            emit_string(report.to_string(), report_json)
        }
    })
}

/// Mixed volume of the equilibrium system's Newton polytopes for n players.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nashdeg_mixed_volume(n: u32, out: *mut u64) -> NashdegStatus {
    guard(|| {
        if out.is_null() {
            return null_arg("out");
        }
        match mixed_volume_full(n as usize) {
            Ok(v) => match v.to_string().parse::<u64>() {
                Ok(x) => {
                    *out = x;
                    NashdegStatus::Ok
                }
                Err(_) => fail(Error::InvalidArg(format!(
                    "mixed volume for n = {n} exceeds u64"
                ))),
            },
            Err(e) => fail(e),
        }
    })
}

/// Derangement number !n.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nashdeg_derangement(n: u32, out: *mut u64) -> NashdegStatus {
    guard(|| {
        if out.is_null() {
            return null_arg("out");
        }
        if n > 20 {
            return fail(Error::InvalidArg(format!("!{n} exceeds u64")));
        }
        match derangement(n as usize).to_string().parse::<u64>() {
            Ok(x) => {
                *out = x;
                NashdegStatus::Ok
            }
            Err(_) => fail(Error::InvalidArg(format!("!{n} exceeds u64"))),
        }
    })
}
