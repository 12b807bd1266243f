//! C ABI for the gwlocal library.
//!
//! Geometries are opaque handles created by [`gw_geometry_parse`] and released
//! with [`gw_geometry_free`]. Table and report results come back as
//! heap-allocated JSON strings (same schema as the CLI's `--format json`);
//! release them with [`gw_string_free`]. Every entry point returns a
//! [`GwStatus`] and never unwinds across the boundary.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use gwlocal::genus0::{gv_genus0, gw_pair, Genus0Error};
use gwlocal::genus1::conjecture_invariants;
use gwlocal::tables::reproduce;
use gwlocal::verify::{run_suite, SuiteConfig};
use gwlocal::SplitGeometry;
use serde_json::json;

/// Status codes mirroring the CLI exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GwStatus {
    /// Success.
    Ok = 0,
    /// A verification check or table reproduction failed.
    CheckFailed = 1,
    /// The geometry string is invalid (grammar or Calabi-Yau condition).
    BadGeometry = 2,
    /// No genus-zero recipe for the requested geometry.
    Unsupported = 3,
    /// A null pointer or out-of-range argument was passed.
    InvalidArgument = 4,
    /// Internal error (should not happen; indicates a bug).
    Internal = 5,
}

/// Opaque geometry handle.
pub struct GwGeometry {
    inner: SplitGeometry,
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s)
        .map(CString::into_raw)
        .unwrap_or(ptr::null_mut())
}

fn guard<F: FnOnce() -> GwStatus>(f: F) -> GwStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => GwStatus::Internal,
    }
}

/// Parse a geometry string (grammar `P<l>/O(-c1,...,-cm)` or preset name)
/// into a handle. On success writes the handle to `out` and returns Ok.
///
/// # Safety
/// `spec` must be a valid NUL-terminated string; `out` must be a valid
/// pointer to writable memory.
#[no_mangle]
pub unsafe extern "C" fn gw_geometry_parse(
    spec: *const c_char,
    out: *mut *mut GwGeometry,
) -> GwStatus {
    if spec.is_null() || out.is_null() {
        return GwStatus::InvalidArgument;
    }
    guard(|| {
        let text = match unsafe { CStr::from_ptr(spec) }.to_str() {
            Ok(t) => t,
            Err(_) => return GwStatus::InvalidArgument,
        };
        match text.parse::<SplitGeometry>() {
            Ok(inner) => {
                unsafe { *out = Box::into_raw(Box::new(GwGeometry { inner })) };
                GwStatus::Ok
            }
            Err(_) => GwStatus::BadGeometry,
        }
    })
}

/// Release a geometry handle. Passing null is a no-op.
///
/// # Safety
/// `geometry` must be null or a pointer returned by [`gw_geometry_parse`]
/// that has not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn gw_geometry_free(geometry: *mut GwGeometry) {
    if !geometry.is_null() {
        drop(unsafe { Box::from_raw(geometry) });
    }
}

/// Canonical form of the geometry, e.g. "P3/O(-1,-3)". Free the result with
/// [`gw_string_free`].
///
/// # Safety
/// `geometry` must be a live handle from [`gw_geometry_parse`].
#[no_mangle]
pub unsafe extern "C" fn gw_geometry_canonical(geometry: *const GwGeometry) -> *mut c_char {
    if geometry.is_null() {
        return ptr::null_mut();
    }
    into_c_string(unsafe { &*geometry }.inner.to_string())
}

/// Genus-one invariants N_{1,d} for d = 1..max_degree as a JSON table
/// {"geometry", "kind", "degrees", "values", "integral"}.
///
/// # Safety
/// `geometry` must be a live handle; `out_json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gw_genus1_invariants_json(
    geometry: *const GwGeometry,
    max_degree: u32,
    out_json: *mut *mut c_char,
) -> GwStatus {
    if geometry.is_null() || out_json.is_null() || max_degree == 0 {
        return GwStatus::InvalidArgument;
    }
    guard(|| {
        let geom = &unsafe { &*geometry }.inner;
        match conjecture_invariants(geom, max_degree as usize) {
            Ok(series) => {
                let degrees: Vec<usize> = series.values().keys().copied().collect();
                let values: Vec<String> = series.values().values().map(|v| v.to_string()).collect();
                let integral: Vec<bool> =
                    series.values().values().map(|v| v.is_integer()).collect();
                let obj = json!({
                    "geometry": geom.to_string(),
                    "kind": "genus1_gw",
                    "degrees": degrees,
                    "values": values,
                    "integral": integral,
                });
                unsafe { *out_json = into_c_string(obj.to_string()) };
                GwStatus::Ok
            }
            Err(_) => GwStatus::Internal,
        }
    })
}

/// Both genus-zero BPS tables (one-point then two-point) for d = 1..max_degree
/// as a JSON array of tables. Fails with Unsupported for geometries without a
/// genus-zero recipe.
///
/// # Safety
/// `geometry` must be a live handle; `out_json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gw_bps_tables_json(
    geometry: *const GwGeometry,
    max_degree: u32,
    out_json: *mut *mut c_char,
) -> GwStatus {
    if geometry.is_null() || out_json.is_null() || max_degree == 0 {
        return GwStatus::InvalidArgument;
    }
    guard(|| {
        let geom = &unsafe { &*geometry }.inner;
        let pair = match gw_pair(geom, max_degree as usize) {
            Ok(p) => p,
            Err(Genus0Error::UnsupportedGeometry(_)) => return GwStatus::Unsupported,
            Err(_) => return GwStatus::Internal,
        };
        let mut tables = Vec::new();
        for (gw, k) in [(pair.0, 1u8), (pair.1, 2u8)] {
            let bps = match gv_genus0(&gw, k) {
                Ok(b) => b,
                Err(_) => return GwStatus::Internal,
            };
            tables.push(json!({
                "geometry": geom.to_string(),
                "kind": bps.kind().name(),
                "degrees": bps.values().keys().copied().collect::<Vec<usize>>(),
                "values": bps.values().values().map(|v| v.to_string()).collect::<Vec<String>>(),
                "integral": bps.values().values().map(|v| v.is_integer()).collect::<Vec<bool>>(),
            }));
        }
        unsafe { *out_json = into_c_string(serde_json::Value::Array(tables).to_string()) };
        GwStatus::Ok
    })
}

/// Run the verification suite with sweep bound `max_n` (0 picks the default
/// of 10) and `seeds` weight draws per geometry (0 picks the default of 3).
/// Writes a JSON array of check results and returns CheckFailed if any check
/// failed.
///
/// # Safety
/// `out_json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gw_verify_json(
    max_n: u32,
    seeds: u64,
    out_json: *mut *mut c_char,
) -> GwStatus {
    if out_json.is_null() {
        return GwStatus::InvalidArgument;
    }
    guard(|| {
        let mut config = SuiteConfig::default();
        if max_n > 0 {
            config.max_n = max_n;
            config.localization_max_n = config.localization_max_n.min(max_n);
        }
        if seeds > 0 {
            config.seeds = seeds;
        }
        let results = run_suite(&config);
        let all_passed = results.iter().all(|r| r.passed);
        let arr: Vec<_> = results
            .iter()
            .map(|r| {
                json!({
                    "name": r.name,
                    "parameters": r.parameters,
                    "passed": r.passed,
                    "lhs": r.lhs,
                    "rhs": r.rhs,
                    "detail": r.detail,
                })
            })
            .collect();
        unsafe { *out_json = into_c_string(serde_json::Value::Array(arr).to_string()) };
        if all_passed {
            GwStatus::Ok
        } else {
            GwStatus::CheckFailed
        }
    })
}

/// Recompute the bundled golden tables and report mismatches as JSON.
/// Returns CheckFailed when any derivable cell disagrees.
///
/// # Safety
/// `out_json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gw_reproduce_json(out_json: *mut *mut c_char) -> GwStatus {
    if out_json.is_null() {
        return GwStatus::InvalidArgument;
    }
    guard(|| {
        let report = match reproduce(None) {
            Ok(r) => r,
            Err(_) => return GwStatus::Internal,
        };
        let mismatches: Vec<_> = report
            .mismatches
            .iter()
            .map(|m| {
                json!({
                    "geometry": m.geometry.to_string(),
                    "kind": m.kind.name(),
                    "degree": m.degree,
                    "computed": m.computed.to_string(),
                    "fixture": m.fixture.to_string(),
                })
            })
            .collect();
        let obj = json!({
            "cells_checked": report.cells_checked,
            "reference_only_cells": report.reference_only_cells,
            "mismatches": mismatches,
            "passed": report.passed(),
        });
        let passed = report.passed();
        unsafe { *out_json = into_c_string(obj.to_string()) };
        if passed {
            GwStatus::Ok
        } else {
            GwStatus::CheckFailed
        }
    })
}

/// Release a string returned by this library. Passing null is a no-op.
///
/// # Safety
/// `s` must be null or a pointer returned by one of the `_json`/`canonical`
/// functions that has not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn gw_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}
