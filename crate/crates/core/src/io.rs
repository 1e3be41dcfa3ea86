//! JSON file formats for difference matrices, basis families and reports.
//!
//! Writers fix key order and float formatting so identical inputs give
//! byte-identical files. Readers re-validate everything they load.

use std::fmt::Write as _;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::{FiniteGroup, GroupSpec};
use crate::bases::{Basis, BasisFamily, BipartiteState, LabeledState, Provenance, Role};
use crate::designs::DifferenceMatrix;
use crate::error::{Error, Result};
use crate::verify::VerificationReport;

#[derive(Serialize, Deserialize)]
struct DmFile {
    group: GroupSpec,
    lambda: usize,
    rows: Vec<Vec<usize>>,
}

/// `{"group":…,"lambda":λ,"rows":[[…],…]}` followed by a newline.
pub fn dm_to_json(m: &DifferenceMatrix) -> String {
    let file = DmFile {
        group: m.group().spec().clone(),
        lambda: m.lambda(),
        rows: m.rows().to_vec(),
    };
    let mut s = serde_json::to_string(&file).expect("plain data serializes");
    s.push('\n');
    s
}

/// Parses a DM file. Shape and element ranges are checked here; the
/// difference property is left to [`DifferenceMatrix::verify`].
pub fn dm_from_json(text: &str) -> Result<DifferenceMatrix> {
    let file: DmFile = serde_json::from_str(text)?;
    let group = FiniteGroup::new(file.group)?;
    DifferenceMatrix::new(group, file.lambda, file.rows)
}

fn fmt_float(out: &mut String, x: f64) {
    write!(out, "{x:.16e}").expect("writing to a String cannot fail");
}

fn write_basis(out: &mut String, b: &Basis) {
    let role = match b.role {
        Role::Product => "product",
        Role::Meb => "meb",
    };
    let provenance = serde_json::to_string(&b.provenance).expect("plain data serializes");
    write!(
        out,
        "{{\"role\":\"{role}\",\"provenance\":{provenance},\"states\":["
    )
    .unwrap();
    for (k, s) in b.states.iter().enumerate() {
        if k > 0 {
            out.push(',');
        }
        out.push_str("{\"label\":[");
        for (n, x) in s.label.iter().enumerate() {
            if n > 0 {
                out.push(',');
            }
            write!(out, "{x}").unwrap();
        }
        out.push_str("],\"amplitudes\":[");
        for (n, z) in s.state.amplitudes().iter().enumerate() {
            if n > 0 {
                out.push(',');
            }
            out.push('[');
            fmt_float(out, z.re);
            out.push(',');
            fmt_float(out, z.im);
            out.push(']');
        }
        out.push_str("]}");
    }
    out.push_str("]}");
}

/// Basis-family file: dimensions, the bases with their states, and the
/// unbiasedness claim. Amplitudes carry 17 significant digits, which
/// round-trips every `f64` exactly.
pub fn family_to_json(f: &BasisFamily) -> String {
    let mut out = String::new();
    write!(out, "{{\"dims\":[{},{}],\"bases\":[", f.dims.0, f.dims.1).unwrap();
    for (k, b) in f.bases.iter().enumerate() {
        if k > 0 {
            out.push(',');
        }
        write_basis(&mut out, b);
    }
    writeln!(
        out,
        "],\"unbiasedness_claimed\":{}}}",
        f.unbiasedness_claimed
    )
    .unwrap();
    out
}

#[derive(Deserialize)]
struct StateFile {
    label: Vec<usize>,
    amplitudes: Vec<[f64; 2]>,
}

#[derive(Deserialize)]
struct BasisFile {
    role: Role,
    #[serde(default)]
    provenance: Provenance,
    states: Vec<StateFile>,
}

#[derive(Deserialize)]
struct FamilyFile {
    dims: (usize, usize),
    bases: Vec<BasisFile>,
    #[serde(default = "claimed_by_default")]
    unbiasedness_claimed: bool,
}

fn claimed_by_default() -> bool {
    true
}

/// Parses a basis-family file, checking every amplitude count against the
/// declared dims. A missing `unbiasedness_claimed` key means the family is
/// presented as mutually unbiased.
pub fn family_from_json(text: &str) -> Result<BasisFamily> {
    let file: FamilyFile = serde_json::from_str(text)?;
    let dims = file.dims;
    if dims.0 == 0 || dims.1 == 0 {
        return Err(Error::Malformed(format!("dims {dims:?}")));
    }
    let bases = file
        .bases
        .into_iter()
        .enumerate()
        .map(|(k, b)| {
            let states = b
                .states
                .into_iter()
                .map(|s| {
                    let amps: Vec<Complex64> = s
                        .amplitudes
                        .iter()
                        .map(|&[re, im]| Complex64::new(re, im))
                        .collect();
                    let state = BipartiteState::new(dims, amps).map_err(|_| {
                        Error::Malformed(format!(
                            "basis {k}, state {:?}: {} amplitudes for dims {dims:?}",
                            s.label,
                            s.amplitudes.len()
                        ))
                    })?;
                    Ok(LabeledState {
                        label: s.label,
                        state,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Basis {
                dims,
                role: b.role,
                provenance: b.provenance,
                states,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    if bases.is_empty() {
        return Err(Error::Malformed("family has no bases".into()));
    }
    BasisFamily::new(bases, file.unbiasedness_claimed)
}

pub fn report_to_json(r: &VerificationReport) -> String {
    let mut s = serde_json::to_string_pretty(r).expect("plain data serializes");
    s.push('\n');
    s
}
