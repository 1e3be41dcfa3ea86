//! Brute-force checks on raw amplitudes: Gram matrices, Schmidt profiles and
//! cross-basis overlaps. Nothing here looks at how a basis was built.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::bases::{Basis, BasisFamily, BipartiteState, Role};
use crate::error::{Error, Result};

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Nonzero amplitudes of a state in index order. Skipping exact zeros leaves
/// every inner product bit-identical to the dense sum.
fn support(state: &BipartiteState) -> Vec<(usize, Complex64)> {
    state
        .amplitudes()
        .iter()
        .enumerate()
        .filter(|(_, z)| **z != Complex64::new(0.0, 0.0))
        .map(|(k, z)| (k, *z))
        .collect()
}

/// `⟨u|v⟩` with `v` given by its support.
fn inner_sparse(u: &BipartiteState, v: &[(usize, Complex64)]) -> Complex64 {
    let a = u.amplitudes();
    v.iter().map(|&(k, z)| a[k].conj() * z).sum()
}

fn check_dims(b: &Basis) -> Result<()> {
    if let Some(s) = b.states.iter().find(|s| s.state.dims() != b.dims) {
        return Err(Error::DimensionMismatch(format!(
            "state {:?} has dims {:?}, basis has {:?}",
            s.label,
            s.state.dims(),
            b.dims
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrthonormalityReport {
    pub states: usize,
    pub max_gram_deviation: f64,
    pub complete: bool,
    pub passed: bool,
}

/// Full Gram matrix of the basis against the identity.
pub fn basis_orthonormal(b: &Basis, eps: f64) -> Result<OrthonormalityReport> {
    check_dims(b)?;
    let supports: Vec<_> = b.states.iter().map(|s| support(&s.state)).collect();
    let max_gram_deviation = b
        .states
        .par_iter()
        .enumerate()
        .map(|(i, u)| {
            supports[i..]
                .iter()
                .enumerate()
                .map(|(off, v)| {
                    let g = inner_sparse(&u.state, v);
                    let target = if off == 0 { 1.0 } else { 0.0 };
                    (g - Complex64::new(target, 0.0)).norm()
                })
                .fold(0.0, f64::max)
        })
        .reduce(|| 0.0, f64::max);
    let complete = b.states.len() == b.dims.0 * b.dims.1;
    Ok(OrthonormalityReport {
        states: b.states.len(),
        max_gram_deviation,
        complete,
        passed: complete && max_gram_deviation <= eps,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EntanglementClass {
    MaximallyEntangled,
    Product,
    Other,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SchmidtProfile {
    /// Singular values of the `d × d'` reshape, largest first.
    pub values: Vec<f64>,
    pub class: EntanglementClass,
}

impl SchmidtProfile {
    /// Every coefficient within `eps` of `1/√d`.
    pub fn is_maximally_entangled(&self, eps: f64) -> bool {
        let target = 1.0 / (self.values.len() as f64).sqrt();
        self.values.iter().all(|s| (s - target).abs() <= eps)
    }

    /// Leading coefficient within `eps` of 1.
    pub fn is_product(&self, eps: f64) -> bool {
        (self.values[0] - 1.0).abs() <= eps
    }

    pub fn matches(&self, role: Role, eps: f64) -> bool {
        match role {
            Role::Meb => self.is_maximally_entangled(eps),
            Role::Product => self.is_product(eps),
        }
    }
}

/// Singular values from the eigenvalues of `A A†`, where `A` is the
/// `d × d'` reshape and `d ≤ d'`.
pub fn schmidt_profile(state: &BipartiteState, eps: f64) -> Result<SchmidtProfile> {
    let (d, dp) = state.dims();
    if state.norm() == 0.0 {
        return Err(Error::InvalidParameter(
            "zero vector has no Schmidt profile".into(),
        ));
    }
    let (rows, cols) = if d <= dp { (d, dp) } else { (dp, d) };
    let a = DMatrix::from_fn(rows, cols, |r, c| {
        if d <= dp {
            state.get(r, c)
        } else {
            state.get(c, r)
        }
    });
    // direct SVD; square roots of Gram eigenvalues lose small values to rounding
    let mut values: Vec<f64> = a.singular_values().iter().copied().collect();
    values.sort_by(|x, y| y.total_cmp(x));
    let mut profile = SchmidtProfile {
        values,
        class: EntanglementClass::Other,
    };
    profile.class = if profile.is_product(eps) {
        EntanglementClass::Product
    } else if profile.is_maximally_entangled(eps) {
        EntanglementClass::MaximallyEntangled
    } else {
        EntanglementClass::Other
    };
    Ok(profile)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UnbiasednessReport {
    pub bases: (usize, usize),
    pub min_magnitude: f64,
    pub max_magnitude: f64,
    pub expected: f64,
    pub max_deviation: f64,
    pub passed: bool,
}

/// All `|⟨u|v⟩|` for `u ∈ b1`, `v ∈ b2`, against `1/√(d·d')`.
pub fn mutual_unbiasedness(b1: &Basis, b2: &Basis, eps: f64) -> Result<UnbiasednessReport> {
    pair_report(b1, b2, (0, 1), eps)
}

fn pair_report(
    b1: &Basis,
    b2: &Basis,
    indices: (usize, usize),
    eps: f64,
) -> Result<UnbiasednessReport> {
    if b1.dims != b2.dims {
        return Err(Error::DimensionMismatch(format!(
            "bases with dims {:?} and {:?}",
            b1.dims, b2.dims
        )));
    }
    check_dims(b1)?;
    check_dims(b2)?;
    let expected = 1.0 / ((b1.dims.0 * b1.dims.1) as f64).sqrt();
    let supports: Vec<_> = b2.states.iter().map(|s| support(&s.state)).collect();
    let (min_magnitude, max_magnitude) = b1
        .states
        .par_iter()
        .map(|u| {
            supports
                .iter()
                .fold((f64::INFINITY, 0.0f64), |(lo, hi), v| {
                    let m = inner_sparse(&u.state, v).norm();
                    (lo.min(m), hi.max(m))
                })
        })
        .reduce(
            || (f64::INFINITY, 0.0),
            |(a, b), (c, d)| (a.min(c), b.max(d)),
        );
    let max_deviation = (expected - min_magnitude).max(max_magnitude - expected);
    Ok(UnbiasednessReport {
        bases: indices,
        min_magnitude,
        max_magnitude,
        expected,
        max_deviation,
        passed: max_deviation <= eps,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BasisReport {
    pub index: usize,
    pub role: Role,
    pub construction: String,
    pub orthonormality: OrthonormalityReport,
    pub min_schmidt: f64,
    pub max_schmidt: f64,
    pub role_mismatches: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<Vec<usize>>,
    pub role_verified: bool,
    pub passed: bool,
}

fn basis_report(index: usize, b: &Basis, eps: f64) -> Result<BasisReport> {
    let orthonormality = basis_orthonormal(b, eps)?;
    let checks: Vec<(f64, f64, bool)> = b
        .states
        .par_iter()
        .map(|s| match schmidt_profile(&s.state, eps) {
            Ok(p) => (
                p.values[p.values.len() - 1],
                p.values[0],
                p.matches(b.role, eps),
            ),
            Err(_) => (0.0, 0.0, false),
        })
        .collect();
    let min_schmidt = checks.iter().map(|c| c.0).fold(f64::INFINITY, f64::min);
    let max_schmidt = checks.iter().map(|c| c.1).fold(0.0, f64::max);
    let role_mismatches = checks.iter().filter(|c| !c.2).count();
    let first_mismatch = checks
        .iter()
        .position(|c| !c.2)
        .map(|k| b.states[k].label.clone());
    let role_verified = role_mismatches == 0 && !b.states.is_empty();
    Ok(BasisReport {
        index,
        role: b.role,
        construction: b.provenance.construction.clone(),
        passed: orthonormality.passed && role_verified,
        orthonormality,
        min_schmidt,
        max_schmidt,
        role_mismatches,
        first_mismatch,
        role_verified,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub dims: (usize, usize),
    pub tolerance: f64,
    pub expected_overlap: f64,
    pub unbiasedness_claimed: bool,
    pub bases: Vec<BasisReport>,
    pub pairs: Vec<UnbiasednessReport>,
    pub meb_count: usize,
    pub product_count: usize,
    /// Largest set of verified MEBs that are pairwise unbiased.
    pub unbiased_meb_count: usize,
    pub bound: String,
    pub summary: String,
    pub passed: bool,
}

/// Size of the largest clique in a graph on at most a few dozen vertices.
fn max_clique(adjacent: &dyn Fn(usize, usize) -> bool, candidates: &[usize]) -> usize {
    fn grow(
        chosen: usize,
        rest: &[usize],
        adjacent: &dyn Fn(usize, usize) -> bool,
        best: &mut usize,
    ) {
        if chosen + rest.len() <= *best {
            return;
        }
        match rest.split_first() {
            None => *best = chosen,
            Some((&v, tail)) => {
                let with: Vec<usize> = tail.iter().copied().filter(|&w| adjacent(v, w)).collect();
                grow(chosen + 1, &with, adjacent, best);
                grow(chosen, tail, adjacent, best);
            }
        }
    }
    let mut best = 0;
    grow(0, candidates, adjacent, &mut best);
    best
}

/// Runs every per-basis and pairwise check and states the certified lower
/// bound on the number of mutually unbiased maximally entangled bases.
pub fn family_report(f: &BasisFamily, eps: f64) -> Result<VerificationReport> {
    if let Some(b) = f.bases.iter().find(|b| b.dims != f.dims) {
        return Err(Error::DimensionMismatch(format!(
            "family dims {:?}, basis dims {:?}",
            f.dims, b.dims
        )));
    }
    let bases = f
        .bases
        .iter()
        .enumerate()
        .map(|(i, b)| basis_report(i, b, eps))
        .collect::<Result<Vec<_>>>()?;
    let index_pairs: Vec<(usize, usize)> = (0..f.bases.len())
        .flat_map(|i| (i + 1..f.bases.len()).map(move |j| (i, j)))
        .collect();
    let pairs = index_pairs
        .par_iter()
        .map(|&(i, j)| pair_report(&f.bases[i], &f.bases[j], (i, j), eps))
        .collect::<Result<Vec<_>>>()?;

    let n = f.bases.len();
    let pair_ok = |i: usize, j: usize| {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        pairs
            .iter()
            .find(|p| p.bases == (a, b))
            .is_some_and(|p| p.passed)
    };
    let verified: Vec<&BasisReport> = bases.iter().filter(|b| b.passed).collect();
    let meb_count = verified.iter().filter(|b| b.role == Role::Meb).count();
    let product_count = verified.iter().filter(|b| b.role == Role::Product).count();
    let mebs: Vec<usize> = verified
        .iter()
        .filter(|b| b.role == Role::Meb)
        .map(|b| b.index)
        .collect();
    let unbiased_meb_count = max_clique(&pair_ok, &mebs);

    let bases_ok = bases.iter().all(|b| b.passed);
    let pairs_ok = pairs.iter().all(|p| p.passed);
    let passed = bases_ok && (!f.unbiasedness_claimed || pairs_ok);
    let (d, dp) = f.dims;
    let bound = format!("M({d},{dp}) ≥ {unbiased_meb_count}");
    let noun = if bases_ok && pairs_ok {
        "MUBs"
    } else {
        "bases"
    };
    let mut summary = format!("{n} {noun}: {meb_count} MEB + {product_count} PB; {bound}");
    if !f.unbiasedness_claimed {
        summary.push_str("; unbiasedness not claimed (measured only)");
    }
    Ok(VerificationReport {
        dims: f.dims,
        tolerance: eps,
        expected_overlap: f.expected_overlap(),
        unbiasedness_claimed: f.unbiasedness_claimed,
        bases,
        pairs,
        meb_count,
        product_count,
        unbiased_meb_count,
        bound,
        summary,
        passed,
    })
}
