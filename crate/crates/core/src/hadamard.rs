//! Complex Hadamard matrices: the Fourier family and the Heisenberg–Weyl
//! family `D^m F̂_p` for prime `p`.

use num_complex::Complex64;
use serde::Serialize;

use crate::algebra::{is_prime, RootTable};
use crate::error::{Error, Result};

/// Default tolerance for the Gram conditions `H H† = H† H = d·I`.
pub const GRAM_TOLERANCE: f64 = 1e-9;
/// Default tolerance for `|H_ij| = 1`.
pub const MODULUS_TOLERANCE: f64 = 1e-10;

/// A square complex matrix expected to be Hadamard, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct HadamardMatrix {
    order: usize,
    entries: Vec<Complex64>,
    label: String,
}

impl HadamardMatrix {
    pub fn new(order: usize, entries: Vec<Complex64>, label: impl Into<String>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidOrder(0));
        }
        if entries.len() != order * order {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for order {order}",
                entries.len()
            )));
        }
        Ok(Self {
            order,
            entries,
            label: label.into(),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// `⟨row|H|col⟩`.
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.order + col]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    /// Copy with one entry replaced.
    pub fn with_entry(&self, row: usize, col: usize, value: Complex64) -> Self {
        let mut out = self.clone();
        out.entries[row * self.order + col] = value;
        out
    }

    pub fn verify(&self, tol: f64) -> HadamardReport {
        let d = self.order;
        let modulus = self
            .entries
            .iter()
            .map(|z| (z.norm() - 1.0).abs())
            .fold(0.0, f64::max);
        let mut rows: f64 = 0.0;
        let mut cols: f64 = 0.0;
        for i in 0..d {
            for j in 0..d {
                let target = if i == j { d as f64 } else { 0.0 };
                let rr: Complex64 = (0..d).map(|k| self.get(i, k) * self.get(j, k).conj()).sum();
                let cc: Complex64 = (0..d).map(|k| self.get(k, i) * self.get(k, j).conj()).sum();
                rows = rows.max((rr - target).norm());
                cols = cols.max((cc - target).norm());
            }
        }
        HadamardReport {
            max_modulus_deviation: modulus,
            max_row_gram_deviation: rows,
            max_col_gram_deviation: cols,
            ok: modulus <= tol && rows <= tol && cols <= tol,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HadamardReport {
    pub max_modulus_deviation: f64,
    pub max_row_gram_deviation: f64,
    pub max_col_gram_deviation: f64,
    pub ok: bool,
}

/// Unit-modulus entries and both Gram conditions at the default tolerances.
pub fn hadamard_verify(h: &HadamardMatrix) -> bool {
    let r = h.verify(GRAM_TOLERANCE);
    r.max_modulus_deviation <= MODULUS_TOLERANCE && r.ok
}

/// `F̂_d` with entries `ω_d^{jk}`.
pub fn fourier(d: usize) -> Result<HadamardMatrix> {
    let roots = RootTable::new(d)?;
    let entries = (0..d)
        .flat_map(|j| (0..d).map(move |k| (j * k) as i64))
        .map(|e| roots.get(e))
        .collect();
    HadamardMatrix::new(d, entries, format!("fourier({d})"))
}

/// Diagonal `D` with entries `ω_n^{e_j}`.
///
/// Odd `p` uses `e_j = j²` with `n = p`; `p = 2` uses `diag(1, i)`, i.e.
/// `n = 4` and exponents `(0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HwDiagonal {
    p: usize,
    root_order: usize,
    exponents: Vec<usize>,
}

impl HwDiagonal {
    pub fn prime(&self) -> usize {
        self.p
    }

    /// Order `n` of the roots used; `D^n = I`.
    pub fn period(&self) -> usize {
        self.root_order
    }

    pub fn exponents(&self) -> &[usize] {
        &self.exponents
    }

    pub fn entries(&self) -> Vec<Complex64> {
        let roots = RootTable::new(self.root_order).expect("positive order");
        self.exponents
            .iter()
            .map(|&e| roots.get(e as i64))
            .collect()
    }
}

pub fn hw_diag(p: usize) -> Result<HwDiagonal> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let (root_order, exponents) = if p == 2 {
        (4, vec![0, 1])
    } else {
        (p, (0..p).map(|j| (j * j) % p).collect())
    };
    Ok(HwDiagonal {
        p,
        root_order,
        exponents,
    })
}

/// `D^m F̂_p`; `m` is reduced modulo the period of `D`, and `m ≡ 0` gives `F̂_p`.
pub fn hw_matrix(p: usize, m: i64) -> Result<HadamardMatrix> {
    let diag = hw_diag(p)?;
    Ok(hw_power(&diag, m))
}

fn hw_power(diag: &HwDiagonal, m: i64) -> HadamardMatrix {
    let p = diag.p;
    let n = diag.root_order;
    let m = m.rem_euclid(n as i64);
    let scale = (n / p) as i64;
    let roots = RootTable::new(n).expect("positive order");
    let entries = (0..p)
        .flat_map(|i| (0..p).map(move |j| (i, j)))
        .map(|(i, j)| roots.get(m * diag.exponents[i] as i64 + scale * (i * j) as i64))
        .collect();
    let label = if m == 0 {
        format!("fourier({p})")
    } else {
        format!("hw({p},{m})")
    };
    HadamardMatrix::new(p, entries, label).expect("square by construction")
}

/// The `p + 1` matrices `I, F̂_p, D F̂_p, …, D^{p-1} F̂_p`; scaled by `1/√p`
/// their columns form `p + 1` mutually unbiased bases of `C^p`.
#[derive(Debug, Clone)]
pub struct HwFamily {
    pub diag: HwDiagonal,
    pub members: Vec<HadamardMatrix>,
}

pub fn hw_family(p: usize) -> Result<HwFamily> {
    let diag = hw_diag(p)?;
    let identity = HadamardMatrix::new(
        p,
        (0..p * p)
            .map(|k| {
                if k / p == k % p {
                    Complex64::new(1.0, 0.0)
                } else {
                    Complex64::new(0.0, 0.0)
                }
            })
            .collect(),
        format!("identity({p})"),
    )?;
    let mut members = vec![identity];
    members.extend((0..p as i64).map(|m| hw_power(&diag, m)));
    Ok(HwFamily { diag, members })
}

/// Entrywise and summed forms of the phase identity for `D^m F̂_p`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FdReport {
    /// max over i of `|conj(⟨i|D^m F̂|j⟩)⟨i|D^{m'} F̂|j'⟩ − ⟨i|D^{m'−m} F̂|j'−j⟩|`.
    pub entrywise_deviation: f64,
    /// `|Σ_i conj(⟨i|D^m F̂|j⟩)⟨i|D^{m'} F̂|j'⟩|`.
    pub overlap_magnitude: f64,
    pub expected_overlap: f64,
    /// `Σ_i |⟨i|I|j⟩* ⟨i|D^{m'} F̂|j'⟩|`, which is 1 for unit-modulus entries.
    pub identity_overlap: f64,
    pub holds: bool,
}

pub fn lemma_fd_check(p: usize, m: usize, m2: usize, j: usize, j2: usize) -> Result<FdReport> {
    let diag = hw_diag(p)?;
    for (name, v) in [("m", m), ("m'", m2), ("j", j), ("j'", j2)] {
        if v >= p {
            return Err(Error::InvalidParameter(format!(
                "{name} = {v} outside [{p}]"
            )));
        }
    }
    let a = hw_power(&diag, m as i64);
    let b = hw_power(&diag, m2 as i64);
    let c = hw_power(&diag, m2 as i64 - m as i64);
    let shifted = (j2 + p - j) % p;

    let mut entrywise: f64 = 0.0;
    let mut overlap = Complex64::new(0.0, 0.0);
    for i in 0..p {
        let lhs = a.get(i, j).conj() * b.get(i, j2);
        entrywise = entrywise.max((lhs - c.get(i, shifted)).norm());
        overlap += lhs;
    }
    let identity_overlap = b.get(j, j2).norm();
    let expected = if m == m2 {
        if j == j2 {
            p as f64
        } else {
            0.0
        }
    } else {
        (p as f64).sqrt()
    };
    let magnitude = overlap.norm();
    Ok(FdReport {
        entrywise_deviation: entrywise,
        overlap_magnitude: magnitude,
        expected_overlap: expected,
        identity_overlap,
        holds: entrywise <= MODULUS_TOLERANCE
            && (magnitude - expected).abs() <= GRAM_TOLERANCE
            && (identity_overlap - 1.0).abs() <= MODULUS_TOLERANCE,
    })
}
