//! Product and maximally entangled bases of `C^d ⊗ C^{d'}` built from
//! difference-matrix developments and complex Hadamard matrices.
//!
//! Amplitudes are laid out with `(a, b) ↦ a·d' + b` throughout.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::designs::{DifferenceMatrix, LatinSquare};
use crate::error::{Error, Result};
use crate::hadamard::{fourier, hw_matrix, HadamardMatrix};

/// A vector in `C^d ⊗ C^{d'}`.
#[derive(Debug, Clone, PartialEq)]
pub struct BipartiteState {
    dims: (usize, usize),
    amplitudes: Vec<Complex64>,
}

impl BipartiteState {
    pub fn new(dims: (usize, usize), amplitudes: Vec<Complex64>) -> Result<Self> {
        if dims.0 == 0 || dims.1 == 0 || amplitudes.len() != dims.0 * dims.1 {
            return Err(Error::DimensionMismatch(format!(
                "{} amplitudes for dims {dims:?}",
                amplitudes.len()
            )));
        }
        Ok(Self { dims, amplitudes })
    }

    pub fn zero(dims: (usize, usize)) -> Self {
        Self {
            dims,
            amplitudes: vec![Complex64::new(0.0, 0.0); dims.0 * dims.1],
        }
    }

    pub fn dims(&self) -> (usize, usize) {
        self.dims
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn amplitudes_mut(&mut self) -> &mut [Complex64] {
        &mut self.amplitudes
    }

    /// Amplitude of `|a⟩|b⟩`.
    pub fn get(&self, a: usize, b: usize) -> Complex64 {
        self.amplitudes[a * self.dims.1 + b]
    }

    fn add(&mut self, a: usize, b: usize, z: Complex64) {
        self.amplitudes[a * self.dims.1 + b] += z;
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &Self) -> Complex64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Product,
    Meb,
}

/// Where a basis came from.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub construction: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dm: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub row: Option<usize>,
    #[serde(default)]
    pub hadamards: Vec<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LabeledState {
    pub label: Vec<usize>,
    pub state: BipartiteState,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Basis {
    pub dims: (usize, usize),
    pub role: Role,
    pub provenance: Provenance,
    pub states: Vec<LabeledState>,
}

impl Basis {
    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    /// The state with the given label.
    pub fn state(&self, label: &[usize]) -> Option<&BipartiteState> {
        self.states
            .iter()
            .find(|s| s.label == label)
            .map(|s| &s.state)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BasisFamily {
    pub dims: (usize, usize),
    pub bases: Vec<Basis>,
    /// Whether the construction guarantees pairwise unbiasedness.
    pub unbiasedness_claimed: bool,
}

impl BasisFamily {
    pub fn new(bases: Vec<Basis>, unbiasedness_claimed: bool) -> Result<Self> {
        let dims = bases
            .first()
            .map(|b| b.dims)
            .ok_or_else(|| Error::DimensionMismatch("empty family".into()))?;
        if let Some(b) = bases.iter().find(|b| b.dims != dims) {
            return Err(Error::DimensionMismatch(format!(
                "mixed dims {dims:?} and {:?}",
                b.dims
            )));
        }
        Ok(Self {
            dims,
            bases,
            unbiasedness_claimed,
        })
    }

    /// `1/√(d·d')`.
    pub fn expected_overlap(&self) -> f64 {
        1.0 / ((self.dims.0 * self.dims.1) as f64).sqrt()
    }
}

/// `A⁰_{i,j} = (1/√d) |i⟩ ⊗ Σ_k |k⟩⟨k|H₀|j⟩`.
pub fn product_basis(h0: &HadamardMatrix) -> Basis {
    let d = h0.order();
    let norm = 1.0 / (d as f64).sqrt();
    let mut states = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            let mut st = BipartiteState::zero((d, d));
            for k in 0..d {
                st.add(i, k, h0.get(k, j) * norm);
            }
            states.push(LabeledState {
                label: vec![i, j],
                state: st,
            });
        }
    }
    Basis {
        dims: (d, d),
        role: Role::Product,
        provenance: Provenance {
            construction: "product".into(),
            hadamards: vec![h0.label().to_string()],
            ..Default::default()
        },
        states,
    }
}

/// `A_{i,j} = (1/√d) Σ_k |l_{ik}⟩ ⊗ |k⟩⟨k|H|j⟩`.
pub fn meb_from_ls(ls: &LatinSquare, h: &HadamardMatrix) -> Result<Basis> {
    let d = ls.order();
    if h.order() != d {
        return Err(Error::DimensionMismatch(format!(
            "Latin square of order {d} with Hadamard of order {}",
            h.order()
        )));
    }
    let norm = 1.0 / (d as f64).sqrt();
    let mut states = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            let mut st = BipartiteState::zero((d, d));
            for k in 0..d {
                st.add(ls.get(i, k), k, h.get(k, j) * norm);
            }
            states.push(LabeledState {
                label: vec![i, j],
                state: st,
            });
        }
    }
    Ok(Basis {
        dims: (d, d),
        role: Role::Meb,
        provenance: Provenance {
            construction: "latin-square".into(),
            hadamards: vec![h.label().to_string()],
            ..Default::default()
        },
        states,
    })
}

fn dm_name(m: &DifferenceMatrix) -> String {
    let (d, n, lambda) = m.params();
    format!("({d},{n},{lambda})-DM over {}", m.group().spec())
}

fn ensure_valid(m: &DifferenceMatrix) -> Result<()> {
    match m.verify().violation {
        None => Ok(()),
        Some(v) => Err(Error::InvalidDifferenceMatrix(format!(
            "rows {:?}: element {} occurs {} times, expected {}",
            v.rows, v.element, v.count, v.expected
        ))),
    }
}

/// One product basis and `N − 1` maximally entangled bases of `C^d ⊗ C^d`
/// from a normalized `(d,N,1)`-DM and `N` Hadamard matrices of order `d`.
pub fn mub_family_dd(m: &DifferenceMatrix, hs: &[HadamardMatrix]) -> Result<BasisFamily> {
    if m.lambda() != 1 {
        return Err(Error::LambdaMismatch {
            expected: 1,
            found: m.lambda(),
        });
    }
    if !m.is_normalized() {
        return Err(Error::NotNormalized);
    }
    ensure_valid(m)?;
    let d = m.order();
    if hs.len() != m.n_rows() {
        return Err(Error::DimensionMismatch(format!(
            "{} Hadamard matrices for {} rows",
            hs.len(),
            m.n_rows()
        )));
    }
    if let Some(h) = hs.iter().find(|h| h.order() != d) {
        return Err(Error::DimensionMismatch(format!(
            "Hadamard {} has order {}, expected {d}",
            h.label(),
            h.order()
        )));
    }
    let name = dm_name(m);
    let mut bases = Vec::with_capacity(m.n_rows());
    let mut pb = product_basis(&hs[0]);
    pb.provenance.dm = Some(name.clone());
    pb.provenance.row = Some(0);
    bases.push(pb);
    for (r, h) in hs.iter().enumerate().skip(1) {
        let ls = m.develop_row(r)?.to_latin_square()?;
        let mut b = meb_from_ls(&ls, h)?;
        b.provenance.dm = Some(name.clone());
        b.provenance.row = Some(r);
        bases.push(b);
    }
    BasisFamily::new(bases, true)
}

/// Positions `x` with `row[x] = symbol`, in increasing order, paired with
/// their rank `0..λ`.
pub fn rank_within_symbol(
    row: &[usize],
    symbol: usize,
    lambda: usize,
) -> Result<Vec<(usize, usize)>> {
    let positions: Vec<(usize, usize)> = row
        .iter()
        .enumerate()
        .filter(|&(_, &e)| e == symbol)
        .enumerate()
        .map(|(rank, (x, _))| (x, rank))
        .collect();
    if positions.len() != lambda {
        return Err(Error::SymbolCount {
            symbol,
            found: positions.len(),
            expected: lambda,
        });
    }
    Ok(positions)
}

/// Brings a `λ ≥ 2` difference matrix into the form the `C^d ⊗ C^{λd}`
/// construction expects: an all-identity row (if any) is removed, row 0 must
/// contain every element `λ` times, and columns are stably sorted by row 0.
pub fn reduced_form(m: &DifferenceMatrix) -> Result<DifferenceMatrix> {
    if m.lambda() < 2 {
        return Err(Error::InvalidParameter(format!(
            "lambda = {} but this construction needs lambda >= 2",
            m.lambda()
        )));
    }
    ensure_valid(m)?;
    let id = m.group().identity();
    let reduced = match m.rows().iter().position(|row| row.iter().all(|&e| e == id)) {
        Some(r) => m.without_row(r)?,
        None => m.clone(),
    };
    let head = reduced.row(0)?;
    let mut counts = vec![0usize; reduced.order()];
    for &e in head {
        counts[e] += 1;
    }
    if let Some((symbol, &found)) = counts.iter().enumerate().find(|(_, &c)| c != m.lambda()) {
        return Err(Error::SymbolCount {
            symbol,
            found,
            expected: m.lambda(),
        });
    }
    let mut perm: Vec<usize> = (0..reduced.n_cols()).collect();
    perm.sort_by_key(|&c| head[c]);
    reduced.permute_columns(&perm)
}

/// One product basis and `N − 1` maximally entangled bases of
/// `C^d ⊗ C^{λd}`.
///
/// `m` is either a normalized `(d,N+1,λ)`-DM or its reduced `N`-row form;
/// `h1s` holds `N − 1` Hadamards of order `d` (for rows `1..N`) and `h2s`
/// holds `N` Hadamards of order `λ` (for rows `0..N`).
pub fn meb_family_d_lambda_d(
    m: &DifferenceMatrix,
    h1s: &[HadamardMatrix],
    h2s: &[HadamardMatrix],
) -> Result<BasisFamily> {
    let reduced = reduced_form(m)?;
    let d = reduced.order();
    let lambda = reduced.lambda();
    let n = reduced.n_rows();
    if h1s.len() + 1 != n || h2s.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "{n} rows need {} order-d and {n} order-lambda Hadamards, got {} and {}",
            n - 1,
            h1s.len(),
            h2s.len()
        )));
    }
    if let Some(h) = h1s.iter().find(|h| h.order() != d) {
        return Err(Error::DimensionMismatch(format!(
            "Hadamard {} has order {}, expected {d}",
            h.label(),
            h.order()
        )));
    }
    if let Some(h) = h2s.iter().find(|h| h.order() != lambda) {
        return Err(Error::DimensionMismatch(format!(
            "Hadamard {} has order {}, expected {lambda}",
            h.label(),
            h.order()
        )));
    }

    let dims = (d, lambda * d);
    let name = dm_name(&reduced);
    let mut bases = Vec::with_capacity(n);

    // product basis from row 0
    let dev0 = reduced.develop_row(0)?;
    let h2 = &h2s[0];
    let norm = 1.0 / (lambda as f64).sqrt();
    let mut states = Vec::with_capacity(d * d * lambda);
    for i in 0..d {
        let translate = dev0.translate(i);
        for j in 0..d {
            let ranked = rank_within_symbol(translate, j, lambda)?;
            for l in 0..lambda {
                let mut st = BipartiteState::zero(dims);
                for &(x, rank) in &ranked {
                    st.add(j, x, h2.get(rank, l) * norm);
                }
                states.push(LabeledState {
                    label: vec![i, j, l],
                    state: st,
                });
            }
        }
    }
    bases.push(Basis {
        dims,
        role: Role::Product,
        provenance: Provenance {
            construction: "dm-product".into(),
            dm: Some(name.clone()),
            row: Some(0),
            hadamards: vec![h2.label().to_string()],
        },
        states,
    });

    let norm = 1.0 / ((lambda * d) as f64).sqrt();
    for r in 1..n {
        let dev = reduced.develop_row(r)?;
        let h1 = &h1s[r - 1];
        let h2 = &h2s[r];
        let mut states = Vec::with_capacity(d * d * lambda);
        for i in 0..d {
            let translate = dev.translate(i);
            let ranked: Vec<Vec<(usize, usize)>> = (0..d)
                .map(|k| rank_within_symbol(translate, k, lambda))
                .collect::<Result<_>>()?;
            for j in 0..d {
                for l in 0..lambda {
                    let mut st = BipartiteState::zero(dims);
                    for (k, positions) in ranked.iter().enumerate() {
                        let outer = h1.get(k, j) * norm;
                        for &(x, rank) in positions {
                            st.add(k, x, outer * h2.get(rank, l));
                        }
                    }
                    states.push(LabeledState {
                        label: vec![i, j, l],
                        state: st,
                    });
                }
            }
        }
        bases.push(Basis {
            dims,
            role: Role::Meb,
            provenance: Provenance {
                construction: "dm-meb".into(),
                dm: Some(name.clone()),
                row: Some(r),
                hadamards: vec![h1.label().to_string(), h2.label().to_string()],
            },
            states,
        });
    }
    BasisFamily::new(bases, false)
}

/// `p + 1` mutually unbiased bases of `C^p ⊗ C^{p²}`: one product basis and
/// `p` maximally entangled bases, from the `(p,p+1,p)`-DM with
/// `H¹_r = D^r F̂_p` and `H²_r = F̂_p`.
pub fn mub_family_p_p2(p: usize) -> Result<BasisFamily> {
    if !crate::algebra::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let m = DifferenceMatrix::qq1(p)?;
    let h1s = (1..=p as i64)
        .map(|r| hw_matrix(p, r))
        .collect::<Result<Vec<_>>>()?;
    let f = fourier(p)?;
    let h2s = vec![f; p + 1];
    let mut family = meb_family_d_lambda_d(&m, &h1s, &h2s)?;
    family.unbiasedness_claimed = true;
    Ok(family)
}
