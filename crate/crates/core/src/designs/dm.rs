use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{smallest_prime_factor, FiniteField, FiniteGroup, GroupSpec};
use crate::error::{Error, Result};

/// An `N × λd` array over a finite abelian group of order `d`.
///
/// Construction only checks the shape; [`DifferenceMatrix::verify`] checks
/// the difference property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceMatrix {
    group: FiniteGroup,
    lambda: usize,
    rows: Vec<Vec<usize>>,
}

/// Where the difference property first failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DmViolation {
    pub rows: (usize, usize),
    pub element: usize,
    pub count: usize,
    pub expected: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DmReport {
    pub valid: bool,
    pub violation: Option<DmViolation>,
}

impl DifferenceMatrix {
    pub fn new(group: FiniteGroup, lambda: usize, rows: Vec<Vec<usize>>) -> Result<Self> {
        if lambda == 0 {
            return Err(Error::InvalidParameter("lambda must be positive".into()));
        }
        if rows.is_empty() {
            return Err(Error::DimensionMismatch("matrix has no rows".into()));
        }
        let d = group.order();
        let cols = lambda * d;
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {r} has {} columns, expected lambda*d = {cols}",
                    row.len()
                )));
            }
            if let Some(&e) = row.iter().find(|&&e| e >= d) {
                return Err(Error::ElementOutOfRange {
                    element: e,
                    order: d,
                });
            }
        }
        Ok(Self {
            group,
            lambda,
            rows,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn lambda(&self) -> usize {
        self.lambda
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.lambda * self.order()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn row(&self, r: usize) -> Result<&[usize]> {
        self.rows
            .get(r)
            .map(Vec::as_slice)
            .ok_or(Error::RowOutOfRange {
                row: r,
                rows: self.rows.len(),
            })
    }

    pub fn entry(&self, r: usize, c: usize) -> usize {
        self.rows[r][c]
    }

    /// Copy with one entry replaced.
    pub fn with_entry(&self, r: usize, c: usize, value: usize) -> Result<Self> {
        let mut rows = self.rows.clone();
        *rows
            .get_mut(r)
            .ok_or(Error::RowOutOfRange {
                row: r,
                rows: self.rows.len(),
            })?
            .get_mut(c)
            .ok_or_else(|| Error::DimensionMismatch(format!("column {c} out of range")))? = value;
        Self::new(self.group.clone(), self.lambda, rows)
    }

    /// Row 0 is all identity.
    pub fn is_normalized(&self) -> bool {
        self.rows[0].iter().all(|&e| e == self.group.identity())
    }

    /// Counts every pairwise difference multiset.
    pub fn verify(&self) -> DmReport {
        let n = self.rows.len();
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        let violation = pairs
            .par_iter()
            .map(|&(i, j)| self.pair_violation(i, j))
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .next();
        DmReport {
            valid: violation.is_none(),
            violation,
        }
    }

    pub fn is_valid(&self) -> bool {
        self.verify().valid
    }

    fn pair_violation(&self, i: usize, j: usize) -> Option<DmViolation> {
        let mut counts = vec![0usize; self.order()];
        for (&a, &b) in self.rows[i].iter().zip(&self.rows[j]) {
            counts[self.group.diff(a, b)] += 1;
        }
        counts
            .iter()
            .enumerate()
            .find(|(_, &c)| c != self.lambda)
            .map(|(element, &count)| DmViolation {
                rows: (i, j),
                element,
                count,
                expected: self.lambda,
            })
    }

    /// Multiplies column `l` of every row by `m_{0,l}⁻¹`.
    pub fn normalize(&self) -> Result<Self> {
        let report = self.verify();
        if let Some(v) = report.violation {
            return Err(Error::InvalidDifferenceMatrix(format!(
                "rows {:?}: element {} occurs {} times, expected {}",
                v.rows, v.element, v.count, v.expected
            )));
        }
        let head = &self.rows[0];
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .zip(head)
                    .map(|(&e, &h)| self.group.diff(e, h))
                    .collect()
            })
            .collect();
        Self::new(self.group.clone(), self.lambda, rows)
    }

    /// Returns a copy with the columns permuted by `perm` (new column `c` is
    /// old column `perm[c]`).
    pub fn permute_columns(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n_cols() {
            return Err(Error::DimensionMismatch("permutation length".into()));
        }
        let rows = self
            .rows
            .iter()
            .map(|row| perm.iter().map(|&c| row[c]).collect())
            .collect();
        Self::new(self.group.clone(), self.lambda, rows)
    }

    /// Drops row `r`.
    pub fn without_row(&self, r: usize) -> Result<Self> {
        self.row(r)?;
        let rows = self
            .rows
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != r)
            .map(|(_, row)| row.clone())
            .collect();
        Self::new(self.group.clone(), self.lambda, rows)
    }

    /// Multiplication table of GF(q): the (q,q,1)-DM `m_{ij} = α_i·α_j` over
    /// the additive group.
    pub fn gf_mult(q: usize) -> Result<Self> {
        let field = FiniteField::new(q)?;
        let group = additive_group(&field)?;
        let rows = (0..q)
            .map(|i| (0..q).map(|j| field.mul(i, j)).collect())
            .collect();
        Self::new(group, 1, rows)
    }

    /// The (q,q+1,q)-DM with columns `(i,j) ∈ [q]²` in lexicographic order:
    /// row 0 is `α_i`, row 1 is `α_j`, and row `r ≥ 2` is `α_i + α_{r-1}·α_j`.
    /// Block `P_i` is the contiguous run of columns with first coordinate `i`.
    pub fn qq1(q: usize) -> Result<Self> {
        let field = FiniteField::new(q)?;
        let group = additive_group(&field)?;
        let mut rows = vec![Vec::with_capacity(q * q); q + 1];
        for i in 0..q {
            for j in 0..q {
                rows[0].push(i);
                rows[1].push(j);
                for (r, row) in rows.iter_mut().enumerate().skip(2) {
                    row.push(field.add(i, field.mul(r - 1, j)));
                }
            }
        }
        Self::new(group, q, rows)
    }

    /// A (d,p,1)-DM over Z_d with `m_{ij} = i·j mod d`, `p` the smallest
    /// prime dividing `d`.
    pub fn cyclic_smallest_prime(d: usize) -> Result<Self> {
        let p = smallest_prime_factor(d)
            .ok_or_else(|| Error::InvalidParameter(format!("d = {d} must be at least 2")))?;
        let group = FiniteGroup::cyclic(d)?;
        let rows = (0..p)
            .map(|i| (0..d).map(|j| (i * j) % d).collect())
            .collect();
        Self::new(group, 1, rows)
    }

    /// `(d, N, λ)` summary.
    pub fn params(&self) -> (usize, usize, usize) {
        (self.order(), self.n_rows(), self.lambda)
    }
}

/// Additive group of a field: Z_p for prime order, GF(q)+ otherwise.
fn additive_group(field: &FiniteField) -> Result<FiniteGroup> {
    let q = field.order();
    if field.degree() == 1 {
        FiniteGroup::cyclic(q)
    } else {
        FiniteGroup::new(GroupSpec::Field { q })
    }
}
