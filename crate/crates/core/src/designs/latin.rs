use std::fmt;

use crate::designs::DifferenceMatrix;
use crate::error::{Error, Result};

/// The `d` translates `m_r ⊙ g_s` of one matrix row, ordered by the
/// canonical index of `g_s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Development {
    row: usize,
    translates: Vec<Vec<usize>>,
}

impl Development {
    pub fn source_row(&self) -> usize {
        self.row
    }

    pub fn translates(&self) -> &[Vec<usize>] {
        &self.translates
    }

    pub fn translate(&self, s: usize) -> &[usize] {
        &self.translates[s]
    }

    /// The development as a square array, when it is one.
    pub fn to_latin_square(&self) -> Result<LatinSquare> {
        LatinSquare::new(self.translates.clone())
    }
}

impl DifferenceMatrix {
    pub fn develop_row(&self, r: usize) -> Result<Development> {
        let row = self.row(r)?;
        let g = self.group();
        let translates = (0..g.order())
            .map(|s| row.iter().map(|&e| g.op(e, s)).collect())
            .collect();
        Ok(Development { row: r, translates })
    }
}

/// Why an array is not a Latin square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatinViolation {
    NotSquare,
    SymbolOutOfRange {
        row: usize,
        col: usize,
        symbol: usize,
    },
    RepeatInRow {
        row: usize,
        symbol: usize,
    },
    RepeatInColumn {
        col: usize,
        symbol: usize,
    },
}

impl fmt::Display for LatinViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatinViolation::NotSquare => write!(f, "array is not square"),
            LatinViolation::SymbolOutOfRange { row, col, symbol } => {
                write!(f, "symbol {symbol} at ({row},{col}) out of range")
            }
            LatinViolation::RepeatInRow { row, symbol } => {
                write!(f, "symbol {symbol} repeated in row {row}")
            }
            LatinViolation::RepeatInColumn { col, symbol } => {
                write!(f, "symbol {symbol} repeated in column {col}")
            }
        }
    }
}

/// Checks that every symbol of `[d]` occurs once per row and once per column.
pub fn latin_square_check(cells: &[Vec<usize>]) -> std::result::Result<(), LatinViolation> {
    let d = cells.len();
    if cells.iter().any(|row| row.len() != d) {
        return Err(LatinViolation::NotSquare);
    }
    for (r, row) in cells.iter().enumerate() {
        let mut seen = vec![false; d];
        for (c, &s) in row.iter().enumerate() {
            if s >= d {
                return Err(LatinViolation::SymbolOutOfRange {
                    row: r,
                    col: c,
                    symbol: s,
                });
            }
            if std::mem::replace(&mut seen[s], true) {
                return Err(LatinViolation::RepeatInRow { row: r, symbol: s });
            }
        }
    }
    for c in 0..d {
        let mut seen = vec![false; d];
        for row in cells {
            let s = row[c];
            if std::mem::replace(&mut seen[s], true) {
                return Err(LatinViolation::RepeatInColumn { col: c, symbol: s });
            }
        }
    }
    Ok(())
}

pub fn is_latin_square(cells: &[Vec<usize>]) -> bool {
    latin_square_check(cells).is_ok()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatinSquare {
    cells: Vec<Vec<usize>>,
}

impl LatinSquare {
    pub fn new(cells: Vec<Vec<usize>>) -> Result<Self> {
        latin_square_check(&cells).map_err(|v| Error::Malformed(v.to_string()))?;
        Ok(Self { cells })
    }

    pub fn order(&self) -> usize {
        self.cells.len()
    }

    pub fn get(&self, row: usize, col: usize) -> usize {
        self.cells[row][col]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.cells
    }
}

/// For every ordered pair of distinct rows `i ≠ j`, counts the columns `s`
/// with `l_{is} = k_{js}`; weak orthogonality requires exactly one.
pub fn wols_check(l: &LatinSquare, k: &LatinSquare) -> Result<bool> {
    if l.order() != k.order() {
        return Err(Error::DimensionMismatch(format!(
            "orders {} and {}",
            l.order(),
            k.order()
        )));
    }
    let d = l.order();
    for i in 0..d {
        for j in 0..d {
            if i == j {
                continue;
            }
            let agreements = (0..d).filter(|&s| l.get(i, s) == k.get(j, s)).count();
            if agreements != 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Developments of rows `1..N` of a normalized `(d,N,1)`-DM.
pub fn mwols_from_dm(m: &DifferenceMatrix) -> Result<Vec<LatinSquare>> {
    if m.lambda() != 1 {
        return Err(Error::LambdaMismatch {
            expected: 1,
            found: m.lambda(),
        });
    }
    if !m.is_normalized() {
        return Err(Error::NotNormalized);
    }
    if !m.is_valid() {
        return Err(Error::InvalidDifferenceMatrix(
            "difference property fails".into(),
        ));
    }
    (1..m.n_rows())
        .map(|r| m.develop_row(r)?.to_latin_square())
        .collect()
}
