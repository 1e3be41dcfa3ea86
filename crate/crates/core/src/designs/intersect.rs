//! Where two translates of different rows agree.
//!
//! For a normalized `(d,N,1)`-DM two translates of distinct non-identity rows
//! meet in exactly one column. For the `(p,p+1,p)`-DM with block-ordered
//! columns they meet in `p` columns whose arrangement falls into one of three
//! cases, checked by [`lemma_qq_case_check`].

use serde::Serialize;

use crate::algebra::is_prime;
use crate::designs::DifferenceMatrix;
use crate::error::{Error, Result};

/// Column `position = block·q + column` of a `(q,q+1,q)`-DM.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BlockPosition {
    pub block: usize,
    pub column: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IntersectionPoint {
    pub position: usize,
    pub value: usize,
    pub block: Option<BlockPosition>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum IntersectionCase {
    /// Rows 1 and 2: all points inside one block.
    SingleBlock,
    /// Row 1 against row `g+1 > 2`: one point per block, fixed value step.
    FixedStep,
    /// Rows `r, r' ≥ 2`: one point per block at a common column, values a
    /// cyclic shift of `(0, …, p-1)`.
    Shift,
}

impl IntersectionCase {
    pub fn number(self) -> u8 {
        match self {
            IntersectionCase::SingleBlock => 1,
            IntersectionCase::FixedStep => 2,
            IntersectionCase::Shift => 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntersectionReport {
    pub rows: (usize, usize),
    pub translates: (usize, usize),
    pub points: Vec<IntersectionPoint>,
    pub case: Option<IntersectionCase>,
}

impl IntersectionReport {
    pub fn positions(&self) -> Vec<usize> {
        self.points.iter().map(|p| p.position).collect()
    }

    pub fn values(&self) -> Vec<usize> {
        self.points.iter().map(|p| p.value).collect()
    }
}

/// All columns `x` with `m_{r,x} ⊙ g_s = m_{r',x} ⊙ g_{s'}`.
///
/// Points carry a block decomposition when `λ = d`, i.e. for matrices laid
/// out like the `(q,q+1,q)` construction.
pub fn translate_intersections(
    m: &DifferenceMatrix,
    r: usize,
    s: usize,
    r2: usize,
    s2: usize,
) -> Result<IntersectionReport> {
    if r == r2 {
        return Err(Error::InvalidParameter(format!(
            "rows must differ, both are {r}"
        )));
    }
    let d = m.order();
    if s >= d || s2 >= d {
        return Err(Error::ElementOutOfRange {
            element: s.max(s2),
            order: d,
        });
    }
    let g = m.group();
    let a = m.row(r)?;
    let b = m.row(r2)?;
    let blocked = m.lambda() == d;
    let points = a
        .iter()
        .zip(b)
        .enumerate()
        .filter_map(|(x, (&u, &v))| {
            let value = g.op(u, s);
            (value == g.op(v, s2)).then_some(IntersectionPoint {
                position: x,
                value,
                block: blocked.then_some(BlockPosition {
                    block: x / d,
                    column: x % d,
                }),
            })
        })
        .collect();
    Ok(IntersectionReport {
        rows: (r, r2),
        translates: (s, s2),
        points,
        case: None,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaCaseReport {
    pub p: usize,
    pub case: IntersectionCase,
    pub intersections: IntersectionReport,
    /// Empty when every property of the case holds.
    pub failures: Vec<String>,
}

impl LemmaCaseReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Builds the `(p,p+1,p)`-DM and checks the intersection structure of
/// translate `s` of row `r` against translate `s'` of row `r'`.
pub fn lemma_qq_case_check(
    p: usize,
    r: usize,
    r2: usize,
    s: usize,
    s2: usize,
) -> Result<LemmaCaseReport> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let m = DifferenceMatrix::qq1(p)?;
    check_intersection_case(&m, r, r2, s, s2)
}

/// Same as [`lemma_qq_case_check`] against a caller-supplied matrix that
/// claims to be the `(p,p+1,p)` construction.
pub fn check_intersection_case(
    m: &DifferenceMatrix,
    r: usize,
    r2: usize,
    s: usize,
    s2: usize,
) -> Result<LemmaCaseReport> {
    let p = m.order();
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if m.lambda() != p || m.n_rows() != p + 1 {
        return Err(Error::DimensionMismatch(format!(
            "expected a ({p},{},{p})-DM, got {:?}",
            p + 1,
            m.params()
        )));
    }
    for row in [r, r2] {
        if row == 0 || row > p {
            return Err(Error::InvalidParameter(format!(
                "row {row} outside 1..={p}"
            )));
        }
    }
    if r == r2 {
        return Err(Error::InvalidParameter(format!(
            "rows must differ, both are {r}"
        )));
    }
    let (r, r2, s, s2) = if r < r2 {
        (r, r2, s, s2)
    } else {
        (r2, r, s2, s)
    };

    let mut report = translate_intersections(m, r, s, r2, s2)?;
    let case = match (r, r2) {
        (1, 2) => IntersectionCase::SingleBlock,
        (1, _) => IntersectionCase::FixedStep,
        _ => IntersectionCase::Shift,
    };
    report.case = Some(case);

    let mut failures = Vec::new();
    let pts = &report.points;
    if pts.len() != p {
        failures.push(format!("expected {p} intersections, found {}", pts.len()));
    }
    let mut seen = vec![false; p];
    for pt in pts {
        if std::mem::replace(&mut seen[pt.value], true) {
            failures.push(format!("value {} repeated", pt.value));
        }
    }
    if pts.len() == p && seen.iter().any(|&v| !v) {
        failures.push("intersection values do not cover [p]".into());
    }

    let blocks: Vec<usize> = pts
        .iter()
        .filter_map(|pt| pt.block.map(|b| b.block))
        .collect();
    let one_per_block = blocks.len() == p && blocks.iter().enumerate().all(|(i, &b)| b == i);
    let modp = |x: i64| x.rem_euclid(p as i64) as usize;

    match case {
        IntersectionCase::SingleBlock => {
            let expected = modp(s as i64 - s2 as i64);
            if !blocks.iter().all(|&b| b == expected) {
                failures.push(format!(
                    "points not confined to block P_{expected}: {blocks:?}"
                ));
            }
        }
        IntersectionCase::FixedStep => {
            let g = r2 - 1;
            let step = modp(mod_inverse(g as i64 - 1, p as i64));
            if !one_per_block {
                failures.push(format!("expected one point per block, got {blocks:?}"));
            } else {
                for w in pts.windows(2) {
                    let diff = modp(w[1].value as i64 - w[0].value as i64);
                    if diff != step && diff != modp(-(step as i64)) {
                        failures.push(format!(
                            "adjacent values {} -> {} differ by {diff}, expected ±{step}",
                            w[0].value, w[1].value
                        ));
                    }
                }
            }
        }
        IntersectionCase::Shift => {
            if !one_per_block {
                failures.push(format!("expected one point per block, got {blocks:?}"));
            } else {
                let cols: Vec<usize> = pts
                    .iter()
                    .filter_map(|pt| pt.block.map(|b| b.column))
                    .collect();
                if cols.iter().any(|&c| c != cols[0]) {
                    failures.push(format!("points not in a common column: {cols:?}"));
                }
                let start = pts[0].value;
                if pts
                    .iter()
                    .enumerate()
                    .any(|(i, pt)| pt.value != (start + i) % p)
                {
                    failures.push(format!(
                        "values {:?} are not a shift of (0..{p})",
                        report.values()
                    ));
                }
            }
        }
    }

    Ok(LemmaCaseReport {
        p,
        case,
        intersections: report,
        failures,
    })
}

fn mod_inverse(a: i64, p: i64) -> i64 {
    let a = a.rem_euclid(p);
    (1..p).find(|&x| (a * x) % p == 1).unwrap_or(0)
}
