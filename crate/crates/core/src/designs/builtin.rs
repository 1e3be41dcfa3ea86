//! The three difference matrices shipped with the toolkit.

use crate::algebra::{FiniteGroup, GroupSpec};
use crate::designs::DifferenceMatrix;
use crate::error::{Error, Result};

/// Catalog entry for a built-in matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuiltinInfo {
    pub name: &'static str,
    pub description: &'static str,
}

pub const BUILTINS: [BuiltinInfo; 3] = [
    BuiltinInfo {
        name: "12-6-1",
        description: "normalized (12,6,1)-DM over Z2×Z6",
    },
    BuiltinInfo {
        name: "3-5-2",
        description: "(3,5,2)-DM over Z3 without an all-zero row",
    },
    BuiltinInfo {
        name: "3-4-3",
        description: "non-normalized (3,4,3)-DM over Z3",
    },
];

// Entries written as (Z2, Z6) digit pairs.
const DM_12_6_1: [[u8; 12]; 6] = [
    [
        0o00, 0o00, 0o00, 0o00, 0o00, 0o00, 0o00, 0o00, 0o00, 0o00, 0o00, 0o00,
    ],
    [
        0o00, 0o01, 0o02, 0o03, 0o04, 0o05, 0o10, 0o11, 0o12, 0o13, 0o14, 0o15,
    ],
    [
        0o00, 0o03, 0o10, 0o01, 0o13, 0o15, 0o02, 0o12, 0o05, 0o04, 0o11, 0o14,
    ],
    [
        0o00, 0o12, 0o01, 0o15, 0o05, 0o13, 0o03, 0o14, 0o02, 0o11, 0o10, 0o04,
    ],
    [
        0o00, 0o04, 0o15, 0o14, 0o02, 0o11, 0o12, 0o10, 0o13, 0o01, 0o03, 0o05,
    ],
    [
        0o00, 0o10, 0o12, 0o02, 0o11, 0o01, 0o13, 0o15, 0o04, 0o14, 0o05, 0o03,
    ],
];

const DM_3_5_2: [[usize; 6]; 5] = [
    [0, 0, 1, 1, 2, 2],
    [0, 1, 0, 2, 2, 1],
    [0, 1, 2, 0, 1, 2],
    [0, 2, 1, 2, 1, 0],
    [0, 2, 2, 1, 0, 1],
];

const DM_3_4_3: [[usize; 9]; 4] = [
    [0, 0, 0, 1, 1, 1, 2, 2, 2],
    [0, 1, 2, 0, 1, 2, 0, 1, 2],
    [0, 1, 2, 1, 2, 0, 2, 0, 1],
    [0, 2, 1, 1, 0, 2, 2, 1, 0],
];

pub fn builtin(name: &str) -> Result<DifferenceMatrix> {
    match name {
        "12-6-1" => {
            let group = FiniteGroup::new(GroupSpec::Product {
                factors: vec![2, 6],
            })?;
            let rows = DM_12_6_1
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|&e| group.index_of(&[(e >> 3) as usize, (e & 7) as usize]))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            DifferenceMatrix::new(group, 1, rows)
        }
        "3-5-2" => DifferenceMatrix::new(
            FiniteGroup::cyclic(3)?,
            2,
            DM_3_5_2.iter().map(|r| r.to_vec()).collect(),
        ),
        "3-4-3" => DifferenceMatrix::new(
            FiniteGroup::cyclic(3)?,
            3,
            DM_3_4_3.iter().map(|r| r.to_vec()).collect(),
        ),
        other => Err(Error::UnknownBuiltin(other.to_string())),
    }
}
