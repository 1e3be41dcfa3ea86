//! Difference matrices, their developments, Latin squares and the
//! intersection structure of translates.

pub mod builtin;
mod dm;
mod intersect;
mod latin;

pub use builtin::{builtin, BuiltinInfo, BUILTINS};
pub use dm::{DifferenceMatrix, DmReport, DmViolation};
pub use intersect::{
    check_intersection_case, lemma_qq_case_check, translate_intersections, BlockPosition,
    IntersectionCase, IntersectionPoint, IntersectionReport, LemmaCaseReport,
};
pub use latin::{
    is_latin_square, latin_square_check, mwols_from_dm, wols_check, Development, LatinSquare,
    LatinViolation,
};
