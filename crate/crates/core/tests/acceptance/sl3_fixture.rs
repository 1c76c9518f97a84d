//! Frozen per-multidegree dimension tables for the 3x3 cyclic-grading
//! model with two generators per degree, total degrees 1 through 4.
//! Produced by the rank pipeline itself on its first verified run and
//! double-checked by a rerun; later runs must reproduce them exactly.
//! Keys are canonical multidegree strings, values are component dims.

pub const SL3_K2_M1: &[(&str, u64)] = &[
    ("x0_1", 1),
    ("x0_2", 1),
    ("x1_1", 1),
    ("x1_2", 1),
    ("x2_1", 1),
    ("x2_2", 1),
];

pub const SL3_K2_M2: &[(&str, u64)] = &[
    ("x0_1*x1_1", 1),
    ("x0_1*x1_2", 1),
    ("x0_1*x2_1", 1),
    ("x0_1*x2_2", 1),
    ("x0_2*x1_1", 1),
    ("x0_2*x1_2", 1),
    ("x0_2*x2_1", 1),
    ("x0_2*x2_2", 1),
    ("x1_1*x1_2", 1),
    ("x1_1*x2_1", 1),
    ("x1_1*x2_2", 1),
    ("x1_2*x2_1", 1),
    ("x1_2*x2_2", 1),
    ("x2_1*x2_2", 1),
];

pub const SL3_K2_M3: &[(&str, u64)] = &[
    ("x0_1*x0_2*x1_1", 1),
    ("x0_1*x0_2*x1_2", 1),
    ("x0_1*x0_2*x2_1", 1),
    ("x0_1*x0_2*x2_2", 1),
    ("x0_1*x1_1*x1_2", 2),
    ("x0_1*x1_1*x2_1", 1),
    ("x0_1*x1_1*x2_2", 1),
    ("x0_1*x1_1^2", 1),
    ("x0_1*x1_2*x2_1", 1),
    ("x0_1*x1_2*x2_2", 1),
    ("x0_1*x1_2^2", 1),
    ("x0_1*x2_1*x2_2", 2),
    ("x0_1*x2_1^2", 1),
    ("x0_1*x2_2^2", 1),
    ("x0_1^2*x1_1", 1),
    ("x0_1^2*x1_2", 1),
    ("x0_1^2*x2_1", 1),
    ("x0_1^2*x2_2", 1),
    ("x0_2*x1_1*x1_2", 2),
    ("x0_2*x1_1*x2_1", 1),
    ("x0_2*x1_1*x2_2", 1),
    ("x0_2*x1_1^2", 1),
    ("x0_2*x1_2*x2_1", 1),
    ("x0_2*x1_2*x2_2", 1),
    ("x0_2*x1_2^2", 1),
    ("x0_2*x2_1*x2_2", 2),
    ("x0_2*x2_1^2", 1),
    ("x0_2*x2_2^2", 1),
    ("x0_2^2*x1_1", 1),
    ("x0_2^2*x1_2", 1),
    ("x0_2^2*x2_1", 1),
    ("x0_2^2*x2_2", 1),
    ("x1_1*x1_2*x2_1", 2),
    ("x1_1*x1_2*x2_2", 2),
    ("x1_1*x1_2^2", 1),
    ("x1_1*x2_1*x2_2", 2),
    ("x1_1*x2_1^2", 1),
    ("x1_1*x2_2^2", 1),
    ("x1_1^2*x1_2", 1),
    ("x1_1^2*x2_1", 1),
    ("x1_1^2*x2_2", 1),
    ("x1_2*x2_1*x2_2", 2),
    ("x1_2*x2_1^2", 1),
    ("x1_2*x2_2^2", 1),
    ("x1_2^2*x2_1", 1),
    ("x1_2^2*x2_2", 1),
    ("x2_1*x2_2^2", 1),
    ("x2_1^2*x2_2", 1),
];

pub const SL3_K2_M4: &[(&str, u64)] = &[
    ("x0_1*x0_2*x1_1*x1_2", 4),
    ("x0_1*x0_2*x1_1*x2_1", 1),
    ("x0_1*x0_2*x1_1*x2_2", 1),
    ("x0_1*x0_2*x1_1^2", 2),
    ("x0_1*x0_2*x1_2*x2_1", 1),
    ("x0_1*x0_2*x1_2*x2_2", 1),
    ("x0_1*x0_2*x1_2^2", 2),
    ("x0_1*x0_2*x2_1*x2_2", 4),
    ("x0_1*x0_2*x2_1^2", 2),
    ("x0_1*x0_2*x2_2^2", 2),
    ("x0_1*x0_2^2*x1_1", 1),
    ("x0_1*x0_2^2*x1_2", 1),
    ("x0_1*x0_2^2*x2_1", 1),
    ("x0_1*x0_2^2*x2_2", 1),
    ("x0_1*x1_1*x1_2*x2_1", 4),
    ("x0_1*x1_1*x1_2*x2_2", 4),
    ("x0_1*x1_1*x1_2^2", 2),
    ("x0_1*x1_1*x2_1*x2_2", 4),
    ("x0_1*x1_1*x2_1^2", 2),
    ("x0_1*x1_1*x2_2^2", 2),
    ("x0_1*x1_1^2*x1_2", 2),
    ("x0_1*x1_1^2*x2_1", 2),
    ("x0_1*x1_1^2*x2_2", 2),
    ("x0_1*x1_1^3", 1),
    ("x0_1*x1_2*x2_1*x2_2", 4),
    ("x0_1*x1_2*x2_1^2", 2),
    ("x0_1*x1_2*x2_2^2", 2),
    ("x0_1*x1_2^2*x2_1", 2),
    ("x0_1*x1_2^2*x2_2", 2),
    ("x0_1*x1_2^3", 1),
    ("x0_1*x2_1*x2_2^2", 2),
    ("x0_1*x2_1^2*x2_2", 2),
    ("x0_1*x2_1^3", 1),
    ("x0_1*x2_2^3", 1),
    ("x0_1^2*x0_2*x1_1", 1),
    ("x0_1^2*x0_2*x1_2", 1),
    ("x0_1^2*x0_2*x2_1", 1),
    ("x0_1^2*x0_2*x2_2", 1),
    ("x0_1^2*x1_1*x1_2", 3),
    ("x0_1^2*x1_1*x2_1", 1),
    ("x0_1^2*x1_1*x2_2", 1),
    ("x0_1^2*x1_1^2", 1),
    ("x0_1^2*x1_2*x2_1", 1),
    ("x0_1^2*x1_2*x2_2", 1),
    ("x0_1^2*x1_2^2", 1),
    ("x0_1^2*x2_1*x2_2", 3),
    ("x0_1^2*x2_1^2", 1),
    ("x0_1^2*x2_2^2", 1),
    ("x0_1^3*x1_1", 1),
    ("x0_1^3*x1_2", 1),
    ("x0_1^3*x2_1", 1),
    ("x0_1^3*x2_2", 1),
    ("x0_2*x1_1*x1_2*x2_1", 4),
    ("x0_2*x1_1*x1_2*x2_2", 4),
    ("x0_2*x1_1*x1_2^2", 2),
    ("x0_2*x1_1*x2_1*x2_2", 4),
    ("x0_2*x1_1*x2_1^2", 2),
    ("x0_2*x1_1*x2_2^2", 2),
    ("x0_2*x1_1^2*x1_2", 2),
    ("x0_2*x1_1^2*x2_1", 2),
    ("x0_2*x1_1^2*x2_2", 2),
    ("x0_2*x1_1^3", 1),
    ("x0_2*x1_2*x2_1*x2_2", 4),
    ("x0_2*x1_2*x2_1^2", 2),
    ("x0_2*x1_2*x2_2^2", 2),
    ("x0_2*x1_2^2*x2_1", 2),
    ("x0_2*x1_2^2*x2_2", 2),
    ("x0_2*x1_2^3", 1),
    ("x0_2*x2_1*x2_2^2", 2),
    ("x0_2*x2_1^2*x2_2", 2),
    ("x0_2*x2_1^3", 1),
    ("x0_2*x2_2^3", 1),
    ("x0_2^2*x1_1*x1_2", 3),
    ("x0_2^2*x1_1*x2_1", 1),
    ("x0_2^2*x1_1*x2_2", 1),
    ("x0_2^2*x1_1^2", 1),
    ("x0_2^2*x1_2*x2_1", 1),
    ("x0_2^2*x1_2*x2_2", 1),
    ("x0_2^2*x1_2^2", 1),
    ("x0_2^2*x2_1*x2_2", 3),
    ("x0_2^2*x2_1^2", 1),
    ("x0_2^2*x2_2^2", 1),
    ("x0_2^3*x1_1", 1),
    ("x0_2^3*x1_2", 1),
    ("x0_2^3*x2_1", 1),
    ("x0_2^3*x2_2", 1),
    ("x1_1*x1_2*x2_1*x2_2", 4),
    ("x1_1*x1_2*x2_1^2", 3),
    ("x1_1*x1_2*x2_2^2", 3),
    ("x1_1*x1_2^2*x2_1", 3),
    ("x1_1*x1_2^2*x2_2", 3),
    ("x1_1*x1_2^3", 1),
    ("x1_1*x2_1*x2_2^2", 3),
    ("x1_1*x2_1^2*x2_2", 3),
    ("x1_1*x2_1^3", 1),
    ("x1_1*x2_2^3", 1),
    ("x1_1^2*x1_2*x2_1", 3),
    ("x1_1^2*x1_2*x2_2", 3),
    ("x1_1^2*x1_2^2", 1),
    ("x1_1^2*x2_1*x2_2", 2),
    ("x1_1^2*x2_1^2", 1),
    ("x1_1^2*x2_2^2", 1),
    ("x1_1^3*x1_2", 1),
    ("x1_1^3*x2_1", 1),
    ("x1_1^3*x2_2", 1),
    ("x1_2*x2_1*x2_2^2", 3),
    ("x1_2*x2_1^2*x2_2", 3),
    ("x1_2*x2_1^3", 1),
    ("x1_2*x2_2^3", 1),
    ("x1_2^2*x2_1*x2_2", 2),
    ("x1_2^2*x2_1^2", 1),
    ("x1_2^2*x2_2^2", 1),
    ("x1_2^3*x2_1", 1),
    ("x1_2^3*x2_2", 1),
    ("x2_1*x2_2^3", 1),
    ("x2_1^2*x2_2^2", 1),
    ("x2_1^3*x2_2", 1),
];
