//! Partitions, semistandard Young tableaux, and the dimension counts the
//! closed-form growth route is built from.
//!
//! Two independent ways to the same numbers live here on purpose:
//! [`ssyt_count`] enumerates semistandard tableaux one column at a time,
//! while [`schur_dim_one_row`] and [`schur_dim_two_row`] evaluate binomial
//! closed forms. The enumerator validates the closed forms in tests; the
//! closed forms are what the hot path uses.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

/// Errors for shape handling.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum TabError {
    /// Parts not weakly decreasing, or a closed form was asked for a shape
    /// it does not cover.
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    /// A filling does not match its declared shape or violates the
    /// row/column conditions.
    #[error("invalid filling: {0}")]
    InvalidFilling(String),
}

/// An integer partition: weakly decreasing positive parts. The empty
/// partition is allowed and has size 0.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Build from parts; trailing zeros are dropped, increases rejected.
    pub fn new(parts: Vec<u32>) -> Result<Self, TabError> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(TabError::InvalidShape(format!(
                "parts must be weakly decreasing, got {:?}",
                parts
            )));
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(TabError::InvalidShape(
                "interior zero part".to_string(),
            ));
        }
        Ok(Partition { parts })
    }

    /// The empty partition.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// A single-row partition `(p)`; `p = 0` gives the empty partition.
    pub fn one_row(p: u32) -> Self {
        if p == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![p] }
        }
    }

    /// A two-row partition `(a, b)` with `a >= b`; zero parts collapse.
    pub fn two_row(a: u32, b: u32) -> Result<Self, TabError> {
        Self::new(vec![a, b])
    }

    /// The parts, longest first.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of boxes.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of (nonzero) rows.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// Length of column `c` (0-based): how many rows reach past it.
    pub fn col_len(&self, c: u32) -> usize {
        self.parts.iter().filter(|&&p| p > c).count()
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

/// A semistandard filling of a partition shape: rows weakly increase left
/// to right, columns strictly increase top to bottom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    /// Validate a filling against its shape and the semistandard rules.
    pub fn new(shape: Partition, rows: Vec<Vec<u32>>) -> Result<Self, TabError> {
        if rows.len() != shape.rows() {
            return Err(TabError::InvalidFilling(format!(
                "{} rows for shape {}",
                rows.len(),
                shape
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != shape.parts()[i] as usize {
                return Err(TabError::InvalidFilling(format!(
                    "row {} has length {}, shape says {}",
                    i,
                    row.len(),
                    shape.parts()[i]
                )));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(TabError::InvalidFilling(format!(
                    "row {} not weakly increasing",
                    i
                )));
            }
            if row.iter().any(|&x| x == 0) {
                return Err(TabError::InvalidFilling(
                    "entries start at 1".to_string(),
                ));
            }
        }
        for r in 1..rows.len() {
            for c in 0..rows[r].len() {
                if rows[r][c] <= rows[r - 1][c] {
                    return Err(TabError::InvalidFilling(format!(
                        "column {} not strictly increasing at row {}",
                        c, r
                    )));
                }
            }
        }
        Ok(Tableau { shape, rows })
    }

    /// The underlying shape.
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// The filling, row by row.
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }
}

/// Count semistandard tableaux of the given shape with entries in
/// `1..=k`, by exhaustive column-by-column search.
///
/// Columns are filled left to right; within a column the entries must
/// strictly increase downward and weakly dominate the column to their
/// left entrywise. Shapes taller than `k` admit no filling.
pub fn ssyt_count(shape: &Partition, k: u32) -> BigUint {
    assert!(k >= 1, "entry bound k must be at least 1");
    if shape.rows() == 0 {
        return BigUint::one();
    }
    if shape.rows() as u32 > k {
        return BigUint::zero();
    }
    let width = shape.parts()[0];
    // prev[r] = entry at row r of the previous column (columns shrink, so
    // the rows that exist now existed before).
    fn fill_column(
        shape: &Partition,
        k: u32,
        col: u32,
        prev: &[u32],
        width: u32,
    ) -> BigUint {
        if col == width {
            return BigUint::one();
        }
        let len = shape.col_len(col);
        let mut cur = vec![0u32; len];
        fn descend(
            shape: &Partition,
            k: u32,
            col: u32,
            prev: &[u32],
            cur: &mut Vec<u32>,
            row: usize,
            width: u32,
        ) -> BigUint {
            if row == cur.len() {
                return fill_column(shape, k, col + 1, cur, width);
            }
            let mut lo = if row == 0 { 1 } else { cur[row - 1] + 1 };
            if row < prev.len() {
                lo = lo.max(prev[row]);
            }
            // Strictly increasing below this cell needs headroom.
            let rows_below = (cur.len() - row - 1) as u32;
            let hi = k - rows_below;
            let mut total = BigUint::zero();
            let mut v = lo;
            while v <= hi {
                cur[row] = v;
                total += descend(shape, k, col, prev, cur, row + 1, width);
                v += 1;
            }
            total
        }
        descend(shape, k, col, prev, &mut cur, 0, width)
    }
    fill_column(shape, k, 0, &[], width)
}

/// Number of weakly increasing words of length `p` over `1..=k`:
/// `C(p + k - 1, k - 1)`. This is the single-row tableau count.
pub fn schur_dim_one_row(p: u32, k: u32) -> BigUint {
    assert!(k >= 1, "entry bound k must be at least 1");
    binomial(p + k - 1, k - 1)
}

/// Closed form for the two-row tableau count of shape `(a, b)` with
/// entries in `1..=k`:
///
/// ```text
/// (a - b + 1)/(k - 1) * C(a + k - 1, k - 2) * C(b + k - 2, k - 2)
/// ```
///
/// computed exactly as a rational; the result is asserted to be an
/// integer. For `k = 1` the only fillings are single rows, so the count
/// is 1 when `b = 0` and 0 otherwise. Requires `a >= b`.
pub fn schur_dim_two_row(a: u32, b: u32, k: u32) -> Result<BigUint, TabError> {
    assert!(k >= 1, "entry bound k must be at least 1");
    if a < b {
        return Err(TabError::InvalidShape(format!(
            "two-row shape needs a >= b, got ({}, {})",
            a, b
        )));
    }
    if k == 1 {
        return Ok(if b == 0 { BigUint::one() } else { BigUint::zero() });
    }
    let numer = BigInt::from(a - b + 1)
        * BigInt::from(binomial(a + k - 1, k - 2))
        * BigInt::from(binomial(b + k - 2, k - 2));
    let denom = BigInt::from(k - 1);
    let (q, r) = num_integer::Integer::div_rem(&numer, &denom);
    assert!(
        r.is_zero(),
        "two-row count must be integral: ({},{}) entries {}",
        a,
        b,
        k
    );
    Ok(q.to_biguint().expect("count is nonnegative"))
}

/// Exact binomial coefficient.
pub fn binomial(n: u32, k: u32) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut out = BigUint::one();
    for i in 0..k {
        out = out * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    out
}

/// Convenience for tests and small table printing.
pub fn ssyt_count_u64(shape: &Partition, k: u32) -> u64 {
    ssyt_count(shape, k).to_u64().expect("count fits in u64")
}
