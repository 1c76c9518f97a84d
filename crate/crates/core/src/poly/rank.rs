//! Exact matrix rank over the rationals.
//!
//! Rows are cleared to integers (one shared denominator per row) and fed
//! one at a time into a fraction-free echelon accumulator. Reduction uses
//! cross-multiplication only — no division ever happens — and each stored
//! pivot row is stripped to primitive form (content divided out, leading
//! entry positive) to keep the integers small.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::PolyError;
use crate::Rat;

/// Incremental integer row-echelon form.
///
/// Feed rows with [`IntEchelon::insert`]; the structure maintains a set of
/// pivot rows sorted by leading column and reports the rank of everything
/// seen so far. Insertion order does not affect the final rank.
pub struct IntEchelon {
    width: usize,
    /// Pivot rows, strictly increasing leading column.
    pivots: Vec<(usize, Vec<BigInt>)>,
}

impl IntEchelon {
    /// An empty accumulator for rows of length `width`.
    pub fn new(width: usize) -> Self {
        IntEchelon {
            width,
            pivots: Vec::new(),
        }
    }

    /// Rank of all rows inserted so far.
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Row length this accumulator expects.
    pub fn width(&self) -> usize {
        self.width
    }

    /// Reduce `row` against the pivots and adopt what is left, if anything.
    ///
    /// Returns `Ok(true)` when the row enlarged the span. Errors if the
    /// row has the wrong length.
    pub fn insert(&mut self, mut row: Vec<BigInt>) -> Result<bool, PolyError> {
        if row.len() != self.width {
            return Err(PolyError::DimensionMismatch {
                expected: self.width,
                got: row.len(),
            });
        }
        for (col, pivot) in &self.pivots {
            if row[*col].is_zero() {
                continue;
            }
            // row <- lead * row - factor * pivot   (kills row[col] exactly)
            let factor = std::mem::replace(&mut row[*col], BigInt::zero());
            let lead = &pivot[*col];
            for j in (*col + 1)..self.width {
                let a = std::mem::take(&mut row[j]);
                row[j] = a * lead - &pivot[j] * &factor;
            }
            // Columns before `col` are untouched: this pivot (and all later
            // ones) are zero there.
        }
        match strip_to_primitive(&mut row) {
            None => Ok(false),
            Some(lead_col) => {
                let at = self
                    .pivots
                    .partition_point(|(c, _)| *c < lead_col);
                self.pivots.insert(at, (lead_col, row));
                Ok(true)
            }
        }
    }
}

/// Divide out the gcd of the entries and make the leading entry positive.
/// Returns the leading column, or `None` for the zero row.
fn strip_to_primitive(row: &mut [BigInt]) -> Option<usize> {
    let lead_col = row.iter().position(|x| !x.is_zero())?;
    let mut g = BigInt::zero();
    for x in row[lead_col..].iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                break;
            }
        }
    }
    let negate = row[lead_col].is_negative();
    if !g.is_one() || negate {
        if negate {
            g = -g;
        }
        for x in row[lead_col..].iter_mut() {
            if !x.is_zero() {
                *x /= &g;
            }
        }
    }
    Some(lead_col)
}

/// Exact rank of a matrix given as integer rows. Rows may have any
/// (common) length; an empty matrix has rank 0.
pub fn exact_rank_int(rows: &[Vec<BigInt>]) -> Result<usize, PolyError> {
    let width = match rows.first() {
        None => return Ok(0),
        Some(r) => r.len(),
    };
    let mut ech = IntEchelon::new(width);
    for row in rows {
        ech.insert(row.clone())?;
    }
    Ok(ech.rank())
}

/// Exact rank of a matrix of rationals.
///
/// Each row is scaled by the least common multiple of its denominators —
/// an exact, rank-preserving operation — and the resulting integer rows
/// go through the fraction-free echelon.
pub fn exact_rank(rows: &[Vec<Rat>]) -> Result<usize, PolyError> {
    let width = match rows.first() {
        None => return Ok(0),
        Some(r) => r.len(),
    };
    let mut ech = IntEchelon::new(width);
    for row in rows {
        if row.len() != width {
            return Err(PolyError::DimensionMismatch {
                expected: width,
                got: row.len(),
            });
        }
        ech.insert(clear_denominators(row))?;
    }
    Ok(ech.rank())
}

/// Scale a rational row to integers by the lcm of its denominators.
fn clear_denominators(row: &[Rat]) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for x in row {
        if !x.is_zero() {
            l = l.lcm(x.denom());
        }
    }
    row.iter()
        .map(|x| {
            if x.is_zero() {
                BigInt::zero()
            } else {
                x.numer() * (&l / x.denom())
            }
        })
        .collect()
}
