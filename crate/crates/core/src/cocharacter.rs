//! The closed-form route: component dimensions as sums of tableau-count
//! products over admissible shape tuples, plus exact polynomial-degree
//! fitting for the resulting growth sequences.
//!
//! For each 2x2 family the multihomogeneous structure is controlled by
//! tuples of partitions with 0/1 multiplicities; the admissible tuples
//! are one-row (plus one two-row slot in the diagonal/antidiagonal
//! grading) with small parity and size side conditions. Summing the
//! corresponding tableau counts over all admissible tuples of total `m`
//! gives the same `a_m` the brute-force engine computes by rank.

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::graded_model::Family;
use crate::spanning::{GrowthTable, Method};
use crate::tableaux::{schur_dim_one_row, schur_dim_two_row, Partition};
use crate::{Int, Nat};

/// Errors from the shape-sum route.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CochError {
    /// A multiplicity query had the wrong number of shape components
    /// for the family.
    #[error("expected {expected} shape components, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    /// The family has no closed-form shape rules here.
    #[error("no closed-form shape rules for this family")]
    UnsupportedFamily,
}

/// Errors from degree fitting.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum FitError {
    /// Too few samples to certify any polynomial degree.
    #[error("insufficient data: {len} samples certify no degree; extend the table")]
    InsufficientData { len: usize },
}

/// A tuple of partitions, one per graded slot of the family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPartition {
    components: Vec<Partition>,
}

impl MultiPartition {
    pub fn new(components: Vec<Partition>) -> Self {
        MultiPartition { components }
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    /// Sum of all component sizes.
    pub fn total(&self) -> u32 {
        self.components.iter().map(Partition::size).sum()
    }

    /// The component sizes in slot order.
    pub fn sizes(&self) -> Vec<u32> {
        self.components.iter().map(Partition::size).collect()
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

/// Diagonal/antidiagonal grading: slots (p; tau) with `tau = (q+r, q)`,
/// total `m = p + 2q + r`.
fn z2_admissible(p: u32, q: u32, r: u32, m: u32) -> bool {
    p != m && r != m && (r % 2 == 1 || (p + q) % 2 == 1)
}

/// Klein grading: slots in the order (diagonal line, symmetric
/// antidiagonal, skew antidiagonal), sizes (p, q, r), total m.
fn z2z2_admissible(p: u32, q: u32, r: u32, m: u32) -> bool {
    p != m && q != m && r != m && ((p + q) % 2 == 1 || (q + r) % 2 == 1)
}

/// Weight grading: slots in degree order (-1, 0, 1), sizes (p, q, r).
fn z_admissible(p: u32, q: u32, r: u32, m: u32) -> bool {
    p != m && q != m && r != m && p.abs_diff(r) <= 1
}

/// The 0/1 multiplicity of a shape tuple in the family's cocharacter.
///
/// The slot order follows the family's support order. Shapes outside
/// the admissible patterns (more than one row, or two rows in the slot
/// that allows them) get multiplicity 0; wrong arity is an error.
pub fn multiplicity(family: Family, mp: &MultiPartition) -> Result<u8, CochError> {
    let m = mp.total();
    let arity = |expected: usize| -> Result<(), CochError> {
        if mp.components.len() == expected {
            Ok(())
        } else {
            Err(CochError::ArityMismatch {
                expected,
                got: mp.components.len(),
            })
        }
    };
    match family {
        Family::Sl2Z2 => {
            arity(2)?;
            let sigma = &mp.components[0];
            let tau = &mp.components[1];
            if sigma.rows() > 1 || tau.rows() > 2 {
                return Ok(0);
            }
            let p = sigma.size();
            let a = tau.parts().first().copied().unwrap_or(0);
            let b = tau.parts().get(1).copied().unwrap_or(0);
            let (q, r) = (b, a - b);
            Ok(u8::from(z2_admissible(p, q, r, m)))
        }
        Family::Sl2Z2Z2 | Family::Sl2Z => {
            arity(3)?;
            if mp.components.iter().any(|c| c.rows() > 1) {
                return Ok(0);
            }
            let s = mp.sizes();
            let (p, q, r) = (s[0], s[1], s[2]);
            let ok = match family {
                Family::Sl2Z2Z2 => z2z2_admissible(p, q, r, m),
                _ => z_admissible(p, q, r, m),
            };
            Ok(u8::from(ok))
        }
        Family::Sln => Err(CochError::UnsupportedFamily),
    }
}

/// Closed-form component dimension `a_m` for `m >= 2`: the sum over all
/// admissible shape tuples of total `m` of the products of their
/// tableau counts with entries in `1..=k`.
pub fn a_m_formula(family: Family, k: u16, m: u32) -> Result<Nat, CochError> {
    assert!(m >= 2, "the shape sums describe lengths >= 2; got {}", m);
    assert!(k >= 1, "generator count k must be at least 1");
    let k = k as u32;
    let mut total = Nat::zero();
    match family {
        Family::Sl2Z2 => {
            for p in 0..m {
                for q in 0..=(m - p) / 2 {
                    let r = m - p - 2 * q;
                    if !z2_admissible(p, q, r, m) {
                        continue;
                    }
                    let two = schur_dim_two_row(q + r, q, k)
                        .expect("q + r >= q by construction");
                    total += schur_dim_one_row(p, k) * two;
                }
            }
        }
        Family::Sl2Z2Z2 | Family::Sl2Z => {
            for p in 0..=m {
                for q in 0..=m - p {
                    let r = m - p - q;
                    let ok = match family {
                        Family::Sl2Z2Z2 => z2z2_admissible(p, q, r, m),
                        _ => z_admissible(p, q, r, m),
                    };
                    if !ok {
                        continue;
                    }
                    total += schur_dim_one_row(p, k)
                        * schur_dim_one_row(q, k)
                        * schur_dim_one_row(r, k);
                }
            }
        }
        Family::Sln => return Err(CochError::UnsupportedFamily),
    }
    Ok(total)
}

/// Component dimension `a_m` for any `m >= 1`.
///
/// Length 1 is special: the shape sums describe how words of length at
/// least two decompose, while `a_1` is simply the number of free
/// generators — one per support degree per index.
pub fn a_m(family: Family, k: u16, m: u32) -> Result<Nat, CochError> {
    assert!(m >= 1, "lengths start at 1");
    if m == 1 {
        let support_size: u32 = match family {
            Family::Sl2Z2 => 2,
            Family::Sl2Z2Z2 | Family::Sl2Z => 3,
            Family::Sln => return Err(CochError::UnsupportedFamily),
        };
        return Ok(Nat::from(support_size * k as u32));
    }
    a_m_formula(family, k, m)
}

/// Growth value `g(n) = a_1 + .. + a_n` from the closed form.
pub fn growth(family: Family, k: u16, n: u32) -> Result<Nat, CochError> {
    let mut g = Nat::zero();
    for m in 1..=n {
        g += a_m(family, k, m)?;
    }
    Ok(g)
}

/// Closed-form growth table for `m = 1..=m_max`.
pub fn growth_table(family: Family, k: u16, m_max: u32) -> Result<GrowthTable, CochError> {
    let mut a = Vec::with_capacity(m_max as usize);
    for m in 1..=m_max {
        a.push(a_m(family, k, m)?);
    }
    let family_id = match family {
        Family::Sln => "sln".to_string(),
        f => f.to_string(),
    };
    Ok(GrowthTable {
        family_id,
        k,
        method: Method::Formula,
        a,
    })
}

/// Outcome of a polynomial-degree fit on a growth sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FitReport {
    /// Certified polynomial degree.
    pub degree: u32,
    /// 1 when the whole sequence fits one polynomial; 2 when the even
    /// and odd subsequences needed separate fits (the reported degree
    /// is then the larger of the two).
    pub stride: u32,
    /// Range of sample positions used, inclusive.
    pub window: (u32, u32),
    /// True when dropping the last sample certifies the same degree.
    pub stable: bool,
}

/// Smallest `d` whose `d`-th finite differences end in `d + 4` equal
/// values. Returns `None` when no degree can be certified from this
/// many samples.
fn certify(vals: &[Int]) -> Option<u32> {
    let mut diffs: Vec<Int> = vals.to_vec();
    let mut d: u32 = 0;
    loop {
        let need = d as usize + 4;
        if diffs.len() < need {
            return None;
        }
        if diffs[diffs.len() - need..].windows(2).all(|w| w[0] == w[1]) {
            return Some(d);
        }
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
        d += 1;
    }
}

fn fit_once(samples: &[(u32, Int)]) -> Option<(u32, u32)> {
    let vals: Vec<Int> = samples.iter().map(|(_, v)| v.clone()).collect();
    if let Some(d) = certify(&vals) {
        return Some((d, 1));
    }
    // Period-2 behaviour: fit the even and odd positions separately.
    let evens: Vec<Int> = samples
        .iter()
        .filter(|(m, _)| m % 2 == 0)
        .map(|(_, v)| v.clone())
        .collect();
    let odds: Vec<Int> = samples
        .iter()
        .filter(|(m, _)| m % 2 == 1)
        .map(|(_, v)| v.clone())
        .collect();
    match (certify(&evens), certify(&odds)) {
        (Some(a), Some(b)) => Some((a.max(b), 2)),
        _ => None,
    }
}

/// Certify the eventual polynomial degree of an exact integer sequence.
///
/// `samples` must be values at consecutive integer positions, in order.
/// A degree `d` is certified when the `d`-th finite differences end in
/// `d + 4` equal values — for the full sequence (stride 1) or, failing
/// that, for the even-position and odd-position subsequences separately
/// (stride 2, both must certify; the larger degree wins). The fit is
/// `stable` when the window ending one sample earlier certifies the
/// same degree.
pub fn fit_degree(samples: &[(u32, Int)]) -> Result<FitReport, FitError> {
    assert!(
        samples.windows(2).all(|w| w[1].0 == w[0].0 + 1),
        "samples must sit at consecutive positions"
    );
    let (degree, stride) = fit_once(samples).ok_or(FitError::InsufficientData {
        len: samples.len(),
    })?;
    let stable = match fit_once(&samples[..samples.len() - 1]) {
        Some((d, _)) => d == degree,
        None => false,
    };
    Ok(FitReport {
        degree,
        stride,
        window: (samples[0].0, samples[samples.len() - 1].0),
        stable,
    })
}
