//! Sparse multivariate polynomials over an exact scalar ring, plus exact
//! rank computation for matrices of such scalars.
//!
//! Everything here is deterministic: monomials carry a graded order
//! (total degree first, fixed variable order as tie-break), terms live in
//! `BTreeMap`s, and ranks are computed fraction-free over the integers.

mod rank;

pub use rank::{exact_rank, exact_rank_int, IntEchelon};

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use thiserror::Error;

/// Errors from polynomial bookkeeping and rank extraction.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    /// A coefficient vector was requested against a basis that misses one
    /// of the polynomial's monomials.
    #[error("monomial {0} is not in the supplied basis")]
    MonomialNotInBasis(String),
    /// Rows handed to the rank routine have inconsistent lengths.
    #[error("row length mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// A commuting indeterminate. Variables are indexed by where they appear
/// in a generic matrix: a diagonal slot, an off-diagonal slot, or a named
/// coordinate of a basis vector. `gen` numbers the generator the variable
/// belongs to (starting at 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarId {
    /// Diagonal entry `(row, row)` of a degree-zero generic matrix.
    Diag { row: u8, gen: u16 },
    /// Off-diagonal entry `(row, col)` of a generic matrix.
    Off { row: u8, col: u8, gen: u16 },
    /// Coordinate along the `pos`-th basis vector of a graded component.
    Coord { pos: u8, gen: u16 },
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            VarId::Diag { row, gen } => write!(f, "x{}{}_{}", row + 1, row + 1, gen),
            VarId::Off { row, col, gen } => write!(f, "x{}{}_{}", row + 1, col + 1, gen),
            VarId::Coord { pos, gen } => {
                let letter = (b'a' + pos % 26) as char;
                write!(f, "{}{}", letter, gen)
            }
        }
    }
}

/// A monomial: a sorted, duplicate-free list of `(variable, exponent)`
/// pairs with all exponents positive. The empty list is the constant 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Vec<(VarId, u32)>,
}

impl Monomial {
    /// The constant monomial 1.
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    /// A single variable to the first power.
    pub fn var(v: VarId) -> Self {
        Monomial { exps: vec![(v, 1)] }
    }

    /// Build from arbitrary `(variable, exponent)` pairs; merges
    /// duplicates and drops zero exponents.
    pub fn from_pairs<I: IntoIterator<Item = (VarId, u32)>>(pairs: I) -> Self {
        let mut map: BTreeMap<VarId, u32> = BTreeMap::new();
        for (v, e) in pairs {
            if e > 0 {
                *map.entry(v).or_insert(0) += e;
            }
        }
        Monomial {
            exps: map.into_iter().collect(),
        }
    }

    /// Total degree.
    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    /// True for the constant monomial.
    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// Product of two monomials (exponents add).
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            match self.exps[i].0.cmp(&other.exps[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(self.exps[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(other.exps[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((self.exps[i].0, self.exps[i].1 + other.exps[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.exps[i..]);
        out.extend_from_slice(&other.exps[j..]);
        Monomial { exps: out }
    }

    /// The `(variable, exponent)` pairs, sorted by variable.
    pub fn pairs(&self) -> &[(VarId, u32)] {
        &self.exps
    }
}

impl Ord for Monomial {
    /// Graded order: total degree first, then a fixed lexicographic
    /// tie-break on the sorted pair lists. Any strict total order works
    /// for basis bookkeeping; this one keeps low-degree monomials first.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for &(v, e) in &self.exps {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", v)?;
            } else {
                write!(f, "{}^{}", v, e)?;
            }
        }
        Ok(())
    }
}

/// What a scalar must support to serve as a polynomial coefficient.
/// Blanket-implemented; `BigRational` and the machine integers qualify.
pub trait Coeff:
    Clone + Eq + Zero + One + Neg<Output = Self> + Sub<Output = Self> + fmt::Debug
{
}

impl<T> Coeff for T where
    T: Clone + Eq + Zero + One + Neg<Output = T> + Sub<Output = T> + fmt::Debug
{
}

/// A sparse polynomial: monomial -> nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial<C> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coeff> Polynomial<C> {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Polynomial {
            terms: BTreeMap::new(),
        }
    }

    /// The polynomial consisting of a single variable.
    pub fn var(v: VarId) -> Self {
        Self::term(C::one(), Monomial::var(v))
    }

    /// A constant polynomial.
    pub fn constant(c: C) -> Self {
        Self::term(c, Monomial::one())
    }

    /// A single term `c * m`; zero coefficients collapse to zero.
    pub fn term(c: C, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    /// True iff there are no terms.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Add `c * m` in place.
    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Coefficient of a monomial, if present.
    pub fn coeff(&self, m: &Monomial) -> Option<&C> {
        self.terms.get(m)
    }

    /// Iterate over `(monomial, coefficient)` pairs in monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    /// The monomials with nonzero coefficient, in increasing order.
    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    /// Sum of two polynomials.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    /// Difference of two polynomials.
    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    /// Additive inverse.
    pub fn neg(&self) -> Self {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    /// Product of two polynomials (distributes term by term).
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = ca.clone() * cb.clone();
                out.add_term(ma.mul(mb), c);
            }
        }
        out
    }

    /// Multiply by a scalar.
    pub fn scale(&self, s: &C) -> Self {
        if s.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.clone() * s.clone()))
                .collect(),
        }
    }

    /// Expand this polynomial against an ordered monomial basis.
    ///
    /// Returns the coefficient of each basis monomial, in basis order.
    /// Every monomial of `self` must occur in `basis`, otherwise
    /// [`PolyError::MonomialNotInBasis`] is returned; the basis may be
    /// larger than the polynomial's support.
    pub fn coeff_vector(&self, basis: &[Monomial]) -> Result<Vec<C>, PolyError> {
        let index: BTreeMap<&Monomial, usize> =
            basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut out = vec![C::zero(); basis.len()];
        for (m, c) in &self.terms {
            match index.get(m) {
                Some(&i) => out[i] = c.clone(),
                None => return Err(PolyError::MonomialNotInBasis(m.to_string())),
            }
        }
        Ok(out)
    }
}

impl<C: Coeff> Default for Polynomial<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> Add for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: Self) -> Polynomial<C> {
        Polynomial::add(self, rhs)
    }
}

impl<C: Coeff> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: Self) -> Polynomial<C> {
        Polynomial::sub(self, rhs)
    }
}

impl<C: Coeff> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: Self) -> Polynomial<C> {
        Polynomial::mul(self, rhs)
    }
}

impl<C: Coeff> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        Polynomial::neg(self)
    }
}

impl<C: Coeff> fmt::Display for Polynomial<C>
where
    C: fmt::Display,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if m.is_one() {
                write!(f, "{}", c)?;
            } else {
                write!(f, "{}*{}", c, m)?;
            }
        }
        Ok(())
    }
}
