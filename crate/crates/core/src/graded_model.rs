//! The graded matrix models: grading data, generic matrices with
//! polynomial entries, and evaluation of left-normed Lie words.
//!
//! Four families are built in. Three are gradings of the traceless 2x2
//! matrices — by Z/2 (diagonal/antidiagonal), by Z/2 x Z/2, and by Z
//! (weight spaces of the diagonal) — and one is the cyclic grading of the
//! traceless n x n matrices in which the matrix unit `e_pq` sits in
//! degree `q - p mod n`.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::poly::{Monomial, VarId};
use crate::{Poly, Rat};

/// Errors from model construction and word evaluation.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ModelError {
    /// Two matrices of different sizes met in an operation.
    #[error("matrix size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    /// A word mentions a letter with no assigned generic matrix.
    #[error("unknown letter {0}")]
    UnknownLetter(String),
    /// Degrees from different grading groups were combined.
    #[error("incompatible degrees: {0} vs {1}")]
    DegreeMismatch(String, String),
}

/// A homogeneous degree in one of the supported grading groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    /// Element of Z/2.
    Z2(u8),
    /// Element of Z/2 x Z/2.
    Z2Z2(u8, u8),
    /// Element of Z.
    Z(i32),
    /// Element of Z/n, tagged with the modulus.
    Zn { value: u8, modulus: u8 },
}

impl Degree {
    /// Group operation. Returns an error on mixed grading groups.
    pub fn add(&self, other: &Degree) -> Result<Degree, ModelError> {
        match (*self, *other) {
            (Degree::Z2(a), Degree::Z2(b)) => Ok(Degree::Z2((a + b) % 2)),
            (Degree::Z2Z2(a, b), Degree::Z2Z2(c, d)) => {
                Ok(Degree::Z2Z2((a + c) % 2, (b + d) % 2))
            }
            (Degree::Z(a), Degree::Z(b)) => Ok(Degree::Z(a + b)),
            (
                Degree::Zn { value: a, modulus: m },
                Degree::Zn { value: b, modulus: m2 },
            ) if m == m2 => Ok(Degree::Zn {
                value: (a + b) % m,
                modulus: m,
            }),
            _ => Err(ModelError::DegreeMismatch(
                self.to_string(),
                other.to_string(),
            )),
        }
    }

    /// The identity element of this degree's group.
    pub fn zero_like(&self) -> Degree {
        match *self {
            Degree::Z2(_) => Degree::Z2(0),
            Degree::Z2Z2(..) => Degree::Z2Z2(0, 0),
            Degree::Z(_) => Degree::Z(0),
            Degree::Zn { modulus, .. } => Degree::Zn { value: 0, modulus },
        }
    }

    /// True for the identity element.
    pub fn is_zero(&self) -> bool {
        matches!(
            *self,
            Degree::Z2(0) | Degree::Z2Z2(0, 0) | Degree::Z(0) | Degree::Zn { value: 0, .. }
        )
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Degree::Z2(a) => write!(f, "{}", a),
            Degree::Z2Z2(a, b) => write!(f, "({},{})", a, b),
            Degree::Z(a) => write!(f, "{}", a),
            Degree::Zn { value, .. } => write!(f, "{}", value),
        }
    }
}

/// The built-in graded families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// Traceless 2x2, graded by Z/2: diagonal part in degree 0,
    /// antidiagonal part in degree 1.
    Sl2Z2,
    /// Traceless 2x2, graded by Z/2 x Z/2 (no component in degree (0,0)).
    Sl2Z2Z2,
    /// Traceless 2x2, graded by Z: weight spaces -1, 0, 1.
    Sl2Z,
    /// Traceless n x n, graded by Z/n via `e_pq` -> `q - p mod n`.
    Sln,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Sl2Z2 => write!(f, "sl2-z2"),
            Family::Sl2Z2Z2 => write!(f, "sl2-z2xz2"),
            Family::Sl2Z => write!(f, "sl2-z"),
            Family::Sln => write!(f, "sln"),
        }
    }
}

/// A fully specified grading: family, matrix size, support (the degrees
/// with nonzero component), and the dimension of each component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradingSpec {
    family: Family,
    n: u8,
    support: Vec<Degree>,
    dims: Vec<u8>,
}

impl GradingSpec {
    /// Traceless 2x2 with the Z/2 grading.
    pub fn sl2_z2() -> Self {
        GradingSpec {
            family: Family::Sl2Z2,
            n: 2,
            support: vec![Degree::Z2(0), Degree::Z2(1)],
            dims: vec![1, 2],
        }
    }

    /// Traceless 2x2 with the Z/2 x Z/2 grading. Component order: the
    /// diagonal line, then the symmetric antidiagonal line, then the
    /// skew one.
    pub fn sl2_z2z2() -> Self {
        GradingSpec {
            family: Family::Sl2Z2Z2,
            n: 2,
            support: vec![
                Degree::Z2Z2(1, 0),
                Degree::Z2Z2(0, 1),
                Degree::Z2Z2(1, 1),
            ],
            dims: vec![1, 1, 1],
        }
    }

    /// Traceless 2x2 with the Z weight grading: degrees -1, 0, 1.
    pub fn sl2_z() -> Self {
        GradingSpec {
            family: Family::Sl2Z,
            n: 2,
            support: vec![Degree::Z(-1), Degree::Z(0), Degree::Z(1)],
            dims: vec![1, 1, 1],
        }
    }

    /// Traceless n x n with the cyclic grading `e_pq -> q - p mod n`.
    /// Degree 0 is the diagonal (dimension n - 1); every other degree
    /// collects the matrix units on one wrapped diagonal (dimension n).
    pub fn sln(n: u8) -> Self {
        assert!(n >= 2, "matrix size must be at least 2");
        let mut support = Vec::with_capacity(n as usize);
        let mut dims = Vec::with_capacity(n as usize);
        for value in 0..n {
            support.push(Degree::Zn { value, modulus: n });
            dims.push(if value == 0 { n - 1 } else { n });
        }
        GradingSpec {
            family: Family::Sln,
            n,
            support,
            dims,
        }
    }

    /// Which family this is.
    pub fn family(&self) -> Family {
        self.family
    }

    /// Size of the underlying matrices.
    pub fn matrix_size(&self) -> usize {
        self.n as usize
    }

    /// Degrees with a nonzero component, in a fixed order.
    pub fn support(&self) -> &[Degree] {
        &self.support
    }

    /// Dimension of the component of degree `d` (0 off the support).
    pub fn component_dim_of(&self, d: &Degree) -> usize {
        match self.slot(d) {
            Some(i) => self.dims[i] as usize,
            None => 0,
        }
    }

    /// Position of `d` in the support order, if on the support.
    pub fn slot(&self, d: &Degree) -> Option<usize> {
        self.support.iter().position(|s| s == d)
    }

    /// Sum of the component dimensions (the dimension of the algebra).
    pub fn total_dim(&self) -> usize {
        self.dims.iter().map(|&d| d as usize).sum()
    }

    /// Stable identifier, e.g. `sl2-z2` or `sln(3)`.
    pub fn id(&self) -> String {
        match self.family {
            Family::Sln => format!("sln({})", self.n),
            f => f.to_string(),
        }
    }
}

/// One graded free generator: a homogeneous degree plus a 1-based index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub degree: Degree,
    pub index: u16,
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}_{}", self.degree, self.index)
    }
}

/// A left-normed Lie word `[[..[l1, l2], l3], .., lm]`, stored as the
/// flat letter sequence.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LieWord(pub Vec<Letter>);

impl LieWord {
    /// Word length (number of letters).
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// True for the empty word (never produced by the enumerators).
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for LieWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", l)?;
        }
        write!(f, "]")
    }
}

/// A square matrix of polynomials, homogeneous of a known degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericMatrix {
    size: usize,
    degree: Degree,
    entries: Vec<Poly>,
}

impl GenericMatrix {
    /// The zero matrix of a given size and degree.
    pub fn zero(size: usize, degree: Degree) -> Self {
        GenericMatrix {
            size,
            degree,
            entries: vec![Poly::zero(); size * size],
        }
    }

    /// Matrix size.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Homogeneous degree this matrix carries.
    pub fn degree(&self) -> Degree {
        self.degree
    }

    /// Entry at `(row, col)`, 0-based.
    pub fn entry(&self, row: usize, col: usize) -> &Poly {
        &self.entries[row * self.size + col]
    }

    fn entry_mut(&mut self, row: usize, col: usize) -> &mut Poly {
        &mut self.entries[row * self.size + col]
    }

    /// True iff every entry is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Poly::is_zero)
    }

    /// Sum of the diagonal entries.
    pub fn trace(&self) -> Poly {
        let mut t = Poly::zero();
        for i in 0..self.size {
            t = t.add(self.entry(i, i));
        }
        t
    }

    /// All entries, row-major.
    pub fn entries(&self) -> &[Poly] {
        &self.entries
    }
}

/// Associative product of two generic matrices; degrees add.
pub fn matmul(a: &GenericMatrix, b: &GenericMatrix) -> Result<GenericMatrix, ModelError> {
    if a.size != b.size {
        return Err(ModelError::SizeMismatch(a.size, b.size));
    }
    let n = a.size;
    let degree = a.degree.add(&b.degree)?;
    let mut out = GenericMatrix::zero(n, degree);
    for i in 0..n {
        for k in 0..n {
            let aik = a.entry(i, k);
            if aik.is_zero() {
                continue;
            }
            for j in 0..n {
                let bkj = b.entry(k, j);
                if bkj.is_zero() {
                    continue;
                }
                let prod = aik.mul(bkj);
                let e = out.entry_mut(i, j);
                *e = e.add(&prod);
            }
        }
    }
    Ok(out)
}

/// Commutator `ab - ba`; degrees add.
pub fn bracket(a: &GenericMatrix, b: &GenericMatrix) -> Result<GenericMatrix, ModelError> {
    let ab = matmul(a, b)?;
    let ba = matmul(b, a)?;
    let mut out = GenericMatrix::zero(a.size, ab.degree);
    for idx in 0..out.entries.len() {
        out.entries[idx] = ab.entries[idx].sub(&ba.entries[idx]);
    }
    Ok(out)
}

/// Build the generic homogeneous generators: for each degree in the
/// support and each index `1..=k`, a matrix whose entries are fresh
/// commuting variables arranged in that component's pattern.
///
/// For the 2x2 families each generator is a linear combination of the
/// component's basis matrices with one fresh coordinate per basis vector.
/// For the n x n family the degree-0 generator is a generic traceless
/// diagonal matrix and the degree-d generator puts one fresh variable on
/// each matrix unit of the wrapped d-th diagonal.
pub fn generic_generators(spec: &GradingSpec, k: u16) -> BTreeMap<Letter, GenericMatrix> {
    assert!(k >= 1, "generator count k must be at least 1");
    let mut out = BTreeMap::new();
    for r in 1..=k {
        match spec.family() {
            Family::Sln => {
                let n = spec.matrix_size();
                for d in spec.support() {
                    let Degree::Zn { value, .. } = *d else { unreachable!() };
                    let mut m = GenericMatrix::zero(n, *d);
                    if value == 0 {
                        // x11 e11 + .. + x(n-1)(n-1) e(n-1)(n-1) - (sum) enn
                        let mut minus_sum = Poly::zero();
                        for i in 0..n - 1 {
                            let v = VarId::Diag { row: i as u8, gen: r };
                            *m.entry_mut(i, i) = Poly::var(v);
                            minus_sum = minus_sum.sub(&Poly::var(v));
                        }
                        *m.entry_mut(n - 1, n - 1) = minus_sum;
                    } else {
                        for p in 0..n {
                            let q = (p + value as usize) % n;
                            *m.entry_mut(p, q) = Poly::var(VarId::Off {
                                row: p as u8,
                                col: q as u8,
                                gen: r,
                            });
                        }
                    }
                    out.insert(Letter { degree: *d, index: r }, m);
                }
            }
            _ => {
                // 2x2 families: combos of h, e, f with fresh coordinates.
                for (slot, d) in spec.support().iter().enumerate() {
                    let basis = sl2_component_basis(spec.family(), slot);
                    let mut m = GenericMatrix::zero(2, *d);
                    let offset: u8 = spec.support()[..slot]
                        .iter()
                        .map(|s| spec.component_dim_of(s) as u8)
                        .sum();
                    for (b, mat) in basis.iter().enumerate() {
                        let v = VarId::Coord {
                            pos: offset + b as u8,
                            gen: r,
                        };
                        for (i, j, c) in mat.iter().copied() {
                            let term = Poly::term(
                                Rat::from_integer(c.into()),
                                Monomial::var(v),
                            );
                            let e = m.entry_mut(i, j);
                            *e = e.add(&term);
                        }
                    }
                    out.insert(Letter { degree: *d, index: r }, m);
                }
            }
        }
    }
    out
}

/// Basis matrices of one graded component of the 2x2 families, as sparse
/// `(row, col, coefficient)` triples. `h = e11 - e22`, `e = e12`,
/// `f = e21`.
fn sl2_component_basis(family: Family, slot: usize) -> Vec<Vec<(usize, usize, i64)>> {
    const H: [(usize, usize, i64); 2] = [(0, 0, 1), (1, 1, -1)];
    const E: [(usize, usize, i64); 1] = [(0, 1, 1)];
    const F: [(usize, usize, i64); 1] = [(1, 0, 1)];
    match (family, slot) {
        (Family::Sl2Z2, 0) => vec![H.to_vec()],
        (Family::Sl2Z2, 1) => vec![E.to_vec(), F.to_vec()],
        (Family::Sl2Z2Z2, 0) => vec![H.to_vec()],
        // e + f and e - f
        (Family::Sl2Z2Z2, 1) => vec![vec![(0, 1, 1), (1, 0, 1)]],
        (Family::Sl2Z2Z2, 2) => vec![vec![(0, 1, 1), (1, 0, -1)]],
        (Family::Sl2Z, 0) => vec![E.to_vec()],
        (Family::Sl2Z, 1) => vec![H.to_vec()],
        (Family::Sl2Z, 2) => vec![F.to_vec()],
        _ => panic!("no such component: {:?} slot {}", family, slot),
    }
}

/// Evaluate a left-normed word on the given generator matrices:
/// a single letter evaluates to its matrix, longer words fold through
/// [`bracket`] from the left.
pub fn evaluate_word(
    word: &LieWord,
    gens: &BTreeMap<Letter, GenericMatrix>,
) -> Result<GenericMatrix, ModelError> {
    let mut letters = word.0.iter();
    let first = letters
        .next()
        .expect("cannot evaluate the empty word");
    let lookup = |l: &Letter| {
        gens.get(l)
            .ok_or_else(|| ModelError::UnknownLetter(l.to_string()))
    };
    let mut acc = lookup(first)?.clone();
    for l in letters {
        acc = bracket(&acc, lookup(l)?)?;
    }
    Ok(acc)
}
