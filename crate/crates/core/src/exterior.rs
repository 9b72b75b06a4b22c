//! Exterior algebra of a fixed 5-dimensional space V with basis e1..e5.
//!
//! Basis elements of `∧^k V` are strictly increasing index tuples, stored as
//! 5-bit masks (bit i-1 set means index i participates). The global order on
//! each degree is lexicographic on the tuples, so for k = 2 the pairs list
//! as (1,2) < (1,3) < ... < (4,5) with positions 0..9.
//!
//! The dual basis pairing is normalized to `<e^{ij}, e_{kl}> = δ`, and
//! `vol_V = e1∧e2∧e3∧e4∧e5` with coefficient +1; every contraction sign
//! flows from these two choices.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;

use crate::exactalg::{random_scalar, FieldTag, Matrix, Scalar};
use crate::{Error, Result};

/// Bitmask of the full index set {1..5}.
pub const VOL_MASK: u8 = 0b11111;

/// The ten sorted index pairs of `∧²V` in lexicographic order.
pub const PAIRS: [(u8, u8); 10] = [
    (1, 2),
    (1, 3),
    (1, 4),
    (1, 5),
    (2, 3),
    (2, 4),
    (2, 5),
    (3, 4),
    (3, 5),
    (4, 5),
];

/// Lexicographic position of the sorted pair (i, j), 1 <= i < j <= 5.
pub fn pair_position(i: u8, j: u8) -> usize {
    debug_assert!(i < j && (1..=5).contains(&i) && j <= 5);
    PAIRS.iter().position(|&p| p == (i, j)).unwrap()
}

/// Mask for the sorted pair at lexicographic position 0..9.
pub fn pair_mask(position: usize) -> u8 {
    let (i, j) = PAIRS[position];
    (1 << (i - 1)) | (1 << (j - 1))
}

/// Position 0..9 of a two-bit mask.
pub fn mask_pair_position(mask: u8) -> usize {
    let (i, j) = mask_to_pair(mask);
    pair_position(i, j)
}

pub fn mask_to_pair(mask: u8) -> (u8, u8) {
    debug_assert_eq!(mask.count_ones(), 2);
    let i = mask.trailing_zeros() as u8 + 1;
    let j = (8 - mask.leading_zeros()) as u8;
    debug_assert!(mask == (1 << (i - 1)) | (1 << (j - 1)));
    (i, j)
}

/// Strictly increasing tuple of indices from {1..5}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexTuple(u8);

impl IndexTuple {
    pub fn from_indices(indices: &[u8]) -> Result<Self> {
        let mut mask = 0u8;
        let mut prev = 0u8;
        for &i in indices {
            if !(1..=5).contains(&i) || i <= prev {
                return Err(Error::BadIndexTuple);
            }
            mask |= 1 << (i - 1);
            prev = i;
        }
        Ok(IndexTuple(mask))
    }

    pub fn from_mask(mask: u8) -> Self {
        debug_assert!(mask <= VOL_MASK);
        IndexTuple(mask)
    }

    pub fn mask(&self) -> u8 {
        self.0
    }

    pub fn degree(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn indices(&self) -> Vec<u8> {
        (1..=5).filter(|&i| self.0 & (1 << (i - 1)) != 0).collect()
    }

    /// Position in the lexicographic enumeration of all degree-k tuples.
    pub fn lex_position(&self) -> usize {
        masks_of_degree(self.degree())
            .iter()
            .position(|&m| m == self.0)
            .unwrap()
    }
}

/// All masks of a given degree, in lexicographic tuple order.
pub fn masks_of_degree(k: usize) -> Vec<u8> {
    let mut masks: Vec<(Vec<u8>, u8)> = (0u8..=VOL_MASK)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (IndexTuple(m).indices(), m))
        .collect();
    masks.sort();
    masks.into_iter().map(|(_, m)| m).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variance {
    /// Element of `∧^k V`.
    Vector,
    /// Element of `∧^k V∨`.
    Covector,
}

/// Sparse element of `∧^k V` or `∧^k V∨`: zero coefficients are absent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KVector {
    degree: usize,
    variance: Variance,
    field: FieldTag,
    coeffs: BTreeMap<u8, Scalar>,
}

impl KVector {
    pub fn zero(degree: usize, variance: Variance, field: FieldTag) -> Self {
        KVector {
            degree,
            variance,
            field,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis_element(tuple: IndexTuple, variance: Variance, field: FieldTag) -> Self {
        let mut v = KVector::zero(tuple.degree(), variance, field);
        v.coeffs.insert(tuple.mask(), Scalar::one(field));
        v
    }

    /// e_i (or e^i on the covector side).
    pub fn basis_vector(i: u8, variance: Variance, field: FieldTag) -> Self {
        KVector::basis_element(IndexTuple::from_indices(&[i]).unwrap(), variance, field)
    }

    /// Degree-k vector from its lexicographically ordered coordinates.
    pub fn from_coords(
        degree: usize,
        variance: Variance,
        field: FieldTag,
        coords: &[Scalar],
    ) -> Result<Self> {
        let masks = masks_of_degree(degree);
        if coords.len() != masks.len() {
            return Err(Error::DimensionMismatch {
                expected: masks.len(),
                got: coords.len(),
            });
        }
        let mut v = KVector::zero(degree, variance, field);
        for (m, s) in masks.iter().zip(coords) {
            if s.tag() != field {
                return Err(Error::FieldMismatch);
            }
            if !s.is_zero() {
                v.coeffs.insert(*m, s.clone());
            }
        }
        Ok(v)
    }

    pub fn to_coords(&self) -> Vec<Scalar> {
        masks_of_degree(self.degree)
            .iter()
            .map(|m| self.coefficient_mask(*m))
            .collect()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn variance(&self) -> Variance {
        self.variance
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (IndexTuple, &Scalar)> {
        self.coeffs
            .iter()
            .map(|(&m, s)| (IndexTuple::from_mask(m), s))
    }

    pub fn coefficient(&self, tuple: IndexTuple) -> Scalar {
        self.coefficient_mask(tuple.mask())
    }

    fn coefficient_mask(&self, mask: u8) -> Scalar {
        self.coeffs
            .get(&mask)
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.field))
    }

    pub fn add(&self, other: &KVector) -> Result<KVector> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (&m, s) in &other.coeffs {
            out.accumulate(m, s.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Scalar) -> KVector {
        assert_eq!(s.tag(), self.field, "scale field mismatch");
        let mut out = KVector::zero(self.degree, self.variance, self.field);
        if s.is_zero() {
            return out;
        }
        for (&m, c) in &self.coeffs {
            out.coeffs.insert(m, s * c);
        }
        out
    }

    pub fn neg(&self) -> KVector {
        let mut out = self.clone();
        for s in out.coeffs.values_mut() {
            *s = -&*s;
        }
        out
    }

    fn accumulate(&mut self, mask: u8, s: Scalar) {
        if s.is_zero() {
            return;
        }
        match self.coeffs.remove(&mask) {
            None => {
                self.coeffs.insert(mask, s);
            }
            Some(old) => {
                let sum = &old + &s;
                if !sum.is_zero() {
                    self.coeffs.insert(mask, sum);
                }
            }
        }
    }

    fn check_compatible(&self, other: &KVector) -> Result<()> {
        if self.variance != other.variance {
            return Err(Error::VarianceMismatch);
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.degree != other.degree {
            return Err(Error::WrongDegree {
                expected: self.degree,
                got: other.degree,
            });
        }
        Ok(())
    }

    pub fn random(
        degree: usize,
        variance: Variance,
        field: FieldTag,
        rng: &mut impl Rng,
    ) -> KVector {
        let masks = masks_of_degree(degree);
        let coords: Vec<Scalar> = masks.iter().map(|_| random_scalar(field, rng)).collect();
        KVector::from_coords(degree, variance, field, &coords).unwrap()
    }
}

/// Sign of the shuffle merging two disjoint masks: parity of the number of
/// pairs (i in a, j in b) with i > j.
#[inline]
pub(crate) fn shuffle_sign(a: u8, b: u8) -> i8 {
    let mut inversions = 0u32;
    let mut bits = b;
    while bits != 0 {
        let j = bits.trailing_zeros();
        inversions += (a >> (j + 1)).count_ones();
        bits &= bits - 1;
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Wedge product. Bilinear, with the shuffle sign of the merged index lists;
/// repeated indices annihilate. Rejects mixed variance.
pub fn wedge(a: &KVector, b: &KVector) -> Result<KVector> {
    if a.variance != b.variance {
        return Err(Error::VarianceMismatch);
    }
    if a.field != b.field {
        return Err(Error::FieldMismatch);
    }
    let degree = a.degree + b.degree;
    if degree > 5 {
        return Err(Error::DegreeOverflow(degree));
    }
    let mut out = KVector::zero(degree, a.variance, a.field);
    for (&ma, sa) in &a.coeffs {
        for (&mb, sb) in &b.coeffs {
            if ma & mb != 0 {
                continue;
            }
            let mut term = sa * sb;
            if shuffle_sign(ma, mb) < 0 {
                term = -term;
            }
            out.accumulate(ma | mb, term);
        }
    }
    Ok(out)
}

/// True iff `a ∧ a = 0`; for degree-2 vectors in 5 variables this is
/// exactly decomposability (rank 2).
pub fn is_decomposable(a: &KVector) -> bool {
    wedge(a, a).map(|w| w.is_zero()).unwrap_or(false)
}

/// The induced 10x10 matrix of g on `∧²V`: entry at (row (i,j), col (k,l))
/// is `g_ik g_jl - g_il g_jk`. Functorial in g.
pub fn second_exterior_power(g: &Matrix) -> Result<Matrix> {
    if g.rows() != 5 || g.cols() != 5 {
        return Err(Error::DimensionMismatch {
            expected: 5,
            got: g.rows().max(g.cols()),
        });
    }
    Matrix::from_fn(10, 10, g.field(), |row, col| {
        let (i, j) = PAIRS[row];
        let (k, l) = PAIRS[col];
        let (i, j, k, l) = (
            i as usize - 1,
            j as usize - 1,
            k as usize - 1,
            l as usize - 1,
        );
        &(g.get(i, k) * g.get(j, l)) - &(g.get(i, l) * g.get(j, k))
    })
}

/// The contraction `I: ∧⁴V∨ → V` defined by `<I(w), e^j> = ` the vol_V
/// coefficient of `w ∧ e^j`.
pub fn contract_i(w: &KVector) -> Result<KVector> {
    if w.variance != Variance::Covector {
        return Err(Error::VarianceMismatch);
    }
    if w.degree != 4 {
        return Err(Error::WrongDegree {
            expected: 4,
            got: w.degree,
        });
    }
    let mut out = KVector::zero(1, Variance::Vector, w.field);
    for (&mask, s) in &w.coeffs {
        let missing = VOL_MASK & !mask;
        debug_assert_eq!(missing.count_ones(), 1);
        let mut term = s.clone();
        if shuffle_sign(mask, missing) < 0 {
            term = -term;
        }
        out.accumulate(missing, term);
    }
    Ok(out)
}

impl fmt::Display for KVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let marker = match self.variance {
            Variance::Vector => "e",
            Variance::Covector => "e^",
        };
        let mut first = true;
        for (tuple, s) in self.terms() {
            let indices = tuple
                .indices()
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(",");
            // Fold the sign of a negative rational into the separator:
            // "3·e{1,3} - 2·e{4,5}" rather than "+ -2·...".
            let (sep, magnitude) = match s {
                Scalar::Rational(r) if r.numer().sign() == num_bigint::Sign::Minus => {
                    (" - ", Scalar::Rational(-r))
                }
                _ => (" + ", s.clone()),
            };
            if first {
                if sep == " - " {
                    write!(f, "-{magnitude}·{marker}{{{indices}}}")?;
                } else {
                    write!(f, "{magnitude}·{marker}{{{indices}}}")?;
                }
                first = false;
            } else {
                write!(f, "{sep}{magnitude}·{marker}{{{indices}}}")?;
            }
        }
        Ok(())
    }
}
