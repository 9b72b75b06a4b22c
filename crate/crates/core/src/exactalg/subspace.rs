//! Linear subspaces in canonical (reduced echelon) form.
//!
//! The canonical form is unique per subspace, so equality of subspaces is
//! structural equality of their basis matrices.

use super::matrix::Matrix;
use super::scalar::{FieldTag, Scalar};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    field: FieldTag,
    /// Rows of the unique reduced echelon basis; no zero rows.
    basis: Vec<Vec<Scalar>>,
}

impl Subspace {
    /// Canonicalize a spanning set. Zero vectors are discarded.
    pub fn from_span(ambient: usize, field: FieldTag, vectors: Vec<Vec<Scalar>>) -> Subspace {
        if vectors.is_empty() {
            return Subspace {
                ambient,
                field,
                basis: Vec::new(),
            };
        }
        for v in &vectors {
            assert_eq!(v.len(), ambient, "span vector has wrong length");
        }
        let m = Matrix::from_rows(vectors).expect("validated span");
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace {
            ambient,
            field,
            basis,
        }
    }

    pub fn zero(ambient: usize, field: FieldTag) -> Subspace {
        Subspace {
            ambient,
            field,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize, field: FieldTag) -> Subspace {
        let id = Matrix::identity(ambient, field);
        let basis = (0..ambient).map(|i| id.row(i).to_vec()).collect();
        Subspace {
            ambient,
            field,
            basis,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector has wrong length");
        // Reduce v against the echelon basis; membership iff the residual is 0.
        let mut v = v.to_vec();
        for row in &self.basis {
            let pivot = row.iter().position(|s| !s.is_zero()).expect("no zero rows");
            if v[pivot].is_zero() {
                continue;
            }
            let factor = v[pivot].clone();
            for c in pivot..self.ambient {
                v[c] = &v[c] - &(&factor * &row[c]);
            }
        }
        v.iter().all(Scalar::is_zero)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let mut vectors = self.basis.clone();
        vectors.extend(other.basis.iter().cloned());
        Ok(Subspace::from_span(self.ambient, self.field, vectors))
    }

    /// Exact intersection: solve for coefficient pairs (alpha, beta) with
    /// alpha·A = beta·B by taking the kernel of the stacked transpose.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let a = self.dim();
        let b = other.dim();
        if a == 0 || b == 0 {
            return Ok(Subspace::zero(self.ambient, self.field));
        }
        // Columns: a coefficients for self, b coefficients for other (negated).
        let m = Matrix::from_fn(self.ambient, a + b, self.field, |r, c| {
            if c < a {
                self.basis[c][r].clone()
            } else {
                -&other.basis[c - a][r]
            }
        })?;
        let kernel = m.kernel_basis();
        let mut vectors = Vec::with_capacity(kernel.dim());
        for coeffs in kernel.basis() {
            let mut v = vec![Scalar::zero(self.field); self.ambient];
            for (i, row) in self.basis.iter().enumerate() {
                if coeffs[i].is_zero() {
                    continue;
                }
                for c in 0..self.ambient {
                    v[c] = &v[c] + &(&coeffs[i] * &row[c]);
                }
            }
            vectors.push(v);
        }
        Ok(Subspace::from_span(self.ambient, self.field, vectors))
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: other.ambient,
            });
        }
        Ok(())
    }
}

/// Intersection, sum and equality of two subspaces in one shot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceRelations {
    pub intersection: Subspace,
    pub sum: Subspace,
    pub equal: bool,
}

pub fn subspace_ops(a: &Subspace, b: &Subspace) -> Result<SubspaceRelations> {
    let intersection = a.intersect(b)?;
    let sum = a.sum(b)?;
    Ok(SubspaceRelations {
        equal: a == b,
        intersection,
        sum,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coord(ambient: usize, idx: &[usize], field: FieldTag) -> Vec<Vec<Scalar>> {
        idx.iter()
            .map(|&i| {
                let mut v = vec![Scalar::zero(field); ambient];
                v[i] = Scalar::one(field);
                v
            })
            .collect()
    }

    #[test]
    fn self_ops_are_trivial() {
        let field = FieldTag::fp(7).unwrap();
        let a = Subspace::from_span(5, field, coord(5, &[0, 1], field));
        let rel = subspace_ops(&a, &a).unwrap();
        assert!(rel.equal);
        assert_eq!(rel.intersection, a);
        assert_eq!(rel.sum, a);
    }

    #[test]
    fn coordinate_intersection() {
        let field = FieldTag::Rational;
        let a = Subspace::from_span(5, field, coord(5, &[0, 1], field));
        let b = Subspace::from_span(5, field, coord(5, &[1, 2], field));
        let rel = subspace_ops(&a, &b).unwrap();
        let e2 = Subspace::from_span(5, field, coord(5, &[1], field));
        assert_eq!(rel.intersection, e2);
        assert_eq!(rel.sum.dim(), 3);
        assert!(!rel.equal);
    }

    #[test]
    fn dimension_formula() {
        use rand::SeedableRng;
        let field = FieldTag::fp(7).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..25 {
            let a = Subspace::from_span(
                6,
                field,
                (0..3).map(|_| random_vec(6, field, &mut rng)).collect(),
            );
            let b = Subspace::from_span(
                6,
                field,
                (0..4).map(|_| random_vec(6, field, &mut rng)).collect(),
            );
            let rel = subspace_ops(&a, &b).unwrap();
            assert_eq!(rel.sum.dim() + rel.intersection.dim(), a.dim() + b.dim());
        }
    }

    #[test]
    fn mismatched_ambient_rejected() {
        let field = FieldTag::Rational;
        let a = Subspace::full(3, field);
        let b = Subspace::full(4, field);
        assert!(subspace_ops(&a, &b).is_err());
    }

    #[test]
    fn canonical_form_ignores_presentation() {
        let field = FieldTag::fp(7).unwrap();
        let v1 = vec![
            Scalar::from_i64(1, field),
            Scalar::from_i64(2, field),
            Scalar::from_i64(3, field),
        ];
        let v2 = vec![
            Scalar::from_i64(4, field),
            Scalar::from_i64(5, field),
            Scalar::from_i64(6, field),
        ];
        let sum = v1.iter().zip(&v2).map(|(a, b)| a + b).collect::<Vec<_>>();
        let a = Subspace::from_span(3, field, vec![v1.clone(), v2.clone()]);
        let b = Subspace::from_span(3, field, vec![sum, v2]);
        assert_eq!(a, b);
    }

    fn random_vec(n: usize, field: FieldTag, rng: &mut impl rand::Rng) -> Vec<Scalar> {
        (0..n)
            .map(|_| super::super::matrix::random_scalar(field, rng))
            .collect()
    }
}
