//! Quadratic forms on `∧²V` (10 variables): the Plücker quadrics `q_v`,
//! linear systems of quadrics cutting out Grassmannian translates, spans,
//! pencils and their corank profiles, common singular points, and the
//! hyperplane attached to a 3-dimensional space of Plücker quadrics.

use crate::exactalg::{FieldTag, Matrix, Scalar, Subspace};
use crate::exterior::{
    masks_of_degree, pair_mask, second_exterior_power, wedge, IndexTuple, KVector, Variance,
    VOL_MASK,
};
use crate::par;
use crate::{Error, Result};

/// Quadratic form `q(α) = αᵀ A α` with A a symmetric 10x10 matrix.
/// The polar form is `B(α, β) = αᵀ A β` (char != 2 throughout), the gradient
/// at α is `2Aα`, and the singular locus of `{q = 0}` is the projectivized
/// kernel of A.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quadric {
    matrix: Matrix,
}

impl Quadric {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if matrix.rows() != 10 || matrix.cols() != 10 || !matrix.is_symmetric() {
            return Err(Error::NotAQuadric);
        }
        Ok(Quadric { matrix })
    }

    pub fn zero(field: FieldTag) -> Self {
        Quadric {
            matrix: Matrix::zero(10, 10, field),
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn field(&self) -> FieldTag {
        self.matrix.field()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn corank(&self) -> usize {
        10 - self.rank()
    }

    pub fn kernel(&self) -> Subspace {
        self.matrix.kernel_basis()
    }

    pub fn evaluate(&self, coords: &[Scalar]) -> Result<Scalar> {
        let av = self.matrix.mul_vec(coords)?;
        let mut acc = Scalar::zero(self.field());
        for (a, c) in av.iter().zip(coords) {
            acc = &acc + &(a * c);
        }
        Ok(acc)
    }

    /// Gradient `2Aα` at a point of the affine cone.
    pub fn gradient(&self, coords: &[Scalar]) -> Result<Vec<Scalar>> {
        let two = Scalar::from_i64(2, self.field());
        Ok(self
            .matrix
            .mul_vec(coords)?
            .into_iter()
            .map(|s| &two * &s)
            .collect())
    }

    pub fn is_zero(&self) -> bool {
        (0..10).all(|r| (0..10).all(|c| self.matrix.get(r, c).is_zero()))
    }

    pub fn add(&self, other: &Quadric) -> Result<Quadric> {
        Quadric::new(self.matrix.add(&other.matrix)?)
    }

    pub fn scale(&self, s: &Scalar) -> Quadric {
        Quadric {
            matrix: self.matrix.scale(s),
        }
    }

    /// The 55 upper-triangle entries, row by row; quadrics are linearly
    /// independent iff these vectors are.
    pub fn coefficient_vector(&self) -> Vec<Scalar> {
        let mut v = Vec::with_capacity(55);
        for r in 0..10 {
            for c in r..10 {
                v.push(self.matrix.get(r, c).clone());
            }
        }
        v
    }
}

/// A linear system of quadrics given by a basis, tagged with the translate
/// it cuts out.
#[derive(Clone, Debug)]
pub struct QuadricSpace {
    label: String,
    members: Vec<Quadric>,
}

impl QuadricSpace {
    pub fn new(label: impl Into<String>, members: Vec<Quadric>) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::EmptyInput);
        }
        let field = members[0].field();
        if members.iter().any(|q| q.field() != field) {
            return Err(Error::FieldMismatch);
        }
        let stacked = Matrix::from_rows(members.iter().map(|q| q.coefficient_vector()).collect())?;
        if stacked.rank() != members.len() {
            return Err(Error::DependentQuadrics);
        }
        Ok(QuadricSpace {
            label: label.into(),
            members,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn members(&self) -> &[Quadric] {
        &self.members
    }

    pub fn dim(&self) -> usize {
        self.members.len()
    }

    pub fn field(&self) -> FieldTag {
        self.members[0].field()
    }

    /// The row space of the stacked 55-entry coefficient vectors.
    pub fn coefficient_span(&self) -> Subspace {
        Subspace::from_span(
            55,
            self.field(),
            self.members
                .iter()
                .map(|q| q.coefficient_vector())
                .collect(),
        )
    }
}

/// The Plücker quadric `q_v(α) = α ∧ α ∧ v`, as a symmetric matrix via
/// `A_{IJ} = ` vol-coefficient of `e_I ∧ e_J ∧ v`. For v != 0 it has rank 6
/// and kernel `v ∧ V`.
pub fn plucker_quadric(v: &KVector) -> Result<Quadric> {
    if v.degree() != 1 {
        return Err(Error::WrongDegree {
            expected: 1,
            got: v.degree(),
        });
    }
    if v.variance() != Variance::Vector {
        return Err(Error::VarianceMismatch);
    }
    let field = v.field();
    let vol = IndexTuple::from_mask(VOL_MASK);
    let basis2: Vec<KVector> = (0..10)
        .map(|p| {
            KVector::basis_element(IndexTuple::from_mask(pair_mask(p)), Variance::Vector, field)
        })
        .collect();
    let matrix = Matrix::from_fn(10, 10, field, |r, c| {
        match wedge(&wedge(&basis2[r], &basis2[c]).unwrap(), v) {
            Ok(w) => w.coefficient(vol),
            Err(_) => Scalar::zero(field),
        }
    })?;
    Quadric::new(matrix)
}

/// The span `v ∧ V` inside `∧²V`, as a canonical subspace of the 10 Plücker
/// coordinates; 4-dimensional for v != 0.
pub fn v_wedge_v(v: &KVector) -> Result<Subspace> {
    if v.degree() != 1 || v.variance() != Variance::Vector {
        return Err(Error::VarianceMismatch);
    }
    let field = v.field();
    let rows = (1..=5)
        .filter_map(|j| {
            let e = KVector::basis_vector(j, Variance::Vector, field);
            let w = wedge(v, &e).unwrap();
            (!w.is_zero()).then(|| w.to_coords())
        })
        .collect();
    Ok(Subspace::from_span(10, field, rows))
}

/// The five Plücker quadrics `q_{e_1}..q_{e_5}` cutting out `Gr(2,5)`.
pub fn grassmannian_quadric_space(field: FieldTag) -> QuadricSpace {
    let members = (1..=5)
        .map(|i| plucker_quadric(&KVector::basis_vector(i, Variance::Vector, field)).unwrap())
        .collect();
    QuadricSpace::new("gr", members).expect("Plücker quadrics are independent")
}

/// The quadric space of the translate `M · Gr(2,5)`: `{q_{e_i} ∘ M⁻¹}`,
/// i.e. the matrices `M⁻ᵀ A_i M⁻¹`. Singular M is rejected.
pub fn translate_quadric_space(m: &Matrix) -> Result<QuadricSpace> {
    if m.rows() != 10 || m.cols() != 10 {
        return Err(Error::DimensionMismatch {
            expected: 10,
            got: m.rows().max(m.cols()),
        });
    }
    let inv = m.inverse().map_err(|_| Error::SingularMatrix)?;
    let inv_t = inv.transpose();
    let members = grassmannian_quadric_space(m.field())
        .members()
        .iter()
        .map(|q| Quadric::new(inv_t.mul(q.matrix()).unwrap().mul(&inv).unwrap()).unwrap())
        .collect();
    QuadricSpace::new("translate", members)
}

/// Same, for the translate induced by an invertible 5x5 matrix through `∧²`.
pub fn translate_quadric_space_gl5(h: &Matrix) -> Result<QuadricSpace> {
    translate_quadric_space(&second_exterior_power(h)?)
}

/// Projective dimension of the span of several quadric spaces: rank of the
/// stacked 55-column coefficient matrix, minus one.
pub fn projective_span_dim(spaces: &[&QuadricSpace]) -> Result<usize> {
    if spaces.is_empty() {
        return Err(Error::EmptyInput);
    }
    let field = spaces[0].field();
    if spaces.iter().any(|s| s.field() != field) {
        return Err(Error::FieldMismatch);
    }
    let rows: Vec<Vec<Scalar>> = spaces
        .iter()
        .flat_map(|s| s.members().iter().map(|q| q.coefficient_vector()))
        .collect();
    Ok(Matrix::from_rows(rows)?.rank() - 1)
}

/// A nonzero vector in `ker A₁ ∩ ker A₂` if one exists. Every quadric of the
/// pencil spanned by q1, q2 is singular at such a point.
pub fn common_singular_vector(q1: &Quadric, q2: &Quadric) -> Result<Option<Vec<Scalar>>> {
    if q1.field() != q2.field() {
        return Err(Error::FieldMismatch);
    }
    let meet = q1.kernel().intersect(&q2.kernel())?;
    Ok(meet.basis().first().cloned())
}

/// Coranks of `λ q1 + μ q2` at all p+1 points of `P¹(F_p)`, reported in the
/// fixed order `[t : 1]` for t = 0..p-1 followed by `[1 : 0]`. Proportional
/// inputs are rejected (they do not span a pencil).
pub fn pencil_corank_profile(q1: &Quadric, q2: &Quadric) -> Result<Vec<((u64, u64), usize)>> {
    let points = pencil_points(q1, q2)?;
    Ok(par::map_collect_vec(points, pencil_member_corank(q1, q2)))
}

/// Single-threaded twin of [`pencil_corank_profile`], kept public for
/// benchmarks.
pub fn pencil_corank_profile_seq(q1: &Quadric, q2: &Quadric) -> Result<Vec<((u64, u64), usize)>> {
    let points = pencil_points(q1, q2)?;
    let corank = pencil_member_corank(q1, q2);
    Ok(points.into_iter().map(corank).collect())
}

fn pencil_points(q1: &Quadric, q2: &Quadric) -> Result<Vec<(u64, u64)>> {
    if q1.field() != q2.field() {
        return Err(Error::FieldMismatch);
    }
    let Some(p) = q1.field().modulus() else {
        return Err(Error::RationalNotSupported);
    };
    let stacked = Matrix::from_rows(vec![q1.coefficient_vector(), q2.coefficient_vector()])?;
    if stacked.rank() < 2 {
        return Err(Error::DegeneratePencil);
    }
    let mut points: Vec<(u64, u64)> = (0..p).map(|t| (t, 1)).collect();
    points.push((1, 0));
    Ok(points)
}

fn pencil_member_corank<'a>(
    q1: &'a Quadric,
    q2: &'a Quadric,
) -> impl Fn((u64, u64)) -> ((u64, u64), usize) + Sync + 'a {
    let field = q1.field();
    move |(lambda, mu)| {
        let q = q1
            .scale(&Scalar::from_u64(lambda, field))
            .add(&q2.scale(&Scalar::from_u64(mu, field)))
            .unwrap();
        ((lambda, mu), q.corank())
    }
}

/// The annihilator of `W ∧ V` for a 3-dimensional subspace W of V, returned
/// as a degree-2 covector with leading coefficient 1. `W ∧ V` is
/// 9-dimensional for every 3-plane, so this is the hyperplane H with
/// `Gr ∩ P(W∧V) = Gr ∩ H`.
pub fn psi_hyperplane(w: &Subspace) -> Result<KVector> {
    if w.ambient() != 5 {
        return Err(Error::DimensionMismatch {
            expected: 5,
            got: w.ambient(),
        });
    }
    if w.dim() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            got: w.dim(),
        });
    }
    let field = w.field();
    let gens: Vec<KVector> = w
        .basis()
        .iter()
        .map(|row| KVector::from_coords(1, Variance::Vector, field, row).unwrap())
        .collect();
    let mut span_rows = Vec::new();
    for wv in &gens {
        for j in 1..=5 {
            let e = KVector::basis_vector(j, Variance::Vector, field);
            let prod = wedge(wv, &e)?;
            if !prod.is_zero() {
                span_rows.push(prod.to_coords());
            }
        }
    }
    let wv_space = Subspace::from_span(10, field, span_rows);
    assert_eq!(wv_space.dim(), 9, "W ∧ V is 9-dimensional for a 3-plane W");
    let stacked = Matrix::from_rows(wv_space.basis().to_vec())?;
    let annihilator = stacked.kernel_basis();
    debug_assert_eq!(annihilator.dim(), 1);
    // Reduced echelon rows lead with 1, so the scale is already canonical.
    let coords = annihilator.basis()[0].clone();
    KVector::from_coords(2, Variance::Covector, field, &coords)
}

/// Evaluate a degree-2 covector (hyperplane form) on Plücker coordinates.
pub fn pair_with_covector(h: &KVector, coords: &[Scalar]) -> Result<Scalar> {
    if h.degree() != 2 || h.variance() != Variance::Covector {
        return Err(Error::VarianceMismatch);
    }
    if coords.len() != 10 {
        return Err(Error::DimensionMismatch {
            expected: 10,
            got: coords.len(),
        });
    }
    let field = h.field();
    let mut acc = Scalar::zero(field);
    let masks = masks_of_degree(2);
    for (pos, mask) in masks.iter().enumerate() {
        let c = h.coefficient(IndexTuple::from_mask(*mask));
        if !c.is_zero() {
            acc = &acc + &(&c * &coords[pos]);
        }
    }
    Ok(acc)
}
