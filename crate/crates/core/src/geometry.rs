//! Finite-field models: enumeration of Gr(2,5)(F_p) by echelon frames,
//! intersections with Grassmannian translates, Jacobian smoothness probes,
//! and the degenerations cut out by `α ∧ v(α) = 0`.
//!
//! Convention for translates: `intersection_points` of the model built from
//! an invertible M returns `Gr ∩ M·Gr`, the points of Gr on which the
//! translated quadrics `q_{e_i} ∘ M⁻¹` vanish. The degeneration family at
//! t = 1 therefore matches the model of `(id + v)⁻¹`: the section there
//! vanishes at α exactly when `(id + v)(α)` is again decomposable.

use std::sync::OnceLock;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exactalg::{addmod, invmod, is_prime_u64, mulmod, submod, FieldTag, Matrix, Scalar};
use crate::exterior::{pair_mask, shuffle_sign, KVector, Variance, PAIRS, VOL_MASK};
use crate::par;
use crate::quadrics::{grassmannian_quadric_space, translate_quadric_space, Quadric, QuadricSpace};
use crate::{Error, Result};

/// Point of P(∧²V)(F_p): ten coordinates normalized so the first nonzero
/// one is 1, making equality (and ordering) plain componentwise comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjectivePoint {
    pub coords: [u64; 10],
}

impl ProjectivePoint {
    pub fn normalize(mut coords: [u64; 10], p: u64) -> Result<Self> {
        for c in coords.iter_mut() {
            *c %= p;
        }
        let Some(first) = coords.iter().position(|&c| c != 0) else {
            return Err(Error::EmptyInput);
        };
        let inv = invmod(coords[first], p)?;
        for c in coords.iter_mut() {
            *c = mulmod(*c, inv, p);
        }
        Ok(ProjectivePoint { coords })
    }

    pub fn scalars(&self, field: FieldTag) -> Vec<Scalar> {
        self.coords
            .iter()
            .map(|&c| Scalar::from_u64(c, field))
            .collect()
    }

    pub fn kvector(&self, field: FieldTag) -> KVector {
        KVector::from_coords(2, Variance::Vector, field, &self.scalars(field)).unwrap()
    }
}

/// A Grassmannian point together with the reduced echelon frame of the
/// 2-plane it came from.
#[derive(Clone, Copy, Debug)]
pub struct FramedPoint {
    pub point: ProjectivePoint,
    pub frame: [[u64; 5]; 2],
}

fn check_enumeration_prime(p: u64) -> Result<()> {
    if p < 5 || !is_prime_u64(p) {
        return Err(Error::InvalidModulus(p));
    }
    Ok(())
}

/// Expected number of points: the Gaussian binomial
/// `(p⁵-1)(p⁴-1) / ((p²-1)(p-1))`.
pub fn gaussian_binomial_count(p: u64) -> u64 {
    let p = p as u128;
    let num = (p.pow(5) - 1) * (p.pow(4) - 1);
    let den = (p.pow(2) - 1) * (p - 1);
    (num / den) as u64
}

/// Plücker coordinates of the row span of a frame.
fn plucker(frame: &[[u64; 5]; 2], p: u64) -> [u64; 10] {
    let (a, b) = (&frame[0], &frame[1]);
    let mut coords = [0u64; 10];
    for (pos, &(i, j)) in PAIRS.iter().enumerate() {
        let (i, j) = (i as usize - 1, j as usize - 1);
        coords[pos] = submod(mulmod(a[i], b[j], p), mulmod(a[j], b[i], p), p);
    }
    coords
}

/// The echelon shapes (pivot column pairs) with their free-slot layout.
struct Shape {
    pivots: (usize, usize),
    /// Free positions in row 0 then row 1.
    free: Vec<(usize, usize)>,
}

fn shapes() -> Vec<Shape> {
    let mut out = Vec::new();
    for c1 in 0..5 {
        for c2 in (c1 + 1)..5 {
            let mut free = Vec::new();
            for c in (c1 + 1)..5 {
                if c != c2 {
                    free.push((0, c));
                }
            }
            for c in (c2 + 1)..5 {
                free.push((1, c));
            }
            out.push(Shape {
                pivots: (c1, c2),
                free,
            });
        }
    }
    out
}

fn frame_for(shape: &Shape, mut index: u64, p: u64) -> [[u64; 5]; 2] {
    let mut frame = [[0u64; 5]; 2];
    frame[0][shape.pivots.0] = 1;
    frame[1][shape.pivots.1] = 1;
    for &(row, col) in &shape.free {
        frame[row][col] = index % p;
        index /= p;
    }
    frame
}

/// One framed point per 2-dimensional subspace of F_p⁵, enumerated by
/// reduced echelon representatives in a fixed order: exact count, no double
/// counting, byte-stable output independent of thread count.
pub fn enumerate_framed(p: u64) -> Result<Vec<FramedPoint>> {
    check_enumeration_prime(p)?;
    Ok(enumerate_framed_impl(p, true))
}

/// Sequential twin of [`enumerate_framed`], kept public for benchmarks.
pub fn enumerate_framed_seq(p: u64) -> Result<Vec<FramedPoint>> {
    check_enumeration_prime(p)?;
    Ok(enumerate_framed_impl(p, false))
}

fn enumerate_framed_impl(p: u64, parallel: bool) -> Vec<FramedPoint> {
    const BLOCK: u64 = 8192;
    let shapes = shapes();
    let mut blocks: Vec<(usize, u64, u64)> = Vec::new();
    for (si, shape) in shapes.iter().enumerate() {
        let total = p.pow(shape.free.len() as u32);
        let mut start = 0;
        while start < total {
            let len = BLOCK.min(total - start);
            blocks.push((si, start, len));
            start += len;
        }
    }
    let expand = |(si, start, len): (usize, u64, u64)| -> Vec<FramedPoint> {
        let shape = &shapes[si];
        (start..start + len)
            .map(|idx| {
                let frame = frame_for(shape, idx, p);
                let point = ProjectivePoint {
                    coords: plucker(&frame, p),
                };
                FramedPoint { point, frame }
            })
            .collect()
    };
    if parallel {
        par::flat_map_collect(blocks, expand)
    } else {
        blocks.into_iter().flat_map(expand).collect()
    }
}

/// The Plücker image of every 2-plane of F_p⁵.
pub fn enumerate_grassmannian(p: u64) -> Result<Vec<ProjectivePoint>> {
    Ok(enumerate_framed(p)?.into_iter().map(|f| f.point).collect())
}

/// Sequential twin of [`enumerate_grassmannian`], kept public for benchmarks.
pub fn enumerate_grassmannian_seq(p: u64) -> Result<Vec<ProjectivePoint>> {
    Ok(enumerate_framed_seq(p)?
        .into_iter()
        .map(|f| f.point)
        .collect())
}

/// A quadric compiled to raw residues for the hot evaluation loop.
#[derive(Clone)]
struct RawQuadric {
    a: [[u64; 10]; 10],
}

impl RawQuadric {
    fn compile(q: &Quadric) -> RawQuadric {
        let mut a = [[0u64; 10]; 10];
        for (r, row) in a.iter_mut().enumerate() {
            for (c, v) in row.iter_mut().enumerate() {
                *v = q
                    .matrix()
                    .get(r, c)
                    .fp_value()
                    .expect("prime-field quadric");
            }
        }
        RawQuadric { a }
    }

    #[inline]
    fn evaluate(&self, x: &[u64; 10], p: u64) -> u64 {
        let mut acc = 0u64;
        for (row, &xi) in self.a.iter().zip(x) {
            if xi == 0 {
                continue;
            }
            let mut dot = 0u64;
            for (aij, &xj) in row.iter().zip(x) {
                if *aij != 0 && xj != 0 {
                    dot = addmod(dot, mulmod(*aij, xj, p), p);
                }
            }
            acc = addmod(acc, mulmod(xi, dot, p), p);
        }
        acc
    }
}

/// A translate model over F_p: g, the Plücker system of Gr and the system of
/// the translate g·Gr.
#[derive(Clone)]
pub struct TranslateModel {
    p: u64,
    g: Matrix,
    gr: QuadricSpace,
    translate: QuadricSpace,
}

impl TranslateModel {
    pub fn new(g: Matrix) -> Result<Self> {
        let Some(p) = g.field().modulus() else {
            return Err(Error::RationalNotSupported);
        };
        let translate = translate_quadric_space(&g)?;
        Ok(TranslateModel {
            p,
            gr: grassmannian_quadric_space(g.field()),
            g,
            translate,
        })
    }

    /// Model of the translate by `∧²h` for invertible 5x5 h.
    pub fn from_gl5(h: &Matrix) -> Result<Self> {
        TranslateModel::new(crate::exterior::second_exterior_power(h)?)
    }

    /// The companion model with g replaced by its inverse transpose.
    pub fn inverse_transpose(&self) -> Result<Self> {
        TranslateModel::new(self.g.inverse()?.transpose())
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn matrix(&self) -> &Matrix {
        &self.g
    }

    pub fn grassmannian_system(&self) -> &QuadricSpace {
        &self.gr
    }

    pub fn translate_system(&self) -> &QuadricSpace {
        &self.translate
    }

    /// The ten quadrics cutting out the intersection.
    pub fn all_quadrics(&self) -> Vec<Quadric> {
        let mut v = self.gr.members().to_vec();
        v.extend(self.translate.members().iter().cloned());
        v
    }
}

/// Points of `Gr ∩ g·Gr` over F_p: the Grassmannian points killed by all
/// five translate quadrics.
pub fn intersection_points(model: &TranslateModel) -> Result<Vec<ProjectivePoint>> {
    intersection_points_impl(model, true)
}

/// Sequential twin of [`intersection_points`], kept public for benchmarks.
pub fn intersection_points_seq(model: &TranslateModel) -> Result<Vec<ProjectivePoint>> {
    intersection_points_impl(model, false)
}

fn intersection_points_impl(
    model: &TranslateModel,
    parallel: bool,
) -> Result<Vec<ProjectivePoint>> {
    let p = model.p;
    let raw: Vec<RawQuadric> = model
        .translate
        .members()
        .iter()
        .map(RawQuadric::compile)
        .collect();
    let points = if parallel {
        enumerate_grassmannian(p)?
    } else {
        enumerate_grassmannian_seq(p)?
    };
    let keep = move |pt: &ProjectivePoint| raw.iter().all(|q| q.evaluate(&pt.coords, p) == 0);
    Ok(if parallel {
        par::filter_collect(points, keep)
    } else {
        points.into_iter().filter(keep).collect()
    })
}

/// Rank of the 10-row gradient matrix of the given quadrics at a common
/// point. Rank 6 certifies a smooth point of a 3-fold cut out in P⁹ by the
/// system; the input must actually lie on every quadric.
pub fn jacobian_rank_at(pt: &ProjectivePoint, quadrics: &[Quadric]) -> Result<usize> {
    if quadrics.is_empty() {
        return Err(Error::EmptyInput);
    }
    let field = quadrics[0].field();
    let coords = pt.scalars(field);
    let mut rows = Vec::with_capacity(quadrics.len());
    for q in quadrics {
        if !q.evaluate(&coords)?.is_zero() {
            return Err(Error::NotOnQuadrics);
        }
        rows.push(q.gradient(&coords)?);
    }
    Ok(Matrix::from_rows(rows)?.rank())
}

/// Sparse index table for the pairing `∧²V x ∧²V → ∧⁴V`: entries
/// (pair position, pair position, 4-set component 0..4, sign).
fn wedge22_table() -> &'static Vec<(usize, usize, usize, i64)> {
    static TABLE: OnceLock<Vec<(usize, usize, usize, i64)>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut out = Vec::new();
        for p1 in 0..10 {
            for p2 in 0..10 {
                let (m1, m2) = (pair_mask(p1), pair_mask(p2));
                if m1 & m2 != 0 {
                    continue;
                }
                let missing = (VOL_MASK & !(m1 | m2)).trailing_zeros() as usize;
                out.push((p1, p2, missing, shuffle_sign(m1, m2) as i64));
            }
        }
        out
    })
}

/// The five `∧⁴V`-components of `x ∧ y` for `x, y ∈ ∧²V`, indexed by the
/// missing basis index.
fn wedge22(x: &[u64; 10], y: &[u64; 10], p: u64) -> [u64; 5] {
    let mut out = [0u64; 5];
    for &(p1, p2, comp, sign) in wedge22_table() {
        if x[p1] == 0 || y[p2] == 0 {
            continue;
        }
        let term = mulmod(x[p1], y[p2], p);
        out[comp] = if sign > 0 {
            addmod(out[comp], term, p)
        } else {
            submod(out[comp], term, p)
        };
    }
    out
}

fn matvec10(m: &[[u64; 10]; 10], x: &[u64; 10], p: u64) -> [u64; 10] {
    let mut out = [0u64; 10];
    for (o, row) in out.iter_mut().zip(m) {
        let mut acc = 0u64;
        for (a, &xi) in row.iter().zip(x) {
            if *a != 0 && xi != 0 {
                acc = addmod(acc, mulmod(*a, xi, p), p);
            }
        }
        *o = acc;
    }
    out
}

fn to_raw_10(m: &Matrix) -> Result<[[u64; 10]; 10]> {
    if m.rows() != 10 || m.cols() != 10 {
        return Err(Error::DimensionMismatch {
            expected: 10,
            got: m.rows().max(m.cols()),
        });
    }
    let mut raw = [[0u64; 10]; 10];
    for (r, row) in raw.iter_mut().enumerate() {
        for (c, v) in row.iter_mut().enumerate() {
            *v = m.get(r, c).fp_value().ok_or(Error::RationalNotSupported)?;
        }
    }
    Ok(raw)
}

/// Degeneration points by the wedge description: Grassmannian points with
/// `α ∧ v(α) = 0` in `∧⁴V`.
pub fn z_v_points(v: &Matrix, p: u64) -> Result<Vec<ProjectivePoint>> {
    let raw = to_raw_10(v)?;
    let framed = enumerate_framed(p)?;
    Ok(par::filter_map_collect(framed, move |f| {
        let va = matvec10(&raw, &f.point.coords, p);
        (wedge22(&f.point.coords, &va, p) == [0; 5]).then_some(f.point)
    }))
}

/// Degeneration points by the quotient description: α = a∧b is kept when
/// v(α) lies in `⟨a,b⟩ ∧ V`, i.e. its image in `∧²(V/⟨a,b⟩)` vanishes. The
/// membership is decided in a completed basis, not by another wedge.
pub fn z_v_points_quotient(v: &Matrix, p: u64) -> Result<Vec<ProjectivePoint>> {
    let field = v.field();
    if field.modulus() != Some(p) {
        return Err(Error::FieldMismatch);
    }
    let framed = enumerate_framed(p)?;
    Ok(par::filter_map_collect(framed, move |f| {
        let alpha = f.point.scalars(field);
        let u = v.mul_vec(&alpha).expect("10x10 times 10-vector");
        // Complete the frame {a, b} to a basis with standard vectors.
        let mut basis_rows: Vec<Vec<Scalar>> = vec![
            f.frame[0]
                .iter()
                .map(|&x| Scalar::from_u64(x, field))
                .collect(),
            f.frame[1]
                .iter()
                .map(|&x| Scalar::from_u64(x, field))
                .collect(),
        ];
        for i in 0..5 {
            if basis_rows.len() == 5 {
                break;
            }
            let mut candidate = basis_rows.clone();
            let mut e = vec![Scalar::zero(field); 5];
            e[i] = Scalar::one(field);
            candidate.push(e);
            let m = Matrix::from_rows(candidate.clone()).unwrap();
            if m.rank() == candidate.len() {
                basis_rows = candidate;
            }
        }
        let change = Matrix::from_rows(basis_rows).unwrap().transpose();
        let w2 = crate::exterior::second_exterior_power(&change).unwrap();
        let coords_in_new_basis = w2.inverse().unwrap().mul_vec(&u).unwrap();
        // Quotient components: pairs built purely from the completed vectors,
        // i.e. new-basis pairs (3,4), (3,5), (4,5).
        let quotient_pairs = [7usize, 8, 9];
        quotient_pairs
            .iter()
            .all(|&pos| coords_in_new_basis[pos].is_zero())
            .then_some(f.point)
    }))
}

/// Points of the t = 1 member of the degeneration family:
/// `2 α ∧ v(α) + v(α) ∧ v(α) = 0` on Gr.
pub fn family_t1_points(v: &Matrix, p: u64) -> Result<Vec<ProjectivePoint>> {
    let raw = to_raw_10(v)?;
    let framed = enumerate_framed(p)?;
    Ok(par::filter_map_collect(framed, move |f| {
        let va = matvec10(&raw, &f.point.coords, p);
        let a_va = wedge22(&f.point.coords, &va, p);
        let va_va = wedge22(&va, &va, p);
        (0..5)
            .all(|i| addmod(addmod(a_va[i], a_va[i], p), va_va[i], p) == 0)
            .then_some(f.point)
    }))
}

/// Loose Weil-type sanity window for a Calabi-Yau 3-fold point count:
/// `|N - (p³+p²+p+1)| <= 104 p^{3/2}`, checked exactly by squaring.
pub fn weil_window_check(count: u64, p: u64) -> bool {
    let expected = (p as i128).pow(3) + (p as i128).pow(2) + p as i128 + 1;
    let delta = count as i128 - expected;
    delta * delta <= 104 * 104 * (p as i128).pow(3)
}

/// One row of the exploratory point-count comparison.
#[derive(Clone, Debug)]
pub struct CountRow {
    pub prime: u64,
    pub seed: u64,
    pub variant: &'static str,
    pub count: usize,
    pub millis: u128,
}

/// Side-by-side counts of the translate intersections and degenerations.
/// Purely informational: nothing here asserts.
#[derive(Clone, Debug, Default)]
pub struct CountReport {
    pub grassmannian: Vec<(u64, u64)>,
    pub rows: Vec<CountRow>,
}

pub fn point_count_experiment(seeds: &[u64], primes: &[u64]) -> Result<CountReport> {
    let mut report = CountReport::default();
    for &p in primes {
        report.grassmannian.push((p, gaussian_binomial_count(p)));
        let field = FieldTag::fp(p)?;
        for &seed in seeds {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let g = Matrix::random_sl(10, field, 40, &mut rng);
            let v = g.sub(&Matrix::identity(10, field))?;
            let vt = v.transpose();
            let mut run = |variant: &'static str, points: Result<Vec<ProjectivePoint>>| {
                let t0 = Instant::now();
                let points = points?;
                report.rows.push(CountRow {
                    prime: p,
                    seed,
                    variant,
                    count: points.len(),
                    millis: t0.elapsed().as_millis(),
                });
                Ok::<(), Error>(())
            };
            let model = TranslateModel::new(g.clone())?;
            run("xg", intersection_points(&model))?;
            run("yg", intersection_points(&model.inverse_transpose()?))?;
            run("zv", z_v_points(&v, p))?;
            run("zvt", z_v_points(&vt, p))?;
        }
    }
    Ok(report)
}
