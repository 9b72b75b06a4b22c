//! The invariant 5-tensor Γ on `∧²V`, its covector twin Γ̃, and the
//! two-sided-invariant function `f(g) = (Γ̃, gΓ)` on 10x10 matrices, which
//! distinguishes a general g from its inverse transpose.
//!
//! Γ is defined by the double permutation sum
//!
//! ```text
//! Γ = Σ_{σ,σ' ∈ S₅} (-1)^{|σ|+|σ'|}
//!       e_{σ1 σ2} ⊗ e_{σ3 σ4} ⊗ e_{σ'1 σ'2} ⊗ e_{σ'3 σ'4} ⊗ e_{σ5 σ'5},
//! ```
//!
//! with unsorted pairs normalized by `e_{ba} = -e_{ab}` and `e_{aa} = 0`.
//! After accumulation the support has 720 basis 5-tuples, all with
//! coefficient ±16. The evaluation-based construction (through the
//! contraction `∧⁴V∨ → V`) reproduces the same table up to one global
//! integer scale, which is pinned in the tests.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactalg::{FieldTag, Matrix, Scalar};
use crate::exterior::{
    contract_i, mask_pair_position, pair_mask, pair_position, wedge, IndexTuple, KVector, Variance,
};
use crate::par;
use crate::symfunc::permutations_s5;
use crate::{Error, Result};

/// Sparse order-5 tensor on `∧²V`-basis indices (each 0..9) with integer
/// coefficients. `variance` records whether it lives in `(∧²V)^{⊗5}` or its
/// dual; Γ and Γ̃ share one coefficient table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor5 {
    variance: Variance,
    coeffs: BTreeMap<[u8; 5], i64>,
}

impl Tensor5 {
    pub fn variance(&self) -> Variance {
        self.variance
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coefficient(&self, key: &[u8; 5]) -> i64 {
        self.coeffs.get(key).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u8; 5], &i64)> {
        self.coeffs.iter()
    }

    /// Table with two tensor slots exchanged.
    pub fn swap_slots(&self, s1: usize, s2: usize) -> Tensor5 {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(k, &c)| {
                let mut k = *k;
                k.swap(s1, s2);
                (k, c)
            })
            .collect();
        Tensor5 {
            variance: self.variance,
            coeffs,
        }
    }

    /// Apply a 10x10 matrix to every slot: the image of the tensor under
    /// `m^{⊗5}`, with coefficients in the matrix field.
    pub fn transform(&self, m: &Matrix) -> Result<BTreeMap<[u8; 5], Scalar>> {
        if m.rows() != 10 || m.cols() != 10 {
            return Err(Error::DimensionMismatch {
                expected: 10,
                got: m.rows().max(m.cols()),
            });
        }
        let field = m.field();
        let mut table: BTreeMap<[u8; 5], Scalar> = self
            .coeffs
            .iter()
            .map(|(k, &c)| (*k, Scalar::from_i64(c, field)))
            .collect();
        for slot in 0..5 {
            let mut next: BTreeMap<[u8; 5], Scalar> = BTreeMap::new();
            for (key, c) in &table {
                let j = key[slot] as usize;
                for i in 0..10 {
                    let entry = m.get(i, j);
                    if entry.is_zero() {
                        continue;
                    }
                    let mut k = *key;
                    k[slot] = i as u8;
                    let term = entry * c;
                    match next.remove(&k) {
                        None => {
                            next.insert(k, term);
                        }
                        Some(old) => {
                            let sum = &old + &term;
                            if !sum.is_zero() {
                                next.insert(k, sum);
                            }
                        }
                    }
                }
            }
            table = next;
        }
        Ok(table)
    }

    /// The integer table embedded into a field.
    pub fn embed(&self, field: FieldTag) -> BTreeMap<[u8; 5], Scalar> {
        self.coeffs
            .iter()
            .map(|(k, &c)| (*k, Scalar::from_i64(c, field)))
            .collect()
    }
}

fn normalized_pair(a: u8, b: u8) -> Option<(usize, i64)> {
    match a.cmp(&b) {
        std::cmp::Ordering::Less => Some((pair_position(a, b), 1)),
        std::cmp::Ordering::Greater => Some((pair_position(b, a), -1)),
        std::cmp::Ordering::Equal => None,
    }
}

/// Γ as the accumulated double permutation sum.
pub fn build_gamma() -> Tensor5 {
    let mut coeffs: BTreeMap<[u8; 5], i64> = BTreeMap::new();
    let perms = permutations_s5();
    for (sigma, s_sign) in perms {
        let p12 = normalized_pair(sigma[0] as u8 + 1, sigma[1] as u8 + 1);
        let p34 = normalized_pair(sigma[2] as u8 + 1, sigma[3] as u8 + 1);
        let (Some(p12), Some(p34)) = (p12, p34) else {
            continue;
        };
        for (tau, t_sign) in perms {
            if sigma[4] == tau[4] {
                continue; // e_{ii} = 0
            }
            let q12 = normalized_pair(tau[0] as u8 + 1, tau[1] as u8 + 1).unwrap();
            let q34 = normalized_pair(tau[2] as u8 + 1, tau[3] as u8 + 1).unwrap();
            let fifth = normalized_pair(sigma[4] as u8 + 1, tau[4] as u8 + 1).unwrap();
            let sign =
                (*s_sign as i64) * (*t_sign as i64) * p12.1 * p34.1 * q12.1 * q34.1 * fifth.1;
            let key = [
                p12.0 as u8,
                p34.0 as u8,
                q12.0 as u8,
                q34.0 as u8,
                fifth.0 as u8,
            ];
            let slot = coeffs.entry(key).or_insert(0);
            *slot += sign;
            if *slot == 0 {
                coeffs.remove(&key);
            }
        }
    }
    Tensor5 {
        variance: Variance::Vector,
        coeffs,
    }
}

/// Γ built from its defining evaluation
/// `Γ(ω₁,...,ω₅) = (I(ω₁∧ω₂) ∧ I(ω₃∧ω₄), ω₅)` at dual-basis covectors.
pub fn build_gamma_from_def() -> Tensor5 {
    let field = FieldTag::Rational;
    // u[(i,j)] = I(e^i-pair ∧ e^j-pair), a vector of V or zero.
    let basis_cov: Vec<KVector> = (0..10)
        .map(|p| {
            KVector::basis_element(
                IndexTuple::from_mask(pair_mask(p)),
                Variance::Covector,
                field,
            )
        })
        .collect();
    let mut u = vec![vec![None; 10]; 10];
    for i in 0..10 {
        for j in 0..10 {
            let w = wedge(&basis_cov[i], &basis_cov[j]).ok();
            u[i][j] = w.filter(|w| !w.is_zero()).map(|w| contract_i(&w).unwrap());
        }
    }
    let mut coeffs = BTreeMap::new();
    for i1 in 0..10u8 {
        for i2 in 0..10u8 {
            let Some(u1) = &u[i1 as usize][i2 as usize] else {
                continue;
            };
            for i3 in 0..10u8 {
                for i4 in 0..10u8 {
                    let Some(u2) = &u[i3 as usize][i4 as usize] else {
                        continue;
                    };
                    let prod = wedge(u1, u2).unwrap();
                    for (tuple, s) in prod.terms() {
                        let i5 = mask_pair_position(tuple.mask()) as u8;
                        let value = rational_to_i64(s);
                        if value != 0 {
                            coeffs.insert([i1, i2, i3, i4, i5], value);
                        }
                    }
                }
            }
        }
    }
    Tensor5 {
        variance: Variance::Vector,
        coeffs,
    }
}

fn rational_to_i64(s: &Scalar) -> i64 {
    use num_traits::ToPrimitive;
    let r = s.as_rational().expect("integer table is built over Q");
    assert!(r.is_integer());
    r.numer().to_i64().expect("small integer coefficient")
}

/// The shared Γ table (vector side), built once.
pub fn gamma() -> &'static Tensor5 {
    static GAMMA: OnceLock<Tensor5> = OnceLock::new();
    GAMMA.get_or_init(build_gamma)
}

/// Γ̃: same coefficient table on the covector side (the image of Γ under the
/// basis-induced isomorphism applied to every slot).
pub fn gamma_dual() -> &'static Tensor5 {
    static GAMMA_DUAL: OnceLock<Tensor5> = OnceLock::new();
    GAMMA_DUAL.get_or_init(|| Tensor5 {
        variance: Variance::Covector,
        coeffs: gamma().coeffs.clone(),
    })
}

fn gamma_support() -> &'static [([u8; 5], i64)] {
    static SUPPORT: OnceLock<Vec<([u8; 5], i64)>> = OnceLock::new();
    SUPPORT.get_or_init(|| gamma().coeffs.iter().map(|(k, &c)| (*k, c)).collect())
}

/// `f(g) = (Γ̃, g^{⊗5} Γ)`: a degree-5 homogeneous polynomial in the entries
/// of g, invariant under `g ↦ (∧²h) g (∧²h')` for special h, h'.
pub fn f_evaluate(g: &Matrix) -> Result<Scalar> {
    if g.rows() != 10 || g.cols() != 10 {
        return Err(Error::DimensionMismatch {
            expected: 10,
            got: g.rows().max(g.cols()),
        });
    }
    match g.field() {
        FieldTag::Fp(p) => Ok(Scalar::Fp {
            value: f_evaluate_fp(&to_fp_rows(g), p),
            modulus: p,
        }),
        FieldTag::Rational => f_evaluate_generic(g),
    }
}

fn to_fp_rows(g: &Matrix) -> [[u64; 10]; 10] {
    let mut rows = [[0u64; 10]; 10];
    for (r, row) in rows.iter_mut().enumerate() {
        for (c, v) in row.iter_mut().enumerate() {
            *v = g.get(r, c).fp_value().unwrap();
        }
    }
    rows
}

fn f_evaluate_fp(g: &[[u64; 10]; 10], p: u64) -> u64 {
    let support = gamma_support();
    par::sum_over_range(
        support.len(),
        64,
        0u64,
        |range| f_fp_block(g, p, range),
        |a, b| crate::exactalg::addmod(a, b, p),
    )
}

fn f_fp_block(g: &[[u64; 10]; 10], p: u64, range: std::ops::Range<usize>) -> u64 {
    use crate::exactalg::{addmod, mulmod};
    let support = gamma_support();
    let reduce = |c: i64| c.rem_euclid(p as i64) as u64;
    let mut acc = 0u64;
    for (k, ck) in &support[range] {
        let ck = reduce(*ck);
        for (j, cj) in support {
            let mut term = mulmod(ck, reduce(*cj), p);
            for slot in 0..5 {
                term = mulmod(term, g[k[slot] as usize][j[slot] as usize], p);
                if term == 0 {
                    break;
                }
            }
            acc = addmod(acc, term, p);
        }
    }
    acc
}

/// Single-threaded twin of [`f_evaluate`], kept public for benchmarks.
pub fn f_evaluate_seq(g: &Matrix) -> Result<Scalar> {
    if g.rows() != 10 || g.cols() != 10 {
        return Err(Error::DimensionMismatch {
            expected: 10,
            got: g.rows().max(g.cols()),
        });
    }
    match g.field() {
        FieldTag::Fp(p) => {
            let value = f_fp_block(&to_fp_rows(g), p, 0..gamma_support().len());
            Ok(Scalar::Fp { value, modulus: p })
        }
        FieldTag::Rational => f_evaluate_generic(g),
    }
}

fn f_evaluate_generic(g: &Matrix) -> Result<Scalar> {
    let field = g.field();
    let support = gamma_support();
    let mut acc = Scalar::zero(field);
    for (k, ck) in support {
        for (j, cj) in support {
            let mut term = Scalar::from_i64(ck * cj, field);
            for slot in 0..5 {
                let entry = g.get(k[slot] as usize, j[slot] as usize);
                if entry.is_zero() {
                    term = Scalar::zero(field);
                    break;
                }
                term = &term * entry;
            }
            acc = &acc + &term;
        }
    }
    Ok(acc)
}

/// Degree-5 polynomial in the ten variables x_{ij} (one per sorted pair),
/// keyed by exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly10 {
    coeffs: BTreeMap<[u8; 10], i64>,
}

impl MultiPoly10 {
    pub fn coefficient(&self, expo: &[u8; 10]) -> i64 {
        self.coeffs.get(expo).copied().unwrap_or(0)
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u8; 10], &i64)> {
        self.coeffs.iter()
    }

    pub fn is_homogeneous_of_degree(&self, d: usize) -> bool {
        self.coeffs
            .keys()
            .all(|e| e.iter().map(|&x| x as usize).sum::<usize>() == d)
    }

    pub fn evaluate(&self, values: &[Scalar; 10]) -> Scalar {
        let field = values[0].tag();
        let mut acc = Scalar::zero(field);
        for (expo, &c) in &self.coeffs {
            let mut term = Scalar::from_i64(c, field);
            for (v, &e) in values.iter().zip(expo) {
                for _ in 0..e {
                    term = &term * v;
                }
            }
            acc = &acc + &term;
        }
        acc
    }
}

/// The restriction of f to diagonal matrices `g = diag(x_{ij})`: collecting
/// the permutation sum gives `Σ_K Γ̃_K Γ_K x^K`, homogeneous of degree 5.
pub fn f_diagonal_polynomial() -> MultiPoly10 {
    let mut coeffs: BTreeMap<[u8; 10], i64> = BTreeMap::new();
    for (k, c) in gamma_support() {
        let mut expo = [0u8; 10];
        for &slot in k {
            expo[slot as usize] += 1;
        }
        *coeffs.entry(expo).or_insert(0) += c * c;
    }
    coeffs.retain(|_, c| *c != 0);
    MultiPoly10 { coeffs }
}

/// `f_PGL(g) = f(g)² / det(g)`: both numerator and denominator are
/// homogeneous of degree 10 in the entries, so the quotient is invariant
/// under rescaling g. Singular g is rejected.
pub fn f_pgl(g: &Matrix) -> Result<Scalar> {
    let det = g.det()?;
    if det.is_zero() {
        return Err(Error::SingularMatrix);
    }
    let f = f_evaluate(g)?;
    Ok(&(&f * &f) * &det.inv()?)
}

/// Outcome of the seeded inverse-transpose experiment.
#[derive(Clone, Debug)]
pub struct DistinguishReport {
    pub seed: u64,
    pub trials: usize,
    pub prime: u64,
    pub inequalities: usize,
    /// Passes iff f(g) != f(g^{-t}) in at least 90% of trials and at least
    /// once (a single strict inequality already shows non-invariance).
    pub pass: bool,
}

impl fmt::Display for DistinguishReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "f(g) != f(g^-t) in {}/{} seeded SL(10, F_{}) draws",
            self.inequalities, self.trials, self.prime
        )
    }
}

/// Draw `trials` random special-linear 10x10 matrices over F_p (products of
/// 30-60 elementary shears) and compare f(g) with f(g^{-t}).
pub fn distinguish_inverse_transpose(
    seed: u64,
    trials: usize,
    p: u64,
) -> Result<DistinguishReport> {
    let field = FieldTag::fp(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut inequalities = 0;
    for _ in 0..trials {
        let count = rng.random_range(30..=60);
        let g = Matrix::random_sl(10, field, count, &mut rng);
        let g_it = g.inverse()?.transpose();
        if f_evaluate(&g)? != f_evaluate(&g_it)? {
            inequalities += 1;
        }
    }
    Ok(DistinguishReport {
        seed,
        trials,
        prime: p,
        inequalities,
        pass: inequalities * 10 >= trials * 9 && inequalities > 0,
    })
}
