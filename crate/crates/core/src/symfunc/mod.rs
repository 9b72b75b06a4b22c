//! Symmetric functions in 5 variables: partitions, Schur polynomials via
//! Jacobi–Trudi, the substitution plethysm `s_λ[e₂]`, Schur-multiplicity
//! extraction by the 120-term alternant, and the Weyl dimension formula.

mod dense;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Error, Result};
use dense::{expand_orbits, jacobi_trudi, total_degree};

pub(crate) use dense::PartitionTable;

/// Integer partition: weakly decreasing parts, trailing zeros normalized
/// away.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(
                parts.iter().map(|&x| x as i64).collect(),
            ));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().map(|&x| x as usize).sum()
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Homogeneous symmetric polynomial in 5 variables with exact integer
/// coefficients, fully expanded on exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPoly {
    degree: usize,
    coeffs: BTreeMap<[u8; 5], BigInt>,
}

impl SymPoly {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coefficient(&self, expo: &[u8; 5]) -> BigInt {
        self.coeffs.get(expo).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u8; 5], &BigInt)> {
        self.coeffs.iter()
    }

    /// Value at (1,1,1,1,1): sum of all coefficients.
    pub fn value_at_ones(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Coefficients are constant on permutation orbits of the exponents.
    pub fn is_symmetric_at(&self, expo: &[u8; 5], perm: &[usize; 5]) -> bool {
        let permuted = [
            expo[perm[0]],
            expo[perm[1]],
            expo[perm[2]],
            expo[perm[3]],
            expo[perm[4]],
        ];
        self.coefficient(expo) == self.coefficient(&permuted)
    }

    fn from_m_form(m: dense::MPoly, table: &PartitionTable) -> SymPoly {
        let degree = m.degree;
        let coeffs = expand_orbits(&m, table)
            .into_iter()
            .map(|(e, c)| (e, BigInt::from(c)))
            .collect();
        SymPoly { degree, coeffs }
    }
}

/// The ten monomials of `e₂ = Σ_{i<j} x_i x_j`; multiplicity-free, which is
/// what makes the substitution plethysm below valid.
pub fn e2_monomials() -> Vec<[u8; 5]> {
    let mut out = Vec::with_capacity(10);
    for i in 0..5 {
        for j in (i + 1)..5 {
            let mut e = [0u8; 5];
            e[i] = 1;
            e[j] = 1;
            out.push(e);
        }
    }
    out
}

/// Unit variable monomials x1..x5.
pub fn unit_monomials() -> Vec<[u8; 5]> {
    (0..5)
        .map(|i| {
            let mut e = [0u8; 5];
            e[i] = 1;
            e
        })
        .collect()
}

/// Schur polynomial of shape `lam` in the given (possibly composite)
/// monomial variables, expanded in the 5 base variables. The monomials must
/// share one total degree so the result is homogeneous.
pub fn schur_poly(lam: &Partition, vars: &[[u8; 5]]) -> Result<SymPoly> {
    if vars.is_empty() {
        return Err(Error::EmptyInput);
    }
    if lam.len() > vars.len() {
        return Err(Error::TooManyParts {
            got: lam.len(),
            limit: vars.len(),
        });
    }
    let var_degree = total_degree(&vars[0]);
    if vars.iter().any(|v| total_degree(v) != var_degree) {
        return Err(Error::MixedMonomialDegrees);
    }
    if lam.is_empty() {
        let mut coeffs = BTreeMap::new();
        coeffs.insert([0u8; 5], BigInt::one());
        return Ok(SymPoly { degree: 0, coeffs });
    }
    let shape: Vec<usize> = lam.parts().iter().map(|&x| x as usize).collect();
    let (m, table) = jacobi_trudi(&shape, vars)?;
    Ok(SymPoly::from_m_form(m, &table))
}

/// The plethysm `s_lam[e₂]` in 5 variables: the Schur polynomial of `lam`
/// evaluated at the 10 monomials x_i x_j, i < j. Valid as plethysm because
/// the monomial expansion of e₂ is multiplicity-free. The result is the
/// character of the lam-Schur power of `∧²V` as a GL(5)-representation.
pub fn plethysm_with_e2(lam: &Partition) -> Result<SymPoly> {
    if lam.weight() > 15 {
        return Err(Error::DegreeBound(2 * lam.weight(), 30));
    }
    if lam.len() > 10 {
        return Err(Error::TooManyParts {
            got: lam.len(),
            limit: 10,
        });
    }
    schur_poly(lam, &e2_monomials())
}

const RHO: [i64; 5] = [4, 3, 2, 1, 0];

/// Multiplicity of `s_mu` in the Schur expansion of a symmetric polynomial,
/// via the alternant Σ_w sign(w) · coeff(w(mu+ρ) - ρ).
pub fn schur_multiplicity(f: &SymPoly, mu: &Partition) -> Result<BigInt> {
    if mu.len() > 5 {
        return Err(Error::TooManyParts {
            got: mu.len(),
            limit: 5,
        });
    }
    if mu.weight() != f.degree() {
        return Err(Error::WeightMismatch {
            partition: mu.weight(),
            degree: f.degree(),
        });
    }
    let mut shifted = [0i64; 5];
    for (i, s) in shifted.iter_mut().enumerate() {
        let part = mu.parts().get(i).copied().unwrap_or(0) as i64;
        *s = part + RHO[i];
    }
    let mut acc = BigInt::zero();
    for (perm, sign) in permutations_s5() {
        let mut expo = [0u8; 5];
        let mut ok = true;
        for i in 0..5 {
            let v = shifted[perm[i]] - RHO[i];
            if !(0..=255).contains(&v) {
                ok = false;
                break;
            }
            expo[i] = v as u8;
        }
        if !ok {
            continue;
        }
        let c = f.coefficient(&expo);
        if *sign > 0 {
            acc += c;
        } else {
            acc -= c;
        }
    }
    Ok(acc)
}

/// Full Schur decomposition of a degree-d symmetric polynomial: all mu with
/// at most 5 parts and nonzero multiplicity.
pub fn schur_decomposition(f: &SymPoly) -> Result<Vec<(Partition, BigInt)>> {
    let table = PartitionTable::new(f.degree());
    let mut out = Vec::new();
    for e in &table.parts {
        let mu = Partition::new(e.iter().map(|&x| x as u32).collect())?;
        let m = schur_multiplicity(f, &mu)?;
        if !m.is_zero() {
            out.push((mu, m));
        }
    }
    Ok(out)
}

/// Weyl dimension formula for GL(n): dim of the irreducible with highest
/// weight `lam` (weakly decreasing, negative entries allowed) is
/// `Π_{i<j} (lam_i - lam_j + j - i) / (j - i)`.
pub fn weyl_dim(lam: &[i64], n: usize) -> Result<BigInt> {
    if lam.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: lam.len(),
        });
    }
    if lam.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::NotAPartition(lam.to_vec()));
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        for j in (i + 1)..n {
            num *= BigInt::from(lam[i] - lam[j] + (j - i) as i64);
            den *= BigInt::from((j - i) as i64);
        }
    }
    let (q, r) = num_integer::Integer::div_rem(&num, &den);
    debug_assert!(r.is_zero(), "Weyl dimension product always divides");
    Ok(q)
}

/// Dimension bookkeeping for a plethysm character: returns the
/// multiplicity-weighted sum of Weyl dimensions next to the value at
/// (1,...,1); the two must agree.
pub fn dimension_consistency(f: &SymPoly) -> Result<(BigInt, BigInt)> {
    let decomposition = schur_decomposition(f)?;
    let mut weighted = BigInt::zero();
    for (mu, mult) in &decomposition {
        let mut lam = [0i64; 5];
        for (i, &p) in mu.parts().iter().enumerate() {
            lam[i] = p as i64;
        }
        weighted += mult * weyl_dim(&lam, 5)?;
    }
    Ok((weighted, f.value_at_ones()))
}

/// All 120 permutations of {0..4} with signs.
pub(crate) fn permutations_s5() -> &'static [([usize; 5], i8)] {
    use std::sync::OnceLock;
    static PERMS: OnceLock<Vec<([usize; 5], i8)>> = OnceLock::new();
    PERMS.get_or_init(|| {
        let mut out = Vec::with_capacity(120);
        let mut items = [0usize, 1, 2, 3, 4];
        heap_permutations(&mut items, 5, &mut out);
        out
    })
}

fn heap_permutations(items: &mut [usize; 5], k: usize, out: &mut Vec<([usize; 5], i8)>) {
    if k == 1 {
        let sign = permutation_sign(items);
        out.push((*items, sign));
        return;
    }
    for i in 0..k {
        heap_permutations(items, k - 1, out);
        if k.is_multiple_of(2) {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

pub(crate) fn permutation_sign(p: &[usize; 5]) -> i8 {
    let mut inv = 0;
    for i in 0..5 {
        for j in (i + 1)..5 {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn partition_normalization() {
        assert_eq!(part(&[3, 2, 0, 0]), part(&[3, 2]));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(part(&[5, 4, 3, 2, 1]).weight(), 15);
    }

    #[test]
    fn s5_permutations_complete() {
        let perms = permutations_s5();
        assert_eq!(perms.len(), 120);
        let evens = perms.iter().filter(|(_, s)| *s > 0).count();
        assert_eq!(evens, 60);
    }

    #[test]
    fn schur_of_single_box_is_e1() {
        let s = schur_poly(&part(&[1]), &unit_monomials()).unwrap();
        assert_eq!(s.num_terms(), 5);
        assert_eq!(s.value_at_ones(), BigInt::from(5));
        assert_eq!(s.coefficient(&[1, 0, 0, 0, 0]), BigInt::one());
    }

    #[test]
    fn schur_of_column_is_e2() {
        let s = schur_poly(&part(&[1, 1]), &unit_monomials()).unwrap();
        assert_eq!(s.num_terms(), 10);
        assert_eq!(s.coefficient(&[1, 1, 0, 0, 0]), BigInt::one());
        assert_eq!(s.coefficient(&[0, 1, 0, 1, 0]), BigInt::one());
        assert_eq!(s.coefficient(&[2, 0, 0, 0, 0]), BigInt::zero());
    }

    /// Brute-force semistandard tableau enumeration, used as the oracle for
    /// Jacobi–Trudi output on small shapes.
    fn ssyt_poly(shape: &[usize]) -> BTreeMap<[u8; 5], BigInt> {
        fn fill(rows: &mut Vec<Vec<u8>>, r: usize, c: usize, out: &mut BTreeMap<[u8; 5], BigInt>) {
            if r == rows.len() {
                let mut expo = [0u8; 5];
                for row in rows.iter() {
                    for &v in row {
                        expo[(v - 1) as usize] += 1;
                    }
                }
                *out.entry(expo).or_insert_with(BigInt::zero) += 1;
                return;
            }
            if c == rows[r].len() {
                fill(rows, r + 1, 0, out);
                return;
            }
            let lo = {
                let left = if c > 0 { rows[r][c - 1] } else { 1 };
                let above = if r > 0 && c < rows[r - 1].len() {
                    rows[r - 1][c] + 1
                } else {
                    1
                };
                left.max(above)
            };
            for v in lo..=5 {
                rows[r][c] = v;
                fill(rows, r, c + 1, out);
            }
            rows[r][c] = 0;
        }

        let mut rows: Vec<Vec<u8>> = shape.iter().map(|&l| vec![0; l]).collect();
        let mut out = BTreeMap::new();
        fill(&mut rows, 0, 0, &mut out);
        out
    }

    /// Every partition of weight at most 6 into at most 5 parts.
    fn all_small_shapes() -> Vec<Vec<usize>> {
        let mut shapes = Vec::new();
        for weight in 1..=6usize {
            for e in &PartitionTable::new(weight).parts {
                let shape: Vec<usize> = e
                    .iter()
                    .take_while(|&&x| x > 0)
                    .map(|&x| x as usize)
                    .collect();
                shapes.push(shape);
            }
        }
        shapes
    }

    #[test]
    fn jacobi_trudi_matches_tableaux_up_to_weight_6() {
        for shape in all_small_shapes() {
            let lam = Partition::new(shape.iter().map(|&x| x as u32).collect()).unwrap();
            let s = schur_poly(&lam, &unit_monomials()).unwrap();
            let oracle = ssyt_poly(&shape);
            assert_eq!(s.num_terms(), oracle.len(), "shape {shape:?}");
            for (e, c) in &oracle {
                assert_eq!(&s.coefficient(e), c, "shape {shape:?} at {e:?}");
            }
        }
    }

    #[test]
    fn plethysm_edge_cases() {
        // s_1[e2] = e2 itself.
        let p = plethysm_with_e2(&part(&[1])).unwrap();
        let e2 = schur_poly(&part(&[1, 1]), &unit_monomials()).unwrap();
        assert_eq!(p, e2);

        // s_2[e2] has dimension 55 = dim Sym²(∧²C⁵) = dim Sym²(C¹⁰).
        let p = plethysm_with_e2(&part(&[2])).unwrap();
        assert_eq!(p.value_at_ones(), BigInt::from(55));

        // Degree bound enforced.
        assert!(plethysm_with_e2(&part(&[16])).is_err());
    }

    #[test]
    fn sym2_wedge2_decomposition() {
        // Sym²(∧²V) = S^{(2,2)} ⊕ ∧⁴V, i.e. 55 = 50 + 5.
        let p = plethysm_with_e2(&part(&[2])).unwrap();
        assert_eq!(
            schur_multiplicity(&p, &part(&[2, 2])).unwrap(),
            BigInt::one()
        );
        assert_eq!(
            schur_multiplicity(&p, &part(&[1, 1, 1, 1])).unwrap(),
            BigInt::one()
        );
        let decomposition = schur_decomposition(&p).unwrap();
        assert_eq!(decomposition.len(), 2);
        let (weighted, ones) = dimension_consistency(&p).unwrap();
        assert_eq!(weighted, ones);
    }

    #[test]
    fn multiplicity_of_e2_in_itself() {
        let e2 = schur_poly(&part(&[1, 1]), &unit_monomials()).unwrap();
        assert_eq!(
            schur_multiplicity(&e2, &part(&[1, 1])).unwrap(),
            BigInt::one()
        );
        assert_eq!(
            schur_multiplicity(&e2, &part(&[2])).unwrap(),
            BigInt::zero()
        );
        assert!(schur_multiplicity(&e2, &part(&[1])).is_err());
    }

    #[test]
    fn wedge_square_of_wedge_square_is_a_single_schur_power() {
        // ∧²(∧²C⁵) is irreducible: S^{(2,1,1)} alone, of dimension 45.
        let f = plethysm_with_e2(&part(&[1, 1])).unwrap();
        assert_eq!(f.value_at_ones(), BigInt::from(45));
        let decomposition = schur_decomposition(&f).unwrap();
        assert_eq!(decomposition.len(), 1);
        assert_eq!(decomposition[0].0, part(&[2, 1, 1]));
        assert_eq!(decomposition[0].1, BigInt::one());
        assert_eq!(weyl_dim(&[2, 1, 1, 0, 0], 5).unwrap(), BigInt::from(45));
    }

    #[test]
    fn plethysm_multiplicities_are_nonnegative() {
        for shape in [vec![3u32], vec![2, 1], vec![3, 2, 1]] {
            let f = plethysm_with_e2(&Partition::new(shape.clone()).unwrap()).unwrap();
            for (mu, mult) in schur_decomposition(&f).unwrap() {
                assert!(mult > BigInt::zero(), "shape {shape:?}, mu {mu}");
            }
        }
    }

    #[test]
    fn weyl_dimensions() {
        assert_eq!(weyl_dim(&[0, 0, 0, 0, 0], 5).unwrap(), BigInt::one());
        assert_eq!(weyl_dim(&[1, 1, 0, 0, 0], 5).unwrap(), BigInt::from(10));
        assert_eq!(weyl_dim(&[2, 2, 0, 0, 0], 5).unwrap(), BigInt::from(50));
        assert_eq!(weyl_dim(&[1, 0, 0, 0, -1], 5).unwrap(), BigInt::from(24));
        assert!(weyl_dim(&[0, 1], 2).is_err());
        assert!(weyl_dim(&[1, 0], 3).is_err());
    }

    #[test]
    fn symmetry_spot_checks() {
        use rand::{Rng, SeedableRng};
        let p = plethysm_with_e2(&part(&[2, 1])).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        let perms = permutations_s5();
        for _ in 0..10 {
            let (perm, _) = perms[rng.random_range(0..120)];
            for (e, _) in p.terms().take(20) {
                assert!(p.is_symmetric_at(e, &perm));
            }
        }
    }
}
