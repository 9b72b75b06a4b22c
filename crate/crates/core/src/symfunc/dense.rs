//! Dense kernel for symmetric-polynomial arithmetic in 5 base variables.
//!
//! Every intermediate value in the Jacobi–Trudi determinant is a symmetric
//! polynomial (the entries are symmetric, being complete homogeneous
//! functions of a permutation-stable monomial list), so partial results are
//! stored on weakly decreasing exponent vectors only (the monomial-symmetric
//! basis). Multiplication by a fully expanded factor runs from the result
//! side: coeff(γ) = Σ_β b_β · a[sort(γ - β)], which is exact because a is
//! symmetric.

use std::collections::HashMap;

use crate::par;
use crate::{Error, Result};

pub(crate) type Expo = [u8; 5];

pub(crate) fn total_degree(e: &Expo) -> usize {
    e.iter().map(|&x| x as usize).sum()
}

#[inline]
fn pack(e: Expo) -> u64 {
    u64::from_le_bytes([e[0], e[1], e[2], e[3], e[4], 0, 0, 0])
}

#[inline]
pub(crate) fn sort_desc(mut e: Expo) -> Expo {
    // Five-element sorting network.
    macro_rules! cswap {
        ($i:expr, $j:expr) => {
            if e[$i] < e[$j] {
                e.swap($i, $j);
            }
        };
    }
    cswap!(0, 1);
    cswap!(3, 4);
    cswap!(2, 4);
    cswap!(2, 3);
    cswap!(0, 3);
    cswap!(0, 2);
    cswap!(1, 4);
    cswap!(1, 3);
    cswap!(1, 2);
    e
}

/// All weakly decreasing exponent vectors of a fixed total degree, with a
/// rank lookup.
pub(crate) struct PartitionTable {
    pub degree: usize,
    pub parts: Vec<Expo>,
    index: HashMap<u64, u32>,
}

impl PartitionTable {
    pub fn new(degree: usize) -> Self {
        let mut parts = Vec::new();
        let mut current = [0u8; 5];
        gen_partitions(degree, 0, degree.min(255), &mut current, &mut parts);
        let index = parts
            .iter()
            .enumerate()
            .map(|(i, &e)| (pack(e), i as u32))
            .collect();
        PartitionTable {
            degree,
            parts,
            index,
        }
    }

    #[inline]
    pub fn rank(&self, sorted: Expo) -> Option<u32> {
        self.index.get(&pack(sorted)).copied()
    }

    /// Number of distinct permutations of the exponent vector.
    pub fn orbit_size(e: &Expo) -> u64 {
        let mut counts: HashMap<u8, u64> = HashMap::new();
        for &x in e {
            *counts.entry(x).or_insert(0) += 1;
        }
        let mut denom = 1u64;
        for (_, c) in counts {
            denom *= (1..=c).product::<u64>();
        }
        120 / denom
    }
}

fn gen_partitions(
    remaining: usize,
    pos: usize,
    max: usize,
    current: &mut Expo,
    out: &mut Vec<Expo>,
) {
    if pos == 5 {
        if remaining == 0 {
            out.push(*current);
        }
        return;
    }
    let hi = remaining.min(max);
    // Largest first: lexicographically descending enumeration.
    for v in (0..=hi).rev() {
        if remaining - v > (4 - pos) * v {
            break; // later parts are bounded by v, cannot absorb the rest
        }
        current[pos] = v as u8;
        gen_partitions(remaining - v, pos + 1, v, current, out);
    }
    current[pos] = 0;
}

/// Homogeneous symmetric polynomial stored on the partition table of its
/// degree.
#[derive(Clone)]
pub(crate) struct MPoly {
    pub degree: usize,
    pub coeffs: Vec<i128>,
}

impl MPoly {
    pub fn zero(table: &PartitionTable) -> Self {
        MPoly {
            degree: table.degree,
            coeffs: vec![0; table.parts.len()],
        }
    }

    pub fn one() -> Self {
        MPoly {
            degree: 0,
            coeffs: vec![1],
        }
    }

    pub fn add_assign(&mut self, other: &MPoly, sign: i128) {
        assert_eq!(self.degree, other.degree, "degree mismatch in MPoly add");
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += sign * b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

/// Fully expanded homogeneous polynomial (all exponent vectors present).
#[derive(Clone)]
pub(crate) struct FullPoly {
    pub degree: usize,
    pub terms: Vec<(Expo, i128)>,
}

/// Complete homogeneous functions h_0..h_kmax of the given monomial list,
/// expanded in the base variables by the one-variable-at-a-time recursion
/// h_k(y_1..y_i) = h_k(y_1..y_{i-1}) + y_i h_{k-1}(y_1..y_i).
pub(crate) fn complete_homogeneous(vars: &[Expo], kmax: usize) -> Vec<FullPoly> {
    let var_degree = total_degree(&vars[0]);
    let mut tables: Vec<HashMap<Expo, i128>> = vec![HashMap::new(); kmax + 1];
    tables[0].insert([0; 5], 1);
    for v in vars {
        for k in 1..=kmax {
            let (lower, upper) = tables.split_at_mut(k);
            let prev = &lower[k - 1];
            let cur = &mut upper[0];
            let mut updates = Vec::with_capacity(prev.len());
            for (e, &c) in prev.iter() {
                let mut shifted = *e;
                for (s, d) in shifted.iter_mut().zip(v) {
                    *s += d;
                }
                updates.push((shifted, c));
            }
            for (e, c) in updates {
                *cur.entry(e).or_insert(0) += c;
            }
        }
    }
    tables
        .into_iter()
        .enumerate()
        .map(|(k, t)| {
            let mut terms: Vec<(Expo, i128)> = t.into_iter().filter(|&(_, c)| c != 0).collect();
            terms.sort_unstable();
            FullPoly {
                degree: k * var_degree,
                terms,
            }
        })
        .collect()
}

/// acc += sign * a * b, convolving from the result side. `a` lives on
/// `a_table`, `acc` on `acc_table`; degrees must line up.
pub(crate) fn mul_accumulate(
    acc: &mut MPoly,
    acc_table: &PartitionTable,
    a: &MPoly,
    a_table: &PartitionTable,
    b: &FullPoly,
    sign: i128,
) {
    assert_eq!(
        acc.degree,
        a.degree + b.degree,
        "degree mismatch in multiply"
    );
    let gammas = &acc_table.parts;
    let chunk = (gammas.len() / 64).max(256);
    let coeffs = &mut acc.coeffs;
    par_chunks(coeffs, chunk, |start, slice| {
        for (off, out) in slice.iter_mut().enumerate() {
            let gamma = &gammas[start + off];
            let mut sum = 0i128;
            'terms: for (beta, bc) in &b.terms {
                let mut delta = [0u8; 5];
                for i in 0..5 {
                    let Some(d) = gamma[i].checked_sub(beta[i]) else {
                        continue 'terms;
                    };
                    delta[i] = d;
                }
                if let Some(r) = a_table.rank(sort_desc(delta)) {
                    let ac = a.coeffs[r as usize];
                    if ac != 0 {
                        sum += bc * ac;
                    }
                }
            }
            *out += sign * sum;
        }
    });
}

#[cfg(feature = "parallel")]
fn par_chunks(v: &mut [i128], chunk: usize, f: impl Fn(usize, &mut [i128]) + Sync) {
    use rayon::prelude::*;
    v.par_chunks_mut(chunk)
        .enumerate()
        .for_each(|(i, slice)| f(i * chunk, slice));
}

#[cfg(not(feature = "parallel"))]
fn par_chunks(v: &mut [i128], chunk: usize, f: impl Fn(usize, &mut [i128]) + Sync) {
    let mut start = 0;
    for slice in v.chunks_mut(chunk) {
        f(start, slice);
        start += slice.len();
    }
}

/// Schur polynomial of `lam` in the given equal-degree monomials, by the
/// Jacobi–Trudi determinant det(h_{λ_i - i + j}) over column subsets.
/// Returns the m-basis form and its partition table.
pub(crate) fn jacobi_trudi(lam: &[usize], vars: &[Expo]) -> Result<(MPoly, PartitionTable)> {
    let l = lam.len();
    assert!((1..=16).contains(&l));
    let var_degree = total_degree(&vars[0]);
    if vars.iter().any(|v| total_degree(v) != var_degree) {
        return Err(Error::MixedMonomialDegrees);
    }
    let weight: usize = lam.iter().sum();
    let final_degree = weight * var_degree;
    let kmax = lam[0] + l - 1;
    let h = complete_homogeneous(vars, kmax);

    // Process rows bottom-up (smallest h-degrees first) to keep partial
    // determinants small; compensate with the sign of the row reversal.
    let order: Vec<usize> = (0..l).rev().collect();
    let row_sign: i128 = if (l / 2).is_multiple_of(2) { 1 } else { -1 };

    // Partition tables for every intermediate degree that can occur.
    let mut tables: Vec<Option<PartitionTable>> = (0..=final_degree).map(|_| None).collect();
    let table = |tables: &mut Vec<Option<PartitionTable>>, d: usize| {
        if tables[d].is_none() {
            tables[d] = Some(PartitionTable::new(d));
        }
    };
    table(&mut tables, 0);

    let mut dp: Vec<Option<MPoly>> = vec![None; 1 << l];
    dp[0] = Some(MPoly::one());

    for mask in 1usize..(1 << l) {
        let k = mask.count_ones() as usize; // rows order[0..k] are in play
        let row = order[k - 1];
        let mut acc: Option<MPoly> = None;
        let cols: Vec<usize> = (0..l).filter(|j| mask & (1 << j) != 0).collect();
        for (t, &j) in cols.iter().enumerate() {
            let sub = mask & !(1 << j);
            let Some(prev) = dp[sub].as_ref() else {
                continue;
            };
            let entry = lam[row] as isize - row as isize + j as isize;
            if entry < 0 {
                continue;
            }
            let laplace_sign: i128 = if (k - 1 + t).is_multiple_of(2) { 1 } else { -1 };
            let degree = prev.degree + entry as usize * var_degree;
            if acc.is_none() {
                table(&mut tables, degree);
                acc = Some(MPoly::zero(tables[degree].as_ref().unwrap()));
            }
            let acc_ref = acc.as_mut().unwrap();
            assert_eq!(acc_ref.degree, degree, "inconsistent minor degree");
            if entry == 0 {
                acc_ref.add_assign(prev, laplace_sign);
            } else {
                let (acc_t, prev_t) = (
                    tables[degree].as_ref().unwrap(),
                    tables[prev.degree].as_ref().unwrap(),
                );
                mul_accumulate(
                    acc_ref,
                    acc_t,
                    prev,
                    prev_t,
                    &h[entry as usize],
                    laplace_sign,
                );
            }
        }
        // Prune zero minors early (entries h_{<0} wipe whole subsets).
        dp[mask] = acc.filter(|m| !m.is_zero());
    }

    let full = (1usize << l) - 1;
    let result = match dp[full].take() {
        Some(mut m) => {
            if row_sign < 0 {
                for c in &mut m.coeffs {
                    *c = -*c;
                }
            }
            m
        }
        None => {
            table(&mut tables, final_degree);
            MPoly::zero(tables[final_degree].as_ref().unwrap())
        }
    };
    assert_eq!(result.degree, final_degree);
    let table = match tables[final_degree].take() {
        Some(t) => t,
        None => PartitionTable::new(final_degree),
    };
    Ok((result, table))
}

/// Expand an m-basis polynomial into its full list of exponent vectors.
pub(crate) fn expand_orbits(m: &MPoly, table: &PartitionTable) -> Vec<(Expo, i128)> {
    let items: Vec<(Expo, i128)> = table
        .parts
        .iter()
        .zip(&m.coeffs)
        .filter(|&(_, &c)| c != 0)
        .map(|(&e, &c)| (e, c))
        .collect();
    par::flat_map_collect(items, |(e, c)| {
        distinct_permutations(e)
            .into_iter()
            .map(|p| (p, c))
            .collect()
    })
}

fn distinct_permutations(e: Expo) -> Vec<Expo> {
    let mut v = e;
    v.sort_unstable(); // ascending = first permutation
    let mut out = Vec::with_capacity(PartitionTable::orbit_size(&e) as usize);
    loop {
        out.push(v);
        // next_permutation in ascending lex order
        let Some(i) = (0..4).rev().find(|&i| v[i] < v[i + 1]) else {
            break;
        };
        let j = (i + 1..5).rev().find(|&j| v[j] > v[i]).unwrap();
        v.swap(i, j);
        v[i + 1..].reverse();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        assert_eq!(PartitionTable::new(0).parts.len(), 1);
        assert_eq!(PartitionTable::new(4).parts.len(), 5);
        // Partitions of 6 into at most 5 parts: 10 (of 11 total, excluding 1^6).
        assert_eq!(PartitionTable::new(6).parts.len(), 10);
    }

    #[test]
    fn orbit_sizes() {
        assert_eq!(PartitionTable::orbit_size(&[2, 1, 1, 0, 0]), 30);
        assert_eq!(PartitionTable::orbit_size(&[1, 1, 1, 1, 1]), 1);
        assert_eq!(PartitionTable::orbit_size(&[5, 0, 0, 0, 0]), 5);
    }

    #[test]
    fn sort_desc_network() {
        assert_eq!(sort_desc([1, 5, 3, 2, 4]), [5, 4, 3, 2, 1]);
        assert_eq!(sort_desc([0, 0, 7, 0, 0]), [7, 0, 0, 0, 0]);
        assert_eq!(sort_desc([2, 2, 2, 2, 2]), [2, 2, 2, 2, 2]);
    }

    #[test]
    fn distinct_permutation_counts_match_orbit_size() {
        for e in [[3, 1, 0, 0, 0], [2, 2, 1, 1, 0], [4, 4, 4, 4, 4]] {
            assert_eq!(
                distinct_permutations(e).len() as u64,
                PartitionTable::orbit_size(&e)
            );
        }
    }

    #[test]
    fn h_functions_of_unit_variables() {
        let units: Vec<Expo> = (0..5)
            .map(|i| {
                let mut e = [0u8; 5];
                e[i] = 1;
                e
            })
            .collect();
        let h = complete_homogeneous(&units, 3);
        // h_k(1,1,1,1,1) = C(k+4, 4)
        let ones = |f: &FullPoly| -> i128 { f.terms.iter().map(|&(_, c)| c).sum() };
        assert_eq!(ones(&h[0]), 1);
        assert_eq!(ones(&h[1]), 5);
        assert_eq!(ones(&h[2]), 15);
        assert_eq!(ones(&h[3]), 35);
        // h_2 contains x1^2 and x1 x2 with coefficient 1.
        assert!(h[2].terms.contains(&([2, 0, 0, 0, 0], 1)));
        assert!(h[2].terms.contains(&([1, 1, 0, 0, 0], 1)));
    }
}
