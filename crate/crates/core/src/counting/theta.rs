//! Representation tables `F_A(N)` of positive diagonal forms by theta-series products.

use alloc::vec;
use alloc::vec::Vec;

use super::ntt::{moduli_needed, Crt, Modulus, MAX_LEN};
use crate::error::{Error, Result};
use crate::forms::{FieldSpec, OrderBasis};
use crate::number_theory::kronecker::kronecker;
use crate::number_theory::primes::isqrt;

/// Default cap on table entries.
pub const DEFAULT_BUDGET: u64 = 16_000_000;

/// Work bound below which the sparse direct product is used.
const DIRECT_WORK: u128 = 200_000_000;

/// `G(m) = #{z in O : N(z) = m}` for all `m <= m_max`, by enumerating the norm form.
pub fn norm_counts(order: &OrderBasis, m_max: u64) -> Vec<u64> {
    let f = order.norm_form;
    let mut counts = vec![0u64; m_max as usize + 1];
    let big = m_max as i128;
    // N(x + y omega) >= (|d|/4) y^2
    let y_max = isqrt((4 * big / order.disc.unsigned_abs() as i128) as u128) as i64;
    for y in -y_max..=y_max {
        let (b, c) = (f.b as i128, f.c as i128);
        let yy = y as i128;
        // x^2 + b y x + (c y^2 - M) <= 0
        let disc = b * b * yy * yy - 4 * (c * yy * yy - big);
        if disc < 0 {
            continue;
        }
        let root = isqrt(disc as u128) as i128;
        let lo = (-b * yy - root - 1).div_euclid(2) - 1;
        let hi = (-b * yy + root) / 2 + 1;
        for x in lo..=hi {
            let n = x * x + b * x * yy + c * yy * yy;
            if (0..=big).contains(&n) {
                counts[n as usize] += 1;
            }
        }
    }
    counts
}

/// `G(m)` for a single `m`: divisor-character sum for `d = -3, -4`, enumeration otherwise.
pub fn g_order(m: u64, order: &OrderBasis) -> u64 {
    if m == 0 {
        return 1;
    }
    match order.disc {
        -3 | -4 => {
            let w = order.units() as i64;
            let mut sum = 0i64;
            let mut e = 1u64;
            while e * e <= m {
                if m.is_multiple_of(e) {
                    sum += kronecker(order.disc, e as i64) as i64;
                    if e * e != m {
                        sum += kronecker(order.disc, (m / e) as i64) as i64;
                    }
                }
                e += 1;
            }
            (w * sum) as u64
        }
        _ => {
            let f = order.norm_form;
            let y_max = isqrt(4 * m as u128 / order.disc.unsigned_abs() as u128) as i64;
            let mut count = 0;
            for y in -y_max..=y_max {
                let rest = 4 * f.c as i128 * (y as i128) * (y as i128) - f.b as i128 * f.b as i128 * (y as i128) * (y as i128);
                // (2x + b y)^2 = 4m - (4c - b^2) y^2
                let target = 4 * m as i128 - rest;
                if target < 0 {
                    continue;
                }
                let r = isqrt(target as u128) as i128;
                if r * r != target {
                    continue;
                }
                for s in [r, -r] {
                    let twice_x = s - f.b as i128 * y as i128;
                    if twice_x % 2 == 0 {
                        count += 1;
                    }
                    if r == 0 {
                        break;
                    }
                }
            }
            count
        }
    }
}

/// Sparse theta series `sum_x q^{a N(x)}` of one coordinate, as `(exponent, count)`.
fn component_series(field: FieldSpec, a: u64, n_max: u64) -> Vec<(u64, u64)> {
    match field {
        FieldSpec::Real => {
            let mut out = vec![(0, 1)];
            let mut m = 1u64;
            while a * m * m <= n_max {
                out.push((a * m * m, 2));
                m += 1;
            }
            out
        }
        FieldSpec::Complex { disc } => {
            let order = OrderBasis::new(disc).expect("validated field");
            norm_counts(&order, n_max / a)
                .into_iter()
                .enumerate()
                .filter(|&(_, c)| c > 0)
                .map(|(m, c)| (a * m as u64, c))
                .collect()
        }
    }
}

/// `coeffs[N] = F_A(N)` for `0 <= N <= n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepresentationTable {
    pub coeffs: Vec<u128>,
}

impl RepresentationTable {
    pub fn get(&self, n: i128) -> Option<u128> {
        if n < 0 {
            Some(0)
        } else {
            self.coeffs.get(n as usize).copied()
        }
    }
}

fn check_budget(n_max: u64, budget: u64) -> Result<()> {
    if n_max + 1 > budget {
        return Err(Error::TableBudget { needed: n_max + 1, budget });
    }
    Ok(())
}

/// Table by sparse convolution with exact checked arithmetic.
pub fn theta_table_direct(field: FieldSpec, entries: &[u64], n_max: u64) -> Result<RepresentationTable> {
    let len = n_max as usize + 1;
    let mut acc = vec![0u128; len];
    acc[0] = 1;
    for &a in entries {
        let series = component_series(field, a, n_max);
        let mut next = vec![0u128; len];
        for (i, &v) in acc.iter().enumerate() {
            if v == 0 {
                continue;
            }
            for &(e, c) in &series {
                let j = i + e as usize;
                if j >= len {
                    break;
                }
                let add = v.checked_mul(c as u128).ok_or(Error::Overflow("theta table"))?;
                next[j] = next[j].checked_add(add).ok_or(Error::Overflow("theta table"))?;
            }
        }
        acc = next;
    }
    Ok(RepresentationTable { coeffs: acc })
}

/// Table by NTT products modulo several primes, reconstructed exactly.
pub fn theta_table_ntt(field: FieldSpec, entries: &[u64], n_max: u64) -> Result<RepresentationTable> {
    let len = n_max as usize + 1;
    if 2 * len > MAX_LEN {
        return Err(Error::TableBudget { needed: len as u64, budget: (MAX_LEN / 2) as u64 });
    }
    let series: Vec<Vec<(u64, u64)>> = entries.iter().map(|&a| component_series(field, a, n_max)).collect();
    // Every coefficient is at most the product of the per-coordinate point counts.
    let bits: f64 = series
        .iter()
        .map(|s| libm::log2(s.iter().map(|&(_, c)| c as f64).sum::<f64>()))
        .sum();
    let count = moduli_needed(bits)?;
    let mut residues: Vec<Vec<u32>> = Vec::with_capacity(count);
    for &p in &super::ntt::PRIMES[..count] {
        let modulus = Modulus::new(p);
        let dense = |s: &[(u64, u64)]| {
            let mut v = vec![0u32; len];
            for &(e, c) in s {
                v[e as usize] = (c % p) as u32;
            }
            v
        };
        let mut acc = dense(&series[0]);
        for s in &series[1..] {
            acc = modulus.multiply_truncated(&acc, &dense(s), len);
        }
        residues.push(acc);
    }
    let crt = Crt::new(count);
    let mut coeffs = Vec::with_capacity(len);
    let mut buf = vec![0u64; count];
    for n in 0..len {
        for (b, r) in buf.iter_mut().zip(&residues) {
            *b = r[n] as u64;
        }
        coeffs.push(crt.reconstruct(&buf)?);
    }
    Ok(RepresentationTable { coeffs })
}

/// `F_A` up to `n_max`, choosing the sparse or the NTT product by cost.
pub fn theta_table(field: FieldSpec, entries: &[u64], n_max: u64, budget: u64) -> Result<RepresentationTable> {
    check_budget(n_max, budget)?;
    if entries.is_empty() {
        return Err(Error::InvalidForm("empty positive part".into()));
    }
    let per_component: u128 = match field {
        FieldSpec::Real => isqrt(n_max as u128) + 1,
        FieldSpec::Complex { .. } => n_max as u128 + 1,
    };
    let work = (n_max as u128 + 1) * per_component * entries.len() as u128;
    if work <= DIRECT_WORK || entries.len() == 1 {
        theta_table_direct(field, entries, n_max)
    } else {
        theta_table_ntt(field, entries, n_max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_squares_small() {
        let t = theta_table(FieldSpec::Real, &[1, 1, 1, 1], 10, DEFAULT_BUDGET).unwrap();
        assert_eq!(t.coeffs[0], 1);
        assert_eq!(t.coeffs[3], 32);
        assert_eq!(t.coeffs[..6], [1, 8, 24, 32, 24, 48]);
    }

    #[test]
    fn eisenstein_units() {
        let t = theta_table(FieldSpec::Complex { disc: -3 }, &[1], 10, DEFAULT_BUDGET).unwrap();
        assert_eq!(t.coeffs[1], 6);
        let eis = OrderBasis::new(-3).unwrap();
        assert_eq!(g_order(1, &eis), 6);
        assert_eq!(g_order(0, &eis), 1);
        assert_eq!(g_order(2, &OrderBasis::new(-4).unwrap()), 4);
    }

    #[test]
    fn norm_counts_match_single_values() {
        for d in [-3i64, -4, -7, -8, -11, -15, -20, -23] {
            let order = OrderBasis::new(d).unwrap();
            let table = norm_counts(&order, 300);
            for m in 0..=300u64 {
                assert_eq!(table[m as usize], g_order(m, &order), "d={d} m={m}");
            }
        }
    }

    #[test]
    fn ntt_matches_direct() {
        let cases: [(FieldSpec, &[u64], u64); 4] = [
            (FieldSpec::Real, &[1, 1, 1, 1], 2000),
            (FieldSpec::Real, &[1, 2, 3, 5, 7, 1, 1, 1], 3000),
            (FieldSpec::Complex { disc: -3 }, &[1, 1, 1, 1, 1], 2000),
            (FieldSpec::Complex { disc: -7 }, &[1, 2, 3], 1500),
        ];
        for (field, entries, n) in cases {
            assert_eq!(theta_table_ntt(field, entries, n).unwrap(), theta_table_direct(field, entries, n).unwrap());
        }
    }

    #[test]
    fn budget_enforced() {
        assert!(matches!(
            theta_table(FieldSpec::Real, &[1, 1], 100, 50),
            Err(Error::TableBudget { needed: 101, budget: 50 })
        ));
    }
}
