//! Independent reference computations by direct enumeration.

use num_bigint::BigInt;
use num_rational::BigRational;

/// `#{(x_1..x_4, y) : x_1^2 + .. + x_4^2 - y^2 = -1, |y| <= t}`.
pub fn four_squares_count(t: i64) -> u64 {
    let bound = ((t * t - 1) as f64).sqrt() as i64 + 1;
    let mut count = 0u64;
    for y in -t..=t {
        let target = y * y - 1;
        if target < 0 {
            continue;
        }
        for a in -bound..=bound {
            for b in -bound..=bound {
                for c in -bound..=bound {
                    let rest = target - a * a - b * b - c * c;
                    if rest < 0 {
                        continue;
                    }
                    let d = (rest as f64).sqrt() as i64;
                    for e in [d - 1, d, d + 1] {
                        if e >= 0 && e * e == rest {
                            count += if e == 0 { 1 } else { 2 };
                        }
                    }
                }
            }
        }
    }
    count
}

fn cyclic_convolve(f: &[u64], g: &[u64]) -> Vec<u64> {
    let q = f.len();
    let mut out = vec![0u64; q];
    for (i, &x) in f.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in g.iter().enumerate() {
            out[(i + j) % q] += x * y;
        }
    }
    out
}

fn histogram_of(q: u64, arity: u32, value: impl Fn(u64, u64) -> i128) -> Vec<u64> {
    let mut h = vec![0u64; q as usize];
    if arity == 1 {
        for x in 0..q {
            h[value(x, 0).rem_euclid(q as i128) as usize] += 1;
        }
    } else {
        for x in 0..q {
            for y in 0..q {
                h[value(x, y).rem_euclid(q as i128) as usize] += 1;
            }
        }
    }
    h
}

/// `#{x mod p^j : sum_i Q_i(x_i) ≡ t} / p^{j(rank-1)}` for a sum of unary or binary pieces.
pub fn density_by_histograms(pieces: &[(u32, Box<dyn Fn(i128, i128) -> i128>)], target: i64, p: u64, j: u32) -> BigRational {
    let q = p.pow(j);
    let mut acc: Option<Vec<u64>> = None;
    let mut rank = 0u32;
    for (arity, f) in pieces {
        rank += arity;
        let h = histogram_of(q, *arity, |x, y| f(x as i128, y as i128));
        acc = Some(match acc {
            None => h,
            Some(a) => cyclic_convolve(&a, &h),
        });
    }
    let count = acc.unwrap()[(target as i128).rem_euclid(q as i128) as usize];
    BigRational::new(BigInt::from(count), num_traits::pow(BigInt::from(p), (j * (rank - 1)) as usize))
}

/// Pieces of the hermitian form `diag` over the maximal order of discriminant `disc`,
/// written as binary integral forms in the basis `{1, omega}`.
pub fn hermitian_pieces(diag: &[i64], disc: i64) -> Vec<(u32, Box<dyn Fn(i128, i128) -> i128>)> {
    diag.iter()
        .map(|&a| {
            let (a, d) = (a as i128, disc as i128);
            let f: Box<dyn Fn(i128, i128) -> i128> = if d.rem_euclid(4) == 1 {
                Box::new(move |x, y| a * ((2 * x + y) * (2 * x + y) - d * y * y) / 4)
            } else {
                Box::new(move |x, y| a * (x * x - (d / 4) * y * y))
            };
            (2u32, f)
        })
        .collect()
}

pub fn diagonal_pieces(diag: &[i64]) -> Vec<(u32, Box<dyn Fn(i128, i128) -> i128>)> {
    diag.iter()
        .map(|&a| {
            let a = a as i128;
            let f: Box<dyn Fn(i128, i128) -> i128> = Box::new(move |x, _| a * x * x);
            (1u32, f)
        })
        .collect()
}
