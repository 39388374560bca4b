//! Divisor-sum formulas for `F_A` and a sieve that factors the values `a g(m) - k`
//! of a polynomial sequence.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::forms::{FieldSpec, FormSpec};
use crate::number_theory::kronecker::kronecker;
use crate::number_theory::primes::{inv_mod, isqrt, primes_up_to, sqrt_mod};

/// Positive parts with a multiplicative representation formula.
///
/// Each rule is `c1 * prod_p f1(p, e) + c2 * prod_p f2(p, e)` over the factorization of `N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DivisorRule {
    /// Sums of two squares: `4 sum_{d | N} chi_{-4}(d)`.
    TwoSquares,
    /// Sums of four squares: `8 sum_{d | N, 4 ∤ d} d`.
    FourSquares,
    /// Sums of six squares: `16 sum chi_{-4}(N/d) d^2 - 4 sum chi_{-4}(d) d^2`.
    SixSquares,
    /// Sums of eight squares: `16 sum_{d | N} (-1)^{N + d} d^3`.
    EightSquares,
    /// Two Eisenstein norms: `12 (sigma(N) - 3 sigma(N/3))`.
    EisensteinPair,
    /// One Eisenstein norm: `6 sum_{d | N} chi_{-3}(d)`.
    EisensteinNorm,
}

impl DivisorRule {
    /// Rule for the norm counts `G(m)` of an order, if one is known.
    pub fn for_order(disc: i64) -> Option<Self> {
        match disc {
            -4 => Some(DivisorRule::TwoSquares),
            -3 => Some(DivisorRule::EisensteinNorm),
            _ => None,
        }
    }

    /// Rule for the positive part of `spec`, if one is known.
    pub fn for_form(spec: &FormSpec) -> Option<Self> {
        if spec.positive.iter().any(|&x| x != 1) {
            return None;
        }
        match (spec.field, spec.positive.len()) {
            (FieldSpec::Real, 2) => Some(DivisorRule::TwoSquares),
            (FieldSpec::Real, 4) => Some(DivisorRule::FourSquares),
            (FieldSpec::Real, 6) => Some(DivisorRule::SixSquares),
            (FieldSpec::Real, 8) => Some(DivisorRule::EightSquares),
            (FieldSpec::Complex { disc: -4 }, 2) => Some(DivisorRule::FourSquares),
            (FieldSpec::Complex { disc: -3 }, 2) => Some(DivisorRule::EisensteinPair),
            _ => None,
        }
    }

    fn coefficients(self) -> (i128, i128) {
        match self {
            DivisorRule::TwoSquares => (4, 0),
            DivisorRule::FourSquares => (8, 0),
            DivisorRule::SixSquares => (16, -4),
            DivisorRule::EightSquares => (16, 0),
            DivisorRule::EisensteinPair => (12, 0),
            DivisorRule::EisensteinNorm => (6, 0),
        }
    }

    /// Local factors `(f1(p, e), f2(p, e))` for `e >= 1`.
    fn local(self, p: u64, e: u32) -> Result<(u128, u128)> {
        let overflow = || Error::Overflow("divisor formula");
        let pw = |base: u128, k: u32| base.checked_pow(k).ok_or_else(overflow);
        // sum_{i=0}^{e} x^i
        let geo = |x: u128| -> Result<u128> {
            let mut acc = 0u128;
            let mut t = 1u128;
            for _ in 0..=e {
                acc = acc.checked_add(t).ok_or_else(overflow)?;
                t = t.saturating_mul(x);
            }
            Ok(acc)
        };
        let p128 = p as u128;
        Ok(match self {
            DivisorRule::TwoSquares => {
                let v = match p % 4 {
                    2 => 1,
                    1 => e as u128 + 1,
                    _ => u128::from(e.is_multiple_of(2)),
                };
                (v, 0)
            }
            DivisorRule::FourSquares => (if p == 2 { 3 } else { geo(p128)? }, 0),
            DivisorRule::EightSquares => {
                if p == 2 {
                    // sum_{i=1}^{e} 8^i - 1
                    (geo(8)? - 2, 0)
                } else {
                    (geo(pw(p128, 3)?)?, 0)
                }
            }
            DivisorRule::EisensteinPair => (if p == 3 { 1 } else { geo(p128)? }, 0),
            DivisorRule::EisensteinNorm => {
                let v = match p % 3 {
                    0 => 1,
                    1 => e as u128 + 1,
                    _ => u128::from(e.is_multiple_of(2)),
                };
                (v, 0)
            }
            DivisorRule::SixSquares => {
                let chi = kronecker(-4, p as i64);
                let sq = pw(p128, 2)?;
                match chi {
                    0 => (pw(sq, e)?, 1),
                    1 => (geo(sq)?, geo(sq)?),
                    _ => {
                        // f1 = sum_i (-1)^{e-i} p^{2i}, f2 = sum_i (-1)^i p^{2i}
                        let mut f1: i128 = 0;
                        let mut f2: i128 = 0;
                        let mut t: i128 = 1;
                        for i in 0..=e {
                            let s1 = if (e - i).is_multiple_of(2) { 1 } else { -1 };
                            let s2 = if i % 2 == 0 { 1 } else { -1 };
                            f1 = f1.checked_add(s1 * t).ok_or_else(overflow)?;
                            f2 = f2.checked_add(s2 * t).ok_or_else(overflow)?;
                            if i < e {
                                t = t.checked_mul(sq as i128).ok_or_else(overflow)?;
                            }
                        }
                        (f1 as u128, f2.unsigned_abs())
                    }
                }
            }
        })
    }

    /// Sign of `f2(p, e)`; negative only for six squares, `p ≡ 3 (mod 4)` and odd `e`.
    fn local_sign(self, p: u64, e: u32) -> i128 {
        match self {
            DivisorRule::SixSquares if kronecker(-4, p as i64) == -1 && e % 2 == 1 => -1,
            _ => 1,
        }
    }

    /// `F_A(n)` from a factorization given as `(p, e)` pairs.
    pub fn evaluate(self, factors: &[(u64, u32)]) -> Result<u128> {
        let mut acc = Accumulator::new();
        for &(p, e) in factors {
            acc.push(self, p, e)?;
        }
        acc.finish(self)
    }

    /// `F_A(n)`, factoring `n` directly.
    pub fn value(self, n: i128) -> Result<u128> {
        match n {
            n if n < 0 => Ok(0),
            0 => Ok(1),
            n => self.evaluate(&crate::number_theory::primes::factorize(n)?.factors),
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Accumulator {
    f1: u128,
    f2: u128,
    sign2: i128,
}

impl Accumulator {
    fn new() -> Self {
        Accumulator { f1: 1, f2: 1, sign2: 1 }
    }

    fn push(&mut self, rule: DivisorRule, p: u64, e: u32) -> Result<()> {
        let (a, b) = rule.local(p, e)?;
        self.f1 = self.f1.checked_mul(a).ok_or(Error::Overflow("divisor formula"))?;
        self.f2 = self.f2.checked_mul(b).ok_or(Error::Overflow("divisor formula"))?;
        self.sign2 *= rule.local_sign(p, e);
        Ok(())
    }

    fn finish(self, rule: DivisorRule) -> Result<u128> {
        let (c1, c2) = rule.coefficients();
        let overflow = || Error::Overflow("divisor formula");
        let first = i128::try_from(self.f1).map_err(|_| overflow())?.checked_mul(c1).ok_or_else(overflow)?;
        let second = if c2 == 0 {
            0
        } else {
            i128::try_from(self.f2).map_err(|_| overflow())?.checked_mul(c2 * self.sign2).ok_or_else(overflow)?
        };
        let total = first.checked_add(second).ok_or_else(overflow)?;
        u128::try_from(total).map_err(|_| Error::Overflow("negative representation count"))
    }
}

/// The sequence `v(m) = a g(m) - k` with `g(m) = m^2` or `g(m) = m`.
#[derive(Debug, Clone)]
pub struct PolySieve {
    a: u64,
    k: i64,
    quadratic: bool,
    /// Sieving primes with the roots of `a g(m) ≡ k (mod p)`; `None` means every `m`.
    roots: Vec<(u64, Option<Vec<u64>>)>,
}

impl PolySieve {
    /// Sieve valid for `m <= m_max`.
    pub fn new(a: u64, k: i64, quadratic: bool, m_max: u64) -> Result<Self> {
        let m = m_max as u128;
        let top = a as u128 * if quadratic { m * m } else { m } + k.unsigned_abs() as u128;
        let bound = isqrt(top) as u64 + 1;
        if bound > 4_000_000_000 {
            return Err(Error::Overflow("sieve bound"));
        }
        let mut roots = Vec::new();
        for p in primes_up_to(bound) {
            let a_p = a % p;
            let k_p = k.rem_euclid(p as i64) as u64;
            if a_p == 0 {
                if k_p == 0 {
                    roots.push((p, None));
                }
                continue;
            }
            let rhs = k_p * inv_mod(a_p, p).expect("p prime, p ∤ a") % p;
            let rs = if quadratic {
                match sqrt_mod(rhs, p) {
                    None => continue,
                    Some(r) if r == 0 || r == p - r => vec![r],
                    Some(r) => vec![r, p - r],
                }
            } else {
                vec![rhs]
            };
            roots.push((p, Some(rs)));
        }
        Ok(PolySieve { a, k, quadratic, roots })
    }

    pub fn value(&self, m: u64) -> i128 {
        let g = if self.quadratic { m as i128 * m as i128 } else { m as i128 };
        self.a as i128 * g - self.k as i128
    }

    /// `F_A(v(m))` for `m` in `lo..hi`.
    pub fn evaluate_range(&self, rule: DivisorRule, lo: u64, hi: u64) -> Result<Vec<u128>> {
        let len = (hi - lo) as usize;
        let mut rest: Vec<u128> = Vec::with_capacity(len);
        let mut out = vec![0u128; len];
        let mut live = vec![false; len];
        for (i, m) in (lo..hi).enumerate() {
            let v = self.value(m);
            match v {
                v if v < 0 => rest.push(1),
                0 => {
                    out[i] = 1;
                    rest.push(1);
                }
                v => {
                    rest.push(v as u128);
                    live[i] = true;
                }
            }
        }
        let mut acc = vec![Accumulator::new(); len];
        for (p, roots) in &self.roots {
            let p = *p;
            let mut visit = |i: usize| -> Result<()> {
                if !live[i] {
                    return Ok(());
                }
                let mut e = 0;
                let p128 = p as u128;
                while rest[i].is_multiple_of(p128) {
                    rest[i] /= p128;
                    e += 1;
                }
                if e > 0 {
                    acc[i].push(rule, p, e)?;
                }
                Ok(())
            };
            match roots {
                None => {
                    for i in 0..len {
                        visit(i)?;
                    }
                }
                Some(rs) => {
                    for &r in rs {
                        let start = lo + (r + p - lo % p) % p;
                        let mut m = start;
                        while m < hi {
                            visit((m - lo) as usize)?;
                            m += p;
                        }
                    }
                }
            }
        }
        for i in 0..len {
            if live[i] {
                if rest[i] > 1 {
                    let q = u64::try_from(rest[i]).map_err(|_| Error::Overflow("sieve cofactor"))?;
                    acc[i].push(rule, q, 1)?;
                }
                out[i] = acc[i].finish(rule)?;
            }
        }
        Ok(out)
    }
}
