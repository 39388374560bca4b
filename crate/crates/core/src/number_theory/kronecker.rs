use crate::error::{Error, Result};

/// Kronecker symbol `(a | n)` for arbitrary integers.
pub fn kronecker(a: i64, n: i64) -> i8 {
    let mut a = a as i128;
    let mut n = n as i128;
    if n == 0 {
        return if a == 1 || a == -1 { 1 } else { 0 };
    }
    if a % 2 == 0 && n % 2 == 0 {
        return 0;
    }
    let mut sign = 1i8;
    let v = n.trailing_zeros();
    n >>= v;
    if v % 2 == 1 && (a.rem_euclid(8) == 3 || a.rem_euclid(8) == 5) {
        sign = -sign;
    }
    if n < 0 {
        n = -n;
        if a < 0 {
            sign = -sign;
        }
    }
    // Jacobi symbol (a | n) for odd positive n.
    a = a.rem_euclid(n);
    while a != 0 {
        let t = a.trailing_zeros();
        a >>= t;
        if t % 2 == 1 && (n % 8 == 3 || n % 8 == 5) {
            sign = -sign;
        }
        if a % 4 == 3 && n % 4 == 3 {
            sign = -sign;
        }
        core::mem::swap(&mut a, &mut n);
        a %= n;
    }
    if n == 1 {
        sign
    } else {
        0
    }
}

/// Label of a real quadratic character `m -> (D | m)`.
///
/// Any nonzero `D ≡ 0, 1 (mod 4)` is accepted. Fundamental discriminants give primitive
/// characters; other labels (for instance `D = 4`, the principal character modulo 2) are
/// imprimitive and factor as `D = D0 * f^2` with `D0` fundamental or 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Discriminant(i64);

impl Discriminant {
    pub fn new(d: i64) -> Result<Self> {
        if d == 0 || !matches!(d.rem_euclid(4), 0 | 1) {
            return Err(Error::InvalidDiscriminant(d));
        }
        Ok(Discriminant(d))
    }

    pub const TRIVIAL: Discriminant = Discriminant(1);

    pub fn get(self) -> i64 {
        self.0
    }

    /// Modulus |D| of the (possibly imprimitive) character.
    pub fn modulus(self) -> u64 {
        self.0.unsigned_abs()
    }

    pub fn chi(self, m: i64) -> i8 {
        kronecker(self.0, m)
    }

    /// Value at -1; `1` for even characters, `-1` for odd ones.
    pub fn parity(self) -> i8 {
        if self.0 > 0 {
            1
        } else {
            -1
        }
    }

    /// Decompose `D = D0 * f^2` with `D0` fundamental (or 1); returns `(D0, f)`.
    pub fn fundamental(self) -> (Discriminant, u64) {
        let d = self.0;
        let sign = d.signum();
        let mut core = d.unsigned_abs();
        let mut f = 1u64;
        let mut p = 2u64;
        while p * p <= core {
            while core.is_multiple_of(p * p) {
                core /= p * p;
                f *= p;
            }
            p += 1;
        }
        let mut d0 = sign * core as i64;
        if d0.rem_euclid(4) != 1 {
            d0 *= 4;
            debug_assert!(f.is_multiple_of(2));
            f /= 2;
        }
        (Discriminant(d0), f)
    }

    pub fn is_fundamental(self) -> bool {
        self.fundamental().1 == 1
    }
}

/// Whether `d` is a fundamental discriminant (1 excluded).
pub fn is_fundamental_discriminant(d: i64) -> bool {
    d != 1 && Discriminant::new(d).map(|d| d.is_fundamental()).unwrap_or(false)
}
