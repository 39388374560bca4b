//! Fields, maximal orders and diagonal forms `diag(a_1, ..., a_n, -a)` of signature (n, 1).

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::number_theory::kronecker::is_fundamental_discriminant;

/// Ground field: the reals (`O = Z`) or an imaginary quadratic field given by its
/// fundamental discriminant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Real,
    Complex { disc: i64 },
}

impl FieldSpec {
    pub fn complex(disc: i64) -> Result<Self> {
        if disc >= 0 || !is_fundamental_discriminant(disc) {
            return Err(Error::InvalidDiscriminant(disc));
        }
        Ok(FieldSpec::Complex { disc })
    }

    /// Real dimension `r` of the field.
    pub fn r(self) -> u32 {
        match self {
            FieldSpec::Real => 1,
            FieldSpec::Complex { .. } => 2,
        }
    }

    pub fn disc(self) -> Option<i64> {
        match self {
            FieldSpec::Real => None,
            FieldSpec::Complex { disc } => Some(disc),
        }
    }

    pub fn is_real(self) -> bool {
        matches!(self, FieldSpec::Real)
    }

    /// `rho = (n+1) r / 2 - 1`.
    pub fn rho(self, n: u32) -> Ratio<i64> {
        Ratio::new((n as i64 + 1) * self.r() as i64, 2) - 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OmegaKind {
    /// `omega = sqrt(d)/2`, for `d ≡ 0 (mod 4)`.
    SqrtHalfDisc,
    /// `omega = (1 + sqrt(d))/2`, for `d ≡ 1 (mod 4)`.
    OnePlusSqrtOverTwo,
}

/// Binary quadratic form `a x^2 + b x y + c y^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BinaryForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl BinaryForm {
    pub fn eval(&self, x: i64, y: i64) -> i64 {
        self.a * x * x + self.b * x * y + self.c * y * y
    }

    pub fn discriminant(&self) -> i64 {
        self.b * self.b - 4 * self.a * self.c
    }
}

/// `Z[omega]`, the maximal order of discriminant `disc`, with the norm form
/// `N(x + y omega)` in that basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OrderBasis {
    pub disc: i64,
    pub omega_kind: OmegaKind,
    pub norm_form: BinaryForm,
}

impl OrderBasis {
    pub fn new(disc: i64) -> Result<Self> {
        FieldSpec::complex(disc)?;
        Ok(if disc.rem_euclid(4) == 0 {
            OrderBasis {
                disc,
                omega_kind: OmegaKind::SqrtHalfDisc,
                norm_form: BinaryForm { a: 1, b: 0, c: -disc / 4 },
            }
        } else {
            OrderBasis {
                disc,
                omega_kind: OmegaKind::OnePlusSqrtOverTwo,
                norm_form: BinaryForm { a: 1, b: 1, c: (1 - disc) / 4 },
            }
        })
    }

    /// Number of units of the order.
    pub fn units(&self) -> u32 {
        match self.disc {
            -3 => 6,
            -4 => 4,
            _ => 2,
        }
    }
}

/// `Q = diag(a_1, ..., a_n, -a)` over `Z` or over the maximal order of an imaginary
/// quadratic field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FormSpec {
    pub field: FieldSpec,
    pub positive: Vec<u64>,
    pub a: u64,
}

impl FormSpec {
    pub fn new(field: FieldSpec, positive: Vec<u64>, a: u64) -> Result<Self> {
        if positive.len() < 2 {
            return Err(Error::InvalidForm(format!("need n >= 2 positive entries, got {}", positive.len())));
        }
        if positive.contains(&0) {
            return Err(Error::InvalidForm("positive entries must be > 0".into()));
        }
        if a == 0 {
            return Err(Error::InvalidForm("a must be positive".into()));
        }
        if let FieldSpec::Complex { disc } = field {
            FieldSpec::complex(disc)?;
        }
        Ok(FormSpec { field, positive, a })
    }

    /// `diag(I_n, -a)`.
    pub fn identity(field: FieldSpec, n: usize, a: u64) -> Result<Self> {
        Self::new(field, alloc::vec![1; n], a)
    }

    pub fn n(&self) -> u32 {
        self.positive.len() as u32
    }

    /// Total rank `m = n + 1`.
    pub fn m(&self) -> u32 {
        self.n() + 1
    }

    pub fn positive_product(&self) -> u128 {
        self.positive.iter().map(|&x| x as u128).product()
    }

    /// `det Q = -a * prod a_i`.
    pub fn det(&self) -> i128 {
        -(self.a as i128) * self.positive_product() as i128
    }

    /// All diagonal entries, the negative one last.
    pub fn diagonal(&self) -> Vec<i64> {
        let mut d: Vec<i64> = self.positive.iter().map(|&x| x as i64).collect();
        d.push(-(self.a as i64));
        d
    }

    pub fn order(&self) -> Option<OrderBasis> {
        self.field.disc().map(|d| OrderBasis::new(d).expect("validated"))
    }

    pub fn rho(&self) -> Ratio<i64> {
        self.field.rho(self.n())
    }

    /// Exponent `2 rho` of the main term (always an integer).
    pub fn two_rho(&self) -> u32 {
        (self.rho() * 2).to_integer() as u32
    }

    pub fn with_a(&self, a: u64) -> Result<Self> {
        Self::new(self.field, self.positive.clone(), a)
    }
}

impl fmt::Display for FormSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries: Vec<String> = self.positive.iter().map(|x| x.to_string()).collect();
        write!(f, "{};{}", entries.join(","), self.a)?;
        match self.field {
            FieldSpec::Real => write!(f, "@R"),
            FieldSpec::Complex { disc } => write!(f, "@C:{disc}"),
        }
    }
}

impl FromStr for FormSpec {
    type Err = Error;

    /// Grammar `a1,...,an;a` with an optional `@R` or `@C:disc` suffix (default real).
    fn from_str(text: &str) -> Result<Self> {
        let malformed = |reason: &str| Error::MalformedForm { text: text.into(), reason: reason.into() };
        let trimmed = text.trim();
        let (body, field) = match trimmed.split_once('@') {
            None => (trimmed, FieldSpec::Real),
            Some((body, "R")) => (body, FieldSpec::Real),
            Some((body, suffix)) => {
                let disc = suffix
                    .strip_prefix("C:")
                    .ok_or_else(|| malformed("field suffix must be @R or @C:disc"))?
                    .trim()
                    .parse::<i64>()
                    .map_err(|_| malformed("discriminant is not an integer"))?;
                (body, FieldSpec::complex(disc)?)
            }
        };
        let (entries, a) = body.split_once(';').ok_or_else(|| malformed("missing ';' before a"))?;
        let parse_entry = |s: &str| -> Result<u64> {
            let v: i64 = s.trim().parse().map_err(|_| malformed("entry is not an integer"))?;
            if v <= 0 {
                return Err(Error::InvalidForm(format!("entry {v} must be positive")));
            }
            Ok(v as u64)
        };
        let positive = entries.split(',').map(parse_entry).collect::<Result<Vec<_>>>()?;
        let a = a.trim().parse::<i64>().map_err(|_| malformed("a is not an integer"))?;
        if a <= 0 {
            return Err(Error::InvalidForm("a must be positive".into()));
        }
        FormSpec::new(field, positive, a as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    #[test]
    fn parses_table_forms() {
        let q: FormSpec = "1,1,1,1;1@R".parse().unwrap();
        assert_eq!(q, FormSpec { field: FieldSpec::Real, positive: vec![1, 1, 1, 1], a: 1 });
        assert_eq!(q.det(), -1);
        assert_eq!(q.two_rho(), 3);
        let h: FormSpec = "1,1,1,1,1;1@C:-3".parse().unwrap();
        assert_eq!(h.field, FieldSpec::Complex { disc: -3 });
        assert_eq!(h.n(), 5);
        assert_eq!(h.two_rho(), 10);
        assert_eq!("2,3;5".parse::<FormSpec>().unwrap().field, FieldSpec::Real);
    }

    #[test]
    fn rejects_bad_forms() {
        assert!("1,1;0@R".parse::<FormSpec>().is_err());
        assert!("1,1;-2@R".parse::<FormSpec>().is_err());
        assert!("1,0;2".parse::<FormSpec>().is_err());
        assert!("1;2".parse::<FormSpec>().is_err());
        assert!("1,1,1".parse::<FormSpec>().is_err());
        assert!("1,1;1@C:-12".parse::<FormSpec>().is_err());
        assert!("1,1;1@C:5".parse::<FormSpec>().is_err());
        assert!("1,1;1@Q".parse::<FormSpec>().is_err());
    }

    #[test]
    fn order_bases() {
        let eis = OrderBasis::new(-3).unwrap();
        assert_eq!(eis.omega_kind, OmegaKind::OnePlusSqrtOverTwo);
        assert_eq!(eis.norm_form, BinaryForm { a: 1, b: 1, c: 1 });
        assert_eq!(eis.norm_form.discriminant(), -3);
        let gauss = OrderBasis::new(-4).unwrap();
        assert_eq!(gauss.norm_form, BinaryForm { a: 1, b: 0, c: 1 });
        assert_eq!(OrderBasis::new(-7).unwrap().norm_form, BinaryForm { a: 1, b: 1, c: 2 });
        assert_eq!(OrderBasis::new(-8).unwrap().norm_form.discriminant(), -8);
        assert_eq!(FieldSpec::Real.rho(4), Ratio::new(3, 2));
        assert_eq!(FieldSpec::Complex { disc: -3 }.rho(5), Ratio::from_integer(5));
    }

    fn arb_form() -> impl Strategy<Value = FormSpec> {
        let field = prop_oneof![
            Just(FieldSpec::Real),
            prop::sample::select(vec![-3i64, -4, -7, -8, -11, -15, -20]).prop_map(|disc| FieldSpec::Complex { disc }),
        ];
        (field, prop::collection::vec(1u64..50, 2..9), 1u64..100)
            .prop_map(|(field, positive, a)| FormSpec::new(field, positive, a).unwrap())
    }

    proptest! {
        #[test]
        fn display_parse_round_trip(form in arb_form()) {
            let text = form.to_string();
            prop_assert_eq!(text.parse::<FormSpec>().unwrap(), form);
        }
    }
}
