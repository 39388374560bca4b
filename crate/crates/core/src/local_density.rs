//! `p`-adic local densities
//! `delta_p(Q, t) = lim_j #{x mod p^j : Q[x] ≡ t} / p^{j(rank-1)}`.
//!
//! Good primes use closed forms. Everywhere else the limit is evaluated by counting
//! residues, convolving value distributions over the orbits of `Z/p^j` under
//! multiplication by unit squares.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::forms::{FieldSpec, FormSpec};
use crate::number_theory::kronecker::kronecker;
use crate::number_theory::primes::{inv_mod, is_prime, valuation};

/// One summand of a local quadratic form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Component {
    /// `c x^2`.
    Diagonal(i64),
    /// `(num/den) x^2`; only meaningful at primes not dividing `den`.
    Fraction { num: i64, den: i64 },
    /// `scale (x^2 + x y + c y^2)`, the norm form of a maximal order with `d = 1 - 4c`.
    NormBlock { scale: i64, c: i64 },
}

impl Component {
    pub fn rank(&self) -> u32 {
        match self {
            Component::NormBlock { .. } => 2,
            _ => 1,
        }
    }
}

/// Direct sum of [`Component`]s.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LocalForm {
    pub components: Vec<Component>,
}

impl LocalForm {
    pub fn diagonal(entries: &[i64]) -> Self {
        LocalForm { components: entries.iter().map(|&c| Component::Diagonal(c)).collect() }
    }

    pub fn rank(&self) -> u32 {
        self.components.iter().map(Component::rank).sum()
    }

    /// Real form for a real spec; the complexification for a complex one.
    pub fn of_spec(spec: &FormSpec) -> Self {
        match spec.field {
            FieldSpec::Real => Self::diagonal(&spec.diagonal()),
            FieldSpec::Complex { disc } => complexify(&spec.diagonal(), disc),
        }
    }

    /// Largest `p`-valuation of a coefficient (the block determinant counts for blocks).
    fn max_valuation(&self, p: u64) -> Result<u32> {
        let mut mu = 0;
        for comp in &self.components {
            let v = match *comp {
                Component::Diagonal(c) => nonzero_valuation(c as i128, p)?,
                Component::Fraction { num, den } => {
                    if den == 0 || den.unsigned_abs() % p == 0 {
                        return Err(Error::InvalidParameter(format!("denominator {den} is not a unit at {p}")));
                    }
                    nonzero_valuation(num as i128, p)?
                }
                Component::NormBlock { scale, c } => {
                    nonzero_valuation(scale as i128, p)? + nonzero_valuation(1 - 4 * c as i128, p)?
                }
            };
            mu = mu.max(v);
        }
        Ok(mu)
    }
}

fn nonzero_valuation(x: i128, p: u64) -> Result<u32> {
    if x == 0 {
        return Err(Error::InvalidForm("zero coefficient".into()));
    }
    Ok(valuation(x.unsigned_abs(), p))
}

/// Quadratic form `Q_H` of rank `2m` attached to the hermitian form `diag(a_1, ..., a_m)`
/// over the maximal order of discriminant `disc`, in the basis `{1, omega}` of each
/// coordinate.
pub fn complexify(diag: &[i64], disc: i64) -> LocalForm {
    let mut components = Vec::with_capacity(2 * diag.len());
    for &a in diag {
        if disc.rem_euclid(4) == 0 {
            components.push(Component::Diagonal(a));
            components.push(Component::Diagonal(-a * disc / 4));
        } else {
            components.push(Component::NormBlock { scale: a, c: (1 - disc) / 4 });
        }
    }
    LocalForm { components }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DensityMethod {
    ClosedFormGood,
    ResidueCount,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalDensityResult {
    pub p: u64,
    pub value: BigRational,
    pub method: DensityMethod,
    /// Level `j` from which consecutive residue counts agree.
    pub stabilized_at: Option<u32>,
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `p^{-e}` as an exact rational.
fn inv_pow(p: u64, e: u32) -> BigRational {
    BigRational::new(BigInt::one(), num_traits::pow(BigInt::from(p), e as usize))
}

fn geometric(ratio: &BigRational, terms: u32) -> BigRational {
    let mut acc = BigRational::zero();
    let mut power = BigRational::one();
    for _ in 0..terms {
        acc += &power;
        power *= ratio;
    }
    acc
}

/// Split `t = p^c l` with `p ∤ l`.
fn split_target(target: i64, p: u64) -> Result<(u32, i64)> {
    if target == 0 {
        return Err(Error::ZeroTarget);
    }
    let c = valuation(target.unsigned_abs() as u128, p);
    Ok((c, target / (p as i64).pow(c)))
}

/// Closed-form `delta_p` of the diagonal form `diag` representing `target`, for
/// `p ∤ 2 det`.
pub fn delta_p_good_real(diag: &[i64], target: i64, p: u64) -> Result<BigRational> {
    check_prime(p)?;
    let det: i128 = diag.iter().map(|&c| c as i128).product();
    if p == 2 || det % p as i128 == 0 {
        return Err(Error::BadPrime { p });
    }
    let (c, l) = split_target(target, p)?;
    let m = diag.len() as u32;
    let det_mod = det.rem_euclid(p as i128) as i64;
    let sign = |e: u32| if e.is_multiple_of(2) { 1 } else { -1 };
    if m.is_multiple_of(2) {
        let eps = kronecker(sign(m / 2) * det_mod, p as i64) as i64;
        // q = p^{-(m-2)/2}
        let eq = rat(eps) * inv_pow(p, (m - 2) / 2);
        Ok((BigRational::one() - rat(eps) * inv_pow(p, m / 2)) * geometric(&eq, c + 1))
    } else {
        let eps = kronecker(sign((m - 1) / 2) * det_mod * l.rem_euclid(p as i64), p as i64) as i64;
        let q2 = if m >= 2 { inv_pow(p, m - 2) } else { rat(p as i64) };
        let head = BigRational::one() - inv_pow(p, m - 1);
        if c % 2 == 1 {
            Ok(head * geometric(&q2, c.div_ceil(2)))
        } else {
            let tail = (BigRational::one() + rat(eps) * inv_pow(p, (m - 1) / 2)) * num_traits::pow(q2.clone(), (c / 2) as usize);
            Ok(head * geometric(&q2, c / 2) + tail)
        }
    }
}

/// Closed-form `delta_p` of the hermitian form `diag` over the order of discriminant
/// `disc`, for `p ∤ 2 disc det`. Depends on `target` only through its `p`-valuation.
pub fn delta_p_good_complex(diag: &[i64], disc: i64, target: i64, p: u64) -> Result<BigRational> {
    check_prime(p)?;
    let det: i128 = diag.iter().map(|&c| c as i128).product();
    if p == 2 || det % p as i128 == 0 || disc % p as i64 == 0 {
        return Err(Error::BadPrime { p });
    }
    let (c, _) = split_target(target, p)?;
    let m = diag.len() as u32;
    let eps = (kronecker(disc, p as i64) as i64).pow(m);
    let eq = rat(eps) * inv_pow(p, m - 1);
    Ok((BigRational::one() - rat(eps) * inv_pow(p, m)) * geometric(&eq, c + 1))
}

/// Default largest level tried by [`local_density`].
pub fn default_j_max(p: u64) -> u32 {
    match p {
        2 => 8,
        3 => 5,
        _ => 4,
    }
}

/// First level at which residue counts are provably stable:
/// `2 v_p(2) + mu + nu + 1`, with `mu` the largest coefficient valuation and `nu = v_p(t)`.
pub fn hensel_start(form: &LocalForm, target: i64, p: u64) -> Result<u32> {
    if target == 0 {
        return Err(Error::ZeroTarget);
    }
    let mu = form.max_valuation(p)?;
    let nu = valuation(target.unsigned_abs() as u128, p);
    Ok(2 * u32::from(p == 2) + mu + nu + 1)
}

/// Orbits of `Z/p^j` under multiplication by unit squares, with the structure
/// constants of addition between them.
struct OrbitTable {
    modulus: u64,
    orbit_of: Vec<u32>,
    reps: Vec<u64>,
    /// `sum[(c * n + a) * n + b] = #{u in orbit a : rep_c - u in orbit b}`.
    sum: Vec<u64>,
}

impl OrbitTable {
    fn new(p: u64, j: u32) -> Self {
        let modulus = p.pow(j);
        let squares: Vec<bool> = {
            let mut s = vec![false; p as usize];
            for x in 1..p {
                s[(x * x % p) as usize] = true;
            }
            s
        };
        let classes = |e: u32| -> u32 {
            if p != 2 {
                2
            } else {
                match e {
                    1 => 1,
                    2 => 2,
                    _ => 4,
                }
            }
        };
        // offsets[v] = first orbit index of valuation v; index 0 is the zero orbit.
        let mut offsets = Vec::with_capacity(j as usize);
        let mut count = 1u32;
        for v in 0..j {
            offsets.push(count);
            count += classes(j - v);
        }
        let mut orbit_of = vec![0u32; modulus as usize];
        let mut reps = vec![u64::MAX; count as usize];
        reps[0] = 0;
        for x in 1..modulus {
            let mut v = 0;
            let mut u = x;
            while u % p == 0 {
                u /= p;
                v += 1;
            }
            let class = if p != 2 {
                u32::from(!squares[(u % p) as usize])
            } else {
                match j - v {
                    1 => 0,
                    2 => ((u % 4) / 2) as u32,
                    _ => ((u % 8) / 2) as u32,
                }
            };
            let idx = offsets[v as usize] + class;
            orbit_of[x as usize] = idx;
            if reps[idx as usize] == u64::MAX {
                reps[idx as usize] = x;
            }
        }
        let n = count as usize;
        let mut sum = vec![0u64; n * n * n];
        for (c, &w) in reps.iter().enumerate() {
            for u in 0..modulus {
                let a = orbit_of[u as usize] as usize;
                let b = orbit_of[((w + modulus - u) % modulus) as usize] as usize;
                sum[(c * n + a) * n + b] += 1;
            }
        }
        OrbitTable { modulus, orbit_of, reps, sum }
    }

    fn len(&self) -> usize {
        self.reps.len()
    }

    /// Restrict a full value histogram to one count per orbit.
    fn compress(&self, hist: &[u64]) -> Vec<BigUint> {
        self.reps.iter().map(|&r| BigUint::from(hist[r as usize])).collect()
    }

    fn convolve(&self, f: &[BigUint], g: &[BigUint]) -> Vec<BigUint> {
        let n = self.len();
        (0..n)
            .map(|c| {
                let mut acc = BigUint::zero();
                for a in 0..n {
                    if f[a].is_zero() {
                        continue;
                    }
                    let mut inner = BigUint::zero();
                    for b in 0..n {
                        let k = self.sum[(c * n + a) * n + b];
                        if k != 0 && !g[b].is_zero() {
                            inner += &g[b] * k;
                        }
                    }
                    acc += &f[a] * inner;
                }
                acc
            })
            .collect()
    }
}

/// Coefficient residue or block, reduced modulo `p^j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Atom {
    Square(u64),
    Block { scale: u64, c: u64 },
}

fn reduce(x: i128, modulus: u64) -> u64 {
    x.rem_euclid(modulus as i128) as u64
}

fn atoms(form: &LocalForm, p: u64, modulus: u64) -> Result<Vec<Atom>> {
    let mut out = Vec::new();
    for comp in &form.components {
        match *comp {
            Component::Diagonal(c) => out.push(Atom::Square(reduce(c as i128, modulus))),
            Component::Fraction { num, den } => {
                let inv = inv_mod(reduce(den as i128, modulus), modulus)
                    .ok_or_else(|| Error::InvalidParameter(format!("denominator {den} is not a unit at {p}")))?;
                out.push(Atom::Square(reduce(num as i128 * inv as i128, modulus)));
            }
            Component::NormBlock { scale, c } if p != 2 => {
                // x^2 + xy + c y^2 = (x + y/2)^2 + ((4c - 1)/4) y^2
                let inv4 = inv_mod(4 % modulus, modulus).expect("odd modulus");
                out.push(Atom::Square(reduce(scale as i128, modulus)));
                let second = reduce(scale as i128 * (4 * c as i128 - 1), modulus) as u128 * inv4 as u128;
                out.push(Atom::Square((second % modulus as u128) as u64));
            }
            Component::NormBlock { scale, c } => {
                out.push(Atom::Block { scale: reduce(scale as i128, modulus), c: reduce(c as i128, modulus) })
            }
        }
    }
    Ok(out)
}

fn histogram(atom: Atom, modulus: u64) -> Vec<u64> {
    let m = modulus as u128;
    let mut hist = vec![0u64; modulus as usize];
    match atom {
        Atom::Square(coef) => {
            for x in 0..m {
                hist[(coef as u128 * (x * x % m) % m) as usize] += 1;
            }
        }
        Atom::Block { scale, c } => {
            for x in 0..m {
                for y in 0..m {
                    let v = (x * x + x * y + c as u128 * (y * y % m)) % m;
                    hist[(scale as u128 * v % m) as usize] += 1;
                }
            }
        }
    }
    hist
}

/// `#{x mod p^j : Q[x] ≡ t} / p^{j(rank-1)}` at one level `j`.
pub fn residue_density_at_level(form: &LocalForm, target: i64, p: u64, j: u32) -> Result<BigRational> {
    check_prime(p)?;
    if j == 0 || form.components.is_empty() {
        return Err(Error::InvalidParameter("need j >= 1 and a nonempty form".into()));
    }
    let table = OrbitTable::new(p, j);
    let modulus = table.modulus;
    let mut cache: BTreeMap<Atom, Vec<BigUint>> = BTreeMap::new();
    let mut acc: Option<Vec<BigUint>> = None;
    for atom in atoms(form, p, modulus)? {
        let h = cache.entry(atom).or_insert_with(|| table.compress(&histogram(atom, modulus))).clone();
        acc = Some(match acc {
            None => h,
            Some(f) => table.convolve(&f, &h),
        });
    }
    let counts = acc.expect("nonempty");
    let count = &counts[table.orbit_of[reduce(target as i128, modulus) as usize] as usize];
    let norm = num_traits::pow(BigUint::from(p), (j * (form.rank() - 1)) as usize);
    Ok(BigRational::new(BigInt::from(count.clone()), BigInt::from(norm)))
}

/// Residue-count density, accepted once two consecutive levels at or beyond
/// [`hensel_start`] agree.
pub fn delta_p_residue_count(form: &LocalForm, target: i64, p: u64, j_max: u32) -> Result<LocalDensityResult> {
    check_prime(p)?;
    let start = hensel_start(form, target, p)?;
    if j_max < start + 1 {
        return Err(Error::Unstable { p, j_max });
    }
    let mut previous = residue_density_at_level(form, target, p, start)?;
    for j in start + 1..=j_max {
        let value = residue_density_at_level(form, target, p, j)?;
        if value == previous {
            return Ok(LocalDensityResult {
                p,
                value,
                method: DensityMethod::ResidueCount,
                stabilized_at: Some(j - 1),
            });
        }
        previous = value;
    }
    Err(Error::Unstable { p, j_max })
}

/// Whether `p` divides `2 det` (real) or `2 d det` (complex).
pub fn is_bad_prime(spec: &FormSpec, p: u64) -> bool {
    let det = spec.det();
    p == 2 || det % p as i128 == 0 || spec.field.disc().is_some_and(|d| d % p as i64 == 0)
}

/// `delta_p(spec, target)`: closed form at good primes, residue counting otherwise.
pub fn local_density(spec: &FormSpec, target: i64, p: u64) -> Result<LocalDensityResult> {
    check_prime(p)?;
    if is_bad_prime(spec, p) {
        let form = LocalForm::of_spec(spec);
        let j_max = default_j_max(p).max(hensel_start(&form, target, p)? + 1);
        return delta_p_residue_count(&form, target, p, j_max);
    }
    let diag = spec.diagonal();
    let value = match spec.field {
        FieldSpec::Real => delta_p_good_real(&diag, target, p)?,
        FieldSpec::Complex { disc } => delta_p_good_complex(&diag, disc, target, p)?,
    };
    Ok(LocalDensityResult { p, value, method: DensityMethod::ClosedFormGood, stabilized_at: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    /// Full enumeration of `(Z/p^j)^rank` for tiny cases.
    fn brute_force(form: &LocalForm, target: i64, p: u64, j: u32) -> BigRational {
        let m = p.pow(j) as i64;
        let vars = form.rank() as usize;
        let mut x = vec![0i64; vars];
        let mut count = 0i64;
        let coef = |num: i64, den: i64| {
            let inv = inv_mod(den.rem_euclid(m) as u64, m as u64).unwrap() as i64;
            (num * inv).rem_euclid(m)
        };
        loop {
            let mut value = 0i64;
            let mut i = 0;
            for comp in &form.components {
                match *comp {
                    Component::Diagonal(c) => value += c * x[i] * x[i],
                    Component::Fraction { num, den } => value += coef(num, den) * x[i] * x[i],
                    Component::NormBlock { scale, c } => {
                        value += scale * (x[i] * x[i] + x[i] * x[i + 1] + c * x[i + 1] * x[i + 1])
                    }
                }
                i += comp.rank() as usize;
                value = value.rem_euclid(m);
            }
            if value == target.rem_euclid(m) {
                count += 1;
            }
            let mut pos = 0;
            while pos < vars {
                x[pos] += 1;
                if x[pos] < m {
                    break;
                }
                x[pos] = 0;
                pos += 1;
            }
            if pos == vars {
                break;
            }
        }
        BigRational::new(count.into(), BigInt::from(m).pow(vars as u32 - 1))
    }

    #[test]
    fn dp_matches_enumeration() {
        let cases: [(LocalForm, i64, u64, u32); 6] = [
            (LocalForm::diagonal(&[1, 1, -1]), 3, 3, 2),
            (LocalForm::diagonal(&[1, 2, -3]), -1, 2, 3),
            (LocalForm::diagonal(&[1, 1, 1, -1]), -1, 2, 3),
            (complexify(&[1, -1], -3), -1, 2, 2),
            (complexify(&[1, -2], -7), 5, 3, 2),
            (LocalForm { components: vec![Component::Fraction { num: 3, den: 4 }, Component::Diagonal(1)] }, 1, 3, 2),
        ];
        for (form, t, p, j) in cases {
            assert_eq!(residue_density_at_level(&form, t, p, j).unwrap(), brute_force(&form, t, p, j), "{form:?}");
        }
    }

    #[test]
    fn worked_values() {
        let i41 = LocalForm::diagonal(&[1, 1, 1, 1, -1]);
        let r = delta_p_residue_count(&i41, -1, 2, 8).unwrap();
        assert_eq!(r.value, q(5, 8));
        assert_eq!(r.method, DensityMethod::ResidueCount);
        assert_eq!(delta_p_good_real(&[1, 1, 1, 1, -1], -1, 3).unwrap(), q(10, 9));
        assert_eq!(delta_p_good_real(&[1, 1, 1, 1, -1], -1, 7).unwrap(), q(50, 49));
        assert_eq!(residue_density_at_level(&i41, -1, 7, 2).unwrap(), q(50, 49));
        // (-1)^2 det = -1 and (-1|3) = -1
        assert_eq!(delta_p_good_real(&[1, 1, 1, -1], -1, 3).unwrap(), q(10, 9));
        assert_eq!(residue_density_at_level(&LocalForm::diagonal(&[1, 1, 1, -1]), -1, 3, 2).unwrap(), q(10, 9));
        // rank one: two square roots of 1 at every level, normalization p^0
        let r = delta_p_residue_count(&LocalForm::diagonal(&[1]), 1, 3, 5).unwrap();
        assert_eq!(r.value, q(2, 1));
    }

    #[test]
    fn complex_closed_form() {
        let h = [1, 1, 1, 1, 1, -1];
        assert_eq!(delta_p_good_complex(&h, -3, -1, 5).unwrap(), q(15624, 15625));
        assert_eq!(residue_density_at_level(&complexify(&h, -3), -1, 5, 1).unwrap(), q(15624, 15625));
        // p | k, c = 1: (1 - eps p^-m)(1 + eps q)
        let eps = 1i64;
        let expected = (BigRational::one() - q(eps, 5i64.pow(6))) * (BigRational::one() + q(eps, 5i64.pow(5)));
        assert_eq!(delta_p_good_complex(&h, -3, -5, 5).unwrap(), expected);
        let small = [1, 2, -1];
        assert_eq!(
            delta_p_good_complex(&small, -3, -1, 7).unwrap(),
            delta_p_residue_count(&complexify(&small, -3), -1, 7, 4).unwrap().value
        );
    }

    #[test]
    fn bad_primes_rejected() {
        assert!(matches!(delta_p_good_real(&[1, 3, -1], 1, 3), Err(Error::BadPrime { p: 3 })));
        assert!(matches!(delta_p_good_real(&[1, 1, -1], 1, 2), Err(Error::BadPrime { p: 2 })));
        assert!(matches!(delta_p_good_complex(&[1, 1, -1], -7, 1, 7), Err(Error::BadPrime { p: 7 })));
        assert!(matches!(delta_p_good_real(&[1, 1, -1], 1, 9), Err(Error::NotPrime(9))));
        assert!(matches!(delta_p_good_real(&[1, 1, -1], 0, 5), Err(Error::ZeroTarget)));
        assert!(matches!(
            delta_p_residue_count(&LocalForm::diagonal(&[1, 1, -1]), 1, 2, 3),
            Err(Error::Unstable { .. })
        ));
    }

    #[test]
    fn complexify_shapes() {
        assert_eq!(complexify(&[1, -1], -4), LocalForm::diagonal(&[1, 1, -1, -1]));
        assert_eq!(
            complexify(&[1, -1], -3).components,
            vec![Component::NormBlock { scale: 1, c: 1 }, Component::NormBlock { scale: -1, c: 1 }]
        );
        assert_eq!(complexify(&[2, 3, -5], -8).rank(), 6);
    }

    #[test]
    fn zero_iff_not_represented() {
        // x^2 + y^2 = 3 has no solution mod 9
        let f = LocalForm::diagonal(&[1, 1]);
        let r = delta_p_residue_count(&f, 3, 3, 5).unwrap();
        assert!(r.value.is_zero());
        assert!(brute_force(&f, 3, 3, 2).is_zero());
        // x^2 + y^2 + z^2 never equals 7 mod 8
        let g = LocalForm::diagonal(&[1, 1, 1]);
        assert!(delta_p_residue_count(&g, 7, 2, 8).unwrap().value.is_zero());
        assert!(brute_force(&g, 7, 2, 3).is_zero());
        assert!(!delta_p_residue_count(&g, 3, 2, 8).unwrap().value.is_zero());
    }

    fn sign_entry() -> impl Strategy<Value = i64> {
        (1i64..=5, any::<bool>()).prop_map(|(v, neg)| if neg { -v } else { v })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn good_prime_closed_form(
            diag in prop::collection::vec(sign_entry(), 1..=6),
            k in sign_entry().prop_flat_map(|_| (1i64..=10, any::<bool>())),
            p in prop::sample::select(vec![3u64, 5, 7, 11, 13]),
        ) {
            let det: i64 = diag.iter().product();
            prop_assume!(det % p as i64 != 0);
            let t = if k.1 { -k.0 } else { k.0 };
            let closed = delta_p_good_real(&diag, t, p).unwrap();
            let counted = delta_p_residue_count(&LocalForm::diagonal(&diag), t, p, 6).unwrap();
            prop_assert_eq!(closed, counted.value);
        }

        #[test]
        fn block_equals_diagonal_off_two(
            d in prop::sample::select(vec![-3i64, -7, -11]),
            k in (1i64..=6, any::<bool>()),
            p in prop::sample::select(vec![3u64, 5, 7, 11]),
        ) {
            let t = if k.1 { -k.0 } else { k.0 };
            let block = LocalForm { components: vec![Component::NormBlock { scale: 1, c: (1 - d) / 4 }] };
            let diag = LocalForm { components: vec![Component::Diagonal(1), Component::Fraction { num: -d, den: 4 }] };
            let j = hensel_start(&diag, t, p).unwrap();
            prop_assert_eq!(
                residue_density_at_level(&block, t, p, j).unwrap(),
                residue_density_at_level(&diag, t, p, j).unwrap()
            );
        }
    }
}
