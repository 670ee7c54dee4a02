//! Exact ground-field scalars: arbitrary precision rationals or residues modulo a prime.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The ground field every structure tensor lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// `GF(p)`. Rejects non-primes and moduli whose products would not fit in `u128`.
    pub fn prime(p: u64) -> Result<Field> {
        if p < 2 || p > u32::MAX as u64 || !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not a supported prime modulus")));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        match self {
            Field::Rational => Scalar(Repr::Small(0, 1)),
            Field::Prime(p) => Scalar::residue(0, p),
        }
    }

    pub fn one(self) -> Scalar {
        self.int(1)
    }

    pub fn int(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar(Repr::Small(n, 1)),
            Field::Prime(p) => Scalar::residue(n.rem_euclid(p as i64) as u64, p),
        }
    }

    /// `num/den` as a field element. Fails when `den` vanishes in the field.
    pub fn ratio(self, num: i64, den: i64) -> Result<Scalar> {
        let d = self.int(den);
        let inv = d.inverse().ok_or_else(|| Error::Parse(format!("zero denominator in {num}/{den}")))?;
        Ok(&self.int(num) * &inv)
    }

    /// Parses `"p"`, `"-p"` or `"p/q"` into this field.
    pub fn parse(self, text: &str) -> Result<Scalar> {
        let text = text.trim();
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (text, "1"),
        };
        let num = BigInt::from_str(num).map_err(|_| Error::Parse(format!("bad numerator in {text:?}")))?;
        let den = BigInt::from_str(den).map_err(|_| Error::Parse(format!("bad denominator in {text:?}")))?;
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {text:?}")));
        }
        match self {
            Field::Rational => Ok(Scalar::rational(BigRational::new(num, den))),
            Field::Prime(p) => {
                let reduce = |x: &BigInt| -> u64 {
                    let m = BigInt::from(p);
                    let r = ((x % &m) + &m) % &m;
                    r.to_string().parse().expect("residue fits in u64")
                };
                let d = Scalar::residue(reduce(&den), p);
                let inv = d.inverse().ok_or_else(|| Error::Parse(format!("denominator of {text:?} vanishes mod {p}")))?;
                Ok(&Scalar::residue(reduce(&num), p) * &inv)
            }
        }
    }

    /// Elements `x` with `x^n = 1`, in a deterministic order (only those expressible exactly).
    ///
    /// Over the rationals these are `±1`; over `GF(p)` every residue is tried.
    pub fn roots_of_unity(self, n: u64) -> Vec<Scalar> {
        match self {
            Field::Rational => {
                let mut out = vec![self.one()];
                if n.is_multiple_of(2) {
                    out.push(self.int(-1));
                }
                out
            }
            Field::Prime(p) => (1..p).map(|v| Scalar::residue(v, p)).filter(|x| x.pow(n) == self.one()).collect(),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element. Rationals are kept in lowest terms with positive denominator,
/// as machine integers while they fit; residues lie in `[0, modulus)`.
///
/// Arithmetic between elements of different fields is a logic error and panics; the
/// containers in this crate check fields before combining values.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Small(i64, i64),
    Big(BigRational),
    Residue { value: u64, modulus: u64 },
}

fn small(num: i128, den: i128) -> Repr {
    let g = num.gcd(&den);
    let (mut n, mut d) = if g > 1 { (num / g, den / g) } else { (num, den) };
    if d < 0 {
        n = -n;
        d = -d;
    }
    match (i64::try_from(n), i64::try_from(d)) {
        (Ok(n), Ok(d)) => Repr::Small(n, d),
        _ => Repr::Big(BigRational::new(BigInt::from(n), BigInt::from(d))),
    }
}

fn big(q: BigRational) -> Repr {
    match (q.numer().to_i64(), q.denom().to_i64()) {
        (Some(n), Some(d)) => Repr::Small(n, d),
        _ => Repr::Big(q),
    }
}

fn to_big(r: &Repr) -> BigRational {
    match r {
        Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
        Repr::Big(q) => q.clone(),
        Repr::Residue { .. } => unreachable!("residue is not rational"),
    }
}

impl Scalar {
    fn rational(q: BigRational) -> Scalar {
        Scalar(big(q))
    }

    fn residue(value: u64, modulus: u64) -> Scalar {
        Scalar(Repr::Residue { value, modulus })
    }

    pub fn field(&self) -> Field {
        match &self.0 {
            Repr::Small(..) | Repr::Big(_) => Field::Rational,
            Repr::Residue { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n == 0,
            Repr::Big(q) => q.is_zero(),
            Repr::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Small(n, d) => *n == 1 && *d == 1,
            Repr::Big(q) => q.is_one(),
            Repr::Residue { value, .. } => *value == 1,
        }
    }

    pub fn inverse(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match &self.0 {
            Repr::Small(n, d) => Scalar(small(*d as i128, *n as i128)),
            Repr::Big(q) => Scalar::rational(q.recip()),
            Repr::Residue { value, modulus } => Scalar::residue(pow_mod(*value, modulus - 2, *modulus), *modulus),
        })
    }

    pub fn pow(&self, n: u64) -> Scalar {
        let mut acc = self.field().one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    fn mismatch(a: &Scalar, b: &Scalar) -> ! {
        panic!("mixed ground fields: {} and {}", a.field(), b.field())
    }
}

fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let m = m as u128;
    let mut acc: u128 = 1;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    return Scalar(small(*a as i128 + *c as i128, 1));
                }
                Scalar(small(*a as i128 * *d as i128 + *c as i128 * *b as i128, *b as i128 * *d as i128))
            }
            (Repr::Residue { value: a, modulus: p }, Repr::Residue { value: b, modulus: q }) if p == q => {
                Scalar::residue(((*a as u128 + *b as u128) % *p as u128) as u64, *p)
            }
            (Repr::Residue { .. }, _) | (_, Repr::Residue { .. }) => Scalar::mismatch(self, rhs),
            (a, b) => Scalar::rational(to_big(a) + to_big(b)),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    return Scalar(small(*a as i128 * *c as i128, 1));
                }
                Scalar(small(*a as i128 * *c as i128, *b as i128 * *d as i128))
            }
            (Repr::Residue { value: a, modulus: p }, Repr::Residue { value: b, modulus: q }) if p == q => {
                Scalar::residue(((*a as u128 * *b as u128) % *p as u128) as u64, *p)
            }
            (Repr::Residue { .. }, _) | (_, Repr::Residue { .. }) => Scalar::mismatch(self, rhs),
            (a, b) => Scalar::rational(to_big(a) * to_big(b)),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Small(n, d) => Scalar(small(-(*n as i128), *d as i128)),
            Repr::Big(q) => Scalar::rational(-q),
            Repr::Residue { value, modulus } => Scalar::residue((modulus - value) % modulus, *modulus),
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Repr::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}
