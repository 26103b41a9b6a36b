use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Ground field of a computation.
///
/// `Q` embeds into `QI` (the Gaussian rationals); combining the two promotes
/// to `QI`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Field {
    #[serde(rename = "q")]
    Q,
    #[serde(rename = "qi")]
    QI,
}

impl Field {
    pub fn join(self, other: Field) -> Field {
        self.max(other)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Q => f.write_str("Q"),
            Field::QI => f.write_str("Q(i)"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "q" => Ok(Field::Q),
            "qi" | "q(i)" => Ok(Field::QI),
            other => Err(Error::Parse(format!("unknown field `{other}`"))),
        }
    }
}

/// An exact element of Q or Q(i): `re + im·i`.
///
/// Both parts are kept in lowest terms with positive denominators (the
/// invariant maintained by [`BigRational`]). A `Q`-tagged value always has a
/// zero imaginary part. Equality and hashing compare values only, so `1` in Q
/// equals `1` in Q(i).
#[derive(Clone, Debug)]
pub struct Scalar {
    re: BigRational,
    im: BigRational,
    field: Field,
}

impl Scalar {
    pub fn zero(field: Field) -> Self {
        Scalar { re: BigRational::zero(), im: BigRational::zero(), field }
    }

    pub fn one(field: Field) -> Self {
        Scalar::from_int(1, field)
    }

    pub fn from_int(n: i64, field: Field) -> Self {
        Scalar { re: BigRational::from_integer(n.into()), im: BigRational::zero(), field }
    }

    pub fn from_ratio(num: i64, den: i64, field: Field) -> Self {
        Scalar {
            re: BigRational::new(num.into(), den.into()),
            im: BigRational::zero(),
            field,
        }
    }

    pub fn rational(re: BigRational) -> Self {
        Scalar { re, im: BigRational::zero(), field: Field::Q }
    }

    pub fn gaussian(re: BigRational, im: BigRational) -> Self {
        Scalar { re, im, field: Field::QI }
    }

    /// The imaginary unit (always tagged `QI`).
    pub fn i() -> Self {
        Scalar::gaussian(BigRational::zero(), BigRational::one())
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Re-tag the value; fails when a nonreal value is forced into `Q`.
    pub fn in_field(mut self, field: Field) -> Result<Self> {
        if field == Field::Q && !self.im.is_zero() {
            return Err(Error::FieldMismatch { expected: Field::Q, found: Field::QI });
        }
        self.field = field;
        Ok(self)
    }

    pub fn conj(&self) -> Self {
        Scalar { re: self.re.clone(), im: -&self.im, field: self.field }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.im.is_zero() {
            return Some(Scalar { re: self.re.recip(), im: BigRational::zero(), field: self.field });
        }
        let norm = &self.re * &self.re + &self.im * &self.im;
        Some(Scalar { re: &self.re / &norm, im: -(&self.im / &norm), field: self.field })
    }

    /// Least common multiple of the denominators of both parts.
    pub(crate) fn denom_lcm(&self) -> BigInt {
        use num_integer::Integer;
        self.re.denom().lcm(self.im.denom())
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.re == other.re && self.im == other.im
    }
}

impl Eq for Scalar {}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.re.hash(state);
        self.im.hash(state);
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n, Field::Q)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a> $tr<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                let f: fn(&Scalar, &Scalar) -> Scalar = $body;
                f(self, rhs)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

fn retag(mut s: Scalar, field: Field) -> Scalar {
    s.field = field;
    s
}

forward_binop!(Add, add, |a, b| {
    let field = a.field.join(b.field);
    if b.is_zero() {
        return retag(a.clone(), field);
    }
    if a.is_zero() {
        return retag(b.clone(), field);
    }
    Scalar { re: &a.re + &b.re, im: &a.im + &b.im, field }
});

forward_binop!(Sub, sub, |a, b| {
    let field = a.field.join(b.field);
    if b.is_zero() {
        return retag(a.clone(), field);
    }
    if a.is_zero() {
        return retag(-b, field);
    }
    Scalar { re: &a.re - &b.re, im: &a.im - &b.im, field }
});

forward_binop!(Mul, mul, |a, b| {
    let field = a.field.join(b.field);
    if a.is_zero() || b.is_zero() {
        return Scalar::zero(field);
    }
    if a.im.is_zero() && b.im.is_zero() {
        return Scalar { re: &a.re * &b.re, im: BigRational::zero(), field };
    }
    Scalar {
        re: &a.re * &b.re - &a.im * &b.im,
        im: &a.re * &b.im + &a.im * &b.re,
        field,
    }
});

forward_binop!(Div, div, |a, b| {
    let inv = b.inv().expect("division by zero scalar");
    a * &inv
});

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -self.re, im: -self.im, field: self.field }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -&self.re, im: -&self.im, field: self.field }
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
        self.field = self.field.join(rhs.field);
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
        self.field = self.field.join(rhs.field);
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        let mut acc = Scalar::zero(Field::Q);
        for x in iter {
            acc += &x;
        }
        acc
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return f.write_str(&fmt_rational(&self.re));
        }
        let im_abs = self.im.abs();
        let im_str = if im_abs.is_one() { String::new() } else { fmt_rational(&im_abs) };
        if self.re.is_zero() {
            let sign = if self.im.is_negative() { "-" } else { "" };
            return write!(f, "{sign}{im_str}i");
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "{}{sign}{im_str}i", fmt_rational(&self.re))
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

/// Parses `a/b` (Q) or `a/b+c/di` (Q(i)); either part may be omitted, and a
/// bare `i` or `-i` stands for the unit coefficient.
impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        let Some(body) = s.strip_suffix('i') else {
            return Ok(Scalar::rational(parse_rational(&s)?));
        };
        // Split real and imaginary parts at the last sign that is not leading.
        let split = body
            .char_indices()
            .filter(|&(idx, c)| idx > 0 && (c == '+' || c == '-'))
            .map(|(idx, _)| idx)
            .last();
        let (re_str, im_str) = match split {
            Some(idx) => (&body[..idx], &body[idx..]),
            None => ("", body),
        };
        let re = if re_str.is_empty() { BigRational::zero() } else { parse_rational(re_str)? };
        let im = match im_str {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            other => parse_rational(other.strip_prefix('+').unwrap_or(other))?,
        };
        Ok(Scalar::gaussian(re, im))
    }
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(s("3/2").to_string(), "3/2");
        assert_eq!(s("6/4").to_string(), "3/2");
        assert_eq!(s("-1+1/2i").to_string(), "-1+1/2i");
        assert_eq!(s("i").to_string(), "i");
        assert_eq!(s("-i").to_string(), "-i");
        assert_eq!(s("2-3i").to_string(), "2-3i");
        assert_eq!(s("1/2i"), Scalar::gaussian(BigRational::zero(), BigRational::new(1.into(), 2.into())));
        assert_eq!(s("-7").field(), Field::Q);
        assert_eq!(s("-7+0i").field(), Field::QI);
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("abc".parse::<Scalar>().is_err());
    }

    #[test]
    fn gaussian_arithmetic() {
        let a = s("1+2i");
        let b = s("3-i");
        assert_eq!(&a * &b, s("5+5i"));
        assert_eq!(&(&a / &b) * &b, a);
        assert_eq!(&Scalar::i() * &Scalar::i(), Scalar::from(-1));
        assert!(Scalar::zero(Field::Q).inv().is_none());
    }

    #[test]
    fn q_embeds_in_qi() {
        let q = Scalar::from_ratio(1, 3, Field::Q);
        let qi = q.clone().in_field(Field::QI).unwrap();
        assert_eq!(q, qi);
        assert_eq!((&q + &qi).field(), Field::QI);
        assert!(Scalar::i().in_field(Field::Q).is_err());
    }
}
