//! Exact scalar fields: the rationals and the Gaussian rationals.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ArithError;

/// The Gaussian rationals ℚ(i).
pub type GaussianRational = Complex<BigRational>;

/// Which ground field a value, matrix or algebra lives over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldTag {
    Q,
    QI,
}

impl FieldTag {
    pub fn as_str(self) -> &'static str {
        match self {
            FieldTag::Q => "Q",
            FieldTag::QI => "QI",
        }
    }

    /// The smallest field containing both.
    pub fn join(self, other: FieldTag) -> FieldTag {
        self.max(other)
    }
}

impl Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FieldTag {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "Q" => Ok(FieldTag::Q),
            "QI" => Ok(FieldTag::QI),
            other => Err(ArithError::Parse(format!("unknown field `{other}`"))),
        }
    }
}

/// Bounded-height grid of ground-field values used by witness searches:
/// numerators in `-numerator..=numerator`, denominators in `1..=denominator`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridHeight {
    pub numerator: i64,
    pub denominator: i64,
}

impl Default for GridHeight {
    fn default() -> Self {
        GridHeight { numerator: 2, denominator: 2 }
    }
}

impl GridHeight {
    /// Distinct rationals of the grid, ordered by height then sign (0, 1, -1, 2, -2, 1/2, ...).
    pub fn rationals(&self) -> Vec<BigRational> {
        let mut out: Vec<BigRational> = Vec::new();
        out.push(BigRational::zero());
        let mut cands: Vec<(i64, i64)> = Vec::new();
        for d in 1..=self.denominator.max(1) {
            for p in 1..=self.numerator.max(0) {
                cands.push((p, d));
            }
        }
        cands.sort_by_key(|&(p, d)| (p.max(d), d, p));
        for (p, d) in cands {
            for s in [1i64, -1] {
                let q = BigRational::new(BigInt::from(s * p), BigInt::from(d));
                if !out.contains(&q) {
                    out.push(q);
                }
            }
        }
        out
    }

    /// Gaussian grid `a + b i`, real grid first.
    pub fn gaussians(&self) -> Vec<GaussianRational> {
        let rs = self.rationals();
        let mut out: Vec<GaussianRational> = rs.iter().map(|r| Complex::new(r.clone(), BigRational::zero())).collect();
        for im in rs.iter().filter(|r| !r.is_zero()) {
            for re in &rs {
                out.push(Complex::new(re.clone(), im.clone()));
            }
        }
        out
    }
}

/// An exact field of characteristic zero contained in ℚ(i).
pub trait Field:
    Clone
    + Debug
    + PartialEq
    + Eq
    + Hash
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    const TAG: FieldTag;

    fn checked_inv(&self) -> Result<Self, ArithError>;

    fn from_rational(q: BigRational) -> Self;

    fn from_i64(v: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(v)))
    }

    fn to_gaussian(&self) -> GaussianRational;

    /// `None` when the value does not lie in this field.
    fn from_gaussian(z: &GaussianRational) -> Option<Self>;

    /// Real and imaginary parts.
    fn parts(&self) -> (BigRational, BigRational) {
        let z = self.to_gaussian();
        (z.re, z.im)
    }

    /// Ground-field points of the search grid.
    fn grid(height: &GridHeight) -> Vec<Self>;

    fn checked_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        Ok(self.clone() * rhs.checked_inv()?)
    }

    /// Canonical file token: `p/q` or `p/q+r/si`.
    fn token(&self) -> String {
        let (re, im) = self.parts();
        if im.is_zero() {
            rational_token(&re)
        } else {
            format!("{}+{}i", rational_token(&re), rational_token(&im))
        }
    }
}

/// `p/q` with `q > 0`, always carrying the denominator.
pub fn rational_token(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

impl Field for BigRational {
    const TAG: FieldTag = FieldTag::Q;

    fn checked_inv(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            Err(ArithError::InvalidScalar)
        } else {
            Ok(self.recip())
        }
    }

    fn from_rational(q: BigRational) -> Self {
        q
    }

    fn to_gaussian(&self) -> GaussianRational {
        Complex::new(self.clone(), BigRational::zero())
    }

    fn from_gaussian(z: &GaussianRational) -> Option<Self> {
        z.im.is_zero().then(|| z.re.clone())
    }

    fn grid(height: &GridHeight) -> Vec<Self> {
        height.rationals()
    }
}

impl Field for GaussianRational {
    const TAG: FieldTag = FieldTag::QI;

    fn checked_inv(&self) -> Result<Self, ArithError> {
        let norm = self.norm_sqr();
        if norm.is_zero() {
            return Err(ArithError::InvalidScalar);
        }
        Ok(Complex::new(&self.re / &norm, -(&self.im / &norm)))
    }

    fn from_rational(q: BigRational) -> Self {
        Complex::new(q, BigRational::zero())
    }

    fn to_gaussian(&self) -> GaussianRational {
        self.clone()
    }

    fn from_gaussian(z: &GaussianRational) -> Option<Self> {
        Some(z.clone())
    }

    fn grid(height: &GridHeight) -> Vec<Self> {
        height.gaussians()
    }
}

/// A field element carrying its field tag at runtime.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    QI(GaussianRational),
}

/// The four primitive field operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Mul,
    Inv,
    Neg,
}

impl Scalar {
    pub fn tag(&self) -> FieldTag {
        match self {
            Scalar::Q(_) => FieldTag::Q,
            Scalar::QI(_) => FieldTag::QI,
        }
    }

    pub fn rational(p: i64, q: i64) -> Result<Scalar, ArithError> {
        if q == 0 {
            return Err(ArithError::InvalidScalar);
        }
        Ok(Scalar::Q(BigRational::new(p.into(), q.into())))
    }

    pub fn gaussian(re: BigRational, im: BigRational) -> Scalar {
        Scalar::QI(Complex::new(re, im))
    }

    pub fn i() -> Scalar {
        Scalar::gaussian(BigRational::zero(), BigRational::one())
    }

    pub fn to_gaussian(&self) -> GaussianRational {
        match self {
            Scalar::Q(q) => q.to_gaussian(),
            Scalar::QI(z) => z.clone(),
        }
    }

    /// Coerce into `tag`; fails when a non-real value is pushed into ℚ.
    pub fn coerce(&self, tag: FieldTag) -> Result<Scalar, ArithError> {
        match (self, tag) {
            (Scalar::Q(_), FieldTag::Q) | (Scalar::QI(_), FieldTag::QI) => Ok(self.clone()),
            (Scalar::Q(q), FieldTag::QI) => Ok(Scalar::QI(q.to_gaussian())),
            (Scalar::QI(z), FieldTag::Q) => BigRational::from_gaussian(z)
                .map(Scalar::Q)
                .ok_or(ArithError::FieldMismatch { expected: FieldTag::Q, found: FieldTag::QI }),
        }
    }

    pub fn into_field<F: Field>(&self) -> Result<F, ArithError> {
        F::from_gaussian(&self.to_gaussian()).ok_or(ArithError::FieldMismatch { expected: F::TAG, found: self.tag() })
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::QI(z) => z.is_zero(),
        }
    }

    /// Applies `op`. Binary operations use `b`; unary ones ignore it.
    /// Mixed operands are computed in ℚ(i).
    pub fn apply(op: FieldOp, a: &Scalar, b: &Scalar) -> Result<Scalar, ArithError> {
        let tag = match op {
            FieldOp::Add | FieldOp::Mul => a.tag().join(b.tag()),
            FieldOp::Inv | FieldOp::Neg => a.tag(),
        };
        let out = match tag {
            FieldTag::Q => {
                let (x, y): (BigRational, BigRational) = (a.into_field()?, b.into_field().unwrap_or_default());
                Scalar::Q(match op {
                    FieldOp::Add => x + y,
                    FieldOp::Mul => x * y,
                    FieldOp::Inv => x.checked_inv()?,
                    FieldOp::Neg => -x,
                })
            }
            FieldTag::QI => {
                let (x, y) = (a.to_gaussian(), b.to_gaussian());
                Scalar::QI(match op {
                    FieldOp::Add => x + y,
                    FieldOp::Mul => x * y,
                    FieldOp::Inv => x.checked_inv()?,
                    FieldOp::Neg => -x,
                })
            }
        };
        Ok(out)
    }

    pub fn token(&self) -> String {
        match self {
            Scalar::Q(q) => q.token(),
            Scalar::QI(z) => z.token(),
        }
    }
}

impl Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.token())
    }
}

impl Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.token())
    }
}

fn parse_rational(s: &str) -> Result<BigRational, ArithError> {
    let bad = || ArithError::Parse(format!("bad rational `{s}`"));
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    if p.is_empty() || q.is_empty() || q.starts_with(['-', '+']) {
        return Err(bad());
    }
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if !q.is_positive() {
        return Err(ArithError::InvalidScalar);
    }
    Ok(BigRational::new(p, q))
}

impl FromStr for Scalar {
    type Err = ArithError;

    /// Accepts `p/q`, `p` and `p/q+r/si` (also `p/q-r/si`, `r/si`, `i`, `-i`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let Some(body) = s.strip_suffix('i') else {
            return parse_rational(s).map(Scalar::Q);
        };
        // split at the sign that separates the real and imaginary parts
        let bytes = body.as_bytes();
        let is_sign = |b: u8| b == b'+' || b == b'-';
        let split = (1..bytes.len()).rev().find(|&k| is_sign(bytes[k]) && !is_sign(bytes[k - 1]));
        let (re, im) = match split {
            Some(k) => {
                let (re, rest) = body.split_at(k);
                let im = rest.strip_prefix('+').unwrap_or(rest);
                (parse_rational(re)?, im)
            }
            None => (BigRational::zero(), body),
        };
        let im = match im {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            other => parse_rational(other)?,
        };
        Ok(Scalar::gaussian(re, im))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> Scalar {
        Scalar::rational(p, d).unwrap()
    }

    #[test]
    fn add_halves_and_thirds() {
        assert_eq!(Scalar::apply(FieldOp::Add, &q(1, 2), &q(1, 3)).unwrap(), q(5, 6));
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = Scalar::i();
        let prod = Scalar::apply(FieldOp::Mul, &i, &i).unwrap();
        assert_eq!(prod.coerce(FieldTag::Q).unwrap(), q(-1, 1));
    }

    #[test]
    fn inverse_of_one_plus_i() {
        let z: Scalar = "1/1+1/1i".parse().unwrap();
        let inv = Scalar::apply(FieldOp::Inv, &z, &z).unwrap();
        assert_eq!(inv, "1/2+-1/2i".parse().unwrap());
        let one = Scalar::apply(FieldOp::Mul, &z, &inv).unwrap();
        assert_eq!(one.coerce(FieldTag::Q).unwrap(), q(1, 1));
    }

    #[test]
    fn division_by_zero_is_invalid() {
        assert_eq!(Scalar::apply(FieldOp::Inv, &q(0, 1), &q(0, 1)), Err(ArithError::InvalidScalar));
        assert_eq!(Scalar::rational(1, 0), Err(ArithError::InvalidScalar));
    }

    #[test]
    fn rational_coerces_into_gaussian() {
        let sum = Scalar::apply(FieldOp::Add, &q(1, 2), &Scalar::i()).unwrap();
        assert_eq!(sum.tag(), FieldTag::QI);
        assert_eq!(sum.token(), "1/2+1/1i");
    }

    #[test]
    fn tokens_parse_back() {
        for t in ["0/1", "-3/4", "5/6+-1/2i", "0/1+1/1i"] {
            assert_eq!(t.parse::<Scalar>().unwrap().token(), t);
        }
        assert_eq!("2".parse::<Scalar>().unwrap(), q(2, 1));
        assert_eq!("1/2-1/3i".parse::<Scalar>().unwrap().token(), "1/2+-1/3i");
        assert_eq!("-i".parse::<Scalar>().unwrap().token(), "0/1+-1/1i");
        assert!("1/-2".parse::<Scalar>().is_err());
        assert!("1/0".parse::<Scalar>().is_err());
    }

    #[test]
    fn grid_default_has_seven_rationals() {
        let g = GridHeight::default().rationals();
        assert_eq!(g.len(), 7);
        assert_eq!(g[0], BigRational::zero());
        assert_eq!(GridHeight::default().gaussians().len(), 49);
    }

    #[test]
    fn gaussian_coercion_into_rational_fails() {
        assert!(Scalar::i().into_field::<BigRational>().is_err());
    }
}
