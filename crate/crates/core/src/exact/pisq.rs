use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{pi_squared_bounds, rat_to_f64, BigRational, PolynomialQ};
use crate::error::{Error, Result};

/// An element of ℚ(π²), stored as a ratio of polynomials in `τ = π²`.
///
/// The representation is canonical: numerator and denominator are coprime
/// and the denominator is monic, so derived equality, hashing and text are
/// functions of the value alone.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PiSquaredElement {
    num: PolynomialQ,
    den: PolynomialQ,
}

impl PiSquaredElement {
    pub fn from_parts(num: PolynomialQ, den: PolynomialQ) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: PolynomialQ, den: PolynomialQ) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = PolynomialQ::gcd(&num, &den);
        let (mut num, mut den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.div_rem(&g).expect("gcd nonzero").0, den.div_rem(&g).expect("gcd nonzero").0)
        };
        let lead = den.leading().expect("denominator nonzero").clone();
        if !lead.is_one() {
            let inv = lead.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Self { num, den }
    }

    pub fn zero() -> Self {
        Self { num: PolynomialQ::zero(), den: PolynomialQ::one() }
    }

    pub fn one() -> Self {
        Self::rational(BigRational::one())
    }

    pub fn rational(c: BigRational) -> Self {
        Self { num: PolynomialQ::constant(c), den: PolynomialQ::one() }
    }

    /// `π²` itself.
    pub fn pi_squared() -> Self {
        Self { num: PolynomialQ::x(), den: PolynomialQ::one() }
    }

    /// `a + b·π²`.
    pub fn linear(a: BigRational, b: BigRational) -> Self {
        Self { num: PolynomialQ::new(vec![a, b]), den: PolynomialQ::one() }
    }

    pub fn numerator(&self) -> &PolynomialQ {
        &self.num
    }

    pub fn denominator(&self) -> &PolynomialQ {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The value as a rational, if it has no π² dependence.
    pub fn as_rational(&self) -> Option<BigRational> {
        match (self.num.degree(), self.den.degree()) {
            (None, _) => Some(BigRational::zero()),
            (Some(0), Some(0)) => Some(self.num.coeff(0)),
            _ => None,
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::normalized(self.num.scale(c), self.den.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn inv(&self) -> Result<Self> {
        Self::one().checked_div(self)
    }

    /// Exact sign at `τ = π²`. Nonzero polynomials with rational
    /// coefficients cannot vanish at a transcendental point, so refining the
    /// enclosure of π² always terminates.
    pub fn signum(&self) -> i8 {
        poly_sign_at_pi_squared(&self.num) * poly_sign_at_pi_squared(&self.den)
    }

    pub fn to_f64(&self) -> f64 {
        pisq_eval(self, 20).map(|h| h.to_f64()).unwrap_or(f64::NAN)
    }
}

fn interval_eval(p: &PolynomialQ, lo: &BigRational, hi: &BigRational) -> (BigRational, BigRational) {
    // τ > 0, so each power is bracketed by the powers of the endpoints.
    let mut low = BigRational::zero();
    let mut high = BigRational::zero();
    let mut plo = BigRational::one();
    let mut phi = BigRational::one();
    for c in p.coeffs() {
        if c.is_positive() {
            low += c * &plo;
            high += c * &phi;
        } else {
            low += c * &phi;
            high += c * &plo;
        }
        plo *= lo;
        phi *= hi;
    }
    (low, high)
}

fn poly_sign_at_pi_squared(p: &PolynomialQ) -> i8 {
    if p.is_zero() {
        return 0;
    }
    if p.degree() == Some(0) {
        return super::rat_signum(&p.coeff(0));
    }
    let mut bits = 64;
    loop {
        let (lo, hi) = pi_squared_bounds(bits);
        let (low, high) = interval_eval(p, &lo, &hi);
        if low.is_positive() {
            return 1;
        }
        if high.is_negative() {
            return -1;
        }
        assert!(bits < 1 << 22, "sign of {p} at pi^2 unresolved");
        bits *= 2;
    }
}

impl PartialOrd for PiSquaredElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PiSquaredElement {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }
}

impl From<BigRational> for PiSquaredElement {
    fn from(c: BigRational) -> Self {
        Self::rational(c)
    }
}

impl Add for &PiSquaredElement {
    type Output = PiSquaredElement;
    fn add(self, rhs: &PiSquaredElement) -> PiSquaredElement {
        if self.den == rhs.den {
            return PiSquaredElement::normalized(&self.num + &rhs.num, self.den.clone());
        }
        PiSquaredElement::normalized(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &PiSquaredElement {
    type Output = PiSquaredElement;
    fn sub(self, rhs: &PiSquaredElement) -> PiSquaredElement {
        self + &(-rhs)
    }
}

impl Mul for &PiSquaredElement {
    type Output = PiSquaredElement;
    fn mul(self, rhs: &PiSquaredElement) -> PiSquaredElement {
        PiSquaredElement::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &PiSquaredElement {
    type Output = PiSquaredElement;
    fn neg(self) -> PiSquaredElement {
        PiSquaredElement { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for PiSquaredElement {
            type Output = PiSquaredElement;
            fn $method(self, rhs: PiSquaredElement) -> PiSquaredElement {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for PiSquaredElement {
    type Output = PiSquaredElement;
    fn neg(self) -> PiSquaredElement {
        -&self
    }
}

impl std::iter::Sum for PiSquaredElement {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| &acc + &x)
    }
}

fn write_tau_poly(f: &mut fmt::Formatter<'_>, p: &PolynomialQ) -> fmt::Result {
    if p.is_zero() {
        return f.write_str("0");
    }
    let mut first = true;
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        match (first, c.is_negative()) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        first = false;
        match k {
            0 => write!(f, "{mag}")?,
            _ if mag.is_one() => write!(f, "pi^{}", 2 * k)?,
            _ => write!(f, "{mag}*pi^{}", 2 * k)?,
        }
    }
    Ok(())
}

impl fmt::Display for PiSquaredElement {
    /// Canonical text: `a/b + c/d*pi^2`, or `(num)/(den)` when the
    /// denominator is not one.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            return write_tau_poly(f, &self.num);
        }
        f.write_str("(")?;
        write_tau_poly(f, &self.num)?;
        f.write_str(")/(")?;
        write_tau_poly(f, &self.den)?;
        f.write_str(")")
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n).map_err(|_| bad())?;
            let d = BigInt::from_str(d).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

fn parse_power(s: &str) -> Result<usize> {
    let e: usize = s.parse().map_err(|_| Error::Parse(format!("bad exponent {s:?}")))?;
    if !e.is_multiple_of(2) {
        return Err(Error::Parse(format!("odd power of pi: {e}")));
    }
    Ok(e / 2)
}

fn parse_term(term: &str) -> Result<PolynomialQ> {
    let (coef, power) = if let Some(rest) = term.strip_prefix("pi^") {
        (BigRational::one(), parse_power(rest)?)
    } else if let Some((c, p)) = term.split_once("*pi^") {
        (parse_rational(c)?, parse_power(p)?)
    } else {
        (parse_rational(term)?, 0)
    };
    Ok(PolynomialQ::monomial(coef, power))
}

fn parse_tau_poly(s: &str) -> Result<PolynomialQ> {
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut out = PolynomialQ::zero();
    let mut start = 0;
    let bytes = s.as_bytes();
    for i in 1..=bytes.len() {
        if i == bytes.len() || ((bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^') {
            let chunk = &s[start..i];
            let (neg, body) = match chunk.as_bytes()[0] {
                b'-' => (true, &chunk[1..]),
                b'+' => (false, &chunk[1..]),
                _ => (false, chunk),
            };
            let term = parse_term(body)?;
            out = if neg { &out - &term } else { &out + &term };
            start = i;
        }
    }
    Ok(out)
}

impl FromStr for PiSquaredElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some(inner) = compact.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
            let (num, den) = inner
                .split_once(")/(")
                .ok_or_else(|| Error::Parse(format!("expected (num)/(den): {s:?}")))?;
            return Self::from_parts(parse_tau_poly(num)?, parse_tau_poly(den)?);
        }
        Ok(Self::normalized(parse_tau_poly(&compact)?, PolynomialQ::one()))
    }
}

/// Decimal approximation of an exact quantity, carried as a rational.
#[derive(Clone, Debug, PartialEq)]
pub struct HighPrecision {
    value: BigRational,
    digits: u32,
}

impl HighPrecision {
    /// Wraps an approximation already known to `digits` places.
    pub fn from_rational(value: BigRational, digits: u32) -> Self {
        Self { value, digits }
    }

    pub fn value(&self) -> &BigRational {
        &self.value
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn to_f64(&self) -> f64 {
        rat_to_f64(&self.value)
    }
}

impl fmt::Display for HighPrecision {
    /// Fixed point with `digits` places after the decimal point, rounded
    /// half away from zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let scale = BigInt::from(10).pow(self.digits);
        let scaled = &self.value * BigRational::from_integer(scale.clone());
        let rounded = scaled.round().to_integer();
        let sign = if rounded.is_negative() { "-" } else { "" };
        let mag = rounded.abs();
        let int_part = &mag / &scale;
        let frac_part = &mag % &scale;
        write!(f, "{sign}{int_part}.{:0>width$}", frac_part.to_string(), width = self.digits as usize)
    }
}

/// Evaluates an exact element to `digits` decimal places: the returned
/// value is within `10^-(digits+1)` of the true value.
pub fn pisq_eval(a: &PiSquaredElement, digits: u32) -> Result<HighPrecision> {
    if digits < 15 {
        return Err(Error::InvalidArgument(format!("digits must be at least 15, got {digits}")));
    }
    if a.den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let tolerance = BigRational::new(BigInt::one(), BigInt::from(10).pow(digits + 1));
    // π² carried with at least ten guard digits beyond the request.
    let mut bits = ((digits + 10) as f64 * std::f64::consts::LOG2_10).ceil() as usize + 8;
    loop {
        let (lo, hi) = pi_squared_bounds(bits);
        let (nlo, nhi) = interval_eval(&a.num, &lo, &hi);
        let (dlo, dhi) = interval_eval(&a.den, &lo, &hi);
        if dlo.is_positive() || dhi.is_negative() {
            let corners = [&nlo / &dlo, &nlo / &dhi, &nhi / &dlo, &nhi / &dhi];
            let min = corners.iter().min().expect("nonempty").clone();
            let max = corners.iter().max().expect("nonempty").clone();
            if &max - &min < tolerance {
                let value = (min + max) / BigRational::from_integer(2.into());
                return Ok(HighPrecision { value, digits });
            }
        }
        if bits > 1 << 22 {
            return Err(Error::Numerical("pi^2 enclosure did not resolve".into()));
        }
        bits *= 2;
    }
}
