//! Rational and Gaussian rational scalars.

use alloc::string::String;
use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always stored reduced with positive
/// denominator.
pub type Rat = BigRational;

/// Rational from a numerator/denominator pair of machine integers.
pub fn rat(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// Parse a `"p/q"` or `"p"` string into a rational.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().ok()?;
            Some(BigRational::from_integer(n))
        }
    }
}

/// Canonical `"p/q"` rendering (plain `"p"` when the denominator is 1).
pub fn rat_string(x: &Rat) -> String {
    use alloc::string::ToString;
    x.to_string()
}

/// Gaussian rational `re + im*i` with `i^2 = -1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussQ {
    pub re: Rat,
    pub im: Rat,
}

impl GaussQ {
    pub fn new(re: Rat, im: Rat) -> Self {
        GaussQ { re, im }
    }

    pub fn from_rat(re: Rat) -> Self {
        GaussQ { re, im: Rat::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(rat_int(n))
    }

    /// `p/q` as a real Gaussian rational.
    pub fn from_pair(n: i64, d: i64) -> Self {
        Self::from_rat(rat(n, d))
    }

    /// `(a + b*i)` from machine integers.
    pub fn gauss(a: i64, b: i64) -> Self {
        GaussQ { re: rat_int(a), im: rat_int(b) }
    }

    pub fn i() -> Self {
        GaussQ { re: Rat::zero(), im: Rat::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussQ { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn norm_sqr(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Self {
        let n = self.norm_sqr();
        assert!(!n.is_zero(), "division by zero GaussQ");
        GaussQ { re: &self.re / &n, im: -(&self.im / &n) }
    }

    /// Approximate complex value, for advisory numeric checks only.
    pub fn to_f64_pair(&self) -> (f64, f64) {
        (rat_to_f64(&self.re), rat_to_f64(&self.im))
    }
}

/// Advisory conversion; exact decisions never use it.
pub fn rat_to_f64(x: &Rat) -> f64 {
    // num-rational's to_f64 requires std; do a simple division of
    // truncated quotient plus remainder refinement instead.
    let n = x.numer();
    let d = x.denom();
    let (q, r) = num_integer::Integer::div_rem(n, d);
    let qf = bigint_to_f64(&q);
    // r/d in (-1, 1): refine with 64-bit scaling.
    let scale = BigInt::from(1u64 << 53);
    let rs = (&r * &scale) / d;
    qf + bigint_to_f64(&rs) / (1u64 << 53) as f64
}

fn bigint_to_f64(x: &BigInt) -> f64 {
    // Good enough for magnitudes used by embeddings.
    let (sign, digits) = x.to_u64_digits();
    let mut out = 0.0f64;
    for d in digits.iter().rev() {
        out = out * 1.8446744073709552e19 + *d as f64;
    }
    if sign == num_bigint::Sign::Minus {
        -out
    } else {
        out
    }
}

impl fmt::Display for GaussQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            return write!(f, "{}i", self.im);
        }
        if self.im.is_negative() {
            write!(f, "{}{}i", self.re, self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl fmt::Debug for GaussQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for GaussQ {
    type Output = GaussQ;
    fn add(self, rhs: GaussQ) -> GaussQ {
        GaussQ { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl<'a> Add<&'a GaussQ> for GaussQ {
    type Output = GaussQ;
    fn add(self, rhs: &'a GaussQ) -> GaussQ {
        GaussQ { re: self.re + &rhs.re, im: self.im + &rhs.im }
    }
}

impl AddAssign for GaussQ {
    fn add_assign(&mut self, rhs: GaussQ) {
        self.re += rhs.re;
        self.im += rhs.im;
    }
}

impl Sub for GaussQ {
    type Output = GaussQ;
    fn sub(self, rhs: GaussQ) -> GaussQ {
        GaussQ { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl SubAssign for GaussQ {
    fn sub_assign(&mut self, rhs: GaussQ) {
        self.re -= rhs.re;
        self.im -= rhs.im;
    }
}

impl Mul for GaussQ {
    type Output = GaussQ;
    fn mul(self, rhs: GaussQ) -> GaussQ {
        &self * &rhs
    }
}

impl<'b> Mul<&'b GaussQ> for &GaussQ {
    type Output = GaussQ;
    fn mul(self, rhs: &'b GaussQ) -> GaussQ {
        GaussQ {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl MulAssign for GaussQ {
    fn mul_assign(&mut self, rhs: GaussQ) {
        *self = &*self * &rhs;
    }
}

impl Div for GaussQ {
    type Output = GaussQ;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: GaussQ) -> GaussQ {
        &self * &rhs.inv()
    }
}

impl Neg for GaussQ {
    type Output = GaussQ;
    fn neg(self) -> GaussQ {
        GaussQ { re: -self.re, im: -self.im }
    }
}
