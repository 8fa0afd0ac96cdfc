//! Exact arithmetic in the field Q(i, sqrt2).
//!
//! Every coefficient that shows up in the ladder-operator algebra (1/2, 1/(2i),
//! i/4, 1/sqrt2, ...) lives here, so all algebraic checks are exact.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// `q[0] + q[1]*sqrt2 + q[2]*i + q[3]*i*sqrt2` with rational `q`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExactScalar {
    q: [BigRational; 4],
}

/// Element of Q(sqrt2) as a pair `(a, b)` meaning `a + b*sqrt2`.
type Real2 = (BigRational, BigRational);

fn r2_mul(x: &Real2, y: &Real2) -> Real2 {
    let two = BigRational::from_integer(BigInt::from(2));
    (
        &x.0 * &y.0 + two * &x.1 * &y.1,
        &x.0 * &y.1 + &x.1 * &y.0,
    )
}

fn r2_add(x: &Real2, y: &Real2) -> Real2 {
    (&x.0 + &y.0, &x.1 + &y.1)
}

fn r2_sub(x: &Real2, y: &Real2) -> Real2 {
    (&x.0 - &y.0, &x.1 - &y.1)
}

/// Inverse in Q(sqrt2); `None` for zero. The norm a^2 - 2b^2 only vanishes at zero.
fn r2_inv(x: &Real2) -> Option<Real2> {
    let two = BigRational::from_integer(BigInt::from(2));
    let norm = &x.0 * &x.0 - two * &x.1 * &x.1;
    if norm.is_zero() {
        return None;
    }
    Some((&x.0 / &norm, -(&x.1) / &norm))
}

impl ExactScalar {
    pub fn new(q0: BigRational, q1: BigRational, q2: BigRational, q3: BigRational) -> Self {
        ExactScalar { q: [q0, q1, q2, q3] }
    }

    pub fn zero() -> Self {
        Self::new(
            BigRational::zero(),
            BigRational::zero(),
            BigRational::zero(),
            BigRational::zero(),
        )
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    pub fn int(n: i64) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num/den` as an exact rational. Panics on `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn rational(r: BigRational) -> Self {
        let mut s = Self::zero();
        s.q[0] = r;
        s
    }

    pub fn i() -> Self {
        let mut s = Self::zero();
        s.q[2] = BigRational::one();
        s
    }

    pub fn sqrt2() -> Self {
        let mut s = Self::zero();
        s.q[1] = BigRational::one();
        s
    }

    /// Components `[q0, q1, q2, q3]`.
    pub fn components(&self) -> &[BigRational; 4] {
        &self.q
    }

    pub fn is_zero(&self) -> bool {
        self.q.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.q[0].is_one() && self.q[1..].iter().all(Zero::is_zero)
    }

    pub fn is_real(&self) -> bool {
        self.q[2].is_zero() && self.q[3].is_zero()
    }

    fn re(&self) -> Real2 {
        (self.q[0].clone(), self.q[1].clone())
    }

    fn im(&self) -> Real2 {
        (self.q[2].clone(), self.q[3].clone())
    }

    fn from_parts(re: Real2, im: Real2) -> Self {
        Self::new(re.0, re.1, im.0, im.1)
    }

    /// Complex conjugate (sqrt2 is real, so only the `i` parts flip).
    pub fn conj(&self) -> Self {
        Self::new(
            self.q[0].clone(),
            self.q[1].clone(),
            -self.q[2].clone(),
            -self.q[3].clone(),
        )
    }

    pub fn inv(&self) -> Option<Self> {
        let (re, im) = (self.re(), self.im());
        let norm = r2_add(&r2_mul(&re, &re), &r2_mul(&im, &im));
        let inv_norm = r2_inv(&norm)?;
        let neg_im = (-im.0, -im.1);
        Some(Self::from_parts(
            r2_mul(&re, &inv_norm),
            r2_mul(&neg_im, &inv_norm),
        ))
    }

    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self * &r)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn to_complex(&self) -> Complex64 {
        let f = |r: &BigRational| r.to_f64().unwrap_or(f64::NAN);
        let s2 = std::f64::consts::SQRT_2;
        Complex64::new(
            f(&self.q[0]) + f(&self.q[1]) * s2,
            f(&self.q[2]) + f(&self.q[3]) * s2,
        )
    }

    /// True when the display form is a sum of more than one part.
    pub fn is_compound(&self) -> bool {
        self.q.iter().filter(|c| !c.is_zero()).count() > 1
    }
}

impl Default for ExactScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for ExactScalar {
    fn from(n: i64) -> Self {
        Self::int(n)
    }
}

impl<'a> Add<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: &ExactScalar) -> ExactScalar {
        ExactScalar::new(
            &self.q[0] + &rhs.q[0],
            &self.q[1] + &rhs.q[1],
            &self.q[2] + &rhs.q[2],
            &self.q[3] + &rhs.q[3],
        )
    }
}

impl<'a> Sub<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: &ExactScalar) -> ExactScalar {
        ExactScalar::new(
            &self.q[0] - &rhs.q[0],
            &self.q[1] - &rhs.q[1],
            &self.q[2] - &rhs.q[2],
            &self.q[3] - &rhs.q[3],
        )
    }
}

impl<'a> Mul<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: &ExactScalar) -> ExactScalar {
        let (a, b) = (self.re(), self.im());
        let (c, d) = (rhs.re(), rhs.im());
        let re = r2_sub(&r2_mul(&a, &c), &r2_mul(&b, &d));
        let im = r2_add(&r2_mul(&a, &d), &r2_mul(&b, &c));
        ExactScalar::from_parts(re, im)
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar::new(
            -self.q[0].clone(),
            -self.q[1].clone(),
            -self.q[2].clone(),
            -self.q[3].clone(),
        )
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $m(self, rhs: ExactScalar) -> ExactScalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $m(self, rhs: &ExactScalar) -> ExactScalar {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Div<&ExactScalar> for &ExactScalar {
    type Output = ExactScalar;
    /// Panics on division by zero; use [`ExactScalar::checked_div`] otherwise.
    fn div(self, rhs: &ExactScalar) -> ExactScalar {
        self.checked_div(rhs).expect("division by zero ExactScalar")
    }
}

impl AddAssign<&ExactScalar> for ExactScalar {
    fn add_assign(&mut self, rhs: &ExactScalar) {
        for k in 0..4 {
            self.q[k] += &rhs.q[k];
        }
    }
}

impl SubAssign<&ExactScalar> for ExactScalar {
    fn sub_assign(&mut self, rhs: &ExactScalar) {
        for k in 0..4 {
            self.q[k] -= &rhs.q[k];
        }
    }
}

impl MulAssign<&ExactScalar> for ExactScalar {
    fn mul_assign(&mut self, rhs: &ExactScalar) {
        *self = &*self * rhs;
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Renders as e.g. `1/2`, `-i`, `1/2*sqrt2`, `1/4 - 1/4*i`. The output parses
/// back through the expression grammar.
impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        const UNITS: [&str; 4] = ["", "sqrt2", "i", "i*sqrt2"];
        let mut first = true;
        for (c, unit) in self.q.iter().zip(UNITS) {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            match (mag.is_one(), unit.is_empty()) {
                (_, true) => write!(f, "{}", fmt_rational(&mag))?,
                (true, false) => write!(f, "{unit}")?,
                (false, false) => write!(f, "{}*{unit}", fmt_rational(&mag))?,
            }
        }
        Ok(())
    }
}
