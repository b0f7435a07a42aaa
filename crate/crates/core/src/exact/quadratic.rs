use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{format_rational, render_scaled, Rational};
use crate::error::{Error, Result};

/// An element `a + b*sqrt(d)` of the real quadratic field `Q(sqrt(d))`.
///
/// `d` is a square-free integer greater than one. A value with `b == 0` is a
/// plain rational and mixes freely with any radicand; two values with
/// nonzero `b` must share `d`.
///
/// The `std::ops` impls panic on radicand mismatch or division by zero, the
/// same way big-rational division by zero panics. Use the `try_*` methods
/// when the inputs are not known to be compatible.
#[derive(Clone, Debug)]
pub struct QuadraticNumber {
    a: Rational,
    b: Rational,
    d: u64,
}

fn is_square_free(d: u64) -> bool {
    if d < 2 {
        return false;
    }
    let mut n = d;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p * p) {
            return false;
        }
        if n.is_multiple_of(p) {
            n /= p;
        }
        p += 1;
    }
    true
}

impl QuadraticNumber {
    pub fn new(a: Rational, b: Rational, d: u64) -> Result<Self> {
        if d == 1 {
            return Ok(Self::rational(a + b));
        }
        if !is_square_free(d) {
            return Err(Error::BadRadicand(d));
        }
        Ok(Self { a, b, d })
    }

    /// Embeds a rational; the radicand placeholder is 1.
    pub fn rational(a: Rational) -> Self {
        Self {
            a,
            b: Rational::zero(),
            d: 1,
        }
    }

    /// `sqrt(d)` itself.
    pub fn sqrt(d: u64) -> Result<Self> {
        Self::new(Rational::zero(), Rational::one(), d)
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn surd_part(&self) -> &Rational {
        &self.b
    }

    pub fn radicand(&self) -> u64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// The rational value, if the surd part vanishes.
    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.a.clone())
    }

    pub fn conjugate(&self) -> Self {
        Self {
            a: self.a.clone(),
            b: -self.b.clone(),
            d: self.d,
        }
    }

    /// Field norm `a^2 - b^2 d`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * Rational::from_integer(BigInt::from(self.d))
    }

    fn joint_radicand(&self, other: &Self) -> Result<u64> {
        match (self.b.is_zero(), other.b.is_zero()) {
            (true, true) => Ok(self.d.max(other.d)),
            (false, true) => Ok(self.d),
            (true, false) => Ok(other.d),
            (false, false) if self.d == other.d => Ok(self.d),
            _ => Err(Error::RadicandMismatch(self.d, other.d)),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let d = self.joint_radicand(other)?;
        Ok(Self {
            a: &self.a + &other.a,
            b: &self.b + &other.b,
            d,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        let d = self.joint_radicand(other)?;
        Ok(Self {
            a: &self.a - &other.a,
            b: &self.b - &other.b,
            d,
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let d = self.joint_radicand(other)?;
        let dr = Rational::from_integer(BigInt::from(d));
        Ok(Self {
            a: &self.a * &other.a + &self.b * &other.b * dr,
            b: &self.a * &other.b + &self.b * &other.a,
            d,
        })
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        let d = self.joint_radicand(other)?;
        let norm = other.norm();
        if norm.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let num = self.try_mul(&other.conjugate())?;
        Ok(Self {
            a: num.a / &norm,
            b: num.b / norm,
            d,
        })
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::rational(Rational::one());
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Exact sign of `a + b*sqrt(d)`.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&Rational::zero());
        let sb = self.b.cmp(&Rational::zero());
        match (sa, sb) {
            (s, Ordering::Equal) => s,
            (Ordering::Equal, s) => s,
            (x, y) if x == y => x,
            // opposite signs: compare a^2 with b^2 d
            (sa, _) => {
                let a2 = &self.a * &self.a;
                let b2d = &self.b * &self.b * Rational::from_integer(BigInt::from(self.d));
                match a2.cmp(&b2d) {
                    Ordering::Equal => Ordering::Equal,
                    Ordering::Greater => sa,
                    Ordering::Less => sa.reverse(),
                }
            }
        }
    }

    pub fn quad_compare(&self, other: &Self) -> Result<Ordering> {
        Ok(self.try_sub(other)?.signum())
    }

    /// Largest integer not exceeding the value.
    pub fn floor(&self) -> BigInt {
        if self.b.is_zero() {
            return self.a.floor().to_integer();
        }
        // b*sqrt(d) = sign * sqrt(p^2 d) / q with q > 0
        let p = self.b.numer().abs();
        let q = self.b.denom().clone();
        let root = (&p * &p * BigInt::from(self.d)).sqrt();
        let low = if self.b.is_positive() {
            &self.a + Rational::new(root, q)
        } else {
            &self.a - Rational::new(root + 1, q)
        };
        let mut n = low.floor().to_integer();
        loop {
            let next = QuadraticNumber::rational(Rational::from_integer(&n + 1));
            if self.quad_compare(&next).expect("rational is compatible") == Ordering::Less {
                return n;
            }
            n += 1;
        }
    }

    /// Rounds to `digits` decimal places (half up) and renders as a plain
    /// decimal string.
    pub fn decimal_string(&self, digits: usize) -> String {
        let scale = BigInt::from(10u32).pow(digits as u32);
        let scaled = self * &QuadraticNumber::rational(Rational::from_integer(scale.clone()));
        let shifted = &scaled + &QuadraticNumber::rational(Rational::new(1.into(), 2.into()));
        render_scaled(&shifted.floor(), &scale, digits)
    }

    pub fn decimal_approximation(&self, digits: usize) -> String {
        format!("~{}", self.decimal_string(digits))
    }

    /// Floating-point value, for plots and logs only.
    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        a + b * (self.d as f64).sqrt()
    }
}

impl From<Rational> for QuadraticNumber {
    fn from(q: Rational) -> Self {
        QuadraticNumber::rational(q)
    }
}

impl PartialEq for QuadraticNumber {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b && (self.b.is_zero() || self.d == other.d)
    }
}

impl PartialOrd for QuadraticNumber {
    /// `None` when the radicands are incompatible.
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.quad_compare(other).ok()
    }
}

impl QuadraticNumber {
    /// `(p + q*sqrt(d))/r` over the least common denominator, e.g.
    /// `(-1+2*sqrt(13))/17`. Rationals print as `format_rational` does.
    pub fn fraction_string(&self) -> String {
        if self.b.is_zero() {
            return format_rational(&self.a);
        }
        let den = num_integer::Integer::lcm(self.a.denom(), self.b.denom());
        let p = self.a.numer() * (&den / self.a.denom());
        let q = self.b.numer() * (&den / self.b.denom());
        let surd = if q.is_one() {
            format!("+sqrt({})", self.d)
        } else if (-&q).is_one() {
            format!("-sqrt({})", self.d)
        } else if q.is_negative() {
            format!("{q}*sqrt({})", self.d)
        } else {
            format!("+{q}*sqrt({})", self.d)
        };
        let head = if p.is_zero() {
            String::new()
        } else {
            p.to_string()
        };
        let body = format!("{head}{surd}");
        let body = body.strip_prefix('+').map(str::to_string).unwrap_or(body);
        if den.is_one() {
            body
        } else {
            format!("({body})/{den}")
        }
    }
}

impl fmt::Display for QuadraticNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", format_rational(&self.a));
        }
        let (op, mag) = match self.b.numer().sign() {
            Sign::Minus => ("-", -self.b.clone()),
            _ => ("+", self.b.clone()),
        };
        write!(
            f,
            "({} {} {}*sqrt({}))",
            format_rational(&self.a),
            op,
            format_rational(&mag),
            self.d
        )
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&QuadraticNumber> for &QuadraticNumber {
            type Output = QuadraticNumber;
            fn $method(self, rhs: &QuadraticNumber) -> QuadraticNumber {
                match self.$try(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("quadratic {}: {e}", stringify!($method)),
                }
            }
        }
        impl $trait for QuadraticNumber {
            type Output = QuadraticNumber;
            fn $method(self, rhs: QuadraticNumber) -> QuadraticNumber {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);
forward_binop!(Div, div, try_div);

impl Neg for QuadraticNumber {
    type Output = QuadraticNumber;
    fn neg(self) -> QuadraticNumber {
        QuadraticNumber {
            a: -self.a,
            b: -self.b,
            d: self.d,
        }
    }
}

impl Neg for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn neg(self) -> QuadraticNumber {
        -(self.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use proptest::prelude::*;

    fn q(a: (i64, i64), b: (i64, i64), d: u64) -> QuadraticNumber {
        QuadraticNumber::new(rat(a.0, a.1), rat(b.0, b.1), d).unwrap()
    }

    fn lambda() -> QuadraticNumber {
        q((-3, 52), (5, 52), 17)
    }

    fn beta() -> QuadraticNumber {
        q((5864893, 16812976), (27, 16812976), 57)
    }

    #[test]
    fn lambda_exceeds_one_third() {
        let third = QuadraticNumber::rational(rat(1, 3));
        assert_eq!(lambda().quad_compare(&third).unwrap(), Ordering::Greater);
    }

    #[test]
    fn beta_exceeds_lambda_despite_different_radicands() {
        // radicands differ, so compare each against a separating rational
        let sep = QuadraticNumber::rational(rat(34, 100));
        assert_eq!(beta().quad_compare(&sep).unwrap(), Ordering::Greater);
        assert_eq!(lambda().quad_compare(&sep).unwrap(), Ordering::Less);
        assert!(matches!(
            beta().quad_compare(&lambda()),
            Err(Error::RadicandMismatch(57, 17))
        ));
    }

    #[test]
    fn identity_compare() {
        let one = q((1, 1), (0, 1), 17);
        assert_eq!(one.quad_compare(&one).unwrap(), Ordering::Equal);
    }

    #[test]
    fn field_arithmetic_examples() {
        let r57 = QuadraticNumber::sqrt(57).unwrap();
        assert_eq!((&r57 * &r57).to_rational(), Some(rat(57, 1)));
        let x = q((9, 2), (1, 2), 57);
        assert_eq!((&x * &x.conjugate()).to_rational(), Some(rat(6, 1)));
        let zero = QuadraticNumber::rational(rat(0, 1));
        assert_eq!(&lambda() + &zero, lambda());
        assert_eq!((&x / &x).to_rational(), Some(rat(1, 1)));
        assert!(x.try_mul(&lambda()).is_err());
    }

    #[test]
    fn division_by_zero_and_bad_radicand() {
        let zero = QuadraticNumber::rational(rat(0, 1));
        assert_eq!(lambda().try_div(&zero), Err(Error::DivisionByZero));
        assert_eq!(QuadraticNumber::sqrt(12), Err(Error::BadRadicand(12)));
        assert_eq!(QuadraticNumber::sqrt(0), Err(Error::BadRadicand(0)));
        assert_eq!(
            QuadraticNumber::sqrt(1).unwrap().to_rational(),
            Some(rat(1, 1))
        );
    }

    #[test]
    fn decimal_rendering_of_named_constants() {
        assert_eq!(lambda().decimal_string(5), "0.33876");
        assert_eq!(beta().decimal_string(6), "0.348843");
        assert_eq!(lambda().to_string(), "(-3/52 + 5/52*sqrt(17))");
        assert_eq!(q((1, 1), (-2, 3), 13).to_string(), "(1 - 2/3*sqrt(13))");
        assert_eq!(q((-7, 2), (1, 1), 2).floor(), BigInt::from(-3));
        assert_eq!(q((0, 1), (-1, 1), 2).floor(), BigInt::from(-2));
    }

    fn arb_quad(d: u64) -> impl Strategy<Value = QuadraticNumber> {
        (-200i64..200, 1i64..50, -200i64..200, 1i64..50)
            .prop_map(move |(a, b, c, e)| q((a, b), (c, e), d))
    }

    proptest! {
        #[test]
        fn compare_is_reflexive_and_antisymmetric(x in arb_quad(13), y in arb_quad(13)) {
            prop_assert_eq!(x.quad_compare(&x).unwrap(), Ordering::Equal);
            prop_assert_eq!(x.quad_compare(&y).unwrap(), y.quad_compare(&x).unwrap().reverse());
        }

        #[test]
        fn compare_is_transitive(x in arb_quad(17), y in arb_quad(17), z in arb_quad(17)) {
            let mut v = [x, y, z];
            v.sort_by(|p, q| p.quad_compare(q).unwrap());
            prop_assert_ne!(v[0].quad_compare(&v[2]).unwrap(), Ordering::Greater);
        }

        #[test]
        fn compare_agrees_with_floats_when_well_separated(x in arb_quad(57), y in arb_quad(57)) {
            let (fx, fy) = (x.to_f64(), y.to_f64());
            prop_assume!((fx - fy).abs() > 1e-9);
            let expected = if fx < fy { Ordering::Less } else { Ordering::Greater };
            prop_assert_eq!(x.quad_compare(&y).unwrap(), expected);
        }

        #[test]
        fn division_inverts_multiplication(x in arb_quad(13), y in arb_quad(13)) {
            prop_assume!(y.norm() != Rational::zero());
            prop_assert_eq!(&(&x * &y) / &y, x);
        }

        #[test]
        fn floor_brackets_value(x in arb_quad(57)) {
            let f = QuadraticNumber::rational(Rational::from_integer(x.floor()));
            let f1 = &f + &QuadraticNumber::rational(rat(1, 1));
            prop_assert_ne!(f.quad_compare(&x).unwrap(), Ordering::Greater);
            prop_assert_eq!(x.quad_compare(&f1).unwrap(), Ordering::Less);
        }
    }
}
