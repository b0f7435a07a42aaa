//! Exact arithmetic: big rationals and elements of real quadratic fields.
//!
//! Every probability, balance constant and case bound in this crate is an
//! exact value. Decimal strings exist for display only and are produced by
//! scaled integer division, never by floating point.

mod quadratic;

pub use quadratic::QuadraticNumber;

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Builds `p/q`. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn rat_from_int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// Ratio of two non-negative big integers. Panics if `den` is zero.
pub fn ratio_of(num: &BigUint, den: &BigUint) -> Rational {
    Rational::new(BigInt::from(num.clone()), BigInt::from(den.clone()))
}

pub fn rat_compare(x: &Rational, y: &Rational) -> Ordering {
    x.cmp(y)
}

/// Renders `p/q`, or just `p` when the denominator is one.
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Rounds `x` to `digits` decimal places (half away from zero) and renders
/// the result without any marker.
pub fn decimal_string(x: &Rational, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = x * Rational::from_integer(scale.clone());
    let half = rat(1, 2);
    let rounded = if scaled.is_negative() {
        -((-scaled + half).floor())
    } else {
        (scaled + half).floor()
    };
    render_scaled(&rounded.to_integer(), &scale, digits)
}

/// Display form used across the CLI: `~0.333333`.
pub fn decimal_approximation(x: &Rational, digits: usize) -> String {
    format!("~{}", decimal_string(x, digits))
}

/// Field operation selector for [`quad_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuadOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Exact field arithmetic in a shared quadratic field.
pub fn quad_arith(
    x: &QuadraticNumber,
    y: &QuadraticNumber,
    op: QuadOp,
) -> crate::Result<QuadraticNumber> {
    match op {
        QuadOp::Add => x.try_add(y),
        QuadOp::Sub => x.try_sub(y),
        QuadOp::Mul => x.try_mul(y),
        QuadOp::Div => x.try_div(y),
    }
}

/// Exact comparison. Values from different fields, both irrational, are
/// never equal (1, sqrt(d) and sqrt(d') are independent over Q), so their
/// order is read off exact floors at growing precision.
pub fn quad_compare(x: &QuadraticNumber, y: &QuadraticNumber) -> crate::Result<Ordering> {
    if x.is_rational() || y.is_rational() || x.radicand() == y.radicand() {
        return x.quad_compare(y);
    }
    let mut scale = BigInt::from(1u32);
    loop {
        let s = QuadraticNumber::rational(Rational::from_integer(scale.clone()));
        let (fx, fy) = ((x * &s).floor(), (y * &s).floor());
        if fx != fy {
            return Ok(fx.cmp(&fy));
        }
        scale *= BigInt::from(1u64 << 32);
    }
}

fn quad(a: (i64, i64), b: (i64, i64), d: u64) -> QuadraticNumber {
    QuadraticNumber::new(rat(a.0, a.1), rat(b.0, b.1), d).expect("square-free radicand")
}

/// (-3 + 5*sqrt(17)) / 52, about 0.33876.
pub fn lambda() -> QuadraticNumber {
    quad((-3, 52), (5, 52), 17)
}

/// (5864893 + 27*sqrt(57)) / 16812976, about 0.348843.
pub fn beta() -> QuadraticNumber {
    quad((5864893, 16812976), (27, 16812976), 57)
}

/// (-1 + 2*sqrt(13)) / 17, about 0.36536.
pub fn case4_optimum() -> QuadraticNumber {
    quad((-1, 17), (2, 17), 13)
}

/// (-3 + sqrt(57)) / 8, the limit of the ratios `a_m / b_m`.
pub fn ratio_limit() -> QuadraticNumber {
    quad((-3, 8), (1, 8), 57)
}

pub(crate) fn render_scaled(value: &BigInt, scale: &BigInt, digits: usize) -> String {
    let sign = if value.is_negative() { "-" } else { "" };
    let (whole, frac) = value.abs().div_rem(scale);
    if digits == 0 {
        format!("{sign}{whole}")
    } else {
        format!(
            "{sign}{whole}.{:0>width$}",
            frac.to_string(),
            width = digits
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn compare_examples() {
        assert_eq!(rat_compare(&rat(1, 3), &rat(1, 3)), Ordering::Equal);
        assert_eq!(rat_compare(&rat(2, 5), &rat(5, 13)), Ordering::Greater);
        assert_eq!(rat_compare(&rat(9, 23), &rat(7, 19)), Ordering::Greater);
    }

    #[test]
    fn lowest_terms() {
        let x = rat(6, -8);
        assert_eq!(x.numer(), &BigInt::from(-3));
        assert_eq!(x.denom(), &BigInt::from(4));
    }

    #[test]
    fn rendering() {
        assert_eq!(format_rational(&rat(1, 3)), "1/3");
        assert_eq!(format_rational(&rat(4, 2)), "2");
        assert_eq!(decimal_approximation(&rat(1, 3), 6), "~0.333333");
        assert_eq!(decimal_string(&rat(2, 3), 4), "0.6667");
        assert_eq!(decimal_string(&rat(-2, 3), 2), "-0.67");
        assert_eq!(decimal_string(&rat(1, 2), 0), "1");
        assert_eq!(decimal_string(&rat(1, 40), 2), "0.03");
    }

    #[test]
    fn named_constants() {
        assert_eq!(lambda().decimal_string(5), "0.33876");
        assert_eq!(beta().decimal_string(6), "0.348843");
        assert_eq!(case4_optimum().decimal_string(5), "0.36536");
        assert_eq!(ratio_limit().decimal_string(4), "0.5687");
        let sum = quad_arith(&lambda(), &lambda(), QuadOp::Add).unwrap();
        assert_eq!(quad_compare(&sum, &lambda()).unwrap(), Ordering::Greater);
        let q = quad_arith(&sum, &lambda(), QuadOp::Div).unwrap();
        assert_eq!(q.to_rational(), Some(rat(2, 1)));
        let z = quad_arith(&lambda(), &lambda(), QuadOp::Sub).unwrap();
        assert!(quad_arith(&lambda(), &z, QuadOp::Div).is_err());
        assert!(quad_arith(&lambda(), &beta(), QuadOp::Mul).is_err());
        assert_eq!(
            quad_compare(&case4_optimum(), &lambda()).unwrap(),
            Ordering::Greater
        );
        assert_eq!(quad_compare(&lambda(), &beta()).unwrap(), Ordering::Less);
        let near = quad((-3, 52), (5, 52), 17)
            .try_add(&QuadraticNumber::rational(rat(1, 1 << 40)))
            .unwrap();
        assert_eq!(
            quad_compare(&near, &quad((0, 1), (1, 1), 2)).unwrap(),
            Ordering::Less
        );
        assert_eq!(lambda().fraction_string(), "(-3+5*sqrt(17))/52");
        assert_eq!(case4_optimum().fraction_string(), "(-1+2*sqrt(13))/17");
        assert_eq!(ratio_limit().fraction_string(), "(-3+sqrt(57))/8");
        assert_eq!(quad((0, 1), (-1, 2), 2).fraction_string(), "(-sqrt(2))/2");
        assert_eq!(quad((1, 1), (-3, 1), 5).fraction_string(), "1-3*sqrt(5)");
    }

    #[test]
    fn million_random_pairs_agree_with_cross_products() {
        let mut state = 0x9e37_79b9_7f4a_7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..1_000_000 {
            let p = (next() % 2_000_001) as i64 - 1_000_000;
            let q = (next() % 1_000_000) as i64 + 1;
            let r = (next() % 2_000_001) as i64 - 1_000_000;
            let s = (next() % 1_000_000) as i64 + 1;
            let expected = (p as i128 * s as i128).cmp(&(r as i128 * q as i128));
            assert_eq!(rat_compare(&rat(p, q), &rat(r, s)), expected);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(2000))]
        #[test]
        fn compare_matches_cross_products(
            p in -1_000_000i64..1_000_000, q in 1i64..1_000_000,
            r in -1_000_000i64..1_000_000, s in 1i64..1_000_000,
        ) {
            let lhs = BigInt::from(p) * BigInt::from(s);
            let rhs = BigInt::from(r) * BigInt::from(q);
            prop_assert_eq!(rat_compare(&rat(p, q), &rat(r, s)), lhs.cmp(&rhs));
        }
    }
}
