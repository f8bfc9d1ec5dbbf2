//! Exact rational arithmetic for degree thresholds.
//!
//! Every threshold comparison in the search (average degree windows, the
//! small/big degree split, matching and assignment guards) is done on
//! exact rationals so that boundary cases behave exactly as stated.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};

pub type Rational = Ratio<i128>;

pub fn int(v: impl Into<i128>) -> Rational {
    Rational::from_integer(v.into())
}

pub fn frac(numer: i128, denom: i128) -> Rational {
    Rational::new(numer, denom)
}

/// Largest integer `k` with `k <= r`.
pub fn floor(r: &Rational) -> i128 {
    r.numer().div_floor(r.denom())
}

/// Smallest integer `k` with `k >= r`.
pub fn ceil(r: &Rational) -> i128 {
    r.numer().div_ceil(r.denom())
}

/// Parses `p`, `p/q`, or a plain decimal such as `0.25`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: i128 = p.trim().parse().ok()?;
        let q: i128 = q.trim().parse().ok()?;
        if q == 0 {
            return None;
        }
        return Some(Rational::new(p, q));
    }
    if let Some((whole, fraction)) = s.split_once('.') {
        if fraction.is_empty() || !fraction.bytes().all(|b| b.is_ascii_digit()) || fraction.len() > 18 {
            return None;
        }
        let negative = whole.starts_with('-');
        let whole: i128 = if whole.is_empty() || whole == "-" { 0 } else { whole.parse().ok()? };
        let scale = 10i128.pow(fraction.len() as u32);
        let fraction: i128 = fraction.parse().ok()?;
        let magnitude = Rational::from_integer(whole.abs()) + Rational::new(fraction, scale);
        return Some(if negative { -magnitude } else { magnitude });
    }
    s.parse::<i128>().ok().map(Rational::from_integer)
}

/// Rational upper approximation of a non-negative real with the given denominator.
pub fn ceil_real(x: f64, denom: i128) -> Rational {
    Rational::new((x * denom as f64).ceil() as i128, denom)
}

/// Approximate value for display only.
pub fn to_f64(r: &Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

pub fn is_positive(r: &Rational) -> bool {
    *r > Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floors_and_ceilings() {
        assert_eq!(floor(&frac(7, 2)), 3);
        assert_eq!(ceil(&frac(7, 2)), 4);
        assert_eq!(floor(&frac(-7, 2)), -4);
        assert_eq!(floor(&int(5)), 5);
        assert_eq!(ceil(&int(5)), 5);
    }

    #[test]
    fn parses_rational_forms() {
        assert_eq!(parse_rational("2"), Some(int(2)));
        assert_eq!(parse_rational("3/4"), Some(frac(3, 4)));
        assert_eq!(parse_rational(" 6/4 "), Some(frac(3, 2)));
        assert_eq!(parse_rational("0.25"), Some(frac(1, 4)));
        assert_eq!(parse_rational("1.5"), Some(frac(3, 2)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
        assert_eq!(parse_rational("1."), None);
    }
}
