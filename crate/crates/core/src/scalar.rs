//! The integer scalar abstraction and small exact vector helpers.
//!
//! Everything downstream is generic over [`Scalar`]; `num_bigint::BigInt` is
//! the default instantiation (see the crate-root aliases) and `i64`/`i128`
//! work for tests where coordinates are known to stay small.

use std::cmp::Ordering;
use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, Zero};

/// Exact integer scalar: an ordered ring with gcd, usable as both lattice
/// coordinate and rational numerator/denominator.
pub trait Scalar:
    Integer + Signed + Clone + Hash + Debug + Display + From<i64> + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: Integer + Signed + Clone + Hash + Debug + Display + From<i64> + Send + Sync + 'static
{
}

/// Exact rational over a [`Scalar`].
pub type RatOf<T> = Ratio<T>;

pub fn zeros<T: Scalar>(n: usize) -> Vec<T> {
    (0..n).map(|_| T::zero()).collect()
}

pub fn is_zero_vec<T: Scalar>(v: &[T]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    debug_assert_eq!(a.len(), b.len(), "dot product dimension mismatch");
    let mut acc = T::zero();
    for (x, y) in a.iter().zip(b.iter()) {
        acc = acc + x.clone() * y.clone();
    }
    acc
}

pub fn add<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

pub fn sub<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

pub fn neg<T: Scalar>(a: &[T]) -> Vec<T> {
    a.iter().map(|x| -x.clone()).collect()
}

pub fn scale<T: Scalar>(c: &T, a: &[T]) -> Vec<T> {
    a.iter().map(|x| c.clone() * x.clone()).collect()
}

/// ℓ∞ norm.
pub fn linf<T: Scalar>(a: &[T]) -> T {
    let mut m = T::zero();
    for x in a {
        let v = x.abs();
        if v > m {
            m = v;
        }
    }
    m
}

/// Divide out the gcd of the entries. Returns `None` for the zero vector.
pub fn primitive<T: Scalar>(v: &[T]) -> Option<Vec<T>> {
    let mut g = T::zero();
    for x in v {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return None;
    }
    Some(v.iter().map(|x| x.clone() / g.clone()).collect())
}

/// Lexicographic order on integer vectors; the canonical tie-breaker
/// throughout the crate.
pub fn lex_cmp<T: Scalar>(a: &[T], b: &[T]) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    a.len().cmp(&b.len())
}

/// (ℓ∞, lex) order used for canonical witness selection.
pub fn norm_lex_cmp<T: Scalar>(a: &[T], b: &[T]) -> Ordering {
    linf(a).cmp(&linf(b)).then_with(|| lex_cmp(a, b))
}

pub fn fmt_vec<T: Scalar>(v: &[T]) -> String {
    let inner: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", inner.join(", "))
}

pub fn rat_from_int<T: Scalar>(v: &[T]) -> Vec<RatOf<T>> {
    v.iter().map(|x| Ratio::from_integer(x.clone())).collect()
}

pub fn rat_dot<T: Scalar>(a: &[RatOf<T>], b: &[RatOf<T>]) -> RatOf<T> {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Ratio::from_integer(T::zero());
    for (x, y) in a.iter().zip(b.iter()) {
        acc = acc + x.clone() * y.clone();
    }
    acc
}

/// Clear denominators and divide by the content: the primitive integer vector
/// on the ray through a nonzero rational vector.
pub fn rat_primitive_direction<T: Scalar>(v: &[RatOf<T>]) -> Option<Vec<T>> {
    let mut lcm = T::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<T> = v
        .iter()
        .map(|x| x.numer().clone() * (lcm.clone() / x.denom().clone()))
        .collect();
    primitive(&ints)
}

pub fn rat_floor<T: Scalar>(x: &RatOf<T>) -> T {
    x.floor().to_integer()
}

pub fn rat_ceil<T: Scalar>(x: &RatOf<T>) -> T {
    x.ceil().to_integer()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Int;

    fn v(c: &[i64]) -> Vec<Int> {
        crate::int_vec(c)
    }

    #[test]
    fn primitive_divides_content() {
        assert_eq!(primitive(&v(&[4, -6])), Some(v(&[2, -3])));
        assert_eq!(primitive(&v(&[0, 0])), None);
        assert_eq!(primitive(&v(&[0, -5])), Some(v(&[0, -1])));
    }

    #[test]
    fn rational_direction_clears_denominators() {
        let q = vec![
            Ratio::new(Int::from(1), Int::from(2)),
            Ratio::new(Int::from(-3), Int::from(4)),
        ];
        assert_eq!(rat_primitive_direction(&q), Some(v(&[2, -3])));
    }

    #[test]
    fn norm_lex_orders_by_shell_then_lex() {
        let a = v(&[0, -1]);
        let b = v(&[-1, 0]);
        assert_eq!(norm_lex_cmp(&a, &b), Ordering::Greater);
        let c = v(&[2, 0]);
        assert_eq!(norm_lex_cmp(&a, &c), Ordering::Less);
    }
}
