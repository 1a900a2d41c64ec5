//! Scalar weights.
//!
//! Every algorithm in this crate compares costs exactly, so the weight type
//! must be totally ordered and closed under addition. Integer and rational
//! scalars qualify; floating point types do not.

use std::fmt::{Debug, Display};

use num_rational::Ratio;
use num_traits::Num;

/// An exact, totally ordered scalar usable as a vertex or edge weight.
pub trait Weight: Num + Clone + Ord + Debug + Display + Send + Sync + 'static {
    /// Exact value as `numerator / denominator` with `denominator > 0`.
    fn to_fraction(&self) -> (i128, i128);

    /// Builds a weight from a fraction, or `None` if the scalar type cannot
    /// represent it exactly.
    fn from_fraction(num: i64, den: i64) -> Option<Self>;

    fn from_int(v: i64) -> Self {
        Self::from_fraction(v, 1).expect("integers are representable")
    }
}

macro_rules! impl_weight_int {
    ($($t:ty),*) => {$(
        impl Weight for $t {
            fn to_fraction(&self) -> (i128, i128) {
                (*self as i128, 1)
            }

            fn from_fraction(num: i64, den: i64) -> Option<Self> {
                if den == 0 || num % den != 0 {
                    return None;
                }
                <$t>::try_from(num / den).ok()
            }
        }
    )*};
}

impl_weight_int!(i32, i64);

macro_rules! impl_weight_ratio {
    ($($t:ty),*) => {$(
        impl Weight for Ratio<$t> {
            fn to_fraction(&self) -> (i128, i128) {
                // Ratio keeps a positive denominator after reduction.
                (*self.numer() as i128, *self.denom() as i128)
            }

            fn from_fraction(num: i64, den: i64) -> Option<Self> {
                if den == 0 {
                    return None;
                }
                let num = <$t>::try_from(num).ok()?;
                let den = <$t>::try_from(den).ok()?;
                Some(Ratio::new(num, den))
            }
        }
    )*};
}

impl_weight_ratio!(i32, i64);

/// Exact sum of an iterator of weights.
pub fn total<'a, W: Weight>(items: impl IntoIterator<Item = &'a W>) -> W {
    items.into_iter().fold(W::zero(), |acc, w| acc + w.clone())
}

/// `Sum` is not implemented for `Ratio` by reference, so the crate uses this
/// helper instead of `Iterator::sum`.
pub fn sum_owned<W: Weight>(items: impl IntoIterator<Item = W>) -> W {
    items.into_iter().fold(W::zero(), |acc, w| acc + w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    #[test]
    fn rational_fraction_is_reduced() {
        let w = Rational::new(6, -4);
        assert_eq!(w.to_fraction(), (-3, 2));
        assert_eq!(Rational::from_fraction(2, 4), Some(Rational::new(1, 2)));
        assert_eq!(Rational::from_fraction(1, 0), None);
    }

    #[test]
    fn integers_reject_fractions() {
        assert_eq!(i64::from_fraction(3, 2), None);
        assert_eq!(i64::from_fraction(6, 3), Some(2));
        assert_eq!(i32::from_int(7), 7);
    }

    #[test]
    fn exact_addition() {
        let parts = [Rational::new(3, 2), Rational::new(1, 2)];
        assert_eq!(total(&parts), Rational::from_int(2));
        assert_eq!(sum_owned(Vec::<Rational>::new()), Rational::from_int(0));
    }
}
