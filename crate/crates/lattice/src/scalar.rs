use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};
use std::fmt::{Debug, Display};

/// An exact field of characteristic zero.
pub trait Scalar: Clone + PartialEq + Num + Signed + FromPrimitive + ToPrimitive + Debug + Display {
    fn of(v: i64) -> Self {
        Self::from_i64(v).expect("scalar from i64")
    }

    /// The value as an integer, when it is one.
    fn as_integer(&self) -> Option<i64> {
        let t = self.to_i64()?;
        (Self::of(t) == *self).then_some(t)
    }
}

impl<T> Scalar for T where
    T: Clone + PartialEq + Num + Signed + FromPrimitive + ToPrimitive + Debug + Display
{
}
