//! Exact scalars: rationals, integers mod m, and cyclotomic field elements.

mod cyclo;
mod rational;
mod zmod;

pub use cyclo::{cyclo_root, cyclotomic_poly, euler_phi, CycloScalar};
pub use rational::Rational;
pub use zmod::ZmodScalar;

use crate::error::{Error, Result};
use crate::rings::RingValue;

/// Whether `s` has a two-sided inverse in its ring.
pub fn scalar_is_unit(s: &RingValue) -> bool {
    s.is_unit()
}

/// Two-sided inverse of a scalar; `NotAUnit` names the ring otherwise.
pub fn scalar_inverse(s: &RingValue) -> Result<RingValue> {
    match s {
        RingValue::Rational(_) | RingValue::Zmod(_) | RingValue::Cyclo(_) => s.inverse(),
        _ => Err(Error::Domain(format!("{} is not a scalar ring", s.ring()))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn remark_z8_units() {
        let two = RingValue::Zmod(ZmodScalar::new(8, 2).unwrap());
        let three = RingValue::Zmod(ZmodScalar::new(8, 3).unwrap());
        assert!(!scalar_is_unit(&two));
        assert!(scalar_is_unit(&three));
        assert_eq!(scalar_inverse(&three).unwrap(), three);
        match scalar_inverse(&two) {
            Err(Error::NotAUnit { ring }) => assert_eq!(ring, "Z/8"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rational_inverse() {
        let r = RingValue::Rational(Rational::new(2, 3).unwrap());
        assert_eq!(
            scalar_inverse(&r).unwrap(),
            RingValue::Rational(Rational::new(3, 2).unwrap())
        );
        assert!(scalar_is_unit(&RingValue::Rational(Rational::new(3, 7).unwrap())));
    }
}
