use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::cyclotomic::CycloField;

/// An element of ℚ(ζ_m).
///
/// Values that happen to be rational are normalized to order 1, so a rational
/// scalar combines freely with scalars of any order. Combining two irrational
/// scalars of different orders panics.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    order: u32,
    coeffs: Vec<BigRational>,
}

impl Scalar {
    pub fn zero() -> Self {
        Self::rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::rational(BigRational::one())
    }

    pub fn rational(q: BigRational) -> Self {
        Scalar { order: 1, coeffs: vec![q] }
    }

    pub fn int(n: i64) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num / den`; panics if `den == 0`.
    pub fn frac(num: i64, den: i64) -> Self {
        Self::rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// ζ_m^k.
    pub fn zeta(m: u32, k: i64) -> Self {
        let field = CycloField::get(m);
        Self::from_coeffs(m, field.power_of_generator(k))
    }

    /// Build from power-basis coefficients, reducing modulo Φ_m.
    pub fn from_coeffs(m: u32, coeffs: Vec<BigRational>) -> Self {
        let field = CycloField::get(m);
        let reduced = if coeffs.len() == field.degree() {
            coeffs
        } else {
            field.reduce(coeffs)
        };
        Scalar { order: m, coeffs: reduced }.normalized()
    }

    fn normalized(mut self) -> Self {
        if self.order != 1 && self.coeffs[1..].iter().all(Zero::is_zero) {
            self.coeffs.truncate(1);
            if self.coeffs.is_empty() {
                self.coeffs.push(BigRational::zero());
            }
            self.order = 1;
        }
        self
    }

    /// The cyclotomic order this value lives in (1 for rationals).
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        (self.order == 1).then(|| &self.coeffs[0])
    }

    pub fn is_zero(&self) -> bool {
        self.order == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.order == 1 && self.coeffs[0].is_one()
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        if self.order == 1 {
            return Some(Self::rational(self.coeffs[0].recip()));
        }
        let field = CycloField::get(self.order);
        field
            .inverse(&self.coeffs)
            .map(|c| Self::from_coeffs(self.order, c))
    }

    fn common_order(&self, other: &Scalar) -> u32 {
        match (self.order, other.order) {
            (a, b) if a == b => a,
            (1, b) => b,
            (a, 1) => a,
            (a, b) => panic!("{}", crate::Error::MixedOrders(a, b)),
        }
    }

    fn lifted(&self, m: u32) -> std::borrow::Cow<'_, [BigRational]> {
        if self.order == m {
            std::borrow::Cow::Borrowed(&self.coeffs)
        } else {
            let deg = CycloField::get(m).degree();
            let mut v = vec![BigRational::zero(); deg];
            v[0] = self.coeffs[0].clone();
            std::borrow::Cow::Owned(v)
        }
    }

    fn add_ref(&self, other: &Scalar) -> Scalar {
        if self.order == 1 && other.order == 1 {
            return Self::rational(&self.coeffs[0] + &other.coeffs[0]);
        }
        let m = self.common_order(other);
        let (a, b) = (self.lifted(m), other.lifted(m));
        let coeffs = a.iter().zip(b.iter()).map(|(x, y)| x + y).collect();
        Scalar { order: m, coeffs }.normalized()
    }

    fn sub_ref(&self, other: &Scalar) -> Scalar {
        if self.order == 1 && other.order == 1 {
            return Self::rational(&self.coeffs[0] - &other.coeffs[0]);
        }
        let m = self.common_order(other);
        let (a, b) = (self.lifted(m), other.lifted(m));
        let coeffs = a.iter().zip(b.iter()).map(|(x, y)| x - y).collect();
        Scalar { order: m, coeffs }.normalized()
    }

    fn mul_ref(&self, other: &Scalar) -> Scalar {
        if self.order == 1 && other.order == 1 {
            return Self::rational(&self.coeffs[0] * &other.coeffs[0]);
        }
        if self.order == 1 || other.order == 1 {
            let (q, x) = if self.order == 1 { (self, other) } else { (other, self) };
            let q = &q.coeffs[0];
            let coeffs = x.coeffs.iter().map(|c| c * q).collect();
            return Scalar { order: x.order, coeffs }.normalized();
        }
        let m = self.common_order(other);
        let field = CycloField::get(m);
        Scalar { order: m, coeffs: field.mul(&self.coeffs, &other.coeffs) }.normalized()
    }

    /// Parse the scalar text grammar with `z` standing for ζ_m.
    pub fn parse(s: &str, m: u32) -> crate::Result<Scalar> {
        super::parse::parse_scalar(s, m)
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(q: BigRational) -> Self {
        Scalar::rational(q)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$inner(rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$inner(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$inner(rhs)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$inner(&rhs)
            }
        }
    };
}

binop!(Add, add, add_ref);
binop!(Sub, sub, sub_ref);
binop!(Mul, mul, mul_ref);

impl Scalar {
    fn div_ref(&self, rhs: &Scalar) -> Scalar {
        self.mul_ref(&rhs.inv().expect("division by zero scalar"))
    }
}

binop!(Div, div, div_ref);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(mut self) -> Scalar {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -self.clone()
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        if self.order == 1 && rhs.order == 1 {
            self.coeffs[0] += &rhs.coeffs[0];
        } else {
            *self = self.add_ref(rhs);
        }
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self += &rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        if self.order == 1 && rhs.order == 1 {
            self.coeffs[0] -= &rhs.coeffs[0];
        } else {
            *self = self.sub_ref(rhs);
        }
    }
}

impl SubAssign for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        *self -= &rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = self.mul_ref(rhs);
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Scalar> for Scalar {
    fn sum<I: Iterator<Item = &'a Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            let body = match k {
                0 => fmt_rational(&mag),
                1 if mag.is_one() => "z".to_string(),
                _ if mag.is_one() => format!("z^{k}"),
                _ => format!("{}*z^{k}", fmt_rational(&mag)),
            };
            match (first, negative) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.order == 1 {
            write!(f, "{self}")
        } else {
            write!(f, "{self} (m={})", self.order)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_arithmetic() {
        let a = Scalar::frac(1, 2);
        let b = Scalar::frac(1, 3);
        assert_eq!(&a + &b, Scalar::frac(5, 6));
        assert_eq!(&a - &b, Scalar::frac(1, 6));
        assert_eq!(&a * &b, Scalar::frac(1, 6));
        assert_eq!(&a / &b, Scalar::frac(3, 2));
        assert_eq!(-a.clone(), Scalar::frac(-1, 2));
    }

    #[test]
    fn zeta4_inverse_is_minus_zeta() {
        let z = Scalar::zeta(4, 1);
        let inv = z.inv().unwrap();
        assert_eq!(inv, -Scalar::zeta(4, 1));
        assert!((&z * &inv).is_one());
    }

    #[test]
    fn sum_of_cube_roots_vanishes() {
        let s: Scalar = (0..3).map(|k| Scalar::zeta(3, k)).sum();
        assert!(s.is_zero());
        assert_eq!(s.order(), 1);
    }

    #[test]
    fn rational_promotes_into_any_order() {
        let z = Scalar::zeta(5, 2);
        let x = &z + &Scalar::int(3);
        assert_eq!(x.order(), 5);
        assert_eq!(&x - &Scalar::int(3), z);
    }

    #[test]
    #[should_panic(expected = "mixed cyclotomic orders")]
    fn mixing_irrational_orders_panics() {
        let _ = Scalar::zeta(3, 1) + Scalar::zeta(4, 1);
    }

    #[test]
    fn display_forms() {
        assert_eq!(Scalar::zero().to_string(), "0");
        assert_eq!(Scalar::frac(-7, 3).to_string(), "-7/3");
        assert_eq!(Scalar::zeta(4, 1).to_string(), "z");
        assert_eq!((-Scalar::zeta(4, 1)).to_string(), "-z");
        let x = Scalar::frac(1, 2) + Scalar::int(3) * Scalar::zeta(5, 2);
        assert_eq!(x.to_string(), "1/2 + 3*z^2");
        // ζ_3^2 = -1 - ζ_3
        assert_eq!(Scalar::zeta(3, 2).to_string(), "-1 - z");
    }

    #[test]
    fn zeta2_is_minus_one() {
        assert_eq!(Scalar::zeta(2, 1), Scalar::int(-1));
        assert_eq!(Scalar::zeta(1, 7), Scalar::one());
    }
}
