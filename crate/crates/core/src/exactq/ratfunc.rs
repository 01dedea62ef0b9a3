use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Zero};
use serde::{Deserialize, Serialize};

use super::poly::{rat, Poly};
use crate::error::{Error, Result};

/// Exact rational function `num / den` in one variable `q` over the rationals.
///
/// Canonical form: `gcd(num, den) = 1` and `den` is monic. Zero is `0 / 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::invalid("rational function: zero denominator"));
        }
        Ok(RatFunc::normalized(num, den))
    }

    fn normalized(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        // Strip common powers of q first: cheap, and by far the most common factor.
        let shift = num.valuation().unwrap().min(den.valuation().unwrap());
        let (num, den) =
            if shift > 0 { (num.shift_down(shift), den.shift_down(shift)) } else { (num, den) };
        let g = if den.degree() == Some(0) { Poly::one() } else { num.gcd(&den) };
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let lead = den.leading().unwrap().recip();
        RatFunc { num: num.scale(&lead), den: den.scale(&lead) }
    }

    pub fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        RatFunc { num: Poly::one(), den: Poly::one() }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        RatFunc::from_poly(Poly::constant(rat(n)))
    }

    pub fn constant(c: BigRational) -> Self {
        RatFunc::from_poly(Poly::constant(c))
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        if k >= 0 {
            RatFunc::from_poly(Poly::q_pow(k as usize))
        } else {
            RatFunc { num: Poly::one(), den: Poly::q_pow((-k) as usize) }
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::invalid("rational function: inverse of zero"));
        }
        Ok(RatFunc::normalized(self.den.clone(), self.num.clone()))
    }

    /// Multiplies by `q^k` without a gcd computation.
    pub fn mul_q_pow(&self, k: i64) -> RatFunc {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        if k > 0 {
            let k = k as usize;
            let strip = self.den.valuation().unwrap().min(k);
            RatFunc { num: self.num.shift_up(k - strip), den: self.den.shift_down(strip) }
        } else {
            let k = (-k) as usize;
            let strip = self.num.valuation().unwrap().min(k);
            RatFunc { num: self.num.shift_down(strip), den: self.den.shift_up(k - strip) }
        }
    }

    pub fn scale(&self, c: &BigRational) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Value at a rational point; `None` at a pole.
    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(x);
        (!d.is_zero()).then(|| self.num.eval(x) / d)
    }

    /// The Adams operation `q ↦ q^k`.
    pub fn psi(&self, k: usize) -> RatFunc {
        if k == 1 {
            return self.clone();
        }
        // Substitution q -> q^k preserves coprimality and monicity.
        RatFunc { num: self.num.compose_power(k), den: self.den.compose_power(k) }
    }

    /// Returns the function as a polynomial with integer coefficients, if it is one.
    pub fn as_integer_polynomial(&self) -> Option<Poly> {
        (self.is_polynomial() && self.num.is_integral()).then(|| self.num.clone())
    }

    /// Taylor coefficients `c_0..=c_order` of `f(1 + s)` around `s = 0`.
    pub fn expand_at_one(&self, order: usize) -> Result<Vec<BigRational>> {
        let one = BigRational::one();
        let num = self.num.taylor_shift(&one);
        let den = self.den.taylor_shift(&one);
        let d0 = den.coeff(0);
        if d0.is_zero() {
            return Err(Error::invalid("expand_at_one: pole at q = 1"));
        }
        let d0_inv = d0.recip();
        let mut out: Vec<BigRational> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut acc = num.coeff(k);
            for j in 1..=k {
                let dj = den.coeff(j);
                if !dj.is_zero() {
                    acc -= &dj * &out[k - j];
                }
            }
            out.push(acc * &d0_inv);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "num": self.num.to_json(), "den": self.den.to_json() })
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl Serialize for RatFunc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Raw<'a> {
            num: &'a Poly,
            den: &'a Poly,
        }
        Raw { num: &self.num, den: &self.den }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatFunc {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            num: Poly,
            den: Poly,
        }
        let raw = Raw::deserialize(d)?;
        RatFunc::new(raw.num, raw.den).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc::normalized(&self.num + &rhs.num, self.den.clone());
        }
        if self.is_polynomial() {
            let n = &(&self.num * &rhs.den) + &rhs.num;
            return RatFunc::normalized(n, rhs.den.clone());
        }
        if rhs.is_polynomial() {
            let n = &self.num + &(&rhs.num * &self.den);
            return RatFunc::normalized(n, self.den.clone());
        }
        let g = self.den.gcd(&rhs.den);
        let a = self.den.div_rem(&g).0;
        let b = rhs.den.div_rem(&g).0;
        let n = &(&self.num * &b) + &(&rhs.num * &a);
        RatFunc::normalized(n, &(&a * &b) * &g)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.is_polynomial() && rhs.is_polynomial() {
            let lead = self.den.coeff(0) * rhs.den.coeff(0);
            return RatFunc { num: (&self.num * &rhs.num).scale(&lead.recip()), den: Poly::one() };
        }
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let (a, d) = if g1.is_one() {
            (self.num.clone(), rhs.den.clone())
        } else {
            (self.num.div_rem(&g1).0, rhs.den.div_rem(&g1).0)
        };
        let (c, b) = if g2.is_one() {
            (rhs.num.clone(), self.den.clone())
        } else {
            (rhs.num.div_rem(&g2).0, self.den.div_rem(&g2).0)
        };
        let num = &a * &c;
        let den = &b * &d;
        let lead = den.leading().unwrap().recip();
        RatFunc { num: num.scale(&lead), den: den.scale(&lead) }
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self * &rhs.inv().expect("division by the zero rational function")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl From<i64> for RatFunc {
    fn from(n: i64) -> Self {
        RatFunc::from_int(n)
    }
}

/// Evaluates at an integer point, returning an exact rational.
pub fn eval_at_int(f: &RatFunc, x: i64) -> Option<BigRational> {
    f.eval(&BigRational::from_integer(BigInt::from(x)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64(c)
    }

    #[test]
    fn normalization() {
        let f = RatFunc::new(p(&[-1, 0, 1]), p(&[-1, 1])).unwrap();
        assert_eq!(f.num(), &p(&[1, 1]));
        assert!(f.is_polynomial());
        let g = RatFunc::new(p(&[2]), p(&[0, -4])).unwrap();
        assert_eq!(g.den(), &p(&[0, 1]));
        assert_eq!(g.num(), &Poly::constant(BigRational::new((-1).into(), 2.into())));
        assert!(RatFunc::new(p(&[1]), Poly::zero()).is_err());
    }

    #[test]
    fn integer_polynomial_conversion() {
        let f = RatFunc::new(p(&[-1, 0, 1]), p(&[-1, 1])).unwrap();
        assert_eq!(f.as_integer_polynomial(), Some(p(&[1, 1])));
        let g = RatFunc::new(p(&[1]), p(&[-1, 1])).unwrap();
        assert_eq!(g.as_integer_polynomial(), None);
        let h = RatFunc::constant(BigRational::new(1.into(), 2.into()));
        assert_eq!(h.as_integer_polynomial(), None);
    }

    #[test]
    fn expansion_at_one() {
        let qm = |m: usize| RatFunc::from_poly(Poly::q_pow(m));
        for m in 0..6 {
            assert_eq!(qm(m).expand_at_one(1).unwrap(), vec![rat(1), rat(m as i64)]);
        }
        assert_eq!(RatFunc::from_poly(p(&[1, 1])).expand_at_one(0).unwrap(), vec![rat(2)]);
        let pole = RatFunc::new(p(&[1]), p(&[-1, 1])).unwrap();
        assert!(pole.expand_at_one(2).is_err());
        // 1/q around 1: 1 - s + s^2 - ...
        let inv = RatFunc::q_pow(-1).expand_at_one(3).unwrap();
        assert_eq!(inv, vec![rat(1), rat(-1), rat(1), rat(-1)]);
    }

    #[test]
    fn q_powers_and_psi() {
        let a = RatFunc::q_pow(-3);
        let b = RatFunc::q_pow(5);
        assert_eq!(&a * &b, RatFunc::q_pow(2));
        assert_eq!(a.mul_q_pow(5), RatFunc::q_pow(2));
        let f = RatFunc::new(p(&[1]), p(&[-1, 1])).unwrap();
        let g = f.psi(3);
        assert_eq!(g.den(), &p(&[-1, 0, 0, 1]));
    }
}
