use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::One;

use super::poly::{Poly, Rational};
use super::sym::Sym;
use crate::error::{Error, Result};

/// An element of the field of rational functions `Q(symbols)`.
///
/// Always stored in canonical form: numerator and denominator coprime, the
/// denominator's leading coefficient equal to one. Structural equality is
/// therefore mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ScalarRF {
    num: Poly,
    den: Poly,
}

impl ScalarRF {
    pub fn zero() -> Self {
        ScalarRF {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        ScalarRF::from_poly(Poly::one())
    }

    pub fn from_int(n: i64) -> Self {
        ScalarRF::from_poly(Poly::from_int(n))
    }

    pub fn from_rational(q: Rational) -> Self {
        ScalarRF::from_poly(Poly::constant(q))
    }

    pub fn sym(s: Sym) -> Self {
        ScalarRF::from_poly(Poly::var(s))
    }

    pub fn from_poly(p: Poly) -> Self {
        ScalarRF {
            num: p,
            den: Poly::one(),
        }
    }

    /// Builds `num / den` in canonical form.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return ScalarRF::zero();
        }
        if let Some(c) = den.constant_value() {
            if c.is_one() {
                return ScalarRF { num, den };
            }
            return ScalarRF {
                num: num.scale(&(Rational::one() / c)),
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        Self::normalize_den(num, den)
    }

    // num and den already coprime
    fn normalize_den(num: Poly, den: Poly) -> Self {
        let lc = den.leading().expect("nonzero denominator").1.clone();
        if lc.is_one() {
            ScalarRF { num, den }
        } else {
            let inv = Rational::one() / lc;
            ScalarRF {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.den.is_one() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize_den(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &ScalarRF) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        ScalarRF {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// Simultaneous substitution of symbols by scalars.
    pub fn subst(&self, bindings: &BTreeMap<Sym, ScalarRF>) -> Result<Self> {
        let num = subst_poly(&self.num, bindings);
        let den = subst_poly(&self.den, bindings);
        if den.is_zero() {
            return Err(Error::DenominatorVanishes(self.den.to_string()));
        }
        num.checked_div(&den)
    }

    /// Number of numerator terms; a cheap size measure for pivoting.
    pub fn weight(&self) -> (usize, usize) {
        (self.num.len(), self.den.len())
    }
}

fn subst_poly(p: &Poly, bindings: &BTreeMap<Sym, ScalarRF>) -> ScalarRF {
    let mut acc = ScalarRF::zero();
    for (m, c) in p.terms() {
        let mut term = ScalarRF::from_rational(c.clone());
        let mut kept = Vec::new();
        for (s, e) in m.powers() {
            match bindings.get(s) {
                Some(v) => term = &term * &v.pow(*e),
                None => kept.push((s.clone(), *e)),
            }
        }
        if !kept.is_empty() {
            let rest = Poly::monomial(
                super::poly::Monomial::from_powers(kept),
                Rational::one(),
            );
            term = &term * &ScalarRF::from_poly(rest);
        }
        acc = &acc + &term;
    }
    acc
}

impl From<i64> for ScalarRF {
    fn from(n: i64) -> Self {
        ScalarRF::from_int(n)
    }
}

impl From<Sym> for ScalarRF {
    fn from(s: Sym) -> Self {
        ScalarRF::sym(s)
    }
}

impl From<Poly> for ScalarRF {
    fn from(p: Poly) -> Self {
        ScalarRF::from_poly(p)
    }
}

impl From<Rational> for ScalarRF {
    fn from(q: Rational) -> Self {
        ScalarRF::from_rational(q)
    }
}

impl Default for ScalarRF {
    fn default() -> Self {
        ScalarRF::zero()
    }
}

impl Add for &ScalarRF {
    type Output = ScalarRF;
    fn add(self, rhs: &ScalarRF) -> ScalarRF {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return ScalarRF::from_poly(num);
            }
            return ScalarRF::reduce(num, self.den.clone());
        }
        // a/d + c stays coprime to d
        if rhs.den.is_one() {
            return ScalarRF {
                num: &self.num + &(&rhs.num * &self.den),
                den: self.den.clone(),
            };
        }
        if self.den.is_one() {
            return ScalarRF {
                num: &(&self.num * &rhs.den) + &rhs.num,
                den: rhs.den.clone(),
            };
        }
        let g = self.den.gcd(&rhs.den);
        let ls = rhs.den.div_exact(&g).expect("gcd divides");
        let rs = self.den.div_exact(&g).expect("gcd divides");
        let num = &(&self.num * &ls) + &(&rhs.num * &rs);
        let den = &self.den * &ls;
        ScalarRF::reduce(num, den)
    }
}

impl Sub for &ScalarRF {
    type Output = ScalarRF;
    fn sub(self, rhs: &ScalarRF) -> ScalarRF {
        self + &(-rhs)
    }
}

impl Mul for &ScalarRF {
    type Output = ScalarRF;
    fn mul(self, rhs: &ScalarRF) -> ScalarRF {
        if self.is_zero() || rhs.is_zero() {
            return ScalarRF::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return ScalarRF::from_poly(&self.num * &rhs.num);
        }
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let div = |p: &Poly, g: &Poly| {
            if g.is_one() {
                p.clone()
            } else {
                p.div_exact(g).expect("gcd divides")
            }
        };
        let num = &div(&self.num, &g1) * &div(&rhs.num, &g2);
        let den = &div(&self.den, &g2) * &div(&rhs.den, &g1);
        ScalarRF::normalize_den(num, den)
    }
}

impl Neg for &ScalarRF {
    type Output = ScalarRF;
    fn neg(self) -> ScalarRF {
        ScalarRF {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Add for ScalarRF {
    type Output = ScalarRF;
    fn add(self, rhs: ScalarRF) -> ScalarRF {
        &self + &rhs
    }
}

impl Sub for ScalarRF {
    type Output = ScalarRF;
    fn sub(self, rhs: ScalarRF) -> ScalarRF {
        &self - &rhs
    }
}

impl Mul for ScalarRF {
    type Output = ScalarRF;
    fn mul(self, rhs: ScalarRF) -> ScalarRF {
        &self * &rhs
    }
}

impl Neg for ScalarRF {
    type Output = ScalarRF;
    fn neg(self) -> ScalarRF {
        -&self
    }
}

impl fmt::Display for ScalarRF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.len() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if self.den.len() > 1 || !self.den.terms()[0].1.is_one() {
            write!(f, "/({})", self.den)
        } else {
            write!(f, "/{}", self.den)
        }
    }
}

impl fmt::Debug for ScalarRF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Shorthand for `name[i,j]` as a scalar.
pub fn sym2(name: &str, i: u32, j: u32) -> ScalarRF {
    ScalarRF::sym(Sym::indexed(name, &[i, j]))
}

/// Shorthand for `name[i]` as a scalar.
pub fn sym1(name: &str, i: u32) -> ScalarRF {
    ScalarRF::sym(Sym::indexed(name, &[i]))
}

pub fn int(n: i64) -> ScalarRF {
    ScalarRF::from_rational(Rational::from_integer(BigInt::from(n)))
}
