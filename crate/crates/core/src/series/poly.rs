//! Sparse polynomials in the marker variables `p`, `q`, `t` with big-integer
//! coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::counting::write_term;
use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    P,
    Q,
    T,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::P, Var::Q, Var::T];

    fn index(self) -> usize {
        self as usize
    }

    pub fn symbol(self) -> char {
        match self {
            Var::P => 'p',
            Var::Q => 'q',
            Var::T => 't',
        }
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "p" => Ok(Var::P),
            "q" => Ok(Var::Q),
            "t" => Ok(Var::T),
            other => Err(Error::Parse(format!("unknown variable {other:?}"))),
        }
    }
}

/// Exponents of `(p, q, t)`.
pub type Exponents = [u32; 3];

/// Invariant: no stored coefficient is zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Exponents, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, [0, 0, 0])
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; 3];
        e[v.index()] = 1;
        Self::monomial(1, e)
    }

    pub fn monomial(c: impl Into<BigInt>, exponents: Exponents) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponents, c);
        }
        Self { terms }
    }

    /// `v^k`.
    pub fn var_pow(v: Var, k: u32) -> Self {
        let mut e = [0; 3];
        e[v.index()] = k;
        Self::monomial(1, e)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exponents: Exponents) -> BigInt {
        self.terms.get(&exponents).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff([0, 0, 0])
    }

    /// `Some(c)` when the polynomial is the constant `c`.
    pub fn as_integer(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&[0, 0, 0]).cloned(),
            _ => None,
        }
    }

    fn add_term(&mut self, exponents: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exponents) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Substitute an integer for one variable.
    pub fn eval_var(&self, v: Var, value: &BigInt) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut reduced = *e;
            let k = std::mem::replace(&mut reduced[v.index()], 0);
            out.add_term(reduced, c * num_traits::pow(value.clone(), k as usize));
        }
        out
    }

    /// Replace variable `from` by variable `to`.
    pub fn rename(&self, from: Var, to: Var) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut moved = *e;
            let k = std::mem::replace(&mut moved[from.index()], 0);
            moved[to.index()] += k;
            out.add_term(moved, c.clone());
        }
        out
    }

    /// Partial derivative.
    pub fn derivative(&self, v: Var) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let k = e[v.index()];
            if k > 0 {
                let mut lowered = *e;
                lowered[v.index()] -= 1;
                out.add_term(lowered, c * BigInt::from(k));
            }
        }
        out
    }
}

impl From<i64> for Polynomial {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for Polynomial {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]];
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

fn monomial_text(e: &Exponents) -> String {
    let mut factors = Vec::new();
    for v in Var::ALL {
        match e[v.index()] {
            0 => {}
            1 => factors.push(v.symbol().to_string()),
            k => factors.push(format!("{}^{k}", v.symbol())),
        }
    }
    factors.join("*")
}

impl fmt::Display for Polynomial {
    /// Terms by ascending total degree, then by exponents of `p`, `q`, `t`:
    /// `5+5*p+4*p^2+p^3+p^4`, `p*q^2+p^2*q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by_key(|(e, _)| (e.iter().sum::<u32>(), **e));
        for (i, (e, c)) in ordered.into_iter().enumerate() {
            write_term(f, c, &monomial_text(e), i == 0)?;
        }
        Ok(())
    }
}

impl Polynomial {
    /// True when every coefficient is nonnegative.
    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn is_one(&self) -> bool {
        self.as_integer().is_some_and(|c| c.is_one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Polynomial {
        Polynomial::var(Var::P)
    }

    fn q() -> Polynomial {
        Polynomial::var(Var::Q)
    }

    #[test]
    fn arithmetic_and_display() {
        let one = Polynomial::one();
        let f = &(&one + &p()) * &(&one - &p());
        assert_eq!(f.to_string(), "1-p^2");
        let g = &(&p() * &q().pow(2)) + &(&p().pow(2) * &q());
        assert_eq!(g.to_string(), "p*q^2+p^2*q");
        assert!((&f - &f).is_zero());
        assert_eq!(Polynomial::constant(-3).to_string(), "-3");
        assert_eq!((-&g).to_string(), "-p*q^2-p^2*q");
    }

    #[test]
    fn substitution_and_derivative() {
        let f = &Polynomial::constant(5) + &(&p().pow(3) * &q());
        assert_eq!(f.eval_var(Var::P, &BigInt::from(2)).to_string(), "5+8*q");
        assert_eq!(f.rename(Var::P, Var::T).to_string(), "5+q*t^3");
        assert_eq!(f.derivative(Var::P).to_string(), "3*p^2*q");
        assert_eq!(
            f.eval_var(Var::P, &1.into())
                .eval_var(Var::Q, &1.into())
                .as_integer(),
            Some(6.into())
        );
        assert_eq!(f.as_integer(), None);
        assert_eq!(Polynomial::zero().as_integer(), Some(0.into()));
    }
}
