//! Exact arithmetic in the cyclotomic field Q(z8) and in the parameter ring
//! Q(z8)[t, u, v].
//!
//! `z8` is a primitive 8th root of unity with `z8^4 = -1`. The field holds all
//! constants the algebras need: `sqrt(-1) = z8^2`, `sqrt(2) = z8 - z8^3` and
//! `sqrt(-2) = z8 + z8^3`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn rat_int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// An element `a0 + a1*z8 + a2*z8^2 + a3*z8^3` of Q(z8).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Cyc {
    coords: [Rational; 4],
}

impl Cyc {
    pub fn new(coords: [Rational; 4]) -> Self {
        Cyc { coords }
    }

    pub fn from_rational(r: Rational) -> Self {
        Cyc { coords: [r, Rational::zero(), Rational::zero(), Rational::zero()] }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat_int(n))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_rational(rat(n, d))
    }

    pub fn zeta() -> Self {
        Cyc { coords: [Rational::zero(), Rational::one(), Rational::zero(), Rational::zero()] }
    }

    /// `z8^k` for any integer `k`.
    pub fn zeta_pow(k: i64) -> Self {
        let k = k.rem_euclid(8) as usize;
        let mut coords = [Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero()];
        if k < 4 {
            coords[k] = Rational::one();
        } else {
            coords[k - 4] = -Rational::one();
        }
        Cyc { coords }
    }

    /// `sqrt(-1) = z8^2`.
    pub fn i() -> Self {
        Self::zeta_pow(2)
    }

    /// `sqrt(2) = z8 - z8^3`.
    pub fn sqrt2() -> Self {
        Cyc::zeta_pow(1) - Cyc::zeta_pow(3)
    }

    /// `sqrt(-2) = z8 + z8^3`.
    pub fn sqrt_m2() -> Self {
        Cyc::zeta_pow(1) + Cyc::zeta_pow(3)
    }

    pub fn coords(&self) -> &[Rational; 4] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in Q.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coords[1..].iter().all(Zero::is_zero) {
            Some(&self.coords[0])
        } else {
            None
        }
    }

    /// Galois automorphism `z8 -> z8^k` for odd `k`.
    pub fn galois(&self, k: i64) -> Self {
        let mut out = Cyc::default();
        for (j, a) in self.coords.iter().enumerate() {
            if !a.is_zero() {
                out = out + Cyc::zeta_pow(k * j as i64).scale(a);
            }
        }
        out
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Cyc { coords: [&self.coords[0] * r, &self.coords[1] * r, &self.coords[2] * r, &self.coords[3] * r] }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // a * galois5(a) lies in Q(i); multiplying by its complex conjugate lands in Q.
        let conj5 = self.galois(5);
        let b = self * &conj5;
        let b_bar = b.galois(3);
        let norm = &b * &b_bar;
        let n = norm.as_rational().expect("norm of Q(z8) element is rational").clone();
        Ok((&conj5 * &b_bar).scale(&(Rational::one() / n)))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Cyc::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn one() -> Self {
        Cyc::from_int(1)
    }

    pub fn zero() -> Self {
        Cyc::default()
    }
}

impl Add for Cyc {
    type Output = Cyc;
    fn add(self, o: Cyc) -> Cyc {
        &self + &o
    }
}

impl<'a> Add<&'a Cyc> for &'a Cyc {
    type Output = Cyc;
    fn add(self, o: &Cyc) -> Cyc {
        Cyc {
            coords: [
                &self.coords[0] + &o.coords[0],
                &self.coords[1] + &o.coords[1],
                &self.coords[2] + &o.coords[2],
                &self.coords[3] + &o.coords[3],
            ],
        }
    }
}

impl AddAssign<&Cyc> for Cyc {
    fn add_assign(&mut self, o: &Cyc) {
        for k in 0..4 {
            if !o.coords[k].is_zero() {
                self.coords[k] += &o.coords[k];
            }
        }
    }
}

impl Sub for Cyc {
    type Output = Cyc;
    fn sub(self, o: Cyc) -> Cyc {
        self + (-o)
    }
}

impl Neg for Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        let [a, b, c, d] = self.coords;
        Cyc { coords: [-a, -b, -c, -d] }
    }
}

impl Neg for &Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        -self.clone()
    }
}

impl<'a> Mul<&'a Cyc> for &'a Cyc {
    type Output = Cyc;
    fn mul(self, o: &Cyc) -> Cyc {
        // Fast path for the overwhelmingly common rational case.
        if self.coords[1..].iter().all(Zero::is_zero) {
            return o.scale(&self.coords[0]);
        }
        if o.coords[1..].iter().all(Zero::is_zero) {
            return self.scale(&o.coords[0]);
        }
        let mut out: [Rational; 4] = Default::default();
        for i in 0..4 {
            if self.coords[i].is_zero() {
                continue;
            }
            for j in 0..4 {
                if o.coords[j].is_zero() {
                    continue;
                }
                let p = &self.coords[i] * &o.coords[j];
                let k = i + j;
                if k < 4 {
                    out[k] += p;
                } else {
                    out[k - 4] -= p;
                }
            }
        }
        Cyc { coords: out }
    }
}

impl Mul for Cyc {
    type Output = Cyc;
    fn mul(self, o: Cyc) -> Cyc {
        &self * &o
    }
}

fn fmt_rational(r: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Cyc {
    /// `a0 + a1*z8 + a2*z8^2 + a3*z8^3`, zero terms omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let neg = a.is_negative();
            let abs = a.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = abs.is_one();
            if k == 0 || !unit {
                fmt_rational(&abs, f)?;
            }
            if k > 0 {
                if !unit {
                    write!(f, "*")?;
                }
                write!(f, "z8")?;
                if k > 1 {
                    write!(f, "^{}", k)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Exponents of `t`, `u`, `v` in a parameter monomial.
pub type ParamExp = [u16; 3];

/// A polynomial in the parameters `t, u, v` with coefficients in Q(z8).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ParamPoly {
    terms: BTreeMap<ParamExp, Cyc>,
}

/// Named parameter of the algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Param {
    T,
    U,
    V,
}

impl ParamPoly {
    pub fn zero() -> Self {
        ParamPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(Cyc::one())
    }

    pub fn constant(c: Cyc) -> Self {
        Self::monomial([0, 0, 0], c)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(Cyc::from_int(n))
    }

    pub fn monomial(e: ParamExp, c: Cyc) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        ParamPoly { terms }
    }

    pub fn param(p: Param) -> Self {
        let mut e = [0, 0, 0];
        e[p as usize] = 1;
        Self::monomial(e, Cyc::one())
    }

    pub fn t() -> Self {
        Self::param(Param::T)
    }

    pub fn u() -> Self {
        Self::param(Param::U)
    }

    pub fn v() -> Self {
        Self::param(Param::V)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&[0, 0, 0]).is_some_and(Cyc::is_one)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ParamExp, &Cyc)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant value, if the polynomial has no parameter dependence.
    pub fn as_constant(&self) -> Option<Cyc> {
        match self.terms.len() {
            0 => Some(Cyc::zero()),
            1 => self.terms.get(&[0, 0, 0]).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, e: ParamExp, c: &Cyc) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c.clone());
            }
        }
    }

    pub fn scale(&self, c: &Cyc) -> Self {
        if c.is_zero() {
            return ParamPoly::zero();
        }
        ParamPoly { terms: self.terms.iter().map(|(e, a)| (*e, a * c)).collect() }
    }

    pub fn scale_int(&self, n: i64) -> Self {
        match n {
            0 => ParamPoly::zero(),
            1 => self.clone(),
            -1 => -self,
            _ => self.scale(&Cyc::from_int(n)),
        }
    }

    /// Substitute concrete values for any of `t, u, v`; `None` keeps the
    /// parameter symbolic.
    pub fn specialize(&self, t: Option<&Cyc>, u: Option<&Cyc>, v: Option<&Cyc>) -> ParamPoly {
        let vals = [t, u, v];
        let mut out = ParamPoly::zero();
        for (e, c) in &self.terms {
            let mut coeff = c.clone();
            let mut ne = *e;
            for k in 0..3 {
                if let Some(val) = vals[k] {
                    coeff = &coeff * &val.pow(e[k] as u32);
                    ne[k] = 0;
                }
            }
            out.add_term(ne, &coeff);
        }
        out
    }

    pub fn max_degree(&self, p: Param) -> u16 {
        self.terms.keys().map(|e| e[p as usize]).max().unwrap_or(0)
    }
}

impl Add for &ParamPoly {
    type Output = ParamPoly;
    fn add(self, o: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        out += o;
        out
    }
}

impl Add for ParamPoly {
    type Output = ParamPoly;
    fn add(mut self, o: ParamPoly) -> ParamPoly {
        self += &o;
        self
    }
}

impl AddAssign<&ParamPoly> for ParamPoly {
    fn add_assign(&mut self, o: &ParamPoly) {
        for (e, c) in &o.terms {
            self.add_term(*e, c);
        }
    }
}

impl Sub for &ParamPoly {
    type Output = ParamPoly;
    fn sub(self, o: &ParamPoly) -> ParamPoly {
        self + &(-o)
    }
}

impl Sub for ParamPoly {
    type Output = ParamPoly;
    fn sub(self, o: ParamPoly) -> ParamPoly {
        &self - &o
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        ParamPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Neg for ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        -&self
    }
}

impl Mul for &ParamPoly {
    type Output = ParamPoly;
    fn mul(self, o: &ParamPoly) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e = [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]];
                out.add_term(e, &(c1 * c2));
            }
        }
        out
    }
}

impl Mul for ParamPoly {
    type Output = ParamPoly;
    fn mul(self, o: ParamPoly) -> ParamPoly {
        &self * &o
    }
}

impl From<Cyc> for ParamPoly {
    fn from(c: Cyc) -> Self {
        ParamPoly::constant(c)
    }
}

impl fmt::Display for ParamPoly {
    /// Monomials `t^i*u^j*v^k` in exponent order; non-rational coefficients
    /// are parenthesized.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut order: Vec<_> = self.terms.iter().collect();
        order.sort_by_key(|(e, _)| (e[0] + e[1] + e[2], std::cmp::Reverse(**e)));
        let mut first = true;
        for (e, c) in order {
            let (neg, body) = signed_cyc_text(c);
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let mono = param_monomial_text(e);
            match (body.as_str(), mono.is_empty()) {
                ("1", true) => write!(f, "1")?,
                ("1", false) => write!(f, "{}", mono)?,
                (b, true) => write!(f, "{}", b)?,
                (b, false) => write!(f, "{}*{}", b, mono)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Splits a scalar into a sign and a body: rationals give their absolute
/// value, other scalars are parenthesized (with a leading minus pulled out
/// when the leading coordinate is negative).
pub(crate) fn signed_cyc_text(c: &Cyc) -> (bool, String) {
    if let Some(r) = c.as_rational() {
        let neg = r.is_negative();
        let abs = r.abs();
        let s =
            if abs.denom().is_one() { format!("{}", abs.numer()) } else { format!("{}/{}", abs.numer(), abs.denom()) };
        return (neg, s);
    }
    let lead_neg = c.coords().iter().find(|a| !a.is_zero()).is_some_and(|a| a.is_negative());
    let shown = if lead_neg { -c } else { c.clone() };
    let nonzero = shown.coords().iter().filter(|a| !a.is_zero()).count();
    if nonzero == 1 {
        (lead_neg, format!("{}", shown))
    } else {
        (lead_neg, format!("({})", shown))
    }
}

pub(crate) fn param_monomial_text(e: &ParamExp) -> String {
    let names = ["t", "u", "v"];
    let mut parts = Vec::new();
    for k in 0..3 {
        match e[k] {
            0 => {}
            1 => parts.push(names[k].to_string()),
            d => parts.push(format!("{}^{}", names[k], d)),
        }
    }
    parts.join("*")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(k: i64) -> Cyc {
        Cyc::zeta_pow(k)
    }

    #[test]
    fn root_identities() {
        assert_eq!(&z(1) * &z(3), Cyc::from_int(-1));
        assert_eq!(&Cyc::sqrt_m2() * &Cyc::sqrt_m2(), Cyc::from_int(-2));
        assert_eq!(&Cyc::sqrt2() * &Cyc::sqrt2(), Cyc::from_int(2));
        assert_eq!(&Cyc::i() * &Cyc::i(), Cyc::from_int(-1));
        assert_eq!(&Cyc::i() * &Cyc::sqrt2(), Cyc::sqrt_m2());
    }

    #[test]
    fn inverse_of_sqrt2() {
        let inv = Cyc::sqrt2().inv().unwrap();
        assert_eq!(inv, Cyc::sqrt2().scale(&rat(1, 2)));
        assert!(matches!(Cyc::zero().inv(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn poly_examples() {
        let u = ParamPoly::u();
        let v = ParamPoly::v();
        assert_eq!(&(&u + &v) * &u, &(&u * &u) + &(&u * &v));
        let p = v.scale(&Cyc::sqrt2());
        assert!(p.specialize(None, None, Some(&Cyc::zero())).is_zero());
        let q = &ParamPoly::t() - &u;
        assert_eq!(q.specialize(Some(&Cyc::zero()), Some(&Cyc::one()), None), ParamPoly::from_int(-1));
    }

    #[test]
    fn display() {
        assert_eq!(Cyc::sqrt2().to_string(), "z8 - z8^3");
        assert_eq!(Cyc::from_ratio(-3, 2).to_string(), "-3/2");
        let p = &ParamPoly::u().scale(&Cyc::from_int(2)) - &ParamPoly::v();
        assert_eq!(p.to_string(), "2*u - v");
    }
}
