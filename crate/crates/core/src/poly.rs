//! Commutative polynomials in `n` variables with parameter coefficients,
//! the signed-permutation action on them, and exact divided differences.

use std::fmt;

use crate::error::{Error, Result};
use crate::lin::Lin;
use crate::scalars::{rat, Cyc, ParamPoly};
use crate::weyl::{SignedPerm, MAX_N};

/// Exponent vector of a monomial; entries past the rank are zero.
pub type Exps = [u8; MAX_N];

pub const ZERO_EXPS: Exps = [0; MAX_N];

pub fn unit_exps(i: usize) -> Exps {
    let mut e = ZERO_EXPS;
    e[i - 1] = 1;
    e
}

pub fn exps_degree(e: &Exps) -> usize {
    e.iter().map(|&a| a as usize).sum()
}

pub fn exps_add(a: &Exps, b: &Exps) -> Exps {
    let mut out = ZERO_EXPS;
    for k in 0..MAX_N {
        out[k] = a[k] + b[k];
    }
    out
}

/// Polynomial in `n` commuting variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    n: usize,
    terms: Lin<Exps>,
}

impl Poly {
    pub fn zero(n: usize) -> Self {
        Poly { n, terms: Lin::zero() }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(n, ZERO_EXPS, ParamPoly::one())
    }

    pub fn constant(n: usize, c: ParamPoly) -> Self {
        Self::monomial(n, ZERO_EXPS, c)
    }

    pub fn monomial(n: usize, e: Exps, c: ParamPoly) -> Self {
        Poly { n, terms: Lin::term(e, c) }
    }

    pub fn var(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, max: n });
        }
        Ok(Self::monomial(n, unit_exps(i), ParamPoly::one()))
    }

    pub fn from_lin(n: usize, terms: Lin<Exps>) -> Self {
        Poly { n, terms }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &Lin<Exps> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(exps_degree).max().unwrap_or(0)
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.n != o.n {
            return Err(Error::RankMismatch(self.n, o.n));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(Poly { n: self.n, terms: &self.terms + &o.terms })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(Poly { n: self.n, terms: &self.terms - &o.terms })
    }

    pub fn scale(&self, c: &ParamPoly) -> Self {
        Poly { n: self.n, terms: self.terms.scale(c) }
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let mut out = Lin::zero();
        for (a, ca) in self.terms.iter() {
            for (b, cb) in o.terms.iter() {
                out.add_term(exps_add(a, b), &(ca * cb));
            }
        }
        Ok(Poly { n: self.n, terms: out })
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = Self::one(self.n);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// `f^w`: the algebra automorphism `v_i ↦ σ v_j` for `w(e_i) = σ e_j`.
    pub fn act(&self, w: &SignedPerm) -> Result<Self> {
        if w.n() != self.n {
            return Err(Error::RankMismatch(w.n(), self.n));
        }
        Ok(Poly { n: self.n, terms: self.terms.map_keys(|e| w.act_monomial(e)) })
    }

    /// Exact quotient by `v_i + s v_k` (`s = ±1`).
    fn div_linear(&self, i: usize, k: usize, s: i8) -> Result<Self> {
        // Synthetic division in v_i with coefficients in the other variables.
        let top = self.terms.keys().map(|e| e[i - 1]).max().unwrap_or(0) as usize;
        let mut slices: Vec<Lin<Exps>> = vec![Lin::zero(); top + 1];
        for (e, c) in self.terms.iter() {
            let mut r = *e;
            let d = r[i - 1] as usize;
            r[i - 1] = 0;
            slices[d].add_term(r, c);
        }
        let shift = |p: &Lin<Exps>| -> Lin<Exps> {
            p.map_keys(|e| {
                let mut r = *e;
                r[k - 1] += 1;
                (s, r)
            })
        };
        let mut q: Vec<Lin<Exps>> = vec![Lin::zero(); top.max(1)];
        let mut carry = Lin::zero();
        for d in (1..=top).rev() {
            let qd = &slices[d] - &carry;
            carry = shift(&qd);
            q[d - 1] = qd;
        }
        let rem = &slices[0] - &carry;
        if !rem.is_zero() {
            let name = if s > 0 { format!("v{} + v{}", i, k) } else { format!("v{} - v{}", i, k) };
            return Err(Error::NotDivisible(name));
        }
        let mut out = Lin::zero();
        for (d, qd) in q.iter().enumerate() {
            for (e, c) in qd.iter() {
                let mut r = *e;
                r[i - 1] += d as u8;
                out.add_term(r, c);
            }
        }
        Ok(Poly { n: self.n, terms: out })
    }

    /// Exact quotient by `v_i`.
    fn div_var(&self, i: usize) -> Result<Self> {
        let mut out = Lin::zero();
        for (e, c) in self.terms.iter() {
            if e[i - 1] == 0 {
                return Err(Error::NotDivisible(format!("v{}", i)));
            }
            let mut r = *e;
            r[i - 1] -= 1;
            out.add_term(r, c);
        }
        Ok(Poly { n: self.n, terms: out })
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, "x")
    }
}

impl Poly {
    pub fn fmt_with(&self, f: &mut fmt::Formatter<'_>, name: &str) -> fmt::Result {
        let mut order: Vec<_> = self.terms.iter().collect();
        order.sort_by_key(|(e, _)| (exps_degree(e), std::cmp::Reverse(**e)));
        crate::text::write_sum(
            f,
            order.into_iter().map(|(e, c)| (c, crate::text::exps_text(name, &e[..self.n]).join("*"))),
        )
    }

    pub fn display_with<'a>(&'a self, name: &'a str) -> impl fmt::Display + 'a {
        struct D<'a>(&'a Poly, &'a str);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt_with(f, self.1)
            }
        }
        D(self, name)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiffKind {
    /// `(f - f^{s_ki}) / (v_i - v_k)`
    Minus,
    /// `(f - f^{sbar_ki}) / (v_i + v_k)`
    Plus,
    /// `(f - f^{τ_i}) / (2 v_i)`
    Tau,
}

/// Divided difference of `f`; `k` is ignored for [`DiffKind::Tau`].
pub fn ddiff(f: &Poly, i: usize, k: usize, kind: DiffKind) -> Result<Poly> {
    let n = f.n();
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, max: n });
    }
    if kind != DiffKind::Tau && (k == 0 || k > n || k == i) {
        return Err(Error::IndexOutOfRange { index: k, max: n });
    }
    match kind {
        DiffKind::Minus => {
            let g = f.sub(&f.act(&SignedPerm::transposition(n, i, k))?)?;
            g.div_linear(i, k, -1)
        }
        DiffKind::Plus => {
            let g = f.sub(&f.act(&SignedPerm::signed_transposition(n, i, k))?)?;
            g.div_linear(i, k, 1)
        }
        DiffKind::Tau => {
            let g = f.sub(&f.act(&SignedPerm::sign_change(n, i))?)?;
            Ok(g.div_var(i)?.scale(&ParamPoly::constant(Cyc::from_rational(rat(1, 2)))))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> Poly {
        Poly::var(n, i).unwrap()
    }

    #[test]
    fn divided_difference_examples() {
        let f = x(2, 1).pow(2).unwrap();
        assert_eq!(ddiff(&f, 1, 2, DiffKind::Minus).unwrap(), x(2, 1).add(&x(2, 2)).unwrap());
        assert_eq!(ddiff(&x(2, 1), 1, 2, DiffKind::Plus).unwrap(), Poly::one(2));
        let f = x(2, 1).pow(3).unwrap();
        assert_eq!(ddiff(&f, 1, 0, DiffKind::Tau).unwrap(), x(2, 1).pow(2).unwrap());
    }

    #[test]
    fn quotient_times_divisor_recovers_numerator() {
        let f = x(3, 1)
            .pow(3)
            .unwrap()
            .mul(&x(3, 2))
            .unwrap()
            .add(&x(3, 3).mul(&x(3, 2).pow(2).unwrap()).unwrap())
            .unwrap();
        let q = ddiff(&f, 2, 1, DiffKind::Plus).unwrap();
        let num = f.sub(&f.act(&SignedPerm::signed_transposition(3, 2, 1)).unwrap()).unwrap();
        assert_eq!(q.mul(&x(3, 2).add(&x(3, 1)).unwrap()).unwrap(), num);
    }

    #[test]
    fn non_divisible_is_reported() {
        let f = x(2, 1);
        assert!(matches!(f.div_linear(1, 2, -1), Err(Error::NotDivisible(_))));
    }

    #[test]
    fn display_order() {
        let f = x(2, 2).add(&Poly::one(2)).unwrap().add(&x(2, 1).pow(2).unwrap()).unwrap();
        assert_eq!(f.display_with("y").to_string(), "1 + y2 + y1^2");
    }
}
