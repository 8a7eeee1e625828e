//! Expression parsing for the command line and for round-tripping printed
//! normal forms.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! sum     := product (("+" | "-") product)*
//! product := unary ("*" unary)*
//! unary   := "-" unary | "+" unary | power
//! power   := atom ("^" integer)?
//! atom    := number | identifier | "(" sum ")"
//! ```
//!
//! Juxtaposition is not a product. The literal `(x)` reads as `*`, so
//! tensor text such as `c1 (x) xi1` parses.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::cdaha::{Cdaha, CdahaElem, Daha, DahaElem};
use crate::clifford::{CliffordElem, Eps};
use crate::dahca::{Dahca, DahcaElem};
use crate::error::{Error, Result};
use crate::lin::Lin;
use crate::pbw::{Elem, Triangular};
use crate::poly::Poly;
use crate::scalars::{Cyc, Param, ParamPoly, Rational};
use crate::sdaha::{Sdaha, SdahaElem, TensorSdaha};
use crate::spin::CoverElem;
use crate::weyl::{SignedPerm, WeylType};

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u32 = 64;

/// Token set legal in an expression.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Vocab {
    /// `x_i`, `y_i`, `c_i`, `s_a`, `w[..]`
    Dahca,
    /// `xi_i`, `y_i`, `t_a`, `t[..]`
    Sdaha,
    /// `xt_i`, `yt_i`, `tt_a`, `z`, `wt[..]`
    Cdaha,
    /// `x_i`, `y_i`, `s_a`, `w[..]`
    Daha,
    /// `c_i`
    Clifford,
    /// polynomials in `x_i`
    PolyX,
    /// polynomials in `y_i`
    PolyY,
    /// `c_i` together with the sdaha tokens
    Tensor,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    /// `x_i`, `xi_i` or `xt_i`.
    Left(usize),
    /// `y_i` or `yt_i`.
    Right(usize),
    Cliff(usize),
    /// `s_a`, `t_a` or `tt_a`.
    Simple(usize),
    /// `w[..]`, `t[..]` or `wt[..]`.
    Group(SignedPerm),
    Z,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ExprKind {
    Number(Rational),
    Zeta,
    Param(Param),
    Atom(Atom),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

/// Syntax tree node with the byte offset where it starts.
#[derive(Clone, Debug, PartialEq)]
pub struct Expr {
    pub kind: ExprKind,
    pub offset: usize,
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Number(r) => write!(f, "{}", r),
            ExprKind::Zeta => write!(f, "z8"),
            ExprKind::Param(Param::T) => write!(f, "t"),
            ExprKind::Param(Param::U) => write!(f, "u"),
            ExprKind::Param(Param::V) => write!(f, "v"),
            ExprKind::Atom(a) => write!(f, "{:?}", a),
            ExprKind::Neg(a) => write!(f, "(-{})", a),
            ExprKind::Add(a, b) => write!(f, "({} + {})", a, b),
            ExprKind::Sub(a, b) => write!(f, "({} - {})", a, b),
            ExprKind::Mul(a, b) => write!(f, "({} * {})", a, b),
            ExprKind::Pow(a, e) => write!(f, "{}^{}", a, e),
        }
    }
}

fn err(offset: usize, msg: impl Into<String>) -> Error {
    Error::Parse { offset, msg: msg.into() }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rational),
    Ident { name: String, index: Option<usize>, window: Option<Vec<i32>> },
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>> {
    let b = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let ch = b[i];
        if ch.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        if src[i..].starts_with("(x)") {
            out.push((Tok::Star, start));
            i += 3;
            continue;
        }
        let single = match ch {
            b'+' => Some(Tok::Plus),
            b'-' => Some(Tok::Minus),
            b'*' => Some(Tok::Star),
            b'^' => Some(Tok::Caret),
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = single {
            out.push((t, start));
            i += 1;
            continue;
        }
        if ch.is_ascii_digit() {
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            if i + 1 < b.len() && b[i] == b'/' && b[i + 1].is_ascii_digit() {
                i += 1;
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
            }
            let r = Rational::from_str(&src[start..i]).map_err(|_| err(start, "bad number"))?;
            out.push((Tok::Num(r), start));
            continue;
        }
        if ch.is_ascii_alphabetic() {
            while i < b.len() && b[i].is_ascii_alphabetic() {
                i += 1;
            }
            let name = src[start..i].to_string();
            let ds = i;
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            let index =
                if i > ds { Some(src[ds..i].parse::<usize>().map_err(|_| err(ds, "bad index"))?) } else { None };
            let mut window = None;
            if index.is_none() && i < b.len() && b[i] == b'[' {
                let close = src[i..].find(']').ok_or_else(|| err(i, "unclosed `[`"))? + i;
                let entries = src[i + 1..close]
                    .split(',')
                    .map(|s| s.trim().parse::<i32>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| err(i, "bad window"))?;
                window = Some(entries);
                i = close + 1;
            }
            out.push((Tok::Ident { name, index, window }, start));
            continue;
        }
        return Err(err(start, format!("unexpected character `{}`", &src[start..].chars().next().unwrap())));
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    vocab: Vocab,
    wt: &'a WeylType,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(_, o)| *o).unwrap_or(self.end)
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut lhs = self.product()?;
        loop {
            let sub = match self.peek() {
                Some(Tok::Plus) => false,
                Some(Tok::Minus) => true,
                _ => return Ok(lhs),
            };
            self.pos += 1;
            let rhs = self.product()?;
            let offset = lhs.offset;
            let kind = if sub {
                ExprKind::Sub(Box::new(lhs), Box::new(rhs))
            } else {
                ExprKind::Add(Box::new(lhs), Box::new(rhs))
            };
            lhs = Expr { kind, offset };
        }
    }

    fn product(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            let rhs = self.unary()?;
            let offset = lhs.offset;
            lhs = Expr { kind: ExprKind::Mul(Box::new(lhs), Box::new(rhs)), offset };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        let offset = self.offset();
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(Expr { kind: ExprKind::Neg(Box::new(self.unary()?)), offset })
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let offset = self.offset();
        let e = match self.peek() {
            Some(Tok::Num(r)) if r.is_integer() => r.to_integer().to_string().parse::<u32>().ok(),
            _ => return Err(err(offset, "expected integer exponent")),
        };
        let e = e.filter(|&e| e <= MAX_EXPONENT).ok_or_else(|| err(offset, "exponent too large"))?;
        self.pos += 1;
        let start = base.offset;
        Ok(Expr { kind: ExprKind::Pow(Box::new(base), e), offset: start })
    }

    fn atom(&mut self) -> Result<Expr> {
        let offset = self.offset();
        let tok = self.peek().cloned().ok_or_else(|| err(offset, "unexpected end of input"))?;
        self.pos += 1;
        let kind = match tok {
            Tok::Num(r) => ExprKind::Number(r),
            Tok::LParen => {
                let inner = self.sum()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(err(self.offset(), "expected `)`"));
                }
                self.pos += 1;
                return Ok(Expr { kind: inner.kind, offset });
            }
            Tok::Ident { name, index, window } => self.ident(&name, index, window, offset)?,
            _ => return Err(err(offset, "expected a term")),
        };
        if let Some(Tok::Ident { .. } | Tok::Num(_) | Tok::LParen) = self.peek() {
            return Err(err(self.offset(), "missing `*` between factors"));
        }
        Ok(Expr { kind, offset })
    }

    fn ident(&self, name: &str, index: Option<usize>, window: Option<Vec<i32>>, offset: usize) -> Result<ExprKind> {
        match (name, index, &window) {
            ("z", Some(8), None) => return Ok(ExprKind::Zeta),
            ("u", None, None) => return Ok(ExprKind::Param(Param::U)),
            ("v", None, None) => return Ok(ExprKind::Param(Param::V)),
            ("t" | "tparam", None, None) => return Ok(ExprKind::Param(Param::T)),
            _ => {}
        }
        let n = self.wt.n;
        let gens = self.wt.num_generators();
        let (v, cdaha_z) = (self.vocab, self.vocab == Vocab::Cdaha);
        let role = match (v, name) {
            (Vocab::Dahca | Vocab::Daha | Vocab::PolyX, "x") => Role::Left,
            (Vocab::Sdaha | Vocab::Tensor, "xi") => Role::Left,
            (Vocab::Cdaha, "xt") => Role::Left,
            (Vocab::Dahca | Vocab::Daha | Vocab::Sdaha | Vocab::Tensor | Vocab::PolyY, "y") => Role::Right,
            (Vocab::Cdaha, "yt") => Role::Right,
            (Vocab::Dahca | Vocab::Clifford | Vocab::Tensor, "c") => Role::Cliff,
            (Vocab::Dahca | Vocab::Daha, "s") => Role::Simple,
            (Vocab::Sdaha | Vocab::Tensor, "t") => Role::Simple,
            (Vocab::Cdaha, "tt") => Role::Simple,
            (Vocab::Dahca | Vocab::Daha, "w") => Role::Group,
            (Vocab::Cdaha, "wt") => Role::Group,
            (_, "z") if cdaha_z => Role::Z,
            _ => return Err(err(offset, format!("unknown token `{}`", name))),
        };
        let role = if name == "t" && window.is_some() { Role::Group } else { role };
        let need_index = |max: usize| -> Result<usize> {
            if window.is_some() {
                return Err(err(offset, format!("`{}` takes an index, not a window", name)));
            }
            let i = index.ok_or_else(|| err(offset, format!("`{}` needs an index", name)))?;
            if i == 0 || i > max {
                return Err(err(offset, "index out of range"));
            }
            Ok(i)
        };
        let atom = match role {
            Role::Left => Atom::Left(need_index(n)?),
            Role::Right => Atom::Right(need_index(n)?),
            Role::Cliff => Atom::Cliff(need_index(n)?),
            Role::Simple => Atom::Simple(need_index(gens)?),
            Role::Group => {
                let win = match (&window, index) {
                    (Some(w), None) => w,
                    _ => return Err(err(offset, format!("`{}` needs a window `[..]`", name))),
                };
                if win.len() != n {
                    return Err(err(offset, format!("window must have {} entries", n)));
                }
                let w = SignedPerm::from_window(win).map_err(|e| err(offset, e.to_string()))?;
                if !self.wt.contains(&w) {
                    return Err(err(offset, format!("{} is not in {}", w, self.wt)));
                }
                Atom::Group(w)
            }
            Role::Z => {
                if index.is_some() || window.is_some() {
                    return Err(err(offset, "`z` takes no index"));
                }
                Atom::Z
            }
        };
        Ok(ExprKind::Atom(atom))
    }
}

enum Role {
    Left,
    Right,
    Cliff,
    Simple,
    Group,
    Z,
}

/// Parses `src` against the tokens of `vocab` at the given type.
pub fn parse(src: &str, vocab: Vocab, wt: &WeylType) -> Result<Expr> {
    let toks = lex(src)?;
    if toks.is_empty() {
        return Err(err(0, "empty expression"));
    }
    let mut p = Parser { toks, pos: 0, end: src.len(), vocab, wt };
    let e = p.sum()?;
    if p.pos < p.toks.len() {
        return Err(err(p.offset(), "unexpected token"));
    }
    Ok(e)
}

/// Ring operations used by [`eval`].
pub trait Ring: Sized {
    fn add(&self, o: &Self) -> Result<Self>;
    fn sub(&self, o: &Self) -> Result<Self>;
    fn mul(&self, o: &Self) -> Result<Self>;
}

macro_rules! ring {
    ($($t:ty),*) => {$(
        impl Ring for $t {
            fn add(&self, o: &Self) -> Result<Self> {
                <$t>::add(self, o)
            }
            fn sub(&self, o: &Self) -> Result<Self> {
                <$t>::sub(self, o)
            }
            fn mul(&self, o: &Self) -> Result<Self> {
                <$t>::mul(self, o)
            }
        }
    )*};
}

ring!(CliffordElem, Poly, TensorSdaha);

impl<T: Triangular> Ring for Elem<T> {
    fn add(&self, o: &Self) -> Result<Self> {
        Elem::add(self, o)
    }
    fn sub(&self, o: &Self) -> Result<Self> {
        Elem::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Result<Self> {
        Elem::mul(self, o)
    }
}

/// Evaluates `e` with scalars embedded by `scalar` and atoms by `atom`.
pub fn eval<R: Ring>(e: &Expr, scalar: &dyn Fn(ParamPoly) -> R, atom: &dyn Fn(&Atom) -> Result<R>) -> Result<R> {
    let go = |x: &Expr| eval(x, scalar, atom);
    match &e.kind {
        ExprKind::Number(r) => Ok(scalar(ParamPoly::constant(Cyc::from_rational(r.clone())))),
        ExprKind::Zeta => Ok(scalar(ParamPoly::constant(Cyc::zeta()))),
        ExprKind::Param(p) => Ok(scalar(ParamPoly::param(*p))),
        ExprKind::Atom(a) => atom(a).map_err(|er| err(e.offset, er.to_string())),
        ExprKind::Neg(a) => scalar(ParamPoly::zero()).sub(&go(a)?),
        ExprKind::Add(a, b) => go(a)?.add(&go(b)?),
        ExprKind::Sub(a, b) => go(a)?.sub(&go(b)?),
        ExprKind::Mul(a, b) => go(a)?.mul(&go(b)?),
        ExprKind::Pow(a, k) => {
            let base = go(a)?;
            let mut acc = scalar(ParamPoly::one());
            for _ in 0..*k {
                acc = acc.mul(&base)?;
            }
            Ok(acc)
        }
    }
}

fn unexpected<R>(a: &Atom) -> Result<R> {
    Err(err(0, format!("token {:?} is not part of this algebra", a)))
}

pub fn parse_dahca(src: &str, alg: &Arc<Dahca>) -> Result<DahcaElem> {
    let e = parse(src, Vocab::Dahca, &alg.tag().wt)?;
    eval(&e, &|c| DahcaElem::scalar(alg, c), &|a| match a {
        Atom::Left(i) => DahcaElem::x(alg, *i),
        Atom::Right(i) => DahcaElem::y(alg, *i),
        Atom::Cliff(i) => DahcaElem::c(alg, *i),
        Atom::Simple(k) => DahcaElem::simple(alg, *k),
        Atom::Group(w) => DahcaElem::group(alg, *w),
        other => unexpected(other),
    })
}

pub fn parse_sdaha(src: &str, alg: &Arc<Sdaha>) -> Result<SdahaElem> {
    let e = parse(src, Vocab::Sdaha, &alg.tag().wt)?;
    eval(&e, &|c| SdahaElem::scalar(alg, c), &|a| sdaha_atom(alg, a))
}

fn sdaha_atom(alg: &Arc<Sdaha>, a: &Atom) -> Result<SdahaElem> {
    match a {
        Atom::Left(i) => SdahaElem::xi(alg, *i),
        Atom::Right(i) => SdahaElem::y(alg, *i),
        Atom::Simple(k) => SdahaElem::t(alg, *k),
        Atom::Group(w) => SdahaElem::tw(alg, *w),
        other => unexpected(other),
    }
}

pub fn parse_cdaha(src: &str, alg: &Arc<Cdaha>) -> Result<CdahaElem> {
    let e = parse(src, Vocab::Cdaha, &alg.tag().wt)?;
    eval(&e, &|c| CdahaElem::scalar(alg, c), &|a| match a {
        Atom::Left(i) => CdahaElem::xt(alg, *i),
        Atom::Right(i) => CdahaElem::yt(alg, *i),
        Atom::Simple(k) => CdahaElem::tt(alg, *k),
        Atom::Group(w) => CdahaElem::cover(alg, CoverElem { z: false, w: *w }),
        Atom::Z => Ok(CdahaElem::z(alg)),
        other => unexpected(other),
    })
}

pub fn parse_daha(src: &str, alg: &Arc<Daha>) -> Result<DahaElem> {
    let e = parse(src, Vocab::Daha, &alg.tag().wt)?;
    eval(&e, &|c| DahaElem::scalar(alg, c), &|a| match a {
        Atom::Left(i) => DahaElem::x(alg, *i),
        Atom::Right(i) => DahaElem::y(alg, *i),
        Atom::Simple(k) => DahaElem::simple(alg, *k),
        Atom::Group(w) => DahaElem::group(alg, *w),
        other => unexpected(other),
    })
}

pub fn parse_clifford(src: &str, wt: &WeylType) -> Result<CliffordElem> {
    let n = wt.n;
    let e = parse(src, Vocab::Clifford, wt)?;
    eval(&e, &|c| CliffordElem::from_lin(n, Lin::term(Eps::ONE, c)), &|a| match a {
        Atom::Cliff(i) => CliffordElem::gen(n, *i),
        other => unexpected(other),
    })
}

/// Parses a polynomial in `x_i` (`var = "x"`) or `y_i` (`var = "y"`).
pub fn parse_poly(src: &str, var: &str, wt: &WeylType) -> Result<Poly> {
    let n = wt.n;
    let vocab = match var {
        "x" => Vocab::PolyX,
        "y" => Vocab::PolyY,
        other => return Err(err(0, format!("unknown polynomial variable `{}`", other))),
    };
    let e = parse(src, vocab, wt)?;
    eval(&e, &|c| Poly::constant(n, c), &|a| match a {
        Atom::Left(i) | Atom::Right(i) => Poly::var(n, *i),
        other => unexpected(other),
    })
}

/// Parses an element of `C_n (x) sdaha`.
pub fn parse_tensor(src: &str, alg: &Arc<Sdaha>) -> Result<TensorSdaha> {
    let e = parse(src, Vocab::Tensor, &alg.tag().wt)?;
    eval(&e, &|c| TensorSdaha::from_sdaha(&SdahaElem::scalar(alg, c)), &|a| match a {
        Atom::Cliff(i) => Ok(TensorSdaha::clifford(alg, Eps::single(*i))),
        other => sdaha_atom(alg, other).map(|s| TensorSdaha::from_sdaha(&s)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cdaha::cdaha;
    use crate::dahca::dahca;
    use crate::sdaha::sdaha;
    use crate::weyl::Family;

    fn a(n: usize) -> WeylType {
        WeylType::new(Family::A, n).unwrap()
    }

    #[test]
    fn commutator_text() {
        let d = dahca(a(2));
        let e = parse_dahca("y1*x1 - x1*y1", &d).unwrap();
        let expected = DahcaElem::y(&d, 1).unwrap().commutator(&DahcaElem::x(&d, 1).unwrap()).unwrap();
        assert_eq!(e, expected);
        assert_eq!(e.to_string(), "-u*w[2,1] + u*c1*c2*w[2,1]");
    }

    #[test]
    fn xi_anticommute() {
        let s = sdaha(a(3));
        assert!(parse_sdaha("xi1*xi2 + xi2*xi1", &s).unwrap().is_zero());
    }

    #[test]
    fn cdaha_skew() {
        let c = cdaha(a(2));
        assert_eq!(parse_cdaha("xt2*xt1", &c).unwrap().to_string(), "z*xt1*xt2");
    }

    #[test]
    fn index_errors_carry_offsets() {
        let d = dahca(a(3));
        let e = parse_dahca("x9", &d).unwrap_err();
        assert_eq!(e.to_string(), "index out of range at offset 0");
        let e = parse_dahca("x1 + y4", &d).unwrap_err();
        assert_eq!(e.to_string(), "index out of range at offset 5");
        let e = parse_dahca("x1 y1", &d).unwrap_err();
        assert!(e.to_string().ends_with("offset 3"), "{}", e);
        let e = parse_dahca("xi1", &d).unwrap_err();
        assert!(e.to_string().contains("unknown token"), "{}", e);
        assert!(parse_dahca("w[1,-2]", &d).is_err());
    }

    #[test]
    fn scalars_and_powers() {
        let d = dahca(a(2));
        let e = parse_dahca("(3/7*u + -z8^2)*x1^2 - 2", &d).unwrap();
        assert_eq!(e.to_string(), "-2 + (-z8^2 + 3/7*u)*x1^2");
        let tp = parse_dahca("tparam*x1 - t*x1", &d).unwrap();
        assert!(tp.is_zero());
    }

    #[test]
    fn tensor_text() {
        let s = sdaha(a(2));
        let t = parse_tensor("c1 (x) xi1", &s).unwrap();
        assert_eq!(t.to_string(), "c1 (x) xi1");
        assert_eq!(parse_tensor(&t.to_string(), &s).unwrap(), t);
    }
}
