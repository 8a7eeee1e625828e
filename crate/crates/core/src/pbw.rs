//! Straightening engine shared by the four triangular algebras.
//!
//! Every algebra here has a PBW basis `L^a M R^b`: a left family of
//! variables (`x`, `ξ` or `x~`), a finite middle part (`K`, `CW^-`, `W~` or
//! `W`) and a right family of commuting variables (`y`). A [`Triangular`]
//! implementation supplies the relations between adjacent layers; the
//! engine only ever rewrites `y_i L_j = L_j y_i + [y_i, L_j]`.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::sync::{Arc, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lin::Lin;
use crate::poly::{exps_add, exps_degree, unit_exps, Exps, ZERO_EXPS};
use crate::scalars::ParamPoly;
use crate::weyl::WeylType;

pub const DEFAULT_MAX_DEGREE: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgebraKind {
    Dahca,
    Sdaha,
    Cdaha,
    Daha,
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            AlgebraKind::Dahca => "dahca",
            AlgebraKind::Sdaha => "sdaha",
            AlgebraKind::Cdaha => "cdaha",
            AlgebraKind::Daha => "daha",
        };
        write!(f, "{}", s)
    }
}

impl std::str::FromStr for AlgebraKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dahca" => Ok(AlgebraKind::Dahca),
            "sdaha" => Ok(AlgebraKind::Sdaha),
            "cdaha" => Ok(AlgebraKind::Cdaha),
            "daha" => Ok(AlgebraKind::Daha),
            other => Err(Error::Unavailable(format!("algebra `{}`", other), "dahca/sdaha/cdaha/daha".into())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlgebraTag {
    pub kind: AlgebraKind,
    pub wt: WeylType,
}

impl fmt::Display for AlgebraTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.kind, self.wt)
    }
}

/// PBW monomial `L^x mid R^y`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Mono<M> {
    pub x: Exps,
    pub mid: M,
    pub y: Exps,
}

impl<M> Mono<M> {
    pub fn degree(&self) -> usize {
        exps_degree(&self.x) + exps_degree(&self.y)
    }
}

/// Relations between the layers of a triangular algebra.
pub trait Triangular: Send + Sync + 'static {
    type Mid: Clone + Ord + Hash + fmt::Debug + Send + Sync + 'static;

    fn tag(&self) -> AlgebraTag;
    fn mid_one(&self) -> Self::Mid;
    /// `a b = sign * m`.
    fn mid_mul(&self, a: &Self::Mid, b: &Self::Mid) -> (i8, Self::Mid);
    /// Multiplication by the central `z`; only the covering algebra has one.
    fn mid_z(&self, m: &Self::Mid) -> Self::Mid {
        let _ = m;
        unreachable!("algebra has no central z")
    }
    /// `L^a L^b = sign * z^flip * L^c`.
    fn left_mul(&self, a: &Exps, b: &Exps) -> (i8, bool, Exps);
    /// `m L^a = sign * z^flip * L^c m`.
    fn mid_past_left(&self, m: &Self::Mid, a: &Exps) -> (i8, bool, Exps);
    /// `R^b m = sign * m R^c`.
    fn right_past_mid(&self, b: &Exps, m: &Self::Mid) -> (i8, Exps);
    /// `[R_i, L_j] = R_i L_j - L_j R_i`, an element of the middle part.
    fn bracket(&self, i: usize, j: usize) -> &Lin<Self::Mid>;
    /// Text factors of a middle basis element (empty for the unit).
    fn mid_text(&self, m: &Self::Mid) -> Vec<String>;
    /// Central factors printed ahead of the left variables.
    fn lead_text(&self, _m: &Self::Mid) -> Vec<String> {
        Vec::new()
    }
    fn left_name(&self) -> &'static str;
    fn right_name(&self) -> &'static str;
    /// Z/2 degree of a middle basis element.
    fn mid_parity(&self, m: &Self::Mid) -> u32;
    /// Whether the left variables are odd.
    fn left_odd(&self) -> bool;
}

/// Number of transpositions needed to sort `L^a L^b` into ascending order,
/// mod 2, for anticommuting-type left variables.
pub(crate) fn skew_swaps(a: &Exps, b: &Exps) -> u32 {
    let mut count = 0u32;
    let mut above = 0u32;
    for k in (0..a.len()).rev() {
        count += b[k] as u32 * above;
        above += a[k] as u32;
    }
    count & 1
}

/// Transports `L^a` through a middle element acting on single variables by
/// `L_j ↦ sign * z^flip * L_{j'}`; returns the accumulated sign, the z flip
/// from the variable images, the reordering parity, and the new exponents.
pub(crate) fn transport_skew(a: &Exps, n: usize, image: impl Fn(usize) -> (i8, bool, usize)) -> (i8, bool, u32, Exps) {
    let mut sign = 1i8;
    let mut flip = false;
    let mut blocks: Vec<(usize, u8)> = Vec::with_capacity(n);
    for j in 1..=n {
        let e = a[j - 1];
        if e == 0 {
            continue;
        }
        let (s, z, jj) = image(j);
        if e % 2 == 1 {
            if s < 0 {
                sign = -sign;
            }
            flip ^= z;
        }
        blocks.push((jj, e));
    }
    let mut swaps = 0u32;
    for p in 0..blocks.len() {
        for q in p + 1..blocks.len() {
            if blocks[p].0 > blocks[q].0 {
                swaps += blocks[p].1 as u32 * blocks[q].1 as u32;
            }
        }
    }
    let mut out = ZERO_EXPS;
    for (j, e) in blocks {
        out[j - 1] = e;
    }
    (sign, flip, swaps & 1, out)
}

type Memo<M> = RwLock<HashMap<(Exps, Exps), Arc<Lin<Mono<M>>>>>;

/// A triangular algebra together with its straightening memo.
pub struct Pbw<T: Triangular> {
    spec: T,
    memo: Memo<T::Mid>,
    max_degree: usize,
}

impl<T: Triangular> fmt::Debug for Pbw<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pbw({}, max degree {})", self.spec.tag(), self.max_degree)
    }
}

impl<T: Triangular> Pbw<T> {
    pub fn new(spec: T, max_degree: usize) -> Arc<Self> {
        Arc::new(Pbw { spec, memo: RwLock::new(HashMap::new()), max_degree })
    }

    pub fn spec(&self) -> &T {
        &self.spec
    }

    pub fn tag(&self) -> AlgebraTag {
        self.spec.tag()
    }

    pub fn n(&self) -> usize {
        self.spec.tag().wt.n
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// Number of memoized `R^b L^a` normal forms.
    pub fn memo_len(&self) -> usize {
        self.memo.read().unwrap().len()
    }

    fn one_mono(&self, x: Exps, y: Exps) -> Mono<T::Mid> {
        Mono { x, mid: self.spec.mid_one(), y }
    }

    /// Product of two basis monomials in normal form.
    pub fn mul_mono(&self, m1: &Mono<T::Mid>, m2: &Mono<T::Mid>) -> Result<Lin<Mono<T::Mid>>> {
        let degree = m1.degree() + m2.degree();
        if degree > self.max_degree {
            return Err(Error::DegreeCap { degree, cap: self.max_degree });
        }
        let spec = &self.spec;
        let swapped: Arc<Lin<Mono<T::Mid>>> = if m1.y == ZERO_EXPS || m2.x == ZERO_EXPS {
            Arc::new(Lin::basis(self.one_mono(m2.x, m1.y)))
        } else {
            self.right_left(&m1.y, &m2.x)?
        };
        let mut out = Lin::zero();
        for (q, c) in swapped.iter() {
            let (s1, z1, xa) = spec.mid_past_left(&m1.mid, &q.x);
            let (s2, z2, xx) = spec.left_mul(&m1.x, &xa);
            let (s3, mid) = spec.mid_mul(&m1.mid, &q.mid);
            let (s4, yb) = spec.right_past_mid(&q.y, &m2.mid);
            let (s5, mut mid) = spec.mid_mul(&mid, &m2.mid);
            if z1 ^ z2 {
                mid = spec.mid_z(&mid);
            }
            out.add_signed(Mono { x: xx, mid, y: exps_add(&yb, &m2.y) }, c, s1 * s2 * s3 * s4 * s5);
        }
        Ok(out)
    }

    /// Normal form of `R^b L^a`.
    fn right_left(&self, b: &Exps, a: &Exps) -> Result<Arc<Lin<Mono<T::Mid>>>> {
        if let Some(hit) = self.memo.read().unwrap().get(&(*b, *a)) {
            return Ok(hit.clone());
        }
        let n = self.n();
        let mut out = Lin::zero();
        if exps_degree(b) == 1 {
            let i = b.iter().position(|&e| e > 0).unwrap() + 1;
            let j = a.iter().position(|&e| e > 0).unwrap() + 1;
            let mut rest = *a;
            rest[j - 1] -= 1;
            let xj = self.one_mono(unit_exps(j), ZERO_EXPS);
            // R_i L_j L^rest = L_j (R_i L^rest) + [R_i, L_j] L^rest
            if rest == ZERO_EXPS {
                out.add_term(self.one_mono(unit_exps(j), *b), &ParamPoly::one());
            } else {
                for (t, c) in self.right_left(b, &rest)?.iter() {
                    for (r, d) in self.mul_mono(&xj, t)?.iter() {
                        out.add_term(r.clone(), &(c * d));
                    }
                }
            }
            let tail = self.one_mono(rest, ZERO_EXPS);
            for (m, c) in self.spec.bracket(i, j).iter() {
                let head = Mono { x: ZERO_EXPS, mid: m.clone(), y: ZERO_EXPS };
                for (r, d) in self.mul_mono(&head, &tail)?.iter() {
                    out.add_term(r.clone(), &(c * d));
                }
            }
        } else {
            let i = (1..=n).rev().find(|&k| b[k - 1] > 0).unwrap();
            let mut rest = *b;
            rest[i - 1] -= 1;
            let head = self.one_mono(ZERO_EXPS, rest);
            for (t, c) in self.right_left(&unit_exps(i), a)?.iter() {
                for (r, d) in self.mul_mono(&head, t)?.iter() {
                    out.add_term(r.clone(), &(c * d));
                }
            }
        }
        let out = Arc::new(out);
        self.memo.write().unwrap().insert((*b, *a), out.clone());
        Ok(out)
    }

    pub fn mul_lin(&self, a: &Lin<Mono<T::Mid>>, b: &Lin<Mono<T::Mid>>) -> Result<Lin<Mono<T::Mid>>> {
        let mut out = Lin::zero();
        for (m1, c1) in a.iter() {
            for (m2, c2) in b.iter() {
                let c = c1 * c2;
                for (r, d) in self.mul_mono(m1, m2)?.iter() {
                    out.add_term(r.clone(), &(&c * d));
                }
            }
        }
        Ok(out)
    }

    pub fn mono_text(&self, m: &Mono<T::Mid>) -> String {
        let n = self.n();
        let mut parts = self.spec.lead_text(&m.mid);
        parts.extend(crate::text::exps_text(self.spec.left_name(), &m.x[..n]));
        parts.extend(self.spec.mid_text(&m.mid));
        parts.extend(crate::text::exps_text(self.spec.right_name(), &m.y[..n]));
        parts.join("*")
    }

    /// Z/2 degree of a basis monomial.
    pub fn mono_parity(&self, m: &Mono<T::Mid>) -> u32 {
        let left = if self.spec.left_odd() { exps_degree(&m.x) as u32 } else { 0 };
        (left + self.spec.mid_parity(&m.mid)) & 1
    }
}

/// Element of a triangular algebra: a linear combination of PBW monomials.
pub struct Elem<T: Triangular> {
    alg: Arc<Pbw<T>>,
    terms: Lin<Mono<T::Mid>>,
}

impl<T: Triangular> Clone for Elem<T> {
    fn clone(&self) -> Self {
        Elem { alg: self.alg.clone(), terms: self.terms.clone() }
    }
}

impl<T: Triangular> PartialEq for Elem<T> {
    fn eq(&self, o: &Self) -> bool {
        self.alg.tag() == o.alg.tag() && self.terms == o.terms
    }
}

impl<T: Triangular> Eq for Elem<T> {}

impl<T: Triangular> fmt::Debug for Elem<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self, self.alg.tag())
    }
}

impl<T: Triangular> fmt::Display for Elem<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::text::write_sum(f, self.sorted_terms().into_iter().map(|(m, c)| (c, self.alg.mono_text(m))))
    }
}

impl<T: Triangular> Elem<T> {
    /// Terms in print order: degree, then lexicographic.
    pub fn sorted_terms(&self) -> Vec<(&Mono<T::Mid>, &ParamPoly)> {
        let mut order: Vec<_> = self.terms.iter().collect();
        order.sort_by(|(a, _), (b, _)| {
            (a.degree(), std::cmp::Reverse(a.x), &a.mid, std::cmp::Reverse(a.y)).cmp(&(
                b.degree(),
                std::cmp::Reverse(b.x),
                &b.mid,
                std::cmp::Reverse(b.y),
            ))
        });
        order
    }

    /// `{"algebra", "text", "terms": [{"coeff", "x", "mid", "y", "monomial"}]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let n = self.alg.n();
        let terms: Vec<serde_json::Value> = self
            .sorted_terms()
            .into_iter()
            .map(|(m, c)| {
                let mut mid = self.alg.spec.lead_text(&m.mid);
                mid.extend(self.alg.spec.mid_text(&m.mid));
                serde_json::json!({
                    "coeff": c.to_string(),
                    "x": &m.x[..n],
                    "mid": mid,
                    "y": &m.y[..n],
                    "monomial": self.alg.mono_text(m),
                })
            })
            .collect();
        serde_json::json!({
            "algebra": self.alg.tag().to_string(),
            "text": self.to_string(),
            "terms": terms,
        })
    }
}

impl<T: Triangular> Elem<T> {
    pub fn zero(alg: &Arc<Pbw<T>>) -> Self {
        Elem { alg: alg.clone(), terms: Lin::zero() }
    }

    pub fn one(alg: &Arc<Pbw<T>>) -> Self {
        Self::from_mono(alg, alg.one_mono(ZERO_EXPS, ZERO_EXPS))
    }

    pub fn scalar(alg: &Arc<Pbw<T>>, c: ParamPoly) -> Self {
        Self::one(alg).scale(&c)
    }

    pub fn from_mono(alg: &Arc<Pbw<T>>, m: Mono<T::Mid>) -> Self {
        Elem { alg: alg.clone(), terms: Lin::basis(m) }
    }

    pub fn from_lin(alg: &Arc<Pbw<T>>, terms: Lin<Mono<T::Mid>>) -> Self {
        Elem { alg: alg.clone(), terms }
    }

    /// Middle-part element `Σ c_m m`.
    pub fn from_mid(alg: &Arc<Pbw<T>>, mids: &Lin<T::Mid>) -> Self {
        let terms = mids.map_keys(|m| (1, Mono { x: ZERO_EXPS, mid: m.clone(), y: ZERO_EXPS }));
        Elem { alg: alg.clone(), terms }
    }

    fn check_index(&self, i: usize) -> Result<()> {
        let n = self.alg.n();
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, max: n });
        }
        Ok(())
    }

    /// Left generator (`x_i`, `ξ_i` or `x~_i`).
    pub fn left(alg: &Arc<Pbw<T>>, i: usize) -> Result<Self> {
        let e = Self::zero(alg);
        e.check_index(i)?;
        Ok(Self::from_mono(alg, alg.one_mono(unit_exps(i), ZERO_EXPS)))
    }

    /// Right generator `y_i`.
    pub fn right(alg: &Arc<Pbw<T>>, i: usize) -> Result<Self> {
        let e = Self::zero(alg);
        e.check_index(i)?;
        Ok(Self::from_mono(alg, alg.one_mono(ZERO_EXPS, unit_exps(i))))
    }

    pub fn left_monomial(alg: &Arc<Pbw<T>>, a: Exps) -> Self {
        Self::from_mono(alg, alg.one_mono(a, ZERO_EXPS))
    }

    pub fn right_monomial(alg: &Arc<Pbw<T>>, b: Exps) -> Self {
        Self::from_mono(alg, alg.one_mono(ZERO_EXPS, b))
    }

    pub fn algebra(&self) -> &Arc<Pbw<T>> {
        &self.alg
    }

    pub fn tag(&self) -> AlgebraTag {
        self.alg.tag()
    }

    pub fn terms(&self) -> &Lin<Mono<T::Mid>> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.alg.tag() != o.alg.tag() {
            return Err(Error::TagMismatch(self.alg.tag().to_string(), o.alg.tag().to_string()));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(Elem { alg: self.alg.clone(), terms: &self.terms + &o.terms })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(Elem { alg: self.alg.clone(), terms: &self.terms - &o.terms })
    }

    pub fn neg(&self) -> Self {
        Elem { alg: self.alg.clone(), terms: -&self.terms }
    }

    pub fn scale(&self, c: &ParamPoly) -> Self {
        Elem { alg: self.alg.clone(), terms: self.terms.scale(c) }
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(Elem { alg: self.alg.clone(), terms: self.alg.mul_lin(&self.terms, &o.terms)? })
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = Self::one(&self.alg);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// `ab - ba`.
    pub fn commutator(&self, o: &Self) -> Result<Self> {
        self.mul(o)?.sub(&o.mul(self)?)
    }

    /// Largest total `L`/`R` degree among the terms.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// Parity if homogeneous.
    pub fn parity(&self) -> Option<u32> {
        let mut p = None;
        for m in self.terms.keys() {
            let q = self.alg.mono_parity(m);
            match p {
                None => p = Some(q),
                Some(r) if r != q => return None,
                _ => {}
            }
        }
        p
    }

    pub fn map_coeffs(&self, f: impl FnMut(&ParamPoly) -> ParamPoly) -> Self {
        Elem { alg: self.alg.clone(), terms: self.terms.map_coeffs(f) }
    }
}
