//! The rational covering double affine Hecke algebra over the double cover
//! `W~`, the rational Cherednik algebra, and the two quotient maps obtained
//! by sending the central `z` to `1` or `-1`.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::dahca::check_i;
use crate::error::{Error, Result};
use crate::lin::Lin;
use crate::pbw::{
    skew_swaps, transport_skew, AlgebraKind, AlgebraTag, Elem, Mono, Pbw, Triangular, DEFAULT_MAX_DEGREE,
};
use crate::poly::{exps_add, Exps, ZERO_EXPS};
use crate::scalars::ParamPoly;
use crate::sdaha::{Sdaha, SdahaElem};
use crate::spin::{cover_lift, CoverElem, CoverKind};
use crate::weyl::{Family, SignedPerm, WeylType};

/// `x~_j ↦ sign * z^flip * x~_{j'}`.
type CoverImage = (i8, bool, usize);

pub struct CdahaSpec {
    wt: WeylType,
    brackets: Vec<Lin<CoverElem>>,
    gen_tables: Vec<Vec<CoverImage>>,
    tables: RwLock<HashMap<SignedPerm, Arc<Vec<CoverImage>>>>,
}

pub type Cdaha = Pbw<CdahaSpec>;
pub type CdahaElem = Elem<CdahaSpec>;

fn cover_gen_table(wt: &WeylType, a: usize) -> Vec<CoverImage> {
    let n = wt.n;
    (1..=n)
        .map(|j| {
            if a < n || wt.family == Family::A {
                if j == a {
                    (1, true, a + 1)
                } else if j == a + 1 {
                    (1, true, a)
                } else {
                    (1, true, j)
                }
            } else if wt.family == Family::D {
                if j == n {
                    (-1, false, n - 1)
                } else if j == n - 1 {
                    (-1, false, n)
                } else {
                    (1, true, j)
                }
            } else if j == n {
                (-1, false, n)
            } else {
                (1, true, j)
            }
        })
        .collect()
}

fn add_cover(out: &mut Lin<CoverElem>, wt: &WeylType, kind: CoverKind, i: usize, j: usize, c: &ParamPoly) {
    let g = cover_lift(wt, kind, i, j).expect("cover lift");
    out.add_term(g, c);
}

/// `[y~_i, x~_j]` as an element of `CW~`.
pub fn bracket_cover(wt: &WeylType, i: usize, j: usize) -> Result<Lin<CoverElem>> {
    let n = wt.n;
    check_i(n, i)?;
    check_i(n, j)?;
    let u = ParamPoly::u();
    let neg_u = -&u;
    let mut out = Lin::zero();
    if i != j {
        add_cover(&mut out, wt, CoverKind::Brace, j, i, &u);
        if wt.family != Family::A {
            add_cover(&mut out, wt, CoverKind::BraceBar, j, i, &neg_u);
        }
    } else {
        for k in (1..=n).filter(|&k| k != i) {
            add_cover(&mut out, wt, CoverKind::Brace, i, k, &neg_u);
            if wt.family != Family::A {
                add_cover(&mut out, wt, CoverKind::BraceBar, i, k, &neg_u);
            }
        }
        if wt.family == Family::B {
            add_cover(&mut out, wt, CoverKind::BraceI, i, 0, &-ParamPoly::v());
        }
    }
    // every bracket carries one factor of z
    Ok(out.map_keys(|g| (1, g.times_z())))
}

impl CdahaSpec {
    pub fn new(wt: WeylType) -> Self {
        let n = wt.n;
        let mut brackets = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                brackets.push(bracket_cover(&wt, i, j).expect("indices in range"));
            }
        }
        let gen_tables = (1..=wt.num_generators()).map(|a| cover_gen_table(&wt, a)).collect();
        CdahaSpec { wt, brackets, gen_tables, tables: RwLock::new(HashMap::new()) }
    }

    /// Images of the `x~_j` under conjugation by the canonical lift of `w`.
    fn table(&self, w: &SignedPerm) -> Arc<Vec<CoverImage>> {
        if let Some(t) = self.tables.read().unwrap().get(w) {
            return t.clone();
        }
        let group = self.wt.group();
        let word = group.word(w);
        let t: Vec<CoverImage> = if word.is_empty() {
            (1..=self.wt.n).map(|j| (1, false, j)).collect()
        } else {
            let a = word[0];
            let rest = self.table(&group.generators()[a - 1].mul(w));
            let g = &self.gen_tables[a - 1];
            rest.iter()
                .map(|&(s, z, j)| {
                    let (s2, z2, j2) = g[j - 1];
                    (s * s2, z ^ z2, j2)
                })
                .collect()
        };
        let t = Arc::new(t);
        self.tables.write().unwrap().insert(*w, t.clone());
        t
    }
}

impl Triangular for CdahaSpec {
    type Mid = CoverElem;

    fn tag(&self) -> AlgebraTag {
        AlgebraTag { kind: AlgebraKind::Cdaha, wt: self.wt }
    }

    fn mid_one(&self) -> CoverElem {
        CoverElem::identity(self.wt.n)
    }

    fn mid_mul(&self, a: &CoverElem, b: &CoverElem) -> (i8, CoverElem) {
        (1, a.mul(&self.wt, b).expect("cover elements of this type"))
    }

    fn mid_z(&self, m: &CoverElem) -> CoverElem {
        m.times_z()
    }

    fn left_mul(&self, a: &Exps, b: &Exps) -> (i8, bool, Exps) {
        (1, skew_swaps(a, b) == 1, exps_add(a, b))
    }

    fn mid_past_left(&self, m: &CoverElem, a: &Exps) -> (i8, bool, Exps) {
        if m.w.is_identity() || *a == ZERO_EXPS {
            return (1, false, *a);
        }
        let t = self.table(&m.w);
        let (s, z, swaps, out) = transport_skew(a, self.wt.n, |j| t[j - 1]);
        (s, z ^ (swaps == 1), out)
    }

    fn right_past_mid(&self, b: &Exps, m: &CoverElem) -> (i8, Exps) {
        m.w.inverse().act_monomial(b)
    }

    fn bracket(&self, i: usize, j: usize) -> &Lin<CoverElem> {
        &self.brackets[(i - 1) * self.wt.n + (j - 1)]
    }

    fn mid_text(&self, m: &CoverElem) -> Vec<String> {
        if m.w.is_identity() {
            Vec::new()
        } else {
            vec![format!("wt{}", m.w)]
        }
    }

    fn lead_text(&self, m: &CoverElem) -> Vec<String> {
        if m.z {
            vec!["z".to_string()]
        } else {
            Vec::new()
        }
    }

    fn left_name(&self) -> &'static str {
        "xt"
    }

    fn right_name(&self) -> &'static str {
        "yt"
    }

    fn mid_parity(&self, m: &CoverElem) -> u32 {
        (self.wt.group().length(&m.w) & 1) as u32
    }

    fn left_odd(&self) -> bool {
        true
    }
}

pub fn cdaha(wt: WeylType) -> Arc<Cdaha> {
    Pbw::new(CdahaSpec::new(wt), DEFAULT_MAX_DEGREE)
}

pub fn cdaha_with_cap(wt: WeylType, max_degree: usize) -> Arc<Cdaha> {
    Pbw::new(CdahaSpec::new(wt), max_degree)
}

impl Elem<CdahaSpec> {
    pub fn xt(alg: &Arc<Cdaha>, i: usize) -> Result<Self> {
        Self::left(alg, i)
    }

    pub fn yt(alg: &Arc<Cdaha>, i: usize) -> Result<Self> {
        Self::right(alg, i)
    }

    pub fn z(alg: &Arc<Cdaha>) -> Self {
        Self::from_mid(alg, &Lin::basis(CoverElem::central_z(alg.n())))
    }

    pub fn cover(alg: &Arc<Cdaha>, g: CoverElem) -> Result<Self> {
        alg.tag().wt.check_member(&g.w)?;
        Ok(Self::from_mid(alg, &Lin::basis(g)))
    }

    /// Generator `t~_a`.
    pub fn tt(alg: &Arc<Cdaha>, a: usize) -> Result<Self> {
        Self::cover(alg, CoverElem::lift(alg.tag().wt.simple(a)?))
    }

    pub fn lift(alg: &Arc<Cdaha>, kind: CoverKind, i: usize, j: usize) -> Result<Self> {
        Self::cover(alg, cover_lift(&alg.tag().wt, kind, i, j)?)
    }
}

pub struct DahaSpec {
    wt: WeylType,
    t_zero: bool,
    brackets: Vec<Lin<SignedPerm>>,
}

pub type Daha = Pbw<DahaSpec>;
pub type DahaElem = Elem<DahaSpec>;

/// `[y_i, x_j]` in the rational Cherednik algebra.
pub fn bracket_daha(wt: &WeylType, i: usize, j: usize, with_t: bool) -> Result<Lin<SignedPerm>> {
    let n = wt.n;
    check_i(n, i)?;
    check_i(n, j)?;
    let u = ParamPoly::u();
    let neg_u = -&u;
    let mut out = Lin::zero();
    if i != j {
        out.add_term(SignedPerm::transposition(n, i, j), &u);
        if wt.family != Family::A {
            out.add_term(SignedPerm::signed_transposition(n, i, j), &neg_u);
        }
        return Ok(out);
    }
    if with_t {
        out.add_term(SignedPerm::identity(n), &ParamPoly::t());
    }
    for k in (1..=n).filter(|&k| k != i) {
        out.add_term(SignedPerm::transposition(n, k, i), &neg_u);
        if wt.family != Family::A {
            out.add_term(SignedPerm::signed_transposition(n, k, i), &neg_u);
        }
    }
    if wt.family == Family::B {
        out.add_term(SignedPerm::sign_change(n, i), &-ParamPoly::v());
    }
    Ok(out)
}

impl DahaSpec {
    pub fn new(wt: WeylType, t_zero: bool) -> Self {
        let n = wt.n;
        let mut brackets = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                brackets.push(bracket_daha(&wt, i, j, !t_zero).expect("indices in range"));
            }
        }
        DahaSpec { wt, t_zero, brackets }
    }

    /// Whether the parameter `t` has been specialized to zero.
    pub fn t_is_zero(&self) -> bool {
        self.t_zero
    }
}

impl Triangular for DahaSpec {
    type Mid = SignedPerm;

    fn tag(&self) -> AlgebraTag {
        AlgebraTag { kind: AlgebraKind::Daha, wt: self.wt }
    }

    fn mid_one(&self) -> SignedPerm {
        SignedPerm::identity(self.wt.n)
    }

    fn mid_mul(&self, a: &SignedPerm, b: &SignedPerm) -> (i8, SignedPerm) {
        (1, a.mul(b))
    }

    fn left_mul(&self, a: &Exps, b: &Exps) -> (i8, bool, Exps) {
        (1, false, exps_add(a, b))
    }

    fn mid_past_left(&self, m: &SignedPerm, a: &Exps) -> (i8, bool, Exps) {
        let (s, e) = m.act_monomial(a);
        (s, false, e)
    }

    fn right_past_mid(&self, b: &Exps, m: &SignedPerm) -> (i8, Exps) {
        m.inverse().act_monomial(b)
    }

    fn bracket(&self, i: usize, j: usize) -> &Lin<SignedPerm> {
        &self.brackets[(i - 1) * self.wt.n + (j - 1)]
    }

    fn mid_text(&self, m: &SignedPerm) -> Vec<String> {
        if m.is_identity() {
            Vec::new()
        } else {
            vec![format!("w{}", m)]
        }
    }

    fn left_name(&self) -> &'static str {
        "x"
    }

    fn right_name(&self) -> &'static str {
        "y"
    }

    fn mid_parity(&self, _: &SignedPerm) -> u32 {
        0
    }

    fn left_odd(&self) -> bool {
        false
    }
}

/// Rational Cherednik algebra with generic `t`.
pub fn daha(wt: WeylType) -> Arc<Daha> {
    Pbw::new(DahaSpec::new(wt, false), DEFAULT_MAX_DEGREE)
}

/// Rational Cherednik algebra at `t = 0`.
pub fn daha_t0(wt: WeylType) -> Arc<Daha> {
    Pbw::new(DahaSpec::new(wt, true), DEFAULT_MAX_DEGREE)
}

/// Cherednik algebra with a degree cap; `t_zero` specializes `t = 0`.
pub fn daha_with_cap(wt: WeylType, t_zero: bool, max_degree: usize) -> Arc<Daha> {
    Pbw::new(DahaSpec::new(wt, t_zero), max_degree)
}

impl Elem<DahaSpec> {
    pub fn x(alg: &Arc<Daha>, i: usize) -> Result<Self> {
        Self::left(alg, i)
    }

    pub fn y(alg: &Arc<Daha>, i: usize) -> Result<Self> {
        Self::right(alg, i)
    }

    pub fn group(alg: &Arc<Daha>, w: SignedPerm) -> Result<Self> {
        alg.tag().wt.check_member(&w)?;
        Ok(Self::from_mid(alg, &Lin::basis(w)))
    }

    pub fn simple(alg: &Arc<Daha>, k: usize) -> Result<Self> {
        Self::group(alg, alg.tag().wt.simple(k)?)
    }
}

/// `z ↦ 1`: `x~ ↦ x`, `t~_a ↦ s_a`, `y~ ↦ y`, into the `t = 0` algebra.
pub fn upsilon_plus(a: &CdahaElem, target: &Arc<Daha>) -> Result<DahaElem> {
    if target.tag().wt != a.tag().wt {
        return Err(Error::TagMismatch(a.tag().wt.to_string(), target.tag().wt.to_string()));
    }
    if !target.spec().t_is_zero() {
        return Err(Error::Unavailable("z ↦ 1 quotient".into(), "daha with generic t".into()));
    }
    let terms = a.terms().map_keys(|m| (1, Mono { x: m.x, mid: m.mid.w, y: m.y }));
    Ok(DahaElem::from_lin(target, terms))
}

/// `z ↦ -1`: `x~ ↦ ξ`, `t~_a ↦ t_a`, `y~ ↦ y`.
pub fn upsilon_minus(a: &CdahaElem, target: &Arc<Sdaha>) -> Result<SdahaElem> {
    if target.tag().wt != a.tag().wt {
        return Err(Error::TagMismatch(a.tag().wt.to_string(), target.tag().wt.to_string()));
    }
    let terms = a.terms().map_keys(|m| {
        let (s, w) = m.mid.to_spin();
        (s, Mono { x: m.x, mid: w, y: m.y })
    });
    Ok(SdahaElem::from_lin(target, terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sdaha::sdaha;
    use crate::spin::OddKind;

    fn ty(f: Family, n: usize) -> WeylType {
        WeylType::new(f, n).unwrap()
    }

    #[test]
    fn cover_product_examples() {
        let a = cdaha(ty(Family::A, 3));
        let x = |i| CdahaElem::xt(&a, i).unwrap();
        assert_eq!(x(2).mul(&x(1)).unwrap().to_string(), "z*xt1*xt2");
        let t1 = CdahaElem::tt(&a, 1).unwrap();
        assert_eq!(t1.mul(&x(3)).unwrap(), CdahaElem::z(&a).mul(&x(3)).unwrap().mul(&t1).unwrap());
        let y2 = CdahaElem::yt(&a, 2).unwrap();
        let expect = x(1)
            .mul(&y2)
            .unwrap()
            .add(
                &CdahaElem::lift(&a, CoverKind::Brace, 1, 2)
                    .unwrap()
                    .mul(&CdahaElem::z(&a))
                    .unwrap()
                    .scale(&ParamPoly::u()),
            )
            .unwrap();
        assert_eq!(y2.mul(&x(1)).unwrap(), expect);
        let z = CdahaElem::z(&a);
        assert_eq!(z.mul(&z).unwrap(), CdahaElem::one(&a));
    }

    #[test]
    fn daha_product_examples() {
        let a = daha(ty(Family::A, 2));
        let x1 = DahaElem::x(&a, 1).unwrap();
        let y1 = DahaElem::y(&a, 1).unwrap();
        let y2 = DahaElem::y(&a, 2).unwrap();
        assert_eq!(y2.mul(&x1).unwrap().to_string(), "u*w[2,1] + x1*y2");
        assert_eq!(y1.mul(&x1).unwrap().to_string(), "t - u*w[2,1] + x1*y1");
        let s = DahaElem::simple(&a, 1).unwrap();
        assert_eq!(s.mul(&x1).unwrap().to_string(), "x2*w[2,1]");
    }

    fn cover_generators(a: &Arc<Cdaha>) -> Vec<CdahaElem> {
        let wt = a.tag().wt;
        let mut g = vec![CdahaElem::z(a)];
        for i in 1..=wt.n {
            g.push(CdahaElem::xt(a, i).unwrap());
            g.push(CdahaElem::yt(a, i).unwrap());
        }
        for k in 1..=wt.num_generators() {
            g.push(CdahaElem::tt(a, k).unwrap());
        }
        g
    }

    #[test]
    fn generator_triples_associate() {
        for (f, n) in [(Family::A, 3), (Family::B, 2), (Family::B, 3), (Family::D, 4)] {
            let a = cdaha(ty(f, n));
            let g = cover_generators(&a);
            for p in &g {
                for q in &g {
                    let pq = p.mul(q).unwrap();
                    for r in &g {
                        assert_eq!(pq.mul(r).unwrap(), p.mul(&q.mul(r).unwrap()).unwrap(), "{} {} {}", p, q, r);
                    }
                }
            }
            let d = daha(ty(f, n));
            let mut g = Vec::new();
            for i in 1..=n {
                g.push(DahaElem::x(&d, i).unwrap());
                g.push(DahaElem::y(&d, i).unwrap());
            }
            for k in 1..=d.tag().wt.num_generators() {
                g.push(DahaElem::simple(&d, k).unwrap());
            }
            for p in &g {
                for q in &g {
                    let pq = p.mul(q).unwrap();
                    for r in &g {
                        assert_eq!(pq.mul(r).unwrap(), p.mul(&q.mul(r).unwrap()).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn quotients_are_multiplicative_on_generators() {
        for (f, n) in [(Family::A, 3), (Family::B, 2), (Family::D, 4)] {
            let wt = ty(f, n);
            let (c, d, s) = (cdaha(wt), daha_t0(wt), sdaha(wt));
            let g = cover_generators(&c);
            for p in &g {
                for q in &g {
                    let pq = p.mul(q).unwrap();
                    let plus = upsilon_plus(p, &d).unwrap().mul(&upsilon_plus(q, &d).unwrap()).unwrap();
                    assert_eq!(upsilon_plus(&pq, &d).unwrap(), plus);
                    let minus = upsilon_minus(p, &s).unwrap().mul(&upsilon_minus(q, &s).unwrap()).unwrap();
                    assert_eq!(upsilon_minus(&pq, &s).unwrap(), minus);
                }
            }
        }
    }

    #[test]
    fn quotient_examples() {
        let wt = ty(Family::B, 3);
        let (c, d, s) = (cdaha(wt), daha_t0(wt), sdaha(wt));
        let brace = CdahaElem::lift(&c, CoverKind::Brace, 1, 3).unwrap();
        assert_eq!(upsilon_plus(&brace, &d).unwrap(), DahaElem::group(&d, SignedPerm::transposition(3, 1, 3)).unwrap());
        assert_eq!(upsilon_minus(&brace, &s).unwrap(), SdahaElem::odd(&s, OddKind::Tij, 1, 3).unwrap());
        let bi = CdahaElem::lift(&c, CoverKind::BraceI, 2, 0).unwrap();
        assert_eq!(upsilon_minus(&bi, &s).unwrap(), SdahaElem::odd(&s, OddKind::TbarI, 2, 0).unwrap());
        let zx = CdahaElem::z(&c).mul(&CdahaElem::xt(&c, 1).unwrap()).unwrap();
        assert_eq!(upsilon_plus(&zx, &d).unwrap(), DahaElem::x(&d, 1).unwrap());
        assert_eq!(upsilon_minus(&zx, &s).unwrap(), SdahaElem::xi(&s, 1).unwrap().neg());
        let br = CdahaElem::yt(&c, 1).unwrap().commutator(&CdahaElem::xt(&c, 1).unwrap()).unwrap();
        let sb = SdahaElem::y(&s, 1).unwrap().commutator(&SdahaElem::xi(&s, 1).unwrap()).unwrap();
        assert_eq!(upsilon_minus(&br, &s).unwrap(), sb);
    }
}
