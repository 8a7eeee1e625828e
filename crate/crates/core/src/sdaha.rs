//! The rational spin double affine Hecke algebra: PBW basis
//! `ξ^a T_w y^b` with anticommuting `ξ`, and the isomorphism with the
//! Hecke-Clifford algebra after tensoring with `C_n`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use crate::clifford::Eps;
use crate::dahca::{check_i, geometric, poly_elem, Dahca, DahcaElem};
use crate::error::{Error, Result};
use crate::lin::Lin;
use crate::pbw::{
    skew_swaps, transport_skew, AlgebraKind, AlgebraTag, Elem, Mono, Pbw, Triangular, DEFAULT_MAX_DEGREE,
};
use crate::poly::{ddiff, unit_exps, DiffKind, Exps, Poly, ZERO_EXPS};
use crate::scalars::{Cyc, ParamPoly};
use crate::spin::{odd_reflection_signed, phi_of_group, psi_of_spin, Cocycle, OddKind, SpinElem};
use crate::weyl::{Family, SignedPerm, WeylType};

type XiTable = Arc<Vec<(i8, usize)>>;

pub struct SdahaSpec {
    wt: WeylType,
    cocycle: Cocycle,
    brackets: Vec<Lin<SignedPerm>>,
    /// `t_a ξ_j = sign * ξ_{j'} t_a`, per generator.
    gen_tables: Vec<Vec<(i8, usize)>>,
    tables: RwLock<HashMap<SignedPerm, XiTable>>,
}

pub type Sdaha = Pbw<SdahaSpec>;
pub type SdahaElem = Elem<SdahaSpec>;

fn gen_table(wt: &WeylType, a: usize) -> Vec<(i8, usize)> {
    let n = wt.n;
    (1..=n)
        .map(|j| {
            if a < n || wt.family == Family::A {
                if j == a {
                    (-1, a + 1)
                } else if j == a + 1 {
                    (-1, a)
                } else {
                    (-1, j)
                }
            } else if wt.family == Family::D {
                if j == n {
                    (-1, n - 1)
                } else if j == n - 1 {
                    (-1, n)
                } else {
                    (-1, j)
                }
            } else {
                (-1, j)
            }
        })
        .collect()
}

fn add_odd(out: &mut Lin<SignedPerm>, wt: &WeylType, kind: OddKind, i: usize, j: usize, c: &ParamPoly) {
    let (s, w) = odd_reflection_signed(wt, kind, i, j).expect("odd reflection");
    out.add_signed(w, c, s);
}

/// `[y_i, ξ_j]` as an element of `CW^-`.
pub fn bracket_y_xi(wt: &WeylType, i: usize, j: usize) -> Result<Lin<SignedPerm>> {
    let n = wt.n;
    check_i(n, i)?;
    check_i(n, j)?;
    let u = ParamPoly::u();
    let mut out = Lin::zero();
    let ks: Vec<usize> = if i != j { vec![j] } else { (1..=n).filter(|&k| k != i).collect() };
    for k in ks {
        add_odd(&mut out, wt, OddKind::Tij, i, k, &u);
        if wt.family != Family::A {
            add_odd(&mut out, wt, OddKind::TbarIj, i, k, &u);
        }
    }
    if wt.family == Family::B && i == j {
        add_odd(&mut out, wt, OddKind::TbarI, i, 0, &ParamPoly::v());
    }
    Ok(out)
}

impl SdahaSpec {
    pub fn new(wt: WeylType) -> Self {
        let n = wt.n;
        let mut brackets = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                brackets.push(bracket_y_xi(&wt, i, j).expect("indices in range"));
            }
        }
        let gen_tables = (1..=wt.num_generators()).map(|a| gen_table(&wt, a)).collect();
        SdahaSpec { wt, cocycle: Cocycle::new(&wt), brackets, gen_tables, tables: RwLock::new(HashMap::new()) }
    }

    /// `T_w ξ_j = sign * ξ_{j'} T_w`, composed along the canonical word.
    fn table(&self, w: &SignedPerm) -> XiTable {
        if let Some(t) = self.tables.read().unwrap().get(w) {
            return t.clone();
        }
        let group = self.wt.group();
        let word = group.word(w);
        let t: Vec<(i8, usize)> = if word.is_empty() {
            (1..=self.wt.n).map(|j| (1, j)).collect()
        } else {
            // T_w = t_a T_{s_a w}
            let a = word[0];
            let rest = self.table(&group.generators()[a - 1].mul(w));
            let g = &self.gen_tables[a - 1];
            rest.iter()
                .map(|&(s, j)| {
                    let (s2, j2) = g[j - 1];
                    (s * s2, j2)
                })
                .collect()
        };
        let t = Arc::new(t);
        self.tables.write().unwrap().insert(*w, t.clone());
        t
    }
}

impl Triangular for SdahaSpec {
    type Mid = SignedPerm;

    fn tag(&self) -> AlgebraTag {
        AlgebraTag { kind: AlgebraKind::Sdaha, wt: self.wt }
    }

    fn mid_one(&self) -> SignedPerm {
        SignedPerm::identity(self.wt.n)
    }

    fn mid_mul(&self, a: &SignedPerm, b: &SignedPerm) -> (i8, SignedPerm) {
        (self.cocycle.alpha(a, b), a.mul(b))
    }

    fn left_mul(&self, a: &Exps, b: &Exps) -> (i8, bool, Exps) {
        let s = if skew_swaps(a, b) == 1 { -1 } else { 1 };
        (s, false, crate::poly::exps_add(a, b))
    }

    fn mid_past_left(&self, m: &SignedPerm, a: &Exps) -> (i8, bool, Exps) {
        if m.is_identity() || *a == ZERO_EXPS {
            return (1, false, *a);
        }
        let t = self.table(m);
        let (s, _, swaps, out) = transport_skew(a, self.wt.n, |j| {
            let (s, jj) = t[j - 1];
            (s, false, jj)
        });
        (if swaps == 1 { -s } else { s }, false, out)
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
            vec![format!("t{}", m)]
        }
    }

    fn left_name(&self) -> &'static str {
        "xi"
    }

    fn right_name(&self) -> &'static str {
        "y"
    }

    fn mid_parity(&self, m: &SignedPerm) -> u32 {
        (self.wt.group().length(m) & 1) as u32
    }

    fn left_odd(&self) -> bool {
        true
    }
}

pub fn sdaha(wt: WeylType) -> Arc<Sdaha> {
    Pbw::new(SdahaSpec::new(wt), DEFAULT_MAX_DEGREE)
}

pub fn sdaha_with_cap(wt: WeylType, max_degree: usize) -> Arc<Sdaha> {
    Pbw::new(SdahaSpec::new(wt), max_degree)
}

impl Elem<SdahaSpec> {
    pub fn xi(alg: &Arc<Sdaha>, i: usize) -> Result<Self> {
        Self::left(alg, i)
    }

    pub fn y(alg: &Arc<Sdaha>, i: usize) -> Result<Self> {
        Self::right(alg, i)
    }

    /// `T_w`.
    pub fn tw(alg: &Arc<Sdaha>, w: SignedPerm) -> Result<Self> {
        alg.tag().wt.check_member(&w)?;
        Ok(Self::from_mid(alg, &Lin::basis(w)))
    }

    /// Generator `t_a`.
    pub fn t(alg: &Arc<Sdaha>, a: usize) -> Result<Self> {
        Self::tw(alg, alg.tag().wt.simple(a)?)
    }

    pub fn odd(alg: &Arc<Sdaha>, kind: OddKind, i: usize, j: usize) -> Result<Self> {
        let (s, w) = odd_reflection_signed(&alg.tag().wt, kind, i, j)?;
        Ok(Self::from_mid(alg, &Lin::basis(w)).scale(&ParamPoly::from_int(s as i64)))
    }

    pub fn from_spin(alg: &Arc<Sdaha>, s: &SpinElem) -> Result<Self> {
        if s.weyl_type() != alg.tag().wt {
            return Err(Error::TagMismatch(s.weyl_type().to_string(), alg.tag().wt.to_string()));
        }
        Ok(Self::from_mid(alg, s.terms()))
    }

    pub fn from_y_poly(alg: &Arc<Sdaha>, f: &Poly) -> Result<Self> {
        poly_elem(alg, f, false)
    }
}

/// Element of `C_n ⊗ sdaha` in the basis `c^eps ⊗ ξ^a T_w y^b`.
#[derive(Clone)]
pub struct TensorSdaha {
    alg: Arc<Sdaha>,
    terms: Lin<(Eps, Mono<SignedPerm>)>,
}

impl PartialEq for TensorSdaha {
    fn eq(&self, o: &Self) -> bool {
        self.alg.tag() == o.alg.tag() && self.terms == o.terms
    }
}

impl Eq for TensorSdaha {}

impl fmt::Debug for TensorSdaha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for TensorSdaha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut order: Vec<_> = self.terms.iter().collect();
        order.sort_by_key(|((e, m), _)| {
            (m.degree(), e.degree(), *e, std::cmp::Reverse(m.x), m.mid, std::cmp::Reverse(m.y))
        });
        crate::text::write_sum(
            f,
            order.into_iter().map(|((e, m), c)| {
                let mut parts = Vec::new();
                if e.0 != 0 {
                    parts.push(e.to_string());
                }
                let body = self.alg.mono_text(m);
                if !body.is_empty() {
                    parts.push(body);
                }
                (c, parts.join(" (x) "))
            }),
        )
    }
}

impl TensorSdaha {
    pub fn zero(alg: &Arc<Sdaha>) -> Self {
        TensorSdaha { alg: alg.clone(), terms: Lin::zero() }
    }

    /// `c^e ⊗ 1`.
    pub fn clifford(alg: &Arc<Sdaha>, e: Eps) -> Self {
        let one = Mono { x: ZERO_EXPS, mid: SignedPerm::identity(alg.n()), y: ZERO_EXPS };
        TensorSdaha { alg: alg.clone(), terms: Lin::basis((e, one)) }
    }

    /// `1 ⊗ a`.
    pub fn from_sdaha(a: &SdahaElem) -> Self {
        TensorSdaha { alg: a.algebra().clone(), terms: a.terms().map_keys(|m| (1, (Eps::ONE, m.clone()))) }
    }

    pub fn from_lin(alg: &Arc<Sdaha>, terms: Lin<(Eps, Mono<SignedPerm>)>) -> Self {
        TensorSdaha { alg: alg.clone(), terms }
    }

    pub fn algebra(&self) -> &Arc<Sdaha> {
        &self.alg
    }

    pub fn terms(&self) -> &Lin<(Eps, Mono<SignedPerm>)> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.alg.tag() != o.alg.tag() {
            return Err(Error::TagMismatch(self.alg.tag().to_string(), o.alg.tag().to_string()));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(TensorSdaha { alg: self.alg.clone(), terms: &self.terms + &o.terms })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(TensorSdaha { alg: self.alg.clone(), terms: &self.terms - &o.terms })
    }

    pub fn scale(&self, c: &ParamPoly) -> Self {
        TensorSdaha { alg: self.alg.clone(), terms: self.terms.scale(c) }
    }

    /// `(a ⊗ b)(a' ⊗ b') = (-1)^{|b||a'|} aa' ⊗ bb'`.
    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let mut out = Lin::zero();
        for ((e1, m1), c1) in self.terms.iter() {
            let p1 = self.alg.mono_parity(m1);
            for ((e2, m2), c2) in o.terms.iter() {
                let (s, e) = e1.mul(*e2);
                let s = if p1 & e2.parity() == 1 { -s } else { s };
                let c = c1 * c2;
                for (m, d) in self.alg.mul_mono(m1, m2)?.iter() {
                    out.add_signed((e, m.clone()), &(&c * d), s);
                }
            }
        }
        Ok(TensorSdaha { alg: self.alg.clone(), terms: out })
    }

    /// The `sdaha` component when the element lies in `1 ⊗ sdaha`.
    pub fn as_sdaha(&self) -> Option<SdahaElem> {
        let mut out = Lin::zero();
        for ((e, m), c) in self.terms.iter() {
            if *e != Eps::ONE {
                return None;
            }
            out.add_term(m.clone(), c);
        }
        Some(SdahaElem::from_lin(&self.alg, out))
    }
}

fn sqrt_m2_poly() -> ParamPoly {
    ParamPoly::constant(Cyc::sqrt_m2())
}

/// `Φ`: `y_i ↦ y_i`, `x_i ↦ √-2 c_i ⊗ ξ_i`, `s_a ↦ -√-1 β_a ⊗ t_a`,
/// `c_i ↦ c_i`.
pub fn phi_big(a: &DahcaElem, target: &Arc<Sdaha>) -> Result<TensorSdaha> {
    let wt = a.tag().wt;
    if target.tag().wt != wt {
        return Err(Error::TagMismatch(wt.to_string(), target.tag().wt.to_string()));
    }
    let n = wt.n;
    let x_img: Vec<TensorSdaha> = (1..=n)
        .map(|i| {
            let m = Mono { x: unit_exps(i), mid: SignedPerm::identity(n), y: ZERO_EXPS };
            TensorSdaha::from_lin(target, Lin::term((Eps::single(i), m), sqrt_m2_poly()))
        })
        .collect();
    let mut out = TensorSdaha::zero(target);
    for (m, c) in a.terms().iter() {
        let mut acc = TensorSdaha::from_lin(
            target,
            Lin::term((Eps::ONE, Mono { x: ZERO_EXPS, mid: SignedPerm::identity(n), y: ZERO_EXPS }), c.clone()),
        );
        for i in 1..=n {
            for _ in 0..m.x[i - 1] {
                acc = acc.mul(&x_img[i - 1])?;
            }
        }
        acc = acc.mul(&TensorSdaha::clifford(target, m.mid.0))?;
        let w_img =
            phi_of_group(&wt, &m.mid.1).map_keys(|(e, w)| (1, (*e, Mono { x: ZERO_EXPS, mid: *w, y: ZERO_EXPS })));
        acc = acc.mul(&TensorSdaha::from_lin(target, w_img))?;
        let ys = TensorSdaha::from_lin(
            target,
            Lin::basis((Eps::ONE, Mono { x: ZERO_EXPS, mid: SignedPerm::identity(n), y: m.y })),
        );
        acc = acc.mul(&ys)?;
        out = out.add(&acc)?;
    }
    Ok(out)
}

/// `Ψ = Φ^{-1}`: `ξ_i ↦ (1/√-2) c_i x_i`, `T_w ↦ γ_w w`.
pub fn psi_big(a: &TensorSdaha, target: &Arc<Dahca>) -> Result<DahcaElem> {
    let wt = a.algebra().tag().wt;
    if target.tag().wt != wt {
        return Err(Error::TagMismatch(wt.to_string(), target.tag().wt.to_string()));
    }
    let n = wt.n;
    let inv = ParamPoly::constant(Cyc::sqrt_m2().inv()?);
    let xi_img: Vec<DahcaElem> = (1..=n)
        .map(|i| {
            let c = DahcaElem::c(target, i).expect("index");
            c.mul(&DahcaElem::x(target, i).expect("index")).expect("degree").scale(&inv)
        })
        .collect();
    let mut out = DahcaElem::zero(target);
    for ((e, m), c) in a.terms().iter() {
        let mut acc = DahcaElem::from_mid(target, &Lin::term((*e, SignedPerm::identity(n)), c.clone()));
        for i in 1..=n {
            for _ in 0..m.x[i - 1] {
                acc = acc.mul(&xi_img[i - 1])?;
            }
        }
        acc = acc.mul(&DahcaElem::from_mid(target, &psi_of_spin(&wt, &m.mid)))?;
        acc = acc.mul(&DahcaElem::right_monomial(target, m.y))?;
        out = out.add(&acc)?;
    }
    Ok(out)
}

/// `[f, ξ_i]` from divided differences of `f ∈ C[y]`.
pub fn sdaha_comm_closed_form(alg: &Arc<Sdaha>, f: &Poly, i: usize) -> Result<SdahaElem> {
    let wt = alg.tag().wt;
    let n = wt.n;
    check_i(n, i)?;
    if f.n() != n {
        return Err(Error::RankMismatch(f.n(), n));
    }
    let u = ParamPoly::u();
    let mut out = SdahaElem::zero(alg);
    for k in (1..=n).filter(|&k| k != i) {
        let dm = ddiff(f, i, k, DiffKind::Minus)?;
        let t = SdahaElem::odd(alg, OddKind::Tij, k, i)?.scale(&-&u);
        out = out.add(&SdahaElem::from_y_poly(alg, &dm)?.mul(&t)?)?;
        if wt.family != Family::A {
            let dp = ddiff(f, i, k, DiffKind::Plus)?;
            let t = SdahaElem::odd(alg, OddKind::TbarIj, k, i)?.scale(&u);
            out = out.add(&SdahaElem::from_y_poly(alg, &dp)?.mul(&t)?)?;
        }
    }
    if wt.family == Family::B {
        let dt = ddiff(f, i, 0, DiffKind::Tau)?;
        let t = SdahaElem::odd(alg, OddKind::TbarI, i, 0)?.scale(&ParamPoly::v());
        out = out.add(&SdahaElem::from_y_poly(alg, &dt)?.mul(&t)?)?;
    }
    Ok(out)
}

/// `[y_j^l, ξ_i]` from the explicit power formulas.
pub fn sdaha_comm_ypow_xi(alg: &Arc<Sdaha>, j: usize, i: usize, l: u8) -> Result<SdahaElem> {
    let wt = alg.tag().wt;
    let n = wt.n;
    check_i(n, i)?;
    check_i(n, j)?;
    let u = ParamPoly::u();
    let mut out = SdahaElem::zero(alg);
    // off the diagonal only k = j contributes, with (y_j^l - y_i^l)/(y_i - y_j) = -h
    let ks: Vec<(usize, ParamPoly)> = if i != j {
        vec![(j, ParamPoly::from_int(-1))]
    } else {
        (1..=n).filter(|&k| k != i).map(|k| (k, ParamPoly::one())).collect()
    };
    for (k, sign) in ks {
        let hm = geometric(n, j, if i != j { i } else { k }, 1, l).scale(&sign);
        let t = SdahaElem::odd(alg, OddKind::Tij, k, i)?.scale(&-&u);
        out = out.add(&SdahaElem::from_y_poly(alg, &hm)?.mul(&t)?)?;
        if wt.family != Family::A {
            let hp = geometric(n, j, if i != j { i } else { k }, -1, l);
            let t = SdahaElem::odd(alg, OddKind::TbarIj, k, i)?.scale(&u);
            out = out.add(&SdahaElem::from_y_poly(alg, &hp)?.mul(&t)?)?;
        }
    }
    if wt.family == Family::B && i == j && l % 2 == 1 {
        let mut e = ZERO_EXPS;
        e[i - 1] = l - 1;
        let t = SdahaElem::odd(alg, OddKind::TbarI, i, 0)?.scale(&ParamPoly::v());
        out = out.add(&SdahaElem::right_monomial(alg, e).mul(&t)?)?;
    }
    Ok(out)
}

/// `Σ_i ξ_i^{2k}`.
pub fn xi_square_power_sum(alg: &Arc<Sdaha>, k: usize) -> SdahaElem {
    let n = alg.n();
    let mut out = Lin::zero();
    for i in 1..=n {
        let mut e = ZERO_EXPS;
        e[i - 1] = (2 * k) as u8;
        out.add_term(Mono { x: e, mid: SignedPerm::identity(n), y: ZERO_EXPS }, &ParamPoly::one());
    }
    SdahaElem::from_lin(alg, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dahca::dahca;

    fn alg(f: Family, n: usize) -> Arc<Sdaha> {
        sdaha(WeylType::new(f, n).unwrap())
    }

    #[test]
    fn product_examples() {
        let a = alg(Family::A, 2);
        let t1 = SdahaElem::t(&a, 1).unwrap();
        let xi1 = SdahaElem::xi(&a, 1).unwrap();
        let xi2 = SdahaElem::xi(&a, 2).unwrap();
        assert_eq!(t1.mul(&xi1).unwrap(), xi2.mul(&t1).unwrap().neg());
        assert_eq!(xi1.mul(&xi2).unwrap().to_string(), "xi1*xi2");
        assert_eq!(xi2.mul(&xi1).unwrap().to_string(), "-xi1*xi2");
        let y1 = SdahaElem::y(&a, 1).unwrap();
        assert_eq!(y1.mul(&xi1).unwrap().to_string(), "u*t[2,1] + xi1*y1");
    }

    #[test]
    fn type_specific_generator_signs() {
        let d = alg(Family::D, 4);
        let t4 = SdahaElem::t(&d, 4).unwrap();
        let xi = |i| SdahaElem::xi(&d, i).unwrap();
        assert_eq!(t4.mul(&xi(4)).unwrap(), xi(3).mul(&t4).unwrap().neg());
        assert_eq!(t4.mul(&xi(1)).unwrap(), xi(1).mul(&t4).unwrap().neg());
        let b = alg(Family::B, 3);
        let t3 = SdahaElem::t(&b, 3).unwrap();
        let xb = SdahaElem::xi(&b, 3).unwrap();
        assert_eq!(t3.mul(&xb).unwrap(), xb.mul(&t3).unwrap().neg());
    }

    fn generators(a: &Arc<Sdaha>) -> Vec<SdahaElem> {
        let wt = a.tag().wt;
        let mut g = Vec::new();
        for i in 1..=wt.n {
            g.push(SdahaElem::xi(a, i).unwrap());
            g.push(SdahaElem::y(a, i).unwrap());
        }
        for k in 1..=wt.num_generators() {
            g.push(SdahaElem::t(a, k).unwrap());
        }
        g
    }

    #[test]
    fn generator_triples_associate() {
        for (f, n) in [(Family::A, 3), (Family::B, 2), (Family::B, 3), (Family::D, 4)] {
            let a = alg(f, n);
            let g = generators(&a);
            for p in &g {
                for q in &g {
                    let pq = p.mul(q).unwrap();
                    for r in &g {
                        assert_eq!(pq.mul(r).unwrap(), p.mul(&q.mul(r).unwrap()).unwrap(), "{} {} {}", p, q, r);
                    }
                }
            }
        }
    }

    #[test]
    fn phi_and_psi_examples() {
        let wt = WeylType::new(Family::A, 2).unwrap();
        let (d, s) = (dahca(wt), sdaha(wt));
        let x1 = DahcaElem::x(&d, 1).unwrap();
        let img = phi_big(&x1, &s).unwrap();
        assert_eq!(img.to_string(), "(z8 + z8^3)*c1 (x) xi1");
        let xi1 = TensorSdaha::from_sdaha(&SdahaElem::xi(&s, 1).unwrap());
        let back = psi_big(&xi1, &d).unwrap();
        let inv = ParamPoly::constant(Cyc::sqrt_m2().inv().unwrap());
        assert_eq!(back, DahcaElem::c(&d, 1).unwrap().mul(&x1).unwrap().scale(&inv));
        let y1x1 = DahcaElem::y(&d, 1).unwrap().mul(&x1).unwrap();
        assert_eq!(psi_big(&phi_big(&y1x1, &s).unwrap(), &d).unwrap(), y1x1);
    }

    #[test]
    fn phi_is_multiplicative_on_generators() {
        for (f, n) in [(Family::A, 3), (Family::B, 2), (Family::D, 4)] {
            let wt = WeylType::new(f, n).unwrap();
            let (d, s) = (dahca(wt), sdaha(wt));
            let mut g = Vec::new();
            for i in 1..=n {
                g.push(DahcaElem::x(&d, i).unwrap());
                g.push(DahcaElem::y(&d, i).unwrap());
                g.push(DahcaElem::c(&d, i).unwrap());
            }
            for k in 1..=wt.num_generators() {
                g.push(DahcaElem::simple(&d, k).unwrap());
            }
            for p in &g {
                for q in &g {
                    let lhs = phi_big(&p.mul(q).unwrap(), &s).unwrap();
                    let rhs = phi_big(p, &s).unwrap().mul(&phi_big(q, &s).unwrap()).unwrap();
                    assert_eq!(lhs, rhs, "{} {} in {}", p, q, wt);
                }
            }
        }
    }

    #[test]
    fn closed_forms_match_the_engine() {
        for (f, n) in [(Family::A, 3), (Family::B, 2), (Family::D, 4)] {
            let a = alg(f, n);
            let v1 = Poly::var(n, 1).unwrap();
            let v2 = Poly::var(n, 2).unwrap();
            let p = v1.pow(2).unwrap().mul(&v2).unwrap().add(&v1.scale(&ParamPoly::from_int(2))).unwrap();
            for i in 1..=n {
                let xi = SdahaElem::xi(&a, i).unwrap();
                let py = SdahaElem::from_y_poly(&a, &p).unwrap();
                assert_eq!(sdaha_comm_closed_form(&a, &p, i).unwrap(), py.commutator(&xi).unwrap());
                for j in 1..=n {
                    for l in 1..=4u8 {
                        let yj = SdahaElem::y(&a, j).unwrap().pow(l as u32).unwrap();
                        assert_eq!(sdaha_comm_ypow_xi(&a, j, i, l).unwrap(), yj.commutator(&xi).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn closed_form_examples() {
        let a = alg(Family::A, 2);
        let y2 = Poly::var(2, 2).unwrap();
        let got = sdaha_comm_closed_form(&a, &y2, 1).unwrap();
        assert_eq!(got, SdahaElem::t(&a, 1).unwrap().scale(&-ParamPoly::u()));
        let b = alg(Family::B, 2);
        let y1sq = Poly::var(2, 1).unwrap().pow(2).unwrap();
        let got = sdaha_comm_closed_form(&b, &y1sq, 1).unwrap();
        let u = ParamPoly::u();
        let y1 = SdahaElem::y(&b, 1).unwrap();
        let y2 = SdahaElem::y(&b, 2).unwrap();
        let expect = y1
            .add(&y2)
            .unwrap()
            .mul(&SdahaElem::odd(&b, OddKind::Tij, 2, 1).unwrap())
            .unwrap()
            .scale(&-&u)
            .add(&y1.sub(&y2).unwrap().mul(&SdahaElem::odd(&b, OddKind::TbarIj, 2, 1).unwrap()).unwrap().scale(&u))
            .unwrap();
        assert_eq!(got, expect);
    }
}
