//! The rational double affine Hecke-Clifford algebra: PBW basis
//! `x^a c^eps w y^b`, its defining brackets, and closed-form commutators
//! with polynomials.

use std::sync::Arc;

use crate::clifford::{k_mono_mul, Eps, KElem, KMono};
use crate::error::{Error, Result};
use crate::lin::Lin;
use crate::pbw::{AlgebraKind, AlgebraTag, Elem, Mono, Pbw, Triangular, DEFAULT_MAX_DEGREE};
use crate::poly::{ddiff, unit_exps, DiffKind, Exps, Poly, ZERO_EXPS};
use crate::scalars::{Cyc, ParamPoly};
use crate::weyl::{Family, SignedPerm, WeylType};

pub struct DahcaSpec {
    wt: WeylType,
    brackets: Vec<Lin<KMono>>,
}

pub type Dahca = Pbw<DahcaSpec>;
pub type DahcaElem = Elem<DahcaSpec>;

/// Adds `coeff * (1 ± c_a c_b) w` to `out`.
fn add_clifford_pair(out: &mut Lin<KMono>, coeff: &ParamPoly, a: usize, b: usize, plus: bool, w: SignedPerm) {
    out.add_term((Eps::ONE, w), coeff);
    let (s, e) = Eps::single(a).mul(Eps::single(b));
    out.add_signed((e, w), coeff, if plus { s } else { -s });
}

/// `[y_j, x_i]` as an element of `K`.
pub fn bracket_yx(wt: &WeylType, j: usize, i: usize) -> Result<Lin<KMono>> {
    let n = wt.n;
    for k in [i, j] {
        if k == 0 || k > n {
            return Err(Error::IndexOutOfRange { index: k, max: n });
        }
    }
    let u = ParamPoly::u();
    let neg_u = -&u;
    let mut out = Lin::zero();
    if i != j {
        add_clifford_pair(&mut out, &u, j, i, true, SignedPerm::transposition(n, i, j));
        if wt.family != Family::A {
            add_clifford_pair(&mut out, &neg_u, j, i, false, SignedPerm::signed_transposition(n, i, j));
        }
        return Ok(out);
    }
    for k in (1..=n).filter(|&k| k != i) {
        add_clifford_pair(&mut out, &neg_u, k, i, true, SignedPerm::transposition(n, k, i));
        if wt.family != Family::A {
            add_clifford_pair(&mut out, &neg_u, k, i, false, SignedPerm::signed_transposition(n, k, i));
        }
    }
    if wt.family == Family::B {
        let c = ParamPoly::v().scale(&-Cyc::sqrt2());
        out.add_term((Eps::ONE, SignedPerm::sign_change(n, i)), &c);
    }
    Ok(out)
}

impl DahcaSpec {
    pub fn new(wt: WeylType) -> Self {
        let n = wt.n;
        let mut brackets = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                // engine convention: [y_i, x_j]
                brackets.push(bracket_yx(&wt, i, j).expect("indices in range"));
            }
        }
        DahcaSpec { wt, brackets }
    }
}

impl Triangular for DahcaSpec {
    type Mid = KMono;

    fn tag(&self) -> AlgebraTag {
        AlgebraTag { kind: AlgebraKind::Dahca, wt: self.wt }
    }

    fn mid_one(&self) -> KMono {
        (Eps::ONE, SignedPerm::identity(self.wt.n))
    }

    fn mid_mul(&self, a: &KMono, b: &KMono) -> (i8, KMono) {
        k_mono_mul(a, b)
    }

    fn left_mul(&self, a: &Exps, b: &Exps) -> (i8, bool, Exps) {
        (1, false, crate::poly::exps_add(a, b))
    }

    fn mid_past_left(&self, m: &KMono, a: &Exps) -> (i8, bool, Exps) {
        let (s, a2) = m.1.act_monomial(a);
        (s * m.0.sign_past(&a2), false, a2)
    }

    fn right_past_mid(&self, b: &Exps, m: &KMono) -> (i8, Exps) {
        m.1.inverse().act_monomial(b)
    }

    fn bracket(&self, i: usize, j: usize) -> &Lin<KMono> {
        &self.brackets[(i - 1) * self.wt.n + (j - 1)]
    }

    fn mid_text(&self, m: &KMono) -> Vec<String> {
        let mut out: Vec<String> = m.0.indices().map(|i| format!("c{}", i)).collect();
        if !m.1.is_identity() {
            out.push(format!("w{}", m.1));
        }
        out
    }

    fn left_name(&self) -> &'static str {
        "x"
    }

    fn right_name(&self) -> &'static str {
        "y"
    }

    fn mid_parity(&self, m: &KMono) -> u32 {
        m.0.parity()
    }

    fn left_odd(&self) -> bool {
        false
    }
}

pub fn dahca(wt: WeylType) -> Arc<Dahca> {
    Pbw::new(DahcaSpec::new(wt), DEFAULT_MAX_DEGREE)
}

pub fn dahca_with_cap(wt: WeylType, max_degree: usize) -> Arc<Dahca> {
    Pbw::new(DahcaSpec::new(wt), max_degree)
}

impl Elem<DahcaSpec> {
    pub fn x(alg: &Arc<Dahca>, i: usize) -> Result<Self> {
        Self::left(alg, i)
    }

    pub fn y(alg: &Arc<Dahca>, i: usize) -> Result<Self> {
        Self::right(alg, i)
    }

    pub fn c(alg: &Arc<Dahca>, i: usize) -> Result<Self> {
        let n = alg.n();
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, max: n });
        }
        Ok(Self::from_mid(alg, &Lin::basis((Eps::single(i), SignedPerm::identity(n)))))
    }

    pub fn group(alg: &Arc<Dahca>, w: SignedPerm) -> Result<Self> {
        alg.tag().wt.check_member(&w)?;
        Ok(Self::from_mid(alg, &Lin::basis((Eps::ONE, w))))
    }

    /// Simple reflection `s_k`.
    pub fn simple(alg: &Arc<Dahca>, k: usize) -> Result<Self> {
        Self::group(alg, alg.tag().wt.simple(k)?)
    }

    pub fn from_k(alg: &Arc<Dahca>, k: &KElem) -> Result<Self> {
        if k.weyl_type() != alg.tag().wt {
            return Err(Error::TagMismatch(k.weyl_type().to_string(), alg.tag().wt.to_string()));
        }
        Ok(Self::from_mid(alg, k.terms()))
    }

    pub fn from_x_poly(alg: &Arc<Dahca>, f: &Poly) -> Result<Self> {
        poly_elem(alg, f, true)
    }

    pub fn from_y_poly(alg: &Arc<Dahca>, f: &Poly) -> Result<Self> {
        poly_elem(alg, f, false)
    }
}

pub(crate) fn poly_elem<T: Triangular>(alg: &Arc<Pbw<T>>, f: &Poly, left: bool) -> Result<Elem<T>> {
    if f.n() != alg.n() {
        return Err(Error::RankMismatch(f.n(), alg.n()));
    }
    let one = alg.spec().mid_one();
    let terms = f.terms().map_keys(|e| {
        let m = if left {
            Mono { x: *e, mid: one.clone(), y: ZERO_EXPS }
        } else {
            Mono { x: ZERO_EXPS, mid: one.clone(), y: *e }
        };
        (1, m)
    });
    Ok(Elem::from_lin(alg, terms))
}

/// `[y_j, x_i]` as an algebra element.
pub fn dahca_bracket_yx(alg: &Arc<Dahca>, j: usize, i: usize) -> Result<DahcaElem> {
    Ok(DahcaElem::from_mid(alg, &bracket_yx(&alg.tag().wt, j, i)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedFormKind {
    /// `[y_i, f]` for `f` in the `x` variables.
    YVsXPoly,
    /// `[f, x_i]` for `f` in the `y` variables.
    YPolyVsX,
}

/// `Σ g(x) * c^e * w` with the polynomial on the left, already normal.
fn x_poly_times_k(g: &Poly, e: Eps, sign: i8, w: SignedPerm, coeff: &ParamPoly, out: &mut Lin<Mono<KMono>>) {
    for (a, c) in g.terms().iter() {
        out.add_signed(Mono { x: *a, mid: (e, w), y: ZERO_EXPS }, &(c * coeff), sign);
    }
}

pub(crate) fn check_i(alg_n: usize, i: usize) -> Result<()> {
    if i == 0 || i > alg_n {
        return Err(Error::IndexOutOfRange { index: i, max: alg_n });
    }
    Ok(())
}

/// `[y_i, f]` from divided differences of `f ∈ C[x]`.
pub fn comm_y_xpoly(alg: &Arc<Dahca>, i: usize, f: &Poly) -> Result<DahcaElem> {
    let wt = alg.tag().wt;
    let n = wt.n;
    check_i(n, i)?;
    if f.n() != n {
        return Err(Error::RankMismatch(f.n(), n));
    }
    let u = ParamPoly::u();
    let neg_u = -&u;
    let mut out = Lin::zero();
    for k in (1..=n).filter(|&k| k != i) {
        let dm = ddiff(f, i, k, DiffKind::Minus)?;
        let dp = ddiff(f, i, k, DiffKind::Plus)?;
        let (s, ck_ci) = Eps::single(k).mul(Eps::single(i));
        let ski = SignedPerm::transposition(n, k, i);
        x_poly_times_k(&dm, Eps::ONE, 1, ski, &neg_u, &mut out);
        x_poly_times_k(&dp, ck_ci, s, ski, &neg_u, &mut out);
        if wt.family != Family::A {
            let sbar = SignedPerm::signed_transposition(n, k, i);
            x_poly_times_k(&dp, Eps::ONE, 1, sbar, &neg_u, &mut out);
            x_poly_times_k(&dm, ck_ci, -s, sbar, &neg_u, &mut out);
        }
    }
    if wt.family == Family::B {
        let dt = ddiff(f, i, 0, DiffKind::Tau)?;
        let c = ParamPoly::v().scale(&-Cyc::sqrt2());
        x_poly_times_k(&dt, Eps::ONE, 1, SignedPerm::sign_change(n, i), &c, &mut out);
    }
    Ok(DahcaElem::from_lin(alg, out))
}

/// `[f, x_i]` from divided differences of `f ∈ C[y]`; the `y`-quotients sit
/// to the left of the `K` factors and are normal ordered by the engine.
pub fn comm_ypoly_x(alg: &Arc<Dahca>, f: &Poly, i: usize) -> Result<DahcaElem> {
    let wt = alg.tag().wt;
    let n = wt.n;
    check_i(n, i)?;
    if f.n() != n {
        return Err(Error::RankMismatch(f.n(), n));
    }
    let neg_u = -ParamPoly::u();
    let mut out = DahcaElem::zero(alg);
    for k in (1..=n).filter(|&k| k != i) {
        let dm = ddiff(f, i, k, DiffKind::Minus)?;
        let mut k1 = Lin::zero();
        add_clifford_pair(&mut k1, &neg_u, k, i, true, SignedPerm::transposition(n, k, i));
        out = out.add(&DahcaElem::from_y_poly(alg, &dm)?.mul(&DahcaElem::from_mid(alg, &k1))?)?;
        if wt.family != Family::A {
            let dp = ddiff(f, i, k, DiffKind::Plus)?;
            let mut k2 = Lin::zero();
            add_clifford_pair(&mut k2, &neg_u, k, i, false, SignedPerm::signed_transposition(n, k, i));
            out = out.add(&DahcaElem::from_y_poly(alg, &dp)?.mul(&DahcaElem::from_mid(alg, &k2))?)?;
        }
    }
    if wt.family == Family::B {
        let dt = ddiff(f, i, 0, DiffKind::Tau)?;
        let c = ParamPoly::v().scale(&-Cyc::sqrt2());
        let tau = Lin::term((Eps::ONE, SignedPerm::sign_change(n, i)), c);
        out = out.add(&DahcaElem::from_y_poly(alg, &dt)?.mul(&DahcaElem::from_mid(alg, &tau))?)?;
    }
    Ok(out)
}

pub fn comm_closed_form(alg: &Arc<Dahca>, kind: ClosedFormKind, f: &Poly, i: usize) -> Result<DahcaElem> {
    match kind {
        ClosedFormKind::YVsXPoly => comm_y_xpoly(alg, i, f),
        ClosedFormKind::YPolyVsX => comm_ypoly_x(alg, f, i),
    }
}

/// `(a^l - (s b)^l) / (a - s b)` expanded as `Σ_p a^p (s b)^{l-1-p}`.
pub(crate) fn geometric(n: usize, a: usize, b: usize, s: i8, l: u8) -> Poly {
    let mut out = Lin::zero();
    for p in 0..l {
        let q = l - 1 - p;
        let mut e = ZERO_EXPS;
        e[a - 1] += p;
        e[b - 1] += q;
        let sign = if s < 0 && q % 2 == 1 { -1 } else { 1 };
        out.add_signed(e, &ParamPoly::one(), sign);
    }
    Poly::from_lin(n, out)
}

/// `[y_i, x_j^l]` from the explicit power formulas.
pub fn comm_y_xpow(alg: &Arc<Dahca>, i: usize, j: usize, l: u8) -> Result<DahcaElem> {
    let wt = alg.tag().wt;
    let n = wt.n;
    check_i(n, i)?;
    check_i(n, j)?;
    let u = ParamPoly::u();
    let neg_u = -&u;
    let mut out = Lin::zero();
    let pairs: Vec<(usize, ParamPoly)> =
        if i != j { vec![(i, u.clone())] } else { (1..=n).filter(|&k| k != i).map(|k| (k, neg_u.clone())).collect() };
    for (k, coeff) in pairs {
        // h_minus = (x_j^l - x_k^l)/(x_j - x_k), h_plus = (x_j^l - (-x_k)^l)/(x_j + x_k)
        let hm = geometric(n, j, k, 1, l);
        let hp = geometric(n, j, k, -1, l);
        let (s, e) = if i != j { Eps::single(i).mul(Eps::single(j)) } else { Eps::single(k).mul(Eps::single(i)) };
        let r = SignedPerm::transposition(n, k, j);
        x_poly_times_k(&hm, Eps::ONE, 1, r, &coeff, &mut out);
        x_poly_times_k(&hp, e, s, r, &coeff, &mut out);
        if wt.family != Family::A {
            let rb = SignedPerm::signed_transposition(n, k, j);
            let sbar_coeff = if i != j { -&coeff } else { coeff.clone() };
            x_poly_times_k(&hp, Eps::ONE, 1, rb, &sbar_coeff, &mut out);
            x_poly_times_k(&hm, e, -s, rb, &sbar_coeff, &mut out);
        }
    }
    if wt.family == Family::B && i == j && l % 2 == 1 {
        // (x_i^l - (-x_i)^l) / (2 x_i) = x_i^{l-1} for odd l
        let mut e = ZERO_EXPS;
        e[i - 1] = l - 1;
        let c = ParamPoly::v().scale(&-Cyc::sqrt2());
        out.add_term(Mono { x: e, mid: (Eps::ONE, SignedPerm::sign_change(n, i)), y: ZERO_EXPS }, &c);
    }
    Ok(DahcaElem::from_lin(alg, out))
}

/// `[y_j^l, x_i]` from the explicit power formulas.
pub fn comm_ypow_x(alg: &Arc<Dahca>, j: usize, i: usize, l: u8) -> Result<DahcaElem> {
    let wt = alg.tag().wt;
    let n = wt.n;
    check_i(n, i)?;
    check_i(n, j)?;
    let u = ParamPoly::u();
    let mut out = DahcaElem::zero(alg);
    let pairs: Vec<(usize, ParamPoly)> =
        if i != j { vec![(i, u.clone())] } else { (1..=n).filter(|&k| k != i).map(|k| (k, -&u)).collect() };
    for (k, coeff) in pairs {
        let hm = geometric(n, j, k, 1, l);
        let mut k1 = Lin::zero();
        add_clifford_pair(&mut k1, &coeff, j, k, true, SignedPerm::transposition(n, k, j));
        if i == j {
            k1 = Lin::zero();
            add_clifford_pair(&mut k1, &coeff, k, i, true, SignedPerm::transposition(n, k, i));
        }
        out = out.add(&DahcaElem::from_y_poly(alg, &hm)?.mul(&DahcaElem::from_mid(alg, &k1))?)?;
        if wt.family != Family::A {
            let hp = geometric(n, j, k, -1, l);
            let mut k2 = Lin::zero();
            let sbar_coeff = if i != j { -&coeff } else { coeff.clone() };
            if i == j {
                add_clifford_pair(&mut k2, &sbar_coeff, k, i, false, SignedPerm::signed_transposition(n, k, i));
            } else {
                add_clifford_pair(&mut k2, &sbar_coeff, j, i, false, SignedPerm::signed_transposition(n, i, j));
            }
            out = out.add(&DahcaElem::from_y_poly(alg, &hp)?.mul(&DahcaElem::from_mid(alg, &k2))?)?;
        }
    }
    if wt.family == Family::B && i == j && l % 2 == 1 {
        let mut e = ZERO_EXPS;
        e[i - 1] = l - 1;
        let c = ParamPoly::v().scale(&-Cyc::sqrt2());
        let tau = Lin::term((Eps::ONE, SignedPerm::sign_change(n, i)), c);
        let yp = DahcaElem::right_monomial(alg, e);
        out = out.add(&yp.mul(&DahcaElem::from_mid(alg, &tau))?)?;
    }
    Ok(out)
}

/// `e_k(y)`: elementary symmetric polynomial in the `y` variables.
pub fn elementary_symmetric(n: usize, k: usize) -> Poly {
    let mut out = Lin::zero();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize == k {
            let mut e = ZERO_EXPS;
            for b in 0..n {
                if mask >> b & 1 == 1 {
                    e[b] = 1;
                }
            }
            out.add_term(e, &ParamPoly::one());
        }
    }
    Poly::from_lin(n, out)
}

/// `p_k(v^2) = Σ v_i^{2k}`.
pub fn power_sum_of_squares(n: usize, k: usize) -> Poly {
    let mut out = Lin::zero();
    for i in 1..=n {
        let mut e = unit_exps(i);
        e[i - 1] = (2 * k) as u8;
        out.add_term(e, &ParamPoly::one());
    }
    Poly::from_lin(n, out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(f: Family, n: usize) -> Arc<Dahca> {
        dahca(WeylType::new(f, n).unwrap())
    }

    #[test]
    fn bracket_examples() {
        let a = alg(Family::A, 2);
        let s = SignedPerm::transposition(2, 1, 2);
        let b = dahca_bracket_yx(&a, 2, 1).unwrap();
        let c1c2 = Eps::from_indices(&[1, 2]);
        let mut expect = Lin::term((Eps::ONE, s), ParamPoly::u());
        // u(1 + c2 c1) = u - u c1 c2
        expect.add_signed((c1c2, s), &ParamPoly::u(), -1);
        assert_eq!(b, DahcaElem::from_mid(&a, &expect));

        let bb = alg(Family::B, 2);
        let got = dahca_bracket_yx(&bb, 1, 1).unwrap();
        let sb = SignedPerm::signed_transposition(2, 1, 2);
        let neg_u = -ParamPoly::u();
        let mut expect = Lin::zero();
        // -u(1 + c2 c1) s - u(1 - c2 c1) sbar - √2 v τ1, with c2 c1 = -c1 c2
        expect.add_term((Eps::ONE, s), &neg_u);
        expect.add_signed((c1c2, s), &neg_u, -1);
        expect.add_term((Eps::ONE, sb), &neg_u);
        expect.add_signed((c1c2, sb), &neg_u, 1);
        expect.add_term((Eps::ONE, SignedPerm::sign_change(2, 1)), &ParamPoly::v().scale(&-Cyc::sqrt2()));
        assert_eq!(got, DahcaElem::from_mid(&bb, &expect));
    }

    #[test]
    fn product_examples() {
        let a = alg(Family::A, 2);
        let x1 = DahcaElem::x(&a, 1).unwrap();
        let y1 = DahcaElem::y(&a, 1).unwrap();
        let s = DahcaElem::simple(&a, 1).unwrap();
        let c1 = DahcaElem::c(&a, 1).unwrap();
        assert_eq!(y1.mul(&x1).unwrap().to_string(), "-u*w[2,1] + u*c1*c2*w[2,1] + x1*y1");
        assert_eq!(s.mul(&x1).unwrap(), DahcaElem::x(&a, 2).unwrap().mul(&s).unwrap());
        assert_eq!(s.mul(&x1).unwrap().to_string(), "x2*w[2,1]");
        assert_eq!(c1.mul(&x1).unwrap(), x1.mul(&c1).unwrap().neg());
    }

    #[test]
    fn degree_cap_is_enforced() {
        let a = dahca_with_cap(WeylType::new(Family::A, 2).unwrap(), 3);
        let x1 = DahcaElem::x(&a, 1).unwrap();
        let p = x1.pow(3).unwrap();
        assert!(matches!(p.mul(&x1), Err(Error::DegreeCap { .. })));
    }

    #[test]
    fn closed_form_examples() {
        let b = alg(Family::B, 2);
        let f = power_sum_of_squares(2, 1);
        assert!(comm_y_xpoly(&b, 1, &f).unwrap().is_zero());
        let a = alg(Family::A, 3);
        let e1 = elementary_symmetric(3, 1);
        assert!(comm_ypoly_x(&a, &e1, 1).unwrap().is_zero());
        // [y1, x2^2] in type A
        let a2 = alg(Family::A, 2);
        let got = comm_y_xpow(&a2, 1, 2, 2).unwrap();
        let engine = DahcaElem::y(&a2, 1).unwrap().commutator(&DahcaElem::x(&a2, 2).unwrap().pow(2).unwrap()).unwrap();
        assert_eq!(got, engine);
    }

    fn generators(a: &Arc<Dahca>) -> Vec<DahcaElem> {
        let wt = a.tag().wt;
        let mut g = Vec::new();
        for i in 1..=wt.n {
            g.push(DahcaElem::x(a, i).unwrap());
            g.push(DahcaElem::y(a, i).unwrap());
            g.push(DahcaElem::c(a, i).unwrap());
        }
        for k in 1..=wt.num_generators() {
            g.push(DahcaElem::simple(a, k).unwrap());
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
                        let lhs = pq.mul(r).unwrap();
                        let rhs = p.mul(&q.mul(r).unwrap()).unwrap();
                        assert_eq!(lhs, rhs, "{} {} {} in {:?}", p, q, r, a.tag().wt);
                    }
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
            let p = v1.pow(2).unwrap().mul(&v2).unwrap().add(&v2.scale(&ParamPoly::from_int(3))).unwrap();
            for i in 1..=n {
                let px = DahcaElem::from_x_poly(&a, &p).unwrap();
                let py = DahcaElem::from_y_poly(&a, &p).unwrap();
                let yi = DahcaElem::y(&a, i).unwrap();
                let xi = DahcaElem::x(&a, i).unwrap();
                assert_eq!(comm_y_xpoly(&a, i, &p).unwrap(), yi.commutator(&px).unwrap());
                assert_eq!(comm_ypoly_x(&a, &p, i).unwrap(), py.commutator(&xi).unwrap());
                for j in 1..=n {
                    for l in 1..=4u8 {
                        let xj = DahcaElem::x(&a, j).unwrap().pow(l as u32).unwrap();
                        let yj = DahcaElem::y(&a, j).unwrap().pow(l as u32).unwrap();
                        assert_eq!(comm_y_xpow(&a, i, j, l).unwrap(), yi.commutator(&xj).unwrap());
                        assert_eq!(comm_ypow_x(&a, j, i, l).unwrap(), yj.commutator(&xi).unwrap());
                    }
                }
            }
        }
    }
}
