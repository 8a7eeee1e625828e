//! Polynomial modules `C[x] ⊗ C_n`, `C[y] ⊗ C_n` and `C[y] ⊗ V`, with the
//! Dunkl-type operators through which the double affine algebras act.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::clifford::{Eps, KMono};
use crate::dahca::{DahcaElem, DahcaSpec};
use crate::error::{Error, Result};
use crate::lin::Lin;
use crate::pbw::{Elem, Mono};
pub use crate::poly::{ddiff, DiffKind};
use crate::poly::{exps_add, exps_degree, Exps, Poly, ZERO_EXPS};
use crate::scalars::{Cyc, ParamPoly};
use crate::sdaha::SdahaElem;
use crate::spin::{gamma, odd_reflection_signed, OddKind};
use crate::weyl::{Family, SignedPerm, WeylType};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ModuleKind {
    /// `C[x] ⊗ C_n`; `y` acts by Dunkl operators.
    DahcaX,
    /// `C[y] ⊗ C_n`; `x` acts by Dunkl operators.
    DahcaY,
    /// `C[y] ⊗ C_n` with `C_n` a `CW^-`-module via `T_w ↦ γ_w w`; `ξ` acts by
    /// Dunkl operators.
    SdahaY,
}

impl ModuleKind {
    pub fn var_name(self) -> &'static str {
        match self {
            ModuleKind::DahcaX => "x",
            _ => "y",
        }
    }
}

/// Element of a polynomial module, in the basis `v^a ⊗ c^eps`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyModElem {
    kind: ModuleKind,
    wt: WeylType,
    terms: Lin<(Exps, Eps)>,
}

impl PolyModElem {
    pub fn zero(kind: ModuleKind, wt: WeylType) -> Self {
        PolyModElem { kind, wt, terms: Lin::zero() }
    }

    pub fn basis(kind: ModuleKind, wt: WeylType, a: Exps, e: Eps) -> Self {
        PolyModElem { kind, wt, terms: Lin::basis((a, e)) }
    }

    /// `f ⊗ m`.
    pub fn tensor(kind: ModuleKind, wt: WeylType, f: &Poly, m: &crate::clifford::CliffordElem) -> Result<Self> {
        if f.n() != wt.n || m.n() != wt.n {
            return Err(Error::RankMismatch(f.n().max(m.n()), wt.n));
        }
        let mut out = Lin::zero();
        for (a, c) in f.terms().iter() {
            for (e, d) in m.terms().iter() {
                out.add_term((*a, *e), &(c * d));
            }
        }
        Ok(PolyModElem { kind, wt, terms: out })
    }

    pub fn from_lin(kind: ModuleKind, wt: WeylType, terms: Lin<(Exps, Eps)>) -> Self {
        PolyModElem { kind, wt, terms }
    }

    pub fn kind(&self) -> ModuleKind {
        self.kind
    }

    pub fn weyl_type(&self) -> WeylType {
        self.wt
    }

    pub fn terms(&self) -> &Lin<(Exps, Eps)> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(|(a, _)| exps_degree(a)).max().unwrap_or(0)
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.kind != o.kind || self.wt != o.wt {
            return Err(Error::TagMismatch(format!("{:?} {}", self.kind, self.wt), format!("{:?} {}", o.kind, o.wt)));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(PolyModElem { kind: self.kind, wt: self.wt, terms: &self.terms + &o.terms })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(PolyModElem { kind: self.kind, wt: self.wt, terms: &self.terms - &o.terms })
    }

    pub fn scale(&self, c: &ParamPoly) -> Self {
        PolyModElem { kind: self.kind, wt: self.wt, terms: self.terms.scale(c) }
    }

    fn with_terms(&self, terms: Lin<(Exps, Eps)>) -> Self {
        PolyModElem { kind: self.kind, wt: self.wt, terms }
    }

    /// Multiplication by the polynomial variable `v_i`.
    pub fn mul_var(&self, i: usize) -> Result<Self> {
        check_index(&self.wt, i)?;
        Ok(self.with_terms(self.terms.map_keys(|(a, e)| {
            let mut b = *a;
            b[i - 1] += 1;
            (1, (b, *e))
        })))
    }

    /// `K` acting diagonally on `C[x] ⊗ C_n` or `C[y] ⊗ C_n`.
    pub fn k_act(&self, k: &KMono) -> Result<Self> {
        if self.kind == ModuleKind::SdahaY {
            return Err(Error::TagMismatch("K action".into(), "CW^- module".into()));
        }
        self.wt.check_member(&k.1)?;
        let x_module = self.kind == ModuleKind::DahcaX;
        Ok(self.with_terms(self.terms.map_keys(|(a, m)| {
            let (s1, a1) = k.1.act_monomial(a);
            let (s2, m1) = m.act(&k.1);
            let s3 = if x_module { k.0.sign_past(&a1) } else { 1 };
            let (s4, m2) = k.0.mul(m1);
            (s1 * s2 * s3 * s4, (a1, m2))
        })))
    }

    /// `T_w` acting on `C[y] ⊗ V` by `f ⊗ v ↦ f^w ⊗ γ_w w(v)`.
    pub fn t_act(&self, w: &SignedPerm) -> Result<Self> {
        if self.kind != ModuleKind::SdahaY {
            return Err(Error::TagMismatch("T_w action".into(), format!("{:?}", self.kind)));
        }
        let g = gamma(&self.wt, w)?;
        let mut out = Lin::zero();
        for ((a, m), c) in self.terms.iter() {
            let (s1, a1) = w.act_monomial(a);
            let (s2, m1) = m.act(w);
            for (ge, gc) in g.terms().iter() {
                let (s3, m2) = ge.mul(m1);
                out.add_signed((a1, m2), &(c * gc), s1 * s2 * s3);
            }
        }
        Ok(self.with_terms(out))
    }

    fn t_act_signed(&self, sw: (i8, SignedPerm)) -> Result<Self> {
        let r = self.t_act(&sw.1)?;
        Ok(if sw.0 < 0 { r.scale(&ParamPoly::from_int(-1)) } else { r })
    }

    /// Applies `Σ g ⊗ op` where the operator acts on the `C_n` factor of a
    /// single term.
    fn poly_tensor(&self, g: &Poly, coeff: &ParamPoly, m: &PolyModElem) -> Lin<(Exps, Eps)> {
        let mut out = Lin::zero();
        for (b, cb) in g.terms().iter() {
            let cc = cb * coeff;
            for ((a, e), cm) in m.terms.iter() {
                out.add_term((exps_add(a, b), *e), &(&cc * cm));
            }
        }
        out
    }

    /// Splits into single terms `(f, c^eps)` with `f` a monomial polynomial.
    fn split(&self) -> Vec<(Poly, Eps)> {
        let n = self.wt.n;
        self.terms.iter().map(|((a, e), c)| (Poly::monomial(n, *a, c.clone()), *e)).collect()
    }

    fn unit(&self, e: Eps) -> Self {
        PolyModElem::basis(self.kind, self.wt, ZERO_EXPS, e)
    }

    /// Dunkl operator for `y_i` on `C[x] ⊗ C_n`.
    pub fn y_dunkl(&self, i: usize) -> Result<Self> {
        if self.kind != ModuleKind::DahcaX {
            return Err(Error::TagMismatch("y Dunkl operator".into(), format!("{:?}", self.kind)));
        }
        let wt = self.wt;
        let n = wt.n;
        check_index(&wt, i)?;
        let neg_u = -ParamPoly::u();
        let mut out = Lin::zero();
        for (f, e) in self.split() {
            let unit = self.unit(e);
            for k in (1..=n).filter(|&k| k != i) {
                let dm = ddiff(&f, i, k, DiffKind::Minus)?;
                let dp = ddiff(&f, i, k, DiffKind::Plus)?;
                let (s, ckci) = Eps::single(k).mul(Eps::single(i));
                let ski = SignedPerm::transposition(n, k, i);
                out.add_assign_lin(&self.poly_tensor(&dm, &neg_u, &unit.k_act(&(Eps::ONE, ski))?));
                let cc = unit.k_act(&(ckci, ski))?.scale(&ParamPoly::from_int(s as i64));
                out.add_assign_lin(&self.poly_tensor(&dp, &neg_u, &cc));
                if wt.family != Family::A {
                    let sbar = SignedPerm::signed_transposition(n, k, i);
                    out.add_assign_lin(&self.poly_tensor(&dp, &neg_u, &unit.k_act(&(Eps::ONE, sbar))?));
                    let cc = unit.k_act(&(ckci, sbar))?.scale(&ParamPoly::from_int(-s as i64));
                    out.add_assign_lin(&self.poly_tensor(&dm, &neg_u, &cc));
                }
            }
            if wt.family == Family::B {
                let dt = ddiff(&f, i, 0, DiffKind::Tau)?;
                let c = ParamPoly::v().scale(&-Cyc::sqrt2());
                out.add_assign_lin(&self.poly_tensor(
                    &dt,
                    &c,
                    &unit.k_act(&(Eps::ONE, SignedPerm::sign_change(n, i)))?,
                ));
            }
        }
        Ok(self.with_terms(out))
    }

    /// Dunkl operator for `x_i` on `C[y] ⊗ C_n`.
    pub fn x_dunkl(&self, i: usize) -> Result<Self> {
        if self.kind != ModuleKind::DahcaY {
            return Err(Error::TagMismatch("x Dunkl operator".into(), format!("{:?}", self.kind)));
        }
        let wt = self.wt;
        let n = wt.n;
        check_index(&wt, i)?;
        let u = ParamPoly::u();
        let mut out = Lin::zero();
        for (f, e) in self.split() {
            let unit = self.unit(e);
            for k in (1..=n).filter(|&k| k != i) {
                let (s, ckci) = Eps::single(k).mul(Eps::single(i));
                let ski = SignedPerm::transposition(n, k, i);
                // (1 + c_k c_i) s_ki m
                let km = unit
                    .k_act(&(Eps::ONE, ski))?
                    .add(&unit.k_act(&(ckci, ski))?.scale(&ParamPoly::from_int(s as i64)))?;
                let dm = ddiff(&f, i, k, DiffKind::Minus)?;
                out.add_assign_lin(&self.poly_tensor(&dm, &u, &km));
                if wt.family != Family::A {
                    let sbar = SignedPerm::signed_transposition(n, k, i);
                    let km = unit
                        .k_act(&(Eps::ONE, sbar))?
                        .sub(&unit.k_act(&(ckci, sbar))?.scale(&ParamPoly::from_int(s as i64)))?;
                    let dp = ddiff(&f, i, k, DiffKind::Plus)?;
                    out.add_assign_lin(&self.poly_tensor(&dp, &u, &km));
                }
            }
            if wt.family == Family::B {
                let dt = ddiff(&f, i, 0, DiffKind::Tau)?;
                let c = ParamPoly::v().scale(&Cyc::sqrt2());
                out.add_assign_lin(&self.poly_tensor(
                    &dt,
                    &c,
                    &unit.k_act(&(Eps::ONE, SignedPerm::sign_change(n, i)))?,
                ));
            }
        }
        Ok(self.with_terms(out))
    }

    /// Dunkl operator for `ξ_i` on `C[y] ⊗ V`.
    pub fn xi_dunkl(&self, i: usize) -> Result<Self> {
        if self.kind != ModuleKind::SdahaY {
            return Err(Error::TagMismatch("xi Dunkl operator".into(), format!("{:?}", self.kind)));
        }
        let wt = self.wt;
        let n = wt.n;
        check_index(&wt, i)?;
        let u = ParamPoly::u();
        let neg_u = -&u;
        let mut out = Lin::zero();
        for (f, e) in self.split() {
            let unit = self.unit(e);
            for k in (1..=n).filter(|&k| k != i) {
                let dm = ddiff(&f, i, k, DiffKind::Minus)?;
                let tv = unit.t_act_signed(odd_reflection_signed(&wt, OddKind::Tij, k, i)?)?;
                out.add_assign_lin(&self.poly_tensor(&dm, &u, &tv));
                if wt.family != Family::A {
                    let dp = ddiff(&f, i, k, DiffKind::Plus)?;
                    let tv = unit.t_act_signed(odd_reflection_signed(&wt, OddKind::TbarIj, k, i)?)?;
                    out.add_assign_lin(&self.poly_tensor(&dp, &neg_u, &tv));
                }
            }
            if wt.family == Family::B {
                let dt = ddiff(&f, i, 0, DiffKind::Tau)?;
                let tv = unit.t_act_signed(odd_reflection_signed(&wt, OddKind::TbarI, i, 0)?)?;
                out.add_assign_lin(&self.poly_tensor(&dt, &-ParamPoly::v(), &tv));
            }
        }
        Ok(self.with_terms(out))
    }
}

fn check_index(wt: &WeylType, i: usize) -> Result<()> {
    if i == 0 || i > wt.n {
        return Err(Error::IndexOutOfRange { index: i, max: wt.n });
    }
    Ok(())
}

impl fmt::Display for PolyModElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.wt.n;
        let mut order: Vec<_> = self.terms.iter().collect();
        order.sort_by_key(|((a, e), _)| (exps_degree(a), std::cmp::Reverse(*a), e.degree(), *e));
        let name = self.kind.var_name();
        crate::text::write_sum(
            f,
            order.into_iter().map(|((a, e), c)| {
                let p = crate::text::exps_text(name, &a[..n]).join("*");
                let p = if p.is_empty() { "1".to_string() } else { p };
                (c, format!("{} (x) {}", p, e))
            }),
        )
    }
}

/// Applies `x^a`, `y^b` generators rightmost first.
fn apply_vars(
    m: PolyModElem,
    a: &Exps,
    n: usize,
    op: impl Fn(&PolyModElem, usize) -> Result<PolyModElem>,
) -> Result<PolyModElem> {
    let mut cur = m;
    for i in (1..=n).rev() {
        for _ in 0..a[i - 1] {
            cur = op(&cur, i)?;
        }
    }
    Ok(cur)
}

fn act_mono_dahca(mono: &Mono<KMono>, m: &PolyModElem) -> Result<PolyModElem> {
    let n = m.wt.n;
    match m.kind {
        ModuleKind::DahcaX => {
            let r = apply_vars(m.clone(), &mono.y, n, |p, i| p.y_dunkl(i))?;
            let r = r.k_act(&mono.mid)?;
            apply_vars(r, &mono.x, n, |p, i| p.mul_var(i))
        }
        ModuleKind::DahcaY => {
            let r = apply_vars(m.clone(), &mono.y, n, |p, i| p.mul_var(i))?;
            let r = r.k_act(&mono.mid)?;
            apply_vars(r, &mono.x, n, |p, i| p.x_dunkl(i))
        }
        ModuleKind::SdahaY => Err(Error::TagMismatch("dahca".into(), "CW^- module".into())),
    }
}

/// Action of a Hecke-Clifford algebra element on `C[x] ⊗ C_n` or
/// `C[y] ⊗ C_n`.
pub fn dunkl_act(a: &DahcaElem, m: &PolyModElem) -> Result<PolyModElem> {
    if a.tag().wt != m.wt {
        return Err(Error::TagMismatch(a.tag().wt.to_string(), m.wt.to_string()));
    }
    let mut out = PolyModElem::zero(m.kind, m.wt);
    for (mono, c) in a.terms().iter() {
        out = out.add(&act_mono_dahca(mono, m)?.scale(c))?;
    }
    Ok(out)
}

/// Action of a spin algebra element on `C[y] ⊗ V`.
pub fn dunkl_act_sdaha(a: &SdahaElem, m: &PolyModElem) -> Result<PolyModElem> {
    if a.tag().wt != m.wt {
        return Err(Error::TagMismatch(a.tag().wt.to_string(), m.wt.to_string()));
    }
    if m.kind != ModuleKind::SdahaY {
        return Err(Error::TagMismatch("sdaha".into(), format!("{:?}", m.kind)));
    }
    let n = m.wt.n;
    let mut out = PolyModElem::zero(m.kind, m.wt);
    for (mono, c) in a.terms().iter() {
        let r = apply_vars(m.clone(), &mono.y, n, |p, i| p.mul_var(i))?;
        let r = r.t_act(&mono.mid)?;
        let r = apply_vars(r, &mono.x, n, |p, i| p.xi_dunkl(i))?;
        out = out.add(&r.scale(c))?;
    }
    Ok(out)
}

/// Outcome of the exact rank computation for PBW monomials acting on a
/// truncated polynomial module.
#[derive(Clone, Debug, Serialize)]
pub struct FaithfulnessReport {
    pub weyl_type: String,
    pub module: ModuleKind,
    pub monomial_degree: usize,
    pub module_degree: usize,
    pub monomials: usize,
    pub input_dimension: usize,
    pub rank: usize,
    /// Nonzero algebra elements acting as zero, in canonical text.
    pub kernel: Vec<String>,
}

impl FaithfulnessReport {
    pub fn injective(&self) -> bool {
        self.rank == self.monomials
    }
}

/// Exponent vectors in `n` variables of total degree `<= d`.
pub(crate) fn exps_up_to(n: usize, d: usize) -> Vec<Exps> {
    fn go(n: usize, i: usize, left: usize, cur: &mut Exps, out: &mut Vec<Exps>) {
        if i == n {
            out.push(*cur);
            return;
        }
        for e in 0..=left {
            cur[i] = e as u8;
            go(n, i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    go(n, 0, d, &mut ZERO_EXPS.clone(), &mut out);
    out.sort_by_key(|e| (exps_degree(e), std::cmp::Reverse(*e)));
    out
}

/// All PBW monomials `x^a c^eps w y^b` with `|a| + |b| <= degree`.
pub fn dahca_monomials(wt: &WeylType, degree: usize) -> Vec<Mono<KMono>> {
    let n = wt.n;
    let group = wt.group();
    let mut out = Vec::new();
    let polys = exps_up_to(2 * n, degree);
    for e in &polys {
        let mut a = ZERO_EXPS;
        let mut b = ZERO_EXPS;
        a[..n].copy_from_slice(&e[..n]);
        b[..n].copy_from_slice(&e[n..2 * n]);
        for eps in 0u16..(1 << n) {
            for w in group.elements() {
                out.push(Mono { x: a, mid: (Eps(eps), *w), y: b });
            }
        }
    }
    out
}

type RowKey = (usize, Exps, Eps);

fn specialize(c: &ParamPoly, u: &Cyc, v: &Cyc) -> Cyc {
    let s = c.specialize(Some(&Cyc::zero()), Some(u), Some(v));
    s.as_constant().unwrap_or_else(Cyc::zero)
}

/// Exact rank of the PBW monomials of degree `<= monomial_degree` as
/// operators on `C[y] ⊗ C_n` (or `C[x] ⊗ C_n`) restricted to inputs of
/// degree `<= module_degree`, with `u`, `v` specialized.
pub fn faithfulness_probe(
    alg: &std::sync::Arc<crate::dahca::Dahca>,
    kind: ModuleKind,
    monomial_degree: usize,
    module_degree: usize,
    u: &Cyc,
    v: &Cyc,
) -> Result<FaithfulnessReport> {
    if kind == ModuleKind::SdahaY {
        return Err(Error::TagMismatch("dahca".into(), "CW^- module".into()));
    }
    let wt = alg.tag().wt;
    let n = wt.n;
    let monos = dahca_monomials(&wt, monomial_degree);
    let mut inputs = Vec::new();
    for a in exps_up_to(n, module_degree) {
        for eps in 0u16..(1 << n) {
            inputs.push(PolyModElem::basis(kind, wt, a, Eps(eps)));
        }
    }
    // rows carry their combination of monomials so kernel vectors come out
    let mut pivots: BTreeMap<RowKey, (BTreeMap<RowKey, Cyc>, BTreeMap<usize, Cyc>)> = BTreeMap::new();
    let mut kernel = Vec::new();
    let mut rank = 0;
    for (idx, mono) in monos.iter().enumerate() {
        let mut row: BTreeMap<RowKey, Cyc> = BTreeMap::new();
        for (k, m) in inputs.iter().enumerate() {
            let img = act_mono_dahca(mono, m)?;
            for ((a, e), c) in img.terms().iter() {
                let c = specialize(c, u, v);
                if !c.is_zero() {
                    row.insert((k, *a, *e), c);
                }
            }
        }
        let mut combo: BTreeMap<usize, Cyc> = BTreeMap::from([(idx, Cyc::one())]);
        loop {
            let Some((&lead, lc)) = row.iter().next() else {
                kernel.push(combo);
                break;
            };
            match pivots.get(&lead) {
                Some((prow, pcombo)) => {
                    let f = lc.clone();
                    axpy(&mut row, &f, prow);
                    axpy(&mut combo, &f, pcombo);
                }
                None => {
                    let inv = lc.inv()?;
                    let row: BTreeMap<RowKey, Cyc> = row.into_iter().map(|(k, c)| (k, &c * &inv)).collect();
                    let combo: BTreeMap<usize, Cyc> = combo.into_iter().map(|(k, c)| (k, &c * &inv)).collect();
                    pivots.insert(lead, (row, combo));
                    rank += 1;
                    break;
                }
            }
        }
    }
    let kernel = kernel
        .into_iter()
        .map(|combo| {
            let mut terms = Lin::zero();
            for (k, c) in combo {
                terms.add_term(monos[k].clone(), &ParamPoly::constant(c));
            }
            Elem::<DahcaSpec>::from_lin(alg, terms).to_string()
        })
        .collect();
    Ok(FaithfulnessReport {
        weyl_type: wt.to_string(),
        module: kind,
        monomial_degree,
        module_degree,
        monomials: monos.len(),
        input_dimension: inputs.len(),
        rank,
        kernel,
    })
}

/// `row -= f * other`, dropping zeros.
fn axpy<K: Ord + Clone>(row: &mut BTreeMap<K, Cyc>, f: &Cyc, other: &BTreeMap<K, Cyc>) {
    for (k, c) in other {
        let d = f * c;
        let entry = row.entry(k.clone()).or_insert_with(Cyc::zero);
        *entry = entry.clone() - d;
        if entry.is_zero() {
            row.remove(k);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::CliffordElem;
    use crate::dahca::{bracket_yx, dahca};
    use crate::sdaha::sdaha;

    fn ty(f: Family, n: usize) -> WeylType {
        WeylType::new(f, n).unwrap()
    }

    #[test]
    fn sdaha_xi_example() {
        let wt = ty(Family::A, 2);
        let s = sdaha(wt);
        let v = CliffordElem::gen(2, 1).unwrap();
        let m = PolyModElem::tensor(ModuleKind::SdahaY, wt, &Poly::var(2, 2).unwrap(), &v).unwrap();
        let got = dunkl_act_sdaha(&SdahaElem::xi(&s, 1).unwrap(), &m).unwrap();
        let one = PolyModElem::tensor(ModuleKind::SdahaY, wt, &Poly::one(2), &v).unwrap();
        let expect = dunkl_act_sdaha(&SdahaElem::t(&s, 1).unwrap(), &one).unwrap().scale(&ParamPoly::u());
        assert_eq!(got, expect);
    }

    #[test]
    fn dahca_y_example_matches_bracket() {
        let wt = ty(Family::B, 2);
        let d = dahca(wt);
        let m = CliffordElem::gen(2, 2).unwrap();
        let x1m = PolyModElem::tensor(ModuleKind::DahcaX, wt, &Poly::var(2, 1).unwrap(), &m).unwrap();
        let got = dunkl_act(&DahcaElem::y(&d, 1).unwrap(), &x1m).unwrap();
        let one = PolyModElem::tensor(ModuleKind::DahcaX, wt, &Poly::one(2), &m).unwrap();
        let k = DahcaElem::from_mid(&d, &bracket_yx(&wt, 1, 1).unwrap());
        assert_eq!(got, dunkl_act(&k, &one).unwrap());
    }

    #[test]
    fn trivial_actions() {
        let wt = ty(Family::D, 4);
        let d = dahca(wt);
        let m = PolyModElem::basis(ModuleKind::DahcaX, wt, ZERO_EXPS, Eps::from_indices(&[1, 3]));
        assert_eq!(dunkl_act(&DahcaElem::one(&d), &m).unwrap(), m);
        assert!(dunkl_act(&DahcaElem::y(&d, 2).unwrap(), &m).unwrap().is_zero());
        assert!(m.x_dunkl(1).is_err());
    }

    #[test]
    fn module_axiom_on_generators() {
        for (f, n) in [(Family::A, 3), (Family::B, 2), (Family::D, 4)] {
            let wt = ty(f, n);
            let d = dahca(wt);
            let mut gens = Vec::new();
            for i in 1..=n {
                gens.push(DahcaElem::x(&d, i).unwrap());
                gens.push(DahcaElem::y(&d, i).unwrap());
                gens.push(DahcaElem::c(&d, i).unwrap());
            }
            for k in 1..=wt.num_generators() {
                gens.push(DahcaElem::simple(&d, k).unwrap());
            }
            let mut e1 = ZERO_EXPS;
            e1[0] = 2;
            e1[1] = 1;
            for kind in [ModuleKind::DahcaX, ModuleKind::DahcaY] {
                let m = PolyModElem::basis(kind, wt, e1, Eps::from_indices(&[2]));
                for a in &gens {
                    for b in &gens {
                        let lhs = dunkl_act(&a.mul(b).unwrap(), &m).unwrap();
                        let rhs = dunkl_act(a, &dunkl_act(b, &m).unwrap()).unwrap();
                        assert_eq!(lhs, rhs, "{} {} on {:?} {}", a, b, kind, wt);
                    }
                }
            }
            let s = sdaha(wt);
            let mut gens = Vec::new();
            for i in 1..=n {
                gens.push(SdahaElem::xi(&s, i).unwrap());
                gens.push(SdahaElem::y(&s, i).unwrap());
            }
            for k in 1..=wt.num_generators() {
                gens.push(SdahaElem::t(&s, k).unwrap());
            }
            let m = PolyModElem::basis(ModuleKind::SdahaY, wt, e1, Eps::from_indices(&[1]));
            for a in &gens {
                for b in &gens {
                    let lhs = dunkl_act_sdaha(&a.mul(b).unwrap(), &m).unwrap();
                    let rhs = dunkl_act_sdaha(a, &dunkl_act_sdaha(b, &m).unwrap()).unwrap();
                    assert_eq!(lhs, rhs, "{} {} in {}", a, b, wt);
                }
            }
        }
    }

    #[test]
    fn monomial_enumeration_counts() {
        let wt = ty(Family::A, 2);
        assert_eq!(exps_up_to(4, 3).len(), 35);
        assert_eq!(exps_up_to(2, 5).len(), 21);
        assert_eq!(dahca_monomials(&wt, 3).len(), 280);
    }
}
