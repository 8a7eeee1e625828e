//! Spin Weyl group algebra `CW^-` (basis `T_w`), the double cover `W~`, odd
//! reflections, and the finite superalgebra isomorphism
//! `C_n ⋊ CW ≅ C_n ⊗ CW^-`.
//!
//! `T_w` is the product of the generators `t_a` along the canonical reduced
//! word of `w`. The cocycle `α(w, w')` with `T_w T_w' = α T_{ww'}` is read off
//! from the Clifford transport `T_w ↦ γ_w w` rather than from a table.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::clifford::{beta, k_mono_mul, CliffordElem, Eps, KElem, KMono};
use crate::error::{Error, Result};
use crate::lin::Lin;
use crate::scalars::{Cyc, ParamPoly};
use crate::weyl::{Family, SignedPerm, WeylType};

/// Per-type caches for `γ_w`, the cocycle and the images `Φ(w)`.
struct SpinData {
    wt: WeylType,
    gammas: RwLock<HashMap<SignedPerm, Arc<Lin<Eps>>>>,
    alphas: RwLock<HashMap<(SignedPerm, SignedPerm), i8>>,
    phis: RwLock<HashMap<SignedPerm, Arc<Lin<(Eps, SignedPerm)>>>>,
    betas: Vec<Lin<Eps>>,
}

fn spin_data(wt: &WeylType) -> Arc<SpinData> {
    static CACHE: OnceLock<Mutex<HashMap<WeylType, Arc<SpinData>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    guard
        .entry(*wt)
        .or_insert_with(|| {
            let betas = (1..=wt.num_generators()).map(|a| beta(wt, a).expect("generator").terms().clone()).collect();
            Arc::new(SpinData {
                wt: *wt,
                gammas: RwLock::new(HashMap::new()),
                alphas: RwLock::new(HashMap::new()),
                phis: RwLock::new(HashMap::new()),
                betas,
            })
        })
        .clone()
}

fn cl_mul(a: &Lin<Eps>, b: &Lin<Eps>) -> Lin<Eps> {
    let mut out = Lin::zero();
    for (x, cx) in a.iter() {
        for (y, cy) in b.iter() {
            let (s, e) = x.mul(*y);
            out.add_signed(e, &(cx * cy), s);
        }
    }
    out
}

fn cl_act(a: &Lin<Eps>, w: &SignedPerm) -> Lin<Eps> {
    a.map_keys(|e| e.act(w))
}

impl SpinData {
    fn gamma(&self, w: &SignedPerm) -> Arc<Lin<Eps>> {
        if let Some(g) = self.gammas.read().unwrap().get(w) {
            return g.clone();
        }
        let group = self.wt.group();
        let word = group.word(w);
        let g = if word.is_empty() {
            Lin::basis(Eps::ONE)
        } else {
            // w = s_a w', γ_w = √-1 β_a s_a(γ_{w'})
            let a = word[0];
            let sa = group.generators()[a - 1];
            let rest = sa.mul(w);
            let tail = self.gamma(&rest);
            cl_mul(&self.betas[a - 1], &cl_act(&tail, &sa)).scale_cyc(&Cyc::i())
        };
        let g = Arc::new(g);
        self.gammas.write().unwrap().insert(*w, g.clone());
        g
    }

    fn alpha(&self, w: &SignedPerm, w2: &SignedPerm) -> Result<i8> {
        if w.is_identity() || w2.is_identity() {
            return Ok(1);
        }
        if let Some(&a) = self.alphas.read().unwrap().get(&(*w, *w2)) {
            return Ok(a);
        }
        let lhs = cl_mul(&self.gamma(w), &cl_act(&self.gamma(w2), w));
        let rhs = self.gamma(&w.mul(w2));
        let a = if lhs == *rhs {
            1
        } else if lhs == -&*rhs {
            -1
        } else {
            return Err(Error::Invariant(format!("γ transport for ({}, {}) is not ±γ", w, w2)));
        };
        self.alphas.write().unwrap().insert((*w, *w2), a);
        Ok(a)
    }

    /// `Φ(w)` as an element of `C_n ⊗ CW^-`, built from `s_a ↦ -√-1 β_a ⊗ t_a`.
    fn phi_group(&self, w: &SignedPerm) -> Arc<Lin<(Eps, SignedPerm)>> {
        if let Some(p) = self.phis.read().unwrap().get(w) {
            return p.clone();
        }
        let group = self.wt.group();
        let word = group.word(w);
        let p = if word.is_empty() {
            Lin::basis((Eps::ONE, *w))
        } else {
            let a = word[0];
            let sa = group.generators()[a - 1];
            let gen: Lin<(Eps, SignedPerm)> = self.betas[a - 1].map_keys(|e| (1, (*e, sa))).scale_cyc(&-Cyc::i());
            let rest = self.phi_group(&sa.mul(w));
            tensor_lin_mul(self, &gen, &rest).expect("cocycle")
        };
        let p = Arc::new(p);
        self.phis.write().unwrap().insert(*w, p.clone());
        p
    }
}

fn tensor_lin_mul(
    data: &SpinData,
    a: &Lin<(Eps, SignedPerm)>,
    b: &Lin<(Eps, SignedPerm)>,
) -> Result<Lin<(Eps, SignedPerm)>> {
    let group = data.wt.group();
    let mut out = Lin::zero();
    for ((e1, w1), c1) in a.iter() {
        let l1 = group.length(w1) as u32;
        for ((e2, w2), c2) in b.iter() {
            let mut s = if l1 % 2 == 1 && e2.parity() == 1 { -1 } else { 1 };
            let (s2, e) = e1.mul(*e2);
            s *= s2 * data.alpha(w1, w2)?;
            out.add_signed((e, w1.mul(w2)), &(c1 * c2), s);
        }
    }
    Ok(out)
}

/// `γ_w ∈ C_n`, defined by `Ψ(T_w) = γ_w w`.
pub fn gamma(wt: &WeylType, w: &SignedPerm) -> Result<CliffordElem> {
    wt.check_member(w)?;
    Ok(CliffordElem::from_lin(wt.n, spin_data(wt).gamma(w).as_ref().clone()))
}

/// The sign `α(w, w')` with `T_w T_w' = α(w, w') T_{ww'}`.
pub fn cocycle(wt: &WeylType, w: &SignedPerm, w2: &SignedPerm) -> Result<i8> {
    wt.check_member(w)?;
    wt.check_member(w2)?;
    spin_data(wt).alpha(w, w2)
}

/// Handle on the per-type cocycle cache, avoiding the global lookup.
#[derive(Clone)]
pub(crate) struct Cocycle(Arc<SpinData>);

impl Cocycle {
    pub(crate) fn new(wt: &WeylType) -> Self {
        Cocycle(spin_data(wt))
    }

    pub(crate) fn alpha(&self, w: &SignedPerm, w2: &SignedPerm) -> i8 {
        self.0.alpha(w, w2).expect("cocycle transport")
    }
}

impl fmt::Debug for Cocycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cocycle({})", self.0.wt)
    }
}

/// Element of `CW^-` in the basis `T_w`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpinElem {
    wt: WeylType,
    terms: Lin<SignedPerm>,
}

impl SpinElem {
    pub fn zero(wt: WeylType) -> Self {
        SpinElem { wt, terms: Lin::zero() }
    }

    pub fn one(wt: WeylType) -> Self {
        SpinElem { wt, terms: Lin::basis(SignedPerm::identity(wt.n)) }
    }

    /// `T_w`.
    pub fn basis(wt: WeylType, w: SignedPerm) -> Result<Self> {
        wt.check_member(&w)?;
        Ok(SpinElem { wt, terms: Lin::basis(w) })
    }

    /// Generator `t_a`.
    pub fn gen(wt: WeylType, a: usize) -> Result<Self> {
        Self::basis(wt, wt.simple(a)?)
    }

    pub fn from_lin(wt: WeylType, terms: Lin<SignedPerm>) -> Self {
        SpinElem { wt, terms }
    }

    pub fn weyl_type(&self) -> WeylType {
        self.wt
    }

    pub fn terms(&self) -> &Lin<SignedPerm> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.wt != o.wt {
            return Err(Error::TagMismatch(self.wt.to_string(), o.wt.to_string()));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(SpinElem { wt: self.wt, terms: &self.terms + &o.terms })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(SpinElem { wt: self.wt, terms: &self.terms - &o.terms })
    }

    pub fn scale(&self, c: &ParamPoly) -> Self {
        SpinElem { wt: self.wt, terms: self.terms.scale(c) }
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let data = spin_data(&self.wt);
        let mut out = Lin::zero();
        for (w1, c1) in self.terms.iter() {
            for (w2, c2) in o.terms.iter() {
                out.add_signed(w1.mul(w2), &(c1 * c2), data.alpha(w1, w2)?);
            }
        }
        Ok(SpinElem { wt: self.wt, terms: out })
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = Self::one(self.wt);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Single-term elements `±T_w` as `(sign, w)`.
    pub fn as_signed_basis(&self) -> Option<(i8, SignedPerm)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (w, c) = self.terms.iter().next()?;
        if c.is_one() {
            Some((1, *w))
        } else if (-c).is_one() {
            Some((-1, *w))
        } else {
            None
        }
    }
}

impl fmt::Display for SpinElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::text::write_sum(
            f,
            self.terms.iter().map(|(w, c)| (c, if w.is_identity() { String::new() } else { format!("t{}", w) })),
        )
    }
}

/// Product of generators `t_{a1} ... t_{ak}` as `±T_w`.
pub fn word_product(wt: &WeylType, word: &[usize]) -> Result<(i8, SignedPerm)> {
    let data = spin_data(wt);
    let mut sign = 1i8;
    let mut w = SignedPerm::identity(wt.n);
    for &a in word {
        let sa = wt.simple(a)?;
        sign *= data.alpha(&w, &sa)?;
        w = w.mul(&sa);
    }
    Ok((sign, w))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OddKind {
    /// `[i,j]`
    Tij,
    /// `overline{[i,j]}`
    TbarIj,
    /// `overline{[i]}`
    TbarI,
}

fn up(i: usize, j: usize) -> Vec<usize> {
    if i <= j {
        (i..=j).collect()
    } else {
        Vec::new()
    }
}

fn down(i: usize, j: usize) -> Vec<usize> {
    if i >= j {
        (j..=i).rev().collect()
    } else {
        Vec::new()
    }
}

/// Defining word and sign exponent of an odd reflection, for `i < j`
/// (`j` unused for `TbarI`).
fn odd_word(wt: &WeylType, kind: OddKind, i: usize, j: usize) -> Result<(usize, Vec<usize>)> {
    let n = wt.n;
    match kind {
        OddKind::Tij => {
            let mut w = down(j - 1, i);
            w.extend(up(i + 1, j - 1));
            Ok((j - i - 1, w))
        }
        OddKind::TbarIj => {
            let mut w = up(j, n - 1);
            w.extend(up(i, n.saturating_sub(2)));
            let (e, mid) = match wt.family {
                Family::D => (j - i - 1, vec![n]),
                Family::B => (j - i, vec![n, n - 1, n]),
                Family::A => return Err(Error::Unavailable("overline[i,j]".into(), wt.to_string())),
            };
            w.extend(mid);
            if n >= 2 {
                w.extend(down(n - 2, i));
            }
            w.extend(down(n - 1, j));
            Ok((e, w))
        }
        OddKind::TbarI => {
            if wt.family != Family::B {
                return Err(Error::Unavailable("overline[i]".into(), wt.to_string()));
            }
            let mut w = up(i, n - 1);
            w.push(n);
            w.extend(down(n - 1, i));
            Ok((n - i, w))
        }
    }
}

fn check_pair(wt: &WeylType, kind: OddKind, i: usize, j: usize) -> Result<()> {
    let n = wt.n;
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, max: n });
    }
    if kind != OddKind::TbarI {
        if j == 0 || j > n {
            return Err(Error::IndexOutOfRange { index: j, max: n });
        }
        if i == j {
            return Err(Error::Unavailable(format!("odd reflection with i = j = {}", i), wt.to_string()));
        }
    }
    Ok(())
}

/// Odd reflection as `(sign, w)` meaning `sign * T_w`.
pub fn odd_reflection_signed(wt: &WeylType, kind: OddKind, i: usize, j: usize) -> Result<(i8, SignedPerm)> {
    check_pair(wt, kind, i, j)?;
    let (lo, hi, flip) = if kind != OddKind::TbarI && i > j { (j, i, kind == OddKind::Tij) } else { (i, j, false) };
    let (e, word) = odd_word(wt, kind, lo, hi)?;
    let (s, w) = word_product(wt, &word)?;
    let mut sign = if e % 2 == 1 { -s } else { s };
    if flip {
        sign = -sign;
    }
    Ok((sign, w))
}

pub fn odd_reflection(wt: &WeylType, kind: OddKind, i: usize, j: usize) -> Result<SpinElem> {
    let (s, w) = odd_reflection_signed(wt, kind, i, j)?;
    Ok(SpinElem::basis(*wt, w)?.scale(&ParamPoly::from_int(s as i64)))
}

/// Element `z^e w~` of the double cover, where `w~` is the product of the
/// `t~_a` along the canonical word of `w`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoverElem {
    pub z: bool,
    pub w: SignedPerm,
}

impl CoverElem {
    pub fn identity(n: usize) -> Self {
        CoverElem { z: false, w: SignedPerm::identity(n) }
    }

    pub fn central_z(n: usize) -> Self {
        CoverElem { z: true, w: SignedPerm::identity(n) }
    }

    pub fn lift(w: SignedPerm) -> Self {
        CoverElem { z: false, w }
    }

    pub fn times_z(self) -> Self {
        CoverElem { z: !self.z, w: self.w }
    }

    /// Group law `(e,w)(e',w') = (e + e' + [α(w,w') = -1], ww')`.
    pub fn mul(&self, wt: &WeylType, o: &CoverElem) -> Result<CoverElem> {
        wt.check_member(&self.w)?;
        wt.check_member(&o.w)?;
        let a = spin_data(wt).alpha(&self.w, &o.w)?;
        Ok(CoverElem { z: self.z ^ o.z ^ (a < 0), w: self.w.mul(&o.w) })
    }

    pub fn inverse(&self, wt: &WeylType) -> Result<CoverElem> {
        let winv = self.w.inverse();
        let a = spin_data(wt).alpha(&self.w, &winv)?;
        Ok(CoverElem { z: self.z ^ (a < 0), w: winv })
    }

    /// Image in `CW^-` (`z ↦ -1`) as `(sign, w)`.
    pub fn to_spin(&self) -> (i8, SignedPerm) {
        (if self.z { -1 } else { 1 }, self.w)
    }
}

impl fmt::Display for CoverElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.z, self.w.is_identity()) {
            (false, true) => write!(f, "1"),
            (true, true) => write!(f, "z"),
            (false, false) => write!(f, "wt{}", self.w),
            (true, false) => write!(f, "z*wt{}", self.w),
        }
    }
}

impl fmt::Debug for CoverElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CoverKind {
    /// `{i,j}`
    Brace,
    /// `overline{{i,j}}`
    BraceBar,
    /// `{i}`
    BraceI,
}

/// Distinguished preimage of a reflection in `W~`.
pub fn cover_lift(wt: &WeylType, kind: CoverKind, i: usize, j: usize) -> Result<CoverElem> {
    let odd = match kind {
        CoverKind::Brace => OddKind::Tij,
        CoverKind::BraceBar => OddKind::TbarIj,
        CoverKind::BraceI => OddKind::TbarI,
    };
    check_pair(wt, odd, i, j)?;
    let (lo, hi, flip) = if kind == CoverKind::Brace && i > j {
        (j, i, true)
    } else if kind == CoverKind::BraceBar && i > j {
        (j, i, false)
    } else {
        (i, j, false)
    };
    let (e, word) = odd_word(wt, odd, lo, hi)?;
    let mut g = CoverElem::identity(wt.n);
    for a in word {
        g = g.mul(wt, &CoverElem::lift(wt.simple(a)?))?;
    }
    if (e % 2 == 1) ^ flip {
        g = g.times_z();
    }
    Ok(g)
}

/// Element of `C_n ⊗ CW^-` in the basis `c^eps ⊗ T_w`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorElem {
    wt: WeylType,
    terms: Lin<(Eps, SignedPerm)>,
}

impl TensorElem {
    pub fn zero(wt: WeylType) -> Self {
        TensorElem { wt, terms: Lin::zero() }
    }

    pub fn one(wt: WeylType) -> Self {
        Self::basis(wt, Eps::ONE, SignedPerm::identity(wt.n))
    }

    pub fn basis(wt: WeylType, e: Eps, w: SignedPerm) -> Self {
        TensorElem { wt, terms: Lin::basis((e, w)) }
    }

    pub fn from_lin(wt: WeylType, terms: Lin<(Eps, SignedPerm)>) -> Self {
        TensorElem { wt, terms }
    }

    pub fn weyl_type(&self) -> WeylType {
        self.wt
    }

    pub fn terms(&self) -> &Lin<(Eps, SignedPerm)> {
        &self.terms
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.wt != o.wt {
            return Err(Error::TagMismatch(self.wt.to_string(), o.wt.to_string()));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(TensorElem { wt: self.wt, terms: &self.terms + &o.terms })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(TensorElem { wt: self.wt, terms: &self.terms - &o.terms })
    }

    pub fn scale(&self, c: &ParamPoly) -> Self {
        TensorElem { wt: self.wt, terms: self.terms.scale(c) }
    }

    /// `(a ⊗ b)(a' ⊗ b') = (-1)^{|b||a'|} aa' ⊗ bb'`.
    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let data = spin_data(&self.wt);
        Ok(TensorElem { wt: self.wt, terms: tensor_lin_mul(&data, &self.terms, &o.terms)? })
    }
}

impl fmt::Display for TensorElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::text::write_sum(
            f,
            self.terms.iter().map(|((e, w), c)| {
                let mut parts = Vec::new();
                if e.0 != 0 {
                    parts.push(e.to_string());
                }
                if !w.is_identity() {
                    parts.push(format!("t{}", w));
                }
                (c, parts.join(" (x) "))
            }),
        )
    }
}

/// `Φ: C_n ⋊ CW → C_n ⊗ CW^-`, identity on `C_n`, `s_a ↦ -√-1 β_a ⊗ t_a`.
pub fn phi_finite(a: &KElem) -> Result<TensorElem> {
    let wt = a.weyl_type();
    let data = spin_data(&wt);
    let mut out = Lin::zero();
    for ((e, w), c) in a.terms().iter() {
        wt.check_member(w)?;
        let left = Lin::term((*e, SignedPerm::identity(wt.n)), c.clone());
        out.add_assign_lin(&tensor_lin_mul(&data, &left, &data.phi_group(w))?);
    }
    Ok(TensorElem { wt, terms: out })
}

/// Image `Φ(w)` of a group element, used by the double affine map.
pub(crate) fn phi_of_group(wt: &WeylType, w: &SignedPerm) -> Arc<Lin<(Eps, SignedPerm)>> {
    spin_data(wt).phi_group(w)
}

/// `Ψ = Φ^{-1}`: `c^eps ⊗ T_w ↦ c^eps γ_w w`.
pub fn psi_finite(a: &TensorElem) -> Result<KElem> {
    let wt = a.weyl_type();
    let data = spin_data(&wt);
    let mut out: Lin<KMono> = Lin::zero();
    for ((e, w), c) in a.terms().iter() {
        wt.check_member(w)?;
        for (g, cg) in data.gamma(w).iter() {
            let (s, m) = k_mono_mul(&(*e, SignedPerm::identity(wt.n)), &(*g, *w));
            out.add_signed(m, &(c * cg), s);
        }
    }
    Ok(KElem::from_lin(wt, out))
}

/// `Ψ(T_w) = γ_w w` as K-monomials, used by the double affine map.
pub(crate) fn psi_of_spin(wt: &WeylType, w: &SignedPerm) -> Lin<KMono> {
    spin_data(wt).gamma(w).map_keys(|g| (1, (*g, *w)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(f: Family, n: usize) -> WeylType {
        WeylType::new(f, n).unwrap()
    }

    fn t(wt: WeylType, a: usize) -> SpinElem {
        SpinElem::gen(wt, a).unwrap()
    }

    #[test]
    fn gamma_small_cases() {
        let a = ty(Family::A, 3);
        assert_eq!(gamma(&a, &SignedPerm::identity(3)).unwrap(), CliffordElem::one(3));
        let s1 = a.simple(1).unwrap();
        assert_eq!(gamma(&a, &s1).unwrap(), beta(&a, 1).unwrap().scale(&Cyc::i()));
        let s1s2 = s1.mul(&a.simple(2).unwrap());
        let c13 = CliffordElem::gen(3, 1)
            .unwrap()
            .sub(&CliffordElem::gen(3, 3).unwrap())
            .unwrap()
            .scale(&Cyc::sqrt2().inv().unwrap());
        let expect = beta(&a, 1).unwrap().mul(&c13).unwrap().scale(&Cyc::from_int(-1));
        assert_eq!(gamma(&a, &s1s2).unwrap(), expect);
    }

    #[test]
    fn table_relations_examples() {
        let a = ty(Family::A, 4);
        assert_eq!(t(a, 1).mul(&t(a, 1)).unwrap(), SpinElem::one(a));
        let t13 = t(a, 1).mul(&t(a, 3)).unwrap();
        assert_eq!(t13.pow(2).unwrap(), SpinElem::one(a).scale(&ParamPoly::from_int(-1)));
        let s1 = a.simple(1).unwrap();
        let s3 = a.simple(3).unwrap();
        assert_eq!(cocycle(&a, &s1, &s3).unwrap() * cocycle(&a, &s3, &s1).unwrap(), -1);
        let b = ty(Family::B, 3);
        let p = t(b, 2).mul(&t(b, 3)).unwrap();
        assert_eq!(p.pow(4).unwrap(), SpinElem::one(b).scale(&ParamPoly::from_int(-1)));
    }

    #[test]
    fn odd_reflection_examples() {
        let a = ty(Family::A, 3);
        assert_eq!(odd_reflection(&a, OddKind::Tij, 1, 2).unwrap(), t(a, 1));
        assert_eq!(odd_reflection(&a, OddKind::Tij, 2, 1).unwrap(), t(a, 1).scale(&ParamPoly::from_int(-1)));
        let b = ty(Family::B, 3);
        assert_eq!(odd_reflection(&b, OddKind::TbarI, 3, 0).unwrap(), t(b, 3));
        assert!(odd_reflection(&a, OddKind::TbarI, 1, 0).is_err());
        let d = ty(Family::D, 4);
        assert_eq!(odd_reflection(&d, OddKind::TbarIj, 3, 4).unwrap(), t(d, 4));
    }

    #[test]
    fn odd_reflections_are_involutions_over_the_right_reflection() {
        for wt in [ty(Family::A, 4), ty(Family::B, 4), ty(Family::D, 4)] {
            let n = wt.n;
            for i in 1..=n {
                for j in 1..=n {
                    if i == j {
                        continue;
                    }
                    let r = odd_reflection(&wt, OddKind::Tij, i, j).unwrap();
                    assert_eq!(r.mul(&r).unwrap(), SpinElem::one(wt));
                    let (_, w) = r.as_signed_basis().unwrap();
                    assert_eq!(w, SignedPerm::transposition(n, i, j));
                    if wt.family != Family::A {
                        let r = odd_reflection(&wt, OddKind::TbarIj, i, j).unwrap();
                        assert_eq!(r.mul(&r).unwrap(), SpinElem::one(wt));
                        assert_eq!(r.as_signed_basis().unwrap().1, SignedPerm::signed_transposition(n, i, j));
                    }
                }
                if wt.family == Family::B {
                    let r = odd_reflection(&wt, OddKind::TbarI, i, 0).unwrap();
                    assert_eq!(r.mul(&r).unwrap(), SpinElem::one(wt));
                    assert_eq!(r.as_signed_basis().unwrap().1, SignedPerm::sign_change(n, i));
                }
            }
        }
    }

    #[test]
    fn tensor_koszul_examples() {
        let a = ty(Family::A, 2);
        let s = a.simple(1).unwrap();
        let id = SignedPerm::identity(2);
        let c1 = TensorElem::basis(a, Eps::single(1), id);
        let t1 = TensorElem::basis(a, Eps::ONE, s);
        assert_eq!(c1.mul(&c1).unwrap(), TensorElem::one(a));
        assert_eq!(t1.mul(&c1).unwrap(), TensorElem::basis(a, Eps::single(1), s).scale(&ParamPoly::from_int(-1)));
        assert_eq!(t1.mul(&t1).unwrap(), TensorElem::one(a));
    }

    #[test]
    fn finite_isomorphism_examples() {
        let b = ty(Family::B, 3);
        let sn = b.simple(3).unwrap();
        let img = phi_finite(&KElem::group_elem(b, sn).unwrap()).unwrap();
        let expect = TensorElem::basis(b, Eps::single(3), sn).scale(&ParamPoly::constant(-Cyc::i()));
        assert_eq!(img, expect);

        let a = ty(Family::A, 2);
        let s = a.simple(1).unwrap();
        let x = KElem::basis(a, Eps::single(2), s).sub(&KElem::basis(a, Eps::single(1), s)).unwrap();
        let expect = TensorElem::basis(a, Eps::ONE, s).scale(&ParamPoly::constant(Cyc::sqrt_m2()));
        assert_eq!(phi_finite(&x).unwrap(), expect);

        let c1s = KElem::basis(a, Eps::single(1), s);
        assert_eq!(psi_finite(&phi_finite(&c1s).unwrap()).unwrap(), c1s);
    }

    #[test]
    fn cover_lifts_project_correctly() {
        let b = ty(Family::B, 3);
        let g = cover_lift(&b, CoverKind::Brace, 1, 3).unwrap();
        assert_eq!(g.w, SignedPerm::transposition(3, 1, 3));
        let (s, w) = g.to_spin();
        assert_eq!((s, w), odd_reflection_signed(&b, OddKind::Tij, 1, 3).unwrap());
        let g = cover_lift(&b, CoverKind::BraceI, 2, 0).unwrap();
        assert_eq!(g.to_spin(), odd_reflection_signed(&b, OddKind::TbarI, 2, 0).unwrap());
        let g31 = cover_lift(&b, CoverKind::Brace, 3, 1).unwrap();
        assert_eq!(g31, cover_lift(&b, CoverKind::Brace, 1, 3).unwrap().times_z());
    }
}
