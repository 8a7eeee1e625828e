//! The Clifford algebra `C_n` (`c_i^2 = 1`, `c_i c_j = -c_j c_i`), its action
//! by signed permutations, the normalized root elements `beta_i`, and the
//! semidirect product `K = C_n ⋊ CW`.

use std::fmt;

use crate::error::{Error, Result};
use crate::lin::Lin;
use crate::scalars::{Cyc, ParamPoly};
use crate::weyl::{Family, SignedPerm, WeylType};

/// Clifford monomial `c^eps`, factors in ascending index order; bit `i-1`
/// stands for `c_i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Eps(pub u16);

impl Eps {
    pub const ONE: Eps = Eps(0);

    pub fn single(i: usize) -> Eps {
        Eps(1 << (i - 1))
    }

    pub fn from_indices(idx: &[usize]) -> Eps {
        Eps(idx.iter().fold(0u16, |m, &i| m | (1 << (i - 1))))
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0 >> (i - 1) & 1 == 1
    }

    pub fn degree(&self) -> u32 {
        self.0.count_ones()
    }

    /// Z/2 grading.
    pub fn parity(&self) -> u32 {
        self.0.count_ones() & 1
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..16).filter(move |b| self.0 >> b & 1 == 1).map(|b| b + 1)
    }

    /// `c^a c^b = sign * c^(a xor b)`.
    pub fn mul(self, b: Eps) -> (i8, Eps) {
        let mut swaps = 0u32;
        let mut bb = b.0;
        while bb != 0 {
            let j = bb.trailing_zeros();
            swaps += (self.0 >> (j + 1)).count_ones();
            bb &= bb - 1;
        }
        (if swaps % 2 == 0 { 1 } else { -1 }, Eps(self.0 ^ b.0))
    }

    /// `w(c^eps) = sign * c^eps'` under `c_i -> sigma c_j` for `w(e_i) = sigma e_j`.
    pub fn act(self, w: &SignedPerm) -> (i8, Eps) {
        let mut sign = 1i8;
        let mut images: Vec<usize> = Vec::with_capacity(self.degree() as usize);
        for i in self.indices() {
            let (j, s) = w.image(i);
            sign *= s;
            images.push(j);
        }
        let mut inv = 0;
        for a in 0..images.len() {
            for b in a + 1..images.len() {
                if images[a] > images[b] {
                    inv += 1;
                }
            }
        }
        if inv % 2 == 1 {
            sign = -sign;
        }
        (sign, Eps::from_indices(&images))
    }

    /// Sign picked up when `c^eps` is moved past `x^a` (with `x_i c_i = -c_i x_i`).
    pub fn sign_past(&self, exps: &[u8]) -> i8 {
        let odd = self.indices().filter(|&i| exps[i - 1] % 2 == 1).count();
        if odd % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Eps {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.indices().map(|i| format!("c{}", i)).collect();
        write!(f, "{}", parts.join("*"))
    }
}

impl fmt::Debug for Eps {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Element of `C_n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CliffordElem {
    n: usize,
    terms: Lin<Eps>,
}

impl CliffordElem {
    pub fn zero(n: usize) -> Self {
        CliffordElem { n, terms: Lin::zero() }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(n, Eps::ONE)
    }

    pub fn monomial(n: usize, e: Eps) -> Self {
        CliffordElem { n, terms: Lin::basis(e) }
    }

    pub fn gen(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, max: n });
        }
        Ok(Self::monomial(n, Eps::single(i)))
    }

    pub fn from_lin(n: usize, terms: Lin<Eps>) -> Self {
        CliffordElem { n, terms }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &Lin<Eps> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn scale(&self, c: &Cyc) -> Self {
        CliffordElem { n: self.n, terms: self.terms.scale_cyc(c) }
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        check_rank(self.n, o.n)?;
        Ok(CliffordElem { n: self.n, terms: &self.terms + &o.terms })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        check_rank(self.n, o.n)?;
        Ok(CliffordElem { n: self.n, terms: &self.terms - &o.terms })
    }

    /// Product in `C_n`.
    pub fn mul(&self, o: &Self) -> Result<Self> {
        check_rank(self.n, o.n)?;
        let mut out = Lin::zero();
        for (a, ca) in self.terms.iter() {
            for (b, cb) in o.terms.iter() {
                let (s, e) = a.mul(*b);
                out.add_signed(e, &(ca * cb), s);
            }
        }
        Ok(CliffordElem { n: self.n, terms: out })
    }

    /// Image under the automorphism induced by `w`.
    pub fn act(&self, w: &SignedPerm) -> Result<Self> {
        check_rank(self.n, w.n())?;
        Ok(CliffordElem { n: self.n, terms: self.terms.map_keys(|e| e.act(w)) })
    }

    /// Whether all terms share one parity; returns it.
    pub fn parity(&self) -> Option<u32> {
        let mut p = None;
        for e in self.terms.keys() {
            match p {
                None => p = Some(e.parity()),
                Some(q) if q != e.parity() => return None,
                _ => {}
            }
        }
        p
    }
}

impl fmt::Display for CliffordElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::text::write_sum(f, self.terms.iter().map(|(e, c)| (c, e.to_string())))
    }
}

fn check_rank(a: usize, b: usize) -> Result<()> {
    if a != b {
        Err(Error::RankMismatch(a, b))
    } else {
        Ok(())
    }
}

/// Normalized root element `beta_i` (`beta_i^2 = 1`).
pub fn beta(wt: &WeylType, i: usize) -> Result<CliffordElem> {
    let g = wt.num_generators();
    if i == 0 || i > g {
        return Err(Error::IndexOutOfRange { index: i, max: g });
    }
    let n = wt.n;
    let inv_sqrt2 = Cyc::sqrt2().inv()?;
    if i < n {
        let d = CliffordElem::gen(n, i)?.sub(&CliffordElem::gen(n, i + 1)?)?;
        return Ok(d.scale(&inv_sqrt2));
    }
    match wt.family {
        Family::B => CliffordElem::gen(n, n),
        Family::D => Ok(CliffordElem::gen(n, n - 1)?.add(&CliffordElem::gen(n, n)?)?.scale(&inv_sqrt2)),
        Family::A => unreachable!(),
    }
}

/// Basis monomial `c^eps w` of `K = C_n ⋊ CW`.
pub type KMono = (Eps, SignedPerm);

/// `(c^a w)(c^b w') = sign * c^(a xor w(b)) (w w')`.
pub fn k_mono_mul(a: &KMono, b: &KMono) -> (i8, KMono) {
    let (s1, eb) = b.0.act(&a.1);
    let (s2, e) = a.0.mul(eb);
    (s1 * s2, (e, a.1.mul(&b.1)))
}

/// Element of `K = C_n ⋊ CW`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KElem {
    wt: WeylType,
    terms: Lin<KMono>,
}

impl KElem {
    pub fn zero(wt: WeylType) -> Self {
        KElem { wt, terms: Lin::zero() }
    }

    pub fn one(wt: WeylType) -> Self {
        Self::basis(wt, Eps::ONE, SignedPerm::identity(wt.n))
    }

    pub fn basis(wt: WeylType, e: Eps, w: SignedPerm) -> Self {
        KElem { wt, terms: Lin::basis((e, w)) }
    }

    pub fn from_lin(wt: WeylType, terms: Lin<KMono>) -> Self {
        KElem { wt, terms }
    }

    pub fn group_elem(wt: WeylType, w: SignedPerm) -> Result<Self> {
        wt.check_member(&w)?;
        Ok(Self::basis(wt, Eps::ONE, w))
    }

    pub fn clifford(wt: WeylType, c: &CliffordElem) -> Result<Self> {
        check_rank(wt.n, c.n())?;
        let id = SignedPerm::identity(wt.n);
        Ok(KElem { wt, terms: c.terms().map_keys(|e| (1, (*e, id))) })
    }

    pub fn weyl_type(&self) -> WeylType {
        self.wt
    }

    pub fn terms(&self) -> &Lin<KMono> {
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
        Ok(KElem { wt: self.wt, terms: &self.terms + &o.terms })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(KElem { wt: self.wt, terms: &self.terms - &o.terms })
    }

    pub fn scale(&self, c: &ParamPoly) -> Self {
        KElem { wt: self.wt, terms: self.terms.scale(c) }
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let mut out = Lin::zero();
        for (a, ca) in self.terms.iter() {
            for (b, cb) in o.terms.iter() {
                let (s, m) = k_mono_mul(a, b);
                out.add_signed(m, &(ca * cb), s);
            }
        }
        Ok(KElem { wt: self.wt, terms: out })
    }
}

impl fmt::Display for KElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::text::write_sum(
            f,
            self.terms.iter().map(|((e, w), c)| {
                let mut parts = Vec::new();
                if e.0 != 0 {
                    parts.push(e.to_string());
                }
                if !w.is_identity() {
                    parts.push(format!("w{}", w));
                }
                (c, parts.join("*"))
            }),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: usize, idx: &[usize]) -> CliffordElem {
        CliffordElem::monomial(n, Eps::from_indices(idx))
    }

    #[test]
    fn monomial_products() {
        assert_eq!(c(3, &[1]).mul(&c(3, &[1])).unwrap(), CliffordElem::one(3));
        assert_eq!(c(3, &[1, 2]).mul(&c(3, &[2])).unwrap(), c(3, &[1]));
        assert_eq!(c(3, &[1, 2]).mul(&c(3, &[1, 3])).unwrap(), c(3, &[2, 3]).scale(&Cyc::from_int(-1)));
        assert!(c(2, &[1]).mul(&c(3, &[1])).is_err());
    }

    #[test]
    fn weyl_action_examples() {
        let s12 = SignedPerm::transposition(2, 1, 2);
        assert_eq!(c(2, &[1]).act(&s12).unwrap(), c(2, &[2]));
        let t1 = SignedPerm::sign_change(2, 1);
        assert_eq!(c(2, &[1]).act(&t1).unwrap(), c(2, &[1]).scale(&Cyc::from_int(-1)));
        let sb = SignedPerm::signed_transposition(2, 1, 2);
        assert_eq!(c(2, &[1]).act(&sb).unwrap(), c(2, &[2]).scale(&Cyc::from_int(-1)));
    }

    #[test]
    fn beta_squares_to_one() {
        for (f, ns) in [(Family::A, 2..=4), (Family::B, 2..=4), (Family::D, 4..=4)] {
            for n in ns {
                let wt = WeylType::new(f, n).unwrap();
                for i in 1..=wt.num_generators() {
                    let b = beta(&wt, i).unwrap();
                    assert_eq!(b.mul(&b).unwrap(), CliffordElem::one(n), "{} beta_{}", wt, i);
                }
            }
        }
    }

    #[test]
    fn beta_values() {
        let b = WeylType::new(Family::B, 3).unwrap();
        assert_eq!(beta(&b, 3).unwrap(), c(3, &[3]));
        let d = WeylType::new(Family::D, 4).unwrap();
        let expect = c(4, &[3]).add(&c(4, &[4])).unwrap().scale(&Cyc::sqrt2().inv().unwrap());
        assert_eq!(beta(&d, 4).unwrap(), expect);
    }

    #[test]
    fn k_products() {
        let wt = WeylType::new(Family::A, 2).unwrap();
        let s = SignedPerm::transposition(2, 1, 2);
        let c1s = KElem::basis(wt, Eps::single(1), s);
        // (c1 s12)(c1 s12) = c1 s12(c1) = c1 c2
        assert_eq!(c1s.mul(&c1s).unwrap(), KElem::basis(wt, Eps::from_indices(&[1, 2]), SignedPerm::identity(2)));
        // s12 c1 = c2 s12
        let sk = KElem::group_elem(wt, s).unwrap();
        let c1 = KElem::basis(wt, Eps::single(1), SignedPerm::identity(2));
        assert_eq!(sk.mul(&c1).unwrap(), KElem::basis(wt, Eps::single(2), s));
        assert_eq!(c1.mul(&c1).unwrap(), KElem::one(wt));
    }
}
