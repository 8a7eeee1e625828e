//! Classical Weyl groups of types A, B, D realized as signed permutations.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hard cap on the rank handled by the group machinery.
pub const MAX_N: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    D,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::D => "D",
        };
        write!(f, "{}", s)
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "D" | "d" => Ok(Family::D),
            other => Err(Error::Unavailable(format!("family `{}`", other), "A/B/D".into())),
        }
    }
}

/// A classical Weyl group: `S_n` (type A, natural representation), `W(B_n)` or
/// `W(D_n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeylType {
    pub family: Family,
    pub n: usize,
}

impl WeylType {
    /// Validated constructor. Type D needs `n >= 4`; see [`WeylType::new_small_d`].
    pub fn new(family: Family, n: usize) -> Result<Self> {
        let min = match family {
            Family::A => 1,
            Family::B => 2,
            Family::D => 4,
        };
        if n < min || n > MAX_N {
            return Err(Error::UnsupportedRank { family: family.to_string(), n });
        }
        Ok(WeylType { family, n })
    }

    /// Like [`WeylType::new`] but admits the reducible/degenerate ranks
    /// `D_2`, `D_3`, used for testing only.
    pub fn new_small_d(family: Family, n: usize) -> Result<Self> {
        if family == Family::D && (2..4).contains(&n) {
            return Ok(WeylType { family, n });
        }
        Self::new(family, n)
    }

    /// Number of Coxeter generators.
    pub fn num_generators(&self) -> usize {
        match self.family {
            Family::A => self.n - 1,
            Family::B | Family::D => self.n,
        }
    }

    /// Coxeter matrix entry `m_ij` for generators `1 <= i, j <= num_generators`.
    pub fn coxeter_m(&self, i: usize, j: usize) -> usize {
        if i == j {
            return 1;
        }
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        let n = self.n;
        match self.family {
            Family::A => {
                if b - a == 1 {
                    3
                } else {
                    2
                }
            }
            Family::B => {
                if b == n {
                    if a == n - 1 {
                        4
                    } else {
                        2
                    }
                } else if b - a == 1 {
                    3
                } else {
                    2
                }
            }
            Family::D => {
                if b == n {
                    if n >= 3 && a == n - 2 {
                        3
                    } else {
                        2
                    }
                } else if b - a == 1 {
                    3
                } else {
                    2
                }
            }
        }
    }

    /// The k-th simple reflection, `1 <= k <= num_generators`.
    pub fn simple(&self, k: usize) -> Result<SignedPerm> {
        let g = self.num_generators();
        if k == 0 || k > g {
            return Err(Error::IndexOutOfRange { index: k, max: g });
        }
        let n = self.n;
        if k < n {
            return Ok(SignedPerm::transposition(n, k, k + 1));
        }
        match self.family {
            Family::B => Ok(SignedPerm::sign_change(n, n)),
            Family::D => Ok(SignedPerm::signed_transposition(n, n - 1, n)),
            Family::A => unreachable!(),
        }
    }

    pub fn contains(&self, w: &SignedPerm) -> bool {
        if w.n() != self.n {
            return false;
        }
        let neg = w.negative_count();
        match self.family {
            Family::A => neg == 0,
            Family::B => true,
            Family::D => neg % 2 == 0,
        }
    }

    pub fn check_member(&self, w: &SignedPerm) -> Result<()> {
        if w.n() != self.n {
            return Err(Error::RankMismatch(w.n(), self.n));
        }
        if !self.contains(w) {
            return Err(Error::NotMember(w.to_string(), self.to_string()));
        }
        Ok(())
    }

    pub fn reflection(&self, kind: ReflectionKind, i: usize, j: usize) -> Result<SignedPerm> {
        let n = self.n;
        let check = |k: usize| {
            if k == 0 || k > n {
                Err(Error::IndexOutOfRange { index: k, max: n })
            } else {
                Ok(())
            }
        };
        match kind {
            ReflectionKind::Sij => {
                check(i)?;
                check(j)?;
                if i == j {
                    return Err(Error::Unavailable("s_ii".into(), self.to_string()));
                }
                Ok(SignedPerm::transposition(n, i, j))
            }
            ReflectionKind::SbarIj => {
                check(i)?;
                check(j)?;
                if self.family == Family::A {
                    return Err(Error::Unavailable("sbar_ij".into(), self.to_string()));
                }
                if i == j {
                    return Err(Error::Unavailable("sbar_ii".into(), self.to_string()));
                }
                Ok(SignedPerm::signed_transposition(n, i, j))
            }
            ReflectionKind::TauI => {
                check(i)?;
                if self.family != Family::B {
                    return Err(Error::Unavailable("tau_i".into(), self.to_string()));
                }
                Ok(SignedPerm::sign_change(n, i))
            }
            ReflectionKind::Simple => self.simple(i),
        }
    }

    /// Cached group data (elements, lengths, canonical words).
    pub fn group(&self) -> Arc<WeylGroup> {
        static CACHE: OnceLock<Mutex<HashMap<WeylType, Arc<WeylGroup>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(g) = cache.lock().unwrap().get(self) {
            return g.clone();
        }
        let built = Arc::new(WeylGroup::build(*self));
        cache.lock().unwrap().entry(*self).or_insert(built).clone()
    }

    pub fn reduced_word(&self, w: &SignedPerm) -> Result<Vec<usize>> {
        self.check_member(w)?;
        Ok(self.group().word(w).to_vec())
    }

    pub fn length(&self, w: &SignedPerm) -> Result<usize> {
        self.check_member(w)?;
        Ok(self.group().length(w))
    }
}

impl fmt::Display for WeylType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A => write!(f, "A{} (S_{})", self.n.saturating_sub(1), self.n),
            _ => write!(f, "{}{}", self.family, self.n),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReflectionKind {
    /// Transposition `(i, j)`.
    Sij,
    /// Transposition coupled with sign changes at `i` and `j`.
    SbarIj,
    /// Sign change at `i`.
    TauI,
    /// Simple reflection `s_i`.
    Simple,
}

/// A signed permutation: `w(e_i) = sign * e_j`, stored as `img[i-1] = ±j`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm {
    n: u8,
    img: [i8; MAX_N],
}

impl SignedPerm {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_N);
        let mut img = [0i8; MAX_N];
        for (i, slot) in img.iter_mut().enumerate().take(n) {
            *slot = i as i8 + 1;
        }
        SignedPerm { n: n as u8, img }
    }

    /// Builds from a window `[±p1, ..., ±pn]`.
    pub fn from_window(window: &[i32]) -> Result<Self> {
        let n = window.len();
        if n > MAX_N {
            return Err(Error::UnsupportedRank { family: "signed permutation".into(), n });
        }
        let mut seen = [false; MAX_N];
        let mut img = [0i8; MAX_N];
        for (i, &v) in window.iter().enumerate() {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a - 1] {
                return Err(Error::NotMember(format!("{:?}", window), "signed permutations".into()));
            }
            seen[a - 1] = true;
            img[i] = v as i8;
        }
        Ok(SignedPerm { n: n as u8, img })
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut w = Self::identity(n);
        w.img[i - 1] = j as i8;
        w.img[j - 1] = i as i8;
        w
    }

    pub fn signed_transposition(n: usize, i: usize, j: usize) -> Self {
        let mut w = Self::identity(n);
        w.img[i - 1] = -(j as i8);
        w.img[j - 1] = -(i as i8);
        w
    }

    pub fn sign_change(n: usize, i: usize) -> Self {
        let mut w = Self::identity(n);
        w.img[i - 1] = -(i as i8);
        w
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn window(&self) -> Vec<i32> {
        self.img[..self.n()].iter().map(|&v| v as i32).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.img[..self.n()].iter().enumerate().all(|(i, &v)| v == i as i8 + 1)
    }

    pub fn negative_count(&self) -> usize {
        self.img[..self.n()].iter().filter(|&&v| v < 0).count()
    }

    /// `w(e_i) = sign * e_j`, returned as `(j, sign)`; indices are 1-based.
    pub fn act(&self, i: usize) -> Result<(usize, i8)> {
        if i == 0 || i > self.n() {
            return Err(Error::IndexOutOfRange { index: i, max: self.n() });
        }
        Ok(self.image(i))
    }

    /// Unchecked 1-based action.
    #[inline]
    pub fn image(&self, i: usize) -> (usize, i8) {
        let v = self.img[i - 1];
        (v.unsigned_abs() as usize, if v < 0 { -1 } else { 1 })
    }

    /// `(self ∘ other)(e_i) = self(other(e_i))`.
    pub fn compose(&self, other: &SignedPerm) -> Result<SignedPerm> {
        if self.n != other.n {
            return Err(Error::RankMismatch(self.n(), other.n()));
        }
        Ok(self.mul(other))
    }

    /// Unchecked composition `self ∘ other`.
    pub fn mul(&self, other: &SignedPerm) -> SignedPerm {
        let mut img = [0i8; MAX_N];
        for (i, slot) in img.iter_mut().enumerate().take(self.n()) {
            let (j, s) = other.image(i + 1);
            let (k, t) = self.image(j);
            *slot = (k as i8) * s * t;
        }
        SignedPerm { n: self.n, img }
    }

    pub fn inverse(&self) -> SignedPerm {
        let mut img = [0i8; MAX_N];
        for i in 1..=self.n() {
            let (j, s) = self.image(i);
            img[j - 1] = i as i8 * s;
        }
        SignedPerm { n: self.n, img }
    }

    /// Underlying permutation with the signs dropped.
    pub fn abs_image(&self, i: usize) -> usize {
        self.img[i - 1].unsigned_abs() as usize
    }

    /// Applies the action to an exponent vector of a commutative monomial:
    /// `w(x^a) = sign * x^{a'}`.
    pub fn act_monomial(&self, exps: &[u8]) -> (i8, [u8; MAX_N]) {
        let mut out = [0u8; MAX_N];
        let mut sign = 1i8;
        for i in 1..=self.n() {
            let e = exps[i - 1];
            if e == 0 {
                continue;
            }
            let (j, s) = self.image(i);
            out[j - 1] = e;
            if s < 0 && e % 2 == 1 {
                sign = -sign;
            }
        }
        (sign, out)
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, v) in self.window().iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v)?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Enumerated group with Coxeter lengths and canonical reduced words.
///
/// The canonical word of `w` is the lexicographically least among its
/// shortest words in the simple reflections, read left to right as
/// `w = s_{a1} s_{a2} ... s_{aL}`.
pub struct WeylGroup {
    wtype: WeylType,
    gens: Vec<SignedPerm>,
    elements: Vec<SignedPerm>,
    index: HashMap<SignedPerm, usize>,
    lengths: Vec<usize>,
    words: Vec<Vec<usize>>,
}

impl WeylGroup {
    fn build(wtype: WeylType) -> Self {
        let gens: Vec<SignedPerm> =
            (1..=wtype.num_generators()).map(|k| wtype.simple(k).expect("valid generator")).collect();
        let id = SignedPerm::identity(wtype.n);
        let mut elements = vec![id];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut lengths = vec![0usize];
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            let w = elements[k];
            for g in &gens {
                let gw = g.mul(&w);
                if !index.contains_key(&gw) {
                    index.insert(gw, elements.len());
                    elements.push(gw);
                    lengths.push(lengths[k] + 1);
                    queue.push_back(elements.len() - 1);
                }
            }
        }
        // Elements are in BFS order, so every s_a w of smaller length is
        // finished before w.
        let mut words: Vec<Vec<usize>> = Vec::with_capacity(elements.len());
        for (k, w) in elements.iter().enumerate() {
            if k == 0 {
                words.push(Vec::new());
                continue;
            }
            let (a, rest) = gens
                .iter()
                .enumerate()
                .find_map(|(a, g)| {
                    let r = index[&g.mul(w)];
                    (lengths[r] + 1 == lengths[k]).then_some((a + 1, r))
                })
                .expect("a left descent exists");
            let mut word = vec![a];
            word.extend_from_slice(&words[rest]);
            words.push(word);
        }
        WeylGroup { wtype, gens, elements, index, lengths, words }
    }

    pub fn weyl_type(&self) -> WeylType {
        self.wtype
    }

    pub fn generators(&self) -> &[SignedPerm] {
        &self.gens
    }

    pub fn elements(&self) -> &[SignedPerm] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn position(&self, w: &SignedPerm) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn length(&self, w: &SignedPerm) -> usize {
        self.lengths[self.index[w]]
    }

    pub fn word(&self, w: &SignedPerm) -> &[usize] {
        &self.words[self.index[w]]
    }

    /// Product of simple reflections along a word.
    pub fn eval_word(&self, word: &[usize]) -> SignedPerm {
        word.iter().fold(SignedPerm::identity(self.wtype.n), |acc, &a| acc.mul(&self.gens[a - 1]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(f: Family, n: usize) -> WeylType {
        WeylType::new(f, n).unwrap()
    }

    #[test]
    fn involutions() {
        let a = ty(Family::A, 3);
        let s1 = a.simple(1).unwrap();
        assert!(s1.mul(&s1).is_identity());
        let t1 = SignedPerm::sign_change(3, 1);
        assert!(t1.mul(&t1).is_identity());
    }

    #[test]
    fn act_examples() {
        assert_eq!(SignedPerm::transposition(2, 1, 2).act(1).unwrap(), (2, 1));
        assert_eq!(SignedPerm::sign_change(2, 1).act(1).unwrap(), (1, -1));
        assert_eq!(SignedPerm::signed_transposition(2, 1, 2).act(2).unwrap(), (1, -1));
        assert!(SignedPerm::identity(2).act(3).is_err());
    }

    #[test]
    fn sbar_as_conjugate_chain_in_d4() {
        let n = 4;
        let d = ty(Family::D, n);
        let s = |i, j| SignedPerm::transposition(n, i, j);
        let sn = d.simple(n).unwrap();
        let chain = s(2, n).mul(&s(1, n - 1)).mul(&sn).mul(&s(1, n - 1)).mul(&s(2, n));
        assert_eq!(chain, SignedPerm::signed_transposition(n, 1, 2));
    }

    #[test]
    fn named_reflections() {
        let b = ty(Family::B, 3);
        assert_eq!(b.reflection(ReflectionKind::TauI, 3, 0).unwrap(), b.simple(3).unwrap());
        let d = ty(Family::D, 4);
        assert_eq!(d.reflection(ReflectionKind::SbarIj, 3, 4).unwrap(), d.simple(4).unwrap());
        let a = ty(Family::A, 4);
        assert_eq!(a.reflection(ReflectionKind::Sij, 2, 3).unwrap(), a.simple(2).unwrap());
        assert!(a.reflection(ReflectionKind::TauI, 1, 0).is_err());
        assert!(d.reflection(ReflectionKind::TauI, 1, 0).is_err());
    }

    #[test]
    fn group_orders() {
        assert_eq!(ty(Family::A, 4).group().order(), 24);
        assert_eq!(ty(Family::B, 3).group().order(), 48);
        assert_eq!(ty(Family::D, 4).group().order(), 192);
        assert_eq!(WeylType::new_small_d(Family::D, 3).unwrap().group().order(), 24);
    }

    #[test]
    fn rank_validation() {
        assert!(WeylType::new(Family::D, 3).is_err());
        assert!(WeylType::new(Family::B, 1).is_err());
        assert!(WeylType::new(Family::A, 9).is_err());
    }

    #[test]
    fn reduced_word_rejects_non_members() {
        let d = ty(Family::D, 4);
        assert!(d.reduced_word(&SignedPerm::sign_change(4, 1)).is_err());
    }
}
