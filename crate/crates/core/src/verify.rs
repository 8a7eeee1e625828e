//! Named verification suites. Each suite builds a deterministic list of
//! checks from `(family, n, seed, budget)`, runs them in parallel and merges
//! the outcomes by check index.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::cdaha::{cdaha, daha, daha_t0, upsilon_minus, upsilon_plus, Cdaha, CdahaElem, Daha, DahaElem};
use crate::clifford::{beta, CliffordElem, Eps, KElem};
use crate::dahca::{
    comm_closed_form, comm_y_xpow, comm_ypow_x, dahca, elementary_symmetric, power_sum_of_squares, ClosedFormKind,
    Dahca, DahcaElem,
};
use crate::dunkl::{dunkl_act, dunkl_act_sdaha, ModuleKind, PolyModElem};
use crate::error::{Error, Result};
use crate::lin::Lin;
use crate::pbw::{Elem, Mono, Pbw, Triangular};
use crate::poly::{Exps, Poly, ZERO_EXPS};
use crate::scalars::{Cyc, ParamPoly};
use crate::sdaha::{
    phi_big, psi_big, sdaha, sdaha_comm_closed_form, sdaha_comm_ypow_xi, xi_square_power_sum, Sdaha, SdahaElem,
    TensorSdaha,
};
use crate::spin::{
    cocycle, gamma, odd_reflection, phi_finite, psi_finite, CoverElem, CoverKind, OddKind, SpinElem, TensorElem,
};
use crate::weyl::{Family, ReflectionKind, SignedPerm, WeylType};

pub const SUITES: [&str; 10] =
    ["relations", "assoc", "conj", "jacobi", "cocycle", "iso", "center", "dunkl", "quotient", "closedform"];

pub const DEFAULT_BUDGET: usize = 300;

/// Every topic some suite must exercise.
pub const REQUIRED_TOPICS: [&str; 34] = [
    "table1",
    "table2",
    "dahca-relations",
    "sdaha-relations",
    "cdaha-relations",
    "daha-relations",
    "pbw-dahca",
    "pbw-sdaha",
    "pbw-cdaha",
    "pbw-daha",
    "conj-inv-c",
    "conj-inv-W",
    "jacobi",
    "cocycle",
    "gamma-transport",
    "odd-reflections",
    "iso-finite",
    "lemma-identify",
    "iso-big",
    "center-dahca",
    "center-sdaha",
    "dunkl-x",
    "dunkl-y",
    "dunkl-xi",
    "quotient-plus",
    "quotient-minus",
    "lemma-quotient",
    "quotient-square",
    "comm-y-xpow",
    "comm-ypow-x",
    "comm-y-f",
    "comm-f-x",
    "sdaha-comm-f",
    "sdaha-comm-ypow",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub check: String,
    pub inputs: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub family: Family,
    pub n: usize,
    pub seed: u64,
    pub budget: usize,
    pub attempted: usize,
    pub topics: Vec<String>,
    pub failures: Vec<Failure>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "suite {} on {}{} (seed {}, budget {}): {} checks, {} failures",
            self.suite,
            self.family,
            self.n,
            self.seed,
            self.budget,
            self.attempted,
            self.failures.len()
        )?;
        writeln!(f, "topics: {}", self.topics.join(", "))?;
        for fl in &self.failures {
            writeln!(f, "FAIL {} [{}]", fl.check, fl.inputs)?;
            writeln!(f, "  expected: {}", fl.expected)?;
            writeln!(f, "  got:      {}", fl.got)?;
        }
        Ok(())
    }
}

struct Verdict {
    ok: bool,
    expected: String,
    got: String,
}

fn same<E: PartialEq + fmt::Display>(expected: &E, got: &E) -> Verdict {
    Verdict { ok: expected == got, expected: expected.to_string(), got: got.to_string() }
}

fn holds(ok: bool, expected: &str, got: String) -> Verdict {
    Verdict { ok, expected: expected.to_string(), got }
}

type Job = Box<dyn Fn() -> Result<Verdict> + Send + Sync>;

struct Check {
    topic: &'static str,
    name: String,
    inputs: String,
    job: Job,
}

#[derive(Default)]
struct Plan {
    checks: Vec<Check>,
}

impl Plan {
    fn push(
        &mut self,
        topic: &'static str,
        name: impl Into<String>,
        inputs: impl Into<String>,
        job: impl Fn() -> Result<Verdict> + Send + Sync + 'static,
    ) {
        self.checks.push(Check { topic, name: name.into(), inputs: inputs.into(), job: Box::new(job) });
    }

    fn eq<E>(
        &mut self,
        topic: &'static str,
        name: impl Into<String>,
        inputs: impl Into<String>,
        job: impl Fn() -> Result<(E, E)> + Send + Sync + 'static,
    ) where
        E: PartialEq + fmt::Display,
    {
        self.push(topic, name, inputs, move || job().map(|(e, g)| same(&e, &g)));
    }

    fn zero<T: Triangular>(
        &mut self,
        topic: &'static str,
        name: impl Into<String>,
        inputs: impl Into<String>,
        job: impl Fn() -> Result<Elem<T>> + Send + Sync + 'static,
    ) {
        self.push(topic, name, inputs, move || job().map(|g| holds(g.is_zero(), "0", g.to_string())));
    }
}

/// Runs the named suite.
pub fn run_suite(name: &str, family: Family, n: usize, seed: u64, budget: usize) -> Result<SuiteReport> {
    let wt = WeylType::new_small_d(family, n)?;
    if n < 2 {
        return Err(Error::UnsupportedRank { family: family.to_string(), n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut plan = Plan::default();
    match name {
        "relations" => relations(&mut plan, wt)?,
        "assoc" => assoc(&mut plan, wt, &mut rng, budget)?,
        "conj" => conj(&mut plan, wt, &mut rng, budget)?,
        "jacobi" => jacobi(&mut plan, wt)?,
        "cocycle" => cocycle_suite(&mut plan, wt, &mut rng, budget)?,
        "iso" => iso(&mut plan, wt, &mut rng, budget)?,
        "center" => center(&mut plan, wt)?,
        "dunkl" => dunkl(&mut plan, wt, &mut rng, budget)?,
        "quotient" => quotient(&mut plan, wt, &mut rng, budget)?,
        "closedform" => closedform(&mut plan, wt, &mut rng, budget)?,
        other => return Err(Error::UnknownSuite(other.to_string())),
    }
    Ok(execute(name, wt, seed, budget, plan))
}

fn execute(name: &str, wt: WeylType, seed: u64, budget: usize, plan: Plan) -> SuiteReport {
    let outcomes: Vec<Option<Failure>> = plan
        .checks
        .par_iter()
        .map(|c| {
            let v = match (c.job)() {
                Ok(v) => v,
                Err(e) => Verdict { ok: false, expected: "no error".into(), got: format!("error: {}", e) },
            };
            if v.ok {
                None
            } else {
                Some(Failure {
                    check: format!("{}: {}", c.topic, c.name),
                    inputs: c.inputs.clone(),
                    expected: v.expected,
                    got: v.got,
                })
            }
        })
        .collect();
    let topics: BTreeSet<&str> = plan.checks.iter().map(|c| c.topic).collect();
    SuiteReport {
        suite: name.to_string(),
        family: wt.family,
        n: wt.n,
        seed,
        budget,
        attempted: plan.checks.len(),
        topics: topics.into_iter().map(String::from).collect(),
        failures: outcomes.into_iter().flatten().collect(),
    }
}

// ---------------------------------------------------------------------------
// shared helpers

fn u() -> ParamPoly {
    ParamPoly::u()
}

fn int(k: i64) -> ParamPoly {
    ParamPoly::from_int(k)
}

fn elements(wt: &WeylType) -> Vec<SignedPerm> {
    wt.group().elements().to_vec()
}

/// All group elements when the group is small, else the generators plus a
/// random sample.
fn sample_elements(wt: &WeylType, rng: &mut ChaCha8Rng, cap: usize) -> Result<Vec<SignedPerm>> {
    let all = elements(wt);
    if all.len() <= cap {
        return Ok(all);
    }
    let mut out: Vec<SignedPerm> = (1..=wt.num_generators()).map(|k| wt.simple(k)).collect::<Result<_>>()?;
    out.extend(all.choose_multiple(rng, cap).copied());
    Ok(out)
}

/// `(j', sign)` with `w(e_j) = sign * e_j'`.
fn image(w: &SignedPerm, j: usize) -> (usize, i64) {
    let (k, s) = w.image(j);
    (k, s as i64)
}

fn rand_coeff(rng: &mut ChaCha8Rng) -> ParamPoly {
    let k = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
    let c = int(k);
    match rng.gen_range(0..4) {
        0 => &c * &u(),
        1 => &c * &ParamPoly::v(),
        _ => c,
    }
}

fn rand_exps(rng: &mut ChaCha8Rng, n: usize, deg: usize) -> Exps {
    let mut e = ZERO_EXPS;
    for _ in 0..deg {
        e[rng.gen_range(0..n)] += 1;
    }
    e
}

/// Left and right exponents with total degree at most `max_deg`.
fn rand_split(rng: &mut ChaCha8Rng, n: usize, max_deg: usize) -> (Exps, Exps) {
    let d = rng.gen_range(0..=max_deg);
    let dl = rng.gen_range(0..=d);
    (rand_exps(rng, n, dl), rand_exps(rng, n, d - dl))
}

fn rand_eps(rng: &mut ChaCha8Rng, n: usize) -> Eps {
    Eps(rng.gen_range(0..(1u16 << n)))
}

fn rand_elem<T: Triangular>(
    alg: &Arc<Pbw<T>>,
    rng: &mut ChaCha8Rng,
    terms: usize,
    max_deg: usize,
    mut mid: impl FnMut(&mut ChaCha8Rng) -> T::Mid,
) -> Elem<T> {
    let n = alg.n();
    let mut lin = Lin::zero();
    for _ in 0..terms {
        let (x, y) = rand_split(rng, n, max_deg);
        let m = mid(rng);
        lin.add_term(Mono { x, mid: m, y }, &rand_coeff(rng));
    }
    Elem::from_lin(alg, lin)
}

fn rand_poly(rng: &mut ChaCha8Rng, n: usize, terms: usize, max_deg: usize) -> Poly {
    let mut lin = Lin::zero();
    for _ in 0..terms {
        let d = rng.gen_range(0..=max_deg);
        lin.add_term(rand_exps(rng, n, d), &rand_coeff(rng));
    }
    Poly::from_lin(n, lin)
}

fn pick<'a, T>(rng: &mut ChaCha8Rng, v: &'a [T]) -> &'a T {
    &v[rng.gen_range(0..v.len())]
}

fn dahca_mid(wt: WeylType) -> impl FnMut(&mut ChaCha8Rng) -> (Eps, SignedPerm) {
    let els = elements(&wt);
    move |r| (rand_eps(r, wt.n), *pick(r, &els))
}

fn perm_mid(wt: WeylType) -> impl FnMut(&mut ChaCha8Rng) -> SignedPerm {
    let els = elements(&wt);
    move |r| *pick(r, &els)
}

fn cover_mid(wt: WeylType) -> impl FnMut(&mut ChaCha8Rng) -> CoverElem {
    let els = elements(&wt);
    move |r| CoverElem { z: r.gen_bool(0.5), w: *pick(r, &els) }
}

fn dahca_gens(d: &Arc<Dahca>) -> Result<Vec<DahcaElem>> {
    let n = d.n();
    let mut g = Vec::new();
    for i in 1..=n {
        g.push(DahcaElem::x(d, i)?);
        g.push(DahcaElem::y(d, i)?);
        g.push(DahcaElem::c(d, i)?);
    }
    for k in 1..=d.tag().wt.num_generators() {
        g.push(DahcaElem::simple(d, k)?);
    }
    Ok(g)
}

fn sdaha_gens(s: &Arc<Sdaha>) -> Result<Vec<SdahaElem>> {
    let mut g = Vec::new();
    for i in 1..=s.n() {
        g.push(SdahaElem::xi(s, i)?);
        g.push(SdahaElem::y(s, i)?);
    }
    for k in 1..=s.tag().wt.num_generators() {
        g.push(SdahaElem::t(s, k)?);
    }
    Ok(g)
}

fn cdaha_gens(c: &Arc<Cdaha>) -> Result<Vec<CdahaElem>> {
    let mut g = vec![CdahaElem::z(c)];
    for i in 1..=c.n() {
        g.push(CdahaElem::xt(c, i)?);
        g.push(CdahaElem::yt(c, i)?);
    }
    for k in 1..=c.tag().wt.num_generators() {
        g.push(CdahaElem::tt(c, k)?);
    }
    Ok(g)
}

fn daha_gens(h: &Arc<Daha>) -> Result<Vec<DahaElem>> {
    let mut g = Vec::new();
    for i in 1..=h.n() {
        g.push(DahaElem::x(h, i)?);
        g.push(DahaElem::y(h, i)?);
    }
    for k in 1..=h.tag().wt.num_generators() {
        g.push(DahaElem::simple(h, k)?);
    }
    Ok(g)
}

fn refl(wt: &WeylType, kind: ReflectionKind, i: usize, j: usize) -> Result<SignedPerm> {
    wt.reflection(kind, i, j)
}

/// Right-hand side of `[y_j, x_i]`, assembled from products of `c`'s and
/// reflections.
fn dahca_rel(d: &Arc<Dahca>, j: usize, i: usize) -> Result<DahcaElem> {
    let wt = d.tag().wt;
    let one = DahcaElem::one(d);
    let cc = |a: usize, b: usize| DahcaElem::c(d, a)?.mul(&DahcaElem::c(d, b)?);
    let g = |kind, a, b| DahcaElem::group(d, refl(&wt, kind, a, b)?);
    let pair = |k: usize, i: usize| -> Result<(DahcaElem, DahcaElem)> {
        let plus = one.add(&cc(k, i)?)?.mul(&g(ReflectionKind::Sij, k, i)?)?;
        let minus = if wt.family == Family::A {
            DahcaElem::zero(d)
        } else {
            one.sub(&cc(k, i)?)?.mul(&g(ReflectionKind::SbarIj, k, i)?)?
        };
        Ok((plus, minus))
    };
    if i != j {
        let (p, m) = pair(j, i)?;
        return Ok(p.sub(&m)?.scale(&u()));
    }
    let mut out = DahcaElem::zero(d);
    for k in (1..=wt.n).filter(|&k| k != i) {
        let (p, m) = pair(k, i)?;
        out = out.sub(&p.add(&m)?.scale(&u()))?;
    }
    if wt.family == Family::B {
        let tau = g(ReflectionKind::TauI, i, 0)?;
        out = out.sub(&tau.scale(&ParamPoly::v().scale(&Cyc::sqrt2())))?;
    }
    Ok(out)
}

/// Right-hand side of `[y_j, ξ_i]` from odd reflections.
fn sdaha_rel(s: &Arc<Sdaha>, j: usize, i: usize) -> Result<SdahaElem> {
    let wt = s.tag().wt;
    let odd = |kind, a, b| SdahaElem::odd(s, kind, a, b);
    let bar = wt.family != Family::A;
    if i != j {
        let mut out = odd(OddKind::Tij, i, j)?.scale(&-&u());
        if bar {
            out = out.add(&odd(OddKind::TbarIj, i, j)?.scale(&u()))?;
        }
        return Ok(out);
    }
    let mut out = SdahaElem::zero(s);
    for k in (1..=wt.n).filter(|&k| k != i) {
        out = out.add(&odd(OddKind::Tij, i, k)?.scale(&u()))?;
        if bar {
            out = out.add(&odd(OddKind::TbarIj, i, k)?.scale(&u()))?;
        }
    }
    if wt.family == Family::B {
        out = out.add(&odd(OddKind::TbarI, i, 0)?.scale(&ParamPoly::v()))?;
    }
    Ok(out)
}

/// Right-hand side of `[y~_j, x~_i]` from the lifts `{i,j}`.
fn cdaha_rel(c: &Arc<Cdaha>, j: usize, i: usize) -> Result<CdahaElem> {
    let wt = c.tag().wt;
    let z = CdahaElem::z(c);
    let lift = |kind, a, b| CdahaElem::lift(c, kind, a, b);
    let bar = wt.family != Family::A;
    let mut inner = CdahaElem::zero(c);
    if i != j {
        inner = inner.add(&lift(CoverKind::Brace, i, j)?.scale(&u()))?;
        if bar {
            inner = inner.sub(&lift(CoverKind::BraceBar, i, j)?.scale(&u()))?;
        }
    } else {
        for k in (1..=wt.n).filter(|&k| k != i) {
            inner = inner.sub(&lift(CoverKind::Brace, i, k)?.scale(&u()))?;
            if bar {
                inner = inner.sub(&lift(CoverKind::BraceBar, i, k)?.scale(&u()))?;
            }
        }
        if wt.family == Family::B {
            inner = inner.sub(&lift(CoverKind::BraceI, i, 0)?.scale(&ParamPoly::v()))?;
        }
    }
    z.mul(&inner)
}

/// Right-hand side of `[y_j, x_i]` in the Cherednik algebra.
fn daha_rel(h: &Arc<Daha>, j: usize, i: usize) -> Result<DahaElem> {
    let wt = h.tag().wt;
    let g = |kind, a, b| DahaElem::group(h, refl(&wt, kind, a, b)?);
    let bar = wt.family != Family::A;
    if i != j {
        let mut out = g(ReflectionKind::Sij, i, j)?.scale(&u());
        if bar {
            out = out.sub(&g(ReflectionKind::SbarIj, i, j)?.scale(&u()))?;
        }
        return Ok(out);
    }
    let mut out = if h.spec().t_is_zero() { DahaElem::zero(h) } else { DahaElem::scalar(h, ParamPoly::t()) };
    for k in (1..=wt.n).filter(|&k| k != i) {
        out = out.sub(&g(ReflectionKind::Sij, k, i)?.scale(&u()))?;
        if bar {
            out = out.sub(&g(ReflectionKind::SbarIj, k, i)?.scale(&u()))?;
        }
    }
    if wt.family == Family::B {
        out = out.sub(&g(ReflectionKind::TauI, i, 0)?.scale(&ParamPoly::v()))?;
    }
    Ok(out)
}

/// How generator `a` moves past the `j`-th variable:
/// `(j', sign on y, special)` where `special` marks the type D/B `t_n`
/// cases in which `x~` picks up `-1` instead of `z`.
fn listed_move(wt: &WeylType, a: usize, j: usize) -> (usize, i64, bool) {
    let n = wt.n;
    if a < n || wt.family == Family::A {
        let j2 = if j == a {
            a + 1
        } else if j == a + 1 {
            a
        } else {
            j
        };
        return (j2, 1, false);
    }
    match wt.family {
        Family::D if j == n => (n - 1, -1, true),
        Family::D if j == n - 1 => (n, -1, true),
        Family::B if j == n => (n, -1, true),
        _ => (j, 1, false),
    }
}

// ---------------------------------------------------------------------------
// relations

fn coxeter_pairs(wt: &WeylType) -> Vec<(usize, usize, usize)> {
    let r = wt.num_generators();
    let mut out = Vec::new();
    for a in 1..=r {
        for b in a + 1..=r {
            out.push((a, b, wt.coxeter_m(a, b)));
        }
    }
    out
}

fn relations(plan: &mut Plan, wt: WeylType) -> Result<()> {
    let n = wt.n;
    let r = wt.num_generators();

    // CW^-: t_a^2 = 1, (t_a t_b)^2 = -1, braid, (t_a t_b)^4 = -1.
    for a in 1..=r {
        plan.eq("table2", format!("t{a}^2 = 1"), "", move || Ok((SpinElem::one(wt), SpinElem::gen(wt, a)?.pow(2)?)));
    }
    for (a, b, m) in coxeter_pairs(&wt) {
        plan.eq("table2", format!("m({a},{b}) = {m}"), "", move || {
            let (ta, tb) = (SpinElem::gen(wt, a)?, SpinElem::gen(wt, b)?);
            let ab = ta.mul(&tb)?;
            Ok(match m {
                2 => (SpinElem::one(wt).scale(&int(-1)), ab.pow(2)?),
                3 => (tb.mul(&ta)?.mul(&tb)?, ab.mul(&ta)?),
                _ => (SpinElem::one(wt).scale(&int(-1)), ab.pow(4)?),
            })
        });
    }

    // W~: t~_a^2 = 1, t~_a t~_b = z t~_b t~_a, braid, (t~_a t~_b)^2 = z (t~_b t~_a)^2.
    let tt = move |a: usize| -> Result<CoverElem> { Ok(CoverElem::lift(wt.simple(a)?)) };
    let z = CoverElem::central_z(n);
    plan.eq("table1", "z^2 = 1", "", move || Ok((CoverElem::identity(n), z.mul(&wt, &z)?)));
    for a in 1..=r {
        plan.eq("table1", format!("t~{a}^2 = 1"), "", move || Ok((CoverElem::identity(n), tt(a)?.mul(&wt, &tt(a)?)?)));
        plan.eq("table1", format!("z t~{a} = t~{a} z"), "", move || Ok((tt(a)?.mul(&wt, &z)?, z.mul(&wt, &tt(a)?)?)));
    }
    for (a, b, m) in coxeter_pairs(&wt) {
        plan.eq("table1", format!("m({a},{b}) = {m}"), "", move || {
            let (ta, tb) = (tt(a)?, tt(b)?);
            let ab = ta.mul(&wt, &tb)?;
            let ba = tb.mul(&wt, &ta)?;
            Ok(match m {
                2 => (z.mul(&wt, &ba)?, ab),
                3 => (ba.mul(&wt, &tb)?, ab.mul(&wt, &ta)?),
                _ => (z.mul(&wt, &ba.mul(&wt, &ba)?)?, ab.mul(&wt, &ab)?),
            })
        });
    }

    dahca_relations(plan, wt)?;
    sdaha_relations(plan, wt)?;
    cdaha_relations(plan, wt)?;
    daha_relations(plan, wt)?;
    Ok(())
}

fn dahca_relations(plan: &mut Plan, wt: WeylType) -> Result<()> {
    let n = wt.n;
    let d = dahca(wt);
    let topic = "dahca-relations";
    for i in 1..=n {
        for j in 1..=n {
            let dd = d.clone();
            plan.push(topic, format!("c{i} c{j} clifford"), "", move || {
                let p = DahcaElem::c(&dd, i)?.mul(&DahcaElem::c(&dd, j)?)?;
                let q = DahcaElem::c(&dd, j)?.mul(&DahcaElem::c(&dd, i)?)?;
                let expected =
                    if i == j { DahcaElem::one(&dd).add(&DahcaElem::one(&dd))? } else { DahcaElem::zero(&dd) };
                Ok(same(&expected, &p.add(&q)?))
            });
            let dd = d.clone();
            plan.zero(topic, format!("[x{i}, x{j}] = 0"), "", move || {
                DahcaElem::x(&dd, i)?.commutator(&DahcaElem::x(&dd, j)?)
            });
            let dd = d.clone();
            plan.zero(topic, format!("[y{i}, y{j}] = 0"), "", move || {
                DahcaElem::y(&dd, i)?.commutator(&DahcaElem::y(&dd, j)?)
            });
            let dd = d.clone();
            plan.zero(topic, format!("[y{i}, c{j}] = 0"), "", move || {
                DahcaElem::y(&dd, i)?.commutator(&DahcaElem::c(&dd, j)?)
            });
            let dd = d.clone();
            plan.eq(topic, format!("x{i} c{j} = ±c{j} x{i}"), "", move || {
                let s = if i == j { -1 } else { 1 };
                let cx = DahcaElem::c(&dd, j)?.mul(&DahcaElem::x(&dd, i)?)?.scale(&int(s));
                Ok((cx, DahcaElem::x(&dd, i)?.mul(&DahcaElem::c(&dd, j)?)?))
            });
            let dd = d.clone();
            plan.eq(topic, format!("[y{j}, x{i}]"), "", move || {
                Ok((dahca_rel(&dd, j, i)?, DahcaElem::y(&dd, j)?.commutator(&DahcaElem::x(&dd, i)?)?))
            });
        }
    }
    for w in elements_or_generators(&wt)? {
        for i in 1..=n {
            let d = d.clone();
            plan.push(topic, format!("w v{i} w^-1 = w(v{i})"), format!("w = {}", w), move || {
                let g = DahcaElem::group(&d, w)?;
                let gi = DahcaElem::group(&d, w.inverse())?;
                let (j, s) = image(&w, i);
                let mut all = true;
                let mut got = Vec::new();
                for (lhs, rhs) in [
                    (DahcaElem::x(&d, i)?, DahcaElem::x(&d, j)?),
                    (DahcaElem::y(&d, i)?, DahcaElem::y(&d, j)?),
                    (DahcaElem::c(&d, i)?, DahcaElem::c(&d, j)?),
                ] {
                    let conj = g.mul(&lhs)?.mul(&gi)?;
                    let exp = rhs.scale(&int(s));
                    all &= conj == exp;
                    got.push(conj.to_string());
                }
                Ok(holds(all, "signed images of x, y, c", got.join("; ")))
            });
        }
    }
    Ok(())
}

/// Group elements for conjugation-type relations: everything up to rank 3,
/// generators beyond.
fn elements_or_generators(wt: &WeylType) -> Result<Vec<SignedPerm>> {
    if wt.n <= 3 {
        Ok(elements(wt))
    } else {
        (1..=wt.num_generators()).map(|k| wt.simple(k)).collect()
    }
}

fn sdaha_relations(plan: &mut Plan, wt: WeylType) -> Result<()> {
    let n = wt.n;
    let s = sdaha(wt);
    let topic = "sdaha-relations";
    for i in 1..=n {
        for j in 1..=n {
            let ss = s.clone();
            plan.zero(topic, format!("[y{i}, y{j}] = 0"), "", move || {
                SdahaElem::y(&ss, i)?.commutator(&SdahaElem::y(&ss, j)?)
            });
            if i != j {
                let ss = s.clone();
                plan.zero(topic, format!("xi{i} xi{j} + xi{j} xi{i} = 0"), "", move || {
                    let (a, b) = (SdahaElem::xi(&ss, i)?, SdahaElem::xi(&ss, j)?);
                    a.mul(&b)?.add(&b.mul(&a)?)
                });
            }
            let ss = s.clone();
            plan.eq(topic, format!("[y{j}, xi{i}]"), "", move || {
                Ok((sdaha_rel(&ss, j, i)?, SdahaElem::y(&ss, j)?.commutator(&SdahaElem::xi(&ss, i)?)?))
            });
        }
    }
    for a in 1..=wt.num_generators() {
        let ss = s.clone();
        plan.eq(topic, format!("t{a}^2 = 1"), "", move || Ok((SdahaElem::one(&ss), SdahaElem::t(&ss, a)?.pow(2)?)));
        for j in 1..=n {
            let (j2, ys, _) = listed_move(&wt, a, j);
            let ss = s.clone();
            plan.eq(topic, format!("t{a} y{j} = ±y{j2} t{a}"), "", move || {
                let t = SdahaElem::t(&ss, a)?;
                Ok((SdahaElem::y(&ss, j2)?.mul(&t)?.scale(&int(ys)), t.mul(&SdahaElem::y(&ss, j)?)?))
            });
            let ss = s.clone();
            plan.eq(topic, format!("t{a} xi{j} = -xi{j2} t{a}"), "", move || {
                let t = SdahaElem::t(&ss, a)?;
                Ok((SdahaElem::xi(&ss, j2)?.mul(&t)?.neg(), t.mul(&SdahaElem::xi(&ss, j)?)?))
            });
        }
    }
    for (a, b, m) in coxeter_pairs(&wt) {
        let ss = s.clone();
        plan.eq(topic, format!("t{a} t{b} with m = {m}"), "", move || {
            let (ta, tb) = (SdahaElem::t(&ss, a)?, SdahaElem::t(&ss, b)?);
            let ab = ta.mul(&tb)?;
            let minus_one = SdahaElem::one(&ss).neg();
            Ok(match m {
                2 => (minus_one, ab.pow(2)?),
                3 => (tb.mul(&ta)?.mul(&tb)?, ab.mul(&ta)?),
                _ => (minus_one, ab.pow(4)?),
            })
        });
    }
    Ok(())
}

fn cdaha_relations(plan: &mut Plan, wt: WeylType) -> Result<()> {
    let n = wt.n;
    let c = cdaha(wt);
    let topic = "cdaha-relations";
    let gens = cdaha_gens(&c)?;
    for g in gens {
        let cc = c.clone();
        plan.zero(topic, format!("[z, {}] = 0", g), "", move || CdahaElem::z(&cc).commutator(&g));
    }
    let cc = c.clone();
    plan.eq(topic, "z^2 = 1", "", move || Ok((CdahaElem::one(&cc), CdahaElem::z(&cc).pow(2)?)));
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                let cc = c.clone();
                plan.eq(topic, format!("xt{i} xt{j} = z xt{j} xt{i}"), "", move || {
                    let (a, b) = (CdahaElem::xt(&cc, i)?, CdahaElem::xt(&cc, j)?);
                    Ok((CdahaElem::z(&cc).mul(&b)?.mul(&a)?, a.mul(&b)?))
                });
            }
            let cc = c.clone();
            plan.zero(topic, format!("[yt{i}, yt{j}] = 0"), "", move || {
                CdahaElem::yt(&cc, i)?.commutator(&CdahaElem::yt(&cc, j)?)
            });
            let cc = c.clone();
            plan.eq(topic, format!("[yt{j}, xt{i}]"), "", move || {
                Ok((cdaha_rel(&cc, j, i)?, CdahaElem::yt(&cc, j)?.commutator(&CdahaElem::xt(&cc, i)?)?))
            });
        }
    }
    for a in 1..=wt.num_generators() {
        let cc = c.clone();
        plan.eq(topic, format!("tt{a}^2 = 1"), "", move || Ok((CdahaElem::one(&cc), CdahaElem::tt(&cc, a)?.pow(2)?)));
        for j in 1..=n {
            let (j2, ys, special) = listed_move(&wt, a, j);
            let cc = c.clone();
            plan.eq(topic, format!("tt{a} xt{j} past"), "", move || {
                let t = CdahaElem::tt(&cc, a)?;
                let moved = CdahaElem::xt(&cc, j2)?.mul(&t)?;
                let exp = if special { moved.neg() } else { CdahaElem::z(&cc).mul(&moved)? };
                Ok((exp, t.mul(&CdahaElem::xt(&cc, j)?)?))
            });
            let cc = c.clone();
            plan.eq(topic, format!("tt{a} yt{j} past"), "", move || {
                let t = CdahaElem::tt(&cc, a)?;
                Ok((CdahaElem::yt(&cc, j2)?.mul(&t)?.scale(&int(ys)), t.mul(&CdahaElem::yt(&cc, j)?)?))
            });
        }
    }
    for (a, b, m) in coxeter_pairs(&wt) {
        let cc = c.clone();
        plan.eq(topic, format!("tt{a} tt{b} with m = {m}"), "", move || {
            let (ta, tb, z) = (CdahaElem::tt(&cc, a)?, CdahaElem::tt(&cc, b)?, CdahaElem::z(&cc));
            let ab = ta.mul(&tb)?;
            let ba = tb.mul(&ta)?;
            Ok(match m {
                2 => (z.mul(&ba)?, ab),
                3 => (ba.mul(&tb)?, ab.mul(&ta)?),
                _ => (z.mul(&ba.pow(2)?)?, ab.pow(2)?),
            })
        });
    }
    Ok(())
}

fn daha_relations(plan: &mut Plan, wt: WeylType) -> Result<()> {
    let n = wt.n;
    let h = daha(wt);
    let topic = "daha-relations";
    for i in 1..=n {
        for j in 1..=n {
            let hh = h.clone();
            plan.zero(topic, format!("[x{i}, x{j}] = 0"), "", move || {
                DahaElem::x(&hh, i)?.commutator(&DahaElem::x(&hh, j)?)
            });
            let hh = h.clone();
            plan.zero(topic, format!("[y{i}, y{j}] = 0"), "", move || {
                DahaElem::y(&hh, i)?.commutator(&DahaElem::y(&hh, j)?)
            });
            let hh = h.clone();
            plan.eq(topic, format!("[y{j}, x{i}]"), "", move || {
                Ok((daha_rel(&hh, j, i)?, DahaElem::y(&hh, j)?.commutator(&DahaElem::x(&hh, i)?)?))
            });
        }
    }
    for w in elements_or_generators(&wt)? {
        for i in 1..=n {
            let hh = h.clone();
            plan.push(topic, format!("w v{i} = v{i}^w w"), format!("w = {}", w), move || {
                let g = DahaElem::group(&hh, w)?;
                let (j, s) = image(&w, i);
                let x_ok = g.mul(&DahaElem::x(&hh, i)?)? == DahaElem::x(&hh, j)?.mul(&g)?.scale(&int(s));
                let y_ok = g.mul(&DahaElem::y(&hh, i)?)? == DahaElem::y(&hh, j)?.mul(&g)?.scale(&int(s));
                Ok(holds(x_ok && y_ok, "true", format!("x: {}, y: {}", x_ok, y_ok)))
            });
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// associativity

fn assoc_for<T: Triangular>(
    plan: &mut Plan,
    topic: &'static str,
    alg: &Arc<Pbw<T>>,
    gens: Vec<Elem<T>>,
    rng: &mut ChaCha8Rng,
    budget: usize,
    mid: impl FnMut(&mut ChaCha8Rng) -> T::Mid,
) {
    let gens = Arc::new(gens);
    for a in 0..gens.len() {
        let g = gens.clone();
        plan.push(topic, format!("generator triples starting at {}", g[a]), "", move || {
            for b in g.iter() {
                for c in g.iter() {
                    let l = g[a].mul(b)?.mul(c)?;
                    let r = g[a].mul(&b.mul(c)?)?;
                    if l != r {
                        return Ok(Verdict {
                            ok: false,
                            expected: format!("({}*{})*{} = {}", g[a], b, c, l),
                            got: r.to_string(),
                        });
                    }
                }
            }
            Ok(holds(true, "", String::new()))
        });
    }
    let mut mid = mid;
    for k in 0..budget {
        let triple: Vec<Elem<T>> = (0..3).map(|_| rand_monomial(alg, rng, 3, &mut mid)).collect();
        let inputs = format!("{} | {} | {}", triple[0], triple[1], triple[2]);
        plan.eq(topic, format!("random triple {k}"), inputs, move || {
            let (a, b, c) = (&triple[0], &triple[1], &triple[2]);
            Ok((a.mul(b)?.mul(c)?, a.mul(&b.mul(c)?)?))
        });
    }
}

fn rand_monomial<T: Triangular>(
    alg: &Arc<Pbw<T>>,
    rng: &mut ChaCha8Rng,
    max_deg: usize,
    mid: &mut impl FnMut(&mut ChaCha8Rng) -> T::Mid,
) -> Elem<T> {
    let (x, y) = rand_split(rng, alg.n(), max_deg);
    Elem::from_mono(alg, Mono { x, mid: mid(rng), y })
}

fn assoc(plan: &mut Plan, wt: WeylType, rng: &mut ChaCha8Rng, budget: usize) -> Result<()> {
    let d = dahca(wt);
    assoc_for(plan, "pbw-dahca", &d, dahca_gens(&d)?, rng, budget, dahca_mid(wt));
    let s = sdaha(wt);
    assoc_for(plan, "pbw-sdaha", &s, sdaha_gens(&s)?, rng, budget, perm_mid(wt));
    let c = cdaha(wt);
    assoc_for(plan, "pbw-cdaha", &c, cdaha_gens(&c)?, rng, budget, cover_mid(wt));
    let h = daha(wt);
    assoc_for(plan, "pbw-daha", &h, daha_gens(&h)?, rng, budget, perm_mid(wt));
    Ok(())
}

// ---------------------------------------------------------------------------
// conjugation invariance and Jacobi identities

fn conj(plan: &mut Plan, wt: WeylType, rng: &mut ChaCha8Rng, budget: usize) -> Result<()> {
    let n = wt.n;
    let d = dahca(wt);
    for l in 1..=n {
        for j in 1..=n {
            for i in 1..=n {
                let d = d.clone();
                plan.eq("conj-inv-c", format!("c{l} [y{j}, x{i}] c{l}"), "", move || {
                    let c = DahcaElem::c(&d, l)?;
                    let rhs = dahca_rel(&d, j, i)?;
                    let sign = if l == i { -1 } else { 1 };
                    Ok((rhs.scale(&int(sign)), c.mul(&rhs)?.mul(&c)?))
                });
            }
        }
    }
    for w in sample_elements(&wt, rng, budget.max(1))? {
        for j in 1..=n {
            for i in 1..=n {
                let d = d.clone();
                plan.eq("conj-inv-W", format!("w [y{j}, x{i}] w^-1"), format!("w = {}", w), move || {
                    let (j2, sj) = image(&w, j);
                    let (i2, si) = image(&w, i);
                    let conj = DahcaElem::group(&d, w)?
                        .mul(&dahca_rel(&d, j, i)?)?
                        .mul(&DahcaElem::group(&d, w.inverse())?)?;
                    Ok((dahca_rel(&d, j2, i2)?.scale(&int(sj * si)), conj))
                });
            }
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug)]
enum Gen {
    X(usize),
    Y(usize),
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::X(i) => write!(f, "x{}", i),
            Gen::Y(i) => write!(f, "y{}", i),
        }
    }
}

/// `[a, [b, c]] + [b, [c, a]] + [c, [a, b]]` where inner `[y, x]` brackets
/// come from the defining relations and everything else from the engine.
fn jacobi_sum<T: Triangular>(
    alg: &Arc<Pbw<T>>,
    g: [Gen; 3],
    rel: &dyn Fn(usize, usize) -> Result<Elem<T>>,
) -> Result<Elem<T>> {
    let el = |x: Gen| match x {
        Gen::X(i) => Elem::left(alg, i),
        Gen::Y(i) => Elem::right(alg, i),
    };
    let br = |a: Gen, b: Gen| -> Result<Elem<T>> {
        match (a, b) {
            (Gen::Y(j), Gen::X(i)) => rel(j, i),
            (Gen::X(i), Gen::Y(j)) => Ok(rel(j, i)?.neg()),
            _ => el(a)?.commutator(&el(b)?),
        }
    };
    let mut out = Elem::zero(alg);
    for k in 0..3 {
        let (a, b, c) = (g[k], g[(k + 1) % 3], g[(k + 2) % 3]);
        out = out.add(&el(a)?.commutator(&br(b, c)?)?)?;
    }
    Ok(out)
}

fn jacobi(plan: &mut Plan, wt: WeylType) -> Result<()> {
    let n = wt.n;
    let gens: Vec<Gen> = (1..=n).flat_map(|i| [Gen::X(i), Gen::Y(i)]).collect();
    let d = dahca(wt);
    let h = daha(wt);
    for a in 0..gens.len() {
        for b in a..gens.len() {
            for c in b..gens.len() {
                let triple = [gens[a], gens[b], gens[c]];
                let label = format!("({}, {}, {})", triple[0], triple[1], triple[2]);
                let dd = d.clone();
                plan.zero("jacobi", format!("dahca {label}"), "", move || {
                    jacobi_sum(&dd, triple, &|j, i| dahca_rel(&dd, j, i))
                });
                let hh = h.clone();
                plan.zero("jacobi", format!("daha {label}"), "", move || {
                    jacobi_sum(&hh, triple, &|j, i| daha_rel(&hh, j, i))
                });
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// cocycle

fn cocycle_suite(plan: &mut Plan, wt: WeylType, rng: &mut ChaCha8Rng, budget: usize) -> Result<()> {
    let els = elements(&wt);
    let ord = els.len();
    let triples: Vec<[SignedPerm; 3]> = if ord * ord * ord <= 4096 {
        let mut v = Vec::new();
        for a in &els {
            for b in &els {
                for c in &els {
                    v.push([*a, *b, *c]);
                }
            }
        }
        v
    } else {
        (0..budget).map(|_| [*pick(rng, &els), *pick(rng, &els), *pick(rng, &els)]).collect()
    };
    for chunk in triples.chunks(64) {
        let chunk = chunk.to_vec();
        let inputs = format!(
            "{} triples from {}",
            chunk.len(),
            chunk[0].iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" ")
        );
        plan.push("cocycle", "a(w,w')a(ww',w'') = a(w',w'')a(w,w'w'')", inputs, move || {
            for [a, b, c] in &chunk {
                let l = cocycle(&wt, a, b)? * cocycle(&wt, &a.mul(b), c)?;
                let r = cocycle(&wt, b, c)? * cocycle(&wt, a, &b.mul(c))?;
                if l != r {
                    return Ok(holds(false, &format!("{} for {} {} {}", r, a, b, c), l.to_string()));
                }
            }
            Ok(holds(true, "", String::new()))
        });
    }
    let pairs: Vec<(SignedPerm, SignedPerm)> = if ord * ord <= 2304 {
        els.iter().flat_map(|a| els.iter().map(move |b| (*a, *b))).collect()
    } else {
        (0..budget).map(|_| (*pick(rng, &els), *pick(rng, &els))).collect()
    };
    for chunk in pairs.chunks(32) {
        let chunk = chunk.to_vec();
        let inputs = format!("{} pairs from ({}, {})", chunk.len(), chunk[0].0, chunk[0].1);
        plan.push("gamma-transport", "gamma_w w(gamma_w') = a(w,w') gamma_ww'", inputs, move || {
            for (a, b) in &chunk {
                let lhs = gamma(&wt, a)?.mul(&gamma(&wt, b)?.act(a)?)?;
                let s = cocycle(&wt, a, b)?;
                let rhs = gamma(&wt, &a.mul(b))?.scale(&Cyc::from_int(s as i64));
                if lhs != rhs {
                    return Ok(Verdict {
                        ok: false,
                        expected: rhs.to_string(),
                        got: format!("{} for ({}, {})", lhs, a, b),
                    });
                }
            }
            Ok(holds(true, "", String::new()))
        });
    }
    for (kind, i, j) in odd_kinds(&wt) {
        plan.eq("odd-reflections", format!("{:?}({i},{j})^2 = 1", kind), "", move || {
            Ok((SpinElem::one(wt), odd_reflection(&wt, kind, i, j)?.pow(2)?))
        });
    }
    Ok(())
}

/// Every odd reflection defined for the type, with `i < j`.
fn odd_kinds(wt: &WeylType) -> Vec<(OddKind, usize, usize)> {
    let n = wt.n;
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            out.push((OddKind::Tij, i, j));
            if wt.family != Family::A {
                out.push((OddKind::TbarIj, i, j));
            }
        }
        if wt.family == Family::B {
            out.push((OddKind::TbarI, i, 0));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// isomorphisms

fn rand_k(wt: WeylType, rng: &mut ChaCha8Rng, els: &[SignedPerm]) -> KElem {
    let mut lin = Lin::zero();
    for _ in 0..rng.gen_range(1..=3) {
        lin.add_term((rand_eps(rng, wt.n), *pick(rng, els)), &rand_coeff(rng));
    }
    KElem::from_lin(wt, lin)
}

fn rand_tensor(wt: WeylType, rng: &mut ChaCha8Rng, els: &[SignedPerm]) -> TensorElem {
    let mut lin = Lin::zero();
    for _ in 0..rng.gen_range(1..=3) {
        lin.add_term((rand_eps(rng, wt.n), *pick(rng, els)), &rand_coeff(rng));
    }
    TensorElem::from_lin(wt, lin)
}

fn iso(plan: &mut Plan, wt: WeylType, rng: &mut ChaCha8Rng, budget: usize) -> Result<()> {
    let n = wt.n;
    let els = elements(&wt);
    let sqrt_m1 = ParamPoly::constant(Cyc::i());
    let sqrt_m2 = ParamPoly::constant(Cyc::sqrt_m2());

    // generator images
    for a in 1..=wt.num_generators() {
        let c = sqrt_m1.clone();
        plan.eq("iso-finite", format!("phi(s{a}) = -sqrt(-1) beta{a} (x) t{a}"), "", move || {
            let b = beta(&wt, a)?;
            let mut lin = Lin::zero();
            for (e, k) in b.terms().iter() {
                lin.add_term((*e, wt.simple(a)?), &-(k * &c));
            }
            Ok((TensorElem::from_lin(wt, lin), phi_finite(&KElem::group_elem(wt, wt.simple(a)?)?)?))
        });
    }
    for i in 1..=n {
        plan.eq("iso-finite", format!("phi(c{i}) = c{i} (x) 1"), "", move || {
            let e = Eps::single(i);
            Ok((
                TensorElem::basis(wt, e, SignedPerm::identity(n)),
                phi_finite(&KElem::basis(wt, e, SignedPerm::identity(n)))?,
            ))
        });
    }

    // displayed images of odd transpositions
    for i in 1..=n {
        for k in (1..=n).filter(|&k| k != i) {
            let c2 = sqrt_m2.clone();
            plan.eq("lemma-identify", format!("(c{k} - c{i}) s{i}{k}"), "", move || {
                let cl = CliffordElem::gen(n, k)?.sub(&CliffordElem::gen(n, i)?)?;
                let a =
                    KElem::clifford(wt, &cl)?.mul(&KElem::group_elem(wt, refl(&wt, ReflectionKind::Sij, i, k)?)?)?;
                let odd = odd_reflection(&wt, OddKind::Tij, k, i)?;
                Ok((spin_as_tensor(wt, &odd).scale(&-&c2), phi_finite(&a)?))
            });
            if wt.family != Family::A {
                let c2 = sqrt_m2.clone();
                plan.eq("lemma-identify", format!("(c{k} + c{i}) sbar{i}{k}"), "", move || {
                    let cl = CliffordElem::gen(n, k)?.add(&CliffordElem::gen(n, i)?)?;
                    let a = KElem::clifford(wt, &cl)?
                        .mul(&KElem::group_elem(wt, refl(&wt, ReflectionKind::SbarIj, i, k)?)?)?;
                    let odd = odd_reflection(&wt, OddKind::TbarIj, k, i)?;
                    Ok((spin_as_tensor(wt, &odd).scale(&-&c2), phi_finite(&a)?))
                });
            }
        }
        if wt.family == Family::B {
            let c1 = sqrt_m1.clone();
            plan.eq("lemma-identify", format!("c{i} tau{i}"), "", move || {
                let a = KElem::basis(wt, Eps::single(i), SignedPerm::sign_change(n, i));
                let odd = odd_reflection(&wt, OddKind::TbarI, i, 0)?;
                Ok((spin_as_tensor(wt, &odd).scale(&-&c1), phi_finite(&a)?))
            });
        }
    }

    // finite round trips and multiplicativity
    for k in 0..budget {
        let (a, b) = (rand_k(wt, rng, &els), rand_k(wt, rng, &els));
        let t = rand_tensor(wt, rng, &els);
        let inputs = format!("a = {} | b = {} | T = {}", a, b, t);
        plan.push("iso-finite", format!("finite case {k}"), inputs, move || {
            let ab = phi_finite(&a.mul(&b)?)?;
            let prod = phi_finite(&a)?.mul(&phi_finite(&b)?)?;
            if ab != prod {
                return Ok(same(&prod, &ab));
            }
            let back = psi_finite(&phi_finite(&a)?)?;
            if back != a {
                return Ok(same(&a, &back));
            }
            Ok(same(&t, &phi_finite(&psi_finite(&t)?)?))
        });
    }

    // the double affine isomorphism
    let d = dahca(wt);
    let s = sdaha(wt);
    for i in 1..=n {
        let (dd, ss, c2) = (d.clone(), s.clone(), sqrt_m2.clone());
        plan.eq("iso-big", format!("Phi(x{i}) = sqrt(-2) c{i} (x) xi{i}"), "", move || {
            let exp = TensorSdaha::clifford(&ss, Eps::single(i))
                .mul(&TensorSdaha::from_sdaha(&SdahaElem::xi(&ss, i)?))?
                .scale(&c2);
            Ok((exp, phi_big(&DahcaElem::x(&dd, i)?, &ss)?))
        });
        let (dd, ss) = (d.clone(), s.clone());
        plan.eq("iso-big", format!("Phi(y{i}) = 1 (x) y{i}"), "", move || {
            Ok((TensorSdaha::from_sdaha(&SdahaElem::y(&ss, i)?), phi_big(&DahcaElem::y(&dd, i)?, &ss)?))
        });
    }
    let mut dmid = dahca_mid(wt);
    for k in 0..budget {
        let a = rand_elem(&d, rng, 2, 2, &mut dmid);
        let b = rand_elem(&d, rng, 2, 2, &mut dmid);
        let mut lin = Lin::zero();
        for _ in 0..2 {
            let (x, y) = rand_split(rng, n, 2);
            lin.add_term((rand_eps(rng, n), Mono { x, mid: *pick(rng, &els), y }), &rand_coeff(rng));
        }
        let t = TensorSdaha::from_lin(&s, lin);
        let inputs = format!("a = {} | b = {} | T = {}", a, b, t);
        let (s, d) = (s.clone(), d.clone());
        plan.push("iso-big", format!("double affine case {k}"), inputs, move || {
            let ab = phi_big(&a.mul(&b)?, &s)?;
            let prod = phi_big(&a, &s)?.mul(&phi_big(&b, &s)?)?;
            if ab != prod {
                return Ok(same(&prod, &ab));
            }
            let back = psi_big(&phi_big(&a, &s)?, &d)?;
            if back != a {
                return Ok(same(&a, &back));
            }
            Ok(same(&t, &phi_big(&psi_big(&t, &d)?, &s)?))
        });
    }
    Ok(())
}

fn spin_as_tensor(wt: WeylType, s: &SpinElem) -> TensorElem {
    TensorElem::from_lin(wt, s.terms().map_keys(|w| (1, (Eps::ONE, *w))))
}

// ---------------------------------------------------------------------------
// center

/// `W`-invariant `y`-polynomials: `e_k` in type A, power sums of squares
/// (plus `e_n` in type D) otherwise.
fn y_invariants(wt: &WeylType) -> Vec<(String, Poly)> {
    let n = wt.n;
    match wt.family {
        Family::A => (1..=n).map(|k| (format!("e{k}(y)"), elementary_symmetric(n, k))).collect(),
        _ => {
            let mut v: Vec<(String, Poly)> =
                (1..=3).map(|k| (format!("p{k}(y^2)"), power_sum_of_squares(n, k))).collect();
            if wt.family == Family::D {
                v.push((format!("e{n}(y)"), elementary_symmetric(n, n)));
            }
            v
        }
    }
}

fn center(plan: &mut Plan, wt: WeylType) -> Result<()> {
    let n = wt.n;
    let d = dahca(wt);
    let s = sdaha(wt);
    let mut dcentral: Vec<(String, DahcaElem)> = Vec::new();
    let mut scentral: Vec<(String, SdahaElem)> = Vec::new();
    for (name, f) in y_invariants(&wt) {
        dcentral.push((name.clone(), DahcaElem::from_y_poly(&d, &f)?));
        scentral.push((name, SdahaElem::from_y_poly(&s, &f)?));
    }
    for k in 1..=3 {
        dcentral.push((format!("p{k}(x^2)"), DahcaElem::from_x_poly(&d, &power_sum_of_squares(n, k))?));
        scentral.push((format!("p{k}(xi^2)"), xi_square_power_sum(&s, k)));
    }
    let dg = dahca_gens(&d)?;
    for (name, z) in dcentral {
        for g in &dg {
            let (z, g) = (z.clone(), g.clone());
            plan.zero("center-dahca", format!("[{name}, {g}] = 0"), "", move || z.commutator(&g));
        }
    }
    let sg = sdaha_gens(&s)?;
    for (name, z) in scentral {
        for g in &sg {
            let (z, g) = (z.clone(), g.clone());
            plan.zero("center-sdaha", format!("[{name}, {g}] = 0"), "", move || z.commutator(&g));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Dunkl modules

fn rand_module(kind: ModuleKind, wt: WeylType, rng: &mut ChaCha8Rng) -> PolyModElem {
    let mut lin = Lin::zero();
    for _ in 0..rng.gen_range(1..=2) {
        let d = rng.gen_range(0..=3);
        lin.add_term((rand_exps(rng, wt.n, d), rand_eps(rng, wt.n)), &rand_coeff(rng));
    }
    PolyModElem::from_lin(kind, wt, lin)
}

fn dunkl(plan: &mut Plan, wt: WeylType, rng: &mut ChaCha8Rng, budget: usize) -> Result<()> {
    let d = dahca(wt);
    let s = sdaha(wt);
    let mut dmid = dahca_mid(wt);
    let mut smid = perm_mid(wt);
    for (topic, kind) in [("dunkl-x", ModuleKind::DahcaX), ("dunkl-y", ModuleKind::DahcaY)] {
        for k in 0..budget {
            let a = rand_elem(&d, rng, 1, 2, &mut dmid);
            let b = rand_elem(&d, rng, 1, 2, &mut dmid);
            let m = rand_module(kind, wt, rng);
            let inputs = format!("a = {} | b = {} | m = {}", a, b, m);
            plan.eq(topic, format!("act(ab) = act(a) act(b), case {k}"), inputs, move || {
                Ok((dunkl_act(&a, &dunkl_act(&b, &m)?)?, dunkl_act(&a.mul(&b)?, &m)?))
            });
        }
    }
    for k in 0..budget {
        let a = rand_elem(&s, rng, 1, 2, &mut smid);
        let b = rand_elem(&s, rng, 1, 2, &mut smid);
        let m = rand_module(ModuleKind::SdahaY, wt, rng);
        let inputs = format!("a = {} | b = {} | m = {}", a, b, m);
        plan.eq("dunkl-xi", format!("act(ab) = act(a) act(b), case {k}"), inputs, move || {
            Ok((dunkl_act_sdaha(&a, &dunkl_act_sdaha(&b, &m)?)?, dunkl_act_sdaha(&a.mul(&b)?, &m)?))
        });
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// quotients

fn quotient(plan: &mut Plan, wt: WeylType, rng: &mut ChaCha8Rng, budget: usize) -> Result<()> {
    let n = wt.n;
    let c = cdaha(wt);
    let h0 = daha_t0(wt);
    let s = sdaha(wt);

    {
        let (c, h0, s) = (c.clone(), h0.clone(), s.clone());
        plan.push("quotient-plus", "target has t = 0, z maps to +1 and -1", "", move || {
            let p = upsilon_plus(&CdahaElem::z(&c), &h0)?;
            let m = upsilon_minus(&CdahaElem::z(&c), &s)?;
            let ok = h0.spec().t_is_zero() && p == DahaElem::one(&h0) && m == SdahaElem::one(&s).neg();
            Ok(holds(ok, "t = 0, 1, -1", format!("{}, {}, {}", h0.spec().t_is_zero(), p, m)))
        });
    }
    for i in 1..=n {
        let (cc, h0c) = (c.clone(), h0.clone());
        plan.push("quotient-plus", format!("xt{i}, yt{i} images"), "", move || {
            let ok = upsilon_plus(&CdahaElem::xt(&cc, i)?, &h0c)? == DahaElem::x(&h0c, i)?
                && upsilon_plus(&CdahaElem::yt(&cc, i)?, &h0c)? == DahaElem::y(&h0c, i)?;
            Ok(holds(ok, "x, y", ok.to_string()))
        });
        let (cc, ss) = (c.clone(), s.clone());
        plan.push("quotient-minus", format!("xt{i}, yt{i} images"), "", move || {
            let ok = upsilon_minus(&CdahaElem::xt(&cc, i)?, &ss)? == SdahaElem::xi(&ss, i)?
                && upsilon_minus(&CdahaElem::yt(&cc, i)?, &ss)? == SdahaElem::y(&ss, i)?;
            Ok(holds(ok, "xi, y", ok.to_string()))
        });
    }

    // images of the lifted reflections
    for (kind, i, j) in odd_kinds(&wt) {
        for (a, b) in [(i, j), (j, i)] {
            if kind == OddKind::TbarI && a == 0 {
                continue;
            }
            let cover_kind = match kind {
                OddKind::Tij => CoverKind::Brace,
                OddKind::TbarIj => CoverKind::BraceBar,
                OddKind::TbarI => CoverKind::BraceI,
            };
            let refl_kind = match kind {
                OddKind::Tij => ReflectionKind::Sij,
                OddKind::TbarIj => ReflectionKind::SbarIj,
                OddKind::TbarI => ReflectionKind::TauI,
            };
            let (c, h0, s) = (c.clone(), h0.clone(), s.clone());
            plan.push("lemma-quotient", format!("{:?}({a},{b})", cover_kind), "", move || {
                let lift = CdahaElem::lift(&c, cover_kind, a, b)?;
                let plus = upsilon_plus(&lift, &h0)?;
                let minus = upsilon_minus(&lift, &s)?;
                let exp_plus = DahaElem::group(&h0, refl(&wt, refl_kind, a, b)?)?;
                let exp_minus = SdahaElem::odd(&s, kind, a, b)?;
                let ok = plus == exp_plus && minus == exp_minus;
                Ok(holds(ok, &format!("{} and {}", exp_plus, exp_minus), format!("{} and {}", plus, minus)))
            });
        }
    }

    // group elements along canonical words
    for w in elements_or_generators(&wt)? {
        let (c, h0, s) = (c.clone(), h0.clone(), s.clone());
        plan.push("quotient-square", "word products commute with the quotients", format!("w = {}", w), move || {
            let word = wt.reduced_word(&w)?;
            let mut pc = CdahaElem::one(&c);
            let mut ph = DahaElem::one(&h0);
            let mut ps = SdahaElem::one(&s);
            for &a in &word {
                pc = pc.mul(&CdahaElem::tt(&c, a)?)?;
                ph = ph.mul(&DahaElem::simple(&h0, a)?)?;
                ps = ps.mul(&SdahaElem::t(&s, a)?)?;
            }
            for zc in [false, true] {
                let g = if zc { CdahaElem::z(&c).mul(&pc)? } else { pc.clone() };
                let sign = if zc { -1 } else { 1 };
                if upsilon_plus(&g, &h0)? != ph {
                    return Ok(same(&ph, &upsilon_plus(&g, &h0)?));
                }
                let exp = ps.scale(&int(sign));
                if upsilon_minus(&g, &s)? != exp {
                    return Ok(same(&exp, &upsilon_minus(&g, &s)?));
                }
            }
            Ok(holds(true, "", String::new()))
        });
    }

    let mut mid = cover_mid(wt);
    for k in 0..budget {
        let a = rand_elem(&c, rng, 2, 2, &mut mid);
        let b = rand_elem(&c, rng, 2, 2, &mut mid);
        let inputs = format!("a = {} | b = {}", a, b);
        let (a2, b2, h0) = (a.clone(), b.clone(), h0.clone());
        plan.eq("quotient-plus", format!("multiplicative, case {k}"), inputs.clone(), move || {
            let ab = upsilon_plus(&a2.mul(&b2)?, &h0)?;
            Ok((upsilon_plus(&a2, &h0)?.mul(&upsilon_plus(&b2, &h0)?)?, ab))
        });
        let s = s.clone();
        plan.eq("quotient-minus", format!("multiplicative, case {k}"), inputs, move || {
            let ab = upsilon_minus(&a.mul(&b)?, &s)?;
            Ok((upsilon_minus(&a, &s)?.mul(&upsilon_minus(&b, &s)?)?, ab))
        });
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// closed-form commutators

fn closedform(plan: &mut Plan, wt: WeylType, rng: &mut ChaCha8Rng, budget: usize) -> Result<()> {
    let n = wt.n;
    let d = dahca(wt);
    let s = sdaha(wt);
    for i in 1..=n {
        for j in 1..=n {
            for l in 1..=4u8 {
                let dd = d.clone();
                plan.eq("comm-y-xpow", format!("[y{i}, x{j}^{l}]"), "", move || {
                    let xl = DahcaElem::x(&dd, j)?.pow(l as u32)?;
                    Ok((comm_y_xpow(&dd, i, j, l)?, DahcaElem::y(&dd, i)?.commutator(&xl)?))
                });
                let dd = d.clone();
                plan.eq("comm-ypow-x", format!("[y{j}^{l}, x{i}]"), "", move || {
                    let yl = DahcaElem::y(&dd, j)?.pow(l as u32)?;
                    Ok((comm_ypow_x(&dd, j, i, l)?, yl.commutator(&DahcaElem::x(&dd, i)?)?))
                });
                let ss = s.clone();
                plan.eq("sdaha-comm-ypow", format!("[y{j}^{l}, xi{i}]"), "", move || {
                    let yl = SdahaElem::y(&ss, j)?.pow(l as u32)?;
                    Ok((sdaha_comm_ypow_xi(&ss, j, i, l)?, yl.commutator(&SdahaElem::xi(&ss, i)?)?))
                });
            }
        }
    }
    for k in 0..budget {
        let f = rand_poly(rng, n, 3, 3);
        let i = rng.gen_range(1..=n);
        let inputs = format!("f = {}, i = {}", f.display_with("x"), i);
        let dd = d.clone();
        plan.eq("comm-y-f", format!("[y_i, f(x)], case {k}"), inputs, move || {
            let fx = DahcaElem::from_x_poly(&dd, &f)?;
            Ok((comm_closed_form(&dd, ClosedFormKind::YVsXPoly, &f, i)?, DahcaElem::y(&dd, i)?.commutator(&fx)?))
        });
        let f = rand_poly(rng, n, 3, 3);
        let i = rng.gen_range(1..=n);
        let inputs = format!("f = {}, i = {}", f.display_with("y"), i);
        let dd = d.clone();
        plan.eq("comm-f-x", format!("[f(y), x_i], case {k}"), inputs, move || {
            let fy = DahcaElem::from_y_poly(&dd, &f)?;
            Ok((comm_closed_form(&dd, ClosedFormKind::YPolyVsX, &f, i)?, fy.commutator(&DahcaElem::x(&dd, i)?)?))
        });
        let f = rand_poly(rng, n, 3, 3);
        let i = rng.gen_range(1..=n);
        let inputs = format!("f = {}, i = {}", f.display_with("y"), i);
        let ss = s.clone();
        plan.eq("sdaha-comm-f", format!("[f(y), xi_i], case {k}"), inputs, move || {
            let fy = SdahaElem::from_y_poly(&ss, &f)?;
            Ok((sdaha_comm_closed_form(&ss, &f, i)?, fy.commutator(&SdahaElem::xi(&ss, i)?)?))
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_and_rank() {
        assert!(matches!(run_suite("nope", Family::A, 2, 0, 1), Err(Error::UnknownSuite(_))));
        assert!(matches!(run_suite("relations", Family::A, 1, 0, 1), Err(Error::UnsupportedRank { .. })));
    }

    #[test]
    fn reports_are_deterministic() {
        let a = run_suite("assoc", Family::A, 2, 5, 20).unwrap();
        let b = run_suite("assoc", Family::A, 2, 5, 20).unwrap();
        assert_eq!(a, b);
        assert!(a.passed(), "{}", a);
    }

    #[test]
    fn suites_cover_every_topic() {
        let mut seen = BTreeSet::new();
        for name in SUITES {
            let r = run_suite(name, Family::B, 2, 0, 4).unwrap();
            assert!(r.passed(), "{}", r);
            seen.extend(r.topics);
        }
        for t in REQUIRED_TOPICS {
            assert!(seen.contains(t), "topic {} not covered", t);
        }
    }

    #[test]
    fn relations_a3() {
        let r = run_suite("relations", Family::A, 3, 0, DEFAULT_BUDGET).unwrap();
        assert!(r.passed(), "{}", r);
    }
}
