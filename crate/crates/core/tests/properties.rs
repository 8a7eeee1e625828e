use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use spinhecke::cdaha::{cdaha, daha_t0, upsilon_minus, upsilon_plus, CdahaElem};
use spinhecke::clifford::{Eps, KElem};
use spinhecke::dahca::{dahca, DahcaElem};
use spinhecke::dunkl::{dunkl_act, ModuleKind, PolyModElem};
use spinhecke::lin::Lin;
use spinhecke::pbw::Mono;
use spinhecke::poly::{Exps, ZERO_EXPS};
use spinhecke::scalars::{rat, Cyc, ParamPoly};
use spinhecke::sdaha::{phi_big, psi_big, sdaha};
use spinhecke::spin::{phi_finite, psi_finite};
use spinhecke::verify::run_suite;
use spinhecke::weyl::{Family, SignedPerm, WeylType};

fn cyc() -> impl Strategy<Value = Cyc> {
    prop::array::uniform4((-6i64..=6, 1i64..=5)).prop_map(|c| Cyc::new(c.map(|(n, d)| rat(n, d))))
}

fn exps(r: &mut ChaCha8Rng, n: usize, max: usize) -> Exps {
    let mut e = ZERO_EXPS;
    for _ in 0..r.gen_range(0..=max) {
        e[r.gen_range(0..n)] += 1;
    }
    e
}

fn coeff(r: &mut ChaCha8Rng) -> ParamPoly {
    let c = ParamPoly::from_int(r.gen_range(-3..=3));
    if r.gen_bool(0.3) {
        &c * &ParamPoly::u()
    } else {
        c
    }
}

fn perm(wt: &WeylType, r: &mut ChaCha8Rng) -> SignedPerm {
    let g = wt.group();
    g.elements()[r.gen_range(0..g.order())]
}

fn dahca_elem(wt: WeylType, r: &mut ChaCha8Rng) -> DahcaElem {
    let d = dahca(wt);
    let mut lin = Lin::zero();
    for _ in 0..r.gen_range(1..=3) {
        let m =
            Mono { x: exps(r, wt.n, 2), mid: (Eps(r.gen_range(0..(1u16 << wt.n))), perm(&wt, r)), y: exps(r, wt.n, 2) };
        lin.add_term(m, &coeff(r));
    }
    DahcaElem::from_lin(&d, lin)
}

fn cdaha_elem(wt: WeylType, r: &mut ChaCha8Rng) -> CdahaElem {
    let c = cdaha(wt);
    let mut lin = Lin::zero();
    for _ in 0..r.gen_range(1..=3) {
        let g = spinhecke::spin::CoverElem { z: r.gen_bool(0.5), w: perm(&wt, r) };
        lin.add_term(Mono { x: exps(r, wt.n, 2), mid: g, y: exps(r, wt.n, 2) }, &coeff(r));
    }
    CdahaElem::from_lin(&c, lin)
}

fn family() -> impl Strategy<Value = WeylType> {
    prop_oneof![
        Just(WeylType::new(Family::A, 3).unwrap()),
        Just(WeylType::new(Family::B, 2).unwrap()),
        Just(WeylType::new(Family::B, 3).unwrap()),
        Just(WeylType::new_small_d(Family::D, 3).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cyclotomic_field_axioms(a in cyc(), b in cyc(), c in cyc()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn dahca_product_is_associative(wt in family(), seed in any::<u64>()) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let (a, b, c) = (dahca_elem(wt, &mut r), dahca_elem(wt, &mut r), dahca_elem(wt, &mut r));
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
    }

    #[test]
    fn big_isomorphism_is_multiplicative_and_invertible(wt in family(), seed in any::<u64>()) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let (s, d) = (sdaha(wt), dahca(wt));
        let (a, b) = (dahca_elem(wt, &mut r), dahca_elem(wt, &mut r));
        let pa = phi_big(&a, &s).unwrap();
        prop_assert_eq!(phi_big(&a.mul(&b).unwrap(), &s).unwrap(), pa.mul(&phi_big(&b, &s).unwrap()).unwrap());
        prop_assert_eq!(psi_big(&pa, &d).unwrap(), a);
    }

    #[test]
    fn finite_isomorphism_round_trips(wt in family(), seed in any::<u64>()) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let mut lin = Lin::zero();
        for _ in 0..3 {
            lin.add_term((Eps(r.gen_range(0..(1u16 << wt.n))), perm(&wt, &mut r)), &coeff(&mut r));
        }
        let k = KElem::from_lin(wt, lin);
        prop_assert_eq!(psi_finite(&phi_finite(&k).unwrap()).unwrap(), k);
    }

    #[test]
    fn quotients_are_multiplicative(wt in family(), seed in any::<u64>()) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let (a, b) = (cdaha_elem(wt, &mut r), cdaha_elem(wt, &mut r));
        let ab = a.mul(&b).unwrap();
        let h0 = daha_t0(wt);
        let s = sdaha(wt);
        prop_assert_eq!(
            upsilon_plus(&ab, &h0).unwrap(),
            upsilon_plus(&a, &h0).unwrap().mul(&upsilon_plus(&b, &h0).unwrap()).unwrap()
        );
        prop_assert_eq!(
            upsilon_minus(&ab, &s).unwrap(),
            upsilon_minus(&a, &s).unwrap().mul(&upsilon_minus(&b, &s).unwrap()).unwrap()
        );
    }

    #[test]
    fn dunkl_action_is_a_module(wt in family(), seed in any::<u64>(), x_kind in any::<bool>()) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let kind = if x_kind { ModuleKind::DahcaX } else { ModuleKind::DahcaY };
        let (a, b) = (dahca_elem(wt, &mut r), dahca_elem(wt, &mut r));
        let mut lin = Lin::zero();
        for _ in 0..2 {
            lin.add_term((exps(&mut r, wt.n, 3), Eps(r.gen_range(0..(1u16 << wt.n)))), &coeff(&mut r));
        }
        let m = PolyModElem::from_lin(kind, wt, lin);
        let lhs = dunkl_act(&a.mul(&b).unwrap(), &m).unwrap();
        prop_assert_eq!(lhs, dunkl_act(&a, &dunkl_act(&b, &m).unwrap()).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn suite_reports_depend_only_on_inputs(seed in any::<u64>()) {
        let a = run_suite("dunkl", Family::B, 2, seed, 10).unwrap();
        let b = run_suite("dunkl", Family::B, 2, seed, 10).unwrap();
        prop_assert!(a.passed());
        prop_assert_eq!(a, b);
    }
}
