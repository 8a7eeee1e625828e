use std::sync::Arc;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use spinhecke::cdaha::{cdaha, daha, daha_t0};
use spinhecke::clifford::Eps;
use spinhecke::dahca::dahca;
use spinhecke::expr::{parse_cdaha, parse_daha, parse_dahca, parse_sdaha, parse_tensor};
use spinhecke::lin::Lin;
use spinhecke::pbw::{Elem, Mono, Pbw, Triangular};
use spinhecke::poly::{Exps, ZERO_EXPS};
use spinhecke::scalars::{Cyc, ParamExp, ParamPoly, Rational};
use spinhecke::sdaha::{sdaha, TensorSdaha};
use spinhecke::spin::CoverElem;
use spinhecke::weyl::{Family, SignedPerm, WeylType};

fn coeff(r: &mut ChaCha8Rng) -> ParamPoly {
    let mut p = ParamPoly::zero();
    for _ in 0..r.gen_range(1..=2) {
        let coords: [Rational; 4] = std::array::from_fn(|_| {
            if r.gen_bool(0.5) {
                spinhecke::scalars::rat(r.gen_range(-5..=5), r.gen_range(1..=4))
            } else {
                spinhecke::scalars::rat(0, 1)
            }
        });
        let c = Cyc::new(coords);
        let e: ParamExp = [r.gen_range(0..2), r.gen_range(0..3), r.gen_range(0..2)];
        p.add_term(e, &c);
    }
    if p.is_zero() {
        ParamPoly::one()
    } else {
        p
    }
}

fn exps(r: &mut ChaCha8Rng, n: usize) -> Exps {
    let mut e = ZERO_EXPS;
    for k in 0..n {
        e[k] = r.gen_range(0..3);
    }
    e
}

fn random<T: Triangular>(
    alg: &Arc<Pbw<T>>,
    r: &mut ChaCha8Rng,
    mut mid: impl FnMut(&mut ChaCha8Rng) -> T::Mid,
) -> Elem<T> {
    let n = alg.n();
    let mut lin = Lin::zero();
    for _ in 0..r.gen_range(0..5) {
        let m = Mono { x: exps(r, n), mid: mid(r), y: exps(r, n) };
        lin.add_term(m, &coeff(r));
    }
    Elem::from_lin(alg, lin)
}

fn types() -> Vec<WeylType> {
    vec![
        WeylType::new(Family::A, 3).unwrap(),
        WeylType::new(Family::B, 2).unwrap(),
        WeylType::new(Family::D, 4).unwrap(),
    ]
}

fn element(wt: &WeylType, r: &mut ChaCha8Rng) -> SignedPerm {
    let els = wt.group().elements().to_vec();
    els[r.gen_range(0..els.len())]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn printed_normal_forms_parse_back(seed in any::<u64>()) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        for wt in types() {
            let n = wt.n;
            let d = dahca(wt);
            let a = random(&d, &mut r, |r| (Eps(r.gen_range(0..(1u16 << n))), element(&wt, r)));
            prop_assert_eq!(parse_dahca(&a.to_string(), &d).unwrap(), a);

            let s = sdaha(wt);
            let b = random(&s, &mut r, |r| element(&wt, r));
            prop_assert_eq!(parse_sdaha(&b.to_string(), &s).unwrap(), b);

            let c = cdaha(wt);
            let g = random(&c, &mut r, |r| CoverElem { z: r.gen_bool(0.5), w: element(&wt, r) });
            prop_assert_eq!(parse_cdaha(&g.to_string(), &c).unwrap(), g);

            for h in [daha(wt), daha_t0(wt)] {
                let e = random(&h, &mut r, |r| element(&wt, r));
                prop_assert_eq!(parse_daha(&e.to_string(), &h).unwrap(), e);
            }

            let mut lin = Lin::zero();
            for _ in 0..r.gen_range(0..4) {
                let m = Mono { x: exps(&mut r, n), mid: element(&wt, &mut r), y: exps(&mut r, n) };
                lin.add_term((Eps(r.gen_range(0..(1u16 << n))), m), &coeff(&mut r));
            }
            let t = TensorSdaha::from_lin(&s, lin);
            prop_assert_eq!(parse_tensor(&t.to_string(), &s).unwrap(), t);
        }
    }
}
