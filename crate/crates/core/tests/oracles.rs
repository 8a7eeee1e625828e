//! Worked products, written as text on both sides.

use spinhecke::cdaha::{cdaha, daha, daha_t0, upsilon_minus, upsilon_plus};
use spinhecke::dahca::dahca;
use spinhecke::expr::{parse_cdaha, parse_daha, parse_dahca, parse_sdaha, parse_tensor};
use spinhecke::sdaha::{phi_big, psi_big, sdaha};
use spinhecke::weyl::{Family, WeylType};

fn wt(f: Family, n: usize) -> WeylType {
    WeylType::new(f, n).unwrap()
}

fn dahca_eq(w: WeylType, lhs: &str, rhs: &str) {
    let d = dahca(w);
    assert_eq!(parse_dahca(lhs, &d).unwrap(), parse_dahca(rhs, &d).unwrap(), "{} = {}", lhs, rhs);
}

fn sdaha_eq(w: WeylType, lhs: &str, rhs: &str) {
    let s = sdaha(w);
    assert_eq!(parse_sdaha(lhs, &s).unwrap(), parse_sdaha(rhs, &s).unwrap(), "{} = {}", lhs, rhs);
}

fn cdaha_eq(w: WeylType, lhs: &str, rhs: &str) {
    let c = cdaha(w);
    assert_eq!(parse_cdaha(lhs, &c).unwrap(), parse_cdaha(rhs, &c).unwrap(), "{} = {}", lhs, rhs);
}

fn daha_eq(w: WeylType, lhs: &str, rhs: &str) {
    let h = daha(w);
    assert_eq!(parse_daha(lhs, &h).unwrap(), parse_daha(rhs, &h).unwrap(), "{} = {}", lhs, rhs);
}

#[test]
fn dahca_products() {
    let a2 = wt(Family::A, 2);
    dahca_eq(a2, "y1*x1", "x1*y1 - u*w[2,1] + u*c1*c2*w[2,1]");
    dahca_eq(a2, "w[2,1]*x1", "x2*w[2,1]");
    dahca_eq(a2, "c1*x1", "-x1*c1");
    dahca_eq(a2, "y2*x1 - x1*y2", "u*w[2,1] - u*c1*c2*w[2,1]");
    dahca_eq(wt(Family::A, 3), "(y1 + y2 + y3)*x1 - x1*(y1 + y2 + y3)", "0");
    dahca_eq(wt(Family::B, 2), "y1*(x1^2 + x2^2) - (x1^2 + x2^2)*y1", "0");
    dahca_eq(
        wt(Family::B, 2),
        "y1*x1 - x1*y1",
        "-u*(1 + c2*c1)*w[2,1] - u*(1 - c2*c1)*w[-2,-1] - (z8 - z8^3)*v*w[-1,2]",
    );
    dahca_eq(wt(Family::D, 4), "y2*x1 - x1*y2", "u*((1 + c2*c1)*w[2,1,3,4] - (1 - c2*c1)*w[-2,-1,3,4])");
}

#[test]
fn sdaha_products() {
    let a2 = wt(Family::A, 2);
    sdaha_eq(a2, "t1*xi1", "-xi2*t1");
    sdaha_eq(a2, "xi2*xi1", "-xi1*xi2");
    sdaha_eq(a2, "y1*xi1", "xi1*y1 + u*t1");
    sdaha_eq(a2, "y2*xi1 - xi1*y2", "-u*t1");
    sdaha_eq(wt(Family::A, 3), "(y1 + y2 + y3)*xi1 - xi1*(y1 + y2 + y3)", "0");
    sdaha_eq(wt(Family::A, 4), "(t1*t3)^2", "-1");
    sdaha_eq(wt(Family::B, 2), "(t1*t2)^4", "-1");
}

#[test]
fn cdaha_and_daha_products() {
    cdaha_eq(wt(Family::A, 2), "xt2*xt1", "z*xt1*xt2");
    cdaha_eq(wt(Family::A, 3), "tt1*xt3", "z*xt3*tt1");
    cdaha_eq(wt(Family::A, 2), "yt2*xt1 - xt1*yt2", "u*z*tt1");
    daha_eq(wt(Family::A, 2), "y2*x1", "x1*y2 + u*s1");
    daha_eq(wt(Family::A, 2), "y1*x1", "x1*y1 + t - u*s1");
    daha_eq(wt(Family::A, 2), "s1*x1", "x2*s1");
}

#[test]
fn isomorphism_and_quotient_images() {
    let a2 = wt(Family::A, 2);
    let (d, s) = (dahca(a2), sdaha(a2));
    let x1 = parse_dahca("x1", &d).unwrap();
    assert_eq!(phi_big(&x1, &s).unwrap(), parse_tensor("(z8 + z8^3)*c1 (x) xi1", &s).unwrap());
    let xi1 = parse_tensor("xi1", &s).unwrap();
    assert_eq!(psi_big(&xi1, &d).unwrap(), parse_dahca("-1/2*(z8 + z8^3)*c1*x1", &d).unwrap());
    let yx = parse_dahca("y1*x1", &d).unwrap();
    assert_eq!(psi_big(&phi_big(&yx, &s).unwrap(), &d).unwrap(), yx);

    let c = cdaha(a2);
    let h0 = daha_t0(a2);
    let zx = parse_cdaha("z*xt1", &c).unwrap();
    assert_eq!(upsilon_plus(&zx, &h0).unwrap(), parse_daha("x1", &h0).unwrap());
    assert_eq!(upsilon_minus(&zx, &s).unwrap(), parse_sdaha("-xi1", &s).unwrap());
    let tt = parse_cdaha("tt1", &c).unwrap();
    assert_eq!(upsilon_plus(&tt, &h0).unwrap(), parse_daha("s1", &h0).unwrap());
    assert_eq!(upsilon_minus(&tt, &s).unwrap(), parse_sdaha("t1", &s).unwrap());

    let b2 = wt(Family::B, 2);
    let (cb, sb) = (cdaha(b2), sdaha(b2));
    let br = parse_cdaha("yt1*xt1 - xt1*yt1", &cb).unwrap();
    let expected = parse_sdaha("y1*xi1 - xi1*y1", &sb).unwrap();
    assert_eq!(upsilon_minus(&br, &sb).unwrap(), expected);
}
