//! Riemann-Roch as exact ring identities: the closed-immersion formula,
//! the projection formula with its Todd correction, and the general lci
//! case, verified across an orientation pair.
//!
//! Run with: cargo run -p orient-rr --example riemann_roch

use orient_rr::fgl::Theory;
use orient_rr::rr::{verify_grr_lci, verify_rr_closed, verify_rr_projection, OrientationPair};
use orient_rr::space::{Bundle, Embedding, Space};

fn main() -> orient_rr::Result<()> {
    let theory = Theory::Multiplicative;
    let order = 10;
    let pair = OrientationPair::new(
        &theory.native_orientation(order),
        &theory.reference_orientation(order),
    )?;
    println!("orientation pair {} with Phi(t) = {}", pair.label(), pair.phi().render());

    // closed immersion: the zero section of a twist on P^1
    let p1 = Space::projective_space(1, theory.coeff_ring(order))?;
    let h = p1.hyperplane().expect("hyperplane");
    let twist = Bundle::line(&p1, h.clone())?;
    let (_, section) = Embedding::zero_section(&twist, "T", "z", pair.ctx1())?;
    let v = verify_rr_closed(&pair, &section, &p1.ring().one());
    println!("[{}] {}", if v.passed() { "pass" } else { "FAIL" }, v.check);
    println!("  i_*^(1)(1)                = {}", v.lhs);
    println!("  i_*^(2)(td(-N) . 1)       = {}", v.rhs);

    // projection: both sides encode chi(P^1, O) = 1
    let v = verify_rr_projection(&pair, &p1, &p1.ring().one());
    println!("[{}] {}", if v.passed() { "pass" } else { "FAIL" }, v.check);
    println!("  p_*^(1)(1)                = {}", v.lhs);
    println!("  p_*^(2)(td(T_p) . 1)      = {}", v.rhs);

    // a genuine lci composite: P^1 inside P^2, pushed to the point
    let p2 = Space::projective_space(2, theory.coeff_ring(order))?;
    let linear = Embedding::linear(&p1, &p2, pair.ctx1())?;
    let v = verify_grr_lci(&pair, &linear, &p1.ring().one());
    println!("[{}] {}", if v.passed() { "pass" } else { "FAIL" }, v.check);
    println!("  f_*^(1)(1)                = {}", v.lhs);
    println!("  f_*^(2)(td(tau_f) . 1)    = {}", v.rhs);
    Ok(())
}
