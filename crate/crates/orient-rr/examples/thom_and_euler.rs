//! Thom classes, the quotient-bundle identity, and zero sections as
//! closed immersions with fundamental classes.
//!
//! Run with: cargo run -p orient-rr --example thom_and_euler

use orient_rr::classes::{euler, thom, OrientedCtx};
use orient_rr::fgl::Theory;
use orient_rr::gysin::{pushforward_embedding, self_intersection_check};
use orient_rr::space::{universal_quotient, Bundle, Embedding, Space};

fn main() -> orient_rr::Result<()> {
    let theory = Theory::Multiplicative;
    let ctx = OrientedCtx::new(theory.native_orientation(10))?;
    let p1 = Space::projective_space(1, theory.coeff_ring(10))?;
    let h = p1.hyperplane().expect("hyperplane");

    // the Thom class of E lives on the projective completion P(E + 1)
    let e = Bundle::from_roots(&p1, vec![h.clone(), h.neg()])?;
    let (total, th) = thom(&e, "Ebar", "z", &ctx)?;
    println!("thom(E) on {} = {}", total.name(), th);

    // and equals the top Chern class of the universal quotient
    let xi = universal_quotient(&total)?;
    let top = euler(&xi, &ctx)?;
    println!("c_rank(xi) = {}", top);
    println!("thom(E) = c_rank(xi): {}", th == top);

    // the zero section packages the Thom class as a fundamental class
    let (space, section) = Embedding::zero_section(&e, "T", "w", &ctx)?;
    println!(
        "zero section of E into {}: codim {}, fdl = {}",
        space.name(),
        section.codim(),
        section.fdl()
    );
    println!("pushforward of 1 is the fundamental class: {}",
        pushforward_embedding(&section, &p1.ring().one()) == *section.fdl());

    // restricting the self-intersection recovers the Euler class
    let verdict = self_intersection_check(&section, &ctx);
    println!(
        "self-intersection: restrict(i_*(1)) = {} = euler(E): {}",
        verdict.lhs,
        verdict.passed()
    );
    Ok(())
}
