//! Formal group laws and orientations: build the additive, multiplicative
//! and truncated-universal laws, check the axioms, and compute formal
//! inverses and comparison series.
//!
//! Run with: cargo run -p orient-rr --example formal_group_laws

use orient_rr::algebra::coeff::CoeffRing;
use orient_rr::fgl::{comparison_series, FormalGroupLaw, Orientation, Theory};

fn main() -> orient_rr::Result<()> {
    let order = 8;

    let additive = FormalGroupLaw::additive(CoeffRing::Rationals, order);
    let multiplicative = FormalGroupLaw::multiplicative(order);
    println!("additive law:        F(x,y) = {}", additive.series().render());
    println!("multiplicative law:  F(x,y) = {}", multiplicative.series().render());

    for law in [&additive, &multiplicative] {
        let report = law.check();
        println!(
            "{}: unit/commutativity/associativity residuals all zero: {}",
            law.name(),
            report.passed()
        );
    }

    // the formal inverse solves F(x, i(x)) = 0 order by order
    let inv = multiplicative.inverse_series()?;
    println!("multiplicative inverse: i(x) = {}", inv.render());

    // orientations are reparameterizations of the additive reference law;
    // conjugating by theta = (1 - e^{-beta t})/beta recovers the
    // multiplicative law exactly
    let theta = Orientation::multiplicative(order);
    let conjugated = theta.induced_law()?;
    println!(
        "conjugated law equals the direct construction: {}",
        conjugated.series() == multiplicative.series()
    );

    // the universal orientation theta = t + b1 t^2 + b2 t^3 + ... produces
    // the generic reparameterized law
    let universal = Theory::Universal(2).native_orientation(order);
    let generic = universal.induced_law()?;
    println!("universal law starts: F(x,y) = x + y + {} x y + ...",
        generic.series().ring().render(&generic.series().coeff(&[1, 1])));
    println!("universal law passes the axiom check: {}", generic.check().passed());

    // comparison series between orientations compose along pairs
    let id = Orientation::identity(CoeffRing::laurent_beta(), order);
    let phi = comparison_series(&theta, &id)?;
    println!("comparison (multiplicative vs identity): Phi(t) = {}", phi.render());
    let psi = comparison_series(&id, &theta)?;
    println!("comparison (identity vs multiplicative): Phi(t) = {}", psi.render());
    println!("they are compositional inverses: {}",
        phi.compose(&psi)?.render());
    Ok(())
}
