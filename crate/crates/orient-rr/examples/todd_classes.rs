//! Todd classes: the correction factor of Riemann-Roch, built from a
//! comparison series and multiplicative over sums of bundles.
//!
//! Run with: cargo run -p orient-rr --example todd_classes

use orient_rr::classes::{todd, OrientedCtx};
use orient_rr::fgl::{comparison_series, Theory};
use orient_rr::space::{relative_tangent, Bundle, Space, VirtualBundle};

fn main() -> orient_rr::Result<()> {
    let theory = Theory::Multiplicative;
    let order = 10;
    // Phi compares the multiplicative orientation with the reference one;
    // its Todd class is evaluated through the reference first Chern class
    let phi = comparison_series(
        &theory.native_orientation(order),
        &theory.reference_orientation(order),
    )?;
    let ctx = OrientedCtx::new(theory.reference_orientation(order))?;
    println!("Phi(t) = {}", phi.render());

    let p3 = Space::projective_space(3, theory.coeff_ring(order))?;
    let h = p3.hyperplane().expect("hyperplane");

    // on a line bundle: td(L) = c1 / Phi(c1), the classical Todd series
    let l = Bundle::line(&p3, h.clone())?;
    let td_l = todd(&phi, &VirtualBundle::from_bundle(l.clone()), &ctx)?;
    println!("td([L]) with c1 = h: {}", td_l);

    // multiplicativity and inverses on virtual bundles
    let m = Bundle::line(&p3, h.neg())?;
    let v = VirtualBundle::new(l.clone(), m.clone())?;
    let td_v = todd(&phi, &v, &ctx)?;
    let product = todd(&phi, &VirtualBundle::from_bundle(l), &ctx)?
        .mul(&todd(&phi, &VirtualBundle::from_bundle(m), &ctx)?.inverse()?);
    println!("td([L] - [M]) = {}", td_v);
    println!("  equals td(L) td(M)^-1: {}", td_v == product);

    // the Todd class of the relative tangent bundle is what corrects
    // pushforwards between orientations
    let p2 = Space::projective_space(2, theory.coeff_ring(order))?;
    let tp = relative_tangent(&p2)?;
    let td_tp = todd(&phi, &VirtualBundle::from_bundle(tp), &ctx)?;
    println!("td(T_p) on P2: {}", td_tp);
    Ok(())
}
