//! Chern classes in a chosen orientation: Whitney sums, duals, tensor
//! twists, and the group-law formula for tensor products of line bundles.
//!
//! Run with: cargo run -p orient-rr --example chern_classes

use orient_rr::classes::{c1_tensor, chern, euler, total_chern, OrientedCtx};
use orient_rr::fgl::Theory;
use orient_rr::space::{Bundle, Space};

fn main() -> orient_rr::Result<()> {
    let theory = Theory::Multiplicative;
    let ctx = OrientedCtx::new(theory.native_orientation(10))?;
    let p2 = Space::projective_space(2, theory.coeff_ring(10))?;
    let h = p2.hyperplane().expect("P2 has a hyperplane class");

    // O(1) is the dual of the tautological subbundle: reference root -h
    let o1 = Bundle::o_line(&p2, 1)?;
    println!("c1(O(1))  = {}", chern(1, &o1, &ctx)?);
    println!("c1(O(-2)) = {}", chern(1, &Bundle::o_line(&p2, -2)?, &ctx)?);

    // tensor products of line bundles follow the group law
    let via_law = c1_tensor(&o1, &o1, &ctx)?;
    let direct = chern(1, &Bundle::o_line(&p2, 2)?, &ctx)?;
    println!("c1(O(1) (x) O(1)) = {}", via_law);
    println!("  equals c1(O(2)): {}", via_law == direct);

    // Whitney: the total Chern class is multiplicative in sums
    let e = Bundle::from_roots(&p2, vec![h.clone(), h.neg()])?;
    let f = Bundle::from_roots(&p2, vec![p2.ring().zero(), h.clone()])?;
    let sum = e.sum(&f)?;
    let lhs = total_chern(&sum, &ctx)?;
    let rhs = total_chern(&e, &ctx)?.mul(&total_chern(&f, &ctx)?);
    println!("c(E + F) = {}", lhs);
    println!("  equals c(E) c(F): {}", lhs == rhs);

    // Euler class = top Chern class
    println!("euler(E) = {}", euler(&e, &ctx)?);
    println!("euler of the dual: {}", euler(&e.dual()?, &ctx)?);
    Ok(())
}
