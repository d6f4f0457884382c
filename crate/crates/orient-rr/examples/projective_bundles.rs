//! Cohomology rings of iterated projective bundles: free-module bases,
//! hyperplane relations, universal quotients and relative tangents.
//!
//! Run with: cargo run -p orient-rr --example projective_bundles

use orient_rr::fgl::Theory;
use orient_rr::space::{relative_tangent, universal_quotient, Bundle, Space};

fn main() -> orient_rr::Result<()> {
    let coeff = Theory::Additive.coeff_ring(10);

    // P^2 over a point: Q[h]/(h^3), a free module of rank 3
    let p2 = Space::projective_space(2, coeff.clone())?;
    println!("E(P2) has rank {} with basis 1, h, h^2", p2.ring().rank());
    let h = p2.hyperplane().expect("hyperplane");
    println!("h^2 = {},  h^3 = {}", h.pow(2), h.pow(3));

    // a projective bundle over P^1 with a nontrivial relation
    let p1 = Space::projective_space(1, coeff.clone())?;
    let hb = p1.hyperplane().expect("hyperplane");
    let e = Bundle::from_roots(&p1, vec![p1.ring().zero(), hb.clone()])?;
    let pe = Space::proj_bundle(&e, "PE", "k")?;
    let k = pe.hyperplane().expect("hyperplane");
    println!(
        "P(O + O(h)) over P1: rank {} over the rationals, relation k^2 = {}",
        pe.ring().rank(),
        k.pow(2)
    );

    // the universal quotient satisfies c(lambda) c(xi) = c(p^* E)
    let xi = universal_quotient(&pe)?;
    println!("universal quotient: rank {}, c1 = {}", xi.rank(), xi.chern_ref(1)?);
    let lambda = orient_rr::space::tautological_sub(&pe)?;
    let whitney = lambda.total_chern_ref()?.mul(&xi.total_chern_ref()?);
    println!(
        "c(lambda) c(xi) = {} = c(p^*E): {}",
        whitney,
        whitney == pe.pullback_from_base(&e.total_chern_ref()?)
    );

    // the relative tangent bundle via the Euler sequence
    let tp = relative_tangent(&p2)?;
    println!("T_p of P2: rank {}, c1 = {}, c2 = {}", tp.rank(), tp.chern_ref(1)?, tp.chern_ref(2)?);
    Ok(())
}
