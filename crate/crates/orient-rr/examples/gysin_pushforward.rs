//! Gysin pushforwards: the duality matrix of a projective bundle, the
//! section identity p_* s_* = 1, projection formulas, and functoriality
//! through two factorizations.
//!
//! Run with: cargo run -p orient-rr --example gysin_pushforward

use orient_rr::classes::OrientedCtx;
use orient_rr::fgl::Theory;
use orient_rr::gysin::{
    pushforward_embedding, DualityData, KunnethSquare, ProjectionPushforward,
};
use orient_rr::space::{Bundle, Embedding, Space};

fn main() -> orient_rr::Result<()> {
    let theory = Theory::Multiplicative;
    let ctx = OrientedCtx::new(theory.native_orientation(10))?;
    let coeff = theory.coeff_ring(10);

    // the duality matrix of P^1: the diagonal class expanded over the
    // Kunneth basis h1^i h2^j
    let p1 = Space::projective_space(1, coeff.clone())?;
    let k = KunnethSquare::new(&p1)?;
    let duality = DualityData::new(&k, &ctx)?;
    println!("diagonal class of P1 x P1: {}", duality.diagonal());
    println!("duality matrix C (rows i, columns j):");
    for row in duality.matrix() {
        let cells: Vec<String> = row.iter().map(|c| c.render()).collect();
        println!("  [ {} ]", cells.join(" , "));
    }

    // pushforward along the projection: p_*(1) = beta encodes chi(P^1, O)
    let push = ProjectionPushforward::from_duality(duality);
    println!("p_*(1) = {}", push.apply(&p1.ring().one())?);
    let h = p1.hyperplane().expect("hyperplane");
    println!("p_*(h) = {}", push.apply(&h)?);

    // section identity: p_* s_* is the identity on the whole base ring
    let e = Bundle::from_roots(&p1, vec![h.clone(), h.neg()])?;
    let (total, s) = Embedding::zero_section(&e, "T", "z", &ctx)?;
    let pp = ProjectionPushforward::new(&total, &ctx)?;
    let ok = p1.ring().basis().into_iter().all(|b| {
        let x = p1.ring().monomial(b, coeff.one());
        pp.apply(&pushforward_embedding(&s, &x)).expect("pushforward") == x
    });
    println!("p_* s_* = identity on all basis classes of E(P1): {ok}");

    // functoriality: P^0 -> P^1 -> P^2 agrees with the direct embedding
    let p0 = Space::projective_space(0, coeff.clone())?;
    let p2 = Space::projective_space(2, coeff.clone())?;
    let i01 = Embedding::linear(&p0, &p1, &ctx)?;
    let i12 = Embedding::linear(&p1, &p2, &ctx)?;
    let i02 = Embedding::linear(&p0, &p2, &ctx)?;
    let chain = pushforward_embedding(&i12, &pushforward_embedding(&i01, &p0.ring().one()));
    let direct = pushforward_embedding(&i02, &p0.ring().one());
    println!("(i12)_* (i01)_* 1 = {} = (i02)_* 1: {}", chain, chain == direct);
    Ok(())
}
