//! Euler characteristics chi(P^n, O(d)) computed by pushing K-classes to
//! the point in the multiplicative orientation, against the binomial
//! formula.
//!
//! Run with: cargo run -p orient-rr --example hirzebruch_numbers

use orient_rr::algebra::rational::render;
use orient_rr::rr::{binomial_extended, hrr_number};

fn main() -> orient_rr::Result<()> {
    println!("chi(P^n, O(d)) = C(n + d, n) for d >= -n, via the beta^n coefficient of p_*[O(d)]:");
    print!("{:>6}", "n\\d");
    for d in -3..=5i64 {
        print!("{d:>6}");
    }
    println!();
    for n in 0..=3u16 {
        print!("{n:>6}");
        for d in -3..=5i64 {
            if d < -(n as i64) {
                // outside the binomial range (Serre duality takes over)
                print!("{:>6}", ".");
                continue;
            }
            let chi = hrr_number(n, d, 10)?;
            assert_eq!(chi, binomial_extended(n as i64 + d, n as i64));
            print!("{:>6}", render(&chi));
        }
        println!();
    }
    println!("all entries match the independent Pascal-triangle oracle.");
    Ok(())
}
