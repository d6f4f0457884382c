//! Driving the engine through the script DSL: parse a script, run it, and
//! inspect the deterministic report. The same surface backs the
//! `orient-rr` binary.
//!
//! Run with: cargo run -p orient-rr --example scripting

use orient_rr::cli::{parse, run, Flags};

fn main() {
    let script = "
        theory multiplicative;
        space P1 = proj 1;
        bundle L = O(-1)@P1;
        space PB = completion(L);
        embed i = zerosection(L, PB);
        eval thom(L, PB);
        push i h@P1;
        push P1 1;
        assert push(i, 1) == thom(L, PB);
    ";
    let ast = parse(script).expect("the script parses");
    let report = run(&ast, &Flags::default());
    println!("theory: {}, truncation: {}", report.theory, report.truncation);
    for entry in &report.results {
        match entry.status.as_str() {
            "ok" => println!("  {} => {}", entry.command, entry.value.as_deref().unwrap_or("")),
            s => println!("  {} => {}", entry.command, s),
        }
    }
    println!("exit code: {}", report.exit_code());

    // parse errors carry a position and a stable code
    let bad = parse("eval chern(1, E);").unwrap_err();
    println!("diagnostics: {bad}");
}
