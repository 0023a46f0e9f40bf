//! Timing for larger input widths.
//!
//! cargo run --release --example scale [-- P N1 N2 ...]

use std::time::Instant;

use xmodp::{generate, verify_converter, ConverterSpec, Method};

fn main() -> xmodp::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (p, widths) = match args.split_first() {
        Some((&p, rest)) if !rest.is_empty() => (p, rest.iter().map(|&n| n as u32).collect()),
        _ => (13, vec![12, 16, 20, 22, 24]),
    };
    println!("{:>3} {:>12} {:>10} {:>10}", "n", "terms", "gen (s)", "verify (s)");
    for n in widths {
        let spec = ConverterSpec::new(n, p)?;
        let t = Instant::now();
        let conv = generate(&spec, Method::Fast)?;
        let gen = t.elapsed().as_secs_f64();
        let report = verify_converter(&conv);
        assert!(report.pass);
        println!(
            "{n:>3} {:>12} {gen:>10.3} {:>10.3}",
            conv.stats().total_terms,
            report.elapsed.as_secs_f64()
        );
    }
    Ok(())
}
