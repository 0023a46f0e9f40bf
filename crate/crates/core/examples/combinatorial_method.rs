//! The combinatorial transform: each spectrum coefficient r_i is the parity
//! of C(i, a) summed over the truth numbers a, with the parity of each
//! binomial coefficient read off the bits (Lucas). The butterfly transform
//! gives the same spectrum.
//!
//! cargo run --example combinatorial_method [-- N P]

use xmodp::transform::{binomial_parity_oracle, combinatorial_transform, fast_transform, lucas_parity};
use xmodp::truth::truth_vectors;
use xmodp::ConverterSpec;

fn main() -> xmodp::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (n, p) = match args[..] {
        [n, p] => (n as u32, p),
        _ => (3, 3),
    };
    let spec = ConverterSpec::new(n, p)?;
    let w = &truth_vectors(&spec)[0];
    let a = w.truth_numbers();
    println!("A(S1) = {:?}", a.as_slice());

    if n <= 4 {
        for i in 0..w.len() as u64 {
            let used: Vec<String> = a
                .as_slice()
                .iter()
                .filter(|&&aj| aj <= i)
                .map(|&aj| format!("C({i},{aj})={}", u8::from(lucas_parity(i, aj))))
                .collect();
            let r = used.iter().filter(|s| s.ends_with("=1")).count() % 2;
            println!("r_{i:<2} = {r}   [{}]", used.join(" + "));
        }
    }

    for (i, a) in [(7u64, 4u64), (4, 1), (2, 1)] {
        println!("C({i},{a}) odd? lucas={} pascal={}", lucas_parity(i, a), binomial_parity_oracle(i, a)?);
    }

    let agree = truth_vectors(&spec)
        .iter()
        .all(|w| combinatorial_transform(w) == fast_transform(w));
    println!("butterfly and combinatorial spectra agree on all outputs: {agree}");
    Ok(())
}
