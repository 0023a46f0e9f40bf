//! Circuit size for a list of prime moduli over 10-bit inputs, plus
//! X mod 691 over 11 bits.
//!
//! cargo run --release --example modulus_table

use xmodp::cli::{format_table, table_rows, MethodArg};

fn main() -> xmodp::Result<()> {
    let rows = table_rows(10, &[7, 11, 13, 17, 19, 23, 29, 31], MethodArg::Fast, true)?;
    print!("{}", format_table(10, &rows));
    println!();
    let rows = table_rows(11, &[691], MethodArg::Fast, true)?;
    print!("{}", format_table(11, &rows));
    Ok(())
}
