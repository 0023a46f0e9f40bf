//! Generate, verify and print X mod P as VHDL, Verilog, ANF text and JSON.
//!
//! cargo run --example emit_hdl [-- N P]

use xmodp::emit::{ChainStyle, IndexBase};
use xmodp::{emit, generate_verified, ConverterSpec, EmitOptions, Format, Method};

fn main() -> xmodp::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (n, p) = match args[..] {
        [n, p] => (n as u32, p),
        _ => (5, 5),
    };
    let conv = generate_verified(&ConverterSpec::new(n, p)?, Method::Fast)?;

    for format in Format::ALL {
        println!("==== {format} ====");
        print!("{}", emit(&conv, &EmitOptions::for_spec(format, conv.spec()))?);
    }

    println!("==== verilog, 0-based buses, balanced XOR trees ====");
    let mut opts = EmitOptions::new(Format::Verilog, "xmod_balanced");
    opts.index_base = IndexBase::Zero;
    opts.chain = ChainStyle::Balanced;
    print!("{}", emit(&conv, &opts)?);
    Ok(())
}
