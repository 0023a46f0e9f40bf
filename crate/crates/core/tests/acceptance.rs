//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails. Every criterion is exact (zero tolerance);
//! wall-clock limits are checked alongside.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use xmodp::emit::{converter_masks, parse_document, IndexBase};
use xmodp::model::PackedBits;
use xmodp::transform::{combinatorial_transform, fast_transform, lucas_parity, mobius_in_place, PascalParityRows};
use xmodp::truth::{truth_numbers, truth_vector, truth_vectors};
use xmodp::{emit, generate, generate_verified, verify_converter, ConverterSpec, EmitOptions, Format, Method, TruthVector};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn verified(n: u32, p: u64) -> Result<xmodp::ModConverter, String> {
    let spec = ConverterSpec::new(n, p).map_err(|e| e.to_string())?;
    let c = generate_verified(&spec, Method::Fast).map_err(|e| e.to_string())?;
    let r = c.verification().expect("attached");
    ensure(r.pass && r.inputs_checked == spec.inputs(), || {
        format!("n={n} p={p}: {:?}", r.counterexample)
    })?;
    Ok(c)
}

fn worked_example() -> Outcome {
    let spec = ConverterSpec::new(3, 3).unwrap();
    let a1 = truth_numbers(&spec, 1).unwrap();
    let a2 = truth_numbers(&spec, 2).unwrap();
    ensure(a1.as_slice() == [1, 4, 7], || format!("A(S1) = {:?}", a1.as_slice()))?;
    ensure(a2.as_slice() == [2, 5], || format!("A(S2) = {:?}", a2.as_slice()))?;
    let w1 = truth_vector(&spec, 1).unwrap();
    ensure(w1 == TruthVector::from_digits(&[0, 1, 0, 0, 1, 0, 0, 1]).unwrap(), || "w(S1)".into())?;
    let r1 = fast_transform(&w1);
    let want: Vec<u64> = vec![1, 3, 4, 6, 7];
    ensure(r1.ones() == want, || format!("r(S1) ones = {:?}", r1.ones()))?;
    ensure(combinatorial_transform(&w1) == r1, || "combinatorial r(S1)".into())?;
    let c = verified(3, 3)?;
    let masks = c.poly(1).unwrap().masks();
    ensure(masks == [1, 3, 4, 6, 7], || format!("P(S1) masks = {masks:?}"))?;
    Ok("A(S1)={1,4,7} A(S2)={2,5} r(S1)=01011011 masks {1,3,4,6,7}".into())
}

fn exhaustive_small() -> Outcome {
    let mut count = 0;
    for p in 1..=64u64 {
        for n in 1..=12u32 {
            verified(n, p)?;
            count += 1;
        }
    }
    Ok(format!("{count} converters, every input checked"))
}

fn reference_instances() -> Outcome {
    let mut done = vec![];
    verified(9, 7)?;
    done.push("(9,7)".to_string());
    for p in [7u64, 11, 13, 17, 19, 23, 29, 31] {
        verified(10, p)?;
        done.push(format!("(10,{p})"));
    }
    verified(11, 691)?;
    done.push("(11,691)".into());
    Ok(done.join(" "))
}

fn random_bits(rng: &mut StdRng, n: u32) -> PackedBits {
    let mut b = PackedBits::for_vars(n);
    for i in 0..b.len() {
        if rng.random::<bool>() {
            b.set(i, true);
        }
    }
    b
}

fn involution() -> Outcome {
    for word in 0..1u32 << 16 {
        let bools: Vec<bool> = (0..16).map(|i| (word >> i) & 1 == 1).collect();
        let v = PackedBits::from_bools(&bools).unwrap();
        let mut t = v.clone();
        mobius_in_place(&mut t);
        mobius_in_place(&mut t);
        ensure(t == v, || format!("n=4 function {word:#06x}"))?;
    }
    let mut rng = StdRng::seed_from_u64(0x5eed_0001);
    for n in [8u32, 10, 12] {
        for k in 0..1000 {
            let v = random_bits(&mut rng, n);
            let mut t = v.clone();
            mobius_in_place(&mut t);
            mobius_in_place(&mut t);
            ensure(t == v, || format!("n={n} sample {k}"))?;
        }
    }
    Ok("65536 functions at n=4, 3x1000 random at n=8,10,12".into())
}

fn method_equivalence() -> Outcome {
    for word in 0..1u32 << 16 {
        let bools: Vec<bool> = (0..16).map(|i| (word >> i) & 1 == 1).collect();
        let w = TruthVector::new(PackedBits::from_bools(&bools).unwrap());
        ensure(combinatorial_transform(&w) == fast_transform(&w), || format!("n=4 function {word:#06x}"))?;
    }
    let mut outputs = 0;
    for (n, p) in [(3u32, 3u64), (5, 5), (9, 7)] {
        for w in truth_vectors(&ConverterSpec::new(n, p).unwrap()) {
            ensure(combinatorial_transform(&w) == fast_transform(&w), || format!("n={n} p={p}"))?;
            outputs += 1;
        }
    }
    Ok(format!("65536 functions at n=4 and {outputs} converter outputs"))
}

fn lucas_check() -> Outcome {
    let mut pairs = 0u64;
    for (i, row) in PascalParityRows::new().take(4096).enumerate() {
        for (a, &odd) in row.iter().enumerate() {
            ensure(lucas_parity(i as u64, a as u64) == odd, || format!("C({i},{a})"))?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs 0<=a<=i<4096"))
}

fn mutation() -> Outcome {
    let good = verified(8, 11)?;
    let delta = good.spec().delta() as usize;
    let mut rng = StdRng::seed_from_u64(0x5eed_0002);
    for k in 0..100 {
        let output = rng.random_range(1..=delta);
        let mask = rng.random_range(0..256u32);
        let bad = good.with_flipped_term(output, mask).unwrap();
        let r = verify_converter(&bad);
        ensure(!r.pass && r.counterexample.is_some(), || {
            format!("flip #{k} (S{output}, mask {mask}) went undetected")
        })?;
    }
    Ok("100/100 single-coefficient flips detected on (8,11)".into())
}

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

fn emission_roundtrip() -> Outcome {
    let mut docs = 0;
    for (n, p) in [(3u32, 3u64), (5, 5), (10, 7)] {
        let c = verified(n, p)?;
        let source = converter_masks(&c);
        for format in Format::ALL {
            let opts = EmitOptions::for_spec(format, c.spec());
            let first = emit(&c, &opts).map_err(|e| e.to_string())?;
            let again = emit(&generate_verified(c.spec(), Method::Fast).unwrap(), &opts).unwrap();
            ensure(first == again, || format!("{format} n={n} p={p}: bytes differ between runs"))?;
            let parsed = parse_document(&first, format, IndexBase::One).map_err(|e| e.to_string())?;
            ensure(parsed == source, || format!("{format} n={n} p={p}: re-parse mismatch"))?;

            let path = golden_dir().join(format!("mod{p}_n{n}.{}", format.extension()));
            let golden = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
            let parsed = parse_document(&golden, format, IndexBase::One).map_err(|e| e.to_string())?;
            ensure(parsed == source, || format!("{}: re-parse mismatch", path.display()))?;
            ensure(golden == first, || format!("{}: differs from fresh emission", path.display()))?;
            docs += 1;
        }
    }
    Ok(format!("{docs} documents re-parsed, byte-identical across runs and to golden files"))
}

fn scale_ceiling() -> Outcome {
    let spec = ConverterSpec::new(20, 13).unwrap();
    let t = Instant::now();
    let c = generate(&spec, Method::Fast).map_err(|e| e.to_string())?;
    let gen_time = t.elapsed();
    let r = verify_converter(&c);
    ensure(r.pass && r.inputs_checked == 1 << 20, || format!("{:?}", r.counterexample))?;
    Ok(format!(
        "{} terms; generate {:.2}s, verify {:.2}s",
        c.stats().total_terms,
        gen_time.as_secs_f64(),
        r.elapsed.as_secs_f64()
    ))
}

struct Criterion {
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { name: "worked example n=3 p=3", limit: Duration::from_secs(1), run: worked_example },
        Criterion { name: "exhaustive p in 1..=64, n in 1..=12", limit: Duration::from_secs(60), run: exhaustive_small },
        Criterion { name: "reference instances (9,7), primes 7..31 at n=10, (11,691)", limit: Duration::from_secs(10), run: reference_instances },
        Criterion { name: "transform involution", limit: Duration::MAX, run: involution },
        Criterion { name: "method equivalence", limit: Duration::MAX, run: method_equivalence },
        Criterion { name: "Lucas parity vs Pascal triangle", limit: Duration::from_secs(10), run: lucas_check },
        Criterion { name: "mutation sensitivity (8,11)", limit: Duration::MAX, run: mutation },
        Criterion { name: "emission round-trip and determinism", limit: Duration::MAX, run: emission_roundtrip },
        Criterion { name: "scale ceiling (20,13)", limit: Duration::from_secs(120), run: scale_ceiling },
    ];

    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > c.limit => Err(format!("{detail}; took {elapsed:.2?}, limit {:.0?}", c.limit)),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS  {:<60} {:>9.3}s  {detail}", c.name, elapsed.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("FAIL  {:<60} {:>9.3}s  {why}", c.name, elapsed.as_secs_f64());
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
