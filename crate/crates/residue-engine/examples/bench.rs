//! Quick timing probe for the heavy residue computations.
use residue_engine::specs::*;
use residue_engine::EngineConfig;
use std::time::Instant;

fn main() {
    let cfg = EngineConfig::default();
    let which = std::env::args().nth(1).unwrap_or_default();
    match which.as_str() {
        "tw8" => {
            for p in [5u32, 8] {
                let t = Instant::now();
                let (f, g) = twisted_pair(p, &cfg, None).unwrap();
                println!("twisted p={p}: {:?} degf={:?} degg={:?}", t.elapsed(), f.degree(), g.degree());
            }
        }
        "gt1" => {
            let t = Instant::now();
            let gt = untwisted_gtilde(1, &cfg, None).unwrap();
            println!("Gt1: {:?} deg={:?}", t.elapsed(), gt.degree());
            let t = Instant::now();
            let g = untwisted_g(1, &cfg, None).unwrap();
            println!("G1: {:?} deg={:?}", t.elapsed(), g.degree());
        }
        "gt2" => {
            let t = Instant::now();
            let gt = untwisted_gtilde(2, &cfg, None).unwrap();
            println!("Gt2: {:?} deg={:?}", t.elapsed(), gt.degree());
        }
        _ => eprintln!("usage: bench tw8|gt1|gt2"),
    }
}
