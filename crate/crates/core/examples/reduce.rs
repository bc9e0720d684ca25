//! Shrink the 17-vertex sphere by bistellar flips while keeping the knot, and
//! write the flip trace.

use knotcert::bistellar::{reduce, replay_final, write_trace, FrozenFaces, ReduceConfig};
use knotcert::catalog::{load_entry, CatalogName};
use knotcert::Face;

fn main() {
    let s17 = load_entry(CatalogName::S3_17_74);
    let knot = FrozenFaces::new([Face::from([1, 2]), Face::from([1, 3]), Face::from([2, 3])]);

    for seed in 0..3 {
        let cfg = ReduceConfig { frozen: knot.clone(), ..ReduceConfig::with_seed(seed) };
        let r = reduce(&s17, &cfg);
        println!(
            "seed {seed}: {} -> {} in {} flips ({} reheats)",
            s17.f_vector(),
            r.complex.f_vector(),
            r.trace.len(),
            r.reheats
        );
        assert_eq!(replay_final(&s17, &r.trace).unwrap(), r.complex);
        if seed == 0 {
            let trace = write_trace(&cfg, &r.trace);
            println!("{}", trace.lines().take(6).collect::<Vec<_>>().join("\n"));
        }
    }

    let free = reduce(&s17, &ReduceConfig::default());
    println!("without the knot: {} (simplex boundary: {})", free.complex.f_vector(), free.is_simplex_boundary());
}
