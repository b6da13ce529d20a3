use doodle_core::arrow::classify_by_arrows;
use doodle_core::enumerate::{classify, counts};
use doodle_core::SizeLimit;
use std::time::Instant;

fn main() {
    let max: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().unwrap())
        .unwrap_or(6);
    for n in 1..=max {
        let t = Instant::now();
        let c = counts(n, SizeLimit::new(max)).unwrap();
        let table = classify(n, SizeLimit::new(max)).unwrap();
        let arrows = classify_by_arrows(n, SizeLimit::new(max)).unwrap();
        println!(
            "n={n} counts={c} rot={} dih={} agree={} in {:?}",
            arrows.rotation.len(),
            arrows.dihedral.len(),
            arrows.rotation == table.oriented_partition()
                && arrows.dihedral == table.unoriented_partition(),
            t.elapsed()
        );
    }
}
