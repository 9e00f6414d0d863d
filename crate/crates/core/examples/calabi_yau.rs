//! Invariants of the Calabi-Yau type (1,1,1,1) with group GSp4, and the
//! screening verdicts for a filtration defined over Q.

use hodgekit::grading::{report, HodgeCocharacter};
use hodgekit::hodge::HodgeNumbers;
use hodgekit::lie::{make_classical, ClassicalKind};
use hodgekit::verdict::{screen, shimura_necessity, ConjectureSet};

fn main() {
    let g = make_classical(ClassicalKind::Gsp, None, 4).expect("gsp4");
    let numbers = HodgeNumbers::new(3, [((3, 0), 1), ((2, 1), 1), ((1, 2), 1), ((0, 3), 1)]).unwrap();
    let mu = HodgeCocharacter::with_numbers(vec![3, 2, 1, 0], numbers).unwrap();
    let r = report(&g, &mu).unwrap();

    println!("dim g   = {}", r.dim_g);
    println!("dim F   = {}", r.flag_dim);
    println!("hcodim  = {}", r.hcodim);
    println!("levels  = {:?}", r.levels);

    let conj = ConjectureSet::all();
    for v in [screen(0, &r, &conj), shimura_necessity(0, &r, &conj)] {
        println!("{v}");
    }
    // Two parameters suffice to escape the bound.
    println!("{}", screen(2, &r, &conj));
}
