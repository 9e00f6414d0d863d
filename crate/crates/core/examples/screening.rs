//! The verdict truth table: every combination of the transcendence
//! inequality, the assumed conjectures and the Shimura flag.

use hodgekit::grading::{report, HodgeCocharacter};
use hodgekit::lie::{make_classical, ClassicalKind};
use hodgekit::verdict::{screen, shimura_necessity, ConjectureSet};

fn main() {
    let g = make_classical(ClassicalKind::Gsp, None, 4).unwrap();
    let cy = report(&g, &HodgeCocharacter::new(vec![3, 2, 1, 0])).unwrap();
    let ab = report(&g, &HodgeCocharacter::new(vec![1, 1, 0, 0])).unwrap();

    for (name, r) in [("calabi-yau", &cy), ("abelian surface", &ab)] {
        for trdeg in [0, 3] {
            for (motivated, ggpc) in [(true, true), (true, false), (false, true)] {
                let conj = ConjectureSet { motivated, gpc: false, ggpc };
                println!("{name}, trdeg {trdeg}, motivated {motivated}, ggpc {ggpc}");
                println!("  {}", screen(trdeg, r, &conj));
                println!("  {}", shimura_necessity(trdeg, r, &conj));
            }
        }
    }
}
