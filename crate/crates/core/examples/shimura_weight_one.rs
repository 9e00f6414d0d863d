//! Weight one: for GSp_2g with g ones and g zeros the grading lives in
//! degrees -1, 0, 1, so hcodim vanishes and dim F = g(g+1)/2.

use hodgekit::grading::{grade, HodgeCocharacter};
use hodgekit::lie::{make_classical, ClassicalKind};

fn main() {
    for g in 1..=3usize {
        let alg = make_classical(ClassicalKind::Gsp, None, 2 * g).unwrap();
        let lambda: Vec<i64> = (0..2 * g).map(|i| if i < g { 1 } else { 0 }).collect();
        let gr = grade(&alg, &HodgeCocharacter::new(lambda)).unwrap();
        println!(
            "g = {g}: dim F = {}, hcodim = {}, shimura type = {}",
            gr.flag_dimension(),
            gr.hcodim(),
            gr.is_shimura_type()
        );
    }
}
