//! A torus sees no grading: every invariant vanishes whatever the weights.

use hodgekit::grading::{report, HodgeCocharacter};
use hodgekit::lie::{make_classical, ClassicalKind};

fn main() {
    let t = make_classical(ClassicalKind::DiagTorus, None, 4).unwrap();
    for lambda in [vec![1, 0, 1, 0], vec![5, -2, 3, 0]] {
        let r = report(&t, &HodgeCocharacter::new(lambda.clone())).unwrap();
        println!("lambda {lambda:?}: dim F = {}, hcodim = {}", r.flag_dim, r.hcodim);
    }
}
