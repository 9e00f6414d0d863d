//! Types (n,0,...,0,n) under the orthogonal similitude group: the period
//! domain is entirely non-horizontal, so hcodim = dim F.

use hodgekit::grading::{grade, HodgeCocharacter};
use hodgekit::lie::{make_classical, ClassicalKind};

fn main() {
    for (n, lambda) in [(4, vec![2, 2, 0, 0]), (6, vec![2, 2, 2, 0, 0, 0])] {
        let g = make_classical(ClassicalKind::Go, None, n).unwrap();
        let gr = grade(&g, &HodgeCocharacter::new(lambda.clone())).unwrap();
        println!(
            "go{n} {lambda:?}: dim F = {}, hcodim = {}, levels {:?}",
            gr.flag_dimension(),
            gr.hcodim(),
            gr.levels()
        );
    }
}
