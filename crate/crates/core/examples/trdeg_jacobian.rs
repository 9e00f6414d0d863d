//! Transcendence degree of an isotropic flag in generic position, from the
//! Jacobian rank of its chart coordinates.

use hodgekit::field::{rat, FunctionField, NumberField, RatFunc, Scalar};
use hodgekit::flag::{FlagPoint, TrdegOptions};

fn main() {
    let k = FunctionField::new(NumberField::rationals(), ["a", "b", "c", "d"].map(String::from).to_vec());
    let (a, b, c, d) = (k.param(0), k.param(1), k.param(2), k.param(3));
    let one = RatFunc::one_in(&k);
    let zero = RatFunc::zero_in(&k);

    let top = vec![one.clone(), a.clone(), b.clone(), c.clone()];
    let second = vec![zero.clone(), one.clone(), d.clone(), b.sub(&a.mul(&d))];
    let perp = vec![
        vec![one.clone(), zero.clone(), zero.clone(), c.clone()],
        vec![zero.clone(), one.clone(), zero.clone(), b.clone()],
        vec![zero.clone(), zero.clone(), one.clone(), a.neg()],
    ];
    let flag = FlagPoint::new(&k, 4, vec![(3, vec![top.clone()]), (2, vec![top, second]), (1, perp)]).unwrap();

    for coord in flag.normalize_chart() {
        println!("  {coord}");
    }
    let t = flag.trdeg(&TrdegOptions::seeded(7)).unwrap();
    println!("trdeg = {}", t.value);

    // A rational point of the same flag variety.
    let k0 = FunctionField::new(NumberField::rationals(), vec![]);
    let r = |n: i64| k0.rational(rat(n, 1));
    let rational = FlagPoint::new(&k0, 4, vec![(3, vec![vec![r(1), r(1), r(2), r(3)]])]).unwrap();
    println!("over Q: trdeg = {}", rational.trdeg(&TrdegOptions::default()).unwrap().value);
}
