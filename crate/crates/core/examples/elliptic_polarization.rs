//! Realize the Hodge decomposition of an elliptic curve over Q(i) and test
//! the standard symplectic form against it.

use hodgekit::field::{rat, NumberField, Scalar};
use hodgekit::hodge::{polarization_check, HodgeNumbers, PolarizationForm, RealizedHodgeStructure};
use hodgekit::linalg::ExactMatrix;

fn main() {
    let k = NumberField::gaussian();
    let one = k.from_rational(rat(1, 1));
    let i = k.generator();
    let numbers = HodgeNumbers::new(1, [((1, 0), 1), ((0, 1), 1)]).unwrap();
    let form = ExactMatrix::from_rows(&(), 2, &[vec![rat(0, 1), rat(1, 1)], vec![rat(-1, 1), rat(0, 1)]]);
    let s = PolarizationForm::new(form, 1).unwrap();

    for line in [vec![one.clone(), i.clone()], vec![one.clone(), i.neg()]] {
        let h = RealizedHodgeStructure::realize_and_validate(&k, 2, numbers.clone(), vec![(1, vec![line.clone()])]).unwrap();
        let shown: Vec<String> = line.iter().map(|x| x.to_string()).collect();
        println!("F^1 = <({})>: {:?}", shown.join(", "), polarization_check(&h, &s).unwrap());
    }

    let symmetric = ExactMatrix::from_rows(&(), 2, &[vec![rat(1, 1), rat(0, 1)], vec![rat(0, 1), rat(1, 1)]]);
    println!("symmetric form in weight 1: {}", PolarizationForm::new(symmetric, 1).unwrap_err());
}
