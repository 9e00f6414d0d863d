//! Tannakian operations on Hodge number tables.

use hodgekit::hodge::HodgeNumbers;

fn main() {
    let curve = HodgeNumbers::new(1, [((1, 0), 2), ((0, 1), 2)]).unwrap();
    println!("H         {curve}");
    println!("H^v       {}", curve.dual());
    println!("H (x) H   {}", curve.tensor(&curve));
    println!("L^2 H     {}", curve.wedge(2));
    println!("S^2 H     {}", curve.sym(2));
    println!("H(1)      {}", curve.tate_twist(1));
    println!("F^p dims  {:?}", curve.filtration_steps());
}
