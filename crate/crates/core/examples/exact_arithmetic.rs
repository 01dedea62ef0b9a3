//! Exact polynomials and rational functions in `q`.

use num::BigRational;
use quiver_moduli::{Poly, RatFunc};

fn main() -> quiver_moduli::Result<()> {
    let num = Poly::from_i64(&[-1, 0, 0, 1]);
    let den = Poly::from_i64(&[-1, 1]);
    let f = RatFunc::new(num, den)?;
    println!("(q^3 - 1)/(q - 1) = {f}");

    let g = &f / &RatFunc::q_pow(2);
    println!("divided by q^2: {g}");
    println!("expansion at q = 1: {:?}", g.expand_at_one(3)?.iter().map(|c| c.to_string()).collect::<Vec<_>>());
    println!("psi_2: {}", f.psi(2));

    let p = Poly::from_i64(&[1, -2, 1]);
    println!("{p} in powers of q - 1: {}", p.taylor_shift(&BigRational::from_integer(1.into())));
    println!("json: {}", serde_json::to_string(&p).unwrap());
    Ok(())
}
