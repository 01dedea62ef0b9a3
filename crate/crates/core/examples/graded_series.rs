//! Graded series with the twisted product and plethystic Exp/Log.

use quiver_moduli::{DimVector, Product, Quiver, RatFunc, SeriesShape, TwistedSeries};

fn main() -> quiver_moduli::Result<()> {
    let k1 = Quiver::kronecker(1)?;
    let shape = SeriesShape::new(&k1, 3);
    let t = |v: Vec<i64>| DimVector::new(v).unwrap();

    let mut a = TwistedSeries::one(&shape);
    a.set(t(vec![1, 0]), RatFunc::one())?;
    let mut b = TwistedSeries::one(&shape);
    b.set(t(vec![0, 1]), RatFunc::one())?;
    println!("(1+x)∘(1+y) at (1,1): {}", a.twisted_mul(&b)?.get(&t(vec![1, 1])));
    println!("(1+y)∘(1+x) at (1,1): {}", b.twisted_mul(&a)?.get(&t(vec![1, 1])));

    let inv = a.inverse(Product::Twisted)?;
    println!("(1+x)^-1 at (2,0): {}", inv.get(&t(vec![2, 0])));

    let l1 = Quiver::loop_quiver(1)?;
    let shape = SeriesShape::new(&l1, 4);
    let mut f = TwistedSeries::zero(&shape);
    f.set(t(vec![1]), RatFunc::q_pow(1))?;
    let e = f.plethystic_exp()?;
    for (k, v) in e.iter() {
        println!("Exp(q t)[{k}] = {v}");
    }
    assert_eq!(e.plethystic_log()?, f);
    Ok(())
}
