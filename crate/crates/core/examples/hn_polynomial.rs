//! The HN recursion: `P_d(q)` by both methods and Betti polynomials of coprime moduli.

use quiver_moduli::hn::{hn_types, HnKernel, HnMethod};
use quiver_moduli::{DimVector, Quiver, Stability};

fn main() -> quiver_moduli::Result<()> {
    let k2 = Quiver::kronecker(2)?;
    let theta = Stability::new(vec![1, 0]);
    let kernel = HnKernel::new(&k2, &theta)?;

    let d = DimVector::new(vec![2, 2])?;
    for t in hn_types(&theta, &d) {
        println!("HN type {:?}", t.parts().iter().map(|p| p.to_string()).collect::<Vec<_>>());
    }
    let direct = kernel.p(&d, HnMethod::Direct)?;
    let recursive = kernel.p(&d, HnMethod::Recursive)?;
    println!("P_(2,2) = {direct}");
    assert_eq!(direct, recursive);

    // Kronecker moduli for (2,3): Euler characteristics 13, 58, 170.
    for m in 3..=5 {
        let km = Quiver::kronecker(m)?;
        let b = HnKernel::new(&km, &theta)?.betti_coprime(&DimVector::new(vec![2, 3])?)?;
        println!("K_{m} (2,3): {b}");
    }
    Ok(())
}
