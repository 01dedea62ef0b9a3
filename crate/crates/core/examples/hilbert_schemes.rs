//! Noncommutative Hilbert schemes: Betti polynomials from multipartitions,
//! cell counts from forests and the forest generating function.

use quiver_moduli::framed::{count_forests, enumerate_forests, forest_genfun, hilb_betti, hilb_nonempty};
use quiver_moduli::{DimVector, Quiver};

fn main() -> quiver_moduli::Result<()> {
    let l2 = Quiver::loop_quiver(2)?;
    let one = DimVector::new(vec![1])?;
    for d in 1..=4 {
        let dv = DimVector::new(vec![d])?;
        println!("L_2 d={d}: {} ({} cells)", hilb_betti(&l2, &dv, &one)?, count_forests(&l2, &dv, &one)?);
    }

    for f in enumerate_forests(&l2, &DimVector::new(vec![3])?, &one, 100)? {
        let s = &f.slots[0];
        println!("tree {:?} corona {:?}", s.paths, s.corona);
    }

    let g = forest_genfun(&l2, &one, 8)?;
    let coeffs: Vec<String> = g.iter().map(|(_, v)| v.to_string()).collect();
    println!("Catalan numbers: {}", coeffs.join(" "));

    let k1 = Quiver::kronecker(1)?;
    let n = DimVector::new(vec![0, 1])?;
    println!("K_1 framed at j, d=(1,1): {}", hilb_nonempty(&k1, &DimVector::new(vec![1, 1])?, &n)?);
    Ok(())
}
