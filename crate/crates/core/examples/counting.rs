//! Counting polynomials of stable, semistable and simple representations.

use quiver_moduli::counting::{counting_report, simple_count_poly, sst_count_poly};
use quiver_moduli::{DimVector, Quiver, Stability};

fn main() -> quiver_moduli::Result<()> {
    // Four lines in the plane: P^1 minus three points.
    let s4 = Quiver::subspace(4)?;
    let theta = Stability::new(vec![0, 0, 0, 0, -1]);
    let r = counting_report(&s4, &theta, &DimVector::new(vec![1, 1, 1, 1, 2])?)?;
    println!("S_4: stable {}, semistable {}, chi {} / {}", r.stable, r.semistable, r.euler_stable, r.euler_semistable);

    let k5 = Quiver::kronecker(5)?;
    println!("K_5 (2,2) semistable: {}", sst_count_poly(&k5, &Stability::new(vec![1, 0]), &DimVector::new(vec![2, 2])?)?);

    for m in 1..=3 {
        let lm = Quiver::loop_quiver(m)?;
        for d in 1..=3 {
            println!("L_{m} d={d}: {}", simple_count_poly(&lm, &DimVector::new(vec![d])?)?);
        }
    }
    Ok(())
}
