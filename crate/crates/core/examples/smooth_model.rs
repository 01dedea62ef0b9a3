//! Smooth models: the framed quiver and its Poincaré polynomial, computed
//! from the HN series and, independently, as a coprime moduli space.

use quiver_moduli::framed::{build_framed, smooth_model_poincare};
use quiver_moduli::hn::betti_coprime;
use quiver_moduli::{DimVector, Quiver, Stability};

fn main() -> quiver_moduli::Result<()> {
    let k2 = Quiver::kronecker(2)?;
    let theta = Stability::new(vec![1, 0]);
    let d = DimVector::new(vec![2, 2])?;
    let n = DimVector::new(vec![0, 1])?;

    let f = build_framed(&k2, &d, &theta, &n)?;
    println!("framed quiver {:?}, d = {}, theta = {:?}, scale {}", f.extended.vertices(), f.extended_d, f.extended_theta.as_slice(), f.scale);
    let smooth = smooth_model_poincare(&k2, &theta, &d, &n)?;
    println!("smooth model: {smooth}");
    println!("as framed moduli: {}", betti_coprime(&f.extended, &f.extended_theta, &f.extended_d)?);

    let l1 = Quiver::loop_quiver(1)?;
    println!("Hilbert scheme of L_1, d=3, n=2: {}", smooth_model_poincare(&l1, &Stability::zero(1), &DimVector::new(vec![3])?, &DimVector::new(vec![2])?)?);
    Ok(())
}
