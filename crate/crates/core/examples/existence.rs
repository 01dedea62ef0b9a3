//! Non-emptiness of moduli: Schofield's criterion, the HN criterion,
//! simple representations and the reduction to an auxiliary quiver.

use quiver_moduli::existence::{auxiliary_quiver, generic_subrep, simple_nonempty, st_nonempty_al, ExistenceOracle, SstMethod};
use quiver_moduli::{DimVector, Quiver, Stability};

fn main() -> quiver_moduli::Result<()> {
    let k3 = Quiver::kronecker(3)?;
    let theta = Stability::new(vec![1, 0]);
    let oracle = ExistenceOracle::new(&k3, &theta)?;
    for v in [[1, 1], [1, 3], [1, 4], [2, 3], [3, 1]] {
        let d = DimVector::new(v.to_vec())?;
        println!(
            "K_3 {d}: semistable {} / {}, stable {}",
            oracle.sst_nonempty(&d, SstMethod::Schofield)?,
            oracle.sst_nonempty(&d, SstMethod::Hn)?,
            oracle.st_nonempty(&d)?
        );
    }
    println!("(1,1) generic in (2,3): {}", generic_subrep(&k3, &DimVector::new(vec![1, 1])?, &DimVector::new(vec![2, 3])?)?);

    let l2 = Quiver::loop_quiver(2)?;
    let c3 = Quiver::cyclic(3)?;
    println!("simple L_2 d=3: {}", simple_nonempty(&l2, &DimVector::new(vec![3])?)?);
    println!("simple 3-cycle (1,1,1): {}, (2,1,1): {}", simple_nonempty(&c3, &DimVector::new(vec![1, 1, 1])?)?, simple_nonempty(&c3, &DimVector::new(vec![2, 1, 1])?)?);

    let parts = [DimVector::new(vec![1, 1])?, DimVector::new(vec![2, 2])?];
    let aux = auxiliary_quiver(&k3, &parts)?;
    println!("auxiliary quiver: {} vertices, {} arrows", aux.num_vertices(), aux.arrows().len());
    println!("stable sum: {}", st_nonempty_al(&k3, &theta, &[(1, parts[0].clone()), (1, parts[1].clone())])?);
    Ok(())
}
