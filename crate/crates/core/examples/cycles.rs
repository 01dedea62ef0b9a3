//! Primitive cycles and the linear term of simple counts at `q = 1`, plus a
//! positivity scan in `q − 1`.

use quiver_moduli::counting::{conjecture_scan, cycle_classes, euler_linear_term_check};
use quiver_moduli::{DimVector, Quiver};

fn main() -> quiver_moduli::Result<()> {
    let l2 = Quiver::loop_quiver(2)?;
    for d in 1..=4 {
        let dv = DimVector::new(vec![d])?;
        let classes = cycle_classes(&l2, &dv)?;
        let primitive = classes.iter().filter(|c| c.is_primitive()).count();
        let check = euler_linear_term_check(&l2, &dv, d == 1)?;
        println!("d={d}: {} classes, {primitive} primitive, linear term {} holds {}", classes.len(), check.linear_term, check.holds);
    }

    for row in conjecture_scan(&Quiver::loop_quiver(3)?, &DimVector::new(vec![4])?)? {
        println!("{:?}: {} positive {}", row.d, row.simple_count, row.positive_in_qminus1);
    }
    Ok(())
}
