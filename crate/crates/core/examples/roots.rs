//! Classify dimension vectors as real roots, imaginary roots or non-roots.
//!
//! ```text
//! cargo run --example roots
//! ```

use quiver_moduli::roots::{classify_root, reflect, RootKind};
use quiver_moduli::{DimVector, Quiver};

fn main() -> quiver_moduli::Result<()> {
    let k3 = Quiver::kronecker(3)?;
    for v in [[1, 0], [1, 1], [2, 3], [3, 8], [1, 4]] {
        let d = DimVector::new(v.to_vec())?;
        let c = classify_root(&k3, &d, false)?;
        println!("K_3 {d}: {:?} via {:?} -> {:?}, parameters {:?}", c.verdict, c.witness, c.reduced, c.parameters);
    }

    // Reflections are involutions.
    let s = reflect(&k3, 0, &[2, 3])?;
    println!("s_0(2,3) = {s:?}, s_0 s_0 (2,3) = {:?}", reflect(&k3, 0, &s)?);

    let a3 = Quiver::linear(3)?;
    let roots: Vec<_> = DimVector::all_up_to(3, 3)
        .into_iter()
        .filter(|d| !d.is_zero())
        .filter(|d| matches!(classify_root(&a3, d, false), Ok(c) if c.verdict == RootKind::Real))
        .collect();
    println!("positive real roots of A_3: {}", roots.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" "));
    Ok(())
}
