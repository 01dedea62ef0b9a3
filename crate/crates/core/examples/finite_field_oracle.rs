//! Brute force over a finite field: point counts, the census by HN type and
//! a verification report against the closed formulas.

use quiver_moduli::oracle::{hn_filtration, point_counts, rep_at, verify, DEFAULT_BUDGET};
use quiver_moduli::{DimVector, Quiver, Stability};

fn main() -> quiver_moduli::Result<()> {
    let k2 = Quiver::kronecker(2)?;
    let theta = Stability::new(vec![1, 0]);
    let d = DimVector::new(vec![1, 2])?;

    let counts = point_counts(&k2, &theta, &d, 3, DEFAULT_BUDGET)?;
    println!("|R| = {}, semistable {}, stable {}, |G| = {}", counts.reps, counts.semistable, counts.stable, counts.group_order);
    print!("{}", counts.census_csv());

    let m = rep_at(&k2, 3, &d, 7);
    println!("HN chain of point 7: {:?}", hn_filtration(&k2, &m, &theta)?.chain.iter().map(|c| c.to_string()).collect::<Vec<_>>());

    let report = verify(&k2, &theta, &DimVector::new(vec![2, 2])?, 2, DEFAULT_BUDGET)?;
    for c in &report.checks {
        println!("{:<28} {} ({} vs {})", c.name, if c.pass { "ok" } else { "FAIL" }, c.expected, c.actual);
    }
    Ok(())
}
