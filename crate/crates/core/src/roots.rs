//! Kac root combinatorics: simple reflections and root classification by
//! reduction to the fundamental domain.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quiver::{DimVector, Quiver};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RootKind {
    Real,
    Imaginary,
    NotARoot,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootClassification {
    pub verdict: RootKind,
    /// Vertices reflected at, in order.
    pub witness: Vec<usize>,
    /// The vector the reflections ended on.
    pub reduced: Vec<i64>,
    /// `1 − ⟨d,d⟩` for imaginary roots.
    pub parameters: Option<i64>,
}

/// `s_i(d) = d − (d,i)·i` with the symmetrized Euler form.
pub fn reflect(q: &Quiver, i: usize, d: &[i64]) -> Result<Vec<i64>> {
    q.check_len(d.len(), "vector")?;
    if i >= q.num_vertices() {
        return Err(Error::invalid(format!("reflect: no vertex with index {i}")));
    }
    if q.has_loop_at(i) {
        return Err(Error::invalid(format!(
            "reflect: vertex {:?} carries a loop",
            q.vertices()[i]
        )));
    }
    Ok(reflect_unchecked(q, i, d))
}

fn pairing_with_vertex(q: &Quiver, d: &[i64], i: usize) -> i64 {
    let mut e = vec![0; d.len()];
    e[i] = 1;
    q.symmetric_form_z(d, &e)
}

fn reflect_unchecked(q: &Quiver, i: usize, d: &[i64]) -> Vec<i64> {
    let c = pairing_with_vertex(q, d, i);
    let mut out = d.to_vec();
    out[i] -= c;
    out
}

fn support_connected(q: &Quiver, d: &[i64]) -> bool {
    let supp: Vec<usize> = (0..d.len()).filter(|&i| d[i] != 0).collect();
    let Some(&start) = supp.first() else { return false };
    let mut seen = vec![false; d.len()];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for a in q.arrows() {
            for (x, y) in [(a.source, a.target), (a.target, a.source)] {
                if x == v && d[y] != 0 && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    supp.iter().all(|&i| seen[i])
}

/// Whether `d` lies in the fundamental domain: non-zero, connected support, `(d,i) ≤ 0` for all `i`.
pub fn in_fundamental_domain(q: &Quiver, d: &[i64]) -> bool {
    d.iter().all(|&x| x >= 0)
        && support_connected(q, d)
        && (0..d.len()).all(|i| pairing_with_vertex(q, d, i) <= 0)
}

/// Classifies `d` as a real root, imaginary root or non-root.
///
/// Quivers with oriented cycles are refused unless `allow_cycles` is set; in
/// that case the same reduction runs unchanged (loop vertices always have
/// `(d,i) ≤ 0`, so they are never reflected at).
pub fn classify_root(q: &Quiver, d: &DimVector, allow_cycles: bool) -> Result<RootClassification> {
    q.check_len(d.len(), "dimension vector")?;
    if d.is_zero() {
        return Err(Error::invalid("classify_root: d must be non-zero"));
    }
    if !allow_cycles && q.has_oriented_cycle() {
        return Err(Error::invalid("classify_root: quiver has oriented cycles"));
    }
    let mut cur = d.as_slice().to_vec();
    let mut witness = Vec::new();
    loop {
        let finish = |verdict, parameters, witness: Vec<usize>, cur: Vec<i64>| RootClassification {
            verdict,
            witness,
            reduced: cur,
            parameters,
        };
        if cur.iter().any(|&x| x < 0) {
            return Ok(finish(RootKind::NotARoot, None, witness, cur));
        }
        let nonzero: Vec<usize> = (0..cur.len()).filter(|&i| cur[i] != 0).collect();
        if nonzero.is_empty() {
            return Ok(finish(RootKind::NotARoot, None, witness, cur));
        }
        if nonzero.len() == 1 && cur[nonzero[0]] == 1 {
            return Ok(finish(RootKind::Real, None, witness, cur));
        }
        if in_fundamental_domain(q, &cur) {
            let params = 1 - q.euler_form_z(d.as_slice(), d.as_slice());
            return Ok(finish(RootKind::Imaginary, Some(params), witness, cur));
        }
        let Some(i) = (0..cur.len()).find(|&i| pairing_with_vertex(q, &cur, i) > 0) else {
            // Disconnected support with no reflection available.
            return Ok(finish(RootKind::NotARoot, None, witness, cur));
        };
        let next = reflect_unchecked(q, i, &cur);
        let before: i64 = cur.iter().sum();
        let after: i64 = next.iter().sum();
        assert!(after < before, "reflection failed to decrease total dimension");
        witness.push(i);
        cur = next;
    }
}
