//! Counting polynomials of stable, semistable and simple moduli.
//!
//! With `S = Σ_{e ∈ NI_μ} P_e t^e` (twisted product) the stable counts are
//! `Σ P^st_e t^e = (1 − q)·Log(S^{−1})` and the semistable counts are
//! `Exp` of the stable series. Only keys `e ≤ d` are ever needed, so every
//! series is restricted to the box below `d`.

use std::collections::BTreeSet;

use num::{BigInt, BigRational, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactq::{as_integer_polynomial, serialize_display, Poly, RatFunc};
use crate::hn::{HnKernel, HnMethod};
use crate::quiver::{DimVector, Quiver, Stability};
use crate::series::{Product, SeriesShape, TwistedSeries};

fn check_nonzero(q: &Quiver, d: &DimVector) -> Result<()> {
    q.check_len(d.len(), "dimension vector")?;
    if d.is_zero() {
        return Err(Error::invalid("dimension vector must be non-zero"));
    }
    Ok(())
}

/// The slope class of `d`, boxed below `d`.
pub fn slope_shape(q: &Quiver, theta: &Stability, d: &DimVector) -> SeriesShape {
    SeriesShape::new(q, d.total())
        .with_bound(d.clone())
        .with_slope(theta.clone(), theta.mu(d))
}

/// `Σ_{e ∈ NI_μ, e ≤ d} P_e t^e`, including the constant 1.
pub fn sst_quotient_series(kernel: &HnKernel, d: &DimVector) -> Result<TwistedSeries> {
    let shape = slope_shape(kernel.quiver(), kernel.theta(), d);
    let mut s = TwistedSeries::one(&shape);
    for e in shape.keys() {
        if !e.is_zero() {
            let p = kernel.p(&e, HnMethod::Recursive)?;
            s.set(e, p)?;
        }
    }
    Ok(s)
}

/// The stable counting series over `NI_μ` below `d`, as rational functions.
pub fn stable_series(kernel: &HnKernel, d: &DimVector) -> Result<TwistedSeries> {
    let s = sst_quotient_series(kernel, d)?;
    let e = s.inverse(Product::Twisted)?;
    let one_minus_q = RatFunc::from_poly(Poly::from_i64(&[1, -1]));
    Ok(e.plethystic_log()?.scale(&one_minus_q))
}

pub fn stable_count_poly(q: &Quiver, theta: &Stability, d: &DimVector) -> Result<Poly> {
    check_nonzero(q, d)?;
    let kernel = HnKernel::new(q, theta)?;
    let x = stable_series(&kernel, d)?;
    as_integer_polynomial(&x.get(d), &format!("stable count at {d}"))
}

pub fn sst_count_poly(q: &Quiver, theta: &Stability, d: &DimVector) -> Result<Poly> {
    check_nonzero(q, d)?;
    let kernel = HnKernel::new(q, theta)?;
    let x = stable_series(&kernel, d)?;
    as_integer_polynomial(&x.plethystic_exp()?.get(d), &format!("semistable count at {d}"))
}

/// Counting polynomial of absolutely simple representations up to isomorphism.
pub fn simple_count_poly(q: &Quiver, d: &DimVector) -> Result<Poly> {
    stable_count_poly(q, &Stability::zero(q.num_vertices()), d)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CountingReport {
    pub d: Vec<i64>,
    pub theta: Vec<i64>,
    pub stable: Poly,
    pub semistable: Poly,
    #[serde(serialize_with = "serialize_display")]
    pub euler_stable: BigInt,
    #[serde(serialize_with = "serialize_display")]
    pub euler_semistable: BigInt,
    /// Whether the stable polynomial has nonnegative coefficients in `q − 1`.
    pub positivity_in_qminus1: bool,
}

fn value_at_one(p: &Poly) -> BigInt {
    p.eval(&BigRational::from_integer(1.into())).to_integer()
}

pub fn counting_report(q: &Quiver, theta: &Stability, d: &DimVector) -> Result<CountingReport> {
    check_nonzero(q, d)?;
    let kernel = HnKernel::new(q, theta)?;
    let x = stable_series(&kernel, d)?;
    let stable = as_integer_polynomial(&x.get(d), &format!("stable count at {d}"))?;
    let semistable = as_integer_polynomial(&x.plethystic_exp()?.get(d), &format!("semistable count at {d}"))?;
    Ok(CountingReport {
        d: d.as_slice().to_vec(),
        theta: theta.as_slice().to_vec(),
        euler_stable: value_at_one(&stable),
        euler_semistable: value_at_one(&semistable),
        positivity_in_qminus1: stable.is_positive_in_qminus1(),
        stable,
        semistable,
    })
}

/// A closed walk, as a sequence of arrow indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Cycle(Vec<usize>);

impl Cycle {
    pub fn new(q: &Quiver, arrows: Vec<usize>) -> Result<Self> {
        if arrows.is_empty() {
            return Err(Error::invalid("cycle: empty arrow sequence"));
        }
        let qa = q.arrows();
        if let Some(&bad) = arrows.iter().find(|&&a| a >= qa.len()) {
            return Err(Error::invalid(format!("cycle: no arrow with index {bad}")));
        }
        for k in 0..arrows.len() {
            let next = arrows[(k + 1) % arrows.len()];
            if qa[arrows[k]].target != qa[next].source {
                return Err(Error::invalid(format!("cycle: arrows {} and {next} do not compose", arrows[k])));
            }
        }
        Ok(Cycle(arrows))
    }

    pub fn arrows(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Visits per vertex (counted at arrow sources).
    pub fn dimension_vector(&self, q: &Quiver) -> DimVector {
        let mut v = vec![0i64; q.num_vertices()];
        for &a in &self.0 {
            v[q.arrows()[a].source] += 1;
        }
        DimVector::new(v).expect("nonnegative")
    }

    /// Lexicographically minimal rotation.
    pub fn canonical(&self) -> Cycle {
        let n = self.0.len();
        (0..n)
            .map(|r| Cycle(self.0[r..].iter().chain(&self.0[..r]).copied().collect()))
            .min()
            .expect("non-empty")
    }

    /// Smallest `p` with the sequence invariant under rotation by `p`.
    pub fn period(&self) -> usize {
        let n = self.0.len();
        (1..=n)
            .find(|&p| n.is_multiple_of(p) && (0..n).all(|k| self.0[k] == self.0[(k + p) % n]))
            .unwrap_or(n)
    }

    /// Not cyclically equivalent to a proper power.
    pub fn is_primitive(&self) -> bool {
        self.period() == self.0.len()
    }
}

/// All cycles with the given visit counts, one per cyclic-equivalence class.
pub fn cycle_classes(q: &Quiver, d: &DimVector) -> Result<Vec<Cycle>> {
    check_nonzero(q, d)?;
    let len = d.total() as usize;
    let mut out = BTreeSet::new();
    let mut remaining = d.as_slice().to_vec();
    let mut path = Vec::with_capacity(len);
    fn rec(q: &Quiver, len: usize, remaining: &mut [i64], path: &mut Vec<usize>, out: &mut BTreeSet<Cycle>) {
        let arrows = q.arrows();
        if path.len() == len {
            if arrows[*path.last().unwrap()].target == arrows[path[0]].source {
                out.insert(Cycle(path.clone()).canonical());
            }
            return;
        }
        for (idx, a) in arrows.iter().enumerate() {
            if let Some(&last) = path.last() {
                if arrows[last].target != a.source {
                    continue;
                }
            }
            if remaining[a.source] == 0 {
                continue;
            }
            remaining[a.source] -= 1;
            path.push(idx);
            rec(q, len, remaining, path, out);
            path.pop();
            remaining[a.source] += 1;
        }
    }
    rec(q, len, &mut remaining, &mut path, &mut out);
    Ok(out.into_iter().collect())
}

pub fn primitive_cycle_classes(q: &Quiver, d: &DimVector) -> Result<usize> {
    Ok(cycle_classes(q, d)?.iter().filter(|c| c.is_primitive()).count())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LinearTermCheck {
    pub d: Vec<i64>,
    pub simple_count: Poly,
    #[serde(serialize_with = "serialize_display")]
    pub constant_term: BigRational,
    #[serde(serialize_with = "serialize_display")]
    pub linear_term: BigRational,
    pub primitive_cycles: usize,
    pub holds: bool,
}

/// Compares the `(q − 1)`-coefficient of the simple count with the number of
/// primitive cycle classes. Coordinate vectors are refused unless `relax` is
/// set, in which case the vanishing of the constant term is not required.
pub fn euler_linear_term_check(q: &Quiver, d: &DimVector, relax: bool) -> Result<LinearTermCheck> {
    check_nonzero(q, d)?;
    let coordinate = d.coordinate_index().is_some();
    if coordinate && !relax {
        return Err(Error::invalid(format!("linear-term check: {d} is a coordinate vector")));
    }
    let p = simple_count_poly(q, d)?;
    let exp = RatFunc::from_poly(p.clone()).expand_at_one(1)?;
    let primitive = primitive_cycle_classes(q, d)?;
    let holds = (coordinate || exp[0].is_zero()) && exp[1] == BigRational::from_integer(BigInt::from(primitive));
    Ok(LinearTermCheck {
        d: d.as_slice().to_vec(),
        simple_count: p,
        constant_term: exp[0].clone(),
        linear_term: exp[1].clone(),
        primitive_cycles: primitive,
        holds,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanRow {
    pub d: Vec<i64>,
    pub simple_count: Poly,
    pub positive_in_qminus1: bool,
}

/// Positivity of simple counts in `q − 1` for all `0 < d ≤ d_max`. Reports only.
pub fn conjecture_scan(q: &Quiver, d_max: &DimVector) -> Result<Vec<ScanRow>> {
    q.check_len(d_max.len(), "dimension vector")?;
    let mut rows = Vec::new();
    for d in d_max.sub_vectors() {
        if d.is_zero() {
            continue;
        }
        let p = simple_count_poly(q, &d)?;
        rows.push(ScanRow { d: d.as_slice().to_vec(), positive_in_qminus1: p.is_positive_in_qminus1(), simple_count: p });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hn::betti_coprime;
    use crate::quiver::theta_coprime;

    fn dv(v: &[i64]) -> DimVector {
        DimVector::new(v.to_vec()).unwrap()
    }

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64(c)
    }

    #[test]
    fn subspace_anchor() {
        let s4 = Quiver::subspace(4).unwrap();
        let th = Stability::new(vec![0, 0, 0, 0, -1]);
        let d = dv(&[1, 1, 1, 1, 2]);
        assert_eq!(stable_count_poly(&s4, &th, &d).unwrap(), p(&[-2, 1]));
        assert_eq!(sst_count_poly(&s4, &th, &d).unwrap(), p(&[1, 1]));
    }

    #[test]
    fn loop_quiver_small_counts() {
        for m in 1..4usize {
            let q = Quiver::loop_quiver(m).unwrap();
            let mut qm = vec![0; m + 1];
            qm[m] = 1;
            assert_eq!(simple_count_poly(&q, &dv(&[1])).unwrap(), p(&qm));
        }
        let l2 = Quiver::loop_quiver(2).unwrap();
        assert_eq!(simple_count_poly(&l2, &dv(&[2])).unwrap(), p(&[0, 0, 0, 0, -1, 1]));
        let point = Quiver::discrete(1).unwrap();
        assert!(simple_count_poly(&point, &dv(&[2])).unwrap().is_zero());
        assert!(simple_count_poly(&point, &dv(&[1])).unwrap().is_one());
    }

    #[test]
    fn coprime_collapse() {
        let q = Quiver::kronecker(3).unwrap();
        let th = Stability::new(vec![1, 0]);
        for d in DimVector::all_up_to(2, 5) {
            if !theta_coprime(&q, &th, &d).unwrap() {
                continue;
            }
            let b = betti_coprime(&q, &th, &d).unwrap();
            assert_eq!(stable_count_poly(&q, &th, &d).unwrap(), b, "{d}");
            assert_eq!(sst_count_poly(&q, &th, &d).unwrap(), b, "{d}");
        }
    }

    #[test]
    fn round_trip_reproduces_one() {
        let q = Quiver::kronecker(2).unwrap();
        let th = Stability::new(vec![1, 0]);
        let d = dv(&[3, 3]);
        let kernel = HnKernel::new(&q, &th).unwrap();
        let x = stable_series(&kernel, &d).unwrap();
        let inv = RatFunc::from_poly(p(&[1, -1])).inv().unwrap();
        let e = x.scale(&inv).plethystic_exp().unwrap();
        let s = sst_quotient_series(&kernel, &d).unwrap();
        let prod = s.twisted_mul(&e).unwrap();
        assert_eq!(prod, TwistedSeries::one(s.shape()));
    }

    #[test]
    fn report_values() {
        let q = Quiver::kronecker(5).unwrap();
        let r = counting_report(&q, &Stability::new(vec![1, 0]), &dv(&[1, 1])).unwrap();
        assert_eq!(r.euler_stable, BigInt::from(5));
        assert_eq!(r.stable, r.semistable);
        assert!(r.positivity_in_qminus1);
    }

    #[test]
    fn cycles_on_loop_quivers() {
        for m in 1..4usize {
            let q = Quiver::loop_quiver(m).unwrap();
            assert_eq!(primitive_cycle_classes(&q, &dv(&[1])).unwrap(), m);
            assert_eq!(primitive_cycle_classes(&q, &dv(&[2])).unwrap(), m * (m - 1) / 2);
            // aperiodic necklaces of length 3: (m^3 - m)/3
            assert_eq!(primitive_cycle_classes(&q, &dv(&[3])).unwrap(), (m * m * m - m) / 3);
        }
        let k1 = Quiver::kronecker(1).unwrap();
        assert_eq!(primitive_cycle_classes(&k1, &dv(&[1, 1])).unwrap(), 0);
        let c3 = Quiver::cyclic(3).unwrap();
        assert_eq!(primitive_cycle_classes(&c3, &dv(&[1, 1, 1])).unwrap(), 1);
        assert_eq!(cycle_classes(&c3, &dv(&[2, 2, 2])).unwrap().len(), 1);
        assert_eq!(primitive_cycle_classes(&c3, &dv(&[2, 2, 2])).unwrap(), 0);
    }

    #[test]
    fn cycle_validation() {
        let l2 = Quiver::loop_quiver(2).unwrap();
        let c = Cycle::new(&l2, vec![1, 0, 0]).unwrap();
        assert_eq!(c.canonical().arrows(), &[0, 0, 1]);
        assert!(c.is_primitive());
        assert!(!Cycle::new(&l2, vec![1, 1]).unwrap().is_primitive());
        let k1 = Quiver::kronecker(1).unwrap();
        assert!(Cycle::new(&k1, vec![0]).is_err());
    }

    #[test]
    fn linear_term() {
        for m in 1..4usize {
            let q = Quiver::loop_quiver(m).unwrap();
            assert!(euler_linear_term_check(&q, &dv(&[1]), false).is_err());
            assert!(euler_linear_term_check(&q, &dv(&[1]), true).unwrap().holds);
            for n in 2..4 {
                assert!(euler_linear_term_check(&q, &dv(&[n]), false).unwrap().holds, "m={m} d={n}");
            }
        }
        let c3 = Quiver::cyclic(3).unwrap();
        assert!(euler_linear_term_check(&c3, &dv(&[1, 1, 1]), false).unwrap().holds);
    }

    #[test]
    fn scan_reports() {
        let l1 = Quiver::loop_quiver(1).unwrap();
        let rows = conjecture_scan(&l1, &dv(&[3])).unwrap();
        assert_eq!(rows.len(), 3);
        assert!(rows.iter().all(|r| r.positive_in_qminus1));
        assert!(rows[1].simple_count.is_zero() && rows[2].simple_count.is_zero());
        let k2 = Quiver::kronecker(2).unwrap();
        for r in conjecture_scan(&k2, &dv(&[2, 2])).unwrap() {
            assert!(r.positive_in_qminus1);
            if r.d.iter().sum::<i64>() > 1 {
                assert!(r.simple_count.is_zero());
            }
        }
    }
}
