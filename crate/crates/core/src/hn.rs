//! The Harder–Narasimhan counting kernel.
//!
//! `P_d(q)` is the rational function with `P_d(q) = |R_d^sst(F_q)| / |G_d(F_q)|`.
//! It is evaluated in two independent ways:
//!
//! * **direct**: the alternating sum over decompositions `d = d¹+…+dˢ` whose
//!   proper partial sums all have slope `> μ(d)`, with summands built only
//!   from `|R_e|/|G_e|`;
//! * **recursive**: the HN stratification `|R_d|/|G_d| = Σ_types Π P_{dᵏ}`
//!   over decompositions with strictly decreasing slopes, solved for `P_d`.
//!
//! Both sums are accumulated over partial decompositions with memoization,
//! so neither enumerates decompositions one by one.

use std::collections::HashMap;

use parking_lot::RwLock;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactq::{as_integer_polynomial, Poly, RatFunc};
use crate::quiver::{theta_coprime, DimVector, Quiver, Slope, Stability};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HnMethod {
    Direct,
    Recursive,
}

impl std::str::FromStr for HnMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "direct" => Ok(HnMethod::Direct),
            "recursive" => Ok(HnMethod::Recursive),
            _ => Err(Error::invalid(format!("method: expected direct|recursive, got {s:?}"))),
        }
    }
}

/// An ordered tuple of non-zero dimension vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct HnDecomposition(pub Vec<DimVector>);

impl HnDecomposition {
    pub fn parts(&self) -> &[DimVector] {
        &self.0
    }

    pub fn sum(&self) -> Option<DimVector> {
        let mut it = self.0.iter();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, x| acc.add(x)))
    }

    /// `μ(d¹+…+dᵏ) > μ(d)` for all `k < s`.
    pub fn is_prefix_admissible(&self, theta: &Stability) -> bool {
        let Some(total) = self.sum() else { return false };
        let mu = theta.mu(&total);
        let mut prefix = DimVector::zero(total.len());
        for part in &self.0[..self.0.len() - 1] {
            prefix = prefix.add(part);
            if theta.mu(&prefix) <= mu {
                return false;
            }
        }
        true
    }

    /// `μ(d¹) > … > μ(dˢ)`.
    pub fn is_slope_decreasing(&self, theta: &Stability) -> bool {
        self.0.windows(2).all(|w| theta.mu(&w[0]) > theta.mu(&w[1]))
    }

    /// `Σ_{k<l} ⟨dˡ,dᵏ⟩`.
    pub fn twist_exponent(&self, q: &Quiver) -> i64 {
        let mut total = 0;
        for l in 0..self.0.len() {
            for k in 0..l {
                total += q.euler(&self.0[l], &self.0[k]);
            }
        }
        total
    }
}

/// All ordered decompositions of `d` into non-zero parts with strictly decreasing slopes
/// (the possible HN types), including the trivial one.
pub fn hn_types(theta: &Stability, d: &DimVector) -> Vec<HnDecomposition> {
    fn rec(theta: &Stability, rest: &DimVector, bound: Option<Slope>, cur: &mut Vec<DimVector>, out: &mut Vec<HnDecomposition>) {
        if rest.is_zero() {
            out.push(HnDecomposition(cur.clone()));
            return;
        }
        for x in rest.sub_vectors() {
            if x.is_zero() {
                continue;
            }
            let mu = theta.mu(&x);
            if bound.is_some_and(|b| mu >= b) {
                continue;
            }
            cur.push(x.clone());
            rec(theta, &rest.checked_sub(&x).unwrap(), Some(mu), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if !d.is_zero() {
        rec(theta, d, None, &mut Vec::new(), &mut out);
    }
    out
}

/// All ordered decompositions admissible for the direct (prefix-slope) form.
pub fn prefix_decompositions(theta: &Stability, d: &DimVector) -> Vec<HnDecomposition> {
    fn rec(theta: &Stability, d: &DimVector, mu: Slope, prefix: &DimVector, cur: &mut Vec<DimVector>, out: &mut Vec<HnDecomposition>) {
        let rest = d.checked_sub(prefix).unwrap();
        for x in rest.sub_vectors() {
            if x.is_zero() {
                continue;
            }
            let next = prefix.add(&x);
            cur.push(x);
            if next == *d {
                out.push(HnDecomposition(cur.clone()));
            } else if theta.mu(&next) > mu {
                rec(theta, d, mu, &next, cur, out);
            }
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if !d.is_zero() {
        let mu = theta.mu(d);
        rec(theta, d, mu, &DimVector::zero(d.len()), &mut Vec::new(), &mut out);
    }
    out
}

/// `|R_d|/|G_d| = q^{−⟨d,d⟩} Π_i Π_{j=1}^{d_i} (1 − q^{−j})^{−1}`.
pub fn rep_space_over_group(q: &Quiver, d: &DimVector) -> RatFunc {
    let mut den = Poly::one();
    let mut shift = -q.euler(d, d);
    for &di in d.as_slice() {
        for j in 1..=di as usize {
            // (1 - q^{-j})^{-1} = q^j / (q^j - 1)
            shift += j as i64;
            let mut c = vec![0i64; j + 1];
            c[0] = -1;
            c[j] = 1;
            den = &den * &Poly::from_i64(&c);
        }
    }
    RatFunc::new(Poly::one(), den).expect("non-zero denominator").mul_q_pow(shift)
}

/// Memoizing evaluator of `P_d(q)` for a fixed quiver and stability.
///
/// The caches are write-once maps: concurrent fills may duplicate work but
/// always store the same value.
#[derive(Debug)]
pub struct HnKernel {
    quiver: Quiver,
    theta: Stability,
    rep: RwLock<HashMap<DimVector, RatFunc>>,
    sst: RwLock<HashMap<DimVector, RatFunc>>,
    tail: RwLock<HashMap<(DimVector, Option<Slope>), RatFunc>>,
}

impl HnKernel {
    pub fn new(quiver: &Quiver, theta: &Stability) -> Result<Self> {
        quiver.check_len(theta.len(), "stability")?;
        Ok(HnKernel {
            quiver: quiver.clone(),
            theta: theta.clone(),
            rep: RwLock::new(HashMap::new()),
            sst: RwLock::new(HashMap::new()),
            tail: RwLock::new(HashMap::new()),
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn theta(&self) -> &Stability {
        &self.theta
    }

    fn check(&self, d: &DimVector) -> Result<()> {
        self.quiver.check_len(d.len(), "dimension vector")?;
        if d.is_zero() {
            return Err(Error::invalid("dimension vector must be non-zero"));
        }
        Ok(())
    }

    pub fn rep_over_group(&self, d: &DimVector) -> RatFunc {
        if let Some(v) = self.rep.read().get(d) {
            return v.clone();
        }
        let v = rep_space_over_group(&self.quiver, d);
        self.rep.write().entry(d.clone()).or_insert(v).clone()
    }

    /// `P_d(q)` by the chosen method.
    pub fn p(&self, d: &DimVector, method: HnMethod) -> Result<RatFunc> {
        self.check(d)?;
        Ok(match method {
            HnMethod::Direct => self.direct(d),
            HnMethod::Recursive => self.recursive(d),
        })
    }

    fn direct(&self, d: &DimVector) -> RatFunc {
        // C(D) accumulates all admissible chains ending in prefix D, sign (−1)^s.
        let mu = self.theta.mu(d);
        let mut memo: HashMap<DimVector, RatFunc> = HashMap::new();
        memo.insert(DimVector::zero(d.len()), RatFunc::from_int(-1));
        let mut prefixes: Vec<DimVector> = d
            .sub_vectors()
            .into_iter()
            .filter(|e| !e.is_zero() && (e == d || self.theta.mu(e) > mu))
            .collect();
        prefixes.sort();
        for big in prefixes {
            let mut acc = RatFunc::zero();
            for x in big.sub_vectors() {
                if x.is_zero() {
                    continue;
                }
                let rest = big.checked_sub(&x).unwrap();
                let Some(c) = memo.get(&rest) else { continue };
                let term = (&self.rep_over_group(&x) * c).mul_q_pow(-self.quiver.euler(&x, &rest));
                acc = &acc - &term;
            }
            memo.insert(big, acc);
        }
        memo.remove(d).unwrap()
    }

    fn recursive(&self, d: &DimVector) -> RatFunc {
        if let Some(v) = self.sst.read().get(d) {
            return v.clone();
        }
        let mut acc = self.rep_over_group(d);
        for x in d.sub_vectors() {
            if x.is_zero() || x == *d {
                continue;
            }
            let rest = d.checked_sub(&x).unwrap();
            let mu = self.theta.mu(&x);
            let tail = self.tail(&rest, Some(mu));
            if tail.is_zero() {
                continue;
            }
            let term = (&self.recursive(&x) * &tail).mul_q_pow(-self.quiver.euler(&rest, &x));
            acc = &acc - &term;
        }
        self.sst.write().entry(d.clone()).or_insert(acc).clone()
    }

    /// Sum over decompositions of `d` with decreasing slopes all `< bound`.
    fn tail(&self, d: &DimVector, bound: Option<Slope>) -> RatFunc {
        if d.is_zero() {
            return RatFunc::one();
        }
        let key = (d.clone(), bound);
        if let Some(v) = self.tail.read().get(&key) {
            return v.clone();
        }
        let mut acc = RatFunc::zero();
        for x in d.sub_vectors() {
            if x.is_zero() {
                continue;
            }
            let mu = self.theta.mu(&x);
            if bound.is_some_and(|b| mu >= b) {
                continue;
            }
            let rest = d.checked_sub(&x).unwrap();
            let t = self.tail(&rest, Some(mu));
            if t.is_zero() {
                continue;
            }
            let term = (&self.recursive(&x) * &t).mul_q_pow(-self.quiver.euler(&rest, &x));
            acc = &acc + &term;
        }
        self.tail.write().entry(key).or_insert(acc).clone()
    }

    /// Betti polynomial `(q − 1)·P_d(q)` of the moduli space for a Θ-coprime `d`.
    pub fn betti_coprime(&self, d: &DimVector) -> Result<Poly> {
        self.check(d)?;
        if !theta_coprime(&self.quiver, &self.theta, d)? {
            return Err(Error::invalid(format!("betti: {d} is not coprime for the stability")));
        }
        let f = &RatFunc::from_poly(Poly::from_i64(&[-1, 1])) * &self.recursive(d);
        as_integer_polynomial(&f, &format!("Betti polynomial of {d}"))
    }
}

/// One-shot `P_d(q)`.
pub fn hn_rational(q: &Quiver, theta: &Stability, d: &DimVector, method: HnMethod) -> Result<RatFunc> {
    HnKernel::new(q, theta)?.p(d, method)
}

/// One-shot Betti polynomial in the coprime case.
pub fn betti_coprime(q: &Quiver, theta: &Stability, d: &DimVector) -> Result<Poly> {
    HnKernel::new(q, theta)?.betti_coprime(d)
}
