//! Truncated `NI`-graded power series with rational-function coefficients.
//!
//! Besides the ordinary commutative product the ring carries the twisted
//! product `t^d ∘ t^e = q^{−⟨d,e⟩} t^{d+e}`, and the plethystic operators
//! `Exp(f) = exp(Σ_k ψ_k(f)/k)` and its inverse `Log`, where `ψ_k` sends
//! `q ↦ q^k` and `t^d ↦ t^{kd}`. Exp and Log use the ordinary product.
//!
//! A series is truncated at total dimension `N`. It may additionally be
//! restricted to a box `e ≤ bound` and to a slope class `NI_μ`; both are
//! closed under the operations here, so the truncated results are exact on
//! every admissible key.

use std::collections::BTreeMap;
use std::sync::Arc;

use num::{BigInt, BigRational};

use crate::error::{Error, Result};
use crate::exactq::RatFunc;
use crate::quiver::{DimVector, Quiver, Slope, Stability};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Product {
    Twisted,
    Ordinary,
}

/// The shape a series lives in: quiver, truncation, optional box and slope filter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesShape {
    quiver: Arc<Quiver>,
    truncation: i64,
    bound: Option<DimVector>,
    filter: Option<(Stability, Slope)>,
}

impl SeriesShape {
    pub fn new(quiver: &Quiver, truncation: i64) -> Self {
        SeriesShape { quiver: Arc::new(quiver.clone()), truncation, bound: None, filter: None }
    }

    /// Restricts keys to `e ≤ bound`.
    pub fn with_bound(mut self, bound: DimVector) -> Self {
        self.bound = Some(bound);
        self
    }

    /// Restricts keys to `NI_μ` for the given stability.
    pub fn with_slope(mut self, theta: Stability, mu: Slope) -> Self {
        self.filter = Some((theta, mu));
        self
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn truncation(&self) -> i64 {
        self.truncation
    }

    pub fn admits(&self, d: &DimVector) -> bool {
        if d.len() != self.quiver.num_vertices() || d.total() > self.truncation {
            return false;
        }
        if let Some(b) = &self.bound {
            if !d.le(b) {
                return false;
            }
        }
        match &self.filter {
            Some((theta, mu)) if !d.is_zero() => theta.mu(d) == *mu,
            _ => true,
        }
    }

    /// All admissible keys, in lexicographic order (so `e ≤ f` componentwise implies `e` first).
    pub fn keys(&self) -> Vec<DimVector> {
        let n = self.quiver.num_vertices();
        let candidates = match &self.bound {
            Some(b) => b.sub_vectors(),
            None => {
                let mut v = DimVector::all_up_to(n, self.truncation);
                v.push(DimVector::zero(n));
                v
            }
        };
        let mut keys: Vec<DimVector> = candidates.into_iter().filter(|d| self.admits(d)).collect();
        keys.sort();
        keys
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedSeries {
    shape: SeriesShape,
    coeffs: BTreeMap<DimVector, RatFunc>,
}

impl TwistedSeries {
    pub fn zero(shape: &SeriesShape) -> Self {
        TwistedSeries { shape: shape.clone(), coeffs: BTreeMap::new() }
    }

    pub fn one(shape: &SeriesShape) -> Self {
        let mut s = TwistedSeries::zero(shape);
        s.coeffs.insert(DimVector::zero(shape.quiver.num_vertices()), RatFunc::one());
        s
    }

    pub fn shape(&self) -> &SeriesShape {
        &self.shape
    }

    pub fn get(&self, d: &DimVector) -> RatFunc {
        self.coeffs.get(d).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn constant_term(&self) -> RatFunc {
        self.get(&DimVector::zero(self.shape.quiver.num_vertices()))
    }

    /// Sets a coefficient; keys outside the shape are rejected.
    pub fn set(&mut self, d: DimVector, value: RatFunc) -> Result<()> {
        if !self.shape.admits(&d) {
            return Err(Error::invalid(format!("series: key {d} is outside the series shape")));
        }
        if value.is_zero() {
            self.coeffs.remove(&d);
        } else {
            self.coeffs.insert(d, value);
        }
        Ok(())
    }

    /// Non-zero coefficients in key order.
    pub fn iter(&self) -> impl Iterator<Item = (&DimVector, &RatFunc)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn check_compatible(&self, other: &TwistedSeries) -> Result<()> {
        if self.shape != other.shape {
            return Err(Error::invalid("series: quiver, truncation or filter mismatch"));
        }
        Ok(())
    }

    pub fn add(&self, other: &TwistedSeries) -> Result<TwistedSeries> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            let s = &out.get(k) + v;
            out.set(k.clone(), s)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &TwistedSeries) -> Result<TwistedSeries> {
        self.add(&other.scale(&RatFunc::from_int(-1)))
    }

    /// Multiplies every coefficient by `f`.
    pub fn scale(&self, f: &RatFunc) -> TwistedSeries {
        let mut out = TwistedSeries::zero(&self.shape);
        for (k, v) in &self.coeffs {
            let p = v * f;
            if !p.is_zero() {
                out.coeffs.insert(k.clone(), p);
            }
        }
        out
    }

    fn product(&self, other: &TwistedSeries, kind: Product) -> Result<TwistedSeries> {
        self.check_compatible(other)?;
        let q = &self.shape.quiver;
        let mut acc: BTreeMap<DimVector, RatFunc> = BTreeMap::new();
        for (d, a) in &self.coeffs {
            for (e, b) in &other.coeffs {
                let f = d.add(e);
                if !self.shape.admits(&f) {
                    continue;
                }
                let mut term = a * b;
                if kind == Product::Twisted {
                    term = term.mul_q_pow(-q.euler(d, e));
                }
                let slot = acc.entry(f).or_insert_with(RatFunc::zero);
                *slot = &*slot + &term;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Ok(TwistedSeries { shape: self.shape.clone(), coeffs: acc })
    }

    /// `(A∘B)[f] = Σ_{d+e=f} q^{−⟨d,e⟩} A[d]·B[e]`, factors in the given order.
    pub fn twisted_mul(&self, other: &TwistedSeries) -> Result<TwistedSeries> {
        self.product(other, Product::Twisted)
    }

    pub fn mul(&self, other: &TwistedSeries) -> Result<TwistedSeries> {
        self.product(other, Product::Ordinary)
    }

    /// Two-sided inverse, solved degree by degree from `A ∘ B = 1`.
    pub fn inverse(&self, kind: Product) -> Result<TwistedSeries> {
        let c0 = self.constant_term();
        if c0.is_zero() {
            return Err(Error::invalid("series inverse: constant term is not a unit"));
        }
        let c0_inv = c0.inv()?;
        let q = &self.shape.quiver;
        let mut out = TwistedSeries::zero(&self.shape);
        for f in self.shape.keys() {
            if f.is_zero() {
                out.coeffs.insert(f, c0_inv.clone());
                continue;
            }
            let mut acc = RatFunc::zero();
            for (d, a) in &self.coeffs {
                if d.is_zero() || !d.le(&f) {
                    continue;
                }
                let e = f.checked_sub(d).unwrap();
                let Some(b) = out.coeffs.get(&e) else { continue };
                let mut term = a * b;
                if kind == Product::Twisted {
                    term = term.mul_q_pow(-q.euler(d, &e));
                }
                acc = &acc + &term;
            }
            let val = -&(&c0_inv * &acc);
            if !val.is_zero() {
                out.coeffs.insert(f, val);
            }
        }
        Ok(out)
    }

    /// `ψ_k`: `q ↦ q^k` in every coefficient and `t^d ↦ t^{kd}`, dropping keys beyond the shape.
    pub fn psi(&self, k: usize) -> TwistedSeries {
        let mut out = TwistedSeries::zero(&self.shape);
        for (d, v) in &self.coeffs {
            let kd = d.scale(k as i64);
            if self.shape.admits(&kd) {
                out.coeffs.insert(kd, v.psi(k));
            }
        }
        out
    }

    /// Ordinary `exp` of a series with zero constant term.
    pub fn exp(&self) -> Result<TwistedSeries> {
        if !self.constant_term().is_zero() {
            return Err(Error::invalid("exp: constant term must be zero"));
        }
        // With D t^d = |d| t^d: D E = E · D g, solved degree by degree.
        let mut out = TwistedSeries::one(&self.shape);
        for f in self.shape.keys() {
            if f.is_zero() {
                continue;
            }
            let mut acc = RatFunc::zero();
            for (e, g) in &self.coeffs {
                if !e.le(&f) {
                    continue;
                }
                let rest = f.checked_sub(e).unwrap();
                let Some(ef) = out.coeffs.get(&rest) else { continue };
                acc = &acc + &(g * ef).scale(&int_rat(e.total()));
            }
            let val = acc.scale(&BigRational::new(1.into(), f.total().into()));
            if !val.is_zero() {
                out.coeffs.insert(f, val);
            }
        }
        Ok(out)
    }

    /// Ordinary `log` of a series with constant term 1.
    pub fn log(&self) -> Result<TwistedSeries> {
        if !self.constant_term().is_one() {
            return Err(Error::invalid("log: constant term must be 1"));
        }
        // |f| L[f] = |f| h[f] − Σ_{0≠e≠f} |e| L[e] h[f−e].
        let mut out = TwistedSeries::zero(&self.shape);
        for f in self.shape.keys() {
            if f.is_zero() {
                continue;
            }
            let mut acc = self.get(&f).scale(&int_rat(f.total()));
            for (e, l) in &out.coeffs {
                if !e.le(&f) || *e == f {
                    continue;
                }
                let rest = f.checked_sub(e).unwrap();
                if let Some(h) = self.coeffs.get(&rest) {
                    acc = &acc - &(l * h).scale(&int_rat(e.total()));
                }
            }
            let val = acc.scale(&BigRational::new(1.into(), f.total().into()));
            if !val.is_zero() {
                out.coeffs.insert(f, val);
            }
        }
        Ok(out)
    }

    /// `Ψ(f) = Σ_{k≥1} ψ_k(f)/k`, truncated.
    pub fn adams_sum(&self) -> TwistedSeries {
        self.weighted_adams(|k| BigRational::new(1.into(), BigInt::from(k)))
    }

    /// `Ψ^{−1}(f) = Σ_{k≥1} μ(k) ψ_k(f)/k`, truncated.
    pub fn adams_sum_inverse(&self) -> TwistedSeries {
        self.weighted_adams(|k| BigRational::new(moebius(k).into(), BigInt::from(k)))
    }

    fn weighted_adams(&self, weight: impl Fn(usize) -> BigRational) -> TwistedSeries {
        let mut out = TwistedSeries::zero(&self.shape);
        let n = self.shape.truncation.max(1) as usize;
        for k in 1..=n {
            let w = weight(k);
            if w == BigRational::from_integer(0.into()) {
                continue;
            }
            let term = self.psi(k).scale(&RatFunc::constant(w));
            out = out.add(&term).expect("same shape");
        }
        out
    }

    /// Plethystic exponential `Exp(f) = exp(Ψ(f))`; requires `f[0] = 0`.
    pub fn plethystic_exp(&self) -> Result<TwistedSeries> {
        if !self.constant_term().is_zero() {
            return Err(Error::invalid("Exp: constant term must be zero"));
        }
        self.adams_sum().exp()
    }

    /// Plethystic logarithm `Log(f) = Ψ^{−1}(log f)`; requires `f[0] = 1`.
    pub fn plethystic_log(&self) -> Result<TwistedSeries> {
        Ok(self.log()?.adams_sum_inverse())
    }
}

fn int_rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// The number-theoretic Möbius function.
pub fn moebius(n: usize) -> i64 {
    assert!(n >= 1);
    let mut n = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}
