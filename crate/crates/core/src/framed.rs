//! Framed moduli: smooth models and noncommutative Hilbert schemes.
//!
//! A framing `n` adds one vertex with `n_i` arrows into each `i`. The framed
//! dimension vector is always coprime for the framed stability, so framed
//! moduli are smooth and their counts are Betti polynomials.

use std::collections::HashMap;

use num::{BigUint, One, Zero};
use parking_lot::RwLock;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactq::{as_integer_polynomial, Poly, RatFunc};
use crate::hn::{HnKernel, HnMethod};
use crate::quiver::{Arrow, DimVector, Quiver, Stability};
use crate::series::{Product, SeriesShape, TwistedSeries};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FramedData {
    pub base: Quiver,
    pub d: DimVector,
    pub theta: Stability,
    pub framing: DimVector,
    pub extended: Quiver,
    pub extended_d: DimVector,
    pub extended_theta: Stability,
    pub scale: i64,
}

fn framing_vertex_name(q: &Quiver) -> String {
    let mut name = "inf".to_string();
    while q.vertex_index(&name).is_some() {
        name.push('_');
    }
    name
}

/// Default scale `1 + 2·(dim d)²·(1 + max|Θ'_i|)` for the normalized stability `Θ'`.
pub fn default_scale(theta: &Stability, d: &DimVector) -> i64 {
    let norm = theta.normalized_for(d);
    let max = norm.as_slice().iter().map(|x| x.abs()).max().unwrap_or(0);
    1 + 2 * d.total() * d.total() * (1 + max)
}

/// Builds the framed quiver, dimension vector and stability at the default scale.
pub fn build_framed(q: &Quiver, d: &DimVector, theta: &Stability, n: &DimVector) -> Result<FramedData> {
    build_framed_with_scale(q, d, theta, n, default_scale(theta, d))
}

/// As [`build_framed`] with an explicit scale `N ≥ 1`.
///
/// The stability is first normalized to `Θ' = dim(d)·Θ − Θ(d)·dim`, which
/// leaves semistability of dimension `d` unchanged and makes `Θ'(d) = 0`.
/// Then `Θ̃ = (N·Θ', Θ'(d) + 1)`.
pub fn build_framed_with_scale(q: &Quiver, d: &DimVector, theta: &Stability, n: &DimVector, scale: i64) -> Result<FramedData> {
    q.check_len(d.len(), "d")?;
    q.check_len(theta.len(), "theta")?;
    q.check_len(n.len(), "n")?;
    if n.is_zero() {
        return Err(Error::invalid("n: framing must be non-zero"));
    }
    if scale < 1 {
        return Err(Error::invalid(format!("scale: must be at least 1, got {scale}")));
    }
    let k = q.num_vertices();
    let mut names = q.vertices().to_vec();
    names.push(framing_vertex_name(q));
    let mut arrows = q.arrows().to_vec();
    for i in 0..k {
        arrows.extend((0..n.get(i)).map(|_| Arrow { source: k, target: i }));
    }
    let extended = Quiver::new(names, arrows)?;
    let mut ed = d.as_slice().to_vec();
    ed.push(1);
    let norm = theta.normalized_for(d);
    let mut et: Vec<i64> = norm.as_slice().iter().map(|x| scale * x).collect();
    et.push(norm.value(d) + 1);
    Ok(FramedData {
        base: q.clone(),
        d: d.clone(),
        theta: theta.clone(),
        framing: n.clone(),
        extended,
        extended_d: DimVector::new(ed)?,
        extended_theta: Stability::new(et),
        scale,
    })
}

/// `⟨e, i⟩ = e_i − Σ_{α:j→i} e_j`.
fn euler_with_vertex(q: &Quiver, e: &[i64], i: usize) -> i64 {
    e[i] - q.arrows().iter().filter(|a| a.target == i).map(|a| e[a.source]).sum::<i64>()
}

fn n_dot_d(n: &DimVector, d: &DimVector) -> i64 {
    n.as_slice().iter().zip(d.as_slice()).map(|(a, b)| a * b).sum()
}

/// Whether the Hilbert scheme of `d`-dimensional quotients of the `n`-framed projective is non-empty.
pub fn hilb_nonempty(q: &Quiver, d: &DimVector, n: &DimVector) -> Result<bool> {
    q.check_len(d.len(), "d")?;
    q.check_len(n.len(), "n")?;
    for i in 0..q.num_vertices() {
        if n.get(i) < euler_with_vertex(q, d.as_slice(), i) {
            return Ok(false);
        }
    }
    // Every vertex of supp(d) is reached inside supp(d) from a framed vertex of supp(d).
    let inside = |v: usize| d.get(v) > 0;
    let mut seen: Vec<bool> = (0..d.len()).map(|i| inside(i) && n.get(i) > 0).collect();
    let mut stack: Vec<usize> = (0..d.len()).filter(|&i| seen[i]).collect();
    while let Some(v) = stack.pop() {
        for a in q.arrows() {
            if a.source == v && inside(a.target) && !seen[a.target] {
                seen[a.target] = true;
                stack.push(a.target);
            }
        }
    }
    Ok(d.support().iter().all(|&i| seen[i]))
}

/// A tuple of weakly decreasing nonnegative sequences, one per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Multipartition(pub Vec<Vec<i64>>);

impl Multipartition {
    pub fn new(parts: Vec<Vec<i64>>) -> Result<Self> {
        for p in &parts {
            if p.iter().any(|&x| x < 0) || p.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::invalid(format!("multipartition: {p:?} is not weakly decreasing and nonnegative")));
            }
        }
        Ok(Multipartition(parts))
    }

    pub fn weight(&self) -> i64 {
        self.0.iter().flatten().sum()
    }

    /// `λ^i_k` (1-based); index 0 is `+∞`.
    fn entry(&self, i: usize, k: i64) -> Option<i64> {
        (k > 0).then(|| self.0[i][k as usize - 1])
    }
}

fn hilb_condition(q: &Quiver, d: &DimVector, n: &DimVector, lambda: &Multipartition) -> bool {
    d.sub_vectors().iter().filter(|e| *e != d).all(|e| {
        (0..d.len()).any(|i| match lambda.entry(i, d.get(i) - e.get(i)) {
            Some(l) => l < n.get(i) - euler_with_vertex(q, e.as_slice(), i),
            None => false,
        })
    })
}

/// Multipartitions of length `d` indexing the Betti numbers of the Hilbert scheme.
pub fn hilb_multipartitions(q: &Quiver, d: &DimVector, n: &DimVector) -> Result<Vec<Multipartition>> {
    q.check_len(d.len(), "d")?;
    q.check_len(n.len(), "n")?;
    let budget = n_dot_d(n, d) - q.euler(d, d);
    if budget < 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut cur: Vec<Vec<i64>> = d.as_slice().iter().map(|&di| vec![0; di as usize]).collect();
    fn rec(
        q: &Quiver,
        d: &DimVector,
        n: &DimVector,
        vertex: usize,
        pos: usize,
        left: i64,
        cur: &mut Vec<Vec<i64>>,
        out: &mut Vec<Multipartition>,
    ) {
        if vertex == cur.len() {
            let m = Multipartition(cur.clone());
            if hilb_condition(q, d, n, &m) {
                out.push(m);
            }
            return;
        }
        if pos == cur[vertex].len() {
            rec(q, d, n, vertex + 1, 0, left, cur, out);
            return;
        }
        // fill from the last (smallest) entry backwards; entries before idx are at least v
        let idx = cur[vertex].len() - 1 - pos;
        let lo = if pos == 0 { 0 } else { cur[vertex][idx + 1] };
        let mut v = lo;
        while v * (idx as i64 + 1) <= left {
            cur[vertex][idx] = v;
            rec(q, d, n, vertex, pos + 1, left - v, cur, out);
            v += 1;
        }
        cur[vertex][idx] = 0;
    }
    rec(q, d, n, 0, 0, budget, &mut cur, &mut out);
    out.sort();
    Ok(out)
}

/// Poincaré polynomial `q^{n·d − ⟨d,d⟩} Σ_λ q^{−|λ|}` of the Hilbert scheme.
pub fn hilb_betti(q: &Quiver, d: &DimVector, n: &DimVector) -> Result<Poly> {
    let budget = n_dot_d(n, d) - q.euler(d, d);
    let parts = hilb_multipartitions(q, d, n)?;
    let mut coeffs = vec![0i64; budget.max(0) as usize + 1];
    for m in &parts {
        coeffs[(budget - m.weight()) as usize] += 1;
    }
    Ok(Poly::from_i64(&coeffs))
}

/// A path, as arrow indices in the order they are traversed.
pub type Path = Vec<usize>;

/// Predecessor-closed sets of paths, one per framing slot.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Forest {
    pub slots: Vec<ForestSlot>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForestSlot {
    pub vertex: usize,
    /// 1-based copy index within `n_vertex`.
    pub copy: i64,
    /// Paths from `vertex`, sorted in the forest order; empty when the tree is empty.
    pub paths: Vec<Path>,
    /// Paths outside the tree whose immediate predecessor lies in it.
    pub corona: Vec<Path>,
}

impl Forest {
    pub fn dimension_vector(&self, q: &Quiver) -> DimVector {
        let mut v = vec![0i64; q.num_vertices()];
        for s in &self.slots {
            for p in &s.paths {
                v[path_end(q, s.vertex, p)] += 1;
            }
        }
        DimVector::new(v).expect("nonnegative")
    }

    pub fn is_predecessor_closed(&self) -> bool {
        self.slots.iter().all(|s| {
            s.paths.iter().all(|p| p.is_empty() || s.paths.contains(&p[..p.len() - 1].to_vec()))
        })
    }
}

fn path_end(q: &Quiver, start: usize, p: &[usize]) -> usize {
    p.last().map_or(start, |&a| q.arrows()[a].target)
}

/// Arrow ranks under the order by (source, target, parallel index).
fn arrow_ranks(q: &Quiver) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..q.arrows().len()).collect();
    idx.sort_by_key(|&a| (q.arrows()[a].source, q.arrows()[a].target, a));
    let mut rank = vec![0; idx.len()];
    for (r, &a) in idx.iter().enumerate() {
        rank[a] = r;
    }
    rank
}

fn path_key(rank: &[usize], p: &[usize]) -> Vec<usize> {
    p.iter().map(|&a| rank[a]).collect()
}

/// Memoized forest counts for one quiver.
#[derive(Debug)]
pub struct ForestCounter {
    quiver: Quiver,
    out: Vec<Vec<usize>>,
    trees: RwLock<HashMap<(usize, DimVector), BigUint>>,
    branches: RwLock<HashMap<(usize, usize, DimVector), BigUint>>,
}

impl ForestCounter {
    pub fn new(q: &Quiver) -> Self {
        let out = (0..q.num_vertices())
            .map(|i| (0..q.arrows().len()).filter(|&a| q.arrows()[a].source == i).collect())
            .collect();
        ForestCounter { quiver: q.clone(), out, trees: RwLock::new(HashMap::new()), branches: RwLock::new(HashMap::new()) }
    }

    /// Trees (possibly empty) rooted at `i` with dimension vector `d`.
    pub fn trees(&self, i: usize, d: &DimVector) -> BigUint {
        if d.is_zero() {
            return BigUint::one();
        }
        if d.get(i) == 0 {
            return BigUint::zero();
        }
        let key = (i, d.clone());
        if let Some(v) = self.trees.read().get(&key) {
            return v.clone();
        }
        let rest = d.checked_sub(&DimVector::unit(d.len(), i)).unwrap();
        let v = self.branches(i, 0, &rest);
        self.trees.write().entry(key).or_insert(v).clone()
    }

    /// Ways to distribute `d` over subtrees hanging off out-arrows `k..` of `i`.
    fn branches(&self, i: usize, k: usize, d: &DimVector) -> BigUint {
        let arrows = &self.out[i];
        if k == arrows.len() {
            return if d.is_zero() { BigUint::one() } else { BigUint::zero() };
        }
        let key = (i, k, d.clone());
        if let Some(v) = self.branches.read().get(&key) {
            return v.clone();
        }
        let target = self.quiver.arrows()[arrows[k]].target;
        let mut acc = BigUint::zero();
        for x in d.sub_vectors() {
            let t = self.trees(target, &x);
            if t.is_zero() {
                continue;
            }
            acc += t * self.branches(i, k + 1, &d.checked_sub(&x).unwrap());
        }
        self.branches.write().entry(key).or_insert(acc).clone()
    }

    /// `n`-forests of dimension vector `d`.
    pub fn forests(&self, d: &DimVector, n: &DimVector) -> BigUint {
        let roots: Vec<usize> = (0..n.len()).flat_map(|i| std::iter::repeat_n(i, n.get(i) as usize)).collect();
        self.forests_over(&roots, d)
    }

    fn forests_over(&self, roots: &[usize], d: &DimVector) -> BigUint {
        match roots.split_first() {
            None => {
                if d.is_zero() {
                    BigUint::one()
                } else {
                    BigUint::zero()
                }
            }
            Some((&i, rest)) => {
                let mut acc = BigUint::zero();
                for x in d.sub_vectors() {
                    let t = self.trees(i, &x);
                    if !t.is_zero() {
                        acc += t * self.forests_over(rest, &d.checked_sub(&x).unwrap());
                    }
                }
                acc
            }
        }
    }
}

pub fn count_forests(q: &Quiver, d: &DimVector, n: &DimVector) -> Result<BigUint> {
    q.check_len(d.len(), "d")?;
    q.check_len(n.len(), "n")?;
    Ok(ForestCounter::new(q).forests(d, n))
}

fn enumerate_trees(q: &Quiver, out: &[Vec<usize>], i: usize, d: &DimVector) -> Vec<Vec<Path>> {
    if d.is_zero() {
        return vec![Vec::new()];
    }
    if d.get(i) == 0 {
        return Vec::new();
    }
    let rest = d.checked_sub(&DimVector::unit(d.len(), i)).unwrap();
    let mut results = Vec::new();
    fn branch(q: &Quiver, out: &[Vec<usize>], arrows: &[usize], d: &DimVector, acc: Vec<Path>, results: &mut Vec<Vec<Path>>) {
        let Some((&a, tail)) = arrows.split_first() else {
            if d.is_zero() {
                results.push(acc);
            }
            return;
        };
        let target = q.arrows()[a].target;
        for x in d.sub_vectors() {
            for sub in enumerate_trees(q, out, target, &x) {
                let mut next = acc.clone();
                next.extend(sub.into_iter().map(|p| std::iter::once(a).chain(p).collect()));
                branch(q, out, tail, &d.checked_sub(&x).unwrap(), next, results);
            }
        }
    }
    branch(q, out, &out[i], &rest, vec![Vec::new()], &mut results);
    results
}

fn corona(q: &Quiver, out: &[Vec<usize>], vertex: usize, paths: &[Path]) -> Vec<Path> {
    let mut c = Vec::new();
    for p in paths {
        for &a in &out[path_end(q, vertex, p)] {
            let mut ext = p.clone();
            ext.push(a);
            if !paths.contains(&ext) {
                c.push(ext);
            }
        }
    }
    c
}

/// Explicit list of `n`-forests of dimension `d`, refused above `max` forests.
pub fn enumerate_forests(q: &Quiver, d: &DimVector, n: &DimVector, max: u64) -> Result<Vec<Forest>> {
    let total = count_forests(q, d, n)?;
    if total > BigUint::from(max) {
        return Err(Error::SizeGuard(format!("{total} forests exceed the enumeration limit {max}")));
    }
    let out: Vec<Vec<usize>> =
        (0..q.num_vertices()).map(|i| (0..q.arrows().len()).filter(|&a| q.arrows()[a].source == i).collect()).collect();
    let rank = arrow_ranks(q);
    let sort = |paths: &mut Vec<Path>| paths.sort_by_key(|p| path_key(&rank, p));
    let slots: Vec<(usize, i64)> = (0..n.len()).flat_map(|i| (1..=n.get(i)).map(move |j| (i, j))).collect();
    let mut forests = Vec::new();
    fn rec(
        q: &Quiver,
        out: &[Vec<usize>],
        slots: &[(usize, i64)],
        d: &DimVector,
        cur: &mut Vec<ForestSlot>,
        sort: &dyn Fn(&mut Vec<Path>),
        forests: &mut Vec<Forest>,
    ) {
        let Some((&(i, j), rest)) = slots.split_first() else {
            if d.is_zero() {
                forests.push(Forest { slots: cur.clone() });
            }
            return;
        };
        for x in d.sub_vectors() {
            for mut paths in enumerate_trees(q, out, i, &x) {
                sort(&mut paths);
                let mut c = corona(q, out, i, &paths);
                sort(&mut c);
                cur.push(ForestSlot { vertex: i, copy: j, paths, corona: c });
                rec(q, out, rest, &d.checked_sub(&x).unwrap(), cur, sort, forests);
                cur.pop();
            }
        }
    }
    rec(q, &out, &slots, d, &mut Vec::new(), &sort, &mut forests);
    Ok(forests)
}

/// `F_n = Π F_i^{n_i}` with `F_i = 1 + t_i Π_{α:i→j} F_j`, truncated at total dimension `truncation`.
pub fn forest_genfun(q: &Quiver, n: &DimVector, truncation: i64) -> Result<TwistedSeries> {
    q.check_len(n.len(), "n")?;
    if truncation < 0 {
        return Err(Error::invalid("truncation must be nonnegative"));
    }
    let shape = SeriesShape::new(q, truncation);
    let k = q.num_vertices();
    let monomial = |i: usize| {
        let mut s = TwistedSeries::zero(&shape);
        if truncation >= 1 {
            s.set(DimVector::unit(k, i), RatFunc::one()).expect("admissible");
        }
        s
    };
    let mut f: Vec<TwistedSeries> = vec![TwistedSeries::one(&shape); k];
    for _ in 0..=truncation {
        let mut next = Vec::with_capacity(k);
        for i in 0..k {
            let mut prod = monomial(i);
            for a in q.arrows().iter().filter(|a| a.source == i) {
                prod = prod.mul(&f[a.target])?;
            }
            next.push(TwistedSeries::one(&shape).add(&prod)?);
        }
        if next == f {
            break;
        }
        f = next;
    }
    let mut out = TwistedSeries::one(&shape);
    for i in 0..k {
        for _ in 0..n.get(i) {
            out = out.mul(&f[i])?;
        }
    }
    Ok(out)
}

/// Poincaré polynomial of the smooth model, from the slope-class series of `P_e`.
pub fn smooth_model_poincare(q: &Quiver, theta: &Stability, d: &DimVector, n: &DimVector) -> Result<Poly> {
    q.check_len(d.len(), "d")?;
    q.check_len(n.len(), "n")?;
    if d.is_zero() {
        return Err(Error::invalid("d: must be non-zero"));
    }
    if n.is_zero() {
        return Err(Error::invalid("n: framing must be non-zero"));
    }
    let kernel = HnKernel::new(q, theta)?;
    let shape = SeriesShape::new(q, d.total()).with_bound(d.clone()).with_slope(theta.clone(), theta.mu(d));
    let mut plain = TwistedSeries::one(&shape);
    let mut framed = TwistedSeries::one(&shape);
    for e in shape.keys() {
        if e.is_zero() {
            continue;
        }
        let p = kernel.p(&e, HnMethod::Recursive)?;
        framed.set(e.clone(), p.mul_q_pow(n_dot_d(n, &e)))?;
        plain.set(e, p)?;
    }
    let result = plain.inverse(Product::Twisted)?.twisted_mul(&framed)?;
    as_integer_polynomial(&result.get(d), &format!("smooth model at {d}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hn::betti_coprime;
    use crate::quiver::theta_coprime;

    fn dv(v: &[i64]) -> DimVector {
        DimVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn framed_construction() {
        let l1 = Quiver::loop_quiver(1).unwrap();
        let f = build_framed(&l1, &dv(&[1]), &Stability::zero(1), &dv(&[1])).unwrap();
        assert_eq!(f.extended.num_vertices(), 2);
        assert_eq!(f.extended.arrows().len(), 2);
        assert_eq!(f.extended_d, dv(&[1, 1]));
        let k1 = Quiver::kronecker(1).unwrap();
        let f = build_framed(&k1, &dv(&[1, 1]), &Stability::new(vec![1, 0]), &dv(&[1, 0])).unwrap();
        assert_eq!(f.extended_d, dv(&[1, 1, 1]));
        assert!(theta_coprime(&f.extended, &f.extended_theta, &f.extended_d).unwrap());
        assert!(build_framed(&k1, &dv(&[1, 1]), &Stability::zero(2), &dv(&[0, 0])).is_err());
    }

    #[test]
    fn hilbert_nonempty_examples() {
        let l1 = Quiver::loop_quiver(1).unwrap();
        assert!(hilb_nonempty(&l1, &dv(&[3]), &dv(&[1])).unwrap());
        let k1 = Quiver::kronecker(1).unwrap();
        assert!(!hilb_nonempty(&k1, &dv(&[0, 1]), &dv(&[1, 0])).unwrap());
        assert!(hilb_nonempty(&k1, &dv(&[1, 1]), &dv(&[1, 0])).unwrap());
    }

    #[test]
    fn hilbert_betti_examples() {
        let l2 = Quiver::loop_quiver(2).unwrap();
        assert_eq!(hilb_betti(&l2, &dv(&[2]), &dv(&[1])).unwrap(), Poly::from_i64(&[0, 0, 0, 0, 0, 1, 1]));
        for m in 1..4usize {
            let q = Quiver::loop_quiver(m).unwrap();
            assert_eq!(hilb_betti(&q, &dv(&[1]), &dv(&[1])).unwrap(), Poly::q_pow(m));
            assert!(hilb_betti(&q, &dv(&[0]), &dv(&[1])).unwrap().is_one());
        }
    }

    #[test]
    fn forest_counts() {
        let l2 = Quiver::loop_quiver(2).unwrap();
        let catalan = [1u32, 1, 2, 5, 14, 42];
        for (k, &c) in catalan.iter().enumerate() {
            assert_eq!(count_forests(&l2, &dv(&[k as i64]), &dv(&[1])).unwrap(), BigUint::from(c));
        }
        let g = forest_genfun(&l2, &dv(&[1]), 4).unwrap();
        for k in 0..5 {
            assert_eq!(g.get(&dv(&[k])), RatFunc::from_int(catalan[k as usize] as i64));
        }
        let k1 = Quiver::kronecker(1).unwrap();
        let g = forest_genfun(&k1, &dv(&[1, 0]), 4).unwrap();
        let support: Vec<_> = g.iter().map(|(d, _)| d.clone()).collect();
        assert_eq!(support, vec![dv(&[0, 0]), dv(&[1, 0]), dv(&[1, 1])]);
    }

    #[test]
    fn forest_enumeration() {
        let l2 = Quiver::loop_quiver(2).unwrap();
        let fs = enumerate_forests(&l2, &dv(&[3]), &dv(&[1]), 100).unwrap();
        assert_eq!(fs.len(), 5);
        for f in &fs {
            assert!(f.is_predecessor_closed());
            assert_eq!(f.dimension_vector(&l2), dv(&[3]));
            assert_eq!(f.slots[0].corona.len(), 4);
        }
        assert!(matches!(enumerate_forests(&l2, &dv(&[6]), &dv(&[1]), 100), Err(Error::SizeGuard(_))));
        assert_eq!(enumerate_forests(&l2, &dv(&[0]), &dv(&[1]), 1).unwrap().len(), 1);
    }

    #[test]
    fn smooth_model_examples() {
        let k1 = Quiver::kronecker(1).unwrap();
        let p = smooth_model_poincare(&k1, &Stability::new(vec![1, 0]), &dv(&[1, 1]), &dv(&[1, 0])).unwrap();
        assert!(p.is_one());
        let l2 = Quiver::loop_quiver(2).unwrap();
        for k in 1..4 {
            let d = dv(&[k]);
            assert_eq!(
                smooth_model_poincare(&l2, &Stability::zero(1), &d, &dv(&[1])).unwrap(),
                hilb_betti(&l2, &d, &dv(&[1])).unwrap()
            );
        }
    }

    #[test]
    fn smooth_model_is_framed_betti() {
        let k2 = Quiver::kronecker(2).unwrap();
        let th = Stability::new(vec![1, 0]);
        for (d, n) in [(dv(&[1, 1]), dv(&[1, 0])), (dv(&[2, 2]), dv(&[0, 1])), (dv(&[1, 2]), dv(&[1, 1]))] {
            let smooth = smooth_model_poincare(&k2, &th, &d, &n).unwrap();
            for extra in [0, 7] {
                let scale = default_scale(&th, &d) + extra;
                let f = build_framed_with_scale(&k2, &d, &th, &n, scale).unwrap();
                assert_eq!(betti_coprime(&f.extended, &f.extended_theta, &f.extended_d).unwrap(), smooth, "{d} {n}");
            }
        }
    }
}
