//! Brute-force ground truth over `F_2`, `F_3`, `F_5`.
//!
//! Representations are enumerated point by point, subrepresentations as
//! tuples of invariant subspaces, and stability and Harder–Narasimhan types
//! are decided by exhaustive slope comparison. The resulting point counts
//! certify the closed formulas at small size.

pub mod linalg;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num::{BigInt, BigRational, One, Zero};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rayon::prelude::*;
use serde::Serialize;

use crate::counting::Cycle;
use crate::error::{Error, Result};
use crate::exactq::serialize_display;
use crate::hn::{HnDecomposition, HnKernel, HnMethod};
use crate::quiver::{theta_coprime, DimVector, Quiver, Slope, Stability};

use linalg::{all_subspaces, check_field, decode, gl_order, rref_in_place, Matrix, Subspace};

/// Default limit on the number of representation points enumerated.
pub const DEFAULT_BUDGET: u64 = 1 << 22;

/// A representation over `F_p`: one `d_target × d_source` matrix per arrow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FqRep {
    pub p: u32,
    pub d: DimVector,
    pub mats: Vec<Matrix>,
}

impl FqRep {
    pub fn new(q: &Quiver, p: u32, d: DimVector, mats: Vec<Matrix>) -> Result<Self> {
        check_field(p)?;
        q.check_len(d.len(), "dimension vector")?;
        if mats.len() != q.arrows().len() {
            return Err(Error::invalid(format!("representation: {} matrices for {} arrows", mats.len(), q.arrows().len())));
        }
        for (a, m) in q.arrows().iter().zip(&mats) {
            if m.rows != d.get(a.target) as usize || m.cols != d.get(a.source) as usize || m.data.iter().any(|&x| x >= p) {
                return Err(Error::invalid("representation: matrix shape or entries do not match"));
            }
        }
        Ok(FqRep { p, d, mats })
    }

    pub fn zero(q: &Quiver, p: u32, d: &DimVector) -> Self {
        let mats = q.arrows().iter().map(|a| Matrix::zero(d.get(a.target) as usize, d.get(a.source) as usize)).collect();
        FqRep { p, d: d.clone(), mats }
    }

    pub fn direct_sum(&self, other: &FqRep) -> FqRep {
        let mats = self
            .mats
            .iter()
            .zip(&other.mats)
            .map(|(a, b)| {
                let mut m = Matrix::zero(a.rows + b.rows, a.cols + b.cols);
                for r in 0..a.rows {
                    for c in 0..a.cols {
                        m.set(r, c, a.get(r, c));
                    }
                }
                for r in 0..b.rows {
                    for c in 0..b.cols {
                        m.set(a.rows + r, a.cols + c, b.get(r, c));
                    }
                }
                m
            })
            .collect();
        FqRep { p: self.p, d: self.d.add(&other.d), mats }
    }
}

/// Number of matrix entries, i.e. `Σ_α d_source d_target`.
pub fn entry_count(q: &Quiver, d: &DimVector) -> u32 {
    q.arrows().iter().map(|a| (d.get(a.source) * d.get(a.target)) as u32).sum()
}

/// Subspace tables per vertex dimension, shared across representations.
#[derive(Debug)]
pub struct SubspaceTables {
    tables: Vec<Vec<Subspace>>,
}

impl SubspaceTables {
    pub fn new(p: u32, max_dim: usize) -> Self {
        SubspaceTables { tables: (0..=max_dim).map(|n| all_subspaces(n, p)).collect() }
    }

    fn get(&self, n: usize) -> &[Subspace] {
        &self.tables[n]
    }
}

/// A subrepresentation: one subspace index per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subrep {
    pub dims: DimVector,
    pub choice: Vec<usize>,
}

/// All subrepresentations of `m`, in enumeration order.
pub fn subreps(q: &Quiver, m: &FqRep, tables: &SubspaceTables) -> Vec<Subrep> {
    let k = q.num_vertices();
    let mut out = Vec::new();
    let mut choice = Vec::with_capacity(k);
    fn rec(q: &Quiver, m: &FqRep, tables: &SubspaceTables, choice: &mut Vec<usize>, out: &mut Vec<Subrep>) {
        let v = choice.len();
        if v == q.num_vertices() {
            let dims = (0..v).map(|i| tables.get(m.d.get(i) as usize)[choice[i]].dim as i64).collect();
            out.push(Subrep { dims: DimVector::new(dims).unwrap(), choice: choice.clone() });
            return;
        }
        let subs = tables.get(m.d.get(v) as usize);
        for (idx, _) in subs.iter().enumerate() {
            choice.push(idx);
            let ok = q.arrows().iter().zip(&m.mats).all(|(a, mat)| {
                if a.source.max(a.target) != v {
                    return true;
                }
                let src = &tables.get(m.d.get(a.source) as usize)[choice[a.source]];
                let tgt = &tables.get(m.d.get(a.target) as usize)[choice[a.target]];
                src.basis.iter().all(|b| tgt.contains(&mat.apply(b, m.p), m.p))
            });
            if ok {
                rec(q, m, tables, choice, out);
            }
            choice.pop();
        }
    }
    rec(q, m, tables, &mut choice, &mut out);
    out
}

fn contains(m: &FqRep, tables: &SubspaceTables, big: &Subrep, small: &Subrep) -> bool {
    (0..big.choice.len()).all(|i| {
        let t = tables.get(m.d.get(i) as usize);
        t[big.choice[i]].contains_subspace(&t[small.choice[i]], m.p)
    })
}

/// Dimension vectors of subrepresentations of `m` (including 0 and `d`), with one witness each.
pub fn subrep_dimvectors(q: &Quiver, m: &FqRep, budget: u64) -> Result<BTreeMap<DimVector, Vec<Vec<Vec<u32>>>>> {
    guard_subspaces(m, budget)?;
    let tables = SubspaceTables::new(m.p, m.d.as_slice().iter().copied().max().unwrap_or(0) as usize);
    let mut out = BTreeMap::new();
    for s in subreps(q, m, &tables) {
        out.entry(s.dims.clone()).or_insert_with(|| {
            (0..s.choice.len()).map(|i| tables.get(m.d.get(i) as usize)[s.choice[i]].basis.clone()).collect()
        });
    }
    Ok(out)
}

fn guard_subspaces(m: &FqRep, budget: u64) -> Result<()> {
    let size: f64 = m.d.as_slice().iter().map(|&n| (m.p as f64).powi((n * n / 4 + n + 1) as i32)).product();
    if m.d.as_slice().iter().any(|&n| n > 6) || size > budget as f64 {
        return Err(Error::SizeGuard(format!("subspace tuples for {} over F_{} exceed the budget", m.d, m.p)));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StabilityStatus {
    Stable,
    StrictlySemistable,
    Unstable,
}

fn status_of(theta: &Stability, d: &DimVector, subs: &[Subrep]) -> StabilityStatus {
    let mu = theta.mu(d);
    let mut stable = true;
    for s in subs {
        if s.dims.is_zero() || s.dims == *d {
            continue;
        }
        let m = theta.mu(&s.dims);
        if m > mu {
            return StabilityStatus::Unstable;
        }
        if m == mu {
            stable = false;
        }
    }
    if stable {
        StabilityStatus::Stable
    } else {
        StabilityStatus::StrictlySemistable
    }
}

pub fn stability_status(q: &Quiver, m: &FqRep, theta: &Stability) -> Result<StabilityStatus> {
    q.check_len(theta.len(), "stability")?;
    guard_subspaces(m, DEFAULT_BUDGET)?;
    if m.d.is_zero() {
        return Err(Error::invalid("stability: zero representation"));
    }
    let tables = SubspaceTables::new(m.p, m.d.as_slice().iter().copied().max().unwrap_or(0) as usize);
    Ok(status_of(theta, &m.d, &subreps(q, m, &tables)))
}

/// The HN chain `0 = D_0 < D_1 < … < D_s = d` of dimension vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HnFiltration {
    pub chain: Vec<DimVector>,
    /// Whether every step had a unique candidate of maximal slope and dimension.
    pub unique: bool,
}

impl HnFiltration {
    pub fn hn_type(&self) -> HnDecomposition {
        HnDecomposition(self.chain.windows(2).map(|w| w[1].checked_sub(&w[0]).unwrap()).collect())
    }

    pub fn slopes_decrease(&self, theta: &Stability) -> bool {
        self.hn_type().is_slope_decreasing(theta)
    }
}

/// HN filtration from the subrepresentation list, scanning candidates in `order`.
fn filtration_from(m: &FqRep, theta: &Stability, subs: &[Subrep], order: &[usize], tables: &SubspaceTables) -> HnFiltration {
    let zero = subs.iter().position(|s| s.dims.is_zero()).expect("zero subrep");
    let mut prev = zero;
    let mut chain = vec![subs[zero].dims.clone()];
    let mut unique = true;
    while subs[prev].dims != m.d {
        let base = &subs[prev];
        let mut best: Option<(Slope, i64, usize)> = None;
        let mut ties = 0;
        for &idx in order {
            let s = &subs[idx];
            if idx == prev || s.dims == base.dims || !contains(m, tables, s, base) {
                continue;
            }
            let key = (theta.mu(&s.dims.checked_sub(&base.dims).unwrap()), s.dims.total());
            match &best {
                Some((bm, bt, _)) if (bm, bt) > (&key.0, &key.1) => {}
                Some((bm, bt, _)) if (bm, bt) == (&key.0, &key.1) => ties += 1,
                _ => {
                    best = Some((key.0, key.1, idx));
                    ties = 0;
                }
            }
        }
        let (_, _, idx) = best.expect("d itself is a candidate");
        unique &= ties == 0;
        prev = idx;
        chain.push(subs[idx].dims.clone());
    }
    HnFiltration { chain, unique }
}

pub fn hn_filtration(q: &Quiver, m: &FqRep, theta: &Stability) -> Result<HnFiltration> {
    hn_filtration_in_order(q, m, theta, None)
}

/// As [`hn_filtration`], visiting subrepresentations in a permuted order.
pub fn hn_filtration_in_order(q: &Quiver, m: &FqRep, theta: &Stability, perm_seed: Option<u64>) -> Result<HnFiltration> {
    q.check_len(theta.len(), "stability")?;
    guard_subspaces(m, DEFAULT_BUDGET)?;
    let tables = SubspaceTables::new(m.p, m.d.as_slice().iter().copied().max().unwrap_or(0) as usize);
    let subs = subreps(q, m, &tables);
    let mut order: Vec<usize> = (0..subs.len()).collect();
    if let Some(seed) = perm_seed {
        order.shuffle(&mut StdRng::seed_from_u64(seed));
    }
    Ok(filtration_from(m, theta, &subs, &order, &tables))
}

/// Decodes the `index`-th point of `R_d(F_p)`.
pub fn rep_at(q: &Quiver, p: u32, d: &DimVector, index: u64) -> FqRep {
    let mut rest = index as usize;
    let mats = q
        .arrows()
        .iter()
        .map(|a| {
            let (rows, cols) = (d.get(a.target) as usize, d.get(a.source) as usize);
            let size = (p as usize).pow((rows * cols) as u32);
            let data = decode(rest % size, rows * cols, p);
            rest /= size;
            Matrix { rows, cols, data }
        })
        .collect();
    FqRep { p, d: d.clone(), mats }
}

/// Point counts of `R_d`, `R_d^sst`, `R_d^st`, `G_d` and the census by HN type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointCounts {
    pub p: u32,
    pub d: DimVector,
    pub reps: u64,
    pub semistable: u64,
    pub stable: u64,
    #[serde(serialize_with = "serialize_display")]
    pub group_order: u128,
    #[serde(serialize_with = "census_ser")]
    pub census: BTreeMap<HnDecomposition, u64>,
    /// Every enumerated filtration had unique maximal candidates with decreasing slopes.
    pub filtrations_consistent: bool,
}

fn census_ser<S: serde::Serializer>(c: &BTreeMap<HnDecomposition, u64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    let m: BTreeMap<String, u64> = c.iter().map(|(k, v)| (type_label(k), *v)).collect();
    m.serialize(s)
}

pub fn type_label(t: &HnDecomposition) -> String {
    t.parts().iter().map(|d| d.to_string()).collect::<Vec<_>>().join("|")
}

impl PointCounts {
    pub fn census_csv(&self) -> String {
        let mut s = String::from("hn_type,count\n");
        for (t, c) in &self.census {
            let _ = writeln!(s, "\"{}\",{c}", type_label(t));
        }
        s
    }
}

#[derive(Default)]
struct Tally {
    reps: u64,
    sst: u64,
    st: u64,
    census: BTreeMap<HnDecomposition, u64>,
    consistent: bool,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.reps += other.reps;
        self.sst += other.sst;
        self.st += other.st;
        for (k, v) in other.census {
            *self.census.entry(k).or_insert(0) += v;
        }
        self.consistent &= other.consistent;
        self
    }
}

pub fn point_counts(q: &Quiver, theta: &Stability, d: &DimVector, p: u32, budget: u64) -> Result<PointCounts> {
    check_field(p)?;
    q.check_len(d.len(), "dimension vector")?;
    q.check_len(theta.len(), "stability")?;
    if d.is_zero() {
        return Err(Error::invalid("dimension vector must be non-zero"));
    }
    let entries = entry_count(q, d);
    let total = (p as f64).powi(entries as i32);
    if total > budget as f64 {
        return Err(Error::SizeGuard(format!("{p}^{entries} representation points exceed the budget {budget}")));
    }
    let total = (p as u64).pow(entries);
    let tables = SubspaceTables::new(p, d.as_slice().iter().copied().max().unwrap_or(0) as usize);
    let tally = (0..total)
        .into_par_iter()
        .fold(
            || Tally { consistent: true, ..Default::default() },
            |mut t, idx| {
                let m = rep_at(q, p, d, idx);
                let subs = subreps(q, &m, &tables);
                let order: Vec<usize> = (0..subs.len()).collect();
                let f = filtration_from(&m, theta, &subs, &order, &tables);
                t.consistent &= f.unique && f.slopes_decrease(theta);
                let ty = f.hn_type();
                t.reps += 1;
                if ty.parts().len() == 1 {
                    t.sst += 1;
                    if status_of(theta, d, &subs) == StabilityStatus::Stable {
                        t.st += 1;
                    }
                }
                *t.census.entry(ty).or_insert(0) += 1;
                t
            },
        )
        .reduce(|| Tally { consistent: true, ..Default::default() }, Tally::merge);
    let group_order = d.as_slice().iter().map(|&n| gl_order(n as usize, p)).product();
    Ok(PointCounts {
        p,
        d: d.clone(),
        reps: tally.reps,
        semistable: tally.sst,
        stable: tally.st,
        group_order,
        census: tally.census,
        filtrations_consistent: tally.consistent,
    })
}

/// `(dim Hom(M,N), dim Ext¹(M,N))` from the map `(f_i) ↦ (N_α f_s − f_t M_α)`.
pub fn hom_ext_dims(q: &Quiver, m: &FqRep, n: &FqRep) -> Result<(usize, usize)> {
    if m.p != n.p {
        return Err(Error::invalid("hom/ext: representations over different fields"));
    }
    let p = m.p;
    let k = q.num_vertices();
    let dm = |i: usize| m.d.get(i) as usize;
    let dn = |i: usize| n.d.get(i) as usize;
    // Domain coordinates: f_i entry (r, c) with r < dn(i), c < dm(i).
    let mut dom_off = vec![0; k + 1];
    for i in 0..k {
        dom_off[i + 1] = dom_off[i] + dn(i) * dm(i);
    }
    let mut cod_off = vec![0; q.arrows().len() + 1];
    for (a_idx, a) in q.arrows().iter().enumerate() {
        cod_off[a_idx + 1] = cod_off[a_idx] + dn(a.target) * dm(a.source);
    }
    let (dom, cod) = (dom_off[k], cod_off[q.arrows().len()]);
    let mut mat = Matrix::zero(cod, dom);
    for (a_idx, a) in q.arrows().iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let (na, ma) = (&n.mats[a_idx], &m.mats[a_idx]);
        for r in 0..dn(t) {
            for c in 0..dm(s) {
                let row = cod_off[a_idx] + r * dm(s) + c;
                // (N_α f_s)[r][c] = Σ_x N_α[r][x] f_s[x][c]
                for x in 0..dn(s) {
                    let col = dom_off[s] + x * dm(s) + c;
                    mat.set(row, col, (mat.get(row, col) + na.get(r, x)) % p);
                }
                // (f_t M_α)[r][c] = Σ_y f_t[r][y] M_α[y][c]
                for y in 0..dm(t) {
                    let col = dom_off[t] + r * dm(t) + y;
                    mat.set(row, col, (mat.get(row, col) + p - ma.get(y, c)) % p);
                }
            }
        }
    }
    let rank = rref_in_place(&mut mat, p).len();
    Ok((dom - rank, cod - rank))
}

/// The representation of a cycle: basis vector `b_k` at the source of the
/// `k`-th arrow, which sends it to `b_{k+1}`.
pub fn cycle_rep(q: &Quiver, cycle: &Cycle, p: u32) -> Result<FqRep> {
    check_field(p)?;
    let arrows = cycle.arrows();
    let d = cycle.dimension_vector(q);
    let mut local = vec![0usize; arrows.len()];
    let mut seen = vec![0usize; q.num_vertices()];
    for (k, &a) in arrows.iter().enumerate() {
        let v = q.arrows()[a].source;
        local[k] = seen[v];
        seen[v] += 1;
    }
    let mut rep = FqRep::zero(q, p, &d);
    for (k, &a) in arrows.iter().enumerate() {
        let next = (k + 1) % arrows.len();
        rep.mats[a].set(local[next], local[k], 1);
    }
    Ok(rep)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub d: Vec<i64>,
    pub theta: Vec<i64>,
    pub q: u32,
    pub pass: bool,
    pub checks: Vec<Check>,
}

fn rat_of(n: u128) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Certifies the counting formulas against brute-force counts at `q = p`.
///
/// Checks `P_d(p)·|G_d| = |R^sst|`; for each HN type the census count against
/// `p^{−Σ_{k<l}⟨dˡ,dᵏ⟩} Π_k (|R^sst_{dᵏ}|/|G_{dᵏ}|)·|G_d|` with the factors
/// themselves counted by brute force; the census total; and in the coprime
/// case `(p−1)|R^sst|/|G_d|` against the Betti polynomial at `p`.
pub fn verify(q: &Quiver, theta: &Stability, d: &DimVector, p: u32, budget: u64) -> Result<VerificationReport> {
    let counts = point_counts(q, theta, d, p, budget)?;
    let kernel = HnKernel::new(q, theta)?;
    let pq = BigRational::from_integer(BigInt::from(p));
    let g = rat_of(counts.group_order);
    let mut checks = Vec::new();
    let mut push = |name: String, expected: BigRational, actual: BigRational| {
        checks.push(Check { name, pass: expected == actual, expected: expected.to_string(), actual: actual.to_string() });
    };

    let pd = kernel.p(d, HnMethod::Recursive)?;
    let pd_val = pd.eval(&pq).ok_or_else(|| Error::invalid("P_d has a pole at q"))?;
    push("semistable count".into(), &pd_val * &g, rat_of(counts.semistable as u128));

    let mut part_cache: BTreeMap<DimVector, BigRational> = BTreeMap::new();
    let mut expected_total = BigRational::zero();
    for ty in crate::hn::hn_types(theta, d) {
        let mut val = &g * &pq.pow(-ty.twist_exponent(q) as i32);
        for part in ty.parts() {
            if !part_cache.contains_key(part) {
                let pc = point_counts(q, theta, part, p, budget)?;
                part_cache.insert(part.clone(), rat_of(pc.semistable as u128) / rat_of(pc.group_order));
            }
            val *= &part_cache[part];
        }
        let actual = rat_of(*counts.census.get(&ty).unwrap_or(&0) as u128);
        expected_total += &val;
        push(format!("census {}", type_label(&ty)), val, actual);
    }
    push("census total".into(), expected_total, rat_of(counts.reps as u128));
    push(
        "representation count".into(),
        pq.pow(entry_count(q, d) as i32),
        rat_of(counts.reps as u128),
    );
    if theta_coprime(q, theta, d)? {
        let b = kernel.betti_coprime(d)?;
        let lhs = (&pq - BigRational::one()) * rat_of(counts.semistable as u128) / &g;
        push("coprime betti".into(), b.eval(&pq), lhs);
    }
    checks.push(Check {
        name: "filtration uniqueness".into(),
        pass: counts.filtrations_consistent,
        expected: "unique".into(),
        actual: if counts.filtrations_consistent { "unique" } else { "ambiguous" }.into(),
    });
    let pass = checks.iter().all(|c| c.pass);
    Ok(VerificationReport { d: d.as_slice().to_vec(), theta: theta.as_slice().to_vec(), q: p, pass, checks })
}
