//! Quivers, dimension vectors, stabilities and the Euler form.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact slope value `Θ(d) / dim d`.
pub type Slope = Ratio<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
}

/// A finite directed multigraph with ordered vertices and arrows.
///
/// Parallel arrows and loops are allowed. All per-vertex data in the crate is
/// aligned to the declared vertex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

/// The three families of example quivers used throughout.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StandardQuiver {
    /// `L_m`: one vertex with `m` loops.
    Loop(usize),
    /// `K_m`: vertices `i -> j` with `m` parallel arrows.
    Kronecker(usize),
    /// `S_m`: `m` sources with one arrow each into a common sink.
    Subspace(usize),
}

impl FromStr for StandardQuiver {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, m) = s
            .split_once(':')
            .ok_or_else(|| Error::invalid(format!("quiver: expected kind:m, got {s:?}")))?;
        let m: usize = m
            .trim()
            .parse()
            .map_err(|_| Error::invalid(format!("quiver: bad arrow count in {s:?}")))?;
        match kind.trim() {
            "loop" => Ok(StandardQuiver::Loop(m)),
            "kronecker" => Ok(StandardQuiver::Kronecker(m)),
            "subspace" => Ok(StandardQuiver::Subspace(m)),
            other => Err(Error::invalid(format!("quiver: unknown builtin kind {other:?}"))),
        }
    }
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Self> {
        for (k, v) in vertices.iter().enumerate() {
            if vertices[..k].contains(v) {
                return Err(Error::invalid(format!("quiver: duplicate vertex {v:?}")));
            }
        }
        for a in &arrows {
            if a.source >= vertices.len() || a.target >= vertices.len() {
                return Err(Error::invalid("quiver: arrow endpoint is not a declared vertex"));
            }
        }
        Ok(Quiver { vertices, arrows })
    }

    /// Builds a quiver from vertex names and `(from, to)` name pairs.
    pub fn from_names(vertices: &[&str], arrows: &[(&str, &str)]) -> Result<Self> {
        let vs: Vec<String> = vertices.iter().map(|s| s.to_string()).collect();
        let find = |name: &str| {
            vs.iter()
                .position(|v| v == name)
                .ok_or_else(|| Error::invalid(format!("quiver: unknown vertex {name:?}")))
        };
        let mut arr = Vec::with_capacity(arrows.len());
        for (s, t) in arrows {
            arr.push(Arrow { source: find(s)?, target: find(t)? });
        }
        Quiver::new(vs, arr)
    }

    pub fn standard(kind: StandardQuiver) -> Result<Self> {
        match kind {
            StandardQuiver::Loop(m) if m >= 1 => {
                Quiver::new(vec!["i".into()], vec![Arrow { source: 0, target: 0 }; m])
            }
            StandardQuiver::Kronecker(m) if m >= 1 => Quiver::new(
                vec!["i".into(), "j".into()],
                vec![Arrow { source: 0, target: 1 }; m],
            ),
            StandardQuiver::Subspace(m) if m >= 1 => {
                let mut vs: Vec<String> = (1..=m).map(|k| format!("i{k}")).collect();
                vs.push("j".into());
                let arrows = (0..m).map(|k| Arrow { source: k, target: m }).collect();
                Quiver::new(vs, arrows)
            }
            _ => Err(Error::invalid("quiver: arrow count m must be at least 1")),
        }
    }

    pub fn loop_quiver(m: usize) -> Result<Self> {
        Quiver::standard(StandardQuiver::Loop(m))
    }

    pub fn kronecker(m: usize) -> Result<Self> {
        Quiver::standard(StandardQuiver::Kronecker(m))
    }

    pub fn subspace(m: usize) -> Result<Self> {
        Quiver::standard(StandardQuiver::Subspace(m))
    }

    /// Oriented cycle `v0 -> v1 -> ... -> v{n-1} -> v0`.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("quiver: cycle length must be positive"));
        }
        let vs = (0..n).map(|k| format!("v{k}")).collect();
        let arrows = (0..n).map(|k| Arrow { source: k, target: (k + 1) % n }).collect();
        Quiver::new(vs, arrows)
    }

    /// Equioriented `A_n`: `v0 -> v1 -> ... -> v{n-1}`.
    pub fn linear(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("quiver: A_n needs n >= 1"));
        }
        let vs = (0..n).map(|k| format!("v{k}")).collect();
        let arrows = (1..n).map(|k| Arrow { source: k - 1, target: k }).collect();
        Quiver::new(vs, arrows)
    }

    /// A quiver with `n` vertices and no arrows.
    pub fn discrete(n: usize) -> Result<Self> {
        Quiver::new((0..n).map(|k| format!("v{k}")).collect(), vec![])
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn has_loop_at(&self, i: usize) -> bool {
        self.arrows.iter().any(|a| a.source == i && a.target == i)
    }

    /// Number of arrows `i -> j`.
    pub fn arrow_count(&self, i: usize, j: usize) -> usize {
        self.arrows.iter().filter(|a| a.source == i && a.target == j).count()
    }

    pub fn has_oriented_cycle(&self) -> bool {
        // Kahn's algorithm; loops count as cycles.
        let n = self.num_vertices();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut stack: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for a in self.arrows.iter().filter(|a| a.source == v) {
                indeg[a.target] -= 1;
                if indeg[a.target] == 0 {
                    stack.push(a.target);
                }
            }
        }
        seen < n
    }

    /// Checks that per-vertex data has the right length.
    pub fn check_len(&self, len: usize, what: &str) -> Result<()> {
        if len != self.num_vertices() {
            return Err(Error::invalid(format!(
                "{what}: expected {} entries, got {len}",
                self.num_vertices()
            )));
        }
        Ok(())
    }

    /// `⟨d,e⟩ = Σ d_i e_i − Σ_{α:i→j} d_i e_j` on arbitrary integer vectors.
    pub fn euler_form_z(&self, d: &[i64], e: &[i64]) -> i64 {
        let diag: i64 = d.iter().zip(e).map(|(a, b)| a * b).sum();
        let off: i64 = self.arrows.iter().map(|a| d[a.source] * e[a.target]).sum();
        diag - off
    }

    /// Symmetrized Euler form `(d,e) = ⟨d,e⟩ + ⟨e,d⟩`.
    pub fn symmetric_form_z(&self, d: &[i64], e: &[i64]) -> i64 {
        self.euler_form_z(d, e) + self.euler_form_z(e, d)
    }

    pub fn euler_form(&self, d: &DimVector, e: &DimVector) -> Result<i64> {
        self.check_len(d.len(), "dimension vector")?;
        self.check_len(e.len(), "dimension vector")?;
        Ok(self.euler_form_z(d.as_slice(), e.as_slice()))
    }

    /// Unchecked variant for internal hot loops where lengths are known to match.
    pub(crate) fn euler(&self, d: &DimVector, e: &DimVector) -> i64 {
        self.euler_form_z(d.as_slice(), e.as_slice())
    }

    /// `1 − ⟨d,d⟩`, the dimension of the moduli space when it is non-empty.
    pub fn moduli_dimension(&self, d: &DimVector) -> Result<i64> {
        Ok(1 - self.euler_form(d, d)?)
    }

    /// Parses a dimension-like vector from a name → value map. Missing vertices are 0.
    pub fn vector_from_map(&self, map: &BTreeMap<String, i64>, what: &str) -> Result<Vec<i64>> {
        let mut v = vec![0; self.num_vertices()];
        for (name, val) in map {
            let i = self
                .vertex_index(name)
                .ok_or_else(|| Error::invalid(format!("{what}: unknown vertex {name:?}")))?;
            v[i] = *val;
        }
        Ok(v)
    }

    pub fn vector_to_map(&self, v: &[i64]) -> BTreeMap<String, i64> {
        self.vertices.iter().cloned().zip(v.iter().copied()).collect()
    }

    /// Stable content hash input: the JSON form with fixed key order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(QuiverJson::from(self)).expect("quiver serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let raw: QuiverJson = serde_json::from_value(value.clone())
            .map_err(|e| Error::invalid(format!("quiver JSON: {e}")))?;
        raw.try_into()
    }
}

#[derive(Serialize, Deserialize)]
struct ArrowJson {
    from: String,
    to: String,
}

#[derive(Serialize, Deserialize)]
struct QuiverJson {
    vertices: Vec<String>,
    arrows: Vec<ArrowJson>,
}

impl From<&Quiver> for QuiverJson {
    fn from(q: &Quiver) -> Self {
        QuiverJson {
            vertices: q.vertices.clone(),
            arrows: q
                .arrows
                .iter()
                .map(|a| ArrowJson {
                    from: q.vertices[a.source].clone(),
                    to: q.vertices[a.target].clone(),
                })
                .collect(),
        }
    }
}

impl TryFrom<QuiverJson> for Quiver {
    type Error = Error;

    fn try_from(raw: QuiverJson) -> Result<Self> {
        let vs: Vec<&str> = raw.vertices.iter().map(String::as_str).collect();
        let arrows: Vec<(&str, &str)> =
            raw.arrows.iter().map(|a| (a.from.as_str(), a.to.as_str())).collect();
        Quiver::from_names(&vs, &arrows)
    }
}

impl Serialize for Quiver {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        QuiverJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Quiver {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = QuiverJson::deserialize(d)?;
        Quiver::try_from(raw).map_err(serde::de::Error::custom)
    }
}

/// A vertex function with nonnegative integer entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DimVector(Vec<i64>);

impl DimVector {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.iter().any(|&x| x < 0) {
            return Err(Error::invalid("dimension vector: entries must be nonnegative"));
        }
        Ok(DimVector(entries))
    }

    pub fn zero(n: usize) -> Self {
        DimVector(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        DimVector(v)
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> i64 {
        self.0[i]
    }

    /// Total dimension `Σ d_i`.
    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.0[i] != 0).collect()
    }

    /// Index of the single non-zero entry if this is a coordinate vector.
    pub fn coordinate_index(&self) -> Option<usize> {
        let supp = self.support();
        (supp.len() == 1 && self.0[supp[0]] == 1).then(|| supp[0])
    }

    /// Componentwise `self ≤ other`.
    pub fn le(&self, other: &DimVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &DimVector) -> DimVector {
        DimVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn checked_sub(&self, other: &DimVector) -> Option<DimVector> {
        other.le(self).then(|| DimVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn scale(&self, k: i64) -> DimVector {
        DimVector(self.0.iter().map(|a| a * k).collect())
    }

    /// All `e` with `0 ≤ e ≤ self`, including both ends, in lexicographic order.
    pub fn sub_vectors(&self) -> Vec<DimVector> {
        let mut out = vec![DimVector::zero(self.len())];
        for i in 0..self.len() {
            let mut next = Vec::with_capacity(out.len() * (self.0[i] as usize + 1));
            for v in &out {
                for x in 0..=self.0[i] {
                    let mut w = v.0.clone();
                    w[i] = x;
                    next.push(DimVector(w));
                }
            }
            out = next;
        }
        out
    }

    /// Number of vectors in the box below `self`.
    pub fn box_size(&self) -> u128 {
        self.0.iter().map(|&x| x as u128 + 1).product()
    }

    /// All non-zero dimension vectors of total dimension at most `n`, for `k` vertices.
    pub fn all_up_to(k: usize, n: i64) -> Vec<DimVector> {
        let mut out = Vec::new();
        let mut cur = vec![0i64; k];
        fn rec(i: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<DimVector>) {
            if i == cur.len() {
                if cur.iter().any(|&x| x != 0) {
                    out.push(DimVector(cur.clone()));
                }
                return;
            }
            for x in 0..=left {
                cur[i] = x;
                rec(i + 1, left - x, cur, out);
            }
            cur[i] = 0;
        }
        rec(0, n, &mut cur, &mut out);
        out.sort_by_key(|d| d.total());
        out
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A linear functional `Θ: ZI → Z`, stored by its values on the vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Stability(Vec<i64>);

impl Stability {
    pub fn new(values: Vec<i64>) -> Self {
        Stability(values)
    }

    pub fn zero(n: usize) -> Self {
        Stability(vec![0; n])
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn value(&self, d: &DimVector) -> i64 {
        self.value_z(d.as_slice())
    }

    pub fn value_z(&self, d: &[i64]) -> i64 {
        self.0.iter().zip(d).map(|(a, b)| a * b).sum()
    }

    /// `μ(d) = Θ(d) / dim d`; undefined for `d = 0`.
    pub fn slope(&self, d: &DimVector) -> Result<Slope> {
        if d.len() != self.len() {
            return Err(Error::invalid("slope: stability and dimension vector lengths differ"));
        }
        let total = d.total();
        if total == 0 {
            return Err(Error::invalid("slope: undefined for the zero dimension vector"));
        }
        Ok(Ratio::new(self.value(d), total))
    }

    /// Slope of a vector already known to be non-zero.
    pub(crate) fn mu(&self, d: &DimVector) -> Slope {
        Ratio::new(self.value(d), d.total())
    }

    /// `c·Θ`.
    pub fn scaled(&self, c: i64) -> Stability {
        Stability(self.0.iter().map(|x| x * c).collect())
    }

    /// `Θ + c·dim`.
    pub fn shifted(&self, c: i64) -> Stability {
        Stability(self.0.iter().map(|x| x + c).collect())
    }

    /// The equivalent stability `dim(d)·Θ − Θ(d)·dim`, which vanishes on `d`.
    pub fn normalized_for(&self, d: &DimVector) -> Stability {
        let total = d.total();
        let value = self.value(d);
        Stability(self.0.iter().map(|x| total * x - value).collect())
    }

    pub fn is_trivial(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

/// The subsemigroup `NI_μ = {d ≠ 0 : μ(d) = μ} ∪ {0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlopeClass {
    pub slope: Slope,
}

impl SlopeClass {
    pub fn new(slope: Slope) -> Self {
        SlopeClass { slope }
    }

    pub fn of(theta: &Stability, d: &DimVector) -> Result<Self> {
        Ok(SlopeClass { slope: theta.slope(d)? })
    }

    pub fn contains(&self, theta: &Stability, d: &DimVector) -> bool {
        d.is_zero() || theta.mu(d) == self.slope
    }
}

/// Whether no `0 ≠ e < d` has the slope of `d`. Checked by scanning the whole box below `d`.
pub fn theta_coprime(q: &Quiver, theta: &Stability, d: &DimVector) -> Result<bool> {
    q.check_len(d.len(), "dimension vector")?;
    q.check_len(theta.len(), "stability")?;
    let mu = theta.slope(d)?;
    Ok(d
        .sub_vectors()
        .iter()
        .filter(|e| !e.is_zero() && *e != d)
        .all(|e| theta.mu(e) != mu))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dv(v: &[i64]) -> DimVector {
        DimVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn standard_quivers() {
        let l1 = Quiver::loop_quiver(1).unwrap();
        assert_eq!((l1.num_vertices(), l1.arrows().len()), (1, 1));
        let k3 = Quiver::kronecker(3).unwrap();
        assert_eq!(k3.num_vertices(), 2);
        assert_eq!(k3.arrow_count(0, 1), 3);
        let s4 = Quiver::subspace(4).unwrap();
        assert_eq!(s4.num_vertices(), 5);
        assert!(s4.arrows().iter().all(|a| a.target == 4));
        assert!(Quiver::kronecker(0).is_err());
        assert_eq!("kronecker:3".parse::<StandardQuiver>().unwrap(), StandardQuiver::Kronecker(3));
        assert!("torus:2".parse::<StandardQuiver>().is_err());
    }

    #[test]
    fn invalid_quivers_rejected() {
        assert!(Quiver::from_names(&["a", "a"], &[]).is_err());
        assert!(Quiver::from_names(&["a"], &[("a", "b")]).is_err());
        assert!(DimVector::new(vec![1, -1]).is_err());
    }

    #[test]
    fn euler_form_values() {
        let k3 = Quiver::kronecker(3).unwrap();
        assert_eq!(k3.euler_form(&dv(&[2, 3]), &dv(&[2, 3])).unwrap(), -5);
        let k1 = Quiver::kronecker(1).unwrap();
        assert_eq!(k1.euler_form(&dv(&[1, 0]), &dv(&[0, 1])).unwrap(), -1);
        for m in 1..5 {
            let l = Quiver::loop_quiver(m).unwrap();
            for n in 0..5 {
                assert_eq!(l.euler_form(&dv(&[n]), &dv(&[n])).unwrap(), n * n * (1 - m as i64));
            }
        }
        for n in 1..6 {
            assert_eq!(k3.moduli_dimension(&dv(&[n, n])).unwrap(), n * n + 1);
        }
        assert!(k3.euler_form(&dv(&[1]), &dv(&[1, 1])).is_err());
    }

    #[test]
    fn slopes() {
        let th = Stability::new(vec![1, 0]);
        assert_eq!(th.slope(&dv(&[2, 3])).unwrap(), Ratio::new(2, 5));
        let th = Stability::new(vec![0, 0, 0, 0, -1]);
        assert_eq!(th.slope(&dv(&[1, 1, 1, 1, 2])).unwrap(), Ratio::new(-1, 3));
        assert_eq!(Stability::zero(3).slope(&dv(&[1, 4, 2])).unwrap(), Ratio::from_integer(0));
        assert!(Stability::zero(2).slope(&dv(&[0, 0])).is_err());
    }

    #[test]
    fn coprimality() {
        let k = Quiver::kronecker(3).unwrap();
        let th = Stability::new(vec![1, 0]);
        assert!(theta_coprime(&k, &th, &dv(&[2, 3])).unwrap());
        assert!(!theta_coprime(&k, &th, &dv(&[2, 2])).unwrap());
        let s4 = Quiver::subspace(4).unwrap();
        let th = Stability::new(vec![0, 0, 0, 0, -1]);
        assert!(!theta_coprime(&s4, &th, &dv(&[1, 1, 1, 1, 2])).unwrap());
        assert_eq!(th.slope(&dv(&[1, 1, 0, 0, 1])).unwrap(), Ratio::new(-1, 3));
    }

    #[test]
    fn moduli_dimension_values() {
        let k3 = Quiver::kronecker(3).unwrap();
        assert_eq!(k3.moduli_dimension(&dv(&[2, 3])).unwrap(), 6);
        let l1 = Quiver::loop_quiver(1).unwrap();
        assert_eq!(l1.moduli_dimension(&dv(&[1])).unwrap(), 1);
    }

    #[test]
    fn json_round_trip() {
        let q = Quiver::subspace(3).unwrap();
        let back = Quiver::from_json(&q.to_json()).unwrap();
        assert_eq!(q, back);
        let raw = serde_json::json!({"vertices": ["i", "j"], "arrows": [{"from": "i", "to": "k"}]});
        assert!(Quiver::from_json(&raw).is_err());
    }

    #[test]
    fn oriented_cycles() {
        assert!(Quiver::loop_quiver(1).unwrap().has_oriented_cycle());
        assert!(Quiver::cyclic(3).unwrap().has_oriented_cycle());
        assert!(!Quiver::kronecker(2).unwrap().has_oriented_cycle());
        assert!(!Quiver::subspace(4).unwrap().has_oriented_cycle());
    }

    #[test]
    fn box_enumeration() {
        let d = dv(&[2, 1]);
        let subs = d.sub_vectors();
        assert_eq!(subs.len(), 6);
        assert_eq!(subs.len() as u128, d.box_size());
        assert!(subs.iter().all(|e| e.le(&d)));
        assert_eq!(DimVector::all_up_to(2, 2).len(), 5);
    }
}
