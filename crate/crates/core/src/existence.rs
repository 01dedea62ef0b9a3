//! Non-emptiness of moduli: generic subrepresentations, semistable and
//! stable loci, simple representations and the reduction of stable
//! non-emptiness for a prescribed polystable type to a simple-existence
//! question on an auxiliary quiver.

use std::collections::HashMap;

use parking_lot::RwLock;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::quiver::{Arrow, DimVector, Quiver, Slope, Stability};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SstMethod {
    Schofield,
    Hn,
}

impl std::str::FromStr for SstMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "schofield" => Ok(SstMethod::Schofield),
            "hn" => Ok(SstMethod::Hn),
            _ => Err(Error::invalid(format!("method: expected schofield|hn, got {s:?}"))),
        }
    }
}

/// Memoized `e ↪ d` for one quiver.
#[derive(Debug)]
pub struct GenericEmbedCache {
    quiver: Quiver,
    memo: RwLock<HashMap<(DimVector, DimVector), bool>>,
}

impl GenericEmbedCache {
    pub fn new(quiver: &Quiver) -> Self {
        GenericEmbedCache { quiver: quiver.clone(), memo: RwLock::new(HashMap::new()) }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    /// Whether a generic representation of dimension `d` has a subrepresentation of dimension `e`.
    pub fn embeds(&self, e: &DimVector, d: &DimVector) -> Result<bool> {
        self.quiver.check_len(e.len(), "e")?;
        self.quiver.check_len(d.len(), "d")?;
        if !e.le(d) {
            return Err(Error::invalid(format!("generic subrepresentation: {e} is not below {d}")));
        }
        Ok(self.embeds_unchecked(e, d))
    }

    fn embeds_unchecked(&self, e: &DimVector, d: &DimVector) -> bool {
        if e.is_zero() || e == d {
            return true;
        }
        let key = (e.clone(), d.clone());
        if let Some(&v) = self.memo.read().get(&key) {
            return v;
        }
        let rest = d.checked_sub(e).unwrap();
        let mut subs = e.sub_vectors();
        subs.sort_by_key(|x| x.total());
        let v = subs
            .iter()
            .filter(|x| !x.is_zero())
            .all(|x| self.quiver.euler(x, &rest) >= 0 || !self.embeds_unchecked(x, e));
        *self.memo.write().entry(key).or_insert(v)
    }

    /// Dimension vectors of generic subrepresentations of `d`, including `0` and `d`.
    pub fn generic_subdimensions(&self, d: &DimVector) -> Vec<DimVector> {
        d.sub_vectors().into_iter().filter(|e| self.embeds_unchecked(e, d)).collect()
    }
}

pub fn generic_subrep(q: &Quiver, e: &DimVector, d: &DimVector) -> Result<bool> {
    GenericEmbedCache::new(q).embeds(e, d)
}

/// Existence decisions for a fixed quiver and stability, sharing caches.
#[derive(Debug)]
pub struct ExistenceOracle {
    embed: GenericEmbedCache,
    theta: Stability,
    hn_memo: RwLock<HashMap<DimVector, bool>>,
}

impl ExistenceOracle {
    pub fn new(q: &Quiver, theta: &Stability) -> Result<Self> {
        q.check_len(theta.len(), "stability")?;
        Ok(ExistenceOracle { embed: GenericEmbedCache::new(q), theta: theta.clone(), hn_memo: RwLock::new(HashMap::new()) })
    }

    fn check(&self, d: &DimVector) -> Result<()> {
        self.embed.quiver.check_len(d.len(), "dimension vector")?;
        if d.is_zero() {
            return Err(Error::invalid("dimension vector must be non-zero"));
        }
        Ok(())
    }

    pub fn sst_nonempty(&self, d: &DimVector, method: SstMethod) -> Result<bool> {
        self.check(d)?;
        Ok(match method {
            SstMethod::Schofield => {
                let mu = self.theta.mu(d);
                self.embed
                    .generic_subdimensions(d)
                    .iter()
                    .filter(|e| !e.is_zero())
                    .all(|e| self.theta.mu(e) <= mu)
            }
            SstMethod::Hn => self.sst_by_hn(d),
        })
    }

    pub fn st_nonempty(&self, d: &DimVector) -> Result<bool> {
        self.check(d)?;
        let mu = self.theta.mu(d);
        Ok(self
            .embed
            .generic_subdimensions(d)
            .iter()
            .filter(|e| !e.is_zero() && *e != d)
            .all(|e| self.theta.mu(e) < mu))
    }

    /// Non-empty iff no non-trivial decomposition into semistable-realizable
    /// parts of strictly decreasing slope with `⟨dᵏ,dˡ⟩ = 0` for `k < l` exists.
    fn sst_by_hn(&self, d: &DimVector) -> bool {
        if let Some(&v) = self.hn_memo.read().get(d) {
            return v;
        }
        let mut parts = Vec::new();
        let v = !self.find_hn_type(d, None, &mut parts);
        *self.hn_memo.write().entry(d.clone()).or_insert(v)
    }

    fn find_hn_type(&self, rest: &DimVector, bound: Option<Slope>, parts: &mut Vec<DimVector>) -> bool {
        if rest.is_zero() {
            return parts.len() >= 2;
        }
        let q = &self.embed.quiver;
        for x in rest.sub_vectors() {
            if x.is_zero() || (parts.is_empty() && x == *rest) {
                continue;
            }
            let mu = self.theta.mu(&x);
            if bound.is_some_and(|b| mu >= b) {
                continue;
            }
            if parts.iter().any(|p| q.euler(p, &x) != 0) {
                continue;
            }
            if !self.sst_by_hn(&x) {
                continue;
            }
            parts.push(x.clone());
            let found = self.find_hn_type(&rest.checked_sub(&x).unwrap(), Some(mu), parts);
            parts.pop();
            if found {
                return true;
            }
        }
        false
    }
}

pub fn sst_nonempty(q: &Quiver, theta: &Stability, d: &DimVector, method: SstMethod) -> Result<bool> {
    ExistenceOracle::new(q, theta)?.sst_nonempty(d, method)
}

pub fn st_nonempty(q: &Quiver, theta: &Stability, d: &DimVector) -> Result<bool> {
    ExistenceOracle::new(q, theta)?.st_nonempty(d)
}

fn strongly_connected(q: &Quiver, supp: &[usize]) -> bool {
    let inside = |v: usize| supp.contains(&v);
    let reach = |forward: bool| {
        let mut seen = vec![false; q.num_vertices()];
        seen[supp[0]] = true;
        let mut stack = vec![supp[0]];
        while let Some(v) = stack.pop() {
            for a in q.arrows() {
                let (from, to) = if forward { (a.source, a.target) } else { (a.target, a.source) };
                if from == v && inside(to) && !seen[to] {
                    seen[to] = true;
                    stack.push(to);
                }
            }
        }
        supp.iter().all(|&i| seen[i])
    };
    reach(true) && reach(false)
}

/// Whether the full subquiver on `supp` is one oriented cycle through each vertex once.
fn is_cyclic_affine_a(q: &Quiver, supp: &[usize]) -> bool {
    let inner: Vec<&Arrow> =
        q.arrows().iter().filter(|a| supp.contains(&a.source) && supp.contains(&a.target)).collect();
    if inner.len() != supp.len() {
        return false;
    }
    supp.iter().all(|&i| {
        inner.iter().filter(|a| a.source == i).count() == 1 && inner.iter().filter(|a| a.target == i).count() == 1
    }) && strongly_connected(q, supp)
}

/// Whether a simple representation of dimension `d` exists.
///
/// One-dimensional representations at a single vertex are always simple. If
/// the support is an oriented cycle, all entries must be 1. Otherwise the
/// support must be strongly connected with `⟨d,i⟩ ≤ 0` and `⟨i,d⟩ ≤ 0` on it.
pub fn simple_nonempty(q: &Quiver, d: &DimVector) -> Result<bool> {
    q.check_len(d.len(), "dimension vector")?;
    if d.is_zero() {
        return Err(Error::invalid("dimension vector must be non-zero"));
    }
    if let Some(i) = d.coordinate_index() {
        if d.get(i) == 1 {
            return Ok(true);
        }
    }
    let supp = d.support();
    if is_cyclic_affine_a(q, &supp) {
        return Ok(supp.iter().all(|&i| d.get(i) == 1));
    }
    if !strongly_connected(q, &supp) {
        return Ok(false);
    }
    Ok(supp.iter().all(|&i| {
        let ei = DimVector::unit(d.len(), i);
        q.euler(d, &ei) <= 0 && q.euler(&ei, d) <= 0
    }))
}

/// The auxiliary quiver on the parts: `δ_kl − ⟨dᵏ,dˡ⟩` arrows from `k` to `l`.
pub fn auxiliary_quiver(q: &Quiver, parts: &[DimVector]) -> Result<Quiver> {
    let names: Vec<String> = (0..parts.len()).map(|k| format!("p{}", k + 1)).collect();
    let mut arrows = Vec::new();
    for (k, dk) in parts.iter().enumerate() {
        for (l, dl) in parts.iter().enumerate() {
            let count = i64::from(k == l) - q.euler(dk, dl);
            if count < 0 {
                return Err(Error::invalid(format!(
                    "auxiliary quiver: negative arrow count {count} between parts {dk} and {dl}"
                )));
            }
            arrows.extend((0..count).map(|_| Arrow { source: k, target: l }));
        }
    }
    Quiver::new(names, arrows)
}

/// Stable non-emptiness for `d = Σ m_k dᵏ` given stable, equal-slope parts.
pub fn st_nonempty_al(q: &Quiver, theta: &Stability, parts: &[(i64, DimVector)]) -> Result<bool> {
    if parts.is_empty() {
        return Err(Error::invalid("parts: at least one part required"));
    }
    let oracle = ExistenceOracle::new(q, theta)?;
    let mut total = DimVector::zero(q.num_vertices());
    for (m, dk) in parts {
        if *m < 1 {
            return Err(Error::invalid(format!("parts: multiplicity {m} must be positive")));
        }
        if !oracle.st_nonempty(dk)? {
            return Err(Error::invalid(format!("parts: {dk} admits no stable representation")));
        }
        total = total.add(&dk.scale(*m));
    }
    let mu = theta.mu(&total);
    if let Some((_, bad)) = parts.iter().find(|(_, dk)| theta.mu(dk) != mu) {
        return Err(Error::invalid(format!("parts: {bad} does not have the common slope")));
    }
    let dims: Vec<DimVector> = parts.iter().map(|(_, dk)| dk.clone()).collect();
    let aux = auxiliary_quiver(q, &dims)?;
    let m = DimVector::new(parts.iter().map(|(m, _)| *m).collect())?;
    simple_nonempty(&aux, &m)
}
