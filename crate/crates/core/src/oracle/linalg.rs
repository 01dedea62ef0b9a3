//! Dense linear algebra over a small prime field.

use crate::error::{Error, Result};

pub const FIELDS: [u32; 3] = [2, 3, 5];

pub fn check_field(p: u32) -> Result<()> {
    if FIELDS.contains(&p) {
        Ok(())
    } else {
        Err(Error::invalid(format!("q: field size must be one of 2, 3, 5; got {p}")))
    }
}

pub fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p));
    let mut r = 1u32;
    for _ in 0..p - 2 {
        r = r * a % p;
    }
    r
}

/// A `rows × cols` matrix over `F_p`, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u32>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    pub fn apply(&self, v: &[u32], p: u32) -> Vec<u32> {
        (0..self.rows).map(|r| (0..self.cols).map(|c| self.get(r, c) * v[c]).sum::<u32>() % p).collect()
    }

    pub fn mul(&self, other: &Matrix, p: u32) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let s: u32 = (0..self.cols).map(|k| self.get(r, k) * other.get(k, c)).sum();
                out.set(r, c, s % p);
            }
        }
        out
    }

    pub fn rank(&self, p: u32) -> usize {
        let mut m = self.clone();
        rref_in_place(&mut m, p).len()
    }
}

/// Reduces to reduced row echelon form; returns the pivot columns.
pub fn rref_in_place(m: &mut Matrix, p: u32) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.cols {
        if row == m.rows {
            break;
        }
        let Some(piv) = (row..m.rows).find(|&r| m.get(r, col) != 0) else { continue };
        for c in 0..m.cols {
            let (a, b) = (m.get(row, c), m.get(piv, c));
            m.set(row, c, b);
            m.set(piv, c, a);
        }
        let inv = inv_mod(m.get(row, col), p);
        for c in 0..m.cols {
            m.set(row, c, m.get(row, c) * inv % p);
        }
        for r in 0..m.rows {
            let f = m.get(r, col);
            if r != row && f != 0 {
                for c in 0..m.cols {
                    let v = (m.get(r, c) + p * p - f * m.get(row, c) % p) % p;
                    m.set(r, c, v);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Vectors of `F_p^n` encoded as base-`p` integers, first coordinate least significant.
pub fn encode(v: &[u32], p: u32) -> usize {
    v.iter().rev().fold(0usize, |acc, &x| acc * p as usize + x as usize)
}

pub fn decode(mut code: usize, n: usize, p: u32) -> Vec<u32> {
    (0..n)
        .map(|_| {
            let x = (code % p as usize) as u32;
            code /= p as usize;
            x
        })
        .collect()
}

/// A subspace of `F_p^n` with its RREF basis and membership table.
#[derive(Clone, Debug)]
pub struct Subspace {
    pub dim: usize,
    pub basis: Vec<Vec<u32>>,
    members: Vec<bool>,
}

impl Subspace {
    pub fn contains(&self, v: &[u32], p: u32) -> bool {
        self.members[encode(v, p)]
    }

    pub fn contains_subspace(&self, other: &Subspace, p: u32) -> bool {
        other.basis.iter().all(|b| self.contains(b, p))
    }
}

fn span_members(basis: &[Vec<u32>], n: usize, p: u32) -> Vec<bool> {
    let size = (p as usize).pow(n as u32);
    let mut members = vec![false; size];
    let k = basis.len();
    for coeffs in 0..(p as usize).pow(k as u32) {
        let c = decode(coeffs, k, p);
        let mut v = vec![0u32; n];
        for (ci, b) in c.iter().zip(basis) {
            for j in 0..n {
                v[j] = (v[j] + ci * b[j]) % p;
            }
        }
        members[encode(&v, p)] = true;
    }
    members
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for last in (k - 1)..n {
        for mut c in combinations(last, k - 1) {
            c.push(last);
            out.push(c);
        }
    }
    out
}

/// All subspaces of `F_p^n`, each listed once via its RREF basis, ordered by dimension.
pub fn all_subspaces(n: usize, p: u32) -> Vec<Subspace> {
    let mut out = Vec::new();
    for k in 0..=n {
        for pivots in combinations(n, k) {
            let free: Vec<(usize, usize)> = (0..k)
                .flat_map(|r| ((pivots[r] + 1)..n).filter(|c| !pivots.contains(c)).map(move |c| (r, c)))
                .collect();
            for fill in 0..(p as usize).pow(free.len() as u32) {
                let vals = decode(fill, free.len(), p);
                let mut basis = vec![vec![0u32; n]; k];
                for r in 0..k {
                    basis[r][pivots[r]] = 1;
                }
                for (&(r, c), &v) in free.iter().zip(&vals) {
                    basis[r][c] = v;
                }
                let members = span_members(&basis, n, p);
                out.push(Subspace { dim: k, basis, members });
            }
        }
    }
    out
}

/// `|GL_n(F_p)|`.
pub fn gl_order(n: usize, p: u32) -> u128 {
    let pn = (p as u128).pow(n as u32);
    (0..n).map(|k| pn - (p as u128).pow(k as u32)).product()
}
