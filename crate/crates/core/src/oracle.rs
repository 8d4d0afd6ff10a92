//! Brute-force graded dimensions of `k[x] / (f_1, ..., f_k)` by linear algebra
//! on monomials.
//!
//! Equations must be homogeneous for a fine multigrading (the torus weights),
//! so the matrix in each degree splits into blocks by multidegree. Ranks are
//! taken modulo two large primes; the larger of the two is the rank over `Q`
//! except for unlucky primes, which would have to divide some minor.

use std::collections::HashMap;

use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::poly::{MPoly, Monomial};
use crate::series::Rat;

pub const MONOMIAL_LIMIT: usize = 100_000;

const PRIMES: [u64; 2] = [(1 << 61) - 1, 4_294_967_291];

#[derive(Clone, Debug)]
pub struct GradedRing {
    /// Positive degree of each variable.
    pub weights: Vec<i64>,
    /// Fine multidegree of each variable; every equation must be homogeneous for it.
    pub multidegrees: Vec<Vec<i64>>,
    pub equations: Vec<MPoly>,
}

fn multidegree_of(m: &Monomial, md: &[Vec<i64>]) -> Vec<i64> {
    let k = md.first().map(|v| v.len()).unwrap_or(0);
    let mut out = vec![0; k];
    for (i, &e) in m.iter().enumerate() {
        for (o, x) in out.iter_mut().zip(&md[i]) {
            *o += e as i64 * x;
        }
    }
    out
}

/// All exponent vectors of weighted degree `m`.
pub fn monomials_of_degree(weights: &[i64], m: i64, limit: usize) -> Result<Vec<Monomial>> {
    fn rec(weights: &[i64], i: usize, left: i64, cur: &mut Monomial, out: &mut Vec<Monomial>, limit: usize) -> bool {
        if i == weights.len() {
            if left == 0 {
                out.push(cur.clone());
                return out.len() <= limit;
            }
            return true;
        }
        let mut e = 0;
        while e as i64 * weights[i] <= left {
            cur[i] = e;
            if !rec(weights, i + 1, left - e as i64 * weights[i], cur, out, limit) {
                return false;
            }
            e += 1;
        }
        cur[i] = 0;
        true
    }
    let mut out = Vec::new();
    if m < 0 {
        return Ok(out);
    }
    let mut cur = vec![0; weights.len()];
    if !rec(weights, 0, m, &mut cur, &mut out, limit) {
        return Err(Error::DegreeBound {
            degree: m,
            monomials: out.len(),
            limit,
        });
    }
    Ok(out)
}

fn to_mod(c: &Rat, p: u64) -> u64 {
    let reduce = |b: &num_bigint::BigInt| -> u64 {
        let r = b.mod_floor(&num_bigint::BigInt::from(p));
        r.to_u64().unwrap()
    };
    let n = reduce(c.numer());
    let d = reduce(c.denom());
    mul_mod(n, pow_mod(d, p - 2, p), p)
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

/// Rank of a sparse matrix mod `p` by dense elimination.
fn rank_mod(rows: &[Vec<(usize, Rat)>], ncols: usize, p: u64) -> usize {
    let mut mat: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| {
            let mut v = vec![0; ncols];
            for (c, x) in r {
                v[*c] = (v[*c] + to_mod(x, p)) % p;
            }
            v
        })
        .collect();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..mat.len()).find(|&r| mat[r][col] != 0) else {
            continue;
        };
        mat.swap(rank, piv);
        let inv = pow_mod(mat[rank][col], p - 2, p);
        for x in mat[rank].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        let pivot_row = mat[rank].clone();
        for r in 0..mat.len() {
            if r != rank && mat[r][col] != 0 {
                let f = mat[r][col];
                for (x, &y) in mat[r].iter_mut().zip(&pivot_row).skip(col) {
                    *x = (*x + p - mul_mod(f, y, p)) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

impl GradedRing {
    pub fn new(weights: Vec<i64>, multidegrees: Vec<Vec<i64>>, equations: Vec<MPoly>) -> Result<Self> {
        if weights.iter().any(|&w| w <= 0) {
            return Err(Error::Input("variable weights must be positive".into()));
        }
        if multidegrees.len() != weights.len() || equations.iter().any(|e| e.nvars() != weights.len()) {
            return Err(Error::Input("graded ring data have mismatched sizes".into()));
        }
        for e in &equations {
            let mut degs = e.terms().map(|(m, _)| multidegree_of(m, &multidegrees));
            if let Some(first) = degs.next() {
                if degs.any(|d| d != first) {
                    return Err(Error::Input("equation is not multihomogeneous".into()));
                }
            }
        }
        Ok(Self {
            weights,
            multidegrees,
            equations,
        })
    }

    /// `dim (k[x]/I)_m`.
    pub fn dimension(&self, m: i64) -> Result<u64> {
        let monos = monomials_of_degree(&self.weights, m, MONOMIAL_LIMIT)?;
        // Group the basis of degree m by multidegree.
        let mut blocks: HashMap<Vec<i64>, HashMap<Monomial, usize>> = HashMap::new();
        for mono in &monos {
            let b = blocks.entry(multidegree_of(mono, &self.multidegrees)).or_default();
            let n = b.len();
            b.insert(mono.clone(), n);
        }
        let mut rows: HashMap<Vec<i64>, Vec<Vec<(usize, Rat)>>> = HashMap::new();
        for eq in self.equations.iter().filter(|e| !e.is_zero()) {
            let deg = eq.weighted_degree(&self.weights).ok_or_else(|| Error::Input("equation is not homogeneous".into()))?;
            for mult in monomials_of_degree(&self.weights, m - deg, MONOMIAL_LIMIT)? {
                let mut row = Vec::with_capacity(eq.len());
                let mut key = None;
                for (em, c) in eq.terms() {
                    let prod: Monomial = em.iter().zip(&mult).map(|(a, b)| a + b).collect();
                    let k = key.get_or_insert_with(|| multidegree_of(&prod, &self.multidegrees)).clone();
                    row.push((blocks[&k][&prod], c.clone()));
                }
                rows.entry(key.unwrap()).or_default().push(row);
            }
        }
        let mut rank = 0;
        for (k, r) in &rows {
            let ncols = blocks[k].len();
            rank += PRIMES.iter().map(|&p| rank_mod(r, ncols, p)).max().unwrap();
        }
        Ok((monos.len() - rank) as u64)
    }

    /// `dim` in degrees `0..=max`.
    pub fn hilbert_function(&self, max: i64) -> Result<Vec<u64>> {
        (0..=max).map(|m| self.dimension(m)).collect()
    }

    /// Ring with the variables outside `keep` set to zero and dropped.
    pub fn restrict(&self, keep: &[bool]) -> Self {
        let idx: Vec<usize> = (0..self.weights.len()).filter(|&i| keep[i]).collect();
        let equations = self
            .equations
            .iter()
            .map(|e| {
                let mut out = MPoly::zero(idx.len());
                for (m, c) in e.restrict(keep).terms() {
                    out.add_term(idx.iter().map(|&i| m[i]).collect(), c.clone());
                }
                out
            })
            .filter(|e| !e.is_zero())
            .collect();
        Self {
            weights: idx.iter().map(|&i| self.weights[i]).collect(),
            multidegrees: idx.iter().map(|&i| self.multidegrees[i].clone()).collect(),
            equations,
        }
    }

    /// True if every equation is a single monomial with squarefree support.
    pub fn is_squarefree_monomial(&self) -> bool {
        self.equations
            .iter()
            .all(|e| e.len() == 1 && e.terms().all(|(m, _)| m.iter().all(|&x| x <= 1)))
    }

    /// Adjoins free variables of the given weights (each with its own grading direction).
    pub fn cone(&self, weights: &[i64]) -> Self {
        let n = self.weights.len() + weights.len();
        let k = self.multidegrees.first().map(|v| v.len()).unwrap_or(0);
        let mut md: Vec<Vec<i64>> = self
            .multidegrees
            .iter()
            .map(|v| v.iter().copied().chain(std::iter::repeat_n(0, weights.len())).collect())
            .collect();
        for j in 0..weights.len() {
            let mut v = vec![0; k + weights.len()];
            v[k + j] = 1;
            md.push(v);
        }
        let equations = self
            .equations
            .iter()
            .map(|e| {
                let mut out = MPoly::zero(n);
                for (m, c) in e.terms() {
                    let mut m = m.clone();
                    m.resize(n, 0);
                    out.add_term(m, c.clone());
                }
                out
            })
            .collect();
        Self {
            weights: self.weights.iter().chain(weights).copied().collect(),
            multidegrees: md,
            equations,
        }
    }
}
