//! Sparse multivariate polynomials with rational coefficients, used for the
//! symbolic identity checks and as input to the graded-dimension oracle.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::series::{int, Rat};

/// Exponent vector; its length is the number of variables of the ring.
pub type Monomial = Vec<u16>;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = vec![0; nvars];
        m[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(m, Rat::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        debug_assert_eq!(m.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_insert_with(Rat::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&int(c))
    }

    /// Weighted degree of each term; `None` if the polynomial is not homogeneous.
    pub fn weighted_degree(&self, weights: &[i64]) -> Option<i64> {
        let mut deg = None;
        for m in self.terms.keys() {
            let d: i64 = m.iter().zip(weights).map(|(&e, &w)| e as i64 * w).sum();
            match deg {
                None => deg = Some(d),
                Some(prev) if prev != d => return None,
                _ => {}
            }
        }
        deg
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    t *= &point[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes `images[i]` for variable `i`; all images share one target ring.
    pub fn substitute(&self, images: &[MPoly]) -> MPoly {
        let target = images.first().map(|p| p.nvars).unwrap_or(0);
        let mut out = MPoly::zero(target);
        for (m, c) in &self.terms {
            let mut t = MPoly::constant(target, c.clone());
            for (i, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    t = &t * &images[i];
                }
            }
            out = &out + &t;
        }
        out
    }

    /// Sets every variable outside `keep` to zero.
    pub fn restrict(&self, keep: &[bool]) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            if m.iter().zip(keep).all(|(&e, &k)| e == 0 || k) {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    /// True if every coefficient is an integer.
    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m: Monomial = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                out.add_term(m, ca * cb);
            }
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.scale_int(-1)
    }
}

/// `sum_i coeffs[i] * polys[i]`.
pub fn dot(coeffs: &[MPoly], polys: &[MPoly]) -> MPoly {
    assert_eq!(coeffs.len(), polys.len());
    let nvars = polys.first().map(|p| p.nvars()).unwrap_or(0);
    coeffs
        .iter()
        .zip(polys)
        .fold(MPoly::zero(nvars), |acc, (c, p)| &acc + &(c * p))
}
