use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::rat::{fmt_rat, int, Rat};

/// Sparse Laurent polynomial in one variable `t` with rational coefficients.
///
/// No zero coefficient is ever stored, so structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rat>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, Rat::one())
    }

    pub fn monomial(exp: i64, coeff: Rat) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    /// `t^exp`.
    pub fn t(exp: i64) -> Self {
        Self::monomial(exp, Rat::one())
    }

    /// Builds from `(exponent, integer coefficient)` pairs; repeated exponents accumulate.
    pub fn from_ints<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, int(c));
        }
        p
    }

    /// `sum t^e` over a multiset of exponents.
    pub fn from_exponents<I: IntoIterator<Item = i64>>(exps: I) -> Self {
        Self::from_ints(exps.into_iter().map(|e| (e, 1)))
    }

    /// `1 - t^a`.
    pub fn one_minus_t(a: i64) -> Self {
        Self::from_ints([(0, 1), (a, -1)])
    }

    pub fn add_term(&mut self, exp: i64, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(Rat::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i64) -> Rat {
        self.terms.get(&exp).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rat)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    /// `p(1/t)`.
    pub fn invert_variable(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn eval(&self, t: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (&e, c) in &self.terms {
            acc += c * pow_rat(t, e);
        }
        acc
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Drops every term of exponent above `order`.
    pub fn truncate(&self, order: i64) -> Self {
        Self {
            terms: self.terms.range(..=order).map(|(&e, c)| (e, c.clone())).collect(),
        }
    }

    /// Multiplies by `1 - t^a` in place-friendly form.
    pub fn mul_one_minus(&self, a: i64) -> Self {
        let mut out = self.clone();
        for (&e, c) in &self.terms {
            out.add_term(e + a, -c.clone());
        }
        out
    }

    /// Exact quotient by `1 - t^a` (`a > 0`), or `None` if it does not divide.
    pub fn div_one_minus(&self, a: i64) -> Option<Self> {
        assert!(a > 0, "divisor exponent must be positive");
        let (lo, hi) = match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return Some(Self::zero()),
        };
        // q_e = p_e + q_{e-a}; the quotient has support in [lo, hi - a].
        if hi - a < lo {
            return None;
        }
        let mut q: BTreeMap<i64, Rat> = BTreeMap::new();
        for e in lo..=hi - a {
            let mut v = self.coeff(e);
            if let Some(prev) = q.get(&(e - a)) {
                v += prev;
            }
            if !v.is_zero() {
                q.insert(e, v);
            }
        }
        let quot = Self { terms: q };
        if quot.mul_one_minus(a) == *self {
            Some(quot)
        } else {
            None
        }
    }

    /// Exact quotient by a polynomial whose lowest term is a nonzero constant.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let d0 = divisor.coeff(0);
        assert!(
            !d0.is_zero() && divisor.min_exp() == Some(0),
            "divisor must have a nonzero constant term and no negative exponents"
        );
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dmax = divisor.max_exp().unwrap();
        let lo = self.min_exp().unwrap();
        let hi = self.max_exp().unwrap();
        if hi - lo < dmax {
            return None;
        }
        let mut rem = self.clone();
        let mut quot = Self::zero();
        for e in lo..=hi - dmax {
            let c = rem.coeff(e);
            if c.is_zero() {
                continue;
            }
            let f = c / &d0;
            for (de, dc) in divisor.terms() {
                rem.add_term(e + de, -(dc * &f));
            }
            quot.add_term(e, f);
        }
        if rem.is_zero() {
            Some(quot)
        } else {
            None
        }
    }

    /// Largest `m` with `(1 - t)^m` dividing `self`, together with the cofactor.
    pub fn split_root_at_one(&self) -> (u32, Self) {
        let mut m = 0;
        let mut cur = self.clone();
        if cur.is_zero() {
            return (0, cur);
        }
        while cur.eval(&Rat::one()).is_zero() {
            cur = cur
                .div_one_minus(1)
                .expect("a root at t = 1 implies divisibility by 1 - t");
            m += 1;
        }
        (m, cur)
    }

    /// `(exponent, coefficient)` triples as stable JSON.
    pub fn to_triples(&self) -> Vec<PolyTerm> {
        self.terms
            .iter()
            .map(|(&e, c)| PolyTerm {
                exp: e,
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            })
            .collect()
    }

    pub fn from_triples(terms: &[PolyTerm]) -> crate::Result<Self> {
        let mut p = Self::zero();
        for t in terms {
            let q = super::rat::parse_rat(&format!("{}/{}", t.num, t.den))?;
            p.add_term(t.exp, q);
        }
        Ok(p)
    }
}

/// Serialized term: `(exponent, numerator, denominator)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyTerm {
    pub exp: i64,
    pub num: String,
    pub den: String,
}

fn pow_rat(t: &Rat, e: i64) -> Rat {
    let base = if e < 0 { t.recip() } else { t.clone() };
    let mut acc = Rat::one();
    for _ in 0..e.unsigned_abs() {
        acc *= &base;
    }
    acc
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_triples().serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<PolyTerm>::deserialize(d)?;
        Self::from_triples(&raw).map_err(serde::de::Error::custom)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&a, ca) in &self.terms {
            for (&b, cb) in &rhs.terms {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&-Rat::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, c) in &self.terms {
            let neg = *c < Rat::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = abs.is_one();
            match (e, unit) {
                (0, _) => write!(f, "{}", fmt_rat(&abs))?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{}t", fmt_rat(&abs))?,
                (_, true) => write!(f, "t^{e}")?,
                (_, false) => write!(f, "{}t^{e}", fmt_rat(&abs))?,
            }
        }
        Ok(())
    }
}
