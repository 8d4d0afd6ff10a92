use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::laurent::LaurentPoly;
use super::rat::{int, Rat};
use crate::error::{Error, Result};

/// Rational function `numerator / prod_{a in denominator} (1 - t^a)`.
///
/// The denominator multiset is kept sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertSeries {
    numerator: LaurentPoly,
    denominator: Vec<i64>,
}

impl HilbertSeries {
    pub fn new(numerator: LaurentPoly, mut denominator: Vec<i64>) -> Result<Self> {
        if let Some(&a) = denominator.iter().find(|&&a| a <= 0) {
            return Err(Error::Input(format!("denominator entry {a} is not positive")));
        }
        denominator.sort_unstable();
        Ok(Self {
            numerator,
            denominator,
        })
    }

    /// `1 / prod (1 - t^a)`, the series of a weighted polynomial ring.
    pub fn free(weights: &[i64]) -> Result<Self> {
        Self::new(LaurentPoly::one(), weights.to_vec())
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &[i64] {
        &self.denominator
    }

    pub fn denominator_poly(&self) -> LaurentPoly {
        denominator_poly(&self.denominator)
    }

    /// Cancels `(1 - t^a)` factors of the denominator that divide the numerator,
    /// largest `a` first.
    pub fn canonical(&self) -> Self {
        let mut num = self.numerator.clone();
        let mut kept = Vec::with_capacity(self.denominator.len());
        for &a in self.denominator.iter().rev() {
            match num.div_one_minus(a) {
                Some(q) if !num.is_zero() => num = q,
                _ => kept.push(a),
            }
        }
        kept.sort_unstable();
        Self {
            numerator: num,
            denominator: kept,
        }
    }

    /// Equality as rational functions, decided by cross multiplication.
    pub fn same_function(&self, other: &Self) -> bool {
        &self.numerator * &other.denominator_poly() == &other.numerator * &self.denominator_poly()
    }

    /// Order of the pole at `t = 1`.
    pub fn pole_order(&self) -> i64 {
        if self.numerator.is_zero() {
            return 0;
        }
        let (m, _) = self.numerator.split_root_at_one();
        self.denominator.len() as i64 - m as i64
    }

    /// Power-series coefficients `c_0 ..= c_order`.
    pub fn expand(&self, order: usize) -> Result<Vec<Rat>> {
        if let Some(lo) = self.numerator.min_exp() {
            if lo < 0 {
                return Err(Error::NotPowerSeries(lo));
            }
        }
        let mut c = vec![Rat::zero(); order + 1];
        for (e, v) in self.numerator.terms() {
            if (e as usize) <= order {
                c[e as usize] += v;
            }
        }
        for &a in &self.denominator {
            let a = a as usize;
            for n in a..=order {
                let prev = c[n - a].clone();
                c[n] += prev;
            }
        }
        Ok(c)
    }

    pub fn coefficient(&self, n: usize) -> Result<Rat> {
        Ok(self.expand(n)?.pop().unwrap())
    }

    /// `H * prod_{a in denom} (1 - t^a)` as an exact Laurent polynomial.
    pub fn hilbert_numerator(&self, denom: &[i64]) -> Result<LaurentPoly> {
        if denom.is_empty() {
            return Err(Error::Input("empty denominator".into()));
        }
        if let Some(&a) = denom.iter().find(|&&a| a <= 0) {
            return Err(Error::Input(format!("denominator entry {a} is not positive")));
        }
        let mut own = self.denominator.clone();
        let mut num = self.numerator.clone();
        // Cancel shared factors first; the rest needs an exact division.
        for &a in denom {
            if let Some(i) = own.iter().position(|&b| b == a) {
                own.remove(i);
            } else {
                num = num.mul_one_minus(a);
            }
        }
        if own.is_empty() {
            return Ok(num);
        }
        num.div_exact(&denominator_poly(&own))
            .ok_or(Error::DenominatorDoesNotClear)
    }

    /// `lim_{t -> 1} (1 - t)^{n+1} H`: the degree of the polarisation on an `n`-fold.
    pub fn intersection_number(&self, n: i64) -> Result<Rat> {
        let actual = self.pole_order();
        if actual != n + 1 || self.numerator.is_zero() {
            return Err(Error::PoleOrder {
                expected: n + 1,
                actual,
            });
        }
        let (_, cof) = self.numerator.split_root_at_one();
        let prod: i64 = self.denominator.iter().product();
        Ok(cof.eval(&Rat::one()) / int(prod))
    }

    /// Multiplies by `prod (1 - t^d)`: the series of a regular sequence of the given degrees.
    pub fn cut(&self, degrees: &[i64]) -> Self {
        let mut num = self.numerator.clone();
        for &d in degrees {
            num = num.mul_one_minus(d);
        }
        Self {
            numerator: num,
            denominator: self.denominator.clone(),
        }
    }

    /// Adjoins free generators of the given degrees.
    pub fn cone(&self, weights: &[i64]) -> Self {
        let mut denominator = self.denominator.clone();
        denominator.extend_from_slice(weights);
        denominator.sort_unstable();
        Self {
            numerator: self.numerator.clone(),
            denominator,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = &(&self.numerator * &other.denominator_poly())
            + &(&other.numerator * &self.denominator_poly());
        let mut denominator = self.denominator.clone();
        denominator.extend_from_slice(&other.denominator);
        denominator.sort_unstable();
        Self {
            numerator: num,
            denominator,
        }
        .canonical()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut denominator = self.denominator.clone();
        denominator.extend_from_slice(&other.denominator);
        denominator.sort_unstable();
        Self {
            numerator: &self.numerator * &other.numerator,
            denominator,
        }
        .canonical()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self {
            numerator: self.numerator.scale(c),
            denominator: self.denominator.clone(),
        }
    }

    /// Index and value of the first coefficient up to `order` that is not a
    /// non-negative integer.
    pub fn first_invalid_coefficient(&self, order: usize) -> Result<Option<(usize, Rat)>> {
        Ok(self
            .expand(order)?
            .into_iter()
            .enumerate()
            .find(|(_, c)| !super::rat::is_nonneg_integer(c)))
    }
}

pub fn denominator_poly(weights: &[i64]) -> LaurentPoly {
    weights
        .iter()
        .fold(LaurentPoly::one(), |acc, &a| acc.mul_one_minus(a))
}

/// Compact multiset notation, e.g. `1^6,2^4`.
pub fn fmt_multiset(weights: &[i64]) -> String {
    let mut sorted = weights.to_vec();
    sorted.sort_unstable();
    let mut parts = Vec::new();
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i;
        while j < sorted.len() && sorted[j] == sorted[i] {
            j += 1;
        }
        if j - i == 1 {
            parts.push(sorted[i].to_string());
        } else {
            parts.push(format!("{}^{}", sorted[i], j - i));
        }
        i = j;
    }
    parts.join(",")
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator.is_empty() {
            return write!(f, "{}", self.numerator);
        }
        let den: Vec<String> = self
            .denominator
            .iter()
            .map(|&a| if a == 1 { "(1-t)".into() } else { format!("(1-t^{a})") })
            .collect();
        let num = self.numerator.to_string();
        let num = if self.numerator.len() > 1 { format!("({num})") } else { num };
        write!(f, "{num}/({})", den.join(""))
    }
}

impl One for HilbertSeries {
    fn one() -> Self {
        Self {
            numerator: LaurentPoly::one(),
            denominator: Vec::new(),
        }
    }
}

impl std::ops::Mul for HilbertSeries {
    type Output = HilbertSeries;
    fn mul(self, rhs: Self) -> Self {
        HilbertSeries::mul(&self, &rhs)
    }
}
