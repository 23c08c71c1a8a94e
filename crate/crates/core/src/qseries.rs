//! Truncated integer power series, just enough to expand
//!
//! ```text
//! ν(q) = Σ_{k≥0} q^{k(k+1)} / (−q; q²)_{k+1}
//! ```
//!
//! and read p_ν(n) off ν(−q). Every series carries its truncation order N
//! and keeps exactly the coefficients of q^0..q^N; arithmetic between
//! different orders is rejected.

use std::fmt::Write as _;

use crate::error::{Error, Result};

/// `c_0 + c_1 q + ... + c_N q^N (mod q^{N+1})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<i64>,
}

/// Sign of a coefficient or of the series argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![0; order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(1, 0, order)
    }

    /// `coeff * q^exp`, or zero when `exp` exceeds the order.
    pub fn monomial(coeff: i64, exp: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = coeff;
        }
        s
    }

    /// Pads with zeros or drops terms above q^order.
    pub fn from_coeffs(coeffs: &[i64], order: usize) -> Self {
        let mut s = Self::zero(order);
        for (dst, &c) in s.coeffs.iter_mut().zip(coeffs) {
            *dst = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficient of q^k; zero above the order.
    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    fn same_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::TruncationMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(Self { coeffs })
    }

    /// Cauchy product, truncated.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let order = self.order();
        let mut out = Self::zero(order);
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs[..=order - i].iter().enumerate() {
                let term = a.checked_mul(b).ok_or(Error::Overflow)?;
                let slot = &mut out.coeffs[i + j];
                *slot = slot.checked_add(term).ok_or(Error::Overflow)?;
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse; needs an invertible constant term (±1).
    pub fn invert(&self) -> Result<Self> {
        let c0 = self.coeffs[0];
        if c0 != 1 && c0 != -1 {
            return Err(Error::NonUnitConstantTerm(c0));
        }
        let order = self.order();
        let mut inv = Self::zero(order);
        inv.coeffs[0] = c0;
        // Solve Σ_{i=0..k} a_i b_{k-i} = 0 for b_k, dividing by a_0 = ±1.
        for k in 1..=order {
            let mut acc: i64 = 0;
            for i in 1..=k {
                let term = self.coeffs[i]
                    .checked_mul(inv.coeffs[k - i])
                    .ok_or(Error::Overflow)?;
                acc = acc.checked_add(term).ok_or(Error::Overflow)?;
            }
            inv.coeffs[k] = acc.checked_neg().ok_or(Error::Overflow)? * c0;
        }
        Ok(inv)
    }

    /// Multiplies by `q^k`, dropping what falls past the order.
    pub fn shift(&self, k: usize) -> Self {
        let order = self.order();
        let mut out = Self::zero(order);
        if k <= order {
            out.coeffs[k..].copy_from_slice(&self.coeffs[..=order - k]);
        }
        out
    }

    /// One `n<TAB>c_n` line per coefficient.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            let _ = writeln!(out, "{k}\t{c}");
        }
        out
    }
}

/// `Π_{k=0}^{count-1} (1 − sign · q^{2k+1})` truncated at `order`; the empty
/// product is 1.
///
/// `sign = Minus` gives (−q; q²)_count, the denominator of ν(q).
pub fn pochhammer_q_odd(sign: Sign, count: usize, order: usize) -> Result<TruncatedSeries> {
    let mut prod = TruncatedSeries::one(order);
    for k in 0..count {
        let exp = 2 * k + 1;
        if exp > order {
            break;
        }
        let factor = TruncatedSeries::one(order).add(&TruncatedSeries::monomial(
            -sign.as_i64(),
            exp,
            order,
        ))?;
        prod = prod.mul(&factor)?;
    }
    Ok(prod)
}

/// ν(q) for `argument = Plus`, ν(−q) for `argument = Minus`, mod q^{order+1}.
///
/// Replacing q by −q leaves q^{k(k+1)} alone (k(k+1) is even) and turns
/// (−q; q²) into (q; q²). Terms with k(k+1) > order vanish after truncation.
pub fn nu_series(argument: Sign, order: usize) -> Result<TruncatedSeries> {
    let sign = argument.flip();
    let mut total = TruncatedSeries::zero(order);
    for k in 0.. {
        let exp = k * (k + 1);
        if exp > order {
            break;
        }
        let term = pochhammer_q_odd(sign, k + 1, order)?.invert()?.shift(exp);
        total = total.add(&term)?;
    }
    Ok(total)
}

/// p_ν(n): the coefficient of q^n in ν(−q), expanded to order `order >= n`.
pub fn p_nu(n: usize, order: usize) -> Result<u64> {
    if n > order {
        return Err(Error::TruncationMismatch {
            left: n,
            right: order,
        });
    }
    let c = nu_series(Sign::Minus, order)?.coeff(n);
    u64::try_from(c).map_err(|_| Error::Overflow)
}

/// p_ν(0..=max_n) from a single expansion.
pub fn p_nu_table(max_n: usize) -> Result<Vec<u64>> {
    nu_series(Sign::Minus, max_n)?
        .coeffs()
        .iter()
        .map(|&c| u64::try_from(c).map_err(|_| Error::Overflow))
        .collect()
}
