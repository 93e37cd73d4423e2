//! Polynomials in `q` with 64-bit integer coefficients.
//!
//! Coefficients are stored densely in ascending degree with no trailing
//! zeros, so equality is structural. All arithmetic is exact; additions and
//! multiplications detect `i64` overflow and panic rather than wrap, with
//! `checked_*` variants for callers that want the failure as a value. The
//! matrix printers use [`QPoly::cell_string`], which prefers the factored
//! form `sign * (-q)^a * (1-q)^b` whenever the polynomial has one.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A polynomial in `q` over `i64`, kept in canonical dense ascending form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<i64>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly { coeffs: vec![1] }
    }

    pub fn q() -> Self {
        QPoly { coeffs: vec![0, 1] }
    }

    pub fn constant(c: i64) -> Self {
        QPoly::from_coeffs(vec![c])
    }

    /// The monomial `c * q^k`.
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        QPoly::from_coeffs(coeffs)
    }

    pub fn q_power(k: usize) -> Self {
        QPoly::monomial(1, k)
    }

    /// `(-q)^k`.
    pub fn neg_q_power(k: usize) -> Self {
        QPoly::monomial(if k % 2 == 0 { 1 } else { -1 }, k)
    }

    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    /// Ascending coefficients without trailing zeros; empty for zero.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `q^k` (zero beyond the stored degree).
    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn checked_add(&self, rhs: &QPoly) -> Option<QPoly> {
        let mut coeffs = vec![0i64; self.coeffs.len().max(rhs.coeffs.len())];
        for (k, c) in coeffs.iter_mut().enumerate() {
            *c = self.coeff(k).checked_add(rhs.coeff(k))?;
        }
        Some(QPoly::from_coeffs(coeffs))
    }

    pub fn checked_sub(&self, rhs: &QPoly) -> Option<QPoly> {
        self.checked_add(&rhs.checked_neg()?)
    }

    pub fn checked_neg(&self) -> Option<QPoly> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.checked_neg())
            .collect::<Option<Vec<_>>>()?;
        Some(QPoly { coeffs })
    }

    pub fn checked_mul(&self, rhs: &QPoly) -> Option<QPoly> {
        if self.is_zero() || rhs.is_zero() {
            return Some(QPoly::zero());
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                let prod = a.checked_mul(b)?;
                coeffs[i + j] = coeffs[i + j].checked_add(prod)?;
            }
        }
        Some(QPoly::from_coeffs(coeffs))
    }

    /// Multiplies by an integer scalar.
    pub fn scale(&self, c: i64) -> QPoly {
        self.checked_mul(&QPoly::constant(c))
            .expect("integer overflow scaling a q-polynomial")
    }

    /// Evaluates at an integer point with overflow checking.
    pub fn checked_eval(&self, v: i64) -> Option<i64> {
        let mut acc = 0i64;
        for &c in self.coeffs.iter().rev() {
            acc = acc.checked_mul(v)?.checked_add(c)?;
        }
        Some(acc)
    }

    /// Evaluates at an integer point; panics on overflow.
    pub fn eval(&self, v: i64) -> i64 {
        self.checked_eval(v)
            .expect("integer overflow evaluating a q-polynomial")
    }

    /// Writes the polynomial as `sign * (-q)^a * (1-q)^b` if it has that
    /// form; such a factorization is unique when it exists.
    pub fn try_factor(&self) -> Option<FactoredCoeff> {
        if self.is_zero() {
            return None;
        }
        let val = self.coeffs.iter().position(|&c| c != 0).unwrap();
        let rest = QPoly::from_coeffs(self.coeffs[val..].to_vec());
        let lead = rest.coeff(0);
        if lead != 1 && lead != -1 {
            return None;
        }
        let b = rest.degree().unwrap();
        let candidate = one_minus_q_power(b).scale(lead);
        if rest != candidate {
            return None;
        }
        let sign = if val % 2 == 0 { lead } else { -lead };
        Some(FactoredCoeff {
            sign,
            neg_q_exp: val as u32,
            one_minus_q_exp: b as u32,
        })
    }

    /// Matrix-cell rendering: `.` for zero, the factored form when one
    /// exists (`-q(1-q)`, `(1-q)^2`, `q^2`), otherwise the expanded form.
    pub fn cell_string(&self) -> String {
        if self.is_zero() {
            return ".".to_string();
        }
        match self.try_factor() {
            Some(f) => f.to_string(),
            None => self.to_string(),
        }
    }
}

fn one_minus_q_power(b: usize) -> QPoly {
    let base = QPoly::from_coeffs(vec![1, -1]);
    let mut acc = QPoly::one();
    for _ in 0..b {
        acc = &acc * &base;
    }
    acc
}

impl Add for &QPoly {
    type Output = QPoly;

    fn add(self, rhs: &QPoly) -> QPoly {
        self.checked_add(rhs)
            .expect("integer overflow adding q-polynomials")
    }
}

impl Sub for &QPoly {
    type Output = QPoly;

    fn sub(self, rhs: &QPoly) -> QPoly {
        self.checked_sub(rhs)
            .expect("integer overflow subtracting q-polynomials")
    }
}

impl Mul for &QPoly {
    type Output = QPoly;

    fn mul(self, rhs: &QPoly) -> QPoly {
        self.checked_mul(rhs)
            .expect("integer overflow multiplying q-polynomials")
    }
}

impl Neg for &QPoly {
    type Output = QPoly;

    fn neg(self) -> QPoly {
        self.checked_neg()
            .expect("integer overflow negating a q-polynomial")
    }
}

impl fmt::Display for QPoly {
    /// Expanded ascending form: `0`, `1-q`, `-q+q^2`, `2q^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                f.write_str(if c < 0 { "-" } else { "+" })?;
            }
            let mag = c.unsigned_abs();
            if k == 0 {
                write!(f, "{mag}")?;
            } else {
                if mag != 1 {
                    write!(f, "{mag}")?;
                }
                if k == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{k}")?;
                }
            }
        }
        Ok(())
    }
}

impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Ok(QPoly::from_coeffs(Vec::<i64>::deserialize(deserializer)?))
    }
}

/// A coefficient in the factored form `sign * (-q)^a * (1-q)^b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FactoredCoeff {
    /// `1` or `-1`.
    pub sign: i64,
    /// Exponent `a` of `(-q)`.
    pub neg_q_exp: u32,
    /// Exponent `b` of `(1-q)`.
    pub one_minus_q_exp: u32,
}

impl FactoredCoeff {
    pub fn expand(&self) -> QPoly {
        let q_part = QPoly::neg_q_power(self.neg_q_exp as usize);
        let omq_part = one_minus_q_power(self.one_minus_q_exp as usize);
        (&q_part * &omq_part).scale(self.sign)
    }
}

impl fmt::Display for FactoredCoeff {
    /// Factored rendering: `1`, `-q`, `q^2`, `1-q`, `-q(1-q)`, `(1-q)^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = self.neg_q_exp;
        let b = self.one_minus_q_exp;
        // Overall sign once (-q)^a is written as a power of plain q.
        let neg = self.sign * if a % 2 == 0 { 1 } else { -1 } < 0;
        let mut s = String::new();
        if a == 1 {
            s.push('q');
        } else if a >= 2 {
            s.push_str(&format!("q^{a}"));
        }
        if b > 0 {
            if a == 0 && b == 1 {
                // Alone, the factor needs parentheses only under a sign.
                s.push_str(if neg { "(1-q)" } else { "1-q" });
            } else if b == 1 {
                s.push_str("(1-q)");
            } else {
                s.push_str(&format!("(1-q)^{b}"));
            }
        }
        if s.is_empty() {
            s.push('1');
        }
        write!(f, "{}{s}", if neg { "-" } else { "" })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        assert_eq!(QPoly::from_coeffs(vec![1, 2, 0, 0]).coeffs(), &[1, 2]);
        assert_eq!(QPoly::from_coeffs(vec![0, 0]), QPoly::zero());
        assert!(QPoly::zero().is_zero());
        assert_eq!(QPoly::zero().degree(), None);
        assert_eq!(QPoly::q().degree(), Some(1));
    }

    #[test]
    fn ring_operations() {
        let a = QPoly::from_coeffs(vec![1, -1]);
        let b = QPoly::from_coeffs(vec![1, 1]);
        assert_eq!(&a + &b, QPoly::constant(2));
        assert_eq!(&a * &b, QPoly::from_coeffs(vec![1, 0, -1]));
        assert_eq!(&a - &a, QPoly::zero());
        assert_eq!(-&a, QPoly::from_coeffs(vec![-1, 1]));
        assert_eq!(&QPoly::zero() * &b, QPoly::zero());
        assert_eq!(QPoly::neg_q_power(2), QPoly::monomial(1, 2));
        assert_eq!(QPoly::neg_q_power(3), QPoly::monomial(-1, 3));
    }

    #[test]
    fn evaluation() {
        let p = QPoly::from_coeffs(vec![1, -2, 1]);
        assert_eq!(p.eval(1), 0);
        assert_eq!(p.eval(3), 4);
        assert_eq!(QPoly::zero().eval(5), 0);
    }

    #[test]
    fn overflow_is_detected() {
        let big = QPoly::constant(i64::MAX);
        assert_eq!(big.checked_add(&QPoly::one()), None);
        assert_eq!(big.checked_mul(&QPoly::constant(2)), None);
        assert_eq!(big.checked_eval(2), Some(i64::MAX));
        let bigq = QPoly::monomial(i64::MAX, 1);
        assert_eq!(bigq.checked_eval(2), None);
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn panicking_ops_report_overflow() {
        let big = QPoly::constant(i64::MAX);
        let _ = &big + &QPoly::one();
    }

    #[test]
    fn factoring() {
        // q^2 - q = (+1) * (-q)^1 * (1-q)^1
        let p = QPoly::from_coeffs(vec![0, -1, 1]);
        let f = p.try_factor().unwrap();
        assert_eq!((f.sign, f.neg_q_exp, f.one_minus_q_exp), (1, 1, 1));
        assert_eq!(f.expand(), p);

        let one = QPoly::one().try_factor().unwrap();
        assert_eq!((one.sign, one.neg_q_exp, one.one_minus_q_exp), (1, 0, 0));

        let mq = QPoly::monomial(-1, 1).try_factor().unwrap();
        assert_eq!((mq.sign, mq.neg_q_exp, mq.one_minus_q_exp), (1, 1, 0));

        let omq2 = QPoly::from_coeffs(vec![1, -2, 1]).try_factor().unwrap();
        assert_eq!((omq2.sign, omq2.neg_q_exp, omq2.one_minus_q_exp), (1, 0, 2));

        assert_eq!(QPoly::from_coeffs(vec![1, 1]).try_factor(), None);
        assert_eq!(QPoly::constant(2).try_factor(), None);
        assert_eq!(QPoly::zero().try_factor(), None);
    }

    #[test]
    fn factoring_round_trips_exhaustively() {
        for sign in [1i64, -1] {
            for a in 0..4u32 {
                for b in 0..4u32 {
                    let f = FactoredCoeff { sign, neg_q_exp: a, one_minus_q_exp: b };
                    let p = f.expand();
                    assert_eq!(p.try_factor(), Some(f), "sign={sign} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn rendering() {
        assert_eq!(QPoly::zero().cell_string(), ".");
        assert_eq!(QPoly::one().cell_string(), "1");
        assert_eq!(QPoly::constant(-1).cell_string(), "-1");
        assert_eq!(QPoly::monomial(-1, 1).cell_string(), "-q");
        assert_eq!(QPoly::q_power(2).cell_string(), "q^2");
        assert_eq!(QPoly::from_coeffs(vec![1, -1]).cell_string(), "1-q");
        assert_eq!(QPoly::from_coeffs(vec![0, -1, 1]).cell_string(), "-q(1-q)");
        assert_eq!(QPoly::from_coeffs(vec![1, -2, 1]).cell_string(), "(1-q)^2");
        assert_eq!(QPoly::from_coeffs(vec![-1, 1]).cell_string(), "-(1-q)");
        assert_eq!(QPoly::from_coeffs(vec![0, 0, 1, -1]).cell_string(), "q^2(1-q)");
        assert_eq!(QPoly::from_coeffs(vec![1, 1]).cell_string(), "1+q");
        assert_eq!(QPoly::from_coeffs(vec![2]).cell_string(), "2");
        assert_eq!(QPoly::from_coeffs(vec![0, -1, 2]).to_string(), "-q+2q^2");
    }

    #[test]
    fn json_round_trip() {
        let p = QPoly::from_coeffs(vec![0, -1, 1]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, "[0,-1,1]");
        let back: QPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }
}
