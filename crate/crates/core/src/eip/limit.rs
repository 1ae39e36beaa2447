//! The continuous limit on the Sierpinski gasket: the boundary-length
//! function `lambda` and the Lex limit map `eta^-1 : [0, 1] -> R^3`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::eip::lex_profile_direct;
use crate::error::{Error, Result};

/// `lambda(a)`: finite at triadic rationals, countably infinite elsewhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Lambda {
    Finite(u64),
    CountablyInfinite,
}

impl fmt::Display for Lambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Lambda::Finite(v) => write!(f, "{v}"),
            Lambda::CountablyInfinite => f.write_str("countably-infinite"),
        }
    }
}

impl Serialize for Lambda {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Lambda::Finite(v) => s.serialize_u64(*v),
            Lambda::CountablyInfinite => s.serialize_str("countably-infinite"),
        }
    }
}

/// An eventually periodic base-3 expansion `0.pre (period)^inf` of a value
/// in `[0, 1]`. Triadic rationals use their infinite form (trailing 2s),
/// except 0 itself.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TernaryExpansion {
    pub preperiod: Vec<u8>,
    pub period: Vec<u8>,
}

fn check_unit(a: &BigRational) -> Result<()> {
    if a.is_negative() || *a > BigRational::one() {
        return Err(Error::param(format!("{a} is outside [0, 1]")));
    }
    Ok(())
}

/// `Some((l, n))` with `a = l / 3^n` in lowest terms, if `a` is triadic.
pub fn as_triadic(a: &BigRational) -> Option<(BigInt, u32)> {
    let mut d = a.denom().clone();
    let three = BigInt::from(3);
    let mut n = 0u32;
    while d > BigInt::one() {
        if !(&d % &three).is_zero() {
            return None;
        }
        d /= &three;
        n += 1;
    }
    Some((a.numer().clone(), n))
}

pub fn ternary_expansion(a: &BigRational) -> Result<TernaryExpansion> {
    check_unit(a)?;
    if a.is_zero() {
        return Ok(TernaryExpansion {
            preperiod: Vec::new(),
            period: vec![0],
        });
    }
    if let Some((ell, n)) = as_triadic(a) {
        // l / 3^n = 0.d_1..d_n with d the n digits of l - 1, then 2s forever.
        let mut x = ell - BigInt::one();
        let mut digits = vec![0u8; n as usize];
        for d in digits.iter_mut().rev() {
            *d = (&x % 3u32).to_u8().expect("digit");
            x /= 3u32;
        }
        return Ok(TernaryExpansion {
            preperiod: digits,
            period: vec![2],
        });
    }
    let q = a.denom().clone();
    let mut r = a.numer().clone();
    let mut seen: HashMap<BigInt, usize> = HashMap::new();
    let mut digits = Vec::new();
    while !seen.contains_key(&r) {
        seen.insert(r.clone(), digits.len());
        let t = &r * 3u32;
        digits.push((&t / &q).to_u8().expect("digit"));
        r = t % &q;
    }
    let start = seen[&r];
    let period = digits.split_off(start);
    Ok(TernaryExpansion {
        preperiod: digits,
        period,
    })
}

/// Exact coordinates `(sum_{a_i=0} 2^-i, sum_{a_i=1} 2^-i, sum_{a_i=2} 2^-i)`.
pub fn eta_inverse(a: &BigRational) -> Result<[BigRational; 3]> {
    let exp = ternary_expansion(a)?;
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let mut coords = [BigRational::zero(), BigRational::zero(), BigRational::zero()];
    let mut w = half.clone();
    for &d in &exp.preperiod {
        coords[d as usize] += &w;
        w *= &half;
    }
    // Each pass over the period scales weights by 2^-p, a geometric series.
    let p = exp.period.len() as i32;
    let scale = BigRational::one() / (BigRational::one() - half.pow(p));
    for &d in &exp.period {
        coords[d as usize] += &w * &scale;
        w *= &half;
    }
    Ok(coords)
}

/// `lambda(l / 3^n)`, the Lex profile of `S(n, 3)` at `l`.
pub fn lambda_triadic(ell: u64, n: u32) -> Result<u64> {
    if n == 0 {
        return if ell <= 1 {
            Ok(0)
        } else {
            Err(Error::param("l/3^0 must lie in [0, 1]"))
        };
    }
    lex_profile_direct(n, 3, ell)
}

pub fn lambda(a: &BigRational) -> Result<Lambda> {
    check_unit(a)?;
    match as_triadic(a) {
        Some((ell, n)) => {
            let ell = ell
                .to_u64()
                .ok_or_else(|| Error::Overflow(format!("numerator of {a}")))?;
            Ok(Lambda::Finite(lambda_triadic(ell, n)?))
        }
        None => Ok(Lambda::CountablyInfinite),
    }
}

/// Renders a rational as `p/q`, or `p` when `q = 1`.
pub fn format_rational(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (p, q) = s.split_once('/').unwrap_or((s, "1"));
    let p: BigInt = p.trim().parse().map_err(|_| Error::param(format!("bad rational {s:?}")))?;
    let q: BigInt = q.trim().parse().map_err(|_| Error::param(format!("bad rational {s:?}")))?;
    if q.is_zero() {
        return Err(Error::param(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(p, q))
}
