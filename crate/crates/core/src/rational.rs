//! Small helpers around `BigRational` vectors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

pub type Q = BigRational;
pub type RVec = Vec<Q>;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qvec(xs: &[i64]) -> RVec {
    xs.iter().map(|&x| q(x)).collect()
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

pub fn sub(a: &[Q], b: &[Q]) -> RVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[Q], b: &[Q]) -> RVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale(s: &Q, a: &[Q]) -> RVec {
    a.iter().map(|x| s * x).collect()
}

pub fn neg(a: &[Q]) -> RVec {
    a.iter().map(|x| -x).collect()
}

pub fn is_zero_vec(a: &[Q]) -> bool {
    a.iter().all(Zero::is_zero)
}

pub fn lcm_of_denominators(a: &[Q]) -> BigInt {
    a.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// Scales a rational vector to a primitive integer vector with the same direction.
/// The zero vector maps to itself.
pub fn primitive_integer(a: &[Q]) -> Vec<BigInt> {
    let l = lcm_of_denominators(a);
    let ints: Vec<BigInt> = a.iter().map(|x| (x * &l).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

/// Parses `3`, `-2/5`, ` 7 / 4 `.
pub fn parse_rational(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Q::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(Q::from_integer),
    }
}

pub fn parse_rational_csv(s: &str) -> Option<RVec> {
    s.split(',').map(parse_rational).collect()
}

pub fn max_abs(a: &[Q]) -> Q {
    a.iter().map(|x| x.abs()).fold(Q::zero(), |m, x| if x > m { x } else { m })
}

/// JSON-friendly integer: a number when it fits in `i64`, otherwise a decimal string.
pub fn int_json(n: &BigInt) -> serde_json::Value {
    match n.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(n.to_string()),
    }
}

/// `[numerator, denominator]`.
pub fn rat_json(x: &Q) -> serde_json::Value {
    serde_json::Value::Array(vec![int_json(x.numer()), int_json(x.denom())])
}

pub fn rvec_json(v: &[Q]) -> serde_json::Value {
    serde_json::Value::Array(v.iter().map(rat_json).collect())
}

/// Reads back `[num, den]` pairs written by [`rat_json`].
pub fn rat_from_json(v: &serde_json::Value) -> Option<Q> {
    let arr = v.as_array()?;
    if arr.len() != 2 {
        return None;
    }
    let parse = |x: &serde_json::Value| -> Option<BigInt> {
        match x {
            serde_json::Value::Number(n) => n.as_i64().map(BigInt::from),
            serde_json::Value::String(s) => s.parse().ok(),
            _ => None,
        }
    };
    let d = parse(&arr[1])?;
    if d.is_zero() {
        return None;
    }
    Some(Q::new(parse(&arr[0])?, d))
}

pub fn rvec_from_json(v: &serde_json::Value) -> Option<RVec> {
    v.as_array()?.iter().map(rat_from_json).collect()
}

/// Serde adapter for rational vectors as `[[num, den], ...]`.
pub fn ser_rvec<S: Serializer>(v: &[Q], s: S) -> Result<S::Ok, S::Error> {
    rvec_json(v).serialize(s)
}

pub fn ser_rat<S: Serializer>(v: &Q, s: S) -> Result<S::Ok, S::Error> {
    rat_json(v).serialize(s)
}

pub fn ser_rvecs<S: Serializer>(v: &[RVec], s: S) -> Result<S::Ok, S::Error> {
    serde_json::Value::Array(v.iter().map(|x| rvec_json(x)).collect()).serialize(s)
}

pub fn ser_int<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    int_json(v).serialize(s)
}

pub fn ser_ints<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    serde_json::Value::Array(v.iter().map(int_json).collect()).serialize(s)
}
