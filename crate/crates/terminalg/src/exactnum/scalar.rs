//! Gaussian rationals: the computable subfield `Q(i)` of the complex numbers.
//!
//! Every scalar in the catalog lies in `Q(i)` once parameters are sampled
//! there, so all zero tests in the crate are exact. Values serialize as
//! strings like `"1/2-3i"`, `"0"`, `"i"` (see [`GaussRat::to_string`] and
//! [`GaussRat::parse`]).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// An exact Gaussian rational `re + im*i` with arbitrary-precision rational
/// parts, stored in lowest terms with positive denominators.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussRat {
    re: BigRational,
    im: BigRational,
}

impl GaussRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRat { re, im }
    }

    pub fn zero() -> Self {
        GaussRat {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }

    pub fn one() -> Self {
        GaussRat {
            re: BigRational::one(),
            im: BigRational::zero(),
        }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussRat {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        GaussRat {
            re: BigRational::from_integer(BigInt::from(n)),
            im: BigRational::zero(),
        }
    }

    /// `p/q` as a real Gaussian rational. Panics if `q == 0`.
    pub fn from_ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        GaussRat {
            re: BigRational::new(BigInt::from(p), BigInt::from(q)),
            im: BigRational::zero(),
        }
    }

    /// `(p + q*i) / r`. Panics if `r == 0`.
    pub fn from_parts(p: i64, q: i64, r: i64) -> Self {
        assert!(r != 0, "zero denominator");
        GaussRat {
            re: BigRational::new(BigInt::from(p), BigInt::from(r)),
            im: BigRational::new(BigInt::from(q), BigInt::from(r)),
        }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRat {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// `re^2 + im^2`, a nonnegative rational; zero iff `self` is zero.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(GaussRat {
            re: &self.re / &n,
            im: -&self.im / &n,
        })
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = GaussRat::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact square root when one exists in `Q(i)`, choosing the branch with
    /// positive real part, else positive imaginary part, else zero.
    pub fn sqrt_exact(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(GaussRat::zero());
        }
        // (p + qi)^2 = a + bi  =>  p^2 - q^2 = a, 2pq = b, p^2 + q^2 = |a+bi|.
        let norm = self.norm_sqr();
        let r = rational_sqrt(&norm)?;
        let two = BigRational::from_integer(BigInt::from(2));
        let p2 = (&self.re + &r) / &two;
        let q2 = (&r - &self.re) / &two;
        let p = rational_sqrt(&p2)?;
        let q = rational_sqrt(&q2)?;
        // Fix the sign of q from 2pq = b.
        let b = &self.im;
        let candidates = [
            GaussRat::new(p.clone(), q.clone()),
            GaussRat::new(p.clone(), -q.clone()),
            GaussRat::new(-p.clone(), q.clone()),
            GaussRat::new(-p, -q),
        ];
        let mut roots: Vec<GaussRat> = candidates
            .into_iter()
            .filter(|c| (&c.re * &c.re - &c.im * &c.im) == self.re && (&c.re * &c.im) * &two == *b)
            .collect();
        roots.dedup();
        roots.into_iter().max_by(|x, y| {
            // Branch rule: positive real part wins, then positive imaginary part.
            (x.re.cmp(&y.re)).then(x.im.cmp(&y.im))
        })
    }

    /// Canonical string form: `"0"`, `"3"`, `"-1/2"`, `"i"`, `"-i"`, `"2/3i"`,
    /// `"1/2-3i"`.
    pub fn format(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        if !self.re.is_zero() {
            s.push_str(&format_rational(&self.re));
        }
        if !self.im.is_zero() {
            if !self.re.is_zero() && self.im.is_positive() {
                s.push('+');
            }
            s.push_str(&format_imag(&self.im));
        }
        s
    }

    /// Parses the canonical form, tolerating spaces and an explicit `0+0i`.
    pub fn parse(input: &str) -> Result<Self, Error> {
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        let mut re: Option<BigRational> = None;
        let mut im: Option<BigRational> = None;
        for (sign, term) in split_signed_terms(&s)? {
            if term.is_empty() {
                return Err(Error::Parse(format!("dangling sign in `{input}`")));
            }
            if let Some(body) = term.strip_suffix('i') {
                let mag = if body.is_empty() {
                    BigRational::one()
                } else {
                    parse_rational(body)?
                };
                let val = if sign { mag } else { -mag };
                if im.replace(val).is_some() {
                    return Err(Error::Parse(format!(
                        "more than one imaginary term in `{input}`"
                    )));
                }
            } else {
                let mag = parse_rational(&term)?;
                let val = if sign { mag } else { -mag };
                if re.replace(val).is_some() {
                    return Err(Error::Parse(format!(
                        "more than one real term in `{input}`"
                    )));
                }
            }
        }
        Ok(GaussRat {
            re: re.unwrap_or_else(BigRational::zero),
            im: im.unwrap_or_else(BigRational::zero),
        })
    }
}

/// Splits `a+b-c` into `[(true,"a"), (true,"b"), (false,"c")]`.
fn split_signed_terms(s: &str) -> Result<Vec<(bool, String)>, Error> {
    let mut out = Vec::new();
    let mut sign = true;
    let mut cur = String::new();
    let mut started = false;
    for c in s.chars() {
        match c {
            '+' | '-' if started && !cur.is_empty() => {
                out.push((sign, std::mem::take(&mut cur)));
                sign = c == '+';
            }
            '+' | '-' if !started || cur.is_empty() => {
                // Leading sign (possibly repeated like `+-` is rejected below).
                if cur.is_empty() && started {
                    return Err(Error::Parse(format!("consecutive signs in `{s}`")));
                }
                sign = c == '+';
                started = true;
            }
            _ => {
                cur.push(c);
                started = true;
            }
        }
    }
    if !cur.is_empty() {
        out.push((sign, cur));
    }
    if out.is_empty() {
        return Err(Error::Parse(format!("no terms in `{s}`")));
    }
    Ok(out)
}

fn parse_rational(s: &str) -> Result<BigRational, Error> {
    if let Some((p, q)) = s.split_once('/') {
        let p = BigInt::from_str(p).map_err(|_| Error::Parse(format!("bad integer `{p}`")))?;
        let q = BigInt::from_str(q).map_err(|_| Error::Parse(format!("bad integer `{q}`")))?;
        if q.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        Ok(BigRational::new(p, q))
    } else {
        let p = BigInt::from_str(s).map_err(|_| Error::Parse(format!("bad integer `{s}`")))?;
        Ok(BigRational::from_integer(p))
    }
}

fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn format_imag(r: &BigRational) -> String {
    if r.is_one() {
        "i".to_string()
    } else if (-r).is_one() {
        "-i".to_string()
    } else {
        format!("{}i", format_rational(r))
    }
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    if r.is_zero() {
        return Some(BigRational::zero());
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format())
    }
}

impl fmt::Debug for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format())
    }
}

impl Default for GaussRat {
    fn default() -> Self {
        GaussRat::zero()
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, |$a:ident, $b:ident| $body:expr) => {
        impl $trait for &GaussRat {
            type Output = GaussRat;
            fn $method(self, other: &GaussRat) -> GaussRat {
                let ($a, $b) = (self, other);
                $body
            }
        }
        impl $trait for GaussRat {
            type Output = GaussRat;
            fn $method(self, other: GaussRat) -> GaussRat {
                (&self).$method(&other)
            }
        }
        impl $trait<&GaussRat> for GaussRat {
            type Output = GaussRat;
            fn $method(self, other: &GaussRat) -> GaussRat {
                (&self).$method(other)
            }
        }
        impl $trait<GaussRat> for &GaussRat {
            type Output = GaussRat;
            fn $method(self, other: GaussRat) -> GaussRat {
                self.$method(&other)
            }
        }
    };
}

binop!(Add, add, |a, b| GaussRat {
    re: &a.re + &b.re,
    im: &a.im + &b.im,
});

binop!(Sub, sub, |a, b| GaussRat {
    re: &a.re - &b.re,
    im: &a.im - &b.im,
});

binop!(Mul, mul, |a, b| GaussRat {
    re: &a.re * &b.re - &a.im * &b.im,
    im: &a.re * &b.im + &a.im * &b.re,
});

binop!(Div, div, |a, b| {
    a * &b.inv().expect("division by zero GaussRat")
});

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GaussRat {
        GaussRat::parse(s).unwrap()
    }

    #[test]
    fn canonical_format_examples() {
        assert_eq!(GaussRat::zero().format(), "0");
        assert_eq!(GaussRat::i().format(), "i");
        assert_eq!(
            (GaussRat::from_ratio(1, 2) - GaussRat::from_int(3) * GaussRat::i()).format(),
            "1/2-3i"
        );
        assert_eq!((-GaussRat::i()).format(), "-i");
        assert_eq!(GaussRat::from_parts(0, 2, 3).format(), "2/3i");
        assert_eq!(GaussRat::from_ratio(-5, 10).format(), "-1/2");
    }

    #[test]
    fn parse_accepts_loose_input() {
        assert_eq!(g("1/2 - 3i"), GaussRat::from_parts(1, -6, 2));
        assert_eq!(g("0+0i"), GaussRat::zero());
        assert_eq!(g("-i"), -GaussRat::i());
        assert_eq!(g("+2"), GaussRat::from_int(2));
        assert!(GaussRat::parse("1+2+3i").is_err());
        assert!(GaussRat::parse("i+i").is_err());
        assert!(GaussRat::parse("1/0").is_err());
    }

    #[test]
    fn roundtrip() {
        for s in ["0", "i", "-i", "1/2-3i", "7", "-2/3+5/7i", "4i"] {
            assert_eq!(g(s).format(), s);
        }
    }

    #[test]
    fn field_ops() {
        let a = g("1/2-3i");
        let inv = a.inv().unwrap();
        assert!((a.clone() * inv).is_one());
        assert!(GaussRat::zero().inv().is_none());
        assert_eq!(g("i") * g("i"), GaussRat::from_int(-1));
    }

    #[test]
    fn sqrt_branches() {
        // 1 - 4*lambda for the Theta-compatible samples {0, 1/2, -2, 1/4}.
        assert_eq!(GaussRat::from_int(1).sqrt_exact().unwrap(), g("1"));
        assert_eq!(GaussRat::from_int(-1).sqrt_exact().unwrap(), g("i"));
        assert_eq!(GaussRat::from_int(9).sqrt_exact().unwrap(), g("3"));
        assert_eq!(GaussRat::zero().sqrt_exact().unwrap(), g("0"));
        // 2i = (1+i)^2.
        assert_eq!(g("2i").sqrt_exact().unwrap(), g("1+i"));
        // 2 is not a square in Q(i).
        assert!(GaussRat::from_int(2).sqrt_exact().is_none());
        // sqrt always squares back.
        for s in ["-9", "1/4", "-2i", "3+4i"] {
            if let Some(r) = g(s).sqrt_exact() {
                assert_eq!(&r * &r, g(s));
            }
        }
    }
}
