//! Univariate polynomials and rational functions in `t` over the Gaussian
//! rationals. These carry the transported structure constants `c_{ij}^k(t)`
//! whose limits at `t -> 0` certify degenerations.

use std::fmt;

use super::scalar::GaussRat;
use crate::error::Error;

/// Dense polynomial in `t`; `coeffs[k]` is the coefficient of `t^k` and the
/// last stored coefficient is nonzero (the zero polynomial stores nothing).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    coeffs: Vec<GaussRat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(GaussRat::one())
    }

    pub fn constant(c: GaussRat) -> Self {
        Poly::from_coeffs(vec![c])
    }

    pub fn t() -> Self {
        Poly::from_coeffs(vec![GaussRat::zero(), GaussRat::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<GaussRat>) -> Self {
        while coeffs.last().is_some_and(GaussRat::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[GaussRat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Order of vanishing at `t = 0`; `None` for the zero polynomial.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, x: &GaussRat) -> GaussRat {
        let mut acc = GaussRat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![GaussRat::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] = &out[i] + c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] = &out[i] + c;
        }
        Poly::from_coeffs(out)
    }

    pub fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![GaussRat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn scale(&self, c: &GaussRat) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![GaussRat::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Euclidean division: returns `(quotient, remainder)`.
    pub fn divrem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut quo =
            vec![GaussRat::zero(); self.coeffs.len().saturating_sub(divisor.coeffs.len()) + 1];
        let dlead = divisor.coeffs.last().unwrap();
        let dinv = dlead.inv().unwrap();
        while !rem.is_zero() && rem.coeffs.len() >= divisor.coeffs.len() {
            let shift = rem.coeffs.len() - divisor.coeffs.len();
            let factor = rem.coeffs.last().unwrap() * &dinv;
            quo[shift] = factor.clone();
            rem = rem.sub(&divisor.scale(&factor).shift(shift));
        }
        (Poly::from_coeffs(quo), rem)
    }

    /// Monic gcd via the Euclidean algorithm.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }

    fn make_monic(&self) -> Poly {
        match self.coeffs.last() {
            None => Poly::zero(),
            Some(lead) => self.scale(&lead.inv().unwrap()),
        }
    }
}

/// The possible behaviours of a rational function at `t = 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LimitAtZero {
    Finite(GaussRat),
    Diverges,
    /// Only reachable through a non-reduced construction; reduced rational
    /// functions always land in one of the other two variants.
    Indeterminate,
}

/// A reduced rational function `num/den` in `t`: the denominator is monic and
/// nonzero, and `gcd(num, den) = 1`.
#[derive(Clone, PartialEq, Eq)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    pub fn new(num: Poly, den: Poly) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::Parse("zero denominator in rational function".into()));
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.divrem(&g).0, den.divrem(&g).0)
        };
        // Normalize the denominator to be monic.
        let lead = den.coeffs.last().unwrap().clone();
        let inv = lead.inv().unwrap();
        Ok(RatFun {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    pub fn zero() -> Self {
        RatFun {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        RatFun {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    pub fn constant(c: GaussRat) -> Self {
        RatFun {
            num: Poly::constant(c),
            den: Poly::one(),
        }
    }

    pub fn t() -> Self {
        RatFun {
            num: Poly::t(),
            den: Poly::one(),
        }
    }

    /// `t^k` for any integer `k`, negative exponents included.
    pub fn t_pow(k: i64) -> Self {
        if k >= 0 {
            RatFun {
                num: Poly::one().shift(k as usize),
                den: Poly::one(),
            }
        } else {
            RatFun {
                num: Poly::one(),
                den: Poly::one().shift((-k) as usize),
            }
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFun {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.degree().unwrap_or(0) == 0 && self.den.degree() == Some(0)
    }

    /// The constant value, when [`RatFun::is_constant`] holds.
    pub fn as_constant(&self) -> Option<GaussRat> {
        if self.is_zero() {
            Some(GaussRat::zero())
        } else if self.is_constant() {
            Some(&self.num.coeffs[0] / &self.den.coeffs[0])
        } else {
            None
        }
    }

    pub fn add(&self, other: &RatFun) -> RatFun {
        RatFun::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
        .unwrap()
    }

    pub fn sub(&self, other: &RatFun) -> RatFun {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RatFun {
        RatFun {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &RatFun) -> RatFun {
        RatFun::new(self.num.mul(&other.num), self.den.mul(&other.den)).unwrap()
    }

    pub fn inv(&self) -> Option<RatFun> {
        if self.is_zero() {
            None
        } else {
            Some(RatFun::new(self.den.clone(), self.num.clone()).unwrap())
        }
    }

    pub fn div(&self, other: &RatFun) -> Option<RatFun> {
        other.inv().map(|inv| self.mul(&inv))
    }

    /// Valuation at `t = 0`: order of zero (negative for poles); `None` for
    /// the zero function.
    pub fn valuation(&self) -> Option<i64> {
        let vn = self.num.valuation()? as i64;
        let vd = self.den.valuation().expect("denominator nonzero") as i64;
        Some(vn - vd)
    }

    /// Exact limit at `t -> 0` of a reduced rational function.
    pub fn limit_at_zero(&self) -> LimitAtZero {
        if self.is_zero() {
            return LimitAtZero::Finite(GaussRat::zero());
        }
        let zero = GaussRat::zero();
        let den0 = self.den.eval(&zero);
        if !den0.is_zero() {
            return LimitAtZero::Finite(&self.num.eval(&zero) / &den0);
        }
        // Reduced, so t | den implies t does not divide num.
        if self.num.eval(&zero).is_zero() {
            LimitAtZero::Indeterminate
        } else {
            LimitAtZero::Diverges
        }
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = format_poly(&self.num);
        if self.den.degree() == Some(0) {
            write!(f, "{num}")
        } else {
            write!(f, "({num})/({})", format_poly(&self.den))
        }
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn format_poly(p: &Poly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut parts = Vec::new();
    for (k, c) in p.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let coeff = if k == 0 {
            c.format()
        } else if c.is_one() {
            String::new()
        } else {
            // Mixed or fractional coefficients get parens so the term list
            // reparses unambiguously (a bare `/` would read as division).
            let s = c.format();
            if s[1..].contains('+') || s[1..].contains('-') || s.contains('/') {
                format!("({s})")
            } else {
                s
            }
        };
        let var = match k {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{k}"),
        };
        parts.push(format!("{coeff}{var}"));
    }
    let mut out = String::new();
    for (idx, part) in parts.iter().enumerate() {
        if idx > 0 && !part.starts_with('-') {
            out.push('+');
        }
        out.push_str(part);
    }
    out
}

/// Parses a Laurent-polynomial string such as `"t^-1 + 2t"`, `"1/2"`,
/// `"(1-2i)t^3 - t"` into a rational function. Complex coefficients with both
/// parts must be parenthesized.
pub fn parse_laurent(input: &str) -> Result<RatFun, Error> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty Laurent string".into()));
    }
    let mut acc = RatFun::zero();
    for (sign, term) in split_terms_depth0(&s)? {
        let t = parse_laurent_term(&term)?;
        acc = if sign { acc.add(&t) } else { acc.sub(&t) };
    }
    Ok(acc)
}

/// Parses `num` or `num/den` where both sides are Laurent strings; parens
/// around either side are allowed: `"(t^2+3t)/t"`.
pub fn parse_ratfun(input: &str) -> Result<RatFun, Error> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if let Some(idx) = top_level_slash(&s) {
        let (n, d) = s.split_at(idx);
        let d = &d[1..];
        let num = parse_laurent(strip_parens(n))?;
        let den = parse_laurent(strip_parens(d))?;
        num.div(&den)
            .ok_or_else(|| Error::Parse(format!("zero denominator in `{input}`")))
    } else {
        parse_laurent(&s)
    }
}

/// Locates a `/` at paren depth 0 that separates numerator from denominator,
/// as opposed to a `/` inside a rational coefficient like `1/2`. A slash is a
/// division when its left side mentions `t` or either side is parenthesized;
/// this keeps `1/2t` meaning `(1/2)t` while `(1+t)/2` and `t/2` divide.
fn top_level_slash(s: &str) -> Option<usize> {
    let mut depth = 0usize;
    let mut candidate = None;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            '/' if depth == 0 => {
                let left = &s[..i];
                let right = &s[i + 1..];
                if left.contains('t') || left.contains('(') || right.starts_with('(') {
                    candidate = Some(i);
                }
            }
            _ => {}
        }
    }
    candidate
}

fn strip_parens(s: &str) -> &str {
    let t = s.trim();
    if t.starts_with('(') && t.ends_with(')') {
        // Only strip if the parens actually match each other.
        let mut depth = 0i64;
        for (i, c) in t.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => {
                    depth -= 1;
                    if depth == 0 && i + 1 != t.len() {
                        return t;
                    }
                }
                _ => {}
            }
        }
        &t[1..t.len() - 1]
    } else {
        t
    }
}

fn split_terms_depth0(s: &str) -> Result<Vec<(bool, String)>, Error> {
    let mut out = Vec::new();
    let mut sign = true;
    let mut cur = String::new();
    let mut depth = 0usize;
    let mut prev: Option<char> = None;
    for c in s.chars() {
        match c {
            '(' => {
                depth += 1;
                cur.push(c);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                cur.push(c);
            }
            '+' | '-' if depth == 0 && prev != Some('^') && !cur.is_empty() => {
                out.push((sign, std::mem::take(&mut cur)));
                sign = c == '+';
            }
            '+' | '-' if depth == 0 && prev != Some('^') && cur.is_empty() => {
                sign = if prev.is_none() {
                    c == '+'
                } else {
                    return Err(Error::Parse(format!("consecutive signs in `{s}`")));
                };
            }
            _ => cur.push(c),
        }
        prev = Some(c);
    }
    if cur.is_empty() {
        return Err(Error::Parse(format!("dangling sign in `{s}`")));
    }
    out.push((sign, cur));
    Ok(out)
}

fn parse_laurent_term(term: &str) -> Result<RatFun, Error> {
    // term := coeff? '*'? ('t' ('^' int)?)?
    let (coeff_str, var_str) = match term.find('t') {
        // A 't' inside parentheses belongs to a coefficient only if the parens
        // close after it; coefficients cannot contain 't', so split at the
        // first 't' at depth 0.
        Some(_) => {
            let mut depth = 0usize;
            let mut split_at = None;
            for (i, c) in term.char_indices() {
                match c {
                    '(' => depth += 1,
                    ')' => depth = depth.saturating_sub(1),
                    't' if depth == 0 => {
                        split_at = Some(i);
                        break;
                    }
                    _ => {}
                }
            }
            match split_at {
                Some(i) => (&term[..i], &term[i..]),
                None => (term, ""),
            }
        }
        None => (term, ""),
    };
    let coeff_str = coeff_str.trim_end_matches('*');
    let coeff = if coeff_str.is_empty() {
        GaussRat::one()
    } else {
        GaussRat::parse(strip_parens(coeff_str))?
    };
    let power: i64 = if var_str.is_empty() {
        0
    } else if var_str == "t" {
        1
    } else if let Some(rest) = var_str.strip_prefix("t^") {
        rest.parse()
            .map_err(|_| Error::Parse(format!("bad exponent in `{term}`")))?
    } else {
        return Err(Error::Parse(format!("bad term `{term}`")));
    };
    Ok(RatFun::constant(coeff).mul(&RatFun::t_pow(power)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> GaussRat {
        GaussRat::from_int(n)
    }

    #[test]
    fn limits() {
        // t^3 * 5 -> 0.
        let f = RatFun::constant(q(5)).mul(&RatFun::t_pow(3));
        assert_eq!(f.limit_at_zero(), LimitAtZero::Finite(q(0)));
        // 1/t diverges.
        assert_eq!(RatFun::t_pow(-1).limit_at_zero(), LimitAtZero::Diverges);
        // (t^2 + 3t)/t -> 3 after cancellation.
        let f = parse_ratfun("(t^2+3t)/t").unwrap();
        assert_eq!(f.limit_at_zero(), LimitAtZero::Finite(q(3)));
        assert_eq!(f.valuation(), Some(0));
        // Polynomial limit agrees with evaluation.
        let p = parse_laurent("2t^2 - t + 7").unwrap();
        assert_eq!(p.limit_at_zero(), LimitAtZero::Finite(q(7)));
    }

    #[test]
    fn reduction_invariants() {
        let f = RatFun::new(
            Poly::from_coeffs(vec![q(0), q(2), q(2)]), // 2t + 2t^2
            Poly::from_coeffs(vec![q(0), q(4)]),       // 4t
        )
        .unwrap();
        // Reduces to (1 + t)/2.
        assert_eq!(f, parse_ratfun("(1+t)/2").unwrap());
        assert!(f.num().gcd(f.den()).degree() == Some(0));
    }

    #[test]
    fn laurent_parsing() {
        let f = parse_laurent("t^-1 + 2t").unwrap();
        let g = RatFun::t_pow(-1).add(&RatFun::constant(q(2)).mul(&RatFun::t()));
        assert_eq!(f, g);
        assert_eq!(parse_laurent("i").unwrap(), RatFun::constant(GaussRat::i()));
        let h = parse_laurent("(1-2i)t^3 - t").unwrap();
        assert_eq!(
            h,
            RatFun::constant(GaussRat::parse("1-2i").unwrap())
                .mul(&RatFun::t_pow(3))
                .sub(&RatFun::t())
        );
        assert_eq!(
            parse_laurent("2*t^2").unwrap(),
            RatFun::constant(q(2)).mul(&RatFun::t_pow(2))
        );
        assert!(parse_laurent("").is_err());
        assert!(parse_laurent("t^").is_err());
    }

    #[test]
    fn arithmetic_roundtrip() {
        let a = parse_ratfun("(t^2+1)/(t-1)").unwrap();
        let b = parse_ratfun("t").unwrap();
        let s = a.add(&b).sub(&b);
        assert_eq!(s, a);
        let p = a.mul(&b).div(&b).unwrap();
        assert_eq!(p, a);
    }
}
