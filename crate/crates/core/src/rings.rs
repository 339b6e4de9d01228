//! Exact scalars over prime fields and cyclotomic fields, and the q-number calculus.

use std::fmt;
use std::sync::Arc;

use num::{BigInt, BigRational, One, Zero};
use serde_json::Value;

use crate::error::{Error, Result};

/// A field element in canonical form.
///
/// `Mod(r)` holds a residue `0 <= r < p`. `Cyc(c)` holds the coefficients of the
/// reduced representative (degree below the degree of the cyclotomic polynomial),
/// lowest degree first, with trailing zeros removed so that zero is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Elem {
    Mod(u64),
    Cyc(Vec<BigRational>),
}

#[derive(Debug, PartialEq, Eq)]
enum Kind {
    Prime(u64),
    Cyclotomic { order: usize, modulus: Vec<BigRational> },
}

/// A coefficient field. Cloning is cheap.
#[derive(Clone, Debug)]
pub struct Field(Arc<Kind>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}
impl Eq for Field {}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut k = 2u64;
    while k.saturating_mul(k) <= p {
        if p % k == 0 {
            return false;
        }
        k += 1;
    }
    true
}

type Poly = Vec<BigRational>;

fn trim(mut a: Poly) -> Poly {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Poly {
    let n = a.len().max(b.len());
    let zero = BigRational::zero();
    let out = (0..n)
        .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
        .collect();
    trim(out)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Poly, Poly) {
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut r = trim(a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead = b.last().unwrap().clone();
    let mut quo = vec![BigRational::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() / &lead;
        for (j, bj) in b.iter().enumerate() {
            let t = &c * bj;
            r[shift + j] -= t;
        }
        quo[shift] = c;
        r = trim(r);
    }
    (trim(quo), r)
}

fn cyclotomic_poly(n: usize) -> Poly {
    let mut num: Poly = vec![BigRational::zero(); n + 1];
    num[0] = -BigRational::one();
    num[n] = BigRational::one();
    for d in 1..n {
        if n % d == 0 {
            let (q, r) = poly_divrem(&num, &cyclotomic_poly(d));
            debug_assert!(r.is_empty());
            num = q;
        }
    }
    num
}

fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Field {
    /// The prime field Z/p; fails unless p is prime.
    pub fn prime(p: u64) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p >= 1 << 32 {
            return Err(Error::InvalidField(format!("modulus {p} exceeds 2^32")));
        }
        Ok(Field(Arc::new(Kind::Prime(p))))
    }

    /// The cyclotomic field Q(zeta_n).
    pub fn cyclotomic(n: usize) -> Result<Field> {
        if n == 0 {
            return Err(Error::InvalidField("cyclotomic order must be positive".into()));
        }
        Ok(Field(Arc::new(Kind::Cyclotomic { order: n, modulus: cyclotomic_poly(n) })))
    }

    /// Parses `zmod:p` or `cyclotomic:n`.
    pub fn parse(spec: &str) -> Result<Field> {
        let (kind, arg) = spec
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("field spec `{spec}`: expected zmod:p or cyclotomic:n")))?;
        let n: u64 = arg.trim().parse().map_err(|_| Error::Parse(format!("field spec `{spec}`")))?;
        match kind.trim() {
            "zmod" | "prime" => Field::prime(n),
            "cyclotomic" | "cyc" => Field::cyclotomic(n as usize),
            other => Err(Error::Parse(format!("unknown field kind `{other}`"))),
        }
    }

    pub fn modulus(&self) -> Option<u64> {
        match *self.0 {
            Kind::Prime(p) => Some(p),
            Kind::Cyclotomic { .. } => None,
        }
    }

    pub fn cyclotomic_order(&self) -> Option<usize> {
        match *self.0 {
            Kind::Prime(_) => None,
            Kind::Cyclotomic { order, .. } => Some(order),
        }
    }

    /// Coefficients of the cyclotomic polynomial, lowest degree first.
    pub fn cyclotomic_polynomial(&self) -> Option<&[BigRational]> {
        match &*self.0 {
            Kind::Prime(_) => None,
            Kind::Cyclotomic { modulus, .. } => Some(modulus),
        }
    }

    /// Short textual description such as `zmod:7`.
    pub fn describe(&self) -> String {
        match &*self.0 {
            Kind::Prime(p) => format!("zmod:{p}"),
            Kind::Cyclotomic { order, .. } => format!("cyclotomic:{order}"),
        }
    }

    pub fn zero(&self) -> Elem {
        match *self.0 {
            Kind::Prime(_) => Elem::Mod(0),
            Kind::Cyclotomic { .. } => Elem::Cyc(Vec::new()),
        }
    }

    pub fn one(&self) -> Elem {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Elem {
        match *self.0 {
            Kind::Prime(p) => Elem::Mod(n.rem_euclid(p as i64) as u64),
            Kind::Cyclotomic { .. } => self.from_rational(rat_int(n)),
        }
    }

    pub fn from_rational(&self, r: BigRational) -> Elem {
        match *self.0 {
            Kind::Prime(p) => {
                let m = BigInt::from(p);
                let reduce = |x: &BigInt| -> u64 {
                    let v = ((x % &m) + &m) % &m;
                    v.to_string().parse().unwrap()
                };
                let num = reduce(r.numer());
                let den = reduce(r.denom());
                let den = self.inv(&Elem::Mod(den)).expect("denominator divisible by p");
                self.mul(&Elem::Mod(num), &den)
            }
            Kind::Cyclotomic { .. } => self.reduce(vec![r]),
        }
    }

    /// The primitive root `zeta` of Q(zeta_n). Fails over a prime field.
    pub fn zeta(&self) -> Result<Elem> {
        match *self.0 {
            Kind::Prime(_) => Err(Error::InvalidField("zeta is only defined in cyclotomic fields".into())),
            Kind::Cyclotomic { .. } => Ok(self.reduce(vec![BigRational::zero(), BigRational::one()])),
        }
    }

    /// Element from raw polynomial coefficients (cyclotomic) or a single integer coefficient.
    pub fn from_poly(&self, coeffs: Vec<BigRational>) -> Elem {
        match *self.0 {
            Kind::Prime(_) => {
                let mut acc = self.zero();
                for (k, c) in coeffs.into_iter().enumerate() {
                    assert!(k == 0 || c.is_zero(), "prime field element with positive-degree coefficient");
                    acc = self.add(&acc, &self.from_rational(c));
                }
                acc
            }
            Kind::Cyclotomic { .. } => self.reduce(coeffs),
        }
    }

    fn reduce(&self, coeffs: Vec<BigRational>) -> Elem {
        match &*self.0 {
            Kind::Cyclotomic { modulus, .. } => Elem::Cyc(poly_divrem(&coeffs, modulus).1),
            Kind::Prime(_) => unreachable!(),
        }
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        match a {
            Elem::Mod(r) => *r == 0,
            Elem::Cyc(c) => c.is_empty(),
        }
    }

    pub fn is_one(&self, a: &Elem) -> bool {
        *a == self.one()
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match (a, b, &*self.0) {
            (Elem::Mod(x), Elem::Mod(y), Kind::Prime(p)) => Elem::Mod((x + y) % p),
            (Elem::Cyc(x), Elem::Cyc(y), Kind::Cyclotomic { .. }) => {
                let n = x.len().max(y.len());
                let zero = BigRational::zero();
                let out = (0..n).map(|i| x.get(i).unwrap_or(&zero) + y.get(i).unwrap_or(&zero)).collect();
                Elem::Cyc(trim(out))
            }
            _ => panic!("element does not belong to field {}", self.describe()),
        }
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        match (a, &*self.0) {
            (Elem::Mod(x), Kind::Prime(p)) => Elem::Mod((p - x) % p),
            (Elem::Cyc(x), Kind::Cyclotomic { .. }) => Elem::Cyc(x.iter().map(|c| -c).collect()),
            _ => panic!("element does not belong to field {}", self.describe()),
        }
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        match (a, b, &*self.0) {
            (Elem::Mod(x), Elem::Mod(y), Kind::Prime(p)) => Elem::Mod((x + p - y) % p),
            (Elem::Cyc(x), Elem::Cyc(y), Kind::Cyclotomic { .. }) => Elem::Cyc(poly_sub(x, y)),
            _ => panic!("element does not belong to field {}", self.describe()),
        }
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match (a, b, &*self.0) {
            (Elem::Mod(x), Elem::Mod(y), Kind::Prime(p)) => Elem::Mod(((*x as u128 * *y as u128) % *p as u128) as u64),
            (Elem::Cyc(x), Elem::Cyc(y), Kind::Cyclotomic { modulus, .. }) => {
                if x.is_empty() || y.is_empty() {
                    return Elem::Cyc(Vec::new());
                }
                if x.len() == 1 {
                    return Elem::Cyc(trim(y.iter().map(|c| c * &x[0]).collect()));
                }
                if y.len() == 1 {
                    return Elem::Cyc(trim(x.iter().map(|c| c * &y[0]).collect()));
                }
                Elem::Cyc(poly_divrem(&poly_mul(x, y), modulus).1)
            }
            _ => panic!("element does not belong to field {}", self.describe()),
        }
    }

    /// `acc += a * b`
    pub fn add_mul(&self, acc: &mut Elem, a: &Elem, b: &Elem) {
        if self.is_zero(a) || self.is_zero(b) {
            return;
        }
        match (acc, a, b, &*self.0) {
            (Elem::Mod(z), Elem::Mod(x), Elem::Mod(y), Kind::Prime(p)) => {
                *z = ((*z as u128 + *x as u128 * *y as u128) % *p as u128) as u64;
            }
            (acc, a, b, _) => {
                let t = self.mul(a, b);
                *acc = self.add(acc, &t);
            }
        }
    }

    pub fn inv(&self, a: &Elem) -> Result<Elem> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        match (a, &*self.0) {
            (Elem::Mod(x), Kind::Prime(p)) => {
                let (mut r0, mut r1) = (*p as i128, *x as i128);
                let (mut s0, mut s1) = (0i128, 1i128);
                while r1 != 0 {
                    let q = r0 / r1;
                    (r0, r1) = (r1, r0 - q * r1);
                    (s0, s1) = (s1, s0 - q * s1);
                }
                Ok(Elem::Mod(s0.rem_euclid(*p as i128) as u64))
            }
            (Elem::Cyc(x), Kind::Cyclotomic { modulus, .. }) => {
                let (mut r0, mut r1) = (modulus.clone(), x.clone());
                let (mut s0, mut s1): (Poly, Poly) = (Vec::new(), vec![BigRational::one()]);
                while !r1.is_empty() {
                    let (q, r) = poly_divrem(&r0, &r1);
                    let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
                    r0 = r1;
                    r1 = r;
                    s0 = s1;
                    s1 = s2;
                }
                // r0 is a nonzero constant because the cyclotomic polynomial is irreducible.
                if r0.len() != 1 {
                    return Err(Error::DivisionByZero);
                }
                let c = r0[0].clone();
                let scaled: Poly = s0.iter().map(|v| v / &c).collect();
                Ok(self.reduce(scaled))
            }
            _ => panic!("element does not belong to field {}", self.describe()),
        }
    }

    pub fn div(&self, a: &Elem, b: &Elem) -> Result<Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// `a^k`; negative exponents require `a` to be invertible.
    pub fn pow(&self, a: &Elem, k: i64) -> Result<Elem> {
        let mut base = if k < 0 { self.inv(a)? } else { a.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        Ok(acc)
    }

    /// Parses a scalar literal: an integer, an "a/b" string, or (cyclotomic) a coefficient array.
    pub fn parse_json(&self, v: &Value) -> Result<Elem> {
        match v {
            Value::Number(_) | Value::String(_) => Ok(self.from_rational(parse_rational(v)?)),
            Value::Array(items) => {
                if self.modulus().is_some() && items.len() > 1 {
                    return Err(Error::Parse("coefficient arrays need a cyclotomic field".into()));
                }
                let coeffs = items.iter().map(parse_rational).collect::<Result<Vec<_>>>()?;
                Ok(self.from_poly(coeffs))
            }
            _ => Err(Error::Parse(format!("not a scalar literal: {v}"))),
        }
    }

    /// Parses the CLI form of q: an integer, `a/b`, or `zeta` / `zeta^k`.
    pub fn parse_scalar(&self, s: &str) -> Result<Elem> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("zeta") {
            let z = self.zeta()?;
            let k: i64 = match rest.strip_prefix('^') {
                Some(e) => e.parse().map_err(|_| Error::Parse(format!("scalar `{s}`")))?,
                None if rest.is_empty() => 1,
                None => return Err(Error::Parse(format!("scalar `{s}`"))),
            };
            return self.pow(&z, k);
        }
        self.from_rational_str(s)
    }

    fn from_rational_str(&self, s: &str) -> Result<Elem> {
        Ok(self.from_rational(parse_rational(&Value::String(s.to_string()))?))
    }

    pub fn to_json(&self, a: &Elem) -> Value {
        match a {
            Elem::Mod(r) => Value::from(*r),
            Elem::Cyc(c) => Value::Array(c.iter().map(rational_json).collect()),
        }
    }

    pub fn format(&self, a: &Elem) -> String {
        match a {
            Elem::Mod(r) => r.to_string(),
            Elem::Cyc(c) if c.is_empty() => "0".to_string(),
            Elem::Cyc(c) => {
                let mut parts = Vec::new();
                for (k, x) in c.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    let coeff = if x.is_integer() { x.numer().to_string() } else { format!("({x})") };
                    parts.push(match k {
                        0 => coeff,
                        1 if x.is_one() => "z".to_string(),
                        1 => format!("{coeff}*z"),
                        _ if x.is_one() => format!("z^{k}"),
                        _ => format!("{coeff}*z^{k}"),
                    });
                }
                parts.join(" + ")
            }
        }
    }
}

fn rational_json(r: &BigRational) -> Value {
    if r.is_integer() {
        if let Ok(n) = r.numer().to_string().parse::<i64>() {
            return Value::from(n);
        }
    }
    Value::String(r.to_string())
}

fn parse_rational(v: &Value) -> Result<BigRational> {
    let bad = || Error::Parse(format!("not a rational literal: {v}"));
    match v {
        Value::Number(n) => n.as_i64().map(rat_int).ok_or_else(bad),
        Value::String(s) => {
            let s = s.trim();
            let (num, den) = match s.split_once('/') {
                Some((a, b)) => (a.trim(), b.trim()),
                None => (s, "1"),
            };
            let num: BigInt = num.parse().map_err(|_| bad())?;
            let den: BigInt = den.parse().map_err(|_| bad())?;
            if den.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(BigRational::new(num, den))
        }
        _ => Err(bad()),
    }
}

/// Which of the two standing assumptions hold for a context.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Assumptions {
    /// `[N]_q = 0`
    pub a0: bool,
    /// `a0` and `[n]_q` invertible for `1 <= n <= N-1`
    pub a1: bool,
    /// `q^N = 1`
    pub q_pow_n_is_one: bool,
}

/// A field together with a scalar `q` and the nilpotency order `N`.
#[derive(Clone, Debug, PartialEq)]
pub struct QContext {
    field: Field,
    q: Elem,
    order: usize,
}

impl QContext {
    pub fn new(field: Field, q: Elem, order: usize) -> Result<QContext> {
        if order < 2 {
            return Err(Error::OutOfRange(format!("N = {order}, need N >= 2")));
        }
        let q = match (&q, field.modulus()) {
            (Elem::Mod(r), Some(p)) => Elem::Mod(r % p),
            (Elem::Cyc(_), None) => q,
            _ => return Err(Error::InvalidField("q does not belong to the field".into())),
        };
        Ok(QContext { field, q, order })
    }

    /// Prime field context with integer q.
    pub fn prime(p: u64, q: i64, order: usize) -> Result<QContext> {
        let field = Field::prime(p)?;
        let q = field.from_i64(q);
        QContext::new(field, q, order)
    }

    /// Context of ordinary complexes: N = 2 and q = -1.
    pub fn ordinary(field: &Field) -> QContext {
        QContext { field: field.clone(), q: field.from_i64(-1), order: 2 }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn q(&self) -> &Elem {
        &self.q
    }
    pub fn order(&self) -> usize {
        self.order
    }

    /// Same field and N with q replaced.
    pub fn with_q(&self, q: Elem) -> QContext {
        QContext { field: self.field.clone(), q, order: self.order }
    }

    /// Same field and q with N replaced.
    pub fn with_order(&self, order: usize) -> Result<QContext> {
        QContext::new(self.field.clone(), self.q.clone(), order)
    }

    /// The context with q replaced by its inverse.
    pub fn inverse(&self) -> Result<QContext> {
        Ok(self.with_q(self.field.inv(&self.q)?))
    }

    pub fn q_pow(&self, k: i64) -> Result<Elem> {
        self.field.pow(&self.q, k)
    }

    /// `q^k` for k >= 0 (never fails).
    pub fn q_pow_nat(&self, k: usize) -> Elem {
        self.field.pow(&self.q, k as i64).expect("nonnegative exponent")
    }

    /// `[n]_q = 1 + q + ... + q^{n-1}`
    pub fn q_number(&self, n: usize) -> Elem {
        let f = &self.field;
        let mut acc = f.zero();
        let mut power = f.one();
        for _ in 0..n {
            acc = f.add(&acc, &power);
            power = f.mul(&power, &self.q);
        }
        acc
    }

    /// `[n]_q! = [1]_q [2]_q ... [n]_q`, with `[0]_q! = 1`.
    pub fn q_factorial(&self, n: usize) -> Elem {
        let f = &self.field;
        (1..=n).fold(f.one(), |acc, k| f.mul(&acc, &self.q_number(k)))
    }

    /// Gaussian binomial by the recursion `[n,m] + q^{m+1}[n,m+1] = [n+1,m+1]`.
    pub fn q_binomial(&self, n: usize, m: usize) -> Result<Elem> {
        if m > n {
            return Err(Error::OutOfRange(format!("q-binomial [{n}, {m}]")));
        }
        Ok(self.q_binomial_row(n).swap_remove(m))
    }

    /// The row `[n,0], ..., [n,n]`.
    pub fn q_binomial_row(&self, n: usize) -> Vec<Elem> {
        let f = &self.field;
        let mut row = vec![f.one()];
        for k in 0..n {
            let mut next = vec![f.one(); k + 2];
            for m in 0..k {
                let t = f.mul(&self.q_pow_nat(m + 1), &row[m + 1]);
                next[m + 1] = f.add(&row[m], &t);
            }
            row = next;
        }
        row
    }

    pub fn assumptions(&self) -> Assumptions {
        let f = &self.field;
        let a0 = f.is_zero(&self.q_number(self.order));
        let a1 = a0 && (1..self.order).all(|n| !f.is_zero(&self.q_number(n)));
        let q_pow_n_is_one = f.is_one(&self.q_pow_nat(self.order));
        Assumptions { a0, a1, q_pow_n_is_one }
    }

    pub fn require_a0(&self) -> Result<()> {
        if self.assumptions().a0 {
            Ok(())
        } else {
            Err(Error::AssumptionViolation(format!("[{}]_q != 0 for q = {}", self.order, self.field.format(&self.q))))
        }
    }

    pub fn require_a1(&self) -> Result<()> {
        let a = self.assumptions();
        if a.a1 {
            Ok(())
        } else if !a.a0 {
            self.require_a0()
        } else {
            Err(Error::AssumptionViolation(format!(
                "some [n]_q with 1 <= n < {} is not invertible for q = {}",
                self.order,
                self.field.format(&self.q)
            )))
        }
    }

    /// Parses `{"field": {"prime": p} | {"cyclotomic": n}, "q": literal, "N": n}`.
    pub fn from_json(v: &Value) -> Result<QContext> {
        let fv = v.get("field").ok_or_else(|| Error::Parse("context: missing `field`".into()))?;
        let field = if let Some(p) = fv.get("prime") {
            Field::prime(p.as_u64().ok_or_else(|| Error::Parse("context: bad prime".into()))?)?
        } else if let Some(n) = fv.get("cyclotomic") {
            Field::cyclotomic(n.as_u64().ok_or_else(|| Error::Parse("context: bad cyclotomic order".into()))? as usize)?
        } else if let Some(s) = fv.as_str() {
            Field::parse(s)?
        } else {
            return Err(Error::Parse("context: field must be {\"prime\": p} or {\"cyclotomic\": n}".into()));
        };
        let q = match v.get("q") {
            Some(Value::String(s)) if s.starts_with("zeta") => field.parse_scalar(s)?,
            Some(q) => field.parse_json(q)?,
            None => return Err(Error::Parse("context: missing `q`".into())),
        };
        let order = v
            .get("N")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("context: missing `N`".into()))? as usize;
        QContext::new(field, q, order)
    }

    pub fn to_json(&self) -> Value {
        let field = match (self.field.modulus(), self.field.cyclotomic_order()) {
            (Some(p), _) => serde_json::json!({ "prime": p }),
            (_, Some(n)) => serde_json::json!({ "cyclotomic": n }),
            _ => unreachable!(),
        };
        serde_json::json!({ "field": field, "q": self.field.to_json(&self.q), "N": self.order })
    }
}

impl fmt::Display for QContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} q={} N={}", self.field.describe(), self.field.format(&self.q), self.order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z7() -> QContext {
        QContext::prime(7, 2, 3).unwrap()
    }

    fn cyc3() -> QContext {
        let f = Field::cyclotomic(3).unwrap();
        let z = f.zeta().unwrap();
        QContext::new(f, z, 3).unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn primality_is_checked() {
        assert_eq!(Field::prime(9), Err(Error::NotPrime(9)));
        assert!(Field::prime(11).is_ok());
    }

    #[test]
    fn cyclotomic_polynomials() {
        // Phi_1 = x - 1, Phi_3 = x^2 + x + 1, Phi_4 = x^2 + 1, Phi_6 = x^2 - x + 1, Phi_12 = x^4 - x^2 + 1
        let ints = |v: &[i64]| v.iter().map(|&c| rat(c, 1)).collect::<Vec<_>>();
        assert_eq!(cyclotomic_poly(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_poly(3), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_poly(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn q_numbers_mod_seven() {
        let c = z7();
        let f = c.field();
        assert_eq!(c.q_number(0), f.zero());
        assert_eq!(c.q_number(3), f.zero());
        assert_eq!(c.q_factorial(1), f.one());
        assert_eq!(c.q_factorial(2), f.from_i64(3));
        let a = c.assumptions();
        assert!(a.a0 && a.a1 && a.q_pow_n_is_one);
    }

    #[test]
    fn q_equal_one_mod_n() {
        let c = QContext::prime(5, 1, 5).unwrap();
        assert_eq!(c.q_number(4), c.field().from_i64(4));
        assert!(c.assumptions().a1);
        let c = QContext::prime(3, 1, 3).unwrap();
        assert!(c.assumptions().a1);
    }

    #[test]
    fn characteristic_zero_fails_a0() {
        let f = Field::cyclotomic(3).unwrap();
        let c = QContext::new(f.clone(), f.one(), 3).unwrap();
        let a = c.assumptions();
        assert!(!a.a0 && !a.a1);
        assert!(matches!(c.require_a1(), Err(Error::AssumptionViolation(_))));
    }

    #[test]
    fn cyclotomic_factorial() {
        let c = cyc3();
        let f = c.field();
        let expected = f.add(&f.one(), &f.zeta().unwrap());
        assert_eq!(c.q_factorial(2), expected);
        assert!(c.assumptions().a1);
    }

    #[test]
    fn q_binomial_boundary_and_small_values() {
        let c = z7();
        let f = c.field();
        for n in 0..6 {
            assert_eq!(c.q_binomial(n, 0).unwrap(), f.one());
            assert_eq!(c.q_binomial(n, n).unwrap(), f.one());
        }
        assert_eq!(c.q_binomial(2, 1).unwrap(), f.add(&f.one(), c.q()));
        assert!(c.q_binomial(2, 3).is_err());
        for m in 1..3 {
            assert!(f.is_zero(&c.q_binomial(3, m).unwrap()));
        }
    }

    #[test]
    fn q_binomial_vanishes_inside_row_n_for_cyclotomic() {
        let c = cyc3();
        for m in 1..3 {
            assert!(c.field().is_zero(&c.q_binomial(3, m).unwrap()));
        }
    }

    #[test]
    fn inverse_in_q_zeta5() {
        let f = Field::cyclotomic(5).unwrap();
        let x = f.from_poly(vec![rat(2, 3), rat(-1, 1), rat(0, 1), rat(5, 7)]);
        let y = f.inv(&x).unwrap();
        assert_eq!(f.mul(&x, &y), f.one());
        assert_eq!(f.pow(&f.zeta().unwrap(), 5).unwrap(), f.one());
    }

    #[test]
    fn json_literals() {
        let f = Field::cyclotomic(3).unwrap();
        let v: Value = serde_json::json!([1, "1/2"]);
        let e = f.parse_json(&v).unwrap();
        assert_eq!(f.to_json(&e), v);
        let ctx = QContext::from_json(&serde_json::json!({"field": {"prime": 7}, "q": 2, "N": 3})).unwrap();
        assert_eq!(ctx, z7());
        assert_eq!(QContext::from_json(&ctx.to_json()).unwrap(), ctx);
        let ctx = QContext::from_json(&serde_json::json!({"field": {"cyclotomic": 3}, "q": [0, 1], "N": 3})).unwrap();
        assert_eq!(ctx, cyc3());
        assert_eq!(f.from_rational(rat(1, 2)), f.parse_scalar("1/2").unwrap());
        assert_eq!(Field::prime(7).unwrap().parse_scalar("1/2").unwrap(), Elem::Mod(4));
    }
}
