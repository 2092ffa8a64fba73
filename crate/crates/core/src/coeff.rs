//! Exact coefficient fields: the rationals and rational functions over the
//! rationals in a list of parameters.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

/// Arithmetic of an exact field of characteristic zero.
pub trait Field: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;
    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }
    fn from_rational(q: &Rational) -> Self;
    fn from_i64(v: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(v)))
    }
    /// The `index`-th transcendental parameter, if the field has one.
    fn parameter(index: usize) -> Option<Self>;
    /// The value as a rational number, when the element is constant.
    fn as_rational(&self) -> Option<Rational>;
    /// Text form; `params` names the transcendental parameters.
    fn render(&self, params: &[String]) -> String;
    /// Whether the rendered form needs parentheses as a factor.
    fn is_compound(&self) -> bool;
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        assert!(!Zero::is_zero(self), "inverse of zero");
        self.recip()
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn parameter(_index: usize) -> Option<Self> {
        None
    }
    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
    fn render(&self, _params: &[String]) -> String {
        self.to_string()
    }
    fn is_compound(&self) -> bool {
        false
    }
}

/// Sparse polynomial over the rationals in anonymous parameters `p0, p1, ...`.
///
/// Exponent vectors are stored without trailing zeros, so the map's key order
/// is the lexicographic monomial order and the last entry is the leading term.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ParamPoly {
    terms: BTreeMap<Vec<u32>, Rational>,
}

fn trim(mut e: Vec<u32>) -> Vec<u32> {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

fn exp_at(e: &[u32], i: usize) -> u32 {
    e.get(i).copied().unwrap_or(0)
}

impl ParamPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !Zero::is_zero(&c) {
            terms.insert(Vec::new(), c);
        }
        Self { terms }
    }

    pub fn var(index: usize) -> Self {
        let mut e = vec![0; index + 1];
        e[index] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(e, <Rational as One>::one());
        Self { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(trim(e), c);
        }
        p
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rational) {
        if Zero::is_zero(&c) {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v += c;
                if Zero::is_zero(v) {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    /// Constant value, if the polynomial has no parameter dependence.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(<Rational as Zero>::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    fn leading(&self) -> Option<(&Vec<u32>, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &other.terms {
            r.add_term(e.clone(), c.clone());
        }
        r
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut r = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let n = e1.len().max(e2.len());
                let e: Vec<u32> = (0..n).map(|i| exp_at(e1, i) + exp_at(e2, i)).collect();
                r.add_term(e, c1 * c2);
            }
        }
        r
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if Zero::is_zero(c) {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (de, dc) = divisor.leading()?;
        let (de, dc) = (de.clone(), dc.clone());
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((re, rc)) = rem.leading() {
            let n = re.len().max(de.len());
            if (0..n).any(|i| exp_at(re, i) < exp_at(&de, i)) {
                return None;
            }
            let qe: Vec<u32> = (0..n).map(|i| exp_at(re, i) - exp_at(&de, i)).collect();
            let t = Self::from_terms([(qe, rc / &dc)]);
            rem = rem.sub(&t.mul(divisor));
            quot = quot.add(&t);
        }
        Some(quot)
    }

    /// Parameters that actually occur.
    fn support(&self) -> Vec<usize> {
        let n = self.terms.keys().map(Vec::len).max().unwrap_or(0);
        (0..n)
            .filter(|&i| self.terms.keys().any(|e| exp_at(e, i) > 0))
            .collect()
    }

    fn min_exponents(&self) -> Vec<u32> {
        let n = self.terms.keys().map(Vec::len).max().unwrap_or(0);
        (0..n)
            .map(|i| self.terms.keys().map(|e| exp_at(e, i)).min().unwrap_or(0))
            .collect()
    }

    fn shift_down(&self, m: &[u32]) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| {
            let n = e.len().max(m.len());
            (
                (0..n).map(|i| exp_at(e, i) - exp_at(m, i)).collect(),
                c.clone(),
            )
        }))
    }

    fn to_dense(&self, var: usize) -> Vec<Rational> {
        let deg = self.terms.keys().map(|e| exp_at(e, var)).max().unwrap_or(0) as usize;
        let mut v = vec![<Rational as Zero>::zero(); deg + 1];
        for (e, c) in &self.terms {
            v[exp_at(e, var) as usize] += c;
        }
        v
    }

    fn from_dense(var: usize, coeffs: &[Rational]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(k, c)| {
            let mut e = vec![0; var + 1];
            e[var] = k as u32;
            (e, c.clone())
        }))
    }

    pub fn evaluate(&self, values: &[Rational]) -> Rational {
        let mut acc = <Rational as Zero>::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t *= num_traits::pow(values[i].clone(), k as usize);
                }
            }
            acc += t;
        }
        acc
    }

    pub fn render(&self, params: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| {
                    let name = params.get(i).cloned().unwrap_or_else(|| format!("p{i}"));
                    if p == 1 {
                        name
                    } else {
                        format!("{name}^{p}")
                    }
                })
                .collect();
            if mono.is_empty() {
                out.push_str(&abs.to_string());
            } else {
                if !One::is_one(&abs) {
                    out.push_str(&abs.to_string());
                    out.push('*');
                }
                out.push_str(&mono.join("*"));
            }
        }
        out
    }
}

fn dense_trim(v: &mut Vec<Rational>) {
    while v.len() > 1 && Zero::is_zero(v.last().unwrap()) {
        v.pop();
    }
}

fn dense_rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = a.to_vec();
    dense_trim(&mut r);
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db && !(r.len() == 1 && Zero::is_zero(&r[0])) {
        let dr = r.len() - 1;
        if dr < db {
            break;
        }
        let f = &r[dr] / lb;
        for i in 0..=db {
            let t = &f * &b[i];
            r[dr - db + i] -= t;
        }
        r.pop();
        dense_trim(&mut r);
        if r.is_empty() {
            r.push(<Rational as Zero>::zero());
        }
    }
    r
}

fn dense_gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    dense_trim(&mut x);
    dense_trim(&mut y);
    while !(y.len() == 1 && Zero::is_zero(&y[0])) {
        let r = dense_rem(&x, &y);
        x = y;
        y = r;
    }
    let lc = x.last().unwrap().clone();
    if !Zero::is_zero(&lc) {
        for c in x.iter_mut() {
            *c /= &lc;
        }
    }
    x
}

/// Element of the rational function field `Q(p0, p1, ...)`.
///
/// Stored as numerator over denominator. Normalization cancels common
/// monomial factors, exact divisors, and univariate gcds; it does not attempt
/// a full multivariate gcd, so equality is tested by cross multiplication.
#[derive(Clone, Debug)]
pub struct RatFunc {
    num: ParamPoly,
    den: ParamPoly,
}

impl RatFunc {
    pub fn new(num: ParamPoly, den: ParamPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut r = Self { num, den };
        r.normalize();
        r
    }

    pub fn from_poly(p: ParamPoly) -> Self {
        Self {
            num: p,
            den: ParamPoly::constant(<Rational as One>::one()),
        }
    }

    pub fn numerator(&self) -> &ParamPoly {
        &self.num
    }

    pub fn denominator(&self) -> &ParamPoly {
        &self.den
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = ParamPoly::constant(<Rational as One>::one());
            return;
        }
        if let Some(c) = self.den.as_constant() {
            if !One::is_one(&c) {
                self.num = self.num.scale(&c.recip());
                self.den = ParamPoly::constant(<Rational as One>::one());
            }
            return;
        }
        let mn = self.num.min_exponents();
        let md = self.den.min_exponents();
        let n = mn.len().max(md.len());
        let common: Vec<u32> = (0..n).map(|i| exp_at(&mn, i).min(exp_at(&md, i))).collect();
        if common.iter().any(|&k| k > 0) {
            self.num = self.num.shift_down(&common);
            self.den = self.den.shift_down(&common);
        }
        if let Some(q) = self.num.div_exact(&self.den) {
            self.num = q;
            self.den = ParamPoly::constant(<Rational as One>::one());
            return;
        }
        if let Some(q) = self.den.div_exact(&self.num) {
            self.den = q;
            self.num = ParamPoly::constant(<Rational as One>::one());
        } else {
            let mut vars = self.num.support();
            vars.extend(self.den.support());
            vars.sort_unstable();
            vars.dedup();
            if vars.len() == 1 {
                let v = vars[0];
                let g = dense_gcd(&self.num.to_dense(v), &self.den.to_dense(v));
                if g.len() > 1 {
                    let g = ParamPoly::from_dense(v, &g);
                    self.num = self.num.div_exact(&g).expect("gcd divides numerator");
                    self.den = self.den.div_exact(&g).expect("gcd divides denominator");
                }
            }
        }
        let lc = self.den.leading().map(|(_, c)| c.clone()).unwrap();
        if !One::is_one(&lc) {
            let s = lc.recip();
            self.num = self.num.scale(&s);
            self.den = self.den.scale(&s);
        }
    }

    /// Value at a point of the parameter space; `None` if the denominator vanishes there.
    pub fn evaluate(&self, values: &[Rational]) -> Option<Rational> {
        let d = self.den.evaluate(values);
        if Zero::is_zero(&d) {
            None
        } else {
            Some(self.num.evaluate(values) / d)
        }
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        Self::from_poly(ParamPoly::zero())
    }
    fn one() -> Self {
        Self::from_poly(ParamPoly::constant(<Rational as One>::one()))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn is_one(&self) -> bool {
        self.num == self.den
    }
    fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::new(self.num.add(&other.num), self.den.clone());
        }
        Self::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }
    fn sub(&self, other: &Self) -> Self {
        Field::add(self, &Field::neg(other))
    }
    fn mul(&self, other: &Self) -> Self {
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }
    fn neg(&self) -> Self {
        Self {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn inv(&self) -> Self {
        assert!(!self.num.is_zero(), "inverse of zero");
        Self::new(self.den.clone(), self.num.clone())
    }
    fn from_rational(q: &Rational) -> Self {
        Self::from_poly(ParamPoly::constant(q.clone()))
    }
    fn parameter(index: usize) -> Option<Self> {
        Some(Self::from_poly(ParamPoly::var(index)))
    }
    fn as_rational(&self) -> Option<Rational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(n / d)
    }
    fn render(&self, params: &[String]) -> String {
        let n = self.num.render(params);
        match self.den.as_constant() {
            Some(d) if One::is_one(&d) => n,
            _ => {
                let n = if self.num.len() > 1 {
                    format!("({n})")
                } else {
                    n
                };
                format!("{n}/({})", self.den.render(params))
            }
        }
    }
    fn is_compound(&self) -> bool {
        self.num.len() > 1 || self.den.as_constant().is_none()
    }
}

/// Exact rational `n`-th root of `q`, if one exists.
pub fn rational_nth_root(q: &Rational, n: u32) -> Option<Rational> {
    if n == 0 {
        return None;
    }
    let neg = q.is_negative();
    if neg && n % 2 == 0 {
        return None;
    }
    let root = |z: &BigInt| -> Option<BigInt> {
        let a = z.abs();
        let r = a.nth_root(n);
        if num_traits::pow(r.clone(), n as usize) == a {
            Some(r)
        } else {
            None
        }
    };
    let p = root(q.numer())?;
    let d = root(q.denom())?;
    let r = Rational::new(p, d);
    Some(if neg { -r } else { r })
}

/// `n choose k` as a rational.
pub fn binomial(n: u32, k: u32) -> Rational {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i);
        acc = acc.div_floor(&BigInt::from(i + 1));
    }
    Rational::from_integer(acc)
}

/// Distinct rational roots of `Σ c_i t^i`, or `None` when the constant or
/// leading coefficient is too large to enumerate candidate divisors.
pub fn rational_roots(coeffs: &[Rational]) -> Option<Vec<Rational>> {
    let mut c: Vec<Rational> = coeffs.to_vec();
    while c.last().is_some_and(|v| Zero::is_zero(v)) {
        c.pop();
    }
    if c.len() < 2 {
        return Some(Vec::new());
    }
    let mut roots = Vec::new();
    let lead_zeros = c.iter().take_while(|v| Zero::is_zero(*v)).count();
    if lead_zeros > 0 {
        roots.push(<Rational as Zero>::zero());
        c.drain(..lead_zeros);
    }
    if c.len() < 2 {
        return Some(roots);
    }
    let den = c.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let ints: Vec<BigInt> = c.iter().map(|v| (v * Rational::from_integer(den.clone())).to_integer()).collect();
    let divisors = |z: &BigInt| -> Option<Vec<BigInt>> {
        let a = z.abs();
        if a.bits() > 40 {
            return None;
        }
        let a: u64 = a.try_into().ok()?;
        let mut out = Vec::new();
        let mut d = 1u64;
        while d * d <= a {
            if a % d == 0 {
                out.push(BigInt::from(d));
                if d * d != a {
                    out.push(BigInt::from(a / d));
                }
            }
            d += 1;
        }
        Some(out)
    };
    let ps = divisors(&ints[0])?;
    let qs = divisors(ints.last().unwrap())?;
    let eval = |t: &Rational| {
        c.iter()
            .rev()
            .fold(<Rational as Zero>::zero(), |acc, v| acc * t + v)
    };
    for p in &ps {
        for q in &qs {
            for sign in [1, -1] {
                let t = Rational::new(p * BigInt::from(sign), q.clone());
                if !roots.contains(&t) && Zero::is_zero(&eval(&t)) {
                    roots.push(t);
                }
            }
        }
    }
    Some(roots)
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&[]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn rational_roots_of_small_polynomials() {
        // 6t^3 - 5t^2 - 2t + 1 = (t - 1)(2t + 1)(3t - 1)
        let mut r = rational_roots(&[q(1, 1), q(-2, 1), q(-5, 1), q(6, 1)]).unwrap();
        r.sort();
        assert_eq!(r, vec![q(-1, 2), q(1, 3), q(1, 1)]);
        assert_eq!(rational_roots(&[q(0, 1), q(-2, 1), q(0, 1), q(1, 1)]).unwrap(), vec![q(0, 1)]);
        assert!(rational_roots(&[q(1, 1), q(0, 1), q(1, 1)]).unwrap().is_empty());
    }

    #[test]
    fn ratfunc_cancels_univariate_gcd() {
        let u = ParamPoly::var(0);
        let one = ParamPoly::constant(q(1, 1));
        // (u^2 - 1) / (u + 1) == u - 1
        let num = u.mul(&u).sub(&one);
        let den = u.add(&one);
        let r = RatFunc::new(num, den);
        assert_eq!(r.denominator().as_constant(), Some(q(1, 1)));
        assert_eq!(r.numerator(), &u.sub(&one));
    }

    #[test]
    fn ratfunc_field_laws_on_samples() {
        let u = RatFunc::parameter(0).unwrap();
        let v = RatFunc::parameter(1).unwrap();
        let a = Field::add(&u, &RatFunc::from_i64(2)).div(&v);
        let b = Field::mul(&v, &v).sub(&u).div(&Field::add(&u, &v));
        let lhs = Field::mul(&Field::add(&a, &b), &a);
        let rhs = Field::add(&Field::mul(&a, &a), &Field::mul(&b, &a));
        assert_eq!(lhs, rhs);
        assert!(Field::mul(&a, &a.inv()).is_one());
        assert!(Field::sub(&b, &b).is_zero());
    }

    #[test]
    fn monomial_ratio_is_reduced() {
        let u = RatFunc::parameter(0).unwrap();
        let v = RatFunc::parameter(1).unwrap();
        let r = Field::mul(&Field::mul(&v, &v), &u).div(&Field::mul(&u, &u));
        assert_eq!(r.render(&["u".into(), "v".into()]), "v^2/(u)");
    }

    #[test]
    fn nth_roots() {
        assert_eq!(rational_nth_root(&q(-8, 27), 3), Some(q(-2, 3)));
        assert_eq!(rational_nth_root(&q(-1, 1), 2), None);
        assert_eq!(rational_nth_root(&q(2, 1), 2), None);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 3), q(20, 1));
        assert_eq!(binomial(4, 0), q(1, 1));
    }
}
