//! Sparse multivariate polynomials over the rationals.
//!
//! Terms are kept sorted ascending in graded lexicographic order, so the
//! leading term is always the last one. Variable precedence follows the
//! [`Sym`] order: the smallest symbol is the most significant variable.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::sym::Sym;

pub type Rational = BigRational;

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// A power product of symbols with positive exponents.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    degree: u32,
    powers: Vec<(Sym, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(sym: Sym) -> Self {
        Monomial {
            degree: 1,
            powers: vec![(sym, 1)],
        }
    }

    pub fn from_powers(powers: impl IntoIterator<Item = (Sym, u32)>) -> Self {
        let mut map: BTreeMap<Sym, u32> = BTreeMap::new();
        for (s, e) in powers {
            if e > 0 {
                *map.entry(s).or_insert(0) += e;
            }
        }
        let powers: Vec<_> = map.into_iter().collect();
        Monomial {
            degree: powers.iter().map(|(_, e)| e).sum(),
            powers,
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn powers(&self) -> &[(Sym, u32)] {
        &self.powers
    }

    pub fn is_one(&self) -> bool {
        self.powers.is_empty()
    }

    pub fn exponent(&self, sym: &Sym) -> u32 {
        self.powers
            .binary_search_by(|(s, _)| s.cmp(sym))
            .map(|k| self.powers[k].1)
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.powers.len() + other.powers.len());
        let (mut i, mut j) = (0, 0);
        while i < self.powers.len() && j < other.powers.len() {
            let (a, b) = (&self.powers[i], &other.powers[j]);
            match a.0.cmp(&b.0) {
                Ordering::Less => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b.clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a.0.clone(), a.1 + b.1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.powers[i..]);
        out.extend_from_slice(&other.powers[j..]);
        Monomial {
            degree: self.degree + other.degree,
            powers: out,
        }
    }

    /// True if `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree
            && self.powers.iter().all(|(s, e)| other.exponent(s) >= *e)
    }

    /// Quotient `self / other`; the caller guarantees `other.divides(self)`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial::from_powers(
            self.powers
                .iter()
                .map(|(s, e)| (s.clone(), e - other.exponent(s))),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::from_powers(
            self.powers
                .iter()
                .map(|(s, e)| (s.clone(), (*e).min(other.exponent(s)))),
        )
    }

    fn split_var(&self, sym: &Sym) -> (u32, Monomial) {
        match self.powers.binary_search_by(|(s, _)| s.cmp(sym)) {
            Ok(k) => {
                let e = self.powers[k].1;
                let mut powers = self.powers.clone();
                powers.remove(k);
                (
                    e,
                    Monomial {
                        degree: self.degree - e,
                        powers,
                    },
                )
            }
            Err(_) => (0, self.clone()),
        }
    }

    /// Splits into the part built from symbols selected by `pred` and the rest.
    pub fn partition(&self, pred: impl Fn(&Sym) -> bool) -> (Monomial, Monomial) {
        let (inside, outside): (Vec<_>, Vec<_>) =
            self.powers.iter().cloned().partition(|(s, _)| pred(s));
        (
            Monomial {
                degree: inside.iter().map(|(_, e)| e).sum(),
                powers: inside,
            },
            Monomial {
                degree: outside.iter().map(|(_, e)| e).sum(),
                powers: outside,
            },
        )
    }
}

fn lex_cmp(a: &[(Sym, u32)], b: &[(Sym, u32)]) -> Ordering {
    let (mut i, mut j) = (0, 0);
    loop {
        match (a.get(i), b.get(j)) {
            (None, None) => return Ordering::Equal,
            (Some(_), None) => return Ordering::Greater,
            (None, Some(_)) => return Ordering::Less,
            (Some((sa, ea)), Some((sb, eb))) => match sa.cmp(sb) {
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => match ea.cmp(eb) {
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                    }
                    o => return o,
                },
            },
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| lex_cmp(&self.powers, &other.powers))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (k, (s, e)) in self.powers.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Multivariate polynomial with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Monomial, Rational)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::monomial(Monomial::one(), c)
    }

    pub fn from_int(n: i64) -> Self {
        Poly::constant(Rational::from_integer(BigInt::from(n)))
    }

    pub fn var(sym: Sym) -> Self {
        Poly::monomial(Monomial::var(sym), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    /// Collects arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut v: Vec<_> = terms.into_iter().collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Monomial, Rational)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 += c,
                _ => {
                    if let Some(last) = out.last() {
                        if last.1.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if out.last().is_some_and(|t| t.1.is_zero()) {
            out.pop();
        }
        Poly { terms: out }
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        match self.terms.as_slice() {
            [] => true,
            [(m, _)] => m.is_one(),
            _ => false,
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self.terms.as_slice(), [(m, c)] if m.is_one() && c.is_one())
    }

    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.last().map(|(m, c)| (m, c))
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        // multiplication by a monomial preserves a monomial order
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(tm, k)| (tm.mul(m), k * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn vars(&self) -> BTreeSet<Sym> {
        self.terms
            .iter()
            .flat_map(|(m, _)| m.powers.iter().map(|(s, _)| s.clone()))
            .collect()
    }

    pub fn degree_in(&self, sym: &Sym) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.exponent(sym))
            .max()
            .unwrap_or(0)
    }

    /// Coefficients with respect to `sym`, indexed by power.
    pub fn to_univariate(&self, sym: &Sym) -> Vec<Poly> {
        let mut buckets: Vec<Vec<(Monomial, Rational)>> =
            vec![Vec::new(); self.degree_in(sym) as usize + 1];
        for (m, c) in &self.terms {
            let (e, rest) = m.split_var(sym);
            buckets[e as usize].push((rest, c.clone()));
        }
        buckets.into_iter().map(Poly::from_terms).collect()
    }

    pub fn from_univariate(sym: &Sym, coeffs: &[Poly]) -> Poly {
        let mut terms = Vec::new();
        for (e, c) in coeffs.iter().enumerate() {
            let x = Monomial::from_powers([(sym.clone(), e as u32)]);
            for (m, k) in &c.terms {
                terms.push((m.mul(&x), k.clone()));
            }
        }
        Poly::from_terms(terms)
    }

    /// Groups terms by their monomial in the symbols selected by `pred`.
    pub fn split_by(&self, pred: impl Fn(&Sym) -> bool) -> BTreeMap<Monomial, Poly> {
        let mut groups: BTreeMap<Monomial, Vec<(Monomial, Rational)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (inside, outside) = m.partition(&pred);
            groups.entry(inside).or_default().push((outside, c.clone()));
        }
        groups
            .into_iter()
            .map(|(k, v)| (k, Poly::from_terms(v)))
            .filter(|(_, p)| !p.is_zero())
            .collect()
    }

    /// Exact quotient, or `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        let (dm, dc) = divisor.leading()?;
        if divisor.is_constant() {
            return Some(self.scale(&(Rational::one() / dc)));
        }
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((lm, lc)) = rem.leading() {
            if !dm.divides(lm) {
                return None;
            }
            let m = lm.div(dm);
            let c = lc / dc;
            rem = &rem - &divisor.mul_term(&m, &c);
            quot.push((m, c));
        }
        Some(Poly::from_terms(quot))
    }

    /// Scales so that the leading coefficient is one.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&(Rational::one() / c)),
        }
    }

    /// Content with respect to `sym`: the gcd of its coefficients.
    pub fn content_in(&self, sym: &Sym) -> Poly {
        content(&self.to_univariate(sym))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        loop {
            if a.is_zero() {
                return b.monic();
            }
            if b.is_zero() {
                return a.monic();
            }
            if a.is_constant() || b.is_constant() {
                return Poly::one();
            }
            if a.len() == 1 || b.len() == 1 {
                return monomial_gcd(&a, &b);
            }
            let va = a.vars();
            let vb = b.vars();
            // a factor of both cannot mention a symbol missing from either side
            if let Some(v) = va.difference(&vb).next() {
                a = a.content_in(v);
                continue;
            }
            if let Some(v) = vb.difference(&va).next() {
                b = b.content_in(v);
                continue;
            }
            let (small, big) = if a.len() <= b.len() { (&a, &b) } else { (&b, &a) };
            if big.div_exact(small).is_some() {
                return small.monic();
            }
            let v = va
                .iter()
                .min_by_key(|v| a.degree_in(v).max(b.degree_in(v)))
                .expect("nonconstant polynomial has a variable");
            return gcd_in_var(&a, &b, v);
        }
    }
}

fn monomial_gcd(a: &Poly, b: &Poly) -> Poly {
    let mut g = a.terms[0].0.clone();
    for (m, _) in a.terms.iter().chain(b.terms.iter()) {
        g = g.gcd(m);
        if g.is_one() {
            break;
        }
    }
    Poly::monomial(g, Rational::one())
}

fn content(coeffs: &[Poly]) -> Poly {
    let mut g = Poly::zero();
    for c in coeffs.iter().filter(|c| !c.is_zero()) {
        g = if g.is_zero() { c.monic() } else { g.gcd(c) };
        if g.is_one() {
            break;
        }
    }
    g
}

fn divide_all(coeffs: &[Poly], d: &Poly) -> Vec<Poly> {
    coeffs
        .iter()
        .map(|c| c.div_exact(d).expect("content divides every coefficient"))
        .collect()
}

fn primitive(coeffs: Vec<Poly>) -> Vec<Poly> {
    let c = content(&coeffs);
    let mut out = divide_all(&coeffs, &c);
    let lead = out
        .last()
        .and_then(|p| p.leading().map(|(_, c)| c.clone()))
        .expect("nonzero univariate polynomial");
    if !lead.is_one() {
        let inv = Rational::one() / lead;
        for p in &mut out {
            *p = p.scale(&inv);
        }
    }
    out
}

fn trim(v: &mut Vec<Poly>) {
    while v.last().is_some_and(Poly::is_zero) {
        v.pop();
    }
}

/// Pseudo-remainder of `a` by `b`, both univariate over polynomial coefficients.
fn prem(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    trim(&mut r);
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c = &*c * lb;
        }
        for (k, bk) in b.iter().enumerate() {
            let idx = k + dr - db;
            r[idx] = &r[idx] - &(&lr * bk);
        }
        trim(&mut r);
    }
    r
}

fn gcd_in_var(a: &Poly, b: &Poly, v: &Sym) -> Poly {
    let ua = a.to_univariate(v);
    let ub = b.to_univariate(v);
    let ca = content(&ua);
    let cb = content(&ub);
    let c = ca.gcd(&cb);
    let mut pa = divide_all(&ua, &ca);
    let mut pb = divide_all(&ub, &cb);
    if pa.len() < pb.len() {
        std::mem::swap(&mut pa, &mut pb);
    }
    if pa.iter().chain(&pb).all(Poly::is_constant) {
        let g = euclid(constants(&pa), constants(&pb));
        let g: Vec<Poly> = g.into_iter().map(Poly::constant).collect();
        return (&c * &Poly::from_univariate(v, &g)).monic();
    }
    if coprime_image(&pa, &pb) {
        return c.monic();
    }
    let g = loop {
        if pb.len() == 1 {
            break vec![Poly::one()];
        }
        let r = prem(&pa, &pb);
        if r.is_empty() {
            break pb;
        }
        if r.len() == 1 {
            break vec![Poly::one()];
        }
        pa = pb;
        pb = primitive(r);
    };
    (&c * &Poly::from_univariate(v, &g)).monic()
}

fn eval_at(p: &Poly, point: &BTreeMap<Sym, Rational>) -> Rational {
    let mut acc = Rational::zero();
    for (m, c) in &p.terms {
        let mut t = c.clone();
        for (s, e) in m.powers() {
            t *= num_traits::pow(point[s].clone(), *e as usize);
        }
        acc += t;
    }
    acc
}

fn rational_remainder(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = a.to_vec();
    let lb = b.last().expect("nonzero divisor");
    while r.len() >= b.len() {
        let q = r.last().expect("nonempty") / lb;
        let shift = r.len() - b.len();
        for (k, bk) in b.iter().enumerate() {
            r[k + shift] -= &q * bk;
        }
        r.pop();
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    r
}

/// Cheap sufficient test that two primitive univariate polynomials are
/// coprime: substitute integers for the coefficient symbols at points where
/// both leading coefficients survive, then run Euclid over the rationals. A
/// common factor of positive degree would survive into every such image, so
/// one constant image gcd settles it.
fn coprime_image(a: &[Poly], b: &[Poly]) -> bool {
    let vars: BTreeSet<Sym> = a.iter().chain(b).flat_map(Poly::vars).collect();
    for attempt in 0..6i64 {
        let point: BTreeMap<Sym, Rational> = vars
            .iter()
            .enumerate()
            .map(|(k, s)| (s.clone(), Rational::from_integer(BigInt::from(3 + 7 * attempt + 2 * k as i64))))
            .collect();
        let x: Vec<Rational> = a.iter().map(|c| eval_at(c, &point)).collect();
        let y: Vec<Rational> = b.iter().map(|c| eval_at(c, &point)).collect();
        if x.last().is_none_or(Zero::is_zero) || y.last().is_none_or(Zero::is_zero) {
            continue;
        }
        if euclid(x, y).len() == 1 {
            return true;
        }
    }
    false
}

fn constants(p: &[Poly]) -> Vec<Rational> {
    p.iter().map(|c| c.constant_value().unwrap_or_else(Rational::zero)).collect()
}

/// Last nonzero remainder of the Euclidean sequence over the rationals.
fn euclid(mut x: Vec<Rational>, mut y: Vec<Rational>) -> Vec<Rational> {
    while !y.is_empty() {
        let r = rational_remainder(&x, &y);
        x = y;
        y = r;
    }
    x
}

fn merge(a: &Poly, b: &Poly, negate_b: bool) -> Poly {
    let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
    let (mut i, mut j) = (0, 0);
    let nb = |c: &Rational| if negate_b { -c } else { c.clone() };
    while i < a.terms.len() && j < b.terms.len() {
        let (ta, tb) = (&a.terms[i], &b.terms[j]);
        match ta.0.cmp(&tb.0) {
            Ordering::Less => {
                out.push(ta.clone());
                i += 1;
            }
            Ordering::Greater => {
                out.push((tb.0.clone(), nb(&tb.1)));
                j += 1;
            }
            Ordering::Equal => {
                let c = &ta.1 + nb(&tb.1);
                if !c.is_zero() {
                    out.push((ta.0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a.terms[i..]);
    out.extend(b.terms[j..].iter().map(|(m, c)| (m.clone(), nb(c))));
    Poly { terms: out }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        merge(self, rhs, false)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        merge(self, rhs, true)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        if let Some(c) = self.constant_value() {
            return rhs.scale(&c);
        }
        if let Some(c) = rhs.constant_value() {
            return self.scale(&c);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return rhs.mul_term(m, c);
        }
        if rhs.terms.len() == 1 {
            let (m, c) = &rhs.terms[0];
            return self.mul_term(m, c);
        }
        let mut acc = BTreeMap::<Monomial, Rational>::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(v) => *v += c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Poly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(name: &str) -> Poly {
        Poly::var(Sym::new(name))
    }

    fn c(n: i64) -> Poly {
        Poly::from_int(n)
    }

    #[test]
    fn graded_lex_leading_term() {
        let x = v("x");
        let y = v("y");
        let p = &(&x * &y) + &(&x.pow(2) + &y);
        assert_eq!(p.leading().unwrap().0.to_string(), "x^2");
        assert_eq!(p.to_string(), "x^2 + x*y + y");
    }

    #[test]
    fn cancellation_and_zero() {
        let x = v("x");
        assert!((&x - &x).is_zero());
        assert_eq!((&x + &x).to_string(), "2*x");
    }

    #[test]
    fn exact_division() {
        let x = v("x");
        let y = v("y");
        let a = &(&x + &y) * &(&x - &y);
        assert_eq!(a.div_exact(&(&x - &y)).unwrap(), &x + &y);
        assert!(a.div_exact(&(&x + &c(1))).is_none());
    }

    #[test]
    fn gcd_univariate() {
        let x = v("x");
        let a = &x.pow(2) - &c(1);
        let b = &x - &c(1);
        assert_eq!(a.gcd(&b), b);
        assert_eq!(a.gcd(&(&x + &c(2))), Poly::one());
    }

    #[test]
    fn gcd_multivariate_common_factor() {
        let x = v("x");
        let y = v("y");
        let z = v("z");
        let g = &(&x * &y) + &(&z + &c(3));
        let a = &g * &(&x.pow(2) + &y);
        let b = &g * &(&(&y * &z) - &x);
        assert_eq!(a.gcd(&b), g.monic());
    }

    #[test]
    fn gcd_with_disjoint_variables_is_one() {
        let a = &v("x") + &c(1);
        let b = &v("y") + &c(1);
        assert!(a.gcd(&b).is_one());
    }

    #[test]
    fn gcd_monomial_case() {
        let x = v("x");
        let y = v("y");
        let a = &x.pow(3) * &y;
        let b = &(&x.pow(2) * &y.pow(2)) + &(&x * &y);
        assert_eq!(a.gcd(&b), &x * &y);
    }

    #[test]
    fn univariate_round_trip() {
        let x = Sym::new("x");
        let p = &(&v("x").pow(2) * &v("y")) + &(&v("x") + &c(4));
        let u = p.to_univariate(&x);
        assert_eq!(u.len(), 3);
        assert_eq!(Poly::from_univariate(&x, &u), p);
    }

    #[test]
    fn split_by_groups_by_selected_symbols() {
        let p = &(&v("s") * &v("x")) + &(&v("b") * &v("x"));
        let groups = p.split_by(|s| s.name() == "x");
        assert_eq!(groups.len(), 1);
        assert_eq!(groups.values().next().unwrap(), &(&v("b") + &v("s")));
    }
}
