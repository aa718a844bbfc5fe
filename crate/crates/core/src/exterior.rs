//! Blades, multivectors and the Grassmann (wedge) product.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{ScalarRF, Sym};

/// Largest supported number of generators.
pub const MAX_DIM: usize = 62;

/// A basis monomial `e_{i1} ∧ … ∧ e_{ik}` stored as a generator bitset
/// (bit `i-1` set for `e_i`). The empty set is the unit `Id`.
///
/// Blades are ordered by grade first, then lexicographically on their
/// ascending index lists, which is the canonical basis order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Blade(u64);

impl Blade {
    pub const ID: Blade = Blade(0);

    pub fn from_mask(mask: u64) -> Self {
        Blade(mask)
    }

    /// The generator `e_i`, 1-based.
    pub fn generator(i: usize) -> Self {
        assert!((1..=MAX_DIM).contains(&i), "generator index out of range");
        Blade(1 << (i - 1))
    }

    /// Blade with the given (distinct) 1-based indices in ascending position.
    pub fn from_indices(indices: &[usize]) -> Option<Self> {
        let mut mask = 0u64;
        for &i in indices {
            if !(1..=MAX_DIM).contains(&i) || mask & (1 << (i - 1)) != 0 {
                return None;
            }
            mask |= 1 << (i - 1);
        }
        Some(Blade(mask))
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_id(self) -> bool {
        self.0 == 0
    }

    /// Highest generator index present (0 for `Id`).
    pub fn max_index(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    /// Ascending 1-based generator indices.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mut m = self.0;
        std::iter::from_fn(move || {
            if m == 0 {
                None
            } else {
                let i = m.trailing_zeros() as usize;
                m &= m - 1;
                Some(i + 1)
            }
        })
    }

    pub fn contains(self, i: usize) -> bool {
        i >= 1 && self.0 & (1 << (i - 1)) != 0
    }

    pub fn without(self, i: usize) -> Blade {
        Blade(self.0 & !(1 << (i - 1)))
    }

    /// `self ∧ other` as `(sign, blade)`, or `None` when the blades overlap.
    pub fn wedge(self, other: Blade) -> Option<(i8, Blade)> {
        if self.0 & other.0 != 0 {
            return None;
        }
        // number of pairs (i in self, j in other) with i > j
        let mut swaps = 0u32;
        let mut m = other.0;
        while m != 0 {
            let j = m.trailing_zeros();
            m &= m - 1;
            swaps += (self.0 >> j).count_ones();
        }
        let sign = if swaps % 2 == 0 { 1 } else { -1 };
        Some((sign, Blade(self.0 | other.0)))
    }

    /// All ordered splits `(sign, a, b)` with `a ∧ b = sign * self`.
    pub fn splits(self) -> Vec<(i8, Blade, Blade)> {
        let mut out = Vec::with_capacity(1 << self.grade());
        let mut sub = 0u64;
        loop {
            let a = Blade(sub);
            let b = Blade(self.0 & !sub);
            let (sign, _) = a.wedge(b).expect("disjoint by construction");
            out.push((sign, a, b));
            if sub == self.0 {
                break;
            }
            sub = (sub.wrapping_sub(self.0)) & self.0;
        }
        out
    }

    /// `(-1)^grade`.
    pub fn parity_sign(self) -> i8 {
        if self.grade() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Name in the `Id`, `e1`, `e1we2` convention.
    pub fn name(self) -> String {
        self.render("w")
    }

    /// Name in the `^`-joined input syntax (`e1^e2`).
    pub fn dsl_name(self) -> String {
        self.render("^")
    }

    fn render(self, sep: &str) -> String {
        if self.is_id() {
            return "Id".to_string();
        }
        self.indices()
            .map(|i| format!("e{i}"))
            .collect::<Vec<_>>()
            .join(sep)
    }
}

impl Ord for Blade {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grade()
            .cmp(&other.grade())
            .then_with(|| other.0.reverse_bits().cmp(&self.0.reverse_bits()))
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl fmt::Debug for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Canonical basis of the exterior algebra on `n` generators: graded, and
/// lexicographic within each grade.
pub fn basis(n: usize) -> Vec<Blade> {
    assert!(n >= 1 && n <= 20, "basis enumeration supports 1 <= n <= 20");
    let mut out: Vec<Blade> = (0..1u64 << n).map(Blade).collect();
    out.sort();
    out
}

/// Position of `b` in [`basis`]`(n)`.
pub fn basis_index(b: Blade, n: usize) -> usize {
    // count blades of lower grade, then rank within the grade
    let k = b.grade();
    let mut idx: usize = (0..k).map(|g| binomial(n, g)).sum();
    // lexicographic rank of the combination among k-subsets of {1..n}
    let mut prev = 0;
    for (pos, i) in b.indices().enumerate() {
        for skipped in prev + 1..i {
            idx += binomial(n - skipped, k - pos - 1);
        }
        prev = i;
    }
    idx
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// A finite linear combination of blades over [`ScalarRF`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Multivector {
    dim: usize,
    terms: BTreeMap<Blade, ScalarRF>,
}

impl Multivector {
    pub fn zero(dim: usize) -> Self {
        Multivector {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(dim: usize, s: ScalarRF) -> Self {
        Multivector::from_blade(dim, Blade::ID, s)
    }

    pub fn from_blade(dim: usize, blade: Blade, coeff: ScalarRF) -> Self {
        debug_assert!(blade.max_index() <= dim);
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(blade, coeff);
        }
        Multivector { dim, terms }
    }

    pub fn blade(dim: usize, blade: Blade) -> Self {
        Multivector::from_blade(dim, blade, ScalarRF::one())
    }

    pub fn from_terms(dim: usize, terms: impl IntoIterator<Item = (Blade, ScalarRF)>) -> Self {
        let mut m = Multivector::zero(dim);
        for (b, c) in terms {
            m.add_term(b, &c);
        }
        m
    }

    /// `Σ name[i] · basis_i`, the general element with formal coefficients.
    pub fn general(dim: usize, name: &str) -> Self {
        Multivector::from_terms(
            dim,
            basis(dim)
                .into_iter()
                .enumerate()
                .map(|(i, b)| (b, ScalarRF::sym(Sym::indexed(name, &[i as u32 + 1])))),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeff(&self, b: Blade) -> ScalarRF {
        self.terms.get(&b).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Blade, &ScalarRF)> {
        self.terms.iter().map(|(b, c)| (*b, c))
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

    pub(crate) fn add_term(&mut self, b: Blade, c: &ScalarRF) {
        if c.is_zero() {
            return;
        }
        let v = match self.terms.get(&b) {
            Some(old) => old + c,
            None => c.clone(),
        };
        if v.is_zero() {
            self.terms.remove(&b);
        } else {
            self.terms.insert(b, v);
        }
    }

    pub(crate) fn add_scaled(&mut self, other: &Multivector, s: &ScalarRF) {
        for (b, c) in &other.terms {
            self.add_term(*b, &(c * s));
        }
    }

    pub fn add(&self, other: &Multivector) -> Multivector {
        let mut out = self.clone();
        out.add_scaled(other, &ScalarRF::one());
        out
    }

    pub fn sub(&self, other: &Multivector) -> Multivector {
        let mut out = self.clone();
        out.add_scaled(other, &ScalarRF::from_int(-1));
        out
    }

    pub fn neg(&self) -> Multivector {
        self.scale(&ScalarRF::from_int(-1))
    }

    pub fn scale(&self, s: &ScalarRF) -> Multivector {
        if s.is_zero() {
            return Multivector::zero(self.dim);
        }
        Multivector {
            dim: self.dim,
            terms: self.terms.iter().map(|(b, c)| (*b, c * s)).collect(),
        }
    }

    /// Linear extension of a map defined on blades.
    pub fn map_linear(&self, f: impl Fn(Blade) -> Multivector) -> Multivector {
        let mut out = Multivector::zero(self.dim);
        for (b, c) in &self.terms {
            out.add_scaled(&f(*b), c);
        }
        out
    }

    /// Bilinear extension of a map defined on blade pairs.
    pub fn map_bilinear(
        &self,
        other: &Multivector,
        f: impl Fn(Blade, Blade) -> Multivector,
    ) -> Multivector {
        let mut out = Multivector::zero(self.dim);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_scaled(&f(*a, *b), &(ca * cb));
            }
        }
        out
    }

    pub fn subst(&self, bindings: &BTreeMap<Sym, ScalarRF>) -> Result<Multivector> {
        let mut out = Multivector::zero(self.dim);
        for (b, c) in &self.terms {
            out.add_term(*b, &c.subst(bindings)?);
        }
        Ok(out)
    }

    /// Canonical text with `^`-joined blades, accepted by the expression
    /// parser.
    pub fn to_dsl(&self) -> String {
        render_terms(self.terms.iter().map(|(b, c)| (b.dsl_name(), c)))
    }
}

pub(crate) fn render_terms<'a>(terms: impl Iterator<Item = (String, &'a ScalarRF)>) -> String {
    let mut out = String::new();
    for (k, (name, c)) in terms.enumerate() {
        let text = c.to_string();
        let single = c.numer().len() == 1;
        let (neg, body) = match text.strip_prefix('-') {
            Some(rest) if single => (true, rest.to_string()),
            _ => (false, text),
        };
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if body == "1" {
            out.push_str(&name);
        } else if single {
            out.push_str(&format!("{body}*{name}"));
        } else {
            out.push_str(&format!("({body})*{name}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_terms(
            self.terms.iter().map(|(b, c)| (b.name(), c)),
        ))
    }
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn check_dim(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::DimMismatch { left: a, right: b })
    }
}

/// Grassmann product of two blades as a multivector.
pub fn blade_wedge(dim: usize, a: Blade, b: Blade) -> Multivector {
    match a.wedge(b) {
        Some((s, out)) => Multivector::from_blade(dim, out, ScalarRF::from_int(s as i64)),
        None => Multivector::zero(dim),
    }
}

pub fn wedge(u: &Multivector, v: &Multivector) -> Result<Multivector> {
    check_dim(u.dim, v.dim)?;
    Ok(u.map_bilinear(v, |a, b| blade_wedge(u.dim, a, b)))
}

pub fn grade_project(u: &Multivector, k: usize) -> Multivector {
    Multivector {
        dim: u.dim,
        terms: u
            .terms
            .iter()
            .filter(|(b, _)| b.grade() == k)
            .map(|(b, c)| (*b, c.clone()))
            .collect(),
    }
}

/// Coefficient of `Id`.
pub fn counit(u: &Multivector) -> ScalarRF {
    u.coeff(Blade::ID)
}

pub fn grade_involution(u: &Multivector) -> Multivector {
    Multivector {
        dim: u.dim,
        terms: u
            .terms
            .iter()
            .map(|(b, c)| (*b, if b.grade() % 2 == 0 { c.clone() } else { -c }))
            .collect(),
    }
}

/// Kronecker evaluation pairing on the blade basis, extended bilinearly.
pub fn ev(u: &Multivector, v: &Multivector) -> Result<ScalarRF> {
    check_dim(u.dim, v.dim)?;
    let mut acc = ScalarRF::zero();
    for (b, c) in &u.terms {
        if let Some(d) = v.terms.get(b) {
            acc = &acc + &(c * d);
        }
    }
    Ok(acc)
}

/// Matrix of a linear endomorphism in the canonical blade basis: entry
/// `(i, j)` is `ev(basis_i, f(basis_j))`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EndoMatrix {
    dim: usize,
    matrix: Matrix,
}

impl EndoMatrix {
    pub fn new(dim: usize, matrix: Matrix) -> Result<Self> {
        let size = 1usize << dim;
        if matrix.rows() != size || matrix.cols() != size {
            return Err(Error::Shape {
                rows: matrix.rows(),
                cols: matrix.cols(),
                dim,
            });
        }
        Ok(EndoMatrix { dim, matrix })
    }

    pub fn identity(dim: usize) -> Self {
        EndoMatrix {
            dim,
            matrix: Matrix::identity(1 << dim),
        }
    }

    /// Matrix of `η∘ε`: one in the `(Id, Id)` corner.
    pub fn unit_counit(dim: usize) -> Self {
        let mut m = Matrix::zeros(1 << dim, 1 << dim);
        m.set(0, 0, ScalarRF::one());
        EndoMatrix { dim, matrix: m }
    }

    /// Generic matrix with entries `name[i,j]`, 1-based.
    pub fn symbolic(dim: usize, name: &str) -> Self {
        let size = 1 << dim;
        EndoMatrix {
            dim,
            matrix: Matrix::from_fn(size, size, |i, j| {
                ScalarRF::sym(Sym::indexed(name, &[i as u32 + 1, j as u32 + 1]))
            }),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix {
        self.matrix
    }

    /// Zero-based entry.
    pub fn get(&self, i: usize, j: usize) -> &ScalarRF {
        self.matrix.get(i, j)
    }

    /// Image of the `j`-th basis blade.
    pub fn apply_blade(&self, b: Blade) -> Multivector {
        let j = basis_index(b, self.dim);
        let bas = basis(self.dim);
        Multivector::from_terms(
            self.dim,
            bas.iter()
                .enumerate()
                .map(|(i, bi)| (*bi, self.matrix.get(i, j).clone())),
        )
    }

    pub fn apply(&self, u: &Multivector) -> Multivector {
        u.map_linear(|b| self.apply_blade(b))
    }

    pub fn compose(&self, other: &EndoMatrix) -> Result<EndoMatrix> {
        check_dim(self.dim, other.dim)?;
        Ok(EndoMatrix {
            dim: self.dim,
            matrix: self.matrix.mul(&other.matrix)?,
        })
    }

    pub fn scale(&self, s: &ScalarRF) -> EndoMatrix {
        EndoMatrix {
            dim: self.dim,
            matrix: self.matrix.scale(s),
        }
    }

    pub fn subst(&self, bindings: &BTreeMap<Sym, ScalarRF>) -> Result<EndoMatrix> {
        Ok(EndoMatrix {
            dim: self.dim,
            matrix: self.matrix.subst(bindings)?,
        })
    }
}

impl fmt::Display for EndoMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.matrix, f)
    }
}

impl fmt::Debug for EndoMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.matrix, f)
    }
}

pub fn endo_matrix(n: usize, f: impl Fn(&Multivector) -> Multivector) -> EndoMatrix {
    let bas = basis(n);
    let images: Vec<Multivector> = bas.iter().map(|b| f(&Multivector::blade(n, *b))).collect();
    let size = bas.len();
    EndoMatrix {
        dim: n,
        matrix: Matrix::from_fn(size, size, |i, j| images[j].coeff(bas[i])),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, sym1, sym2};

    fn e(i: usize) -> Blade {
        Blade::generator(i)
    }

    fn names(n: usize) -> Vec<String> {
        basis(n).into_iter().map(Blade::name).collect()
    }

    #[test]
    fn basis_order() {
        assert_eq!(names(1), ["Id", "e1"]);
        assert_eq!(names(2), ["Id", "e1", "e2", "e1we2"]);
        assert_eq!(
            names(3),
            ["Id", "e1", "e2", "e3", "e1we2", "e1we3", "e2we3", "e1we2we3"]
        );
    }

    #[test]
    fn basis_order_matches_subset_enumeration() {
        // oracle: sort subsets by (size, ascending index list)
        for n in 1..=5 {
            let mut subsets: Vec<Vec<usize>> = (0..1u32 << n)
                .map(|m| (1..=n).filter(|i| m & (1 << (i - 1)) != 0).collect())
                .collect();
            subsets.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
            let got: Vec<Vec<usize>> = basis(n).into_iter().map(|b| b.indices().collect()).collect();
            assert_eq!(got, subsets);
            for (k, b) in basis(n).into_iter().enumerate() {
                assert_eq!(basis_index(b, n), k);
            }
        }
    }

    #[test]
    fn blade_wedge_signs() {
        let e12 = Blade::from_indices(&[1, 2]).unwrap();
        assert_eq!(e(1).wedge(e(2)), Some((1, e12)));
        assert_eq!(e(2).wedge(e(1)), Some((-1, e12)));
        assert_eq!(e(1).wedge(e(1)), None);
    }

    #[test]
    fn wedge_examples() {
        let n = 2;
        let e1 = Multivector::blade(n, e(1));
        let e2 = Multivector::blade(n, e(2));
        assert_eq!(wedge(&e1, &e2).unwrap().to_string(), "e1we2");
        let x = Multivector::general(n, "x");
        let id = Multivector::blade(n, Blade::ID);
        assert_eq!(wedge(&id, &x).unwrap(), x);
        let s = e1.add(&e2);
        assert!(wedge(&s, &s).unwrap().is_zero());
    }

    #[test]
    fn grade_ops() {
        let n = 2;
        let e12 = Blade::from_indices(&[1, 2]).unwrap();
        let u = Multivector::blade(n, e(1)).add(&Multivector::blade(n, e12));
        assert_eq!(grade_project(&u, 1), Multivector::blade(n, e(1)));
        let x = Multivector::general(n, "x");
        assert_eq!(grade_project(&x, 0), Multivector::scalar(n, sym1("x", 1)));
        assert!(grade_project(&Multivector::blade(n, e12), 1).is_zero());
        assert_eq!(counit(&Multivector::blade(n, Blade::ID)), int(1));
        assert_eq!(counit(&x), sym1("x", 1));
        assert!(counit(&Multivector::blade(n, e12)).is_zero());
        assert_eq!(grade_involution(&Multivector::blade(n, e(1))), Multivector::blade(n, e(1)).neg());
        assert_eq!(grade_involution(&Multivector::blade(n, e12)), Multivector::blade(n, e12));
    }

    #[test]
    fn grade_involution_matrix() {
        let m = endo_matrix(2, grade_involution);
        for i in 0..4 {
            for j in 0..4 {
                let expect = match (i, j) {
                    (0, 0) | (3, 3) => int(1),
                    (1, 1) | (2, 2) => int(-1),
                    _ => int(0),
                };
                assert_eq!(m.get(i, j), &expect);
            }
        }
    }

    #[test]
    fn ev_is_kronecker() {
        let n = 2;
        let id = Multivector::blade(n, Blade::ID);
        let e1 = Multivector::blade(n, e(1));
        let e2 = Multivector::blade(n, e(2));
        assert_eq!(ev(&id, &id).unwrap(), int(1));
        assert_eq!(ev(&e1, &e2).unwrap(), int(0));
        assert_eq!(ev(&e1, &e1).unwrap(), int(1));
    }

    #[test]
    fn endo_matrix_of_generic_operator() {
        let r = EndoMatrix::symbolic(2, "r");
        assert!(endo_matrix(2, |u| u.clone()).matrix().is_identity());
        let img = r.apply(&Multivector::blade(2, Blade::ID));
        assert_eq!(
            img.to_string(),
            "r[1,1]*Id + r[2,1]*e1 + r[3,1]*e2 + r[4,1]*e1we2"
        );
        assert_eq!(endo_matrix(2, |u| r.apply(u)), r);
    }

    #[test]
    fn rendering() {
        let n = 2;
        let u = Multivector::from_terms(
            n,
            [
                (Blade::ID, sym1("x", 1)),
                (e(1), sym1("x", 2)),
                (Blade::from_indices(&[1, 2]).unwrap(), int(-1)),
            ],
        );
        assert_eq!(u.to_string(), "x[1]*Id + x[2]*e1 - e1we2");
        assert_eq!(u.to_dsl(), "x[1]*Id + x[2]*e1 - e1^e2");
        let v = Multivector::blade(n, e(2)).scale(&(&sym2("b", 1, 2) - &sym2("b", 2, 1)));
        assert_eq!(v.to_string(), "(b[1,2] - b[2,1])*e2");
    }
}
