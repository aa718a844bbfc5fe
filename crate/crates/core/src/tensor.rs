//! Tensor polynomials over blade words and the slot calculus on them.
//!
//! Slots are numbered from 1. Every tensor has a fixed rank; scalars live
//! only in coefficients, so multilinearity is structural.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exterior::{render_terms, Blade, Multivector};
use crate::scalar::{ScalarRF, Sym};

/// A tensor basis monomial: one blade per slot.
pub type Word = Vec<Blade>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TensorPoly {
    dim: usize,
    rank: usize,
    terms: BTreeMap<Word, ScalarRF>,
}

impl TensorPoly {
    pub fn zero(dim: usize, rank: usize) -> Self {
        TensorPoly {
            dim,
            rank,
            terms: BTreeMap::new(),
        }
    }

    /// A rank-0 tensor.
    pub fn scalar(dim: usize, s: ScalarRF) -> Self {
        let mut t = TensorPoly::zero(dim, 0);
        t.add_term(Vec::new(), &s);
        t
    }

    pub fn word(dim: usize, word: Word, coeff: ScalarRF) -> Self {
        let mut t = TensorPoly::zero(dim, word.len());
        t.add_term(word, &coeff);
        t
    }

    /// Collects raw terms, merging equal words and dropping zeros.
    pub fn collect(
        dim: usize,
        rank: usize,
        terms: impl IntoIterator<Item = (Word, ScalarRF)>,
    ) -> Result<Self> {
        let mut t = TensorPoly::zero(dim, rank);
        for (w, c) in terms {
            if w.len() != rank {
                return Err(Error::MixedRank {
                    left: rank,
                    right: w.len(),
                });
            }
            t.add_term(w, &c);
        }
        Ok(t)
    }

    pub fn from_multivector(u: &Multivector) -> Self {
        let mut t = TensorPoly::zero(u.dim(), 1);
        for (b, c) in u.terms() {
            t.add_term(vec![b], c);
        }
        t
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rank
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

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &ScalarRF)> {
        self.terms.iter()
    }

    pub fn coeff(&self, word: &[Blade]) -> ScalarRF {
        self.terms.get(word).cloned().unwrap_or_default()
    }

    /// The value of a rank-0 tensor.
    pub fn scalar_value(&self) -> Result<ScalarRF> {
        if self.rank != 0 {
            return Err(Error::RankMismatch {
                expected: 0,
                found: self.rank,
            });
        }
        Ok(self.coeff(&[]))
    }

    pub(crate) fn add_term(&mut self, word: Word, c: &ScalarRF) {
        debug_assert_eq!(word.len(), self.rank);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&word) {
            Some(old) => {
                let v = &*old + c;
                if v.is_zero() {
                    self.terms.remove(&word);
                } else {
                    *old = v;
                }
            }
            None => {
                self.terms.insert(word, c.clone());
            }
        }
    }

    fn check_compatible(&self, other: &TensorPoly) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        if self.rank != other.rank {
            return Err(Error::MixedRank {
                left: self.rank,
                right: other.rank,
            });
        }
        Ok(())
    }

    pub(crate) fn add_scaled(&mut self, other: &TensorPoly, s: &ScalarRF) -> Result<()> {
        self.check_compatible(other)?;
        for (w, c) in &other.terms {
            self.add_term(w.clone(), &(c * s));
        }
        Ok(())
    }

    pub fn add(&self, other: &TensorPoly) -> Result<TensorPoly> {
        let mut out = self.clone();
        out.add_scaled(other, &ScalarRF::one())?;
        Ok(out)
    }

    pub fn sub(&self, other: &TensorPoly) -> Result<TensorPoly> {
        let mut out = self.clone();
        out.add_scaled(other, &ScalarRF::from_int(-1))?;
        Ok(out)
    }

    pub fn scale(&self, s: &ScalarRF) -> TensorPoly {
        if s.is_zero() {
            return TensorPoly::zero(self.dim, self.rank);
        }
        TensorPoly {
            dim: self.dim,
            rank: self.rank,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * s)).collect(),
        }
    }

    pub fn neg(&self) -> TensorPoly {
        self.scale(&ScalarRF::from_int(-1))
    }

    pub fn subst(&self, bindings: &BTreeMap<Sym, ScalarRF>) -> Result<TensorPoly> {
        let mut out = TensorPoly::zero(self.dim, self.rank);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), &c.subst(bindings)?);
        }
        Ok(out)
    }

    fn check_slot(&self, slot: usize, width: usize) -> Result<()> {
        if slot == 0 || slot + width - 1 > self.rank {
            return Err(Error::SlotOutOfRange {
                slot,
                rank: self.rank,
            });
        }
        Ok(())
    }

    /// Replaces the `width` slots starting at `slot` by the rank-`out_rank`
    /// tensor `f` returns for their contents.
    pub fn replace_slots(
        &self,
        slot: usize,
        width: usize,
        out_rank: usize,
        f: impl Fn(&[Blade]) -> TensorPoly,
    ) -> Result<TensorPoly> {
        self.check_slot(slot, width)?;
        let at = slot - 1;
        let rank = self.rank - width + out_rank;
        let mut out = TensorPoly::zero(self.dim, rank);
        let mut cache: BTreeMap<Vec<Blade>, TensorPoly> = BTreeMap::new();
        for (w, c) in &self.terms {
            let key = &w[at..at + width];
            let img = cache.entry(key.to_vec()).or_insert_with(|| f(key));
            if img.rank != out_rank {
                return Err(Error::RankMismatch {
                    expected: out_rank,
                    found: img.rank,
                });
            }
            for (iw, ic) in &img.terms {
                let mut nw = Vec::with_capacity(rank);
                nw.extend_from_slice(&w[..at]);
                nw.extend_from_slice(iw);
                nw.extend_from_slice(&w[at + width..]);
                out.add_term(nw, &(c * ic));
            }
        }
        Ok(out)
    }

    /// Removes slot `i`; one `(removed, rest)` pair per term, the removed
    /// slot carrying the term's coefficient.
    pub fn peek(&self, i: usize) -> Result<Vec<(Multivector, TensorPoly)>> {
        self.check_slot(i, 1)?;
        Ok(self
            .terms
            .iter()
            .map(|(w, c)| {
                let removed = Multivector::from_blade(self.dim, w[i - 1], c.clone());
                let mut rest = w.clone();
                rest.remove(i - 1);
                (
                    removed,
                    TensorPoly::word(self.dim, rest, ScalarRF::one()),
                )
            })
            .collect())
    }

    /// Inserts `m` as the new slot `i`.
    pub fn poke(&self, m: &Multivector, i: usize) -> Result<TensorPoly> {
        if i == 0 || i > self.rank + 1 {
            return Err(Error::SlotOutOfRange {
                slot: i,
                rank: self.rank,
            });
        }
        let mut out = TensorPoly::zero(self.dim, self.rank + 1);
        for (w, c) in &self.terms {
            for (b, cb) in m.terms() {
                let mut nw = w.clone();
                nw.insert(i - 1, b);
                out.add_term(nw, &(c * cb));
            }
        }
        Ok(out)
    }

    /// Exchanges slots `i` and `i+1` without sign.
    pub fn switch(&self, i: usize) -> Result<TensorPoly> {
        self.check_slot(i, 2)?;
        Ok(self.permute_adjacent(i, false))
    }

    /// Exchanges slots `i` and `i+1` with the Koszul sign `(-1)^{pq}`.
    pub fn gswitch(&self, i: usize) -> Result<TensorPoly> {
        self.check_slot(i, 2)?;
        Ok(self.permute_adjacent(i, true))
    }

    fn permute_adjacent(&self, i: usize, graded: bool) -> TensorPoly {
        let mut out = TensorPoly::zero(self.dim, self.rank);
        for (w, c) in &self.terms {
            let mut nw = w.clone();
            nw.swap(i - 1, i);
            let odd = graded && (w[i - 1].grade() * w[i].grade()) % 2 == 1;
            let c = if odd { -c } else { c.clone() };
            out.add_term(nw, &c);
        }
        out
    }

    /// Applies a linear endomorphism, given on blades, to slot `i`.
    pub fn mapop(&self, i: usize, f: impl Fn(Blade) -> Multivector) -> Result<TensorPoly> {
        self.replace_slots(i, 1, 1, |bs| TensorPoly::from_multivector(&f(bs[0])))
    }

    /// Fuses slots `i` and `i+1` through a bilinear product given on blades.
    pub fn map_mul(&self, i: usize, m: impl Fn(Blade, Blade) -> Multivector) -> Result<TensorPoly> {
        self.replace_slots(i, 2, 1, |bs| TensorPoly::from_multivector(&m(bs[0], bs[1])))
    }

    /// Consumes slots `i` and `i+1` through a scalar pairing given on blades.
    pub fn contract(&self, i: usize, p: impl Fn(Blade, Blade) -> ScalarRF) -> Result<TensorPoly> {
        let dim = self.dim;
        self.replace_slots(i, 2, 0, |bs| TensorPoly::scalar(dim, p(bs[0], bs[1])))
    }

    /// Unwraps a rank-1 tensor.
    pub fn drop_t(&self) -> Result<Multivector> {
        if self.rank != 1 {
            return Err(Error::RankMismatch {
                expected: 1,
                found: self.rank,
            });
        }
        Ok(Multivector::from_terms(
            self.dim,
            self.terms.iter().map(|(w, c)| (w[0], c.clone())),
        ))
    }

    /// Canonical re-collection. Values are kept collected at all times, so
    /// this is the identity on the representation.
    pub fn tcollect(&self) -> TensorPoly {
        self.clone()
    }

    pub fn to_dsl(&self) -> String {
        self.render("t")
    }

    fn render(&self, head: &str) -> String {
        if self.rank == 0 {
            return self.coeff(&[]).to_string();
        }
        let dsl = head == "t";
        render_terms(self.terms.iter().map(|(w, c)| {
            let parts: Vec<String> = w
                .iter()
                .map(|b| if dsl { b.dsl_name() } else { b.name() })
                .collect();
            (format!("{head}({})", parts.join(",")), c)
        }))
    }
}

/// Multilinear tensor product of multivectors.
pub fn tensor(parts: &[Multivector]) -> Result<TensorPoly> {
    let Some(first) = parts.first() else {
        return Ok(TensorPoly::scalar(1, ScalarRF::one()));
    };
    let dim = first.dim();
    let mut acc = TensorPoly::scalar(dim, ScalarRF::one());
    for p in parts {
        if p.dim() != dim {
            return Err(Error::DimMismatch {
                left: dim,
                right: p.dim(),
            });
        }
        acc = tensor_product(&acc, &TensorPoly::from_multivector(p))?;
    }
    Ok(acc)
}

/// Concatenation product of tensors: rank adds.
pub fn tensor_product(a: &TensorPoly, b: &TensorPoly) -> Result<TensorPoly> {
    if a.dim != b.dim {
        return Err(Error::DimMismatch {
            left: a.dim,
            right: b.dim,
        });
    }
    let mut out = TensorPoly::zero(a.dim, a.rank + b.rank);
    for (wa, ca) in &a.terms {
        for (wb, cb) in &b.terms {
            let mut w = wa.clone();
            w.extend_from_slice(wb);
            out.add_term(w, &(ca * cb));
        }
    }
    Ok(out)
}

impl fmt::Display for TensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("&t"))
    }
}

impl fmt::Debug for TensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
