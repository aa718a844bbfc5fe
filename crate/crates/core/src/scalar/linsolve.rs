//! Gaussian elimination over the rational-function field.

use std::collections::{BTreeMap, BTreeSet};

use super::poly::Poly;
use super::rational::ScalarRF;
use super::sym::Sym;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveKind {
    Unique,
    Parametric,
    Inconsistent,
}

/// Outcome of [`solve_linear`]. Free unknowns are mapped to themselves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub kind: SolveKind,
    pub assignment: BTreeMap<Sym, ScalarRF>,
    pub free: BTreeSet<Sym>,
}

impl SolveResult {
    pub fn is_unique(&self) -> bool {
        self.kind == SolveKind::Unique
    }

    pub fn is_inconsistent(&self) -> bool {
        self.kind == SolveKind::Inconsistent
    }
}

/// Splits an affine-linear polynomial into unknown coefficients and the
/// constant part.
fn linearize(eq: &Poly, index: &BTreeMap<&Sym, usize>, n: usize) -> Result<Vec<ScalarRF>> {
    let mut coeffs: Vec<Vec<_>> = vec![Vec::new(); n + 1];
    for (m, c) in eq.terms() {
        let (inside, outside) = m.partition(|s| index.contains_key(s));
        match inside.degree() {
            0 => coeffs[n].push((outside, c.clone())),
            1 => {
                let u = &inside.powers()[0].0;
                coeffs[index[u]].push((outside, c.clone()));
            }
            _ => return Err(Error::NotLinear(eq.to_string())),
        }
    }
    Ok(coeffs
        .into_iter()
        .map(|t| ScalarRF::from_poly(Poly::from_terms(t)))
        .collect())
}

/// Solves `eqs = 0` for `unknowns`, treating every other symbol as a field
/// element.
pub fn solve_linear(eqs: &[Poly], unknowns: &[Sym]) -> Result<SolveResult> {
    let n = unknowns.len();
    let index: BTreeMap<&Sym, usize> = unknowns.iter().enumerate().map(|(k, s)| (s, k)).collect();
    let mut rows: Vec<Vec<ScalarRF>> = Vec::new();
    for eq in eqs {
        if eq.is_zero() {
            continue;
        }
        rows.push(linearize(eq, &index, n)?);
    }

    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut next_row = 0;
    for col in 0..n {
        let pivot = (next_row..rows.len())
            .filter(|&r| !rows[r][col].is_zero())
            .min_by_key(|&r| (rows[r][col].weight(), r));
        let Some(p) = pivot else { continue };
        rows.swap(p, next_row);
        let inv = rows[next_row][col].inv()?;
        let pivot_row: Vec<ScalarRF> = rows[next_row].iter().map(|v| v * &inv).collect();
        rows[next_row] = pivot_row.clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == next_row || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for c in col..=n {
                if !pivot_row[c].is_zero() {
                    row[c] = &row[c] - &(&factor * &pivot_row[c]);
                }
            }
        }
        pivots.push((next_row, col));
        next_row += 1;
    }

    if rows[next_row..].iter().any(|row| !row[n].is_zero()) {
        return Ok(SolveResult {
            kind: SolveKind::Inconsistent,
            assignment: BTreeMap::new(),
            free: BTreeSet::new(),
        });
    }

    let pivot_cols: BTreeSet<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let free: BTreeSet<Sym> = (0..n)
        .filter(|c| !pivot_cols.contains(c))
        .map(|c| unknowns[c].clone())
        .collect();
    let mut assignment = BTreeMap::new();
    for s in &free {
        assignment.insert(s.clone(), ScalarRF::sym(s.clone()));
    }
    for &(r, col) in &pivots {
        let row = &rows[r];
        let mut value = -&row[n];
        for c in (0..n).filter(|c| !pivot_cols.contains(c)) {
            if !row[c].is_zero() {
                value = &value - &(&row[c] * &ScalarRF::sym(unknowns[c].clone()));
            }
        }
        assignment.insert(unknowns[col].clone(), value);
    }

    for eq in eqs {
        let residual = ScalarRF::from_poly(eq.clone()).subst(&assignment)?;
        if !residual.is_zero() {
            return Err(Error::ResidualNonZero(residual.to_string()));
        }
    }

    Ok(SolveResult {
        kind: if free.is_empty() {
            SolveKind::Unique
        } else {
            SolveKind::Parametric
        },
        assignment,
        free,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational::{int, sym1, sym2};

    fn s() -> Sym {
        Sym::new("s")
    }

    #[test]
    fn single_unknown() {
        let eq = &Poly::var(s()) + &Poly::var(Sym::indexed("b", &[1, 2]));
        let r = solve_linear(&[eq], &[s()]).unwrap();
        assert_eq!(r.kind, SolveKind::Unique);
        assert_eq!(r.assignment[&s()], -sym2("b", 1, 2));
    }

    #[test]
    fn formal_coefficients_force_zero() {
        let sx1 = &Poly::var(s()) * &Poly::var(Sym::indexed("x", &[1]));
        let sx2 = &Poly::var(s()) * &Poly::var(Sym::indexed("x", &[2]));
        let r = solve_linear(&[sx1, sx2], &[s()]).unwrap();
        assert_eq!(r.kind, SolveKind::Unique);
        assert!(r.assignment[&s()].is_zero());
    }

    #[test]
    fn quadratic_is_rejected() {
        let eq = Poly::var(s()).pow(2);
        assert!(matches!(solve_linear(&[eq], &[s()]), Err(Error::NotLinear(_))));
    }

    #[test]
    fn inconsistent_and_parametric() {
        let u = Sym::new("u");
        let v = Sym::new("v");
        let one = Poly::one();
        let e1 = &Poly::var(u.clone()) + &Poly::var(v.clone());
        let e2 = &e1 - &one;
        let r = solve_linear(&[e1.clone(), e2], &[u.clone(), v.clone()]).unwrap();
        assert_eq!(r.kind, SolveKind::Inconsistent);

        let r = solve_linear(&[e1], &[u.clone(), v.clone()]).unwrap();
        assert_eq!(r.kind, SolveKind::Parametric);
        assert!(r.free.contains(&v));
        assert_eq!(r.assignment[&u], -ScalarRF::sym(v.clone()));
        assert_eq!(r.assignment[&v], ScalarRF::sym(v));
    }

    #[test]
    fn symbolic_two_by_two() {
        // a*u + v = 1, u - v = x[1]
        let u = Sym::new("u");
        let v = Sym::new("v");
        let a = Poly::var(Sym::new("a"));
        let e1 = &(&(&a * &Poly::var(u.clone())) + &Poly::var(v.clone())) - &Poly::one();
        let e2 = &(&Poly::var(u.clone()) - &Poly::var(v.clone())) - &Poly::var(Sym::indexed("x", &[1]));
        let r = solve_linear(&[e1, e2], &[u.clone(), v]).unwrap();
        let expect_u = (&int(1) + &sym1("x", 1))
            .checked_div(&(&ScalarRF::sym(Sym::new("a")) + &int(1)))
            .unwrap();
        assert_eq!(r.assignment[&u], expect_u);
    }
}
