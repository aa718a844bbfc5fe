use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

/// A named indeterminate with up to two nonnegative indices, e.g. `b[1,2]`,
/// `x[3]` or a bare `phi`.
///
/// Symbols are totally ordered by name first and index list second. That
/// order fixes the variable precedence used by the monomial order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Sym {
    name: Arc<str>,
    idx: [u32; 2],
    arity: u8,
}

impl Sym {
    pub fn new(name: &str) -> Self {
        Sym {
            name: Arc::from(name),
            idx: [0; 2],
            arity: 0,
        }
    }

    /// # Panics
    ///
    /// Panics if more than two indices are given.
    pub fn indexed(name: &str, indices: &[u32]) -> Self {
        assert!(indices.len() <= 2, "a symbol carries at most two indices");
        let mut idx = [0; 2];
        idx[..indices.len()].copy_from_slice(indices);
        Sym {
            name: Arc::from(name),
            idx,
            arity: indices.len() as u8,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn indices(&self) -> &[u32] {
        &self.idx[..self.arity as usize]
    }
}

impl Ord for Sym {
    fn cmp(&self, other: &Self) -> Ordering {
        self.name
            .cmp(&other.name)
            .then_with(|| self.indices().cmp(other.indices()))
    }
}

impl PartialOrd for Sym {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)?;
        match self.indices() {
            [] => Ok(()),
            [i] => write!(f, "[{i}]"),
            [i, j] => write!(f, "[{i},{j}]"),
            _ => unreachable!(),
        }
    }
}

impl fmt::Debug for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
