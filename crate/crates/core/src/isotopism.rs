use crate::error::{Error, Result};
use crate::square::Triple;

/// Row, column and symbol permutations of a common degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Isotopism {
    rows: Vec<usize>,
    cols: Vec<usize>,
    syms: Vec<usize>,
}

fn check_permutation(name: &str, perm: &[usize]) -> Result<()> {
    let mut seen = vec![false; perm.len()];
    for &x in perm {
        if x >= perm.len() || std::mem::replace(&mut seen[x], true) {
            return Err(Error::Range(format!("{name} map is not a permutation")));
        }
    }
    Ok(())
}

fn invert(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (i, &x) in perm.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

impl Isotopism {
    pub fn new(rows: Vec<usize>, cols: Vec<usize>, syms: Vec<usize>) -> Result<Self> {
        if rows.len() != cols.len() || rows.len() != syms.len() {
            return Err(Error::Range("component degrees differ".into()));
        }
        check_permutation("row", &rows)?;
        check_permutation("column", &cols)?;
        check_permutation("symbol", &syms)?;
        Ok(Isotopism { rows, cols, syms })
    }

    pub fn identity(n: usize) -> Self {
        let id: Vec<usize> = (0..n).collect();
        Isotopism {
            rows: id.clone(),
            cols: id.clone(),
            syms: id,
        }
    }

    /// A row-only isotopism `(α, ι, ι)`.
    pub fn from_rows(rows: Vec<usize>) -> Result<Self> {
        let n = rows.len();
        Self::new(rows, (0..n).collect(), (0..n).collect())
    }

    /// `α_{k,k'}`: exchanges rows `k` and `k'`.
    pub fn row_swap(n: usize, k: usize, k2: usize) -> Result<Self> {
        if k == k2 || k >= n || k2 >= n {
            return Err(Error::Range(format!(
                "row swap ({k},{k2}) invalid for order {n}"
            )));
        }
        let mut rows: Vec<usize> = (0..n).collect();
        rows.swap(k, k2);
        Self::from_rows(rows)
    }

    /// Exchanges rows `4k+1` and `4k+2` for every `k` in `ks`.
    pub fn multi_swap(n: usize, ks: &[usize]) -> Result<Self> {
        let mut rows: Vec<usize> = (0..n).collect();
        let mut seen = Vec::new();
        for &k in ks {
            if 4 * k + 2 >= n {
                return Err(Error::Range(format!("swap block {k} invalid for order {n}")));
            }
            if seen.contains(&k) {
                return Err(Error::Range(format!("swap block {k} repeated")));
            }
            seen.push(k);
            rows.swap(4 * k + 1, 4 * k + 2);
        }
        Self::from_rows(rows)
    }

    pub fn degree(&self) -> usize {
        self.rows.len()
    }

    pub fn row_map(&self) -> &[usize] {
        &self.rows
    }

    pub fn col_map(&self) -> &[usize] {
        &self.cols
    }

    pub fn sym_map(&self) -> &[usize] {
        &self.syms
    }

    pub fn map(&self, t: Triple) -> Triple {
        Triple::new(self.rows[t.row], self.cols[t.col], self.syms[t.sym])
    }

    pub fn inverse(&self) -> Self {
        Isotopism {
            rows: invert(&self.rows),
            cols: invert(&self.cols),
            syms: invert(&self.syms),
        }
    }

    /// Apply `self` first, then `next`.
    pub fn then(&self, next: &Isotopism) -> Self {
        let chain = |a: &[usize], b: &[usize]| a.iter().map(|&x| b[x]).collect();
        Isotopism {
            rows: chain(&self.rows, &next.rows),
            cols: chain(&self.cols, &next.cols),
            syms: chain(&self.syms, &next.syms),
        }
    }

    pub fn is_identity(&self) -> bool {
        [&self.rows, &self.cols, &self.syms]
            .iter()
            .all(|p| p.iter().enumerate().all(|(i, &x)| i == x))
    }
}
