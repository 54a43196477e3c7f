use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Pascal's triangle over ℤ, grown on demand.
///
/// Rows are only ever appended, so a value once read never changes.
#[derive(Debug, Default)]
pub struct BinomialTable {
    rows: RwLock<Vec<Vec<BigInt>>>,
}

impl BinomialTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of rows currently materialised.
    pub fn capacity(&self) -> usize {
        self.rows.read().expect("binomial table poisoned").len()
    }

    pub fn get(&self, n: usize, k: usize) -> BigInt {
        if k > n {
            return BigInt::zero();
        }
        {
            let rows = self.rows.read().expect("binomial table poisoned");
            if let Some(row) = rows.get(n) {
                return row[k].clone();
            }
        }
        let mut rows = self.rows.write().expect("binomial table poisoned");
        while rows.len() <= n {
            let next = match rows.last() {
                None => vec![BigInt::one()],
                Some(prev) => {
                    let mut row = Vec::with_capacity(prev.len() + 1);
                    row.push(BigInt::one());
                    for w in prev.windows(2) {
                        row.push(&w[0] + &w[1]);
                    }
                    row.push(BigInt::one());
                    row
                }
            };
            rows.push(next);
        }
        rows[n][k].clone()
    }

    /// Row `n` of the triangle, `C(n, 0..=n)`.
    pub fn row(&self, n: usize) -> Vec<BigInt> {
        self.get(n, 0);
        self.rows.read().expect("binomial table poisoned")[n].clone()
    }
}

/// Process-wide shared table.
pub fn binomial_table() -> &'static BinomialTable {
    static TABLE: OnceLock<BinomialTable> = OnceLock::new();
    TABLE.get_or_init(BinomialTable::new)
}

/// `C(n, k)`, zero when `k > n`.
pub fn binom(n: usize, k: usize) -> BigInt {
    binomial_table().get(n, k)
}
