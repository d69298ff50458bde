use std::fmt;

use crate::error::{Error, Result};

/// Square Cayley table over the carrier `0..size`; entry `(i, j)` is `i * j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CayleyTable {
    size: usize,
    data: Vec<usize>,
}

impl CayleyTable {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let size = rows.len();
        if size == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        let mut data = Vec::with_capacity(size * size);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != size {
                return Err(Error::InvalidTable(format!(
                    "row {i} has {} entries, expected {size}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= size) {
                return Err(Error::InvalidTable(format!("row {i} has entry {bad} >= {size}")));
            }
            data.extend(row);
        }
        Ok(CayleyTable { size, data })
    }

    /// Builds the table of `op` on `0..size`. Panics if `op` leaves the carrier.
    pub fn from_fn(size: usize, mut op: impl FnMut(usize, usize) -> usize) -> Self {
        let mut data = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                let v = op(i, j);
                assert!(v < size, "operation left the carrier: {i}*{j} = {v}");
                data.push(v);
            }
        }
        CayleyTable { size, data }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.data[i * self.size + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> {
        self.data.chunks(self.size)
    }

    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        self.rows().map(<[usize]>::to_vec).collect()
    }

    /// Column `j` read as the map `i -> i * j`.
    pub fn column(&self, j: usize) -> Vec<usize> {
        (0..self.size).map(|i| self.get(i, j)).collect()
    }

    /// Table transported along the bijection `perm` (old index -> new index).
    pub fn relabel(&self, perm: &[usize]) -> CayleyTable {
        let n = self.size;
        let mut inv = vec![0; n];
        for (old, &new) in perm.iter().enumerate() {
            inv[new] = old;
        }
        CayleyTable::from_fn(n, |i, j| perm[self.get(inv[i], inv[j])])
    }

    /// Entries in row-major order.
    pub fn data(&self) -> &[usize] {
        &self.data
    }
}

impl fmt::Display for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}
