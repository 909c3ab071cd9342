//! Finite binary operations stored as Cayley tables.
//!
//! The carrier of every structure is `{0, .., n-1}` and a table is read with
//! the left argument as the row: `entries[x][y] = x op y`. Tables written
//! 1-based elsewhere are shifted down by one when loaded (element `k` becomes
//! `k - 1`).

mod bundle;
mod perm;

pub use bundle::{Role, StructureBundle};
pub use perm::{Perm, PermGroup};

use std::fmt;

use thiserror::Error;

/// Largest carrier a table can hold; entries are stored as `u8`.
pub const MAX_ORDER: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("the carrier must be nonempty")]
    EmptyCarrier,
    #[error("order {0} exceeds the supported maximum of {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("table is not {order}x{order}")]
    Shape { order: usize },
    #[error("entry ({row}, {col}) = {value} lies outside the carrier of order {order}")]
    OutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("column {column} is not a permutation of the carrier")]
    NotBijective { column: usize },
    #[error("order mismatch: expected {expected}, found {found}")]
    OrderMismatch { expected: usize, found: usize },
    #[error("slash is not the right division of star at ({x}, {y})")]
    InconsistentSlash { x: usize, y: usize },
    #[error("images do not form a permutation of the carrier")]
    NotPermutation,
    #[error("the {0} role cannot be replaced once a bundle is built")]
    FixedRole(Role),
    #[error("role {0} is missing")]
    MissingRole(Role),
}

pub(crate) fn check_order(order: usize) -> Result<(), TableError> {
    if order == 0 {
        Err(TableError::EmptyCarrier)
    } else if order > MAX_ORDER {
        Err(TableError::OrderTooLarge(order))
    } else {
        Ok(())
    }
}

/// An `n x n` operation table over the carrier `{0, .., n-1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OpTable {
    order: usize,
    entries: Vec<u8>,
}

impl OpTable {
    /// Builds a table from its row-major flattening.
    pub fn new(order: usize, entries: Vec<usize>) -> Result<Self, TableError> {
        check_order(order)?;
        if entries.len() != order * order {
            return Err(TableError::Shape { order });
        }
        let mut packed = Vec::with_capacity(entries.len());
        for (i, &value) in entries.iter().enumerate() {
            if value >= order {
                return Err(TableError::OutOfRange {
                    row: i / order,
                    col: i % order,
                    value,
                    order,
                });
            }
            packed.push(value as u8);
        }
        Ok(Self {
            order,
            entries: packed,
        })
    }

    pub fn from_rows<R: AsRef<[usize]>>(rows: &[R]) -> Result<Self, TableError> {
        let order = rows.len();
        check_order(order)?;
        let mut flat = Vec::with_capacity(order * order);
        for row in rows {
            let row = row.as_ref();
            if row.len() != order {
                return Err(TableError::Shape { order });
            }
            flat.extend_from_slice(row);
        }
        Self::new(order, flat)
    }

    pub fn from_fn(order: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self, TableError> {
        check_order(order)?;
        let flat = (0..order * order)
            .map(|i| f(i / order, i % order))
            .collect();
        Self::new(order, flat)
    }

    /// `x op y = x`.
    pub fn projection(order: usize) -> Result<Self, TableError> {
        Self::from_fn(order, |x, _| x)
    }

    /// Trusted constructor for entries already known to be in range.
    pub(crate) fn from_raw(order: usize, entries: Vec<u8>) -> Self {
        debug_assert_eq!(entries.len(), order * order);
        debug_assert!(entries.iter().all(|&e| (e as usize) < order));
        Self { order, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.entries[x * self.order + y] as usize
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.entries
            .chunks(self.order)
            .map(|row| row.iter().map(|&e| e as usize).collect())
            .collect()
    }

    pub fn row(&self, x: usize) -> &[u8] {
        &self.entries[x * self.order..(x + 1) * self.order]
    }

    fn column_images(&self, y: usize) -> Vec<u8> {
        (0..self.order)
            .map(|x| self.entries[x * self.order + y])
            .collect()
    }

    /// True when every right translation `x -> x op y` is a bijection.
    pub fn is_right_quasigroup(&self) -> bool {
        (0..self.order).all(|y| self.right_translation(y).is_ok())
    }

    /// The right translation `R_y : x -> x op y`.
    pub fn right_translation(&self, y: usize) -> Result<Perm, TableError> {
        Perm::from_images(self.column_images(y)).map_err(|_| TableError::NotBijective { column: y })
    }

    fn right_translations(&self) -> Result<Vec<Perm>, TableError> {
        (0..self.order).map(|y| self.right_translation(y)).collect()
    }

    /// The right division `x / y = R_y^{-1}(x)`.
    pub fn derive_right_inverse(&self) -> Result<OpTable, TableError> {
        self.power(-1)
    }

    /// The opposite operation `x op' y = y op x`.
    pub fn opposite(&self) -> OpTable {
        let n = self.order;
        let mut entries = vec![0u8; n * n];
        for x in 0..n {
            for y in 0..n {
                entries[x * n + y] = self.entries[y * n + x];
            }
        }
        Self::from_raw(n, entries)
    }

    /// The power operation `x op^k y = R_y^k(x)`; negative `k` uses the inverse translation.
    pub fn power(&self, k: i64) -> Result<OpTable, TableError> {
        let n = self.order;
        let translations = self.right_translations()?;
        let mut entries = vec![0u8; n * n];
        for (y, r) in translations.iter().enumerate() {
            let rk = r.pow(k);
            for x in 0..n {
                entries[x * n + y] = rk.apply(x) as u8;
            }
        }
        Ok(Self::from_raw(n, entries))
    }

    /// Transports the table along `sigma`: the result maps `(sigma x, sigma y)` to `sigma(x op y)`.
    pub fn relabel(&self, sigma: &Perm) -> OpTable {
        let n = self.order;
        assert_eq!(
            sigma.order(),
            n,
            "relabeling permutation has the wrong order"
        );
        let mut entries = vec![0u8; n * n];
        for x in 0..n {
            let sx = sigma.apply(x);
            for y in 0..n {
                entries[sx * n + sigma.apply(y)] = sigma.apply(self.get(x, y)) as u8;
            }
        }
        Self::from_raw(n, entries)
    }

    /// The right multiplication group generated by every `R_y`.
    pub fn rmlt_group(&self) -> Result<PermGroup, TableError> {
        Ok(PermGroup::generate(self.order, self.right_translations()?))
    }
}

/// Free-standing form of [`OpTable::right_translation`].
pub fn right_translation(op: &OpTable, y: usize) -> Result<Perm, TableError> {
    op.right_translation(y)
}

pub fn derive_right_inverse(op: &OpTable) -> Result<OpTable, TableError> {
    op.derive_right_inverse()
}

pub fn opposite(op: &OpTable) -> OpTable {
    op.opposite()
}

pub fn power_op(op: &OpTable, k: i64) -> Result<OpTable, TableError> {
    op.power(k)
}

pub fn rmlt_group(star: &OpTable) -> Result<PermGroup, TableError> {
    star.rmlt_group()
}

pub fn is_abelian(group: &PermGroup) -> bool {
    group.is_abelian()
}

impl fmt::Debug for OpTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

/// Cayley-table layout with a header row of right arguments.
impl fmt::Display for OpTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = (self.order - 1).to_string().len();
        write!(f, "{:>width$} |", "")?;
        for y in 0..self.order {
            write!(f, " {y:>width$}")?;
        }
        writeln!(f)?;
        writeln!(f, "{}", "-".repeat((width + 1) * (self.order + 1) + 1))?;
        for x in 0..self.order {
            write!(f, "{x:>width$} |")?;
            for y in 0..self.order {
                write!(f, " {:>width$}", self.get(x, y))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star() -> OpTable {
        OpTable::from_rows(&[[0, 2, 0], [1, 1, 1], [2, 0, 2]]).unwrap()
    }

    fn bullet() -> OpTable {
        OpTable::from_rows(&[[1, 0, 2], [1, 1, 1], [0, 2, 1]]).unwrap()
    }

    fn dihedral3() -> OpTable {
        OpTable::from_rows(&[[0, 2, 1], [2, 1, 0], [1, 0, 2]]).unwrap()
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert_eq!(OpTable::new(0, vec![]), Err(TableError::EmptyCarrier));
        assert_eq!(
            OpTable::new(2, vec![0, 1, 1]),
            Err(TableError::Shape { order: 2 })
        );
        assert_eq!(
            OpTable::from_rows(&[[0, 2], [1, 1]]),
            Err(TableError::OutOfRange {
                row: 0,
                col: 1,
                value: 2,
                order: 2
            })
        );
        assert!(OpTable::projection(MAX_ORDER + 1).is_err());
    }

    #[test]
    fn right_translation_examples() {
        assert_eq!(star().right_translation(0).unwrap(), Perm::identity(3));
        let proj = OpTable::projection(4).unwrap();
        for y in 0..4 {
            assert!(proj.right_translation(y).unwrap().is_identity());
        }
        assert_eq!(
            dihedral3().right_translation(1).unwrap().images(),
            vec![2, 1, 0]
        );
    }

    #[test]
    fn right_translation_reports_column() {
        let t = OpTable::from_rows(&[[0, 0], [0, 1]]).unwrap();
        assert_eq!(
            t.right_translation(0),
            Err(TableError::NotBijective { column: 0 })
        );
        assert_eq!(
            t.derive_right_inverse(),
            Err(TableError::NotBijective { column: 0 })
        );
        assert!(!t.is_right_quasigroup());
    }

    #[test]
    fn right_inverse_examples() {
        assert_eq!(dihedral3().derive_right_inverse().unwrap(), dihedral3());
        let proj = OpTable::projection(3).unwrap();
        assert_eq!(proj.derive_right_inverse().unwrap(), proj);
        assert_eq!(star().derive_right_inverse().unwrap(), star());
    }

    #[test]
    fn opposite_examples() {
        let t = OpTable::from_rows(&[[0, 0], [1, 1]]).unwrap();
        assert_eq!(t.opposite().rows(), vec![vec![0, 1], vec![0, 1]]);
        let sym = OpTable::from_rows(&[[0, 1], [1, 0]]).unwrap();
        assert_eq!(sym.opposite(), sym);
        assert_eq!(
            bullet().opposite().rows(),
            vec![vec![1, 1, 0], vec![0, 1, 2], vec![2, 1, 1]]
        );
    }

    #[test]
    fn power_examples() {
        let proj = OpTable::projection(3).unwrap();
        assert_eq!(dihedral3().power(2).unwrap(), proj);
        assert_eq!(star().power(0).unwrap(), proj);
        assert_eq!(dihedral3().power(0).unwrap(), proj);
        assert_eq!(star().power(-1).unwrap(), star());
        assert_eq!(star().power(1).unwrap(), star());
    }

    #[test]
    fn rmlt_group_examples() {
        let s3 = dihedral3().rmlt_group().unwrap();
        assert_eq!(s3.len(), 6);
        assert!(!s3.is_abelian());

        let trivial = OpTable::projection(5).unwrap().rmlt_group().unwrap();
        assert_eq!(trivial.len(), 1);
        assert!(trivial.is_abelian());

        let g = star().rmlt_group().unwrap();
        assert_eq!(g.len(), 2);
        assert!(g.contains(&Perm::from_images(vec![2, 1, 0]).unwrap()));
        assert!(is_abelian(&g));
    }

    #[test]
    fn relabel_transports_structure() {
        let sigma = Perm::new(vec![1, 2, 0]).unwrap();
        let t = star().relabel(&sigma);
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(
                    t.get(sigma.apply(x), sigma.apply(y)),
                    sigma.apply(star().get(x, y))
                );
            }
        }
    }

    #[test]
    fn display_renders_cayley_table() {
        let text = OpTable::projection(2).unwrap().to_string();
        assert!(text.contains("0 | 0 0"));
        assert!(text.contains("1 | 1 1"));
    }
}
