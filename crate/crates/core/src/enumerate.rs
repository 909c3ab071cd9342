//! Canonical forms, isomorphism testing and exhaustive enumeration of small
//! quandles and of their oriented singquandle extensions.
//!
//! Canonical forms minimize the concatenated role tables over every relabeling
//! of the carrier, so they are only offered up to order 8. Enumeration is
//! sequential backtracking; canonicalization of the leaves runs in parallel
//! and the results are sorted, so output never depends on the split.

use std::cmp::Ordering;
use std::ops::ControlFlow;

use rayon::prelude::*;
use thiserror::Error;

use crate::axioms::{self, BondleMode, Failure, OsqMode, StuquandleMode};
use crate::tables::{OpTable, Perm, Role, StructureBundle, TableError};

pub const MAX_CANONICAL_ORDER: usize = 8;
pub const MAX_QUANDLE_ORDER: usize = 6;
pub const MAX_EXTENSION_ORDER: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("order {order} exceeds the limit of {max} for this operation")]
    OrderTooLarge { order: usize, max: usize },
    #[error("column order must be a permutation of 0..{0}")]
    BadColumnOrder(usize),
    #[error("input is not a quandle: {0}")]
    NotQuandle(Failure),
    #[error("catalog entry fails its checker: {0}")]
    Rejected(String),
    #[error(transparent)]
    Table(#[from] TableError),
}

fn bounded(order: usize, max: usize) -> Result<(), EnumerateError> {
    if order > max {
        Err(EnumerateError::OrderTooLarge { order, max })
    } else {
        Ok(())
    }
}

/// All permutations of `0..n` in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut current: Vec<usize> = (0..n).collect();
    let mut out = vec![current.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
        out.push(current.clone());
    }
}

/// Compares the relabeling of `tables` by `sigma` (with inverse `inv`) against
/// `best`, stopping at the first differing entry.
fn compare_relabeled(tables: &[&OpTable], sigma: &[usize], inv: &[usize], best: &[u8]) -> Ordering {
    let n = sigma.len();
    let mut k = 0;
    for t in tables {
        for a in 0..n {
            let row = inv[a];
            for b in 0..n {
                let v = sigma[t.get(row, inv[b])] as u8;
                match v.cmp(&best[k]) {
                    Ordering::Equal => k += 1,
                    other => return other,
                }
            }
        }
    }
    Ordering::Equal
}

/// The lexicographically least relabeling of `b`, comparing the concatenated
/// tables in role order (star, slash, dot, circ, bullet).
pub fn canonical_form(b: &StructureBundle) -> Result<StructureBundle, EnumerateError> {
    let n = b.order();
    bounded(n, MAX_CANONICAL_ORDER)?;
    let tables: Vec<&OpTable> = b.roles().map(|(_, t)| t).collect();
    let mut best = b.flat_key();
    let mut best_sigma: Vec<usize> = (0..n).collect();
    let mut inv = vec![0; n];
    for sigma in permutations(n) {
        for (i, &s) in sigma.iter().enumerate() {
            inv[s] = i;
        }
        if compare_relabeled(&tables, &sigma, &inv, &best) == Ordering::Less {
            best_sigma = sigma;
            let p = Perm::new(best_sigma.clone())?;
            best = b.relabel(&p).flat_key();
        }
    }
    Ok(b.relabel(&Perm::new(best_sigma)?))
}

/// Isomorphism of bundles with the same bound roles; different orders or role
/// sets are never isomorphic.
pub fn are_isomorphic(a: &StructureBundle, b: &StructureBundle) -> Result<bool, EnumerateError> {
    if a.order() != b.order() || !Role::ALL.iter().all(|&r| a.has(r) == b.has(r)) {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatalogKind {
    Quandle,
    Osq,
    Stuquandle,
    Bondle,
}

impl CatalogKind {
    pub fn name(self) -> &'static str {
        match self {
            CatalogKind::Quandle => "quandle",
            CatalogKind::Osq => "osq",
            CatalogKind::Stuquandle => "stuquandle",
            CatalogKind::Bondle => "bondle",
        }
    }

    fn accepts(self, b: &StructureBundle) -> Result<bool, TableError> {
        Ok(match self {
            CatalogKind::Quandle => axioms::check_quandle(b).is_ok(),
            CatalogKind::Osq => axioms::check_osq(b, OsqMode::Reduced)?.is_ok(),
            CatalogKind::Stuquandle => {
                axioms::check_stuquandle(b, StuquandleMode::Corollary)?.is_ok()
            }
            CatalogKind::Bondle => axioms::check_bondle(b, BondleMode::Theorem)?.is_ok(),
        })
    }
}

/// Pairwise non-isomorphic structures of one kind and order, each in
/// canonical form, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Catalog {
    pub kind: CatalogKind,
    pub order: usize,
    pub entries: Vec<StructureBundle>,
}

impl Catalog {
    /// Canonicalizes, deduplicates and sorts `bundles`, rejecting any that
    /// fail the checker for `kind`.
    pub fn from_bundles(
        kind: CatalogKind,
        order: usize,
        bundles: Vec<StructureBundle>,
    ) -> Result<Catalog, EnumerateError> {
        bounded(order, MAX_CANONICAL_ORDER)?;
        for b in &bundles {
            if b.order() != order {
                return Err(TableError::OrderMismatch {
                    expected: order,
                    found: b.order(),
                }
                .into());
            }
            if !kind.accepts(b)? {
                return Err(EnumerateError::Rejected(format!("{b:?}")));
            }
        }
        let mut keyed: Vec<(Vec<u8>, StructureBundle)> = bundles
            .par_iter()
            .map(|b| canonical_form(b).map(|c| (c.flat_key(), c)))
            .collect::<Result<_, _>>()?;
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        keyed.dedup_by(|a, b| a.0 == b.0);
        Ok(Catalog {
            kind,
            order,
            entries: keyed.into_iter().map(|(_, b)| b).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// All quandles of order `n` up to isomorphism.
pub fn enumerate_quandles(n: usize) -> Result<Catalog, EnumerateError> {
    let order: Vec<usize> = (0..n).collect();
    enumerate_quandles_with_column_order(n, &order)
}

/// As [`enumerate_quandles`], filling the columns of the table in `column_order`.
pub fn enumerate_quandles_with_column_order(
    n: usize,
    column_order: &[usize],
) -> Result<Catalog, EnumerateError> {
    if n == 0 {
        return Err(TableError::EmptyCarrier.into());
    }
    bounded(n, MAX_QUANDLE_ORDER)?;
    let mut sorted = column_order.to_vec();
    sorted.sort_unstable();
    if sorted != (0..n).collect::<Vec<_>>() {
        return Err(EnumerateError::BadColumnOrder(n));
    }
    let all = permutations(n);
    let candidates: Vec<Vec<Vec<u8>>> = (0..n)
        .map(|y| {
            all.iter()
                .filter(|p| p[y] == y)
                .map(|p| p.iter().map(|&i| i as u8).collect())
                .collect()
        })
        .collect();
    let mut search = QuandleSearch {
        n,
        column_order,
        candidates: &candidates,
        columns: vec![None; n],
        found: Vec::new(),
    };
    search.extend(0);
    let bundles = search.found.into_iter().map(StructureBundle::new).collect();
    Catalog::from_bundles(CatalogKind::Quandle, n, bundles)
}

struct QuandleSearch<'a> {
    n: usize,
    column_order: &'a [usize],
    candidates: &'a [Vec<Vec<u8>>],
    /// `columns[y][x] = x*y`
    columns: Vec<Option<&'a [u8]>>,
    found: Vec<OpTable>,
}

impl<'a> QuandleSearch<'a> {
    fn extend(&mut self, depth: usize) {
        if depth == self.n {
            let mut entries = vec![0u8; self.n * self.n];
            for (y, col) in self.columns.iter().enumerate() {
                for (x, &v) in col.unwrap().iter().enumerate() {
                    entries[x * self.n + y] = v;
                }
            }
            self.found.push(OpTable::from_raw(self.n, entries));
            return;
        }
        let y = self.column_order[depth];
        for candidate in &self.candidates[y] {
            self.columns[y] = Some(candidate);
            if self.consistent() {
                self.extend(depth + 1);
            }
        }
        self.columns[y] = None;
    }

    /// `R_z R_y = R_{y*z} R_z` wherever all three columns are known.
    fn consistent(&self) -> bool {
        for (y, cy) in self.columns.iter().enumerate() {
            let Some(cy) = cy else { continue };
            for cz in self.columns.iter().flatten() {
                let w = cz[y] as usize;
                let Some(cw) = self.columns[w] else { continue };
                if (0..self.n).any(|x| cz[cy[x] as usize] != cw[cz[x] as usize]) {
                    return false;
                }
            }
        }
        true
    }
}

fn require_quandle(b: &StructureBundle) -> Result<(), EnumerateError> {
    match axioms::check_quandle(b).failure() {
        Some(f) => Err(EnumerateError::NotQuandle(f.clone())),
        None => Ok(()),
    }
}

/// Visits every `dot` making `(dot, star, slash)` an oriented singquandle, in
/// lexicographic order of the row-major table, with `star` held fixed.
pub fn for_each_osq_extension<F>(
    b: &StructureBundle,
    mut visit: F,
) -> Result<ControlFlow<()>, EnumerateError>
where
    F: FnMut(&OpTable) -> ControlFlow<()>,
{
    bounded(b.order(), MAX_EXTENSION_ORDER)?;
    require_quandle(b)?;
    let n = b.order();
    let mut search = ExtensionSearch {
        n,
        star: b.star(),
        dot: vec![UNSET; n * n],
    };
    Ok(search.extend(0, b, &mut visit))
}

const UNSET: u8 = u8::MAX;

struct ExtensionSearch<'a> {
    n: usize,
    star: &'a OpTable,
    dot: Vec<u8>,
}

impl ExtensionSearch<'_> {
    fn extend<F>(&mut self, cell: usize, b: &StructureBundle, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&OpTable) -> ControlFlow<()>,
    {
        if cell == self.n * self.n {
            let table = OpTable::from_raw(self.n, self.dot.clone());
            debug_assert!(axioms::check_osq(
                &b.clone().with(Role::Dot, table.clone()).unwrap(),
                OsqMode::Reduced
            )
            .unwrap()
            .is_ok());
            return visit(&table);
        }
        for v in 0..self.n as u8 {
            self.dot[cell] = v;
            if self.consistent() {
                self.extend(cell + 1, b, visit)?;
            }
        }
        self.dot[cell] = UNSET;
        ControlFlow::Continue(())
    }

    fn op(&self, x: usize, y: usize) -> Option<usize> {
        match self.dot[x * self.n + y] {
            UNSET => None,
            v => Some(v as usize),
        }
    }

    /// The two defining identities at every assignment whose terms are all known.
    fn consistent(&self) -> bool {
        let s = |a: usize, b: usize| self.star.get(a, b);
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                let xy = self.op(x, y);
                for z in 0..n {
                    if let (Some(xy), Some(rhs)) = (xy, self.op(s(x, z), s(y, z))) {
                        if s(xy, z) != rhs {
                            return false;
                        }
                    }
                    if let (Some(xy), Some(t)) = (xy, self.op(s(y, x), x)) {
                        if s(s(z, y), x) != s(s(z, xy), t) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// Extensions of one quandle: the raw tables and the catalog up to
/// isomorphisms that preserve the quandle.
#[derive(Debug, Clone)]
pub struct ExtensionCatalog {
    pub raw: Vec<OpTable>,
    pub catalog: Catalog,
}

impl ExtensionCatalog {
    pub fn raw_count(&self) -> usize {
        self.raw.len()
    }
}

/// All oriented singquandle operations over the fixed quandle in `b`.
///
/// Over a projection quandle every table qualifies, so order 4 there means
/// 4^16 raw tables; the order bound does not protect against that case.
pub fn enumerate_osq_extensions(b: &StructureBundle) -> Result<ExtensionCatalog, EnumerateError> {
    let mut raw = Vec::new();
    let _ = for_each_osq_extension(b, |t| {
        raw.push(t.clone());
        ControlFlow::Continue(())
    })?;
    let base = b.clone().without(Role::Circ).without(Role::Bullet);
    let bundles = raw
        .iter()
        .map(|t| base.clone().with(Role::Dot, t.clone()))
        .collect::<Result<Vec<_>, _>>()?;
    let catalog = Catalog::from_bundles(CatalogKind::Osq, b.order(), bundles)?;
    Ok(ExtensionCatalog { raw, catalog })
}

/// First oriented singquandle `(bullet, star)` violating eq_bondles, scanning
/// orders `1..=max_order`, quandles in catalog order and extensions in
/// lexicographic order. The returned bundle binds the table to both `dot` and `bullet`.
pub fn search_eq_bondles_counterexample(
    max_order: usize,
) -> Result<Option<StructureBundle>, EnumerateError> {
    bounded(max_order, MAX_EXTENSION_ORDER)?;
    for order in 1..=max_order {
        for q in enumerate_quandles(order)?.entries {
            let mut hit = None;
            let _ = for_each_osq_extension(&q, |t| {
                let fails = !axioms::check_eq_bondles(t, q.star())
                    .expect("same order")
                    .is_ok();
                if fails {
                    hit = Some(t.clone());
                    ControlFlow::Break(())
                } else {
                    ControlFlow::Continue(())
                }
            })?;
            if let Some(t) = hit {
                let witness = q.with(Role::Dot, t.clone())?.with(Role::Bullet, t)?;
                return Ok(Some(witness));
            }
        }
    }
    Ok(None)
}
