use std::collections::BTreeSet;
use std::fmt;

use super::{check_order, TableError};

/// A permutation of the carrier `{0, .., n-1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u8>,
}

impl Perm {
    pub fn new(images: Vec<usize>) -> Result<Self, TableError> {
        check_order(images.len())?;
        if images.iter().any(|&i| i >= images.len()) {
            return Err(TableError::NotPermutation);
        }
        Self::from_images(images.into_iter().map(|i| i as u8).collect())
    }

    pub(crate) fn from_images(images: Vec<u8>) -> Result<Self, TableError> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            let slot = seen.get_mut(i as usize).ok_or(TableError::NotPermutation)?;
            if *slot {
                return Err(TableError::NotPermutation);
            }
            *slot = true;
        }
        Ok(Self { images })
    }

    pub fn identity(order: usize) -> Self {
        Self {
            images: (0..order).map(|i| i as u8).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &j)| i == j as usize)
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn compose(&self, first: &Perm) -> Perm {
        assert_eq!(self.order(), first.order());
        Perm {
            images: first
                .images
                .iter()
                .map(|&i| self.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u8; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u8;
        }
        Perm { images }
    }

    pub fn pow(&self, k: i64) -> Perm {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut exp = k.unsigned_abs();
        let mut acc = Perm::identity(self.order());
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.compose(&sq);
            }
            sq = sq.compose(&sq);
            exp >>= 1;
        }
        acc
    }

    pub fn commutes_with(&self, other: &Perm) -> bool {
        self.images
            .iter()
            .zip(&other.images)
            .all(|(&a, &b)| self.images[b as usize] == other.images[a as usize])
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.images)
    }
}

/// A permutation group given by generators, with its elements materialized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermGroup {
    order: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
}

impl PermGroup {
    /// Closure of `generators` under composition, by breadth-first multiplication.
    /// Elements are kept sorted by image array.
    pub fn generate(order: usize, generators: Vec<Perm>) -> PermGroup {
        assert!(generators.iter().all(|g| g.order() == order));
        let mut seen = BTreeSet::new();
        let id = Perm::identity(order);
        seen.insert(id.clone());
        let mut frontier = vec![id];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for e in &frontier {
                for g in &generators {
                    let p = g.compose(e);
                    if seen.insert(p.clone()) {
                        next.push(p);
                    }
                }
            }
            frontier = next;
        }
        PermGroup {
            order,
            generators,
            elements: seen.into_iter().collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.order
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Commutativity of the generators decides commutativity of the whole group.
    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .enumerate()
            .all(|(i, a)| self.generators[i + 1..].iter().all(|b| a.commutes_with(b)))
    }
}
