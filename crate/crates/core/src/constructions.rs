//! Example families: projection and dihedral quandles, affine meshes, power
//! operations over 2-reductive quandles and the trivial stuquandle.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::axioms::{self, Failure, OsqMode};
use crate::tables::{OpTable, Role, StructureBundle, TableError, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("a mesh needs at least one component")]
    EmptyMesh,
    #[error("component {component} has a zero modulus")]
    ZeroModulus { component: usize },
    #[error("constants must form a {components}x{components} matrix")]
    ConstantsShape { components: usize },
    #[error("constant c[{0}][{1}] is not an element of component {1}")]
    BadElement(usize, usize),
    #[error("constant c[{0}][{0}] must be zero")]
    DiagonalNonZero(usize),
    #[error("the constants c[i][{0}] do not generate component {0}")]
    GenerationFailure(usize),
    #[error("mesh carrier of size {0} exceeds the supported maximum of {MAX_ORDER}")]
    TooLarge(usize),
    #[error("input is not a quandle: {0}")]
    NotQuandle(Failure),
    #[error("input quandle is not 2-reductive")]
    NotTwoReductive,
    #[error("input is not an oriented singquandle: {0}")]
    NotOsq(Failure),
    #[error(transparent)]
    Table(#[from] TableError),
}

/// A finite abelian group `Z_{m_1} ⊕ … ⊕ Z_{m_k}`, given by its moduli.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicSum {
    moduli: Vec<u32>,
}

impl CyclicSum {
    pub fn new(moduli: Vec<u32>) -> Self {
        Self { moduli }
    }

    pub fn moduli(&self) -> &[u32] {
        &self.moduli
    }

    /// Number of elements; saturates instead of overflowing.
    pub fn size(&self) -> usize {
        self.moduli
            .iter()
            .fold(1usize, |acc, &m| acc.saturating_mul(m as usize))
    }

    fn contains(&self, element: &[u32]) -> bool {
        element.len() == self.moduli.len() && element.iter().zip(&self.moduli).all(|(e, m)| e < m)
    }

    fn add(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        a.iter()
            .zip(b)
            .zip(&self.moduli)
            .map(|((x, y), m)| ((*x as u64 + *y as u64) % *m as u64) as u32)
            .collect()
    }

    fn neg(&self, a: &[u32]) -> Vec<u32> {
        a.iter()
            .zip(&self.moduli)
            .map(|(x, m)| (m - x) % m)
            .collect()
    }

    /// Position of `element` in the lexicographic listing of the group.
    fn index(&self, element: &[u32]) -> usize {
        element
            .iter()
            .zip(&self.moduli)
            .fold(0, |acc, (e, m)| acc * *m as usize + *e as usize)
    }

    fn element(&self, mut index: usize) -> Vec<u32> {
        let mut out = vec![0; self.moduli.len()];
        for (slot, m) in out.iter_mut().zip(&self.moduli).rev() {
            *slot = (index % *m as usize) as u32;
            index /= *m as usize;
        }
        out
    }

    fn generated_size(&self, generators: &[&[u32]]) -> usize {
        let zero = vec![0; self.moduli.len()];
        let mut seen = BTreeSet::from([zero.clone()]);
        let mut frontier = vec![zero];
        while let Some(e) = frontier.pop() {
            for g in generators {
                let next = self.add(&e, g);
                if seen.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
        seen.len()
    }
}

/// Data of an affine mesh: groups `A_i` and constants `c[i][j] ∈ A_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeshSpec {
    pub components: Vec<CyclicSum>,
    pub constants: Vec<Vec<Vec<u32>>>,
}

impl MeshSpec {
    pub fn new(components: Vec<Vec<u32>>, constants: Vec<Vec<Vec<u32>>>) -> Self {
        Self {
            components: components.into_iter().map(CyclicSum::new).collect(),
            constants,
        }
    }

    pub fn carrier_size(&self) -> usize {
        self.components
            .iter()
            .fold(0usize, |acc, c| acc.saturating_add(c.size()))
    }

    /// Checks the mesh invariants. With `relaxed` the generation condition
    /// `A_j = <c[i][j] : i>` is skipped.
    pub fn validate(&self, relaxed: bool) -> Result<(), ConstructionError> {
        let k = self.components.len();
        if k == 0 {
            return Err(ConstructionError::EmptyMesh);
        }
        for (i, c) in self.components.iter().enumerate() {
            if c.moduli.contains(&0) {
                return Err(ConstructionError::ZeroModulus { component: i });
            }
        }
        let size = self.carrier_size();
        if size > MAX_ORDER {
            return Err(ConstructionError::TooLarge(size));
        }
        if self.constants.len() != k || self.constants.iter().any(|row| row.len() != k) {
            return Err(ConstructionError::ConstantsShape { components: k });
        }
        for (i, row) in self.constants.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if !self.components[j].contains(c) {
                    return Err(ConstructionError::BadElement(i, j));
                }
            }
        }
        for i in 0..k {
            if self.constants[i][i].iter().any(|&r| r != 0) {
                return Err(ConstructionError::DiagonalNonZero(i));
            }
        }
        if !relaxed {
            for (j, group) in self.components.iter().enumerate() {
                let gens: Vec<&[u32]> =
                    self.constants.iter().map(|row| row[j].as_slice()).collect();
                if group.generated_size(&gens) != group.size() {
                    return Err(ConstructionError::GenerationFailure(j));
                }
            }
        }
        Ok(())
    }
}

/// The affine mesh `x*y = x + c[i][j]`, `x/y = x - c[i][j]` for `x ∈ A_j`, `y ∈ A_i`.
///
/// The carrier lists the components block by block in the given order, each
/// block in lexicographic order of residue tuples.
pub fn affine_mesh(spec: &MeshSpec, relaxed: bool) -> Result<StructureBundle, ConstructionError> {
    spec.validate(relaxed)?;
    let mut offsets = Vec::with_capacity(spec.components.len());
    let mut location = Vec::new();
    for (block, group) in spec.components.iter().enumerate() {
        offsets.push(location.len());
        location.extend((0..group.size()).map(|idx| (block, idx)));
    }
    let n = location.len();
    let op = |sign_negative: bool| {
        OpTable::from_fn(n, |x, y| {
            let (j, xi) = location[x];
            let (i, _) = location[y];
            let group = &spec.components[j];
            let c = &spec.constants[i][j];
            let shift = if sign_negative {
                group.neg(c)
            } else {
                c.clone()
            };
            offsets[j] + group.index(&group.add(&group.element(xi), &shift))
        })
    };
    let star = op(false)?;
    let slash = op(true)?;
    Ok(StructureBundle::with_slash(star, slash)?)
}

/// `x*y = x`.
pub fn projection_quandle(n: usize) -> Result<StructureBundle, ConstructionError> {
    Ok(StructureBundle::new(OpTable::projection(n)?))
}

/// `x*y = 2y - x (mod n)`.
pub fn dihedral_quandle(n: usize) -> Result<StructureBundle, ConstructionError> {
    let star = OpTable::from_fn(n, |x, y| (2 * y + n - x) % n)?;
    Ok(StructureBundle::new(star))
}

fn require_two_reductive(b: &StructureBundle) -> Result<(), ConstructionError> {
    if let Some(f) = axioms::check_quandle(b).failure() {
        return Err(ConstructionError::NotQuandle(f.clone()));
    }
    if !axioms::classify(b.star()).two_reductive {
        return Err(ConstructionError::NotTwoReductive);
    }
    Ok(())
}

/// `(Q, *ⁿ, *ᵐ, /ᵐ)` over a 2-reductive quandle: `dot = *ⁿ`, `star = *ᵐ`, `slash = *⁻ᵐ`.
pub fn power_osq(
    b: &StructureBundle,
    n: i64,
    m: i64,
) -> Result<StructureBundle, ConstructionError> {
    require_two_reductive(b)?;
    let star = b.star();
    let out = StructureBundle::with_slash(star.power(m)?, star.power(-m)?)?
        .with(Role::Dot, star.power(n)?)?;
    Ok(out)
}

/// `(Q, *ⁿ, *ᵐ, *, /)` over a 2-reductive quandle: `dot = *ⁿ`, `bullet = *ᵐ`.
pub fn power_bondle(
    b: &StructureBundle,
    n: i64,
    m: i64,
) -> Result<StructureBundle, ConstructionError> {
    require_two_reductive(b)?;
    let star = b.star();
    let out = b
        .clone()
        .without(Role::Circ)
        .with(Role::Dot, star.power(n)?)?
        .with(Role::Bullet, star.power(m)?)?;
    Ok(out)
}

/// Doubles the `dot` of an oriented singquandle into `circ`.
pub fn trivial_stuquandle(b: &StructureBundle) -> Result<StructureBundle, ConstructionError> {
    let report = axioms::check_osq(b, OsqMode::Full)?;
    if let Some(f) = report.failure() {
        return Err(ConstructionError::NotOsq(f.clone()));
    }
    let dot = b.require(Role::Dot)?.clone();
    Ok(b.clone().without(Role::Bullet).with(Role::Circ, dot)?)
}
