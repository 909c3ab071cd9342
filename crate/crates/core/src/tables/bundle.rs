use std::fmt;
use std::str::FromStr;

use super::{OpTable, Perm, TableError};

/// Named operation slots of a structure, in canonical-form order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    Star,
    Slash,
    Dot,
    Circ,
    Bullet,
}

impl Role {
    pub const ALL: [Role; 5] = [Role::Star, Role::Slash, Role::Dot, Role::Circ, Role::Bullet];

    pub fn name(self) -> &'static str {
        match self {
            Role::Star => "star",
            Role::Slash => "slash",
            Role::Dot => "dot",
            Role::Circ => "circ",
            Role::Bullet => "bullet",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Role {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Role::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| format!("unknown role `{s}`"))
    }
}

/// A carrier together with the operation tables bound to each role.
///
/// `star` is always present. `slash`, when present, is the right division of
/// `star`; it is derived automatically whenever `star` is a right quasigroup.
/// A bundle whose `star` is not a right quasigroup has no `slash`, and every
/// checker reports it as failing rather than rejecting it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StructureBundle {
    order: usize,
    tables: [Option<OpTable>; 5],
}

impl StructureBundle {
    pub fn new(star: OpTable) -> Self {
        let slash = star.derive_right_inverse().ok();
        Self {
            order: star.order(),
            tables: [Some(star), slash, None, None, None],
        }
    }

    /// Uses an explicit `slash`, which must satisfy `(x*y)/y = x = (x/y)*y`.
    pub fn with_slash(star: OpTable, slash: OpTable) -> Result<Self, TableError> {
        Self::new(star).with(Role::Slash, slash)
    }

    /// Binds `table` to `role`. `star` cannot be rebound.
    pub fn with(mut self, role: Role, table: OpTable) -> Result<Self, TableError> {
        if table.order() != self.order {
            return Err(TableError::OrderMismatch {
                expected: self.order,
                found: table.order(),
            });
        }
        match role {
            Role::Star => return Err(TableError::FixedRole(Role::Star)),
            Role::Slash => {
                let star = self.star();
                for x in 0..self.order {
                    for y in 0..self.order {
                        if table.get(star.get(x, y), y) != x || star.get(table.get(x, y), y) != x {
                            return Err(TableError::InconsistentSlash { x, y });
                        }
                    }
                }
            }
            _ => {}
        }
        self.tables[role.index()] = Some(table);
        Ok(self)
    }

    pub fn without(mut self, role: Role) -> Self {
        if role != Role::Star && role != Role::Slash {
            self.tables[role.index()] = None;
        }
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn star(&self) -> &OpTable {
        self.tables[0].as_ref().expect("star is always bound")
    }

    pub fn slash(&self) -> Option<&OpTable> {
        self.tables[1].as_ref()
    }

    pub fn get(&self, role: Role) -> Option<&OpTable> {
        self.tables[role.index()].as_ref()
    }

    pub fn require(&self, role: Role) -> Result<&OpTable, TableError> {
        self.get(role).ok_or(TableError::MissingRole(role))
    }

    pub fn has(&self, role: Role) -> bool {
        self.get(role).is_some()
    }

    /// Bound roles in canonical order.
    pub fn roles(&self) -> impl Iterator<Item = (Role, &OpTable)> {
        Role::ALL
            .into_iter()
            .filter_map(move |r| self.get(r).map(|t| (r, t)))
    }

    /// Concatenation of all bound tables in role order; the key canonical forms minimize.
    pub fn flat_key(&self) -> Vec<u8> {
        self.roles()
            .flat_map(|(_, t)| t.entries().iter().copied())
            .collect()
    }

    /// Applies `sigma` to every table simultaneously.
    pub fn relabel(&self, sigma: &Perm) -> StructureBundle {
        let mut tables: [Option<OpTable>; 5] = Default::default();
        for (slot, t) in tables.iter_mut().zip(&self.tables) {
            *slot = t.as_ref().map(|t| t.relabel(sigma));
        }
        StructureBundle {
            order: self.order,
            tables,
        }
    }
}

impl fmt::Debug for StructureBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = f.debug_struct("StructureBundle");
        s.field("order", &self.order);
        for (role, t) in self.roles() {
            s.field(role.name(), t);
        }
        s.finish()
    }
}
