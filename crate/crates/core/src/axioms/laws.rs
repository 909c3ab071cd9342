//! The individual identities, each decided by exhaustive evaluation.

use std::fmt;

use crate::tables::{OpTable, Role};

/// A single identity (or, for `RightQuasigroup`, a cancellation law) over a
/// finite carrier. Witnesses list the variables in the order given by
/// [`Law::variables`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Law {
    Idempotent,
    RightQuasigroup,
    Rack,
    Projection,
    Involutory,
    TwoReductive,
    /// `(y·x)*z = (y*z)·(x*z)`
    Os1Prime,
    /// `(x·(y·x))*z = (x*z)·((y*z)·(x*z))`
    Os2Prime,
    /// `(y*x)*z = (y*(z·x))*((x*z)·z)`
    Os3Prime,
    /// `(y·x)*((x*y)·y) = (y*(x*y))·(x*y)`
    Os4Prime,
    /// `(x·y)*z = (x*z)·(y*z)`
    Oriented1,
    /// `(z*y)*x = (z*(x·y))*((y*x)·x)`
    Oriented2,
    Os1,
    Os2,
    Os3,
    Os4,
    Os5,
    /// `ρ_y² = ρ_{y*x} ρ_{y/x}`, evaluated pointwise at `z`.
    Rho,
    St1Prime,
    St3Prime,
    St5Prime,
    St5Second,
    St1,
    St2,
    St3,
    St4,
    St5,
    Ob1Prime,
    Ob3Prime,
    Ob4Prime,
    Ob1,
    Ob2,
    Ob3,
    Ob4,
    /// `(y*x)•x = (y*(x•y))•x`
    EqBondles,
}

/// How a law reads the tables of a structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Family {
    /// Only `*` and `/`.
    Quandle,
    /// `*`, `/` and one extra binary operation.
    Binop,
    /// `*`, `/` and the (R₁, R₂) maps of an oriented singquandle.
    OsqMaps,
    /// `*`, `/` and the (R₃, R₄) maps of a stuquandle.
    StuqMaps,
    /// `*`, `/` and the R₃ map of an oriented bondle.
    BondleMap,
}

impl Law {
    pub fn label(self) -> &'static str {
        use Law::*;
        match self {
            Idempotent => "idempotent",
            RightQuasigroup => "right_quasigroup",
            Rack => "rack",
            Projection => "projection",
            Involutory => "involutory",
            TwoReductive => "two_reductive",
            Os1Prime => "OS1'",
            Os2Prime => "OS2'",
            Os3Prime => "OS3'",
            Os4Prime => "OS4'",
            Oriented1 => "oriented1",
            Oriented2 => "oriented2",
            Os1 => "OS1",
            Os2 => "OS2",
            Os3 => "OS3",
            Os4 => "OS4",
            Os5 => "OS5",
            Rho => "rho",
            St1Prime => "ST1'",
            St3Prime => "ST3'",
            St5Prime => "ST5'",
            St5Second => "ST5''",
            St1 => "ST1",
            St2 => "ST2",
            St3 => "ST3",
            St4 => "ST4",
            St5 => "ST5",
            Ob1Prime => "OB1'",
            Ob3Prime => "OB3'",
            Ob4Prime => "OB4'",
            Ob1 => "OB1",
            Ob2 => "OB2",
            Ob3 => "OB3",
            Ob4 => "OB4",
            EqBondles => "eq_bondles",
        }
    }

    pub fn variables(self) -> &'static [&'static str] {
        use Law::*;
        match self {
            Idempotent => &["x"],
            RightQuasigroup => &["x1", "x2", "y"],
            Projection | Involutory | Os4Prime | Os4 | Os5 | St1Prime | St1 | St2 | Ob4Prime
            | Ob4 | EqBondles => &["x", "y"],
            TwoReductive => &["x", "y", "z", "u"],
            _ => &["x", "y", "z"],
        }
    }

    pub fn arity(self) -> usize {
        self.variables().len()
    }

    pub(crate) fn family(self) -> Family {
        use Law::*;
        match self {
            Idempotent | RightQuasigroup | Rack | Projection | Involutory | TwoReductive | Rho => {
                Family::Quandle
            }
            Os1 | Os2 | Os3 | Os4 | Os5 => Family::OsqMaps,
            St1 | St2 | St3 | St4 | St5 => Family::StuqMaps,
            Ob1 | Ob2 | Ob3 | Ob4 => Family::BondleMap,
            _ => Family::Binop,
        }
    }

    /// Whether the law reads the right division `/`.
    pub fn uses_slash(self) -> bool {
        use Law::*;
        matches!(
            self,
            Rho | St5Prime | St3 | St4 | St5 | Ob3Prime | Ob4Prime | Ob2 | Ob3 | Ob4
        )
    }

    /// The role whose table a law reads as its extra operation when none is named.
    pub fn default_operand(self) -> Role {
        use Law::*;
        match self.family() {
            Family::Quandle => Role::Star,
            Family::OsqMaps => Role::Dot,
            Family::StuqMaps => Role::Circ,
            Family::BondleMap => Role::Bullet,
            Family::Binop => match self {
                St1Prime | St3Prime | St5Prime | St5Second => Role::Circ,
                Ob1Prime | Ob3Prime | Ob4Prime | EqBondles => Role::Bullet,
                _ => Role::Dot,
            },
        }
    }

    /// Both sides of the identity at `v`.
    ///
    /// For `RightQuasigroup` the pair is `(x1, x2)` when `x1*y = x2*y` and
    /// equal values otherwise, so a failure still shows unequal sides.
    pub(crate) fn sides(self, env: &Env<'_>, v: &[usize]) -> (usize, usize) {
        use Law::*;
        let s = |a: usize, b: usize| env.star.get(a, b);
        let d = |a: usize, b: usize| env.slash().get(a, b);
        let o = |a: usize, b: usize| env.op().get(a, b);
        let r = |a: usize, b: usize| env.first().get(a, b);
        let t = |a: usize, b: usize| env.second().get(a, b);
        match (self, v) {
            (Idempotent, &[x]) => (s(x, x), x),
            (RightQuasigroup, &[x1, x2, y]) => {
                if s(x1, y) == s(x2, y) {
                    (x1, x2)
                } else {
                    (x1, x1)
                }
            }
            (Rack, &[x, y, z]) => (s(s(x, y), z), s(s(x, z), s(y, z))),
            (Projection, &[x, y]) => (s(x, y), x),
            (Involutory, &[x, y]) => (s(s(x, y), y), x),
            (TwoReductive, &[x, y, z, u]) => (s(x, s(y, z)), s(x, s(y, u))),

            (Os1Prime, &[x, y, z]) => (s(o(y, x), z), o(s(y, z), s(x, z))),
            (Os2Prime, &[x, y, z]) => (s(o(x, o(y, x)), z), o(s(x, z), o(s(y, z), s(x, z)))),
            (Os3Prime, &[x, y, z]) => (s(s(y, x), z), s(s(y, o(z, x)), o(s(x, z), z))),
            (Os4Prime | St1Prime, &[x, y]) => {
                (s(o(y, x), o(s(x, y), y)), o(s(y, s(x, y)), s(x, y)))
            }
            (Oriented1 | St3Prime | Ob1Prime, &[x, y, z]) => (s(o(x, y), z), o(s(x, z), s(y, z))),
            (Oriented2, &[x, y, z]) => (s(s(z, y), x), s(s(z, o(x, y)), o(s(y, x), x))),

            (Os1, &[x, y, z]) => (s(r(x, y), z), r(s(x, z), s(y, z))),
            (Os2, &[x, y, z]) => (s(t(x, y), z), t(s(x, z), s(y, z))),
            (Os3, &[x, y, z]) => (s(s(y, x), z), s(s(y, r(x, z)), t(x, z))),
            (Os4, &[x, y]) => (s(r(x, y), t(x, y)), t(y, s(x, y))),
            (Os5, &[x, y]) => (t(x, y), r(y, s(x, y))),

            (Rho, &[x, y, z]) => (s(s(z, y), y), s(s(z, d(y, x)), s(y, x))),

            (St5Prime, &[x, y, z]) => (d(s(x, o(s(z, y), y)), y), s(d(x, o(y, z)), z)),
            (St5Second, &[x, y, z]) => (s(s(x, z), y), s(s(x, o(y, z)), o(s(z, y), y))),
            (St1, &[x, y]) => (s(r(y, x), t(y, x)), t(s(x, y), y)),
            (St2, &[x, y]) => (t(y, x), r(s(x, y), y)),
            (St3, &[x, y, z]) => (r(s(y, x), z), s(r(y, d(z, x)), x)),
            (St4, &[x, y, z]) => (t(y, d(z, x)), d(t(s(y, x), z), x)),
            (St5, &[x, y, z]) => (d(s(x, t(y, z)), y), s(d(x, r(y, z)), z)),

            (Ob3Prime, &[x, y, z]) => (s(d(z, o(y, x)), x), s(d(z, y), o(x, y))),
            (Ob4Prime, &[x, y]) => (d(o(y, x), y), o(y, d(x, o(x, y)))),
            (Ob1, &[x, y, z]) => (r(s(y, z), s(x, z)), s(r(y, x), z)),
            (Ob2, &[x, y, z]) => (r(d(x, z), d(y, z)), d(r(x, y), z)),
            (Ob3, &[x, y, z]) => (s(d(z, r(x, y)), x), s(d(z, y), r(y, x))),
            (Ob4, &[x, y]) => (d(r(x, y), y), r(d(x, r(y, x)), y)),

            (EqBondles, &[x, y]) => (o(s(y, x), x), o(s(y, o(x, y)), x)),
            _ => panic!("law {self} evaluated at {} variables", v.len()),
        }
    }

    pub(crate) fn holds(self, env: &Env<'_>, v: &[usize]) -> bool {
        let (lhs, rhs) = self.sides(env, v);
        lhs == rhs
    }

    /// Lexicographically least failing assignment, if any.
    pub(crate) fn first_failure(self, env: &Env<'_>) -> Option<Vec<usize>> {
        let n = env.star.order();
        let k = self.arity();
        let mut v = [0usize; 4];
        loop {
            if !self.holds(env, &v[..k]) {
                return Some(v[..k].to_vec());
            }
            let mut i = k;
            loop {
                if i == 0 {
                    return None;
                }
                i -= 1;
                v[i] += 1;
                if v[i] < n {
                    break;
                }
                v[i] = 0;
            }
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Tables a law may read. Unused slots stay `None`; reading one is a bug.
#[derive(Clone, Copy)]
pub(crate) struct Env<'a> {
    pub star: &'a OpTable,
    pub slash: Option<&'a OpTable>,
    pub op: Option<&'a OpTable>,
    pub first: Option<&'a OpTable>,
    pub second: Option<&'a OpTable>,
}

impl<'a> Env<'a> {
    pub fn new(star: &'a OpTable, slash: Option<&'a OpTable>) -> Self {
        Self {
            star,
            slash,
            op: None,
            first: None,
            second: None,
        }
    }

    pub fn with_op(mut self, op: &'a OpTable) -> Self {
        self.op = Some(op);
        self
    }

    pub fn with_maps(mut self, first: &'a OpTable, second: Option<&'a OpTable>) -> Self {
        self.first = Some(first);
        self.second = second;
        self
    }

    fn slash(&self) -> &'a OpTable {
        self.slash.expect("law needs the right division")
    }

    fn op(&self) -> &'a OpTable {
        self.op.expect("law needs a binary operation")
    }

    fn first(&self) -> &'a OpTable {
        self.first.expect("law needs its first map")
    }

    fn second(&self) -> &'a OpTable {
        self.second.expect("law needs its second map")
    }
}
