//! Deciding the axiom systems of oriented singquandles, stuquandles and
//! oriented bondles, in both the binary-operation and the R-map presentation.
//!
//! Every check evaluates its identities over all assignments of the carrier,
//! in lexicographic order of the variable tuple, and stops at the first
//! failing assignment. Permutation products are read right to left:
//! `ρ_a ρ_b` applies `ρ_b` first, so `(z*y)*x = ρ_x ρ_y(z)`.

mod laws;

pub use laws::Law;

use std::fmt;

use laws::{Env, Family};

use crate::tables::{OpTable, Role, StructureBundle, TableError};

/// A pair of binary maps in function-table form, `first[x][y] = F(x, y)`.
///
/// For oriented singquandles this is (R₁, R₂); for stuquandles (R₃, R₄).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RMapPair {
    pub first: OpTable,
    pub second: OpTable,
}

impl RMapPair {
    pub fn new(first: OpTable, second: OpTable) -> Result<Self, TableError> {
        if first.order() != second.order() {
            return Err(TableError::OrderMismatch {
                expected: first.order(),
                found: second.order(),
            });
        }
        Ok(Self { first, second })
    }

    pub fn order(&self) -> usize {
        self.first.order()
    }
}

/// A failing assignment of one identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub law: Law,
    /// The role whose table played the law's extra operation.
    pub operand: Role,
    pub witness: Vec<usize>,
}

impl Failure {
    /// Label of the failed identity; suffixed with the operand role when it is
    /// not the law's usual one (for example `oriented2(circ)`).
    pub fn label(&self) -> String {
        if self.operand == self.law.default_operand() {
            self.law.label().to_string()
        } else {
            format!("{}({})", self.law.label(), self.operand)
        }
    }

    /// Re-evaluates the identity at the witness against `bundle` and returns both sides.
    pub fn sides(&self, bundle: &StructureBundle) -> Option<(usize, usize)> {
        if self.witness.len() != self.law.arity()
            || self.witness.iter().any(|&v| v >= bundle.order())
        {
            return None;
        }
        let star = bundle.star();
        let op = match self.law.family() {
            Family::Quandle => None,
            _ => Some(bundle.get(self.operand)?),
        };
        let maps = op.and_then(|op| derived_maps(self.law.family(), op, star));
        let mut env = Env::new(star, bundle.slash());
        if let Some(op) = op {
            env = env.with_op(op);
        }
        if let Some((first, second)) = &maps {
            env = env.with_maps(first, second.as_ref());
        }
        if self.law.uses_slash() && bundle.slash().is_none() {
            return None;
        }
        Some(self.law.sides(&env, &self.witness))
    }

    /// True when substituting the witness shows unequal sides.
    pub fn reproduces(&self, bundle: &StructureBundle) -> bool {
        matches!(self.sides(bundle), Some((l, r)) if l != r)
    }

    /// Like [`Failure::reproduces`] for laws read through explicit R-maps.
    pub fn reproduces_with_maps(&self, bundle: &StructureBundle, maps: &RMapPair) -> bool {
        if self.law.family() == Family::Quandle {
            return self.reproduces(bundle);
        }
        let Some(slash) = bundle.slash() else {
            return false;
        };
        if self.witness.len() != self.law.arity() {
            return false;
        }
        let env = Env::new(bundle.star(), Some(slash)).with_maps(&maps.first, Some(&maps.second));
        let (l, r) = self.law.sides(&env, &self.witness);
        l != r
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {:?}", self.label(), self.witness)
    }
}

/// Verdict of a check, carrying the first failure when there is one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    failure: Option<Failure>,
}

impl CheckReport {
    pub fn pass() -> Self {
        Self { failure: None }
    }

    pub fn is_ok(&self) -> bool {
        self.failure.is_none()
    }

    pub fn failure(&self) -> Option<&Failure> {
        self.failure.as_ref()
    }

    pub fn failed_axiom(&self) -> Option<String> {
        self.failure.as_ref().map(Failure::label)
    }

    pub fn witness(&self) -> Option<&[usize]> {
        self.failure.as_ref().map(|f| f.witness.as_slice())
    }
}

impl From<Result<(), Failure>> for CheckReport {
    fn from(r: Result<(), Failure>) -> Self {
        Self { failure: r.err() }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => f.write_str("ok"),
            Some(failure) => failure.fmt(f),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OsqMode {
    /// The four primed identities.
    #[default]
    Full,
    /// The two-identity characterization.
    Reduced,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum StuquandleMode {
    #[default]
    Binops,
    Rmaps,
    /// Both `dot` and `circ` are oriented singquandle operations.
    Corollary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BondleMode {
    #[default]
    Binops,
    Rmaps,
    /// `dot` and `bullet` are oriented singquandle operations and eq_bondles holds.
    Theorem,
}

/// Which of the basic identities a single operation satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Classification {
    pub right_quasigroup: bool,
    pub idempotent: bool,
    pub projection: bool,
    pub involutory: bool,
    pub rack: bool,
    pub quandle: bool,
    pub two_reductive: bool,
}

impl Classification {
    pub fn flags(&self) -> Vec<&'static str> {
        [
            ("right_quasigroup", self.right_quasigroup),
            ("idempotent", self.idempotent),
            ("projection", self.projection),
            ("involutory", self.involutory),
            ("rack", self.rack),
            ("quandle", self.quandle),
            ("two_reductive", self.two_reductive),
        ]
        .into_iter()
        .filter_map(|(name, set)| set.then_some(name))
        .collect()
    }
}

pub fn classify(star: &OpTable) -> Classification {
    let env = Env::new(star, None);
    let holds = |law: Law| law.first_failure(&env).is_none();
    let right_quasigroup = star.is_right_quasigroup();
    let idempotent = holds(Law::Idempotent);
    let rack = holds(Law::Rack);
    Classification {
        right_quasigroup,
        idempotent,
        projection: holds(Law::Projection),
        involutory: holds(Law::Involutory),
        rack,
        quandle: right_quasigroup && idempotent && rack,
        two_reductive: holds(Law::TwoReductive),
    }
}

fn run(env: &Env<'_>, laws: &[Law], operand: Role) -> Result<(), Failure> {
    for &law in laws {
        if let Some(witness) = law.first_failure(env) {
            return Err(Failure {
                law,
                operand,
                witness,
            });
        }
    }
    Ok(())
}

/// R-maps read off an operation, for the map-based families.
fn derived_maps(
    family: Family,
    op: &OpTable,
    star: &OpTable,
) -> Option<(OpTable, Option<OpTable>)> {
    match family {
        Family::OsqMaps => {
            let pair = convert_binop_to_rmaps(op, star);
            Some((pair.first, Some(pair.second)))
        }
        Family::StuqMaps => {
            let pair = stuquandle_rmaps(op, star);
            Some((pair.first, Some(pair.second)))
        }
        Family::BondleMap => Some((bondle_rmap(op), None)),
        Family::Quandle | Family::Binop => None,
    }
}

fn quandle_step(b: &StructureBundle) -> Result<(), Failure> {
    let env = Env::new(b.star(), b.slash());
    run(&env, &[Law::Idempotent], Role::Star)?;
    if b.slash().is_none() {
        run(&env, &[Law::RightQuasigroup], Role::Star)?;
    }
    run(&env, &[Law::Rack], Role::Star)
}

/// `(star, slash)` is a quandle. Failures name the specific quandle identity.
pub fn check_quandle(b: &StructureBundle) -> CheckReport {
    quandle_step(b).into()
}

fn slash_of(b: &StructureBundle) -> &OpTable {
    b.slash().expect("quandle step passed, so slash is bound")
}

fn osq_step(b: &StructureBundle, operand: Role, mode: OsqMode) -> Result<(), Failure> {
    let op = b.get(operand).expect("operand presence checked by caller");
    let env = Env::new(b.star(), Some(slash_of(b))).with_op(op);
    let laws: &[Law] = match mode {
        OsqMode::Full => &[Law::Os1Prime, Law::Os2Prime, Law::Os3Prime, Law::Os4Prime],
        OsqMode::Reduced => &[Law::Oriented1, Law::Oriented2],
    };
    run(&env, laws, operand)
}

fn osq_rmaps_step(b: &StructureBundle, operand: Role) -> Result<(), Failure> {
    let op = b.get(operand).expect("operand presence checked by caller");
    let maps = convert_binop_to_rmaps(op, b.star());
    osq_maps_step(b, &maps, operand)
}

fn osq_maps_step(b: &StructureBundle, maps: &RMapPair, operand: Role) -> Result<(), Failure> {
    let env = Env::new(b.star(), Some(slash_of(b))).with_maps(&maps.first, Some(&maps.second));
    run(
        &env,
        &[Law::Os1, Law::Os2, Law::Os3, Law::Os4, Law::Os5],
        operand,
    )
}

fn require(b: &StructureBundle, roles: &[Role]) -> Result<(), TableError> {
    roles.iter().try_for_each(|&r| b.require(r).map(|_| ()))
}

/// `(dot, star, slash)` is an oriented singquandle.
pub fn check_osq(b: &StructureBundle, mode: OsqMode) -> Result<CheckReport, TableError> {
    check_osq_operand(b, Role::Dot, mode)
}

/// Oriented singquandle check with `operand` in place of `dot`.
pub fn check_osq_operand(
    b: &StructureBundle,
    operand: Role,
    mode: OsqMode,
) -> Result<CheckReport, TableError> {
    require(b, &[operand])?;
    Ok(quandle_step(b)
        .and_then(|()| osq_step(b, operand, mode))
        .into())
}

/// Axioms OS1-OS5 for explicit maps (R₁, R₂).
pub fn check_osq_rmaps(b: &StructureBundle, maps: &RMapPair) -> Result<CheckReport, TableError> {
    if maps.order() != b.order() {
        return Err(TableError::OrderMismatch {
            expected: b.order(),
            found: maps.order(),
        });
    }
    Ok(quandle_step(b)
        .and_then(|()| osq_maps_step(b, maps, Role::Dot))
        .into())
}

/// `y·x = R₁(x, y)`.
pub fn convert_rmaps_to_binop(first: &OpTable) -> OpTable {
    first.opposite()
}

/// `R₁(x, y) = y·x` and `R₂(x, y) = (x·y)*y`.
pub fn convert_binop_to_rmaps(dot: &OpTable, star: &OpTable) -> RMapPair {
    assert_eq!(
        dot.order(),
        star.order(),
        "dot and star must share an order"
    );
    let n = dot.order();
    let second = (0..n * n)
        .map(|i| star.get(dot.get(i / n, i % n), i % n) as u8)
        .collect();
    RMapPair {
        first: dot.opposite(),
        second: OpTable::from_raw(n, second),
    }
}

/// `R₃(x, y) = x∘y` and `R₄(x, y) = (y∘x)*x`.
pub fn stuquandle_rmaps(circ: &OpTable, star: &OpTable) -> RMapPair {
    assert_eq!(
        circ.order(),
        star.order(),
        "circ and star must share an order"
    );
    let n = circ.order();
    let second = (0..n * n)
        .map(|i| {
            let (x, y) = (i / n, i % n);
            star.get(circ.get(y, x), x) as u8
        })
        .collect();
    RMapPair {
        first: circ.clone(),
        second: OpTable::from_raw(n, second),
    }
}

/// The bondle map `R₃(x, y) = y•x`.
pub fn bondle_rmap(bullet: &OpTable) -> OpTable {
    bullet.opposite()
}

/// `ρ_y² = ρ_{y*x} ρ_{y/x}` for all `x, y`; the witness adds the point `z` where the maps differ.
pub fn check_rho_criterion(b: &StructureBundle) -> CheckReport {
    quandle_step(b)
        .and_then(|()| {
            let env = Env::new(b.star(), Some(slash_of(b)));
            run(&env, &[Law::Rho], Role::Star)
        })
        .into()
}

pub fn check_stuquandle(
    b: &StructureBundle,
    mode: StuquandleMode,
) -> Result<CheckReport, TableError> {
    require(b, &[Role::Dot, Role::Circ])?;
    let result = quandle_step(b).and_then(|()| match mode {
        StuquandleMode::Binops => {
            osq_step(b, Role::Dot, OsqMode::Full)?;
            let env = Env::new(b.star(), Some(slash_of(b))).with_op(b.get(Role::Circ).unwrap());
            run(
                &env,
                &[Law::St1Prime, Law::St3Prime, Law::St5Prime],
                Role::Circ,
            )
        }
        StuquandleMode::Rmaps => {
            osq_rmaps_step(b, Role::Dot)?;
            let maps = stuquandle_rmaps(b.get(Role::Circ).unwrap(), b.star());
            let env =
                Env::new(b.star(), Some(slash_of(b))).with_maps(&maps.first, Some(&maps.second));
            run(
                &env,
                &[Law::St1, Law::St2, Law::St3, Law::St4, Law::St5],
                Role::Circ,
            )
        }
        StuquandleMode::Corollary => {
            osq_step(b, Role::Dot, OsqMode::Reduced)?;
            osq_step(b, Role::Circ, OsqMode::Reduced)
        }
    });
    Ok(result.into())
}

pub fn check_bondle(b: &StructureBundle, mode: BondleMode) -> Result<CheckReport, TableError> {
    require(b, &[Role::Dot, Role::Bullet])?;
    let bullet = b.get(Role::Bullet).unwrap();
    let result = quandle_step(b).and_then(|()| {
        let env = Env::new(b.star(), Some(slash_of(b)));
        match mode {
            BondleMode::Binops => {
                osq_step(b, Role::Dot, OsqMode::Full)?;
                run(
                    &env.with_op(bullet),
                    &[Law::Ob1Prime, Law::Ob3Prime, Law::Ob4Prime],
                    Role::Bullet,
                )
            }
            BondleMode::Rmaps => {
                osq_rmaps_step(b, Role::Dot)?;
                let map = bondle_rmap(bullet);
                let env = env.with_maps(&map, None);
                let ob1 = run(&env, &[Law::Ob1], Role::Bullet);
                // ρ_z is an automorphism of • iff ρ_z⁻¹ is
                debug_assert_eq!(ob1.is_ok(), run(&env, &[Law::Ob2], Role::Bullet).is_ok());
                ob1?;
                run(&env, &[Law::Ob3, Law::Ob4], Role::Bullet)
            }
            BondleMode::Theorem => {
                osq_step(b, Role::Dot, OsqMode::Reduced)?;
                osq_step(b, Role::Bullet, OsqMode::Reduced)?;
                run(&env.with_op(bullet), &[Law::EqBondles], Role::Bullet)
            }
        }
    });
    Ok(result.into())
}

/// `(y*x)•x = (y*(x•y))•x` for all `x, y`.
pub fn check_eq_bondles(bullet: &OpTable, star: &OpTable) -> Result<CheckReport, TableError> {
    if bullet.order() != star.order() {
        return Err(TableError::OrderMismatch {
            expected: star.order(),
            found: bullet.order(),
        });
    }
    let env = Env::new(star, None).with_op(bullet);
    Ok(run(&env, &[Law::EqBondles], Role::Bullet).into())
}

/// Evaluates a single law on a bundle, with `operand` supplying the extra operation.
pub fn check_law(b: &StructureBundle, law: Law, operand: Role) -> Result<CheckReport, TableError> {
    let star = b.star();
    let family = law.family();
    let op = match family {
        Family::Quandle => None,
        _ => Some(b.require(operand)?),
    };
    if law.uses_slash() && b.slash().is_none() {
        return Err(TableError::MissingRole(Role::Slash));
    }
    let maps = op.and_then(|op| derived_maps(family, op, star));
    let mut env = Env::new(star, b.slash());
    if let Some(op) = op {
        env = env.with_op(op);
    }
    if let Some((first, second)) = &maps {
        env = env.with_maps(first, second.as_ref());
    }
    Ok(run(&env, &[law], operand).into())
}
