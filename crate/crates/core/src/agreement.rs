//! Cross-checks between the presentations of each structure.
//!
//! Every structure has several equivalent axiom systems. [`verdicts`] runs all
//! of them on one bundle; [`sample_agreement`] does so on seeded random
//! bundles and counts the bundles where two systems disagree.

use std::ops::ControlFlow;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::axioms::{
    check_bondle, check_osq, check_osq_rmaps, check_stuquandle, convert_binop_to_rmaps, BondleMode,
    OsqMode, StuquandleMode,
};
use crate::enumerate::{enumerate_quandles, for_each_osq_extension, EnumerateError};
use crate::tables::{OpTable, Role, StructureBundle, TableError};

pub const DEFAULT_SEED: u64 = 0x5eed;

/// Outcomes in the order full, reduced, R-maps (oriented singquandle);
/// binops, R-maps, corollary (stuquandle); binops, R-maps, theorem (bondle).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verdicts {
    pub osq: [bool; 3],
    pub stuquandle: [bool; 3],
    pub bondle: [bool; 3],
}

impl Verdicts {
    pub fn consistent(&self) -> bool {
        let same = |v: &[bool; 3]| v.iter().all(|&b| b == v[0]);
        same(&self.osq) && same(&self.stuquandle) && same(&self.bondle)
    }
}

/// Needs `dot`, `circ` and `bullet`.
pub fn verdicts(b: &StructureBundle) -> Result<Verdicts, TableError> {
    let maps = convert_binop_to_rmaps(b.require(Role::Dot)?, b.star());
    b.require(Role::Circ)?;
    b.require(Role::Bullet)?;
    Ok(Verdicts {
        osq: [
            check_osq(b, OsqMode::Full)?.is_ok(),
            check_osq(b, OsqMode::Reduced)?.is_ok(),
            check_osq_rmaps(b, &maps)?.is_ok(),
        ],
        stuquandle: [
            check_stuquandle(b, StuquandleMode::Binops)?.is_ok(),
            check_stuquandle(b, StuquandleMode::Rmaps)?.is_ok(),
            check_stuquandle(b, StuquandleMode::Corollary)?.is_ok(),
        ],
        bondle: [
            check_bondle(b, BondleMode::Binops)?.is_ok(),
            check_bondle(b, BondleMode::Rmaps)?.is_ok(),
            check_bondle(b, BondleMode::Theorem)?.is_ok(),
        ],
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AgreementSummary {
    pub order: usize,
    pub seed: u64,
    pub samples: usize,
    pub disagreements: usize,
    pub osq_pass: usize,
    pub stuquandle_pass: usize,
    pub bondle_pass: usize,
    #[serde(skip)]
    pub first_disagreement: Option<StructureBundle>,
}

/// Extensions kept per quandle as a pool of passing operations.
const POOL: usize = 64;

/// Draws `samples` bundles over random quandles of order `order`. Each extra
/// operation is a uniformly random table, a power of `*`, or one of the
/// first oriented singquandle extensions, so all verdicts occur often.
pub fn sample_agreement(
    order: usize,
    samples: usize,
    seed: u64,
) -> Result<AgreementSummary, EnumerateError> {
    let quandles = enumerate_quandles(order)?.entries;
    let mut pools = Vec::with_capacity(quandles.len());
    for q in &quandles {
        let mut pool = Vec::new();
        let _ = for_each_osq_extension(q, |t| {
            pool.push(t.clone());
            if pool.len() == POOL {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })?;
        pools.push(pool);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut summary = AgreementSummary {
        order,
        seed,
        samples,
        disagreements: 0,
        osq_pass: 0,
        stuquandle_pass: 0,
        bondle_pass: 0,
        first_disagreement: None,
    };
    for _ in 0..samples {
        let i = rng.gen_range(0..quandles.len());
        let q = &quandles[i];
        let draw = |rng: &mut ChaCha8Rng| -> Result<OpTable, TableError> {
            match rng.gen_range(0..3) {
                0 => OpTable::new(
                    order,
                    (0..order * order)
                        .map(|_| rng.gen_range(0..order))
                        .collect(),
                ),
                1 => q.star().power(rng.gen_range(-3..=3)),
                _ => Ok(pools[i]
                    .choose(rng)
                    .expect("the star itself extends")
                    .clone()),
            }
        };
        let b = q
            .clone()
            .with(Role::Dot, draw(&mut rng)?)?
            .with(Role::Circ, draw(&mut rng)?)?
            .with(Role::Bullet, draw(&mut rng)?)?;
        let v = verdicts(&b)?;
        summary.osq_pass += v.osq[0] as usize;
        summary.stuquandle_pass += v.stuquandle[0] as usize;
        summary.bondle_pass += v.bondle[0] as usize;
        if !v.consistent() {
            summary.disagreements += 1;
            summary.first_disagreement.get_or_insert(b);
        }
    }
    Ok(summary)
}
