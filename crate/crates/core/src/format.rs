//! JSON file formats: bundle files, R-map files, mesh files and check reports.
//!
//! Elements are 0-based: a table printed 1-based elsewhere loads with every
//! element `k` replaced by `k - 1`. Serialization is byte-stable: keys appear
//! in a fixed order and every document ends with a newline.

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};
use thiserror::Error;

use crate::axioms::{CheckReport, RMapPair};
use crate::constructions::MeshSpec;
use crate::tables::{check_order, OpTable, Role, StructureBundle, TableError};

pub type Meta = Map<String, Value>;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(serde_json::Error),
    #[error("invalid order: {0}")]
    Order(TableError),
    #[error("table `{role}`: {error}")]
    Table { role: String, error: TableError },
    #[error("star is not a right quasigroup (column {column}) and no slash was given")]
    NoSlash { column: usize },
}

impl From<serde_json::Error> for FormatError {
    fn from(e: serde_json::Error) -> Self {
        FormatError::Json(e)
    }
}

fn table(role: &str, order: usize, rows: &[Vec<usize>]) -> Result<OpTable, FormatError> {
    let wrap = |error| FormatError::Table {
        role: role.to_string(),
        error,
    };
    if rows.len() != order {
        return Err(wrap(TableError::Shape { order }));
    }
    OpTable::from_rows(rows).map_err(wrap)
}

fn bind(b: StructureBundle, role: Role, t: OpTable) -> Result<StructureBundle, FormatError> {
    b.with(role, t).map_err(|error| FormatError::Table {
        role: role.to_string(),
        error,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OpsFile {
    pub star: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub slash: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dot: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub circ: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bullet: Option<Vec<Vec<usize>>>,
}

impl OpsFile {
    fn get(&self, role: Role) -> Option<&Vec<Vec<usize>>> {
        match role {
            Role::Star => Some(&self.star),
            Role::Slash => self.slash.as_ref(),
            Role::Dot => self.dot.as_ref(),
            Role::Circ => self.circ.as_ref(),
            Role::Bullet => self.bullet.as_ref(),
        }
    }
}

/// `{"order": n, "ops": {"star": .., "slash"?: .., "dot"?: .., "circ"?: .., "bullet"?: ..}, "meta"?: {..}}`
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BundleFile {
    pub order: usize,
    pub ops: OpsFile,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<Meta>,
}

impl BundleFile {
    pub fn from_bundle(b: &StructureBundle, meta: Option<Meta>) -> Self {
        let rows = |r| b.get(r).map(OpTable::rows);
        BundleFile {
            order: b.order(),
            ops: OpsFile {
                star: b.star().rows(),
                slash: rows(Role::Slash),
                dot: rows(Role::Dot),
                circ: rows(Role::Circ),
                bullet: rows(Role::Bullet),
            },
            meta,
        }
    }

    /// Validates the tables; an absent slash is derived from star.
    pub fn to_bundle(&self) -> Result<StructureBundle, FormatError> {
        check_order(self.order).map_err(FormatError::Order)?;
        let star = table("star", self.order, &self.ops.star)?;
        let mut b = match &self.ops.slash {
            Some(rows) => bind(
                StructureBundle::new(star),
                Role::Slash,
                table("slash", self.order, rows)?,
            )?,
            None => {
                if let Err(TableError::NotBijective { column }) = star.derive_right_inverse() {
                    return Err(FormatError::NoSlash { column });
                }
                StructureBundle::new(star)
            }
        };
        for role in [Role::Dot, Role::Circ, Role::Bullet] {
            if let Some(rows) = self.ops.get(role) {
                b = bind(b, role, table(role.name(), self.order, rows)?)?;
            }
        }
        Ok(b)
    }
}

pub fn parse_bundle(text: &str) -> Result<(StructureBundle, Option<Meta>), FormatError> {
    let file: BundleFile = serde_json::from_str(text)?;
    let bundle = file.to_bundle()?;
    Ok((bundle, file.meta))
}

pub fn bundle_to_json(b: &StructureBundle, meta: Option<Meta>) -> String {
    let mut s =
        serde_json::to_string(&BundleFile::from_bundle(b, meta)).expect("bundle serializes");
    s.push('\n');
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuandleOps {
    pub star: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub slash: Option<Vec<Vec<usize>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RMapsOps {
    pub r1: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r2: Option<Vec<Vec<usize>>>,
}

/// `{"order": n, "ops": {"star": .., "slash"?: ..}, "rmaps": {"r1": .., "r2"?: ..}, "meta"?: {..}}`
/// with `r1[x][y] = R₁(x, y)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RMapFile {
    pub order: usize,
    pub ops: QuandleOps,
    pub rmaps: RMapsOps,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<Meta>,
}

/// A parsed R-map file: the quandle, R₁, and R₂ when given.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RMapInput {
    pub quandle: StructureBundle,
    pub r1: OpTable,
    pub r2: Option<OpTable>,
}

impl RMapInput {
    pub fn pair(&self) -> Option<RMapPair> {
        self.r2.clone().map(|r2| RMapPair {
            first: self.r1.clone(),
            second: r2,
        })
    }
}

pub fn parse_rmaps(text: &str) -> Result<RMapInput, FormatError> {
    let file: RMapFile = serde_json::from_str(text)?;
    let quandle = BundleFile {
        order: file.order,
        ops: OpsFile {
            star: file.ops.star,
            slash: file.ops.slash,
            dot: None,
            circ: None,
            bullet: None,
        },
        meta: None,
    }
    .to_bundle()?;
    let r1 = table("r1", file.order, &file.rmaps.r1)?;
    let r2 = file
        .rmaps
        .r2
        .as_deref()
        .map(|rows| table("r2", file.order, rows))
        .transpose()?;
    Ok(RMapInput { quandle, r1, r2 })
}

pub fn rmaps_to_json(quandle: &StructureBundle, maps: &RMapPair, meta: Option<Meta>) -> String {
    let file = RMapFile {
        order: quandle.order(),
        ops: QuandleOps {
            star: quandle.star().rows(),
            slash: quandle.slash().map(OpTable::rows),
        },
        rmaps: RMapsOps {
            r1: maps.first.rows(),
            r2: Some(maps.second.rows()),
        },
        meta,
    };
    let mut s = serde_json::to_string(&file).expect("rmaps serialize");
    s.push('\n');
    s
}

/// `{"components": [[moduli..]..], "constants": [[[residues..]..]..], "relaxed"?: bool}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MeshFile {
    pub components: Vec<Vec<u32>>,
    pub constants: Vec<Vec<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relaxed: Option<bool>,
}

/// The mesh data and whether generation checking is relaxed. Mesh invariants
/// are checked when the mesh is built.
pub fn parse_mesh(text: &str) -> Result<(MeshSpec, bool), FormatError> {
    let file: MeshFile = serde_json::from_str(text)?;
    Ok((
        MeshSpec::new(file.components, file.constants),
        file.relaxed.unwrap_or(false),
    ))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub ok: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failed_axiom: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
}

impl From<&CheckReport> for ReportJson {
    fn from(r: &CheckReport) -> Self {
        ReportJson {
            ok: r.is_ok(),
            failed_axiom: r.failed_axiom(),
            witness: r.witness().map(<[usize]>::to_vec),
        }
    }
}

pub fn report_to_json(r: &CheckReport) -> String {
    let mut s = serde_json::to_string(&ReportJson::from(r)).expect("report serializes");
    s.push('\n');
    s
}

/// Bodies of the fuzz targets. Each accepts arbitrary text and panics only
/// when a parsed value breaks an invariant.
#[doc(hidden)]
pub mod fuzz {
    use super::*;
    use crate::axioms::{
        self, check_osq, check_osq_rmaps, convert_binop_to_rmaps, convert_rmaps_to_binop, OsqMode,
    };
    use crate::constructions::affine_mesh;

    /// Bound on the carrier for the checks run on parsed input.
    const CHECK_LIMIT: usize = 8;

    pub fn bundle(text: &str) {
        let Ok((b, meta)) = parse_bundle(text) else {
            return;
        };
        let out = bundle_to_json(&b, meta.clone());
        let (again, meta_again) = parse_bundle(&out).expect("emitted bundle parses");
        assert_eq!(again, b);
        assert_eq!(meta_again, meta);
        assert_eq!(bundle_to_json(&again, meta_again), out);
        if b.order() > CHECK_LIMIT {
            return;
        }
        if let Some(f) = axioms::check_quandle(&b).failure() {
            assert!(f.reproduces(&b));
        }
        if b.has(Role::Dot) {
            let r = check_osq(&b, OsqMode::Full).expect("dot is bound");
            if let Some(f) = r.failure() {
                assert!(f.reproduces(&b));
            }
        }
    }

    pub fn rmaps(text: &str) {
        let Ok(input) = parse_rmaps(text) else { return };
        let Some(pair) = input.pair() else { return };
        let out = rmaps_to_json(&input.quandle, &pair, None);
        assert_eq!(
            parse_rmaps(&out).expect("emitted maps parse").pair(),
            Some(pair.clone())
        );
        if input.quandle.order() > CHECK_LIMIT {
            return;
        }
        let report = check_osq_rmaps(&input.quandle, &pair).expect("orders match");
        if report.is_ok() && axioms::check_quandle(&input.quandle).is_ok() {
            let dot = convert_rmaps_to_binop(&pair.first);
            assert_eq!(convert_binop_to_rmaps(&dot, input.quandle.star()), pair);
        }
    }

    pub fn mesh(text: &str) {
        let Ok((spec, relaxed)) = parse_mesh(text) else {
            return;
        };
        if spec.carrier_size() > 4 * CHECK_LIMIT {
            return;
        }
        if let Ok(b) = affine_mesh(&spec, relaxed) {
            assert!(axioms::check_quandle(&b).is_ok());
            assert!(axioms::classify(b.star()).two_reductive);
        }
    }
}
