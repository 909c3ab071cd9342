//! Fixtures and oracles shared by the integration suites. The oracles here
//! reimplement what they check with naive loops and never call the library's
//! checkers or canonicalizer.
#![allow(dead_code)]

use std::collections::BTreeSet;
use std::io::Write;
use std::process::{Command, Output, Stdio};

use quandlekit::constructions::MeshSpec;
use quandlekit::{OpTable, Role, StructureBundle};

pub fn counter_star() -> OpTable {
    OpTable::from_rows(&[[0, 2, 0], [1, 1, 1], [2, 0, 2]]).unwrap()
}

pub fn counter_bullet() -> OpTable {
    OpTable::from_rows(&[[1, 0, 2], [1, 1, 1], [0, 2, 1]]).unwrap()
}

pub fn bundle(star: &OpTable, extra: &[(Role, &OpTable)]) -> StructureBundle {
    extra
        .iter()
        .fold(StructureBundle::new(star.clone()), |b, (r, t)| {
            b.with(*r, (*t).clone()).unwrap()
        })
}

/// Every `n x n` table, in lexicographic order of the row-major flattening.
pub fn all_tables(n: usize) -> impl Iterator<Item = OpTable> {
    let total = n.pow((n * n) as u32);
    (0..total).map(move |mut code| {
        let mut flat = vec![0; n * n];
        for cell in flat.iter_mut().rev() {
            *cell = code % n;
            code /= n;
        }
        OpTable::new(n, flat).unwrap()
    })
}

/// All permutations of `0..n`, by Heap's algorithm.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, a, out);
            if k.is_multiple_of(2) {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
        }
    }
    let mut a: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    heap(n, &mut a, &mut out);
    out
}

/// Least relabeling of the concatenated row-major tables `flat` (each `n x n`).
pub fn naive_canonical_key(n: usize, flat: &[usize], perms: &[Vec<usize>]) -> Vec<usize> {
    let tables = flat.len() / (n * n);
    perms
        .iter()
        .map(|s| {
            let mut inv = vec![0; n];
            for (i, &v) in s.iter().enumerate() {
                inv[v] = i;
            }
            let mut key = Vec::with_capacity(flat.len());
            for t in 0..tables {
                for a in 0..n {
                    for b in 0..n {
                        key.push(s[flat[t * n * n + inv[a] * n + inv[b]]]);
                    }
                }
            }
            key
        })
        .min()
        .unwrap()
}

fn naive_is_quandle(n: usize, t: &[usize]) -> bool {
    let op = |x: usize, y: usize| t[x * n + y];
    for y in 0..n {
        let mut seen = vec![false; n];
        for x in 0..n {
            if std::mem::replace(&mut seen[op(x, y)], true) {
                return false;
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if op(op(x, y), z) != op(op(x, z), op(y, z)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Canonical star tables of all quandles of order `n`, found by filtering
/// every table with fixed diagonal (idempotence) by hand-written checks.
pub fn brute_force_quandles(n: usize) -> BTreeSet<Vec<usize>> {
    let perms = permutations(n);
    let off: Vec<usize> = (0..n * n).filter(|c| c / n != c % n).collect();
    let mut t = vec![0; n * n];
    for x in 0..n {
        t[x * n + x] = x;
    }
    let mut found = BTreeSet::new();
    let total = n.pow(off.len() as u32);
    for mut code in 0..total {
        for &c in &off {
            t[c] = code % n;
            code /= n;
        }
        if naive_is_quandle(n, &t) {
            found.insert(naive_canonical_key(n, &t, &perms));
        }
    }
    found
}

pub fn naive_two_reductive(t: &OpTable) -> bool {
    let n = t.order();
    (0..n).all(|x| {
        (0..n)
            .all(|y| (0..n).all(|z| (0..n).all(|u| t.get(x, t.get(y, z)) == t.get(x, t.get(y, u)))))
    })
}

/// Whether all right translations `x ↦ x*y` and their inverses generate an
/// abelian group, by closing the set under composition and testing all pairs.
pub fn naive_rmlt_abelian(t: &OpTable) -> bool {
    let n = t.order();
    let compose = |a: &Vec<usize>, b: &Vec<usize>| (0..n).map(|i| a[b[i]]).collect::<Vec<_>>();
    let gens: Vec<Vec<usize>> = (0..n)
        .map(|y| (0..n).map(|x| t.get(x, y)).collect())
        .collect();
    let mut group: BTreeSet<Vec<usize>> = BTreeSet::from([(0..n).collect()]);
    loop {
        let mut next = group.clone();
        for g in &group {
            for h in &gens {
                next.insert(compose(h, g));
            }
        }
        if next.len() == group.len() {
            break;
        }
        group = next;
    }
    group
        .iter()
        .all(|a| group.iter().all(|b| compose(a, b) == compose(b, a)))
}

fn groups() -> Vec<Vec<u32>> {
    vec![vec![1], vec![2], vec![3], vec![4], vec![2, 2]]
}

fn elements(moduli: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for &m in moduli {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..m).map(move |r| {
                    let mut e = prefix.clone();
                    e.push(r);
                    e
                })
            })
            .collect();
    }
    out
}

/// Every mesh with one or two components from Z1, Z2, Z3, Z4 and Z2+Z2 whose
/// constants pass full validation.
pub fn mesh_battery() -> Vec<MeshSpec> {
    let mut out = Vec::new();
    for g in groups() {
        let zero = vec![0; g.len()];
        out.push(MeshSpec::new(vec![g], vec![vec![zero]]));
    }
    for a in groups() {
        for b in groups() {
            for c01 in elements(&b) {
                for c10 in elements(&a) {
                    let constants = vec![
                        vec![vec![0; a.len()], c01.clone()],
                        vec![c10.clone(), vec![0; b.len()]],
                    ];
                    out.push(MeshSpec::new(vec![a.clone(), b.clone()], constants));
                }
            }
        }
    }
    out.retain(|m| m.validate(false).is_ok());
    out
}

pub fn mesh_json(m: &MeshSpec) -> String {
    let components: Vec<_> = m.components.iter().map(|c| c.moduli().to_vec()).collect();
    serde_json::json!({ "components": components, "constants": m.constants }).to_string()
}

pub fn cli(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_quandlekit"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    // the child may exit before reading its input
    let _ = child.stdin.take().unwrap().write_all(stdin.as_bytes());
    child.wait_with_output().unwrap()
}

pub fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

pub fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

pub const COUNTER_FILE: &str = r#"{"order":3,"ops":{"star":[[0,2,0],[1,1,1],[2,0,2]],"dot":[[1,0,2],[1,1,1],[0,2,1]],"bullet":[[1,0,2],[1,1,1],[0,2,1]]}}"#;

pub const MESH_EXAMPLE: &str = r#"{"components":[[2],[2]],"constants":[[[0],[1]],[[1],[0]]]}"#;
