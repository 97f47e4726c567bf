//! The subcommand implementations, kept independent of argument parsing so
//! the test suites can drive them directly.

use crate::cache;
use crate::invariant::InvariantConfig;
use crate::report::{Collision, Group, IndexedError, InvariantDescriptor, ScanReport, Timing};
use qwalk_core::charpoly::{CharPolySignature, SignatureMode, SIGNATURE_PRIMES};
use qwalk_core::edgelist::encode_edge_list;
use qwalk_core::family::{load_family, sniff_format, GraphFamily};
use qwalk_core::graph6::encode_graph6;
use qwalk_core::iso::{is_isomorphic, IsoVerdict};
use qwalk_core::walk::walk_matrix;
use qwalk_core::{Graph, EXACT_DIM_CUTOFF};
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::time::Instant;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CommandError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {message}")]
    Parse { path: String, message: String },
    #[error("{path} holds no graphs")]
    EmptyFamily { path: String },
}

/// Reads a family from a path, sniffing graph6 versus edge-list content.
pub fn read_family(path: &Path) -> Result<GraphFamily, CommandError> {
    let text = fs::read_to_string(path).map_err(|source| CommandError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let format = sniff_format(&text);
    load_family(&text, format, &path.display().to_string()).map_err(|e| CommandError::Parse {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn run_pool<T: Send>(jobs: Option<usize>, work: impl FnOnce() -> T + Send) -> T {
    match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .expect("thread pool")
            .install(work),
        None => work(),
    }
}

/// Per-graph signatures, in input order; failures are per-graph and do not
/// stop the run.
pub fn family_signatures(
    family: &GraphFamily,
    config: &InvariantConfig,
    jobs: Option<usize>,
) -> Vec<Result<CharPolySignature, String>> {
    run_pool(jobs, || {
        family
            .members
            .par_iter()
            .map(|g| config.signature(g).map_err(|e| e.to_string()))
            .collect()
    })
}

/// `invariant` subcommand: one stable line per graph on the output stream,
/// errors inline with their index, processing continuing past them.
pub fn cmd_invariant(
    path: &Path,
    config: &InvariantConfig,
    jobs: Option<usize>,
    dump_dir: Option<&Path>,
) -> Result<(String, usize), CommandError> {
    let family = read_family(path)?;
    let input_bytes = fs::read(path).map_err(|source| CommandError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let key = cache::cache_key(&input_bytes, &config.descriptor());
    let lines: Vec<String> = match cache::lookup(&key) {
        Some(cached) if cached.len() == family.len() && dump_dir.is_none() => cached,
        _ => {
            let signatures = family_signatures(&family, config, jobs);
            let lines: Vec<String> = signatures
                .iter()
                .enumerate()
                .map(|(i, r)| match r {
                    Ok(sig) => format!("{i}\t{}", sig.serialize()),
                    Err(msg) => format!("{i}\tERROR\t{msg}"),
                })
                .collect();
            if signatures.iter().all(Result::is_ok) {
                cache::store(&key, &lines);
            }
            lines
        }
    };
    if let Some(dir) = dump_dir {
        dump_matrices(&family, config, dir)?;
    }
    let errors = lines.iter().filter(|l| l.contains("\tERROR\t")).count();
    Ok((lines.join("\n") + "\n", errors))
}

/// Debug dumps: the invariant matrix as dense 0/1 rows, plus the rational
/// walk operator as `row col num/den` triplets when the invariant is
/// walk-based.
fn dump_matrices(
    family: &GraphFamily,
    config: &InvariantConfig,
    dir: &Path,
) -> Result<(), CommandError> {
    let io_err = |source: std::io::Error| CommandError::Io {
        path: dir.display().to_string(),
        source,
    };
    fs::create_dir_all(dir).map_err(io_err)?;
    for (i, g) in family.members.iter().enumerate() {
        if let Ok(matrix) = config.matrix(g) {
            let binary = matrix.positive_support();
            fs::write(
                dir.join(format!("g{i}.{}.txt", config.kind.as_str())),
                binary.write_dense(),
            )
            .map_err(io_err)?;
        }
        if uses_walk_operator(config) {
            if let Ok((_, u)) = walk_matrix(g) {
                fs::write(dir.join(format!("g{i}.walk.txt")), u.write_triplets())
                    .map_err(io_err)?;
            }
        }
    }
    Ok(())
}

fn uses_walk_operator(config: &InvariantConfig) -> bool {
    use crate::invariant::InvariantKind::*;
    !matches!(config.kind, Adjacency | AdjacencyPowerSupport)
}

pub struct ScanOptions {
    pub config: InvariantConfig,
    pub jobs: Option<usize>,
    pub node_budget: u64,
    pub streaming: bool,
}

/// `scan` subcommand: group a family by signature, escalate modular ties
/// to exact signatures, certify surviving collisions by isomorphism, and
/// evaluate whether distinct graphs stayed distinguishable.
pub fn cmd_scan(path: &Path, options: &ScanOptions) -> Result<ScanReport, CommandError> {
    let started = Instant::now();
    let family = read_family(path)?;
    let parse_ms = started.elapsed().as_millis() as u64;

    let sig_start = Instant::now();
    let signatures = if options.streaming {
        streaming_signatures(&family, &options.config, options.jobs)
    } else {
        family_signatures(&family, &options.config, options.jobs)
    };
    let signatures_ms = sig_start.elapsed().as_millis() as u64;

    let group_start = Instant::now();
    let mut errors = Vec::new();
    let mut by_signature: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    for (i, result) in signatures.iter().enumerate() {
        match result {
            Ok(sig) => by_signature.entry(sig.serialize()).or_default().push(i),
            Err(message) => errors.push(IndexedError {
                index: i,
                message: message.clone(),
            }),
        }
    }

    // Escalation: inside every non-singleton modular group, regroup by the
    // exact signature (when the dimension admits it). A modular tie that
    // the exact polynomial splits was a false collision.
    let mut groups: Vec<Group> = Vec::new();
    for (sig_text, members) in by_signature {
        if members.len() == 1 || options.config.mode == SignatureMode::Exact {
            groups.push(Group {
                signature: sig_text,
                exact_signature: None,
                members,
            });
            continue;
        }
        let dim = signatures[members[0]]
            .as_ref()
            .map(|s| s.degree())
            .unwrap_or(0);
        if dim > EXACT_DIM_CUTOFF {
            groups.push(Group {
                signature: sig_text,
                exact_signature: None,
                members,
            });
            continue;
        }
        let mut by_exact: BTreeMap<String, Vec<usize>> = BTreeMap::new();
        for &i in &members {
            match options.config.exact_signature(&family.members[i]) {
                Ok(sig) => by_exact.entry(sig.serialize()).or_default().push(i),
                Err(message) => errors.push(IndexedError {
                    index: i,
                    message: message.to_string(),
                }),
            }
        }
        for (exact_text, exact_members) in by_exact {
            groups.push(Group {
                signature: sig_text.clone(),
                exact_signature: Some(exact_text),
                members: exact_members,
            });
        }
    }
    groups.sort_by_key(|g| g.members[0]);
    let grouping_ms = group_start.elapsed().as_millis() as u64;

    // Isomorphism verdicts for every intra-group pair.
    let iso_start = Instant::now();
    let mut collisions = Vec::new();
    let mut any_non_iso = false;
    let mut any_inconclusive = false;
    for group in &groups {
        for a in 0..group.members.len() {
            for b in (a + 1)..group.members.len() {
                let (i, j) = (group.members[a], group.members[b]);
                let verdict =
                    is_isomorphic(&family.members[i], &family.members[j], options.node_budget);
                let (text, witness) = match verdict {
                    IsoVerdict::Isomorphic { witness } => ("isomorphic".to_string(), Some(witness)),
                    IsoVerdict::NonIsomorphic => {
                        any_non_iso = true;
                        ("non-isomorphic".to_string(), None)
                    }
                    IsoVerdict::Inconclusive { .. } => {
                        any_inconclusive = true;
                        ("inconclusive".to_string(), None)
                    }
                };
                collisions.push(Collision {
                    pair: (i, j),
                    verdict: text,
                    witness,
                    escalated_to_exact: group.exact_signature.is_some(),
                });
            }
        }
    }
    let isomorphism_ms = iso_start.elapsed().as_millis() as u64;

    let conjecture = if any_non_iso {
        "fails"
    } else if any_inconclusive {
        "undetermined"
    } else {
        "holds"
    };

    let grouped: usize = groups.iter().map(|g| g.members.len()).sum();
    debug_assert_eq!(grouped + errors.len(), family.len());

    Ok(ScanReport {
        family_source: family.source.clone(),
        family_size: family.len(),
        invariant: InvariantDescriptor {
            kind: options.config.kind.as_str().to_string(),
            power: options.config.effective_power(),
            mode: options.config.mode.to_string(),
            primes: match options.config.mode {
                SignatureMode::Modular => Some(SIGNATURE_PRIMES.to_vec()),
                SignatureMode::Exact => None,
            },
            strict_paper: options.config.strict_paper,
            streaming: options.streaming,
        },
        groups,
        collisions,
        errors,
        conjecture: conjecture.to_string(),
        timing_ms: Timing {
            parse_ms,
            signatures_ms,
            grouping_ms,
            isomorphism_ms,
        },
    })
}

/// Streaming variant for very large families: a first pass groups by a
/// single-prime signature, and only the graphs tied under that prime get
/// the full prime set. Graphs already unique keep their single-prime
/// signature, so most of the family is touched exactly once.
fn streaming_signatures(
    family: &GraphFamily,
    config: &InvariantConfig,
    jobs: Option<usize>,
) -> Vec<Result<CharPolySignature, String>> {
    use qwalk_core::charpoly::modular_signature_with_primes;
    let coarse: Vec<Result<CharPolySignature, String>> = run_pool(jobs, || {
        family
            .members
            .par_iter()
            .map(|g| {
                let m = config.matrix(g).map_err(|e| e.to_string())?;
                modular_signature_with_primes(&m, &SIGNATURE_PRIMES[..1]).map_err(|e| e.to_string())
            })
            .collect()
    });
    let mut buckets: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    for (i, r) in coarse.iter().enumerate() {
        if let Ok(sig) = r {
            buckets.entry(sig.serialize()).or_default().push(i);
        }
    }
    let needs_full: Vec<usize> = buckets
        .values()
        .filter(|members| members.len() > 1)
        .flatten()
        .copied()
        .collect();
    let full: BTreeMap<usize, Result<CharPolySignature, String>> = run_pool(jobs, || {
        needs_full
            .par_iter()
            .map(|&i| {
                (
                    i,
                    config
                        .signature(&family.members[i])
                        .map_err(|e| e.to_string()),
                )
            })
            .collect()
    });
    coarse
        .into_iter()
        .enumerate()
        .map(|(i, r)| match full.get(&i) {
            Some(result) => result.clone(),
            None => r,
        })
        .collect()
}

/// `iso` subcommand result.
pub struct IsoReport {
    pub verdict: IsoVerdict,
}

pub fn cmd_iso(path_g: &Path, path_h: &Path, node_budget: u64) -> Result<IsoReport, CommandError> {
    let g = single_graph(path_g)?;
    let h = single_graph(path_h)?;
    Ok(IsoReport {
        verdict: is_isomorphic(&g, &h, node_budget),
    })
}

pub fn single_graph(path: &Path) -> Result<Graph, CommandError> {
    let family = read_family(path)?;
    family
        .members
        .into_iter()
        .next()
        .ok_or_else(|| CommandError::EmptyFamily {
            path: path.display().to_string(),
        })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConvertTarget {
    Graph6,
    Edges,
}

/// `convert` subcommand: re-encode a family in the requested format.
pub fn cmd_convert(input: &Path, target: ConvertTarget) -> Result<String, CommandError> {
    let family = read_family(input)?;
    let mut out = String::new();
    for g in &family.members {
        match target {
            ConvertTarget::Graph6 => {
                out.push_str(&encode_graph6(g));
                out.push('\n');
            }
            ConvertTarget::Edges => out.push_str(&encode_edge_list(g)),
        }
    }
    Ok(out)
}
