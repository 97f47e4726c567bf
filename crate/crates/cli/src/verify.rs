//! The self-test ledger behind `qwalk verify`: every closed-form result
//! the library relies on, checked against exact or floating oracles on
//! builtin fixtures (or on user-supplied graphs), one pass/fail line each.

use crate::commands::{read_family, CommandError};
use num_complex::Complex64;
use qwalk_core::charpoly::{charpoly_exact, signature, SignatureMode};
use qwalk_core::eig::eigenvalues;
use qwalk_core::fixtures;
use qwalk_core::matrix::RationalMatrix;
use qwalk_core::spectrum::{
    multiset_eq, positive_support_spectrum, positive_support_square_spectrum,
    walk_spectrum_from_transition, ComplexSpectrum,
};
use qwalk_core::srg::{detect_srg, positive_support_cube_direct, srg_adjacency_spectrum};
use qwalk_core::walk::{
    adjacency_matrix, adjacency_power_support, positive_support_power, transition_matrix,
    walk_matrix, walk_support,
};
use qwalk_core::Graph;
use std::fmt::Write as _;
use std::path::Path;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Info,
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub subject: String,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Debug, Default)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn failures(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| c.status == CheckStatus::Fail)
            .count()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = match c.status {
                CheckStatus::Pass => "PASS",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Info => "INFO",
            };
            writeln!(out, "{tag} {:<38} [{}] {}", c.name, c.subject, c.detail).unwrap();
        }
        let failures = self.failures();
        writeln!(out, "{} checks, {} failed", self.checks.len(), failures).unwrap();
        out
    }

    fn push(&mut self, name: &'static str, subject: &str, ok: bool, detail: String) {
        self.checks.push(CheckResult {
            name,
            subject: subject.to_string(),
            status: if ok {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            detail,
        });
    }

    fn info(&mut self, name: &'static str, subject: &str, detail: String) {
        self.checks.push(CheckResult {
            name,
            subject: subject.to_string(),
            status: CheckStatus::Info,
            detail,
        });
    }
}

/// Exactly the identity check the walk operator must satisfy; public so
/// fault-injection tests can feed it corrupted matrices.
pub fn orthogonality_holds(u: &RationalMatrix) -> bool {
    u.mul(&u.transpose()).is_identity()
}

fn eig_spectrum(rows: Vec<Vec<f64>>) -> ComplexSpectrum {
    ComplexSpectrum::new(eigenvalues(&rows).expect("eigensolver converges on fixtures"))
}

fn builtin_fixtures() -> Vec<(String, Graph)> {
    vec![
        ("complete-4".into(), fixtures::complete(4)),
        ("petersen".into(), fixtures::petersen()),
        ("cycle4-plus-isolated".into(), fixtures::c4_plus_isolated()),
        ("star-4".into(), fixtures::star(4)),
        ("rook-4x4".into(), fixtures::rook_4x4()),
        ("shrikhande".into(), fixtures::shrikhande()),
        ("clebsch".into(), fixtures::clebsch()),
        (
            "paley-13".into(),
            fixtures::paley(13).expect("13 = 1 mod 4"),
        ),
    ]
}

/// Breadth-first eccentricity sweep; `None` when disconnected.
fn diameter(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best = 0usize;
    for start in 0..n {
        let mut dist = vec![usize::MAX; n];
        dist[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for u in g.neighbors(v) {
                if dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
            }
        }
        let ecc = *dist.iter().max().unwrap();
        if ecc == usize::MAX {
            return None;
        }
        best = best.max(ecc);
    }
    Some(best)
}

fn is_bipartite(g: &Graph) -> bool {
    let n = g.n();
    let mut color = vec![2u8; n];
    for start in 0..n {
        if color[start] != 2 {
            continue;
        }
        color[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for u in g.neighbors(v) {
                if color[u] == 2 {
                    color[u] = 1 - color[v];
                    queue.push_back(u);
                } else if color[u] == color[v] {
                    return false;
                }
            }
        }
    }
    true
}

pub fn cmd_verify(
    input: Option<&Path>,
    tol: f64,
    strict_paper: bool,
) -> Result<VerifyReport, CommandError> {
    let subjects: Vec<(String, Graph)> = match input {
        None => builtin_fixtures(),
        Some(path) => {
            let family = read_family(path)?;
            family
                .members
                .into_iter()
                .enumerate()
                .map(|(i, g)| (format!("{}#{i}", family.source), g))
                .collect()
        }
    };
    let mut report = VerifyReport::default();

    for (name, g) in &subjects {
        per_graph_checks(&mut report, name, g, tol, strict_paper);
    }

    if input.is_none() {
        builtin_pair_checks(&mut report, tol);
        precondition_checks(&mut report);
    }
    Ok(report)
}

fn per_graph_checks(
    report: &mut VerifyReport,
    name: &str,
    g: &Graph,
    tol: f64,
    strict_paper: bool,
) {
    let (n, m) = (g.n(), g.edge_count());
    let has_isolated = (0..n).any(|v| g.degree(v) == 0);

    if m >= 1 && !has_isolated {
        let (_, u) = walk_matrix(g).expect("no isolated vertices");
        report.push(
            "walk-orthogonality",
            name,
            orthogonality_holds(&u),
            "exact identity of U * transpose(U)".into(),
        );

        let t = transition_matrix(g);
        report.push(
            "transition-column-sums",
            name,
            t.is_column_stochastic(),
            "every column sums to 1 exactly".into(),
        );

        if m >= n {
            let scaled_tol = tol * (2 * m) as f64;
            let direct = eig_spectrum(u.to_float_rows());
            let t_spectrum = eig_spectrum(t.to_float_rows());
            match walk_spectrum_from_transition(&t_spectrum, n, m, scaled_tol) {
                Ok(closed) => report.push(
                    "walk-spectrum-closed-form",
                    name,
                    multiset_eq(&direct, &closed, scaled_tol),
                    format!("eigensolver vs transition closed form, tol {scaled_tol:.2e}"),
                ),
                Err(e) => report.push("walk-spectrum-closed-form", name, false, e.to_string()),
            }
        }
    }

    if let Some(k) = g.regularity().filter(|&k| k >= 3) {
        let scaled_tol = tol * (n * k) as f64;
        let adj_spectrum = eig_spectrum(adjacency_matrix(g).to_float_rows());

        let (_, s1) = positive_support_power(g, 1).expect("k >= 3");
        let direct1 = eig_spectrum(s1.to_int_matrix().to_float_rows());
        let closed1 = positive_support_spectrum(&adj_spectrum, n, k, scaled_tol).expect("regular");
        report.push(
            "support-spectrum-closed-form",
            name,
            multiset_eq(&direct1, &closed1, scaled_tol),
            format!("positive support vs adjacency closed form, tol {scaled_tol:.2e}"),
        );

        let (_, s2) = positive_support_power(g, 2).expect("k >= 3");
        let direct2 = eig_spectrum(s2.to_int_matrix().to_float_rows());
        let closed2 =
            positive_support_square_spectrum(&adj_spectrum, n, k, scaled_tol).expect("regular");
        let twos = direct2.count_near(Complex64::new(2.0, 0.0), 1e-6);
        report.push(
            "support-square-spectrum-closed-form",
            name,
            multiset_eq(&direct2, &closed2, scaled_tol) && twos >= n * (k - 2),
            format!(
                "squared support vs closed form, tol {scaled_tol:.2e}; {twos} eigenvalues at 2 (need {})",
                n * (k - 2)
            ),
        );
    }

    if m >= 1 && g.min_degree() >= 3 {
        let (_, support) = walk_support(g).expect("min degree 3");
        let left = charpoly_exact(&support.to_int_matrix());
        let right = charpoly_exact(&adjacency_matrix(g));
        let ok = match (left, right) {
            (Ok(l), Ok(mut r)) => {
                r.resize(r.len() + 2 * m - n, num_bigint::BigInt::ZERO);
                l == r
            }
            _ => false,
        };
        report.push(
            "line-digraph-charpoly-identity",
            name,
            ok,
            format!(
                "charpoly(support) = x^{} * charpoly(adjacency), exact",
                2 * m - n
            ),
        );
    }

    if let Some(params) = detect_srg(g) {
        if params.k >= 3 {
            let direct = positive_support_cube_direct(g, &params, strict_paper)
                .expect("validated parameters");
            let (_, oracle) = positive_support_power(g, 3).expect("k >= 3");
            report.push(
                "cube-support-direct-vs-exact",
                name,
                direct.1 == oracle,
                format!(
                    "entrywise equality on {params}{}",
                    if strict_paper { " (strict rule)" } else { "" }
                ),
            );
        }
        match srg_adjacency_spectrum(&params) {
            Ok(sp) => {
                let closed = sp.to_complex_spectrum();
                let numeric = eig_spectrum(adjacency_matrix(g).to_float_rows());
                report.push(
                    "srg-spectrum-consistency",
                    name,
                    multiset_eq(&closed, &numeric, tol.max(1e-8)),
                    format!(
                        "three-eigenvalue closed form on {params}, tol {:.2e}",
                        tol.max(1e-8)
                    ),
                );
            }
            Err(e) => report.push("srg-spectrum-consistency", name, false, e.to_string()),
        }
    }

    if m >= 1 && !is_bipartite(g) {
        if let Some(d) = diameter(g) {
            let all_ones = adjacency_power_support(g, d as u32).is_all_ones();
            report.info(
                "diameter-power-support-observation",
                name,
                format!(
                    "support(adjacency^{d}) {} the all-ones matrix",
                    if all_ones { "equals" } else { "differs from" }
                ),
            );
        }
    }
}

/// Checks that need specific graph pairs rather than one subject.
fn builtin_pair_checks(report: &mut VerifyReport, tol: f64) {
    let g = fixtures::c4_plus_isolated();
    let h = fixtures::star(4);
    let sig_g = signature(&adjacency_matrix(&g), SignatureMode::Exact).unwrap();
    let sig_h = signature(&adjacency_matrix(&h), SignatureMode::Exact).unwrap();
    report.push(
        "cospectral-mates-adjacency",
        "cycle4-plus-isolated/star-4",
        sig_g == sig_h,
        "exact adjacency signatures coincide".into(),
    );

    let sq_g = signature(
        &adjacency_power_support(&g, 2).to_int_matrix(),
        SignatureMode::Exact,
    )
    .unwrap();
    let sq_h = signature(
        &adjacency_power_support(&h, 2).to_int_matrix(),
        SignatureMode::Exact,
    )
    .unwrap();
    let spec_g = eig_spectrum(
        adjacency_power_support(&g, 2)
            .to_int_matrix()
            .to_float_rows(),
    );
    let spec_h = eig_spectrum(
        adjacency_power_support(&h, 2)
            .to_int_matrix()
            .to_float_rows(),
    );
    let g_expected = spec_g.count_near(Complex64::new(0.0, 0.0), tol) == 3
        && spec_g.count_near(Complex64::new(2.0, 0.0), tol) == 2;
    let h_expected = spec_h.count_near(Complex64::new(0.0, 0.0), tol) == 3
        && spec_h.count_near(Complex64::new(1.0, 0.0), tol) == 1
        && spec_h.count_near(Complex64::new(4.0, 0.0), tol) == 1;
    report.push(
        "cospectral-mates-squared-support",
        "cycle4-plus-isolated/star-4",
        sig_g == sig_h && sq_g != sq_h && g_expected && h_expected,
        "squared-support spectra {0^3, 2^2} vs {0^3, 1, 4} split the pair".into(),
    );

    let rook = signature(
        &adjacency_matrix(&fixtures::rook_4x4()),
        SignatureMode::Exact,
    )
    .unwrap();
    let shri = signature(
        &adjacency_matrix(&fixtures::shrikhande()),
        SignatureMode::Exact,
    )
    .unwrap();
    report.push(
        "srg-family-cospectrality",
        "rook-4x4/shrikhande",
        rook == shri,
        "same parameters share one exact adjacency signature".into(),
    );
}

fn precondition_checks(report: &mut VerifyReport) {
    let c5 = fixtures::cycle(5).unwrap();
    let rejected = positive_support_power(&c5, 3).is_err();
    report.push(
        "minimum-degree-precondition",
        "cycle-5",
        rejected,
        "2-regular input is rejected by the positive-support pipeline".into(),
    );
}
