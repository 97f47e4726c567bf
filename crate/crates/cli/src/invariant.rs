//! Invariant selection: which matrix to derive from a graph, and how to
//! reduce it to a signature.

use qwalk_core::charpoly::{signature, CharPolyError, CharPolySignature, SignatureMode};
use qwalk_core::matrix::IntMatrix;
use qwalk_core::srg::{detect_srg, positive_support_cube_direct, SrgError};
use qwalk_core::walk::{
    adjacency_matrix, adjacency_power_support, positive_support_power, walk_support, WalkError,
};
use qwalk_core::Graph;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InvariantError {
    #[error(transparent)]
    Walk(#[from] WalkError),
    #[error(transparent)]
    Srg(#[from] SrgError),
    #[error(transparent)]
    CharPoly(#[from] CharPolyError),
}

/// The matrix family a scan or signature run is based on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvariantKind {
    /// Adjacency matrix.
    Adjacency,
    /// Support of the walk operator (the line-digraph adjacency).
    SupportU,
    /// Positive support of the walk operator.
    SplusU,
    /// Positive support of the squared walk operator.
    SplusU2,
    /// Positive support of the cubed walk operator (the scan default).
    SplusU3,
    /// Positive support of an arbitrary walk-operator power (see `--power`).
    SplusUP,
    /// Support of a power of the adjacency matrix (see `--power`).
    AdjacencyPowerSupport,
}

impl InvariantKind {
    pub const ALL: [InvariantKind; 7] = [
        InvariantKind::Adjacency,
        InvariantKind::SupportU,
        InvariantKind::SplusU,
        InvariantKind::SplusU2,
        InvariantKind::SplusU3,
        InvariantKind::SplusUP,
        InvariantKind::AdjacencyPowerSupport,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            InvariantKind::Adjacency => "adjacency",
            InvariantKind::SupportU => "support-u",
            InvariantKind::SplusU => "splus-u",
            InvariantKind::SplusU2 => "splus-u2",
            InvariantKind::SplusU3 => "splus-u3",
            InvariantKind::SplusUP => "splus-u-p",
            InvariantKind::AdjacencyPowerSupport => "adjacency-power-support",
        }
    }

    pub fn parse(text: &str) -> Option<InvariantKind> {
        Self::ALL.into_iter().find(|k| k.as_str() == text)
    }
}

/// A fully pinned invariant computation: kind, power, signature mode, and
/// whether the unamended diagonal rule is in force for the direct
/// strongly-regular construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InvariantConfig {
    pub kind: InvariantKind,
    pub power: u32,
    pub mode: SignatureMode,
    pub strict_paper: bool,
}

impl InvariantConfig {
    pub fn new(kind: InvariantKind, power: u32, mode: SignatureMode) -> Self {
        InvariantConfig {
            kind,
            power,
            mode,
            strict_paper: false,
        }
    }

    /// The walk/adjacency power the kind implies; `--power` only matters
    /// for the parameterized kinds.
    pub fn effective_power(&self) -> u32 {
        match self.kind {
            InvariantKind::Adjacency | InvariantKind::SupportU | InvariantKind::SplusU => 1,
            InvariantKind::SplusU2 => 2,
            InvariantKind::SplusU3 => 3,
            InvariantKind::SplusUP | InvariantKind::AdjacencyPowerSupport => self.power,
        }
    }

    /// Stable text form used in reports and cache keys.
    pub fn descriptor(&self) -> String {
        let mut out = format!(
            "{}:p{}:{}",
            self.kind.as_str(),
            self.effective_power(),
            self.mode
        );
        if self.strict_paper {
            out.push_str(":strict");
        }
        out
    }

    /// Builds the invariant matrix for one graph.
    ///
    /// For the cubed positive support of a detected strongly regular graph
    /// the direct entrywise construction is used (no rational powers); all
    /// other paths go through the exact walk machinery.
    pub fn matrix(&self, g: &Graph) -> Result<IntMatrix, InvariantError> {
        let matrix = match self.kind {
            InvariantKind::Adjacency => adjacency_matrix(g),
            InvariantKind::SupportU => walk_support(g)?.1.to_int_matrix(),
            InvariantKind::AdjacencyPowerSupport => {
                adjacency_power_support(g, self.effective_power()).to_int_matrix()
            }
            InvariantKind::SplusU3 => {
                if let Some(params) = detect_srg(g).filter(|p| p.k >= 3) {
                    positive_support_cube_direct(g, &params, self.strict_paper)?
                        .1
                        .to_int_matrix()
                } else {
                    positive_support_power(g, 3)?.1.to_int_matrix()
                }
            }
            InvariantKind::SplusU | InvariantKind::SplusU2 | InvariantKind::SplusUP => {
                positive_support_power(g, self.effective_power())?
                    .1
                    .to_int_matrix()
            }
        };
        Ok(matrix)
    }

    pub fn signature(&self, g: &Graph) -> Result<CharPolySignature, InvariantError> {
        let m = self.matrix(g)?;
        Ok(signature(&m, self.mode)?)
    }

    /// Exact-mode signature of the same matrix, for collision escalation.
    pub fn exact_signature(&self, g: &Graph) -> Result<CharPolySignature, InvariantError> {
        let m = self.matrix(g)?;
        Ok(signature(&m, SignatureMode::Exact)?)
    }
}
