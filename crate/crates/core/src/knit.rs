//! Knitting additive functions on marked simply-laced Dynkin diagrams.
//!
//! The translation quiver `ZΔ` is walked one colour class at a time. A new
//! value at `v` is the sum of the latest values on its neighbours minus the
//! value `v` carried one full step earlier (the mesh relation). Knitting
//! stops right before the first half-step that would produce a negative
//! entry.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Half-steps allowed before giving up.
pub const STEP_CEILING: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
}

impl DynkinType {
    pub fn rank(self) -> usize {
        match self {
            DynkinType::A(n) | DynkinType::D(n) => n,
            DynkinType::E6 => 6,
            DynkinType::E7 => 7,
            DynkinType::E8 => 8,
        }
    }

    /// Tree edges. `A_n`, `D_n` and `E_n` all use a path `0 - 1 - … ` with the
    /// extra `D_n` leaf `n-1` on vertex `n-3` and the `E_n` leaf `n-1` on vertex 2.
    fn edges(self) -> Option<Vec<(usize, usize)>> {
        let n = self.rank();
        let path = |k: usize| (0..k.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
        match self {
            DynkinType::A(n) if n >= 1 => Some(path(n)),
            DynkinType::D(n) if n >= 4 => {
                let mut e = path(n - 1);
                e.push((n - 3, n - 1));
                Some(e)
            }
            DynkinType::E6 | DynkinType::E7 | DynkinType::E8 => {
                let mut e = path(n - 1);
                e.push((2, n - 1));
                Some(e)
            }
            _ => None,
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinType::A(n) => write!(f, "A{n}"),
            DynkinType::D(n) => write!(f, "D{n}"),
            DynkinType::E6 => f.write_str("E6"),
            DynkinType::E7 => f.write_str("E7"),
            DynkinType::E8 => f.write_str("E8"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KnitError {
    #[error("unsupported Dynkin type {0}")]
    BadType(String),
    #[error("marked vertex {marked} is outside a diagram with {rank} vertices")]
    BadMark { marked: usize, rank: usize },
}

/// Dynkin tree with one marked vertex and a proper two-colouring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedDynkin {
    kind: DynkinType,
    adjacency: Vec<Vec<usize>>,
    marked: usize,
    colour: Vec<u8>,
}

impl MarkedDynkin {
    pub fn new(kind: DynkinType, marked: usize) -> Result<Self, KnitError> {
        let edges = kind
            .edges()
            .ok_or_else(|| KnitError::BadType(alloc::format!("{kind}")))?;
        let n = kind.rank();
        if marked >= n {
            return Err(KnitError::BadMark { marked, rank: n });
        }
        let mut adjacency = alloc::vec![Vec::new(); n];
        for (a, b) in edges {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        let mut colour = alloc::vec![u8::MAX; n];
        colour[0] = 0;
        let mut stack = alloc::vec![0];
        while let Some(v) = stack.pop() {
            for &w in &adjacency[v] {
                if colour[w] == u8::MAX {
                    colour[w] = 1 - colour[v];
                    stack.push(w);
                }
            }
        }
        Ok(MarkedDynkin {
            kind,
            adjacency,
            marked,
            colour,
        })
    }

    pub fn kind(&self) -> DynkinType {
        self.kind
    }

    pub fn marked(&self) -> usize {
        self.marked
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adjacency
    }

    pub fn colour(&self, v: usize) -> u8 {
        self.colour[v]
    }

    pub fn a1() -> Self {
        Self::new(DynkinType::A(1), 0).unwrap()
    }

    /// `D4` marked at the trivalent vertex.
    pub fn d4() -> Self {
        Self::new(DynkinType::D(4), 1).unwrap()
    }

    /// `E6` marked at the trivalent vertex.
    pub fn e6() -> Self {
        Self::new(DynkinType::E6, 2).unwrap()
    }

    /// `E7` marked at the trivalent vertex.
    pub fn e7() -> Self {
        Self::new(DynkinType::E7, 2).unwrap()
    }

    /// `E8` marked on the long arm next to the trivalent vertex.
    pub fn e8_5() -> Self {
        Self::new(DynkinType::E8, 3).unwrap()
    }

    /// `E8` marked at the trivalent vertex.
    pub fn e8_6() -> Self {
        Self::new(DynkinType::E8, 2).unwrap()
    }

    /// Named diagrams: `A1`, `D4`, `E6`, `E7`, `E8(5)`, `E8(6)`.
    pub fn named(label: &str) -> Option<Self> {
        Some(match label {
            "A1" | "A" => Self::a1(),
            "D4" => Self::d4(),
            "E6" => Self::e6(),
            "E7" => Self::e7(),
            "E8(5)" | "E8_5" | "E85" => Self::e8_5(),
            "E8(6)" | "E8_6" | "E86" => Self::e8_6(),
            _ => return None,
        })
    }
}

/// Values written at one half-step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnitStep {
    pub half_step: usize,
    pub values: Vec<(usize, BigInt)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnitRun {
    pub history: Vec<KnitStep>,
    /// Marked-vertex values at each full step.
    pub marked_sequence: Vec<BigInt>,
    pub total: BigInt,
}

pub fn knit(d: &MarkedDynkin) -> KnitRun {
    let n = d.adjacency.len();
    let marked_colour = d.colour[d.marked];
    let mut latest: Vec<BigInt> = (0..n)
        .map(|v| if v == d.marked { BigInt::from(1) } else { BigInt::zero() })
        .collect();
    let mut history = alloc::vec![KnitStep {
        half_step: 0,
        values: latest.iter().cloned().enumerate().collect(),
    }];
    let mut marked_sequence = alloc::vec![BigInt::from(1)];
    let mut active = 1 - marked_colour;
    for half_step in 1..=STEP_CEILING {
        let fresh: Vec<(usize, BigInt)> = (0..n)
            .filter(|&v| d.colour[v] == active)
            .map(|v| {
                let around: BigInt = d.adjacency[v].iter().map(|&w| &latest[w]).sum();
                (v, around - &latest[v])
            })
            .collect();
        if fresh.iter().any(|(_, x)| x.is_negative()) {
            break;
        }
        for (v, x) in &fresh {
            latest[*v] = x.clone();
        }
        if active == marked_colour {
            marked_sequence.push(latest[d.marked].clone());
        }
        history.push(KnitStep {
            half_step,
            values: fresh,
        });
        active = 1 - active;
    }
    let total = marked_sequence.iter().sum();
    KnitRun {
        history,
        marked_sequence,
        total,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerBoundRow {
    pub label: &'static str,
    pub diagram: MarkedDynkin,
    pub total: BigInt,
}

/// Knitting totals on the six marked diagrams.
pub fn lower_bound_table() -> Vec<LowerBoundRow> {
    ["A1", "D4", "E6", "E7", "E8(5)", "E8(6)"]
        .into_iter()
        .map(|label| {
            let diagram = MarkedDynkin::named(label).expect("known label");
            let total = knit(&diagram).total;
            LowerBoundRow {
                label,
                diagram,
                total,
            }
        })
        .collect()
}
