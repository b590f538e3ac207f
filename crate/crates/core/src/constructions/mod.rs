//! Explicit optimum orientations: the prism lift, the four fixed 5-regular
//! matrices and the two block families.

pub mod blocks;
mod fixed;

use std::fmt;
use std::str::FromStr;

pub use blocks::{block_identities, BlockIdentity, BlockSpec};

use crate::error::{Error, Result};
use crate::graph::UndirectedGraph;
use crate::matrix::IntMatrix;
use crate::oriented::Orientation;

/// Orients `P2 □ G` from an optimum orientation `S` of a `k`-regular `G`.
///
/// The skew matrix of the result is `[[S, I], [-I, -S]]`, whose square is
/// `(S² - I) ⊕ (S² - I) = -(k+1) I`. Vertex `(i, v)` is `i·n + v`, matching
/// [`UndirectedGraph::cartesian_product`] with `P2` on the left.
pub fn p2_lift(o: &Orientation) -> Result<Orientation> {
    let k = o.graph().max_degree();
    if !o.is_optimum(k) {
        return Err(Error::NotOptimum(k));
    }
    let n = o.order();
    let s = o.skew_matrix();
    let mut b = IntMatrix::zeros(2 * n, 2 * n);
    b.set_block(0, 0, &s);
    b.set_block(0, n, &IntMatrix::identity(n));
    b.set_block(n, 0, &IntMatrix::scalar(n, -1));
    b.set_block(n, n, &-&s);
    Orientation::from_skew_matrix(&b)
}

/// An optimum orientation of the hypercube `Q_d`, lifted `d` times from
/// a single vertex.
pub fn hypercube(d: usize) -> Orientation {
    let mut o = Orientation::ascending(UndirectedGraph::empty(1));
    for _ in 0..d {
        o = p2_lift(&o).expect("lifts of optimum orientations are optimum");
    }
    o
}

/// The fixed 5-regular orientations given entry by entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PaperMatrix {
    G4,
    G16,
    G17,
    G31,
}

impl PaperMatrix {
    pub const ALL: [PaperMatrix; 4] = [PaperMatrix::G4, PaperMatrix::G16, PaperMatrix::G17, PaperMatrix::G31];

    pub fn name(self) -> &'static str {
        match self {
            PaperMatrix::G4 => "g4",
            PaperMatrix::G16 => "g16",
            PaperMatrix::G17 => "g17",
            PaperMatrix::G31 => "g31",
        }
    }

    /// The matrix exactly as displayed, rows in display order.
    pub fn displayed(self) -> IntMatrix {
        fn conv<const N: usize>(rows: &[[i8; N]; N]) -> IntMatrix {
            let rows: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect();
            IntMatrix::from_rows(&rows)
        }
        match self {
            PaperMatrix::G4 => conv(&fixed::G4),
            PaperMatrix::G16 => conv(&fixed::G16),
            PaperMatrix::G17 => conv(&fixed::G17),
            PaperMatrix::G31 => conv(&fixed::G31),
        }
    }

    /// Vertex (0-based) carried by each displayed row.
    pub fn row_order(self) -> Vec<usize> {
        match self {
            PaperMatrix::G16 => fixed::G16_ROWS.iter().map(|v| v - 1).collect(),
            PaperMatrix::G17 => fixed::G17_ROWS.iter().map(|v| v - 1).collect(),
            PaperMatrix::G4 => (0..8).collect(),
            PaperMatrix::G31 => (0..24).collect(),
        }
    }

    /// The orientation on the original vertex labels: displayed row `i`
    /// becomes vertex `row_order()[i]`.
    pub fn orientation(self) -> Orientation {
        let displayed = Orientation::from_skew_matrix(&self.displayed()).expect("fixed matrices are skew-symmetric");
        displayed.relabel(&self.row_order())
    }
}

impl FromStr for PaperMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "g4" => Ok(PaperMatrix::G4),
            "g16" => Ok(PaperMatrix::G16),
            "g17" => Ok(PaperMatrix::G17),
            "g31" => Ok(PaperMatrix::G31),
            other => Err(Error::InvalidParameter(format!("unknown fixed matrix `{other}`"))),
        }
    }
}

impl fmt::Display for PaperMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn paper_matrix(name: &str) -> Result<Orientation> {
    Ok(name.parse::<PaperMatrix>()?.orientation())
}

fn check_family_order(n: usize, min: usize) -> Result<()> {
    if n % 4 != 0 || n < min {
        return Err(Error::InvalidParameter(format!(
            "order must be a multiple of 4 and at least {min}, got {n}"
        )));
    }
    Ok(())
}

/// Block-tridiagonal 5-regular family of order `n ≡ 0 (mod 4)`, `n ≥ 12`.
///
/// Diagonal `D1, D2, -D2, D2, …, D1ᵀ`; superdiagonal `Q1, Q2, Q3, Q2, …`
/// ending in `Q5` when `n/4` is odd and `Q4` when it is even.
pub fn g12_family(n: usize) -> Result<Orientation> {
    check_family_order(n, 12)?;
    let b = BlockSpec::get();
    let inner = n / 4 - 1;
    let mut s = IntMatrix::zeros(n, n);
    let put_pair = |s: &mut IntMatrix, r: usize, c: usize, block: &IntMatrix| {
        s.set_block(r, c, block);
        s.set_block(c, r, &-&block.transpose());
    };
    s.set_block(0, 0, &b.d1);
    put_pair(&mut s, 0, 2, &b.q1);
    let mut row = 2;
    for i in 0..inner {
        let diag = if i % 2 == 0 { b.d2.clone() } else { -&b.d2 };
        s.set_block(row, row, &diag);
        if i + 1 < inner {
            let up = if i % 2 == 0 { &b.q2 } else { &b.q3 };
            put_pair(&mut s, row, row + 4, up);
        }
        row += 4;
    }
    let last = row - 4;
    let terminator = if (n / 4) % 2 == 1 { &b.q5 } else { &b.q4 };
    put_pair(&mut s, last, row, terminator);
    s.set_block(row, row, &b.d1.transpose());
    assert_eq!(row + 2, n, "block assembly must fill the whole matrix");
    Orientation::from_skew_matrix(&s)
}

/// The `[[A1, A2], [-A2ᵀ, A3]]` family of order `n ≡ 0 (mod 4)`, `n ≥ 16`,
/// assembled from 2×2 blocks.
pub fn g26_family(n: usize) -> Result<Orientation> {
    check_family_order(n, 16)?;
    let b = BlockSpec::get();
    let half = n / 2;
    let cnt = half / 2;
    let mut a1 = IntMatrix::zeros(half, half);
    let mut a2 = IntMatrix::zeros(half, half);
    let mut a3 = IntMatrix::zeros(half, half);
    for i in 0..cnt - 1 {
        let up1 = if i == 0 { &b.m2 } else { &b.m3 };
        a1.set_block(2 * i, 2 * i + 2, up1);
        a1.set_block(2 * i + 2, 2 * i, &-&up1.transpose());
        let up3 = if i == 0 { b.m3.transpose() } else { -&b.m3.transpose() };
        a3.set_block(2 * i, 2 * i + 2, &up3);
        a3.set_block(2 * i + 2, 2 * i, &-&up3.transpose());
    }
    a2.set_block(0, 0, &b.m);
    for i in 1..cnt {
        a2.set_block(2 * i, 2 * i, &b.m1);
    }
    a2.set_block(0, half - 2, &-&b.m3);
    a2.set_block(half - 2, 0, &b.m4);
    let mut s = IntMatrix::zeros(n, n);
    s.set_block(0, 0, &a1);
    s.set_block(0, half, &a2);
    s.set_block(half, 0, &-&a2.transpose());
    s.set_block(half, half, &a3);
    Orientation::from_skew_matrix(&s)
}
