//! The named blocks of the two parametric families and the block identities
//! that make their assembled matrices square to `-5I`.

use std::sync::LazyLock;

use crate::matrix::IntMatrix;

/// Blocks of the `G12` family (`d1`, `d2`, `q1..q5`) and the `G26`
/// family (`m`, `m1..m4`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockSpec {
    pub d1: IntMatrix,
    pub d2: IntMatrix,
    pub q1: IntMatrix,
    pub q2: IntMatrix,
    pub q3: IntMatrix,
    pub q4: IntMatrix,
    pub q5: IntMatrix,
    pub m: IntMatrix,
    pub m1: IntMatrix,
    pub m2: IntMatrix,
    pub m3: IntMatrix,
    pub m4: IntMatrix,
}

static BLOCKS: LazyLock<BlockSpec> = LazyLock::new(|| BlockSpec {
    d1: IntMatrix::from_rows(&[[0, -1], [1, 0]]),
    d2: IntMatrix::from_rows(&[[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]]),
    q1: IntMatrix::from_rows(&[[1, 1, -1, -1], [1, 1, 1, 1]]),
    q2: IntMatrix::from_rows(&[[1, -1, 0, 0], [-1, 1, 0, 0], [0, 0, 1, -1], [0, 0, -1, 1]]),
    q3: IntMatrix::from_rows(&[[1, 1, 0, 0], [1, 1, 0, 0], [0, 0, 1, 1], [0, 0, 1, 1]]),
    q4: IntMatrix::from_rows(&[[1, -1], [-1, 1], [-1, -1], [1, 1]]),
    q5: IntMatrix::from_rows(&[[1, -1], [1, -1], [1, 1], [1, 1]]),
    m: IntMatrix::identity(2),
    m1: IntMatrix::from_rows(&[[-1, 0], [0, 1]]),
    m2: IntMatrix::from_rows(&[[1, 1], [1, 1]]),
    m3: IntMatrix::from_rows(&[[1, 1], [-1, -1]]),
    m4: IntMatrix::from_rows(&[[-1, 1], [1, -1]]),
});

impl BlockSpec {
    pub fn get() -> &'static BlockSpec {
        &BLOCKS
    }
}

/// One checked identity: `actual` must equal `expected` entry for entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockIdentity {
    pub family: &'static str,
    pub name: &'static str,
    pub expression: &'static str,
    pub expected: IntMatrix,
    pub actual: IntMatrix,
}

impl BlockIdentity {
    pub fn holds(&self) -> bool {
        self.expected == self.actual
    }
}

/// Evaluates every block identity of both families.
pub fn block_identities() -> Vec<BlockIdentity> {
    let b = BlockSpec::get();
    let t = IntMatrix::transpose;
    let neg5 = |n| IntMatrix::scalar(n, -5);
    let z = IntMatrix::zeros;
    let mut out = Vec::new();
    let mut push = |family, name, expression, expected: IntMatrix, actual: IntMatrix| {
        out.push(BlockIdentity {
            family,
            name,
            expression,
            expected,
            actual,
        })
    };

    let (d1, d2, q1, q2, q3, q5) = (&b.d1, &b.d2, &b.q1, &b.q2, &b.q3, &b.q5);
    let d1t = t(d1);
    let sq = |x: &IntMatrix| x * x;
    let g12 = "g12";
    push(g12, "A", "D1^2 - Q1 Q1^T", neg5(2), &sq(d1) - &(q1 * &t(q1)));
    push(g12, "B", "-Q1^T Q1 + D2^2 - Q2 Q2^T", neg5(4), &(&sq(d2) - &(&t(q1) * q1)) - &(q2 * &t(q2)));
    push(g12, "C", "-Q2^T Q2 + D2^2 - Q3 Q3^T", neg5(4), &(&sq(d2) - &(&t(q2) * q2)) - &(q3 * &t(q3)));
    push(g12, "D", "-Q3^T Q3 + D2^2 - Q2 Q2^T", neg5(4), &(&sq(d2) - &(&t(q3) * q3)) - &(q2 * &t(q2)));
    push(g12, "E", "-Q2^T Q2 + D2^2 - Q5 Q5^T", neg5(4), &(&sq(d2) - &(&t(q2) * q2)) - &(q5 * &t(q5)));
    push(g12, "F", "-Q5^T Q5 + (D1^T)^2", neg5(2), &sq(&d1t) - &(&t(q5) * q5));
    push(g12, "G", "D1 Q1 + Q1 D2", z(2, 4), &(d1 * q1) + &(q1 * d2));
    push(g12, "H", "D2 Q2 - Q2 D2", z(4, 4), &(d2 * q2) - &(q2 * d2));
    push(g12, "I", "-D2 Q3 + Q3 D2", z(4, 4), &(q3 * d2) - &(d2 * q3));
    push(g12, "J", "-D2 Q5 + Q5 D1^T", z(4, 2), &(q5 * &d1t) - &(d2 * q5));
    push(g12, "K", "Q1 Q2", z(2, 4), q1 * q2);
    push(g12, "L", "Q2 Q3", z(4, 4), q2 * q3);
    push(g12, "M", "Q3 Q2", z(4, 4), q3 * q2);
    push(g12, "O", "Q2 Q5", z(4, 2), q2 * q5);
    push(g12, "P", "-Q1^T D1 - D2 Q1^T", z(4, 2), &(-&(&t(q1) * d1)) - &(d2 * &t(q1)));
    push(g12, "Q", "-Q2^T D2 + D2 Q2^T", z(4, 4), &(d2 * &t(q2)) - &(&t(q2) * d2));
    push(g12, "R", "Q3^T D2 - D2 Q3^T", z(4, 4), &(&t(q3) * d2) - &(d2 * &t(q3)));
    push(g12, "U", "Q5^T D2 - D1^T Q5^T", z(2, 4), &(&t(q5) * d2) - &(&d1t * &t(q5)));
    // Terminator of the even variant, checked the same way as E, F, J, O, U.
    let q4 = &b.q4;
    push(g12, "E'", "-Q3^T Q3 + D2^2 - Q4 Q4^T", neg5(4), &(&sq(d2) - &(&t(q3) * q3)) - &(q4 * &t(q4)));
    push(g12, "F'", "-Q4^T Q4 + (D1^T)^2", neg5(2), &sq(&d1t) - &(&t(q4) * q4));
    push(g12, "J'", "D2 Q4 + Q4 D1^T", z(4, 2), &(d2 * q4) + &(q4 * &d1t));
    push(g12, "O'", "Q3 Q4", z(4, 2), q3 * q4);

    let (m, m1, m2, m3, m4) = (&b.m, &b.m1, &b.m2, &b.m3, &b.m4);
    let g26 = "g26";
    let x1 = -&(m2 * &t(m2));
    let x2 = &(-&(&t(m2) * m2)) - &(m3 * &t(m3));
    let x3 = &(-&(&t(m3) * m3)) - &(m3 * &t(m3));
    let x4 = -&(&t(m3) * m3);
    push(g26, "M2M1+MM3T", "M2 M1 + M M3^T", z(2, 2), &(m2 * m1) + &(m * &t(m3)));
    push(g26, "M2TM+M1M3", "M2^T M + M1 M3", z(2, 2), &(&t(m2) * m) + &(m1 * m3));
    push(g26, "M3M1-M1M3T", "M3 M1 - M1 M3^T", z(2, 2), &(m3 * m1) - &(m1 * &t(m3)));
    push(g26, "-M3TM1+M1M3", "-M3^T M1 + M1 M3", z(2, 2), &(m1 * m3) - &(&t(m3) * m1));
    push(g26, "M2TM3", "M2^T M3", z(2, 2), &t(m2) * m3);
    push(g26, "-M3^2", "-M3^2", z(2, 2), -&sq(m3));
    push(g26, "M3M4", "M3 M4", z(2, 2), m3 * m4);
    push(g26, "M4M3T", "M4 M3^T", z(2, 2), m4 * &t(m3));
    push(g26, "X5", "M2 M3", z(2, 2), m2 * m3);
    push(g26, "X6", "M3^2", z(2, 2), sq(m3));
    push(g26, "X2", "-M2^T M2 - M3 M3^T", m.scale(-4), x2.clone());
    push(g26, "X3", "-M3^T M3 - M3 M3^T", m.scale(-4), x3.clone());
    push(g26, "MM4T-M3M1", "M M4^T - M3 M1", z(2, 2), &(m * &t(m4)) - &(m3 * m1));
    push(g26, "M4M-M1M3T", "M4 M - M1 M3^T", z(2, 2), &(m4 * m) - &(m1 * &t(m3)));
    push(g26, "M1^2", "M1^2", m.clone(), sq(m1));
    push(g26, "X1-M^2-M3M3T", "X1 - M^2 - M3 M3^T", m.scale(-5), &(&x1 - &sq(m)) - &(m3 * &t(m3)));
    push(g26, "X4-M4M4T-M1^2", "X4 - M4 M4^T - M1^2", m.scale(-5), &(&x4 - &(m4 * &t(m4))) - &sq(m1));
    push(g26, "X2-M1^2", "X2 - M1^2", m.scale(-5), &x2 - &sq(m1));
    push(g26, "X3-M1^2", "X3 - M1^2", m.scale(-5), &x3 - &sq(m1));
    out
}
