//! The four fixed optimum 5-regular orientations, entry for entry.

/// 8×8, rows are `v1..v8`.
pub(super) const G4: [[i8; 8]; 8] = [
    [0, 1, 1, 1, 0, 0, 1, 1],
    [-1, 0, 1, -1, 0, 0, 1, -1],
    [-1, -1, 0, 1, -1, 1, 0, 0],
    [-1, 1, -1, 0, 1, 1, 0, 0],
    [0, 0, 1, -1, 0, 1, -1, 1],
    [0, 0, -1, -1, -1, 0, 1, 1],
    [-1, -1, 0, 0, 1, -1, 0, 1],
    [-1, 1, 0, 0, -1, -1, -1, 0],
];

/// 12×12, rows are `v3, v2, v4, v6, v5, v1, v9, v7, v8, v10, v11, v12`.
pub(super) const G16: [[i8; 12]; 12] = [
    [0, 1, 0, 0, -1, -1, 1, -1, 0, 0, 0, 0],
    [-1, 0, 1, 0, 0, -1, 0, 1, -1, 0, 0, 0],
    [0, -1, 0, 1, 0, -1, 0, 0, 1, -1, 0, 0],
    [0, 0, -1, 0, 1, -1, 0, 0, 0, 1, -1, 0],
    [1, 0, 0, -1, 0, -1, -1, 0, 0, 0, 1, 0],
    [1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0],
    [-1, 0, 0, 0, 1, 0, 0, -1, 0, 0, 1, -1],
    [1, -1, 0, 0, 0, 0, 1, 0, -1, 0, 0, -1],
    [0, 1, -1, 0, 0, 0, 0, 1, 0, -1, 0, -1],
    [0, 0, 1, -1, 0, 0, 0, 0, 1, 0, -1, -1],
    [0, 0, 0, 1, -1, 0, -1, 0, 0, 1, 0, -1],
    [0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 0],
];
pub(super) const G16_ROWS: [usize; 12] = [3, 2, 4, 6, 5, 1, 9, 7, 8, 10, 11, 12];

/// 12×12, rows are `v1, v10, v12, v3, v4, v5, v9, v8, v7, v2, v6, v11`.
pub(super) const G17: [[i8; 12]; 12] = [
    [0, 0, 0, 1, -1, 0, 0, 0, 0, 1, -1, 1],
    [0, 0, 0, 1, 0, -1, 0, 0, 0, -1, -1, -1],
    [0, 0, 0, 0, 1, 1, 0, 0, 0, -1, -1, 1],
    [-1, -1, 0, 0, 0, 0, 1, -1, -1, 0, 0, 0],
    [1, 0, -1, 0, 0, 0, -1, -1, -1, 0, 0, 0],
    [0, 1, -1, 0, 0, 0, 1, -1, 1, 0, 0, 0],
    [0, 0, 0, -1, 1, -1, 0, 0, 0, 1, -1, 0],
    [0, 0, 0, 1, 1, 1, 0, 0, 0, 1, 0, -1],
    [0, 0, 0, 1, 1, -1, 0, 0, 0, 0, 1, 1],
    [-1, 1, 1, 0, 0, 0, -1, -1, 0, 0, 0, 0],
    [1, 1, 1, 0, 0, 0, 1, 0, -1, 0, 0, 0],
    [-1, 1, -1, 0, 0, 0, 0, 1, -1, 0, 0, 0],
];
pub(super) const G17_ROWS: [usize; 12] = [1, 10, 12, 3, 4, 5, 9, 8, 7, 2, 6, 11];

/// 24×24, rows are `v1..v24`.
pub(super) const G31: [[i8; 24]; 24] = [
    [0, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [-1, 0, 0, 0, 0, 0, -1, 1, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [-1, 0, 0, 0, 0, 0, 1, 0, 0, 0, -1, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [-1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [-1, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0, -1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [-1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, -1, 0, 0, 0, 0, 0],
    [0, -1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, -1, 0, 0, 0],
    [0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 1, 0, -1, 0, 0],
    [0, 1, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, -1, -1, 0, 0],
    [0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, -1, 0, 0, 1, 0],
    [0, 0, 1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 1, -1, 0, 0, 0],
    [0, 0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, -1, 0, 1, 0],
    [0, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 1, -1, 0],
    [0, 0, 0, 1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 1, 0, 0, 0, -1, 0],
    [0, 0, 0, 0, 0, 0, -1, -1, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, -1],
    [0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0, 1, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, -1],
    [0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1],
    [0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, -1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, -1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, -1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 0, 1, 1, 0],
];
