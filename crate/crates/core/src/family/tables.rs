//! Reference tables for the T_n construction, indexed `[i][j]` for
//! `0 <= i <= 11` and `0 <= j <= 10`.

/// Forward path counts `t[i][j]` in the top-left corner.
pub(crate) const TOP_T: [[u32; 11]; 12] = [
    [1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 3, 5, 5, 0, 0, 0, 0, 0, 0, 0],
    [1, 4, 9, 14, 14, 0, 0, 0, 0, 0, 0],
    [0, 0, 9, 23, 37, 37, 37, 0, 0, 0, 0],
    [0, 0, 9, 32, 69, 106, 143, 0, 0, 0, 0],
    [0, 0, 0, 0, 69, 175, 318, 318, 318, 0, 0],
    [0, 0, 0, 0, 69, 244, 562, 880, 1198, 0, 0],
    [0, 0, 0, 0, 0, 0, 562, 1442, 2640, 2640, 0],
    [0, 0, 0, 0, 0, 0, 562, 2004, 4644, 7284, 7284],
    [0, 0, 0, 0, 0, 0, 0, 0, 4644, 11928, 19212],
    [0, 0, 0, 0, 0, 0, 0, 0, 4644, 16572, 35784],
];

/// Coefficient of `a_{n+1}` in `t[M - i][N - j]`.
pub(crate) const BOTTOM_C: [[u32; 11]; 12] = [
    [16572, 5781, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [10791, 5781, 2184, 0, 0, 0, 0, 0, 0, 0, 0],
    [5010, 3597, 2184, 771, 0, 0, 0, 0, 0, 0, 0],
    [1413, 1413, 1413, 771, 300, 0, 0, 0, 0, 0, 0],
    [0, 0, 642, 471, 300, 129, 36, 0, 0, 0, 0],
    [0, 0, 171, 171, 171, 93, 36, 0, 0, 0, 0],
    [0, 0, 0, 0, 78, 57, 36, 15, 4, 0, 0],
    [0, 0, 0, 0, 21, 21, 21, 11, 4, 0, 0],
    [0, 0, 0, 0, 0, 0, 10, 7, 4, 1, 0],
    [0, 0, 0, 0, 0, 0, 3, 3, 3, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 2, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1],
];

/// Coefficient of `b_{n+1}` in `t[M - i][N - j]`.
pub(crate) const BOTTOM_D: [[u32; 11]; 12] = [
    [19212, 6702, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [12510, 6702, 2532, 0, 0, 0, 0, 0, 0, 0, 0],
    [5808, 4170, 2532, 894, 0, 0, 0, 0, 0, 0, 0],
    [1638, 1638, 1638, 894, 348, 0, 0, 0, 0, 0, 0],
    [0, 0, 744, 546, 348, 150, 42, 0, 0, 0, 0],
    [0, 0, 198, 198, 198, 108, 42, 0, 0, 0, 0],
    [0, 0, 0, 0, 90, 66, 42, 18, 5, 0, 0],
    [0, 0, 0, 0, 24, 24, 24, 13, 5, 0, 0],
    [0, 0, 0, 0, 0, 0, 11, 8, 5, 2, 0],
    [0, 0, 0, 0, 0, 0, 3, 3, 3, 2, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Above,
    Below,
}

/// Uncolored cells of the top-left corner with the count of paths on the
/// designated side, as `(i, j, side, coefficient of a_{n+1}, coefficient of b_{n+1})`.
pub(crate) const CORNER_CELLS: [(usize, usize, Side, u32, u32); 27] = [
    (1, 1, Side::Above, 5781, 6702),
    (2, 1, Side::Below, 5010, 5808),
    (2, 2, Side::Above, 4368, 5064),
    (3, 1, Side::Below, 1413, 1638),
    (3, 2, Side::Below, 5652, 6552),
    (3, 3, Side::Above, 3855, 4470),
    (4, 3, Side::Below, 5778, 6696),
    (4, 4, Side::Above, 4200, 4872),
    (5, 3, Side::Below, 1539, 1782),
    (5, 4, Side::Below, 5472, 6336),
    (5, 5, Side::Above, 4773, 5550),
    (5, 6, Side::Above, 1332, 1554),
    (6, 5, Side::Below, 5382, 6210),
    (6, 6, Side::Above, 5148, 6006),
    (7, 5, Side::Below, 1449, 1656),
    (7, 6, Side::Below, 5124, 5856),
    (7, 7, Side::Above, 4770, 5724),
    (7, 8, Side::Above, 1272, 1590),
    (8, 7, Side::Below, 5620, 6182),
    (8, 8, Side::Above, 4792, 5990),
    (9, 7, Side::Below, 1686, 1686),
    (9, 8, Side::Below, 6012, 6012),
    (9, 9, Side::Above, 2640, 5280),
    (10, 9, Side::Below, 9288, 4644),
    (10, 10, Side::Above, 0, 7284),
    (11, 9, Side::Below, 4644, 0),
    (11, 10, Side::Below, 16572, 0),
];
