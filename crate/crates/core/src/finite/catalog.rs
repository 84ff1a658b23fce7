//! Reference tables: `ℍ`, `D₄`, cyclic and elementary abelian groups and
//! their direct products.

use super::FiniteGroupTable;

/// Index of `±u` in [`quaternion`], with `unit` 0, 1, 2, 3 for `1, i, j, k`.
pub fn q8(negative: bool, unit: u8) -> usize {
    4 * negative as usize + unit as usize
}

/// Products of the units `1, i, j, k` as (sign, unit).
const UNIT_MUL: [[(bool, u8); 4]; 4] = [
    [(false, 0), (false, 1), (false, 2), (false, 3)],
    [(false, 1), (true, 0), (false, 3), (true, 2)],
    [(false, 2), (true, 3), (true, 0), (false, 1)],
    [(false, 3), (false, 2), (true, 1), (true, 0)],
];

/// The quaternion group `{±1, ±i, ±j, ±k}`.
pub fn quaternion() -> FiniteGroupTable {
    FiniteGroupTable::from_fn(8, |a, b| {
        let (sa, ua) = (a >= 4, a % 4);
        let (sb, ub) = (b >= 4, b % 4);
        let (s, u) = UNIT_MUL[ua][ub];
        q8(s ^ sa ^ sb, u)
    })
    .expect("quaternion table")
}

pub fn cyclic(n: usize) -> FiniteGroupTable {
    FiniteGroupTable::from_fn(n, |a, b| (a + b) % n).expect("cyclic table")
}

/// `(ℤ/2)^k` with elements as bit masks.
pub fn elementary_abelian(k: usize) -> FiniteGroupTable {
    FiniteGroupTable::from_fn(1 << k, |a, b| a ^ b).expect("elementary abelian table")
}

/// The dihedral group of order 8, `rᵃsᵇ ↦ 2a + b`.
pub fn dihedral4() -> FiniteGroupTable {
    FiniteGroupTable::from_fn(8, |x, y| {
        let (a, b) = (x / 2, x % 2);
        let (c, d) = (y / 2, y % 2);
        let rot = if b == 0 { a + c } else { a + 4 - c } % 4;
        2 * rot + ((b + d) % 2)
    })
    .expect("dihedral table")
}

/// `ℍ × (ℤ/2)^k`; element `(q, c)` has index `q·2^k + c`.
pub fn quaternion_times_elementary(k: usize) -> FiniteGroupTable {
    quaternion().direct_product(&elementary_abelian(k)).expect("product table")
}

/// `D₄ × (ℤ/2)^k`.
pub fn dihedral_times_elementary(k: usize) -> FiniteGroupTable {
    dihedral4().direct_product(&elementary_abelian(k)).expect("product table")
}
