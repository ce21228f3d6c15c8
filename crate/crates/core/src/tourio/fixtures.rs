//! Printed tours, stored fully expanded in the grid format.

/// Closed `{1,2}` tour of the 6x6 board, radix 9.
pub const KNIGHT_6X6: &str = include_str!("../../fixtures/knight_6x6.txt");
/// Closed `{4,5}` tour of the 18x18 board, radix 9.
pub const LEAPER45_18X18: &str = include_str!("../../fixtures/leaper45_18x18.txt");
/// Closed `{1,10}` tour of the 22x22 board, radix 10.
pub const LEAPER1_10_22X22: &str = include_str!("../../fixtures/leaper1_10_22x22.txt");
/// Closed `{4,5}` tour of the 9x46 board, radix 10. The right half was
/// rebuilt from the printed left half by the half-turn rule.
pub const LEAPER45_9X46: &str = include_str!("../../fixtures/leaper45_9x46.txt");

/// `(name, text, r, s, m, n)` for every fixture.
pub const ALL: [(&str, &str, usize, usize, usize, usize); 4] = [
    ("knight_6x6", KNIGHT_6X6, 1, 2, 6, 6),
    ("leaper45_18x18", LEAPER45_18X18, 4, 5, 18, 18),
    ("leaper1_10_22x22", LEAPER1_10_22X22, 1, 10, 22, 22),
    ("leaper45_9x46", LEAPER45_9X46, 4, 5, 9, 46),
];
