//! Matrices and words from the worked examples.

pub const K5_PRIME_WORD: &str = "a b c d e c a d b e";

pub const ALL_ONES: [&[i64]; 3] = [&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]];

pub const EIGHT: [&[i64]; 8] = [
    &[1, 1, 0, 0, 1, 2, -1, 1],
    &[0, 1, 1, 1, 1, 2, -1, 2],
    &[0, 1, 1, 0, 0, 0, 1, 0],
    &[0, 1, 2, 1, 0, 0, 1, 1],
    &[0, 1, 0, 0, 0, 1, 0, 0],
    &[0, 0, 0, 0, 1, 1, -1, 1],
    &[0, 1, 1, 1, 0, 1, 0, 1],
    &[0, 0, 0, 1, 0, 1, -1, 1],
];

pub const EIGHT_U: [&[i64]; 8] = [
    &[0, 0, 0, 0],
    &[1, -1, 0, 0],
    &[-1, 0, 1, 0],
    &[1, 0, 0, -1],
    &[1, 0, 0, -1],
    &[-1, 1, 0, 0],
    &[0, 1, -1, 0],
    &[0, 0, -1, 1],
];

pub const K5_FIRST: [&[i64]; 5] = [
    &[1, 1, -1, -1, 0],
    &[1, 1, 0, -1, 1],
    &[1, 0, 0, 0, 1],
    &[1, 1, 0, 0, 2],
    &[0, 1, 1, 0, 1],
];

pub const K5_FIRST_INVERSE: [&[i64]; 5] = [
    &[1, -1, 2, -1, 1],
    &[1, -1, 0, 0, 1],
    &[0, 0, 1, -1, 1],
    &[1, -2, 1, 0, 1],
    &[-1, 1, -1, 1, -1],
];

pub const K5_SECOND: [&[i64]; 5] = [
    &[1, 1, -1, 1, 0],
    &[1, 1, 0, -1, 1],
    &[1, 0, 0, 0, 1],
    &[1, 1, 0, 0, 0],
    &[0, 1, 1, 0, 1],
];

/// Three times the inverse of [`K5_SECOND`].
pub const K5_SECOND_INVERSE_TIMES_3: [&[i64]; 5] = [
    &[-1, -1, 2, 3, -1],
    &[1, 1, -2, 0, 1],
    &[-2, -2, 1, 3, 1],
    &[1, -2, 1, 0, 1],
    &[1, 1, 1, -3, 1],
];

pub const PRIME_DOUBLE_PRIME: [&[i64]; 5] = [
    &[1, 1, 0, 1, -1],
    &[0, 0, 0, 0, 1],
    &[0, 0, 0, 1, -1],
    &[0, 0, -1, 0, 1],
    &[0, -1, 1, -1, 0],
];

pub const DOUBLE_PRIME_PRIME: [&[i64]; 5] = [
    &[1, 0, 0, 1, 1],
    &[0, 0, -1, -1, -1],
    &[0, 1, 0, -1, 0],
    &[0, 1, 1, 0, 0],
    &[0, 1, 0, 0, 0],
];

pub const BEFORE_TRANSPOSITION: [&[i64]; 5] = [
    &[1, 1, 0, 1, 1],
    &[1, 1, 1, -1, 2],
    &[2, 1, 0, -1, 2],
    &[1, 1, 1, 0, 1],
    &[1, 2, 0, 1, 1],
];

pub const AFTER_TRANSPOSITION: [&[i64]; 5] = [
    &[1, 0, 0, 0, 1],
    &[0, 1, 0, 0, 1],
    &[1, 1, 1, 0, 1],
    &[0, 1, 0, 1, 0],
    &[1, 1, 0, 0, 1],
];
