//! Printed reference lists used as golden vectors.
#![allow(dead_code)]

pub const G2_WORDS: &[&[u8]] = &[
    &[],
    &[2],
    &[1, 2],
    &[2, 1, 2],
    &[1, 2, 1, 2],
    &[2, 1, 2, 1, 2],
];

pub const G2_LAMBDA: &[&[u8]] = &[
    &[],
    &[2],
    &[1],
    &[2],
    &[1],
    &[2],
];

pub const E6_WORDS: &[&[u8]] = &[
    &[],
    &[1],
    &[3, 1],
    &[4, 3, 1],
    &[2, 4, 3, 1],
    &[5, 4, 3, 1],
    &[5, 2, 4, 3, 1],
    &[6, 5, 4, 3, 1],
    &[4, 5, 2, 4, 3, 1],
    &[2, 6, 5, 4, 3, 1],
    &[3, 4, 5, 2, 4, 3, 1],
    &[4, 2, 6, 5, 4, 3, 1],
    &[1, 3, 4, 5, 2, 4, 3, 1],
    &[6, 3, 4, 5, 2, 4, 3, 1],
    &[5, 4, 2, 6, 5, 4, 3, 1],
    &[6, 1, 3, 4, 5, 2, 4, 3, 1],
    &[3, 5, 4, 2, 6, 5, 4, 3, 1],
    &[5, 6, 1, 3, 4, 5, 2, 4, 3, 1],
    &[4, 3, 5, 4, 2, 6, 5, 4, 3, 1],
    &[4, 5, 6, 1, 3, 4, 5, 2, 4, 3, 1],
    &[2, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1],
    &[3, 4, 5, 6, 1, 3, 4, 5, 2, 4, 3, 1],
    &[1, 2, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1],
    &[2, 3, 4, 5, 6, 1, 3, 4, 5, 2, 4, 3, 1],
    &[4, 2, 3, 4, 5, 6, 1, 3, 4, 5, 2, 4, 3, 1],
    &[5, 4, 2, 3, 4, 5, 6, 1, 3, 4, 5, 2, 4, 3, 1],
    &[6, 5, 4, 2, 3, 4, 5, 6, 1, 3, 4, 5, 2, 4, 3, 1],
];

pub const E6_LAMBDA: &[&[u8]] = &[
    &[],
    &[1],
    &[3],
    &[4],
    &[2],
    &[5],
    &[2, 5],
    &[6],
    &[4],
    &[2, 6],
    &[3],
    &[4, 6],
    &[1],
    &[3, 6],
    &[5],
    &[1, 6],
    &[3, 5],
    &[1, 5],
    &[4],
    &[1, 4],
    &[2],
    &[3],
    &[1, 2],
    &[2, 3],
    &[4],
    &[5],
    &[6],
];

pub const E7_WORDS: &[&[u8]] = &[
    &[],
    &[7],
    &[6, 7],
    &[5, 6, 7],
    &[4, 5, 6, 7],
    &[2, 4, 5, 6, 7],
    &[3, 4, 5, 6, 7],
    &[3, 2, 4, 5, 6, 7],
    &[1, 3, 4, 5, 6, 7],
    &[4, 3, 2, 4, 5, 6, 7],
    &[2, 1, 3, 4, 5, 6, 7],
    &[5, 4, 3, 2, 4, 5, 6, 7],
    &[1, 4, 3, 2, 4, 5, 6, 7],
    &[6, 5, 4, 3, 2, 4, 5, 6, 7],
    &[1, 5, 4, 3, 2, 4, 5, 6, 7],
    &[3, 1, 4, 3, 2, 4, 5, 6, 7],
    &[7, 6, 5, 4, 3, 2, 4, 5, 6, 7],
    &[1, 6, 5, 4, 3, 2, 4, 5, 6, 7],
    &[3, 1, 5, 4, 3, 2, 4, 5, 6, 7],
    &[1, 7, 6, 5, 4, 3, 2, 4, 5, 6, 7],
    &[3, 1, 6, 5, 4, 3, 2, 4, 5, 6, 7],
    &[4, 3, 1, 5, 4, 3, 2, 4, 5, 6, 7],
    &[3, 1, 7, 6, 5, 4, 3, 2, 4, 5, 6, 7],
    &[4, 3, 1, 6, 5, 4, 3, 2, 4, 5, 6, 7],
    &[2, 4, 3, 1, 5, 4, 3, 2, 4, 5, 6, 7],
    &[4, 3, 1, 7, 6, 5, 4, 3, 2, 4, 5, 6, 7],
    &[5, 4, 3, 1, 6, 5, 4, 3, 2, 4, 5, 6, 7],
    &[2, 4, 3, 1, 6, 5, 4, 3, 2, 4, 5, 6, 7],
    &[5, 4, 3, 1, 7, 6, 5, 4, 3, 2, 4, 5, 6, 7],
    &[2, 4, 3, 1, 7, 6, 5, 4, 3, 2, 4, 5, 6, 7],
    &[5, 2, 4, 3, 1, 6, 5, 4, 3, 2, 4, 5, 6, 7],
    &[6, 5, 4, 3, 1, 7, 6, 5, 4, 3, 2, 4, 5, 6, 7],
    &[2, 5, 4, 3, 1, 7, 6, 5, 4, 3, 2, 4, 5, 6, 7],
    &[4, 5, 2, 4, 3, 1, 6, 5, 4, 3, 2, 4, 5, 6, 7],
    &[2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 3, 2, 4, 5, 6, 7],
    &[4, 2, 5, 4, 3, 1, 7, 6, 5, 4, 3, 2, 4, 5, 6, 7],
    &[3, 4, 5, 2, 4, 3, 1, 6, 5, 4, 3, 2, 4, 5, 6, 7],
    &[4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 3, 2, 4, 5, 6, 7],
    &[3, 4, 2, 5, 4, 3, 1, 7, 6, 5, 4, 3, 2, 4, 5, 6, 7],
    &[1, 3, 4, 5, 2, 4, 3, 1, 6, 5, 4, 3, 2, 4, 5, 6, 7],
    &[5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 3, 2, 4, 5, 6, 7],
    &[3, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 3, 2, 4, 5, 6, 7],
    &[1, 3, 4, 2, 5, 4, 3, 1, 7, 6, 5, 4, 3, 2, 4, 5, 6, 7],
    &[3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 3, 2, 4, 5, 6, 7],
    &[1, 3, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 3, 2, 4, 5, 6, 7],
    &[4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 3, 2, 4, 5, 6, 7],
    &[1, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 3, 2, 4, 5, 6, 7],
    &[2, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 3, 2, 4, 5, 6, 7],
    &[1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 3, 2, 4, 5, 6, 7],
    &[1, 2, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 3, 2, 4, 5, 6, 7],
    &[3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 3, 2, 4, 5, 6, 7],
    &[3, 1, 2, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 3, 2, 4, 5, 6, 7],
    &[4, 3, 1, 2, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 3, 2, 4, 5, 6, 7],
    &[5, 4, 3, 1, 2, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 3, 2, 4, 5, 6, 7],
    &[6, 5, 4, 3, 1, 2, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 3, 2, 4, 5, 6, 7],
    &[7, 6, 5, 4, 3, 1, 2, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 3, 2, 4, 5, 6, 7],
];

pub const E7_LAMBDA: &[&[u8]] = &[
    &[],
    &[7],
    &[6],
    &[5],
    &[4],
    &[2],
    &[3],
    &[2, 3],
    &[1],
    &[4],
    &[1, 2],
    &[5],
    &[1, 4],
    &[6],
    &[1, 5],
    &[3],
    &[7],
    &[1, 6],
    &[3, 5],
    &[1, 7],
    &[3, 6],
    &[4],
    &[3, 7],
    &[4, 6],
    &[2],
    &[4, 7],
    &[5],
    &[2, 6],
    &[5, 7],
    &[2, 7],
    &[2, 5],
    &[6],
    &[2, 5, 7],
    &[4],
    &[2, 6],
    &[4, 7],
    &[3],
    &[4, 6],
    &[3, 7],
    &[1],
    &[5],
    &[3, 6],
    &[1, 7],
    &[3, 5],
    &[1, 6],
    &[4],
    &[1, 5],
    &[2],
    &[1, 4],
    &[1, 2],
    &[3],
    &[2, 3],
    &[4],
    &[5],
    &[6],
    &[7],
];

pub const F4_WORDS: &[&[u8]] = &[
    &[],
    &[1],
    &[2, 1],
    &[3, 2, 1],
    &[4, 3, 2, 1],
    &[2, 3, 2, 1],
    &[2, 4, 3, 2, 1],
    &[1, 2, 3, 2, 1],
    &[3, 2, 4, 3, 2, 1],
    &[1, 2, 4, 3, 2, 1],
    &[2, 3, 2, 4, 3, 2, 1],
    &[1, 3, 2, 4, 3, 2, 1],
    &[1, 2, 3, 2, 4, 3, 2, 1],
    &[2, 1, 3, 2, 4, 3, 2, 1],
    &[2, 1, 2, 3, 2, 4, 3, 2, 1],
    &[3, 2, 1, 3, 2, 4, 3, 2, 1],
    &[3, 2, 1, 2, 3, 2, 4, 3, 2, 1],
    &[4, 3, 2, 1, 3, 2, 4, 3, 2, 1],
    &[2, 3, 2, 1, 2, 3, 2, 4, 3, 2, 1],
    &[1, 4, 3, 2, 1, 3, 2, 4, 3, 2, 1],
    &[4, 2, 3, 2, 1, 2, 3, 2, 4, 3, 2, 1],
    &[3, 4, 2, 3, 2, 1, 2, 3, 2, 4, 3, 2, 1],
    &[2, 3, 4, 2, 3, 2, 1, 2, 3, 2, 4, 3, 2, 1],
    &[1, 2, 3, 4, 2, 3, 2, 1, 2, 3, 2, 4, 3, 2, 1],
];

pub const F4_LAMBDA: &[&[u8]] = &[
    &[],
    &[1],
    &[2],
    &[3],
    &[4],
    &[2],
    &[2, 4],
    &[1],
    &[3],
    &[1, 4],
    &[2],
    &[1, 3],
    &[1],
    &[2],
    &[1, 2],
    &[3],
    &[1, 3],
    &[4],
    &[2],
    &[1, 4],
    &[2, 4],
    &[3],
    &[2],
    &[1],
];

pub const E6_AB: &[&str] = &[
    "[k-1,1,0,0,0,0]",
    "[k-2,0,0,1,0,0]",
    "[k-3,0,1,0,1,0]",
    "[k-1,0,0,0,1,0]",
    "[k-2,0,1,0,0,1]",
    "[k-3,0,1,0,1,1]",
    "[k-1,0,1,0,0,0]",
    "[k-2,0,0,1,0,1]",
    "[k-2,0,1,0,1,0]",
    "[k-1,1,0,0,0,1]",
    "[k-3,0,1,1,0,1]",
    "[k,0,0,0,0,1]",
    "[k-2,1,1,0,0,1]",
    "[k-1,0,0,1,0,0]",
    "[k-1,0,1,0,0,1]",
    "[k-2,1,0,1,0,1]",
    "[k-1,0,0,1,0,1]",
    "[k-1,1,0,0,1,0]",
    "[k-1,1,0,0,1,1]",
    "[k,1,0,0,0,0]",
    "[k,0,0,0,1,0]",
    "[k,1,0,0,0,1]",
    "[k,1,0,0,1,0]",
    "[k,0,0,1,0,0]",
    "[k,0,1,0,0,0]",
    "[k+1,0,0,0,0,0]",
];

pub const E7_AB: &[&str] = &[
    "[1,0,0,0,0,0,k-1]",
    "[0,0,1,0,0,0,k-2]",
    "[0,0,0,1,0,0,k-3]",
    "[0,1,0,0,1,0,k-4]",
    "[0,0,0,0,1,0,k-2]",
    "[0,1,0,0,0,1,k-3]",
    "[0,1,0,0,1,1,k-5]",
    "[0,1,0,0,0,0,k-1]",
    "[0,0,0,1,0,1,k-4]",
    "[0,1,0,0,1,0,k-3]",
    "[0,0,1,0,0,1,k-3]",
    "[0,1,0,1,0,1,k-5]",
    "[1,0,0,0,0,1,k-2]",
    "[0,1,1,0,0,1,k-4]",
    "[0,0,0,1,0,0,k-2]",
    "[0,0,0,0,0,1,k-1]",
    "[1,1,0,0,0,1,k-3]",
    "[0,0,1,1,0,1,k-5]",
    "[0,1,0,0,0,1,k-2]",
    "[1,0,0,1,0,1,k-4]",
    "[0,0,1,0,1,0,k-3]",
    "[0,0,0,1,0,1,k-3]",
    "[1,0,1,0,1,1,k-5]",
    "[0,0,1,0,0,0,k-1]",
    "[0,0,1,0,1,1,k-4]",
    "[1,0,0,0,1,0,k-2]",
    "[1,0,1,0,0,1,k-3]",
    "[1,0,0,0,1,1,k-3]",
    "[0,0,1,0,0,1,k-2]",
    "[1,0,1,0,1,0,k-3]",
    "[0,0,0,0,1,0,k-1]",
    "[1,0,1,0,1,1,k-4]",
    "[1,0,0,1,0,0,k-2]",
    "[0,0,1,0,1,0,k-2]",
    "[1,0,0,1,0,1,k-3]",
    "[1,1,0,0,0,0,k-1]",
    "[1,0,0,1,1,0,k-3]",
    "[1,1,0,0,0,1,k-2]",
    "[1,0,0,0,0,0,k]",
    "[0,0,0,1,0,0,k-1]",
    "[1,1,0,0,1,0,k-2]",
    "[1,0,0,0,0,1,k-1]",
    "[1,1,0,1,0,0,k-2]",
    "[1,0,0,0,1,0,k-1]",
    "[0,1,1,0,0,0,k-1]",
    "[1,0,0,1,0,0,k-1]",
    "[0,1,0,0,0,0,k]",
    "[1,1,1,0,0,0,k-1]",
    "[1,1,0,0,0,0,k]",
    "[0,0,1,0,0,0,k]",
    "[0,1,1,0,0,0,k]",
    "[0,0,0,1,0,0,k]",
    "[0,0,0,0,1,0,k]",
    "[0,0,0,0,0,1,k]",
    "[0,0,0,0,0,0,k+1]",
];

pub const F4_AB_EVEN: &[&str] = &[
    "[l,0,0,0]",
    "[l-2,1,0,0]",
    "[l-3,0,2,0]",
    "[l-2,0,1,1]",
    "[l-1,0,1,0]",
    "[l-3,1,0,2]",
    "[l-4,1,1,2]",
    "[l-1,0,0,2]",
    "[l-2,1,0,1]",
    "[l-2,0,1,2]",
    "[l-3,2,0,0]",
    "[l-3,1,0,3]",
    "[l-1,1,0,0]",
    "[l-2,1,0,2]",
    "[l-3,2,0,2]",
    "[l-1,0,1,1]",
    "[l-2,1,1,1]",
    "[l,0,0,1]",
    "[l-1,0,2,0]",
    "[l-1,1,0,1]",
    "[l-1,0,2,1]",
    "[l,0,1,0]",
    "[l,1,0,0]",
    "[l+1,0,0,0]",
];

pub const F4_AB_ODD: &[&str] = &[
    "[<k+1>,0,0,0]",
    "[<k-3>,1,0,0]",
    "[<k-5>,0,2,0]",
    "[<k-3>,0,1,1]",
    "[<k-1>,0,1,0]",
    "[<k-5>,1,0,2]",
    "[<k-7>,1,1,2]",
    "[<k-1>,0,0,2]",
    "[<k-3>,1,0,1]",
    "[<k-3>,0,1,2]",
    "[<k-5>,2,0,0]",
    "[<k-5>,1,0,3]",
    "[<k-1>,1,0,0]",
    "[<k-3>,1,0,2]",
    "[<k-5>,2,0,2]",
    "[<k-1>,0,1,1]",
    "[<k-3>,1,1,1]",
    "[<k+1>,0,0,1]",
    "[<k-1>,0,2,0]",
    "[<k-1>,1,0,1]",
    "[<k-1>,0,2,1]",
    "[<k+1>,0,1,0]",
    "[<k+1>,1,0,0]",
    "[<k+3>,0,0,0]",
];

pub const F4_BS_EVEN: &[&str] = &[
    "[l-1,1,0,0]",
    "[l-2,1,0,2]",
    "[l-1,0,1,1]",
    "[l,0,0,1]",
    "[l-3,1,1,2]",
    "[l-2,0,2,1]",
];

pub const F4_BS_ODD: &[&str] = &[
    "[<k+1>,0,0,0]",
    "[<k-1>,0,1,0]",
    "[<k-1>,0,0,2]",
    "[<k-3>,1,0,1]",
    "[<k-3>,0,1,2]",
    "[<k-5>,2,0,0]",
    "[<k-5>,1,0,3]",
    "[<k-3>,0,2,0]",
    "[<k-7>,2,0,2]",
    "[<k-5>,1,1,1]",
];
