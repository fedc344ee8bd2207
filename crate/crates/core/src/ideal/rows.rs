//! Symbolic generator rows for the exceptional types.
//!
//! Coordinates are affine in the level: `k`, `l` (= k/2) and `<k+m>` (= (k+m)/2).
//! `+nu`/`-nu` and `+mu`/`-mu` append a product with the character
//! `[k,0,...,0]` (E6) or `[0,...,0,k]` (E7).

pub const G2_EVEN: &[&str] = &[
    "[3,l-1]",
    "[1,l]",
    "[0,l+1]+[0,l]",
];

pub const G2_ODD: &[&str] = &[
    "[0,<k+1>]",
    "[3,<k-1>]+[3,<k-3>]",
    "[2,<k-1>]",
];

pub const F4_EVEN: &[&str] = &[
    "[l,0,0,0]+[l+1,0,0,0]",
    "[l-2,1,0,0]+[l,1,0,0]",
    "[l-3,0,2,0]+[l,0,2,0]",
    "[l-2,0,1,1]+[l,0,1,1]",
    "[l-1,0,1,0]+[l,0,1,0]",
    "[l-3,1,0,2]+[l-1,1,0,2]",
    "[l-4,1,1,2]+[l-2,1,1,2]",
    "[l-1,0,0,2]+[l,0,0,2]",
    "[l-2,1,0,1]+[l-1,1,0,1]",
    "[l-2,0,1,2]+[l-1,0,1,2]",
    "[l-3,2,0,0]+[l-2,2,0,0]",
    "[l-3,1,0,3]+[l-2,1,0,3]",
    "[l-3,2,0,2]+[l-4,2,0,2]",
    "[l-2,1,1,1]+[l-3,1,1,1]",
    "[l-1,0,2,0]+[l-2,0,2,0]",
    "[l-1,0,2,1]+[l-3,0,2,1]",
    "[l-1,1,0,0]",
    "[l-2,1,0,2]",
    "[l-1,0,1,1]",
    "[l,0,0,1]",
    "[l-3,1,1,2]",
    "[l-2,0,2,1]",
];

pub const F4_ODD: &[&str] = &[
    "[<k-3>,1,0,0]+[<k-1>,1,0,0]",
    "[<k-5>,0,2,0]+[<k-1>,0,2,0]",
    "[<k-3>,0,1,1]+[<k-1>,0,1,1]",
    "[<k-5>,1,0,2]+[<k-3>,1,0,2]",
    "[<k-7>,1,1,2]+[<k-5>,1,1,2]",
    "[<k-5>,2,0,2]+[<k-9>,2,0,2]",
    "[<k-3>,1,1,1]+[<k-7>,1,1,1]",
    "[<k+1>,0,0,1]+[<k-1>,0,0,1]",
    "[<k-1>,1,0,1]+[<k-5>,1,0,1]",
    "[<k-1>,0,2,1]+[<k-7>,0,2,1]",
    "[<k+1>,0,1,0]+[<k-3>,0,1,0]",
    "[<k+1>,1,0,0]+[<k-5>,1,0,0]",
    "[<k+3>,0,0,0]+[<k-1>,0,0,0]",
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

pub const E6: &[&str] = &[
    "[k-1,1,0,0,0,0]",
    "[k-2,0,0,1,0,0]",
    "[k-3,0,1,0,1,0]",
    "[k-1,0,0,0,1,0]",
    "[k-2,0,1,0,0,1]",
    "[k-3,0,1,0,1,1]",
    "[k-1,0,1,0,0,0]",
    "[k-2,0,0,1,0,1]",
    "[k-2,0,1,0,1,0]",
    "[k,0,0,0,0,1]",
    "[k-2,1,1,0,0,1]",
    "[k-1,0,0,1,0,0]",
    "[k-1,0,1,0,0,1]",
    "[k-1,1,0,0,1,0]",
    "[k-1,1,0,0,1,1]",
    "[k,0,0,0,1,0]",
    "[k,1,0,0,0,1]",
    "[k,1,0,0,1,0]",
    "[k,0,1,0,0,0]",
    "[k+1,0,0,0,0,0]",
    "[k-1,1,0,0,0,1]+[1,0,0,0,0,0]*nu",
    "[k-3,0,1,1,0,1]-[1,1,0,0,0,0]*nu",
    "[k-2,1,0,1,0,1]-[1,0,0,0,0,1]*nu",
    "[k-1,0,0,1,0,1]-[1,0,0,0,0,0]*nu",
    "[k,1,0,0,0,0]+nu",
    "[k,0,0,1,0,0]-nu",
];

pub const E7: &[&str] = &[
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
    "[0,0,0,1,0,0,k-2]",
    "[0,0,0,0,0,1,k-1]",
    "[1,1,0,0,0,1,k-3]",
    "[0,0,1,1,0,1,k-5]",
    "[0,1,0,0,0,1,k-2]",
    "[1,0,0,1,0,1,k-4]",
    "[0,0,0,1,0,1,k-3]",
    "[1,0,1,0,1,1,k-5]",
    "[0,0,1,0,0,0,k-1]",
    "[0,0,1,0,1,1,k-4]",
    "[1,0,0,0,1,0,k-2]",
    "[1,0,0,0,1,1,k-3]",
    "[1,0,1,0,1,0,k-3]",
    "[0,0,0,0,1,0,k-1]",
    "[1,0,1,0,1,1,k-4]",
    "[1,0,0,1,0,0,k-2]",
    "[0,0,1,0,1,0,k-2]",
    "[1,1,0,0,0,0,k-1]",
    "[1,0,0,1,1,0,k-3]",
    "[1,1,0,0,0,1,k-2]",
    "[0,0,0,1,0,0,k-1]",
    "[1,1,0,0,1,0,k-2]",
    "[1,0,0,0,0,1,k-1]",
    "[1,1,0,1,0,0,k-2]",
    "[1,0,0,0,1,0,k-1]",
    "[0,1,1,0,0,0,k-1]",
    "[0,1,0,0,0,0,k]",
    "[1,1,1,0,0,0,k-1]",
    "[1,1,0,0,0,0,k]",
    "[0,1,1,0,0,0,k]",
    "[0,0,0,0,1,0,k]",
    "[0,0,0,0,0,1,k]",
    "[0,0,0,0,0,0,k+1]",
    "[1,0,0,0,0,1,k-2]+[1,0,0,0,0,0,0]*mu",
    "[0,1,1,0,0,1,k-4]-[1,1,0,0,0,0,0]*mu",
    "[0,0,1,0,1,0,k-3]-[0,0,1,0,0,0,0]*mu",
    "[1,0,1,0,0,1,k-3]-[1,0,0,0,0,0,1]*mu",
    "[0,0,1,0,0,1,k-2]-[1,0,0,0,0,0,0]*mu",
    "[1,0,0,1,0,1,k-3]+[1,0,0,0,0,0,1]*mu",
    "[1,0,0,0,0,0,k]+mu",
    "[1,0,0,1,0,0,k-1]+[0,0,0,0,0,0,1]*mu",
    "[0,0,1,0,0,0,k]-mu",
    "[0,0,0,1,0,0,k]+mu",
];

pub const E8_EVEN: &[&str] = &[
    "[0,1,0,0,0,0,0,l-1]",
    "[0,1,0,0,0,1,0,l-3]",
    "[0,1,0,0,1,0,1,l-5]",
    "[0,0,0,0,1,0,0,l-2]",
    "[0,0,0,1,0,0,1,l-4]",
    "[0,0,1,0,0,0,1,l-3]",
    "[1,0,0,0,0,0,1,l-2]",
    "[0,0,0,0,0,0,1,l-1]",
    "[0,2,0,0,0,1,0,l-4]+[0,2,0,0,0,1,0,l-5]",
    "[0,2,0,0,1,1,1,l-8]+[0,2,0,0,1,1,1,l-9]",
    "[0,1,0,0,2,0,1,l-7]+[0,1,0,0,2,0,1,l-8]",
    "[0,1,0,1,1,0,2,l-9]+[0,1,0,1,1,0,2,l-10]",
    "[0,0,1,1,0,0,2,l-7]+[0,0,1,1,0,0,2,l-8]",
    "[1,0,1,0,0,0,2,l-5]+[1,0,1,0,0,0,2,l-6]",
    "[1,0,0,0,0,0,2,l-3]+[1,0,0,0,0,0,2,l-4]",
    "[0,2,0,0,1,0,1,l-6]+[0,2,0,0,1,0,1,l-7]",
    "[0,1,0,0,1,1,0,l-5]+[0,1,0,0,1,1,0,l-6]",
    "[0,1,0,1,0,1,1,l-7]+[0,1,0,1,0,1,1,l-8]",
    "[0,0,0,1,1,0,1,l-6]+[0,0,0,1,1,0,1,l-7]",
    "[0,1,1,0,1,0,2,l-8]+[0,1,1,0,1,0,2,l-9]",
    "[1,0,0,1,0,0,2,l-6]+[1,0,0,1,0,0,2,l-7]",
    "[0,0,1,0,0,0,2,l-4]+[0,0,1,0,0,0,2,l-5]",
    "[0,1,0,0,1,0,0,l-3]+[0,1,0,0,1,0,0,l-4]",
    "[0,1,0,1,0,0,1,l-5]+[0,1,0,1,0,0,1,l-6]",
    "[0,1,0,1,1,1,1,l-9]+[0,1,0,1,1,1,1,l-11]",
    "[0,1,1,0,0,1,1,l-6]+[0,1,1,0,0,1,1,l-7]",
    "[0,0,1,0,1,0,1,l-5]+[0,0,1,0,1,0,1,l-6]",
    "[1,1,0,0,1,0,2,l-7]+[1,1,0,0,1,0,2,l-8]",
    "[0,0,0,1,0,0,2,l-5]+[0,0,0,1,0,0,2,l-6]",
    "[0,1,0,1,1,0,1,l-7]+[0,1,0,1,1,0,1,l-9]",
    "[0,0,0,1,0,1,0,l-4]+[0,0,0,1,0,1,0,l-5]",
    "[0,1,1,0,0,0,1,l-4]+[0,1,1,0,0,0,1,l-5]",
    "[0,1,1,0,1,1,1,l-8]+[0,1,1,0,1,1,1,l-10]",
    "[1,1,0,0,0,1,1,l-5]+[1,1,0,0,0,1,1,l-6]",
    "[1,0,0,0,1,0,1,l-4]+[1,0,0,0,1,0,1,l-5]",
    "[0,1,0,0,1,0,2,l-6]+[0,1,0,0,1,0,2,l-7]",
    "[0,1,0,1,0,1,0,l-5]+[0,1,0,1,0,1,0,l-7]",
    "[0,1,1,0,1,0,1,l-6]+[0,1,1,0,1,0,1,l-8]",
    "[0,0,1,1,0,1,1,l-7]+[0,0,1,1,0,1,1,l-9]",
    "[1,1,0,0,0,0,1,l-3]+[1,1,0,0,0,0,1,l-4]",
    "[1,1,0,0,1,1,1,l-7]+[1,1,0,0,1,1,1,l-9]",
    "[0,1,0,0,0,1,1,l-4]+[0,1,0,0,0,1,1,l-5]",
    "[0,0,0,0,1,0,1,l-3]+[0,0,0,0,1,0,1,l-4]",
    "[0,0,0,1,0,0,0,l-2]+[0,0,0,1,0,0,0,l-3]",
    "[0,1,1,1,0,1,1,l-8]+[0,1,1,1,0,1,1,l-11]",
    "[0,0,1,0,0,1,0,l-3]+[0,0,1,0,0,1,0,l-4]",
    "[1,1,0,0,1,0,1,l-5]+[1,1,0,0,1,0,1,l-7]",
    "[1,0,0,1,0,1,1,l-6]+[1,0,0,1,0,1,1,l-8]",
    "[0,1,0,0,0,0,1,l-2]+[0,1,0,0,0,0,1,l-3]",
    "[0,1,0,0,1,1,1,l-6]+[0,1,0,0,1,1,1,l-8]",
    "[0,0,1,1,0,0,1,l-5]+[0,0,1,1,0,0,1,l-7]",
    "[0,1,1,0,0,1,0,l-4]+[0,1,1,0,0,1,0,l-6]",
    "[1,1,0,1,0,1,1,l-7]+[1,1,0,1,0,1,1,l-10]",
    "[1,0,1,0,0,1,1,l-5]+[1,0,1,0,0,1,1,l-7]",
    "[0,1,0,0,1,0,1,l-4]+[0,1,0,0,1,0,1,l-6]",
    "[0,0,0,1,0,1,1,l-5]+[0,0,0,1,0,1,1,l-7]",
    "[0,0,1,1,0,1,0,l-5]+[0,0,1,1,0,1,0,l-8]",
    "[1,0,0,1,0,0,1,l-4]+[1,0,0,1,0,0,1,l-6]",
    "[1,1,1,0,0,1,1,l-6]+[1,1,1,0,0,1,1,l-9]",
    "[1,0,0,0,0,1,0,l-2]+[1,0,0,0,0,1,0,l-3]",
    "[0,1,0,1,0,1,1,l-6]+[0,1,0,1,0,1,1,l-9]",
    "[0,0,1,0,0,1,1,l-4]+[0,0,1,0,0,1,1,l-6]",
    "[0,0,1,0,1,0,0,l-3]+[0,0,1,0,1,0,0,l-5]",
    "[1,0,1,1,0,1,1,l-7]+[1,0,1,1,0,1,1,l-11]",
    "[1,1,0,0,0,1,0,l-3]+[1,1,0,0,0,1,0,l-5]",
    "[0,0,0,1,0,0,1,l-3]+[0,0,0,1,0,0,1,l-5]",
    "[0,1,1,0,0,1,1,l-5]+[0,1,1,0,0,1,1,l-8]",
    "[1,0,0,0,0,1,1,l-3]+[1,0,0,0,0,1,1,l-5]",
    "[0,0,1,0,0,0,0,l-1]+[0,0,1,0,0,0,0,l-2]",
    "[1,0,1,0,1,0,1,l-5]+[1,0,1,0,1,0,1,l-8]",
    "[1,0,0,1,0,1,0,l-4]+[1,0,0,1,0,1,0,l-7]",
    "[0,0,1,1,0,1,1,l-6]+[0,0,1,1,0,1,1,l-10]",
    "[1,1,0,0,0,1,1,l-4]+[1,1,0,0,0,1,1,l-7]",
    "[0,0,0,0,0,1,0,l-1]+[0,0,0,0,0,1,0,l-2]",
    "[1,0,1,0,0,0,1,l-3]+[1,0,1,0,0,0,1,l-5]",
    "[1,0,1,0,1,1,0,l-5]+[1,0,1,0,1,1,0,l-9]",
    "[0,0,1,0,1,0,1,l-4]+[0,0,1,0,1,0,1,l-7]",
    "[1,0,0,1,0,1,1,l-5]+[1,0,0,1,0,1,1,l-9]",
    "[0,1,0,0,0,1,0,l-2]+[0,1,0,0,0,1,0,l-4]",
    "[1,0,1,0,0,1,0,l-3]+[1,0,1,0,0,1,0,l-6]",
    "[1,0,0,0,1,0,0,l-2]+[1,0,0,0,1,0,0,l-4]",
    "[0,0,1,0,0,0,1,l-2]+[0,0,1,0,0,0,1,l-4]",
    "[1,0,1,0,1,1,1,l-6]+[1,0,1,0,1,1,1,l-11]",
    "[0,0,0,1,0,1,0,l-3]+[0,0,0,1,0,1,0,l-6]",
    "[1,0,1,0,1,0,0,l-3]+[1,0,1,0,1,0,0,l-7]",
    "[1,0,1,0,0,1,1,l-4]+[1,0,1,0,0,1,1,l-8]",
    "[1,0,0,0,1,0,1,l-3]+[1,0,0,0,1,0,1,l-6]",
    "[0,0,1,0,1,1,0,l-4]+[0,0,1,0,1,1,0,l-8]",
    "[1,0,0,1,0,0,0,l-2]+[1,0,0,1,0,0,0,l-5]",
    "[1,0,1,0,1,0,1,l-4]+[1,0,1,0,1,0,1,l-9]",
    "[0,0,1,0,0,1,0,l-2]+[0,0,1,0,0,1,0,l-5]",
    "[1,0,0,0,1,1,0,l-3]+[1,0,0,0,1,1,0,l-7]",
    "[1,1,0,0,0,0,0,l-1]+[1,1,0,0,0,0,0,l-3]",
    "[1,0,0,1,0,0,1,l-3]+[1,0,0,1,0,0,1,l-7]",
    "[1,0,1,0,1,1,0,l-4]+[1,0,1,0,1,1,0,l-10]",
    "[0,0,0,0,1,0,0,l-1]+[0,0,0,0,1,0,0,l-3]",
    "[1,0,0,0,0,0,0,l]+[1,0,0,0,0,0,0,l-1]",
    "[1,1,0,0,0,0,1,l-2]+[1,1,0,0,0,0,1,l-5]",
    "[1,0,0,1,0,1,0,l-3]+[1,0,0,1,0,1,0,l-8]",
    "[0,0,1,0,1,0,0,l-2]+[0,0,1,0,1,0,0,l-6]",
    "[1,0,0,0,0,0,1,l-1]+[1,0,0,0,0,0,1,l-3]",
    "[1,1,0,0,0,1,0,l-2]+[1,1,0,0,0,1,0,l-6]",
    "[1,0,0,1,1,0,0,l-3]+[1,0,0,1,1,0,0,l-9]",
    "[1,0,0,0,0,1,0,l-1]+[1,0,0,0,0,1,0,l-4]",
    "[1,1,0,0,1,0,0,l-2]+[1,1,0,0,1,0,0,l-7]",
    "[0,0,0,1,0,0,0,l-1]+[0,0,0,1,0,0,0,l-4]",
    "[1,0,0,0,1,0,0,l-1]+[1,0,0,0,1,0,0,l-5]",
    "[1,1,0,1,0,0,0,l-2]+[1,1,0,1,0,0,0,l-8]",
    "[1,0,0,1,0,0,0,l-1]+[1,0,0,1,0,0,0,l-6]",
    "[0,1,1,0,0,0,0,l-1]+[0,1,1,0,0,0,0,l-5]",
    "[1,1,1,0,0,0,0,l-1]+[1,1,1,0,0,0,0,l-7]",
    "[0,1,0,0,0,0,0,l]+[0,1,0,0,0,0,0,l-2]",
    "[0,0,1,0,0,0,0,l]+[0,0,1,0,0,0,0,l-3]",
    "[1,1,0,0,0,0,0,l]+[1,1,0,0,0,0,0,l-4]",
    "[0,1,1,0,0,0,0,l]+[0,1,1,0,0,0,0,l-6]",
    "[0,0,0,1,0,0,0,l]+[0,0,0,1,0,0,0,l-5]",
    "[0,0,0,0,1,0,0,l]+[0,0,0,0,1,0,0,l-4]",
    "[0,0,0,0,0,1,0,l]+[0,0,0,0,0,1,0,l-3]",
    "[0,0,0,0,0,0,1,l]+[0,0,0,0,0,0,1,l-2]",
    "[0,0,0,0,0,0,0,l+1]+[0,0,0,0,0,0,0,l]",
];

pub const E8_ODD: &[&str] = &[
    "[0,0,0,0,0,0,1,<k-3>]+[0,0,0,0,0,0,1,<k-1>]",
    "[0,0,0,0,0,1,0,<k-5>]+[0,0,0,0,0,1,0,<k-1>]",
    "[0,0,0,0,1,0,0,<k-7>]+[0,0,0,0,1,0,0,<k-1>]",
    "[0,0,0,1,0,0,0,<k-9>]+[0,0,0,1,0,0,0,<k-1>]",
    "[0,1,1,0,0,0,0,<k-11>]+[0,1,1,0,0,0,0,<k-1>]",
    "[0,0,1,0,0,0,0,<k-5>]+[0,0,1,0,0,0,0,<k-1>]",
    "[1,1,0,0,0,0,0,<k-7>]+[1,1,0,0,0,0,0,<k-1>]",
    "[1,1,1,0,0,0,0,<k-13>]+[1,1,1,0,0,0,0,<k-3>]",
    "[0,1,0,0,0,0,0,<k-3>]+[0,1,0,0,0,0,0,<k-1>]",
    "[1,0,0,1,0,0,0,<k-11>]+[1,0,0,1,0,0,0,<k-3>]",
    "[0,1,1,0,0,0,0,<k-9>]+[0,1,1,0,0,0,0,<k-3>]",
    "[1,0,0,0,1,0,0,<k-9>]+[1,0,0,0,1,0,0,<k-3>]",
    "[1,1,0,1,0,0,0,<k-15>]+[1,1,0,1,0,0,0,<k-5>]",
    "[1,0,0,0,0,1,0,<k-7>]+[1,0,0,0,0,1,0,<k-3>]",
    "[1,1,0,0,1,0,0,<k-13>]+[1,1,0,0,1,0,0,<k-5>]",
    "[0,0,0,1,0,0,0,<k-7>]+[0,0,0,1,0,0,0,<k-3>]",
    "[1,0,0,0,0,0,1,<k-5>]+[1,0,0,0,0,0,1,<k-3>]",
    "[1,1,0,0,0,1,0,<k-11>]+[1,1,0,0,0,1,0,<k-5>]",
    "[1,0,0,1,1,0,0,<k-17>]+[1,0,0,1,1,0,0,<k-7>]",
    "[1,1,0,0,0,0,1,<k-9>]+[1,1,0,0,0,0,1,<k-5>]",
    "[1,0,0,1,0,1,0,<k-15>]+[1,0,0,1,0,1,0,<k-7>]",
    "[0,0,1,0,1,0,0,<k-11>]+[0,0,1,0,1,0,0,<k-5>]",
    "[1,1,0,0,0,0,0,<k-5>]+[1,1,0,0,0,0,0,<k-3>]",
    "[1,0,0,1,0,0,1,<k-13>]+[1,0,0,1,0,0,1,<k-7>]",
    "[1,0,1,0,1,1,0,<k-19>]+[1,0,1,0,1,1,0,<k-9>]",
    "[0,0,0,0,1,0,0,<k-5>]+[0,0,0,0,1,0,0,<k-3>]",
    "[1,0,0,1,0,0,0,<k-9>]+[1,0,0,1,0,0,0,<k-5>]",
    "[1,0,1,0,1,0,1,<k-17>]+[1,0,1,0,1,0,1,<k-9>]",
    "[0,0,1,0,0,1,0,<k-9>]+[0,0,1,0,0,1,0,<k-5>]",
    "[1,0,0,0,1,1,0,<k-13>]+[1,0,0,0,1,1,0,<k-7>]",
    "[1,0,1,0,1,0,0,<k-13>]+[1,0,1,0,1,0,0,<k-7>]",
    "[1,0,1,0,0,1,1,<k-15>]+[1,0,1,0,0,1,1,<k-9>]",
    "[1,0,0,0,1,0,1,<k-11>]+[1,0,0,0,1,0,1,<k-7>]",
    "[0,0,1,0,1,1,0,<k-15>]+[0,0,1,0,1,1,0,<k-9>]",
    "[1,0,1,0,0,1,0,<k-11>]+[1,0,1,0,0,1,0,<k-7>]",
    "[0,0,1,0,0,0,1,<k-7>]+[0,0,1,0,0,0,1,<k-5>]",
    "[1,0,0,0,1,0,0,<k-7>]+[1,0,0,0,1,0,0,<k-5>]",
    "[1,0,1,0,1,1,1,<k-21>]+[1,0,1,0,1,1,1,<k-13>]",
    "[0,0,0,1,0,1,0,<k-11>]+[0,0,0,1,0,1,0,<k-7>]",
    "[1,0,1,0,0,0,1,<k-9>]+[1,0,1,0,0,0,1,<k-7>]",
    "[1,0,1,0,1,1,0,<k-17>]+[1,0,1,0,1,1,0,<k-11>]",
    "[0,0,1,0,1,0,1,<k-13>]+[0,0,1,0,1,0,1,<k-9>]",
    "[1,0,0,1,0,1,1,<k-17>]+[1,0,0,1,0,1,1,<k-11>]",
    "[0,1,0,0,0,1,0,<k-7>]+[0,1,0,0,0,1,0,<k-5>]",
    "[1,0,1,0,1,0,1,<k-15>]+[1,0,1,0,1,0,1,<k-11>]",
    "[1,0,0,1,0,1,0,<k-13>]+[1,0,0,1,0,1,0,<k-9>]",
    "[0,0,1,1,0,1,1,<k-19>]+[0,0,1,1,0,1,1,<k-13>]",
    "[1,1,0,0,0,1,1,<k-13>]+[1,1,0,0,0,1,1,<k-9>]",
    "[0,0,1,0,1,0,0,<k-9>]+[0,0,1,0,1,0,0,<k-7>]",
    "[1,0,1,1,0,1,1,<k-21>]+[1,0,1,1,0,1,1,<k-15>]",
    "[0,0,0,1,0,0,1,<k-9>]+[0,0,0,1,0,0,1,<k-7>]",
    "[1,1,0,0,0,1,0,<k-9>]+[1,1,0,0,0,1,0,<k-7>]",
    "[0,1,1,0,0,1,1,<k-15>]+[0,1,1,0,0,1,1,<k-11>]",
    "[1,0,0,0,0,1,1,<k-9>]+[1,0,0,0,0,1,1,<k-7>]",
    "[0,0,1,1,0,1,0,<k-15>]+[0,0,1,1,0,1,0,<k-11>]",
    "[1,0,0,1,0,0,1,<k-11>]+[1,0,0,1,0,0,1,<k-9>]",
    "[1,1,1,0,0,1,1,<k-17>]+[1,1,1,0,0,1,1,<k-13>]",
    "[0,1,0,1,0,1,1,<k-17>]+[0,1,0,1,0,1,1,<k-13>]",
    "[0,0,1,0,0,1,1,<k-11>]+[0,0,1,0,0,1,1,<k-9>]",
    "[0,0,1,1,0,0,1,<k-13>]+[0,0,1,1,0,0,1,<k-11>]",
    "[0,1,1,0,0,1,0,<k-11>]+[0,1,1,0,0,1,0,<k-9>]",
    "[1,1,0,1,0,1,1,<k-19>]+[1,1,0,1,0,1,1,<k-15>]",
    "[0,1,0,0,1,0,1,<k-11>]+[0,1,0,0,1,0,1,<k-9>]",
    "[1,0,1,0,0,1,1,<k-13>]+[1,0,1,0,0,1,1,<k-11>]",
    "[0,0,0,1,0,1,1,<k-13>]+[0,0,0,1,0,1,1,<k-11>]",
    "[0,1,1,1,0,1,1,<k-21>]+[0,1,1,1,0,1,1,<k-17>]",
    "[1,1,0,0,1,0,1,<k-13>]+[1,1,0,0,1,0,1,<k-11>]",
    "[1,0,0,1,0,1,1,<k-15>]+[1,0,0,1,0,1,1,<k-13>]",
    "[0,1,0,0,1,1,1,<k-15>]+[0,1,0,0,1,1,1,<k-13>]",
    "[0,1,0,1,0,1,0,<k-13>]+[0,1,0,1,0,1,0,<k-11>]",
    "[0,1,1,0,1,0,1,<k-15>]+[0,1,1,0,1,0,1,<k-13>]",
    "[0,0,1,1,0,1,1,<k-17>]+[0,0,1,1,0,1,1,<k-15>]",
    "[1,1,0,0,1,1,1,<k-17>]+[1,1,0,0,1,1,1,<k-15>]",
    "[0,1,0,1,1,0,1,<k-17>]+[0,1,0,1,1,0,1,<k-15>]",
    "[0,1,1,0,1,1,1,<k-19>]+[0,1,1,0,1,1,1,<k-17>]",
    "[0,1,0,1,1,1,1,<k-21>]+[0,1,0,1,1,1,1,<k-19>]",
    "[0,2,0,0,0,1,0,<k-7>]+[0,2,0,0,0,1,0,<k-11>]",
    "[0,2,0,0,1,1,1,<k-15>]+[0,2,0,0,1,1,1,<k-19>]",
    "[0,1,0,0,2,0,1,<k-13>]+[0,1,0,0,2,0,1,<k-17>]",
    "[0,1,0,1,1,0,2,<k-17>]+[0,1,0,1,1,0,2,<k-21>]",
    "[0,0,1,1,0,0,2,<k-13>]+[0,0,1,1,0,0,2,<k-17>]",
    "[1,0,1,0,0,0,2,<k-9>]+[1,0,1,0,0,0,2,<k-13>]",
    "[1,0,0,0,0,0,2,<k-5>]+[1,0,0,0,0,0,2,<k-9>]",
    "[0,2,0,0,1,0,1,<k-11>]+[0,2,0,0,1,0,1,<k-15>]",
    "[0,1,0,0,1,1,0,<k-9>]+[0,1,0,0,1,1,0,<k-13>]",
    "[0,0,0,1,1,0,1,<k-11>]+[0,0,0,1,1,0,1,<k-15>]",
    "[0,1,1,0,1,0,2,<k-15>]+[0,1,1,0,1,0,2,<k-19>]",
    "[1,0,0,1,0,0,2,<k-11>]+[1,0,0,1,0,0,2,<k-15>]",
    "[0,0,1,0,0,0,2,<k-7>]+[0,0,1,0,0,0,2,<k-11>]",
    "[0,1,0,0,1,0,0,<k-5>]+[0,1,0,0,1,0,0,<k-9>]",
    "[0,1,0,1,0,0,1,<k-9>]+[0,1,0,1,0,0,1,<k-13>]",
    "[0,1,0,1,1,1,1,<k-17>]+[0,1,0,1,1,1,1,<k-23>]",
    "[1,1,0,0,1,0,2,<k-13>]+[1,1,0,0,1,0,2,<k-17>]",
    "[0,0,0,1,0,0,2,<k-9>]+[0,0,0,1,0,0,2,<k-13>]",
    "[0,1,0,1,1,0,1,<k-13>]+[0,1,0,1,1,0,1,<k-19>]",
    "[0,1,1,0,0,0,1,<k-7>]+[0,1,1,0,0,0,1,<k-11>]",
    "[0,1,1,0,1,1,1,<k-15>]+[0,1,1,0,1,1,1,<k-21>]",
    "[0,1,0,0,1,0,2,<k-11>]+[0,1,0,0,1,0,2,<k-15>]",
    "[0,1,0,1,0,1,0,<k-9>]+[0,1,0,1,0,1,0,<k-15>]",
    "[0,1,1,0,1,0,1,<k-11>]+[0,1,1,0,1,0,1,<k-17>]",
    "[1,1,0,0,1,1,1,<k-13>]+[1,1,0,0,1,1,1,<k-19>]",
    "[0,1,0,0,0,1,1,<k-7>]+[0,1,0,0,0,1,1,<k-11>]",
    "[0,0,0,0,1,0,1,<k-5>]+[0,0,0,0,1,0,1,<k-9>]",
    "[0,1,1,1,0,1,1,<k-15>]+[0,1,1,1,0,1,1,<k-23>]",
    "[1,1,0,0,1,0,1,<k-9>]+[1,1,0,0,1,0,1,<k-15>]",
    "[0,1,0,0,0,0,1,<k-3>]+[0,1,0,0,0,0,1,<k-7>]",
    "[0,1,0,0,1,1,1,<k-11>]+[0,1,0,0,1,1,1,<k-17>]",
    "[0,0,1,1,0,0,1,<k-9>]+[0,0,1,1,0,0,1,<k-15>]",
    "[0,1,1,0,0,1,0,<k-7>]+[0,1,1,0,0,1,0,<k-13>]",
    "[1,1,0,1,0,1,1,<k-13>]+[1,1,0,1,0,1,1,<k-21>]",
    "[0,1,0,0,1,0,1,<k-7>]+[0,1,0,0,1,0,1,<k-13>]",
    "[0,0,0,1,0,1,1,<k-9>]+[0,0,0,1,0,1,1,<k-15>]",
    "[0,0,1,1,0,1,0,<k-9>]+[0,0,1,1,0,1,0,<k-17>]",
    "[1,1,1,0,0,1,1,<k-11>]+[1,1,1,0,0,1,1,<k-19>]",
    "[0,1,0,1,0,1,1,<k-11>]+[0,1,0,1,0,1,1,<k-19>]",
    "[0,0,1,0,0,1,1,<k-7>]+[0,0,1,0,0,1,1,<k-13>]",
    "[1,0,1,1,0,1,1,<k-13>]+[1,0,1,1,0,1,1,<k-23>]",
    "[0,0,0,1,0,0,1,<k-5>]+[0,0,0,1,0,0,1,<k-11>]",
    "[0,1,1,0,0,1,1,<k-9>]+[0,1,1,0,0,1,1,<k-17>]",
    "[1,0,0,0,0,1,1,<k-5>]+[1,0,0,0,0,1,1,<k-11>]",
    "[0,0,1,1,0,1,1,<k-11>]+[0,0,1,1,0,1,1,<k-21>]",
    "[1,1,0,0,0,1,1,<k-7>]+[1,1,0,0,0,1,1,<k-15>]",
    "[1,0,1,0,0,0,1,<k-5>]+[1,0,1,0,0,0,1,<k-11>]",
    "[0,0,1,0,1,0,1,<k-7>]+[0,0,1,0,1,0,1,<k-15>]",
    "[1,0,0,1,0,1,1,<k-9>]+[1,0,0,1,0,1,1,<k-19>]",
    "[0,1,0,0,0,1,0,<k-3>]+[0,1,0,0,0,1,0,<k-9>]",
    "[1,0,1,0,0,1,0,<k-5>]+[1,0,1,0,0,1,0,<k-13>]",
    "[0,0,1,0,0,0,1,<k-3>]+[0,0,1,0,0,0,1,<k-9>]",
    "[1,0,1,0,1,1,1,<k-11>]+[1,0,1,0,1,1,1,<k-23>]",
    "[0,0,0,1,0,1,0,<k-5>]+[0,0,0,1,0,1,0,<k-13>]",
    "[1,0,1,0,1,0,0,<k-5>]+[1,0,1,0,1,0,0,<k-15>]",
    "[1,0,1,0,0,1,1,<k-7>]+[1,0,1,0,0,1,1,<k-17>]",
    "[1,0,0,0,1,0,1,<k-5>]+[1,0,0,0,1,0,1,<k-13>]",
    "[0,0,1,0,1,1,0,<k-7>]+[0,0,1,0,1,1,0,<k-17>]",
    "[1,0,1,0,1,0,1,<k-7>]+[1,0,1,0,1,0,1,<k-19>]",
    "[0,0,1,0,0,1,0,<k-3>]+[0,0,1,0,0,1,0,<k-11>]",
    "[1,0,0,0,1,1,0,<k-5>]+[1,0,0,0,1,1,0,<k-15>]",
    "[1,0,0,1,0,0,1,<k-5>]+[1,0,0,1,0,0,1,<k-15>]",
    "[1,0,1,0,1,1,0,<k-7>]+[1,0,1,0,1,1,0,<k-21>]",
    "[1,0,0,0,0,0,0,<k+1>]+[1,0,0,0,0,0,0,<k-3>]",
    "[1,1,0,0,0,0,1,<k-3>]+[1,1,0,0,0,0,1,<k-11>]",
    "[1,0,0,1,0,1,0,<k-5>]+[1,0,0,1,0,1,0,<k-17>]",
    "[0,0,1,0,1,0,0,<k-3>]+[0,0,1,0,1,0,0,<k-13>]",
    "[1,0,0,0,0,0,1,<k-1>]+[1,0,0,0,0,0,1,<k-7>]",
    "[1,1,0,0,0,1,0,<k-3>]+[1,1,0,0,0,1,0,<k-13>]",
    "[1,0,0,1,1,0,0,<k-5>]+[1,0,0,1,1,0,0,<k-19>]",
    "[1,0,0,0,0,1,0,<k-1>]+[1,0,0,0,0,1,0,<k-9>]",
    "[1,1,0,0,1,0,0,<k-3>]+[1,1,0,0,1,0,0,<k-15>]",
    "[1,0,0,0,1,0,0,<k-1>]+[1,0,0,0,1,0,0,<k-11>]",
    "[1,1,0,1,0,0,0,<k-3>]+[1,1,0,1,0,0,0,<k-17>]",
    "[1,0,0,1,0,0,0,<k-1>]+[1,0,0,1,0,0,0,<k-13>]",
    "[1,1,1,0,0,0,0,<k-1>]+[1,1,1,0,0,0,0,<k-15>]",
    "[0,1,0,0,0,0,0,<k+1>]+[0,1,0,0,0,0,0,<k-5>]",
    "[0,0,1,0,0,0,0,<k+1>]+[0,0,1,0,0,0,0,<k-7>]",
    "[1,1,0,0,0,0,0,<k+1>]+[1,1,0,0,0,0,0,<k-9>]",
    "[0,1,1,0,0,0,0,<k+1>]+[0,1,1,0,0,0,0,<k-13>]",
    "[0,0,0,1,0,0,0,<k+1>]+[0,0,0,1,0,0,0,<k-11>]",
    "[0,0,0,0,1,0,0,<k+1>]+[0,0,0,0,1,0,0,<k-9>]",
    "[0,0,0,0,0,1,0,<k+1>]+[0,0,0,0,0,1,0,<k-7>]",
    "[0,0,0,0,0,0,1,<k+1>]+[0,0,0,0,0,0,1,<k-5>]",
    "[0,0,0,0,0,0,0,<k+3>]+[0,0,0,0,0,0,0,<k-1>]",
    "[0,0,0,0,0,0,0,<k+1>]",
    "[1,0,0,0,0,0,0,<k-1>]",
    "[0,0,1,0,0,0,0,<k-3>]",
    "[0,0,0,0,0,1,0,<k-3>]",
    "[1,0,0,0,0,1,0,<k-5>]",
    "[0,0,0,1,0,0,0,<k-5>]",
    "[0,0,1,0,0,1,0,<k-7>]",
    "[0,1,0,0,0,0,1,<k-5>]",
    "[1,1,0,0,0,0,1,<k-7>]",
    "[0,1,0,0,0,1,1,<k-9>]",
    "[0,0,0,0,1,0,1,<k-7>]",
    "[0,1,1,0,0,0,1,<k-9>]",
    "[0,0,0,1,0,1,0,<k-9>]",
    "[1,1,0,0,0,1,1,<k-11>]",
    "[1,0,0,0,1,0,1,<k-9>]",
    "[0,1,0,0,1,0,2,<k-13>]",
    "[0,1,0,0,1,0,0,<k-7>]",
    "[0,1,0,1,0,0,1,<k-11>]",
    "[0,1,1,0,0,1,1,<k-13>]",
    "[0,0,1,0,1,0,1,<k-11>]",
    "[1,1,0,0,1,0,2,<k-15>]",
    "[0,0,0,1,0,0,2,<k-11>]",
    "[0,2,0,0,1,0,1,<k-13>]",
    "[0,1,0,0,1,1,0,<k-11>]",
    "[0,1,0,1,0,1,1,<k-15>]",
    "[0,0,0,1,1,0,1,<k-13>]",
    "[0,1,1,0,1,0,2,<k-17>]",
    "[1,0,0,1,0,0,2,<k-13>]",
    "[0,0,1,0,0,0,2,<k-9>]",
    "[0,2,0,0,0,1,0,<k-9>]",
    "[0,2,0,0,1,1,1,<k-17>]",
    "[0,1,0,0,2,0,1,<k-15>]",
    "[0,1,0,1,1,0,2,<k-19>]",
    "[0,0,1,1,0,0,2,<k-15>]",
    "[1,0,1,0,0,0,2,<k-11>]",
    "[1,0,0,0,0,0,2,<k-7>]",
    "[0,2,0,0,0,0,0,<k-5>]",
    "[0,2,0,0,0,2,0,<k-13>]",
    "[0,2,0,0,2,0,2,<k-21>]",
    "[0,0,0,0,2,0,0,<k-9>]",
    "[0,0,0,2,0,0,2,<k-17>]",
    "[0,0,2,0,0,0,2,<k-13>]",
    "[2,0,0,0,0,0,2,<k-9>]",
    "[0,0,0,0,0,0,2,<k-5>]",
    "[1,0,0,1,0,0,0,<k-7>]",
    "[1,1,0,0,1,0,0,<k-9>]",
    "[1,0,0,1,0,1,0,<k-11>]",
    "[1,0,1,0,1,0,1,<k-13>]",
    "[1,0,1,0,0,1,0,<k-9>]",
    "[1,0,1,0,1,1,1,<k-17>]",
    "[0,0,1,1,0,1,0,<k-13>]",
    "[1,1,1,0,0,1,1,<k-15>]",
    "[1,1,0,1,0,1,1,<k-17>]",
    "[0,1,1,1,0,1,1,<k-19>]",
];
