//! Static Lie-theoretic data for a simple type.
//!
//! Convention: `cartan[i][j] = ⟨α_j, α_i∨⟩`, so the fundamental coordinates of
//! α_j form column j and ⟨λ_i, α_j∨⟩ = δ_ij. Nodes are numbered as in Bourbaki,
//! 1-based in every public signature; node 0 is the affine node with α_0 = −θ.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::weight::{Weight, MAX_RANK};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LieType {
    pub family: Family,
    pub rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => (1..=MAX_RANK).contains(&rank),
            Family::B => (3..=MAX_RANK).contains(&rank),
            Family::C => (2..=MAX_RANK).contains(&rank),
            Family::D => (4..=MAX_RANK).contains(&rank),
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(LieType { family, rank })
        } else {
            Err(Error::InvalidType(format!(
                "{}{rank}: rank out of range for family {} (supported ranks: {})",
                family.letter(),
                family.letter(),
                match family {
                    Family::A => "1..=8",
                    Family::B => "3..=8",
                    Family::C => "2..=8",
                    Family::D => "4..=8",
                    Family::E => "6, 7, 8",
                    Family::F => "4",
                    Family::G => "2",
                }
            )))
        }
    }

    pub fn code(&self) -> String {
        format!("{}{}", self.family.letter(), self.rank)
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::InvalidType(format!("{s:?}: expected a family letter A-G"))),
        };
        let rank = chars
            .as_str()
            .parse::<usize>()
            .map_err(|_| Error::InvalidType(format!("{s:?}: expected a rank after the family letter")))?;
        LieType::new(family, rank)
    }
}

/// Permutation of the affine nodes and its induced linear map on weights.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagramMap {
    /// `perm[i]` is the image of affine node i.
    pub perm: Vec<usize>,
    /// Row-major matrix acting on fundamental coordinates.
    pub matrix: Vec<Vec<i64>>,
}

impl DiagramMap {
    pub fn apply(&self, w: &Weight) -> Weight {
        let n = w.rank();
        let mut out = Weight::zero(n);
        for i in 0..n {
            out[i] = (0..n).map(|j| self.matrix[i][j] * w[j]).sum();
        }
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RootDatum {
    lie_type: LieType,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    simple_roots: Vec<Weight>,
    positive_roots: Vec<Vec<i64>>,
    positive_roots_fund: Vec<Weight>,
    positive_coroots: Vec<Vec<i64>>,
    highest_root: Weight,
    marks: Vec<i64>,
    comarks: Vec<i64>,
    dual_coxeter: i64,
    rho: Weight,
    form: Vec<Vec<i64>>,
    form_denominator: i64,
    weyl_order: u128,
}

fn cartan_matrix(t: LieType) -> Vec<Vec<i64>> {
    let n = t.rank;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    match t.family {
        Family::A => (0..n - 1).for_each(|i| link(i, i + 1, -1, -1)),
        Family::B | Family::C => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            if t.family == Family::B {
                link(n - 2, n - 1, -1, -2);
            } else {
                link(n - 2, n - 1, -2, -1);
            }
        }
        Family::D => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 3, n - 1, -1, -1);
        }
        Family::E => {
            link(0, 2, -1, -1);
            link(2, 3, -1, -1);
            link(1, 3, -1, -1);
            (3..n - 1).for_each(|i| link(i, i + 1, -1, -1));
        }
        Family::F => {
            link(0, 1, -1, -1);
            link(1, 2, -1, -2);
            link(2, 3, -1, -1);
        }
        Family::G => link(0, 1, -3, -1),
    }
    a
}

/// Positive integers d with d_i·A_ij = d_j·A_ji, normalized so short roots get 1.
fn symmetrizer(a: &[Vec<i64>]) -> Vec<i64> {
    let n = a.len();
    let mut d: Vec<Option<Rational64>> = vec![None; n];
    d[0] = Some(Rational64::one());
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if i != j && a[i][j] != 0 && d[j].is_none() {
                d[j] = Some(d[i].unwrap() * Rational64::new(a[i][j], a[j][i]));
                stack.push(j);
            }
        }
    }
    let d: Vec<Rational64> = d.into_iter().map(|x| x.expect("Dynkin diagram is connected")).collect();
    let den = d.iter().fold(1i64, |acc, x| acc.lcm(x.denom()));
    let ints: Vec<i64> = d.iter().map(|x| (x * Rational64::from(den)).to_integer()).collect();
    let g = ints.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    ints.into_iter().map(|x| x / g).collect()
}

/// Exact inverse of a nonsingular integer matrix.
pub(crate) fn rational_inverse(a: &[Vec<i64>]) -> Vec<Vec<Rational64>> {
    let n = a.len();
    let mut m: Vec<Vec<Rational64>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Rational64> = row.iter().map(|&x| Rational64::from(x)).collect();
            r.extend((0..n).map(|j| if i == j { Rational64::one() } else { Rational64::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero()).expect("matrix is nonsingular");
        m.swap(col, piv);
        let p = m[col][col];
        for x in &mut m[col] {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col];
                let pivot_row = m[col].clone();
                for (x, v) in m[r].iter_mut().zip(pivot_row) {
                    *x -= f * v;
                }
            }
        }
    }
    m.into_iter().map(|r| r[n..].to_vec()).collect()
}

/// Determinants of the leading principal minors, computed exactly.
pub fn leading_minors(a: &[Vec<i64>]) -> Vec<Rational64> {
    let n = a.len();
    let mut out = Vec::with_capacity(n);
    for size in 1..=n {
        let mut m: Vec<Vec<Rational64>> =
            (0..size).map(|i| (0..size).map(|j| Rational64::from(a[i][j])).collect()).collect();
        let mut det = Rational64::one();
        for col in 0..size {
            let Some(piv) = (col..size).find(|&r| !m[r][col].is_zero()) else {
                det = Rational64::zero();
                break;
            };
            if piv != col {
                m.swap(col, piv);
                det = -det;
            }
            det *= m[col][col];
            for r in col + 1..size {
                let f = m[r][col] / m[col][col];
                let pivot_row = m[col].clone();
                for (x, v) in m[r][col..size].iter_mut().zip(&pivot_row[col..size]) {
                    *x -= f * v;
                }
            }
        }
        out.push(det);
    }
    out
}

impl RootDatum {
    pub fn new(t: LieType) -> Result<Self> {
        let t = LieType::new(t.family, t.rank)?;
        let n = t.rank;
        let cartan = cartan_matrix(t);
        let d = symmetrizer(&cartan);
        let dmax = *d.iter().max().unwrap();

        let simple_roots: Vec<Weight> = (0..n)
            .map(|j| Weight::new(&(0..n).map(|i| cartan[i][j]).collect::<Vec<_>>()))
            .collect();

        let mut positive: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        let mut head = 0;
        while head < positive.len() {
            let beta = positive[head].clone();
            head += 1;
            for i in 0..n {
                let p: i64 = (0..n).map(|j| cartan[i][j] * beta[j]).sum();
                if p == 0 {
                    continue;
                }
                let mut img = beta.clone();
                img[i] -= p;
                if img.iter().all(|&c| c >= 0) && !positive.contains(&img) {
                    positive.push(img);
                }
            }
        }
        positive.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });

        let to_fund = |beta: &[i64]| {
            Weight::new(&(0..n).map(|i| (0..n).map(|j| cartan[i][j] * beta[j]).sum()).collect::<Vec<_>>())
        };
        let positive_roots_fund: Vec<Weight> = positive.iter().map(|b| to_fund(b)).collect();

        let positive_coroots: Vec<Vec<i64>> = positive
            .iter()
            .map(|beta| {
                let nb: i64 = (0..n)
                    .flat_map(|i| (0..n).map(move |j| (i, j)))
                    .map(|(i, j)| beta[i] * beta[j] * d[i] * cartan[i][j])
                    .sum();
                (0..n)
                    .map(|i| {
                        let num = 2 * beta[i] * d[i];
                        debug_assert_eq!(num % nb, 0);
                        num / nb
                    })
                    .collect()
            })
            .collect();

        let theta_simple = positive.last().unwrap().clone();
        let highest_root = to_fund(&theta_simple);
        let marks = theta_simple.clone();
        let comarks: Vec<i64> = (0..n).map(|i| marks[i] * d[i] / dmax).collect();
        let dual_coxeter = 1 + comarks.iter().sum::<i64>();

        let inv = rational_inverse(&cartan);
        let real_form: Vec<Vec<Rational64>> = (0..n)
            .map(|i| (0..n).map(|j| inv[i][j] * Rational64::new(d[i], dmax)).collect())
            .collect();
        let form_denominator = real_form.iter().flatten().fold(1i64, |acc, x| acc.lcm(x.denom()));
        let form: Vec<Vec<i64>> = real_form
            .iter()
            .map(|r| r.iter().map(|x| (x * Rational64::from(form_denominator)).to_integer()).collect())
            .collect();

        let mut per_height = vec![0u128; positive.len() + 2];
        for beta in &positive {
            per_height[beta.iter().sum::<i64>() as usize] += 1;
        }
        let mut weyl_order = 1u128;
        for h in 1..per_height.len() - 1 {
            let mult = per_height[h] - per_height[h + 1];
            weyl_order *= (h as u128 + 1).pow(mult as u32);
        }

        Ok(RootDatum {
            lie_type: t,
            cartan,
            symmetrizer: d,
            simple_roots,
            positive_roots: positive,
            positive_roots_fund,
            positive_coroots,
            highest_root,
            marks,
            comarks,
            dual_coxeter,
            rho: Weight::new(&vec![1; n]),
            form,
            form_denominator,
            weyl_order,
        })
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    /// α_j for a 1-based node j.
    pub fn simple_root(&self, j: usize) -> Weight {
        self.simple_roots[j - 1]
    }

    /// Positive roots in simple-root coordinates, ordered by height.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn positive_roots_fund(&self) -> &[Weight] {
        &self.positive_roots_fund
    }

    /// ⟨λ, β∨⟩ for the positive root with the given index.
    pub fn coroot_pairing(&self, lambda: &Weight, root: usize) -> i64 {
        let c = &self.positive_coroots[root];
        (0..self.rank()).map(|i| c[i] * lambda[i]).sum()
    }

    pub fn highest_root(&self) -> Weight {
        self.highest_root
    }

    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    pub fn comarks(&self) -> &[i64] {
        &self.comarks
    }

    pub fn dual_coxeter(&self) -> i64 {
        self.dual_coxeter
    }

    pub fn rho(&self) -> Weight {
        self.rho
    }

    pub fn weyl_order(&self) -> u128 {
        self.weyl_order
    }

    pub fn zero(&self) -> Weight {
        Weight::zero(self.rank())
    }

    pub fn fundamental(&self, i: usize) -> Weight {
        Weight::fundamental(self.rank(), i)
    }

    pub fn level(&self, w: &Weight) -> i64 {
        (0..self.rank()).map(|i| self.comarks[i] * w[i]).sum()
    }

    /// The invariant form scaled to integers: `inner_scaled / form_denominator` is
    /// the form with long roots of squared length 2.
    pub fn inner_scaled(&self, a: &Weight, b: &Weight) -> i128 {
        let n = self.rank();
        let mut s = 0i128;
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            let mut row = 0i128;
            for j in 0..n {
                row += self.form[i][j] as i128 * b[j] as i128;
            }
            s += a[i] as i128 * row;
        }
        s
    }

    pub fn form_denominator(&self) -> i64 {
        self.form_denominator
    }

    pub fn inner(&self, a: &Weight, b: &Weight) -> f64 {
        self.inner_scaled(a, b) as f64 / self.form_denominator as f64
    }

    /// Affine Cartan matrix on nodes 0..=n with the same convention.
    pub fn affine_cartan(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut m = vec![vec![0i64; n + 1]; n + 1];
        m[0][0] = 2;
        for i in 0..n {
            for j in 0..n {
                m[i + 1][j + 1] = self.cartan[i][j];
            }
            m[i + 1][0] = -self.highest_root[i];
            m[0][i + 1] = -self.level(&self.simple_roots[i]);
        }
        m
    }

    /// α_i in fundamental coordinates for an affine node i, with α_0 = −θ.
    fn affine_simple_root(&self, i: usize) -> Weight {
        if i == 0 {
            -self.highest_root
        } else {
            self.simple_roots[i - 1]
        }
    }

    /// The order-2 affine diagram automorphism exchanging node 0 and node `i`,
    /// choosing the one with the most fixed nodes.
    pub fn affine_automorphism_swapping(&self, i: usize) -> Result<DiagramMap> {
        let n = self.rank();
        if i == 0 || i > n {
            return Err(Error::InvalidNode { node: i, rank: n });
        }
        let ac = self.affine_cartan();
        let mut perm = vec![usize::MAX; n + 1];
        perm[0] = i;
        perm[i] = 0;
        let mut best: Option<(usize, Vec<usize>)> = None;
        search_involution(&ac, &mut perm, 0, &mut best);
        let Some((_, perm)) = best else {
            return Err(Error::CaseTwoVertex { lie_type: self.lie_type.code(), node: i });
        };

        // R·α_j = α_{perm(j)}, so R = A_perm·A⁻¹ on fundamental coordinates.
        let inv = rational_inverse(&self.cartan);
        let images: Vec<Weight> = (1..=n).map(|j| self.affine_simple_root(perm[j])).collect();
        let mut matrix = vec![vec![0i64; n]; n];
        for r in 0..n {
            for c in 0..n {
                let v: Rational64 = (0..n).map(|j| Rational64::from(images[j][r]) * inv[j][c]).sum();
                if !v.is_integer() {
                    return Err(Error::CaseTwoVertex { lie_type: self.lie_type.code(), node: i });
                }
                matrix[r][c] = v.to_integer();
            }
        }
        Ok(DiagramMap { perm, matrix })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "schema": crate::SCHEMA,
            "type": self.lie_type.code(),
            "rank": self.rank(),
            "cartan": self.cartan,
            "symmetrizer": self.symmetrizer,
            "highest_root": self.highest_root,
            "marks": self.marks,
            "comarks": self.comarks,
            "dual_coxeter": self.dual_coxeter,
            "rho": self.rho,
            "simple_roots": self.simple_roots,
            "positive_root_count": self.positive_roots.len(),
            "weyl_order": self.weyl_order.to_string(),
        })
    }
}

fn search_involution(ac: &[Vec<i64>], perm: &mut Vec<usize>, start: usize, best: &mut Option<(usize, Vec<usize>)>) {
    let m = ac.len();
    let Some(next) = (start..m).find(|&x| perm[x] == usize::MAX) else {
        let consistent = (0..m).all(|a| (0..m).all(|b| ac[perm[a]][perm[b]] == ac[a][b]));
        if consistent {
            let fixed = (0..m).filter(|&a| perm[a] == a).count();
            let better = match best {
                None => true,
                Some((f, p)) => fixed > *f || (fixed == *f && perm < p),
            };
            if better {
                *best = Some((fixed, perm.clone()));
            }
        }
        return;
    };
    for target in next..m {
        if perm[target] != usize::MAX && target != next {
            continue;
        }
        if ac[target][target] != ac[next][next] {
            continue;
        }
        perm[next] = target;
        perm[target] = next;
        let partial_ok = (0..m)
            .filter(|&a| perm[a] != usize::MAX)
            .all(|a| (0..m).filter(|&b| perm[b] != usize::MAX).all(|b| ac[perm[a]][perm[b]] == ac[a][b]));
        if partial_ok {
            search_involution(ac, perm, next + 1, best);
        }
        perm[next] = usize::MAX;
        perm[target] = usize::MAX;
    }
}

/// Every supported type with rank at most `max_rank`.
pub fn all_types(max_rank: usize) -> Vec<LieType> {
    let mut out = Vec::new();
    for (family, ranks) in [
        (Family::A, 1..=8),
        (Family::B, 3..=8),
        (Family::C, 2..=8),
        (Family::D, 4..=8),
        (Family::E, 6..=8),
        (Family::F, 4..=4),
        (Family::G, 2..=2),
    ] {
        for r in ranks.filter(|&r| r <= max_rank) {
            out.push(LieType { family, rank: r });
        }
    }
    out
}
