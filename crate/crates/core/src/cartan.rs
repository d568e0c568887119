//! Finite-type Cartan data and the weight lattice.
//!
//! Conventions: `a[i][j] = <alpha_i^vee, alpha_j>` (rows indexed by coroots),
//! Bourbaki node numbering, weights in fundamental-weight coordinates so
//! that `<alpha_i^vee, lambda>` is the `i`-th coordinate. All indices in the
//! Rust API are zero-based; text surfaces print them one-based.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A Dynkin type label with its rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CartanType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2,
}

impl CartanType {
    pub fn rank(self) -> usize {
        match self {
            CartanType::A(n) | CartanType::B(n) | CartanType::C(n) | CartanType::D(n) => n,
            CartanType::E(n) => n,
            CartanType::F4 => 4,
            CartanType::G2 => 2,
        }
    }

    pub fn is_type_a(self) -> bool {
        matches!(self, CartanType::A(_))
    }

    fn check(self) -> Result<Self> {
        let ok = match self {
            CartanType::A(n) => n >= 1,
            CartanType::B(n) | CartanType::C(n) => n >= 2,
            CartanType::D(n) => n >= 4,
            CartanType::E(n) => (6..=8).contains(&n),
            CartanType::F4 | CartanType::G2 => true,
        };
        if ok {
            Ok(self)
        } else {
            let family = self.to_string().chars().next().unwrap_or('?');
            Err(Error::UnsupportedRank {
                family,
                rank: self.rank(),
            })
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CartanType::A(n) => write!(f, "A{n}"),
            CartanType::B(n) => write!(f, "B{n}"),
            CartanType::C(n) => write!(f, "C{n}"),
            CartanType::D(n) => write!(f, "D{n}"),
            CartanType::E(n) => write!(f, "E{n}"),
            CartanType::F4 => write!(f, "F4"),
            CartanType::G2 => write!(f, "G2"),
        }
    }
}

impl FromStr for CartanType {
    type Err = Error;

    /// Parses labels such as `A2`, `g2`, `D4`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .ok_or_else(|| Error::UnknownType(s.to_string()))?
            .to_ascii_uppercase();
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::UnknownType(s.to_string()))?;
        let ty = match family {
            'A' => CartanType::A(rank),
            'B' => CartanType::B(rank),
            'C' => CartanType::C(rank),
            'D' => CartanType::D(rank),
            'E' => CartanType::E(rank),
            'F' if rank == 4 => CartanType::F4,
            'G' if rank == 2 => CartanType::G2,
            'F' | 'G' => return Err(Error::UnsupportedRank { family, rank }),
            _ => return Err(Error::UnknownType(s.to_string())),
        };
        ty.check()
    }
}

/// A weight in fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The fundamental weight `omega_i` (zero-based `i`).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Weight(v)
    }

    pub fn new(coords: impl Into<Vec<i64>>) -> Self {
        Weight(coords.into())
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|c| c * k).collect())
    }

    /// Parses a comma-separated coordinate list such as `1,0,2`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Err(Error::Parse("empty weight".into()));
        }
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad weight coordinate `{}`", t.trim())))
            })
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.0.len(), rhs.0.len());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.0.len(), rhs.0.len());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|c| -c).collect())
    }
}

/// Cartan matrix, symmetrizer and positive roots of a finite type.
#[derive(Debug)]
pub struct CartanData {
    ty: CartanType,
    matrix: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    positive_roots: Vec<Vec<i64>>,
    positive_root_weights: Vec<Weight>,
    positive_lookup: HashSet<Weight>,
}

impl PartialEq for CartanData {
    fn eq(&self, other: &Self) -> bool {
        self.ty == other.ty
    }
}

impl Eq for CartanData {}

impl CartanData {
    pub fn new(ty: CartanType) -> Result<Arc<Self>> {
        let ty = ty.check()?;
        let matrix = cartan_matrix(ty);
        let symmetrizer = symmetrizer(&matrix);
        let positive_roots = saturate_positive_roots(&matrix);
        let positive_root_weights: Vec<Weight> = positive_roots
            .iter()
            .map(|r| root_to_weight(&matrix, r))
            .collect();
        let positive_lookup = positive_root_weights.iter().cloned().collect();
        Ok(Arc::new(CartanData {
            ty,
            matrix,
            symmetrizer,
            positive_roots,
            positive_root_weights,
            positive_lookup,
        }))
    }

    pub fn from_label(label: &str) -> Result<Arc<Self>> {
        Self::new(label.parse()?)
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank()
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    /// Integers `d_i` with `d_i a_ij = d_j a_ji`, normalized to gcd 1.
    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    /// Positive roots in simple-root coordinates.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// Positive roots in fundamental-weight coordinates.
    pub fn positive_root_weights(&self) -> &[Weight] {
        &self.positive_root_weights
    }

    /// Whether a weight-coordinate vector is a positive root.
    pub fn is_positive_root(&self, v: &Weight) -> bool {
        self.positive_lookup.contains(v)
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < self.rank() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            })
        }
    }

    pub fn check_weight(&self, lam: &Weight) -> Result<()> {
        if lam.rank() == self.rank() {
            Ok(())
        } else {
            Err(Error::WeightLength {
                got: lam.rank(),
                expected: self.rank(),
            })
        }
    }

    pub fn check_dominant(&self, lam: &Weight) -> Result<()> {
        self.check_weight(lam)?;
        if lam.is_dominant() {
            Ok(())
        } else {
            Err(Error::NotDominant(lam.to_string()))
        }
    }

    /// `<alpha_i^vee, lambda>`.
    pub fn pairing(&self, i: usize, lam: &Weight) -> Result<i64> {
        self.check_index(i)?;
        self.check_weight(lam)?;
        Ok(lam.0[i])
    }

    /// `alpha_j` in fundamental-weight coordinates: column `j` of the Cartan matrix.
    pub fn simple_root(&self, j: usize) -> Result<Weight> {
        self.check_index(j)?;
        Ok(self.simple_root_unchecked(j))
    }

    pub(crate) fn simple_root_unchecked(&self, j: usize) -> Weight {
        Weight(self.matrix.iter().map(|row| row[j]).collect())
    }

    /// `s_i(lambda) = lambda - <alpha_i^vee, lambda> alpha_i`.
    pub fn reflect(&self, i: usize, lam: &Weight) -> Result<Weight> {
        let m = self.pairing(i, lam)?;
        let mut out = lam.clone();
        for (k, row) in self.matrix.iter().enumerate() {
            out.0[k] -= m * row[i];
        }
        Ok(out)
    }

    pub fn zero_weight(&self) -> Weight {
        Weight::zero(self.rank())
    }

    pub fn fundamental_weight(&self, i: usize) -> Result<Weight> {
        self.check_index(i)?;
        Ok(Weight::fundamental(self.rank(), i))
    }

    /// Half-sum of positive roots, `omega_1 + ... + omega_n`.
    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank()])
    }

    /// `(beta, lambda)` for the invariant form normalized by the symmetrizer,
    /// with `beta` in simple-root coordinates.
    pub(crate) fn root_weight_form(&self, beta: &[i64], lam: &Weight) -> i64 {
        beta.iter()
            .zip(&self.symmetrizer)
            .zip(&lam.0)
            .map(|((c, d), l)| c * d * l)
            .sum()
    }
}

fn cartan_matrix(ty: CartanType) -> Vec<Vec<i64>> {
    let n = ty.rank();
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    match ty {
        CartanType::A(n) => {
            for i in 0..n.saturating_sub(1) {
                link(i, i + 1, -1, -1);
            }
        }
        CartanType::B(n) => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            // alpha_n short
            link(n - 2, n - 1, -1, -2);
        }
        CartanType::C(n) => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            // alpha_n long
            link(n - 2, n - 1, -2, -1);
        }
        CartanType::D(n) => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            link(n - 3, n - 1, -1, -1);
        }
        CartanType::E(n) => {
            // Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4.
            link(0, 2, -1, -1);
            link(1, 3, -1, -1);
            for i in 2..n - 1 {
                link(i, i + 1, -1, -1);
            }
        }
        CartanType::F4 => {
            link(0, 1, -1, -1);
            link(1, 2, -1, -2);
            link(2, 3, -1, -1);
        }
        CartanType::G2 => link(0, 1, -3, -1),
    }
    a
}

fn symmetrizer(a: &[Vec<i64>]) -> Vec<i64> {
    // Ratios along edges are 1, 2 or 3; starting at 6 keeps everything integral.
    let n = a.len();
    let mut d = vec![0i64; n];
    d[0] = 6;
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for j in 0..n {
            if j != i && a[i][j] != 0 && d[j] == 0 {
                d[j] = d[i] * a[i][j] / a[j][i];
                queue.push_back(j);
            }
        }
    }
    let g = d.iter().fold(0, |g, &x| num_integer::gcd(g, x));
    d.iter().map(|x| x / g).collect()
}

fn root_to_weight(a: &[Vec<i64>], root: &[i64]) -> Weight {
    Weight(
        a.iter()
            .map(|row| row.iter().zip(root).map(|(x, c)| x * c).sum())
            .collect(),
    )
}

/// All roots reachable from the simple roots under simple reflections,
/// filtered to nonnegative simple-root coordinates, sorted by height.
fn saturate_positive_roots(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue = VecDeque::new();
    for j in 0..n {
        let mut e = vec![0; n];
        e[j] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(beta) = queue.pop_front() {
        for (i, row) in a.iter().enumerate() {
            let m: i64 = row.iter().zip(&beta).map(|(x, c)| x * c).sum();
            if m == 0 {
                continue;
            }
            let mut image = beta.clone();
            image[i] -= m;
            if seen.insert(image.clone()) {
                queue.push_back(image);
            }
        }
    }
    let mut pos: Vec<Vec<i64>> = seen
        .into_iter()
        .filter(|r| r.iter().all(|&c| c >= 0))
        .collect();
    pos.sort_by(|x, y| {
        let hx: i64 = x.iter().sum();
        let hy: i64 = y.iter().sum();
        hx.cmp(&hy).then_with(|| y.cmp(x))
    });
    pos
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> Weight {
        Weight::new(v.to_vec())
    }

    #[test]
    fn parses_labels_case_insensitively() {
        assert_eq!("a2".parse::<CartanType>().unwrap(), CartanType::A(2));
        assert_eq!("G2".parse::<CartanType>().unwrap(), CartanType::G2);
        assert_eq!("D4".parse::<CartanType>().unwrap(), CartanType::D(4));
        assert!("D3".parse::<CartanType>().is_err());
        assert!("F5".parse::<CartanType>().is_err());
        assert!("X2".parse::<CartanType>().is_err());
        assert!("A".parse::<CartanType>().is_err());
        assert_eq!(CartanType::E(7).to_string(), "E7");
    }

    #[test]
    fn pairing_reads_coordinates() {
        let a2 = CartanData::from_label("A2").unwrap();
        assert_eq!(a2.pairing(0, &w(&[1, 1])).unwrap(), 1);
        assert_eq!(a2.pairing(1, &w(&[2, 0])).unwrap(), 0);
        let g2 = CartanData::from_label("G2").unwrap();
        assert_eq!(g2.pairing(0, &w(&[3, 0])).unwrap(), 3);
        assert!(matches!(
            a2.pairing(2, &w(&[1, 1])),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(a2.pairing(0, &w(&[1])).is_err());
    }

    #[test]
    fn simple_roots_are_cartan_columns() {
        let a2 = CartanData::from_label("A2").unwrap();
        assert_eq!(a2.simple_root(0).unwrap(), w(&[2, -1]));
        let a1 = CartanData::from_label("A1").unwrap();
        assert_eq!(a1.simple_root(0).unwrap(), w(&[2]));
        let g2 = CartanData::from_label("G2").unwrap();
        assert_eq!(g2.matrix()[0][1], -3);
        assert_eq!(g2.matrix()[1][0], -1);
        assert_eq!(g2.simple_root(1).unwrap(), w(&[-3, 2]));
        assert_eq!(g2.positive_roots().len(), 6);
        assert!(a2.simple_root(5).is_err());
    }

    #[test]
    fn g2_transposed_convention_gives_same_root_count() {
        // The transposed Cartan matrix is the dual root system; both have six
        // positive roots, so the count does not pin the convention. The long
        // root is alpha_2 under ours: d_2 = 3 d_1.
        let g2 = CartanData::from_label("G2").unwrap();
        let transposed = vec![vec![2, -1], vec![-3, 2]];
        assert_eq!(saturate_positive_roots(&transposed).len(), 6);
        assert_eq!(g2.symmetrizer(), &[1, 3]);
        let b3 = CartanData::from_label("B3").unwrap();
        assert_eq!(b3.symmetrizer(), &[2, 2, 1]);
        let c3 = CartanData::from_label("C3").unwrap();
        assert_eq!(c3.symmetrizer(), &[1, 1, 2]);
    }

    #[test]
    fn reflections_on_weights() {
        let a1 = CartanData::from_label("A1").unwrap();
        assert_eq!(a1.reflect(0, &w(&[1])).unwrap(), w(&[-1]));
        let a2 = CartanData::from_label("A2").unwrap();
        assert_eq!(a2.reflect(0, &w(&[1, 1])).unwrap(), w(&[-1, 2]));
        assert_eq!(a2.reflect(1, &w(&[1, 0])).unwrap(), w(&[1, 0]));
    }

    #[test]
    fn cartan_axioms_and_root_counts() {
        let cases: Vec<(&str, usize)> = vec![
            ("A1", 1),
            ("A2", 3),
            ("A3", 6),
            ("A4", 10),
            ("B2", 4),
            ("B3", 9),
            ("B4", 16),
            ("C2", 4),
            ("C3", 9),
            ("C4", 16),
            ("D4", 12),
            ("G2", 6),
            ("F4", 24),
            ("E6", 36),
            ("E7", 63),
            ("E8", 120),
        ];
        for (label, count) in cases {
            let c = CartanData::from_label(label).unwrap();
            let n = c.rank();
            for i in 0..n {
                assert_eq!(c.matrix()[i][i], 2, "{label}");
                assert_eq!(c.pairing(i, &c.simple_root(i).unwrap()).unwrap(), 2);
                for j in 0..n {
                    if i != j {
                        assert!(c.matrix()[i][j] <= 0);
                        assert_eq!(c.matrix()[i][j] == 0, c.matrix()[j][i] == 0);
                        let d = c.symmetrizer();
                        assert_eq!(d[i] * c.matrix()[i][j], d[j] * c.matrix()[j][i]);
                    }
                }
            }
            assert_eq!(c.positive_roots().len(), count, "{label}");
        }
    }

    #[test]
    fn weight_parsing() {
        assert_eq!(Weight::parse("1,0,2").unwrap(), w(&[1, 0, 2]));
        assert_eq!(Weight::parse(" 3 ").unwrap(), w(&[3]));
        assert_eq!(Weight::parse("(-1,2)").unwrap(), w(&[-1, 2]));
        assert!(Weight::parse("1,x").is_err());
        assert!(Weight::parse("").is_err());
        assert_eq!(w(&[-1, 2]).to_string(), "(-1,2)");
    }

    proptest::proptest! {
        #[test]
        fn reflection_is_an_involution(
            label in proptest::sample::select(vec!["A3", "B3", "C3", "D4", "G2", "F4"]),
            coords in proptest::collection::vec(-20i64..20, 4),
            i in 0usize..4,
        ) {
            let c = CartanData::from_label(label).unwrap();
            let n = c.rank();
            let lam = Weight::new(coords[..n].to_vec());
            let i = i % n;
            let once = c.reflect(i, &lam).unwrap();
            proptest::prop_assert_eq!(c.reflect(i, &once).unwrap(), lam);
        }
    }
}
