//! Partitions, hook lengths, and the doubled distinct construction.
//!
//! A partition is a weakly decreasing sequence of positive integers; the
//! empty sequence is the partition of 0. Strict partitions have pairwise
//! distinct parts. Doubling a strict partition λ glues the shifted Young
//! diagram of λ to its transpose, producing the doubled distinct partition
//! λλ with (λλ)_i = λ_i + i for i ≤ ℓ(λ).

use crate::error::{Error, Result};
use std::fmt;

/// An integer partition: weakly decreasing positive parts, cached size.
///
/// Immutable by construction; every statistic below is a pure function.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
    size: u64,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing: {:?}",
                parts
            )));
        }
        let size = parts.iter().map(|&p| p as u64).sum();
        Ok(Partition { parts, size })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new(), size: 0 }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part at 1-indexed row `i`; 0 beyond the last row.
    pub fn part(&self, i: usize) -> u32 {
        if i >= 1 && i <= self.parts.len() {
            self.parts[i - 1]
        } else {
            0
        }
    }

    /// Reflect the Young diagram about the main diagonal.
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let width = self.parts[0] as usize;
        let mut cols = vec![0u32; width];
        for (j, c) in cols.iter_mut().enumerate() {
            *c = self.parts.iter().take_while(|&&p| p as usize >= j + 1).count() as u32;
        }
        Partition { size: self.size, parts: cols }
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// Hook lengths h(i,j) = λ_i + λ'_j − i − j + 1, laid out like the diagram.
    pub fn hook_lengths(&self) -> Vec<Vec<u32>> {
        let conj = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &row)| {
                (0..row as usize)
                    .map(|j| row + conj.parts[j] - (i as u32 + 1) - (j as u32 + 1) + 1)
                    .collect()
            })
            .collect()
    }

    /// Number of t-hooks, n_t(λ).
    pub fn count_t_hooks(&self, t: u32) -> usize {
        assert!(t >= 1, "t must be positive");
        self.hook_lengths().iter().flatten().filter(|&&h| h == t).count()
    }

    /// Number of t-hooks strictly above the main diagonal, n̂_t(λ).
    pub fn count_t_hooks_above_diagonal(&self, t: u32) -> usize {
        assert!(t >= 1, "t must be positive");
        self.hook_lengths()
            .iter()
            .enumerate()
            .map(|(i, row)| row.iter().skip(i + 1).filter(|&&h| h == t).count())
            .sum()
    }

    /// True if no hook length is divisible by t.
    pub fn is_t_core(&self, t: u32) -> bool {
        assert!(t >= 1);
        self.hook_lengths().iter().flatten().all(|&h| h % t != 0)
    }

    /// Side of the largest square fitting in the diagram.
    pub fn durfee_side(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|(i, &p)| p as usize >= i + 1)
            .count()
    }

    /// Number of distinct part sizes. Equals n_1(λ).
    pub fn distinct_part_count(&self) -> usize {
        let mut count = 0;
        let mut prev = 0;
        for &p in &self.parts {
            if p != prev {
                count += 1;
                prev = p;
            }
        }
        count
    }

    /// Membership test for a partition class.
    pub fn classify(&self, class: &PartitionClass) -> bool {
        match class {
            PartitionClass::All => true,
            PartitionClass::Strict => self.parts.windows(2).all(|w| w[0] > w[1]),
            PartitionClass::DoubledDistinct => undouble(self).is_ok(),
            PartitionClass::SelfConjugate => self.is_self_conjugate(),
            PartitionClass::TCore(t) => self.is_t_core(*t),
            PartitionClass::DdTCore(t) => undouble(self).is_ok() && self.is_t_core(*t),
        }
    }

    /// Serialize as a JSON array of parts; ∅ is `[]`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.parts.iter().map(|&p| serde_json::Value::from(p)).collect(),
        )
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{}", self)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

/// A partition into distinct parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrictPartition {
    parts: Vec<u32>,
}

impl StrictPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        if !parts.windows(2).all(|w| w[0] > w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be strictly decreasing: {:?}",
                parts
            )));
        }
        Ok(StrictPartition { parts })
    }

    pub fn empty() -> Self {
        StrictPartition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn contains_part(&self, t: u32) -> bool {
        self.parts.contains(&t)
    }

    pub fn to_partition(&self) -> Partition {
        Partition::new(self.parts.clone()).expect("strict parts are weakly decreasing")
    }

    /// The doubled distinct partition λλ: rows λ_i + i for i ≤ ℓ, then the
    /// column counts of the transposed shifted diagram.
    pub fn double_distinct(&self) -> Partition {
        let l = self.parts.len();
        let mut rows: Vec<u32> =
            self.parts.iter().enumerate().map(|(i, &p)| p + (i as u32 + 1)).collect();
        let mut r = l as u32 + 1;
        loop {
            let c = rows[..l].iter().filter(|&&v| v > r).count() as u32;
            if c == 0 {
                break;
            }
            rows.push(c);
            r += 1;
        }
        let size = rows.iter().map(|&p| p as u64).sum();
        Partition { parts: rows, size }
    }

    /// Shifted hook lengths; entry (i,j) equals the hook of box (i, j+1)
    /// in the Young diagram of λλ (rows and columns 1-indexed, row i of
    /// the shifted diagram occupying columns i..i+λ_i−1).
    pub fn shifted_hook_lengths(&self) -> Vec<Vec<u32>> {
        let hooks = self.double_distinct().hook_lengths();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| (i..i + p as usize).map(|j| hooks[i][j + 1]).collect())
            .collect()
    }

    /// Number of t-shifted hooks, s_t(λ) = n̂_t(λλ).
    pub fn count_t_shifted_hooks(&self, t: u32) -> usize {
        assert!(t >= 1);
        self.shifted_hook_lengths().iter().flatten().filter(|&&h| h == t).count()
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_partition().fmt(f)
    }
}

impl fmt::Debug for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StrictPartition{}", self)
    }
}

/// Inverse of [`StrictPartition::double_distinct`]. Validates the conjugate
/// profile λλ'_i = λλ_i − 1 (i ≤ ℓ), = ℓ (i = ℓ+1), = λλ_{i−1} (i > ℓ+1),
/// which characterizes doubled distinct partitions.
pub fn undouble(p: &Partition) -> Result<StrictPartition> {
    if p.is_empty() {
        return Ok(StrictPartition::empty());
    }
    let conj = p.conjugate();
    // ℓ = durfee side: the strict partition has one part per diagonal box.
    let l = p.durfee_side();
    let ok = (1..=conj.len()).all(|i| {
        let v = conj.part(i);
        if i <= l {
            p.part(i) >= 1 && v == p.part(i) - 1
        } else if i == l + 1 {
            v == l as u32
        } else {
            v == p.part(i - 1)
        }
    }) && conj.len() >= l;
    if !ok {
        return Err(Error::NotDoubledDistinct(p.to_string()));
    }
    let parts: Vec<u32> = (1..=l).map(|i| p.part(i) - i as u32).collect();
    let s = StrictPartition::new(parts)
        .map_err(|_| Error::NotDoubledDistinct(p.to_string()))?;
    if s.double_distinct() != *p {
        return Err(Error::NotDoubledDistinct(p.to_string()));
    }
    Ok(s)
}

/// The partition families of interest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PartitionClass {
    All,
    Strict,
    DoubledDistinct,
    SelfConjugate,
    TCore(u32),
    DdTCore(u32),
}

impl PartitionClass {
    pub fn label(&self) -> String {
        match self {
            PartitionClass::All => "all".into(),
            PartitionClass::Strict => "strict".into(),
            PartitionClass::DoubledDistinct => "dd".into(),
            PartitionClass::SelfConjugate => "sc".into(),
            PartitionClass::TCore(t) => format!("core{}", t),
            PartitionClass::DdTCore(t) => format!("ddcore{}", t),
        }
    }
}

impl fmt::Display for PartitionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn sp(parts: &[u32]) -> StrictPartition {
        StrictPartition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[5, 4, 1]).conjugate(), p(&[3, 2, 2, 2, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[3, 2, 1]).conjugate(), p(&[3, 2, 1]));
    }

    #[test]
    fn hook_lengths_examples() {
        assert_eq!(
            p(&[5, 4, 1]).hook_lengths(),
            vec![vec![7, 5, 4, 3, 1], vec![5, 3, 2, 1], vec![1]]
        );
        assert_eq!(
            p(&[6, 6, 4, 2, 2]).hook_lengths(),
            vec![
                vec![10, 9, 6, 5, 3, 2],
                vec![9, 8, 5, 4, 2, 1],
                vec![6, 5, 2, 1],
                vec![3, 2],
                vec![2, 1]
            ]
        );
        assert_eq!(p(&[1]).hook_lengths(), vec![vec![1]]);
    }

    #[test]
    fn t_hook_counts() {
        assert_eq!(p(&[5, 4, 1]).count_t_hooks(3), 2);
        assert_eq!(Partition::empty().count_t_hooks(4), 0);
        assert_eq!(p(&[6, 6, 4, 2, 2]).count_t_hooks(3), 2);
    }

    #[test]
    fn t_hooks_above_diagonal() {
        assert_eq!(p(&[6, 6, 4, 2, 2]).count_t_hooks_above_diagonal(3), 1);
        assert_eq!(Partition::empty().count_t_hooks_above_diagonal(2), 0);
        assert_eq!(p(&[6, 6, 4, 2, 2]).count_t_hooks_above_diagonal(1), 2);
    }

    #[test]
    fn double_distinct_examples() {
        assert_eq!(sp(&[5, 4, 1]).double_distinct(), p(&[6, 6, 4, 2, 2]));
        assert_eq!(StrictPartition::empty().double_distinct(), Partition::empty());
        assert_eq!(sp(&[1]).double_distinct(), p(&[2]));
    }

    #[test]
    fn undouble_examples() {
        assert_eq!(undouble(&p(&[6, 6, 4, 2, 2])).unwrap(), sp(&[5, 4, 1]));
        assert_eq!(undouble(&p(&[2])).unwrap(), sp(&[1]));
        assert!(matches!(
            undouble(&p(&[3, 2, 1])),
            Err(Error::NotDoubledDistinct(_))
        ));
    }

    #[test]
    fn shifted_hooks_examples() {
        assert_eq!(
            sp(&[5, 4, 1]).shifted_hook_lengths(),
            vec![vec![9, 6, 5, 3, 2], vec![5, 4, 2, 1], vec![1]]
        );
        assert_eq!(sp(&[1]).shifted_hook_lengths(), vec![vec![1]]);
        assert_eq!(sp(&[2, 1]).shifted_hook_lengths(), vec![vec![3, 2], vec![1]]);
    }

    #[test]
    fn shifted_hook_counts() {
        assert_eq!(sp(&[5, 4, 1]).count_t_shifted_hooks(3), 1);
        assert_eq!(sp(&[5, 4, 1]).count_t_shifted_hooks(10), 0);
        assert_eq!(sp(&[5, 4, 1]).count_t_shifted_hooks(2), 2);
    }

    #[test]
    fn durfee_examples() {
        assert_eq!(p(&[6, 6, 4, 2, 2]).durfee_side(), 3);
        assert_eq!(Partition::empty().durfee_side(), 0);
        assert_eq!(p(&[5, 4, 1]).durfee_side(), 2);
    }

    #[test]
    fn classify_examples() {
        assert!(!p(&[3, 2, 2, 2, 1]).classify(&PartitionClass::SelfConjugate));
        assert!(p(&[6, 6, 4, 2, 2]).classify(&PartitionClass::DoubledDistinct));
        assert!(Partition::empty().classify(&PartitionClass::TCore(5)));
        assert!(p(&[4, 3, 2, 1]).classify(&PartitionClass::SelfConjugate));
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(Partition::new(vec![2, 4, 1]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(StrictPartition::new(vec![3, 3]).is_err());
    }
}
