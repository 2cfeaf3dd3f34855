//! Frobenius symbols, Wright's map, and the Littlewood decomposition at t.
//!
//! The decomposition sends λ to a t-core plus a t-tuple of quotient
//! partitions with |λ| = |core| + t·Σ|quotient|. The quotient here is read
//! off the Frobenius symbol: top entries with residue j and bottom entries
//! with residue t−1−j form a two-rowed array whose image under Wright's map
//! is the j-th quotient. The core is computed on a t-runner abacus of
//! first-column hook lengths (beta numbers); with the bead count a multiple
//! of t the two descriptions produce identical quotients, which the tests
//! check exhaustively.

use crate::error::{Error, Result};
use crate::partitions::{undouble, Partition, StrictPartition};
use std::fmt;

/// Frobenius symbol: arm lengths λ_i − i over the Durfee diagonal on top,
/// leg lengths λ'_i − i below.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusSymbol {
    pub top: Vec<u32>,
    pub bottom: Vec<u32>,
}

/// A two-rowed array with strictly decreasing nonnegative rows of possibly
/// different lengths. Input shape for Wright's map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoRowedArray {
    pub top: Vec<u32>,
    pub bottom: Vec<u32>,
}

impl TwoRowedArray {
    pub fn new(top: Vec<u32>, bottom: Vec<u32>) -> Result<Self> {
        let strict = |v: &[u32]| v.windows(2).all(|w| w[0] > w[1]);
        if !strict(&top) || !strict(&bottom) {
            return Err(Error::MalformedArray(format!(
                "rows must strictly decrease: top {:?} bottom {:?}",
                top, bottom
            )));
        }
        Ok(TwoRowedArray { top, bottom })
    }
}

/// Littlewood decomposition of a partition at t.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientDecomposition {
    pub t: u32,
    pub core: Partition,
    pub quotient: Vec<Partition>,
}

impl QuotientDecomposition {
    /// |core| + t·Σ|quotient[i]|, which must equal the source size.
    pub fn total_size(&self) -> u64 {
        self.core.size()
            + self.t as u64 * self.quotient.iter().map(|q| q.size()).sum::<u64>()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "t": self.t,
            "core": self.core.to_json(),
            "quotient": self.quotient.iter().map(|q| q.to_json()).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for QuotientDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "core {} quotient [", self.core)?;
        for (i, q) in self.quotient.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", q)?;
        }
        write!(f, "]")
    }
}

/// Frobenius symbol of p: top_i = λ_i − i, bottom_i = λ'_i − i, i = 1..s.
pub fn frobenius(p: &Partition) -> FrobeniusSymbol {
    let s = p.durfee_side();
    let conj = p.conjugate();
    FrobeniusSymbol {
        top: (1..=s).map(|i| p.part(i) - i as u32).collect(),
        bottom: (1..=s).map(|i| conj.part(i) - i as u32).collect(),
    }
}

/// Rebuild the partition from its Frobenius symbol.
pub fn from_frobenius(f: &FrobeniusSymbol) -> Partition {
    assert_eq!(f.top.len(), f.bottom.len(), "rows of a Frobenius symbol match");
    let s = f.top.len();
    let mut parts: Vec<u32> = (0..s).map(|i| f.top[i] + i as u32 + 1).collect();
    // Rows below the Durfee square come from the bottom entries: column
    // lengths b_i + i below the diagonal, transposed.
    let col_lens: Vec<u32> = (0..s).map(|i| f.bottom[i] + i as u32 + 1).collect();
    let mut r = s as u32 + 1;
    loop {
        let c = col_lens.iter().filter(|&&v| v >= r).count() as u32;
        if c == 0 {
            break;
        }
        parts.push(c);
        r += 1;
    }
    Partition::new(parts).expect("Frobenius data yields a partition")
}

/// Wright's map: the two-rowed array (a_1..a_u; b_1..b_v) goes to the
/// partition with μ_k = a_k + k − (u−v) for k ≤ u followed by the conjugate
/// of (b_k − v + k)_{k=1..v}.
pub fn wright_map(a: &TwoRowedArray) -> Result<Partition> {
    let u = a.top.len() as i64;
    let v = a.bottom.len() as i64;
    let mut head: Vec<i64> = a
        .top
        .iter()
        .enumerate()
        .map(|(k, &ak)| ak as i64 + (k as i64 + 1) - (u - v))
        .collect();
    let tail_src: Vec<i64> = a
        .bottom
        .iter()
        .enumerate()
        .map(|(k, &bk)| bk as i64 - v + (k as i64 + 1))
        .collect();
    if tail_src.iter().any(|&x| x < 0) || head.iter().any(|&x| x < 0) {
        return Err(Error::MalformedArray(format!("negative entry from {:?}", a)));
    }
    // conjugate of the weakly decreasing tail_src
    let width = tail_src.first().copied().unwrap_or(0);
    let mut tail: Vec<i64> = (1..=width)
        .map(|j| tail_src.iter().filter(|&&x| x >= j).count() as i64)
        .collect();
    head.append(&mut tail);
    while head.last() == Some(&0) {
        head.pop();
    }
    if !head.windows(2).all(|w| w[0] >= w[1]) {
        return Err(Error::MalformedArray(format!("non-partition image from {:?}", a)));
    }
    Partition::new(head.into_iter().map(|x| x as u32).collect())
        .map_err(|e| Error::MalformedArray(e.to_string()))
}

/// Split the Frobenius entries by residue: top entries with a_i ≡ j (mod t)
/// and bottom entries with b_i ≡ t−1−j contribute their quotients to the
/// j-th two-rowed array.
pub fn residue_arrays(p: &Partition, t: u32) -> Vec<TwoRowedArray> {
    assert!(t >= 1);
    let f = frobenius(p);
    let mut tops: Vec<Vec<u32>> = vec![Vec::new(); t as usize];
    let mut bots: Vec<Vec<u32>> = vec![Vec::new(); t as usize];
    for &a in &f.top {
        tops[(a % t) as usize].push(a / t);
    }
    for &b in &f.bottom {
        bots[(t - 1 - b % t) as usize].push(b / t);
    }
    tops.into_iter()
        .zip(bots)
        .map(|(top, bottom)| TwoRowedArray { top, bottom })
        .collect()
}

/// Littlewood decomposition: quotients via Wright's map on the residue
/// arrays, core via the abacus.
pub fn littlewood_decompose(p: &Partition, t: u32) -> QuotientDecomposition {
    assert!(t >= 1);
    let quotient: Vec<Partition> = residue_arrays(p, t)
        .iter()
        .map(|arr| wright_map(arr).expect("Frobenius residue arrays are well formed"))
        .collect();
    QuotientDecomposition { t, core: t_core(p, t), quotient }
}

// Beta numbers of p padded to exactly `len` beads: {λ_i + len − i, i = 1..len}.
fn beta_set(p: &Partition, len: usize) -> Vec<u64> {
    debug_assert!(len >= p.len());
    (1..=len).map(|i| p.part(i) as u64 + (len - i) as u64).collect()
}

fn partition_from_beta(mut beta: Vec<u64>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let len = beta.len();
    let mut parts: Vec<u32> = Vec::new();
    for (i, b) in beta.into_iter().enumerate() {
        let part = b - (len - 1 - i) as u64;
        if part > 0 {
            parts.push(part as u32);
        }
    }
    Partition::new(parts).expect("beta set yields a partition")
}

/// The t-core: push every abacus bead down its runner.
pub fn t_core(p: &Partition, t: u32) -> Partition {
    assert!(t >= 1);
    let len = p.len().div_ceil(t as usize) * t as usize + t as usize;
    let beta = beta_set(p, len);
    let mut counts = vec![0u64; t as usize];
    for b in beta {
        counts[(b % t as u64) as usize] += 1;
    }
    let mut out = Vec::with_capacity(len);
    for (r, &k) in counts.iter().enumerate() {
        for m in 0..k {
            out.push(m * t as u64 + r as u64);
        }
    }
    partition_from_beta(out)
}

/// Inverse of [`littlewood_decompose`].
pub fn littlewood_compose(d: &QuotientDecomposition) -> Result<Partition> {
    let t = d.t as usize;
    assert!(t >= 1);
    if !d.core.is_t_core(d.t) {
        return Err(Error::CoreNotTCore(d.t));
    }
    assert_eq!(d.quotient.len(), t, "quotient tuple must have t entries");
    let max_q = d.quotient.iter().map(|q| q.len()).max().unwrap_or(0);
    // enough beads that every runner can hold its quotient
    let len = (d.core.len() + t * (max_q + 1)).div_ceil(t) * t;
    let beta = beta_set(&d.core, len);
    let mut counts = vec![0usize; t];
    for &b in &beta {
        counts[(b % t as u64) as usize] += 1;
    }
    // Runner r keeps its bead count; bead m_i = ν_i + (k_r − i) encodes the
    // i-th part of the r-th quotient.
    let mut out = Vec::with_capacity(len);
    for (r, &k) in counts.iter().enumerate() {
        let q = &d.quotient[r];
        debug_assert!(k >= q.len());
        for i in 1..=k {
            let m = q.part(i) as u64 + (k - i) as u64;
            out.push(m * t as u64 + r as u64);
        }
    }
    Ok(partition_from_beta(out))
}

/// Littlewood decomposition restricted to doubled distinct partitions
/// (Theorem DD1–DD4 territory). Errors unless p is doubled distinct.
pub fn dd_decompose(p: &Partition, t: u32) -> Result<QuotientDecomposition> {
    undouble(p)?;
    Ok(littlewood_decompose(p, t))
}

/// Check n̂_t(λλ) against its quotient-side expression:
/// n̂_1(ν_0) + ½Σ_{i=1}^{t−1} n_1(ν_i) for odd t, and
/// n̂_1(ν_0) + n̂_1(ν_{t/2}) + ½Σ_{i=1}^{t/2−1}(n_1(ν_i) + n_1(ν_{t−i})) for even t.
pub fn verify_shifted_quotient_formula(s: &StrictPartition, t: u32) -> bool {
    assert!(t >= 1);
    let ll = s.double_distinct();
    let lhs = 2 * ll.count_t_hooks_above_diagonal(t);
    let d = littlewood_decompose(&ll, t);
    let q = &d.quotient;
    // doubled to avoid halves: compare 2·n̂_t against the doubled right side
    let rhs = if t % 2 == 1 {
        2 * q[0].count_t_hooks_above_diagonal(1)
            + (1..t as usize).map(|i| q[i].count_t_hooks(1)).sum::<usize>()
    } else {
        let half = t as usize / 2;
        2 * q[0].count_t_hooks_above_diagonal(1)
            + 2 * q[half].count_t_hooks_above_diagonal(1)
            + (1..half)
                .map(|i| q[i].count_t_hooks(1) + q[t as usize - i].count_t_hooks(1))
                .sum::<usize>()
    };
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn frobenius_examples() {
        let f = frobenius(&p(&[6, 6, 4, 2, 2]));
        assert_eq!(f.top, vec![5, 4, 1]);
        assert_eq!(f.bottom, vec![4, 3, 0]);

        let f = frobenius(&Partition::empty());
        assert!(f.top.is_empty() && f.bottom.is_empty());

        let f = frobenius(&p(&[5, 4, 1]));
        assert_eq!(f.top, vec![4, 2]);
        assert_eq!(f.bottom, vec![2, 0]);
    }

    #[test]
    fn from_frobenius_examples() {
        let f = FrobeniusSymbol { top: vec![5, 4, 1], bottom: vec![4, 3, 0] };
        assert_eq!(from_frobenius(&f), p(&[6, 6, 4, 2, 2]));
        let f = FrobeniusSymbol { top: vec![], bottom: vec![] };
        assert_eq!(from_frobenius(&f), Partition::empty());
        let f = FrobeniusSymbol { top: vec![4, 2], bottom: vec![2, 0] };
        assert_eq!(from_frobenius(&f), p(&[5, 4, 1]));
    }

    #[test]
    fn wright_map_worked_example() {
        let w = |top: &[u32], bottom: &[u32]| {
            wright_map(&TwoRowedArray::new(top.to_vec(), bottom.to_vec()).unwrap()).unwrap()
        };
        assert_eq!(w(&[2, 1], &[1, 0]), p(&[3, 3]));
        assert_eq!(w(&[0], &[1, 0]), p(&[2]));
        assert_eq!(w(&[1], &[]), p(&[1]));
        assert_eq!(w(&[], &[]), Partition::empty());
    }

    #[test]
    fn decompose_worked_example() {
        // Frobenius (7,5,4,0 ; 5,4,2,1) at t = 3 has quotient ((2),(3,3),(1)).
        let f = FrobeniusSymbol { top: vec![7, 5, 4, 0], bottom: vec![5, 4, 2, 1] };
        let lam = from_frobenius(&f);
        let d = littlewood_decompose(&lam, 3);
        assert_eq!(d.quotient, vec![p(&[2]), p(&[3, 3]), p(&[1])]);
        assert_eq!(d.total_size(), lam.size());
    }

    #[test]
    fn decompose_empty() {
        let d = littlewood_decompose(&Partition::empty(), 4);
        assert!(d.core.is_empty());
        assert!(d.quotient.iter().all(|q| q.is_empty()));
    }

    #[test]
    fn size_identity() {
        let d = littlewood_decompose(&p(&[6, 6, 4, 2, 2]), 3);
        assert_eq!(d.total_size(), 20);
    }

    #[test]
    fn t_core_basics() {
        assert_eq!(t_core(&p(&[7, 4, 2, 2, 1]), 1), Partition::empty());
        let core = p(&[3, 1, 1]); // hooks 5,2,1,2,1 — a 3-core and a 4-core
        assert_eq!(t_core(&core, 3), core);
        assert_eq!(t_core(&core, 4), core);
    }

    #[test]
    fn compose_roundtrip_example() {
        let f = FrobeniusSymbol { top: vec![7, 5, 4, 0], bottom: vec![5, 4, 2, 1] };
        let lam = from_frobenius(&f);
        let d = littlewood_decompose(&lam, 3);
        assert_eq!(littlewood_compose(&d).unwrap(), lam);
    }

    #[test]
    fn compose_rejects_bad_core() {
        let d = QuotientDecomposition {
            t: 2,
            core: p(&[2]), // hook 2 is divisible by 2
            quotient: vec![Partition::empty(), Partition::empty()],
        };
        assert_eq!(littlewood_compose(&d), Err(Error::CoreNotTCore(2)));
    }

    #[test]
    fn dd_decompose_demands_doubled_distinct() {
        assert!(dd_decompose(&p(&[3, 2, 1]), 3).is_err());
        let d = dd_decompose(&p(&[6, 6, 4, 2, 2]), 3).unwrap();
        let corner_sum: usize = d.quotient.iter().map(|q| q.count_t_hooks(1)).sum();
        assert_eq!(corner_sum, 2); // DD4 with n_3(λλ) = 2
    }

    #[test]
    fn shifted_quotient_formula_examples() {
        let s = StrictPartition::new(vec![5, 4, 1]).unwrap();
        assert!(verify_shifted_quotient_formula(&s, 3));
        assert!(verify_shifted_quotient_formula(&StrictPartition::empty(), 4));
    }
}
