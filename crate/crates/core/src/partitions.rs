//! Integer partitions as cycle types of symmetric-group conjugacy classes.

use std::fmt;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use crate::{Error, Result};

/// A partition of `n`: positive parts in weakly decreasing order.
///
/// Read as the cycle type of a permutation in `S_n`, it labels a conjugacy
/// class; read as block sizes it labels a standard Levi subgroup of `GL(n)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates `parts` as a partition. Parts must be positive and weakly
    /// decreasing; an empty list is rejected since every `n` here is positive.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::domain("a partition needs at least one part"));
        }
        if parts.contains(&0) {
            return Err(Error::domain(format!(
                "partition {parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::domain(format!(
                "partition {parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts `parts` into decreasing order first, so any multiset of positive
    /// integers is accepted.
    pub fn from_multiset(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    /// The partition `[n]`: a single `n`-cycle.
    pub fn single(n: usize) -> Result<Self> {
        Self::new(vec![n])
    }

    /// The partition `[1, ..., 1]` of `n`: the identity class.
    pub fn ones(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("n must be positive"));
        }
        Ok(Partition { parts: vec![1; n] })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts (cycles).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Distinct part sizes with their multiplicities, part size decreasing.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((size, mult)) if *size == p => *mult += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// True for the all-ones partition.
    pub fn is_identity_class(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Partition").field(&self.parts).finish()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

/// All partitions of `n` in reverse-lexicographic order: `[n]` first,
/// `[1, ..., 1]` last.
pub fn enumerate_partitions(n: usize) -> Result<Vec<Partition>> {
    if n == 0 {
        return Err(Error::domain("cannot enumerate partitions of 0"));
    }
    let mut out = Vec::new();
    let mut current = vec![n];
    loop {
        out.push(Partition {
            parts: current.clone(),
        });
        // Rightmost part larger than 1; everything after it is a run of 1s.
        let Some(pivot) = current.iter().rposition(|&p| p > 1) else {
            break;
        };
        let ones = current.len() - pivot - 1;
        let new_part = current[pivot] - 1;
        let mut remaining = ones + 1;
        current.truncate(pivot);
        current.push(new_part);
        while remaining > 0 {
            let take = remaining.min(new_part);
            current.push(take);
            remaining -= take;
        }
    }
    Ok(out)
}

/// One wreath factor `Z/n_i ≀ S_{r_i}` of a centralizer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct WreathFactor {
    pub cycle_length: usize,
    pub multiplicity: usize,
}

impl WreathFactor {
    /// `n_i^{r_i} · r_i!`
    pub fn order(&self) -> BigUint {
        BigUint::from(self.cycle_length).pow(self.multiplicity as u32)
            * factorial(self.multiplicity)
    }
}

/// The centralizer of a permutation of given cycle type, as a product of
/// wreath products `Π (Z/n_i ≀ S_{r_i})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralizerStructure {
    /// Distinct cycle lengths in decreasing order.
    pub factors: Vec<WreathFactor>,
    pub order: BigUint,
}

impl CentralizerStructure {
    /// Rebuilds the cycle type from the factors.
    pub fn cycle_type(&self) -> Result<Partition> {
        let parts = self
            .factors
            .iter()
            .flat_map(|f| std::iter::repeat_n(f.cycle_length, f.multiplicity))
            .collect();
        Partition::new(parts)
    }
}

pub fn centralizer_structure(lambda: &Partition) -> CentralizerStructure {
    let factors: Vec<WreathFactor> = lambda
        .multiplicities()
        .into_iter()
        .map(|(cycle_length, multiplicity)| WreathFactor {
            cycle_length,
            multiplicity,
        })
        .collect();
    let order = factors
        .iter()
        .fold(BigUint::from(1u32), |acc, f| acc * f.order());
    CentralizerStructure { factors, order }
}

/// Size of the conjugacy class of cycle type `lambda`: `n! / |Z(γ)|`.
pub fn class_size(lambda: &Partition) -> BigUint {
    factorial(lambda.n()) / centralizer_structure(lambda).order
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::from(1u32), |acc, k| acc * BigUint::from(k))
}

/// `binomial(n, k)`, exact.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    // Each prefix product is itself a binomial coefficient, so the division is exact.
    (0..k).fold(BigUint::from(1u32), |acc, i| {
        acc * BigUint::from(n - i) / BigUint::from(i + 1)
    })
}

/// Number of partitions of `n`, via Euler's pentagonal recurrence.
pub fn partition_count(n: usize) -> BigUint {
    let mut p = vec![BigUint::from(0u32); n + 1];
    p[0] = BigUint::from(1u32);
    for i in 1..=n {
        let mut plus = BigUint::from(0u32);
        let mut minus = BigUint::from(0u32);
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > i {
                break;
            }
            let sign_positive = k % 2 == 1;
            for g in [g1, g1 + k] {
                if g <= i {
                    if sign_positive {
                        plus += &p[i - g];
                    } else {
                        minus += &p[i - g];
                    }
                }
            }
        }
        p[i] = plus - minus;
    }
    p.swap_remove(n)
}
