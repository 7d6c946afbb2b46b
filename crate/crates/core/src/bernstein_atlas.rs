//! Shapes of points of the Bernstein spectrum of `GL(n)`.
//!
//! A point `s` is a vector of supercuspidals of smaller general linear groups,
//! up to unramified twist and permutation. Grouping equal entries gives
//! pairwise distinct `σ_1, …, σ_r`, with `σ_j` a supercuspidal of `GL(m_j)`
//! repeated `e_j` times. Only the `(m_j, e_j)` data and the distinctness of
//! the `σ_j` are modelled; the labels are opaque.
//!
//! A shape stands for a whole family of points: every choice of pairwise
//! distinct supercuspidals with the given block sizes. [`enumerate_shapes`]
//! lists shapes, never points.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::symbolic_eq::{eq_of_sym_product, EqDecomposition};
use crate::{Error, Result};

/// An opaque supercuspidal label.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CuspidalLabel(pub String);

impl fmt::Display for CuspidalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ShapeEntry {
    pub label: CuspidalLabel,
    /// `m`: the cuspidal lives on `GL(m)`.
    pub block_size: usize,
    /// `e`: how many times it is repeated.
    pub exponent: usize,
}

impl ShapeEntry {
    pub fn new(label: impl Into<String>, block_size: usize, exponent: usize) -> Self {
        ShapeEntry {
            label: CuspidalLabel(label.into()),
            block_size,
            exponent,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BernsteinShape {
    entries: Vec<ShapeEntry>,
    n: usize,
}

impl BernsteinShape {
    /// Entries in canonical order: block size descending, then exponent
    /// descending, then label.
    pub fn entries(&self) -> &[ShapeEntry] {
        &self.entries
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `(m, e)` pairs in canonical order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.entries
            .iter()
            .map(|e| (e.block_size, e.exponent))
            .collect()
    }
}

impl fmt::Display for BernsteinShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{}:{}", e.block_size, e.exponent)?;
        }
        Ok(())
    }
}

pub fn make_shape(mut entries: Vec<ShapeEntry>) -> Result<BernsteinShape> {
    if entries.is_empty() {
        return Err(Error::domain("a Bernstein shape needs at least one entry"));
    }
    if let Some(e) = entries
        .iter()
        .find(|e| e.block_size == 0 || e.exponent == 0)
    {
        return Err(Error::domain(format!(
            "entry {} has block size {} and exponent {}; both must be positive",
            e.label, e.block_size, e.exponent
        )));
    }
    let mut labels = BTreeSet::new();
    for e in &entries {
        if !labels.insert(&e.label) {
            return Err(Error::domain(format!(
                "cuspidal label {} appears twice; equal cuspidals must be merged into one exponent",
                e.label
            )));
        }
    }
    let n = entries
        .iter()
        .try_fold(0usize, |acc, e| {
            e.block_size
                .checked_mul(e.exponent)
                .and_then(|v| acc.checked_add(v))
        })
        .ok_or_else(|| Error::domain("shape size overflows"))?;
    entries.sort_by(|a, b| {
        b.block_size
            .cmp(&a.block_size)
            .then(b.exponent.cmp(&a.exponent))
            .then(a.label.cmp(&b.label))
    });
    Ok(BernsteinShape { entries, n })
}

/// Builds a shape from `(m, e)` pairs with labels `s1, s2, …` assigned in
/// canonical order.
pub fn shape_from_pairs(pairs: &[(usize, usize)]) -> Result<BernsteinShape> {
    let mut sorted = pairs.to_vec();
    sorted.sort_by(|a, b| b.cmp(a));
    make_shape(
        sorted
            .iter()
            .enumerate()
            .map(|(i, &(m, e))| ShapeEntry::new(format!("s{}", i + 1), m, e))
            .collect(),
    )
}

/// Parses `"m:e;m:e;…"`.
impl FromStr for BernsteinShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let pairs = s
            .split(';')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|tok| {
                let (m, e) = tok.split_once(':').ok_or_else(|| {
                    Error::domain(format!("shape entry {tok:?} is not of the form m:e"))
                })?;
                let parse = |v: &str| {
                    v.trim().parse::<usize>().map_err(|_| {
                        Error::domain(format!(
                            "{v:?} in shape entry {tok:?} is not a positive integer"
                        ))
                    })
                };
                Ok((parse(m)?, parse(e)?))
            })
            .collect::<Result<Vec<_>>>()?;
        shape_from_pairs(&pairs)
    }
}

/// `exponents`, `d(s) = Σ e_j` and the factors of `W(s) = Π S_{e_j}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShapeInvariants {
    /// Decreasing.
    pub exponents: Vec<usize>,
    pub d: usize,
    pub weyl_factors: Vec<usize>,
}

pub fn invariants(s: &BernsteinShape) -> ShapeInvariants {
    let mut exponents: Vec<usize> = s.entries.iter().map(|e| e.exponent).collect();
    exponents.sort_unstable_by(|a, b| b.cmp(a));
    ShapeInvariants {
        d: exponents.iter().sum(),
        weyl_factors: exponents.clone(),
        exponents,
    }
}

/// Two points give Morita equivalent summands exactly when they have the same
/// exponents.
pub fn morita_equivalent(s1: &BernsteinShape, s2: &BernsteinShape) -> bool {
    invariants(s1).exponents == invariants(s2).exponents
}

/// The extended quotient `T^{d(s)} // W(s)`.
pub fn tempered_decomposition(s: &BernsteinShape) -> Result<EqDecomposition> {
    eq_of_sym_product(&invariants(s).exponents)
}

/// All shapes with `Σ m·e = n`: fewer entries first, then by canonical entry
/// list in decreasing lexicographic order.
pub fn enumerate_shapes(n: usize) -> Result<Vec<BernsteinShape>> {
    if n == 0 {
        return Err(Error::domain("n must be positive"));
    }
    // All (m, e) with m·e ≤ n, in decreasing order.
    let mut kinds: Vec<(usize, usize)> = Vec::new();
    for m in (1..=n).rev() {
        for e in (1..=n / m).rev() {
            kinds.push((m, e));
        }
    }
    // Multisets as non-increasing sequences over `kinds`.
    fn go(
        kinds: &[(usize, usize)],
        start: usize,
        remaining: usize,
        current: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        for (i, &(m, e)) in kinds.iter().enumerate().skip(start) {
            if m * e <= remaining {
                current.push((m, e));
                go(kinds, i, remaining - m * e, current, out);
                current.pop();
            }
        }
    }
    let mut multisets = Vec::new();
    go(&kinds, 0, n, &mut Vec::new(), &mut multisets);
    multisets.sort_by(|a, b| a.len().cmp(&b.len()).then(b.cmp(a)));
    multisets.iter().map(|p| shape_from_pairs(p)).collect()
}

/// Groups `shapes` into Morita classes by exhaustive pairwise comparison.
/// Classes are listed by first member; members keep input order.
pub fn morita_classes(shapes: &[BernsteinShape]) -> Vec<Vec<usize>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    'next: for (i, s) in shapes.iter().enumerate() {
        for class in classes.iter_mut() {
            if morita_equivalent(&shapes[class[0]], s) {
                class.push(i);
                continue 'next;
            }
        }
        classes.push(vec![i]);
    }
    classes
}

/// One shape of the atlas together with its tempered decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtlasEntry {
    pub tag: String,
    pub shape: BernsteinShape,
    pub decomposition: EqDecomposition,
}

/// The disjoint union over shapes of `T^{d(s)} // W(s)`, with shape tags.
pub fn tempered_atlas(n: usize) -> Result<Vec<AtlasEntry>> {
    enumerate_shapes(n)?
        .into_iter()
        .enumerate()
        .map(|(i, shape)| {
            Ok(AtlasEntry {
                tag: format!("shape{i}"),
                decomposition: tempered_decomposition(&shape)?,
                shape,
            })
        })
        .collect()
}

// {"n":5,"entries":[{"m":2,"e":2},{"m":1,"e":1}],"exponents":[2,1],"d":3,"weyl":[2,1]}
impl Serialize for BernsteinShape {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            m: usize,
            e: usize,
        }
        let inv = invariants(self);
        let entries: Vec<Entry> = self
            .entries
            .iter()
            .map(|e| Entry {
                m: e.block_size,
                e: e.exponent,
            })
            .collect();
        let mut s = serializer.serialize_struct("BernsteinShape", 5)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("entries", &entries)?;
        s.serialize_field("exponents", &inv.exponents)?;
        s.serialize_field("d", &inv.d)?;
        s.serialize_field("weyl", &inv.weyl_factors)?;
        s.end()
    }
}

impl Serialize for AtlasEntry {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("AtlasEntry", 3)?;
        s.serialize_field("tag", &self.tag)?;
        s.serialize_field("shape", &self.shape)?;
        s.serialize_field("decomposition", &self.decomposition)?;
        s.end()
    }
}
