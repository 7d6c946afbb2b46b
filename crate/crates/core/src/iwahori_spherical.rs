//! The Borel component of `GL(n)`: Steinberg-block parameters, their
//! parameter space, the spherical piece and a Satake desk model.
//!
//! A tempered representation with Iwahori-fixed vectors is
//! `(χ_1∘det)St(n_1) × … × (χ_k∘det)St(n_k)` with unramified unitary `χ_i`.
//! Here the blocks are a [`Partition`] and each `χ_i` is an angle in `[0, 1)`.
//! Blocks of the same size may be permuted, so for block sizes `n_j` with
//! multiplicities `r_j` the parameters of fixed blocks form
//! `Π_j T^{r_j}/S_{r_j} = Π_j Sym^{r_j}(T)`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::partitions::{enumerate_partitions, Partition};
use crate::symbolic_eq::{component_of, decomposition, SymFactor, SymProduct};
use crate::torus_model::TorusPoint;
use crate::{Error, Result};

/// The angles attached to all blocks of one size.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CharacterGroup {
    pub size: usize,
    pub angles: Vec<f64>,
}

/// Block sizes plus one unramified character per block.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SteinbergParam {
    pub blocks: Vec<usize>,
    /// One group per distinct block size, size decreasing.
    pub characters: Vec<CharacterGroup>,
}

impl SteinbergParam {
    /// Validates structure (blocks form a partition; one angle per block,
    /// grouped by size in decreasing order). Angles are range-checked by
    /// [`normalize_param`].
    pub fn new(blocks: Vec<usize>, characters: Vec<CharacterGroup>) -> Result<Self> {
        let p = SteinbergParam { blocks, characters };
        p.check_structure()?;
        Ok(p)
    }

    pub fn partition(&self) -> Result<Partition> {
        Partition::new(self.blocks.clone())
    }

    fn check_structure(&self) -> Result<()> {
        let blocks = self.partition()?;
        let expected = blocks.multiplicities();
        let got: Vec<(usize, usize)> = self
            .characters
            .iter()
            .map(|g| (g.size, g.angles.len()))
            .collect();
        if got != expected {
            return Err(Error::domain(format!(
                "character groups {got:?} (size, count) do not match block multiplicities {expected:?}"
            )));
        }
        Ok(())
    }
}

/// Sorts angles within each size group. Two parameters describe the same
/// representation exactly when their normal forms agree.
pub fn normalize_param(p: &SteinbergParam) -> Result<SteinbergParam> {
    p.check_structure()?;
    let mut out = p.clone();
    for group in &mut out.characters {
        if let Some(a) = group.angles.iter().find(|a| !(0.0..1.0).contains(*a)) {
            return Err(Error::domain(format!(
                "character angle {a} is outside [0, 1)"
            )));
        }
        group.angles.sort_by(f64::total_cmp);
    }
    Ok(out)
}

pub fn equivalent(p: &SteinbergParam, q: &SteinbergParam) -> Result<bool> {
    Ok(normalize_param(p)? == normalize_param(q)?)
}

/// The Weyl group `W(M) = Π S_{r_j}` of the Levi subgroup with the given
/// blocks, as `(block size, r_j)` pairs, block size decreasing.
pub fn levi_weyl_group(blocks: &Partition) -> Vec<(usize, usize)> {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &b in blocks.parts() {
        *counts.entry(b).or_default() += 1;
    }
    counts.into_iter().rev().collect()
}

/// The parameter space of Steinberg-block representations with fixed blocks:
/// one `Sym^{r_j}(T)` per block size.
pub fn iwahori_component(blocks: &Partition) -> SymProduct {
    let factors = levi_weyl_group(blocks)
        .into_iter()
        .map(|(part_size, r)| SymFactor {
            sym_power: r,
            part_size,
        })
        .collect();
    SymProduct::new(factors).expect("block sizes and multiplicities are positive")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatchedComponent {
    pub blocks: Partition,
    pub cycle_type: Partition,
    pub weyl: Vec<usize>,
    pub component: String,
}

/// Matching of Iwahori parameter families with components of `T^n // S_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IwahoriReport {
    pub n: usize,
    pub matched: Vec<MatchedComponent>,
    pub ok: bool,
}

/// Checks that block data ↦ cycle type is a bijection onto the component
/// index set of `decomposition(n)`, that the parameter space for each block
/// partition equals the matching component, and that the Levi Weyl group
/// factors equal the component's symmetric powers.
pub fn parameter_space_check(n: usize) -> Result<IwahoriReport> {
    let eq = decomposition(n)?;
    let index: BTreeMap<&Partition, &SymProduct> = eq
        .components
        .iter()
        .map(|c| (&c.index[0], &c.descriptor))
        .collect();
    let mut ok = index.len() == eq.components.len();

    let mut hit = BTreeSet::new();
    let mut matched = Vec::new();
    for blocks in enumerate_partitions(n)? {
        // cycle type of a permutation whose cycles are the blocks
        let cycle_type = blocks.clone();
        let Some(&descriptor) = index.get(&cycle_type) else {
            ok = false;
            continue;
        };
        ok &= hit.insert(cycle_type.clone());
        let component = iwahori_component(&blocks);
        ok &= &component == descriptor;
        let mut weyl: Vec<usize> = levi_weyl_group(&blocks).iter().map(|&(_, r)| r).collect();
        weyl.sort_unstable_by(|a, b| b.cmp(a));
        ok &= weyl == descriptor.sym_powers();
        matched.push(MatchedComponent {
            blocks,
            cycle_type,
            weyl,
            component: component.to_string(),
        });
    }
    ok &= hit.len() == index.len();
    Ok(IwahoriReport { n, matched, ok })
}

/// The spherical component `T^n / S_n = Sym^n(T)`. It must coincide with the
/// identity-class component of the extended quotient.
pub fn spherical_component(n: usize) -> Result<SymProduct> {
    let sym_n = SymProduct::new(vec![SymFactor {
        sym_power: n,
        part_size: 1,
    }])?;
    let eq = decomposition(n)?;
    let ordinary = eq
        .ordinary_quotient()
        .ok_or_else(|| Error::consistency("extended quotient lacks the identity component"))?;
    if ordinary.descriptor != sym_n || ordinary.descriptor != component_of(&Partition::ones(n)?) {
        return Err(Error::consistency(format!(
            "identity component {} differs from {sym_n}",
            ordinary.descriptor
        )));
    }
    Ok(sym_n)
}

/// A weakly decreasing vector of `Z^n`, the representative of a `W`-orbit in
/// the lattice.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct DominantWeight {
    exponents: Vec<i64>,
}

impl DominantWeight {
    pub fn new(exponents: Vec<i64>) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::domain("weight has no entries"));
        }
        if exponents.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::domain(format!(
                "weight {exponents:?} is not weakly decreasing"
            )));
        }
        Ok(DominantWeight { exponents })
    }

    /// Sorts any integer vector into its dominant representative.
    pub fn dominant(mut exponents: Vec<i64>) -> Result<Self> {
        exponents.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(exponents)
    }

    pub fn exponents(&self) -> &[i64] {
        &self.exponents
    }

    /// Distinct permutations of the exponents, in lexicographic order.
    pub fn orbit(&self) -> Vec<Vec<i64>> {
        let mut current = self.exponents.clone();
        current.reverse();
        let mut out = vec![current.clone()];
        while next_permutation(&mut current) {
            out.push(current.clone());
        }
        out
    }
}

fn next_permutation(a: &mut [i64]) -> bool {
    let Some(i) = a.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = a.iter().rposition(|&x| x > a[i]).expect("a[i + 1] > a[i]");
    a.swap(i, j);
    a[i + 1..].reverse();
    true
}

/// The monomial symmetric function `m_w(z) = Σ_{μ ∈ W·w} Π z_i^{μ_i}` at
/// `z_i = e^{2πi p_i}`, each distinct permutation counted once.
pub fn monomial_symmetric_eval(w: &DominantWeight, p: &TorusPoint) -> Result<Complex64> {
    let TorusPoint::Continuous { angles } = p else {
        return Err(Error::domain(
            "monomial evaluation needs a continuous torus point",
        ));
    };
    if angles.len() != w.exponents.len() {
        return Err(Error::domain(format!(
            "weight of length {} evaluated at a point of dimension {}",
            w.exponents.len(),
            angles.len()
        )));
    }
    Ok(w.orbit()
        .iter()
        .map(|mu| {
            // Π z_i^{μ_i} = e^{2πi Σ μ_i p_i}; reduce the phase before cis.
            let phase: f64 = mu
                .iter()
                .zip(angles)
                .map(|(&k, &a)| (k as f64 * a).rem_euclid(1.0))
                .sum::<f64>()
                .rem_euclid(1.0);
            Complex64::from_polar(1.0, std::f64::consts::TAU * phase)
        })
        .sum())
}

/// Counts normalized Steinberg parameters with fixed `blocks` whose angles
/// lie on the grid `{0, 1/m, …, (m-1)/m}`, by enumerating every assignment of
/// grid angles to blocks and deduplicating normal forms.
pub fn grid_param_count(blocks: &Partition, m: usize) -> Result<BigUint> {
    if m == 0 {
        return Err(Error::domain("grid size must be positive"));
    }
    let k = blocks.len();
    let total = m
        .checked_pow(k as u32)
        .filter(|&t| t <= 10_000_000)
        .ok_or_else(|| Error::resource(format!("{m}^{k} grid assignments is too many")))?;
    let groups = blocks.multiplicities();
    let mut seen: BTreeSet<Vec<Vec<u64>>> = BTreeSet::new();
    for code in 0..total {
        let mut c = code;
        let mut characters = Vec::with_capacity(groups.len());
        for &(size, r) in &groups {
            let angles = (0..r)
                .map(|_| {
                    let a = (c % m) as f64 / m as f64;
                    c /= m;
                    a
                })
                .collect();
            characters.push(CharacterGroup { size, angles });
        }
        let p = normalize_param(&SteinbergParam::new(blocks.parts().to_vec(), characters)?)?;
        seen.insert(
            p.characters
                .iter()
                .map(|g| g.angles.iter().map(|a| a.to_bits()).collect())
                .collect(),
        );
    }
    Ok(BigUint::from(seen.len()))
}
