//! Symbolic extended quotients `T^d // (S_{e_1} × … × S_{e_r})`.
//!
//! For `γ ∈ S_n` of cycle type `λ`, the fixed set `(T^n)^γ` is a torus with one
//! circle per cycle. The centralizer is `Π (Z/n_i ≀ S_{r_i})`; its cyclic parts
//! act trivially on `(T^n)^γ`, and each `S_{r_i}` permutes the circles coming
//! from cycles of length `n_i`. So `(T^n)^γ / Z(γ) = Π_i Sym^{r_i}(T)`.

use std::fmt;

use num_bigint::BigUint;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::partitions::{binomial, enumerate_partitions, Partition};
use crate::{Error, Result};

/// One factor `Sym^r(T)`, remembering the part size it came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SymFactor {
    pub sym_power: usize,
    pub part_size: usize,
}

/// A product `Sym^{r_1}(T) × … × Sym^{r_l}(T)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymProduct {
    factors: Vec<SymFactor>,
    dimension: usize,
}

impl SymProduct {
    /// Builds a descriptor in canonical form (part size decreasing, ties by
    /// sym power decreasing). Zero sym powers are rejected.
    pub fn new(mut factors: Vec<SymFactor>) -> Result<Self> {
        if factors.iter().any(|f| f.sym_power == 0 || f.part_size == 0) {
            return Err(Error::domain(
                "symmetric powers and part sizes must be positive",
            ));
        }
        factors.sort_by(|a, b| {
            b.part_size
                .cmp(&a.part_size)
                .then(b.sym_power.cmp(&a.sym_power))
        });
        let dimension = factors.iter().map(|f| f.sym_power).sum();
        Ok(SymProduct { factors, dimension })
    }

    /// Concatenates descriptors without re-sorting, as needed when the group
    /// is itself a product and each block keeps its own factor order.
    fn concat<'a>(parts: impl IntoIterator<Item = &'a SymProduct>) -> SymProduct {
        let factors: Vec<SymFactor> = parts
            .into_iter()
            .flat_map(|p| p.factors.iter().copied())
            .collect();
        let dimension = factors.iter().map(|f| f.sym_power).sum();
        SymProduct { factors, dimension }
    }

    pub fn factors(&self) -> &[SymFactor] {
        &self.factors
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Multiset of symmetric powers, decreasing.
    pub fn sym_powers(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.factors.iter().map(|f| f.sym_power).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }
}

impl fmt::Display for SymProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " x ")?;
            }
            match factor.sym_power {
                1 => write!(f, "T")?,
                r => write!(f, "Sym^{r}(T)")?,
            }
        }
        Ok(())
    }
}

/// `X^γ / Z(γ)` for `γ` of cycle type `lambda`.
pub fn component_of(lambda: &Partition) -> SymProduct {
    let factors = lambda
        .multiplicities()
        .into_iter()
        .map(|(part_size, sym_power)| SymFactor {
            sym_power,
            part_size,
        })
        .collect();
    // multiplicities() is already part-size decreasing
    SymProduct::new(factors).expect("partition parts are positive")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    /// One partition per symmetric-group factor of the group.
    pub index: Vec<Partition>,
    pub descriptor: SymProduct,
}

/// The full extended quotient, one component per conjugacy class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqDecomposition {
    pub torus_dimension: usize,
    pub group: Vec<usize>,
    pub components: Vec<Component>,
}

impl EqDecomposition {
    /// The `γ = 1` component, i.e. the ordinary quotient.
    pub fn ordinary_quotient(&self) -> Option<&Component> {
        self.components
            .iter()
            .find(|c| c.index.iter().all(Partition::is_identity_class))
    }

    pub fn descriptors(&self) -> impl Iterator<Item = &SymProduct> {
        self.components.iter().map(|c| &c.descriptor)
    }
}

/// `T^n // S_n`.
pub fn decomposition(n: usize) -> Result<EqDecomposition> {
    if n == 0 {
        return Err(Error::domain("torus dimension must be positive"));
    }
    eq_of_sym_product(&[n])
}

/// `T^d // (S_{e_1} × … × S_{e_r})` with `d = Σ e_j`, the group acting
/// blockwise on consecutive coordinate blocks.
///
/// Components are the Cartesian product of the per-factor decompositions,
/// ordered lexicographically with the first factor slowest.
pub fn eq_of_sym_product(exponents: &[usize]) -> Result<EqDecomposition> {
    if exponents.is_empty() {
        return Err(Error::domain("exponent list is empty"));
    }
    if exponents.contains(&0) {
        return Err(Error::domain("exponents must be positive"));
    }
    let per_factor: Vec<Vec<(Partition, SymProduct)>> = exponents
        .iter()
        .map(|&e| {
            enumerate_partitions(e).map(|ps| {
                ps.into_iter()
                    .map(|p| {
                        let c = component_of(&p);
                        (p, c)
                    })
                    .collect()
            })
        })
        .collect::<Result<_>>()?;

    let mut components = Vec::new();
    let mut choice = vec![0usize; per_factor.len()];
    'outer: loop {
        let picked: Vec<&(Partition, SymProduct)> = choice
            .iter()
            .zip(&per_factor)
            .map(|(&i, list)| &list[i])
            .collect();
        components.push(Component {
            index: picked.iter().map(|(p, _)| p.clone()).collect(),
            descriptor: SymProduct::concat(picked.iter().map(|(_, c)| c)),
        });
        // odometer, last factor fastest
        for k in (0..choice.len()).rev() {
            choice[k] += 1;
            if choice[k] < per_factor[k].len() {
                continue 'outer;
            }
            choice[k] = 0;
        }
        break;
    }

    Ok(EqDecomposition {
        torus_dimension: exponents.iter().sum(),
        group: exponents.to_vec(),
        components,
    })
}

/// Number of points of the component on the grid of `m` samples per circle:
/// `Π binomial(m + r - 1, r)`, the count of size-`r` multisets per factor.
pub fn discrete_count(component: &SymProduct, m: usize) -> Result<BigUint> {
    if m == 0 {
        return Err(Error::domain("grid size must be positive"));
    }
    Ok(component
        .factors
        .iter()
        .fold(BigUint::from(1u32), |acc, f| {
            acc * binomial(m + f.sym_power - 1, f.sym_power)
        }))
}

impl Serialize for SymProduct {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("SymProduct", 2)?;
        s.serialize_field("factors", &self.factors)?;
        s.serialize_field("dimension", &self.dimension)?;
        s.end()
    }
}

// Field order is part of the output contract:
// {"n":..,"group":[..],"components":[{"partition":[..],"factors":[..],"dimension":..}]}.
// With more than one group factor, the index is emitted as "partitions": [[..],..].
impl Serialize for EqDecomposition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct Comp<'a>(&'a Component, bool);
        impl Serialize for Comp<'_> {
            fn serialize<S: Serializer>(
                &self,
                serializer: S,
            ) -> std::result::Result<S::Ok, S::Error> {
                let mut s = serializer.serialize_struct("Component", 3)?;
                if self.1 {
                    s.serialize_field("partition", &self.0.index[0])?;
                } else {
                    s.serialize_field("partitions", &self.0.index)?;
                }
                s.serialize_field("factors", &self.0.descriptor.factors)?;
                s.serialize_field("dimension", &self.0.descriptor.dimension)?;
                s.end()
            }
        }
        let single = self.group.len() == 1;
        let comps: Vec<Comp<'_>> = self.components.iter().map(|c| Comp(c, single)).collect();
        let mut s = serializer.serialize_struct("EqDecomposition", 3)?;
        s.serialize_field("n", &self.torus_dimension)?;
        s.serialize_field("group", &self.group)?;
        s.serialize_field("components", &comps)?;
        s.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partition_count;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn sp(f: &[(usize, usize)]) -> SymProduct {
        SymProduct::new(
            f.iter()
                .map(|&(sym_power, part_size)| SymFactor {
                    sym_power,
                    part_size,
                })
                .collect(),
        )
        .unwrap()
    }

    // Multisets of size r from m symbols, by brute-force enumeration of
    // non-decreasing sequences.
    fn brute_multisets(m: usize, r: usize) -> usize {
        fn go(m: usize, r: usize, min: usize) -> usize {
            if r == 0 {
                return 1;
            }
            (min..m).map(|s| go(m, r - 1, s)).sum()
        }
        go(m, r, 0)
    }

    #[test]
    fn component_examples() {
        let c = component_of(&part(&[5]));
        assert_eq!(c, sp(&[(1, 5)]));
        assert_eq!(c.dimension(), 1);
        assert_eq!(c.to_string(), "T");

        let c = component_of(&part(&[3, 1, 1]));
        assert_eq!(c.factors(), sp(&[(1, 3), (2, 1)]).factors());
        assert_eq!(c.dimension(), 3);
        assert_eq!(c.to_string(), "T x Sym^2(T)");

        let c = component_of(&part(&[1, 1, 1, 1, 1]));
        assert_eq!(c, sp(&[(5, 1)]));
        assert_eq!(c.to_string(), "Sym^5(T)");
    }

    #[test]
    fn decomposition_of_5_lists_seven_orbifolds() {
        let d = decomposition(5).unwrap();
        let rendered: Vec<String> = d.descriptors().map(ToString::to_string).collect();
        assert_eq!(
            rendered,
            vec![
                "T",
                "T x T",
                "T x T",
                "T x Sym^2(T)",
                "Sym^2(T) x T",
                "T x Sym^3(T)",
                "Sym^5(T)"
            ]
        );
        assert_eq!(d.group, vec![5]);
    }

    #[test]
    fn decomposition_of_1_and_3() {
        let d = decomposition(1).unwrap();
        assert_eq!(d.components.len(), 1);
        assert_eq!(d.components[0].descriptor.to_string(), "T");

        let d = decomposition(3).unwrap();
        let dims: Vec<usize> = d.descriptors().map(SymProduct::dimension).collect();
        assert_eq!(dims, vec![1, 2, 3]);
        let rendered: Vec<String> = d.descriptors().map(ToString::to_string).collect();
        assert_eq!(rendered, vec!["T", "T x T", "Sym^3(T)"]);
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(decomposition(0), Err(Error::Domain(_))));
        assert!(matches!(eq_of_sym_product(&[]), Err(Error::Domain(_))));
        assert!(matches!(eq_of_sym_product(&[2, 0]), Err(Error::Domain(_))));
        assert!(matches!(
            discrete_count(&sp(&[(1, 1)]), 0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn eq_of_sym_product_examples() {
        let d = eq_of_sym_product(&[2]).unwrap();
        let r: Vec<String> = d.descriptors().map(ToString::to_string).collect();
        assert_eq!(r, vec!["T", "Sym^2(T)"]);

        let d = eq_of_sym_product(&[1, 1]).unwrap();
        assert_eq!(d.components.len(), 1);
        assert_eq!(d.components[0].descriptor.to_string(), "T x T");
        assert_eq!(d.components[0].descriptor.dimension(), 2);

        let d = eq_of_sym_product(&[2, 1]).unwrap();
        let r: Vec<String> = d.descriptors().map(ToString::to_string).collect();
        assert_eq!(r, vec!["T x T", "Sym^2(T) x T"]);
        assert_eq!(d.torus_dimension, 3);
    }

    #[test]
    fn discrete_count_examples() {
        assert_eq!(
            discrete_count(&sp(&[(1, 4)]), 7).unwrap(),
            BigUint::from(7u32)
        );
        assert_eq!(
            discrete_count(&sp(&[(2, 1)]), 3).unwrap(),
            BigUint::from(6u32)
        );
        assert_eq!(brute_multisets(3, 2), 6);
        assert_eq!(
            discrete_count(&sp(&[(1, 3), (3, 1)]), 2).unwrap(),
            BigUint::from(8u32)
        );
        assert_eq!(2 * brute_multisets(2, 3), 8);
    }

    #[test]
    fn discrete_count_matches_multiset_enumeration() {
        for m in 1..=5 {
            for r in 1..=5 {
                let c = sp(&[(r, 1)]);
                assert_eq!(
                    discrete_count(&c, m).unwrap(),
                    BigUint::from(brute_multisets(m, r))
                );
            }
        }
    }

    #[test]
    fn component_counts_and_dimensions() {
        for n in 1..=12 {
            let d = decomposition(n).unwrap();
            assert_eq!(BigUint::from(d.components.len()), partition_count(n));
            for c in &d.components {
                assert_eq!(c.descriptor.dimension(), c.index[0].len());
            }
            let top: Vec<_> = d
                .components
                .iter()
                .filter(|c| c.descriptor.dimension() == n)
                .collect();
            assert_eq!(top.len(), 1);
            assert!(top[0].index[0].is_identity_class());
            let bottom: Vec<_> = d
                .components
                .iter()
                .filter(|c| c.descriptor.dimension() == 1)
                .collect();
            assert_eq!(bottom.len(), 1);
            assert_eq!(bottom[0].index[0], Partition::single(n).unwrap());
            let ord = d.ordinary_quotient().unwrap();
            assert_eq!(ord.descriptor, sp(&[(n, 1)]));
            assert_eq!(eq_of_sym_product(&[n]).unwrap(), d);
        }
    }

    #[test]
    fn multiplicativity() {
        for exps in [vec![2, 1], vec![3, 2], vec![1, 2, 2], vec![4, 1, 3]] {
            let whole = eq_of_sym_product(&exps).unwrap();
            // Cartesian product of the single-factor lists, first factor slowest.
            let mut expected: Vec<(Vec<Partition>, Vec<SymFactor>)> = vec![(vec![], vec![])];
            for &e in &exps {
                let single = eq_of_sym_product(&[e]).unwrap();
                expected = expected
                    .into_iter()
                    .flat_map(|(idx, fs)| {
                        single.components.iter().map(move |c| {
                            let mut idx = idx.clone();
                            idx.push(c.index[0].clone());
                            let mut fs = fs.clone();
                            fs.extend_from_slice(c.descriptor.factors());
                            (idx, fs)
                        })
                    })
                    .collect();
            }
            assert_eq!(whole.components.len(), expected.len());
            for (comp, (idx, fs)) in whole.components.iter().zip(&expected) {
                assert_eq!(&comp.index, idx);
                assert_eq!(comp.descriptor.factors(), &fs[..]);
            }
        }
    }

    #[test]
    fn json_shape() {
        let d = decomposition(3).unwrap();
        let json = serde_json::to_string(&d).unwrap();
        assert_eq!(
            json,
            r#"{"n":3,"group":[3],"components":[{"partition":[3],"factors":[{"sym_power":1,"part_size":3}],"dimension":1},{"partition":[2,1],"factors":[{"sym_power":1,"part_size":2},{"sym_power":1,"part_size":1}],"dimension":2},{"partition":[1,1,1],"factors":[{"sym_power":3,"part_size":1}],"dimension":3}]}"#
        );
        let d = eq_of_sym_product(&[1, 1]).unwrap();
        let json = serde_json::to_string(&d).unwrap();
        assert!(json.contains(r#""partitions":[[1],[1]]"#));
    }
}
