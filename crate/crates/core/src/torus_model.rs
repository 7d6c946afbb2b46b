//! The compact torus `T^n`, its grid model `(Z/m)^n`, and the checks tying
//! [`symbolic_eq`](crate::symbolic_eq) to [`finite_oracle`](crate::finite_oracle).
//!
//! Grid points are encoded as integers with the first coordinate most
//! significant, so index order is lexicographic order on coordinate tuples.
//! A coordinate permutation `σ` acts by `(σ·x)_{σ(i)} = x_i`.

use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::Serialize;

use crate::finite_oracle::{FiniteAction, Perm, PermGroup};
use crate::partitions::{enumerate_partitions, Partition};
use crate::symbolic_eq::{component_of, discrete_count};
use crate::{Error, Result};

/// Default cap on the number of grid points `m^n`.
pub const DEFAULT_BUDGET: usize = 1_000_000;
/// Default samples per circle.
pub const DEFAULT_GRID: usize = 3;

/// Largest group order for which the full multiplication table is built.
pub const MAX_GROUP_ORDER: usize = 5040;
/// Cap on the action table size, group order times points.
pub const MAX_TABLE_ENTRIES: usize = 1 << 26;

/// Absolute tolerance for angle comparisons, after reduction mod 1.
pub const ANGLE_TOLERANCE: f64 = 1e-12;

/// Reduces to `[0, 1)`. `rem_euclid` can round up to exactly 1.0 for tiny
/// negative inputs, which is folded back to 0.
pub fn reduce_angle(a: f64) -> f64 {
    let r = a.rem_euclid(1.0);
    if r >= 1.0 {
        0.0
    } else {
        r
    }
}

/// Distance between two angles on the circle `R/Z`.
pub fn angle_distance(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(1.0);
    d.min(1.0 - d)
}

/// A point of `T^n`, either on the grid `(Z/m)^n` or as angles in `[0, 1)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum TorusPoint {
    Discrete { modulus: u32, coords: Vec<u32> },
    Continuous { angles: Vec<f64> },
}

impl TorusPoint {
    pub fn discrete(modulus: u32, coords: Vec<u32>) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::domain("modulus must be positive"));
        }
        if coords.is_empty() {
            return Err(Error::domain("torus point has no coordinates"));
        }
        if let Some(c) = coords.iter().find(|&&c| c >= modulus) {
            return Err(Error::domain(format!(
                "residue {c} is not below modulus {modulus}"
            )));
        }
        Ok(TorusPoint::Discrete { modulus, coords })
    }

    pub fn continuous(angles: Vec<f64>) -> Result<Self> {
        if angles.is_empty() {
            return Err(Error::domain("torus point has no coordinates"));
        }
        if let Some(a) = angles.iter().find(|a| !(0.0..1.0).contains(*a)) {
            return Err(Error::domain(format!("angle {a} is outside [0, 1)")));
        }
        Ok(TorusPoint::Continuous { angles })
    }

    pub fn dim(&self) -> usize {
        match self {
            TorusPoint::Discrete { coords, .. } => coords.len(),
            TorusPoint::Continuous { angles } => angles.len(),
        }
    }

    /// `σ·p`, moving coordinate `i` to position `σ(i)`.
    pub fn permute(&self, sigma: &[u32]) -> Result<Self> {
        if sigma.len() != self.dim() {
            return Err(Error::domain(format!(
                "permutation of degree {} applied to a point of dimension {}",
                sigma.len(),
                self.dim()
            )));
        }
        fn apply<T: Copy + Default>(v: &[T], sigma: &[u32]) -> Vec<T> {
            let mut out = vec![T::default(); v.len()];
            for (i, &s) in sigma.iter().enumerate() {
                out[s as usize] = v[i];
            }
            out
        }
        Ok(match self {
            TorusPoint::Discrete { modulus, coords } => TorusPoint::Discrete {
                modulus: *modulus,
                coords: apply(coords, sigma),
            },
            TorusPoint::Continuous { angles } => TorusPoint::Continuous {
                angles: apply(angles, sigma),
            },
        })
    }

    /// Unit complex coordinates `e^{2πi θ}`; only for the continuous form.
    pub fn to_complex(&self) -> Result<ComplexTorusPoint> {
        match self {
            TorusPoint::Continuous { angles } => ComplexTorusPoint::new(
                angles
                    .iter()
                    .map(|&a| Complex64::from_polar(1.0, TAU * a))
                    .collect(),
            ),
            TorusPoint::Discrete { .. } => Err(Error::domain(
                "only continuous torus points have a complex form",
            )),
        }
    }

    /// Equality up to [`ANGLE_TOLERANCE`] on the circle; exact on the grid.
    pub fn approx_eq(&self, other: &TorusPoint) -> bool {
        match (self, other) {
            (TorusPoint::Continuous { angles: a }, TorusPoint::Continuous { angles: b }) => {
                a.len() == b.len()
                    && a.iter()
                        .zip(b)
                        .all(|(&x, &y)| angle_distance(x, y) <= ANGLE_TOLERANCE)
            }
            _ => self == other,
        }
    }
}

/// A diagonal rotation amount: a grid residue or an angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Rotation {
    Residue(u32),
    Angle(f64),
}

/// Shifts every coordinate by `t`. This is the action of the unramified
/// unitary characters `Ψ^t(GL(n)) ≅ T`, acting diagonally on `T^d`.
pub fn diagonal_rotate(p: &TorusPoint, t: Rotation) -> Result<TorusPoint> {
    match (p, t) {
        (TorusPoint::Discrete { modulus, coords }, Rotation::Residue(t)) => {
            let t = t % modulus;
            Ok(TorusPoint::Discrete {
                modulus: *modulus,
                coords: coords.iter().map(|&c| (c + t) % modulus).collect(),
            })
        }
        (TorusPoint::Continuous { angles }, Rotation::Angle(t)) => {
            if !t.is_finite() {
                return Err(Error::domain("rotation angle must be finite"));
            }
            Ok(TorusPoint::Continuous {
                angles: angles.iter().map(|&a| reduce_angle(a + t)).collect(),
            })
        }
        _ => Err(Error::domain(
            "rotation and point use different discretizations",
        )),
    }
}

/// A point of the complex torus `(C^×)^n`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexTorusPoint {
    coords: Vec<Complex64>,
}

impl ComplexTorusPoint {
    pub fn new(coords: Vec<Complex64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::domain("complex torus point has no coordinates"));
        }
        for z in &coords {
            if !(z.re.is_finite() && z.im.is_finite()) {
                return Err(Error::domain(format!("coordinate {z} is not finite")));
            }
            if z.norm() == 0.0 {
                return Err(Error::domain("complex torus coordinates must be nonzero"));
            }
        }
        Ok(ComplexTorusPoint { coords })
    }

    pub fn coords(&self) -> &[Complex64] {
        &self.coords
    }

    pub fn permute(&self, sigma: &[u32]) -> Result<Self> {
        if sigma.len() != self.coords.len() {
            return Err(Error::domain("permutation degree does not match dimension"));
        }
        let mut out = vec![Complex64::new(0.0, 0.0); self.coords.len()];
        for (i, &s) in sigma.iter().enumerate() {
            out[s as usize] = self.coords[i];
        }
        Ok(ComplexTorusPoint { coords: out })
    }
}

/// Retraction of `(C^×)^n` onto `T^n`, `z_i ↦ z_i / |z_i|`, reported as angles.
pub fn retract(z: &ComplexTorusPoint) -> Result<TorusPoint> {
    let angles = z
        .coords
        .iter()
        .map(|c| {
            if c.norm() == 0.0 {
                return Err(Error::domain("cannot retract a zero coordinate"));
            }
            Ok(reduce_angle(c.im.atan2(c.re) / TAU))
        })
        .collect::<Result<Vec<_>>>()?;
    TorusPoint::continuous(angles)
}

/// The grid `(Z/m)^n` with index encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiscreteTorus {
    pub n: usize,
    pub m: usize,
}

impl DiscreteTorus {
    /// Checks `m^n` against `budget`.
    pub fn new(n: usize, m: usize, budget: usize) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::domain(
                "torus dimension and grid size must be positive",
            ));
        }
        match m.checked_pow(n as u32) {
            Some(points) if points <= budget => Ok(DiscreteTorus { n, m }),
            _ => Err(Error::resource(format!(
                "grid ({m})^{n} exceeds the budget of {budget} points"
            ))),
        }
    }

    pub fn num_points(&self) -> usize {
        self.m.pow(self.n as u32)
    }

    pub fn encode(&self, coords: &[u32]) -> usize {
        coords
            .iter()
            .fold(0usize, |acc, &c| acc * self.m + c as usize)
    }

    pub fn decode(&self, mut index: usize) -> Vec<u32> {
        let mut coords = vec![0u32; self.n];
        for slot in coords.iter_mut().rev() {
            *slot = (index % self.m) as u32;
            index /= self.m;
        }
        coords
    }

    pub fn point(&self, index: usize) -> TorusPoint {
        TorusPoint::Discrete {
            modulus: self.m as u32,
            coords: self.decode(index),
        }
    }

    /// The permutation of grid points induced by a coordinate permutation.
    pub fn permutation_image(&self, sigma: &[u32]) -> Perm {
        let mut moved = vec![0u32; self.n];
        (0..self.num_points())
            .map(|x| {
                let coords = self.decode(x);
                for (i, &s) in sigma.iter().enumerate() {
                    moved[s as usize] = coords[i];
                }
                self.encode(&moved) as u32
            })
            .collect()
    }

    /// The permutation of grid points induced by rotating by `t`.
    pub fn rotation_image(&self, t: u32) -> Perm {
        let m = self.m as u32;
        (0..self.num_points())
            .map(|x| {
                let shifted: Vec<u32> = self.decode(x).iter().map(|&c| (c + t) % m).collect();
                self.encode(&shifted) as u32
            })
            .collect()
    }

    /// `group` acting on the grid by permuting coordinates.
    pub fn action(&self, group: PermGroup) -> Result<FiniteAction> {
        if group.degree() != self.n {
            return Err(Error::domain(format!(
                "group of degree {} cannot permute {} coordinates",
                group.degree(),
                self.n
            )));
        }
        let table = group.order().saturating_mul(self.num_points());
        if table > MAX_TABLE_ENTRIES {
            return Err(Error::resource(format!(
                "action table of {table} entries exceeds {MAX_TABLE_ENTRIES}"
            )));
        }
        let images = group
            .elements()
            .iter()
            .map(|s| self.permutation_image(s))
            .collect();
        FiniteAction::new(group, self.num_points(), images)
    }
}

fn factorial_capped(n: usize, cap: usize) -> Option<usize> {
    (1..=n).try_fold(1usize, |acc, k| acc.checked_mul(k).filter(|&v| v <= cap))
}

/// `S_n` acting on `(Z/m)^n` by permuting coordinates, with cycle-type labels.
///
/// Besides the point budget, the group order is capped at
/// [`MAX_GROUP_ORDER`] and the action table at [`MAX_TABLE_ENTRIES`]; either
/// overflow is a resource error.
pub fn build_sn_action(n: usize, m: usize, budget: usize) -> Result<FiniteAction> {
    let torus = DiscreteTorus::new(n, m, budget)?;
    if factorial_capped(n, MAX_GROUP_ORDER).is_none() {
        return Err(Error::resource(format!(
            "S_{n} exceeds the group order cap of {MAX_GROUP_ORDER}"
        )));
    }
    torus.action(PermGroup::symmetric(n)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassCount {
    pub partition: Partition,
    pub oracle: u64,
    pub symbolic: u64,
}

/// Per-class comparison of brute-force orbit counts with the symbolic
/// component counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub n: usize,
    pub m: usize,
    pub classes: Vec<ClassCount>,
    pub total: u64,
    pub ok: bool,
}

/// Counts orbits of `S_n` on the pairs over `(Z/m)^n`, class by class, and
/// compares with `discrete_count(component_of(λ), m)`.
pub fn verify_counts(n: usize, m: usize, budget: usize) -> Result<CountReport> {
    let action = build_sn_action(n, m, budget)?;
    let orbits = action.extended_quotient_orbits();
    let group = action.group();

    let mut by_type: Vec<(Partition, usize)> = Vec::new();
    for class in group.conjugacy_classes() {
        let label = action.label(class[0]).clone();
        if class.iter().any(|&g| action.label(g) != &label) {
            return Err(Error::consistency(format!(
                "conjugacy class of {label} mixes cycle types"
            )));
        }
        by_type.push((label, orbits.count_over_class(&class)));
    }

    let mut ok = true;
    let mut classes = Vec::new();
    for lambda in enumerate_partitions(n)? {
        let matches: Vec<usize> = by_type
            .iter()
            .filter(|(l, _)| *l == lambda)
            .map(|&(_, c)| c)
            .collect();
        let oracle = match matches[..] {
            [c] => c as u64,
            _ => {
                ok = false;
                matches.iter().sum::<usize>() as u64
            }
        };
        let symbolic = u64::try_from(&discrete_count(&component_of(&lambda), m)?)
            .map_err(|_| Error::resource("symbolic count does not fit in 64 bits"))?;
        ok &= oracle == symbolic;
        classes.push(ClassCount {
            partition: lambda,
            oracle,
            symbolic,
        });
    }
    let total = orbits.orbit_count() as u64;
    ok &= by_type.len() == classes.len();
    ok &= total == classes.iter().map(|c| c.symbolic).sum::<u64>();
    Ok(CountReport {
        n,
        m,
        classes,
        total,
        ok,
    })
}

/// Checks that for every `γ ∈ S_n` each cycle of `γ`, taken as a permutation
/// on its own, fixes `(Z/m)^n`'s `γ`-fixed points pointwise. These cycles
/// generate the `(Z/n_i)^{r_i}` parts of the centralizer.
pub fn cyclic_factors_act_trivially(n: usize, m: usize, budget: usize) -> Result<bool> {
    let action = build_sn_action(n, m, budget)?;
    let group = action.group();
    for gamma in 0..group.order() {
        let fixed = action.fixed_points_of(gamma);
        let perm = group.element(gamma);
        for cycle in cycles(perm) {
            let mut single: Perm = (0..n as u32).collect();
            for &i in &cycle {
                single[i] = perm[i];
            }
            let c = group
                .index_of(&single)
                .ok_or_else(|| Error::consistency("cycle is not a group element"))?;
            if !group.commute(c, gamma) {
                return Ok(false);
            }
            if fixed.iter().any(|&x| action.act(c, x) != x) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn cycles(perm: &[u32]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push(i);
            i = perm[i] as usize;
        }
        out.push(cycle);
    }
    out
}

/// Outcome of the diagonal-rotation checks on `(Z/m)^n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RotationReport {
    /// Rotation commutes with every coordinate permutation.
    pub commutes: bool,
    /// Rotation maps each fixed set `X^γ` bijectively onto itself.
    pub preserves_fixed_sets: bool,
    /// Rotation sends each pair-orbit into a single pair-orbit.
    pub descends: bool,
    /// Number of pair-orbits over the class of `n`-cycles.
    pub circle_orbits: usize,
    /// Rotations act transitively on those orbits.
    pub transitive_on_circle: bool,
}

impl RotationReport {
    pub fn ok(&self) -> bool {
        self.commutes && self.preserves_fixed_sets && self.descends && self.transitive_on_circle
    }
}

pub fn rotation_check(n: usize, m: usize, budget: usize) -> Result<RotationReport> {
    let torus = DiscreteTorus::new(n, m, budget)?;
    let action = build_sn_action(n, m, budget)?;
    let group = action.group();
    let rotations: Vec<Perm> = (0..m as u32).map(|t| torus.rotation_image(t)).collect();

    let commutes = rotations.iter().all(|r| {
        (0..group.order()).all(|g| {
            let s = action.image(g);
            (0..torus.num_points()).all(|x| r[s[x] as usize] == s[r[x] as usize])
        })
    });

    let fixed: Vec<Vec<usize>> = (0..group.order())
        .map(|g| action.fixed_points_of(g))
        .collect();
    let preserves_fixed_sets = rotations.iter().all(|r| {
        fixed.iter().all(|xs| {
            let mut image: Vec<usize> = xs.iter().map(|&x| r[x] as usize).collect();
            image.sort_unstable();
            image == *xs
        })
    });

    let orbits = action.extended_quotient_orbits();
    let pair_index =
        |gamma: usize, x: usize| -> Option<usize> { orbits.pairs.binary_search(&(gamma, x)).ok() };
    // orbit_map[t][o] is the image orbit of o under rotation by t
    let mut descends = true;
    let mut orbit_map = vec![vec![usize::MAX; orbits.orbit_count()]; m];
    for (t, r) in rotations.iter().enumerate() {
        for (p, &(gamma, x)) in orbits.pairs.iter().enumerate() {
            let Some(q) = pair_index(gamma, r[x] as usize) else {
                descends = false;
                continue;
            };
            let (from, to) = (orbits.orbit_of[p], orbits.orbit_of[q]);
            let slot = &mut orbit_map[t][from];
            if *slot == usize::MAX {
                *slot = to;
            } else if *slot != to {
                descends = false;
            }
        }
    }

    let circle_class: Vec<usize> = {
        let full_cycle = Partition::single(n)?;
        let mut class: Vec<usize> = (0..group.order())
            .filter(|&g| action.label(g) == &full_cycle)
            .collect();
        class.sort_unstable();
        class
    };
    let circle: Vec<usize> = (0..orbits.orbit_count())
        .filter(|&o| {
            circle_class
                .binary_search(&orbits.representative(o).0)
                .is_ok()
        })
        .collect();
    let transitive_on_circle = descends
        && match circle.first() {
            Some(&start) => {
                let mut reached: Vec<usize> = orbit_map.iter().map(|map| map[start]).collect();
                reached.sort_unstable();
                reached.dedup();
                reached == circle
            }
            None => false,
        };

    Ok(RotationReport {
        commutes,
        preserves_fixed_sets,
        descends,
        circle_orbits: circle.len(),
        transitive_on_circle,
    })
}
