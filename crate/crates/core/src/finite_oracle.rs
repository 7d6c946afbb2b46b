//! Brute-force ground truth for extended quotients of finite actions.
//!
//! A [`FiniteAction`] is an abstract permutation group (elements stored as
//! permutations of a small carrier set, e.g. torus coordinates) together with
//! a homomorphism into the permutations of a finite point set. Keeping the
//! group abstract matters when the action is not faithful: `S_n` on the single
//! point of `(Z/1)^n` still has `p(n)` pairs-orbits.
//!
//! Everything here is exhaustive on purpose. The orbit count of
//! `X̂ = {(γ, x) : γx = x}` under `g·(γ, x) = (gγg⁻¹, gx)` is computed twice:
//! by union-find over the pair set and by Burnside averaging.

use std::collections::HashMap;

use crate::partitions::Partition;
use crate::{Error, Result};

/// Images of `0..degree`; `perm[i]` is where `i` goes.
pub type Perm = Vec<u32>;

fn identity(degree: usize) -> Perm {
    (0..degree as u32).collect()
}

/// `(a ∘ b)(i) = a(b(i))`
fn compose(a: &[u32], b: &[u32]) -> Perm {
    b.iter().map(|&i| a[i as usize]).collect()
}

fn is_permutation(p: &[u32], degree: usize) -> bool {
    if p.len() != degree {
        return false;
    }
    let mut seen = vec![false; degree];
    for &i in p {
        let i = i as usize;
        if i >= degree || seen[i] {
            return false;
        }
        seen[i] = true;
    }
    true
}

/// Cycle type of a permutation, as a partition of its degree.
pub fn cycle_type(p: &[u32]) -> Partition {
    let mut seen = vec![false; p.len()];
    let mut lens = Vec::new();
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut i = start;
        let mut len = 0;
        while !seen[i] {
            seen[i] = true;
            i = p[i] as usize;
            len += 1;
        }
        lens.push(len);
    }
    Partition::from_multiset(lens).expect("degree is positive")
}

/// A finite permutation group with its full multiplication table.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    /// `mul[g * len + h]` is the index of `g ∘ h`.
    mul: Vec<usize>,
    inv: Vec<usize>,
    generators: Vec<usize>,
}

impl PermGroup {
    /// The group generated by `generators`, enumerated by breadth-first
    /// closure. The identity is element 0; the remaining order is the BFS
    /// discovery order, which is deterministic.
    pub fn generated_by(degree: usize, generators: &[Perm]) -> Result<Self> {
        if degree == 0 {
            return Err(Error::domain("permutation degree must be positive"));
        }
        for g in generators {
            if !is_permutation(g, degree) {
                return Err(Error::domain(format!(
                    "{g:?} is not a permutation of degree {degree}"
                )));
            }
        }
        let mut elements = vec![identity(degree)];
        let mut index = HashMap::from([(identity(degree), 0usize)]);
        let mut next = 0;
        while next < elements.len() {
            for s in generators {
                let prod = compose(s, &elements[next]);
                if !index.contains_key(&prod) {
                    index.insert(prod.clone(), elements.len());
                    elements.push(prod);
                }
            }
            next += 1;
        }
        let generator_idx = generators
            .iter()
            .map(|g| index[g])
            .filter(|&i| i != 0)
            .collect::<Vec<_>>();
        Self::finish(degree, elements, index, generator_idx)
    }

    /// Takes an explicit element list and verifies that it is a group: the
    /// identity comes first, and products and inverses stay inside the list.
    pub fn from_elements(degree: usize, elements: Vec<Perm>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::domain("permutation degree must be positive"));
        }
        if elements.first() != Some(&identity(degree)) {
            return Err(Error::domain("element 0 must be the identity"));
        }
        let mut index = HashMap::with_capacity(elements.len());
        for (i, e) in elements.iter().enumerate() {
            if !is_permutation(e, degree) {
                return Err(Error::domain(format!(
                    "{e:?} is not a permutation of degree {degree}"
                )));
            }
            if index.insert(e.clone(), i).is_some() {
                return Err(Error::domain(format!("duplicate group element {e:?}")));
            }
        }
        let generators = (1..elements.len()).collect();
        Self::finish(degree, elements, index, generators)
    }

    fn finish(
        degree: usize,
        elements: Vec<Perm>,
        index: HashMap<Perm, usize>,
        generators: Vec<usize>,
    ) -> Result<Self> {
        let len = elements.len();
        let mut mul = Vec::with_capacity(len * len);
        for g in &elements {
            for h in &elements {
                let prod = compose(g, h);
                match index.get(&prod) {
                    Some(&k) => mul.push(k),
                    None => {
                        return Err(Error::domain(format!(
                            "element list is not closed: {g:?} ∘ {h:?} = {prod:?} is missing"
                        )))
                    }
                }
            }
        }
        let mut inv = vec![usize::MAX; len];
        for g in 0..len {
            // A finite closed subset containing the identity always has
            // inverses, but the table is checked rather than assumed.
            match (0..len).find(|&h| mul[g * len + h] == 0) {
                Some(h) => inv[g] = h,
                None => return Err(Error::domain(format!("element {g} has no inverse"))),
            }
        }
        Ok(PermGroup {
            degree,
            elements,
            index,
            mul,
            inv,
            generators,
        })
    }

    /// The full symmetric group on `degree` letters.
    pub fn symmetric(degree: usize) -> Result<Self> {
        let mut gens = Vec::new();
        if degree >= 2 {
            let mut swap = identity(degree);
            swap.swap(0, 1);
            gens.push(swap);
        }
        if degree >= 3 {
            gens.push(
                (0..degree as u32)
                    .map(|i| (i + 1) % degree as u32)
                    .collect(),
            );
        }
        Self::generated_by(degree, &gens)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, g: usize) -> &[u32] {
        &self.elements[g]
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn index_of(&self, p: &[u32]) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.mul[g * self.elements.len() + h]
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inv[g]
    }

    /// `g γ g⁻¹`
    pub fn conjugate(&self, g: usize, gamma: usize) -> usize {
        self.mul(self.mul(g, gamma), self.inv[g])
    }

    pub fn commute(&self, g: usize, h: usize) -> bool {
        self.mul(g, h) == self.mul(h, g)
    }

    pub fn centralizer(&self, gamma: usize) -> Vec<usize> {
        (0..self.order())
            .filter(|&g| self.commute(g, gamma))
            .collect()
    }

    /// Conjugacy classes by direct conjugation sweep, each sorted, ordered by
    /// their smallest element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut class_of = vec![usize::MAX; self.order()];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for gamma in 0..self.order() {
            if class_of[gamma] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut members: Vec<usize> = (0..self.order())
                .map(|g| self.conjugate(g, gamma))
                .collect();
            members.sort_unstable();
            members.dedup();
            for &c in &members {
                class_of[c] = id;
            }
            classes.push(members);
        }
        classes
    }
}

/// A permutation group acting on `0..num_points`.
#[derive(Debug, Clone)]
pub struct FiniteAction {
    group: PermGroup,
    num_points: usize,
    images: Vec<Perm>,
    labels: Vec<Partition>,
}

impl FiniteAction {
    /// `images[g]` is the permutation of the points induced by group element
    /// `g`. The map must be a homomorphism; this is checked on all products
    /// `g ∘ s` with `s` a generator, which determines it.
    pub fn new(group: PermGroup, num_points: usize, images: Vec<Perm>) -> Result<Self> {
        if num_points == 0 {
            return Err(Error::domain("point set is empty"));
        }
        if images.len() != group.order() {
            return Err(Error::domain(format!(
                "{} point permutations for a group of order {}",
                images.len(),
                group.order()
            )));
        }
        if let Some(bad) = images.iter().find(|p| !is_permutation(p, num_points)) {
            return Err(Error::domain(format!(
                "point image of length {} is not a permutation of {num_points} points",
                bad.len()
            )));
        }
        if images[0] != identity(num_points) {
            return Err(Error::domain("identity must act trivially"));
        }
        for g in 0..group.order() {
            for &s in group.generators() {
                let gs = group.mul(g, s);
                if images[gs] != compose(&images[g], &images[s]) {
                    return Err(Error::domain(format!(
                        "point images are not a homomorphism at ({g}, {s})"
                    )));
                }
            }
        }
        let labels = group.elements.iter().map(|e| cycle_type(e)).collect();
        Ok(FiniteAction {
            group,
            num_points,
            images,
            labels,
        })
    }

    /// The group acting on its own carrier set.
    pub fn on_carrier(group: PermGroup) -> Result<Self> {
        let images = group.elements.clone();
        let n = group.degree;
        Self::new(group, n, images)
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn num_points(&self) -> usize {
        self.num_points
    }

    pub fn image(&self, g: usize) -> &[u32] {
        &self.images[g]
    }

    /// `g · x`
    pub fn act(&self, g: usize, x: usize) -> usize {
        self.images[g][x] as usize
    }

    /// Cycle type of each element on the carrier set; for reporting only.
    pub fn label(&self, g: usize) -> &Partition {
        &self.labels[g]
    }

    /// `X^γ` for a group element given by its carrier permutation.
    pub fn fixed_points(&self, gamma: &[u32]) -> Result<Vec<usize>> {
        let g = self
            .group
            .index_of(gamma)
            .ok_or_else(|| Error::domain(format!("{gamma:?} is not an element of the group")))?;
        Ok(self.fixed_points_of(g))
    }

    /// `X^γ` for a group element given by index, ascending.
    pub fn fixed_points_of(&self, gamma: usize) -> Vec<usize> {
        self.images[gamma]
            .iter()
            .enumerate()
            .filter(|&(x, &y)| x == y as usize)
            .map(|(x, _)| x)
            .collect()
    }

    /// Orbits of the points (the ordinary quotient), each sorted, ordered by
    /// least element.
    pub fn point_orbits(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.num_points);
        for &s in self.group.generators() {
            for x in 0..self.num_points {
                uf.union(x, self.act(s, x));
            }
        }
        uf.classes()
    }

    /// Orbits of `X̂` under `g·(γ, x) = (gγg⁻¹, gx)`, by union-find over the
    /// generators. Pairs are listed in lexicographic order; each orbit is
    /// represented by its lexicographically least pair.
    pub fn extended_quotient_orbits(&self) -> PairOrbitSet {
        let order = self.group.order();
        let fixed: Vec<Vec<usize>> = (0..order).map(|g| self.fixed_points_of(g)).collect();
        let mut offsets = Vec::with_capacity(order + 1);
        offsets.push(0);
        for f in &fixed {
            offsets.push(offsets.last().unwrap() + f.len());
        }
        let pairs: Vec<(usize, usize)> = fixed
            .iter()
            .enumerate()
            .flat_map(|(g, xs)| xs.iter().map(move |&x| (g, x)))
            .collect();
        let locate = |gamma: usize, x: usize| -> usize {
            let pos = fixed[gamma]
                .binary_search(&x)
                .expect("translated pair is incident");
            offsets[gamma] + pos
        };

        let mut uf = UnionFind::new(pairs.len());
        for (i, &(gamma, x)) in pairs.iter().enumerate() {
            for &s in self.group.generators() {
                let j = locate(self.group.conjugate(s, gamma), self.act(s, x));
                uf.union(i, j);
            }
        }
        let orbits = uf.classes();
        let mut orbit_of = vec![0; pairs.len()];
        for (o, members) in orbits.iter().enumerate() {
            for &p in members {
                orbit_of[p] = o;
            }
        }
        PairOrbitSet {
            pairs,
            orbit_of,
            orbits,
        }
    }

    /// `(1/|Γ|) Σ_g #{(γ, x) : γx = x, gγg⁻¹ = γ, gx = x}`.
    pub fn burnside_pair_count(&self) -> Result<usize> {
        let order = self.group.order();
        let mut total = 0usize;
        for g in 0..order {
            for gamma in 0..order {
                if !self.group.commute(g, gamma) {
                    continue;
                }
                let (ig, igamma) = (&self.images[g], &self.images[gamma]);
                total += (0..self.num_points)
                    .filter(|&x| ig[x] as usize == x && igamma[x] as usize == x)
                    .count();
            }
        }
        if !total.is_multiple_of(order) {
            return Err(Error::consistency(format!(
                "Burnside sum {total} is not divisible by the group order {order}"
            )));
        }
        Ok(total / order)
    }
}

/// The incident pairs `(γ, x)` and their orbits.
#[derive(Debug, Clone)]
pub struct PairOrbitSet {
    /// `(group element index, point index)`, lexicographically sorted.
    pub pairs: Vec<(usize, usize)>,
    /// Orbit index of each pair.
    pub orbit_of: Vec<usize>,
    /// Pair indices of each orbit, sorted; orbits ordered by representative.
    pub orbits: Vec<Vec<usize>>,
}

impl PairOrbitSet {
    pub fn orbit_count(&self) -> usize {
        self.orbits.len()
    }

    /// The lexicographically least pair of an orbit.
    pub fn representative(&self, orbit: usize) -> (usize, usize) {
        self.pairs[self.orbits[orbit][0]]
    }

    /// Number of orbits whose pairs have `γ` in `class`. Conjugation keeps
    /// `γ` inside its class, so every orbit lies over exactly one class.
    pub fn count_over_class(&self, class: &[usize]) -> usize {
        (0..self.orbits.len())
            .filter(|&o| class.binary_search(&self.representative(o).0).is_ok())
            .count()
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    // The smaller index always becomes the root.
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra < rb {
            self.parent[rb] = ra;
        } else if rb < ra {
            self.parent[ra] = rb;
        }
    }

    fn classes(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut slot = vec![usize::MAX; n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            let r = self.find(x);
            if slot[r] == usize::MAX {
                slot[r] = out.len();
                out.push(Vec::new());
            }
            out[slot[r]].push(x);
        }
        out
    }
}
