//! Deterministic Schreier-Sims.
//!
//! New base points are always the smallest point moved by the residue that
//! forced them, so identical generator lists give identical chains.

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::perm::Perm;

#[derive(Clone, Debug)]
struct Level {
    point: usize,
    gens: Vec<Perm>,
    orbit: Vec<usize>,
    // transversal[b] maps `point` to `b`
    transversal: Vec<Option<Perm>>,
}

impl Level {
    fn new(point: usize, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        transversal[point] = Some(Perm::identity(degree));
        Level {
            point,
            gens: Vec::new(),
            orbit: vec![point],
            transversal,
        }
    }

    fn rebuild_orbit(&mut self) {
        let degree = self.transversal.len();
        self.transversal.iter_mut().for_each(|t| *t = None);
        self.transversal[self.point] = Some(Perm::identity(degree));
        self.orbit = vec![self.point];
        let mut i = 0;
        while i < self.orbit.len() {
            let b = self.orbit[i];
            let ub = self.transversal[b].clone().unwrap();
            for s in &self.gens {
                let c = s.apply(b);
                if self.transversal[c].is_none() {
                    self.transversal[c] = Some(ub.then(s));
                    self.orbit.push(c);
                }
            }
            i += 1;
        }
    }
}

/// A permutation group held as a base and strong generating set.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    levels: Vec<Level>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: &[Perm]) -> Self {
        Self::with_base_prefix(degree, generators, &[])
    }

    /// Builds the chain with the given points first in the base.
    pub fn with_base_prefix(degree: usize, generators: &[Perm], prefix: &[usize]) -> Self {
        assert!(
            generators.iter().all(|g| g.degree() == degree),
            "generator degree mismatch"
        );
        let gens: Vec<Perm> = generators.iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut levels: Vec<Level> = prefix.iter().map(|&p| Level::new(p, degree)).collect();
        for g in &gens {
            if !levels.iter().any(|l| g.apply(l.point) != l.point) {
                let p = first_moved_outside(g, &levels).expect("nonidentity moves a point");
                levels.push(Level::new(p, degree));
            }
        }
        // S^(i) = generators fixing the first i-1 base points
        for g in &gens {
            for i in 0..levels.len() {
                if levels[..i].iter().all(|l| g.apply(l.point) == l.point) {
                    levels[i].gens.push(g.clone());
                }
            }
        }
        for l in &mut levels {
            l.rebuild_orbit();
        }
        let mut group = PermGroup {
            degree,
            generators: gens,
            levels,
        };
        group.schreier_sims();
        group
    }

    fn sift(&self, mut g: Perm, from: usize) -> (Perm, usize) {
        for (i, l) in self.levels.iter().enumerate().skip(from) {
            let b = g.apply(l.point);
            match &l.transversal[b] {
                None => return (g, i),
                Some(u) => g = g.then(&u.inverse()),
            }
        }
        (g, self.levels.len())
    }

    fn schreier_sims(&mut self) {
        if self.levels.is_empty() {
            return;
        }
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let iu = i as usize;
            let mut restart = None;
            'scan: for &beta in &self.levels[iu].orbit.clone() {
                let u_beta = self.levels[iu].transversal[beta].clone().unwrap();
                for s in &self.levels[iu].gens.clone() {
                    let c = s.apply(beta);
                    let u_c = self.levels[iu].transversal[c].clone().unwrap();
                    let h = u_beta.then(s).then(&u_c.inverse());
                    let (res, j) = self.sift(h, iu + 1);
                    if j < self.levels.len() || !res.is_identity() {
                        if j == self.levels.len() {
                            let p = first_moved_outside(&res, &self.levels).expect("residue moves a point");
                            self.levels.push(Level::new(p, self.degree));
                        }
                        for l in iu + 1..=j {
                            self.levels[l].gens.push(res.clone());
                            self.levels[l].rebuild_orbit();
                        }
                        restart = Some(j);
                        break 'scan;
                    }
                }
            }
            match restart {
                Some(j) => i = j as isize,
                None => i -= 1,
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn strong_generators(&self) -> Vec<Perm> {
        let mut all: Vec<Perm> = self.levels.iter().flat_map(|l| l.gens.iter().cloned()).collect();
        all.sort();
        all.dedup();
        all
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        if p.degree() != self.degree {
            return false;
        }
        let (res, j) = self.sift(p.clone(), 0);
        j == self.levels.len() && res.is_identity()
    }

    /// Stabilizer of `pt`, from a chain whose base starts at `pt`.
    pub fn point_stabilizer(&self, pt: usize) -> PermGroup {
        let rebased = PermGroup::with_base_prefix(self.degree, &self.generators, &[pt]);
        let gens = rebased.levels.get(1).map(|l| l.gens.clone()).unwrap_or_default();
        PermGroup::new(self.degree, &gens)
    }

    /// All elements, identity first, as products of transversal elements.
    pub fn elements(&self) -> Vec<Perm> {
        let mut elems = vec![Perm::identity(self.degree)];
        for l in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(elems.len() * l.orbit.len());
            for &b in &l.orbit {
                let u = l.transversal[b].as_ref().unwrap();
                for e in &elems {
                    next.push(e.then(u));
                }
            }
            elems = next;
        }
        elems
    }

    /// Fully enumerates the group into a multiplication-table group whose
    /// elements keep their permutations as tags.
    pub fn enumerate(&self, cap: u128) -> Result<FiniteGroup> {
        let order = self.order();
        if order > cap {
            return Err(Error::CapExceeded { order, cap });
        }
        FiniteGroup::from_perms(self.elements(), self.base())
    }
}

fn first_moved_outside(g: &Perm, levels: &[Level]) -> Option<usize> {
    (0..g.degree()).find(|&p| g.apply(p) != p && !levels.iter().any(|l| l.point == p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Perm {
        Perm::from_images(v.to_vec()).unwrap()
    }

    #[test]
    fn small_orders() {
        assert_eq!(PermGroup::new(3, &[p(&[1, 2, 0])]).order(), 3);
        assert_eq!(PermGroup::new(3, &[]).order(), 1);
        let s3 = PermGroup::new(3, &[p(&[1, 2, 0]), p(&[1, 0, 2])]);
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.point_stabilizer(0).order(), 2);
        let s5 = PermGroup::new(5, &[p(&[1, 2, 3, 4, 0]), p(&[1, 0, 2, 3, 4])]);
        assert_eq!(s5.order(), 120);
        assert!(s5.contains(&p(&[4, 3, 2, 1, 0])));
        let a4 = PermGroup::new(4, &[p(&[1, 2, 0, 3]), p(&[0, 2, 3, 1])]);
        assert_eq!(a4.order(), 12);
        assert!(!a4.contains(&p(&[1, 0, 2, 3])));
    }

    #[test]
    fn regular_action_has_trivial_stabilizers() {
        let c6 = PermGroup::new(6, &[p(&[1, 2, 3, 4, 5, 0])]);
        for pt in 0..6 {
            assert_eq!(c6.point_stabilizer(pt).order(), 1);
        }
        assert_eq!(c6.elements().len(), 6);
        assert!(c6.elements()[0].is_identity());
    }
}
