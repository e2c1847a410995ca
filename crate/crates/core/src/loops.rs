//! Finite loops given by Cayley tables.
//!
//! Elements are `0..n` and element `0` is always the identity. All the
//! first-order predicates used elsewhere (Bol, AIP, Bruck, normality, the
//! center) are evaluated by direct scans of the table.

use std::collections::VecDeque;
use std::fmt::Write as _;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Line, Result};
use crate::perm::Perm;

pub struct CayleyLoop {
    n: usize,
    table: Vec<u32>,
    // ldiv[a*n + b] = a \ b, the x with a*x = b
    ldiv: Vec<u32>,
    // rdiv[b*n + a] = b / a, the x with x*a = b
    rdiv: Vec<u32>,
    bol: OnceLock<bool>,
}

impl Clone for CayleyLoop {
    fn clone(&self) -> Self {
        CayleyLoop {
            n: self.n,
            table: self.table.clone(),
            ldiv: self.ldiv.clone(),
            rdiv: self.rdiv.clone(),
            bol: self.bol.clone(),
        }
    }
}

impl PartialEq for CayleyLoop {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.table == other.table
    }
}

impl Eq for CayleyLoop {}

impl std::hash::Hash for CayleyLoop {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.table.hash(state);
    }
}

impl PartialOrd for CayleyLoop {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CayleyLoop {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.n, &self.table).cmp(&(other.n, &other.table))
    }
}

impl std::fmt::Debug for CayleyLoop {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CayleyLoop(n={}, {:?})", self.n, self.rows())
    }
}

/// A subloop, stored as the sorted list of its members (always containing 0).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SubloopSet {
    members: Vec<usize>,
}

impl SubloopSet {
    pub(crate) fn from_sorted(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        debug_assert_eq!(members.first(), Some(&0));
        SubloopSet { members }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_subset_of(&self, other: &SubloopSet) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn intersection(&self, other: &SubloopSet) -> SubloopSet {
        SubloopSet::from_sorted(self.members.iter().copied().filter(|&x| other.contains(x)).collect())
    }

    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for &x in &self.members {
            m[x] = true;
        }
        m
    }
}

/// A map between loops, `map[x]` being the image of `x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LoopHom {
    pub map: Vec<usize>,
}

impl LoopHom {
    pub fn identity(n: usize) -> Self {
        LoopHom { map: (0..n).collect() }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn is_homomorphism(&self, source: &CayleyLoop, target: &CayleyLoop) -> bool {
        let n = source.order();
        if self.map.len() != n || self.map.iter().any(|&v| v >= target.order()) {
            return false;
        }
        if self.map[0] != 0 {
            return false;
        }
        (0..n).all(|a| (0..n).all(|b| self.map[source.mul(a, b)] == target.mul(self.map[a], self.map[b])))
    }

    pub fn is_bijective(&self, target_order: usize) -> bool {
        if self.map.len() != target_order {
            return false;
        }
        let mut seen = vec![false; target_order];
        self.map
            .iter()
            .all(|&v| v < target_order && !std::mem::replace(&mut seen[v], true))
    }

    pub fn is_isomorphism(&self, source: &CayleyLoop, target: &CayleyLoop) -> bool {
        self.is_bijective(target.order()) && self.is_homomorphism(source, target)
    }

    pub fn kernel(&self) -> Vec<usize> {
        (0..self.map.len()).filter(|&x| self.map[x] == 0).collect()
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &LoopHom) -> LoopHom {
        LoopHom {
            map: self.map.iter().map(|&x| other.map[x]).collect(),
        }
    }

    pub fn inverse(&self) -> LoopHom {
        let mut inv = vec![0; self.map.len()];
        for (i, &v) in self.map.iter().enumerate() {
            inv[v] = i;
        }
        LoopHom { map: inv }
    }
}

impl CayleyLoop {
    /// Validates a Cayley table: Latin square with two-sided identity at 0.
    pub fn validate(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Shape("empty table".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Shape(format!("row {i} has {} entries, expected {n}", row.len())));
            }
            if let Some(&v) = row.iter().find(|&&v| v >= n) {
                return Err(Error::Shape(format!("entry {v} in row {i} out of range")));
            }
        }
        let flat: Vec<u32> = rows.iter().flatten().map(|&v| v as u32).collect();
        Self::from_flat(n, flat)
    }

    pub(crate) fn from_flat(n: usize, table: Vec<u32>) -> Result<Self> {
        let mut seen = vec![usize::MAX; n];
        for i in 0..n {
            for j in 0..n {
                let v = table[i * n + j] as usize;
                if seen[v] == i {
                    return Err(Error::NotLatinSquare {
                        line: Line::Row,
                        index: i,
                        value: v,
                    });
                }
                seen[v] = i;
            }
        }
        seen.fill(usize::MAX);
        for j in 0..n {
            for i in 0..n {
                let v = table[i * n + j] as usize;
                if seen[v] == j {
                    return Err(Error::NotLatinSquare {
                        line: Line::Col,
                        index: j,
                        value: v,
                    });
                }
                seen[v] = j;
            }
        }
        for i in 0..n {
            if table[i] as usize != i {
                return Err(Error::NoIdentity {
                    row: 0,
                    col: i,
                    got: table[i] as usize,
                });
            }
            if table[i * n] as usize != i {
                return Err(Error::NoIdentity {
                    row: i,
                    col: 0,
                    got: table[i * n] as usize,
                });
            }
        }
        Ok(Self::from_flat_unchecked(n, table))
    }

    pub(crate) fn from_flat_unchecked(n: usize, table: Vec<u32>) -> Self {
        let mut ldiv = vec![0u32; n * n];
        let mut rdiv = vec![0u32; n * n];
        for a in 0..n {
            for x in 0..n {
                let b = table[a * n + x] as usize;
                ldiv[a * n + b] = x as u32;
                rdiv[b * n + x] = a as u32;
            }
        }
        CayleyLoop {
            n,
            table,
            ldiv,
            rdiv,
            bol: OnceLock::new(),
        }
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let rows: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect();
        Self::validate(&rows)
    }

    pub fn cyclic(n: usize) -> Self {
        Self::from_fn(n, |i, j| (i + j) % n).expect("cyclic group table")
    }

    /// Parses the `.loop` text format: first non-comment line is `n`, then
    /// `n` rows of space-separated 0-based indices. Lines starting with `#`
    /// are comments.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim_start().starts_with('#') && !l.trim().is_empty());
        let (ln, first) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "missing order line".into(),
        })?;
        let n: usize = first.trim().parse().map_err(|e| Error::Parse {
            line: ln + 1,
            msg: format!("bad order: {e}"),
        })?;
        let mut rows = Vec::with_capacity(n);
        for (ln, line) in lines {
            let row = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>().map_err(|e| Error::Parse {
                        line: ln + 1,
                        msg: format!("bad entry {t:?}: {e}"),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        if rows.len() != n {
            return Err(Error::Parse {
                line: 0,
                msg: format!("expected {n} rows, found {}", rows.len()),
            });
        }
        Self::validate(&rows)
    }

    /// Serializes to the `.loop` format (ASCII, LF newlines, no comments).
    pub fn to_loop_string(&self) -> String {
        let mut s = String::with_capacity(self.n * self.n * 3 + 8);
        let _ = writeln!(s, "{}", self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                if j > 0 {
                    s.push(' ');
                }
                let _ = write!(s, "{}", self.mul(i, j));
            }
            s.push('\n');
        }
        s
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    /// `a \ b`: the unique `x` with `a*x = b`.
    #[inline]
    pub fn ldiv(&self, a: usize, b: usize) -> usize {
        self.ldiv[a * self.n + b] as usize
    }

    /// `b / a`: the unique `x` with `x*a = b`.
    #[inline]
    pub fn rdiv(&self, b: usize, a: usize) -> usize {
        self.rdiv[b * self.n + a] as usize
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.mul(i, j)).collect())
            .collect()
    }

    pub fn right_translation(&self, x: usize) -> Perm {
        Perm::from_images_unchecked((0..self.n).map(|y| self.mul(y, x) as u32).collect())
    }

    pub fn left_translation(&self, x: usize) -> Perm {
        Perm::from_images_unchecked((0..self.n).map(|y| self.mul(x, y) as u32).collect())
    }

    /// First triple `(z, x, y)` with `((z*x)*y)*x != z*((x*y)*x)`.
    pub fn bol_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                let w = self.mul(self.mul(x, y), x);
                for z in 0..n {
                    if self.mul(self.mul(self.mul(z, x), y), x) != self.mul(z, w) {
                        return Some((z, x, y));
                    }
                }
            }
        }
        None
    }

    pub fn is_bol(&self) -> bool {
        *self.bol.get_or_init(|| self.bol_violation().is_none())
    }

    pub fn associativity_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_violation().is_none()
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.n).all(|a| (a + 1..self.n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_abelian_group(&self) -> bool {
        self.is_commutative() && self.is_associative()
    }

    /// Two-sided inverses, or the first element lacking one.
    pub fn inverses(&self) -> Result<Vec<usize>> {
        (0..self.n)
            .map(|x| {
                let r = self.ldiv(x, 0);
                if self.mul(r, x) == 0 {
                    Ok(r)
                } else {
                    Err(Error::InversesUndefined(x))
                }
            })
            .collect()
    }

    /// First pair `(x, y)` with `(x*y)^-1 != x^-1 * y^-1`.
    pub fn aip_violation(&self) -> Result<Option<(usize, usize)>> {
        let inv = self.inverses()?;
        for x in 0..self.n {
            for y in 0..self.n {
                if inv[self.mul(x, y)] != self.mul(inv[x], inv[y]) {
                    return Ok(Some((x, y)));
                }
            }
        }
        Ok(None)
    }

    pub fn has_aip(&self) -> Result<bool> {
        Ok(self.aip_violation()?.is_none())
    }

    pub fn is_bruck(&self) -> bool {
        self.is_bol() && matches!(self.has_aip(), Ok(true))
    }

    /// Powers `x^0, x^1, ..., x^(d-1)` of `x` where `x^d = 1`.
    fn power_cycle(&self, x: usize) -> Vec<usize> {
        let mut seq = vec![0];
        let mut p = x;
        while p != 0 {
            seq.push(p);
            p = self.mul(p, x);
            debug_assert!(seq.len() <= self.n);
        }
        seq
    }

    pub fn element_order(&self, x: usize) -> Result<usize> {
        if !self.is_bol() {
            return Err(Error::NotBol);
        }
        Ok(self.power_cycle(x).len())
    }

    pub fn element_orders(&self) -> Result<Vec<usize>> {
        if !self.is_bol() {
            return Err(Error::NotBol);
        }
        Ok((0..self.n).map(|x| self.power_cycle(x).len()).collect())
    }

    /// `x^m` computed inside the cyclic group `<x>`; negative `m` allowed.
    pub fn power(&self, x: usize, m: i64) -> Result<usize> {
        if !self.is_bol() {
            return Err(Error::NotBol);
        }
        let cyc = self.power_cycle(x);
        let d = cyc.len() as i64;
        Ok(cyc[m.rem_euclid(d) as usize])
    }

    pub fn is_subloop(&self, set: &[usize]) -> bool {
        let mut mask = vec![false; self.n];
        for &x in set {
            if x >= self.n {
                return false;
            }
            mask[x] = true;
        }
        // A finite nonempty subset closed under the product is a subloop:
        // each R(a) restricts to an injection, hence a bijection, of the set.
        mask[0] && set.iter().all(|&a| set.iter().all(|&b| mask[self.mul(a, b)]))
    }

    pub fn as_subloop(&self, set: &[usize]) -> Result<SubloopSet> {
        if !self.is_subloop(set) {
            return Err(Error::NotSubloop);
        }
        let mut members = set.to_vec();
        members.sort_unstable();
        members.dedup();
        Ok(SubloopSet::from_sorted(members))
    }

    pub fn whole(&self) -> SubloopSet {
        SubloopSet::from_sorted((0..self.n).collect())
    }

    pub fn trivial_subloop(&self) -> SubloopSet {
        SubloopSet::from_sorted(vec![0])
    }

    /// Smallest subloop containing `gens` and the identity.
    pub fn subloop_generated(&self, gens: &[usize]) -> SubloopSet {
        let mut mask = vec![false; self.n];
        let mut members = vec![0];
        mask[0] = true;
        for &g in gens {
            if !mask[g] {
                mask[g] = true;
                members.push(g);
            }
        }
        let mut i = 0;
        while i < members.len() {
            let a = members[i];
            let mut j = 0;
            while j <= i {
                let b = members[j];
                for p in [self.mul(a, b), self.mul(b, a)] {
                    if !mask[p] {
                        mask[p] = true;
                        members.push(p);
                    }
                }
                j += 1;
            }
            i += 1;
        }
        members.sort_unstable();
        SubloopSet::from_sorted(members)
    }

    /// Checks `a*(Y*b) = Y*(a*b) = (a*Y)*b` for all `a, b`.
    pub fn is_normal_subloop(&self, y: &SubloopSet) -> Result<bool> {
        if !self.is_subloop(y.members()) {
            return Err(Error::NotSubloop);
        }
        let n = self.n;
        let mut s1 = vec![0usize; n];
        let mut stamp = 0usize;
        for a in 0..n {
            for b in 0..n {
                stamp += 1;
                let ab = self.mul(a, b);
                for &m in y.members() {
                    s1[self.mul(m, ab)] = stamp;
                }
                for &m in y.members() {
                    if s1[self.mul(a, self.mul(m, b))] != stamp || s1[self.mul(self.mul(a, m), b)] != stamp {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Class ids of the smallest congruence identifying every element of
    /// `seeds` with the identity. Classes are numbered by least member, so
    /// the class of 0 is 0.
    pub fn congruence(&self, seeds: &[usize]) -> Vec<usize> {
        let n = self.n;
        let mut uf = UnionFind::new(n);
        let mut work: VecDeque<(usize, usize)> = seeds.iter().map(|&s| (s, 0)).collect();
        while let Some((a, b)) = work.pop_front() {
            if !uf.union(a, b) {
                continue;
            }
            // For a finite loop, compatibility with the product already
            // forces compatibility with both divisions.
            for c in 0..n {
                work.push_back((self.mul(a, c), self.mul(b, c)));
                work.push_back((self.mul(c, a), self.mul(c, b)));
            }
        }
        let mut ids = vec![usize::MAX; n];
        let mut root_id = vec![usize::MAX; n];
        let mut next = 0;
        for x in 0..n {
            let r = uf.find(x);
            if root_id[r] == usize::MAX {
                root_id[r] = next;
                next += 1;
            }
            ids[x] = root_id[r];
        }
        ids
    }

    /// Smallest normal subloop containing `set`.
    pub fn normal_closure(&self, set: &[usize]) -> SubloopSet {
        let ids = self.congruence(set);
        SubloopSet::from_sorted((0..self.n).filter(|&x| ids[x] == 0).collect())
    }

    /// Quotient by a normal subloop, with the natural projection.
    pub fn factor_loop(&self, y: &SubloopSet) -> Result<(CayleyLoop, LoopHom)> {
        if !self.is_normal_subloop(y)? {
            return Err(Error::NotNormal);
        }
        Ok(self.factor_by_normal(y))
    }

    pub(crate) fn factor_by_normal(&self, y: &SubloopSet) -> (CayleyLoop, LoopHom) {
        let n = self.n;
        // cosets Y*x, numbered by least representative
        let mut class = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for x in 0..n {
            if class[x] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(x);
            for &m in y.members() {
                class[self.mul(m, x)] = id;
            }
        }
        let q = reps.len();
        let mut table = vec![0u32; q * q];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                table[i * q + j] = class[self.mul(a, b)] as u32;
            }
        }
        let quotient = CayleyLoop::from_flat(q, table).expect("quotient by a normal subloop is a loop");
        (quotient, LoopHom { map: class })
    }

    pub fn center(&self) -> SubloopSet {
        let n = self.n;
        let members = (0..n)
            .filter(|&a| {
                (0..n).all(|x| {
                    (0..n).all(|y| {
                        let v = self.mul(a, self.mul(x, y));
                        v == self.mul(x, self.mul(a, y))
                            && v == self.mul(self.mul(x, a), y)
                            && v == self.mul(x, self.mul(y, a))
                    })
                })
            })
            .collect();
        SubloopSet::from_sorted(members)
    }

    /// The subloop as a loop in its own right, elements relabelled by
    /// position in `sub.members()`.
    pub fn restrict(&self, sub: &SubloopSet) -> CayleyLoop {
        let m = sub.order();
        let pos = |x: usize| sub.members().binary_search(&x).expect("closed subloop");
        let mut table = vec![0u32; m * m];
        for (i, &a) in sub.members().iter().enumerate() {
            for (j, &b) in sub.members().iter().enumerate() {
                table[i * m + j] = pos(self.mul(a, b)) as u32;
            }
        }
        CayleyLoop::from_flat(m, table).expect("subloop restriction is a loop")
    }

    /// Direct product; the pair `(a, b)` is element `a * |other| + b`.
    pub fn direct_product(&self, other: &CayleyLoop) -> CayleyLoop {
        let (n1, n2) = (self.n, other.n);
        let n = n1 * n2;
        let mut table = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                let (a1, b1) = (x / n2, x % n2);
                let (a2, b2) = (y / n2, y % n2);
                table[x * n + y] = (self.mul(a1, a2) * n2 + other.mul(b1, b2)) as u32;
            }
        }
        CayleyLoop::from_flat_unchecked(n, table)
    }

    /// The opposite loop `x.y = y*x`.
    pub fn opposite(&self) -> CayleyLoop {
        let n = self.n;
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = self.mul(b, a) as u32;
            }
        }
        CayleyLoop::from_flat_unchecked(n, table)
    }

    /// Every subloop, sorted.
    pub fn all_subloops(&self) -> Vec<SubloopSet> {
        let mut found = std::collections::BTreeSet::new();
        let mut frontier = vec![self.trivial_subloop()];
        found.insert(self.trivial_subloop());
        while let Some(s) = frontier.pop() {
            let mask = s.mask(self.n);
            for x in 0..self.n {
                if mask[x] {
                    continue;
                }
                let mut gens = s.members().to_vec();
                gens.push(x);
                let t = self.subloop_generated(&gens);
                if found.insert(t.clone()) {
                    frontier.push(t);
                }
            }
        }
        found.into_iter().collect()
    }

    pub fn normal_subloops(&self) -> Vec<SubloopSet> {
        self.all_subloops()
            .into_iter()
            .filter(|s| self.is_normal_subloop(s).unwrap_or(false))
            .collect()
    }

    /// The minimal nontrivial normal subloops; each is the normal closure of
    /// any of its nonidentity elements.
    pub fn minimal_normal_subloops(&self) -> Vec<SubloopSet> {
        let mut closures: Vec<SubloopSet> = (1..self.n).map(|x| self.normal_closure(&[x])).collect();
        closures.sort();
        closures.dedup();
        closures
            .iter()
            .filter(|c| !closures.iter().any(|d| d.order() < c.order() && d.is_subset_of(c)))
            .cloned()
            .collect()
    }

    /// Join of two normal subloops (the normal closure of their union).
    pub fn normal_join(&self, a: &SubloopSet, b: &SubloopSet) -> SubloopSet {
        let mut gens = a.members().to_vec();
        gens.extend_from_slice(b.members());
        self.normal_closure(&gens)
    }

    /// `{a*b : a in A, b in B}` as a sorted set.
    pub fn product_set(&self, a: &SubloopSet, b: &SubloopSet) -> Vec<usize> {
        let mut mask = vec![false; self.n];
        for &x in a.members() {
            for &y in b.members() {
                mask[self.mul(x, y)] = true;
            }
        }
        (0..self.n).filter(|&x| mask[x]).collect()
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when already in the same class.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn s3() -> CayleyLoop {
        catalog::symmetric3()
    }

    #[test]
    fn validate_cyclic_three() {
        let c3 = CayleyLoop::validate(&[vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]).unwrap();
        assert_eq!(c3.order(), 3);
        assert!(c3.is_bruck());
    }

    #[test]
    fn validate_rejects_duplicates_and_missing_identity() {
        let err = CayleyLoop::validate(&[vec![0, 1, 2], vec![1, 2, 0], vec![0, 1, 1]]).unwrap_err();
        assert!(matches!(
            err,
            Error::NotLatinSquare {
                line: Line::Row,
                index: 2,
                value: 1
            }
        ));
        let err = CayleyLoop::validate(&[vec![1, 0], vec![0, 1]]).unwrap_err();
        assert!(matches!(err, Error::NoIdentity { row: 0, col: 0, got: 1 }));
        assert!(matches!(
            CayleyLoop::validate(&[vec![0, 1], vec![1]]),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn translations_of_c3() {
        let c3 = CayleyLoop::cyclic(3);
        assert_eq!(c3.right_translation(1).images(), &[1, 2, 0]);
        assert!(c3.right_translation(0).is_identity());
        assert!(c3.left_translation(0).is_identity());
    }

    #[test]
    fn groups_are_bol_and_s3_lacks_aip() {
        let g = s3();
        assert!(g.is_bol());
        assert!(!g.has_aip().unwrap());
        assert!(!g.is_bruck());
        assert!(CayleyLoop::cyclic(6).is_bruck());
    }

    #[test]
    fn aip_needs_inverses() {
        // order-5 loop without two-sided inverses for some element
        let l = CayleyLoop::validate(&[
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ])
        .unwrap();
        // every row has 0 on the diagonal so inverses exist here
        assert!(l.inverses().is_ok());
        let m = CayleyLoop::validate(&[
            vec![0, 1, 2, 3, 4],
            vec![1, 2, 0, 4, 3],
            vec![2, 3, 4, 0, 1],
            vec![3, 4, 1, 2, 0],
            vec![4, 0, 3, 1, 2],
        ])
        .unwrap();
        assert!(matches!(m.has_aip(), Err(Error::InversesUndefined(_))));
        assert!(matches!(m.element_order(1), Err(Error::NotBol)));
    }

    #[test]
    fn orders_and_powers() {
        let c4 = CayleyLoop::cyclic(4);
        assert_eq!(c4.element_order(1).unwrap(), 4);
        assert_eq!(c4.element_order(0).unwrap(), 1);
        assert_eq!(c4.power(1, -1).unwrap(), 3);
        assert_eq!(c4.power(3, 6).unwrap(), 2);
    }

    #[test]
    fn generated_subloops() {
        let c6 = CayleyLoop::cyclic(6);
        assert_eq!(c6.subloop_generated(&[2]).members(), &[0, 2, 4]);
        assert_eq!(c6.subloop_generated(&[]).members(), &[0]);
        assert_eq!(c6.all_subloops().len(), 4);
    }

    #[test]
    fn normality_and_quotients() {
        let c6 = CayleyLoop::cyclic(6);
        let y = c6.as_subloop(&[0, 3]).unwrap();
        assert!(c6.is_normal_subloop(&y).unwrap());
        let (q, pi) = c6.factor_loop(&y).unwrap();
        assert_eq!(q.order(), 3);
        assert!(pi.is_homomorphism(&c6, &q));
        assert_eq!(pi.kernel(), vec![0, 3]);
        let (q1, _) = c6.factor_loop(&c6.trivial_subloop()).unwrap();
        assert_eq!(q1, c6);

        let g = s3();
        let t = g.as_subloop(&[0, 3]).unwrap();
        assert!(!g.is_normal_subloop(&t).unwrap());
        assert!(matches!(g.factor_loop(&t), Err(Error::NotNormal)));
        assert!(matches!(
            g.is_normal_subloop(&SubloopSet::from_sorted(vec![0, 2])),
            Err(Error::NotSubloop)
        ));
        assert_eq!(g.normal_closure(&[3]).order(), 6);
        let r = (1..6).find(|&x| g.element_order(x).unwrap() == 3).unwrap();
        assert_eq!(g.normal_closure(&[r]).order(), 3);
    }

    #[test]
    fn centers() {
        assert_eq!(CayleyLoop::cyclic(5).center().order(), 5);
        assert_eq!(s3().center().members(), &[0]);
    }

    #[test]
    fn loop_text_roundtrip() {
        let c3 = CayleyLoop::cyclic(3);
        let s = c3.to_loop_string();
        assert_eq!(s, "3\n0 1 2\n1 2 0\n2 0 1\n");
        assert_eq!(CayleyLoop::parse(&format!("# a comment\n{s}")).unwrap(), c3);
        assert!(matches!(CayleyLoop::parse("2\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(CayleyLoop::parse("2\n0 x\n1 0\n"), Err(Error::Parse { .. })));
    }
}
