//! Fully enumerated finite groups.
//!
//! Elements are `0..m` with the identity at 0. Subsets of a group are plain
//! sorted `Vec<usize>`s; the subgroup operators below all take and return
//! that representation.

use std::collections::{BTreeSet, HashMap};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Perm;

pub type ElementSet = Vec<usize>;

pub struct FiniteGroup {
    m: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    perms: Option<Vec<Perm>>,
    perm_index: Option<HashMap<Perm, usize>>,
    labels: Option<Vec<String>>,
    gens: OnceLock<Vec<usize>>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteGroup(order={})", self.m)
    }
}

impl Clone for FiniteGroup {
    fn clone(&self) -> Self {
        FiniteGroup {
            m: self.m,
            mul: self.mul.clone(),
            inv: self.inv.clone(),
            perms: self.perms.clone(),
            perm_index: self.perm_index.clone(),
            labels: self.labels.clone(),
            gens: self.gens.clone(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct GroupJson {
    order: usize,
    mul: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    labels: Option<Vec<String>>,
}

impl FiniteGroup {
    /// Validates a multiplication table: Latin square, identity at 0,
    /// associative (Light's test against a generating set, which is exact).
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self> {
        let m = rows.len();
        if m == 0 || rows.iter().any(|r| r.len() != m || r.iter().any(|&v| v >= m)) {
            return Err(Error::Shape("group table must be square with entries in range".into()));
        }
        let flat: Vec<u32> = rows.iter().flatten().map(|&v| v as u32).collect();
        // the loop validator covers the Latin and identity checks
        crate::loops::CayleyLoop::from_flat(m, flat.clone())?;
        let g = Self::from_flat_unchecked(m, flat);
        let gens = g.generators().to_vec();
        for a in 0..m {
            for &s in &gens {
                let as_ = g.mul(a, s);
                for b in 0..m {
                    if g.mul(as_, b) != g.mul(a, g.mul(s, b)) {
                        return Err(Error::NotGroup(format!("({a}*{s})*{b} != {a}*({s}*{b})")));
                    }
                }
            }
        }
        Ok(g)
    }

    pub(crate) fn from_flat_unchecked(m: usize, mul: Vec<u32>) -> Self {
        let mut inv = vec![0u32; m];
        for a in 0..m {
            for b in 0..m {
                if mul[a * m + b] == 0 {
                    inv[a] = b as u32;
                    break;
                }
            }
        }
        FiniteGroup {
            m,
            mul,
            inv,
            perms: None,
            perm_index: None,
            labels: None,
            gens: OnceLock::new(),
        }
    }

    pub fn from_fn(m: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let mut mul = vec![0u32; m * m];
        for a in 0..m {
            for b in 0..m {
                mul[a * m + b] = f(a, b) as u32;
            }
        }
        Self::from_flat_unchecked(m, mul)
    }

    /// Builds the table of a closed set of permutations (identity first).
    /// `base` is a list of points whose images determine each element.
    pub fn from_perms(elements: Vec<Perm>, base: Vec<usize>) -> Result<Self> {
        let m = elements.len();
        if m == 0 || !elements[0].is_identity() {
            return Err(Error::NotGroup("identity must come first".into()));
        }
        let key = |images: &mut dyn Iterator<Item = usize>| -> Vec<u32> { images.map(|v| v as u32).collect() };
        let mut by_base: HashMap<Vec<u32>, usize> = HashMap::with_capacity(m);
        for (i, e) in elements.iter().enumerate() {
            if by_base.insert(key(&mut base.iter().map(|&p| e.apply(p))), i).is_some() {
                return Err(Error::NotGroup("base does not separate elements".into()));
            }
        }
        let mut mul = vec![0u32; m * m];
        for (a, ea) in elements.iter().enumerate() {
            let ia: Vec<usize> = base.iter().map(|&p| ea.apply(p)).collect();
            for (b, eb) in elements.iter().enumerate() {
                let k = key(&mut ia.iter().map(|&q| eb.apply(q)));
                mul[a * m + b] = *by_base
                    .get(&k)
                    .ok_or_else(|| Error::NotGroup("permutation set not closed".into()))?
                    as u32;
            }
        }
        let mut g = Self::from_flat_unchecked(m, mul);
        g.perm_index = Some(elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect());
        g.perms = Some(elements);
        Ok(g)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.m);
        self.labels = Some(labels);
        self
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(GroupJson {
            order: self.m,
            mul: self.rows(),
            labels: self.labels.clone(),
        })
        .expect("group json")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let j: GroupJson = serde_json::from_value(v.clone())?;
        if j.order != j.mul.len() {
            return Err(Error::Shape(format!("order {} but {} rows", j.order, j.mul.len())));
        }
        let g = Self::from_table(&j.mul)?;
        Ok(match j.labels {
            Some(l) if l.len() == g.m => g.with_labels(l),
            Some(_) => return Err(Error::Shape("label count mismatch".into())),
            None => g,
        })
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.m)
            .map(|a| (0..self.m).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    pub fn order(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.m + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn pow(&self, a: usize, e: i64) -> usize {
        let (mut base, mut e) = if e < 0 { (self.inv(a), -e) } else { (a, e) };
        let mut acc = 0;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut p = a;
        while p != 0 {
            p = self.mul(p, a);
            k += 1;
        }
        k
    }

    /// `h^g = g^-1 h g`.
    #[inline]
    pub fn conj(&self, h: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), h), g)
    }

    /// `[a, b] = a^-1 b^-1 a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn perm(&self, i: usize) -> Option<&Perm> {
        self.perms.as_ref().map(|p| &p[i])
    }

    pub fn perms(&self) -> Option<&[Perm]> {
        self.perms.as_deref()
    }

    pub fn index_of_perm(&self, p: &Perm) -> Option<usize> {
        self.perm_index.as_ref()?.get(p).copied()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn all(&self) -> ElementSet {
        (0..self.m).collect()
    }

    pub fn mask(&self, set: &[usize]) -> Vec<bool> {
        let mut mask = vec![false; self.m];
        for &x in set {
            mask[x] = true;
        }
        mask
    }

    /// A small generating set, chosen greedily in index order.
    pub fn generators(&self) -> &[usize] {
        self.gens.get_or_init(|| self.generators_of(&self.all()))
    }

    /// Greedy generating set of the subgroup `sub`.
    pub fn generators_of(&self, sub: &[usize]) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = vec![0usize];
        let mut mask = self.mask(&span);
        // prefer high-order elements so fewer generators are needed
        let mut cands: Vec<usize> = sub.iter().copied().filter(|&x| x != 0).collect();
        cands.sort_by_key(|&x| (std::cmp::Reverse(self.element_order(x)), x));
        for x in cands {
            if span.len() == sub.len() {
                break;
            }
            if !mask[x] {
                gens.push(x);
                span = self.subgroup_generated(&gens);
                mask = self.mask(&span);
            }
        }
        gens
    }

    pub fn subgroup_generated(&self, gens: &[usize]) -> ElementSet {
        let mut mask = vec![false; self.m];
        let mut elems = vec![0usize];
        mask[0] = true;
        let gens: Vec<usize> = gens.iter().copied().filter(|&g| g != 0).collect();
        let mut i = 0;
        while i < elems.len() {
            let x = elems[i];
            for &s in &gens {
                let y = self.mul(x, s);
                if !mask[y] {
                    mask[y] = true;
                    elems.push(y);
                }
            }
            i += 1;
        }
        elems.sort_unstable();
        elems
    }

    pub fn is_subgroup(&self, set: &[usize]) -> bool {
        if set.is_empty() || set.iter().any(|&x| x >= self.m) {
            return false;
        }
        let mask = self.mask(set);
        mask[0] && set.iter().all(|&a| set.iter().all(|&b| mask[self.mul(a, b)]))
    }

    /// Normal closure of `set` inside the subgroup `sub`.
    pub fn normal_closure_in(&self, sub: &[usize], set: &[usize]) -> ElementSet {
        let sub_gens = self.generators_of(sub);
        let mut gens: Vec<usize> = set.iter().copied().filter(|&x| x != 0).collect();
        let mut n = self.subgroup_generated(&gens);
        let mut mask = self.mask(&n);
        let mut i = 0;
        while i < gens.len() {
            let x = gens[i];
            for &g in &sub_gens {
                let y = self.conj(x, g);
                if !mask[y] {
                    gens.push(y);
                    n = self.subgroup_generated(&gens);
                    mask = self.mask(&n);
                }
            }
            i += 1;
        }
        n
    }

    pub fn normal_closure(&self, set: &[usize]) -> ElementSet {
        self.normal_closure_in(&self.all(), set)
    }

    /// Whether `n` is a subgroup normalised by every element of `sub`.
    pub fn is_normal_in(&self, sub: &[usize], n: &[usize]) -> bool {
        if !self.is_subgroup(n) {
            return false;
        }
        let mask = self.mask(n);
        let gens = self.generators_of(sub);
        n.iter().all(|&x| gens.iter().all(|&g| mask[self.conj(x, g)]))
    }

    pub fn is_normal_subgroup(&self, n: &[usize]) -> bool {
        self.is_normal_in(&self.all(), n)
    }

    /// Right cosets `N g` numbered by least element; also the representatives.
    pub fn right_cosets(&self, sub: &[usize], within: &[usize]) -> (HashMap<usize, usize>, Vec<usize>) {
        let mut id = HashMap::with_capacity(within.len());
        let mut reps = Vec::new();
        for &g in within {
            if id.contains_key(&g) {
                continue;
            }
            let c = reps.len();
            reps.push(g);
            for &h in sub {
                id.insert(self.mul(h, g), c);
            }
        }
        (id, reps)
    }

    /// Right coset ids over the whole group, as a dense array.
    pub fn coset_ids(&self, sub: &[usize]) -> (Vec<usize>, Vec<usize>) {
        let mut id = vec![usize::MAX; self.m];
        let mut reps = Vec::new();
        for g in 0..self.m {
            if id[g] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(g);
            for &h in sub {
                id[self.mul(h, g)] = c;
            }
        }
        (id, reps)
    }

    /// `G/N` with the natural projection.
    pub fn quotient_group(&self, n: &[usize]) -> Result<(FiniteGroup, Vec<usize>)> {
        if !self.is_normal_subgroup(n) {
            return Err(Error::NotNormal);
        }
        Ok(self.quotient_unchecked(n))
    }

    pub(crate) fn quotient_unchecked(&self, n: &[usize]) -> (FiniteGroup, Vec<usize>) {
        let (id, reps) = self.coset_ids(n);
        let q = reps.len();
        let mut mul = vec![0u32; q * q];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                mul[i * q + j] = id[self.mul(a, b)] as u32;
            }
        }
        (FiniteGroup::from_flat_unchecked(q, mul), id)
    }

    /// The subgroup as a group in its own right; `embedding[i]` is the
    /// ambient index of its element `i`.
    pub fn subgroup_as_group(&self, sub: &[usize]) -> Result<(FiniteGroup, Vec<usize>)> {
        if !self.is_subgroup(sub) {
            return Err(Error::NotSubgroup);
        }
        let mut pos = HashMap::with_capacity(sub.len());
        for (i, &x) in sub.iter().enumerate() {
            pos.insert(x, i);
        }
        let k = sub.len();
        let mut mul = vec![0u32; k * k];
        for (i, &a) in sub.iter().enumerate() {
            for (j, &b) in sub.iter().enumerate() {
                mul[i * k + j] = pos[&self.mul(a, b)] as u32;
            }
        }
        let mut g = FiniteGroup::from_flat_unchecked(k, mul);
        if let Some(p) = &self.perms {
            let elems: Vec<Perm> = sub.iter().map(|&x| p[x].clone()).collect();
            g.perm_index = Some(elems.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect());
            g.perms = Some(elems);
        }
        Ok((g, sub.to_vec()))
    }

    /// `ker_H(G)`: the largest normal subgroup of G inside `h`.
    pub fn core_in(&self, h: &[usize]) -> Result<ElementSet> {
        if !self.is_subgroup(h) {
            return Err(Error::NotSubgroup);
        }
        // H^g only depends on the right coset Hg
        let (_, reps) = self.coset_ids(h);
        let mut core = self.mask(h);
        let mut hmask = self.mask(h);
        for &g in &reps {
            // x in H^g  iff  g x g^-1 in H
            for (x, c) in core.iter_mut().enumerate() {
                if *c && !hmask[self.conj(x, self.inv(g))] {
                    *c = false;
                }
            }
        }
        hmask.clear();
        Ok((0..self.m).filter(|&x| core[x]).collect())
    }

    /// Join of all normal subgroups generated by single elements whose
    /// normal closure has order divisible only by primes satisfying `ok`.
    fn o_pi(&self, ok: impl Fn(usize) -> bool) -> ElementSet {
        let mut acc = vec![0usize];
        let mut acc_mask = self.mask(&acc);
        let mut tested = vec![false; self.m];
        for x in 1..self.m {
            if acc_mask[x] || tested[x] || !prime_factors(self.element_order(x)).into_iter().all(&ok) {
                continue;
            }
            for y in self.conjugacy_class(x) {
                tested[y] = true;
            }
            let ncl = self.normal_closure(&[x]);
            if prime_factors(ncl.len()).into_iter().all(&ok) {
                let mut gens = self.generators_of(&acc);
                gens.extend(self.generators_of(&ncl));
                acc = self.subgroup_generated(&gens);
                acc_mask = self.mask(&acc);
            }
        }
        acc
    }

    /// `O_2(G)`, the largest normal 2-subgroup.
    pub fn o2_group(&self) -> ElementSet {
        self.o_pi(|p| p == 2)
    }

    /// `O(G)`, the largest normal subgroup of odd order.
    pub fn o_odd_group(&self) -> ElementSet {
        self.o_pi(|p| p != 2)
    }

    /// Subgroup generated by the elements whose order satisfies `pred`.
    pub fn generated_by_orders(&self, pred: impl Fn(usize) -> bool) -> ElementSet {
        let els: Vec<usize> = (0..self.m).filter(|&x| pred(self.element_order(x))).collect();
        let gens = self.generators_of(&self.subgroup_generated(&els));
        self.subgroup_generated(&gens)
    }

    pub fn conjugacy_class(&self, x: usize) -> ElementSet {
        let gens = self.generators();
        let mut mask = vec![false; self.m];
        let mut cls = vec![x];
        mask[x] = true;
        let mut i = 0;
        while i < cls.len() {
            let y = cls[i];
            for &g in gens {
                let z = self.conj(y, g);
                if !mask[z] {
                    mask[z] = true;
                    cls.push(z);
                }
            }
            i += 1;
        }
        cls.sort_unstable();
        cls
    }

    /// Commutator subgroup of the subgroup `sub`.
    pub fn derived_subgroup_of(&self, sub: &[usize]) -> ElementSet {
        let gens = self.generators_of(sub);
        let mut comms = Vec::new();
        for &a in &gens {
            for &b in &gens {
                comms.push(self.commutator(a, b));
            }
        }
        self.normal_closure_in(sub, &comms)
    }

    pub fn derived_series(&self) -> Vec<ElementSet> {
        let mut series = vec![self.all()];
        loop {
            let last = series.last().unwrap();
            let next = self.derived_subgroup_of(last);
            if next.len() == last.len() {
                break;
            }
            series.push(next);
        }
        series
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().map(|s| s.len()) == Some(1)
    }

    pub fn is_solvable_subgroup(&self, sub: &[usize]) -> bool {
        let mut cur = sub.to_vec();
        loop {
            if cur.len() == 1 {
                return true;
            }
            let next = self.derived_subgroup_of(&cur);
            if next.len() == cur.len() {
                return false;
            }
            cur = next;
        }
    }

    pub fn center(&self) -> ElementSet {
        self.centralizer(&self.all())
    }

    /// Elements commuting with every member of `set`.
    pub fn centralizer(&self, set: &[usize]) -> ElementSet {
        let gens = if self.is_subgroup(set) {
            self.generators_of(set)
        } else {
            set.to_vec()
        };
        (0..self.m)
            .filter(|&g| gens.iter().all(|&s| self.mul(g, s) == self.mul(s, g)))
            .collect()
    }

    /// Elements `g` with `set^g = set`.
    pub fn normalizer(&self, set: &[usize]) -> ElementSet {
        let mask = self.mask(set);
        (0..self.m)
            .filter(|&g| set.iter().all(|&s| mask[self.conj(s, g)]))
            .collect()
    }

    pub fn is_abelian_set(&self, set: &[usize]) -> bool {
        set.iter()
            .all(|&a| set.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Every subgroup, by iterated joins with cyclic subgroups. Intended for
    /// small groups (used by exhaustive checks).
    pub fn all_subgroups(&self) -> Vec<ElementSet> {
        let mut seen: BTreeSet<ElementSet> = BTreeSet::new();
        let mut stack = vec![(vec![0usize], Vec::<usize>::new())];
        seen.insert(vec![0]);
        while let Some((s, gens)) = stack.pop() {
            let mask = self.mask(&s);
            let mut tried = vec![false; self.m];
            for x in 1..self.m {
                if mask[x] || tried[x] {
                    continue;
                }
                let mut g2 = gens.clone();
                g2.push(x);
                let t = self.subgroup_generated(&g2);
                // elements of t outside s give the same join
                for &y in &t {
                    if !mask[y]
                        && self.subgroup_generated(&{
                            let mut g3 = gens.clone();
                            g3.push(y);
                            g3
                        }) == t
                    {
                        tried[y] = true;
                    }
                }
                if seen.insert(t.clone()) {
                    stack.push((t, g2));
                }
            }
        }
        seen.into_iter().collect()
    }

    pub fn normal_subgroups(&self) -> Vec<ElementSet> {
        self.all_subgroups()
            .into_iter()
            .filter(|s| self.is_normal_subgroup(s))
            .collect()
    }

    /// Direct product; the pair `(a, b)` is element `a * |other| + b`.
    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let n2 = other.m;
        FiniteGroup::from_fn(self.m * n2, |x, y| {
            self.mul(x / n2, y / n2) * n2 + other.mul(x % n2, y % n2)
        })
    }

    pub fn cyclic(n: usize) -> FiniteGroup {
        FiniteGroup::from_fn(n, |a, b| (a + b) % n)
    }

    /// `N : C_k` where the generator of `C_k` acts on `N` by the
    /// automorphism `phi` (given as an element map with `phi^k = 1`).
    /// Element `(x, j)` is `j * |N| + x` and multiplies as
    /// `(x, i)(y, j) = (x * phi^i(y), i + j)`.
    pub fn semidirect_cyclic(n: &FiniteGroup, phi: &[usize], k: usize) -> FiniteGroup {
        let m = n.order();
        let mut powers = vec![(0..m).collect::<Vec<usize>>()];
        for i in 1..k {
            let prev = &powers[i - 1];
            powers.push((0..m).map(|x| phi[prev[x]]).collect());
        }
        assert!((0..m).all(|x| phi[powers[k - 1][x]] == x), "phi^k must be the identity");
        FiniteGroup::from_fn(m * k, |a, b| {
            let (x, i) = (a % m, a / m);
            let (y, j) = (b % m, b / m);
            ((i + j) % k) * m + n.mul(x, powers[i][y])
        })
    }

    /// Checks that `image` is an automorphism.
    pub fn is_automorphism(&self, image: &[usize]) -> bool {
        if image.len() != self.m || image[0] != 0 {
            return false;
        }
        let mut seen = vec![false; self.m];
        if !image
            .iter()
            .all(|&v| v < self.m && !std::mem::replace(&mut seen[v], true))
        {
            return false;
        }
        let gens = self.generators();
        (0..self.m).all(|a| {
            gens.iter()
                .all(|&s| image[self.mul(a, s)] == self.mul(image[a], image[s]))
        })
    }
}

impl FiniteGroup {
    /// Every automorphism `t` with `t^2 = 1`, identity included, in a
    /// deterministic order. Backtracks over images of unmapped elements; each
    /// choice `t(x) = y` forces `t(y) = x`.
    pub fn involutory_automorphisms(&self) -> Vec<Vec<usize>> {
        let m = self.m;
        let orders: Vec<usize> = (0..m).map(|x| self.element_order(x)).collect();
        let mut out = Vec::new();
        let mut map = vec![usize::MAX; m];
        map[0] = 0;
        let mut dom = vec![0usize];
        self.invol_search(&orders, &mut map, &mut dom, &mut out);
        out
    }

    fn invol_search(&self, orders: &[usize], map: &mut Vec<usize>, dom: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let Some(x) = (0..self.m).find(|&x| map[x] == usize::MAX) else {
            out.push(map.clone());
            return;
        };
        for y in 0..self.m {
            // images of unmapped elements are unmapped too, except y = x
            if orders[y] != orders[x] || (map[y] != usize::MAX) {
                continue;
            }
            let saved = dom.len();
            let saved_map = map.clone();
            if self.invol_assign(x, y, orders, map, dom) && self.invol_close(orders, map, dom) {
                self.invol_search(orders, map, dom, out);
            }
            dom.truncate(saved);
            *map = saved_map;
        }
    }

    fn invol_assign(&self, x: usize, y: usize, orders: &[usize], map: &mut [usize], dom: &mut Vec<usize>) -> bool {
        for (a, b) in [(x, y), (y, x)] {
            if map[a] == usize::MAX {
                if orders[a] != orders[b] {
                    return false;
                }
                map[a] = b;
                dom.push(a);
            } else if map[a] != b {
                return false;
            }
        }
        true
    }

    fn invol_close(&self, orders: &[usize], map: &mut [usize], dom: &mut Vec<usize>) -> bool {
        let mut i = 0;
        while i < dom.len() {
            let a = dom[i];
            for j in 0..=i {
                let b = dom[j];
                for (p, q) in [(a, b), (b, a)] {
                    let prod = self.mul(p, q);
                    let img = self.mul(map[p], map[q]);
                    if map[prod] == usize::MAX {
                        // injectivity: img is unmapped iff its preimage is
                        if map[img] != usize::MAX && map[img] != prod {
                            return false;
                        }
                        if !self.invol_assign(prod, img, orders, map, dom) {
                            return false;
                        }
                    } else if map[prod] != img {
                        return false;
                    }
                }
            }
            i += 1;
        }
        true
    }
}

pub fn is_power_of_two(n: usize) -> bool {
    n.is_power_of_two()
}

pub fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut ps = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            ps.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        ps.push(n);
    }
    ps
}

pub(crate) fn intersect(a: &[usize], b: &[usize]) -> ElementSet {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

pub(crate) fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}
