//! Loop folders `(G, H, K)`: `K` is a right transversal of every conjugate
//! `H^g`. Subfolders live in the same ambient group, so a folder also
//! records its carrier subgroup `G` inside that group.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{intersect, is_subset, ElementSet, FiniteGroup};
use crate::iso::loops_isomorphic;
use crate::loops::{CayleyLoop, SubloopSet};
use crate::PermGroup;

const NONE: usize = usize::MAX;

#[derive(Clone, Debug)]
pub struct LoopFolder {
    group: Arc<FiniteGroup>,
    carrier: ElementSet,
    h: ElementSet,
    k: ElementSet,
}

impl PartialEq for LoopFolder {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group)
            && self.carrier == other.carrier
            && self.h == other.h
            && self.k == other.k
    }
}

/// Right coset ids of `h` inside `carrier`; `NONE` outside the carrier.
fn coset_ids(gr: &FiniteGroup, carrier: &[usize], h: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut id = vec![NONE; gr.order()];
    let mut reps = Vec::new();
    for &g in carrier {
        if id[g] != NONE {
            continue;
        }
        let c = reps.len();
        reps.push(g);
        for &x in h {
            id[gr.mul(x, g)] = c;
        }
    }
    (id, reps)
}

fn check_parts(gr: &FiniteGroup, carrier: &[usize], h: &[usize], k: &[usize]) -> Result<()> {
    if !gr.is_subgroup(carrier) || !gr.is_subgroup(h) || !is_subset(h, carrier) {
        return Err(Error::NotSubgroup);
    }
    if k.first() != Some(&0) || !is_subset(k, carrier) || k.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Shape("K must be a sorted subset of G containing 0".into()));
    }
    Ok(())
}

/// K-representative for every coset of `H^g`, `g` ranging over `gs`.
fn transversal_check(gr: &FiniteGroup, cid: &[usize], index: usize, k: &[usize], gs: &[usize]) -> Result<()> {
    if k.len() != index {
        return Err(Error::NotTransversal { g: 0, coset: NONE });
    }
    let mut hit = vec![NONE; index];
    for &g in gs {
        // k lies in the coset H^g x iff g k lies in H g x
        for &x in k {
            let c = cid[gr.mul(g, x)];
            if hit[c] == g {
                return Err(Error::NotTransversal { g, coset: c });
            }
            hit[c] = g;
        }
    }
    Ok(())
}

/// Checks the folder axioms with `g` ranging over right coset
/// representatives of `H` (the conjugate `H^g` only depends on `Hg`).
pub fn verify_folder(group: Arc<FiniteGroup>, h: &[usize], k: &[usize]) -> Result<LoopFolder> {
    let carrier = group.all();
    verify_folder_in(group, carrier, h, k)
}

/// The same checks with `g` ranging over every element of `G`.
pub fn verify_folder_reference(group: Arc<FiniteGroup>, h: &[usize], k: &[usize]) -> Result<LoopFolder> {
    let carrier = group.all();
    check_parts(&group, &carrier, h, k)?;
    let (cid, reps) = coset_ids(&group, &carrier, h);
    transversal_check(&group, &cid, reps.len(), k, &carrier)?;
    Ok(LoopFolder {
        group,
        carrier,
        h: h.to_vec(),
        k: k.to_vec(),
    })
}

/// Folder whose group is the subgroup `carrier` of `group`.
pub fn verify_folder_in(group: Arc<FiniteGroup>, carrier: ElementSet, h: &[usize], k: &[usize]) -> Result<LoopFolder> {
    check_parts(&group, &carrier, h, k)?;
    let (cid, reps) = coset_ids(&group, &carrier, h);
    transversal_check(&group, &cid, reps.len(), k, &reps)?;
    Ok(LoopFolder {
        group,
        carrier,
        h: h.to_vec(),
        k: k.to_vec(),
    })
}

#[derive(Serialize, serde::Deserialize)]
struct FolderJson {
    group: serde_json::Value,
    #[serde(rename = "H")]
    h: Vec<usize>,
    #[serde(rename = "K")]
    k: Vec<usize>,
}

impl LoopFolder {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn carrier(&self) -> &[usize] {
        &self.carrier
    }

    pub fn h(&self) -> &[usize] {
        &self.h
    }

    pub fn k(&self) -> &[usize] {
        &self.k
    }

    /// Order of the loop `l(f)`.
    pub fn loop_order(&self) -> usize {
        self.k.len()
    }

    pub fn is_full(&self) -> bool {
        self.carrier.len() == self.group.order()
    }

    /// The trivial subfolder `(1, 1, 1)`.
    pub fn trivial(&self) -> LoopFolder {
        LoopFolder {
            group: self.group.clone(),
            carrier: vec![0],
            h: vec![0],
            k: vec![0],
        }
    }

    /// Same folder over its carrier as a standalone group, with the
    /// embedding of the new indices into the old ones.
    pub fn restricted(&self) -> (LoopFolder, Vec<usize>) {
        if self.is_full() {
            return (self.clone(), self.group.all());
        }
        let (g, emb) = self
            .group
            .subgroup_as_group(&self.carrier)
            .expect("carrier is a subgroup");
        let pos = |x: &usize| self.carrier.binary_search(x).unwrap();
        let folder = LoopFolder {
            carrier: g.all(),
            group: Arc::new(g),
            h: self.h.iter().map(pos).collect(),
            k: self.k.iter().map(pos).collect(),
        };
        (folder, emb)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let (f, _) = self.restricted();
        serde_json::to_value(FolderJson {
            group: f.group.to_json(),
            h: f.h.clone(),
            k: f.k.clone(),
        })
        .expect("folder json")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let j: FolderJson = serde_json::from_value(v.clone())?;
        let g = FiniteGroup::from_json(&j.group)?;
        let (mut h, mut k) = (j.h, j.k);
        h.sort_unstable();
        k.sort_unstable();
        verify_folder(Arc::new(g), &h, &k)
    }

    /// Right coset ids of `H` inside the carrier, and representatives.
    pub fn cosets(&self) -> (Vec<usize>, Vec<usize>) {
        coset_ids(&self.group, &self.carrier, &self.h)
    }

    /// `H^g = g^-1 H g`.
    pub fn h_conjugate(&self, g: usize) -> ElementSet {
        let mut s: Vec<usize> = self.h.iter().map(|&x| self.group.conj(x, g)).collect();
        s.sort_unstable();
        s
    }

    /// For each coset representative `g`, the map from coset ids of `H^g`
    /// (indexed through `H g x`) to the element of `K` lying in them.
    fn k_lookup(&self, cid: &[usize], reps: &[usize]) -> Vec<Vec<usize>> {
        reps.iter()
            .map(|&g| {
                let mut t = vec![NONE; reps.len()];
                for &x in &self.k {
                    t[cid[self.group.mul(g, x)]] = x;
                }
                t
            })
            .collect()
    }
}

/// The envelope of a loop together with `translations[x]`, the group
/// index of `R(x)`.
#[derive(Clone, Debug)]
pub struct Envelope {
    pub folder: LoopFolder,
    pub translations: Vec<usize>,
}

impl Envelope {
    /// Position of the group element `g` in `K`, as a loop element.
    pub fn loop_element(&self, g: usize) -> Option<usize> {
        self.translations.iter().position(|&t| t == g)
    }
}

/// `ε(X) = (<R(X)>, G_1, R(X))`.
pub fn envelope(x: &CayleyLoop, cap: u128) -> Result<Envelope> {
    let n = x.order();
    let gens: Vec<_> = (1..n).map(|a| x.right_translation(a)).collect();
    let pg = PermGroup::new(n, &gens);
    let gr = pg.enumerate(cap)?;
    let translations: Vec<usize> = (0..n)
        .map(|a| {
            gr.index_of_perm(&x.right_translation(a))
                .expect("translation in its group")
        })
        .collect();
    let h: ElementSet = (0..gr.order()).filter(|&g| gr.perm(g).unwrap().apply(0) == 0).collect();
    let mut k = translations.clone();
    k.sort_unstable();
    let folder = verify_folder(Arc::new(gr), &h, &k)?;
    debug_assert!(is_envelope(&folder) && is_faithful(&folder));
    Ok(Envelope { folder, translations })
}

/// The loop on `K` (in sorted order): `x*y` is the element of `K` in `H xy`.
pub fn loop_of_folder(f: &LoopFolder) -> Result<CayleyLoop> {
    let gr = &f.group;
    let (cid, reps) = f.cosets();
    let mut rep_of = vec![NONE; reps.len()];
    for (i, &x) in f.k.iter().enumerate() {
        let c = cid[x];
        if rep_of[c] != NONE {
            return Err(Error::AmbiguousRepresentative(c));
        }
        rep_of[c] = i;
    }
    if let Some(c) = rep_of.iter().position(|&v| v == NONE) {
        return Err(Error::AmbiguousRepresentative(c));
    }
    let n = f.k.len();
    let mut table = vec![0u32; n * n];
    for (i, &a) in f.k.iter().enumerate() {
        for (j, &b) in f.k.iter().enumerate() {
            table[i * n + j] = rep_of[cid[gr.mul(a, b)]] as u32;
        }
    }
    CayleyLoop::from_flat(n, table)
}

pub fn is_envelope(f: &LoopFolder) -> bool {
    f.group.subgroup_generated(&f.k) == f.carrier
}

pub fn is_faithful(f: &LoopFolder) -> bool {
    core_within(&f.group, &f.carrier, &f.h).len() == 1
}

/// Largest subgroup of `h` normalised by `carrier`.
pub(crate) fn core_within(gr: &FiniteGroup, carrier: &[usize], h: &[usize]) -> ElementSet {
    let (_, reps) = coset_ids(gr, carrier, h);
    let mask = gr.mask(h);
    h.iter()
        .copied()
        .filter(|&x| reps.iter().all(|&g| mask[gr.conj(x, gr.inv(g))]))
        .collect()
}

/// The subfolder `(J, H ∩ J, K ∩ J)` induced by a subgroup `J`.
pub fn induced_subfolder(f: &LoopFolder, j: &[usize]) -> Result<LoopFolder> {
    if !is_subset(j, &f.carrier) {
        return Err(Error::NotSubfolder("subgroup outside the carrier".into()));
    }
    verify_folder_in(f.group.clone(), j.to_vec(), &intersect(&f.h, j), &intersect(&f.k, j))
        .map_err(|e| Error::NotSubfolder(e.to_string()))
}

/// A subfolder is a folder over the same ambient group whose parts sit
/// inside the parts of `f`.
pub fn is_subfolder(f: &LoopFolder, sub: &LoopFolder) -> bool {
    Arc::ptr_eq(&f.group, &sub.group)
        && is_subset(&sub.carrier, &f.carrier)
        && is_subset(&sub.h, &f.h)
        && is_subset(&sub.k, &f.k)
        && verify_folder_in(sub.group.clone(), sub.carrier.clone(), &sub.h, &sub.k).is_ok()
}

/// First triple `(k2, k, g)` violating the normality condition: writing
/// `k2 k = l k3` with `l ∈ H^g` and `k3 ∈ K`, the factor `l` must lie in
/// the subfolder's group.
pub fn normality_violation(f: &LoopFolder, sub: &LoopFolder) -> Option<(usize, usize, usize)> {
    let gr = &f.group;
    let (cid, reps) = f.cosets();
    let lookup = f.k_lookup(&cid, &reps);
    let in_sub = gr.mask(&sub.carrier);
    reps.par_iter().zip(lookup.par_iter()).find_map_first(|(&g, look)| {
        for &k2 in &sub.k {
            for &k in &f.k {
                let p = gr.mul(k2, k);
                let k3 = look[cid[gr.mul(g, p)]];
                let l = gr.mul(p, gr.inv(k3));
                if !in_sub[l] {
                    return Some((k2, k, g));
                }
            }
        }
        None
    })
}

pub fn is_normal_subfolder(f: &LoopFolder, sub: &LoopFolder) -> Result<bool> {
    if !is_subfolder(f, sub) {
        return Err(Error::NotSubfolder("parts are not contained in the folder".into()));
    }
    Ok(f.group.is_normal_in(&f.carrier, &sub.carrier) && normality_violation(f, sub).is_none())
}

/// A group homomorphism between folder groups, as an index map defined on
/// the source carrier (`usize::MAX` elsewhere).
#[derive(Clone, Debug, Serialize)]
pub struct FolderMorphism {
    pub map: Vec<usize>,
}

impl FolderMorphism {
    pub fn apply(&self, g: usize) -> usize {
        self.map[g]
    }

    pub fn image(&self, set: &[usize]) -> ElementSet {
        let mut s: Vec<usize> = set.iter().map(|&x| self.map[x]).collect();
        s.sort_unstable();
        s.dedup();
        s
    }

    /// Checks that the map is a homomorphism carrying each part into the
    /// corresponding part of `target`.
    pub fn is_morphism(&self, source: &LoopFolder, target: &LoopFolder) -> bool {
        let (s, t) = (&source.group, &target.group);
        let tc = t.mask(&target.carrier);
        let th = t.mask(&target.h);
        let tk = t.mask(&target.k);
        source.carrier.iter().all(|&a| {
            tc[self.map[a]]
                && source
                    .carrier
                    .iter()
                    .all(|&b| self.map[s.mul(a, b)] == t.mul(self.map[a], self.map[b]))
        }) && source.h.iter().all(|&x| th[self.map[x]])
            && source.k.iter().all(|&x| tk[self.map[x]])
    }

    /// `(ker, H ∩ ker, K ∩ ker)` as a subfolder of `source`.
    pub fn kernel(&self, source: &LoopFolder) -> Result<LoopFolder> {
        let ker: ElementSet = source.carrier.iter().copied().filter(|&g| self.map[g] == 0).collect();
        induced_subfolder(source, &ker)
    }
}

/// `f / sub` over `G / G_sub`, with the natural morphism. Elements of the
/// quotient group are right cosets numbered by least representative.
pub fn folder_quotient(f: &LoopFolder, sub: &LoopFolder) -> Result<(LoopFolder, FolderMorphism)> {
    if !is_normal_subfolder(f, sub)? {
        return Err(Error::NotNormal);
    }
    Ok(quotient_unchecked(f, &sub.carrier))
}

pub(crate) fn quotient_unchecked(f: &LoopFolder, n: &[usize]) -> (LoopFolder, FolderMorphism) {
    let gr = &f.group;
    let (cid, reps) = coset_ids(gr, &f.carrier, n);
    let q = reps.len();
    let mut mul = vec![0u32; q * q];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            mul[i * q + j] = cid[gr.mul(a, b)] as u32;
        }
    }
    let qg = Arc::new(FiniteGroup::from_flat_unchecked(q, mul));
    let morph = FolderMorphism { map: cid };
    let folder = LoopFolder {
        carrier: qg.all(),
        group: qg,
        h: morph.image(&f.h),
        k: morph.image(&f.k),
    };
    (folder, morph)
}

/// `(G1 G2, H ∩ G1 G2, K ∩ G1 G2)`.
pub fn folder_join(f: &LoopFolder, f1: &LoopFolder, f2: &LoopFolder) -> Result<LoopFolder> {
    require_normal(f, f1)?;
    require_normal(f, f2)?;
    let mut gens = f.group.generators_of(&f1.carrier);
    gens.extend(f.group.generators_of(&f2.carrier));
    let g3 = f.group.subgroup_generated(&gens);
    induced_subfolder(f, &g3)
}

/// `(G1 ∩ G2, H1 ∩ H2, K1 ∩ K2)`.
pub fn folder_meet(f: &LoopFolder, f1: &LoopFolder, f2: &LoopFolder) -> Result<LoopFolder> {
    require_normal(f, f1)?;
    require_normal(f, f2)?;
    verify_folder_in(
        f.group.clone(),
        intersect(&f1.carrier, &f2.carrier),
        &intersect(&f1.h, &f2.h),
        &intersect(&f1.k, &f2.k),
    )
}

fn require_normal(f: &LoopFolder, sub: &LoopFolder) -> Result<()> {
    if is_normal_subfolder(f, sub)? {
        Ok(())
    } else {
        Err(Error::NotNormal)
    }
}

/// Outcome of each part of the join/meet lemma for one pair of normal
/// subfolders.
#[derive(Clone, Debug, Serialize)]
pub struct JoinMeetReport {
    /// The image of each `f_{3-i}` is normal in `f / f_i`.
    pub images_normal: bool,
    /// The join is a normal subfolder.
    pub join_normal: bool,
    /// `f / f3` is isomorphic to `(f / f_i) / image(f_{3-i})` for both `i`.
    pub quotients_agree: bool,
    /// The meet is a normal subfolder.
    pub meet_normal: bool,
    /// Modulo the meet, the join is the direct product of the two parts.
    pub direct_mod_meet: bool,
    /// `X3/X0 ≅ X1/X0 × X2/X0` on the loop side.
    pub loops_direct: bool,
    #[serde(skip)]
    pub join: Option<LoopFolder>,
    #[serde(skip)]
    pub meet: Option<LoopFolder>,
}

impl JoinMeetReport {
    pub fn passed(&self) -> bool {
        self.images_normal
            && self.join_normal
            && self.quotients_agree
            && self.meet_normal
            && self.direct_mod_meet
            && self.loops_direct
    }
}

/// Evaluates every part of the join/meet lemma on `f1`, `f2`.
pub fn join_meet_report(f: &LoopFolder, f1: &LoopFolder, f2: &LoopFolder) -> Result<JoinMeetReport> {
    let join = folder_join(f, f1, f2)?;
    let meet = folder_meet(f, f1, f2)?;
    let subs = [f1, f2];

    let mut images_normal = true;
    let mut quotients_agree = true;
    let (fq3, p3) = quotient_unchecked(f, &join.carrier);
    for i in 0..2 {
        let (fi, pi) = quotient_unchecked(f, &subs[i].carrier);
        let other = subs[1 - i];
        let img_g = pi.image(&other.carrier);
        let img = verify_folder_in(
            fi.group.clone(),
            img_g.clone(),
            &pi.image(&other.h),
            &pi.image(&other.k),
        );
        let Ok(img) = img else {
            images_normal = false;
            quotients_agree = false;
            continue;
        };
        images_normal &= matches!(is_normal_subfolder(&fi, &img), Ok(true));
        // the composite f -> fi -> fi / img has kernel G3; compare it with p3
        let (fii, pii) = quotient_unchecked(&fi, &img_g);
        let beta: Vec<usize> = f.carrier.iter().map(|&g| pii.apply(pi.apply(g))).collect();
        let consistent = f.carrier.iter().enumerate().all(|(a, &g)| {
            f.carrier
                .iter()
                .enumerate()
                .all(|(b, &h)| (p3.apply(g) == p3.apply(h)) == (beta[a] == beta[b]))
        });
        quotients_agree &= consistent
            && fii.group.order() == fq3.group.order()
            && fii.h.len() == fq3.h.len()
            && fii.k.len() == fq3.k.len()
            && f.k
                .iter()
                .all(|&x| fii.k.binary_search(&pii.apply(pi.apply(x))).is_ok());
    }

    // modulo G0 the join splits as G1 x G2, H1 x H2 and K1 x K2
    let (bar, pb) = quotient_unchecked(&join, &meet.carrier);
    let bg = &bar.group;
    let b1 = pb.image(&f1.carrier);
    let b2 = pb.image(&f2.carrier);
    let prod = |a: &[usize], b: &[usize]| {
        let mut s: Vec<usize> = a.iter().flat_map(|&x| b.iter().map(move |&y| bg.mul(x, y))).collect();
        s.sort_unstable();
        s.dedup();
        s
    };
    let direct_mod_meet = intersect(&b1, &b2) == vec![0]
        && b1.iter().all(|&x| b2.iter().all(|&y| bg.mul(x, y) == bg.mul(y, x)))
        && prod(&b1, &b2) == bar.carrier
        && prod(&pb.image(&f1.h), &pb.image(&f2.h)) == bar.h
        && prod(&pb.image(&f1.k), &pb.image(&f2.k)) == bar.k;

    let loops_direct = loops_side(f, f1, f2, &join, &meet)?;

    Ok(JoinMeetReport {
        images_normal,
        join_normal: matches!(is_normal_subfolder(f, &join), Ok(true)),
        quotients_agree,
        meet_normal: matches!(is_normal_subfolder(f, &meet), Ok(true)),
        direct_mod_meet,
        loops_direct,
        join: Some(join),
        meet: Some(meet),
    })
}

fn loops_side(f: &LoopFolder, f1: &LoopFolder, f2: &LoopFolder, f3: &LoopFolder, f0: &LoopFolder) -> Result<bool> {
    let x = loop_of_folder(f)?;
    let sub = |s: &LoopFolder| -> SubloopSet {
        let members: Vec<usize> = s.k.iter().map(|k| f.k.binary_search(k).unwrap()).collect();
        x.as_subloop(&members).expect("subfolder loops are subloops")
    };
    let (x1, x2, x3, x0) = (sub(f1), sub(f2), sub(f3), sub(f0));
    for xi in [&x1, &x2] {
        if !x.is_normal_subloop(xi)? {
            return Ok(false);
        }
    }
    let quot = |big: &SubloopSet| -> Result<Option<CayleyLoop>> {
        let l = x.restrict(big);
        let pos: Vec<usize> = x0
            .members()
            .iter()
            .map(|m| big.members().binary_search(m).unwrap())
            .collect();
        let y = l.as_subloop(&pos)?;
        if !l.is_normal_subloop(&y)? {
            return Ok(None);
        }
        Ok(Some(l.factor_by_normal(&y).0))
    };
    let (Some(q3), Some(q1), Some(q2)) = (quot(&x3)?, quot(&x1)?, quot(&x2)?) else {
        return Ok(false);
    };
    Ok(loops_isomorphic(&q3, &q1.direct_product(&q2)).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn arc(g: FiniteGroup) -> Arc<FiniteGroup> {
        Arc::new(g)
    }

    #[test]
    fn regular_folder() {
        let g = arc(FiniteGroup::cyclic(3));
        let f = verify_folder(g.clone(), &[0], &[0, 1, 2]).unwrap();
        assert_eq!(loop_of_folder(&f).unwrap(), CayleyLoop::cyclic(3));
        assert!(is_envelope(&f) && is_faithful(&f));
    }

    #[test]
    fn s3_folders() {
        let s3 = arc(catalog::symmetric3_group());
        let r = (1..6).find(|&x| s3.element_order(x) == 3).unwrap();
        let t = (1..6).find(|&x| s3.element_order(x) == 2).unwrap();
        let a3 = s3.subgroup_generated(&[r]);
        let f = verify_folder(s3.clone(), &a3, &[0, t]).unwrap();
        assert!(!is_envelope(&f));
        let mut k = a3.clone();
        k.sort_unstable();
        let f2 = verify_folder(s3.clone(), &[0, t], &k).unwrap();
        assert!(verify_folder_reference(s3.clone(), &[0, t], &k).is_ok());
        assert_eq!(loop_of_folder(&f2).unwrap().order(), 3);
        // K = {0, t} is not a transversal of every conjugate of <t'>
        let t2 = (t + 1..6).find(|&x| s3.element_order(x) == 2).unwrap();
        let bad = [0, t, t2];
        assert!(verify_folder(s3.clone(), &[0, t], &bad).is_err());
        assert!(verify_folder_reference(s3.clone(), &[0, t], &bad).is_err());
    }

    #[test]
    fn unfaithful_folder() {
        let c4 = arc(FiniteGroup::cyclic(4));
        let f = verify_folder(c4, &[0, 2], &[0, 1]).unwrap();
        assert!(!is_faithful(&f));
    }

    #[test]
    fn envelope_roundtrip_s3() {
        let x = catalog::symmetric3();
        let e = envelope(&x, crate::DEFAULT_CAP).unwrap();
        assert_eq!(e.folder.loop_order(), 6);
        assert_eq!(e.folder.group().order(), 6);
        assert_eq!(e.folder.h(), &[0]);
        let l = loop_of_folder(&e.folder).unwrap();
        assert!(loops_isomorphic(&l, &x).is_some());
    }

    #[test]
    fn c6_quotient_and_join() {
        let x = CayleyLoop::cyclic(6);
        let f = envelope(&x, crate::DEFAULT_CAP).unwrap().folder;
        let gr = f.group().clone();
        let three = (1..6).find(|&g| gr.element_order(g) == 3).unwrap();
        let two = (1..6).find(|&g| gr.element_order(g) == 2).unwrap();
        let f3 = induced_subfolder(&f, &gr.subgroup_generated(&[three])).unwrap();
        let f2 = induced_subfolder(&f, &gr.subgroup_generated(&[two])).unwrap();
        assert!(is_normal_subfolder(&f, &f3).unwrap());
        let (q, m) = folder_quotient(&f, &f3).unwrap();
        assert_eq!(loop_of_folder(&q).unwrap().order(), 2);
        assert!(m.is_morphism(&f, &q));
        assert_eq!(m.kernel(&f).unwrap(), f3);
        let r = join_meet_report(&f, &f2, &f3).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.join.unwrap().carrier(), f.carrier());
        assert_eq!(r.meet.unwrap().carrier(), &[0]);
    }

    #[test]
    fn json_roundtrip() {
        let f = envelope(&catalog::symmetric3(), 1000).unwrap().folder;
        let g = LoopFolder::from_json(&f.to_json()).unwrap();
        assert_eq!(g.h(), f.h());
        assert_eq!(g.k(), f.k());
    }
}
