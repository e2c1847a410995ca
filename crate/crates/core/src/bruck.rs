//! Bruck loop folders: the inverting automorphism `τ`, the K-radical, the
//! extension `G⁺ = G<τ>`, fixed-point subfolders and the Glauberman and
//! Baer correspondences for odd order.

use std::collections::{BTreeSet, VecDeque};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::folder::{induced_subfolder, is_normal_subfolder, loop_of_folder, verify_folder, Envelope, LoopFolder};
use crate::group::{intersect, is_subset, ElementSet, FiniteGroup};
use crate::iso::loops_isomorphic;
use crate::loops::CayleyLoop;

const NONE: usize = usize::MAX;

/// `1 ∈ K` and `x y^-1 x ∈ K` for all `x, y ∈ K`.
pub fn is_twisted_subgroup(gr: &FiniteGroup, k: &[usize]) -> bool {
    let mask = gr.mask(k);
    mask[0]
        && k.iter()
            .all(|&x| k.iter().all(|&y| mask[gr.mul(gr.mul(x, gr.inv(y)), x)]))
}

/// An automorphism of `carrier` (a subgroup of the ambient group), stored
/// as an ambient-indexed image array with `usize::MAX` off the carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauAut {
    pub carrier: ElementSet,
    pub image: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct TauJson {
    image: Vec<Option<usize>>,
    carrier_hash: String,
}

/// SHA-256 of the group's JSON serialization.
pub fn group_hash(gr: &FiniteGroup) -> String {
    hex::encode(Sha256::digest(gr.to_json().to_string().as_bytes()))
}

impl TauAut {
    pub fn apply(&self, g: usize) -> usize {
        self.image[g]
    }

    pub fn from_full(image: Vec<usize>) -> Self {
        TauAut {
            carrier: (0..image.len()).collect(),
            image,
        }
    }

    /// Automorphism of the carrier with square 1.
    pub fn is_involutory_automorphism(&self, gr: &FiniteGroup) -> bool {
        let c = gr.mask(&self.carrier);
        let mut seen = vec![false; gr.order()];
        self.carrier.iter().all(|&x| {
            let y = self.image[x];
            y < gr.order() && c[y] && !std::mem::replace(&mut seen[y], true) && self.image[y] == x
        }) && self.carrier.iter().all(|&a| {
            self.carrier
                .iter()
                .all(|&b| self.image[gr.mul(a, b)] == gr.mul(self.image[a], self.image[b]))
        })
    }

    pub fn to_json(&self, gr: &FiniteGroup) -> serde_json::Value {
        serde_json::to_value(TauJson {
            image: self.image.iter().map(|&v| (v != NONE).then_some(v)).collect(),
            carrier_hash: group_hash(gr),
        })
        .expect("tau json")
    }

    /// Parses and checks the carrier hash against `gr`.
    pub fn from_json(v: &serde_json::Value, gr: &FiniteGroup) -> Result<Self> {
        let j: TauJson = serde_json::from_value(v.clone())?;
        if j.carrier_hash != group_hash(gr) {
            return Err(Error::ManifestMismatch(
                "automorphism belongs to a different group".into(),
            ));
        }
        if j.image.len() != gr.order() {
            return Err(Error::Shape("image length differs from group order".into()));
        }
        let carrier = (0..gr.order()).filter(|&g| j.image[g].is_some()).collect();
        Ok(TauAut {
            carrier,
            image: j.image.into_iter().map(|v| v.unwrap_or(NONE)).collect(),
        })
    }
}

/// Outcome of propagating `k ↦ k^-1` along K-words, modulo a normal
/// subgroup given by coset ids.
enum Propagation {
    Consistent(Vec<usize>),
    Conflicts(Vec<usize>),
}

/// BFS over `D = <K>` by right multiplication with `K` in sorted order,
/// setting `image(g k) = image(g) k^-1`. Images are compared modulo the
/// normal subgroup whose right cosets are `cid`.
fn propagate(gr: &FiniteGroup, k: &[usize], cid: Option<&[usize]>) -> Propagation {
    let m = gr.order();
    let same = |a: usize, b: usize| match cid {
        Some(c) => c[a] == c[b],
        None => a == b,
    };
    let mut image = vec![NONE; m];
    image[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    let mut conflicts = Vec::new();
    while let Some(g) = queue.pop_front() {
        for &x in k {
            let gk = gr.mul(g, x);
            let cand = gr.mul(image[g], gr.inv(x));
            if image[gk] == NONE {
                image[gk] = cand;
                queue.push_back(gk);
            } else if !same(image[gk], cand) {
                conflicts.push(gr.mul(gr.inv(image[gk]), cand));
            }
        }
    }
    if conflicts.is_empty() {
        Propagation::Consistent(image)
    } else {
        Propagation::Conflicts(conflicts)
    }
}

/// `⟨K⟩` for any folder.
pub fn d_of(f: &LoopFolder) -> ElementSet {
    f.group().subgroup_generated(f.k())
}

/// Whether `⟨K⟩` is normal in the folder group.
pub fn d_is_normal(f: &LoopFolder) -> bool {
    f.group().is_normal_in(f.carrier(), &d_of(f))
}

/// The involutory automorphism of `⟨K⟩` inverting every element of `K`,
/// if it exists.
pub fn tau_construct(f: &LoopFolder) -> Option<TauAut> {
    let gr = f.group();
    match propagate(gr, f.k(), None) {
        Propagation::Consistent(image) => Some(TauAut {
            carrier: d_of(f),
            image,
        }),
        Propagation::Conflicts(_) => None,
    }
}

/// Smallest normal subgroup `N` of `⟨K⟩` such that `k ↦ k^-1` extends to
/// an automorphism of `⟨K⟩/N`: the normal closure of the propagation
/// conflicts, iterated until the propagation is consistent.
pub fn k_radical(f: &LoopFolder) -> ElementSet {
    let gr = f.group();
    let d = d_of(f);
    let mut n = vec![0usize];
    loop {
        let cid = (n.len() > 1).then(|| gr.coset_ids(&n).0);
        match propagate(gr, f.k(), cid.as_deref()) {
            Propagation::Consistent(_) => return n,
            Propagation::Conflicts(c) => {
                let mut seeds = n.clone();
                seeds.extend(c);
                n = gr.normal_closure_in(&d, &seeds);
            }
        }
    }
}

/// `H` permutes `K` by conjugation.
pub fn h_acts_on_k(f: &LoopFolder) -> bool {
    let gr = f.group();
    let mask = gr.mask(f.k());
    let hgens = gr.generators_of(f.h());
    f.k().iter().all(|&k| hgens.iter().all(|&h| mask[gr.conj(k, h)]))
}

/// Bol folder (twisted `K`) with trivial K-radical on which `H` acts.
pub fn is_bruck_folder(f: &LoopFolder) -> bool {
    is_twisted_subgroup(f.group(), f.k()) && h_acts_on_k(f) && k_radical(f).len() == 1
}

/// `K(t) = {g : g^t = g^-1}` over the carrier of `t`.
pub fn k_of_tau(gr: &FiniteGroup, t: &TauAut) -> ElementSet {
    t.carrier.iter().copied().filter(|&g| t.image[g] == gr.inv(g)).collect()
}

/// `C(t) = {g : g^t = g}` over the carrier of `t`.
pub fn c_of_tau(t: &TauAut) -> ElementSet {
    t.carrier.iter().copied().filter(|&g| t.image[g] == g).collect()
}

/// Extends `τ` from `⟨K⟩` to the folder group by `hk ↦ h k^-1`.
pub fn extend_tau(f: &LoopFolder, tau: &TauAut) -> Result<TauAut> {
    let gr = f.group();
    for &x in &intersect(f.h(), &tau.carrier) {
        if tau.image[x] != x {
            return Err(Error::ExtensionInconsistent(format!(
                "H ∩ <K> element {x} is moved by tau"
            )));
        }
    }
    let mut image = vec![NONE; gr.order()];
    for &h in f.h() {
        for &k in f.k() {
            image[gr.mul(h, k)] = gr.mul(h, gr.inv(k));
        }
    }
    let t = TauAut {
        carrier: f.carrier().to_vec(),
        image,
    };
    if !t.is_involutory_automorphism(gr) {
        return Err(Error::ExtensionInconsistent(
            "hk -> hk^-1 is not an automorphism".into(),
        ));
    }
    Ok(t)
}

/// `G⁺ = G<τ>`. Element `(g, e)` with `e ∈ {0, 1}` has index `e |G| + g`,
/// where `g` indexes the standalone folder group (see
/// [`LoopFolder::restricted`]).
#[derive(Clone, Debug)]
pub struct ExtendedGroup {
    pub plus: FiniteGroup,
    /// Folder with its carrier as a standalone group.
    pub base: LoopFolder,
    /// `embedding[i]` is the ambient index of base element `i`.
    pub embedding: Vec<usize>,
    /// `τ` extended to the base group.
    pub tau_image: Vec<usize>,
    pub tau: usize,
    pub lambda: ElementSet,
}

impl ExtendedGroup {
    pub fn base_order(&self) -> usize {
        self.base.group().order()
    }

    /// `Λ` is closed under conjugation by `G`.
    pub fn lambda_is_invariant(&self) -> bool {
        let mask = self.plus.mask(&self.lambda);
        let gens = self.base.group().generators().to_vec();
        self.lambda
            .iter()
            .all(|&l| gens.iter().all(|&g| mask[self.plus.conj(l, g)]))
    }
}

/// Builds `G⁺` for a Bruck folder, extending `τ` first.
pub fn extend_group(f: &LoopFolder, tau: &TauAut) -> Result<ExtendedGroup> {
    let full = extend_tau(f, tau)?;
    let (base, embedding) = f.restricted();
    let m = base.group().order();
    let tau_image: Vec<usize> = embedding
        .iter()
        .map(|&g| f.carrier().binary_search(&full.image[g]).unwrap())
        .collect();
    let bg = base.group().clone();
    let plus = FiniteGroup::from_fn(2 * m, |x, y| {
        let (g, a) = (x % m, x / m);
        let (h, b) = (y % m, y / m);
        let h2 = if a == 1 { tau_image[h] } else { h };
        ((a + b) % 2) * m + bg.mul(g, h2)
    });
    let tau_el = m;
    let lambda: ElementSet = base
        .k()
        .iter()
        .map(|&k| plus.mul(tau_el, k))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let ext = ExtendedGroup {
        plus,
        base,
        embedding,
        tau_image,
        tau: tau_el,
        lambda,
    };
    if !ext.lambda_is_invariant() {
        return Err(Error::ExtensionInconsistent("Lambda is not G-invariant".into()));
    }
    Ok(ext)
}

/// `τ` and `G⁺` of a Bruck folder.
pub fn bruck_data(f: &LoopFolder) -> Result<(TauAut, ExtendedGroup)> {
    let tau = tau_construct(f).ok_or(Error::NotBruck)?;
    let ext = extend_group(f, &tau)?;
    Ok((tau, ext))
}

/// `ξ_U = (N_G(U), N_H(U), C_K(U))` for `U ⊆ H`.
pub fn fixed_subfolder(f: &LoopFolder, u: &[usize]) -> Result<LoopFolder> {
    let gr = f.group();
    let mut us: Vec<usize> = u.to_vec();
    us.sort_unstable();
    us.dedup();
    let norm = intersect(&gr.normalizer(&us), f.carrier());
    let nh = intersect(&norm, f.h());
    let ck: ElementSet = f
        .k()
        .iter()
        .copied()
        .filter(|&k| us.iter().all(|&x| gr.mul(k, x) == gr.mul(x, k)))
        .collect();
    crate::folder::verify_folder_in(gr.clone(), norm, &nh, &ck)
}

/// Points of the envelope's loop fixed by every permutation in `U`.
pub fn fixed_points_loop(env: &Envelope, u: &[usize]) -> ElementSet {
    let gr = env.folder.group();
    (0..env.translations.len())
        .filter(|&x| u.iter().all(|&h| gr.perm(h).map(|p| p.apply(x)) == Some(x)))
        .collect()
}

/// Checks of the fixed-point lemma for one `U ⊆ H` of a Bruck envelope.
#[derive(Clone, Debug, Serialize)]
pub struct FixedPointReport {
    pub subfolder_is_bruck: bool,
    /// `l(ξ_U)` is the fixed subloop, and is Bruck.
    pub loop_is_fixed_subloop: bool,
    /// `C_K(U) = N_K(U)`.
    pub centralizer_equals_normalizer: bool,
    /// `C_Λ(U) = N_Λ(U) = τ C_K(U)`.
    pub lambda_fixed: bool,
    /// No `λ ∈ Λ` inverts an `h ∈ U` with `h² ≠ 1`.
    pub no_inverting_lambda: bool,
}

impl FixedPointReport {
    pub fn passed(&self) -> bool {
        self.subfolder_is_bruck
            && self.loop_is_fixed_subloop
            && self.centralizer_equals_normalizer
            && self.lambda_fixed
            && self.no_inverting_lambda
    }
}

pub fn fixed_point_report(env: &Envelope, ext: &ExtendedGroup, u: &[usize]) -> Result<FixedPointReport> {
    let f = &env.folder;
    let gr = f.group();
    let sub = fixed_subfolder(f, u)?;
    let x = loop_of_folder(f)?;
    let fixed = fixed_points_loop(env, u);
    // loop elements of the folder loop are positions in sorted K
    let ku: Vec<usize> = sub.k().iter().map(|k| f.k().binary_search(k).unwrap()).collect();
    let fixed_pos: Vec<usize> = {
        let mut v: Vec<usize> = fixed
            .iter()
            .map(|&p| f.k().binary_search(&env.translations[p]).unwrap())
            .collect();
        v.sort_unstable();
        v
    };
    let loop_is_fixed_subloop =
        ku == fixed_pos && x.is_subloop(&ku) && loop_of_folder(&sub).map(|l| l.is_bruck()).unwrap_or(false);

    let us: Vec<usize> = {
        let mut v = u.to_vec();
        v.sort_unstable();
        v.dedup();
        v
    };
    let nk: ElementSet = {
        let mask = gr.mask(&us);
        f.k()
            .iter()
            .copied()
            .filter(|&k| us.iter().all(|&h| mask[gr.conj(h, k)]))
            .collect()
    };

    // Λ side, computed in G⁺ over base indices
    let plus = &ext.plus;
    let pos = |g: usize| f.carrier().binary_search(&g).unwrap();
    let ub: Vec<usize> = us.iter().map(|&h| pos(h)).collect();
    let umask = plus.mask(&ub);
    let c_lambda: ElementSet = ext
        .lambda
        .iter()
        .copied()
        .filter(|&l| ub.iter().all(|&h| plus.mul(l, h) == plus.mul(h, l)))
        .collect();
    let n_lambda: ElementSet = ext
        .lambda
        .iter()
        .copied()
        .filter(|&l| ub.iter().all(|&h| umask[plus.conj(h, l)]))
        .collect();
    let mut tau_ku: Vec<usize> = sub.k().iter().map(|&k| plus.mul(ext.tau, pos(k))).collect();
    tau_ku.sort_unstable();
    let no_inverting_lambda = ub
        .iter()
        .all(|&h| plus.mul(h, h) == 0 || ext.lambda.iter().all(|&l| plus.conj(h, l) != plus.inv(h)));

    Ok(FixedPointReport {
        subfolder_is_bruck: is_bruck_folder(&sub),
        loop_is_fixed_subloop,
        centralizer_equals_normalizer: nk == sub.k(),
        lambda_fixed: c_lambda == n_lambda && c_lambda == tau_ku,
        no_inverting_lambda,
    })
}

/// `ξ_τ = (C_G(τ), H, C_K(τ))`, with the claim that its loop has exponent 2.
pub fn tau_fixed_subfolder(f: &LoopFolder, tau_full: &TauAut) -> Result<(LoopFolder, bool)> {
    let gr = f.group();
    let cg = intersect(&c_of_tau(tau_full), f.carrier());
    let ck: ElementSet = f.k().iter().copied().filter(|&k| tau_full.image[k] == k).collect();
    let sub = crate::folder::verify_folder_in(gr.clone(), cg, f.h(), &ck)?;
    let l = loop_of_folder(&sub)?;
    let exponent2 = (0..l.order()).all(|x| l.mul(x, x) == 0);
    Ok((sub, exponent2))
}

/// Every condition of one equivalence lemma, evaluated independently.
#[derive(Clone, Debug, Serialize)]
pub struct CriteriaReport {
    pub lemma: String,
    pub conditions: Vec<(String, bool)>,
}

impl CriteriaReport {
    /// All conditions agree.
    pub fn consistent(&self) -> bool {
        self.conditions.windows(2).all(|w| w[0].1 == w[1].1)
    }

    pub fn holds(&self) -> bool {
        self.consistent() && self.conditions.first().map_or(true, |c| c.1)
    }
}

fn is_two_power(n: usize) -> bool {
    n.is_power_of_two()
}

/// `X` is a 2-loop, `G` is a 2-group, and `αβ` is a 2-element for all
/// `α, β ∈ Λ`.
pub fn two_loop_criteria(ext: &ExtendedGroup) -> CriteriaReport {
    let plus = &ext.plus;
    let c = ext.lambda.iter().all(|&a| {
        ext.lambda
            .iter()
            .all(|&b| is_two_power(plus.element_order(plus.mul(a, b))))
    });
    CriteriaReport {
        lemma: "2-loop".into(),
        conditions: vec![
            ("|X| is a power of 2".into(), is_two_power(ext.base.loop_order())),
            ("G is a 2-group".into(), is_two_power(ext.base_order())),
            ("products of two members of Lambda are 2-elements".into(), c),
        ],
    }
}

/// `X` has odd order, `G` has odd order, and every `k ∈ K` has odd order.
pub fn odd_loop_criteria(ext: &ExtendedGroup) -> CriteriaReport {
    let gr = ext.base.group();
    CriteriaReport {
        lemma: "2'-loop".into(),
        conditions: vec![
            ("|X| is odd".into(), ext.base.loop_order() % 2 == 1),
            ("|G| is odd".into(), ext.base_order() % 2 == 1),
            (
                "every k in K has odd order".into(),
                ext.base.k().iter().all(|&k| gr.element_order(k) % 2 == 1),
            ),
        ],
    }
}

/// `X` is a 2-element loop, every `k ∈ K` is a 2-element, and
/// `τ ∈ O_2(G⁺)`.
pub fn two_element_criterion(ext: &ExtendedGroup) -> Result<CriteriaReport> {
    let gr = ext.base.group();
    let x = loop_of_folder(&ext.base)?;
    let orders = x.element_orders()?;
    let o2 = ext.plus.o2_group();
    Ok(CriteriaReport {
        lemma: "2-element loop".into(),
        conditions: vec![
            ("X is a 2-element loop".into(), orders.iter().all(|&o| is_two_power(o))),
            (
                "every k in K is a 2-element".into(),
                ext.base.k().iter().all(|&k| is_two_power(gr.element_order(k))),
            ),
            ("tau lies in O_2(G+)".into(), o2.binary_search(&ext.tau).is_ok()),
        ],
    })
}

/// `x^(1/2)` in a group of odd order.
fn sqrt(gr: &FiniteGroup, x: usize) -> usize {
    let o = gr.element_order(x) as i64;
    gr.pow(x, (o + 1) / 2)
}

/// The Glauberman folder of an odd-order group and an involutory
/// automorphism, with its loop.
#[derive(Clone, Debug)]
pub struct GlaubermanFolder {
    pub folder: LoopFolder,
    pub tau: TauAut,
    pub loop_: CayleyLoop,
}

impl GlaubermanFolder {
    /// `{"folder", "loop", "report"}`.
    pub fn to_json(&self, cap: u128) -> Result<serde_json::Value> {
        let report = glauberman_report(self, cap)?;
        Ok(serde_json::json!({
            "folder": self.folder.to_json(),
            "loop": self.loop_.rows(),
            "report": report,
        }))
    }
}

/// `μ = (L, C_L(t), K_L(t))`.
pub fn glauberman_folder(l: Arc<FiniteGroup>, t: &[usize]) -> Result<GlaubermanFolder> {
    if l.order() % 2 == 0 {
        return Err(Error::EvenOrder(l.order()));
    }
    let tau = TauAut::from_full(t.to_vec());
    if t.len() != l.order() || !tau.is_involutory_automorphism(&l) {
        return Err(Error::NotInvolutory);
    }
    let c = c_of_tau(&tau);
    let k = k_of_tau(&l, &tau);
    let folder = verify_folder(l, &c, &k)?;
    let loop_ = loop_of_folder(&folder)?;
    Ok(GlaubermanFolder { folder, tau, loop_ })
}

/// Square-root model on `K_L(t)` (sorted): `x∘y = (y x² y)^(1/2)` when
/// `right` is set, otherwise `(x y² x)^(1/2)`.
pub fn sqrt_model(gr: &FiniteGroup, k: &[usize], right: bool) -> Result<CayleyLoop> {
    let n = k.len();
    let mut rows = vec![vec![0; n]; n];
    for (i, &x) in k.iter().enumerate() {
        for (j, &y) in k.iter().enumerate() {
            let (a, b) = if right { (y, x) } else { (x, y) };
            let p = gr.mul(gr.mul(a, gr.mul(b, b)), a);
            let r = sqrt(gr, p);
            rows[i][j] = k
                .binary_search(&r)
                .map_err(|_| Error::NotGroup("square root left K".into()))?;
        }
    }
    CayleyLoop::validate(&rows)
}

#[derive(Clone, Debug, Serialize)]
pub struct GlaubermanReport {
    pub loop_order: usize,
    pub index: usize,
    pub is_bruck_folder: bool,
    pub loop_is_bruck: bool,
    /// `l(μ) ≅ (K, (y x² y)^(1/2))`.
    pub sqrt_model_isomorphic: bool,
    /// The opposite of `l(μ)` matches `(K, (x y² x)^(1/2))`.
    pub opposite_sqrt_model_isomorphic: bool,
    /// `L = [L, t]` and `C_{Z(L)}(t) = 1`.
    pub faithful_case: bool,
    /// In the faithful case, `ε(l(μ)) ≅ μ` as folders.
    pub envelope_matches: Option<bool>,
}

impl GlaubermanReport {
    pub fn passed(&self) -> bool {
        self.loop_order == self.index
            && self.is_bruck_folder
            && self.loop_is_bruck
            && self.sqrt_model_isomorphic
            && self.opposite_sqrt_model_isomorphic
            && self.envelope_matches != Some(false)
    }
}

/// `[L, t] = <g^-1 g^t>`.
pub fn commutator_with(gr: &FiniteGroup, t: &TauAut, sub: &[usize]) -> ElementSet {
    let gens: Vec<usize> = sub.iter().map(|&g| gr.mul(gr.inv(g), t.image[g])).collect();
    gr.subgroup_generated(&gens)
}

pub fn glauberman_report(g: &GlaubermanFolder, cap: u128) -> Result<GlaubermanReport> {
    let f = &g.folder;
    let gr = f.group();
    let right = sqrt_model(gr, f.k(), true)?;
    let left = sqrt_model(gr, f.k(), false)?;
    let center = gr.center();
    let faithful_case = commutator_with(gr, &g.tau, &gr.all()).len() == gr.order()
        && center.iter().all(|&z| z == 0 || g.tau.image[z] != z);
    let envelope_matches = if faithful_case {
        Some(envelope_isomorphic_to(f, &crate::folder::envelope(&g.loop_, cap)?))
    } else {
        None
    };
    Ok(GlaubermanReport {
        loop_order: g.loop_.order(),
        index: gr.order() / f.h().len(),
        is_bruck_folder: is_bruck_folder(f),
        loop_is_bruck: g.loop_.is_bruck(),
        sqrt_model_isomorphic: loops_isomorphic(&g.loop_, &right).is_some(),
        opposite_sqrt_model_isomorphic: loops_isomorphic(&g.loop_.opposite(), &left).is_some(),
        faithful_case,
        envelope_matches,
    })
}

/// Folder isomorphism `ε(l(μ)) ≅ μ` through the action of `G_μ` on the
/// right cosets of `H_μ` (identified with `K_μ`, i.e. with the loop).
pub fn envelope_isomorphic_to(mu: &LoopFolder, env: &Envelope) -> bool {
    let gr = mu.group();
    let (cid, _) = mu.cosets();
    // coset id -> loop element (position in sorted K)
    let mut loop_of_coset = vec![NONE; mu.k().len()];
    for (i, &k) in mu.k().iter().enumerate() {
        loop_of_coset[cid[k]] = i;
    }
    let eg = env.folder.group();
    if eg.order() != mu.carrier().len() {
        return false;
    }
    let mut rho = vec![NONE; gr.order()];
    let mut used = vec![false; eg.order()];
    for &g in mu.carrier() {
        let img: Vec<usize> = mu.k().iter().map(|&k| loop_of_coset[cid[gr.mul(k, g)]]).collect();
        let Ok(p) = crate::perm::Perm::from_images(img) else {
            return false;
        };
        match eg.index_of_perm(&p) {
            Some(i) if !used[i] => {
                used[i] = true;
                rho[g] = i;
            }
            _ => return false,
        }
    }
    let map_set = |s: &[usize]| {
        let mut v: Vec<usize> = s.iter().map(|&x| rho[x]).collect();
        v.sort_unstable();
        v
    };
    map_set(mu.h()) == env.folder.h() && map_set(mu.k()) == env.folder.k()
}

/// One row of the correspondence tables.
#[derive(Clone, Debug, Serialize)]
pub struct BaerRow {
    pub subgroup: ElementSet,
    #[serde(rename = "H")]
    pub h: ElementSet,
    #[serde(rename = "K")]
    pub k: ElementSet,
    pub normal: bool,
    /// Loop elements of `l(φ(J))` when `J = [J, τ]`.
    pub subloop: Option<ElementSet>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BaerReport {
    /// `Λ = τ^G`, `H = C_G(τ)` and `K = K(τ)`.
    pub tau_data: bool,
    /// `φ` is a bijection from τ-invariant subgroups onto subfolders.
    pub phi_bijective: bool,
    /// Normal subgroups correspond to normal subfolders.
    pub normality_preserved: bool,
    /// `Y ↦ <κ(Y)>` is a bijection onto `{L : L = [L, τ]}`.
    pub psi_bijective: bool,
    /// `G` and `X` are solvable.
    pub solvable: bool,
    pub rows: Vec<BaerRow>,
}

impl BaerReport {
    pub fn passed(&self) -> bool {
        self.tau_data && self.phi_bijective && self.normality_preserved && self.psi_bijective && self.solvable
    }
}

/// Exhaustive check of the Baer correspondences on a Bruck envelope of
/// odd order.
pub fn baer_bijection(env: &Envelope) -> Result<BaerReport> {
    let f = &env.folder;
    let gr = f.group();
    if gr.order() % 2 == 0 {
        return Err(Error::EvenOrder(gr.order()));
    }
    let (tau, ext) = bruck_data(f)?;
    let full = extend_tau(f, &tau)?;

    let plus = &ext.plus;
    let tau_class = plus.conjugacy_class(ext.tau);
    let tau_data = tau_class == ext.lambda && c_of_tau(&full) == f.h() && k_of_tau(gr, &full) == f.k();

    let subgroups = gr.all_subgroups();
    let invariant = |j: &[usize]| {
        let mask = gr.mask(j);
        j.iter().all(|&x| mask[full.image[x]])
    };
    let mut phi_bijective = true;
    let mut normality_preserved = true;
    let mut rows = Vec::new();
    let mut commutator_fixed = BTreeSet::new();
    for j in &subgroups {
        // the subfolder parts over J are forced to be H ∩ J and K ∩ J
        let sub = induced_subfolder(f, j).ok();
        if invariant(j) != sub.is_some() {
            phi_bijective = false;
            continue;
        }
        let Some(sub) = sub else { continue };
        let cj: ElementSet = j.iter().copied().filter(|&x| full.image[x] == x).collect();
        let kj: ElementSet = j.iter().copied().filter(|&x| full.image[x] == gr.inv(x)).collect();
        if cj != sub.h() || kj != sub.k() {
            phi_bijective = false;
        }
        let normal = gr.is_normal_subgroup(j);
        if normal != is_normal_subfolder(f, &sub)? {
            normality_preserved = false;
        }
        let generated = commutator_with(gr, &full, j) == *j;
        if generated {
            commutator_fixed.insert(j.clone());
        }
        rows.push(BaerRow {
            subgroup: j.clone(),
            h: cj,
            k: kj,
            normal,
            subloop: generated.then(|| {
                sub.k()
                    .iter()
                    .map(|k| env.loop_element(*k).unwrap())
                    .collect::<Vec<_>>()
            }),
        });
    }

    // loop elements of l(f) are positions in sorted K, so κ(Y) is a lookup
    let x = loop_of_folder(f)?;
    let orig_subloops: Vec<Vec<usize>> = x
        .all_subloops()
        .into_iter()
        .map(|s| s.members().iter().map(|&i| f.k()[i]).collect())
        .collect();
    let mut images = BTreeSet::new();
    for kappa in &orig_subloops {
        images.insert(gr.subgroup_generated(kappa));
    }
    let psi_bijective = images.len() == orig_subloops.len() && images == commutator_fixed;

    let solvable = gr.is_solvable() && crate::structure::is_solvable_loop(&x).is_some();

    Ok(BaerReport {
        tau_data,
        phi_bijective,
        normality_preserved,
        psi_bijective,
        solvable,
        rows,
    })
}

/// `H ∩ H^k = C_H(k)` for every `k ∈ K`.
pub fn h_meets_conjugate_in_centralizer(f: &LoopFolder) -> bool {
    let gr = f.group();
    f.k().iter().all(|&k| {
        let hk = f.h_conjugate(k);
        let c: ElementSet = f
            .h()
            .iter()
            .copied()
            .filter(|&h| gr.mul(h, k) == gr.mul(k, h))
            .collect();
        intersect(f.h(), &hk) == c
    })
}

/// `H ≤ C_G(τ)` for the extension of `τ`.
pub fn h_centralizes_tau(f: &LoopFolder, tau_full: &TauAut) -> bool {
    f.h().iter().all(|&h| tau_full.image[h] == h)
}

/// `D = <K>` is normal.
pub fn d_normal(f: &LoopFolder) -> bool {
    is_subset(&d_of(f), f.carrier()) && d_is_normal(f)
}
