//! Shared support for the integration suites: brute-force oracles that
//! recompute ranks and components along an independent code path, and
//! deterministic random generators for networks and power-law systems.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crn::kinetics::{classify_plk, KineticSystem, PlkClass};
use crn::linalg::{rat, Rational, RationalMatrix};
use crn::model::{Complex, Network, NetworkBuilder};
use crn::parser::parse_network;

/// Determinant by Laplace expansion along the first row. Exponential, fine
/// for the k x k minors of matrices with at most 6 rows.
fn determinant(m: &RationalMatrix) -> Rational {
    let n = m.rows();
    assert_eq!(n, m.cols());
    if n == 0 {
        return Rational::one();
    }
    if n == 1 {
        return m[(0, 0)].clone();
    }
    let mut det = Rational::zero();
    for j in 0..n {
        if m[(0, j)].is_zero() {
            continue;
        }
        let mut minor = RationalMatrix::zeros(n - 1, n - 1);
        for r in 1..n {
            let mut cc = 0;
            for c in 0..n {
                if c == j {
                    continue;
                }
                minor[(r - 1, cc)] = m[(r, c)].clone();
                cc += 1;
            }
        }
        let term = &m[(0, j)] * &determinant(&minor);
        if j % 2 == 0 {
            det += term;
        } else {
            det -= term;
        }
    }
    det
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    for rest in combinations(n - 1, k - 1) {
        let mut c = rest.clone();
        c.push(n - 1);
        out.push(c);
    }
    out.extend(combinations(n - 1, k));
    out
}

/// Rank as the largest k with a nonsingular k x k minor.
pub fn oracle_rank(m: &RationalMatrix) -> usize {
    let max_k = m.rows().min(m.cols());
    for k in (1..=max_k).rev() {
        for rows in combinations(m.rows(), k) {
            for cols in combinations(m.cols(), k) {
                let mut sub = RationalMatrix::zeros(k, k);
                for (i, &r) in rows.iter().enumerate() {
                    for (j, &c) in cols.iter().enumerate() {
                        sub[(i, j)] = m[(r, c)].clone();
                    }
                }
                if !determinant(&sub).is_zero() {
                    return k;
                }
            }
        }
    }
    0
}

/// Linkage class count by union-find over the complexes of a network.
pub fn oracle_linkage_classes(net: &Network) -> usize {
    let n = net.num_complexes();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for r in net.reactions() {
        let (a, b) = (find(&mut parent, r.reactant), find(&mut parent, r.product));
        if a != b {
            parent[a] = b;
        }
    }
    (0..n).map(|x| find(&mut parent, x)).collect::<BTreeSet<_>>().len()
}

/// Structural numbers of the subnetwork over `reactions` recomputed the slow
/// way: rank by minor search, linkage classes by union-find.
pub fn oracle_subnetwork_numbers(net: &Network, reactions: &[usize]) -> (usize, usize, usize) {
    let sub = net.subnetwork(reactions);
    let s = oracle_rank(&sub.stoichiometric_matrix());
    let n = sub.num_complexes();
    let l = oracle_linkage_classes(&sub);
    (n, l, s)
}

/// The k-site phosphorylation-dephosphorylation cascade.
pub fn phosphorylation(k: usize) -> Network {
    let mut text = String::new();
    for i in 0..k {
        text.push_str(&format!("B{i}: S{i} + K <-> S{i}K\n"));
        text.push_str(&format!("C{i}: S{i}K -> S{} + K\n", i + 1));
        text.push_str(&format!("D{i}: S{} + F <-> S{}F\n", i + 1, i + 1));
        text.push_str(&format!("E{i}: S{}F -> S{i} + F\n", i + 1));
    }
    parse_network(&text).expect("phosphorylation family is well formed")
}

/// A chain of k monomolecular 3-cycles, consecutive cycles sharing one
/// complex (the k = 2 case is the two-cycle network of the analyze golden
/// run up to renaming).
pub fn chain_of_cycles(k: usize) -> Network {
    let mut text = String::new();
    for i in 0..k {
        text.push_str(&format!("A{i}: V{i} -> W{i}\n"));
        text.push_str(&format!("B{i}: W{i} -> V{}\n", i + 1));
        text.push_str(&format!("C{i}: V{} -> V{i}\n", i + 1));
    }
    parse_network(&text).expect("chain of cycles is well formed")
}

fn random_complex(rng: &mut ChaCha8Rng, m: usize, allow_zero: bool) -> Complex {
    if allow_zero && rng.gen_bool(0.15) {
        return Complex::zero();
    }
    let support = rng.gen_range(0..=2usize.min(m - 1)) + usize::from(rng.gen_bool(0.3));
    let mut terms = Vec::new();
    let mut picked: BTreeSet<usize> = BTreeSet::new();
    for _ in 0..=support {
        let s = rng.gen_range(0..m);
        if picked.insert(s) {
            terms.push((s, rng.gen_range(1..=3u64)));
        }
    }
    Complex::from_terms(terms)
}

/// Random network with at most 6 species, at most 8 directed reactions and
/// stoichiometric coefficients at most 3. Duplicate directed edges are never
/// produced; antiparallel edges only appear as linked reversible pairs.
pub fn random_network(rng: &mut ChaCha8Rng) -> Network {
    loop {
        let m = rng.gen_range(2..=6);
        let species = (0..m).map(|i| format!("X{i}")).collect();
        let num_complexes = rng.gen_range(2..=6);
        let mut complexes: Vec<Complex> = Vec::new();
        let mut guard = 0;
        while complexes.len() < num_complexes {
            guard += 1;
            if guard > 200 {
                break;
            }
            let c = random_complex(rng, m, complexes.iter().all(|x| !x.is_zero()));
            if !complexes.contains(&c) {
                complexes.push(c);
            }
        }
        if complexes.len() < 2 {
            continue;
        }
        let mut b = NetworkBuilder::new(species);
        let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
        let mut directed = 0usize;
        let budget = rng.gen_range(1..=8usize);
        let mut id = 0;
        while directed < budget {
            let u = rng.gen_range(0..complexes.len());
            let v = rng.gen_range(0..complexes.len());
            if u == v || edges.contains(&(u, v)) || edges.contains(&(v, u)) {
                id += 1;
                if id > 200 {
                    break;
                }
                continue;
            }
            let reversible = rng.gen_bool(0.3) && directed + 2 <= budget;
            edges.insert((u, v));
            if reversible {
                edges.insert((v, u));
                b.add_reversible(
                    &format!("R{}", directed + 1),
                    complexes[u].clone(),
                    complexes[v].clone(),
                );
                directed += 2;
            } else {
                b.add_reaction(
                    &format!("R{}", directed + 1),
                    complexes[u].clone(),
                    complexes[v].clone(),
                );
                directed += 1;
            }
        }
        if directed == 0 {
            continue;
        }
        match b.build() {
            Ok(net) => return net,
            Err(_) => continue,
        }
    }
}

/// Random PL-NDK system over an irreversible-only random network (the
/// generic and plus transforms decouple reversible pairs, so the invariant
/// checks for those variants use irreversible inputs). Regenerates until the
/// system is PL-NDK and no NF-node sits at the zero complex.
pub fn random_plndk(rng: &mut ChaCha8Rng, allow_reversible: bool) -> KineticSystem {
    let order_pool = [rat(0, 1), rat(1, 2), rat(1, 1), rat(2, 1)];
    loop {
        let net = random_network(rng);
        if !allow_reversible && net.reactions().iter().any(|r| r.reverse_of.is_some()) {
            continue;
        }
        let (rows, cols) = (net.num_reactions(), net.num_species());
        let mut f = RationalMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                f[(i, j)] = order_pool[rng.gen_range(0..order_pool.len())].clone();
            }
        }
        let labels = (1..=rows).map(|i| format!("k{i}")).collect();
        let ks = KineticSystem::new(net, f, labels);
        let (class, nodes) = classify_plk(&ks);
        if class != PlkClass::PlNdk {
            continue;
        }
        let zero_nf = nodes
            .nf_nodes()
            .any(|n| ks.network().complexes()[n.reactant_complex].is_zero());
        if zero_nf {
            continue;
        }
        return ks;
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
