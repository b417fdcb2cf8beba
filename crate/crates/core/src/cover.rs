//! Finite cyclic covers dual to a primitive class, by Reidemeister–Schreier
//! rewriting over the cyclic quotient `g ↦ ψ(g) mod m`.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::laurent::Covector;
use crate::presentation::{Presentation, Word};

/// A cover presentation together with the bookkeeping of the rewriting.
#[derive(Clone, Debug)]
pub struct CyclicCover {
    pub presentation: Presentation,
    pub degree: usize,
    /// Schreier generators before discarding the trivial ones (`m·g`).
    pub schreier_generators: usize,
    /// Trivial Schreier generators (transversal tree edges, `m − 1`).
    pub tree_edges: usize,
    /// Rewritten relators before empty ones are dropped (`m·n`).
    pub rewritten_relators: usize,
}

impl CyclicCover {
    /// `1 − #gens + #rels` computed from the raw rewriting counts.
    pub fn euler_characteristic(&self) -> i64 {
        1 - (self.schreier_generators - self.tree_edges) as i64 + self.rewritten_relators as i64
    }
}

/// Residues `ψ(x_j) mod m` of the generators.
fn generator_residues(p: &Presentation, psi: &Covector, m: usize) -> Result<Vec<usize>> {
    let entries = psi.primitive_entries()?;
    let ab = p.homology();
    if entries.len() != ab.b {
        return Err(Error::RankMismatch {
            left: ab.b,
            right: entries.len(),
        });
    }
    let m = m as i64;
    Ok(ab
        .psi_values(&entries)
        .into_iter()
        .map(|v| v.rem_euclid(m) as usize)
        .collect())
}

/// Prefix-closed coset representatives: powers of the first generator whose
/// residue is a unit mod `m`, otherwise a breadth-first spanning tree.
fn transversal(residues: &[usize], m: usize) -> Vec<Word> {
    if let Some(w) = residues.iter().position(|&c| num_integer::gcd(c, m) == 1) {
        let c = residues[w];
        let mut reps = vec![Word::empty(); m];
        for j in 0..m {
            reps[(j * c) % m] = Word::from_letters([(w, j as i64)]);
        }
        return reps;
    }
    let mut reps: Vec<Option<Word>> = vec![None; m];
    reps[0] = Some(Word::empty());
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        let base = reps[k].clone().expect("visited");
        for (x, &c) in residues.iter().enumerate() {
            for (target, exp) in [((k + c) % m, 1), ((k + m - c) % m, -1)] {
                if reps[target].is_none() {
                    let mut w = base.clone();
                    w.push(x, exp);
                    reps[target] = Some(w);
                    queue.push_back(target);
                }
            }
        }
    }
    reps.into_iter()
        .map(|r| r.expect("ψ is surjective onto Z/m"))
        .collect()
}

/// Reidemeister–Schreier presentation of the index-`m` subgroup
/// `ker(G → H → Z → Z/m)`; generators are named `{gen}_{coset}`.
pub fn cyclic_cover(p: &Presentation, psi: &Covector, m: usize) -> Result<CyclicCover> {
    if m == 0 {
        return Err(Error::BadCoverDegree);
    }
    let residues = generator_residues(p, psi, m)?;
    if m == 1 {
        return Ok(CyclicCover {
            presentation: p.clone(),
            degree: 1,
            schreier_generators: p.num_generators(),
            tree_edges: 0,
            rewritten_relators: p.relators().len(),
        });
    }
    let g = p.num_generators();
    let reps = transversal(&residues, m);

    // index[k][x] is the cover generator for s_{k,x}, or None when trivial.
    let mut index = vec![vec![None; g]; m];
    let mut names = Vec::new();
    let mut tree_edges = 0;
    for (k, rk) in reps.iter().enumerate() {
        for (x, &c) in residues.iter().enumerate() {
            let s = rk
                .concat(&Word::from_letters([(x, 1)]))
                .concat(&reps[(k + c) % m].inverse());
            if s.is_empty() {
                tree_edges += 1;
            } else {
                index[k][x] = Some(names.len());
                names.push(format!("{}_{}", p.generators()[x], k));
            }
        }
    }

    let mut relators = Vec::new();
    let mut rewritten = 0;
    for rel in p.relators() {
        for start in 0..m {
            rewritten += 1;
            let mut cur = start;
            let mut out = Word::empty();
            for l in rel.letters() {
                let c = residues[l.gen];
                if l.exp > 0 {
                    for _ in 0..l.exp {
                        if let Some(s) = index[cur][l.gen] {
                            out.push(s, 1);
                        }
                        cur = (cur + c) % m;
                    }
                } else {
                    for _ in 0..-l.exp {
                        cur = (cur + m - c) % m;
                        if let Some(s) = index[cur][l.gen] {
                            out.push(s, -1);
                        }
                    }
                }
            }
            debug_assert_eq!(cur, start, "relators lie in the kernel");
            if !out.is_empty() {
                relators.push(out);
            }
        }
    }
    Ok(CyclicCover {
        presentation: Presentation::new(names, relators)?,
        degree: m,
        schreier_generators: m * g,
        tree_edges,
        rewritten_relators: rewritten,
    })
}

pub fn cyclic_cover_presentation(p: &Presentation, psi: &Covector, m: usize) -> Result<Presentation> {
    cyclic_cover(p, psi, m).map(|c| c.presentation)
}

/// First Betti number of the `m`-fold cyclic cover dual to `ψ`.
pub fn betti_of_cyclic_cover(p: &Presentation, psi: &Covector, m: usize) -> Result<usize> {
    Ok(cyclic_cover_presentation(p, psi, m)?.homology().b)
}
