use crate::bitset::BitSet;
use crate::caps::Caps;
use crate::error::Result;
use crate::graph::Graph;

pub fn is_clique(g: &Graph, set: &[usize]) -> bool {
    set.iter().enumerate().all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && g.has_edge(u, v)))
}

pub fn is_independent(g: &Graph, set: &[usize]) -> bool {
    set.iter().enumerate().all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && !g.has_edge(u, v)))
}

/// Pairwise adjacent and every member carries a loop.
pub fn is_clique_loop(g: &Graph, set: &[usize]) -> bool {
    set.iter().all(|&v| g.has_loop(v)) && is_clique(g, set)
}

struct MaxClique<'a> {
    adj: &'a [BitSet],
    best: Vec<usize>,
}

impl MaxClique<'_> {
    /// Greedy sequential colouring of `cand` in id order; returns vertices in
    /// colour order with the colour number of each.
    fn color(&self, cand: &BitSet) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(cand.count());
        let mut uncolored = cand.clone();
        let mut k = 0;
        while !uncolored.is_empty() {
            k += 1;
            let mut q = uncolored.clone();
            while let Some(v) = q.first() {
                q.remove(v);
                q.difference_with(&self.adj[v]);
                uncolored.remove(v);
                out.push((v, k));
            }
        }
        out
    }

    fn expand(&mut self, mut cand: BitSet, current: &mut Vec<usize>) {
        let colored = self.color(&cand);
        for &(v, k) in colored.iter().rev() {
            if current.len() + k <= self.best.len() {
                return;
            }
            current.push(v);
            let next = cand.intersection(&self.adj[v]);
            if next.is_empty() {
                if current.len() > self.best.len() {
                    let mut s = current.clone();
                    s.sort_unstable();
                    self.best = s;
                }
            } else {
                self.expand(next, current);
            }
            current.pop();
            cand.remove(v);
        }
    }
}

/// Maximum clique among `within`, sorted ascending.
fn max_clique_in(g: &Graph, within: &BitSet) -> Vec<usize> {
    let adj: Vec<BitSet> = (0..g.vertex_count()).map(|v| g.neighbors(v).clone()).collect();
    let mut search = MaxClique { adj: &adj, best: within.first().into_iter().collect() };
    if within.is_empty() {
        return Vec::new();
    }
    search.expand(within.clone(), &mut Vec::new());
    search.best
}

/// A maximum clique (loops ignored), sorted ascending.
pub fn maximum_clique(g: &Graph, caps: &Caps) -> Result<Vec<usize>> {
    caps.check_solver("clique", g.vertex_count())?;
    Ok(max_clique_in(g, &BitSet::full(g.vertex_count())))
}

/// A maximum independent set, via a maximum clique of the complement.
pub fn maximum_independent_set(g: &Graph, caps: &Caps) -> Result<Vec<usize>> {
    let n = g.vertex_count();
    if n > caps.complement_clique {
        return Err(crate::error::Error::cap("independence", n as u64, caps.complement_clique as u64));
    }
    let c = g.complement();
    Ok(max_clique_in(&c, &BitSet::full(n)))
}

/// A maximum clique-loop: pairwise adjacent vertices that all carry loops.
pub fn maximum_clique_loop(g: &Graph, caps: &Caps) -> Result<Vec<usize>> {
    let loops = g.loop_set();
    if loops.count() > caps.clique_loop {
        return Err(crate::error::Error::cap("clique-loop", loops.count() as u64, caps.clique_loop as u64));
    }
    Ok(max_clique_in(g, loops))
}
