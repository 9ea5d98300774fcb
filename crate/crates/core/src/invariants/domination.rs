use crate::bitset::BitSet;
use crate::caps::Caps;
use crate::error::Result;
use crate::graph::Graph;

/// Every vertex is in `set` or adjacent to a member. Loops play no role.
pub fn is_dominating(g: &Graph, set: &[usize]) -> bool {
    let mut covered = BitSet::new(g.vertex_count());
    for &v in set {
        if v >= g.vertex_count() {
            return false;
        }
        covered.union_with(&g.closed_neighborhood(v));
    }
    covered.count() == g.vertex_count()
}

/// Max-coverage greedy dominating set, lowest id on ties.
pub fn greedy_dominating_set(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let closed: Vec<BitSet> = (0..n).map(|v| g.closed_neighborhood(v)).collect();
    let mut uncovered = BitSet::full(n);
    let mut out = Vec::new();
    while !uncovered.is_empty() {
        let best = (0..n).max_by_key(|&v| (closed[v].intersection_count(&uncovered), std::cmp::Reverse(v))).unwrap();
        uncovered.difference_with(&closed[best]);
        out.push(best);
    }
    out.sort_unstable();
    out
}

struct Search {
    closed: Vec<BitSet>,
    best: Vec<usize>,
}

impl Search {
    /// Fewest extra vertices that could cover `uncovered`: the shortest prefix
    /// of the coverage counts, sorted descending, whose sum reaches it.
    fn lower_bound(&self, uncovered: &BitSet, allowed: &BitSet) -> usize {
        let need = uncovered.count();
        let mut gains: Vec<usize> = allowed.iter().map(|v| self.closed[v].intersection_count(uncovered)).collect();
        gains.sort_unstable_by(|a, b| b.cmp(a));
        let mut sum = 0;
        for (k, g) in gains.into_iter().enumerate() {
            if sum >= need {
                return k;
            }
            sum += g;
        }
        if sum >= need {
            // every allowed vertex was needed
            allowed.count()
        } else {
            usize::MAX
        }
    }

    fn run(&mut self, uncovered: BitSet, allowed: BitSet, chosen: &mut Vec<usize>) {
        if uncovered.is_empty() {
            if chosen.len() < self.best.len() {
                let mut s = chosen.clone();
                s.sort_unstable();
                self.best = s;
            }
            return;
        }
        let lb = self.lower_bound(&uncovered, &allowed);
        if lb == usize::MAX || chosen.len() + lb >= self.best.len() {
            return;
        }
        // branch on the uncovered vertex with the fewest remaining options
        let mut pick: Option<(usize, BitSet)> = None;
        for u in uncovered.iter() {
            let opts = self.closed[u].intersection(&allowed);
            let c = opts.count();
            if c == 0 {
                return;
            }
            if pick.as_ref().is_none_or(|(pc, _)| c < *pc) {
                pick = Some((c, opts));
                if c == 1 {
                    break;
                }
            }
        }
        let (_, opts) = pick.expect("uncovered is nonempty");
        let gains: Vec<(usize, BitSet)> = opts
            .iter()
            .map(|v| {
                let mut s = self.closed[v].clone();
                s.intersect_with(&uncovered);
                (v, s)
            })
            .collect();
        // drop options whose new coverage is contained in another's
        let mut order: Vec<usize> = (0..gains.len())
            .filter(|&i| {
                !gains.iter().enumerate().any(|(j, (_, other))| {
                    j != i && gains[i].1.is_subset(other) && (other.count() > gains[i].1.count() || j < i)
                })
            })
            .collect();
        order.sort_by_key(|&i| (std::cmp::Reverse(gains[i].1.count()), gains[i].0));

        let mut allowed = allowed;
        for i in order {
            let (v, ref cov) = gains[i];
            let mut rest = uncovered.clone();
            rest.difference_with(cov);
            chosen.push(v);
            self.run(rest, allowed.clone(), chosen);
            chosen.pop();
            // later branches never use `v`; those solutions were covered here
            allowed.remove(v);
        }
    }
}

/// A minimum dominating set by branch and bound, sorted ascending.
pub fn minimum_dominating_set(g: &Graph, caps: &Caps) -> Result<Vec<usize>> {
    let n = g.vertex_count();
    caps.check_solver("domination", n)?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut search = Search {
        closed: (0..n).map(|v| g.closed_neighborhood(v)).collect(),
        best: greedy_dominating_set(g),
    };
    // isolated vertices are forced
    let mut chosen: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 0).collect();
    let mut uncovered = BitSet::full(n);
    let mut allowed = BitSet::full(n);
    for &v in &chosen {
        uncovered.remove(v);
        allowed.remove(v);
    }
    search.run(uncovered, allowed, &mut chosen);
    Ok(search.best)
}
