use alloc::vec;
use alloc::vec::Vec;

/// A literal: variable index and polarity.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Lit {
    var: usize,
    positive: bool,
}

impl Lit {
    pub(crate) fn pos(var: usize) -> Self {
        Lit { var, positive: true }
    }

    pub(crate) fn neg(var: usize) -> Self {
        Lit { var, positive: false }
    }

    fn node(self) -> usize {
        2 * self.var + usize::from(!self.positive)
    }

    fn not(self) -> Self {
        Lit {
            var: self.var,
            positive: !self.positive,
        }
    }
}

/// 2-SAT by strongly connected components of the implication graph.
#[derive(Clone)]
pub(crate) struct TwoSat {
    vars: usize,
    edges: Vec<Vec<usize>>,
}

impl TwoSat {
    pub(crate) fn new(vars: usize) -> Self {
        TwoSat {
            vars,
            edges: vec![Vec::new(); 2 * vars],
        }
    }

    pub(crate) fn clause(&mut self, a: Lit, b: Lit) {
        self.edges[a.not().node()].push(b.node());
        self.edges[b.not().node()].push(a.node());
    }

    pub(crate) fn unit(&mut self, a: Lit) {
        self.clause(a, a);
    }

    pub(crate) fn satisfiable(&self) -> bool {
        let comp = self.components();
        (0..self.vars).all(|v| comp[2 * v] != comp[2 * v + 1])
    }

    /// Kosaraju, iteratively.
    fn components(&self) -> Vec<usize> {
        let n = 2 * self.vars;
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![(s, 0usize)];
            while let Some(&mut (v, ref mut i)) = stack.last_mut() {
                if let Some(&w) = self.edges[v].get(*i) {
                    *i += 1;
                    if !seen[w] {
                        seen[w] = true;
                        stack.push((w, 0));
                    }
                } else {
                    order.push(v);
                    stack.pop();
                }
            }
        }
        let mut reverse = vec![Vec::new(); n];
        for (v, out) in self.edges.iter().enumerate() {
            for &w in out {
                reverse[w].push(v);
            }
        }
        let mut comp = vec![usize::MAX; n];
        let mut label = 0;
        for &s in order.iter().rev() {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = label;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in &reverse[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = label;
                        stack.push(w);
                    }
                }
            }
            label += 1;
        }
        comp
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_instances() {
        let mut t = TwoSat::new(2);
        t.clause(Lit::pos(0), Lit::pos(1));
        t.clause(Lit::neg(0), Lit::neg(1));
        assert!(t.satisfiable());
        t.unit(Lit::pos(0));
        assert!(t.satisfiable());
        t.unit(Lit::pos(1));
        assert!(!t.satisfiable());
    }
}
