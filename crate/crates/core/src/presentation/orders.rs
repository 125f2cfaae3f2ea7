use alloc::vec;
use alloc::vec::Vec;

use super::algebra::AlgebraTable;
use super::quiver::LinearOrder;
use crate::exactlin::Field;

/// The hom graph of an algebra and its directedness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectedOrders {
    /// `graph[v][w]` iff `v != w` and there is a nonzero morphism `v -> w`.
    pub graph: Vec<Vec<bool>>,
    pub is_directed: bool,
}

impl DirectedOrders {
    /// The linear orders compatible with every edge, in lexicographic order of their
    /// ascending sequences. Empty when the graph has a cycle.
    pub fn orders(&self) -> LinearExtensions<'_> {
        let n = self.graph.len();
        LinearExtensions {
            graph: &self.graph,
            stack: vec![0],
            current: Vec::with_capacity(n),
            used: vec![false; n],
        }
    }

    /// Whether every edge goes up in `order`.
    pub fn respects(&self, order: &LinearOrder) -> bool {
        self.graph.iter().enumerate().all(|(v, row)| {
            row.iter()
                .enumerate()
                .all(|(w, &edge)| !edge || order.less(v, w))
        })
    }
}

/// Depth-first enumeration of topological sorts.
pub struct LinearExtensions<'a> {
    graph: &'a [Vec<bool>],
    /// Next candidate vertex to try at each depth.
    stack: Vec<usize>,
    current: Vec<usize>,
    used: Vec<bool>,
}

impl LinearExtensions<'_> {
    fn available(&self, v: usize) -> bool {
        !self.used[v] && (0..self.graph.len()).all(|u| !self.graph[u][v] || self.used[u])
    }
}

impl Iterator for LinearExtensions<'_> {
    type Item = LinearOrder;

    fn next(&mut self) -> Option<LinearOrder> {
        let n = self.graph.len();
        loop {
            if self.stack.is_empty() {
                return None;
            }
            let depth = self.stack.len() - 1;
            if depth == n {
                let out = LinearOrder::new(self.current.clone()).unwrap();
                self.stack.pop();
                if let Some(v) = self.current.pop() {
                    self.used[v] = false;
                }
                return Some(out);
            }
            let start = self.stack[depth];
            match (start..n).find(|&v| self.available(v)) {
                Some(v) => {
                    self.stack[depth] = v + 1;
                    self.used[v] = true;
                    self.current.push(v);
                    self.stack.push(0);
                }
                None => {
                    self.stack.pop();
                    if self.stack.is_empty() {
                        return None;
                    }
                    let v = self.current.pop().unwrap();
                    self.used[v] = false;
                }
            }
        }
    }
}

pub fn directed_orders<F: Field>(algebra: &AlgebraTable<F>) -> DirectedOrders {
    let n = algebra.vertex_count();
    let graph: Vec<Vec<bool>> = (0..n)
        .map(|v| {
            (0..n)
                .map(|w| v != w && !algebra.hom_block(v, w).is_empty())
                .collect()
        })
        .collect();
    // Kahn's algorithm decides acyclicity.
    let mut indeg: Vec<usize> = (0..n)
        .map(|w| (0..n).filter(|&v| graph[v][w]).count())
        .collect();
    let mut ready: Vec<usize> = (0..n).filter(|&w| indeg[w] == 0).collect();
    let mut seen = 0;
    while let Some(v) = ready.pop() {
        seen += 1;
        for w in 0..n {
            if graph[v][w] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    ready.push(w);
                }
            }
        }
    }
    DirectedOrders {
        is_directed: seen == n,
        graph,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    #[test]
    fn e3_1_has_two_directed_orders() {
        let a = q(&e3_1());
        let d = directed_orders(&a);
        assert!(d.is_directed);
        let orders: Vec<_> = d.orders().collect();
        // brute force over all 24 orders
        let brute: Vec<_> = LinearOrder::all(4).into_iter().filter(|o| d.respects(o)).collect();
        assert_eq!(orders, brute);
        assert_eq!(orders.len(), 2);
        let names = a.vertices();
        assert_eq!(orders[0].display(names), "x < y < z < w");
        assert_eq!(orders[1].display(names), "x < z < y < w");
    }

    #[test]
    fn e3_2_unique_and_two_cycle_none() {
        let d = directed_orders(&q(&e3_2()));
        assert!(d.is_directed);
        assert_eq!(d.orders().count(), 1);
        let d = directed_orders(&q(&two_cycle()));
        assert!(!d.is_directed);
        assert_eq!(d.orders().count(), 0);
    }
}
