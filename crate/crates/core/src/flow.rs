//! Dinic maximum flow on small integer networks.

use std::collections::VecDeque;

pub(crate) struct FlowNetwork {
    adj: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i64>,
    initial: Vec<i64>,
}

impl FlowNetwork {
    pub(crate) fn new(nodes: usize) -> Self {
        FlowNetwork {
            adj: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
            initial: Vec::new(),
        }
    }

    /// Adds an arc and its residual twin; returns the arc id.
    pub(crate) fn add_arc(&mut self, from: usize, to: usize, cap: i64) -> usize {
        let id = self.to.len();
        self.adj[from].push(id);
        self.to.push(to);
        self.cap.push(cap);
        self.initial.push(cap);
        self.adj[to].push(id + 1);
        self.to.push(from);
        self.cap.push(0);
        self.initial.push(0);
        id
    }

    pub(crate) fn flow_on(&self, arc: usize) -> i64 {
        self.initial[arc] - self.cap[arc]
    }

    pub(crate) fn max_flow(&mut self, source: usize, sink: usize) -> i64 {
        let mut total = 0;
        loop {
            let level = self.levels(source);
            if level[sink] < 0 {
                return total;
            }
            let mut next = vec![0usize; self.adj.len()];
            loop {
                let pushed = self.augment(source, sink, i64::MAX, &level, &mut next);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
    }

    fn levels(&self, source: usize) -> Vec<i64> {
        let mut level = vec![-1; self.adj.len()];
        level[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &arc in &self.adj[u] {
                let v = self.to[arc];
                if self.cap[arc] > 0 && level[v] < 0 {
                    level[v] = level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        level
    }

    fn augment(&mut self, u: usize, sink: usize, limit: i64, level: &[i64], next: &mut [usize]) -> i64 {
        if u == sink {
            return limit;
        }
        while next[u] < self.adj[u].len() {
            let arc = self.adj[u][next[u]];
            let v = self.to[arc];
            if self.cap[arc] > 0 && level[v] == level[u] + 1 {
                let pushed = self.augment(v, sink, limit.min(self.cap[arc]), level, next);
                if pushed > 0 {
                    self.cap[arc] -= pushed;
                    self.cap[arc ^ 1] += pushed;
                    return pushed;
                }
            }
            next[u] += 1;
        }
        0
    }
}
