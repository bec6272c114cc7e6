/// Small min-cost flow by successive shortest paths (queue-based Bellman-Ford), for
/// networks with non-negative arc costs.
pub(crate) struct MinCostFlow {
    n: usize,
    to: Vec<usize>,
    cap: Vec<i64>,
    cost: Vec<i64>,
    head: Vec<Vec<usize>>,
}

impl MinCostFlow {
    pub fn new(n: usize) -> Self {
        MinCostFlow { n, to: Vec::new(), cap: Vec::new(), cost: Vec::new(), head: vec![Vec::new(); n] }
    }

    /// Adds an arc and returns its id (the residual twin is `id ^ 1`).
    pub fn add(&mut self, u: usize, v: usize, cap: i64, cost: i64) -> usize {
        let id = self.to.len();
        for (a, b, c, w) in [(u, v, cap, cost), (v, u, 0, -cost)] {
            self.to.push(b);
            self.cap.push(c);
            self.cost.push(w);
            self.head[a].push(self.to.len() - 1);
        }
        id
    }

    pub fn flow_on(&self, arc: usize) -> i64 {
        self.cap[arc ^ 1]
    }

    /// Sends as much flow as possible from `s` to `t` at minimum cost;
    /// returns `(flow, cost)`.
    pub fn run(&mut self, s: usize, t: usize) -> (i64, i64) {
        let (mut flow, mut total) = (0, 0);
        loop {
            let mut dist = vec![i64::MAX; self.n];
            let mut prev = vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut queued = vec![false; self.n];
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                queued[u] = false;
                for &e in &self.head[u] {
                    let v = self.to[e];
                    if self.cap[e] > 0 && dist[u] + self.cost[e] < dist[v] {
                        dist[v] = dist[u] + self.cost[e];
                        prev[v] = e;
                        if !queued[v] {
                            queued[v] = true;
                            queue.push_back(v);
                        }
                    }
                }
            }
            if dist[t] == i64::MAX {
                return (flow, total);
            }
            let mut push = i64::MAX;
            let mut v = t;
            while v != s {
                let e = prev[v];
                push = push.min(self.cap[e]);
                v = self.to[e ^ 1];
            }
            let mut v = t;
            while v != s {
                let e = prev[v];
                self.cap[e] -= push;
                self.cap[e ^ 1] += push;
                v = self.to[e ^ 1];
            }
            flow += push;
            total += push * dist[t];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn picks_cheaper_route() {
        let mut f = MinCostFlow::new(4);
        let a = f.add(0, 1, 1, 5);
        let b = f.add(0, 2, 2, 1);
        f.add(1, 3, 2, 0);
        f.add(2, 3, 1, 0);
        assert_eq!(f.run(0, 3), (2, 6));
        assert_eq!((f.flow_on(a), f.flow_on(b)), (1, 1));
    }
}
