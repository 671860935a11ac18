//! Flat `i64` antichains in the componentwise order on `N^d`, for the
//! large orthant-ring powers the Frobenius-side oracles need.

/// Points of `N^d` stored contiguously with stride `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Points {
    pub d: usize,
    pub data: Vec<i64>,
}

impl Points {
    pub fn new(d: usize) -> Points {
        Points { d, data: Vec::new() }
    }

    #[cfg(test)]
    pub fn from_rows(d: usize, rows: &[Vec<i64>]) -> Points {
        let mut p = Points::new(d);
        for r in rows {
            p.push(r);
        }
        p
    }

    pub fn len(&self) -> usize {
        self.data.len() / self.d.max(1)
    }

    pub fn get(&self, i: usize) -> &[i64] {
        &self.data[i * self.d..(i + 1) * self.d]
    }

    pub fn push(&mut self, p: &[i64]) {
        debug_assert_eq!(p.len(), self.d);
        self.data.extend_from_slice(p);
    }

    pub fn iter(&self) -> impl Iterator<Item = &[i64]> {
        (0..self.len()).map(move |i| self.get(i))
    }

    /// Minimal elements, in lexicographic order.
    pub fn minimal(&self) -> Points {
        let d = self.d;
        let mut idx: Vec<usize> = (0..self.len()).collect();
        idx.sort_unstable_by(|&a, &b| self.get(a).cmp(self.get(b)));
        idx.dedup_by(|a, b| self.get(*a) == self.get(*b));
        let mut out = Points::new(d);
        match d {
            0 => {
                if !idx.is_empty() {
                    out.push(&[]);
                }
            }
            1 => {
                if let Some(&i) = idx.first() {
                    out.push(self.get(i));
                }
            }
            2 => {
                let mut best = i64::MAX;
                for i in idx {
                    let p = self.get(i);
                    if p[1] < best {
                        best = p[1];
                        out.push(p);
                    }
                }
            }
            3 => {
                // prefix minimum of z over y, by Fenwick tree; lexicographic
                // order puts every dominator first
                let ymax = idx.iter().map(|&i| self.get(i)[1]).max().unwrap_or(0);
                let mut tree = vec![i64::MAX; ymax as usize + 2];
                for i in idx {
                    let p = self.get(i);
                    let mut k = p[1] as usize + 1;
                    let mut lowest = i64::MAX;
                    while k > 0 {
                        lowest = lowest.min(tree[k]);
                        k &= k - 1;
                    }
                    if lowest <= p[2] {
                        continue;
                    }
                    out.push(p);
                    let mut k = p[1] as usize + 1;
                    while k < tree.len() {
                        tree[k] = tree[k].min(p[2]);
                        k += k & k.wrapping_neg();
                    }
                }
            }
            _ => {
                let mut by_sum = idx;
                by_sum.sort_by_key(|&i| (self.get(i).iter().sum::<i64>(), i));
                let mut kept: Vec<usize> = Vec::new();
                for i in by_sum {
                    let p = self.get(i);
                    if kept.iter().any(|&k| leq(self.get(k), p)) {
                        continue;
                    }
                    kept.push(i);
                }
                kept.sort_by(|&a, &b| self.get(a).cmp(self.get(b)));
                for k in kept {
                    out.push(self.get(k));
                }
            }
        }
        out
    }

    /// Minimal elements of `{p + g}`.
    pub fn times(&self, gens: &Points) -> Points {
        let mut all = Points::new(self.d);
        all.data.reserve(self.data.len() * gens.len());
        let mut buf = vec![0i64; self.d];
        for p in self.iter() {
            for g in gens.iter() {
                for k in 0..self.d {
                    buf[k] = p[k] + g[k];
                }
                all.push(&buf);
            }
        }
        all.minimal()
    }

    /// Minimal elements of `{⌊p / q⌋}`.
    pub fn floor_div(&self, q: i64) -> Points {
        Points {
            d: self.d,
            data: self.data.iter().map(|c| c.div_euclid(q)).collect(),
        }
        .minimal()
    }

    /// Some element lies below `p`.
    pub fn covers(&self, p: &[i64]) -> bool {
        self.iter().any(|g| leq(g, p))
    }
}

pub(crate) fn leq(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}
