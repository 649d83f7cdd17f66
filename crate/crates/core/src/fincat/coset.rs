//! Todd–Coxeter enumeration of the cosets of the trivial subgroup, i.e. the
//! regular representation of a finitely presented group.
//!
//! Columns `2i` and `2i + 1` hold generator `i` and its inverse. Words are
//! read left to right, so the action is on the right.

const NONE: usize = usize::MAX;

#[inline]
fn inv(col: usize) -> usize {
    col ^ 1
}

/// A finite group given by its right-regular action.
#[derive(Clone, Debug)]
pub(crate) struct EnumeratedGroup {
    /// `act[g][col]` is `g · x`.
    pub act: Vec<Vec<usize>>,
    /// Shortlex least word (column indices) for each element.
    pub normal_form: Vec<Vec<usize>>,
}

impl EnumeratedGroup {
    pub fn order(&self) -> usize {
        self.act.len()
    }

    /// `g · h`, where `h` is read as its normal-form word.
    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.normal_form[h].iter().fold(g, |c, &x| self.act[c][x])
    }

    pub fn apply(&self, g: usize, word: &[usize]) -> usize {
        word.iter().fold(g, |c, &x| self.act[c][x])
    }
}

struct Table {
    cols: usize,
    rows: Vec<Vec<usize>>,
    parent: Vec<usize>,
    limit: usize,
}

#[derive(Debug)]
struct LimitHit;

impl Table {
    fn alive(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn define(&mut self, c: usize, x: usize) -> Result<usize, LimitHit> {
        if self.rows.len() >= self.limit {
            return Err(LimitHit);
        }
        let d = self.rows.len();
        self.rows.push(vec![NONE; self.cols]);
        self.parent.push(d);
        self.rows[c][x] = d;
        self.rows[d][inv(x)] = c;
        Ok(d)
    }

    fn rep(&mut self, mut k: usize) -> usize {
        let mut root = k;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[k] != root {
            let next = self.parent[k];
            self.parent[k] = root;
            k = next;
        }
        root
    }

    fn merge(&mut self, k: usize, l: usize, queue: &mut Vec<usize>) {
        let (a, b) = (self.rep(k), self.rep(l));
        if a != b {
            let (lo, hi) = (a.min(b), a.max(b));
            self.parent[hi] = lo;
            queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut i = 0;
        while i < queue.len() {
            let g = queue[i];
            i += 1;
            for x in 0..self.cols {
                let d = self.rows[g][x];
                if d == NONE {
                    continue;
                }
                self.rows[d][inv(x)] = NONE;
                let mu = self.rep(g);
                let nu = self.rep(d);
                if self.rows[mu][x] != NONE {
                    let t = self.rows[mu][x];
                    self.merge(nu, t, &mut queue);
                } else if self.rows[nu][inv(x)] != NONE {
                    let t = self.rows[nu][inv(x)];
                    self.merge(mu, t, &mut queue);
                } else {
                    self.rows[mu][x] = nu;
                    self.rows[nu][inv(x)] = mu;
                }
            }
        }
    }

    fn scan_and_fill(&mut self, a: usize, w: &[usize]) -> Result<(), LimitHit> {
        if w.is_empty() {
            return Ok(());
        }
        let mut f = a;
        let mut b = a;
        let mut i = 0usize;
        let mut j = w.len() as isize - 1;
        loop {
            while (i as isize) <= j && self.rows[f][w[i]] != NONE {
                f = self.rows[f][w[i]];
                i += 1;
            }
            if (i as isize) > j {
                if f != a {
                    self.coincidence(f, a);
                }
                return Ok(());
            }
            while j >= i as isize && self.rows[b][inv(w[j as usize])] != NONE {
                b = self.rows[b][inv(w[j as usize])];
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return Ok(());
            } else if j == i as isize {
                self.rows[f][w[i]] = b;
                self.rows[b][inv(w[i])] = f;
                return Ok(());
            } else {
                self.define(f, w[i])?;
            }
        }
    }
}

/// Enumerates the group `⟨generators | relators⟩`, or `None` when more than
/// `limit` cosets would be needed.
pub(crate) fn enumerate(
    generators: usize,
    relators: &[Vec<usize>],
    limit: usize,
) -> Option<EnumeratedGroup> {
    let cols = 2 * generators;
    let mut table = Table {
        cols,
        rows: vec![vec![NONE; cols]],
        parent: vec![0],
        limit: limit.max(1),
    };
    let mut a = 0;
    while a < table.rows.len() {
        if table.alive(a) {
            for r in relators {
                if !table.alive(a) {
                    break;
                }
                table.scan_and_fill(a, r).ok()?;
            }
            if table.alive(a) {
                for x in 0..cols {
                    if table.rows[a][x] == NONE {
                        table.define(a, x).ok()?;
                    }
                }
            }
        }
        a += 1;
    }

    // Renumber the live cosets in breadth-first shortlex order from the
    // identity coset, recording normal forms.
    let mut label = vec![NONE; table.rows.len()];
    let mut order = vec![0usize];
    let mut normal_form = vec![Vec::new()];
    label[0] = 0;
    let mut head = 0;
    while head < order.len() {
        let c = order[head];
        for x in 0..cols {
            let d = table.rows[c][x];
            debug_assert!(d != NONE && table.alive(d));
            if label[d] == NONE {
                label[d] = order.len();
                order.push(d);
                let mut w = normal_form[head].clone();
                w.push(x);
                normal_form.push(w);
            }
        }
        head += 1;
    }
    let act = order
        .iter()
        .map(|&c| table.rows[c].iter().map(|&d| label[d]).collect())
        .collect();
    Some(EnumeratedGroup { act, normal_form })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_and_dihedral_orders() {
        let c5 = enumerate(1, &[vec![0; 5]], 1000).unwrap();
        assert_eq!(c5.order(), 5);
        // ⟨r, s | r³, s², srsr⟩ = S₃
        let s3 = enumerate(2, &[vec![0; 3], vec![2, 2], vec![2, 0, 2, 0]], 1000).unwrap();
        assert_eq!(s3.order(), 6);
        let trivial = enumerate(0, &[], 10).unwrap();
        assert_eq!(trivial.order(), 1);
        // ⟨a, b | ab = ba, a², b²⟩ = Klein four
        let v4 = enumerate(2, &[vec![0, 0], vec![2, 2], vec![0, 2, 1, 3]], 1000).unwrap();
        assert_eq!(v4.order(), 4);
    }

    #[test]
    fn infinite_groups_hit_the_limit() {
        assert!(enumerate(1, &[], 50).is_none());
    }

    #[test]
    fn multiplication_is_associative() {
        let s3 = enumerate(2, &[vec![0; 3], vec![2, 2], vec![2, 0, 2, 0]], 1000).unwrap();
        let n = s3.order();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    assert_eq!(s3.mul(s3.mul(a, b), c), s3.mul(a, s3.mul(b, c)));
                }
            }
        }
    }
}
