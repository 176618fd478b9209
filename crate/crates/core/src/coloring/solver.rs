//! Complete backtracking search for list colorings of a conflict graph.
//!
//! Items are chosen by minimum remaining values with ties broken by the
//! lowest index; colors are tried in ascending order. Forward checking keeps
//! per-item counts of blocked colors so a wiped-out domain is detected
//! immediately.

/// A list-coloring instance: `adjacency[i]` are the items that must differ
/// from item `i`, `lists[i]` its allowed colors.
pub struct ListProblem<'a> {
    pub adjacency: &'a [Vec<usize>],
    pub lists: &'a [Vec<u32>],
}

impl ListProblem<'_> {
    /// A coloring from the lists, or `None` when none exists.
    pub fn solve(&self) -> Option<Vec<u32>> {
        Search::new(self, false).run()
    }

    /// Like [`Self::solve`] for instances whose lists are all identical; an
    /// unused color is only tried once per node, since all unused colors are
    /// interchangeable.
    pub fn solve_uniform(&self) -> Option<Vec<u32>> {
        debug_assert!(self.lists.windows(2).all(|w| w[0] == w[1]));
        Search::new(self, true).run()
    }
}

struct Search<'a> {
    adjacency: &'a [Vec<usize>],
    palette: Vec<u32>,
    /// per item, dense indices of its list colors, ascending
    allowed: Vec<Vec<usize>>,
    in_list: Vec<Vec<bool>>,
    blocked: Vec<Vec<u32>>,
    avail: Vec<usize>,
    assigned: Vec<Option<usize>>,
    symmetric: bool,
}

impl<'a> Search<'a> {
    fn new(p: &ListProblem<'a>, symmetric: bool) -> Self {
        let mut palette: Vec<u32> = p.lists.iter().flatten().copied().collect();
        palette.sort_unstable();
        palette.dedup();
        let c = palette.len();
        let allowed: Vec<Vec<usize>> = p
            .lists
            .iter()
            .map(|l| {
                let mut idx: Vec<usize> = l
                    .iter()
                    .map(|x| palette.binary_search(x).expect("color in palette"))
                    .collect();
                idx.sort_unstable();
                idx.dedup();
                idx
            })
            .collect();
        let in_list = allowed
            .iter()
            .map(|a| {
                let mut v = vec![false; c];
                a.iter().for_each(|&i| v[i] = true);
                v
            })
            .collect();
        let n = p.lists.len();
        Search {
            adjacency: p.adjacency,
            avail: allowed.iter().map(Vec::len).collect(),
            allowed,
            in_list,
            blocked: vec![vec![0; c]; n],
            assigned: vec![None; n],
            palette,
            symmetric,
        }
    }

    fn run(mut self) -> Option<Vec<u32>> {
        if self.recurse(None) {
            Some(
                self.assigned
                    .iter()
                    .map(|a| self.palette[a.expect("complete assignment")])
                    .collect(),
            )
        } else {
            None
        }
    }

    fn pick(&self) -> Option<usize> {
        (0..self.assigned.len())
            .filter(|&i| self.assigned[i].is_none())
            .min_by_key(|&i| (self.avail[i], i))
    }

    fn recurse(&mut self, max_used: Option<usize>) -> bool {
        let Some(item) = self.pick() else {
            return true;
        };
        if self.avail[item] == 0 {
            return false;
        }
        for k in 0..self.allowed[item].len() {
            let c = self.allowed[item][k];
            if self.blocked[item][c] > 0 {
                continue;
            }
            // beyond the first unused color, every other unused one is equivalent
            if self.symmetric && c > max_used.map_or(0, |m| m + 1) {
                break;
            }
            let wiped = self.assign(item, c);
            if !wiped {
                let next_max = Some(max_used.map_or(c, |m| m.max(c)));
                if self.recurse(next_max) {
                    return true;
                }
            }
            self.unassign(item, c);
        }
        false
    }

    /// Returns true when some neighbor is left without colors.
    fn assign(&mut self, item: usize, c: usize) -> bool {
        self.assigned[item] = Some(c);
        let mut wiped = false;
        for &j in &self.adjacency[item] {
            if self.assigned[j].is_some() || !self.in_list[j][c] {
                continue;
            }
            if self.blocked[j][c] == 0 {
                self.avail[j] -= 1;
                wiped |= self.avail[j] == 0;
            }
            self.blocked[j][c] += 1;
        }
        wiped
    }

    fn unassign(&mut self, item: usize, c: usize) {
        self.assigned[item] = None;
        for &j in &self.adjacency[item] {
            if self.assigned[j].is_some() || !self.in_list[j][c] {
                continue;
            }
            self.blocked[j][c] -= 1;
            if self.blocked[j][c] == 0 {
                self.avail[j] += 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_with_two_colors_fails() {
        let adj = vec![vec![1, 2], vec![0, 2], vec![0, 1]];
        let lists = vec![vec![1, 2]; 3];
        let p = ListProblem {
            adjacency: &adj,
            lists: &lists,
        };
        assert_eq!(p.solve(), None);
        assert_eq!(p.solve_uniform(), None);
        let lists3 = vec![vec![1, 2, 3]; 3];
        let p3 = ListProblem {
            adjacency: &adj,
            lists: &lists3,
        };
        let s = p3.solve_uniform().unwrap();
        assert!(s[0] != s[1] && s[1] != s[2] && s[0] != s[2]);
    }

    #[test]
    fn respects_lists() {
        let adj = vec![vec![1], vec![0]];
        let lists = vec![vec![5, 9], vec![5]];
        let p = ListProblem {
            adjacency: &adj,
            lists: &lists,
        };
        assert_eq!(p.solve(), Some(vec![9, 5]));
        let empty = vec![vec![], vec![1]];
        assert_eq!(
            ListProblem {
                adjacency: &adj,
                lists: &empty
            }
            .solve(),
            None
        );
    }

    #[test]
    fn no_items() {
        let p = ListProblem {
            adjacency: &[],
            lists: &[],
        };
        assert_eq!(p.solve(), Some(vec![]));
    }
}
