/// Odometer over the cartesian product of index ranges `0..lens[k]`, last
/// index varying fastest. Yields nothing if any range is empty; yields one
/// empty tuple for zero ranges.
pub(crate) struct Cartesian {
    lens: Vec<usize>,
    current: Option<Vec<usize>>,
}

impl Cartesian {
    pub(crate) fn new(lens: Vec<usize>) -> Self {
        let current = if lens.contains(&0) {
            None
        } else {
            Some(vec![0; lens.len()])
        };
        Cartesian { lens, current }
    }
}

impl Iterator for Cartesian {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().expect("checked above");
        let mut k = cur.len();
        loop {
            if k == 0 {
                self.current = None;
                break;
            }
            k -= 1;
            cur[k] += 1;
            if cur[k] < self.lens[k] {
                break;
            }
            cur[k] = 0;
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerates_in_lexicographic_order() {
        let all: Vec<_> = Cartesian::new(vec![2, 3]).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![0, 0]);
        assert_eq!(all[1], vec![0, 1]);
        assert_eq!(all[5], vec![1, 2]);
        assert_eq!(Cartesian::new(vec![]).count(), 1);
        assert_eq!(Cartesian::new(vec![3, 0]).count(), 0);
    }
}
