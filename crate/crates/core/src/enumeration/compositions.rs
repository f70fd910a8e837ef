/// Weak compositions of `total` into `parts` non-negative parts, in
/// colexicographic order (the last part varies slowest).
///
/// ```
/// use simple_games::enumeration::WeakCompositions;
/// let all: Vec<Vec<u32>> = WeakCompositions::new(2, 3).collect();
/// assert_eq!(all, vec![
///     vec![2, 0, 0], vec![1, 1, 0], vec![0, 2, 0],
///     vec![1, 0, 1], vec![0, 1, 1], vec![0, 0, 2],
/// ]);
/// ```
#[derive(Clone, Debug)]
pub struct WeakCompositions {
    current: Option<Vec<u32>>,
}

impl WeakCompositions {
    pub fn new(total: u32, parts: usize) -> Self {
        let current = match parts {
            0 => (total == 0).then(Vec::new),
            _ => {
                let mut c = vec![0; parts];
                c[0] = total;
                Some(c)
            }
        };
        WeakCompositions { current }
    }
}

impl Iterator for WeakCompositions {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let out = self.current.take()?;
        let k = out.len();
        if let Some(i) = (0..k.saturating_sub(1)).find(|&i| out[i] > 0) {
            let mut next = out.clone();
            let v = next[i];
            next[i] = 0;
            next[i + 1] += 1;
            next[0] = v - 1;
            self.current = Some(next);
        }
        Some(out)
    }
}
