/// Greedy construction of the lexicographically smallest optimal solution.
///
/// `is_solution(P)` says whether `P` alone is an optimal solution.
/// `extendable(in, out)` says whether some optimal solution contains every
/// id in `in` and none in `out`. Candidates must be sorted ascending.
pub(crate) fn lex_min_optimal(
    candidates: &[usize],
    mut is_solution: impl FnMut(&[usize]) -> bool,
    mut extendable: impl FnMut(&[usize], &[usize]) -> bool,
) -> Option<Vec<usize>> {
    let mut chosen = Vec::new();
    let mut excluded = Vec::new();
    let mut idx = 0;
    loop {
        if is_solution(&chosen) {
            return Some(chosen);
        }
        let mut grew = false;
        while idx < candidates.len() {
            let v = candidates[idx];
            idx += 1;
            chosen.push(v);
            if extendable(&chosen, &excluded) {
                grew = true;
                break;
            }
            chosen.pop();
            excluded.push(v);
        }
        if !grew {
            return None;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn picks_smallest_sequence_among_optima() {
        // Optimal sets: {1,4}, {2,3}, {1,5}. Lex-min is [1,4].
        let optima: Vec<Vec<usize>> = vec![vec![1, 4], vec![2, 3], vec![1, 5]];
        let got = lex_min_optimal(
            &[0, 1, 2, 3, 4, 5],
            |p| optima.iter().any(|o| o == p),
            |inn, out| {
                optima
                    .iter()
                    .any(|o| inn.iter().all(|v| o.contains(v)) && out.iter().all(|v| !o.contains(v)))
            },
        );
        assert_eq!(got, Some(vec![1, 4]));
    }
}
