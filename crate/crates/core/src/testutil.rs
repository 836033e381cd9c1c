use crate::ideals::{minimalize, parse_monomial_list, MonomialIdeal};
use crate::toric::{Configuration, TermOrder};

pub(crate) fn example_config() -> Configuration {
    Configuration::from_rows(&[
        vec![1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
        vec![0, 1, 2, 3, 0, 1, 2, 3, 0, 1, 2, 3, 0],
        vec![0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 2, 2, 3],
    ])
    .unwrap()
}

pub(crate) fn var(s: &str) -> usize {
    (s.as_bytes()[0] - b'a') as usize
}

pub(crate) fn example_order() -> TermOrder {
    let tb = "b e c f i g j h a d m l k".split(' ').map(var).collect();
    TermOrder::new(vec![7, 5, 3, 1, 5, 3, 1, 1, 3, 1, 0, 1, 1], tb).unwrap()
}

pub(crate) fn example_j() -> MonomialIdeal {
    let c = example_config();
    let text = include_str!("../tests/fixtures/example_initial_ideal.txt");
    minimalize(13, parse_monomial_list(text, c.names()).unwrap()).unwrap()
}

/// Faces written as 1-based index lists.
pub(crate) fn faces(list: &[&[usize]]) -> Vec<Vec<usize>> {
    list.iter()
        .map(|f| f.iter().map(|i| i - 1).collect())
        .collect()
}
