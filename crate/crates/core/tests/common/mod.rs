#![allow(dead_code)]

use matsplit_core::{ElementSet, LabeledMatrix, PrimeField, SplitSpec, VectorMatroid};

pub fn matroid(p: u32, rows: &[&[u32]]) -> VectorMatroid {
    let field = PrimeField::new(p).unwrap();
    let cols = rows[0].len();
    let rows: Vec<Vec<u32>> = rows.iter().map(|r| r.to_vec()).collect();
    let labels = (1..=cols as u32).collect();
    VectorMatroid::new(LabeledMatrix::from_rows(field, labels, &rows).unwrap())
}

pub fn p8() -> VectorMatroid {
    matroid(
        3,
        &[
            &[1, 0, 0, 0, 0, 1, 1, 2],
            &[0, 1, 0, 0, 1, 0, 1, 1],
            &[0, 0, 1, 0, 1, 1, 0, 1],
            &[0, 0, 0, 1, 2, 1, 1, 0],
        ],
    )
}

pub fn p8_spec() -> SplitSpec {
    SplitSpec::new(&p8(), 1, 4, 4).unwrap()
}

pub fn gf5() -> VectorMatroid {
    matroid(5, &[&[1, 0, 0, 1, 1], &[0, 1, 0, 1, 1], &[0, 0, 1, 1, 0]])
}

pub fn gf5_spec() -> SplitSpec {
    SplitSpec::new(&gf5(), 3, 5, 5).unwrap()
}

pub fn s(xs: &[u32]) -> ElementSet {
    xs.iter().copied().collect()
}

pub fn family(xs: &[&[u32]]) -> Vec<ElementSet> {
    let mut v: Vec<ElementSet> = xs.iter().map(|x| s(x)).collect();
    v.sort();
    v
}
