#![allow(dead_code)]

use std::sync::Arc;

use hochschild_core::{BoundQuiver, CochainComplex, Field, StringAlgebra};

pub const CHARS: [Field; 3] = [Field::Rational, Field::Prime(2), Field::Prime(3)];

pub fn loop_algebra() -> Arc<StringAlgebra> {
    let q = BoundQuiver::builder().vertex("1").arrow("x", "1", "1").relation("x", "x").build().unwrap();
    Arc::new(StringAlgebra::new(q).unwrap())
}

pub fn two_cycle() -> Arc<StringAlgebra> {
    let q = BoundQuiver::builder()
        .vertex("1")
        .vertex("2")
        .arrow("a", "1", "2")
        .arrow("b", "2", "1")
        .relation("a", "b")
        .relation("b", "a")
        .build()
        .unwrap();
    Arc::new(StringAlgebra::new(q).unwrap())
}

pub fn a3() -> Arc<StringAlgebra> {
    let q = BoundQuiver::builder()
        .vertex("1")
        .vertex("2")
        .vertex("3")
        .arrow("a", "1", "2")
        .arrow("b", "2", "3")
        .relation("a", "b")
        .build()
        .unwrap();
    Arc::new(StringAlgebra::new(q).unwrap())
}

pub fn complex(alg: &Arc<StringAlgebra>, field: Field) -> CochainComplex {
    CochainComplex::new(alg.clone(), field)
}

pub fn oracle_dims(cx: &CochainComplex, max: usize) -> Vec<usize> {
    (0..=max).map(|n| cx.hh_dim(n)).collect()
}

pub fn formula_dims(cx: &CochainComplex, max: usize) -> Vec<usize> {
    (0..=max).map(|n| hochschild_core::hh_dim_formula(cx.algebra(), n, cx.field()).dim).collect()
}
