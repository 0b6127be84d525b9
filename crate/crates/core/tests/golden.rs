//! Worked examples with known numbers.

use nicepar::classify::{genfun_coefficients, count_even_orbits, is_nice, Rule};
use nicepar::combinatorics::Partition;
use nicepar::jordan::{dimension_report, jordan_form};
use nicepar::oracle::matrix_model::MatrixModel;
use nicepar::oracle::{self, GradedAlgebra, RankReport};
use nicepar::parabolic::{blocks_to_coloring, coloring_to_blocks, levi_dim};
use nicepar::richardson::build_matrix;
use nicepar::{BlockSequence, LieType, ParabolicSpec};

fn bs(t: LieType, b: &[usize]) -> BlockSequence {
    BlockSequence::new(t, b.to_vec()).unwrap()
}

/// `dim g^X` of the Richardson matrix, through the root-space oracle and
/// the matrix model separately.
fn richardson_centralizer(b: &BlockSequence) -> (usize, usize) {
    let m = build_matrix(b).unwrap();
    let model = MatrixModel::new(b.lie_type(), b.rank()).unwrap();
    let x = m.to_exact();
    assert!(model.contains(&x));
    let el = model.decompose(&x).unwrap();
    let alg = GradedAlgebra::new(&blocks_to_coloring(b)).unwrap();
    (RankReport::compute(&alg, &el).unwrap().centralizer_dim(), model.centralizer_dim(&x))
}

#[test]
fn c5_three_four_three() {
    let b = bs(LieType::C, &[3, 4, 3]);
    let r = dimension_report(&b).unwrap();
    assert_eq!(r.partition.parts(), &[3, 3, 2, 2]);
    assert_eq!(r.dual.parts(), &[4, 4, 2]);
    assert_eq!((r.centralizer_dim, r.levi_dim), (19, 19));
    assert_eq!(richardson_centralizer(&b), (19, 19));
    let kernels: Vec<usize> = jordan_form(&b).unwrap().ranks.iter().map(|r| 10 - r).collect();
    assert_eq!(kernels, [4, 8, 10]);
}

#[test]
fn c6_two_four_four_two() {
    let b = bs(LieType::C, &[2, 4, 4, 2]);
    assert_eq!(jordan_form(&b).unwrap().partition().parts(), &[4, 4, 2, 2]);
    assert_eq!(richardson_centralizer(&b), (20, 20));
    let m = build_matrix(&b).unwrap();
    let kernels: Vec<usize> = m.power_ranks().iter().map(|r| 12 - r).collect();
    assert_eq!(kernels, [4, 8, 10, 12]);
}

#[test]
fn b5_three_five_three() {
    let b = bs(LieType::B, &[3, 5, 3]);
    let r = dimension_report(&b).unwrap();
    assert_eq!(r.partition.parts(), &[3, 3, 3, 1, 1]);
    assert_eq!(r.dual.parts(), &[5, 3, 3]);
    assert_eq!(r.centralizer_dim, 19);
    assert_eq!(richardson_centralizer(&b), (19, 19));
    let kernels: Vec<usize> = jordan_form(&b).unwrap().ranks.iter().map(|r| 11 - r).collect();
    assert_eq!(kernels, [5, 8, 11]);
}

#[test]
fn b4_label_is_a_different_parabolic() {
    let b = coloring_to_blocks(&"B4:0,1,0,0".parse().unwrap()).unwrap();
    assert_eq!(b.blocks(), &[2, 5, 2]);
    let r = dimension_report(&b).unwrap();
    assert_eq!(r.partition.parts(), &[3, 3, 1, 1, 1]);
    assert_eq!((r.centralizer_dim, r.levi_dim), (14, 14));
    let b5 = coloring_to_blocks(&"B5:0,0,1,0,0".parse().unwrap()).unwrap();
    assert_eq!(b5.blocks(), &[3, 5, 3]);
}

#[test]
fn b5_four_three_four() {
    let b = coloring_to_blocks(&"B5:0,0,0,1,0".parse().unwrap()).unwrap();
    assert_eq!(b.blocks(), &[4, 3, 4]);
    assert_eq!(is_nice(&blocks_to_coloring(&b)).rule, Rule::BDip);
    let (c, mc) = richardson_centralizer(&b);
    assert_eq!((c, mc), (levi_dim(&b), levi_dim(&b)));
    let ranks = build_matrix(&b).unwrap().power_ranks();
    assert_eq!(ranks, jordan_form(&b).unwrap().ranks);
    assert!(!is_nice(&"B6#5,3,5".parse().unwrap()).nice);
}

#[test]
fn d5_two_three_three_two() {
    let b = bs(LieType::D, &[2, 3, 3, 2]);
    let r = dimension_report(&b).unwrap();
    assert_eq!(r.partition.parts(), &[4, 4, 1, 1]);
    assert_eq!(r.dual.parts(), &[4, 2, 2, 2]);
    assert_eq!((r.centralizer_dim, r.levi_dim), (13, 13));
    assert_eq!(richardson_centralizer(&b), (13, 13));
    let kernels: Vec<usize> = jordan_form(&b).unwrap().ranks.iter().map(|r| 10 - r).collect();
    assert_eq!(kernels, [4, 6, 8, 10]);
}

#[test]
fn d11_extra_roots() {
    let b = bs(LieType::D, &[1, 3, 5, 4, 5, 3, 1]);
    assert_eq!(levi_dim(&b), 41);
    assert_eq!(is_nice(&blocks_to_coloring(&b)).rule, Rule::DCase3);
    let m = build_matrix(&b).unwrap();
    let model = MatrixModel::new(LieType::D, 11).unwrap();
    let el = model.decompose(&m.to_exact()).unwrap();
    let alg = GradedAlgebra::new(&blocks_to_coloring(&b)).unwrap();
    assert_eq!(RankReport::compute(&alg, &el).unwrap().centralizer_dim(), 41);
}

#[test]
fn non_nice_examples() {
    let r = dimension_report(&bs(LieType::A, &[2, 1, 2])).unwrap();
    assert_eq!(r.partition.parts(), &[3, 1, 1]);
    assert_eq!((r.centralizer_dim + 1, r.levi_dim + 1), (11, 9));
    let r = dimension_report(&bs(LieType::D, &[3, 3, 3, 3])).unwrap();
    assert_eq!(r.centralizer_dim - r.levi_dim, 2);
    assert!(!is_nice(&"F4:1,0,0,1".parse().unwrap()).nice);
    assert!(!oracle::is_nice_oracle(&"F4:1,0,0,1".parse().unwrap(), 5, oracle::DEFAULT_SEED).unwrap().nice);
}

#[test]
fn injectivity_on_examples() {
    let s: ParabolicSpec = "A6:1,0,1,0,0,1".parse().unwrap();
    let b = coloring_to_blocks(&s).unwrap();
    let model = MatrixModel::new(LieType::A, 6).unwrap();
    let x = model.decompose(&build_matrix(&b).unwrap().to_exact()).unwrap();
    let alg = GradedAlgebra::new(&s).unwrap();
    assert!(oracle::injectivity_check(&alg, &x).unwrap());
    let s: ParabolicSpec = "A4#2,1,2".parse().unwrap();
    let alg = GradedAlgebra::new(&s).unwrap();
    let v = oracle::is_nice_oracle(&s, 5, oracle::DEFAULT_SEED).unwrap();
    assert!(!oracle::injectivity_check(&alg, &v.witness.element).unwrap());
    assert!(!oracle::injectivity_check(&alg, &Vec::new()).unwrap());
}

#[test]
fn even_orbits_and_series() {
    let (l, r) = genfun_coefficients(40);
    assert_eq!(l, r);
    for n in 1..=25 {
        assert_eq!(l[n - 1] as usize, count_even_orbits(LieType::A, n - 1).unwrap().0, "n = {n}");
    }
    let (count, list) = count_even_orbits(LieType::C, 2).unwrap();
    assert_eq!(count, 3);
    let shown: Vec<String> = list.iter().map(ToString::to_string).collect();
    assert_eq!(shown, ["(1,1,1,1)", "(2,2)", "(4)"]);
}

#[test]
fn centralizer_of_partitions() {
    let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
    assert_eq!(nicepar::jordan::centralizer_dim(&p(&[3, 3, 2, 2]), LieType::C).unwrap(), 19);
    assert_eq!(nicepar::jordan::centralizer_dim(&p(&[3, 3, 3, 1, 1]), LieType::B).unwrap(), 19);
    assert_eq!(nicepar::jordan::centralizer_dim(&p(&[4, 4, 1, 1]), LieType::D).unwrap(), 13);
}
