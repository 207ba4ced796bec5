//! Fast module invariants as standalone tests. The full suite, including the census-backed
//! properties, runs under AC9 in the acceptance tests.

mod common;

use common::props;

fn green(r: props::Outcome) {
    if let Err(e) = r {
        panic!("{e}");
    }
}

#[test]
fn orbtri_euler_characteristic() {
    green(props::euler_characteristic_vanishes());
}

#[test]
fn orbtri_singular_graph_partition() {
    green(props::singular_graph_partition());
}

#[test]
fn orbtri_validate_is_deterministic() {
    green(props::validate_is_deterministic());
}

#[test]
fn spine_dual_counts() {
    green(props::dual_spine_counts());
}

#[test]
fn spine_weight_relabel_invariance() {
    green(props::weight_relabel_invariance());
}

#[test]
fn twoorb_bad_has_positive_euler() {
    green(props::bad_has_positive_euler());
}

#[test]
fn twoorb_discal_boundaries() {
    green(props::discal_boundaries_classify());
}

#[test]
fn twoorb_classify_total() {
    green(props::classify_total_and_deterministic());
}

#[test]
fn normal_matching_linearity() {
    green(props::matching_linearity());
}

#[test]
fn surgery_prediction_within_bounds() {
    green(props::predict_within_bounds());
}

#[test]
fn census_dedup_soundness() {
    green(props::dedup_soundness());
}
