//! Mixed-hypothesis sweeps: claw-heavy plus one forbidden pattern. The
//! forbidden-side list also contains P6, which the fully-heavy pair form
//! does not support (the clique-block family refutes it).

use heavyham::constructions::build_f;
use heavyham::cycles::DEFAULT_BUDGET;
use heavyham::graph::Graph;
use heavyham::harness::{survey, ImplicationSpec, Source};
use heavyham::patterns::PatternId;

#[test]
fn claw_heavy_plus_each_forbidden_pattern_is_clean_through_n7() {
    let forbidden = [
        PatternId::P(4),
        PatternId::P(5),
        PatternId::P(6),
        PatternId::C3,
        PatternId::Z(1),
        PatternId::Z(2),
        PatternId::B,
        PatternId::N,
        PatternId::W,
    ];
    for s in forbidden {
        let spec = ImplicationSpec::heavy(&[PatternId::K13]).with_free(&[s]);
        let report = survey(
            &spec,
            &Source::Exhaustive {
                n_max: 7,
                dedup_isomorphic: false,
            },
            DEFAULT_BUDGET,
            0,
        )
        .unwrap();
        assert!(report.clean(), "claw-heavy + {s}-free found: {report:?}");
    }
}

#[test]
fn fully_heavy_p6_form_is_refuted_by_the_family() {
    // necessity side: P6 cannot be moved to the heavy side
    let f5 = build_f(5).unwrap();
    let spec = ImplicationSpec::heavy(&[PatternId::K13, PatternId::P(6)]);
    let report = survey(
        &spec,
        &Source::Ingest(vec![f5.graph.clone()]),
        DEFAULT_BUDGET,
        1,
    )
    .unwrap();
    assert_eq!(report.counterexamples.len(), 1);
    let rec = &report.counterexamples[0];
    let rebuilt = Graph::new(rec.certificate.n, &rec.edges).unwrap();
    assert_eq!(rebuilt, f5.graph);
    assert!(heavyham::harness::reverify_counterexample(
        &spec,
        rec,
        DEFAULT_BUDGET
    ));
}
