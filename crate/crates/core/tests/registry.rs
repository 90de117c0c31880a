use indeplab_core::exact::Caps;
use indeplab_core::generators::{complete, complete_bipartite, cycle, figure1, labeled_graphs, path, star};
use indeplab_core::theorems::{check_all, find, registry, Outcome, RegistryReport};
use indeplab_core::Graph;

fn report(g: &Graph) -> RegistryReport {
    check_all(g, &Caps::default()).expect("within caps")
}

fn outcome(r: &RegistryReport, code: &str) -> Outcome {
    let id = find(code).expect("registered").id;
    r.verdicts.iter().find(|v| v.id == id).expect("present").outcome
}

fn assert_clean(g: &Graph) {
    let r = report(g);
    let failed: Vec<_> = r.verdicts.iter().filter(|v| !v.holds()).collect();
    assert!(failed.is_empty(), "{}: {failed:#?}", r.graph6);
}

#[test]
fn registry_has_one_verdict_per_check() {
    let r = report(&figure1());
    assert_eq!(r.verdicts.len(), registry().len());
    assert_eq!(registry().len(), 21);
    assert_eq!(r.failures(), 0);
}

#[test]
fn lookup_by_code_and_id() {
    assert_eq!(find("t3.16").unwrap().id, "core-equals-nucleus");
    assert_eq!(find("L3.6").unwrap().code, "L3.6/T3.7");
    assert_eq!(find("T3.7").unwrap().code, "L3.6/T3.7");
    assert!(find("bogus").is_none());
}

#[test]
fn figure1_verdicts() {
    let r = report(&figure1());
    assert_eq!(outcome(&r, "T3.16"), Outcome::Holds);
    assert_eq!(outcome(&r, "T3.9"), Outcome::NotApplicable);
    assert_eq!(outcome(&r, "T3.14"), Outcome::NotApplicable);
    assert_eq!(outcome(&r, "T3.15"), Outcome::NotApplicable);
    assert_eq!(outcome(&r, "AB"), Outcome::Holds);
    let main = r.verdicts.iter().find(|v| v.code == "T3.16").unwrap();
    let get = |k: &str| main.witness.iter().find(|(key, _)| *key == k).unwrap().1.clone();
    assert_eq!(get("core_equals_nucleus"), false.into());
    assert_eq!(get("condition"), false.into());
}

#[test]
fn small_fixtures() {
    let c4 = report(&cycle(4).unwrap());
    assert_eq!(outcome(&c4, "T3.9"), Outcome::Holds);
    assert_eq!(outcome(&c4, "AB"), Outcome::NotApplicable);
    let c5 = report(&cycle(5).unwrap());
    assert_eq!(c5.failures(), 0);
    assert_eq!(outcome(&c5, "AB"), Outcome::Holds);
    let k2 = report(&complete(2));
    assert_eq!(outcome(&k2, "T1.1"), Outcome::NotApplicable);
    for g in [star(3), complete(4), complete(1), Graph::empty(0), path(3), complete_bipartite(3, 3)] {
        assert_clean(&g);
    }
}

#[test]
fn exhaustive_up_to_five() {
    for n in 0..=5 {
        for g in labeled_graphs(n).unwrap() {
            assert_clean(&g);
        }
    }
}

#[test]
#[ignore = "slow in debug builds; run with --release --ignored"]
fn exhaustive_six() {
    for g in labeled_graphs(6).unwrap() {
        assert_clean(&g);
    }
}
