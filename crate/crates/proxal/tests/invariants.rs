//! Cross-module invariants over every relation found by exhaustive search at
//! n <= 2, plus property-based checks on random inputs.

use proptest::prelude::*;

use proxal::checker::{exhaustive_relation_search, run_theorem, Instance, Outcome};
use proxal::operators::{check_kuratowski, cl_star_map};
use proxal::primal::{check_primal, check_primal_alt, enumerate_primals};
use proxal::proximity::{check_primal_proximity, ProximityRelation};
use proxal::sets::{SubsetFamily, Universe};
use proxal::space::SpaceFile;
use proxal::topology::{check_topology, tau_hat_family};

#[test]
fn searched_relations_satisfy_the_core_registry() {
    for n in 1..=2 {
        let u = Universe::alphabetic(n).unwrap();
        for p in enumerate_primals(&u).unwrap() {
            for r in exhaustive_relation_search(&u, &p).unwrap() {
                assert!(check_topology(&u, tau_hat_family(&r)).is_pass());
                assert!(check_kuratowski(&cl_star_map(&r)).is_pass());
                let degenerate = r.matrix().iter().all(|row| *row == 0);
                let inst = Instance::new(p.clone(), r, None);
                for id in ["C3.4", "L-mono", "T4.6", "T4.9", "T5.18"] {
                    let v = run_theorem(id, &inst).unwrap();
                    // the empty relation leaves L-mono's hypotheses unmet
                    if degenerate && v.outcome == Outcome::Vacuous {
                        continue;
                    }
                    assert_eq!(v.outcome, Outcome::Pass, "{id} on {}", inst.describe());
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn primal_checks_agree_on_arbitrary_families(bits in any::<u32>()) {
        let u = Universe::alphabetic(3).unwrap();
        let f = SubsetFamily(bits & 0xff);
        prop_assert_eq!(
            check_primal(&u, f).is_pass(),
            check_primal_alt(&u, f).is_pass()
        );
    }

    #[test]
    fn valid_random_relations_appear_in_the_search(rows in proptest::collection::vec(0u32..16, 4)) {
        let u = Universe::alphabetic(2).unwrap();
        let r = ProximityRelation::explicit(&u, rows.clone());
        for p in enumerate_primals(&u).unwrap() {
            if check_primal_proximity(&r, &p).all_pass() {
                let found = exhaustive_relation_search(&u, &p).unwrap();
                prop_assert!(found.iter().any(|s| s.matrix() == rows));
            }
        }
    }

    #[test]
    fn space_files_round_trip(universe_n in 1usize..=4, primal_bits in any::<u32>(), open_bits in any::<u32>()) {
        let u = Universe::alphabetic(universe_n).unwrap();
        let mask = if u.subset_count() == 32 { u32::MAX } else { (1 << u.subset_count()) - 1 };
        let encode_family = |bits: u32| -> Vec<Vec<String>> {
            SubsetFamily(bits & mask).iter(&u).map(|s| u.encode(s)).collect()
        };
        let sf = SpaceFile {
            universe: u.labels().to_vec(),
            primal: proxal::space::PrimalSpec::Explicit { sets: encode_family(primal_bits) },
            topology: Some(proxal::space::TopologySpec::Explicit { opens: encode_family(open_bits) }),
            relation: proxal::space::RelationSpec::DoubleComplement,
        };
        let text = sf.to_json_string();
        prop_assert_eq!(SpaceFile::from_json_str(&text).unwrap(), sf);
    }
}
