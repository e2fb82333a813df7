//! JSON ingestion of groups and G-sets feeding the Euler characteristic.

use std::sync::Arc;

use wreathfock::group::io::{group_from_json, group_to_cayley_json};
use wreathfock::gset::{orbifold_euler, GSet};
use wreathfock::Error;

const KLEIN: &str = r#"{"order": 4, "table": [[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]]}"#;

#[test]
fn klein_four_from_cayley_table() {
    let v4 = Arc::new(group_from_json(KLEIN, 10).unwrap());
    assert_eq!(v4.num_classes(), 4);
    // The regular action has the Cayley rows as its permutations.
    let rows = group_to_cayley_json(&v4).table;
    let text = serde_json::json!({ "size": 4, "action": rows }).to_string();
    let regular = GSet::from_json(v4.clone(), &text).unwrap();
    assert_eq!(orbifold_euler(&regular).unwrap(), 1);
    assert_eq!(orbifold_euler(&GSet::point(v4)).unwrap(), 4);
}

#[test]
fn permutation_generators_close_up() {
    // S4 from a transposition and a 4-cycle.
    let s4 = group_from_json(r#"{"degree": 4, "generators": [[1,0,2,3],[1,2,3,0]]}"#, 100).unwrap();
    assert_eq!((s4.order(), s4.num_classes()), (24, 5));
    let capped = group_from_json(r#"{"degree": 4, "generators": [[1,0,2,3],[1,2,3,0]]}"#, 10);
    assert!(matches!(capped, Err(Error::ClosureTooLarge { .. })));
}

#[test]
fn rejects_bad_actions() {
    let v4 = Arc::new(group_from_json(KLEIN, 10).unwrap());
    // Not a homomorphism: the element 1 swaps, 2 and 3 fix.
    let bad = r#"{"size": 2, "action": [[0,1],[1,0],[0,1],[0,1]]}"#;
    assert!(GSet::from_json(v4.clone(), bad).is_err());
    let wrong_size = r#"{"size": 3, "action": [[0,1],[0,1],[0,1],[0,1]]}"#;
    assert!(GSet::from_json(v4, wrong_size).is_err());
}
