#![no_main]

use libfuzzer_sys::fuzz_target;
use percept_core::problem::Problem;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = Problem::parse(text) {
        assert!(p.rank_priority.iter().all(|&k| k < p.objectives.len()));
        for alt in &p.alternatives {
            assert_eq!(alt.rule_base.objectives().len(), p.objectives.len());
        }
    }
});
