use simint::selftest::{run_all, DEFAULT_SEED};

#[test]
fn acceptance_criteria() {
    let reports = run_all(DEFAULT_SEED);
    for r in &reports {
        println!("{r}");
    }
    let failed: Vec<usize> = reports.iter().filter(|r| !r.passed()).map(|r| r.id).collect();
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
