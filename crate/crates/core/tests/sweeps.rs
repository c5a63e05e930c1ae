use quenta_core::config::Config;
use quenta_core::oracle::{default_suite, instances, sweep, Summary};

#[test]
fn default_suite_has_no_failures() {
    let cfg = Config::default();
    for (family, range) in default_suite() {
        let insts = instances(family, &range).unwrap();
        let reports = sweep(&insts, &cfg);
        let summary = Summary::of(&reports);
        for r in reports.iter().filter(|r| !r.pass) {
            eprintln!("{} {} {:?}", r.family, r.instance, r.rows);
        }
        eprintln!("{family} {range:?}: {summary}");
        assert_eq!(summary.failed, 0, "{family} {range:?}");
    }
}
