mod common;

use z4u_core::code::{DEFAULT_BUDGET, DEFAULT_SAMPLES};
use z4u_core::construct::{search, verify_tables, Kind, SearchParams, SearchReport, Verdict};

fn render(r: &SearchReport) -> Vec<String> {
    let mut out: Vec<String> = r.retained.iter().map(|x| x.to_string()).collect();
    out.push(format!("best {}", r.best.as_ref().unwrap()));
    out
}

fn search_with_threads(p: &SearchParams, threads: usize) -> SearchReport {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .unwrap()
        .install(|| search(p).unwrap())
}

#[test]
fn small_table_rows_pass() {
    for which in [2, 3] {
        let rows = verify_tables(which, 12, DEFAULT_BUDGET, DEFAULT_SAMPLES).unwrap();
        assert_eq!(rows.len(), 5);
        for r in rows {
            assert_eq!(r.verdict, Verdict::Pass, "{r}");
            assert!(r.distance.exact);
        }
    }
}

#[test]
fn search_is_deterministic_across_thread_counts() {
    let mut p = SearchParams::new(Kind::DoubleCirculant, 2);
    p.threshold = 3;
    let one = render(&search_with_threads(&p, 1));
    let four = render(&search_with_threads(&p, 4));
    assert_eq!(one, four);
    let mut p = SearchParams::new(Kind::Bordered, 2);
    p.threshold = 4;
    assert_eq!(
        render(&search_with_threads(&p, 1)),
        render(&search_with_threads(&p, 3))
    );
}

#[test]
fn dc_search_n2_best() {
    let r = search(&SearchParams::new(Kind::DoubleCirculant, 2)).unwrap();
    assert!(r.exhaustive);
    assert_eq!(r.candidates, 256);
    assert_eq!(r.best.unwrap().distance.weight, 4);
}
