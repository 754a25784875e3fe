//! One PASS/FAIL line per acceptance criterion; exits non-zero if any fails.

use std::process::ExitCode;

use surfkit_repro::*;

fn main() -> ExitCode {
    let corpus = match Corpus::build() {
        Ok(c) => c,
        Err(e) => {
            println!("criterion  * FAIL construction: {e}");
            return ExitCode::FAILURE;
        }
    };
    let checks: [(&str, Box<dyn Fn() -> Result<String, String> + '_>); 10] = [
        ("betti table reproduction", Box::new(betti_reproduction)),
        ("koszul/resolution cross-oracle", Box::new(|| koszul_cross_oracle(&corpus))),
        ("hilbert data", Box::new(|| hilbert_data(&corpus))),
        ("rejected families", Box::new(|| rejected_quadrics(&corpus))),
        ("classification tree", Box::new(classification)),
        ("discriminant arithmetic", Box::new(discriminants)),
        ("matrix factorization", Box::new(|| matrix_factorizations(&corpus))),
        ("normal bundle", Box::new(|| normal_bundles(&corpus))),
        ("enriques pipeline", Box::new(enriques)),
        ("property suites", Box::new(|| properties(&corpus))),
    ];
    let mut failed = Vec::new();
    for (n, (name, check)) in (1..).zip(&checks) {
        match check() {
            Ok(detail) => println!("criterion {n:>2} PASS {name}: {detail}"),
            Err(detail) => {
                println!("criterion {n:>2} FAIL {name}: {detail}");
                failed.push(n);
            }
        }
    }
    println!("acceptance: {}/{} criteria pass", checks.len() - failed.len(), checks.len());
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("failing: {failed:?}");
        ExitCode::FAILURE
    }
}
