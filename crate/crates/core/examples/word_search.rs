//! Searches for short identity words. Absence is only evidence, never a
//! proof of freeness.

use std::time::Instant;

use heisfree::freeness::{generator_pair, identity_word_search_with, SearchConfig};
use heisfree::scalars::ExactComplex;

fn main() {
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    let params = [
        ("-3/4", ExactComplex::from_ratios((-3, 4), (0, 1))),
        ("-1", ExactComplex::from(-1)),
        ("-1/2+1/2i", ExactComplex::from_ratios((-1, 2), (1, 2))),
        ("-1/4", ExactComplex::from_ratios((-1, 4), (0, 1))),
    ];
    for (name, mu) in params {
        let start = Instant::now();
        let pair = generator_pair(mu);
        let found =
            identity_word_search_with(&pair, &SearchConfig::new(7).with_workers(workers)).unwrap();
        let shown = found.map_or_else(|| "none up to length 7".to_string(), |w| w.to_string());
        println!("mu = {name:>10}: {shown} ({:.2?})", start.elapsed());
    }
}
