// quick timing probe for A3
use std::sync::Arc;
use std::time::Instant;
use harmonia::coxeter::{build_group, Multiplicity};
use harmonia::dunkl::{construct_hm_direct, DunklContext};

fn main() {
    for m in [0u32, 1, 2] {
        let g = Arc::new(build_group("A3").unwrap());
        let mult = Multiplicity::constant(&g, m);
        let ctx = DunklContext::new(g, mult);
        let t = Instant::now();
        let basis = construct_hm_direct(&ctx).unwrap();
        println!("A3 m={}: {} elements, degrees {:?}, took {:.1?}", m, basis.len(), basis.degree_multiset(), t.elapsed());
    }
}
