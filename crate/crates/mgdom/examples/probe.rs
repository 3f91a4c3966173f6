use mgdom::*;
use std::time::Instant;

fn tc(g: &Graph) -> (usize, u64, u128) {
    let t = Instant::now();
    let r = gamma_tc_exact(g, &SolverOptions::default()).unwrap();
    (r.value, r.nodes_explored, t.elapsed().as_millis())
}

fn main() {
    for (n1, n2) in [(3, 4), (3, 5), (4, 4), (4, 5), (3, 6), (4, 8)] {
        let g = FamilySpec::CompleteBipartite { n1, n2 }.generate().unwrap();
        let m = middle_graph(&g);
        let (v, nodes, ms) = tc(m.graph());
        println!("K_{{{n1},{n2}}}: middle order {} gamma_tc = {v} (nodes {nodes}, {ms} ms)", m.order());
    }
    for n in [6, 7] {
        let g = FamilySpec::Complete { n }.generate().unwrap();
        let m = middle_graph(&g);
        let (v, nodes, ms) = tc(m.graph());
        println!("K_{n}: middle order {} gamma_tc = {v} (nodes {nodes}, {ms} ms)", m.order());
    }
    for n in [5, 6, 7] {
        let g = FamilySpec::Wheel { n }.generate().unwrap();
        let m = middle_graph(&g);
        let (v, nodes, ms) = tc(m.graph());
        println!("W_{n}: middle order {} gamma_tc = {v} (nodes {nodes}, {ms} ms)", m.order());
    }
    let k4 = FamilySpec::Complete { n: 4 }.generate().unwrap();
    let m = middle_graph(&corona_p2(&k4));
    let (v, nodes, ms) = tc(m.graph());
    println!("M(K4 o P2): order {} gamma_tc = {v} (nodes {nodes}, {ms} ms)", m.order());
    for base in [2usize, 3, 4] {
        let g = FamilySpec::Path { n: base }.generate().unwrap();
        let m = middle_graph(&corona_k1(&g));
        let (v, nodes, ms) = tc(m.graph());
        println!("M(P{base} o K1): order {} gamma_tc = {v} ({ms} ms)", m.order());
    }
    // paths and stars upper end
    let p9 = FamilySpec::Path { n: 9 }.generate().unwrap();
    let m = middle_graph(&p9);
    let (v, nodes, ms) = tc(m.graph());
    println!("M(P9): gamma_tc = {v} (nodes {nodes}, {ms} ms)");
}
