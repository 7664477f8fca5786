#[path = "common/oracle.rs"]
mod oracle;

use std::collections::BTreeSet;
use torusgraph::{parse_graph, Dart};
use zigzag::{check_consistency, extract_zigzags, Verdict, Witness};

const ALL: [&str; 10] = ["hex1", "sq1", "hex2", "hex3", "hex4", "sq22", "sq4", "sq2", "bad-bigon", "trivial-class"];

fn read(name: &str, ext: &str) -> String {
    std::fs::read_to_string(format!("{}/../../fixtures/{name}.{ext}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

fn cyclic(v: &[Dart]) -> Vec<Dart> {
    let k = (0..v.len()).min_by_key(|&i| v[i]).unwrap();
    v[k..].iter().chain(&v[..k]).copied().collect()
}

#[test]
fn oracle_agrees_on_every_fixture() {
    for name in ALL {
        let g = parse_graph(&read(name, "tg")).unwrap();
        let rep = oracle::run(&g, &oracle::parse_coords(&read(name, "coords")));
        assert!(rep.rotations_match, "{name}: drawing does not realise the rotation system");
        let exact: BTreeSet<Vec<Dart>> = extract_zigzags(&g).iter().map(|z| cyclic(&z.passes)).collect();
        let drawn: BTreeSet<Vec<Dart>> = rep.strands.iter().map(|s| cyclic(s)).collect();
        assert_eq!(exact, drawn, "{name}: strands differ");
        let v = check_consistency(&g);
        let clause = match &v {
            Verdict::Consistent => "Consistent",
            Verdict::Inconsistent(w) => w.clause(),
        };
        assert_eq!(clause, rep.verdict.clause(), "{name}");
        if let (Verdict::Inconsistent(Witness::ParallelBigon { edges, .. }), oracle::OracleVerdict::ParallelBigon(found)) =
            (&v, &rep.verdict)
        {
            assert!(found.contains(edges), "{name}: witness {edges:?} not among {found:?}");
        }
    }
}
