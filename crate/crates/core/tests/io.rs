use std::fs;
use std::path::Path;

use matdec::io::{parse_instance, write_instance};
use matdec::matroid::{same_matroid, SetSystem};
use matdec::zoo::{uniform_oracle, Instance};
use matdec::Error;

fn golden() -> Vec<(String, String)> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let mut files: Vec<_> = fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    files.sort();
    files
        .into_iter()
        .map(|p| (p.display().to_string(), fs::read_to_string(&p).unwrap()))
        .collect()
}

#[test]
fn golden_files_round_trip_byte_for_byte() {
    let files = golden();
    assert!(files.len() >= 8);
    for (name, text) in files {
        let inst = parse_instance(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(write_instance(&inst), text, "{name}");
        inst.oracle().unwrap();
    }
}

#[test]
fn uniform_header() {
    let inst = parse_instance("uniform\nr=2 n=4").unwrap();
    assert_eq!(inst, Instance::Uniform { r: 2, n: 4 });
}

#[test]
fn square_lattice_is_u24() {
    let inst = parse_instance("latticepath\nP=EENN\nQ=NNEE\n").unwrap();
    let m = inst.oracle().unwrap();
    let u = uniform_oracle(2, 4).unwrap();
    assert_eq!(
        SetSystem::from_oracle(&*m).unwrap(),
        SetSystem::from_oracle(&u).unwrap()
    );
    assert!(same_matroid(&*m, &u));
}

fn line_of(text: &str) -> usize {
    match parse_instance(text) {
        Err(Error::Parse { line, .. }) => line,
        other => panic!("expected a parse error, got {other:?}"),
    }
}

#[test]
fn errors_carry_line_numbers() {
    assert_eq!(line_of("matroid\n"), 1);
    assert_eq!(line_of("uniform\nr=5 n=4\n"), 2);
    assert_eq!(line_of("linear\np 2\n1 0\n0 x\n"), 4);
    assert_eq!(line_of("ftransversal\nA: 1\nB 2\n"), 3);
    assert_eq!(
        line_of("gammoid\nvertices: 1 2\narc 1 2\nedge 1 2\ntargets: 2\n"),
        4
    );
    assert_eq!(
        line_of("gaingraph\ngroup table 2 identity 0\n0 1\n1 1\nvertices 1\n"),
        2
    );
    assert_eq!(
        line_of("bicircular\nvertices 2\nedge 1 1 3\nbalancedloops:\n"),
        3
    );
    assert_eq!(line_of("latticepath\nP=EN\nQ=NE\nextra\n"), 4);
    assert_eq!(line_of("sparsepaving\nvertices 3\nedge 2 1\n"), 3);
}
