use std::fs;
use std::process::Command;

use torsion_core::gate::{verify_with, Engine, SearchOptions, Sequential};
use torsion_core::maninspace::SymbolSpace;
use torsion_gate::cache::{cache_file, read_space, write_space};
use torsion_gate::{GateError, ParallelEngine};

#[test]
fn round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for n in [1u64, 11, 22, 169] {
        let space = SymbolSpace::build(n).unwrap();
        let path = cache_file(dir.path(), n);
        write_space(&path, &space).unwrap();
        let back = read_space(&path, n).unwrap();
        assert_eq!(back.relations(), space.relations());
        assert_eq!(back.quotient_rank_q(), space.quotient_rank_q());
        assert_eq!(back.generators(), space.generators());
    }
}

#[test]
fn rejects_tampering() {
    let dir = tempfile::tempdir().unwrap();
    let path = cache_file(dir.path(), 22);
    write_space(&path, &SymbolSpace::build(22).unwrap()).unwrap();
    let text = fs::read_to_string(&path).unwrap();

    assert!(matches!(read_space(&path, 23), Err(GateError::CacheFormat { .. })));

    let edits = [
        text.replacen("torsion-gate space v1", "torsion-gate space v0", 1),
        text.replacen("generators 36", "generators 35", 1),
        text.replacen("rank 29", "rank 28", 1),
        text.replacen("rows 72", "rows 71", 1),
        text.replacen("0:1", "0:x", 1),
        text.replacen("0:1", "999:1", 1),
    ];
    for (i, edit) in edits.iter().enumerate() {
        assert_ne!(edit, &text, "edit {i} changed nothing");
        fs::write(&path, edit).unwrap();
        assert!(read_space(&path, 22).is_err(), "edit {i} accepted");
    }
}

#[test]
fn engine_uses_and_repairs_cache() {
    let dir = tempfile::tempdir().unwrap();
    let engine = ParallelEngine::new(Some(dir.path().to_path_buf()));
    let fresh = engine.space(143).unwrap();
    let path = cache_file(dir.path(), 143);
    assert!(path.exists());
    assert_eq!(engine.space(143).unwrap().relations(), fresh.relations());

    fs::write(&path, "garbage").unwrap();
    assert_eq!(engine.space(143).unwrap().quotient_rank_q(), fresh.quotient_rank_q());
    assert!(read_space(&path, 143).is_ok());

    let a = verify_with(&engine, 143, 3, SearchOptions::default()).unwrap();
    let b = verify_with(&Sequential, 143, 3, SearchOptions::default()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn cli_cache_flag() {
    let dir = tempfile::tempdir().unwrap();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_torsion-gate"))
            .args(["homology", "--N", "169", "--cache"])
            .arg(dir.path())
            .output()
            .unwrap()
    };
    let first = run();
    assert!(cache_file(dir.path(), 169).exists());
    let second = run();
    assert_eq!(first.status.code(), Some(0));
    let strip = |o: &std::process::Output| {
        String::from_utf8_lossy(&o.stdout).lines().filter(|l| !l.starts_with("elapsed")).collect::<Vec<_>>().join("\n")
    };
    assert_eq!(strip(&first), strip(&second));
}
