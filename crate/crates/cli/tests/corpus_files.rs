//! The shipped corpus files agree with the built-in corpus. Set `RELHOM_BLESS=1` to rewrite them.

use std::path::PathBuf;

use relhom_cli::instance::{corpus_entry_file, corpus_file, parse, InstanceFile};
use relhom_core::corpus::KEYS;

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn compare(name: &str, expected: &InstanceFile) {
    let path = corpus_dir().join(name);
    let text = relhom_cli::json::pretty(expected);
    if std::env::var_os("RELHOM_BLESS").is_some() {
        std::fs::write(&path, &text).unwrap();
    }
    let shipped = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(shipped, text, "{name}");
    assert_eq!(&parse(&shipped).unwrap(), expected, "{name}");
    parse(&shipped).unwrap().resolve().unwrap();
}

#[test]
fn combined_corpus_file_matches() {
    compare("corpus.json", &corpus_file());
}

#[test]
fn per_algebra_files_match() {
    for key in KEYS {
        compare(&format!("{key}.json"), &corpus_entry_file(key).unwrap());
    }
}
