mod common;

use percept_core::codebook::{load_endpoint_specs, parse_endpoint_specs, DataIntervalFile};
use percept_core::{centroid_ekm, Codebook, Discretization, Error, Interval};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SCALE: Interval = Interval { lo: 0.0, hi: 10.0 };

#[test]
fn fixture_codebooks_round_trip_through_files() {
    let dir = std::env::temp_dir().join(format!("percept-codebook-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for id in ["paper-hma", "paper-ia"] {
        let cb = Codebook::load(id).unwrap();
        let path = dir.join(format!("{id}.toml"));
        cb.save(&path).unwrap();
        let back = Codebook::load(path.to_str().unwrap()).unwrap();
        assert_eq!(back, cb);
        assert_eq!(back.to_toml_string(), cb.to_toml_string());
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn fixture_tables_match_the_loaded_words() {
    for (id, table) in [("paper-hma", common::HMA_TABLE), ("paper-ia", common::IA_TABLE)] {
        let cb = Codebook::load(id).unwrap();
        for (w, (name, umf, lmf, c)) in cb.words().iter().zip(table) {
            assert_eq!(w.name, name);
            assert_eq!(w.umf.vertices(), umf);
            assert_eq!([w.lmf.a, w.lmf.b, w.lmf.c, w.lmf.d, w.lmf.h], lmf);
            let computed = w.centroid.unwrap();
            for (got, want) in [computed.cl, computed.cr, computed.mean].iter().zip(c) {
                assert!(
                    common::close(*got, want, percept_core::codebook::CENTROID_CHECK_TOLERANCE),
                    "{id} {name}"
                );
            }
        }
    }
}

#[test]
fn random_codebooks_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        let grid = Discretization::over(SCALE);
        let mut words: Vec<_> = (0..4)
            .map(|i| common::random_word(&mut rng, &format!("W{i}")))
            .collect();
        words.sort_by(|a, b| {
            let m = |w| centroid_ekm(w, &grid, "w").unwrap().mean;
            m(a).total_cmp(&m(b))
        });
        let cb = Codebook::new(SCALE, words, "test")
            .unwrap()
            .with_provenance("chacha8", 7);
        let back = Codebook::parse(&cb.to_toml_string()).unwrap();
        assert_eq!(back.words(), cb.words());
        assert_eq!(back.seed(), Some(7));
        assert_eq!(back.generator(), Some("chacha8"));
    }
}

#[test]
fn sampling_is_byte_for_byte_deterministic() {
    let (_, specs) = load_endpoint_specs("case-endpoints").unwrap();
    let a = DataIntervalFile::sample(&specs, 50, 2024).unwrap().to_toml_string();
    let b = DataIntervalFile::sample(&specs, 50, 2024).unwrap().to_toml_string();
    let c = DataIntervalFile::sample(&specs, 50, 2025).unwrap().to_toml_string();
    assert_eq!(a, b);
    assert_ne!(a, c);
    let parsed = DataIntervalFile::parse(&a).unwrap();
    assert_eq!(parsed.to_toml_string(), a);
    for (set, spec) in parsed.sets.iter().zip(&specs) {
        assert_eq!(set.word, spec.word);
        assert_eq!(set.pairs.len(), 50);
        for &(l, r) in &set.pairs {
            assert!(l <= r && spec.left.contains(l) && spec.right.contains(r));
        }
    }
}

#[test]
fn bad_word_names_the_word_and_field() {
    let text = percept_core::fixtures::codebook_source("paper-hma").unwrap();
    let broken = text.replacen("umf = [1.14, 2.99, 7.03, 8.94]", "umf = [1.14, 9.99, 7.03, 8.94]", 1);
    assert_ne!(broken, text);
    match Codebook::parse(&broken) {
        Err(Error::InvalidWord { word, field, .. }) => {
            assert_eq!(word, "A");
            assert_eq!(field, "umf");
        }
        other => panic!("expected an invalid word, got {other:?}"),
    }
}

#[test]
fn malformed_inputs_are_errors() {
    assert!(matches!(
        Codebook::load("no-such-codebook"),
        Err(Error::UnknownFixture(_))
    ));
    assert!(Codebook::parse("scale = [0.0, 10.0]\nencoder = \"x\"\nword = []\nextra = 1").is_err());
    assert!(
        parse_endpoint_specs("scale = [0.0, 10.0]\n[[word]]\nname = \"X\"\nleft = [5.0, 4.0]\nright = [6.0, 7.0]")
            .is_err()
    );
    assert!(parse_endpoint_specs(
        "scale = [0.0, 10.0]\n[[word]]\nname = \"X\"\nleft = [0.0, 1.0]\nright = [6.0, 17.0]"
    )
    .is_err());
    assert!(
        DataIntervalFile::parse("generator = \"chacha8\"\nseed = 1\n[[set]]\nword = \"X\"\npairs = [[3.0, 2.0]]")
            .is_err()
    );
}
