//! Best-effort OEIS cross-reference over the public text search interface.
//!
//! Responses are cached on disk keyed by the query string. Offline mode
//! answers from the cache only. Requests go out one at a time, at least one
//! second apart, across the whole process.

use std::fs;
use std::path::PathBuf;
use std::sync::Mutex;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use sha2::{Digest, Sha256};

pub const DEFAULT_BASE_URL: &str = "https://oeis.org/search";
const MIN_INTERVAL: Duration = Duration::from_secs(1);

/// Held for the duration of each request; remembers when the last one ended.
static GATE: Mutex<Option<Instant>> = Mutex::new(None);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OeisMatch {
    pub id: String,
    pub name: String,
    /// Longest run of leading query terms found contiguously in the entry.
    pub matched_prefix_length: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Lookup {
    Found(Vec<OeisMatch>),
    /// No network answer and nothing cached. Never a fabricated result.
    Unavailable(String),
}

pub struct OeisClient {
    cache_dir: PathBuf,
    offline: bool,
    base_url: String,
}

/// Comma-joined raw terms; no trimming of leading zeros or ones.
pub fn query_string(terms: &[BigUint]) -> String {
    terms.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(",")
}

impl OeisClient {
    pub fn new(cache_dir: impl Into<PathBuf>, offline: bool) -> Self {
        OeisClient { cache_dir: cache_dir.into(), offline, base_url: DEFAULT_BASE_URL.into() }
    }

    pub fn with_base_url(mut self, url: impl Into<String>) -> Self {
        self.base_url = url.into();
        self
    }

    fn cache_path(&self, query: &str) -> PathBuf {
        self.cache_dir.join(format!("{}.txt", hex::encode(Sha256::digest(query.as_bytes()))))
    }

    pub fn lookup(&self, terms: &[BigUint]) -> Lookup {
        let query = query_string(terms);
        let path = self.cache_path(&query);
        if let Ok(text) = fs::read_to_string(&path) {
            return Lookup::Found(parse_response(&text, terms));
        }
        if self.offline {
            return Lookup::Unavailable("offline and not cached".into());
        }
        match self.fetch(&query) {
            Ok(text) => {
                if let Err(e) = fs::create_dir_all(&self.cache_dir).and_then(|_| write_atomic(&path, &text)) {
                    log::warn!("could not cache OEIS response: {e}");
                }
                Lookup::Found(parse_response(&text, terms))
            }
            Err(e) => Lookup::Unavailable(e),
        }
    }

    fn fetch(&self, query: &str) -> Result<String, String> {
        let mut last = GATE.lock().unwrap_or_else(|p| p.into_inner());
        if let Some(t) = *last {
            let wait = MIN_INTERVAL.saturating_sub(t.elapsed());
            std::thread::sleep(wait);
        }
        let result = (|| {
            let client = reqwest::blocking::Client::builder()
                .timeout(Duration::from_secs(30))
                .user_agent(concat!("rps/", env!("CARGO_PKG_VERSION")))
                .build()
                .map_err(|e| e.to_string())?;
            let resp = client
                .get(&self.base_url)
                .query(&[("q", query), ("fmt", "text")])
                .send()
                .map_err(|e| format!("request failed: {e}"))?;
            if !resp.status().is_success() {
                return Err(format!("server answered {}", resp.status()));
            }
            resp.text().map_err(|e| e.to_string())
        })();
        *last = Some(Instant::now());
        result
    }
}

fn write_atomic(path: &std::path::Path, text: &str) -> std::io::Result<()> {
    use std::io::Write;
    let dir = path.parent().unwrap_or_else(|| std::path::Path::new("."));
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(text.as_bytes())?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

/// Parse the `%I/%S/%T/%U/%N` lines of a text-format answer.
pub fn parse_response(text: &str, terms: &[BigUint]) -> Vec<OeisMatch> {
    struct Entry {
        id: String,
        name: String,
        data: String,
    }
    let mut entries: Vec<Entry> = Vec::new();
    for line in text.lines() {
        let mut parts = line.splitn(3, ' ');
        let (Some(tag), Some(id)) = (parts.next(), parts.next()) else { continue };
        let rest = parts.next().unwrap_or("").trim();
        if !id.starts_with('A') {
            continue;
        }
        if tag == "%I" || entries.last().is_none_or(|e| e.id != id) {
            entries.push(Entry { id: id.to_string(), name: String::new(), data: String::new() });
        }
        let e = entries.last_mut().unwrap();
        match tag {
            "%S" | "%T" | "%U" => e.data.push_str(rest),
            "%N" => e.name = rest.to_string(),
            _ => {}
        }
    }
    let wanted: Vec<String> = terms.iter().map(|a| a.to_string()).collect();
    entries
        .into_iter()
        .map(|e| {
            let data: Vec<&str> = e.data.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
            OeisMatch { matched_prefix_length: longest_prefix_run(&wanted, &data), id: e.id, name: e.name }
        })
        .collect()
}

fn longest_prefix_run(wanted: &[String], data: &[&str]) -> usize {
    (0..data.len())
        .map(|start| wanted.iter().zip(&data[start..]).take_while(|(a, b)| a == *b).count())
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "\
# Greetings from The On-Line Encyclopedia of Integer Sequences!

Search: seq:1,2,4,8,16
Showing 1-2 of 2

%I A000079 M1129 N0432
%S A000079 1,2,4,8,16,32,64,128,256,512,
%T A000079 1024,2048
%N A000079 Powers of 2: a(n) = 2^n.
%I A011782 M1129
%S A011782 1,1,2,4,8,16,32,64
%N A011782 Number of compositions of n.
";

    fn t(xs: &[u32]) -> Vec<BigUint> {
        xs.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn parses_entries_and_prefix_runs() {
        let got = parse_response(SAMPLE, &t(&[1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024]));
        assert_eq!(got.len(), 2);
        assert_eq!(got[0].id, "A000079");
        assert_eq!(got[0].name, "Powers of 2: a(n) = 2^n.");
        assert_eq!(got[0].matched_prefix_length, 11);
        assert_eq!(got[1].matched_prefix_length, 7);
    }

    #[test]
    fn offline_miss_is_unavailable_and_hit_is_served() {
        let dir = tempfile::tempdir().unwrap();
        let client = OeisClient::new(dir.path(), true);
        let q = t(&[1, 2, 4, 8, 16]);
        assert!(matches!(client.lookup(&q), Lookup::Unavailable(_)));
        fs::write(client.cache_path(&query_string(&q)), SAMPLE).unwrap();
        let Lookup::Found(m) = client.lookup(&q) else { panic!("expected a cached answer") };
        assert_eq!(m[0].id, "A000079");
    }

    #[test]
    fn unreachable_server_is_unavailable() {
        let dir = tempfile::tempdir().unwrap();
        let client = OeisClient::new(dir.path(), false).with_base_url("http://127.0.0.1:9/search");
        assert!(matches!(client.lookup(&t(&[3, 1, 4])), Lookup::Unavailable(_)));
    }
}
