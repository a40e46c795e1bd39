use std::collections::HashMap;
use std::sync::Mutex;

use kluniform_core::tutte::TutteMemo;
use kluniform_core::{Matroid, TuttePolynomial};

/// Thread-safe cache for the deletion-contraction recursion.
#[derive(Debug, Default)]
pub struct SharedMemo {
    map: Mutex<HashMap<Matroid, TuttePolynomial>>,
}

impl SharedMemo {
    pub fn new() -> Self {
        SharedMemo::default()
    }

    pub fn len(&self) -> usize {
        self.map.lock().expect("memo lock poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl TutteMemo for SharedMemo {
    fn get(&self, key: &Matroid) -> Option<TuttePolynomial> {
        self.map.lock().expect("memo lock poisoned").get(key).cloned()
    }

    fn insert(&self, key: Matroid, value: TuttePolynomial) {
        self.map.lock().expect("memo lock poisoned").insert(key, value);
    }
}
