//! Write-once memo table attached to each group.
//!
//! Values are computed outside the lock, so a computation may recurse into
//! the same table. If two threads race on a key, the first insert wins and
//! both observe it; every memoized computation is deterministic.

use std::any::Any;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct MemoKey {
    pub kind: &'static str,
    pub args: Vec<u64>,
}

impl MemoKey {
    pub fn new(kind: &'static str, args: &[u64]) -> Self {
        MemoKey {
            kind,
            args: args.to_vec(),
        }
    }
}

#[derive(Default)]
pub(crate) struct Memo {
    map: Mutex<HashMap<MemoKey, Arc<dyn Any + Send + Sync>>>,
}

impl Memo {
    pub fn get_or_try<T, F>(&self, key: MemoKey, compute: F) -> Result<Arc<T>>
    where
        T: Any + Send + Sync,
        F: FnOnce() -> Result<T>,
    {
        if let Some(v) = self.lookup::<T>(&key) {
            return Ok(v);
        }
        let value: Arc<dyn Any + Send + Sync> = Arc::new(compute()?);
        let mut map = self.map.lock().expect("memo poisoned");
        let stored = map.entry(key).or_insert(value);
        Ok(Arc::clone(stored)
            .downcast::<T>()
            .expect("memo key reused with a different type"))
    }

    pub fn get_or<T, F>(&self, key: MemoKey, compute: F) -> Arc<T>
    where
        T: Any + Send + Sync,
        F: FnOnce() -> T,
    {
        self.get_or_try(key, || Ok(compute())).expect("infallible computation")
    }

    fn lookup<T: Any + Send + Sync>(&self, key: &MemoKey) -> Option<Arc<T>> {
        let map = self.map.lock().expect("memo poisoned");
        map.get(key).map(|v| {
            Arc::clone(v)
                .downcast::<T>()
                .expect("memo key reused with a different type")
        })
    }
}

impl std::fmt::Debug for Memo {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let n = self.map.lock().map(|m| m.len()).unwrap_or(0);
        write!(f, "Memo({n} entries)")
    }
}
