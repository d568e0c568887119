//! Process-wide cache of highest-weight crystals `B(nu)`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::cartan::{CartanData, CartanType, Weight};
use crate::crystal::CrystalGraph;
use crate::error::{Error, Result};
use crate::tableaux;

type Key = (CartanType, Weight);

fn cache() -> &'static Mutex<HashMap<Key, Arc<CrystalGraph>>> {
    static CACHE: OnceLock<Mutex<HashMap<Key, Arc<CrystalGraph>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `B(nu)`, built from tableaux in type A. Other types have no model.
pub fn highest_weight_crystal(c: &Arc<CartanData>, nu: &Weight) -> Result<Arc<CrystalGraph>> {
    if !c.cartan_type().is_type_a() {
        return Err(Error::NoModel(c.cartan_type().to_string()));
    }
    c.check_dominant(nu)?;
    let key = (c.cartan_type(), nu.clone());
    if let Some(g) = cache().lock().expect("cache poisoned").get(&key) {
        return Ok(g.clone());
    }
    // Built outside the lock; the first insert wins.
    let g = Arc::new(tableaux::build_type_a(c, nu)?);
    let mut map = cache().lock().expect("cache poisoned");
    Ok(map.entry(key).or_insert(g).clone())
}
