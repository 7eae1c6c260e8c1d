//! The property registry: every numbered item 1 to 114 is either a check or
//! an explicit skip, enforced at compile time.

use crate::gen::Gen;
use crate::outcome::Outcome;
use crate::props::{full, matrices, negative, theorems, vectors};

pub type CheckFn = fn(&mut Gen) -> Outcome;

#[derive(Clone, Copy)]
pub enum Body {
    Check(CheckFn),
    Skip(&'static str),
}

/// One registered identity. `items` lists the numbered items it covers
/// (empty for theorem-level checks and negative controls).
#[derive(Clone, Copy)]
pub struct Property {
    pub id: &'static str,
    pub items: &'static [u8],
    pub title: &'static str,
    pub body: Body,
}

impl Property {
    pub const fn check(id: &'static str, items: &'static [u8], title: &'static str, f: CheckFn) -> Self {
        Property { id, items, title, body: Body::Check(f) }
    }

    pub const fn skip(id: &'static str, items: &'static [u8], title: &'static str, reason: &'static str) -> Self {
        Property { id, items, title, body: Body::Skip(reason) }
    }

    pub fn is_skip(&self) -> bool {
        matches!(self.body, Body::Skip(_))
    }
}

/// Default-on groups, in registry order.
pub const GROUPS: &[&[Property]] = &[vectors::PROPERTIES, matrices::PROPERTIES, full::PROPERTIES, theorems::PROPERTIES];

/// Deliberately false identities; run only on request.
pub const NEGATIVE_CONTROLS: &[Property] = negative::PROPERTIES;

pub const FIRST_ITEM: u8 = 1;
pub const LAST_ITEM: u8 = 114;

const fn covers(item: u8) -> bool {
    let mut g = 0;
    while g < GROUPS.len() {
        let group = GROUPS[g];
        let mut p = 0;
        while p < group.len() {
            let items = group[p].items;
            let mut k = 0;
            while k < items.len() {
                if items[k] == item {
                    return true;
                }
                k += 1;
            }
            p += 1;
        }
        g += 1;
    }
    false
}

const _: () = {
    let mut item = FIRST_ITEM;
    while item <= LAST_ITEM {
        assert!(covers(item), "a numbered item has neither a check nor a skip");
        item += 1;
    }
};

/// Every property: the default groups followed by the negative controls. A
/// property's position here is its substream index.
pub fn all() -> Vec<&'static Property> {
    GROUPS.iter().flat_map(|g| g.iter()).chain(NEGATIVE_CONTROLS).collect()
}

pub fn find(id: &str) -> Option<&'static Property> {
    all().into_iter().find(|p| p.id == id)
}
