use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use crate::qring::{qint, LaurentPoly};

use super::graph::Web;

/// Order in which reducible faces are rewritten.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Smallest face first, ties broken by lowest dart.
    #[default]
    SmallestFirst,
    /// Face containing the lowest dart, whatever its size.
    Leftmost,
}

/// A web expanded in the non-elliptic basis.
pub type Reduced = Arc<Vec<(Web, LaurentPoly)>>;

trait Memo {
    fn get(&mut self, w: &Web) -> Option<Reduced>;
    fn put(&mut self, w: Web, r: Reduced);
}

impl Memo for HashMap<Web, Reduced> {
    fn get(&mut self, w: &Web) -> Option<Reduced> {
        HashMap::get(self, w).cloned()
    }
    fn put(&mut self, w: Web, r: Reduced) {
        self.insert(w, r);
    }
}

struct Global;

fn global_table() -> &'static Mutex<HashMap<Web, Reduced>> {
    static TABLE: OnceLock<Mutex<HashMap<Web, Reduced>>> = OnceLock::new();
    TABLE.get_or_init(|| Mutex::new(HashMap::new()))
}

impl Memo for Global {
    fn get(&mut self, w: &Web) -> Option<Reduced> {
        global_table().lock().unwrap().get(w).cloned()
    }
    fn put(&mut self, w: Web, r: Reduced) {
        global_table().lock().unwrap().insert(w, r);
    }
}

/// Reducer with a private memo table and a chosen strategy.
pub struct Reducer {
    strategy: Strategy,
    memo: HashMap<Web, Reduced>,
}

impl Reducer {
    pub fn new(strategy: Strategy) -> Self {
        Reducer {
            strategy,
            memo: HashMap::new(),
        }
    }

    pub fn reduce(&mut self, w: &Web) -> Reduced {
        reduce_in(w, self.strategy, &mut self.memo)
    }
}

/// Reduces with the default strategy and the shared process-wide memo.
pub fn reduce_web(w: &Web) -> Reduced {
    reduce_in(w, Strategy::SmallestFirst, &mut Global)
}

fn pick_face(w: &Web, strategy: Strategy) -> Option<Vec<usize>> {
    let b = w.boundary_len();
    let candidates = w
        .face_orbits()
        .into_iter()
        .filter(|o| o.len() <= 4 && o.iter().all(|&d| d >= b));
    match strategy {
        Strategy::Leftmost => candidates.min_by_key(|o| o[0]),
        Strategy::SmallestFirst => candidates.min_by_key(|o| (o.len(), o[0])),
    }
}

fn reduce_in(w: &Web, strategy: Strategy, memo: &mut impl Memo) -> Reduced {
    if let Some(r) = memo.get(w) {
        return r;
    }
    let mut acc: BTreeMap<Web, LaurentPoly> = BTreeMap::new();
    let mut absorb = |r: &Reduced, c: &LaurentPoly| {
        for (x, k) in r.iter() {
            let slot = acc.entry(x.clone()).or_default();
            *slot += &(k * c);
        }
    };
    if w.loops() > 0 {
        let inner = reduce_in(&w.without_loops(), strategy, memo);
        absorb(&inner, &qint(3).unwrap().pow(w.loops()));
    } else if let Some(face) = pick_face(w, strategy) {
        match face.len() {
            2 => {
                let r = reduce_in(&w.contract_digon(&face), strategy, memo);
                absorb(&r, &qint(2).unwrap());
            }
            4 => {
                for x in w.resolve_square(&face) {
                    let r = reduce_in(&x, strategy, memo);
                    absorb(&r, &LaurentPoly::one());
                }
            }
            n => unreachable!("face of odd size {n} in a bipartite web"),
        }
    } else {
        assert!(
            !w.has_closed_component(),
            "non-empty closed non-elliptic web produced: {w}"
        );
        absorb(&Arc::new(vec![(w.clone(), LaurentPoly::one())]), &LaurentPoly::one());
    }
    let out: Reduced = Arc::new(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect());
    memo.put(w.clone(), out.clone());
    out
}
