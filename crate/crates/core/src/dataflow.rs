//! Forward worklist solver over [`Cfg`]s.

use std::collections::BTreeSet;

use crate::javafront::{Cfg, CfgNode};

/// A forward analysis: a join-semilattice of states plus a node transfer.
pub trait Forward<'a> {
    type State: Clone + PartialEq;

    /// The state of blocks not (yet) reached.
    fn unreached(&self) -> Self::State;
    fn entry(&self) -> Self::State;
    fn join(&self, a: &Self::State, b: &Self::State) -> Self::State;
    fn transfer(&self, node: CfgNode<'a>, state: &mut Self::State);
}

#[derive(Debug, Clone)]
pub struct Solution<S> {
    /// State at the start of each block.
    pub block_in: Vec<S>,
    /// How often each block's transfer was evaluated.
    pub visits: Vec<usize>,
}

impl<S: Clone> Solution<S> {
    /// States before each node of each block, recomputed from `block_in`.
    pub fn node_states<'a, A>(&self, cfg: &Cfg<'a>, analysis: &A) -> Vec<Vec<S>>
    where
        A: Forward<'a, State = S>,
    {
        cfg.blocks
            .iter()
            .zip(&self.block_in)
            .map(|(b, input)| {
                let mut s = input.clone();
                b.nodes
                    .iter()
                    .map(|n| {
                        let before = s.clone();
                        analysis.transfer(*n, &mut s);
                        before
                    })
                    .collect()
            })
            .collect()
    }
}

/// Least fixpoint, processing blocks in reverse postorder priority.
pub fn solve<'a, A: Forward<'a>>(cfg: &Cfg<'a>, analysis: &A) -> Solution<A::State> {
    let n = cfg.len();
    let mut rank = vec![usize::MAX; n];
    for (i, b) in cfg.reverse_postorder().into_iter().enumerate() {
        rank[b] = i;
    }
    let mut block_in = vec![analysis.unreached(); n];
    let mut visits = vec![0; n];
    if n == 0 {
        return Solution { block_in, visits };
    }
    block_in[cfg.entry] = analysis.entry();
    let mut work = BTreeSet::new();
    work.insert((rank[cfg.entry], cfg.entry));
    while let Some((r, b)) = work.pop_first() {
        debug_assert_eq!(rank[b], r);
        visits[b] += 1;
        let mut state = block_in[b].clone();
        for node in &cfg.blocks[b].nodes {
            analysis.transfer(*node, &mut state);
        }
        for &s in &cfg.blocks[b].succs {
            let joined = analysis.join(&block_in[s], &state);
            if joined != block_in[s] || visits[s] == 0 {
                block_in[s] = joined;
                work.insert((rank[s], s));
            }
        }
    }
    Solution { block_in, visits }
}
