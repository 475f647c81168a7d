//! Per-method control-flow graphs.

use super::ast::{Block, Expr, MethodDecl, MethodBody, Stmt, StmtKind};

/// One step inside a basic block.
#[derive(Debug, Clone, Copy)]
pub enum CfgNode<'a> {
    /// A declaration, expression statement or return.
    Stmt(&'a Stmt),
    /// The condition of an `if` or `while`, evaluated for its effects.
    Cond(&'a Expr),
}

#[derive(Debug, Clone, Default)]
pub struct BasicBlock<'a> {
    pub nodes: Vec<CfgNode<'a>>,
    pub succs: Vec<usize>,
    pub preds: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct Cfg<'a> {
    pub blocks: Vec<BasicBlock<'a>>,
    pub entry: usize,
    pub exit: usize,
}

impl<'a> Cfg<'a> {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Blocks in reverse postorder from the entry.
    pub fn reverse_postorder(&self) -> Vec<usize> {
        let mut seen = vec![false; self.blocks.len()];
        let mut order = Vec::with_capacity(self.blocks.len());
        let mut stack = vec![(self.entry, 0usize)];
        seen[self.entry] = true;
        while let Some((b, i)) = stack.pop() {
            if let Some(&s) = self.blocks[b].succs.get(i) {
                stack.push((b, i + 1));
                if !seen[s] {
                    seen[s] = true;
                    stack.push((s, 0));
                }
            } else {
                order.push(b);
            }
        }
        order.reverse();
        order
    }
}

/// Builds the CFG of a method; methods without an analyzable body get a
/// single empty block.
pub fn build_cfg(method: &MethodDecl) -> Cfg<'_> {
    match &method.body {
        MethodBody::Block(b) => build_block_cfg(b),
        _ => Cfg { blocks: vec![BasicBlock::default()], entry: 0, exit: 0 },
    }
}

pub fn build_block_cfg(body: &Block) -> Cfg<'_> {
    let mut b = Builder { blocks: vec![BasicBlock::default()], returns: Vec::new() };
    let end = b.stmts(&body.stmts, 0);
    let exit = if b.returns.is_empty() {
        end
    } else {
        let exit = b.new_block();
        b.edge(end, exit);
        for r in std::mem::take(&mut b.returns) {
            b.edge(r, exit);
        }
        exit
    };
    b.finish(exit)
}

struct Builder<'a> {
    blocks: Vec<BasicBlock<'a>>,
    returns: Vec<usize>,
}

impl<'a> Builder<'a> {
    fn new_block(&mut self) -> usize {
        self.blocks.push(BasicBlock::default());
        self.blocks.len() - 1
    }

    fn edge(&mut self, from: usize, to: usize) {
        self.blocks[from].succs.push(to);
        self.blocks[to].preds.push(from);
    }

    fn stmts(&mut self, stmts: &'a [Stmt], mut cur: usize) -> usize {
        for s in stmts {
            cur = self.stmt(s, cur);
        }
        cur
    }

    /// Appends `s` starting in block `cur`; returns the block where control continues.
    fn stmt(&mut self, s: &'a Stmt, cur: usize) -> usize {
        match &s.kind {
            StmtKind::Local { .. } | StmtKind::Expr(_) => {
                self.blocks[cur].nodes.push(CfgNode::Stmt(s));
                cur
            }
            StmtKind::Return(_) => {
                self.blocks[cur].nodes.push(CfgNode::Stmt(s));
                self.returns.push(cur);
                self.new_block()
            }
            StmtKind::Empty => cur,
            StmtKind::Block(b) => self.stmts(&b.stmts, cur),
            StmtKind::If { cond, then, otherwise } => {
                self.blocks[cur].nodes.push(CfgNode::Cond(cond));
                let then_start = self.new_block();
                self.edge(cur, then_start);
                let then_end = self.stmt(then, then_start);
                let join;
                if let Some(other) = otherwise {
                    let else_start = self.new_block();
                    self.edge(cur, else_start);
                    let else_end = self.stmt(other, else_start);
                    join = self.new_block();
                    self.edge(then_end, join);
                    self.edge(else_end, join);
                } else {
                    join = self.new_block();
                    self.edge(then_end, join);
                    self.edge(cur, join);
                }
                join
            }
            StmtKind::While { cond, body } => {
                let guard = self.new_block();
                self.edge(cur, guard);
                self.blocks[guard].nodes.push(CfgNode::Cond(cond));
                let body_start = self.new_block();
                self.edge(guard, body_start);
                let body_end = self.stmt(body, body_start);
                self.edge(body_end, guard);
                let after = self.new_block();
                self.edge(guard, after);
                after
            }
        }
    }

    /// Drops blocks unreachable from the entry and renumbers the rest.
    fn finish(self, exit: usize) -> Cfg<'a> {
        let n = self.blocks.len();
        let mut reachable = vec![false; n];
        let mut stack = vec![0];
        reachable[0] = true;
        while let Some(b) = stack.pop() {
            for &s in &self.blocks[b].succs {
                if !reachable[s] {
                    reachable[s] = true;
                    stack.push(s);
                }
            }
        }
        let mut map = vec![usize::MAX; n];
        let mut next = 0;
        for (i, r) in reachable.iter().enumerate() {
            if *r {
                map[i] = next;
                next += 1;
            }
        }
        let blocks = self
            .blocks
            .into_iter()
            .enumerate()
            .filter(|(i, _)| reachable[*i])
            .map(|(_, b)| BasicBlock {
                nodes: b.nodes,
                succs: b.succs.iter().map(|&s| map[s]).collect(),
                preds: b.preds.iter().filter(|&&p| reachable[p]).map(|&p| map[p]).collect(),
            })
            .collect();
        let exit = if reachable[exit] { map[exit] } else { usize::MAX };
        Cfg { blocks, entry: 0, exit }
    }
}
