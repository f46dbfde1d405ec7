//! Generation certificates: expression DAGs over `{X_i, Y_i}` whose named nodes
//! evaluate to idempotents, matrix units and `x_w e_{i,j}`, `y_w e_{i,j}`.
//!
//! [`generation_certificate`] builds the DAG for a constructed generator set by
//! following the generation argument step by step: `I` and `E_s`, the chain of
//! partial identities along the u-sequence, the idempotents `e_j`, the seed
//! units and their propagation along the h-sequence, the descent from
//! `x_1^{d−1} e_{1,d}` to `e_{1,d}`, and finally every matrix unit and every
//! `x_w e_{i,j}`, `y_w e_{i,j}`. [`evaluate_certificate`] replays it exactly.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::construct::{BoxRef, GeneratorSet, ListEntry, Placement};
use crate::element::Element;
use crate::error::{LeavittError, Result};
use crate::field::Field;
use crate::matrix::LMatrix;
use crate::monomial::Monomial;
use crate::profile::{Class, Profile};

pub type NodeId = usize;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Op {
    X(usize),
    Y(usize),
    Identity,
    Product(Vec<NodeId>),
    LinComb(Vec<(i64, NodeId)>),
}

/// What a named node must evaluate to.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Target {
    Identity,
    /// `E_i = e_1 + … + e_i`
    Partial(usize),
    /// `e_i`
    Idem(usize),
    /// `e_{i,j}`, `i ≠ j`
    Unit(usize, usize),
    /// `m · e_{i,j}` for a reduced monomial `m`
    MonoUnit { mono: Monomial, i: usize, j: usize },
}

impl Target {
    pub fn dual(&self) -> Target {
        match self {
            Target::Identity | Target::Partial(_) | Target::Idem(_) => self.clone(),
            Target::Unit(i, j) => Target::Unit(*j, *i),
            Target::MonoUnit { mono, i, j } => Target::MonoUnit { mono: mono.involute(), i: *j, j: *i },
        }
    }

    pub fn label(&self) -> String {
        self.to_string()
    }

    /// Matrix unit `e_{i,j}` (or `e_i` when `i = j`).
    pub fn unit(i: usize, j: usize) -> Target {
        if i == j {
            Target::Idem(i)
        } else {
            Target::Unit(i, j)
        }
    }

    pub fn matrix<F: Field>(&self, d: usize, n: usize) -> LMatrix<F> {
        match self {
            Target::Identity => LMatrix::identity(d, n),
            Target::Partial(k) => {
                let mut m = LMatrix::zero(d, n);
                for i in 1..=*k {
                    m.set(i, i, Element::one(n));
                }
                m
            }
            Target::Idem(i) => single(d, n, *i, *i, Element::one(n)),
            Target::Unit(i, j) => single(d, n, *i, *j, Element::one(n)),
            Target::MonoUnit { mono, i, j } => single(d, n, *i, *j, Element::monomial(n, mono.clone())),
        }
    }
}

fn single<F: Field>(d: usize, n: usize, i: usize, j: usize, e: Element<F>) -> LMatrix<F> {
    let mut m = LMatrix::zero(d, n);
    m.set(i, j, e);
    m
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Identity => write!(f, "I"),
            Target::Partial(i) => write!(f, "E_{i}"),
            Target::Idem(i) => write!(f, "e_{i}"),
            Target::Unit(i, j) => write!(f, "e_{{{i},{j}}}"),
            Target::MonoUnit { mono, i, j } => write!(f, "{}·e_{{{i},{j}}}", mono.render_compact()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Node {
    pub op: Op,
    pub target: Option<Target>,
}

/// Nodes are stored in topological order: arguments precede their users.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Certificate {
    pub n: usize,
    pub d: usize,
    nodes: Vec<Node>,
    by_target: HashMap<Target, NodeId>,
    leaves: HashMap<Op, NodeId>,
    duals: HashMap<NodeId, NodeId>,
}

impl Certificate {
    pub fn new(n: usize, d: usize) -> Self {
        Certificate { n, d, ..Default::default() }
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn named_count(&self) -> usize {
        self.by_target.len()
    }

    pub fn find(&self, target: &Target) -> Option<NodeId> {
        self.by_target.get(target).copied()
    }

    pub fn find_label(&self, label: &str) -> Option<NodeId> {
        self.nodes.iter().position(|n| n.target.as_ref().is_some_and(|t| t.label() == label))
    }

    pub fn targets(&self) -> impl Iterator<Item = (NodeId, &Target)> {
        self.nodes.iter().enumerate().filter_map(|(k, n)| n.target.as_ref().map(|t| (k, t)))
    }

    fn push(&mut self, op: Op, target: Option<Target>) -> NodeId {
        if let Some(t) = &target {
            if let Some(&id) = self.by_target.get(t) {
                return id;
            }
        }
        let id = self.nodes.len();
        if let Some(t) = &target {
            self.by_target.insert(t.clone(), id);
        }
        self.nodes.push(Node { op, target });
        id
    }

    fn leaf(&mut self, op: Op) -> NodeId {
        if let Some(&id) = self.leaves.get(&op) {
            return id;
        }
        let target = matches!(op, Op::Identity).then_some(Target::Identity);
        let id = self.nodes.len();
        self.nodes.push(Node { op: op.clone(), target });
        self.leaves.insert(op, id);
        id
    }

    pub fn x(&mut self, i: usize) -> NodeId {
        self.leaf(Op::X(i))
    }

    pub fn y(&mut self, i: usize) -> NodeId {
        self.leaf(Op::Y(i))
    }

    pub fn product(&mut self, args: Vec<NodeId>, target: Option<Target>) -> NodeId {
        self.push(Op::Product(args), target)
    }

    pub fn lincomb(&mut self, args: Vec<(i64, NodeId)>, target: Option<Target>) -> NodeId {
        self.push(Op::LinComb(args), target)
    }

    /// A node evaluating to the involution of `id`: products are reversed and
    /// `X_i`, `Y_i` swapped.
    pub fn dual(&mut self, id: NodeId) -> NodeId {
        if let Some(&d) = self.duals.get(&id) {
            return d;
        }
        let node = self.nodes[id].clone();
        let target = node.target.as_ref().map(Target::dual);
        if let Some(t) = &target {
            if let Some(&existing) = self.by_target.get(t) {
                self.duals.insert(id, existing);
                return existing;
            }
        }
        let out = match node.op {
            Op::X(i) => self.y(i),
            Op::Y(i) => self.x(i),
            Op::Identity => id,
            Op::Product(args) => {
                let rev: Vec<NodeId> = args.iter().rev().map(|&a| self.dual(a)).collect();
                self.push(Op::Product(rev), target)
            }
            Op::LinComb(args) => {
                let terms: Vec<(i64, NodeId)> = args.iter().map(|&(c, a)| (c, self.dual(a))).collect();
                self.push(Op::LinComb(terms), target)
            }
        };
        self.duals.insert(id, out);
        out
    }

    pub fn to_json(&self) -> CertificateJson {
        let nodes = self
            .nodes
            .iter()
            .enumerate()
            .map(|(id, node)| {
                let (op, args) = match &node.op {
                    Op::X(i) => ("x", serde_json::json!([i])),
                    Op::Y(i) => ("y", serde_json::json!([i])),
                    Op::Identity => ("identity", serde_json::json!([])),
                    Op::Product(a) => ("product", serde_json::json!(a)),
                    Op::LinComb(t) => ("lincomb", serde_json::json!(t)),
                };
                NodeJson { id, op: op.to_string(), args, target: node.target.as_ref().map(Target::label) }
            })
            .collect();
        CertificateJson { n: self.n, d: self.d, nodes }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NodeJson {
    pub id: usize,
    pub op: String,
    pub args: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub target: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub n: usize,
    pub d: usize,
    pub nodes: Vec<NodeJson>,
}

struct Builder<'a> {
    cert: Certificate,
    p: &'a Profile,
    placement: &'a Placement,
    idem: Vec<NodeId>,
    /// `class_unit[a][b] = e_{h_a, h_b}` (positions in the h-sequence, 0-based)
    class_unit: HashMap<(usize, usize), NodeId>,
}

impl Builder<'_> {
    fn e(&self, i: usize) -> NodeId {
        self.idem[i]
    }

    fn sandwich(&mut self, i: usize, m: NodeId, j: usize, target: Target) -> NodeId {
        let (a, b) = (self.e(i), self.e(j));
        self.cert.product(vec![a, m, b], Some(target))
    }

    /// `I`, `E_s`, the u-chain of partial identities and every `e_j`.
    fn idempotents(&mut self) -> Result<()> {
        let p = self.p;
        let (d, q, r, s) = (p.d, p.q, p.r, p.s);
        let (x1, y1) = (self.cert.x(1), self.cert.y(1));
        let id = self.cert.product(vec![x1, y1], Some(Target::Identity));
        let mut partial: Vec<Option<NodeId>> = vec![None; d + 1];
        partial[d] = Some(id);
        let terms: Vec<(i64, NodeId)> = (1..=q + 1)
            .map(|i| {
                let (y, x) = (self.cert.y(i), self.cert.x(i));
                (1, self.cert.product(vec![y, x], None))
            })
            .collect();
        let es = self.cert.lincomb(terms, Some(Target::Partial(s)));
        partial[s] = Some(es);
        let u = p.u_sequence();
        let (xa, ya) = (self.cert.x(q + 2), self.cert.y(q + 2));
        let (xb, yb) = (self.cert.x(q + 1), self.cert.y(q + 1));
        for i in 0..d.saturating_sub(2) {
            let cur = partial[u[i]].ok_or(LeavittError::MalformedCertificate { node: i })?;
            let next = if u[i] + 2 <= r {
                // φ(E_{u_i}) + E_s
                let phi = self.cert.product(vec![ya, cur, xa], None);
                self.cert.lincomb(vec![(1, es), (1, phi)], Some(Target::Partial(u[i + 1])))
            } else {
                // E_s − β(I − E_{u_i})
                let comp = self.cert.lincomb(vec![(1, id), (-1, cur)], None);
                let beta = self.cert.product(vec![yb, comp, xb], None);
                self.cert.lincomb(vec![(1, es), (-1, beta)], Some(Target::Partial(u[i + 1])))
            };
            partial[u[i + 1]] = Some(next);
        }
        self.idem = vec![usize::MAX; d + 1];
        for j in 1..=d {
            let ej = partial[j].ok_or(LeavittError::MalformedCertificate { node: j })?;
            self.idem[j] = if j == 1 {
                self.cert.lincomb(vec![(1, ej)], Some(Target::Idem(1)))
            } else {
                let prev = partial[j - 1].ok_or(LeavittError::MalformedCertificate { node: j })?;
                self.cert.lincomb(vec![(1, ej), (-1, prev)], Some(Target::Idem(j)))
            };
        }
        Ok(())
    }

    /// Seeds, propagation along each class block, and all `e_{a,b}` with `a ∼ b`.
    fn class_units(&mut self) {
        let p = self.p;
        let (d, q, s, d1) = (p.d, p.q, p.s, p.d1);
        let h = p.h_sequence().to_vec();
        let plus = |a: usize, b: usize| b == a + s;
        let mut cons: HashMap<usize, NodeId> = HashMap::new();
        if d1 >= 2 {
            let xa = self.cert.x(q + 2);
            cons.insert(0, self.sandwich(1, xa, 1 + s, Target::Unit(1, 1 + s)));
        }
        if d - d1 >= 2 {
            let xb = self.cert.x(q + 1);
            cons.insert(d1, self.sandwich(d, xb, s, Target::Unit(d, s)));
        }
        for (start, end) in [(0, d1), (d1, d)] {
            for i in start..end.saturating_sub(2) {
                let cur = cons[&i];
                let y = if plus(h[i], h[i + 1]) { self.cert.y(q + 2) } else { self.cert.y(q + 1) };
                let x = if plus(h[i + 1], h[i + 2]) { self.cert.x(q + 2) } else { self.cert.x(q + 1) };
                let next = self.cert.product(vec![y, cur, x], Some(Target::Unit(h[i + 1], h[i + 2])));
                cons.insert(i + 1, next);
            }
            for a in start..end {
                self.class_unit.insert((a, a), self.idem[h[a]]);
                for b in a + 1..end {
                    let id = if b == a + 1 {
                        cons[&a]
                    } else {
                        let left = self.class_unit[&(a, b - 1)];
                        self.cert.product(vec![left, cons[&(b - 1)]], Some(Target::Unit(h[a], h[b])))
                    };
                    self.class_unit.insert((a, b), id);
                    let dual = self.cert.dual(id);
                    self.class_unit.insert((b, a), dual);
                }
            }
        }
    }

    /// `e_{i,j}` for `i ∼ j`.
    fn same_class_unit(&self, i: usize, j: usize) -> NodeId {
        let (a, b) = (self.p.h_position(i) - 1, self.p.h_position(j) - 1);
        self.class_unit[&(a, b)]
    }

    fn entry_in_box(&mut self, entry: ListEntry) -> Result<(BoxRef, NodeId)> {
        let b = self.placement.locate(entry).ok_or_else(|| {
            LeavittError::InvalidPlacement(format!("{entry} is not placed"))
        })?;
        let m = self.cert.x(b.matrix);
        let target = Target::MonoUnit { mono: entry.monomial(), i: b.row, j: self.p.d };
        Ok((b, self.sandwich(b.row, m, self.p.d, target)))
    }

    /// `x_w e_{ŵ,1}` from the column-1 entry of `X_{q_w+1}`.
    fn x_hat(&mut self, w: usize) -> NodeId {
        let d = self.p.d;
        let (qw, hat) = ((w - 1) / d, (w - 1) % d + 1);
        let m = self.cert.x(qw + 1);
        self.sandwich(hat, m, 1, Target::MonoUnit { mono: Monomial::x(w), i: hat, j: 1 })
    }

    /// `y_w e_{1,ŵ}`
    fn y_hat(&mut self, w: usize) -> NodeId {
        let id = self.x_hat(w);
        self.cert.dual(id)
    }

    /// `x_1^{d−1} e_{1,d}` down to `e_{1,d}`.
    fn descent(&mut self) -> Result<NodeId> {
        let p = self.p;
        let (n, d) = (p.n, p.d);
        let x1pow = |k: usize| Monomial::list_entry(1, k - 1);
        let (top_box, top) = self.entry_in_box(ListEntry { u: 1, t: d - 2 })?;
        let lead = self.same_class_unit(1, top_box.row);
        let mut current = self.cert.product(
            vec![lead, top],
            Some(Target::MonoUnit { mono: x1pow(d - 1), i: 1, j: d }),
        );
        for k in (1..d).rev() {
            let mut terms = Vec::with_capacity(n);
            let y1 = self.y_hat(1);
            terms.push((1, self.cert.product(vec![y1, current], None)));
            for w in 2..=n {
                let (b, placed) = self.entry_in_box(ListEntry { u: w, t: k - 1 })?;
                let hat = (w - 1) % d + 1;
                let yw = self.y_hat(w);
                let bridge = self.same_class_unit(hat, b.row);
                let args = if hat == b.row { vec![yw, placed] } else { vec![yw, bridge, placed] };
                terms.push((1, self.cert.product(args, None)));
            }
            let target = if k == 1 {
                Target::Unit(1, d)
            } else {
                Target::MonoUnit { mono: x1pow(k - 1), i: 1, j: d }
            };
            current = self.cert.lincomb(terms, Some(target));
        }
        Ok(current)
    }

    fn all_units(&mut self, e1d: NodeId) -> Vec<Vec<NodeId>> {
        let d = self.p.d;
        let ed1 = self.cert.dual(e1d);
        let mut units = vec![vec![usize::MAX; d + 1]; d + 1];
        for i in 1..=d {
            for j in 1..=d {
                units[i][j] = if self.p.same_class(i, j) {
                    self.same_class_unit(i, j)
                } else if self.p.row_class(i) == Class::One {
                    let (a, b) = (self.same_class_unit(i, 1), self.same_class_unit(d, j));
                    let args: Vec<NodeId> = [(i != 1, a), (true, e1d), (j != d, b)]
                        .into_iter()
                        .filter_map(|(keep, id)| keep.then_some(id))
                        .collect();
                    self.cert.product(args, Some(Target::Unit(i, j)))
                } else {
                    let (a, b) = (self.same_class_unit(i, d), self.same_class_unit(1, j));
                    let args: Vec<NodeId> = [(i != d, a), (true, ed1), (j != 1, b)]
                        .into_iter()
                        .filter_map(|(keep, id)| keep.then_some(id))
                        .collect();
                    self.cert.product(args, Some(Target::Unit(i, j)))
                };
            }
        }
        units
    }

    fn letter_units(&mut self, units: &[Vec<NodeId>]) {
        let (n, d) = (self.p.n, self.p.d);
        for w in 1..=n {
            let hat = (w - 1) % d + 1;
            let core = self.x_hat(w);
            for i in 1..=d {
                for j in 1..=d {
                    let mut args = Vec::with_capacity(3);
                    if i != hat {
                        args.push(units[i][hat]);
                    }
                    args.push(core);
                    if j != 1 {
                        args.push(units[1][j]);
                    }
                    let id = if args.len() == 1 {
                        core
                    } else {
                        self.cert.product(args, Some(Target::MonoUnit { mono: Monomial::x(w), i, j }))
                    };
                    self.cert.dual(id);
                }
            }
        }
    }
}

/// Builds the certificate for a set produced by [`crate::construct::build_generators`].
pub fn generation_certificate<F: Field>(profile: &Profile, gens: &GeneratorSet<F>) -> Result<Certificate> {
    let (n, d) = (profile.n, profile.d);
    if gens.n != n || gens.d != d {
        return Err(LeavittError::InvalidParameters(format!(
            "generator set is for ({}, {}), profile for ({n}, {d})",
            gens.n, gens.d
        )));
    }
    if profile.is_trivial() {
        let mut cert = Certificate::new(n, 1);
        let (x1, y1) = (cert.x(1), cert.y(1));
        cert.product(vec![x1, y1], Some(Target::Identity));
        for w in 1..=n {
            let x = cert.x(w);
            let id = cert.product(vec![x], Some(Target::MonoUnit { mono: Monomial::x(w), i: 1, j: 1 }));
            cert.dual(id);
        }
        return Ok(cert);
    }
    let placement = match &gens.placement {
        Some(p) => p.clone(),
        None => Placement::from_generators(profile, gens)?,
    };
    let mut b = Builder {
        cert: Certificate::new(n, d),
        p: profile,
        placement: &placement,
        idem: Vec::new(),
        class_unit: HashMap::new(),
    };
    b.idempotents()?;
    b.class_units();
    let e1d = b.descent()?;
    let units = b.all_units(e1d);
    b.letter_units(&units);
    Ok(b.cert)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch<F: Field> {
    pub node: NodeId,
    pub label: String,
    pub residual: LMatrix<F>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateReport<F: Field> {
    pub node_count: usize,
    pub named_count: usize,
    pub checked: usize,
    /// Largest number of terms in any entry of any intermediate matrix.
    pub max_entry_terms: usize,
    pub mismatch: Option<Mismatch<F>>,
}

impl<F: Field> CertificateReport<F> {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// Evaluates every node once, checking each named node against its target.
/// Stops at the first mismatch.
pub fn evaluate_certificate<F: Field>(cert: &Certificate, gens: &GeneratorSet<F>) -> Result<CertificateReport<F>> {
    let (n, d) = (cert.n, cert.d);
    if gens.n != n || gens.d != d {
        return Err(LeavittError::InvalidParameters("certificate and generator set disagree".into()));
    }
    let nodes = cert.nodes();
    let mut uses = vec![0usize; nodes.len()];
    for (id, node) in nodes.iter().enumerate() {
        let args: Vec<NodeId> = match &node.op {
            Op::Product(a) => a.clone(),
            Op::LinComb(t) => t.iter().map(|&(_, a)| a).collect(),
            Op::X(i) | Op::Y(i) => {
                if *i == 0 || *i > n {
                    return Err(LeavittError::MalformedCertificate { node: id });
                }
                Vec::new()
            }
            Op::Identity => Vec::new(),
        };
        if args.is_empty() && matches!(node.op, Op::Product(_) | Op::LinComb(_)) {
            return Err(LeavittError::MalformedCertificate { node: id });
        }
        for a in args {
            if a >= id {
                return Err(LeavittError::MalformedCertificate { node: id });
            }
            uses[a] += 1;
        }
    }
    let identity = LMatrix::<F>::identity(d, n);
    let mut values: Vec<Option<LMatrix<F>>> = vec![None; nodes.len()];
    let mut report = CertificateReport {
        node_count: nodes.len(),
        named_count: cert.named_count(),
        checked: 0,
        max_entry_terms: 0,
        mismatch: None,
    };
    for (id, node) in nodes.iter().enumerate() {
        let value = {
            let get = |a: NodeId| -> &LMatrix<F> {
                match &nodes[a].op {
                    Op::X(i) => gens.xm(*i),
                    Op::Y(i) => gens.ym(*i),
                    Op::Identity => &identity,
                    _ => values[a].as_ref().expect("argument evaluated and still live"),
                }
            };
            match &node.op {
                Op::X(_) | Op::Y(_) | Op::Identity => None,
                Op::Product(args) => {
                    let mut acc = get(args[0]).clone();
                    for &a in &args[1..] {
                        acc = acc.try_mul(get(a))?;
                    }
                    Some(acc)
                }
                Op::LinComb(terms) => {
                    let mut acc = LMatrix::zero(d, n);
                    for &(c, a) in terms {
                        acc.add_scaled(&F::from_i64(c), get(a));
                    }
                    Some(acc)
                }
            }
        };
        if let Some(v) = &value {
            report.max_entry_terms = report.max_entry_terms.max(v.max_entry_len());
        }
        if let Some(t) = &node.target {
            let expected = t.matrix::<F>(d, n);
            let actual = value.as_ref().unwrap_or_else(|| match &node.op {
                Op::X(i) => gens.xm(*i),
                Op::Y(i) => gens.ym(*i),
                _ => &identity,
            });
            report.checked += 1;
            if *actual != expected {
                report.mismatch =
                    Some(Mismatch { node: id, label: t.label(), residual: actual.try_sub(&expected)? });
                return Ok(report);
            }
        }
        let args: Vec<NodeId> = match &node.op {
            Op::Product(a) => a.clone(),
            Op::LinComb(t) => t.iter().map(|&(_, a)| a).collect(),
            _ => Vec::new(),
        };
        for a in args {
            uses[a] -= 1;
            if uses[a] == 0 {
                values[a] = None;
            }
        }
        if uses[id] > 0 {
            values[id] = value;
        }
    }
    Ok(report)
}

/// Builds and evaluates, turning a mismatch into an error naming the node.
pub fn certify<F: Field>(profile: &Profile, gens: &GeneratorSet<F>) -> Result<CertificateReport<F>> {
    let cert = generation_certificate(profile, gens)?;
    let report = evaluate_certificate(&cert, gens)?;
    if let Some(m) = &report.mismatch {
        return Err(LeavittError::CertificateMismatch { node: m.node, label: m.label.clone() });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{construct, PlacementStrategy};
    use crate::field::Rational;
    use crate::matrix::matrix_unit;
    use crate::profile::make_profile;

    fn setup(n: usize, d: usize) -> (Profile, GeneratorSet<Rational>) {
        let p = make_profile(n, d).unwrap();
        let g = construct(&p, PlacementStrategy::Canonical, None).unwrap();
        (p, g)
    }

    #[test]
    fn five_three_passes() {
        let (p, g) = setup(5, 3);
        let cert = generation_certificate(&p, &g).unwrap();
        let report = evaluate_certificate(&cert, &g).unwrap();
        assert!(report.passed(), "{:?}", report.mismatch.map(|m| m.label));
        let es = cert.find(&Target::Partial(p.s)).unwrap();
        assert!(matches!(&cert.nodes()[es].op, Op::LinComb(t) if t.len() == 2));
        assert!(cert.find(&Target::Unit(1, 3)).is_some());
        assert!(cert.find_label("x1^2·e_{1,3}").is_some());
        assert_eq!(Target::Unit(1, 3).matrix::<Rational>(3, 5), matrix_unit(3, 5, 1, 3).unwrap());
    }

    #[test]
    fn small_grid_passes() {
        for n in 2..=7 {
            for d in 1..n {
                if make_profile(n, d).is_err() {
                    continue;
                }
                let (p, g) = setup(n, d);
                let r = certify(&p, &g).unwrap();
                assert!(r.passed());
                assert!(r.checked >= 2 * n * d * d, "({n},{d})");
            }
        }
    }

    #[test]
    fn corrupted_generator_is_caught() {
        let (p, mut g) = setup(5, 3);
        let cert = generation_certificate(&p, &g).unwrap();
        g.x[1].set(3, 2, Element::zero(5));
        g.y[1] = g.x[1].involute();
        let report = evaluate_certificate(&cert, &g).unwrap();
        assert!(!report.passed());
    }

    #[test]
    fn json_export_shape() {
        let (p, g) = setup(5, 3);
        let cert = generation_certificate(&p, &g).unwrap();
        let json = serde_json::to_value(cert.to_json()).unwrap();
        let nodes = json["nodes"].as_array().unwrap();
        assert_eq!(nodes.len(), cert.len());
        assert!(nodes.iter().any(|n| n["target"] == "e_{1,3}"));
    }

    #[test]
    fn dual_targets() {
        assert_eq!(Target::Unit(1, 2).dual(), Target::Unit(2, 1));
        let t = Target::MonoUnit { mono: Monomial::x(3), i: 2, j: 1 };
        assert_eq!(t.dual(), Target::MonoUnit { mono: Monomial::y(3), i: 1, j: 2 });
        assert_eq!(t.label(), "x3·e_{2,1}");
    }
}

