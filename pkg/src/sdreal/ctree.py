"""Continuity trees: memoized non-wellfounded trees denoting uniformly
continuous maps [-1,1]^n -> [-1,1].

A tree node either writes a digit (one child) or reads one digit of input
i (three children, one per digit).  Running the tree against input streams
yields the output stream; along every path infinitely many writes must
occur (productivity), which `check_productive` verifies in bounded form.

Trees are values: the node behind a CTree is computed on first demand and
cached, and builders share subtrees freely, so what unfolds at runtime is
a DAG.  That cache is the memoization the whole package leans on —
repeating an evaluation expands nothing new.
"""

from .errors import DomainError
from .rationals import Rat
from .sdstream import (
    DIGITS,
    DigitStream,
    SignedDigit,
    cauchy_to_stream,
    const_seq,
    sigma_approx,
)


class WriteNode:
    __slots__ = ("digit", "next")

    def __init__(self, digit, next):
        self.digit = digit
        self.next = next


class ReadNode:
    __slots__ = ("index", "branches")

    def __init__(self, index, branches):
        self.index = index
        self.branches = branches  # (N-branch, Z-branch, P-branch)

    def branch(self, d):
        return self.branches[int(d) + 1]


class ExpansionStats:
    """Counts node expansions for one tree's cache, transitively.

    A derived tree (compose, feed_digit, ...) records the trees it was
    built from; `total` sums over that DAG without double counting, so it
    reflects every expansion an evaluation of the derived tree can cause.
    """

    __slots__ = ("count", "parents")

    def __init__(self, parents=()):
        self.count = 0
        self.parents = tuple(parents)

    def total(self):
        seen = set()
        todo = [self]
        acc = 0
        while todo:
            s = todo.pop()
            if id(s) in seen:
                continue
            seen.add(id(s))
            acc += s.count
            todo.extend(s.parents)
        return acc


class CTree:
    """n-ary continuity tree with deferred, cached root expansion."""

    __slots__ = ("arity", "stats", "_node", "_thunk")

    def __init__(self, thunk, arity, stats):
        self.arity = arity
        self.stats = stats
        if callable(thunk):
            self._node = None
            self._thunk = thunk
        else:
            self._node = thunk
            self._thunk = None

    @property
    def root(self):
        node = self._node
        if node is None:
            thunk = self._thunk
            node = thunk() if thunk is not None else self._expand()
            self._node = node
            self._thunk = None
            self.stats.count += 1
        return node

    def _expand(self):
        # hook for subclasses that carry builder state instead of a thunk
        raise RuntimeError("tree has neither a cached node nor a thunk")

    @property
    def expanded(self):
        return self._node is not None


def expansion_count(t):
    """Total node expansions attributable to this tree so far."""
    return t.stats.total()


def constant_tree(digit, arity=1):
    """The one-node cyclic tree writing `digit` forever."""
    t = CTree(lambda: None, arity, ExpansionStats())
    t._node = WriteNode(SignedDigit(digit), t)
    t._thunk = None
    return t


def apply(t, inputs):
    """Run the tree as a stream transformer.

    Writes emit digits; reads pop one digit from the indexed input and
    select the branch.  The inputs tuple length must equal the arity.
    """
    inputs = tuple(inputs)
    if len(inputs) != t.arity:
        raise DomainError(f"expected {t.arity} inputs, got {len(inputs)}")

    def step(tree, ins):
        node = tree.root
        while isinstance(node, ReadNode):
            i = node.index - 1
            s = ins[i]
            branch = node.branches[int(s.head) + 1]
            ins = ins[:i] + (s.tail,) + ins[i + 1 :]
            node = branch.root
        nxt, rest = node.next, ins
        return DigitStream(node.digit, lambda: step(nxt, rest))

    return step(t, inputs)


def as_stream(t):
    """A 0-ary tree read off as the digit stream it is."""
    return apply(t, ())


def eval_at(t, q, n):
    """Approximate the realized unary function at rational q to 2^-n."""
    q = Rat(q)
    if abs(q) > 1:
        raise DomainError(f"{q} lies outside [-1,1]")
    if t.arity != 1:
        raise DomainError("eval_at needs a unary tree")
    return sigma_approx(apply(t, (cauchy_to_stream(const_seq(q)),)), n)


def feed_digit(t, i, d):
    """Pre-compose input i with x -> (x+d)/2: the tree that behaves as if
    digit d had already been read from input i.

    Writes commute out; a read on input i consumes the digit and feeding
    stops on that path; reads on other inputs commute branch-wise.
    """
    if not 1 <= i <= t.arity:
        raise DomainError(f"input index {i} out of range 1..{t.arity}")
    d = SignedDigit(d)
    stats = ExpansionStats(parents=(t.stats,))
    arity = t.arity

    def fed(sub):
        return CTree(lambda: expand(sub), arity, stats)

    def expand(sub):
        node = sub.root
        if isinstance(node, WriteNode):
            return WriteNode(node.digit, fed(node.next))
        if node.index == i:
            return node.branch(d).root
        return ReadNode(node.index, tuple(fed(b) for b in node.branches))

    return fed(t)


def compose(f, gs):
    """The tree realizing f(g_1,...,g_n); all g_i share one arity m.

    Coiteration over (position in f, current gs): f-writes are emitted;
    an f-read of input i inspects g_i — a g_i-write resolves the read
    immediately, a g_i-read is emitted, with every other g_k pre-composed
    with the digit just consumed (feed_digit).
    """
    gs = tuple(gs)
    if len(gs) != f.arity:
        raise DomainError(f"need {f.arity} inner trees, got {len(gs)}")
    if not gs:
        raise DomainError("composition with zero inner trees is not defined")
    m = gs[0].arity
    if any(g.arity != m for g in gs):
        raise DomainError("inner trees must share one arity")
    stats = ExpansionStats(parents=(f.stats,) + tuple(g.stats for g in gs))

    def comp(fpos, cur):
        return CTree(lambda: expand(fpos, cur), m, stats)

    def expand(fpos, cur):
        node = fpos.root if isinstance(fpos, CTree) else fpos
        while True:
            if isinstance(node, WriteNode):
                return WriteNode(node.digit, comp(node.next, cur))
            i = node.index - 1
            gnode = cur[i].root
            if isinstance(gnode, WriteNode):
                nxt = node.branches[int(gnode.digit) + 1]
                cur = cur[:i] + (gnode.next,) + cur[i + 1 :]
                node = nxt.root
            else:
                j = gnode.index

                def mk(e, node=node, cur=cur, i=i, gnode=gnode, j=j):
                    new = tuple(
                        gnode.branch(e) if k == i else feed_digit(g, j, e)
                        for k, g in enumerate(cur)
                    )
                    return comp(node, new)

                return ReadNode(j, tuple(mk(e) for e in DIGITS))

    return comp(f, gs)


def modulus(t, k):
    """Max number of reads on any path before the k-th write.

    Inputs agreeing on that many digits give outputs agreeing on k digits.
    Memoized per (node, remaining writes) to keep shared subtrees cheap.
    """
    if t.arity != 1:
        raise DomainError("modulus is defined for unary trees")
    memo = {}

    def go(node, k):
        if k == 0:
            return 0
        key = (id(node), k)
        got = memo.get(key)
        if got is not None:
            return got
        if isinstance(node, WriteNode):
            res = go(node.next.root, k - 1)
        else:
            res = 1 + max(go(b.root, k) for b in node.branches)
        memo[key] = res
        return res

    return go(t.root, k)


def check_productive(t, k_writes, max_reads):
    """Bounded productivity check: along every path each of the first
    `k_writes` writes arrives within `max_reads` consecutive reads.
    Returns False (never diverges) when the bound is exceeded."""
    memo = {}

    def go(node, writes_left, reads_left):
        if writes_left == 0:
            return True
        key = (id(node), writes_left, reads_left)
        got = memo.get(key)
        if got is not None:
            return got
        if isinstance(node, WriteNode):
            res = go(node.next.root, writes_left - 1, max_reads)
        elif reads_left == 0:
            res = False
        else:
            res = all(
                go(b.root, writes_left, reads_left - 1) for b in node.branches
            )
        memo[key] = res
        return res

    return go(t.root, k_writes, max_reads)


def _read_label(node, arity):
    return f"x{node.index}" if arity > 1 else ""


def render_ascii(t, depth):
    """Indented ASCII rendering of the first `depth` node levels.

    Write nodes show their digit; read nodes show ``x<i>`` (bare ``x``
    for unary trees); branches appear in N, Z, P order, two characters
    of indent per level."""
    if depth > 32:
        raise DomainError("render depth capped at 32")
    lines = []

    def go(tree, level):
        if level >= depth:
            return
        node = tree.root
        pad = "  " * level
        if isinstance(node, WriteNode):
            lines.append(pad + node.digit.name)
            go(node.next, level + 1)
        else:
            label = _read_label(node, t.arity) or "x"
            lines.append(pad + label)
            for b in node.branches:
                go(b, level + 1)

    go(t, 0)
    return "\n".join(lines) + ("\n" if lines else "")


def render_dot(t, depth):
    """DOT rendering of the first `depth` levels: write nodes are circles
    labelled N/Z/P, read nodes circles labelled ``x<i>`` (unlabelled for
    unary trees), edges in N, Z, P order."""
    if depth > 32:
        raise DomainError("render depth capped at 32")
    lines = ["digraph ctree {", "  node [shape=circle];"]
    counter = [0]

    def fresh():
        counter[0] += 1
        return f"n{counter[0]}"

    def go(tree, level):
        name = fresh()
        node = tree.root
        if isinstance(node, WriteNode):
            lines.append(f'  {name} [label="{node.digit.name}"];')
            if level + 1 < depth:
                child = go(node.next, level + 1)
                lines.append(f"  {name} -> {child};")
        else:
            label = _read_label(node, t.arity)
            lines.append(f'  {name} [label="{label}"];')
            if level + 1 < depth:
                for b in node.branches:
                    child = go(b, level + 1)
                    lines.append(f"  {name} -> {child};")
        return name

    if depth > 0:
        go(t, 0)
    lines.append("}")
    return "\n".join(lines) + "\n"
