"""Small permutation groups: closure, element tables and generation tests

Elements only need `*`, inverse(), identity_like() and hashing, so the
closure runs on Perm objects and on ree.GroupElement matrices alike.
Products compose right to left, (g*h)(i) = g(h(i)), the same left action
the matrices have on points.

A GroupCtx indexes a closed group.  For permutation groups it builds a
multiplication table with numpy and answers subgroup questions on boolean
membership masks; subgroups met during a census are numbered once and
their joins with cyclic subgroups memoised.
"""

__copyright__ = """
Copyright (C) 2024-2026 The reekit developers

This program is free software; you can redistribute it and/or modify
it under the terms of the GNU General Public License version 2 as
published by the Free Software Foundation.

This program is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with this program; if not, write to the Free Software
Foundation, Inc., 59 Temple Place, Suite 330, Boston, MA 02111-1307 USA
"""

import itertools
import logging
import re

import numpy as np
import galois

from reekit import config
from reekit.util import ReekitException, ClosureCapExceeded, NotCyclic

log = logging.getLogger('perm')


class Perm(object):
    """A permutation of {0..d-1}, d <= 256, stored as its image bytes."""

    __slots__ = ('images',)

    def __init__(self, images):
        if not isinstance(images, bytes):
            images = bytes(bytearray(int(x) for x in images))
        if sorted(images) != list(range(len(images))):
            raise ReekitException('not a permutation: %s' % list(images))
        self.images = images

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i]

    def __mul__(self, other):
        if other.degree != self.degree:
            raise ReekitException('permutations of degree %d and %d' % (self.degree, other.degree))
        table = self.images + bytes(range(self.degree, 256))
        return Perm(other.images.translate(table))

    def inverse(self):
        inv = bytearray(self.degree)
        for i, x in enumerate(self.images):
            inv[x] = i
        return Perm(bytes(inv))

    def identity_like(self):
        return Perm(bytes(range(self.degree)))

    def is_identity(self):
        return self.images == bytes(range(self.degree))

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.images)

    def cycles(self):
        seen, out = set(), []
        for i in range(self.degree):
            if i in seen:
                continue
            c, j = [], i
            while j not in seen:
                seen.add(j)
                c.append(j)
                j = self.images[j]
            out.append(tuple(c))
        return out

    def order(self):
        return int(np.lcm.reduce([len(c) for c in self.cycles()] or [1]))

    def __repr__(self):
        cs = [c for c in self.cycles() if len(c) > 1]
        if not cs:
            return '()'
        return ''.join('(' + ' '.join(str(x) for x in c) + ')' for c in cs)


def closure(gens, cap=None):
    """Breadth first closure of gens, words by length, ties by generator.

    An empty generator list gives the trivial group on no points.
    """
    cap = cap or config.closure_cap
    gens = list(gens)
    log.debug('entering closure, %d generators, cap=%d', len(gens), cap)
    e = gens[0].identity_like() if gens else Perm(b'')
    elements, index = [e], {e: 0}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = g * x
                if y not in index:
                    index[y] = len(elements)
                    elements.append(y)
                    nxt.append(y)
                    if len(elements) > cap:
                        raise ClosureCapExceeded('group has more than %d elements' % cap)
        frontier = nxt
    log.debug('closure has %d elements', len(elements))
    return GroupCtx(elements, index)


class GroupCtx(object):
    """An enumerated group with its element index and derived tables."""

    def __init__(self, elements, index):
        self.elements = elements
        self.index = index
        self.order = len(elements)
        self.identity = 0
        first = elements[0]
        self.degree = getattr(first, 'degree', None)
        self._mul = None
        self._inv = None
        self._orders = None
        self._cyc = None
        self._full = None
        self._subs = {}             # membership bytes -> subgroup id
        self._sub_gens = []
        self._sub_masks = []
        self._join = np.full((0, 0), -1, dtype=np.int64)

    def idx(self, x):
        if isinstance(x, (int, np.integer)):
            return int(x)
        try:
            return self.index[x]
        except KeyError:
            raise ReekitException('%r is not an element of this group' % (x,))

    # tables

    @property
    def mul(self):
        """mul[g, h] = index of g*h."""
        if self._mul is None:
            log.debug('building %dx%d multiplication table', self.order, self.order)
            N = self.order
            if self.degree is not None and self.degree > 0:
                E = np.array([list(x.images) for x in self.elements], dtype=np.int64)
                base, codes = self._base(E)
                sorter = np.argsort(codes)
                scodes = codes[sorter]
                radix = self.degree ** np.arange(len(base), dtype=np.int64)
                M = np.empty((N, N), dtype=np.int32)
                for g in range(N):
                    c = (E[g][E[:, base]] * radix).sum(axis=1)
                    M[g] = sorter[np.searchsorted(scodes, c)]
            else:
                M = np.array([[self.index[x * y] for y in self.elements]
                              for x in self.elements], dtype=np.int32).reshape((N, N))
            self._mul = M
        return self._mul

    def _base(self, E):
        """Points whose images tell all elements apart, and the element codes."""
        d = self.degree
        base = []
        codes = np.zeros(self.order, dtype=np.int64)
        for p in range(d):
            if len(np.unique(codes)) == self.order:
                break
            base.append(p)
            codes = codes + E[:, p] * d ** (len(base) - 1)
        return base, codes

    @property
    def inv(self):
        if self._inv is None:
            self._inv = np.argmax(self.mul == self.identity, axis=1)
        return self._inv

    @property
    def orders(self):
        if self._orders is None:
            N = self.order
            ar = np.arange(N)
            out = np.zeros(N, dtype=np.int64)
            cur = ar.copy()
            k = 1
            while (out == 0).any():
                out[(cur == self.identity) & (out == 0)] = k
                cur = self.mul[cur, ar]
                k += 1
            self._orders = out
        return self._orders

    def power(self, x, m):
        r, x = self.identity, self.idx(x)
        for i in range(m % self.orders[x]):
            r = self.mul[r, x]
        return int(r)

    # subgroups

    def span_mask(self, gens):
        mask = np.zeros(self.order, dtype=bool)
        mask[self.identity] = True
        gens = np.array([self.idx(g) for g in gens], dtype=np.int64)
        frontier = np.array([self.identity])
        while frontier.size and gens.size:
            prod = self.mul[np.ix_(gens, frontier)].ravel()
            prod = np.unique(prod[~mask[prod]])
            mask[prod] = True
            frontier = prod
        return mask

    def subgroup(self, gens):
        """Number the subgroup generated by gens, reusing known numbers."""
        gens = [self.idx(g) for g in gens]
        mask = self.span_mask(gens)
        key = np.packbits(mask).tobytes()
        sid = self._subs.get(key)
        if sid is None:
            sid = len(self._sub_gens)
            self._subs[key] = sid
            self._sub_gens.append(gens)
            self._sub_masks.append(mask)
        return sid

    def subgroup_order(self, sid):
        return int(self._sub_masks[sid].sum())

    @property
    def cyc(self):
        """Subgroup number of <g> for every element g."""
        if self._cyc is None:
            self._cyc = np.array([self.subgroup([g]) for g in range(self.order)], dtype=np.int64)
        return self._cyc

    @property
    def full(self):
        """Subgroup number of the whole group."""
        if self._full is None:
            self._full = self.subgroup(range(self.order))
        return self._full

    def _grow(self):
        n = len(self._sub_gens)
        if self._join.shape[0] < n:
            J = np.full((2 * n, 2 * n), -1, dtype=np.int64)
            k = self._join.shape[0]
            J[:k, :k] = self._join
            self._join = J

    def join(self, sids, cycs):
        """Vectorised subgroup number of <S_sid, C_cyc> over index arrays."""
        self._grow()
        out = self._join[sids, cycs]
        miss = out < 0
        if miss.any():
            for s, c in sorted(set(zip(sids[miss].tolist(), cycs[miss].tolist()))):
                if self._sub_masks[s].all():
                    sid = s
                else:
                    sid = self.subgroup(dict.fromkeys(self._sub_gens[s] + self._sub_gens[c]))
                self._grow()
                self._join[s, c] = sid
            out = self._join[sids, cycs]
        return out

    def tuple_spans(self, T):
        """Subgroup numbers of the rows of an element index array T (k, n)."""
        cyc = self.cyc
        s = cyc[T[:, 0]]
        for j in range(1, T.shape[1]):
            s = self.join(s, cyc[T[:, j]])
        return s


def generates(tup, ctx):
    return bool(ctx.span_mask(tup).all())

def is_redundant(tup, ctx):
    """Some proper subtuple generates; subtuples one shorter suffice."""
    tup = list(tup)
    return any(generates(tup[:i] + tup[i+1:], ctx) for i in range(len(tup)))

def cyclic_reduce(xs, ctx):
    """Exponents m_1..m_{k-1} with <x_1^m_1 ... x_{k-1}^m_{k-1} x_k> = <x_1..x_k>."""
    xs = [ctx.idx(x) for x in xs]
    log.debug('entering cyclic_reduce, %s', xs)
    if len(xs) <= 1:
        return []
    mask = ctx.span_mask(xs)
    n = int(mask.sum())
    if not (ctx.orders[mask] == n).any():
        raise NotCyclic('elements %s generate a non-cyclic group of order %d' % (xs, n))
    ranges = [range(1, int(ctx.orders[x]) + 1) for x in xs[:-1]]
    for ms in itertools.product(*ranges):
        y = xs[-1]
        for x, m in reversed(list(zip(xs[:-1], ms))):
            y = ctx.mul[ctx.power(x, m), y]
        if ctx.orders[y] == n:
            return list(ms)
    raise NotCyclic('no exponents found for %s' % xs)

def cyclic_group(n):
    return closure([Perm([(i + 1) % n for i in range(n)])])

def orbit(point, gens):
    """Orbit of a point under permutations or permutation arrays."""
    gens = [np.asarray(bytearray(g.images) if isinstance(g, Perm) else g) for g in gens]
    seen = {point}
    frontier = [point]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = int(g[x])
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


############################################################################
# named groups
############################################################################

def _a5():
    return [Perm([1, 2, 3, 4, 0]), Perm([1, 2, 0, 3, 4])]

def _psl27():
    # x -> x+1 and x -> -1/x on GF(7) u {inf = 7}
    t = [(i + 1) % 7 for i in range(7)] + [7]
    s = [7] + [(-pow(i, 5, 7)) % 7 for i in range(1, 7)] + [0]
    return [Perm(t), Perm(s)]

def _psl28():
    # x -> x+1, x -> 1/x and x -> wx on GF(8) u {inf = 8}
    F = galois.GF(2**3)
    w = F.primitive_element
    x = F(np.arange(1, 8))
    t = [int(v) for v in F(np.arange(8)) + F(1)] + [8]
    s = [8] + [int(v) for v in F(1) / x] + [0]
    m = [0] + [int(v) for v in w * x] + [8]
    return [Perm(t), Perm(s), Perm(m)]

def _ree3():
    from reekit import ree, unital
    from reekit.field import make_field
    F = make_field(0)
    U = unital.Unital(F)
    return [Perm(U.image(g).tolist()) for g in ree.generators(F)]

NAMED_GROUPS = {
    'a5': _a5,
    'psl27': _psl27,
    'psl28': _psl28,
    'ree3': _ree3,
}

def named_group(name):
    try:
        return NAMED_GROUPS[name]()
    except KeyError:
        raise ReekitException('unknown group "%s", known: %s' % (name, ', '.join(sorted(NAMED_GROUPS))))

def load_generators(path):
    """One permutation per line as an image list; '#' starts a comment."""
    gens = []
    with open(path) as f:
        for line in f:
            line = line.split('#')[0].strip()
            if not line:
                continue
            try:
                gens.append(Perm([int(x) for x in re.split(r'[\s,]+', line)]))
            except ValueError:
                raise ReekitException('%s: bad image list "%s"' % (path, line))
    if len(set(g.degree for g in gens)) > 1:
        raise ReekitException('%s: generators of different degrees' % path)
    return gens


############################################################################
# generation of the Ree groups
############################################################################

TRANSITIVITY_NOTE = ('generation at q >= 27 is decided by transitivity on the '
                     'unital points: every maximal subgroup is intransitive there')

def generates_ree(field, elements, unital=None):
    """Whether Ree matrices generate 2G2(q).

    q = 3 uses exact closure; larger q uses the transitivity criterion,
    an assumption derived from the maximal subgroup list.
    """
    from reekit.field import group_order
    if field.q == 3:
        return closure(elements).order == group_order(field)
    if unital is None:
        from reekit.unital import Unital
        unital = Unital(field)
    perms = [unital.image(g) for g in elements]
    return len(orbit(0, perms)) == unital.n
