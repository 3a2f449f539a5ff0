"""Nielsen moves, the extended product replacement graph and its census

A tuple is a sequence of group elements.  Moves act either on element
indices of a GroupCtx (pass ctx) or on any objects with `*` and inverse(),
which is how Ree matrices are walked.  Positions are 0-based here and
1-based in move text ("R+1,2").

The census works on mixed-radix codes: the tuple (g_0..g_{n-1}) of element
indices is the integer sum g_k |G|^(n-1-k).  Generation and visited sets
are flat bit arrays over all |G|^n codes.
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

import logging
from collections import namedtuple, Counter

import numpy as np

from reekit import config
from reekit.util import MoveError, CensusTooLarge, SearchExhausted, ProgressBar

log = logging.getLogger('nielsen')

MOVE_TAGS = ('R', 'L', 'P', 'I')

NielsenMove = namedtuple('NielsenMove', 'tag i j sign')

def move_text(m):
    if m.tag == 'I':
        return 'I%d' % (m.i + 1)
    if m.tag == 'P':
        return 'P%d,%d' % (m.i + 1, m.j + 1)
    return '%s%s%d,%d' % (m.tag, '+' if m.sign > 0 else '-', m.i + 1, m.j + 1)

def check_move(m, n):
    if m.tag not in MOVE_TAGS:
        raise MoveError('unknown move tag %r' % (m.tag,))
    if not 0 <= m.i < n:
        raise MoveError('position %d out of range for %d-tuples' % (m.i + 1, n))
    if m.tag == 'I':
        return
    if not 0 <= m.j < n or m.i == m.j:
        raise MoveError('move %s needs two distinct positions in 1..%d' % (move_text(m), n))
    if m.tag in 'RL' and m.sign not in (1, -1):
        raise MoveError('move sign must be +1 or -1, got %r' % (m.sign,))

def apply_move(t, m, ctx=None):
    t = list(t)
    check_move(m, len(t))
    if ctx is None:
        mul = lambda x, y: x * y
        inv = lambda x: x.inverse()
    else:
        mul = lambda x, y: int(ctx.mul[x, y])
        inv = lambda x: int(ctx.inv[x])
    if m.tag == 'I':
        t[m.i] = inv(t[m.i])
    elif m.tag == 'P':
        t[m.i], t[m.j] = t[m.j], t[m.i]
    else:
        y = t[m.j] if m.sign > 0 else inv(t[m.j])
        t[m.i] = mul(t[m.i], y) if m.tag == 'R' else mul(y, t[m.i])
    return tuple(t)

def inverse_move(m):
    if m.tag in 'RL':
        return m._replace(sign=-m.sign)
    return m

def all_moves(n):
    moves = []
    for tag in 'RL':
        for i in range(n):
            for j in range(n):
                if i != j:
                    moves.append(NielsenMove(tag, i, j, 1))
                    moves.append(NielsenMove(tag, i, j, -1))
    moves.extend(NielsenMove('P', i, j, 0) for i in range(n) for j in range(i + 1, n))
    moves.extend(NielsenMove('I', i, i, 0) for i in range(n))
    return moves

def neighbors(t, ctx=None):
    """Images of t under every move, first occurrence order, deduplicated."""
    seen = {}
    for m in all_moves(len(t)):
        seen.setdefault(apply_move(t, m, ctx), None)
    return list(seen)


############################################################################
# census
############################################################################

def _move_codes(ctx, T, radix):
    """Codes of all move images of the rows of T, as one flat array."""
    mul, inv = ctx.mul, ctx.inv
    out = []
    for m in all_moves(T.shape[1]):
        U = T.copy()
        if m.tag == 'I':
            U[:, m.i] = inv[T[:, m.i]]
        elif m.tag == 'P':
            U[:, m.i], U[:, m.j] = T[:, m.j], T[:, m.i]
        else:
            y = T[:, m.j] if m.sign > 0 else inv[T[:, m.j]]
            U[:, m.i] = mul[T[:, m.i], y] if m.tag == 'R' else mul[y, T[:, m.i]]
        out.append(U @ radix)
    return np.concatenate(out)

def _decode(codes, N, n):
    return np.stack([(codes // N ** (n - 1 - k)) % N for k in range(n)], axis=1)

def _test(bits, codes):
    return ((bits[codes >> 3] >> (codes & 7).astype(np.uint8)) & 1).astype(bool)

def _mark(bits, codes):
    np.bitwise_or.at(bits, codes >> 3, (1 << (codes & 7)).astype(np.uint8))

def _any_redundant(ctx, T):
    full = ctx.full
    n = T.shape[1]
    for k in range(n):
        if (ctx.tuple_spans(np.delete(T, k, axis=1)) == full).any():
            return True
    return False

def bfs_census(ctx, n, name=''):
    """Connected components of the extended PRA graph on generating n-tuples."""
    N = ctx.order
    log.debug('entering bfs_census, group=%s order=%d n=%d', name, N, n)
    if n < 2:
        raise MoveError('census needs tuples of length at least 2')
    total = N ** n
    if total > 2 ** config.census_bits:
        raise CensusTooLarge('%d-tuples of a group of order %d give %d codes, above the bound 2^%d'
                             % (n, N, total, config.census_bits))
    radix = N ** np.arange(n - 1, -1, -1, dtype=np.int64)
    gen = np.zeros((total + 7) // 8, dtype=np.uint8)
    visited = np.zeros_like(gen)
    full = ctx.full
    chunk = 1 << 18
    ngen = 0
    for lo in range(0, total, chunk):
        codes = np.arange(lo, min(lo + chunk, total), dtype=np.int64)
        ok = codes[ctx.tuple_spans(_decode(codes, N, n)) == full]
        _mark(gen, ok)
        ngen += ok.size
    log.debug('%d generating tuples', ngen)

    pb = ProgressBar(ngen, '=')
    sizes, redundant = [], []
    done = 0
    for lo in range(0, total, chunk):
        codes = np.arange(lo, min(lo + chunk, total), dtype=np.int64)
        cand = codes[_test(gen, codes) & ~_test(visited, codes)]
        while cand.size:
            start = cand[:1]
            _mark(visited, start)
            frontier, size, red = start, 0, False
            while frontier.size:
                size += frontier.size
                nxt = []
                for s in range(0, frontier.size, 1 << 16):
                    T = _decode(frontier[s:s + (1 << 16)], N, n)
                    if not red:
                        red = _any_redundant(ctx, T)
                    nb = np.unique(_move_codes(ctx, T, radix))
                    nb = nb[~_test(visited, nb)]
                    _mark(visited, nb)
                    nxt.append(nb)
                frontier = np.concatenate(nxt)
            sizes.append(int(size))
            redundant.append(red)
            done += size
            pb(done)
            cand = cand[~_test(visited, cand)]
    pb(ngen)
    order = sorted(range(len(sizes)), key=lambda k: -sizes[k])
    return {'group': name,
            'n': n,
            'generating_tuples': ngen,
            'components': [sizes[k] for k in order],
            'every_component_has_redundant': all(redundant)}


############################################################################
# product replacement
############################################################################

def pra_step(t, rng, ctx=None):
    """One uniform R/L move: i, then j != i, sign and side."""
    n = len(t)
    i = int(rng.integers(n))
    j = int(rng.integers(n - 1))
    if j >= i:
        j += 1
    sign = 1 if rng.integers(2) else -1
    tag = 'R' if rng.integers(2) == 0 else 'L'
    return apply_move(t, NielsenMove(tag, i, j, sign), ctx)

def pra_walk(t, steps, seed=None, rng=None, ctx=None):
    """Apply `steps` random R/L moves, return the tuple and a random entry."""
    if len(t) < 2:
        raise MoveError('product replacement needs tuples of length at least 2')
    if rng is None:
        rng = np.random.default_rng(seed)
    log.debug('entering pra_walk, n=%d steps=%d', len(t), steps)
    t = tuple(t)
    for s in range(steps):
        t = pra_step(t, rng, ctx)
    return t, t[int(rng.integers(len(t)))]

def order_histogram(elements):
    return dict(sorted(Counter(x.order() for x in elements).items()))

def random_generating_tuple(field, n, rng, unital=None, tries=100):
    """n random Ree elements that generate 2G2(q)."""
    from reekit import ree, perm
    for k in range(tries):
        t = [ree.random_element(field, rng) for i in range(n)]
        if perm.generates_ree(field, t, unital):
            return tuple(t)
    raise SearchExhausted('no generating %d-tuple in %d tries' % (n, tries))
