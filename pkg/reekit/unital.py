"""The Ree unital: points, blocks and the action of 2G2(q)

The q^3+1 points are inf = <e1> and p(a,a',a'') = (a,a',a'')_inf O, the
column (f1, -a', -a, -a'', 1, f2, f3).  Points are indexed 0 for inf and
1 + a q^2 + a' q + a'' for p(a,a',a'') with field elements read as their
integers, so O = p(0,0,0) has index 1.

The Unital object keeps the normalised projective vectors of all points
as the columns of a 7xN field array.  Looking vectors up goes through an
integer key per column and a sorted key table, so whole point sets (and
whole images of Omega) are found with one searchsorted call.
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

import json
import logging

import numpy as np

from reekit import ree
from reekit.ree import INF, O, f1, f2, f3
from reekit.util import UnitalError, ProgressBar

log = logging.getLogger('unital')

PARAM = 'PARAM'

# largest q enumerated without force
MAX_Q = 27


class UnitalPoint(object):
    """A point of the unital: INF, or PARAM with parameters (a,a',a'')."""

    __slots__ = ('kind', 'params', 'proj', '_key')

    def __init__(self, kind, params, proj):
        self.kind = kind
        self.params = params
        self.proj = proj
        self._key = tuple(int(x) for x in proj)

    def __eq__(self, other):
        return isinstance(other, UnitalPoint) and self._key == other._key

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        if self.kind == INF:
            return 'UnitalPoint(INF)'
        return 'UnitalPoint(p(%s))' % ','.join(str(int(x)) for x in self.params)


def normalize(V):
    """Scale the columns of a 7xK array so the first nonzero entry is 1."""
    nz = V.view(np.ndarray) != 0
    if not nz.any(axis=0).all():
        raise UnitalError('the zero vector is not a projective point')
    pivot = np.argmax(nz, axis=0)
    return V / V[pivot, np.arange(V.shape[1])]

def _vectors_p(field, a, a1, a2):
    F = field.GF
    rows = [f1(field, a, a1, a2), -a1, -a, -a2,
            F.Ones(np.shape(a)), f2(field, a, a1, a2), f3(field, a, a1, a2)]
    V = F.Zeros((7,) + np.shape(a))
    for i, r in enumerate(rows):
        V[i] = r
    return V

def point_p(field, a, a1, a2):
    """p(a,a',a''), the image of O under (a,a',a'')_inf."""
    a, a1, a2 = field.element(a), field.element(a1), field.element(a2)
    v = normalize(_vectors_p(field, a, a1, a2).reshape((7, 1)))[:, 0]
    return UnitalPoint(PARAM, (a, a1, a2), v)

def infinity(field):
    v = field.GF.Zeros(7)
    v[0] = 1
    return UnitalPoint(INF, None, v)

def point_q(field, a, a1, a2):
    """q(a,a',a''), the image of inf under (a,a',a'')_O."""
    a, a1, a2 = field.element(a), field.element(a1), field.element(a2)
    v = field.GF([0]*7)
    for i, x in enumerate((field.one, f2(field, a, a1, a2), f3(field, a, a1, a2),
                           a2, f1(field, a, a1, a2), -a1, -a)):
        v[i] = x
    return point_from_projective(field, v)

def point_from_projective(field, vec):
    """The unital point spanned by vec, or None if there is none."""
    v = field.GF(vec) if not hasattr(vec, 'characteristic') else vec
    if not np.any(v.view(np.ndarray)):
        raise UnitalError('the zero vector is not a projective point')
    if v[4] != 0:
        v = v / v[4]
        a, a1, a2 = -v[2], -v[1], -v[3]
        if v[0] != f1(field, a, a1, a2) or v[5] != f2(field, a, a1, a2) \
           or v[6] != f3(field, a, a1, a2):
            return None
        return point_p(field, a, a1, a2)
    if v[0] != 0 and not np.any(v[1:].view(np.ndarray)):
        return infinity(field)
    return None

def apply(g, pt):
    """g applied to a point; GroupError style failures become UnitalError."""
    image = point_from_projective(g.field, g.m @ pt.proj)
    if image is None:
        raise UnitalError('image of %r is not a unital point, matrix is not in the group' % pt)
    return image

def h_action(field, t, pt):
    """h(t) p(b,b',b'') = p(tb, t^(th+1) b', t^(th+2) b''); fixes inf and O."""
    t = field.element(t)
    if t == 0:
        raise UnitalError('torus parameter t must be nonzero')
    if pt.kind == INF:
        return pt
    b, b1, b2 = pt.params
    w = field.theta(t) * t
    return point_p(field, t*b, w*b1, w*t*b2)


class Unital(object):
    """The point table of U_R(q) with vectorised lookup and group action."""

    def __init__(self, field, force=False):
        log.debug('entering Unital, q=%d force=%s', field.q, force)
        q = field.q
        if q ** 7 >= 2 ** 63:
            raise UnitalError('q=%d is too large to index the unital' % q)
        if q > MAX_Q and not force:
            raise UnitalError('q=%d gives %d points, use force to enumerate it' % (q, q**3 + 1))
        self.field = field
        self.q = q
        self.n = q**3 + 1
        F = field.GF
        j = np.arange(q**3)
        a, a1, a2 = F(j // q**2), F((j // q) % q), F(j % q)
        P = F.Zeros((7, self.n))
        P[0, 0] = 1
        P[:, 1:] = _vectors_p(field, a, a1, a2)
        self.proj = normalize(P)
        self.pivot = np.argmax(self.proj.view(np.ndarray) != 0, axis=0)
        self._weights = (q ** np.arange(7, dtype=np.int64)).reshape((7, 1))
        keys = self._keys(self.proj)
        self._order = np.argsort(keys)
        self._sorted = keys[self._order]
        if np.any(np.diff(self._sorted) == 0):
            raise UnitalError('point vectors are not distinct')
        self._blocks_inf = None

    def _keys(self, V):
        return (V.view(np.ndarray).astype(np.int64) * self._weights).sum(axis=0)

    def lookup(self, V, normalized=False):
        """Indices of the columns of V, -1 where a column is not a point."""
        shape = V.shape[1:]
        V = V.reshape((7, -1))
        if not normalized:
            V = normalize(V)
        keys = self._keys(V)
        pos = np.searchsorted(self._sorted, keys)
        pos[pos == self.n] = 0
        hit = self._sorted[pos] == keys
        return np.where(hit, self._order[pos], -1).reshape(shape)

    def index_of(self, pt):
        i = int(self.lookup(pt.proj.reshape((7, 1)))[0])
        if i < 0:
            raise UnitalError('%r is not a point of U_R(%d)' % (pt, self.q))
        return i

    def param_index(self, a, a1, a2):
        f = self.field
        return 1 + f.to_int(a)*self.q**2 + f.to_int(a1)*self.q + f.to_int(a2)

    def params_of(self, i):
        if i == 0:
            return None
        j, q, F = i - 1, self.q, self.field.GF
        return F(j // q**2), F((j // q) % q), F(j % q)

    def point(self, i):
        if not 0 <= i < self.n:
            raise UnitalError('point index %d out of range 0..%d' % (i, self.n - 1))
        if i == 0:
            return UnitalPoint(INF, None, self.proj[:, 0])
        return UnitalPoint(PARAM, self.params_of(i), self.proj[:, i])

    def points(self):
        return [self.point(i) for i in range(self.n)]

    # group action

    def image(self, g):
        """The permutation of the point indices induced by g."""
        perm = self.lookup(g.m @ self.proj)
        if np.any(perm < 0):
            raise UnitalError('matrix does not preserve the unital, not a group element')
        return perm

    def fixed_points(self, g):
        W = g.m @ self.proj
        lam = W[self.pivot, np.arange(self.n)]
        return np.flatnonzero((W == self.proj * lam).view(np.ndarray).all(axis=0))

    def apply_block(self, g, block):
        img = self.lookup(g.m @ self.proj[:, np.asarray(block)])
        if np.any(img < 0):
            raise UnitalError('matrix does not preserve the unital, not a group element')
        return np.sort(img)

    # blocks

    def block_inf_O(self):
        return self.blocks_at_inf()[0]

    def block_a(self, a, a2):
        """B_{a,a''} = {inf} u {p(a, b', a'' - a b')}."""
        f = self.field
        return self.blocks_at_inf()[f.to_int(a)*self.q + f.to_int(a2)]

    def blocks_at_inf(self):
        """The q^2 blocks through inf; row a q + a'' is B_{a,a''}."""
        if self._blocks_inf is None:
            q, F = self.q, self.field.GF
            ia, ia2, ib = np.meshgrid(np.arange(q), np.arange(q), np.arange(q), indexing='ij')
            c = F(ia2) - F(ia) * F(ib)
            idx = 1 + ia*q*q + ib*q + c.view(np.ndarray).astype(np.int64)
            rows = np.concatenate([np.zeros((q*q, 1), dtype=np.int64),
                                   np.sort(idx.reshape((q*q, q)), axis=1)], axis=1)
            rows.flags.writeable = False
            self._blocks_inf = rows
        return self._blocks_inf

    def sylow_params(self, idx, side):
        """Parameters of the Sylow element of the given side taking O or inf to idx.

        INF: (a,a',a'')_inf O = p(a,a',a''), defined for every point but inf.
        O: (b,b',b'')_O inf = q(b,b',b''), defined for every point but O.
        """
        V = self.proj[:, np.asarray(idx)].reshape((7, -1))
        if side == INF:
            if np.any(V[4].view(np.ndarray) == 0):
                raise UnitalError('inf is not of the form p(a,a\',a\'\')')
            V = V / V[4]
            return -V[2], -V[1], -V[3]
        if np.any(V[0].view(np.ndarray) == 0):
            raise UnitalError('O is not of the form q(b,b\',b\'\')')
        V = V / V[0]
        return -V[6], -V[5], V[3]

    def join_batch(self, alpha, beta):
        """Blocks through the index pairs (alpha[k], beta[k]), as sorted rows.

        alpha is moved to inf by (b)_O^-1 with alpha = q(b), then the
        image of beta, a point p(c), gives the block (c)_inf B(inf,O).
        """
        alpha = np.array(alpha, dtype=np.int64).reshape(-1)
        beta = np.array(beta, dtype=np.int64).reshape(-1)
        if np.any(alpha == beta):
            raise UnitalError('join needs two distinct points')
        swap = alpha == 1
        alpha[swap], beta[swap] = beta[swap], 1
        field = self.field
        B0 = self.proj[:, self.block_inf_O()]
        out = np.empty((alpha.size, self.q + 1), dtype=np.int64)
        step = 1 << 14
        for lo in range(0, alpha.size, step):
            al, be = alpha[lo:lo+step], beta[lo:lo+step]
            b = self.sylow_params(al, O)
            binv = ree.inverse_law(field, ree.SylowParams(b[0], b[1], b[2], O))
            G = ree.sylow_matrices(field, b[0], b[1], b[2], O)
            Ginv = ree.sylow_matrices(field, binv.a, binv.a1, binv.a2, O)
            gamma = ree.matmul(Ginv, self.proj[:, be].T[..., None])[..., 0].T
            gamma = gamma / gamma[4]
            U = ree.sylow_matrices(field, -gamma[2], -gamma[1], -gamma[3], INF)
            V = ree.matmul(ree.matmul(G, U), B0)
            idx = self.lookup(V.transpose((1, 0, 2)))
            if np.any(idx < 0):
                raise UnitalError('join produced a non-point, broken point table')
            out[lo:lo+step] = np.sort(idx, axis=1)
        return out

    def join(self, alpha, beta):
        """The unique block through two distinct points (indices or points)."""
        if isinstance(alpha, UnitalPoint):
            alpha = self.index_of(alpha)
        if isinstance(beta, UnitalPoint):
            beta = self.index_of(beta)
        log.debug('entering join, alpha=%d beta=%d', alpha, beta)
        return self.join_batch([alpha], [beta])[0]

    def mover(self, alpha):
        """A constructive group element taking inf to the point alpha."""
        field = self.field
        if alpha == 0:
            return ree.GroupElement.identity(field)
        if alpha == 1:
            # (c0)_inf^-1 takes q(0,0,1) = p(c0) to O
            x = ree.u_O(field, 0, 0, 1)
            c = self.sylow_params(self.lookup(x.m[:, [0]]), INF)
            c0 = ree.SylowParams(c[0][0], c[1][0], c[2][0], INF)
            return ree.sylow(field, ree.inverse_law(field, c0)) * x
        b = self.sylow_params(alpha, O)
        return ree.u_O(field, b[0][0], b[1][0], b[2][0])

    def blocks_through(self, alpha):
        """The q^2 blocks through alpha, rows sorted, in lexicographic order."""
        if isinstance(alpha, UnitalPoint):
            alpha = self.index_of(alpha)
        perm = self.image(self.mover(alpha))
        rows = np.sort(perm[self.blocks_at_inf()], axis=1)
        return rows[np.lexsort(rows.T[::-1])]

    def stabilized_blocks(self, g, blocks):
        perm = self.image(g)
        blocks = np.asarray(blocks)
        moved = np.sort(perm[blocks], axis=1)
        return blocks[(moved == blocks).all(axis=1)]

    def stabilized_blocks_through(self, g, alpha):
        return self.stabilized_blocks(g, self.blocks_through(alpha))

    def all_blocks(self, force=False):
        """Every block, each listed once from its smallest point."""
        if self.q > 3 and not force:
            raise UnitalError('listing all %d blocks of U_R(%d) needs force' %
                              (self.q**2 * (self.q**2 - self.q + 1), self.q))
        found = []
        pb = ProgressBar(self.n, '=') if self.q > 3 else None
        for i in range(self.n):
            rows = self.blocks_through(i)
            found.append(rows[rows[:, 0] == i])
            if pb:
                pb(i + 1)
        blocks = np.concatenate(found)
        return blocks[np.lexsort(blocks.T[::-1])]

    # export

    def export_json(self, fp, blocks=True, force=False):
        log.debug('entering export_json, q=%d blocks=%s', self.q, blocks)
        f = self.field
        doc = {'q': self.q,
               'points': [[f.to_string(x) for x in self.proj[:, i]] for i in range(self.n)],
               'blocks': self.all_blocks(force).tolist() if blocks else []}
        json.dump(doc, fp, sort_keys=True, separators=(',', ':'))
        fp.write('\n')

    def load_json(self, fp):
        """Read an export and check it against this unital."""
        doc = json.load(fp)
        if doc.get('q') != self.q:
            raise UnitalError('export is for q=%s, not q=%d' % (doc.get('q'), self.q))
        f = self.field
        P = f.GF([[f.to_int(f.from_string(s)) for s in pt] for pt in doc['points']]).T
        if P.shape != self.proj.shape or not np.array_equal(P.view(np.ndarray),
                                                            self.proj.view(np.ndarray)):
            raise UnitalError('exported points differ from the enumerated table')
        blocks = np.array(doc['blocks'], dtype=np.int64).reshape((-1, self.q + 1))
        if blocks.size and not np.array_equal(blocks, self.all_blocks(force=True)):
            raise UnitalError('exported blocks differ from the computed blocks')
        return doc


def enumerate_points(field, force=False):
    return Unital(field, force).points()
