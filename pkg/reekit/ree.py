"""The 7x7 matrix model of the small Ree groups 2G2(q)

Group elements are determinant one 7x7 matrices over GF(q), q = 3^(2e+1).
Since 7 does not divide q-1 every element has exactly one such matrix,
so matrix equality is group equality and the packed entries are a hash
key.  Matrices act on column vectors from the left.

Two Sylow 3-subgroups are given by templates in three parameters:
P_inf = {(a,a',a'')_inf} fixes the point inf = <e1> and P_O = {(a,a',a'')_O}
fixes O = <e5>.  Most bulk work goes through the *_matrices helpers, which
take parameter arrays and return stacks of shape (..., 7, 7).
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
from collections import namedtuple

import numpy as np

from reekit.field import order_cap
from reekit.util import GroupError, FieldError

log = logging.getLogger('ree')

INF = 'INF'
O = 'O'

SylowParams = namedtuple('SylowParams', 'a a1 a2 side')

_EYE = np.eye(7, dtype=np.int64)


############################################################################
# polynomial entries of the templates
############################################################################

def f1(field, a, a1, a2):
    at, a1t, a2t = field.theta(a), field.theta(a1), field.theta(a2)
    return (-(at*at*a**4) - a*a2t + at*a*a1t + a2*a2 + a1t*a1
            - a1*at*a**3 - a*a*a1*a1)

def f2(field, a, a1, a2):
    at, a1t = field.theta(a), field.theta(a1)
    return -(at*a**3) + a1t - a*a2 + a*a*a1

def f3(field, a, a1, a2):
    at, a1t, a2t = field.theta(a), field.theta(a1), field.theta(a2)
    return -(at*at*a**3) - a2t + at*a1t + a1*a2 + a*a1*a1

def _entries(field, a, a1, a2, side):
    at, a1t, a2t = field.theta(a), field.theta(a1), field.theta(a2)
    atp1 = at*a                                 # a^(theta+1)
    p = at*a**3 - a1t - a*a2 - a*a*a1
    q = (-(at*at*a**3) + a2t + at*a1t + a1*a2 - a*a1*a1
         - atp1*a*a1 - atp1*a2)
    r = atp1*a + a2 - a*a1
    s = -(at*a2) + a1*a1 - atp1*a1
    F1, F2, F3 = f1(field, a, a1, a2), f2(field, a, a1, a2), f3(field, a, a1, a2)
    if side == INF:
        return [(0, 1, p), (0, 2, q), (0, 3, a2), (0, 4, F1), (0, 5, a1 - atp1), (0, 6, a),
                (1, 2, at), (1, 4, -a1),
                (2, 4, -a),
                (3, 1, -a), (3, 2, a1 - atp1), (3, 4, -a2),
                (5, 1, a*a), (5, 2, r), (5, 3, a), (5, 4, F2),
                (6, 1, -a2 - a*a1), (6, 2, s), (6, 3, -a1), (6, 4, F3), (6, 5, -at)]
    return [(1, 0, F2), (1, 3, -a), (1, 5, a*a), (1, 6, r),
            (2, 0, F3), (2, 1, -at), (2, 3, a1), (2, 5, -a2 - a*a1), (2, 6, s),
            (3, 0, a2), (3, 5, a), (3, 6, atp1 - a1),
            (4, 0, F1), (4, 1, a1 - atp1), (4, 2, a), (4, 3, -a2), (4, 5, p), (4, 6, q),
            (5, 0, -a1), (5, 6, at),
            (6, 0, -a)]

def _coerce(field, x):
    if isinstance(x, np.ndarray) and not hasattr(x, 'characteristic'):
        return field.GF(x)
    return field.element(x)

def sylow_matrices(field, a, a1, a2, side=INF):
    """Template matrices for parameter arrays of a common shape."""
    if side not in (INF, O):
        raise GroupError('unknown Sylow side %r' % (side,))
    a, a1, a2 = _coerce(field, a), _coerce(field, a1), _coerce(field, a2)
    shape = np.broadcast(a, a1, a2).shape
    M = field.GF.Zeros(shape + (7, 7))
    for i in range(7):
        M[..., i, i] = 1
    for i, j, v in _entries(field, a, a1, a2, side):
        M[..., i, j] = v
    return M

def matmul(A, B):
    """Stacked product A[..., i, k] B[..., k, j] over the field.

    B may carry more columns than 7, e.g. a block of point vectors.
    """
    C = A[..., :, 0:1] * B[..., 0:1, :]
    for k in range(1, A.shape[-1]):
        C = C + A[..., :, k:k+1] * B[..., k:k+1, :]
    return C

def traces(X):
    t = X[..., 0, 0]
    for i in range(1, 7):
        t = t + X[..., i, i]
    return t

def is_identity(X):
    return (X.view(np.ndarray) == _EYE).all(axis=(-2, -1))

def orders(field, X, cap=None):
    """Element orders of a stack of matrices, by repeated multiplication."""
    cap = cap or order_cap(field)
    X = X.reshape((-1, 7, 7))
    out = np.zeros(X.shape[0], dtype=np.int64)
    todo = np.arange(X.shape[0])
    P = X
    for k in range(1, cap + 1):
        done = is_identity(P)
        out[todo[done]] = k
        todo, P = todo[~done], P[~done]
        if todo.size == 0:
            return out
        P = matmul(P, X[todo])
    raise GroupError('%d matrices exceed the order cap %d, first at position %d; '
                     'not elements of the group' % (todo.size, cap, todo[0]))


############################################################################
# group elements
############################################################################

class GroupElement(object):
    """An element of 2G2(q) as its unique 7x7 matrix."""

    __slots__ = ('field', 'm', '_key')

    def __init__(self, field, matrix):
        if matrix.shape != (7, 7):
            raise GroupError('group elements are 7x7 matrices, got shape %s' % (matrix.shape,))
        self.field = field
        self.m = matrix
        self._key = None

    @classmethod
    def identity(cls, field):
        return cls(field, field.GF.Identity(7))

    def identity_like(self):
        return GroupElement.identity(self.field)

    @property
    def key(self):
        if self._key is None:
            self._key = self.m.view(np.ndarray).astype(np.int64).tobytes()
        return self._key

    def __eq__(self, other):
        return isinstance(other, GroupElement) and self.key == other.key

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return 'GroupElement(q=%d, %s)' % (self.field.q, self.text())

    def _check(self, other):
        if not isinstance(other, GroupElement) or other.field != self.field:
            raise GroupError('operands are not elements of the same group')

    def __mul__(self, other):
        self._check(other)
        return GroupElement(self.field, self.m @ other.m)

    def inverse(self):
        return GroupElement(self.field, np.linalg.inv(self.m))

    def __pow__(self, n):
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = self.identity_like()
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_identity(self):
        return bool(is_identity(self.m))

    def trace(self):
        return traces(self.m)

    def det(self):
        return np.linalg.det(self.m)

    def order(self, cap=None):
        cap = cap or order_cap(self.field)
        x, k = self, 1
        while not x.is_identity():
            k += 1
            if k > cap:
                raise GroupError('order exceeds %d, matrix is not in the group' % cap)
            x = x * self
        return k

    def text(self):
        """Rows of digit strings, entries separated by spaces, rows by ';'."""
        F = self.field
        return ';'.join(' '.join(F.to_string(x) for x in row) for row in self.m)

    @classmethod
    def from_text(cls, field, text):
        rows = [r.split() for r in text.strip().strip(';').split(';')]
        if len(rows) != 7 or any(len(r) != 7 for r in rows):
            raise GroupError('matrix text needs 7 rows of 7 entries: "%s"' % text)
        try:
            M = field.GF([[field.to_int(field.from_string(x)) for x in r] for r in rows])
        except FieldError as err:
            raise GroupError('malformed matrix text: %s' % err)
        g = cls(field, M)
        if g.det() != field.one:
            raise GroupError('matrix has determinant %s, not 1' % field.to_string(g.det()))
        return g

def commutator(g, h):
    """g h g^-1 h^-1"""
    return g * h * g.inverse() * h.inverse()

def conjugate(g, h):
    """h g h^-1, the left action of h on g."""
    return h * g * h.inverse()

def params(field, a, a1, a2, side=INF):
    return SylowParams(field.element(a), field.element(a1), field.element(a2), side)

def sylow(field, s):
    return GroupElement(field, sylow_matrices(field, s.a, s.a1, s.a2, s.side))

def u_inf(field, a, a1, a2):
    """(a,a',a'')_inf"""
    return sylow(field, params(field, a, a1, a2, INF))

def u_O(field, a, a1, a2):
    """(a,a',a'')_O"""
    return sylow(field, params(field, a, a1, a2, O))


############################################################################
# closed forms on parameters
############################################################################

def mult_law(field, s, t):
    """Parameters of the product of two elements of the same Sylow template.

    The O template is the conjugate of the inf template by the signed
    permutation of swap_matrix(), so both follow the same law.
    """
    if s.side != t.side:
        raise GroupError('cannot multiply %s and %s parameters' % (s.side, t.side))
    at = field.theta(s.a)
    return SylowParams(s.a + t.a,
                       s.a1 + t.a1 + at*t.a,
                       s.a2 + t.a2 - s.a*t.a1 + s.a1*t.a - at*s.a*t.a,
                       s.side)

def mult_law_inf(field, s, t):
    if s.side != INF or t.side != INF:
        raise GroupError('mult_law_inf needs two INF parameter triples')
    return mult_law(field, s, t)

def inverse_law(field, s):
    return SylowParams(-s.a, -s.a1 + field.theta(s.a)*s.a, -s.a2, s.side)

def inverse_law_inf(field, s):
    if s.side != INF:
        raise GroupError('inverse_law_inf needs INF parameters')
    return inverse_law(field, s)


############################################################################
# special elements
############################################################################

def h_minus1(field):
    """The involution h(-1) of the two point stabiliser of inf and O.

    Its determinant one matrix is -Diag(1,1,-1,-1,1,1,-1); the printed
    diagonal itself has determinant -1 and is not in SL7.
    """
    return torus(field, field.minus_one)

def torus_matrices(field, t):
    """h(t) = Diag(t^(th+2), t^-1, t^-(th+1), 1, t^-(th+2), t, t^(th+1)).

    Conjugation by h(t) sends (a,a',a'')_inf to
    (ta, t^(th+1)a', t^(th+2)a'')_inf; on points this is
    p(b,b',b'') -> p(tb, t^(th+1)b', t^(th+2)b'').
    """
    t = _coerce(field, t)
    if np.any(t.view(np.ndarray) == 0):
        raise GroupError('torus element h(0) does not exist')
    tt = field.theta(t)
    ti = field.one / t
    diag = [tt*t*t, ti, ti/tt, field.one + field.GF.Zeros(t.shape), ti*ti/tt, t, tt*t]
    M = field.GF.Zeros(t.shape + (7, 7))
    for i, d in enumerate(diag):
        M[..., i, i] = d
    return M

def torus(field, t):
    return GroupElement(field, torus_matrices(field, t))

_SWAP = (4, 5, 6, 3, 0, 1, 2)

def swap_matrix(field):
    """The signed permutation W with W (a,a',a'')_inf W^-1 = (a,a',a'')_O.

    W e_j = e_sigma(j) with sigma = (1 5)(2 6)(3 7) and a sign on e_4.
    """
    M = field.GF.Zeros((7, 7))
    for j, i in enumerate(_SWAP):
        M[i, j] = field.minus_one if j == 3 else field.one
    return GroupElement(field, M)

def class_reps(field, order):
    """Conjugacy class representatives of the unipotent classes.

    Order 6 is realised as (0,+-1,0)_inf h(-1).
    """
    one, mone, zero = field.one, field.minus_one, field.zero
    if order == 9:
        return [u_inf(field, one, zero, zero), u_inf(field, one, one, zero),
                u_inf(field, one, mone, zero)]
    if order == 3:
        return [u_inf(field, zero, zero, one), u_inf(field, zero, one, zero),
                u_inf(field, zero, mone, zero)]
    if order == 6:
        h = h_minus1(field)
        return [u_inf(field, zero, one, zero) * h, u_inf(field, zero, mone, zero) * h]
    raise GroupError('class representatives are tabulated for orders 3, 6 and 9, not %r' % (order,))

def order_class_reps(field):
    """Representatives for the rows "order is 9, 6, 3, 2, 1" of the class table."""
    reps = dict((k, class_reps(field, k)) for k in (9, 6, 3))
    reps[2] = [h_minus1(field)]
    reps[1] = [GroupElement.identity(field)]
    return reps

def generators(field):
    """Closure generators: the basis translations of both Sylow templates."""
    zero, one = field.zero, field.one
    gens = []
    for side in (INF, O):
        for b in field.basis():
            gens.append(sylow(field, SylowParams(b, zero, zero, side)))
        gens.append(sylow(field, SylowParams(zero, one, zero, side)))
        gens.append(sylow(field, SylowParams(zero, zero, one, side)))
    return gens

def random_matrices(field, rng, n):
    """n samples of (.)_inf (.)_O (.)_inf (.)_O with uniform parameters."""
    P = field.random(rng, (4, 3, n))
    X = None
    for k, side in enumerate((INF, O, INF, O)):
        M = sylow_matrices(field, P[k, 0], P[k, 1], P[k, 2], side)
        X = M if X is None else matmul(X, M)
    return X

def random_element(field, rng):
    return GroupElement(field, random_matrices(field, rng, 1)[0])


############################################################################
# data
############################################################################

# maximal subgroups up to conjugacy, with geometry on the unital and the
# element orders they contain
MAXIMAL_SUBGROUPS = (
    ('N(P)', 'P : C(q-1)', 'point stabiliser', '2, 3, 6, 9'),
    ('C(r)', '<r> x PSL(2,q)', 'block stabiliser', '2, 3, 6, divisors of q-1, (q+1)/2'),
    ('2G2(q0)', 'q = q0^p, p prime', 'subunital stabiliser', ''),
    ('N(M+-1)', 'C(q+-sqrt(3q)+1) : C6', '', '2, 3, 6, divisors of q+-sqrt(3q)+1'),
    ('N(M0)', '(C2^2 x D((q+1)/2)) : C3', 'triangle stabiliser', '2, 3, 6, divisors of (q+1)/2'),
)

# (order, number of conjugacy classes) for the rows given by exact order
CLASS_ORDERS = ((9, 3), (6, 2), (3, 3), (2, 1), (1, 1))
