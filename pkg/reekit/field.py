"""Arithmetic in GF(3^m), m = 2e+1, and the automorphism theta

Elements are galois FieldArray values (scalars or numpy shaped arrays)
in the polynomial basis of a pinned modulus: the lexicographically
smallest monic irreducible polynomial of degree m over GF(3), comparing
coefficient tuples from the high degree down.  With that basis the
integer value of an element has the base-3 digits of its little-endian
coefficient vector, which is also the digit string used on the command
line and in JSON ("120" is 1 + 2t).
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
from functools import lru_cache

import numpy as np
import galois

from reekit.util import FieldError

log = logging.getLogger('field')


class Field(object):
    """GF(3^m) for m = 2e+1 together with theta: x -> x^(3^(e+1))."""

    def __init__(self, e):
        if isinstance(e, bool) or not isinstance(e, (int, np.integer)) or e < 0:
            raise FieldError('field exponent must be a non-negative integer, got %r' % (e,))
        self.e = int(e)
        self.m = 2*self.e + 1
        self.q = 3 ** self.m
        prime = galois.GF(3)
        if self.m == 1:
            self.modulus = galois.Poly([1, 0], field=prime)
            self.GF = prime
        else:
            self.modulus = galois.irreducible_poly(3, self.m, method='min')
            self.GF = galois.GF(self.q, irreducible_poly=self.modulus)
        log.debug('built GF(%d) with modulus %s', self.q, self.modulus)
        self.zero = self.GF(0)
        self.one = self.GF(1)
        self.minus_one = -self.one

    def __repr__(self):
        return 'Field(e=%d, q=%d, modulus=%s)' % (self.e, self.q, self.modulus)

    def __eq__(self, other):
        return isinstance(other, Field) and other.e == self.e

    def __hash__(self):
        return hash(('Field', self.e))

    @property
    def theta_exponent(self):
        return 3 ** (self.e + 1)

    @property
    def generator(self):
        """The element t with coefficient vector (0, 1, 0, ...)."""
        if self.m == 1:
            raise FieldError('GF(3) has no polynomial generator t')
        return self.GF(3)

    def basis(self):
        """The monomials 1, t, ..., t^(m-1)."""
        return [self.GF(3 ** i) for i in range(self.m)]

    def elements(self):
        return self.GF(np.arange(self.q))

    def nonzero(self):
        return self.GF(np.arange(1, self.q))

    def random(self, rng, size=None):
        return self.GF(rng.integers(0, self.q, size=size))

    def random_nonzero(self, rng, size=None):
        return self.GF(rng.integers(1, self.q, size=size))

    # conversions

    def element(self, x):
        """Coerce an int, digit string or element of this field."""
        if isinstance(x, galois.FieldArray):
            if type(x) is not self.GF:
                raise FieldError('operand belongs to %s, not GF(%d)' % (type(x).name, self.q))
            return x
        if isinstance(x, str):
            return self.from_string(x)
        if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
            x = int(x)
            if x < 0:
                return -self.element(-x)
            if x >= self.q:
                raise FieldError('integer %d out of range for GF(%d)' % (x, self.q))
            return self.GF(x)
        raise FieldError('cannot interpret %r as an element of GF(%d)' % (x, self.q))

    def from_int(self, n):
        return self.element(n)

    def to_int(self, x):
        return int(self.element(x))

    def from_coeffs(self, coeffs):
        coeffs = list(coeffs)
        if len(coeffs) != self.m or any(c not in (0, 1, 2) for c in coeffs):
            raise FieldError('need %d coefficients in {0,1,2}, got %r' % (self.m, coeffs))
        return self.GF(sum(c * 3**i for i, c in enumerate(coeffs)))

    def coeffs(self, x):
        n = self.to_int(x)
        return tuple((n // 3**i) % 3 for i in range(self.m))

    def from_string(self, s):
        s = s.strip()
        neg = s.startswith('-')
        digits = s[1:] if neg else s
        if len(digits) != self.m or any(d not in '012' for d in digits):
            raise FieldError('"%s" is not a %d digit element string over {0,1,2}' % (s, self.m))
        x = self.from_coeffs([int(d) for d in digits])
        return -x if neg else x

    def to_string(self, x):
        return ''.join(str(c) for c in self.coeffs(x))

    # arithmetic beyond the array operators

    def inv(self, x):
        x = self.element(x)
        if np.any(x.view(np.ndarray) == 0):
            raise FieldError('inverse of zero in GF(%d)' % self.q)
        return self.one / x

    def pow(self, x, n):
        x = self.element(x)
        if n < 0:
            return self.inv(x) ** (-n)
        return x ** n

    def frobenius(self, x):
        return x ** 3

    def theta(self, x):
        """x^(3^(e+1)) by e+1 iterated cubings; works on arrays."""
        for i in range(self.e + 1):
            x = x ** 3
        return x

    def describe(self):
        if self.e == 0:
            th = 'theta: identity (x^3 = x in GF(3))'
        else:
            th = 'theta: x -> x^%d (e+1 = %d cubings), theta^2 = Frobenius' % \
                 (self.theta_exponent, self.e + 1)
        return ['e=%d m=%d q=%d' % (self.e, self.m, self.q),
                'modulus: %s' % self.modulus,
                th]


@lru_cache(maxsize=None)
def make_field(e):
    log.debug('entering make_field, e=%s', e)
    return Field(e)

def field_for_q(q):
    """The field of order q = 3^(2e+1)."""
    e = 0
    while 3 ** (2*e + 1) < q:
        e += 1
    if 3 ** (2*e + 1) != q:
        raise FieldError('q=%s is not of the form 3^(2e+1)' % q)
    return make_field(e)

def sqrt3q(field):
    return 3 ** (field.e + 1)

def group_order(field):
    """q^3 (q^3+1) (q-1)."""
    q = field.q
    return q**3 * (q**3 + 1) * (q - 1)

def stated_group_order(field):
    """q^3 (q+1) (q-1), the order as printed in the literature we check."""
    q = field.q
    return q**3 * (q + 1) * (q - 1)

def order_cap(field):
    """Bound 2(q + sqrt(3q) + 1) above every element order."""
    return 2 * (field.q + sqrt3q(field) + 1)
