"""Element algebra in the 7x7 matrix model of 2G2(q)
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
from optparse import make_option

from reekit import config, ree
from reekit.commands.common import *
from reekit.ree import GroupElement

log = logging.getLogger('element')

help = 'multiply, invert and inspect elements of 2G2(q)'
usage = """%prog [options] OP ELEMENT [ELEMENT...]

OP is one of

    show    print the matrix text of every ELEMENT
    mul     print the product of the ELEMENTs, left to right
    inv     print the inverse of the single ELEMENT
    order   print the order of every ELEMENT
    trace   print the trace of every ELEMENT

An ELEMENT is either a matrix text, 7 rows separated by ';' of 7
field element strings separated by spaces, or one of the shorthands

    inf:A,A1,A2     the Sylow element (a,a',a'')_inf
    O:A,A1,A2       the Sylow element (a,a',a'')_O
    torus:T         the diagonal element h(t)
    h               the involution h(-1)
    w               the signed permutation swapping the two templates

Field elements are digit strings, see "reekit help field".  Matrix
texts are checked for determinant one; elements whose order exceeds
2(q + sqrt(3q) + 1) are rejected as not in the group.

EXAMPLES

    # reekit element --q 27 order inf:100,000,000 inf:000,000,100

        Prints 9 and 3.

    # reekit element --q 3 mul inf:1,0,0 O:0,1,0

        Prints the matrix text of the product."""

options = field_options + [
           make_option('--inf',
                       help = 'append (a,a\',a\'\')_inf given as A,A1,A2',
                       action = 'append',
                       metavar = 'A,A1,A2'),
           make_option('--origin',
                       help = 'append (a,a\',a\'\')_O given as A,A1,A2',
                       action = 'append',
                       metavar = 'A,A1,A2'),
          ]

OPS = ('show', 'mul', 'inv', 'order', 'trace')

def _triple(field, text):
    parts = text.split(',')
    if len(parts) != 3:
        raise CmdException('"%s" is not a parameter triple A,A1,A2' % text)
    return [field.from_string(p) for p in parts]

def parse_element(field, token):
    """Build a group element from a matrix text or a shorthand."""
    log.debug('entering parse_element, token=%s', token)
    t = token.strip()
    if t == 'h':
        return ree.h_minus1(field)
    if t == 'w':
        return ree.swap_matrix(field)
    if t.startswith('inf:'):
        return ree.u_inf(field, *_triple(field, t[4:]))
    if t.startswith('O:'):
        return ree.u_O(field, *_triple(field, t[2:]))
    if t.startswith('torus:'):
        return ree.torus(field, field.from_string(t[6:]))
    return GroupElement.from_text(field, t)

def func(parser, options, args):
    log.debug("entering element, options=%s, args=%s", options, args)
    if not args:
        raise CmdException('missing OP, one of %s' % ', '.join(OPS))
    op, tokens = args[0], args[1:]
    if op not in OPS:
        raise CmdException('unknown OP "%s", one of %s' % (op, ', '.join(OPS)))
    field = field_from_options(options)
    tokens += ['inf:' + x for x in options.inf or []]
    tokens += ['O:' + x for x in options.origin or []]
    if not tokens:
        raise CmdException('%s needs at least one ELEMENT' % op)
    elements = [parse_element(field, x) for x in tokens]
    if op == 'show':
        lines = [g.text() for g in elements]
    elif op == 'mul':
        prod = elements[0]
        for g in elements[1:]:
            prod = prod * g
        lines = [prod.text()]
    elif op == 'inv':
        if len(elements) != 1:
            raise CmdException('inv takes exactly one ELEMENT, got %d' % len(elements))
        lines = [elements[0].inverse().text()]
    elif op == 'order':
        lines = [str(g.order()) for g in elements]
    else:
        lines = [field.to_string(g.trace()) for g in elements]
    if config.mread:
        lines = ['%s;%s' % (op, x) for x in lines]
    log.info('\n'.join(lines))
