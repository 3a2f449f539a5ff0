"""Finite field inspection command
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

from reekit import config
from reekit.commands.common import *
from reekit.util import FieldError

log = logging.getLogger('field')

help = 'show the field GF(3^(2e+1)) and its automorphism theta'
usage = """%prog [options]

Prints the order q, the irreducible modulus used for GF(q) and a
description of theta: x -> x^(3^(e+1)), the automorphism whose square
is the Frobenius map.  The field is given with --q or --e; e = 0 is
GF(3), where theta is the identity.

Field elements are written as m = 2e+1 digits over {0,1,2}, the
coefficients of 1, t, t^2, ... in that order, so "010" is t in GF(27).

EXAMPLES

    # reekit field --e 1

        Shows q=27 and the modulus x^3 + 2x + 1.

    # reekit field --q 27 --theta 010

        Also prints theta(t) and the inverse of t."""

options = field_options + [
           make_option('-t', '--theta',
                       help = 'apply theta to ELEMENT and print its inverse',
                       metavar = 'ELEMENT'),
          ]

def func(parser, options, args):
    log.debug("entering field, options=%s, args=%s", options, args)
    if args:
        raise CmdException('field takes no arguments, got "%s"' % ' '.join(args))
    field = field_from_options(options)
    if config.mread:
        lines = ['q;%d' % field.q, 'e;%d' % field.e, 'modulus;%s' % field.modulus,
                 'theta_exponent;%d' % field.theta_exponent]
    else:
        lines = field.describe()
    if options.theta:
        x = field.from_string(options.theta)
        th = field.to_string(field.theta(x))
        try:
            inv = field.to_string(field.inv(x))
        except FieldError:
            inv = 'none'
        if config.mread:
            lines += ['theta(%s);%s' % (options.theta, th), 'inverse(%s);%s' % (options.theta, inv)]
        else:
            lines += ['theta(%s) = %s' % (options.theta, th),
                      '%s^-1 = %s' % (options.theta, inv)]
    log.info('\n'.join(lines))
