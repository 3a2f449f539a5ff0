"""Product replacement walks and Nielsen move censuses
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

import numpy as np

from reekit import config, perm, nielsen
from reekit.commands.common import *
from reekit.field import group_order
from reekit.unital import Unital
from reekit.util import CensusTooLarge, seeded_rng

log = logging.getLogger('pra')

help = 'product replacement walks and connected components of Nielsen graphs'
usage = """%prog [options] census|random

census  counts the connected components of the graph whose vertices
        are the generating n-tuples of a small group and whose edges
        are the Nielsen moves R, L (multiply an entry by another entry
        or its inverse, on the right or left), P (swap two entries)
        and I (invert an entry).  It reports the component sizes and
        whether every component holds a redundant tuple, one with a
        proper generating subtuple.  Tuples are enumerated as codes
        below |G|^n, refused above 2^census_bits (see the config file).

random  starts from a random generating n-tuple and applies --steps
        random R/L moves, then prints a random entry of the tuple
        and its order.  With --samples K it repeats the walk K more
        steps at a time and prints the order histogram.

The group is a built-in permutation group (--group a5, psl27, psl28
or ree3), a generator file (--generators FILE, one image list per
line) or 2G2(q) in its matrix model (--q).  Censuses need an
enumerated group, so --q works for census only at q = 3, where it
means ree3.

EXAMPLES

    # reekit pra census --group a5 --n 3

        One component holding every generating triple of A5.

    # reekit pra random --q 27 --n 5 --steps 200 --seed 1

        A deterministic random element of 2G2(27)."""

options = [make_option('-g', '--group',
                       help = 'built-in group: %s' % ', '.join(sorted(perm.NAMED_GROUPS)),
                       metavar = 'NAME'),
           make_option('-G', '--generators',
                       help = 'permutation generators, one image list per line',
                       metavar = 'FILE'),
           make_option('-q', '--q',
                       help = 'use 2G2(q) in the matrix model',
                       type = 'int',
                       metavar = 'Q'),
           make_option('-n', '--n',
                       help = 'tuple length (default 3)',
                       type = 'int',
                       default = 3),
           make_option('-S', '--steps',
                       help = 'random moves of a walk (default 100)',
                       type = 'int',
                       default = 100),
           make_option('-k', '--samples',
                       help = 'continue the walk for K more outputs, print the order histogram',
                       type = 'int'),
           make_option('-s', '--seed',
                       help = 'seed of the walk (default from config)',
                       type = 'int'),
           make_option('-o', '--output',
                       help = 'write the census JSON to FILE',
                       metavar = 'FILE'),
          ]

def group_ctx(options):
    """The enumerated group selected by the options and its name."""
    given = [x for x in (options.group, options.generators, options.q) if x is not None]
    if len(given) != 1:
        raise CmdException('give exactly one of --group, --generators and --q')
    if options.group:
        return perm.closure(perm.named_group(options.group)), options.group
    if options.generators:
        return perm.closure(perm.load_generators(options.generators)), options.generators
    field = field_from_options(options)
    if field.q != 3:
        N = group_order(field)
        raise CensusTooLarge('2G2(%d) has order %d, %d-tuples give %d codes, above the bound 2^%d; '
                             'censuses run on enumerated groups only'
                             % (field.q, N, options.n, N ** options.n, config.census_bits))
    return perm.closure(perm.named_group('ree3')), 'ree3'

def census(options):
    ctx, name = group_ctx(options)
    report = nielsen.bfs_census(ctx, options.n, name)
    write_json([report], options.output)

def _random_index_tuple(ctx, n, rng, tries=1000):
    for k in range(tries):
        t = tuple(int(x) for x in rng.integers(0, ctx.order, n))
        if perm.generates(t, ctx):
            return t
    raise CmdException('no generating %d-tuple found in %d tries' % (n, tries))

def random(options):
    seed = config.seed if options.seed is None else options.seed
    rng = seeded_rng(seed, 'pra')
    n = options.n
    if options.q is not None and options.group is None and options.generators is None:
        field = field_from_options(options)
        u = Unital(field) if field.q > 3 else None
        t = nielsen.random_generating_tuple(field, n, rng, unital=u)
        ctx = None
        show = lambda x: x.text()
    else:
        ctx, name = group_ctx(options)
        t = _random_index_tuple(ctx, n, rng)
        show = lambda x: repr(ctx.elements[x])
    t, x = nielsen.pra_walk(t, options.steps, rng=rng, ctx=ctx)
    order = x.order() if ctx is None else int(ctx.orders[x])
    if config.mread:
        log.info('element;%s\norder;%d' % (show(x), order))
    else:
        log.info('element: %s\norder:   %d' % (show(x), order))
    if options.samples:
        outs = []
        for k in range(options.samples):
            t, y = nielsen.pra_walk(t, options.steps, rng=rng, ctx=ctx)
            outs.append(y)
        if ctx is None:
            hist = nielsen.order_histogram(outs)
        else:
            hist = dict(sorted((int(k), int(v)) for k, v in
                               zip(*np.unique(ctx.orders[outs], return_counts=True))))
        sep = ';' if config.mread else ': '
        log.info('\n'.join('order %d%s%d' % (k, sep, v) for k, v in hist.items()))

def func(parser, options, args):
    log.debug("entering pra, options=%s, args=%s", options, args)
    if len(args) != 1 or args[0] not in ('census', 'random'):
        raise CmdException('pra needs exactly one of census or random')
    if options.n < 2:
        raise CmdException('--n must be at least 2, got %d' % options.n)
    check_non_negative('--steps', options.steps)
    check_positive('--samples', options.samples)
    if args[0] == 'census':
        census(options)
    else:
        random(options)
