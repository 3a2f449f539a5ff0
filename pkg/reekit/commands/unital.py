"""Ree unital enumeration and export
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

import sys, logging
from optparse import make_option

from reekit import config
from reekit.commands.common import *
from reekit.unital import Unital

log = logging.getLogger('unital')

help = 'enumerate, export and re-import the Ree unital U_R(q)'
usage = """%prog [options]

Enumerates the q^3+1 points of the Ree unital and writes them with its
blocks as one JSON document

    {"q": Q, "points": [[7 digit strings], ...], "blocks": [[q+1 indices], ...]}

Points are the normalised projective vectors, first nonzero entry 1;
index 0 is inf and 1 + a q^2 + a' q + a'' is p(a,a',a'').  Blocks are
sorted rows listed in lexicographic order.

Listing every block needs q = 3 or --force: at q = 27 there are
512487 of them.  Unitals beyond q = 27 are refused unless --force is
given as well.

EXAMPLES

    # reekit unital --q 3 --output u3.json

        Writes 28 points and 63 blocks.

    # reekit unital --q 3 --import u3.json

        Re-reads the export and checks it against a fresh enumeration.

    # reekit unital --q 27 --stats

        Prints the point and block counts without exporting."""

options = [make_option('-q', '--q',
                       help = 'field order q = 3^(2e+1)',
                       type = 'int',
                       metavar = 'Q'),
           make_option('-o', '--output',
                       help = 'write the export to FILE instead of stdout',
                       metavar = 'FILE'),
           make_option('-f', '--force',
                       help = 'allow the full block list above q = 3',
                       action = 'store_true'),
           make_option('-p', '--points-only',
                       help = 'export the points with an empty block list',
                       action = 'store_true'),
           make_option('-s', '--stats',
                       help = 'print point and block counts only',
                       action = 'store_true'),
           make_option('-i', '--import',
                       dest = 'import_',
                       help = 'check an earlier export FILE against the enumeration',
                       metavar = 'FILE'),
          ]

def func(parser, options, args):
    log.debug("entering unital, options=%s, args=%s", options, args)
    if args:
        raise CmdException('unital takes no arguments, got "%s"' % ' '.join(args))
    field = field_from_options(options)
    u = Unital(field, force=options.force)
    q = u.q
    if options.stats:
        stats = [('points', u.n), ('blocks', q*q * (q*q - q + 1)),
                 ('blocks_through_point', len(u.blocks_through(0))),
                 ('points_per_block', q + 1)]
        if config.mread:
            log.info('\n'.join('%s;%d' % s for s in stats))
        else:
            log.info('\n'.join('%-22s %d' % s for s in stats))
        return
    if options.import_:
        with open(options.import_, encoding='utf-8') as f:
            doc = u.load_json(f)
        log.info('%s: %d points, %d blocks, identical to U_R(%d)'
                 % (options.import_, len(doc['points']), len(doc['blocks']), q))
        return
    blocks = not options.points_only
    if blocks and q > 3 and not options.force:
        raise CmdException('refusing to list the %d blocks of U_R(%d) without --force, '
                           'or use --points-only' % (q*q * (q*q - q + 1), q))
    if options.output:
        with open(options.output, 'w', encoding='utf-8') as f:
            u.export_json(f, blocks=blocks, force=options.force)
        log.debug('wrote %s', options.output)
    else:
        u.export_json(sys.stdout, blocks=blocks, force=options.force)
