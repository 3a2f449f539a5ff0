"""Run the lemma verification suite
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

from reekit import config, verify
from reekit.commands.common import *

log = logging.getLogger('verify')

help = 'check the computational lemmas on 2G2(3) and 2G2(27)'
usage = """%prog [options] [LEMMA...]

Runs the named checks, or all checks available at the chosen q, and
reports one verdict per check:

    PASS          nothing violated
    FAIL          a claim is violated, a counterexample is given
    DISCREPANCY   a printed statement disagrees with the computation;
                  the computed value is given as the witness

At q = 3 the checks are exhaustive wherever the group is enumerated.
At q = 27 most checks sample; --samples and --seed fix the sample and
identical invocations print identical reports.  The exit code is 1
when any check fails, DISCREPANCY alone exits 0.

Use --list for the available check names.  LEMMA arguments and
--lemma may be combined; "all" selects every check.

EXAMPLES

    # reekit verify --q 3 --lemma all

        Runs every q = 3 check.

    # reekit verify --q 27 --lemma trace --samples 10000 --seed 42

        Checks the element traces on 10000 seeded random elements.

    # reekit -m verify --q 27 --lemma design --format json --output d.jsonl

        Writes the design check report as one JSON line."""

options = [make_option('-q', '--q',
                       help = 'field order, 3 or 27 (default 27)',
                       type = 'int',
                       default = 27,
                       metavar = 'Q'),
           make_option('-L', '--lemma',
                       help = 'comma separated check names or "all"',
                       metavar = 'NAMES'),
           make_option('-n', '--samples',
                       help = 'sample count of the sampled checks',
                       type = 'int'),
           make_option('-s', '--seed',
                       help = 'seed of the sampled checks (default from config)',
                       type = 'int'),
           make_option('-o', '--output',
                       help = 'write JSON lines to FILE',
                       metavar = 'FILE'),
           make_option('-f', '--format',
                       help = 'report format, json or text (default text)',
                       choices = ('json', 'text'),
                       default = 'text'),
           make_option('-j', '--threads',
                       help = 'worker threads, default from config or REEKIT_THREADS',
                       type = 'int'),
           make_option('--full-design-check',
                       help = 'check the blocks through every point, not a sample',
                       action = 'store_true'),
           make_option('-l', '--list',
                       help = 'list the checks with the q they run at',
                       action = 'store_true'),
          ]

def selected(options, args):
    names = list(args)
    if options.lemma:
        names += [n.strip() for n in options.lemma.split(',') if n.strip()]
    if not names or 'all' in names:
        return None
    return names

def summary(reports):
    counts = {verify.PASS: 0, verify.FAIL: 0, verify.DISCREPANCY: 0}
    for r in reports:
        counts[r.verdict] += 1
    return {'summary': counts,
            'failures': [r.name for r in reports if r.verdict == verify.FAIL],
            'discrepancies': [r.name for r in reports if r.verdict == verify.DISCREPANCY]}

def func(parser, options, args):
    log.debug("entering verify, options=%s, args=%s", options, args)
    if options.list:
        for name in verify.check_names():
            c = verify.CHECKS[name]
            qs = ','.join(str(q) for q in c.qs)
            if config.mread:
                log.info('%s;%s;%s' % (name, qs, c.doc))
            else:
                log.info('%-16s q=%-6s %s' % (name, qs, c.doc))
        return
    check_positive('--samples', options.samples)
    check_positive('--threads', options.threads)
    if options.seed is not None and options.seed < 0:
        raise CmdException('--seed must be non-negative, got %d' % options.seed)
    field_from_options(options)
    threads = options.threads or config.threads
    reports = verify.run_checks(options.q, selected(options, args), options.samples,
                                options.seed, threads, options.full_design_check)
    summ = summary(reports)
    if options.format == 'json' or options.output:
        write_json([r.as_dict() for r in reports] + [summ], options.output)
    if options.format == 'text':
        for r in reports:
            log.info(r.text())
        s = summ['summary']
        log.info('%d PASS, %d FAIL, %d DISCREPANCY' % (s['PASS'], s['FAIL'], s['DISCREPANCY']))
        if summ['discrepancies']:
            log.info('discrepancies: %s' % ', '.join(summ['discrepancies']))
    if summ['failures']:
        sys.exit(1)
