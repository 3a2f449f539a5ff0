"""Common functions and variables for all commands
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

import sys, json
from optparse import make_option

from reekit.field import make_field, field_for_q
from reekit.util import FieldError

# Command exception class
class CmdException(Exception):
    pass

field_options = [make_option('-q', '--q',
                             help = 'field order q = 3^(2e+1)',
                             type = 'int',
                             metavar = 'Q'),
                 make_option('-e', '--e',
                             help = 'field exponent e, q = 3^(2e+1)',
                             type = 'int',
                             metavar = 'E'),
                ]

def field_from_options(options, default_q=None):
    """The field named by --q or --e; both must agree when given."""
    q, e = getattr(options, 'q', None), getattr(options, 'e', None)
    if q is None and e is None:
        if default_q is None:
            raise CmdException('give the field with --q or --e')
        q = default_q
    try:
        if e is not None:
            if e < 0:
                raise CmdException('--e must be non-negative, got %d' % e)
            field = make_field(e)
            if q is not None and q != field.q:
                raise CmdException('--q %d and --e %d name different fields' % (q, e))
            return field
        return field_for_q(q)
    except FieldError as err:
        raise CmdException(str(err))

def check_positive(name, value):
    if value is not None and value <= 0:
        raise CmdException('%s must be positive, got %d' % (name, value))

def check_non_negative(name, value):
    if value is not None and value < 0:
        raise CmdException('%s must not be negative, got %d' % (name, value))

def write_json(docs, path=None, lines=True):
    """Write JSON documents, one per line, to path or stdout.

    Keys are sorted so identical runs give identical bytes.
    """
    if lines:
        text = ''.join(json.dumps(d, sort_keys=True) + '\n' for d in docs)
    else:
        text = json.dumps(docs, sort_keys=True, indent=1) + '\n'
    if path:
        with open(path, 'w', encoding='utf-8') as f:
            f.write(text)
    else:
        sys.stdout.write(text)
        sys.stdout.flush()
