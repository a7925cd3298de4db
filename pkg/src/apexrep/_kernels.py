"""Kernel selection.

The compiled ``_speedups`` extension is used when it imports; otherwise the
pure-Python ``_pykernels`` take over.  ``APEXREP_PURE_PYTHON=1`` forces the
fallback (useful when timing the two backends).
"""

import os

from . import _pykernels

python = _pykernels

try:
    from . import _speedups as compiled
except ImportError:  # extension not built
    compiled = None

if compiled is not None and os.environ.get("APEXREP_PURE_PYTHON", "") not in ("", "0"):
    active = python
else:
    active = compiled if compiled is not None else python

BACKEND = "compiled" if active is compiled else "python"

lr_is_planar = active.lr_is_planar
hv_contacts = active.hv_contacts
