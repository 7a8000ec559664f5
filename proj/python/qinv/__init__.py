"""Local-unitary and SLOCC invariants of multi-qubit pure states."""

from ._qinv import *  # noqa: F401,F403
from ._qinv import __doc__  # noqa: F401
