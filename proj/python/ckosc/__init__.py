"""Classical and quantum solutions of the damped, driven Caldirola-Kanai oscillator."""

from ._core import *  # noqa: F401,F403
from ._core import __version__, Error  # noqa: F401
