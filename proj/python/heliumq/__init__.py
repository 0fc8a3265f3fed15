"""Cavity/transmon spectroscopy, dielectric-shift and decoherence toolkit."""

from heliumq._core import *  # noqa: F401,F403
from heliumq._core import __version__  # noqa: F401
