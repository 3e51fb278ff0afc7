"""
Module access for the PyJCsf scripts.

:date: October 2026

"""

from .pyjxg import PyJXg
from .pyjchrompoly import PyJChromPoly
from .pyjverify import PyJVerify
from .pyjsww import PyJSww
