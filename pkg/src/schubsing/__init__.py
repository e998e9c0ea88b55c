"""Singular loci of Schubert varieties via Peterson translates."""

from .rootsys import build_root_system
from .weyl import element, from_word

__all__ = ["build_root_system", "element", "from_word"]
