"""Exact wreath-product character theory via vertex operators."""

from wreathvo.scalar import Cyclo, cyclo

__all__ = ["Cyclo", "cyclo"]
__version__ = "0.1.0"
