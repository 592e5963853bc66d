"""
Corpus-backed catalog
"""

from .catalog import SondowCatalog

__all__ = ["SondowCatalog"]
