"""
Sondow MCP Tools
"""

from .registry import ToolRegistry
from .membership import register_membership_tools
from .constructions import register_construction_tools
from .search import register_search_tools
from .corpus import register_corpus_tools

__all__ = [
    "ToolRegistry",
    "register_membership_tools",
    "register_construction_tools",
    "register_search_tools",
    "register_corpus_tools",
]
