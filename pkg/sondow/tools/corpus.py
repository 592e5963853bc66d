"""
Corpus MCP Tools
"""

from typing import Any, Dict

from mcp.types import Tool

from ..catalog import SondowCatalog
from ..corpus import PREDICATE_NAMES
from .registry import ToolRegistry, integer_arg, integer_property


def register_corpus_tools(registry: ToolRegistry, catalog: SondowCatalog):
    """Register corpus tools"""

    def crosscheck_corpus(arguments: Dict[str, Any]) -> str:
        predicate = arguments["predicate"]
        mu = integer_arg(arguments, "mu") if predicate == "sondow" else None
        result = catalog.crosscheck(arguments["bfile"], predicate, mu)
        icon = "✅" if result["ok"] else "⚠️"
        output = f"## {icon} {result['summary']}\n\n"
        if result["failed"]:
            output += "**Failed:** " + ", ".join(result["failed"]) + "\n"
        if result["skipped"]:
            output += "**Skipped (cannot factor):** " + ", ".join(result["skipped"]) + "\n"
        return output

    registry.add(
        Tool(
            name="crosscheck_corpus",
            description="""Check every term of an OEIS b-file against a predicate.

bfile is A007850 (Giuga numbers), A054377 (primary pseudoperfect numbers)
or a path. Terms too large to factor use the vendored factorizations.""",
            inputSchema={
                "type": "object",
                "properties": {
                    "bfile": {"type": "string", "description": "Sequence id or path"},
                    "predicate": {"type": "string", "enum": list(PREDICATE_NAMES)},
                    "mu": integer_property("mu for the sondow predicate"),
                },
                "required": ["bfile", "predicate"],
            },
        ),
        crosscheck_corpus,
    )
