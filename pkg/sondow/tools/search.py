"""
Search MCP Tools
Range scans, conjecture checks and residue tables; ranges are capped at the desk bound
"""

from typing import Any, Dict

from mcp.types import Tool

from ..catalog import SondowCatalog
from ..errors import SondowError
from .registry import ToolRegistry, integer_arg, integer_property

MAX_LISTED = 50
MAX_CONJECTURE1_MU = 10_000
INTEGER_ITEMS = {"type": ["string", "integer"]}


def register_search_tools(registry: ToolRegistry, catalog: SondowCatalog):
    """Register search tools"""
    desk_bound = catalog.config.desk_bound

    def search_range(arguments: Dict[str, Any]) -> str:
        mu = integer_arg(arguments, "mu")
        lo = integer_arg(arguments, "lo")
        hi = integer_arg(arguments, "hi")
        composite_only = bool(arguments.get("composite_only", False))
        result = catalog.search(mu, lo, hi, composite_only=composite_only, limit=desk_bound)

        output = f"# S_{result['mu']} in [{lo}, {hi}]"
        output += " (composites)" if composite_only else ""
        output += f": {result['count']} found\n\n"
        for record in result["records"][:MAX_LISTED]:
            factors = "·".join(p if e == "1" else f"{p}^{e}" for p, e in record["factors"])
            output += f"- {record['n']} = {factors}\n"
        if result["count"] > MAX_LISTED:
            output += f"\n... and {result['count'] - MAX_LISTED} more\n"
        return output

    registry.add(
        Tool(
            name="search_range",
            description=f"""Find every mu-Sondow number in [lo, hi].

Uses a segmented smallest-prime-factor sieve. Ranges are limited to
{desk_bound} integers here; use the command line for longer runs.""",
            inputSchema={
                "type": "object",
                "properties": {
                    "mu": integer_property("Integer mu"),
                    "lo": integer_property("Lower end, >= 2"),
                    "hi": integer_property("Upper end"),
                    "composite_only": {"type": "boolean", "description": "Skip primes"},
                },
                "required": ["mu", "lo", "hi"],
            },
        ),
        search_range,
    )

    def conjecture1(arguments: Dict[str, Any]) -> str:
        lo = integer_arg(arguments, "mu_from")
        hi = integer_arg(arguments, "mu_to")
        if hi < lo:
            raise SondowError(f"empty mu range [{lo}, {hi}]")
        if max(abs(lo), abs(hi)) > MAX_CONJECTURE1_MU:
            raise SondowError(f"|mu| above {MAX_CONJECTURE1_MU} is not supported here")
        result = catalog.conjecture1(range(lo, hi + 1))
        output = f"## Members in [2, |mu|] for mu in [{lo}, {hi}]\n\n"
        output += f"**Checked:** {result['checked']}\n"
        output += f"**No member found for mu =** {', '.join(result['exhausted']) or 'none'}\n"
        return output

    registry.add(
        Tool(
            name="conjecture1",
            description="""For each mu in a range (|mu| >= 2), look for a mu-Sondow number in [2, |mu|].

Lists the mu values with none; outside {4, 16} none are expected.""",
            inputSchema={
                "type": "object",
                "properties": {
                    "mu_from": integer_property("First mu"),
                    "mu_to": integer_property("Last mu"),
                },
                "required": ["mu_from", "mu_to"],
            },
        ),
        conjecture1,
    )

    def conjecture2(arguments: Dict[str, Any]) -> str:
        mu = integer_arg(arguments, "mu")
        bound = integer_arg(arguments, "bound")
        if bound > desk_bound:
            raise SondowError(f"bound {bound} exceeds {desk_bound}")
        result = catalog.conjecture2(mu, bound)
        lo, hi = result["interval"]
        if result["exhausted"]:
            return f"No member of S_{result['mu']} in ({lo}, {hi}] ({result['wall_time']}s)\n"
        return f"First member of S_{result['mu']} in ({lo}, {hi}]: **{result['witness']}**\n"

    registry.add(
        Tool(
            name="conjecture2",
            description="Look for a mu-Sondow number greater than |mu|, up to a bound.",
            inputSchema={
                "type": "object",
                "properties": {
                    "mu": integer_property("Integer mu"),
                    "bound": integer_property("Upper bound of the search"),
                },
                "required": ["mu", "bound"],
            },
        ),
        conjecture2,
    )

    def residue_table(arguments: Dict[str, Any]) -> str:
        modulus = integer_arg(arguments, "modulus", 288)
        if arguments.get("values"):
            values = [int(str(v)) for v in arguments["values"]]
        else:
            values = catalog.known_values(arguments.get("family", "giuga"))
        result = catalog.residues(values, modulus)
        output = f"## Residues modulo {result['modulus']}\n\n"
        output += "| n | n mod m |\n|---|---|\n"
        for value, residue in zip(result["values"], result["residues"]):
            output += f"| {value} | {residue} |\n"
        output += "\n**Runs:** " + ", ".join(f"{r} x{length}" for r, length in result["runs"]) + "\n"
        return output

    registry.add(
        Tool(
            name="residue_table",
            description="""Reduce values modulo m (default 288) and group equal consecutive residues.

Defaults to the known Giuga numbers.""",
            inputSchema={
                "type": "object",
                "properties": {
                    "modulus": integer_property("Modulus, default 288"),
                    "values": {"type": "array", "items": INTEGER_ITEMS, "description": "Values to reduce"},
                    "family": {"type": "string", "enum": ["giuga", "primary_ppp"]},
                },
            },
        ),
        residue_table,
    )
