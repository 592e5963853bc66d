"""
Membership MCP Tools
Classification of a single n against mu, canonical mu, arithmetic derivative
"""

from typing import Any, Dict

from mcp.types import Tool

from ..catalog import SondowCatalog
from .registry import ToolRegistry, integer_arg, integer_property

FACTORS_PROPERTY = {
    "type": "string",
    "description": "Optional known factorization, e.g. \"2,3,7,43\" or \"2^4,3\"",
}


def register_membership_tools(registry: ToolRegistry, catalog: SondowCatalog):
    """Register membership tools"""

    def check_membership(arguments: Dict[str, Any]) -> str:
        result = catalog.check(
            integer_arg(arguments, "n"),
            integer_arg(arguments, "mu"),
            arguments.get("factors"),
        )
        icon = "✅" if result["member"] else "❌"
        output = f"## {icon} {result['n']} in S_{result['mu']}: {result['member']}\n\n"
        output += f"**Factorization:** {result['factorization']}\n\n"

        output += "### Prime power conditions\n"
        for w in result["witnesses"]:
            mark = "ok" if w["residue"] == "0" else "fails"
            output += f"- p={w['prime']}, s={w['exponent']}: (n/p + mu) mod p^s = {w['residue']} ({mark})\n"

        output += "\n### Characterizations\n"
        for name, value in result["flags"].items():
            output += f"- {name}: {'not evaluated' if value is None else value}\n"
        if not result["flags_agree"]:
            output += "\n⚠️ **Characterizations disagree**\n"

        output += f"\n**Canonical mu:** {result['canonical_mu']} (negative partner {result['negative_mu']})\n"
        output += f"**Egyptian sum:** {result['egyptian_sum']}\n"
        output += f"**Giuga:** {result['giuga']} | **Weak PPP:** {result['weak_ppp']}"
        if result["primary_ppp"] is not None:
            output += f" | **Primary PPP:** {result['primary_ppp']}"
        return output + "\n"

    registry.add(
        Tool(
            name="check_membership",
            description="""Decide whether n is a mu-Sondow number.

Reports each prime-power condition, every characterization that was
evaluated (divisibility, congruence sum, Egyptian fraction, Bernoulli,
power sum, derivative), the canonical mu of n and whether n is a Giuga
or weak/primary pseudoperfect number.""",
            inputSchema={
                "type": "object",
                "properties": {
                    "n": integer_property("Positive integer to classify"),
                    "mu": integer_property("Integer mu"),
                    "factors": FACTORS_PROPERTY,
                },
                "required": ["n", "mu"],
            },
        ),
        check_membership,
    )

    def canonical_mu(arguments: Dict[str, Any]) -> str:
        result = catalog.mu_of(integer_arg(arguments, "n"), arguments.get("factors"))
        output = f"## Canonical mu of {result['n']}\n\n"
        output += f"**Factorization:** {result['factorization']}\n"
        output += f"**mu*:** {result['canonical_mu']}\n"
        output += f"**mu* - n:** {result['negative_mu']}\n"
        return output

    registry.add(
        Tool(
            name="canonical_mu",
            description="""Get the canonical mu of n: the unique mu in [0, n) with n in S_mu.

Every mu congruent to it modulo n also works.""",
            inputSchema={
                "type": "object",
                "properties": {"n": integer_property("Positive integer"), "factors": FACTORS_PROPERTY},
                "required": ["n"],
            },
        ),
        canonical_mu,
    )

    def arithmetic_derivative(arguments: Dict[str, Any]) -> str:
        result = catalog.derive(integer_arg(arguments, "n"), arguments.get("factors"))
        return f"n = {result['n']} = {result['factorization']}\nn' = {result['derivative']}\n"

    registry.add(
        Tool(
            name="arithmetic_derivative",
            description="Get the arithmetic derivative n' = sum of e*n/p over p^e dividing n.",
            inputSchema={
                "type": "object",
                "properties": {"n": integer_property("Positive integer"), "factors": FACTORS_PROPERTY},
                "required": ["n"],
            },
        ),
        arithmetic_derivative,
    )

    def known_numbers(arguments: Dict[str, Any]) -> str:
        result = catalog.known_numbers(arguments["family"])
        title = "Giuga numbers" if result["family"] == "giuga" else "Primary pseudoperfect numbers"
        output = f"# {title} ({result['count']} known)\n\n"
        for row in result["numbers"]:
            output += f"- {row['n']} = {row['factorization']}\n"
        return output

    registry.add(
        Tool(
            name="known_numbers",
            description="List the known Giuga or primary pseudoperfect numbers with their factorizations.",
            inputSchema={
                "type": "object",
                "properties": {
                    "family": {
                        "type": "string",
                        "description": "Number family",
                        "enum": ["giuga", "primary_ppp"],
                    }
                },
                "required": ["family"],
            },
        ),
        known_numbers,
    )
