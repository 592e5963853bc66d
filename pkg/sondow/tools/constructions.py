"""
Construction MCP Tools
Lifting, successor extension and gcd reduction
"""

from typing import Any, Dict

from mcp.types import Tool

from ..catalog import SondowCatalog
from .membership import FACTORS_PROPERTY
from .registry import ToolRegistry, integer_arg, integer_property


def register_construction_tools(registry: ToolRegistry, catalog: SondowCatalog):
    """Register construction tools"""

    def lift(arguments: Dict[str, Any]) -> str:
        mu = integer_arg(arguments, "mu")
        if "n" not in arguments:
            result = catalog.lift_known(mu)
            output = f"## Lifting known {result['family']} numbers by mu={result['mu']}\n\n"
            for row in result["lifted"]:
                output += f"- {row['n']} -> {row['output_n']} (verified: {row['verified']})\n"
            return output
        result = catalog.lift(integer_arg(arguments, "n"), mu, arguments.get("factors"))
        output = "## ✅ Lifted\n\n"
        output += f"{result['input_n']} in S_{result['input_mu']} gives "
        output += f"{result['output_n']} in S_{result['output_mu']}\n\n"
        output += f"**Factorization:** {result['factorization']}\n"
        output += f"**Verified:** {result['verified']}\n"
        return output

    registry.add(
        Tool(
            name="lift",
            description="""Lift n to |mu|*n in S_mu.

Requires |mu| > 1, Rad(|mu|) dividing n and n in S_sgn(mu). Without n,
lifts every known primary pseudoperfect (mu > 0) or Giuga (mu < 0) number.""",
            inputSchema={
                "type": "object",
                "properties": {
                    "n": integer_property("Base number (optional)"),
                    "mu": integer_property("Target mu, |mu| > 1"),
                    "factors": FACTORS_PROPERTY,
                },
                "required": ["mu"],
            },
        ),
        lift,
    )

    def lift_converse(arguments: Dict[str, Any]) -> str:
        result = catalog.lift_converse(integer_arg(arguments, "value"), integer_arg(arguments, "mu"), arguments.get("factors"))
        icon = "✅" if result["member"] else "❌"
        output = f"## {icon} {result['value']} in S_{result['mu']}: {result['member']}\n\n"
        output += f"- **n = value/|mu|:** {result['n']}\n"
        output += f"- **Rad(|mu|) divides n:** {result['radical_divides']}\n"
        output += f"- **n in S_sgn(mu):** {result['base_member']}\n"
        return output

    registry.add(
        Tool(
            name="lift_converse",
            description="""Decide whether a multiple of |mu| is a lifted mu-Sondow number.

For value = |mu|*n with |mu| > 1, value is in S_mu exactly when Rad(|mu|)
divides n and n is in S_sgn(mu).""",
            inputSchema={
                "type": "object",
                "properties": {
                    "value": integer_property("A multiple of |mu|"),
                    "mu": integer_property("Integer mu, |mu| > 1"),
                    "factors": FACTORS_PROPERTY,
                },
                "required": ["value", "mu"],
            },
        ),
        lift_converse,
    )

    def extend_by_successor(arguments: Dict[str, Any]) -> str:
        result = catalog.extend(integer_arg(arguments, "n"), arguments.get("factors"))
        output = f"## {result['n']} -> {result['output_n']}\n\n"
        output += f"**Factorization:** {result['factorization']}\n"
        return output

    registry.add(
        Tool(
            name="extend_by_successor",
            description="""Extend a weak primary pseudoperfect number n to n*(n+1) when n+1 is prime.""",
            inputSchema={
                "type": "object",
                "properties": {"n": integer_property("Weak primary pseudoperfect number"), "factors": FACTORS_PROPERTY},
                "required": ["n"],
            },
        ),
        extend_by_successor,
    )

    def reduce_by_gcd(arguments: Dict[str, Any]) -> str:
        result = catalog.reduce(integer_arg(arguments, "n"), integer_arg(arguments, "mu"), arguments.get("factors"))
        output = f"## Reduced {result['n']} in S_{result['mu']}\n\n"
        output += f"- **delta = gcd(n, mu):** {result['delta']}\n"
        output += f"- **n/delta:** {result['reduced_n']} = {result['factorization']}\n"
        output += f"- **mu/delta:** {result['reduced_mu']}\n"
        return output

    registry.add(
        Tool(
            name="reduce_by_gcd",
            description="""Divide a mu-Sondow number and its mu by their gcd.

The result is a (mu/delta)-Sondow number coprime to mu/delta.""",
            inputSchema={
                "type": "object",
                "properties": {
                    "n": integer_property("mu-Sondow number"),
                    "mu": integer_property("Integer mu"),
                    "factors": FACTORS_PROPERTY,
                },
                "required": ["n", "mu"],
            },
        ),
        reduce_by_gcd,
    )
