"""
Tool registry
Collects Tool definitions and their handlers from each tool module so the
server installs a single list_tools / call_tool pair.
"""

import logging
from typing import Any, Callable, Dict, List

from mcp.server import Server
from mcp.types import TextContent, Tool

from ..errors import SondowError

logger = logging.getLogger("sondow.tools")

Handler = Callable[[Dict[str, Any]], str]


class ToolRegistry:
    def __init__(self):
        self.tools: List[Tool] = []
        self.handlers: Dict[str, Handler] = {}

    def add(self, tool: Tool, handler: Handler):
        if tool.name in self.handlers:
            raise ValueError(f"tool {tool.name!r} registered twice")
        self.tools.append(tool)
        self.handlers[tool.name] = handler

    def names(self) -> List[str]:
        return [tool.name for tool in self.tools]

    def dispatch(self, name: str, arguments: Dict[str, Any]) -> str:
        handler = self.handlers.get(name)
        if handler is None:
            return f"Unknown tool: {name}"
        try:
            return handler(arguments or {})
        except (SondowError, KeyError, TypeError) as e:
            logger.info(f"Tool {name} rejected input: {e}")
            return f"Error: {str(e)}"
        except Exception as e:
            logger.exception(f"Tool {name} failed")
            return f"Error: {str(e)}"

    def install(self, server: Server):
        @server.list_tools()
        async def list_tools() -> list[Tool]:
            return list(self.tools)

        @server.call_tool()
        async def call_tool(name: str, arguments: dict[str, Any]) -> list[TextContent]:
            return [TextContent(type="text", text=self.dispatch(name, arguments))]

        logger.info(f"Installed {len(self.tools)} tools")


def integer_arg(arguments: Dict[str, Any], key: str, default=None) -> int:
    """Integers travel as decimal strings (or JSON numbers for small values)"""
    if key not in arguments or arguments[key] is None:
        if default is None:
            raise SondowError(f"missing argument {key!r}")
        return default
    value = arguments[key]
    if isinstance(value, bool):
        raise SondowError(f"argument {key!r} must be an integer")
    try:
        return int(str(value).strip())
    except ValueError:
        raise SondowError(f"argument {key!r} must be a decimal integer, got {value!r}")


INTEGER_SCHEMA = {"type": ["string", "integer"], "description": "Decimal integer"}


def integer_property(description: str) -> Dict[str, Any]:
    return {**INTEGER_SCHEMA, "description": description}
