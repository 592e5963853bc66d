#!/usr/bin/env python3
"""
Sondow MCP Server
mu-Sondow, Giuga and primary pseudoperfect number tools over stdio

Usage:
    python -m sondow.server
"""

import asyncio
import logging
import sys

from mcp.server import Server
from mcp.server.stdio import stdio_server

from .catalog import SondowCatalog
from .tools import (
    ToolRegistry,
    register_membership_tools,
    register_construction_tools,
    register_search_tools,
    register_corpus_tools,
)

# stdout carries the protocol
logging.basicConfig(
    level=logging.INFO,
    format="[%(asctime)s] %(levelname)s - %(name)s - %(message)s",
    stream=sys.stderr,
)
logger = logging.getLogger("sondow")

server = Server("sondow")


def build_registry(catalog: SondowCatalog) -> ToolRegistry:
    """Collect all MCP tools"""
    registry = ToolRegistry()
    register_membership_tools(registry, catalog)
    register_construction_tools(registry, catalog)
    register_search_tools(registry, catalog)
    register_corpus_tools(registry, catalog)
    logger.info(f"Registered tools: {', '.join(registry.names())}")
    return registry


async def main():
    """Main entry point for the MCP server"""
    logger.info("Starting Sondow MCP Server")
    catalog = SondowCatalog()
    logger.info(f"Data directory: {catalog.data_dir}")

    build_registry(catalog).install(server)

    async with stdio_server() as (read_stream, write_stream):
        await server.run(
            read_stream,
            write_stream,
            server.create_initialization_options()
        )


if __name__ == "__main__":
    asyncio.run(main())
