"""Shared FastMCP server instance.

Every ``@mcp.tool()`` in ``quiver_moment.tools`` registers against this
object, and ``quiver_moment.server`` runs it.

This module must stay a leaf: it may not import anything else from
quiver_moment, otherwise tool modules and the server end up importing each
other.
"""

from mcp.server.fastmcp import FastMCP

mcp = FastMCP("quiver-moment")
