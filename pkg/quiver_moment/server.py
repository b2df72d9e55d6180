#!/usr/bin/env python3
"""MCP server for quiver-moment.

Entry point for the ``quiver-moment-mcp`` script and ``quiver-moment serve``.
Importing ``quiver_moment.tools`` registers every tool on the shared FastMCP
instance in ``quiver_moment.app``.
"""

import logging
import os
from typing import Optional

from .app import mcp
from . import tools  # noqa: F401

logger = logging.getLogger(__name__)

LOG_FILE_NAME = 'quiver_moment_server.log'


def configure_file_logging(log_dir: Optional[str] = None) -> str:
    """
    Log to a file only: anything written to stdout/stderr breaks the stdio
    transport.

    Args:
        log_dir: Directory for the log file (default: ./logs)

    Returns:
        Path of the log file
    """
    log_dir = log_dir or os.path.join(os.getcwd(), 'logs')
    os.makedirs(log_dir, exist_ok=True)
    log_file = os.path.join(log_dir, LOG_FILE_NAME)
    logging.basicConfig(
        level=logging.INFO,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=[logging.FileHandler(log_file, encoding='utf-8')],
        force=True,
    )
    return log_file


def main():
    """Main entry point when running as a script."""
    configure_file_logging()
    logger.info("Starting quiver-moment MCP server")
    try:
        mcp.run(transport="stdio")
    except Exception as e:
        logger.error(f"Server error: {e}", exc_info=True)
        raise


if __name__ == "__main__":
    main()
