"""quiver-moment: moment maps of quiver representations and properness.

Main Components:
- quiver: quivers, dimension vectors, weights, cycle search, source arrows
- repspace: representation space, group and Lie algebra actions, sampling
- moment: the moment map, slope normalization and verification identities
- properness: verdict, witness families, coercivity certificates, bounds
- specfile / reports / cli: file formats, report builders, command line
- app / tools / server: MCP tool surface

Usage:
    quiver-moment analyze examples.quiver
    quiver-moment serve

Note: this __init__ does NOT import .app, .tools or .server, so the library
and the command line work without starting an MCP server.
"""

from .quiver import DimensionVector, Quiver, Weight, validate
from .moment import moment, moment_norm
from .properness import analyze

__version__ = "0.1.0"
__all__ = ["DimensionVector", "Quiver", "Weight", "validate", "moment", "moment_norm", "analyze"]
