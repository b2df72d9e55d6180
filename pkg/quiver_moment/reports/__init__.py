"""
Report builders (JSON-compatible dicts) and their text renderings.
"""

from .builders import (
    build_analysis_report,
    build_moment_report,
    build_validation_report,
    build_verification_report,
)
from .text import render_analysis, render_moment, render_probe_csv, render_validation, render_verification

__all__ = [
    'build_analysis_report',
    'build_moment_report',
    'build_validation_report',
    'build_verification_report',
    'render_analysis',
    'render_moment',
    'render_probe_csv',
    'render_validation',
    'render_verification',
]
