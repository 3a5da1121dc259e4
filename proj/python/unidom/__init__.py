"""Unique minimum dominating sets in small graphs.

Thin wrapper over the C++ core: exact domination, bound formulas, extremal
constructions with certificates, exhaustive bipartite search and the CLI.
"""
from ._unidom import *  # noqa: F401,F403
from ._unidom import __doc__  # noqa: F401

SCHEMA_TAG = "unidom/1"
