"""Bounded Wall-pairing complexes: builders, exact homology, verification.

Thin convenience layer over the compiled core. The heavy lifting (exact
integer linear algebra, poset enumeration, the verification suites) lives
in C++; this package decodes the JSON documents the core emits.
"""

import json as _json

try:
    from . import _wallcx as _core
except ImportError:  # in-tree builds put the module next to the package
    import _wallcx as _core

version = _core.version
stable_range = _core.stable_range
verify_report = _core.verify_report
suites = _core.suites

__version__ = version()


def build(kind, g, bound=1, maxdim=3, maxlen=0):
    """Build a bounded complex or poset; returns the artifact as a dict."""
    return _json.loads(_core.build_json(kind, g, bound, maxdim, maxlen))


def homology(document, maxdim=-1):
    """Homology of a complex/poset/artifact given as dict or JSON text."""
    if not isinstance(document, str):
        document = _json.dumps(document)
    return _json.loads(_core.homology_json(document, maxdim))


def homology_csv(document, maxdim=-1):
    """Same as homology() but rendered as degree,rank,torsion CSV text."""
    if not isinstance(document, str):
        document = _json.dumps(document)
    return _core.homology_csv(document, maxdim)


def verify(suite, seed=0, budget=2):
    """Run a verification suite; returns (report text, exit code)."""
    return _core.verify_report(suite, seed, budget)
