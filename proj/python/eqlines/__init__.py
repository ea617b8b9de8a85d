"""Python interface to the exact equiangular-lines toolkit.

Thin wrapper over the C++ extension: every call returns plain dicts whose
rational quantities are "p/q" strings, exactly as emitted by the CLI.
"""

import json

import _eqlines

__all__ = [
    "certify",
    "construct",
    "pipeline",
    "spectrum",
    "max_lines",
    "property_suite",
    "graph6_roundtrip",
]


def certify(alpha, graph6, dim):
    """Certificate for embedding the code (alpha, graph) in R^dim."""
    return json.loads(_eqlines.certify(alpha, graph6, dim))


def construct(k, d):
    """Block construction of floor(k(d-1)/(k-1)) lines with certificate."""
    return json.loads(_eqlines.construct(k, d))


def pipeline(alpha, d):
    """End-to-end certified theorem chain; alpha is '1/5' or '1/3'."""
    return json.loads(_eqlines.pipeline(alpha, d))


def spectrum(graph6):
    """Exact adjacency spectrum with multiplicities."""
    return json.loads(_eqlines.spectrum(graph6))


def max_lines(alpha, dim, n_max, mode="exhaustive", samples=10000, seed=1):
    """Largest certified number of lines over graphs up to n_max vertices."""
    return json.loads(_eqlines.max_lines(alpha, dim, n_max, mode, samples, seed))


def property_suite(name, n_max, samples=1000, seed=1):
    """Run one spectral property suite and report counterexample counts."""
    return json.loads(_eqlines.property_suite(name, n_max, samples, seed))


def graph6_roundtrip(text):
    """Decode and re-encode a graph6 string."""
    return _eqlines.graph6_roundtrip(text)
