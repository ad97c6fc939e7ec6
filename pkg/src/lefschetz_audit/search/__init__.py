"""Bounded exhaustive search for positive relators."""

from .oracle import SearchHit, SearchSpec, parse_generator_spec, search_min_relators

__all__ = ["SearchHit", "SearchSpec", "parse_generator_spec", "search_min_relators"]
