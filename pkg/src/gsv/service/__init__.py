"""Stateless HTTP facade over the exact-algebra engine.

Every request embeds its own instance description, so the service
keeps no state between calls and any number of replicas behave
identically.  Responses reuse the deterministic report payload shape
rendered by the CLI.
"""

from .app import create_app

__all__ = ["create_app"]
