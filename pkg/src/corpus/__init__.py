"""The shipped fixture corpus: quivers, AR windows and knitting recipes."""
from .fixtures import (
    FixtureInfo,
    FixtureKind,
    default_root,
    find_fixture,
    install_fixtures,
    list_fixtures,
    load_fixture,
)

__all__ = [
    "FixtureInfo",
    "FixtureKind",
    "default_root",
    "find_fixture",
    "install_fixtures",
    "list_fixtures",
    "load_fixture",
]
