import pytest

from helpers import abc_poset, diamond_poset


@pytest.fixture
def abc_lattice():
    """Five-element lattice whose two maximal chains have lengths 4 and 3."""
    return abc_poset()


@pytest.fixture
def diamond():
    """Four-element lattice with one incomparable pair."""
    return diamond_poset()
