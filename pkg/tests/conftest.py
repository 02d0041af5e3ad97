import pytest

from leechkit.niemeier import assemble_niemeier, load_glue_data

_GLUE = None
_CACHE = {}


def get_lattice(label):
    """Assemble one bundled lattice, cached for the whole session."""
    global _GLUE
    if _GLUE is None:
        _GLUE = {g.label: g for g in load_glue_data()}
    if label not in _CACHE:
        _CACHE[label] = assemble_niemeier(_GLUE[label])
    return _CACHE[label]


def all_labels():
    global _GLUE
    if _GLUE is None:
        _GLUE = {g.label: g for g in load_glue_data()}
    return list(_GLUE)


@pytest.fixture
def lattice():
    return get_lattice


def pytest_addoption(parser):
    parser.addoption(
        "--runslow", action="store_true", default=False,
        help="run tests marked slow (full enumerations)",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="slow; use --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)
