import pytest

from mbpd.biwords import enumerate_rcp
from mbpd.grid import enumerate_mbpd
from mbpd.pipedreams import enumerate_pd

# The 6x6 golden grid, its biword, per-pop case labels, and the grid after
# each successive pop (the last being the identity grid).
SEC7_GRID = "...r--/..rjr-/.rxr+-/r+-+jr/||r+-+/||||r+"
SEC7_BIWORD = ((3, 4), (3, 5), (2, 2), (2, 5), (1, 1), (1, 3), (1, 5))
SEC7_POP_LABELS = (
    ("DC", "TC"),
    ("DB", "DNC", "TNC"),
    ("TB",),
    ("OB", "OB", "DB", "TNC"),
    ("TB",),
    ("OB", "OB", "TB"),
    ("OB", "OB", "OB", "OB", "TB"),
)
SEC7_POP_GRIDS = (
    "...r--/..rjr-/.r+-+-/r+jr+-/||r+jr/||||r+",
    "...r--/..rjr-/r-+-+-/|rjr+-/||r+jr/||||r+",
    "...r--/.r-+--/rjrjr-/|rjr+-/||r+jr/||||r+",
    "...r--/r--+--/|r-jr-/||r-+-/|||rjr/||||r+",
    "..r---/r-jr--/|r-jr-/||r-+-/|||rjr/||||r+",
    ".r----/rjr---/|rjr--/||rjr-/|||rjr/||||r+",
    "r-----/|r----/||r---/|||r--/||||r-/|||||r",
)
SEC7_PD_CROSSINGS = frozenset(
    {(3, 2), (3, 3), (2, 1), (2, 4), (1, 1), (1, 3), (1, 5)}
)


@pytest.fixture(scope="session")
def mbpds_by_n():
    return {n: list(enumerate_mbpd(n)) for n in range(1, 5)}


@pytest.fixture(scope="session")
def rcps_by_n():
    return {n: list(enumerate_rcp(n)) for n in range(1, 5)}


@pytest.fixture(scope="session")
def pds_by_n():
    return {n: list(enumerate_pd(n)) for n in range(1, 5)}
