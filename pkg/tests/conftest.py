import json
from functools import lru_cache
from pathlib import Path

import pytest

from fonerep import monoid

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@lru_cache(maxsize=None)
def load(name: str) -> monoid.GLinearMonoid:
    return monoid.monoid_from_json(json.loads((FIXTURES / f"{name}.json").read_text()))


SMALL = ["i1_f1", "i1_z2", "i1_z3", "i2_f1", "i2_z2", "i2_z3", "i3_f1",
         "null1", "null2", "null3",
         "path_a2", "path_a3", "path_a3_zero", "path_point", "path_kronecker"]
PATHS = ["path_a2", "path_a3", "path_a3_zero", "path_point", "path_kronecker"]


@pytest.fixture(params=SMALL)
def small_monoid(request):
    return load(request.param)
