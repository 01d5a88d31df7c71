"""Regenerate fixtures/ deterministically: python3 tools/make_fixtures.py"""

import sys
from pathlib import Path

from fonerep import monoid
from fonerep.cli import dump
from fonerep.errors import FoneRepError
from fonerep.fvect import PointedGroup

ROOT = Path(__file__).resolve().parent.parent / "fixtures"

GROUPS = {"f1": [], "z2": [2], "z3": [3]}

QUIVERS = {
    "a2": {"vertices": ["e", "f"], "arrows": [{"name": "a", "source": "e", "target": "f"}], "relations": []},
    "a3": {"vertices": ["e", "f", "g"],
           "arrows": [{"name": "a", "source": "e", "target": "f"},
                      {"name": "b", "source": "f", "target": "g"}], "relations": []},
    "a3_zero": {"vertices": ["e", "f", "g"],
                "arrows": [{"name": "a", "source": "e", "target": "f"},
                           {"name": "b", "source": "f", "target": "g"}],
                "relations": [{"lhs": ["a", "b"], "rhs": None}]},
    "point": {"vertices": ["e"], "arrows": [], "relations": []},
    "kronecker": {"vertices": ["e", "f"],
                  "arrows": [{"name": "a", "source": "e", "target": "f"},
                             {"name": "b", "source": "e", "target": "f"}], "relations": []},
}

# candidate tables from the two counterexamples; both fail the associativity audit
CANDIDATES = {
    "brandt_ce": {"vertices": ["e", "f"],
                  "arrows": [{"name": "beta", "source": "e", "target": "f"},
                             {"name": "alpha", "source": "f", "target": "e"}],
                  "relations": [{"lhs": ["alpha", "beta"], "rhs": "f"},
                                {"lhs": ["beta", "alpha"], "rhs": None}]},
    "lr_ce": {"vertices": ["e", "f"],
              "arrows": [{"name": "gamma", "source": "e", "target": "f"},
                         {"name": "alpha", "source": "f", "target": "e"},
                         {"name": "beta", "source": "f", "target": "e"}],
              "relations": [{"lhs": ["alpha", "gamma"], "rhs": "f"},
                            {"lhs": ["beta", "gamma"], "rhs": "f"},
                            {"lhs": ["gamma", "alpha"], "rhs": None},
                            {"lhs": ["gamma", "beta"], "rhs": None}]},
}


def zero_band(kind):
    """{1, e, f, 0} with xy = y (right) or xy = x (left) on {e, f}: regular, not inverse."""
    names = ["1", "e", "f"]
    mult = []
    for a in names:
        for b in names:
            r = b if a == "1" else a if b == "1" else (b if kind == "right" else a)
            mult.append({"l": a, "r": b, "res": {"g": [], "b": r}})
    return monoid.monoid_from_json({"group": [], "basis": names, "one": "1", "mult": mult}).to_json()


def write(name, obj):
    (ROOT / name).write_text(dump(obj) + "\n")


def main():
    ROOT.mkdir(exist_ok=True)
    for n in (1, 2, 3):
        for gname, orders in GROUPS.items():
            write(f"i{n}_{gname}.json", monoid.symmetric_inverse_monoid(n, PointedGroup(orders)).to_json())
    for n in (1, 2, 3):
        write(f"null{n}.json", monoid.null_monoid(n, PointedGroup([])).to_json())
    for name, q in QUIVERS.items():
        write(f"quiver_{name}.json", q)
        write(f"path_{name}.json", monoid.path_monoid(monoid.Quiver.from_json(q), PointedGroup([])).to_json())
    write("band_right_zero.json", zero_band("right"))
    write("band_left_zero.json", zero_band("left"))
    for name, q in CANDIDATES.items():
        try:
            monoid.path_monoid(monoid.Quiver.from_json(q), PointedGroup([]))
            audit = {"consistent": True}
        except FoneRepError as exc:
            audit = {"consistent": False, "error": exc.to_json()}
        write(f"quiver_{name}.json", q)
        write(f"audit_{name}.json", audit)
    return 0


if __name__ == "__main__":
    sys.exit(main())
