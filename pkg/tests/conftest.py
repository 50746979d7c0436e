import random
from pathlib import Path

import pytest

from softmatrix import load_multiset, validate

FIXTURES = Path(__file__).parent / "fixtures"

# filled by test_acceptance, printed in the terminal summary
ACCEPTANCE_RESULTS: dict[str, bool] = {}


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


@pytest.fixture(scope="session")
def ms_a():
    return load_multiset(FIXTURES / "wedding_a.json")


@pytest.fixture(scope="session")
def ms_b():
    return load_multiset(FIXTURES / "wedding_b.json")


def random_structure(rng: random.Random, max_universes=3, max_elems=5, max_params=5):
    n_univ = rng.randint(1, max_universes)
    universes, parameters = [], []
    for i in range(1, n_univ + 1):
        m = rng.randint(1, max_elems)
        n = rng.randint(1, max_params)
        universes.append({"id": f"U{i}", "elements": [f"u{i}_{r}" for r in range(1, m + 1)]})
        parameters.append({"universe": f"U{i}", "names": [f"e{i}_{c}" for c in range(1, n + 1)]})
    return universes, parameters


def random_choices(rng: random.Random, universes, parameters, max_choices=8, density=0.5, prefix="a"):
    choices, seen = [], set()
    for _ in range(rng.randint(0, max_choices)):
        coords = tuple(rng.choice(p["names"]) for p in parameters)
        if coords in seen:
            continue
        seen.add(coords)
        approx = [[e for e in u["elements"] if rng.random() < density] for u in universes]
        choices.append({"name": f"{prefix}{len(choices) + 1}", "params": list(coords), "approx": approx})
    return choices


def random_pair(rng: random.Random, **kw):
    universes, parameters = random_structure(rng, **kw)
    a = validate(universes, parameters, random_choices(rng, universes, parameters, density=rng.random()))
    b = validate(universes, parameters, random_choices(rng, universes, parameters, density=rng.random(), prefix="b"))
    return a, b


def random_lists(rng: random.Random, m: int, n: int, density: float = 0.5):
    return [[int(rng.random() < density) for _ in range(n)] for _ in range(m)]


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok in ACCEPTANCE_RESULTS.items():
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}")
