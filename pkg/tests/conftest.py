import itertools
from collections import Counter

import pytest


def brute_fixed_points(n):
    """Fixed-point histogram via itertools, independent of the package enumerator."""
    c = Counter(sum(i == v for i, v in enumerate(p)) for p in itertools.permutations(range(n)))
    return [c[k] for k in range(n + 1)]


def brute_ascents(n):
    c = Counter(sum(p[i] < p[i + 1] for i in range(n - 1)) for p in itertools.permutations(range(n)))
    return [c[k] for k in range(max(n, 1))]


def brute_cycles(n):
    def cycles(p):
        seen, out = set(), 0
        for s in range(n):
            if s not in seen:
                out += 1
                while s not in seen:
                    seen.add(s)
                    s = p[s]
        return out

    c = Counter(cycles(p) for p in itertools.permutations(range(n)))
    return [c[k] for k in range(n + 1)]


def brute_partitions(n):
    """Block-count histogram by recursive insertion of each element."""

    def parts(elems):
        if not elems:
            yield []
            return
        first, rest = elems[0], elems[1:]
        for p in parts(rest):
            yield [[first]] + p
            for i in range(len(p)):
                yield p[:i] + [[first] + p[i]] + p[i + 1:]

    c = Counter(len(p) for p in parts(list(range(n))))
    return [c[k] for k in range(n + 1)]


@pytest.fixture(scope="session")
def brute():
    return {
        "fixed": brute_fixed_points,
        "ascents": brute_ascents,
        "cycles": brute_cycles,
        "partitions": brute_partitions,
    }


_ACCEPTANCE_KEY = pytest.StashKey[list]()


@pytest.fixture
def acceptance_log(request):
    """Append (criterion, description, passed, detail) for the terminal summary."""
    log = request.config.stash.setdefault(_ACCEPTANCE_KEY, [])
    return log.append


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    log = config.stash.get(_ACCEPTANCE_KEY, None)
    if not log:
        return
    terminalreporter.section("acceptance criteria")
    for num, desc, ok, detail in sorted(log, key=lambda e: e[0]):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {num:>2}. {desc} ({detail})")
