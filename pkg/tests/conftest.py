"""Shared fixtures.  Gallery coproducts are built once per session; their caches
make repeated checks cheap."""
import sys

import pytest
from hypothesis import HealthCheck, settings

from nucoprod.gallery.registry import build

settings.register_profile("repo", deadline=None, derandomize=True, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")


@pytest.fixture(scope="session")
def gallery():
    cache = {}

    def get(name, **params):
        key = (name, tuple(sorted(params.items())))
        if key not in cache:
            cache[key] = build(name, **params)
        return cache[key]

    return get


@pytest.fixture(scope="session")
def s3(gallery):
    return gallery("group:S3").cp


@pytest.fixture(scope="session")
def zgroup(gallery):
    return gallery("group:Z").cp


@pytest.fixture(scope="session")
def f2(gallery):
    return gallery("group:F2").cp


@pytest.fixture(scope="session")
def matrix_cp(gallery):
    return gallery("matrix").cp


def pytest_terminal_summary(terminalreporter):
    for mod in list(sys.modules.values()):
        lines = getattr(mod, "summary_lines", None)
        if callable(lines) and getattr(mod, "RESULTS", None):
            terminalreporter.section("acceptance criteria")
            for line in lines():
                terminalreporter.write_line(line)
            break
