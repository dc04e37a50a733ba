from __future__ import annotations


def pytest_addoption(parser):
    parser.addoption(
        "--seed",
        type=int,
        default=20260825,
        help="base seed for the randomized property tests",
    )


import pytest


@pytest.fixture
def seed(request):
    return request.config.getoption("--seed")
