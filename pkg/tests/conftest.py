import functools

import pytest

from truthsem.fixpoint import analyze
from truthsem.gen import random_theories
from truthsem.theoryfile import load_theory

PARADOX_THEORIES = ("liar", "strong_liar", "truthteller", "curry", "logician")
N_RANDOM = 100
RANDOM_SEED = 20261019


@functools.lru_cache(maxsize=None)
def bundled(name):
    th = load_theory(name)
    return th, analyze(th)


@functools.lru_cache(maxsize=None)
def random_corpus(count=N_RANDOM, seed=RANDOM_SEED, max_core=8):
    return tuple(random_theories(count, seed=seed, max_core=max_core))


@pytest.fixture(params=PARADOX_THEORIES + ("grounded",))
def bundled_report(request):
    return bundled(request.param)[1]
