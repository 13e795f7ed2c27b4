import os
import tempfile

# logs dos testes fora da árvore do projeto; precisa valer antes do primeiro import de config
os.environ.setdefault("LOG_DIR", tempfile.mkdtemp(prefix="path_engine_logs_"))

import pytest

from paths.terms import Atom, generator


@pytest.fixture
def points():
    return Atom("a"), Atom("b"), Atom("c")


@pytest.fixture
def leaves(points):
    """p: a→b, q: b→c, r: a→b (paralela a p)"""
    a, b, c = points
    return generator("p", a, b), generator("q", b, c), generator("r", a, b)
