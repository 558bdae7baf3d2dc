# tests/conftest.py
from __future__ import annotations

import pytest

from supersat import create_app
from supersat.models import Graph
from supersat.utils.graph_io import write_edge_list


@pytest.fixture
def app():
    return create_app({"TESTING": True, "RATELIMIT_ENABLED": False, "WORKERS": 1})


@pytest.fixture
def client(app):
    return app.test_client()


@pytest.fixture
def graph_file(tmp_path):
    def write(graph: Graph, name: str = "g.txt") -> str:
        path = tmp_path / name
        path.write_text(write_edge_list(graph), encoding="ascii")
        return str(path)

    return write
