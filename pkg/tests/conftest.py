from __future__ import annotations

import pytest
from click.testing import CliRunner
from fastapi.testclient import TestClient

from foresight.api import create_app
from foresight.service import PortfolioService
from foresight.store import PortfolioStore, save

from util import golden_portfolio


@pytest.fixture(scope="session")
def golden():
    return golden_portfolio()


@pytest.fixture
def golden_path(golden, tmp_path):
    path = tmp_path / "portfolio.json"
    save(golden, path)
    return path


@pytest.fixture
def golden_service(golden_path):
    return PortfolioService(PortfolioStore.open(golden_path))


@pytest.fixture
def client(golden_path):
    app = create_app(golden_path)
    with TestClient(app) as test_client:
        yield test_client


@pytest.fixture
def empty_client(tmp_path):
    app = create_app(tmp_path / "empty.json", create_if_missing=True)
    with TestClient(app) as test_client:
        yield test_client


@pytest.fixture
def runner():
    return CliRunner()
