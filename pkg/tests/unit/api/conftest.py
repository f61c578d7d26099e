import pytest
from fastapi import FastAPI
from fastapi.testclient import TestClient

from coprime_divisor import divisor_router


@pytest.fixture
def divisor_test_app() -> FastAPI:
    """Fixture to create a FastAPI app with the divisor router for testing."""
    app = FastAPI()
    app.include_router(divisor_router, prefix='/coprime-divisor')
    return app


@pytest.fixture
def divisor_testclient(divisor_test_app: FastAPI) -> TestClient:
    """Fixture to create a TestClient for the FastAPI app."""
    return TestClient(divisor_test_app)
