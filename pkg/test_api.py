# === test_api.py ===
"""
HTTP surface tests, run in-process with FastAPI's TestClient.
"""

import numpy as np
import pytest
from fastapi.testclient import TestClient

from api.app import app
from api.schemas.transform_schema import ComplexArray
from core.funcs import DirichletSpec, dirichlet
from core.grid import DimSpec, natural_sample_points

BASE_URL = "/api/v1"

client = TestClient(app)


def payload(values):
    return ComplexArray.from_numpy(values).model_dump()


def values(body):
    return ComplexArray(**body).to_numpy()


def test_root_and_health():
    response = client.get("/")
    assert response.status_code == 200
    assert response.json()["docs"] == "/docs"
    assert client.get("/health").json() == {"status": "healthy"}


def test_ffs_of_dirichlet():
    t = natural_sample_points(DimSpec(period=1.0, center=0.0, bandwidth=5, sample_count=7))
    samples = dirichlet(t, DirichletSpec(period=1.0, bandwidth=5))
    grid = {"period": [1.0], "center": [0.0], "bandwidth": [5], "sample_count": [7]}
    response = client.post(f"{BASE_URL}/ffs", json={"grid": grid, "samples": payload(samples)})
    assert response.status_code == 200
    body = response.json()
    assert body["trimmed"] is True
    np.testing.assert_allclose(values(body["coefficients"]), np.ones(5), atol=1e-12)

    padded = client.post(f"{BASE_URL}/ffs", json={"grid": grid, "samples": payload(samples), "trim": False})
    assert padded.json()["coefficients"]["shape"] == [7]


def test_iffs_accepts_trimmed_coefficients():
    grid = {"period": [1.0], "bandwidth": [3], "sample_count": [4]}
    response = client.post(f"{BASE_URL}/iffs", json={"grid": grid, "coefficients": payload([0, 1, 0]), "order": "natural"})
    assert response.status_code == 200
    body = response.json()
    assert body["order"] == "natural"
    np.testing.assert_allclose(values(body["samples"]), np.ones(4), atol=1e-13)


def test_interp_of_dc_term():
    request = {
        "coefficients": payload(np.array([[0, 0, 0], [0, 2, 0], [0, 0, 0]])),
        "periods": [1.0, 2.0],
        "intervals": [{"a": 0.0, "b": 0.5, "m": 4}, {"a": -1.0, "b": 1.0, "m": 3}],
    }
    response = client.post(f"{BASE_URL}/interp", json=request)
    assert response.status_code == 200
    body = response.json()
    np.testing.assert_allclose(values(body["samples"]), np.full((4, 3), 2.0), atol=1e-13)
    assert body["points"][1] == pytest.approx([-1.0, 0.0, 1.0])


def test_convolve_constants_in_integral_mode():
    grid = {"period": [2.0], "bandwidth": [3], "sample_count": [5]}
    request = {"grid": grid, "f": payload(np.full(5, 2.0)), "h": payload(np.full(5, 3.0)), "scale": "integral"}
    response = client.post(f"{BASE_URL}/convolve", json=request)
    assert response.status_code == 200
    np.testing.assert_allclose(values(response.json()["samples"]), np.full(5, 12.0), atol=1e-12)


def test_verify_endpoint():
    body = client.post(f"{BASE_URL}/verify", json={"suite": "czt", "cases": 3}).json()
    assert body["passed"] is True
    assert body["counts"] == {"czt": [3, 3]}

    body = client.post(f"{BASE_URL}/verify", json={"suite": "ffs", "cases": 2, "perturb": True}).json()
    assert body["passed"] is False
    assert body["first_failure"]["suite"] == "ffs"


def test_parameter_errors_are_400():
    even = {"period": [1.0], "bandwidth": [4], "sample_count": [5]}
    response = client.post(f"{BASE_URL}/ffs", json={"grid": even, "samples": payload(np.ones(5))})
    assert response.status_code == 400

    grid = {"period": [1.0], "bandwidth": [3], "sample_count": [5]}
    response = client.post(f"{BASE_URL}/ffs", json={"grid": grid, "samples": payload(np.ones(4))})
    assert response.status_code == 400

    response = client.post(f"{BASE_URL}/verify", json={"suite": "nope"})
    assert response.status_code == 400


def test_schema_violations_are_422():
    grid = {"period": [1.0], "bandwidth": [3], "sample_count": [5]}
    broken = {"shape": [5], "real": [1.0] * 5, "imag": [0.0] * 4}
    assert client.post(f"{BASE_URL}/ffs", json={"grid": grid, "samples": broken}).status_code == 422

    request = {"coefficients": payload([1.0]), "periods": [1.0], "intervals": [{"a": 0.0, "b": 1.0, "m": 1}]}
    assert client.post(f"{BASE_URL}/interp", json=request).status_code == 422
