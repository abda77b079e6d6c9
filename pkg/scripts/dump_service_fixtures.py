"""Capture real service responses as JSON fixtures for the frontend tests.

Run from the repository root after installing the package:

    python3 scripts/dump_service_fixtures.py
"""

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from fastapi.testclient import TestClient

from circlab.service import create_app

FIXTURES = Path(__file__).resolve().parent.parent / "frontend" / "tests" / "fixtures"

GET_ROUTES = {
    "theta_C27_m3_t1.json": "/api/graph/C27/1,3,8,10/theta?m=3&t=1",
    "theta_C27_m3_t2.json": "/api/graph/C27/1,3,8,10/theta?m=3&t=2",
    "adam_C27_x2.json": "/api/graph/C27/1,3,8,10/adam?x=2",
    "adam_C27_x4.json": "/api/graph/C27/1,3,8,10/adam?x=4",
    "theta_C16_m2_t1.json": "/api/graph/C16/2,3,5/theta?m=2&t=1",
    "theta_C4_m2_t1.json": "/api/graph/C4/1,2/theta?m=2&t=1",
    "theta_C4_m2_t0.json": "/api/graph/C4/1,2/theta?m=2&t=0",
    "adam_C4_x3.json": "/api/graph/C4/1,2/adam?x=3",
    "error_bad_m.json": "/api/graph/C27/1,3,8,10/theta?m=5&t=1",
}

POST_ROUTES = {
    "graph_C27_1-3-8-10.json": {"n": 27, "jumps": [1, 3, 8, 10]},
    "graph_C16_2-3-5.json": {"n": 16, "jumps": [2, 3, 5]},
    "graph_C4_1-2.json": {"n": 4, "jumps": [1, 2]},
}


def main() -> None:
    FIXTURES.mkdir(parents=True, exist_ok=True)
    client = TestClient(create_app())
    for name, route in GET_ROUTES.items():
        response = client.get(route)
        payload = {"status": response.status_code, "body": response.json()}
        (FIXTURES / name).write_text(json.dumps(payload, indent=2) + "\n")
        print(f"{name}: {response.status_code} {route}")
    for name, body in POST_ROUTES.items():
        response = client.post("/api/graph", json=body)
        payload = {"status": response.status_code, "body": response.json()}
        (FIXTURES / name).write_text(json.dumps(payload, indent=2) + "\n")
        print(f"{name}: {response.status_code} POST /api/graph {body}")


if __name__ == "__main__":
    main()
