"""Record HTTP fixtures for the UI tests.

Hits the service endpoints through an in-process client and writes the
raw response payloads under tests/fixtures/. Rerun whenever the model
or the API shape changes:

    python3 frontend/scripts/record_fixtures.py
"""

import json
from pathlib import Path

from fastapi.testclient import TestClient

from airavata.service import build_app
from airavata import domain

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"


def main() -> None:
    client = TestClient(build_app())
    FIXTURES.mkdir(parents=True, exist_ok=True)

    (FIXTURES / "network.json").write_bytes(client.get("/api/network").content + b"\n")
    (FIXTURES / "infogain.json").write_bytes(client.get("/api/infogain").content + b"\n")

    queries = []
    for index in range(1, 2 ** len(domain.ATTACKS)):
        bits = {
            attack: (index >> (len(domain.ATTACKS) - 1 - i)) & 1
            for i, attack in enumerate(domain.ATTACKS)
        }
        combo = [a for a in domain.ATTACKS if bits[a]]
        body = {"evidence": domain.attack_evidence(combo)}
        response = client.post("/api/query", json=body)
        response.raise_for_status()
        queries.append({"request": body, "response": response.json()})
    (FIXTURES / "queries.json").write_text(json.dumps(queries, indent=2) + "\n")

    rankings = {}
    for adversary in ("1", "2", "3"):
        response = client.get(
            "/api/rank", params={"adversary": adversary, "target": "high"}
        )
        response.raise_for_status()
        rankings[adversary] = response.json()
    (FIXTURES / "rank.json").write_text(json.dumps(rankings, indent=2) + "\n")

    print(f"wrote fixtures to {FIXTURES}")


if __name__ == "__main__":
    main()
