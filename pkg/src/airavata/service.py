"""HTTP facade over a trained model for the what-if UI and scripts.

The model snapshot is fixed at application build time; every handler is
a pure read. Request bodies are validated by hand so malformed input
always comes back as a 400 with an "error" field, never a 500 and never
a framework-shaped validation response.
"""

from __future__ import annotations

import json
import os
from typing import Sequence

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .errors import AiravataError
from .infogain import infogain_report
from .inference import query_marginal
from .network import Network
from . import domain


def _bad_request(message: str) -> JSONResponse:
    return JSONResponse(status_code=400, content={"error": message})


def build_app(
    model: Network | None = None,
    static_dir: str | None = None,
    cors_origins: Sequence[str] = (),
) -> FastAPI:
    if model is None:
        model = domain.canonical_model()
    model.require_valid()

    data = domain.generate_dataset()
    infogain_payload = {
        "target": domain.KNOWLEDGE,
        "bits": {
            name: bits
            for name, bits in infogain_report(data, domain.KNOWLEDGE, domain.ATTACKS)
        },
    }
    network_payload = {
        "variables": [
            {"name": v.name, "states": list(v.states)} for v in model.variables
        ],
        "edges": [[p, c] for p, c in model.edges],
        "adversaries": {
            str(k): list(allowed) for k, allowed in sorted(domain.ADVERSARIES.items())
        },
    }

    app = FastAPI(title="airavata", docs_url=None, redoc_url=None, openapi_url=None)

    if cors_origins:
        from fastapi.middleware.cors import CORSMiddleware

        app.add_middleware(
            CORSMiddleware,
            allow_origins=list(cors_origins),
            allow_methods=["*"],
            allow_headers=["*"],
        )

    @app.exception_handler(AiravataError)
    async def _domain_error(request: Request, exc: AiravataError) -> JSONResponse:
        return _bad_request(str(exc))

    @app.get("/api/network")
    async def get_network() -> dict:
        return network_payload

    @app.post("/api/query")
    async def post_query(request: Request):
        try:
            body = json.loads(await request.body())
        except (json.JSONDecodeError, UnicodeDecodeError):
            return _bad_request("request body is not valid json")
        if not isinstance(body, dict):
            return _bad_request("request body must be an object")
        unknown = sorted(set(body) - {"evidence", "target"})
        if unknown:
            return _bad_request(f"unknown fields {unknown}")
        evidence = body.get("evidence", {})
        if not isinstance(evidence, dict) or not all(
            isinstance(k, str) and isinstance(v, str) for k, v in evidence.items()
        ):
            return _bad_request("evidence must map variable names to state names")
        target = body.get("target", domain.KNOWLEDGE)
        if not isinstance(target, str):
            return _bad_request("target must be a variable name")
        posterior = query_marginal(model, [target], evidence)
        declared = [v.name for v in model.variables]
        return {
            "target": target,
            "evidence": {n: evidence[n] for n in declared if n in evidence},
            "posterior": posterior.as_mapping(),
        }

    @app.get("/api/rank")
    async def get_rank(request: Request):
        params = request.query_params
        adversary = params.get("adversary")
        target = params.get("target")
        if adversary not in {"1", "2", "3"}:
            return _bad_request("adversary must be 1, 2, or 3")
        if target not in domain.KNOWLEDGE_CLASSES:
            return _bad_request(
                f"target must be one of {list(domain.KNOWLEDGE_CLASSES)}"
            )
        ranking = domain.rank_combinations(model, int(adversary), target)
        return {
            "adversary": int(adversary),
            "target": target,
            "ranking": [
                {"attacks": list(r.attacks), "belief": r.belief} for r in ranking
            ],
        }

    @app.get("/api/infogain")
    async def get_infogain() -> dict:
        return infogain_payload

    if static_dir is not None and os.path.isdir(static_dir):
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app


def serve(
    model: Network | None = None,
    host: str = "127.0.0.1",
    port: int = 8000,
    static_dir: str | None = None,
    cors_origins: Sequence[str] = (),
) -> None:
    """Run the service until interrupted; a busy port raises at startup."""
    import uvicorn

    app = build_app(model, static_dir=static_dir, cors_origins=cors_origins)
    uvicorn.run(app, host=host, port=port, log_level="warning")
