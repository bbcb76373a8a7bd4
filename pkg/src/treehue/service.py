"""Stateless HTTP/JSON facade over palette generation and metrics.

Endpoints: POST /api/palette, GET /api/presets, GET /api/health.
Errors use {"error": code, "detail": text} with codes E_PARSE, E_CONFIG
and E_TOO_LARGE (HTTP 413 for oversized trees).
"""

from __future__ import annotations

import json

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .hierarchy import ParseError, SizeLimitError, from_dict
from .metrics import compute_report
from .treecolors import (
    ConfigError,
    PaletteConfig,
    assign_colors,
    list_presets,
    parse_preset_label,
)


def _error(status: int, code: str, detail: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"error": code, "detail": detail})


def create_app(cors: bool = True) -> FastAPI:
    app = FastAPI(title="treehue", docs_url=None, redoc_url=None)
    if cors:
        from fastapi.middleware.cors import CORSMiddleware

        app.add_middleware(
            CORSMiddleware,
            allow_origins=["*"],
            allow_methods=["*"],
            allow_headers=["*"],
        )

    presets = list_presets()  # immutable, shared across requests

    @app.get("/api/health")
    def health():
        return JSONResponse(content="ok")

    @app.get("/api/presets")
    def get_presets():
        return presets

    @app.post("/api/palette")
    async def palette(request: Request):
        try:
            body = json.loads(await request.body())
        except (json.JSONDecodeError, UnicodeDecodeError) as exc:
            return _error(400, "E_PARSE", f"invalid JSON body: {exc}")
        if not isinstance(body, dict) or "hierarchy" not in body:
            return _error(400, "E_PARSE", "body must be an object with 'hierarchy'")
        try:
            h = from_dict(body["hierarchy"])
        except SizeLimitError as exc:
            return _error(413, "E_TOO_LARGE", str(exc))
        except ParseError as exc:
            return _error(400, "E_PARSE", str(exc))
        try:
            if "preset" in body and body["preset"] is not None:
                if "config" in body and body["config"] is not None:
                    return _error(
                        400, "E_CONFIG", "give either 'config' or 'preset', not both"
                    )
                label = body["preset"]
                if isinstance(label, (list, tuple)):
                    label = ",".join(label)
                cfg = parse_preset_label(label)
            elif "config" in body and body["config"] is not None:
                cfg = PaletteConfig.from_dict(body["config"])
            else:
                cfg = PaletteConfig()
        except ConfigError as exc:
            return _error(400, "E_CONFIG", str(exc))
        background_l = body.get("background_l", 100.0)
        if not isinstance(background_l, (int, float)) or not 0 <= background_l <= 100:
            return _error(400, "E_CONFIG", "background_l must lie in [0, 100]")
        assignment = assign_colors(h, cfg)
        report = compute_report(assignment, background_l=float(background_l))
        return {"palette": assignment.to_dict(), "metrics": report.to_dict()}

    return app


app = create_app()
