"""Stateless HTTP/JSON facade over the library for the web explorer.

Every graph-scoped response echoes the canonical literal it computed
from.  Jump lists in paths must be canonical (sorted, reduced); any
other spelling of the same set is 301-redirected to the canonical URL.
Input errors map to machine codes: bad-jumps, bad-m, bad-t, bad-x,
bad-family (all 400) and order-too-large (422).
"""

from __future__ import annotations

import warnings
from pathlib import Path

from fastapi import Body, FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, RedirectResponse

from .adams import UnitMultiplier, adams_image, type1_set, units
from .core import CirculantGraph, InputError, reflexive_reduce
from .families import gen_np3
from .oracle import OrderBoundError, classify_pair
from .theta import (
    ThetaTransform,
    classify_theta,
    theta_exact_image,
    type2_set,
    vertex_permutation,
)


class ApiError(Exception):
    """Input failure with a fixed machine code and HTTP status."""

    def __init__(self, status: int, code: str, message: str):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message


def _parse_order(segment: str) -> int:
    text = segment[1:] if segment[:1] in ("C", "c") else segment
    if not text.isdigit():
        raise ApiError(400, "bad-jumps", f"bad order segment {segment!r}")
    return int(text)


def _parse_jump_segment(raw: str) -> tuple[int, ...]:
    parts = raw.split(",")
    if not parts or not all(p.isdigit() for p in parts):
        raise ApiError(400, "bad-jumps", f"bad jump list {raw!r}")
    return tuple(int(p) for p in parts)


def _require_int(value: str | None, code: str, name: str) -> int:
    if value is None:
        raise ApiError(400, code, f"missing query parameter {name}")
    stripped = value.lstrip("-")
    if not stripped.isdigit():
        raise ApiError(400, code, f"{name} must be an integer, got {value!r}")
    return int(value)


def _graph_payload(graph: CirculantGraph) -> dict:
    n = graph.order
    return {
        "graph": str(graph),
        "n": n,
        "jumps": list(graph.jumps.values),
        "full": graph.full_literal(),
        "degree": graph.degree,
        "edge_count": graph.edge_count,
        "simple_edge_count": graph.simple_edge_count,
        "divisors": [m for m in range(2, n // 2 + 1) if n % m == 0],
        "units": [u.x for u in units(n)],
    }


def create_app(static_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="circlab", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(ApiError)
    async def _api_error(request: Request, exc: ApiError):
        return JSONResponse(
            {"code": exc.code, "message": exc.message}, status_code=exc.status
        )

    def graph_or_redirect(segment: str, jumps: str, request: Request):
        n = _parse_order(segment)
        values = _parse_jump_segment(jumps)
        try:
            reduced = reflexive_reduce(values, n)
        except InputError as exc:
            raise ApiError(400, "bad-jumps", str(exc))
        if values != reduced.values:
            canonical = ",".join(str(v) for v in reduced.values)
            suffix = request.url.path.rstrip("/").rsplit("/", 1)[-1]
            url = f"/api/graph/{segment}/{canonical}/{suffix}"
            if request.url.query:
                url = f"{url}?{request.url.query}"
            return RedirectResponse(url, status_code=301)
        return CirculantGraph(reduced)

    @app.get("/api/health")
    def health():
        return {"ok": True}

    @app.post("/api/graph")
    def graph_info(payload: dict = Body(...)):
        n = payload.get("n")
        jumps = payload.get("jumps")
        if not isinstance(n, int) or not isinstance(jumps, list):
            raise ApiError(400, "bad-jumps", "body must carry integer n and jump list")
        try:
            graph = CirculantGraph(reflexive_reduce(jumps, n))
        except (InputError, TypeError) as exc:
            raise ApiError(400, "bad-jumps", str(exc))
        return _graph_payload(graph)

    @app.get("/api/graph/{segment}/{jumps}/type1")
    def graph_type1(segment: str, jumps: str, request: Request):
        got = graph_or_redirect(segment, jumps, request)
        if isinstance(got, RedirectResponse):
            return got
        return {"graph": str(got), **type1_set(got).to_json()}

    @app.get("/api/graph/{segment}/{jumps}/type2")
    def graph_type2(segment: str, jumps: str, request: Request, m: str | None = None):
        got = graph_or_redirect(segment, jumps, request)
        if isinstance(got, RedirectResponse):
            return got
        m_val = _require_int(m, "bad-m", "m")
        if m_val < 2 or got.order % m_val != 0:
            raise ApiError(400, "bad-m", f"m={m_val} is not a divisor >= 2 of {got.order}")
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            result = type2_set(got, m_val)
        return {
            "graph": str(got),
            **result.to_json(),
            "notes": [str(w.message) for w in caught],
        }

    @app.get("/api/graph/{segment}/{jumps}/theta")
    def graph_theta(
        segment: str,
        jumps: str,
        request: Request,
        m: str | None = None,
        t: str | None = None,
    ):
        got = graph_or_redirect(segment, jumps, request)
        if isinstance(got, RedirectResponse):
            return got
        n = got.order
        m_val = _require_int(m, "bad-m", "m")
        if m_val < 2 or n % m_val != 0:
            raise ApiError(400, "bad-m", f"m={m_val} is not a divisor >= 2 of {n}")
        t_val = _require_int(t, "bad-t", "t")
        if not 0 <= t_val <= n // m_val - 1:
            raise ApiError(400, "bad-t", f"t={t_val} outside [0, {n // m_val - 1}]")
        transform = ThetaTransform(n, m_val, t_val)
        image = theta_exact_image(got, transform)
        cls = classify_theta(got, transform)
        literal = (
            str(CirculantGraph(image.circulant_jumps)) if image.is_circulant else None
        )
        return {
            "graph": str(got),
            **image.to_json(),
            "literal": literal,
            "classification": cls.tag.lower(),
            "detail": cls.to_json(),
            "permutation": list(vertex_permutation(transform)),
        }

    @app.get("/api/graph/{segment}/{jumps}/adam")
    def graph_adam(segment: str, jumps: str, request: Request, x: str | None = None):
        got = graph_or_redirect(segment, jumps, request)
        if isinstance(got, RedirectResponse):
            return got
        x_val = _require_int(x, "bad-x", "x")
        try:
            unit = UnitMultiplier(got.order, x_val)
        except InputError as exc:
            raise ApiError(400, "bad-x", str(exc))
        image = adams_image(got, unit)
        badge = "Identical" if image.jumps == got.jumps else "Adams"
        return {
            "graph": str(got),
            "x": x_val,
            "jumps": list(image.jumps.values),
            "literal": str(image),
            "badge": badge,
        }

    @app.post("/api/classify")
    def classify(payload: dict = Body(...)):
        n = payload.get("n")
        if not isinstance(n, int):
            raise ApiError(400, "bad-jumps", "body must carry integer n")
        graphs = []
        for key in ("a", "b"):
            jumps = payload.get(key)
            if not isinstance(jumps, list):
                raise ApiError(400, "bad-jumps", f"body must carry jump list {key!r}")
            try:
                graphs.append(CirculantGraph(reflexive_reduce(jumps, n)))
            except (InputError, TypeError) as exc:
                raise ApiError(400, "bad-jumps", str(exc))
        a, b = graphs
        try:
            cls = classify_pair(a, b)
        except OrderBoundError as exc:
            raise ApiError(422, "order-too-large", str(exc))
        return {"a": str(a), "b": str(b), **cls.to_json()}

    @app.get("/api/families/np3")
    def families_np3(p: str | None = None, n: str | None = None):
        p_val = _require_int(p, "bad-family", "p")
        n_val = _require_int(n, "bad-family", "n")
        try:
            fams = gen_np3(p_val, n_val)
        except InputError as exc:
            raise ApiError(400, "bad-family", str(exc))
        return {"p": p_val, "n": n_val, "families": [f.to_json() for f in fams]}

    if static_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="ui")

    return app
