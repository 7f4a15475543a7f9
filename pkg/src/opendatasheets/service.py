"""Local HTTP service backing the authoring wizard.

Stateless by construction: every response is a pure function of the
request body and the startup configuration (an optional policy file,
the upload cap, and the static asset directory). All JSON responses
are the canonical serializations of the corresponding library results,
so a file downloaded through the API is byte-identical to one produced
by the CLI.
"""

from __future__ import annotations

import importlib.resources
from pathlib import Path
from typing import Any, Dict, List, Optional

from fastapi import FastAPI, Request, UploadFile
from fastapi.responses import Response
from fastapi.staticfiles import StaticFiles
from starlette.middleware.cors import CORSMiddleware

from .canonical import canonical_json, serialize_datasheet, serialize_resource
from .errors import DatasheetError, InferenceError, ParseError
from .inference import InferenceConfig, infer_resource
from .model import new_template
from .parsing import datasheet_from_value, loads_strict
from .policy import Policy, evaluate_policy, policy_from_value, serialize_verdict
from .validation import serialize_report, validate_datasheet

LOCALHOST_ORIGIN_RE = r"https?://(localhost|127\.0\.0\.1)(:\d+)?"

TEMPLATE_NAME = "new-dataset"
TEMPLATE_TITLE = "New Dataset"


class ApiError(Exception):
    """Carries an HTTP status plus a machine-readable error body."""

    def __init__(self, status: int, code: str, message: str, issues: Optional[List[Dict]] = None):
        self.status = status
        self.code = code
        self.message = message
        self.issues = issues
        super().__init__(message)

    def to_value(self) -> Dict[str, Any]:
        body: Dict[str, Any] = {"status": self.status, "code": self.code, "message": self.message}
        if self.issues is not None:
            body["issues"] = self.issues
        return body


def _json_response(text: str, status: int = 200) -> Response:
    return Response(content=text, status_code=status, media_type="application/json")


def default_assets_dir() -> Path:
    return Path(str(importlib.resources.files("opendatasheets") / "static"))


def create_app(
    policy: Optional[Policy] = None,
    config: Optional[InferenceConfig] = None,
    assets_dir: Optional[Path] = None,
) -> FastAPI:
    cfg = config or InferenceConfig()
    app = FastAPI(title="opendatasheets", docs_url=None, redoc_url=None, openapi_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origin_regex=LOCALHOST_ORIGIN_RE,
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(ApiError)
    async def _api_error(_request: Request, exc: ApiError) -> Response:
        return _json_response(canonical_json(exc.to_value()), status=exc.status)

    @app.exception_handler(404)
    async def _not_found(_request: Request, _exc) -> Response:
        error = ApiError(404, "not-found", "unknown route")
        return _json_response(canonical_json(error.to_value()), status=404)

    async def _read_json_body(request: Request) -> Any:
        raw = await request.body()
        try:
            return loads_strict(raw.decode("utf-8"))
        except (UnicodeDecodeError, ParseError) as e:
            raise ApiError(400, "malformed-body", f"request body is not valid JSON: {e}")

    @app.get("/api/v1/template")
    async def get_template() -> Response:
        return _json_response(serialize_datasheet(new_template(TEMPLATE_NAME, TEMPLATE_TITLE)))

    @app.post("/api/v1/infer")
    async def post_infer(file: UploadFile) -> Response:
        data = await file.read(cfg.max_bytes + 1)
        if len(data) > cfg.max_bytes:
            raise ApiError(413, "payload-too-large",
                           f"upload exceeds the {cfg.max_bytes} byte limit")
        try:
            resource = infer_resource(file.filename or "upload", data, cfg)
        except InferenceError as e:
            raise ApiError(400, e.code, str(e))
        return _json_response(serialize_resource(resource))

    @app.post("/api/v1/validate")
    async def post_validate(request: Request) -> Response:
        value = await _read_json_body(request)
        try:
            datasheet = datasheet_from_value(value)
        except ParseError as e:
            raise ApiError(400, "invalid-datasheet", str(e))
        return _json_response(serialize_report(validate_datasheet(datasheet)))

    @app.post("/api/v1/evaluate")
    async def post_evaluate(request: Request) -> Response:
        value = await _read_json_body(request)
        if not isinstance(value, dict) or "datasheet" not in value:
            raise ApiError(400, "malformed-body", 'expected a JSON object with a "datasheet" key')
        try:
            datasheet = datasheet_from_value(value["datasheet"])
        except ParseError as e:
            raise ApiError(400, "invalid-datasheet", str(e))
        effective = policy
        if "policy" in value:
            try:
                effective = policy_from_value(value["policy"])
            except DatasheetError as e:
                raise ApiError(400, "invalid-policy", str(e))
        if effective is None:
            raise ApiError(400, "no-policy",
                           "no policy in the request and none configured on the server")
        return _json_response(serialize_verdict(evaluate_policy(datasheet, effective)))

    directory = assets_dir or default_assets_dir()
    if directory.is_dir():
        app.mount("/", StaticFiles(directory=str(directory), html=True), name="assets")

    return app


def run_server(
    port: int = 8080,
    host: str = "127.0.0.1",
    policy: Optional[Policy] = None,
    config: Optional[InferenceConfig] = None,
    assets_dir: Optional[Path] = None,
) -> None:
    import uvicorn

    uvicorn.run(create_app(policy, config, assets_dir), host=host, port=port)
