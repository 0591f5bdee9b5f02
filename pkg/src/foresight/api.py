"""HTTP JSON API over one portfolio file.

Every mutation persists through the store before the response goes out.
Simulations and reads run concurrently; the store's single writer
serializes mutations, so health checks and what-if runs never wait on a
long write.
"""

from __future__ import annotations

from pathlib import Path
from typing import Optional

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import ValidationError
from starlette.exceptions import HTTPException as StarletteHTTPException

from .errors import (
    ConfigurationError,
    DomainValidationError,
    EventConsistencyError,
    ForesightError,
    IllegalTransitionError,
    NotFoundError,
    StoreError,
)
from .model import Idea, InnovationCategory, StageState
from .schemas import (
    AdvanceRequest,
    AdvanceResponse,
    AllocationResponse,
    ApiError,
    CivpsResponse,
    CompositeValueReport,
    HealthResponse,
    HistoryResponse,
    IdeaCreateRequest,
    IdeaDetailResponse,
    IdeaListResponse,
    QuadrantsResponse,
    ScorecardCreateRequest,
    SimulateRequest,
    SimulateResponse,
    SweepRequest,
    SweepResponse,
)
from .service import PortfolioService
from .store import PortfolioStore

_ERROR_MAP: tuple[tuple[type[ForesightError], int, str], ...] = (
    (IllegalTransitionError, 409, "ILLEGAL_TRANSITION"),
    (EventConsistencyError, 409, "ILLEGAL_TRANSITION"),
    (NotFoundError, 404, "NOT_FOUND"),
    (ConfigurationError, 400, "CONFIG"),
    (DomainValidationError, 400, "VALIDATION"),
    (StoreError, 500, "INTERNAL"),
)


def _to_api_error(exc: ForesightError) -> ApiError:
    for klass, status, code in _ERROR_MAP:
        if isinstance(exc, klass):
            path = getattr(exc, "path", None)
            return ApiError(status=status, code=code, message=str(exc), path=path)
    return ApiError(status=500, code="INTERNAL", message=str(exc))


def _error_response(error: ApiError) -> JSONResponse:
    return JSONResponse(status_code=error.status, content=error.model_dump(mode="json"))


def create_app(
    portfolio_path: str | Path,
    *,
    create_if_missing: bool = False,
    service: Optional[PortfolioService] = None,
) -> FastAPI:
    """Build the service around one portfolio file (or an injected service)."""
    if service is None:
        store = PortfolioStore.open(portfolio_path, create_if_missing=create_if_missing)
        service = PortfolioService(store)

    app = FastAPI(title="foresight", version="0.1.0")
    app.state.service = service

    @app.exception_handler(ForesightError)
    async def handle_domain_error(request: Request, exc: ForesightError) -> JSONResponse:
        return _error_response(_to_api_error(exc))

    @app.exception_handler(ValidationError)
    async def handle_model_validation(
        request: Request, exc: ValidationError
    ) -> JSONResponse:
        first = exc.errors()[0]
        path = "/" + "/".join(str(piece) for piece in first["loc"])
        return _error_response(
            ApiError(status=400, code="VALIDATION", message=first["msg"], path=path)
        )

    @app.exception_handler(RequestValidationError)
    async def handle_request_validation(
        request: Request, exc: RequestValidationError
    ) -> JSONResponse:
        first = exc.errors()[0] if exc.errors() else {}
        path = "/" + "/".join(str(piece) for piece in first.get("loc", ()) if piece != "body")
        message = "; ".join(
            f"{'/'.join(str(p) for p in err['loc'])}: {err['msg']}" for err in exc.errors()
        )
        return _error_response(
            ApiError(status=422, code="VALIDATION", message=message, path=path or None)
        )

    @app.exception_handler(StarletteHTTPException)
    async def handle_http_error(
        request: Request, exc: StarletteHTTPException
    ) -> JSONResponse:
        code = "NOT_FOUND" if exc.status_code == 404 else "VALIDATION"
        return _error_response(
            ApiError(status=exc.status_code, code=code, message=str(exc.detail))
        )

    @app.post("/ideas", response_model=Idea, status_code=201)
    def create_idea(request: IdeaCreateRequest) -> Idea:
        return service.create_idea(request)

    @app.get("/ideas", response_model=IdeaListResponse)
    def list_ideas(
        stage: Optional[StageState] = None,
        category: Optional[InnovationCategory] = None,
        limit: Optional[int] = None,
        offset: int = 0,
    ) -> IdeaListResponse:
        return service.list_ideas(stage=stage, category=category, limit=limit, offset=offset)

    @app.get("/ideas/{idea_id}", response_model=IdeaDetailResponse)
    def get_idea(idea_id: str) -> IdeaDetailResponse:
        return service.idea_detail(idea_id)

    @app.post("/ideas/{idea_id}/scorecards", response_model=Idea, status_code=201)
    def add_scorecard(idea_id: str, request: ScorecardCreateRequest) -> Idea:
        return service.add_scorecard(idea_id, request)

    @app.get("/ideas/{idea_id}/civps", response_model=CivpsResponse)
    def get_civps(idea_id: str) -> CivpsResponse:
        return service.civps(idea_id)

    @app.post("/ideas/{idea_id}/advance", response_model=AdvanceResponse)
    def advance_idea(idea_id: str, request: AdvanceRequest) -> AdvanceResponse:
        return service.advance(idea_id, request)

    @app.get("/ideas/{idea_id}/history", response_model=HistoryResponse)
    def get_history(idea_id: str) -> HistoryResponse:
        return service.history(idea_id)

    @app.post("/ideas/{idea_id}/simulate", response_model=SimulateResponse)
    def simulate_idea(
        idea_id: str, request: Optional[SimulateRequest] = None
    ) -> SimulateResponse:
        return service.simulate_idea(idea_id, request)

    @app.post("/simulate", response_model=SimulateResponse)
    def simulate_adhoc(request: SimulateRequest) -> SimulateResponse:
        return service.simulate_adhoc(request)

    @app.post("/simulate/sweep", response_model=SweepResponse)
    def simulate_sweep(request: SweepRequest) -> SweepResponse:
        return service.sweep(request)

    @app.get("/ideas/{idea_id}/report", response_model=CompositeValueReport)
    def get_report(idea_id: str) -> CompositeValueReport:
        return service.report(idea_id)

    @app.get("/portfolio/allocation", response_model=AllocationResponse)
    def get_allocation() -> AllocationResponse:
        return service.allocation()

    @app.get("/portfolio/quadrants", response_model=QuadrantsResponse)
    def get_quadrants() -> QuadrantsResponse:
        return service.quadrants()

    @app.get("/healthz", response_model=HealthResponse)
    def healthz() -> HealthResponse:
        return HealthResponse(status="ok")

    return app


def serve(portfolio_path: str | Path, bind: str = "127.0.0.1:8000") -> None:
    """Run the service until interrupted."""
    import uvicorn

    host, _, port = bind.rpartition(":")
    if not host or not port.isdigit():
        raise ConfigurationError(f"bind address must look like host:port, got {bind!r}")
    app = create_app(portfolio_path)
    uvicorn.run(app, host=host, port=int(port))
