"""
Main application module for the Torelli Toolkit JSON API.

Every endpoint wraps one operation from operations.py, so the API returns the
same documents as the CLI.
"""
import logging
import traceback
from datetime import datetime
from typing import List

from fastapi import FastAPI, Query, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

import operations
from config import configure_logging, settings
from errors import TorelliError
from schemas import (
    ActionResponse,
    CatalogResponse,
    CertificateEntrySchema,
    ConvertRequest,
    CorrectionRequest,
    CorrectionResponse,
    ErrorResponse,
    GammaResponse,
    HealthResponse,
    NormalFormResponse,
    PresentationResponse,
    StatusResponse,
    VerifyCertificateRequest,
    VerifyCertificateResponse,
    WordRequest,
)
from surface import SurfaceParams

configure_logging()
logger = logging.getLogger("torelli-main")

# Create FastAPI app
app = FastAPI(
    title=settings.PROJECT_NAME,
    description="Symbolic computations in the Torelli group of non-orientable surfaces",
    version=settings.PROJECT_VERSION,
    responses={400: {"model": ErrorResponse}},
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_methods=["GET", "POST"],
    allow_headers=["*"],
)


@app.exception_handler(TorelliError)
async def torelli_exception_handler(request: Request, exc: TorelliError):
    logger.warning(f"{request.url.path}: {type(exc).__name__}: {exc}")
    return JSONResponse(status_code=400, content={"detail": str(exc), "error": type(exc).__name__})


# Global exception handler
@app.exception_handler(Exception)
async def global_exception_handler(request: Request, exc: Exception):
    logger.error(f"Unexpected error: {str(exc)}")
    logger.error(traceback.format_exc())

    return JSONResponse(
        status_code=500,
        content={
            "detail": "Internal server error",
            "error": type(exc).__name__,
            "message": str(exc) if settings.DEBUG else "An unexpected error occurred",
        },
    )


def _params(g: int, b: int) -> SurfaceParams:
    return SurfaceParams(g, b)


# Health check endpoint
@app.get("/health", response_model=HealthResponse)
async def health_check():
    return {"status": "healthy", "timestamp": datetime.utcnow().isoformat()}


@app.get("/status", response_model=StatusResponse)
async def status_check():
    return {
        "name": settings.PROJECT_NAME,
        "version": settings.PROJECT_VERSION,
        "debug": settings.DEBUG,
        "endpoints": sorted({route.path for route in app.routes if route.path.startswith("/api/")}),
    }


@app.post("/api/gamma", response_model=GammaResponse)
async def gamma(request: WordRequest):
    return operations.gamma_report(request.word, _params(request.g, request.b))


@app.post("/api/nf", response_model=NormalFormResponse)
async def normal_form(request: WordRequest):
    return operations.normal_form_report(request.word, _params(request.g, request.b))


@app.post("/api/act", response_model=ActionResponse)
async def act(request: WordRequest):
    return operations.action_report(request.word, _params(request.g, request.b))


@app.post("/api/certify", response_model=List[CertificateEntrySchema])
async def certify(request: WordRequest):
    return operations.certify_report(request.word, _params(request.g, request.b))


@app.post("/api/verify-cert", response_model=VerifyCertificateResponse)
async def verify_cert(request: VerifyCertificateRequest):
    entries = [entry.model_dump() for entry in request.certificate]
    return operations.verify_report(entries, request.word, _params(request.g, request.b))


@app.get("/api/rs", response_model=PresentationResponse)
async def rs(g: int = Query(ge=1), b: int = Query(1, ge=1), with_relators: bool = False):
    return operations.rs_report(_params(g, b), with_relators=with_relators)


@app.get("/api/catalog", response_model=CatalogResponse)
async def catalog(g: int = Query(ge=1), b: int = Query(0, ge=0)):
    return operations.catalog_report(g, b)


@app.post("/api/convert")
async def convert(request: ConvertRequest):
    return operations.convert_report(request.relator.family, request.relator.indices, request.target)


@app.post("/api/correct", response_model=CorrectionResponse)
async def correct(request: CorrectionRequest):
    return operations.correction_report(request.n, _params(request.g, request.b))


# Main entry point
if __name__ == "__main__":
    import uvicorn

    logger.info(f"Starting {settings.PROJECT_NAME} server on port {settings.API_PORT}")
    uvicorn.run("main:app", host=settings.API_HOST, port=settings.API_PORT, reload=False)
