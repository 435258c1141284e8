# === api/app.py ===
from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from api.routes.transforms import router as transforms_router
from api.routes.verify import router as verify_router

VERSION = "1.0.0"

app = FastAPI(
    title="ffskit",
    description="Fast Fourier series, chirp Z-transform interpolation and FS-domain convolution",
    version=VERSION,
    docs_url="/docs",
    redoc_url="/redoc"
)

# CORS middleware
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

# Include routers
app.include_router(transforms_router, prefix="/api/v1", tags=["transforms"])
app.include_router(verify_router, prefix="/api/v1", tags=["verify"])

@app.get("/")
async def root():
    return {
        "message": "ffskit API",
        "docs": "/docs",
        "version": VERSION
    }

@app.get("/health")
async def health_check():
    return {"status": "healthy"}
