# This is the main entry point of the FastAPI app

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from starlette.responses import RedirectResponse

from ybhomology import __version__, settings

# Import the route modules (one per verification suite)
from ybhomology.routes import check
from ybhomology.routes import decompose
from ybhomology.routes import homology
from ybhomology.routes import kernel
from ybhomology.routes import koszul

settings.configure_logging()

# Create the FastAPI app
app = FastAPI(title="ybhomology", version=__version__)

# Add CORS middleware to allow requests from a local frontend
app.add_middleware(
    CORSMiddleware,
    allow_origins=[
        "http://localhost:3000",
        "http://localhost:5500",
        "http://127.0.0.1:5500",
        "http://localhost:8080",
    ],
    allow_credentials=True,
    allow_methods=["GET", "POST"],
    allow_headers=["*"],
)


# Lightweight root route: redirect to the OpenAPI docs so GET / doesn't 404
@app.get("/", include_in_schema=False)
def read_root():
    """Redirect root requests to the interactive docs."""
    return RedirectResponse(url="/docs")


# Register all routers so the endpoints are active
app.include_router(check.router)
app.include_router(kernel.router)
app.include_router(decompose.router)
app.include_router(homology.router)
app.include_router(koszul.router)
