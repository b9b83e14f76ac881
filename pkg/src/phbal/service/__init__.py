from .app import app, create_app
from .schemas import ReduceRequest, ReduceResponse, SystemPayload

__all__ = ["app", "create_app", "ReduceRequest", "ReduceResponse", "SystemPayload"]
