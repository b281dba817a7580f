from .app import DEFAULT_TICK_RATE, create_app

__all__ = ["create_app", "DEFAULT_TICK_RATE"]
