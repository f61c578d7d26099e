from .router import GraphPayload, divisor_router

__all__ = ['GraphPayload', 'divisor_router']
