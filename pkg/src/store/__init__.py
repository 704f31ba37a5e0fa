from .cache import VerificationCache

__all__ = ["VerificationCache"]
