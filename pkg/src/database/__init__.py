from .store import ReportStore

__all__ = ["ReportStore"]
