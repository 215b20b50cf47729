"""Pydantic schemas for command output."""
from .invariants import InvariantMethod, InvariantReport, TauValue
from .spectrum import SpectrumEntryResponse, SpectrumReport
from .validation import RecordStatus, ValidationRecord, ValidationReport, ValidationSummary

__all__ = [
    "InvariantMethod", "InvariantReport", "TauValue",
    "SpectrumEntryResponse", "SpectrumReport",
    "RecordStatus", "ValidationRecord", "ValidationReport", "ValidationSummary",
]
