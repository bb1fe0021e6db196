from .spec_file import SpecFile, load_spec, parse_operation, parse_operations
from .commands import RunReport, TaskRecord, build_parser, dispatch, main

__all__ = [
    "SpecFile",
    "load_spec",
    "parse_operation",
    "parse_operations",
    "RunReport",
    "TaskRecord",
    "build_parser",
    "dispatch",
    "main",
]
