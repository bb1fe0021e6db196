import json
from io import TextIOWrapper
from pathlib import Path

import numpy as np

from .report import Exactness, Report


class JSONEncoder(json.JSONEncoder):
    def default(self, obj):
        if isinstance(obj, Path):
            return str(obj)
        if isinstance(obj, TextIOWrapper):
            return obj.name
        if isinstance(obj, np.integer):
            return int(obj)
        if isinstance(obj, np.floating):
            return float(obj)
        if isinstance(obj, np.ndarray):
            return obj.tolist()
        if isinstance(obj, Exactness):
            return str(obj)
        if isinstance(obj, Report):
            return obj.to_dict()
        if isinstance(obj, (frozenset, set)):
            return sorted(obj, key=str)
        return super().default(obj)


def save_run_report(path, run_report):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as f:
        json.dump(run_report, f, indent=4, cls=JSONEncoder)
