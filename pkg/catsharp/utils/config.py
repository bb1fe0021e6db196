class LazyInitializationMixin:
    """Assign a declared set of settings by keyword, possibly in stages.

    Subclasses set ``self.allowed`` (names still to be assigned) and
    ``self.entry`` (called by ``start`` once everything is assigned).
    """

    def lazy_init(self, **kwargs):
        for k, v in kwargs.items():
            if k not in self.allowed:
                raise ValueError(f"{k} not allowed")
            setattr(self, k, v)
            self.allowed.remove(k)

    def start(self, **kwargs):
        missing = list(self.allowed)
        for k, v in kwargs.items():
            if k not in self.allowed:
                raise ValueError(f"{k} not allowed")
            setattr(self, k, v)
            missing.remove(k)

        if missing:
            raise ValueError("Must assign the following variables: " + ",".join(missing))

        return self.entry()

    def __rrshift__(self, other):
        return self.start(**other)


class RunConfig(LazyInitializationMixin):
    """Run-level settings of a CLI invocation.

    ``bound`` must be assigned before ``start``; the other settings have
    defaults and may be overridden by keyword at construction.
    """

    defaults = {
        "output_format": "table",
        "oracle": False,
        "segal": False,
        "verbose": 0,
        "report_path": None,
    }

    def __init__(self, **kwargs):
        self.allowed = ["bound"] + list(self.defaults)
        for k, v in self.defaults.items():
            setattr(self, k, v)
        self.lazy_init(**kwargs)
        # defaults count as assigned
        self.allowed = [k for k in self.allowed if k == "bound"]
        self.entry = self.validate

    def validate(self):
        if not isinstance(self.bound, int) or self.bound < 0:
            raise ValueError(f"bound must be a non-negative integer, got {self.bound!r}")
        if self.output_format not in ("table", "native", "graph"):
            raise ValueError(f"unknown output format {self.output_format!r}")
        return self
