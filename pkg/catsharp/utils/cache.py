import functools


def memoize_method(fn):
    """Per-instance memo table keyed by the positional arguments.

    Arguments must be hashable. The table is the only state it adds and is
    never observable apart from speed.
    """
    name = f"_memo_{fn.__name__}"

    @functools.wraps(fn)
    def wrapper(self, *args):
        table = self.__dict__.get(name)
        if table is None:
            table = self.__dict__[name] = {}
        try:
            return table[args]
        except KeyError:
            value = table[args] = fn(self, *args)
            return value

    return wrapper
