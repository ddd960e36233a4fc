class SizeGuardError(ValueError):
    """An exhaustive enumeration was asked for more than its size guard allows."""

    def __init__(self, what: str, size: int, limit: int):
        self.what = what
        self.size = size
        self.limit = limit
        super().__init__(f"{what} = {size} exceeds the guard of {limit}")
