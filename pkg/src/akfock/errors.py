class DomainError(ValueError):
    """Base class for errors caused by mathematically invalid input or by a
    failed structural self-check.  The CLI maps these to exit status 1."""
