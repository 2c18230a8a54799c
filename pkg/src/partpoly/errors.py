class DomainError(ValueError):
    """Raised when an operation is called outside its mathematical domain."""
