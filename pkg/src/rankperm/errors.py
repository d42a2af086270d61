class CapExceeded(ValueError):
    """A request exceeds a documented size cap (field tables, codebook size, brute force)."""
