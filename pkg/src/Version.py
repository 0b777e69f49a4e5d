class Version:
    """Version metadata for the shrinking-generator CA workbench."""

    VERSION = "0.1.0"
