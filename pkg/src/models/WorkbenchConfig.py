from pydantic import BaseModel, Field


class WorkbenchConfig(BaseModel):
    """Tunables shared by the analysis pipeline."""

    max_degree: int = Field(default=1 << 16, ge=4096)  # BitPoly degree and CA length cap
    max_field_degree: int = Field(default=64, ge=1, le=64)  # bounded by the factor table
    log_table_limit: int = Field(default=1 << 20, ge=1)
    jobs: int = Field(default=1, ge=1)  # worker threads for attack candidates
    verify_charpoly: bool = True
