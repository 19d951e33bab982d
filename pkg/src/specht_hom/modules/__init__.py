"""Ambient helpers independent of the mathematics.

- `set_log_level`, `LOG_FORMAT`: Logging setup.
- `default_workers`, `run_in_pool`: The process pool.
"""

from specht_hom.modules.log import LOG_FORMAT, set_log_level
from specht_hom.modules.pool import default_workers, run_in_pool
