"""Live LTL progress tracking.

Incremental, per-node truth-status tracking of finite-trace LTL
specifications over rolling agent traces.
"""

__version__ = '0.1'
