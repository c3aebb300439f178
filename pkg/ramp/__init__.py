# coding: utf-8
"""
Replication-aware memory-error protection (RAMP) reliability model.

Computes, optimizes and validates the DUE / NDE / storage-overhead trade-off
of weakening per-replica ECC when the data is already replicated or erasure
coded across memory nodes.
"""

__version__ = '0.1.0'
