"""Exact combinatorics of branched covers of the disk.

Submodules:
  permcore   -- permutation arithmetic in S_d
  partitions -- integer-partition kernel
  cover      -- branch tuples, component signatures, local-cover criterion
  pi0monoid  -- the monoid of branched-cover components
  cells      -- the orbicell complex and its rational Betti numbers
  classalg   -- character tables and factorization counts (two oracles)
  ring       -- the cohomology ring in the cell basis
  cli        -- batch interface
"""

__version__ = "0.1.0"
