"""Desk-scale size guards.

Every exponential entry point checks its input size and raises SizeGuardError
instead of silently degrading. ORDERCUT_GUARD_OVERRIDE=1 lifts the soft guards
(a warning goes to stderr once); the mask-encoding hard cap of 32 vertices
stays in force regardless.
"""

from __future__ import annotations

import os
import sys

SUBSET_HARD_CAP = 32          # bitmask universe; never lifted
EXACT_DP_GUARD = 26           # full exact DPs and kcut enumerations
TABLE_ENTRY_GUARD = 1 << 26   # subset tables (matches 2^26 at the full-DP limit)
SCHEME_BUDGET = 48            # fas_scheme: level * n
ORACLE_GUARD = 9              # perm_opt: n! enumeration
DKMC_ORACLE_GUARD = 1 << 20   # dkmc_oracle: C(n, k) subsets

OVERRIDE_ENV = "ORDERCUT_GUARD_OVERRIDE"
_warned = False


class SizeGuardError(RuntimeError):
    """Request exceeds a desk-scale guard."""


def _overridden() -> bool:
    global _warned
    if os.environ.get(OVERRIDE_ENV, "") != "1":
        return False
    if not _warned:
        print(f"warning: {OVERRIDE_ENV}=1 lifts desk-scale size guards; "
              "runtime and memory are now unbounded", file=sys.stderr)
        _warned = True
    return True


def check(actual: int, limit: int, what: str) -> None:
    """Raise SizeGuardError when actual > limit and the override is not set."""
    if actual <= limit:
        return
    if _overridden():
        return
    raise SizeGuardError(
        f"{what}: {actual} exceeds the desk-scale guard {limit} "
        f"(set {OVERRIDE_ENV}=1 to override)")


def check_universe(n: int) -> None:
    """Hard cap for subset-mask universes; not overridable."""
    if n > SUBSET_HARD_CAP:
        raise SizeGuardError(
            f"vertex count {n} exceeds the subset-mask hard cap {SUBSET_HARD_CAP}")
