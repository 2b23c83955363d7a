"""Independent brute-force oracles used to freeze expected test values.

Everything in this file is deliberately written against plain Python data
(bit tuples, dicts) rather than the package's own types, so that the main
implementation can be checked against genuinely independent computations:

- exhaustive enumeration of all total autonomous Moore machines up to a
  state bound, with a partition-refinement canonicalizer;
- exact enumeration of trap-box post-trigger outcomes;
- closed-form mutual information for correlated fair bits;
- a plain software counter as the reference for counter-machine traces.

Canonical machine serialization format (shared contract with the package):
``"t1;t2;...|c1;c2;..."`` where each entry is an output bit string (e.g.
``"01"``), the left part is the transient prefix (may be empty) and the
right part is the repeating cycle (never empty).
"""

from fractions import Fraction
from itertools import product
import math


# ---------------------------------------------------------------------------
# Autonomous Moore machines as plain tuples
# ---------------------------------------------------------------------------
# A machine over `s` states is (delta, outputs, initial) with
#   delta:    tuple of length s, delta[q] is the successor of state q
#   outputs:  tuple of length s, outputs[q] is a bit tuple of width n
#   initial:  int in range(s)


def machine_prefix(delta, outputs, initial, length):
    """First `length` outputs of the run from `initial`."""
    out = []
    q = initial
    for _ in range(length):
        out.append(outputs[q])
        q = delta[q]
    return out


def _reachable(delta, initial):
    seen = []
    q = initial
    while q not in seen:
        seen.append(q)
        q = delta[q]
    return seen


def refinement_canonical(delta, outputs, initial):
    """Canonical serialization of the reachable-part bisimulation quotient.

    Uses Moore-style partition refinement (split by output, then repeatedly
    by successor block) restricted to reachable states, then walks the
    quotient from the initial block to read off the minimal transient/cycle
    output sequences.
    """
    reach = _reachable(delta, initial)
    block = {q: outputs[q] for q in reach}
    while True:
        signature = {q: (block[q], block[delta[q]]) for q in reach}
        next_block = {q: signature[q] for q in reach}
        if len(set(next_block.values())) == len(set(block.values())):
            block = next_block
            break
        block = next_block

    walk = []
    b = block[initial]
    rep = {block[q]: q for q in reach}
    while b not in walk:
        walk.append(b)
        b = block[delta[rep[b]]]
    entry = walk.index(b)
    tail = [outputs[rep[x]] for x in walk[:entry]]
    cycle = [outputs[rep[x]] for x in walk[entry:]]
    return serialize_lasso(tail, cycle)


def serialize_lasso(tail, cycle):
    fmt = lambda bits: "".join(str(b) for b in bits)
    return ";".join(fmt(b) for b in tail) + "|" + ";".join(fmt(b) for b in cycle)


def all_total_machines(s_max, n):
    """Yield every total autonomous Moore machine with 1..s_max states."""
    bit_values = list(product((0, 1), repeat=n))
    for s in range(1, s_max + 1):
        states = range(s)
        for delta in product(states, repeat=s):
            for outputs in product(bit_values, repeat=s):
                for initial in states:
                    yield delta, outputs, initial


def consistent_machine_set(trace_bits, s_max, n):
    """All machines (up to quotient equivalence) whose run starts with the trace.

    Returns the set of canonical serializations. `trace_bits` is a sequence
    of width-n bit tuples.
    """
    length = len(trace_bits)
    found = set()
    for delta, outputs, initial in all_total_machines(s_max, n):
        if machine_prefix(delta, outputs, initial, length) == list(trace_bits):
            found.add(refinement_canonical(delta, outputs, initial))
    return found


# ---------------------------------------------------------------------------
# Trap-box exact enumerations
# ---------------------------------------------------------------------------

TWO_BIT_PAIRS = [(0, 0), (0, 1), (1, 0), (1, 1)]


def trap_violation_probability():
    """P(first post-trigger pair differs from (1,0)) for a uniform 2-bit pair."""
    misses = sum(1 for pair in TWO_BIT_PAIRS if pair != (1, 0))
    return Fraction(misses, len(TWO_BIT_PAIRS))


def history_conflict(trace_bits):
    """Whether a window-1 history table of the trace has a successor conflict."""
    successor = {}
    for here, nxt in zip(trace_bits, trace_bits[1:]):
        if here in successor and successor[here] != nxt:
            return True
        successor.setdefault(here, nxt)
    return False


def trap_conflict_probability(pattern_count, total_length):
    """Exact P(window-1 conflict) for a trap trace, enumerating all post-trigger
    draws of uniform 2-bit pairs."""
    pattern = (1, 0)
    free = total_length - pattern_count
    conflicts = 0
    for draw in product(TWO_BIT_PAIRS, repeat=free):
        trace = [pattern] * pattern_count + list(draw)
        if history_conflict(trace):
            conflicts += 1
    return Fraction(conflicts, len(TWO_BIT_PAIRS) ** free)


# ---------------------------------------------------------------------------
# Statistics in closed form
# ---------------------------------------------------------------------------


def correlated_pair_g(sample_count):
    """G statistic of a perfectly duplicated fair bit: 2 N ln 2."""
    return 2.0 * sample_count * math.log(2.0)


def binomial_three_sigma(p, sample_count):
    return 3.0 * math.sqrt(p * (1.0 - p) / sample_count)


# ---------------------------------------------------------------------------
# Reference counter
# ---------------------------------------------------------------------------


def counter_reference(width, length):
    """Bit tuples of 1..length taken mod 2**width, most significant bit first."""
    out = []
    for k in range(1, length + 1):
        value = k % (2**width)
        out.append(tuple((value >> (width - 1 - i)) & 1 for i in range(width)))
    return out
