"""Machine tables and hypotheses: autonomous Moore machines over bit outputs.

A machine table maps abstract states to successor states and to output bit
strings. Tables built from observation are provisional (partial, possibly
conflicting); total deterministic tables can be run, and double as the
transition spec for white-box state machines.

Hypotheses are compared up to reachable-part bisimulation. For autonomous
deterministic machines that equivalence coincides with equality of the
eventually-periodic output sequence, so the canonical form of a hypothesis
is the minimal transient/cycle pair of its run. Canonical serialization:
``"t1;t2;...|c1;c2;..."`` with outputs written as bit strings, transient
part possibly empty, cycle part never empty. Reports order hypotheses
lexicographically by this serialization.
"""

from dataclasses import dataclass, field
from typing import Hashable, Sequence

from .errors import SpecValidationError
from .traces import Bits, Trace

State = Hashable


@dataclass
class MachineTable:
    """Transition/output structure over abstract states.

    `provisional` marks tables built from finite observation (maps may be
    partial). `conflict_states` holds states observed with two different
    successors; a nonempty set means the observed behavior is not a
    deterministic function of the state at this granularity.
    """

    states: frozenset
    transitions: dict
    outputs: dict
    provisional: bool = False
    conflict_states: frozenset = field(default_factory=frozenset)

    @property
    def conflict(self) -> bool:
        return bool(self.conflict_states)

    def is_total(self) -> bool:
        return (
            set(self.transitions) == set(self.states)
            and set(self.outputs) == set(self.states)
            and all(t in self.states for t in self.transitions.values())
        )


@dataclass
class MachineHypothesis:
    """A total machine plus an initial state: a candidate explanation of a trace."""

    table: MachineTable
    initial: State
    size: int

    def __post_init__(self):
        if not self.table.is_total():
            raise SpecValidationError("hypothesis table must be total")
        if self.initial not in self.table.states:
            raise SpecValidationError("initial state not in table")


def replay(hyp: MachineHypothesis, length: int) -> list[Bits]:
    """Outputs of the hypothesis' run for `length` ticks."""
    out = []
    q = hyp.initial
    for _ in range(length):
        out.append(tuple(hyp.table.outputs[q]))
        q = hyp.table.transitions[q]
    return out


def is_consistent(hyp: MachineHypothesis, trace: Trace) -> bool:
    """Whether the run from `initial` reproduces the trace bit-exactly."""
    return replay(hyp, len(trace)) == trace.bits_list


@dataclass(frozen=True)
class CanonicalMachine:
    """Minimal transient/cycle output representation of a hypothesis run."""

    tail: tuple[Bits, ...]
    cycle: tuple[Bits, ...]

    @property
    def size(self) -> int:
        return len(self.tail) + len(self.cycle)

    def serialize(self) -> str:
        fmt = lambda bits: "".join(str(b) for b in bits)
        return ";".join(map(fmt, self.tail)) + "|" + ";".join(map(fmt, self.cycle))

    def output_at(self, k: int) -> Bits:
        """Output at 1-based tick k of the represented infinite run."""
        if k <= len(self.tail):
            return self.tail[k - 1]
        return self.cycle[(k - len(self.tail) - 1) % len(self.cycle)]

    def to_hypothesis(self) -> MachineHypothesis:
        """The chain-into-cycle machine realizing this behavior."""
        outputs = list(self.tail) + list(self.cycle)
        size = len(outputs)
        transitions = {i: i + 1 for i in range(size - 1)}
        transitions[size - 1] = len(self.tail)
        table = MachineTable(
            states=frozenset(range(size)),
            transitions=transitions,
            outputs={i: outputs[i] for i in range(size)},
        )
        return MachineHypothesis(table=table, initial=0, size=size)


def _minimal_period(cycle: Sequence[Bits]) -> int:
    length = len(cycle)
    for period in range(1, length + 1):
        if length % period == 0 and all(
            cycle[i] == cycle[i % period] for i in range(length)
        ):
            return period
    return length


def canonical_form(hyp: MachineHypothesis) -> CanonicalMachine:
    """Minimize the reachable run of a hypothesis to its canonical lasso.

    The run of an autonomous machine visits a transient prefix and then a
    cycle; the canonical form reduces the cycle to its minimal period and
    absorbs any transient suffix that merely replays the cycle.
    """
    first_seen: dict = {}
    run_outputs: list[Bits] = []
    q = hyp.initial
    while q not in first_seen:
        first_seen[q] = len(run_outputs)
        run_outputs.append(tuple(hyp.table.outputs[q]))
        q = hyp.table.transitions[q]
    entry = first_seen[q]
    tail = run_outputs[:entry]
    cycle = run_outputs[entry:]

    period = _minimal_period(cycle)
    cycle = cycle[:period]
    while tail and tail[-1] == cycle[-1]:
        tail.pop()
        cycle = [cycle[-1]] + cycle[:-1]
    return CanonicalMachine(tail=tuple(tail), cycle=tuple(cycle))


def serialize(hyp: MachineHypothesis) -> str:
    return canonical_form(hyp).serialize()


def equivalent(a: MachineHypothesis, b: MachineHypothesis) -> bool:
    """Reachable-part bisimulation equivalence."""
    return canonical_form(a) == canonical_form(b)


def chain_hypothesis(outputs: Sequence[Bits]) -> MachineHypothesis:
    """The unrolled machine: emit the given outputs in order, then hold the last.

    Always consistent with the trace it was unrolled from; the constructive
    witness that any finite outcome sequence defines a finite-state machine.
    """
    if not outputs:
        raise ValueError("cannot unroll an empty output sequence")
    size = len(outputs)
    transitions = {i: min(i + 1, size - 1) for i in range(size)}
    table = MachineTable(
        states=frozenset(range(size)),
        transitions=transitions,
        outputs={i: tuple(outputs[i]) for i in range(size)},
    )
    return MachineHypothesis(table=table, initial=0, size=size)
