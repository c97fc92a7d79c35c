"""Reversible-gate circuit model and its compact text notation.

Circuits here are built from three self-inverse gates over 1-indexed
qubits:

* ``X(q)``      -- NOT on qubit q
* ``CN(a,b)``   -- controlled-NOT, control a, target b
* ``Fr(a b,c)`` -- Fredkin (controlled swap), control c, swap targets a, b

Every gate permutes classical n-bit strings, so a whole circuit is a
permutation of {0,1}^n.  The text format is the one used in generated
initialization circuits, e.g. ``CN(2,3);X(3);Fr(1 2, 3);X(3);`` with one
generator step per line and ``#`` starting a comment.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

X_KIND = "X"
CNOT_KIND = "CN"
FREDKIN_KIND = "Fr"

_ARITY = {X_KIND: 1, CNOT_KIND: 2, FREDKIN_KIND: 3}


@dataclass(frozen=True)
class Gate:
    """One self-inverse gate; ``qubits`` holds 1-based indices.

    Index meaning by kind: ``X``: (target,); ``CN``: (control, target);
    ``Fr``: (swap_a, swap_b, control).
    """

    kind: str
    qubits: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in _ARITY:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        if len(self.qubits) != _ARITY[self.kind]:
            raise ValueError(
                f"{self.kind} takes {_ARITY[self.kind]} qubit indices, got {self.qubits}"
            )
        if any(q < 1 for q in self.qubits):
            raise ValueError(f"qubit indices are 1-based, got {self.qubits}")
        if len(set(self.qubits)) != len(self.qubits):
            raise ValueError(f"duplicate qubit index in {self.kind}{self.qubits}")

    @property
    def max_qubit(self) -> int:
        return max(self.qubits)

    def __str__(self) -> str:
        if self.kind == X_KIND:
            return f"X({self.qubits[0]})"
        if self.kind == CNOT_KIND:
            return f"CN({self.qubits[0]},{self.qubits[1]})"
        a, b, c = self.qubits
        return f"Fr({a} {b}, {c})"


def NOT(q: int) -> Gate:
    return Gate(X_KIND, (q,))


def CNOT(control: int, target: int) -> Gate:
    return Gate(CNOT_KIND, (control, target))


def FREDKIN(a: int, b: int, control: int) -> Gate:
    return Gate(FREDKIN_KIND, (a, b, control))


def basic_boost(a: int, b: int, c: int) -> list[Gate]:
    """The 3-qubit bias-boosting primitive acting on the trio (a, b, c).

    Concentrates the "two of three bits are 0" weight onto qubit a:
    as a map on bit strings abc it sends 010->011, 011->100, 100->010,
    110<->111 and fixes 000, 001, 101.
    """
    return [CNOT(b, c), NOT(c), FREDKIN(a, b, c), NOT(c)]


def bias_flip(b: int) -> list[Gate]:
    """Complement qubit b; appended after :func:`basic_boost` when the
    middle qubit's bias comes out negative."""
    return [NOT(b)]


@dataclass
class Circuit:
    """An ordered gate list over ``width`` qubits.

    ``layer_marks`` are cumulative gate counts at generator depth-step
    boundaries; they only affect text layout (one step per line) and are
    ignored by equality.  Instances are treated as immutable values.
    """

    width: int
    gates: list[Gate] = field(default_factory=list)
    layer_marks: list[int] = field(default_factory=list, compare=False)

    def __post_init__(self):
        if self.width < 0:
            raise ValueError("width must be nonnegative")
        for g in self.gates:
            if g.max_qubit > self.width:
                raise ValueError(f"gate {g} exceeds circuit width {self.width}")

    def __len__(self) -> int:
        return len(self.gates)

    def inverse(self) -> "Circuit":
        """Reversed gate order; inverts the circuit since every gate is
        its own inverse."""
        return Circuit(self.width, list(reversed(self.gates)))

    def layers(self) -> list[list[Gate]]:
        """Gate list split at the depth-step boundaries (empty steps dropped)."""
        bounds = sorted({m for m in self.layer_marks if 0 < m < len(self.gates)})
        out = []
        start = 0
        for m in bounds + [len(self.gates)]:
            if m > start:
                out.append(self.gates[start:m])
            start = m
        return out


def apply_gate_to_bits(gate: Gate, bits: list[int]) -> None:
    """Apply one gate to a mutable 0/1 list (position q-1 holds qubit q)."""
    if gate.kind == X_KIND:
        q = gate.qubits[0]
        bits[q - 1] ^= 1
    elif gate.kind == CNOT_KIND:
        a, b = gate.qubits
        bits[b - 1] ^= bits[a - 1]
    else:
        a, b, c = gate.qubits
        if bits[c - 1]:
            bits[a - 1], bits[b - 1] = bits[b - 1], bits[a - 1]


def apply_to_bitstring(circuit: Circuit, bits: str) -> str:
    """Reference semantics: push one n-bit string through the circuit.

    The leftmost character is qubit 1.  Raises ValueError on a width
    mismatch or a non-binary string.
    """
    if len(bits) != circuit.width:
        raise ValueError(
            f"input has {len(bits)} bits but circuit width is {circuit.width}"
        )
    if bits.strip("01"):
        raise ValueError(f"not a bit string: {bits!r}")
    state = [int(ch) for ch in bits]
    for g in circuit.gates:
        apply_gate_to_bits(g, state)
    return "".join(str(v) for v in state)


class CircuitParseError(ValueError):
    """Malformed circuit text; carries 1-based ``line`` and ``col``."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col


_TOKEN_RE = re.compile(r"[A-Za-z]+|\d+|[(),;]")


def _tokenize(text: str):
    """Yield (token, line, col) with comments and whitespace stripped."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        pos = 0
        while pos < len(line):
            ch = line[pos]
            if ch.isspace():
                pos += 1
                continue
            m = _TOKEN_RE.match(line, pos)
            if not m:
                raise CircuitParseError(f"unexpected character {ch!r}", lineno, pos + 1)
            yield m.group(0), lineno, m.start() + 1
            pos = m.end()
        yield "\n", lineno, len(line) + 1


def parse_circuit(text: str, width: int) -> Circuit:
    """Parse circuit text into a :class:`Circuit` of the given width.

    Whitespace and newlines are insignificant between tokens, but line
    breaks between gates are kept as depth-step boundaries.  Errors
    report the offending line and column.
    """
    gates: list[Gate] = []
    marks: list[int] = []
    tokens = list(_tokenize(text))
    i = 0

    def error(msg, tok_index):
        idx = min(tok_index, len(tokens) - 1)
        _, ln, col = tokens[idx] if tokens else ("", 1, 1)
        raise CircuitParseError(msg, ln, col)

    while i < len(tokens):
        tok, ln, col = tokens[i]
        if tok == "\n":
            if gates and (not marks or marks[-1] != len(gates)):
                marks.append(len(gates))
            i += 1
            continue
        if tok not in _ARITY:
            error(f"expected gate name, got {tok!r}", i)
        kind = tok
        i += 1
        if i >= len(tokens) or tokens[i][0] != "(":
            error(f"expected '(' after {kind}", i)
        i += 1
        args: list[str] = []
        while i < len(tokens) and tokens[i][0] != ")":
            t = tokens[i][0]
            if t == "\n":
                error("unterminated gate argument list", i)
            args.append(t)
            i += 1
        if i >= len(tokens):
            error("unterminated gate argument list", i)
        i += 1  # consume ')'

        def ints(pattern):
            # pattern is the expected arg shape, e.g. ("INT", ",", "INT")
            if len(args) != len(pattern):
                return None
            out = []
            for got, want in zip(args, pattern):
                if want == "INT":
                    if not got.isdigit():
                        return None
                    out.append(int(got))
                elif got != want:
                    return None
            return out

        if kind == X_KIND:
            vals = ints(("INT",))
        elif kind == CNOT_KIND:
            vals = ints(("INT", ",", "INT"))
        else:
            vals = ints(("INT", "INT", ",", "INT"))
        if vals is None:
            error(f"malformed arguments for {kind}: {' '.join(args)!r}", i - 1)
        if any(v < 1 for v in vals):
            error(f"qubit indices are 1-based, got {vals}", i - 1)
        if len(set(vals)) != len(vals):
            error(f"duplicate qubit index in {kind}({vals})", i - 1)
        if max(vals) > width:
            error(f"qubit index {max(vals)} exceeds width {width}", i - 1)

        if kind == X_KIND:
            gates.append(NOT(vals[0]))
        elif kind == CNOT_KIND:
            gates.append(CNOT(vals[0], vals[1]))
        else:
            gates.append(FREDKIN(vals[0], vals[1], vals[2]))

        if i >= len(tokens) or tokens[i][0] != ";":
            error(f"expected ';' after {kind}(...)", i)
        i += 1

    if marks and marks[-1] == len(gates):
        marks.pop()
    return Circuit(width, gates, marks)


def serialize_circuit(circuit: Circuit) -> str:
    """Render a circuit in the text notation, one depth-step per line.

    ``parse_circuit(serialize_circuit(c), c.width)`` reproduces the gate
    list exactly.  An empty circuit serializes to the empty string.
    """
    layers = circuit.layers()
    if not layers:
        return ""
    return "\n".join("".join(f"{g};" for g in layer) for layer in layers) + "\n"
