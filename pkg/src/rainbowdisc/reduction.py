"""3CNF parsing, brute-force satisfiability, and the executable encoding of
3-SAT into rainbow s-t cut search, with certificate translation in both
directions.

The encoded graph has one gadget per variable (two vertices hanging off s,
both edges sharing that variable's color) and one per clause (a hub off t
plus one three-edge path per literal from the literal's "false" vertex to
its "true" vertex). Each literal path crosses any s-t bipartition an odd
number of times; satisfied literals can cross on their uniquely colored hub
edge, while falsified ones must consume one of the clause's two shared
colors, so a rainbow cut exists exactly when every clause has at most two
falsified literals, i.e. when the formula is satisfiable.
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass

from .errors import DEFAULT_NODE_BUDGET, CnfFormatError, InvalidInputError
from .graphs import (CutCertificate, EdgeColoring, Graph, certificate_from_side,
                     check_cut_certificate, is_rainbow)
from .rainbow import find_rainbow_cut_exact

MAX_BRUTEFORCE_VARIABLES = 24
VERIFY_MAX_VARIABLES = 16
VERIFY_MAX_CLAUSES = 12


@dataclass(frozen=True)
class Assignment:
    """Truth values for variables 1..n; values[j-1] is variable j."""

    values: tuple[bool, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(bool(v) for v in self.values))

    def value(self, variable: int) -> bool:
        if not (1 <= variable <= len(self.values)):
            raise InvalidInputError(f"variable {variable} out of range")
        return self.values[variable - 1]


@dataclass(frozen=True)
class CnfFormula:
    """3CNF formula; clauses hold DIMACS-signed literals over distinct
    variables (positive literal j means variable j, negative means its
    negation)."""

    variable_count: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        clauses = tuple(tuple(int(lit) for lit in cl) for cl in self.clauses)
        object.__setattr__(self, "clauses", clauses)
        if self.variable_count < 0:
            raise InvalidInputError("variable count must be nonnegative")
        for idx, cl in enumerate(clauses, start=1):
            if len(cl) != 3:
                raise InvalidInputError(f"clause {idx}: exactly 3 literals required")
            if any(lit == 0 or abs(lit) > self.variable_count for lit in cl):
                raise InvalidInputError(f"clause {idx}: literal out of range")
            if len({abs(lit) for lit in cl}) != 3:
                raise InvalidInputError(f"clause {idx}: variables must be distinct")

    @property
    def clause_count(self) -> int:
        return len(self.clauses)

    def evaluate(self, assignment: Assignment) -> bool:
        """True iff every clause has a literal matching the assignment."""
        if len(assignment.values) != self.variable_count:
            raise InvalidInputError("assignment length does not match variable count")
        return all(any(assignment.value(abs(lit)) == (lit > 0) for lit in cl)
                   for cl in self.clauses)


def parse_dimacs_cnf(text: str) -> CnfFormula:
    """Parse DIMACS CNF: ``p cnf <n> <m>`` then m clauses of 3 distinct
    variables, each terminated by 0; ``c`` lines are comments."""
    n = -1
    declared = -1
    tokens: list[str] = []
    for raw in text.splitlines():
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if n >= 0:
                raise CnfFormatError("duplicate header")
            if len(parts) != 4 or parts[1] != "cnf":
                raise CnfFormatError("malformed header")
            try:
                n, declared = int(parts[2]), int(parts[3])
            except ValueError:
                raise CnfFormatError("malformed header") from None
            if n < 0 or declared < 0:
                raise CnfFormatError("malformed header")
            continue
        if n < 0:
            raise CnfFormatError("clause data before header")
        tokens.extend(parts)
    if n < 0:
        raise CnfFormatError("missing header")
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    for tok in tokens:
        try:
            lit = int(tok)
        except ValueError:
            raise CnfFormatError(f"invalid literal {tok!r}") from None
        if lit == 0:
            clauses.append(tuple(current))
            current = []
        else:
            current.append(lit)
    if current:
        raise CnfFormatError("unterminated clause")
    if len(clauses) != declared:
        raise CnfFormatError(f"header declares {declared} clauses, found {len(clauses)}")
    try:
        return CnfFormula(n, tuple(clauses))  # type: ignore[arg-type]
    except InvalidInputError as exc:
        raise CnfFormatError(str(exc)) from None


def serialize_dimacs_cnf(f: CnfFormula) -> str:
    """Canonical DIMACS text; inverse of ``parse_dimacs_cnf``."""
    lines = [f"p cnf {f.variable_count} {f.clause_count}"]
    for cl in f.clauses:
        lines.append(" ".join(str(lit) for lit in cl) + " 0")
    return "\n".join(lines) + "\n"


def solve_sat_bruteforce(f: CnfFormula) -> Assignment | None:
    """Lexicographically first satisfying assignment (False before True), or
    None when unsatisfiable. Deliberately exhaustive; desk scale only."""
    if f.variable_count > MAX_BRUTEFORCE_VARIABLES:
        raise InvalidInputError(
            f"brute force limited to {MAX_BRUTEFORCE_VARIABLES} variables")
    for bits in itertools.product((False, True), repeat=f.variable_count):
        assignment = Assignment(bits)
        if f.evaluate(assignment):
            return assignment
    return None


@dataclass(frozen=True)
class ReductionArtifact:
    """The colored graph encoding a formula, with its name tables.

    vertex_table maps "s", "t", "x{j}^0", "x{j}^1", "c{i}", "c{i}^{k}" to
    vertex ids; color_table maps "r0", "r{j}" (variable colors) and
    "r{i}^{k}" for k in 1..5 (clause colors) to color ids.
    """

    graph: Graph
    coloring: EdgeColoring
    s: int
    t: int
    vertex_table: dict[str, int]
    color_table: dict[str, int]
    formula: CnfFormula


def build_reduction(f: CnfFormula) -> ReductionArtifact:
    """Build the colored graph whose rainbow s-t cuts correspond exactly to
    satisfying assignments of f.

    Vertex ids: s=0, t=1, then x_j^0, x_j^1 per variable, then per clause
    the hub c_i followed by its junctions c_i^1..c_i^3. Colors: r0 = 0 (the
    s-t edge and every t-hub edge), r_j = j (both s-edges of variable j),
    then per clause the literal colors r_i^1..r_i^3, the junction-sink color
    r_i^4, and the hub-junction color r_i^5. Positive literal j runs its
    path x_j^0 -> c_i -> c_i^k -> x_j^1; a negative literal swaps source and
    sink.
    """
    n, m = f.variable_count, f.clause_count
    vt: dict[str, int] = {"s": 0, "t": 1}
    for j in range(1, n + 1):
        vt[f"x{j}^0"] = 2 * j
        vt[f"x{j}^1"] = 2 * j + 1
    for i in range(1, m + 1):
        base = 2 * n + 2 + 4 * (i - 1)
        vt[f"c{i}"] = base
        for k in (1, 2, 3):
            vt[f"c{i}^{k}"] = base + k
    ct: dict[str, int] = {"r0": 0}
    for j in range(1, n + 1):
        ct[f"r{j}"] = j
    for i in range(1, m + 1):
        for k in range(1, 6):
            ct[f"r{i}^{k}"] = n + 5 * (i - 1) + k
    edges: list[tuple[int, int]] = []
    colors: list[int] = []

    def add(u: int, v: int, col: int) -> None:
        edges.append((u, v))
        colors.append(col)

    add(vt["s"], vt["t"], ct["r0"])
    for i in range(1, m + 1):
        add(vt["t"], vt[f"c{i}"], ct["r0"])
    for j in range(1, n + 1):
        add(vt["s"], vt[f"x{j}^0"], ct[f"r{j}"])
        add(vt["s"], vt[f"x{j}^1"], ct[f"r{j}"])
    for i, clause in enumerate(f.clauses, start=1):
        for k, lit in enumerate(clause, start=1):
            j = abs(lit)
            source = vt[f"x{j}^0"] if lit > 0 else vt[f"x{j}^1"]
            sink = vt[f"x{j}^1"] if lit > 0 else vt[f"x{j}^0"]
            add(source, vt[f"c{i}"], ct[f"r{i}^{k}"])
            add(vt[f"c{i}"], vt[f"c{i}^{k}"], ct[f"r{i}^5"])
            add(vt[f"c{i}^{k}"], sink, ct[f"r{i}^4"])
    graph = Graph(4 * m + 2 * n + 2, tuple(edges))
    coloring = EdgeColoring(tuple(colors), 5 * m + n + 1)
    if (graph.vertex_count != 4 * m + 2 * n + 2
            or graph.edge_count != 10 * m + 2 * n + 1
            or coloring.color_count != 5 * m + n + 1):
        raise RuntimeError("encoded graph has unexpected structure")
    return ReductionArtifact(graph, coloring, vt["s"], vt["t"], vt, ct, f)


def build_cut_from_assignment(artifact: ReductionArtifact,
                              assignment: Assignment) -> CutCertificate:
    """Rainbow s-t cut realizing a satisfying assignment.

    The s side keeps, per variable, the x-vertex opposite the assigned value
    (so the crossing s-edge names the value). Each satisfied literal then
    crosses on its unique hub edge; of a clause's falsified literals, the
    first pays with the junction-sink color and the second moves its
    junction to the s side to pay with the hub-junction color. A satisfied
    clause falsifies at most two literals, so the two shared colors suffice
    and the cut is rainbow.
    """
    f = artifact.formula
    if len(assignment.values) != f.variable_count:
        raise InvalidInputError("assignment length does not match variable count")
    if not f.evaluate(assignment):
        raise InvalidInputError("assignment does not satisfy the formula")
    vt = artifact.vertex_table
    side = {artifact.s}
    for j in range(1, f.variable_count + 1):
        keep = f"x{j}^0" if assignment.value(j) else f"x{j}^1"
        side.add(vt[keep])
    for i, clause in enumerate(f.clauses, start=1):
        falsified = [k for k, lit in enumerate(clause, start=1)
                     if assignment.value(abs(lit)) != (lit > 0)]
        if len(falsified) > 2:
            raise RuntimeError("unsatisfied clause slipped past evaluation")
        if len(falsified) == 2:
            side.add(vt[f"c{i}^{falsified[1]}"])
    cert = certificate_from_side(artifact.graph, side)
    check_cut_certificate(artifact.graph, cert, artifact.s, artifact.t)
    if not is_rainbow(artifact.coloring, cert.cut_edges):
        raise RuntimeError("constructed cut is not rainbow")
    return cert


def extract_assignment_from_cut(artifact: ReductionArtifact,
                                cut: CutCertificate) -> Assignment:
    """Read a satisfying assignment off a validated rainbow s-t cut.

    After minimizing to the boundary of side_s, variable j is true exactly
    when x_j^0 stays on the s side. Any rainbow cut admits this reading: a
    clause with all three literals falsified by it would need three
    crossings from the clause's two shared colors.
    """
    g, c = artifact.graph, artifact.coloring
    check_cut_certificate(g, cut, artifact.s, artifact.t)
    if not is_rainbow(c, cut.cut_edges):
        raise InvalidInputError("cut is not rainbow")
    f = artifact.formula
    vt = artifact.vertex_table
    side = cut.side_s
    values: list[bool] = []
    for j in range(1, f.variable_count + 1):
        v0, v1 = vt[f"x{j}^0"], vt[f"x{j}^1"]
        if v0 not in side and v1 not in side:
            raise InvalidInputError(
                f"both s-edges of variable {j} are cut; certificate does not "
                "follow the encoding")
        values.append(v0 in side)
    assignment = Assignment(tuple(values))
    if not f.evaluate(assignment):
        raise InvalidInputError("extracted assignment does not satisfy the formula")
    return assignment


@dataclass(frozen=True)
class ReductionReport:
    """Both directions of the equivalence, checked on one formula."""

    formula: CnfFormula
    artifact: ReductionArtifact
    satisfiable: bool
    cut_exists: bool
    equivalent: bool
    assignment: Assignment | None
    cut_from_assignment: CutCertificate | None
    found_cut: CutCertificate | None
    extracted_assignment: Assignment | None


def verify_reduction(f: CnfFormula, *,
                     node_budget: int = DEFAULT_NODE_BUDGET) -> ReductionReport:
    """Desk-scale check that satisfiability and rainbow-cut existence agree
    on f, translating witnesses in both directions where they exist."""
    if f.variable_count > VERIFY_MAX_VARIABLES or f.clause_count > VERIFY_MAX_CLAUSES:
        raise InvalidInputError(
            f"verification limited to {VERIFY_MAX_VARIABLES} variables and "
            f"{VERIFY_MAX_CLAUSES} clauses")
    artifact = build_reduction(f)
    assignment = solve_sat_bruteforce(f)
    found = find_rainbow_cut_exact(artifact.graph, artifact.coloring,
                                   artifact.s, artifact.t, node_budget)
    built = build_cut_from_assignment(artifact, assignment) if assignment else None
    extracted = extract_assignment_from_cut(artifact, found) if found else None
    return ReductionReport(f, artifact, assignment is not None, found is not None,
                           (assignment is not None) == (found is not None),
                           assignment, built, found, extracted)


def reduction_sidecar(artifact: ReductionArtifact, tool_version: str) -> dict:
    """JSON-ready sidecar for an encoded graph file: endpoints and name
    tables in 1-indexed file labels, plus provenance."""
    return {
        "s": artifact.s + 1,
        "t": artifact.t + 1,
        "vertex_table": {name: vid + 1 for name, vid in artifact.vertex_table.items()},
        "color_table": dict(artifact.color_table),
        "provenance": {
            "tool": "rainbowdisc",
            "version": tool_version,
            "formula_sha256": hashlib.sha256(
                serialize_dimacs_cnf(artifact.formula).encode()).hexdigest(),
        },
    }
