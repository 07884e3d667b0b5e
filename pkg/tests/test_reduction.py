"""CNF handling, the SAT-to-rainbow-cut encoding, and witness translation."""

import hashlib
import random

import pytest

from rainbowdisc import (Assignment, CnfFormatError, CnfFormula, CutCertificate,
                         InvalidInputError, build_cut_from_assignment,
                         build_reduction, extract_assignment_from_cut,
                         find_rainbow_cut_exact, gen_cnf, is_rainbow,
                         parse_dimacs_cnf, reduction_sidecar,
                         serialize_dimacs_cnf, solve_sat_bruteforce,
                         verify_reduction)
from oracles import sat_oracle

ONE_CLAUSE = CnfFormula(3, ((1, 2, 3),))
TWO_CLAUSE = CnfFormula(4, ((1, -2, 3), (-1, 2, 4)))
# every sign pattern over three variables; unsatisfiable
ALL_SIGNS = CnfFormula(3, tuple(
    (a * 1, b * 2, c * 3) for a in (1, -1) for b in (1, -1) for c in (1, -1)))


class TestFormula:
    def test_clause_count(self):
        assert ONE_CLAUSE.clause_count == 1
        assert ALL_SIGNS.clause_count == 8

    def test_evaluate(self):
        assert ONE_CLAUSE.evaluate(Assignment((True, False, False)))
        assert not ONE_CLAUSE.evaluate(Assignment((False, False, False)))
        assert TWO_CLAUSE.evaluate(Assignment((False, False, False, True)))

    def test_repeated_variable_rejected(self):
        with pytest.raises(InvalidInputError, match="distinct"):
            CnfFormula(3, ((1, -1, 2),))

    def test_out_of_range_literal_rejected(self):
        with pytest.raises(InvalidInputError, match="range"):
            CnfFormula(2, ((1, 2, 3),))

    def test_wrong_arity_rejected(self):
        with pytest.raises(InvalidInputError, match="3 literals"):
            CnfFormula(3, ((1, 2),))


class TestDimacs:
    def test_parse_basic(self):
        f = parse_dimacs_cnf("c comment\np cnf 3 2\n1 -2 3 0\n-1 2 -3 0\n")
        assert f.variable_count == 3
        assert f.clauses == ((1, -2, 3), (-1, 2, -3))

    def test_clause_split_across_lines(self):
        f = parse_dimacs_cnf("p cnf 3 1\n1 2\n3 0\n")
        assert f.clauses == ((1, 2, 3),)

    def test_round_trip(self):
        rng = random.Random(31)
        for _ in range(20):
            f = gen_cnf(rng.randint(3, 8), rng.randint(1, 8), rng.randrange(10000))
            assert parse_dimacs_cnf(serialize_dimacs_cnf(f)) == f

    def test_missing_header(self):
        with pytest.raises(CnfFormatError, match="header"):
            parse_dimacs_cnf("1 2 3 0\n")

    def test_malformed_header(self):
        with pytest.raises(CnfFormatError, match="header"):
            parse_dimacs_cnf("p cnf three 1\n1 2 3 0\n")

    def test_duplicate_header(self):
        with pytest.raises(CnfFormatError, match="duplicate"):
            parse_dimacs_cnf("p cnf 3 1\np cnf 3 1\n1 2 3 0\n")

    def test_unterminated_clause(self):
        with pytest.raises(CnfFormatError, match="unterminated"):
            parse_dimacs_cnf("p cnf 3 1\n1 2 3\n")

    def test_clause_count_mismatch(self):
        with pytest.raises(CnfFormatError, match="declares"):
            parse_dimacs_cnf("p cnf 3 2\n1 2 3 0\n")

    def test_bad_literal_token(self):
        with pytest.raises(CnfFormatError, match="invalid literal"):
            parse_dimacs_cnf("p cnf 3 1\n1 two 3 0\n")

    def test_repeated_variable_in_clause(self):
        with pytest.raises(CnfFormatError, match="distinct"):
            parse_dimacs_cnf("p cnf 3 1\n1 -1 2 0\n")


class TestBruteForce:
    def test_lexicographically_first(self):
        assert solve_sat_bruteforce(ONE_CLAUSE) == Assignment((False, False, True))

    def test_unsat_returns_none(self):
        assert solve_sat_bruteforce(ALL_SIGNS) is None

    def test_no_clauses_all_false(self):
        assert solve_sat_bruteforce(CnfFormula(2, ())) == Assignment((False, False))

    def test_variable_limit(self):
        with pytest.raises(InvalidInputError, match="24"):
            solve_sat_bruteforce(CnfFormula(25, ()))

    def test_matches_oracle(self):
        rng = random.Random(37)
        for _ in range(40):
            f = gen_cnf(rng.randint(3, 7), rng.randint(1, 10), rng.randrange(10000))
            got = solve_sat_bruteforce(f)
            assert (got is not None) == sat_oracle(f)
            if got is not None:
                assert f.evaluate(got)


class TestBuild:
    def test_small_sizes(self):
        art = build_reduction(ONE_CLAUSE)
        assert art.graph.vertex_count == 12
        assert art.graph.edge_count == 17
        assert art.coloring.color_count == 9
        assert (art.s, art.t) == (0, 1)

    def test_two_clause_sizes(self):
        art = build_reduction(TWO_CLAUSE)
        assert art.graph.vertex_count == 18
        assert art.graph.edge_count == 29
        assert art.coloring.color_count == 15

    def test_sizes_track_formula(self):
        rng = random.Random(41)
        for _ in range(15):
            f = gen_cnf(rng.randint(3, 8), rng.randint(1, 8), rng.randrange(10000))
            art = build_reduction(f)
            n, m = f.variable_count, f.clause_count
            assert art.graph.vertex_count == 4 * m + 2 * n + 2
            assert art.graph.edge_count == 10 * m + 2 * n + 1
            assert art.coloring.color_count == 5 * m + n + 1

    def test_color_class_sizes(self):
        f = TWO_CLAUSE
        art = build_reduction(f)
        n, m = f.variable_count, f.clause_count
        sizes: dict[int, int] = {}
        for col in art.coloring.colors:
            sizes[col] = sizes.get(col, 0) + 1
        ct = art.color_table
        assert sizes[ct["r0"]] == m + 1
        for j in range(1, n + 1):
            assert sizes[ct[f"r{j}"]] == 2
        for i in range(1, m + 1):
            for k in (1, 2, 3):
                assert sizes[ct[f"r{i}^{k}"]] == 1
            assert sizes[ct[f"r{i}^4"]] == 3
            assert sizes[ct[f"r{i}^5"]] == 3

    def test_deterministic(self):
        assert build_reduction(TWO_CLAUSE) == build_reduction(TWO_CLAUSE)


class TestCutFromAssignment:
    def test_one_clause(self):
        art = build_reduction(ONE_CLAUSE)
        cert = build_cut_from_assignment(art, Assignment((True, False, False)))
        assert is_rainbow(art.coloring, cert.cut_edges)
        assert art.s in cert.side_s and art.t in cert.side_t
        # literals 2 and 3 are falsified; the second one's junction moves over
        assert art.vertex_table["c1^3"] in cert.side_s
        assert art.vertex_table["c1^2"] in cert.side_t

    def test_two_clause(self):
        art = build_reduction(TWO_CLAUSE)
        cert = build_cut_from_assignment(art, Assignment((False, False, False, True)))
        assert is_rainbow(art.coloring, cert.cut_edges)

    def test_unsatisfying_assignment_rejected(self):
        art = build_reduction(ONE_CLAUSE)
        with pytest.raises(InvalidInputError, match="does not satisfy"):
            build_cut_from_assignment(art, Assignment((False, False, False)))

    def test_wrong_length_rejected(self):
        art = build_reduction(ONE_CLAUSE)
        with pytest.raises(InvalidInputError, match="length"):
            build_cut_from_assignment(art, Assignment((True,)))


class TestExtract:
    def test_round_trip_identity(self):
        rng = random.Random(43)
        for _ in range(15):
            f = gen_cnf(rng.randint(3, 6), rng.randint(1, 5), rng.randrange(10000))
            a = solve_sat_bruteforce(f)
            if a is None:
                continue
            art = build_reduction(f)
            cert = build_cut_from_assignment(art, a)
            assert extract_assignment_from_cut(art, cert) == a

    def test_extract_from_search_cut(self):
        art = build_reduction(TWO_CLAUSE)
        found = find_rainbow_cut_exact(art.graph, art.coloring, art.s, art.t)
        assert found is not None
        a = extract_assignment_from_cut(art, found)
        assert TWO_CLAUSE.evaluate(a)

    def test_st_edge_is_the_only_shared_color_crossing(self):
        # the s-t edge's color class also covers every t-hub edge, so a
        # rainbow cut restricted to that class is exactly the s-t edge
        for f in (ONE_CLAUSE, TWO_CLAUSE):
            art = build_reduction(f)
            found = find_rainbow_cut_exact(art.graph, art.coloring, art.s, art.t)
            assert found is not None
            r0 = art.color_table["r0"]
            shared = {e for e in found.cut_edges if art.coloring.colors[e] == r0}
            assert shared == {0}
            assert art.graph.edges[0] == (art.s, art.t)

    def test_non_rainbow_cut_rejected(self):
        art = build_reduction(ONE_CLAUSE)
        side = frozenset({art.s})
        rest = frozenset(range(art.graph.vertex_count)) - side
        crossing = frozenset(
            e for e, (u, v) in enumerate(art.graph.edges) if (u in side) != (v in side))
        cert = CutCertificate(crossing, side, rest)
        with pytest.raises(InvalidInputError, match="not rainbow"):
            extract_assignment_from_cut(art, cert)

    def test_malformed_certificate_rejected(self):
        art = build_reduction(ONE_CLAUSE)
        cert = build_cut_from_assignment(art, Assignment((True, False, False)))
        broken = CutCertificate(frozenset(), cert.side_s, cert.side_t)
        with pytest.raises(InvalidInputError):
            extract_assignment_from_cut(art, broken)


class TestVerify:
    def test_satisfiable_formula(self):
        report = verify_reduction(ONE_CLAUSE)
        assert report.satisfiable and report.cut_exists and report.equivalent
        assert report.assignment is not None
        assert report.cut_from_assignment is not None
        assert report.found_cut is not None
        assert report.extracted_assignment is not None
        assert ONE_CLAUSE.evaluate(report.extracted_assignment)

    def test_unsatisfiable_formula(self):
        report = verify_reduction(ALL_SIGNS)
        assert not report.satisfiable
        assert not report.cut_exists
        assert report.equivalent
        assert report.assignment is None
        assert report.found_cut is None

    def test_random_formulas_equivalent(self):
        rng = random.Random(47)
        for _ in range(25):
            f = gen_cnf(rng.randint(3, 8), rng.randint(1, 8), rng.randrange(10000))
            assert verify_reduction(f).equivalent

    def test_size_guards(self):
        with pytest.raises(InvalidInputError, match="limited"):
            verify_reduction(CnfFormula(17, ()))
        big = CnfFormula(3, tuple((1, 2, 3) for _ in range(13)))
        with pytest.raises(InvalidInputError, match="limited"):
            verify_reduction(big)


class TestSidecar:
    def test_structure(self):
        art = build_reduction(ONE_CLAUSE)
        side = reduction_sidecar(art, "0.1.0")
        assert side["s"] == 1 and side["t"] == 2
        assert side["vertex_table"]["s"] == 1
        assert side["vertex_table"]["x1^0"] == 3
        assert side["color_table"] == art.color_table
        assert side["provenance"]["tool"] == "rainbowdisc"
        assert side["provenance"]["version"] == "0.1.0"
        expected = hashlib.sha256(serialize_dimacs_cnf(ONE_CLAUSE).encode()).hexdigest()
        assert side["provenance"]["formula_sha256"] == expected
