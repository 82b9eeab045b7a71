from fractions import Fraction
from itertools import combinations, permutations

import numpy as np
import pytest

from omlkit.exceptions import (
    ClosureLimitError,
    ConstructionError,
    ContextError,
    DerivationError,
    DimensionMismatchError,
    ParallelRaysError,
    ParseError,
)
from omlkit.lattice import parse_greechie
from omlkit.rays import (
    DERIVATION,
    ONE,
    SQRT2,
    ZERO,
    Ray,
    Scalar,
    contexts,
    coordinate_families,
    dot,
    element_count_of_orthoposet,
    embeddable,
    emit_rays,
    evaluate,
    is_orthogonal,
    kochen_specker_report,
    nor,
    ortho_closure,
    parse_rays,
    peres_rays,
    r4_product_check,
    r6_product_check,
    rays_to_greechie_text,
    replay_derivation,
    seventeen_generators,
    three_generators,
)
from omlkit.states import enumerate_states


R2 = SQRT2


@pytest.fixture(scope="module")
def closure():
    return ortho_closure(peres_rays())


# -- Q(√2) ----------------------------------------------------------------------

@pytest.mark.parametrize("token, a, b", [
    ("0", 0, 0),
    ("-3/4", Fraction(-3, 4), 0),
    ("r2", 0, 1),
    ("-r2", 0, -1),
    ("√2", 0, 1),
    ("3 r2", 0, 3),
    ("1/2+3/4 r2", Fraction(1, 2), Fraction(3, 4)),
    ("1-r2", 1, -1),
])
def test_scalar_parse(token, a, b):
    assert Scalar.parse(token) == Scalar(a, b)


@pytest.mark.parametrize("token", ["", "abc", "r2 r2", "1/2 3", "++1"])
def test_scalar_parse_errors(token):
    with pytest.raises(ParseError):
        Scalar.parse(token)


@pytest.mark.parametrize("line", [None, 4])
def test_parse_errors_carry_an_optional_line(line):
    with pytest.raises(ParseError) as info:
        Scalar.parse("abc", "coords.txt", line)
    assert (info.value.source, info.value.line) == ("coords.txt", line)
    with pytest.raises(ParseError) as info:
        Ray.parse("1, x, 0", "rays.txt", line)
    assert info.value.line == line
    assert str(info.value).startswith("rays.txt:4: " if line else "rays.txt: ")


def test_scalar_arithmetic():
    assert R2 * R2 == 2
    assert (ONE + R2) * (R2 - ONE) == 1
    assert (ONE + R2).inverse() == R2 - ONE
    assert R2 / 2 == Scalar(0, Fraction(1, 2))
    assert (ONE + R2) ** 2 == Scalar(3, 2)
    assert ZERO == 0 and not ZERO
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_scalar_field_axioms(rng):
    def draw():
        return Scalar(Fraction(rng.randint(-9, 9), rng.randint(1, 5)), Fraction(rng.randint(-9, 9), rng.randint(1, 5)))

    for _ in range(200):
        x, y, z = draw(), draw(), draw()
        assert (x + y) + z == x + (y + z)
        assert x * (y + z) == x * y + x * z
        assert x * y == y * x
        if x:
            assert x * x.inverse() == ONE


def test_scalar_order_is_exact():
    assert Scalar(Fraction(7, 5)) < R2 < Scalar(Fraction(3, 2))
    assert Scalar(3, -2).sign() == 1
    assert Scalar(-3, 2).sign() == -1
    assert abs(Scalar(1, -1)) == Scalar(-1, 1)
    assert sorted([R2, ONE, -R2, ZERO]) == [-R2, ZERO, ONE, R2]


@pytest.mark.parametrize("value", [Scalar(0), Scalar(Fraction(-5, 3)), R2, -R2, Scalar(1, -1), Scalar(Fraction(1, 2), 3)])
def test_scalar_token_round_trip(value):
    assert Scalar.parse(value.to_token()) == value


# -- rays -----------------------------------------------------------------------

def test_rays_are_projective():
    assert Ray((2, 0, 0)) == Ray((1, 0, 0)) == Ray((-1, 0, 0))
    assert Ray((R2, R2, 0)) == Ray((1, 1, 0))
    assert hash(Ray((0, 3, 3))) == hash(Ray((0, -1, -1)))
    assert Ray((1, 1, 0)) != Ray((1, -1, 0))


def test_canonical_representative():
    assert Ray((R2, 1, 1)).canonical == (R2, ONE, ONE)
    assert Ray((2, R2, R2)).canonical == (R2, ONE, ONE)
    assert Ray((Fraction(1, 2), Fraction(1, 3), 0)).canonical == (Scalar(3), Scalar(2), ZERO)
    assert str(Ray((0, -1, R2))) == "(0 1 -√2)"


def test_canonical_is_idempotent_and_scale_invariant(rng):
    for ray in peres_rays():
        assert Ray(ray.canonical).canonical == ray.canonical
        factor = Scalar(rng.randint(1, 9), rng.randint(-9, 9)) * rng.choice([1, -1])
        assert Ray(ray.scaled(factor)) == ray


def test_zero_vector_is_not_a_ray():
    with pytest.raises(ConstructionError):
        Ray((0, 0, 0))
    with pytest.raises(DimensionMismatchError):
        Ray(())


def test_dot_and_orthogonality():
    assert dot(Ray((1, 1, R2)), Ray((1, 1, -R2))) == 0
    assert is_orthogonal(Ray((R2, 1, 1)), Ray((0, 1, -1)))
    assert not is_orthogonal(Ray((1, 0, 0)), Ray((1, 1, 0)))
    assert dot(Ray((1, -1, R2)), Ray((1, 1, 0))) == 0
    assert dot(Ray((1, 1, 0)), Ray((R2, 1, 1))) == ONE + R2
    with pytest.raises(DimensionMismatchError):
        dot(Ray((1, 0)), Ray((1, 0, 0)))


def test_nor_is_the_cross_product():
    assert nor(Ray((1, 0, 0)), Ray((0, 1, 0))) == Ray((0, 0, 1))
    assert nor(Ray((1, 0, 0)), Ray((1, 1, 0))) == Ray((0, 0, 1))
    w = nor(Ray((R2, 1, 1)), Ray((1, 0, 0)))
    assert w == Ray((0, 1, -1))
    with pytest.raises(ParallelRaysError):
        nor(Ray((1, 1, 0)), Ray((2, 2, 0)))
    with pytest.raises(DimensionMismatchError):
        nor(Ray((1, 0)), Ray((0, 1)))


def test_nor_is_orthogonal_to_both_arguments(rng):
    def draw():
        return Ray(Scalar(rng.randint(-4, 4), rng.randint(-4, 4)) for _ in range(3))

    checked = 0
    while checked < 100:
        try:
            u, v = draw(), draw()
            w = nor(u, v)
        except (ConstructionError, ParallelRaysError):
            continue
        assert is_orthogonal(w, u) and is_orthogonal(w, v)
        checked += 1


# -- the Peres configuration -------------------------------------------------------

def test_peres_configuration_has_33_rays():
    rays = peres_rays()
    assert len(rays) == 33
    assert rays == sorted(rays)
    assert Ray((1, -1, R2)) in rays
    members = set(rays)
    for ray in rays:
        for perm in permutations(ray.canonical):
            assert Ray(perm) in members


def test_derivation_reproduces_peres_rays():
    assert len(DERIVATION) == 30
    assert set(replay_derivation()) == set(peres_rays())


def test_derivation_row_mismatch_is_reported():
    with pytest.raises(DerivationError) as info:
        replay_derivation([("(a+b)", (0, 1, 0))])
    assert info.value.row == "(a+b)"


@pytest.mark.parametrize("expression", ["(a+b", "(a b)", "(a+z)", "(a+a)", "(a+b))"])
def test_bad_expressions(expression):
    with pytest.raises(DerivationError):
        evaluate(expression, three_generators())


def test_nor_keyword_is_accepted():
    assert evaluate("(a nor b)", three_generators()) == Ray((0, 0, 1))
    assert evaluate("(a+(a+b))", three_generators()) == Ray((0, 1, 0))


def test_closure_has_57_rays(closure):
    assert len(closure) == 57
    assert set(peres_rays()) <= set(closure)
    assert sum(coordinate_families(set(closure) - set(peres_rays())).values()) == 24


def test_closure_is_idempotent(closure):
    assert ortho_closure(closure) == closure


def test_seventeen_generators_close_to_the_same_rays(closure):
    generators = seventeen_generators()
    assert len(generators) == 17
    assert set(ortho_closure(generators)) == set(closure)


def test_closure_cap():
    with pytest.raises(ClosureLimitError) as info:
        ortho_closure(peres_rays(), cap=5)
    assert info.value.cap == 5


def test_closure_needs_r3():
    with pytest.raises(DimensionMismatchError):
        ortho_closure([Ray((1, 0, 0, 0))])


def test_contexts_match_orthogonal_triple_scan(closure):
    """Float Gram matrix, every pairwise orthogonal triple counted directly."""
    vectors = np.array([[float(x) for x in ray.canonical] for ray in closure])
    gram = np.abs(vectors @ vectors.T) < 1e-9
    triples = {
        frozenset((i, j, k))
        for i, j, k in combinations(range(len(closure)), 3)
        if gram[i, j] and gram[j, k] and gram[i, k]
    }
    diagram = contexts(closure)
    assert all(len(c) == 3 for c in diagram.contexts)
    assert len(diagram.contexts) == len(triples)
    names = [str(r) for r in closure]
    assert {frozenset(names.index(a) for a in c) for c in diagram.contexts} == triples


def test_closure_has_no_two_valued_state(closure):
    diagram = contexts(closure)
    assert len(diagram.atoms) == 57
    assert enumerate_states(diagram) == []


def test_generators_alone_form_no_complete_frames():
    with pytest.raises(ContextError) as info:
        contexts(three_generators().values())
    assert info.value.offending


def test_lenient_contexts_keep_pairs():
    diagram = contexts([Ray((1, 0, 0)), Ray((0, 1, 0)), Ray((1, 1, 1))], strict=False)
    assert diagram.contexts == (("(0 1 0)", "(1 0 0)"),)


def test_orthoposet_element_count(closure):
    assert element_count_of_orthoposet(closure) == 116
    assert element_count_of_orthoposet([Ray((1, 0, 0)), Ray((0, 1, 0)), Ray((0, 0, 1))]) == 8


def test_kochen_specker_report():
    report = kochen_specker_report()
    assert (report.generated, report.closure, report.poset_elements, report.states) == (33, 57, 116, 0)
    assert report.derivation_matches
    assert report.seventeen_closure_matches
    assert report.triads_only
    assert report.seeded_states == 0
    assert not report.two_valued_states_exist
    assert report.verdict() == "no two-valued state exists"
    assert report.to_dict()["verdict"] == report.verdict()


# -- subalgebras -----------------------------------------------------------------

def test_mo_products_in_r4_and_r6():
    r4 = r4_product_check()
    assert r4.dimension == 4 and r4.passed
    r6 = r6_product_check()
    assert r6.dimension == 6 and r6.passed
    assert not r6.failures()


@pytest.mark.parametrize("q, factors, n, expected", [
    (0, [2], 2, True),
    (1, [2], 3, True),
    (0, [2], 3, False),
    (0, [2, 2], 4, True),
    (2, [2, 3], 5, False),
    (1, [2, 2, 2], 7, True),
    (0, [2, 2], 5, False),
])
def test_embeddable(q, factors, n, expected):
    assert embeddable(q, factors, n) is expected


# -- files -------------------------------------------------------------------------

def test_ray_file_round_trip():
    rays = parse_rays("# three rays\n1, 0, 0\n0,1,r2\n\n2, 2, -2 r2  # scaled\n")
    assert rays[2] == Ray((1, 1, -SQRT2))
    assert parse_rays(emit_rays(rays)) == rays
    assert emit_rays(rays).splitlines()[1] == "0,1,r2"


def test_ray_file_errors():
    with pytest.raises(ParseError):
        parse_rays("")
    with pytest.raises(ParseError):
        parse_rays("1,0,0\n1,0\n")
    with pytest.raises(ParseError) as info:
        parse_rays("1,0,0\n0,0,0\n")
    assert info.value.line == 2


def test_rays_to_greechie_text(closure):
    parsed = parse_greechie(rays_to_greechie_text(closure))
    diagram = contexts(closure)
    assert parsed.contexts == diagram.contexts
    assert set(parsed.atoms) == set(diagram.atoms)
