import numpy as np
import pytest

from omlkit.exceptions import (
    ConstructionError,
    DiagramError,
    LatticeError,
    ParseError,
    PastingError,
    SizeLimitError,
    UnknownAtomError,
)
from omlkit.lattice import (
    BoundedLattice,
    GreechieDiagram,
    OrthoLattice,
    are_compatible,
    benzene_ring,
    boolean,
    check_lattice_axioms,
    check_laws,
    check_ortholattice_identities,
    compatibility_witness,
    dumps_lattice,
    emit_greechie,
    find_isomorphism,
    from_greechie,
    greechie_dot,
    hasse_dot,
    horizontal_sum,
    implication_chain,
    is_distributive,
    is_isomorphic,
    is_modular,
    is_order_embedding,
    is_orthomodular,
    law_instance,
    loads_lattice,
    mo,
    parse_greechie,
    pentagon,
    product,
    same_diagram,
    subalgebra_family,
    to_greechie,
    two_element,
)


# -- constructors ---------------------------------------------------------------

@pytest.mark.parametrize("k", [0, 1, 2, 3, 4])
def test_boolean_sizes(k):
    lattice = boolean(k)
    assert len(lattice) == 2 ** k
    assert len(lattice.atoms()) == k


def test_boolean_labels_and_complements():
    lattice = boolean(3)
    assert lattice.elements[:4] == ("0", "{a}", "{b}", "{c}")
    assert lattice.ortho("{a}") == "{b,c}"
    assert lattice.join("{a}", "{b}") == "{a,b}"
    assert lattice.meet("{a,b}", "{b,c}") == "{b}"


def test_boolean_rejects_bad_input():
    with pytest.raises(ConstructionError):
        boolean(-1)
    with pytest.raises(ConstructionError):
        boolean(2, atoms=["x", "x"])


def test_two_element():
    lattice = two_element()
    assert lattice.elements == ("0", "1")
    assert lattice.ortho("0") == "1"


def test_mo2_structure():
    lattice = mo(2)
    assert lattice.elements == ("0", "p-", "p+", "q-", "q+", "1")
    assert lattice.atoms() == ["p-", "p+", "q-", "q+"]
    assert lattice.ortho("p-") == "p+"
    assert lattice.join("p-", "q-") == "1"
    assert lattice.meet("p-", "q+") == "0"
    assert len(lattice.covers()) == 8


def test_mo_needs_positive_n():
    with pytest.raises(ConstructionError):
        mo(0)


def test_horizontal_sum_of_two_squares_is_mo2():
    assert is_isomorphic(horizontal_sum(boolean(2), boolean(2)), mo(2))


def test_horizontal_sum_renames_colliding_labels():
    summed = horizontal_sum(boolean(2), boolean(3))
    assert len(summed) == 10
    assert "1.{a}" in summed and "2.{a,b}" in summed


def test_horizontal_sum_identities():
    assert is_isomorphic(horizontal_sum(mo(1), mo(2)), mo(3))
    assert is_isomorphic(horizontal_sum(mo(2), two_element()), mo(2))
    assert is_isomorphic(horizontal_sum(boolean(3), mo(1)), horizontal_sum(mo(1), boolean(3)))


def test_product_sizes_and_order():
    lattice = product(two_element(), mo(2))
    assert len(lattice) == 12
    assert lattice.le("(0,p-)", "(1,p-)")
    assert lattice.ortho("(0,p-)") == "(1,p+)"


def test_subalgebra_family():
    assert is_isomorphic(subalgebra_family(2, 3), mo(3))
    assert len(subalgebra_family(3, 2)) == 12
    assert len(subalgebra_family(4, 2)) == 24
    with pytest.raises(ConstructionError):
        subalgebra_family(1, 2)


def test_unknown_element():
    with pytest.raises(UnknownAtomError):
        mo(2).index("r-")


def test_missing_join_is_not_a_lattice():
    labels = ["0", "a", "b", "c", "d", "1"]
    pairs = [("0", "a"), ("0", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "1"), ("d", "1")]
    with pytest.raises(LatticeError):
        BoundedLattice.from_relations(labels, pairs)
    poset = BoundedLattice.from_relations(labels, pairs, require_lattice=False)
    assert not poset.is_lattice
    with pytest.raises(LatticeError):
        poset.join("a", "b")


def test_cycle_is_rejected():
    with pytest.raises(ConstructionError):
        BoundedLattice.from_relations(["0", "a", "b", "1"], [("a", "b"), ("b", "a")])


def test_bad_orthocomplement():
    leq = boolean(2).leq_matrix
    with pytest.raises(LatticeError):
        OrthoLattice(boolean(2).elements, leq, ["1", "{a}", "{b}", "0"])


# -- laws -----------------------------------------------------------------------

def test_mo2_laws_and_distributivity_witness():
    distributive, modular, orthomodular = check_laws(mo(2))
    assert not distributive
    assert distributive.witness == ("p-", "p+", "q-")
    assert (distributive.lhs, distributive.rhs) == ("p-", "1")
    assert modular.holds
    assert orthomodular.holds


def test_textbook_distributivity_instance():
    report = law_instance(mo(2), "distributive", "p-", "q-", "q+")
    assert not report.holds
    assert (report.lhs, report.rhs) == ("p-", "1")


def test_modular_instance_outside_premise_is_vacuous():
    report = law_instance(mo(2), "modular", "p-", "q-", "q+")
    assert report.holds
    assert report.extra == {"vacuous": True}


def test_pentagon_is_not_modular():
    report = is_modular(pentagon())
    assert not report
    assert report.witness == ("a", "c", "b")
    assert (report.lhs, report.rhs) == ("b", "a")
    assert not is_distributive(pentagon())


def test_benzene_ring_is_not_orthomodular():
    report = is_orthomodular(benzene_ring())
    assert not report
    assert report.witness == ("a", "b")
    assert (report.lhs, report.rhs) == ("b", "a")


def test_orthomodular_needs_orthocomplement():
    with pytest.raises(LatticeError):
        is_orthomodular(pentagon())


@pytest.mark.parametrize("k", [1, 2, 3])
def test_boolean_algebras_satisfy_every_law(k):
    assert all(check_laws(boolean(k)))
    assert all(check_lattice_axioms(boolean(k)))
    assert all(check_ortholattice_identities(boolean(k)))


@pytest.mark.parametrize("lattice", [mo(1), mo(2), mo(3), benzene_ring(), pentagon(), product(two_element(), mo(2))])
def test_law_implications(lattice):
    assert implication_chain(check_laws(lattice))
    assert all(check_lattice_axioms(lattice))


def test_ortholattice_identities_on_mo3():
    reports = check_ortholattice_identities(mo(3))
    assert [r.law for r in reports] == ["(p')' = p", "1' = 0", "0' = 1", "p ∨ p' = 1", "p ∧ p' = 0"]
    assert all(reports)


def test_law_scans_match_brute_force():
    """Independent triple loop over meet/join for every law."""
    for lattice in (mo(2), benzene_ring(), product(two_element(), mo(2))):
        labels = lattice.elements
        dist = all(
            lattice.join(a, lattice.meet(b, c)) == lattice.meet(lattice.join(a, b), lattice.join(a, c))
            for a in labels for b in labels for c in labels
        )
        mod = all(
            lattice.meet(lattice.join(a, b), c) == lattice.join(a, lattice.meet(b, c))
            for a in labels for b in labels for c in labels if lattice.le(a, c)
        )
        om = all(
            b == lattice.join(a, lattice.meet(b, lattice.ortho(a)))
            for a in labels for b in labels if lattice.le(a, b)
        )
        assert [r.holds for r in check_laws(lattice)] == [dist, mod, om]


def test_parallel_scan_matches_serial(isolated_settings):
    isolated_settings.apply_overrides({"lattice": {"parallel_threshold": 2}})
    lattice = product(boolean(3), mo(2))
    serial = is_distributive(lattice, workers=1)
    parallel = is_distributive(lattice, workers=2)
    assert serial.witness == parallel.witness


def test_size_guard():
    with pytest.raises(SizeLimitError) as info:
        is_distributive(boolean(3), max_elements=4)
    assert info.value.size == 8 and info.value.limit == 4
    assert is_distributive(boolean(3), max_elements=4, allow_large=True)


def test_implies_reads_order():
    lattice = mo(2)
    assert lattice.implies("0", "p-")
    assert lattice.implies("p-", "1")
    assert not lattice.implies("p-", "q-")


def test_compatibility():
    lattice = mo(2)
    assert are_compatible(lattice, "p-", "p+")
    assert compatibility_witness(lattice, "p-", "q-") is None
    assert not are_compatible(lattice, "p-", "q-")


# -- Greechie diagrams ----------------------------------------------------------

def test_parse_and_emit_greechie():
    text = "# spin one-half\np-, p+\nq-,q+\n\n"
    diagram = parse_greechie(text)
    assert diagram.atoms == ("p-", "p+", "q-", "q+")
    assert emit_greechie(diagram) == "p-,p+\nq-,q+\n"
    assert parse_greechie(emit_greechie(diagram)) == diagram


@pytest.mark.parametrize("text", ["", "# nothing\n", "a,,b\n"])
def test_parse_greechie_errors(text):
    with pytest.raises(ParseError):
        parse_greechie(text)


@pytest.mark.parametrize("contexts", [
    [("a",)],
    [("a", "a")],
    [("a", "b", "c"), ("a", "b")],
    [("0", "b")],
])
def test_diagram_invariants(contexts):
    with pytest.raises(DiagramError):
        GreechieDiagram.from_contexts(contexts)


def test_atom_outside_contexts():
    with pytest.raises(DiagramError):
        GreechieDiagram(("a", "b", "c"), (("a", "b"),))


def test_pasting_two_pairs_gives_mo2(mo2_diagram):
    lattice = from_greechie(mo2_diagram)
    assert len(lattice) == 6
    assert is_isomorphic(lattice, mo(2))


def test_pasting_two_triads(two_triads):
    lattice = from_greechie(two_triads)
    assert len(lattice) == 12
    assert is_isomorphic(lattice, product(two_element(), mo(2)))
    assert lattice.ortho("c") == "c'"
    assert all(check_laws(lattice)[1:])


def test_single_triad_is_boolean(triad):
    assert is_isomorphic(from_greechie(triad), boolean(3))


def test_contexts_sharing_two_atoms_cannot_paste():
    diagram = GreechieDiagram.from_contexts([("a", "b", "c"), ("a", "b", "d")])
    with pytest.raises(PastingError):
        from_greechie(diagram)


def test_pairs_sharing_an_atom_cannot_paste():
    # b = a' = c
    diagram = GreechieDiagram.from_contexts([("a", "b"), ("a", "c")])
    with pytest.raises(PastingError) as info:
        from_greechie(diagram)
    assert set(info.value.elements) == {"b", "c"}


@pytest.mark.parametrize("contexts", [
    [("a", "b", "c"), ("a", "d")],
    [("a", "b"), ("a", "c"), ("c", "d")],
    [("a", "b", "c", "d"), ("d", "e"), ("e", "f", "g")],
])
def test_pasting_never_drops_atoms(contexts):
    with pytest.raises(PastingError):
        from_greechie(GreechieDiagram.from_contexts(contexts), require_lattice=False)


def test_blocks_of_different_sizes_paste():
    diagram = GreechieDiagram.from_contexts([("a", "b", "c", "d"), ("d", "e", "f")])
    lattice = from_greechie(diagram)
    assert len(lattice) == 20
    assert sorted(lattice.atoms()) == sorted(diagram.atoms)
    assert same_diagram(to_greechie(lattice), diagram)


@pytest.mark.parametrize("name", ["mo2_diagram", "triad", "two_triads", "pentagon_loop"])
def test_greechie_round_trip(request, name):
    diagram = request.getfixturevalue(name)
    assert same_diagram(to_greechie(from_greechie(diagram, require_lattice=False)), diagram)


def test_pentagon_loop_is_orthomodular(pentagon_loop):
    lattice = from_greechie(pentagon_loop)
    assert len(lattice) == 22
    assert is_orthomodular(lattice)


# -- isomorphism, I/O, DOT --------------------------------------------------------

def test_isomorphism_respects_orthocomplement():
    assert not is_isomorphic(mo(2), mo(3))
    assert is_isomorphic(boolean(2), mo(1))
    mapping = find_isomorphism(mo(2), horizontal_sum(boolean(2), boolean(2)))
    assert mapping is not None
    assert mapping["0"] == "0" and mapping["1"] == "1"


def test_order_embedding():
    assert is_order_embedding(boolean(1), boolean(2), {"0": "0", "1": "1"})
    assert not is_order_embedding(boolean(1), boolean(2), {"0": "{a}", "1": "{b}"})


@pytest.mark.parametrize("lattice", [mo(2), pentagon(), product(two_element(), mo(2))])
def test_lattice_json_round_trip(lattice):
    restored = loads_lattice(dumps_lattice(lattice))
    assert restored == lattice
    assert type(restored) is type(lattice)


def test_lattice_json_errors():
    with pytest.raises(ParseError):
        loads_lattice("{not json")
    with pytest.raises(ParseError):
        loads_lattice('{"format_version": 2, "elements": ["0"]}')
    with pytest.raises(ParseError):
        loads_lattice("[1, 2]")


def test_hasse_dot():
    source = hasse_dot(mo(2))
    assert "strict digraph hasse {" in source
    assert "rankdir=BT" in source
    assert source.count("->") == 8


def test_greechie_dot(two_triads):
    source = greechie_dot(two_triads)
    assert "strict graph greechie {" in source
    assert source.count("--") == 6


def test_operation_tables_are_read_only():
    lattice = mo(2)
    with pytest.raises(ValueError):
        lattice.meet_table[0, 0] = 1
    assert np.array_equal(lattice.meet_table, lattice.meet_table.T)
