"""Catalog data, duality, partitions, canonical class, and the file format."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sblocus.catalog import (
    Catalog,
    CatalogParseError,
    CatalogValidationError,
    DualityUnavailableError,
    canonical_class,
    catalog_from_text,
    catalog_to_text,
    dual_involution,
    dual_locus_name,
    dual_partition,
    load,
    space_for_regime,
    transpose_partition,
)
from sblocus.linalg import Cone, membership, ns, nonneg_combination, pair

F = Fraction


def test_load_deg2_values():
    cat = load("deg2")
    assert cat.divisor("Ddeg").cls == ns("-1/4", "3/4", "-1/4")
    assert cat.divisor("Dunb").cls == ns("3/4", "-1/4", "-1/4")
    assert cat.divisor("T").cls == ns("1/2", "1/2", "1/2")


def test_load_deg3_lines_dunb():
    cat = load("deg3_lines")
    assert cat.divisor("Dunb").cls == ns("5/3", "-1/3", "-1/3")


def test_load_deg3_general_exact_facts():
    cat = load("deg3_general")
    dunb = cat.divisor("Dunb")
    assert dunb.fact_kind == "exact_sbl"
    assert dunb.fact_loci == frozenset({"C[(3,2)^*]", "Q((2)^*)L"})
    assert cat.divisor("S").fact_loci == frozenset({"C[(1,1,1)^*]", "Q((1,1)^*)L"})


def test_pairing_table_reproduces(catalog):
    for p in catalog.pairings:
        got = pair(catalog.curve(p.curve).row, catalog.divisor(p.divisor).cls)
        assert got == p.value, (p.curve, p.divisor, p.value, got)


def test_all_divisors_effective(catalog):
    gens = catalog.effective_generators()
    for d in catalog.divisors:
        assert nonneg_combination(d.cls, gens) is not None, d.name


def test_containment_poset_is_a_partial_order(catalog):
    names = [l.name for l in catalog.loci]
    for a in names:
        assert catalog.leq(a, a)
        for b in names:
            if a != b and catalog.leq(a, b):
                assert not catalog.leq(b, a)


def test_sign_only_rows_are_normalized(catalog):
    for c in catalog.curves:
        if c.exactness == "sign_only":
            assert all(r in (-1, 0, 1) for r in c.row)
            assert all(p.curve != c.name for p in catalog.pairings)


def test_dual_partition_examples():
    assert dual_partition((0, 0), 2, 4) == (2, 2)
    assert dual_partition((1, 0), 2, 4) == (2, 1)
    lam = (2, 1)
    assert dual_partition(dual_partition(lam, 2, 5), 2, 5) == lam


def test_dual_partition_rejects_bad_input():
    with pytest.raises(ValueError):
        dual_partition((1, 2), 2, 5)  # not weakly decreasing
    with pytest.raises(ValueError):
        dual_partition((4, 0), 2, 5)  # part exceeds n-k


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_dual_partition_involution_and_order_reversal(data):
    k = data.draw(st.integers(min_value=1, max_value=5))
    n = data.draw(st.integers(min_value=k + 1, max_value=k + 6))
    parts = data.draw(
        st.lists(st.integers(min_value=0, max_value=n - k), min_size=k, max_size=k)
    )
    lam = tuple(sorted(parts, reverse=True))
    mu = tuple(sorted(data.draw(
        st.lists(st.integers(min_value=0, max_value=n - k), min_size=k, max_size=k)
    ), reverse=True))
    assert dual_partition(dual_partition(lam, k, n), k, n) == lam
    if all(a >= b for a, b in zip(lam, mu)):
        ls, ms = dual_partition(lam, k, n), dual_partition(mu, k, n)
        assert all(a <= b for a, b in zip(ls, ms))


def test_dual_locus_names():
    assert dual_locus_name("C[(1,1,1)^*]") == "C[(3)^*]"
    assert dual_locus_name("C[(2,2,1)^*]") == "C[(3,2)^*]"
    assert dual_locus_name("Q((1,1)^*)L") == "Q((2)^*)L"
    assert dual_locus_name("Q[(1)^*]") == "Q[(1)^*]"
    assert dual_locus_name("C[(2,2)^*]") == "C[(2,2)^*]"
    assert dual_locus_name("boundary") == "boundary"
    assert transpose_partition((3, 2)) == (2, 2, 1)


def _wall_key(w):
    if w.ray_a <= w.ray_b:
        return (w.ray_a, w.ray_b, w.include_a, w.include_b)
    return (w.ray_b, w.ray_a, w.include_b, w.include_a)


def _as_sets(cat: Catalog):
    return (
        set(cat.divisors),
        set(cat.curves),
        set(cat.loci),
        set(cat.containments),
        set(cat.pairings),
        {
            (frozenset(c.rays), c.locus, frozenset(_wall_key(w) for w in c.walls))
            for c in cat.expected
        },
    )


@pytest.mark.parametrize("regime", ["deg2", "deg3_general"])
def test_dual_involution_fixes_builtin_catalogs(regime):
    cat = load(regime)
    dual = dual_involution(cat)
    # The swap permutes names but the data set is identical, so the builtin
    # catalogs are literally self-dual up to entry order (item ids permute).
    assert _as_sets(dual) == _as_sets(cat)
    again = dual_involution(dual)
    assert again == cat


def test_dual_involution_examples():
    cat = load("deg3_general")
    dual = dual_involution(cat)
    assert dual.divisor("S'").cls == ns("5/3", "-1/3", "-1/3")
    assert dual.divisor("S'").cls == cat.divisor("S'").cls
    d2 = load("deg2")
    assert dual_involution(d2).divisor("Dunb").cls == d2.divisor("Dunb").cls


def test_dual_involution_unavailable_for_lines():
    with pytest.raises(DualityUnavailableError):
        dual_involution(load("deg3_lines"))


def test_canonical_class_values():
    assert canonical_class(2, 4, 2) == ns(-2, -2, -1)
    assert canonical_class(3, 6, 3) == ns(-2, -2, 0)
    assert canonical_class(2, 5, 3) == ns("-4/3", "-7/3", "-1/3")


def test_minus_canonical_position():
    nef2 = Cone(load("deg2").nef_generators())
    assert membership(-canonical_class(2, 4, 2), nef2) == "interior"
    coeffs = nonneg_combination(-canonical_class(2, 4, 2), load("deg2").nef_generators())
    assert coeffs == [F(1), F(1), F(2)]
    nef3 = Cone(load("deg3_general").nef_generators())
    assert membership(-canonical_class(3, 6, 3), nef3) == "boundary"


def test_upper_bound_facts_are_poset_meets():
    # U and U' record the poset meet of the base loci they are contained in.
    cat = load("deg3_general")

    def meet(aset, bset):
        admitted = [
            l.name
            for l in cat.loci
            if cat.dominated(l.name, aset) and cat.dominated(l.name, bset)
        ]
        return cat.antichain(admitted)

    p, s, sp = (cat.divisor(n).fact_loci for n in ("P", "S", "S'"))
    assert cat.divisor("U").fact_loci == meet(p, s)
    assert cat.divisor("U'").fact_loci == meet(p, sp)
    lines = load("deg3_lines")
    lp, ls, ldunb = (lines.divisor(n).fact_loci for n in ("P", "S", "Dunb"))

    def meet_lines(aset, bset):
        admitted = [
            l.name
            for l in lines.loci
            if lines.dominated(l.name, aset) and lines.dominated(l.name, bset)
        ]
        return lines.antichain(admitted)

    assert lines.divisor("U").fact_loci == meet_lines(lp, ls)
    assert lines.divisor("U'").fact_loci == meet_lines(lp, ldunb)


def test_catalog_round_trip_is_bit_exact(catalog):
    text = catalog_to_text(catalog)
    parsed = catalog_from_text(text)
    assert parsed == catalog
    assert catalog_to_text(parsed) == text


def test_override_merge(tmp_path):
    override = tmp_path / "override.txt"
    override.write_text(
        "\n".join(
            [
                "[space]",
                "regime = deg2",
                "k = 2",
                "n = 6",
                "d = 2",
                "",
                "[curves]",
                "# replace C3 with an equivalent scaled test family",
                "C9 | 2 2 4 | - | exact",
                "",
                "[pairings]",
                "C9 . P = 2",
            ]
        ),
        encoding="utf-8",
    )
    cat = load("deg2", str(override))
    assert cat.space.n == 6
    assert cat.curve("C9").row == (F(2), F(2), F(4))
    assert cat.curve("C1").row == (F(1), F(0), F(3))  # base data retained


def test_override_validation_reports_quadruples(tmp_path):
    override = tmp_path / "bad.txt"
    override.write_text(
        "\n".join(
            [
                "[space]",
                "regime = deg2",
                "k = 2",
                "n = 4",
                "d = 2",
                "",
                "[pairings]",
                "C1 . P = 7",
                "C2 . P = 9",
            ]
        ),
        encoding="utf-8",
    )
    with pytest.raises(CatalogValidationError) as err:
        load("deg2", str(override))
    message = str(err.value)
    assert "(C1, P, expected 7, got 0)" in message
    assert "(C2, P, expected 9, got 0)" in message


def test_parse_error_reports_line_number(tmp_path):
    bad = tmp_path / "broken.txt"
    bad.write_text("[space]\nregime = deg2\nk = 2\nn = 4\nd = 2\n[curves]\nC9 | 1 2\n")
    with pytest.raises(CatalogParseError) as err:
        load("deg2", str(bad))
    assert "line 7" in str(err.value)


def test_space_for_regime_validation():
    sp = space_for_regime("deg3_lines")
    assert (sp.k, sp.n, sp.d) == (2, 5, 3)
    with pytest.raises(Exception):
        space_for_regime("deg4")
