"""Inference rules: lower/upper bounds, resolution, duality, verification."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sblocus.arrangement import homogenize
from sblocus.catalog import dual_locus_name, load
from sblocus.inference import (
    default_decomposition,
    label_point,
    lower_bound,
    verify_decomposition,
)
from sblocus.linalg import ns, slice_point

F = Fraction


def test_lower_bound_examples_deg2():
    cat = load("deg2")
    mid = ns("1/2", "1/2", "-1/2")
    assert lower_bound(mid, cat) == frozenset({"Q[(1,1)^*]", "Q[(2)^*]"})
    assert lower_bound(cat.divisor("T").cls, cat) == frozenset()


def test_lower_bound_example_deg3():
    cat = load("deg3_general")
    s = cat.divisor("S").cls
    assert lower_bound(s, cat) == frozenset({"C[(1,1,1)^*]", "Q((1,1)^*)L"})


def test_lower_bound_scale_invariant():
    cat = load("deg3_general")
    d = ns("1/2", "1/2", "-1/2")
    for s in (F(1, 7), F(3), F(22, 5)):
        assert lower_bound(d.scale(s), cat) == lower_bound(d, cat)


def _point_upper(regime, v):
    dec = default_decomposition(regime)
    engine = dec.engine
    p = homogenize(slice_point(v))
    upper, had = engine.bound([p])
    assert had
    return upper


def test_upper_bound_inside_nef_cone_is_empty():
    # Strictly between T and the H11-H2 chord on the symmetry axis.
    assert _point_upper("deg2", ns("9/40", "9/40", "1/10")) == frozenset()


def test_upper_bound_example_deg2_interior():
    # Between Ddeg and Dunb, slightly toward the interior.
    v = ns("1/2", "1/2", "-1/2") + ns("1/50", "1/50", "1/50")
    upper = _point_upper("deg2", v)
    assert upper == frozenset({"Q[(1,1)^*]", "Q[(2)^*]"})


def test_upper_bound_example_deg3_f_region():
    cat = load("deg3_general")
    f = cat.divisor("F").cls
    h11 = cat.divisor("H11").cls
    h2 = cat.divisor("H2").cls
    v = f + h11.scale(F(1, 10)) + h2.scale(F(1, 10))
    assert _point_upper("deg3_general", v) == frozenset({"C[(1)^*]", "Q((1)^*)L"})


def test_all_faces_resolved_deg2_and_deg3_general():
    for regime in ("deg2", "deg3_general"):
        dec = default_decomposition(regime)
        assert all(lab.resolved for lab in dec.labels), regime


def test_deg3_lines_all_but_known_sliver_resolved():
    dec = default_decomposition("deg3_lines")
    gaps = [i for i, lab in enumerate(dec.labels) if not lab.resolved]
    # The recorded curve evidence leaves exactly one region undecided: the
    # part of the (Ddeg, Dunb, P) chamber beyond the Q((1,1)^*)L wall.
    assert 0 < len(gaps) <= 4
    for i in gaps:
        lab = dec.labels[i]
        assert lab.lower == frozenset({"C[(3)^*]", "C[(2,1)^*]", "Q((2)^*)L"})
        assert lab.upper == frozenset(
            {"C[(3)^*]", "C[(2,1)^*]", "Q((1,1)^*)L", "Q((2)^*)L"}
        )


def test_nef_faces_empty_and_off_nef_nonempty(decomposition):
    arr = decomposition.arrangement
    cat = decomposition.catalog
    nef = [homogenize(slice_point(cat.divisor(n).cls)) for n in ("H11", "H2", "T")]
    from sblocus.arrangement import Hull

    hull = Hull(nef)
    for face, lab in zip(arr.faces2, decomposition.labels):
        inside_nef = all(hull.contains(v) for v in face.vertices)
        if inside_nef:
            assert lab.lower == frozenset() and lab.upper == frozenset()
        else:
            assert lab.lower, "off-nef face must have nonempty stable base locus"


def test_soundness_lower_below_upper(decomposition):
    cat = decomposition.catalog
    for lab in decomposition.labels:
        for locus in lab.lower:
            assert cat.dominated(locus, lab.upper)


@pytest.mark.parametrize("sym_regime", ["deg2", "deg3_general"])
def test_duality_equivariance_face_by_face(sym_regime):
    dec = default_decomposition(sym_regime)
    by_poly = {
        frozenset(f.vertices): dec.labels[f.index].lower
        for f in dec.arrangement.faces2
    }
    for face in dec.arrangement.faces2:
        mirrored = frozenset((y, x, w) for (x, y, w) in face.vertices)
        swapped = frozenset(
            dual_locus_name(l) for l in dec.labels[face.index].lower
        )
        assert by_poly[mirrored] == swapped


def test_verification_passes_deg2_and_deg3_general():
    for regime in ("deg2", "deg3_general"):
        rep = verify_decomposition(default_decomposition(regime))
        assert rep.passed, rep.to_text(load(regime))
        assert rep.chamber_count == rep.expected_count


def test_verification_report_contents_deg2():
    rep = verify_decomposition(default_decomposition("deg2"))
    assert rep.chamber_count == 8
    assert {m.item_id for m in rep.per_chamber} == set(range(1, 9))
    assert all(ok for _, ok in rep.wall_results)
    text = rep.to_text(load("deg2"))
    assert "PASS" in text


def test_verification_deg3_lines_reports_known_gap():
    rep = verify_decomposition(default_decomposition("deg3_lines"))
    assert not rep.passed
    assert rep.chamber_count == 16 and rep.expected_count == 15
    matched = {m.item_id for m in rep.per_chamber if m.item_id is not None}
    assert matched == set(range(1, 16)) - {6}
    assert all(ok for _, ok in rep.wall_results)


def test_wall_labels_match_their_items(decomposition):
    dec = decomposition
    rep = verify_decomposition(dec)
    for desc, ok in rep.wall_results:
        assert ok, desc


def test_antichain_idempotent_and_order_independent():
    cat = load("deg3_general")
    names = [l.name for l in cat.loci]

    @settings(max_examples=200, deadline=None)
    @given(st.lists(st.sampled_from(names), max_size=8), st.randoms())
    def run(subset, rng):
        once = cat.antichain(subset)
        assert cat.antichain(once) == once
        shuffled = list(subset)
        rng.shuffle(shuffled)
        assert cat.antichain(shuffled) == once
        for a in subset:
            assert cat.dominated(a, once)

    run()


def test_point_label_at_named_rays():
    dec = default_decomposition("deg2")
    cat = dec.catalog
    for name in ("P", "Ddeg", "Dunb"):
        p = dec.arrangement.rays[name]
        lab = label_point(p, cat, dec.arrangement, dec.engine)
        assert lab.resolved
        assert lab.lower == cat.divisor(name).fact_loci
