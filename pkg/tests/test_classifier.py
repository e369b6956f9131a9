"""Local classification: codes, lookup, normalization, index, chi, blow-ups."""

import random

import pytest

from abelcover.classifier import (
    DC,
    SMOOTH,
    ClassificationGapError,
    LocalConfig,
    blowup_transform,
    chi_contribution,
    classify,
    config_table,
    iota_index,
    iterate_blowups,
    normalize_config,
    realize_table_row,
    relation_code,
)
from abelcover.groups import FiniteAbelianGroup
from abelcover.tables import table_rows

Z2_2 = FiniteAbelianGroup((2, 2))
Z2_3 = FiniteAbelianGroup((2, 2, 2))
Z2_4 = FiniteAbelianGroup((2, 2, 2, 2))


def basis(group):
    n = group.rank
    return [group.element(tuple(int(i == j) for i in range(n))) for j in range(n)]


def smooth(group, elements, dup1=False, dup2=False):
    return LocalConfig(group, SMOOTH, tuple(elements), dup1=dup1, dup2=dup2)


def dc(group, side1, side2, g0, dup1=False, dup2=False):
    return LocalConfig(group, DC, tuple(side1), tuple(side2), g0, dup1, dup2)


def test_relation_code_three_lines_with_sum_zero():
    a, b = basis(Z2_2)
    cfg = smooth(Z2_2, [a, b, a + b])
    code = relation_code(cfg)
    assert code.canonical == (0b111,)
    assert classify(cfg).row.label == "3.3"


def test_relation_code_e_config():
    a, b, c = basis(Z2_3)
    cfg = dc(Z2_3, [a, b], [a, b], Z2_3.zero())
    code = relation_code(cfg)
    assert code.canonical == (0b0101, 0b1010, 0b1111)
    assert classify(cfg).row.label == "E4.3"


def test_relation_code_permutation_invariance():
    a, b = basis(Z2_2)
    cfg = smooth(Z2_2, [a, b, a + b])
    rng = random.Random(7)
    for _ in range(20):
        lines = [a, b, a + b]
        rng.shuffle(lines)
        assert relation_code(smooth(Z2_2, lines)).canonical == relation_code(cfg).canonical


def test_classify_r_config_with_shared_line_elements():
    a, b = basis(Z2_2)
    cfg = dc(Z2_2, [b], [b], a)
    cls = classify(cfg)
    assert cls.row.label == "R2.1"
    assert cls.descriptor.singularity == "d.c."
    assert cls.chi_weight == 0


def test_classify_e42_chi_exponent():
    a, b = basis(Z2_2)
    cfg = dc(Z2_2, [a, a], [b, b], Z2_2.zero())
    cls = classify(cfg)
    assert cls.row.label == "E4.2"
    assert cls.chi_weight == Z2_2.order // cls.order_h == 1
    # in a larger ambient group the weight rescales to 2^(r-2)
    big = Z2_3
    cfg_big = dc(big, [basis(big)[0]] * 2, [basis(big)[1]] * 2, big.zero())
    assert classify(cfg_big).chi_weight == 2 ** (3 - 2)


def test_normalize_table2_and_table3_cases():
    e = basis(Z2_4)
    cfg = smooth(Z2_4, e, dup1=True)  # no relations, one double line
    ((copies, germ),) = normalize_config(cfg)
    assert copies == 2 and classify(germ).row.label == "3.1"

    cfg = smooth(Z2_4, e, dup1=True, dup2=True)
    ((copies, germ),) = normalize_config(cfg)
    assert copies == 4 and classify(germ).row.label == "2.1"

    a, b = basis(Z2_2)
    plain = smooth(Z2_2, [a, b])
    assert normalize_config(plain) == ((1, plain),)


def test_normalize_counts_multiply():
    for label in ("4'.5", "4''.9", "R4'.3", "E4'.2"):
        cfg = realize_table_row(label)
        total = cfg.inertia_order()
        for copies, germ in normalize_config(cfg):
            assert copies * germ.inertia_order() == total
            assert not germ.dup1 and not germ.dup2
            assert classify(germ).row.table == 1


def test_iota_examples():
    a, b = basis(Z2_2)
    assert iota_index(smooth(Z2_2, [a, b, a + b])) == 2
    e = basis(Z2_3)
    assert iota_index(smooth(Z2_3, [e[0], e[1], e[2], e[0] + e[1] + e[2]])) == 1
    assert iota_index(smooth(Z2_2, [a, b])) == 1
    assert iota_index(smooth(Z2_2, [])) == 1


def test_chi_contribution_values():
    g = FiniteAbelianGroup((2,)).element((1,))
    z2 = FiniteAbelianGroup((2,))
    cfg = dc(z2, [g, g], [g, g], z2.zero())
    assert classify(cfg).row.label == "E4.4"
    assert chi_contribution(cfg) == 1  # 2^(r-1) with r = 1

    a, b = basis(Z2_2)
    assert chi_contribution(dc(Z2_2, [b], [b], a)) == 0  # R2.1 is d.c.

    cfg = realize_table_row("R4.2")
    assert classify(cfg).iota == 2
    assert chi_contribution(cfg) == 0

    with pytest.raises(ValueError):
        chi_contribution(smooth(Z2_2, [a]))


def test_blowup_single_line():
    z2 = FiniteAbelianGroup((2,))
    g = z2.element((1,))
    result = blowup_transform(smooth(z2, [g]))
    assert result.exceptional == (("E", g),)
    (germ,) = result.germs
    assert germ.config.k == 2 and classify(germ.config).row.label == "2.2"


def test_blowup_case_one_double_line_no_relations():
    cfg = realize_table_row("4'.1")
    result = blowup_transform(cfg)
    ((_, e),) = result.exceptional
    assert e == sum(cfg.side1[1:], cfg.side1[0])
    by_site = {g.site: g for g in result.germs}
    dup_germ = by_site["E∩D1"]
    assert dup_germ.config.dup1 and dup_germ.config.k == 3
    assert set(dup_germ.config.side1) == {cfg.side1[0], cfg.side1[1], e}
    assert classify(dup_germ.config).row.label == "3'.1"
    assert classify(by_site["E∩D3"].config).row.label == "2.1"


def test_blowup_case_123_relation():
    cfg = realize_table_row("4'.5")
    result = blowup_transform(cfg)
    ((_, e),) = result.exceptional
    assert e == cfg.side1[3]  # g1+g2+g3 = 0 leaves g4
    a1_germs = [g for g in result.germs if classify(g.config).row.label == "2.2"]
    assert len(a1_germs) == 1 and a1_germs[0].copies == 4
    assert a1_germs[0].site == "E∩D4"


def test_blowup_dc_case():
    cfg = realize_table_row("R4'.1")
    result = blowup_transform(cfg)
    exceptional = dict(result.exceptional)
    assert exceptional["E1"] == cfg.g0 + cfg.side1[0] + cfg.side1[1]
    assert exceptional["E1"] == exceptional["E2"]
    by_site = {g.site: g for g in result.germs}
    assert classify(by_site["C∩E"].config).row.label == "R2.1"
    assert classify(by_site["E1∩D1"].config).row.label == "3'.1"
    assert classify(by_site["E2∩D3"].config).row.label == "2.1"
    # every germ of the first blow-up is already semismooth or d.c.
    finals = iterate_blowups(cfg, max_rounds=2)
    assert all(
        classify(g.config).descriptor.singularity in ("smooth", "semismooth", "d.c.")
        for g in finals
    )


def test_iterate_blowups_terminates_within_cap():
    finals = iterate_blowups(realize_table_row("4'.5"))
    assert {classify(g.config).row.label for g in finals} == {"3'.1", "2.1", "1.1"}


def test_classify_relabel_invariance():
    rng = random.Random(20240817)
    rows = [r for tid in range(1, 10) for r in table_rows(tid)]
    for _ in range(60):
        row = rng.choice(rows)
        cfg = realize_table_row(row.label)
        auto = random_automorphism(cfg.group, rng)
        relabeled = LocalConfig(
            cfg.group,
            cfg.base,
            tuple(auto[g] for g in cfg.side1),
            tuple(auto[g] for g in cfg.side2),
            auto[cfg.g0] if cfg.g0 is not None else None,
            cfg.dup1,
            cfg.dup2,
        )
        assert classify(relabeled).row.label == row.label


def random_automorphism(group, rng):
    """A random invertible linear map on a two-torsion group, as a lookup."""
    n = group.rank
    while True:
        rows = [rng.randrange(1, 1 << n) for _ in range(n)]
        if _invertible(rows, n):
            break
    table = {}
    for g in group.elements():
        image = 0
        for i, c in enumerate(g.coeffs):
            if c:
                image ^= rows[i]
        table[g] = group.element(tuple((image >> j) & 1 for j in range(n)))
    return table


def _invertible(rows, n):
    mat = list(rows)
    rank = 0
    for col in range(n):
        pivot = next((i for i in range(rank, n) if mat[i] >> col & 1), None)
        if pivot is None:
            return False
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        for i in range(n):
            if i != rank and mat[i] >> col & 1:
                mat[i] ^= mat[rank]
        rank += 1
    return rank == n


def test_forced_congruence_relation_in_dc_codes():
    for tid in range(4, 10):
        for row in table_rows(tid):
            cfg = realize_table_row(row.label)
            code = relation_code(cfg)
            k = cfg.k
            if k == 0:
                continue
            offset = 1 if cfg.branched else 0
            lines_mask = ((1 << (k + offset)) - 1) & ~(offset and 1)
            assert lines_mask in code.words or (
                cfg.branched and (lines_mask | 1) in code.words
            )


def test_classification_gap_for_unbalanced_dc_germ():
    a, b = basis(Z2_2)
    cfg = dc(Z2_2, [b], [], a)
    with pytest.raises(ClassificationGapError):
        classify(cfg)


def test_config_table_routing():
    a, b = basis(Z2_2)
    assert config_table(smooth(Z2_2, [a, b])) == 1
    assert config_table(smooth(Z2_2, [a, b], dup1=True)) == 2
    assert config_table(dc(Z2_2, [a], [a], Z2_2.zero())) == 4
    assert config_table(dc(Z2_2, [b], [b], a)) == 7
    assert config_table(dc(Z2_2, [a, b], [a, b], a, dup1=True)) == 8
