import math
from fractions import Fraction

import pytest

from partpoly import (
    DomainError,
    avg,
    avg2_closed_form,
    avg3_lower_bound,
    avg_table,
    check_conjecture,
    harmonic,
    integral,
    iter_partitions,
    multiplicity_profile,
)


def _profile_by_enumeration(n, length):
    counts = [0] * n
    for p in iter_partitions(n, length):
        for i in range(1, p.largest_part + 1):
            counts[i - 1] += p.multiplicity(i)
    return tuple(counts)


def _avg_by_enumeration(n, length):
    values = [integral(p) for p in iter_partitions(n, length)]
    return sum(values) / len(values)


def test_profile_examples():
    assert multiplicity_profile(5, 2).counts == (1, 1, 1, 1, 0)
    assert multiplicity_profile(4, 2).counts == (1, 2, 1, 0)
    for n in (3, 7, 12):
        expected = tuple([0] * (n - 1) + [1])
        assert multiplicity_profile(n, 1).counts == expected


def test_profile_sum_identities():
    for n in range(1, 21):
        for l in range(1, n + 1):
            prof = multiplicity_profile(n, l)
            p_nl = prof.num_partitions
            assert sum(prof.counts) == l * p_nl
            assert sum(i * c for i, c in enumerate(prof.counts, start=1)) == n * p_nl


def test_profile_matches_enumeration():
    for n in range(1, 21):
        for l in range(1, n + 1):
            assert multiplicity_profile(n, l).counts == _profile_by_enumeration(n, l)


def test_profile_domain():
    with pytest.raises(DomainError):
        multiplicity_profile(5, 6)
    with pytest.raises(DomainError):
        multiplicity_profile(0, 1)


def test_avg_examples():
    for n in range(1, 40):
        assert avg(n, 1) == Fraction(1, n + 1)
        assert avg(n, n) == Fraction(1, 2)
    assert avg(5, 2) == Fraction(77, 240)


def test_avg_equals_mean_of_integrals():
    for n in range(1, 21):
        for l in range(1, n + 1):
            assert avg(n, l) == _avg_by_enumeration(n, l)


def test_avg_table_small():
    report = avg_table(3)
    assert report.values == (Fraction(1, 4), Fraction(5, 12), Fraction(1, 2))
    assert report.monotone
    assert avg_table(1).values == (Fraction(1, 2),)


def test_avg_table_reports_violations_structurally():
    report = avg_table(10)
    assert report.monotone
    assert report.first_violation is None
    assert report.values[-1] == Fraction(1, 2)
    assert all(0 < v <= Fraction(1, 2) for v in report.values)


def test_check_conjecture_small():
    reports = check_conjecture(10)
    assert len(reports) == 10
    assert all(r.monotone for r in reports)


def test_check_conjecture_parallel_matches_serial():
    serial = check_conjecture(12)
    parallel = check_conjecture(12, jobs=2)
    assert [r.values for r in serial] == [r.values for r in parallel]


def test_avg2_closed_form_examples():
    assert avg2_closed_form(5) == Fraction(77, 240)
    assert avg2_closed_form(4) == Fraction(17, 48)
    assert avg2_closed_form(3) == (harmonic(3) - 1) / 2 == Fraction(5, 12)
    with pytest.raises(DomainError):
        avg2_closed_form(1)


def test_avg2_closed_form_matches_profile_path():
    for n in range(2, 101):
        assert avg2_closed_form(n) == avg(n, 2)


def test_published_even_variant_disagrees_with_enumeration():
    # the 2/n correction term printed in the source derivation gives 19/48
    # at n = 4; direct enumeration of {3+1, 2+2} gives 17/48
    published = (harmonic(4) - 1 + Fraction(2, 4)) / (2 * 2)
    assert published == Fraction(19, 48)
    assert _avg_by_enumeration(4, 2) == Fraction(17, 48)
    assert published != _avg_by_enumeration(4, 2)


def test_avg1_le_avg2_up_to_200():
    for n in range(2, 201):
        assert Fraction(1, n + 1) <= avg2_closed_form(n)


def test_avg2_asymptotic_sanity():
    for n in (10 ** 3, 10 ** 4):
        ratio = float(avg2_closed_form(n)) * n / math.log(n)
        assert 0.8 <= ratio <= 1.2


def test_avg3_lower_bound_is_a_lower_bound():
    for n in range(4, 61):
        assert avg3_lower_bound(n) <= float(avg(n, 3)) + 1e-9
    with pytest.raises(DomainError):
        avg3_lower_bound(3)


def test_avg3_ratio_diagnostics():
    # bound·n/ln(n) climbs toward 2; convergence is logarithmic, so desk
    # scale only sees the trend and a loose window
    ratios = [avg3_lower_bound(n) * n / math.log(n) for n in (10 ** 3, 10 ** 4)]
    assert ratios[0] < ratios[1] < 2.0
    assert all(r > 1.2 for r in ratios)


def test_avg3_ge_avg2_desk_scale():
    for n in range(4, 51):
        assert avg(n, 3) >= avg(n, 2)


def test_part_count_lower_bound_for_three_parts():
    for n in range(6, 61):
        counts = multiplicity_profile(n, 3).counts
        for i in range(1, n - 1):
            assert counts[i - 1] >= (n - i) // 2
