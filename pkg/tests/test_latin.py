import pytest

from totalcoloring.latin import (anti_circulant_square, is_anti_circulant,
                                 is_commutative, is_idempotent, is_latin)


def test_rejects_even_or_nonpositive_order():
    for q in [0, -3, 2, 8]:
        with pytest.raises(ValueError):
            anti_circulant_square(q)


def test_order_five_table():
    L = anti_circulant_square(5)
    assert L.cells == ((1, 4, 2, 5, 3),
                       (4, 2, 5, 3, 1),
                       (2, 5, 3, 1, 4),
                       (5, 3, 1, 4, 2),
                       (3, 1, 4, 2, 5))


def test_order_nine_first_row():
    L = anti_circulant_square(9)
    assert L.cells[0] == (1, 6, 2, 7, 3, 8, 4, 9, 5)


def test_closed_form_cases():
    # cell(i,j) = m when i+j = 2m, else k+1+m for i+j = 2m+1, with q = 2k+1
    q = 11
    k = (q - 1) // 2
    L = anti_circulant_square(q)
    for i in range(1, q + 1):
        for j in range(1, q + 1):
            s = i + j
            if s % 2 == 0:
                m = (s // 2 - 1) % q + 1
                assert L.cell(i, j) == m
            else:
                m = (s - 1) // 2
                assert L.cell(i, j) == (k + m) % q + 1


@pytest.mark.parametrize("q", [1, 3, 5, 7, 9, 21, 47])
def test_predicates(q):
    L = anti_circulant_square(q)
    assert is_latin(L)
    assert is_commutative(L)
    assert is_idempotent(L)
    assert is_anti_circulant(L)


def test_predicates_reject_counterexamples():
    from totalcoloring.latin import LatinSquare
    # circulant (rows shift right, not left) square, not idempotent
    q = 5
    cyc = LatinSquare(q, tuple(tuple((i - j) % q + 1 for j in range(q))
                               for i in range(q)))
    assert is_latin(cyc)
    assert not is_idempotent(cyc)
    assert not is_anti_circulant(cyc)
    broken = LatinSquare(2, ((1, 1), (2, 2)))
    assert not is_latin(broken)


def test_csv_roundtrip():
    L = anti_circulant_square(7)
    lines = L.to_csv().strip().splitlines()
    assert len(lines) == 7
    assert lines[0].split(",")[0] == "1"
