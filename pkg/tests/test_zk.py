import random
from itertools import product

from ulat36.zk import howell_form, iter_span, member, span_size


def brute_span(rows, k, n):
    words = {tuple([0] * n)}
    frontier = [tuple([0] * n)]
    while frontier:
        new = []
        for w in frontier:
            for r in rows:
                cand = tuple((a + b) % k for a, b in zip(w, r))
                if cand not in words:
                    words.add(cand)
                    new.append(cand)
        frontier = new
    return words


def test_howell_matches_brute_span():
    rng = random.Random(11)
    for k in (2, 3, 4, 6, 9):
        for _ in range(12):
            n = rng.randint(1, 4)
            nrows = rng.randint(0, 3)
            rows = [[rng.randrange(k) for _ in range(n)] for _ in range(nrows)]
            h = howell_form(rows, k, n)
            target = brute_span(rows, k, n)
            assert span_size(h, k) == len(target)
            got = {tuple(w) for w in iter_span(h, k, n)}
            assert got == target
            for vec in product(range(k), repeat=n):
                assert member(list(vec), h, k) == (vec in target)


def test_howell_canonical():
    rng = random.Random(12)
    for k in (4, 6, 9):
        for _ in range(15):
            n = rng.randint(2, 4)
            rows = [[rng.randrange(k) for _ in range(n)] for _ in range(2)]
            h1 = howell_form(rows, k, n)
            # generate the same span from different generators
            alt = [[(a + b) % k for a, b in zip(rows[0], rows[1])],
                   [(3 * x) % k if k % 3 else x for x in rows[1]]]
            if brute_span(alt, k, n) == brute_span(rows, k, n):
                assert howell_form(alt, k, n) == h1


def test_iter_span_no_duplicates():
    h = howell_form([[2, 1], [0, 2]], 4, 2)
    words = list(iter_span(h, 4, 2))
    assert len(words) == len({tuple(w) for w in words}) == span_size(h, 4)
