import threading

import pytest

from fittinglike.config import Caps, get_caps, using_caps
from fittinglike.memo import MemoCache, current_cache, memo_scope, memoized
from fittinglike.radicals import f_star

from conftest import cat


def test_caps_defaults_and_environment():
    assert Caps() == Caps(200, 10**6, 5000)
    caps = Caps.from_env({"FITTINGLIKE_MAX_ORDER": "48", "FITTINGLIKE_MAX_DEGREE": "99", "OTHER": "1"})
    assert caps == Caps(48, 10**6, 99)


def test_using_caps_nests_and_restores():
    before = get_caps()
    with using_caps(max_order=10):
        assert get_caps().max_order == 10
        with using_caps(max_elements=5):
            assert get_caps() == Caps(10, 5, before.max_degree)
        assert get_caps().max_elements == before.max_elements
    assert get_caps() == before


def test_caps_are_thread_local():
    seen = []
    with using_caps(max_order=7):
        t = threading.Thread(target=lambda: seen.append(get_caps().max_order))
        t.start()
        t.join()
    assert seen == [Caps().max_order]


def test_memo_scope_isolates_caches():
    with memo_scope() as outer:
        f_star(cat("S4"))
        n = len(outer)
        assert n > 0
        with memo_scope() as inner:
            assert current_cache() is inner and len(inner) == 0
        assert current_cache() is outer and len(outer) == n


def test_memoized_calls_once_per_key():
    calls = []

    @memoized("probe")
    def probe(g, k):
        calls.append(k)
        return k * g.order

    g = cat("S3")
    with memo_scope():
        assert probe(g, 2) == probe(g, 2) == 12
        assert probe(cat("S3"), 2) == 12  # equal groups share entries
        assert probe(g, 3) == 18
    assert calls == [2, 3]


def test_memo_cache_first_writer_wins_under_threads():
    cache = MemoCache()
    barrier = threading.Barrier(8)
    results = []

    def work():
        barrier.wait()
        results.append(cache.get_or_compute("k", lambda: object()))

    threads = [threading.Thread(target=work) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert len(results) == 8 and all(r is results[0] for r in results)
    cache.clear()
    assert len(cache) == 0
