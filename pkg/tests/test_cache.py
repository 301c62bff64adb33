import pytest

from dyckposet.cache import HEADER, CacheConflictError, CacheRecord, ResultCache


def test_roundtrip(tmp_path):
    cache = ResultCache(tmp_path)
    big = 10**40 + 7
    cache.put(CacheRecord("UUDUDD", 12, 4, "brute"))
    cache.put(CacheRecord("UUDUDD", 3, 4, "formula"))
    cache.put(CacheRecord("UUDDUD", 99, big, "formula"))
    again = ResultCache(tmp_path)
    assert again.get("UUDUDD", 12) == CacheRecord("UUDUDD", 12, 4, "brute")
    assert again.get("UUDDUD", 99).count == big
    assert again.get("UUDDUD", 5) is None
    lines = (tmp_path / "UUDUDD.csv").read_text().splitlines()
    assert lines == [",".join(HEADER), "UUDUDD,3,4,formula", "UUDUDD,12,4,brute"]


def test_brute_supersedes_equal_formula(tmp_path):
    cache = ResultCache(tmp_path)
    cache.put(CacheRecord("UDUD", 5, 1, "formula"))
    assert cache.put(CacheRecord("UDUD", 5, 1, "brute")).engine == "brute"
    assert cache.put(CacheRecord("UDUD", 5, 1, "formula")).engine == "brute"


def test_conflicting_counts_raise(tmp_path):
    cache = ResultCache(tmp_path)
    cache.put(CacheRecord("UDUD", 5, 1, "brute"))
    with pytest.raises(CacheConflictError):
        cache.put(CacheRecord("UDUD", 5, 2, "formula"))


def test_no_temp_files_left(tmp_path):
    cache = ResultCache(tmp_path)
    for n in range(5):
        cache.put(CacheRecord("UD", n, int(n == 0), "brute"))
    assert sorted(p.name for p in tmp_path.iterdir()) == ["UD.csv"]


def test_empty_pattern_file(tmp_path):
    cache = ResultCache(tmp_path)
    cache.put(CacheRecord("", 2, 0, "brute"))
    assert (tmp_path / "EMPTY.csv").exists()
    assert cache.get("", 2).count == 0


@pytest.mark.parametrize("kwargs", [
    dict(pattern="UX", n=1, count=1, engine="brute"),
    dict(pattern="UD", n=-1, count=1, engine="brute"),
    dict(pattern="UD", n=1, count=-1, engine="brute"),
    dict(pattern="UD", n=1, count=1, engine="magic"),
])
def test_record_validation(kwargs):
    with pytest.raises(ValueError):
        CacheRecord(**kwargs)


def test_bad_header_rejected(tmp_path):
    (tmp_path / "UD.csv").write_text("a,b\n")
    with pytest.raises(ValueError):
        ResultCache(tmp_path).load("UD")
