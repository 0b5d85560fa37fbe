from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from legis.errors import UnparsableHref
from legis.ingest.uri import article_uri, law_uri_date, normalize_uri


def test_trailing_slash_stripped():
    assert normalize_uri("/akn/it/act/2010-03-15/123/") == ("/akn/it/act/2010-03-15/123", False)


def test_paragraph_fragment_sets_flag_and_truncates_to_article():
    uri, specifies = normalize_uri("/akn/it/act/2010-03-15/123#art_4#com_2")
    assert uri == "/akn/it/act/2010-03-15/123#art_4"
    assert specifies is True


def test_par_fragment_also_counts_as_paragraph():
    uri, specifies = normalize_uri("/akn/it/act/2010-03-15/123#par_2")
    assert uri == "/akn/it/act/2010-03-15/123"
    assert specifies is True


def test_non_act_href_rejected():
    with pytest.raises(UnparsableHref):
        normalize_uri("mailto:x@y")


@pytest.mark.parametrize("href", ["", "   ", "/akn/it/act/not-a-date/1", "/akn/it/act/2010-13-45/1", "/akn/it/act/2010-01-01/1/extra"])
def test_malformed_hrefs_rejected(href):
    with pytest.raises(UnparsableHref):
        normalize_uri(href)


def test_scheme_segments_lowercased():
    uri, _ = normalize_uri("/AKN/IT/ACT/2010-03-15/123B#ART_4")
    assert uri == "/akn/it/act/2010-03-15/123b#art_4"


def test_absolute_url_prefix_accepted():
    uri, _ = normalize_uri("https://example.org/akn/it/act/2010-03-15/123")
    assert uri == "/akn/it/act/2010-03-15/123"


@given(
    country=st.sampled_from(["it", "fr", "de", "us"]),
    year=st.integers(1900, 2030),
    month=st.integers(1, 12),
    day=st.integers(1, 28),
    number=st.from_regex(r"[a-z0-9][a-z0-9._-]{0,6}", fullmatch=True),
    art=st.one_of(st.none(), st.integers(1, 200)),
    com=st.one_of(st.none(), st.integers(1, 20)),
    trailing=st.sampled_from(["", "/"]),
)
def test_normalization_is_idempotent(country, year, month, day, number, art, com, trailing):
    href = f"/akn/{country}/act/{year:04d}-{month:02d}-{day:02d}/{number}"
    if art is not None:
        href += f"#art_{art}"
    if com is not None:
        href += f"#com_{com}"
    href += trailing
    uri, specifies = normalize_uri(href)
    assert specifies is (com is not None)
    again_uri, again_specifies = normalize_uri(uri)
    assert again_uri == uri
    # The canonical form carries no paragraph fragment, so the flag is
    # stable exactly when the original had none.
    assert again_specifies is False


def test_law_uri_date_roundtrip():
    assert law_uri_date("/akn/it/act/2010-03-15/123").isoformat() == "2010-03-15"


def test_article_uri_shape():
    assert article_uri("/akn/it/act/2010-03-15/123", "3-BIS") == "/akn/it/act/2010-03-15/123#art_3-bis"
