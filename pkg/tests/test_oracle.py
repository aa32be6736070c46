import json

import pytest

from kshapes.errors import DomainError, ResourceError
from kshapes.oracle import (BoxBound, box_enumerate_irreducible, check_confluence, check_saturation_uniqueness,
                            check_shape_lemmas, check_surjectivity, varphi_image)
from kshapes.partition import Partition


def test_box_examples():
    assert box_enumerate_irreducible(3, BoxBound(6, 6)) == [Partition(), Partition((1,)), Partition((2, 1))]
    assert len(box_enumerate_irreducible(4, BoxBound(6, 6))) == 17
    assert box_enumerate_irreducible(3, BoxBound(1, 1)) == [Partition(), Partition((1,))]


def test_box_errors():
    with pytest.raises(DomainError):
        BoxBound(0, 3)
    with pytest.raises(DomainError):
        box_enumerate_irreducible(2)
    with pytest.raises(ResourceError):
        box_enumerate_irreducible(6)
    assert BoxBound.default(5) == BoxBound(12, 12)
    assert BoxBound(12, 12).size() == 2704156


@pytest.mark.parametrize("k", [3, 4])
def test_surjectivity(k):
    report = check_surjectivity(k)
    assert report.ok and report.instances == len(varphi_image(k))


def test_confluence_examples():
    assert check_confluence(3).ok
    assert check_confluence(4).ok
    empty = check_confluence(4, trials=0)
    assert empty.ok and empty.instances == 0
    with pytest.raises(ResourceError):
        check_confluence(8)


def test_reports_are_json_lines():
    line = check_saturation_uniqueness(4).to_jsonl()
    obj = json.loads(line)
    assert obj["check"] == "saturation-uniqueness" and obj["ok"] is True and "\n" not in line


def test_shape_lemmas_from_box():
    report = check_shape_lemmas(4)
    assert report.ok and report.instances == 17
