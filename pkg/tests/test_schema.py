import pytest
from pydantic import ValidationError

from schema.input_models import ComplexFile, GroupFile, SubgroupsFile
from schema.validate_inputs import main


def test_bundled_data_is_valid(capsys):
    assert main()
    assert "❌" not in capsys.readouterr().out


def test_group_file_needs_exactly_one_format():
    with pytest.raises(ValidationError):
        GroupFile.model_validate({})
    with pytest.raises(ValidationError):
        GroupFile.model_validate({"cayley": [[0]], "perm_degree": 1, "generators": []})
    with pytest.raises(ValidationError):
        GroupFile.model_validate({"perm_degree": 3})
    with pytest.raises(ValidationError):
        GroupFile.model_validate({"perm_degree": 2, "generators": [[[1, 2]]], "names": ["e", "a"]})


def test_unknown_keys_rejected():
    with pytest.raises(ValidationError):
        ComplexFile.model_validate({"n": 2, "facets": [[1], [2]], "extra": 1})
    with pytest.raises(ValidationError):
        SubgroupsFile.model_validate({"subgroups": []})
