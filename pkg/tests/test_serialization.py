import pytest

import systola as sy
from systola.errors import ParameterError


def test_complex_round_trip(tmp_path, rp2):
    path = tmp_path / "rp2.cx"
    sy.write_complex(rp2, path)
    again = sy.read_complex(path)
    assert again == rp2


def test_complex_serialization_is_byte_stable(tmp_path, rp2):
    first = sy.dumps_complex(rp2)
    assert first == sy.dumps_complex(sy.loads_complex(first))
    assert first.endswith("\n")


def test_cochain_round_trip(tmp_path, rp2, rp2_class):
    path = tmp_path / "xi.cochain"
    sy.write_cochain(rp2_class, path)
    again = sy.read_cochain(path, rp2)
    assert again.values == rp2_class.values


def test_cochain_covers_every_edge(rp2, rp2_class):
    import json
    doc = json.loads(sy.dumps_cochain(rp2_class))
    assert len(doc["edges"]) == len(rp2.faces(1)) == len(doc["values"])
    assert doc["edges"] == sorted(doc["edges"])


def test_integer_cochain_round_trip(tmp_path):
    X = sy.gen_polygon(4)
    xi = sy.Cochain1(X, {(0, 1): 2, (1, 2): -1}, sy.RING_Z)
    path = tmp_path / "z.cochain"
    sy.write_cochain(xi, path)
    again = sy.read_cochain(path, X, sy.RING_Z)
    assert again.values == xi.values


def test_non_integer_labels_rejected():
    X = sy.build_complex([[(1, 0), (2, 0)]])
    with pytest.raises(ParameterError):
        sy.dumps_complex(X)


def test_bad_documents_rejected(tmp_path):
    with pytest.raises(ParameterError):
        sy.loads_complex('{"vertices": [1, 2]}')
    with pytest.raises(ParameterError):
        sy.loads_complex('{"facets": [[1, 2]], "vertices": [1, 2, 9]}')
    X = sy.gen_polygon(3)
    with pytest.raises(ParameterError):
        sy.loads_cochain('{"edges": [[0, 1]], "values": [1, 0]}', X)


def test_generated_quotient_round_trip(tmp_path):
    Q, xi, _ = sy.gen_projective_space(2, 4)
    cpath, xpath = tmp_path / "q.cx", tmp_path / "q.cx.cocycle"
    sy.write_complex(Q, cpath)
    sy.write_cochain(xi, xpath)
    Q2 = sy.read_complex(cpath)
    xi2 = sy.read_cochain(xpath, Q2)
    assert Q2 == Q
    assert sy.loop_norm(Q2, xi2) == 4
