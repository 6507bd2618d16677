import pytest

from alontarsi.builders import build_theta_orientation
from alontarsi.certificates import (CertificateError, list_certificate, orientation_certificate,
                                    verify_certificate)
from alontarsi.classifier import membership_d
from alontarsi.coloring import ListAssignment, bad_lists_for_d
from alontarsi.graph import SEED_T222, LabeledPair, theta_graph
from alontarsi.structure import detect_theta


def _theta_cert():
    g = theta_graph((2, 2, 3))
    w = detect_theta(g)
    x = w.poles[0]
    p = LabeledPair.marked(g, x)
    return orientation_certificate(p, build_theta_orientation(w, x, g))


def test_theta_certificate_accepted():
    cert = _theta_cert()
    res = verify_certificate(cert)
    assert res.ok
    assert cert["EE"] + cert["EO"] == 3


def test_tampered_bit_rejected():
    cert = _theta_cert()
    bits = cert["orientation"]
    for i in range(len(bits)):
        flipped = dict(cert, orientation=bits[:i] + "10"[int(bits[i])] + bits[i + 1:])
        assert not verify_certificate(flipped).ok


def test_wrong_counts_rejected():
    cert = _theta_cert()
    assert not verify_certificate(dict(cert, EE=cert["EE"] + 1)).ok


def test_seed_list_certificate_accepted():
    g, x = SEED_T222
    p = LabeledPair.marked(g, x)
    cert = list_certificate(p, bad_lists_for_d(p, membership_d(p)))
    assert verify_certificate(cert).ok


def test_colourable_lists_rejected():
    g, x = SEED_T222
    p = LabeledPair.marked(g, x)
    lists = ListAssignment(tuple(range(10 * v, 10 * v + k) for v, k in enumerate(p.degree_bound())))
    res = verify_certificate(list_certificate(p, lists))
    assert not res.ok and "colouring exists" in res.message


def test_wrong_list_sizes_rejected():
    g, x = SEED_T222
    p = LabeledPair.marked(g, x)
    cert = list_certificate(p, bad_lists_for_d(p, membership_d(p)))
    cert["lists"][0] = cert["lists"][0] + [99]
    assert not verify_certificate(cert).ok


@pytest.mark.parametrize("bad", [
    [],
    {"kind": "nope"},
    {"kind": "orientation"},
    {"kind": "orientation", "graph6": "!!", "orientation": "", "EE": 1, "EO": 0},
    {"kind": "orientation", "graph6": "Bw", "orientation": "012", "EE": 1, "EO": 0},
    {"kind": "orientation", "graph6": "Bw", "orientation": "01", "EE": "1", "EO": 0},
    {"kind": "lists", "graph6": "Bw", "lists": [[1]]},
    {"kind": "lists", "graph6": "Bw", "lists": [[1], [1], ["a"]]},
    {"kind": "lists", "graph6": "Bw", "labels": "x", "lists": [[1], [1], [1]]},
])
def test_malformed_certificates(bad):
    with pytest.raises(CertificateError):
        verify_certificate(bad)
