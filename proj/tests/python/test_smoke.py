"""Smoke tests for the python module: construction, codecs, and the main
operations on known instances."""

import json
import os
import subprocess

import pytest

import factorkit


def complete(n):
    return factorkit.Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle(n):
    return factorkit.Graph(n, [(i, (i + 1) % n) for i in range(n)])


def test_graph_construction_and_codec():
    k5 = complete(5)
    assert k5.n == 5 and k5.m == 10
    assert k5.to_graph6() == "D~{"
    back = factorkit.Graph.from_graph6("D~{")
    assert back.m == 10
    assert factorkit.Graph.from_graph6("A_").m == 1
    with pytest.raises(ValueError):
        factorkit.Graph.from_graph6("D~")


def test_matching_and_barrier():
    assert factorkit.has_perfect_matching(complete(4))
    assert not factorkit.has_perfect_matching(cycle(5))
    assert len(factorkit.max_matching(cycle(5))) == 2
    barrier = factorkit.find_barrier(factorkit.Graph(4, [(0, 1), (0, 2), (0, 3)]))
    assert barrier["set"] == [0]
    assert barrier["deficiency"] == 2
    assert factorkit.find_barrier(complete(4)) is None


def test_connectivity_and_planarity():
    assert factorkit.vertex_connectivity(complete(5)) == 4
    assert factorkit.edge_connectivity(cycle(6)) == 2
    planar, cert = factorkit.is_planar(complete(4))
    assert planar and cert is None
    planar, cert = factorkit.is_planar(complete(5))
    assert not planar and cert["target"] == "K5"
    assert len(cert["branch_sets"]) == 5


def test_criticality():
    assert factorkit.is_minimal_k_factor_critical(complete(5), 3)
    assert factorkit.min_degree(complete(5)) == 4
    assert factorkit.is_k_factor_critical(complete(6), 2)
    assert not factorkit.is_minimal_k_factor_critical(complete(6), 2)
    assert factorkit.is_minimal_k_factor_critical(cycle(5), 1)


def test_enumeration():
    assert len(factorkit.enumerate_graphs(4)) == 11
    assert len(factorkit.enumerate_graphs(6)) == 156
    with pytest.raises(RuntimeError):
        factorkit.enumerate_graphs(9)


def test_describe_and_suite():
    record = json.loads(factorkit.describe_json("D~{"))
    assert record["values"]["delta"] == 4
    assert record["values"]["planar"] is False
    assert record["checks"]["minimal-k3"] == "pass"

    report = factorkit.run_suite_json("conjecture", n=5, k=1)
    lines = report.strip().split("\n")
    summary = json.loads(lines[-1])
    assert summary["summary"] is True
    assert summary["graphs"] == 34
    assert summary["failures"] == 0


def test_cli_roundtrip():
    cli = os.environ.get("FACTORKIT_CLI")
    if not cli:
        pytest.skip("FACTORKIT_CLI not set")
    out = subprocess.run([cli, "enumerate", "-n", "4"], capture_output=True, text=True, check=True)
    assert len(out.stdout.split()) == 11
    run = subprocess.run([cli, "describe", "D~{"], capture_output=True, text=True, check=True)
    assert json.loads(run.stdout)["values"]["kappa"] == 4
