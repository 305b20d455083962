#!/usr/bin/env python3
"""End-to-end checks for the anbim command-line tool.

Usage: cli_checks.py /path/to/anbim
"""
import json
import os
import re
import subprocess
import sys
import tempfile

BIN = sys.argv[1]
failures = []


def run(*args, expect_code=0, env=None):
    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    proc = subprocess.run([BIN, *args], capture_output=True, text=True, env=full_env)
    if proc.returncode != expect_code:
        raise AssertionError(
            f"{' '.join(args)}: exit {proc.returncode}, want {expect_code}\n"
            f"stdout: {proc.stdout}\nstderr: {proc.stderr}"
        )
    return proc.stdout


def check(name, fn):
    try:
        fn()
        print(f"{name}: ok")
    except Exception as exc:  # noqa: BLE001 - report and keep going
        failures.append(name)
        print(f"{name}: FAILED\n{exc}")


def catalog_counts():
    for n, count in [(1, 1), (3, 39), (5, 181)]:
        doc = json.loads(run("catalog", "--n", str(n), "--format", "json"))
        assert doc["n"] == n and len(doc["labels"]) == count, (n, len(doc["labels"]))
        for entry in doc["labels"]:
            assert {"kind", "i", "j", "dim", "lsupp", "rsupp", "valleys"} <= set(entry)
    table = run("catalog", "--n", "3")
    assert "39 labels; closed form gives 39" in table


def tensor_products():
    out = run("tensor", "--n", "3", "--left", "W:2,1,1", "--right", "L,2,2")
    assert "L,2,2 x1" in out, out
    out = run("tensor", "--n", "4", "--left", "S:2,1,2", "--right", "N:2,2,1",
              "--method", "both")
    assert "M:2,1,1 x1" in out, out
    out = run("tensor", "--n", "3", "--left", "M:0,2,2", "--right", "M:0,1,1")
    assert "= 0" in out, out
    out = run("tensor", "--n", "3", "--left", "M:0,1,1", "--right", "M:0,2,2")
    assert "PI,1,2 x1" in out, out
    doc = json.loads(run("tensor", "--n", "3", "--left", "PI,1,1", "--right", "PI,2,2",
                         "--format", "json", "--method", "rules"))
    assert doc["parts"] == [{"label": "PI,1,2", "multiplicity": 1}], doc
    # the combinatorial route refuses factors it cannot handle
    run("tensor", "--n", "3", "--left", "M:0,1,1", "--right", "M:0,2,2",
        "--method", "rules", expect_code=1)
    run("tensor", "--n", "3", "--left", "bogus", "--right", "L,1,1", expect_code=1)
    run("tensor", "--n", "3", "--left", "L,7,1", "--right", "L,1,1", expect_code=1)


def cells_outputs():
    with tempfile.TemporaryDirectory() as tmp:
        dot_path = os.path.join(tmp, "cells.dot")
        doc = json.loads(run("cells", "--n", "2", "--dot", dot_path, "--no-cache"))
        assert len(doc["two_sided"]) == 3, doc
        assert doc["two_sided"][0]["key"] == "split"
        assert [c["idempotent"] for c in doc["two_sided"]] == [True, False, True]
        with open(dot_path, encoding="utf-8") as fh:
            dot = fh.read()
        assert dot.startswith("digraph cell_structure {")
        two_sided = [ln for ln in dot.splitlines()
                     if ln.strip().startswith("subgraph cluster_ts") and "_l" not in ln]
        left = [ln for ln in dot.splitlines() if "_l" in ln and "subgraph" in ln]
        assert len(two_sided) == 3 and len(left) == 5, (two_sided, left)


def adjunction_report():
    doc = json.loads(run("adjunctions", "--n", "3"))
    assert len(doc["pairs"]) == 20, len(doc["pairs"])
    assert doc["unlisted_nonsplit"] == [] and doc["missing_classified"] == []


def generator_certificates():
    run("generators", "--n", "2", expect_code=105)  # below the threshold rank
    doc = json.loads(run("generators", "--n", "3", "--verify-minimal", "--no-cache"))
    assert doc["generates_all"] and doc["minimality"]["minimal"]
    assert len(doc["discoveries"]) == doc["catalog_size"] == 39


def verify_matrix():
    out = run("verify-all", "--n", "2", "--no-cache")
    assert "all checks passed" in out and "FAIL" not in out


def deterministic_outputs():
    for args in (
        ("catalog", "--n", "4", "--format", "json"),
        ("cells", "--n", "3", "--no-cache"),
        ("adjunctions", "--n", "4"),
        ("generators", "--n", "3", "--no-cache"),
        ("verify-all", "--n", "2", "--no-cache"),
    ):
        # timing columns vary run to run; everything else must be identical
        strip = lambda s: re.sub(r"\d+ms", "ms", s)  # noqa: E731
        assert strip(run(*args)) == strip(run(*args)), f"nondeterministic output: {args}"


def cache_roundtrip():
    with tempfile.TemporaryDirectory() as tmp:
        first = run("cells", "--n", "3", "--cache-dir", tmp)
        cached = [f for f in os.listdir(tmp) if f.startswith("products_n3_")]
        assert len(cached) == 1, cached
        second = run("cells", "--n", "3", "--cache-dir", tmp)
        assert first == second
        # damaged caches are ignored, not trusted
        path = os.path.join(tmp, cached[0])
        with open(path, "w", encoding="utf-8") as fh:
            fh.write("{not json")
        third = run("cells", "--n", "3", "--cache-dir", tmp)
        assert first == third
        # the environment variable supplies the default cache directory
        env_dir = os.path.join(tmp, "env_cache")
        run("cells", "--n", "2", env={"ANBIM_CACHE_DIR": env_dir})
        assert any(f.startswith("products_n2_") for f in os.listdir(env_dir))


def output_files():
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "catalog.json")
        run("catalog", "--n", "2", "--format", "json", "--out", path)
        with open(path, encoding="utf-8") as fh:
            assert len(json.load(fh)["labels"]) == 11


check("catalog counts", catalog_counts)
check("tensor products", tensor_products)
check("cell outputs", cells_outputs)
check("adjunction report", adjunction_report)
check("generator certificates", generator_certificates)
check("verify matrix", verify_matrix)
check("deterministic outputs", deterministic_outputs)
check("cache roundtrip", cache_roundtrip)
check("output files", output_files)

if failures:
    print(f"{len(failures)} CLI check(s) failed: {', '.join(failures)}")
    sys.exit(1)
print("all CLI checks passed")
