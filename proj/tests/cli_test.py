#!/usr/bin/env python3
"""End-to-end checks of the command-line binary: JSON output shapes,
exit-code contract, determinism, and cache management."""

import json
import os
import subprocess
import sys
import tempfile

BIN = sys.argv[1] if len(sys.argv) > 1 else "./tlcomb"
FAILURES = []


def run(*args, env=None):
    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    return subprocess.run(
        [BIN, *args], capture_output=True, text=True, env=full_env
    )


def check(name, cond, extra=""):
    status = "ok" if cond else "FAIL"
    print(f"{status:4} {name}" + (f" ({extra})" if extra and not cond else ""))
    if not cond:
        FAILURES.append(name)


def json_line(proc):
    return json.loads(proc.stdout.strip().splitlines()[-1])


# ---- group info ----
p = run("group", "info", "--sys", "A3")
info = json_line(p)
check("group info exit 0", p.returncode == 0, p.stderr)
check(
    "group info A3 fields",
    info["order"] == 24
    and info["fc_count"] == 14
    and info["rank"] == 3
    and info["longest_length"] == 6
    and info["cw0_class"] is True,
    p.stdout,
)

info_b2 = json_line(run("group", "info", "--sys", "B2"))
check("group info B2", info_b2["order"] == 8 and info_b2["fc_count"] == 7)

p = run("group", "info", "--sys", "Z9")
check("unknown system exits 2", p.returncode == 2, str(p.returncode))

# ---- poly ----
p = run("poly", "--family", "d", "--sys", "A3", "--x", "word:",
        "--w", "word:s1.s2.s3.s2.s1")
check("poly d exit 0", p.returncode == 0, p.stderr)
check("poly d value 1-q", json_line(p)["poly"] == [[0, 1], [2, -1]], p.stdout)

p = run("poly", "--family", "l", "--sys", "A3", "--x", "word:",
        "--w", "word:s2.s1.s3.s2")
check("poly l value", json_line(p)["poly"] == [[-4, -1], [-2, 1]], p.stdout)

p = run("poly", "--family", "kl", "--sys", "A3", "--x", "perm:1,3,2,4",
        "--w", "perm:3,4,1,2")
check("poly kl value q+1", json_line(p)["poly"] == [[0, 1], [2, 1]], p.stdout)

# x not <= w: empty polynomial
p = run("poly", "--family", "r", "--sys", "A2", "--x", "word:s1",
        "--w", "word:s2")
check("poly incomparable empty", json_line(p)["poly"] == [] and
      p.returncode == 0, p.stdout)

# method variants agree
base = json_line(run("poly", "--family", "a", "--sys", "B2", "--x", "word:",
                     "--w", "word:s0.s1"))["poly"]
for method in ("recursive", "oracle"):
    alt = json_line(run("poly", "--family", "a", "--sys", "B2", "--x",
                        "word:", "--w", "word:s0.s1", "--method",
                        method))["poly"]
    check(f"poly a method {method} agrees", alt == base)

# determinism: identical invocations byte-identical
r1 = run("poly", "--family", "kl", "--sys", "A3", "--x", "perm:1,3,2,4",
         "--w", "perm:3,4,1,2").stdout
r2 = run("poly", "--family", "kl", "--sys", "A3", "--x", "perm:1,3,2,4",
         "--w", "perm:3,4,1,2").stdout
check("poly deterministic", r1 == r2)

# domain error: non-FC x for family a
p = run("poly", "--family", "a", "--sys", "A2", "--x", "word:s1.s2.s1",
        "--w", "word:s1.s2.s1")
check("non-FC argument exits 3", p.returncode == 3, str(p.returncode))

# usage error: malformed element
p = run("poly", "--family", "r", "--sys", "A3", "--x", "word:s9",
        "--w", "word:")
check("bad element exits 2", p.returncode == 2, str(p.returncode))

p = run("poly", "--family", "zz", "--sys", "A3", "--x", "word:", "--w", "word:")
check("bad family exits 2", p.returncode == 2, str(p.returncode))

# ---- table ----
with tempfile.TemporaryDirectory() as tmp:
    out = os.path.join(tmp, "a2_r.jsonl")
    p = run("table", "--family", "r", "--sys", "A2", "--out", out)
    check("table exit 0", p.returncode == 0, p.stderr)
    with open(out) as fh:
        lines = [json.loads(line) for line in fh if line.strip()]
    check("A2 r table has 19 records", len(lines) == 19, str(len(lines)))
    check("table records well-formed",
          all(rec["sys"] == "A2" and rec["family"] == "r" for rec in lines))

    out_kl = os.path.join(tmp, "a1_kl.jsonl")
    run("table", "--family", "kl", "--sys", "A1", "--out", out_kl)
    with open(out_kl) as fh:
        kl_lines = [json.loads(line) for line in fh if line.strip()]
    check("A1 kl table has 3 records", len(kl_lines) == 3, str(len(kl_lines)))

    out_d = os.path.join(tmp, "b2_d.jsonl")
    run("table", "--family", "d", "--sys", "B2", "--out", out_d)
    with open(out_d) as fh:
        d_lines = [json.loads(line) for line in fh if line.strip()]
    check("B2 d table x all FC",
          all("s0.s1.s0.s1" not in rec["x"] and "s1.s0.s1.s0" not in rec["x"]
              for rec in d_lines))

# ---- verify ----
p = run("verify", "--suite", "all", "--sys", "A3")
check("verify all A3 exit 0", p.returncode == 0, p.stderr)
reports = [json.loads(line) for line in p.stdout.strip().splitlines()]
check("verify reports well-formed",
      all(rep["passed"] for rep in reports) and len(reports) >= 3)

p = run("verify", "--suite", "tl", "--sys", "B3")
check("verify tl B3 exit 0", p.returncode == 0, p.stderr)

p = run("verify", "--suite", "tl", "--sys", "A2", "--inject-fault")
check("injected fault exits 1", p.returncode == 1, str(p.returncode))
faulty = [json.loads(line) for line in p.stdout.strip().splitlines()]
check("injected fault listed",
      any(not rep["passed"] and
          any(c["failures"] for c in rep["checks"]) for rep in faulty))

# ---- fc ----
fc = json_line(run("fc", "count", "--sys", "A3"))
check("fc count", fc["count"] == 14, str(fc))
fc_list = json_line(run("fc", "list", "--sys", "B2"))
check("fc list", fc_list["count"] == 7 and len(fc_list["elements"]) == 7
      and "word:" in fc_list["elements"])

# ---- cache ----
with tempfile.TemporaryDirectory() as tmp:
    stats = json_line(run("cache", "stats", "--cache-dir", tmp))
    check("cache stats empty", stats["files"] == 0 and stats["records"] == 0)

    p = run("cache", "warm", "--sys", "A2", "--cache-dir", tmp)
    check("cache warm exit 0", p.returncode == 0, p.stderr)
    check("cache warm five files", len(json_line(p)["files"]) == 5)

    stats = json_line(run("cache", "stats", "--cache-dir", tmp))
    check("cache stats after warm",
          stats["files"] == 5 and stats["records"] > 0, str(stats))

    cleared = json_line(run("cache", "clear", "--cache-dir", tmp))
    check("cache clear removes files", cleared["removed"] == 5)
    stats = json_line(run("cache", "stats", "--cache-dir", tmp))
    check("cache stats after clear", stats["files"] == 0)

    # env-var fallback for the cache directory
    envdir = os.path.join(tmp, "envcache")
    p = run("cache", "warm", "--sys", "A1", env={"TL_CACHE_DIR": envdir})
    check("TL_CACHE_DIR honored", p.returncode == 0 and
          os.path.isdir(envdir) and len(os.listdir(envdir)) == 5)

print()
if FAILURES:
    print(f"{len(FAILURES)} CLI check(s) failed: {FAILURES}")
    sys.exit(1)
print("all CLI checks passed")
