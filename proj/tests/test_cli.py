# Exit codes, report layout, env precedence and payload determinism of the blowup binary.
import json
import os
import subprocess
import sys
import tempfile

BIN = os.path.abspath(sys.argv[1])
tmp = tempfile.mkdtemp()
failures = []


def run(*args, env=None):
    e = dict(os.environ)
    for k in [k for k in e if k.startswith("BLOWUP_")]:
        del e[k]
    e.update(env or {})
    p = subprocess.run([BIN, *args], capture_output=True, text=True, env=e, cwd=tmp)
    return p.returncode, p.stdout, p.stderr


def expect(name, cond, extra=""):
    print(("ok   " if cond else "FAIL ") + name)
    if not cond:
        failures.append(name + " " + extra)


def path(name):
    return os.path.join(tmp, name)


with open(path("complete5.json"), "w") as f:
    json.dump({"n": 5, "edges": [[a, b] for a in range(1, 6) for b in range(a + 1, 6)]}, f)
with open(path("broken.json"), "w") as f:
    f.write('{"n": 3,\n "edges": [[1, 2],\n')
with open(path("cycle.json"), "w") as f:
    json.dump({"n": 3, "relations": [[1, 2], [2, 3], [3, 1]]}, f)

code, out, _ = run("ramsey", "f", "--k", "4")
rep = json.loads(out)
expect("ramsey f --k 4 gives 5", code == 0 and rep["result"]["f_value"] == 5)
expect("report has all sections", set(rep) == {"command", "config", "result", "timings", "version"})
expect("seed echoed", rep["config"]["seed"] == 1)

code, _, _ = run("ramsey", "witness", "--n", "6", "--k", "5", "--out", "cert.json")
expect("witness on 6 vertices found", code == 0)
code, out, _ = run("ramsey", "check", "--cert", "cert.json")
expect("certificate checks", code == 0 and json.loads(out)["result"]["valid"])
cert = json.load(open(path("cert.json")))
cert["red"] = []
json.dump(cert, open(path("bad.json"), "w"))
code, _, _ = run("ramsey", "check", "--cert", "bad.json")
expect("bad certificate is a verified negative", code == 2)
code, _, _ = run("ramsey", "witness", "--n", "7", "--k", "5")
expect("no witness on 7 vertices is a verified negative", code == 2)

code, out, _ = run("graph", "density", "--in", "complete5.json", "--r", "3")
expect("density of K5 is 1", code == 0 and json.loads(out)["result"]["point"] == 1.0)

code, _, _ = run("poset", "gen", "--model", "chain", "--n", "300", "--out", "chain.json")
code, out, _ = run("poset", "partition", "--in", "chain.json", "--k", "3", "--eps", "0.3", "--scale", "desk")
expect("desk partition of a chain passes its checker", code == 0 and json.loads(out)["result"]["check"]["ok"])

code, _, err = run("vc", "dim", "--in", "broken.json")
expect("malformed json is an error with position", code == 1 and "broken.json:" in err and "line" in err, err)
code, _, err = run("poset", "partition", "--in", "cycle.json", "--k", "2", "--eps", "0.5")
expect("cyclic relations are an error", code == 1, err)
code, _, _ = run("--bogus", "ramsey", "f", "--k", "3")
expect("unknown flag is an error", code == 1)
code, _, _ = run("repro", "none-such")
expect("unknown experiment is an error", code == 1)
code, out, _ = run("repro", "ramsey-small")
expect("repro ramsey-small passes", code == 0 and json.loads(out)["result"]["all_pass"])

seed = lambda o: json.loads(o)["config"]["seed"]
_, out, _ = run("graph", "gen", "--n", "10", "--p", "0.5", env={"BLOWUP_SEED": "7"})
expect("env overrides default", seed(out) == 7)
_, out, _ = run("--seed", "9", "graph", "gen", "--n", "10", "--p", "0.5", env={"BLOWUP_SEED": "7"})
expect("flag overrides env", seed(out) == 9)

code, out, _ = run("graph", "gen", "--model", "complete", "--n", "4", "--format", "dot")
expect("dot output", code == 0 and out.startswith("graph") and "1 -- 2" in out, out[:80])
code, out, _ = run("vc", "gen-vc2", "--n", "60", "--format", "csv")
expect("csv output", code == 0 and out.startswith("key,value") and "c4_free,true" in out, out[:80])
code, _, _ = run("ramsey", "f", "--k", "3", "--format", "dot")
expect("dot without a graph is an error", code == 1)

for args in (["vc", "gen-vc2", "--n", "120", "--seed", "3"], ["construct", "sphere", "--k", "4", "--h", "5", "--n", "200"],
             ["graph", "density", "--in", "complete5.json", "--r", "3", "--samples", "2000"]):
    a = json.loads(run(*args)[1])["result"]
    b = json.loads(run(*args)[1])["result"]
    expect("deterministic: " + " ".join(args), json.dumps(a) == json.dumps(b))

code, _, _ = run("construct", "sphere", "--k", "4", "--h", "5", "--n", "200", "--out", "cons.json")
code, out, _ = run("verify", "construction", "--in", "cons.json")
r = json.loads(out)["result"]
expect("construction verifies", code == 0 and r["path"]["status"] == "none" and r["kernel"]["holds"] and r["edges_consistent"])
cons = json.load(open(path("cons.json")))
cons["edges"] = cons["edges"][1:]
cons["edge_type"] = cons["edge_type"][1:]
json.dump(cons, open(path("cons_bad.json"), "w"))
code, _, _ = run("verify", "construction", "--in", "cons_bad.json")
expect("tampered construction is a verified negative", code == 2)

print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
