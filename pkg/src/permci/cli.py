"""Command-line driver: evaluate, optimize, sweep, simplex scan, self-checks.

Configuration comes from an optional YAML file plus flags (flags win).  Only
the random seed and the thread count can also come from the environment
(PERMCI_SEED, PERMCI_THREADS).  All numeric CSV output uses '.' decimals,
',' separators, %.17g formatting, and a versioned header comment line.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np
import yaml

from .ansatz import AnsatzSpec
from .channels import CHANNEL_BUILDERS, build_channel
from .codefile import CodeFile, nn_benchmark_state, reference_code, reference_names
from .coherent import ci_brute, evaluate_ci
from .ensembles import CodeEnsemble
from .optimize import scan_ray, optimize_ci, simplex_rays
from .pso import SwarmConfig
from .verify import oracle_triangle, representation_checks

_FMT = "%.17g"


def _fmt(x) -> str:
    if isinstance(x, float):
        return _FMT % x
    return str(x)


def _parse_params(text: str | None) -> dict:
    if not text:
        return {}
    out = {}
    for item in text.split(","):
        key, _, value = item.partition("=")
        if not _:
            raise SystemExit(f"bad parameter {item!r}; expected name=value")
        out[key.strip()] = float(value)
    return out


def _load_config(path: str | None) -> dict:
    if not path:
        return {}
    with open(path) as fh:
        data = yaml.safe_load(fh) or {}
    if not isinstance(data, dict):
        raise SystemExit("config file must hold a mapping")
    return data


def _setting(args, config, key, default=None):
    val = getattr(args, key.replace("-", "_"), None)
    if val is not None:
        return val
    return config.get(key, default)


def _seed(args, config) -> int:
    env = os.environ.get("PERMCI_SEED")
    if env is not None:
        return int(env)
    return int(_setting(args, config, "seed", 0))


def _threads(args, config) -> int:
    env = os.environ.get("PERMCI_THREADS")
    if env is not None:
        return max(1, int(env))
    return max(1, int(_setting(args, config, "threads", 1)))


def _swarm_config(config: dict, seed: int) -> SwarmConfig:
    opts = dict(config.get("swarm", {}))
    opts["seed"] = seed
    return SwarmConfig(**opts)


def _channel_spec(args, config):
    cconf = config.get("channel", {})
    name = _setting(args, config, "channel", cconf.get("name"))
    params = dict(cconf.get("params", {}))
    params.update(_parse_params(getattr(args, "params", None)))
    return name, params


def _channel_from(args, config):
    name, params = _channel_spec(args, config)
    if name is None:
        return None, None, {}
    return build_channel(name, params), name, params


def _code_from(args, config, n=None):
    ref = _setting(args, config, "code")
    if ref is None:
        return None, None
    if ref.startswith("bundled:"):
        cf = reference_code(ref.split(":", 1)[1])
    else:
        cf = CodeFile.load(ref)
    if n is not None:
        cf = CodeFile(n=int(n), weights=cf.weights, states=cf.states,
                      metadata=cf.metadata)
    return cf, ref


def _write_csv(path, version: str, header: list[str], rows):
    with open(path, "w") as fh:
        fh.write(f"# {version}\n")
        fh.write(",".join(header) + "\n")
        count = 0
        try:
            for row in rows:
                fh.write(",".join(_fmt(v) for v in row) + "\n")
                fh.flush()
                count += 1
        except KeyboardInterrupt:
            fh.write(f"# interrupted after {count} rows\n")
            raise
    return count


# ---------------------------------------------------------------------------
# eval
# ---------------------------------------------------------------------------

def cmd_eval(args) -> int:
    config = _load_config(args.config)
    n = _setting(args, config, "n")
    code_file, code_ref = _code_from(args, config, n)
    if code_file is None:
        raise SystemExit("eval needs --code (path or bundled:<name>)")
    ch, name, params = _channel_from(args, config)
    if ch is None:
        meta = code_file.metadata
        if "channel" not in meta:
            raise SystemExit("eval needs --channel/--params (code file has none)")
        name, params = meta["channel"], meta.get("params", {})
        ch = build_channel(name, params)
    code = code_file.to_ensemble()
    if _setting(args, config, "snap-half") or getattr(args, "snap_half", False):
        code = code.snapped_half()
    formula = _setting(args, config, "formula", "auto")
    bd = evaluate_ci(ch, code, formula)

    print(f"channel: {name} {params}")
    print(f"code:    {code_ref} (n={code.n}, k={code.k})")
    print(f"formula: {bd.formula}")
    print(f"total coherent information: {_fmt(bd.total)} bits over {code.n} uses")
    print(f"per channel use:            {_fmt(bd.per_use)}")
    if bd.per_lambda:
        print("partition        weight              contribution")
        for lam, (c, term) in bd.per_lambda.items():
            print(f"{str(lam.parts):16s} {_fmt(c):19s} {_fmt(term)}")
    if bd.skipped_weight:
        print(f"skipped weight {_fmt(bd.skipped_weight)} "
              f"(error budget {_fmt(bd.error_budget)} bits)")

    out = _setting(args, config, "out")
    if out:
        payload = {
            "channel": {"name": name, "params": params},
            "code": code_ref, "n": code.n, "formula": bd.formula,
            "total": bd.total, "per_use": bd.per_use,
            "per_lambda": [{"partition": list(lam.parts), "weight": c,
                            "contribution": t}
                           for lam, (c, t) in bd.per_lambda.items()],
            "skipped_weight": bd.skipped_weight,
            "error_budget": bd.error_budget,
        }
        with open(f"{out}.json", "w") as fh:
            json.dump(payload, fh, indent=1)
            fh.write("\n")
        _write_csv(f"{out}.csv", "permci-eval-v1",
                   ["channel", "n", "formula", "total_bits", "per_use_bits"],
                   [[name, code.n, bd.formula, bd.total, bd.per_use]])
        print(f"wrote {out}.json and {out}.csv")
    return 0


# ---------------------------------------------------------------------------
# optimize
# ---------------------------------------------------------------------------

def cmd_optimize(args) -> int:
    config = _load_config(args.config)
    ch, name, params = _channel_from(args, config)
    if ch is None:
        raise SystemExit("optimize needs --channel")
    n = int(_setting(args, config, "n", 1))
    seed = _seed(args, config)
    aconf = dict(config.get("ansatz", {}))
    kind = _setting(args, config, "ansatz", aconf.get("kind", "pair"))
    k = int(_setting(args, config, "k", aconf.get("k", 2)))
    phi = _setting(args, config, "phi", aconf.get("phi"))
    spec = AnsatzSpec(kind=kind, k=k, d=ch.d_in,
                      phi=None if phi is None else float(phi),
                      theta=aconf.get("theta"))
    swarm = _swarm_config(config, seed)
    restarts = int(_setting(args, config, "restarts", 1))
    res = optimize_ci(ch, n, spec, swarm, restarts=restarts)

    print(f"channel: {name} {params}  n={n} ansatz={kind} k={spec.k}")
    print(f"best objective: {_fmt(res.objective)} bits "
          f"({_fmt(res.per_use)} per use) after {res.evaluations} evaluations")
    out = _setting(args, config, "out")
    if out:
        payload = {
            "channel": {"name": name, "params": params}, "n": n,
            "ansatz": {"kind": kind, "k": spec.k, "phi": spec.phi,
                       "theta": spec.theta},
            "seed": seed, "restarts": restarts,
            "objective": res.objective, "per_use": res.per_use,
            "evaluations": res.evaluations, "iterations": res.iterations,
            "params_vector": [float(v) for v in res.params],
            "per_lambda": [{"partition": list(lam.parts), "weight": c,
                            "contribution": t}
                           for lam, (c, t) in res.breakdown.per_lambda.items()],
        }
        with open(f"{out}.json", "w") as fh:
            json.dump(payload, fh, indent=1)
            fh.write("\n")
        code_file = CodeFile.from_ensemble(
            res.code, metadata={"channel": name, "params": params,
                                "seed": seed, "objective_per_use": res.per_use,
                                "pure": bool(res.code.is_pure()),
                                "source": "optimizer"})
        code_file.save(f"{out}-code.json")
        print(f"wrote {out}.json and {out}-code.json")
    return 0


# ---------------------------------------------------------------------------
# sweep
# ---------------------------------------------------------------------------

def _parse_sweep(text: str):
    # "p=0.1:0.3:21" -> (param, values)
    key, _, rng = text.partition("=")
    lo, hi, count = rng.split(":")
    return key.strip(), np.linspace(float(lo), float(hi), int(count))


def cmd_sweep(args) -> int:
    config = _load_config(args.config)
    sconf = dict(config.get("sweep", {}))
    sweep_arg = getattr(args, "sweep", None)
    if sweep_arg:
        param, values = _parse_sweep(sweep_arg)
    elif sconf:
        param = sconf["param"]
        values = np.linspace(float(sconf["start"]), float(sconf["stop"]),
                             int(sconf["count"]))
    else:
        raise SystemExit("sweep needs --sweep param=lo:hi:count")
    n_list = _setting(args, config, "n-list", sconf.get("n_list"))
    if isinstance(n_list, str):
        n_list = [int(v) for v in n_list.split(",")]
    if not n_list:
        raise SystemExit("sweep needs --n-list")
    ch, name, params = _channel_from(args, config)
    if name is None:
        raise SystemExit("sweep needs --channel")
    code_file, code_ref = _code_from(args, config)
    if code_file is None:
        raise SystemExit("sweep needs --code (fixed code to re-evaluate)")
    formula = _setting(args, config, "formula", "auto")
    threads = _threads(args, config)
    out = _setting(args, config, "out") or "sweep"

    grid = [(float(v), int(n)) for n in n_list for v in values]

    def point(job):
        value, n = job
        p = dict(params)
        p[param] = value
        channel = build_channel(name, p)
        code = CodeFile(n=n, weights=code_file.weights,
                        states=code_file.states,
                        metadata=code_file.metadata).to_ensemble()
        bd = evaluate_ci(channel, code, formula)
        return [value, n, bd.total, bd.per_use, bd.formula]

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = pool.map(point, grid)
            count = _write_csv(f"{out}.csv", "permci-sweep-v1",
                               [param, "n", "total_bits", "per_use_bits",
                                "formula"], rows)
    else:
        count = _write_csv(f"{out}.csv", "permci-sweep-v1",
                           [param, "n", "total_bits", "per_use_bits",
                            "formula"], map(point, grid))
    print(f"wrote {count} rows to {out}.csv")
    return 0


# ---------------------------------------------------------------------------
# simplex
# ---------------------------------------------------------------------------

def cmd_simplex(args) -> int:
    config = _load_config(args.config)
    sconf = dict(config.get("simplex", {}))
    exponent = int(_setting(args, config, "exponent", sconf.get("exponent", 6)))
    n_list = _setting(args, config, "n-list", sconf.get("n_list", [5]))
    if isinstance(n_list, str):
        n_list = [int(v) for v in n_list.split(",")]
    phi_list = _setting(args, config, "phi-list",
                        sconf.get("phi_list", [np.pi / 4]))
    if isinstance(phi_list, str):
        phi_list = [float(v) for v in phi_list.split(",")]
    seed = _seed(args, config)
    threads = _threads(args, config)
    restarts = int(_setting(args, config, "restarts", 1))
    swarm = _swarm_config(config, seed)
    out = _setting(args, config, "out") or "simplex"

    jobs = [(i, j, ray, int(n), float(phi))
            for n in n_list for phi in phi_list
            for i, j, ray in simplex_rays(exponent)]

    def point(job):
        i, j, ray, n, phi = job
        pt = scan_ray(ray, n, phi, swarm, restarts=restarts, i_theta=i, i_phi=j)
        return [pt.i_theta, pt.i_phi, pt.ray[0], pt.ray[1], pt.ray[2], pt.n,
                pt.phi_ansatz,
                pt.hashing_x if pt.hashing_x is not None else float("nan"),
                pt.threshold_x if pt.threshold_x is not None else float("nan"),
                pt.difference if pt.difference is not None else float("nan"),
                pt.status]

    header = ["i_theta", "i_phi", "q1", "q2", "q3", "n", "phi_ansatz",
              "hashing_x", "threshold_x", "difference", "status"]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            count = _write_csv(f"{out}.csv", "permci-simplex-v1", header,
                               pool.map(point, jobs))
    else:
        count = _write_csv(f"{out}.csv", "permci-simplex-v1", header,
                           map(point, jobs))
    print(f"wrote {count} rows to {out}.csv")
    return 0


# ---------------------------------------------------------------------------
# oracle-check and codes
# ---------------------------------------------------------------------------

def cmd_oracle_check(args) -> int:
    config = _load_config(args.config)
    trials = int(_setting(args, config, "trials", 200))
    seed = _seed(args, config)
    n_max = int(_setting(args, config, "n-max", 5))
    ns = tuple(range(2, n_max + 1))
    ok = True
    print(f"oracle triangle: {trials} random pure 2-state codes per channel, "
          f"n in {list(ns)}")
    for row in oracle_triangle(trials=trials, ns=ns, seed=seed):
        status = "pass" if row.passed() else "FAIL"
        ok &= row.passed()
        print(f"  {row.channel:18s} mixed {row.max_mixed:.2e}  "
              f"pure {row.max_pure:.2e}  purified {row.max_purified:.2e}  "
              f"[{status}]")
    print("representation checks:")
    for check in representation_checks(seed=seed):
        status = "pass" if check.passed() else "FAIL"
        ok &= check.passed()
        print(f"  {check.name:55s} worst {check.worst:.2e} "
              f"(tol {check.tol:.0e}) [{status}]")
    print("all checks passed" if ok else "SOME CHECKS FAILED")
    return 0 if ok else 1


def cmd_codes(args) -> int:
    if args.name is None:
        for name in reference_names():
            if name == "nn-damping-dephasing-k3":
                psi, n, ref = nn_benchmark_state()
                print(f"{name:28s} explicit state, n={n}, ref_dim={ref} "
                      f"(brute-force evaluation only)")
                continue
            cf = reference_code(name)
            meta = cf.metadata
            print(f"{name:28s} n={cf.n} k={cf.k} channel={meta['channel']} "
                  f"params={meta['params']} ci_per_use={meta['ci_per_use']}")
        return 0
    if args.name == "nn-damping-dephasing-k3":
        from .codefile import NN_DAMPDEPH_K3
        print(json.dumps({k: v for k, v in NN_DAMPDEPH_K3.items()
                          if k != "amplitudes"}, indent=1))
        for r_bits, a_bits, amp in NN_DAMPDEPH_K3["amplitudes"]:
            print(f"  |{r_bits}>_R |{a_bits}>_A  {amp.real:+.4f}{amp.imag:+.4f}i")
        return 0
    cf = reference_code(args.name)
    print(json.dumps(cf.to_dict(), indent=1))
    if args.out:
        cf.save(args.out)
        print(f"wrote {args.out}")
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _add_common(sub):
    sub.add_argument("--config", help="YAML configuration file")
    sub.add_argument("--channel", choices=sorted(CHANNEL_BUILDERS),
                     help="named channel constructor")
    sub.add_argument("--params", help="channel parameters, e.g. p=0.2271,q=0.4")
    sub.add_argument("--seed", type=int, help="master random seed")
    sub.add_argument("--threads", type=int, help="worker threads for grids")
    sub.add_argument("--out", help="output path prefix")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="permci",
        description="Coherent information of permutation-invariant codes "
                    "via Schur-Weyl block decompositions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a code on a channel")
    _add_common(p)
    p.add_argument("--code", help="code file path or bundled:<name>")
    p.add_argument("--n", type=int, help="override the code file copy count")
    p.add_argument("--formula", choices=["auto", "mixed", "pure", "purified",
                                         "brute"], help="evaluator override")
    p.add_argument("--snap-half", action="store_true",
                   help="snap weights within 1e-3 of 1/2 to exactly 1/2")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("optimize", help="search for a high-CI code")
    _add_common(p)
    p.add_argument("--n", type=int, help="channel copies")
    p.add_argument("--k", type=int, help="number of ensemble components")
    p.add_argument("--ansatz", choices=["bloch", "mtm", "measurement", "pair"])
    p.add_argument("--phi", type=float, help="fix the pair-ansatz angle")
    p.add_argument("--restarts", type=int, help="independent swarm restarts")
    p.set_defaults(func=cmd_optimize)

    p = sub.add_parser("sweep", help="CI of a fixed code across a noise grid")
    _add_common(p)
    p.add_argument("--code", help="code file path or bundled:<name>")
    p.add_argument("--sweep", help="parameter grid, e.g. p=0.1:0.3:21")
    p.add_argument("--n-list", help="comma-separated copy counts")
    p.add_argument("--formula", choices=["auto", "mixed", "pure", "purified",
                                         "brute"])
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("simplex", help="threshold scan over the Pauli simplex")
    _add_common(p)
    p.add_argument("--exponent", type=int,
                   help="grid: 2^(e-1) angles per axis (6 gives 32x32)")
    p.add_argument("--n-list", help="comma-separated copy counts")
    p.add_argument("--phi-list", help="comma-separated ansatz angles")
    p.add_argument("--restarts", type=int)
    p.set_defaults(func=cmd_simplex)

    p = sub.add_parser("oracle-check",
                       help="brute-force oracle triangle and irrep checks")
    _add_common(p)
    p.add_argument("--trials", type=int, help="codes per channel (default 200)")
    p.add_argument("--n-max", type=int, help="largest copy count (default 5)")
    p.set_defaults(func=cmd_oracle_check)

    p = sub.add_parser("codes", help="list or inspect bundled reference codes")
    p.add_argument("name", nargs="?", help="code name (omit to list)")
    p.add_argument("--out", help="write the code file to this path")
    p.set_defaults(func=cmd_codes)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
