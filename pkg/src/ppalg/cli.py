"""Command line for the rigid-module toolkit.

Exit codes: 0 success, 1 domain error (unsupported type, failed check,
unknown module name), 2 usage error (bad flags, malformed type string,
non-exchangeable mutation direction).
"""

from __future__ import annotations

import json
import math
import os
import sys

import click

from .algebras import build_preprojective
from .approx import (MutationDirectionError, canonical_slots,
                     check_basic_complete_rigid, initial_rigid,
                     is_maximal_rigid, mutate_slots)
from .catalog import ModuleSum, build_catalog
from .cluster import exchange_graph
from .fields import QQ, PrimeField
from .phi import phi_evaluate, w0_pattern
from .quivers import DynkinType
from .reps import direct_sum_with_slices
from .verify import SUITE_NAMES, run_suite


def _parse_type(s):
    try:
        return DynkinType.parse(s)
    except ValueError as e:
        raise click.UsageError(str(e))


def _fail(msg):
    click.echo(f"error: {msg}", err=True)
    sys.exit(1)


def _field(name, prime):
    if name == "rationals":
        if prime is not None:
            raise click.UsageError("--prime only applies to --field fp")
        return QQ
    if prime is None:
        raise click.UsageError("--field fp needs --prime")
    try:
        return PrimeField(prime)
    except ValueError as e:
        raise click.UsageError(str(e))


def worker_cap():
    """Worker count from PPALG_THREADS, default 1 (all current code paths
    are sequential; the variable is accepted so scripts can set it)."""
    try:
        return max(1, int(os.environ.get("PPALG_THREADS", "1")))
    except ValueError:
        return 1


type_option = click.option("--type", "dt", required=True,
                           help="Dynkin type, e.g. A2, A3, A4.")


@click.group()
def main():
    """Rigid modules over preprojective algebras of small type A."""


@main.command()
@type_option
@click.option("--field", "field_name",
              type=click.Choice(["rationals", "fp"]), default="rationals",
              show_default=True)
@click.option("--prime", type=int, default=None,
              help="Modulus for --field fp.")
@click.option("--cap", type=int, default=64, show_default=True,
              help="Radical filtration bound for the spanning loop.")
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="Write JSON here instead of stdout.")
def build(dt, field_name, prime, cap, out):
    """Dump the preprojective algebra as structure-constants JSON."""
    dtype = _parse_type(dt)
    if cap < 3:
        raise click.UsageError("--cap must be at least 3")
    field = _field(field_name, prime)
    try:
        ppa = build_preprojective(dtype, field=field, max_level=cap)
    except ValueError as e:
        _fail(e)
    A = ppa.algebra
    payload = {
        "type": str(dtype),
        "field": getattr(field, "name", "QQ"),
        "dimension": A.dim,
        "labels": A.labels,
        "weights": [list(w) for w in A.weights],
        "idempotents": A.idempotents,
        "radical_generators": A.radical_generators,
        "table": [[i, j, [[k, str(c)] for k, c in A.table[i][j]]]
                  for i in range(A.dim) for j in range(A.dim)
                  if A.table[i][j]],
    }
    text = json.dumps(payload, indent=2)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
        click.echo(f"wrote {out}")
    else:
        click.echo(text)


@main.command()
@type_option
@click.option("--emit", type=click.Choice(["table", "json"]),
              default="table", show_default=True)
def catalog(dt, emit):
    """List the indecomposable nilpotent representations."""
    dtype = _parse_type(dt)
    try:
        cat = build_catalog(dtype)
    except ValueError as e:
        _fail(e)
    if emit == "json":
        click.echo(json.dumps(cat.to_json(), indent=2))
        return
    click.echo(f"type {cat.dt}: {len(cat.entries)} indecomposables, "
               f"complete rigid modules have r = {cat.r} summands")
    header = f"{'id':>3}  {'name':<6} {'profile':<14} {'dims':<14} proj"
    click.echo(header)
    for e in cat.entries:
        proj = "yes" if e.projective else "no"
        click.echo(f"{e.id:>3}  {e.name:<6} {e.profile:<14} "
                   f"{str(e.dims):<14} {proj}")


@main.command("rigid-check")
@type_option
@click.option("--summands", required=True,
              help="Comma list of entry names, ids or profiles, "
                   "e.g. S1,P2 or 0,2,3.")
def rigid_check(dt, summands):
    """Report rigidity, maximality and completeness of a direct sum."""
    dtype = _parse_type(dt)
    try:
        cat = build_catalog(dtype)
        ids = []
        for tok in summands.split(","):
            tok = tok.strip()
            if not tok:
                continue
            if tok.isdigit():
                i = int(tok)
                if not 0 <= i < len(cat.entries):
                    raise LookupError(f"no catalog entry with id {i}")
                ids.append(i)
            else:
                ids.append(cat.lookup(tok).id)
    except (ValueError, LookupError) as e:
        _fail(e)
    if not ids:
        raise click.UsageError("--summands needs at least one entry")
    T = ModuleSum.from_ids(cat, ids)
    names = " + ".join(cat.entry(i).display() for i in T.expanded)
    click.echo(f"module: {names}")
    ext_total = sum(mi * mj * cat.ext(i, j)
                    for i, mi in T.items() for j, mj in T.items())
    rigid = ext_total == 0
    basic = all(m == 1 for _, m in T.items())
    click.echo(f"rigid: {'yes' if rigid else f'no (dim Ext^1 = {ext_total})'}")
    click.echo(f"basic: {'yes' if basic else 'no (repeated summands)'}")
    if rigid:
        maximal = is_maximal_rigid(T)
        click.echo(f"maximal rigid: {'yes' if maximal else 'no'}")
        k = len(set(T.expanded))
        complete = basic and k == cat.r
        click.echo(f"complete rigid: "
                   f"{'yes' if complete else f'no ({k} of {cat.r} summands)'}")
    else:
        click.echo("maximal rigid: no")
        click.echo("complete rigid: no")


@main.command()
@type_option
@click.option("--seed", default="builtin", show_default=True,
              help="Starting module: 'builtin' or a comma list of ids.")
@click.option("--sequence", required=True,
              help="Comma list of 1-based slot positions, e.g. 2,5,2.")
def mutate(dt, seed, sequence):
    """Walk a mutation sequence and print each exchange sequence."""
    dtype = _parse_type(dt)
    try:
        steps = [int(t) for t in sequence.split(",") if t.strip()]
    except ValueError:
        raise click.UsageError("--sequence must be a comma list of integers")
    if not steps:
        raise click.UsageError("--sequence needs at least one step")
    try:
        cat = build_catalog(dtype)
        if seed == "builtin":
            T = initial_rigid(cat)
        else:
            try:
                ids = [int(t) for t in seed.split(",") if t.strip()]
            except ValueError:
                raise click.UsageError(
                    "--seed must be 'builtin' or a comma list of ids")
            for i in ids:
                if not 0 <= i < len(cat.entries):
                    raise LookupError(f"no catalog entry with id {i}")
            T = ModuleSum.from_ids(cat, ids)
        check_basic_complete_rigid(T)
        slots = canonical_slots(T)
    except (ValueError, LookupError, IndexError) as e:
        _fail(e)
    click.echo("slots: " + " ".join(
        f"{p + 1}:{cat.entry(i).display()}" for p, i in enumerate(slots)))
    try:
        for k in steps:
            slots, seq = mutate_slots(cat, slots, k)
            click.echo(f"mu_{k}: {seq.display()}")
    except MutationDirectionError as e:
        raise click.UsageError(str(e))
    click.echo("final: " + " + ".join(
        cat.entry(i).display() for i in slots))


@main.command("exchange-graph")
@type_option
@click.option("--emit", type=click.Choice(["json", "dot"]),
              default="json", show_default=True)
@click.option("--deep", is_flag=True,
              help="Allow the A4 graph (672 vertices).")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def exchange_graph_cmd(dt, emit, deep, out):
    """Emit the exchange graph of basic complete rigid modules."""
    dtype = _parse_type(dt)
    if dtype.rank >= 4 and not deep:
        raise click.UsageError(
            f"the {dtype} graph is large; pass --deep to build it")
    try:
        cat = build_catalog(dtype)
        g = exchange_graph(cat)
    except ValueError as e:
        _fail(e)
    text = (json.dumps(g.to_json(), indent=2) if emit == "json"
            else g.to_dot())
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
        click.echo(f"wrote {out} ({len(g)} vertices, {g.num_edges} edges)")
    else:
        click.echo(text)


@main.command()
@type_option
@click.option("--suite", type=click.Choice(list(SUITE_NAMES) + ["all"]),
              default="all", show_default=True)
@click.option("--deep", is_flag=True,
              help="Include the exhaustive A4 graph checks.")
def verify(dt, suite, deep):
    """Run a verification suite; exit 0 only if every check passes."""
    dtype = _parse_type(dt)
    try:
        results = run_suite(suite, dtype, deep=deep)
    except ValueError as e:
        _fail(e)
    ok = True
    for name, c in sorted(results, key=lambda t: (t[0], t[1].tag)):
        ok = ok and c.ok
        click.echo(f"{name}/{c.tag}: {'pass' if c.ok else 'FAIL'}  "
                   f"({c.detail})")
    if not ok:
        _fail("verification failed")


@main.command()
@type_option
@click.option("--module", "module_expr", required=True,
              help="Entry name, id or profile; join summands with '+'.")
@click.option("--word", default=None,
              help="Comma list of vertices; defaults to the builtin "
                   "longest-word pattern.")
@click.option("--emit", type=click.Choice(["text", "json"]),
              default="text", show_default=True)
def phi(dt, module_expr, word, emit):
    """Evaluate the flag-counting polynomial of a catalog module."""
    dtype = _parse_type(dt)
    if word is not None:
        try:
            pattern = tuple(int(t) for t in word.split(",") if t.strip())
        except ValueError:
            raise click.UsageError("--word must be a comma list of vertices")
    else:
        pattern = w0_pattern(dtype)
    try:
        cat = build_catalog(dtype)
        reps = []
        for tok in module_expr.split("+"):
            tok = tok.strip()
            if tok.isdigit():
                i = int(tok)
                if not 0 <= i < len(cat.entries):
                    raise LookupError(f"no catalog entry with id {i}")
                reps.append(cat.entry(i).rep)
            else:
                reps.append(cat.lookup(tok).rep)
        rep = reps[0] if len(reps) == 1 else direct_sum_with_slices(reps)[0]
        poly = phi_evaluate(rep, pattern)
    except (ValueError, LookupError) as e:
        _fail(e)
    if emit == "text":
        click.echo(f"pattern: {','.join(str(v) for v in pattern)}")
        click.echo(str(poly))
        return
    terms = []
    for exps in sorted(poly.terms, reverse=True):
        coeff = poly.terms[exps]
        chi = coeff * math.prod(math.factorial(a) for a in exps)
        terms.append({"a": list(exps), "chi": int(chi),
                      "coefficient": str(coeff)})
    click.echo(json.dumps({"type": str(dtype), "module": module_expr,
                           "pattern": list(pattern), "terms": terms},
                          indent=2))


@main.command()
@click.option("--port", type=int, default=8000, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
def serve(port, host):
    """Start the mutation-session HTTP service."""
    import uvicorn

    from .service import create_app
    uvicorn.run(create_app(), host=host, port=port)


if __name__ == "__main__":
    main()
