"""Command-line interface.

Exit codes: 0 = all asserted bounds met, 1 = an asserted bound missed,
2 = usage or budget error.  DFAs are read and written in the JSON
interchange format (states / alphabet / transitions / initial / finals).
"""

from __future__ import annotations

import csv
import io
import json
import sys

import click

from .verify import search_subsemigroups, verify_all, verify as run_measure
from .atoms import atom_complexity, atom_report, atoms as atoms_of
from .automata import BudgetError, Dfa
from .langops import (
    BooleanOp,
    boolean,
    concat,
    is_suffix_free,
    reverse,
    star,
)
from .semigroups import (
    BSF,
    VSF,
    WSF,
    colliding_pairs,
    focused_pairs,
    is_subsemigroup_of,
    transition_semigroup,
)
from .witnesses import binary_product_pair, d5, d6

FORMATS = click.Choice(["json", "text", "csv"])


def _emit(text: str, out: str) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        click.echo(text)


def _load_dfa(path: str) -> Dfa:
    with click.open_file(path) as fh:
        return Dfa.from_dict(json.load(fh))


def _render_dfa(d: Dfa, fmt: str, dot: bool) -> str:
    if dot:
        return d.to_dot()
    doc = d.to_dict()
    if fmt == "json":
        return json.dumps(doc, indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["states", d.state_count])
        w.writerow(["alphabet"] + list(d.alphabet))
        for a in d.alphabet:
            w.writerow([a] + list(d.delta[a]))
        w.writerow(["initial", d.initial])
        w.writerow(["finals"] + sorted(d.finals))
        return buf.getvalue().rstrip("\n")
    lines = [f"states: {d.state_count}",
             f"alphabet: {' '.join(d.alphabet)}"]
    for a in d.alphabet:
        lines.append(f"  {a}: {list(d.delta[a])}")
    lines.append(f"initial: {d.initial}")
    lines.append(f"finals: {sorted(d.finals)}")
    return "\n".join(lines)


def _render_reports(reports, fmt: str) -> str:
    if fmt == "json":
        return json.dumps([r.to_dict() for r in reports], indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["measure", "params", "computed", "bound", "met",
                    "asserted", "runtime_ms"])
        for r in reports:
            params = " ".join(f"{k}={v}" for k, v in sorted(r.params.items()))
            w.writerow([r.measure, params, r.computed, r.bound,
                        r.met, r.asserted, r.runtime_ms])
        return buf.getvalue().rstrip("\n")
    lines = []
    for r in reports:
        params = " ".join(f"{k}={v}" for k, v in sorted(r.params.items()))
        status = "met" if r.met else "MISSED"
        note = "" if r.asserted else " (informational)"
        lines.append(f"{r.measure} {params}: computed={r.computed} "
                     f"bound={r.bound} {status}{note} [{r.runtime_ms}ms]")
    return "\n".join(lines)


def _exit_for(reports) -> int:
    return 0 if all(r.met for r in reports if r.asserted) else 1


@click.group()
def main() -> None:
    """Complexity of suffix-free regular languages."""


# ---------------------------------------------------------------------------
# witness

@main.group()
def witness() -> None:
    """Construct witness DFAs (published state numbering)."""


def _witness_options(fn):
    for deco in (
        click.option("--dialect", default=None, help="comma-separated roles, - drops"),
        click.option("--format", "fmt", type=FORMATS, default="json"),
        click.option("--dot", is_flag=True, help="emit DOT instead"),
        click.option("--out", default=None, help="write to file instead of stdout"),
    ):
        fn = deco(fn)
    return fn


@witness.command("d5")
@click.option("--n", type=int, required=True)
@_witness_options
def witness_d5(n, dialect, fmt, dot, out):
    """Ternary star/product/boolean witness, n >= 6."""
    _emit(_render_dfa(d5(n, dialect), fmt, dot), out)


@witness.command("d6")
@click.option("--n", type=int, required=True)
@_witness_options
def witness_d6(n, dialect, fmt, dot, out):
    """Quinary boolean/reversal/syntactic/atom witness, n >= 4."""
    _emit(_render_dfa(d6(n, dialect), fmt, dot), out)


@witness.command("product-binary")
@click.option("--m", type=int, required=True)
@click.option("--n", type=int, required=True)
@click.option("--format", "fmt", type=FORMATS, default="json")
@click.option("--dot", is_flag=True)
@click.option("--out", default=None)
def witness_product_binary(m, n, fmt, dot, out):
    """The two-letter product witness pair."""
    left, right = binary_product_pair(m, n)
    if fmt == "json" and not dot:
        _emit(json.dumps([left.to_dict(), right.to_dict()], indent=2), out)
        return
    parts = [_render_dfa(left, fmt, dot), _render_dfa(right, fmt, dot)]
    _emit("\n\n".join(parts), out)


# ---------------------------------------------------------------------------
# op

@main.command("op")
@click.argument("operation",
                type=click.Choice(["star", "concat", "reverse", "union",
                                   "intersection", "difference",
                                   "symmetric-difference"]))
@click.argument("inputs", nargs=-1, type=click.Path(exists=True, allow_dash=True))
@click.option("--format", "fmt", type=FORMATS, default="json")
@click.option("--dot", is_flag=True)
@click.option("--out", default=None)
@click.option("--budget-states", type=int, default=None,
              help="abort if the minimized result exceeds this many states")
def op_cmd(operation, inputs, fmt, dot, out, budget_states):
    """Apply an operation to DFA interchange files; the result is the
    minimal canonical DFA of the resulting language."""
    unary = operation in ("star", "reverse")
    need = 1 if unary else 2
    if len(inputs) != need:
        raise click.UsageError(
            f"{operation} takes {need} input file(s), got {len(inputs)}")
    ds = [_load_dfa(p) for p in inputs]
    if operation == "star":
        result = star(ds[0])
    elif operation == "reverse":
        result = reverse(ds[0])
    elif operation == "concat":
        result = concat(ds[0], ds[1])
    else:
        result = boolean(ds[0], ds[1], BooleanOp(operation))
    if budget_states is not None and result.state_count > budget_states:
        raise BudgetError(
            f"result has {result.state_count} states, budget {budget_states}")
    _emit(_render_dfa(result, fmt, dot), out)


# ---------------------------------------------------------------------------
# semigroup

@main.group()
def semigroup() -> None:
    """Transition-semigroup computations on DFA interchange files."""


@semigroup.command("generate")
@click.argument("input", type=click.Path(exists=True, allow_dash=True))
@click.option("--format", "fmt", type=FORMATS, default="text")
@click.option("--out", default=None)
@click.option("--elements", "show_elements", is_flag=True,
              help="list every element, not just the cardinality")
@click.option("--budget-elements", type=int, default=None)
@click.option("--allow-large", is_flag=True,
              help="lift the default degree cap on closures")
def semigroup_generate(input, fmt, out, show_elements, budget_elements,
                       allow_large):
    """Cardinality (and optionally elements) of the transition semigroup
    of the minimal DFA."""
    sg = transition_semigroup(_load_dfa(input), allow_large=allow_large,
                              max_elements=budget_elements)
    if fmt == "json":
        doc = {"degree": sg.degree, "cardinality": len(sg)}
        if show_elements:
            doc["elements"] = [list(t) for t in sg.sorted_elements()]
        _emit(json.dumps(doc, indent=2), out)
        return
    lines = [f"degree: {sg.degree}", f"cardinality: {len(sg)}"]
    if show_elements:
        lines += [str(list(t)) for t in sg.sorted_elements()]
    _emit("\n".join(lines), out)


@semigroup.command("classify")
@click.argument("input", type=click.Path(exists=True, allow_dash=True))
@click.option("--format", "fmt", type=FORMATS, default="text")
@click.option("--out", default=None)
@click.option("--allow-large", is_flag=True)
def semigroup_classify(input, fmt, out, allow_large):
    """Membership of the transition semigroup in bsf/vsf/wsf, plus the
    suffix-freeness of the language itself."""
    d = _load_dfa(input)
    sg = transition_semigroup(d, allow_large=allow_large)
    doc = {
        "cardinality": len(sg),
        "suffix_free": is_suffix_free(d),
        "in_bsf": sg.degree >= 2 and is_subsemigroup_of(sg, BSF),
        "in_vsf": sg.degree >= 2 and is_subsemigroup_of(sg, VSF),
        "in_wsf": sg.degree >= 2 and is_subsemigroup_of(sg, WSF),
    }
    if fmt == "json":
        _emit(json.dumps(doc, indent=2), out)
    else:
        _emit("\n".join(f"{k}: {v}" for k, v in doc.items()), out)


@semigroup.command("collisions")
@click.argument("input", type=click.Path(exists=True, allow_dash=True))
@click.option("--format", "fmt", type=FORMATS, default="text")
@click.option("--out", default=None)
@click.option("--allow-large", is_flag=True)
def semigroup_collisions(input, fmt, out, allow_large):
    """Colliding and focused middle-state pairs of the transition
    semigroup."""
    sg = transition_semigroup(_load_dfa(input), allow_large=allow_large)
    colliding = sorted(colliding_pairs(sg))
    focused = sorted(focused_pairs(sg))
    if fmt == "json":
        _emit(json.dumps({"colliding": [list(p) for p in colliding],
                          "focused": [list(p) for p in focused]}, indent=2),
              out)
    else:
        _emit(f"colliding: {colliding}\nfocused: {focused}", out)


# ---------------------------------------------------------------------------
# atoms

@main.group("atoms")
def atoms_group() -> None:
    """Atoms of regular languages."""


@atoms_group.command("list")
@click.argument("input", type=click.Path(exists=True, allow_dash=True))
@click.option("--format", "fmt", type=FORMATS, default="text")
@click.option("--out", default=None)
def atoms_list(input, fmt, out):
    """Bases of all atoms of the input's language (input must be a
    minimal DFA)."""
    d = _load_dfa(input)
    bases = sorted((sorted(b) for b in atoms_of(d)), key=lambda b: (len(b), b))
    if fmt == "json":
        _emit(json.dumps(bases), out)
    else:
        _emit("\n".join(str(b) for b in bases) or "(none)", out)


@atoms_group.command("complexity")
@click.argument("input", type=click.Path(exists=True, allow_dash=True))
@click.option("--basis", required=True,
              help="comma-separated state list; empty string for the empty basis")
@click.option("--format", "fmt", type=FORMATS, default="text")
@click.option("--out", default=None)
def atoms_complexity(input, basis, fmt, out):
    """Quotient complexity of one atom."""
    d = _load_dfa(input)
    states = frozenset(int(p) for p in basis.split(",") if p.strip() != "")
    value = atom_complexity(d, states)
    if fmt == "json":
        _emit(json.dumps({"basis": sorted(states), "complexity": value}), out)
    else:
        _emit(f"{sorted(states)}: {value}", out)


@atoms_group.command("table")
@click.option("--n", type=int, required=True)
@click.option("--format", "fmt", type=FORMATS, default="text")
@click.option("--out", default=None)
def atoms_table(n, fmt, out):
    """Per-atom complexities and bounds for the quinary witness."""
    rows = atom_report(d6(n))
    if fmt == "json":
        _emit(json.dumps([{"basis": list(r.basis), "complexity": r.complexity,
                           "bound": r.bound, "met": r.met} for r in rows],
                         indent=2), out)
        return
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["basis", "complexity", "bound", "met"])
        for r in rows:
            w.writerow([" ".join(map(str, r.basis)), r.complexity, r.bound, r.met])
        _emit(buf.getvalue().rstrip("\n"), out)
        return
    lines = [f"{list(r.basis)}: complexity={r.complexity} bound={r.bound} "
             f"{'met' if r.met else 'MISSED'}" for r in rows]
    _emit("\n".join(lines), out)
    if not all(r.met for r in rows):
        sys.exit(1)


# ---------------------------------------------------------------------------
# verify and search

@main.command("verify")
@click.argument("measure")
@click.option("--n", type=int, default=None)
@click.option("--m", type=int, default=None)
@click.option("--family", type=click.Choice(["d5", "d6"]), default="d6")
@click.option("--format", "fmt", type=FORMATS, default="text")
@click.option("--out", default=None)
def verify_cmd(measure, n, m, family, fmt, out):
    """Check computed complexities against the bound formulas.

    MEASURE is one of star, product, product-binary, union,
    intersection, difference, symmetric-difference, reversal,
    atom-count, syntactic, wsf-size, atom-table, tables, classes, all.
    """
    try:
        if measure == "all":
            reports = verify_all()
        else:
            params = {}
            if n is not None:
                params["n"] = n
            if m is not None:
                params["m"] = m
            params["family"] = family
            reports = run_measure(measure, **params)
    except KeyError as exc:
        raise click.UsageError(f"measure {measure!r} needs parameter {exc}")
    except ValueError as exc:
        raise click.UsageError(str(exc))
    _emit(_render_reports(reports, fmt), out)
    sys.exit(_exit_for(reports))


@main.command("search")
@click.option("--n", type=int, required=True)
@click.option("--cap", type=int, default=3,
              help="max generator-set size (<= 3)")
@click.option("--format", "fmt", type=FORMATS, default="text")
@click.option("--out", default=None)
def search_cmd(n, cap, fmt, out):
    """Exhaustively close all small generator subsets of bsf(n)."""
    report = search_subsemigroups(n, cap=cap)
    if fmt == "json":
        _emit(json.dumps(report.to_dict(), indent=2), out)
    else:
        _emit("\n".join(f"{k}: {v}" for k, v in report.to_dict().items()), out)


def run() -> None:
    try:
        main(standalone_mode=False)
    except click.UsageError as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        sys.exit(2)
    except click.ClickException as exc:
        exc.show()
        sys.exit(2)
    except click.exceptions.Abort:
        sys.exit(2)
    except BudgetError as exc:
        click.echo(f"budget error: {exc}", err=True)
        sys.exit(2)
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)


if __name__ == "__main__":
    run()
