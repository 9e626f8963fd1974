"""Command line front end.

    nucoprod --family matrix --depth 6 --format json
    nucoprod run sandwich:ex3_24 depth=5 t=1/2
    nucoprod --spec algebra.json --sections regularity,counit

Exit status: 0 when every declared expectation matched, 2 on a mismatch,
3 on input or gate errors.
"""
from __future__ import annotations

import argparse
import sys

from .errors import GateFailed, NucoprodError, ParseError
from .gallery.registry import PARAMETERS, build, family_names
from .loader import load_spec_file
from .report import SECTIONS, analyse, to_json_text, to_text

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 2, 3


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nucoprod", description="Analyse coproducts on non-unital algebras.")
    p.add_argument("positional", nargs="*", metavar="run FAMILY [key=value ...]",
                   help="positional form: run <family> depth=<n> t=<scalar>")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--family", help="gallery family: " + ", ".join(family_names()))
    src.add_argument("--spec", help="specification file (JSON or a 'gallery: name { ... }' line)")
    p.add_argument("--depth", type=int, default=None, help="truncation depth (default 6)")
    p.add_argument("--seed", type=int, default=None, help="sampling seed (default 0)")
    p.add_argument("--sections", default=",".join(SECTIONS),
                   help="comma separated subset of: " + ", ".join(SECTIONS))
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--t", dest="t", default=None, help="value substituted for the parameter t")
    p.add_argument("--output", "-o", help="write the report to this file instead of stdout")
    p.add_argument("--list", action="store_true", help="list gallery families and exit")
    return p


def _positional(args, parser):
    """Fold ``run <family> key=value ...`` into the flag values."""
    words = list(args.positional)
    if not words:
        return {}
    if words[0] == "run":
        words = words[1:]
    params = {}
    for w in words:
        if "=" in w:
            key, value = w.split("=", 1)
            params[key.strip()] = value.strip()
        elif args.family is None and args.spec is None:
            args.family = w
        else:
            parser.error(f"unexpected argument {w!r}")
    for key in ("depth", "seed"):
        if key in params:
            value = params.pop(key)
            try:
                setattr(args, key, int(value))
            except ValueError:
                raise ParseError(f"{key} must be an integer, not {value!r}") from None
    if "t" in params:
        args.t = params.pop("t")
    return params


def _sections(text):
    chosen = [s.strip() for s in text.split(",") if s.strip()]
    bad = [s for s in chosen if s not in SECTIONS]
    if bad:
        raise ParseError(f"unknown section(s): {', '.join(bad)}")
    return tuple(s for s in SECTIONS if s in chosen)


def _entry_params(family, args, extra):
    params = dict(extra)
    if args.t is not None:
        params["t"] = args.t
    if "t" in params and "t" not in PARAMETERS.get(family, ()):
        raise ParseError(f"family {family} takes no parameter t")
    return params


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = _parser()
    args = parser.parse_args(argv)
    if args.list:
        for name in family_names():
            stdout.write(name + "\n")
        return EXIT_OK
    try:
        extra = _positional(args, parser)
        depth = 6 if args.depth is None else args.depth
        seed = 0 if args.seed is None else args.seed
        if depth < 1:
            raise ParseError(f"depth must be at least 1, got {depth}")
        sections = _sections(args.sections)
        gates = None
        if args.spec:
            spec = load_spec_file(args.spec)
            if spec.gallery:
                family, params = spec.gallery, dict(spec.parameters)
                if args.t is not None:
                    params["t"] = args.t
                entry = build(family, **params)
            else:
                if spec.cp is None:
                    raise ParseError("the specification defines no coproduct")
                entry = None
                cp, gates = spec.cp, spec.gates
        elif args.family:
            family = args.family
            entry = build(family, **_entry_params(family, args, extra))
        else:
            parser.error("give --family, --spec or 'run <family>'")
        if entry is not None:
            cp = entry.cp
            source = {"kind": "gallery", "name": entry.name,
                      "params": {k: str(v) for k, v in sorted(entry.params.items())}}
            report = analyse(cp, depth, seed, sections, entry.expected, source, entry.notes)
        else:
            source = {"kind": "spec", "name": cp.alg.name}
            report = analyse(cp, depth, seed, sections, None, source, gates=gates)
    except GateFailed as err:
        stderr.write(f"error: {err}\n")
        return EXIT_INPUT
    except (ParseError, OSError) as err:
        stderr.write(f"error: {err}\n")
        return EXIT_INPUT
    except NucoprodError as err:
        stderr.write(f"error: {type(err).__name__}: {err}\n")
        return EXIT_INPUT
    text = to_json_text(report) if args.format == "json" else to_text(report)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return report["summary"]["exit_code"]


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
