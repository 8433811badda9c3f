"""Command-line interface: ``tabcomplex <command> --input doc.json``.

Exit codes: 0 success, 2 invalid input, 3 size cap or search budget
exceeded, 4 independent methods disagree (or an internal cross-check
fails).
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Callable

from .complexes import DEFAULT_MAX_FACES, TableauComplex
from .decompose import (
    homeomorphism_certificate,
    shelling_order,
    h_vector,
    verify_shelling,
    vertex_decompose,
)
from .documents import Request, dumps, face_to_json, load_document, result_document
from .errors import CapExceeded, InvariantViolation, MethodDisagreement, ValidationError
from .kpoly import KPOLY_METHODS, divide_phantom, hilbert_coarse_check, kpoly
from .labels import label_str, thaw
from .laurent import LaurentPolynomial
from .poset import DEFAULT_MAX_TABLEAUX, enumerate_tableaux
from .structure import abstract_from_tableau_complex, recognize_tableau_complex
from .vexillary import (
    GROTHENDIECK_METHODS,
    grothendieck,
    schubert_lowest_terms,
    specialize_buch,
    specialize_schubert,
)
from .young import Partition, empty_face_tableau, render_tableau

COMMANDS = ("tableaux", "complex", "faces", "decompose", "kpoly", "groth", "recognize", "render")
SPECIALIZATIONS = ("buch", "schubert-double", "schubert-single", "schur")


def _poly(p: LaurentPolynomial) -> dict:
    return {"polynomial": p.to_json(), "text": str(p)}


def _topology(cx: TableauComplex, assume_shellable: bool) -> str | None:
    if cx.problem is None and not assume_shellable:
        return None
    return homeomorphism_certificate(cx, assume_shellable=True).value


def _vertex_json(vs) -> list:
    return [[thaw(v.point), thaw(v.value)] for v in vs]


def cmd_tableaux(req: Request, args) -> dict:
    if req.problem is None:
        raise ValidationError("tableaux needs a poset problem, shape or permutation")
    tabs = enumerate_tableaux(req.problem, args.max_tableaux)
    return {
        "points": [thaw(x) for x in req.problem.points],
        "count": len(tabs),
        "tableaux": [[thaw(y) for y in t] for t in tabs],
    }


def cmd_complex(req: Request, args) -> dict:
    cx = req.tableau_complex(args.max_tableaux)
    ridges = cx.ridge_incidence()
    return {
        "points": [thaw(x) for x in cx.points],
        "ambient": face_to_json(cx, cx.ambient),
        "ambient_size": cx.ambient_size,
        "facet_count": len(cx.facets),
        "facets": [[thaw(y) for y in f] for f in cx.facets],
        "dimension": cx.dimension,
        "f_vector": cx.f_vector(args.max_faces),
        "vertices": {
            "normal": _vertex_json(cx.normal_vertices),
            "cone": _vertex_json(cx.cone_vertices),
            "phantom": _vertex_json(cx.phantom_pairs),
        },
        "ridges": {"interior": sum(1 for c in ridges.values() if c == 2), "boundary": sum(1 for c in ridges.values() if c == 1)},
        "topology": _topology(cx, args.assume_shellable),
    }


def cmd_faces(req: Request, args) -> dict:
    cx = req.tableau_complex(args.max_tableaux)
    known = cx.problem is not None or args.assume_shellable
    faces = []
    for F in cx.faces(args.max_faces):
        faces.append({
            "face": face_to_json(cx, F),
            "dimension": cx.face_dimension(F),
            "interior": cx.is_interior(F) if known else None,
        })
    return {"count": len(faces), "faces": faces}


def cmd_decompose(req: Request, args) -> dict:
    cx = req.tableau_complex(args.max_tableaux)
    eps = req.options.get("epsilon")
    if eps is not None:
        from .labels import freeze

        eps = [freeze(x) for x in eps]
    tree = vertex_decompose(cx, eps)
    cert = shelling_order(cx, eps)
    if list(tree.leaves()) != list(cert.facets):
        raise InvariantViolation("decomposition leaves and shelling order differ")
    if not verify_shelling(cx, cert.facets):
        raise InvariantViolation("the shelling order fails the shelling condition")
    return {
        "tree": tree.to_json(),
        "shelling": cert.to_json(cx),
        "h_vector": h_vector(cx, eps),
        "topology": homeomorphism_certificate(cx).value,
        "verified": True,
    }


def _kpoly_methods(cx: TableauComplex, args) -> list[str]:
    if args.method != "all":
        return [args.method]
    methods = ["faces"]
    if cx.problem is not None or args.assume_shellable:
        methods.append("interior")
    if cx.problem is not None and not cx.cone_vertices:
        methods.append("shelling")
    methods.append("recursive")
    return methods


def cmd_kpoly(req: Request, args) -> dict:
    if args.method not in KPOLY_METHODS + ("all",):
        raise ValidationError(f"unknown K-polynomial method {args.method!r}")
    cx = req.tableau_complex(args.max_tableaux)
    methods = _kpoly_methods(cx, args)
    results: dict[str, LaurentPolynomial] = {}
    for m in methods:
        if m == "faces":
            results[m] = kpoly(cx, m, max_faces=args.max_faces)
        elif m == "interior":
            results[m] = kpoly(cx, m, max_faces=args.max_faces, assume_shellable=args.assume_shellable)
        elif m == "recursive" and args.method == "all" and cx.problem is None:
            try:
                results[m] = kpoly(cx, m)
            except ValidationError:
                methods = [x for x in methods if x != m]
        else:
            results[m] = kpoly(cx, m)
    if len(set(results.values())) > 1:
        detail = "; ".join(f"{m}: {p}" for m, p in results.items())
        raise MethodDisagreement(f"K-polynomial methods disagree: {detail}")
    K = results[methods[0]]
    coarse = hilbert_coarse_check(cx, K)
    out = {"method": args.method, "methods": methods, **_poly(K)}
    out["coarse"] = {"h_vector": coarse.h_vector, "exact": coarse.exact, "matches": coarse.matches}
    if args.divide_phantom:
        out["without_phantom"] = _poly(divide_phantom(cx, K))
    return out


def _groth_source(req: Request):
    if req.kind == "permutation":
        return list(req.permutation)
    if req.kind == "shape":
        if not isinstance(req.shape, Partition):
            raise ValidationError("Grothendieck polynomials need a straight shape")
        return (req.shape, req.flags)
    raise ValidationError("groth needs a permutation or a shape document")


def _rename(p: LaurentPolynomial, old: str, new: str) -> LaurentPolynomial:
    return p.map_monomials(lambda v, e: LaurentPolynomial.gen(new, v.key, e) if v.namespace == old else None)


def cmd_groth(req: Request, args) -> dict:
    if args.method not in GROTHENDIECK_METHODS + ("all",):
        raise ValidationError(f"unknown Grothendieck method {args.method!r}")
    source = _groth_source(req)
    G = grothendieck(source, args.method, max_faces=args.max_faces, max_tableaux=args.max_tableaux)
    shape, flags = req.shape, req.flags
    out = {"shape": list(shape.parts), "flags": list(flags), "method": args.method, **_poly(G)}
    spec = args.specialize
    if spec is None:
        return out
    if spec not in SPECIALIZATIONS:
        raise ValidationError(f"unknown specialization {spec!r}")
    if spec == "buch":
        S = specialize_buch(G)
    elif spec == "schur":
        S = specialize_buch(G).lowest_degree_component()
        if shape.size:
            direct = _rename(specialize_schubert(shape, flags, "single"), "a", "x")
            if S != direct:
                raise MethodDisagreement("lowest terms of the Buch specialization differ from the tableau sum")
    else:
        variant = spec.split("-")[1]
        S = schubert_lowest_terms(G, shape.size)
        if variant == "single":
            S = S.map_monomials(lambda v, e: LaurentPolynomial.constant(0) if v.namespace == "b" else None)
        if shape.size and S != specialize_schubert(shape, flags, variant):
            raise MethodDisagreement("lowest-degree specialization differs from the tableau sum")
    out["specialization"] = {"kind": spec, **_poly(S)}
    return out


def cmd_recognize(req: Request, args) -> dict:
    if req.kind == "abstract":
        A = req.abstract
    else:
        A = abstract_from_tableau_complex(req.tableau_complex(args.max_tableaux))
    rec = recognize_tableau_complex(A)
    return {
        "recognized": rec is not None,
        "recognition": rec.to_json() if rec is not None else None,
        "isomorphic": rec.is_isomorphic_to(A) if rec is not None else None,
    }


def cmd_render(req: Request, args) -> dict:
    if req.kind not in ("shape", "permutation") or req.shape is None or req.shape.size == 0:
        cx = req.tableau_complex(args.max_tableaux)
        pictures = [
            ", ".join(f"{label_str(x)}:{label_str(y)}" for x, y in zip(cx.points, f)) for f in cx.facets
        ]
        return {"pictures": pictures}
    cx = req.tableau_complex(args.max_tableaux)
    pictures = [render_tableau(req.shape, f, compact=True) for f in cx.facets]
    return {
        "pictures": pictures,
        "empty_face": empty_face_tableau(req.shape, req.flags).render(),
    }


HANDLERS: dict[str, Callable[[Request, argparse.Namespace], dict]] = {
    "tableaux": cmd_tableaux,
    "complex": cmd_complex,
    "faces": cmd_faces,
    "decompose": cmd_decompose,
    "kpoly": cmd_kpoly,
    "groth": cmd_groth,
    "recognize": cmd_recognize,
    "render": cmd_render,
}


def to_text(command: str, result: dict) -> str:
    """Short human-readable summary of a result payload."""
    lines = []
    if command == "tableaux":
        lines.append(f"{result['count']} tableaux")
        lines += [" ".join(map(str, t)) for t in result["tableaux"]]
    elif command == "complex":
        lines.append(f"facets: {result['facet_count']}  dimension: {result['dimension']}")
        lines.append(f"f-vector: {tuple(result['f_vector'])}")
        v = result["vertices"]
        lines.append(f"vertices: {len(v['normal']) + len(v['cone'])} ({len(v['cone'])} cone, {len(v['phantom'])} phantom pairs)")
        lines.append(f"ridges: {result['ridges']['interior']} interior, {result['ridges']['boundary']} boundary")
        lines.append(f"topology: {result['topology'] or 'not certified'}")
    elif command == "faces":
        lines.append(f"{result['count']} faces")
        for f in result["faces"]:
            face = " ".join(f"{x}:{{{','.join(map(str, ys))}}}" for x, ys in f["face"].items())
            tag = {True: " interior", False: " boundary", None: ""}[f["interior"]]
            lines.append(f"dim {f['dimension']:>2}{tag}  {face}")
    elif command == "decompose":
        lines.append(f"topology: {result['topology']}")
        lines.append(f"h-vector: {tuple(result['h_vector'])}")
        for f, eta in zip(result["shelling"]["facets"], result["shelling"]["eta"]):
            lines.append(f"eta={eta}  {f}")
    elif command == "kpoly":
        lines.append(f"K = {result['text']}")
        lines.append(f"h-vector: {tuple(result['coarse']['h_vector'])}")
    elif command == "groth":
        lines.append(f"shape {tuple(result['shape'])} flags {tuple(result['flags'])}")
        lines.append(f"G = {result['text']}")
        if "specialization" in result:
            lines.append(f"{result['specialization']['kind']}: {result['specialization']['text']}")
    elif command == "recognize":
        if result["recognized"]:
            blocks = result["recognition"]["blocks"]
            lines.append(f"tableau complex on {len(blocks)} points; block sizes {[len(b) for b in blocks]}")
        else:
            lines.append("not a tableau complex")
    elif command == "render":
        lines += result["pictures"]
        if "empty_face" in result:
            lines.append(f"empty face: {result['empty_face']}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tabcomplex", description="Tableau complexes and their K-polynomials.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--input", default="-", help="input JSON document (default: standard input)")
    parser.add_argument("--method", default=None)
    parser.add_argument("--specialize", default=None, choices=SPECIALIZATIONS)
    parser.add_argument("--max-faces", type=int, default=None)
    parser.add_argument("--max-tableaux", type=int, default=None)
    parser.add_argument("--format", choices=("json", "text"), default="json")
    parser.add_argument("--assume-shellable", action="store_true", default=None)
    parser.add_argument("--divide-phantom", action="store_true", help="also report K without phantom factors")
    parser.add_argument("--timing", action="store_true", help="include wall-clock timing in the output")
    return parser


def _fill_defaults(args: argparse.Namespace, req: Request) -> None:
    opts = req.options
    if args.method is None:
        args.method = opts.get("method") or {"kpoly": "faces", "groth": "svt"}.get(args.command)
    if args.specialize is None:
        args.specialize = opts.get("specialize")
    if args.max_faces is None:
        args.max_faces = opts.get("max_faces", DEFAULT_MAX_FACES)
    if args.max_tableaux is None:
        args.max_tableaux = opts.get("max_tableaux", DEFAULT_MAX_TABLEAUX)
    if args.assume_shellable is None:
        args.assume_shellable = bool(opts.get("assume_shellable", False))


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            try:
                with open(args.input, encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as err:
                raise ValidationError(f"cannot read {args.input}: {err.strerror}") from None
        req = load_document(text)
        _fill_defaults(args, req)
        start = time.perf_counter()
        result = HANDLERS[args.command](req, args)
        timing = {"seconds": round(time.perf_counter() - start, 6)} if args.timing else None
        doc = result_document(args.command, req, result, timing)
    except ValidationError as err:
        print(f"error: {err}", file=stderr)
        return 2
    except CapExceeded as err:
        print(f"error: {err}", file=stderr)
        return 3
    except (MethodDisagreement, InvariantViolation) as err:
        print(f"error: {err}", file=stderr)
        return 4
    if args.format == "json":
        stdout.write(dumps(doc))
    else:
        stdout.write(to_text(args.command, doc["result"]))
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
