"""Command-line front end for arqkit."""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Optional

from src.core.config import Settings
from src.core.errors import ArqkitError, PreconditionError
from src.core.logging import setup_logging
from src.corpus import install_fixtures, list_fixtures
from src.degrees import (
    Side,
    cycle_degree_consistency,
    infer_degrees,
    infer_left_degree,
    infer_right_degree,
)
from src.diagrams import cartan, classify, parse_graph
from src.knitting import (
    KnitDirection,
    growth_analysis,
    knit_from_seeds,
    knit_hereditary,
    load_recipe,
)
from src.matrices import (
    Direction,
    coxeter,
    coxeter_combinatorial,
    defect,
    defect_signs,
    family_identities,
    format_matrix,
    inverse_coxeter_combinatorial,
    translation_matrix,
)
from src.quiver import (
    Quiver,
    TranslationQuiver,
    dump_ar_quiver,
    export_dot,
    load_ar_quiver,
    parse_quiver,
    validate,
)
from src.sectional import (
    finiteness_verdict,
    full_sectional_subgraph,
    subgraph_type,
    tau_orbits,
)
from src.tubes import (
    coray_insertion,
    ray_insertion,
    recognize_tube,
    stable_tube,
    tree_type,
)

logger = logging.getLogger(__name__)

Handler = Callable[[argparse.Namespace, Settings], int]


def read_quiver(path: Path) -> Quiver:
    return parse_quiver(path.read_text(encoding="utf-8"))


def emit(text: str, out: Optional[Path]) -> None:
    """Print text, or write it to `out` and say so."""
    if out is None:
        print(text, end="" if text.endswith("\n") else "\n")
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text, encoding="utf-8")
    print(f"Wrote {out}")


def window_report(window: TranslationQuiver) -> str:
    lines = [
        f"{window.name or 'window'}: {len(window)} vertices, "
        f"{len(window.arrows)} arrows, {len(window.translation)} tau pairs"
    ]
    for v in window.vertices:
        dim = "" if v.dim is None else " (" + ",".join(map(str, v.dim)) + ")"
        flags = "".join(
            mark
            for mark, on in (
                (" projective", v.projective),
                (" ext-injective", v.ext_injective),
                (" open", window.is_boundary(v.id)),
            )
            if on
        )
        lines.append(f"  {v.id}{dim}{flags}")
    if window.metadata.get("truncated"):
        lines.append("  truncated at the slice cap")
    lines.append(str(growth_analysis(window)))
    return "\n".join(lines) + "\n"


def render(window: TranslationQuiver, fmt: str) -> str:
    if fmt == "dot":
        return export_dot(window)
    if fmt == "report":
        return window_report(window)
    return dump_ar_quiver(window)


def split_ids(text: str) -> list[str]:
    return [part.strip() for part in text.split(",") if part.strip()]


def cmd_validate(parsed: argparse.Namespace, settings: Settings) -> int:
    report = validate(load_ar_quiver(parsed.ar_file))
    print(report)
    return 1 if report.errors else 0


def cmd_knit(parsed: argparse.Namespace, settings: Settings) -> int:
    if parsed.recipe is not None:
        recipe = load_recipe(parsed.recipe)
        if parsed.cap is not None:
            recipe = recipe.model_copy(update={"cap": parsed.cap})
        window = knit_from_seeds(recipe)
    elif parsed.quiver is not None:
        cap = parsed.cap if parsed.cap is not None else settings.knitting.slice_cap
        window = knit_hereditary(
            read_quiver(parsed.quiver), KnitDirection(parsed.direction), cap
        )
    else:
        raise PreconditionError("knit needs --quiver or --recipe")
    emit(render(window, parsed.format), parsed.out)
    return 0


def cmd_classify(parsed: argparse.Namespace, settings: Settings) -> int:
    graph = parse_graph(parsed.graph.read_text(encoding="utf-8"))
    print(classify(graph))
    return 0


def cmd_cartan(parsed: argparse.Namespace, settings: Settings) -> int:
    graph = parse_graph(parsed.graph.read_text(encoding="utf-8"))
    print(" ".join(graph.vertices))
    print(format_matrix(cartan(graph)))
    return 0


def cmd_subgraph_type(parsed: argparse.Namespace, settings: Settings) -> int:
    s = full_sectional_subgraph(load_ar_quiver(parsed.ar_file), parsed.seed)
    print(f"subgraph {s}")
    if s.open_vertices:
        print(f"open {', '.join(s.open_vertices)}")
    print(f"type {subgraph_type(s)}")
    return 0


def cmd_orbits(parsed: argparse.Namespace, settings: Settings) -> int:
    print(tau_orbits(load_ar_quiver(parsed.ar_file)))
    return 0


def cmd_verdict(parsed: argparse.Namespace, settings: Settings) -> int:
    for verdict in finiteness_verdict(load_ar_quiver(parsed.ar_file)):
        print(verdict)
    return 0


def cmd_coxeter(parsed: argparse.Namespace, settings: Settings) -> int:
    q = read_quiver(parsed.quiver)
    if parsed.combinatorial:
        if not q.is_acyclic():
            raise PreconditionError("quiver has an oriented cycle or a loop")
        c, c_inv = coxeter_combinatorial(q), inverse_coxeter_combinatorial(q)
    else:
        matrices = coxeter(q)
        c, c_inv = matrices.coxeter, matrices.inverse
    print(f"vertices {' '.join(q.vertex_ids)}")
    print("C")
    print(format_matrix(c))
    print("C^-1")
    print(format_matrix(c_inv))
    return 0


def cmd_translation_matrix(parsed: argparse.Namespace, settings: Settings) -> int:
    window = load_ar_quiver(parsed.ar_file)
    m = translation_matrix(window, split_ids(parsed.sigma), Direction(parsed.direction))
    print(format_matrix(m))
    return 0


def cmd_identity_check(parsed: argparse.Namespace, settings: Settings) -> int:
    checks = family_identities(parsed.family)
    for check in checks:
        print(check)
    return 0 if all(check.passed for check in checks) else 1


def cmd_defect(parsed: argparse.Namespace, settings: Settings) -> int:
    q = read_quiver(parsed.quiver)
    data = defect(q, settings.matrices.defect_cap)
    print(data)
    signs = defect_signs(q, data)
    for v in q.vertex_ids:
        print(f"P{v} {signs.projectives[v]:+d}  I{v} {signs.injectives[v]:+d}")
    return 0


def cmd_tube(parsed: argparse.Namespace, settings: Settings) -> int:
    if parsed.tube_command == "make":
        emit(dump_ar_quiver(stable_tube(parsed.rank, parsed.height)), parsed.out)
        return 0
    window = load_ar_quiver(parsed.ar_file)
    if parsed.tube_command == "insert":
        insert = ray_insertion if parsed.ray else coray_insertion
        emit(dump_ar_quiver(insert(window, parsed.at, parsed.n)), parsed.out)
        return 0
    params = recognize_tube(window)
    print(params if params is not None else "not recognised as a tube")
    return 0


def cmd_tree_type(parsed: argparse.Namespace, settings: Settings) -> int:
    window = load_ar_quiver(parsed.ar_file)
    result = tree_type(window, parsed.base, settings.sectional.path_cap)
    print(result)
    for x, y in result.tree.arrows:
        print(f"  {x} -> {y}")
    return 0


def cmd_degrees(parsed: argparse.Namespace, settings: Settings) -> int:
    window = load_ar_quiver(parsed.ar_file)
    side = Side(parsed.side)
    path_cap = settings.sectional.path_cap
    if parsed.arrow is not None:
        ends = split_ids(parsed.arrow)
        if len(ends) != 2:
            raise PreconditionError(f"--arrow expects src,dst, got '{parsed.arrow}'")
        infer = infer_left_degree if side is Side.LEFT else infer_right_degree
        print(infer(window, ends[0], ends[1], path_cap))
        return 0
    for bound in infer_degrees(window, side, path_cap):
        print(bound)
    consistency = cycle_degree_consistency(
        window, settings.degrees.cycle_cap, path_cap
    )
    if consistency:
        print(consistency)
    return 0


def cmd_export_dot(parsed: argparse.Namespace, settings: Settings) -> int:
    print(export_dot(load_ar_quiver(parsed.ar_file)), end="")
    return 0


def cmd_fixtures(parsed: argparse.Namespace, settings: Settings) -> int:
    root = settings.corpus_path
    if parsed.fixtures_command == "install":
        written = install_fixtures(parsed.target, root)
        print(f"Installed {len(written)} fixtures into {parsed.target}")
        return 0
    for info in list_fixtures(root):
        print(info)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arqkit",
        description="Translation quivers, knitting and AR-quiver combinatorics",
    )
    parser.add_argument("--config", type=Path, help="Path to settings YAML")
    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="Override the configured log level",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler: Handler, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        return p

    p = command("validate", cmd_validate, "Check mesh, additivity and warnings")
    p.add_argument("ar_file", type=Path)

    p = command("knit", cmd_knit, "Knit a window from a quiver or a recipe")
    p.add_argument("--quiver", type=Path, help="Acyclic quiver to knit")
    p.add_argument("--recipe", type=Path, help="Knitting recipe YAML")
    p.add_argument("--direction", choices=["right", "left"], default="right")
    p.add_argument("--cap", type=int, help="Slice cap")
    p.add_argument("--out", type=Path, help="Write here instead of stdout")
    p.add_argument(
        "--format", choices=["interchange", "dot", "report"], default="interchange"
    )

    p = command("classify", cmd_classify, "Classify an undirected graph")
    p.add_argument("--graph", type=Path, required=True)

    p = command("cartan", cmd_cartan, "Print the Cartan matrix of a graph")
    p.add_argument("--graph", type=Path, required=True)

    p = command("subgraph-type", cmd_subgraph_type, "Full sectional subgraph type")
    p.add_argument("ar_file", type=Path)
    p.add_argument("--seed", required=True, help="Vertex to grow from")

    p = command("orbits", cmd_orbits, "List tau-orbits and their adjacency")
    p.add_argument("ar_file", type=Path)

    p = command("verdict", cmd_verdict, "Finiteness verdict per component")
    p.add_argument("ar_file", type=Path)

    p = command("coxeter", cmd_coxeter, "Coxeter matrix and its inverse")
    p.add_argument("--quiver", type=Path, required=True)
    p.add_argument("--combinatorial", action="store_true", help="Use path counts")

    p = command(
        "translation-matrix", cmd_translation_matrix, "Translation matrix of a slice"
    )
    p.add_argument("ar_file", type=Path)
    p.add_argument("--sigma", required=True, help="Comma-separated slice vertices")
    p.add_argument("--direction", choices=["left", "right"], default="left")

    p = command("identity-check", cmd_identity_check, "Dynkin family identities")
    p.add_argument("--family", required=True, help="A5, D6, E8, ...")

    p = command("defect", cmd_defect, "Defect of a Euclidean quiver")
    p.add_argument("--quiver", type=Path, required=True)

    p = command("tube", cmd_tube, "Build, extend or recognise tubes")
    tube = p.add_subparsers(dest="tube_command", required=True)
    make = tube.add_parser("make", help="Window of a stable tube")
    make.add_argument("--rank", type=int, required=True)
    make.add_argument("--height", type=int, required=True)
    make.add_argument("--out", type=Path)
    insert = tube.add_parser("insert", help="Coray or ray insertion")
    insert.add_argument("ar_file", type=Path)
    insert.add_argument("--at", required=True, help="Coray (ray) vertex")
    insert.add_argument("--n", type=int, required=True, help="Insertion size")
    insert.add_argument("--ray", action="store_true")
    insert.add_argument("--out", type=Path)
    recognize = tube.add_parser("recognize", help="Read off tube parameters")
    recognize.add_argument("ar_file", type=Path)

    p = command("tree-type", cmd_tree_type, "Tree of sectional paths from a base")
    p.add_argument("ar_file", type=Path)
    p.add_argument("--base", required=True)

    p = command("degrees", cmd_degrees, "Degree bounds of arrows")
    p.add_argument("ar_file", type=Path)
    p.add_argument("--arrow", help="src,dst")
    p.add_argument("--side", choices=["left", "right"], default="left")

    p = command("export-dot", cmd_export_dot, "Graphviz rendering of a window")
    p.add_argument("ar_file", type=Path)

    p = command("fixtures", cmd_fixtures, "List or install the fixture corpus")
    fixtures = p.add_subparsers(dest="fixtures_command", required=True)
    fixtures.add_parser("list", help="List shipped fixtures")
    install = fixtures.add_parser("install", help="Copy fixtures into a directory")
    install.add_argument("target", type=Path)

    return parser


def main(args: list[str] | None = None) -> int:
    parser = build_parser()
    parsed = parser.parse_args(args)

    settings = Settings.load(parsed.config)
    setup_logging(parsed.log_level or settings.logging.level)

    try:
        return int(parsed.handler(parsed, settings))
    except ArqkitError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
