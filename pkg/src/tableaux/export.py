"""JSON, Graphviz DOT and plain-text renderings of both tree forms."""

import json

from .engine import Rule, lmods, rule_for, sorted_models
from .errors import TableauError
from .parser import parse_signed, render_signed
from .trace import (
    BranchStatus,
    Tableau,
    TreeOfLists,
    iter_implicit,
    iter_nodes,
    status_of,
)

CLOSED_MARK = "✕"


def _node_info(tree):
    """Yield ``(path, node, rule, shown formulas, full set, status)`` for either tree form."""
    if isinstance(tree, Tableau):
        for path, node, gamma in iter_implicit(tree):
            rule = rule_for(node.used) if node.children else Rule.LIT
            status = None if node.children else status_of(gamma)
            yield path, node, rule, node.explicit, gamma, status
    else:
        for path, node in iter_nodes(tree):
            status = None if node.children else status_of(node.content)
            yield path, node, node.rule, node.content, node.content, status


def to_dict(tree) -> dict:
    """Nested dict with keys rule, used, explicit (or content), children.

    Leaves additionally carry ``status``.
    """
    key = "explicit" if isinstance(tree, Tableau) else "content"
    by_path = {}
    for path, node, rule, formulas, _, status in _node_info(tree):
        entry = {
            "rule": rule.value,
            "used": render_signed(node.used) if node.used is not None else None,
            key: [render_signed(sf) for sf in formulas],
            "children": [],
        }
        if status is not None:
            entry["status"] = status.value
        by_path[path] = entry
        if path:
            by_path[path[:-1]]["children"].append(entry)
    return by_path[()]


def document(tree, models=None) -> dict:
    kind = "tableau" if isinstance(tree, Tableau) else "tree-of-lists"
    doc = {"tree": kind, "root": to_dict(tree)}
    if models is not None:
        doc["models"] = [pm.render() for pm in sorted_models(models)]
    return doc


def to_json(tree, models=None, indent=2) -> str:
    return json.dumps(document(tree, models), indent=indent, ensure_ascii=False)


def _check_rule(entry, used, n_children):
    rule = Rule(entry["rule"])
    if used is None:
        if rule is not Rule.LIT or n_children:
            raise TableauError("a node without a used formula must be a leaf labelled 'lit'")
        return rule
    if rule is not rule_for(used):
        raise TableauError(f"rule {rule.value!r} does not match used formula {render_signed(used)!r}")
    expected = 2 if rule is Rule.F_AND else 1
    if n_children != expected:
        raise TableauError(f"rule {rule.value!r} needs {expected} children, found {n_children}")
    return rule


def from_dict(entry: dict):
    """Inverse of :func:`to_dict`; accepts a bare node or a whole document."""
    if "root" in entry:
        entry = entry["root"]
    key = "explicit" if "explicit" in entry else "content"

    def build(e):
        used = parse_signed(e["used"]) if e.get("used") is not None else None
        formulas = tuple(parse_signed(s) for s in e[key])
        kids = tuple(build(c) for c in e.get("children", []))
        rule = _check_rule(e, used, len(kids))
        if key == "explicit":
            return Tableau(formulas, used, kids)
        return TreeOfLists(formulas, rule, used, kids)

    return build(entry)


def from_json(text: str):
    return from_dict(json.loads(text))


def _annotation(gamma, status):
    if status is BranchStatus.CLOSED:
        return CLOSED_MARK
    if status is BranchStatus.OPEN:
        (model,) = lmods(gamma)
        return model.render()
    if status is BranchStatus.INCOMPLETE:
        return "…"
    return ""


def _dot_escape(text):
    return text.replace("\\", "\\\\").replace('"', '\\"')


def to_dot(tree, name="tableau") -> str:
    lines = [f"digraph {name} {{", "  node [shape=box, fontname=\"monospace\"];"]
    ids = {}
    edges = []
    for path, node, rule, formulas, gamma, status in _node_info(tree):
        ident = f"n{len(ids)}"
        ids[path] = ident
        rows = [render_signed(sf) for sf in formulas] or ["∅"]
        if node.used is not None:
            rows.append(f"[{rule.value}] {render_signed(node.used)}")
        note = _annotation(gamma, status)
        if note:
            rows.append(note)
        label = "\\n".join(_dot_escape(r) for r in rows)
        attrs = f'label="{label}"'
        if status is BranchStatus.CLOSED:
            attrs += ", style=dashed"
        elif status is BranchStatus.OPEN:
            attrs += ", style=bold"
        lines.append(f"  {ident} [{attrs}];")
        if path:
            edges.append(f"  {ids[path[:-1]]} -> {ident};")
    lines.extend(edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


def render_ascii(tree) -> str:
    """Indented text drawing, one line per node."""
    out = []
    prefixes = {(): ("", "")}
    infos = list(_node_info(tree))
    child_count = {}
    for path, node, *_ in infos:
        child_count[path] = len(node.children)
    for path, node, rule, formulas, gamma, status in infos:
        head, tail = prefixes[path]
        text = ", ".join(render_signed(sf) for sf in formulas) or "∅"
        if node.used is not None:
            text += f"   [{rule.value} on {render_signed(node.used)}]"
        note = _annotation(gamma, status)
        if note:
            text += f"   {note}"
        out.append(head + text)
        n = child_count[path]
        for i in range(n):
            last = i == n - 1
            prefixes[path + (i,)] = (tail + ("└── " if last else "├── "),
                                     tail + ("    " if last else "│   "))
    return "\n".join(out) + "\n"
