"""Exhaustive, deterministic enumeration of actions, bibundles, and isomorphisms.

Every action of a groupoid assigns to each arrow a bijection between moment
fibres (the inverse arrow supplies the inverse map), so actions are enumerated
as functorial families of fibre bijections: pick a bijection for an unassigned
arrow, close under composition and inversion, backtrack on conflict.  All
choices run in ident_key order, so enumeration order is a platform-independent
total order — `decide_morita` returns the canonically least witness.
"""

from __future__ import annotations

import itertools

from .actions import LeftAction, RightAction
from .bibundles import Bibundle
from .groupoid import FiniteGroupoid, ident_key, sorted_idents


def _bijections(domain, codomain):
    """All bijections domain→codomain as dicts, in deterministic order."""
    if len(domain) != len(codomain):
        return
    for image in itertools.permutations(codomain):
        yield dict(zip(domain, image))


def _compose_bij(outer, inner):
    return {x: outer[y] for x, y in inner.items()}


def _invert_bij(bij):
    return {y: x for x, y in bij.items()}


def _assign(groupoid, sigma, arrow, bij):
    """Assign one fibre bijection plus its inverse; False on conflict."""
    if arrow in sigma:
        return sigma[arrow] == bij
    sigma[arrow] = bij
    inverse_arrow = groupoid.inv[arrow]
    inverse_bij = _invert_bij(bij)
    if inverse_arrow in sigma:
        return sigma[inverse_arrow] == inverse_bij
    sigma[inverse_arrow] = inverse_bij
    return True


def _propagate(groupoid, sigma, covariant):
    """Close a partial family under the composition table; False on conflict."""
    changed = True
    while changed:
        changed = False
        for (g, h), gh in groupoid.comp.items():
            sg, sh = sigma.get(g), sigma.get(h)
            if sg is None or sh is None:
                continue
            derived = _compose_bij(sg, sh) if covariant else _compose_bij(sh, sg)
            if gh in sigma:
                if sigma[gh] != derived:
                    return False
            else:
                if not _assign(groupoid, sigma, gh, derived):
                    return False
                changed = True
    return True


def _action_families(groupoid: FiniteGroupoid, fibres, covariant):
    """Yield complete arrow→bijection families for the given fibre sizes."""
    if covariant:
        ends = {g: (fibres[groupoid.src[g]], fibres[groupoid.tgt[g]])
                for g in groupoid.arrows}
    else:
        ends = {g: (fibres[groupoid.tgt[g]], fibres[groupoid.src[g]])
                for g in groupoid.arrows}
    if any(len(dom) != len(cod) for dom, cod in ends.values()):
        return
    base = {}
    for x in groupoid.objects:
        identity = {p: p for p in fibres[x]}
        if not _assign(groupoid, base, groupoid.unit[x], identity):
            return
    if not _propagate(groupoid, base, covariant):
        return

    order = list(groupoid.arrows)

    def extend(sigma):
        pending = [g for g in order if g not in sigma]
        if not pending:
            yield dict(sigma)
            return
        g = pending[0]
        dom, cod = ends[g]
        for candidate in _bijections(dom, cod):
            trial = dict(sigma)
            if _assign(groupoid, trial, g, candidate) and \
                    _propagate(groupoid, trial, covariant):
                yield from extend(trial)

    yield from extend(base)


def enumerate_left_actions(groupoid: FiniteGroupoid, carrier, moment):
    """Yield every left-action table of the groupoid on (carrier, moment)."""
    fibres = {x: sorted_idents(p for p in carrier if moment[p] == x)
              for x in groupoid.objects}
    for sigma in _action_families(groupoid, fibres, covariant=True):
        yield {(g, x): sigma[g][x] for g in groupoid.arrows
               for x in fibres[groupoid.src[g]]}


def enumerate_right_actions(groupoid: FiniteGroupoid, carrier, moment):
    """Yield every right-action table of the groupoid on (carrier, moment)."""
    fibres = {x: sorted_idents(p for p in carrier if moment[p] == x)
              for x in groupoid.objects}
    for sigma in _action_families(groupoid, fibres, covariant=False):
        yield {(x, g): sigma[g][x] for g in groupoid.arrows
               for x in fibres[groupoid.tgt[g]]}


def _left_pre_principal_table(act, carrier, proj):
    """Bijectivity of (g, x) ↦ (g·x, x) onto same-proj-fibre pairs, table-level."""
    fibre_sizes = {}
    for x in carrier:
        fibre_sizes[proj[x]] = fibre_sizes.get(proj[x], 0) + 1
    needed = sum(n * n for n in fibre_sizes.values())
    if len(act) != needed:
        return False
    image = {(y, x) for (g, x), y in act.items()}
    return len(image) == len(act)


def enumerate_bibundles(left_groupoid: FiniteGroupoid,
                        right_groupoid: FiniteGroupoid,
                        max_carrier: int,
                        biprincipal_only: bool = False,
                        validate: bool = False,
                        stats: dict = None):
    """Yield every (G,H)-bibundle with carrier {0..k-1}, k ≤ max_carrier.

    Moment-map pairs are enumerated up to simultaneous carrier relabeling (the
    per-point (l, r) sequence is kept sorted; any bibundle is isomorphic to one
    of that shape).  With ``biprincipal_only`` the search prunes moment pairs
    with non-surjective moments and left actions whose underlying bundle is not
    pre-principal, and yields only biprincipal bibundles.
    """
    value_pairs = sorted(
        ((a, b) for a in left_groupoid.objects for b in right_groupoid.objects),
        key=ident_key)
    make_left = LeftAction.from_tables if validate else (
        lambda G, c, m, a: LeftAction(G, tuple(c), dict(m), dict(a)))
    make_right = RightAction.from_tables if validate else (
        lambda G, c, m, a: RightAction(G, tuple(c), dict(m), dict(a)))
    make_bibundle = Bibundle.from_actions if validate else (
        lambda l, r: Bibundle(left=l, right=r))

    for size in range(max_carrier + 1):
        carrier = tuple(range(size))
        for assignment in itertools.combinations_with_replacement(value_pairs, size):
            lmoment = {i: assignment[i][0] for i in carrier}
            rmoment = {i: assignment[i][1] for i in carrier}
            if biprincipal_only:
                if set(lmoment.values()) != set(left_groupoid.objects):
                    continue
                if set(rmoment.values()) != set(right_groupoid.objects):
                    continue
            for left_act in enumerate_left_actions(left_groupoid, carrier, lmoment):
                # the right moment must be invariant under the left action
                if any(rmoment[y] != rmoment[x] for (g, x), y in left_act.items()):
                    continue
                if biprincipal_only and not _left_pre_principal_table(
                        left_act, carrier, rmoment):
                    continue
                for right_act in enumerate_right_actions(right_groupoid, carrier,
                                                         rmoment):
                    if any(lmoment[y] != lmoment[x]
                           for (x, h), y in right_act.items()):
                        continue
                    if any(right_act[(gx, h)] != left_act[(g, right_act[(x, h)])]
                           for (g, x), gx in left_act.items()
                           for h in right_groupoid.arrows
                           if rmoment[x] == right_groupoid.tgt[h]):
                        continue
                    bib = make_bibundle(
                        make_left(left_groupoid, carrier, lmoment, left_act),
                        make_right(right_groupoid, carrier, rmoment, right_act))
                    if stats is not None:
                        stats["candidates"] = stats.get("candidates", 0) + 1
                    if biprincipal_only and not bib.principality().biprincipal:
                        continue
                    yield bib


def find_biequivariant_iso(source: Bibundle, target: Bibundle):
    """Search for a biequivariant bijection; returns a mapping dict or None.

    Backtracking over moment-compatible point images with propagation through
    both action tables.
    """
    if (source.left_groupoid != target.left_groupoid
            or source.right_groupoid != target.right_groupoid):
        return None
    if len(source.carrier) != len(target.carrier):
        return None
    smoments = sorted((source.left_moment[x], source.right_moment[x])
                      for x in source.carrier)
    tmoments = sorted((target.left_moment[x], target.right_moment[x])
                      for x in target.carrier)
    if smoments != tmoments:
        return None

    s_left, s_right = source.left.act, source.right.act
    t_left, t_right = target.left.act, target.right.act
    gl, gr = source.left_groupoid, source.right_groupoid

    def close(mapping, used, x, y):
        """Force φ(x) = y and propagate through both actions."""
        stack = [(x, y)]
        while stack:
            x, y = stack.pop()
            if x in mapping:
                if mapping[x] != y:
                    return False
                continue
            if y in used:
                return False
            if (source.left_moment[x] != target.left_moment[y]
                    or source.right_moment[x] != target.right_moment[y]):
                return False
            mapping[x] = y
            used.add(y)
            for g in gl.arrows:
                if (g, x) in s_left:
                    stack.append((s_left[(g, x)], t_left[(g, y)]))
            for h in gr.arrows:
                if (x, h) in s_right:
                    stack.append((s_right[(x, h)], t_right[(y, h)]))
        return True

    def extend(mapping, used):
        remaining = [x for x in source.carrier if x not in mapping]
        if not remaining:
            return dict(mapping)
        x = remaining[0]
        for y in target.carrier:
            if y in used:
                continue
            trial, trial_used = dict(mapping), set(used)
            if close(trial, trial_used, x, y):
                found = extend(trial, trial_used)
                if found is not None:
                    return found
        return None

    return extend({}, set())
