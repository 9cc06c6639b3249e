"""Deterministic SVG drawings of planar monoids.

One lattice unit is ``PITCH`` pixels; members are filled dots, irreducible
elements get an extra ring, and cone rays are drawn from the origin.
"""

from __future__ import annotations

from pathlib import Path

PITCH = 32
MARGIN = 36
DOT = 4
RING = 8


def _xy(p, bound):
    return MARGIN + p[0] * PITCH, MARGIN + (bound - p[1]) * PITCH


def _ray_end(ray, bound):
    t = min(bound / c for c in ray if c)
    return ray[0] * t, ray[1] * t


def render_svg(members, bound, irreducible=(), rays=(), title=None) -> str:
    size = 2 * MARGIN + bound * PITCH
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    if title:
        out.append(f"<title>{title}</title>")
    grid = []
    for i in range(bound + 1):
        x0, y0 = _xy((i, 0), bound)
        x1, y1 = _xy((i, bound), bound)
        grid.append(f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}"/>')
        x0, y0 = _xy((0, i), bound)
        x1, y1 = _xy((bound, i), bound)
        grid.append(f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}"/>')
    out.append('<g stroke="#999" stroke-width="0.5" stroke-dasharray="2,3">' + "".join(grid) + "</g>")
    ox, oy = _xy((0, 0), bound)
    end = MARGIN + bound * PITCH + 12
    out.append(
        f'<g stroke="black" stroke-width="1"><line x1="{ox - 8}" y1="{oy}" x2="{end}" y2="{oy}"/>'
        f'<line x1="{ox}" y1="{oy + 8}" x2="{ox}" y2="{MARGIN - 12}"/></g>'
    )
    out.append(
        f'<g font-family="sans-serif" font-size="12"><text x="{end + 2}" y="{oy + 4}">x</text>'
        f'<text x="{ox - 4}" y="{MARGIN - 16}">y</text><text x="{ox - 16}" y="{oy + 16}">O</text></g>'
    )
    if rays:
        parts = []
        for ray in rays:
            ex, ey = _ray_end(ray, bound)
            x1 = MARGIN + ex * PITCH
            y1 = MARGIN + (bound - ey) * PITCH
            parts.append(f'<line x1="{ox}" y1="{oy}" x2="{x1:.2f}" y2="{y1:.2f}"/>')
        out.append('<g stroke="#1f5fbf" stroke-width="1.5">' + "".join(parts) + "</g>")
    dots = [
        f'<circle cx="{x}" cy="{y}" r="{DOT}"/>'
        for x, y in (_xy(p, bound) for p in sorted(members) if max(p) <= bound)
    ]
    out.append('<g fill="black">' + "".join(dots) + "</g>")
    if irreducible:
        rings = [f'<circle cx="{x}" cy="{y}" r="{RING}"/>' for x, y in (_xy(p, bound) for p in sorted(irreducible))]
        out.append('<g fill="none" stroke="#c0392b" stroke-width="1.5">' + "".join(rings) + "</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def plot_monoid(M, bound, path=None, rings=True, rays=True, title=None) -> str:
    """Draw an :class:`AffineMonoid` (or a list of generating points) in the
    box ``[0, bound]^2``; writes to ``path`` when given and returns the SVG."""
    from .monoid import AffineMonoid, cone_of, irreducibles

    if not isinstance(M, AffineMonoid):
        M = AffineMonoid(2, finite_gens=tuple(tuple(p) for p in M))
    if M.dimension != 2:
        raise ValueError("only planar monoids can be plotted")
    members = M.elements_in_box(bound)
    irr = irreducibles(M, bound) if rings and bound >= 1 else []
    gens = M.generators_in_box(bound)
    cone_rays = cone_of(gens).rays if rays and gens else ()
    svg = render_svg(members, bound, irr, cone_rays, title)
    if path is not None:
        Path(path).write_text(svg)
    return svg
