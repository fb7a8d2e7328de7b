"""Static SVG drawing of an instance and an optional chosen subset."""
from xml.sax.saxutils import quoteattr

from .geometry import Circle, Disk, Polyline, Segment, bbox

STROKE = 1.0


def _extent(inst):
    xs = [inst.s.x, inst.t.x]
    ys = [inst.s.y, inst.t.y]
    for ob in inst.obstacles:
        x0, y0, x1, y1 = bbox(ob.shape)
        xs += [x0, x1]
        ys += [y0, y1]
    x0, x1, y0, y1 = float(min(xs)), float(max(xs)), float(min(ys)), float(max(ys))
    w, h = max(x1 - x0, 1e-9), max(y1 - y0, 1e-9)
    mx, my = 0.05 * w, 0.05 * h
    return x0 - mx, y0 - my, w + 2 * mx, h + 2 * my


def render_svg(inst, chosen=(), width=800) -> str:
    """SVG text: one element per obstacle, chosen ones with doubled stroke."""
    chosen = set(chosen)
    vx, vy, vw, vh = _extent(inst)
    scale = width / vw
    sw = STROKE / scale

    def fy(y):
        # flip so that y grows upwards
        return 2 * vy + vh - float(y)

    def pts(seq):
        return " ".join(f"{float(q[0]):.6g},{fy(q[1]):.6g}" for q in seq)

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
           f'height="{vh * scale:.6g}" viewBox="{vx:.6g} {vy:.6g} {vw:.6g} {vh:.6g}">']
    for ob in inst.obstacles:
        hit = ob.id in chosen
        color = "#c0392b" if hit else "#34495e"
        style = (f'stroke={quoteattr(color)} stroke-width="{(2 if hit else 1) * sw:.6g}" '
                 f'data-id="{ob.id}"')
        sh = ob.shape
        if isinstance(sh, Segment):
            out.append(f'<line x1="{float(sh.a.x):.6g}" y1="{fy(sh.a.y):.6g}" '
                       f'x2="{float(sh.b.x):.6g}" y2="{fy(sh.b.y):.6g}" {style}/>')
        elif isinstance(sh, Polyline):
            out.append(f'<polyline points="{pts(sh.points)}" fill="none" {style}/>')
        elif isinstance(sh, (Circle, Disk)):
            fill = "#95a5a6" if isinstance(sh, Disk) else "none"
            out.append(f'<circle cx="{float(sh.center.x):.6g}" cy="{fy(sh.center.y):.6g}" '
                       f'r="{float(sh.radius):.6g}" fill="{fill}" fill-opacity="0.4" {style}/>')
    r = 3 * sw
    for name, p in (("s", inst.s), ("t", inst.t)):
        out.append(f'<circle class="terminal" cx="{float(p.x):.6g}" cy="{fy(p.y):.6g}" '
                   f'r="{r:.6g}" fill="#27ae60"><title>{name}</title></circle>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
