"""SVG timeline rendering of a schedule.

One horizontal lane per dancer, x position equal to the linearization index.
Forward-facing travel is drawn solid, backward-facing travel dashed; colors
distinguish dancers.  Output is plain SVG 1.1 text, byte-identical across
runs for identical inputs so it can be golden-file tested.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import ClassicalPass, TwistBar, VirtualPass
from .scheduler import Facing, Schedule

__all__ = ["TimelineStyle", "svg_timeline"]

_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b")
_DASH = "6,4"  # backward-facing stroke pattern; forward is solid


@dataclass(frozen=True)
class TimelineStyle:
    lane_height: int = 44
    step_width: int = 46
    margin: int = 16
    label_width: int = 72
    font_size: int = 12
    dancer_palette: tuple[str, ...] = _PALETTE


def _glyph(event) -> str:
    if isinstance(event, ClassicalPass):
        return f"{event.strand.value}{event.crossing_id}"
    if isinstance(event, VirtualPass):
        return f"V{event.crossing_id}"
    if isinstance(event, TwistBar):
        return f"T{event.bar_id}"
    raise TypeError(f"not an event: {event!r}")


def svg_timeline(schedule: Schedule, style: TimelineStyle = TimelineStyle()) -> str:
    """Render a schedule as an SVG timeline string."""
    if schedule.plan is not None:
        lanes = schedule.plan.n
        events = schedule.plan.diagram.events
    elif schedule.steps:
        lanes = max(s.dancer for s in schedule.steps) + 1
        events = ()
    else:
        lanes, events = 0, ()

    total = len(schedule.steps)
    width = 2 * style.margin + style.label_width + max(total, 1) * style.step_width
    height = 2 * style.margin + lanes * style.lane_height
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
    ]

    def x_at(t: int) -> int:
        return style.margin + style.label_width + t * style.step_width + style.step_width // 2

    def y_at(d: int) -> int:
        return style.margin + d * style.lane_height + style.lane_height // 2

    starts: list[Facing] = []
    if schedule.plan is not None:
        if schedule.plan.facings is not None:
            starts = list(schedule.plan.facings)
        else:
            starts = [Facing.FORWARD] * lanes

    for d in range(lanes):
        color = style.dancer_palette[d % len(style.dancer_palette)]
        cy = y_at(d)
        out.append(
            f'<text x="{style.margin}" y="{cy + style.font_size // 2}" '
            f'font-family="monospace" font-size="{style.font_size}" '
            f'fill="{color}">dancer {d}</text>'
        )
        mine = [(t, s) for t, s in enumerate(schedule.steps) if s.dancer == d]
        facing_before = starts[d] if starts else Facing.FORWARD
        prev_x = style.margin + style.label_width
        for t, step in mine:
            x = x_at(t)
            dash = f' stroke-dasharray="{_DASH}"' if facing_before is Facing.BACKWARD else ""
            out.append(
                f'<line x1="{prev_x}" y1="{cy}" x2="{x}" y2="{cy}" '
                f'stroke="{color}" stroke-width="2"{dash}/>'
            )
            facing_before = step.facing_after
            prev_x = x
        for t, step in mine:
            x = x_at(t)
            label = _glyph(events[step.event_index]) if events else str(step.event_index)
            out.append(f'<circle cx="{x}" cy="{cy}" r="4" fill="{color}"/>')
            out.append(
                f'<text x="{x}" y="{cy - 8}" text-anchor="middle" '
                f'font-family="monospace" font-size="{style.font_size}" '
                f'fill="#333333">{label}</text>'
            )

    out.append("</svg>")
    return "\n".join(out) + "\n"
