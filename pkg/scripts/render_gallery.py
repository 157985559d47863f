"""Render a gallery of generators and projectors to SVG files.

Usage: python3 scripts/render_gallery.py [--out DIR] [--tikz]
"""

import argparse
from pathlib import Path

from atlq import (
    crossing,
    ess_generator,
    extremal,
    gen_cap,
    gen_cup,
    gen_d,
    gen_u,
    highest_weight,
    jones_wenzl,
)
from atlq.render import render_svg, render_tikz


def gallery():
    return {
        "rotation": gen_d(2, 1),
        "turnback_interior": gen_u(3, 1),
        "turnback_wrap": gen_u(3, 0),
        "cap": gen_cap(3, 1),
        "cup": gen_cup(1, 0),
        "crossing": crossing(2, 1),
        "circle_two_strands": ess_generator(2),
        "extremal_2": extremal(2),
        "extremal_3": extremal(3),
        "jones_wenzl_3": jones_wenzl(3),
        "highest_2": highest_weight(2),
    }


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("--out", default="gallery")
    parser.add_argument("--tikz", action="store_true",
                        help="emit .tex sources instead of SVG")
    args = parser.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    render, suffix = (render_tikz, ".tex") if args.tikz else (render_svg, ".svg")
    for name, morphism in gallery().items():
        target = out / f"{name}{suffix}"
        target.write_text(render(morphism))
        print(f"wrote {target}")


if __name__ == "__main__":
    main()
