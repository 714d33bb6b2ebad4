#!/usr/bin/env python3
"""Run the band-edge / window-parameter sweep and print a match table."""

from prqmf.sweep import DB_TOL, REFERENCES, best_matches, run_sweep


def main() -> None:
    results = run_sweep()
    best = best_matches(results)
    for ref in REFERENCES:
        print(f"== {ref.name}  target ({ref.lowpass_db}, {ref.highpass_db}) dB ==")
        for p in results[ref.name]:
            mark = "*" if p.within() else " "
            param = "-" if p.param is None else f"{p.param:g}"
            print(
                f" {mark} center={p.center:<7g} delta={p.delta:<6g} param={param:<4} "
                f"low={p.lowpass_db:7.3f} high={p.highpass_db:7.3f} "
                f"worst_err={p.worst_err:6.3f}"
            )
        b = best[ref.name]
        verdict = "within" if b.within() else "OUTSIDE"
        print(
            f" best: center={b.center:g} delta={b.delta:g} param={b.param} -> "
            f"({b.lowpass_db:.3f}, {b.highpass_db:.3f}), "
            f"worst_err={b.worst_err:.3f} dB ({verdict} {DB_TOL} dB)\n"
        )


if __name__ == "__main__":
    main()
