"""
Exhaustive sweeps
=================

Every connected triangle-free graph up to eight vertices, checked against
its bound, with the equality graphs compared to the extremal family.
"""

from misbounds.verify import format_summary, generated_universe, run_check

reports = [
    run_check("THM1", *generated_universe(7)),
    run_check("THM4", *generated_universe(8, ["connected", "triangle-free"])),
    run_check("THMB_PROPS", *generated_universe(6)),
    run_check("THMD", *generated_universe(8, ["triangle-free"], min_n=4)),
]
print(format_summary(reports))

# the equality graphs themselves, as graph6
thm4 = reports[1]
print("graphs on the connected triangle-free bound:")
print(" ".join(thm4.equality_graphs))
