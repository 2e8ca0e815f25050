"""
Traces of complex conjugation on real elliptic surfaces
=======================================================

Each named case is a configuration of real singular fibres.  The Euler
characteristic of the real locus and the trace on the fibre classes give
the trace on the complementary piece, whose negative is the trace of
complex conjugation on the mod-l local system.
"""

from oddrep.surface import (CASE_N_MOD_8, CASES, I_star, RealComponents, builtin_case,
                            case_6O_config, surface_report)

# the five cases, with a few extra I_0* fibres thrown in
for case in CASES:
    r = surface_report(builtin_case(case, a1=2, a2=1))
    print(f"case {case:8s} label {CASE_N_MOD_8[case]:>6s}   "
          f"chi = {r.chi_real:4d}  tr_W = {r.tr_W:4d}  tr_V = {r.tr_V:3d}  tr_c = {r.tr_c_mod_ell:3d}")

# I_n* fibres contribute the same amount to chi and to tr_W, so adding one
# changes nothing
base = builtin_case("3_Omega")
for n in (0, 3, 7):
    for rc in RealComponents:
        print(f"+ I{n}*({rc.value}): tr_V = {surface_report(base.with_real(I_star(n, rc))).tr_V}")

# the rank of the local system grows with the number of I_0* points
for n in range(4):
    print(f"n = {n}: rank {surface_report(case_6O_config(n)).rank_N}")
