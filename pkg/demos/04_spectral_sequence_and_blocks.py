"""Low-degree spectral-sequence data for a two-point configuration, and
the block decomposition of a family of evaluation modules: linkage from
the Ext^1 table vs the spectral-character fibers."""

from superext.superlie import build_osp
from superext import theorems

g = build_osp(1)

print("== main-theorem instances over C[t]/(t^2 (t-1)^2) ==")
for lams in [(2, 0), (1, 1), (2, 2)]:
    rep, pred, per_point, case = theorems.thm_main_instance(g, lams)
    print("local weights %s (case %s): dim H^1 = %d, predicted %d, "
          "per-point kernels %s, reconstruction ok: %s"
          % (lams, case,
             rep.h1_direct["even"] + rep.h1_direct["odd"], pred,
             rep.group_kernels, rep.reconstruction_check))

print()
print("== block decomposition of {ev0 V(a) (x) ev1 V(b)} ==")
report, table = theorems.verify_block_decomposition(g, lams=(0, 1, 2))
print("Ext^1 table edges (member i, member j, dim):")
for (i, j), d in sorted(table.items()):
    if d and i < j:
        print("  %d -- %d : %d" % (i, j, d))
print("linkage components:   ", report["computed"]["partition"])
print("character fibers:     ", report["expected"]["partition"])
print("agree:", report["pass"])
