"""
Dark channel prior baseline
===========================

In haze-free outdoor images most patches contain some pixel that is dark
in at least one colour channel. Haze lifts those minima toward the
airlight, so the dark channel of a hazy image estimates 1 - T. The
estimate is refined with a guided filter and the scene radiance is
recovered by inverting the scattering model.
"""
from pathlib import Path

import numpy as np

from dehazegan.data import procedural_rgbd, synthesize_corpus, write_image
from dehazegan.dcp import dark_channel, dcp_dehaze
from dehazegan.haze import HazeSynthesisConfig
from dehazegan.metrics import psnr, ssim

out = Path(__file__).parent / "output" / "dcp"
out.mkdir(parents=True, exist_ok=True)

pairs = synthesize_corpus(procedural_rgbd(20, 64, seed=9), HazeSynthesisConfig(target_size=(64, 64)), seed=9)

# The prior holds on the clear scenes and fails on the hazy ones.
p = pairs[0]
print("median dark channel: clear %.3f, hazy %.3f" % (np.median(dark_channel(p.clear)),
                                                      np.median(dark_channel(p.hazy))))

rows = []
for p in pairs:
    j, t, a = dcp_dehaze(p.hazy)
    rows.append((psnr(p.hazy, p.clear), psnr(j, p.clear), ssim(p.hazy, p.clear), ssim(j, p.clear)))
    write_image(out / f"{p.id}_hazy.png", p.hazy)
    write_image(out / f"{p.id}_dcp.png", j)

rows = np.array(rows)
print("            hazy     DCP")
print("PSNR     %7.2f %7.2f" % (rows[:, 0].mean(), rows[:, 1].mean()))
print("SSIM     %7.3f %7.3f" % (rows[:, 2].mean(), rows[:, 3].mean()))
print("estimated airlight of the last scene:", np.round(a, 3))
