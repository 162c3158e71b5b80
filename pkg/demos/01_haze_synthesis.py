"""
Synthesizing hazy images from RGB-D scenes
==========================================

Haze is rendered with the atmospheric scattering model: every pixel keeps a
fraction T of the scene radiance and fills the rest with airlight A.
Transmission comes from depth, here the linear form used for the training
corpus, T = s * (1 - d_norm) with a per-image haze scale s drawn from
[0.2, 0.4] -- very dense haze.
"""
from pathlib import Path

import numpy as np

from dehazegan.data import procedural_rgbd, save_paired, synthesize_corpus
from dehazegan.haze import (Exponential, HazeSynthesisConfig, LinearScaled, apply_haze,
                            invert_haze, transmission_from_depth)

out = Path(__file__).parent / "output" / "haze"

# A handful of procedural scenes stand in for a real RGB-D corpus: a ground
# plane receding to the horizon with boxes nearer to the camera.
scenes = procedural_rgbd(4, size=96, seed=0)
print("scene depth range: %.2f .. %.2f" % (scenes[0].depth.min(), scenes[0].depth.max()))

# Two transmission models on the same depth map.
depth = scenes[0].depth
t_exp = transmission_from_depth(depth, Exponential(beta=0.3))
t_lin = transmission_from_depth(depth, LinearScaled(scale=0.3))
print("exponential T: %.3f .. %.3f" % (t_exp.min(), t_exp.max()))
print("linear T:      %.3f .. %.3f" % (t_lin.min(), t_lin.max()))

# With T known the model inverts exactly wherever T is above the 0.1 floor;
# in the far field (T < 0.1) the floor trades exactness for stability.
hazy = apply_haze(scenes[0].image.astype(np.float64), t_exp, airlight=1.0)
back = invert_haze(hazy, t_exp, airlight=1.0)
err = np.abs(back - scenes[0].image).max(axis=2)
print("round-trip error where T >= 0.1: %.1e" % err[t_exp >= 0.1].max())
print("round-trip error where T <  0.1: %.1e" % err[t_exp < 0.1].max())

# The training protocol: resize to a fixed square, draw s, render.
pairs = synthesize_corpus(scenes, HazeSynthesisConfig(target_size=(96, 96)), seed=1)
for p in pairs:
    print("%s  s=%.3f  mean clear %.3f  mean hazy %.3f" % (p.id, p.s_used, p.clear.mean(), p.hazy.mean()))

save_paired(pairs, out)
print("wrote", out)
