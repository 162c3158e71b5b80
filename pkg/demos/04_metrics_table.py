"""
PSNR, SSIM and the combined score
=================================

PSNR rewards pixel fidelity, SSIM structural similarity; neither alone
tracks perceived dehazing quality. The score combines them as
0.05 * PSNR + 1.0 * SSIM and is also the model-selection criterion during
training. Applied to the published comparison numbers it reproduces the
printed scores.
"""
import numpy as np

from dehazegan.metrics import EvalRecord, format_table, psnr, score, ssim, summarize

published = {
    "custom / He":     (13.89, 0.659),
    "custom / Meng":   (14.48, 0.651),
    "custom / Berman": (12.48, 0.649),
    "custom / GAN":    (20.32, 0.759),
    "SOTS / He":       (16.97, 0.829),
    "SOTS / Meng":     (15.59, 0.809),
    "SOTS / Berman":   (18.11, 0.839),
    "SOTS / GAN":      (18.75, 0.790),
}
for name, (p, s) in published.items():
    print("%-16s PSNR %5.2f  SSIM %.3f  score %.3f" % (name, p, s, score(p, s)))

# A quick feel for the two metrics under additive noise.
rng = np.random.default_rng(0)
clean = rng.random((64, 64, 3))
for sigma in (0.01, 0.05, 0.1, 0.2):
    noisy = np.clip(clean + sigma * rng.standard_normal(clean.shape), 0, 1)
    print("sigma %.2f: PSNR %6.2f dB  SSIM %.3f" % (sigma, psnr(noisy, clean), ssim(noisy, clean)))

# Identical images have infinite PSNR (and score); the PSNR mean skips them.
recs = [EvalRecord("same", psnr(clean, clean), ssim(clean, clean), score(psnr(clean, clean), 1.0)),
        EvalRecord("noisy", 20.0, 0.8, score(20.0, 0.8))]
summary = summarize(recs)
print("\n" + format_table(summary, "example"))
print("infinite PSNRs excluded from the PSNR mean:", summary.n_infinite_psnr)
