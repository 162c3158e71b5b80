"""
Training a toy dehazing GAN
===========================

Each iteration updates the generator on

    2 * adversarial + 100 * L1 + 10 * perceptual

and then the discriminator on its real-vs-generated objective. A model
is checkpointed whenever the validation score strictly improves.

At desk scale a small generator overfits four 64x64 pairs in a few
minutes of CPU time; the full 256x256 model uses the same code.
"""
from pathlib import Path

import numpy as np

from dehazegan.data import augment_hflip, procedural_rgbd, synthesize_corpus
from dehazegan.haze import HazeSynthesisConfig
from dehazegan.networks import GeneratorConfig
from dehazegan.trainer import TrainConfig, Trainer, load_generator, predict

out = Path(__file__).parent / "output" / "training"

pairs = synthesize_corpus(procedural_rgbd(5, 64, seed=3), HazeSynthesisConfig(target_size=(64, 64)), seed=4)
train, val = augment_hflip(pairs[:4]), pairs[4:]

config = TrainConfig(generator=GeneratorConfig(growth_rate=4, db_layers=(2, 2), bottleneck_layers=4,
                                               input_size=64),
                     epochs=5, batch_size=1, seed=0)
trainer = Trainer(config)


def mean_l1(net, samples):
    return np.mean([np.abs(predict(net, s.hazy) - s.clear).mean() for s in samples])


print("L1 before training: %.4f" % mean_l1(trainer.G, pairs[:4]))
result = trainer.fit(train, val, out)
print("L1 after %d iterations: %.4f" % (trainer.iteration, mean_l1(trainer.G, pairs[:4])))
print("validation scores:", ["%.4f" % s for s in result.val_scores])

# Every line of the log is "iter,l_total,l_gan,l_l1,l_vgg,neg_l_d".
for line in result.log[1:4]:
    print(line)

# The best checkpoint rebuilds its own generator.
best = load_generator(result.best_path)
print("reloaded", result.best_path.name, "-> L1 %.4f" % mean_l1(best, pairs[:4]))
