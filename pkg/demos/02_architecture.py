"""
Inspecting the generator and discriminator
==========================================

The generator is a 56-layer fully-convolutional DenseNet ("Tiramisu"):
an input convolution, five dense blocks of four layers on the way down,
a fifteen-layer bottleneck, and five dense blocks on the way up, with
growth rate 12. The discriminator is a patch classifier whose output
cells each see a 70x70 window of the input pair.

Everything below is computed statically from the layer graph.
"""
from dehazegan.networks import (DiscriminatorConfig, GeneratorConfig, analyze,
                                build_patch_discriminator, build_tiramisu)

gen = analyze(build_tiramisu())
print(gen.dump().splitlines()[-1])
print("conv layers by role:", gen.role_counts)
print("spatial trace:", " -> ".join(map(str, gen.spatial_trace)))

# Channel bookkeeping of each dense block: out = in + layers * growth.
print("\n%-12s %6s %6s %6s" % ("block", "in", "layers", "out"))
for b in gen.blocks:
    print("%-12s %6d %6d %6d" % (b.name, b.in_channels, b.layers, b.out_channels))

# The patch discriminator on a 256x256 [hazy, candidate] stack.
disc = analyze(build_patch_discriminator())
print("\n" + disc.dump())

# Without padding, a single 70x70 window collapses to one output cell.
solo = analyze(build_patch_discriminator(DiscriminatorConfig(padding=0, input_size=70)))
print("\nunpadded 70x70 input ->", solo.output_shape)

# Smaller variants are useful on a laptop; the size must be divisible by 2^blocks.
toy = analyze(build_tiramisu(GeneratorConfig(growth_rate=4, db_layers=(2, 2), bottleneck_layers=4,
                                             input_size=64)))
print("toy generator:", toy.dump().splitlines()[-1])
