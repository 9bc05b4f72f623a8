#!/usr/bin/env python3
"""
Halting mass, canonical renaming, and machine combination
=========================================================

A finite machine table carries an exact halting mass: the sum of 2**-|p|
over its programs.  Three constructions ride on it here.  First, the partial
sums of that mass, stage by stage.  Second, a canonical renaming that maps
each program to the least word (in length-then-lexicographic order) still
unnamed when the mass first covers the output's own binary value -- two
programs with the same output always collapse to the same name, and the name
is never harder to describe than the original output.  Third, merging
several machines into one with an i-bit header per machine.

Run me top to bottom:  python3 demos/03_halting_mass_and_renaming.py
"""

from omegalib.machines import (MachineTable, chaitin_transform,
                               chaitin_transform_table, combine_universal,
                               complexity, omega_approx)
from omegalib.mltest import (PrefixSetStage, complexity_test_stage,
                             compression_requests)
from omegalib.codespace import allocate_all

# ---------------------------------------------------------------------------
# 1. Partial halting mass, one graph entry at a time.
# ---------------------------------------------------------------------------

u = MachineTable((("0", "1"), ("10", "0"), ("110", "11")))
for k in range(len(u) + 1):
    print(f"mass after {k} entries: {omega_approx(u, k)}")
print()

# ---------------------------------------------------------------------------
# 2. The canonical renaming.  Both outputs below have binary values reached
#    by the very first mass stage, and the only output listed by then is
#    '1', so both programs rename to the least word outside {'1'}: the empty
#    word.  Distinct names are never promised -- cheap ones are: the new
#    name never costs more to describe than the old output did.
# ---------------------------------------------------------------------------

v = MachineTable((("0", "1"), ("10", "0")))
for program, _ in v.entries:
    image = chaitin_transform(v, program)
    print(f"program {program!r} (output {v.lookup(program)!r}) "
          f"renames to {image!r}")

graph = chaitin_transform_table(v)
print("renaming graph:", graph.entries)
for program, image in graph.entries:
    y = v.lookup(program)
    print(f"  describing {image!r} costs {complexity(graph, image)}; "
          f"describing {y!r} on the original costs {complexity(v, y)}")
print()

# ---------------------------------------------------------------------------
# 3. Combining machines.  Machine i keeps all its behaviour behind the
#    header 0^i 1, so every output gets at most i+1 bits more expensive.
# ---------------------------------------------------------------------------

first = MachineTable((("0", "1"),))
second = MachineTable((("1", "0"),))
combined = combine_universal([first, second])
print("combined table:", combined.entries)
print("cost of '1' on machine 1:", complexity(first, "1"),
      "-> on the combined machine:", complexity(combined, "1"))
print()

# ---------------------------------------------------------------------------
# 4. Reading compressibility off a table.  An output qualifies at margin m
#    when some listed program undercuts its length by more than m bits; the
#    qualifying outputs, pruned to an antichain, always fit in mass 2**-m.
# ---------------------------------------------------------------------------

w = MachineTable((("0", "1111"), ("10", "1010101010")))
for margin in (0, 1, 3, 8):
    print(f"margin {margin}: compressible outputs "
          f"{sorted(complexity_test_stage(w, margin, len(w)))}")
print()

# ---------------------------------------------------------------------------
# 5. The other direction: promising compression.  Stages at levels n*n whose
#    mass stays within 2**-(n*n) can demand codewords n bits shorter than
#    every member word, and the allocator always has room for all of them.
# ---------------------------------------------------------------------------

stages = [PrefixSetStage(4, ("110011",)), PrefixSetStage(9, ("010101010",))]
requests = compression_requests(stages)
print("compression requests:", requests)
for codeword, word in allocate_all(requests):
    print(f"  {word!r} ({len(word)} bits) now reachable from "
          f"{codeword!r} ({len(codeword)} bits)")

# The command-line equivalent of step 1:
#
#   printf '0\t1\n10\t0\n110\t11\n' | omegalib omega -
