"""Seeded corpora and the validation presets.

The generator is reproducible across platforms: the same parameters and
seed always give the same instance text.
"""

from conalign import GenParams
from conalign.generate import generate_text
from conalign.validate import PRESETS

params = GenParams(n1=6, n2=6, p1=0.4, p2=0.4, m1_cap=2, m2_cap=1, seed=1)
text = generate_text(params)
assert text == generate_text(params)
print(text)

# Small runs of every preset; the acceptance suite runs them at full size.
for name, (check, _) in PRESETS.items():
    print(check(20, seed=5).summary().replace("PASS", f"PASS [{name}]"))
