"""Check every claim on all labelled graphs with up to five agents.

Takes roughly a minute. Universal claims report their counterexample count;
existence claims report a witness.
"""

import time

from socialcloud import PropertyId, verify

for prop in PropertyId:
    start = time.perf_counter()
    rep = verify(prop, 5, max_examples=1)
    status = "holds" if rep.passed else "FAILS"
    extra = ""
    if rep.witnesses:
        w = rep.witnesses[0]
        extra = f"witness n={w.n} links={list(w.links)} {dict(w.roles)}"
    elif rep.counterexamples:
        x = rep.counterexamples[0]
        extra = f"e.g. n={x.n} links={list(x.links)} {dict(x.roles)} {x.note}"
    print(f"{prop.name:<36}{status:<6}{rep.instances:>8} checks "
          f"{rep.counterexample_count:>5} bad  {time.perf_counter() - start:5.1f}s  {extra}")
