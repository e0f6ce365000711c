#!/usr/bin/env python3
"""Writes clashNN.n3s (fact plus its negative surface, with distractors) and
consistent/clashNN.n3s (the same file without the negative surface)."""

import pathlib
import random

HEADER = """@prefix : <http://example.org/ns#> .
@prefix log: <http://www.w3.org/2000/10/swap/log#> .

"""
NAMES = ["alice", "bob", "carol", "dave", "erin", "frank", "grace", "heidi"]
PREDS = ["knows", "likes", "owns", "visits", "trusts"]
THINGS = ["Book", "Car", "Paris", "Rome", "Piano", "Garden"]


def triple(rng, k):
    return f":{rng.choice(NAMES)}{k} :{rng.choice(PREDS)} :{rng.choice(THINGS)}"


def main():
    here = pathlib.Path(__file__).parent
    (here / "consistent").mkdir(exist_ok=True)
    rng = random.Random(2026)
    for n in range(1, 21):
        facts = [triple(rng, k) for k in range(rng.randint(2, 5))]
        clash = f":s{n} :p{n} :o{n}"
        rule_body, rule_head = rng.choice(PREDS), rng.choice(PREDS)
        rule = (f"(_:X) log:onNegativeSurface {{\n    _:X :{rule_body} :{rng.choice(THINGS)} .\n"
                f"    () log:onNegativeSurface {{ _:X :{rule_head}Derived :Something }} .\n}} .\n")
        denial = f"() log:onNegativeSurface {{ {clash} }} .\n"
        guard = f"(_:Y) log:onNegativeSurface {{ _:Y :p{n} :never{n} }} .\n"
        body = "".join(f"{t} .\n" for t in facts) + f"{clash} .\n\n" + rule + guard
        (here / f"clash{n:02d}.n3s").write_text(HEADER + body + denial)
        (here / "consistent" / f"clash{n:02d}.n3s").write_text(HEADER + body)


if __name__ == "__main__":
    main()
