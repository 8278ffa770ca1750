#!/usr/bin/env python3
"""Why concatenating automata needs normalization.

Run from the repository root:

    python3 demos/kleene_walkthrough.py

Gluing the accepting state of an a-loop onto the initial state of a b-loop
produces one state carrying both loops, which recognizes every mix of a's
and b's.  Normalizing first (cofibrant replacement, merge the initial
states, split the relational edges) separates the entry and exit roles of
each state, after which the same gluing is safe.
"""

from cofib.automata import (
    cofibrant_replacement,
    check_conditions,
    language_upto,
    normalize,
    to_json_dict,
)
from cofib.regex import compile_regex, kleene_fuzz, parse, regex_lang_upto
from cofib.samples import loop_a, loop_ab


def words(ws):
    return sorted("".join(w) for w in ws) or ["(none)"]


print("The naive glue: one state with an a-loop and a b-loop")
naive = loop_ab()
print("  words up to length 2:", words(language_upto(naive, 2)))
print("  'ba' accepted:", ("b", "a") in language_upto(naive, 2))
print()

print("What normalization does to a single loop")
A = loop_a()
res = cofibrant_replacement(A)
print("  replacement states:", sorted(res.replacement.states))
print("  conditions (entries only enter, exits only exit):",
      check_conditions(res.replacement)[0])
N = normalize(A).automaton
print("  normalized:", to_json_dict(N))
print()

print("The compiled concatenation of a* and b*")
compiled = compile_regex(parse("a*b*"), "ab")
print("  words up to length 3:", words(language_upto(compiled, 3)))
print("  'ba' accepted:", ("b", "a") in language_upto(compiled, 8))
print()

print("Checking against the recursive word semantics")
r = parse("a*b*")
assert language_upto(compiled, 6) == regex_lang_upto(r, 6)
print("  truncated languages agree up to length 6")
print()

print("Fuzzing the whole compiler against the semantics")
report = kleene_fuzz(seed=2, count=100, depth=4, L=7)
print(f"  {report.count} random expressions, {len(report.mismatches)} mismatches")
