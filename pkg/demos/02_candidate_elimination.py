"""
Peeling Laplace noise off a protected value
===========================================

A counting query answers "how many records satisfy X?" and adds Laplace
noise before releasing the answer.  Suppose the predicate is so specific
that exactly one person can match it: the true count is 1.0 if they are
in the database and 0.0 if they are not.  The noise is meant to make
those two worlds indistinguishable.

If the noise comes from the textbook inverse-transform sampler, every
released value is the image of one of 2^53 grid points.  Each round the
attacker subtracts a candidate from the noisy answer, maps the implied
noise back to its uniform, rounds onto the grid, and re-runs the
sampler's own arithmetic over a few neighbouring grid points.  The true
candidate always reproduces the answer bit for bit; the wrong one
eventually fails to.

Run:  python demos/02_candidate_elimination.py
"""

from divsamp import BitSource, QueryOracle, get_method, mironov_attack

# --- the setting: is the record present? ------------------------------------

TRUE_COUNT = 1.0          # the person is in the database
CANDIDATES = [0.0, 1.0]   # the two worlds the attacker wants to tell apart

src = BitSource(seed=2024)
noise = get_method("naive-laplace").make_drawer(src)
oracle = QueryOracle(TRUE_COUNT, noise)

outcome = mironov_attack(oracle, CANDIDATES, max_queries=100)

print("candidates:       ", CANDIDATES)
print("status:           ", outcome.status)
print("recovered value:  ", outcome.value)
print("queries consumed: ", outcome.queries_used)

# --- the elimination trace --------------------------------------------------
# Wrong candidates survive individual rounds by luck (the naive image is
# dense), so the attack keeps challenging the survivor for its whole
# budget; a single failed reproduction is disqualifying.

first_kill = next((i for i, (_, gone) in enumerate(outcome.trace) if gone), None)
print()
if first_kill is None:
    print("no candidate was eliminated within the budget")
else:
    q, gone = outcome.trace[first_kill]
    print(f"round {first_kill + 1}: query {q!r} eliminated {gone}")

# --- the same attack against a hardened sampler -----------------------------
# laplace-logcos spreads each output over four uniforms.  Its outputs are
# (essentially) never in the naive sampler's image, so *every* candidate
# fails reproduction and the attack reports that it learned nothing.

src = BitSource(seed=2024)
noise = get_method("laplace-logcos").make_drawer(src)
outcome = mironov_attack(QueryOracle(TRUE_COUNT, noise), CANDIDATES, max_queries=100)

print()
print("against laplace-logcos noise:")
print("status:           ", outcome.status)
print("recovered value:  ", outcome.value)
print("queries consumed: ", outcome.queries_used)

# --- identification rates over many campaigns -------------------------------

campaigns = 200
print()
for name in ("naive-laplace", "laplace-expdiff", "laplace-logcos"):
    hits = 0
    for k in range(campaigns):
        src = BitSource(seed=5000 + k)
        noise = get_method(name).make_drawer(src)
        out = mironov_attack(QueryOracle(TRUE_COUNT, noise), CANDIDATES, max_queries=100)
        hits += out.status == "identified" and out.value == TRUE_COUNT
    print(f"{name:<20} identified {hits}/{campaigns}")
