"""Shared builders for the test suite: canned posets, seeded corpora, and
constructive generators for monotone and antitone tables."""

from itertools import product

from posetlin import MappingTable, SplitMix64, build_poset, random_poset

EDGE_PROBS = (0.0, 0.1, 0.3, 0.7, 1.0)


def chain(n, prefix="x"):
    names = [f"{prefix}{i}" for i in range(n)]
    return build_poset(names, list(zip(names, names[1:])))


def antichain(n, prefix="x"):
    return build_poset([f"{prefix}{i}" for i in range(n)], [])


def diamond_poset():
    return build_poset(
        ["bot", "a", "b", "top"],
        [("bot", "a"), ("a", "top"), ("bot", "b"), ("b", "top")],
    )


def abc_poset():
    return build_poset(
        ["bot", "a", "b", "c", "top"],
        [("bot", "a"), ("a", "b"), ("b", "top"), ("bot", "c"), ("c", "top")],
    )


def coinciding_levels_unequal_chains():
    """Poset whose primal and dual level partitions coincide although its
    maximal chains have lengths 3 and 4: the walk p, q, r cannot be extended,
    yet u, w, q, r and p, v, z, r are longer."""
    return build_poset(
        ["u", "w", "p", "q", "v", "z", "r"],
        [("u", "w"), ("w", "q"), ("p", "q"), ("q", "r"),
         ("p", "v"), ("v", "z"), ("z", "r")],
    )


def boolean_lattice_3():
    """Subsets of {1, 2, 3} ordered by inclusion."""
    subsets = [frozenset(s) for s in [
        (), (1,), (2,), (3,), (1, 2), (1, 3), (2, 3), (1, 2, 3),
    ]]
    name = {s: "e" + "".join(str(i) for i in sorted(s)) for s in subsets}
    pairs = [
        (name[s], name[t])
        for s in subsets
        for t in subsets
        if s < t
    ]
    return build_poset([name[s] for s in subsets], pairs)


def grid_poset(rows, cols):
    """Componentwise-ordered product of two chains."""
    names = {(i, j): f"g{i}{j}" for i in range(rows) for j in range(cols)}
    pairs = []
    for i in range(rows):
        for j in range(cols):
            if i + 1 < rows:
                pairs.append((names[(i, j)], names[(i + 1, j)]))
            if j + 1 < cols:
                pairs.append((names[(i, j)], names[(i, j + 1)]))
    return build_poset([names[k] for k in sorted(names)], pairs)


def corpus_params(count, max_size=12, seed_base=1000):
    """Deterministic (seed, size, edge_probability) triples for the corpora."""
    out = []
    for i in range(count):
        size = 1 + (i % max_size)
        prob = EDGE_PROBS[(i // max_size) % len(EDGE_PROBS)]
        out.append((seed_base + i, size, prob))
    return out


def corpus(count, max_size=12, seed_base=1000):
    return [random_poset(*params) for params in corpus_params(count, max_size, seed_base)]


def linear_extension(p):
    """A deterministic linear extension of the carrier, smallest first."""
    return sorted(p.elements, key=lambda x: (len(p.below(x)), p.position(x)))


def _ordered_keys(domain, arity):
    index = {x: i for i, x in enumerate(linear_extension(domain))}
    return sorted(
        product(domain.elements, repeat=arity),
        key=lambda key: tuple(index[x] for x in key),
    )


def _constrained_table(domain, codomain, seed, arity, admissible):
    keys = _ordered_keys(domain, arity)
    for attempt in range(50):
        rng = SplitMix64(seed * 1_000_003 + attempt)
        assigned = {}
        for key in keys:
            images = [v for k, v in assigned.items() if domain.tuple_leq(k, key)]
            candidates = [z for z in codomain.elements if admissible(codomain, images, z)]
            if not candidates:
                assigned = None
                break
            assigned[key] = candidates[rng.below(len(candidates))]
        if assigned is not None:
            return MappingTable(domain, arity, codomain, assigned)
    # constant maps are both monotone and antitone
    rng = SplitMix64(seed)
    value = codomain.elements[rng.below(len(codomain))]
    return MappingTable(domain, arity, codomain, {key: value for key in keys})


def random_monotone_table(domain, codomain, seed, arity=1):
    """Seeded monotone table, built by choosing images above all lower images."""
    return _constrained_table(
        domain, codomain, seed, arity,
        lambda cod, images, z: all(cod.leq(w, z) for w in images),
    )


def random_antitone_table(domain, codomain, seed, arity=1):
    return _constrained_table(
        domain, codomain, seed, arity,
        lambda cod, images, z: all(cod.leq(z, w) for w in images),
    )


def random_table(domain, codomain, seed, arity=1):
    """Unconstrained seeded table (no order discipline at all)."""
    rng = SplitMix64(seed)
    return MappingTable(
        domain, arity, codomain,
        {
            key: codomain.elements[rng.below(len(codomain))]
            for key in product(domain.elements, repeat=arity)
        },
    )


def is_lattice_bruteforce(p):
    """Independent lattice test: search bounds pair by pair, head on."""
    for x in p.elements:
        for y in p.elements:
            uppers = [z for z in p.elements if p.leq(x, z) and p.leq(y, z)]
            lowers = [z for z in p.elements if p.leq(z, x) and p.leq(z, y)]
            least = [u for u in uppers if all(p.leq(u, v) for v in uppers)]
            greatest = [u for u in lowers if all(p.leq(v, u) for v in lowers)]
            if len(least) != 1 or len(greatest) != 1:
                return False
    return True
