"""Exhaustive enumeration of the transitive representations.

The engine counts (and optionally collects) all 5-tuples of degree-n
permutations (sigma, a1, a2, b1, b2) with sigma a fixed transposition,
satisfying the eleven defining relations, whose images generate a
transitive subgroup.  Conjugating coordinatewise shows every solution
with sigma any transposition comes from one with sigma = (1,2), so the
total over the transposition class is the fixed-sigma count times
n(n-1)/2.

Loop structure and why it is lossless.  Write s for the sigma image and
note s = s^-1.  For an involution s the relation families reduce to
centralizer conditions:

    R2(x):      s x s^-1 x = x s^-1 x s   <=>  x  commutes with  s x s
    R3(x, y):   s^-1 x s y = y s^-1 x s   <=>  y  commutes with  s x s
    R4(x, y):   s^-1 x s^-1 y = y s^-1 x s  <=>  y  commutes with  s x s

so the six R3/R4 relations say exactly: b1 in C(s a1 s), a2 and b2 in
C(s a1 s) n C(s b1 s), and b2 in C(s a2 s).  The nested loops below run
a1 over all of S_n, b1 over C1 = C(s a1 s), a2 over C2 = C1 n C(s b1 s),
b2 over C3 = C2 n C(s a2 s), and check R2, the torus relation and
transitivity explicitly, which is therefore the full unpruned solution
set.  Three further skips are sound necessary conditions:

  * R2(x) involves only x and s, so a failing x dooms its whole subtree;
  * a2 and b2 both lie in the subgroup C2 (for a2 this is membership,
    for b2 it is membership in C3 <= C2), hence so does [a2, b2^-1];
    the torus relation forces [a2, b2^-1] = k^-1 with k = [a1, b1^-1],
    so subtrees with k outside C2 (or, once a2 is fixed, outside C3)
    are barren;
  * the torus relation puts b2^-1 a2^-1 b2 = a2^-1 k^-1, conjugate
    elements share a cycle type, so a2^-1 and a2^-1 k^-1 must.

Pure counting runs additionally factor the a1 loop by symmetry:
conjugating a solution coordinatewise by any h in C(s) fixes sigma and
permutes the solution set, so the count below a1 depends only on the
C(s)-conjugation orbit of a1.  Counting visits one representative per
orbit and multiplies by the orbit size (_conj_class_reps); collecting
and streaming runs keep the plain loop so the produced solution order
never depends on the counting strategy.  The two paths are tested for
equal counts on every degree with a known value.

Exact agreement with the relation-table-driven brute force is enforced
by brute_force_oracle and its tests, not assumed.
"""

from __future__ import annotations

import dataclasses
import itertools
import math
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from . import groups, perm, words
from .perm import Perm
from .words import Assignment

MAX_DEGREE = 12

RawSolution = Tuple[Perm, Perm, Perm, Perm]  # (a1, a2, b1, b2)


@dataclasses.dataclass(frozen=True)
class EnumerationResult:
    """Counts for one degree, plus orbit and image data once analyzed.

    orbit_count, orbit_size_histogram and image_fingerprint_histogram
    are filled in by analyze(), which needs collected solutions; they
    stay None on plain counting runs.  The size histogram is over full
    simultaneous-conjugacy classes (size -> number of classes), so its
    sizes weighted by multiplicity sum to total_count.
    """

    n: int
    sigma: Perm
    fixed_count: int
    transpositions: int
    total_count: int
    elapsed_seconds: float
    solutions: Optional[Tuple[Assignment, ...]] = None
    orbit_count: Optional[int] = None
    orbit_size_histogram: Optional[Dict[int, int]] = None
    image_fingerprint_histogram: Optional[Dict[str, int]] = None

    def __str__(self) -> str:
        return (f"n={self.n}: {self.fixed_count} representations with "
                f"sigma={perm.format_cycles(self.sigma)}, "
                f"{self.total_count} over all {self.transpositions} "
                f"transpositions")


@dataclasses.dataclass(frozen=True)
class Orbit:
    representative: Assignment
    size: int  # solutions in the fixed-sigma slice of the class


def _check_degree(n: int, allow_large: bool) -> None:
    if n < 2:
        raise ValueError(f"degree must be at least 2, got {n}")
    if n > MAX_DEGREE and not allow_large:
        raise ValueError(
            f"degree {n} exceeds the safety cap {MAX_DEGREE}; "
            f"pass allow_large=True to search anyway")


def _sigma_conj(p: Perm, s: Perm) -> Perm:
    # s p s with s an involution
    return tuple(s[p[x]] for x in s)


def _commutes(p: Perm, q: Perm) -> bool:
    for i in range(len(p)):
        if q[p[i]] != p[q[i]]:
            return False
    return True


def _inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def _centralizer_list(g: Perm) -> List[Perm]:
    """All elements of S_n commuting with g, in a deterministic order.

    Direct construction: a centralizing element permutes the cycles of g
    within each length class and rotates each cycle, so one element is
    enumerated per (cycle permutation, rotation offsets) choice per
    class.  Cost is O(n) per element, with none of the closure overhead
    of the generator-based construction in groups (which stays the
    reference; the two are tested to agree).
    """
    n = len(g)
    ident = tuple(range(n))
    if g == ident:
        return list(itertools.permutations(range(n)))
    by_length: dict[int, list] = {}
    for c in perm.disjoint_cycles(g):
        by_length.setdefault(len(c), []).append(c)
    images: List[List[int]] = [[-1] * n]
    for length in sorted(by_length):
        cs = by_length[length]
        k = len(cs)
        options: List[List[Tuple[int, int]]] = []
        for pi in itertools.permutations(range(k)):
            for offsets in itertools.product(range(length), repeat=k):
                pairs = []
                for j in range(k):
                    src, dst, off = cs[j], cs[pi[j]], offsets[j]
                    for t in range(length):
                        pairs.append((src[t], dst[(t + off) % length]))
                options.append(pairs)
        extended = []
        for base in images:
            for pairs in options:
                im = base.copy()
                for src, dst in pairs:
                    im[src] = dst
                extended.append(im)
        images = extended
    return [tuple(im) for im in images]


def _intersect_next(prev: Sequence[Perm], prev_conjs: Sequence[Perm],
                    new_conj: Perm) -> List[Perm]:
    """prev n C(new_conj), where prev is an intersection of centralizers
    of the permutations in prev_conjs.

    Two equivalent routes with very different costs: filter prev by a
    commuting test (|prev| tests), or enumerate C(new_conj) directly and
    keep the members of the earlier centralizers (about |C| * len(prev_conjs)
    tests, |C| from the cycle type alone).  Picking the cheaper keeps
    near-identity prefixes, where |prev| is huge, from dominating.
    """
    direct_size = groups.centralizer_order(new_conj)
    if direct_size * (len(prev_conjs) + 2) < len(prev):
        return [z for z in _centralizer_list(new_conj)
                if all(_commutes(z, c) for c in prev_conjs)]
    return [z for z in prev if _commutes(z, new_conj)]


def _is_transitive_tuple(s: Perm, raw: RawSolution, n: int) -> bool:
    reached = 1 | 1 << s[0]
    size = 2 if s[0] else 1
    frontier = [0, s[0]] if s[0] else [0]
    gens = (s,) + raw
    while frontier and size < n:
        nxt = []
        for x in frontier:
            for g in gens:
                y = g[x]
                if not reached >> y & 1:
                    reached |= 1 << y
                    size += 1
                    nxt.append(y)
        frontier = nxt
    return size == n


def _iter_for_a1(n: int, s: Perm, a1: Perm) -> Iterator[RawSolution]:
    """All solutions below one fixed a1."""
    cycle_type = perm.cycle_type
    sa1s = _sigma_conj(a1, s)
    if not _commutes(a1, sa1s):                          # R2(a1)
        return
    c1 = _centralizer_list(sa1s)
    a1_inv = _inverse(a1)
    for b1 in c1:
        sb1s = _sigma_conj(b1, s)
        if not _commutes(b1, sb1s):                      # R2(b1)
            continue
        b1_inv = _inverse(b1)
        # k = [a1, b1^-1]; the torus relation will force
        # [a2, b2^-1] = k^-1, an element of C2, so k must lie in C2.
        k = tuple(b1[a1_inv[b1_inv[a1[x]]]] for x in range(n))
        if not (_commutes(k, sa1s) and _commutes(k, sb1s)):
            continue
        c2 = _intersect_next(c1, (sa1s,), sb1s)
        k_inv = _inverse(k)
        for a2 in c2:
            sa2s = _sigma_conj(a2, s)
            if not _commutes(a2, sa2s):                  # R2(a2)
                continue
            if not _commutes(k, sa2s):                   # k must lie in C3
                continue
            a2_inv = _inverse(a2)
            # torus relation, rearranged: b2^-1 a2^-1 b2 = a2^-1 k^-1
            target = tuple(k_inv[x] for x in a2_inv)
            if cycle_type(a2_inv) != cycle_type(target):
                continue
            c3 = _intersect_next(c2, (sa1s, sb1s), sa2s)
            for b2 in c3:
                ok = True
                for y in range(n):
                    if b2[a2_inv[y]] != target[b2[y]]:
                        ok = False
                        break
                if not ok:
                    continue
                if not _commutes(b2, _sigma_conj(b2, s)):  # R2(b2)
                    continue
                raw = (a1, a2, b1, b2)
                if _is_transitive_tuple(s, raw, n):
                    yield raw


def _iter_solutions(n: int, s: Perm, start: int, stop: int
                    ) -> Iterator[RawSolution]:
    """Solutions whose a1 has lexicographic index in [start, stop)."""
    for a1 in itertools.islice(itertools.permutations(range(n)), start, stop):
        yield from _iter_for_a1(n, s, a1)


def _search_chunk(args: Tuple[int, Perm, int, int, bool]
                  ) -> Tuple[int, Optional[List[RawSolution]]]:
    n, s, start, stop, collect = args
    if collect:
        sols = list(_iter_solutions(n, s, start, stop))
        return len(sols), sols
    return sum(1 for _ in _iter_solutions(n, s, start, stop)), None


def _split_ranges(total: int, pieces: int) -> List[Tuple[int, int]]:
    pieces = max(1, min(pieces, total))
    step, extra = divmod(total, pieces)
    bounds = []
    lo = 0
    for i in range(pieces):
        hi = lo + step + (1 if i < extra else 0)
        bounds.append((lo, hi))
        lo = hi
    return bounds


# Counting runs collapse the a1 loop to one representative per
# conjugation orbit; bounded because the orbit walk holds a set of all
# n! permutations.
_FACTOR_MAX_DEGREE = 9


def _conj_class_reps(n: int, s: Perm) -> List[Tuple[Perm, int]]:
    """Representatives and sizes of the orbits of C(s) acting on S_n by
    conjugation, representatives lexicographically least, listed in
    representative order.

    Conjugating a solution coordinatewise by any h in C(s) fixes the
    sigma coordinate and permutes the solution set, so the number of
    solutions below a1 is constant on each orbit: counting runs search
    one representative per orbit and multiply by the orbit size.
    """
    gens = groups.centralizer_generators(s)
    visited = set()
    reps: List[Tuple[Perm, int]] = []
    for p in itertools.permutations(range(n)):
        if p in visited:
            continue
        orbit = {p}
        frontier = [p]
        while frontier:
            nxt = []
            for x in frontier:
                for h in gens:
                    y = perm.conjugate(x, h)
                    if y not in orbit:
                        orbit.add(y)
                        nxt.append(y)
            frontier = nxt
        visited |= orbit
        reps.append((p, len(orbit)))
    return reps


def _count_chunk(args: Tuple[int, Perm, List[Tuple[Perm, int]]]
                 ) -> Tuple[int, None]:
    n, s, pairs = args
    total = 0
    for a1, size in pairs:
        total += size * sum(1 for _ in _iter_for_a1(n, s, a1))
    return total, None


def _resolve_sigma(n: int, sigma: Optional[Perm]) -> Perm:
    if sigma is None:
        return perm.transposition(n, 1, 2)
    if len(sigma) != n:
        raise ValueError(f"sigma has degree {len(sigma)}, expected {n}")
    if not perm.is_transposition(sigma):
        raise ValueError("sigma must be a transposition")
    return sigma


def _run(n: int, sigma: Optional[Perm], workers: int, collect: bool,
         allow_large: bool,
         sink: Optional[Callable[[Assignment], None]],
         progress: Optional[Callable[[int, int], None]]) -> EnumerationResult:
    _check_degree(n, allow_large)
    if workers < 1:
        raise ValueError(f"workers must be positive, got {workers}")
    s = _resolve_sigma(n, sigma)
    keep = collect or sink is not None
    t0 = time.perf_counter()
    count = 0
    collected: List[Assignment] = []

    def absorb(chunk_count: int, raws: Optional[List[RawSolution]]) -> None:
        nonlocal count
        count += chunk_count
        if raws is None:
            return
        for a1, a2, b1, b2 in raws:
            asg = Assignment(n, s, a1, a2, b1, b2)
            if sink is not None:
                sink(asg)
            if collect:
                collected.append(asg)

    try:
        if keep or n > _FACTOR_MAX_DEGREE:
            pieces = _split_ranges(math.factorial(n), max(workers * 8, 32))
            jobs = [(n, s, lo, hi, keep) for lo, hi in pieces]
            worker_fn = _search_chunk
        else:
            reps = _conj_class_reps(n, s)
            pieces = _split_ranges(len(reps), max(workers * 8, 32))
            jobs = [(n, s, reps[lo:hi]) for lo, hi in pieces]
            worker_fn = _count_chunk
        if workers == 1:
            for i, job in enumerate(jobs):
                absorb(*worker_fn(job))
                if progress is not None:
                    progress(i + 1, len(jobs))
        else:
            # map() preserves job order, so aggregation is deterministic
            # and identical to the single-worker pass.
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for i, out in enumerate(pool.map(worker_fn, jobs)):
                    absorb(*out)
                    if progress is not None:
                        progress(i + 1, len(jobs))
    except MemoryError:
        raise RuntimeError(
            f"out of memory holding degree-{n} solutions; rerun without "
            f"collect, or stream them through a sink") from None
    elapsed = time.perf_counter() - t0
    t = n * (n - 1) // 2
    return EnumerationResult(
        n=n,
        sigma=s,
        fixed_count=count,
        transpositions=t,
        total_count=count * t,
        elapsed_seconds=elapsed,
        solutions=tuple(collected) if collect else None,
    )


def enumerate_fixed_sigma(n: int, collect: bool = False, *,
                          sigma: Optional[Perm] = None,
                          allow_large: bool = False,
                          sink: Optional[Callable[[Assignment], None]] = None,
                          progress: Optional[Callable[[int, int], None]] = None,
                          ) -> EnumerationResult:
    """Count (and with collect=True, return) all solutions with the given
    sigma image, default (1,2).  Single process; the reference semantics."""
    return _run(n, sigma, 1, collect, allow_large, sink, progress)


def enumerate_parallel(n: int, workers: int, collect: bool = False, *,
                       sigma: Optional[Perm] = None,
                       allow_large: bool = False,
                       progress: Optional[Callable[[int, int], None]] = None,
                       ) -> EnumerationResult:
    """Same result as enumerate_fixed_sigma, with the a1 range split into
    chunks searched by worker processes."""
    return _run(n, sigma, workers, collect, allow_large, None, progress)


def brute_force_oracle(n: int, collect: bool = True) -> EnumerationResult:
    """Scan all (n!)^4 tuples against the relation tables; no pruning.

    Kept deliberately independent of the engine: solutions are recognised
    by evaluating every relator word from the defining presentation.
    Only sensible for n <= 4.
    """
    if not 2 <= n <= 4:
        raise ValueError(f"the brute-force scan is restricted to 2 <= n <= 4, got {n}")
    s = perm.transposition(n, 1, 2)
    t0 = time.perf_counter()
    all_perms = list(itertools.permutations(range(n)))
    sols: List[Assignment] = []
    count = 0
    for a1 in all_perms:
        for a2 in all_perms:
            for b1 in all_perms:
                for b2 in all_perms:
                    asg = Assignment(n, s, a1, a2, b1, b2)
                    if not words.satisfies_all_relations(asg):
                        continue
                    if not groups.is_transitive((s, a1, a2, b1, b2), n):
                        continue
                    count += 1
                    if collect:
                        sols.append(asg)
    elapsed = time.perf_counter() - t0
    t = n * (n - 1) // 2
    return EnumerationResult(
        n=n,
        sigma=s,
        fixed_count=count,
        transpositions=t,
        total_count=count * t,
        elapsed_seconds=elapsed,
        solutions=tuple(sols) if collect else None,
    )


def orbit_decomposition(solutions: Sequence[Assignment], n: int,
                        ) -> List[Orbit]:
    """Split a fixed-sigma solution set into orbits of the centralizer
    of sigma acting by coordinatewise conjugation.

    Conjugating by C(sigma) fixes the sigma coordinate and permutes the
    solution set, so these orbits are exactly the restrictions of the
    full simultaneous-conjugacy classes to the fixed-sigma slice.  The
    representative of each orbit is its lexicographically least member.
    """
    if not solutions:
        return []
    s = solutions[0].sigma
    key_set = set()
    for sol in solutions:
        if sol.n != n:
            raise ValueError(f"solution of degree {sol.n} in a degree-{n} set")
        if sol.sigma != s:
            raise ValueError("orbit decomposition needs a fixed-sigma set")
        key_set.add((sol.a1, sol.a2, sol.b1, sol.b2))
    if len(key_set) != len(solutions):
        raise ValueError("duplicate solutions")
    conjugators = _centralizer_list(s)
    orbits: List[Orbit] = []
    visited = set()
    for sol in sorted(solutions, key=Assignment.sort_key):
        key = (sol.a1, sol.a2, sol.b1, sol.b2)
        if key in visited:
            continue
        orbit_keys = set()
        for h in conjugators:
            moved = tuple(perm.conjugate(p, h) for p in key)
            if moved not in key_set:
                raise AssertionError(
                    "conjugation by the sigma centralizer left the set; "
                    "the input is not a full fixed-sigma solution set")
            orbit_keys.add(moved)
        visited |= orbit_keys
        rep_key = min(orbit_keys)
        rep = Assignment(n, s, *rep_key)
        orbits.append(Orbit(representative=rep, size=len(orbit_keys)))
    orbits.sort(key=lambda o: o.representative.sort_key())
    return orbits


def full_conjugacy_classes(solutions: Sequence[Assignment], n: int
                           ) -> List[Orbit]:
    """Orbits under all of S_n acting on 5-tuples (sigma moves too)."""
    key_set = set()
    for sol in solutions:
        if sol.n != n:
            raise ValueError(f"solution of degree {sol.n} in a degree-{n} set")
        key_set.add((sol.sigma, sol.a1, sol.a2, sol.b1, sol.b2))
    if len(key_set) != len(solutions):
        raise ValueError("duplicate solutions")
    everyone = list(itertools.permutations(range(n)))
    orbits: List[Orbit] = []
    visited = set()
    for key in sorted(key_set):
        if key in visited:
            continue
        orbit_keys = set()
        for h in everyone:
            moved = tuple(perm.conjugate(p, h) for p in key)
            if moved not in key_set:
                raise AssertionError(
                    "conjugation left the set; the input is not closed "
                    "under simultaneous conjugation")
            orbit_keys.add(moved)
        visited |= orbit_keys
        rep_key = min(orbit_keys)
        rep = Assignment(n, rep_key[0], *rep_key[1:])
        orbits.append(Orbit(representative=rep, size=len(orbit_keys)))
    orbits.sort(key=lambda o: o.representative.sort_key())
    return orbits


def full_orbit_check(n: int) -> bool:
    """Cross-check the fixed-sigma orbit decomposition against the orbits
    of the whole solution set (every sigma transposition) under all of
    S_n.  The slice orbits must expand to pairwise-disjoint full classes
    that cover everything, each of size n(n-1)/2 times the slice size.
    Exhaustive, so n <= 4 only.
    """
    if not 2 <= n <= 4:
        raise ValueError(f"the full orbit check is restricted to 2 <= n <= 4, got {n}")
    base = perm.transposition(n, 1, 2)
    everything: List[Assignment] = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            res = enumerate_fixed_sigma(
                n, collect=True, sigma=perm.transposition(n, i, j))
            everything.extend(res.solutions)
    all_keys = {(sol.sigma, sol.a1, sol.a2, sol.b1, sol.b2)
                for sol in everything}
    if len(all_keys) != len(everything):
        return False
    fixed = [sol for sol in everything if sol.sigma == base]
    slice_orbits = orbit_decomposition(fixed, n)
    t = n * (n - 1) // 2
    expected_size = {2: 1, 3: 6, 4: 12}[n]
    everyone = list(itertools.permutations(range(n)))
    covered: set = set()
    for orbit in slice_orbits:
        rep = orbit.representative
        key = (rep.sigma, rep.a1, rep.a2, rep.b1, rep.b2)
        full_keys = {tuple(perm.conjugate(p, h) for p in key)
                     for h in everyone}
        if not full_keys <= all_keys:
            return False
        if len(full_keys) != orbit.size * t:
            return False
        if len(full_keys) != expected_size:
            return False
        if covered & full_keys:
            return False
        covered |= full_keys
    return covered == all_keys


def analyze(result: EnumerationResult) -> EnumerationResult:
    """Fill in orbit_count, orbit_size_histogram (full class sizes) and
    image_fingerprint_histogram from a collected result."""
    if result.solutions is None:
        raise ValueError("analyze needs a result with collected solutions")
    orbits = orbit_decomposition(list(result.solutions), result.n)
    sizes: Dict[int, int] = {}
    for o in orbits:
        full = o.size * result.transpositions
        sizes[full] = sizes.get(full, 0) + 1
    total = sum(size * count for size, count in sizes.items())
    if total != result.total_count:
        raise AssertionError(
            f"orbit sizes sum to {total}, expected {result.total_count}")
    n_fact = math.factorial(result.n)
    for size in sizes:
        if n_fact % size:
            raise AssertionError(f"orbit size {size} does not divide {result.n}!")
    return dataclasses.replace(
        result,
        orbit_count=len(orbits),
        orbit_size_histogram=dict(sorted(sizes.items())),
        image_fingerprint_histogram=image_name_histogram(
            result.solutions, result.n),
    )


def image_name_histogram(solutions: Sequence[Assignment], n: int
                         ) -> dict[str, int]:
    """Image-group name -> number of solutions, with a cache keyed by the
    generator set (solutions heavily share images)."""
    cache: dict[frozenset, str] = {}
    out: dict[str, int] = {}
    for sol in solutions:
        gens = (sol.sigma, sol.a1, sol.a2, sol.b1, sol.b2)
        key = frozenset(gens)
        name = cache.get(key)
        if name is None:
            name = groups.fingerprint(gens, n).name
            cache[key] = name
        out[name] = out.get(name, 0) + 1
    return dict(sorted(out.items()))
