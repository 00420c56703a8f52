"""Weight systems on the Fock-space tree and their weight functions.

A weight system assigns a strictly positive scalar to every edge of the tree:
``lambda_of(i, w)`` weights the edge from the basis vector at ``w`` to the one
at ``i*w``.  From it derive the left weight function W(u, w) (products of edge
weights down the tree), the commutant weights mu, and the right weight
function W_mu.  This module also houses the identities and conditions those
functions satisfy: both cocycle laws, the intertwining identity, the
boundedness condition governing the commutant description, a finite-range
semisimplicity estimate, and the generation of left weights from prescribed
right weights.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Mapping

from .words import EMPTY, BasisEnumeration, Word, append, parse_word, prepend

# beyond this many factors, weight products are accumulated in log space
LOG_CHUNK = 32

# enumeration guards for sweeps over all words of bounded length
MAX_SWEEP_WORDS = 1 << 21
MAX_AUTOMATON_STATES = 100_000

BOUNDED = "bounded"
BOUNDED_SO_FAR = "bounded_so_far"
DIVERGING = "diverging"


def _check_positive(value: float, what: str) -> float:
    value = float(value)
    if not value > 0.0 or math.isinf(value):
        raise ValueError(f"{what} must be strictly positive and finite, got {value}")
    return value


def weight_key(i: int, w: Word | str) -> tuple[int, Word]:
    if isinstance(w, str):
        w = parse_word(w)
    return (int(i), w)


def table_from_strings(entries: Mapping[str, float], n: int | None = None) -> dict[tuple[int, Word], float]:
    """Convert a mapping with 'i:w' string keys into a (letter, Word) table."""
    table: dict[tuple[int, Word], float] = {}
    for key, value in entries.items():
        try:
            letter_text, word_text = key.split(":", 1)
            letter = int(letter_text)
        except ValueError as exc:
            raise ValueError(f"malformed table key {key!r}, expected 'i:w'") from exc
        word = parse_word(word_text, n)
        if n is not None and not 1 <= letter <= n:
            raise ValueError(f"table key {key!r} has letter outside [1, {n}]")
        table[(letter, word)] = float(value)
    return table


class WeightSystem:
    """Base class: the rule (i, w) -> positive edge weight."""

    n: int

    def lambda_of(self, i: int, w: Word) -> float:
        raise NotImplementedError

    def log_lambda_of(self, i: int, w: Word) -> float:
        return math.log(self.lambda_of(i, w))

    def _check_letter(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise ValueError(f"letter {i} outside [1, {self.n}]")

    # Exact infimum of lambda_{i,.}, when the family structure decides it.
    def exact_min_weight(self, i: int) -> float | None:
        return None

    # Depth by which the set of attained weight values has stabilized, when known.
    def stabilization_depth(self) -> int | None:
        return None


@dataclass(frozen=True)
class ConstantWeights(WeightSystem):
    """lambda_{i,w} == value; value 1 is the unweighted system."""

    n: int
    value: float = 1.0

    def __post_init__(self):
        _check_positive(self.value, "constant weight")

    def lambda_of(self, i: int, w: Word) -> float:
        self._check_letter(i)
        return self.value

    def exact_min_weight(self, i: int) -> float:
        return self.value

    def stabilization_depth(self) -> int:
        return 0


@dataclass(frozen=True)
class ScaledWeights(WeightSystem):
    """lambda_{i,w} == scales[i-1]: scalar multiples of the unweighted shifts."""

    n: int
    scales: tuple[float, ...]

    def __post_init__(self):
        if len(self.scales) != self.n:
            raise ValueError(f"expected {self.n} scales, got {len(self.scales)}")
        object.__setattr__(self, "scales", tuple(_check_positive(c, "scale") for c in self.scales))

    def lambda_of(self, i: int, w: Word) -> float:
        self._check_letter(i)
        return self.scales[i - 1]

    def exact_min_weight(self, i: int) -> float:
        return self.scales[i - 1]

    def stabilization_depth(self) -> int:
        return 0


@dataclass(frozen=True, eq=False)
class FinitePerturbationWeights(WeightSystem):
    """Free weights on base words up to the cutoff length, constant per letter beyond."""

    n: int
    cutoff: int
    table: Mapping[tuple[int, Word], float]
    tail: tuple[float, ...]

    def __post_init__(self):
        if self.cutoff < 0:
            raise ValueError("cutoff must be nonnegative")
        if len(self.tail) != self.n:
            raise ValueError(f"expected {self.n} tail scales, got {len(self.tail)}")
        object.__setattr__(self, "tail", tuple(_check_positive(c, "tail scale") for c in self.tail))
        basis = BasisEnumeration(self.n, self.cutoff)
        for w in basis.words():
            for i in range(1, self.n + 1):
                if (i, w) not in self.table:
                    raise ValueError(f"missing table entry for ({i}, {w})")
                _check_positive(self.table[(i, w)], f"weight ({i}, {w})")

    def lambda_of(self, i: int, w: Word) -> float:
        self._check_letter(i)
        if len(w) <= self.cutoff:
            return self.table[(i, w)]
        return self.tail[i - 1]

    def exact_min_weight(self, i: int) -> float:
        vals = [v for (j, _), v in self.table.items() if j == i]
        return min(min(vals), self.tail[i - 1])

    def stabilization_depth(self) -> int:
        return self.cutoff + 1


@dataclass(frozen=True, eq=False)
class PeriodicWeights(WeightSystem):
    """lambda_{i,w} = lambda_{i,u} for the decomposition w = u*v with
    |u| = |w| mod period; the remainder scalars determine the system."""

    n: int
    period: int
    remainders: Mapping[tuple[int, Word], float]

    def __post_init__(self):
        if self.period < 1:
            raise ValueError("period must be at least 1")
        basis = BasisEnumeration(self.n, self.period - 1)
        for u in basis.words():
            for i in range(1, self.n + 1):
                if (i, u) not in self.remainders:
                    raise ValueError(f"missing remainder scalar for ({i}, {u})")
                _check_positive(self.remainders[(i, u)], f"remainder ({i}, {u})")

    def lambda_of(self, i: int, w: Word) -> float:
        self._check_letter(i)
        u = w[: len(w) % self.period]
        return self.remainders[(i, u)]

    def exact_min_weight(self, i: int) -> float:
        return min(v for (j, _), v in self.remainders.items() if j == i)

    def stabilization_depth(self) -> int:
        return self.period - 1


@dataclass(frozen=True)
class TwoLetterRunWeights(WeightSystem):
    """The two-letter family with lambda_{1,1^k} = 1/m, lambda_{1,1^k 2} = 1/sqrt(m),
    and every other weight equal to c.

    The ratio of weight products along 1-runs grows like m^(k/2), so the
    commutant boundedness condition holds exactly when m <= 1 and c*sqrt(m) <= 1.
    """

    m: float
    c: float

    def __post_init__(self):
        _check_positive(self.m, "m")
        _check_positive(self.c, "c")

    @property
    def n(self) -> int:
        return 2

    def lambda_of(self, i: int, w: Word) -> float:
        self._check_letter(i)
        if i == 1:
            body = w.letters
            if all(b == 1 for b in body):
                return 1.0 / self.m
            if body[-1] == 2 and all(b == 1 for b in body[:-1]):
                return 1.0 / math.sqrt(self.m)
        return self.c

    def exact_min_weight(self, i: int) -> float:
        if i == 1:
            return min(1.0 / self.m, 1.0 / math.sqrt(self.m), self.c)
        return self.c

    def stabilization_depth(self) -> int:
        return 1


@dataclass(frozen=True, eq=False)
class TabulatedWeights(WeightSystem):
    """Explicitly tabulated weights for base words up to a depth; queries
    beyond the table are an error."""

    n: int
    depth: int
    table: Mapping[tuple[int, Word], float]

    def lambda_of(self, i: int, w: Word) -> float:
        self._check_letter(i)
        try:
            return self.table[(i, w)]
        except KeyError:
            raise ValueError(f"weight ({i}, {w}) not tabulated (table depth {self.depth})") from None


# ---------------------------------------------------------------------------
# weight functions
# ---------------------------------------------------------------------------


def left_weight(ws: WeightSystem, u: Word, w: Word) -> float:
    """W(u, w): the product of edge weights on the path from xi_u to xi_{wu}.

    W(u, e) = 1.  Long products are accumulated in log space to dodge
    under/overflow.
    """
    if len(w) > LOG_CHUNK:
        return math.exp(log_left_weight(ws, u, w))
    total = 1.0
    base = u
    for letter in reversed(w.letters):
        total *= ws.lambda_of(letter, base)
        base = prepend(letter, base)
    return total


def log_left_weight(ws: WeightSystem, u: Word, w: Word) -> float:
    total = 0.0
    base = u
    for letter in reversed(w.letters):
        total += ws.log_lambda_of(letter, base)
        base = prepend(letter, base)
    return total


class MuSystem:
    """Right-shift weights mu_{i,w} > 0 normalized so that mu_{i,e} = 1."""

    n: int

    def mu_of(self, i: int, w: Word) -> float:
        raise NotImplementedError

    def log_mu_of(self, i: int, w: Word) -> float:
        return math.log(self.mu_of(i, w))


@dataclass(frozen=True)
class CommutantMu(MuSystem):
    """The commutant weights mu_{i,w} = W(i,w) / W(e,w) of a weight system."""

    weights: WeightSystem

    @property
    def n(self) -> int:
        return self.weights.n

    def mu_of(self, i: int, w: Word) -> float:
        return commutant_mu(self.weights, i, w)

    def log_mu_of(self, i: int, w: Word) -> float:
        ws = self.weights
        return log_left_weight(ws, Word([i]), w) - log_left_weight(ws, EMPTY, w)


@dataclass(frozen=True, eq=False)
class TableMu(MuSystem):
    """Explicit right-shift weights: tabulated up to the cutoff length and
    equal to ``fill`` beyond it.

    The table must be complete up to the cutoff, strictly positive, and
    normalized with mu_{i,e} = 1.
    """

    n: int
    cutoff: int
    entries: Mapping[tuple[int, Word], float]
    fill: float = 1.0

    def __post_init__(self):
        if self.cutoff < 0:
            raise ValueError("cutoff must be nonnegative")
        _check_positive(self.fill, "fill value")
        basis = BasisEnumeration(self.n, self.cutoff)
        for w in basis.words():
            for i in range(1, self.n + 1):
                if (i, w) not in self.entries:
                    raise ValueError(f"missing right weight for ({i}, {w})")
                _check_positive(self.entries[(i, w)], f"right weight ({i}, {w})")
        for i in range(1, self.n + 1):
            if self.entries[(i, EMPTY)] != 1.0:
                raise ValueError(f"right weights must be normalized: mu_({i}, e) != 1")

    def mu_of(self, i: int, w: Word) -> float:
        if not 1 <= i <= self.n:
            raise ValueError(f"letter {i} outside [1, {self.n}]")
        if len(w) <= self.cutoff:
            return self.entries[(i, w)]
        return self.fill


def commutant_mu(ws: WeightSystem, i: int, w: Word) -> float:
    """mu_{i,w} = W(i,w) / W(e,w), the unique right-shift weights commuting
    with the left shifts under the mu_{i,e} = 1 normalization."""
    ws._check_letter(i)
    if len(w) > LOG_CHUNK:
        return math.exp(
            log_left_weight(ws, Word([i]), w) - log_left_weight(ws, EMPTY, w)
        )
    return left_weight(ws, Word([i]), w) / left_weight(ws, EMPTY, w)


def right_weight(mu: MuSystem, v: Word, w: Word) -> float:
    """W_mu(v, w): the product of right-shift weights appending w to v.

    W_mu(v, e) = 1.
    """
    if len(w) > LOG_CHUNK:
        return math.exp(log_right_weight(mu, v, w))
    total = 1.0
    base = v
    for letter in w.letters:
        total *= mu.mu_of(letter, base)
        base = append(base, letter)
    return total


def log_right_weight(mu: MuSystem, v: Word, w: Word) -> float:
    total = 0.0
    base = v
    for letter in w.letters:
        total += mu.log_mu_of(letter, base)
        base = append(base, letter)
    return total


def mu_table(ws: WeightSystem, depth: int) -> dict[tuple[int, Word], float]:
    """Tabulate the commutant weights for all base words up to ``depth``."""
    basis = BasisEnumeration(ws.n, depth)
    return {
        (i, w): commutant_mu(ws, i, w)
        for w in basis.words()
        for i in range(1, ws.n + 1)
    }


# ---------------------------------------------------------------------------
# identity checks
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DefectReport:
    """Maximum relative defect of an identity over a swept range, with the
    witnessing tuple attaining it."""

    max_defect: float
    witness: tuple | None
    checks: int

    @property
    def ok(self) -> bool:
        return self.max_defect <= 1e-12


def _relative_defect(lhs: float, rhs: float) -> float:
    scale = max(abs(lhs), abs(rhs), 1.0)
    return abs(lhs - rhs) / scale


def _triples(basis: BasisEnumeration, budget: int) -> Iterator[tuple[Word, Word, Word]]:
    for lu in range(budget + 1):
        for u in basis.level_words(lu):
            for lv in range(budget - lu + 1):
                for v in basis.level_words(lv):
                    for lw in range(budget - lu - lv + 1):
                        for w in basis.level_words(lw):
                            yield u, v, w


def check_cocycles(ws: WeightSystem, mu: MuSystem | None, depth: int) -> DefectReport:
    """Sweep both cocycle identities over all triples with |u|+|v|+|w| <= depth:

        W(u, v*w)    = W(w*u, v) * W(u, w)
        W_mu(u, v*w) = W_mu(u, v) * W_mu(u*v, w)
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    if mu is None:
        mu = CommutantMu(ws)
    basis = BasisEnumeration(ws.n, depth)
    worst = 0.0
    witness = None
    checks = 0
    for u, v, w in _triples(basis, depth):
        lhs = left_weight(ws, u, v * w)
        rhs = left_weight(ws, w * u, v) * left_weight(ws, u, w)
        defect = _relative_defect(lhs, rhs)
        if defect > worst:
            worst, witness = defect, ("left", u, v, w)
        lhs = right_weight(mu, u, v * w)
        rhs = right_weight(mu, u, v) * right_weight(mu, u * v, w)
        defect = _relative_defect(lhs, rhs)
        if defect > worst:
            worst, witness = defect, ("right", u, v, w)
        checks += 2
    return DefectReport(worst, witness, checks)


def check_intertwining(ws: WeightSystem, depth: int) -> DefectReport:
    """Sweep the intertwining identity mu_{i,v} W(v*i, w) = mu_{i,w*v} W(v, w)
    over all i, v, w with |v| + |w| + 1 <= depth."""
    if depth < 1:
        raise ValueError("depth must be at least 1")
    basis = BasisEnumeration(ws.n, depth)
    worst = 0.0
    witness = None
    checks = 0
    for lv in range(depth):
        for v in basis.level_words(lv):
            for lw in range(depth - lv):
                for w in basis.level_words(lw):
                    for i in range(1, ws.n + 1):
                        lhs = commutant_mu(ws, i, v) * left_weight(ws, append(v, i), w)
                        rhs = commutant_mu(ws, i, w * v) * left_weight(ws, v, w)
                        defect = _relative_defect(lhs, rhs)
                        if defect > worst:
                            worst, witness = defect, (i, v, w)
                        checks += 1
    return DefectReport(worst, witness, checks)


# ---------------------------------------------------------------------------
# the commutant boundedness condition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Condition6Report:
    """Supremum of W(i,w)/W(e,w) over the swept range, with the verdict of the
    family decision procedure.

    ``value`` is the exact supremum over |w| <= depth.  ``verdict`` is
    ``bounded`` or ``diverging`` when the family admits an exact decision and
    ``bounded_so_far`` otherwise; ``certificate`` carries the reasoning
    (exact supremum, or the pumping path whose ratios grow geometrically).
    """

    value: float
    verdict: str
    witness: tuple[int, Word] | None
    certificate: dict


def _sweep_guard(n: int, depth: int) -> None:
    total = sum(n**k for k in range(depth + 1))
    if total > MAX_SWEEP_WORDS:
        raise ValueError(
            f"sweep over {total} words exceeds the {MAX_SWEEP_WORDS} guard; lower depth or n"
        )


def _enumerated_sup(ws: WeightSystem, depth: int) -> tuple[float, tuple[int, Word]]:
    _sweep_guard(ws.n, depth)
    basis = BasisEnumeration(ws.n, depth)
    best = 0.0
    witness = (1, EMPTY)
    for w in basis.words():
        log_we = log_left_weight(ws, EMPTY, w) if len(w) > LOG_CHUNK else None
        for i in range(1, ws.n + 1):
            if log_we is None:
                ratio = left_weight(ws, Word([i]), w) / left_weight(ws, EMPTY, w)
            else:
                ratio = math.exp(log_left_weight(ws, Word([i]), w) - log_we)
            if ratio > best:
                best, witness = ratio, (i, w)
    return best, witness


def _two_letter_decision(ws: TwoLetterRunWeights) -> tuple[str, dict]:
    growth_run = math.sqrt(ws.m)  # per-letter ratio growth along 1-runs for i = 2
    growth_tail = ws.c * math.sqrt(ws.m)  # per-letter growth along words ending in 2
    if growth_run > 1.0:
        return DIVERGING, {
            "path": "1^k",
            "letter": 2,
            "per_step_factor": growth_run,
            "reason": "W(2,1^k)/W(e,1^k) = m^(k/2)",
        }
    if growth_tail > 1.0:
        return DIVERGING, {
            "path": "1^k 2",
            "letter": 1,
            "per_step_factor": growth_tail,
            "reason": "W(i,1^k 2)/W(e,1^k 2) = (c sqrt(m))^k",
        }
    return BOUNDED, {"exact_sup": 1.0, "method": "closed forms of the two-letter family"}


def _periodic_decision(ws: PeriodicWeights) -> tuple[str, dict]:
    k, n = ws.period, ws.n
    if k == 1:
        return BOUNDED, {"exact_sup": 1.0, "method": "period-1 weights depend only on the letter"}
    num_states = k * n ** (k - 1)
    if num_states > MAX_AUTOMATON_STATES:
        raise ValueError(f"remainder automaton with {num_states} states exceeds the guard")

    basis = BasisEnumeration(n, k - 1)
    # transient: ratios for all |w| <= k-1 computed directly
    transient_best = 0.0
    for w in basis.words():
        for i in range(1, n + 1):
            transient_best = max(transient_best, commutant_mu(ws, i, w))

    # recurrent states: (first k-1 letters of w, |w| mod k); prepending a letter
    # multiplies the ratio by remainders[a, new prefix] / remainders[a, old prefix]
    prefixes = list(basis.level_words(k - 1))
    state_index = {}
    for p in prefixes:
        for r in range(k):
            state_index[(p.letters, r)] = len(state_index)
    num = len(state_index)
    edges = []  # (src, dst, log multiplier)
    for p in prefixes:
        for r in range(k):
            src = state_index[(p.letters, r)]
            r_next = (r + 1) % k
            for a in range(1, n + 1):
                new_prefix = (prepend(a, p))[: k - 1]
                dst = state_index[(new_prefix.letters, r_next)]
                num_w = ws.remainders[(a, p[:r_next])]
                den_w = ws.remainders[(a, p[:r])]
                edges.append((src, dst, math.log(num_w) - math.log(den_w)))

    neg_inf = float("-inf")
    best = [neg_inf] * num
    entry_residue = (k - 1) % k
    for p in prefixes:
        idx = state_index[(p.letters, entry_residue)]
        for i in range(1, n + 1):
            best[idx] = max(best[idx], math.log(commutant_mu(ws, i, p)))
    overall = max(v for v in best if v > neg_inf)

    # Bellman-Ford value iteration: with every cycle ratio <= 1, path maxima
    # settle within num rounds; a further improving round certifies a cycle
    # with ratio > 1 and hence divergence.
    tol = 1e-12
    for sweep in range(num + 1):
        nxt = list(best)
        improved = False
        for src, dst, logw in edges:
            if best[src] == neg_inf:
                continue
            cand = best[src] + logw
            if cand > nxt[dst] + tol:
                nxt[dst] = cand
                improved = True
        best = nxt
        overall = max(overall, max(v for v in best if v > neg_inf))
        if not improved:
            break
    else:
        improved = True
    if improved:
        return DIVERGING, {
            "method": "remainder automaton holds a cycle with ratio product > 1",
            "states": num,
        }
    return BOUNDED, {
        "exact_sup": max(transient_best, math.exp(overall)),
        "method": "remainder automaton max-cycle-ratio check",
        "states": num,
    }


def _decide_condition6(ws: WeightSystem) -> tuple[str, dict]:
    if isinstance(ws, (ConstantWeights, ScaledWeights)):
        return BOUNDED, {"exact_sup": 1.0, "method": "weights do not depend on the base word"}
    if isinstance(ws, FinitePerturbationWeights):
        sup, _ = _enumerated_sup(ws, ws.cutoff + 1)
        return BOUNDED, {
            "exact_sup": sup,
            "method": f"ratio factors cancel beyond length {ws.cutoff + 1}",
        }
    if isinstance(ws, TwoLetterRunWeights):
        return _two_letter_decision(ws)
    if isinstance(ws, PeriodicWeights):
        return _periodic_decision(ws)
    if isinstance(ws, TabulatedWeights):
        return BOUNDED_SO_FAR, {"inspected_depth": ws.depth}
    return BOUNDED_SO_FAR, {}


def condition6_sup(ws: WeightSystem, depth: int) -> Condition6Report:
    """Supremum of the commutant ratios W(i,w)/W(e,w) over |w| <= depth,
    together with the per-family boundedness verdict.

    Constant and scaled families are trivially bounded with supremum 1; the
    finite-perturbation ratios stabilize past the cutoff; the two-letter run
    family is decided by its closed forms; and periodic families are decided
    by a max-cycle-ratio check on the finite automaton of remainder-prefix
    states.  Tabulated systems can only report ``bounded_so_far``.
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    value, witness = _enumerated_sup(ws, depth)
    verdict, certificate = _decide_condition6(ws)
    return Condition6Report(value, verdict, witness, certificate)


def require_bounded_mu(ws: WeightSystem) -> None:
    """Refuse to build right shifts from weights whose commutant ratios diverge."""
    verdict, certificate = _decide_condition6(ws)
    if verdict == DIVERGING:
        raise ValueError(f"commutant weights diverge: {certificate}")


# ---------------------------------------------------------------------------
# semisimplicity estimate
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SemisimpleEstimate:
    """Finite-range proxy for the semisimplicity constant.

    The true constant is an infimum over all words of a liminf over all
    powers; this estimate restricts to |v| <= max_v_len and to roots of order
    k in [max_k/2, max_k], and is exact only for families whose right weights
    are eventually constant.
    """

    value: float
    witness_v: Word
    max_v_len: int
    max_k: int


def semisimple_estimate(source: WeightSystem | MuSystem, max_v_len: int, max_k: int) -> SemisimpleEstimate:
    """Estimate  inf_v W_mu(e,v)^{-1} min_{max_k/2 <= k <= max_k} W_mu(v, v^{k-1})^{1/k}."""
    if max_v_len < 1:
        raise ValueError("max_v_len must be at least 1")
    if max_k < 1:
        raise ValueError("max_k must be at least 1")
    if isinstance(source, WeightSystem):
        require_bounded_mu(source)
        mu: MuSystem = CommutantMu(source)
    else:
        mu = source
    _sweep_guard(mu.n, max_v_len)
    basis = BasisEnumeration(mu.n, max_v_len)
    k_lo = max(1, math.ceil(max_k / 2))
    best = math.inf
    witness = Word([1])
    for length in range(1, max_v_len + 1):
        for v in basis.level_words(length):
            log_base = log_right_weight(mu, EMPTY, v)
            inner = min(
                log_right_weight(mu, v, v ** (k - 1)) / k for k in range(k_lo, max_k + 1)
            )
            value = math.exp(inner - log_base)
            if value < best:
                best, witness = value, v
    return SemisimpleEstimate(best, witness, max_v_len, max_k)


# ---------------------------------------------------------------------------
# right-to-left weight generation
# ---------------------------------------------------------------------------


def lambda_from_mu(mu: MuSystem, depth: int) -> TabulatedWeights:
    """Generate the left weights lambda_{i,w} = W_mu(i,w) / W_mu(e,w) induced
    by prescribed right weights, tabulated for |w| <= depth.

    The right weights must be normalized (mu_{i,e} = 1); the commutant weights
    of the result reproduce ``mu`` on the tabulated range.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    for i in range(1, mu.n + 1):
        if abs(mu.mu_of(i, EMPTY) - 1.0) > 1e-12:
            raise ValueError(f"right weights must be normalized: mu_({i}, e) != 1")
    _sweep_guard(mu.n, depth)
    basis = BasisEnumeration(mu.n, depth)
    table: dict[tuple[int, Word], float] = {}
    for w in basis.words():
        long = len(w) > LOG_CHUNK
        log_base = log_right_weight(mu, EMPTY, w) if long else None
        for i in range(1, mu.n + 1):
            iw = Word([i])
            if long:
                value = math.exp(log_right_weight(mu, iw, w) - log_base)
            else:
                value = right_weight(mu, iw, w) / right_weight(mu, EMPTY, w)
            table[(i, w)] = value
    return TabulatedWeights(mu.n, depth, table)
