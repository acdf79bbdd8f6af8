# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled enumeration kernels; mirror of _pykernels.

Masks live in 64-bit words and stacks have fixed depth, so these apply
only when threshold + universe < 64, period < 64 and length caps stay
at or below 128; the dispatcher in _kernels enforces that and falls
back to the pure-Python kernels otherwise.
"""

from math import gcd

from idemfree.errors import BudgetError

WITNESS_LIMIT = 200  # keep in sync with _pykernels.WITNESS_LIMIT

cdef enum:
    MAXDEPTH = 130
    MAXUNIV = 64

cdef unsigned long long ONE = 1


cdef inline int _ctz(unsigned long long x) noexcept nogil:
    cdef int c = 0
    while (x & 1) == 0:
        x >>= 1
        c += 1
    return c


cdef inline void _check_limits(int universe, int period, int threshold,
                               int depth_cap) except *:
    if (universe >= MAXUNIV or period >= MAXUNIV or depth_cap >= MAXDEPTH - 1
            or threshold + universe >= 64):
        raise ValueError("parameters exceed compiled kernel limits")


def profile(values, int cap, int period):
    """Return (exact_mask, high_mask) for the given index multiset."""
    cdef unsigned long long below = (ONE << cap) - 2
    cdef unsigned long long nmask = (ONE << period) - 1
    cdef unsigned long long exact = 0, high = 0, shifted, over
    cdef int v, d, t
    for value in values:
        v = value
        shifted = (exact << v) | (ONE << v)
        if high:
            d = v % period
            high |= ((high << d) | (high >> (period - d))) & nmask
        over = shifted >> cap
        while over:
            t = _ctz(over)
            high |= ONE << ((cap + t) % period)
            over &= over - 1
        exact = (exact | shifted) & below
    return (int(exact), int(high))


cdef class _Scan:
    cdef int u, n, threshold, max_len, free_bad_mode, minimal_bad_mode
    cdef long long budget, nodes
    cdef unsigned long long below, nmask
    cdef int depth, ngens
    cdef int stack[MAXDEPTH]
    cdef int ds[MAXDEPTH]
    cdef int dtab[MAXUNIV * MAXUNIV]
    cdef long long free_count[MAXDEPTH]
    cdef long long minimal_count[MAXDEPTH]
    cdef long long free_bad[MAXDEPTH]
    cdef long long minimal_bad[MAXDEPTH]
    cdef list free_best
    cdef list minimal_best
    cdef int free_best_len
    cdef int minimal_best_len

    def __cinit__(self, int universe, int period, int threshold, int max_len,
                  int free_bad_mode, int minimal_bad_mode, long long node_budget):
        cdef int i, gi, e, m
        self.u = universe
        self.n = period
        self.threshold = threshold
        self.max_len = max_len
        self.free_bad_mode = free_bad_mode
        self.minimal_bad_mode = minimal_bad_mode
        self.budget = node_budget
        self.below = (ONE << threshold) - 2
        self.nmask = (ONE << period) - 1
        self.nodes = 0
        self.depth = 0
        for i in range(MAXDEPTH):
            self.free_count[i] = 0
            self.minimal_count[i] = 0
            self.free_bad[i] = 0
            self.minimal_bad[i] = 0
        self.free_best = []
        self.minimal_best = []
        self.free_best_len = 0
        self.minimal_best_len = 0
        self.ngens = 0
        if free_bad_mode == 2 or minimal_bad_mode == 2 or minimal_bad_mode == 3:
            gens = [g for g in range(1, period) if gcd(g, period) == 1]
            self.ngens = len(gens)
            for gi, g in enumerate(gens):
                inv = pow(g, -1, period)
                for e in range(1, universe + 1):
                    m = (e * inv) % period
                    self.dtab[gi * MAXUNIV + e] = m if m else period

    cdef object _stack_tuple(self):
        cdef int j
        return tuple([self.stack[j] for j in range(self.depth)])

    cdef bint _smooth_some_gen(self, bint want_sum_period) noexcept:
        cdef int gi, j, i, x, total, reach
        cdef bint ok
        for gi in range(self.ngens):
            total = 0
            for j in range(self.depth):
                x = self.dtab[gi * MAXUNIV + self.stack[j]]
                i = j
                while i > 0 and self.ds[i - 1] > x:
                    self.ds[i] = self.ds[i - 1]
                    i -= 1
                self.ds[i] = x
                total += x
            if want_sum_period:
                if total != self.n:
                    continue
            elif total >= self.n:
                continue
            reach = 0
            ok = True
            for j in range(self.depth):
                if self.ds[j] > reach + 1:
                    ok = False
                    break
                reach += self.ds[j]
            if ok:
                return True
        return False

    cdef bint _index_is_one(self) noexcept:
        cdef int gi, j, total
        if self.ngens == 0:
            return True
        for gi in range(self.ngens):
            total = 0
            for j in range(self.depth):
                total += self.dtab[gi * MAXUNIV + self.stack[j]]
            if total == self.n:
                return True
        return False

    cdef bint _free_without(self, int skip) noexcept:
        cdef unsigned long long exact = 0, high = 0, shifted, over
        cdef int j, v, d, t
        for j in range(self.depth):
            if j == skip:
                continue
            v = self.stack[j]
            shifted = (exact << v) | (ONE << v)
            if high:
                d = v % self.n
                high |= ((high << d) | (high >> (self.n - d))) & self.nmask
            over = shifted >> self.threshold
            while over:
                t = _ctz(over)
                high |= ONE << ((self.threshold + t) % self.n)
                over &= over - 1
            exact = (exact | shifted) & self.below
        return (high & 1) == 0

    cdef bint _is_minimal(self, int total) noexcept:
        # stack is nondecreasing, so adjacency detects repeated values
        cdef int i, w, last
        if total < self.threshold or total % self.n != 0:
            return False
        last = self.stack[self.depth - 1]
        for i in range(self.depth - 1):
            w = self.stack[i]
            if w == last:
                continue
            if i > 0 and w == self.stack[i - 1]:
                continue
            if not self._free_without(i):
                return False
        return True

    cdef void _record_free_bad(self, int depth):
        self.free_bad[depth] += 1
        if depth > self.free_best_len:
            self.free_best_len = depth
            self.free_best = [self._stack_tuple()]
        elif depth == self.free_best_len and len(self.free_best) < WITNESS_LIMIT:
            self.free_best.append(self._stack_tuple())

    cdef void _record_minimal_bad(self, int depth):
        self.minimal_bad[depth] += 1
        if depth > self.minimal_best_len:
            self.minimal_best_len = depth
            self.minimal_best = [self._stack_tuple()]
        elif depth == self.minimal_best_len and len(self.minimal_best) < WITNESS_LIMIT:
            self.minimal_best.append(self._stack_tuple())

    cdef int _visit(self, int v, unsigned long long exact, unsigned long long high,
                    int total, bint smooth) except -1:
        cdef unsigned long long shifted, over
        cdef int d, t, w, depth
        cdef bint bad
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetError(
                f"enumeration aborted: visited multisets exceed the node budget {self.budget}")
        shifted = (exact << v) | (ONE << v)
        if high:
            d = v % self.n
            high |= ((high << d) | (high >> (self.n - d))) & self.nmask
        over = shifted >> self.threshold
        while over:
            t = _ctz(over)
            high |= ONE << ((self.threshold + t) % self.n)
            over &= over - 1
        exact = (exact | shifted) & self.below
        total += v
        smooth = smooth and v <= 1 + (total - v)
        self.stack[self.depth] = v
        self.depth += 1
        depth = self.depth
        if high & 1:
            if self.minimal_bad_mode != 0 and self._is_minimal(total):
                self.minimal_count[depth] += 1
                if self.minimal_bad_mode == 1:
                    bad = not smooth
                elif self.minimal_bad_mode == 2:
                    bad = not self._smooth_some_gen(True)
                else:
                    bad = not self._index_is_one()
                if bad:
                    self._record_minimal_bad(depth)
        else:
            self.free_count[depth] += 1
            if self.free_bad_mode != 0:
                if self.free_bad_mode == 1:
                    bad = not smooth
                else:
                    bad = not self._smooth_some_gen(False)
                if bad:
                    self._record_free_bad(depth)
            if depth < self.max_len:
                for w in range(v, self.u + 1):
                    self._visit(w, exact, high, total, smooth)
        self.depth -= 1
        return 0


def scan(int universe, int period, int threshold, int max_len,
         int first_lo, int first_hi,
         int free_bad_mode, int minimal_bad_mode, long long node_budget):
    """Enumerate free multisets (and their one-term extensions) by DFS."""
    _check_limits(universe, period, threshold, max_len)
    cdef _Scan state = _Scan(universe, period, threshold, max_len,
                             free_bad_mode, minimal_bad_mode, node_budget)
    cdef int v
    if max_len >= 1:
        for v in range(first_lo, first_hi + 1):
            state._visit(v, 0, 0, 0, True)
    return {
        "nodes": int(state.nodes),
        "free_count_by_len": [state.free_count[i] for i in range(max_len + 1)],
        "minimal_count_by_len": [state.minimal_count[i] for i in range(max_len + 1)],
        "free_bad_by_len": [state.free_bad[i] for i in range(max_len + 1)],
        "minimal_bad_by_len": [state.minimal_bad[i] for i in range(max_len + 1)],
        "free_bad_len": state.free_best_len,
        "free_bad_witnesses": state.free_best,
        "minimal_bad_len": state.minimal_best_len,
        "minimal_bad_witnesses": state.minimal_best,
    }


cdef class _Verify:
    cdef int u, n, threshold, len_lo, len_hi
    cdef bint tail_regime
    cdef long long budget, nodes, seen
    cdef unsigned long long below, nmask
    cdef int depth, ngens
    cdef int stack[MAXDEPTH]
    cdef int ds[MAXDEPTH]
    cdef int dtab[MAXUNIV * MAXUNIV]
    cdef list violations

    def __cinit__(self, int universe, int period, int threshold, bint tail_regime,
                  int len_lo, int len_hi, long long node_budget):
        cdef int gi, e, m
        self.u = universe
        self.n = period
        self.threshold = threshold
        self.tail_regime = tail_regime
        self.len_lo = len_lo
        self.len_hi = len_hi
        self.budget = node_budget
        self.below = (ONE << threshold) - 2
        self.nmask = (ONE << period) - 1
        self.nodes = 0
        self.seen = 0
        self.depth = 0
        self.violations = []
        self.ngens = 0
        if not tail_regime:
            gens = [g for g in range(1, period) if gcd(g, period) == 1]
            self.ngens = len(gens)
            for gi, g in enumerate(gens):
                inv = pow(g, -1, period)
                for e in range(1, universe + 1):
                    m = (e * inv) % period
                    self.dtab[gi * MAXUNIV + e] = m if m else period

    cdef object _stack_tuple(self):
        cdef int j
        return tuple([self.stack[j] for j in range(self.depth)])

    cdef bint _condition(self, int total, bint smooth) noexcept:
        cdef int gi, j, i, x, dsum, reach
        cdef bint ok
        if self.tail_regime:
            return smooth and total <= self.threshold - 1
        for gi in range(self.ngens):
            dsum = 0
            for j in range(self.depth):
                x = self.dtab[gi * MAXUNIV + self.stack[j]]
                i = j
                while i > 0 and self.ds[i - 1] > x:
                    self.ds[i] = self.ds[i - 1]
                    i -= 1
                self.ds[i] = x
                dsum += x
            if dsum >= self.n:
                continue
            reach = 0
            ok = True
            for j in range(self.depth):
                if self.ds[j] > reach + 1:
                    ok = False
                    break
                reach += self.ds[j]
            if ok:
                return True
        return False

    cdef int _visit(self, int v, unsigned long long exact, unsigned long long high,
                    int total, bint smooth) except -1:
        cdef unsigned long long shifted, over
        cdef int d, t, w, depth
        cdef bint free
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetError(
                f"enumeration aborted: visited multisets exceed the node budget {self.budget}")
        shifted = (exact << v) | (ONE << v)
        if high:
            d = v % self.n
            high |= ((high << d) | (high >> (self.n - d))) & self.nmask
        over = shifted >> self.threshold
        while over:
            t = _ctz(over)
            high |= ONE << ((self.threshold + t) % self.n)
            over &= over - 1
        exact = (exact | shifted) & self.below
        total += v
        smooth = smooth and v <= 1 + (total - v)
        self.stack[self.depth] = v
        self.depth += 1
        depth = self.depth
        if depth >= self.len_lo:
            self.seen += 1
            free = (high & 1) == 0
            if free != self._condition(total, smooth):
                self.violations.append(self._stack_tuple())
        if depth < self.len_hi:
            for w in range(v, self.u + 1):
                self._visit(w, exact, high, total, smooth)
        self.depth -= 1
        return 0


def verify_window(int universe, int period, int threshold, bint tail_regime,
                  int len_lo, int len_hi, int first_lo, int first_hi,
                  long long node_budget):
    """Check free <=> smooth-structure over all multisets in a length window."""
    _check_limits(universe, period, threshold, len_hi)
    cdef _Verify state = _Verify(universe, period, threshold, tail_regime,
                                 len_lo, len_hi, node_budget)
    cdef int v
    if len_hi >= 1:
        for v in range(first_lo, first_hi + 1):
            state._visit(v, 0, 0, 0, True)
    return {
        "nodes": int(state.nodes),
        "total": int(state.seen),
        "violations": state.violations,
    }
