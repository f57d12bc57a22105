# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels.

Mirrors `_pure` function-for-function.  Matrices and endpoint components are
64-bit (the init step computes the largest safe word length from the actual
table magnitudes); comparison cross-products use 128-bit intermediates and a
long-double filter whose inconclusive cases fall back to exact big-integer
arithmetic, so results never depend on floating point.
"""

from libc.math cimport fabsl, sqrtl

cdef extern from *:
    ctypedef long long int128 "__int128"

ctypedef long long i64

DEF MAXLEN = 40        # digits per cylinder word
DEF MAXSTACK = 132     # rule-tree depth (3 per definite digit, plus slack)

cdef i64 DISC = 0
cdef long double SQRT_DISC = 0.0
cdef int TRANS[5][4]
cdef i64 SIGMA[6][3]
cdef int STATE_PAIR[5][2]
cdef i64 TYPE_TAILS_C[10][2][3]
cdef int RULE_CHILD_TYPE[10][2]
cdef int RULE_CHILD_EXTLEN[10][2]
cdef int RULE_CHILD_EXT[10][2][6]
cdef int TYPE_EXTLEN[10]
cdef int TYPE_EXT[10][6]
cdef int ROOT[8]
cdef int ROOT_LEN = 0
cdef int MAX_LEN_SAFE = 0

_initialized = False


def init(tables):
    """Load the shared integer tables and derive the safe length bound."""
    global DISC, SQRT_DISC, ROOT_LEN, MAX_LEN_SAFE, _initialized
    DISC = tables["disc"]
    SQRT_DISC = sqrtl(<long double> DISC)
    cdef int s, d, i, j, t
    for s in range(5):
        for d in range(4):
            TRANS[s][d] = tables["transitions"][s][d]
    max_comp = 1
    for i in range(6):
        a, b, c = tables["sigma"][i]
        SIGMA[i][0] = a
        SIGMA[i][1] = b
        SIGMA[i][2] = c
        max_comp = max(max_comp, abs(a) + abs(c), abs(b))
    for s in range(5):
        STATE_PAIR[s][0] = tables["state_post_pair"][s][0]
        STATE_PAIR[s][1] = tables["state_post_pair"][s][1]
    for t, pair in tables["type_tails"].items():
        for j in range(2):
            a, b, c = pair[j]
            TYPE_TAILS_C[t][j][0] = a
            TYPE_TAILS_C[t][j][1] = b
            TYPE_TAILS_C[t][j][2] = c
            max_comp = max(max_comp, abs(a) + abs(c), abs(b))
    for t, kids in tables["rule_children"].items():
        for j in range(2):
            RULE_CHILD_TYPE[t][j] = kids[j][0]
            RULE_CHILD_EXTLEN[t][j] = len(kids[j][1])
            for i, dd in enumerate(kids[j][1]):
                RULE_CHILD_EXT[t][j][i] = dd
    for t, ext in tables["type_ext_digits"].items():
        TYPE_EXTLEN[t] = len(ext)
        for i, dd in enumerate(ext):
            TYPE_EXT[t][i] = dd
    root = tables["root_prefix"]
    ROOT_LEN = len(root)
    for i in range(ROOT_LEN):
        ROOT[i] = root[i]
    # worst-case continuant after L digits (all fours), times the largest
    # tail component, must leave the 128-bit cross products headroom
    limit = 1 << 56
    p_prev, p = 1, 5
    L = 1
    while p * max_comp < limit and L < MAXLEN - 1:
        p, p_prev = 4 * p + p_prev, p
        L += 1
    MAX_LEN_SAFE = L - 1
    _initialized = True


def max_len():
    return MAX_LEN_SAFE


cdef object _int128_to_py(int128 v):
    # Cython treats the typedef as 64-bit for object conversion, so split
    # the halves manually (the C-level shifts are true 128-bit ops)
    cdef bint neg = v < 0
    if neg:
        v = -v
    cdef unsigned long long lo_half = <unsigned long long> (v & <int128> 0xFFFFFFFFFFFFFFFF)
    cdef unsigned long long hi_half = <unsigned long long> (v >> 64)
    obj = ((<object> hi_half) << 64) | (<object> lo_half)
    return -obj if neg else obj


cdef int _sign_radical(int128 x, int128 y) except? -9:
    """Sign of x + y*sqrt(DISC); 0 only when exactly zero."""
    if x == 0 and y == 0:
        return 0
    if x >= 0 and y >= 0:
        return 1
    if x <= 0 and y <= 0:
        return -1
    cdef long double est = (<long double> x) + (<long double> y) * SQRT_DISC
    cdef long double mag = fabsl(<long double> x) + fabsl(<long double> y) * SQRT_DISC
    if fabsl(est) > mag * 1e-15:
        return 1 if est > 0 else -1
    # inconclusive: settle with exact big integers
    xs = _int128_to_py(x)
    ys = _int128_to_py(y)
    lhs = xs * xs
    rhs = ys * ys * (<object> DISC)
    if xs > 0:
        return 1 if lhs > rhs else (-1 if lhs < rhs else 0)
    return 1 if rhs > lhs else (-1 if rhs < lhs else 0)


cdef inline int _cmp_moebius(i64 na1, i64 nb1, i64 da1, i64 db1,
                             i64 na2, i64 nb2, i64 da2, i64 db2) except? -9:
    """Order of (na+nb*sqrt(D))/(da+db*sqrt(D)) pairs, denominators positive."""
    cdef int128 x = (<int128> na1) * da2 - (<int128> na2) * da1 \
        + ((<int128> nb1) * db2 - (<int128> nb2) * db1) * DISC
    cdef int128 y = (<int128> na1) * db2 + (<int128> nb1) * da2 \
        - (<int128> na2) * db1 - (<int128> nb2) * da1
    return _sign_radical(x, y)


cdef class CylinderWalk:
    """Value-ordered DFS over admissible words of one length.

    After a successful `advance`, the leaf word sits in `word[0..length)`
    and the endpoint components in lo/hi arrays."""

    cdef int length
    cdef int pos                 # digits placed
    cdef bint exhausted
    cdef int word[MAXLEN]
    cdef int state[MAXLEN]       # automaton state after digit i
    cdef i64 m[MAXLEN][4]        # moebius matrix after digit i
    cdef int cursor[MAXLEN]      # next digit-order index to try at level i
    cdef i64 lo[4]
    cdef i64 hi[4]
    cdef int parent_state
    cdef i64 pm[4]               # matrix one digit up (parent cylinder)

    def __cinit__(self, int length):
        if not _initialized:
            raise RuntimeError("kernel tables not initialized")
        if length > MAX_LEN_SAFE:
            raise ValueError(f"length {length} beyond compiled-kernel bound {MAX_LEN_SAFE}")
        self.length = length
        self.exhausted = length < ROOT_LEN
        cdef int i, s = 0
        cdef i64 a, b, c, d
        a, b, c, d = 1, 0, 0, 1
        for i in range(ROOT_LEN):
            self.word[i] = ROOT[i]
            s = TRANS[s][ROOT[i] - 1]
            a, b, c, d = a * ROOT[i] + b, a, c * ROOT[i] + d, c
            self.state[i] = s
            self.m[i][0] = a; self.m[i][1] = b; self.m[i][2] = c; self.m[i][3] = d
        self.pos = ROOT_LEN
        self.cursor[self.pos] = 0
        if length == ROOT_LEN:
            # single leaf: the root word itself
            self.pos = length

    cdef inline void _emit(self):
        cdef int s = self.state[self.length - 1]
        cdef i64* mm = self.m[self.length - 1]
        cdef int ia = STATE_PAIR[s][0]
        cdef int ib = STATE_PAIR[s][1]
        cdef bint flip = self.length & 1
        cdef int lo_i = ib if flip else ia
        cdef int hi_i = ia if flip else ib
        cdef i64 a = SIGMA[lo_i][0], b = SIGMA[lo_i][1], c = SIGMA[lo_i][2]
        self.lo[0] = mm[0] * a + mm[1] * c
        self.lo[1] = mm[0] * b
        self.lo[2] = mm[2] * a + mm[3] * c
        self.lo[3] = mm[2] * b
        a = SIGMA[hi_i][0]; b = SIGMA[hi_i][1]; c = SIGMA[hi_i][2]
        self.hi[0] = mm[0] * a + mm[1] * c
        self.hi[1] = mm[0] * b
        self.hi[2] = mm[2] * a + mm[3] * c
        self.hi[3] = mm[2] * b
        if self.length > ROOT_LEN:
            self.parent_state = self.state[self.length - 2]
            self.pm[0] = self.m[self.length - 2][0]
            self.pm[1] = self.m[self.length - 2][1]
            self.pm[2] = self.m[self.length - 2][2]
            self.pm[3] = self.m[self.length - 2][3]

    cdef bint advance(self):
        """Move to the next leaf; False when the walk is done."""
        cdef int pos = self.pos
        cdef int d, s, cur
        cdef i64 a, b, c, dd
        if self.exhausted:
            return False
        if pos == self.length:
            if self.length == ROOT_LEN:
                # root-only walk yields exactly one leaf
                if self.cursor[ROOT_LEN] == 0:
                    self.cursor[ROOT_LEN] = 1
                    self._emit()
                    return True
                self.exhausted = True
                return False
            pos -= 1  # step back off the previous leaf
        while True:
            cur = self.cursor[pos]
            while cur < 4:
                if pos & 1:
                    d = 4 - cur
                else:
                    d = cur + 1
                cur += 1
                s = TRANS[self.state[pos - 1]][d - 1]
                if s >= 0:
                    self.cursor[pos] = cur
                    self.word[pos] = d
                    self.state[pos] = s
                    a = self.m[pos - 1][0]; b = self.m[pos - 1][1]
                    c = self.m[pos - 1][2]; dd = self.m[pos - 1][3]
                    self.m[pos][0] = a * d + b
                    self.m[pos][1] = a
                    self.m[pos][2] = c * d + dd
                    self.m[pos][3] = c
                    pos += 1
                    if pos == self.length:
                        self.pos = pos
                        self._emit()
                        return True
                    self.cursor[pos] = 0
                    cur = 0
                    break
            else:
                self.cursor[pos] = cur
                pos -= 1
                if pos < ROOT_LEN:
                    self.exhausted = True
                    self.pos = pos
                    return False

    cdef tuple word_tuple(self):
        cdef int i
        return tuple([self.word[i] for i in range(self.length)])

    cdef tuple lo_tuple(self):
        return (self.lo[0], self.lo[1], self.lo[2], self.lo[3])

    cdef tuple hi_tuple(self):
        return (self.hi[0], self.hi[1], self.hi[2], self.hi[3])


cdef class RuleWalk:
    """Subdivision-tree DFS in value order, stopping at the first node whose
    definite word reaches `word_len`."""

    cdef int word_len
    cdef bint exhausted
    cdef int depth                   # stack depth
    cdef int tid[MAXSTACK]
    cdef int plen[MAXSTACK]          # prefix length of the node
    cdef int level[MAXSTACK]         # tree level of the node
    cdef int cursor[MAXSTACK]        # next child index (0..2) to try
    cdef i64 m[MAXSTACK][4]          # prefix matrix of the node
    cdef int prefix[MAXSTACK]
    # leaf outputs
    cdef int leaf_level, leaf_type, leaf_wordlen
    cdef int leaf_word[MAXSTACK]
    cdef i64 lo[4]
    cdef i64 hi[4]

    def __cinit__(self, int word_len):
        if not _initialized:
            raise RuntimeError("kernel tables not initialized")
        if word_len > MAX_LEN_SAFE:
            raise ValueError(f"word_len {word_len} beyond compiled-kernel bound {MAX_LEN_SAFE}")
        self.word_len = word_len
        self.exhausted = word_len < ROOT_LEN
        cdef int i
        cdef i64 a, b, c, d
        a, b, c, d = 1, 0, 0, 1
        for i in range(ROOT_LEN):
            self.prefix[i] = ROOT[i]
            a, b, c, d = a * ROOT[i] + b, a, c * ROOT[i] + d, c
        self.depth = 1
        self.tid[0] = 1
        self.plen[0] = ROOT_LEN
        self.level[0] = 0
        self.cursor[0] = 0
        self.m[0][0] = a; self.m[0][1] = b; self.m[0][2] = c; self.m[0][3] = d

    cdef inline void _emit(self, int node):
        cdef int t = self.tid[node]
        cdef int pl = self.plen[node]
        cdef i64* mm = self.m[node]
        cdef bint flip = pl & 1
        cdef int lo_j = 1 if flip else 0
        cdef int hi_j = 0 if flip else 1
        cdef i64 a = TYPE_TAILS_C[t][lo_j][0]
        cdef i64 b = TYPE_TAILS_C[t][lo_j][1]
        cdef i64 c = TYPE_TAILS_C[t][lo_j][2]
        self.lo[0] = mm[0] * a + mm[1] * c
        self.lo[1] = mm[0] * b
        self.lo[2] = mm[2] * a + mm[3] * c
        self.lo[3] = mm[2] * b
        a = TYPE_TAILS_C[t][hi_j][0]
        b = TYPE_TAILS_C[t][hi_j][1]
        c = TYPE_TAILS_C[t][hi_j][2]
        self.hi[0] = mm[0] * a + mm[1] * c
        self.hi[1] = mm[0] * b
        self.hi[2] = mm[2] * a + mm[3] * c
        self.hi[3] = mm[2] * b
        self.leaf_level = self.level[node]
        self.leaf_type = t
        self.leaf_wordlen = pl + TYPE_EXTLEN[t]
        cdef int i
        for i in range(pl):
            self.leaf_word[i] = self.prefix[i]
        for i in range(TYPE_EXTLEN[t]):
            self.leaf_word[pl + i] = TYPE_EXT[t][i]

    cdef bint advance(self) except? 0:
        cdef int node, t, pl, cur, j, ct, el, i, definite
        cdef i64 a, b, c, d, dd
        if self.exhausted:
            return False
        while True:
            if self.depth == 0:
                self.exhausted = True
                return False
            node = self.depth - 1
            t = self.tid[node]
            pl = self.plen[node]
            definite = pl + TYPE_EXTLEN[t]
            if definite == self.word_len and self.cursor[node] == 0:
                self.cursor[node] = 3  # mark emitted; pop on resume
                self._emit(node)
                return True
            if definite == self.word_len:
                self.depth -= 1
                continue
            if definite > self.word_len:
                raise AssertionError("definite length skipped the target")
            cur = self.cursor[node]
            if cur >= 2:
                self.depth -= 1
                continue
            self.cursor[node] = cur + 1
            # children in value order: rule order iff prefix length even
            if pl & 1:
                j = 1 - cur
            else:
                j = cur
            ct = RULE_CHILD_TYPE[t][j]
            el = RULE_CHILD_EXTLEN[t][j]
            a = self.m[node][0]; b = self.m[node][1]
            c = self.m[node][2]; d = self.m[node][3]
            for i in range(el):
                dd = RULE_CHILD_EXT[t][j][i]
                self.prefix[pl + i] = <int> dd
                a, b, c, d = a * dd + b, a, c * dd + d, c
            self.tid[self.depth] = ct
            self.plen[self.depth] = pl + el
            self.level[self.depth] = self.level[node] + 1
            self.cursor[self.depth] = 0
            self.m[self.depth][0] = a; self.m[self.depth][1] = b
            self.m[self.depth][2] = c; self.m[self.depth][3] = d
            self.depth += 1

    cdef tuple word_tuple(self):
        cdef int i
        return tuple([self.leaf_word[i] for i in range(self.leaf_wordlen)])

    cdef tuple lo_tuple(self):
        return (self.lo[0], self.lo[1], self.lo[2], self.lo[3])

    cdef tuple hi_tuple(self):
        return (self.hi[0], self.hi[1], self.hi[2], self.hi[3])


def iter_cylinders(int length):
    """Materializing counterpart of the pure generator (same tuples)."""
    cdef CylinderWalk walk = CylinderWalk(length)
    out = []
    while walk.advance():
        out.append((walk.word_tuple(), walk.lo_tuple(), walk.hi_tuple()))
    return out


def iter_rule_leaves(int word_len):
    cdef RuleWalk walk = RuleWalk(word_len)
    out = []
    while walk.advance():
        out.append((walk.word_tuple(), walk.leaf_level, walk.leaf_type,
                    walk.lo_tuple(), walk.hi_tuple()))
    return out


def scan_cylinders(int length):
    cdef CylinderWalk walk = CylinderWalk(length)
    cdef long long count = 0
    cdef bint have_prev = False
    cdef i64 prev_hi[4]
    violations = []
    first_lo = None
    last_hi = None
    while walk.advance():
        if _cmp_moebius(walk.lo[0], walk.lo[1], walk.lo[2], walk.lo[3],
                        walk.hi[0], walk.hi[1], walk.hi[2], walk.hi[3]) >= 0:
            violations.append(("degenerate", walk.word_tuple()))
        if have_prev and _cmp_moebius(prev_hi[0], prev_hi[1], prev_hi[2], prev_hi[3],
                                      walk.lo[0], walk.lo[1], walk.lo[2], walk.lo[3]) >= 0:
            if len(violations) < 20:
                violations.append(("overlap", walk.word_tuple()))
        if first_lo is None:
            first_lo = walk.lo_tuple()
        prev_hi[0] = walk.hi[0]; prev_hi[1] = walk.hi[1]
        prev_hi[2] = walk.hi[2]; prev_hi[3] = walk.hi[3]
        have_prev = True
        last_hi = walk.hi_tuple()
        count += 1
    return {"length": length, "count": count, "violations": violations,
            "first_lo": first_lo, "last_hi": last_hi}


def scan_nested(int length):
    """Containment of each leaf in its parent cylinder, read off the stack
    one frame up; the childless count mirrors the pure streaming check."""
    cdef CylinderWalk walk = CylinderWalk(length)
    cdef long long count = 0
    cdef int childless = 0
    violations = []
    cdef int ps, ia, ib, lo_i, hi_i
    cdef i64 pa, pb, pc2, pd2
    cdef i64 plo[4]
    cdef i64 phi[4]
    while walk.advance():
        count += 1
        ps = walk.parent_state
        ia = STATE_PAIR[ps][0]
        ib = STATE_PAIR[ps][1]
        if (length - 1) & 1:
            lo_i = ib; hi_i = ia
        else:
            lo_i = ia; hi_i = ib
        pa = SIGMA[lo_i][0]; pb = SIGMA[lo_i][1]; pc2 = SIGMA[lo_i][2]
        plo[0] = walk.pm[0] * pa + walk.pm[1] * pc2
        plo[1] = walk.pm[0] * pb
        plo[2] = walk.pm[2] * pa + walk.pm[3] * pc2
        plo[3] = walk.pm[2] * pb
        pa = SIGMA[hi_i][0]; pb = SIGMA[hi_i][1]; pc2 = SIGMA[hi_i][2]
        phi[0] = walk.pm[0] * pa + walk.pm[1] * pc2
        phi[1] = walk.pm[0] * pb
        phi[2] = walk.pm[2] * pa + walk.pm[3] * pc2
        phi[3] = walk.pm[2] * pb
        if (_cmp_moebius(plo[0], plo[1], plo[2], plo[3],
                         walk.lo[0], walk.lo[1], walk.lo[2], walk.lo[3]) > 0
                or _cmp_moebius(walk.hi[0], walk.hi[1], walk.hi[2], walk.hi[3],
                                phi[0], phi[1], phi[2], phi[3]) > 0):
            if len(violations) < 20:
                violations.append(("outside-parent", walk.word_tuple()))
    # every admissible parent word must admit a continuation
    cdef CylinderWalk parents = CylinderWalk(length - 1)
    cdef int s, d2
    cdef bint any_child
    while parents.advance():
        s = parents.state[length - 2]
        any_child = False
        for d2 in range(4):
            if TRANS[s][d2] >= 0:
                any_child = True
                break
        if not any_child:
            childless += 1
    return {"length": length, "count": count, "violations": violations,
            "childless_parents": childless}


def containment_scan(int word_len):
    cdef RuleWalk rules = RuleWalk(word_len)
    cdef CylinderWalk oracle = CylinderWalk(word_len)
    cdef long long count = 0
    cdef int max_level = 0
    cdef bint oracle_alive
    cdef int i, same
    violations = []
    while rules.advance():
        oracle_alive = oracle.advance()
        count += 1
        if rules.leaf_level > max_level:
            max_level = rules.leaf_level
        if not oracle_alive:
            violations.append(("engine-extra", rules.word_tuple()))
            break
        same = 1
        if rules.leaf_wordlen != word_len:
            same = 0
        else:
            for i in range(word_len):
                if rules.leaf_word[i] != oracle.word[i]:
                    same = 0
                    break
        if not same:
            violations.append(("word-mismatch", rules.word_tuple(), oracle.word_tuple()))
            break
        if (_cmp_moebius(rules.lo[0], rules.lo[1], rules.lo[2], rules.lo[3],
                         oracle.lo[0], oracle.lo[1], oracle.lo[2], oracle.lo[3]) != 0
                or _cmp_moebius(rules.hi[0], rules.hi[1], rules.hi[2], rules.hi[3],
                                oracle.hi[0], oracle.hi[1], oracle.hi[2], oracle.hi[3]) != 0):
            if len(violations) < 20:
                violations.append(("endpoint-mismatch", rules.word_tuple()))
    if oracle.advance():
        violations.append(("oracle-extra",))
    return {"word_len": word_len, "count": count, "violations": violations,
            "max_stop_level": max_level}
