"""Incremental bucket-array evaluation across the candidate scenarios of
one pivot vertex.

Setting: a pivot has region-neighbors u_1..u_h ordered by their all-hi
keys nonincreasing.  Under candidate j the first j neighbors carry their
all-hi key (plus[k]) and the rest their all-lo key (minus[k]); an
optional set of static keys (the fixed key of the neighbor toward the
query vertex) never changes.  We need the postal-model broadcast value

    val[j] = max over the key multiset, sorted, of (position * rho + key)

for every j = h..1.  Rebuilding buckets per j costs O(h^2); this engine
walks j downward, moving exactly one key per step (u_{j+1} drops from its
all-hi bucket tau_{j+1} into the bucket of its all-lo key, written lhat),
and maintains:

  * per-bucket size and minimum key (only the two touched buckets change);
  * the `succ` list: the right-to-left record buckets past the current
    tau bucket, i.e. those whose min_v(l) + acc(l)*rho dominates every
    bucket at or after them, stored as indices in an OrderedIndex so the
    neighbor of a touched bucket is found in O(log log h);
  * per-member Delta corrections: the member's current acc-gap to its
    predecessor in {tau} + succ, minus the same gap under the initial
    (all-hi) reference bucket array, so current acc values are never
    stored and a step costs O(1) amortized list surgery (Stages 1-4);
  * a static prefix-maximum table for everything before the tau bucket,
    which never changes once tau has moved past it.

val[j] is then the max of the prefix record, the tau bucket itself, and
the first succ member.  Keys whose offset from the anchor reaches
(number of keys) * rho sit in no bucket and can never realize the max
while the anchor key is present; in particular all j >= h' (the last j
whose all-hi key is bucketed) share the initial value.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ordered_index import OrderedIndex

_INF = None  # bucket minima use None as +infinity


@dataclass(frozen=True)
class SuccState:
    """Snapshot of the maintained state right after reaching candidate j."""

    j: int
    tau: int                  # bucket of u_j under candidate j
    succ: tuple               # record-bucket indices sigma_{j,1..q}, increasing
    delta: tuple              # Delta_{j,1..q}: acc-gap corrections vs the reference
    pred_pos: int | None      # bucket index realizing the prefix maximum before tau
    pred_val: int | None      # that prefix maximum value
    cnt: tuple                # bucket sizes under candidate j (1-based, cnt[0] unused)
    min_v: tuple              # bucket minima under candidate j (None = empty)
    value: int                # val[j]


class EvolvingBuckets:
    """See module docstring.  plus/minus are aligned, plus nonincreasing,
    minus[k] <= plus[k]; statics is a (possibly empty) list of fixed keys;
    rho must be positive."""

    def __init__(self, plus, minus, statics, rho: int):
        assert rho > 0
        h = len(plus)
        H = h + len(statics)
        anchor = plus[0] if not statics else max(plus[0], max(statics))
        limit = H * rho
        self.h = h
        self.H = H
        self.rho = rho
        self.anchor = anchor
        self.plus = plus
        self.minus = minus
        self.stage_hits = {}

        def bucket_of(key):
            off = anchor - key
            return off // rho + 1 if off < limit else 0  # 0 = out of buckets

        self.bucket_of = bucket_of
        # tau_k: bucket of u_k's all-hi key; a prefix of 1..h is bucketed.
        tau = [bucket_of(k) for k in plus]
        hprime = 0
        for k in range(h):
            if tau[k] == 0:
                break
            hprime = k + 1
        self.tau = tau
        self.hprime = hprime

        cnt = [0] * (H + 2)
        static_min = [_INF] * (H + 2)
        minus_min = [_INF] * (H + 2)
        minv = [_INF] * (H + 2)
        for k in range(hprime):
            b = tau[k]
            cnt[b] += 1
            if minv[b] is None or plus[k] < minv[b]:
                minv[b] = plus[k]
        for sk in statics:
            b = bucket_of(sk)
            if b:
                cnt[b] += 1
                if static_min[b] is None or sk < static_min[b]:
                    static_min[b] = sk
                if minv[b] is None or sk < minv[b]:
                    minv[b] = sk
        acc0 = [0] * (H + 2)
        run = 0
        for b in range(1, H + 1):
            run += cnt[b]
            acc0[b] = run
        self.cnt = cnt
        self.static_min = static_min
        self.minus_min = minus_min
        self.minv = minv
        self.acc0 = acc0

        # Prefix records over the initial values (buckets below the current
        # tau never change afterwards, so this table stays valid).
        p0val = [None] * (H + 2)  # p0val[b] = max record over buckets < b
        p0pos = [None] * (H + 2)
        best = None
        bestpos = None
        for b in range(1, H + 2):
            p0val[b] = best
            p0pos[b] = bestpos
            if b <= H and cnt[b]:
                v = minv[b] + acc0[b] * rho
                if best is None or v > best:
                    best, bestpos = v, b
        self.p0val = p0val
        self.p0pos = p0pos

        init_val = 0
        for b in range(1, H + 1):
            if cnt[b]:
                v = minv[b] + acc0[b] * rho
                if v > init_val:
                    init_val = v
        # All candidates at or past hprime share the initial bucket state.
        self.vals = [None] * (h + 1)
        for j in range(max(hprime, 1), h + 1):
            self.vals[j] = init_val

        # succ members at the starting state: right-to-left records past tau.
        self.queue = OrderedIndex(max(H, 1))
        self.delta = [0] * (H + 2)
        if hprime >= 1:
            t0 = tau[hprime - 1]
            runmax = None
            for b in range(H, t0, -1):
                if cnt[b]:
                    v = minv[b] + acc0[b] * rho
                    if runmax is None or v >= runmax:
                        self.queue.insert(b)
                        self.delta[b] = 0
                        runmax = v

    # -------------------------------------------------------------- #

    def _hit(self, name):
        self.stage_hits[name] = self.stage_hits.get(name, 0) + 1

    def _plus_min_at(self, b, j):
        """Smallest all-hi key still in bucket b at state j, or None.
        Only valid for b >= tau_j (the buckets ever touched): the k with
        tau_k == b form an interval, keys are nonincreasing in k, so the
        minimum over the remaining prefix k <= j is plus[j-1] exactly when
        u_j itself sits in b; for b > tau_j every such k exceeds j."""
        if j >= 1 and self.tau[j - 1] == b:
            return self.plus[j - 1]
        return None

    def _recompute_min(self, b, j):
        cands = []
        pm = self._plus_min_at(b, j)
        if pm is not None:
            cands.append(pm)
        if self.minus_min[b] is not None:
            cands.append(self.minus_min[b])
        if self.static_min[b] is not None:
            cands.append(self.static_min[b])
        self.minv[b] = min(cands) if cands else None

    def run(self, record: bool = False):
        """Fill vals[1..h]; optionally record SuccState snapshots per j."""
        states = []
        if record and self.hprime >= 1:
            states.append(self._snapshot(self.hprime))
        for j in range(self.hprime - 1, 0, -1):
            self._transition(j)
            self.vals[j] = self._evaluate(j)
            if record:
                states.append(self._snapshot(j))
        self.states = states if record else None
        return self.vals

    # -------------------------------------------------------------- #

    def _transition(self, j):
        """Move from candidate j+1 to candidate j: u_{j+1} swaps its all-hi
        key (bucket t1 = tau_{j+1}) for its all-lo key (bucket lhat)."""
        rho = self.rho
        acc0 = self.acc0
        delta = self.delta
        queue = self.queue
        minv = self.minv
        kflip = j + 1
        t1 = self.tau[kflip - 1]
        tj = self.tau[j - 1]
        mk = self.minus[kflip - 1]
        lhat = self.bucket_of(mk)

        # bucket content updates
        self.cnt[t1] -= 1
        if lhat:
            self.cnt[lhat] += 1
            if self.minus_min[lhat] is None or mk < self.minus_min[lhat]:
                self.minus_min[lhat] = mk
        self._recompute_min(t1, j)
        if lhat and lhat != t1:
            self._recompute_min(lhat, j)

        if lhat != t1 and lhat:
            # Stage 1: members past lhat keep their gaps; nothing to do.
            f1 = queue.successor(lhat) if lhat < self.H else None
            bprev = queue.predecessor(lhat)
            was_member = lhat in queue
            base = bprev if bprev is not None else t1

            # Stage 2: does bucket lhat (now nonempty) dominate the tail?
            if f1 is None:
                self._hit("s2_auto_join" if not was_member else "s2_auto_keep")
                if was_member:
                    delta[lhat] += 1
                else:
                    queue.insert(lhat)
                    delta[lhat] = 1 - (acc0[lhat] - acc0[base])
                front = lhat
            else:
                pm = lhat if was_member else base
                joins = (minv[lhat] + acc0[pm] * rho
                         >= minv[f1] + (acc0[f1] + delta[f1]) * rho)
                if joins:
                    self._hit("s2_join_member" if was_member else "s2_join_new")
                    delta[f1] += acc0[lhat] - acc0[pm]
                    if was_member:
                        delta[lhat] += 1
                    else:
                        queue.insert(lhat)
                        delta[lhat] = 1 - (acc0[lhat] - acc0[base])
                    front = lhat
                else:
                    self._hit("s2_drop_member" if was_member else "s2_drop_new")
                    if was_member:
                        queue.delete(lhat)
                        delta[f1] += 1 + delta[lhat]
                    else:
                        delta[f1] += 1
                    front = f1

            # Stage 3: old members between tau_{j+1} and lhat, tested
            # top-down against the new front; failures are deleted.
            nab = delta[front]
            w = queue.predecessor(lhat)
            while w is not None and w > t1:
                keep = (minv[w] + acc0[w] * rho
                        >= nab * rho + minv[front] + acc0[front] * rho)
                if keep:
                    self._hit("s3_keep")
                    break
                self._hit("s3_drop")
                nab += delta[w]
                prev = queue.predecessor(w)
                queue.delete(w)
                w = prev
            delta[front] = nab
        elif lhat == 0:
            self._hit("out_of_buckets")
        else:
            self._hit("same_bucket")

        # Stage 4: the tau bucket moves from t1 down to tj, exposing the
        # range (tj, t1] to succ membership.  With only dynamic keys the
        # range holds nothing but t1 (sorted keys cannot fall strictly
        # between consecutive tau buckets), but a static key's bucket can
        # sit there, so walk the whole range.  Every bucket strictly
        # below t1 in the range is untouched since the initial state and
        # bucket tj is pristine, which yields absolute acc values; the
        # ranges are disjoint across steps, so the walk costs O(1)
        # amortized.  Finally the head's Delta is rebased from t1 to tj.
        if tj < t1:
            acc_run = acc0[tj]
            exposed = []  # (bucket, absolute acc under candidate j), ascending
            for l in range(tj + 1, t1 + 1):
                c = self.cnt[l]
                if c:
                    acc_run += c
                    exposed.append((l, acc_run))
            acc_t1 = acc_run
            head = queue.min()
            abs_head = None if head is None else (
                acc_t1 + (acc0[head] - acc0[t1]) + delta[head])
            for l, accl in reversed(exposed):
                if head is None or (
                        minv[l] + accl * rho >= minv[head] + abs_head * rho):
                    self._hit("s4_join" if head is not None else "s4_first")
                    queue.insert(l)
                    if head is not None:
                        delta[head] = (abs_head - accl) - (acc0[head] - acc0[l])
                    head = l
                    abs_head = accl
                else:
                    self._hit("s4_drop")
            if head is not None:
                delta[head] = (abs_head - acc0[tj]) - (acc0[head] - acc0[tj])
        else:
            self._hit("s4_skip")

    def _acc_at_tau(self, j):
        tj = self.tau[j - 1]
        return self.acc0[tj - 1] + self.cnt[tj]

    def _evaluate(self, j):
        rho = self.rho
        tj = self.tau[j - 1]
        acc_tau = self._acc_at_tau(j)
        best = self.minv[tj] + acc_tau * rho
        pv = self.p0val[tj]
        if pv is not None and pv > best:
            best = pv
        head = self.queue.min()
        if head is not None:
            acc_head = acc_tau + (self.acc0[head] - self.acc0[tj]) + self.delta[head]
            v = self.minv[head] + acc_head * rho
            if v > best:
                best = v
        return best

    def _snapshot(self, j):
        succ = []
        b = self.queue.min()
        while b is not None:
            succ.append(b)
            b = self.queue.successor(b)
        tj = self.tau[j - 1]
        return SuccState(
            j=j,
            tau=tj,
            succ=tuple(succ),
            delta=tuple(self.delta[b] for b in succ),
            pred_pos=self.p0pos[tj],
            pred_val=self.p0val[tj],
            cnt=tuple(self.cnt[: self.H + 1]),
            min_v=tuple(self.minv[: self.H + 1]),
            value=self.vals[j],
        )


# ------------------------------------------------------------------ #
# From-scratch references (test oracles for the incremental engine)   #
# ------------------------------------------------------------------ #

def buckets_from_scratch(plus, minus, statics, rho, j):
    """Bucket sizes and minima for candidate j, built directly from the
    definition (anchor fixed by the all-hi state).  Returns (cnt, minv,
    acc) as 1-based lists over buckets 1..H."""
    h = len(plus)
    H = h + len(statics)
    anchor = plus[0] if not statics else max(plus[0], max(statics))
    limit = H * rho
    keys = [plus[k] if k < j else minus[k] for k in range(h)] + list(statics)
    cnt = [0] * (H + 2)
    minv = [None] * (H + 2)
    for k in keys:
        off = anchor - k
        if off >= limit:
            continue
        b = off // rho + 1
        cnt[b] += 1
        if minv[b] is None or k < minv[b]:
            minv[b] = k
    acc = [0] * (H + 2)
    run = 0
    for b in range(1, H + 1):
        run += cnt[b]
        acc[b] = run
    return cnt, minv, acc


def succ_from_scratch(plus, minus, statics, rho, j):
    """(tau_j, succ tuple, Delta tuple, value) for candidate j, computed
    directly from the definitions: succ lists the nonempty buckets past
    tau_j whose min_v + acc*rho dominates every later bucket; Delta is
    the acc-gap between consecutive entries (tau_j first) minus the same
    gap under the all-hi reference state."""
    h = len(plus)
    H = h + len(statics)
    anchor = plus[0] if not statics else max(plus[0], max(statics))
    off = anchor - plus[j - 1]
    tau_j = off // rho + 1 if off < H * rho else 0
    cnt, minv, acc = buckets_from_scratch(plus, minus, statics, rho, j)
    cnt_r, _, acc_r = buckets_from_scratch(plus, minus, statics, rho, h)
    succ = []
    best = None
    for b in range(H, tau_j, -1):
        if cnt[b]:
            v = minv[b] + acc[b] * rho
            if best is None or v >= best:
                succ.append(b)
                best = v
    succ.reverse()
    deltas = []
    prev = tau_j
    for b in succ:
        cur_gap = acc[b] - acc[prev]
        ref_gap = acc_r[b] - acc_r[prev]
        deltas.append(cur_gap - ref_gap)
        prev = b
    value = 0
    for b in range(1, H + 1):
        if cnt[b]:
            v = minv[b] + acc[b] * rho
            if v > value:
                value = v
    return tau_j, tuple(succ), tuple(deltas), value


def values_by_sorting(plus, minus, statics, rho):
    """val[j] for every j by sorting each candidate's keys outright."""
    h = len(plus)
    out = [None] * (h + 1)
    for j in range(1, h + 1):
        keys = sorted(
            [plus[k] for k in range(j)] + [minus[k] for k in range(j, h)] + list(statics),
            reverse=True)
        best = 0
        for i, k in enumerate(keys, start=1):
            v = i * rho + k
            if v > best:
                best = v
        out[j] = best
    return out


def evolve_values(plus, minus, statics, rho):
    """val[j] for j = 1..h (index 0 unused).  Uses the incremental engine
    for rho > 0 and the flat max-key rule for rho = 0."""
    h = len(plus)
    if h == 0:
        return [None]
    if rho == 0:
        smax = max(statics) if statics else None
        suf = [None] * (h + 1)
        run = None
        for k in range(h - 1, -1, -1):
            run = minus[k] if run is None or minus[k] > run else run
            suf[k] = run
        out = [None] * (h + 1)
        for j in range(1, h + 1):
            best = plus[0]
            if j < h and suf[j] > best:
                best = suf[j]
            if smax is not None and smax > best:
                best = smax
            out[j] = best
        return out
    return EvolvingBuckets(plus, minus, statics, rho).run()
