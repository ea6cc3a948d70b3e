"""Walk geometry on the square and triangular lattices, class predicates,
and the brute-force enumeration oracle.

The oracle is a plain depth-first search with incremental box and
visited-set updates and no memoization; every other counting route in the
package is validated against it.
"""

from __future__ import annotations

from collections import Counter
from enum import Enum
from fractions import Fraction

# square steps, encoded 0..3: N, E, S, W (clockwise)
SQ_STEP_VECTORS = ((0, 1), (1, 0), (0, -1), (-1, 0))
SQ_STEP_NAMES = "NESW"

# triangular steps, encoded 0..5 clockwise with NW = 0
TRI_STEP_VECTORS = ((-1, 1), (0, 1), (1, 0), (1, -1), (0, -1), (-1, 0))
TRI_STEP_NAMES = ("NW", "NE", "E", "SE", "SW", "W")


class WalkClass(Enum):
    ONE_SIDED = "1-sided"
    TWO_SIDED = "2-sided"
    THREE_SIDED = "3-sided"
    PRUDENT4 = "4-sided"
    TRIANGULAR = "triangular"

    @property
    def lattice(self):
        return "tri" if self is WalkClass.TRIANGULAR else "square"

    @property
    def sides(self):
        """Number of allowed box edges for the square classes, else None."""
        return {
            WalkClass.ONE_SIDED: 1,
            WalkClass.TWO_SIDED: 2,
            WalkClass.THREE_SIDED: 3,
            WalkClass.PRUDENT4: 4,
        }.get(self)


SQUARE_CLASSES = (
    WalkClass.ONE_SIDED,
    WalkClass.TWO_SIDED,
    WalkClass.THREE_SIDED,
    WalkClass.PRUDENT4,
)


class RectBox:
    """Minimal axis-aligned rectangle containing a square-lattice walk."""

    __slots__ = ("x_min", "x_max", "y_min", "y_max")

    def __init__(self, x_min, x_max, y_min, y_max):
        self.x_min, self.x_max = x_min, x_max
        self.y_min, self.y_max = y_min, y_max

    def __eq__(self, other):
        return (self.x_min, self.x_max, self.y_min, self.y_max) == (
            other.x_min,
            other.x_max,
            other.y_min,
            other.y_max,
        )

    def __repr__(self):
        return "RectBox(x=[%d,%d], y=[%d,%d])" % (
            self.x_min,
            self.x_max,
            self.y_min,
            self.y_max,
        )

    @property
    def width(self):
        return self.x_max - self.x_min

    @property
    def height(self):
        return self.y_max - self.y_min


class TriBox:
    """Minimal North-pointing triangle x >= x_min, y >= y_min, x+y <= s_max."""

    __slots__ = ("x_min", "y_min", "s_max")

    def __init__(self, x_min, y_min, s_max):
        self.x_min, self.y_min, self.s_max = x_min, y_min, s_max

    def __eq__(self, other):
        return (self.x_min, self.y_min, self.s_max) == (
            other.x_min,
            other.y_min,
            other.s_max,
        )

    def __repr__(self):
        return "TriBox(x_min=%d, y_min=%d, s_max=%d)" % (
            self.x_min,
            self.y_min,
            self.s_max,
        )

    @property
    def size(self):
        return self.s_max - self.x_min - self.y_min

    def corners(self):
        """(North, SW, SE) lattice corners."""
        return (
            (self.x_min, self.s_max - self.x_min),
            (self.x_min, self.y_min),
            (self.s_max - self.y_min, self.y_min),
        )


def _parse_square_steps(steps):
    out = []
    for s in steps:
        if isinstance(s, str):
            out.append(SQ_STEP_NAMES.index(s.upper()))
        else:
            if not 0 <= s <= 3:
                raise ValueError("square step code out of range: %r" % (s,))
            out.append(s)
    return tuple(out)


def _parse_tri_steps(steps):
    out = []
    for s in steps:
        if isinstance(s, str):
            if s.upper() in TRI_STEP_NAMES:
                out.append(TRI_STEP_NAMES.index(s.upper()))
            else:
                out.append(int(s))
        else:
            out.append(int(s))
        if not 0 <= out[-1] <= 5:
            raise ValueError("triangular step code out of range: %r" % (s,))
    return tuple(out)


class SquareWalk:
    """Square-lattice walk from the origin, steps over {N, E, S, W}."""

    lattice = "square"

    def __init__(self, steps=()):
        self.steps = _parse_square_steps(steps)

    @classmethod
    def from_text(cls, text):
        return cls(text.strip())

    def to_text(self):
        return "".join(SQ_STEP_NAMES[s] for s in self.steps)

    def to_json(self):
        return {"lattice": "square", "steps": [SQ_STEP_NAMES[s] for s in self.steps]}

    @classmethod
    def from_json(cls, obj):
        return cls(obj["steps"])

    def __len__(self):
        return len(self.steps)

    def __eq__(self, other):
        return isinstance(other, SquareWalk) and self.steps == other.steps

    def __hash__(self):
        return hash(("square", self.steps))

    def __repr__(self):
        return "SquareWalk(%r)" % self.to_text()

    def vertices(self):
        x = y = 0
        out = [(0, 0)]
        for s in self.steps:
            dx, dy = SQ_STEP_VECTORS[s]
            x += dx
            y += dy
            out.append((x, y))
        return out

    def endpoint(self):
        return self.vertices()[-1]

    def box(self):
        vs = self.vertices()
        xs = [p[0] for p in vs]
        ys = [p[1] for p in vs]
        return RectBox(min(xs), max(xs), min(ys), max(ys))


class TriWalk:
    """Triangular-lattice walk from the origin.

    Lattice coordinates: E=(1,0), W=(-1,0), NE=(0,1), SW=(0,-1), NW=(-1,1),
    SE=(1,-1); step codes 0..5 clockwise with NW = 0.
    """

    lattice = "tri"

    def __init__(self, steps=()):
        self.steps = _parse_tri_steps(steps)

    @classmethod
    def from_text(cls, text):
        return cls(list(text.strip()))

    def to_text(self):
        return "".join(str(s) for s in self.steps)

    def to_json(self):
        return {"lattice": "tri", "steps": list(self.steps)}

    @classmethod
    def from_json(cls, obj):
        return cls(obj["steps"])

    def __len__(self):
        return len(self.steps)

    def __eq__(self, other):
        return isinstance(other, TriWalk) and self.steps == other.steps

    def __hash__(self):
        return hash(("tri", self.steps))

    def __repr__(self):
        return "TriWalk(%r)" % self.to_text()

    def vertices(self):
        x = y = 0
        out = [(0, 0)]
        for s in self.steps:
            dx, dy = TRI_STEP_VECTORS[s]
            x += dx
            y += dy
            out.append((x, y))
        return out

    def endpoint(self):
        return self.vertices()[-1]

    def box(self):
        vs = self.vertices()
        return TriBox(
            min(p[0] for p in vs),
            min(p[1] for p in vs),
            max(p[0] + p[1] for p in vs),
        )


def walk_from_json(obj):
    return TriWalk.from_json(obj) if obj["lattice"] == "tri" else SquareWalk.from_json(obj)


# --------------------------------------------------------------------------
# Incremental walk states.  These implement the class definitions directly
# and back both the membership predicates and the brute-force oracle.
# --------------------------------------------------------------------------

class SquareState:
    """Square-lattice walk state with prudence and k-sided step checks.

    k in {1, 2, 3} restricts the (continuous-time) endpoint to the top /
    top+right / top+right+left edges of the instantaneous box; k=None checks
    prudence only (general 4-sided prudent walks).  The continuous rule is
    discretized to a midpoint + endpoint check in doubled coordinates; a
    degenerate box edge counts as all the edges it coincides with.
    """

    def __init__(self, k=None):
        self.k = k
        self.x = self.y = 0
        self.visited = {(0, 0)}
        self.x_min = self.x_max = self.y_min = self.y_max = 0
        self.trail = []

    def __len__(self):
        return len(self.trail)

    def _prudent(self, d):
        x, y = self.x, self.y
        dx, dy = SQ_STEP_VECTORS[d]
        visited = self.visited
        if dx:
            bound = self.x_max if dx > 0 else self.x_min
            xx = x + dx
            while (xx - bound) * dx <= 0:
                if (xx, y) in visited:
                    return False
                xx += dx
        else:
            bound = self.y_max if dy > 0 else self.y_min
            yy = y + dy
            while (yy - bound) * dy <= 0:
                if (x, yy) in visited:
                    return False
                yy += dy
        return True

    def _on_allowed_edge(self, px, py):
        # doubled coordinates; instantaneous box = committed box extended by the point
        bx0 = min(2 * self.x_min, px)
        bx1 = max(2 * self.x_max, px)
        by1 = max(2 * self.y_max, py)
        if py == by1:
            return True
        k = self.k
        if k >= 2 and px == bx1:
            return True
        if k >= 3 and px == bx0:
            return True
        return False

    def legal(self, d):
        if not self._prudent(d):
            return False
        if self.k is not None:
            dx, dy = SQ_STEP_VECTORS[d]
            mx, my = 2 * self.x + dx, 2 * self.y + dy
            if not self._on_allowed_edge(mx, my):
                return False
            if not self._on_allowed_edge(mx + dx, my + dy):
                return False
        return True

    def push(self, d):
        dx, dy = SQ_STEP_VECTORS[d]
        self.trail.append((self.x, self.y, self.x_min, self.x_max, self.y_min, self.y_max))
        self.x += dx
        self.y += dy
        self.visited.add((self.x, self.y))
        self.x_min = min(self.x_min, self.x)
        self.x_max = max(self.x_max, self.x)
        self.y_min = min(self.y_min, self.y)
        self.y_max = max(self.y_max, self.y)

    def pop(self):
        self.visited.discard((self.x, self.y))
        (self.x, self.y, self.x_min, self.x_max, self.y_min, self.y_max) = self.trail.pop()


class TriState:
    """Triangular prudent walk state: each step either strictly inflates the
    box, or keeps it fixed while the step lies along one box edge and points
    at no visited vertex."""

    def __init__(self):
        self.x = self.y = 0
        self.visited = {(0, 0)}
        self.x_min = self.y_min = self.s_max = 0
        self.trail = []

    def __len__(self):
        return len(self.trail)

    def legal(self, d):
        dx, dy = TRI_STEP_VECTORS[d]
        px, py = self.x + dx, self.y + dy
        if px < self.x_min or py < self.y_min or px + py > self.s_max:
            return True  # inflating: the whole forward ray leaves the box
        # box unchanged: both endpoints must share a box edge
        x, y = self.x, self.y
        if not (
            (x == self.x_min and px == self.x_min)
            or (y == self.y_min and py == self.y_min)
            or (x + y == self.s_max and px + py == self.s_max)
        ):
            return False
        # prudence along the edge: scan the forward half-line inside the box
        visited = self.visited
        while self.x_min <= px and self.y_min <= py and px + py <= self.s_max:
            if (px, py) in visited:
                return False
            px += dx
            py += dy
        return True

    def push(self, d):
        dx, dy = TRI_STEP_VECTORS[d]
        self.trail.append((self.x, self.y, self.x_min, self.y_min, self.s_max))
        self.x += dx
        self.y += dy
        self.visited.add((self.x, self.y))
        self.x_min = min(self.x_min, self.x)
        self.y_min = min(self.y_min, self.y)
        self.s_max = max(self.s_max, self.x + self.y)

    def pop(self):
        self.visited.discard((self.x, self.y))
        (self.x, self.y, self.x_min, self.y_min, self.s_max) = self.trail.pop()

    def box(self):
        return TriBox(self.x_min, self.y_min, self.s_max)


def _make_state(walk_class):
    if walk_class is WalkClass.TRIANGULAR:
        return TriState()
    return SquareState(k=walk_class.sides if walk_class.sides != 4 else None)


# --------------------------------------------------------------------------
# Membership predicates
# --------------------------------------------------------------------------

def is_prudent(walk):
    """True iff no step of the square walk points at a visited vertex."""
    state = SquareState(k=None)
    for d in walk.steps:
        if not state.legal(d):
            return False
        state.push(d)
    return True


def is_k_sided(walk, k):
    """True iff the walk is prudent and its continuous-time endpoint stays on
    the k allowed edges (k=1 top, k=2 top+right, k=3 top+right+left)."""
    if k == 4:
        return is_prudent(walk)
    if k not in (1, 2, 3):
        raise ValueError("k must be in 1..4")
    state = SquareState(k=k)
    for d in walk.steps:
        if not state.legal(d):
            return False
        state.push(d)
    return True


def is_triangular_prudent(walk):
    state = TriState()
    for d in walk.steps:
        if not state.legal(d):
            return False
        state.push(d)
    return True


def in_class(walk, walk_class):
    if walk_class is WalkClass.TRIANGULAR:
        return is_triangular_prudent(walk)
    return is_k_sided(walk, walk_class.sides)


# --------------------------------------------------------------------------
# Brute-force oracle
# --------------------------------------------------------------------------

def enumerate_counts(walk_class, n_max):
    """Number of walks of each length 0..n_max in the class (exact, by DFS)."""
    state = _make_state(walk_class)
    ndirs = 6 if walk_class is WalkClass.TRIANGULAR else 4
    counts = [0] * (n_max + 1)
    counts[0] = 1
    dirs = range(ndirs)

    def rec(depth):
        if depth == n_max:
            return
        for d in dirs:
            if state.legal(d):
                state.push(d)
                counts[depth + 1] += 1
                rec(depth + 1)
                state.pop()

    rec(0)
    return counts


def enumerate_walks(walk_class, n):
    """All length-n walks of the class (exhaustive; for small n)."""
    state = _make_state(walk_class)
    ndirs = 6 if walk_class is WalkClass.TRIANGULAR else 4
    make = TriWalk if walk_class is WalkClass.TRIANGULAR else SquareWalk
    out = []
    steps = []

    def rec(depth):
        if depth == n:
            out.append(make(tuple(steps)))
            return
        for d in range(ndirs):
            if state.legal(d):
                state.push(d)
                steps.append(d)
                rec(depth + 1)
                steps.pop()
                state.pop()

    rec(0)
    return out


def enumerate_tri_by_box(k):
    """Triangular prudent walks spanning a box of size exactly k.

    Returns (total, r) where r maps (i, j), i+j = k, to the number of
    spanning walks ending on the right edge at distance i from the North
    corner and j from the SE corner.  Walks of every length are counted;
    the search is confined to boxes of size <= k, hence finite.
    """
    state = TriState()
    total = 0
    r = Counter()

    def visit():
        nonlocal total
        if state.box().size != k:
            return
        total += 1
        if state.x + state.y == state.s_max:  # right edge
            i = state.x - state.x_min
            r[(i, k - i)] += 1

    def rec():
        for d in range(6):
            if not state.legal(d):
                continue
            dx, dy = TRI_STEP_VECTORS[d]
            px, py = state.x + dx, state.y + dy
            s_new = max(state.s_max, px + py)
            if s_new - min(state.x_min, px) - min(state.y_min, py) > k:
                continue
            state.push(d)
            visit()
            rec()
            state.pop()

    visit()
    rec()
    return total, dict(r)


def endpoint_stats(walk_class, n):
    """Exact distributions of endpoint/box statistics over length-n walks.

    Square classes: 'sum' (X+Y), 'diff' (X-Y), 'ne_dist' (distance from the
    endpoint to the NE box corner), 'width'.  Triangular: 'box_size'.
    """
    state = _make_state(walk_class)
    ndirs = 6 if walk_class is WalkClass.TRIANGULAR else 4
    tri = walk_class is WalkClass.TRIANGULAR
    stats = {
        key: Counter()
        for key in (("box_size",) if tri else ("sum", "diff", "ne_dist", "width"))
    }

    def record():
        if tri:
            stats["box_size"][state.s_max - state.x_min - state.y_min] += 1
        else:
            x, y = state.x, state.y
            stats["sum"][x + y] += 1
            stats["diff"][x - y] += 1
            stats["ne_dist"][(state.x_max - x) + (state.y_max - y)] += 1
            stats["width"][state.x_max - state.x_min] += 1

    def rec(depth):
        if depth == n:
            record()
            return
        for d in range(ndirs):
            if state.legal(d):
                state.push(d)
                rec(depth + 1)
                state.pop()

    rec(0)
    return stats


def exact_mean(counter):
    total = sum(counter.values())
    return Fraction(sum(v * c for v, c in counter.items()), total)


def exact_variance(counter):
    mean = exact_mean(counter)
    total = sum(counter.values())
    second = Fraction(sum(v * v * c for v, c in counter.items()), total)
    return second - mean * mean
