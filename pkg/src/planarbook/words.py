"""
Free group word helpers.

Words are tuples of nonzero integers; the letter ``-j`` is the inverse
of ``j``.  Nothing here knows about surfaces.
"""


def invert(word):
    return tuple(-a for a in reversed(word))


def free_reduce(word):
    out = []
    for a in word:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def cyclic_reduce(word):
    w = free_reduce(word)
    i, j = 0, len(w)
    while j - i >= 2 and w[i] == -w[j - 1]:
        i += 1
        j -= 1
    return w[i:j]


def rotations(word):
    return [word[k:] + word[:k] for k in range(len(word))] or [()]


def canonical_cyclic(word):
    """Least rotation of the cyclically reduced word or of its inverse."""
    w = cyclic_reduce(word)
    if not w:
        return ()
    return min(rotations(w) + rotations(invert(w)))


def is_proper_power(word):
    n = len(word)
    for d in range(1, n):
        if n % d == 0 and word[d:] + word[:d] == word:
            return True
    return False


def power_of(word, base):
    """Return k with ``word == base**k`` as plain words, or None."""
    if not base:
        raise ValueError("empty base")
    if not word:
        return 0
    n = len(base)
    if len(word) % n:
        return None
    k = len(word) // n
    if word == base * k:
        return k
    inv = invert(base)
    if word == inv * k:
        return -k
    return None


def substitute(word, images):
    """Apply the homomorphism sending generator ``j`` to ``images[j]``."""
    out = []
    for a in word:
        img = images[abs(a)]
        out.extend(img if a > 0 else invert(img))
    return free_reduce(out)
