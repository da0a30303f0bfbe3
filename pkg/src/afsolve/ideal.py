"""Two-phase ideal extension computation.

Phase one determines which arguments are credulously accepted (member of some
complete extension) and which are attacked by those.  Phase two starts from
the accepted-but-unattacked arguments and shrinks to the defended ones until
the set is a fixed point; the result is the unique ideal extension.
"""

from dataclasses import dataclass

from .framework import ArgumentationFramework, bits
from .kernel import find_complete


@dataclass(frozen=True)
class CredulousProfile:
    """Union of all complete extensions and the arguments it attacks."""

    cred_in: int
    cred_attacked: int


def credulous_profile(af: ArgumentationFramework) -> CredulousProfile:
    """Per-argument credulous tests with positive caching: every extension
    found marks all of its members accepted at once."""
    cred = 0
    for a in range(af.n):
        bit = 1 << a
        if cred & bit:
            continue
        leaf = find_complete(af, force_in=bit)
        if leaf is not None:
            cred |= leaf[0]
    return CredulousProfile(cred, af.attacked_set(cred))


def ideal_extension(af: ArgumentationFramework) -> int:
    """The unique ideal extension.

    Starts from the credulously-accepted, unattacked arguments and repeatedly
    drops members not defended by the current set; the loop shrinks, so it
    terminates within n rounds.
    """
    profile = credulous_profile(af)
    x = profile.cred_in & ~profile.cred_attacked
    while True:
        x_plus = af.attacked_set(x)
        nxt = 0
        for a in bits(x):
            if af.attackers[a] & ~x_plus == 0:
                nxt |= 1 << a
        if nxt == x:
            return x
        x = nxt
