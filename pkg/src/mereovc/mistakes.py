"""Mistake accounting and expert-supervised panel localization.

A mistake is a trial in which an agent's neighborhood misses the expert
value. The localization loop replays one trial round by round: agents
whose neighborhood misses the expert are dismissed, surviving radii are
shrunk by a learning rate, and the loop stops when nobody survives or
every surviving radius has fallen under a tolerance. The answer is the
fore-last survivor set: the last one seen non-empty, together with the
neighborhoods it was checked at.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Callable, Mapping, NamedTuple, Optional, Sequence

from .errors import DomainError
from .predict import PredictionConfig, TrialResult
from .tables import DecisionSystem, ObjectId


@dataclass(frozen=True)
class MistakeLedger:
    """Reward misses per agent and per trial across a session."""

    per_object_mistakes: Mapping[ObjectId, int]
    per_trial: tuple[int, ...]
    total: int
    covered: tuple[bool, ...]
    mistake_free_objects: frozenset[ObjectId]


def count_mistakes(trials: Sequence[TrialResult]) -> MistakeLedger:
    """Tally reward misses over scored trials.

    covered[i] says whether trial i rewarded anyone; the mistake-free set
    collects agents that never missed in any trial they took part in.
    """
    if not trials:
        raise DomainError("mistake counting needs at least one trial")
    per_object: dict[ObjectId, int] = {}
    per_trial = []
    covered = []
    for trial in trials:
        if not trial.scored:
            raise DomainError("mistake counting needs scored trials")
        misses = 0
        for f in trial.forecasts:
            per_object.setdefault(f.object, 0)
            if f.reward == 0:
                per_object[f.object] += 1
                misses += 1
        per_trial.append(misses)
        covered.append(misses < len(trial.forecasts))
    mistake_free = frozenset(o for o, n in per_object.items() if n == 0)
    return MistakeLedger(
        per_object_mistakes=dict(sorted(per_object.items())),
        per_trial=tuple(per_trial),
        total=sum(per_trial),
        covered=tuple(covered),
        mistake_free_objects=mistake_free,
    )


@dataclass(frozen=True)
class LocalizationState:
    """One round's outcome: who survived, checked at which neighborhoods."""

    round: int
    survivors: frozenset[ObjectId]
    radii: Mapping[ObjectId, float]
    centers: Mapping[ObjectId, float]


class LocalizationResult(NamedTuple):
    history: list[LocalizationState]
    localization: frozenset[ObjectId]
    interval: tuple[float, float]


CenterPolicy = Callable[[ObjectId, float, float, random.Random], float]


def round_bound(max_radius: float, eta: float, tolerance: float) -> int:
    """Rounds until every radius sinks under tolerance by pure shrinking."""
    if max_radius < tolerance:
        return 0
    return max(0, math.ceil(math.log(tolerance / max_radius) / math.log(eta)))


def localize(
    system: Optional[DecisionSystem],
    trial: TrialResult,
    expert: float,
    config: PredictionConfig = PredictionConfig(),
    center_policy: Optional[CenterPolicy] = None,
) -> LocalizationResult:
    """Shrink-and-dismiss localization of the expert value.

    Survivor sets only ever lose members, so the history is a descending
    chain. The returned interval is the hull of the fore-last survivors'
    neighborhoods; it contains the expert value whenever the fore-last
    check itself passed.

    A center policy may move surviving centers after each shrink; the
    default keeps every center at the agent's forecast. The system
    argument is only used to cross-check agent ids and may be None for
    hand-built trials.
    """
    if not trial.forecasts:
        raise DomainError("localization needs at least one agent")
    if system is not None:
        stray = {f.object for f in trial.forecasts} - set(system.objects)
        if stray:
            raise DomainError(f"trial agents {sorted(stray, key=repr)} are not in the system")
    survivors = frozenset(f.object for f in trial.forecasts)
    radii = {f.object: float(f.radius) for f in trial.forecasts}
    centers = {f.object: float(f.forecast) for f in trial.forecasts}
    rng = random.Random(f"{config.rng_seed}:localize:{trial.trial_index}")
    fore_last = (survivors, dict(radii), dict(centers))
    history: list[LocalizationState] = []
    round_no = 0
    while True:
        keep = frozenset(
            o for o in survivors if abs(expert - centers[o]) <= radii[o]
        )
        history.append(
            LocalizationState(
                round=round_no,
                survivors=keep,
                radii={o: radii[o] for o in keep},
                centers={o: centers[o] for o in keep},
            )
        )
        if not keep:
            break
        fore_last = (keep, {o: radii[o] for o in keep}, {o: centers[o] for o in keep})
        survivors = keep
        radii = {o: radii[o] * config.eta for o in keep}
        if center_policy is not None:
            centers = {
                o: center_policy(o, centers[o], radii[o], rng) for o in keep
            }
        else:
            centers = {o: centers[o] for o in keep}
        if all(r < config.radius_tolerance for r in radii.values()):
            break
        round_no += 1
    last_set, last_radii, last_centers = fore_last
    lo = min(last_centers[o] - last_radii[o] for o in last_set)
    hi = max(last_centers[o] + last_radii[o] for o in last_set)
    return LocalizationResult(history, last_set, (lo, hi))
