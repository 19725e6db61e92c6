import pytest

from spvote.montecarlo import ExperimentConfig, run_experiment

ACCEPTANCE_SEED = 20260809


@pytest.fixture(scope="session")
def sim():
    """Memoized campaign runner shared by the acceptance tests."""
    cache = {}

    def get(model, m, k, trials=20_000, voters=1001, seed=ACCEPTANCE_SEED):
        key = (model, m, k, trials, voters, seed)
        if key not in cache:
            cfg = ExperimentConfig(
                m=m, k=k, trials=trials, model=model, seed=seed, voters=voters
            )
            cache[key] = run_experiment(cfg)
        return cache[key]

    return get
