"""Shared test configuration.

Property tests run a fixed, derandomized profile so that suite results
are reproducible and the per-property case count stays at or above one
thousand without tripping hypothesis' generic health checks on the
heavier group-valued strategies.
"""

from hypothesis import HealthCheck, settings

settings.register_profile(
    "bulk",
    max_examples=1000,
    deadline=None,
    derandomize=True,
    suppress_health_check=[
        HealthCheck.too_slow,
        HealthCheck.filter_too_much,
        HealthCheck.data_too_large,
        HealthCheck.large_base_example,
    ],
)
settings.load_profile("bulk")
