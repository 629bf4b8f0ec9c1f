import hypothesis
import pytest

hypothesis.settings.register_profile(
    "default",
    deadline=None,
    max_examples=50,
    derandomize=True,
)
hypothesis.settings.load_profile("default")


@pytest.fixture(scope="session")
def reference_setup():
    """The solution-accuracy reference point: 7 cm amplitude at pi rad/s
    under a 42 cm mass height."""
    import math
    from drslip import ModelParams, VerticalSinusoid

    return ModelParams(z0=0.42), VerticalSinusoid(amplitude=0.07, omega=math.pi)
