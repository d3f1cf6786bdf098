"""Bundled curve fixtures: the three worked examples with their twist
parameters, rational points, duplication-map images, ELS columns, and
x-coordinate sets, copied verbatim from the source tables."""

from importlib import resources

LABELS = ("6982.a.13964.1", "6443.a.6443.1", "141991.b.141991.1")


def fixture_text(label):
    """The JSON text of a bundled fixture, by label."""
    if label not in LABELS:
        raise KeyError(f"no bundled fixture with label {label!r}")
    name = f"curve_{label.split('.')[0]}.json"
    return resources.files(__package__).joinpath(name).read_text()
